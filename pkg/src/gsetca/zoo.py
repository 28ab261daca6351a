"""Ready-made construction triples.

Square cells are indexed by their lower-left corner, so the square with
center (1/2, 1/2) is (0, 0), the one with center (1/2, 3/2) is (0, 1), and
so on.
"""

from __future__ import annotations

from .automaton import BINARY, ConstructionTriple, LocalRule, StateSet
from .coordsys import conjugate_system, preset, verify_on_patch
from .group import Universe, translation

SQ = Universe.SQUARE_TESSELLATION

MOORE = tuple((dx, dy) for dy in (-1, 0, 1) for dx in (-1, 0, 1))
MARGOLUS_BLOCK = ((0, 0), (1, 0), (1, 1), (0, 1))


def _game_of_life(states):
    return ConstructionTriple(
        LocalRule.life_sum(MOORE, (0, 0)), preset("translations-only", SQ), states
    )


def _shift(preset_name, read, universe=SQ):
    def build(states):
        return ConstructionTriple(
            LocalRule.projection([read], read), preset(preset_name, universe), states
        )

    return build


def _margolus_tau0(states):
    return ConstructionTriple(
        LocalRule.margolus(MARGOLUS_BLOCK), preset("margolus-blocks", SQ), states
    )


def _margolus_tau1(states):
    t0 = translation((1, 1))
    memory = [(x + 1, y + 1) for x, y in MARGOLUS_BLOCK]
    cs = conjugate_system(preset("margolus-blocks", SQ), t0)
    return ConstructionTriple(LocalRule.margolus(memory), cs, states)


def _identity(states):
    return ConstructionTriple(
        LocalRule.projection([(0, 0)], (0, 0)), preset("translations-only", SQ), states
    )


_BUILDERS = {
    "game-of-life": _game_of_life,
    "fairy-lights": _shift("fairy-lights", (0, 1), Universe.POINT_LATTICE),
    "state-shift-c": _shift("quadrant-rotation-corner", (0, 1)),
    "state-shift-d": _shift("quadrant-rotation-center", (0, 1)),
    "state-shift-44": _shift("wedge-rotation-44", (0, 1)),
    "state-shift-44-inverse": _shift("wedge-rotation-44-inverse", (1, 0)),
    "margolus-tau0": _margolus_tau0,
    "margolus-tau1": _margolus_tau1,
    "identity": _identity,
}

# rules that only make sense for live/dead states
_BINARY_ONLY = {"game-of-life", "margolus-tau0", "margolus-tau1"}

BUILTINS = tuple(_BUILDERS)


def builtin(name: str, states: StateSet = BINARY, check_radius: int = 10) -> ConstructionTriple:
    """Build a named example automaton.

    The shift and identity automata accept any ``states``; the sum rules need
    ``{"0", "1"}``.
    """
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
    if name in _BINARY_ONLY and states != BINARY:
        raise ValueError(f"{name} is defined on states ('0', '1') with '0' quiescent")
    tr = build(states)
    tr.name = name
    if check_radius:
        report = verify_on_patch(tr.coordsys, check_radius)
        assert report, f"{name}: {report.detail}"
    return tr


def padded_game_of_life(pad=(5, 5)) -> ConstructionTriple:
    """Game of Life with an extra memory cell the rule never reads."""
    gol = LocalRule.life_sum(MOORE, (0, 0))
    i = len(MOORE)
    rule = LocalRule.from_function(MOORE + (tuple(pad),), lambda p: gol(p[:i]), BINARY)
    tr = ConstructionTriple(rule, preset("translations-only", SQ), BINARY)
    tr.name = "game-of-life-padded"
    return tr
