"""Coordinate systems: an origin cell plus one representative isometry per cell.

A coordinate system (origin, T) picks, for every cell c, the unique t in T
with t·origin = c.  The sets T are infinite, so each preset here is a closed
form for the lookup c -> t; ``verify_on_patch`` is the check that the closed
form really behaves like a transversal on a finite patch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import MembershipError, CoverageError
from .group import (
    IDENTITY,
    Cell,
    Isometry,
    PointPart,
    Universe,
    act,
    chebyshev_ball,
    compose,
    inverse,
    power,
    translation,
)

Representative = Callable[[Cell], Isometry]


@dataclass(frozen=True)
class CoordinateSystem:
    origin: Cell
    universe: Universe
    representative: Representative = field(compare=False, repr=False)
    name: Optional[str] = None
    # translation applied to the preset by conjugation; None for derived systems
    offset: Optional[Cell] = (0, 0)

    def __call__(self, c: Cell) -> Isometry:
        return self.representative(c)

    @property
    def serializable(self) -> bool:
        return self.name is not None and self.offset is not None


def coordinate(cs: CoordinateSystem, c: Cell) -> Isometry:
    return cs.representative(c)


def change_origin(cs: CoordinateSystem, g: Isometry) -> CoordinateSystem:
    """Move the origin to g·origin, keeping the coordinate set as T g^-1.

    ``g`` must itself be one of the representatives.
    """
    if cs.representative(act(g, cs.origin, cs.universe)) != g:
        raise MembershipError(f"{g} is not a representative of {cs.name or 'system'}")
    if g == IDENTITY:
        return cs
    g_inv = inverse(g)
    rep = cs.representative

    def representative(c: Cell) -> Isometry:
        return compose(rep(c), g_inv)

    return CoordinateSystem(
        act(g, cs.origin, cs.universe), cs.universe, representative, cs.name, None
    )


def conjugate_system(cs: CoordinateSystem, g: Isometry) -> CoordinateSystem:
    """The system (g·origin, g T g^-1); valid for any g."""
    if g == IDENTITY:
        return cs
    g_inv = inverse(g)
    rep, u = cs.representative, cs.universe

    def representative(c: Cell) -> Isometry:
        return compose(g, compose(rep(act(g_inv, c, u)), g_inv))

    offset = None
    if cs.offset is not None and g.is_translation():
        offset = (cs.offset[0] + g.translation[0], cs.offset[1] + g.translation[1])
    return CoordinateSystem(act(g, cs.origin, u), u, representative, cs.name, offset)


def decompose(h: Isometry, cs: CoordinateSystem) -> tuple[Isometry, Isometry]:
    """Split h = t∘s with t a representative and s fixing the origin."""
    t = cs.representative(act(h, cs.origin, cs.universe))
    return t, compose(inverse(t), h)


@dataclass(frozen=True)
class PatchReport:
    ok: bool
    radius: int
    cells_checked: int
    violation: Optional[Cell] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_on_patch(cs: CoordinateSystem, radius: int) -> PatchReport:
    """Check the transversal axioms on every cell within Chebyshev ``radius`` of the origin.

    Global completeness of an infinite T cannot be certified this way; the
    report only speaks for the patch.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    try:
        t0 = cs.representative(cs.origin)
    except CoverageError as exc:
        return PatchReport(False, radius, 0, cs.origin, str(exc))
    if t0 != IDENTITY:
        return PatchReport(False, radius, 1, cs.origin, f"coordinate of origin is {t0}")
    seen: dict[Isometry, Cell] = {}
    n = 0
    for c in chebyshev_ball(radius, cs.origin):
        n += 1
        try:
            t = cs.representative(c)
        except CoverageError as exc:
            return PatchReport(False, radius, n, c, str(exc))
        image = act(t, cs.origin, cs.universe)
        if image != c:
            return PatchReport(False, radius, n, c, f"{t} sends origin to {image}")
        if t in seen:
            return PatchReport(False, radius, n, c, f"{t} also represents {seen[t]}")
        seen[t] = c
    return PatchReport(True, radius, n)


# --- presets -----------------------------------------------------------------

_R90 = Isometry(PointPart.R90, (0, 0))


def _translations_only(c: Cell) -> Isometry:
    return translation(c)


def _fairy_lights(c: Cell) -> Isometry:
    if (c[0] + c[1]) % 2 == 0:
        return translation(c)
    # (-Id)∘t_{-c}
    return Isometry(PointPart.R180, c)


def _quadrant_rotation_corner(c: Cell) -> Isometry:
    x, y = c
    if x >= 0 and y >= 0:
        k, a = 0, (x, y)
    elif x < 0 and y >= 0:
        k, a = 1, (y, -x - 1)
    elif x < 0:
        k, a = 2, (-x - 1, -y - 1)
    else:
        k, a = 3, (-y - 1, x)
    return compose(power(_R90, k), translation(a))


_R90_CENTER = Isometry(PointPart.R90, (1, 0))  # about (1/2, 1/2)


def _quadrant_rotation_center(c: Cell) -> Isometry:
    x, y = c
    if c == (0, 0):
        return IDENTITY
    if x >= 1 and y >= 0:
        k, a = 0, (x, y)
    elif x <= 0 and y >= 1:
        k, a = 1, (y, -x)
    elif x <= -1 and y <= 0:
        k, a = 2, (-x, -y)
    else:
        k, a = 3, (-y, x)
    return compose(power(_R90_CENTER, k), translation(a))


_R90_BLOCK = Isometry(PointPart.R90, (2, 0))  # about (1, 1)
_BLOCK_TURNS = {(0, 0): 0, (1, 0): 1, (1, 1): 2, (0, 1): 3}


def _margolus_blocks(c: Cell) -> Isometry:
    corner = (c[0] - c[0] % 2, c[1] - c[1] % 2)
    k = _BLOCK_TURNS[(c[0] % 2, c[1] % 2)]
    return compose(translation(corner), power(_R90_BLOCK, k))


def _wedge_system(
    in_wedge: Callable[[int, int], bool], label: str, tie_to_later: bool
) -> Representative:
    """T = W ∪ rW ∪ r²W ∪ r³W for a wedge W of translations and r the quarter
    turn about (0, 0).

    As cell sets, consecutive pieces r^k W and r^(k+1) W share a two-cell-thick
    diagonal.  Such a cell goes to r^k W, or to r^(k+1) W when
    ``tie_to_later``; both rules commute with r.
    """
    turns = [power(_R90, k) for k in range(4)]
    back = [power(_R90, -k) for k in range(4)]
    sq = Universe.SQUARE_TESSELLATION

    def representative(c: Cell) -> Isometry:
        hits = [k for k in range(4) if in_wedge(*act(back[k], c, sq))]
        if not hits:
            raise CoverageError(f"{label}: no wedge contains {c}")
        if len(hits) == 1:
            k = hits[0]
        elif len(hits) == 2 and (hits[1] - hits[0]) % 4 in (1, 3):
            earlier = hits[1] if (hits[0] - hits[1]) % 4 == 1 else hits[0]
            k = (earlier + 1) % 4 if tie_to_later else earlier
        else:
            raise CoverageError(f"{label}: wedges {hits} all contain {c}")
        return compose(turns[k], translation(act(back[k], c, sq)))

    return representative


PRESETS: dict[str, tuple[Representative, tuple[Universe, ...]]] = {
    "translations-only": (
        _translations_only,
        (Universe.POINT_LATTICE, Universe.SQUARE_TESSELLATION),
    ),
    "fairy-lights": (_fairy_lights, (Universe.POINT_LATTICE,)),
    "quadrant-rotation-corner": (
        _quadrant_rotation_corner,
        (Universe.SQUARE_TESSELLATION,),
    ),
    "quadrant-rotation-center": (
        _quadrant_rotation_center,
        (Universe.SQUARE_TESSELLATION,),
    ),
    "margolus-blocks": (_margolus_blocks, (Universe.SQUARE_TESSELLATION,)),
    "wedge-rotation-44": (
        _wedge_system(lambda a, b: 0 <= a <= abs(b), "wedge-rotation-44", False),
        (Universe.SQUARE_TESSELLATION,),
    ),
    "wedge-rotation-44-inverse": (
        _wedge_system(lambda a, b: 0 <= b <= abs(a), "wedge-rotation-44-inverse", True),
        (Universe.SQUARE_TESSELLATION,),
    ),
}


def preset(
    name: str, universe: Optional[Universe] = None, origin: Cell = (0, 0)
) -> CoordinateSystem:
    """Load a named preset.

    Every preset is defined with origin (0, 0); another ``origin`` conjugates
    the whole system by the translation carrying (0, 0) there.
    """
    try:
        rep, universes = PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown coordinate system preset {name!r}") from None
    if universe is None:
        universe = universes[-1]
    if universe not in universes:
        raise ValueError(f"preset {name!r} is not defined on {universe.value}")
    cs = CoordinateSystem((0, 0), universe, rep, name, (0, 0))
    if origin != (0, 0):
        cs = conjugate_system(cs, translation(origin))
    return cs
