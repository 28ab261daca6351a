"""Executable versions of the structural results about construction triples.

Everything here is exhaustive over a finite pattern space or a finite patch
of cells; randomized checks take an explicit seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .automaton import (
    Configuration,
    ConstructionTriple,
    LocalRule,
    act_on_config,
    check_table_size,
    random_configuration,
    step,
)
from .coordsys import coordinate
from .errors import IncompatibleStateSets, NotAStabilizer
from .group import (
    Cell,
    Isometry,
    act,
    chebyshev_ball,
    compose,
    format_isometry,
    inverse,
)


def _fmt_cell(c: Cell) -> str:
    return f"{c[0]},{c[1]}"


# --- minimal memory ------------------------------------------------------------


def useful_cells(tr: ConstructionTriple) -> tuple[Cell, ...]:
    """Memory cells whose state can change the rule's output, in memory order."""
    symbols = tr.states.symbols
    n = len(tr.memory)
    check_table_size(len(symbols), n)
    rule = tr.rule
    table = {p: rule(p) for p in itertools.product(symbols, repeat=n)}
    useful = []
    for i, beta in enumerate(tr.memory):
        if _depends_on(table, symbols, i):
            useful.append(beta)
    return tuple(useful)


def _depends_on(table, symbols, i) -> bool:
    for p, v in table.items():
        if p[i] != symbols[0]:
            continue
        for s in symbols[1:]:
            if table[p[:i] + (s,) + p[i + 1 :]] != v:
                return True
    return False


def minimize(tr: ConstructionTriple) -> ConstructionTriple:
    """Restrict the triple to its useful cells.

    Useless cells never affect the rule, so they are filled with the
    quiescent state when tabulating the restricted rule.
    """
    keep = useful_cells(tr)
    if keep == tr.memory:
        return tr
    q = tr.states.quiescent
    where = {b: i for i, b in enumerate(keep)}
    memory = tr.memory
    rule = tr.rule

    def restricted(p):
        return rule(tuple(p[where[b]] if b in where else q for b in memory))

    new_rule = LocalRule.from_function(keep, restricted, tr.states)
    out = ConstructionTriple(new_rule, tr.coordsys, tr.states)
    out.name = f"{tr.name}-minimized" if tr.name else None
    return out


# --- invariance and equivariance -------------------------------------------------


@dataclass(frozen=True)
class InvarianceReport:
    element: Isometry
    holds: bool
    # pattern on M ∪ s^-1·M, as cell -> state
    counterexample: Optional[dict] = None
    values: Optional[tuple[str, str]] = None

    def to_text(self) -> str:
        head = f"{format_isometry(self.element)} {'holds' if self.holds else 'FAILS'}"
        if self.holds:
            return head
        cells = " ".join(f"{_fmt_cell(c)}={s}" for c, s in sorted(self.counterexample.items()))
        return f"{head}\n  pattern {cells}\n  rule(x|M)={self.values[0]} rule((s x)|M)={self.values[1]}"


def _pattern_values(tr: ConstructionTriple, s: Isometry, pattern: dict) -> tuple[str, str]:
    """(rule(x|M), rule((s·x)|M)) for x given on M ∪ s^-1·M."""
    u, q = tr.universe, tr.states.quiescent
    s_inv = inverse(s)
    plain = tuple(pattern.get(b, q) for b in tr.memory)
    moved = tuple(pattern.get(act(s_inv, b, u), q) for b in tr.memory)
    return tr.rule(plain), tr.rule(moved)


def replay_invariance(tr: ConstructionTriple, report: InvarianceReport) -> tuple[str, str]:
    return _pattern_values(tr, report.element, report.counterexample)


def invariance_check(
    tr: ConstructionTriple, elements: Iterable[Isometry]
) -> list[InvarianceReport]:
    """Is the rule invariant under each stabilizer element s?

    Exhaustive over every pattern on M ∪ s^-1·M.  When every element of a
    generating set holds, the rule is invariant under the subgroup they
    generate.
    """
    u = tr.universe
    symbols = tr.states.symbols
    reports = []
    for s in elements:
        if act(s, tr.origin, u) != tr.origin:
            raise NotAStabilizer(f"{format_isometry(s)} moves the origin {tr.origin}")
        s_inv = inverse(s)
        omega = list(dict.fromkeys(list(tr.memory) + [act(s_inv, b, u) for b in tr.memory]))
        check_table_size(len(symbols), len(omega))
        report = InvarianceReport(s, True)
        for values in itertools.product(symbols, repeat=len(omega)):
            pattern = dict(zip(omega, values))
            a, b = _pattern_values(tr, s, pattern)
            if a != b:
                report = InvarianceReport(s, False, pattern, (a, b))
                break
        reports.append(report)
    return reports


def s_set(tr: ConstructionTriple, radius: int) -> set[Isometry]:
    """Elements u^-1 t^-1 t' of the obstruction set witnessed by cells within ``radius``.

    t, t' range over the coordinates of cells in the Chebyshev ball around the
    origin, and u is the coordinate of t^-1 t'·origin, so every element
    fixes the origin.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    cs, u = tr.coordsys, tr.universe
    coords = [coordinate(cs, c) for c in chebyshev_ball(radius, cs.origin)]
    out = set()
    for t in coords:
        t_inv = inverse(t)
        for t2 in coords:
            h = compose(t_inv, t2)
            w = coordinate(cs, act(h, cs.origin, u))
            s = compose(inverse(w), h)
            assert act(s, cs.origin, u) == cs.origin
            out.add(s)
    return out


def _is_state_shift(tr: ConstructionTriple) -> bool:
    return len(tr.memory) == 1 and tr.rule.kind == "projection"


@dataclass(frozen=True)
class EquivarianceReport:
    radius: int
    elements_checked: int
    violation: Optional[InvarianceReport] = None
    # only state-shift rules admit the stronger conclusion about the map itself
    automaton_not_equivariant: bool = False

    @property
    def obstruction(self) -> bool:
        return self.violation is not None

    def to_text(self) -> str:
        if self.violation is None:
            return (
                f"NO-OBSTRUCTION radius={self.radius} elements={self.elements_checked}"
            )
        lines = [f"VIOLATION radius={self.radius} elements={self.elements_checked}"]
        lines.append("this triple's rule is not invariant under the obstruction set")
        if self.automaton_not_equivariant:
            lines.append("state-shift rule: the automaton is not equivariant")
        lines.append(self.violation.to_text())
        return "\n".join(lines)


def equivariance_check(tr: ConstructionTriple, radius: int) -> EquivarianceReport:
    elements = sorted(s_set(tr, radius), key=format_isometry)
    reports = invariance_check(tr, elements)
    for r in reports:
        if not r.holds:
            return EquivarianceReport(radius, len(elements), r, _is_state_shift(tr))
    return EquivarianceReport(radius, len(elements))


def commutes_with(
    tr: ConstructionTriple, g: Isometry, configs: Sequence[Configuration]
) -> bool:
    """step(g x) == g step(x) on every sample configuration."""
    u = tr.universe
    return all(step(tr, act_on_config(g, x, u)) == act_on_config(g, step(tr, x), u) for x in configs)


# --- composition -------------------------------------------------------------------


def compose_triples(t1: ConstructionTriple, t2: ConstructionTriple) -> ConstructionTriple:
    """Candidate triple for t1∘t2 (apply t2 first), in t1's coordinate system.

    Memory cells t_b·c (b in M1 with coordinate t_b in t2's system, c in M2)
    are deduplicated; each physical cell is read once.
    """
    if t1.states != t2.states:
        raise IncompatibleStateSets(f"{t1.states} vs {t2.states}")
    if t1.universe is not t2.universe:
        raise IncompatibleStateSets(f"universes differ: {t1.universe} vs {t2.universe}")
    u = t1.universe
    frames = [coordinate(t2.coordsys, b) for b in t1.memory]
    reads = [tuple(act(t, c, u) for c in t2.memory) for t in frames]
    memory = tuple(dict.fromkeys(c for row in reads for c in row))
    check_table_size(len(t1.states), len(memory))
    index = {c: i for i, c in enumerate(memory)}
    reads_idx = [tuple(index[c] for c in row) for row in reads]
    mu1, mu2 = t1.rule, t2.rule

    memo: dict[tuple, str] = {}

    def fn(y):
        v = memo.get(y)
        if v is None:
            v = memo[y] = mu1(tuple(mu2(tuple(y[i] for i in row)) for row in reads_idx))
        return v

    rule = LocalRule(memory, "composite", fn)
    out = ConstructionTriple(rule, t1.coordsys, t1.states)
    if t1.name and t2.name:
        out.name = f"{t1.name}∘{t2.name}"
    return out


def _rng_configs(tr: ConstructionTriple, trials: int, seed: int, radius: int):
    rng = random.Random(seed)
    for _ in range(trials):
        yield random_configuration(tr.states, radius, rng)


def _first_difference(a: Configuration, b: Configuration) -> Cell:
    diff = [c for c in set(a.cells) | set(b.cells) if a[c] != b[c]]
    return min(diff)


@dataclass(frozen=True)
class CompositionReport:
    consistent: bool
    trials: int
    configuration: Optional[Configuration] = None
    cell: Optional[Cell] = None
    composite_value: Optional[str] = None
    composed_value: Optional[str] = None

    def __bool__(self) -> bool:
        return self.consistent

    def to_text(self) -> str:
        if self.consistent:
            return f"CONSISTENT trials={self.trials}"
        live = " ".join(
            f"{_fmt_cell(c)}={s}" for c, s in sorted(self.configuration.cells.items())
        )
        return (
            f"COUNTEREXAMPLE trials={self.trials}\n"
            f"  cell {_fmt_cell(self.cell)}\n"
            f"  composite={self.composite_value} composed={self.composed_value}\n"
            f"  config {live}"
        )


def verify_composition(
    t1: ConstructionTriple,
    t2: ConstructionTriple,
    composed: ConstructionTriple,
    trials: int = 100,
    seed: int = 0,
    radius: int = 6,
) -> CompositionReport:
    """Compare t1(t2(x)) with composed(x) on seeded random configurations."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for n, x in enumerate(_rng_configs(t1, trials, seed, radius), 1):
        a = step(t1, step(t2, x))
        b = step(composed, x)
        if a != b:
            c = _first_difference(a, b)
            return CompositionReport(False, n, x, c, a[c], b[c])
    return CompositionReport(True, trials)


@dataclass(frozen=True)
class InverseReport:
    confirmed: bool
    trials: int
    configuration: Optional[Configuration] = None
    order: str = ""  # "A∘B" or "B∘A" for the failing composite
    cell: Optional[Cell] = None

    def __bool__(self) -> bool:
        return self.confirmed

    def to_text(self) -> str:
        if self.confirmed:
            return f"INVERSE-CONFIRMED trials={self.trials}"
        live = " ".join(
            f"{_fmt_cell(c)}={s}" for c, s in sorted(self.configuration.cells.items())
        )
        return (
            f"NOT-INVERSE trials={self.trials}\n"
            f"  {self.order} changes cell {_fmt_cell(self.cell)}\n"
            f"  config {live}"
        )


def verify_inverse(
    ta: ConstructionTriple,
    tb: ConstructionTriple,
    trials: int = 100,
    seed: int = 0,
    radius: int = 6,
) -> InverseReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for n, x in enumerate(_rng_configs(ta, trials, seed, radius), 1):
        for order, y in (("A∘B", step(ta, step(tb, x))), ("B∘A", step(tb, step(ta, x)))):
            if y != x:
                return InverseReport(False, n, x, order, _first_difference(x, y))
    return InverseReport(True, trials)
