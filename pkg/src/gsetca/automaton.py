"""Configurations, local rules, construction triples and the global map.

A configuration is stored sparsely: a default (quiescent) state plus the
finitely many cells that differ from it.  A construction triple
(memory, rule, coordinate system) defines the global map

    tau(x)(alpha) = rule(x at t·beta for beta in memory)

where t is the coordinate of alpha.  Because the rule sends the
all-quiescent pattern to the quiescent state, tau(x) again has finite
support and can be computed exactly.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .coordsys import CoordinateSystem
from .errors import QuiescenceError, TooLarge, UnknownSymbol
from .group import Cell, Isometry, Universe, act, center_dist2

TABLE_LIMIT = 2**16
READ_CACHE_SIZE = 1 << 18

Pattern = tuple  # one state symbol per memory cell, in memory order


@dataclass(frozen=True)
class StateSet:
    symbols: tuple[str, ...]
    quiescent: str

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("state set must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate state symbols in {self.symbols}")
        if self.quiescent not in self.symbols:
            raise ValueError(f"quiescent state {self.quiescent!r} not in {self.symbols}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, s) -> bool:
        return s in self.symbols

    def index(self, s: str) -> int:
        return self.symbols.index(s)


BINARY = StateSet(("0", "1"), "0")


def life_value(total: int, center_alive: bool) -> bool:
    """The sum rule of the Game of Life; ``total`` includes the center cell."""
    return total == 3 or (total == 4 and center_alive)


class LocalRule:
    """A map from state tuples over the memory cells to a state.

    Build one with the constructors: ``table``, ``life_sum``, ``projection``,
    ``margolus``, ``constant`` or ``from_function``.
    """

    def __init__(self, memory: Sequence[Cell], kind: str, fn, params=None):
        memory = tuple((int(x), int(y)) for x, y in memory)
        if len(set(memory)) != len(memory):
            raise ValueError(f"memory cells are not distinct: {memory}")
        self.memory: tuple[Cell, ...] = memory
        self.kind = kind
        self.params = dict(params or {})
        self._fn = fn

    def __call__(self, pattern: Pattern) -> str:
        return self._fn(pattern)

    def __repr__(self) -> str:
        return f"LocalRule({self.kind}, memory={list(self.memory)})"

    @classmethod
    def table(cls, memory, entries: Mapping[tuple, str]) -> "LocalRule":
        entries = {tuple(k): v for k, v in entries.items()}
        for k in entries:
            if len(k) != len(memory):
                raise ValueError(f"table key {k} does not match memory of size {len(memory)}")
        return cls(memory, "table", entries.__getitem__, {"entries": entries})

    @classmethod
    def from_function(cls, memory, fn: Callable[[Pattern], str], states: StateSet):
        """Tabulate ``fn`` over all of Q^memory."""
        check_table_size(len(states), len(memory))
        entries = {p: fn(p) for p in itertools.product(states.symbols, repeat=len(memory))}
        return cls.table(memory, entries)

    @classmethod
    def life_sum(cls, memory, center: Cell, live: str = "1", dead: str = "0"):
        memory = tuple(tuple(c) for c in memory)
        i = memory.index(tuple(center))

        def fn(p):
            return live if life_value(p.count(live), p[i] == live) else dead

        return cls(memory, "life-sum", fn, {"center": tuple(center)})

    @classmethod
    def projection(cls, memory, cell: Cell):
        memory = tuple(tuple(c) for c in memory)
        i = memory.index(tuple(cell))
        return cls(memory, "projection", lambda p: p[i], {"cell": tuple(cell)})

    @classmethod
    def margolus(cls, memory, live: str = "1"):
        """Block rule on memory ordered (a, r·a, r²·a, r³·a) for the block's quarter turn r."""
        if len(memory) != 4:
            raise ValueError("the margolus rule needs exactly 4 memory cells")

        def fn(p):
            total = p.count(live)
            if total == 1:
                return p[2]
            if total == 2 and p[1] == p[3]:
                return p[1]
            return p[0]

        return cls(memory, "margolus", fn)

    @classmethod
    def constant(cls, memory, value: str):
        return cls(memory, "constant", lambda p: value, {"value": value})

    def entries(self, states: StateSet) -> dict[tuple, str]:
        """Explicit table over Q^memory."""
        check_table_size(len(states), len(self.memory))
        return {
            p: self._fn(p) for p in itertools.product(states.symbols, repeat=len(self.memory))
        }


def check_table_size(n_states: int, n_cells: int) -> None:
    if n_states**n_cells > TABLE_LIMIT:
        raise TooLarge(f"|Q|^|M| = {n_states}^{n_cells} exceeds {TABLE_LIMIT}")


def local_eval(rule: LocalRule, pattern: Sequence[str], states: Optional[StateSet] = None) -> str:
    pattern = tuple(pattern)
    if len(pattern) != len(rule.memory):
        raise ValueError(f"pattern length {len(pattern)} != memory size {len(rule.memory)}")
    if states is not None:
        for s in pattern:
            if s not in states:
                raise UnknownSymbol(f"state {s!r} not in {states.symbols}")
    return rule(pattern)


@dataclass(frozen=True, eq=False)
class Configuration:
    """A finite-support configuration: ``default`` everywhere except ``cells``."""

    default: str
    cells: Mapping[Cell, str] = field(default_factory=dict)

    def __post_init__(self):
        canon = {
            (int(c[0]), int(c[1])): s for c, s in dict(self.cells).items() if s != self.default
        }
        object.__setattr__(self, "cells", canon)

    def __getitem__(self, c: Cell) -> str:
        return self.cells.get(c, self.default)

    @property
    def support(self) -> frozenset:
        return frozenset(self.cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.default == other.default and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.default, frozenset(self.cells.items())))

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        items = ", ".join(f"{c}: {s!r}" for c, s in sorted(self.cells.items()))
        return f"Configuration({self.default!r}, {{{items}}})"

    @classmethod
    def of(cls, default: str, live: Iterable[Cell], state: str = "1") -> "Configuration":
        return cls(default, {c: state for c in live})

    def bounding_box(self) -> Optional["Window"]:
        if not self.cells:
            return None
        xs = [c[0] for c in self.cells]
        ys = [c[1] for c in self.cells]
        return Window((min(xs), min(ys)), (max(xs), max(ys)))


@dataclass(frozen=True)
class Window:
    """Inclusive axis-aligned rectangle of cells."""

    lo: Cell
    hi: Cell

    def __post_init__(self):
        lo = (min(self.lo[0], self.hi[0]), min(self.lo[1], self.hi[1]))
        hi = (max(self.lo[0], self.hi[0]), max(self.lo[1], self.hi[1]))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __contains__(self, c) -> bool:
        return self.lo[0] <= c[0] <= self.hi[0] and self.lo[1] <= c[1] <= self.hi[1]

    def __iter__(self) -> Iterator[Cell]:
        for y in range(self.lo[1], self.hi[1] + 1):
            for x in range(self.lo[0], self.hi[0] + 1):
                yield (x, y)

    @property
    def width(self) -> int:
        return self.hi[0] - self.lo[0] + 1

    @property
    def height(self) -> int:
        return self.hi[1] - self.lo[1] + 1


def act_on_config(g: Isometry, x: Configuration, universe: Universe) -> Configuration:
    """(g x)(alpha) = x(g^-1 alpha): the support moves cell-wise by g."""
    return Configuration(x.default, {act(g, c, universe): s for c, s in x.cells.items()})


class ConstructionTriple:
    """A memory set with its local rule, a coordinate system and a state set."""

    def __init__(
        self,
        rule: LocalRule,
        coordsys: CoordinateSystem,
        states: StateSet = BINARY,
        name: Optional[str] = None,
    ):
        self.rule = rule
        self.coordsys = coordsys
        self.states = states
        self.name = name
        self._read_cache: dict[Cell, tuple[Cell, ...]] = {}
        q = states.quiescent
        image = rule(tuple(q for _ in rule.memory))
        if image != q:
            raise QuiescenceError(
                f"rule maps the all-{q!r} pattern to {image!r}; a quiescent rule is required"
            )

    @property
    def universe(self) -> Universe:
        return self.coordsys.universe

    @property
    def memory(self) -> tuple[Cell, ...]:
        return self.rule.memory

    @property
    def origin(self) -> Cell:
        return self.coordsys.origin

    def __repr__(self) -> str:
        label = self.name or self.rule.kind
        return f"<ConstructionTriple {label} |M|={len(self.memory)} origin={self.origin}>"

    @cached_property
    def radius2(self) -> int:
        """Squared reach: max center distance from the origin to a memory cell."""
        return max((center_dist2(self.origin, b) for b in self.memory), default=0)

    @cached_property
    def _offsets(self) -> tuple[Cell, ...]:
        r2 = self.radius2
        r = math.isqrt(r2)
        return tuple(
            (dx, dy)
            for dx in range(-r, r + 1)
            for dy in range(-r, r + 1)
            if dx * dx + dy * dy <= r2
        )

    def read_cells(self, alpha: Cell) -> tuple[Cell, ...]:
        """The cells t·beta (beta in memory) that determine tau(x)(alpha)."""
        cache = self._read_cache
        cells = cache.get(alpha)
        if cells is None:
            t = self.coordsys.representative(alpha)
            u = self.universe
            cells = tuple(act(t, b, u) for b in self.memory)
            if len(cache) >= READ_CACHE_SIZE:
                cache.clear()
            cache[alpha] = cells
        return cells

    def value_at(self, x: Configuration, alpha: Cell) -> str:
        return self.rule(tuple(x[c] for c in self.read_cells(alpha)))

    def candidates(self, support: Iterable[Cell]) -> set[Cell]:
        """Every cell whose image can differ from quiescent given this support."""
        out = set()
        offs = self._offsets
        for sx, sy in support:
            out.update((sx + dx, sy + dy) for dx, dy in offs)
        return out

    def __call__(self, x: Configuration) -> Configuration:
        return step(self, x)


def step(tr: ConstructionTriple, x: Configuration) -> Configuration:
    if x.default != tr.states.quiescent:
        raise ValueError(
            f"configuration default {x.default!r} is not the quiescent state "
            f"{tr.states.quiescent!r}; use step_window"
        )
    q = x.default
    out = {}
    for alpha in tr.candidates(x.cells):
        v = tr.value_at(x, alpha)
        if v != q:
            out[alpha] = v
    return Configuration(q, out)


def run(tr: ConstructionTriple, x: Configuration, n_steps: int) -> Configuration:
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    for _ in range(n_steps):
        x = step(tr, x)
    return x


@dataclass(frozen=True)
class WindowResult:
    region: frozenset
    values: Mapping[Cell, str]

    @property
    def empty(self) -> bool:
        return not self.region


def step_window(tr: ConstructionTriple, known: Window, x: Configuration) -> WindowResult:
    """Exact values of tau(x) on the cells whose whole read set lies in ``known``.

    ``x`` is trusted only inside ``known``; its default need not be quiescent.
    """
    region, values = set(), {}
    for alpha in known:
        cells = tr.read_cells(alpha)
        if all(c in known for c in cells):
            region.add(alpha)
            values[alpha] = tr.rule(tuple(x[c] for c in cells))
    return WindowResult(frozenset(region), values)


def random_configuration(
    states: StateSet,
    radius: int,
    rng: random.Random,
    max_support: Optional[int] = None,
) -> Configuration:
    """Uniform random states on the cells of the Euclidean ball |c| <= radius.

    With ``max_support`` only that many cells (chosen uniformly) are drawn,
    the rest stay quiescent.
    """
    ball = [
        (x, y)
        for x in range(-radius, radius + 1)
        for y in range(-radius, radius + 1)
        if x * x + y * y <= radius * radius
    ]
    if max_support is not None and max_support < len(ball):
        ball = rng.sample(ball, max_support)
    symbols = states.symbols
    return Configuration(states.quiescent, {c: rng.choice(symbols) for c in ball})


def random_configurations(
    states: StateSet, n: int, seed: int, radius: int = 6, max_support: Optional[int] = None
) -> list[Configuration]:
    rng = random.Random(seed)
    return [random_configuration(states, radius, rng, max_support) for _ in range(n)]
