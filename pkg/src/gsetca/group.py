"""Exact isometries of the integer lattice and the unit-square tessellation.

The group is Z^2 x| D4: an isometry is a pair (A, v) acting on the plane by
x -> A x + v, with A one of the eight symmetries of the square and v an
integer vector.  Cells are integer pairs.  On the point lattice the cell *is*
the point; on the square tessellation the cell (a, b) names the unit square
with center (a + 1/2, b + 1/2).  Everything stays in integers: square centers
are handled as doubled coordinates.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Tuple

Cell = Tuple[int, int]


class Universe(enum.Enum):
    POINT_LATTICE = "point-lattice"
    SQUARE_TESSELLATION = "square-tessellation"

    @classmethod
    def parse(cls, text: str) -> "Universe":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown universe {text!r}")


# (a, b, c, d) is the matrix [[a, b], [c, d]]
_MATRICES = {
    "R0": (1, 0, 0, 1),
    "R90": (0, -1, 1, 0),
    "R180": (-1, 0, 0, -1),
    "R270": (0, 1, -1, 0),
    "MX": (1, 0, 0, -1),
    "MY": (-1, 0, 0, 1),
    "MD": (0, 1, 1, 0),
    "MA": (0, -1, -1, 0),
}


class PointPart(enum.Enum):
    """The dihedral group D4 as 2x2 integer orthogonal matrices."""

    R0 = "R0"
    R90 = "R90"
    R180 = "R180"
    R270 = "R270"
    MX = "MX"
    MY = "MY"
    MD = "MD"
    MA = "MA"

    @property
    def matrix(self) -> tuple[int, int, int, int]:
        return _MATRICES[self.value]

    @property
    def det(self) -> int:
        a, b, c, d = self.matrix
        return a * d - b * c

    def apply(self, vec: Cell) -> Cell:
        a, b, c, d = self.matrix
        x, y = vec
        return (a * x + b * y, c * x + d * y)

    def __matmul__(self, other: "PointPart") -> "PointPart":
        return _PRODUCT[(self, other)]

    def inverse(self) -> "PointPart":
        return _INVERSE[self]


def _mul(m: tuple[int, ...], n: tuple[int, ...]) -> tuple[int, int, int, int]:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


_BY_MATRIX = {m: PointPart(name) for name, m in _MATRICES.items()}
_PRODUCT = {
    (p, q): _BY_MATRIX[_mul(p.matrix, q.matrix)] for p in PointPart for q in PointPart
}
_INVERSE = {p: q for p in PointPart for q in PointPart if p @ q is PointPart.R0}


@dataclass(frozen=True)
class Isometry:
    """The map x -> linear(x) + translation."""

    linear: PointPart = PointPart.R0
    translation: Cell = (0, 0)

    def __post_init__(self):
        tx, ty = self.translation
        object.__setattr__(self, "translation", (int(tx), int(ty)))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)

    def is_translation(self) -> bool:
        return self.linear is PointPart.R0

    def __str__(self) -> str:
        return format_isometry(self)


IDENTITY = Isometry()


def translation(vec: Cell) -> Isometry:
    return Isometry(PointPart.R0, vec)


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Return g∘h, i.e. apply h first."""
    v = g.linear.apply(h.translation)
    return Isometry(
        g.linear @ h.linear,
        (v[0] + g.translation[0], v[1] + g.translation[1]),
    )


def inverse(g: Isometry) -> Isometry:
    a_inv = g.linear.inverse()
    vx, vy = a_inv.apply(g.translation)
    return Isometry(a_inv, (-vx, -vy))


def power(g: Isometry, n: int) -> Isometry:
    if n < 0:
        g, n = inverse(g), -n
    result = IDENTITY
    for _ in range(n):
        result = compose(g, result)
    return result


def act(g: Isometry, c: Cell, universe: Universe) -> Cell:
    """Image of the cell ``c`` under ``g``."""
    if universe is Universe.POINT_LATTICE:
        x, y = g.linear.apply(c)
        return (x + g.translation[0], y + g.translation[1])
    # doubled center 2c+1, mapped, then back to a corner index
    x, y = g.linear.apply((2 * c[0] + 1, 2 * c[1] + 1))
    x += 2 * g.translation[0] - 1
    y += 2 * g.translation[1] - 1
    assert x % 2 == 0 and y % 2 == 0, "isometry does not preserve the tessellation"
    return (x // 2, y // 2)


def doubled_center(c: Cell, universe: Universe) -> Cell:
    """Twice the Euclidean position of the cell's center."""
    if universe is Universe.POINT_LATTICE:
        return (2 * c[0], 2 * c[1])
    return (2 * c[0] + 1, 2 * c[1] + 1)


def center_dist2(c: Cell, d: Cell) -> int:
    """Squared Euclidean distance between the centers of two cells.

    Both universes place centers on a translate of Z^2, so this is the same
    for either.
    """
    return (c[0] - d[0]) ** 2 + (c[1] - d[1]) ** 2


def fixes(g: Isometry, c: Cell, universe: Universe) -> bool:
    return act(g, c, universe) == c


def stabilizer(c: Cell, universe: Universe) -> list[Isometry]:
    """The finite stabilizer of a cell: the eight symmetries of D4 about its center."""
    out = []
    for p in PointPart:
        # solve p·center + v = center with center doubled
        cx, cy = doubled_center(c, universe)
        px, py = p.apply((cx, cy))
        vx, vy = cx - px, cy - py
        # v is integral: (I - p) maps the doubled center to an even vector
        assert vx % 2 == 0 and vy % 2 == 0
        out.append(Isometry(p, (vx // 2, vy // 2)))
    return out


def chebyshev_ball(radius: int, center: Cell = (0, 0)) -> Iterator[Cell]:
    cx, cy = center
    for x in range(cx - radius, cx + radius + 1):
        for y in range(cy - radius, cy + radius + 1):
            yield (x, y)


_ISOMETRY_RE = re.compile(r"^\s*([A-Z0-9]+)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_isometry(text: str) -> Isometry:
    """Parse the textual form ``"A:tx,ty"``, e.g. ``"R90:1,0"``."""
    m = _ISOMETRY_RE.match(text)
    if not m or m.group(1) not in _MATRICES:
        raise ValueError(f"bad isometry {text!r}; expected e.g. 'R90:1,0'")
    return Isometry(PointPart(m.group(1)), (int(m.group(2)), int(m.group(3))))


def format_isometry(g: Isometry) -> str:
    return f"{g.linear.value}:{g.translation[0]},{g.translation[1]}"
