"""Finite patches of the {8,3} tiling of the hyperbolic plane by regular octagons.

Cells are generated breadth-first from a central octagon by reflecting in
its edges, working in the hyperboloid model with the Minkowski form
x^2 + y^2 - t^2.  Floating point is only used to recognise when two
reflection words reach the same octagon; after that everything (adjacency,
the Game of Life step) is exact and combinatorial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .automaton import life_value
from .errors import ToleranceCollision, UnknownCell

P, Q = 8, 3
MAX_LAYERS = 6
DEFAULT_TOL = 1e-6

_J = np.diag([1.0, 1.0, -1.0])


def _hyperboloid_point(angle: float, dist: float) -> np.ndarray:
    return np.array(
        [math.cos(angle) * math.sinh(dist), math.sin(angle) * math.sinh(dist), math.cosh(dist)]
    )


def _edge_reflections() -> list[np.ndarray]:
    inradius = math.acosh(math.cos(math.pi / Q) / math.sin(math.pi / P))
    out = []
    for i in range(P):
        theta = 2 * math.pi * i / P
        # unit spacelike normal of the edge geodesic at distance `inradius`
        n = np.array(
            [
                math.cos(theta) * math.cosh(inradius),
                math.sin(theta) * math.cosh(inradius),
                math.sinh(inradius),
            ]
        )
        out.append(np.eye(3) - 2.0 * np.outer(n, n) @ _J)
    return out


def _octagon_vertices() -> np.ndarray:
    circumradius = math.acosh(1.0 / (math.tan(math.pi / P) * math.tan(math.pi / Q)))
    return np.array(
        [_hyperboloid_point(2 * math.pi * i / P + math.pi / P, circumradius) for i in range(P)]
    )


REFLECTIONS = _edge_reflections()
VERTICES = _octagon_vertices()  # vertex i lies between edges i and i+1
ORIGIN = np.array([0.0, 0.0, 1.0])


def to_disk(points: np.ndarray) -> np.ndarray:
    """Project hyperboloid points to the Poincaré disk."""
    points = np.atleast_2d(points)
    return points[:, :2] / (1.0 + points[:, 2:3])


@dataclass(frozen=True)
class HypCell:
    id: int
    layer: int
    center: tuple[float, float, float]


@dataclass(frozen=True)
class HypPatch:
    layers: int
    cells: tuple[HypCell, ...]
    # edge_neighbors[c][i] is the cell across edge i of c, or None outside the patch
    edge_neighbors: tuple[tuple[Optional[int], ...], ...]
    transforms: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def neighbors(self, c: int) -> tuple[int, ...]:
        return tuple(n for n in self.edge_neighbors[c] if n is not None)

    def is_boundary(self, c: int) -> bool:
        return self.cells[c].layer == self.layers

    @property
    def boundary_flags(self) -> tuple[bool, ...]:
        return tuple(self.is_boundary(c.id) for c in self.cells)

    def interior(self) -> list[int]:
        return [c.id for c in self.cells if not self.is_boundary(c.id)]

    def layer_counts(self) -> list[int]:
        counts = [0] * (self.layers + 1)
        for c in self.cells:
            counts[c.layer] += 1
        return counts

    def triangles_at(self, c: int) -> int:
        """Number of neighbor pairs of ``c`` that are adjacent to each other.

        In the dual {3,8} triangulation these are the triangles around c, one
        per octagon vertex; an interior cell has 8.
        """
        nbrs = self.neighbors(c)
        return sum(
            1 for i, a in enumerate(nbrs) for b in nbrs[i + 1 :] if b in self.edge_neighbors[a]
        )

    def polygon(self, c: int) -> np.ndarray:
        """Vertices of cell ``c`` in the Poincaré disk."""
        return to_disk(VERTICES @ self.transforms[c].T)


class _DiskIndex:
    """Grid hash over Poincaré-disk points with bucket size ``tol``."""

    def __init__(self, tol: float):
        self.tol = tol
        self.buckets: dict[tuple[int, int], list[tuple[int, np.ndarray]]] = {}

    def _key(self, z):
        return (math.floor(z[0] / self.tol), math.floor(z[1] / self.tol))

    def find(self, z: np.ndarray) -> Optional[int]:
        kx, ky = self._key(z)
        hits = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for cid, w in self.buckets.get((kx + dx, ky + dy), ()):
                    if np.hypot(*(z - w)) < self.tol:
                        hits.append(cid)
        if len(hits) > 1:
            raise ToleranceCollision(
                f"point {z} is within {self.tol} of cells {hits}; the tolerance is too coarse"
            )
        return hits[0] if hits else None

    def add(self, cid: int, z: np.ndarray) -> None:
        self.buckets.setdefault(self._key(z), []).append((cid, z))


def build_patch(layers: int, tol: float = DEFAULT_TOL) -> HypPatch:
    """All octagons within ``layers`` edge-steps of the central one."""
    if not 0 <= layers <= MAX_LAYERS:
        raise ValueError(f"layers must be in 0..{MAX_LAYERS}")
    transforms = [np.eye(3)]
    layer_of = [0]
    index = _DiskIndex(tol)
    index.add(0, to_disk(ORIGIN)[0])
    edges: list[list[Optional[int]]] = [[None] * P]
    frontier = [0]
    for layer in range(layers + 1):
        grow = layer < layers
        nxt = []
        for cid in frontier:
            g = transforms[cid]
            for i, r in enumerate(REFLECTIONS):
                h = g @ r
                z = to_disk(h @ ORIGIN)[0]
                other = index.find(z)
                if other is None:
                    if not grow:
                        continue
                    other = len(transforms)
                    transforms.append(h)
                    layer_of.append(layer + 1)
                    edges.append([None] * P)
                    index.add(other, z)
                    nxt.append(other)
                edges[cid][i] = other
        frontier = nxt
    # every edge was seen from both sides except those between two outer-ring cells,
    # which the last pass above also covered; enforce symmetry explicitly
    for a, row in enumerate(edges):
        for i, b in enumerate(row):
            if b is not None and a not in edges[b]:
                raise ToleranceCollision(f"asymmetric adjacency {a} -> {b}")
    cells = tuple(
        HypCell(cid, layer_of[cid], tuple(float(v) for v in transforms[cid] @ ORIGIN))
        for cid in range(len(transforms))
    )
    return HypPatch(
        layers,
        cells,
        tuple(tuple(row) for row in edges),
        tuple(transforms),
    )


def hyp_gol_step(patch: HypPatch, alive: Iterable[int]) -> frozenset[int]:
    """One Game of Life step; outer-ring cells lack neighbors and are held dead."""
    alive = frozenset(alive)
    n = len(patch)
    for c in alive:
        if not (isinstance(c, (int, np.integer)) and 0 <= c < n):
            raise UnknownCell(c)
    candidates = set(alive)
    for c in alive:
        candidates.update(patch.neighbors(c))
    out = set()
    for c in candidates:
        if patch.is_boundary(c):
            continue
        total = (c in alive) + sum(1 for m in patch.neighbors(c) if m in alive)
        if life_value(total, c in alive):
            out.add(c)
    return frozenset(out)


def render_svg(patch: HypPatch, alive: Iterable[int] = (), size: int = 600) -> str:
    """Static SVG of the patch in the Poincaré disk; live cells filled."""
    alive = set(alive)
    half = size / 2
    scale = half * 0.98

    def pt(z):
        return f"{half + scale * z[0]:.3f},{half - scale * z[1]:.3f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<circle cx="{half}" cy="{half}" r="{scale:.3f}" fill="none" stroke="#888"/>',
    ]
    for cell in patch.cells:
        fill = "#000" if cell.id in alive else ("#eee" if patch.is_boundary(cell.id) else "#fff")
        points = " ".join(pt(z) for z in patch.polygon(cell.id))
        parts.append(
            f'<polygon data-id="{cell.id}" points="{points}" fill="{fill}" '
            f'stroke="#333" stroke-width="0.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
