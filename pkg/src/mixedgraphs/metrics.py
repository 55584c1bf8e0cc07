"""Distances, eccentricities, diameter, and radii of mixed graphs.

Shortest paths are taken in the associated digraph: edges are traversable in
both directions, arcs only forward.  Unreachable pairs are marked with
``UNREACHABLE`` in distance rows; aggregate quantities over unreachable pairs
become ``INFINITE`` so callers can filter candidates cheaply instead of
handling errors.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Union

from .core import MixedGraph
from .errors import UnsupportedParameterError

UNREACHABLE = -1
INFINITE = math.inf

Eccentricity = Union[int, float]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest path lengths; UNREACHABLE marks absent paths."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    def diameter(self) -> Eccentricity:
        """Largest finite distance, or INFINITE if some pair is unreachable."""
        worst = 0
        for row in self.rows:
            m = min(row)
            if m == UNREACHABLE:
                return INFINITE
            worst = max(worst, max(row))
        return worst


@dataclass(frozen=True)
class EccentricityReport:
    """Out/in eccentricities with the derived diameter, radii, and centres."""

    ecc_out: tuple[Eccentricity, ...]
    ecc_in: tuple[Eccentricity, ...]
    diameter: Eccentricity
    out_radius: Eccentricity
    in_radius: Eccentricity
    out_central: tuple[int, ...]
    in_central: tuple[int, ...]


def distances_from(g: MixedGraph, src: int) -> list[int]:
    """Shortest mixed-path lengths from src to every vertex (BFS)."""
    if not 0 <= src < g.n:
        raise UnsupportedParameterError(f"source {src} out of range 0..{g.n - 1}")
    return _bfs(g.successors(), src)


def distance_matrix(g: MixedGraph) -> DistanceMatrix:
    """All-pairs distances via one BFS per source, in source order."""
    adj = g.successors()
    return DistanceMatrix(rows=tuple(tuple(_bfs(adj, s)) for s in range(g.n)))


def diameter(g: MixedGraph) -> Eccentricity:
    """Diameter of g; INFINITE when some ordered pair is unreachable."""
    adj = g.successors()
    worst = 0
    for s in range(g.n):
        row = _bfs(adj, s)
        if min(row) == UNREACHABLE:
            return INFINITE
        worst = max(worst, max(row))
    return worst


def eccentricity_report(g: MixedGraph) -> EccentricityReport:
    """Exact out/in eccentricities, diameter, radii, and central vertices."""
    if g.n == 0:
        return EccentricityReport((), (), 0, 0, 0, (), ())
    adj = g.successors()
    ecc_out: list[Eccentricity] = []
    ecc_in: list[Eccentricity] = [0] * g.n
    in_dist = [[UNREACHABLE] * g.n for _ in range(g.n)]
    for s in range(g.n):
        row = _bfs(adj, s)
        ecc_out.append(INFINITE if min(row) == UNREACHABLE else max(row))
        for v, d in enumerate(row):
            in_dist[v][s] = d
    for v in range(g.n):
        row = in_dist[v]
        ecc_in[v] = INFINITE if min(row) == UNREACHABLE else max(row)
    diameter_ = max(ecc_out)
    out_radius = min(ecc_out)
    in_radius = min(ecc_in)
    return EccentricityReport(
        ecc_out=tuple(ecc_out),
        ecc_in=tuple(ecc_in),
        diameter=diameter_,
        out_radius=out_radius,
        in_radius=in_radius,
        out_central=tuple(v for v in range(g.n) if ecc_out[v] == out_radius),
        in_central=tuple(v for v in range(g.n) if ecc_in[v] == in_radius),
    )


def _bfs(adj: list[list[int]], start: int) -> list[int]:
    dist = [UNREACHABLE] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist
