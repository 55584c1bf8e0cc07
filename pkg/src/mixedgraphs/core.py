"""Data model for mixed graphs with undirected degree at most one.

A mixed graph here carries plain undirected edges alongside directed arcs.
Each vertex has at most one edge (stored as an optional partner id) and an
ordered tuple of out-arc heads.  All operations are pure: graphs are frozen
after construction and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BadPermutationError, MalformedGraphError


@dataclass(frozen=True)
class MixedGraph:
    """A mixed graph on vertices 0..n-1.

    ``edge_partner[v]`` is the unique undirected neighbour of ``v`` (or
    ``None``), so the stored partner map is symmetric and irreflexive by
    construction.  ``out_arcs[v]`` lists the heads of arcs leaving ``v``.
    ``labels`` is optional display metadata; no algorithm looks at it.
    """

    n: int
    edge_partner: tuple[Optional[int], ...]
    out_arcs: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    @staticmethod
    def build(
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        arcs: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ) -> "MixedGraph":
        """Construct a graph from edge and arc lists, checking structure.

        Raises MalformedGraphError for out-of-range ids, self-loops, a vertex
        with two edges, or duplicate edges/arcs.  Digons and arc/edge parallel
        pairs are representable; ``validate_and_profile`` rejects them.
        """
        if n < 0:
            raise MalformedGraphError(f"vertex count must be nonnegative, got {n}")
        partner: list[Optional[int]] = [None] * n
        for u, v in edges:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise MalformedGraphError(f"self-loop edge at vertex {u}")
            if partner[u] is not None or partner[v] is not None:
                raise MalformedGraphError(
                    f"edge {{{u},{v}}} conflicts with an existing edge"
                )
            partner[u], partner[v] = v, u
        out: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            _check_vertex(u, n)
            _check_vertex(v, n)
            if u == v:
                raise MalformedGraphError(f"self-loop arc at vertex {u}")
            if v in out[u]:
                raise MalformedGraphError(f"duplicate arc {u}->{v}")
            out[u].append(v)
        if labels is not None and len(labels) != n:
            raise MalformedGraphError("labels length must equal vertex count")
        return MixedGraph(
            n=n,
            edge_partner=tuple(partner),
            out_arcs=tuple(tuple(a) for a in out),
            labels=None if labels is None else tuple(labels),
        )

    def edges(self) -> list[tuple[int, int]]:
        """All undirected edges as sorted (u, v) pairs with u < v."""
        return sorted(
            (v, p) for v, p in enumerate(self.edge_partner) if p is not None and v < p
        )

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as sorted (tail, head) pairs."""
        return sorted((u, v) for u in range(self.n) for v in self.out_arcs[u])

    def num_edges(self) -> int:
        return sum(1 for p in self.edge_partner if p is not None) // 2

    def num_arcs(self) -> int:
        return sum(len(a) for a in self.out_arcs)

    def successors(self) -> list[list[int]]:
        """Adjacency of the associated digraph: arcs plus both edge directions."""
        adj = [list(a) for a in self.out_arcs]
        for v, p in enumerate(self.edge_partner):
            if p is not None:
                adj[v].append(p)
        return adj

    def predecessors(self) -> list[list[int]]:
        """Reverse adjacency of the associated digraph."""
        radj: list[list[int]] = [[] for _ in range(self.n)]
        for u in range(self.n):
            for v in self.out_arcs[u]:
                radj[v].append(u)
        for v, p in enumerate(self.edge_partner):
            if p is not None:
                radj[v].append(p)
        return radj

    def relabelled(self, perm: Sequence[int]) -> "MixedGraph":
        """The graph with vertex v renamed perm[v]; labels follow vertices."""
        perm = _check_permutation(perm, self.n)
        labels = None
        if self.labels is not None:
            inv = [0] * self.n
            for v, w in enumerate(perm):
                inv[w] = v
            labels = [self.labels[inv[w]] for w in range(self.n)]
        return MixedGraph.build(
            self.n,
            edges=[(perm[u], perm[v]) for u, v in self.edges()],
            arcs=[(perm[u], perm[v]) for u, v in self.arcs()],
            labels=labels,
        )


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees of a mixed graph plus bipartiteness."""

    undirected: tuple[int, ...]
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]
    bipartite_ok: bool

    def is_totally_regular(self, r: int, z: int) -> bool:
        """True iff every vertex has undirected degree r and in- and
        out-degree both z."""
        return all(d == r for d in self.undirected) and all(
            o == z and i == z for o, i in zip(self.out_degree, self.in_degree)
        )

    @property
    def regularity(self) -> Optional[tuple[int, int]]:
        """(r, z) if the graph is totally regular for some pair, else None."""
        if not self.undirected:
            return (0, 0)
        r, z = self.undirected[0], self.out_degree[0]
        return (r, z) if self.is_totally_regular(r, z) else None


def validate_and_profile(g: MixedGraph) -> DegreeProfile:
    """Check the (1,1)-style adjacency invariants and return exact degrees.

    Raises MalformedGraphError if the partner map is asymmetric, a self-loop
    is present, two opposite arcs form a digon, or an arc runs parallel to an
    edge.  Digons and parallel pairs are rejected rather than merged so that
    construction bugs surface immediately.
    """
    n = g.n
    for v, p in enumerate(g.edge_partner):
        if p is None:
            continue
        _check_vertex(p, n)
        if p == v:
            raise MalformedGraphError(f"self-loop edge at vertex {v}")
        if g.edge_partner[p] != v:
            raise MalformedGraphError(f"edge partner map asymmetric at {v}")
    arc_set = set()
    for u in range(n):
        for v in g.out_arcs[u]:
            _check_vertex(v, n)
            if u == v:
                raise MalformedGraphError(f"self-loop arc at vertex {u}")
            arc_set.add((u, v))
    for u, v in arc_set:
        if (v, u) in arc_set:
            raise MalformedGraphError(
                f"arcs {u}->{v} and {v}->{u} form a digon; model it as an edge"
            )
        if g.edge_partner[u] == v:
            raise MalformedGraphError(f"arc {u}->{v} runs parallel to an edge")
    in_deg = [0] * n
    for _, v in arc_set:
        in_deg[v] += 1
    return DegreeProfile(
        undirected=tuple(0 if p is None else 1 for p in g.edge_partner),
        out_degree=tuple(len(a) for a in g.out_arcs),
        in_degree=tuple(in_deg),
        bipartite_ok=bipartition(g) is not None,
    )


def bipartition(g: MixedGraph) -> Optional[tuple[int, ...]]:
    """A 2-colouring of the underlying graph, or None if none exists.

    Arcs are treated as undirected for colouring; in the certificate every
    edge and every arc joins vertices of different colours.
    """
    colour: list[Optional[int]] = [None] * g.n
    adj = g.successors()
    for u in range(g.n):
        for v in g.out_arcs[u]:
            adj[v].append(u)
    for start in range(g.n):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if colour[v] is None:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return tuple(colour)  # type: ignore[arg-type]


def converse(g: MixedGraph) -> MixedGraph:
    """The graph with every arc reversed and edges unchanged."""
    return MixedGraph.build(
        g.n,
        edges=g.edges(),
        arcs=[(v, u) for u, v in g.arcs()],
        labels=g.labels,
    )


def contract_edges(g: MixedGraph) -> MixedGraph:
    """Merge the two endpoints of every edge into one vertex.

    The merged vertex takes the smaller original id and inherits the arcs of
    both endpoints; surviving ids are then compacted to 0..n'-1 in increasing
    order.  Parallel arcs created by a merge are deduplicated.  The result has
    no edges.
    """
    rep = list(range(g.n))
    for u, v in g.edges():
        rep[v] = u  # u < v
    survivors = sorted(v for v in range(g.n) if rep[v] == v)
    new_id = {v: i for i, v in enumerate(survivors)}
    arcs = sorted({(new_id[rep[u]], new_id[rep[v]]) for u, v in g.arcs()})
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in survivors]
    return MixedGraph.build(len(survivors), edges=(), arcs=arcs, labels=labels)


def verify_automorphism(g: MixedGraph, perm: Sequence[int]) -> bool:
    """True iff perm maps edges to edges and arcs to arcs (with direction)."""
    perm = _check_permutation(perm, g.n)
    for v, p in enumerate(g.edge_partner):
        expected = None if p is None else perm[p]
        if g.edge_partner[perm[v]] != expected:
            return False
    for u in range(g.n):
        if sorted(perm[v] for v in g.out_arcs[u]) != sorted(g.out_arcs[perm[u]]):
            return False
    return True


def are_isomorphic(g: MixedGraph, h: MixedGraph) -> bool:
    """Backtracking isomorphism test between two mixed graphs.

    Vertices are first partitioned by an invariant signature (degrees plus
    sorted BFS distance rows in both directions), which keeps the search
    space tiny for the graph orders this package handles.
    """
    if g.n != h.n or g.num_edges() != h.num_edges() or g.num_arcs() != h.num_arcs():
        return False
    sig_g, sig_h = _iso_signatures(g), _iso_signatures(h)
    if sorted(sig_g) != sorted(sig_h):
        return False
    order = sorted(range(g.n), key=lambda v: (sig_g[v], v))
    candidates = [[u for u in range(h.n) if sig_h[u] == sig_g[v]] for v in order]
    mapping: dict[int, int] = {}
    used = [False] * h.n

    def consistent(v: int, u: int) -> bool:
        pv, pu = g.edge_partner[v], h.edge_partner[u]
        if (pv is None) != (pu is None):
            return False
        if pv is not None and pv in mapping and mapping[pv] != pu:
            return False
        for w, mw in mapping.items():
            if (w in g.out_arcs[v]) != (mw in h.out_arcs[u]):
                return False
            if (v in g.out_arcs[w]) != (u in h.out_arcs[mw]):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for u in candidates[i]:
            if not used[u] and consistent(v, u):
                mapping[v] = u
                used[u] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[u] = False
        return False

    return extend(0)


def _iso_signatures(g: MixedGraph) -> list[tuple]:
    succ, pred = g.successors(), g.predecessors()
    sigs = []
    for v in range(g.n):
        sigs.append(
            (
                g.edge_partner[v] is not None,
                len(g.out_arcs[v]),
                tuple(sorted(_bfs_levels(succ, v))),
                tuple(sorted(_bfs_levels(pred, v))),
            )
        )
    return sigs


def _bfs_levels(adj: list[list[int]], start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


# ---------------------------------------------------------------------------
# Canonical edge-list text format
# ---------------------------------------------------------------------------

def format_edge_list(g: MixedGraph) -> str:
    """Render the canonical text form: header, then sorted E and A lines."""
    lines = [f"mixedgraph {g.n}"]
    lines.extend(f"E {u} {v}" for u, v in g.edges())
    lines.extend(f"A {u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> MixedGraph:
    """Parse the canonical text form produced by :func:`format_edge_list`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("mixedgraph "):
        raise MalformedGraphError("missing 'mixedgraph N' header line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise MalformedGraphError("bad 'mixedgraph N' header line") from exc
    edges, arcs = [], []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] not in ("E", "A"):
            raise MalformedGraphError(f"bad line in edge list: {ln!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise MalformedGraphError(f"bad vertex id in line: {ln!r}") from exc
        (edges if parts[0] == "E" else arcs).append((u, v))
    return MixedGraph.build(n, edges=edges, arcs=arcs)


def _check_vertex(v: int, n: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise MalformedGraphError(f"vertex id {v!r} out of range 0..{n - 1}")


def _check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise BadPermutationError(f"not a permutation of 0..{n - 1}")
    return perm
