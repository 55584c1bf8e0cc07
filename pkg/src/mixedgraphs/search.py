"""Extremal searches: exhaustive small-order enumeration, randomized voltage
lifts, and the chordal double ring scan.

The exhaustive search enumerates bipartite unit-degree mixed graphs with the
edge matching normalized to {2j, 2j+1} (colour = parity), and the class-0
arc permutation fixed to one canonical representative per cycle type; this
prunes the matching's stabilizer without losing isomorphism classes.
Candidate evaluation is pure, and all reports merge in a deterministic total
order, so results do not depend on evaluation order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    MixedGraph,
    are_isomorphic,
    bipartition,
    format_edge_list,
    validate_and_profile,
)
from .errors import MalformedBaseError, MalformedGraphError, UnsupportedParameterError
from .families import CdrmConvention, Dart, VoltageBaseGraph, cdrm, lift
from .metrics import diameter

_WITNESS_CAP = 8
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SearchReport:
    """Outcome of one search run.

    ``witnesses`` holds representatives up to isomorphism, sorted by their
    canonical edge-list text (at most a fixed cap is kept).  ``wall_time`` is
    informational only and excluded from serialization so that reruns with
    the same seed and budget serialize byte-identically.
    """

    kind: str
    k: int
    max_order_tested: int
    best_order: Optional[int]
    exhaustive: bool
    witnesses: tuple[MixedGraph, ...]
    candidates: int
    wall_time: float
    seed: Optional[int] = None

    def serialize(self) -> str:
        seed = "-" if self.seed is None else str(self.seed)
        best = "-" if self.best_order is None else str(self.best_order)
        lines = [
            f"searchreport kind={self.kind} k={self.k}"
            f" max_order_tested={self.max_order_tested} best_order={best}"
            f" exhaustive={'true' if self.exhaustive else 'false'}"
            f" candidates={self.candidates} seed={seed}",
            f"witnesses {len(self.witnesses)}",
        ]
        for witness in self.witnesses:
            lines.append(format_edge_list(witness).rstrip("\n"))
        return "\n".join(lines) + "\n"


def exhaustive_max_order(
    k: int,
    n_max: int,
    totally_regular_only: bool = True,
    budget: Optional[int] = None,
) -> SearchReport:
    """Largest even order n <= n_max admitting a bipartite unit-degree mixed
    graph of diameter <= k, scanning n downward and stopping at the first n
    with witnesses.

    In totally regular mode edges form a perfect matching and arcs a
    permutation crossing the bipartition; the general mode (any degrees
    <= 1) is far larger and only sensible for tiny n.  A budget caps the
    number of candidates evaluated; hitting it clears the exhaustive flag.
    """
    if k < 1:
        raise UnsupportedParameterError(f"diameter must be >= 1, got {k}")
    if n_max < 2 or n_max % 2 != 0:
        raise UnsupportedParameterError(f"order cap must be even >= 2, got {n_max}")
    start = time.perf_counter()
    candidates = 0
    exhausted_budget = False
    best_order: Optional[int] = None
    witnesses: list[MixedGraph] = []
    for n in range(n_max, 1, -2):
        found: list[MixedGraph] = []
        generator = (
            _totally_regular_candidates(n)
            if totally_regular_only
            else _general_candidates(n)
        )
        for g in generator:
            if budget is not None and candidates >= budget:
                exhausted_budget = True
                break
            candidates += 1
            if diameter(g) <= k:
                found.append(g)
        if found:
            best_order = n
            witnesses = _isomorphism_classes(found)
            break
        if exhausted_budget:
            break
    return SearchReport(
        kind="exhaustive",
        k=k,
        max_order_tested=n_max,
        best_order=best_order,
        exhaustive=not exhausted_budget,
        witnesses=tuple(witnesses),
        candidates=candidates,
        wall_time=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class LiftTemplate:
    """A base-graph shape whose dart voltages are left free."""

    n: int
    edge_darts: tuple[tuple[int, int], ...]
    arc_darts: tuple[tuple[int, int], ...]

    @property
    def dart_count(self) -> int:
        return len(self.edge_darts) + len(self.arc_darts)


def two_vertex_template() -> LiftTemplate:
    """One edge plus opposite arcs between two base vertices (order 2q lifts)."""
    return LiftTemplate(n=2, edge_darts=((0, 1),), arc_darts=((0, 1), (1, 0)))


def four_vertex_template() -> LiftTemplate:
    """Two edges and a four-arc circuit on four base vertices (order 4q lifts);
    with q = 5 the assignment realizing bdm(5) lies in this space."""
    return LiftTemplate(
        n=4,
        edge_darts=((0, 1), (2, 3)),
        arc_darts=((0, 3), (3, 0), (1, 2), (2, 1)),
    )


def lift_search(
    k: int,
    template: LiftTemplate,
    q_range: Iterable[int],
    budget: int,
    seed: int,
) -> SearchReport:
    """Search voltage assignments on a template for large lifts of diameter
    <= k.

    For each group order q the q^darts assignment space is enumerated fully
    when it fits in the remaining budget and sampled deterministically from a
    counter-based generator keyed by the seed otherwise.  Only validated
    bipartite lifts count as witnesses.  Reports are byte-identical across
    reruns with the same arguments.
    """
    if budget <= 0:
        raise UnsupportedParameterError(f"budget must be positive, got {budget}")
    start = time.perf_counter()
    orders = [int(q) for q in q_range]
    candidates = 0
    remaining = budget
    exhaustive = True
    best_order: Optional[int] = None
    best_texts: list[str] = []
    for q in orders:
        if q < 1:
            raise UnsupportedParameterError(f"group order must be >= 1, got {q}")
        if remaining <= 0:
            exhaustive = False
            break
        space = q**template.dart_count
        if space <= remaining:
            assignments: Iterable[tuple[int, ...]] = itertools.product(
                range(q), repeat=template.dart_count
            )
        else:
            exhaustive = False
            assignments = (
                _sample_voltages(seed, q, counter, template.dart_count)
                for counter in range(remaining)
            )
        for voltages in assignments:
            candidates += 1
            remaining -= 1
            g = _build_lift(template, q, voltages)
            if g is None:
                continue
            order = template.n * q
            if diameter(g) <= k and (best_order is None or order >= best_order):
                if best_order is None or order > best_order:
                    best_order, best_texts = order, []
                text = format_edge_list(g)
                if text not in best_texts:
                    best_texts.append(text)
                    best_texts.sort()
                    del best_texts[_WITNESS_CAP:]
    witnesses = _isomorphism_classes(
        [_parse_witness(text) for text in best_texts]
    )
    return SearchReport(
        kind="lift",
        k=k,
        max_order_tested=template.n * max(orders) if orders else 0,
        best_order=best_order,
        exhaustive=exhaustive,
        witnesses=tuple(witnesses),
        candidates=candidates,
        wall_time=time.perf_counter() - start,
        seed=seed,
    )


def cdrm_scan(m: int) -> tuple[int, CdrmConvention, float]:
    """Best chordal double ring on 2m vertices over all odd chords and both
    attachment conventions.

    Returns (c, convention, diameter) minimizing diameter, with ties broken
    by smaller c and then shift before reflect.
    """
    best: Optional[tuple[float, int, int]] = None
    conventions: tuple[CdrmConvention, ...] = ("shift", "reflect")
    for c in range(1, m, 2):
        for rank, convention in enumerate(conventions):
            d = diameter(cdrm(m, c, convention))
            key = (d, c, rank)
            if best is None or key < best:
                best = key
    if best is None:
        raise UnsupportedParameterError(f"no odd chord exists for m = {m}")
    d, c, rank = best
    return c, conventions[rank], d


# ---------------------------------------------------------------------------
# Candidate enumeration
# ---------------------------------------------------------------------------

def _totally_regular_candidates(n: int) -> Iterator[MixedGraph]:
    """All totally regular bipartite unit-degree graphs on n vertices, with
    the matching normalized and the class-0 arc permutation canonical per
    cycle type.  Every isomorphism class appears at least once."""
    h = n // 2
    for p in _derangement_type_representatives(h):
        for q in itertools.permutations(range(h)):
            if any(q[j] == j or q[p[j]] == j for j in range(h)):
                continue
            yield _matching_graph(h, p, q)


def _matching_graph(h: int, p: Sequence[int], q: Sequence[int]) -> MixedGraph:
    edges = [(2 * j, 2 * j + 1) for j in range(h)]
    arcs = [(2 * j, 2 * p[j] + 1) for j in range(h)]
    arcs += [(2 * j + 1, 2 * q[j]) for j in range(h)]
    return MixedGraph.build(2 * h, edges=edges, arcs=arcs)


def _derangement_type_representatives(h: int) -> list[tuple[int, ...]]:
    """One canonical permutation of 0..h-1 per cycle type without fixed
    points: cycles laid out as consecutive blocks in decreasing length."""
    reps: list[tuple[int, ...]] = []

    def partitions(remaining: int, largest: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, largest), 1, -1):
            if remaining - part == 1:
                continue  # a leftover part of size 1 would be a fixed point
            for rest in partitions(remaining - part, part):
                yield [part] + rest

    for cycle_type in partitions(h, h):
        perm = [0] * h
        base = 0
        for length in cycle_type:
            for offset in range(length):
                perm[base + offset] = base + (offset + 1) % length
            base += length
        reps.append(tuple(perm))
    return reps


def _general_candidates(n: int) -> Iterator[MixedGraph]:
    """All bipartite mixed graphs on n vertices with every undirected degree
    and out-degree at most one, up to swapping the colour classes.  The space
    is exponential; use a budget."""
    for h0 in range((n + 1) // 2, n):
        h1 = n - h0
        class1 = list(range(h0, n))
        for matching in _partial_matchings(h0, class1):
            partner = {u: v for u, v in matching}
            partner.update({v: u for u, v in matching})
            heads: list[Optional[int]] = [None] * n

            def assign(v: int) -> Iterator[MixedGraph]:
                if v == n:
                    arcs = [(u, w) for u, w in enumerate(heads) if w is not None]
                    yield MixedGraph.build(n, edges=matching, arcs=arcs)
                    return
                options: list[Optional[int]] = [None]
                targets = class1 if v < h0 else range(h0)
                for w in targets:
                    if partner.get(v) == w:
                        continue  # parallel to the edge
                    if w < v and heads[w] == v:
                        continue  # digon
                    options.append(w)
                for choice in options:
                    heads[v] = choice
                    yield from assign(v + 1)
                heads[v] = None

            yield from assign(0)


def _partial_matchings(
    h0: int, class1: Sequence[int]
) -> Iterator[list[tuple[int, int]]]:
    free = list(class1)

    def extend(v: int) -> Iterator[list[tuple[int, int]]]:
        if v == h0:
            yield []
            return
        for rest in extend(v + 1):
            yield rest
        for idx, w in enumerate(list(free)):
            del free[idx]
            for rest in extend(v + 1):
                yield [(v, w)] + rest
            free.insert(idx, w)

    yield from extend(0)


def _isomorphism_classes(graphs: Sequence[MixedGraph]) -> list[MixedGraph]:
    """Representatives up to isomorphism, sorted by canonical edge-list text."""
    ordered = sorted(graphs, key=format_edge_list)
    reps: list[MixedGraph] = []
    for g in ordered:
        if not any(are_isomorphic(g, rep) for rep in reps):
            reps.append(g)
    return reps


def _build_lift(
    template: LiftTemplate, q: int, voltages: Sequence[int]
) -> Optional[MixedGraph]:
    darts = []
    for (tail, head), voltage in zip(template.edge_darts, voltages):
        darts.append(Dart(tail, head, voltage % q, "edge"))
    for (tail, head), voltage in zip(
        template.arc_darts, voltages[len(template.edge_darts) :]
    ):
        darts.append(Dart(tail, head, voltage % q, "arc"))
    base = VoltageBaseGraph(n=template.n, group_order=q, darts=tuple(darts))
    try:
        g = lift(base)
        validate_and_profile(g)
    except (MalformedBaseError, MalformedGraphError):
        return None
    if bipartition(g) is None:
        return None
    return g


def _parse_witness(text: str) -> MixedGraph:
    from .core import parse_edge_list

    return parse_edge_list(text)


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _sample_voltages(seed: int, q: int, counter: int, ndarts: int) -> tuple[int, ...]:
    base = _splitmix64((seed & _MASK64) ^ (q * 0x517CC1B727220A95) & _MASK64)
    return tuple(
        _splitmix64(base ^ (counter * ndarts + d)) % q for d in range(ndarts)
    )
