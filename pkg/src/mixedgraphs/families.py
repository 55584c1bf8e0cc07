"""Generators for the concrete graph families and their companion formulas.

The central family is a bipartite mixed graph on 4m vertices built by
splitting each vertex of a doubling-type bipartite digraph into an edge.
Vertices carry coordinates (alpha, i)_beta with alpha, beta binary and
i modulo m; the fixed integer encoding is

    index = 2*m*beta + m*alpha + i

so that exported files are reproducible.  Alongside the constructors live
the walk-pattern machinery, the endpoint formulas used to certify diameters,
two named automorphisms, the chordal ring families, and voltage-graph lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .core import MixedGraph
from .errors import (
    MalformedBaseError,
    MalformedGraphError,
    NonDivisibleError,
    ParityError,
    UnsupportedParameterError,
)
from .metrics import diameter as _diameter


@dataclass(frozen=True)
class BdmVertex:
    """Coordinate triple (alpha, i)_beta addressing doubled-family vertices."""

    alpha: int
    i: int
    beta: int

    def index(self, m: int) -> int:
        return 2 * m * self.beta + m * self.alpha + self.i

    @staticmethod
    def from_index(idx: int, m: int) -> "BdmVertex":
        beta, rest = divmod(idx, 2 * m)
        alpha, i = divmod(rest, m)
        return BdmVertex(alpha=alpha, i=i, beta=beta)

    def label(self) -> str:
        return f"({self.alpha},{self.i})_{self.beta}"


def canonical_m(n: int) -> int:
    """The modulus 2^(n-1) + 2^(n-3) = 5 * 2^(n-3); integral only for n >= 3."""
    if n < 3:
        raise UnsupportedParameterError(f"canonical modulus needs n >= 3, got {n}")
    return 2 ** (n - 1) + 2 ** (n - 3)


def doubling_parameter(m: int) -> Optional[int]:
    """The n with m = 5 * 2^(n-3), or None if m is not of that form."""
    if m >= 5 and m % 5 == 0:
        q = m // 5
        if q & (q - 1) == 0:
            return q.bit_length() + 2
    return None


def _bdm_vertices(m: int) -> tuple[list[tuple[int, int]], list[str]]:
    edges, labels = [], [""] * (4 * m)
    for beta in (0, 1):
        for alpha in (0, 1):
            for i in range(m):
                labels[BdmVertex(alpha, i, beta).index(m)] = BdmVertex(
                    alpha, i, beta
                ).label()
    for alpha in (0, 1):
        for i in range(m):
            edges.append(
                (BdmVertex(alpha, i, 0).index(m), BdmVertex(alpha, i, 1).index(m))
            )
    return edges, labels


def bdm(m: int) -> MixedGraph:
    """The doubled bipartite mixed graph on 4m vertices.

    Edges join (alpha,i)_0 with (alpha,i)_1; arcs follow the doubling rules
    (0,i)_0 -> (1,2i)_1, (0,i)_1 -> (1,2i+1)_0, (1,i)_0 -> (0,-2i-1)_1 and
    (1,i)_1 -> (0,-2i-2)_0, all modulo m.
    """
    if m < 2:
        raise UnsupportedParameterError(f"modulus must be >= 2, got {m}")
    edges, labels = _bdm_vertices(m)
    arcs = []
    for i in range(m):
        arcs.append((BdmVertex(0, i, 0).index(m), BdmVertex(1, 2 * i % m, 1).index(m)))
        arcs.append(
            (BdmVertex(0, i, 1).index(m), BdmVertex(1, (2 * i + 1) % m, 0).index(m))
        )
        arcs.append(
            (BdmVertex(1, i, 0).index(m), BdmVertex(0, (-2 * i - 1) % m, 1).index(m))
        )
        arcs.append(
            (BdmVertex(1, i, 1).index(m), BdmVertex(0, (-2 * i - 2) % m, 0).index(m))
        )
    return MixedGraph.build(4 * m, edges=edges, arcs=arcs, labels=labels)


def bdm_canonical(n: int) -> tuple[int, MixedGraph]:
    """The canonical-modulus family member (m, graph) of order 2^(n+1)+2^(n-1).

    Its diameter is exactly 2n; the modulus is integral only for n >= 3.
    """
    m = canonical_m(n)
    return m, bdm(m)


def bdm_star(m: int) -> MixedGraph:
    """The totally regular variant of :func:`bdm` on the same vertex set.

    For i in the lower half of the modulus range the arcs agree with
    :func:`bdm`; for the upper half the target offsets 2i <-> 2i+1 and
    -2i-1 <-> -2i-2 are swapped.  The construction asserts the resulting
    in-neighbour table vertexwise and fails loudly on any mismatch, so a
    successful return is already certified in-degree-1 everywhere.
    """
    n = doubling_parameter(m)
    if n is None or n <= 3:
        raise UnsupportedParameterError(
            f"modulus must be 5 * 2^(n-3) with n > 3, got {m}"
        )
    edges, labels = _bdm_vertices(m)
    arcs = []
    half = m // 2
    for i in range(m):
        if i < half:
            heads = (2 * i, 2 * i + 1, -2 * i - 1, -2 * i - 2)
        else:
            heads = (2 * i + 1, 2 * i, -2 * i - 2, -2 * i - 1)
        arcs.append((BdmVertex(0, i, 0).index(m), BdmVertex(1, heads[0] % m, 1).index(m)))
        arcs.append((BdmVertex(0, i, 1).index(m), BdmVertex(1, heads[1] % m, 0).index(m)))
        arcs.append((BdmVertex(1, i, 0).index(m), BdmVertex(0, heads[2] % m, 1).index(m)))
        arcs.append((BdmVertex(1, i, 1).index(m), BdmVertex(0, heads[3] % m, 0).index(m)))
    g = MixedGraph.build(4 * m, edges=edges, arcs=arcs, labels=labels)
    _assert_star_in_neighbours(g, m)
    return g


def _assert_star_in_neighbours(g: MixedGraph, m: int) -> None:
    # In-neighbour of each vertex class, derived from the arc rules; checking
    # it vertexwise certifies total (1,1)-regularity of the construction.
    for i in range(m):
        odd = i % 2 == 1
        expected = [
            (BdmVertex(0, i, 0), BdmVertex(1, ((-i - 1) // 2 if odd else (-i - 2 - m) // 2) % m, 1)),
            (BdmVertex(0, i, 1), BdmVertex(1, ((-i - 1 - m) // 2 if odd else (-i - 2) // 2) % m, 0)),
            (BdmVertex(1, i, 0), BdmVertex(0, ((i - 1) // 2 if odd else (i + m) // 2) % m, 1)),
            (BdmVertex(1, i, 1), BdmVertex(0, ((i - 1 + m) // 2 if odd else i // 2) % m, 0)),
        ]
        for target, source in expected:
            if target.index(m) not in g.out_arcs[source.index(m)]:
                raise MalformedGraphError(
                    f"in-neighbour check failed: expected arc "
                    f"{source.label()} -> {target.label()}"
                )


def bd_digraph(m: int) -> MixedGraph:
    """The arcs-only doubling digraph on 2m vertices (alpha, i).

    Adjacencies: (0,i) -> (1,2i), (1,2i+1) and (1,i) -> (0,-2i-1), (0,-2i-2),
    modulo m.  Contracting the edges of :func:`bdm` yields exactly this graph
    under the shared index encoding.
    """
    if m < 2:
        raise UnsupportedParameterError(f"modulus must be >= 2, got {m}")
    labels = [f"({alpha},{i})" for alpha in (0, 1) for i in range(m)]
    arcs = []
    for i in range(m):
        arcs.append((i, m + 2 * i % m))
        arcs.append((i, m + (2 * i + 1) % m))
        arcs.append((m + i, (-2 * i - 1) % m))
        arcs.append((m + i, (-2 * i - 2) % m))
    return MixedGraph.build(2 * m, edges=(), arcs=arcs, labels=labels)


# ---------------------------------------------------------------------------
# Walk patterns and endpoint formulas
# ---------------------------------------------------------------------------

def walk_pattern(g: MixedGraph, start: int, pattern: str) -> frozenset[int]:
    """Vertices reachable from start by walks whose step kinds follow pattern.

    Each character must be 'E' (traverse the vertex's edge) or 'A' (follow an
    out-arc).  The empty pattern yields {start}; a walk that cannot continue
    contributes nothing.
    """
    if not 0 <= start < g.n:
        raise UnsupportedParameterError(f"start {start} out of range 0..{g.n - 1}")
    current = {start}
    for step in pattern:
        if step == "E":
            current = {g.edge_partner[v] for v in current if g.edge_partner[v] is not None}
        elif step == "A":
            current = {w for v in current for w in g.out_arcs[v]}
        else:
            raise UnsupportedParameterError(f"pattern step must be E or A, got {step!r}")
    return frozenset(current)


def edge_first_pattern(steps: int) -> str:
    """Alternating walk E(AE)^steps, the longest worst-case route."""
    return "E" + "AE" * steps


def arc_first_pattern(steps: int) -> str:
    """Walk starting with an arc that shortcuts :func:`edge_first_pattern`.

    Alternates A(EA)... for up to five steps and then repeats AE; its
    endpoint from a (0,i)_1 start coincides modulo the canonical modulus with
    the edge-first walk one index higher.
    """
    return "A" + "EA" * min(steps, 2) + "AE" * max(steps - 2, 0)


def double_arc_pattern(steps: int) -> str:
    """Walk opening with two arcs; from a (1,i)_1 start its endpoint matches
    the edge-first walk three indices higher modulo the canonical modulus."""
    return "A" if steps == 0 else "AA" + "EA" * (steps - 1) + "E"


def path_endpoint_formula(
    kind: Literal["phi", "psi"], n: int, i: int, m: int
) -> int:
    """Closed-form index of the edge-first walk endpoint, reduced modulo m.

    phi (even n >= 2):  (-1)^(n/2)     * (2^n i + (2^n     - (-1)^(n/2))/5)
    psi (odd n >= 1):   (-1)^((n+1)/2) * (2^n i + (2^(n+1) - (-1)^((n+1)/2))/5)

    Both are evaluated in exact integer arithmetic; the division by 5 is
    always exact for the stated parities and a failure signals a
    transcription bug, not bad input.
    """
    if m < 1:
        raise UnsupportedParameterError(f"modulus must be >= 1, got {m}")
    if kind == "phi":
        if n < 2 or n % 2 != 0:
            raise ParityError(f"phi needs even n >= 2, got {n}")
        sign = -1 if (n // 2) % 2 else 1
        numerator = 2**n - sign
    elif kind == "psi":
        if n < 1 or n % 2 != 1:
            raise ParityError(f"psi needs odd n >= 1, got {n}")
        sign = -1 if ((n + 1) // 2) % 2 else 1
        numerator = 2 ** (n + 1) - sign
    else:
        raise UnsupportedParameterError(f"kind must be 'phi' or 'psi', got {kind!r}")
    if numerator % 5 != 0:
        raise NonDivisibleError(f"{kind}({n}): {numerator} is not divisible by 5")
    return sign * (2**n * i + numerator // 5) % m


# ---------------------------------------------------------------------------
# Named automorphisms
# ---------------------------------------------------------------------------

AutomorphismName = Literal["reflect", "shift"]


def named_automorphism(which: AutomorphismName, v: BdmVertex, m: int) -> BdmVertex:
    """Apply one of the two named automorphisms of :func:`bdm`.

    ``reflect`` sends (alpha,i)_beta to (alpha,-i-1)_(1-beta): an involution
    that swaps the two independent sets.  ``shift`` adds 2^(n-3) to i when
    alpha = 0 and 2^(n-2) when alpha = 1, keeping beta; it has order five and
    requires the canonical modulus.
    """
    if which == "reflect":
        return BdmVertex(v.alpha, (-v.i - 1) % m, 1 - v.beta)
    if which == "shift":
        n = doubling_parameter(m)
        if n is None:
            raise UnsupportedParameterError(
                f"shift automorphism needs a canonical modulus, got {m}"
            )
        amount = 2 ** (n - 2) if v.alpha == 1 else 2 ** (n - 3)
        return BdmVertex(v.alpha, (v.i + amount) % m, v.beta)
    raise UnsupportedParameterError(f"unknown automorphism {which!r}")


def automorphism_permutation(which: AutomorphismName, m: int) -> tuple[int, ...]:
    """The automorphism as a permutation of the integer vertex encoding."""
    perm = [0] * (4 * m)
    for idx in range(4 * m):
        perm[idx] = named_automorphism(which, BdmVertex.from_index(idx, m), m).index(m)
    return tuple(perm)


# ---------------------------------------------------------------------------
# Chordal ring families
# ---------------------------------------------------------------------------

CrmCase = Literal["a", "b", "c1", "c2"]
CdrmConvention = Literal["shift", "reflect"]


@dataclass(frozen=True)
class CrmParams:
    """Optimal chordal-ring parameters for one diameter."""

    k: int
    case: CrmCase
    n: int
    c: int
    ell: int
    t: Optional[int]


def crm(n: int, c: int) -> MixedGraph:
    """Chordal ring mixed graph: a directed n-cycle plus chords.

    Vertices are integers modulo n with arcs i -> i+1; each odd i carries the
    undirected chord {i, i+c}.  Requires n even and c odd with 1 <= c < n so
    the chords form a perfect matching and the graph is bipartite by parity.
    """
    if n < 2 or n % 2 != 0:
        raise UnsupportedParameterError(f"ring length must be even >= 2, got {n}")
    if not (1 <= c < n) or c % 2 != 1:
        raise UnsupportedParameterError(f"chord length must be odd in 1..{n - 1}, got {c}")
    arcs = [(i, (i + 1) % n) for i in range(n)]
    edges = [(i, (i + c) % n) for i in range(1, n, 2)]
    labels = [str(i) for i in range(n)]
    return MixedGraph.build(n, edges=edges, arcs=arcs, labels=labels)


def crm_optimal(k: int) -> CrmParams:
    """Largest-known chordal ring parameters with diameter exactly k.

    Case a (k odd):        n = (k+1)^2 / 2,     c = k
    Case b (k = 0 mod 4):  n = k^2/2 + 2,       c = (k/2-1)^2 + k/2
    Case c1 (k = 6 mod 8): n = k(k/2-1) + 4,    c = 8t^2 - 8t + 3,  k = 8t-2
    Case c2 (k = 2 mod 8): n = k(k/2-1) + 4,    c = 24t^2 - 44t + 23, k = 8t-6

    The constructed graph is checked to have diameter exactly k before the
    parameters are returned.
    """
    if k < 3:
        raise UnsupportedParameterError(f"optimal chordal ring needs k >= 3, got {k}")
    if k % 2 == 1:
        ell = (k + 1) // 2
        params = CrmParams(k=k, case="a", n=2 * ell * ell, c=k, ell=ell, t=None)
    elif k % 4 == 0:
        t = k // 4
        params = CrmParams(
            k=k, case="b", n=k * k // 2 + 2, c=(k // 2 - 1) ** 2 + k // 2,
            ell=k // 2, t=t,
        )
    elif k % 8 == 6:
        t = (k + 2) // 8
        params = CrmParams(
            k=k, case="c1", n=k * (k // 2 - 1) + 4, c=8 * t * t - 8 * t + 3,
            ell=k // 2, t=t,
        )
    else:  # k = 2 (mod 8)
        t = (k + 6) // 8
        params = CrmParams(
            k=k, case="c2", n=k * (k // 2 - 1) + 4, c=24 * t * t - 44 * t + 23,
            ell=k // 2, t=t,
        )
    measured = _diameter(crm(params.n, params.c))
    if measured != k:
        raise MalformedGraphError(
            f"chordal ring ({params.n},{params.c}) has diameter {measured}, wanted {k}"
        )
    return params


def cdrm(m: int, c: int, convention: CdrmConvention = "shift") -> MixedGraph:
    """Chordal double ring: two directed m-cycles joined by a chord matching.

    Vertices (alpha, i) with alpha binary, i modulo m; index = alpha*m + i.
    Arcs run (alpha,i) -> (alpha,i+1) around each ring.  Chords join
    (0,i) ~ (1,i+c) under ``shift`` and (0,i) ~ (1,c-i) under ``reflect``;
    with m even and c odd the graph is bipartite by the parity of i.
    """
    if m < 2 or m % 2 != 0:
        raise UnsupportedParameterError(f"ring length must be even >= 2, got {m}")
    if c % 2 != 1:
        raise UnsupportedParameterError(f"chord length must be odd, got {c}")
    if convention not in ("shift", "reflect"):
        raise UnsupportedParameterError(f"unknown convention {convention!r}")
    arcs = [(a * m + i, a * m + (i + 1) % m) for a in (0, 1) for i in range(m)]
    if convention == "shift":
        edges = [(i, m + (i + c) % m) for i in range(m)]
    else:
        edges = [(i, m + (c - i) % m) for i in range(m)]
    labels = [f"({a},{i})" for a in (0, 1) for i in range(m)]
    return MixedGraph.build(2 * m, edges=edges, arcs=arcs, labels=labels)


# ---------------------------------------------------------------------------
# Voltage-graph lifts
# ---------------------------------------------------------------------------

DartKind = Literal["edge", "arc"]


@dataclass(frozen=True)
class Dart:
    """One adjacency of a base graph, carrying a voltage in Z_q.

    Edge darts are stored once with an orientation; traversing an edge dart
    backwards negates its voltage.
    """

    tail: int
    head: int
    voltage: int
    kind: DartKind


@dataclass(frozen=True)
class VoltageBaseGraph:
    """A small base graph with dart voltages in a cyclic group Z_q."""

    n: int
    group_order: int
    darts: tuple[Dart, ...]

    def validate(self) -> None:
        if self.n < 1:
            raise MalformedBaseError(f"base needs >= 1 vertex, got {self.n}")
        if self.group_order < 1:
            raise MalformedBaseError(f"group order must be >= 1, got {self.group_order}")
        for dart in self.darts:
            if not (0 <= dart.tail < self.n and 0 <= dart.head < self.n):
                raise MalformedBaseError(f"dart {dart} has an out-of-range endpoint")
            if dart.kind not in ("edge", "arc"):
                raise MalformedBaseError(f"dart kind must be edge or arc, got {dart.kind!r}")
            if not 0 <= dart.voltage < self.group_order:
                raise MalformedBaseError(f"voltage {dart.voltage} outside Z_{self.group_order}")


def lift(base: VoltageBaseGraph) -> MixedGraph:
    """The covering graph of a voltage base over its cyclic group.

    Vertex (b, x) gets index b*q + x.  An edge dart (u, v, g) produces the
    edges {(u,x), (v,x+g)} for every x; an arc dart produces the arcs
    (u,x) -> (v,x+g).  The order is n*q.
    """
    base.validate()
    q = base.group_order
    edges, arcs = [], []
    for dart in base.darts:
        for x in range(q):
            pair = (dart.tail * q + x, dart.head * q + (x + dart.voltage) % q)
            (edges if dart.kind == "edge" else arcs).append(pair)
    labels = [f"({b},{x})" for b in range(base.n) for x in range(q)]
    try:
        return MixedGraph.build(base.n * q, edges=edges, arcs=arcs, labels=labels)
    except MalformedGraphError as exc:
        raise MalformedBaseError(f"lift is not a valid mixed graph: {exc}") from exc


def bdm5_base() -> VoltageBaseGraph:
    """The four-vertex base over Z_5 whose lift is isomorphic to bdm(5)."""
    return VoltageBaseGraph(
        n=4,
        group_order=5,
        darts=(
            Dart(0, 1, 0, "edge"),
            Dart(2, 3, 0, "edge"),
            Dart(0, 3, 2, "arc"),
            Dart(3, 0, 1, "arc"),
            Dart(1, 2, 0, "arc"),
            Dart(2, 1, 2, "arc"),
        ),
    )
