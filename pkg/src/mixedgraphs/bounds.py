"""Order bounds for bipartite mixed graphs with unit degrees.

Three bounds are provided: the bipartite Moore bound, a tighter bound that
subtracts forced vertex repetitions counted along chains in the Moore tree,
and the chordal-ring-specific cap.  The unit-degree Moore values and the
chain counts are computed by exact integer recurrences; floating point only
enters for general degree pairs, with an explicit rounding check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NumericInstabilityError, UnsupportedParameterError

_ROUNDING_TOLERANCE = 1e-6


@dataclass(frozen=True)
class MooreParams:
    """Derived quantities of the closed-form bipartite Moore bound."""

    d: int
    v: int
    u1: float
    u2: float
    a: float
    b: float


@dataclass(frozen=True)
class BoundsReport:
    """All order bounds for unit degrees at one diameter."""

    k: int
    moore: int
    improved: int
    crm_upper: int


def moore_params(r: int, z: int) -> MooreParams:
    """Closed-form parameters for maximum degrees (r, z)."""
    _require(r >= 1, f"undirected degree must be >= 1, got {r}")
    _require(z >= 1, f"directed degree must be >= 1, got {z}")
    d = r + z
    v = (d - 1) ** 2 + 4 * z
    sqrt_v = math.sqrt(v)
    return MooreParams(
        d=d,
        v=v,
        u1=(d - 1 - sqrt_v) / 2,
        u2=(d - 1 + sqrt_v) / 2,
        a=(sqrt_v - (d + 1)) / (2 * sqrt_v),
        b=(sqrt_v + (d + 1)) / (2 * sqrt_v),
    )


def moore_bipartite(r: int, z: int, k: int) -> int:
    """Largest order compatible with the bipartite distance-layer count.

    For r = z = 1 the value comes from the exact recurrence
    M(k) = M(k-1) + M(k-2) + 2 with M(1) = 2 and M(2) = 4.  Other degree
    pairs are evaluated in floating point and rounded, with a relative
    rounding check of 1e-6.
    """
    _require(k >= 1, f"diameter must be >= 1, got {k}")
    if r == 1 and z == 1:
        prev, cur = 2, 4
        if k == 1:
            return prev
        for _ in range(k - 2):
            prev, cur = cur, cur + prev + 2
        return cur
    p = moore_params(r, z)
    for u in (p.u1, p.u2):
        if abs(u * u - 1) < 1e-12:
            raise NumericInstabilityError(
                f"degenerate closed form: u^2 - 1 vanishes for (r, z) = ({r}, {z})"
            )
    raw = 2 * (
        p.a * (p.u1 ** (k + 1) - p.u1) / (p.u1**2 - 1)
        + p.b * (p.u2 ** (k + 1) - p.u2) / (p.u2**2 - 1)
    )
    value = round(raw)
    if abs(raw - value) > _ROUNDING_TOLERANCE * max(1.0, abs(raw)):
        raise NumericInstabilityError(
            f"closed-form value {raw!r} is not close to an integer"
        )
    return value


def eta(t: int) -> int:
    """Number of maximal chains starting at level t of the Moore tree.

    The sequence runs 1, 1, 1, 2, 3, 5, ... and satisfies the Fibonacci
    recurrence from the fourth term on.  Computed by integer recurrence; the
    square-root closed form is kept out of the code path on purpose.
    """
    _require(t >= 1, f"chain level must be >= 1, got {t}")
    if t <= 3:
        return 1
    prev, cur = 1, 1  # eta(2), eta(3)
    for _ in range(t - 3):
        prev, cur = cur, prev + cur
    return cur


def improved_bound(k: int) -> int:
    """Upper bound on the order of a totally regular bipartite unit-degree
    mixed graph of diameter k, tightening the Moore bound by the forced
    repetitions of each odd- or even-level chain (ceil(t/3) per t-chain).

    Defined for k >= 3; at k = 3 the Moore bound itself is already tight.
    """
    _require(k >= 3, f"improved bound needs diameter >= 3, got {k}")
    moore = moore_bipartite(1, 1, k)
    if k == 3:
        return moore
    if k % 2 == 0:
        half = k // 2
        defect = _ceil_div(half, 3)
        if half >= 3:
            defect += sum(
                eta(2 * t - 1) * _ceil_div(half - t + 1, 3) for t in range(2, half)
            )
    else:
        half = (k - 1) // 2
        defect = sum(eta(2 * t) * _ceil_div(half - t + 1, 3) for t in range(1, half))
    return moore - 2 * defect


def crm_upper(k: int) -> int:
    """Largest order a chordal ring mixed graph of diameter k can reach."""
    _require(k >= 1, f"diameter must be >= 1, got {k}")
    if k % 2 == 1:
        return (k + 1) ** 2 // 2
    return k * (k + 2) // 2


def bounds_report(k: int) -> BoundsReport:
    """All three bounds at diameter k (k >= 3)."""
    return BoundsReport(
        k=k,
        moore=moore_bipartite(1, 1, k),
        improved=improved_bound(k),
        crm_upper=crm_upper(k),
    )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UnsupportedParameterError(message)
