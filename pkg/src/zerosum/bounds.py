"""Closed-form lower bounds for the Davenport constant.

Conventions: an unsubscripted log is the natural logarithm; log2 and
log_p carry their base.  Strict real bounds D(G) > X become the integer
bound floor(X + 1e-9) + 1; the slack keeps analytic expressions that are
integral in exact arithmetic from rounding down twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import build_lzfs_certificate, theta
from .engine import SearchLimits, davenport_exact
from .errors import (
    BadParams,
    BadPartition,
    BudgetExceeded,
    NoAdmissibleEll,
    PGroup,
    PreconditionFailed,
    PrimePower,
)
from .groups import GroupSpec, GSequence, d_star, factorize, is_prime, make_group

_SLACK = 1e-9

FORMULA_DSTAR = "DSTAR"
FORMULA_LZFS = "LZFS"
FORMULA_EST = "EST"
FORMULA_GENE = "GENE"
FORMULA_EXACT = "EXACT"

# Preference on equal bound values: true value first, then the formula
# whose certificate is constructive, then the trivial chain bound.
_FORMULA_RANK = {
    FORMULA_EXACT: 0,
    FORMULA_LZFS: 1,
    FORMULA_DSTAR: 2,
    FORMULA_EST: 3,
    FORMULA_GENE: 4,
}


@dataclass(frozen=True)
class BoundReport:
    group: GroupSpec
    d_star: int
    lower_bound: int
    delta: int
    formula: str
    params: dict = field(default_factory=dict)
    real_value: float | None = None
    certificate_ref: str | None = None


def _strict_to_int(x: float) -> int:
    return math.floor(x + _SLACK) + 1


def admissible_pk1(n: int, k: int) -> list[tuple[int, int]]:
    """All pairs (p prime dividing n, k1 >= 2 dividing k) with gcd(p,k1)=1.

    Empty exactly when C_n^r + C_{kn} is a p-group, i.e. when n*k is a
    prime power.
    """
    if n < 2 or k < 2:
        raise BadParams("need n >= 2 and k >= 2")
    primes = sorted(factorize(n))
    divisors = [d for d in range(2, k + 1) if k % d == 0]
    return [(p, k1) for p in primes for k1 in divisors if math.gcd(p, k1) == 1]


def _shape_group(n: int, k: int, r: int) -> GroupSpec:
    return make_group([n] * r + [k * n])


def bound_lzfs(n: int, k: int, r: int) -> BoundReport:
    """Best value of d_star + t(p-1)ell - t(kn/k1) over the admissible grid.

    The grid is every (p, k1) pair, every t in [1, k1-1] and every ell with
    t*theta(ell) <= r and theta(ell) >= 1; it is tiny, so it is enumerated
    exhaustively.  Falls back to the plain d_star report when nothing
    beats it.
    """
    if n < 2 or k < 2 or r < 1:
        raise BadParams("need n >= 2, k >= 2, r >= 1")
    group = _shape_group(n, k, r)
    base = d_star(group)
    best_delta = 0
    best_params: dict = {}
    for p, k1 in admissible_pk1(n, k):
        m = k * n // k1
        for t in range(1, k1):
            ell = 1
            while True:
                th = theta(ell, p)
                if t * th > r:
                    break
                if th >= 1:
                    delta = t * ((p - 1) * ell - m)
                    if delta > best_delta:
                        best_delta = delta
                        best_params = {"p": p, "k1": k1, "m": m, "t": t, "ell": ell}
                ell += 1
    if best_delta > 0:
        return BoundReport(
            group, base, base + best_delta, best_delta, FORMULA_LZFS, best_params
        )
    return BoundReport(group, base, base, 0, FORMULA_DSTAR)


def bound_est(n: int, k: int, r: int, t: int) -> BoundReport:
    """Logarithmic relaxation: d_star + t(p-1)/log(p) * log(r)
    - t(p-1)(log_p(t) + 1) - t*(kn/k1), maximized over admissible (p, k1)
    with k1 > t.  The bound is strict, so the integer form adds one."""
    if n < 2 or k < 2 or r < 1 or t < 1:
        raise BadParams("need n >= 2, k >= 2, r >= 1, t >= 1")
    if r < t:
        raise PreconditionFailed(f"need r >= t, got r={r} < t={t}")
    pairs = [(p, k1) for p, k1 in admissible_pk1(n, k) if k1 >= t + 1]
    if not pairs:
        raise PreconditionFailed(
            f"no (p, k1) with p | {n}, k1 | {k}, gcd(p,k1)=1 and k1 > t={t}"
        )
    group = _shape_group(n, k, r)
    base = d_star(group)
    best_expr = None
    best_params: dict = {}
    for p, k1 in pairs:
        m = k * n // k1
        expr = (
            t * (p - 1) / math.log(p) * math.log(r)
            - t * (p - 1) * (math.log(t, p) + 1)
            - t * m
        )
        if best_expr is None or expr > best_expr:
            best_expr = expr
            best_params = {"p": p, "k1": k1, "m": m, "t": t}
    lower = base + _strict_to_int(best_expr)
    return BoundReport(
        group,
        base,
        lower,
        lower - base,
        FORMULA_EST,
        best_params,
        real_value=base + best_expr,
    )


def bound_gene(g: GroupSpec) -> BoundReport:
    """Rank/exponent bound for non-p-groups:
    delta >= log2(log(m^r / |G|)) - 2*log2(log(m/2)) - m + log2(log 2) + 1,
    clamped at zero; when |G| = m^r the inner log(0) convention makes the
    clamp exact."""
    if len(factorize(g.order)) < 2:
        raise PGroup(f"{g} is a p-group")
    base = d_star(g)
    m = g.exponent
    rank = len(g.canonical)
    ratio = math.prod(m // d for d in g.canonical)  # m^r / |G|, exact
    params = {"m": m, "r": rank}
    if ratio == 1:
        return BoundReport(g, base, base, 0, FORMULA_GENE, params, real_value=0.0)
    expr = (
        math.log2(math.log(ratio))
        - 2 * math.log2(math.log(m / 2))
        - m
        + math.log2(math.log(2))
        + 1
    )
    delta = max(_strict_to_int(expr), 0)
    return BoundReport(
        g, base, base + delta, delta, FORMULA_GENE, params, real_value=expr
    )


def epsilon_for(N: int, m: int) -> float:
    """Threshold for the rank/exponent bound: whenever |G|/m^r is below the
    returned value (exponent m fixed), the bound's delta exceeds N.

    Inverts the delta > N condition; very large N or m underflow double
    precision to 0.0, which keeps the guarantee vacuously true.
    """
    if N < 1:
        raise BadParams("N must be >= 1")
    if m < 2 or len(factorize(m)) < 2:
        raise PrimePower(f"m={m} must have at least two distinct prime factors")
    c = N + 2 * math.log2(math.log(m / 2)) + m - math.log2(math.log(2)) - 1
    try:
        return math.exp(-math.exp(c * math.log(2)))
    except OverflowError:
        return 0.0


def bound_disc(n: int, r: int, p: int) -> int:
    """Lower bound (n-1)r + (p-1)ell + 1 on the distinct-lengths constant
    of C_n^r, with ell the unique index whose theta-window contains r."""
    if n < 2 or r < 1:
        raise BadParams("need n >= 2 and r >= 1")
    if not is_prime(p) or n % p != 0:
        raise BadParams(f"p={p} must be a prime divisor of n={n}")
    ell = 1
    while theta(ell + 1, p) <= r:
        ell += 1
    if theta(ell, p) < 1:
        raise NoAdmissibleEll(f"no ell with theta(ell) >= 1 and theta(ell) <= r={r}")
    return (n - 1) * r + (p - 1) * ell + 1


def bound_zhihe(g: GroupSpec, blocks, per_block_deltas) -> int:
    """Additivity over independent blocks of invariant factors:
    d_star(g) plus certified deltas of disjoint proper sub-sums."""
    blocks = [tuple(b) for b in blocks]
    deltas = list(per_block_deltas)
    if len(blocks) != len(deltas):
        raise BadPartition("one delta per block required")
    s = len(g.canonical)
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise BadPartition("blocks must be nonempty")
        if len(set(block)) != len(block):
            raise BadPartition(f"block {block} repeats an index")
        if any(not 0 <= i < s for i in block):
            raise BadPartition(f"block {block} is out of range for {s} factors")
        if len(block) >= s:
            raise BadPartition("each block must be a proper subset of the factors")
        if seen & set(block):
            raise BadPartition("blocks overlap")
        seen |= set(block)
    for delta in deltas:
        if delta < 0:
            raise BadPartition("certified deltas must be >= 0")
    return d_star(g) + sum(deltas)


def cnr_ckn_shape(g: GroupSpec) -> tuple[int, int, int] | None:
    """Recognize the canonical form n, ..., n, k*n with k >= 2; returns
    (n, k, r) or None."""
    d = g.canonical
    if len(d) < 2:
        return None
    n = d[0]
    if any(x != n for x in d[:-1]):
        return None
    if d[-1] % n != 0:
        return None
    k = d[-1] // n
    return (n, k, len(d) - 1) if k >= 2 else None


def lzfs_certificate_for(g: GroupSpec):
    """Build the lift certificate matching bound_lzfs, or None.

    The witness lives over the canonical coordinates of g; it is only
    usable as a search seed when g is already in canonical form.
    """
    shape = cnr_ckn_shape(g)
    if shape is None:
        return None
    n, k, r = shape
    report = bound_lzfs(n, k, r)
    if report.formula != FORMULA_LZFS:
        return None
    p = report.params
    return build_lzfs_certificate(n, k, r, p["p"], p["k1"], p["t"], p["ell"])


def all_bounds(g: GroupSpec, limits: SearchLimits | None = None) -> list[BoundReport]:
    """Every applicable formula for g, one report per row.

    The exact search runs only when limits are supplied; the formulas are
    always evaluated.
    """
    base = d_star(g)
    rows = [BoundReport(g, base, base, 0, FORMULA_DSTAR)]
    shape = cnr_ckn_shape(g)
    if shape is not None:
        n, k, r = shape
        lzfs = bound_lzfs(n, k, r)
        if lzfs.formula == FORMULA_LZFS:
            rows.append(lzfs)
        try:
            rows.append(bound_est(n, k, r, t=1))
        except PreconditionFailed:
            pass
    if len(factorize(g.order)) >= 2:
        rows.append(bound_gene(g))
    if limits is not None:
        seeds: tuple[GSequence, ...] = ()
        if g.orders == g.canonical:
            cert = lzfs_certificate_for(g)
            if cert is not None:
                seeds = (cert.sequence(),)
        try:
            result = davenport_exact(g, limits, seeds=seeds)
            rows.append(
                BoundReport(
                    g,
                    base,
                    result.value,
                    result.value - base,
                    FORMULA_EXACT,
                    {"nodes": result.nodes_explored},
                )
            )
        except BudgetExceeded as exc:
            # A truncated search still proves the incumbent's lower bound.
            rows.append(
                BoundReport(
                    g,
                    base,
                    exc.lower_bound,
                    exc.lower_bound - base,
                    FORMULA_EXACT,
                    {"nodes": exc.nodes, "exhausted": False},
                )
            )
    return rows


def best_bound(g: GroupSpec, limits: SearchLimits | None = None) -> BoundReport:
    """The strongest applicable bound; ties prefer exact, then constructive."""
    rows = all_bounds(g, limits)
    return max(rows, key=lambda b: (b.lower_bound, -_FORMULA_RANK[b.formula]))
