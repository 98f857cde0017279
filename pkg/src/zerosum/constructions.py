"""Constructive machinery: residue tables, non-dispersive sequences over
C_n^r, and the lifting step that turns them into long zero-sum-free
sequences over C_n^r + C_m.

Throughout, n = p*q for a prime p.  The base table M(ell) holds ell-tuples
over A = {0, q, ..., (p-1)q}; the working table W(ell) replaces its
single-entry columns so that, for any choice of rows a_1 < ... < a_s and
coefficients v_i in [1, p-1],

    sum_j |n - sum_i v_i * W[a_i, j]|_n  ==  omega(ell) - sum_i v_i,

which is exactly what forces every nonempty zero-sum subsequence of the
built sequence to have length omega(ell).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .certificates import CLAIM_ZERO_SUM_FREE, Certificate, make_certificate
from .engine import SearchLimits, length_spectrum
from .errors import BadParams, BudgetExceeded, PreconditionFailed
from .groups import GroupElement, GroupSpec, GSequence, is_prime, make_group

Column = tuple[int, ...]


@dataclass(frozen=True)
class MTable:
    """An ordered table of residue columns; rows = ell, entries in [0, n-1]."""

    ell: int
    p: int
    q: int
    kind: str  # "M" or "W"
    columns: tuple[Column, ...]

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def row(self, b: int) -> tuple[int, ...]:
        """Entries of 1-based row b across all columns."""
        return tuple(col[b - 1] for col in self.columns)


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters of the non-dispersive construction over C_n^r."""

    n: int
    p: int
    ell: int
    r: int

    @property
    def q(self) -> int:
        return self.n // self.p


@dataclass(frozen=True)
class LiftComponent:
    group: GroupSpec
    seq: GSequence
    unique_length: int


@dataclass(frozen=True)
class LiftSpec:
    """Input of the zero-sum-free lift into G_1 + ... + G_t + C_m."""

    components: tuple[LiftComponent, ...]
    m: int
    multipliers: tuple[int, ...] | None = None


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise BadParams(f"{p} is not prime")


def theta(ell: int, p: int) -> int:
    """Rank threshold of the construction: 2(p^ell - 1)/(p-1) - ell,
    or 2^ell - 1 - ell when p = 2."""
    if ell < 1:
        raise BadParams("ell must be >= 1")
    _require_prime(p)
    if p == 2:
        return 2**ell - 1 - ell
    return 2 * (p**ell - 1) // (p - 1) - ell


def _omega_value(ell: int, n: int, p: int) -> int:
    # Internal form that also covers (p=2, ell=1), where the value n/2 is
    # still needed by the column-sum identities.
    if p == 2:
        return n // 2 if ell == 1 else 2 ** (ell - 2) * n
    return p ** (ell - 1) * n


def omega(ell: int, n: int, p: int) -> int:
    """The forced zero-sum length: p^(ell-1) * n, or 2^(ell-2) * n for p = 2.

    Rejects (p=2, ell=1): the sequence construction needs ell >= 2 there.
    """
    if ell < 1:
        raise BadParams("ell must be >= 1")
    _require_prime(p)
    if n < 2 or n % p != 0:
        raise BadParams(f"p={p} must divide n={n}")
    if p == 2 and ell == 1:
        raise BadParams("ell must be >= 2 when p = 2")
    return _omega_value(ell, n, p)


def _m1_columns(p: int, q: int) -> tuple[int, ...]:
    return (q,) if p == 2 else (q, (p - 1) * q)


def build_M(ell: int, p: int, q: int, max_cols: int = 2_000_000) -> MTable:
    """The base table: all ell-tuples with a first nonzero entry from the
    single-entry seed set and later entries from A = {0, q, ..., (p-1)q}."""
    if ell < 1:
        raise BadParams("ell must be >= 1")
    _require_prime(p)
    if q < 1:
        raise BadParams("q must be >= 1")
    ncols = theta(ell, p) + ell
    if ncols > max_cols:
        raise BudgetExceeded(f"table would have {ncols} columns, budget {max_cols}")
    a_set = tuple(q * i for i in range(p))
    m1 = _m1_columns(p, q)
    columns: list[Column] = []
    for t in range(ell):
        for head in m1:
            for tail in itertools.product(a_set, repeat=ell - t - 1):
                columns.append((0,) * t + (head,) + tail)
    if len(set(columns)) != ncols:  # the union above is disjoint by design
        raise RuntimeError("base table construction degenerated")
    return MTable(ell, p, q, "M", tuple(sorted(columns)))


def build_M_recursive(ell: int, p: int, q: int) -> MTable:
    """Same table by the step rule M(l+1) = M(l) x A  union  {0}^l x M(1)."""
    if ell < 1:
        raise BadParams("ell must be >= 1")
    _require_prime(p)
    a_set = tuple(q * i for i in range(p))
    columns = [(c,) for c in _m1_columns(p, q)]
    for level in range(1, ell):
        columns = [col + (a,) for col in columns for a in a_set] + [
            (0,) * level + (c,) for c in _m1_columns(p, q)
        ]
    return MTable(ell, p, q, "M", tuple(sorted(columns)))


def check_prop_M(
    ell: int, p: int, q: int, n: int, max_checks: int = 5_000_000
) -> bool:
    """Exhaustively check the three table identities.

    i) column count equals theta(ell) + ell; for every nonempty choice of
    rows a_1 < ... < a_s and coefficients v_i in [1, p-1]:
    ii) the column sums of |sum_i v_i M[a_i, j]|_n add up to omega(ell), and
    iii) negating the combination leaves that total unchanged.
    """
    if n != p * q:
        raise BadParams(f"n={n} must equal p*q={p * q}")
    table = build_M(ell, p, q)
    if table.ncols != theta(ell, p) + ell:
        return False
    combos = p**ell - 1
    if combos > max_checks:
        raise BudgetExceeded(f"{combos} coefficient vectors exceed {max_checks}")
    target = _omega_value(ell, n, p)
    for coeffs in itertools.product(range(p), repeat=ell):
        if not any(coeffs):
            continue
        pos = 0
        neg = 0
        for col in table.columns:
            s = sum(v * c for v, c in zip(coeffs, col))
            pos += s % n
            neg += (-s) % n
        if pos != target or neg != target:
            return False
    return True


def _unit_columns(ell: int, values: tuple[int, ...]) -> list[Column]:
    return [
        (0,) * t + (v,) + (0,) * (ell - t - 1) for t in range(ell) for v in values
    ]


def _adjacent_columns(ell: int, first: int, second: int) -> list[Column]:
    return [
        (0,) * t + (first, second) + (0,) * (ell - t - 2) for t in range(ell - 1)
    ]


def _multiset_remove(columns: list[Column], victims: list[Column]) -> None:
    for v in victims:
        try:
            columns.remove(v)
        except ValueError:
            raise RuntimeError(f"column {v} missing during table surgery") from None


def build_W(ell: int, p: int, q: int) -> MTable:
    """The working table with exactly theta(ell) columns.

    For p > 2 the single-entry columns {q, (p-1)q} are swapped for
    single-entry 1 columns.  For p = 2 and ell >= 3 the surgery removes the
    single-q and adjacent (q,q) columns, adds adjacent (1,q) columns, and
    trades the (q,0,...,0,q) column for (q,0,...,0,1).  For p = 2, ell = 2
    the table is the single column (1,1).  All removals and unions happen
    as multiset operations in exactly this order; the final size is
    asserted to catch degenerate collisions.
    """
    if ell < 1:
        raise BadParams("ell must be >= 1")
    _require_prime(p)
    if p == 2 and ell == 1:
        raise BadParams("ell must be >= 2 when p = 2")
    if p == 2 and ell == 2:
        return MTable(ell, p, q, "W", ((1, 1),))
    columns = list(build_M(ell, p, q).columns)
    if p > 2:
        _multiset_remove(columns, _unit_columns(ell, (q, (p - 1) * q)))
        columns.extend(_unit_columns(ell, (1,)))
    else:
        _multiset_remove(columns, _unit_columns(ell, (q,)))
        _multiset_remove(columns, _adjacent_columns(ell, q, q))
        columns.extend(_adjacent_columns(ell, 1, q))
        _multiset_remove(columns, [(q,) + (0,) * (ell - 2) + (q,)])
        columns.append((q,) + (0,) * (ell - 2) + (1,))
    if len(columns) != theta(ell, p):
        raise RuntimeError("working table surgery produced the wrong size")
    return MTable(ell, p, q, "W", tuple(sorted(columns)))


def build_nondispersive(params: ConstructionParams) -> tuple[GSequence, int]:
    """The length (n-1)r + (p-1)ell sequence over C_n^r whose nonempty
    zero-sum subsequences all have length omega(ell; n, p).

    Terms: every basis element n-1 times, then, for each table row b, the
    element x_b with the row's entries on the first theta(ell) coordinates,
    p-1 times.
    """
    n, p, ell, r = params.n, params.p, params.ell, params.r
    if n < 2:
        raise BadParams("n must be >= 2")
    _require_prime(p)
    if n % p != 0:
        raise BadParams(f"p={p} must divide n={n}")
    if ell < 1 or (p == 2 and ell < 2):
        raise BadParams("ell must be >= 1, and >= 2 when p = 2")
    th = theta(ell, p)
    if th < 1 or r < th:
        raise BadParams(f"need r >= theta(ell)={th} >= 1, got r={r}")
    table = build_W(ell, p, params.q)
    group = make_group([n] * r)
    terms: list[GroupElement] = []
    for j in range(r):
        e = [0] * r
        e[j] = 1
        terms.extend([GroupElement(tuple(e))] * (n - 1))
    for b in range(1, ell + 1):
        row = table.row(b)
        x_b = GroupElement(tuple(row) + (0,) * (r - th))
        terms.extend([x_b] * (p - 1))
    return GSequence(group, tuple(terms)), omega(ell, n, p)


def choose_u(x: int, m: int) -> int:
    """Smallest u in [1, m-1] with x*u = gcd(x, m) mod m."""
    if m < 2 or x < 1:
        raise BadParams("need m >= 2 and x >= 1")
    g = math.gcd(x, m)
    for u in range(1, m):
        if (x * u) % m == g:
            return u
    raise RuntimeError(f"no multiplier for x={x}, m={m}; gcd is not a residue")


def lift_zero_sum_free(
    spec: LiftSpec,
    verify: bool = True,
    limits: SearchLimits | None = None,
) -> GSequence:
    """Lift non-dispersive component sequences to a zero-sum-free sequence
    over G_1 + ... + G_t + C_m.

    Each term of S_i gains u_i on the new cyclic coordinate, where
    x_i * u_i = gcd(x_i, m) mod m; then e is appended m - y - 1 times with
    y = sum gcd(x_i, m).  Any zero-sum subsequence would need length x_i
    from each participating block, making the last coordinate sum to
    something in [1, m-1]; hence none exists.
    """
    if spec.m < 2:
        raise BadParams("m must be >= 2")
    if not spec.components:
        raise BadParams("need at least one component")
    y = sum(math.gcd(c.unique_length, spec.m) for c in spec.components)
    if y >= spec.m:
        raise PreconditionFailed(f"y = sum of gcds = {y} must be < m = {spec.m}")
    multipliers = spec.multipliers
    if multipliers is None:
        multipliers = tuple(choose_u(c.unique_length, spec.m) for c in spec.components)
    if len(multipliers) != len(spec.components):
        raise BadParams("one multiplier per component required")
    for comp, u in zip(spec.components, multipliers):
        g = math.gcd(comp.unique_length, spec.m)
        if not 1 <= u < spec.m or (comp.unique_length * u) % spec.m != g:
            raise PreconditionFailed(
                f"multiplier {u} does not send {comp.unique_length} to its gcd mod {spec.m}"
            )
    if verify:
        for i, comp in enumerate(spec.components):
            try:
                spectrum = length_spectrum(comp.seq, limits)
            except BudgetExceeded:
                continue  # too large to re-check; trusted from its certificate
            if spectrum.lengths != (comp.unique_length,):
                raise PreconditionFailed(
                    f"component {i} has spectrum {spectrum}, "
                    f"not {{{comp.unique_length}}}"
                )
    orders: list[int] = []
    for comp in spec.components:
        orders.extend(comp.group.orders)
    orders.append(spec.m)
    lifted = make_group(orders)
    terms: list[GroupElement] = []
    offset = 0
    total_rank = lifted.rank
    for comp, u in zip(spec.components, multipliers):
        width = comp.group.rank
        for term in comp.seq:
            padded = (
                (0,) * offset
                + term.residues
                + (0,) * (total_rank - 1 - offset - width)
                + (u,)
            )
            terms.append(GroupElement(padded))
        offset += width
    e = GroupElement((0,) * (total_rank - 1) + (1,))
    terms.extend([e] * (spec.m - y - 1))
    return GSequence(lifted, tuple(terms))


def _hypothesis(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionFailed(message)


def build_lzfs_certificate(
    n: int,
    k: int,
    r: int,
    p: int,
    k1: int,
    t: int,
    ell: int,
    verify: bool = True,
    limits: SearchLimits | None = None,
) -> Certificate:
    """Zero-sum-free certificate over C_n^r + C_{kn}.

    The first t*theta(ell) coordinates split into t blocks (the last block
    absorbs all leftover coordinates up to r); each block carries the
    non-dispersive construction, and the blocks are lifted jointly into the
    extra C_{kn} factor.  The resulting length is at least
    d_star + t(p-1)ell - t(kn/k1) - 1.
    """
    _hypothesis(n >= 2, f"n={n} must be >= 2")
    _hypothesis(k >= 2, f"k={k} must be >= 2")
    _hypothesis(is_prime(p), f"p={p} must be prime")
    _hypothesis(n % p == 0, f"p={p} must divide n={n}")
    _hypothesis(k1 >= 2, f"k1={k1} must be >= 2")
    _hypothesis(k % k1 == 0, f"k1={k1} must divide k={k}")
    _hypothesis(math.gcd(p, k1) == 1, f"gcd(p={p}, k1={k1}) must be 1")
    _hypothesis(1 <= t <= k1 - 1, f"t={t} must lie in [1, {k1 - 1}]")
    _hypothesis(ell >= 1, f"ell={ell} must be >= 1")
    _hypothesis(not (p == 2 and ell == 1), "ell must be >= 2 when p = 2")
    th = theta(ell, p)
    _hypothesis(th >= 1, f"theta(ell)={th} must be >= 1")
    _hypothesis(r >= t * th, f"r={r} must be >= t*theta(ell) = {t * th}")
    block_ranks = [th] * (t - 1) + [r - (t - 1) * th]
    components = []
    for block_rank in block_ranks:
        seq, unique = build_nondispersive(ConstructionParams(n, p, ell, block_rank))
        components.append(LiftComponent(seq.group, seq, unique))
    lifted = lift_zero_sum_free(
        LiftSpec(tuple(components), k * n), verify=verify, limits=limits
    )
    provenance = f"lzfs n={n} k={k} r={r} p={p} k1={k1} t={t} ell={ell}"
    return make_certificate(lifted, CLAIM_ZERO_SUM_FREE, provenance)
