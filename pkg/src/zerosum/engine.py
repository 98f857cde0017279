"""Zero-sum oracle and exhaustive searches.

The length spectrum of a sequence (the set of lengths of its nonempty
zero-sum subsequences) is computed by dynamic programming over
(partial sum, terms used) states.  Exact values of the Davenport constant
and of the distinct-lengths constant are computed by depth-first search
over multisets in a fixed element order, pruning a branch as soon as its
sum set rules out any improvement.  The Davenport kernel is JIT-compiled
with numba when available and runs as plain Python otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .certificates import (
    CLAIM_NON_DISPERSIVE,
    CLAIM_ZERO_SUM_FREE,
    Certificate,
)
from .errors import BadParams, BudgetExceeded
from .groups import GroupElement, GroupSpec, GSequence, factorize

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for the oracle and the exhaustive searches.

    max_cells bounds the DP table (cells = |G| * (|S|+1)); max_nodes bounds
    accepted search extensions; max_group_order bounds the precomputed
    addition tables.  Exceeding any of them raises BudgetExceeded rather
    than silently truncating.
    """

    max_nodes: int = 1_000_000_000
    max_cells: int = 100_000_000
    max_group_order: int = 1024


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class LengthSpectrum:
    """Sorted distinct lengths of the nonempty zero-sum subsequences."""

    lengths: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __contains__(self, n: int) -> bool:
        return n in self.lengths

    def __bool__(self) -> bool:
        return bool(self.lengths)

    def unique(self) -> int | None:
        return self.lengths[0] if len(self.lengths) == 1 else None

    def __str__(self) -> str:
        return "{" + ",".join(str(n) for n in self.lengths) + "}"


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: GSequence
    nodes_explored: int


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    claim: str
    spectrum: LengthSpectrum
    message: str


def length_spectrum(s: GSequence, limits: SearchLimits | None = None) -> LengthSpectrum:
    """Exact set of lengths of nonempty zero-sum subsequences of s.

    Maintains, term by term, a boolean table over (partial sum, number of
    terms used); the spectrum is the zero-sum row with length 0 removed.
    """
    limits = limits or DEFAULT_LIMITS
    g = s.group
    cells = g.order * (len(s) + 1)
    if cells > limits.max_cells:
        raise BudgetExceeded(
            f"spectrum table needs {cells} cells, budget is {limits.max_cells}"
        )
    rank = g.rank
    table = np.zeros((len(s) + 1, *g.orders), dtype=bool)
    table[(0,) + (0,) * rank] = True
    axes = tuple(range(1, rank + 1))
    for t in s.terms:
        shifted = np.roll(table, shift=t.residues, axis=axes)
        table[1:] |= shifted[:-1]
    zero_column = table[(slice(None),) + (0,) * rank]
    lengths = tuple(int(c) for c in np.flatnonzero(zero_column) if c >= 1)
    return LengthSpectrum(lengths)


def is_zero_sum_free(s: GSequence, limits: SearchLimits | None = None) -> bool:
    return not length_spectrum(s, limits)


def is_non_dispersive(s: GSequence, limits: SearchLimits | None = None) -> int | None:
    """The unique zero-sum length, or None.

    Zero-sum-free sequences report None as well: downstream constructions
    need the unique length to exist, so the two cases stay separate.
    """
    return length_spectrum(s, limits).unique()


# --------------------------------------------------------------------------
# Packed-element tables shared by the exhaustive searches.
#
# Elements are packed as mixed-radix indices over the as-given orders.  The
# searches walk candidates in a fixed order sorted along a maximal subgroup
# chain G = K_0 > K_1 > ... > K_T = {0} (leading coordinates pinned to zero,
# then a prime-step divisor ladder inside the next coordinate).  All
# candidates from some point on lie in a common K_t, which yields a strong
# bound on how much a branch can still grow.
#
# For |G| <= 128 the achievable-sum set lives in two 64-bit words; adding a
# fixed element h to every achievable sum is a rotation by h_j * stride_j
# inside each aligned block of n_j * stride_j bits, one rotation per nonzero
# coordinate of h, so the whole sum-set update is a handful of register ops.
# --------------------------------------------------------------------------


def _prime_steps(n: int) -> list[int]:
    steps: list[int] = []
    for p, e in sorted(factorize(n).items()):
        steps.extend([p] * e)
    return steps


@lru_cache(maxsize=64)
def _group_tables(orders: tuple[int, ...]):
    ng = int(np.prod(orders))
    rank = len(orders)
    res = np.indices(orders).reshape(rank, ng).T.astype(np.int64)
    strides = np.ones(rank, dtype=np.int64)
    for i in range(rank - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]
    mods = np.asarray(orders, dtype=np.int64)
    # One ng x ng temporary per coordinate keeps the peak memory flat.
    add = np.zeros((ng, ng), dtype=np.int64)
    for i in range(rank):
        col = res[:, i]
        add += ((col[:, None] + col[None, :]) % orders[i]) * strides[i]
    neg = ((-res) % mods) @ strides

    # Subgroup chain levels and sizes.
    steps_by_coord = [_prime_steps(n) for n in orders]
    chain_sizes = [ng]
    base_level = []
    for j in range(rank):
        base_level.append(len(chain_sizes) - 1)
        for p in steps_by_coord[j]:
            chain_sizes.append(chain_sizes[-1] // p)
    top = len(chain_sizes) - 1  # K_top = {0}
    levels = np.empty(ng, dtype=np.int64)
    for idx in range(ng):
        row = res[idx]
        j = 0
        while j < rank and row[j] == 0:
            j += 1
        if j == rank:
            levels[idx] = top
            continue
        lvl = base_level[j]
        d = 1
        for p in steps_by_coord[j]:
            if row[j] % (d * p) == 0:
                d *= p
                lvl += 1
            else:
                break
        levels[idx] = lvl

    nonzero = np.arange(1, ng, dtype=np.int64)
    order_key = np.lexsort((nonzero, levels[1:]))
    candidates = nonzero[order_key]
    cand_levels = levels[candidates]
    return (
        add.reshape(-1).astype(np.int64),
        neg.astype(np.int64),
        levels,
        np.asarray(chain_sizes, dtype=np.int64),
        candidates,
        cand_levels,
    )


def _split128(mask: int) -> tuple[int, int]:
    return mask & 0xFFFFFFFFFFFFFFFF, mask >> 64


@lru_cache(maxsize=64)
def _bit_tables(orders: tuple[int, ...]):
    """Rotation programs and masks for the two-word kernel (|G| <= 128)."""
    ng = int(np.prod(orders))
    if ng > 128:
        raise ValueError("bit tables need |G| <= 128")
    rank = len(orders)
    _, neg, levels, chain_sizes, candidates, cand_levels = _group_tables(orders)
    strides = [1] * rank
    for i in range(rank - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]

    # Per (coordinate, residue) rotation: shift, width - shift, and the two
    # block masks, all split into low/high words.
    rot_off = np.zeros(len(candidates), dtype=np.int64)
    rot_cnt = np.zeros(len(candidates), dtype=np.int64)
    shl, shr, lo0, lo1, hi0, hi1 = [], [], [], [], [], []
    block_masks: dict[tuple[int, int], tuple[int, int]] = {}
    for j in range(rank):
        width = orders[j] * strides[j]
        nblocks = ng // width
        for res in range(1, orders[j]):
            t = res * strides[j]
            low = 0
            for b in range(nblocks):
                low |= ((1 << (width - t)) - 1) << (b * width)
            high = ((1 << ng) - 1) & ~low
            block_masks[(j, res)] = (t, low, high)
    for i, packed in enumerate(candidates):
        residues = _unpack(orders, int(packed))
        rot_off[i] = len(shl)
        for j in range(rank):
            if residues[j] == 0:
                continue
            t, low, high = block_masks[(j, residues[j])]
            width = orders[j] * strides[j]
            shl.append(t)
            shr.append(width - t)
            a, b = _split128(low)
            lo0.append(a)
            lo1.append(b)
            a, b = _split128(high)
            hi0.append(a)
            hi1.append(b)
        rot_cnt[i] = len(shl) - rot_off[i]

    def themask(bit: int) -> tuple[int, int]:
        return _split128(1 << bit)

    negm0 = np.zeros(len(candidates), dtype=np.uint64)
    negm1 = np.zeros(len(candidates), dtype=np.uint64)
    selfm0 = np.zeros(len(candidates), dtype=np.uint64)
    selfm1 = np.zeros(len(candidates), dtype=np.uint64)
    for i, packed in enumerate(candidates):
        a, b = themask(int(neg[packed]))
        negm0[i], negm1[i] = a, b
        a, b = themask(int(packed))
        selfm0[i], selfm1[i] = a, b
    nlevels = len(chain_sizes)
    km0 = np.zeros(nlevels, dtype=np.uint64)
    km1 = np.zeros(nlevels, dtype=np.uint64)
    for t in range(nlevels):
        mask = 0
        for idx in range(ng):
            if levels[idx] >= t:
                mask |= 1 << idx
        a, b = _split128(mask)
        km0[t], km1[t] = a, b
    return (
        candidates,
        cand_levels,
        negm0,
        negm1,
        selfm0,
        selfm1,
        rot_off,
        rot_cnt,
        np.asarray(shl, dtype=np.uint64),
        np.asarray(shr, dtype=np.uint64),
        np.asarray(lo0, dtype=np.uint64),
        np.asarray(lo1, dtype=np.uint64),
        np.asarray(hi0, dtype=np.uint64),
        np.asarray(hi1, dtype=np.uint64),
        km0,
        km1,
        np.asarray(chain_sizes, dtype=np.int64),
    )


def _pack(orders: tuple[int, ...], residues) -> int:
    idx = 0
    for x, n in zip(residues, orders):
        idx = idx * n + x
    return idx


def _unpack(orders: tuple[int, ...], idx: int) -> tuple[int, ...]:
    out = []
    for n in reversed(orders):
        out.append(idx % n)
        idx //= n
    return tuple(reversed(out))


def _davenport_loop(ng, cand, cand_lvl, add, neg, lvlp, lvl_size, ntop, best0, max_nodes, best_wit):
    """Iterative DFS over zero-sum-free multisets; returns the longest one.

    A[d] marks the sums achievable from the first d chosen terms; a
    candidate h extends a branch iff -h is not achievable.  A child is
    explored only if its length plus (|K| - 1 - |sums in K|) can still beat
    the incumbent, K being the chain subgroup holding all later candidates.
    """
    ne = cand.shape[0]
    maxd = ng + 1
    A = np.zeros((maxd + 1, ng), dtype=np.uint8)
    cnt = np.zeros((maxd + 1, ntop + 1), dtype=np.int64)
    ptr = np.zeros(maxd + 1, dtype=np.int64)
    chosen = np.zeros(maxd + 1, dtype=np.int64)
    best = best0
    wlen = 0
    nodes = 0
    status = 0
    depth = 0
    while depth >= 0:
        i = ptr[depth]
        if i >= ne:
            depth -= 1
            continue
        ptr[depth] = i + 1
        hp = cand[i]
        if A[depth, neg[hp]] == 1:
            continue
        nodes += 1
        if nodes > max_nodes:
            status = 1
            break
        nd = depth + 1
        for x in range(ng):
            A[nd, x] = A[depth, x]
        for t in range(ntop + 1):
            cnt[nd, t] = cnt[depth, t]
        for x in range(ng):
            if A[depth, x] == 1:
                y = add[hp * ng + x]
                if A[nd, y] == 0:
                    A[nd, y] = 1
                    for t in range(lvlp[y] + 1):
                        cnt[nd, t] += 1
        if A[nd, hp] == 0:
            A[nd, hp] = 1
            for t in range(lvlp[hp] + 1):
                cnt[nd, t] += 1
        chosen[nd] = hp
        if nd > best:
            best = nd
            wlen = nd
            for z in range(nd):
                best_wit[z] = chosen[z + 1]
        lv = cand_lvl[i]
        if nd + (lvl_size[lv] - 1 - cnt[nd, lv]) > best:
            ptr[nd] = i
            depth = nd
    return status, best, wlen, nodes


def _pop64(x):
    c1 = np.uint64(0x5555555555555555)
    c2 = np.uint64(0x3333333333333333)
    c4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    f = np.uint64(0x0101010101010101)
    x = x - ((x >> np.uint64(1)) & c1)
    x = (x & c2) + ((x >> np.uint64(2)) & c2)
    x = (x + (x >> np.uint64(4))) & c4
    return (x * f) >> np.uint64(56)


def _davenport_loop_bits(
    ne,
    cand,
    cand_lvl,
    negm0,
    negm1,
    selfm0,
    selfm1,
    rot_off,
    rot_cnt,
    shl,
    shr,
    lo0,
    lo1,
    hi0,
    hi1,
    km0,
    km1,
    lvl_size,
    init_id,
    init_m0,
    init_m1,
    best0,
    max_nodes,
    maxd,
    best_wit,
):
    """Two-word variant of the search loop for |G| <= 128.

    The achievable-sum set is (a0, a1); shifting it by the candidate is a
    per-coordinate block rotation (precomputed masks), so a node costs a
    few dozen register operations.  When init_id >= 0 the search is rooted
    at that forced first term (used by the orbit cover).
    """
    zero = np.uint64(0)
    w64 = np.uint64(64)
    A0 = np.zeros(maxd + 2, dtype=np.uint64)
    A1 = np.zeros(maxd + 2, dtype=np.uint64)
    ptr = np.zeros(maxd + 2, dtype=np.int64)
    chosen = np.zeros(maxd + 2, dtype=np.int64)
    depth = 0
    floor = 0
    if init_id >= 0:
        A0[1] = init_m0
        A1[1] = init_m1
        chosen[1] = init_id
        ptr[1] = 0
        depth = 1
        floor = 1
    best = best0
    wlen = 0
    nodes = 0
    status = 0
    while depth >= floor:
        i = ptr[depth]
        if i >= ne:
            depth -= 1
            continue
        ptr[depth] = i + 1
        a0 = A0[depth]
        a1 = A1[depth]
        if (a0 & negm0[i]) | (a1 & negm1[i]):
            continue
        nodes += 1
        if nodes > max_nodes:
            status = 1
            break
        x0 = a0
        x1 = a1
        for k in range(rot_off[i], rot_off[i] + rot_cnt[i]):
            t = shl[k]
            u = shr[k]
            y0 = x0 & lo0[k]
            y1 = x1 & lo1[k]
            z0 = x0 & hi0[k]
            z1 = x1 & hi1[k]
            if t < w64:
                s0 = y0 << t
                s1 = (y1 << t) | (y0 >> (w64 - t))
            else:
                s0 = zero
                s1 = y0 << (t - w64)
            if u < w64:
                r0 = (z0 >> u) | (z1 << (w64 - u))
                r1 = z1 >> u
            else:
                r0 = z1 >> (u - w64)
                r1 = zero
            x0 = s0 | r0
            x1 = s1 | r1
        n0 = a0 | x0 | selfm0[i]
        n1 = a1 | x1 | selfm1[i]
        nd = depth + 1
        A0[nd] = n0
        A1[nd] = n1
        chosen[nd] = cand[i]
        if nd > best:
            best = nd
            wlen = nd
            for z in range(nd):
                best_wit[z] = chosen[z + 1]
        lv = cand_lvl[i]
        inside = _pop64(n0 & km0[lv]) + _pop64(n1 & km1[lv])
        if nd + (lvl_size[lv] - 1 - np.int64(inside)) > best:
            ptr[nd] = i
            depth = nd
    return status, best, wlen, nodes


_compiled_loops: dict = {}


def _kernel(name: str):
    loop = {"bytes": _davenport_loop, "bits": _davenport_loop_bits}[name]
    if name not in _compiled_loops:
        if _HAVE_NUMBA:
            global _pop64
            if not hasattr(_pop64, "nopython_signatures"):
                _pop64 = numba.njit(cache=True, inline="always")(_pop64)
            _compiled_loops[name] = numba.njit(cache=True, nogil=True)(loop)
        else:
            _compiled_loops[name] = loop
    return _compiled_loops[name]


# --------------------------------------------------------------------------
# Symmetry reduction.  Any subgroup of the automorphism group preserves
# zero-sum-freeness and lengths, so the longest multiset equals the longest
# one containing some orbit representative (map any chosen element onto its
# representative).  Generators are built from coordinate swaps, unit
# scalings and shear maps, and every candidate map is verified to be an
# additive bijection before use; a finer-than-true orbit partition only
# costs time, never correctness.
# --------------------------------------------------------------------------


def _candidate_automorphisms(orders: tuple[int, ...]):
    import math as _math

    rank = len(orders)
    ng = int(np.prod(orders))
    res = np.indices(orders).reshape(rank, ng).T
    strides = np.ones(rank, dtype=np.int64)
    for i in range(rank - 2, -1, -1):
        strides[i] = strides[i + 1] * orders[i + 1]

    def pack_rows(rows):
        return (rows % np.asarray(orders)) @ strides

    maps = []
    for i in range(rank):
        for j in range(rank):
            if i < j and orders[i] == orders[j]:
                swapped = res.copy()
                swapped[:, [i, j]] = swapped[:, [j, i]]
                maps.append(pack_rows(swapped))
            if i != j:
                # shear: add c * x_i onto coordinate j, with c chosen so the
                # image of a generator of order n_i still dies at n_i
                c = orders[j] // _math.gcd(orders[i], orders[j])
                sheared = res.copy()
                sheared[:, j] = sheared[:, j] + c * res[:, i]
                maps.append(pack_rows(sheared))
    exponent = int(np.lcm.reduce(np.asarray(orders)))
    for u in range(2, exponent):
        if _math.gcd(u, exponent) == 1:
            maps.append(pack_rows(res * u))
    return maps


@lru_cache(maxsize=64)
def _aut_orbit_reps(orders: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Orbit representatives of the nonzero elements, and the orbit count.

    Each generated map is kept only if it verifies as an automorphism
    (bijective and additive on the full addition table).
    """
    ng = int(np.prod(orders))
    add, _, _, _, _, _ = _group_tables(orders)
    add2 = add.reshape(ng, ng)
    identity = np.arange(ng)
    verified = []
    for perm in _candidate_automorphisms(orders):
        if np.array_equal(perm, identity):
            continue
        if not np.array_equal(np.sort(perm), identity):
            continue
        if not np.array_equal(perm[add2], add2[np.ix_(perm, perm)]):
            continue
        verified.append(perm)
    parent = list(range(ng))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in verified:
        for x in range(ng):
            ra, rb = find(x), find(int(perm[x]))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(x) for x in range(1, ng)})
    return tuple(reps), len(reps)


def basis_witness(g: GroupSpec) -> GSequence:
    """The zero-sum-free sequence e_1^{n_1 - 1} ... e_r^{n_r - 1}.

    Every nonempty sub-multiset sums coordinatewise without wraparound, so
    this is always zero-sum free; it seeds the searches at length
    sum(n_i - 1) over the as-given orders.
    """
    terms = []
    for j, n in enumerate(g.orders):
        e = [0] * g.rank
        e[j] = 1
        terms.extend([GroupElement(tuple(e))] * (n - 1))
    return GSequence(g, tuple(terms))


def _sequence_from_packed(g: GroupSpec, packed) -> GSequence:
    return GSequence(
        g, tuple(GroupElement(_unpack(g.orders, int(p))) for p in packed)
    )


def _check_seed(g: GroupSpec, seed: GSequence, limits: SearchLimits) -> None:
    if seed.group.orders != g.orders:
        raise BadParams("seed sequence lives over a different group")
    if not is_zero_sum_free(seed, limits):
        raise BadParams("seed sequence is not zero-sum free")


def _davenport_bytes(g: GroupSpec, limits: SearchLimits, best0: int):
    ng = g.order
    add, neg, lvlp, lvl_size, cand, cand_lvl = _group_tables(g.orders)
    wit = np.full(ng + 2, -1, dtype=np.int64)
    status, best, wlen, nodes = _kernel("bytes")(
        ng,
        cand,
        cand_lvl,
        add,
        neg,
        lvlp,
        lvl_size,
        len(lvl_size) - 1,
        best0,
        limits.max_nodes,
        wit,
    )
    return status, int(best), wit[:wlen], int(nodes)


def _davenport_bits(g: GroupSpec, limits: SearchLimits, best0: int):
    ng = g.order
    (
        cand,
        cand_lvl,
        negm0,
        negm1,
        selfm0,
        selfm1,
        rot_off,
        rot_cnt,
        shl,
        shr,
        lo0,
        lo1,
        hi0,
        hi1,
        km0,
        km1,
        lvl_size,
    ) = _bit_tables(g.orders)
    reps, nreps = _aut_orbit_reps(g.orders)
    # The orbit cover re-enumerates a multiset once per distinct
    # representative it contains, so it pays off when representatives are
    # scarce relative to how long the multisets can get.
    use_cover = nreps * max(best0, 1) <= len(cand)
    starts: list[int] = list(reps) if use_cover else [-1]
    kernel = _kernel("bits")
    wit = np.full(ng + 2, -1, dtype=np.int64)
    best = best0
    witness_ids: np.ndarray | None = None
    total_nodes = 0
    remaining = limits.max_nodes
    status = 0
    for start in starts:
        m0, m1 = (np.uint64(0), np.uint64(0))
        if start >= 0:
            lo, hi = _split128(1 << start)
            m0, m1 = np.uint64(lo), np.uint64(hi)
        status, run_best, wlen, nodes = kernel(
            len(cand),
            cand,
            cand_lvl,
            negm0,
            negm1,
            selfm0,
            selfm1,
            rot_off,
            rot_cnt,
            shl,
            shr,
            lo0,
            lo1,
            hi0,
            hi1,
            km0,
            km1,
            lvl_size,
            start,
            m0,
            m1,
            best,
            remaining,
            ng + 1,
            wit,
        )
        total_nodes += int(nodes)
        remaining -= int(nodes)
        if run_best > best:
            best = int(run_best)
            witness_ids = wit[:wlen].copy()
        if status == 1:
            break
    return status, best, witness_ids, total_nodes


def davenport_exact(
    g: GroupSpec,
    limits: SearchLimits | None = None,
    seeds: tuple[GSequence, ...] = (),
) -> ExactResult:
    """Exact Davenport constant: 1 + the longest zero-sum-free length.

    Seeds are known zero-sum-free sequences (they are re-verified); the
    incumbent they establish lets the search discard branches that cannot
    exceed it, without affecting the result.
    """
    limits = limits or DEFAULT_LIMITS
    ng = g.order
    if ng > limits.max_group_order:
        raise BudgetExceeded(
            f"group order {ng} exceeds the search budget {limits.max_group_order}"
        )
    incumbent = basis_witness(g)
    for seed in seeds:
        _check_seed(g, seed, limits)
        if len(seed) > len(incumbent):
            incumbent = seed
    best0 = len(incumbent)
    if ng <= 128:
        status, best, wit_ids, nodes = _davenport_bits(g, limits, best0)
    else:
        status, best, wit_ids, nodes = _davenport_bytes(g, limits, best0)
        wit_ids = wit_ids if len(wit_ids) > 0 else None
    witness = (
        _sequence_from_packed(g, wit_ids) if wit_ids is not None else incumbent
    )
    if status == 1:
        raise BudgetExceeded(
            f"davenport search budget of {limits.max_nodes} nodes exceeded",
            lower_bound=best + 1,
            witness=witness,
            nodes=nodes,
        )
    return ExactResult(best + 1, witness, nodes)


def disc_exact(
    g: GroupSpec,
    limits: SearchLimits | None = None,
    seeds: tuple[GSequence, ...] = (),
) -> ExactResult:
    """Exact distinct-lengths constant.

    Value = 1 + the longest sequence whose zero-sum lengths form a set of
    size at most one.  Zero may occur as a term (a second zero, or a zero
    next to any other zero-sum, already forces two distinct lengths), so
    the search runs over all elements, not only nonzero ones.
    """
    limits = limits or DEFAULT_LIMITS
    ng = g.order
    if ng > limits.max_group_order:
        raise BudgetExceeded(
            f"group order {ng} exceeds the search budget {limits.max_group_order}"
        )
    add, _, _, _, _, _ = _group_tables(g.orders)
    incumbent = basis_witness(g)
    for seed in seeds:
        if seed.group.orders != g.orders:
            raise BadParams("seed sequence lives over a different group")
        if len(length_spectrum(seed, limits)) > 1:
            raise BadParams("seed sequence has two distinct zero-sum lengths")
        if len(seed) > len(incumbent):
            incumbent = seed
    state = {"best": len(incumbent), "witness": incumbent, "nodes": 0}
    chosen: list[int] = []

    def extend(min_idx: int, ach: list[set[int]]) -> None:
        length = len(chosen)
        for h in range(min_idx, ng):
            new = [set(level) for level in ach] + [set()]
            for c in range(length, -1, -1):
                bucket = new[c + 1]
                for a in ach[c]:
                    bucket.add(add[h * ng + a])
            zero_lengths = sum(1 for c in range(1, length + 2) if 0 in new[c])
            if zero_lengths >= 2:
                continue
            state["nodes"] += 1
            if state["nodes"] > limits.max_nodes:
                raise BudgetExceeded(
                    f"disc search budget of {limits.max_nodes} nodes exceeded",
                    lower_bound=state["best"] + 1,
                    witness=state["witness"],
                    nodes=state["nodes"],
                )
            chosen.append(h)
            if len(chosen) > state["best"]:
                state["best"] = len(chosen)
                state["witness"] = _sequence_from_packed(g, chosen)
            extend(h, new)
            chosen.pop()

    extend(0, [{0}])
    return ExactResult(state["best"] + 1, state["witness"], state["nodes"])


def verify_certificate(
    cert: Certificate, limits: SearchLimits | None = None
) -> VerifyReport:
    """Re-derive a certificate's claim from the spectrum oracle alone."""
    spectrum = length_spectrum(cert.sequence(), limits)
    if cert.claim == CLAIM_ZERO_SUM_FREE:
        passed = not spectrum
        message = (
            "sequence is zero-sum free"
            if passed
            else f"sequence has zero-sum subsequences of lengths {spectrum}"
        )
    elif cert.claim == CLAIM_NON_DISPERSIVE:
        passed = spectrum.lengths == (cert.unique_length,)
        message = (
            f"every nonempty zero-sum subsequence has length {cert.unique_length}"
            if passed
            else f"spectrum is {spectrum}, claimed {{{cert.unique_length}}}"
        )
    else:  # unreachable for parsed certificates
        raise BadParams(f"unknown claim kind {cert.claim!r}")
    return VerifyReport(passed, cert.claim, spectrum, message)
