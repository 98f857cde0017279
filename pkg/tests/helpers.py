"""Shared test utilities: independent brute-force oracles and group
enumeration.  Everything here deliberately avoids the library's DP and
search code paths so it can serve as a second opinion."""

from __future__ import annotations

import itertools
from functools import lru_cache

from zerosum import GSequence, make_group


def brute_spectrum(s: GSequence) -> set[int]:
    """Zero-sum subsequence lengths by complete 2^|S| enumeration."""
    orders = s.group.orders
    terms = [t.residues for t in s.terms]
    lengths = set()
    for mask in range(1, 2 ** len(terms)):
        total = [0] * len(orders)
        count = 0
        for i, term in enumerate(terms):
            if mask >> i & 1:
                count += 1
                for j, (x, n) in enumerate(zip(term, orders)):
                    total[j] = (total[j] + x) % n
        if not any(total):
            lengths.add(count)
    return lengths


def element_order_multiset(orders) -> dict[int, int]:
    """Multiset of element orders of the product group, by enumeration."""
    out: dict[int, int] = {}
    for residues in itertools.product(*(range(n) for n in orders)):
        k = 1
        while any(x * k % n for x, n in zip(residues, orders)):
            k += 1
        out[k] = out.get(k, 0) + 1
    return out


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or first >= rest[0]:
                yield (first,) + rest


@lru_cache(maxsize=1)
def _partition_cache():
    return {n: list(_partitions(n)) for n in range(1, 8)}


def groups_of_order_up_to(bound: int):
    """All isomorphism classes of abelian groups with 2 <= |G| <= bound,
    each as a canonical GroupSpec."""
    from zerosum.groups import factorize

    for n in range(2, bound + 1):
        factors = factorize(n)
        per_prime = []
        for p, e in sorted(factors.items()):
            per_prime.append(
                [tuple(p**part for part in parts) for parts in _partition_cache()[e]]
            )
        for combo in itertools.product(*per_prime):
            orders = [d for chunk in combo for d in chunk]
            yield make_group(make_group(orders).canonical)
