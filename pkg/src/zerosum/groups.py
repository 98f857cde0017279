"""Finite abelian groups given as lists of cyclic orders.

A group is a direct sum C_{n_1} + ... + C_{n_r} stored exactly as supplied,
together with its invariant-factor form d_1 | d_2 | ... | d_s computed once
at construction.  Elements are dense residue vectors over the as-supplied
orders; sequences are finite multisets of elements (stored as tuples, but
all semantics are multiset semantics).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadOrder, EmptyGroup, ParseError, RankMismatch


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; orders here are small."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def _invariant_factors(orders: tuple[int, ...]) -> tuple[int, ...]:
    """Merge prime-power parts into the divisibility chain d_1 | ... | d_s.

    For each prime the prime-power parts are sorted descending and the k-th
    largest is placed into the k-th invariant from the top.
    """
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        for p, e in factorize(n).items():
            by_prime.setdefault(p, []).append(p**e)
    width = max(len(parts) for parts in by_prime.values())
    for parts in by_prime.values():
        parts.sort(reverse=True)
        parts.extend([1] * (width - len(parts)))
    top_down = [
        math.prod(column) for column in zip(*(by_prime[p] for p in sorted(by_prime)))
    ]
    return tuple(reversed(top_down))


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group: as-given cyclic orders plus canonical form."""

    orders: tuple[int, ...]
    canonical: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return self.canonical[-1]

    def zero(self) -> GroupElement:
        return GroupElement((0,) * len(self.orders))

    def literal(self) -> str:
        return ",".join(str(n) for n in self.orders)

    def __str__(self) -> str:
        return " + ".join(f"C{n}" for n in self.orders)


@dataclass(frozen=True)
class GroupElement:
    """A residue vector; residues[i] lies in [0, orders[i] - 1]."""

    residues: tuple[int, ...]

    def literal(self) -> str:
        return ",".join(str(x) for x in self.residues)

    def __str__(self) -> str:
        return "(" + self.literal() + ")"


@dataclass(frozen=True)
class GSequence:
    """A finite multiset of group elements; term order is storage only."""

    group: GroupSpec
    terms: tuple[GroupElement, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def append(self, term: GroupElement) -> GSequence:
        return GSequence(self.group, self.terms + (term,))


def make_group(orders) -> GroupSpec:
    """Build a GroupSpec, computing the canonical invariant factors."""
    orders = tuple(orders)
    if not orders:
        raise EmptyGroup("a group needs at least one cyclic factor")
    for n in orders:
        if not isinstance(n, int) or n < 2:
            raise BadOrder(f"cyclic order {n!r} is not an integer >= 2")
    return GroupSpec(orders, _invariant_factors(orders))


def d_star(g: GroupSpec) -> int:
    """The chain lower bound 1 + sum(d_i - 1) over the invariant factors."""
    return 1 + sum(d - 1 for d in g.canonical)


def element(g: GroupSpec, residues) -> GroupElement:
    """Make an element of g, reducing each residue mod its order."""
    residues = tuple(residues)
    if len(residues) != g.rank:
        raise RankMismatch(f"expected {g.rank} residues, got {len(residues)}")
    return GroupElement(tuple(x % n for x, n in zip(residues, g.orders)))


def _check_member(g: GroupSpec, a: GroupElement) -> None:
    if len(a.residues) != g.rank:
        raise RankMismatch(
            f"element has {len(a.residues)} residues but the group has rank {g.rank}"
        )


def elem_add(g: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    _check_member(g, a)
    _check_member(g, b)
    return GroupElement(
        tuple((x + y) % n for x, y, n in zip(a.residues, b.residues, g.orders))
    )


def elem_neg(g: GroupSpec, a: GroupElement) -> GroupElement:
    _check_member(g, a)
    return GroupElement(tuple((-x) % n for x, n in zip(a.residues, g.orders)))


def elem_scale(g: GroupSpec, a: GroupElement, k: int) -> GroupElement:
    _check_member(g, a)
    return GroupElement(tuple((x * k) % n for x, n in zip(a.residues, g.orders)))


def sequence(g: GroupSpec, terms) -> GSequence:
    """Make a sequence over g from an iterable of residue iterables."""
    return GSequence(g, tuple(element(g, t) for t in terms))


def seq_sum(s: GSequence) -> GroupElement:
    """The sum of all terms; the empty sequence sums to zero."""
    total = s.group.zero()
    for t in s.terms:
        total = elem_add(s.group, total, t)
    return total


def parse_group_literal(text: str) -> GroupSpec:
    """Parse a comma-separated order list such as ``2,2,2,2,6``."""
    parts = text.strip().split(",")
    try:
        orders = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad group literal {text!r}") from exc
    try:
        return make_group(orders)
    except (EmptyGroup, BadOrder) as exc:
        raise ParseError(f"bad group literal {text!r}: {exc}") from exc


def parse_element_literal(g: GroupSpec, text: str) -> GroupElement:
    """Parse an element literal; residues must already be reduced."""
    parts = text.strip().split(",")
    try:
        residues = [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"bad element literal {text!r}") from exc
    if len(residues) != g.rank:
        raise ParseError(
            f"element literal {text!r} has {len(residues)} entries, expected {g.rank}"
        )
    for x, n in zip(residues, g.orders):
        if not 0 <= x < n:
            raise ParseError(f"residue {x} out of range [0, {n - 1}] in {text!r}")
    return GroupElement(tuple(residues))
