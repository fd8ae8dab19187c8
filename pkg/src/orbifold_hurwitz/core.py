"""Exact counts of simple and orbifold Hurwitz numbers.

The central object is the "arrowed" count of degree-d covers with r-fold
orbifold structure over one point, a labeled profile mu = (mu_1, ..., mu_n)
over a second point, and simple branching elsewhere.  Writing

    d = mu_1 + ... + mu_n,      s = 2g - 2 + d/r + n,

the arrowed count satisfies a recursion in s (contract one of the s edges
of the associated graph), with the single seed value 1 at (g, n, mu) =
(0, 1, (r)).  Everything here is computed in exact rational arithmetic
(``fractions.Fraction``); no floating point is used anywhere.

Concurrency: all functions are pure.  ``MemoTable`` relies on CPython's
atomic dict operations; concurrent writers always store identical values
(the recursion is deterministic), so insert-or-get is last-writer
equivalent and needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Iterator

__all__ = [
    "DivisibilityError",
    "HurwitzIndex",
    "MemoTable",
    "arrowed_hurwitz",
    "canonical_profile",
    "jpt_h01",
    "jpt_h02",
    "orbifold_hurwitz",
    "partitions",
    "simple_ramification_count",
    "tree_number",
]

Profile = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DivisibilityError(ValueError):
    """The orbifold order r does not divide the profile degree d."""


def canonical_profile(mu: Iterable[int]) -> Profile:
    """Validate a profile and return it sorted in descending order."""
    parts = tuple(mu)
    if not parts:
        raise ValueError("profile must have at least one part")
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"profile parts must be positive integers, got {p!r}")
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class HurwitzIndex:
    """The triple (r, g, mu) naming one counting problem.

    r is the orbifold order, g the genus, and mu the ordered profile over
    the second branch point.  Derived quantities: degree ``d``, face count
    ``m = d/r`` and edge count ``s = 2g - 2 + d/r + n``, the latter two
    defined only when r divides d.
    """

    r: int
    g: int
    mu: Profile

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        if not isinstance(self.g, int) or self.g < 0:
            raise ValueError(f"g must be a non-negative integer, got {self.g!r}")
        parts = tuple(self.mu)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"profile parts must be positive integers, got {p!r}")
        if not parts:
            raise ValueError("profile must have at least one part")
        object.__setattr__(self, "mu", parts)

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def d(self) -> int:
        return sum(self.mu)

    @property
    def divisible(self) -> bool:
        """True when r | d, i.e. the count can be non-zero."""
        return self.d % self.r == 0

    @property
    def m(self) -> int:
        if not self.divisible:
            raise DivisibilityError(f"r={self.r} does not divide d={self.d}")
        return self.d // self.r

    @property
    def s(self) -> int:
        return 2 * self.g - 2 + self.m + self.n


def simple_ramification_count(idx: HurwitzIndex) -> int:
    """Number of simple branch points, s = 2g - 2 + d/r + n.

    Raises :class:`DivisibilityError` when r does not divide d.
    """
    return idx.s


class MemoTable:
    """Cache of arrowed counts keyed by (r, g, mu sorted descending).

    Canonicalizing mu is sound because the count is invariant under every
    permutation of the profile (vertex labels are interchangeable).
    Stored values never change once inserted; any two writers racing on a
    key would store the same Fraction, so no locking is required.
    """

    __slots__ = ("_table",)

    def __init__(self) -> None:
        self._table: dict[tuple[int, int, Profile], Fraction] = {}

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, key: tuple[int, int, Iterable[int]]) -> bool:
        r, g, mu = key
        return (r, g, canonical_profile(mu)) in self._table

    def lookup(self, r: int, g: int, mu: Iterable[int]) -> Fraction | None:
        return self._table.get((r, g, canonical_profile(mu)))


def _edge_count(r: int, g: int, mu: Profile) -> int | None:
    """s for (r, g, mu), or None when r does not divide the degree."""
    d = sum(mu)
    if d % r:
        return None
    return 2 * g - 2 + d // r + len(mu)


def _submultiset_splits(
    rest: Profile,
) -> list[tuple[Profile, Profile, int]]:
    """All ways to split the multiset ``rest`` into an ordered pair (I, J).

    Returns (I, J, ways) triples where ``ways`` counts the index subsets
    realizing the sub-multiset I, i.e. the product of binomials over the
    distinct part values.  Grouping by value keeps the split sum polynomial
    in the number of *distinct* parts instead of 2^n.
    """
    values: list[int] = []
    mults: list[int] = []
    for v in rest:
        if values and values[-1] == v:
            mults[-1] += 1
        else:
            values.append(v)
            mults.append(1)
    splits: list[tuple[Profile, Profile, int]] = []
    for picks in product(*(range(m + 1) for m in mults)):
        ways = 1
        left: list[int] = []
        right: list[int] = []
        for v, m, k in zip(values, mults, picks):
            ways *= comb(m, k)
            left.extend([v] * k)
            right.extend([v] * (m - k))
        splits.append((tuple(left), tuple(right), ways))
    return splits


def _arrowed(r: int, g: int, mu: Profile, table: dict) -> Fraction:
    """Arrowed count for canonical (descending) mu; recursion workhorse."""
    d = sum(mu)
    if d % r:
        return _ZERO
    if g < 0:
        return _ZERO
    n = len(mu)
    s = 2 * g - 2 + d // r + n
    if s < 0:
        return _ZERO
    if s == 0:
        # The recursion bottoms out at the single seed graph: one vertex,
        # no edges, all r dots at that vertex.
        return _ONE if (g == 0 and mu == (r,)) else _ZERO

    key = (r, g, mu)
    cached = table.get(key)
    if cached is not None:
        return cached

    acc = _ZERO

    # Contract an edge joining two distinct vertices: mu_i and mu_j merge.
    for i in range(n - 1):
        mi = mu[i]
        for j in range(i + 1, n):
            merged = tuple(
                sorted(
                    mu[:i] + (mi + mu[j],) + mu[i + 1 : j] + mu[j + 1 :],
                    reverse=True,
                )
            )
            assert _edge_count(r, g, merged) == s - 1
            child = _arrowed(r, g, merged, table)
            if child:
                acc += mi * mu[j] * child

    # Contract a loop at one vertex: mu_i breaks into a + b, and the loop
    # either cuts a handle (genus drops) or separates the surface (the
    # remaining parts distribute over the two sides).  Identical parts give
    # identical contributions, so group by value.
    loop_acc = _ZERO
    start = 0
    while start < n:
        value = mu[start]
        end = start
        while end < n and mu[end] == value:
            end += 1
        mult = end - start
        rest = mu[:start] + mu[end:] + (value,) * (mult - 1)
        rest = tuple(sorted(rest, reverse=True))
        inner = _ZERO
        if value >= 2:
            splits = _submultiset_splits(rest)
            for a in range(1, value):
                b = value - a
                handle = tuple(sorted(rest + (a, b), reverse=True))
                assert _edge_count(r, g - 1, handle) in (None, s - 1)
                child = _arrowed(r, g - 1, handle, table)
                if child:
                    inner += child
                for left, right, ways in splits:
                    mu1 = tuple(sorted((a,) + left, reverse=True))
                    mu2 = tuple(sorted((b,) + right, reverse=True))
                    s1 = _edge_count(r, 0, mu1)
                    s2 = _edge_count(r, g, mu2)
                    assert s1 is None or s2 is None or s1 + s2 == s - 1
                    for g1 in range(g + 1):
                        lhs = _arrowed(r, g1, mu1, table)
                        if not lhs:
                            continue
                        rhs = _arrowed(r, g - g1, mu2, table)
                        if rhs:
                            inner += ways * lhs * rhs
        if inner:
            loop_acc += value * mult * inner
        start = end

    acc += loop_acc / 2
    result = acc / s
    table[key] = result
    return result


def arrowed_hurwitz(idx: HurwitzIndex, memo: MemoTable | None = None) -> Fraction:
    """Arrowed Hurwitz count for ``idx``, memoized in ``memo``.

    Out-of-range queries evaluate to 0: non-divisible degree, negative
    genus, or negative edge count.  At s = 0 the value is 1 exactly for
    (g, n, mu) = (0, 1, (r)) and 0 otherwise.
    """
    if memo is None:
        memo = MemoTable()
    return _arrowed(idx.r, idx.g, canonical_profile(idx.mu), memo._table)


def orbifold_hurwitz(idx: HurwitzIndex, memo: MemoTable | None = None) -> Fraction:
    """Orbifold Hurwitz number: the arrowed count divided by mu_1 * ... * mu_n."""
    value = arrowed_hurwitz(idx, memo)
    scale = 1
    for p in idx.mu:
        scale *= p
    return value / scale


@lru_cache(maxsize=None)
def tree_number(d: int) -> int:
    """Number of trees on d labeled nodes, via edge elimination.

    Removing one of the d - 1 edges splits a tree into an a-node and a
    b-node piece; reconnecting gives

        (d - 1) T_d = (1/2) * sum_{a+b=d} a b C(d, a) T_a T_b,   T_1 = 1.

    The quotient is asserted to be integral.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if d == 1:
        return 1
    rhs = 0
    for a in range(1, d):
        b = d - a
        rhs += a * b * comb(d, a) * tree_number(a) * tree_number(b)
    value = Fraction(rhs, 2 * (d - 1))
    assert value.denominator == 1
    return int(value)


def jpt_h01(r: int, d: int) -> Fraction:
    """Closed form for the one-part orbifold Hurwitz number in genus 0.

    Equals d^(floor(d/r) - 2) / floor(d/r)! when r | d, and 0 otherwise
    (a cover needs d/r orbifold points upstairs).
    """
    if r < 1 or d < 1:
        raise ValueError("r and d must be positive")
    if d % r:
        return _ZERO
    m = d // r
    e = m - 2
    power = Fraction(d) ** e
    return power / factorial(m)


def jpt_h02(r: int, mu1: int, mu2: int) -> Fraction:
    """Closed form for the two-part orbifold Hurwitz number in genus 0.

    With <q> the fractional part of q, the value for r | (mu1 + mu2) is

        r^(<mu1/r> + <mu2/r>) * mu1^floor(mu1/r) * mu2^floor(mu2/r)
        / ((mu1 + mu2) * floor(mu1/r)! * floor(mu2/r)!)

    and 0 otherwise.  The exponent <mu1/r> + <mu2/r> is 0 or 1 whenever
    the divisibility holds, so the prefactor is integral.
    """
    if r < 1 or mu1 < 1 or mu2 < 1:
        raise ValueError("r, mu1, mu2 must be positive")
    if (mu1 + mu2) % r:
        return _ZERO
    frac_exponent = ((mu1 % r) + (mu2 % r)) // r
    prefactor = r**frac_exponent
    f1 = mu1 // r
    f2 = mu2 // r
    return Fraction(prefactor * mu1**f1 * mu2**f2, (mu1 + mu2) * factorial(f1) * factorial(f2))


def partitions(d: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Profile]:
    """Yield the partitions of d as descending tuples.

    ``max_parts`` bounds the length, ``max_part`` the largest entry.
    """
    if d < 0:
        return
    if d == 0:
        yield ()
        return
    limit = d if max_part is None else min(d, max_part)
    if max_parts is not None and max_parts < 1:
        return
    remaining_parts = None if max_parts is None else max_parts - 1
    for first in range(limit, 0, -1):
        for tail in partitions(d - first, remaining_parts, first):
            yield (first,) + tail
