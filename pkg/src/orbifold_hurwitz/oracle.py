"""Brute-force Hurwitz numbers by counting monodromy factorizations.

A degree-d cover with r-fold orbifold structure over one point, labeled
profile mu over a second, and s simple branch points corresponds to a
tuple in the symmetric group S_d:

    sigma_0 * tau_1 * ... * tau_s * sigma_inf = identity,

where sigma_0 has cycle type (r, ..., r), each tau_k is a transposition,
sigma_inf has cycle type mu, the subgroup generated by sigma_0 and the
tau_k acts transitively on the d sheets (connectedness), and a labeling
assigns each of the n part labels to a cycle of sigma_inf of matching
length.  Dividing the labeled-tuple count by d! (cover isomorphisms) and
s! (unordered simple branch points) yields the orbifold Hurwitz number.
The 1/(d! s!) normalization is pinned down by three anchor values checked
in the test suite: the one-part base case 1/r, the two-part value 3/2 at
(r, mu) = (2, (3, 1)), and 2/3 at (r, mu) = (1, (2, 1)).

This module is deliberately independent of the edge-contraction recursion
(it never imports :mod:`orbifold_hurwitz.core`); exact enumeration over
S_d is the whole point.  Everything is deterministic and single-threaded;
the per-sigma_0 subtotals would also aggregate identically in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator

__all__ = [
    "BudgetExceededError",
    "FactorizationInstance",
    "PermutationTuple",
    "count_monodromy_tuples",
    "count_of_cycle_type",
    "cycle_type",
    "enumerate_monodromy_tuples",
    "estimated_steps",
    "label_assignment_count",
    "raw_tuple_count",
]

Perm = tuple[int, ...]


class BudgetExceededError(RuntimeError):
    """The requested enumeration exceeds the configured search budget."""


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[v] for v in p)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths of p, sorted descending."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def transpositions(d: int) -> list[Perm]:
    out = []
    for a in range(d):
        for b in range(a + 1, d):
            p = list(range(d))
            p[a], p[b] = b, a
            out.append(tuple(p))
    return out


def perms_of_cycle_type(d: int, target: tuple[int, ...]) -> list[Perm]:
    """All permutations of S_d with the given (descending) cycle type.

    Enumerates all of S_d and filters; intended for the desk scales
    (d <= 7) this oracle is built for.
    """
    return [p for p in permutations(range(d)) if cycle_type(p) == target]


def count_of_cycle_type(d: int, lengths: tuple[int, ...]) -> int:
    """|{p in S_d : cycle type == lengths}| = d! / prod(l) / prod(mult!)."""
    if sum(lengths) != d:
        raise ValueError("cycle lengths must sum to d")
    denom = 1
    mult: dict[int, int] = {}
    for length in lengths:
        denom *= length
        mult[length] = mult.get(length, 0) + 1
    for m in mult.values():
        denom *= factorial(m)
    return factorial(d) // denom


def label_assignment_count(mu: tuple[int, ...]) -> int:
    """Number of bijections from cycles of matching type onto the labels.

    A permutation whose cycle lengths agree with mu as a multiset admits
    prod over distinct part sizes of (multiplicity)! labelings.
    """
    mult: dict[int, int] = {}
    for p in mu:
        mult[p] = mult.get(p, 0) + 1
    ways = 1
    for m in mult.values():
        ways *= factorial(m)
    return ways


def _enumerate_label_assignments(
    mu: tuple[int, ...], cycle_lengths: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All assignments pi with cycle_lengths[pi[i]] == mu[i], explicitly.

    pi[i] is the cycle (by position in ``cycle_lengths``) that receives
    label i.  Enumerated rather than computed by formula; the formula
    value is asserted against this in the tests.
    """
    n = len(mu)
    if n != len(cycle_lengths):
        return []
    return [
        pi
        for pi in permutations(range(n))
        if all(cycle_lengths[pi[i]] == mu[i] for i in range(n))
    ]


def _is_transitive(d: int, generators: list[Perm]) -> bool:
    """Orbit of the generated subgroup = connected components of i -- p(i)."""
    parent = list(range(d))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    components = d
    for p in generators:
        for i in range(d):
            ra, rb = find(i), find(p[i])
            if ra != rb:
                parent[ra] = rb
                components -= 1
    return components == 1


def estimated_steps(r: int, d: int, s: int) -> int:
    """Cost model for the raw search: (#sigma_0) * (#transpositions)^s * (s + 1).

    Each candidate tuple costs about s permutation products plus one
    transitivity sweep, all linear in d; the d factor is dropped so the
    estimate stays a pure tuple count scale.
    """
    m = d // r
    n_sigma0 = count_of_cycle_type(d, (r,) * m)
    return n_sigma0 * comb(d, 2) ** s * (s + 1)


@dataclass(frozen=True)
class PermutationTuple:
    """One labeled factorization: the monodromy data of a single cover.

    ``labels[i]`` is the index (into the cycles of ``sigma_inf``) of the
    cycle carrying label i; it has length mu[i].  The defining relations
    sigma_0 tau_1 ... tau_s sigma_inf = id and transitivity hold for
    every tuple produced by :func:`enumerate_monodromy_tuples`.
    """

    sigma0: Perm
    taus: tuple[Perm, ...]
    sigma_inf: Perm
    labels: tuple[int, ...]

    def product(self) -> Perm:
        p = self.sigma0
        for tau in self.taus:
            p = compose(p, tau)
        return compose(p, self.sigma_inf)

    def is_transitive(self) -> bool:
        return _is_transitive(len(self.sigma0), [self.sigma0, *self.taus])


def _cycles_of(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = p[v]
        cycles.append(tuple(cycle))
    return cycles


def enumerate_monodromy_tuples(
    r: int,
    mu: tuple[int, ...],
    s: int,
    require_transitive: bool = True,
    sigma0: Perm | None = None,
) -> Iterator[PermutationTuple]:
    """Yield every labeled factorization for the given data.

    sigma_0 runs over the permutations of cycle type (r, ..., r) (or the
    single pinned representative), the tau_k over all transposition
    sequences of length s; sigma_inf is forced by the product relation
    and kept when its cycle type matches mu; each valid cycle labeling
    is yielded separately.  The transitivity filter can be dropped for
    diagnostics.
    """
    d = sum(mu)
    if d % r:
        raise ValueError("r must divide the profile degree")
    if s < 0:
        raise ValueError("s must be non-negative")
    m = d // r
    target = tuple(sorted(mu, reverse=True))
    taus = transpositions(d)
    if sigma0 is None:
        sigma0_choices = perms_of_cycle_type(d, (r,) * m)
    else:
        if cycle_type(sigma0) != (r,) * m:
            raise ValueError("sigma0 has the wrong cycle type")
        sigma0_choices = [sigma0]
    for sig in sigma0_choices:
        for tau_tuple in product(taus, repeat=s):
            p = sig
            for tau in tau_tuple:
                p = compose(p, tau)
            sigma_inf = invert(p)
            if cycle_type(sigma_inf) != target:
                continue
            if require_transitive and not _is_transitive(d, [sig, *tau_tuple]):
                continue
            lengths = tuple(len(c) for c in _cycles_of(sigma_inf))
            for labels in _enumerate_label_assignments(mu, lengths):
                yield PermutationTuple(sig, tau_tuple, sigma_inf, labels)


def raw_tuple_count(
    r: int,
    mu: tuple[int, ...],
    s: int,
    require_transitive: bool = True,
    sigma0: Perm | None = None,
) -> int:
    """Labeled monodromy tuples for the given data.

    Counts tuples (sigma_0, tau_1, ..., tau_s) with sigma_0 of type
    (r, ..., r), tau_k transpositions, whose product inverse has cycle
    type mu, weighted by the explicitly enumerated cycle labelings; the
    transitivity filter can be dropped for diagnostics, and ``sigma0``
    can pin the first permutation to a single representative.
    """
    d = sum(mu)
    if d % r:
        raise ValueError("r must divide the profile degree")
    if s < 0:
        raise ValueError("s must be non-negative")
    m = d // r
    target = tuple(sorted(mu, reverse=True))
    # the labeling count depends only on the cycle type, so enumerate the
    # assignments once against a type representative instead of per tuple
    labelings = len(_enumerate_label_assignments(mu, target))
    taus = transpositions(d)
    if sigma0 is None:
        sigma0_choices = perms_of_cycle_type(d, (r,) * m)
    else:
        if cycle_type(sigma0) != (r,) * m:
            raise ValueError("sigma0 has the wrong cycle type")
        sigma0_choices = [sigma0]
    count = 0
    for sig in sigma0_choices:
        for tau_tuple in product(taus, repeat=s):
            p = sig
            for tau in tau_tuple:
                p = compose(p, tau)
            if cycle_type(invert(p)) != target:
                continue
            if require_transitive and not _is_transitive(d, [sig, *tau_tuple]):
                continue
            count += labelings
    return count


@dataclass(frozen=True)
class FactorizationInstance:
    """One monodromy-counting problem, with enumeration limits.

    Requires r | d and s = 2g - 2 + d/r + n >= 0.  ``max_d`` and
    ``max_s`` cap the degree and branch count up front; ``max_steps``
    caps the estimated raw search before the enumeration starts (see
    :func:`estimated_steps`).
    """

    r: int
    g: int
    mu: tuple[int, ...]
    max_d: int = 6
    max_s: int = 12
    max_steps: int = 10**8

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.g < 0:
            raise ValueError("g must be non-negative")
        mu = tuple(self.mu)
        if not mu or any(p < 1 for p in mu):
            raise ValueError("profile parts must be positive integers")
        object.__setattr__(self, "mu", mu)
        if self.d % self.r:
            raise ValueError(f"r={self.r} must divide d={self.d}")
        if self.s < 0:
            raise ValueError("negative simple-branch count")
        if self.d > self.max_d:
            raise BudgetExceededError(
                f"degree {self.d} exceeds the configured cap {self.max_d}"
            )
        if self.s > self.max_s:
            raise BudgetExceededError(
                f"branch count {self.s} exceeds the configured cap {self.max_s}"
            )

    @property
    def d(self) -> int:
        return sum(self.mu)

    @property
    def n(self) -> int:
        return len(self.mu)

    @property
    def m(self) -> int:
        return self.d // self.r

    @property
    def s(self) -> int:
        return 2 * self.g - 2 + self.m + self.n


def count_monodromy_tuples(inst: FactorizationInstance) -> Fraction:
    """Orbifold Hurwitz number by exhaustive monodromy enumeration.

    Refuses loudly (never counts partially) when the estimated search
    exceeds ``inst.max_steps``.
    """
    steps = estimated_steps(inst.r, inst.d, inst.s)
    if steps > inst.max_steps:
        raise BudgetExceededError(
            f"estimated {steps} steps exceeds the budget {inst.max_steps}"
        )
    raw = raw_tuple_count(inst.r, inst.mu, inst.s)
    return Fraction(raw, factorial(inst.d) * factorial(inst.s))
