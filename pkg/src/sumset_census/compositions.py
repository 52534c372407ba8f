"""Exact combinatorics of sum vectors.

A composition here is a k-tuple x of nonnegative integers with x_1+...+x_k = h.
It encodes one multiset of h summands drawn from a k-element set A = {a_1 <
... < a_k}: entry x_i says how many times a_i is used, so the represented sum
is the dot product x . A.  Everything downstream (sumset profiles, collision
censuses, lemma sweeps) is phrased in terms of these vectors.

All arithmetic is exact; counts come from math.comb and can never wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .guards import BudgetExceededError

Composition = tuple[int, ...]

# Ceiling on vector pairs one disjoint-support scan may visit.
DEFAULT_PAIR_BUDGET = 100_000_000


def multiset_count(h: int, k: int) -> int:
    """Number of compositions of h into k nonnegative parts: C(h+k-1, k-1).

    This is also the largest possible size of the h-fold sumset hA of a
    k-element set, attained exactly when A is a B_h-set.  By convention
    multiset_count(0, k) == 1 (the empty sum).
    """
    if h < 0:
        raise ValueError(f"fold count must be nonnegative, got h={h}")
    if k < 1:
        raise ValueError(f"set size must be positive, got k={k}")
    return math.comb(h + k - 1, k - 1)


def tetrahedral(n: int) -> int:
    """n-th tetrahedral number C(n+2, 3): 0, 1, 4, 10, 20, 35, ..."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return math.comb(n + 2, 3)


def figurate_gap(h: int, step: int, k: int) -> int:
    """Deficit forced at order h+step by a first collision at order h+1.

    Equals multiset_count(step-1, k); for k=4 these are the tetrahedral
    numbers tetrahedral(step).  The predicted frequent size at the step is
    multiset_count(h+step, k) - figurate_gap(h, step, k).
    """
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if h < 1:
        raise ValueError(f"base order must be >= 1, got h={h}")
    return multiset_count(step - 1, k)


def enumerate_compositions(h: int, k: int) -> Iterator[Composition]:
    """Yield all compositions of h into k nonnegative parts, lexicographically.

    multiset_count(h, k) tuples total, each summing to h.
    """
    if h < 0:
        raise ValueError(f"fold count must be nonnegative, got h={h}")
    if k < 1:
        raise ValueError(f"set size must be positive, got k={k}")
    yield from _compositions(h, k)


def _compositions(h: int, k: int) -> Iterator[Composition]:
    if k == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in _compositions(h - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def compositions_table(h: int, k: int) -> tuple[Composition, ...]:
    """All compositions of h into k parts, materialized once per (h, k)."""
    return tuple(enumerate_compositions(h, k))


def support(x: Iterable[int]) -> frozenset[int]:
    """1-based index set of the positive entries of a vector.

    support((2, 0, 0, 1)) == {1, 4}.
    """
    return frozenset(i for i, v in enumerate(x, start=1) if v > 0)


def dot(x: Iterable[int], y: Iterable[int]) -> int:
    """Integer dot product of two equal-length vectors."""
    return sum(a * b for a, b in zip(x, y, strict=True))


@dataclass(frozen=True)
class PairCensus:
    """Counts of unordered disjoint-support pairs among compositions of h."""

    h: int
    k: int
    total_disjoint_pairs: int
    nontrivial_pairs: int


def disjoint_support_pairs(
    h: int, k: int, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> PairCensus:
    """Census of pairs {x, y} of distinct compositions of h with x . y == 0.

    Counted by brute-force pairwise scan; vanishing dot product and disjoint
    support are the same predicate on nonnegative vectors.  nontrivial_pairs
    drops the C(k,2) pairs where both vectors have singleton support: those
    encode h*a = h*b, impossible for distinct elements, so they can never
    witness a collision.  For k=4 the two counts follow the closed forms
    5h^2+1 and 5h^2-5.
    """
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got h={h}")
    if k < 2:
        raise ValueError(f"set size must be >= 2, got k={k}")
    m = multiset_count(h, k)
    pairs = m * (m - 1) // 2
    if pairs > pair_budget:
        raise BudgetExceededError("disjoint-support pair scan", pairs, pair_budget)
    comps = compositions_table(h, k)
    singleton = [max(x) == h for x in comps]
    total = 0
    nontrivial = 0
    for i, x in enumerate(comps):
        for j in range(i + 1, m):
            if dot(x, comps[j]) == 0:
                total += 1
                if not (singleton[i] and singleton[j]):
                    nontrivial += 1
    return PairCensus(h, k, total, nontrivial)
