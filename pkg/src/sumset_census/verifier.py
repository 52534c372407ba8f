"""Stand-alone finite verification of the collision-structure lemmas.

Each verifier sweeps a fully enumerable instance space and returns a
LemmaVerdict whose violation list is empty exactly when the statement held
everywhere.  The sweeps deliberately go through profile_naive, the exact
composition-enumeration oracle, rather than the census fast path, so they
double as an independent route to the same facts.

Verified statements, at desk scale:
  ortho      colliding vector pairs at the first colliding order have
             pairwise disjoint supports
  repno      at order h_star + 1, no sum has more than floor((k+1)/2)
             representations, and some sum has at least 2
  ddp        every s in [5h .. hq] is an (h+1)-fold dot product over some
             4-subset of [1..q], found both by an explicit division-algorithm
             recipe and by exhaustive enumeration
  paircount  the disjoint-support pair census matches 5h^2+1 and 5h^2-5
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass
from typing import NamedTuple

from .compositions import (
    Composition,
    compositions_table,
    disjoint_support_pairs,
    multiset_count,
)
from .census import RepBoundViolation, SupportOverlapViolation
from .engine import profile_naive, sumset_sizes
from .guards import MAX_SUBSETS_ENV, require_budget, subset_budget


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of one finite sweep; empty violations means the lemma held."""

    lemma: str
    params: dict
    instances: int
    violations: tuple
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        """One deterministic JSON line; elapsed time is deliberately left out
        so identical parameters give identical bytes."""
        payload = {
            "lemma": self.lemma,
            "params": dict(sorted(self.params.items())),
            "instances": self.instances,
            "passed": self.passed,
            "violations": [_jsonable(v) for v in self.violations],
        }
        return json.dumps(payload)


def _jsonable(value):
    if isinstance(value, tuple) and hasattr(value, "_asdict"):
        record = {"kind": type(value).__name__}
        record.update({k: _jsonable(v) for k, v in value._asdict().items()})
        return record
    if isinstance(value, (tuple, list, frozenset, set)):
        return [_jsonable(v) for v in value]
    return value


class MissingCollisionViolation(NamedTuple):
    """A set classified at order h_star showed no collision at h_star + 1."""

    elements: tuple[int, ...]
    h_star: int


class PairCountViolation(NamedTuple):
    """Disjoint-support pair census disagreeing with its closed form."""

    h: int
    total: int
    expected_total: int
    nontrivial: int
    expected_nontrivial: int


class DdpViolation(NamedTuple):
    """A claimed dot-product value the recipe or the enumeration missed."""

    stage: str
    s: int
    detail: str


@dataclass(frozen=True)
class DotProductRange:
    """Achievable (h+1)-fold dot products over 4-subsets of [1..q].

    lo..hi is the claimed interval [5h .. hq]; min/max are the observed
    extremes, h+1 and (h+1)q for a full enumeration.
    """

    h: int
    q: int
    lo: int
    hi: int
    min_achievable: int
    max_achievable: int
    achievable: frozenset[int]


def _order_is(elems: tuple[int, ...], h: int, m_of: list[int]) -> bool:
    """True when the B_h order of elems is exactly h (deficit first at h+1)."""
    sizes = sumset_sizes(elems, h + 1)
    for i in range(1, h + 1):
        if sizes[i - 1] != m_of[i]:
            return False
    return sizes[h] < m_of[h + 1]


def verify_ortho(
    q: int,
    h: int,
    sample: int | None = None,
    max_subsets: int | None = None,
) -> LemmaVerdict:
    """Sweep 4-subsets of [1..q] with B_h order exactly h: every pair of
    vectors colliding at order h+1 must have disjoint supports.

    sample, when given, caps the number of qualifying sets examined (the
    first ones in subset enumeration order, so runs are deterministic).
    """
    if q < 4:
        raise ValueError(f"need q >= 4, got {q}")
    if h < 1:
        raise ValueError(f"order must be >= 1, got h={h}")
    n_subsets = math.comb(q, 4)
    require_budget(
        f"ortho sweep over C({q},4) subsets", n_subsets, subset_budget(max_subsets),
        MAX_SUBSETS_ENV,
    )
    started = time.perf_counter()
    m_of = [multiset_count(i, 4) for i in range(h + 2)]
    examined = 0
    violations: list[SupportOverlapViolation] = []
    for elems in itertools.combinations(range(1, q + 1), 4):
        if not _order_is(elems, h, m_of):
            continue
        examined += 1
        for collision in profile_naive(elems, h + 1).collisions:
            for x, y in itertools.combinations(collision.vectors, 2):
                if any(u and v for u, v in zip(x, y)):
                    violations.append(
                        SupportOverlapViolation(elems, h, collision.n, x, y)
                    )
        if sample is not None and examined >= sample:
            break
    return LemmaVerdict(
        lemma="ortho",
        params={"q": q, "h": h, "sample": 0 if sample is None else sample},
        instances=examined,
        violations=tuple(violations),
        elapsed_s=time.perf_counter() - started,
    )


def verify_repno(
    q: int, k: int, h: int, max_subsets: int | None = None
) -> LemmaVerdict:
    """Sweep k-subsets of [1..q] with B_h order exactly h: at order h+1 no sum
    may have more than floor((k+1)/2) representations, and at least one sum
    must have two (the collision that capped the order)."""
    if k < 2:
        raise ValueError(f"set size must be >= 2, got k={k}")
    if q < k:
        raise ValueError(f"need q >= k, got q={q}, k={k}")
    if h < 1:
        raise ValueError(f"order must be >= 1, got h={h}")
    n_subsets = math.comb(q, k)
    require_budget(
        f"representation sweep over C({q},{k}) subsets",
        n_subsets,
        subset_budget(max_subsets),
        MAX_SUBSETS_ENV,
    )
    started = time.perf_counter()
    bound = (k + 1) // 2
    m_of = [multiset_count(i, k) for i in range(h + 2)]
    examined = 0
    violations: list[NamedTuple] = []
    for elems in itertools.combinations(range(1, q + 1), k):
        sizes = sumset_sizes(elems, h + 1)
        if any(sizes[i - 1] != m_of[i] for i in range(1, h + 1)):
            continue
        if sizes[h] == m_of[h + 1]:
            continue
        examined += 1
        profile = profile_naive(elems, h + 1)
        for collision in profile.collisions:
            if len(collision.vectors) > bound:
                violations.append(
                    RepBoundViolation(elems, h, collision.n, len(collision.vectors))
                )
        if profile.max_reps < 2:
            violations.append(MissingCollisionViolation(elems, h))
    return LemmaVerdict(
        lemma="repno",
        params={"q": q, "k": k, "h": h, "bound": bound},
        instances=examined,
        violations=tuple(violations),
        elapsed_s=time.perf_counter() - started,
    )


class RealizedTotal(NamedTuple):
    """Witness that s equals composition . elements at degree h+1."""

    s: int
    composition: Composition
    elements: tuple[int, ...]


def realize_total(s: int, h: int, q: int) -> RealizedTotal:
    """Division-algorithm witness for s in [5h .. hq] as an (h+1)-fold dot
    product over a 4-subset of [1..q].

    Write s = a*h + b; when the remainder is zero shift to a-1 and b = h so b
    names a usable element.  If a == b the single element a carries all h+1
    summands, otherwise a carries h and b carries one.  The two remaining
    slots are filled with the smallest unused elements, which contribute
    nothing (weight zero).  Raises ValueError when no witness exists under
    this recipe (for example b > q).
    """
    if q < 7:
        raise ValueError(f"need q >= 7 for distinct fillers, got q={q}")
    if h < 1:
        raise ValueError(f"order must be >= 1, got h={h}")
    if not (5 * h <= s <= h * q):
        raise ValueError(f"s={s} outside claimed interval [{5 * h}, {h * q}]")
    a, b = divmod(s, h)
    if b == 0:
        a, b = a - 1, h
    if a > q:
        raise ValueError(f"quotient element {a} exceeds q={q}")
    if b > q:
        raise ValueError(f"remainder element {b} exceeds q={q}")
    weights = {a: h + 1} if a == b else {a: h, b: 1}
    elems = sorted(weights)
    filler = 1
    while len(elems) < 4:
        if filler not in weights:
            elems.append(filler)
        filler += 1
        if filler > q + 1:
            raise ValueError(f"fillers exhausted below q={q}")
    elems = tuple(sorted(elems))
    if elems[-1] > q:
        raise ValueError(f"witness element {elems[-1]} exceeds q={q}")
    composition = tuple(weights.get(e, 0) for e in elems)
    realized = sum(c * e for c, e in zip(composition, elems))
    if realized != s or sum(composition) != h + 1:
        raise RuntimeError(f"recipe realized {realized} at degree {sum(composition)}, wanted {s}")
    return RealizedTotal(s, composition, elems)


def verify_ddp(
    q: int, h: int, max_subsets: int | None = None
) -> tuple[LemmaVerdict, DotProductRange]:
    """Check that every s in [5h .. hq] is realized as an (h+1)-fold dot
    product over a 4-subset of [1..q], by recipe and by exhaustive
    enumeration, and that the achievable range is [h+1 .. (h+1)q].
    """
    if q < 7:
        raise ValueError(f"need q >= 7, got {q}")
    if h < 1:
        raise ValueError(f"order must be >= 1, got h={h}")
    n_subsets = math.comb(q, 4)
    require_budget(
        f"dot-product enumeration over C({q},4) subsets",
        n_subsets,
        subset_budget(max_subsets),
        MAX_SUBSETS_ENV,
    )
    started = time.perf_counter()
    lo, hi = 5 * h, h * q
    violations: list[DdpViolation] = []
    for s in range(lo, hi + 1):
        try:
            realize_total(s, h, q)
        except ValueError as exc:
            violations.append(DdpViolation("recipe", s, str(exc)))

    achievable: set[int] = set()
    comps = compositions_table(h + 1, 4)
    for elems in itertools.combinations(range(1, q + 1), 4):
        e0, e1, e2, e3 = elems
        for x in comps:
            achievable.add(x[0] * e0 + x[1] * e1 + x[2] * e2 + x[3] * e3)
    for s in range(lo, hi + 1):
        if s not in achievable:
            violations.append(DdpViolation("enumeration", s, "not attained by any (A, x)"))

    min_seen = min(achievable)
    max_seen = max(achievable)
    if min_seen != h + 1:
        violations.append(DdpViolation("range", min_seen, f"minimum should be {h + 1}"))
    if max_seen != (h + 1) * q:
        violations.append(DdpViolation("range", max_seen, f"maximum should be {(h + 1) * q}"))
    if max_seen > 4 * (h + 1) * q:
        violations.append(
            DdpViolation("range", max_seen, f"maximum exceeds 4(h+1)q = {4 * (h + 1) * q}")
        )
    verdict = LemmaVerdict(
        lemma="ddp",
        params={"q": q, "h": h},
        instances=hi - lo + 1,
        violations=tuple(violations),
        elapsed_s=time.perf_counter() - started,
    )
    dot_range = DotProductRange(
        h=h,
        q=q,
        lo=lo,
        hi=hi,
        min_achievable=min_seen,
        max_achievable=max_seen,
        achievable=frozenset(achievable),
    )
    return verdict, dot_range


def verify_paircount(h_max: int) -> LemmaVerdict:
    """Compare the brute-force disjoint-support pair census for k=4 against
    the closed forms 5h^2+1 (all pairs) and 5h^2-5 (nontrivial pairs)."""
    if h_max < 1:
        raise ValueError(f"need h_max >= 1, got {h_max}")
    started = time.perf_counter()
    violations: list[PairCountViolation] = []
    for h in range(1, h_max + 1):
        census = disjoint_support_pairs(h, 4)
        expected_total = 5 * h * h + 1
        expected_nontrivial = 5 * h * h - 5
        if (
            census.total_disjoint_pairs != expected_total
            or census.nontrivial_pairs != expected_nontrivial
        ):
            violations.append(
                PairCountViolation(
                    h,
                    census.total_disjoint_pairs,
                    expected_total,
                    census.nontrivial_pairs,
                    expected_nontrivial,
                )
            )
    return LemmaVerdict(
        lemma="paircount",
        params={"h_max": h_max, "k": 4},
        instances=h_max,
        violations=tuple(violations),
        elapsed_s=time.perf_counter() - started,
    )
