"""Exhaustive census of iterated sumset sizes over all k-subsets of [1..q].

One sweep visits every k-subset once, computes |iA| for i = 1..h_cap with the
bitmap kernel, classifies the B_h order from the first deficit, and checks the
collision-structure lemmas on the way: the deficit ladder below the first
collision, the representation bound at order h_star + 1, and pairwise support
disjointness of colliding vectors.  Per-order size histograms, population
tallies and any violations are accumulated exactly.

Work is partitioned by largest element into shards.  Shard tallies merge by
plain addition and list concatenation followed by sorting, so the merged
report is independent of the shard count and of whether shards ran inline or
in worker processes.  Per subset, the collision scan recounts the sumset size
at order h_star + 1 by composition enumeration; any disagreement with the
bitmap kernel aborts the sweep.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .compositions import (
    Composition,
    compositions_table,
    multiset_count,
    tetrahedral,
)
from .engine import SetLike, elements_of, sumset_sizes
from .guards import MAX_SUBSETS_ENV, require_budget, subset_budget

DEFAULT_STRONG_RATIO = 10.0


@dataclass(frozen=True)
class SizeHistogram:
    """Subset counts by h-fold sumset size; totals C(q,k) for a full census."""

    h: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merged(self, other: "SizeHistogram") -> "SizeHistogram":
        if other.h != self.h:
            raise ValueError(f"cannot merge histograms for folds {self.h} and {other.h}")
        counts = Counter(self.counts)
        counts.update(other.counts)
        return SizeHistogram(self.h, dict(counts))


class DeficitLadderViolation(NamedTuple):
    """Deficit below its figurate bound at h_star + step; expected never."""

    elements: tuple[int, ...]
    h_star: int
    step: int
    deficit: int
    bound: int


class RepBoundViolation(NamedTuple):
    """More representations of one sum at order h_star + 1 than floor((k+1)/2)."""

    elements: tuple[int, ...]
    h_star: int
    n: int
    reps: int


class SupportOverlapViolation(NamedTuple):
    """Colliding vector pair at order h_star + 1 with overlapping supports."""

    elements: tuple[int, ...]
    h_star: int
    n: int
    x: Composition
    y: Composition


@dataclass(frozen=True)
class GapReport:
    """Triangular-gap ladder read off one k=4 size histogram.

    ladder[j] = multiset_count(h,4) - tetrahedral(j) are the predicted
    frequent sizes; gap_differences are their successive drops (the triangular
    numbers 1, 3, 6, ...).  A rung is confirmed when its count strictly
    exceeds every count at sizes strictly inside the adjacent gaps; ratios
    report that contrast (None when the adjacent bands are empty, an infinite
    contrast).  strongly_confirmed additionally demands a ratio of at least
    the configured threshold.
    """

    h: int
    ladder: tuple[int, ...]
    counts: tuple[int, ...]
    intermediate_max: tuple[int, ...]
    gap_differences: tuple[int, ...]
    confirmed: tuple[bool, ...]
    strongly_confirmed: tuple[bool, ...]
    ratios: tuple[float | None, ...]
    inconclusive: bool


def detect_gaps(
    hist: SizeHistogram, h: int, strong_ratio: float = DEFAULT_STRONG_RATIO
) -> GapReport:
    """Rung confirmation for the k=4 deficit ladder at fold h.

    The report is marked inconclusive when some rung was never attained or
    when no sizes exist strictly between rungs (tiny h), in which case the
    mechanical confirmations say little.
    """
    if hist.h != h:
        raise ValueError(f"histogram is for fold {hist.h}, not {h}")
    if h < 1:
        raise ValueError(f"fold count must be >= 1, got h={h}")
    m = multiset_count(h, 4)
    ladder = tuple(m - tetrahedral(j) for j in range(h))
    counts = tuple(hist.counts.get(s, 0) for s in ladder)
    bands = [
        tuple(range(ladder[j + 1] + 1, ladder[j])) for j in range(len(ladder) - 1)
    ]
    intermediate_max = tuple(
        max((hist.counts.get(s, 0) for s in band), default=0) for band in bands
    )
    gap_differences = tuple(ladder[j] - ladder[j + 1] for j in range(len(ladder) - 1))
    confirmed = []
    strongly = []
    ratios: list[float | None] = []
    for j, rung_count in enumerate(counts):
        adjacent = (bands[j - 1] if j > 0 else ()) + (bands[j] if j < len(bands) else ())
        adj_max = max((hist.counts.get(s, 0) for s in adjacent), default=0)
        ok = rung_count > adj_max
        confirmed.append(ok)
        if adj_max == 0:
            ratios.append(None)
            strongly.append(ok)
        else:
            ratios.append(rung_count / adj_max)
            strongly.append(ok and rung_count >= strong_ratio * adj_max)
    inconclusive = any(c == 0 for c in counts) or all(len(b) == 0 for b in bands)
    return GapReport(
        h=h,
        ladder=ladder,
        counts=counts,
        intermediate_max=intermediate_max,
        gap_differences=gap_differences,
        confirmed=tuple(confirmed),
        strongly_confirmed=tuple(strongly),
        ratios=tuple(ratios),
        inconclusive=inconclusive,
    )


@dataclass
class _ShardTally:
    """Raw accumulators for one shard; merged by addition."""

    hist: list[Counter]
    bstar: Counter
    exceptional: Counter
    rep_profile: Counter
    capped: int
    subsets: int
    ladder_violations: list[DeficitLadderViolation]
    rep_violations: list[RepBoundViolation]
    support_violations: list[SupportOverlapViolation]


def _census_shard(args: tuple[int, int, int, int, int]) -> _ShardTally:
    q, k, h_cap, shard_index, shards = args
    m_of = [multiset_count(i, k) for i in range(h_cap + 1)]
    tetra = [tetrahedral(j) for j in range(h_cap + 1)]
    comp_of = {d: compositions_table(d, k) for d in range(2, h_cap + 1)}
    # per composition: bitmask of occupied slots, for pairwise disjointness
    supp_of = {
        d: [
            sum(1 << i for i, v in enumerate(x) if v)
            for x in comps
        ]
        for d, comps in comp_of.items()
    }
    rep_bound = (k + 1) // 2
    tally = _ShardTally(
        hist=[Counter() for _ in range(h_cap)],
        bstar=Counter(),
        exceptional=Counter(),
        rep_profile=Counter(),
        capped=0,
        subsets=0,
        ladder_violations=[],
        rep_violations=[],
        support_violations=[],
    )
    hist = tally.hist
    for top in range(k, q + 1):
        if top % shards != shard_index:
            continue
        for rest in itertools.combinations(range(1, top), k - 1):
            elems = rest + (top,)
            tally.subsets += 1
            # bitmap kernel, inlined: fold i lives in [i*min .. i*max],
            # offset by i*min, so a fold is k shifts and k ors
            base = elems[0]
            shifts = [e - base for e in elems]
            cur = 0
            for s in shifts:
                cur |= 1 << s
            sizes = [cur.bit_count()]
            for _ in range(h_cap - 1):
                nxt = 0
                for s in shifts:
                    nxt |= cur << s
                cur = nxt
                sizes.append(cur.bit_count())
            first_deficit = 0
            for i in range(1, h_cap + 1):
                s_i = sizes[i - 1]
                hist[i - 1][s_i] += 1
                if s_i < m_of[i]:
                    if not first_deficit:
                        first_deficit = i
                elif first_deficit:
                    raise RuntimeError(
                        f"deficit at fold {first_deficit} of {elems} vanished at fold {i}"
                    )
            if not first_deficit:
                tally.capped += 1
                continue
            h_star = first_deficit - 1
            tally.bstar[h_star] += 1
            if m_of[first_deficit] - sizes[first_deficit - 1] >= 2:
                tally.exceptional[h_star] += 1
            for step in range(1, h_cap - h_star + 1):
                deficit = m_of[h_star + step] - sizes[h_star + step - 1]
                if deficit < tetra[step]:
                    tally.ladder_violations.append(
                        DeficitLadderViolation(elems, h_star, step, deficit, tetra[step])
                    )
            # collision structure at the first colliding order
            comps = comp_of[first_deficit]
            seen: dict[int, int] = {}
            dups: dict[int, list[int]] = {}
            if k == 4:
                e0, e1, e2, e3 = elems
                for idx, x in enumerate(comps):
                    t = x[0] * e0 + x[1] * e1 + x[2] * e2 + x[3] * e3
                    if t in seen:
                        dups.setdefault(t, [seen[t]]).append(idx)
                    else:
                        seen[t] = idx
            else:
                for idx, x in enumerate(comps):
                    t = sum(c * e for c, e in zip(x, elems))
                    if t in seen:
                        dups.setdefault(t, [seen[t]]).append(idx)
                    else:
                        seen[t] = idx
            if len(seen) != sizes[first_deficit - 1]:
                raise RuntimeError(
                    f"kernel size {sizes[first_deficit - 1]} != enumerated size "
                    f"{len(seen)} at fold {first_deficit} of {elems}"
                )
            if not dups:
                raise RuntimeError(
                    f"deficit at fold {first_deficit} of {elems} but no collision found"
                )
            supp = supp_of[first_deficit]
            max_reps = 1
            for t, idxs in dups.items():
                r = len(idxs)
                if r > max_reps:
                    max_reps = r
                if r > rep_bound:
                    tally.rep_violations.append(RepBoundViolation(elems, h_star, t, r))
                for i in range(r):
                    for j in range(i + 1, r):
                        if supp[idxs[i]] & supp[idxs[j]]:
                            tally.support_violations.append(
                                SupportOverlapViolation(
                                    elems, h_star, t, comps[idxs[i]], comps[idxs[j]]
                                )
                            )
            tally.rep_profile[(h_star, max_reps)] += 1
    return tally


@dataclass(frozen=True)
class CensusReport:
    """Merged result of one full census sweep.

    bstar_counts[h] is the number of subsets whose B_h order is exactly h
    (uncapped, so h < h_cap); exceptional_counts[h] those among them whose
    deficit at order h+1 is at least 2 (more than one collision).  capped
    subsets never enter either tally.  rep_profiles[h][r] counts subsets with
    h_star == h whose largest representation multiplicity at order h+1 is r.
    The violation tuples are empty unless a lemma actually failed.
    """

    q: int
    k: int
    h_cap: int
    histograms: dict[int, SizeHistogram]
    bstar_counts: dict[int, int]
    exceptional_counts: dict[int, int]
    capped: int
    gaps: dict[int, GapReport]
    rep_profiles: dict[int, dict[int, int]]
    ladder_violations: tuple[DeficitLadderViolation, ...] = field(default=())
    rep_violations: tuple[RepBoundViolation, ...] = field(default=())
    support_violations: tuple[SupportOverlapViolation, ...] = field(default=())

    @property
    def total_subsets(self) -> int:
        return math.comb(self.q, self.k)

    @property
    def violation_count(self) -> int:
        return (
            len(self.ladder_violations)
            + len(self.rep_violations)
            + len(self.support_violations)
        )

    def to_json(self) -> str:
        """Canonical JSON report; identical parameters give identical bytes."""
        payload = {
            "q": self.q,
            "k": self.k,
            "h_cap": self.h_cap,
            "histograms": {
                str(h): {
                    str(size): self.histograms[h].counts[size]
                    for size in sorted(self.histograms[h].counts, reverse=True)
                }
                for h in range(1, self.h_cap + 1)
            },
            "bstar_counts": {
                str(h): self.bstar_counts.get(h, 0) for h in range(1, self.h_cap)
            },
            "exceptional_counts": {
                str(h): self.exceptional_counts.get(h, 0) for h in range(1, self.h_cap)
            },
            "capped": self.capped,
            "gaps": {
                str(h): {
                    "ladder": list(report.ladder),
                    "confirmed": list(report.confirmed),
                    "ratios": [
                        None if r is None else round(r, 6) for r in report.ratios
                    ],
                }
                for h, report in sorted(self.gaps.items())
            },
        }
        return json.dumps(payload, indent=2) + "\n"

    def histograms_csv(self) -> str:
        """All histograms as CSV rows h,size,count sorted by (h, size desc)."""
        lines = ["h,size,count"]
        for h in range(1, self.h_cap + 1):
            counts = self.histograms[h].counts
            for size in sorted(counts, reverse=True):
                lines.append(f"{h},{size},{counts[size]}")
        return "\n".join(lines) + "\n"


def run_census(
    q: int,
    k: int = 4,
    h_cap: int = 6,
    shards: int = 1,
    workers: int = 1,
    max_subsets: int | None = None,
) -> CensusReport:
    """Census every k-subset of [1..q] up to fold h_cap.

    The subset count C(q,k) is checked against the sweep budget before any
    enumeration.  shards controls the partition (by largest element, modulo
    shards); workers > 1 runs shards in processes.  Reports are identical for
    every shards/workers choice.
    """
    if k < 2:
        raise ValueError(f"set size must be >= 2, got k={k}")
    if q < k:
        raise ValueError(f"need q >= k, got q={q}, k={k}")
    if h_cap < 1:
        raise ValueError(f"classification cap must be >= 1, got {h_cap}")
    if shards < 1 or workers < 1:
        raise ValueError(f"shards and workers must be >= 1, got {shards}, {workers}")
    n_subsets = math.comb(q, k)
    require_budget(
        f"census of C({q},{k}) subsets",
        n_subsets,
        subset_budget(max_subsets),
        MAX_SUBSETS_ENV,
    )
    shard_args = [(q, k, h_cap, s, shards) for s in range(shards)]
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=min(workers, shards)) as pool:
            tallies = list(pool.map(_census_shard, shard_args))
    else:
        tallies = [_census_shard(a) for a in shard_args]

    hist = [Counter() for _ in range(h_cap)]
    bstar: Counter = Counter()
    exceptional: Counter = Counter()
    rep_profile: Counter = Counter()
    capped = 0
    subsets_seen = 0
    ladder_v: list[DeficitLadderViolation] = []
    rep_v: list[RepBoundViolation] = []
    support_v: list[SupportOverlapViolation] = []
    for t in tallies:
        for i in range(h_cap):
            hist[i].update(t.hist[i])
        bstar.update(t.bstar)
        exceptional.update(t.exceptional)
        rep_profile.update(t.rep_profile)
        capped += t.capped
        subsets_seen += t.subsets
        ladder_v.extend(t.ladder_violations)
        rep_v.extend(t.rep_violations)
        support_v.extend(t.support_violations)

    if subsets_seen != n_subsets:
        raise RuntimeError(
            f"shard merge saw {subsets_seen} subsets, expected {n_subsets}"
        )
    for i in range(h_cap):
        if sum(hist[i].values()) != n_subsets:
            raise RuntimeError(f"histogram mass at fold {i + 1} is not C(q,k)")
    if sum(bstar.values()) + capped != n_subsets:
        raise RuntimeError("classification tallies do not partition the subsets")

    histograms = {i + 1: SizeHistogram(i + 1, dict(hist[i])) for i in range(h_cap)}
    gaps = (
        {h: detect_gaps(histograms[h], h) for h in range(1, h_cap + 1)}
        if k == 4
        else {}
    )
    rep_profiles: dict[int, dict[int, int]] = {}
    for (h_star, r), count in sorted(rep_profile.items()):
        rep_profiles.setdefault(h_star, {})[r] = count
    return CensusReport(
        q=q,
        k=k,
        h_cap=h_cap,
        histograms=histograms,
        bstar_counts=dict(sorted(bstar.items())),
        exceptional_counts=dict(sorted(exceptional.items())),
        capped=capped,
        gaps=gaps,
        rep_profiles=rep_profiles,
        ladder_violations=tuple(sorted(ladder_v)),
        rep_violations=tuple(sorted(rep_v)),
        support_violations=tuple(sorted(support_v)),
    )


def count_pair_solutions(
    x: Composition,
    y: Composition,
    q: int,
    restrict_bstar: bool = False,
    max_subsets: int | None = None,
) -> int:
    """Number of k-subsets A of [1..q] (ascending slots) with x . A == y . A.

    x and y must be distinct compositions of the same degree h+1; with
    restrict_bstar only subsets whose B_h order is exactly degree-1 are
    counted, and the pair must then have disjoint supports (colliding pairs
    with overlapping supports cannot occur for such sets).
    """
    x = tuple(x)
    y = tuple(y)
    if len(x) != len(y):
        raise ValueError(f"vectors must have equal length, got {x} and {y}")
    if x == y:
        raise ValueError("vectors must be distinct")
    if any(v < 0 for v in x + y):
        raise ValueError("vectors must be nonnegative")
    degree = sum(x)
    if degree != sum(y):
        raise ValueError(f"degrees differ: {sum(x)} vs {sum(y)}")
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    if restrict_bstar and any(a and b for a, b in zip(x, y)):
        raise ValueError(f"restricted count needs disjoint supports, got {x}, {y}")
    k = len(x)
    if q < k:
        raise ValueError(f"need q >= k, got q={q}, k={k}")
    n_subsets = math.comb(q, k)
    require_budget(
        f"pair solution scan over C({q},{k}) subsets",
        n_subsets,
        subset_budget(max_subsets),
        MAX_SUBSETS_ENV,
    )
    m_of = [multiset_count(i, k) for i in range(degree + 1)]
    count = 0
    for elems in itertools.combinations(range(1, q + 1), k):
        lhs = sum(c * e for c, e in zip(x, elems))
        if lhs != sum(c * e for c, e in zip(y, elems)):
            continue
        if restrict_bstar:
            sizes = sumset_sizes(elems, degree)
            if any(sizes[i - 1] != m_of[i] for i in range(1, degree)):
                continue
            if sizes[degree - 1] == m_of[degree]:
                continue
        count += 1
    return count


def histogram_of(report: CensusReport, h: int) -> SizeHistogram:
    """Histogram at fold h out of a report, with a range check."""
    if h not in report.histograms:
        raise ValueError(f"report covers folds 1..{report.h_cap}, not {h}")
    return report.histograms[h]


def merge_histograms(parts: Mapping[int, SizeHistogram] | list[SizeHistogram]) -> SizeHistogram:
    """Fold shard histograms for one h into one; addition is the whole merge."""
    items = list(parts.values()) if isinstance(parts, Mapping) else list(parts)
    if not items:
        raise ValueError("nothing to merge")
    merged = items[0]
    for other in items[1:]:
        merged = merged.merged(other)
    return merged
