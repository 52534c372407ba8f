#!/usr/bin/env python3
"""Sweep the census over several ambient bounds and chart the size ladder.

For each q the script censuses all 4-subsets of [1..q] up to the requested
fold, records how strongly the predicted ladder sizes dominate their
neighborhoods, and writes one SVG histogram per q plus a combined CSV and
JSON summary.

Examples
--------
  python3 scripts/gap_ladder_experiment.py --outdir results/gaps
  python3 scripts/gap_ladder_experiment.py --q 30 40 50 60 --h 5 --shards 8 --workers 4
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from sumset_census import histogram_svg, run_census


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=int, nargs="+", default=[30, 40, 50, 60])
    parser.add_argument("--h", type=int, default=5, help="fold to chart")
    parser.add_argument("--shards", type=int, default=1)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--outdir", default="results/gaps")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    h = args.h

    summary = []
    csv_lines = ["q,h,rung,count,intermediate_max,confirmed,ratio"]
    for q in args.q:
        started = time.perf_counter()
        report = run_census(
            q=q, k=4, h_cap=h, shards=args.shards, workers=args.workers
        )
        elapsed = time.perf_counter() - started
        gap = report.gaps[h]
        svg_path = outdir / f"ladder_q{q}_h{h}.svg"
        svg_path.write_text(
            histogram_svg(
                report.histograms[h].counts,
                h,
                gap.ladder,
                title=f"{h}-fold sumset sizes over 4-subsets of [1..{q}]",
            )
        )
        for j, rung in enumerate(gap.ladder):
            inter = gap.intermediate_max[j] if j < len(gap.intermediate_max) else ""
            ratio = "" if gap.ratios[j] is None else f"{gap.ratios[j]:.3f}"
            csv_lines.append(
                f"{q},{h},{rung},{gap.counts[j]},{inter},{gap.confirmed[j]},{ratio}"
            )
        summary.append(
            {
                "q": q,
                "h": h,
                "subsets": report.total_subsets,
                "elapsed_s": round(elapsed, 3),
                "ladder": list(gap.ladder),
                "counts": list(gap.counts),
                "confirmed": list(gap.confirmed),
                "violations": report.violation_count,
            }
        )
        confirmed = sum(gap.confirmed)
        print(
            f"q={q}: {report.total_subsets} subsets in {elapsed:.1f}s, "
            f"{confirmed}/{len(gap.ladder)} rungs confirmed, "
            f"{report.violation_count} violations -> {svg_path}"
        )

    (outdir / "ladder_summary.csv").write_text("\n".join(csv_lines) + "\n")
    (outdir / "ladder_summary.json").write_text(
        json.dumps(summary, indent=2) + "\n"
    )
    print(f"wrote {outdir}/ladder_summary.{{csv,json}}")
    return 1 if any(s["violations"] for s in summary) else 0


if __name__ == "__main__":
    sys.exit(main())
