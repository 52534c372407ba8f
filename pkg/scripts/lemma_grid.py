#!/usr/bin/env python3
"""Run every finite lemma sweep over a grid of (q, h) and tabulate verdicts.

Covers the pair-count closed form once, then the support-disjointness,
representation-bound and dot-product-interval sweeps at each grid point.
Verdicts go to a JSONL file; a short table goes to stdout.

Examples
--------
  python3 scripts/lemma_grid.py --outdir results/lemmas
  python3 scripts/lemma_grid.py --grid-q 20 30 40 --grid-h 2 3 4 --h-max 12
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from sumset_census import verify_ddp, verify_ortho, verify_paircount, verify_repno


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid-q", type=int, nargs="+", default=[20, 30, 40])
    parser.add_argument("--grid-h", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--h-max", type=int, default=12, dest="h_max")
    parser.add_argument("--outdir", default="results/lemmas")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    verdicts = [verify_paircount(args.h_max)]
    for q in args.grid_q:
        for h in args.grid_h:
            verdicts.append(verify_ortho(q, h))
            verdicts.append(verify_repno(q, 4, h))
            verdicts.append(verify_ddp(q, h)[0])

    jsonl = outdir / "verdicts.jsonl"
    jsonl.write_text("".join(v.to_json() + "\n" for v in verdicts))

    failed = 0
    print(f"{'lemma':<10} {'params':<28} {'instances':>9} {'violations':>10} {'time':>7}")
    for v in verdicts:
        params = ",".join(f"{k}={val}" for k, val in sorted(v.params.items()))
        print(
            f"{v.lemma:<10} {params:<28} {v.instances:>9} "
            f"{len(v.violations):>10} {v.elapsed_s:>6.2f}s"
        )
        if not v.passed:
            failed += 1
    print(f"{len(verdicts)} sweeps, {failed} failed -> {jsonl}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
