"""Run the three censuses and write JSON reports plus a one-line summary each.

    python scripts/run_census.py --outdir results/
"""

import argparse
import json
import pathlib
import time

from weightone.census import solve_weight_one, verify_solution
from weightone.cli import report_to_json


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--outdir", type=pathlib.Path, default=pathlib.Path("results"))
    p.add_argument("--shards", type=int, default=1)
    args = p.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for c in (8, 16, 24):
        t0 = time.perf_counter()
        rep = solve_weight_one(c, shards=args.shards)
        bad = sum(not verify_solution(s, rep.shift) for s in rep.solutions)
        path = args.outdir / f"census_c{c}.json"
        path.write_text(json.dumps(report_to_json(rep), sort_keys=True, indent=2) + "\n")
        print(f"{rep.summary()}; {bad} failed re-verification; {time.perf_counter() - t0:.2f}s -> {path}")


if __name__ == "__main__":
    main()
