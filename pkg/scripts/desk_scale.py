"""Rank of the basis matrix over the desk-scale grid."""

import argparse
import json
import time

from globalweyl.experiments import DeskScaleConfig, run_desk_scale


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--guard", type=int, default=DeskScaleConfig.guard)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    t0 = time.perf_counter()
    rows = run_desk_scale(DeskScaleConfig(guard=args.guard))
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'n':>2} {'N':>2} {'m':>2} {'rank':>5} {'dim':>5}  {'sec':>7}")
    for r in rows:
        flag = "" if r["rank"] == r["expected"] else "  DEFICIENT"
        print(f"{r['n']:>2} {r['N']:>2} {r['m']:>2} {r['rank']:>5} {r['expected']:>5}  {r['seconds']:>7.3f}{flag}")
    full = sum(r["rank"] == r["expected"] for r in rows)
    print(f"{full}/{len(rows)} full rank, {time.perf_counter() - t0:.1f}s total")


if __name__ == "__main__":
    main()
