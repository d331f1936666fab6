"""Run the per-lemma suites at their acceptance parameters and summarize."""

import argparse
import json

from globalweyl.experiments import LemmaSweepConfig, run_lemma_sweep


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trunc", type=int, default=LemmaSweepConfig.trunc_degree)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    rows = run_lemma_sweep(LemmaSweepConfig(trunc_degree=args.trunc))
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        extra = f"  ratios {r['ratios']}" if r["ratios"] else ""
        print(f"{r['suite']:<12} n={r['n']}  {r['failures']:>3}/{r['cases']:<4} failed  {r['ms']:>8.1f} ms{extra}")


if __name__ == "__main__":
    main()
