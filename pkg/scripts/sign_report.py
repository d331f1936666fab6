"""Ratio of each basis image to v(phi_1..phi_n) and the matching sign rule."""

import argparse
import json

from globalweyl.experiments import SignReportConfig, run_sign_report


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=SignReportConfig.n)
    p.add_argument("--m", type=int, default=SignReportConfig.m)
    p.add_argument("--trunc", type=int, default=SignReportConfig.trunc_degree)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    rep = run_sign_report(SignReportConfig(n=args.n, m=args.m, trunc_degree=args.trunc))
    if args.json:
        print(json.dumps(rep, indent=2))
        return
    print(f"{'tuple':<24} {'ratio':>6} {'scaled':>6}   wtd cap")
    for r in rep["rows"]:
        print(f"{r['tuple']:<24} {r['ratio']:>6} {r['scaled_ratio']:>6}  "
              f"{'y' if r['paper_exponent_match'] else 'n':>5} {'y' if r['alt_exponent_match'] else 'n':>3}")
    print(f"|ratio| = 1 on {rep['unit_ratios']}/{rep['total']}; "
          f"weighted rule {rep['weighted_rule_matches']}/{rep['total']}, "
          f"capped rule {rep['capped_rule_matches']}/{rep['total']}; winner: {rep['winner']}")


if __name__ == "__main__":
    main()
