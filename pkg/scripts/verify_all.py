"""Run every registered scenario's verification laws and print a summary table.

    python3 scripts/verify_all.py [--grid 7x7x7]
"""

import argparse
import time

from dirac_rdi.cli import parse_grid
from dirac_rdi.verify import scenarios as scn


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", default="7x7x7")
    args = ap.parse_args()
    shape = parse_grid(args.grid)
    failed = 0
    for name in sorted(scn.SCENARIOS):
        start = time.perf_counter()
        report = scn.run_verification(name, shape)
        took = time.perf_counter() - start
        print(f"{name}  {'PASS' if report.passed else 'FAIL'}  ({took:.1f} s)")
        for law in report.laws:
            print(f"    {law.law:<22} max {law.max_residual:9.2e}  tol {law.tolerance:7.1e}"
                  f"  {'ok' if law.passed else 'FAIL'}")
        failed += not report.passed
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
