"""Run every acceptance suite and optionally dump a JSON report.

    python scripts/run_acceptance.py [--json report.json] [--seed N]
"""

import argparse
import json
import sys

from tlmarkov.config import RunConfig
from tlmarkov.suites import ACCEPTANCE, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", help="write the report here")
    ap.add_argument("--seed", type=int, default=RunConfig.seed)
    args = ap.parse_args()
    cfg = RunConfig(seed=args.seed)

    report = []
    for number, (suite, budget) in sorted(ACCEPTANCE.items()):
        res = run_suite(suite, cfg)
        ok = res.passed and res.seconds < budget
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {suite:12s} {res.seconds:8.2f}s (budget {budget}s)")
        for desc, passed in res.checks:
            if not passed:
                print(f"    failed: {desc}")
        report.append({"criterion": number, "budget_s": budget, "ok": ok, **res.to_json()})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2)
    return 0 if all(r["ok"] for r in report) else 1


if __name__ == "__main__":
    sys.exit(main())
