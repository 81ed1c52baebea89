"""Run every verification suite and print a one-line summary per suite.

    python scripts/run_suites.py [--out DIR] [suite ...]

Writes DIR/<suite>.json (default DIR: results/).  Exit status is the worst
suite exit code (fail beats unknown beats pass).
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

from dihedrants.cli import EXIT_FAIL, EXIT_UNKNOWN, SUITES, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name in args.suites:
        t = time.perf_counter()
        rep = run_suite(name)
        (out / f"{name}.json").write_text(rep.to_json())
        s = rep.summary
        print(f"{name:10s} pass={s['pass']:4d} fail={s['fail']:3d} unknown={s['unknown']:3d} "
              f"({time.perf_counter() - t:.1f}s)")
        for c in rep.cases:
            if c.outcome != "pass":
                print(f"    {c.outcome}: {c.case} {c.detail} {c.repro}")
        code = rep.exit_code
        if code == EXIT_FAIL or (code == EXIT_UNKNOWN and worst != EXIT_FAIL):
            worst = code
    return worst


if __name__ == "__main__":
    sys.exit(main())
