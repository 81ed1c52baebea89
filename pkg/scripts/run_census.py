"""Desk-scale census of trivalent dihedrants and bi-dihedrants.

    python scripts/run_census.py [--dihedrant-max 16] [--bidihedrant-max 12] [--out results]

Writes census_<kind>.tsv plus the JSON suite report for each kind, then prints
the tag counts and any rows that did not classify (failures or unknowns).
"""

from __future__ import annotations

import argparse
import collections
import pathlib
import time

from dihedrants.cli import census, format_tsv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--dihedrant-max", type=int, default=16)
    ap.add_argument("--bidihedrant-max", type=int, default=12)
    ap.add_argument("--budget", type=int, default=200_000)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for kind, n_max in (("dihedrant", args.dihedrant_max), ("bidihedrant", args.bidihedrant_max)):
        t = time.perf_counter()
        rep, rows = census(kind, 3, n_max, args.budget)
        (out / f"census_{kind}.tsv").write_text(format_tsv(rows))
        (out / f"census_{kind}.json").write_text(rep.to_json())
        tags = collections.Counter(r[-1] for r in rows)
        print(f"{kind}: n=3..{n_max}, {len(rows)} rows, {dict(sorted(tags.items()))} "
              f"({time.perf_counter() - t:.1f}s)")
        for c in rep.cases:
            if c.outcome != "pass":
                print(f"    {c.outcome}: {c.case}  {c.detail}")


if __name__ == "__main__":
    main()
