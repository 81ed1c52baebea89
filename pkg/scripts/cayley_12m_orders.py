"""Group orders and relations behind the 12m-vertex Cayley witnesses.

Prints, for each admissible (m, i), the orders of <R(a^2), g> and
<R(a^2), R(b), g>, whether the latter is regular, and whether the relation
(R(a^2) g)^3 = R(a^6) holds as printed or only with a^2 replaced by a^(2i).

    python scripts/lemma61_orders.py [--m-max 7]
"""

from __future__ import annotations

import argparse
from math import gcd

from dihedrants.errors import InvalidParameter
from dihedrants.witnesses import cayley_12m_g


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--m-max", type=int, default=7)
    args = ap.parse_args()
    print("m\ti\t|<R(a^2),g>|\t|<R(a^2),R(b),g>|\tregular\tprinted\tscaled")
    for m in range(1, args.m_max + 1, 2):
        for i in range(1, 12 * m):
            if gcd(gcd(i, 3 * m), 12 * m) != 1:
                continue
            try:
                res = cayley_12m_g(m, i)
            except InvalidParameter:
                continue
            d = res.details
            print(f"{m}\t{i}\t{d['|<R(a^2),g>|']}\t{d['|<R(a^2),R(b),g>|']}\t"
                  f"{res.relation('<R(a^2),R(b),g> regular')}\t"
                  f"{d['printed (R(a^2) g)^3 = R(a^6)']}\t{res.relation('(R(a^2i) g)^3 = R(a^6i)')}")


if __name__ == "__main__":
    main()
