#!/usr/bin/env python3
"""Tabulate minimal balancing-family sizes against the n/(2s) bound.

The bound is only proved for ground sets of size 2p, p prime; the search
itself runs for any even n, so this script collects data on how tight
the bound is in practice.

    python3 scripts/balancing_search.py --n 6 --limit 4
"""

import argparse
import sys
from itertools import combinations

from hilbfam.balancing import BalancingInstance, check_lower_bound, min_balancing_size
from hilbfam.setfam import is_prime


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, required=True, help="even ground-set size")
    parser.add_argument("--limit", type=int, default=4, help="largest family size to try")
    args = parser.parse_args()

    d = args.n // 2
    p = d if is_prime(d) else None
    print(f"n={args.n}  d={d}  bound n/(2s) applies: {p is not None}")
    print(f"{'L':<16}{'s':>3}{'ceil(n/2s)':>11}{'minimum':>9}{'explored':>10}  certificate")
    for size in range(1, d):
        for L in combinations(range(1, d), size):
            result = min_balancing_size(args.n, L, args.limit)
            bound = -(-args.n // (2 * size))
            if result.minimum_size is None:
                status = f"none up to {args.limit}"
                minimum = "-"
            else:
                minimum = str(result.minimum_size)
                status = ""
                if p is not None:
                    rep = check_lower_bound(
                        BalancingInstance(result.witness_family, L), p
                    )
                    status = rep.status
            print(f"{str(L):<16}{size:>3}{bound:>11}{minimum:>9}{result.explored:>10}  {status}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
