#!/usr/bin/env python3
"""Tabulate |T_n| for q = x^(2^k) - 1 against 2^(n-1)(2^k - 1) + 1.

The table shows why the degree-bound check in the verification suite
fails: for k >= 2 the sum sets outgrow the stated bound at small n
(|T_n| is polynomial in n of degree 2^(k-1), while the bound starts
small and only wins once the 2^(n-1) factor takes over).

Usage: python scripts/sumset_growth.py [max_n]
"""

import sys

sys.path.insert(0, "src")

from aprings.annihilator import RootSpec, degree_bound, root_sum_set
from aprings.config import Limits


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    limits = Limits(max_summands=max(12, max_n), max_sumset=200000)
    print(f"{'k':>2} {'n':>2} {'|T_n|':>7} {'bound':>7}  status")
    for k in (1, 2, 3):
        spec = RootSpec.unity(2**k)
        for n in range(1, max_n + 1):
            size = len(root_sum_set(spec, n, "signed", limits))
            bound = degree_bound(n, k)
            status = "<= bound" if size <= bound else "EXCEEDS"
            print(f"{k:>2} {n:>2} {size:>7} {bound:>7}  {status}")
        print()


if __name__ == "__main__":
    main()
