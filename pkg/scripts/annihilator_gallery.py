#!/usr/bin/env python3
"""Print the bundled annihilating-polynomial families and the A5 data.

Usage: python scripts/annihilator_gallery.py [max_n]
"""

import sys

sys.path.insert(0, "src")

from aprings.annihilator import (
    RootSpec,
    annihilating_polynomial,
    lewis_polynomial,
    pfister_chain_polynomial,
    quartic_p,
    quartic_t,
)
from aprings.groups import named_group, table_of_marks
from aprings.rings import bundled_model


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

    print("== q = x^2 - 1 (Lewis polynomials) ==")
    for n in range(1, max_n + 1):
        p = lewis_polynomial(n)
        check = annihilating_polynomial(RootSpec.integers(-1, 1), n)
        tag = "ok" if p == check else "MISMATCH"
        print(f"p_{n} = {p}   [{tag}]")

    print("\n== q = x^4 - 1 (quartic products) ==")
    for n in range(1, max_n + 1):
        print(f"t_{n} = {quartic_t(n)}")
    for n in range(1, max_n + 1):
        p = quartic_p(n)
        check = annihilating_polynomial(RootSpec.unity(4), n)
        tag = "ok" if p == check else "MISMATCH"
        print(f"p_{n} = {p}   [{tag}]")

    print("\n== q = x^2 - 2^k x (Pfister chains, unsigned sums) ==")
    for k in range(0, 3):
        for n in range(1, max_n + 1):
            print(f"k={k} p_{n} = {pfister_chain_polynomial(n, k)}")

    print("\n== Burnside ring of A5 ==")
    table = table_of_marks(named_group("A5"))
    labels = table.labels()
    print("classes by order: " + ", ".join(labels))
    for label, row in zip(labels, table.marks):
        print(f"{label:>4} | " + " ".join(f"{v:>2}" for v in row))
    q = bundled_model("burnside-A5").generating_polynomial()
    print(f"generating polynomial (degree {q.degree}):\n  {q}")


if __name__ == "__main__":
    main()
