"""Relative error of n! * colength(closure(I^k)) / k^n against e(I), per suite ideal.

Shows the O(1/k) boundary term: ideals with a linear generator converge
slowest.  Usage: python3 scripts/colength_convergence.py [k ...]
"""

import argparse
import math

from nubar.polyhedra import colength_closure, multiplicity
from nubar.suite import primary_ideals


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ks", nargs="*", type=int, default=[4, 8, 12, 16, 20])
    args = ap.parse_args()
    print("ideal".ljust(36) + "e".rjust(5) + "".join(f"k={k}".rjust(9) for k in args.ks))
    for n in (2, 3):
        for I in primary_ideals(n):
            e = multiplicity(I)
            errs = [abs(math.factorial(n) * colength_closure(I, k) / k**n - e) / e for k in args.ks]
            print(str(I).ljust(36) + str(e).rjust(5) + "".join(f"{r:9.4f}" for r in errs))


if __name__ == "__main__":
    main()
