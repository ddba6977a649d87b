"""Observed nubar - nu gap for every primary suite ideal, by degree bound."""

import argparse

from nubar.closure import izumi_gap_scan
from nubar.suite import primary_ideals


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree-bound", type=int, default=10)
    args = ap.parse_args()
    for n in (2, 3):
        for I in primary_ideals(n):
            s = izumi_gap_scan(I, args.degree_bound if n == 2 else min(args.degree_bound, 8))
            print(f"{str(I):36} gap={s.observed_gap!s:6} at {s.argmax} stabilized={s.stabilized}")


if __name__ == "__main__":
    main()
