#!/usr/bin/env python3
"""Survey the Dec invariant over all lattices of each size: distribution of
values, and the lattices realising the maximum, with their law profiles.

Usage: python scripts/dec_survey.py [--max-size N]
"""

import argparse
import sys
from collections import Counter

from latcheck import enumeration
from latcheck.decomp import dec
from latcheck.laws import law_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=7)
    args = ap.parse_args()

    for n in range(1, args.max_size + 1):
        values = Counter()
        worst = []
        best_val = 0
        for L in enumeration.all_lattices(n):
            v = dec(L)[0]
            values[v] += 1
            if v > best_val:
                best_val, worst = v, [L]
            elif v == best_val:
                worst.append(L)
        dist = ", ".join(f"{v}:{c}" for v, c in sorted(values.items()))
        print(f"n={n}: dec distribution {{{dist}}}, max={best_val} "
              f"on {len(worst)} lattice(s)")
        if n == args.max_size:
            for L in worst[:3]:
                p = law_profile(L)
                print(f"    max example: covers={sorted(L.cover_pairs())} "
                      f"sd={p.sd_join and p.sd_meet} whitman={p.whitman}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
