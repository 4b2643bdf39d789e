#!/usr/bin/env python3
"""Run the theorem harness over all lattices up to a given size and print a
per-theorem summary table.

Usage: python scripts/run_harness.py [--size N] [--profile NAME]
"""

import argparse
import sys
import time

from latcheck import enumeration, theorems


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=7)
    ap.add_argument("--profile", default="N-full",
                    choices=sorted(theorems.PROFILE_CHECKS))
    args = ap.parse_args()

    t0 = time.perf_counter()
    per = {}
    violations = []
    for n in range(1, args.size + 1):
        for k, L in enumerate(enumeration.all_lattices(n)):
            for rep in theorems.run_profile(L, args.profile, name=f"n{n}#{k}"):
                row = per.setdefault(rep.theorem,
                                     dict(run=0, skipped=0, vacuous=0, instances=0))
                row["run"] += 1
                if rep.skipped:
                    row["skipped"] += 1
                    continue
                row["vacuous"] += rep.vacuous
                row["instances"] += rep.hypothesis_instances
                violations.extend((rep.theorem, rep.lattice, v)
                                  for v in rep.conclusion_violations)

    print(f"profile {args.profile}, sizes 1..{args.size} "
          f"({time.perf_counter() - t0:.1f}s)")
    print(f"{'theorem':<18}{'run':>6}{'skipped':>9}{'vacuous':>9}{'instances':>11}")
    for theorem, row in per.items():
        print(f"{theorem:<18}{row['run']:>6}{row['skipped']:>9}"
              f"{row['vacuous']:>9}{row['instances']:>11}")
    if violations:
        print(f"\n{len(violations)} VIOLATION(S):")
        for v in violations:
            print("  ", v)
        return 1
    print("\nno conclusion violations")
    return 0


if __name__ == "__main__":
    sys.exit(main())
