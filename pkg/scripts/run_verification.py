#!/usr/bin/env python3
"""Full oracle verification run with a violation census.

Runs every scan at full scale and, for the degree-6 closed-point scan,
breaks the observed general-position violations down by structural family.
Over a finite field the Brauer group is trivial, so the two families a
nontrivial Brauer class would forbid (orbits on a rational line or on a
conjugate line pair) and orbits on rational conics occur at rates near
1/p^4, 1/p^2 and 1/p; every other family is excluded by Galois
transitivity alone and must never appear.  The script exits 0 iff all
structural expectations hold, printing the measured rates either way.

Usage: python scripts/run_verification.py [--samples N] [--seed S]
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from sbuntwist.plane import ConfigCase  # noqa: E402
from sbuntwist.verify import (  # noqa: E402
    scan_closed_points,
    scan_phi3,
    scan_phi6,
    scan_table,
)

ALLOWED_COLLINEAR_CASES = {
    ConfigCase.ALL_SIX_ON_A_LINE.case_id,
    ConfigCase.TWO_DISJOINT_TRIPLES.case_id,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=300)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--dmax", type=int, default=50)
    args = parser.parse_args()

    failures = []

    print("== link formulas vs quadratic-transform bookkeeping ==")
    for scan in (scan_phi3, scan_phi6):
        t0 = time.perf_counter()
        rep = scan(args.dmax)
        print(
            f"  {rep.mode}: {rep.checked} grid points, {rep.mismatches} mismatches "
            f"({time.perf_counter() - t0:.2f}s)"
        )
        if not rep.ok:
            failures.append(f"{rep.mode}: {rep.first_mismatch}")

    print("\n== configuration classifier vs the forced line-count table ==")
    for q in (7, 11):
        t0 = time.perf_counter()
        rep = scan_table(q, random_samples=args.samples * 10, seed=args.seed)
        counts = [w.line_count for w in rep.witnesses]
        print(
            f"  F_{q}: witnessed counts {counts}, "
            f"{rep.random_checked} random configurations, "
            f"{rep.unclassifiable} unclassifiable ({time.perf_counter() - t0:.2f}s)"
        )
        if not rep.ok:
            failures.append(f"table over F_{q}")

    print("\n== degree-6 closed points: general-position census ==")
    print(f"  ({args.samples} samples per prime, seed {args.seed})")
    for p in (5, 7, 11, 13):
        t0 = time.perf_counter()
        rep = scan_closed_points(p, samples=args.samples, seed=args.seed)
        rate = rep.violating_samples / rep.samples
        print(
            f"  p={p}: {rep.violating_samples}/{rep.samples} violating "
            f"(collinear {rep.collinear_hits}, conic {rep.conic_hits}; "
            f"rate {rate:.3f} ~ 1/p = {1 / p:.3f}) "
            f"collinear families {dict(rep.case_breakdown)} "
            f"({time.perf_counter() - t0:.2f}s)"
        )
        for case_id, _ in rep.case_breakdown:
            if case_id not in ALLOWED_COLLINEAR_CASES:
                failures.append(
                    f"p={p}: collinear family {case_id} should be impossible "
                    f"under a transitive orbit"
                )

    print()
    if failures:
        print("STRUCTURAL FAILURES:")
        for f in failures:
            print(f"  - {f}")
        return 1
    print(
        "all structural checks hold: formula equivalence exact, table exact, "
        "and every general-position violation sits in a family that only a "
        "nontrivial Brauer class would rule out"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
