#!/usr/bin/env python3
"""Observed gaps between box families and the optimal intersection bound.

For seeded random families across a range of box sizes, records the exact
nerve density, the exact maximum intersecting subfamily, and the pipeline's
extracted subfamily, against kalai_bound(alpha, d) * n.  Box nerves are not
expected to be tight against the bound; the gaps are recorded as data.

Usage: python3 scripts/helly_experiment.py [--n 20] [--d 1] [--families 30]
       [--seed 0]
"""

import argparse

from cliquecert import (
    build_nerve,
    fractional_helly_pipeline,
    kalai_bound,
    max_intersecting_subfamily,
    random_box_family,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--families", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    header = f"{'seed':>5} {'side':>5} {'alpha':>10} {'kalai*n':>9} {'sweep':>6} {'pipeline':>9}"
    print(header)
    print("-" * len(header))
    for side in (10, 25, 40, 60):
        for i in range(args.families):
            seed = args.seed + i
            fam = random_box_family(args.n, args.d, seed, max_side=side)
            nerve = build_nerve(fam)
            alpha = nerve.density()
            target = kalai_bound(float(alpha), args.d) * args.n
            best, _ = max_intersecting_subfamily(fam)
            out = fractional_helly_pipeline(fam)
            print(
                f"{seed:>5} {side:>5} {float(alpha):>10.4f} {target:>9.2f} "
                f"{best:>6} {len(out.indices):>9}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
