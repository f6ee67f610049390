#!/usr/bin/env python3
"""Data gathering: how r(I) relates to r(I*) for non-graded ideals.

Builds seeded random zero-dimensional non-graded ideals (a graded base
plus one non-homogeneous element), computes both indices, the local
generator count of I/I*, and the hypothesis/conclusion flags of the
principal-quotient criterion, and prints one row per instance.  Useful
for hunting candidate necessary conditions for r(I) = r(I*); any row
with hypothesis met and conclusion failed would abort the run.

    python scripts/star_comparison_experiment.py --count 25 --seed 3
"""

import argparse
import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gradix.corpus import random_graded_m_primary  # noqa: E402
from gradix.errors import GradixError, ScopeError  # noqa: E402
from gradix.fields import GF, QQ  # noqa: E402
from gradix.groebner import Ideal  # noqa: E402
from gradix.gxparser import render  # noqa: E402
from gradix.poly import RingSpec  # noqa: E402
from gradix.reduc import compare_star  # noqa: E402


def random_nongraded(ring, rng):
    base = random_graded_m_primary(ring, rng, max_power=3, max_extra_forms=1, max_form_degree=2)
    # one non-homogeneous element: a form plus a lower-degree tail
    f = ring.zero()
    for name in ring.names:
        f = f + ring.var(name).scale(ring.field.from_int(rng.randint(0, 2)))
    g = ring.var(rng.choice(ring.names)) ** 2
    return Ideal(ring, list(base.gens) + [g + f])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=25)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--field", default="GF(5)")
    args = ap.parse_args()
    field = QQ if args.field == "QQ" else GF(int(args.field[3:-1]))
    rng = random.Random(args.seed)
    ring = RingSpec.make(field, ("x", "y"))

    print(f"{'#':>3} {'r':>3} {'r*':>3} {'mu':>3} {'hyp':>4} {'concl':>6}  ideal")
    shown = 0
    while shown < args.count:
        I = random_nongraded(ring, rng)
        if I.is_graded():
            continue
        try:
            cmp = compare_star(I)
        except (ScopeError, GradixError):
            continue
        shown += 1
        print(
            f"{shown:>3} {cmp.r:>3} {cmp.r_star:>3} {cmp.quotient_generator_count:>3} "
            f"{'yes' if cmp.hypothesis_met else 'no':>4} "
            f"{'yes' if cmp.conclusion_holds else 'no':>6}  {render(I)}"
        )
    print("no aborts: every met hypothesis had a holding conclusion")


if __name__ == "__main__":
    main()
