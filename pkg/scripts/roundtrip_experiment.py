#!/usr/bin/env python3
"""Stress the two-way parametrization on random data and report residuals.

For each trial: draw a surface point, build its triple, move it by a
random similarity, map back to angles.  Reports worst-case equidistance
spread, angle round-trip error, similarity invariance error, and the
class histogram.
"""

import argparse
import random

from heistriples import (
    abc_from_triple,
    cartan_invariant,
    circle_distance,
    classify_triple,
    random_similarity,
    random_surface_point,
    triple_from_abc,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    worst_spread = worst_roundtrip = worst_invariance = worst_angle_sum = 0.0
    classes: dict[str, int] = {}
    for _ in range(args.trials):
        s = random_surface_point(rng)
        triple = triple_from_abc(s)
        worst_spread = max(worst_spread, triple.spread())
        back = abc_from_triple(triple)
        worst_roundtrip = max(
            worst_roundtrip,
            max(circle_distance(x, y) for x, y in zip(back.angles, s.angles)))
        moved = abc_from_triple(triple.transform(random_similarity(rng)))
        worst_invariance = max(
            worst_invariance,
            max(circle_distance(x, y) for x, y in zip(moved.angles, s.angles)))
        a = cartan_invariant(*triple.points)
        worst_angle_sum = max(worst_angle_sum,
                              circle_distance(s.a + s.b + s.c, -2.0 * a))
        label = classify_triple(triple).value
        classes[label] = classes.get(label, 0) + 1

    print(f"trials:                  {args.trials}")
    print(f"worst distance spread:   {worst_spread:.3e}")
    print(f"worst angle round-trip:  {worst_roundtrip:.3e}")
    print(f"worst invariance error:  {worst_invariance:.3e}")
    print(f"worst angle-sum error:   {worst_angle_sum:.3e}")
    print(f"class histogram:         {classes}")


if __name__ == "__main__":
    main()
