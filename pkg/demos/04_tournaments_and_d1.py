"""Directed triangles in tournaments and the bound on D1-free families.

A complete tournament with outdegrees d_1..d_n has C(n,3) - sum C(d_i,2)
directed triangles, so near-regular tournaments maximize the count at
delta(n).  Orienting each shadow pair of a D1-free family away from the arc
holding a witness vertex makes every family triple a directed triangle,
which pins |H| <= delta(n).
"""

import random

from cghlab import (
    Cgh,
    count_directed_triangles,
    delta,
    h_star,
    max_triangle_tournament,
    orient_shadow,
    triangles_by_formula,
    verify_d1_bound,
)
from cghlab.classify import ConfigType, classify_pair
from cghlab.core import all_triples


def main() -> None:
    print("near-regular tournaments achieve delta(n):")
    for n in range(3, 13):
        t = max_triangle_tournament(n)
        brute = count_directed_triangles(t)
        formula = triangles_by_formula(t.outdegrees())
        print(f"  n={n:2d}: {brute:3d} directed triangles (formula {formula}), delta = {delta(n)}")

    print()
    print("orienting the shadow of h_star(7):")
    fam = h_star(7)
    oriented = orient_shadow(fam)
    report = verify_d1_bound(fam)
    print(f"  |H| = {fam.size}, oriented pairs = {len(oriented.arcs)}")
    print(f"  every member triple directed: {report.family_triples_directed}")
    print(f"  {report.family_size} <= {report.directed_triangles} <= {report.delta}: "
          f"{report.bound_holds}")

    print()
    print("random greedy D1-free families on Omega_8 all obey the bound:")
    rng = random.Random(7)
    sizes = []
    for _ in range(20):
        trips = all_triples(8)
        rng.shuffle(trips)
        kept = []
        for t in trips:
            if all(len(set(s) & set(t)) != 2
                   or classify_pair(8, s, t) is not ConfigType.D1 for s in kept):
                kept.append(t)
        fam = Cgh.of(8, kept)
        assert verify_d1_bound(fam).bound_holds
        sizes.append(fam.size)
    print(f"  20 greedy families, sizes {min(sizes)}..{max(sizes)}, all <= delta(8) = {delta(8)}")


if __name__ == "__main__":
    main()
