"""Tour of the eight two-triangle configurations.

Two triangles drawn on cyclically ordered points can meet in exactly eight
ways, determined by how many vertices they share (0, 1, or 2) and how the
remaining vertices interleave around the circle.  This script shows one
witness pair per configuration, the interleaving word that names it, and the
independent geometric classification.
"""

from itertools import combinations

from cghlab import Cgh, classify_pair, count_copies, oracle_classify, realization_for

WITNESSES = [
    (6, (0, 1, 2), (3, 4, 5), "AAABBB: two blocks, separated"),
    (6, (0, 1, 3), (2, 4, 5), "AABABB: four blocks, stabbing"),
    (6, (0, 2, 4), (1, 3, 5), "ABABAB: six blocks, crossing"),
    (5, (0, 1, 2), (2, 3, 4), "shared vertex, word BBAA: touching"),
    (5, (0, 2, 3), (0, 1, 4), "shared vertex, word BAAB: parallel sides"),
    (5, (0, 1, 3), (0, 2, 4), "shared vertex, word ABAB: crossing"),
    (4, (0, 1, 2), (0, 2, 3), "shared side, thirds on opposite arcs"),
    (5, (0, 1, 2), (0, 1, 3), "shared side, thirds on the same arc"),
]


def main() -> None:
    print("=== the eight configurations ===")
    for n, s, t, note in WITNESSES:
        kind = classify_pair(n, s, t)
        oracle = oracle_classify(realization_for(n), s, t)
        flag = "ok" if oracle is kind else "MISMATCH"
        pair = f"{s} vs {t}"
        print(f"{kind.value}: n={n} {pair:<27} {note:<45} oracle={oracle.value} [{flag}]")

    print()
    print("=== census of the complete family on Omega_6 ===")
    census = count_copies(Cgh.complete(6))
    for kind, count in sorted(census.counts.items(), key=lambda kv: kv[0].value):
        print(f"  {kind.value}: {count:3d} pairs")
    print(f"  total {census.total()} = C(20, 2)")

    print()
    print("=== every distinct pair on Omega_7 gets exactly one type ===")
    from cghlab.core import all_triples

    trips = all_triples(7)
    seen = {}
    for s, t in combinations(trips, 2):
        seen[classify_pair(7, s, t)] = seen.get(classify_pair(7, s, t), 0) + 1
    print("  " + ", ".join(f"{k.value}:{v}" for k, v in sorted(seen.items(), key=lambda kv: kv[0].value)))
    print(f"  total {sum(seen.values())} = C(35, 2)")


if __name__ == "__main__":
    main()
