"""D2-free families from Fano decompositions and pair designs.

Triangulations give D2-free families of about C(n,2)/2 triangles per edge
budget; packing a Fano decomposition of K_7 plus one extra triangle into
every block of an S(n,7,2) design does better: 8 triangles per 21 pairs.
"""

from math import comb

from cghlab import (
    ConfigType,
    Design,
    d2_expand_design,
    d2_fan,
    d2_fano7,
    ex_number,
    is_free,
    parse_design,
)


def affine_plane_order7() -> Design:
    """AG(2,7): 49 points, 56 lines; every pair of points on exactly one line."""
    def pt(x, y):
        return 7 * x + y

    blocks = [
        sorted(pt(x, (m * x + b) % 7) for x in range(7))
        for m in range(7)
        for b in range(7)
    ]
    blocks += [[pt(c, y) for y in range(7)] for c in range(7)]
    # parse_design re-checks exact pair coverage
    return parse_design({"n": 49, "blocks": blocks})


def main() -> None:
    print("the 8-triangle gadget on a single heptagon:")
    fam = d2_fano7()
    for t in sorted(fam.triples):
        marker = "extra" if t == (0, 2, 4) else "fano line"
        print(f"  {t}  ({marker})")
    print(f"  size {fam.size}, D2-free: {is_free(fam, {ConfigType.D2}).free}")

    res = ex_number(7, {ConfigType.D2})
    print(f"  exact ex(7, D2) = {res.size} -- the gadget is optimal at n = 7")

    print()
    print("fan triangulation for comparison:")
    print(f"  fan on 7 points: {d2_fan(7).size} triangles")

    print()
    print("expanding through the affine plane of order 7:")
    design = affine_plane_order7()
    expansion = d2_expand_design(design)
    n = design.n
    print(f"  {len(design.blocks)} blocks on {n} points")
    print(f"  family size {expansion.family.size} = (8/21) C({n},2) = {8 * comb(n, 2) // 21}")
    print(f"  D2-free: {expansion.d2_free}")
    frac = expansion.family.size / comb(n, 2)
    print(f"  density {expansion.family.size}/C({n},2) = {frac:.4f} (8/21 = {8 / 21:.4f})")


if __name__ == "__main__":
    main()
