"""Generators, size formulas, and freeness of the named families."""

from itertools import product
from math import comb

import pytest

from cghlab.classify import ConfigType, is_free
from cghlab.constructions import (
    FAMILIES,
    Design,
    d2_expand_design,
    d2_fan,
    d2_fano7,
    d2_from_triangulation,
    delta,
    h_plus,
    h_prime,
    h_star,
    m2_extremal,
    m3_extremal,
    parse_design,
    s2_split,
    s3_h0,
)
from cghlab.core import Cgh, canonical_form


class TestDelta:
    def test_table(self):
        assert [delta(n) for n in range(3, 12)] == [1, 2, 5, 8, 14, 20, 30, 40, 55]

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            delta(2)


class TestHStar:
    def test_exact_family_n5(self):
        want = {(0, 1, 3), (1, 2, 4), (0, 2, 3), (1, 3, 4), (0, 2, 4)}
        assert h_star(5).triples == frozenset(want)

    def test_n4_any_bits(self):
        assert h_star(4, (0, 0)).size == 2
        assert h_star(4, (1, 0)).size == 2

    def test_n9_intersecting(self):
        fam = h_star(9)
        assert fam.size == 30
        assert is_free(fam, {ConfigType.M1, ConfigType.S1, ConfigType.D1}).free

    def test_all_side_bits_give_delta_and_freeness(self):
        forb = {ConfigType.M1, ConfigType.S1, ConfigType.D1}
        for n in (4, 6, 8):
            for bits in product((0, 1), repeat=n // 2):
                fam = h_star(n, bits)
                assert fam.size == delta(n)
                assert is_free(fam, forb).free

    def test_bits_validation(self):
        with pytest.raises(ValueError):
            h_star(6)  # even n needs bits
        with pytest.raises(ValueError):
            h_star(6, (0, 1))  # wrong length
        with pytest.raises(ValueError):
            h_star(5, (0, 1))  # odd n takes none


class TestHPrime:
    def test_n5_is_everything(self):
        assert h_prime(5) == Cgh.complete(5)

    @pytest.mark.parametrize("n,size", [(6, 17), (7, 28), (8, 40)])
    def test_sizes(self, n, size):
        assert h_prime(n).size == size

    def test_m1_free_all_n(self):
        for n in range(3, 13):
            fam = h_prime(n)
            assert fam.size == delta(n) + n * (n - 3) // 2
            assert is_free(fam, {ConfigType.M1}).free


class TestHPlus:
    @pytest.mark.parametrize("n,size", [(5, 7), (6, 14), (7, 20)])
    def test_sizes(self, n, size):
        assert h_plus(n).size == size

    def test_m1_s1_free(self):
        for n in range(3, 13):
            fam = h_plus(n)
            assert is_free(fam, {ConfigType.M1, ConfigType.S1}).free

    def test_start_is_rotation(self):
        for n in (5, 7, 9):
            base = canonical_form(h_plus(n, 0))
            for start in range(1, n):
                assert canonical_form(h_plus(n, start)) == base

    def test_start_rejected_for_even(self):
        with pytest.raises(ValueError):
            h_plus(6, 1)


class TestM3:
    @pytest.mark.parametrize("n,size", [(4, 4), (6, 19), (7, 31), (9, 64)])
    def test_sizes(self, n, size):
        fam = m3_extremal(n)
        assert fam.size == size == comb(n, 3) - comb(n - 3, 3)
        assert is_free(fam, {ConfigType.M3}).free

    def test_swaps_preserve_size_and_freeness(self):
        for n in (9, 10, 11):
            admissible = [k for k in range(1, n) if 2 * k + 4 < n]
            assert admissible
            for k in admissible:
                fam = m3_extremal(n, {k})
                assert fam.size == comb(n, 3) - comb(n - 3, 3)
                assert is_free(fam, {ConfigType.M3}).free
            fam = m3_extremal(n, admissible)
            assert fam.size == comb(n, 3) - comb(n - 3, 3)
            assert is_free(fam, {ConfigType.M3}).free

    def test_swaps_change_the_family(self):
        assert m3_extremal(9, {1}) != m3_extremal(9)

    def test_inadmissible_swaps_rejected(self):
        # k = 0 would add a star triple that is already present
        with pytest.raises(ValueError):
            m3_extremal(9, {0})
        with pytest.raises(ValueError):
            m3_extremal(9, {3})  # 2*3+4 = 10 >= 9


class TestM2:
    @pytest.mark.parametrize("n,size", [(7, 19), (8, 26)])
    def test_sizes_and_freeness(self, n, size):
        fam = m2_extremal(n)
        assert fam.size == size == comb(n, 2) - 2
        assert is_free(fam, {ConfigType.M2}).free

    def test_n6_valid_but_not_extremal(self):
        fam = m2_extremal(6)
        assert fam.size == 13
        assert is_free(fam, {ConfigType.M2}).free


class TestS3H0:
    @pytest.mark.parametrize("n,size", [(4, 4), (6, 12), (8, 24)])
    def test_sizes_and_freeness(self, n, size):
        fam = s3_h0(n)
        assert fam.size == size
        assert is_free(fam, {ConfigType.S3}).free

    def test_n4_is_everything(self):
        assert s3_h0(4) == Cgh.complete(4)

    def test_odd_rejected(self):
        with pytest.raises(ValueError):
            s3_h0(7)


class TestS2Split:
    @pytest.mark.parametrize("n,size", [(5, 5), (6, 8), (8, 15)])
    def test_sizes_and_freeness(self, n, size):
        fam = s2_split(n)
        assert fam.size == size == n * n // 4 - 1
        assert is_free(fam, {ConfigType.S2}).free


class TestTriangulations:
    def test_fan_n5(self):
        assert d2_fan(5).triples == frozenset({(0, 1, 2), (0, 2, 3), (0, 3, 4)})

    def test_fan_sizes_and_freeness(self):
        for n in range(3, 13):
            fam = d2_fan(n)
            assert fam.size == n - 2
            assert is_free(fam, {ConfigType.D2}).free

    def test_square_with_diagonal(self):
        fam = d2_from_triangulation(4, [(0, 2)])
        assert fam.triples == frozenset({(0, 1, 2), (0, 2, 3)})

    def test_validation(self):
        with pytest.raises(ValueError, match="cross"):
            d2_from_triangulation(5, [(0, 2), (1, 3)])
        with pytest.raises(ValueError, match="needs"):
            d2_from_triangulation(6, [(0, 2)])
        with pytest.raises(ValueError, match="side"):
            d2_from_triangulation(5, [(0, 1), (0, 2)])
        with pytest.raises(ValueError, match="duplicate"):
            d2_from_triangulation(6, [(0, 2), (0, 2), (0, 4)])

    def test_central_triangle_triangulation(self):
        fam = d2_from_triangulation(6, [(0, 2), (2, 4), (0, 4)])
        assert fam.triples == frozenset({(0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 2, 4)})
        assert is_free(fam, {ConfigType.D2}).free


class TestFano:
    def test_eight_triples_d2_free(self):
        fam = d2_fano7()
        assert fam.size == 8
        assert is_free(fam, {ConfigType.D2}).free

    def test_contains_prescribed_triangles(self):
        fam = d2_fano7()
        for t in ((0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 2, 4)):
            assert t in fam.triples

    def test_lines_pairwise_share_at_most_one_vertex(self):
        lines = sorted(d2_fano7().triples - {(0, 2, 4)})
        assert len(lines) == 7
        for i in range(7):
            for j in range(i + 1, 7):
                assert len(set(lines[i]) & set(lines[j])) <= 1


def affine_plane_order7() -> Design:
    """AG(2,7): 49 points, 56 lines of 7 points, every pair covered once."""
    def pt(x, y):
        return 7 * x + y

    blocks = []
    for m in range(7):
        for b in range(7):
            blocks.append(tuple(sorted(pt(x, (m * x + b) % 7) for x in range(7))))
    for c in range(7):
        blocks.append(tuple(sorted(pt(c, y) for y in range(7))))
    return parse_design({"n": 49, "blocks": [list(b) for b in blocks]})


class TestDesigns:
    def test_trivial_design_reduces_to_fano(self):
        design = Design(7, ((0, 1, 2, 3, 4, 5, 6),))
        expansion = d2_expand_design(design)
        assert expansion.family == d2_fano7()
        assert expansion.d2_free

    def test_duplicate_pair_rejected(self):
        blocks = [list(range(7)), [0, 1, 7, 8, 9, 10, 11]]
        with pytest.raises(ValueError, match=r"\(0, 1\)"):
            parse_design({"n": 12, "blocks": blocks})

    def test_uncovered_pair_rejected(self):
        with pytest.raises(ValueError, match="not covered"):
            parse_design({"n": 8, "blocks": [list(range(7))]})

    def test_bad_block_shapes(self):
        with pytest.raises(ValueError):
            parse_design({"n": 7, "blocks": [[0, 1, 2]]})
        with pytest.raises(ValueError):
            parse_design({"n": 7, "blocks": [[0, 0, 1, 2, 3, 4, 5]]})
        with pytest.raises(ValueError):
            parse_design({"n": 7, "blocks": [[0, 1, 2, 3, 4, 5, 7]]})

    def test_affine_plane_expansion(self):
        design = affine_plane_order7()
        expansion = d2_expand_design(design)
        assert expansion.family.size == 8 * comb(49, 2) // 21
        assert expansion.d2_free


class TestRegistry:
    def test_every_family_matches_expected_size(self):
        # D2TRI/D2DESIGN need parameters; covered by the acceptance suite.
        for fid in ("HSTAR", "HPRIME", "HPLUS", "M3X", "M2X", "S3H0", "S2SPLIT", "D2FAN"):
            info = FAMILIES[fid]
            for n in range(3, 11):
                if not info.valid_n(n):
                    continue
                from cghlab.constructions import build_family

                fam = build_family(fid, n)
                assert fam.size == info.expected_size(n), (fid, n)
