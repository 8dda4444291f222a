"""Ground set, ranking, symmetry, and family plumbing."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cghlab.core import (
    CentroidPosition,
    Cgh,
    Symmetry,
    all_symmetries,
    all_triples,
    apply_symmetry,
    apply_vertex,
    canonical_form,
    centroid_position,
    compose,
    gaps,
    load_cgh,
    save_cgh,
    triple_rank,
    triple_unrank,
)

from conftest import sized_triples, small_families


class TestGaps:
    def test_regular_triangle(self):
        assert gaps(6, (0, 2, 4)) == (2, 2, 2)

    def test_cap_triangle(self):
        assert gaps(7, (0, 1, 2)) == (1, 1, 5)

    def test_mixed(self):
        assert gaps(6, (0, 1, 3)) == (1, 2, 3)

    @given(sized_triples())
    def test_sum_is_n(self, nt):
        n, t = nt
        g = gaps(n, t)
        assert sum(g) == n
        assert all(x >= 1 for x in g)

    def test_invalid_triple_rejected(self):
        with pytest.raises(ValueError):
            gaps(5, (0, 1, 5))
        with pytest.raises(ValueError):
            gaps(5, (2, 1, 0))
        with pytest.raises(ValueError):
            gaps(5, (0, 1, 1))


class TestCentroidPosition:
    def test_regular_interior(self):
        assert centroid_position(6, (0, 2, 4)) is CentroidPosition.INTERIOR

    def test_diameter_boundary(self):
        # Chord {0, 3} is a diameter of the hexagon.
        assert centroid_position(6, (0, 1, 3)) is CentroidPosition.BOUNDARY

    def test_cap_exterior(self):
        assert centroid_position(7, (0, 1, 2)) is CentroidPosition.EXTERIOR

    def test_boundary_only_for_even_n(self):
        for n in range(3, 13, 2):
            for t in all_triples(n):
                assert centroid_position(n, t) is not CentroidPosition.BOUNDARY

    @given(sized_triples(), st.integers(0, 50), st.booleans())
    def test_dihedral_invariance(self, nt, rot, refl):
        n, t = nt
        s = Symmetry(rot % n, refl)
        assert centroid_position(n, t) is centroid_position(n, apply_symmetry(n, s, t))


class TestRanking:
    def test_first_in_colex(self):
        assert triple_rank(5, (0, 1, 2)) == 0

    def test_last_triple_n6(self):
        # Oracle: position in an explicit colex enumeration.
        ordered = sorted(all_triples(6), key=lambda t: (t[2], t[1], t[0]))
        assert ordered.index((3, 4, 5)) == 19
        assert triple_rank(6, (3, 4, 5)) == 19

    def test_enumeration_order_matches_rank(self):
        for n in range(3, 13):
            for i, t in enumerate(all_triples(n)):
                assert triple_rank(n, t) == i
                assert triple_unrank(n, i) == t

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            triple_unrank(5, 10)
        with pytest.raises(ValueError):
            triple_unrank(5, -1)


class TestSymmetry:
    def test_rotation(self):
        assert apply_symmetry(6, Symmetry(1, False), (0, 1, 2)) == (1, 2, 3)

    def test_reflection_fixes_v0(self):
        assert apply_symmetry(6, Symmetry(0, True), (0, 1, 2)) == (0, 4, 5)

    def test_full_rotation_is_identity(self):
        for t in all_triples(5):
            assert apply_symmetry(5, Symmetry(5 % 5, False), t) == t

    def test_group_closure_and_order(self):
        for n in (4, 5, 6, 7):
            syms = all_symmetries(n)
            assert len(syms) == 2 * n
            tables = {s: tuple(apply_vertex(n, s, v) for v in range(n)) for s in syms}
            assert len(set(tables.values())) == 2 * n
            for s1 in syms:
                for s2 in syms:
                    combined = compose(n, s1, s2)
                    expected = tuple(apply_vertex(n, s1, apply_vertex(n, s2, v)) for v in range(n))
                    assert tables[combined] == expected


class TestCanonicalForm:
    def test_rotates_to_smallest(self):
        h = Cgh.of(6, [(1, 2, 3)])
        assert canonical_form(h) == Cgh.of(6, [(0, 1, 2)])

    @given(small_families())
    @settings(max_examples=60)
    def test_idempotent(self, h):
        c = canonical_form(h)
        assert canonical_form(c) == c

    @given(small_families(), st.integers(0, 40), st.booleans())
    @settings(max_examples=60)
    def test_orbit_invariance(self, h, rot, refl):
        s = Symmetry(rot % h.n, refl)
        assert canonical_form(h.apply(s)) == canonical_form(h)

    def test_counts_triple_orbits(self):
        for n in (5, 6, 7, 8):
            trips = all_triples(n)
            canon = {canonical_form(Cgh.of(n, [t])) for t in trips}
            orbits = set()
            for t in trips:
                orbit = frozenset(apply_symmetry(n, s, t) for s in all_symmetries(n))
                orbits.add(orbit)
            assert len(canon) == len(orbits)


class TestCgh:
    def test_shadow(self):
        assert Cgh.of(3, [(0, 1, 2)]).shadow() == {(0, 1), (0, 2), (1, 2)}

    def test_link(self):
        h = Cgh.of(4, [(0, 1, 2), (0, 2, 3), (1, 2, 3)])
        assert h.link(0) == {(1, 2), (2, 3)}

    @given(small_families())
    def test_shadow_at_most_three_per_triple(self, h):
        assert len(h.shadow()) <= 3 * h.size

    def test_rejects_invalid_triples(self):
        with pytest.raises(ValueError):
            Cgh(5, frozenset({(0, 1, 5)}))
        with pytest.raises(ValueError):
            Cgh.of(5, [(0, 0, 1)])

    def test_json_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            Cgh.from_json_dict({"n": 5, "triples": [[0, 1, 2], [0, 1, 2]]})

    def test_json_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Cgh.from_json_dict({"n": 5, "triples": [[0, 1, 5]]})

    def test_json_rejects_descending(self):
        with pytest.raises(ValueError):
            Cgh.from_json_dict({"n": 5, "triples": [[2, 1, 0]]})

    def test_file_roundtrip(self, tmp_path):
        h = Cgh.of(6, [(0, 1, 3), (2, 4, 5), (0, 2, 4)])
        path = tmp_path / "fam.json"
        save_cgh(h, str(path))
        assert load_cgh(str(path)) == h
        # sorted (colex) order on disk
        data = json.loads(path.read_text())
        assert data["triples"] == [[0, 1, 3], [0, 2, 4], [2, 4, 5]]
