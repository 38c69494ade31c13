import itertools

import pytest
from hypothesis import given, settings, strategies as st

from plueckerfan.order_core import CapacityError
from plueckerfan.plucker_lattices import (
    ComparablePairError,
    PluckerLattice,
    column_grade,
    is_pbw_column,
    ji_cells,
    ji_column,
    pbw_arrange,
    pbw_lattice,
    pbw_to_ssyt,
    pbw_two_column_leq,
    semistandard_lattice,
    ssyt_to_pbw,
)


class TestSemistandardLattice:
    def test_n3_hasse_chain(self):
        lat = semistandard_lattice(3)
        assert lat.elements == ((1, 2), (1, 3), (1,), (2, 3), (2,), (3,))
        assert set(lat.cover_pairs()) == {
            ((1, 2), (1, 3)), ((1, 3), (1,)), ((1, 3), (2, 3)),
            ((1,), (2,)), ((2, 3), (2,)), ((2,), (3,))}

    def test_meet_join_example(self):
        lat = semistandard_lattice(4)
        assert lat.meet((1, 4), (2, 3)) == (1, 3)
        assert lat.join((1, 4), (2, 3)) == (2, 4)

    def test_n4_irreducibles_match_diagram(self):
        lat = semistandard_lattice(4)
        reds = {(1,), (4,), (1, 2), (1, 4), (3, 4), (1, 2, 4), (1, 3, 4), (2, 3, 4)}
        irr = {c for c in lat.elements
               if sum(1 for a in lat.elements if lat.covers(a, c)) == 1}
        assert irr == reds
        assert {ji_column(cell, 4) for cell in ji_cells(4)} == reds

    def test_element_counts(self):
        for n in (2, 3, 4, 5, 6):
            assert len(semistandard_lattice(n)) == 2 ** n - 2

    def test_n4_hasse_diagram(self):
        expected = {
            ((1, 2, 3), (1, 2, 4)), ((1, 2, 4), (1, 2)), ((1, 2, 4), (1, 3, 4)),
            ((1, 2), (1, 3)), ((1, 3, 4), (1, 3)), ((1, 3, 4), (2, 3, 4)),
            ((1, 3), (1, 4)), ((1, 3), (2, 3)), ((2, 3, 4), (2, 3)),
            ((1, 4), (1,)), ((1, 4), (2, 4)), ((2, 3), (2, 4)),
            ((1,), (2,)), ((2, 4), (2,)), ((2, 4), (3, 4)),
            ((2,), (3,)), ((3, 4), (3,)), ((3,), (4,)),
        }
        assert set(semistandard_lattice(4).cover_pairs()) == expected

    def test_size_guards(self):
        with pytest.raises(ValueError):
            semistandard_lattice(1)
        with pytest.raises(CapacityError):
            semistandard_lattice(13)

    def test_meet_join_are_lattice_operations(self):
        lat = semistandard_lattice(4)
        for a, b in itertools.combinations(lat.elements, 2):
            m, j = lat.meet(a, b), lat.join(a, b)
            assert lat.leq(m, a) and lat.leq(m, b)
            assert lat.leq(a, j) and lat.leq(b, j)
            for c in lat.elements:
                if lat.leq(c, a) and lat.leq(c, b):
                    assert lat.leq(c, m)
                if lat.leq(a, c) and lat.leq(b, c):
                    assert lat.leq(j, c)

    def test_grading_formula_matches_ideal_size(self):
        for n in (3, 4, 5):
            lat = semistandard_lattice(n)
            for a in lat.elements:
                assert column_grade(a, n) == len(lat.cell_ideal(a))

    def test_cover_patterns(self):
        # covers either bump one entry by one, or drop a trailing n
        for n in (4, 5, 6):
            lat = semistandard_lattice(n)
            for a, b in lat.cover_pairs():
                if len(a) == len(b):
                    diff = [r for r in range(len(a)) if a[r] != b[r]]
                    assert len(diff) == 1 and a[diff[0]] == b[diff[0]] - 1
                else:
                    assert len(a) == len(b) + 1 and a[-1] == n and a[:-1] == b


class TestPBWColumns:
    def test_validity(self):
        assert is_pbw_column((3, 2), 3)
        assert is_pbw_column((1, 2, 4), 4)
        assert not is_pbw_column((2, 3), 3)      # small entry off its slot
        assert not is_pbw_column((4, 5, 3), 5)   # big entries must decrease
        assert not is_pbw_column((4, 5), 5)

    @given(st.integers(3, 8), st.data())
    @settings(max_examples=80, deadline=None)
    def test_arrangement_unique(self, n, data):
        k = data.draw(st.integers(1, n - 1))
        values = data.draw(st.sets(st.integers(1, n), min_size=k, max_size=k))
        alpha = pbw_arrange(values)
        assert is_pbw_column(alpha, n)
        assert set(alpha) == set(values)
        others = [p for p in itertools.permutations(values) if is_pbw_column(p, n)]
        assert others == [alpha]

    def test_two_column_rule(self):
        assert pbw_two_column_leq((3, 2), (3, 2))
        assert pbw_two_column_leq((1, 3), (3, 2))
        assert not pbw_two_column_leq((1, 2), (3,))


class TestPBWLattice:
    def test_n3_chain(self):
        lat = pbw_lattice(3)
        assert lat.elements == ((1,), (2,), (1, 2), (3,), (3, 2), (1, 3))

    def test_counts(self):
        for n in (2, 3, 4, 5):
            assert len(pbw_lattice(n)) == 2 ** n - 2

    def test_n4_hasse_diagram(self):
        expected = {
            ((1,), (2,)), ((2,), (1, 2)), ((2,), (3,)), ((1, 2), (3, 2)),
            ((3,), (3, 2)), ((3,), (4,)), ((3, 2), (1, 3)), ((3, 2), (4, 2)),
            ((4,), (4, 2)), ((1, 3), (1, 2, 3)), ((1, 3), (4, 3)),
            ((4, 2), (4, 3)), ((1, 2, 3), (4, 2, 3)), ((4, 3), (4, 2, 3)),
            ((4, 3), (1, 4)), ((4, 2, 3), (1, 4, 3)), ((1, 4), (1, 4, 3)),
            ((1, 4, 3), (1, 2, 4)),
        }
        assert set(pbw_lattice(4).cover_pairs()) == expected

    def test_n4_irreducibles_match_diagram(self):
        lat = pbw_lattice(4)
        reds = {(1, 2, 4), (1, 4), (1, 2, 3), (1, 3), (4,), (3,), (1, 2), (2,)}
        irr = {c for c in lat.elements
               if sum(1 for a in lat.elements if lat.covers(a, c)) == 1}
        assert irr == reds

    def test_order_agrees_with_ideal_containment(self):
        for n in (3, 4, 5):
            lat = pbw_lattice(n)
            for a in lat.elements:
                for b in lat.elements:
                    assert lat.leq(a, b) == (
                        lat.cell_ideal(a) <= lat.cell_ideal(b))

    def test_tableau_from_ideal_examples(self):
        lat = pbw_lattice(3)
        assert lat.element_of_cell_ideal(frozenset()) == (1,)
        assert lat.element_of_cell_ideal(lat.cell_ideal((3, 2))) == (3, 2)
        lat7 = pbw_lattice(7)
        red = {(2, 2), (3, 3), (4, 4), (1, 2), (2, 3), (3, 4), (4, 5),
               (1, 3), (2, 4), (3, 5), (1, 4), (2, 5), (3, 6), (1, 5),
               (2, 6), (1, 6), (1, 7)}
        assert lat7.element_of_cell_ideal(frozenset(red)) == (7, 2, 6, 5)


class TestIsomorphism:
    def test_label_examples(self):
        m4 = semistandard_lattice(4)
        by_ideal = {m4.cell_ideal(a): a for a in m4.elements}
        a = by_ideal[frozenset({(1, 2), (2, 2), (1, 3), (2, 3), (1, 4)})]
        assert ssyt_to_pbw(m4, a) == (4, 3)
        assert ssyt_to_pbw(m4, by_ideal[frozenset()]) == (1,)
        assert ssyt_to_pbw(m4, by_ideal[frozenset({(1, 2), (2, 2), (1, 3)})]) == (3, 2)

    def test_tau_examples(self):
        m4 = semistandard_lattice(4)
        assert ssyt_to_pbw(m4, (4,)) == (1, 2, 4)
        m3 = semistandard_lattice(3)
        assert ssyt_to_pbw(m3, (1, 2)) == (1,)
        assert ssyt_to_pbw(m3, (2,)) == (3, 2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_tau_is_lattice_isomorphism(self, n):
        mlat, nlat = semistandard_lattice(n), pbw_lattice(n)
        image = {a: ssyt_to_pbw(mlat, a) for a in mlat.elements}
        assert sorted(image.values()) == sorted(nlat.elements)
        for a in mlat.elements:
            assert pbw_to_ssyt(nlat, image[a]) == a
        for a, b in itertools.product(mlat.elements, repeat=2):
            assert mlat.leq(a, b) == nlat.leq(image[a], image[b])


class TestClassification:
    def test_rejects_comparable(self):
        lat = semistandard_lattice(3)
        with pytest.raises(ComparablePairError):
            lat.classify_pair((1, 2), (1, 3))

    def test_special_examples(self):
        m4 = semistandard_lattice(4)
        cls = m4.classify_pair((1, 4), (2, 3))
        assert cls.verdict == "diamond_special"
        assert (cls.below, cls.above) == ((1, 2), (3, 4))
        m3 = semistandard_lattice(3)
        cls = m3.classify_pair((2, 3), (1,))
        assert cls.verdict == "diamond_special"
        assert (cls.below, cls.above) == ((1, 2), (3,))
        n3 = pbw_lattice(3)
        cls = n3.classify_pair((1, 2), (3,))
        assert cls.verdict == "diamond_special"
        assert cls.below == (1,) and cls.companion == (2,) and cls.above == (1, 3)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_diamond_patterns(self, n):
        lat = semistandard_lattice(n)
        for a, b in lat.diamond_pairs():
            if len(a) == len(b):
                diff = [r for r in range(len(a)) if a[r] != b[r]]
                assert len(diff) == 2
                r1, r2 = diff
                i, j = (a, b) if a[r1] == b[r1] - 1 else (b, a)
                assert i[r1] == j[r1] - 1 and i[r2] == j[r2] + 1
            else:
                lo, hi = (a, b) if len(a) > len(b) else (b, a)
                assert lo[-1] == n
                diff = [r for r in range(len(hi)) if lo[r] != hi[r]]
                assert len(diff) == 1 and lo[diff[0]] == hi[diff[0]] + 1

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_only_four_elements_between(self, n):
        lat = semistandard_lattice(n)
        for a, b in lat.diamond_pairs():
            cls = lat.classify_pair(a, b)
            between = [c for c in lat.elements
                       if lat.leq(cls.below, c) and lat.leq(c, cls.above)
                       and c not in (cls.below, cls.above)]
            if cls.verdict == "diamond_special":
                assert sorted(between) == sorted(
                    [cls.pair[0], cls.pair[1], cls.meet, cls.join])
            else:
                assert len(between) > 4

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_between_witness_for_plain_diamonds(self, n):
        lat = semistandard_lattice(n)
        for a, b in lat.diamond_pairs():
            cls = lat.classify_pair(a, b)
            if cls.verdict != "diamond_plain":
                continue
            witnesses = [
                c for c in lat.elements
                if c not in cls.pair
                and lat.leq(cls.below, c) and c != cls.below
                and lat.leq(c, cls.above) and c != cls.above
                and (not lat.comparable(c, cls.pair[0])
                     or not lat.comparable(c, cls.pair[1]))]
            assert witnesses, (a, b)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_odot_against_meet(self, n):
        lat = pbw_lattice(n)
        for a, b in lat.diamond_pairs():
            cls = lat.classify_pair(a, b)
            if cls.verdict == "diamond_special":
                assert cls.below != cls.meet
                assert lat.grade(cls.below) == lat.grade(cls.meet) - 1
            else:
                assert cls.below == cls.meet

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9])
    def test_pair_counts_match_formulas(self, n):
        lat = semistandard_lattice(n)
        diamonds = lat.diamond_pairs()
        special = [p for p in diamonds
                   if lat.classify_pair(*p).verdict == "diamond_special"]
        assert len(diamonds) * 2 ** 5 == (n * n - n - 2) * 2 ** n
        assert len(special) * 2 ** 4 == (n - 3) * 2 ** n + 2 ** (n + 1)


def test_parse_and_naming_round_trip():
    lat = pbw_lattice(4)
    for a in lat.elements:
        name = ",".join(map(str, a))
        assert tuple(int(x) for x in name.split(",")) == a


class TestLargerWorkedExample:
    def test_n7_cover_and_special_structure(self):
        # the ideal below b_{7,2,6,5} is covered by exactly three elements,
        # and only the two whose new cells sit diagonally adjacent are special
        lat = pbw_lattice(7)
        c = (7, 2, 6, 5)
        ideal = lat.cell_ideal(c)
        above = [e for e in lat.elements if lat.covers(c, e)]
        added = {next(iter(lat.cell_ideal(e) - ideal)) for e in above}
        assert added == {(5, 5), (4, 6), (2, 7)}
        by_cell = {next(iter(lat.cell_ideal(e) - ideal)): e for e in above}
        special = lat.classify_pair(by_cell[(5, 5)], by_cell[(4, 6)])
        assert special.verdict == "diamond_special"
        assert lat.classify_pair(by_cell[(5, 5)], by_cell[(2, 7)]).verdict == "diamond_plain"
        assert lat.classify_pair(by_cell[(4, 6)], by_cell[(2, 7)]).verdict == "diamond_plain"
        # the product element drops the cell under the added square and the
        # upper companion adds the cell right of it
        assert lat.cell_ideal(special.below) == ideal - {(4, 5)}
        assert lat.cell_ideal(special.above) == (
            ideal | {(5, 5), (4, 6), (5, 6)})


class TestLazyLattice:
    def test_classification_past_the_cap(self):
        from plueckerfan.plucker_lattices import lazy_lattice, pbw_label
        lat = lazy_lattice("M", 20)
        cls = lat.classify_pair((3, 4), (2, 5))
        assert cls.verdict == "diamond_special"
        assert (cls.below, cls.above) == ((2, 3), (4, 5))
        nlat = lazy_lattice("N", 20)
        a, b = pbw_label((3, 4), 20), pbw_label((2, 5), 20)
        assert nlat.classify_pair(a, b).verdict == "diamond_special"

    @pytest.mark.parametrize("kind", ["M", "N"])
    def test_agrees_with_materialized(self, kind):
        from plueckerfan.plucker_lattices import lazy_lattice
        full = PluckerLattice(kind, 4)
        lazy = lazy_lattice(kind, 4)
        for a, b in full.incomparable_pairs():
            assert full.classify_pair(a, b) == lazy.classify_pair(a, b)

    def test_rejects_foreign_tuples(self):
        from plueckerfan.plucker_lattices import lazy_lattice
        with pytest.raises(ValueError):
            lazy_lattice("M", 15).check_element((4, 2))
        with pytest.raises(ValueError):
            lazy_lattice("N", 15).check_element((2, 3))
