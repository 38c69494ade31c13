import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plueckerfan.plucker_lattices import (
    ComparablePairError,
    pbw_lattice,
    semistandard_lattice,
)
from plueckerfan.straightening import (
    CapacityExceeded,
    ORACLE_PRIME,
    apply_index_permutation,
    append_columns,
    canonicalize,
    deg_vector,
    exchange_relation,
    hibi_generator,
    hibi_grevlex_initial,
    ideal_membership,
    minor_mod_p,
    monomial,
    monomials_of_degree,
    plucker_eval,
    psi_exponent,
    random_matrix,
    shuffle_relation,
    standard_basis_check,
    standard_expansion_mod_p,
    straighten_pair,
    straightening_terms,
    symbolic_pi_expand,
    theta_exponent,
    theta_to_psi,
    wt_vector,
)

EXAMPLE_GR24 = {
    monomial(((1, 4), (2, 3))): Fraction(1),
    monomial(((1, 3), (2, 4))): Fraction(-1),
    monomial(((1, 2), (3, 4))): Fraction(1),
}
EXAMPLE_FLAG3 = {
    monomial(((2, 3), (1,))): Fraction(1),
    monomial(((1, 3), (2,))): Fraction(-1),
    monomial(((1, 2), (3,))): Fraction(1),
}


class TestCanonicalize:
    def test_already_sorted(self):
        assert canonicalize((1, 4)) == (1, (1, 4))

    def test_single_transposition(self):
        assert canonicalize((3, 2)) == (-1, (2, 3))

    def test_repeat_gives_zero(self):
        assert canonicalize((2, 2)) is None

    def test_range_check(self):
        with pytest.raises(ValueError):
            canonicalize((0, 2), n=4)

    @given(st.lists(st.integers(1, 9), min_size=1, max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_sign_is_permutation_parity(self, entries):
        result = canonicalize(tuple(entries))
        if len(set(entries)) != len(entries):
            assert result is None
        else:
            sign, col = result
            assert col == tuple(sorted(entries))
            inversions = sum(1 for i, j in itertools.combinations(range(len(entries)), 2)
                             if entries[i] > entries[j])
            assert sign == (-1) ** inversions


class TestExchangeRelation:
    def test_grassmannian_relation(self):
        assert exchange_relation((1, 4), (2, 3), 2) == EXAMPLE_GR24

    def test_flag_relation(self):
        assert exchange_relation((2, 3), (1,), 1) == EXAMPLE_FLAG3

    def test_degenerate_collapses(self):
        assert exchange_relation((1, 2), (1,), 1) == {}

    def test_membership(self):
        for rel, n in ((exchange_relation((1, 4), (2, 3), 2), 4),
                       (exchange_relation((1, 3, 5), (2, 4), 1), 5)):
            assert ideal_membership(rel, n).member


class TestShuffleRelation:
    def test_matches_grassmannian_example(self):
        assert shuffle_relation((1, 4), (2, 3), 2) == EXAMPLE_GR24

    def test_matches_flag_example(self):
        assert shuffle_relation((2, 3), (1,), 1) == EXAMPLE_FLAG3

    def test_repeated_symbols_annihilate(self):
        assert shuffle_relation((1, 2), (1,), 1) == {}

    def test_membership_various(self):
        cases = [((1, 3, 5), (2, 4), 5, 2), ((2, 4), (1, 3), 4, 1), ((1, 2, 4), (3,), 4, 1)]
        for a, b, n, r in cases:
            rel = shuffle_relation(a, b, r)
            assert ideal_membership(rel, n).member


class TestAppendColumns:
    def test_grows_flag_into_grassmannian(self):
        grown = append_columns(EXAMPLE_FLAG3, (4,), n=4)
        assert grown == EXAMPLE_GR24
        assert ideal_membership(grown, 4).member

    def test_existing_index_annihilates_term(self):
        # repeated index kills the X_2 term; the remaining three stay distinct
        rel = exchange_relation((2, 3, 4), (1,), 1)
        grown = append_columns(rel, (2, 5), n=5)
        # sign flips come from sorting the appended indices into place
        assert grown == {
            monomial(((2, 3, 4), (1, 2, 5))): Fraction(1),
            monomial(((1, 2, 4), (2, 3, 5))): Fraction(-1),
            monomial(((1, 2, 3), (2, 4, 5))): Fraction(1),
        }
        assert ideal_membership(grown, 5).member

    def test_collapse_when_append_merges_terms(self):
        # a repeated index can also cancel the relation entirely
        assert append_columns(EXAMPLE_FLAG3, (3,), n=4) == {}

    def test_zero_stays_zero(self):
        assert append_columns({}, (4,)) == {}


class TestStraightenPair:
    def test_grassmannian(self):
        lat = semistandard_lattice(4)
        assert straighten_pair(lat, (1, 4), (2, 3)) == EXAMPLE_GR24

    def test_flag(self):
        lat = semistandard_lattice(3)
        assert straighten_pair(lat, (2, 3), (1,)) == EXAMPLE_FLAG3

    def test_pbw_triple(self):
        lat = pbw_lattice(3)
        rel = straighten_pair(lat, (1, 2), (3,))
        assert rel == {
            monomial(((1, 2), (3,))): Fraction(1),
            monomial(((2, 3), (1,))): Fraction(1),
            monomial(((1, 3), (2,))): Fraction(-1),
        }
        rows = straightening_terms(lat, rel, (1, 2), (3,))
        assert rows == [((1,), (3, 2), Fraction(1)), ((2,), (1, 3), Fraction(1))]

    def test_comparable_rejected(self):
        lat = semistandard_lattice(3)
        with pytest.raises(ComparablePairError):
            straighten_pair(lat, (1, 2), (1, 3))

    @pytest.mark.parametrize("kind", ["M", "N"])
    @pytest.mark.parametrize("n", [3, 4])
    def test_all_terms_standard_and_member(self, kind, n):
        lat = semistandard_lattice(n) if kind == "M" else pbw_lattice(n)
        for a, b in lat.incomparable_pairs():
            rel = straighten_pair(lat, a, b)
            lead = monomial((lat.weight_key(a), lat.weight_key(b)))
            for mono in rel:
                if mono == lead:
                    continue
                e1, e2 = (lat.element_of_key(c) for c in mono)
                assert lat.comparable(e1, e2)
            assert ideal_membership(rel, n).member

    @pytest.mark.parametrize("kind", ["M", "N"])
    def test_matches_rank_oracle_n3(self, kind):
        lat = semistandard_lattice(3) if kind == "M" else pbw_lattice(3)
        for a, b in lat.incomparable_pairs():
            rel = straighten_pair(lat, a, b)
            oracle = standard_expansion_mod_p(lat, a, b)
            assert set(oracle) == set(rel)
            for mono, coeff in rel.items():
                c = Fraction(coeff)
                assert c.numerator * pow(c.denominator, ORACLE_PRIME - 2, ORACLE_PRIME) \
                    % ORACLE_PRIME == oracle[mono]

    def test_homogeneous(self):
        lat = semistandard_lattice(5)
        for a, b in lat.incomparable_pairs()[:30]:
            rel = straighten_pair(lat, a, b)
            assert len({deg_vector(m, 5) for m in rel}) == 1
            assert len({wt_vector(m, 5) for m in rel}) == 1

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_diamond_relations_have_three_monomials(self, n):
        # every semistandard diamond pair straightens to meet/join minus the
        # classified (below, above) product, exactly as the tuple formulas say
        lat = semistandard_lattice(n)
        for a, b in lat.diamond_pairs():
            cls = lat.classify_pair(a, b)
            rel = straighten_pair(lat, a, b)
            rows = straightening_terms(lat, rel, a, b)
            assert len(rows) == 2
            assert rows[0] == (cls.meet, cls.join, Fraction(1))
            assert rows[1] == (cls.below, cls.above, Fraction(-1))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_pbw_special_relations_match_classification(self, n):
        lat = pbw_lattice(n)
        for a, b in lat.diamond_pairs():
            cls = lat.classify_pair(a, b)
            rel = straighten_pair(lat, a, b)
            rows = straightening_terms(lat, rel, a, b)
            assert rows[0] == (cls.below, cls.join, Fraction(1))
            if cls.verdict == "diamond_special":
                assert rows[1:] == [(cls.companion, cls.above, Fraction(1))]

    def test_sampled_pairs_at_n6(self):
        for lat in (semistandard_lattice(6), pbw_lattice(6)):
            pairs = lat.incomparable_pairs()
            for a, b in pairs[:: max(1, len(pairs) // 20)]:
                rel = straighten_pair(lat, a, b)
                lead = monomial((lat.weight_key(a), lat.weight_key(b)))
                for mono in rel:
                    if mono != lead:
                        e1, e2 = (lat.element_of_key(c) for c in mono)
                        assert lat.comparable(e1, e2)
                assert ideal_membership(rel, 6, trials=5).member


class TestEvaluation:
    def test_principal_minor_of_identity(self):
        ident = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        for k in range(1, 4):
            assert plucker_eval({monomial((tuple(range(1, k + 1)),)): 1}, ident) == 1

    def test_relation_vanishes_at_random_matrices(self):
        rng = random.Random(0)
        for _ in range(10):
            Z = random_matrix(4, rng)
            assert plucker_eval(EXAMPLE_GR24, Z) == 0

    def test_generic_monomial_does_not_vanish(self):
        rng = random.Random(0)
        Z = random_matrix(4, rng)
        assert plucker_eval({monomial(((1, 2), (3, 4))): 1}, Z) != 0

    def test_characteristic_clash(self):
        with pytest.raises(ZeroDivisionError):
            plucker_eval({monomial(((1,),)): Fraction(1, ORACLE_PRIME)},
                         [[1]])


class TestMembership:
    def test_relations_are_members(self):
        lat = semistandard_lattice(4)
        for a, b in lat.incomparable_pairs():
            assert ideal_membership(straighten_pair(lat, a, b), 4).member

    def test_standard_monomial_is_not_member(self):
        verdict = ideal_membership({monomial(((1, 2), (3, 4))): 1}, 4)
        assert not verdict.member

    def test_symbolic_agrees(self):
        assert ideal_membership(EXAMPLE_GR24, 4, mode="symbolic").member
        assert not ideal_membership({monomial(((1, 2), (3, 4))): 1}, 4,
                                    mode="symbolic").member

    def test_symbolic_guard(self):
        big = {monomial(((1, 2), (3, 4), (1, 3), (2, 4))): 1}
        with pytest.raises(CapacityExceeded):
            ideal_membership(big, 4, mode="symbolic")

    def test_inhomogeneous_split(self):
        mixed = dict(EXAMPLE_GR24)
        flag = straighten_pair(semistandard_lattice(4), (2, 4), (1,))
        for m, c in flag.items():
            mixed[m] = mixed.get(m, 0) + c
        verdict = ideal_membership(mixed, 4)
        assert verdict.member
        assert verdict.failure_bound > 0

    def test_failure_bound_shape(self):
        verdict = ideal_membership(EXAMPLE_GR24, 4, trials=7, seed=3)
        assert verdict.failure_bound == Fraction(4, ORACLE_PRIME) ** 7


class TestSymbolicExpansion:
    def test_single_variable(self):
        out = symbolic_pi_expand({monomial(((1, 2),)): 1}, 3)
        # 2x2 top minor: two Leibniz terms
        assert len(out) == 2

    def test_relation_expands_to_zero(self):
        assert symbolic_pi_expand(EXAMPLE_GR24, 4) == {}


class TestIndexPermutation:
    def test_identity(self):
        assert apply_index_permutation(EXAMPLE_GR24, (1, 2, 3, 4)) == EXAMPLE_GR24

    def test_transposition_preserves_membership(self):
        swapped = apply_index_permutation(EXAMPLE_GR24, (2, 1, 3, 4))
        assert ideal_membership(swapped, 4).member

    def test_block_rotation_equivariance(self):
        # the relabelling used to reduce unequal-length pairs to equal length
        lat = pbw_lattice(5)
        n = 5
        for a, b in lat.incomparable_pairs():
            k, l = len(a), len(b)
            if k <= l or any(v > n - k + l for v in a + b):
                continue
            perm = {}
            for j in range(1, n + 1):
                if j <= l:
                    perm[j] = j
                elif j <= n - k + l:
                    perm[j] = j + k - l
                else:
                    perm[j] = j - n + k
            rel = straighten_pair(lat, a, b)
            moved = apply_index_permutation(rel, perm)
            ra = tuple(sorted(perm[v] for v in a))
            rb = tuple(sorted(perm[v] for v in b))
            from plueckerfan.plucker_lattices import pbw_arrange
            target = straighten_pair(lat, pbw_arrange(ra), pbw_arrange(rb))
            scaled = {m: -c for m, c in target.items()}
            assert moved in (target, scaled)


class TestHibiGenerators:
    def test_plain_binomial(self):
        lat = semistandard_lattice(3)
        gen = hibi_generator(lat, (1,), (2, 3))
        assert gen == {((1,), (2, 3)): Fraction(1), ((1, 3), (2,)): Fraction(-1)}

    def test_generalized_binomial(self):
        lat = pbw_lattice(3)
        gen = hibi_generator(lat, (1, 2), (3,), lat.partition)
        assert gen == {((1, 2), (3,)): Fraction(1), ((1,), (3, 2)): Fraction(-1)}

    def test_comparable_rejected(self):
        lat = semistandard_lattice(3)
        with pytest.raises(ComparablePairError):
            hibi_generator(lat, (1, 2), (1, 3))

    def test_order_partition_reduces_to_plain_binomial(self):
        from plueckerfan.chain_order import ChainOrderPartition
        for n in (3, 4):
            lat = semistandard_lattice(n)
            order_part = ChainOrderPartition.order_polytope(lat.ji_poset)
            for a, b in lat.incomparable_pairs():
                assert hibi_generator(lat, a, b, order_part) == hibi_generator(lat, a, b)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_kernel_exponents_match(self, n):
        lat = pbw_lattice(n)
        part = lat.partition
        for a, b in lat.incomparable_pairs():
            gen = hibi_generator(lat, a, b, part)
            (m1, c1), (m2, c2) = sorted(gen.items(), key=lambda kv: kv[1], reverse=True)
            assert theta_exponent(lat, part, m1) == theta_exponent(lat, part, m2)

    def test_theta_examples(self):
        lat = pbw_lattice(3)
        part = lat.partition
        bottom = theta_exponent(lat, part, ((1,),))
        assert bottom == {"t": 1}
        pair = theta_exponent(lat, part, ((1, 2), (3,)))
        assert pair["t"] == 2

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_grevlex_initial_term(self, n):
        for lat in (semistandard_lattice(n), pbw_lattice(n)):
            for a, b in lat.incomparable_pairs():
                gen = hibi_generator(lat, a, b)
                assert hibi_grevlex_initial(lat, gen) == tuple(sorted((a, b)))


class TestPsiExponents:
    def test_examples(self):
        assert psi_exponent((1,), 3) == {("zdiag", 1): 1}
        assert psi_exponent((3, 2), 3) == {("zdiag", 2): 1, ("zcell", (1, 3)): 1}
        assert psi_exponent((1, 3), 3) == {("zdiag", 2): 1, ("zcell", (2, 3)): 1}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_matches_theta_under_substitution(self, n):
        lat = pbw_lattice(n)
        part = lat.partition
        for b in lat.elements:
            theta = theta_exponent(lat, part, (b,))
            assert theta_to_psi(theta) == psi_exponent(b, n)


class TestStandardBasis:
    def test_single_variable_degrees(self):
        lat = semistandard_lattice(3)
        for k in range(1, 3):
            lam = tuple(1 if i == k - 1 else 0 for i in range(2))
            assert standard_basis_check(lat, lam)

    def test_quadratic_pbw(self):
        lat = pbw_lattice(3)
        assert standard_basis_check(lat, (1, 1))

    def test_cubic_semistandard(self):
        lat = semistandard_lattice(4)
        assert standard_basis_check(lat, (1, 1, 1))

    def test_guard(self):
        lat = semistandard_lattice(4)
        with pytest.raises(CapacityExceeded):
            standard_basis_check(lat, (4, 0, 0))

    def test_monomial_enumeration_counts(self):
        lat = semistandard_lattice(4)
        assert len(monomials_of_degree(lat, (2, 0, 0))) == 10
        assert len(monomials_of_degree(lat, (1, 1, 0))) == 24


def test_minor_mod_p_matches_fraction_det():
    rng = random.Random(1)
    for _ in range(20):
        Z = [[rng.randrange(-9, 10) for _ in range(3)] for _ in range(3)]
        det = (Z[0][0] * (Z[1][1] * Z[2][2] - Z[1][2] * Z[2][1])
               - Z[0][1] * (Z[1][0] * Z[2][2] - Z[1][2] * Z[2][0])
               + Z[0][2] * (Z[1][0] * Z[2][1] - Z[1][1] * Z[2][0]))
        assert minor_mod_p(Z, (1, 2, 3)) == det % ORACLE_PRIME
