import pytest

from autcrit.abelian import PPartition, hom_order
from autcrit.automorphisms import (
    C_STAR,
    CENTRAL,
    IA,
    IA_STAR,
    aut_upper_lower,
    autset_equal,
    distinguished,
)
from autcrit.catalog import build_group, cyclic_group, get_spec
from autcrit.criteria import (
    CASE_I,
    CASE_II,
    DEGENERATE_EQUALITY,
    NONE,
    adney_yen_check,
    cor_2_3,
    cor_2_4,
    cor_2_5,
    cor_2_6,
    cor_2_7,
    cor_2_8,
    cor_2_9,
    cor_2_10,
    lemma_2_11_check,
    thm_2_12,
)
from autcrit.errors import (
    AbelianInputError,
    ClassNotTwoError,
    HypothesisViolationError,
)
from autcrit.report import sweep_2_3, sweep_2_45


def by_name(name):
    return build_group(get_spec(name))


@pytest.fixture(scope="module")
def q8():
    return by_name("Q8")


@pytest.fixture(scope="module")
def d8():
    return by_name("D8")


@pytest.fixture(scope="module")
def m16():
    return by_name("M16")


@pytest.fixture(scope="module")
def d16():
    return by_name("D16")


@pytest.fixture(scope="module")
def q8xc2():
    return by_name("Q8xC2")


class TestCor23:
    def test_identical_tuple(self, q8):
        z = q8.center()
        full = q8.full_subgroup()
        v = cor_2_3(q8, z, full, z, full)
        assert v.predicted_equal and v.clause == CASE_I

    def test_q8_rank_mismatch(self, q8):
        z = q8.center()
        v = cor_2_3(q8, z, q8.full_subgroup(), z, z)
        assert not v.predicted_equal
        left = aut_upper_lower(q8, z, q8.full_subgroup())
        right = aut_upper_lower(q8, z, z)
        assert len(left) == 1 and len(right) == 4
        assert not autset_equal(left, right)

    def test_hypothesis_violations(self, q8):
        z = q8.center()
        full = q8.full_subgroup()
        with pytest.raises(HypothesisViolationError):
            cor_2_3(q8, full, full, full, full)  # M not central
        with pytest.raises(HypothesisViolationError):
            cor_2_3(q8, z, z, z, full)  # N2 not <= N1

    def test_abelian_input(self):
        g = cyclic_group(4)
        s = g.full_subgroup()
        with pytest.raises(AbelianInputError):
            cor_2_3(g, s, s, s, s)

    @pytest.mark.parametrize("name", ["Q8", "D8", "M16", "D16"])
    def test_sweep_agrees_with_brute_force(self, name):
        g = by_name(name)
        for m1, n1, m2, n2 in sweep_2_3(g):
            v = cor_2_3(g, m1, n1, m2, n2)
            observed = autset_equal(
                aut_upper_lower(g, m1, n1), aut_upper_lower(g, m2, n2)
            )
            assert v.predicted_equal == observed, (name, m1, n1, m2, n2)


class TestCor24:
    def test_m_equals_n_equals_z(self, q8):
        z = q8.center()
        v = cor_2_4(q8, z, z)
        assert v.predicted_equal and v.clause == CASE_I

    def test_q8_full_n(self, q8):
        # quotient by G'N = G collapses to rank 0 versus rank 2
        z = q8.center()
        v = cor_2_4(q8, z, q8.full_subgroup())
        assert not v.predicted_equal
        observed = autset_equal(
            aut_upper_lower(q8, z, q8.full_subgroup()), distinguished(q8, C_STAR)
        )
        assert observed is False

    def test_agrees_with_cor_2_3_specialisation(self):
        for name in ("Q8", "D8", "M16", "D8xC2"):
            g = by_name(name)
            z = g.center()
            for m, n in sweep_2_45(g):
                lhs = cor_2_4(g, m, n).predicted_equal
                rhs = cor_2_3(g, m, n, z, z).predicted_equal
                assert lhs == rhs, (name, m, n)

    def test_sweep_agrees_with_brute_force(self):
        for name in ("D8", "M16", "Q8xC2"):
            g = by_name(name)
            cs = distinguished(g, C_STAR)
            for m, n in sweep_2_45(g):
                v = cor_2_4(g, m, n)
                observed = autset_equal(aut_upper_lower(g, m, n), cs)
                assert v.predicted_equal == observed, (name, m, n)


class TestCor25:
    def test_d8_center_center(self, d8):
        z = d8.center()
        v = cor_2_5(d8, z, z)
        assert v.predicted_equal and v.clause == CASE_I
        assert autset_equal(
            aut_upper_lower(d8, z, z), distinguished(d8, CENTRAL)
        )

    def test_m16_full_n(self, m16):
        z = m16.center()
        v = cor_2_5(m16, z, m16.full_subgroup())
        assert not v.predicted_equal
        assert "d(D) = 0" in v.evidence["case_i"]

    def test_reduction_to_identical_quotients(self, q8):
        # N inside G' makes G'N = G': clause (ii) via N <= G'
        z = q8.center()  # = G' for Q8
        v = cor_2_5(q8, z, z)
        assert v.predicted_equal

    def test_sweep_agrees_with_brute_force(self):
        for name in ("Q8", "D8", "M16", "D16"):
            g = by_name(name)
            ac = distinguished(g, CENTRAL)
            for m, n in sweep_2_45(g):
                v = cor_2_5(g, m, n)
                observed = autset_equal(aut_upper_lower(g, m, n), ac)
                assert v.predicted_equal == observed, (name, m, n)


class TestCor26:
    def test_examples(self, q8, d8, m16):
        assert cor_2_6(q8).predicted_equal
        assert cor_2_6(d8).predicted_equal
        v = cor_2_6(m16)
        assert not v.predicted_equal and v.clause == NONE

    def test_observed(self, q8, m16):
        assert autset_equal(distinguished(q8, IA_STAR), distinguished(q8, CENTRAL))
        assert not autset_equal(
            distinguished(m16, IA_STAR), distinguished(m16, CENTRAL)
        )

    def test_abelian_rejected(self):
        with pytest.raises(AbelianInputError):
            cor_2_6(cyclic_group(8))


class TestCor27:
    def test_first_disjunct(self, q8, d8):
        assert cor_2_7(q8).clause == DEGENERATE_EQUALITY
        assert cor_2_7(d8).clause == DEGENERATE_EQUALITY

    def test_q8xc2_second_disjunct_path(self, q8xc2):
        v = cor_2_7(q8xc2)
        observed = autset_equal(
            distinguished(q8xc2, CENTRAL), distinguished(q8xc2, C_STAR)
        )
        assert v.predicted_equal == observed

    def test_z_in_derived_forces_true(self):
        g = by_name("C3wrC3")
        v = cor_2_7(g)
        assert v.predicted_equal and v.clause == DEGENERATE_EQUALITY


class TestCor28:
    def test_q8(self, q8):
        assert cor_2_8(q8).clause == DEGENERATE_EQUALITY

    def test_m16_case_values(self, m16):
        v = cor_2_8(m16)
        assert v.predicted_equal and v.clause == CASE_II
        assert v.evidence["G/Z"] == "2^[1,1]"
        assert v.evidence["G/G'"] == "2^[2,1]"
        assert autset_equal(distinguished(m16, IA), distinguished(m16, IA_STAR))

    def test_class_three_rejected(self, d16):
        with pytest.raises(ClassNotTwoError):
            cor_2_8(d16)


class TestCor29:
    def test_d8(self, d8):
        assert cor_2_9(d8).predicted_equal

    def test_m16_values(self, m16):
        v = cor_2_9(m16)
        assert v.predicted_equal and v.clause == CASE_II
        assert autset_equal(distinguished(m16, IA_STAR), distinguished(m16, C_STAR))

    def test_q8xc2_rank_mismatch(self, q8xc2):
        v = cor_2_9(q8xc2)
        assert not v.predicted_equal
        assert not autset_equal(
            distinguished(q8xc2, IA_STAR), distinguished(q8xc2, C_STAR)
        )

    def test_class_three_is_false(self, d16):
        assert not cor_2_9(d16).predicted_equal


class TestCor210:
    def test_q8(self, q8):
        v = cor_2_10(q8)
        assert v.predicted_equal and v.clause == DEGENERATE_EQUALITY
        assert autset_equal(distinguished(q8, IA), distinguished(q8, C_STAR))

    def test_m16_four_way_equality(self, m16):
        v = cor_2_10(m16)
        assert v.predicted_equal and v.clause == CASE_II
        assert v.evidence["exp(G')"] == "2"
        assert v.evidence["var(G/Z,G/G')"] == "2"
        assert v.evidence["exp(G/Z)"] == "2"
        assert v.evidence["var(G',Z)"] == "2"
        assert autset_equal(distinguished(m16, IA), distinguished(m16, C_STAR))

    def test_q8xc2_false(self, q8xc2):
        assert not cor_2_10(q8xc2).predicted_equal
        assert not autset_equal(
            distinguished(q8xc2, IA), distinguished(q8xc2, C_STAR)
        )

    def test_implies_28_and_29(self, nonabelian_corpus):
        for name, g in sorted(nonabelian_corpus.items()):
            if g.nilpotence_class() != 2:
                continue
            if cor_2_10(g).predicted_equal:
                assert cor_2_8(g).predicted_equal, name
                assert cor_2_9(g).predicted_equal, name


class TestThm212:
    def test_q8(self, q8):
        assert thm_2_12(q8).predicted_equal
        assert autset_equal(distinguished(q8, IA), distinguished(q8, CENTRAL))

    def test_m16_exponent_obstruction(self, m16):
        v = thm_2_12(m16)
        assert not v.predicted_equal
        assert "exp(A) = 4 > var(B, C) = 2" in v.evidence["detail"]
        assert not autset_equal(distinguished(m16, IA), distinguished(m16, CENTRAL))

    def test_m81_false_but_29_true(self):
        g = by_name("M81")
        assert not thm_2_12(g).predicted_equal
        assert cor_2_9(g).predicted_equal

    def test_d16_class_three(self, d16):
        assert not thm_2_12(d16).predicted_equal
        assert not autset_equal(distinguished(d16, IA), distinguished(d16, CENTRAL))


class TestLemma211:
    @pytest.mark.parametrize("name", ["Q8", "M16", "He3"])
    def test_examples(self, name):
        assert lemma_2_11_check(by_name(name)) is True

    def test_hypothesis_violation_rank(self, q8xc2):
        # d(G') = 1 but d(Z) = 2
        with pytest.raises(HypothesisViolationError):
            lemma_2_11_check(q8xc2)

    def test_hypothesis_violation_class(self, d16):
        with pytest.raises(HypothesisViolationError):
            lemma_2_11_check(d16)


class TestAdneyYen:
    @pytest.mark.parametrize("name", ["Q8", "D8", "M16"])
    def test_examples(self, name):
        assert adney_yen_check(by_name(name)) is True

    def test_q8_value(self, q8):
        # |Aut_c(Q8)| = 4 = |Hom(C2 x C2, C2)|
        assert len(distinguished(q8, CENTRAL)) == 4
        assert hom_order(PPartition(2, (1, 1)), PPartition(2, (1,))) == 4

    def test_rejects_non_purely_nonabelian(self, q8xc2):
        with pytest.raises(HypothesisViolationError):
            adney_yen_check(q8xc2)


class TestVerdictShape:
    def test_clause_none_iff_unequal(self, nonabelian_corpus):
        for name, g in sorted(nonabelian_corpus.items()):
            for predicate in (cor_2_6, cor_2_7, cor_2_9, cor_2_10, thm_2_12):
                v = predicate(g)
                assert (v.clause == NONE) == (not v.predicted_equal), name

    def test_evidence_recomputes(self, m16):
        # quantities quoted in the verdict agree with fresh computation
        v = cor_2_10(m16)
        z = m16.center()
        d = m16.derived_subgroup()
        assert v.evidence["G'"] == str(d.partition(2))
        assert v.evidence["Z"] == str(z.partition(2))
        assert v.evidence["G/Z"] == str(
            m16.quotient(z).group.abelian_partition(2)
        )
        assert v.evidence["G/G'"] == str(
            m16.quotient(d).group.abelian_partition(2)
        )
