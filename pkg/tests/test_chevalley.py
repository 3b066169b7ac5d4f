"""Both sides of the fixed-class count formula on hand-checked discriminants."""

import pytest
from oracles import IndefiniteClasses, definite_ambiguous_count, definite_reduced_forms

from ambiclass.chevalley import (
    base_class_number,
    norm_group_order,
    remark_decomposition_check,
    rhs_ambiguous_number,
    verify,
    verify_discriminant,
)
from ambiclass.normlocal import CycleChoice, CycleVariant
from ambiclass.quadform import NotFundamentalError, narrow_class_group


def test_base_class_number_is_one_for_both_cycles():
    for d in (-4, 12):
        for variant in ("ordinary", "narrow"):
            assert base_class_number(CycleChoice.for_discriminant(variant, d)) == 1


def test_rhs_and_norm_group_order_basics():
    ordinary = CycleChoice.for_discriminant("ordinary", -23)
    assert rhs_ambiguous_number(-23, ordinary) == 1
    assert norm_group_order(-23, ordinary) == 1
    assert rhs_ambiguous_number(8, CycleChoice.for_discriminant("ordinary", 8)) == 1
    assert rhs_ambiguous_number(-420, CycleChoice.for_discriminant("ordinary", -420)) == 8
    # t = 2 with -1 not a norm: 2^2 / (2 * 2) = 1
    assert rhs_ambiguous_number(12, CycleChoice.for_discriminant("ordinary", 12)) == 1
    assert rhs_ambiguous_number(12, CycleChoice.for_discriminant("narrow", 12)) == 2


def test_verify_spot_values_definite():
    r = verify(-23, "ordinary")
    assert (r.class_number, r.lhs_ambiguous, r.rhs_formula, r.norm_group_order) == (3, 1, 1, 1)
    assert r.match and r.eps_norm is None
    assert r.one_minus_sigma_order == 3
    r = verify(-20, "ordinary")
    assert (r.lhs_ambiguous, r.rhs_formula, r.norm_group_order) == (2, 2, 2)
    r = verify(-420, "narrow")
    assert r.lhs_ambiguous == 8 and r.t == 4 and r.match


def test_verify_spot_values_indefinite():
    r = verify(12, "narrow")
    assert (r.class_number, r.lhs_ambiguous, r.unit_index) == (2, 2, 1)
    r = verify(12, "ordinary")
    assert (r.class_number, r.lhs_ambiguous, r.unit_index) == (1, 1, 2)
    assert r.eps_norm == 1
    r = verify(40, "ordinary")
    assert (r.lhs_ambiguous, r.unit_index, r.eps_norm) == (2, 1, -1)
    r = verify(5, "narrow")
    assert (r.class_number, r.lhs_ambiguous) == (1, 1)
    r = verify(60, "narrow")
    assert (r.class_number, r.lhs_ambiguous) == (4, 4)
    r = verify(136, "narrow")
    assert (r.class_number, r.lhs_ambiguous, r.one_minus_sigma_order) == (4, 2, 2)


def test_verify_agrees_with_enumeration_oracle():
    assert verify(-420, "ordinary").lhs_ambiguous == definite_ambiguous_count(-420)
    assert verify(-23, "ordinary").class_number == len(definite_reduced_forms(-23))
    cl12 = IndefiniteClasses(12)
    assert verify(12, "narrow").lhs_ambiguous == cl12.ambiguous_count()
    assert verify(12, "ordinary").lhs_ambiguous == cl12.ordinary_ambiguous_count()
    cl40 = IndefiniteClasses(40)
    assert verify(40, "ordinary").lhs_ambiguous == cl40.ordinary_ambiguous_count()


def test_exact_sequence_bookkeeping_spots():
    for d in (-23, -420, -479, 60, 136, 316):
        for r in verify_discriminant(d):
            assert r.lhs_ambiguous * r.one_minus_sigma_order == r.class_number, d


def test_remark_decomposition():
    applicable, holds = remark_decomposition_check(-23, CycleChoice.for_discriminant("ordinary", -23))
    assert applicable and holds
    applicable, holds = remark_decomposition_check(-420, CycleChoice.for_discriminant("ordinary", -420))
    assert applicable and holds  # squares subgroup is trivial
    applicable, holds = remark_decomposition_check(-39, CycleChoice.for_discriminant("ordinary", -39))
    assert not applicable and holds is None  # squares have order 2
    applicable, holds = remark_decomposition_check(-479, CycleChoice.for_discriminant("narrow", -479))
    assert applicable and holds  # squares of Z/25 are the whole group


def test_negative_narrow_request_is_normalized():
    reports = verify_discriminant(-23)
    assert [r.cycle for r in reports] == [CycleVariant.ORDINARY, CycleVariant.NARROW]
    assert reports[0].note is None
    assert reports[1].note is not None
    assert reports[0].lhs_ambiguous == reports[1].lhs_ambiguous
    assert reports[0].class_number == reports[1].class_number


def test_shared_group_matches_fresh_group():
    group = narrow_class_group(60)
    assert verify(60, "narrow", group=group) == verify(60, "narrow")


def test_non_fundamental_rejected():
    with pytest.raises(NotFundamentalError):
        verify(45, "ordinary")


def test_report_fields_are_consistent():
    for d, variant in ((-84, "ordinary"), (316, "narrow"), (316, "ordinary")):
        r = verify(d, variant)
        assert r.degree == 2
        assert r.base_class_number == 1
        assert r.ramification_product == 2**r.t
        assert r.rhs_formula * r.degree * r.unit_index == r.ramification_product
        assert r.norm_group_order * r.degree * r.unit_index == r.ramification_product
        assert r.match
