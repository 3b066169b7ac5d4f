"""Hilbert symbols and unit norm indices against the solvability oracle."""

from fractions import Fraction

import pytest
from oracles import hilbert_oracle

from ambiclass.arith import is_prime
from ambiclass.normlocal import (
    OO,
    CycleChoice,
    CycleVariant,
    hilbert_symbol,
    is_global_norm,
    local_norm_index_product,
    relevant_places,
    unit_norm_index,
)
from ambiclass.quadform import fundamental_discriminant
import random


def test_known_symbols():
    assert hilbert_symbol(-1, -1, OO) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(1, 5, 2) == 1
    assert hilbert_symbol(2, 7, 7) == 1
    assert hilbert_symbol(3, 5, 5) == -1
    assert hilbert_symbol(5, 5, 5) == 1
    assert hilbert_symbol(3, 3, 3) == -1
    assert hilbert_symbol(2, 3, 2) == -1
    assert hilbert_symbol(-2, -3, OO) == -1
    assert hilbert_symbol(-2, 3, OO) == 1


def test_symbol_matches_oracle_small_grid():
    places = [OO] + [p for p in range(2, 14) if is_prime(p)]
    for a in range(-12, 13):
        for b in range(-12, 13):
            if a == 0 or b == 0:
                continue
            for v in places:
                assert hilbert_symbol(a, b, v) == hilbert_oracle(a, b, v), (a, b, v)


def test_invalid_places_rejected():
    for place in (1, 4, 9, -3, 0):
        with pytest.raises(ValueError):
            hilbert_symbol(3, 5, place)
    with pytest.raises(ValueError):
        hilbert_symbol(0, 5, 3)


def test_square_class_invariance():
    rng = random.Random(41)
    for _ in range(400):
        a = rng.choice([n for n in range(-50, 51) if n])
        b = rng.choice([n for n in range(-50, 51) if n])
        k = rng.randrange(1, 12)
        for v in relevant_places(a, b):
            assert hilbert_symbol(a * k * k, b, v) == hilbert_symbol(a, b, v)
    # rationals reduce to their square class
    assert hilbert_symbol(Fraction(1, 2), Fraction(7, 1), 7) == hilbert_symbol(2, 7, 7)
    assert hilbert_symbol(Fraction(-9, 4), -1, OO) == -1


def test_product_formula_randomized():
    rng = random.Random(42)
    for _ in range(1200):
        a = rng.choice([n for n in range(-400, 401) if n])
        b = rng.choice([n for n in range(-400, 401) if n])
        prod = 1
        for v in relevant_places(a, b):
            prod *= hilbert_symbol(a, b, v)
        assert prod == 1, (a, b)


def test_bilinearity_randomized():
    rng = random.Random(43)
    for _ in range(1200):
        a = rng.choice([n for n in range(-120, 121) if n])
        b1 = rng.choice([n for n in range(-120, 121) if n])
        b2 = rng.choice([n for n in range(-120, 121) if n])
        places = set(relevant_places(a, b1)) | set(relevant_places(a, b2))
        for v in places:
            lhs = hilbert_symbol(a, b1 * b2, v)
            assert lhs == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v)


def test_relevant_places_cover_all_sign_changes():
    rng = random.Random(44)
    small_places = [OO] + [p for p in range(2, 60) if is_prime(p)]
    for _ in range(300):
        a = rng.choice([n for n in range(-50, 51) if n])
        b = rng.choice([n for n in range(-50, 51) if n])
        rel = set(relevant_places(a, b))
        for v in small_places:
            if v not in rel:
                assert hilbert_symbol(a, b, v) == 1, (a, b, v)


def test_is_global_norm_examples():
    # norms from Q(i) are sums of two rational squares
    assert is_global_norm(2, fundamental_discriminant(-4))
    assert is_global_norm(5, fundamental_discriminant(-4))
    assert not is_global_norm(3, fundamental_discriminant(-4))
    assert not is_global_norm(-1, fundamental_discriminant(-4))
    # -1 is a norm from Q(sqrt 34) (of (5 + sqrt 34)/3), not from Q(sqrt 3)
    assert is_global_norm(-1, fundamental_discriminant(136))
    assert not is_global_norm(-1, fundamental_discriminant(12))
    # norms of explicit elements: N(3 + sqrt(2)) = 7 in Q(sqrt 8)
    assert is_global_norm(7, fundamental_discriminant(8))
    assert is_global_norm(Fraction(7, 2), fundamental_discriminant(8))
    assert not is_global_norm(3, fundamental_discriminant(8))
    with pytest.raises(ValueError):
        is_global_norm(0, fundamental_discriminant(8))


def test_norms_multiply():
    rng = random.Random(45)
    for d in (-4, -23, 8, 12, 60, 136):
        fd = fundamental_discriminant(d)
        norms = [q for q in range(-30, 31) if q and is_global_norm(q, fd)]
        for _ in range(60):
            q1, q2 = rng.choice(norms), rng.choice(norms)
            assert is_global_norm(q1 * q2, fd), (d, q1, q2)


def test_cycle_derivation():
    for variant in ("ordinary", "narrow"):
        assert CycleChoice.for_discriminant(variant, -23).base_cycle_contains_infinity
    assert CycleChoice.for_discriminant("narrow", 60).base_cycle_contains_infinity
    assert not CycleChoice.for_discriminant("ordinary", 60).base_cycle_contains_infinity
    assert CycleChoice.for_discriminant(CycleVariant.NARROW, 5).derived_base_cycle == {OO}
    assert CycleChoice.for_discriminant("ordinary", 5).derived_base_cycle == frozenset()
    with pytest.raises(ValueError):
        CycleVariant.from_string("wide")


def test_unit_norm_index_cases():
    # cycle containing the real place: only +1 is left, index 1
    r = unit_norm_index(fundamental_discriminant(-4), CycleChoice.for_discriminant("ordinary", -4))
    assert (r.base_unit_group_order, r.index) == (1, 1)
    # empty cycle: index is 2 exactly when -1 is not a norm
    r = unit_norm_index(fundamental_discriminant(12), CycleChoice.for_discriminant("ordinary", 12))
    assert (r.base_unit_group_order, r.index, r.minus_one_is_global_norm) == (2, 2, False)
    r = unit_norm_index(fundamental_discriminant(40), CycleChoice.for_discriminant("ordinary", 40))
    assert (r.base_unit_group_order, r.index, r.minus_one_is_global_norm) == (2, 1, True)
    r = unit_norm_index(fundamental_discriminant(136), CycleChoice.for_discriminant("ordinary", 136))
    assert (r.index, r.minus_one_is_global_norm) == (1, True)
    r = unit_norm_index(fundamental_discriminant(12), CycleChoice.for_discriminant("narrow", 12))
    assert (r.base_unit_group_order, r.index) == (1, 1)


def test_local_norm_index_product_is_ramification_product():
    for d, want in [(-3, 2), (-4, 2), (-420, 16), (8, 2), (12, 4), (60, 8), (136, 4)]:
        assert local_norm_index_product(fundamental_discriminant(d)) == want
