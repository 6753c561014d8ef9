"""Exact-kernel tests: field axioms, golden identities, quadratic solving,
and the two rational ladders toward phi.

Everything in here compares exactly (== on Fraction/QuadExt) except the
handful of float-conversion checks, which pin the printed digits instead.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goldensecant.exactfield import (
    ONE,
    PHI,
    PHI_FLOAT,
    ZERO,
    NoRealRootsError,
    OutsideFieldError,
    QuadExt,
    cf_convergent,
    fib_ratio,
    fibonacci,
    golden_identity_check,
    solve_monic_quadratic,
)

rationals = st.fractions(max_denominator=1_000)
elements = st.builds(QuadExt, rationals, rationals)
nonzero_elements = elements.filter(lambda x: x != ZERO)


# ----------------------------------------------------------------------
# the golden constant
# ----------------------------------------------------------------------


def test_phi_components():
    assert PHI.rat_part == Fraction(1, 2)
    assert PHI.root_coeff == Fraction(1, 2)


def test_phi_float_leading_digits():
    assert f"{PHI_FLOAT:.10f}".startswith("1.6180")
    assert PHI_FLOAT == pytest.approx((1 + math.sqrt(5)) / 2, abs=0)


def test_phi_squared_is_phi_plus_one():
    assert PHI * PHI == PHI + 1
    assert PHI * PHI == QuadExt(Fraction(3, 2), Fraction(1, 2))


def test_phi_inverse_is_phi_minus_one():
    assert PHI.inverse() == PHI - 1
    assert ONE / PHI == QuadExt(Fraction(-1, 2), Fraction(1, 2))


def test_golden_identity_examples():
    assert golden_identity_check(PHI)
    assert not golden_identity_check(QuadExt(Fraction(1)))
    # the conjugate root satisfies the same quadratic
    assert golden_identity_check(QuadExt(Fraction(1, 2), Fraction(-1, 2)))


def test_phi_powers_follow_fibonacci():
    """phi^n = F(n)*phi + F(n-1), checked by repeated multiplication."""
    accumulated = ONE
    for n in range(1, 21):
        accumulated = accumulated * PHI
        expected = fibonacci(n) * PHI + fibonacci(n - 1)
        assert accumulated == expected, f"phi^{n} != F({n})*phi + F({n - 1})"
        assert PHI**n == accumulated


# ----------------------------------------------------------------------
# field arithmetic
# ----------------------------------------------------------------------


def test_rational_embedding():
    assert QuadExt(2) + QuadExt(3) == QuadExt(5)
    assert QuadExt(Fraction(1, 3)) * 3 == ONE
    assert 1 - PHI == -(PHI - 1)


def test_sqrt5_squares_to_five():
    root5 = QuadExt(Fraction(0), Fraction(1))
    assert root5 * root5 == QuadExt(5)
    assert root5 > 2
    assert root5 < QuadExt(Fraction(9, 4))  # sqrt 5 < 2.25


def test_float_components_rejected():
    with pytest.raises(TypeError):
        QuadExt(0.5, Fraction(1, 2))


def test_division_by_zero_element():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_exact_sign_with_opposing_parts():
    assert QuadExt(Fraction(3), Fraction(-1)).sign() == 1  # 3 > sqrt 5
    assert QuadExt(Fraction(2), Fraction(-1)).sign() == -1  # 2 < sqrt 5
    assert QuadExt(Fraction(-2), Fraction(1)).sign() == 1
    assert ZERO.sign() == 0
    assert abs(QuadExt(Fraction(2), Fraction(-1))) == QuadExt(Fraction(-2), Fraction(1))


@given(rationals, rationals, rationals)
def test_fraction_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(elements, elements, elements)
@settings(max_examples=150)
def test_field_add_mul_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(nonzero_elements, elements)
@settings(max_examples=150)
def test_division_round_trips(x, y):
    assert (y * x) / x == y
    assert x * x.inverse() == ONE


@given(elements)
def test_float_conversion_tracks_components(x):
    expected = float(x.rat_part) + float(x.root_coeff) * math.sqrt(5.0)
    assert float(x) == pytest.approx(expected, rel=1e-15, abs=1e-300)


# ----------------------------------------------------------------------
# monic quadratics
# ----------------------------------------------------------------------


def test_golden_quadratic():
    result = solve_monic_quadratic(-1, -1)
    assert result.symmetry_point == Fraction(1, 2)
    assert result.offset_squared == Fraction(5, 4)
    assert result.roots == (PHI, QuadExt(Fraction(1, 2), Fraction(-1, 2)))


def test_perfect_square_quadratic():
    result = solve_monic_quadratic(0, -4)
    assert result.symmetry_point == 0
    assert result.roots == (QuadExt(2), QuadExt(-2))


def test_double_root():
    result = solve_monic_quadratic(-2, 1)
    assert result.offset_squared == 0
    assert result.roots == (ONE, ONE)


def test_no_real_roots():
    with pytest.raises(NoRealRootsError, match="no real roots"):
        solve_monic_quadratic(0, 1)


def test_root_outside_field():
    # x^2 - 2 = 0 needs sqrt 2, which the kernel does not represent
    with pytest.raises(OutsideFieldError, match="root outside supported field"):
        solve_monic_quadratic(0, -2)
    with pytest.raises(OutsideFieldError, match="root outside supported field"):
        solve_monic_quadratic(Fraction(1, 3), -1)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        solve_monic_quadratic(-1.0, -1)


def test_roots_satisfy_sum_and_product():
    """200 random coefficient pairs built so the offset stays in the field."""
    rng = random.Random(20260823)
    for trial in range(200):
        symmetry = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        half_gap = Fraction(rng.randint(0, 40), rng.randint(1, 15))
        gap_squared = half_gap * half_gap
        if trial % 2:
            gap_squared *= 5  # push the offset onto the sqrt-5 axis
        linear = -2 * symmetry
        constant = symmetry * symmetry - gap_squared
        result = solve_monic_quadratic(linear, constant)
        r1, r2 = result.roots
        assert r1 + r2 == QuadExt(-linear), f"trial {trial}: sum broke"
        assert r1 * r2 == QuadExt(constant), f"trial {trial}: product broke"
        assert r1 >= r2


# ----------------------------------------------------------------------
# Fibonacci and the continued fraction
# ----------------------------------------------------------------------


def test_fibonacci_sequence_prefix():
    expected = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert [fibonacci(n) for n in range(13)] == expected


def test_fibonacci_examples():
    assert fibonacci(6) == 8
    assert fibonacci(12) == 144
    assert fibonacci(0) == 0


def test_fibonacci_negative_index():
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_fibonacci_large_index_no_overflow():
    # arbitrary-precision integers: a 4-digit index is routine
    value = fibonacci(1000)
    assert value % 10 == 5
    assert len(str(value)) == 209


def test_fib_ratio_values():
    assert fib_ratio(1) == Fraction(1)
    assert fib_ratio(7) == Fraction(21, 13)
    assert fib_ratio(8) == Fraction(34, 21)
    assert fib_ratio(10) == Fraction(89, 55)


def test_fib_ratio_printed_digits():
    # decimal-prefix checks: 89/55 = 1.61818... prints as 1.6181 truncated
    assert f"{float(fib_ratio(7)):.10f}".startswith("1.615")
    assert f"{float(fib_ratio(8)):.10f}".startswith("1.619")
    assert f"{float(fib_ratio(10)):.10f}".startswith("1.6181")


def test_fib_ratio_needs_positive_index():
    with pytest.raises(ValueError):
        fib_ratio(0)


def test_fib_ratio_alternates_around_phi():
    """Consecutive ratios straddle phi with strictly shrinking exact error."""
    previous_error = None
    previous_sign = None
    for n in range(2, 26):
        difference = QuadExt(fib_ratio(n)) - PHI
        sign = difference.sign()
        assert sign != 0
        if previous_sign is not None:
            assert sign == -previous_sign, f"no alternation at n={n}"
        error = abs(difference)
        if previous_error is not None:
            assert error < previous_error, f"error grew at n={n}"
        previous_sign, previous_error = sign, error


def test_cf_convergent_examples():
    assert cf_convergent(0) == Fraction(1)
    assert cf_convergent(3) == Fraction(5, 3)
    assert cf_convergent(10) == Fraction(144, 89)


def test_cf_convergent_negative_depth():
    with pytest.raises(ValueError):
        cf_convergent(-3)


def test_cf_convergent_matches_fibonacci_recurrence():
    # two independent routes: nested-fraction evaluation vs F(n+1)/F(n)
    for depth in range(0, 31):
        assert cf_convergent(depth) == fib_ratio(depth + 1), f"depth {depth}"
