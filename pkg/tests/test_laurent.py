"""Exact Laurent arithmetic: worked examples, ring laws, serialization."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from joneslab.laurent import LaurentPoly, NotLaurentError, laurent_gens, parse_laurent

VARS = ("x1", "x2")
x1, x2 = laurent_gens(VARS)


def mono(e1, e2, c=1):
    return LaurentPoly.monomial(VARS, (e1, e2), c)


class TestConstruction:
    def test_canonical_ordering(self):
        a = LaurentPoly(VARS, {(1, 0): 1, (0, 1): 2})
        b = LaurentPoly(VARS, {(0, 1): 2, (1, 0): 1})
        assert a == b
        assert hash(a) == hash(b)

    def test_zero_coefficients_dropped(self):
        a = LaurentPoly(VARS, {(1, 0): 0, (0, 0): 3})
        assert a.term_count == 1
        assert a == 3

    def test_merging_duplicate_exponents(self):
        # 2*x1 + 3*x1 arrives as separate dict inserts only after addition
        assert mono(1, 0, 2) + mono(1, 0, 3) == mono(1, 0, 5)
        assert (mono(1, 0) - mono(1, 0)).is_zero

    def test_exponent_length_mismatch(self):
        with pytest.raises(ValueError):
            LaurentPoly(VARS, {(1,): 1})

    def test_variable_list_mismatch(self):
        other = LaurentPoly.variable(("y",), "y")
        with pytest.raises(ValueError):
            x1 + other

    def test_immutable(self):
        with pytest.raises(AttributeError):
            x1.terms = ()


class TestProducts:
    def test_difference_of_squares(self):
        assert (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2

    def test_monomial_distribution(self):
        inv = mono(-1, 0)
        assert inv * (1 + x2 * x2) == mono(-1, 0) + mono(-1, 2)

    def test_square_of_exchange_quotient(self):
        x3 = (1 + x2 * x2).exact_div(x1)
        assert x3 * x3 == mono(-2, 0) + mono(-2, 2, 2) + mono(-2, 4)

    def test_negative_power_of_monomial(self):
        assert mono(2, -1) ** -3 == mono(-6, 3)
        assert mono(1, 0, -1) ** -1 == mono(-1, 0, -1)

    def test_negative_power_of_sum_rejected(self):
        with pytest.raises(NotLaurentError):
            (x1 + x2) ** -1


class TestExactDivision:
    def test_factorization(self):
        q = (x1 * x1 - x2 * x2).exact_div(x1 - x2)
        assert q == x1 + x2

    def test_next_exchange_step(self):
        # (1 + x3^2) / x2 with x3 = (1 + x2^2)/x1
        x3 = (1 + x2 * x2).exact_div(x1)
        x4 = (1 + x3 * x3).exact_div(x2)
        expected = LaurentPoly(
            VARS, {(-2, -1): 1, (-2, 1): 2, (-2, 3): 1, (0, -1): 1}
        )
        assert x4 == expected

    def test_no_quotient(self):
        with pytest.raises(NotLaurentError):
            (x1 + 1).exact_div(x2 + 1)

    def test_coefficient_divisibility_required(self):
        with pytest.raises(NotLaurentError):
            (x1 + 1).exact_div(mono(0, 0, 2))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            x1.exact_div(LaurentPoly.zero(VARS))

    def test_zero_dividend(self):
        assert LaurentPoly.zero(VARS).exact_div(x1 + x2).is_zero


class TestEvaluation:
    def test_exchange_quotient_at_ones(self):
        x3 = (1 + x2 * x2).exact_div(x1)
        value = x3.evaluate({"x1": 1, "x2": 1})
        assert value == 2
        assert isinstance(value, int)

    def test_fourth_variable_at_ones(self):
        x3 = (1 + x2 * x2).exact_div(x1)
        x4 = (1 + x3 * x3).exact_div(x2)
        assert x4.evaluate({"x1": 1, "x2": 1}) == 5

    def test_zero_point(self):
        assert x1.evaluate({"x1": 0, "x2": 7}) == 0
        with pytest.raises(ZeroDivisionError):
            mono(-1, 0).evaluate({"x1": 0, "x2": 1})

    def test_missing_assignment(self):
        with pytest.raises(KeyError):
            x1.evaluate({"x1": 1})

    def test_fraction_point(self):
        value = mono(-1, 1).evaluate({"x1": Fraction(2, 3), "x2": 2})
        assert value == 3

    def test_negative_exponent_at_integer_point_stays_exact(self):
        # int ** -1 in plain Python returns a float; the exact path must not
        value = mono(-1, 0).evaluate({"x1": 3, "x2": 1})
        assert value == Fraction(1, 3)
        assert isinstance(value, Fraction)

    def test_complex_point(self):
        value = (x1 * x2).evaluate({"x1": 1j, "x2": 2.0})
        assert abs(value - 2j) < 1e-15


class TestSerialization:
    @pytest.mark.parametrize(
        "poly",
        [
            x1 + x2,
            mono(-2, 3, 7) - mono(0, 0, 4),
            (1 + x2 * x2).exact_div(x1),
            LaurentPoly.zero(VARS),
            mono(0, 0, -1),
        ],
    )
    def test_text_round_trip(self, poly):
        assert parse_laurent(str(poly), VARS) == poly

    def test_text_format(self):
        x3 = (1 + x2 * x2).exact_div(x1)
        assert str(x3) == "x1^-1*x2^2 + x1^-1"

    def test_json_round_trip(self):
        poly = mono(-2, 3, 12345678901234567890) + mono(1, -1, -7)
        packed = json.loads(json.dumps(poly.to_json()))
        assert LaurentPoly.from_json(packed) == poly

    def test_json_coefficients_are_strings(self):
        data = (x1 + x2).to_json()
        assert all(isinstance(t["coef"], str) for t in data["terms"])


# -- property-based checks ---------------------------------------------------

NAMES = ("x1", "x2", "x3")

exponents = st.tuples(*[st.integers(-5, 5)] * len(NAMES))
coefficients = st.integers(-9, 9).filter(lambda c: c != 0)
polys = st.dictionaries(exponents, coefficients, max_size=8).map(
    lambda terms: LaurentPoly(NAMES, terms)
)
points = st.tuples(*[st.integers(-3, 3).filter(lambda v: v != 0)] * len(NAMES))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + LaurentPoly.zero(NAMES) == a
    assert a * LaurentPoly.one(NAMES) == a


@given(polys, polys.filter(lambda p: not p.is_zero))
@settings(max_examples=60, deadline=None)
def test_mul_div_round_trip(a, b):
    assert (a * b).exact_div(b) == a


@given(polys, polys, points)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_homomorphism(a, b, values):
    point = dict(zip(NAMES, values))
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_complex_evaluation_matches_exact(a, b):
    point_exact = {"x1": 2, "x2": -3, "x3": 5}
    point_float = {"x1": 2.0, "x2": -3.0, "x3": 5.0}
    exact = (a * b).evaluate(point_exact)
    approx = (a * b).evaluate(point_float)
    assert abs(approx - exact) <= 1e-12 * max(1.0, abs(exact))


@given(polys)
@settings(max_examples=60, deadline=None)
def test_text_round_trip_random(p):
    assert parse_laurent(str(p), NAMES) == p
