from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercourant.errors import (
    DimensionMismatch,
    DivisionByZero,
    IndexOutOfRange,
    PoleAtPoint,
)
from hypercourant.parse import parse_scalar
from hypercourant.scalar import (
    Polynomial,
    ScalarField,
    arith,
    eval_at,
    partial,
    poly_gcd,
    scalar_text,
)


def sf(text, nvars=3):
    return parse_scalar(text, nvars)


# -- strategies ---------------------------------------------------------------

NVARS = 2


@st.composite
def polynomials(draw, nvars=NVARS, max_degree=2, max_terms=4):
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        mono = tuple(
            draw(st.integers(0, max_degree)) for _ in range(nvars)
        )
        if sum(mono) > max_degree:
            continue
        terms[mono] = draw(st.integers(-4, 4))
    return Polynomial(nvars, terms)


@st.composite
def fields(draw, nvars=NVARS):
    num = draw(polynomials(nvars))
    den = draw(polynomials(nvars, max_degree=1, max_terms=2))
    if den.is_zero():
        den = Polynomial.one(nvars)
    return ScalarField(num, den)


# -- frozen examples ----------------------------------------------------------


class TestArith:
    def test_sub_self_is_zero(self):
        assert arith(sf("x1"), sf("x1"), "sub").is_zero()

    def test_difference_of_squares(self):
        assert arith(sf("x1 + 1"), sf("x1 - 1"), "mul") == sf("x1^2 - 1")

    def test_inverse_round_trip(self):
        inv = arith(sf("1"), sf("1 + x1^2"), "div")
        assert inv == sf("1/(1 + x1^2)")
        assert arith(inv, sf("1 + x1^2"), "mul") == sf("1")

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            arith(sf("x1"), sf("x1 - x1"), "div")

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            arith(sf("x1"), sf("x1"), "pow")


class TestPartial:
    def test_power_rule(self):
        assert partial(sf("x1^2*x2"), 1) == sf("2*x1*x2")

    def test_constant(self):
        assert partial(sf("5"), 2).is_zero()

    def test_quotient_rule_frozen(self):
        f = sf("1/(1+x1^2)", 1)
        df = partial(f, 1)
        assert df == sf("(-2*x1)/(x1^4 + 2*x1^2 + 1)", 1)
        # independent check: (1+x1^2)^2 * df + 2 x1 = 0
        residual = sf("(1+x1^2)^2", 1) * df + sf("2*x1", 1)
        assert residual.is_zero()

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            partial(sf("x1"), 4)
        with pytest.raises(IndexOutOfRange):
            partial(sf("x1"), 0)


class TestEval:
    def test_product(self):
        assert eval_at(sf("x1*x2", 2), (2, 3)) == 6

    def test_zero(self):
        assert eval_at(sf("x1 - x1", 2), (7, -2)) == 0

    def test_rational_value(self):
        assert eval_at(sf("1/(1+x1^2)", 1), (1,)) == Fraction(1, 2)

    def test_pole(self):
        with pytest.raises(PoleAtPoint):
            eval_at(sf("1/x1", 1), (0,))

    def test_wrong_arity(self):
        with pytest.raises(DimensionMismatch):
            eval_at(sf("x1", 2), (1,))


class TestCanonicalForm:
    def test_denominator_monic(self):
        f = sf("x1/(2*x2)", 2)
        assert f.den == Polynomial.variable(2, 1)
        assert f.num == Polynomial(2, {(1, 0): Fraction(1, 2)})

    def test_common_factor_cancelled(self):
        assert sf("(x1^2 - x2^2)/(x1 - x2)", 2) == sf("x1 + x2", 2)

    def test_zero_is_zero_over_one(self):
        f = sf("(x1 - x1)/(1 + x2)", 2)
        assert f.num.is_zero() and f.den.is_one()

    def test_multivariate_gcd(self):
        a = sf("(x1 + x2 + x3)*(x1 - x2)")
        b = sf("(x1 + x2 + x3)*(x1 + x3)")
        g = poly_gcd(a.num, b.num)
        assert g == sf("x1 + x2 + x3").num

    def test_gcd_power_cancellation(self):
        f = sf("(1+x1^2)^2/(1+x1^2)^3", 1)
        assert f == sf("1/(1+x1^2)", 1)


# -- properties ---------------------------------------------------------------


class TestRingLaws:
    @given(a=fields(), b=fields(), c=fields())
    @settings(max_examples=40, deadline=None)
    def test_add_mul_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(a=fields())
    @settings(max_examples=25, deadline=None)
    def test_sub_and_div_round_trip(self, a):
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a / a == ScalarField.one(NVARS)

    @given(f=fields())
    @settings(max_examples=25, deadline=None)
    def test_partials_commute(self, f):
        assert f.derivative(0).derivative(1) == f.derivative(1).derivative(0)

    @given(f=fields(), g=fields())
    @settings(max_examples=25, deadline=None)
    def test_leibniz(self, f, g):
        lhs = (f * g).derivative(0)
        assert lhs == f.derivative(0) * g + f * g.derivative(0)


class TestEqualityVsEvaluation:
    # sanity cross-check, not the definition of equality
    POINTS = [
        (Fraction(1), Fraction(2)),
        (Fraction(-1), Fraction(3)),
        (Fraction(2), Fraction(-1, 2)),
        (Fraction(1, 3), Fraction(5)),
    ]

    @given(a=fields(), b=fields())
    @settings(max_examples=30, deadline=None)
    def test_equal_fields_agree_everywhere(self, a, b):
        diff = a - b
        if diff.is_zero():
            for p in self.POINTS:
                try:
                    assert a.evaluate(p) == b.evaluate(p)
                except PoleAtPoint:
                    continue

    def test_unequal_fields_disagree_somewhere(self):
        a = sf("x1^2 + x2", 2)
        b = sf("x1^2 + x2 + 1/7", 2)
        assert any(a.evaluate(p) != b.evaluate(p) for p in self.POINTS)


class TestPolynomialInternals:
    def test_terms_sorted_graded_lex(self):
        p = sf("x2 + x1 + x1^2 + 3").num
        degrees = [sum(m) for m, _ in p.terms]
        assert degrees == sorted(degrees, reverse=True)
        # within equal degree, earlier variables dominate
        assert p.terms[1][0] == (1, 0, 0)
        assert p.terms[2][0] == (0, 1, 0)

    def test_no_zero_coefficients_stored(self):
        p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
        assert all(c != 0 for _, c in p.terms)

    def test_fraction_collapse_to_int(self):
        p = Polynomial(1, {(1,): Fraction(4, 2)})
        assert p.terms[0][1] == 2 and type(p.terms[0][1]) is int

    def test_divexact_raises_on_inexact(self):
        a = Polynomial.variable(1, 0)
        b = Polynomial(1, {(0,): 1, (1,): 1})
        with pytest.raises(ArithmeticError):
            a.divexact(b)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            sf("x1", 1) + sf("x1", 2)


class TestPrinting:
    @given(f=fields())
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, f):
        assert parse_scalar(scalar_text(f), NVARS) == f

    def test_leading_negative(self):
        f = sf("0 - x1 + 5", 1)
        text = scalar_text(f)
        assert parse_scalar(text, 1) == f
