"""Polynomial core: parser, arithmetic, calculus, field reduction."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logdiv.errors import FieldMismatch, ParseError
from logdiv.orders import GREVLEX, LEX
from logdiv.parse import parse_poly
from logdiv.poly import (
    MPoly,
    apply_coefficients,
    euler_coefficients,
    exact_div,
    is_squarefree,
    mpoly_gcd,
)

XY = ["x", "y"]
XYZW = ["x", "y", "z", "w"]
DISC = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2"


class TestParse:
    def test_cusp(self):
        p = parse_poly("y^2 - x^3", XY)
        assert len(p) == 2
        assert p.total_degree() == 3
        assert p.coefficient((0, 2)) == 1
        assert p.coefficient((3, 0)) == -1

    def test_expansion_identity(self):
        p = parse_poly("(x+y)^2 - x^2 - 2*x*y", XY)
        assert p == parse_poly("y^2", XY)

    def test_discriminant(self):
        p = parse_poly(DISC, XYZW)
        assert p.is_homogeneous() == 4
        assert len(p) == 5

    def test_unknown_identifier(self):
        with pytest.raises(ParseError, match="unknown identifier"):
            parse_poly("x + q", XY)

    def test_syntax_error_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_poly("x + * y", XY)
        assert err.value.line == 1
        assert err.value.col == 5

    def test_exponent_overflow(self):
        with pytest.raises(ParseError, match="too large"):
            parse_poly("x^99999999", XY)

    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("4x", XY)

    def test_unary_minus(self):
        assert parse_poly("-x + y", XY) == parse_poly("y - x", XY)


class TestArithmetic:
    def test_mixed_fields_rejected(self):
        a = parse_poly("x", XY)
        b = parse_poly("x", XY, mod=7)
        with pytest.raises(FieldMismatch):
            a + b

    def test_pow(self):
        x = MPoly.variable(0, 1)
        assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1

    def test_exact_div(self):
        p = parse_poly("x^2 - y^2", XY)
        d = parse_poly("x - y", XY)
        assert exact_div(p, d) == parse_poly("x + y", XY)
        assert exact_div(parse_poly("x^2 + y", XY), d) is None


class TestDerivative:
    def test_cusp_partial(self):
        p = parse_poly("y^2 - x^3", XY)
        assert p.derivative(0) == parse_poly("-3*x^2", XY)

    def test_constant(self):
        assert MPoly.const(4, 5).derivative(3).is_zero()

    def test_discriminant_partial(self):
        # term-by-term differentiation in x
        p = parse_poly(DISC, XYZW)
        expected = parse_poly("-4*z^3 + 18*y*z*w - 54*w^2*x", XYZW)
        assert p.derivative(0) == expected


class TestApplyDerivation:
    def test_euler_identity_on_disc(self):
        p = parse_poly(DISC, XYZW)
        assert apply_coefficients(euler_coefficients(4), p) == p.scale(4)

    def test_annihilating_derivation(self):
        p = parse_poly("y^2 - x^3", XY)
        delta = [parse_poly("2*y", XY), parse_poly("3*x^2", XY)]
        assert apply_coefficients(delta, p).is_zero()

    def test_toric(self):
        p = parse_poly("x*y", XY)
        delta = [parse_poly("x", XY), MPoly.zero(2)]
        assert apply_coefficients(delta, p) == p

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply_coefficients([MPoly.variable(0, 2)], parse_poly("x*y", XY))


class TestReduceMod:
    def test_half_x_mod_7(self):
        p = MPoly.variable(0, 1).scale(Fraction(1, 2))
        assert p.reduce_mod(7) == MPoly.variable(0, 1, mod=7).scale(4)

    def test_frobenius_like(self):
        p = parse_poly("x^3 - x", ["x"])
        assert p.reduce_mod(3) == parse_poly("x^3 + 2*x", ["x"], mod=3)

    def test_bad_denominator(self):
        p = MPoly.variable(0, 1).scale(Fraction(1, 5))
        with pytest.raises(ZeroDivisionError):
            p.reduce_mod(5)


class TestHomogeneousSquarefree:
    def test_homogeneous(self):
        assert parse_poly("x^2*y", XY).is_homogeneous() == 3
        assert parse_poly("x^2 + y", XY).is_homogeneous() is None

    def test_squarefree(self):
        assert not is_squarefree(parse_poly("(x+y)^2", XY))
        assert is_squarefree(parse_poly("x*y", XY))
        assert is_squarefree(parse_poly(DISC, XYZW))

    def test_gcd_common_factor(self):
        h = parse_poly("x + 2*y", XY)
        f = parse_poly("x^2 - y^2", XY) * h
        g = parse_poly("x*y + y^2", XY) * h
        assert exact_div(mpoly_gcd(f, g), h) is not None


small_polys = st.builds(
    lambda terms: MPoly(2, dict(terms)),
    st.lists(
        st.tuples(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            st.integers(-5, 5),
        ),
        max_size=4,
    ),
)


class TestProperties:
    @given(small_polys, small_polys, small_polys)
    def test_distributive(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @given(small_polys, small_polys, small_polys)
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(small_polys, small_polys)
    def test_leibniz(self, p, q):
        d = (p * q).derivative(0)
        assert d == p * q.derivative(0) + q * p.derivative(0)

    @given(st.integers(1, 4), st.data())
    def test_euler_identity(self, deg, data):
        # random homogeneous p of degree deg in 3 variables
        exps = data.draw(
            st.lists(
                st.tuples(st.integers(0, deg), st.integers(0, deg)),
                min_size=1,
                max_size=4,
            )
        )
        terms = {}
        for (i, j) in exps:
            if i + j <= deg:
                terms[(i, j, deg - i - j)] = data.draw(st.integers(-5, 5))
        p = MPoly(3, terms)
        lhs = apply_coefficients(euler_coefficients(3), p)
        assert lhs == p.scale(deg)

    @given(
        st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
        st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
        st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
    )
    def test_order_multiplicative(self, m1, m2, m):
        for order in (GREVLEX, LEX):
            if order.key(m1) < order.key(m2):
                shifted1 = tuple(a + b for a, b in zip(m, m1))
                shifted2 = tuple(a + b for a, b in zip(m, m2))
                assert order.key(shifted1) < order.key(shifted2)

    @settings(max_examples=60)
    @given(small_polys)
    def test_print_parse_round_trip(self, p):
        assert parse_poly(p.to_string(), ["x0", "x1"]) == p
