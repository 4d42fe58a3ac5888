"""Exact series arithmetic: frozen examples and algebraic property tests."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from painleve_rmt.series import (
    TruncatedSeries,
    series_exp,
    series_integrate_logfree,
    series_mul,
)


def S(*coeffs, var="s"):
    return TruncatedSeries([F(c) if not isinstance(c, F) else c for c in coeffs], var=var)


class TestMul:
    def test_difference_of_squares(self):
        one_plus = S(1, 1, 0)
        one_minus = S(1, -1, 0)
        assert series_mul(one_plus, one_minus) == S(1, 0, -1)

    def test_identity(self):
        f = S(3, F(-1, 2), F(7, 5), 2)
        one = TruncatedSeries.one(f.order)
        assert series_mul(one, f) == f

    def test_hand_cauchy_product(self):
        a = S(1, F(-1, 2), F(1, 12), var="x")
        b = S(1, F(1, 2), F(1, 8), var="x")
        # x^2 coefficient: 1/8 - 1/4 + 1/12 = -1/24
        assert a * b == S(1, 0, F(-1, 24), var="x")

    def test_min_order_rule(self):
        a = S(1, 2, 3, 4, 5)
        b = S(1, 1)
        assert (a * b).order == 1
        assert (a + b).order == 1

    def test_variable_mismatch(self):
        with pytest.raises(ValueError, match="variable tag"):
            S(1, 2) * S(1, 2, var="x")

    def test_mixed_kind_rejected(self):
        exact = S(1, 2)
        inexact = TruncatedSeries([1.0, 2.0])
        with pytest.raises(TypeError):
            exact * inexact
        with pytest.raises(TypeError):
            TruncatedSeries([F(1), 2.0])


class TestExp:
    def test_exp_zero(self):
        assert series_exp(S(0, 0, 0)) == S(1, 0, 0)

    def test_hand_example(self):
        f = S(0, F(-1, 2), F(-1, 24), var="x")
        assert series_exp(f) == S(1, F(-1, 2), F(1, 12), var="x")

    def test_exponential_series(self):
        f = S(0, 1, 0, 0, var="x")
        assert series_exp(f) == S(1, 1, F(1, 2), F(1, 6), var="x")

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError, match="zero constant"):
            series_exp(S(1, 1))


class TestIntegrateLogfree:
    def test_linear(self):
        assert series_integrate_logfree(S(0, 1)) == S(0, 1)

    def test_two_terms(self):
        f = S(0, F(1, 8), F(1, 192))
        assert series_integrate_logfree(f) == S(0, F(1, 8), F(1, 384))

    def test_cubic(self):
        assert series_integrate_logfree(S(0, 0, 0, 1)) == S(0, 0, 0, F(1, 3))

    def test_divergent(self):
        with pytest.raises(ValueError, match="divergent"):
            series_integrate_logfree(S(1, 1))


rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=9
)


def series_strategy(constant=None):
    return st.lists(rationals, min_size=9, max_size=9).map(
        lambda cs: TruncatedSeries(
            ([F(constant)] + cs[1:]) if constant is not None else cs, var="s"
        )
    )


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(series_strategy(), series_strategy(), series_strategy())
    def test_distributivity_exact(self, f, g, h):
        assert (f + g) * h == f * h + g * h

    @settings(max_examples=40, deadline=None)
    @given(series_strategy(constant=0))
    def test_exp_inverse(self, f):
        prod = f.exp() * f.scale(-1).exp()
        assert prod == TruncatedSeries.one(prod.order)

    @settings(max_examples=40, deadline=None)
    @given(series_strategy(constant=0), series_strategy(constant=0))
    def test_exp_additivity(self, f, g):
        assert (f + g).exp() == f.exp() * g.exp()

    @settings(max_examples=40, deadline=None)
    @given(series_strategy(constant=1))
    def test_exp_log_roundtrip(self, f):
        assert f.log().exp() == f

    @settings(max_examples=40, deadline=None)
    @given(series_strategy(), series_strategy())
    def test_canonical_form(self, f, g):
        import math

        for c in (f * g).coeffs:
            assert c.denominator > 0
            assert math.gcd(c.numerator, c.denominator) == 1

    @settings(max_examples=30, deadline=None)
    @given(series_strategy(), series_strategy(constant=1))
    def test_division_inverse(self, f, g):
        assert f.divide(g) * g == f


class TestTextForm:
    def test_rational_text(self):
        data = S(F(-1), F(1, 192)).to_json()
        assert data["coeffs"] == ["-1", "1/192"]
        assert data["order"] == 1

    def test_roundtrip_exact(self):
        f = S(1, F(-3, 7), 0, F(22, 9))
        assert TruncatedSeries.from_json(f.to_json()) == f

    def test_roundtrip_complex(self):
        f = TruncatedSeries([1.0, -0.5 + 0.25j], var="t")
        back = TruncatedSeries.from_json(f.to_json())
        assert back.coeffs == f.coeffs and back.var == "t"

    def test_order_consistency_checked(self):
        with pytest.raises(ValueError, match="order"):
            TruncatedSeries.from_json({"order": 3, "coeffs": ["1", "2"]})
