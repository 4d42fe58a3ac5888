"""Hard-edge recurrence: boundary coefficients, tau series, moment constants."""

from fractions import Fraction as F

import pytest

from painleve_rmt.bessel import ehard_bessel
from painleve_rmt.hardedge import (
    HardEdgeTauSeries,
    bk_constant,
    bkprime_constant,
    ehard_series,
    eta_coefficients,
    hard_edge_normalization,
    sigma_series,
)


class TestEtaCoefficients:
    def test_c0_is_minus_k_squared(self):
        for k in (1, 2, 5):
            assert eta_coefficients(k, 3).coeffs[0] == -k * k

    def test_c1_closed_form(self):
        for k in range(1, 11):
            assert eta_coefficients(k, 2).coeffs[1] == F(1, 64 * (4 * k * k - 1))

    def test_c2_matches_bessel_sigma_coefficient(self):
        # the sigma function of the oracle series: sigma = -k^2 - s dlog(E)/ds;
        # its s^4 coefficient must equal c_2 (agreement holds through s^(2k+2))
        k = 1
        E = ehard_bessel(k, k, 8)
        logE = E.log()
        # s = 4x: s^4 coefficient of -x d/dx logE is -(4 * coeff_4(logE)) / 4^4
        sigma_s4 = -4 * logE.coeff(4) / F(4) ** 4
        assert eta_coefficients(k, 2).coeffs[2] == sigma_s4
        assert sigma_s4 == F(1, 46080)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            eta_coefficients(0, 4)
        with pytest.raises(ValueError):
            eta_coefficients(2, 0)


class TestSigmaSeries:
    def test_k1_head(self):
        s = sigma_series(1, 3)
        assert s.coeff(0) == -1
        assert s.coeff(1) == F(1, 8)
        assert s.coeff(2) == F(1, 192)

    def test_k2_constant(self):
        assert sigma_series(2, 2).coeff(0) == -4

    def test_linear_coefficient_universal(self):
        for k in (1, 3, 7):
            assert sigma_series(k, 2).coeff(1) == F(1, 8)

    def test_parity_above_linear(self):
        s = sigma_series(3, 6)
        for n in range(3, s.order + 1, 2):
            assert s.coeff(n) == 0


class TestEhardSeries:
    def test_k1_short(self):
        tau = ehard_series(1, 2)
        assert tau.series.coeffs == (F(1), F(-1, 2), F(1, 12))

    def test_normalization(self):
        for k in (1, 2, 4):
            assert ehard_series(k, 3).series.coeff(0) == 1

    def test_k1_linear(self):
        assert ehard_series(1, 4).series.coeff(1) == F(-1, 2)

    def test_provenance_tag(self):
        tau = ehard_series(2, 4)
        assert tau.provenance == "recurrence"
        with pytest.raises(ValueError):
            HardEdgeTauSeries(k=1, series=tau.series, provenance="guesswork")


class TestNormalizationConstant:
    def test_values(self):
        assert hard_edge_normalization(1, 1) == 1
        assert hard_edge_normalization(2, 1) == 2
        # A(2,2) = 2! * (2!/1!) * (3!/2!) = 12
        assert hard_edge_normalization(2, 2) == 12

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError):
            hard_edge_normalization(1.5, 1)


class TestMomentConstants:
    def test_k1(self):
        # independently confirmed by the Bessel-Hankel route (test_bessel)
        assert bk_constant(1) == F(1, 3)
        assert bkprime_constant(1) == F(1, 12)

    def test_k2(self):
        assert bk_constant(2) == F(61, 10080)
        assert bkprime_constant(2) == F(1, 6720)

    def test_truncation_guard(self):
        tau = ehard_series(3, 4)  # needs 2k = 6
        with pytest.raises(ValueError, match="2k"):
            bk_constant(3, tau)

    def test_constants_decrease(self):
        values = [bk_constant(k) for k in range(1, 6)]
        assert all(v > 0 for v in values)
        assert all(x > y for x, y in zip(values, values[1:]))
