"""Exact hard-edge sigma-Painleve III' series at integer parameter k.

At the parameter point a = mu = k (k a positive integer, xi = 1) the
sigma form of Painleve III' reduces to

    (s eta'')^2 + 4*((eta')^2 - 1/64)*(eta - s*eta') - k^2/16 = 0,

after writing sigma(s) = eta(s) + s/8.  This equation admits an even
solution eta(s) = sum_n c_n s^(2n) with c_0 = -k^2, and the c_n satisfy an
explicit recurrence that this module evaluates in exact rational
arithmetic.  Exponentiating the integrated series gives a hard-edge
tau-function series E(x) (in x = s/4) whose coefficients up to x^(2k)
determine the moment constants b_k and b'_k of the derivative of a Haar
unitary characteristic polynomial.

A caution established by the independent Bessel-determinant route
(:mod:`painleve_rmt.bessel`): the even solution computed here agrees with
the xi = 1 hard-edge average only through order x^(2k).  The true average
is not even beyond that order -- its free expansion parameter enters
analytically at x^(2k+1) -- so coefficients above x^(2k) from this module
belong to a neighbouring solution of the same ODE.  Everything needed for
b_k and b'_k lives at or below x^(2k), where the two routes agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .series import TruncatedSeries

__all__ = [
    "EtaSeries",
    "HardEdgeTauSeries",
    "eta_coefficients",
    "sigma_series",
    "ehard_series",
    "bk_constant",
    "bkprime_constant",
    "hard_edge_normalization",
]


def hard_edge_normalization(a, mu):
    """A(a, mu) = a! * prod_{j=1..a} (j+mu-1)!/j!  (integer a >= 1, mu >= 0)."""
    if a < 1 or a != int(a) or mu < 0 or mu != int(mu):
        raise ValueError("exact normalization requires integer a >= 1, mu >= 0")
    a, mu = int(a), int(mu)
    val = math.factorial(a)
    for j in range(1, a + 1):
        val = val * math.factorial(j + mu - 1) // math.factorial(j)
    return val


@dataclass(frozen=True)
class EtaSeries:
    """Even-series coefficients c_0..c_P of eta(s) = sum c_n s^(2n)."""

    k: int
    coeffs: tuple = field(repr=False)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        assert self.coeffs[0] == -self.k**2
        if len(self.coeffs) > 1:
            assert self.coeffs[1] == Fraction(1, 64 * (4 * self.k**2 - 1))

    @property
    def order(self):
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class HardEdgeTauSeries:
    """Series in x = s/4 of the hard-edge average at a = mu = k, xi = 1."""

    k: int
    series: TruncatedSeries
    provenance: str  # "recurrence" or "bessel_oracle"

    def __post_init__(self):
        if self.series.coeff(0) != 1:
            raise ValueError("hard-edge tau series must have constant term 1")
        if self.provenance not in ("recurrence", "bessel_oracle"):
            raise ValueError("unknown provenance %r" % (self.provenance,))


def eta_coefficients(k, P):
    """Exact coefficients c_0..c_P of the even sigma-III' series.

    c_0 = -k^2 and c_1 = 1/(64*(4k^2-1)); for p >= 2,

        D_p c_p = 4k^2 * S1 - S2 - 4 * S3,

    with D_p = 2 c_1 p (2p-1) + (2p-1)/64 - 8 p k^2 c_1,
    S1 = sum_{l=1}^{p-2} (l+1)(p-l) c_{l+1} c_{p-l},
    S2 = sum_{l=1}^{p-2} (l+1)(p-l)(2l+1)(2p-2l-1) c_{l+1} c_{p-l},
    S3 = sum_{l=1}^{p-1} (1-2l) c_l A_{p-l-1},
    A_q = sum_{l=0}^{q} (l+1)(q-l+1) c_{l+1} c_{q-l+1},

    obtained by matching coefficients of s^(2p) in the governing equation.
    D_p = ((2p-1)^2 - 4k^2) / (64*(4k^2-1)) never vanishes for integer k,
    but is asserted nonzero rather than assumed.
    """
    if k < 1 or k != int(k):
        raise ValueError("k must be a positive integer")
    if P < 1:
        raise ValueError("need P >= 1")
    k = int(k)
    c = [Fraction(0)] * (P + 1)
    c[0] = Fraction(-k * k)
    c[1] = Fraction(1, 64 * (4 * k * k - 1))
    # A_q values grow with the c's; cache them as we go.
    for p in range(2, P + 1):
        D = 2 * c[1] * p * (2 * p - 1) + Fraction(2 * p - 1, 64) - 8 * p * k * k * c[1]
        if D == 0:
            raise ZeroDivisionError("degenerate recurrence denominator at p=%d" % p)
        s1 = Fraction(0)
        s2 = Fraction(0)
        for l in range(1, p - 1):
            prod = (l + 1) * (p - l) * c[l + 1] * c[p - l]
            s1 += prod
            s2 += (2 * l + 1) * (2 * p - 2 * l - 1) * prod
        s3 = Fraction(0)
        for l in range(1, p):
            q = p - l - 1
            aq = sum((m + 1) * (q - m + 1) * c[m + 1] * c[q - m + 1] for m in range(q + 1))
            s3 += (1 - 2 * l) * c[l] * aq
        c[p] = (4 * k * k * s1 - s2 - 4 * s3) / D
    return EtaSeries(k=k, coeffs=tuple(c))


def sigma_series(k, P):
    """sigma_III'(s) = eta(s) + s/8 as an exact series in s of order 2P."""
    eta = eta_coefficients(k, P)
    coeffs = [Fraction(0)] * (2 * P + 1)
    for n, cn in enumerate(eta.coeffs):
        coeffs[2 * n] = cn
    coeffs[1] = Fraction(1, 8)
    return TruncatedSeries(coeffs, var="s")


def ehard_series(k, order):
    """Hard-edge tau series in x = s/4 through x^order, via the recurrence.

    E(x) = exp( -integral_0^{4x} (sigma(s) + k^2) ds/s ); the integrand has
    zero constant term, the integral is done termwise and the result
    exponentiated, all in exact rational arithmetic.
    """
    if order < 1:
        raise ValueError("need order >= 1")
    P = order // 2 + 1
    eta = eta_coefficients(k, P)
    # (sigma + k^2) as a series in x after s = 4x: s/8 -> x/2, c_n s^{2n} -> c_n 16^n x^{2n}
    integrand = [Fraction(0)] * (order + 1)
    integrand[1] = Fraction(1, 2)
    for n in range(1, P + 1):
        if 2 * n <= order:
            integrand[2 * n] += eta.coeffs[n] * Fraction(16) ** n
    logE = TruncatedSeries(integrand, var="x").integrate_logfree().scale(-1)
    return HardEdgeTauSeries(k=k, series=logE.exp(), provenance="recurrence")


def _bk_from_series(k, tau):
    """b_k weights applied to a hard-edge tau series (needs order >= 2k)."""
    if tau.series.order < 2 * k:
        raise ValueError("truncation order must be at least 2k")
    A = hard_edge_normalization(k, k)
    acc = Fraction(0)
    for h in range(k + 1):
        acc += math.comb(k, h) * math.factorial(k + h) * tau.series.coeff(k + h)
    return Fraction((-1) ** k, A) * acc


def _bkprime_from_series(k, tau):
    """b'_k = (-1)^k/A(k,k) * (2k)! * [x^{2k}] (e^{x/2} * E(x))."""
    if tau.series.order < 2 * k:
        raise ValueError("truncation order must be at least 2k")
    A = hard_edge_normalization(k, k)
    halfexp = TruncatedSeries(
        [Fraction(1, 2**n * math.factorial(n)) for n in range(2 * k + 1)], var="x"
    )
    prod = halfexp * tau.series.truncate(2 * k)
    return Fraction((-1) ** k, A) * math.factorial(2 * k) * prod.coeff(2 * k)


def bk_constant(k, tau=None):
    """Derivative-moment constant b_k as an exact rational, recurrence route."""
    tau = tau if tau is not None else ehard_series(k, 2 * k)
    return _bk_from_series(k, tau)


def bkprime_constant(k, tau=None):
    """Companion constant b'_k as an exact rational, recurrence route."""
    tau = tau if tau is not None else ehard_series(k, 2 * k)
    return _bkprime_from_series(k, tau)
