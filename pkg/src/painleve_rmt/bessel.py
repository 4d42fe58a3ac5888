"""Bessel-determinant route to the hard-edge average, in exact arithmetic.

For integer parameters the hard-edge average has a closed determinant form

    E(s; a, mu; xi=1) = A(a,mu) * (2/sqrt(s))^(a mu) * e^(-s/4)
                          * det[ I_{mu+alpha-beta}(sqrt(s)) ]_{alpha,beta=1..a},

with A(a, mu) = a! prod_{j=1..a} (j+mu-1)!/j!.  Writing s = 4x and using
I_n(2 sqrt(x)) = x^(n/2) g_n(x) with g_n(x) = sum_m x^m / (m! (m+n)!), the
half-integer powers cancel identically and only integer-power series are
ever materialized.  This module is the independent oracle against which the
sigma-III' recurrence of :mod:`painleve_rmt.hardedge` is checked, and the
direct implementation of the moment-constant formulas

    b_k  = (-1)^(k(k+1)/2) sum_h C(k,h) (k+h)! [x^(k+h)] ( e^{-x}  f_k(x) ),
    b'_k = (-1)^(k(k+1)/2) (2k)!            [x^(2k)]  ( e^{-x/2} f_k(x) ),

where f_k(x) = x^(-k^2/2) det[I_{alpha+beta-1}(2 sqrt(x))]_{k x k}
            = det[g_{alpha+beta-1}(x)]_{k x k}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .hardedge import HardEdgeTauSeries, hard_edge_normalization
from .series import TruncatedSeries

__all__ = [
    "ShiftedBesselSeries",
    "shifted_bessel_series",
    "hankel_bessel_det",
    "hankel_bessel_det_cofactor",
    "bk_direct",
    "bkprime_direct",
    "ehard_bessel",
    "ehard_bessel_tagged",
]


@dataclass(frozen=True)
class ShiftedBesselSeries:
    """g_n(x) = x^(-n/2) I_n(2 sqrt(x)) = sum_m x^m / (m! (m+n)!)."""

    n: int
    series: TruncatedSeries = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("order must be nonnegative")


def shifted_bessel_series(n, P):
    """Exact series of g_n through x^P; every coefficient is positive."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [
        Fraction(1, math.factorial(m) * math.factorial(m + n)) for m in range(P + 1)
    ]
    return ShiftedBesselSeries(n=n, series=TruncatedSeries(coeffs, var="x"))


def _entry(nu, P):
    """h_nu(x): g_nu for nu >= 0, and x^|nu| g_|nu| for nu < 0 (I_{-n} = I_n)."""
    if nu >= 0:
        return shifted_bessel_series(nu, P).series
    g = shifted_bessel_series(-nu, P).series
    shifted = [Fraction(0)] * (-nu) + list(g.coeffs[: P + 1 + nu])
    return TruncatedSeries(shifted, var="x")


def _det_eliminate(M, P):
    """Exact determinant of a series matrix by Gaussian elimination.

    The natural pivot order is safe here: the constant-term matrices that
    arise (det[1/((alpha+beta-1)!)] and its relatives) are totally positive,
    so every pivot series has a nonzero constant term.
    """
    n = len(M)
    M = [row[:] for row in M]
    det = TruncatedSeries.one(P, var="x")
    for c in range(n):
        piv = M[c][c]
        if piv.coeff(0) == 0:
            raise ZeroDivisionError("zero constant-term pivot in series elimination")
        det = det * piv
        for r in range(c + 1, n):
            f = M[r][c].divide(piv)
            for j in range(c, n):
                M[r][j] = M[r][j] - f * M[c][j]
    return det


def _det_cofactor(M, P):
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = TruncatedSeries.zero(P, var="x")
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _det_cofactor(minor, P)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def hankel_bessel_det(k, P, method="eliminate"):
    """det[g_{alpha+beta-1}(x)]_{alpha,beta=1..k} through x^P, exactly.

    Equals x^(-k^2/2) det[I_{alpha+beta-1}(2 sqrt(x))]: the prefactor cancels
    the permutation-uniform power x^(k^2/2), so the half-integer powers are
    handled analytically and never stored.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    M = [[_entry(a + b + 1, P) for b in range(k)] for a in range(k)]
    if method == "eliminate":
        return _det_eliminate(M, P)
    if method == "cofactor":
        if k > 4:
            raise ValueError("cofactor expansion is for k <= 4 cross-checks only")
        return _det_cofactor(M, P)
    raise ValueError("unknown method %r" % (method,))


def hankel_bessel_det_cofactor(k, P):
    return hankel_bessel_det(k, P, method="cofactor")


def _exp_series(c, P):
    """Series of e^{c x} with exact rational c."""
    c = Fraction(c)
    return TruncatedSeries(
        [c**n / math.factorial(n) for n in range(P + 1)], var="x"
    )


def bk_direct(k):
    """b_k evaluated directly from the Bessel-Hankel determinant."""
    P = 2 * k
    det = hankel_bessel_det(k, P)
    weighted = _exp_series(-1, P) * det
    sign = (-1) ** (k * (k + 1) // 2)
    acc = Fraction(0)
    for h in range(k + 1):
        acc += math.comb(k, h) * math.factorial(k + h) * weighted.coeff(k + h)
    return sign * acc


def bkprime_direct(k):
    """b'_k evaluated directly from the Bessel-Hankel determinant."""
    P = 2 * k
    det = hankel_bessel_det(k, P)
    weighted = _exp_series(Fraction(-1, 2), P) * det
    sign = (-1) ** (k * (k + 1) // 2)
    return sign * math.factorial(2 * k) * weighted.coeff(2 * k)


def ehard_bessel(a, mu, P):
    """Exact series in x = s/4 of E(4x; a, mu; xi=1) for integer a >= 1, mu >= 0.

    E = A(a,mu) e^{-x} det[h_{mu+alpha-beta}(x)]_{a x a}, where the prefactor
    (2/sqrt(s))^(a mu) has cancelled the uniform power x^(a mu / 2) of the
    Bessel entries.  For mu = a = k this reproduces the recurrence series of
    :func:`painleve_rmt.hardedge.ehard_series` through x^(2k) (and no
    further; see that module's docstring).
    """
    if a < 1 or a != int(a):
        raise ValueError("exact path requires integer a >= 1")
    if mu < 0 or mu != int(mu):
        raise ValueError("exact path requires integer mu >= 0")
    a, mu = int(a), int(mu)
    M = [
        [_entry(mu + alpha - beta, P) for beta in range(1, a + 1)]
        for alpha in range(1, a + 1)
    ]
    det = _det_eliminate(M, P)
    series = (_exp_series(-1, P) * det).scale(hard_edge_normalization(a, mu))
    if series.coeff(0) != 1:
        raise AssertionError("normalization failed: constant term %s" % series.coeff(0))
    return series


def ehard_bessel_tagged(k, P):
    """The a = mu = k oracle series wrapped with its provenance tag."""
    return HardEdgeTauSeries(k=k, series=ehard_bessel(k, k, P), provenance="bessel_oracle")
