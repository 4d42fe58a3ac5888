"""Floating-point special functions for the moment and expansion layers.

Gamma and digamma are delegated to scipy; the reciprocal gamma is wrapped so
that arguments at (or within tolerance of) nonpositive integers return an
exact 0, which is what makes vanishing expansion branches exact zeros rather
than 0*inf artifacts.  The confluent hypergeometric 1F1 is evaluated by its
defining series with term-ratio stopping, which covers the required domain
|s| <= 50 including negative non-integer denominator parameters.
"""

from __future__ import annotations

import math

from scipy import special as _sp

__all__ = [
    "INT_TOL",
    "HYP1F1_SMAX",
    "nonpositive_integer",
    "gamma_fn",
    "digamma_fn",
    "rgamma_fn",
    "hyp1f1",
    "gamma_ratio_product",
]

# Tolerance for "is (close to) an integer" decisions throughout the package.
INT_TOL = 1e-9

# The series evaluation of 1F1 is only used as an expansion/ODE seed; cap
# its domain rather than implement asymptotic continuation.
HYP1F1_SMAX = 50.0


def nonpositive_integer(z):
    """(flag, m) with flag true when z is within INT_TOL of -m, m >= 0."""
    z = complex(z)
    if abs(z.imag) > INT_TOL:
        return False, 0
    r = round(z.real)
    if r <= 0 and abs(z.real - r) < INT_TOL:
        return True, int(-r)
    return False, 0


def gamma_fn(z):
    """Gamma function for real or complex argument; poles raise."""
    flag, _ = nonpositive_integer(z)
    if flag:
        raise ValueError(f"gamma pole at {z!r}")
    val = _sp.gamma(complex(z))
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise OverflowError(f"gamma overflow at {z!r}")
    return complex(val)


def digamma_fn(z):
    flag, _ = nonpositive_integer(z)
    if flag:
        raise ValueError(f"digamma pole at {z!r}")
    zc = complex(z)
    if zc.imag == 0.0:
        return complex(_sp.psi(zc.real))
    return complex(_sp.psi(zc))


def rgamma_fn(z):
    """Entire reciprocal gamma; exactly 0 at nonpositive integers."""
    flag, _ = nonpositive_integer(z)
    if flag:
        return 0j
    return 1.0 / _sp.gamma(complex(z))


def hyp1f1(gamma, alpha, s, tol=1e-17, max_terms=10000):
    """1F1(gamma; alpha; s) by the convergent defining series.

    The series terminates when gamma is a nonpositive integer; otherwise the
    term-ratio stopping rule applies.  alpha at a nonpositive integer is a
    parameter pole and raises.
    """
    flag, _ = nonpositive_integer(alpha)
    if flag:
        raise ValueError(f"1F1 parameter pole: denominator parameter {alpha!r}")
    if abs(s) > HYP1F1_SMAX:
        raise ValueError(f"|s| = {abs(s):g} outside the supported domain <= {HYP1F1_SMAX:g}")
    term = 1.0 + 0j
    total = 1.0 + 0j
    for l in range(max_terms):
        term *= (gamma + l) / (alpha + l) * s / (l + 1)
        total += term
        if term == 0:
            return total
        if l > 8 and abs(term) < tol * max(1.0, abs(total)):
            return total
    raise RuntimeError("1F1 series did not converge")


def gamma_ratio_product(gamma_args, rgamma_args):
    """prod Gamma(g_i) * prod 1/Gamma(r_j) with paired pole/zero limits.

    When a Gamma argument sits at a nonpositive integer -m and a reciprocal
    argument sits at a nonpositive integer -l, the pair is interpreted as the
    joint limit along a common parameter deformation:

        Gamma(-m - eps) / Gamma(-l + eps)  ->  (-1)^(m+l+1) * l! / m!.

    Unpaired reciprocal zeros make the product an exact 0; an unpaired Gamma
    pole is a genuine divergence and raises.  Pairs are matched in argument
    order; the expansions evaluated in this package need at most one pair.
    """
    gs = [complex(z) for z in gamma_args]
    rs = [complex(z) for z in rgamma_args]
    g_poles = [i for i, z in enumerate(gs) if nonpositive_integer(z)[0]]
    r_zeros = [j for j, z in enumerate(rs) if nonpositive_integer(z)[0]]
    val = 1.0 + 0j
    used_g, used_r = set(), set()
    for i, j in zip(g_poles, r_zeros):
        m = nonpositive_integer(gs[i])[1]
        l = nonpositive_integer(rs[j])[1]
        val *= (-1) ** (m + l + 1) * math.factorial(l) / math.factorial(m)
        used_g.add(i)
        used_r.add(j)
    if len(g_poles) > len(r_zeros):
        raise ValueError("unpaired gamma pole; coefficient diverges")
    if len(r_zeros) > len(g_poles):
        return 0j
    for i, z in enumerate(gs):
        if i not in used_g:
            val *= gamma_fn(z)
    for j, z in enumerate(rs):
        if j not in used_r:
            val *= rgamma_fn(z)
    return val
