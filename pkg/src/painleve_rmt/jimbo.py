"""Small-argument tau-function expansions for Painleve V and III'.

The general tau expansions carry two free parameters (sigma, u).  On the
parameter sets realized by the ensemble averages the exponents collide with
integers and the raw gamma coefficients degenerate to 0*inf; those pairs are
resolved by joint limits (see :func:`painleve_rmt.specfun.gamma_ratio_product`)
so that the surviving branch matches the determinant expansions and the
vanishing branch is an exact zero, via the entire reciprocal gamma.

Parameter dictionaries:

* Painleve V <- finite-N average: theta = (mu, a, -2N-a-mu), sigma = a+mu,
  tau prefactor exponent (sigma^2 - theta_inf^2)/4 = -N^2 - N(a+mu), and
  E_{2,N}(s) = s^(N^2+N(a+mu)) e^(-(N+a/2)s) tau_V(s).
* Painleve III' <- hard edge: v1 = a+mu, v2 = a-mu, t = s/4, and
  E^hard(s) = t^((v2^2-v1^2)/4) tau_III'(t).

The III' expansion is the u -> utilde limiting form.  Note the utilde term
goes with t^(1+v1): that normalization is fixed by requiring agreement with
the hard-edge expansion of the average itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.special import gammaln

from .finiten import AsymptoticExpansion, CaseTag, LUEContext, _near_int, kappa_weight
from .specfun import INT_TOL, digamma_fn, gamma_fn, gamma_ratio_product

__all__ = [
    "HardEdgeContext",
    "JimboPVParams",
    "JimboIIIParams",
    "MatchedParameter",
    "u_from_xi",
    "ut_from_xi",
    "tau_v_terms",
    "tau_v_expansion",
    "tau_iii_terms",
    "tau_iii_expansion",
    "hardedge_expansion",
    "hardedge_sigma_expansion",
    "scaling_coefficient_ratio",
]


@dataclass(frozen=True)
class HardEdgeContext:
    """Hard-edge parameters (a, mu, xi) with derived III' parameters."""

    a: float
    mu: float
    xi: float

    def __post_init__(self):
        if not (self.a > -1 and self.mu > -1 and self.a + self.mu > -1):
            raise ValueError("need a > -1, mu > -1 and a + mu > -1")

    @property
    def v1(self):
        return self.a + self.mu

    @property
    def v2(self):
        return self.a - self.mu

    def case_tag(self, force=None):
        if force is not None:
            return CaseTag(force)
        is_j, j = _near_int(self.mu + self.a)
        if not is_j or j < 0:
            return CaseTag.GENERIC
        is_a, ar = _near_int(self.a)
        if is_a and ar >= 0:
            return CaseTag.INDETERMINATE
        return CaseTag.POLE


@dataclass(frozen=True)
class JimboPVParams:
    theta0: float
    theta_s: float
    theta_inf: float
    sigma_exp: float
    u: complex
    C: complex = 1.0

    @classmethod
    def from_lue(cls, ctx: LUEContext):
        """theta = (mu, a, -2N-a-mu), sigma = a+mu, u matched to xi."""
        matched = u_from_xi(ctx.a, ctx.mu, ctx.xi)
        if matched.u is None:
            raise ValueError("u undefined at integer mu; handle the exceptional case")
        th0, ths, thi = ctx.theta
        return cls(theta0=th0, theta_s=ths, theta_inf=thi,
                   sigma_exp=ctx.a + ctx.mu, u=matched.u)

    @property
    def prefactor_exponent(self):
        return (self.sigma_exp**2 - self.theta_inf**2) / 4.0


@dataclass(frozen=True)
class JimboIIIParams:
    v1: float
    v2: float
    sigma_exp: float
    u_tilde: complex
    C: complex = 1.0

    @classmethod
    def from_hard_edge(cls, hctx: HardEdgeContext):
        matched = ut_from_xi(hctx.a, hctx.mu, hctx.xi)
        if matched.u is None:
            raise ValueError("utilde undefined at integer mu; handle the exceptional case")
        return cls(v1=hctx.v1, v2=hctx.v2, sigma_exp=hctx.v1, u_tilde=matched.u)

    @property
    def prefactor_exponent(self):
        return (self.sigma_exp**2 - self.v2**2) / 4.0


@dataclass(frozen=True)
class MatchedParameter:
    """Result of the u (or utilde) matching.

    ``combo`` is the combination u*sin(pi mu)/sin(pi(a+mu)), which is what
    actually multiplies the gamma ratio in the expansions; ``u`` is the bare
    parameter, None when sin(pi mu) = 0 (then only the combination enters
    and ``degenerate`` is set).
    """

    combo: complex
    u: complex | None
    degenerate: bool


def _match(a, mu, xi):
    sin_mu = math.sin(math.pi * mu)
    sin_sum = math.sin(math.pi * (a + mu))
    if abs(sin_mu) < INT_TOL and abs(sin_sum) < INT_TOL:
        raise ValueError(
            "a and mu both integers: the matching combination is 0/0; "
            "route to the exceptional-case handling"
        )
    combo = kappa_weight(a, mu, xi)
    if abs(sin_mu) < INT_TOL:
        return MatchedParameter(combo=combo, u=None, degenerate=True)
    return MatchedParameter(combo=combo, u=combo * sin_sum / sin_mu, degenerate=False)


def u_from_xi(a, mu, xi):
    """Painleve V expansion parameter u from the generating-function weight xi:
    u sin(pi mu)/sin(pi(a+mu)) = (1-xi) e^(i pi mu) - sin(pi a)/sin(pi(a+mu))."""
    return _match(a, mu, xi)


def ut_from_xi(a, mu, xi):
    """Painleve III' parameter utilde; same matching relation as :func:`u_from_xi`."""
    return _match(a, mu, xi)


# ---------------------------------------------------------------------------
# Painleve V tau expansion
# ---------------------------------------------------------------------------

def tau_v_terms(params: JimboPVParams):
    """Terms of tau_V(s) / (C s^prefactor_exponent) as (coeff, exponent) pairs.

    Exponents are relative to the prefactor: 0, 1, 1+sigma, 1-sigma.  The
    1+sigma and 1-sigma coefficients are evaluated with paired pole/zero
    limits; on the finite-N parameter set the 1-sigma branch is an exact 0
    because its coefficient contains the reciprocal of Gamma(-N).
    """
    th0, ths, thi = params.theta0, params.theta_s, params.theta_inf
    sg = params.sigma_exp
    if abs(sg) < INT_TOL:
        raise ValueError("sigma = 0 needs the separate degenerate solution family")
    linear = -thi * (ths**2 - th0**2 + sg**2) / (4 * sg**2)
    plus = params.u * gamma_ratio_product(
        [-sg, -sg, 1 + (ths + th0 + sg) / 2, 1 + (ths - th0 + sg) / 2, 1 + (thi + sg) / 2],
        [2 + sg, 2 + sg, (ths + th0 - sg) / 2, (ths - th0 - sg) / 2, (thi - sg) / 2],
    )
    minus_raw = gamma_ratio_product(
        [sg, sg, 1 + (ths + th0 - sg) / 2, 1 + (ths - th0 - sg) / 2, 1 + (thi - sg) / 2],
        [2 - sg, 2 - sg, (ths + th0 + sg) / 2, (ths - th0 + sg) / 2, (thi + sg) / 2],
    )
    minus = 0j if minus_raw == 0 else minus_raw / params.u
    return ((1.0 + 0j, 0.0), (complex(linear), 1.0), (plus, 1.0 + sg), (minus, 1.0 - sg))


def tau_v_expansion(params: JimboPVParams, s):
    """Value of the truncated tau_V expansion at s (validity window s <= 0.5)."""
    if not 0 < s <= 0.5:
        raise ValueError("tau_V expansion is a small-s seed; use s in (0, 0.5]")
    base = params.C * s**params.prefactor_exponent
    return base * sum(c * s**e for c, e in tau_v_terms(params))


# ---------------------------------------------------------------------------
# Painleve III' tau expansion (limiting form)
# ---------------------------------------------------------------------------

def tau_iii_terms(params: JimboIIIParams):
    """Terms of tau_III'(t) / (C t^prefactor_exponent): exponents 0, 1, 1+v1."""
    v1, v2 = params.v1, params.v2
    if abs(v1) < INT_TOL:
        raise ValueError("v1 = 0 needs the separate degenerate solution family")
    linear = (v1 * v2 - v1**2) / (2 * v1**2)
    sin_half = math.sin(math.pi * (v1 - v2) / 2)
    sin_v1 = math.sin(math.pi * v1)
    if abs(sin_v1) < INT_TOL:
        raise ValueError(
            "v1 at an integer: utilde term degenerates; use the exact series route"
        )
    coeff = (
        params.u_tilde
        * sin_half
        / sin_v1
        * gamma_ratio_product(
            [1 + (v1 - v2) / 2, 1 + (v1 + v2) / 2],
            [2 + v1, 2 + v1, 1 + v1],
        )
    )
    return ((1.0 + 0j, 0.0), (complex(linear), 1.0), (coeff, 1.0 + v1))


def tau_iii_expansion(params: JimboIIIParams, t):
    """Value of the truncated tau_III' expansion at t (validity t <= 0.25)."""
    if not 0 < t <= 0.25:
        raise ValueError("tau_III' expansion is a small-t seed; use t in (0, 0.25]")
    base = params.C * t**params.prefactor_exponent
    return base * sum(c * t**e for c, e in tau_iii_terms(params))


# ---------------------------------------------------------------------------
# Hard-edge expansions of the average and its sigma function
# ---------------------------------------------------------------------------

def _he_nonanalytic_coeff(a, mu, weight):
    g = mu + a
    return (
        gamma_fn(mu + 1)
        * gamma_fn(a + 1)
        / (gamma_fn(g + 2) ** 2 * gamma_fn(g + 1))
        * weight
        * 0.25 ** (g + 1)
    )


def hardedge_expansion(a, mu, xi, case=None):
    """Small-s expansion of the hard-edge average E^hard(s; a, mu; xi)."""
    hctx = HardEdgeContext(a, mu, xi)
    tag = hctx.case_tag(force=case)
    if tag is CaseTag.GENERIC:
        g = mu + a
        coeff = _he_nonanalytic_coeff(a, mu, kappa_weight(a, mu, xi))
        return AsymptoticExpansion(
            terms=((1, 0.0, 0), (-mu / (4 * g), 1.0, 0), (coeff, g + 1.0, 0)),
            validity_order=min(2.0, g + 2.0, 2 * (g + 1.0)),
        )
    _, j = _near_int(mu + a)
    if tag is CaseTag.INDETERMINATE:
        if j == 0:
            return AsymptoticExpansion(
                terms=((1, 0.0, 0), (-xi / 4, 1.0, 0)), validity_order=2.0
            )
        _, mu_i = _near_int(mu)
        coeff = _he_nonanalytic_coeff(a, mu, (1 - xi) * (-1) ** mu_i)
        return AsymptoticExpansion(
            terms=((1, 0.0, 0), (-mu / (4 * j), 1.0, 0), (coeff, j + 1.0, 0)),
            validity_order=2.0,
        )
    if j == 0:
        # log(s/4) = log s - log 4 folded into the plain s term
        bracket = (
            -1
            + math.pi * a / math.sin(math.pi * a) * cmath.exp(-1j * math.pi * a) * (1 - xi)
            + a * (2 * digamma_fn(2) + digamma_fn(1) - digamma_fn(1 - a) + math.log(4))
        )
        return AsymptoticExpansion(
            terms=((1, 0.0, 0), (bracket / 4, 1.0, 0), (-a / 4, 1.0, 1)),
            validity_order=1.0,
        )
    if j == 1:
        bracket = (
            math.pi / math.sin(math.pi * a) * cmath.exp(-1j * math.pi * a) * (1 - xi)
            + 2 * digamma_fn(3)
            + digamma_fn(2)
            - digamma_fn(2 - a)
            + math.log(4)
        )
        c20 = a * (a - 1) / 4 * bracket / 16
        c21 = complex(-a * (a - 1) / 4 / 16)
        return AsymptoticExpansion(
            terms=((1, 0.0, 0), ((a - 1) / 4, 1.0, 0), (c20, 2.0, 0), (c21, 2.0, 1)),
            validity_order=2.0,
        )
    raise ValueError("hard-edge pole expansion implemented for mu+a in {0, 1} only")


def hardedge_sigma_expansion(a, mu, xi, case=None):
    """Small-s expansion of sigma_III'(s) = -mu(mu+a)/2 - s d/ds log E^hard."""
    hctx = HardEdgeContext(a, mu, xi)
    tag = hctx.case_tag(force=case)
    g = mu + a
    if tag is CaseTag.GENERIC:
        coeff = -(
            gamma_fn(mu + 1)
            * gamma_fn(a + 1)
            / (gamma_fn(g + 2) * gamma_fn(g + 1) ** 2)
            * kappa_weight(a, mu, xi)
            * 0.25 ** (g + 1)
        )
        return AsymptoticExpansion(
            terms=((-mu * g / 2, 0.0, 0), (mu / (4 * g), 1.0, 0), (coeff, g + 1.0, 0)),
            validity_order=min(2.0, g + 2.0, 2 * (g + 1.0)),
        )
    # Exceptional-case sigma seeds follow from the E expansions termwise.
    e_exp = hardedge_expansion(a, mu, xi, case=case)
    _, j = _near_int(mu + a)
    if tag is CaseTag.INDETERMINATE and j >= 1:
        coeff = -(j + 1.0) * e_exp.coefficient(j + 1.0)
        return AsymptoticExpansion(
            terms=(
                (-mu * g / 2, 0.0, 0),
                (-e_exp.coefficient(1.0), 1.0, 0),
                (coeff, j + 1.0, 0),
            ),
            validity_order=2.0,
        )
    raise ValueError(
        "sigma expansion provided for generic and indeterminate (mu+a >= 1) cases; "
        "seed pole cases from the average expansion directly"
    )


def scaling_coefficient_ratio(N, a, mu):
    """Finite-N to hard-edge ratio of the s^(mu+a+1) expansion coefficients.

    The finite-N coefficient scaled by (4N)^-(mu+a+1), divided by the
    hard-edge coefficient; the gamma factors reduce it to
    Gamma(mu+a+N+1) / (Gamma(N) N^(mu+a+1)) -> 1 as N grows.
    """
    g = mu + a
    return math.exp(float(gammaln(g + N + 1) - gammaln(N)) - (g + 1) * math.log(N))
