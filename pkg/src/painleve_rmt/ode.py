"""Sigma-form ODEs: residuals, exact series verification, and integration.

Two Jimbo-Miwa-Okamoto sigma forms are handled:

* Painleve V (finite-N average), parameters nu_0..nu_3:
      (s w'')^2 - [w - s w' + 2(w')^2 + (sum nu) w']^2 + 4 prod(nu_j + w') = 0
* Painleve III' (hard edge), parameters v1, v2:
      (s w'')^2 - v1 v2 (w')^2 + w'(4w'-1)(w - s w') - (v1-v2)^2/64 = 0

Differentiating once and cancelling w'' yields an explicit third-order
system that is polynomial in the state, so no square-root branch tracking
is needed; the original sigma form becomes a conserved quantity that is
monitored along every trajectory.  Boundary data come from the small-s
expansions, extended to high order by an order-by-order bootstrap on the
exponent grid {j + k(mu+a)} that the expansions live on.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.integrate import solve_ivp

from .finiten import AsymptoticExpansion, LUEContext, wn_expansion
from .hardedge import HardEdgeTauSeries, eta_coefficients
from .jimbo import HardEdgeContext, hardedge_sigma_expansion
from .series import TruncatedSeries

__all__ = [
    "SigmaState",
    "SigmaTrajectory",
    "ResidualMonitorError",
    "pv_residual",
    "piii_residual",
    "exact_series_residual_piii",
    "pv_boundary_expansion",
    "iii_boundary_expansion",
    "ExpansionSeed",
    "SeriesSeed",
    "integrate_sigma",
    "ehard_from_sigma",
]


class ResidualMonitorError(RuntimeError):
    """The integrated trajectory left the sigma-form manifold."""


# ---------------------------------------------------------------------------
# Residual functionals
# ---------------------------------------------------------------------------

def pv_residual(ctx, s, sigma, d1, d2):
    """Left-hand side of the Painleve V sigma form at the given state."""
    nus = ctx.nu if isinstance(ctx, LUEContext) else tuple(ctx)
    nbar = sum(nus)
    B = sigma - s * d1 + 2 * d1 * d1 + nbar * d1
    prod = 1.0 + 0j
    for nu in nus:
        prod *= nu + d1
    return (s * d2) ** 2 - B * B + 4 * prod


def piii_residual(hctx, s, sigma, d1, d2):
    """Left-hand side of the Painleve III' sigma form at the given state."""
    if isinstance(hctx, HardEdgeContext):
        v1, v2 = hctx.v1, hctx.v2
    else:
        v1, v2 = hctx
    return (
        (s * d2) ** 2
        - v1 * v2 * d1 * d1
        + d1 * (4 * d1 - 1) * (sigma - s * d1)
        - (v1 - v2) ** 2 / 64
    )


def exact_series_residual_piii(k, P, perturb_c2=None):
    """Substitute the even eta series into its defining equation, exactly.

    Returns the residual series of
    (s eta'')^2 + 4((eta')^2 - 1/64)(eta - s eta') - k^2/16 through s^(2P);
    every computed coefficient must vanish.  ``perturb_c2`` adds the given
    rational to c_2 first (negative control: the residual then fails at s^4).
    """
    eta_c = list(eta_coefficients(k, P).coeffs)
    if perturb_c2 is not None:
        if P < 2:
            raise ValueError("need P >= 2 to perturb c_2")
        eta_c[2] += Fraction(perturb_c2)
    deg = 2 * P
    eta = [Fraction(0)] * (deg + 1)
    for n, cn in enumerate(eta_c):
        eta[2 * n] = cn
    # Padded to order 2P: evenness puts the first unknown coefficient of the
    # true solution at s^(2P+2), so these arrays are exact through s^(2P).
    d1 = [Fraction(0)] * (deg + 1)
    sd2 = [Fraction(0)] * (deg + 1)
    for m in range(deg):
        d1[m] = (m + 1) * eta[m + 1]
        sd2[m] = (m + 1) * m * eta[m + 1]
    eta_s = TruncatedSeries(eta, var="s")
    d1_s = TruncatedSeries(d1, var="s")
    sd2_s = TruncatedSeries(sd2, var="s")
    lhs = sd2_s * sd2_s
    bracket = (d1_s * d1_s).shift(Fraction(-1, 64))
    euler = eta_s - TruncatedSeries(
        [m * eta[m] for m in range(deg + 1)], var="s"
    )
    res = lhs + (bracket * euler).scale(4)
    return res.shift(Fraction(-k * k, 16))


# ---------------------------------------------------------------------------
# Sparse-exponent boundary bootstrap
# ---------------------------------------------------------------------------

_EXP_TOL = 1e-9


class _SparseSeries:
    """Power series with arbitrary real exponents, truncated at ``cutoff``."""

    __slots__ = ("d", "cutoff")

    def __init__(self, d=None, cutoff=10.0):
        self.d = {}
        self.cutoff = cutoff
        if d:
            for e, c in d.items():
                self.add_term(e, c)

    def _key(self, e):
        for k in self.d:
            if abs(k - e) < _EXP_TOL:
                return k
        return e

    def add_term(self, e, c):
        if e > self.cutoff + _EXP_TOL or c == 0:
            return
        k = self._key(e)
        self.d[k] = self.d.get(k, 0j) + c

    def copy(self):
        out = _SparseSeries(cutoff=self.cutoff)
        out.d = dict(self.d)
        return out

    def __add__(self, other):
        out = self.copy()
        for e, c in other.d.items():
            out.add_term(e, c)
        return out

    def __sub__(self, other):
        out = self.copy()
        for e, c in other.d.items():
            out.add_term(e, -c)
        return out

    def __mul__(self, other):
        out = _SparseSeries(cutoff=self.cutoff)
        for e1, c1 in self.d.items():
            for e2, c2 in other.d.items():
                if e1 + e2 <= self.cutoff + _EXP_TOL:
                    out.add_term(e1 + e2, c1 * c2)
        return out

    def scale(self, c):
        out = _SparseSeries(cutoff=self.cutoff)
        for e, v in self.d.items():
            out.add_term(e, c * v)
        return out

    def euler(self):
        """s d/ds acting termwise: multiplies each coefficient by its exponent."""
        out = _SparseSeries(cutoff=self.cutoff)
        for e, v in self.d.items():
            out.add_term(e, e * v)
        return out

    def coeff(self, e):
        for k, v in self.d.items():
            if abs(k - e) < _EXP_TOL:
                return v
        return 0j

    def support(self, floor=1e-99):
        return sorted(e for e, c in self.d.items() if abs(c) > floor)


def _pv_euler_residual(sig, nus, cutoff):
    """s^4 * (PV sigma form) written with the Euler operator; polynomial in s."""
    s1 = _SparseSeries({1.0: 1.0}, cutoff)
    s2 = _SparseSeries({2.0: 1.0}, cutoff)
    d = sig.euler()
    dd = d.euler()
    t1 = (dd - d) * (dd - d) * s2
    nbar = sum(nus)
    B2 = s2 * sig - s2 * d + (d * d).scale(2.0) + (s1 * d).scale(nbar)
    prod = _SparseSeries({0.0: 4.0}, cutoff)
    for nu in nus:
        prod = prod * (s1.scale(nu) + d)
    return t1 - B2 * B2 + prod


def _iii_euler_residual(sig, v1, v2, cutoff):
    """s^2 * (III' sigma form) in Euler form; polynomial in s."""
    s1 = _SparseSeries({1.0: 1.0}, cutoff)
    d = sig.euler()
    dd = d.euler()
    t1 = (dd - d) * (dd - d)
    t2 = (d * d).scale(v1 * v2)
    t3 = d * (d.scale(4.0) - s1) * (sig - d)
    const = _SparseSeries({2.0: (v1 - v2) ** 2 / 64.0}, cutoff)
    return t1 - t2 + t3 - const


def _bootstrap(residual_fn, germ, gamma, cutoff):
    """Fill the exponent grid {j + k*gamma, 0 <= k <= j} order by order.

    Each undetermined coefficient enters the residual linearly, first at its
    indicial exponent; a unit probe measures the linear response and the
    coefficient follows by one division.  Probes are exact in this sense
    because the probe's self-interactions land strictly above the response
    exponent.  The Euler-form residuals respond at an offset of a few orders
    above the slot (up to 3 + gamma for the V form), hence the working
    cutoff headroom.
    """
    jmax = int(cutoff) + 2
    slots = sorted(
        {
            j + k * gamma
            for j in range(jmax + 1)
            for k in range(j + 1)
            if j + k * gamma <= cutoff + _EXP_TOL
        }
    )
    work_cut = cutoff + 5.0
    sig = _SparseSeries(cutoff=work_cut)
    for e, c in germ.items():
        sig.add_term(e, c)
    for e in slots:
        if e < _EXP_TOL or any(abs(e - g) < _EXP_TOL for g in germ):
            continue
        R0 = residual_fn(sig, work_cut)
        probe = sig.copy()
        probe.add_term(e, 1.0)
        delta = residual_fn(probe, work_cut) - R0
        mags = [abs(c) for c in delta.d.values()]
        if not mags:
            raise RuntimeError(f"degenerate bootstrap slot at exponent {e:g}")
        floor = max(1e-12, 1e-6 * max(mags))
        sup = delta.support(floor=floor)
        if not sup:
            raise RuntimeError(f"degenerate bootstrap slot at exponent {e:g}")
        er = sup[0]
        low = [x for x in R0.support(floor=floor) if x < er - _EXP_TOL]
        if low:
            raise RuntimeError(
                f"bootstrap residual already nonzero below exponent {er:g}: {low[:3]}"
            )
        sig.add_term(e, -R0.coeff(er) / delta.coeff(er))
    return sig


def _sigma_to_expansion(sig, validity):
    terms = tuple((c, e, 0) for e, c in sig.d.items() if abs(c) > 1e-14)
    return AsymptoticExpansion(terms=terms, validity_order=validity)


def pv_boundary_expansion(ctx, cutoff=8.0):
    """High-order small-s expansion of W_N, bootstrapped from the sigma form.

    The germ (constant, linear and s^(1+mu+a) coefficients) comes from the
    printed expansion of W_N; all remaining coefficients on the exponent
    grid up to ``cutoff`` are forced by the ODE.  Generic case only.
    """
    g = ctx.a + ctx.mu
    w = wn_expansion(ctx)
    germ = {
        0.0: w.coefficient(0.0),
        1.0: w.coefficient(1.0),
        1.0 + g: w.coefficient(1.0 + g),
    }
    sig = _bootstrap(
        lambda s_, cut: _pv_euler_residual(s_, ctx.nu, cut), germ, g, cutoff
    )
    return _sigma_to_expansion(sig, validity=cutoff)


def iii_boundary_expansion(hctx, cutoff=8.0):
    """High-order small-s expansion of sigma_III', bootstrapped; generic case."""
    g = hctx.v1
    se = hardedge_sigma_expansion(hctx.a, hctx.mu, hctx.xi)
    germ = {
        0.0: se.coefficient(0.0),
        1.0: se.coefficient(1.0),
        1.0 + g: se.coefficient(1.0 + g),
    }
    sig = _bootstrap(
        lambda s_, cut: _iii_euler_residual(s_, hctx.v1, hctx.v2, cut), germ, g, cutoff
    )
    return _sigma_to_expansion(sig, validity=cutoff)


# ---------------------------------------------------------------------------
# Seeds
# ---------------------------------------------------------------------------

class ExpansionSeed:
    """Seed data (sigma, sigma', sigma'') from an :class:`AsymptoticExpansion`.

    Only log-free expansions can seed the integrator directly; logarithmic
    (pole-case) boundary data are outside the supported seed family.
    """

    def __init__(self, expansion: AsymptoticExpansion):
        if any(m != 0 for (_, _, m) in expansion.terms):
            raise ValueError("logarithmic seeds are not supported by the integrator")
        self.expansion = expansion

    def state(self, s):
        v = d1 = d2 = 0j
        for c, e, _ in self.expansion.terms:
            v += c * s**e
            d1 += c * e * s ** (e - 1)
            d2 += c * e * (e - 1) * s ** (e - 2)
        return v, d1, d2

    def uh_log_integral(self, s0, sigma_shift):
        """integral_0^{s0} u^h(s)/s ds with u^h = -(sigma + sigma_shift).

        Requires the constant term of sigma to cancel sigma_shift exactly
        (within tolerance), so the integrand is regular at 0.
        """
        acc = 0j
        for c, e, _ in self.expansion.terms:
            if e == 0:
                if abs(c + sigma_shift) > 1e-9:
                    raise ValueError("seed constant term inconsistent with u^h regularity")
                continue
            acc += -c * s0**e / e
        return acc


class SeriesSeed:
    """Seed from an exact hard-edge tau series E(x), x = s/4 (III' only).

    sigma(s) = -sigma_shift - s d/ds log E(s); the log-integral stub on
    (0, s0] is simply log E(s0).  This is the natural boundary source at the
    integer parameter points where the generic expansions degenerate.
    """

    def __init__(self, tau: HardEdgeTauSeries, sigma_shift):
        logE = tau.series.to_complex().log()
        self._logE = logE
        self._uh = TruncatedSeries(
            [n * logE.coeffs[n] for n in range(logE.order + 1)], var="x"
        )
        self.sigma_shift = sigma_shift

    def state(self, s):
        x = s / 4.0
        uh = self._uh
        d1x = uh.differentiate()
        d2x = d1x.differentiate()
        v = -self.sigma_shift - uh(x)
        d1 = -d1x(x) / 4.0
        d2 = -d2x(x) / 16.0
        return v, d1, d2

    def uh_log_integral(self, s0, sigma_shift):
        if abs(sigma_shift - self.sigma_shift) > 1e-12:
            raise ValueError("inconsistent sigma shift")
        return complex(self._logE(s0 / 4.0))


# ---------------------------------------------------------------------------
# Integration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SigmaState:
    s: float
    sigma: complex
    sigma_d1: complex
    sigma_d2: complex
    residual: complex


@dataclass(frozen=True)
class SigmaTrajectory:
    which: str
    states: tuple
    log_integral: complex | None
    seed_log_stub: complex | None
    _dense: object = field(repr=False, default=None)

    @property
    def endpoint(self):
        return self.states[-1]

    def sigma_at(self, s):
        y = self._dense(s)
        return y[0] + 1j * y[1]


def _pv_rhs(nus, nbar):
    def rhs(s, y):
        sigma = y[0] + 1j * y[1]
        d1 = y[2] + 1j * y[3]
        d2 = y[4] + 1j * y[5]
        B = sigma - s * d1 + 2 * d1 * d1 + nbar * d1
        tot = 0j
        for i in range(4):
            p = 1.0 + 0j
            for j in range(4):
                if j != i:
                    p *= nus[j] + d1
            tot += p
        d3 = (B * (4 * d1 + nbar - s) - s * d2 - 2 * tot) / (s * s)
        return [d1.real, d1.imag, d2.real, d2.imag, d3.real, d3.imag]

    return rhs


def _iii_rhs(v1, v2, shift):
    def rhs(s, y):
        sigma = y[0] + 1j * y[1]
        d1 = y[2] + 1j * y[3]
        d2 = y[4] + 1j * y[5]
        d3 = (
            2 * v1 * v2 * d1
            - (8 * d1 - 1) * (sigma - s * d1)
            + s * d1 * (4 * d1 - 1)
            - 2 * s * d2
        ) / (2 * s * s)
        uh_over_s = -(sigma + shift) / s
        return [d1.real, d1.imag, d2.real, d2.imag, d3.real, d3.imag,
                uh_over_s.real, uh_over_s.imag]

    return rhs


def _constrained_d2(which, params, s, sigma, d1, d2_guess):
    """Solve the sigma form for sigma'' and pick the branch near the guess."""
    if which == "pv":
        nus, nbar = params
        B = sigma - s * d1 + 2 * d1 * d1 + nbar * d1
        prod = 1.0 + 0j
        for nu in nus:
            prod *= nu + d1
        rhs = B * B - 4 * prod
    else:
        v1, v2 = params
        rhs = (
            v1 * v2 * d1 * d1
            - d1 * (4 * d1 - 1) * (sigma - s * d1)
            + (v1 - v2) ** 2 / 64
        )
    root = cmath.sqrt(rhs) / s
    cand = root if abs(root - d2_guess) <= abs(-root - d2_guess) else -root
    # Keep the expansion value when the quadratic is too degenerate to trust.
    if abs(rhs) < 1e-300:
        return d2_guess
    return cand


def integrate_sigma(which, ctx, s0, s1, seed, rtol=1e-10, atol=1e-12,
                    monitor_tol=1e-8):
    """Integrate the differentiated sigma form from s0 to s1.

    ``which`` is "pv" (ctx: :class:`LUEContext`) or "iii"
    (ctx: :class:`HardEdgeContext`).  ``seed`` is an
    :class:`AsymptoticExpansion`, :class:`ExpansionSeed` or
    :class:`SeriesSeed` supplying (sigma, sigma', sigma'') at s0; sigma''
    is then projected onto the sigma-form manifold by solving the quadratic
    constraint, choosing the branch nearest the seed value.  The plain
    sigma-form residual is evaluated at every accepted step and must stay
    below monitor_tol * (1 + |sigma|^2), else :class:`ResidualMonitorError`.

    III' trajectories also accumulate integral u^h ds/s for
    :func:`ehard_from_sigma`.
    """
    if not 0 < s0 < s1:
        raise ValueError("need 0 < s0 < s1")
    if isinstance(seed, AsymptoticExpansion):
        seed = ExpansionSeed(seed)
    v, d1, d2 = seed.state(s0)
    if which == "pv":
        nus = ctx.nu
        params = (nus, sum(nus))
        rhs = _pv_rhs(nus, sum(nus))
        d2 = _constrained_d2("pv", params, s0, v, d1, d2)
        y0 = [v.real, v.imag, d1.real, d1.imag, d2.real, d2.imag]
        stub = None
    elif which == "iii":
        shift = ctx.mu * (ctx.mu + ctx.a) / 2.0
        params = (ctx.v1, ctx.v2)
        rhs = _iii_rhs(ctx.v1, ctx.v2, shift)
        d2 = _constrained_d2("iii", params, s0, v, d1, d2)
        stub = seed.uh_log_integral(s0, shift)
        y0 = [v.real, v.imag, d1.real, d1.imag, d2.real, d2.imag, 0.0, 0.0]
    else:
        raise ValueError("which must be 'pv' or 'iii'")

    sol = solve_ivp(rhs, (s0, s1), y0, method="RK45", rtol=rtol, atol=atol,
                    dense_output=True)
    if not sol.success:
        raise RuntimeError(f"integration failed: {sol.message}")

    states = []
    for i, s in enumerate(sol.t):
        sigma = sol.y[0, i] + 1j * sol.y[1, i]
        sd1 = sol.y[2, i] + 1j * sol.y[3, i]
        sd2 = sol.y[4, i] + 1j * sol.y[5, i]
        if which == "pv":
            res = pv_residual(ctx, s, sigma, sd1, sd2)
        else:
            res = piii_residual(ctx, s, sigma, sd1, sd2)
        bound = monitor_tol * (1 + abs(sigma) ** 2)
        if abs(res) > bound:
            raise ResidualMonitorError(
                f"sigma-form residual {abs(res):.3e} exceeds {bound:.3e} at s={s:.6g}"
            )
        states.append(SigmaState(s=float(s), sigma=sigma, sigma_d1=sd1,
                                 sigma_d2=sd2, residual=res))
    log_integral = None
    if which == "iii":
        log_integral = sol.y[6, -1] + 1j * sol.y[7, -1]
    return SigmaTrajectory(which=which, states=tuple(states),
                           log_integral=log_integral, seed_log_stub=stub,
                           _dense=sol.sol)


def ehard_from_sigma(hctx, s1, trajectory):
    """E^hard(s1) = exp( integral_0^{s1} u^h ds/s ) from a III' trajectory.

    The (0, s0] stub comes from the seed expansion (the integrand is O(1)
    there since u^h = O(s)); the rest is the accumulator carried by the
    trajectory.
    """
    if trajectory.which != "iii":
        raise ValueError("hard-edge reconstruction needs a III' trajectory")
    if abs(trajectory.endpoint.s - s1) > 1e-9:
        raise ValueError("trajectory does not end at the requested point")
    return cmath.exp(trajectory.seed_log_stub + trajectory.log_integral)
