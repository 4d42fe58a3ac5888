"""Command-line interface.

Subcommands:

* ``bk``     -- exact moment constants b_k, b'_k with dual-path verification
* ``e2n``    -- finite-N average: determinant value plus expansion terms
* ``expand`` -- small-s expansion terms (finite-N, W_N, hard edge, sigma)
* ``jimbo``  -- tau-expansion terms and the matched u / utilde
* ``ode``    -- sigma-form integration with residual trace, optional CSV
* ``verify`` -- invariant suites (series, finite-n, jimbo, ode, all)

Exit codes: 0 all checks pass, 1 a numerical check failed, 2 usage error.
JSON payloads are deterministic: identical invocations produce identical
payload bytes; wall time is reported outside the payload.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
import time
from fractions import Fraction

from . import bessel, finiten, hardedge, jimbo, ode
from .finiten import LUEContext
from .jimbo import HardEdgeContext

__all__ = ["main"]

SCHEMA = 1


# ---------------------------------------------------------------------------
# small utilities
# ---------------------------------------------------------------------------

def _c2d(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _expansion_terms(exp):
    return [
        {"coeff_re": c.real, "coeff_im": c.imag, "exponent": e, "log_power": m}
        for (c, e, m) in exp.terms
    ]


def _is_probable_prime(n):
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_factor(n, limit=100000):
    """(factors dict, cofactor) by trial division up to ``limit``."""
    n = abs(int(n))
    factors = {}
    p = 2
    while p * p <= n and p <= limit:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    return factors, n


def _factored(q):
    """Factored report of a rational: smooth denominator, numerator report."""
    den_f, den_rest = _trial_factor(q.denominator)
    if den_rest != 1:
        den_f[den_rest] = den_f.get(den_rest, 0) + 1
    num_f, num_rest = _trial_factor(q.numerator)
    return {
        "den": {str(p): e for p, e in sorted(den_f.items())},
        "num": {
            "sign": -1 if q.numerator < 0 else 1,
            "factors": {str(p): e for p, e in sorted(num_f.items())},
            "cofactor": str(num_rest),
            "cofactor_probable_prime": _is_probable_prime(num_rest) if num_rest > 1 else None,
        },
    }


def _report(command, parameters, outputs, checks):
    return {
        "schema": SCHEMA,
        "payload": {
            "command": command,
            "parameters": parameters,
            "outputs": outputs,
            "checks": checks,
        },
    }


def _emit(report, as_json, t0, text_lines=None):
    report["wall_time"] = time.monotonic() - t0
    if as_json:
        print(json.dumps(report))
    else:
        for line in text_lines or []:
            print(line)
    failed = [c for c in report["payload"]["checks"] if c["status"] != "ok"]
    return 1 if failed else 0


def _check(name, measured, tolerance, ok, left=None, right=None):
    entry = {
        "name": name,
        "status": "ok" if ok else "fail",
        "measured": measured,
        "tolerance": tolerance,
    }
    if left is not None:
        entry["left"] = left
    if right is not None:
        entry["right"] = right
    return entry


# ---------------------------------------------------------------------------
# bk
# ---------------------------------------------------------------------------

def _cmd_bk(args):
    t0 = time.monotonic()
    rows = []
    checks = []
    lines = ["  k  b_k                          b'_k"]
    for k in range(1, args.kmax + 1):
        tau = hardedge.ehard_series(k, 2 * k)
        bk = hardedge.bk_constant(k, tau)
        bpk = hardedge.bkprime_constant(k, tau)
        bko = bessel.bk_direct(k)
        bpko = bessel.bkprime_direct(k)
        match = bk == bko and bpk == bpko
        checks.append(
            _check(
                f"oracle_match_k{k}",
                {"recurrence": [str(bk), str(bpk)], "oracle": [str(bko), str(bpko)]},
                "exact",
                match,
            )
        )
        eta = hardedge.eta_coefficients(k, max(1, k))
        row = {
            "k": k,
            "c": [str(c) for c in eta.coeffs],
            "b_k": str(bk),
            "b_k_prime": str(bpk),
            "oracle_b_k": str(bko),
            "oracle_b_k_prime": str(bpko),
            "equal": match,
        }
        if not args.no_factor:
            row["b_k_factored"] = _factored(bk)
            row["b_k_prime_factored"] = _factored(bpk)
        rows.append(row)
        lines.append(f"{k:3d}  {str(bk):27s}  {str(bpk)}")
        if not match:
            lines.append(f"     MISMATCH against oracle: {bko}, {bpko}")
    report = _report("bk", {"kmax": args.kmax}, {"rows": rows}, checks)
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# e2n
# ---------------------------------------------------------------------------

def _cmd_e2n(args):
    t0 = time.monotonic()
    ctx = LUEContext(args.N, args.a, args.mu, args.xi)
    case = None if args.case == "auto" else args.case
    value = finiten.e2n_determinant(ctx, args.s, case=case)
    out = {
        "value": _c2d(value),
        "case": ctx.case_tag(force=case).value,
    }
    try:
        exp = finiten.e2n_expansion(ctx, case=case)
        out["expansion"] = _expansion_terms(exp)
        out["expansion_value"] = _c2d(exp.evaluate(args.s))
    except ValueError as err:
        out["expansion_error"] = str(err)
    report = _report(
        "e2n",
        {"N": args.N, "a": args.a, "mu": args.mu, "xi": args.xi, "s": args.s,
         "case": args.case},
        out,
        [],
    )
    lines = [f"E_2N({args.s}; a={args.a}, mu={args.mu}; xi={args.xi}) = {value}"]
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def _cmd_expand(args):
    t0 = time.monotonic()
    if args.target in ("lue", "w") and args.N is None:
        raise SystemExit("expand lue/w requires --N")
    if args.target == "lue":
        exp = finiten.e2n_expansion(LUEContext(args.N, args.a, args.mu, args.xi))
    elif args.target == "w":
        exp = finiten.wn_expansion(LUEContext(args.N, args.a, args.mu, args.xi))
    elif args.target == "hard":
        exp = jimbo.hardedge_expansion(args.a, args.mu, args.xi)
    else:
        exp = jimbo.hardedge_sigma_expansion(args.a, args.mu, args.xi)
    out = {
        "terms": _expansion_terms(exp),
        "validity_order": exp.validity_order,
    }
    report = _report(
        "expand",
        {"target": args.target, "N": args.N, "a": args.a, "mu": args.mu, "xi": args.xi},
        out,
        [],
    )
    lines = [f"{args.target} expansion, remainder O(s^{exp.validity_order:g}):"]
    for term in out["terms"]:
        logpart = " * log(s)" if term["log_power"] else ""
        lines.append(
            f"  ({term['coeff_re']:+.12g}{term['coeff_im']:+.12g}i)"
            f" * s^{term['exponent']:g}{logpart}"
        )
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# jimbo
# ---------------------------------------------------------------------------

def _cmd_jimbo(args):
    t0 = time.monotonic()
    if args.flavor == "pv":
        if args.N is None:
            raise SystemExit("jimbo pv requires --N")
        ctx = LUEContext(args.N, args.a, args.mu, args.xi)
        params = jimbo.JimboPVParams.from_lue(ctx)
        terms = jimbo.tau_v_terms(params)
        matched = jimbo.u_from_xi(args.a, args.mu, args.xi)
        out = {
            "prefactor_exponent": params.prefactor_exponent,
            "u": _c2d(params.u),
            "u_combo": _c2d(matched.combo),
            "terms": [{"coeff": _c2d(c), "exponent": e} for c, e in terms],
        }
        if args.s is not None:
            out["tau_value"] = _c2d(jimbo.tau_v_expansion(params, args.s))
    else:
        hctx = HardEdgeContext(args.a, args.mu, args.xi)
        params = jimbo.JimboIIIParams.from_hard_edge(hctx)
        terms = jimbo.tau_iii_terms(params)
        matched = jimbo.ut_from_xi(args.a, args.mu, args.xi)
        out = {
            "prefactor_exponent": params.prefactor_exponent,
            "u_tilde": _c2d(params.u_tilde),
            "u_combo": _c2d(matched.combo),
            "terms": [{"coeff": _c2d(c), "exponent": e} for c, e in terms],
        }
        if args.s is not None:
            out["tau_value"] = _c2d(jimbo.tau_iii_expansion(params, args.s / 4.0))
    report = _report(
        "jimbo",
        {"flavor": args.flavor, "N": args.N, "a": args.a, "mu": args.mu,
         "xi": args.xi, "s": args.s},
        out,
        [],
    )
    lines = [f"tau_{args.flavor} prefactor exponent {out['prefactor_exponent']:g}"]
    for term in out["terms"]:
        lines.append(
            f"  exponent {term['exponent']:+.6g}: "
            f"{term['coeff']['re']:+.12g}{term['coeff']['im']:+.12g}i"
        )
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# ode
# ---------------------------------------------------------------------------

def _cmd_ode(args):
    t0 = time.monotonic()
    if args.flavor == "pv":
        if args.N is None:
            raise SystemExit("ode pv requires --N")
        ctx = LUEContext(args.N, args.a, args.mu, args.xi)
        seed = ode.pv_boundary_expansion(ctx, cutoff=args.seed_cutoff)
        traj = ode.integrate_sigma("pv", ctx, args.s0, args.s1, seed)
        out = {"W_end": _c2d(traj.endpoint.sigma)}
    else:
        hctx = HardEdgeContext(args.a, args.mu, args.xi)
        if hctx.case_tag() is finiten.CaseTag.GENERIC:
            seed = ode.iii_boundary_expansion(hctx, cutoff=args.seed_cutoff)
        else:
            # integer parameters at xi=1: seed from the exact determinant series
            if args.xi != 1.0 or args.a < 1 or args.a != int(args.a) \
                    or args.mu < 0 or args.mu != int(args.mu):
                raise SystemExit(
                    "exceptional-case ode seeding needs integer a >= 1, mu >= 0, xi = 1"
                )
            order = max(40, int(8 * args.s1))
            series = bessel.ehard_bessel(int(args.a), int(args.mu), order)
            wrapped = hardedge.HardEdgeTauSeries(
                k=int(args.a), series=series, provenance="bessel_oracle")
            seed = ode.SeriesSeed(wrapped, sigma_shift=args.mu * (args.mu + args.a) / 2.0)
        traj = ode.integrate_sigma("iii", hctx, args.s0, args.s1, seed)
        value = ode.ehard_from_sigma(hctx, args.s1, traj)
        out = {"E_hard_end": _c2d(value)}
    max_res = max(abs(st.residual) for st in traj.states)
    out["sigma_end"] = _c2d(traj.endpoint.sigma)
    out["max_residual"] = max_res
    out["steps"] = len(traj.states)
    checks = [
        _check(
            "residual_monitor",
            max_res,
            "1e-8 * (1 + |sigma|^2)",
            all(
                abs(st.residual) <= 1e-8 * (1 + abs(st.sigma) ** 2)
                for st in traj.states
            ),
        )
    ]
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write("s,sigma_re,sigma_im,residual\n")
            for st in traj.states:
                fh.write(
                    f"{st.s:.16g},{st.sigma.real:.16g},{st.sigma.imag:.16g},"
                    f"{abs(st.residual):.6e}\n"
                )
    report = _report(
        "ode",
        {"flavor": args.flavor, "N": args.N, "a": args.a, "mu": args.mu,
         "xi": args.xi, "s0": args.s0, "s1": args.s1},
        out,
        checks,
    )
    lines = [f"sigma({args.s1}) = {traj.endpoint.sigma}", f"max residual {max_res:.3e}"]
    if "E_hard_end" in out:
        lines.insert(0, f"E_hard({args.s1}) = "
                        f"{out['E_hard_end']['re']}{out['E_hard_end']['im']:+g}i")
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_series():
    import random

    from .series import TruncatedSeries

    rng = random.Random(20240801)
    checks = []

    def rand_series(constant=None):
        coeffs = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(9)
        ]
        if constant is not None:
            coeffs[0] = Fraction(constant)
        return TruncatedSeries(coeffs, var="s")

    ok_distrib = all(
        (f + g) * h == f * h + g * h
        for f, g, h in ((rand_series(), rand_series(), rand_series()) for _ in range(20))
    )
    checks.append(_check("exact_distributivity", 20, "exact", ok_distrib))

    ok_exp = True
    for _ in range(10):
        f = rand_series(constant=0)
        prod = f.exp() * f.scale(-1).exp()
        if any(c != (1 if n == 0 else 0) for n, c in enumerate(prod.coeffs)):
            ok_exp = False
    checks.append(_check("exp_f_times_exp_minus_f_is_1", 10, "exact", ok_exp))

    ok_log = all(
        (f := rand_series(constant=1)).log().exp() == f for _ in range(10)
    )
    checks.append(_check("exp_log_roundtrip", 10, "exact", ok_log))

    f = rand_series()
    rt = TruncatedSeries.from_json(f.to_json())
    checks.append(_check("json_roundtrip", f.to_json()["order"], "exact", rt == f))

    canon = all(
        c.denominator > 0 and math.gcd(c.numerator, c.denominator) == 1
        for c in (rand_series() * rand_series()).coeffs
    )
    checks.append(_check("canonical_rationals", 9, "exact", canon))
    return checks


def _suite_finite_n():
    import numpy as np

    checks = []
    # convergence order of the generic expansion remainder
    ctx = LUEContext(3, 0.4, 0.7, 0.5)
    exp = finiten.e2n_expansion(ctx)
    diffs = [
        abs(finiten.e2n_determinant(ctx, s) - exp.evaluate(s))
        for s in (1e-2, 5e-3, 2.5e-3)
    ]
    orders = [math.log2(diffs[i] / diffs[i + 1]) for i in range(2)]
    r = finiten.remainder_order(ctx.a, ctx.mu) - 0.2
    checks.append(_check("halving_order_generic", orders, f">= {r:.2f}", min(orders) >= r))

    # pole-case fit; s^2 and s^2 log s regressors absorb the o(s) remainder
    ctxp = LUEContext(2, 0.3, -0.3, 0.5)
    ss = np.logspace(-4, -3, 40)
    ys = np.array([finiten.e2n_determinant(ctxp, s) - 1 for s in ss])
    L = np.log(ss)
    A = np.vstack([ss, ss * L, ss**2, ss**2 * L]).T
    coef, *_ = np.linalg.lstsq(A, ys, rcond=None)
    expp = finiten.e2n_expansion(ctxp)
    c1, c2 = expp.coefficient(1.0, 0), expp.coefficient(1.0, 1)
    rel1 = abs(coef[0] - c1) / abs(c1)
    rel2 = abs(coef[1] - c2) / abs(c2)
    checks.append(
        _check("pole_log_fit", {"rel_c1": rel1, "rel_c2": rel2}, "1e-3",
               max(rel1, rel2) <= 1e-3,
               left=_c2d(coef[0]), right=_c2d(c1))
    )

    # realness for integer mu
    ctxr = LUEContext(3, 0.7, 1.0, 0.6)
    val = finiten.e2n_determinant(ctxr, 0.4)
    checks.append(
        _check("realness_integer_mu", abs(val.imag), "1e-10 * |value|",
               abs(val.imag) <= 1e-10 * abs(val))
    )

    # xi = 0, mu = 0 gives E = 1 identically
    ctx0 = LUEContext(4, 0.3, 0.0, 0.0)
    worst = max(abs(finiten.e2n_determinant(ctx0, s) - 1) for s in (0.1, 1.0, 5.0))
    checks.append(_check("unit_average_xi0_mu0", worst, "1e-12", worst <= 1e-12))

    rep = finiten.hdet_expansion_check(LUEContext(4, 0.35, 0.55, 0.3))
    checks.append(
        _check("gamma_determinant_blocks", rep.max_rel_discrepancy, "1e-10",
               rep.max_rel_discrepancy <= 1e-10)
    )
    return checks


def _suite_jimbo():
    checks = []
    ctx = LUEContext(2, 0.4, 0.3, 0.25)
    params = jimbo.JimboPVParams.from_lue(ctx)
    terms = {round(e, 9): c for c, e in jimbo.tau_v_terms(params)}
    g = ctx.a + ctx.mu
    target = finiten.e2n_expansion(ctx).coefficient(g + 1.0)
    got = terms[round(1.0 + g, 9)]
    rel = abs(got - target) / abs(target)
    checks.append(_check("tau_v_nonanalytic_match", rel, "1e-10", rel <= 1e-10,
                         left=_c2d(got), right=_c2d(target)))
    vanish = terms[round(1.0 - g, 9)]
    checks.append(_check("tau_v_branch_vanishes", abs(vanish), "exact 0", vanish == 0))

    hctx = HardEdgeContext(0.4, 0.3, 0.25)
    p3 = jimbo.JimboIIIParams.from_hard_edge(hctx)
    t3 = {round(e, 9): c for c, e in jimbo.tau_iii_terms(p3)}
    he = jimbo.hardedge_expansion(hctx.a, hctx.mu, hctx.xi)
    target3 = he.coefficient(g + 1.0) * 4.0 ** (g + 1.0)  # t = s/4
    got3 = t3[round(1.0 + g, 9)]
    rel3 = abs(got3 - target3) / abs(target3)
    checks.append(_check("tau_iii_nonanalytic_match", rel3, "1e-10", rel3 <= 1e-10,
                         left=_c2d(got3), right=_c2d(target3)))
    lin = t3[1.0] / 4.0
    lin_target = he.coefficient(1.0)
    rel_lin = abs(lin - lin_target) / abs(lin_target)
    checks.append(_check("tau_iii_linear_match", rel_lin, "1e-12", rel_lin <= 1e-12))

    a, mu = 0.4, 0.3
    ratios = [jimbo.scaling_coefficient_ratio(N, a, mu) for N in (50, 200, 800)]
    gaps = [abs(r - 1) for r in ratios]
    bounds = [1.5 * 3 * (mu + a + 1) ** 2 / (2 * N) for N in (50, 200, 800)]
    ok = all(g1 > g2 for g1, g2 in zip(gaps, gaps[1:])) and all(
        gap <= b for gap, b in zip(gaps, bounds)
    )
    checks.append(_check("hard_edge_scaling_ratio", ratios, str(bounds), ok))
    return checks


def _suite_ode():
    checks = []
    ok_res = all(
        all(c == 0 for c in ode.exact_series_residual_piii(k, 8).coeffs)
        for k in (1, 2, 3, 5)
    )
    checks.append(_check("exact_series_residual", [1, 2, 3, 5], "zero through s^16", ok_res))
    neg = ode.exact_series_residual_piii(1, 8, perturb_c2=Fraction(1, 10**6))
    checks.append(
        _check("residual_negative_control", str(neg.coeff(4)), "nonzero at s^4",
               neg.coeff(4) != 0)
    )

    ctx = LUEContext(2, 0.5, 0.25, 0.3)
    seed = ode.pv_boundary_expansion(ctx, cutoff=8.0)
    traj = ode.integrate_sigma("pv", ctx, 1e-2, 1.0, seed)
    h = 1e-4
    Ep = finiten.e2n_determinant(ctx, 1 + h)
    Em = finiten.e2n_determinant(ctx, 1 - h)
    W_det = -ctx.N * ctx.mu + (cmath.log(Ep) - cmath.log(Em)) / (2 * h)
    diff = abs(traj.endpoint.sigma - W_det)
    checks.append(_check("pv_cross_check", diff, "1e-6", diff <= 1e-6,
                         left=_c2d(traj.endpoint.sigma), right=_c2d(W_det)))

    hctx = HardEdgeContext(2.0, 1.0, 1.0)
    series = bessel.ehard_bessel(2, 1, 48)
    tau = hardedge.HardEdgeTauSeries(k=2, series=series, provenance="bessel_oracle")
    seed3 = ode.SeriesSeed(tau, sigma_shift=hctx.mu * (hctx.mu + hctx.a) / 2.0)
    traj3 = ode.integrate_sigma("iii", hctx, 0.5, 2.0, seed3)
    E_ode = ode.ehard_from_sigma(hctx, 2.0, traj3)
    E_ref = complex(series(0.5))
    rel = abs(E_ode - E_ref) / abs(E_ref)
    checks.append(_check("iii_cross_check", rel, "1e-8", rel <= 1e-8,
                         left=_c2d(E_ode), right=_c2d(E_ref)))

    worst = max(
        abs(st.residual) / (1 + abs(st.sigma) ** 2) for st in traj.states
    )
    checks.append(_check("pv_residual_conservation", worst, "1e-8", worst <= 1e-8))
    return checks


_SUITES = {
    "series": _suite_series,
    "finite-n": _suite_finite_n,
    "jimbo": _suite_jimbo,
    "ode": _suite_ode,
}


def _cmd_verify(args):
    t0 = time.monotonic()
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        for entry in _SUITES[name]():
            entry["name"] = f"{name}.{entry['name']}"
            checks.append(entry)
    report = _report("verify", {"suite": args.suite}, {}, checks)
    lines = [
        f"[{'PASS' if c['status'] == 'ok' else 'FAIL'}] {c['name']}" for c in checks
    ]
    return _emit(report, args.json, t0, lines)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser():
    p = argparse.ArgumentParser(
        prog="painleve-rmt",
        description="Laguerre-ensemble averages via Hankel determinants and "
                    "Painleve sigma forms",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bk", help="exact constants b_k, b'_k with oracle verification")
    b.add_argument("--kmax", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.add_argument("--no-factor", action="store_true")
    b.set_defaults(func=_cmd_bk)

    e = sub.add_parser("e2n", help="finite-N average determinant and expansion")
    e.add_argument("--N", type=int, required=True)
    e.add_argument("--a", type=float, required=True)
    e.add_argument("--mu", type=float, required=True)
    e.add_argument("--xi", type=float, required=True)
    e.add_argument("--s", type=float, required=True)
    e.add_argument("--case", choices=["auto", "generic", "indeterminate", "pole"],
                   default="auto")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=_cmd_e2n)

    x = sub.add_parser("expand", help="small-s expansion terms")
    x.add_argument("target", choices=["lue", "w", "hard", "hard-sigma"])
    x.add_argument("--N", type=int)
    x.add_argument("--a", type=float, required=True)
    x.add_argument("--mu", type=float, required=True)
    x.add_argument("--xi", type=float, required=True)
    x.add_argument("--json", action="store_true")
    x.set_defaults(func=_cmd_expand)

    j = sub.add_parser("jimbo", help="tau-expansion terms and matched u")
    j.add_argument("flavor", choices=["pv", "iii"])
    j.add_argument("--N", type=int)
    j.add_argument("--a", type=float, required=True)
    j.add_argument("--mu", type=float, required=True)
    j.add_argument("--xi", type=float, required=True)
    j.add_argument("--s", type=float)
    j.add_argument("--json", action="store_true")
    j.set_defaults(func=_cmd_jimbo)

    o = sub.add_parser("ode", help="integrate a sigma form with residual monitor")
    o.add_argument("flavor", choices=["pv", "iii"])
    o.add_argument("--N", type=int)
    o.add_argument("--a", type=float, required=True)
    o.add_argument("--mu", type=float, required=True)
    o.add_argument("--xi", type=float, required=True)
    o.add_argument("--s0", type=float, default=1e-2)
    o.add_argument("--s1", type=float, required=True)
    o.add_argument("--seed-cutoff", type=float, default=8.0)
    o.add_argument("--emit", metavar="FILE.csv")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=_cmd_ode)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("suite", choices=["series", "finite-n", "jimbo", "ode", "all"])
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
