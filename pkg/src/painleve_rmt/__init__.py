"""Laguerre-ensemble averages and hard-edge limits via Painleve sigma forms.

Subpackages by capability:

* :mod:`painleve_rmt.series` -- exact rational / complex truncated power series.
* :mod:`painleve_rmt.hardedge` -- sigma-III' recurrence at integer k, the
  hard-edge tau series and the moment constants b_k, b'_k.
* :mod:`painleve_rmt.bessel` -- independent Bessel-Hankel determinant oracle.
* :mod:`painleve_rmt.finiten` -- finite-N determinant of 1F1 moments and its
  small-s expansions (generic, indeterminate and logarithmic pole cases).
* :mod:`painleve_rmt.jimbo` -- small-argument tau-function expansions for
  Painleve V and III' and the parameter matching to the ensemble averages.
* :mod:`painleve_rmt.ode` -- sigma-form residuals, exact series residual
  verification, boundary-seeded numerical integration and cross-checks.
* :mod:`painleve_rmt.cli` -- command-line interface (``painleve-rmt``).
"""

from .series import (
    Rational,
    TruncatedSeries,
    series_add,
    series_div,
    series_exp,
    series_integrate_logfree,
    series_log,
    series_mul,
    series_scale,
)
from .hardedge import (
    EtaSeries,
    HardEdgeTauSeries,
    bk_constant,
    bkprime_constant,
    ehard_series,
    eta_coefficients,
    hard_edge_normalization,
    sigma_series,
)
from .bessel import (
    ShiftedBesselSeries,
    bk_direct,
    bkprime_direct,
    ehard_bessel,
    hankel_bessel_det,
    shifted_bessel_series,
)
from .specfun import digamma_fn, gamma_fn, hyp1f1, rgamma_fn
from .finiten import (
    AsymptoticExpansion,
    CaseTag,
    LUEContext,
    e2n_determinant,
    e2n_expansion,
    hdet_expansion_check,
    kappa_weight,
    moment_wn,
    wn_expansion,
)
from .jimbo import (
    HardEdgeContext,
    JimboIIIParams,
    JimboPVParams,
    hardedge_expansion,
    hardedge_sigma_expansion,
    scaling_coefficient_ratio,
    tau_iii_expansion,
    tau_v_expansion,
    u_from_xi,
    ut_from_xi,
)
from .ode import (
    SigmaState,
    SigmaTrajectory,
    ehard_from_sigma,
    exact_series_residual_piii,
    integrate_sigma,
    iii_boundary_expansion,
    piii_residual,
    pv_boundary_expansion,
    pv_residual,
)

__version__ = "0.1.0"
