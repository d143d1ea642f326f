"""Variability regions for the n-th derivative of bounded analytic functions.

The main entry points are :func:`disk_nth` (Schwarz-Pick type disk for
``f^(n)(z0)``), :func:`dieudonne_disk` (the same for maps fixing the origin)
and the extremal-function builders. :mod:`varregion.oracle` cross-checks all
of them by brute force.
"""

__version__ = "0.1.0"

from .dieudonne import (
    DieudonneData,
    dieudonne_disk,
    extremal_h_series,
    gamma_from_w,
    w_from_gamma,
)
from .errors import (
    DegeneracyError,
    InconsistentDataError,
    InfeasibleError,
    InvalidInputError,
    ModulusOutOfRangeError,
    NumericalError,
    VarRegionError,
)
from .moebius import INFINITY, BlaschkeProduct, ClosedDisk, blaschke_eval, bracket, moebius_T
from .peschl import (
    alpha,
    bell_partial,
    hyperbolic_from_peschl,
    ordinary_from_peschl,
    peschl_from_ordinary,
    peschl_from_series,
    s_remainder,
)
from .schur import (
    HyperbolicData,
    coefficients_from_parameters,
    divided_difference,
    f_poly,
    g_poly,
    hyperbolic_derivatives,
    parameters_from_coefficients,
)
from .taylor import TruncatedSeries, derivative_at_center
from .variability import (
    BlaschkeDegenerate,
    ConstantUnimodular,
    ExtremalSpec,
    Interior,
    c2_rho2_explicit,
    classify,
    disk_nth,
    extremal_eval,
    extremal_series,
)
