"""Variability disk of ``f^(n)(z0)`` over self-maps of the unit disk with
prescribed ``f(z0)`` and hyperbolic derivatives ``H^1 f(z0), ..., H^{n-1} f(z0)``.

For interior data every admissible ``f`` satisfies ``f^(n)(z0) = c_n + rho_n * gamma_n``
with ``gamma_n = H^n f(z0)`` ranging over the closed unit disk, so the region
of values is the closed disk of center ``c_n`` and radius ``rho_n``. The
boundary is attained exactly by the nested Moebius compositions

    f_{gamma, eps}(z) = T_{g0}(u T_{g1}(u T_{g2}( ... u T_{g_{n-1}}(eps u) ... ))),
    u = T_{-z0}(z),

with ``|eps| = 1``. Replacing ``eps`` by a Schur function ``f*(z)`` gives every
admissible ``f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import InconsistentDataError, InvalidInputError
from .moebius import BlaschkeProduct, ClosedDisk, moebius_T
from .peschl import s_remainder_bell
from .schur import HyperbolicData, g_poly, is_unimodular
from .taylor import (
    TruncatedSeries,
    bracket_series,
    derivative_at_center,
    moebius_T_neg_z0_series,
    moebius_T_series,
    working_order,
)

__all__ = [
    "Interior",
    "BlaschkeDegenerate",
    "ConstantUnimodular",
    "BranchClass",
    "ExtremalSpec",
    "classify",
    "disk_nth",
    "center_radius",
    "extremal_series",
    "extremal_eval",
    "tail_series",
    "c2_rho2_explicit",
]


@dataclass(frozen=True)
class Interior:
    label = "interior"


@dataclass(frozen=True)
class BlaschkeDegenerate:
    j: int

    @property
    def label(self) -> str:
        return f"blaschke_degenerate:{self.j}"


@dataclass(frozen=True)
class ConstantUnimodular:
    label = "constant_unimodular"


BranchClass = Union[Interior, BlaschkeDegenerate, ConstantUnimodular]

Tail = Union[complex, BlaschkeProduct]


@dataclass(frozen=True)
class ExtremalSpec:
    """Data plus the innermost Schur function: a constant ``eps`` or a Blaschke product."""

    data: HyperbolicData
    tail: Tail = 0j

    def __post_init__(self):
        if not isinstance(self.tail, BlaschkeProduct):
            eps = complex(self.tail)
            if abs(eps) > 1 + 1e-12:
                raise InvalidInputError(f"|eps| = {abs(eps)} exceeds 1")
            object.__setattr__(self, "tail", eps)


def classify(data: HyperbolicData) -> BranchClass:
    """Which case of the disk description applies to ``gamma_0, ..., gamma_{n-1}``.

    A unimodular entry forces the function (a Blaschke product, or a
    unimodular constant when it is ``gamma_0``); every later entry must then
    vanish, otherwise no admissible function exists.
    """
    g = data.gammas
    for j, gj in enumerate(g):
        if is_unimodular(gj):
            rest = [k for k in range(j + 1, len(g)) if g[k] != 0]
            if rest:
                raise InconsistentDataError(
                    f"|gamma_{j}| = 1 forces gamma_{rest[0]} = 0, got {g[rest[0]]!r}"
                )
            return ConstantUnimodular() if j == 0 else BlaschkeDegenerate(j)
    return Interior()


def center_radius(z0: complex, gammas) -> tuple[complex, float]:
    """``(c_n, rho_n)`` for ``gammas = [gamma_0, ..., gamma_{n-1}]``; no branch checks.

    ``n = 0`` (empty data) gives ``(0, 1)`` so that ``c_0 + rho_0 gamma_0 = f(z0)``.
    """
    n = len(gammas)
    if n == 0:
        return 0j, 1.0
    z0 = complex(z0)
    w = 1 - abs(z0) ** 2
    v = 1 - abs(gammas[0]) ** 2
    fact = math.factorial(n)
    rho = fact / w**n
    for g in gammas:
        rho *= 1 - abs(g) ** 2
    if v == 0:
        return 0j, 0.0
    c = v / w**n * (fact * g_poly(gammas[1:]) - s_remainder_bell(z0, gammas))
    return complex(c), max(rho, 0.0)


def disk_nth(data: HyperbolicData, n: int | None = None) -> ClosedDisk:
    """Closed disk of possible values of ``f^(n)(z0)``.

    ``n`` defaults to ``len(data.gammas)``; a smaller ``n`` uses the prefix
    ``gamma_0 .. gamma_{n-1}``. Degenerate data give a radius-0 disk.
    """
    data = data if n is None else data.prefix(n)
    branch = classify(data)
    if isinstance(branch, ConstantUnimodular):
        return ClosedDisk(0j, 0.0)
    c, rho = center_radius(data.z0, data.gammas)
    if isinstance(branch, BlaschkeDegenerate):
        rho = 0.0
    return ClosedDisk(c, rho)


def c2_rho2_explicit(z0: complex, gamma0: complex, gamma1: complex) -> ClosedDisk:
    """Closed-form center and radius for ``f''(z0)``."""
    z0, gamma0, gamma1 = complex(z0), complex(gamma0), complex(gamma1)
    w2 = (1 - abs(z0) ** 2) ** 2
    v = 1 - abs(gamma0) ** 2
    c = 2 * v / w2 * (z0.conjugate() - gamma0.conjugate() * gamma1) * gamma1
    rho = 2 * v * (1 - abs(gamma1) ** 2) / w2
    return ClosedDisk(c, max(rho, 0.0))


def _nesting(data: HyperbolicData, tail: Tail) -> tuple[list[complex], Tail]:
    """Parameters to nest and the innermost function, after branch collapse."""
    branch = classify(data)
    g = list(data.gammas)
    if isinstance(branch, ConstantUnimodular):
        return [], g[0]
    if isinstance(branch, BlaschkeDegenerate):
        # T_{g_j}(anything) == g_j when |g_j| = 1
        return g[: branch.j], g[branch.j]
    return g, tail


def tail_series(tail: Tail, order: int, center: complex) -> TruncatedSeries:
    if isinstance(tail, BlaschkeProduct):
        z = TruncatedSeries.variable(order, center)
        out = TruncatedSeries.constant(tail.rotation, order, center)
        for zj in tail.zeros:
            out = out * bracket_series(z, zj)
        return out
    return TruncatedSeries.constant(tail, order, center)


def extremal_series(spec: ExtremalSpec, order: int | None = None) -> TruncatedSeries:
    """Taylor series about ``z0`` of the nested function with the given tail."""
    data = spec.data
    order = working_order(data.n) if order is None else order
    params, tail = _nesting(data, spec.tail)
    z0 = data.z0
    phi = tail_series(tail, order, z0)
    if not params:
        return phi
    u = moebius_T_neg_z0_series(z0, order)
    for g in reversed(params[1:]):
        phi = moebius_T_series(g, u * phi)
    return moebius_T_series(params[0], u * phi)


def extremal_eval(spec: ExtremalSpec, z: complex) -> complex:
    """Pointwise value of the nested function, independent of the series engine."""
    data = spec.data
    params, tail = _nesting(data, spec.tail)
    phi = tail(z) if isinstance(tail, BlaschkeProduct) else tail
    if not params:
        return phi
    u = moebius_T(-data.z0, z)
    for g in reversed(params[1:]):
        phi = moebius_T(g, u * phi)
    return moebius_T(params[0], u * phi)


def nth_derivative(spec: ExtremalSpec, n: int | None = None) -> complex:
    n = spec.data.n if n is None else n
    return derivative_at_center(extremal_series(spec, working_order(n)), n)
