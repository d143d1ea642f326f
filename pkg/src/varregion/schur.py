"""Schur parameters and hyperbolic derivatives.

For ``g(z) = a_1 z + a_2 z**2 + ...`` mapping the disk into itself with
``g(0) = 0`` and hyperbolic derivatives ``H^k g(0) = gamma_k``, the Taylor
coefficients are polynomials in the gammas (and their conjugates):

    a_n = F_n(gamma_1, ..., gamma_n)
        = prod_{k<n} (1 - |gamma_k|**2) * gamma_n + G_n(gamma_1, ..., gamma_{n-1})

:func:`f_poly` evaluates ``F_n`` by its three-term recurrence,
:func:`g_poly` is the ``gamma_n = 0`` slice, and the two conversion routines
move between coefficients and parameters. The hyperbolic derivatives of a
general ``f`` at ``z0`` are those of the renormalized function
``g(z) = [f(T_{z0}(z)), f(z0)]`` at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    InconsistentDataError,
    InvalidInputError,
    ModulusOutOfRangeError,
    SeriesAlignmentError,
)
from .moebius import INFINITY, Infinity, bracket
from .taylor import (
    TruncatedSeries,
    bracket_series,
    moebius_T_series,
    series_compose,
)

__all__ = [
    "UNIT_TOL",
    "INCONSISTENT_TOL",
    "HyperbolicData",
    "SchurPolynomialTable",
    "SchurParameters",
    "f_poly",
    "g_poly",
    "coefficients_from_parameters",
    "parameters_from_coefficients",
    "renormalized_series",
    "hyperbolic_derivatives",
    "divided_difference",
    "clustered_divided_difference",
]

# |gamma| >= 1 - UNIT_TOL counts as unimodular
UNIT_TOL = 1e-10
INCONSISTENT_TOL = 1e-8


def is_unimodular(g: complex) -> bool:
    return abs(g) >= 1 - UNIT_TOL


@dataclass(frozen=True)
class HyperbolicData:
    """Value and hyperbolic derivatives prescribed at ``z0``.

    ``gammas[0]`` is ``f(z0)`` and ``gammas[k]`` is ``H^k f(z0)``, so the data
    constrains ``f^(n)(z0)`` for ``n = len(gammas)``.
    """

    z0: complex
    gammas: tuple[complex, ...]

    def __post_init__(self):
        gammas = tuple(complex(g) for g in self.gammas)
        if not gammas:
            raise InvalidInputError("at least gamma_0 = f(z0) is required")
        z0 = complex(self.z0)
        if not abs(z0) < 1:
            raise ModulusOutOfRangeError(f"|z0| = {abs(z0)} must be < 1")
        for k, g in enumerate(gammas):
            if abs(g) > 1 + INCONSISTENT_TOL:
                raise ModulusOutOfRangeError(f"|gamma_{k}| = {abs(g)} exceeds 1")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "gammas", gammas)

    @property
    def n(self) -> int:
        return len(self.gammas)

    @property
    def gamma0(self) -> complex:
        return self.gammas[0]

    def prefix(self, n: int) -> "HyperbolicData":
        """Data constraining ``f^(n)``: ``gamma_0 .. gamma_{n-1}``."""
        if n < 1 or n > self.n:
            raise InvalidInputError(f"need 1 <= n <= {self.n}, got {n}")
        return HyperbolicData(self.z0, self.gammas[:n])


class SchurPolynomialTable:
    """Memo of ``F_k(gamma_i, ..., gamma_{i+k-1})`` keyed by ``(i, k)``.

    Indices are 0-based into ``gammas``. The recurrence consumes shifted
    windows, so caching by window turns the exponential recursion into
    ``O(n**2)`` table entries.
    """

    def __init__(self, gammas: Sequence[complex]):
        self.gammas = [complex(g) for g in gammas]
        self.memo: dict[tuple[int, int], complex] = {}

    def __call__(self, start: int, length: int) -> complex:
        key = (start, length)
        if key in self.memo:
            return self.memo[key]
        g = self.gammas
        if length < 1 or start + length > len(g):
            raise IndexError(f"window ({start}, {length}) outside {len(g)} parameters")
        if length == 1:
            val = g[start]
        else:
            g1 = g[start]
            val = (1 - abs(g1) ** 2) * self(start + 1, length - 1)
            acc = 0j
            for k in range(2, length):
                acc += self(start + 1, length - k) * self(start, k)
            val -= g1.conjugate() * acc
        self.memo[key] = val
        return val


def f_poly(gammas: Sequence[complex]) -> complex:
    """``F_n(gamma_1, ..., gamma_n)`` with ``n = len(gammas)``."""
    if len(gammas) == 0:
        raise InvalidInputError("F_n needs at least one argument")
    return SchurPolynomialTable(gammas)(0, len(gammas))


def g_poly(gammas: Sequence[complex]) -> complex:
    """``G_n(gamma_1, ..., gamma_{n-1})``, the part of ``F_n`` free of ``gamma_n``.

    ``F_n`` is affine in ``gamma_n``, so ``G_n = F_n(gamma_1, ..., gamma_{n-1}, 0)``.
    ``G_1 = 0``.
    """
    return f_poly(list(gammas) + [0j])


def coefficients_from_parameters(gammas: Sequence[complex]) -> list[complex]:
    """``[a_1, ..., a_n]`` with ``a_k = F_k(gamma_1, ..., gamma_k)``."""
    table = SchurPolynomialTable(gammas)
    return [table(0, k) for k in range(1, len(gammas) + 1)]


@dataclass
class SchurParameters:
    """Hyperbolic derivatives ``gamma_1 .. gamma_n`` with a degeneracy marker.

    When ``degenerate_at = j`` the function is a Blaschke product of degree
    ``j``: ``|gamma_j| = 1`` and the later entries are reported as 0.
    """

    gammas: list[complex]
    degenerate_at: int | None = None

    def to_json(self) -> dict:
        return {
            "gammas": [[g.real, g.imag] for g in self.gammas],
            "degenerate_at": self.degenerate_at,
        }


def parameters_from_coefficients(coeffs: Sequence[complex]) -> SchurParameters:
    """Invert ``a_k = F_k(gamma_1..gamma_k)`` one index at a time.

    Raises :class:`InconsistentDataError` if some ``|gamma_j|`` exceeds 1,
    which means the coefficients cannot come from a self-map of the disk.
    """
    a = [complex(c) for c in coeffs]
    if not a:
        raise InvalidInputError("need at least a_1")
    gammas: list[complex] = []
    prod = 1.0
    for k, ak in enumerate(a, start=1):
        gk = (ak - g_poly(gammas)) / prod
        if abs(gk) > 1 + INCONSISTENT_TOL:
            raise InconsistentDataError(
                f"|gamma_{k}| = {abs(gk):.12g} > 1: coefficients are not those of a self-map"
            )
        gammas.append(gk)
        if is_unimodular(gk):
            gammas.extend([0j] * (len(a) - k))
            return SchurParameters(gammas, degenerate_at=k)
        prod *= 1 - abs(gk) ** 2
    return SchurParameters(gammas)


def renormalized_series(f_series: TruncatedSeries) -> TruncatedSeries:
    """Series at 0 of ``g(z) = [f(T_{z0}(z)), f(z0)]`` where ``z0 = f_series.center``."""
    z0 = f_series.center
    N = f_series.order
    t = moebius_T_series(z0, TruncatedSeries.displacement(N, 0j))
    inner = t - z0
    fz0 = f_series.value
    if not abs(fz0) < 1:
        raise InvalidInputError(f"|f(z0)| = {abs(fz0)} must be < 1")
    return bracket_series(series_compose(f_series, inner), fz0)


def hyperbolic_derivatives(f_series: TruncatedSeries, n: int) -> SchurParameters:
    """``H^1 f(z0), ..., H^n f(z0)`` from a Taylor series of ``f`` about ``z0``."""
    if n < 1:
        raise InvalidInputError("n must be >= 1")
    if f_series.order < n:
        raise SeriesAlignmentError(f"series order {f_series.order} < n = {n}")
    g = renormalized_series(f_series)
    return parameters_from_coefficients(g.coeffs[1 : n + 1])


def divided_difference(
    f: Callable[[complex], complex], z: complex, nodes: Sequence[complex]
) -> complex | Infinity:
    """Hyperbolic divided difference ``Delta^j f(z; z_{j-1}, ..., z_0)``.

    ``nodes = [z_0, ..., z_{j-1}]`` in the order the operators are applied:
    ``Delta^j = Delta_{z_{j-1}} o ... o Delta_{z_0}``.
    """
    nodes = [complex(w) for w in nodes]
    pts = nodes + [complex(z)]
    for i in range(len(pts)):
        for j in range(i):
            if pts[i] == pts[j]:
                raise InvalidInputError(f"divided difference nodes must be distinct: {pts[i]!r}")

    cache: dict[tuple[complex, int], complex | Infinity] = {}

    def dd(w: complex, depth: int):
        key = (w, depth)
        if key in cache:
            return cache[key]
        if depth == 0:
            val = f(w)
        else:
            node = nodes[depth - 1]
            top_a = dd(w, depth - 1)
            top_b = dd(node, depth - 1)
            if top_a is INFINITY or top_b is INFINITY:
                val = INFINITY
            else:
                num = bracket(top_a, top_b)
                den = bracket(w, node)
                val = INFINITY if num is INFINITY or den is INFINITY else num / den
        cache[key] = val
        return val

    return dd(complex(z), len(nodes))


def clustered_divided_difference(
    f: Callable[[complex], complex], z0: complex, n: int, h: float
) -> complex | Infinity:
    """``Delta^n f`` with every node and the evaluation point at distance ``h`` from ``z0``.

    Directions fan out over a quarter circle so the displacements do not
    cancel; the result approximates ``H^n f(z0)`` with an ``O(h)`` error.
    """
    dirs = np.exp(1j * np.linspace(0.0, np.pi / 2, n + 1))
    pts = [complex(z0 + h * d) for d in dirs]
    return divided_difference(f, pts[-1], pts[:-1])
