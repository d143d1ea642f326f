"""Peschl's invariant derivatives and their conversions.

``D^k f(z0)`` is ``k!`` times the ``k``-th Taylor coefficient of the
renormalized function ``g(z) = [f(T_{z0}(z)), f(z0)]``. Two triangular
formulas built on partial Bell polynomials convert between the invariant
derivatives and the ordinary ones; both are implemented here, together with
the remainder ``s_{n-1}`` that appears in

    D^n f(z0) = (1 - |z0|**2)**n f^(n)(z0) / (1 - |f(z0)|**2) + s_{n-1}(z0)
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DegeneracyError, InvalidInputError
from .schur import HyperbolicData, g_poly, is_unimodular, renormalized_series
from .taylor import TruncatedSeries, derivative_at_center

__all__ = [
    "bell_multi_indices",
    "bell_coefficient",
    "bell_partial",
    "alpha",
    "BellTable",
    "peschl_from_series",
    "peschl_from_ordinary",
    "peschl_sequence_from_ordinary",
    "ordinary_from_peschl",
    "ordinary_sequence_from_peschl",
    "s_remainder",
    "s_remainder_bell",
    "peschl_from_hyperbolic",
    "hyperbolic_from_peschl",
]


@lru_cache(maxsize=None)
def bell_multi_indices(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All ``(j_1, ..., j_{n-k+1})`` with ``sum j_i = k`` and ``sum i*j_i = n``."""
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    m = n - k + 1
    out = []

    def search(i: int, parts_left: int, weight_left: int, acc: list[int]):
        # assign j_i for i = m, m-1, ..., 1 (largest part first)
        if i == 0:
            if parts_left == 0 and weight_left == 0:
                out.append(tuple(reversed(acc)))
            return
        for j in range(min(parts_left, weight_left // i), -1, -1):
            # remaining parts must be able to absorb the remaining weight
            rest_parts, rest_weight = parts_left - j, weight_left - i * j
            if not rest_parts <= rest_weight <= rest_parts * (i - 1):
                continue
            search(i - 1, rest_parts, rest_weight, acc + [j])

    search(m, k, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def bell_coefficient(n: int, multi_index: tuple[int, ...]) -> int:
    """``n! / prod_i ((i!)**j_i * j_i!)``, an exact integer."""
    den = 1
    for i, j in enumerate(multi_index, start=1):
        den *= math.factorial(i) ** j * math.factorial(j)
    q, r = divmod(math.factorial(n), den)
    assert r == 0
    return q


def bell_partial(n: int, k: int, x: Sequence):
    """Partial exponential Bell polynomial ``A_{n,k}(x_1, ..., x_{n-k+1})``.

    Works over any numeric type; integer or :class:`~fractions.Fraction`
    arguments give exact results.
    """
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    m = n - k + 1
    if len(x) < m:
        raise InvalidInputError(f"A_{{{n},{k}}} needs {m} arguments, got {len(x)}")
    total = 0
    for idx in bell_multi_indices(n, k):
        term = bell_coefficient(n, idx)
        for xi, j in zip(x, idx):
            if j:
                term = term * xi**j
        total = total + term
    return total


def alpha(n: int, k: int) -> int:
    """``(-1)**(n-k) n! (n-1)! / (k! (k-1)! (n-k)!)`` for ``1 <= k <= n``, else 0."""
    if not 1 <= k <= n:
        return 0
    num = math.factorial(n) * math.factorial(n - 1)
    den = math.factorial(k) * math.factorial(k - 1) * math.factorial(n - k)
    q, r = divmod(num, den)
    assert r == 0
    return (-1) ** (n - k) * q


class BellTable:
    """Per-call cache of ``A_{n,k}`` over one argument list, plus ``alpha`` values."""

    def __init__(self, x: Sequence):
        self.x = list(x)
        self._bell: dict[tuple[int, int], object] = {}

    def bell(self, n: int, k: int):
        key = (n, k)
        if key not in self._bell:
            self._bell[key] = bell_partial(n, k, self.x[: n - k + 1])
        return self._bell[key]

    @staticmethod
    def alpha(n: int, k: int) -> int:
        return alpha(n, k)

    def b(self, k: int, fbar) -> object:
        """``b_k = sum_l (l!/k!) (-fbar)**(l-1) A_{k,l}(x)``."""
        return sum(
            Fraction(math.factorial(l), math.factorial(k)) * (-fbar) ** (l - 1) * self.bell(k, l)
            for l in range(1, k + 1)
        )


def _check_point(z0: complex, f0: complex) -> None:
    if not abs(z0) < 1:
        raise InvalidInputError(f"|z0| = {abs(z0)} must be < 1")
    if not abs(f0) < 1:
        raise InvalidInputError(f"|f(z0)| = {abs(f0)} must be < 1")


def peschl_from_series(f_series: TruncatedSeries, n: int | None = None) -> list[complex]:
    """``[D^1 f(z0), ..., D^n f(z0)]`` read off the renormalized series."""
    n = f_series.order if n is None else n
    g = renormalized_series(f_series)
    return [derivative_at_center(g, k) for k in range(1, n + 1)]


def peschl_sequence_from_ordinary(
    z0: complex, f0: complex, derivatives: Sequence[complex]
) -> list[complex]:
    """``[D^1, ..., D^n]`` from ``f(z0)`` and ``[f'(z0), ..., f^(n)(z0)]``.

    Each ``D^m`` is a sum of an ``alpha``-weighted combination of the
    ordinary derivatives and a Bell-polynomial correction in the lower
    ``D``'s, so the sequence is built bottom-up.
    """
    z0, f0 = complex(z0), complex(f0)
    _check_point(z0, f0)
    zbar, fbar = z0.conjugate(), f0.conjugate()
    w = 1 - abs(z0) ** 2
    v = 1 - abs(f0) ** 2
    D: list[complex] = []
    for m in range(1, len(derivatives) + 1):
        table = BellTable(D)
        val = sum(
            alpha(m, k) * zbar ** (m - k) * w**k * derivatives[k - 1] / v
            for k in range(1, m + 1)
        )
        val -= sum(
            math.factorial(k) * (-fbar) ** (k - 1) * table.bell(m, k) for k in range(2, m + 1)
        )
        D.append(complex(val))
    return D


def peschl_from_ordinary(z0: complex, f0: complex, derivatives: Sequence[complex]) -> complex:
    """``D^n f(z0)`` with ``n = len(derivatives)``."""
    if not derivatives:
        raise InvalidInputError("need at least f'(z0)")
    return peschl_sequence_from_ordinary(z0, f0, derivatives)[-1]


def ordinary_sequence_from_peschl(z0: complex, f0: complex, D: Sequence[complex]) -> list[complex]:
    """``[f'(z0), ..., f^(n)(z0)]`` from the invariant derivatives."""
    z0, f0 = complex(z0), complex(f0)
    _check_point(z0, f0)
    zbar, fbar = z0.conjugate(), f0.conjugate()
    w = 1 - abs(z0) ** 2
    v = 1 - abs(f0) ** 2
    table = BellTable([complex(d) for d in D])
    b = [table.b(k, fbar) for k in range(1, len(D) + 1)]
    out = []
    for m in range(1, len(D) + 1):
        rhs = sum(math.comb(m - 1, k - 1) * zbar ** (m - k) * b[k - 1] for k in range(1, m + 1))
        out.append(complex(rhs * math.factorial(m) * v / w**m))
    return out


def ordinary_from_peschl(z0: complex, f0: complex, D: Sequence[complex]) -> complex:
    """``f^(n)(z0)`` with ``n = len(D)``."""
    if not D:
        raise InvalidInputError("need at least D^1 f(z0)")
    return ordinary_sequence_from_peschl(z0, f0, D)[-1]


def peschl_from_hyperbolic(gammas: Sequence[complex]) -> list[complex]:
    """``D^k = k! (prod_{j<k} (1 - |gamma_j|**2) gamma_k + G_k(gamma_1..gamma_{k-1}))``.

    ``gammas = [gamma_1, ..., gamma_n]`` (the value ``gamma_0`` plays no role).
    """
    out = []
    prod = 1.0
    for k in range(1, len(gammas) + 1):
        gk = complex(gammas[k - 1])
        out.append(math.factorial(k) * (prod * gk + g_poly(gammas[: k - 1])))
        prod *= 1 - abs(gk) ** 2
    return out


def hyperbolic_from_peschl(D: Sequence[complex], H: Sequence[complex]) -> complex:
    """``H^n f`` from ``D^n f`` and the lower hyperbolic derivatives.

    ``D`` may be the full list ``[D^1, ..., D^n]`` (only the last entry is
    used) or a scalar; ``H = [H^1, ..., H^{n-1}]``.
    """
    Dn = complex(D[-1]) if isinstance(D, (list, tuple)) else complex(D)
    H = [complex(h) for h in H]
    n = len(H) + 1
    prod = 1.0
    for k, h in enumerate(H, start=1):
        if is_unimodular(h):
            raise DegeneracyError(f"|H^{k} f| = 1: f is a Blaschke product of degree {k}", k)
        prod *= 1 - abs(h) ** 2
    fact = math.factorial(n)
    return (Dn - fact * g_poly(H)) / (fact * prod)


def s_remainder_bell(z0: complex, gammas: Sequence[complex]) -> complex:
    """``s_{n-1}(z0)`` from the data ``gammas = [gamma_0, ..., gamma_{n-1}]`` alone.

    The lower ordinary derivatives ``f^(k)(z0), k < n`` are recovered from
    the invariant ones, which in turn are polynomial in the gammas.
    """
    z0 = complex(z0)
    g0 = complex(gammas[0])
    n = len(gammas)
    if n == 1:
        return 0j
    D = peschl_from_hyperbolic(gammas[1:])
    ordinary = ordinary_sequence_from_peschl(z0, g0, D)
    zbar, fbar = z0.conjugate(), g0.conjugate()
    w = 1 - abs(z0) ** 2
    v = 1 - abs(g0) ** 2
    table = BellTable(D)
    val = sum(
        alpha(n, k) * zbar ** (n - k) * w**k * ordinary[k - 1] / v for k in range(1, n)
    )
    val -= sum(math.factorial(k) * (-fbar) ** (k - 1) * table.bell(n, k) for k in range(2, n + 1))
    return complex(val)


def s_remainder(z0: complex, gammas: Sequence[complex]) -> complex:
    """``s_{n-1}(z0)`` evaluated on a reference function with the given data.

    The remainder depends only on ``z0`` and ``gammas = [gamma_0, ...,
    gamma_{n-1}]``, so any admissible ``f`` may be used; the extremal
    function with zero tail is the cheapest to build.
    """
    from .variability import ExtremalSpec, extremal_series

    gammas = [complex(g) for g in gammas]
    n = len(gammas)
    if n == 1:
        return 0j
    _check_point(z0, gammas[0])
    f = extremal_series(ExtremalSpec(HyperbolicData(z0, tuple(gammas)), 0j))
    D = peschl_from_series(f, n)
    fn = derivative_at_center(f, n)
    return D[-1] - (1 - abs(z0) ** 2) ** n * fn / (1 - abs(gammas[0]) ** 2)

