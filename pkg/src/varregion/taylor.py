"""Truncated complex Taylor series.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of

    f(z) = c_0 + c_1 (z - center) + ... + c_N (z - center)**N + O((z - center)**(N+1))

Arithmetic between two series requires the same center and the same order;
nothing is realigned implicitly. Changing the expansion point is always an
explicit :func:`series_compose` with a shifted inner series.

Every coefficient of a sum, product, quotient or composition is exact through
order ``N`` (up to floating point rounding), so ``k! * c_k`` is the ``k``-th
derivative at the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import SeriesAlignmentError, SeriesDivisionError

__all__ = [
    "DIV_FLOOR",
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_div",
    "series_compose",
    "moebius_T_series",
    "bracket_series",
    "moebius_T_neg_z0_series",
    "derivative_at_center",
    "working_order",
]

DIV_FLOOR = 1e-12
GUARD_TERMS = 2


def working_order(n: int) -> int:
    """Truncation order used when derivatives through ``n`` are needed."""
    return n + GUARD_TERMS


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    center: complex
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise SeriesAlignmentError("a truncated series needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "center", complex(self.center))

    # constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: complex, order: int, center: complex = 0j) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(center, c)

    @classmethod
    def zero(cls, order: int, center: complex = 0j) -> "TruncatedSeries":
        return cls.constant(0, order, center)

    @classmethod
    def variable(cls, order: int, center: complex = 0j) -> "TruncatedSeries":
        """The series of ``z`` itself: ``center + (z - center)``."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = center
        if order >= 1:
            c[1] = 1
        return cls(center, c)

    @classmethod
    def displacement(cls, order: int, center: complex = 0j) -> "TruncatedSeries":
        """The series of ``z - center``."""
        c = np.zeros(order + 1, dtype=complex)
        if order >= 1:
            c[1] = 1
        return cls(center, c)

    # properties ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @property
    def value(self) -> complex:
        """Value at the center."""
        return complex(self.coeffs[0])

    def derivatives(self) -> np.ndarray:
        """``[f(center), f'(center), ..., f^(N)(center)]``."""
        fact = np.array([math.factorial(k) for k in range(self.order + 1)], dtype=float)
        return self.coeffs * fact

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesAlignmentError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.center, self.coeffs[: order + 1])

    def conj_coeffs(self) -> np.ndarray:
        return np.conj(self.coeffs)

    def __call__(self, z: complex) -> complex:
        """Evaluate the truncated polynomial at ``z`` (Horner)."""
        x = z - self.center
        out = 0j
        for c in self.coeffs[::-1]:
            out = out * x + c
        return out

    def to_json(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        re, im = obj["center"]
        return cls(complex(re, im), [complex(a, b) for a, b in obj["coeffs"]])

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        return (
            self.order == other.order
            and abs(self.center - other.center) <= atol
            and bool(np.allclose(self.coeffs, other.coeffs, rtol=0, atol=atol))
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries(center={self.center!r}, coeffs={self.coeffs.tolist()!r})"

    # operators ----------------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries.constant(other, self.order, self.center)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_sub(other, self)

    def __neg__(self):
        return TruncatedSeries(self.center, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self.center, self.coeffs * other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return TruncatedSeries(self.center, self.coeffs / other)
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is NotImplemented else series_div(other, self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = TruncatedSeries.constant(1, self.order, self.center)
        for _ in range(k):
            out = series_mul(out, self)
        return out


def _check_aligned(s1: TruncatedSeries, s2: TruncatedSeries) -> None:
    if s1.center != s2.center:
        raise SeriesAlignmentError(f"series centers differ: {s1.center!r} vs {s2.center!r}")
    if s1.order != s2.order:
        raise SeriesAlignmentError(f"series orders differ: {s1.order} vs {s2.order}")


def series_add(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    _check_aligned(s1, s2)
    return TruncatedSeries(s1.center, s1.coeffs + s2.coeffs)


def series_sub(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    _check_aligned(s1, s2)
    return TruncatedSeries(s1.center, s1.coeffs - s2.coeffs)


def series_mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_aligned(s1, s2)
    n = s1.order + 1
    return TruncatedSeries(s1.center, np.convolve(s1.coeffs, s2.coeffs)[:n])


def series_div(s1: TruncatedSeries, s2: TruncatedSeries, floor: float = DIV_FLOOR) -> TruncatedSeries:
    """Return ``T`` with ``s2 * T == s1`` through the common order."""
    _check_aligned(s1, s2)
    b = s2.coeffs
    if abs(b[0]) <= floor:
        raise SeriesDivisionError(abs(b[0]))
    a = s1.coeffs
    q = np.zeros_like(a)
    for k in range(a.size):
        # b[1:k+1] . q[k-1::-1]
        acc = a[k] - np.dot(b[1 : k + 1], q[:k][::-1])
        q[k] = acc / b[0]
    return TruncatedSeries(s1.center, q)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Series of ``outer(phi(z))`` about ``inner.center``.

    ``inner`` holds the displacement ``phi(z) - outer.center``, so its constant
    term must vanish. The result is centered where ``inner`` is centered.
    """
    if outer.order != inner.order:
        raise SeriesAlignmentError(f"series orders differ: {outer.order} vs {inner.order}")
    if abs(inner.coeffs[0]) > 1e-14:
        raise SeriesAlignmentError(
            f"inner series must have zero constant term, got {inner.coeffs[0]!r}"
        )
    inner = TruncatedSeries(inner.center, np.concatenate(([0j], inner.coeffs[1:])))
    out = TruncatedSeries.constant(outer.coeffs[-1], inner.order, inner.center)
    for c in outer.coeffs[-2::-1]:
        out = series_mul(out, inner) + c
    return out


def moebius_T_series(a: complex, s: TruncatedSeries) -> TruncatedSeries:
    """``T_a(s) = (s + a) / (1 + conj(a) s)``."""
    a = complex(a)
    return series_div(s + a, 1 + a.conjugate() * s)


def bracket_series(s: TruncatedSeries, w: complex) -> TruncatedSeries:
    """``[s, w] = (s - w) / (1 - conj(w) s)``; equal to ``T_{-w}(s)``."""
    return moebius_T_series(-complex(w), s)


def moebius_T_neg_z0_series(z0: complex, order: int) -> TruncatedSeries:
    """Series of ``T_{-z0}(z) = (z - z0) / (1 - conj(z0) z)`` about ``z0``."""
    return bracket_series(TruncatedSeries.variable(order, z0), z0)


def derivative_at_center(s: TruncatedSeries, k: int) -> complex:
    if k < 0 or k > s.order:
        raise SeriesAlignmentError(f"derivative order {k} exceeds series order {s.order}")
    return complex(s.coeffs[k]) * math.factorial(k)


def series_from_derivatives(center: complex, derivatives: Sequence[complex]) -> TruncatedSeries:
    return TruncatedSeries(
        center, [d / math.factorial(k) for k, d in enumerate(derivatives)]
    )
