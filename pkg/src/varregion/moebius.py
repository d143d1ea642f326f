"""Unit-disk geometry: the pseudo-hyperbolic bracket, the automorphisms
``T_a``, closed disks and finite Blaschke products."""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInputError, ModulusOutOfRangeError, PoleError

__all__ = [
    "INFINITY",
    "POLE_FLOOR",
    "Infinity",
    "ClosedDisk",
    "BlaschkeProduct",
    "bracket",
    "moebius_T",
    "blaschke_eval",
]

POLE_FLOOR = 1e-300


class Infinity:
    """Tagged point at infinity returned by :func:`bracket`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __bool__(self) -> bool:
        return True


INFINITY = Infinity()


def bracket(z: complex, w: complex) -> complex | Infinity:
    """Return ``[z, w] = (z - w) / (1 - conj(w) z)``.

    The value :data:`INFINITY` is returned (not raised) when ``z * conj(w)``
    equals -1, i.e. when the denominator falls below :data:`POLE_FLOOR`.
    """
    den = 1 - complex(w).conjugate() * z
    if abs(den) < POLE_FLOOR:
        return INFINITY
    return (z - w) / den


def moebius_T(a: complex, z: complex) -> complex:
    """Disk automorphism ``T_a(z) = (z + a) / (1 + conj(a) z)``; ``T_a(0) = a``."""
    den = 1 + complex(a).conjugate() * z
    if abs(den) < POLE_FLOOR:
        raise PoleError(f"T_a has a pole at z = {z!r} for a = {a!r}")
    return (z + a) / den


@dataclass(frozen=True)
class ClosedDisk:
    """Closed disk ``{w : |w - center| <= radius}``; radius 0 is a single point."""

    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius >= 0:
            raise InvalidInputError(f"disk radius must be nonnegative, got {self.radius}")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    def contains(self, w: complex, rel_tol: float = 0.0, abs_tol: float = 0.0) -> bool:
        return abs(w - self.center) <= self.radius * (1 + rel_tol) + abs_tol

    def signed_distance(self, w: complex) -> float:
        """Positive outside the disk, negative inside."""
        return abs(w - self.center) - self.radius

    @property
    def is_point(self) -> bool:
        return self.radius == 0.0


@dataclass(frozen=True)
class BlaschkeProduct:
    """``B(z) = exp(i theta) * prod_j [z, z_j]``.

    The rotation is kept as an angle so the unimodular factor is exact.
    """

    theta: float = 0.0
    zeros: tuple[complex, ...] = field(default_factory=tuple)

    def __post_init__(self):
        zeros = tuple(complex(z) for z in self.zeros)
        for z in zeros:
            if not abs(z) < 1:
                raise ModulusOutOfRangeError(f"Blaschke zero {z!r} is not inside the unit disk")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "theta", float(self.theta))

    @property
    def degree(self) -> int:
        return len(self.zeros)

    @property
    def rotation(self) -> complex:
        return cmath.exp(1j * self.theta)

    def __call__(self, z: complex) -> complex:
        return blaschke_eval(self, z)


def blaschke_eval(B: BlaschkeProduct, z: complex) -> complex:
    if abs(z) > 1 + 1e-15:
        raise InvalidInputError(f"Blaschke products are evaluated on the closed disk, got |z| = {abs(z)}")
    out = B.rotation
    for zj in B.zeros:
        out *= bracket(z, zj)
    return out


def as_complex_list(values: Sequence) -> list[complex]:
    return [complex(v) for v in values]
