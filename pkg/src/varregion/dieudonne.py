"""Higher-order Dieudonne lemma: self-maps ``h`` of the disk with ``h(0) = 0``.

Writing ``h(z) = z f(z)`` turns the problem into the Schwarz-Pick one for
``f`` with ``f(z0) = w0 / z0``, and

    h^(k)(z0) = k f^(k-1)(z0) + z0 f^(k)(z0).

Hence ``h^(n)(z0)`` ranges over the disk of center
``c'_n = n (c_{n-1} + rho_{n-1} gamma_{n-1}) + z0 c_n`` and radius
``rho'_n = |z0| rho_n``.

The radius at ``n = 1`` is ``(r**2 - s**2) / (r (1 - r**2))`` with
``r = |z0|``, ``s = |w0|``. This is the classical Dieudonne bound; the
variant with ``1 - s**2`` in the denominator is too small (the extremal
``z T_{-z0}(z)`` at ``z0 = 0.5`` already reaches ``|h'(z0)| = 2/3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleError, InvalidInputError
from .moebius import ClosedDisk
from .schur import HyperbolicData, UNIT_TOL
from .taylor import TruncatedSeries, working_order
from .variability import (
    BlaschkeDegenerate,
    ConstantUnimodular,
    ExtremalSpec,
    Tail,
    center_radius,
    classify,
    extremal_eval,
    extremal_series,
)

__all__ = [
    "DieudonneData",
    "GammaChain",
    "dieudonne_disk",
    "center_radius_h",
    "w_from_gamma",
    "gamma_from_w",
    "extremal_h_series",
    "extremal_h_eval",
]


@dataclass(frozen=True)
class DieudonneData:
    """``h(z0) = w0`` plus either the hyperbolic data ``gammas = (gamma_1, ...)``
    of ``f = h / z`` or the ordinary derivatives ``ws = (w_1, ...)`` of ``h``."""

    z0: complex
    w0: complex
    gammas: tuple[complex, ...] | None = None
    ws: tuple[complex, ...] | None = None

    def __post_init__(self):
        z0, w0 = complex(self.z0), complex(self.w0)
        if z0 == 0:
            raise InvalidInputError("z0 = 0 is excluded: the normalization divides by z0")
        if not abs(z0) < 1:
            raise InvalidInputError(f"|z0| = {abs(z0)} must be < 1")
        if not abs(w0) < abs(z0):
            raise InvalidInputError(
                f"need |w0| < |z0| (Schwarz lemma), got |w0| = {abs(w0)}, |z0| = {abs(z0)}"
            )
        if self.gammas is not None and self.ws is not None:
            raise InvalidInputError("give either gammas or ws, not both")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "w0", w0)
        for name in ("gammas", "ws"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, tuple(complex(v) for v in val))

    @property
    def r(self) -> float:
        return abs(self.z0)

    @property
    def s(self) -> float:
        return abs(self.w0)

    @property
    def gamma0(self) -> complex:
        return self.w0 / self.z0

    def hyperbolic(self) -> HyperbolicData:
        """Data ``(gamma_0, gamma_1, ...)`` for ``f = h / z``."""
        gammas = self.gammas if self.gammas is not None else tuple(gamma_from_w(self).gammas)
        return HyperbolicData(self.z0, (self.gamma0,) + gammas)


def center_radius_h(z0: complex, gammas: Sequence[complex]) -> tuple[complex, float]:
    """``(c'_n, rho'_n)`` for ``gammas = [gamma_0, ..., gamma_{n-1}]``, no branch checks."""
    n = len(gammas)
    c_prev, rho_prev = center_radius(z0, gammas[: n - 1])
    c_n, rho_n = center_radius(z0, gammas)
    c = n * (c_prev + rho_prev * gammas[n - 1]) + z0 * c_n
    return c, abs(z0) * rho_n


def dieudonne_disk(data: DieudonneData, n: int | None = None) -> ClosedDisk:
    """Closed disk of possible values of ``h^(n)(z0)``."""
    hd = data.hyperbolic()
    n = hd.n if n is None else n
    hd = hd.prefix(n)
    branch = classify(hd)
    c, rho = center_radius_h(hd.z0, hd.gammas)
    if isinstance(branch, (BlaschkeDegenerate, ConstantUnimodular)):
        rho = 0.0
    return ClosedDisk(c, rho)


@dataclass
class GammaChain:
    """Result of converting prescribed ``w_k`` into ``gamma_k``."""

    gammas: list[complex]
    degenerate_at: int | None = None


def w_from_gamma(data: DieudonneData) -> list[complex]:
    """``[w_1, ..., w_{n-1}]`` with ``w_k = c'_k + rho'_k (z0 / r) gamma_k``."""
    if data.gammas is None:
        raise InvalidInputError("w_from_gamma needs gammas")
    g = (data.gamma0,) + data.gammas
    HyperbolicData(data.z0, g)  # modulus validation
    rot = data.z0 / data.r
    out = []
    for k in range(1, len(g)):
        c, rho = center_radius_h(data.z0, g[:k])
        out.append(c + rho * rot * g[k])
    return out


def gamma_from_w(data: DieudonneData, tol: float = 1e-10) -> GammaChain:
    """Recover ``gamma_1, ...`` from ``w_1, ...`` one index at a time.

    Raises :class:`InfeasibleError` when some ``w_k`` lies outside its disk.
    A ``w_k`` on the boundary gives ``|gamma_k| = 1``; every later ``w`` is then
    forced to the (radius 0) center and its gamma is reported as 0.
    """
    if data.ws is None:
        raise InvalidInputError("gamma_from_w needs ws")
    g = [data.gamma0]
    rot = data.z0 / data.r
    degenerate_at = None
    for k, wk in enumerate(data.ws, start=1):
        c, rho = center_radius_h(data.z0, g)
        dist = abs(wk - c)
        if degenerate_at is not None:
            if dist > tol * max(1.0, abs(c)):
                raise InfeasibleError(
                    f"w_{k} must equal {c!r} after the degenerate index {degenerate_at}",
                    k,
                    dist,
                )
            g.append(0j)
            continue
        if dist > rho * (1 + tol):
            raise InfeasibleError(
                f"w_{k} lies outside the disk of center {c!r} and radius {rho!r}", k, dist - rho
            )
        gk = (wk - c) / (rho * rot)
        if abs(gk) >= 1 - UNIT_TOL:
            gk /= abs(gk)
            degenerate_at = k
        g.append(gk)
    return GammaChain(g[1:], degenerate_at)


def _spec(data: DieudonneData, tail: Tail) -> ExtremalSpec:
    return ExtremalSpec(data.hyperbolic(), tail)


def extremal_h_series(data: DieudonneData, tail: Tail = 0j, order: int | None = None) -> TruncatedSeries:
    """Series about ``z0`` of ``h(z) = z f(z)`` for the nested ``f`` with this tail."""
    spec = _spec(data, tail)
    order = working_order(spec.data.n) if order is None else order
    f = extremal_series(spec, order)
    return TruncatedSeries.variable(order, data.z0) * f


def extremal_h_eval(data: DieudonneData, z: complex, tail: Tail = 0j) -> complex:
    return z * extremal_eval(_spec(data, tail), z)
