"""Brute-force verification: random admissible functions, Monte Carlo
containment and boundary checks, and randomized cross-checks between the
independent computation routes in this package.

Randomness comes from :class:`SplitMix64`, a fully specified 64-bit generator,
so a report depends only on its :class:`TrialConfig`. Trial ``i`` draws from
``SplitMix64(seed + i)``; reductions are max/min/sum only, so trial order does
not matter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass
from typing import Callable, Union

from .dieudonne import DieudonneData, dieudonne_disk, extremal_h_eval, extremal_h_series
from .errors import InvalidInputError
from .moebius import BlaschkeProduct
from .peschl import (
    ordinary_from_peschl,
    peschl_from_ordinary,
    peschl_from_series,
)
from .schur import (
    HyperbolicData,
    clustered_divided_difference,
    coefficients_from_parameters,
    hyperbolic_derivatives,
    parameters_from_coefficients,
)
from .taylor import derivative_at_center, working_order
from .variability import (
    ExtremalSpec,
    Interior,
    Tail,
    classify,
    disk_nth,
    extremal_eval,
    extremal_series,
)

__all__ = [
    "SplitMix64",
    "TrialConfig",
    "random_complex",
    "random_schur_tail",
    "random_hyperbolic_data",
    "run_containment",
    "run_roundtrips",
    "divided_difference_errors",
]

MASK64 = (1 << 64) - 1

# Divided differences converge at first order, but at steps near 0.1 the
# second-order term can still dominate for some functions; the randomized
# suite therefore halves h from 1e-2 only.
DD_STEPS = [1e-2 / 2**k for k in range(4)]


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).

    state <- state + 0x9E3779B97F4A7C15
    z <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)                  (all arithmetic mod 2**64)

    Floats use the top 53 bits: ``(x >> 11) * 2**-53``.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        return min(int(self.uniform() * k), k - 1)


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 42
    trials: int = 100
    n_max: int = 5
    z0_modulus_max: float = 0.7
    gamma_modulus_max: float = 0.8
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidInputError("trials must be >= 1")
        if self.n_max < 1:
            raise InvalidInputError("n_max must be >= 1")
        for name in ("z0_modulus_max", "gamma_modulus_max"):
            v = getattr(self, name)
            if not 0 < v < 1:
                raise InvalidInputError(f"{name} must lie in (0, 1), got {v}")

    def rng(self, trial: int, stream: int = 0) -> SplitMix64:
        # distinct suites use disjoint seed streams
        return SplitMix64(self.seed + trial + (stream << 32))


def random_complex(rng: SplitMix64, max_modulus: float) -> complex:
    """Uniform in the disk of radius ``max_modulus``."""
    r = max_modulus * math.sqrt(rng.uniform())
    return r * cmath.exp(2j * math.pi * rng.uniform())


def random_unimodular(rng: SplitMix64) -> complex:
    return cmath.exp(2j * math.pi * rng.uniform())


def random_blaschke(rng: SplitMix64, degree: int, zero_modulus: float = 0.8) -> BlaschkeProduct:
    theta = 2 * math.pi * rng.uniform()
    return BlaschkeProduct(theta, tuple(random_complex(rng, zero_modulus) for _ in range(degree)))


def random_schur_tail(rng: SplitMix64, config: TrialConfig | None = None) -> Tail:
    """Interior constant, unimodular constant or Blaschke product of degree 1-3,
    each with probability 1/3."""
    gmax = (config or TrialConfig()).gamma_modulus_max
    kind = rng.below(3)
    if kind == 0:
        return random_complex(rng, gmax)
    if kind == 1:
        return random_unimodular(rng)
    return random_blaschke(rng, 1 + rng.below(3))


def random_hyperbolic_data(rng: SplitMix64, n: int, config: TrialConfig) -> HyperbolicData:
    z0 = random_complex(rng, config.z0_modulus_max)
    return HyperbolicData(z0, tuple(random_complex(rng, config.gamma_modulus_max) for _ in range(n)))


DD_CLASS = TrialConfig(z0_modulus_max=0.5, gamma_modulus_max=0.6)


def _is_unimodular_tail(tail: Tail) -> bool:
    return not isinstance(tail, BlaschkeProduct) and abs(abs(tail) - 1) < 1e-15


def _sample_points(rng: SplitMix64, count: int = 8) -> list[complex]:
    return [random_complex(rng, 0.999) for _ in range(count)]


def run_containment(config: TrialConfig, data: Union[HyperbolicData, DieudonneData], n: int | None = None) -> dict:
    """Draw ``config.trials`` random tails and check every resulting
    ``n``-th derivative against the closed disk.

    Unimodular constant tails must land on the boundary; all others inside.
    """
    if isinstance(data, DieudonneData):
        kind = "dieudonne"
        hd = data.hyperbolic()
        n = hd.n if n is None else n
        disk = dieudonne_disk(data, n)
        if data.gammas is None:
            data = DieudonneData(data.z0, data.w0, gammas=tuple(hd.gammas[1:]))
        data = DieudonneData(data.z0, data.w0, gammas=data.gammas[: n - 1])
        hd = hd.prefix(n)

        def value(tail):
            return derivative_at_center(extremal_h_series(data, tail, working_order(n)), n)

        def pointwise(tail, z):
            return extremal_h_eval(data, z, tail)

    else:
        kind = "schwarz_pick"
        n = data.n if n is None else n
        hd = data.prefix(n)
        disk = disk_nth(hd)

        def value(tail):
            return derivative_at_center(extremal_series(ExtremalSpec(hd, tail), working_order(n)), n)

        def pointwise(tail, z):
            return extremal_eval(ExtremalSpec(hd, tail), z)

    if not isinstance(classify(hd), Interior):
        raise InvalidInputError("containment trials need interior data")

    tol = config.tolerance
    c, rho = disk.center, disk.radius
    violations = 0
    max_violation = 0.0
    max_boundary_error = 0.0
    boundary_trials = 0
    min_interior_margin = math.inf
    max_selfmap_excess = 0.0
    for i in range(config.trials):
        rng = config.rng(i)
        tail = random_schur_tail(rng, config)
        v = value(tail)
        dist = abs(v - c)
        excess = dist - rho * (1 + tol)
        if excess > 0:
            violations += 1
            max_violation = max(max_violation, excess)
        if _is_unimodular_tail(tail):
            boundary_trials += 1
            max_boundary_error = max(max_boundary_error, abs(dist / rho - 1))
        else:
            min_interior_margin = min(min_interior_margin, rho - dist)
        for z in _sample_points(rng):
            # h(z) = z f(z) is bounded by |z|, f by 1
            bound = abs(z) if kind == "dieudonne" else 1.0
            max_selfmap_excess = max(max_selfmap_excess, abs(pointwise(tail, z)) - bound)
    return {
        "kind": kind,
        "n": n,
        "center": [c.real, c.imag],
        "radius": rho,
        "trials": config.trials,
        "violations": violations,
        "max_violation": max_violation,
        "boundary_trials": boundary_trials,
        "max_boundary_error": max_boundary_error,
        "min_interior_margin": None if math.isinf(min_interior_margin) else min_interior_margin,
        "max_selfmap_excess": max(max_selfmap_excess, 0.0),
        "pass": violations == 0 and max_boundary_error <= tol and max_selfmap_excess <= 1e-12,
    }


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(b))


def divided_difference_errors(
    f: Callable[[complex], complex], z0: complex, n: int, target: complex, hs
) -> list[float]:
    """``|Delta^n f - H^n f(z0)|`` at clustered nodes for each step size in ``hs``."""
    return [abs(clustered_divided_difference(f, z0, n, h) - target) for h in hs]


def _suite(trials: int, errors: list[float], tol: float, **extra) -> dict:
    worst = max(errors) if errors else 0.0
    out = {"pass": bool(worst < tol), "trials": trials, "worst_error": worst}
    out.update(extra)
    return out


def run_roundtrips(config: TrialConfig) -> dict:
    """Randomized cross-checks between independent routes.

    Suites: Schur coefficient/parameter roundtrip, hyperbolic-derivative
    recovery from series, Peschl conversions (series vs Bell formulas and
    their mutual inverse), disk center by formula vs by series, boundary
    attainment, containment for random tails (Schwarz-Pick and Dieudonne),
    and first-order convergence of hyperbolic divided differences.
    """
    tol = config.tolerance
    T = config.trials
    n_max = config.n_max
    schur_err, hyper_err, peschl_err, inv_err = [], [], [], []
    center_err, boundary_err, contain_err, h_boundary_err, h_contain_err = [], [], [], [], []
    for i in range(T):
        rng = config.rng(i, stream=1)
        n = 1 + rng.below(min(n_max, 6))
        gam = [random_complex(rng, config.gamma_modulus_max) for _ in range(n)]
        back = parameters_from_coefficients(coefficients_from_parameters(gam)).gammas
        schur_err.append(max(abs(a - b) for a, b in zip(back, gam)))

        n = 1 + rng.below(n_max)
        data = random_hyperbolic_data(rng, n, config)
        disk = disk_nth(data)
        order = working_order(n)
        f0 = extremal_series(ExtremalSpec(data, 0j), order)
        center_err.append(_rel(derivative_at_center(f0, n), disk.center))

        eps = random_complex(rng, config.gamma_modulus_max)
        f = extremal_series(ExtremalSpec(data, eps), order)
        got = hyperbolic_derivatives(f, n).gammas
        want = list(data.gammas[1:]) + [eps]
        hyper_err.append(max(abs(a - b) for a, b in zip(got, want)))

        tail = random_schur_tail(rng, config)
        f = extremal_series(ExtremalSpec(data, tail), order)
        D = peschl_from_series(f, n)
        derivs = list(f.derivatives()[1 : n + 1])
        peschl_err.append(_rel(peschl_from_ordinary(data.z0, f.value, derivs), D[-1]))
        inv_err.append(_rel(ordinary_from_peschl(data.z0, f.value, D), derivs[-1]))
        contain_err.append(max(abs(f.derivatives()[n] - disk.center) / disk.radius - 1, 0.0))

        u = random_unimodular(rng)
        f = extremal_series(ExtremalSpec(data, u), order)
        boundary_err.append(abs(abs(derivative_at_center(f, n) - disk.center) / disk.radius - 1))

        z0 = data.z0 if abs(data.z0) > 0.05 else 0.5
        dd = DieudonneData(z0, data.gamma0 * z0, gammas=data.gammas[1:])
        hdisk = dieudonne_disk(dd)
        h = extremal_h_series(dd, u, order)
        h_boundary_err.append(abs(abs(derivative_at_center(h, n) - hdisk.center) / hdisk.radius - 1))
        h = extremal_h_series(dd, tail, order)
        h_contain_err.append(max(abs(derivative_at_center(h, n) - hdisk.center) / hdisk.radius - 1, 0.0))

    suites = {
        "schur_roundtrip": _suite(T, schur_err, tol),
        "hyperbolic_recovery": _suite(T, hyper_err, tol),
        "peschl_series_vs_bell": _suite(T, peschl_err, tol),
        "peschl_inverse": _suite(T, inv_err, tol),
        "center_consistency": _suite(T, center_err, tol),
        "boundary_attainment": _suite(T, boundary_err, tol),
        "containment": _suite(T, contain_err, tol),
        "dieudonne_boundary": _suite(T, h_boundary_err, tol),
        "dieudonne_containment": _suite(T, h_contain_err, tol),
    }

    dd_trials = max(1, min(T, 20))
    ratios = []
    for i in range(dd_trials):
        rng = config.rng(i, stream=2)
        n = 1 + rng.below(min(n_max, 3))
        data = random_hyperbolic_data(rng, n + 1, DD_CLASS)
        spec = ExtremalSpec(data, random_blaschke(rng, 2, 0.5))
        target = hyperbolic_derivatives(extremal_series(spec, working_order(n)), n).gammas[-1]
        errs = divided_difference_errors(lambda z: extremal_eval(spec, z), data.z0, n, target, DD_STEPS)
        ratios.extend(a / b for a, b in zip(errs, errs[1:]))
    suites["divided_difference"] = {
        "pass": all(1.5 <= r <= 2.5 for r in ratios),
        "trials": dd_trials,
        "worst_error": max(abs(r - 2) for r in ratios),
        "ratio_min": min(ratios),
        "ratio_max": max(ratios),
    }

    conditioning = (1 - config.z0_modulus_max**2) ** (-n_max)
    return {
        "config": asdict(config),
        "conditioning": conditioning,
        "ill_conditioned": conditioning > 1e4,
        "suites": suites,
        "pass": all(s["pass"] for s in suites.values()),
    }
