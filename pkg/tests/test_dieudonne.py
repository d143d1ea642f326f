import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from varregion.dieudonne import (
    DieudonneData,
    dieudonne_disk,
    extremal_h_eval,
    extremal_h_series,
    gamma_from_w,
    w_from_gamma,
)
from varregion.errors import InfeasibleError, InvalidInputError
from varregion.moebius import BlaschkeProduct
from varregion.taylor import TruncatedSeries
from varregion.variability import ExtremalSpec, extremal_series

from conftest import rand_disk


def random_data(rng, n):
    z0 = rand_disk(rng, 0.7)
    while abs(z0) < 0.05:
        z0 = rand_disk(rng, 0.7)
    w0 = z0 * rand_disk(rng, 0.8)
    return DieudonneData(z0, w0, gammas=tuple(rand_disk(rng, 0.8, n - 1)))


def test_first_order_radius_at_one_half():
    d = dieudonne_disk(DieudonneData(0.5, 0, gammas=()))
    assert d.center == 0
    assert abs(d.radius - 2 / 3) < 1e-12
    # h(z) = z (z - 1/2) / (1 - z/2) reaches the boundary
    h = TruncatedSeries.variable(2, 0.5) * extremal_series(ExtremalSpec(DieudonneData(0.5, 0, gammas=()).hyperbolic(), 1.0), 2)
    assert abs(abs(h.coeffs[1]) - 2 / 3) < 1e-12


def test_first_order_disk(rng):
    for _ in range(100):
        data = random_data(rng, 1)
        r, s = data.r, data.s
        d = dieudonne_disk(data)
        assert abs(d.center - data.w0 / data.z0) < 1e-12
        assert abs(d.radius - (r * r - s * s) / (r * (1 - r * r))) < 1e-12


def test_second_order_closed_form(rng):
    for _ in range(200):
        data = random_data(rng, 2)
        z0, w0, (g1,) = data.z0, data.w0, data.gammas
        r, s = data.r, data.s
        c = 2 * (r * r - s * s) / (r * r * (1 - r * r) ** 2) * g1 * (1 - z0 * w0.conjugate() * g1 / z0.conjugate())
        rho = 2 * (r * r - s * s) / (r * (1 - r * r) ** 2) * (1 - abs(g1) ** 2)
        d = dieudonne_disk(data)
        assert abs(d.center - c) < 1e-9 * max(1, abs(c))
        assert abs(d.radius - rho) < 1e-9 * max(1, rho)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32))
def test_leibniz_rule(n, seed):
    rng = np.random.default_rng(seed)
    data = random_data(rng, n)
    tail = rand_disk(rng, 1.0)
    h = extremal_h_series(data, tail).derivatives()
    f = extremal_series(ExtremalSpec(data.hyperbolic(), tail)).derivatives()
    for k in range(1, n + 1):
        assert abs(h[k] - (k * f[k - 1] + data.z0 * f[k])) < 1e-10 * max(1, abs(h[k]))


def test_fixes_origin(rng):
    for _ in range(50):
        data = random_data(rng, int(rng.integers(1, 5)))
        tail = BlaschkeProduct(1.0, (0.3j,)) if rng.random() < 0.5 else rand_disk(rng, 1)
        assert abs(extremal_h_eval(data, 0, tail)) <= 1e-12
        assert abs(extremal_h_eval(data, data.z0, tail) - data.w0) < 1e-13


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32), st.floats(0, 2 * math.pi))
def test_boundary(n, seed, t):
    rng = np.random.default_rng(seed)
    data = random_data(rng, n)
    d = dieudonne_disk(data)
    eps = cmath.exp(1j * t)
    v = extremal_h_series(data, eps).derivatives()[n]
    assert abs(abs(v - d.center) / d.radius - 1) < 1e-8
    rot = data.z0 / data.r
    assert abs(v - (d.center + d.radius * rot * eps)) < 1e-8 * max(1, d.radius)


def test_zero_tail_gives_center(rng):
    for _ in range(30):
        n = int(rng.integers(1, 6))
        data = random_data(rng, n)
        v = extremal_h_series(data, 0j).derivatives()[n]
        c = dieudonne_disk(data).center
        assert abs(v - c) < 1e-8 * max(1, abs(c))


def test_containment(rng):
    for _ in range(30):
        n = int(rng.integers(1, 6))
        data = random_data(rng, n)
        d = dieudonne_disk(data)
        for _ in range(10):
            tail = BlaschkeProduct(float(rng.uniform(0, 6)), tuple(rand_disk(rng, 0.8, 2)))
            v = extremal_h_series(data, tail).derivatives()[n]
            assert d.contains(v, rel_tol=1e-8)


def test_w_gamma_roundtrip(rng):
    for _ in range(100):
        data = random_data(rng, int(rng.integers(2, 6)))
        ws = w_from_gamma(data)
        h = extremal_h_series(data, rand_disk(rng, 1.0)).derivatives()
        assert np.allclose(ws, h[1 : len(ws) + 1], rtol=1e-9, atol=1e-9)
        chain = gamma_from_w(DieudonneData(data.z0, data.w0, ws=tuple(ws)))
        assert chain.degenerate_at is None
        assert np.allclose(chain.gammas, data.gammas, atol=1e-9)


def test_first_w_formula():
    z0, w0, g1 = 0.3 + 0.4j, 0.1j, 0.2 - 0.1j
    r, s = abs(z0), abs(w0)
    want = w0 / z0 + (r * r - s * s) / (r * (1 - r * r)) * (z0 / r) * g1
    assert abs(w_from_gamma(DieudonneData(z0, w0, gammas=(g1,)))[0] - want) < 1e-14


def test_infeasible_w():
    data = DieudonneData(0.5, 0, ws=(1.0,))
    with pytest.raises(InfeasibleError) as info:
        gamma_from_w(data)
    assert info.value.index == 1
    assert info.value.excess == pytest.approx(1 - 2 / 3)


def test_boundary_w_is_degenerate():
    # |w_1| = 2/3 at z0 = 1/2 forces h(z) = rotation * z T_{-z0}(z)
    chain = gamma_from_w(DieudonneData(0.5, 0, ws=(2 / 3, 32 / 9)))
    assert chain.degenerate_at == 1
    assert chain.gammas[1] == 0
    with pytest.raises(InfeasibleError) as info:
        gamma_from_w(DieudonneData(0.5, 0, ws=(2 / 3, 0.0)))
    assert info.value.index == 2


def test_degenerate_disk_is_a_point():
    d = dieudonne_disk(DieudonneData(0.5, 0.1, gammas=(1j, 0)))
    assert d.radius == 0


def test_validation():
    with pytest.raises(InvalidInputError):
        DieudonneData(0, 0, gammas=())
    with pytest.raises(InvalidInputError):
        DieudonneData(0.5, 0.6, gammas=())
    with pytest.raises(InvalidInputError):
        DieudonneData(0.5, 0, gammas=(), ws=())
