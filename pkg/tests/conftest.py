import cmath
import math

import numpy as np
import pytest
import sympy as sp


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def rand_disk(rng, max_modulus, size=None):
    r = max_modulus * np.sqrt(rng.random(size))
    z = r * np.exp(2j * np.pi * rng.random(size))
    return complex(z) if size is None else [complex(v) for v in z]


def classical_schur_parameters(coeffs, count):
    """Schur algorithm on a coefficient list: gamma = phi(0), phi <- [phi, gamma] / z.

    ``coeffs`` are the Taylor coefficients of phi at 0. Works with plain
    Python lists so it shares no code with the package.
    """
    phi = [complex(c) for c in coeffs]
    out = []
    for _ in range(count):
        g = phi[0]
        out.append(g)
        if abs(g) >= 1 - 1e-10:
            break
        num = [phi[0] - g] + phi[1:]
        den = [1 - g.conjugate() * phi[0]] + [-g.conjugate() * c for c in phi[1:]]
        q = []
        for k in range(len(num)):
            acc = num[k] - sum(den[j] * q[k - j] for j in range(1, k + 1))
            q.append(acc / den[0])
        phi = q[1:]  # divide by z
    return out


def blaschke_coeffs_at_zero(theta, zeros, order):
    """Taylor coefficients at 0 of exp(i theta) prod (z - a)/(1 - conj(a) z), via numpy polynomials."""
    out = np.zeros(order + 1, dtype=complex)
    out[0] = cmath.exp(1j * theta)
    for a in zeros:
        # (z - a) * sum (conj(a) z)^k
        geo = np.array([a.conjugate() ** k for k in range(order + 1)])
        fac = np.convolve([-a, 1], geo)[: order + 1]
        out = np.convolve(out, fac)[: order + 1]
    return out


_z = sp.Symbol("z")


def sym_T(a, expr):
    a = sp.nsimplify(0) + sp.sympify(complex(a))
    return (expr + a) / (1 + sp.conjugate(a) * expr)


def sympy_extremal_derivatives(z0, gammas, eps, n):
    """Derivatives 0..n at z0 of the nested extremal function, by symbolic differentiation."""
    z0c = sp.sympify(complex(z0))
    u = (_z - z0c) / (1 - sp.conjugate(z0c) * _z)
    phi = sp.sympify(complex(eps))
    for g in reversed(gammas[1:]):
        phi = sym_T(g, u * phi)
    f = sym_T(gammas[0], u * phi)
    out = []
    expr = f
    for k in range(n + 1):
        out.append(complex(sp.N(expr.subs(_z, z0c), 30)))
        expr = sp.diff(expr, _z)
    return out


def sympy_derivatives(expr_fn, z0, n):
    expr = expr_fn(_z)
    out = []
    for _ in range(n + 1):
        out.append(complex(sp.N(expr.subs(_z, sp.sympify(complex(z0))), 30)))
        expr = sp.diff(expr, _z)
    return out


def factorial(k):
    return math.factorial(k)


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; returns ``ok``."""

    def record(number, title, ok, detail=""):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
