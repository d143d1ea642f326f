"""
Building the extremal functions
===============================

The boundary of the variability disk is traced by nested Moebius maps
T_{g0}(u T_{g1}(u ... T_{g_{n-1}}(eps u))), u = T_{-z0}(z). Replacing the
constant eps by any Schur function gives every admissible f.
"""

from varregion import BlaschkeProduct, ExtremalSpec, HyperbolicData, extremal_eval, extremal_series, hyperbolic_derivatives

data = HyperbolicData(0.2 + 0.1j, (0.1, 0.4j))

# Taylor series about z0 (default order n + 2), exact up to rounding
spec = ExtremalSpec(data, tail=BlaschkeProduct(0.7, (0.3, -0.5j)))
f = extremal_series(spec, order=8)
print("coefficients about z0:")
for k, c in enumerate(f.coeffs):
    print(f"  a_{k} = {c:.6f}")

# the series and the pointwise nested form agree near z0
z = data.z0 + 0.05
print("series vs pointwise:", abs(f(z) - extremal_eval(spec, z)))

# reading the hyperbolic derivatives back recovers the data, plus the tail's value
print("H^k f(z0):", hyperbolic_derivatives(f, 2).gammas, " (prescribed", data.gammas[1:], ")")

# |f| <= 1 on the disk
import numpy as np

pts = 0.999 * np.exp(2j * np.pi * np.linspace(0, 1, 200))
print("max |f| on |z| = 0.999:", max(abs(extremal_eval(spec, complex(p))) for p in pts))
