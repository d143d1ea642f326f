"""
Where can the n-th derivative land?
===================================

Fix a point z0 in the unit disk, the value f(z0) and the first n-1
hyperbolic derivatives of a self-map f. Then f^(n)(z0) is confined to a
closed disk, and every point of that disk is attained.
"""

import cmath

import numpy as np

from varregion import ExtremalSpec, HyperbolicData, disk_nth, extremal_series
from varregion.taylor import derivative_at_center

# data: f(z0) = 0.3i, H^1 f(z0) = 0.5, H^2 f(z0) = -0.2 + 0.1i
data = HyperbolicData(0.4 - 0.2j, (0.3j, 0.5, -0.2 + 0.1j))
disk = disk_nth(data)
print("f'''(z0) lies in the disk with center", disk.center, "and radius", disk.radius)

# a unimodular tail eps puts the derivative on the boundary circle, at angle arg(eps)
for t in np.linspace(0, 2 * np.pi, 5)[:-1]:
    eps = cmath.exp(1j * t)
    f = extremal_series(ExtremalSpec(data, eps))
    v = derivative_at_center(f, 3)
    print(f"eps angle {t:4.2f}:  |v - c| / rho = {abs(v - disk.center) / disk.radius:.15f}")

# an interior tail gives an interior point; eps = 0 gives the center itself
v0 = derivative_at_center(extremal_series(ExtremalSpec(data, 0j)), 3)
print("eps = 0 reproduces the center:", abs(v0 - disk.center))

# the second-derivative disk also has a short closed form
from varregion import c2_rho2_explicit

print(c2_rho2_explicit(data.z0, *data.gammas[:2]), "==", disk_nth(data, 2))
