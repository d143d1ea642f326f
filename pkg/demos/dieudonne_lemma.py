"""
Self-maps fixing the origin
===========================

For h(0) = 0 and h(z0) = w0, write h = z f. The disk for h^(n)(z0) follows
from the one for f, because h^(n) = n f^(n-1) + z0 f^(n).
"""

from varregion import DieudonneData, dieudonne_disk, extremal_h_series, gamma_from_w, w_from_gamma

# the classical first-order case: z0 = 1/2, w0 = 0
d = dieudonne_disk(DieudonneData(0.5, 0.0, gammas=()))
print("h'(1/2) lies within", d.radius, "of", d.center)

# h(z) = z (z - 1/2) / (1 - z/2) attains it
h = extremal_h_series(DieudonneData(0.5, 0.0, gammas=()), tail=1.0, order=3)
print("|h'(1/2)| for the extremal map:", abs(h.coeffs[1]))

# higher order, data given as ordinary derivatives of h
data = DieudonneData(0.3 + 0.4j, 0.1j, gammas=(0.2 - 0.1j, 0.3j))
ws = w_from_gamma(data)
print("h'(z0), h''(z0) =", ws)
chain = gamma_from_w(DieudonneData(data.z0, data.w0, ws=tuple(ws)))
print("converted back to hyperbolic data:", chain.gammas)
print("disk for h'''(z0):", dieudonne_disk(data))

# a w outside its disk is reported with its index and distance
from varregion import InfeasibleError

try:
    gamma_from_w(DieudonneData(0.5, 0.0, ws=(0.9,)))
except InfeasibleError as exc:
    print("infeasible:", exc.index, round(exc.excess, 6))
