"""
Hyperbolic and invariant derivatives
====================================

Renormalize f at z0 to g = [f o T_{z0}, f(z0)]. The Taylor coefficients of g
are Peschl's invariant derivatives over k!, and its Schur parameters are the
hyperbolic derivatives H^k f(z0).
"""

from varregion import BlaschkeProduct, hyperbolic_derivatives, peschl_from_series
from varregion.peschl import ordinary_sequence_from_peschl, peschl_sequence_from_ordinary
from varregion.schur import clustered_divided_difference
from varregion.variability import tail_series

B = BlaschkeProduct(0.3, (0.5, -0.2j, 0.1 + 0.4j))
z0 = 0.2 + 0.1j
f = tail_series(B, 6, z0)

D = peschl_from_series(f, 4)
print("D^k f(z0):", D)

# the Bell-polynomial conversion from ordinary derivatives gives the same numbers
ders = list(f.derivatives())
print("via ordinary derivatives:", peschl_sequence_from_ordinary(z0, ders[0], ders[1:5]))
print("and back:", ordinary_sequence_from_peschl(z0, ders[0], D)[:2], "vs", ders[1:3])

# a degree-3 Blaschke product has |H^3| = 1 and nothing after it
p = hyperbolic_derivatives(f, 4)
print("H^k f(z0):", p.gammas, "degenerate at", p.degenerate_at)

# divided differences at nodes clustered around z0 converge at first order
for h in (1e-2, 5e-3, 2.5e-3):
    print(h, abs(clustered_divided_difference(B, z0, 2, h) - p.gammas[1]))
