"""
Randomized self-check
=====================

``run_roundtrips`` pits the independent routes against each other on
seeded random data. The same seed always gives the same report.
"""

import json

from varregion.oracle import TrialConfig, run_containment, run_roundtrips
from varregion import HyperbolicData

report = run_roundtrips(TrialConfig(seed=42, trials=50))
for name, suite in report["suites"].items():
    print(f"{name:24s} {'ok' if suite['pass'] else 'FAIL'}  worst {suite['worst_error']:.2e}")

# Monte Carlo containment for one configuration: zero data at the origin, n = 3
r = run_containment(TrialConfig(trials=200), HyperbolicData(0, (0, 0, 0)))
print(json.dumps({k: r[k] for k in ("radius", "violations", "boundary_trials", "max_boundary_error")}))

# close to the boundary of the disk the problem is badly conditioned, and the report says so
bad = run_roundtrips(TrialConfig(trials=10, z0_modulus_max=0.95))
print("conditioning", f"{bad['conditioning']:.3g}", "ill_conditioned", bad["ill_conditioned"])
