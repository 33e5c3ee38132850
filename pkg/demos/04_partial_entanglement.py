"""Is maximal entanglement the best two-qubit probe?

Scans the weight alpha of sqrt(1 - alpha)|01> - sqrt(alpha)|10> and of the
matching phi+-like family at a few times.  alpha = 0 and 1 are product
states; alpha = 1/2 is maximally entangled.
"""

import numpy as np

from qubit_thermometry import ProbePair
from qubit_thermometry.entangled import delta_entangled, family_state, optimize_alpha

pair = ProbePair(12.0, 20.0)

for family in ("fujiwara", "phi-plus-like"):
    print(family)
    for t in (0.05, 0.1, 0.3, 0.6, 1.0):
        alpha, best = optimize_alpha(pair, t, family)
        half = delta_entangled(family_state(family, 0.5), pair, t)
        print(f"  t={t:4.2f}  alpha*={alpha:.5f}  best={best:.6f}  alpha=1/2 gives {half:.6f}")

alphas = np.linspace(0, 1, 11)
t = 0.3
print(f"\nprofile at t={t}")
for a in alphas:
    print(f"  alpha={a:.1f}  {delta_entangled(family_state('fujiwara', a), pair, t):.6f}")
