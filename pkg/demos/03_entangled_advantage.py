"""An ancilla entangled with the probe beats the best single-qubit probe.

The maximally entangled pair keeps a margin over the optimal single qubit at
every time, and its curve has a kink where the excited-state trajectories of
the two baths cross.
"""

import numpy as np

from qubit_thermometry import ProbePair
from qubit_thermometry.entangled import delta_entangled, delta_entangled_phi_plus, phi_plus
from qubit_thermometry.optimizer import optimal_curve, t_crossing
from qubit_thermometry.oracle import locate_kink

pair = ProbePair(12.0, 20.0)
ts = np.linspace(0.0, 2.0, 1001)
_, single = optimal_curve(pair, ts)
entangled = delta_entangled_phi_plus(pair, ts)

gain = entangled - single
print(f"smallest margin over [0, 2]: {gain.min():.3e}")
print(f"largest margin: {gain.max():.6f} at t={ts[np.argmax(gain)]:.3f}")

t = 0.2
print(f"closed form at t={t}: {delta_entangled_phi_plus(pair, t):.15f}")
print(f"eigenvalue route:      {delta_entangled(phi_plus(), pair, t):.15f}")

kink = locate_kink(lambda x: delta_entangled_phi_plus(pair, x), 0.0, 2.0)
print(f"kink located at t={kink:.9f}; excited-state crossing at t={t_crossing(pair):.9f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    plt.plot(ts, single, label="best single qubit")
    plt.plot(ts, entangled, label="entangled pair")
    plt.axvline(kink, color="k", lw=0.5)
    plt.xlabel("t")
    plt.ylabel("trace distance")
    plt.legend()
    plt.show()
