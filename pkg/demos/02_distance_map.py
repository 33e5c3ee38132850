"""Distance between the two evolved probes over (t, theta).

Prints the per-time optimal angle on a coarse grid and, when matplotlib is
installed, draws the full map with the optimal-angle curve on top.
"""

import math

import numpy as np

from qubit_thermometry import ProbePair
from qubit_thermometry.channel import delta_infinity, distance
from qubit_thermometry.optimizer import optimal_curve, t_star

pair = ProbePair(12.0, 20.0)
ts = np.linspace(0.0, 0.6, 601)
thetas = np.linspace(0.0, math.pi, 201)
grid = distance(pair, ts[:, None], thetas[None, :])

i, j = np.unravel_index(np.argmax(grid), grid.shape)
print(f"grid maximum {grid[i, j]:.6f} at t={ts[i]:.3f}, theta={thetas[j]:.4f}")
print(f"crossover t* = {t_star(pair):.6f}: before it the ground state is best")

theta_opt, delta_opt = optimal_curve(pair, ts[1:])
for k in range(0, 600, 60):
    print(f"  t={ts[k + 1]:.3f}  theta_opt={theta_opt[k]:.4f}  normalised={delta_opt[k] / delta_infinity(pair):.3f}")

try:
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, ax = plt.subplots(figsize=(6, 4))
    mesh = ax.pcolormesh(ts, thetas, grid.T / delta_infinity(pair), shading="auto")
    ax.plot(ts[1:], theta_opt, color="w", lw=1)
    ax.set_xlabel("t")
    ax.set_ylabel("theta")
    fig.colorbar(mesh, label="distance / equilibrium distance")
    fig.tight_layout()
    plt.show()
