"""Single-qubit probe: which initial state best separates two baths, and when?

Run with ``python demos/01_single_qubit_landmarks.py [n1 n2]``.
"""

import math
import sys

from qubit_thermometry import ProbePair
from qubit_thermometry.channel import delta_infinity, distance, helstrom_probability
from qubit_thermometry.optimizer import global_optimum, landmarks, theta_optimal


def main(n1=12.0, n2=20.0):
    pair = ProbePair(n1, n2)
    marks = landmarks(pair)
    print(f"baths n1={pair.n1:g}, n2={pair.n2:g}; equilibrium separation {delta_infinity(pair):.6f}")
    print()
    print("landmark times")
    for name in ("t_star", "t_ground", "t_coherent_approx", "t_crossing"):
        value = getattr(marks, name)
        print(f"  {name:<18} {'none' if value is None else f'{value:.6f}'}")

    print()
    print(f"{'t':>8} {'theta_opt':>10} {'ground':>10} {'equator':>10} {'excited':>10} {'best':>10}")
    for t in (0.02, 0.05, 0.08, 0.1, 0.15, 0.2, 0.3, 0.5, 1.0, 2.0):
        s = theta_optimal(pair, t)
        row = [distance(pair, t, th) for th in (math.pi, math.pi / 2, 0.0)]
        print(f"{t:8.3f} {s.theta_opt:10.5f} " + " ".join(f"{v:10.6f}" for v in row) + f" {s.delta_opt:10.6f}")

    t_best, theta_best, d_best = global_optimum(pair)
    print()
    print(f"best overall: t={t_best:.6f}, theta={theta_best:.6f}, distance {d_best:.6f}")
    print(f"single-shot success probability {helstrom_probability(d_best):.6f}")


if __name__ == "__main__":
    main(*map(float, sys.argv[1:3]))
