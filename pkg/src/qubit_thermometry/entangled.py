"""Entangled probes: one qubit of a pair is exposed to the bath.

Two-qubit states use the basis order (|00>, |01>, |10>, |11>) with the
bath-exposed qubit ``a`` as the first tensor factor and |0> excited.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar

from .channel import ProbePair, check_occupancy, coefficients
from .exceptions import DomainError
from .oracle import trace_distance_numeric

__all__ = [
    "FAMILIES",
    "DISPLAY_ORDER",
    "gad_kraus",
    "apply_kraus",
    "bloch_to_density",
    "density_to_bloch",
    "two_qubit_state",
    "phi_plus",
    "phi_plus_like",
    "fujiwara",
    "family_state",
    "product_state",
    "evolve_two_qubit",
    "phi_plus_difference",
    "delta_entangled_phi_plus",
    "delta_entangled",
    "optimize_alpha",
]

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

FAMILIES = ("phi-plus-like", "fujiwara")

# Reorders (|00>, |01>, |10>, |11>) into (|11>, |01>, |10>, |00>): ground
# state first with the ancilla as the leading factor.  The phi+ difference
# matrix is conventionally displayed in this layout.
DISPLAY_ORDER = (3, 1, 2, 0)


def gad_kraus(n: float, t: float) -> np.ndarray:
    """Kraus operators of the thermal channel after time ``t``.

    The channel is a mixture of decay towards the ground state (weight
    ``p = (n + 1) / (2 n)``) and excitation towards |0> (weight ``1 - p``),
    both with damping parameter ``1 - exp(-n t)``.  Returns an array of
    shape ``(4, 2, 2)``.
    """
    n = check_occupancy(n)
    t = float(t)
    if not t >= 0:
        raise DomainError(f"interaction time must be non-negative, got {t}")
    eta = math.exp(-n * t)
    damp = math.sqrt(-math.expm1(-n * t))
    p = (n + 1.0) / (2.0 * n)
    sp, sq = math.sqrt(p), math.sqrt(1.0 - p)
    se = math.sqrt(eta)
    return np.array(
        [
            sp * np.array([[se, 0], [0, 1]]),
            sp * np.array([[0, 0], [damp, 0]]),  # |0> -> |1>
            sq * np.array([[1, 0], [0, se]]),
            sq * np.array([[0, damp], [0, 0]]),  # |1> -> |0>
        ],
        dtype=complex,
    )


def apply_kraus(kraus, rho):
    return np.einsum("kij,jl,kml->im", kraus, rho, kraus.conj())


def bloch_to_density(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    return 0.5 * (np.eye(2) + np.einsum("i,ijk->jk", r, PAULI))


def density_to_bloch(rho) -> np.ndarray:
    return np.einsum("ijk,kj->i", PAULI, rho).real


def two_qubit_state(amplitudes) -> np.ndarray:
    psi = np.asarray(amplitudes, dtype=complex)
    if psi.shape != (4,):
        raise DomainError(f"two-qubit states have 4 amplitudes, got shape {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1.0) > 1e-12:
        raise DomainError("state is not normalised")
    return psi


def phi_plus() -> np.ndarray:
    return np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2.0)


def _check_alpha(alpha):
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def phi_plus_like(alpha: float) -> np.ndarray:
    """``sqrt(1 - alpha)|00> + sqrt(alpha)|11>``; alpha = 1/2 is phi+."""
    alpha = _check_alpha(alpha)
    return np.array([math.sqrt(1 - alpha), 0, 0, math.sqrt(alpha)], dtype=complex)


def fujiwara(alpha: float) -> np.ndarray:
    """``sqrt(1 - alpha)|01> - sqrt(alpha)|10>``."""
    alpha = _check_alpha(alpha)
    return np.array([0, math.sqrt(1 - alpha), -math.sqrt(alpha), 0], dtype=complex)


def family_state(family: str, alpha: float) -> np.ndarray:
    if family == "phi-plus-like":
        return phi_plus_like(alpha)
    if family == "fujiwara":
        return fujiwara(alpha)
    raise DomainError(f"unknown family {family!r}; choose from {FAMILIES}")


def product_state(q, ancilla=(1.0, 0.0)) -> np.ndarray:
    """|q> (x) |ancilla> for single-qubit amplitude vectors."""
    q = np.asarray(q, dtype=complex)
    ancilla = np.asarray(ancilla, dtype=complex)
    return two_qubit_state(np.kron(q / np.linalg.norm(q), ancilla / np.linalg.norm(ancilla)))


def evolve_two_qubit(psi, n: float, t: float) -> np.ndarray:
    """Two-qubit density matrix after qubit ``a`` spends time ``t`` in the bath."""
    psi = two_qubit_state(psi)
    rho = np.outer(psi, psi.conj())
    ops = np.array([np.kron(k, np.eye(2)) for k in gad_kraus(n, t)])
    return np.einsum("kij,jl,kml->im", ops, rho, ops.conj())


def phi_plus_difference(pair: ProbePair, t: float) -> np.ndarray:
    """Closed-form ``rho_ab(n1, t) - rho_ab(n2, t)`` for the phi+ probe."""
    a, b, c = coefficients(pair, float(t))
    return 0.25 * np.array(
        [
            [b - c, 0, 0, 2 * a],
            [0, -(b + c), 0, 0],
            [0, 0, c - b, 0],
            [2 * a, 0, 0, b + c],
        ],
        dtype=complex,
    )


def delta_entangled_phi_plus(pair: ProbePair, t):
    """Trace distance between the two phi+ outputs (vectorised over ``t``)."""
    a, b, c = coefficients(pair, t)
    root = np.sqrt(4 * a * a + c * c)
    return 0.25 * (np.abs(b + c) + np.abs(b - c) + np.abs(b + root) + np.abs(b - root))


def delta_entangled(psi, pair: ProbePair, t: float) -> float:
    """Trace distance Tr|rho1 - rho2| for an arbitrary pure two-qubit probe.

    Computed from the eigenvalues of the difference matrix.

    Raises:
        ConvergenceError: if the eigensolver does not converge.
    """
    diff = evolve_two_qubit(psi, pair.n1, t) - evolve_two_qubit(psi, pair.n2, t)
    return trace_distance_numeric(diff)


def optimize_alpha(pair: ProbePair, t: float, family: str = "fujiwara", points: int = 1001):
    """Best superposition weight alpha within a one-parameter probe family.

    A ``points``-sized grid on [0, 1] is refined by bounded Brent search
    between the neighbours of the best grid point, to 1e-8 in alpha.
    Returns ``(alpha, delta)``.
    """
    if not float(t) > 0:
        raise DomainError("interaction time must be positive")
    family_state(family, 0.5)

    def objective(alpha):
        return delta_entangled(family_state(family, alpha), pair, t)

    grid = np.linspace(0.0, 1.0, points)
    values = np.array([objective(x) for x in grid])
    i = int(np.argmax(values))
    best_alpha, best = float(grid[i]), float(values[i])
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, points - 1)]
    res = minimize_scalar(lambda x: -objective(x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-9})
    if -res.fun > best:
        best_alpha, best = float(res.x), float(-res.fun)
    return best_alpha, best
