"""Single-qubit dynamics in a thermal bosonic bath.

Units: the qubit gap and the spontaneous emission rate are both 1, so
temperatures ``T`` and interaction times ``t`` are dimensionless.  The
excited state |0> sits at Bloch z = +1 and the ground state |1> at z = -1.

A bath enters only through its occupation parameter

    n = 1 + 2 N = coth(1 / (2 T)),    N = mean boson number,

and a qubit coupled to it obeys the Lindblad equation

    d rho / dt = (N + 1) D[s-] rho + N D[s+] rho,   s- = |1><0|,

with D[L] rho = L rho L^+ - {L^+ L, rho} / 2.  In Bloch form this is
x' = -n x / 2, y' = -n y / 2, z' = -n z - 1, solved in closed form by
:func:`evolve_bloch`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError

__all__ = [
    "ProbePair",
    "ProbeState",
    "Coefficients",
    "occupation_from_temperature",
    "temperature_from_occupation",
    "check_occupancy",
    "evolve_bloch",
    "equilibrium_bloch",
    "coefficients",
    "distance",
    "delta",
    "delta_infinity",
    "helstrom_probability",
    "lindblad_rhs",
]

SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)  # |1><0|, decay to ground
SIGMA_PLUS = SIGMA_MINUS.conj().T


def occupation_from_temperature(T: float) -> float:
    """Return n = coth(1/(2T)); ``T = 0`` gives exactly 1."""
    T = float(T)
    if not T >= 0:
        raise DomainError(f"temperature must be non-negative, got {T}")
    if T == 0:
        return 1.0
    return 1.0 / math.tanh(0.5 / T)


def temperature_from_occupation(n: float) -> float:
    """Inverse of :func:`occupation_from_temperature`, ``T = 1/(2 artanh(1/n))``.

    Raises:
        DomainError: for ``n <= 1``; ``n = 1`` is the zero-temperature
            boundary, which has no finite inverse image other than 0 and is
            reported rather than silently mapped.
    """
    n = float(n)
    if n == 1.0:
        raise DomainError("n = 1 is the T = 0 boundary")
    if not n > 1.0:
        raise DomainError(f"occupation parameter must be >= 1, got {n}")
    return 0.5 / math.atanh(1.0 / n)


def check_occupancy(n: float) -> float:
    n = float(n)
    if not n >= 1.0 or math.isinf(n):
        raise DomainError(f"occupation parameter must be a finite value >= 1, got {n}")
    return n


@dataclass(frozen=True)
class ProbePair:
    """The two candidate baths, cold (``n1``) and hot (``n2``)."""

    n1: float
    n2: float

    def __post_init__(self):
        object.__setattr__(self, "n1", check_occupancy(self.n1))
        object.__setattr__(self, "n2", check_occupancy(self.n2))
        if not self.n1 < self.n2:
            raise DomainError(f"need n1 < n2, got n1={self.n1}, n2={self.n2}")

    @classmethod
    def from_temperatures(cls, T1: float, T2: float) -> "ProbePair":
        return cls(occupation_from_temperature(T1), occupation_from_temperature(T2))


@dataclass(frozen=True)
class ProbeState:
    """Initial qubit state in spherical Bloch coordinates.

    ``theta = 0`` is the excited state, ``theta = pi`` the ground state.
    """

    theta: float
    R: float = 1.0
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.R <= 1.0:
            raise DomainError(f"Bloch radius must lie in [0, 1], got {self.R}")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")

    def bloch_vector(self) -> np.ndarray:
        s = math.sin(self.theta)
        return self.R * np.array([s * math.cos(self.phi), s * math.sin(self.phi), math.cos(self.theta)])


class Coefficients(NamedTuple):
    """Per-axis separation rates of the two trajectories at time t.

    ``a`` scales the transverse separation, ``b`` the dependence on the
    initial z component and ``c`` the drift towards the two fixed points.
    """

    a: np.ndarray | float
    b: np.ndarray | float
    c: np.ndarray | float


def _check_time(t):
    t = np.asarray(t, dtype=float)
    if np.any(np.isnan(t)) or np.any(t < 0):
        raise DomainError("interaction time must be non-negative")
    return t


def evolve_bloch(r0, n: float, t) -> np.ndarray:
    """Bloch vector after time ``t`` in a bath with occupation ``n``.

    ``t`` may be a scalar or an array; the result has shape
    ``t.shape + r0.shape``.
    """
    n = check_occupancy(n)
    r0 = np.asarray(r0, dtype=float)
    if r0.shape[-1] != 3:
        raise DomainError(f"Bloch vectors have 3 components, got shape {r0.shape}")
    if np.any(np.linalg.norm(r0, axis=-1) > 1 + 1e-12):
        raise DomainError("Bloch vector norm exceeds 1")
    t = _check_time(t)
    tt = t.reshape(t.shape + (1,) * r0.ndim)
    transverse = np.exp(-0.5 * n * tt)
    longitudinal = np.exp(-n * tt)
    x = r0[..., 0] * transverse[..., 0]
    y = r0[..., 1] * transverse[..., 0]
    # z = e^{-nt} r_z - (1 - e^{-nt}) / n
    z = longitudinal[..., 0] * r0[..., 2] + np.expm1(-n * tt[..., 0]) / n
    return np.stack([x, y, z], axis=-1)


def equilibrium_bloch(n: float) -> np.ndarray:
    return np.array([0.0, 0.0, -1.0 / check_occupancy(n)])


_SERIES_X = 0.25
_SERIES_TERMS = 24


def _drift_coefficient(n1, n2, t):
    """(1 - e^{-n1 t})/n1 - (1 - e^{-n2 t})/n2 without cancellation at small t.

    For n2 t < 0.25 the Taylor series
        sum_{k>=2} (-1)^k (n2^{k-1} - n1^{k-1}) t^k / k!
    is summed with n2^{k-1} - n1^{k-1} = (n2 - n1) h_{k-2}, where
    h_m = sum_j n2^j n1^(m-j) has only positive terms.
    """
    direct = np.expm1(-n2 * t) / n2 - np.expm1(-n1 * t) / n1
    small = n2 * t < _SERIES_X
    if not np.any(small):
        return direct
    ts = np.where(small, t, 0.0)
    gap = n2 - n1
    h = 1.0
    term = ts * ts / 2.0  # t^k / k! at k = 2
    series = gap * h * term
    for k in range(3, _SERIES_TERMS):
        h = n2 * h + n1 ** (k - 2)
        term = term * ts / k
        series = series + (-1) ** k * gap * h * term
    return np.where(small, series, direct)


def coefficients(pair: ProbePair, t) -> Coefficients:
    """Separation coefficients of the two trajectories, vectorised over ``t``.

    ``a`` and ``b`` are evaluated as products of positive factors and ``c``
    by a series at short times, so all three keep full relative precision
    (and their sign) as t -> 0.
    """
    t = _check_time(t)
    n1, n2 = pair.n1, pair.n2
    gap = n2 - n1
    with np.errstate(invalid="ignore"):
        a = np.exp(-0.5 * n1 * t) * -np.expm1(-0.5 * gap * t)
        b = np.exp(-n1 * t) * -np.expm1(-gap * t)
        c = _drift_coefficient(n1, n2, t)
    if t.ndim == 0:
        return Coefficients(float(a), float(b), float(c))
    return Coefficients(a, b, c)


def distance(pair: ProbePair, t, theta, radius=1.0):
    """Euclidean Bloch distance between the two trajectories (vectorised).

    Broadcasts ``t``, ``theta`` and ``radius`` against each other.  The
    azimuth of the probe never enters.
    """
    a, b, c = coefficients(pair, t)
    theta = np.asarray(theta, dtype=float)
    radius = np.asarray(radius, dtype=float)
    out = np.hypot(a * radius * np.sin(theta), b * radius * np.cos(theta) - c)
    return float(out) if np.ndim(out) == 0 else out


def delta(state: ProbeState, pair: ProbePair, t):
    """Distance |r1(t) - r2(t)| for the probe ``state``."""
    return distance(pair, t, state.theta, state.R)


def delta_infinity(pair: ProbePair) -> float:
    """Distance between the two equilibrium states, 1/n1 - 1/n2."""
    return 1.0 / pair.n1 - 1.0 / pair.n2


def helstrom_probability(distance: float) -> float:
    """Optimal success probability for telling the two states apart.

    ``distance`` is the trace distance Tr|rho1 - rho2|, which for single
    qubits equals the Euclidean distance of the Bloch vectors.
    """
    d = float(distance)
    if not 0.0 <= d <= 2.0:
        raise DomainError(f"trace distance must lie in [0, 2], got {d}")
    return 0.5 * (1.0 + 0.5 * d)


def _dissipator(L, rho):
    LdL = L.conj().T @ L
    return L @ rho @ L.conj().T - 0.5 * (LdL @ rho + rho @ LdL)


def lindblad_rhs(rho: np.ndarray, n: float) -> np.ndarray:
    """Time derivative of a 2x2 density matrix under the thermal master equation."""
    n = check_occupancy(n)
    nbar = 0.5 * (n - 1.0)
    return (nbar + 1.0) * _dissipator(SIGMA_MINUS, rho) + nbar * _dissipator(SIGMA_PLUS, rho)
