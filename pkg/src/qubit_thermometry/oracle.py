"""Brute-force verification engines.

Nothing in here uses the closed forms of :mod:`qubit_thermometry.channel`
beyond plain distance evaluations, so these routines can be used to check
them: a fixed-step RK4 integrator for the Bloch equations, a cyclic Jacobi
eigensolver for small Hermitian matrices, dense grid maximisation and a
kink locator for piecewise-smooth curves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ProbePair, distance
from .exceptions import ConvergenceError, DomainError

__all__ = [
    "IntegratorConfig",
    "bloch_rhs",
    "integrate_master_equation",
    "jacobi_eigh",
    "trace_distance_numeric",
    "grid_argmax_theta",
    "locate_kink",
]


@dataclass(frozen=True)
class IntegratorConfig:
    step: float = 1e-4
    t_end: float = 5.0

    def __post_init__(self):
        if not self.step > 0:
            raise DomainError(f"step must be positive, got {self.step}")
        if not self.t_end > 0:
            raise DomainError(f"t_end must be positive, got {self.t_end}")

    @property
    def n_steps(self) -> int:
        return int(round(self.t_end / self.step))


def bloch_rhs(r, n):
    """Right-hand side of the Bloch equations; ``n`` broadcasts over ``r[..., 0]``."""
    n = np.asarray(n, dtype=float)
    return np.stack([-0.5 * n * r[..., 0], -0.5 * n * r[..., 1], -n * r[..., 2] - 1.0], axis=-1)


def integrate_master_equation(r0, n, cfg: IntegratorConfig = IntegratorConfig()):
    """Classical RK4 on the Bloch equations.

    ``r0`` may hold a batch of initial states with shape ``(..., 3)`` and
    ``n`` a matching batch of occupations.  Returns ``(times, states)`` with
    ``states.shape == (n_steps + 1,) + r0.shape``; the final time is
    ``n_steps * step``.
    """
    r = np.array(r0, dtype=float)
    n = np.asarray(n, dtype=float)
    if np.any(n < 1):
        raise DomainError("occupation parameter must be >= 1")
    h = cfg.step
    steps = cfg.n_steps
    out = np.empty((steps + 1,) + r.shape)
    out[0] = r
    for i in range(steps):
        k1 = bloch_rhs(r, n)
        k2 = bloch_rhs(r + 0.5 * h * k1, n)
        k3 = bloch_rhs(r + 0.5 * h * k2, n)
        k4 = bloch_rhs(r + h * k3, n)
        r = r + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[i + 1] = r
    return h * np.arange(steps + 1), out


def _off_norm(a):
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.sqrt(np.sum(off.real ** 2 + off.imag ** 2)))


def jacobi_eigh(m, tol=1e-14, max_sweeps=50):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot element and then
    applies a real Givens rotation that zeroes it.  Iteration stops once the
    Frobenius norm of the off-diagonal part drops below ``tol``.

    Returns:
        (w, v): eigenvalues and unitary matrix of column eigenvectors, so
        that ``m = v @ diag(w) @ v^+``.

    Raises:
        DomainError: if ``m`` is not square and Hermitian to 1e-12.
        ConvergenceError: if ``max_sweeps`` sweeps do not reach ``tol``.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > 1e-12:
        raise DomainError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    dim = a.shape[0]
    v = np.eye(dim, dtype=complex)
    off = _off_norm(a)
    sweeps = 0
    while off >= tol:
        if sweeps == max_sweeps:
            raise ConvergenceError("Jacobi sweeps exhausted", sweeps, off)
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                phase = apq / mag
                theta = 0.5 * np.arctan2(2.0 * mag, (a[q, q] - a[p, p]).real)
                c, s = np.cos(theta), np.sin(theta)
                rot = np.eye(dim, dtype=complex)
                # phase on column q makes the pivot real, then a real rotation
                rot[p, p] = c
                rot[p, q] = s
                rot[q, p] = -s * phase.conjugate()
                rot[q, q] = c * phase.conjugate()
                a = rot.conj().T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
        sweeps += 1
        off = _off_norm(a)
    return np.diag(a).real.copy(), v


def trace_distance_numeric(m) -> float:
    """Trace norm of a Hermitian matrix: the sum of absolute eigenvalues."""
    w, _ = jacobi_eigh(m)
    return float(np.sum(np.abs(w)))


def grid_argmax_theta(pair: ProbePair, t: float, points: int = 400):
    """Maximise the probe distance over an evenly spaced polar-angle grid.

    Ties resolve to the smallest angle.  Returns ``(theta, delta)``.
    """
    if points < 3:
        raise DomainError("need at least 3 grid points")
    thetas = np.linspace(0.0, np.pi, points)
    values = distance(pair, t, thetas)
    i = int(np.argmax(values))
    return float(thetas[i]), float(values[i])


def locate_kink(f, lo: float, hi: float, points: int = 2001, tol: float = 1e-8):
    """Locate a first-derivative discontinuity of ``f`` in ``[lo, hi]``.

    The coarse pass picks the largest fourth difference, which suppresses
    smooth curvature much more strongly than a kink.  Subsequent passes zoom
    onto the largest second difference on a 201-point window until the
    spacing drops below ``tol``, and the kink is placed at the intersection
    of straight lines through samples on either side.  ``f`` must accept an
    array.
    """
    ts = np.linspace(lo, hi, points)
    ys = np.asarray(f(ts), dtype=float)
    fourth = np.abs(np.diff(ys, 4))
    i = int(np.argmax(fourth)) + 2
    while True:
        lo, hi = ts[max(i - 5, 0)], ts[min(i + 5, len(ts) - 1)]
        ts = np.linspace(lo, hi, 201)
        ys = np.asarray(f(ts), dtype=float)
        second = np.abs(np.diff(ys, 2))
        i = int(np.argmax(second)) + 1
        h = ts[1] - ts[0]
        if h < tol:
            break
    # the kink lies in (ts[i-1], ts[i+1])
    il = min(max(i - 2, 1), len(ts) - 2)
    ir = max(min(i + 2, len(ts) - 2), 1)
    sl = (ys[il] - ys[il - 1]) / h
    sr = (ys[ir + 1] - ys[ir]) / h
    if sl == sr:
        return float(ts[i])
    return float((ys[ir] - ys[il] + sl * ts[il] - sr * ts[ir]) / (sl - sr))
