"""Optimal probe angles, landmark times and asymptotic forms.

For a pure probe at polar angle theta the squared distance between the two
trajectories is

    D^2(theta) = a^2 sin^2(theta) + (b cos(theta) - c)^2,

with ``(a, b, c)`` from :func:`qubit_thermometry.channel.coefficients`.
Its theta-derivative is ``2 sin(theta) [(a^2 - b^2) cos(theta) + b c]``, so
the ground state (theta = pi) is optimal until ``a^2 - b^2 = b c`` and an
interior angle with ``cos(theta) = -b c / (a^2 - b^2)`` is optimal after.

Several landmark equations are evaluated with ``a`` and ``b`` rescaled by
``exp(n1 t / 2)`` and ``exp(n1 t)``; this leaves the roots unchanged and
avoids underflow at long times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .channel import ProbePair, coefficients, delta_infinity
from .exceptions import DomainError, RootBracketError

__all__ = [
    "Landmarks",
    "OptimalStrategy",
    "delta_ground",
    "delta_coherent",
    "t_ground_max",
    "t_coherent_approx",
    "t_star",
    "t_crossing",
    "crossover_residual",
    "crossing_residual",
    "theta_optimal",
    "theta_derivative",
    "optimal_curve",
    "global_optimum",
    "asymptotic_check_double",
    "landmarks",
]

ROOT_XTOL = 1e-12
CLAMP_BAND = 1e-9
T_MAX_DEFAULT = 5.0


class OptimalStrategy(NamedTuple):
    theta_opt: float
    delta_opt: float


@dataclass(frozen=True)
class Landmarks:
    """Characteristic times of a probe pair.

    ``t_ground`` is None when the cold bath is at zero temperature, where
    the ground-state distance grows monotonically and has no peak.
    """

    delta_inf: float
    t_star: float
    t_ground: Optional[float]
    t_coherent_approx: float
    t_crossing: float


def delta_ground(pair: ProbePair, t):
    """Distance for the ground-state probe, ``b + c``."""
    _, b, c = coefficients(pair, t)
    return b + c


def delta_coherent(pair: ProbePair, t):
    """Distance for an equatorial probe, ``sqrt(a^2 + c^2)``."""
    a, _, c = coefficients(pair, t)
    return np.hypot(a, c)


def t_ground_max(pair: ProbePair) -> Optional[float]:
    """Time at which the ground-state distance peaks, or None if ``n1 == 1``."""
    n1, n2 = pair.n1, pair.n2
    if n1 == 1.0:
        return None
    # log1p form stays accurate as n2 -> n1
    return math.log1p((n2 - n1) / (n1 - 1.0)) / (n2 - n1)


def t_coherent_approx(pair: ProbePair) -> float:
    """Peak time of the transverse coefficient, ``2 ln(n2/n1) / (n2 - n1)``.

    This only approximates the peak of :func:`delta_coherent`; it is good
    when the transverse term dominates, i.e. for large occupations.
    """
    n1, n2 = pair.n1, pair.n2
    return 2.0 * math.log1p((n2 - n1) / n1) / (n2 - n1)


def _scaled(pair, t):
    """Return ``(a e^{n1 t/2}, b e^{n1 t}, c, e^{-n1 t})``."""
    d = pair.n2 - pair.n1
    a_s = -np.expm1(-0.5 * d * t)
    b_s = -np.expm1(-d * t)
    _, _, c = coefficients(pair, t)
    return a_s, b_s, c, np.exp(-pair.n1 * t)


def _crossover_scaled(pair, t):
    a_s, b_s, c, e = _scaled(pair, t)
    return a_s * a_s - b_s * b_s * e - b_s * c


def crossover_residual(pair: ProbePair, t):
    """``a^2 - b^2 - b c``; negative before the crossover time."""
    a, b, c = coefficients(pair, t)
    return a * a - b * b - b * c


def crossing_residual(pair: ProbePair, t):
    """``b - c``; zero where the excited-state trajectories cross."""
    _, b, c = coefficients(pair, t)
    return b - c


def _first_sign_change(f, what, t0=1e-6, t_limit=1e6):
    lo = t0
    f_lo = f(lo)
    if f_lo == 0:
        return lo
    hi = 2.0 * lo
    while True:
        f_hi = f(hi)
        if np.sign(f_hi) != np.sign(f_lo):
            break
        if hi > t_limit or not np.isfinite(f_hi):
            raise RootBracketError(f"no sign change found for {what}", (lo, hi), (f_lo, f_hi))
        lo, f_lo = hi, f_hi
        hi *= 2.0
    return brentq(f, lo, hi, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps, maxiter=200)


def t_star(pair: ProbePair) -> float:
    """Crossover time after which a partly coherent probe beats the ground state.

    Smallest positive root of ``a^2 - b^2 = b c``, found by doubling a
    bracket from ``t = 1e-6`` and refining with Brent's method.

    Raises:
        RootBracketError: if no sign change is found.
    """
    return _first_sign_change(lambda t: _crossover_scaled(pair, t), "the crossover time")


def t_crossing(pair: ProbePair) -> float:
    """Time at which the two excited-state trajectories cross (``b = c``).

    Raises:
        RootBracketError: if no sign change is found.
    """
    return _first_sign_change(lambda t: crossing_residual(pair, t), "the crossing time")


def theta_derivative(pair: ProbePair, t, theta):
    """Analytic derivative of the squared distance with respect to theta."""
    a, b, c = coefficients(pair, t)
    return 2.0 * np.sin(theta) * ((a * a - b * b) * np.cos(theta) + b * c)


def theta_optimal(pair: ProbePair, t: float, t_cross: Optional[float] = None) -> OptimalStrategy:
    """Best polar angle and resulting distance at interaction time ``t``.

    ``t_cross`` may carry a precomputed :func:`t_star` to avoid re-solving
    it when scanning many times.

    Raises:
        DomainError: for ``t <= 0``, or if the arccos argument leaves
            ``[-1, 1]`` by more than the 1e-9 clamping band past the
            crossover.
    """
    t = float(t)
    if not t > 0:
        raise DomainError(f"interaction time must be positive, got {t}")
    if t_cross is None:
        t_cross = t_star(pair)
    if t <= t_cross:
        return OptimalStrategy(math.pi, float(delta_ground(pair, t)))
    a_s, b_s, c, e = _scaled(pair, t)
    gap = a_s * a_s - b_s * b_s * e
    arg = b_s * c / gap if gap > 0 else math.inf
    if arg > 1.0:
        if arg > 1.0 + CLAMP_BAND:
            raise DomainError(f"arccos argument {arg!r} beyond the clamping band at t={t} > t*={t_cross}")
        arg = 1.0
    theta = math.pi - math.acos(arg)
    # a^2 (1 + c^2 / (a^2 - b^2)), written in scaled form
    a = a_s * math.sqrt(e)
    d2 = a * a + c * c * a_s * a_s / gap
    return OptimalStrategy(theta, math.sqrt(d2))


def optimal_curve(pair: ProbePair, ts):
    """Vectorised :func:`theta_optimal` over a time grid (``t = 0`` gives (pi, 0))."""
    ts = np.asarray(ts, dtype=float)
    tc = t_star(pair)
    thetas = np.empty_like(ts)
    deltas = np.empty_like(ts)
    for i, t in enumerate(ts):
        if t == 0:
            thetas[i], deltas[i] = math.pi, 0.0
        else:
            thetas[i], deltas[i] = theta_optimal(pair, t, tc)
    return thetas, deltas


def global_optimum(pair: ProbePair, t_max: float = T_MAX_DEFAULT, t_points: int = 1000):
    """Best (t, theta, delta) over ``[0, t_max] x [0, pi]``.

    The angle is optimised in closed form at each time; the time is located
    on a grid and refined with bounded Brent search between the neighbours of
    the best grid point.  If the best point is ``t_max`` itself the distance
    is still growing and the supremum lies beyond the window.
    """
    if not t_max > 0:
        raise DomainError("t_max must be positive")
    tc = t_star(pair)
    ts = np.linspace(0.0, t_max, t_points + 1)
    _, deltas = optimal_curve(pair, ts)
    i = int(np.argmax(deltas))
    if i == len(ts) - 1:
        theta, d = theta_optimal(pair, t_max, tc)
        return float(t_max), theta, d
    lo, hi = ts[max(i - 1, 0)], ts[i + 1]
    res = minimize_scalar(
        lambda t: -theta_optimal(pair, t, tc).delta_opt if t > 0 else 0.0,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    t_best = float(res.x)
    theta, d = theta_optimal(pair, t_best, tc)
    if d < deltas[i]:
        t_best = float(ts[i])
        theta, d = theta_optimal(pair, t_best, tc)
    return t_best, theta, d


def asymptotic_check_double(n1: float, t: float):
    """Exact and long-time approximate distances for the pair ``(n1, 2 n1)``.

    Returns ``(exact_g, approx_g, exact_c, approx_c)`` for the ground-state
    and equatorial probes.
    """
    pair = ProbePair(n1, 2.0 * n1)
    decay = math.exp(-pair.n1 * t)
    approx_g = 0.5 / pair.n1 + (1.0 - 1.0 / pair.n1) * decay
    approx_c = 0.5 / pair.n1 + (pair.n1 - 1.0 / pair.n1) * decay
    return float(delta_ground(pair, t)), approx_g, float(delta_coherent(pair, t)), approx_c


def landmarks(pair: ProbePair) -> Landmarks:
    return Landmarks(
        delta_inf=delta_infinity(pair),
        t_star=t_star(pair),
        t_ground=t_ground_max(pair),
        t_coherent_approx=t_coherent_approx(pair),
        t_crossing=t_crossing(pair),
    )

