"""Discriminating two bath temperatures with a single probe qubit.

The probe relaxes under a thermal (generalized amplitude damping) channel;
the two candidate baths are told apart by the optimal Helstrom measurement,
whose success probability is set by the trace distance of the two outputs.
"""

from .channel import (
    Coefficients,
    ProbePair,
    ProbeState,
    coefficients,
    delta,
    delta_infinity,
    distance,
    evolve_bloch,
    helstrom_probability,
    occupation_from_temperature,
    temperature_from_occupation,
)
from .entangled import (
    delta_entangled,
    delta_entangled_phi_plus,
    evolve_two_qubit,
    gad_kraus,
    optimize_alpha,
)
from .exceptions import ConvergenceError, DomainError, RootBracketError
from .optimizer import (
    Landmarks,
    OptimalStrategy,
    delta_coherent,
    delta_ground,
    global_optimum,
    landmarks,
    t_coherent_approx,
    t_crossing,
    t_ground_max,
    t_star,
    theta_optimal,
)

__all__ = [
    "Coefficients",
    "ConvergenceError",
    "DomainError",
    "Landmarks",
    "OptimalStrategy",
    "ProbePair",
    "ProbeState",
    "RootBracketError",
    "coefficients",
    "delta",
    "delta_coherent",
    "delta_entangled",
    "delta_entangled_phi_plus",
    "delta_ground",
    "delta_infinity",
    "distance",
    "evolve_bloch",
    "evolve_two_qubit",
    "gad_kraus",
    "global_optimum",
    "helstrom_probability",
    "landmarks",
    "occupation_from_temperature",
    "optimize_alpha",
    "t_coherent_approx",
    "t_crossing",
    "t_ground_max",
    "t_star",
    "temperature_from_occupation",
    "theta_optimal",
]

__version__ = "0.1.0"
