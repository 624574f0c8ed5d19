"""Pair traps for a single Dirac momentum mode.

Library layers, bottom up: kinematics (bispinors), transfer (interface
and propagation matrices, chain composition), su2param (canonical U(2)
parameters), fockspace (Bogoliubov lifts and probabilities), trapdesign
(tuning conditions, verification, time crystals). The cli module wires
them into the `pairtrap` command.
"""

from .fockspace import (
    BASIS_LABELS,
    NotNormalizedError,
    basis_state,
    conjugation_check,
    generator,
    ladder_matrices,
    lift,
    probabilities,
    u_hat_closed_form,
    u_hat_exponential,
)
from .kinematics import (
    ModeContext,
    bispinor_u,
    bispinor_v,
    dirac_residual,
    energy,
)
from .su2param import NotUnitaryError, Su2Params, decompose, to_matrix, unitarity_deviation
from .transfer import (
    AmplitudePair,
    NonLongitudinalError,
    PotentialSchedule,
    Slice,
    bispinor_basis,
    compose_chain,
    evolve_amplitudes,
    interface_closed_form,
    propagation2,
    reduce_longitudinal,
    transfer_full,
)
from .trapdesign import (
    SubThresholdError,
    TrapDesign,
    TrapReport,
    barrier_matrix,
    design_trap,
    is_degenerate,
    momentum_roots,
    time_crystal,
    trap_matrix,
    verify_trap,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudePair",
    "BASIS_LABELS",
    "ModeContext",
    "NonLongitudinalError",
    "NotNormalizedError",
    "NotUnitaryError",
    "PotentialSchedule",
    "Slice",
    "Su2Params",
    "SubThresholdError",
    "TrapDesign",
    "TrapReport",
    "barrier_matrix",
    "basis_state",
    "bispinor_basis",
    "bispinor_u",
    "bispinor_v",
    "compose_chain",
    "conjugation_check",
    "decompose",
    "design_trap",
    "dirac_residual",
    "energy",
    "evolve_amplitudes",
    "generator",
    "interface_closed_form",
    "is_degenerate",
    "ladder_matrices",
    "lift",
    "momentum_roots",
    "probabilities",
    "propagation2",
    "reduce_longitudinal",
    "time_crystal",
    "to_matrix",
    "transfer_full",
    "trap_matrix",
    "u_hat_closed_form",
    "u_hat_exponential",
    "unitarity_deviation",
    "verify_trap",
]
