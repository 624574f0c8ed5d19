"""Design and verification of fine-tuned pair traps.

A trap is a time-symmetric schedule (0 | q, dt_b | 0, dt_i | q, dt_b | 0)
tuned so that each field pulse fully converts vacuum into a pair and
back while leaving single-particle states alone. Tuning requires the
longitudinal momentum to solve m^2 + p(p + q) = 0 (real only for
|q| >= 2m) together with the two phase quantizations

    E(p + q) * dt_b = (n_barrier + 1/2) pi
    E(p)     * dt_i = (2 n_interior + 1) pi.

At tuning the pulse matrix is +/- i sigma1 and the full trap composes to
the identity, so repeating the block manufactures a time crystal whose
interior windows hold a pair with probability 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fockspace
from .kinematics import energy
from .transfer import PotentialSchedule, Slice, compose_chain

REPORT_TOL = 1e-8


class SubThresholdError(ValueError):
    """Kick too weak for real tuned momenta, needs |q| >= 2 mass."""


def momentum_roots(mass, q):
    """Real roots of m^2 + p(p + q) = 0, ordered by |p|.

    The two roots sit on opposite sides of -q/2 and satisfy
    p (p + q) = -m^2, so the kinetic momenta before and inside a pulse
    have opposite signs. Degenerate exactly at |q| = 2 mass where both
    equal -q/2.
    """
    if not (np.isfinite(mass) and np.isfinite(q)):
        raise ValueError("mass and kick must be finite")
    if mass <= 0.0:
        raise ValueError("mass must be positive")
    disc = q * q - 4.0 * mass * mass
    if disc < 0.0:
        raise SubThresholdError(
            f"kick q={q:g} below pair threshold, requires |q| >= 2*mass = {2 * mass:g}"
        )
    root = np.sqrt(disc)
    inner = (-q + root) / 2.0 if q > 0 else (-q - root) / 2.0
    outer = (-q - root) / 2.0 if q > 0 else (-q + root) / 2.0
    return float(inner), float(outer)


def is_degenerate(mass, q):
    """True when the two tuned momenta coincide (|q| = 2 mass exactly)."""
    inner, outer = momentum_roots(mass, q)
    return inner == outer


@dataclass(frozen=True)
class TrapDesign:
    """Fully determined trap: tuned momentum, durations and schedule."""

    mass: float
    kick: float
    branch: str
    n_barrier: int
    n_interior: int
    momentum: float
    dt_barrier: float
    dt_interior: float
    schedule: PotentialSchedule
    degenerate: bool

    @property
    def energy_interior(self):
        return energy(self.mass, (0.0, 0.0, self.momentum))

    @property
    def energy_barrier(self):
        return energy(self.mass, (0.0, 0.0, self.momentum + self.kick))


@dataclass(frozen=True)
class TrapReport:
    """Deviations of a design from the ideal trap behaviour.

    All five numbers vanish (to rounding) at exact tuning.
    """

    barrier_diagonal_norm: float
    trap_identity_deviation: float
    pair_probability_interior: float
    vacuum_probability_final: float
    one_particle_transparency_deviation: float

    def max_deviation(self):
        return max(
            self.barrier_diagonal_norm,
            self.trap_identity_deviation,
            abs(1.0 - self.pair_probability_interior),
            abs(1.0 - self.vacuum_probability_final),
            self.one_particle_transparency_deviation,
        )

    def passed(self, tol=REPORT_TOL):
        return self.max_deviation() < tol


def design_trap(mass, q, branch="+", n_barrier=0, n_interior=0):
    """Solve the tuning conditions and assemble the trap schedule.

    branch "+" takes the root closer to zero, "-" the other one. The
    quantization integers select higher odd/half-odd phase multiples;
    dt_barrier grows linearly in (n_barrier + 1/2), dt_interior in
    (2 n_interior + 1).
    """
    if branch not in ("+", "-"):
        raise ValueError("branch must be '+' or '-'")
    if n_barrier < 0 or n_interior < 0:
        raise ValueError("quantization integers must be non-negative")
    inner, outer = momentum_roots(mass, q)
    p = inner if branch == "+" else outer
    e_barrier = energy(mass, (0.0, 0.0, p + q))
    e_interior = energy(mass, (0.0, 0.0, p))
    dt_barrier = (n_barrier + 0.5) * np.pi / e_barrier
    dt_interior = (2 * n_interior + 1) * np.pi / e_interior
    schedule = PotentialSchedule(
        (
            Slice(0.0),
            Slice(q, dt_barrier),
            Slice(0.0, dt_interior),
            Slice(q, dt_barrier),
            Slice(0.0),
        )
    )
    return TrapDesign(
        mass=float(mass),
        kick=float(q),
        branch=branch,
        n_barrier=int(n_barrier),
        n_interior=int(n_interior),
        momentum=p,
        dt_barrier=float(dt_barrier),
        dt_interior=float(dt_interior),
        schedule=schedule,
        degenerate=(inner == outer),
    )


def barrier_schedule(design):
    """Single-pulse sub-schedule (in | pulse | out) of a design."""
    return PotentialSchedule(
        (Slice(0.0), Slice(design.kick, design.dt_barrier), Slice(0.0))
    )


def barrier_matrix(design, spin="+"):
    """Composed 2x2 matrix of one field pulse, +/- i sigma1 at tuning."""
    return compose_chain(barrier_schedule(design), design.mass, design.momentum, spin)


def trap_matrix(design, spin="+"):
    """Composed 2x2 matrix of the full trap schedule."""
    return compose_chain(design.schedule, design.mass, design.momentum, spin)


def verify_trap(design, spin="+"):
    """Evaluate the five trap criteria for a design.

    Covers the barrier diagonal, the end-to-end identity, vacuum to pair
    conversion inside, vacuum recovery after, and single-particle
    transparency of the pulse (invariance up to phase).
    """
    u_b = barrier_matrix(design, spin)
    u_t = trap_matrix(design, spin)
    diag_norm = abs(u_b[0, 0]) + abs(u_b[1, 1])
    identity_dev = float(np.max(np.abs(u_t - np.eye(2))))

    lifted_b = fockspace.lift(u_b)
    lifted_t = fockspace.lift(u_t)
    vacuum = fockspace.basis_state("vacuum")
    pair_prob = fockspace.probabilities(lifted_b @ vacuum)[3]
    vac_prob = fockspace.probabilities(lifted_t @ vacuum)[0]

    transparency = 0.0
    for label in ("electron", "positron"):
        state = fockspace.basis_state(label)
        image = lifted_b @ state
        overlap = np.vdot(state, image)
        leakage = float(np.linalg.norm(image - overlap * state))
        transparency = max(transparency, leakage)

    return TrapReport(
        barrier_diagonal_norm=float(diag_norm),
        trap_identity_deviation=identity_dev,
        pair_probability_interior=float(pair_prob),
        vacuum_probability_final=float(vac_prob),
        one_particle_transparency_deviation=transparency,
    )


def crystal_schedule(design, periods, gap=None):
    """Schedule repeating the trap block `periods` times.

    Consecutive blocks are separated by a field-free gap, by default two
    interior durations (a full phase revival, E(p) * gap = 2 pi (2n+1)),
    so the composition stays the exact identity for every period count.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    if gap is None:
        gap = 2.0 * design.dt_interior
    block = (
        Slice(design.kick, design.dt_barrier),
        Slice(0.0, design.dt_interior),
        Slice(design.kick, design.dt_barrier),
    )
    slices = [Slice(0.0)]
    for k in range(periods):
        if k:
            slices.append(Slice(0.0, gap))
        slices.extend(block)
    slices.append(Slice(0.0))
    return PotentialSchedule(tuple(slices))


def time_crystal(design, periods, spin="+"):
    """Composed 2x2 matrix of `periods` repeated trap blocks."""
    return compose_chain(
        crystal_schedule(design, periods), design.mass, design.momentum, spin
    )
