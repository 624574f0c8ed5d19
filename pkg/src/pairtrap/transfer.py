"""Sudden-switch transfer matrices and piecewise-constant evolution.

A spatially homogeneous vector potential that is constant on time slices
shifts the kinetic momentum of a fixed canonical mode by the kick q of
the slice it is in. Matching the mode expansion across a switch yields a
4x4 unitary interface matrix of bispinor overlaps; between switches the
evolution is a diagonal phase. For purely longitudinal momentum the two
spin sectors decouple into 2x2 blocks (real rotations at an interface)
and whole pulse schedules compose in that reduced form.

Basis order for 4x4 objects: (a+, a-, bdag+, bdag-), i.e. electron
annihilators first, positron creators second, each split by spin.
Reduced 2x2 objects act on (a, bdag) of one spin.

Phase convention for composed chains: the semi-infinite in/out regions
contribute no phase (interaction picture anchored at the first switch),
interior slices contribute their full diagonal propagation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kinematics import bispinor_u, bispinor_v, energy

MIXED_SPIN_TOL = 1e-10

# basis column indices by spin: (electron, positron) pairs
_SPIN_SLOTS = {"+": (0, 2), "-": (1, 3)}


class NonLongitudinalError(ValueError):
    """Spin sectors do not decouple, the 2x2 reduction is invalid."""


@dataclass(frozen=True)
class Slice:
    """Constant-potential time slice: momentum kick and duration."""

    kick: float
    duration: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.kick) and np.isfinite(self.duration)):
            raise ValueError("slice kick and duration must be finite")
        if self.duration < 0.0:
            raise ValueError("slice duration must be non-negative")


@dataclass(frozen=True)
class PotentialSchedule:
    """Ordered slices of constant vector potential.

    The first and last slices are the asymptotic in/out regions and must
    carry kick 0; their durations are ignored. Zero-duration interior
    slices are allowed (back-to-back switches).
    """

    slices: tuple[Slice, ...] = field(default_factory=tuple)

    def __post_init__(self):
        sl = tuple(self.slices)
        if len(sl) < 2:
            raise ValueError("schedule needs at least in and out slices")
        if sl[0].kick != 0.0 or sl[-1].kick != 0.0:
            raise ValueError("first and last slices must have kick 0")
        object.__setattr__(self, "slices", sl)

    @classmethod
    def from_pairs(cls, pairs):
        """Build from (kick, duration) pairs, e.g. [(0, 0), (3, 0.5), (0, 0)]."""
        return cls(tuple(Slice(float(k), float(d)) for k, d in pairs))

    @property
    def n_interfaces(self):
        return len(self.slices) - 1

    def boundary_times(self):
        """Switch times with the first switch at t = 0."""
        t = [0.0]
        for s in self.slices[1:-1]:
            t.append(t[-1] + s.duration)
        return np.array(t)

    def reversed(self):
        rev = tuple(reversed(self.slices))
        return PotentialSchedule(rev)


@dataclass(frozen=True)
class AmplitudePair:
    """c-number mode amplitudes (f, g*) for one spin sector."""

    f: complex
    g_star: complex

    @property
    def norm_sq(self):
        return abs(self.f) ** 2 + abs(self.g_star) ** 2


def propagation2(energy_value, dt):
    """Free-evolution phases diag(e^{-iE dt}, e^{+iE dt}) for (a, bdag)."""
    if not (np.isfinite(energy_value) and np.isfinite(dt)):
        raise ValueError("energy and duration must be finite")
    phase = np.exp(-1j * energy_value * dt)
    return np.array([[phase, 0.0], [0.0, np.conj(phase)]])


def bispinor_basis(mass, p3):
    """4x4 unitary whose columns are (u+, u-, v+, v-) at one momentum."""
    return np.column_stack(
        [
            bispinor_u(mass, p3, "+"),
            bispinor_u(mass, p3, "-"),
            bispinor_v(mass, p3, "+"),
            bispinor_v(mass, p3, "-"),
        ]
    )


def transfer_full(mass, p3, q_from, q_to):
    """Interface matrix of all 16 bispinor overlaps across a kick switch.

    Parameters
    ----------
    mass : float
    p3 : array_like
        Canonical 3-momentum of the mode.
    q_from, q_to : float
        Kicks (applied along z) of the slices before and after the switch.

    Returns
    -------
    ndarray
        4x4 unitary, entry (r, c) = w_r(p + q_to ez)^dag w_c(p + q_from ez)
        over the basis order (u+, u-, v+, v-).
    """
    p = np.asarray(p3, dtype=float)
    if p.shape != (3,):
        raise ValueError("momentum must be a 3-vector")
    if not (np.isfinite(q_from) and np.isfinite(q_to)):
        raise ValueError("kicks must be finite")
    ez = np.array([0.0, 0.0, 1.0])
    basis_after = bispinor_basis(mass, p + q_to * ez)
    basis_before = bispinor_basis(mass, p + q_from * ez)
    return basis_after.conj().T @ basis_before


def reduce_longitudinal(m4, spin):
    """Extract the 2x2 (a, bdag) block of one spin from a 4x4 interface.

    Raises NonLongitudinalError when entries mixing the two spin sectors
    exceed MIXED_SPIN_TOL, which happens for transverse momentum.
    """
    m = np.asarray(m4, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    if spin not in _SPIN_SLOTS:
        raise ValueError("spin must be '+' or '-'")
    keep = _SPIN_SLOTS[spin]
    drop = _SPIN_SLOTS["-" if spin == "+" else "+"]
    mixing = max(
        np.max(np.abs(m[np.ix_(keep, drop)])), np.max(np.abs(m[np.ix_(drop, keep)]))
    )
    if mixing > MIXED_SPIN_TOL:
        raise NonLongitudinalError(
            f"spin sectors mix by {mixing:.3e}, need transverse momentum = 0"
        )
    return m[np.ix_(keep, keep)]


def interface_closed_form(mass, p, q):
    """Closed-form longitudinal 2x2 interface block (spin +).

    For a mode with momentum p along z crossing a kick switch 0 -> q the
    block is the real rotation
        [[ c, s],
         [-s, c]],
    c = (K'K + p'p) / (2 sqrt(E'E K'K)),
    s = (p E' - p' E - m q) / (2 sqrt(E'E K'K)),
    with p' = p + q, E = E(p), E' = E(p'), K = E + m, K' = E' + m.
    Serves as the independent oracle for reduce_longitudinal(transfer_full).
    """
    if not np.isfinite(q):
        raise ValueError("kick must be finite")
    e_from = energy(mass, (0.0, 0.0, p))
    e_to = energy(mass, (0.0, 0.0, p + q))
    k_from = e_from + mass
    k_to = e_to + mass
    den = 2.0 * np.sqrt(e_from * e_to * k_from * k_to)
    c = (k_to * k_from + (p + q) * p) / den
    s = (p * e_to - (p + q) * e_from - mass * q) / den
    return np.array([[c, s], [-s, c]], dtype=complex)


def _interface(mass, p, q_from, q_to, spin):
    full = transfer_full(mass, (0.0, 0.0, p), q_from, q_to)
    return reduce_longitudinal(full, spin)


def chain_steps(schedule, mass, p, spin="+"):
    """Cumulative 2x2 chain matrices, one entry per slice boundary.

    Entry k maps stripped in-region amplitudes to stripped amplitudes
    just after the k-th switch (inside slice k + 1).
    """
    slices = schedule.slices
    cum = _interface(mass, p, slices[0].kick, slices[1].kick, spin)
    steps = [cum]
    for k in range(1, len(slices) - 1):
        s = slices[k]
        e = energy(mass, (0.0, 0.0, p + s.kick))
        cum = (
            _interface(mass, p, s.kick, slices[k + 1].kick, spin)
            @ propagation2(e, s.duration)
            @ cum
        )
        steps.append(cum)
    return steps


def compose_chain(schedule, mass, p, spin="+"):
    """Total 2x2 Bogoliubov matrix of a schedule (in-region to out-region)."""
    return chain_steps(schedule, mass, p, spin)[-1]


def evolve_amplitudes(schedule, mass, p, spin="+", init=AmplitudePair(1.0, 0.0)):
    """Push c-number amplitudes through the chain.

    Returns one AmplitudePair per slice boundary, recorded just after
    each switch. |f|^2 + |g*|^2 is conserved (unitary chain).
    """
    vec = np.array([init.f, init.g_star], dtype=complex)
    out = []
    for cum in chain_steps(schedule, mass, p, spin):
        f, g = cum @ vec
        out.append(AmplitudePair(complex(f), complex(g)))
    return out
