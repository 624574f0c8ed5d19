"""Free-fermion kinematics for a single momentum mode.

Natural units (c = hbar = 1) throughout. Bispinors are unit-norm
four-component columns in a fixed chiral component order; the gamma
matrices below are the chiral set whose momentum-space Dirac operator
annihilates exactly these columns, which pins every sign convention
used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SPIN_LABELS = ("+", "-")

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)
_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

GAMMA0 = np.block([[_Z2, _I2], [_I2, _Z2]])
# Spatial gammas with the sign that makes the bispinor columns exact
# zero modes of the operators in dirac_residual.
GAMMA_SPATIAL = tuple(np.block([[_Z2, -s], [s, _Z2]]) for s in (_SX, _SY, _SZ))


def _check_mass_momentum(mass, p3):
    p = np.asarray(p3, dtype=float)
    if p.shape != (3,):
        raise ValueError("momentum must be a 3-vector")
    if not (np.isfinite(mass) and np.isfinite(p).all()):
        raise ValueError("mass and momentum must be finite")
    if mass <= 0.0:
        raise ValueError("mass must be positive")
    return float(mass), p


def _check_spin(spin):
    if spin not in SPIN_LABELS:
        raise ValueError("spin must be '+' or '-'")
    return spin


def energy(mass, p3):
    """Relativistic on-shell energy sqrt(|p|^2 + mass^2).

    Parameters
    ----------
    mass : float
        Fermion mass, must be positive.
    p3 : array_like
        Cartesian 3-momentum (px, py, pz).

    Returns
    -------
    float
    """
    mass, p = _check_mass_momentum(mass, p3)
    return float(np.sqrt(p @ p + mass * mass))


def bispinor_u(mass, p3, spin):
    """Positive-frequency (electron-type) unit bispinor.

    Parameters
    ----------
    mass : float
    p3 : array_like
        Cartesian 3-momentum.
    spin : str
        Spin label, "+" or "-".

    Returns
    -------
    ndarray
        Complex column of length 4 with unit norm.
    """
    mass, p = _check_mass_momentum(mass, p3)
    _check_spin(spin)
    px, py, pz = p
    e = energy(mass, p)
    k = e + mass
    norm = 1.0 / (2.0 * np.sqrt(k * e))
    pp = px + 1j * py
    pm = px - 1j * py
    if spin == "+":
        col = np.array([k + pz, pp, k - pz, -pp], dtype=complex)
    else:
        col = np.array([pm, k - pz, -pm, k + pz], dtype=complex)
    return norm * col


def bispinor_v(mass, p3, spin):
    """Negative-frequency (positron-type) unit bispinor.

    Same argument conventions as bispinor_u. Together the four columns
    u(p, +), u(p, -), v(p, +), v(p, -) form an orthonormal basis of C^4.
    """
    mass, p = _check_mass_momentum(mass, p3)
    _check_spin(spin)
    px, py, pz = p
    e = energy(mass, p)
    k = e + mass
    norm = 1.0 / (2.0 * np.sqrt(k * e))
    pp = px + 1j * py
    pm = px - 1j * py
    if spin == "+":
        col = np.array([-k + pz, pp, k + pz, pp], dtype=complex)
    else:
        col = np.array([pm, -k - pz, pm, k - pz], dtype=complex)
    return norm * col


def dirac_residual(column, kind, mass, p3):
    """Norm of the momentum-space Dirac operator applied to a bispinor.

    For kind "u" the operator is gamma0*E - gamma.p - m, for kind "v" it
    is gamma0*E + gamma.p + m. The v-type sign is the one the columns of
    bispinor_v actually satisfy in this chiral basis (their plane wave
    carries the opposite spatial momentum), fixed empirically rather
    than assumed.

    Returns
    -------
    float
        Euclidean norm of the residual, zero for on-shell bispinors.
    """
    mass, p = _check_mass_momentum(mass, p3)
    col = np.asarray(column, dtype=complex)
    if col.shape != (4,):
        raise ValueError("bispinor must have 4 components")
    e = energy(mass, p)
    slash = sum(g * pi for g, pi in zip(GAMMA_SPATIAL, p))
    if kind == "u":
        op = GAMMA0 * e - slash - mass * np.eye(4)
    elif kind == "v":
        op = GAMMA0 * e + slash + mass * np.eye(4)
    else:
        raise ValueError("kind must be 'u' or 'v'")
    return float(np.linalg.norm(op @ col))


@dataclass(frozen=True)
class ModeContext:
    """Fixed canonical momentum mode: mass, 3-momentum and spin label."""

    mass: float
    momentum: tuple[float, float, float]
    spin: str = "+"

    def __post_init__(self):
        mass, p = _check_mass_momentum(self.mass, self.momentum)
        _check_spin(self.spin)
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "momentum", tuple(float(x) for x in p))

    @property
    def p3(self):
        return np.array(self.momentum, dtype=float)

    @property
    def energy(self):
        return energy(self.mass, self.momentum)
