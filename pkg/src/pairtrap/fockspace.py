"""Single-mode electron-positron Fock space and Bogoliubov lifts.

The mode carries at most one electron (a) and one positron (b), so the
state space is four dimensional with basis order

    0: vacuum, 1: electron adag|0>, 2: positron bdag|0>, 3: pair adag bdag |0>

(the pair state uses adag to the left of bdag). A 2x2 Bogoliubov matrix
u acting on (a, bdag) lifts to a unitary U on this space satisfying

    u @ (a, bdag)^T = U^dag (a, bdag)^T U

up to the global phase fixed by the parametrized generator below.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import su2param

BASIS_LABELS = ("vacuum", "electron", "positron", "pair")
NORMALIZATION_TOL = 1e-8


class NotNormalizedError(ValueError):
    """Fock vector norm is too far from 1."""


class Ladder(NamedTuple):
    a: np.ndarray
    a_dag: np.ndarray
    b: np.ndarray
    b_dag: np.ndarray


def ladder_matrices():
    """Fermionic ladder operators as 4x4 matrices in the fixed basis.

    Signs follow from anticommutation and the pair-state order, e.g.
    bdag|electron> = bdag adag |0> = -adag bdag |0> = -|pair>.
    """
    a_dag = np.zeros((4, 4), dtype=complex)
    a_dag[1, 0] = 1.0
    a_dag[3, 2] = 1.0
    b_dag = np.zeros((4, 4), dtype=complex)
    b_dag[2, 0] = 1.0
    b_dag[3, 1] = -1.0
    return Ladder(a_dag.conj().T, a_dag, b_dag.conj().T, b_dag)


_LAD = ladder_matrices()
_NUM_A = _LAD.a_dag @ _LAD.a
_NUM_B = _LAD.b_dag @ _LAD.b
_PAIR_PROJ = _LAD.a_dag @ _LAD.b_dag @ _LAD.b @ _LAD.a
_AB = _LAD.a @ _LAD.b
_ADAG_BDAG = _LAD.a_dag @ _LAD.b_dag

# Hermitian generator basis: number difference, the two pair-mixing
# quadratics and the (negative) total number.
_G0 = _NUM_A - _NUM_B
_G1 = _LAD.a @ _LAD.b + _LAD.b_dag @ _LAD.a_dag
_G2 = 1j * (_LAD.a @ _LAD.b - _LAD.b_dag @ _LAD.a_dag)
_G3 = -_NUM_A - _NUM_B


def generator(params):
    """Hermitian generator xi0 G0 + xi . (G1, G2, G3) of the lift."""
    xi1, xi2, xi3 = params.xi
    return params.xi0 * _G0 + xi1 * _G1 + xi2 * _G2 + xi3 * _G3


def u_hat_exponential(params):
    """Lifted unitary exp(i generator), via exact Hermitian eigendecomposition."""
    h = generator(params)
    w, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * w)) @ vecs.conj().T


def u_hat_closed_form(params):
    """Analytic form of the lifted unitary.

    Assembled from the same operator blocks as the exponential route but
    without any matrix exponential, so the two serve as independent
    cross-checks of each other.
    """
    xi0 = params.xi0
    xi1, xi2, xi3 = params.xi
    norm = params.xi_norm
    cos_norm = np.cos(norm)
    sinc = np.sinc(norm / np.pi)
    core = (
        (cos_norm + 1j * xi3 * sinc) * (np.eye(4, dtype=complex) - _NUM_A - _NUM_B)
        + np.exp(1j * xi0) * _NUM_A
        + np.exp(-1j * xi0) * _NUM_B
        + 2.0 * (cos_norm - np.cos(xi0)) * _PAIR_PROJ
        + 1j * sinc * ((xi1 + 1j * xi2) * _AB - (xi1 - 1j * xi2) * _ADAG_BDAG)
    )
    return np.exp(-1j * xi3) * core


def lift(u2):
    """Lift a 2x2 Bogoliubov matrix to the 4-state Fock space."""
    return u_hat_closed_form(su2param.decompose(u2))


def conjugation_check(u2, u_hat):
    """Max deviation of the defining conjugation property.

    Compares u11 a + u12 bdag against U^dag a U and u21 a + u22 bdag
    against U^dag bdag U, entrywise.
    """
    u2 = np.asarray(u2, dtype=complex)
    u_hat = np.asarray(u_hat, dtype=complex)
    dev_a = (
        u2[0, 0] * _LAD.a + u2[0, 1] * _LAD.b_dag - u_hat.conj().T @ _LAD.a @ u_hat
    )
    dev_b = (
        u2[1, 0] * _LAD.a + u2[1, 1] * _LAD.b_dag - u_hat.conj().T @ _LAD.b_dag @ u_hat
    )
    return float(max(np.max(np.abs(dev_a)), np.max(np.abs(dev_b))))


def basis_state(label):
    """Unit Fock vector for one of the BASIS_LABELS names."""
    if label not in BASIS_LABELS:
        raise ValueError(f"unknown basis state {label!r}")
    vec = np.zeros(4, dtype=complex)
    vec[BASIS_LABELS.index(label)] = 1.0
    return vec


def probabilities(state):
    """Squared moduli of a Fock vector in the fixed basis order.

    Raises NotNormalizedError when the norm deviates from 1 by more than
    NORMALIZATION_TOL.
    """
    vec = np.asarray(state, dtype=complex)
    if vec.shape != (4,):
        raise ValueError("Fock vector must have 4 components")
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise NotNormalizedError(f"norm {norm!r} deviates from 1")
    return np.abs(vec) ** 2
