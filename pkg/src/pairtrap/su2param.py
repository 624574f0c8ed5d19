"""Canonical parametrization of 2x2 unitaries.

Every U in U(2) factors as

    U = exp(i xi0) * (cos|xi| I - i (xi . sigma) sin|xi| / |xi|)

with real xi0 and a real 3-vector xi. decompose() returns the canonical
branch: xi0 in (-pi/2, pi/2] read off the determinant phase, |xi| in
[0, pi]. At |xi| = pi the direction drops out of the matrix, so the
representative (-pi, 0, 0) is returned (first nonzero component
negative, matching the sign the pair-trap barrier produces).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNITARY_TOL = 1e-8
_DIRECTION_TOL = 1e-13

PAULI = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)


class NotUnitaryError(ValueError):
    """Input matrix is too far from unitary to decompose."""


def unitarity_deviation(m):
    """Max-abs entry of M^dag M - I."""
    m = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


@dataclass(frozen=True, eq=False)
class Su2Params:
    """Phase xi0 and rotation vector xi of a 2x2 unitary.

    The type itself only demands finite entries; the canonical branch
    constraints (xi0 in (-pi/2, pi/2], |xi| <= pi) hold for decompose()
    output but generator arguments may be arbitrary.
    """

    xi0: float
    xi: np.ndarray

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=float)
        if xi.shape != (3,):
            raise ValueError("xi must be a real 3-vector")
        if not (np.isfinite(self.xi0) and np.isfinite(xi).all()):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "xi0", float(self.xi0))
        object.__setattr__(self, "xi", xi)

    @property
    def xi_norm(self):
        return float(np.linalg.norm(self.xi))


def to_matrix(params):
    """Evaluate the parametrized unitary.

    sin|xi|/|xi| is evaluated as a sinc so xi = 0 is exact.
    """
    norm = params.xi_norm
    # np.sinc(x) = sin(pi x)/(pi x)
    sinc = np.sinc(norm / np.pi)
    su2 = np.cos(norm) * np.eye(2, dtype=complex)
    for component, sigma in zip(params.xi, PAULI):
        su2 = su2 - 1j * component * sinc * sigma
    return np.exp(1j * params.xi0) * su2


def decompose(u2):
    """Canonical-branch parameters of a 2x2 unitary.

    Raises NotUnitaryError when the unitarity deviation exceeds
    UNITARY_TOL. Round trips: to_matrix(decompose(U)) == U entrywise.
    """
    u = np.asarray(u2, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    dev = unitarity_deviation(u)
    if dev > UNITARY_TOL:
        raise NotUnitaryError(f"unitarity deviation {dev:.3e} exceeds {UNITARY_TOL:g}")
    # det U = exp(2 i xi0); numpy angle lands in (-pi, pi] so xi0 is
    # already on the canonical branch (-pi/2, pi/2].
    xi0 = 0.5 * np.angle(u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0])
    v = np.exp(-1j * xi0) * u
    # v = a0 I - i (a . sigma) with all coefficients real
    a0 = 0.5 * (v[0, 0] + v[1, 1]).real
    avec = np.array(
        [
            (0.5j * (v[0, 1] + v[1, 0])).real,
            (0.5 * (v[1, 0] - v[0, 1])).real,
            (0.5j * (v[0, 0] - v[1, 1])).real,
        ]
    )
    sin_norm = float(np.linalg.norm(avec))
    angle = float(np.arctan2(sin_norm, a0))  # in [0, pi]
    if sin_norm < _DIRECTION_TOL:
        # sin|xi| = 0: either the identity branch or the ambiguous
        # |xi| = pi point, where any direction gives the same matrix.
        xi = np.array([-np.pi, 0.0, 0.0]) if a0 < 0.0 else np.zeros(3)
    else:
        xi = (angle / sin_norm) * avec
    return Su2Params(float(xi0), xi)
