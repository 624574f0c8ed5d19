"""Interface transfer matrices, phase propagation, and amplitude chains."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pairtrap import (
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
from pairtrap.transfer import chain_steps


def closed_form_entries(mass, p, q):
    """Independent oracle for the spin-aligned interface block.

    Written directly from the overlap of on-shell columns on either
    side of an instantaneous longitudinal kick; kept self-contained so
    the package implementation is never in the loop.
    """
    pq = p + q
    e0 = np.sqrt(mass * mass + p * p)
    e1 = np.sqrt(mass * mass + pq * pq)
    k0 = e0 + mass
    k1 = e1 + mass
    den = 2.0 * np.sqrt(e0 * e1 * k0 * k1)
    c = (k1 * k0 + pq * p) / den
    s = (p * e1 - pq * e0 - mass * q) / den
    return c, s


def test_interface_matches_independent_oracle():
    rng = np.random.default_rng(21)
    worst = 0.0
    for _ in range(500):
        mass = rng.uniform(0.2, 5.0)
        p = rng.uniform(-5.0, 5.0)
        q = rng.uniform(-6.0, 6.0)
        c, s = closed_form_entries(mass, p, q)
        expected = np.array([[c, s], [-s, c]], dtype=complex)
        got = interface_closed_form(mass, p, q)
        worst = max(worst, np.max(np.abs(got - expected)))
        # the rotation must be orthogonal on the nose
        assert abs(c * c + s * s - 1.0) < 1e-12
    assert worst < 1e-12


def test_full_matrix_reduces_to_closed_form():
    rng = np.random.default_rng(22)
    for _ in range(300):
        mass = rng.uniform(0.2, 5.0)
        p = rng.uniform(-5.0, 5.0)
        q = rng.uniform(-6.0, 6.0)
        m4 = transfer_full(mass, (0.0, 0.0, p), 0.0, q)
        block = reduce_longitudinal(m4, "+")
        c, s = closed_form_entries(mass, p, q)
        assert_allclose(block, [[c, s], [-s, c]], rtol=0.0, atol=1e-12)


def test_spin_minus_block_flips_rotation_sense():
    mass, p, q = 1.3, 0.7, -2.9
    m4 = transfer_full(mass, (0.0, 0.0, p), 0.0, q)
    plus = reduce_longitudinal(m4, "+")
    minus = reduce_longitudinal(m4, "-")
    assert_allclose(minus, plus.T, atol=1e-12)


def test_zero_kick_is_identity():
    rng = np.random.default_rng(23)
    for _ in range(100):
        mass = rng.uniform(0.2, 5.0)
        p3 = rng.uniform(-5.0, 5.0, size=3)
        m4 = transfer_full(mass, p3, 1.5, 1.5)
        assert np.max(np.abs(m4 - np.eye(4))) < 1e-14


def test_transfer_is_unitary_and_composes():
    rng = np.random.default_rng(24)
    for _ in range(200):
        mass = rng.uniform(0.2, 5.0)
        p3 = rng.uniform(-5.0, 5.0, size=3)
        q1, q2, q3 = rng.uniform(-6.0, 6.0, size=3)
        m = transfer_full(mass, p3, q1, q2)
        assert np.max(np.abs(m.conj().T @ m - np.eye(4))) < 1e-12
        # jumping q1->q3 equals q1->q2 then q2->q3, with no tolerance slack
        direct = transfer_full(mass, p3, q1, q3)
        stacked = transfer_full(mass, p3, q2, q3) @ m
        assert np.max(np.abs(direct - stacked)) < 1e-12


def test_basis_columns_order():
    basis = bispinor_basis(1.0, (0.0, 0.0, 0.4))
    assert basis.shape == (4, 4)
    assert np.max(np.abs(basis.conj().T @ basis - np.eye(4))) < 1e-12


def test_transverse_momentum_mixes_spins():
    m4 = transfer_full(1.0, (0.8, 0.0, 0.3), 0.0, 2.0)
    with pytest.raises(NonLongitudinalError):
        reduce_longitudinal(m4, "+")


def test_propagation_phases():
    e = 1.0704662693192697  # sqrt(1 + p*^2) at the tuned trap root
    half = propagation2(e, np.pi / e)
    assert_allclose(half, -np.eye(2), atol=1e-15)
    full = propagation2(e, 2.0 * np.pi / e)
    assert_allclose(full, np.eye(2), atol=1e-14)
    m = propagation2(2.0, 0.3)
    assert_allclose(m[0, 0], np.exp(-0.6j), atol=1e-15)
    assert_allclose(m[1, 1], np.exp(+0.6j), atol=1e-15)
    assert m[0, 1] == 0.0 and m[1, 0] == 0.0


def test_schedule_validation():
    with pytest.raises(ValueError):
        PotentialSchedule(slices=(Slice(0.0, 0.0),))
    with pytest.raises(ValueError):
        # first region must be field-free
        PotentialSchedule(slices=(Slice(1.0, 0.0), Slice(0.0, 0.0)))
    with pytest.raises(ValueError):
        PotentialSchedule(slices=(Slice(0.0, 0.0), Slice(1.0, -0.5), Slice(0.0, 0.0)))
    sched = PotentialSchedule.from_pairs([(0.0, 0.0), (3.0, 0.5), (0.0, 0.0)])
    assert sched.n_interfaces == 2
    assert_allclose(sched.boundary_times(), [0.0, 0.5])


def test_schedule_reversal():
    sched = PotentialSchedule.from_pairs(
        [(0.0, 0.0), (2.0, 0.3), (-1.0, 0.7), (0.0, 0.0)]
    )
    rev = sched.reversed()
    kicks = [s.kick for s in rev.slices]
    assert kicks == [0.0, -1.0, 2.0, 0.0]


def test_chain_steps_shape_and_consistency():
    sched = PotentialSchedule.from_pairs(
        [(0.0, 0.0), (3.0, 0.5), (1.0, 0.2), (0.0, 0.0)]
    )
    steps = chain_steps(sched, 1.0, -0.4)
    assert len(steps) == sched.n_interfaces
    total = compose_chain(sched, 1.0, -0.4)
    assert_allclose(total, steps[-1], atol=0)
    assert np.max(np.abs(total.conj().T @ total - np.eye(2))) < 1e-12


def test_amplitudes_through_tuned_barrier():
    # One tuned barrier swaps the amplitude pair up to a phase:
    # (1, 0) -> (0, i).  Values frozen from the closed form at the root
    # p = (-3 + sqrt(5))/2 of p^2 + 3p + 1 with dt = pi/(2 E(p+3)).
    p = -0.3819660112501051
    dt = 0.5604948279348484
    sched = PotentialSchedule.from_pairs([(0.0, 0.0), (3.0, dt), (0.0, 0.0)])
    pairs = evolve_amplitudes(sched, 1.0, p)
    final = pairs[-1]
    assert abs(final.f) < 1e-10
    assert_allclose(final.g_star, 1j, rtol=0.0, atol=1e-10)
    assert_allclose(final.norm_sq, 1.0, rtol=0.0, atol=1e-12)


def test_amplitudes_accept_custom_seed():
    sched = PotentialSchedule.from_pairs([(0.0, 0.0), (2.5, 0.4), (0.0, 0.0)])
    seeded = evolve_amplitudes(sched, 1.0, 0.3, init=AmplitudePair(0.0, 1.0))
    unit = evolve_amplitudes(sched, 1.0, 0.3)
    m = compose_chain(sched, 1.0, 0.3)
    assert_allclose([seeded[-1].f, seeded[-1].g_star], m @ [0.0, 1.0], atol=1e-14)
    assert_allclose([unit[-1].f, unit[-1].g_star], m @ [1.0, 0.0], atol=1e-14)


def test_norm_is_conserved_along_chains():
    rng = np.random.default_rng(25)
    for _ in range(100):
        mass = rng.uniform(0.2, 5.0)
        p = rng.uniform(-5.0, 5.0)
        pairs = [(0.0, 0.0)]
        for _ in range(rng.integers(1, 5)):
            pairs.append((rng.uniform(-6.0, 6.0), rng.uniform(0.0, 3.0)))
        pairs.append((0.0, 0.0))
        sched = PotentialSchedule.from_pairs(pairs)
        for pair in evolve_amplitudes(sched, mass, p, spin="-"):
            assert abs(pair.norm_sq - 1.0) < 1e-12
