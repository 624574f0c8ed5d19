"""Trap tuning conditions, the worked design point, and detuning checks."""

import dataclasses

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pairtrap import (
    PotentialSchedule,
    Slice,
    SubThresholdError,
    design_trap,
    is_degenerate,
    momentum_roots,
    time_crystal,
    trap_matrix,
    verify_trap,
)
from pairtrap.trapdesign import barrier_matrix, barrier_schedule, crystal_schedule

# Frozen oracle values for mass=1, kick=3: roots of p^2 + 3p + 1 = 0 and
# the matching on-shell energies and quantized durations, all computed
# independently from the quadratic formula and sqrt.
ROOT_INNER = -0.3819660112501051
ROOT_OUTER = -2.618033988749895
E_INTERIOR = 1.0704662693192697
E_BARRIER = 2.8025170768881473
DT_BARRIER = 0.5604948279348484
DT_INTERIOR = 2.934789020103915


def test_roots_frozen_values():
    inner, outer = momentum_roots(1.0, 3.0)
    assert_allclose(inner, ROOT_INNER, rtol=0.0, atol=1e-15)
    assert_allclose(outer, ROOT_OUTER, rtol=0.0, atol=1e-15)
    assert abs(inner) < abs(outer)


def test_roots_satisfy_tuning_condition():
    rng = np.random.default_rng(51)
    for _ in range(200):
        mass = rng.uniform(0.2, 5.0)
        q = rng.uniform(2.0 * mass, 6.0 * mass) * rng.choice([-1.0, 1.0])
        for p in momentum_roots(mass, q):
            assert abs(mass * mass + p * (p + q)) < 1e-10


def test_roots_mirror_under_kick_sign():
    inner, outer = momentum_roots(1.0, -3.0)
    assert_allclose(inner, -ROOT_INNER, atol=1e-15)
    assert_allclose(outer, -ROOT_OUTER, atol=1e-15)


def test_threshold_behaviour():
    with pytest.raises(SubThresholdError):
        momentum_roots(1.0, 1.9)
    with pytest.raises(SubThresholdError):
        momentum_roots(1.0, -1.9)
    with pytest.raises(SubThresholdError, match="2\\*mass"):
        design_trap(1.0, 0.5)
    # exactly at threshold both roots collapse onto -q/2
    assert momentum_roots(1.0, 2.0) == (-1.0, -1.0)
    assert is_degenerate(1.0, 2.0)
    assert not is_degenerate(1.0, 2.0000001)


def test_worked_design_point():
    design = design_trap(1.0, 3.0, branch="+", n_barrier=0, n_interior=0)
    assert_allclose(design.momentum, ROOT_INNER, atol=1e-15)
    assert_allclose(design.energy_interior, E_INTERIOR, atol=1e-12)
    assert_allclose(design.energy_barrier, E_BARRIER, atol=1e-12)
    assert_allclose(design.dt_barrier, DT_BARRIER, atol=1e-12)
    assert_allclose(design.dt_interior, DT_INTERIOR, atol=1e-12)
    assert not design.degenerate
    kicks = [s.kick for s in design.schedule.slices]
    durations = [s.duration for s in design.schedule.slices]
    assert kicks == [0.0, 3.0, 0.0, 3.0, 0.0]
    assert_allclose(durations, [0.0, DT_BARRIER, DT_INTERIOR, DT_BARRIER, 0.0])


def test_branch_selects_other_root():
    design = design_trap(1.0, 3.0, branch="-")
    assert_allclose(design.momentum, ROOT_OUTER, atol=1e-15)
    assert verify_trap(design).passed()


def test_quantization_integers_scale_durations():
    base = design_trap(1.0, 3.0)
    assert_allclose(design_trap(1.0, 3.0, n_barrier=1).dt_barrier, 3.0 * base.dt_barrier)
    assert_allclose(design_trap(1.0, 3.0, n_interior=1).dt_interior, 3.0 * base.dt_interior)
    # higher integers stay tuned
    report = verify_trap(design_trap(1.0, 3.0, n_barrier=2, n_interior=1))
    assert report.max_deviation() < 1e-9


def test_barrier_matrix_is_swap_like():
    design = design_trap(1.0, 3.0)
    expected = np.array([[0.0, 1j], [1j, 0.0]])
    assert np.max(np.abs(barrier_matrix(design) - expected)) < 1e-10
    # odd n_barrier flips the overall sign
    odd = design_trap(1.0, 3.0, n_barrier=1)
    assert np.max(np.abs(barrier_matrix(odd) + expected)) < 1e-10


def test_trap_composes_to_identity():
    design = design_trap(1.0, 3.0)
    assert np.max(np.abs(trap_matrix(design) - np.eye(2))) < 1e-10
    report = verify_trap(design)
    assert report.max_deviation() < 1e-10
    assert report.passed()


def test_report_fields_reflect_their_criteria():
    design = design_trap(1.0, 3.0)
    report = verify_trap(design)
    assert report.barrier_diagonal_norm < 1e-10
    assert report.trap_identity_deviation < 1e-10
    assert_allclose(report.pair_probability_interior, 1.0, atol=1e-10)
    assert_allclose(report.vacuum_probability_final, 1.0, atol=1e-10)
    assert report.one_particle_transparency_deviation < 1e-10


def test_spin_minus_trap_works_too():
    design = design_trap(1.0, 3.0)
    assert verify_trap(design, spin="-").max_deviation() < 1e-10


def test_detuned_barrier_is_detected():
    design = design_trap(1.0, 3.0)
    detuned = dataclasses.replace(design, dt_barrier=1.01 * design.dt_barrier)
    report_dev = verify_trap(detuned).barrier_diagonal_norm
    assert report_dev > 1e-3


def test_detuned_interior_is_detected():
    design = design_trap(1.0, 3.0)
    bad = PotentialSchedule(
        (
            Slice(0.0),
            Slice(design.kick, design.dt_barrier),
            Slice(0.0, 1.1 * design.dt_interior),
            Slice(design.kick, design.dt_barrier),
            Slice(0.0),
        )
    )
    detuned = dataclasses.replace(design, schedule=bad)
    assert verify_trap(detuned).trap_identity_deviation > 0.1


def test_crystal_schedule_layout():
    design = design_trap(1.0, 3.0)
    sched = crystal_schedule(design, 3)
    # in + 3 blocks of 3 + 2 gaps + out
    assert len(sched.slices) == 13
    gaps = [s for s in sched.slices if s.kick == 0.0 and s.duration > 0.0]
    assert len(gaps) == 5  # 3 interiors + 2 inter-block gaps
    with pytest.raises(ValueError):
        crystal_schedule(design, 0)


def test_crystal_identity_for_many_periods():
    design = design_trap(1.0, 3.0)
    for periods in (1, 2, 3, 10):
        dev = np.max(np.abs(time_crystal(design, periods) - np.eye(2)))
        assert dev < 1e-9


def test_barrier_schedule_endpoints_field_free():
    design = design_trap(1.0, 3.0)
    sub = barrier_schedule(design)
    assert sub.slices[0].kick == 0.0 and sub.slices[-1].kick == 0.0
    assert sub.slices[1].kick == design.kick
