"""Row assembly and delimited output for the CLI.

Numbers print with 12 significant digits, which keeps output stable
across runs (pure deterministic arithmetic upstream) while staying well
below the assertion tolerances of the verification suites.
"""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from . import fockspace
from .transfer import PotentialSchedule, Slice, chain_steps

EVOLVE_COLUMNS = (
    "time",
    "slice_index",
    "kick_q",
    "p_vac",
    "p_electron",
    "p_positron",
    "p_pair",
    "f_abs",
    "g_abs",
)

SWEEP_COLUMNS = (
    "momentum",
    "final_p_vac",
    "interior_p_pair",
    "barrier_diag_norm",
    "sub_threshold",
)


def evolve_rows(schedule, mass, p, spin, state0, amp0):
    """Per-boundary trace: Fock probabilities and c-number amplitude moduli.

    Row k describes the system just after switch k, inside slice k + 1,
    whose kick it reports. Probabilities come from lifting the cumulative
    chain matrix and applying it to the initial Fock state.
    """
    steps = chain_steps(schedule, mass, p, spin)
    times = schedule.boundary_times()
    rows = []
    for k, cum in enumerate(steps):
        probs = fockspace.probabilities(fockspace.lift(cum) @ state0)
        f, g = cum @ amp0
        rows.append(
            {
                "time": float(times[k]),
                "slice_index": k + 1,
                "kick_q": schedule.slices[k + 1].kick,
                "p_vac": float(probs[0]),
                "p_electron": float(probs[1]),
                "p_positron": float(probs[2]),
                "p_pair": float(probs[3]),
                "f_abs": float(abs(f)),
                "g_abs": float(abs(g)),
            }
        )
    return rows


def first_pulse_schedule(schedule):
    """Sub-schedule spanning the first contiguous run of nonzero kicks.

    Returns None when the schedule never switches the field on.
    """
    slices = schedule.slices
    start = None
    for k, s in enumerate(slices):
        if s.kick != 0.0 and start is None:
            start = k
        elif s.kick == 0.0 and start is not None:
            return PotentialSchedule((Slice(0.0),) + slices[start:k] + (Slice(0.0),))
    return None


def sweep_rows(schedule, mass, grid_values, spin):
    """Detuning table over a momentum grid against a fixed schedule."""
    pulse = first_pulse_schedule(schedule)
    vacuum = fockspace.basis_state("vacuum")
    rows = []
    for p in grid_values:
        steps = chain_steps(schedule, mass, float(p), spin)
        pair_probs = [
            float(fockspace.probabilities(fockspace.lift(cum) @ vacuum)[3])
            for cum in steps
        ]
        final_probs = fockspace.probabilities(fockspace.lift(steps[-1]) @ vacuum)
        interior_pair = max(pair_probs[:-1]) if len(pair_probs) > 1 else pair_probs[0]
        if pulse is None:
            diag_norm = 2.0  # no pulse, the composed interface is the identity
        else:
            u_pulse = chain_steps(pulse, mass, float(p), spin)[-1]
            diag_norm = float(abs(u_pulse[0, 0]) + abs(u_pulse[1, 1]))
        rows.append(
            {
                "momentum": float(p),
                "final_p_vac": float(final_probs[0]),
                "interior_p_pair": interior_pair,
                "barrier_diag_norm": diag_norm,
                "sub_threshold": False,
            }
        )
    return rows


def sub_threshold_rows(grid_values):
    """Sweep rows for designs below the pair threshold (no metrics)."""
    nan = float("nan")
    return [
        {
            "momentum": float(p),
            "final_p_vac": nan,
            "interior_p_pair": nan,
            "barrier_diag_norm": nan,
            "sub_threshold": True,
        }
        for p in grid_values
    ]


def format_value(value):
    """Fixed-width-free deterministic cell formatting (12 significant digits)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{value:.12g}"
    return str(value)


def render_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row[c]) for c in columns])
    return buf.getvalue()


def _json_cell(value):
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return None
        return float(f"{value:.12g}")  # match the 12-digit printing contract
    if isinstance(value, np.integer):
        return int(value)
    return value


def render_json(columns, rows):
    payload = [{c: _json_cell(row[c]) for c in columns} for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def render_table(columns, rows, fmt):
    if fmt == "json":
        return render_json(columns, rows)
    return render_csv(columns, rows)


def design_summary_lines(design, report):
    """Human-readable key/value summary of a design and its report."""
    items = design_summary_items(design, report)
    width = max(len(k) for k, _ in items)
    return [f"{k.ljust(width)} = {format_value(v)}" for k, v in items]


def design_summary_items(design, report):
    return [
        ("mass", design.mass),
        ("kick", design.kick),
        ("branch", design.branch),
        ("n_barrier", design.n_barrier),
        ("n_interior", design.n_interior),
        ("momentum", design.momentum),
        ("energy_interior", design.energy_interior),
        ("energy_barrier", design.energy_barrier),
        ("dt_barrier", design.dt_barrier),
        ("dt_interior", design.dt_interior),
        ("degenerate", design.degenerate),
        ("barrier_diagonal_norm", report.barrier_diagonal_norm),
        ("trap_identity_deviation", report.trap_identity_deviation),
        ("pair_probability_interior", report.pair_probability_interior),
        ("vacuum_probability_final", report.vacuum_probability_final),
        ("one_particle_transparency_deviation", report.one_particle_transparency_deviation),
    ]


def render_design(design, report, fmt):
    items = design_summary_items(design, report)
    if fmt == "json":
        payload = {k: _json_cell(v) for k, v in items}
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("key", "value"))
    for k, v in items:
        writer.writerow((k, format_value(v)))
    return buf.getvalue()
