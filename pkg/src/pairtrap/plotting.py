"""Figure rendering for evolution traces and momentum sweeps.

Files are written through the Agg backend; the output format follows
the file suffix (pdf and svg stay vector graphics).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_PROB_STYLE = (
    ("p_vac", "vacuum", "tab:blue"),
    ("p_electron", "electron", "tab:green"),
    ("p_positron", "positron", "tab:orange"),
    ("p_pair", "pair", "tab:red"),
)


def _step_series(times, values, initial, pad):
    xs = np.concatenate(([times[0] - pad], times, [times[-1] + pad]))
    ys = np.concatenate(([initial], values, [values[-1]]))
    return xs, ys


def evolution_figure(rows, initial_probs, schedule=None):
    """Piecewise-constant probability trace over the slice boundaries.

    rows: evolve-table dicts (see reporting.EVOLVE_COLUMNS). The state is
    constant between switches, so every channel is drawn as a step held
    from each boundary to the next.
    """
    times = np.array([row["time"] for row in rows])
    span = times[-1] - times[0]
    pad = 0.1 * span if span > 0 else 1.0

    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    for idx, (key, label, color) in enumerate(_PROB_STYLE):
        values = np.array([row[key] for row in rows])
        xs, ys = _step_series(times, values, initial_probs[idx], pad)
        ax.step(xs, ys, where="post", label=label, color=color, lw=1.6)

    if schedule is not None:
        # shade the field-on windows
        t = schedule.boundary_times()
        for k, s in enumerate(schedule.slices[1:-1], start=1):
            if s.kick != 0.0:
                ax.axvspan(t[k - 1], t[k], color="0.85", zorder=0)

    ax.set_xlabel("time")
    ax.set_ylabel("probability")
    ax.set_ylim(-0.05, 1.1)
    ax.legend(loc="center right", fontsize=9)
    fig.tight_layout()
    return fig


def sweep_figure(rows):
    """Detuning curves over the momentum grid."""
    momenta = np.array([row["momentum"] for row in rows])
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(momenta, [row["final_p_vac"] for row in rows], label="final vacuum prob.", lw=1.6)
    ax.plot(momenta, [row["interior_p_pair"] for row in rows], label="interior pair prob.", lw=1.6)
    ax.plot(
        momenta,
        [row["barrier_diag_norm"] for row in rows],
        label="pulse diagonal norm",
        lw=1.2,
        ls="--",
        color="0.4",
    )
    ax.set_xlabel("longitudinal momentum")
    ax.set_ylabel("probability / norm")
    ax.legend(fontsize=9)
    fig.tight_layout()
    return fig


def save_figure(fig, path):
    fig.savefig(path)
    plt.close(fig)
