"""Command-line front end: design, evolve, sweep, verify.

Exit codes: 0 success, 2 configuration problems, 3 sub-threshold trap
designs (|kick| < 2 mass), 4 failed verification or trap criteria.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fockspace, plotting, reporting, trapdesign, verification
from .config import (
    ConfigError,
    MomentumGrid,
    RunConfig,
    initial_amplitudes,
    initial_state_vector,
    load_config_file,
    overlay_flags,
)
from .trapdesign import SubThresholdError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SUBTHRESHOLD = 3
EXIT_VERIFY = 4


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pairtrap",
        description="Pair-trap design and piecewise-constant Dirac mode evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML/JSON config file")
    common.add_argument("--output", help="write the table/report to this path")
    common.add_argument("--format", choices=("csv", "json"), help="table format (default csv)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--plot", help="also render a figure to this path (pdf/svg/png)")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--mass", type=float, help="fermion mass (natural units)")
    params.add_argument("--kick", type=float, help="pulse kick q = eA")
    params.add_argument("--branch", choices=("+", "-"), help="tuned-momentum branch")
    params.add_argument("--n-barrier", type=int, dest="n_barrier", help="pulse phase integer")
    params.add_argument("--n-interior", type=int, dest="n_interior", help="interior phase integer")
    params.add_argument("--momentum", help="longitudinal momentum, scalar or min:max:count")
    params.add_argument("--spin", choices=("+", "-"), help="spin sector")
    params.add_argument(
        "--initial-state",
        dest="initial_state",
        choices=fockspace.BASIS_LABELS,
        help="starting Fock state for traces",
    )

    sub.add_parser(
        "design",
        parents=[common, params],
        help="solve the trap tuning conditions and report the criteria",
    )
    sub.add_parser(
        "evolve",
        parents=[common, params],
        help="per-boundary probability and amplitude trace of a schedule",
    )
    sub.add_parser(
        "sweep",
        parents=[common, params],
        help="detuning table over a momentum grid",
    )
    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="run the seeded property suites",
    )
    verify.add_argument("--draws", type=int, default=1000, help="random draws per suite")
    return parser


def _load_config(args):
    cfg = load_config_file(args.config) if args.config else RunConfig()
    return overlay_flags(cfg, args)


def _require(value, message):
    if value is None:
        raise ConfigError(message)
    return value


def _build_design(cfg):
    mass = _require(cfg.mass, "mass is required (config key 'mass' or --mass)")
    trap = _require(cfg.trap, "trap parameters are required (config 'trap' or --kick)")
    return trapdesign.design_trap(
        mass, trap.kick, trap.branch, trap.n_barrier, trap.n_interior
    )


def _resolve_schedule(cfg):
    """Schedule plus the scalar momentum the trace runs at."""
    if cfg.schedule is not None:
        momentum = _require(
            cfg.momentum, "explicit schedules need a momentum (config or --momentum)"
        )
        if isinstance(momentum, MomentumGrid):
            raise ConfigError("evolve needs a scalar momentum, not a grid")
        return cfg.schedule, float(momentum), None
    design = _build_design(cfg)
    momentum = cfg.momentum
    if momentum is None:
        momentum = design.momentum
    elif isinstance(momentum, MomentumGrid):
        raise ConfigError("evolve needs a scalar momentum, not a grid")
    return design.schedule, float(momentum), design


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_design(args):
    cfg = _load_config(args)
    design = _build_design(cfg)
    if design.degenerate:
        print(
            "warning: degenerate tuning, the two momentum roots coincide at p = -q/2",
            file=sys.stderr,
        )
    report = trapdesign.verify_trap(design, cfg.spin)
    fmt = cfg.output_format
    if cfg.output_path:
        _emit(reporting.render_design(design, report, fmt), cfg.output_path)
    for line in reporting.design_summary_lines(design, report):
        print(line)
    if args.plot:
        state0 = fockspace.basis_state("vacuum")
        rows = reporting.evolve_rows(
            design.schedule, design.mass, design.momentum, cfg.spin, state0,
            np.array([1.0, 0.0], dtype=complex),
        )
        fig = plotting.evolution_figure(rows, np.abs(state0) ** 2, design.schedule)
        plotting.save_figure(fig, args.plot)
    return EXIT_OK if report.passed() else EXIT_VERIFY


def cmd_evolve(args):
    cfg = _load_config(args)
    schedule, momentum, _ = _resolve_schedule(cfg)
    mass = _require(cfg.mass, "mass is required (config key 'mass' or --mass)")
    state0 = initial_state_vector(cfg)
    amp0 = initial_amplitudes(cfg)
    rows = reporting.evolve_rows(schedule, mass, momentum, cfg.spin, state0, amp0)
    _emit(reporting.render_table(reporting.EVOLVE_COLUMNS, rows, cfg.output_format), cfg.output_path)
    if args.plot:
        fig = plotting.evolution_figure(rows, np.abs(state0) ** 2, schedule)
        plotting.save_figure(fig, args.plot)
    return EXIT_OK


def cmd_sweep(args):
    cfg = _load_config(args)
    mass = _require(cfg.mass, "mass is required (config key 'mass' or --mass)")
    grid = _require(cfg.momentum, "sweep needs a momentum grid (config or --momentum)")
    if isinstance(grid, MomentumGrid):
        values = grid.values()
    else:
        values = np.array([float(grid)])

    if cfg.schedule is not None:
        schedule = cfg.schedule
    else:
        trap = _require(cfg.trap, "sweep needs trap parameters or an explicit schedule")
        try:
            schedule = trapdesign.design_trap(
                mass, trap.kick, trap.branch, trap.n_barrier, trap.n_interior
            ).schedule
        except SubThresholdError as exc:
            print(f"error: {exc}", file=sys.stderr)
            rows = reporting.sub_threshold_rows(values)
            _emit(
                reporting.render_table(reporting.SWEEP_COLUMNS, rows, cfg.output_format),
                cfg.output_path,
            )
            return EXIT_SUBTHRESHOLD

    rows = reporting.sweep_rows(schedule, mass, values, cfg.spin)
    _emit(reporting.render_table(reporting.SWEEP_COLUMNS, rows, cfg.output_format), cfg.output_path)
    if args.plot:
        fig = plotting.sweep_figure(rows)
        plotting.save_figure(fig, args.plot)
    return EXIT_OK


def cmd_verify(args):
    results = verification.run_all(seed=args.seed, draws=args.draws)
    text = verification.render_report(results, args.seed, args.draws)
    sys.stdout.write(text)
    if args.output:
        _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


_COMMANDS = {
    "design": cmd_design,
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SubThresholdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SUBTHRESHOLD


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
