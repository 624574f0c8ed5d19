"""Run configuration: YAML/JSON file loading, flag overlay, validation.

The schema is documented in the README. All quantities are in natural
units (c = hbar = 1).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import yaml

from . import fockspace
from .transfer import PotentialSchedule

AMPLITUDE_NORM_TOL = 1e-8


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


@dataclass(frozen=True)
class TrapParams:
    kick: float
    branch: str = "+"
    n_barrier: int = 0
    n_interior: int = 0


@dataclass(frozen=True)
class MomentumGrid:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ConfigError("momentum grid count must be >= 1")
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise ConfigError("momentum grid bounds must be finite")
        if self.lo > self.hi:
            raise ConfigError("momentum grid needs min <= max")

    def values(self):
        if self.count == 1:
            return np.array([0.5 * (self.lo + self.hi)])
        return np.linspace(self.lo, self.hi, self.count)


@dataclass(frozen=True)
class RunConfig:
    mass: float | None = None
    trap: TrapParams | None = None
    schedule: PotentialSchedule | None = None
    momentum: float | MomentumGrid | None = None
    spin: str = "+"
    initial_state: str | tuple = "vacuum"
    output_path: str | None = None
    output_format: str = "csv"


_TOP_KEYS = {"mass", "trap", "schedule", "momentum", "spin", "initial_state", "output"}
_TRAP_KEYS = {"kick", "branch", "n_barrier", "n_interior"}


def _as_float(value, what):
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{what} must be a number, got {value!r}") from None
    if not np.isfinite(out):
        raise ConfigError(f"{what} must be finite")
    return out


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{what} must be an integer, got {value!r}")
    return value


def load_config_file(path):
    """Parse a YAML (or JSON, which is a YAML subset) config file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"config file is not valid YAML: {exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("config file must contain a key/value mapping")
    return config_from_mapping(data)


def config_from_mapping(data):
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    mass = _as_float(data["mass"], "mass") if "mass" in data else None
    if mass is not None and mass <= 0.0:
        raise ConfigError("mass must be positive")

    trap = None
    if "trap" in data:
        raw = data["trap"]
        if not isinstance(raw, dict):
            raise ConfigError("trap section must be a mapping")
        bad = set(raw) - _TRAP_KEYS
        if bad:
            raise ConfigError(f"unknown trap keys: {sorted(bad)}")
        if "kick" not in raw:
            raise ConfigError("trap section needs a kick value")
        branch = raw.get("branch", "+")
        if branch not in ("+", "-"):
            raise ConfigError("trap branch must be '+' or '-'")
        trap = TrapParams(
            kick=_as_float(raw["kick"], "trap kick"),
            branch=branch,
            n_barrier=_as_int(raw.get("n_barrier", 0), "n_barrier"),
            n_interior=_as_int(raw.get("n_interior", 0), "n_interior"),
        )
        if trap.n_barrier < 0 or trap.n_interior < 0:
            raise ConfigError("quantization integers must be non-negative")

    schedule = None
    if "schedule" in data:
        raw = data["schedule"]
        if not isinstance(raw, list) or not raw:
            raise ConfigError("schedule must be a non-empty list of slices")
        pairs = []
        for k, item in enumerate(raw):
            if not isinstance(item, dict) or "kick" not in item:
                raise ConfigError(f"schedule slice {k} needs a kick value")
            extra = set(item) - {"kick", "duration"}
            if extra:
                raise ConfigError(f"schedule slice {k} has unknown keys {sorted(extra)}")
            pairs.append(
                (
                    _as_float(item["kick"], f"slice {k} kick"),
                    _as_float(item.get("duration", 0.0), f"slice {k} duration"),
                )
            )
        try:
            schedule = PotentialSchedule.from_pairs(pairs)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    if trap is not None and schedule is not None:
        raise ConfigError("give either trap parameters or an explicit schedule, not both")

    momentum = None
    if "momentum" in data:
        momentum = parse_momentum(data["momentum"])

    spin = data.get("spin", "+")
    if spin not in ("+", "-"):
        raise ConfigError("spin must be '+' or '-'")

    initial_state = data.get("initial_state", "vacuum")
    initial_state = _normalize_initial_state(initial_state)

    output_path = None
    output_format = "csv"
    if "output" in data:
        raw = data["output"]
        if not isinstance(raw, dict):
            raise ConfigError("output section must be a mapping")
        extra = set(raw) - {"path", "format"}
        if extra:
            raise ConfigError(f"unknown output keys: {sorted(extra)}")
        output_path = raw.get("path")
        output_format = raw.get("format", "csv")
        if output_format not in ("csv", "json"):
            raise ConfigError("output format must be csv or json")

    return RunConfig(
        mass=mass,
        trap=trap,
        schedule=schedule,
        momentum=momentum,
        spin=spin,
        initial_state=initial_state,
        output_path=output_path,
        output_format=output_format,
    )


def parse_momentum(raw):
    """Scalar momentum or {min, max, count} grid."""
    if isinstance(raw, dict):
        extra = set(raw) - {"min", "max", "count"}
        if extra:
            raise ConfigError(f"unknown momentum grid keys: {sorted(extra)}")
        try:
            return MomentumGrid(
                lo=_as_float(raw.get("min"), "momentum min"),
                hi=_as_float(raw.get("max"), "momentum max"),
                count=_as_int(raw.get("count", 1), "momentum count"),
            )
        except KeyError:
            raise ConfigError("momentum grid needs min and max") from None
    return _as_float(raw, "momentum")


def parse_momentum_flag(text):
    """Flag syntax: a plain number or min:max:count."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError("momentum grid flag must be min:max:count")
        try:
            count = int(parts[2])
        except ValueError:
            raise ConfigError("momentum grid count must be an integer") from None
        return MomentumGrid(
            lo=_as_float(parts[0], "momentum min"),
            hi=_as_float(parts[1], "momentum max"),
            count=count,
        )
    return _as_float(text, "momentum")


def _normalize_initial_state(raw):
    if isinstance(raw, str):
        if raw not in fockspace.BASIS_LABELS:
            raise ConfigError(
                f"initial_state must be one of {fockspace.BASIS_LABELS} or 4 amplitudes"
            )
        return raw
    if isinstance(raw, list):
        if len(raw) != 4:
            raise ConfigError("explicit initial state needs exactly 4 amplitudes")
        amps = []
        for k, entry in enumerate(raw):
            if isinstance(entry, (int, float)):
                amps.append(complex(entry))
            elif isinstance(entry, list) and len(entry) == 2:
                amps.append(complex(_as_float(entry[0], "re"), _as_float(entry[1], "im")))
            elif isinstance(entry, str):
                try:
                    amps.append(complex(entry.replace(" ", "")))
                except ValueError:
                    raise ConfigError(f"amplitude {k} is not a complex number") from None
            else:
                raise ConfigError(f"amplitude {k} must be a number, [re, im] or string")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise ConfigError(f"initial amplitudes must be unit norm, got {norm!r}")
        return tuple(amps)
    raise ConfigError("initial_state must be a basis-state name or list of 4 amplitudes")


def initial_state_vector(config):
    """4-component Fock vector for the configured initial state."""
    if isinstance(config.initial_state, str):
        return fockspace.basis_state(config.initial_state)
    return np.array(config.initial_state, dtype=complex)


def initial_amplitudes(config):
    """c-number (f, g*) seed for the trace columns.

    A pure positron start maps to (0, 1); everything else traces the
    electron-type reference amplitude (1, 0).
    """
    if config.initial_state == "positron":
        return np.array([0.0, 1.0], dtype=complex)
    return np.array([1.0, 0.0], dtype=complex)


def overlay_flags(config, args):
    """Apply CLI flag values on top of a file config (flags win)."""
    updates = {}
    if getattr(args, "mass", None) is not None:
        mass = _as_float(args.mass, "mass")
        if mass <= 0.0:
            raise ConfigError("mass must be positive")
        updates["mass"] = mass
    if getattr(args, "kick", None) is not None:
        base = config.trap or TrapParams(kick=0.0)
        updates["trap"] = replace(base, kick=_as_float(args.kick, "kick"))
    if getattr(args, "branch", None) is not None:
        if config.trap is None and "trap" not in updates:
            raise ConfigError("--branch needs trap parameters (--kick or config)")
        base = updates.get("trap", config.trap)
        updates["trap"] = replace(base, branch=args.branch)
    if getattr(args, "n_barrier", None) is not None:
        base = updates.get("trap", config.trap)
        if base is None:
            raise ConfigError("--n-barrier needs trap parameters (--kick or config)")
        updates["trap"] = replace(base, n_barrier=_as_int(args.n_barrier, "n_barrier"))
    if getattr(args, "n_interior", None) is not None:
        base = updates.get("trap", config.trap)
        if base is None:
            raise ConfigError("--n-interior needs trap parameters (--kick or config)")
        updates["trap"] = replace(base, n_interior=_as_int(args.n_interior, "n_interior"))
    if getattr(args, "momentum", None) is not None:
        updates["momentum"] = parse_momentum_flag(args.momentum)
    if getattr(args, "spin", None) is not None:
        updates["spin"] = args.spin
    if getattr(args, "initial_state", None) is not None:
        updates["initial_state"] = _normalize_initial_state(args.initial_state)
    if getattr(args, "output", None) is not None:
        updates["output_path"] = args.output
    if getattr(args, "format", None) is not None:
        updates["output_format"] = args.format
    cfg = replace(config, **updates) if updates else config
    if cfg.trap is not None and cfg.schedule is not None:
        raise ConfigError("give either trap parameters or an explicit schedule, not both")
    return cfg
