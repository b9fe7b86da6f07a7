"""Run configuration: JSON file + flag overrides on top of the natural preset.

Precedence is flags > file > preset defaults.  A config file is a single
JSON document with optional blocks ``physics``, ``nc``, ``sweep``,
``quantum``, ``oracle`` and ``output``; unknown keys are rejected so typos
surface as errors instead of silently falling back to defaults.  If a
``physics`` block is present it must be complete (all of q, mu, B, c, hbar):
mixing file physics with preset physics invites unit mistakes.

The momentum deformation theta_bar is always derived from (theta, alpha),
never read from the file.  ``corrupt_theta_bar`` is a fault-injection
diagnostic for the verify command and deliberately bypasses validation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .deformation import NCParams
from .errors import ConfigurationError
from .hamiltonian import LandauConfig

MODES = ("commutative", "space", "phase")
SWEEP_PARAMETERS = ("theta", "alpha", "B")
FORMATS = ("csv", "json")

_PHYSICS_FIELDS = ("q", "mu", "B", "c", "hbar")


@dataclass(frozen=True)
class SweepBlock:
    parameter: str
    start: float
    stop: float
    steps: int


@dataclass(frozen=True)
class QuantumBlock:
    max_N: int = 2
    m_range: tuple | None = None  # None -> (-max_N, max_N)
    k: float = 0.0

    def resolved_m_range(self) -> tuple:
        if self.m_range is None:
            return (-self.max_N, self.max_N)
        return self.m_range


@dataclass(frozen=True)
class OracleBlock:
    enabled: bool = True
    n_points: int = 4000
    rho_max_factor: float = 12.0


@dataclass(frozen=True)
class OutputBlock:
    format: str = "csv"
    path: str | None = None
    plot: str | None = None


@dataclass(frozen=True)
class RunConfig:
    physics: LandauConfig = field(default_factory=LandauConfig.natural)
    mode: str = "commutative"
    theta: float = 0.0
    alpha: float = 1.0
    quantum: QuantumBlock = field(default_factory=QuantumBlock)
    oracle: OracleBlock = field(default_factory=OracleBlock)
    sweep: SweepBlock | None = None
    output: OutputBlock = field(default_factory=OutputBlock)
    corrupt_theta_bar: float | None = None

    def params(self) -> NCParams:
        """NCParams for the configured regime (theta_bar derived)."""
        if self.corrupt_theta_bar is not None:
            return NCParams.unchecked(
                self.physics.hbar, self.theta, self.corrupt_theta_bar, self.alpha
            )
        if self.mode == "commutative":
            return NCParams.commutative(self.physics.hbar)
        if self.mode == "space":
            return NCParams.space(self.theta, self.physics.hbar)
        return NCParams.phase(self.theta, self.alpha, self.physics.hbar)


def _require(condition: bool, message: str):
    if not condition:
        raise ConfigurationError(message)


def _check_keys(block: dict, allowed, where: str):
    for key in block:
        if key not in allowed:
            raise ConfigurationError(f"unknown key {where}.{key}")


def _number(block: dict, where: str, key: str, default=None):
    value = block.get(key, default)
    if value is None:
        raise ConfigurationError(f"{where}.{key} is required")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationError(f"{where}.{key} must be a number, got {value!r}")
    return value


def load_file(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ConfigurationError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise ConfigurationError("config document must be a JSON object")
    _check_keys(doc, ("physics", "nc", "sweep", "quantum", "oracle", "output"), "config")
    return doc


def build_config(doc: dict, overrides: dict | None = None) -> RunConfig:
    """Assemble and validate a RunConfig from a parsed document.

    ``overrides`` holds flat flag values (theta, alpha, mode, B, k, max_N,
    output_path, output_format, plot, corrupt_theta_bar, n_points, ...);
    None entries are ignored.
    """
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}

    # physics
    physics_block = doc.get("physics")
    if physics_block is None:
        physics_kwargs = {
            "q": 1.0, "mu": 1.0, "B": 2.0, "c": 1.0, "hbar": 1.0,
        }
    else:
        _check_keys(physics_block, _PHYSICS_FIELDS, "physics")
        physics_kwargs = {
            f: float(_number(physics_block, "physics", f)) for f in _PHYSICS_FIELDS
        }
    if "B" in overrides:
        physics_kwargs["B"] = float(overrides["B"])
    physics = LandauConfig(**physics_kwargs)

    # nc block and mode
    nc = dict(doc.get("nc") or {})
    _check_keys(nc, ("mode", "theta", "alpha"), "nc")
    if "theta" in overrides:
        nc["theta"] = overrides["theta"]
    if "alpha" in overrides:
        nc["alpha"] = overrides["alpha"]
        nc.setdefault("mode", "phase")
    if "mode" in overrides:
        nc["mode"] = overrides["mode"]

    mode = nc.get("mode")
    if mode is None:
        if "alpha" in nc:
            mode = "phase"
        elif "theta" in nc:
            mode = "space"
        else:
            mode = "commutative"
    _require(mode in MODES, f"nc.mode must be one of {MODES}, got {mode!r}")
    theta = float(_number(nc, "nc", "theta", 0.0))
    alpha = float(_number(nc, "nc", "alpha", 1.0))
    if mode == "commutative":
        _require(theta == 0.0 or "theta" not in nc, "nc.theta conflicts with commutative mode")
        theta, alpha = 0.0, 1.0
    if mode == "space":
        alpha = 1.0
    if mode == "phase":
        _require("theta" in nc, "nc.theta is required in phase mode")

    # sweep
    sweep_block = doc.get("sweep")
    sweep = None
    if sweep_block is not None:
        _check_keys(sweep_block, ("parameter", "start", "stop", "steps"), "sweep")
        parameter = sweep_block.get("parameter")
        _require(
            parameter in SWEEP_PARAMETERS,
            f"sweep.parameter must be one of {SWEEP_PARAMETERS}, got {parameter!r}",
        )
        steps = _number(sweep_block, "sweep", "steps")
        _require(isinstance(steps, int) and steps >= 2, "sweep.steps must be an integer >= 2")
        if parameter == "theta":
            _require(mode != "commutative", "sweep.parameter theta needs nc mode space or phase")
        if parameter == "alpha":
            _require(mode == "phase", "sweep.parameter alpha needs nc mode phase")
        sweep = SweepBlock(
            parameter=parameter,
            start=float(_number(sweep_block, "sweep", "start")),
            stop=float(_number(sweep_block, "sweep", "stop")),
            steps=steps,
        )

    # quantum
    q_block = dict(doc.get("quantum") or {})
    _check_keys(q_block, ("max_N", "m_range", "k"), "quantum")
    if "max_N" in overrides:
        q_block["max_N"] = overrides["max_N"]
    if "k" in overrides:
        q_block["k"] = overrides["k"]
    max_N = q_block.get("max_N", 2)
    _require(isinstance(max_N, int) and max_N >= 0, "quantum.max_N must be an integer >= 0")
    m_range = q_block.get("m_range")
    if m_range is not None:
        _require(
            isinstance(m_range, (list, tuple))
            and len(m_range) == 2
            and all(isinstance(v, int) for v in m_range),
            "quantum.m_range must be a pair of integers [m_lo, m_hi]",
        )
        _require(m_range[0] <= m_range[1], "quantum.m_range must have m_lo <= m_hi")
        m_range = tuple(m_range)
    quantum = QuantumBlock(
        max_N=max_N, m_range=m_range, k=float(_number(q_block, "quantum", "k", 0.0))
    )

    # oracle
    o_block = dict(doc.get("oracle") or {})
    _check_keys(o_block, ("enabled", "n_points", "rho_max_factor"), "oracle")
    if "n_points" in overrides:
        o_block["n_points"] = overrides["n_points"]
    enabled = o_block.get("enabled", True)
    _require(isinstance(enabled, bool), "oracle.enabled must be a boolean")
    n_points = o_block.get("n_points", 4000)
    _require(
        isinstance(n_points, int) and n_points >= 16, "oracle.n_points must be an integer >= 16"
    )
    factor = float(_number(o_block, "oracle", "rho_max_factor", 12.0))
    _require(factor > 0, "oracle.rho_max_factor must be positive")
    oracle = OracleBlock(enabled=enabled, n_points=n_points, rho_max_factor=factor)

    # output
    out_block = dict(doc.get("output") or {})
    _check_keys(out_block, ("format", "path", "plot"), "output")
    if "output_format" in overrides:
        out_block["format"] = overrides["output_format"]
    if "output_path" in overrides:
        out_block["path"] = overrides["output_path"]
    if "plot" in overrides:
        out_block["plot"] = overrides["plot"]
    fmt = out_block.get("format", "csv")
    _require(fmt in FORMATS, f"output.format must be one of {FORMATS}, got {fmt!r}")
    output = OutputBlock(format=fmt, path=out_block.get("path"), plot=out_block.get("plot"))

    corrupt = overrides.get("corrupt_theta_bar")
    if corrupt is not None:
        _require(mode == "phase", "--corrupt-theta-bar needs nc mode phase")

    return RunConfig(
        physics=physics,
        mode=mode,
        theta=theta,
        alpha=alpha,
        quantum=quantum,
        oracle=oracle,
        sweep=sweep,
        output=output,
        corrupt_theta_bar=corrupt,
    )


def load_config(path=None, preset: str | None = None, overrides: dict | None = None) -> RunConfig:
    """Load a RunConfig from an optional file path with flag overrides."""
    if preset is not None and preset != "natural":
        raise ConfigurationError(f"unknown preset {preset!r}; available: natural")
    doc = load_file(path) if path is not None else {}
    return build_config(doc, overrides)
