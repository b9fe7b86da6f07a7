"""Command-line front end: spectrum | verify | sweep | wavefunction.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
NCLANDAU_THREADS caps the parallelism of sweep evaluation.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from . import figures
from .config import RunConfig, build_config, load_file
from .deformation import (
    NCParams,
    bopp_phase,
    bopp_space,
    constraint_residual,
    identity_map,
    verify_algebra,
)
from .errors import ConfigurationError, NCLandauError
from .hamiltonian import build_hamiltonian, decompose, effective_oscillator
from .radial import RadialGrid, compare
from .spectrum import QuantumNumbers, energy, enumerate_levels
from .tables import Table, write_text
from .wavefunctions import normalize, radial_eval

MATCH_TOL = 1e-12


def _bopp_map(rc: RunConfig, params: NCParams):
    if rc.mode == "commutative":
        return identity_map(params)
    if rc.mode == "space":
        return bopp_space(params)
    return bopp_phase(params)


def _thread_count(n_items: int) -> int:
    raw = os.environ.get("NCLANDAU_THREADS", "").strip()
    if raw:
        try:
            workers = int(raw)
        except ValueError:
            raise ConfigurationError(
                f"NCLANDAU_THREADS must be an integer, got {raw!r}"
            )
        if workers < 1:
            raise ConfigurationError("NCLANDAU_THREADS must be >= 1")
    else:
        workers = os.cpu_count() or 1
    return max(1, min(workers, n_items))


def _parallel_map(fn, items: list) -> list:
    workers = _thread_count(len(items))
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---- commands ---------------------------------------------------------------

def cmd_spectrum(rc: RunConfig) -> Table:
    """Level table with the shift against the undeformed spectrum."""
    cfg = rc.physics
    params = rc.params()
    eff = effective_oscillator(cfg, params)
    eff0 = effective_oscillator(cfg, NCParams.commutative(cfg.hbar))
    k = rc.quantum.k
    levels = enumerate_levels(eff, cfg, rc.quantum.max_N, rc.quantum.resolved_m_range(), k)
    rows = []
    for entry in levels:
        base = energy(entry.qn, eff0, cfg).e_total
        rows.append(
            (
                entry.qn.n_rho,
                entry.qn.m,
                entry.qn.k,
                entry.e_xy,
                entry.e_lz,
                entry.e_par,
                entry.e_total,
                entry.e_total - base,
            )
        )
    meta = (
        ("mode", rc.mode),
        ("theta", params.theta),
        ("alpha", params.alpha),
        ("theta_bar", params.theta_bar),
        ("mu_eff", eff.mu_eff),
        ("omega_eff", eff.omega_eff),
    )
    return Table(
        name="spectrum",
        version=1,
        columns=("n_rho", "m", "k", "E_xy", "E_lz", "E_par", "E_total", "delta_E_vs_commutative"),
        rows=rows,
        meta=meta,
    )


def _sweep_point(rc: RunConfig, value: float) -> tuple:
    parameter = rc.sweep.parameter
    theta, alpha = rc.theta, rc.alpha
    physics = rc.physics
    if parameter == "theta":
        theta = value
    elif parameter == "alpha":
        alpha = value
    try:
        if parameter == "B":
            physics = replace(physics, B=value)
        if rc.mode == "commutative":
            params = NCParams.commutative(physics.hbar)
        elif rc.mode == "space":
            params = NCParams.space(theta, physics.hbar)
        else:
            params = NCParams.phase(theta, alpha, physics.hbar)
        eff = effective_oscillator(physics, params)
        eff0 = effective_oscillator(physics, NCParams.commutative(physics.hbar))
        qn = QuantumNumbers(0, 0, rc.quantum.k)
        e_ground = energy(qn, eff, physics).e_total
        delta = e_ground - energy(qn, eff0, physics).e_total
        return (
            value, params.theta, params.alpha, params.theta_bar,
            eff.mu_eff, eff.omega_eff, e_ground, delta, None,
        )
    except NCLandauError as exc:
        return (value, theta, alpha, None, None, None, None, None, str(exc))


def cmd_sweep(rc: RunConfig) -> Table:
    """One row per sweep value; rows with singular parameters carry an
    error message instead of aborting the run."""
    if rc.sweep is None:
        raise ConfigurationError("sweep block is required (config sweep or CLI flags)")
    values = np.linspace(rc.sweep.start, rc.sweep.stop, rc.sweep.steps)
    rows = _parallel_map(lambda v: _sweep_point(rc, float(v)), list(values))
    meta = (
        ("parameter", rc.sweep.parameter),
        ("mode", rc.mode),
        ("k", rc.quantum.k),
    )
    return Table(
        name="sweep",
        version=1,
        columns=(
            "parameter_value", "theta", "alpha", "theta_bar",
            "mu_eff", "omega_eff", "E_ground", "delta_E_ground", "error",
        ),
        rows=rows,
        meta=meta,
    )


def cmd_wavefunction(rc: RunConfig, n_rho: int, m: int, samples: int) -> Table:
    """Normalized radial profile sampled on [0, rho_max]."""
    if samples < 2:
        raise ConfigurationError(f"samples must be >= 2, got {samples}")
    cfg = rc.physics
    eff = effective_oscillator(cfg, rc.params())
    wf = normalize(n_rho, m, eff.zeta_sq)
    rho_max = rc.oracle.rho_max_factor / math.sqrt(eff.zeta_sq)
    rho = np.linspace(0.0, rho_max, samples)
    values = radial_eval(wf, rho)
    rows = [(float(r), float(v)) for r, v in zip(rho, values)]
    meta = (
        ("n_rho", n_rho),
        ("m", m),
        ("zeta_sq", wf.zeta_sq),
        ("norm", wf.norm),
        ("mode", rc.mode),
    )
    return Table(
        name="wavefunction",
        version=1,
        columns=("rho", "R_normalized"),
        rows=rows,
        meta=meta,
    )


def cmd_verify(rc: RunConfig):
    """Run the verification ladder for the configured regime.

    Returns (lines, passed): algebra targets, the scaling-constant identity
    (phase mode), closed-form vs coefficient-matching oscillator data, and
    the finite-difference eigenvalue comparison for m in {0, 1, 2}.
    """
    cfg = rc.physics
    params = rc.params()
    lines = []
    ok = True

    def record(name: str, passed: bool, detail: str):
        nonlocal ok
        ok = ok and passed
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")

    report = verify_algebra(_bopp_map(rc, params), params)
    record(
        "algebra",
        report.passed,
        f"max commutator deviation {report.max_deviation:.3e} (tol {report.tolerance:g})",
    )

    if rc.mode == "phase":
        res = constraint_residual(params.theta, params.theta_bar, params.alpha, params.hbar)
        record("constraint", res <= 1e-12, f"identity residual {res:.3e} (tol 1e-12)")

    eff = effective_oscillator(cfg, params)
    read = decompose(build_hamiltonian(cfg, _bopp_map(rc, params)), cfg)
    worst = max(
        abs(getattr(eff, f) - getattr(read, f)) / abs(getattr(eff, f))
        for f in ("mu_eff", "omega_eff", "zeta_sq", "a_coef", "b_coef")
    )
    record(
        "oscillator-match",
        worst <= MATCH_TOL,
        f"max relative field deviation {worst:.3e} (tol {MATCH_TOL:g})",
    )

    if rc.oracle.enabled:
        grid = RadialGrid.for_oscillator(
            eff, n_points=rc.oracle.n_points, rho_max_factor=rc.oracle.rho_max_factor
        )
        for m in (0, 1, 2):
            rep = compare(eff, m, grid, cfg, n_max=2)
            record(
                f"radial-oracle m={m}",
                rep.passed,
                f"max relative error {rep.max_rel_error:.3e} (tol {rep.tolerance:g})",
            )

    return lines, ok


# ---- argument parsing ---------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--config", metavar="PATH", help="JSON config file")
    parser.add_argument(
        "--preset", choices=("natural",), help="named baseline (q=mu=c=hbar=1, B=2)"
    )
    parser.add_argument("--mode", choices=("commutative", "space", "phase"))
    parser.add_argument("--theta", type=float, help="coordinate deformation")
    parser.add_argument("--alpha", type=float, help="scaling constant (phase mode)")
    parser.add_argument("--B", type=float, help="magnetic field override")
    parser.add_argument("--k", type=float, help="axial wavenumber")
    parser.add_argument("--max-N", type=int, dest="max_N", help="largest 2 n_rho + |m|")
    parser.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")
    parser.add_argument("--format", choices=("csv", "json"), dest="output_format")
    parser.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")


def _overrides(args, **extra) -> dict:
    keys = ("theta", "alpha", "mode", "B", "k", "max_N", "output_format", "plot")
    out = {k: getattr(args, k, None) for k in keys}
    out["output_path"] = getattr(args, "output", None)
    out.update(extra)
    return out


def _config_from_args(args, **extra) -> RunConfig:
    if args.preset is not None and args.preset != "natural":
        raise ConfigurationError(f"unknown preset {args.preset!r}")
    doc = load_file(args.config) if args.config else {}
    if getattr(args, "sweep_parameter", None) is not None:
        doc = dict(doc)
        doc["sweep"] = {
            "parameter": args.sweep_parameter,
            "start": args.start,
            "stop": args.stop,
            "steps": args.steps,
        }
    return build_config(doc, _overrides(args, **extra))


def _emit(table: Table, rc: RunConfig):
    write_text(table.render(rc.output.format), rc.output.path)


def _meta_value(table: Table, key: str):
    return dict(table.meta)[key]


def _run_spectrum(args) -> int:
    rc = _config_from_args(args)
    table = cmd_spectrum(rc)
    _emit(table, rc)
    if rc.output.plot:
        figures.render_spectrum(table.rows, rc.output.plot, _meta_value(table, "omega_eff"))
    return 0


def _run_sweep(args) -> int:
    rc = _config_from_args(args)
    table = cmd_sweep(rc)
    _emit(table, rc)
    if rc.output.plot:
        figures.render_sweep(table.rows, rc.output.plot, rc.sweep.parameter)
    return 0


def _run_wavefunction(args) -> int:
    rc = _config_from_args(args)
    table = cmd_wavefunction(rc, args.n_rho, args.m, args.samples)
    _emit(table, rc)
    if rc.output.plot:
        figures.render_wavefunction(
            table.rows, rc.output.plot, args.n_rho, args.m, _meta_value(table, "zeta_sq")
        )
    return 0


def _run_verify(args) -> int:
    rc = _config_from_args(
        args,
        corrupt_theta_bar=args.corrupt_theta_bar,
        n_points=args.n_points,
    )
    lines, ok = cmd_verify(rc)
    for line in lines:
        print(line)
    print("verification " + ("PASSED" if ok else "FAILED"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclandau",
        description="Landau levels on noncommutative space and phase space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="tabulate energy levels")
    _add_common(p_spec)
    p_spec.set_defaults(func=_run_spectrum)

    p_verify = sub.add_parser("verify", help="run the verification checks")
    _add_common(p_verify)
    p_verify.add_argument("--n-points", type=int, dest="n_points", help="oracle grid size")
    p_verify.add_argument(
        "--corrupt-theta-bar",
        type=float,
        dest="corrupt_theta_bar",
        metavar="VALUE",
        help="fault injection: bypass the derived theta_bar (phase mode)",
    )
    p_verify.set_defaults(func=_run_verify)

    p_sweep = sub.add_parser("sweep", help="scan theta, alpha or B")
    _add_common(p_sweep)
    p_sweep.add_argument("--parameter", choices=("theta", "alpha", "B"), dest="sweep_parameter")
    p_sweep.add_argument("--start", type=float)
    p_sweep.add_argument("--stop", type=float)
    p_sweep.add_argument("--steps", type=int)
    p_sweep.set_defaults(func=_run_sweep)

    p_wf = sub.add_parser("wavefunction", help="sample a radial eigenfunction")
    _add_common(p_wf)
    p_wf.add_argument("--n-rho", type=int, default=0, dest="n_rho")
    p_wf.add_argument("--m", type=int, default=0)
    p_wf.add_argument("--samples", type=int, default=500)
    p_wf.set_defaults(func=_run_wavefunction)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NCLandauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
