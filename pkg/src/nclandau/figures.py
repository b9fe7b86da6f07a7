"""Figure rendering for the table-producing commands.

Each table command can drop a matplotlib figure next to its delimited
output.  The object-oriented Agg canvas is used directly (no pyplot, no
global state), so rendering stays safe in library use.  The output format
follows the file extension; anything matplotlib can save works.
"""

from __future__ import annotations

from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure


def _new_figure(width=6.4, height=4.2):
    fig = Figure(figsize=(width, height), dpi=150)
    FigureCanvasAgg(fig)
    return fig


def _save(fig: Figure, path: str):
    target = Path(path)
    if target.parent != Path(""):
        target.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(target, bbox_inches="tight")


def render_spectrum(rows, path: str, omega_eff: float):
    """Level diagram: E_total against m, one marker set per n_rho."""
    fig = _new_figure()
    ax = fig.add_subplot(111)
    by_n = {}
    for row in rows:
        by_n.setdefault(row[0], []).append((row[1], row[6]))
    for n_rho in sorted(by_n):
        pts = sorted(by_n[n_rho])
        ax.plot(
            [p[0] for p in pts],
            [p[1] for p in pts],
            "_",
            markersize=14,
            markeredgewidth=2,
            label=rf"$n_\rho = {n_rho}$",
        )
    ax.set_xlabel(r"$m$")
    ax.set_ylabel(r"$E_{\mathrm{total}}$")
    ax.set_title(rf"Landau levels, $\omega_{{\mathrm{{eff}}}} = {omega_eff:.6g}$")
    ax.legend(frameon=False)
    fig.tight_layout()
    _save(fig, path)


def render_sweep(rows, path: str, parameter: str):
    """Ground-level shift and effective frequency along the sweep."""
    good = [r for r in rows if r[-1] is None or r[-1] == ""]
    xs = [r[0] for r in good]
    fig = _new_figure(6.4, 6.0)
    ax1 = fig.add_subplot(211)
    ax1.plot(xs, [r[7] for r in good], "o-", color="tab:red")
    ax1.set_ylabel(r"$\Delta E_{\mathrm{ground}}$")
    ax1.set_title(f"sweep over {parameter}")
    ax2 = fig.add_subplot(212, sharex=ax1)
    ax2.plot(xs, [r[5] for r in good], "s-", color="tab:blue", label=r"$\mu_{\mathrm{eff}}$")
    ax2.plot(xs, [r[6] for r in good], "^-", color="tab:green", label=r"$\omega_{\mathrm{eff}}$")
    ax2.set_xlabel(parameter)
    ax2.legend(frameon=False)
    fig.tight_layout()
    _save(fig, path)


def render_wavefunction(rows, path: str, n_rho: int, m: int, zeta_sq: float):
    """Normalized radial profile R(rho)."""
    fig = _new_figure()
    ax = fig.add_subplot(111)
    ax.plot([r[0] for r in rows], [r[1] for r in rows], color="tab:blue")
    ax.axhline(0.0, color="0.6", linewidth=0.8)
    ax.set_xlabel(r"$\rho$")
    ax.set_ylabel(r"$R(\rho)$")
    ax.set_title(rf"$n_\rho = {n_rho}$, $m = {m}$, $\zeta^2 = {zeta_sq:.6g}$")
    fig.tight_layout()
    _save(fig, path)
