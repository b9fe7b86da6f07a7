"""Independent finite-difference eigensolver for the radial problem.

The planar-oscillator radial equation

    −(hbar^2/2 mu_eff) (R'' + R'/rho − m^2 R/rho^2)
        + (1/2) mu_eff omega_eff^2 rho^2 R = E R

is discretized in conservative form with the natural rho-weighted measure:
integrating −(rho R')' over the cell around each node gives a flux scheme
that is exact about the rho = 0 axis, then the discrete square-root-of-rho
similarity transform (u_i = sqrt(rho_i) R_i) turns it into a symmetric
tridiagonal matrix.  A pointwise discretization of the u-form equation
carries the critically singular −1/(4 rho^2) term whose energy integral
diverges logarithmically at m = 0; the flux form keeps second-order
eigenvalue convergence for every m, which is what the cross-checks demand.

Nothing here reads the closed-form spectrum except ``compare``'s report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConfigurationError, DomainError
from .hamiltonian import EffectiveOscillator, LandauConfig

#: default comparison grid
DEFAULT_N_POINTS = 4000
DEFAULT_RHO_MAX_FACTOR = 12.0

#: relative-error threshold for the closed-form comparison
ORACLE_RTOL = 1e-4


@dataclass(frozen=True)
class RadialGrid:
    """Uniform grid with interior nodes rho_i = i·h, h = rho_max/(n_points+1)."""

    rho_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 16:
            raise ConfigurationError(f"n_points must be >= 16, got {self.n_points}")
        if not self.rho_max > 0:
            raise ConfigurationError(f"rho_max must be positive, got {self.rho_max}")

    @property
    def h(self) -> float:
        return self.rho_max / (self.n_points + 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.h * np.arange(1, self.n_points + 1)

    @classmethod
    def for_oscillator(
        cls,
        eff: EffectiveOscillator,
        n_points: int = DEFAULT_N_POINTS,
        rho_max_factor: float = DEFAULT_RHO_MAX_FACTOR,
    ) -> "RadialGrid":
        return cls(rho_max_factor / math.sqrt(eff.zeta_sq), n_points)


@dataclass(frozen=True)
class TridiagonalSystem:
    diagonal: np.ndarray
    off_diagonal: np.ndarray

    def __post_init__(self):
        if len(self.off_diagonal) != len(self.diagonal) - 1:
            raise ConfigurationError(
                "off-diagonal length must be one less than the diagonal"
            )

    @property
    def size(self) -> int:
        return len(self.diagonal)

    def dense(self) -> np.ndarray:
        a = np.diag(self.diagonal)
        a += np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)
        return a


def discretize(
    eff: EffectiveOscillator,
    m: int,
    grid: RadialGrid,
    cfg: LandauConfig,
) -> TridiagonalSystem:
    """Symmetric tridiagonal matrix for the radial operator on the grid.

    The grid must reach at least 8/sqrt(zeta_sq) so the target states'
    Gaussian tails are negligible at the outer Dirichlet boundary.  For
    m = 0 the axis cell carries the natural zero-flux condition; for
    m != 0 the centrifugal wall enforces R(0) = 0.
    """
    if grid.rho_max < 8.0 / math.sqrt(eff.zeta_sq):
        raise ConfigurationError(
            f"rho_max = {grid.rho_max} is below 8/sqrt(zeta_sq) = "
            f"{8.0 / math.sqrt(eff.zeta_sq):.3f}; boundary would truncate the states"
        )
    h = grid.h
    rho = grid.nodes
    kin = cfg.hbar * cfg.hbar / (2.0 * eff.mu_eff * h * h)
    potential = (
        cfg.hbar * cfg.hbar * (m * m) / (2.0 * eff.mu_eff * rho * rho)
        + 0.5 * eff.mu_eff * eff.omega_eff * eff.omega_eff * rho * rho
    )
    diagonal = 2.0 * kin + potential
    if m == 0:
        # no flux through the axis: the rho_{1/2} face term drops out
        diagonal[0] = kin * (rho[0] + 0.5 * h) / rho[0] + potential[0]
    off = -kin * (rho[:-1] + 0.5 * h) / np.sqrt(rho[:-1] * rho[1:])
    return TridiagonalSystem(diagonal, off)


def lowest_eigenvalues(system: TridiagonalSystem, count: int) -> np.ndarray:
    """The ``count`` smallest eigenvalues, ascending (bisection-based)."""
    if not 1 <= count <= system.size:
        raise DomainError(
            f"count must be in [1, {system.size}], got {count}"
        )
    return eigh_tridiagonal(
        system.diagonal,
        system.off_diagonal,
        eigvals_only=True,
        select="i",
        select_range=(0, count - 1),
    )


@dataclass(frozen=True)
class OracleReport:
    """Finite-difference eigenvalues against the closed-form ladder."""

    m: int
    oracle: np.ndarray
    closed_form: np.ndarray
    rel_error: np.ndarray
    tolerance: float = ORACLE_RTOL

    @property
    def passed(self) -> bool:
        return bool(np.all(self.rel_error <= self.tolerance))

    @property
    def max_rel_error(self) -> float:
        return float(np.max(self.rel_error))


def compare(
    eff: EffectiveOscillator,
    m: int,
    grid: RadialGrid,
    cfg: LandauConfig,
    n_max: int = 2,
) -> OracleReport:
    """Solve for n_rho = 0..n_max and report relative errors vs
    (2 n_rho + |m| + 1) hbar omega_eff."""
    if n_max < 0 or n_max > 4:
        raise DomainError(f"n_max must be in [0, 4], got {n_max}")
    system = discretize(eff, m, grid, cfg)
    numeric = lowest_eigenvalues(system, n_max + 1)
    closed = np.array(
        [(2 * n + abs(m) + 1) * cfg.hbar * eff.omega_eff for n in range(n_max + 1)]
    )
    rel = np.abs(numeric - closed) / np.abs(closed)
    return OracleReport(m=m, oracle=numeric, closed_form=closed, rel_error=rel)
