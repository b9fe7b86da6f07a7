"""Closed-form eigenfunctions of the planar oscillator sector.

The radial part is R(rho) = norm · rho^|m| · F(−n_rho, |m|+1, zeta^2 rho^2)
· exp(−zeta^2 rho^2 / 2) with zeta^2 = mu_eff·omega_eff/hbar; F is the
terminating confluent-hypergeometric (Kummer) polynomial.  Angular and
axial directions contribute unimodular phase factors only.

Normalization is numerical: Gauss–Legendre quadrature of |R|^2 rho on
[0, cutoff] with a node-doubling self-check, since the closed form is used
elsewhere only as an independent test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, ConfigurationError, DomainError
from .spectrum import QuantumNumbers

#: default cutoff multiple: integrate to 12/sqrt(zeta_sq), where the
#: Gaussian weight is ~1e-31
DEFAULT_CUTOFF_FACTOR = 12.0


def kummer_poly(n_rho: int, b: float, x):
    """Terminating Kummer series sum_j [(-n_rho)_j / (b)_j] x^j / j!.

    Evaluated by the exact term-ratio recurrence (n_rho + 1 terms); accepts
    scalars or numpy arrays for x.
    """
    if n_rho < 0:
        raise DomainError(f"n_rho must be non-negative, got {n_rho}")
    if not b > 0:
        raise DomainError(f"b must be positive, got {b}")
    x = np.asarray(x, dtype=float)
    total = np.ones_like(x)
    term = np.ones_like(x)
    for j in range(n_rho):
        term = term * ((j - n_rho) / ((b + j) * (j + 1.0))) * x
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss–Legendre rule for the radial normalization integral."""

    nodes: int = 256
    cutoff: float | None = None  # None -> DEFAULT_CUTOFF_FACTOR / sqrt(zeta_sq)
    rel_tol: float = 1e-8

    def resolve_cutoff(self, zeta_sq: float) -> float:
        if self.cutoff is not None:
            return self.cutoff
        return DEFAULT_CUTOFF_FACTOR / math.sqrt(zeta_sq)


@dataclass(frozen=True)
class RadialWavefunction:
    n_rho: int
    m: int
    zeta_sq: float
    norm: float


def _radial_raw(n_rho: int, m: int, zeta_sq: float, rho):
    rho = np.asarray(rho, dtype=float)
    t = zeta_sq * rho * rho
    return rho ** abs(m) * kummer_poly(n_rho, abs(m) + 1.0, t) * np.exp(-0.5 * t)


def radial_eval(wf: RadialWavefunction, rho):
    """R(rho); scalar in, scalar out, array in, array out."""
    out = wf.norm * _radial_raw(wf.n_rho, wf.m, wf.zeta_sq, rho)
    if np.ndim(rho) == 0:
        return float(out)
    return out


def radial_norm_integral(n_rho: int, m: int, zeta_sq: float, nodes: int, cutoff: float) -> float:
    """Gauss–Legendre estimate of the unnormalized integral of R^2 rho."""
    xs, ws = np.polynomial.legendre.leggauss(nodes)
    rho = 0.5 * cutoff * (xs + 1.0)
    w = 0.5 * cutoff * ws
    r = _radial_raw(n_rho, m, zeta_sq, rho)
    return float(np.sum(w * r * r * rho))


def normalize(n_rho: int, m: int, zeta_sq: float, quad: QuadratureSpec = QuadratureSpec()) -> RadialWavefunction:
    """Radial wavefunction with norm fixed so the integral of R^2 rho is 1.

    Deterministic for a given spec.  The estimate must be stable under node
    doubling to quad.rel_tol, otherwise an AccuracyError is raised.
    """
    if not zeta_sq > 0:
        raise DomainError(f"zeta_sq must be positive, got {zeta_sq}")
    cutoff = quad.resolve_cutoff(zeta_sq)
    coarse = radial_norm_integral(n_rho, m, zeta_sq, quad.nodes, cutoff)
    fine = radial_norm_integral(n_rho, m, zeta_sq, 2 * quad.nodes, cutoff)
    if not fine > 0:
        raise AccuracyError("radial normalization integral is not positive")
    if abs(fine - coarse) > quad.rel_tol * abs(fine):
        raise AccuracyError(
            f"quadrature not converged: {coarse!r} -> {fine!r} under node doubling; "
            "increase nodes or cutoff"
        )
    return RadialWavefunction(n_rho, m, zeta_sq, 1.0 / math.sqrt(fine))


def full_wavefunction_eval(qn: QuantumNumbers, wf: RadialWavefunction, point) -> complex:
    """psi(rho, phi, z) = R(rho) e^{i m phi} e^{i k z}."""
    if (qn.n_rho, qn.m) != (wf.n_rho, wf.m):
        raise ConfigurationError(
            f"quantum numbers ({qn.n_rho}, {qn.m}) do not match the "
            f"wavefunction ({wf.n_rho}, {wf.m})"
        )
    rho, phi, z = point
    if rho < 0:
        raise DomainError(f"rho must be non-negative, got {rho}")
    return radial_eval(wf, rho) * complex(
        math.cos(qn.m * phi + qn.k * z), math.sin(qn.m * phi + qn.k * z)
    )
