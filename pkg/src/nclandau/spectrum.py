"""Closed-form Landau energies and level enumeration.

Energies split into three commuting parts:

    E_xy  = (2 n_rho + |m| + 1) hbar omega_eff     (2D oscillator)
    E_lz  = −m hbar omega_eff                      (angular momentum)
    E_par = hbar^2 k^2 / (2 mu)                    (free motion along z)

E_total is their literal floating-point sum, never re-derived, so the
m >= 0 degeneracy of E_xy + E_lz is preserved bit-for-bit whenever
hbar·omega_eff is exactly representable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deformation import NCParams
from .errors import DomainError
from .hamiltonian import EffectiveOscillator, LandauConfig, effective_oscillator


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial number n_rho >= 0, angular number m, axial wavenumber k."""

    n_rho: int
    m: int
    k: float = 0.0

    def __post_init__(self):
        if self.n_rho < 0:
            raise DomainError(f"n_rho must be non-negative, got {self.n_rho}")

    @property
    def N(self) -> int:
        """Principal oscillator number 2 n_rho + |m|."""
        return 2 * self.n_rho + abs(self.m)


@dataclass(frozen=True)
class SpectrumEntry:
    qn: QuantumNumbers
    e_xy: float
    e_lz: float
    e_par: float
    e_total: float


def energy(qn: QuantumNumbers, eff: EffectiveOscillator, cfg: LandauConfig) -> SpectrumEntry:
    """Energy parts and total for one set of quantum numbers."""
    hw = cfg.hbar * eff.omega_eff
    e_xy = (qn.N + 1) * hw
    e_lz = -qn.m * hw
    e_par = cfg.hbar * cfg.hbar * qn.k * qn.k / (2.0 * cfg.mu)
    return SpectrumEntry(qn, e_xy, e_lz, e_par, e_xy + e_lz + e_par)


def enumerate_levels(
    eff: EffectiveOscillator,
    cfg: LandauConfig,
    max_N: int,
    m_range: tuple,
    k: float = 0.0,
) -> list:
    """All entries with 2 n_rho + |m| <= max_N and m in [m_lo, m_hi].

    Sorted by e_total ascending, ties broken on (n_rho, m), so output order
    is deterministic.
    """
    if max_N < 0:
        raise DomainError(f"max_N must be non-negative, got {max_N}")
    m_lo, m_hi = m_range
    if m_lo > m_hi:
        return []
    entries = []
    for n_rho in range(max_N // 2 + 1):
        for m in range(m_lo, m_hi + 1):
            if 2 * n_rho + abs(m) <= max_N:
                entries.append(energy(QuantumNumbers(n_rho, m, k), eff, cfg))
    entries.sort(key=lambda e: (e.e_total, e.qn.n_rho, e.qn.m))
    return entries


def landau_correction(cfg: LandauConfig, params: NCParams, qn: QuantumNumbers) -> float:
    """Energy shift of one level relative to the undeformed spectrum."""
    deformed = energy(qn, effective_oscillator(cfg, params), cfg)
    plain = energy(qn, effective_oscillator(cfg, NCParams.commutative(cfg.hbar)), cfg)
    return deformed.e_total - plain.e_total
