"""Symmetric-gauge Landau Hamiltonian and its effective-oscillator content.

For a particle of charge q and mass mu in a uniform field B along z, the
minimal-coupling Hamiltonian in the symmetric gauge is

    H = (1/2 mu) [ (p̂_x + (qB/2c) ŷ)^2 + (p̂_y − (qB/2c) x̂)^2 + p̂_z^2 ].

Feeding the hatted operators through a BoppMap leaves an isotropic 2D
oscillator (mass mu_eff, frequency omega_eff), an angular-momentum term
−omega_eff·(x p_y − y p_x), and free motion along z.  Two independent
routes recover (mu_eff, omega_eff): ``effective_oscillator`` from closed
forms, ``decompose`` by reading coefficients off the expanded polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .deformation import BoppMap, NCParams
from .errors import ConfigurationError, DegenerateRegimeError, DomainError, StructuralError
from .operators import Monomial, OperatorPoly

_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class LandauConfig:
    """Physical inputs, in any one consistent unit system."""

    q: float = 1.0
    mu: float = 1.0
    B: float = 2.0
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("mu", "c", "hbar"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if self.q * self.B < 0:
            raise DomainError(
                "qB < 0 is not supported; the spectrum formulas assume a "
                "non-negative Larmor frequency"
            )

    @classmethod
    def natural(cls, B: float = 2.0) -> "LandauConfig":
        """q = mu = c = hbar = 1; the default B = 2 makes omega_L = 1."""
        return cls(q=1.0, mu=1.0, B=B, c=1.0, hbar=1.0)

    @property
    def omega_L(self) -> float:
        # evaluated as (qB/2c)/mu so the undeformed effective frequency
        # a_coef*b_coef/mu reduces to it bit-for-bit
        return (self.q * self.B / (2.0 * self.c)) / self.mu


@dataclass(frozen=True)
class EffectiveOscillator:
    """Oscillator sector data derived from the quadratic Hamiltonian.

    a_coef multiplies the momenta and b_coef the coordinates inside the
    squared combinations above; then mu_eff = mu/a^2, omega_eff = a·b/mu and
    zeta_sq = mu_eff·omega_eff/hbar.
    """

    mu_eff: float
    omega_eff: float
    zeta_sq: float
    a_coef: float
    b_coef: float

    @classmethod
    def from_prefactors(cls, a: float, b: float, cfg: LandauConfig) -> "EffectiveOscillator":
        if a <= 0 or b <= 0:
            raise DegenerateRegimeError(
                f"non-positive oscillator prefactors a={a}, b={b}; "
                "the closed-form spectrum needs omega_eff > 0"
            )
        mu_eff = cfg.mu / (a * a)
        omega_eff = a * b / cfg.mu
        return cls(
            mu_eff=mu_eff,
            omega_eff=omega_eff,
            zeta_sq=mu_eff * omega_eff / cfg.hbar,
            a_coef=a,
            b_coef=b,
        )


def vector_potential(cfg: LandauConfig, point) -> tuple:
    """Symmetric-gauge potential (−B y/2, B x/2, 0) at (x, y, z)."""
    x, y, _ = point
    return (-0.5 * cfg.B * y, 0.5 * cfg.B * x, 0.0)


def build_hamiltonian(cfg: LandauConfig, bmap: BoppMap) -> OperatorPoly:
    """Expand the symmetric-gauge Hamiltonian through a BoppMap.

    Returns the fully normal-ordered polynomial.  The hatted combinations
    only pair momenta with the transverse coordinate, so no reordering
    constants appear and all coefficients stay real.
    """
    if bmap.image("x").hbar != cfg.hbar:
        raise ConfigurationError(
            f"map carries hbar={bmap.image('x').hbar}, config has {cfg.hbar}"
        )
    g = cfg.q * cfg.B / (2.0 * cfg.c)
    pi_x = bmap.image("px") + g * bmap.image("y")
    pi_y = bmap.image("py") - g * bmap.image("x")
    pi_z = bmap.image("pz")
    return (pi_x @ pi_x + pi_y @ pi_y + pi_z @ pi_z) / (2.0 * cfg.mu)


def effective_oscillator(cfg: LandauConfig, params: NCParams) -> EffectiveOscillator:
    """Closed-form prefactors a = alpha + qB·theta/(4 hbar alpha c) and
    b = (qB/2c)·alpha + theta_bar/(2 hbar alpha)."""
    if params.hbar != cfg.hbar:
        raise ConfigurationError(
            f"params carry hbar={params.hbar}, config has {cfg.hbar}"
        )
    al = params.alpha
    a = al + cfg.q * cfg.B * params.theta / (4.0 * cfg.hbar * al * cfg.c)
    b = (cfg.q * cfg.B / (2.0 * cfg.c)) * al + params.theta_bar / (2.0 * cfg.hbar * al)
    return EffectiveOscillator.from_prefactors(a, b, cfg)


_PX2 = Monomial(px=2)
_PY2 = Monomial(py=2)
_PZ2 = Monomial(pz=2)
_X2 = Monomial(x=2)
_Y2 = Monomial(y=2)
_XPY = Monomial(x=1, py=1)
_YPX = Monomial(y=1, px=1)
_OSC_BASIS = {_PX2, _PY2, _PZ2, _X2, _Y2, _XPY, _YPX}


def decompose(h: OperatorPoly, cfg: LandauConfig) -> EffectiveOscillator:
    """Read the oscillator data off an expanded Hamiltonian.

    Checks the symmetric-gauge structure: x/y isotropy of the quadratic
    coefficients, absence of any monomial outside the expected basis
    (including reordering constants, which must cancel), coefficient(pz^2)
    = 1/(2 mu), and agreement of the three independent omega_eff readings
    (from x^2, from x·p_y, from y·p_x) to 1e-12 relative.
    """
    scale = max(1.0, h.max_abs())

    def _real(mono, label):
        c = h.coefficient(mono)
        if abs(c.imag) > _MATCH_TOL * scale:
            raise StructuralError(f"coefficient of {label} is not real: {c}")
        return c.real

    stray = [m for m in h.terms if m not in _OSC_BASIS]
    if stray:
        worst = max(stray, key=lambda m: abs(h.terms[m]))
        if abs(h.terms[worst]) > _MATCH_TOL * scale:
            raise StructuralError(
                f"unexpected term {worst} (coefficient {h.terms[worst]:.3e}) — "
                "not a symmetric-gauge Landau Hamiltonian"
            )

    cpx, cpy = _real(_PX2, "px^2"), _real(_PY2, "py^2")
    cx, cy = _real(_X2, "x^2"), _real(_Y2, "y^2")
    if abs(cpx - cpy) > _MATCH_TOL * max(abs(cpx), 1.0):
        raise StructuralError(f"anisotropic kinetic terms: {cpx} vs {cpy}")
    if abs(cx - cy) > _MATCH_TOL * max(abs(cx), 1.0):
        raise StructuralError(f"anisotropic potential terms: {cx} vs {cy}")
    if cpx <= 0 or cx <= 0:
        raise StructuralError("quadratic coefficients must be positive")

    cpz = _real(_PZ2, "pz^2")
    if not math.isclose(cpz, 1.0 / (2.0 * cfg.mu), rel_tol=_MATCH_TOL):
        raise StructuralError(
            f"coefficient of pz^2 is {cpz}, expected 1/(2 mu) = {1.0 / (2.0 * cfg.mu)}"
        )

    mu_eff = 1.0 / (2.0 * cpx)
    omega_sq = 2.0 * cx / mu_eff
    readings = (
        math.sqrt(omega_sq),
        -_real(_XPY, "x py"),
        _real(_YPX, "y px"),
    )
    w = readings[0]
    for r in readings[1:]:
        if abs(r - w) > _MATCH_TOL * max(abs(w), 1.0):
            raise StructuralError(
                f"inconsistent omega_eff readings {readings}; "
                "input lacks the H_xy/H_lz structure"
            )
    a = math.sqrt(cfg.mu / mu_eff)
    return EffectiveOscillator(
        mu_eff=mu_eff,
        omega_eff=w,
        zeta_sq=mu_eff * w / cfg.hbar,
        a_coef=a,
        b_coef=cfg.mu * w / a,
    )


def oscillator_sector(eff: EffectiveOscillator, hbar: float) -> OperatorPoly:
    """The isolated 2D oscillator part (kinetic + potential, no l_z)."""
    k = 1.0 / (2.0 * eff.mu_eff)
    v = 0.5 * eff.mu_eff * eff.omega_eff * eff.omega_eff
    return OperatorPoly({_PX2: k, _PY2: k, _X2: v, _Y2: v}, hbar)


def angular_momentum_z(hbar: float) -> OperatorPoly:
    """l_z = x p_y − y p_x."""
    return OperatorPoly({_XPY: 1.0, _YPX: -1.0}, hbar)
