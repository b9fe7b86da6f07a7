"""Deformation parameters and the linear maps realizing the deformed algebra.

The deformed commutators are [x̂, ŷ] = i·theta, [p̂_x, p̂_y] = i·theta_bar,
[x̂_i, p̂_j] = i·hbar·delta_ij, with noncommutativity confined to the x–y
plane.  A ``BoppMap`` expresses the hatted operators as linear combinations
of the canonical ones; ``verify_algebra`` recomputes every pairwise
commutator of the images and checks it against those targets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ConfigurationError, DomainError
from .operators import OperatorPoly, SYMBOLS, UNIT, commutator

#: tolerance on the scaling-constant identity alpha^2 + theta*theta_bar/(4 hbar^2 alpha^2) = 1
CONSTRAINT_TOL = 1e-12


def theta_bar_from(theta: float, alpha: float, hbar: float = 1.0) -> float:
    """Momentum-sector deformation induced by (theta, alpha).

    Returns 4 hbar^2 alpha^2 (1 - alpha^2) / theta, the unique theta_bar
    compatible with canonical [x̂_i, p̂_j] = i hbar delta_ij.
    """
    if not hbar > 0:
        raise DomainError(f"hbar must be positive, got {hbar}")
    if not 0 < alpha <= 1:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}")
    if theta == 0:
        raise DomainError(
            "theta_bar_from is singular at theta = 0; use alpha = 1, "
            "theta_bar = 0 directly"
        )
    return 4.0 * hbar * hbar * alpha * alpha * (1.0 - alpha * alpha) / theta


def constraint_residual(theta: float, theta_bar: float, alpha: float, hbar: float) -> float:
    """|alpha^2 + theta*theta_bar/(4 hbar^2 alpha^2) - 1|."""
    return abs(
        alpha * alpha
        + theta * theta_bar / (4.0 * hbar * hbar * alpha * alpha)
        - 1.0
    )


@dataclass(frozen=True)
class NCParams:
    """Deformation tuple (hbar, theta, theta_bar, alpha).

    Valid parameter sets either have alpha = 1 with theta_bar = 0 (pure
    coordinate noncommutativity, any theta) or theta != 0 with theta_bar
    tied to (theta, alpha) by the scaling-constant identity.  Construction
    validates this; ``unchecked`` bypasses validation for fault-injection
    tests and diagnostics.
    """

    hbar: float = 1.0
    theta: float = 0.0
    theta_bar: float = 0.0
    alpha: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if not 0 < self.alpha <= 1:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.alpha == 1 and self.theta_bar == 0:
            return
        if self.theta == 0:
            raise DomainError(
                "theta = 0 requires alpha = 1 and theta_bar = 0"
            )
        res = constraint_residual(self.theta, self.theta_bar, self.alpha, self.hbar)
        if res > CONSTRAINT_TOL:
            raise DomainError(
                f"(theta, theta_bar, alpha) violate the scaling identity by {res:.3e}"
            )

    @classmethod
    def commutative(cls, hbar: float = 1.0) -> "NCParams":
        return cls(hbar=hbar)

    @classmethod
    def space(cls, theta: float, hbar: float = 1.0) -> "NCParams":
        """Coordinate sector only: alpha = 1, theta_bar = 0."""
        return cls(hbar=hbar, theta=theta)

    @classmethod
    def phase(cls, theta: float, alpha: float, hbar: float = 1.0) -> "NCParams":
        """Both sectors deformed; theta_bar is derived, never user-set."""
        if alpha == 1:
            return cls(hbar=hbar, theta=theta)
        return cls(
            hbar=hbar,
            theta=theta,
            theta_bar=theta_bar_from(theta, alpha, hbar),
            alpha=alpha,
        )

    @classmethod
    def unchecked(cls, hbar: float, theta: float, theta_bar: float, alpha: float) -> "NCParams":
        """Build without validation (diagnostics / negative tests only)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "hbar", hbar)
        object.__setattr__(obj, "theta", theta)
        object.__setattr__(obj, "theta_bar", theta_bar)
        object.__setattr__(obj, "alpha", alpha)
        return obj

    @property
    def is_commutative(self) -> bool:
        return self.theta == 0 and self.theta_bar == 0


@dataclass(frozen=True)
class BoppMap:
    """Linear images of the six canonical symbols.

    z and p_z always map to themselves; the x–y block carries the
    deformation.  Coefficients are real.
    """

    images: Mapping[str, OperatorPoly]
    params: NCParams

    def image(self, sym: str) -> OperatorPoly:
        return self.images[sym]


def _linear(hbar: float, **coeffs: float) -> OperatorPoly:
    from .operators import Monomial

    return OperatorPoly(
        {Monomial(**{s: 1}): c for s, c in coeffs.items() if c != 0}, hbar
    )


def identity_map(params: NCParams) -> BoppMap:
    hbar = params.hbar
    return BoppMap(
        {s: OperatorPoly.symbol(s, hbar) for s in SYMBOLS}, params
    )


def bopp_space(params: NCParams) -> BoppMap:
    """Coordinate-sector map: x̂ = x − (theta/2 hbar) p_y, ŷ = y + (theta/2 hbar) p_x.

    Momenta map to themselves.  Requires alpha = 1, theta_bar = 0; phase-space
    parameter sets belong to bopp_phase.
    """
    if params.alpha != 1 or params.theta_bar != 0:
        raise ConfigurationError(
            "bopp_space needs alpha = 1 and theta_bar = 0; "
            "call bopp_phase for momentum-sector deformations"
        )
    hbar = params.hbar
    s = params.theta / (2.0 * hbar)
    return BoppMap(
        {
            "x": _linear(hbar, x=1.0, py=-s),
            "y": _linear(hbar, y=1.0, px=s),
            "z": OperatorPoly.symbol("z", hbar),
            "px": OperatorPoly.symbol("px", hbar),
            "py": OperatorPoly.symbol("py", hbar),
            "pz": OperatorPoly.symbol("pz", hbar),
        },
        params,
    )


def bopp_phase(params: NCParams) -> BoppMap:
    """Full phase-space map.

    x̂ = a x − (theta/2 hbar a) p_y,   ŷ = a y + (theta/2 hbar a) p_x,
    p̂_x = a p_x + (theta_bar/2 hbar a) y,   p̂_y = a p_y − (theta_bar/2 hbar a) x,
    with a = alpha.  Reduces exactly to bopp_space when alpha = 1.
    """
    hbar, a = params.hbar, params.alpha
    s = params.theta / (2.0 * hbar * a)
    sb = params.theta_bar / (2.0 * hbar * a)
    return BoppMap(
        {
            "x": _linear(hbar, x=a, py=-s),
            "y": _linear(hbar, y=a, px=s),
            "z": OperatorPoly.symbol("z", hbar),
            "px": _linear(hbar, px=a, y=sb),
            "py": _linear(hbar, py=a, x=-sb),
            "pz": OperatorPoly.symbol("pz", hbar),
        },
        params,
    )


@dataclass(frozen=True)
class CommutatorCheck:
    """One pairwise commutator compared with its algebra target."""

    left: str
    right: str
    target: complex
    deviation: float


@dataclass(frozen=True)
class AlgebraReport:
    """Result of checking all pairwise commutators of a BoppMap."""

    checks: tuple
    tolerance: float = 1e-12

    @property
    def max_deviation(self) -> float:
        return max(c.deviation for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance

    def failures(self):
        return [c for c in self.checks if c.deviation > self.tolerance]


def _targets(params: NCParams) -> dict:
    ih = 1j * params.hbar
    t = {
        ("x", "y"): 1j * params.theta,
        ("px", "py"): 1j * params.theta_bar,
        ("x", "px"): ih,
        ("y", "py"): ih,
        ("z", "pz"): ih,
    }
    # every remaining pair commutes
    for i, a in enumerate(SYMBOLS):
        for b in SYMBOLS[i + 1:]:
            t.setdefault((a, b), 0j)
    return t


def verify_algebra(bmap: BoppMap, params: NCParams, tolerance: float = 1e-12) -> AlgebraReport:
    """Recompute all 15 pairwise commutators of the images.

    Targets: [x̂, ŷ] = i theta, [p̂_x, p̂_y] = i theta_bar, [x̂_i, p̂_j] =
    i hbar delta_ij, all other pairs zero.  The report passes iff the
    largest coefficient deviation stays within ``tolerance``.
    """
    checks = []
    for (a, b), target in _targets(params).items():
        comm = commutator(bmap.image(a), bmap.image(b))
        residual = comm - OperatorPoly.constant(target, params.hbar)
        checks.append(CommutatorCheck(a, b, target, residual.max_abs()))
    return AlgebraReport(tuple(checks), tolerance)
