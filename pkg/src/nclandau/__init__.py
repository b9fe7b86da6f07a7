"""Landau levels on noncommutative space and noncommutative phase space.

Builds the Bopp-shifted symmetric-gauge Hamiltonians, extracts the deformed
oscillator spectra and eigenfunctions in closed form, and cross-checks them
against an exact operator-algebra expansion and an independent
finite-difference radial eigensolver.
"""

from .deformation import (
    AlgebraReport,
    BoppMap,
    NCParams,
    bopp_phase,
    bopp_space,
    constraint_residual,
    identity_map,
    theta_bar_from,
    verify_algebra,
)
from .errors import (
    AccuracyError,
    ConfigurationError,
    DegenerateRegimeError,
    DomainError,
    NCLandauError,
    StructuralError,
)
from .hamiltonian import (
    EffectiveOscillator,
    LandauConfig,
    angular_momentum_z,
    build_hamiltonian,
    decompose,
    effective_oscillator,
    oscillator_sector,
    vector_potential,
)
from .operators import (
    Monomial,
    OperatorPoly,
    PhaseSpaceFn,
    SYMBOLS,
    UNIT,
    coefficient,
    commutator,
    moyal_star,
    multiply,
    substitute,
)
from .radial import (
    OracleReport,
    RadialGrid,
    TridiagonalSystem,
    compare,
    discretize,
    lowest_eigenvalues,
)
from .spectrum import (
    QuantumNumbers,
    SpectrumEntry,
    energy,
    enumerate_levels,
    landau_correction,
)
from .wavefunctions import (
    QuadratureSpec,
    RadialWavefunction,
    full_wavefunction_eval,
    kummer_poly,
    normalize,
    radial_eval,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "AlgebraReport",
    "BoppMap",
    "ConfigurationError",
    "DegenerateRegimeError",
    "DomainError",
    "EffectiveOscillator",
    "LandauConfig",
    "Monomial",
    "NCLandauError",
    "NCParams",
    "OperatorPoly",
    "OracleReport",
    "PhaseSpaceFn",
    "QuadratureSpec",
    "QuantumNumbers",
    "RadialGrid",
    "RadialWavefunction",
    "SpectrumEntry",
    "StructuralError",
    "SYMBOLS",
    "TridiagonalSystem",
    "UNIT",
    "angular_momentum_z",
    "bopp_phase",
    "bopp_space",
    "build_hamiltonian",
    "coefficient",
    "commutator",
    "compare",
    "constraint_residual",
    "decompose",
    "discretize",
    "effective_oscillator",
    "energy",
    "enumerate_levels",
    "full_wavefunction_eval",
    "identity_map",
    "kummer_poly",
    "landau_correction",
    "lowest_eigenvalues",
    "moyal_star",
    "multiply",
    "normalize",
    "oscillator_sector",
    "radial_eval",
    "substitute",
    "theta_bar_from",
    "vector_potential",
    "verify_algebra",
]
