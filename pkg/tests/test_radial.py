"""Finite-difference radial eigensolver and its closed-form comparison."""

import math

import numpy as np
import pytest

from nclandau import (
    ConfigurationError,
    DomainError,
    NCParams,
    OracleReport,
    RadialGrid,
    TridiagonalSystem,
    compare,
    discretize,
    effective_oscillator,
    lowest_eigenvalues,
)

UNIT_EFF_PARAMS = dict(mu_eff=1.0, omega_eff=1.0, zeta_sq=1.0, a_coef=1.0, b_coef=1.0)


@pytest.fixture
def unit_eff():
    from nclandau import EffectiveOscillator

    return EffectiveOscillator(**UNIT_EFF_PARAMS)


# ---- grid and matrix structure ------------------------------------------------

def test_grid_rejects_too_few_points():
    with pytest.raises(ConfigurationError):
        RadialGrid(10.0, 8)


def test_grid_spacing_and_nodes():
    g = RadialGrid(10.0, 99)
    assert g.h == 0.1
    assert g.nodes[0] == pytest.approx(0.1)
    assert g.nodes[-1] == pytest.approx(9.9)


def test_discretize_rejects_short_grid(unit_eff, preset):
    with pytest.raises(ConfigurationError):
        discretize(unit_eff, 0, RadialGrid(4.0, 100), preset)


def test_matrix_dimensions_and_symmetric_layout(unit_eff, preset):
    g = RadialGrid(12.0, 64)
    sys = discretize(unit_eff, 1, g, preset)
    assert sys.size == 64
    assert len(sys.off_diagonal) == 63
    dense = sys.dense()
    assert np.array_equal(dense, dense.T)


def test_interior_stencil_values(unit_eff, preset):
    g = RadialGrid(12.0, 200)
    h = g.h
    kin = preset.hbar**2 / (2 * unit_eff.mu_eff * h * h)
    sys = discretize(unit_eff, 1, g, preset)
    i = 57  # arbitrary interior node, 1-based rho = (i+1) h
    rho = g.nodes[i]
    expected_diag = 2 * kin + 1.0 / (2 * rho * rho) + 0.5 * rho * rho
    assert sys.diagonal[i] == pytest.approx(expected_diag, rel=1e-14)
    expected_off = -kin * (rho + 0.5 * h) / math.sqrt(rho * (rho + h))
    assert sys.off_diagonal[i] == pytest.approx(expected_off, rel=1e-14)
    # flux weights approach the plain second-difference stencil away from the axis
    assert sys.off_diagonal[-1] == pytest.approx(-kin, rel=1e-4)


def test_axis_row_reflects_boundary_condition(unit_eff, preset):
    g = RadialGrid(12.0, 100)
    h = g.h
    kin = preset.hbar**2 / (2 * unit_eff.mu_eff * h * h)
    rho1 = g.nodes[0]
    v1 = 0.5 * rho1 * rho1
    zero_flux = discretize(unit_eff, 0, g, preset)
    assert zero_flux.diagonal[0] == pytest.approx(kin * 1.5 + v1, rel=1e-13)
    dirichlet = discretize(unit_eff, 1, g, preset)
    assert dirichlet.diagonal[0] == pytest.approx(
        2 * kin + 1.0 / (2 * rho1 * rho1) + v1, rel=1e-13
    )


def test_matrix_positive_definite(unit_eff, preset):
    sys = discretize(unit_eff, 0, RadialGrid(12.0, 300), preset)
    np.linalg.cholesky(sys.dense())  # raises if not SPD


# ---- lowest_eigenvalues ----------------------------------------------------------

def test_two_by_two_analytic():
    sys = TridiagonalSystem(np.array([2.0, 2.0]), np.array([-1.0]))
    got = lowest_eigenvalues(sys, 2)
    assert got == pytest.approx([1.0, 3.0], abs=1e-14)


def test_decoupled_diagonal():
    sys = TridiagonalSystem(np.array([4.0, 4.0]), np.array([0.0]))
    assert lowest_eigenvalues(sys, 2) == pytest.approx([4.0, 4.0], abs=0.0)


def test_count_validation():
    sys = TridiagonalSystem(np.array([1.0, 2.0]), np.array([0.5]))
    with pytest.raises(DomainError):
        lowest_eigenvalues(sys, 0)
    with pytest.raises(DomainError):
        lowest_eigenvalues(sys, 3)


def sturm_count(diag, off, lam):
    """Number of eigenvalues below lam, via the Sturm sequence of leading
    principal minors of (A - lam I)."""
    count = 0
    q = diag[0] - lam
    if q < 0:
        count += 1
    for i in range(1, len(diag)):
        denom = q if q != 0 else 1e-300
        q = (diag[i] - lam) - off[i - 1] ** 2 / denom
        if q < 0:
            count += 1
    return count


def dense_bisection_eigenvalues(diag, off, k):
    """Brute-force characteristic-polynomial bisection, independent of LAPACK."""
    radius = np.max(np.abs(diag)) + 2 * np.max(np.abs(off)) + 1.0
    out = []
    for idx in range(k):
        lo, hi = -radius, radius
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if sturm_count(diag, off, mid) <= idx:
                lo = mid
            else:
                hi = mid
        out.append(0.5 * (lo + hi))
    return np.array(out)


def test_matches_dense_sturm_oracle():
    rng = np.random.default_rng(11)
    for _ in range(3):
        diag = rng.uniform(-2, 2, 50)
        off = rng.uniform(-1, 1, 49)
        sys = TridiagonalSystem(diag, off)
        got = lowest_eigenvalues(sys, 6)
        expected = dense_bisection_eigenvalues(diag, off, 6)
        assert got == pytest.approx(expected, abs=1e-10)


# ---- closed-form comparison -------------------------------------------------------

def test_compare_unit_oscillator_m0(unit_eff, preset):
    report = compare(unit_eff, 0, RadialGrid.for_oscillator(unit_eff), preset, n_max=2)
    assert report.passed
    assert report.oracle == pytest.approx([1.0, 3.0, 5.0], rel=1e-4)


def test_compare_unit_oscillator_m1(unit_eff, preset):
    report = compare(unit_eff, 1, RadialGrid.for_oscillator(unit_eff), preset, n_max=1)
    assert report.passed
    assert report.closed_form == pytest.approx([2.0, 4.0])
    assert report.oracle == pytest.approx([2.0, 4.0], rel=1e-4)


def test_compare_deformed_regime(preset):
    eff = effective_oscillator(preset, NCParams.space(1.0))
    report = compare(eff, 0, RadialGrid.for_oscillator(eff), preset, n_max=2)
    assert report.passed
    assert report.oracle == pytest.approx([1.5, 4.5, 7.5], rel=1e-4)


def test_second_order_convergence(unit_eff, preset):
    errors = []
    for n_points in (1000, 2000):
        grid = RadialGrid.for_oscillator(unit_eff, n_points=n_points)
        report = compare(unit_eff, 0, grid, preset, n_max=2)
        errors.append(report.rel_error)
    factors = errors[0] / errors[1]
    assert np.all(factors > 3.5) and np.all(factors < 4.5)


def test_boundary_insensitivity(unit_eff, preset):
    base = compare(
        unit_eff, 1, RadialGrid(12.0, 4000), preset, n_max=2
    ).oracle
    wide = compare(
        unit_eff, 1, RadialGrid(15.0, 5000), preset, n_max=2
    ).oracle
    # same h, larger box: eigenvalues barely move
    assert np.max(np.abs(wide - base) / base) < 1e-8


def test_m_reflection_symmetry(unit_eff, preset):
    g = RadialGrid.for_oscillator(unit_eff, n_points=800)
    plus = discretize(unit_eff, 2, g, preset)
    minus = discretize(unit_eff, -2, g, preset)
    assert np.array_equal(plus.diagonal, minus.diagonal)
    assert np.array_equal(plus.off_diagonal, minus.off_diagonal)


def test_coarse_grid_fails_tolerance(unit_eff, preset):
    report = compare(unit_eff, 0, RadialGrid(12.0, 16), preset, n_max=2)
    assert not report.passed
