"""Deformation parameters, Bopp maps, and algebra verification."""

import numpy as np
import pytest

from nclandau import (
    ConfigurationError,
    DomainError,
    Monomial,
    NCParams,
    OperatorPoly,
    bopp_phase,
    bopp_space,
    commutator,
    constraint_residual,
    identity_map,
    theta_bar_from,
    verify_algebra,
)
from tests.conftest import param_grid


# ---- theta_bar_from ----------------------------------------------------------

def test_theta_bar_vanishes_at_alpha_one():
    assert theta_bar_from(1.0, 1.0, 1.0) == 0.0


def test_theta_bar_reference_value():
    assert theta_bar_from(1.0, 0.8, 1.0) == pytest.approx(0.9216, abs=1e-15)


def test_theta_bar_rejects_zero_theta():
    with pytest.raises(DomainError):
        theta_bar_from(0.0, 0.8, 1.0)


@pytest.mark.parametrize("alpha", [0.0, -0.2, 1.1])
def test_theta_bar_rejects_bad_alpha(alpha):
    with pytest.raises(DomainError):
        theta_bar_from(1.0, alpha, 1.0)


def test_constraint_identity_over_grid():
    for theta in np.logspace(-2, 1, 12):
        for alpha in np.linspace(0.5, 1.0, 12):
            tb = theta_bar_from(float(theta), float(alpha), 1.0)
            assert constraint_residual(theta, tb, alpha, 1.0) <= 1e-12


def test_negative_theta_gives_negative_theta_bar():
    tb = theta_bar_from(-1.0, 0.8, 1.0)
    assert tb == pytest.approx(-0.9216, abs=1e-15)
    NCParams.phase(-1.0, 0.8)  # constraint still satisfiable


# ---- NCParams ------------------------------------------------------------------

def test_params_validate_constraint():
    with pytest.raises(DomainError):
        NCParams(theta=1.0, theta_bar=1.0, alpha=0.8)


def test_params_space_branch_allows_any_theta():
    NCParams.space(0.0)
    NCParams.space(-3.0)
    NCParams.space(5.0)


def test_params_reject_nonpositive_hbar():
    with pytest.raises(DomainError):
        NCParams(hbar=0.0)


def test_params_unchecked_bypasses_validation():
    p = NCParams.unchecked(1.0, 1.0, 1.0, 0.8)
    assert p.theta_bar == 1.0


def test_phase_at_alpha_one_is_space():
    assert NCParams.phase(2.0, 1.0) == NCParams.space(2.0)


# ---- Bopp maps -----------------------------------------------------------------

def test_space_map_at_zero_theta_is_identity():
    m = bopp_space(NCParams.space(0.0))
    for s in ("x", "y", "z", "px", "py", "pz"):
        assert m.image(s) == OperatorPoly.symbol(s)


def test_space_map_coefficients():
    m = bopp_space(NCParams.space(1.0))
    assert m.image("x") == OperatorPoly({Monomial(x=1): 1.0, Monomial(py=1): -0.5})
    assert m.image("y") == OperatorPoly({Monomial(y=1): 1.0, Monomial(px=1): 0.5})
    assert m.image("px") == OperatorPoly.symbol("px")


def test_space_map_coordinate_commutator():
    params = NCParams.space(1.0)
    m = bopp_space(params)
    got = commutator(m.image("x"), m.image("y"))
    assert (got - OperatorPoly.constant(1j * params.theta)).max_abs() < 1e-15


def test_space_map_rejects_phase_params():
    with pytest.raises(ConfigurationError, match="bopp_phase"):
        bopp_space(NCParams.phase(1.0, 0.8))


def test_phase_map_reduces_to_space_map():
    params = NCParams.space(1.3)
    ms, mp = bopp_space(params), bopp_phase(params)
    for s in ("x", "y", "z", "px", "py", "pz"):
        assert ms.image(s) == mp.image(s)  # exact, term for term


def test_phase_map_coefficients():
    m = bopp_phase(NCParams.phase(1.0, 0.8))
    assert m.image("x") == OperatorPoly(
        {Monomial(x=1): 0.8, Monomial(py=1): -0.625}
    )
    expected_px = OperatorPoly({Monomial(px=1): 0.8, Monomial(y=1): 0.576})
    assert (m.image("px") - expected_px).max_abs() < 1e-15


def test_identity_map_when_undeformed():
    m = bopp_phase(NCParams.commutative())
    for s in ("x", "y", "z", "px", "py", "pz"):
        assert m.image(s) == OperatorPoly.symbol(s)


def test_phase_map_continuous_in_alpha():
    # as alpha -> 1 with derived theta_bar, coefficients approach the
    # space-map ones
    theta = 1.0
    target = bopp_space(NCParams.space(theta))
    prev = None
    for alpha in (0.9, 0.99, 0.999, 0.9999):
        m = bopp_phase(NCParams.phase(theta, alpha))
        dev = max(
            (m.image(s) - target.image(s)).max_abs()
            for s in ("x", "y", "px", "py")
        )
        if prev is not None:
            assert dev < prev
        prev = dev
    assert prev < 1e-3


# ---- verify_algebra --------------------------------------------------------------

def test_verify_space_map():
    params = NCParams.space(1.0)
    report = verify_algebra(bopp_space(params), params)
    assert report.passed
    assert len(report.checks) == 15
    xy = next(c for c in report.checks if (c.left, c.right) == ("x", "y"))
    assert xy.target == 1j


def test_verify_phase_map():
    params = NCParams.phase(1.0, 0.8)
    report = verify_algebra(bopp_phase(params), params)
    assert report.passed
    assert report.max_deviation <= 1e-12


def test_verify_flags_corrupted_theta_bar():
    bad = NCParams.unchecked(1.0, 1.0, 1.0, 0.8)
    report = verify_algebra(bopp_phase(bad), bad)
    assert not report.passed
    failing = {(c.left, c.right) for c in report.failures()}
    assert ("x", "px") in failing
    assert ("y", "py") in failing


def test_verify_identity_map_against_deformed_targets():
    params = NCParams.space(1.0)
    report = verify_algebra(identity_map(params), params)
    assert not report.passed  # [x, y] = 0 but the target is i*theta


def test_verify_random_valid_params():
    rng = np.random.default_rng(7)
    for _ in range(50):
        theta = float(rng.uniform(0.05, 5.0))
        alpha = float(rng.uniform(0.5, 1.0))
        hbar = float(rng.uniform(0.5, 2.0))
        params = NCParams.phase(theta, alpha, hbar)
        assert verify_algebra(bopp_phase(params), params).passed
