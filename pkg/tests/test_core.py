import math

import numpy as np
import pytest
from scipy.linalg import expm
from scipy.optimize import minimize_scalar

from qubitgauge.core import (
    QubitState,
    Selector,
    basis_states,
    evolve_numeric,
    evolve_phi,
    evolve_psi,
    hamiltonian_elements,
    make_params,
    reconstruct_H,
    rk4_propagate,
    trajectory,
)
from qubitgauge.errors import DegenerateSpectrum, NonFinite, StepTooLarge


def _inner(a, b):
    return np.vdot(a, b)


# --- make_params ------------------------------------------------------------

def test_make_params_derived_quantities():
    p = make_params(1.0, 2.0, math.pi / 6)
    assert p.period == pytest.approx(2 * math.pi, abs=1e-15)
    assert p.coupling == pytest.approx(math.sqrt(3), rel=1e-14)
    assert p.omega_minus == 1.0
    assert (p.gamma1, p.gamma2) == (0.0, 0.0)


def test_period_matches_first_zero_of_rk4_cross_overlap():
    # oracle: step an RK4 trajectory and locate the first return of
    # <psi(0)|phi(t)> to zero, then polish on the RK4 state itself
    p = make_params(1.0, 2.0, math.pi / 6)
    psi0 = evolve_psi(p, 0.0).vector
    y = evolve_phi(p, 0.0).vector
    dt, t = 1e-2, 0.0
    mags = []
    for _ in range(800):
        y = rk4_propagate(p, y, dt, dt=1e-3)
        t += dt
        mags.append((t, abs(_inner(psi0, y))))
    ts, ms = zip(*mags)
    k = int(np.argmin(ms[100:])) + 100
    phi0 = evolve_phi(p, 0.0).vector
    res = minimize_scalar(
        lambda s: abs(_inner(psi0, rk4_propagate(p, phi0, s, dt=1e-3))),
        bounds=(ts[k - 1], ts[k + 1]), method="bounded", options={"xatol": 1e-10},
    )
    assert res.x == pytest.approx(p.period, abs=1e-6)


def test_degenerate_params_valid_but_period_errors():
    p = make_params(1.0, 1.0, math.pi / 6)
    with pytest.raises(DegenerateSpectrum):
        p.period


def test_theta_zero_decouples():
    p = make_params(0.0, 1.0, 0.0)
    assert p.coupling == 0.0
    assert hamiltonian_elements(p).omega_phipsi == 0.0


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_make_params_rejects_nonfinite(bad):
    with pytest.raises(NonFinite):
        make_params(bad, 2.0, 0.1)
    with pytest.raises(NonFinite):
        make_params(1.0, 2.0, 0.1, gamma2=bad)


def test_coupling_singular_at_pi_over_4():
    p = make_params(1.0, 2.0, math.pi / 4)
    assert not p.coupling_is_finite
    assert p.coupling == math.inf
    assert make_params(1.0, 2.0, 3 * math.pi / 4).coupling == math.inf


def test_mixing_angle_relation():
    for theta in np.linspace(0.05, 1.5, 13):
        p = make_params(0.3, 1.9, theta)
        e = hamiltonian_elements(p)
        if abs(p.delta_omega) < 1e-3:
            continue
        lhs = math.tan(2 * theta) * (e.omega_psipsi - e.omega_phiphi)
        assert lhs == pytest.approx(2 * e.omega_phipsi, rel=1e-12)


# --- basis_states ------------------------------------------------------------

@pytest.mark.parametrize(
    "theta, phi, psi",
    [
        (0.0, (1, 0), (0, 1)),
        (math.pi / 4, (1 / math.sqrt(2), 1 / math.sqrt(2)), (-1 / math.sqrt(2), 1 / math.sqrt(2))),
        (math.pi / 6, (math.sqrt(3) / 2, 0.5), (-0.5, math.sqrt(3) / 2)),
    ],
)
def test_basis_states(theta, phi, psi):
    z = basis_states(make_params(1.0, 2.0, theta))
    np.testing.assert_allclose(z.phi.vector, phi, atol=1e-15)
    np.testing.assert_allclose(z.psi.vector, psi, atol=1e-15)
    assert abs(z.phi.inner(z.psi)) < 1e-15
    assert z.phi.norm() == pytest.approx(1.0, abs=1e-15)


def test_basis_states_with_preparation_phases_stay_orthonormal():
    z = basis_states(make_params(1.0, 2.0, 0.4, gamma1=0.3, gamma2=-1.1))
    assert abs(z.phi.inner(z.psi)) < 1e-15
    assert z.psi.norm() == pytest.approx(1.0, abs=1e-15)


# --- evolution ---------------------------------------------------------------

def test_evolve_at_zero_is_preparation(ref_params):
    z = basis_states(ref_params)
    assert evolve_phi(ref_params, 0.0) == z.phi
    assert evolve_psi(ref_params, 0.0) == z.psi


def test_evolve_matches_matrix_exponential(ref_params):
    H = np.diag([1.0, 2.0])
    for t in (0.0, 0.37, 1.0, -2.5, 11.0):
        U = expm(-1j * H * t)
        np.testing.assert_allclose(
            evolve_phi(ref_params, t).vector, U @ basis_states(ref_params).phi.vector, atol=1e-13
        )
        np.testing.assert_allclose(
            evolve_psi(ref_params, t).vector, U @ basis_states(ref_params).psi.vector, atol=1e-13
        )


def test_evolve_after_one_period_picks_up_minus_two_pi(ref_params):
    T = ref_params.period
    np.testing.assert_allclose(
        evolve_phi(ref_params, T).vector,
        np.exp(-2j * math.pi) * basis_states(ref_params).phi.vector,
        atol=1e-14,
    )


def test_evolve_matches_rk4_at_t_one(ref_params):
    numeric = evolve_numeric(ref_params, basis_states(ref_params).phi, 1.0, dt=1e-4)
    np.testing.assert_allclose(numeric.vector, evolve_phi(ref_params, 1.0).vector, atol=1e-8)


def test_trajectory_norm_and_orthogonality_over_three_periods(ref_params):
    t = np.linspace(0, 3 * ref_params.period, 1000)
    phi = trajectory(ref_params, Selector.PHI, t)
    psi = trajectory(ref_params, "psi", t)
    assert np.max(np.abs(np.sum(np.abs(phi) ** 2, axis=1) - 1)) < 1e-12
    assert np.max(np.abs(np.sum(np.conj(phi) * psi, axis=1))) < 1e-12


# --- evolve_numeric ----------------------------------------------------------

def test_evolve_numeric_zero_time_is_identity(ref_params):
    s = QubitState(0.6 + 0.0j, 0.8j)
    assert evolve_numeric(ref_params, s, 0.0) == s


def test_evolve_numeric_eigenstate():
    p = make_params(1.3, 2.0, 0.0)
    s = evolve_numeric(p, QubitState(1 + 0j, 0j), 4.2, dt=1e-4)
    np.testing.assert_allclose(s.vector, [np.exp(-1.3j * 4.2), 0], atol=1e-10)


def test_evolve_numeric_full_period_and_norm(ref_params):
    s = evolve_numeric(ref_params, basis_states(ref_params).phi, 2 * math.pi, dt=1e-4)
    np.testing.assert_allclose(s.vector, evolve_phi(ref_params, 2 * math.pi).vector, atol=1e-8)
    assert abs(s.norm() ** 2 - 1) < 1e-9


def test_evolve_numeric_backwards_for_negative_gap():
    p = make_params(2.0, 1.0, 0.4)
    s = evolve_numeric(p, basis_states(p).phi, p.period, dt=1e-4)
    np.testing.assert_allclose(s.vector, evolve_phi(p, p.period).vector, atol=1e-8)


def test_evolve_numeric_rejects_coarse_step(ref_params):
    with pytest.raises(StepTooLarge):
        evolve_numeric(ref_params, basis_states(ref_params).phi, 1.0, dt=0.1)


def test_evolve_numeric_fourth_order(ref_params):
    # halving dt should cut the error by ~16
    phi0 = basis_states(ref_params).phi
    exact = evolve_phi(ref_params, 5.0).vector
    e1 = np.max(np.abs(evolve_numeric(ref_params, phi0, 5.0, dt=0.04).vector - exact))
    e2 = np.max(np.abs(evolve_numeric(ref_params, phi0, 5.0, dt=0.02).vector - exact))
    assert 12 < e1 / e2 < 20


# --- hamiltonian_elements / reconstruct_H -------------------------------------

def test_elements_diagonal_basis():
    e = hamiltonian_elements(make_params(1.0, 2.0, 0.0))
    assert (e.omega_phiphi, e.omega_psipsi, e.omega_phipsi) == (1.0, 2.0, 0.0)


def test_elements_symmetric_point():
    e = hamiltonian_elements(make_params(1.0, 2.0, math.pi / 4))
    assert e.omega_phiphi == pytest.approx(1.5, abs=1e-15)
    assert e.omega_psipsi == pytest.approx(1.5, abs=1e-15)
    assert e.omega_phipsi == pytest.approx(0.5, abs=1e-15)


def test_elements_match_explicit_inner_products(ref_params):
    e = hamiltonian_elements(ref_params)
    assert e.omega_phipsi == pytest.approx(math.sqrt(3) / 4, abs=1e-15)
    assert e.omega_psiphi == e.omega_phipsi
    H = np.diag([1.0, 2.0])
    rng = np.random.default_rng(7)
    for t in rng.uniform(-10, 10, 5):
        phi, psi = evolve_phi(ref_params, t).vector, evolve_psi(ref_params, t).vector
        assert _inner(psi, H @ phi) == pytest.approx(e.omega_phipsi, abs=1e-12)
        assert _inner(phi, H @ psi) == pytest.approx(e.omega_phipsi, abs=1e-12)
        assert _inner(phi, H @ phi) == pytest.approx(e.omega_phiphi, abs=1e-12)
        assert _inner(psi, H @ psi) == pytest.approx(e.omega_psipsi, abs=1e-12)


def test_reconstruct_H(ref_params):
    assert np.max(np.abs(reconstruct_H(make_params(1.0, 2.0, 0.0), 3.3) - np.diag([1, 2]))) < 1e-15
    assert np.max(np.abs(reconstruct_H(ref_params, 0.37) - np.diag([1, 2]))) < 1e-12
    H = reconstruct_H(ref_params, 1.23)
    np.testing.assert_allclose(H, H.conj().T, atol=1e-15)
