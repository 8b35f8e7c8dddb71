"""Gauge structure of the qubit evolution.

Two different transformations live here and are kept apart:

* the U(1) map |phi(t)> -> e^{-i f(t)}|phi(t)> with f(t) = f0 - omega1 t,
  which produces the "tilde" state whose |0> component is frozen;
* the sigma_1 rotation exp(-i g lambda(t) sigma_1) acting on the doublet
  index of zeta = (|phi>, |psi>)^T.

Residual functions return plain norms; the caller decides the tolerance.
Central differences use ``dt`` as the half-width; pass ``analytic=True``
to substitute the exact derivative of the closed form instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import (
    QubitState,
    Selector,
    StateDoublet,
    TwoLevelParams,
    hamiltonian_elements,
    initial_vector,
    trajectory,
)
from .errors import InfiniteCoupling

__all__ = [
    "SIGMA1",
    "GaugeFunction",
    "GaugeField",
    "StateDoublet",
    "tilde_trajectory",
    "tilde_state",
    "tilde_overlap_invariance",
    "filtered_evolution_residual",
    "doublet_trajectory",
    "doublet_motion_residual",
    "omega_d",
    "gauge_unitary",
    "gauge_transform_doublet",
    "gauge_field",
    "gauge_field_transform",
    "transformation_law_residual",
    "covariance_residual",
    "commutator_norm",
    "field_strength",
]

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_EYE = np.eye(2, dtype=complex)

ScalarFn = Callable[[float], float]


@dataclass(frozen=True)
class GaugeFunction:
    """f(t) = f0 - omega1 t; only f0 is free."""

    f0: float
    omega1: float

    @classmethod
    def for_params(cls, params: TwoLevelParams, f0: float = 0.0) -> "GaugeFunction":
        return cls(float(f0), params.omega1)

    def __call__(self, t):
        return self.f0 - self.omega1 * np.asarray(t, dtype=float)

    def unitary(self, t):
        """U(t) = e^{-i f(t)} (a phase, identical on both basis states)."""
        return np.exp(-1j * self(t))


@dataclass(frozen=True)
class GaugeField:
    """A_0 = a0 * sigma_1 with coupling g; g * a0 equals omega_phipsi."""

    a0: float
    g: float


def _require_finite_coupling(params: TwoLevelParams) -> float:
    if not params.coupling_is_finite:
        raise InfiniteCoupling(
            f"g = tan(2 theta) diverges at theta = {params.theta!r}"
        )
    return params.coupling


# ---------------------------------------------------------------------------
# U(1) filtered ("tilde") states
# ---------------------------------------------------------------------------

def tilde_trajectory(
    params: TwoLevelParams,
    f0: float,
    times,
    selector: Selector | str = Selector.PHI,
) -> np.ndarray:
    """e^{-i f0}(a|0> + e^{-i(omega2-omega1)t} b|1>) for each t, shape (N, 2)."""
    t = np.atleast_1d(np.asarray(times, dtype=float))
    v0 = initial_vector(params, selector)
    pref = np.exp(-1j * f0)
    out = np.empty((t.size, 2), dtype=complex)
    out[:, 0] = pref * v0[0]
    out[:, 1] = pref * np.exp(-1j * params.omega_minus * t) * v0[1]
    return out


def tilde_state(
    params: TwoLevelParams,
    f0: float,
    t: float,
    selector: Selector | str = Selector.PHI,
) -> QubitState:
    return QubitState.from_vector(tilde_trajectory(params, f0, t, selector)[0])


def _tilde_derivative(params: TwoLevelParams, f0: float, t: float) -> np.ndarray:
    v = tilde_trajectory(params, f0, t)[0]
    return np.array([0.0, -1j * params.omega_minus * v[1]])


def tilde_overlap_invariance(
    params: TwoLevelParams, f0: float, n: int, tau: float
) -> tuple[complex, complex]:
    """(<~phi(0)|~phi(nT + tau)>, <~phi(0)|~phi(tau)>); equal for every n."""
    T = params.period
    if not 0.0 <= tau < abs(T):
        raise ValueError(f"tau must lie in [0, |T|) = [0, {abs(T)}), got {tau}")
    states = tilde_trajectory(params, f0, [0.0, n * T + tau, tau])
    ref = np.conj(states[0])
    return complex(ref @ states[1]), complex(ref @ states[2])


def filtered_evolution_residual(
    params: TwoLevelParams,
    f0: float,
    t: float,
    dt: float = 1e-6,
    analytic: bool = False,
) -> float:
    """|| -i(d/dt + iH)|~phi(t)> - omega1 |~phi(t)> ||."""
    v = tilde_trajectory(params, f0, t)[0]
    if analytic:
        dv = _tilde_derivative(params, f0, t)
    else:
        fwd, bwd = tilde_trajectory(params, f0, [t + dt, t - dt])
        dv = (fwd - bwd) / (2.0 * dt)
    lhs = -1j * dv + params.hamiltonian @ v
    return float(np.linalg.norm(lhs - params.omega1 * v))


# ---------------------------------------------------------------------------
# Doublet motion equation and the sigma_1 gauge rotation
# ---------------------------------------------------------------------------

def doublet_trajectory(params: TwoLevelParams, t: float) -> np.ndarray:
    """zeta(t) as a (2, 2) array, rows (phi, psi)."""
    return np.array([
        trajectory(params, Selector.PHI, t)[0],
        trajectory(params, Selector.PSI, t)[0],
    ])


def omega_d(params: TwoLevelParams) -> np.ndarray:
    e = hamiltonian_elements(params)
    return np.diag([e.omega_phiphi, e.omega_psipsi]).astype(complex)


def _doublet_derivative(params: TwoLevelParams, t: float) -> np.ndarray:
    # d/dt of the closed form: each Hilbert amplitude picks up -i omega_j
    z = doublet_trajectory(params, t)
    return z * (-1j * np.array([params.omega1, params.omega2]))


def _central(fn: Callable[[float], np.ndarray], t: float, dt: float) -> np.ndarray:
    return (fn(t + dt) - fn(t - dt)) / (2.0 * dt)


def doublet_motion_residual(
    params: TwoLevelParams,
    t: float,
    dt: float = 1e-6,
    analytic: bool = False,
) -> float:
    """|| i d/dt zeta - omega_d zeta - omega_phipsi sigma_1 zeta || over both rows.

    Uses omega_phipsi directly, so this stays finite at theta = pi/4 where g
    diverges.
    """
    z = doublet_trajectory(params, t)
    if analytic:
        dz = _doublet_derivative(params, t)
    else:
        dz = _central(lambda s: doublet_trajectory(params, s), t, dt)
    e = hamiltonian_elements(params)
    rhs = omega_d(params) @ z + e.omega_phipsi * (SIGMA1 @ z)
    return float(np.linalg.norm(1j * dz - rhs))


def gauge_unitary(g: float, lam: float) -> np.ndarray:
    """exp(-i g lambda sigma_1) on the doublet index."""
    a = g * lam
    return math.cos(a) * _EYE - 1j * math.sin(a) * SIGMA1


def gauge_transform_doublet(
    params: TwoLevelParams, lambda_value: float, doublet: StateDoublet
) -> StateDoublet:
    """zeta' = exp(-i g lambda sigma_1) zeta.

    >>> from qubitgauge.core import make_params, basis_states
    >>> p = make_params(1.0, 2.0, 0.3)
    >>> z = basis_states(p)
    >>> gauge_transform_doublet(p, 0.0, z) == z
    True
    """
    if not math.isfinite(lambda_value):
        raise ValueError(f"lambda must be finite, got {lambda_value!r}")
    g = _require_finite_coupling(params)
    if lambda_value == 0.0:
        return doublet
    return StateDoublet.from_array(gauge_unitary(g, lambda_value) @ doublet.as_array())


def gauge_field(params: TwoLevelParams) -> GaugeField:
    g = _require_finite_coupling(params)
    return GaugeField(a0=0.5 * params.delta_omega, g=g)


def gauge_field_transform(
    params: TwoLevelParams,
    lambda_fn: ScalarFn,
    lambda_fn_derivative: ScalarFn,
    t: float,
) -> GaugeField:
    """Transformed component a0' = a0 + d lambda/dt at time t.

    ``lambda_fn`` is accepted for symmetry with the residual check; the
    transformed component only needs the derivative.
    """
    field = gauge_field(params)
    return GaugeField(a0=field.a0 + float(lambda_fn_derivative(t)), g=field.g)


def transformation_law_residual(
    params: TwoLevelParams,
    lambda_fn: ScalarFn,
    lambda_fn_derivative: ScalarFn,
    t: float,
    dt: float | None = None,
) -> float:
    """Max-norm of g a0' s1 - [U g a0 s1 U^-1 + i (dU/dt) U^-1].

    dU/dt is built from the supplied derivative of lambda unless ``dt`` is
    given, in which case it is a central difference of U(t).
    """
    field = gauge_field(params)
    g = field.g
    new = gauge_field_transform(params, lambda_fn, lambda_fn_derivative, t)
    lam = float(lambda_fn(t))
    U = gauge_unitary(g, lam)
    U_inv = U.conj().T
    if dt is None:
        dlam = float(lambda_fn_derivative(t))
        a = g * lam
        dU = -g * dlam * (math.sin(a) * _EYE + 1j * math.cos(a) * SIGMA1)
    else:
        dU = _central(lambda s: gauge_unitary(g, float(lambda_fn(s))), t, dt)
    lhs = g * new.a0 * SIGMA1
    rhs = U @ (g * field.a0 * SIGMA1) @ U_inv + 1j * dU @ U_inv
    return float(np.max(np.abs(lhs - rhs)))


def covariance_residual(
    params: TwoLevelParams,
    lambda_fn: ScalarFn,
    lambda_fn_derivative: ScalarFn,
    t: float,
    dt: float = 1e-6,
    form: str = "literal",
) -> float:
    """Residual of the transformed motion equation with zeta' = U zeta.

    form="literal":   || i D'_t zeta' - omega_d zeta' ||
    form="covariant": || i D'_t (U zeta) - U (i D_t zeta) ||

    with D_t = d/dt + i g a0 s1 and D'_t = d/dt + i g (a0 + lambda') s1.
    The covariant form vanishes for any lambda. The literal form equals
    sqrt(2) |sin(g lambda(t))| |delta_omega| because U does not commute
    with omega_d; it vanishes only when g lambda(t) is a multiple of pi.
    """
    if form not in ("literal", "covariant"):
        raise ValueError(f"unknown form {form!r}")
    field = gauge_field(params)
    g = field.g

    def zeta(s: float) -> np.ndarray:
        return doublet_trajectory(params, s)

    def zeta_prime(s: float) -> np.ndarray:
        return gauge_unitary(g, float(lambda_fn(s))) @ zeta(s)

    zp = zeta_prime(t)
    a_prime = field.a0 + float(lambda_fn_derivative(t))
    iDp = 1j * _central(zeta_prime, t, dt) - g * a_prime * (SIGMA1 @ zp)
    if form == "literal":
        target = omega_d(params) @ zp
    else:
        z = zeta(t)
        iD = 1j * _central(zeta, t, dt) - g * field.a0 * (SIGMA1 @ z)
        target = gauge_unitary(g, float(lambda_fn(t))) @ iD
    return float(np.linalg.norm(iDp - target))


def commutator_norm(params: TwoLevelParams, lambda_value: float) -> float:
    """Max-norm of [U, sigma_1] for U = exp(-i g lambda sigma_1)."""
    U = gauge_unitary(_require_finite_coupling(params), lambda_value)
    return float(np.max(np.abs(U @ SIGMA1 - SIGMA1 @ U)))


def field_strength(
    params: TwoLevelParams,
    t_grid,
    lambda_fn_derivative: ScalarFn | None = None,
) -> float:
    """Time-constancy proxy for F = d/dt A_0: max_t |A_0(t) - A_0(t_0)|.

    With only the time component present in 0+1 dimensions, a vanishing
    field strength means A_0 is constant. A lambda derivative shifts A_0 to
    the transformed component; a non-constant derivative makes this nonzero.
    """
    grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if grid.size == 0:
        raise ValueError("t_grid must be nonempty")
    a0 = 0.5 * params.delta_omega
    values = np.full(grid.size, a0)
    if lambda_fn_derivative is not None:
        values = values + np.array([float(lambda_fn_derivative(s)) for s in grid])
    return float(np.max(np.abs(values - values[0])))
