"""Free-energy split of H, the entropy term and the Anandan-Aharonov invariant.

In the Hilbert space, F(t) is the part of H diagonal in the instantaneous
{phi(t), psi(t)} basis and TS(t) the off-diagonal part, so F + TS = H at
every t. "Temperature" is g = tan 2theta and "entropy" the gauge component
a0 = delta_omega / 2; both are None where g diverges.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Selector, TwoLevelParams, hamiltonian_elements, projector, trajectory

__all__ = [
    "ThermoDecomposition",
    "GeometricInvariant",
    "free_energy_operator",
    "entropy_term",
    "thermo_decomposition",
    "aa_invariant",
    "aa_invariant_numeric",
    "entropy_action_integral",
    "variance_link",
]


@dataclass(frozen=True)
class ThermoDecomposition:
    f_op: np.ndarray
    ts_op: np.ndarray
    temperature: float | None
    entropy_coeff: float | None


@dataclass(frozen=True)
class GeometricInvariant:
    s_n: float
    n: int


def _states(params: TwoLevelParams, t: float) -> tuple[np.ndarray, np.ndarray]:
    return (
        trajectory(params, Selector.PHI, t)[0],
        trajectory(params, Selector.PSI, t)[0],
    )


def free_energy_operator(params: TwoLevelParams, t: float) -> np.ndarray:
    """F(t) = w_phiphi |phi(t)><phi(t)| + w_psipsi |psi(t)><psi(t)|."""
    e = hamiltonian_elements(params)
    phi, psi = _states(params, t)
    return e.omega_phiphi * projector(phi, phi) + e.omega_psipsi * projector(psi, psi)


def entropy_term(params: TwoLevelParams, t: float) -> np.ndarray:
    """TS(t) = w_phipsi (|phi(t)><psi(t)| + |psi(t)><phi(t)|)."""
    e = hamiltonian_elements(params)
    phi, psi = _states(params, t)
    return e.omega_phipsi * (projector(phi, psi) + projector(psi, phi))


def thermo_decomposition(params: TwoLevelParams, t: float) -> ThermoDecomposition:
    if params.coupling_is_finite:
        temperature = params.coupling
        entropy = 0.5 * params.delta_omega
    else:
        temperature = entropy = None
    return ThermoDecomposition(
        f_op=free_energy_operator(params, t),
        ts_op=entropy_term(params, t),
        temperature=temperature,
        entropy_coeff=entropy,
    )


def aa_invariant(params: TwoLevelParams, n: int = 1) -> GeometricInvariant:
    """s_n = 2 pi n sin 2theta."""
    if int(n) != n or n < 1:
        raise ValueError(f"cycle count must be an integer >= 1, got {n!r}")
    params.period  # noqa: B018  (raises DegenerateSpectrum)
    return GeometricInvariant(s_n=2.0 * math.pi * n * math.sin(2.0 * params.theta), n=int(n))


def aa_invariant_numeric(params: TwoLevelParams, n: int = 1, steps: int = 10_000) -> float:
    """2 ∫_0^{nT} <psi(t)|H|phi(t)> dt by trapezoid on explicit inner products."""
    span = n * params.period
    t = np.linspace(0.0, span, steps + 1)
    phi = trajectory(params, Selector.PHI, t)
    psi = trajectory(params, Selector.PSI, t)
    w = np.sum(np.conj(psi) * (phi * np.array([params.omega1, params.omega2])), axis=1)
    return float(np.trapezoid(2.0 * w.real, t))


def entropy_action_integral(
    params: TwoLevelParams,
    n: int = 1,
    steps: int = 10_000,
    t0: float = 0.0,
) -> float:
    """∫ <zeta|TS sigma_1|zeta> dt over [t0, t0 + nT].

    sigma_1 swaps the doublet rows, so the integrand is
    <phi|TS|psi> + <psi|TS|phi>, with TS rebuilt at every grid time.
    """
    if steps < 1000:
        raise ValueError(f"steps must be >= 1000, got {steps}")
    span = n * params.period
    t = np.linspace(t0, t0 + span, steps + 1)
    w = hamiltonian_elements(params).omega_phipsi
    phi = trajectory(params, Selector.PHI, t)
    psi = trajectory(params, Selector.PSI, t)
    # TS_k = w (phi_k psi_k^† + psi_k phi_k^†), shape (N, 2, 2)
    ts = w * (
        np.einsum("ni,nj->nij", phi, np.conj(psi))
        + np.einsum("ni,nj->nij", psi, np.conj(phi))
    )
    a = np.einsum("ni,nij,nj->n", np.conj(phi), ts, psi)
    b = np.einsum("ni,nij,nj->n", np.conj(psi), ts, phi)
    return float(np.trapezoid((a + b).real, t))


def variance_link(params: TwoLevelParams, t: float) -> tuple[float, float]:
    """(energy spread of |phi(t)>, omega_phipsi).

    The spread is ||(H - <H>)|phi(t)>||, which equals |omega_phipsi|; the
    sign of omega_phipsi follows (omega2 - omega1) sin 2theta.
    """
    phi, _ = _states(params, t)
    H = params.hamiltonian
    mean = np.vdot(phi, H @ phi).real
    spread = float(np.linalg.norm(H @ phi - mean * phi))
    return spread, hamiltonian_elements(params).omega_phipsi
