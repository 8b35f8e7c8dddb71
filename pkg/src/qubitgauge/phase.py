"""Total, dynamical and geometric (Berry-like) phases of the qubit states.

All phases are returned unwrapped (never reduced mod 2 pi) except the
Pancharatnam value, which is only meaningful mod 2 pi. Cycle counts ``n``
run over signed periods, so omega2 < omega1 gives T < 0 and the cycle is
traversed backwards in t.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import QubitState, Selector, TwoLevelParams, hamiltonian_elements, initial_vector, trajectory
from .errors import ZeroOverlap
from .gauge import tilde_trajectory

__all__ = [
    "Selector",
    "PhaseDecomposition",
    "period",
    "overlap_phi",
    "overlap_psi_phi",
    "wrap_angle",
    "unwrap_phase",
    "total_phase",
    "overlap_phase_tracked",
    "dynamical_phase",
    "dynamical_phase_numeric",
    "geometric_phase",
    "geometric_phase_numeric",
    "decompose",
    "pancharatnam_phase",
    "pancharatnam_trajectory_phase",
]

TWO_PI = 2.0 * math.pi
# tracking grids resolve the fastest phase with at least this many points per 2 pi
POINTS_PER_TURN = 64
ZERO_OVERLAP_TOL = 1e-12


@dataclass(frozen=True)
class PhaseDecomposition:
    total: float
    dynamical: float
    geometric: float

    @property
    def residual(self) -> float:
        return abs(self.total - self.dynamical - self.geometric)


def period(params: TwoLevelParams) -> float:
    return params.period


def _check_cycles(n: int) -> int:
    if int(n) != n or n < 1:
        raise ValueError(f"cycle count must be an integer >= 1, got {n!r}")
    return int(n)


def _selector_energy(params: TwoLevelParams, selector: Selector) -> float:
    e = hamiltonian_elements(params)
    return e.omega_phiphi if selector is Selector.PHI else e.omega_psipsi


def overlap_phi(params: TwoLevelParams, t: float) -> complex:
    """<phi(0)|phi(t)> = |alpha|^2 e^{-i omega1 t} + |beta|^2 e^{-i omega2 t}."""
    return (
        abs(params.alpha) ** 2 * np.exp(-1j * params.omega1 * t)
        + abs(params.beta) ** 2 * np.exp(-1j * params.omega2 * t)
    )


def overlap_psi_phi(params: TwoLevelParams, t: float) -> complex:
    """<psi(0)|phi(t)>; for real amplitudes ½ sin2θ e^{-iω1 t}(e^{-i(ω2-ω1)t} - 1)."""
    ab = params.alpha * params.beta
    return ab * (np.exp(-1j * params.omega2 * t) - np.exp(-1j * params.omega1 * t))


def wrap_angle(x):
    """Reduce to [-pi, pi)."""
    return (np.asarray(x) + math.pi) % TWO_PI - math.pi


def unwrap_phase(values: np.ndarray) -> np.ndarray:
    """Continuous argument of a complex sequence (jumps > pi get branch fixes)."""
    return np.unwrap(np.angle(values))


def _tracking_points(params: TwoLevelParams, span: float, minimum: int) -> int:
    fastest = max(abs(params.omega1), abs(params.omega2), abs(params.omega_minus))
    turns = fastest * abs(span) / TWO_PI
    return max(minimum, POINTS_PER_TURN * math.ceil(turns) + 1)


def total_phase(
    params: TwoLevelParams,
    selector: Selector | str = Selector.PHI,
    n: int = 1,
    points: int = 10_000,
) -> float:
    """Unwrapped phase acquired by |sel(t)> over n cycles.

    The phase is tracked against the cyclic representative ~sel(t) (the
    f0 = 0 filtered state, which returns to itself after each period):
    chi(t) = arg <~sel(t)|sel(t)>, unwrapped along a grid on [0, nT].
    This is well defined for every theta, including where <sel(0)|sel(t)>
    passes through zero.
    """
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    span = n * params.period
    t = np.linspace(0.0, span, _tracking_points(params, span, points))
    states = trajectory(params, selector, t)
    ref = tilde_trajectory(params, 0.0, t, selector)
    chi = unwrap_phase(np.sum(np.conj(ref) * states, axis=1))
    return float(chi[-1] - chi[0])


def overlap_phase_tracked(
    params: TwoLevelParams,
    selector: Selector | str = Selector.PHI,
    n: int = 1,
    points: int = 10_000,
) -> float:
    """Unwrapped arg <sel(0)|sel(t)> at t = nT, tracked along a grid.

    Agrees with :func:`total_phase` mod 2 pi. The branch differs whenever
    the overlap curve winds around the origin (|<0|sel>| < |<1|sel>|), and
    the result is ill-defined if the overlap vanishes on the path.
    """
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    span = n * params.period
    t = np.linspace(0.0, span, _tracking_points(params, span, points))
    states = trajectory(params, selector, t)
    ov = states @ np.conj(initial_vector(params, selector))
    if np.min(np.abs(ov)) < ZERO_OVERLAP_TOL:
        raise ZeroOverlap("overlap with the initial state vanishes on the path")
    chi = unwrap_phase(ov)
    return float(chi[-1] - chi[0])


def dynamical_phase(
    params: TwoLevelParams, selector: Selector | str = Selector.PHI, n: int = 1
) -> float:
    """-n omega_sel,sel T."""
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    return -n * _selector_energy(params, selector) * params.period


def _five_point(fn, t: np.ndarray, h: float) -> np.ndarray:
    return (-fn(t + 2 * h) + 8 * fn(t + h) - 8 * fn(t - h) + fn(t - 2 * h)) / (12.0 * h)


def dynamical_phase_numeric(
    params: TwoLevelParams,
    selector: Selector | str = Selector.PHI,
    n: int = 1,
    steps: int = 10_000,
) -> float:
    """-∫ <sel|i d/dt|sel> dt by trapezoid, derivative by a 5-point stencil."""
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    span = n * params.period
    t = np.linspace(0.0, span, steps + 1)
    h = span / steps

    def states(s):
        return trajectory(params, selector, s)

    integrand = np.sum(np.conj(states(t)) * 1j * _five_point(states, t, h), axis=1).real
    return -float(np.trapezoid(integrand, t))


def geometric_phase(
    params: TwoLevelParams, selector: Selector | str = Selector.PHI, n: int = 1
) -> float:
    """2 pi n sin^2 theta for phi, 2 pi n cos^2 theta for psi.

    Independent of omega1 and omega2, which only need to differ.
    """
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    params.period  # noqa: B018  (raises DegenerateSpectrum)
    per_cycle = TWO_PI * math.sin(params.theta) ** 2
    if selector is Selector.PSI:
        # complement rather than cos^2 keeps the per-cycle sum at 2 pi bitwise
        per_cycle = TWO_PI - per_cycle
    return n * per_cycle


def geometric_phase_numeric(
    params: TwoLevelParams,
    selector: Selector | str = Selector.PHI,
    n: int = 1,
    steps: int = 100_000,
    f0: float = 0.0,
) -> float:
    """∫_0^{nT} <~sel(t)| i d/dt |~sel(t)> dt on a uniform grid.

    Trapezoid rule with a second-order central difference at the grid
    spacing, so the error is O(steps^-2).
    """
    if steps < 1000:
        raise ValueError(f"steps must be >= 1000, got {steps}")
    selector = Selector.parse(selector)
    n = _check_cycles(n)
    span = n * params.period
    t = np.linspace(0.0, span, steps + 1)
    h = span / steps
    ket = tilde_trajectory(params, f0, t, selector)
    dket = (
        tilde_trajectory(params, f0, t + h, selector)
        - tilde_trajectory(params, f0, t - h, selector)
    ) / (2.0 * h)
    integrand = np.sum(np.conj(ket) * 1j * dket, axis=1).real
    return float(np.trapezoid(integrand, t))


def decompose(
    params: TwoLevelParams, selector: Selector | str = Selector.PHI, n: int = 1
) -> PhaseDecomposition:
    return PhaseDecomposition(
        total=total_phase(params, selector, n),
        dynamical=dynamical_phase(params, selector, n),
        geometric=geometric_phase(params, selector, n),
    )


def pancharatnam_phase(states: Sequence[QubitState] | np.ndarray) -> float:
    """-arg(<s0|s1><s1|s2>...<s_{m-1}|s0>), summed link by link.

    Only defined mod 2 pi; the link-wise sum keeps it continuous as the
    sampling densifies.
    """
    if isinstance(states, np.ndarray):
        vecs = np.asarray(states, dtype=complex)
    else:
        vecs = np.array([s.vector for s in states])
    if vecs.ndim != 2 or vecs.shape[0] < 3:
        raise ValueError("need at least 3 states")
    links = np.sum(np.conj(vecs) * np.roll(vecs, -1, axis=0), axis=1)
    if np.min(np.abs(links)) < ZERO_OVERLAP_TOL:
        raise ZeroOverlap("consecutive states are orthogonal")
    return -float(np.sum(np.angle(links)))


def pancharatnam_trajectory_phase(
    params: TwoLevelParams,
    selector: Selector | str = Selector.PHI,
    n: int = 1,
    samples: int = 10_000,
) -> float:
    """Pancharatnam phase of ``samples`` evolved states on [0, nT)."""
    n = _check_cycles(n)
    t = np.linspace(0.0, n * params.period, samples, endpoint=False)
    return pancharatnam_phase(trajectory(params, Selector.parse(selector), t))
