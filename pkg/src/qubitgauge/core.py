"""Two-level system: configuration, states, closed-form and RK4 evolution.

Units are hbar = 1, so every omega is an angular frequency and also an energy.
The basis is {|0>, |1>}, the eigenbasis of H = diag(omega1, omega2).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum, NonFinite, StepTooLarge

__all__ = [
    "Selector",
    "TwoLevelParams",
    "QubitState",
    "StateDoublet",
    "EnergyElements",
    "make_params",
    "basis_states",
    "initial_vector",
    "trajectory",
    "evolve",
    "evolve_phi",
    "evolve_psi",
    "evolve_numeric",
    "rk4_propagate",
    "hamiltonian_elements",
    "reconstruct_H",
    "projector",
]

# |cos 2theta| below this counts as the g = tan 2theta singularity
SINGULAR_COS_TOL = 1e-12


class Selector(enum.Enum):
    """Which of the two prepared states an operation refers to."""

    PHI = "phi"
    PSI = "psi"

    @classmethod
    def parse(cls, value: "Selector | str") -> "Selector":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class TwoLevelParams:
    """Physical configuration (omega1, omega2, theta, gamma1, gamma2).

    The closed-form phase results in this package assume gamma1 = gamma2 = 0.
    Nonzero gammas are carried through state preparation and evolution but
    no closed-form claim is made for them.
    """

    omega1: float
    omega2: float
    theta: float
    gamma1: float = 0.0
    gamma2: float = 0.0

    def __post_init__(self) -> None:
        for name in ("omega1", "omega2", "theta", "gamma1", "gamma2"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise NonFinite(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))

    @property
    def omega_minus(self) -> float:
        return self.omega2 - self.omega1

    @property
    def is_degenerate(self) -> bool:
        return self.omega1 == self.omega2

    @property
    def delta_omega(self) -> float:
        """omega_psipsi - omega_phiphi = (omega2 - omega1) cos 2theta."""
        return self.omega_minus * math.cos(2.0 * self.theta)

    @property
    def period(self) -> float:
        """Signed period 2 pi / (omega2 - omega1); negative when omega2 < omega1."""
        if self.is_degenerate:
            raise DegenerateSpectrum(
                f"period undefined for omega1 == omega2 == {self.omega1}"
            )
        return 2.0 * math.pi / self.omega_minus

    @property
    def coupling_is_finite(self) -> bool:
        return abs(math.cos(2.0 * self.theta)) > SINGULAR_COS_TOL

    @property
    def coupling(self) -> float:
        """g = tan 2theta, or +inf at the singular angles."""
        if not self.coupling_is_finite:
            return math.inf
        return math.tan(2.0 * self.theta)

    @property
    def alpha(self) -> complex:
        return complex(np.exp(1j * self.gamma1) * math.cos(self.theta))

    @property
    def beta(self) -> complex:
        return complex(np.exp(1j * self.gamma2) * math.sin(self.theta))

    @property
    def hamiltonian(self) -> np.ndarray:
        return np.diag([self.omega1, self.omega2]).astype(complex)


def make_params(
    omega1: float,
    omega2: float,
    theta: float,
    gamma1: float = 0.0,
    gamma2: float = 0.0,
) -> TwoLevelParams:
    return TwoLevelParams(omega1, omega2, theta, gamma1, gamma2)


@dataclass(frozen=True)
class QubitState:
    """Amplitude pair over {|0>, |1>}."""

    amp0: complex
    amp1: complex

    @classmethod
    def from_vector(cls, vec) -> "QubitState":
        v = np.asarray(vec, dtype=complex)
        return cls(complex(v[0]), complex(v[1]))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.amp0, self.amp1], dtype=complex)

    def inner(self, other: "QubitState") -> complex:
        """<self|other>."""
        return self.amp0.conjugate() * other.amp0 + self.amp1.conjugate() * other.amp1

    def norm(self) -> float:
        return math.sqrt(abs(self.amp0) ** 2 + abs(self.amp1) ** 2)

    def __mul__(self, scalar: complex) -> "QubitState":
        return QubitState(scalar * self.amp0, scalar * self.amp1)

    __rmul__ = __mul__


@dataclass(frozen=True)
class StateDoublet:
    """Ordered pair zeta = (|phi>, |psi>)^T.

    Operators on the doublet (sigma_1, omega_d, gauge rotations) act on the
    pair index, never on the Hilbert-space amplitudes.
    """

    phi: QubitState
    psi: QubitState

    @classmethod
    def from_array(cls, arr) -> "StateDoublet":
        a = np.asarray(arr, dtype=complex)
        return cls(QubitState.from_vector(a[0]), QubitState.from_vector(a[1]))

    def as_array(self) -> np.ndarray:
        """Shape (2, 2): row = doublet index, column = Hilbert amplitude."""
        return np.array([self.phi.vector, self.psi.vector])


@dataclass(frozen=True)
class EnergyElements:
    omega_phiphi: float
    omega_psipsi: float
    omega_phipsi: float

    @property
    def omega_psiphi(self) -> float:
        return self.omega_phipsi


def initial_vector(params: TwoLevelParams, selector: Selector | str = Selector.PHI) -> np.ndarray:
    """Prepared state at t = 0.

    phi = alpha|0> + beta|1>, psi = -beta*|0> + alpha*|1>. The conjugates keep
    psi orthogonal to phi when the gammas are nonzero; for real alpha, beta
    this is the plain rotation.
    """
    a, b = params.alpha, params.beta
    if Selector.parse(selector) is Selector.PHI:
        return np.array([a, b], dtype=complex)
    return np.array([-b.conjugate(), a.conjugate()], dtype=complex)


def basis_states(params: TwoLevelParams) -> StateDoublet:
    return StateDoublet(
        QubitState.from_vector(initial_vector(params, Selector.PHI)),
        QubitState.from_vector(initial_vector(params, Selector.PSI)),
    )


def trajectory(params: TwoLevelParams, selector: Selector | str, times) -> np.ndarray:
    """Closed-form e^{-iHt}|sel(0)> on an array of times, shape (len(times), 2)."""
    t = np.atleast_1d(np.asarray(times, dtype=float))
    v0 = initial_vector(params, selector)
    out = np.empty((t.size, 2), dtype=complex)
    out[:, 0] = np.exp(-1j * params.omega1 * t) * v0[0]
    out[:, 1] = np.exp(-1j * params.omega2 * t) * v0[1]
    return out


def evolve(params: TwoLevelParams, selector: Selector | str, t: float) -> QubitState:
    return QubitState.from_vector(trajectory(params, selector, t)[0])


def evolve_phi(params: TwoLevelParams, t: float) -> QubitState:
    """|phi(t)> = e^{-i omega1 t}(cos th |0> + e^{-i(omega2-omega1)t} sin th |1>)."""
    return evolve(params, Selector.PHI, t)


def evolve_psi(params: TwoLevelParams, t: float) -> QubitState:
    return evolve(params, Selector.PSI, t)


def rk4_propagate(
    params: TwoLevelParams,
    y0: np.ndarray,
    t_final: float,
    dt: float = 1e-4,
) -> np.ndarray:
    """Fixed-step RK4 for i dy/dt = H y on one vector (2,) or columns (2, k).

    The step is shrunk so an integer number of steps lands exactly on
    ``t_final``; negative ``t_final`` integrates backwards. No
    renormalisation is applied, so norm drift is visible to the caller.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if not params.is_degenerate and dt > abs(params.period) / 100.0:
        raise StepTooLarge(
            f"dt={dt} exceeds |T|/100 = {abs(params.period) / 100.0}"
        )
    y = np.array(y0, dtype=complex)
    if t_final == 0:
        return y
    n_steps = math.ceil(abs(t_final) / dt)
    h = t_final / n_steps
    minus_iH = -1j * params.hamiltonian

    for _ in range(n_steps):
        k1 = minus_iH @ y
        k2 = minus_iH @ (y + 0.5 * h * k1)
        k3 = minus_iH @ (y + 0.5 * h * k2)
        k4 = minus_iH @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def evolve_numeric(
    params: TwoLevelParams,
    state0: QubitState,
    t_final: float,
    dt: float = 1e-4,
) -> QubitState:
    """RK4 counterpart of :func:`evolve`, independent of the closed form."""
    return QubitState.from_vector(rk4_propagate(params, state0.vector, t_final, dt))


def hamiltonian_elements(params: TwoLevelParams) -> EnergyElements:
    """Matrix elements of H in the prepared states (time independent)."""
    c2 = math.cos(params.theta) ** 2
    s2 = math.sin(params.theta) ** 2
    return EnergyElements(
        omega_phiphi=params.omega1 * c2 + params.omega2 * s2,
        omega_psipsi=params.omega1 * s2 + params.omega2 * c2,
        omega_phipsi=0.5 * params.omega_minus * math.sin(2.0 * params.theta),
    )


def projector(ket: np.ndarray, bra: np.ndarray) -> np.ndarray:
    """|ket><bra| as a 2x2 matrix."""
    return np.outer(ket, np.conj(bra))


def reconstruct_H(params: TwoLevelParams, t: float) -> np.ndarray:
    """Rebuild H from projectors on the time-dependent states |phi(t)>, |psi(t)>."""
    e = hamiltonian_elements(params)
    phi = trajectory(params, Selector.PHI, t)[0]
    psi = trajectory(params, Selector.PSI, t)[0]
    return (
        e.omega_phiphi * projector(phi, phi)
        + e.omega_psipsi * projector(psi, psi)
        + e.omega_phipsi * (projector(phi, psi) + projector(psi, phi))
    )
