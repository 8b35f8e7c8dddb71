"""Geometric phase and gauge structure of two-level (qubit) time evolution.

Closed-form phases, gauge transformations and the free-energy split of the
Hamiltonian, each paired with an independent numeric check.
"""
from .core import (
    EnergyElements,
    QubitState,
    Selector,
    StateDoublet,
    TwoLevelParams,
    basis_states,
    evolve_numeric,
    evolve_phi,
    evolve_psi,
    hamiltonian_elements,
    make_params,
    reconstruct_H,
)
from .errors import (
    DegenerateSpectrum,
    InfiniteCoupling,
    NonFinite,
    QubitGaugeError,
    StepTooLarge,
    ZeroOverlap,
)
from .free_energy import (
    GeometricInvariant,
    ThermoDecomposition,
    aa_invariant,
    entropy_action_integral,
    entropy_term,
    free_energy_operator,
    variance_link,
)
from .gauge import (
    GaugeField,
    GaugeFunction,
    gauge_field_transform,
    gauge_transform_doublet,
    tilde_state,
)
from .phase import (
    PhaseDecomposition,
    decompose,
    dynamical_phase,
    geometric_phase,
    geometric_phase_numeric,
    overlap_phi,
    overlap_psi_phi,
    pancharatnam_phase,
    period,
    total_phase,
)

__version__ = "0.1.0"
