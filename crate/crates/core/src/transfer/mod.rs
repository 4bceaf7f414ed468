//! Teleportation and direct-conversion fidelities, with a phase-space grid oracle.

mod fidelity;
mod grid;
mod state;

pub use fidelity::{
    conversion_transmissivity, convert_classical_limit, convert_fidelity_cat, convert_fidelity_gaussian, convert_fidelity_gaussian_strict,
    convert_fidelity_gaussian_with, gaussian_fidelity, teleport_cat_classical_limit, teleport_classical_limit, teleport_fidelity_cat,
    teleport_fidelity_from_negativity, teleport_fidelity_gaussian, teleport_fidelity_gaussian_det, teleport_noise, DisplacementWeights,
    FidelityResult, Link, Protocol, StrictComparison,
};
pub use grid::{cat_wigner, convert_cat_oracle, gaussian_wigner, teleport_cat_oracle, wigner_overlap_fidelity, GridSpec, WignerGrid};
pub use state::InputState;
