//! Two-mode Gaussian states of the optical and microwave output fields.

mod band;
mod covariance;
mod entanglement;
mod squeezing;
mod wigner;

pub use band::{band_averaged_cm, band_averaged_cm_with, ebit_rate, max_ebit_rate, EbitOptimum, BAND_NODES};
pub use covariance::{steady_state_cm, CovarianceMatrix4};
pub use entanglement::{
    entanglement_formation, entanglement_report, formation_from_symplectic, log_negativity, log_negativity_from_symplectic,
    matched_log_negativity, pt_symplectic_min, EntanglementReport,
};
pub use squeezing::{electro_optic_squeezing, quadrature_variances_closed_form, squeezing_analysis, SqueezingReport};
pub use wigner::{wigner_density, wigner_normalization_mc, wigner_projection, QuadraturePair};
