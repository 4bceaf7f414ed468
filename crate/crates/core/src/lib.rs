//! Analytical model of a triply-resonant electro-optic source of entangled
//! microwave-optical fields: device rates, output spectra, Gaussian
//! entanglement measures, and state-transfer fidelities.
//!
//! Runnable walkthroughs live in `examples/`; see `cargo run --example device_rates`.

pub mod constants;
pub mod error;
pub mod gaussian;
pub mod harness;
pub mod model;
pub mod quadrature;
pub mod spectral;
pub mod transfer;

pub use error::{Error, Result};
pub use model::{derive_rates, DerivedRates, MaterialParams, NoiseOccupations, SystemParams};
