//! Beam-splitter conversion: efficiency, bandwidth and transfer fidelities.

use eo_entangler::constants::TWO_PI;
use eo_entangler::spectral::{conversion_bandwidth, conversion_efficiency};
use eo_entangler::transfer::{convert_fidelity_cat, convert_fidelity_gaussian, convert_fidelity_gaussian_strict, InputState, Link};
use eo_entangler::{derive_rates, SystemParams};
use num_complex::Complex64;

fn main() -> eo_entangler::Result<()> {
    let rates = derive_rates(&SystemParams::reference())?;
    for c in [0.1, 0.5, 1.0, 2.0] {
        let r = rates.with_cooperativity(c)?;
        println!(
            "C = {c}: peak efficiency {:.4}, bandwidth {:.3} MHz",
            conversion_efficiency(0.0, &r),
            conversion_bandwidth(&r) / TWO_PI / 1e6
        );
    }

    let sq = InputState::gaussian(Complex64::new(2.0, 0.0), 1.0);
    let cat = InputState::cat(Complex64::new(2.0, 0.0), std::f64::consts::PI);
    for c in [0.0, 0.075, 0.3, 0.6, 1.0] {
        let dev = Link::new(c, 0.5, 0.8, 0.0);
        let ideal = Link::new(c, 1.0, 1.0, 0.0);
        println!(
            "C = {c:<5}: |2,1> {:.4e} / {:.4}   cat {:.4} / {:.4}   (device / lossless)",
            convert_fidelity_gaussian(&sq, &dev)?.fidelity,
            convert_fidelity_gaussian(&sq, &ideal)?.fidelity,
            convert_fidelity_cat(&cat, &dev)?.fidelity,
            convert_fidelity_cat(&cat, &ideal)?.fidelity
        );
    }
    let s = convert_fidelity_gaussian_strict(&sq, &Link::new(0.3, 0.5, 0.8, 0.0), None)?;
    println!(
        "strict check at C = 0.3: closed form {:.4e}, squared weights {:.4e}, phase-space oracle {:.4e}",
        s.closed_form, s.squared_weights, s.oracle
    );
    Ok(())
}
