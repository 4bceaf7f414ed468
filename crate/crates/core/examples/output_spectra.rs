//! Output photon-flux spectra of both ports, bandwidth and integrated flux.

use eo_entangler::constants::TWO_PI;
use eo_entangler::spectral::{emission_bandwidth, integrated_flux, output_spectrum, Port};
use eo_entangler::{derive_rates, NoiseOccupations, SystemParams};

fn main() -> eo_entangler::Result<()> {
    let p = SystemParams::reference();
    let cold = derive_rates(&p)?;
    let hot_p = SystemParams { bath_temp: 0.8, ..p };
    let hot = derive_rates(&hot_p)?;
    let (env_c, env_h) = (NoiseOccupations::from_params(&p), NoiseOccupations::from_params(&hot_p));
    let bw = emission_bandwidth(&cold)?;
    println!("C = {:.3}, emission bandwidth = {:.3} kHz", cold.cooperativity, bw / TWO_PI / 1e3);
    println!("{:>12} {:>12} {:>12} {:>12}", "offset/kHz", "N_o", "N_mw 10 mK", "N_mw 800 mK");
    for k in -4..=4 {
        let w = k as f64 * bw / 2.0;
        println!(
            "{:>12.1} {:>12.4e} {:>12.4e} {:>12.4e}",
            w / TWO_PI / 1e3,
            output_spectrum(w, &cold, Port::Optical, &env_c)?,
            output_spectrum(w, &cold, Port::Microwave, &env_c)?,
            output_spectrum(w, &hot, Port::Microwave, &env_h)?
        );
    }
    for c in [0.1, 0.3, 0.6, 0.9] {
        let r = cold.with_cooperativity(c)?;
        println!(
            "C = {c}: flux optical {:.4e} /s, microwave {:.4e} /s",
            integrated_flux(&r, Port::Optical, &env_c)?,
            integrated_flux(&r, Port::Microwave, &env_c)?
        );
    }
    Ok(())
}
