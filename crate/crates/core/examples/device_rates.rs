//! Loss rates, cooperativity and the pump power needed for C = 1.

use eo_entangler::constants::TWO_PI;
use eo_entangler::model::{cooperativity_for_power, pump_power_for_cooperativity, thermal_occupancy};
use eo_entangler::{derive_rates, SystemParams};

fn main() -> eo_entangler::Result<()> {
    let p = SystemParams::reference();
    let r = derive_rates(&p)?;
    println!(
        "kappa_o/2pi   = {:>10.3} kHz (int {:.3}, ext {:.3})",
        r.kappa_o / TWO_PI / 1e3,
        r.kappa_i_o / TWO_PI / 1e3,
        r.kappa_e_o / TWO_PI / 1e3
    );
    println!(
        "kappa_mw/2pi  = {:>10.3} MHz (int {:.3}, ext {:.3})",
        r.kappa_mw / TWO_PI / 1e6,
        r.kappa_i_mw / TWO_PI / 1e6,
        r.kappa_e_mw / TWO_PI / 1e6
    );
    println!("pump photons  = {:.4e}", r.pump_photons);
    println!("C at {:.1} uW = {:.4}", p.pump_power * 1e6, r.cooperativity);
    println!("P(C=1)        = {:.2} uW", pump_power_for_cooperativity(1.0, &p)? * 1e6);

    let crit = SystemParams {
        eta_optical: 0.5,
        eta_microwave: 0.5,
        ..p
    };
    println!(
        "P(C=1), both critically coupled = {:.2} uW",
        pump_power_for_cooperativity(1.0, &crit)? * 1e6
    );

    for uw in [5.0, 10.0, 19.2, 40.0] {
        println!("  {uw:>5.1} uW -> C = {:.3}", cooperativity_for_power(uw * 1e-6, &p)?);
    }
    for t in [0.01, 0.1, 0.8, 2.1] {
        println!("  n_th({t} K, 9 GHz) = {:.4e}", thermal_occupancy(t, p.microwave_freq));
    }
    Ok(())
}
