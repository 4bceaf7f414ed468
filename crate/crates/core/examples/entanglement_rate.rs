//! Logarithmic negativity and the band-averaged ebit rate versus cooperativity.

use eo_entangler::constants::TWO_PI;
use eo_entangler::gaussian::{ebit_rate, log_negativity, max_ebit_rate, steady_state_cm};
use eo_entangler::{derive_rates, NoiseOccupations, SystemParams};

fn main() -> eo_entangler::Result<()> {
    let p = SystemParams::reference();
    let rates = derive_rates(&p)?;
    let env = NoiseOccupations::from_params(&p);
    println!("{:>5} {:>8} {:>10} {:>12}", "C", "E_N", "BW/kHz", "ebit/s");
    for c in [0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9] {
        let r = rates.with_cooperativity(c)?;
        let e_n = log_negativity(&steady_state_cm(c, 0.5, 0.8, r.n_th_mode)?)?;
        let rep = ebit_rate(&r, &env)?;
        println!("{c:>5} {e_n:>8.4} {:>10.1} {:>12.4e}", rep.bandwidth / TWO_PI / 1e3, rep.ebit_rate);
    }

    for (label, eta_o) in [("eta_o = 0.5", 0.5), ("eta_o = 0.8", 0.8)] {
        let q = SystemParams { eta_optical: eta_o, ..p };
        let best = max_ebit_rate(&derive_rates(&q)?, &env)?;
        println!(
            "{label}: max {:.3} Mebit/s at C = {:.3}, BW = {:.3} MHz",
            best.report.ebit_rate / 1e6,
            best.cooperativity,
            best.report.bandwidth / TWO_PI / 1e6
        );
    }
    Ok(())
}
