//! Steady-state covariance matrix, squeezing angle and Wigner projections.

use eo_entangler::gaussian::{squeezing_analysis, steady_state_cm, wigner_normalization_mc, wigner_projection, QuadraturePair};

fn main() -> eo_entangler::Result<()> {
    let v = steady_state_cm(0.3, 0.5, 0.8, 0.0)?;
    println!("V =\n{}", v.matrix());
    let s = squeezing_analysis(&v)?;
    println!("theta = {:.2} deg", s.angle_theta);
    println!("var- = {:.5}, var+ = {:.5}, purity = {:.4}", s.var_minus, s.var_plus, s.purity);
    for pair in [
        QuadraturePair::Optical,
        QuadraturePair::Microwave,
        QuadraturePair::AmplitudeCross,
        QuadraturePair::PhaseCross,
    ] {
        let m = wigner_projection(&v, pair);
        println!(
            "{pair:?}: [[{:.4}, {:.4}], [{:.4}, {:.4}]]",
            m[(0, 0)],
            m[(0, 1)],
            m[(1, 0)],
            m[(1, 1)]
        );
    }
    println!("MC normalization = {:.4}", wigner_normalization_mc(&v, 400_000, 1)?);

    let ideal = squeezing_analysis(&steady_state_cm(0.3, 1.0, 1.0, 0.0)?)?;
    println!(
        "lossless: var- * var+ = {:.6}, r_eo = {:.4}",
        ideal.var_minus * ideal.var_plus,
        ideal.r_eo
    );
    Ok(())
}
