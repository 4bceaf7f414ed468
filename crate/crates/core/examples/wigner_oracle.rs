//! Cat-state fidelities against an explicit phase-space overlap on a grid.

use eo_entangler::gaussian::{squeezing_analysis, steady_state_cm};
use eo_entangler::transfer::{
    conversion_transmissivity, convert_cat_oracle, convert_fidelity_cat, teleport_cat_oracle, teleport_fidelity_cat, GridSpec, InputState,
    Link,
};
use num_complex::Complex64;

fn main() -> eo_entangler::Result<()> {
    let spec = GridSpec {
        half_extent: 9.0,
        points: 301,
    };
    for alpha in [1.0, 2.0] {
        let cat = InputState::cat(Complex64::new(alpha, 0.0), std::f64::consts::PI);
        for c in [0.2, 0.5, 0.8] {
            let link = Link::new(c, 1.0, 1.0, 0.0);
            let var = squeezing_analysis(&steady_state_cm(c, 1.0, 1.0, 0.0)?)?.var_minus;
            let t = teleport_fidelity_cat(&cat, &link)?.fidelity;
            let t_grid = teleport_cat_oracle(&cat, var, Some(spec))?;
            let v = convert_fidelity_cat(&cat, &link)?.fidelity;
            let v_grid = convert_cat_oracle(&cat, conversion_transmissivity(&link), 1.0, Some(spec))?;
            println!("alpha = {alpha}, C = {c}: teleport {t:.5} vs grid {t_grid:.5}; convert {v:.5} vs grid {v_grid:.5}");
        }
    }
    Ok(())
}
