//! Teleportation fidelities of a squeezed coherent state and a cat state.

use eo_entangler::transfer::{teleport_classical_limit, teleport_fidelity_cat, teleport_fidelity_gaussian, InputState, Link};
use num_complex::Complex64;

fn main() -> eo_entangler::Result<()> {
    let sq = InputState::gaussian(Complex64::new(2.0, 0.0), 1.0);
    let cat = InputState::cat(Complex64::new(2.0, 0.0), std::f64::consts::PI);
    println!("classical bound for r = 1: {:.4}", teleport_classical_limit(1.0)?);
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10}",
        "C", "|2,1> dev", "cat dev", "|2,1> ideal", "cat ideal"
    );
    for c in [0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
        let dev = Link::new(c, 0.5, 0.8, 0.0);
        let ideal = Link::new(c, 1.0, 1.0, 0.0);
        println!(
            "{c:>6} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
            teleport_fidelity_gaussian(&sq, &dev)?.fidelity,
            teleport_fidelity_cat(&cat, &dev)?.fidelity,
            teleport_fidelity_gaussian(&sq, &ideal)?.fidelity,
            teleport_fidelity_cat(&cat, &ideal)?.fidelity
        );
    }
    let bench = Link::new(0.075, 0.31, 0.26, 0.0);
    println!(
        "benchmark device: |2,1> {:.3}, cat {:.3}",
        teleport_fidelity_gaussian(&sq, &bench)?.fidelity,
        teleport_fidelity_cat(&cat, &bench)?.fidelity
    );
    Ok(())
}
