//! A configured sweep over pump power, printed as JSON.

use eo_entangler::harness::{run_sweep, Exec, RunConfig, Scale, SweepSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut cfg = RunConfig::reference();
    cfg.sweep = Some(SweepSpec {
        scale: Scale::Log,
        ..SweepSpec::linear("pump_power", 1e-6, 8e-5, 6)
    });
    cfg.outputs = ["C", "E_N", "ebit_rate", "F_teleport_gaussian"].map(String::from).to_vec();
    print!("{}", run_sweep(&cfg, Exec::Serial)?.to_json());
    Ok(())
}
