//! Write every figure preset to CSV in a temporary directory.

use eo_entangler::harness::{figure_command, Exec, Format, RunConfig, FIGURES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("eo-entangler-figures");
    std::fs::create_dir_all(&dir)?;
    let cfg = RunConfig::reference();
    for name in FIGURES {
        let ds = figure_command(name, &cfg, Exec::Parallel)?;
        let path = dir.join(format!("{name}.csv"));
        std::fs::write(&path, ds.render(Format::Csv))?;
        println!(
            "{name}: {} rows x {} columns -> {}",
            ds.rows.len(),
            ds.columns.len(),
            path.display()
        );
    }
    Ok(())
}
