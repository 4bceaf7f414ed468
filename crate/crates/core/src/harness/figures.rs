//! Presets that emit the columns needed to replot each published figure.

use super::config::RunConfig;
use super::dataset::{Cell, Column, Dataset, Provenance};
use super::sweep::{
    at_cooperativity, cooperativity_grid, device_link, entanglement_columns, entanglement_row, fidelity_columns, fidelity_row, Exec,
};
use super::RunError;
use crate::constants::TWO_PI;
use crate::model::{derive_rates, NoiseOccupations, SystemParams};
use crate::spectral::{conversion_bandwidth, emission_bandwidth, integrated_flux, sample_spectrum, Port};
use crate::transfer::{Link, Protocol};

pub const FIGURES: [&str; 7] = ["fig4a", "fig4b", "fig5a", "fig5b", "fig6b", "fig6d", "fig6e"];

const COLD: f64 = 0.01;
const HOT: f64 = 0.8;
const SPECTRUM_POINTS: usize = 1001;

fn grid() -> Vec<f64> {
    cooperativity_grid(0.01, 0.99, 99)
}

fn with_variant(variant: &str, row: Vec<Cell>) -> Vec<Cell> {
    let mut r: Vec<Cell> = vec![variant.into()];
    r.extend(row);
    r
}

fn variant_columns(rest: Vec<Column>) -> Vec<Column> {
    let mut c = vec![Column::new("variant", "")];
    c.extend(rest);
    c
}

pub fn figure_command(name: &str, cfg: &RunConfig, exec: Exec) -> Result<Dataset, RunError> {
    cfg.validate()?;
    let base = cfg.system;
    let prov = Provenance::new(cfg, &format!("figure {name}"));
    match name {
        "fig4a" => {
            let mut ds = Dataset::new(
                vec![
                    Column::new("T_bath_K", "K"),
                    Column::new("freq_offset_hz", "Hz"),
                    Column::new("optical_flux_density", "photons/s/Hz"),
                    Column::new("microwave_flux_density", "photons/s/Hz"),
                ],
                prov,
            );
            let cold = derive_rates(&at_cooperativity(&base, 0.3)?)?;
            let half = 4.0 * emission_bandwidth(&cold)?;
            for t in [COLD, HOT] {
                let p = SystemParams {
                    bath_temp: t,
                    ..at_cooperativity(&base, 0.3)?
                };
                let rates = derive_rates(&p)?;
                for s in sample_spectrum(&rates, &NoiseOccupations::from_params(&p), half, SPECTRUM_POINTS)? {
                    ds.push(vec![
                        t.into(),
                        (s.freq_offset / TWO_PI).into(),
                        s.optical.into(),
                        s.microwave.into(),
                    ]);
                }
            }
            Ok(ds)
        }
        "fig4b" => {
            let mut ds = Dataset::new(
                vec![
                    Column::new("C", "1"),
                    Column::new("flux_optical", "photons/s"),
                    Column::new("flux_microwave", "photons/s"),
                    Column::new("status", ""),
                ],
                prov,
            );
            let cs = grid();
            let cold = SystemParams { bath_temp: COLD, ..base };
            let rows = exec.map(cs.len(), |i| {
                let c = cs[i];
                let eval = || -> crate::Result<(f64, f64)> {
                    let p = at_cooperativity(&cold, c)?;
                    let (r, env) = (derive_rates(&p)?, NoiseOccupations::from_params(&p));
                    Ok((
                        integrated_flux(&r, Port::Optical, &env)?,
                        integrated_flux(&r, Port::Microwave, &env)?,
                    ))
                };
                match eval() {
                    Ok((o, m)) => vec![c.into(), o.into(), m.into(), "ok".into()],
                    Err(e) => vec![c.into(), f64::NAN.into(), f64::NAN.into(), e.to_string().into()],
                }
            });
            rows.into_iter().for_each(|r| ds.push(r));
            Ok(ds)
        }
        "fig5a" => {
            let mut ds = Dataset::new(
                vec![
                    Column::new("T_bath_K", "K"),
                    Column::new("C", "1"),
                    Column::new("E_N", "ebit"),
                    Column::new("status", ""),
                ],
                prov,
            );
            let cs = grid();
            for t in [COLD, HOT] {
                let p = SystemParams { bath_temp: t, ..base };
                for row in exec.map(cs.len(), |i| entanglement_row(&p, cs[i])) {
                    ds.push(vec![t.into(), row[0].clone(), row[2].clone(), row[6].clone()]);
                }
            }
            Ok(ds)
        }
        "fig5b" => {
            let mut cols = vec![Column::new("variant", ""), Column::new("T_bath_K", "K")];
            cols.extend(entanglement_columns());
            let mut ds = Dataset::new(cols, prov);
            let cs = grid();
            let strong = SystemParams {
                eta_optical: 0.8,
                eta_microwave: 0.8,
                ..base
            };
            for (variant, p) in [("device", base), ("eta_0.8", strong)] {
                for t in [COLD, HOT] {
                    let p = SystemParams { bath_temp: t, ..p };
                    for row in exec.map(cs.len(), |i| entanglement_row(&p, cs[i])) {
                        let mut r: Vec<Cell> = vec![variant.into(), t.into()];
                        r.extend(row);
                        ds.push(r);
                    }
                }
            }
            Ok(ds)
        }
        "fig6b" | "fig6e" => {
            let protocol = if name == "fig6b" { Protocol::Teleport } else { Protocol::Convert };
            let mut ds = Dataset::new(variant_columns(fidelity_columns()), prov);
            let cs = grid();
            let states: Vec<_> = [cfg.gaussian_state(), cfg.cat_state()].into_iter().flatten().copied().collect();
            let mut jobs = Vec::new();
            for (variant, t) in [("device", COLD), ("device", HOT), ("lossless", 0.0)] {
                for s in &states {
                    for &c in &cs {
                        jobs.push((variant, t, *s, c));
                    }
                }
            }
            let rows = exec.map(jobs.len(), |i| {
                let (variant, t, s, c) = jobs[i];
                let link = if variant == "lossless" {
                    Ok(Link::new(c, 1.0, 1.0, 0.0))
                } else {
                    device_link(&base, c, t)
                };
                with_variant(variant, fidelity_row(protocol, &s, link, t))
            });
            rows.into_iter().for_each(|r| ds.push(r));
            Ok(ds)
        }
        "fig6d" => {
            let mut ds = Dataset::new(vec![Column::new("C", "1"), Column::new("conversion_bandwidth_hz", "Hz")], prov);
            let rates = derive_rates(&base)?;
            for c in cooperativity_grid(0.0, 2.0, 101) {
                ds.push(vec![
                    c.into(),
                    (conversion_bandwidth(&rates.with_cooperativity(c)?) / TWO_PI).into(),
                ]);
            }
            Ok(ds)
        }
        other => Err(RunError::validation(
            "figure",
            format!("unknown preset `{other}`; expected one of {}", FIGURES.join(", ")),
        )),
    }
}
