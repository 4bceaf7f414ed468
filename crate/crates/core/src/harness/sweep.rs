use rayon::prelude::*;

use super::config::RunConfig;
use super::dataset::{Cell, Column, Dataset, Provenance};
use super::registry::{quantity, variable_unit, Point};
use super::RunError;
use crate::constants::TWO_PI;
use crate::error::Result;
use crate::gaussian::{ebit_rate, log_negativity, steady_state_cm};
use crate::model::{derive_rates, pump_power_for_cooperativity, NoiseOccupations, SystemParams};
use crate::spectral::{emission_bandwidth, sample_spectrum};
use crate::transfer::{
    convert_fidelity_cat, convert_fidelity_gaussian, teleport_fidelity_cat, teleport_fidelity_gaussian, FidelityResult, InputState, Link,
    Protocol,
};

/// How sweep points are evaluated. Output order never depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Serial,
    /// Rayon pool capped by `EO_ENTANGLER_THREADS` when set.
    Parallel,
}

impl Exec {
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Exec::Serial => (0..n).map(f).collect(),
            Exec::Parallel => {
                let threads = std::env::var("EO_ENTANGLER_THREADS")
                    .ok()
                    .and_then(|s| s.trim().parse().ok())
                    .unwrap_or(0);
                match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                    Ok(pool) => pool.install(|| (0..n).into_par_iter().map(&f).collect()),
                    Err(_) => (0..n).map(f).collect(),
                }
            }
        }
    }
}

/// `points` cooperativities evenly spaced on [lo, hi].
pub fn cooperativity_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points)
        .map(|k| lo + (hi - lo) * k as f64 / (points - 1).max(1) as f64)
        .collect()
}

/// Parameters with the pump power chosen to reach cooperativity `c`.
pub(super) fn at_cooperativity(base: &SystemParams, c: f64) -> Result<SystemParams> {
    Ok(SystemParams {
        pump_power: pump_power_for_cooperativity(c, base)?,
        ..*base
    })
}

fn point_params(base: &SystemParams, variable: &str, value: f64) -> Result<SystemParams> {
    if variable == "C" {
        return at_cooperativity(base, value);
    }
    let p = base
        .with_field(variable, value)
        .expect("sweep variable validated against the field list");
    p.validate()?;
    Ok(p)
}

fn status(errors: &[String]) -> Cell {
    if errors.is_empty() {
        "ok".into()
    } else {
        errors.join("; ").into()
    }
}

/// Evaluate every requested quantity at every sweep point. Failures land in the
/// `status` column instead of aborting the sweep.
pub fn run_sweep(cfg: &RunConfig, exec: Exec) -> std::result::Result<Dataset, RunError> {
    cfg.validate()?;
    let sweep = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| RunError::validation("sweep", "the sweep command needs a sweep section"))?;
    let outputs: Vec<_> = cfg
        .outputs
        .iter()
        .filter(|n| **n != sweep.variable)
        .map(|n| quantity(n).expect("outputs validated against the registry"))
        .collect();
    let mut columns = vec![Column::new(&sweep.variable, variable_unit(&sweep.variable))];
    columns.extend(outputs.iter().map(|q| Column::new(q.name, q.unit)));
    columns.push(Column::new("status", ""));
    let mut ds = Dataset::new(columns, Provenance::new(cfg, "sweep"));

    let values = sweep.values();
    let rows = exec.map(values.len(), |i| {
        let v = values[i];
        let mut row: Vec<Cell> = vec![v.into()];
        let point = point_params(&cfg.system, &sweep.variable, v).and_then(|params| {
            Ok(Point {
                rates: derive_rates(&params)?,
                env: NoiseOccupations::from_params(&params),
                params,
                gaussian: cfg.gaussian_state(),
                cat: cfg.cat_state(),
                seed: cfg.seed.wrapping_add(i as u64),
            })
        });
        let mut errors = Vec::new();
        match point {
            Ok(p) => {
                for q in &outputs {
                    match (q.eval)(&p) {
                        Ok(x) => row.push(x.into()),
                        Err(e) => {
                            errors.push(format!("{}: {e}", q.name));
                            row.push(f64::NAN.into());
                        }
                    }
                }
            }
            Err(e) => {
                errors.push(e.to_string());
                row.extend(outputs.iter().map(|_| Cell::Num(f64::NAN)));
            }
        }
        row.push(status(&errors));
        row
    });
    rows.into_iter().for_each(|r| ds.push(r));
    Ok(ds)
}

const RATE_COLUMNS: [&str; 14] = [
    "C",
    "P_p_watts",
    "n_p",
    "G_hz",
    "kappa_o_hz",
    "kappa_e_o_hz",
    "kappa_i_o_hz",
    "kappa_mw_hz",
    "kappa_e_mw_hz",
    "kappa_i_mw_hz",
    "n_th_internal",
    "n_th_mode",
    "BW_hz",
    "conversion_bandwidth_hz",
];

/// One row of derived rates for the configured device.
pub fn rates_dataset(cfg: &RunConfig) -> std::result::Result<Dataset, RunError> {
    cfg.validate()?;
    let params = cfg.system;
    let point = Point {
        rates: derive_rates(&params)?,
        env: NoiseOccupations::from_params(&params),
        params,
        gaussian: None,
        cat: None,
        seed: cfg.seed,
    };
    let qs: Vec<_> = RATE_COLUMNS.iter().map(|n| quantity(n).expect("rate column registered")).collect();
    let mut ds = Dataset::new(
        qs.iter().map(|q| Column::new(q.name, q.unit)).collect(),
        Provenance::new(cfg, "rates"),
    );
    let row = qs.iter().map(|q| (q.eval)(&point).map(Cell::Num)).collect::<Result<Vec<_>>>()?;
    ds.push(row);
    Ok(ds)
}

/// Output spectra of both ports. `half_span_hz` defaults to four emission bandwidths.
pub fn spectrum_dataset(cfg: &RunConfig, half_span_hz: Option<f64>, points: usize) -> std::result::Result<Dataset, RunError> {
    cfg.validate()?;
    let rates = derive_rates(&cfg.system)?;
    let env = NoiseOccupations::from_params(&cfg.system);
    let half = match half_span_hz {
        Some(h) => TWO_PI * h,
        None => 4.0 * emission_bandwidth(&rates)?,
    };
    let mut ds = Dataset::new(
        vec![
            Column::new("freq_offset_hz", "Hz"),
            Column::new("optical_flux_density", "photons/s/Hz"),
            Column::new("microwave_flux_density", "photons/s/Hz"),
        ],
        Provenance::new(cfg, "spectrum"),
    );
    for s in sample_spectrum(&rates, &env, half, points)? {
        ds.push(vec![(s.freq_offset / TWO_PI).into(), s.optical.into(), s.microwave.into()]);
    }
    Ok(ds)
}

pub(super) fn entanglement_row(base: &SystemParams, c: f64) -> Vec<Cell> {
    let eval = || -> Result<[f64; 5]> {
        let params = at_cooperativity(base, c)?;
        let rates = derive_rates(&params)?;
        let env = NoiseOccupations::from_params(&params);
        let link = Link::from_rates(&rates);
        let e_n = log_negativity(&steady_state_cm(c, link.eta_o, link.eta_mw, link.n_mode)?)?;
        let rep = ebit_rate(&rates, &env)?;
        Ok([
            params.pump_power,
            e_n,
            rep.entanglement_formation,
            rep.bandwidth / TWO_PI,
            rep.ebit_rate,
        ])
    };
    let mut row: Vec<Cell> = vec![c.into()];
    match eval() {
        Ok(v) => {
            row.extend(v.map(Cell::Num));
            row.push("ok".into());
        }
        Err(e) => {
            row.extend([f64::NAN; 5].map(Cell::Num));
            row.push(e.to_string().into());
        }
    }
    row
}

pub(super) fn entanglement_columns() -> Vec<Column> {
    vec![
        Column::new("C", "1"),
        Column::new("P_p_watts", "W"),
        Column::new("E_N", "ebit"),
        Column::new("E_F_avg", "ebit"),
        Column::new("BW_hz", "Hz"),
        Column::new("ebit_rate", "ebit/s"),
        Column::new("status", ""),
    ]
}

/// Entanglement figures of merit over a cooperativity grid.
pub fn entanglement_dataset(cfg: &RunConfig, cs: &[f64], exec: Exec) -> std::result::Result<Dataset, RunError> {
    cfg.validate()?;
    let mut ds = Dataset::new(entanglement_columns(), Provenance::new(cfg, "entanglement"));
    exec.map(cs.len(), |i| entanglement_row(&cfg.system, cs[i]))
        .into_iter()
        .for_each(|r| ds.push(r));
    Ok(ds)
}

pub(super) fn fidelity_columns() -> Vec<Column> {
    vec![
        Column::new("C", "1"),
        Column::new("protocol", ""),
        Column::new("state_kind", ""),
        Column::new("alpha_re", "1"),
        Column::new("alpha_im", "1"),
        Column::new("r_or_phi", "1|rad"),
        Column::new("T_bath_K", "K"),
        Column::new("fidelity", "1"),
        Column::new("classical_bound", "1"),
        Column::new("status", ""),
    ]
}

pub(super) fn evaluate(protocol: Protocol, state: &InputState, link: &Link) -> Result<FidelityResult> {
    match (protocol, state) {
        (Protocol::Teleport, InputState::Gaussian { .. }) => teleport_fidelity_gaussian(state, link),
        (Protocol::Teleport, InputState::Cat { .. }) => teleport_fidelity_cat(state, link),
        (Protocol::Convert, InputState::Gaussian { .. }) => convert_fidelity_gaussian(state, link),
        (Protocol::Convert, InputState::Cat { .. }) => convert_fidelity_cat(state, link),
    }
}

pub(super) fn fidelity_row(protocol: Protocol, state: &InputState, link: std::result::Result<Link, String>, t_bath: f64) -> Vec<Cell> {
    let a = state.alpha();
    let c = link.as_ref().map_or(f64::NAN, |l| l.cooperativity);
    let mut row: Vec<Cell> = vec![
        c.into(),
        protocol.as_str().into(),
        state.kind().into(),
        a.re.into(),
        a.im.into(),
        state.shape_parameter().into(),
        t_bath.into(),
    ];
    match link.and_then(|l| evaluate(protocol, state, &l).map_err(|e| e.to_string())) {
        Ok(f) => {
            row.extend([f.fidelity.into(), f.classical_bound.into(), "ok".into()]);
        }
        Err(e) => row.extend([f64::NAN.into(), f64::NAN.into(), e.into()]),
    }
    row
}

pub(super) fn device_link(base: &SystemParams, c: f64, t_bath: f64) -> std::result::Result<Link, String> {
    let p = SystemParams {
        bath_temp: t_bath,
        ..*base
    };
    at_cooperativity(&p, c)
        .and_then(|p| derive_rates(&p))
        .map(|r| Link::from_rates(&r))
        .map_err(|e| e.to_string())
}

/// Both protocols for every configured state over a cooperativity grid, at each bath temperature.
pub fn fidelity_dataset(cfg: &RunConfig, cs: &[f64], temps: &[f64], exec: Exec) -> std::result::Result<Dataset, RunError> {
    cfg.validate()?;
    let mut ds = Dataset::new(fidelity_columns(), Provenance::new(cfg, "fidelity"));
    let mut jobs = Vec::new();
    for &t in temps {
        for &c in cs {
            for s in &cfg.states {
                for p in [Protocol::Teleport, Protocol::Convert] {
                    jobs.push((p, *s, c, t));
                }
            }
        }
    }
    exec.map(jobs.len(), |i| {
        let (p, s, c, t) = jobs[i];
        fidelity_row(p, &s, device_link(&cfg.system, c, t), t)
    })
    .into_iter()
    .for_each(|r| ds.push(r));
    Ok(ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::SweepSpec;

    #[test]
    fn sweep_rows_and_status() {
        let mut cfg = RunConfig::reference();
        cfg.outputs = vec!["ebit_rate".into()];
        cfg.sweep = Some(SweepSpec::linear("C", 0.2, 1.2, 2));
        let ds = run_sweep(&cfg, Exec::Serial).unwrap();
        assert_eq!(ds.rows.len(), 2);
        let status = ds.text_column("status").unwrap();
        assert_eq!(status[0], "ok");
        assert!(status[1].contains("instability"), "{}", status[1]);
        assert_eq!(ds.to_csv(), run_sweep(&cfg, Exec::Parallel).unwrap().to_csv());
    }

    #[test]
    fn rates_row() {
        let ds = rates_dataset(&RunConfig::reference()).unwrap();
        let c = ds.column("C").unwrap()[0];
        assert!((c - 0.3).abs() < 0.01);
    }
}
