use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::registry::quantity;
use super::RunError;
use crate::model::SystemParams;
use crate::transfer::InputState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// A `SystemParams` field name, or `C` to sweep the cooperativity through the pump power.
    pub variable: String,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    #[serde(default)]
    pub scale: Scale,
}

impl SweepSpec {
    pub fn linear(variable: &str, start: f64, stop: f64, points: usize) -> Self {
        SweepSpec {
            variable: variable.to_string(),
            start,
            stop,
            points,
            scale: Scale::Linear,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|k| {
                let t = k as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.start + t * (self.stop - self.start),
                    Scale::Log => (self.start.ln() + t * (self.stop / self.start).ln()).exp(),
                }
            })
            .collect()
    }

    fn validate(&self) -> Result<(), RunError> {
        if self.variable != "C" && !SystemParams::FIELDS.contains(&self.variable.as_str()) {
            return Err(RunError::validation(
                "sweep.variable",
                format!("`{}` is neither C nor a system parameter", self.variable),
            ));
        }
        if self.points < 2 {
            return Err(RunError::validation("sweep.points", "need at least 2 points"));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(RunError::validation("sweep.start", "bounds must be finite"));
        }
        if self.scale == Scale::Log && (self.start <= 0.0 || self.stop <= 0.0) {
            return Err(RunError::validation("sweep.scale", "log sweeps need positive bounds"));
        }
        Ok(())
    }
}

fn default_states() -> Vec<InputState> {
    vec![
        InputState::gaussian(Complex64::new(2.0, 0.0), 1.0),
        InputState::cat(Complex64::new(2.0, 0.0), std::f64::consts::PI),
    ]
}

fn default_outputs() -> Vec<String> {
    ["E_N", "E_F_avg", "BW_hz", "ebit_rate"].map(String::from).to_vec()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub system: SystemParams,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<String>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub seed: u64,
    /// Input states for the fidelity quantities.
    #[serde(default = "default_states")]
    pub states: Vec<InputState>,
}

impl RunConfig {
    pub fn new(system: SystemParams) -> Self {
        RunConfig {
            system,
            sweep: None,
            outputs: default_outputs(),
            format: Format::default(),
            seed: 0,
            states: default_states(),
        }
    }

    pub fn reference() -> Self {
        Self::new(SystemParams::reference())
    }

    pub fn validate(&self) -> Result<(), RunError> {
        self.system.validate()?;
        if let Some(s) = &self.sweep {
            s.validate()?;
        }
        for name in &self.outputs {
            if quantity(name).is_none() {
                return Err(RunError::validation("outputs", format!("unknown quantity `{name}`")));
            }
        }
        for s in &self.states {
            s.validate()?;
        }
        Ok(())
    }

    pub fn gaussian_state(&self) -> Option<&InputState> {
        self.states.iter().find(|s| s.kind() == "gaussian")
    }

    pub fn cat_state(&self) -> Option<&InputState> {
        self.states.iter().find(|s| s.kind() == "cat")
    }
}

/// Parse a JSON run configuration. A bare `SystemParams` object is also accepted.
pub fn parse_config(text: &str) -> Result<RunConfig, RunError> {
    let cfg = match serde_json::from_str::<RunConfig>(text) {
        Ok(c) => c,
        Err(full) => match serde_json::from_str::<SystemParams>(text) {
            Ok(p) => RunConfig::new(p),
            Err(_) => return Err(RunError::Parse(full.to_string())),
        },
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_config(path: impl AsRef<Path>) -> Result<RunConfig, RunError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Parse(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}
