use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// State to be transferred. Quadratures follow q = √2 Re α, p = √2 Im α.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InputState {
    /// Squeezed coherent state |α, r⟩, squeezed along q.
    Gaussian { alpha_re: f64, alpha_im: f64, squeezing: f64 },
    /// N(|α⟩ + e^{iφ}|−α⟩).
    Cat { alpha_re: f64, alpha_im: f64, phase: f64 },
}

impl InputState {
    pub fn gaussian(alpha: Complex64, squeezing: f64) -> Self {
        InputState::Gaussian {
            alpha_re: alpha.re,
            alpha_im: alpha.im,
            squeezing,
        }
    }

    pub fn cat(alpha: Complex64, phase: f64) -> Self {
        InputState::Cat {
            alpha_re: alpha.re,
            alpha_im: alpha.im,
            phase,
        }
    }

    pub fn alpha(&self) -> Complex64 {
        match *self {
            InputState::Gaussian { alpha_re, alpha_im, .. } | InputState::Cat { alpha_re, alpha_im, .. } => {
                Complex64::new(alpha_re, alpha_im)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            InputState::Gaussian { .. } => "gaussian",
            InputState::Cat { .. } => "cat",
        }
    }

    /// Squeezing r for Gaussian states, cat phase φ otherwise.
    pub fn shape_parameter(&self) -> f64 {
        match *self {
            InputState::Gaussian { squeezing, .. } => squeezing,
            InputState::Cat { phase, .. } => phase,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let a = self.alpha();
        if !(a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::invalid("alpha", "must be finite"));
        }
        match *self {
            InputState::Gaussian { squeezing, .. } => {
                if !(squeezing >= 0.0 && squeezing.is_finite()) {
                    return Err(Error::invalid("squeezing", format!("must be finite and >= 0, got {squeezing}")));
                }
            }
            InputState::Cat { phase, .. } => {
                if !phase.is_finite() {
                    return Err(Error::invalid("phase", "must be finite"));
                }
                if cat_norm_sq(a.norm_sqr(), phase) <= 1e-300 {
                    return Err(Error::invalid("phase", "cat state has zero norm (alpha = 0 with phase = pi)"));
                }
            }
        }
        Ok(())
    }
}

/// 2 + 2 e^{−2|α|²} cos φ.
pub(crate) fn cat_norm_sq(abs_alpha_sq: f64, phase: f64) -> f64 {
    2.0 + 2.0 * (-2.0 * abs_alpha_sq).exp() * phase.cos()
}
