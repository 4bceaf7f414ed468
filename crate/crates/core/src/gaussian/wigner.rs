use nalgebra::{Matrix2, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::CovarianceMatrix4;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraturePair {
    /// (q_o, p_o)
    Optical,
    /// (q_Ω, p_Ω)
    Microwave,
    /// (q_o, q_Ω)
    AmplitudeCross,
    /// (p_o, p_Ω)
    PhaseCross,
}

impl QuadraturePair {
    pub fn indices(self) -> (usize, usize) {
        match self {
            QuadraturePair::Optical => (0, 1),
            QuadraturePair::Microwave => (2, 3),
            QuadraturePair::AmplitudeCross => (0, 2),
            QuadraturePair::PhaseCross => (1, 3),
        }
    }

    pub fn from_indices(i: usize, j: usize) -> Result<Self> {
        Ok(match (i, j) {
            (0, 1) => QuadraturePair::Optical,
            (2, 3) => QuadraturePair::Microwave,
            (0, 2) => QuadraturePair::AmplitudeCross,
            (1, 3) => QuadraturePair::PhaseCross,
            _ => return Err(Error::invalid("pair", format!("({i}, {j}) is not a supported quadrature pair"))),
        })
    }
}

struct Density {
    inv: nalgebra::Matrix4<f64>,
    norm: f64,
}

impl Density {
    fn new(v: &CovarianceMatrix4) -> Result<Self> {
        let det = v.det();
        let inv = v
            .matrix()
            .try_inverse()
            .filter(|_| det > 0.0 && det.is_finite())
            .ok_or_else(|| Error::Numeric("covariance matrix is singular".into()))?;
        Ok(Density {
            inv,
            norm: 1.0 / (4.0 * std::f64::consts::PI.powi(2) * det.sqrt()),
        })
    }

    fn eval(&self, x: &Vector4<f64>) -> f64 {
        self.norm * (-0.5 * x.dot(&(self.inv * x))).exp()
    }
}

/// Two-mode Gaussian Wigner function at phase-space point `x`.
pub fn wigner_density(v: &CovarianceMatrix4, x: &[f64; 4]) -> Result<f64> {
    Ok(Density::new(v)?.eval(&Vector4::from_row_slice(x)))
}

/// Marginal covariance after integrating out the complementary pair.
pub fn wigner_projection(v: &CovarianceMatrix4, pair: QuadraturePair) -> Matrix2<f64> {
    let (i, j) = pair.indices();
    v.marginal(i, j)
}

/// Monte-Carlo estimate of ∫W d⁴x, importance-sampled from a Gaussian of covariance 2V.
pub fn wigner_normalization_mc(v: &CovarianceMatrix4, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::invalid("samples", "need at least one sample"));
    }
    let l = (v.matrix() * 2.0)
        .cholesky()
        .ok_or_else(|| Error::Numeric("covariance matrix is not positive definite".into()))?
        .l();
    let q_norm = 1.0 / (4.0 * std::f64::consts::PI.powi(2) * l.determinant());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = Density::new(v)?;
    let mut sum = 0.0;
    for _ in 0..samples {
        let z = Vector4::from_fn(|_, _| rng.sample::<f64, _>(StandardNormal));
        sum += density.eval(&(l * z)) / (q_norm * (-0.5 * z.norm_squared()).exp());
    }
    Ok(sum / samples as f64)
}
