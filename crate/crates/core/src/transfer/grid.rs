//! Single-mode Wigner functions sampled on a square (x, p) grid.
//!
//! Coordinates are x = √2 Re β, p = √2 Im β, so the vacuum has variance 1/2
//! and F = π∫W_in W_out d²β becomes 2π∫∫W_in W_out dx dp.

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;
use rayon::prelude::*;

use super::state::{cat_norm_sq, InputState};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Grid covers [-half_extent, half_extent] on both axes.
    pub half_extent: f64,
    pub points: usize,
}

impl GridSpec {
    pub const DEFAULT_POINTS: usize = 512;

    /// ±(√2|α| + 6√max_variance) with the default resolution.
    pub fn for_state(abs_alpha: f64, max_variance: f64) -> Self {
        GridSpec {
            half_extent: std::f64::consts::SQRT_2 * abs_alpha + 6.0 * max_variance.sqrt(),
            points: Self::DEFAULT_POINTS,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WignerGrid {
    spec: GridSpec,
    /// Row-major: values[i * n + j] = W(x_i, p_j).
    values: Vec<f64>,
}

impl WignerGrid {
    pub fn from_fn<F: Fn(f64, f64) -> f64 + Sync>(spec: GridSpec, f: F) -> Result<Self> {
        if spec.points < 3 || !(spec.half_extent > 0.0 && spec.half_extent.is_finite()) {
            return Err(Error::Grid("need at least 3 points and a positive finite extent".into()));
        }
        let n = spec.points;
        let h = 2.0 * spec.half_extent / (n - 1) as f64;
        let values = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / n, k % n);
                f(-spec.half_extent + i as f64 * h, -spec.half_extent + j as f64 * h)
            })
            .collect();
        Ok(WignerGrid { spec, values })
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.spec.half_extent / (self.spec.points - 1) as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn weighted_sum<F: Fn(usize) -> f64>(&self, f: F) -> f64 {
        let n = self.spec.points;
        let edge = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        let h = self.spacing();
        (0..n * n).map(|k| edge(k / n) * edge(k % n) * f(k)).sum::<f64>() * h * h
    }

    /// Trapezoidal ∫∫ W dx dp.
    pub fn integral(&self) -> f64 {
        self.weighted_sum(|k| self.values[k])
    }

    /// Convolve with an isotropic Gaussian of per-quadrature variance `variance`.
    pub fn convolve_gaussian(&self, variance: f64) -> Result<Self> {
        if variance < 0.0 || !variance.is_finite() {
            return Err(Error::Grid(format!("kernel variance must be >= 0, got {variance}")));
        }
        if variance == 0.0 {
            return Ok(self.clone());
        }
        let h = self.spacing();
        let sigma = variance.sqrt();
        let half = ((8.0 * sigma / h).ceil() as usize).max(1);
        let mut kernel: Vec<f64> = (0..=2 * half)
            .map(|k| {
                let d = (k as f64 - half as f64) * h;
                (-d * d / (2.0 * variance)).exp()
            })
            .collect();
        let s: f64 = kernel.iter().sum();
        kernel.iter_mut().for_each(|k| *k /= s);
        let n = self.spec.points;
        let pass = |src: &[f64], along_rows: bool| -> Vec<f64> {
            (0..n * n)
                .into_par_iter()
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    let mut acc = 0.0;
                    for (t, w) in kernel.iter().enumerate() {
                        let off = t as isize - half as isize;
                        let (ii, jj) = if along_rows {
                            (i as isize + off, j as isize)
                        } else {
                            (i as isize, j as isize + off)
                        };
                        if ii >= 0 && jj >= 0 && (ii as usize) < n && (jj as usize) < n {
                            acc += w * src[ii as usize * n + jj as usize];
                        }
                    }
                    acc
                })
                .collect()
        };
        let tmp = pass(&self.values, true);
        Ok(WignerGrid {
            spec: self.spec,
            values: pass(&tmp, false),
        })
    }
}

/// Grid overlap 2π∫∫W_in W_out dx dp.
pub fn wigner_overlap_fidelity(w_in: &WignerGrid, w_out: &WignerGrid) -> Result<f64> {
    if w_in.spec != w_out.spec {
        return Err(Error::Grid("grids differ in extent or resolution".into()));
    }
    for (name, g) in [("input", w_in), ("output", w_out)] {
        let norm = g.integral();
        if (norm - 1.0).abs() > 0.01 {
            return Err(Error::Grid(format!("{name} Wigner function integrates to {norm:.4}, not 1")));
        }
    }
    Ok(2.0 * std::f64::consts::PI * w_in.weighted_sum(|k| w_in.values[k] * w_out.values[k]))
}

/// Wigner function of N(|α⟩ + e^{iφ}|−α⟩).
pub fn cat_wigner(alpha: Complex64, phase: f64) -> impl Fn(f64, f64) -> f64 + Sync {
    let (x0, p0) = (std::f64::consts::SQRT_2 * alpha.re, std::f64::consts::SQRT_2 * alpha.im);
    let n2 = 1.0 / cat_norm_sq(alpha.norm_sqr(), phase);
    let pi = std::f64::consts::PI;
    move |x, p| {
        let plus = (-((x - x0).powi(2) + (p - p0).powi(2))).exp();
        let minus = (-((x + x0).powi(2) + (p + p0).powi(2))).exp();
        let fringe = 2.0 * (-(x * x + p * p)).exp() * (2.0 * (p0 * x - x0 * p) - phase).cos();
        n2 * (plus + minus + fringe) / pi
    }
}

/// Gaussian Wigner function with mean `mean` and covariance `cov`.
pub fn gaussian_wigner(mean: Vector2<f64>, cov: Matrix2<f64>) -> Result<impl Fn(f64, f64) -> f64 + Sync> {
    let det = cov.determinant();
    let inv = cov
        .try_inverse()
        .filter(|_| det > 0.0)
        .ok_or_else(|| Error::Numeric("single-mode covariance is singular".into()))?;
    let norm = 1.0 / (2.0 * std::f64::consts::PI * det.sqrt());
    Ok(move |x: f64, p: f64| {
        let d = Vector2::new(x, p) - mean;
        norm * (-0.5 * d.dot(&(inv * d))).exp()
    })
}

fn cat_parts(state: &InputState) -> Result<(Complex64, f64)> {
    state.validate()?;
    match *state {
        InputState::Cat { phase, .. } => Ok((state.alpha(), phase)),
        InputState::Gaussian { .. } => Err(Error::Unsupported("the cat oracle needs a cat input state".into())),
    }
}

/// Grid fidelity of a cat state teleported with added noise variance 2Δq₋² per quadrature.
pub fn teleport_cat_oracle(state: &InputState, var_minus: f64, spec: Option<GridSpec>) -> Result<f64> {
    let (alpha, phase) = cat_parts(state)?;
    let noise = 2.0 * var_minus;
    let spec = spec.unwrap_or_else(|| GridSpec::for_state(alpha.norm(), 0.5 + noise));
    let w_in = WignerGrid::from_fn(spec, cat_wigner(alpha, phase))?;
    let w_out = w_in.convolve_gaussian(noise)?;
    wigner_overlap_fidelity(&w_in, &w_out)
}

/// Grid fidelity of a cat state converted to amplitude ε₃α with added noise variance (ε₅ − 1)/2.
pub fn convert_cat_oracle(state: &InputState, eps3: f64, eps5: f64, spec: Option<GridSpec>) -> Result<f64> {
    let (alpha, phase) = cat_parts(state)?;
    let noise = (eps5 - 1.0) / 2.0;
    let spec = spec.unwrap_or_else(|| GridSpec::for_state(alpha.norm(), 0.5 + noise));
    let w_in = WignerGrid::from_fn(spec, cat_wigner(alpha, phase))?;
    let out = WignerGrid::from_fn(spec, cat_wigner(alpha * eps3, phase))?;
    wigner_overlap_fidelity(&w_in, &out.convolve_gaussian(noise)?)
}
