use serde::Serialize;

use super::covariance::symplectic_pair;
use super::CovarianceMatrix4;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntanglementReport {
    /// E_N, ebits.
    pub log_negativity: f64,
    /// Smallest symplectic eigenvalue of the partial transpose.
    pub symplectic_min: f64,
    /// E_F, ebits.
    pub entanglement_formation: f64,
    /// ebit/s; zero unless a bandwidth is attached.
    pub ebit_rate: f64,
    /// rad/s.
    pub bandwidth: f64,
}

/// d̃₋ from the block invariants, Δ̃ = det A + det B − 2 det C.
pub fn pt_symplectic_min(v: &CovarianceMatrix4) -> Result<f64> {
    let (a, b, c) = (
        v.block(0, 0).determinant(),
        v.block(1, 1).determinant(),
        v.block(0, 1).determinant(),
    );
    Ok(symplectic_pair(a + b - 2.0 * c, v.det())?.0)
}

pub fn log_negativity_from_symplectic(d: f64) -> f64 {
    (-(2.0 * d).log2()).max(0.0)
}

pub fn log_negativity(v: &CovarianceMatrix4) -> Result<f64> {
    Ok(log_negativity_from_symplectic(pt_symplectic_min(v)?))
}

/// E_F from d̃₋; zero for separable states (d̃₋ ≥ 1/2).
pub fn formation_from_symplectic(d: f64) -> f64 {
    if d >= 0.5 || d <= 0.0 {
        return if d <= 0.0 { f64::INFINITY } else { 0.0 };
    }
    let x = ((d * d + 0.25) / (2.0 * d)).max(0.5);
    let xlx = |y: f64| if y <= 0.0 { 0.0 } else { y * y.log2() };
    xlx(x + 0.5) - xlx(x - 0.5)
}

pub fn entanglement_formation(v: &CovarianceMatrix4) -> Result<f64> {
    Ok(formation_from_symplectic(pt_symplectic_min(v)?))
}

pub fn entanglement_report(v: &CovarianceMatrix4) -> Result<EntanglementReport> {
    let d = pt_symplectic_min(v)?;
    Ok(EntanglementReport {
        log_negativity: log_negativity_from_symplectic(d),
        symplectic_min: d,
        entanglement_formation: formation_from_symplectic(d),
        ebit_rate: 0.0,
        bandwidth: 0.0,
    })
}

/// E_N for matched couplings η_o = η_Ω = η at zero occupation.
pub fn matched_log_negativity(c: f64, eta: f64) -> f64 {
    let s = c.sqrt();
    -(1.0 - 4.0 * eta * s / (1.0 + s).powi(2)).log2()
}
