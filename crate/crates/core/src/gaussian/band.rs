use serde::Serialize;

use super::{entanglement_report, CovarianceMatrix4, EntanglementReport};
use crate::constants::TWO_PI;
use crate::error::{require_stable, Error, Result};
use crate::model::{DerivedRates, NoiseOccupations};
use crate::quadrature::gauss_legendre;
use crate::spectral::{emission_bandwidth, spectral_covariance};

/// Default number of Gauss-Legendre nodes across the emission band.
pub const BAND_NODES: usize = 64;

/// CM averaged over the rectangular window |ω| ≤ BW/2.
pub fn band_averaged_cm(rates: &DerivedRates, env: &NoiseOccupations) -> Result<CovarianceMatrix4> {
    band_averaged_cm_with(rates, env, BAND_NODES)
}

pub fn band_averaged_cm_with(rates: &DerivedRates, env: &NoiseOccupations, nodes: usize) -> Result<CovarianceMatrix4> {
    require_stable(rates.cooperativity)?;
    let bw = emission_bandwidth(rates)?;
    if bw == 0.0 {
        return spectral_covariance(0.0, rates, env);
    }
    let (x, w) = gauss_legendre(nodes);
    let mut acc = CovarianceMatrix4::zero();
    for (xi, wi) in x.iter().zip(&w) {
        acc = acc.scale_add(0.5 * wi, &spectral_covariance(xi * bw / 2.0, rates, env)?);
    }
    Ok(acc)
}

/// Entanglement of the band-averaged state and the resulting ebit rate Ē_F·BW/2π.
pub fn ebit_rate(rates: &DerivedRates, env: &NoiseOccupations) -> Result<EntanglementReport> {
    let bw = emission_bandwidth(rates)?;
    let mut report = entanglement_report(&band_averaged_cm(rates, env)?)?;
    report.bandwidth = bw;
    report.ebit_rate = report.entanglement_formation * bw / TWO_PI;
    if !(report.ebit_rate.is_finite() && report.log_negativity.is_finite()) {
        return Err(Error::Numeric(format!(
            "C = {} is too close to 1 to resolve the band-averaged CM",
            rates.cooperativity
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EbitOptimum {
    pub cooperativity: f64,
    pub report: EntanglementReport,
}

/// Golden-section search for the cooperativity in [0.01, 0.95] maximizing the ebit rate.
pub fn max_ebit_rate(rates: &DerivedRates, env: &NoiseOccupations) -> Result<EbitOptimum> {
    let rate = |c: f64| -> Result<f64> { Ok(ebit_rate(&rates.with_cooperativity(c)?, env)?.ebit_rate) };
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (0.01, 0.95);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (rate(x1)?, rate(x2)?);
    while b - a > 1e-4 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = rate(x2)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = rate(x1)?;
        }
    }
    let c = 0.5 * (a + b);
    Ok(EbitOptimum {
        cooperativity: c,
        report: ebit_rate(&rates.with_cooperativity(c)?, env)?,
    })
}
