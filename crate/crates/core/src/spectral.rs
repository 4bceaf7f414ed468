//! Frequency-domain input-output relations of the pumped three-mode system.
//!
//! Inputs are ordered (a_e,o, a_i,o, a_e,Ω†, a_i,Ω†) and the two monitored
//! outputs are (a_o^out, a_Ω^out†). The second row is a creation operator,
//! which is why its input correlators use ⟨s s†⟩ where the first row uses
//! ⟨s† s⟩. This is the only place where that bookkeeping lives.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::TWO_PI;
use crate::error::{require_stable, Error, Result};
use crate::gaussian::CovarianceMatrix4;
use crate::model::{DerivedRates, NoiseOccupations};
use crate::quadrature::integrate_adaptive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Port {
    Optical,
    Microwave,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringMatrix {
    /// ω, rad/s.
    pub freq_offset: f64,
    pub entries: [[Complex64; 4]; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralPoint {
    /// ω, rad/s.
    pub freq_offset: f64,
    /// Photons·s⁻¹·Hz⁻¹ leaving the optical port.
    pub optical: f64,
    /// Photons·s⁻¹·Hz⁻¹ leaving the microwave port.
    pub microwave: f64,
}

pub fn scattering_matrix(omega: f64, rates: &DerivedRates) -> Result<ScatteringMatrix> {
    require_stable(rates.cooperativity)?;
    Ok(ScatteringMatrix {
        freq_offset: omega,
        entries: d_matrix(omega, rates, rates.multi_photon_g),
    })
}

fn d_matrix(omega: f64, r: &DerivedRates, g: f64) -> [[Complex64; 4]; 2] {
    let iw = Complex64::new(0.0, omega);
    let i = Complex64::i();
    let a = -iw + r.kappa_o / 2.0;
    let b = -iw + r.kappa_mw / 2.0;
    let g2 = g * g;
    let m = a * b - g2;
    let s = |x: f64, y: f64| (x * y).sqrt();
    let row_o = [
        (iw + r.delta_kappa_o / 2.0) * b + g2,
        s(r.kappa_e_o, r.kappa_i_o) * b,
        -i * g * s(r.kappa_e_o, r.kappa_e_mw),
        -i * g * s(r.kappa_e_o, r.kappa_i_mw),
    ];
    let row_mw = [
        i * g * s(r.kappa_e_mw, r.kappa_e_o),
        i * g * s(r.kappa_e_mw, r.kappa_i_o),
        (iw + r.delta_kappa_mw / 2.0) * a + g2,
        s(r.kappa_e_mw, r.kappa_i_mw) * a,
    ];
    [row_o.map(|z| z / m), row_mw.map(|z| z / m)]
}

/// ⟨s s†⟩ for each input: n+1 on annihilation ports, n on creation ports.
fn anti_normal(env: &NoiseOccupations) -> [f64; 4] {
    let n = env.as_array();
    [n[0] + 1.0, n[1] + 1.0, n[2], n[3]]
}

/// ⟨s† s⟩ for each input.
fn normal(env: &NoiseOccupations) -> [f64; 4] {
    let n = env.as_array();
    [n[0], n[1], n[2] + 1.0, n[3] + 1.0]
}

/// Output photon flux density (photons·s⁻¹·Hz⁻¹) at offset ω (rad/s).
pub fn output_spectrum(omega: f64, rates: &DerivedRates, port: Port, env: &NoiseOccupations) -> Result<f64> {
    let d = scattering_matrix(omega, rates)?.entries;
    Ok(match port {
        Port::Optical => weighted_norm(&d[0], &normal(env)),
        Port::Microwave => weighted_norm(&d[1], &anti_normal(env)),
    })
}

fn weighted_norm(row: &[Complex64; 4], w: &[f64; 4]) -> f64 {
    row.iter().zip(w).map(|(z, w)| z.norm_sqr() * w).sum()
}

/// Closed-form zero-temperature spectrum 4Cη/[(1 − C − 4ω²/κ_oκ_Ω)² + 4ω²(κ_o+κ_Ω)²/κ_o²κ_Ω²].
pub fn output_spectrum_cold(omega: f64, rates: &DerivedRates, port: Port) -> Result<f64> {
    require_stable(rates.cooperativity)?;
    let eta = match port {
        Port::Optical => rates.eta_o(),
        Port::Microwave => rates.eta_mw(),
    };
    let (ko, km, c) = (rates.kappa_o, rates.kappa_mw, rates.cooperativity);
    let u = 4.0 * omega * omega / (ko * km);
    let den = (1.0 - c - u).powi(2) + 4.0 * omega * omega * (ko + km).powi(2) / (ko * ko * km * km);
    Ok(4.0 * c * eta / den)
}

fn asymmetry(rates: &DerivedRates) -> f64 {
    (rates.kappa_o.powi(2) + rates.kappa_mw.powi(2)) / (2.0 * rates.kappa_o * rates.kappa_mw)
}

/// Full width at half maximum of the down-converted emission, rad/s.
pub fn emission_bandwidth(rates: &DerivedRates) -> Result<f64> {
    let c = rates.cooperativity;
    require_stable(c)?;
    let s = asymmetry(rates);
    let u = -c - s + ((1.0 - c).powi(2) + (c + s).powi(2)).sqrt();
    Ok(u.max(0.0).sqrt() * (rates.kappa_o * rates.kappa_mw).sqrt())
}

/// Output photon flux integrated over all frequencies, photons/s.
///
/// A thermally occupied input waveguide is reflected at every frequency,
/// so the flux is unbounded and an error is returned.
pub fn integrated_flux(rates: &DerivedRates, port: Port, env: &NoiseOccupations) -> Result<f64> {
    require_stable(rates.cooperativity)?;
    let reflected = match port {
        Port::Optical => env.ext_optical,
        Port::Microwave => env.ext_microwave,
    };
    if reflected > 0.0 {
        return Err(Error::Unsupported(
            "integrated flux diverges when the output waveguide carries thermal photons".into(),
        ));
    }
    let f = |w: f64| output_spectrum(w, rates, port, env).unwrap_or(f64::NAN);
    let cut = 50.0 * rates.kappa_o.max(rates.kappa_mw);
    let mut core = 0.0;
    // Split at the emission scale so the narrow line is resolved.
    let inner = emission_bandwidth(rates)?.max(rates.kappa_o.min(rates.kappa_mw)) * 4.0;
    let inner = inner.min(cut);
    core += integrate_adaptive(f, -inner, inner, 1e-10)?;
    if inner < cut {
        core += 2.0 * integrate_adaptive(f, inner, cut, 1e-10)?;
    }
    // Rational tail: f ~ f(W)(W/ω)^p.
    let (f1, f2) = (f(cut), f(2.0 * cut));
    let tail = if f1 > 0.0 && f2 > 0.0 {
        let p = (f1 / f2).ln() / std::f64::consts::LN_2;
        if p <= 1.0 {
            return Err(Error::Numeric("spectral tail decays too slowly to integrate".into()));
        }
        2.0 * f1 * cut / (p - 1.0)
    } else {
        0.0
    };
    let total = (core + tail) / TWO_PI;
    if !total.is_finite() {
        return Err(Error::Numeric("non-finite integrated flux".into()));
    }
    Ok(total)
}

/// Beam-splitter (frequency conversion) efficiency at offset ω.
pub fn conversion_efficiency(omega: f64, rates: &DerivedRates) -> f64 {
    let (ko, km, c) = (rates.kappa_o, rates.kappa_mw, rates.cooperativity);
    let u = 4.0 * omega * omega / (ko * km);
    let den = (1.0 + c - u).powi(2) + 4.0 * omega * omega * (ko + km).powi(2) / (ko * ko * km * km);
    4.0 * c * rates.eta_o() * rates.eta_mw() / den
}

/// Full width at half maximum of the conversion efficiency, rad/s.
pub fn conversion_bandwidth(rates: &DerivedRates) -> f64 {
    let c = rates.cooperativity;
    let s = asymmetry(rates);
    let u = c - s + ((1.0 + c).powi(2) + (c - s).powi(2)).sqrt();
    u.sqrt() * (rates.kappa_o * rates.kappa_mw).sqrt()
}

/// Quadrature covariance of the two output fields at offset ω.
///
/// The microwave quadratures are referenced to a phase of π/2, which makes
/// the optical-microwave correlation real and positive at ω = 0.
pub fn spectral_covariance(omega: f64, rates: &DerivedRates, env: &NoiseOccupations) -> Result<CovarianceMatrix4> {
    let d = scattering_matrix(omega, rates)?.entries;
    let n_o = weighted_norm(&d[0], &normal(env));
    let n_mw = weighted_norm(&d[1], &anti_normal(env));
    let w = anti_normal(env);
    let corr: Complex64 = Complex64::i() * (0..4).map(|j| d[0][j] * d[1][j].conj() * w[j]).sum::<Complex64>();
    let (re, im) = (corr.re, corr.im);
    let a = n_o + 0.5;
    let b = n_mw + 0.5;
    Ok(CovarianceMatrix4::from_rows([
        [a, 0.0, re, im],
        [0.0, a, im, -re],
        [re, im, b, 0.0],
        [im, -re, 0.0, b],
    ]))
}

/// Both output spectra on `points` equally spaced offsets in [-half_span, half_span] (rad/s).
pub fn sample_spectrum(rates: &DerivedRates, env: &NoiseOccupations, half_span: f64, points: usize) -> Result<Vec<SpectralPoint>> {
    if points < 2 {
        return Err(Error::invalid("points", "need at least 2 spectrum points"));
    }
    if !(half_span.is_finite() && half_span > 0.0) {
        return Err(Error::invalid("half_span", "must be finite and > 0"));
    }
    require_stable(rates.cooperativity)?;
    (0..points)
        .map(|k| {
            let w = -half_span + 2.0 * half_span * k as f64 / (points - 1) as f64;
            Ok(SpectralPoint {
                freq_offset: w,
                optical: output_spectrum(w, rates, Port::Optical, env)?,
                microwave: output_spectrum(w, rates, Port::Microwave, env)?,
            })
        })
        .collect()
}
