use nalgebra::{Matrix2, Vector2};
use serde::{Deserialize, Serialize};

use super::grid::{gaussian_wigner, wigner_overlap_fidelity, GridSpec, WignerGrid};
use super::state::InputState;
use crate::error::{require_stable, Error, Result};
use crate::gaussian::{squeezing_analysis, steady_state_cm};
use crate::model::DerivedRates;
use crate::spectral::{conversion_bandwidth, emission_bandwidth};

/// Channel parameters shared by both protocols.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Link {
    pub cooperativity: f64,
    pub eta_o: f64,
    pub eta_mw: f64,
    /// Effective microwave mode occupation n̄_Ω.
    pub n_mode: f64,
    /// (κ_o, κ_Ω) in rad/s, when known; used to attach a bandwidth.
    #[serde(default)]
    pub kappas: Option<(f64, f64)>,
}

impl Link {
    pub fn new(cooperativity: f64, eta_o: f64, eta_mw: f64, n_mode: f64) -> Self {
        Link {
            cooperativity,
            eta_o,
            eta_mw,
            n_mode,
            kappas: None,
        }
    }

    pub fn from_rates(r: &DerivedRates) -> Self {
        Link {
            cooperativity: r.cooperativity,
            eta_o: r.eta_o(),
            eta_mw: r.eta_mw(),
            n_mode: r.n_th_mode,
            kappas: Some((r.kappa_o, r.kappa_mw)),
        }
    }

    fn validate(&self) -> Result<()> {
        let c = self.cooperativity;
        if !(c >= 0.0 && c.is_finite()) {
            return Err(Error::invalid("cooperativity", format!("must be finite and >= 0, got {c}")));
        }
        for (name, eta) in [("eta_optical", self.eta_o), ("eta_microwave", self.eta_mw)] {
            if !(0.0..=1.0).contains(&eta) {
                return Err(Error::invalid(name, format!("must lie in [0, 1], got {eta}")));
            }
        }
        if !(self.n_mode >= 0.0 && self.n_mode.is_finite()) {
            return Err(Error::invalid("n_mode", "must be finite and >= 0"));
        }
        Ok(())
    }

    fn rates(&self) -> Option<DerivedRates> {
        let (ko, km) = self.kappas?;
        DerivedRates::from_losses(ko, km, self.eta_o, self.eta_mw, self.cooperativity).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    Teleport,
    Convert,
}

impl Protocol {
    pub fn as_str(self) -> &'static str {
        match self {
            Protocol::Teleport => "teleport",
            Protocol::Convert => "convert",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FidelityResult {
    pub fidelity: f64,
    pub protocol: Protocol,
    pub classical_bound: f64,
    /// Transfer bandwidth in rad/s, when the link carries loss rates.
    pub bandwidth: Option<f64>,
}

/// Weights of the displacement penalty in the conversion fidelity of a
/// squeezed coherent state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DisplacementWeights {
    /// cos φ_α / V₋ + sin φ_α / V₊.
    #[default]
    Linear,
    /// cos² φ_α / V₋ + sin² φ_α / V₊.
    Squared,
}

/// Fidelity between two single-mode Gaussian states.
pub fn gaussian_fidelity(x_in: Vector2<f64>, v_in: Matrix2<f64>, x_out: Vector2<f64>, v_out: Matrix2<f64>) -> Result<f64> {
    let vf = (v_in + v_out) * 2.0;
    let det = (vf / 2.0).determinant();
    let inv = vf
        .try_inverse()
        .filter(|_| det > 0.0)
        .ok_or_else(|| Error::Numeric("singular fidelity covariance".into()))?;
    let d = x_out - x_in;
    Ok((-d.dot(&(inv * d))).exp() / det.sqrt())
}

fn squeezed_cm(r: f64) -> Matrix2<f64> {
    Matrix2::new((-2.0 * r).exp() / 2.0, 0.0, 0.0, (2.0 * r).exp() / 2.0)
}

fn gaussian_parts(state: &InputState) -> Result<(f64, f64, f64)> {
    state.validate()?;
    match *state {
        InputState::Gaussian { squeezing, .. } => {
            let a = state.alpha();
            Ok((a.norm(), a.arg(), squeezing))
        }
        InputState::Cat { .. } => Err(Error::Unsupported("this fidelity expects a squeezed coherent state".into())),
    }
}

fn cat_parts(state: &InputState) -> Result<(f64, f64)> {
    state.validate()?;
    match *state {
        InputState::Cat { phase, .. } => Ok((state.alpha().norm_sqr(), phase)),
        InputState::Gaussian { .. } => Err(Error::Unsupported("this fidelity expects a cat state".into())),
    }
}

fn var_minus(link: &Link) -> Result<f64> {
    link.validate()?;
    require_stable(link.cooperativity)?;
    let v = steady_state_cm(link.cooperativity, link.eta_o, link.eta_mw, link.n_mode)?;
    Ok(squeezing_analysis(&v)?.var_minus)
}

/// Added noise per quadrature in unity-gain teleportation, V₁₁ + V₃₃ − 2V₁₃.
pub fn teleport_noise(link: &Link) -> Result<f64> {
    link.validate()?;
    let v = steady_state_cm(link.cooperativity, link.eta_o, link.eta_mw, link.n_mode)?;
    Ok(v.get(0, 0) + v.get(2, 2) - 2.0 * v.get(0, 2))
}

fn teleport_bandwidth(link: &Link) -> Option<f64> {
    link.rates().and_then(|r| emission_bandwidth(&r).ok())
}

fn convert_bandwidth(link: &Link) -> Option<f64> {
    link.rates().map(|r| conversion_bandwidth(&r))
}

/// Teleportation fidelity of |α, r⟩: (4Δq₋⁴ + 2Δq₋² cosh 2r + 1)^{−1/2}.
pub fn teleport_fidelity_gaussian(state: &InputState, link: &Link) -> Result<FidelityResult> {
    let (_, _, r) = gaussian_parts(state)?;
    let d = var_minus(link)?;
    Ok(FidelityResult {
        fidelity: (4.0 * d * d + 2.0 * d * (2.0 * r).cosh() + 1.0).powf(-0.5),
        protocol: Protocol::Teleport,
        classical_bound: teleport_classical_limit(r)?,
        bandwidth: teleport_bandwidth(link),
    })
}

/// Teleportation fidelity of |α, r⟩ from det[2V_in + ZAZ + B − ZC − CᵀZᵀ]^{−1/2}.
pub fn teleport_fidelity_gaussian_det(state: &InputState, link: &Link) -> Result<FidelityResult> {
    let (_, _, r) = gaussian_parts(state)?;
    require_stable(link.cooperativity)?;
    let s = teleport_noise(link)?;
    let m = squeezed_cm(r) * 2.0 + Matrix2::identity() * s;
    Ok(FidelityResult {
        fidelity: m.determinant().powf(-0.5),
        protocol: Protocol::Teleport,
        classical_bound: teleport_classical_limit(r)?,
        bandwidth: teleport_bandwidth(link),
    })
}

/// (1 + 2^{1−E_N} cosh 2r + 2^{−2E_N})^{−1/2}.
pub fn teleport_fidelity_from_negativity(e_n: f64, r: f64) -> f64 {
    (1.0 + 2f64.powf(1.0 - e_n) * (2.0 * r).cosh() + 2f64.powf(-2.0 * e_n)).powf(-0.5)
}

/// Best teleportation fidelity of |α, r⟩ without shared entanglement, 1/(2 cosh r).
pub fn teleport_classical_limit(r: f64) -> Result<f64> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::invalid("squeezing", "must be finite and >= 0"));
    }
    Ok((-r).exp() / (1.0 + (-2.0 * r).exp()))
}

fn cat_teleport(a2: f64, phase: f64, d: f64) -> f64 {
    let k = 1.0 + 2.0 * d;
    let num = 1.0 + (-4.0 * a2).exp() - (-4.0 * a2 / k).exp() - (-8.0 * d * a2 / k).exp();
    let den = (2.0 + 4.0 * d) * (1.0 + (-2.0 * a2).exp() * phase.cos()).powi(2);
    1.0 / k - num / den
}

/// Teleportation fidelity of a cat state with Δq₋ taken from the full CM.
pub fn teleport_fidelity_cat(state: &InputState, link: &Link) -> Result<FidelityResult> {
    let (a2, phase) = cat_parts(state)?;
    let d = var_minus(link)?;
    Ok(FidelityResult {
        fidelity: cat_teleport(a2, phase, d),
        protocol: Protocol::Teleport,
        classical_bound: cat_teleport(a2, phase, 0.5),
        bandwidth: teleport_bandwidth(link),
    })
}

/// Cat-state teleportation fidelity with an unentangled (vacuum) resource.
pub fn teleport_cat_classical_limit(state: &InputState) -> Result<f64> {
    let (a2, phase) = cat_parts(state)?;
    Ok(cat_teleport(a2, phase, 0.5))
}

/// Amplitude transmission ε₃ = √(4η_oη_Ω C)/(1 + C) of the converter.
pub fn conversion_transmissivity(link: &Link) -> f64 {
    (4.0 * link.eta_o * link.eta_mw * link.cooperativity).sqrt() / (1.0 + link.cooperativity)
}

/// Thermal noise added by the converter, in units of 2n̄_Ω: k = 4η_Ω/(1 + C)².
fn conversion_noise_gain(link: &Link) -> f64 {
    4.0 * link.eta_mw / (1.0 + link.cooperativity).powi(2)
}

pub fn convert_fidelity_gaussian(state: &InputState, link: &Link) -> Result<FidelityResult> {
    convert_fidelity_gaussian_with(state, link, DisplacementWeights::Linear)
}

/// Direct-conversion fidelity of |α, r⟩.
///
/// With [`DisplacementWeights::Linear`] the result can exceed 1 when sin φ_α < 0;
/// that case is reported as an error.
pub fn convert_fidelity_gaussian_with(state: &InputState, link: &Link, weights: DisplacementWeights) -> Result<FidelityResult> {
    let (abs_a, phi, r) = gaussian_parts(state)?;
    link.validate()?;
    let e2 = 1.0 + (2.0 * r).cosh();
    let e3 = conversion_transmissivity(link);
    let t = e3 * e3;
    let nk = link.n_mode * conversion_noise_gain(link);
    let v_minus = 1.0 + t * ((-2.0 * r).exp() - 1.0) + 2.0 * nk;
    let v_plus = 1.0 + t * ((2.0 * r).exp() - 1.0) + 2.0 * nk;
    let (wc, ws) = match weights {
        DisplacementWeights::Linear => (phi.cos(), phi.sin()),
        DisplacementWeights::Squared => (phi.cos().powi(2), phi.sin().powi(2)),
    };
    let num = (-2.0 * abs_a * abs_a * (e3 - 1.0).powi(2) * (wc / v_minus + ws / v_plus)).exp();
    let den = (e2 / 2.0 * (1.0 - t * t) + t * t + nk * (t * e2 + e2 - 2.0 * t) + nk * nk).sqrt();
    let f = num / den;
    if f > 1.0 + 1e-12 {
        return Err(Error::Unsupported(format!(
            "linear displacement weights give F = {f:.4} > 1 at phase {phi:.4} rad; use squared weights"
        )));
    }
    Ok(FidelityResult {
        fidelity: f,
        protocol: Protocol::Convert,
        classical_bound: convert_classical_limit(state)?,
        bandwidth: convert_bandwidth(link),
    })
}

/// Overlap of the input state with the vacuum, reached at C = 0.
pub fn convert_classical_limit(state: &InputState) -> Result<f64> {
    state.validate()?;
    Ok(match *state {
        InputState::Gaussian { squeezing: r, .. } => {
            let a2 = state.alpha().norm_sqr();
            2.0 * (-r - 2.0 * a2).exp() / (1.0 + (-2.0 * r).exp())
        }
        InputState::Cat { phase, .. } => {
            let a2 = state.alpha().norm_sqr();
            (1.0 + phase.cos()) / (a2.exp() + (-a2).exp() * phase.cos())
        }
    })
}

/// Direct-conversion fidelity of a cat state with real α.
///
/// The output is modeled as the cat of amplitude ε₃α with added thermal noise
/// ε₅ = 1 + 8η_Ω n̄_Ω/(1 + C)². At C = 0 nothing is converted and the output is
/// thermal noise around the vacuum.
pub fn convert_fidelity_cat(state: &InputState, link: &Link) -> Result<FidelityResult> {
    let (a2, phase) = cat_parts(state)?;
    if state.alpha().im.abs() > 1e-12 * state.alpha().re.abs().max(1.0) {
        return Err(Error::Unsupported("cat conversion fidelity is only defined for real alpha".into()));
    }
    link.validate()?;
    let e3 = conversion_transmissivity(link);
    let e5 = 1.0 + 8.0 * link.eta_mw * link.n_mode / (1.0 + link.cooperativity).powi(2);
    let (c1, c2) = (phase.cos(), (2.0 * phase).cos());
    let fidelity = if e3 == 0.0 {
        2.0 * ((-2.0 * a2 / (1.0 + e5)).exp() + c1 * (-2.0 * a2 * e5 / (1.0 + e5)).exp()) / ((1.0 + e5) * (1.0 + (-2.0 * a2).exp() * c1))
    } else {
        let e4 = (1.0 + c1 * (-2.0 * a2).exp()) * (1.0 + c1 * (-2.0 * a2 * e3 * e3).exp());
        let q = 1.0 + e5;
        let s = (-2.0 * a2 * (1.0 + e3).powi(2) / q).exp()
            + (-2.0 * a2 * (1.0 - e3).powi(2) / q).exp()
            + 2.0 * c1 * ((-2.0 * a2 * (e3 * e3 + e5) / q).exp() + (-2.0 * a2 * (1.0 + e3 * e3 * e5) / q).exp())
            + c2 * (-2.0 * a2 * (e5 * e3 * e3 + 2.0 * e3 + e5) / q).exp()
            + (-2.0 * a2 * (e5 * e3 * e3 - 2.0 * e3 + e5) / q).exp();
        s / (e4 * q)
    };
    Ok(FidelityResult {
        fidelity,
        protocol: Protocol::Convert,
        classical_bound: convert_classical_limit(state)?,
        bandwidth: convert_bandwidth(link),
    })
}

/// Closed form against an explicit phase-space construction of the converted state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrictComparison {
    pub closed_form: f64,
    pub squared_weights: f64,
    /// Grid overlap after a loss channel of transmissivity ε₃² plus the thermal noise.
    pub oracle: f64,
    /// |closed_form − oracle| / oracle.
    pub relative_discrepancy: f64,
}

pub fn convert_fidelity_gaussian_strict(state: &InputState, link: &Link, spec: Option<GridSpec>) -> Result<StrictComparison> {
    let closed_form = convert_fidelity_gaussian(state, link)?.fidelity;
    let squared_weights = convert_fidelity_gaussian_with(state, link, DisplacementWeights::Squared)?.fidelity;
    let (abs_a, _, r) = gaussian_parts(state)?;
    let a = state.alpha();
    let x_in = Vector2::new(a.re, a.im) * std::f64::consts::SQRT_2;
    let e3 = conversion_transmissivity(link);
    let t = e3 * e3;
    let noise = link.n_mode * conversion_noise_gain(link);
    let v_in = squeezed_cm(r);
    let v_out = v_in * t + Matrix2::identity() * ((1.0 - t) / 2.0 + noise);
    let max_var = v_in.max().max(v_out.max());
    let spec = spec.unwrap_or_else(|| GridSpec::for_state(abs_a, max_var));
    let w_in = WignerGrid::from_fn(spec, gaussian_wigner(x_in, v_in)?)?;
    let w_out = WignerGrid::from_fn(spec, gaussian_wigner(x_in * e3, v_out)?)?;
    let oracle = wigner_overlap_fidelity(&w_in, &w_out)?;
    Ok(StrictComparison {
        closed_form,
        squared_weights,
        oracle,
        relative_discrepancy: (closed_form - oracle).abs() / oracle,
    })
}
