//! Device parameters, loss rates, cooperativity and thermal occupations.
//!
//! Configuration values are linear frequencies (Hz) and SI units. Every rate
//! stored in [`DerivedRates`] is angular (rad/s).

use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, K_B, TWO_PI};
use crate::error::{Error, Result};

/// Raw device, drive and environment inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemParams {
    /// Microwave mode frequency Ω/2π, Hz.
    pub microwave_freq: f64,
    /// Optical mode frequency ω_o/2π, Hz.
    pub optical_freq: f64,
    /// Pump frequency ω_p/2π, Hz. Falls back to `optical_freq`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pump_freq: Option<f64>,
    /// Vacuum electro-optic coupling g/2π, Hz.
    pub vacuum_coupling: f64,
    pub q_int_microwave: f64,
    pub q_int_optical: f64,
    pub eta_microwave: f64,
    pub eta_optical: f64,
    /// Optical pump power, W.
    pub pump_power: f64,
    /// Device bath temperature, K.
    pub bath_temp: f64,
    /// Temperature of the external waveguides, K.
    #[serde(default)]
    pub waveguide_temp: f64,
}

impl SystemParams {
    /// The reference over-coupled device: 9 GHz / 193.5 THz, g/2π = 119 Hz,
    /// Q_i = 3e3 / 5e8, η_Ω = 0.8, η_o = 0.5, pumped at 19.2 μW and held at 10 mK.
    pub fn reference() -> Self {
        SystemParams {
            microwave_freq: 9.0e9,
            optical_freq: 193.5e12,
            pump_freq: None,
            vacuum_coupling: 119.0,
            q_int_microwave: 3.0e3,
            q_int_optical: 5.0e8,
            eta_microwave: 0.8,
            eta_optical: 0.5,
            pump_power: 19.2e-6,
            bath_temp: 0.01,
            waveguide_temp: 0.0,
        }
    }

    pub fn pump_freq(&self) -> f64 {
        self.pump_freq.unwrap_or(self.optical_freq)
    }

    pub fn validate(&self) -> Result<()> {
        positive("microwave_freq", self.microwave_freq)?;
        positive("optical_freq", self.optical_freq)?;
        if let Some(f) = self.pump_freq {
            positive("pump_freq", f)?;
        }
        non_negative("vacuum_coupling", self.vacuum_coupling)?;
        positive("q_int_microwave", self.q_int_microwave)?;
        positive("q_int_optical", self.q_int_optical)?;
        unit_interval("eta_microwave", self.eta_microwave)?;
        unit_interval("eta_optical", self.eta_optical)?;
        if self.eta_microwave == 1.0 {
            return Err(Error::invalid(
                "eta_microwave",
                "must be < 1 for a finite intrinsic Q (external coupling would be infinite)",
            ));
        }
        if self.eta_optical == 1.0 {
            return Err(Error::invalid(
                "eta_optical",
                "must be < 1 for a finite intrinsic Q (external coupling would be infinite)",
            ));
        }
        non_negative("pump_power", self.pump_power)?;
        non_negative("bath_temp", self.bath_temp)?;
        non_negative("waveguide_temp", self.waveguide_temp)?;
        Ok(())
    }

    /// Look up a numeric field by its serialized name.
    pub fn get(&self, field: &str) -> Option<f64> {
        Some(match field {
            "microwave_freq" => self.microwave_freq,
            "optical_freq" => self.optical_freq,
            "pump_freq" => self.pump_freq(),
            "vacuum_coupling" => self.vacuum_coupling,
            "q_int_microwave" => self.q_int_microwave,
            "q_int_optical" => self.q_int_optical,
            "eta_microwave" => self.eta_microwave,
            "eta_optical" => self.eta_optical,
            "pump_power" => self.pump_power,
            "bath_temp" => self.bath_temp,
            "waveguide_temp" => self.waveguide_temp,
            _ => return None,
        })
    }

    /// Copy with one numeric field replaced. Returns `None` for unknown names.
    pub fn with_field(&self, field: &str, value: f64) -> Option<Self> {
        let mut p = *self;
        match field {
            "microwave_freq" => p.microwave_freq = value,
            "optical_freq" => p.optical_freq = value,
            "pump_freq" => p.pump_freq = Some(value),
            "vacuum_coupling" => p.vacuum_coupling = value,
            "q_int_microwave" => p.q_int_microwave = value,
            "q_int_optical" => p.q_int_optical = value,
            "eta_microwave" => p.eta_microwave = value,
            "eta_optical" => p.eta_optical = value,
            "pump_power" => p.pump_power = value,
            "bath_temp" => p.bath_temp = value,
            "waveguide_temp" => p.waveguide_temp = value,
            _ => return None,
        }
        Some(p)
    }

    pub const FIELDS: [&'static str; 11] = [
        "microwave_freq",
        "optical_freq",
        "pump_freq",
        "vacuum_coupling",
        "q_int_microwave",
        "q_int_optical",
        "eta_microwave",
        "eta_optical",
        "pump_power",
        "bath_temp",
        "waveguide_temp",
    ];
}

/// Electro-optic material and field inputs for the coupling-rate estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialParams {
    pub refractive_index_e: f64,
    /// r_33, m/V.
    pub electro_optic_coeff: f64,
    /// Single-photon microwave field at the optical mode, V/m.
    pub single_photon_field: f64,
}

impl MaterialParams {
    pub fn validate(&self) -> Result<()> {
        positive("refractive_index_e", self.refractive_index_e)?;
        positive("electro_optic_coeff", self.electro_optic_coeff)?;
        non_negative("single_photon_field", self.single_photon_field)
    }
}

/// Angular loss rates, coupling and occupations derived from [`SystemParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedRates {
    pub kappa_o: f64,
    pub kappa_mw: f64,
    pub kappa_e_o: f64,
    pub kappa_i_o: f64,
    pub kappa_e_mw: f64,
    pub kappa_i_mw: f64,
    pub delta_kappa_o: f64,
    pub delta_kappa_mw: f64,
    pub pump_photons: f64,
    /// |G| = √n_p·g, rad/s. The pump phase is fixed to zero so G is real.
    pub multi_photon_g: f64,
    pub cooperativity: f64,
    /// Effective microwave mode occupation n̄_Ω = κ_i,Ω n̄^i_Ω / κ_Ω.
    pub n_th_mode: f64,
    /// Intrinsic microwave bath occupation n̄^i_Ω.
    pub n_th_internal: f64,
    /// Vacuum coupling g, rad/s. Zero when the rates were built from losses only.
    pub vacuum_coupling: f64,
}

impl DerivedRates {
    /// Build rates directly from total losses (rad/s), coupling ratios and C.
    /// `pump_photons` and `vacuum_coupling` are left at zero.
    pub fn from_losses(kappa_o: f64, kappa_mw: f64, eta_o: f64, eta_mw: f64, c: f64) -> Result<Self> {
        positive("kappa_o", kappa_o)?;
        positive("kappa_mw", kappa_mw)?;
        unit_interval("eta_optical", eta_o)?;
        unit_interval("eta_microwave", eta_mw)?;
        non_negative("cooperativity", c)?;
        let (kappa_e_o, kappa_i_o) = (eta_o * kappa_o, (1.0 - eta_o) * kappa_o);
        let (kappa_e_mw, kappa_i_mw) = (eta_mw * kappa_mw, (1.0 - eta_mw) * kappa_mw);
        Ok(DerivedRates {
            kappa_o,
            kappa_mw,
            kappa_e_o,
            kappa_i_o,
            kappa_e_mw,
            kappa_i_mw,
            delta_kappa_o: kappa_e_o - kappa_i_o,
            delta_kappa_mw: kappa_e_mw - kappa_i_mw,
            pump_photons: 0.0,
            multi_photon_g: (c * kappa_o * kappa_mw).sqrt() / 2.0,
            cooperativity: c,
            n_th_mode: 0.0,
            n_th_internal: 0.0,
            vacuum_coupling: 0.0,
        })
    }

    /// Same losses, different cooperativity (pump photon number rescaled).
    pub fn with_cooperativity(&self, c: f64) -> Result<Self> {
        non_negative("cooperativity", c)?;
        let mut r = *self;
        r.cooperativity = c;
        r.multi_photon_g = (c * self.kappa_o * self.kappa_mw).sqrt() / 2.0;
        if self.vacuum_coupling > 0.0 {
            r.pump_photons = (r.multi_photon_g / self.vacuum_coupling).powi(2);
        }
        Ok(r)
    }

    /// Same losses, with intrinsic microwave occupation `n_internal`.
    pub fn with_internal_occupation(&self, n_internal: f64) -> Result<Self> {
        non_negative("n_th_internal", n_internal)?;
        let mut r = *self;
        r.n_th_internal = n_internal;
        r.n_th_mode = mode_occupancy(self, n_internal);
        Ok(r)
    }

    pub fn eta_o(&self) -> f64 {
        self.kappa_e_o / self.kappa_o
    }

    pub fn eta_mw(&self) -> f64 {
        self.kappa_e_mw / self.kappa_mw
    }
}

/// Occupations of the four input noise ports.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct NoiseOccupations {
    pub ext_optical: f64,
    pub int_optical: f64,
    pub ext_microwave: f64,
    pub int_microwave: f64,
}

impl NoiseOccupations {
    pub fn cold() -> Self {
        Self::default()
    }

    /// Internal microwave bath from `rates`; waveguides cold; optical bath empty.
    pub fn from_rates(rates: &DerivedRates) -> Self {
        NoiseOccupations {
            int_microwave: rates.n_th_internal,
            ..Self::default()
        }
    }

    /// Occupations implied by the configured temperatures. The optical
    /// intrinsic occupation is always zero at these temperatures.
    pub fn from_params(params: &SystemParams) -> Self {
        NoiseOccupations {
            ext_optical: thermal_occupancy(params.waveguide_temp, params.optical_freq),
            int_optical: 0.0,
            ext_microwave: thermal_occupancy(params.waveguide_temp, params.microwave_freq),
            int_microwave: thermal_occupancy(params.bath_temp, params.microwave_freq),
        }
    }

    /// Input ordering used by the scattering matrix: (e,o), (i,o), (e,Ω), (i,Ω).
    pub fn as_array(&self) -> [f64; 4] {
        [self.ext_optical, self.int_optical, self.ext_microwave, self.int_microwave]
    }
}

pub fn derive_rates(params: &SystemParams) -> Result<DerivedRates> {
    params.validate()?;
    let kappa_i_mw = TWO_PI * params.microwave_freq / params.q_int_microwave;
    let kappa_i_o = TWO_PI * params.optical_freq / params.q_int_optical;
    let kappa_mw = kappa_i_mw / (1.0 - params.eta_microwave);
    let kappa_o = kappa_i_o / (1.0 - params.eta_optical);
    let kappa_e_mw = params.eta_microwave * kappa_mw;
    let kappa_e_o = params.eta_optical * kappa_o;
    let omega_p = TWO_PI * params.pump_freq();
    let pump_photons = 4.0 * params.eta_optical / kappa_o * params.pump_power / (HBAR * omega_p);
    let g = TWO_PI * params.vacuum_coupling;
    let cooperativity = 4.0 * pump_photons * g * g / (kappa_o * kappa_mw);
    let n_th_internal = thermal_occupancy(params.bath_temp, params.microwave_freq);
    Ok(DerivedRates {
        kappa_o,
        kappa_mw,
        kappa_e_o,
        kappa_i_o,
        kappa_e_mw,
        kappa_i_mw,
        delta_kappa_o: kappa_e_o - kappa_i_o,
        delta_kappa_mw: kappa_e_mw - kappa_i_mw,
        pump_photons,
        multi_photon_g: pump_photons.sqrt() * g,
        cooperativity,
        n_th_mode: kappa_i_mw * n_th_internal / kappa_mw,
        n_th_internal,
        vacuum_coupling: g,
    })
}

/// Cooperativity reached with pump power `p_p` (W); the pump power in `params` is ignored.
pub fn cooperativity_for_power(p_p: f64, params: &SystemParams) -> Result<f64> {
    non_negative("pump_power", p_p)?;
    let p = SystemParams {
        pump_power: p_p,
        ..*params
    };
    Ok(derive_rates(&p)?.cooperativity)
}

/// Pump power (W) needed to reach cooperativity `c`.
pub fn pump_power_for_cooperativity(c: f64, params: &SystemParams) -> Result<f64> {
    non_negative("cooperativity", c)?;
    let per_watt = cooperativity_for_power(1.0, params)?;
    if per_watt == 0.0 {
        if c == 0.0 {
            return Ok(0.0);
        }
        return Err(Error::invalid(
            "cooperativity",
            "unreachable: the pump does not couple (zero g or eta_optical)",
        ));
    }
    Ok(c / per_watt)
}

/// g/2π in Hz from the material response and single-photon field.
pub fn coupling_rate_from_field(mat: &MaterialParams, pump_freq: f64) -> Result<f64> {
    mat.validate()?;
    positive("pump_freq", pump_freq)?;
    let n2 = mat.refractive_index_e * mat.refractive_index_e;
    Ok(n2 * pump_freq * mat.electro_optic_coeff * mat.single_photon_field / (4.0 * std::f64::consts::SQRT_2))
}

/// Gap range (m) over which the g ∝ d^-0.8 fit is trusted.
pub const GAP_RANGE: (f64, f64) = (10e-6, 1e-3);
pub const GAP_EXPONENT: f64 = -0.8;

pub fn gap_scaled_coupling(g_ref: f64, d_ref: f64, d: f64) -> Result<f64> {
    positive("g_ref", g_ref)?;
    for (name, v) in [("d_ref", d_ref), ("d", d)] {
        if !(GAP_RANGE.0..=GAP_RANGE.1).contains(&v) {
            return Err(Error::OutOfRange {
                field: name.to_string(),
                value: v,
                min: GAP_RANGE.0,
                max: GAP_RANGE.1,
            });
        }
    }
    Ok(g_ref * (d / d_ref).powf(GAP_EXPONENT))
}

/// Bose-Einstein occupation at temperature `t` (K) and frequency `freq` (Hz).
pub fn thermal_occupancy(t: f64, freq: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    1.0 / (HBAR * TWO_PI * freq / (K_B * t)).exp_m1()
}

pub fn mode_occupancy(rates: &DerivedRates, n_internal: f64) -> f64 {
    rates.kappa_i_mw * n_internal / rates.kappa_mw
}

/// Azimuthal selection rule m_c = m_s + m_Ω.
pub fn phase_matching_check(m_c: u32, m_s: u32, m_mw: u32) -> bool {
    m_s.checked_add(m_mw) == Some(m_c)
}

fn positive(field: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be finite and > 0, got {v}")))
    }
}

fn non_negative(field: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must be finite and >= 0, got {v}")))
    }
}

fn unit_interval(field: &str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::invalid(field, format!("must lie in [0, 1], got {v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn hz(rad: f64) -> f64 {
        rad / TWO_PI
    }

    #[test]
    fn reference_rates() {
        let r = derive_rates(&SystemParams::reference()).unwrap();
        assert_relative_eq!(hz(r.kappa_i_mw), 9e9 / 3e3, max_relative = 1e-12);
        assert_relative_eq!(hz(r.kappa_mw), 15e6, max_relative = 1e-12);
        assert_relative_eq!(hz(r.kappa_i_o), 387e3, max_relative = 1e-12);
        assert_relative_eq!(hz(r.kappa_o), 774e3, max_relative = 1e-12);
        assert_eq!(r.kappa_e_o + r.kappa_i_o, r.kappa_o);
        assert_eq!(r.delta_kappa_mw, r.kappa_e_mw - r.kappa_i_mw);
        let g = TWO_PI * 119.0;
        assert_relative_eq!(
            r.cooperativity,
            4.0 * r.pump_photons * g * g / (r.kappa_o * r.kappa_mw),
            max_relative = 1e-14
        );
    }

    #[test]
    fn undriven_uncoupled() {
        let p = SystemParams {
            eta_optical: 0.0,
            eta_microwave: 0.0,
            pump_power: 0.0,
            ..SystemParams::reference()
        };
        let r = derive_rates(&p).unwrap();
        assert_eq!((r.kappa_e_o, r.kappa_e_mw, r.pump_photons, r.cooperativity), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn pump_power_anchors() {
        let p = SystemParams::reference();
        let p1 = pump_power_for_cooperativity(1.0, &p).unwrap();
        assert!((p1 / 63.9e-6 - 1.0).abs() < 0.01, "{p1}");
        let c = cooperativity_for_power(19.2e-6, &p).unwrap();
        assert!((c - 0.30).abs() < 0.01, "{c}");
        let crit = SystemParams {
            eta_optical: 0.5,
            eta_microwave: 0.5,
            ..p
        };
        let pc = pump_power_for_cooperativity(1.0, &crit).unwrap();
        assert!((pc / 25.4e-6 - 1.0).abs() < 0.02, "{pc}");
        assert_eq!(cooperativity_for_power(0.0, &p).unwrap(), 0.0);
    }

    #[test]
    fn critical_coupling_closed_form() {
        // C = P g² Q_o² Q_Ω / (ħ ω_p³ Ω) when both modes are critically coupled.
        let p = SystemParams {
            eta_optical: 0.5,
            eta_microwave: 0.5,
            ..SystemParams::reference()
        };
        let (g, wp, om) = (TWO_PI * 119.0, TWO_PI * 193.5e12, TWO_PI * 9e9);
        let expect = p.pump_power * g * g * 5e8f64.powi(2) * 3e3 / (HBAR * wp.powi(3) * om);
        let c = derive_rates(&p).unwrap().cooperativity;
        assert_relative_eq!(c, expect, max_relative = 1e-12);
    }

    #[test]
    fn q_round_trip() {
        let p = SystemParams::reference();
        let r = derive_rates(&p).unwrap();
        assert_relative_eq!(TWO_PI * p.microwave_freq / r.kappa_i_mw, p.q_int_microwave, max_relative = 1e-12);
        assert_relative_eq!(TWO_PI * p.optical_freq / r.kappa_i_o, p.q_int_optical, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_params() {
        let mut p = SystemParams::reference();
        p.eta_optical = 1.0;
        assert!(matches!(derive_rates(&p), Err(Error::InvalidParameter { field, .. }) if field == "eta_optical"));
        p.eta_optical = 0.5;
        p.pump_power = -1.0;
        assert!(derive_rates(&p).is_err());
        p.pump_power = 0.0;
        p.q_int_optical = 0.0;
        assert!(derive_rates(&p).is_err());
    }

    #[test]
    fn coupling_from_field() {
        let mat = MaterialParams {
            refractive_index_e: 2.0,
            electro_optic_coeff: 31e-12,
            single_photon_field: 10.0,
        };
        let g = coupling_rate_from_field(&mat, 193.5e12).unwrap();
        // 4 · 193.5e12 · 31e-12 · 10 / (4√2)
        assert_relative_eq!(g, 239_940.0 / 5.656_854_249_492_38, max_relative = 1e-12);
        assert_relative_eq!(g, 42_415.7, max_relative = 1e-5);
        let zero = MaterialParams {
            single_photon_field: 0.0,
            ..mat
        };
        assert_eq!(coupling_rate_from_field(&zero, 193.5e12).unwrap(), 0.0);
        let doubled = MaterialParams {
            electro_optic_coeff: 62e-12,
            ..mat
        };
        assert_relative_eq!(coupling_rate_from_field(&doubled, 193.5e12).unwrap(), 2.0 * g, max_relative = 1e-15);
    }

    #[test]
    fn gap_scaling() {
        let d = 100e-6;
        assert_eq!(gap_scaled_coupling(119.0, d, d).unwrap(), 119.0);
        assert_relative_eq!(
            gap_scaled_coupling(1.0, d, 2.0 * d).unwrap(),
            0.574_349_177_498_517_6,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            gap_scaled_coupling(1.0, d, d / 10.0).unwrap(),
            6.309_573_444_801_933,
            max_relative = 1e-12
        );
        assert!(matches!(gap_scaled_coupling(1.0, d, 5e-6), Err(Error::OutOfRange { .. })));
        assert!(gap_scaled_coupling(1.0, d, 2e-3).is_err());
    }

    #[test]
    fn occupations() {
        assert_eq!(thermal_occupancy(0.0, 9e9), 0.0);
        let n = thermal_occupancy(0.8, 9e9);
        let x = 1.054_571_817e-34 * 2.0 * std::f64::consts::PI * 9e9 / (1.380_649e-23 * 0.8);
        assert_relative_eq!(n, 1.0 / (x.exp() - 1.0), max_relative = 1e-12);
        assert!((n - 1.40).abs() < 0.01);
        assert!(thermal_occupancy(0.01, 9e9) < 1e-18);
        let r = derive_rates(&SystemParams {
            bath_temp: 0.8,
            ..SystemParams::reference()
        })
        .unwrap();
        assert_relative_eq!(r.n_th_mode, 0.2 * n, max_relative = 1e-12);
    }

    #[test]
    fn phase_matching() {
        let m = 1000;
        assert!(phase_matching_check(m + 1, m, 1));
        assert!(phase_matching_check(5, 5, 0));
        assert!(!phase_matching_check(5, 3, 1));
    }

    #[test]
    fn field_lookup_round_trip() {
        let p = SystemParams::reference();
        for f in SystemParams::FIELDS {
            let v = p.get(f).unwrap();
            assert_eq!(p.with_field(f, v).unwrap().get(f), Some(v));
        }
        assert!(p.get("nope").is_none());
    }
}
