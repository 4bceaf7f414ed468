//! Quantities that can be requested per sweep point.

use crate::constants::TWO_PI;
use crate::error::{Error, Result};
use crate::gaussian::{ebit_rate, entanglement_report, squeezing_analysis, steady_state_cm, wigner_normalization_mc, CovarianceMatrix4};
use crate::model::{DerivedRates, NoiseOccupations, SystemParams};
use crate::spectral::{conversion_bandwidth, emission_bandwidth, integrated_flux, Port};
use crate::transfer::{
    convert_fidelity_cat, convert_fidelity_gaussian, teleport_fidelity_cat, teleport_fidelity_gaussian, InputState, Link,
};

/// Everything a quantity may need at one parameter point.
pub struct Point<'a> {
    pub params: SystemParams,
    pub rates: DerivedRates,
    pub env: NoiseOccupations,
    pub gaussian: Option<&'a InputState>,
    pub cat: Option<&'a InputState>,
    pub seed: u64,
}

impl Point<'_> {
    pub fn link(&self) -> Link {
        Link::from_rates(&self.rates)
    }

    fn cm(&self) -> Result<CovarianceMatrix4> {
        let l = self.link();
        steady_state_cm(l.cooperativity, l.eta_o, l.eta_mw, l.n_mode)
    }

    fn gaussian(&self) -> Result<&InputState> {
        self.gaussian
            .ok_or_else(|| Error::Unsupported("no squeezed coherent state configured".into()))
    }

    fn cat(&self) -> Result<&InputState> {
        self.cat.ok_or_else(|| Error::Unsupported("no cat state configured".into()))
    }
}

pub struct Quantity {
    pub name: &'static str,
    pub unit: &'static str,
    pub eval: fn(&Point) -> Result<f64>,
}

const MC_SAMPLES: usize = 200_000;

pub static QUANTITIES: &[Quantity] = &[
    Quantity {
        name: "C",
        unit: "1",
        eval: |p| Ok(p.rates.cooperativity),
    },
    Quantity {
        name: "P_p_watts",
        unit: "W",
        eval: |p| Ok(p.params.pump_power),
    },
    Quantity {
        name: "n_p",
        unit: "1",
        eval: |p| Ok(p.rates.pump_photons),
    },
    Quantity {
        name: "G_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.multi_photon_g / TWO_PI),
    },
    Quantity {
        name: "kappa_o_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_o / TWO_PI),
    },
    Quantity {
        name: "kappa_e_o_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_e_o / TWO_PI),
    },
    Quantity {
        name: "kappa_i_o_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_i_o / TWO_PI),
    },
    Quantity {
        name: "kappa_mw_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_mw / TWO_PI),
    },
    Quantity {
        name: "kappa_e_mw_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_e_mw / TWO_PI),
    },
    Quantity {
        name: "kappa_i_mw_hz",
        unit: "Hz",
        eval: |p| Ok(p.rates.kappa_i_mw / TWO_PI),
    },
    Quantity {
        name: "n_th_internal",
        unit: "1",
        eval: |p| Ok(p.rates.n_th_internal),
    },
    Quantity {
        name: "n_th_mode",
        unit: "1",
        eval: |p| Ok(p.rates.n_th_mode),
    },
    Quantity {
        name: "BW_hz",
        unit: "Hz",
        eval: |p| Ok(emission_bandwidth(&p.rates)? / TWO_PI),
    },
    Quantity {
        name: "conversion_bandwidth_hz",
        unit: "Hz",
        eval: |p| Ok(conversion_bandwidth(&p.rates) / TWO_PI),
    },
    Quantity {
        name: "flux_optical",
        unit: "photons/s",
        eval: |p| integrated_flux(&p.rates, Port::Optical, &p.env),
    },
    Quantity {
        name: "flux_microwave",
        unit: "photons/s",
        eval: |p| integrated_flux(&p.rates, Port::Microwave, &p.env),
    },
    Quantity {
        name: "theta_deg",
        unit: "deg",
        eval: |p| Ok(squeezing_analysis(&p.cm()?)?.angle_theta),
    },
    Quantity {
        name: "var_minus",
        unit: "1",
        eval: |p| Ok(squeezing_analysis(&p.cm()?)?.var_minus),
    },
    Quantity {
        name: "var_plus",
        unit: "1",
        eval: |p| Ok(squeezing_analysis(&p.cm()?)?.var_plus),
    },
    Quantity {
        name: "purity",
        unit: "1",
        eval: |p| Ok(squeezing_analysis(&p.cm()?)?.purity),
    },
    Quantity {
        name: "r_eo",
        unit: "1",
        eval: |p| Ok(squeezing_analysis(&p.cm()?)?.r_eo),
    },
    Quantity {
        name: "E_N",
        unit: "ebit",
        eval: |p| Ok(entanglement_report(&p.cm()?)?.log_negativity),
    },
    Quantity {
        name: "E_F",
        unit: "ebit",
        eval: |p| Ok(entanglement_report(&p.cm()?)?.entanglement_formation),
    },
    Quantity {
        name: "E_F_avg",
        unit: "ebit",
        eval: |p| Ok(ebit_rate(&p.rates, &p.env)?.entanglement_formation),
    },
    Quantity {
        name: "ebit_rate",
        unit: "ebit/s",
        eval: |p| Ok(ebit_rate(&p.rates, &p.env)?.ebit_rate),
    },
    Quantity {
        name: "F_teleport_gaussian",
        unit: "1",
        eval: |p| Ok(teleport_fidelity_gaussian(p.gaussian()?, &p.link())?.fidelity),
    },
    Quantity {
        name: "F_teleport_cat",
        unit: "1",
        eval: |p| Ok(teleport_fidelity_cat(p.cat()?, &p.link())?.fidelity),
    },
    Quantity {
        name: "F_convert_gaussian",
        unit: "1",
        eval: |p| Ok(convert_fidelity_gaussian(p.gaussian()?, &p.link())?.fidelity),
    },
    Quantity {
        name: "F_convert_cat",
        unit: "1",
        eval: |p| Ok(convert_fidelity_cat(p.cat()?, &p.link())?.fidelity),
    },
    Quantity {
        name: "wigner_norm_mc",
        unit: "1",
        eval: |p| wigner_normalization_mc(&p.cm()?, MC_SAMPLES, p.seed),
    },
];

pub fn quantity(name: &str) -> Option<&'static Quantity> {
    QUANTITIES.iter().find(|q| q.name == name)
}

/// Unit of a sweepable variable.
pub fn variable_unit(name: &str) -> &'static str {
    match name {
        "microwave_freq" | "optical_freq" | "pump_freq" | "vacuum_coupling" => "Hz",
        "pump_power" => "W",
        "bath_temp" | "waveguide_temp" => "K",
        _ => "1",
    }
}
