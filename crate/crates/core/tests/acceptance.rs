//! One line per acceptance criterion; exits non-zero if any criterion fails.

use eo_entangler::constants::TWO_PI;
use eo_entangler::gaussian::{
    ebit_rate, log_negativity, matched_log_negativity, max_ebit_rate, squeezing_analysis, steady_state_cm, CovarianceMatrix4,
};
use eo_entangler::model::{cooperativity_for_power, pump_power_for_cooperativity, thermal_occupancy};
use eo_entangler::spectral::{conversion_bandwidth, conversion_efficiency, emission_bandwidth, output_spectrum, spectral_covariance, Port};
use eo_entangler::transfer::{
    conversion_transmissivity, convert_cat_oracle, convert_fidelity_cat, convert_fidelity_gaussian, teleport_cat_oracle,
    teleport_fidelity_cat, teleport_fidelity_gaussian, InputState, Link,
};
use eo_entangler::{derive_rates, DerivedRates, NoiseOccupations, SystemParams};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Cooperativity range of the randomized and scanned checks.
const C_MAX: f64 = 0.95;
const C_STEPS: usize = 190;

fn fmt_c(c: f64) -> String {
    if c >= C_MAX {
        "never".into()
    } else {
        format!("{c:.3}")
    }
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rel(a: f64, b: f64) -> f64 {
    (a / b - 1.0).abs()
}

fn sq21() -> InputState {
    InputState::gaussian(Complex64::new(2.0, 0.0), 1.0)
}

fn odd_cat(alpha: f64) -> InputState {
    InputState::cat(Complex64::new(alpha, 0.0), std::f64::consts::PI)
}

fn table_one_power() -> Outcome {
    let p = SystemParams::reference();
    let p1 = pump_power_for_cooperativity(1.0, &p).unwrap();
    let crit = SystemParams {
        eta_optical: 0.5,
        eta_microwave: 0.5,
        ..p
    };
    let pc = pump_power_for_cooperativity(1.0, &crit).unwrap();
    check(
        rel(p1, 63.9e-6) <= 0.01 && rel(pc, 25.4e-6) <= 0.02,
        format!(
            "P(C=1) = {:.3} uW (63.9 +-1%), critically coupled {:.3} uW (25.4 +-2%)",
            p1 * 1e6,
            pc * 1e6
        ),
    )
}

fn power_anchor() -> Outcome {
    let c = cooperativity_for_power(19.2e-6, &SystemParams::reference()).unwrap();
    check((c - 0.30).abs() <= 0.01, format!("C(19.2 uW) = {c:.5} (0.30 +-0.01)"))
}

fn squeezing_angle() -> Outcome {
    let r = derive_rates(&SystemParams::reference()).unwrap().with_cooperativity(0.3).unwrap();
    let s = squeezing_analysis(&steady_state_cm(0.3, r.eta_o(), r.eta_mw(), r.n_th_mode).unwrap()).unwrap();
    check(
        (s.angle_theta - 39.34).abs() <= 0.01,
        format!("theta = {:.4} deg (39.34 +-0.01)", s.angle_theta),
    )
}

fn ebit_maximum() -> Outcome {
    let p = SystemParams::reference();
    let env = NoiseOccupations::from_params(&p);
    let a = max_ebit_rate(&derive_rates(&p).unwrap(), &env).unwrap();
    let strong = SystemParams { eta_optical: 0.8, ..p };
    let b = max_ebit_rate(&derive_rates(&strong).unwrap(), &env).unwrap();
    let (ra, bwa) = (a.report.ebit_rate, a.report.bandwidth / TWO_PI);
    let (rb, bwb) = (b.report.ebit_rate, b.report.bandwidth / TWO_PI);
    let ok_a = rel(ra, 0.26e6) <= 0.15 && (a.cooperativity - 0.22).abs() <= 0.05 && rel(bwa, 0.6e6) <= 0.10;
    let ok_b = rb > 1e6 && rel(bwb, 2e6) <= 0.15 && (b.cooperativity - 0.26).abs() <= 0.05;
    check(
        ok_a && ok_b,
        format!(
            "device: {:.4} Mebit/s at C = {:.3}, BW {:.3} MHz [{}]; eta_o = 0.8: {:.4} Mebit/s at C = {:.3}, BW {:.3} MHz (2 +-15%) [{}]",
            ra / 1e6,
            a.cooperativity,
            bwa / 1e6,
            if ok_a { "ok" } else { "off" },
            rb / 1e6,
            b.cooperativity,
            bwb / 1e6,
            if ok_b { "ok" } else { "off" },
        ),
    )
}

/// The benchmark device runs at an effective 2.1 K with waveguides held cold.
fn benchmark_link(t_eff: f64) -> Link {
    let (eta_o, eta_mw) = (0.31, 0.26);
    let n_mode = (1.0 - eta_mw) * thermal_occupancy(t_eff, 9e9);
    Link::new(0.075, eta_o, eta_mw, n_mode)
}

fn benchmark_fidelities() -> Outcome {
    let eval = |l: &Link| {
        [
            teleport_fidelity_gaussian(&sq21(), l).unwrap().fidelity,
            teleport_fidelity_cat(&odd_cat(2.0), l).unwrap().fidelity,
            convert_fidelity_cat(&odd_cat(2.0), l).unwrap().fidelity,
            convert_fidelity_gaussian(&sq21(), l).unwrap().fidelity,
        ]
    };
    let f = eval(&benchmark_link(2.1));
    let zero = eval(&benchmark_link(0.0));
    let oks = [
        (f[0] - 0.41).abs() <= 0.01,
        (f[1] - 0.25).abs() <= 0.01,
        (f[2] - 0.09).abs() <= 0.01,
        (0.5e-3..=2e-3).contains(&f[3]),
    ];
    let tag = |b: bool| if b { "ok" } else { "off" };
    check(
        oks.iter().all(|&b| b),
        format!(
            "at 2.1 K: teleport |2,1> {:.4} [{}], teleport cat {:.4} [{}], convert cat {:.4} [{}], convert |2,1> {:.3e} [{}]; at 0 K: {:.4}, {:.4}, {:.4}, {:.3e}",
            f[0],
            tag(oks[0]),
            f[1],
            tag(oks[1]),
            f[2],
            tag(oks[2]),
            f[3],
            tag(oks[3]),
            zero[0],
            zero[1],
            zero[2],
            zero[3]
        ),
    )
}

fn conversion_limits() -> Outcome {
    let kappa = TWO_PI * 1e6;
    let r = DerivedRates::from_losses(kappa, kappa, 1.0, 1.0, 1.0).unwrap();
    let eff = conversion_efficiency(0.0, &r);
    let bw = conversion_bandwidth(&r);
    check(
        eff == 1.0 && rel(bw, 2f64.sqrt() * kappa) <= 1e-9,
        format!("efficiency(0) = {eff}, BW/kappa = {:.12}", bw / kappa),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst_cm: f64 = 0.0;
    for _ in 0..100 {
        let (ko, km) = (rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0));
        let (eo, em) = (rng.gen_range(0.05..=1.0), rng.gen_range(0.05..=1.0));
        let c = rng.gen_range(0.0..0.95);
        let n_int = rng.gen_range(0.0..3.0);
        let r = DerivedRates::from_losses(ko, km, eo, em, c).unwrap();
        let env = NoiseOccupations {
            int_microwave: n_int,
            ..NoiseOccupations::cold()
        };
        let spec = spectral_covariance(0.0, &r, &env).unwrap();
        let closed = steady_state_cm(c, eo, em, (1.0 - em) * n_int).unwrap();
        worst_cm = worst_cm.max(spec.max_abs_diff(&closed));
    }
    let mut worst_en: f64 = 0.0;
    let mut en_holds_to = C_MAX;
    for k in 0..=C_STEPS {
        let c = C_MAX * k as f64 / C_STEPS as f64;
        for eta in [0.2, 0.5, 0.8, 1.0] {
            let pipeline = log_negativity(&steady_state_cm(c, eta, eta, 0.0).unwrap()).unwrap();
            let err = (pipeline - matched_log_negativity(c, eta)).abs();
            if err > 1e-9 {
                en_holds_to = en_holds_to.min(c);
            }
            worst_en = worst_en.max(err);
        }
    }
    let mut worst_fwhm: f64 = 0.0;
    for _ in 0..100 {
        let (ko, km) = (rng.gen_range(0.1..10.0), rng.gen_range(0.1..10.0));
        let (eo, em) = (rng.gen_range(0.05..1.0), rng.gen_range(0.05..1.0));
        let c = rng.gen_range(0.0..0.95);
        let r = DerivedRates::from_losses(ko, km, eo, em, c).unwrap();
        let bw = emission_bandwidth(&r).unwrap();
        for port in [Port::Optical, Port::Microwave] {
            let cold = NoiseOccupations::cold();
            let h = output_spectrum(bw / 2.0, &r, port, &cold).unwrap() / output_spectrum(0.0, &r, port, &cold).unwrap();
            worst_fwhm = worst_fwhm.max((2.0 * h - 1.0).abs());
        }
        let rc = r.with_cooperativity(rng.gen_range(0.0..3.0)).unwrap();
        let bc = conversion_bandwidth(&rc);
        worst_fwhm = worst_fwhm.max((2.0 * conversion_efficiency(bc / 2.0, &rc) / conversion_efficiency(0.0, &rc) - 1.0).abs());
    }
    check(
        worst_cm <= 1e-9 && worst_en <= 1e-9 && worst_fwhm <= 1e-9,
        format!(
            "max |CM diff| = {worst_cm:.2e}, max |E_N diff| = {worst_en:.2e} (1e-9 first exceeded at C = {}), max FWHM rel err = {worst_fwhm:.2e}",
            fmt_c(en_holds_to)
        ),
    )
}

fn physicality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut min_nu = f64::INFINITY;
    let mut min_prod = f64::INFINITY;
    for _ in 0..1000 {
        let c = rng.gen_range(0.0..C_MAX);
        let (eo, em) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
        let n = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..5.0) };
        let v: CovarianceMatrix4 = steady_state_cm(c, eo, em, n).unwrap();
        min_nu = min_nu.min(v.symplectic_eigenvalues().unwrap().0);
        let s = squeezing_analysis(&v).unwrap();
        min_prod = min_prod.min(s.var_minus * s.var_plus);
    }
    let mut worst_eq: f64 = 0.0;
    let mut eq_holds_to = C_MAX;
    for k in 0..=C_STEPS {
        let c = C_MAX * k as f64 / C_STEPS as f64;
        let s = squeezing_analysis(&steady_state_cm(c, 1.0, 1.0, 0.0).unwrap()).unwrap();
        let err = (s.var_minus * s.var_plus - 0.25).abs();
        if err > 1e-12 {
            eq_holds_to = eq_holds_to.min(c);
        }
        worst_eq = worst_eq.max(err);
    }
    check(
        min_nu >= 0.5 - 1e-10 && min_prod >= 0.25 - 1e-12 && worst_eq <= 1e-12,
        format!(
            "min nu = {min_nu:.12}, min var-*var+ = {min_prod:.12}, lossless |product - 1/4| = {worst_eq:.1e} (1e-12 first exceeded at C = {})",
            fmt_c(eq_holds_to)
        ),
    )
}

fn cat_grid_oracle() -> Outcome {
    let mut worst_t: f64 = 0.0;
    let mut worst_c: f64 = 0.0;
    for c in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let link = Link::new(c, 1.0, 1.0, 0.0);
        let var = squeezing_analysis(&steady_state_cm(c, 1.0, 1.0, 0.0).unwrap()).unwrap().var_minus;
        let eps3 = conversion_transmissivity(&link);
        for alpha in [0.5, 1.0, 1.5, 2.0, 2.5] {
            let s = odd_cat(alpha);
            let t = teleport_fidelity_cat(&s, &link).unwrap().fidelity;
            worst_t = worst_t.max(rel(t, teleport_cat_oracle(&s, var, None).unwrap()));
            let v = convert_fidelity_cat(&s, &link).unwrap().fidelity;
            worst_c = worst_c.max(rel(v, convert_cat_oracle(&s, eps3, 1.0, None).unwrap()));
        }
    }
    check(
        worst_t <= 0.01 && worst_c <= 0.01,
        format!("max rel. deviation: teleport {worst_t:.2e}, convert {worst_c:.2e} (5 x 5 grid, 1% allowed)"),
    )
}

fn temperature_ordering() -> Outcome {
    let base = SystemParams::reference();
    let cold = derive_rates(&SystemParams { bath_temp: 0.01, ..base }).unwrap();
    let hot_p = SystemParams { bath_temp: 0.8, ..base };
    let hot = derive_rates(&hot_p).unwrap();
    let (env_c, env_h) = (NoiseOccupations::from_params(&base), NoiseOccupations::from_params(&hot_p));
    let names = ["E_N", "ebit_rate", "F_tel |2,1>", "F_tel cat", "F_conv |2,1>", "F_conv cat"];
    let mut violations = [0usize; 6];
    let mut points = 0;
    for k in 1..=49 {
        let c = 0.02 * k as f64;
        let (rc, rh) = (cold.with_cooperativity(c).unwrap(), hot.with_cooperativity(c).unwrap());
        let (lc, lh) = (Link::from_rates(&rc), Link::from_rates(&rh));
        let en = |l: &Link| log_negativity(&steady_state_cm(c, l.eta_o, l.eta_mw, l.n_mode).unwrap()).unwrap();
        let pairs = [
            (en(&lh), en(&lc)),
            (ebit_rate(&rh, &env_h).unwrap().ebit_rate, ebit_rate(&rc, &env_c).unwrap().ebit_rate),
            (
                teleport_fidelity_gaussian(&sq21(), &lh).unwrap().fidelity,
                teleport_fidelity_gaussian(&sq21(), &lc).unwrap().fidelity,
            ),
            (
                teleport_fidelity_cat(&odd_cat(2.0), &lh).unwrap().fidelity,
                teleport_fidelity_cat(&odd_cat(2.0), &lc).unwrap().fidelity,
            ),
            (
                convert_fidelity_gaussian(&sq21(), &lh).unwrap().fidelity,
                convert_fidelity_gaussian(&sq21(), &lc).unwrap().fidelity,
            ),
            (
                convert_fidelity_cat(&odd_cat(2.0), &lh).unwrap().fidelity,
                convert_fidelity_cat(&odd_cat(2.0), &lc).unwrap().fidelity,
            ),
        ];
        for (i, (h, c)) in pairs.iter().enumerate() {
            if h > c {
                violations[i] += 1;
            }
        }
        points += 1;
    }
    let summary: Vec<String> = names.iter().zip(violations).map(|(n, v)| format!("{n} {v}/{points}")).collect();
    check(
        violations.iter().all(|&v| v == 0),
        format!("800 mK above 10 mK at: {}", summary.join(", ")),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("pump power for C = 1", table_one_power),
        ("cooperativity at 19.2 uW", power_anchor),
        ("squeezing angle", squeezing_angle),
        ("ebit-rate maximum", ebit_maximum),
        ("benchmark-device fidelities", benchmark_fidelities),
        ("conversion limits", conversion_limits),
        ("oracle equivalence", oracle_equivalence),
        ("uncertainty and physicality", physicality),
        ("cat formulas vs phase-space grid", cat_grid_oracle),
        ("temperature ordering", temperature_ordering),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
