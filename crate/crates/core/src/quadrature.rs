//! Gauss-Legendre rules and adaptive Gauss-Kronrod integration.

use crate::error::{Error, Result};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "rule needs at least one node");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre(n, z);
        if d != 0.0 {
            dp = d;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn legendre(n: usize, z: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, z);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Fixed-order Gauss-Legendre integral of `f` over [a, b].
pub fn integrate_gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (x, w) = gauss_legendre(n);
    let (h, c) = ((b - a) / 2.0, (b + a) / 2.0);
    h * x.iter().zip(&w).map(|(xi, wi)| wi * f(c + h * xi)).sum::<f64>()
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let (h, c) = ((b - a) / 2.0, (b + a) / 2.0);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let s = f(c - h * XGK[j]) + f(c + h * XGK[j]);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Adaptive 15-point Gauss-Kronrod integration to relative tolerance `rel_tol`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    let mut stack = vec![(a, b, gk15(&f, a, b))];
    let mut total = stack[0].2 .0;
    let mut done = 0.0;
    let mut evals = 0usize;
    while let Some((lo, hi, (v, e))) = stack.pop() {
        if e <= rel_tol * total.abs().max(f64::MIN_POSITIVE) * (hi - lo) / (b - a) || hi - lo < 1e-12 * (b - a) {
            done += v;
            continue;
        }
        evals += 1;
        if evals > 100_000 {
            return Err(Error::Numeric("adaptive quadrature did not converge".into()));
        }
        let mid = 0.5 * (lo + hi);
        let l = gk15(&f, lo, mid);
        let r = gk15(&f, mid, hi);
        total += l.0 + r.0 - v;
        stack.push((lo, mid, l));
        stack.push((mid, hi, r));
    }
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_rule_is_exact_for_polynomials() {
        for n in [1, 2, 5, 12, 20] {
            let (x, w) = gauss_legendre(n);
            let p = 2 * n as i32 - 2;
            let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(p)).sum();
            assert_relative_eq!(s, 2.0 / (p as f64 + 1.0), max_relative = 1e-13);
        }
        for n in [64, 256] {
            let (_, w) = gauss_legendre(n);
            assert_relative_eq!(w.iter().sum::<f64>(), 2.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn adaptive_lorentzian() {
        let v = integrate_adaptive(|x| 1.0 / (1.0 + x * x), -1e3, 1e3, 1e-12).unwrap();
        assert_relative_eq!(v, 2.0 * 1e3f64.atan(), max_relative = 1e-11);
        let g = integrate_gl(|x| x.exp(), 0.0, 1.0, 20);
        assert_relative_eq!(g, std::f64::consts::E - 1.0, max_relative = 1e-14);
    }
}
