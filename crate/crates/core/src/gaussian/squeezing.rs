use serde::Serialize;

use super::CovarianceMatrix4;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezingReport {
    /// Rotation of the squeezed axis in the (q_o, q_Ω) plane, degrees.
    pub angle_theta: f64,
    pub var_minus: f64,
    pub var_plus: f64,
    pub purity: f64,
    /// Effective squeezing −½ ln(2 var₋).
    pub r_eo: f64,
    /// Set when V₁₁ = V₃₃ and V₁₃ = 0, where the angle is undefined (reported as 45°).
    pub degenerate: bool,
}

/// Joint squeezing of the (q_o, q_Ω) quadrature pair.
///
/// var∓ are the principal variances of the (q_o, q_Ω) marginal; the (p_o, p_Ω)
/// marginal carries the same spectrum for CMs with V₁₁ = V₂₂, V₃₃ = V₄₄, V₂₄ = −V₁₃.
pub fn squeezing_analysis(v: &CovarianceMatrix4) -> Result<SqueezingReport> {
    let (a, b, c) = (v.get(0, 0), v.get(2, 2), v.get(0, 2));
    let scale = a.abs().max(b.abs()).max(1.0);
    let tol = 1e-8 * scale;
    if (v.get(1, 1) - a).abs() > tol || (v.get(3, 3) - b).abs() > tol || (v.get(1, 3) + c).abs() > tol {
        return Err(Error::Unsupported(
            "squeezing analysis expects V11 = V22, V33 = V44 and V24 = -V13".into(),
        ));
    }
    let half_diff = 0.5 * (a - b);
    let root = (half_diff * half_diff + c * c).sqrt();
    let mean = 0.5 * (a + b);
    let var_minus = mean - root;
    let var_plus = mean + root;
    let degenerate = c.abs() <= 1e-15 * scale && (a - b).abs() <= 1e-15 * scale;
    let angle_theta = if degenerate {
        45.0
    } else {
        0.5 * (2.0 * c.abs()).atan2((b - a).abs()).to_degrees()
    };
    Ok(SqueezingReport {
        angle_theta,
        var_minus,
        var_plus,
        purity: 1.0 / (2.0 * (var_minus * var_plus).sqrt()),
        r_eo: -0.5 * (2.0 * var_minus).ln(),
        degenerate,
    })
}

/// Squeezing parameter ln((1+√C)/(1−√C)) of the lossless device.
pub fn electro_optic_squeezing(c: f64) -> f64 {
    let s = c.sqrt();
    ((1.0 + s) / (1.0 - s)).ln()
}

/// Closed-form (var₋, var₊) at zero thermal occupation.
///
/// The larger of the two efficiencies pairs with cos²Θ in var₋ and with sin²Θ in var₊.
pub fn quadrature_variances_closed_form(c: f64, eta_o: f64, eta_mw: f64) -> (f64, f64) {
    let e = (1.0 - c).powi(2);
    let u = 4.0 * (eta_o * eta_mw * c).sqrt() * (1.0 + c);
    let a = 0.5 + 4.0 * c * eta_o / e;
    let b = 0.5 + 4.0 * c * eta_mw / e;
    let x = (4.0 * eta_o * eta_mw * c).sqrt() * (1.0 + c) / e;
    let th = 0.5 * (2.0 * x).atan2((b - a).abs());
    let (s2, c2, s2t) = (th.sin().powi(2), th.cos().powi(2), (2.0 * th).sin());
    let (hi, lo) = (eta_o.max(eta_mw), eta_o.min(eta_mw));
    let num = ((8.0 * c * eta_o + e) * (8.0 * c * eta_mw + e) - u * u) / e;
    let minus = num / (2.0 * (e + 8.0 * c * (lo * s2 + hi * c2) + u * s2t));
    let plus = num / (2.0 * (e + 8.0 * c * (hi * s2 + lo * c2) - u * s2t));
    (minus, plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::steady_state_cm;
    use approx::assert_relative_eq;
    use nalgebra::SymmetricEigen;

    #[test]
    fn angle_for_reference_device() {
        let s = squeezing_analysis(&steady_state_cm(0.3, 0.5, 0.8, 0.0).unwrap()).unwrap();
        assert!((s.angle_theta - 39.34).abs() <= 0.01, "{}", s.angle_theta);
        let sym = squeezing_analysis(&steady_state_cm(0.4, 0.6, 0.6, 0.0).unwrap()).unwrap();
        assert_relative_eq!(sym.angle_theta, 45.0, max_relative = 1e-12);
        let vac = squeezing_analysis(&CovarianceMatrix4::vacuum()).unwrap();
        assert!(vac.degenerate);
        assert_eq!(vac.angle_theta, 45.0);
    }

    #[test]
    fn lossless_limit() {
        let c: f64 = 0.3;
        let s = squeezing_analysis(&steady_state_cm(c, 1.0, 1.0, 0.0).unwrap()).unwrap();
        let q = (1.0 - c.sqrt()) / (1.0 + c.sqrt());
        assert_relative_eq!(s.var_minus, 0.5 * q * q, max_relative = 1e-12);
        assert!((s.var_minus - 0.04272).abs() < 5e-5);
        assert_relative_eq!(s.var_plus, 0.5 / (q * q), max_relative = 1e-12);
        assert!((s.var_minus * s.var_plus - 0.25).abs() < 1e-12);
        assert_relative_eq!(s.r_eo, electro_optic_squeezing(c), max_relative = 1e-12);
        assert_relative_eq!(s.purity, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn closed_form_pairing_matches_eigenvalues() {
        for &(c, eo, em) in &[
            (0.075, 0.31, 0.26),
            (0.3, 0.5, 0.8),
            (0.6, 0.1, 0.95),
            (0.2, 0.7, 0.7),
            (0.5, 0.9, 0.4),
        ] {
            let v = steady_state_cm(c, eo, em, 0.0).unwrap();
            let eig = SymmetricEigen::new(v.marginal(0, 2)).eigenvalues;
            let (lo, hi) = (eig.min(), eig.max());
            let (m, p) = quadrature_variances_closed_form(c, eo, em);
            let s = squeezing_analysis(&v).unwrap();
            assert_relative_eq!(s.var_minus, lo, max_relative = 1e-10);
            assert_relative_eq!(m, lo, max_relative = 1e-9);
            assert_relative_eq!(p, hi, max_relative = 1e-9);
        }
    }

    #[test]
    fn rejects_foreign_structure() {
        let mut rows = [[0.0; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 0.5 + i as f64;
        }
        assert!(squeezing_analysis(&CovarianceMatrix4::from_rows(rows)).is_err());
    }
}
