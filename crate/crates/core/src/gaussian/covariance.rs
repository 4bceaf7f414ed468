use nalgebra::{Matrix2, Matrix4};

use crate::error::{require_stable, Error, Result};

/// Covariance of (q_o, p_o, q_Ω, p_Ω) with vacuum variance 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix4(Matrix4<f64>);

impl CovarianceMatrix4 {
    pub fn from_rows(rows: [[f64; 4]; 4]) -> Self {
        CovarianceMatrix4(Matrix4::from_fn(|i, j| rows[i][j]))
    }

    pub fn from_matrix(m: Matrix4<f64>) -> Self {
        CovarianceMatrix4(m)
    }

    pub fn vacuum() -> Self {
        CovarianceMatrix4(Matrix4::identity() * 0.5)
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).abs().max()
    }

    pub fn block(&self, r: usize, c: usize) -> Matrix2<f64> {
        self.0.fixed_view::<2, 2>(2 * r, 2 * c).into_owned()
    }

    pub fn det(&self) -> f64 {
        match self.two_mode_form() {
            Some((a, b, re, im)) => (a * b - re * re - im * im).powi(2),
            None => self.0.determinant(),
        }
    }

    /// (a, b, re, im) when V = [[a I, C], [Cᵀ, b I]] with C = [[re, im], [im, −re]].
    fn two_mode_form(&self) -> Option<(f64, f64, f64, f64)> {
        let m = &self.0;
        let tol = 1e-13 * m.abs().max();
        let same = |x: f64, y: f64| (x - y).abs() <= tol;
        let (a, b, re, im) = (m[(0, 0)], m[(2, 2)], m[(0, 2)], m[(0, 3)]);
        let ok = same(m[(1, 1)], a)
            && same(m[(3, 3)], b)
            && same(m[(0, 1)], 0.0)
            && same(m[(2, 3)], 0.0)
            && same(m[(1, 2)], im)
            && same(m[(1, 3)], -re)
            && self.is_symmetric(tol);
        ok.then_some((a, b, re, im))
    }

    /// Sub-matrix on the quadrature indices `i`, `j`.
    pub fn marginal(&self, i: usize, j: usize) -> Matrix2<f64> {
        Matrix2::new(self.0[(i, i)], self.0[(i, j)], self.0[(j, i)], self.0[(j, j)])
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.0 - self.0.transpose()).abs().max() <= tol
    }

    /// Symplectic eigenvalues (ν₋, ν₊) of V itself.
    pub fn symplectic_eigenvalues(&self) -> Result<(f64, f64)> {
        let (a, b, c) = (
            self.block(0, 0).determinant(),
            self.block(1, 1).determinant(),
            self.block(0, 1).determinant(),
        );
        symplectic_pair(a + b + 2.0 * c, self.det())
    }

    /// Physical iff both symplectic eigenvalues are at least 1/2 (within `tol`).
    pub fn is_physical(&self, tol: f64) -> bool {
        self.is_symmetric(1e-12) && self.symplectic_eigenvalues().map(|(lo, _)| lo >= 0.5 - tol).unwrap_or(false)
    }

    /// Partial transpose on the microwave mode (p_Ω → −p_Ω).
    pub fn partial_transpose(&self) -> Self {
        let l = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0));
        CovarianceMatrix4(l * self.0 * l)
    }

    pub fn scale_add(&self, w: f64, other: &Self) -> Self {
        CovarianceMatrix4(self.0 + other.0 * w)
    }

    pub fn scaled(&self, w: f64) -> Self {
        CovarianceMatrix4(self.0 * w)
    }

    pub fn zero() -> Self {
        CovarianceMatrix4(Matrix4::zeros())
    }
}

pub(crate) fn symplectic_pair(delta: f64, det: f64) -> Result<(f64, f64)> {
    let mut disc = delta * delta - 4.0 * det;
    if disc < 0.0 {
        if disc < -1e-10 * delta.abs().max(1.0).powi(2) {
            return Err(Error::Numeric(format!("negative symplectic discriminant {disc:e}")));
        }
        disc = 0.0;
    }
    let s = disc.sqrt();
    let hi2 = (delta + s) / 2.0;
    let lo = if hi2 > 0.0 { (det.max(0.0) / hi2).sqrt() } else { 0.0 };
    let hi = hi2.sqrt();
    Ok((lo, hi))
}

/// Closed-form steady-state CM of the output fields at zero frequency.
pub fn steady_state_cm(c: f64, eta_o: f64, eta_mw: f64, n_mode: f64) -> Result<CovarianceMatrix4> {
    require_stable(c)?;
    if c < 0.0 {
        return Err(Error::invalid("cooperativity", "must be >= 0"));
    }
    for (name, eta) in [("eta_optical", eta_o), ("eta_microwave", eta_mw)] {
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::invalid(name, "must lie in [0, 1]"));
        }
    }
    if !(n_mode >= 0.0 && n_mode.is_finite()) {
        return Err(Error::invalid("n_mode", "must be finite and >= 0"));
    }
    let e = (1.0 - c).powi(2);
    let a = 0.5 + 4.0 * c * (1.0 + n_mode) * eta_o / e;
    let b = 0.5 + 4.0 * (c + n_mode) * eta_mw / e;
    let x = (4.0 * eta_o * eta_mw * c).sqrt() * (1.0 + c + 2.0 * n_mode) / e;
    Ok(CovarianceMatrix4::from_rows([
        [a, 0.0, x, 0.0],
        [0.0, a, 0.0, -x],
        [x, 0.0, b, 0.0],
        [0.0, -x, 0.0, b],
    ]))
}

/// Symplectic spectrum from the symmetric matrix V^{1/2} Ωᵀ V Ω V^{1/2}, whose eigenvalues are ν_k².
#[cfg(test)]
pub(crate) fn symplectic_spectrum_oracle(v: &Matrix4<f64>) -> Vec<f64> {
    let eig = nalgebra::SymmetricEigen::new(*v);
    let root = eig.eigenvectors * Matrix4::from_diagonal(&eig.eigenvalues.map(f64::sqrt)) * eig.eigenvectors.transpose();
    let mut om = Matrix4::zeros();
    om[(0, 1)] = 1.0;
    om[(1, 0)] = -1.0;
    om[(2, 3)] = 1.0;
    om[(3, 2)] = -1.0;
    let m = root * om.transpose() * v * om * root;
    let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new((m + m.transpose()) * 0.5)
        .eigenvalues
        .iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}
