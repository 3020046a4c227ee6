//! The SU(2) factor: unit-determinant unitary 2×2 matrices.
//!
//! Matrices in SU(2) have the quaternion shape
//!
//! ```text
//! A = [ w − iz   −y − ix ]
//!     [ y − ix    w + iz ]      w² + x² + y² + z² = 1,
//! ```
//!
//! which is closed under multiplication and exact to extract, so
//! renormalization after numerical drift is a quaternion normalization —
//! the polar projection in this chart.
//!
//! The Lie algebra 𝔰𝔲(2) is identified with ℝ³ through the basis
//! `e_j = −(i/2)σ_j` (half Pauli matrices); under this identification the
//! bracket is the vector cross product.

use nalgebra::{Complex, Matrix2, Matrix3};

use crate::{Result, Sl2cError, Vec3};

/// Acceptance tolerance for SU(2) membership checks.
pub const SU2_TOL: f64 = 1e-12;

/// An element of SU(2), stored as its 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2 {
    m: Matrix2<Complex<f64>>,
}

impl Su2 {
    /// The identity element.
    pub fn identity() -> Self {
        Self { m: Matrix2::identity() }
    }

    /// Wraps a matrix after validating unitarity and unit determinant
    /// (both to [`SU2_TOL`]).
    pub fn from_matrix(m: Matrix2<Complex<f64>>) -> Result<Self> {
        let candidate = Self { m };
        candidate.check()?;
        Ok(candidate)
    }

    /// Wraps a matrix that is in SU(2) by construction.
    pub(crate) fn from_matrix_unchecked(m: Matrix2<Complex<f64>>) -> Self {
        Self { m }
    }

    /// Builds the element with quaternion components `(w, x, y, z)`,
    /// normalizing the quaternion. The input must be finite and non-zero.
    pub fn from_quaternion(w: f64, x: f64, y: f64, z: f64) -> Self {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        debug_assert!(n.is_finite() && n > 0.0, "quaternion must be finite and non-zero");
        let (w, x, y, z) = (w / n, x / n, y / n, z / n);
        Self {
            m: Matrix2::new(
                Complex::new(w, -z),
                Complex::new(-y, -x),
                Complex::new(y, -x),
                Complex::new(w, z),
            ),
        }
    }

    /// Quaternion components `(w, x, y, z)` read off the matrix entries.
    pub fn quaternion(&self) -> [f64; 4] {
        [self.m[(0, 0)].re, -self.m[(0, 1)].im, -self.m[(0, 1)].re, -self.m[(0, 0)].im]
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &Matrix2<Complex<f64>> {
        &self.m
    }

    /// Group inverse (the conjugate transpose, since the element is
    /// unitary).
    pub fn inverse(&self) -> Self {
        Self { m: self.m.adjoint() }
    }

    /// `‖A†A − I‖` (max-abs over entries).
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.m.adjoint() * self.m - Matrix2::<Complex<f64>>::identity();
        d.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `|det A − 1|`.
    pub fn det_residual(&self) -> f64 {
        (self.m.determinant() - Complex::new(1.0, 0.0)).norm()
    }

    /// Validates the SU(2) invariants to [`SU2_TOL`].
    // Negated comparisons so a NaN residual takes the error branch.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn check(&self) -> Result<()> {
        let u = self.unitarity_residual();
        if !(u < SU2_TOL) {
            return Err(Sl2cError::NotUnitary { residual: u });
        }
        let d = self.det_residual();
        if !(d < SU2_TOL) {
            return Err(Sl2cError::NotUnimodular { residual: d });
        }
        Ok(())
    }

    /// Projects back onto SU(2) by normalizing the quaternion — the exact
    /// polar projection for quaternion-shaped matrices, used after
    /// integrating on the group.
    pub fn renormalize(&self) -> Self {
        let [w, x, y, z] = self.quaternion();
        Self::from_quaternion(w, x, y, z)
    }

    /// The rotation matrix through which this element acts on ℝ³ by
    /// conjugation: `R(A)·X = hat(A · mat(X) · A⁻¹)`.
    pub fn rotation_matrix(&self) -> Matrix3<f64> {
        let [w, x, y, z] = self.quaternion();
        Matrix3::new(
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        )
    }
}

impl std::ops::Mul for Su2 {
    type Output = Su2;

    fn mul(self, rhs: Su2) -> Su2 {
        Su2 { m: self.m * rhs.m }
    }
}

impl std::ops::Mul for &Su2 {
    type Output = Su2;

    fn mul(self, rhs: &Su2) -> Su2 {
        Su2 { m: self.m * rhs.m }
    }
}

/// ℝ³ → 𝔰𝔲(2): `X ↦ X₁e₁ + X₂e₂ + X₃e₃` with `e_j = −(i/2)σ_j`.
pub fn mat_su(x: &Vec3) -> Matrix2<Complex<f64>> {
    Matrix2::new(
        Complex::new(0.0, -x.z / 2.0),
        Complex::new(-x.y / 2.0, -x.x / 2.0),
        Complex::new(x.y / 2.0, -x.x / 2.0),
        Complex::new(0.0, x.z / 2.0),
    )
}

/// 𝔰𝔲(2) → ℝ³, inverse of [`mat_su`] (assumes the input is in 𝔰𝔲(2)).
pub fn hat_su(m: &Matrix2<Complex<f64>>) -> Vec3 {
    Vec3::new(-2.0 * m[(0, 1)].im, -2.0 * m[(0, 1)].re, -2.0 * m[(0, 0)].im)
}

/// Exponential ℝ³ ≅ 𝔰𝔲(2) → SU(2) in closed form:
/// `exp(mat_su(X)) = cos(θ/2)·I + (sin(θ/2)/θ)·mat_su(2X/…)` — i.e. the
/// unit quaternion `(cos(θ/2), sin(θ/2)·X/θ)` with `θ = ‖X‖`.
pub fn su2_exp(x: &Vec3) -> Su2 {
    let theta = x.norm();
    let w = (theta / 2.0).cos();
    // sin(θ/2)/θ, with the Taylor expansion when θ² underflows the sine.
    let s = if theta > 1e-8 { (theta / 2.0).sin() / theta } else { 0.5 - theta * theta / 48.0 };
    Su2::from_quaternion(w, s * x.x, s * x.y, s * x.z)
}
