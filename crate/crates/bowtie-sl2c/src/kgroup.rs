//! The solvable factor K: triples `(a, b, c)` with `c > −1` under the
//! non-standard multiplication
//!
//! ```text
//! (a₁,b₁,c₁) ∗ (a₂,b₂,c₂) = (a₁,b₁,c₁)·(1 + c₂) + (a₂,b₂,c₂).
//! ```
//!
//! The triple chart is the canonical internal representation — the product,
//! inverse, and translation Jacobians are exact polynomial/rational
//! expressions there. Two matrix representations are derived on demand:
//!
//! * 2×2 complex, lower triangular with positive diagonal (the Iwasawa
//!   complement of SU(2) in SL(2,ℂ)):
//!   `(1/√(1+c)) · [[1+c, 0], [a+ib, 1]]`,
//! * 3×3 real: `[[1+c,0,0],[0,1+c,0],[−a,−b,1]]`, through which K acts on
//!   ℝ³ ≅ 𝔰𝔲(2).
//!
//! The Lie algebra 𝔎 is identified with ℝ³ (basis: the derivatives of the
//! three chart directions at the identity); its bracket is
//! `[Y₁,Y₂] = 𝐤×(Y₁×Y₂)` with `𝐤 = (0,0,1)`.

use nalgebra::{Complex, Matrix2, Matrix3};

use crate::{Result, Sl2cError, Vec3};

/// Acceptance tolerance for K-shape checks on matrices.
pub const K_SHAPE_TOL: f64 = 1e-12;

/// The distinguished vector `𝐤 = (0,0,1)` of the triple chart.
pub fn k_vector() -> Vec3 {
    Vec3::new(0.0, 0.0, 1.0)
}

/// An element of K in the triple chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KPoint {
    a: f64,
    b: f64,
    c: f64,
}

impl KPoint {
    /// Validates and builds a triple; `c > −1` and all components finite.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && c > -1.0) {
            return Err(Sl2cError::InvalidKParameter { c });
        }
        Ok(Self { a, b, c })
    }

    /// The identity element `(0,0,0)`.
    pub fn identity() -> Self {
        Self { a: 0.0, b: 0.0, c: 0.0 }
    }

    /// Group product and inverse preserve `c > −1`, so internal
    /// constructions skip revalidation.
    pub(crate) fn new_unchecked(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// First chart component.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Second chart component.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Scale component (`1 + c` is the multiplicative part).
    pub fn c(&self) -> f64 {
        self.c
    }

    /// The triple as a vector `𝐁 = (a, b, c)`.
    pub fn triple(&self) -> Vec3 {
        Vec3::new(self.a, self.b, self.c)
    }

    /// Builds from a triple vector.
    pub fn from_triple(v: &Vec3) -> Result<Self> {
        Self::new(v.x, v.y, v.z)
    }

    /// Group inverse: `B⁻¹ = −𝐁/(1+c)`.
    pub fn inverse(&self) -> Self {
        let d = 1.0 + self.c;
        Self::new_unchecked(-self.a / d, -self.b / d, -self.c / d)
    }

    /// The auxiliary vector
    /// `𝐁̃ = 𝐁/(1+c) − (‖𝐁‖²/(2(1+c)²))·𝐤` that appears in the closed-form
    /// action displays.
    pub fn tilde(&self) -> Vec3 {
        let d = 1.0 + self.c;
        let n2 = self.a * self.a + self.b * self.b + self.c * self.c;
        self.triple() / d - (n2 / (2.0 * d * d)) * k_vector()
    }

    /// 2×2 complex representation (Iwasawa complement shape).
    pub fn rep_2x2(&self) -> Matrix2<Complex<f64>> {
        let s = (1.0 + self.c).sqrt();
        Matrix2::new(
            Complex::new(s, 0.0),
            Complex::ZERO,
            Complex::new(self.a / s, self.b / s),
            Complex::new(1.0 / s, 0.0),
        )
    }

    /// 3×3 real representation, through which K acts on ℝ³ ≅ 𝔰𝔲(2).
    pub fn rep_3x3(&self) -> Matrix3<f64> {
        let d = 1.0 + self.c;
        Matrix3::new(d, 0.0, 0.0, 0.0, d, 0.0, -self.a, -self.b, 1.0)
    }

    /// Reads a triple back from the 2×2 representation, rejecting matrices
    /// outside the lower-triangular positive-real-diagonal shape.
    pub fn from_rep_2x2(m: &Matrix2<Complex<f64>>) -> Result<Self> {
        let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let tol = K_SHAPE_TOL * scale;
        if m[(0, 1)].norm() > tol {
            return Err(Sl2cError::NotKShaped {
                reason: format!("upper-right entry {:.3e} is not zero", m[(0, 1)].norm()),
            });
        }
        for (label, z) in [("top-left", m[(0, 0)]), ("bottom-right", m[(1, 1)])] {
            if z.im.abs() > tol || z.re <= 0.0 {
                return Err(Sl2cError::NotKShaped {
                    reason: format!("{label} diagonal entry {z} is not real positive"),
                });
            }
        }
        if (m[(0, 0)].re * m[(1, 1)].re - 1.0).abs() > tol {
            return Err(Sl2cError::NotKShaped {
                reason: "diagonal does not have unit product".to_string(),
            });
        }
        let s = m[(0, 0)].re;
        let ab = m[(1, 0)] / m[(1, 1)];
        Self::new(ab.re, ab.im, s * s - 1.0)
    }

    /// Reads a triple back from the 3×3 representation, rejecting matrices
    /// outside the representation's shape.
    pub fn from_rep_3x3(m: &Matrix3<f64>) -> Result<Self> {
        let scale = m.iter().fold(1.0_f64, |acc, x| acc.max(x.abs()));
        let tol = K_SHAPE_TOL * scale;
        let off = [m[(0, 1)], m[(0, 2)], m[(1, 0)], m[(1, 2)]];
        if off.iter().any(|x| x.abs() > tol) {
            return Err(Sl2cError::NotKShaped {
                reason: "off-diagonal block is not zero".to_string(),
            });
        }
        if (m[(0, 0)] - m[(1, 1)]).abs() > tol || (m[(2, 2)] - 1.0).abs() > tol || m[(0, 0)] <= 0.0
        {
            return Err(Sl2cError::NotKShaped {
                reason: "diagonal is not (1+c, 1+c, 1) with 1+c > 0".to_string(),
            });
        }
        Self::new(-m[(2, 0)], -m[(2, 1)], m[(0, 0)] - 1.0)
    }
}

impl std::ops::Mul for KPoint {
    type Output = KPoint;

    fn mul(self, rhs: KPoint) -> KPoint {
        let d = 1.0 + rhs.c;
        KPoint::new_unchecked(self.a * d + rhs.a, self.b * d + rhs.b, self.c * d + rhs.c)
    }
}

impl std::ops::Mul for &KPoint {
    type Output = KPoint;

    fn mul(self, rhs: &KPoint) -> KPoint {
        *self * *rhs
    }
}

/// Exponential ℝ³ ≅ 𝔎 → K in closed form: with `φ(c) = (eᶜ−1)/c`,
/// `exp(a,b,c) = (a·φ(c), b·φ(c), eᶜ−1)` (matrix exponential of the 3×3
/// algebra representation read back as a triple).
pub fn k_exp(y: &Vec3) -> KPoint {
    let c = y.z;
    // expm1(c)/c with the series continuation across c = 0.
    let phi = if c.abs() > 1e-8 { c.exp_m1() / c } else { 1.0 + c / 2.0 + c * c / 6.0 };
    KPoint::new_unchecked(y.x * phi, y.y * phi, c.exp_m1())
}

/// ℝ³ → 𝔎 in the 2×2 complex representation: `[[c/2, 0], [a+ib, −c/2]]`.
pub fn mat_k(y: &Vec3) -> Matrix2<Complex<f64>> {
    Matrix2::new(
        Complex::new(y.z / 2.0, 0.0),
        Complex::ZERO,
        Complex::new(y.x, y.y),
        Complex::new(-y.z / 2.0, 0.0),
    )
}

/// 𝔎 → ℝ³, inverse of [`mat_k`] (assumes the input is in 𝔎).
pub fn hat_k(m: &Matrix2<Complex<f64>>) -> Vec3 {
    Vec3::new(m[(1, 0)].re, m[(1, 0)].im, 2.0 * m[(0, 0)].re)
}

/// ℝ³ → 𝔎 in the 3×3 real representation (derivative of [`KPoint::rep_3x3`]
/// at the identity): `[[c,0,0],[0,c,0],[−a,−b,0]]`.
pub fn alg_k_3x3(y: &Vec3) -> Matrix3<f64> {
    Matrix3::new(y.z, 0.0, 0.0, 0.0, y.z, 0.0, -y.x, -y.y, 0.0)
}

/// The 𝔎 bracket in triple coordinates: `[Y₁,Y₂] = 𝐤×(Y₁×Y₂)`.
pub fn k_bracket(y1: &Vec3, y2: &Vec3) -> Vec3 {
    k_vector().cross(&y1.cross(y2))
}

/// Differential of left translation at the identity,
/// `T_e L_B(Y) = Y + 𝐁·(𝐤·Y)` (Jacobian `I + 𝐁𝐤ᵀ` of the chart product).
pub fn k_left_translation(b: &KPoint, y: &Vec3) -> Vec3 {
    y + b.triple() * y.z
}

/// Differential of right translation at the identity,
/// `T_e R_B(Y) = (1+c)·Y`.
pub fn k_right_translation(b: &KPoint, y: &Vec3) -> Vec3 {
    (1.0 + b.c()) * y
}
