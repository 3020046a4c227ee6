//! Validated 2×2 complex matrices: the ambient objects every reference
//! computation works with.

use nalgebra::{Complex, Matrix2};

use crate::{OracleError, Result};

/// Acceptance tolerance for the determinant and trace invariants.
pub const MATRIX_TOL: f64 = 1e-12;

/// A 2×2 complex matrix tagged with the invariant it was validated
/// against: determinant 1 for group elements, zero trace for algebra
/// elements.
///
/// The wrapper deliberately does not remember *which* invariant was
/// checked — each constructor enforces the one its name promises, and the
/// operations downstream state which kind they expect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2cMatrix {
    m: Matrix2<Complex<f64>>,
}

impl Sl2cMatrix {
    /// Wraps a group element, requiring `|det M − 1| < 1e−12`.
    pub fn group_element(m: Matrix2<Complex<f64>>) -> Result<Self> {
        let residual = (det(&m) - Complex::new(1.0, 0.0)).norm();
        if residual < MATRIX_TOL {
            Ok(Self { m })
        } else {
            Err(OracleError::NotUnimodular { residual })
        }
    }

    /// Wraps an algebra element, requiring `|tr M| < 1e−12`.
    pub fn algebra_element(m: Matrix2<Complex<f64>>) -> Result<Self> {
        let residual = (m[(0, 0)] + m[(1, 1)]).norm();
        if residual < MATRIX_TOL {
            Ok(Self { m })
        } else {
            Err(OracleError::NotTraceless { residual })
        }
    }

    /// The wrapped matrix.
    pub fn matrix(&self) -> &Matrix2<Complex<f64>> {
        &self.m
    }
}

/// Determinant of a 2×2 complex matrix.
pub(crate) fn det(m: &Matrix2<Complex<f64>>) -> Complex<f64> {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

/// Max-abs entry distance between two 2×2 complex matrices.
pub(crate) fn max_entry_distance(a: &Matrix2<Complex<f64>>, b: &Matrix2<Complex<f64>>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
