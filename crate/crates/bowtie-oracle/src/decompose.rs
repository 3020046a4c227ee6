//! Coordinate decomposition of traceless 2×2 complex matrices over the
//! six-dimensional real basis formed by the two factor algebras.
//!
//! The closed-form layer splits such matrices by reading entries directly;
//! this module instead solves the 6×6 real linear system "which basis
//! combination equals this matrix", factored once at startup. Agreement of
//! the two routes certifies the entry-reading formulas.

use std::sync::OnceLock;

use bowtie_sl2c::{embed_algebra, mat_k, mat_su, Vec3};
use nalgebra::{Complex, Matrix2, Matrix6, Vector6};

use crate::matrix::{max_entry_distance, Sl2cMatrix};
use crate::{OracleError, Result};

/// Max-abs reassembly residual accepted from a decomposition.
pub const DECOMPOSE_TOL: f64 = 1e-13;

type Lu6 = nalgebra::LU<f64, nalgebra::Const<6>, nalgebra::Const<6>>;

/// A traceless matrix has independent entries `(m₀₀, m₀₁, m₁₀)`; this is
/// their real flattening, the coordinate system of the linear solve.
fn flatten(m: &Matrix2<Complex<f64>>) -> Vector6<f64> {
    Vector6::new(
        m[(0, 0)].re,
        m[(0, 0)].im,
        m[(0, 1)].re,
        m[(0, 1)].im,
        m[(1, 0)].re,
        m[(1, 0)].im,
    )
}

/// The factored basis matrix, built on first use. Columns 0–2 are the
/// embedded first-factor basis, columns 3–5 the second-factor basis.
fn basis_lu() -> &'static Lu6 {
    static LU: OnceLock<Lu6> = OnceLock::new();
    LU.get_or_init(|| {
        let mut m = Matrix6::zeros();
        for j in 0..3 {
            let mut e = Vec3::zeros();
            e[j] = 1.0;
            m.set_column(j, &flatten(&mat_su(&e)));
            m.set_column(j + 3, &flatten(&mat_k(&e)));
        }
        m.lu()
    })
}

/// Solves for the unique `(X, Y)` with `embed_algebra(X, Y)` equal to the
/// given traceless matrix, and verifies the reassembly to
/// [`DECOMPOSE_TOL`] (relative to the input scale).
pub fn decompose_algebra(m: &Sl2cMatrix) -> Result<(Vec3, Vec3)> {
    let mat = m.matrix();
    let coords = basis_lu()
        .solve(&flatten(mat))
        .expect("the direct-sum basis matrix is invertible");
    let x = Vec3::new(coords[0], coords[1], coords[2]);
    let y = Vec3::new(coords[3], coords[4], coords[5]);

    let scale = mat.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residual = max_entry_distance(mat, &embed_algebra(&x, &y));
    if residual < DECOMPOSE_TOL * scale {
        Ok((x, y))
    } else {
        Err(OracleError::ResidualTooLarge { what: "decomposition reassembly", residual })
    }
}
