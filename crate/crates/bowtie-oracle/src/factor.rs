//! Gram–Schmidt factorization of an SL(2,ℂ) matrix into a unitary and a
//! triangular factor.
//!
//! This is the brute-force counterpart of the closed-form group actions:
//! those compute the two factors of `B·A` by explicit formulas, while this
//! routine factors an *arbitrary* determinant-1 matrix from first
//! principles. Where both apply they must agree, which is what makes this
//! file an oracle for the other one.

use bowtie_sl2c::{KPoint, Su2};
use nalgebra::{Complex, Matrix2};

use crate::matrix::{max_entry_distance, Sl2cMatrix};
use crate::{OracleError, Result};

/// Max-abs reassembly residual accepted from a factorization.
pub const FACTOR_TOL: f64 = 1e-12;

/// Factors `M = A·B` with `A` unitary and `B` lower triangular with
/// positive real diagonal (the shape of the triangular subgroup).
///
/// Construction: the second column of `B` is `(0, 1/s)ᵀ`, so the second
/// column of `M` is `1/s` times the second column of `A`; normalizing it
/// fixes that column, and the unitary-with-determinant-1 structure
/// determines the first column of `A` from the second with no further
/// arithmetic. `B = A†M` then comes out lower triangular automatically,
/// and the triangular chart constructor validates its shape.
///
/// The factorization exists and is unique for every determinant-1 input,
/// so any error here means the *computation* failed (e.g. a residual above
/// [`FACTOR_TOL`]), not that the input was outside some domain.
pub fn iwasawa_factor(m: &Sl2cMatrix) -> Result<(Su2, KPoint)> {
    let mat = m.matrix();
    let norm = mat.column(1).norm();
    let p = mat[(0, 1)] / Complex::from(norm);
    let q = mat[(1, 1)] / Complex::from(norm);
    // A = [[q̄, p], [−p̄, q]] is unitary with determinant |p|² + |q|² = 1.
    let a_mat = Matrix2::new(q.conj(), p, -p.conj(), q);
    let a = Su2::from_matrix(a_mat)?;

    let b_mat = a.inverse().matrix() * mat;
    let b = KPoint::from_rep_2x2(&b_mat)?;

    let residual = max_entry_distance(mat, &(a.matrix() * b.rep_2x2()));
    if residual < FACTOR_TOL {
        Ok((a, b))
    } else {
        Err(OracleError::ResidualTooLarge { what: "factorization reassembly", residual })
    }
}
