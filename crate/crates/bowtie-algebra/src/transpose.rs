//! Numerical transposition of linear maps.
//!
//! Every dual ("starred") action in this crate is obtained by materializing
//! the primitive map's matrix on the standard basis and applying its
//! transpose. With the dot-product pairing this realizes the defining
//! identity `⟨f* w, v⟩ = ⟨w, f v⟩` exactly (up to one rounding per entry),
//! and guarantees that all sign conventions descend from the primitive maps
//! alone.

use nalgebra::{DMatrix, DVector};

use crate::error::AlgebraError;
use crate::Result;

/// Materializes the matrix of the linear map `f : ℝ^dim_in → ℝ^dim_out`
/// by evaluating it column-by-column on the standard basis.
pub fn assemble_matrix<F>(f: F, dim_in: usize, dim_out: usize) -> Result<DMatrix<f64>>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    let mut m = DMatrix::zeros(dim_out, dim_in);
    let mut basis = DVector::zeros(dim_in);
    for j in 0..dim_in {
        basis[j] = 1.0;
        let col = f(&basis);
        if col.len() != dim_out {
            return Err(AlgebraError::DimensionMismatch {
                context: "assemble_matrix: map output",
                expected: dim_out,
                got: col.len(),
            });
        }
        m.column_mut(j).copy_from(&col);
        basis[j] = 0.0;
    }
    Ok(m)
}

/// Applies the transpose of `f : ℝ^dim_in → ℝ^dim_out` to a dual vector
/// `w ∈ (ℝ^dim_out)*`, returning `f* w ∈ (ℝ^dim_in)*` with
/// `⟨f* w, v⟩ = ⟨w, f v⟩` for every `v`.
///
/// The accumulation order is fixed (ascending row index per output
/// component) so that results are bit-reproducible across platforms and can
/// be mirrored exactly by closed-form implementations.
pub fn transpose_map<F>(f: F, dim_in: usize, dim_out: usize, w: &DVector<f64>) -> Result<DVector<f64>>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    if w.len() != dim_out {
        return Err(AlgebraError::DimensionMismatch {
            context: "transpose_map: dual vector",
            expected: dim_out,
            got: w.len(),
        });
    }
    let m = assemble_matrix(f, dim_in, dim_out)?;
    let mut out = DVector::zeros(dim_in);
    for j in 0..dim_in {
        let mut acc = 0.0;
        for i in 0..dim_out {
            acc += m[(i, j)] * w[i];
        }
        out[j] = acc;
    }
    Ok(out)
}
