//! Matrix-commutator reference for the coupled bracket, and the structure
//! constants it induces on the six-dimensional real algebra.

use bowtie_sl2c::{embed_algebra, Vec3};

use crate::decompose::decompose_algebra;
use crate::matrix::Sl2cMatrix;
use crate::{OracleError, Result};

/// Residual bound for the algebraic identities of the structure constants.
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Brackets two algebra elements the pedestrian way: embed, commutate,
/// decompose. Every coupling term of the closed-form bracket is implied by
/// this one matrix commutator, which is what makes it a reference.
pub fn commutator_bracket(z1: &(Vec3, Vec3), z2: &(Vec3, Vec3)) -> Result<(Vec3, Vec3)> {
    let m1 = embed_algebra(&z1.0, &z1.1);
    let m2 = embed_algebra(&z2.0, &z2.1);
    let commutator = Sl2cMatrix::algebra_element(m1 * m2 - m2 * m1)?;
    decompose_algebra(&commutator)
}

/// Structure constants `c[i][j][k]` of the six-dimensional real algebra in
/// the stacked basis (first factor 0–2, second factor 3–5):
/// `[bᵢ, bⱼ] = Σₖ c[i][j][k] bₖ`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    c: [[[f64; 6]; 6]; 6],
}

impl StructureConstants {
    /// Builds the constants from matrix commutators of the embedded basis
    /// and validates antisymmetry and the Jacobi identity to
    /// [`STRUCTURE_TOL`].
    pub fn from_commutators() -> Result<Self> {
        let basis: Vec<(Vec3, Vec3)> = (0..6)
            .map(|i| {
                let mut v = [0.0; 6];
                v[i] = 1.0;
                (Vec3::new(v[0], v[1], v[2]), Vec3::new(v[3], v[4], v[5]))
            })
            .collect();
        let mut c = [[[0.0; 6]; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                let (x, y) = commutator_bracket(&basis[i], &basis[j])?;
                c[i][j] = [x.x, x.y, x.z, y.x, y.y, y.z];
            }
        }
        let sc = Self { c };
        sc.validate()?;
        Ok(sc)
    }

    fn validate(&self) -> Result<()> {
        let mut antisymmetry: f64 = 0.0;
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    antisymmetry = antisymmetry.max((self.c[i][j][k] + self.c[j][i][k]).abs());
                }
            }
        }
        if antisymmetry >= STRUCTURE_TOL {
            return Err(OracleError::InvalidStructureConstants {
                reason: format!("antisymmetry residual {antisymmetry:.3e}"),
            });
        }

        // Jacobi: Σ over cyclic (i, j, l) of [[bᵢ, bⱼ], bₗ] = 0, expanded
        // through the constants themselves.
        let mut jacobi: f64 = 0.0;
        for i in 0..6 {
            for j in 0..6 {
                for l in 0..6 {
                    for m in 0..6 {
                        let mut acc = 0.0;
                        for k in 0..6 {
                            acc += self.c[i][j][k] * self.c[k][l][m]
                                + self.c[j][l][k] * self.c[k][i][m]
                                + self.c[l][i][k] * self.c[k][j][m];
                        }
                        jacobi = jacobi.max(acc.abs());
                    }
                }
            }
        }
        if jacobi >= STRUCTURE_TOL {
            return Err(OracleError::InvalidStructureConstants {
                reason: format!("Jacobi residual {jacobi:.3e}"),
            });
        }
        Ok(())
    }

    /// One constant.
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[i][j][k]
    }

    /// Bracket of two coordinate vectors through the constants:
    /// `[u, v]ₖ = Σᵢⱼ uᵢ vⱼ c[i][j][k]`.
    pub fn bracket(&self, u: &[f64; 6], v: &[f64; 6]) -> [f64; 6] {
        let mut out = [0.0; 6];
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot += ui * vj * self.c[i][j][k];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_first_factor_brackets_are_cross_products() {
        let x1 = Vec3::new(0.3, -0.7, 0.2);
        let x2 = Vec3::new(-0.5, 0.1, 0.9);
        let (x, y) = commutator_bracket(&(x1, Vec3::zeros()), &(x2, Vec3::zeros())).unwrap();
        assert!((x - x1.cross(&x2)).amax() < 1e-15);
        assert!(y.amax() < 1e-15);
    }

    #[test]
    fn pure_second_factor_brackets_follow_the_triangular_rule() {
        // [Y₁, Y₂] = 𝐤 × (Y₁ × Y₂) for the triangular factor.
        let y1 = Vec3::new(0.4, 0.8, -0.3);
        let y2 = Vec3::new(-0.2, 0.6, 0.5);
        let (x, y) = commutator_bracket(&(Vec3::zeros(), y1), &(Vec3::zeros(), y2)).unwrap();
        let k = Vec3::new(0.0, 0.0, 1.0);
        assert!(x.amax() < 1e-15);
        assert!((y - k.cross(&y1.cross(&y2))).amax() < 1e-15);
    }

    #[test]
    fn mixed_pair_lands_in_both_factors() {
        let e1 = Vec3::new(1.0, 0.0, 0.0);
        let (x, y) = commutator_bracket(&(Vec3::zeros(), e1), &(e1, Vec3::zeros())).unwrap();
        assert!((x - Vec3::new(0.0, 0.0, -1.0)).amax() < 1e-15);
        assert!(y.amax() < 1e-15);
    }

    #[test]
    fn structure_constants_pass_their_own_validation() {
        let sc = StructureConstants::from_commutators().unwrap();
        // The first-factor block must be the Levi-Civita symbol:
        // [b₀, b₁] = b₂.
        assert!((sc.get(0, 1, 2) - 1.0).abs() < 1e-15);
        assert!((sc.get(1, 0, 2) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn constants_reproduce_the_commutator_bracket() {
        let u = [0.3, -0.2, 0.5, 0.1, -0.4, 0.2];
        let v = [-0.6, 0.7, 0.1, 0.3, 0.2, -0.5];
        let sc = StructureConstants::from_commutators().unwrap();
        let via_constants = sc.bracket(&u, &v);
        let (x, y) = commutator_bracket(
            &(Vec3::new(u[0], u[1], u[2]), Vec3::new(u[3], u[4], u[5])),
            &(Vec3::new(v[0], v[1], v[2]), Vec3::new(v[3], v[4], v[5])),
        )
        .unwrap();
        let direct = [x.x, x.y, x.z, y.x, y.y, y.z];
        for k in 0..6 {
            assert!((via_constants[k] - direct[k]).abs() < 1e-13);
        }
    }
}
