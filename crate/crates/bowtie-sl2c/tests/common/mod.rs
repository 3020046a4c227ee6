//! Shared sampling and metric helpers for the integration suites.
#![allow(dead_code)]

use bowtie_sl2c::{KPoint, Su2, Vec3};
use nalgebra::{Complex, DVector, Matrix2};
use rand::{Rng, RngExt};

/// Fixed-size vector into the dynamic layout used by the generic layers.
pub fn dvec(v: &Vec3) -> DVector<f64> {
    DVector::from_column_slice(v.as_slice())
}

/// Dynamic 3-vector back into the fixed-size type.
pub fn vec3(v: &DVector<f64>) -> Vec3 {
    Vec3::new(v[0], v[1], v[2])
}

/// Uniform scalar in [−1, 1).
pub fn coeff(rng: &mut impl Rng) -> f64 {
    rng.random_range(-1.0..1.0)
}

/// Vector with components uniform in [−1, 1).
pub fn rand_vec3(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(coeff(rng), coeff(rng), coeff(rng))
}

/// Random K point: `a, b` uniform, `c = exp(u) − 1` for uniform `u`, so
/// that `c > −1` by construction and the scale factor 1+c covers
/// [e⁻¹, e).
pub fn rand_kpoint(rng: &mut impl Rng) -> KPoint {
    KPoint::new(coeff(rng), coeff(rng), coeff(rng).exp_m1()).expect("c > -1 by construction")
}

/// Haar-ish random SU(2) element: a uniform point of the 4-ball (by
/// rejection), normalized to the unit quaternion sphere.
pub fn rand_su2(rng: &mut impl Rng) -> Su2 {
    loop {
        let (w, x, y, z) = (coeff(rng), coeff(rng), coeff(rng), coeff(rng));
        let n2 = w * w + x * x + y * y + z * z;
        if n2 > 1e-4 && n2 <= 1.0 {
            return Su2::from_quaternion(w, x, y, z);
        }
    }
}

/// Max-abs metric on 2×2 complex matrices (the embedding metric used by
/// all SL(2,ℂ)-level comparisons).
pub fn cdiff(a: &Matrix2<Complex<f64>>, b: &Matrix2<Complex<f64>>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
