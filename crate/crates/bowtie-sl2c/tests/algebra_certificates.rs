//! Algebra-level certificates for the concrete matched pair: the axiom
//! battery on the closed-form structure maps, the commutator cross-check in
//! the embedding, and duality of every closed-form dual map against the
//! generic transpose assembly. A deliberately mis-oriented action is also
//! fed through the axiom battery to show the battery would catch it.

mod common;

use bowtie_algebra::{
    check_axioms, matched_bracket, transpose_map, BilinearMap, MatchedElement,
    MatchedPairStructure,
};
use bowtie_sl2c::{
    ad_star_k, ad_star_su2, b_act_x, dual_cross_act_g, dual_cross_act_h, dual_group_act,
    dual_left_act, dual_right_act, embed_algebra, k_bracket, k_vector, matched_structure,
    mutual_inf_actions, split_algebra, Vec3,
};
use common::{dvec, rand_kpoint, rand_vec3, vec3};
use nalgebra::{dvector, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn structure_maps_satisfy_the_matched_pair_axioms() {
    let report = check_axioms(&matched_structure(), 500, 31).unwrap();
    for (name, residual) in report.iter() {
        assert!(residual < 1e-12, "{name}: residual {residual:.3e}");
    }
    assert!(report.max_residual() < 1e-12);
}

/// The same battery run on a structure whose `◁` has the opposite
/// orientation: the module and mixed-Jacobi identities must fail loudly.
/// (This is the error a transcription slip in the cross-product order
/// would produce, so the battery's sensitivity to it matters.)
#[test]
fn axiom_battery_detects_a_misoriented_action() {
    let cross = |a: &DVector<f64>, b: &DVector<f64>| dvec(&vec3(a).cross(&vec3(b)));
    let flipped = MatchedPairStructure::new(
        3,
        3,
        Box::new(cross) as BilinearMap,
        Box::new(|y1: &DVector<f64>, y2: &DVector<f64>| {
            dvec(&k_bracket(&vec3(y1), &vec3(y2)))
        }),
        Box::new(|eta: &DVector<f64>, xi: &DVector<f64>| {
            dvec(&mutual_inf_actions(&vec3(eta), &vec3(xi)).0)
        }),
        // Wrong orientation: X × Y instead of Y × X.
        Box::new(|eta: &DVector<f64>, xi: &DVector<f64>| {
            dvec(&vec3(xi).cross(&vec3(eta)))
        }),
    )
    .unwrap();
    let report = check_axioms(&flipped, 200, 32).unwrap();
    let named: Vec<_> = report.iter().collect();
    let get = |want: &str| {
        named
            .iter()
            .find(|(name, _)| *name == want)
            .unwrap_or_else(|| panic!("missing axiom residual {want}"))
            .1
    };
    assert!(get("right_module") > 0.1, "right module law should break");
    assert!(get("matched_jacobi") > 0.1, "mixed Jacobi identity should break");
}

/// The coupled bracket equals the 2×2 matrix commutator transported through
/// the embedding, including a fixed mixed pair whose bracket lands entirely
/// in the cross terms.
#[test]
fn coupled_bracket_matches_the_matrix_commutator() {
    let s = matched_structure();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..200 {
        let (x1, y1) = (rand_vec3(&mut rng), rand_vec3(&mut rng));
        let (x2, y2) = (rand_vec3(&mut rng), rand_vec3(&mut rng));
        let algebraic = matched_bracket(
            &s,
            &MatchedElement::new(dvec(&x1), dvec(&y1)),
            &MatchedElement::new(dvec(&x2), dvec(&y2)),
        )
        .unwrap();
        let (z1, z2) = (embed_algebra(&x1, &y1), embed_algebra(&x2, &y2));
        let (csu, ck) = split_algebra(&(z1 * z2 - z2 * z1)).unwrap();
        assert!(
            (vec3(&algebraic.xi) - csu).amax() < 1e-12
                && (vec3(&algebraic.eta) - ck).amax() < 1e-12,
            "bracket/commutator mismatch: {:.3e} / {:.3e}",
            (vec3(&algebraic.xi) - csu).amax(),
            (vec3(&algebraic.eta) - ck).amax()
        );
    }

    // Pure cross pair: [(0, f₁), (e₁, 0)] = (f₁▷e₁, f₁◁e₁).
    let mixed = matched_bracket(
        &s,
        &MatchedElement::new(dvector![0.0, 0.0, 0.0], dvector![1.0, 0.0, 0.0]),
        &MatchedElement::new(dvector![1.0, 0.0, 0.0], dvector![0.0, 0.0, 0.0]),
    )
    .unwrap();
    assert_eq!(mixed.xi, dvector![0.0, 0.0, -1.0]);
    assert_eq!(mixed.eta, dvector![0.0, 0.0, 0.0]);
}

/// Every closed-form dual map agrees with the generic transpose of its
/// primal map. The pairing convention is the one the transpose routine
/// defines, so this is what "dual" means in this workspace.
#[test]
fn closed_form_duals_match_transposed_actions() {
    let s = matched_structure();
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let t = |f: &dyn Fn(&DVector<f64>) -> DVector<f64>, w: &Vec3| {
        vec3(&transpose_map(f, 3, 3, &dvec(w)).unwrap())
    };
    for _ in 0..200 {
        let b = rand_kpoint(&mut rng);
        let x = rand_vec3(&mut rng);
        let y = rand_vec3(&mut rng);
        let phi = rand_vec3(&mut rng);
        let psi = rand_vec3(&mut rng);

        // Group-level: dual of the representation X ↦ B▷X.
        let d = dual_group_act(&b, &phi) - t(&|v| dvec(&b_act_x(&b, &vec3(v))), &phi);
        assert!(d.amax() < 1e-14, "group dual: {:.3e}", d.amax());

        // Algebra-level duals, one per coadjoint ingredient.
        let pairs: [(Vec3, Vec3); 6] = [
            (dual_left_act(&y, &phi), t(&|v| s.act_left(&dvec(&y), v), &phi)),
            (dual_right_act(&x, &psi), t(&|v| s.act_right(v, &dvec(&x)), &psi)),
            (dual_cross_act_g(&y, &psi), t(&|v| s.act_right(&dvec(&y), v), &psi)),
            (dual_cross_act_h(&x, &phi), t(&|v| s.act_left(v, &dvec(&x)), &phi)),
            (ad_star_su2(&x, &phi), -t(&|v| s.bracket_g(&dvec(&x), v), &phi)),
            (ad_star_k(&y, &psi), -t(&|v| s.bracket_h(&dvec(&y), v), &psi)),
        ];
        for (i, (closed, transposed)) in pairs.iter().enumerate() {
            assert!(
                (closed - transposed).amax() < 1e-14,
                "dual map {i}: {:.3e}",
                (closed - transposed).amax()
            );
        }
    }

    // Fixed anchor: the dual of Y ↦ Y▷e₁ sends 𝐤 to (−1, 0, 0).
    let anchor = t(
        &|v| dvec(&mutual_inf_actions(&vec3(v), &Vec3::new(1.0, 0.0, 0.0)).0),
        &k_vector(),
    );
    assert_eq!(anchor, Vec3::new(-1.0, 0.0, 0.0));
}

/// Pairing identity ⟨𝔟*(Φ), Y⟩ = ⟨Φ, Y▷X⟩ holds for the implemented sign
/// and fails by O(1) for the opposite sign: the duality tests above cannot
/// be satisfied by both conventions at once.
#[test]
fn opposite_dual_sign_violates_the_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    let mut worst_good: f64 = 0.0;
    let mut worst_bad: f64 = 0.0;
    for _ in 0..50 {
        let x = rand_vec3(&mut rng);
        let y = rand_vec3(&mut rng);
        let phi = rand_vec3(&mut rng);
        let rhs = phi.dot(&mutual_inf_actions(&y, &x).0);
        worst_good = worst_good.max((dual_cross_act_h(&x, &phi).dot(&y) - rhs).abs());
        worst_bad = worst_bad.max(((-dual_cross_act_h(&x, &phi)).dot(&y) - rhs).abs());
    }
    assert!(worst_good < 1e-14, "pairing violated: {worst_good:.3e}");
    assert!(worst_bad > 0.1, "sign flip went undetected: {worst_bad:.3e}");
}

/// Duality transported to the group: the dual representation matrix is the
/// transpose of the representation acting on vectors.
#[test]
fn group_level_dual_is_the_transposed_representation() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for _ in 0..200 {
        let b = rand_kpoint(&mut rng);
        let x = rand_vec3(&mut rng);
        let phi = rand_vec3(&mut rng);
        let lhs = dual_group_act(&b, &phi).dot(&x);
        let rhs = phi.dot(&b_act_x(&b, &x));
        assert!((lhs - rhs).abs() < 1e-14, "group pairing: {:.3e}", (lhs - rhs).abs());
    }
}
