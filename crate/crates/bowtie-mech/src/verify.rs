//! The `verify` subcommand: eight seeded residual suites covering the
//! whole stack — algebra axioms, group compatibility, factorization,
//! derivative and duality consistency, the bracket-vs-commutator and
//! flow-vs-reference equivalences, and energy drift.
//!
//! Every suite draws its samples from its own generator, derived from the
//! master seed by suite index, so the report is byte-identical across
//! runs with the same seed and individual suites keep their samples when
//! others change. Failures are report entries, never process errors: the
//! command prints the full report and signals the verdict in its exit
//! code alone.

use std::collections::BTreeMap;

use bowtie_algebra::{check_axioms, matched_bracket, MatchedElement};
use bowtie_dynamics::{
    integrate, integrate_el, IntegratorConfig, PotentialEval, QuadraticLagrangian, ReducedState,
    RhsKind, Scheme,
};
use bowtie_oracle::{commutator_bracket, iwasawa_factor, reference_ep, Sl2cMatrix, StructureConstants};
use bowtie_sl2c::{
    b_act_x, dual_cross_act_g, dual_cross_act_h, dual_group_act, dual_left_act, dual_right_act,
    group_act_left, group_act_right, k_act_su2, k_exp, mat_su, matched_structure,
    mutual_inf_actions, su2_exp, x_act_b, KPoint, Sl2cGroupTerms, Su2, Vec3,
};
use nalgebra::{Complex, DMatrix, DVector, Matrix2};
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{MechError, Result};

/// Suite names, in execution and report order. These are also the keys
/// `--tol name=value` accepts.
pub const SUITE_NAMES: [&str; 8] = [
    "axioms",
    "compatibility",
    "factorization",
    "derivative",
    "duality",
    "bracket",
    "trajectory",
    "energy",
];

const DEFAULT_TOLERANCES: [f64; 8] = [1e-12, 1e-10, 1e-10, 1e-6, 1e-14, 1e-12, 1e-10, 1e-8];

/// One named residual inside a suite.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualEntry {
    /// What was measured.
    pub name: &'static str,
    /// Worst value observed over the suite's samples.
    pub value: f64,
}

/// One suite's verdict.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// Suite name (a key of [`SUITE_NAMES`]).
    pub name: &'static str,
    /// Tolerance the suite was judged against.
    pub tolerance: f64,
    /// Largest residual in `residuals`.
    pub max_residual: f64,
    /// Whether `max_residual <= tolerance`.
    pub pass: bool,
    /// The individual residuals.
    pub residuals: Vec<ResidualEntry>,
}

impl SuiteReport {
    fn new(name: &'static str, tolerance: f64, residuals: Vec<ResidualEntry>) -> Self {
        let max_residual = residuals.iter().map(|r| r.value).fold(0.0, f64::max);
        SuiteReport {
            name,
            tolerance,
            max_residual,
            pass: max_residual <= tolerance,
            residuals,
        }
    }
}

/// The full verification report, serialized to stdout as JSON.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    /// Master seed the suite generators were derived from.
    pub seed: u64,
    /// Conjunction of the per-suite verdicts.
    pub pass: bool,
    /// All suites, in fixed order.
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    /// Pretty JSON with a trailing newline; identical seeds produce
    /// identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report has no non-serializable parts");
        s.push('\n');
        s
    }

    /// Looks up one suite by name.
    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

/// Per-suite tolerances, defaulting to the values the acceptance gates
/// use; individual entries can be overridden from the command line.
#[derive(Debug, Clone)]
pub struct Tolerances {
    map: BTreeMap<&'static str, f64>,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            map: SUITE_NAMES.iter().copied().zip(DEFAULT_TOLERANCES).collect(),
        }
    }
}

impl Tolerances {
    /// Applies one `name=value` override.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        let (name, value) = spec.split_once('=').ok_or_else(|| {
            MechError::Config(format!("--tol expects name=value, got `{spec}`"))
        })?;
        let value: f64 = value
            .parse()
            .map_err(|_| MechError::Config(format!("--tol {name}: `{value}` is not a number")))?;
        let key = SUITE_NAMES
            .iter()
            .find(|&&k| k == name)
            .ok_or_else(|| {
                MechError::Config(format!(
                    "unknown suite `{name}` (expected one of: {})",
                    SUITE_NAMES.join(", ")
                ))
            })?;
        self.map.insert(key, value);
        Ok(())
    }

    fn get(&self, name: &'static str) -> f64 {
        self.map[name]
    }
}

/// Deliberate corruptions, available to tests as negative controls: each
/// one must make exactly its target suite fail, demonstrating that the
/// suite actually exercises the claimed equivalence. The command line
/// never sets these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Corruption {
    /// Honest comparison.
    #[default]
    None,
    /// Negate the commutator route inside the bracket suite.
    FlipBracketSign,
    /// Replace the frozen-argument dual landing in the second factor's
    /// dual by its opposite-sign variant inside the duality suite.
    FlipFrozenDualSign,
}

/// Runs all suites with default honest comparisons.
pub fn verify_report(seed: u64, tolerances: &Tolerances) -> VerifyReport {
    verify_report_with(seed, tolerances, Corruption::None)
}

/// Runs all suites, optionally with one injected corruption (test
/// fixture; see [`Corruption`]).
pub fn verify_report_with(seed: u64, tolerances: &Tolerances, corruption: Corruption) -> VerifyReport {
    let suites = vec![
        axioms_suite(suite_seed(seed, 0), tolerances.get("axioms")),
        compatibility_suite(suite_seed(seed, 1), tolerances.get("compatibility")),
        factorization_suite(suite_seed(seed, 2), tolerances.get("factorization")),
        derivative_suite(suite_seed(seed, 3), tolerances.get("derivative")),
        duality_suite(suite_seed(seed, 4), tolerances.get("duality"), corruption),
        bracket_suite(suite_seed(seed, 5), tolerances.get("bracket"), corruption),
        trajectory_suite(suite_seed(seed, 6), tolerances.get("trajectory")),
        energy_suite(tolerances.get("energy")),
    ];
    let pass = suites.iter().all(|s| s.pass);
    VerifyReport { seed, pass, suites }
}

/// Splitmix-style spreading of the master seed over suite indices, so
/// neighbouring seeds do not produce overlapping sample streams.
fn suite_seed(master: u64, index: u64) -> u64 {
    master.wrapping_add((index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

// ---------------------------------------------------------------- sampling

fn coeff(rng: &mut impl Rng) -> f64 {
    rng.random_range(-1.0..1.0)
}

fn rand_vec3(rng: &mut impl Rng) -> Vec3 {
    Vec3::new(coeff(rng), coeff(rng), coeff(rng))
}

fn rand_kpoint(rng: &mut impl Rng) -> KPoint {
    KPoint::new(coeff(rng), coeff(rng), coeff(rng).exp_m1()).expect("c > -1 by construction")
}

fn rand_su2(rng: &mut impl Rng) -> Su2 {
    loop {
        let (w, x, y, z) = (coeff(rng), coeff(rng), coeff(rng), coeff(rng));
        let n2 = w * w + x * x + y * y + z * z;
        if n2 > 1e-4 && n2 <= 1.0 {
            return Su2::from_quaternion(w, x, y, z);
        }
    }
}

fn rand_spd(rng: &mut impl Rng) -> DMatrix<f64> {
    let m = DMatrix::from_fn(3, 3, |_, _| coeff(rng));
    m.transpose() * &m + DMatrix::identity(3, 3) * 0.5
}

fn cdiff(a: &Matrix2<Complex<f64>>, b: &Matrix2<Complex<f64>>) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn dvec(v: &Vec3) -> DVector<f64> {
    DVector::from_column_slice(v.as_slice())
}

// ------------------------------------------------------------------ suites

/// Antisymmetry, factor Jacobi, module laws, mixed compatibility, and the
/// coupled Jacobi identity on the closed-form structure maps.
fn axioms_suite(seed: u64, tolerance: f64) -> SuiteReport {
    let report = check_axioms(&matched_structure(), 1000, seed).expect("dimensions 3, 3 are valid");
    let residuals = report
        .iter()
        .map(|(name, value)| ResidualEntry { name, value })
        .collect();
    SuiteReport::new("axioms", tolerance, residuals)
}

/// Group-level compatibility of the two mutual actions with the group
/// products, and closure of each action in its target group.
fn compatibility_suite(seed: u64, tolerance: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut left_compat: f64 = 0.0;
    let mut right_compat: f64 = 0.0;
    let mut closure_unitary: f64 = 0.0;
    let mut closure_triangular: f64 = 0.0;
    for _ in 0..500 {
        let b = rand_kpoint(&mut rng);
        let b2 = rand_kpoint(&mut rng);
        let a = rand_su2(&mut rng);
        let a2 = rand_su2(&mut rng);

        // B▷(A₁A₂) = (B▷A₁) ((B◁A₁)▷A₂)
        let lhs = group_act_left(&b, &(a * a2)).expect("action closes");
        let rhs = group_act_left(&b, &a).expect("action closes")
            * group_act_left(&group_act_right(&b, &a).expect("action closes"), &a2)
                .expect("action closes");
        left_compat = left_compat.max(cdiff(lhs.matrix(), rhs.matrix()));

        // (B₁B₂)◁A = (B₁◁(B₂▷A)) (B₂◁A)
        let lhs = group_act_right(&(b * b2), &a).expect("action closes");
        let rhs = group_act_right(&b, &group_act_left(&b2, &a).expect("action closes"))
            .expect("action closes")
            * group_act_right(&b2, &a).expect("action closes");
        right_compat = right_compat.max((lhs.triple() - rhs.triple()).amax());

        // Closure: the left action must land exactly in the unitary
        // group, the right action's residual matrix exactly in the
        // triangular chart.
        let acted = group_act_left(&b, &a).expect("action closes");
        closure_unitary = closure_unitary
            .max(acted.unitarity_residual())
            .max(acted.det_residual());
        let residue = acted.inverse().matrix() * (b.rep_2x2() * a.matrix());
        let k = KPoint::from_rep_2x2(&residue).expect("residue has the chart shape");
        closure_triangular = closure_triangular.max(cdiff(&residue, &k.rep_2x2()));
    }
    SuiteReport::new(
        "compatibility",
        tolerance,
        vec![
            ResidualEntry { name: "left_compatibility", value: left_compat },
            ResidualEntry { name: "right_compatibility", value: right_compat },
            ResidualEntry { name: "closure_unitary", value: closure_unitary },
            ResidualEntry { name: "closure_triangular", value: closure_triangular },
        ],
    )
}

/// The product of the embedded factors refactors to the same factors, the
/// reversed product's factorization reproduces the two group actions, and
/// the embedding is multiplicative.
fn factorization_suite(seed: u64, tolerance: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut refactor: f64 = 0.0;
    let mut reversed: f64 = 0.0;
    let mut homomorphism: f64 = 0.0;
    for _ in 0..500 {
        let p1 = bowtie_sl2c::MatchedGroupElement::new(rand_su2(&mut rng), rand_kpoint(&mut rng));
        let p2 = bowtie_sl2c::MatchedGroupElement::new(rand_su2(&mut rng), rand_kpoint(&mut rng));
        let prod = p1.mul(&p2).expect("product factors");

        let m = Sl2cMatrix::group_element(prod.embed()).expect("embedding is unimodular");
        let (fa, fb) = iwasawa_factor(&m).expect("factorization converges");
        refactor = refactor
            .max(cdiff(fa.matrix(), prod.su2_factor().matrix()))
            .max((fb.triple() - prod.k_factor().triple()).amax());

        homomorphism = homomorphism.max(cdiff(&(p1.embed() * p2.embed()), &prod.embed()));

        // Factor B·A (the reversed order): its unique factors are exactly
        // the two group actions.
        let b = p1.k_factor();
        let a = p2.su2_factor();
        let m = Sl2cMatrix::group_element(b.rep_2x2() * a.matrix()).expect("unimodular");
        let (fa, fb) = iwasawa_factor(&m).expect("factorization converges");
        reversed = reversed
            .max(cdiff(fa.matrix(), group_act_left(b, a).expect("closes").matrix()))
            .max((fb.triple() - group_act_right(b, a).expect("closes").triple()).amax());
    }
    SuiteReport::new(
        "factorization",
        tolerance,
        vec![
            ResidualEntry { name: "embed_refactor", value: refactor },
            ResidualEntry { name: "reversed_product_actions", value: reversed },
            ResidualEntry { name: "embedding_homomorphism", value: homomorphism },
        ],
    )
}

/// Each closed-form infinitesimal action against a central difference of
/// its group action at step 1e−4.
fn derivative_suite(seed: u64, tolerance: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = 1e-4;
    let mut on_unitary_algebra: f64 = 0.0;
    let mut on_chart: f64 = 0.0;
    let mut mutual_left: f64 = 0.0;
    let mut mutual_right: f64 = 0.0;
    for _ in 0..40 {
        let b = rand_kpoint(&mut rng);
        let x = rand_vec3(&mut rng);
        let y = rand_vec3(&mut rng);

        let plus = group_act_left(&b, &su2_exp(&(h * x))).expect("closes");
        let minus = group_act_left(&b, &su2_exp(&(-h * x))).expect("closes");
        let fd = (plus.matrix() - minus.matrix()).unscale(2.0 * h);
        on_unitary_algebra = on_unitary_algebra.max(cdiff(&fd, &mat_su(&b_act_x(&b, &x))));

        let plus = group_act_right(&b, &su2_exp(&(h * x))).expect("closes");
        let minus = group_act_right(&b, &su2_exp(&(-h * x))).expect("closes");
        let fd = (plus.triple() - minus.triple()) / (2.0 * h);
        on_chart = on_chart.max((fd - x_act_b(&b, &x)).amax());

        let (y_on_x, y_under_x) = mutual_inf_actions(&y, &x);
        let fd = (b_act_x(&k_exp(&(h * y)), &x) - b_act_x(&k_exp(&(-h * y)), &x)) / (2.0 * h);
        mutual_left = mutual_left.max((fd - y_on_x).amax());

        let plus = k_act_su2(&y, &su2_exp(&(h * x))).expect("conjugation splits");
        let minus = k_act_su2(&y, &su2_exp(&(-h * x))).expect("conjugation splits");
        let fd = (plus - minus) / (2.0 * h);
        mutual_right = mutual_right.max((fd - y_under_x).amax());
    }
    SuiteReport::new(
        "derivative",
        tolerance,
        vec![
            ResidualEntry { name: "group_on_unitary_algebra", value: on_unitary_algebra },
            ResidualEntry { name: "group_on_chart", value: on_chart },
            ResidualEntry { name: "mutual_left", value: mutual_left },
            ResidualEntry { name: "mutual_right", value: mutual_right },
        ],
    )
}

/// `⟨f*(w), v⟩ = ⟨w, f(v)⟩` for all five starred maps, under the plain
/// dot-product pairing.
fn duality_suite(seed: u64, tolerance: f64, corruption: Corruption) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let frozen_second_sign = if corruption == Corruption::FlipFrozenDualSign { -1.0 } else { 1.0 };
    let mut group_lift: f64 = 0.0;
    let mut left_starred: f64 = 0.0;
    let mut right_starred: f64 = 0.0;
    let mut frozen_first: f64 = 0.0;
    let mut frozen_second: f64 = 0.0;
    for _ in 0..200 {
        let b = rand_kpoint(&mut rng);
        let x = rand_vec3(&mut rng);
        let y = rand_vec3(&mut rng);
        let phi = rand_vec3(&mut rng);
        let psi = rand_vec3(&mut rng);
        let (y_on_x, y_under_x) = mutual_inf_actions(&y, &x);

        group_lift = group_lift.max((dual_group_act(&b, &phi).dot(&x) - phi.dot(&b_act_x(&b, &x))).abs());
        left_starred = left_starred.max((dual_left_act(&y, &phi).dot(&x) - phi.dot(&y_on_x)).abs());
        right_starred = right_starred.max((dual_right_act(&x, &psi).dot(&y) - psi.dot(&y_under_x)).abs());
        frozen_first = frozen_first.max((dual_cross_act_g(&y, &psi).dot(&x) - psi.dot(&y_under_x)).abs());
        frozen_second = frozen_second.max(
            ((frozen_second_sign * dual_cross_act_h(&x, &phi)).dot(&y) - phi.dot(&y_on_x)).abs(),
        );
    }
    SuiteReport::new(
        "duality",
        tolerance,
        vec![
            ResidualEntry { name: "group_lift", value: group_lift },
            ResidualEntry { name: "left_starred", value: left_starred },
            ResidualEntry { name: "right_starred", value: right_starred },
            ResidualEntry { name: "frozen_first_factor", value: frozen_first },
            ResidualEntry { name: "frozen_second_factor", value: frozen_second },
        ],
    )
}

/// The coupled bracket against the matrix-commutator route through the
/// embedding.
fn bracket_suite(seed: u64, tolerance: f64, corruption: Corruption) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = matched_structure();
    let sign = if corruption == Corruption::FlipBracketSign { -1.0 } else { 1.0 };
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let (x1, y1) = (rand_vec3(&mut rng), rand_vec3(&mut rng));
        let (x2, y2) = (rand_vec3(&mut rng), rand_vec3(&mut rng));
        let ours = matched_bracket(
            &s,
            &MatchedElement::new(dvec(&x1), dvec(&y1)),
            &MatchedElement::new(dvec(&x2), dvec(&y2)),
        )
        .expect("dimensions match");
        let (cx, cy) = commutator_bracket(&(x1, y1), &(x2, y2)).expect("commutator decomposes");
        worst = worst
            .max((ours.xi - sign * dvec(&cx)).amax())
            .max((ours.eta - sign * dvec(&cy)).amax());
    }
    SuiteReport::new(
        "bracket",
        tolerance,
        vec![ResidualEntry { name: "commutator_equivalence", value: worst }],
    )
}

/// The production momentum flow against the independent structure-constant
/// integrator: the fixed benchmark state, and a seeded anisotropic system.
fn trajectory_suite(seed: u64, tolerance: f64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = matched_structure();
    let sc = StructureConstants::from_commutators().expect("constants validate");

    let lagrangian = QuadraticLagrangian::identity(3, 3);
    let initial = ReducedState::new(
        DVector::from_column_slice(&[1.0, 0.0, 0.0]),
        DVector::from_column_slice(&[0.0, 0.0, 1.0]),
    );
    let config = IntegratorConfig::new(1e-3, 5.0, Scheme::Rk4).expect("valid config");
    let ours = integrate(&s, &lagrangian, &initial, &config, RhsKind::Full).expect("finite flow");
    let reference = reference_ep(&sc, &lagrangian, &initial, &config).expect("finite flow");
    let benchmark = ours
        .max_pointwise_difference(&reference)
        .expect("identical sampling grids");

    let lagrangian = QuadraticLagrangian::new(rand_spd(&mut rng), rand_spd(&mut rng))
        .expect("random SPD blocks are valid");
    let initial = ReducedState::new(dvec(&rand_vec3(&mut rng)), dvec(&rand_vec3(&mut rng)));
    let config = IntegratorConfig::new(1e-3, 1.0, Scheme::Rk4).expect("valid config");
    let ours = integrate(&s, &lagrangian, &initial, &config, RhsKind::Full).expect("finite flow");
    let reference = reference_ep(&sc, &lagrangian, &initial, &config).expect("finite flow");
    let anisotropic = ours
        .max_pointwise_difference(&reference)
        .expect("identical sampling grids");

    SuiteReport::new(
        "trajectory",
        tolerance,
        vec![
            ResidualEntry { name: "benchmark_pointwise", value: benchmark },
            ResidualEntry { name: "anisotropic_pointwise", value: anisotropic },
        ],
    )
}

/// Energy drift along the two long benchmark flows: the fully reduced one
/// and the partially reduced one with a linear potential.
fn energy_suite(tolerance: f64) -> SuiteReport {
    let s = matched_structure();
    let lagrangian = QuadraticLagrangian::identity(3, 3);
    let initial = ReducedState::new(
        DVector::from_column_slice(&[1.0, 0.0, 0.0]),
        DVector::from_column_slice(&[0.0, 0.0, 1.0]),
    );
    let config = IntegratorConfig::new(1e-3, 10.0, Scheme::Rk4).expect("valid config");
    let flow = integrate(&s, &lagrangian, &initial, &config, RhsKind::Full).expect("finite flow");
    let reduced_drift = flow.max_energy_drift();

    let chi = DVector::from_column_slice(&[0.3, -0.2, 0.5]);
    let potential = move |h: &DVector<f64>| PotentialEval { value: chi.dot(h), gradient: chi.clone() };
    let h0 = DVector::from_column_slice(&[0.1, 0.2, 0.3]);
    let flow = integrate_el(&s, &lagrangian, &initial, &h0, &Sl2cGroupTerms, &potential, &config)
        .expect("finite flow");
    let partial_drift = flow.trajectory.max_energy_drift();

    SuiteReport::new(
        "energy",
        tolerance,
        vec![
            ResidualEntry { name: "reduced_flow_drift", value: reduced_drift },
            ResidualEntry { name: "partially_reduced_drift", value: partial_drift },
        ],
    )
}
