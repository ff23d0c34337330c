//! Randomized and exhaustive verification suites.
//!
//! Each suite replays one family of cross-checks between a computed
//! invariant and its independent oracle, at a configurable scale, and
//! reports counts, failures (with a minimal reproducer), and the largest
//! observed residual. Instance seeds derive deterministically from the
//! master seed, and instances are merged in index order, so reports are
//! byte-identical across runs and thread counts.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{
    band_diameter, band_relation, circulant_band_relation, circulant_diameter, propagation_number,
};
use crate::metric::{circle_metric, composition_law_check};
use crate::opsys::{
    generated_algebra_degree, indicator_matrix, is_equivalence_via_triangle, is_psd,
    product_span_support, PatternMatrix, PSD_TOL,
};
use crate::relation::{FiniteMetric, Relation};
use crate::states::{
    dual_norm_bracket, extremality_oracle, is_pure_restricted, jordan_decompose, numerical_radius,
    operator_norm, HermitianFunctional, VectorState, DUAL_NORM_SAMPLES, JORDAN_GAP_TOL,
};

/// Deterministic generator: one stream per instance of a master seed.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// All `2^(n(n-1)/2)` reflexive symmetric relations on `n` points.
pub fn enumerate_relations(n: usize) -> Vec<Relation> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() <= 20, "enumeration limited to 2^20 relations");
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Relation::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Random relation: each off-diagonal pair present with probability
/// `edge_prob`.
pub fn random_relation(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Relation {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_range(0.0..1.0) < edge_prob {
                edges.push((i, j));
            }
        }
    }
    Relation::from_edges(n, &edges).unwrap()
}

/// Rejection-sample a connected random relation.
pub fn random_connected_relation(n: usize, edge_prob: f64, rng: &mut ChaCha8Rng) -> Relation {
    loop {
        let r = random_relation(n, edge_prob, rng);
        if r.is_connected() {
            return r;
        }
    }
}

/// Random metric with exact small-integer distances: shortest paths over a
/// complete graph with integer weights. Triangle inequalities hold exactly
/// in doubles.
pub fn random_metric(n: usize, rng: &mut ChaCha8Rng) -> FiniteMetric {
    let mut w = vec![0u32; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let weight = rng.random_range(1..=9u32);
            w[i * n + j] = weight;
            w[j * n + i] = weight;
        }
    }
    // Floyd–Warshall in integers
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let via = w[i * n + k] + w[k * n + j];
                    if (i != k && j != k) && via < w[i * n + j] {
                        w[i * n + j] = via;
                    }
                }
            }
        }
    }
    FiniteMetric::new(n, w.into_iter().map(f64::from).collect()).unwrap()
}

/// Run `f` over the items on up to `threads` workers, preserving item
/// order in the output. Results depend only on the items, so the merge is
/// deterministic regardless of scheduling.
pub fn parallel_map<T, R, F>(items: Vec<T>, threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let mut out: Vec<R> = Vec::with_capacity(items.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        for handle in handles {
            out.extend(handle.join().expect("suite worker panicked"));
        }
    });
    out
}

/// Scale configuration of the verification suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Point-set size override (suite-specific default otherwise).
    pub n: Option<usize>,
    /// Instance-count override.
    pub trials: Option<usize>,
    /// Circle discretization override.
    pub p: Option<usize>,
    pub threads: usize,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig {
            seed,
            n: None,
            trials: None,
            p: None,
            threads: default_threads(),
        }
    }
}

/// Worker cap: the `TOLSYS_THREADS` variable when set, otherwise the
/// available parallelism.
pub fn default_threads() -> usize {
    std::env::var("TOLSYS_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    /// Minimal reproducers of failed assertions; empty on success.
    pub failures: Vec<String>,
    /// Largest observed residual (suite-specific semantics; 0 for purely
    /// combinatorial suites).
    pub max_residual: f64,
    /// Tolerances the suite asserted against.
    pub tolerances: BTreeMap<String, f64>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            seed,
            cases: 0,
            failures: Vec::new(),
            max_residual: 0.0,
            tolerances: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITE_NAMES: [&str; 7] = [
    "schur-lemma",
    "propagation",
    "product-support",
    "jordan",
    "purity",
    "composition-law",
    "numerical-radius",
];

/// Run one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "schur-lemma" => Ok(vec![suite_schur_lemma(cfg)]),
        "propagation" => Ok(vec![suite_propagation(cfg)]),
        "product-support" => Ok(vec![suite_product_support(cfg)]),
        "jordan" => Ok(vec![suite_jordan(cfg)]),
        "purity" => Ok(vec![suite_purity(cfg)]),
        "composition-law" => Ok(vec![suite_composition_law(cfg)]),
        "numerical-radius" => Ok(vec![suite_numerical_radius(cfg)]),
        "all" => Ok(SUITE_NAMES
            .iter()
            .flat_map(|s| run_suite(s, cfg).unwrap())
            .collect()),
        other => Err(Error::InvalidParameter(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?} or \"all\""
        ))),
    }
}

fn describe(r: &Relation) -> String {
    format!("relation n={} edges={:?}", r.n(), r.edges())
}

/// Exhaustive binary-matrix check: positive semidefiniteness of the 0/1
/// matrix, the triangle inequalities, and transitivity agree on every
/// relation at the configured size.
pub fn suite_schur_lemma(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("schur-lemma", cfg.seed);
    report.tolerances.insert("psd_tol".into(), PSD_TOL);
    let n = cfg.n.unwrap_or(5);
    for r in enumerate_relations(n) {
        let psd = is_psd(&indicator_matrix(&r), PSD_TOL).unwrap();
        let triangle = is_equivalence_via_triangle(&r);
        let transitive = r.is_transitive();
        report.cases += 1;
        if psd != triangle || triangle != transitive {
            report.failures.push(format!(
                "{}: psd={psd} triangle={triangle} transitive={transitive}",
                describe(&r)
            ));
        }
    }
    report
}

/// Propagation number = graph diameter = support-oracle degree, exhaustive
/// at n <= 4 and on seeded connected relations at the configured size.
pub fn suite_propagation(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("propagation", cfg.seed);
    let n_max = cfg.n.unwrap_or(8);
    let samples = cfg.trials.unwrap_or(200);

    for n in 1..=4usize {
        for r in enumerate_relations(n) {
            report.cases += 1;
            let prop = propagation_number(&r);
            let (degree, blocks) = generated_algebra_degree(&r);
            if prop.overall != degree {
                report.failures.push(format!(
                    "{}: prop {} != degree {degree}",
                    describe(&r),
                    prop.overall
                ));
            }
            if blocks != crate::invariants::cstar_envelope_blocks(&r) {
                report.failures.push(format!(
                    "{}: oracle blocks {blocks:?} mismatch",
                    describe(&r)
                ));
            }
            if let Some(d) = r.diameter() {
                if d != prop.overall {
                    report.failures.push(format!(
                        "{}: diameter {d} != prop {}",
                        describe(&r),
                        prop.overall
                    ));
                }
            }
        }
    }

    let mut rng = seeded_rng(cfg.seed, 0xA1);
    let instances: Vec<Relation> = (0..samples)
        .map(|_| {
            let n = rng.random_range(2..=n_max);
            random_connected_relation(n, 0.35, &mut rng)
        })
        .collect();
    let outcomes = parallel_map(instances, cfg.threads, |r| {
        let prop = propagation_number(r);
        let (degree, _) = generated_algebra_degree(r);
        let diameter = r.diameter().unwrap();
        if prop.overall == degree && degree == diameter {
            None
        } else {
            Some(format!(
                "{}: prop {} diameter {diameter} degree {degree}",
                describe(r),
                prop.overall
            ))
        }
    });
    report.cases += outcomes.len();
    report.failures.extend(outcomes.into_iter().flatten());
    report
}

/// Product-span support of generic elements equals the symmetrized
/// composition, on seeded relation pairs.
pub fn suite_product_support(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("product-support", cfg.seed);
    report
        .tolerances
        .insert("support_tol".into(), crate::opsys::SUPPORT_TOL);
    let pairs = cfg.trials.unwrap_or(100);
    let n_max = cfg.n.unwrap_or(6);
    let mut rng = seeded_rng(cfg.seed, 0xB2);
    let instances: Vec<(u64, Relation, Relation)> = (0..pairs)
        .map(|k| {
            let n = rng.random_range(1..=n_max);
            let r1 = random_relation(n, 0.4, &mut rng);
            let r2 = random_relation(n, 0.4, &mut rng);
            (cfg.seed.wrapping_add(k as u64), r1, r2)
        })
        .collect();
    let outcomes = parallel_map(instances, cfg.threads, |(seed, r1, r2)| {
        let support = product_span_support(r1, r2, 8, *seed).unwrap();
        let expected = r1.symmetrized_compose(r2).unwrap();
        if support == *expected.adj() {
            None
        } else {
            Some(format!(
                "seed {seed}: {} x {}: product support mismatch",
                describe(r1),
                describe(r2)
            ))
        }
    });
    report.cases = outcomes.len();
    report.failures.extend(outcomes.into_iter().flatten());
    report
}

/// Norm additivity of the Jordan decomposition on seeded hermitian
/// functionals, with the certified two-sided bracket.
pub fn suite_jordan(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("jordan", cfg.seed);
    report.tolerances.insert("additivity_rel".into(), 1e-3);
    report
        .tolerances
        .insert("bracket_rel".into(), JORDAN_GAP_TOL);
    let instances_count = cfg.trials.unwrap_or(200);
    let n_max = cfg.n.unwrap_or(5);
    let mut rng = seeded_rng(cfg.seed, 0xC3);
    let instances: Vec<(usize, Relation, HermitianFunctional)> = (0..instances_count)
        .map(|k| {
            let n = rng.random_range(2..=n_max);
            let r = random_relation(n, 0.5, &mut rng);
            let phi = HermitianFunctional::random(&r, &mut rng);
            (k, r, phi)
        })
        .collect();
    let outcomes = parallel_map(
        instances,
        cfg.threads,
        |(k, r, phi)| match jordan_decompose(phi) {
            Err(e) => (
                f64::INFINITY,
                Some(format!("instance {k} {}: {e}", describe(r))),
            ),
            Ok(jd) => {
                let value = jd.norm_value;
                let additive = jd.plus.trace() + jd.minus.trace();
                let additivity = (value - additive).abs();
                let gap = jd.gap();
                let scale = value.max(1.0);
                let rebuilt_err = {
                    let rebuilt = jd.plus.rep() - jd.minus.rep();
                    (rebuilt - phi.rep())
                        .iter()
                        .map(|z| z.norm())
                        .fold(0.0, f64::max)
                };
                let residual = (additivity / scale).max(gap / scale);
                if additivity > 1e-3 * scale || gap > JORDAN_GAP_TOL * scale || rebuilt_err > 1e-10
                {
                    (
                        residual,
                        Some(format!(
                            "instance {k} {}: additivity {additivity:.3e} gap {gap:.3e} rebuild {rebuilt_err:.3e}",
                            describe(r)
                        )),
                    )
                } else {
                    (residual, None)
                }
            }
        },
    );
    report.cases = outcomes.len();
    for (residual, failure) in outcomes {
        report.max_residual = report.max_residual.max(residual);
        report.failures.extend(failure);
    }
    report
}

/// Support-connectivity purity criterion against the direct extremality
/// search, exhaustive over relations at the configured size, on structured
/// and seeded vectors.
pub fn suite_purity(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("purity", cfg.seed);
    report
        .tolerances
        .insert("certificate_residual".into(), 1e-9);
    let n_max = cfg.n.unwrap_or(3).min(4);
    let random_per_relation = cfg.trials.unwrap_or(100);

    let mut instances: Vec<(u64, Relation, VectorState)> = Vec::new();
    let mut rng = seeded_rng(cfg.seed, 0xD4);
    let mut key = 0u64;
    for n in 1..=n_max {
        for r in enumerate_relations(n) {
            // structured vectors: uniform on every nonempty subset
            for mask in 1..1u32 << n {
                let subset: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                instances.push((key, r.clone(), VectorState::uniform_on(n, &subset).unwrap()));
                key += 1;
            }
            for _ in 0..random_per_relation {
                let mask = rng.random_range(1..1u32 << n);
                let subset: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                let v = VectorState::random_on_support(n, &subset, &mut rng);
                instances.push((key, r.clone(), v));
                key += 1;
            }
        }
    }
    let seed = cfg.seed;
    let outcomes = parallel_map(instances, cfg.threads, move |(key, r, v)| {
        let criterion = is_pure_restricted(r, v);
        let oracle = extremality_oracle(r, v, 1e-9, seed.wrapping_add(*key));
        if criterion == oracle {
            None
        } else {
            Some(format!(
                "{} support {:?} key {key}: criterion {criterion} oracle {oracle}",
                describe(r),
                v.support()
            ))
        }
    });
    report.cases = outcomes.len();
    report.failures.extend(outcomes.into_iter().flatten());
    report
}

/// Threshold pairs on the discretized circle for which the composition law
/// holds exactly: the fractional parts of `eps·p` stay away from 0 and sum
/// below 1, so the band widths add up without a boundary shift.
pub const CIRCLE_COMPOSITION_PAIRS: [(f64, f64); 10] = [
    (0.0503, 0.0504),
    (0.1013, 0.0504),
    (0.0755, 0.0753),
    (0.1234, 0.0513),
    (0.2013, 0.1014),
    (0.1503, 0.1004),
    (0.0513, 0.0514),
    (0.2223, 0.1114),
    (0.1673, 0.1224),
    (0.0523, 0.1254),
];

/// Composition law on the discretized circle (equality at well-chosen
/// thresholds), the two-point counterexample, and the inclusion direction
/// on random exact metrics.
pub fn suite_composition_law(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("composition-law", cfg.seed);
    let p = cfg.p.unwrap_or(1000);
    let circle = circle_metric(p).expect("circle discretization");
    for &(eps1, eps2) in &CIRCLE_COMPOSITION_PAIRS {
        report.cases += 1;
        let check = composition_law_check(&circle, eps1, eps2);
        if !check.holds {
            report.failures.push(format!(
                "circle p={p} eps=({eps1}, {eps2}): missing {:?} extra {:?}",
                check.missing_pairs, check.extra_pairs
            ));
        }
    }
    // two points at distance 1: no midpoint for the pair (0, 1)
    let two = crate::metric::graph_metric(2, &[(0, 1, 1.0)]).unwrap();
    let check = composition_law_check(&two, 0.6, 0.6);
    report.cases += 1;
    if check.holds || check.missing_pairs != vec![(0, 1)] {
        report.failures.push(format!(
            "two-point counterexample: holds={} missing={:?}",
            check.holds, check.missing_pairs
        ));
    }
    // inclusion direction on seeded exact metrics
    let mut rng = seeded_rng(cfg.seed, 0xF6);
    for k in 0..20 {
        let n = rng.random_range(2..=7usize);
        let m = random_metric(n, &mut rng);
        let eps1 = rng.random_range(1..=12) as f64 / 2.0;
        let eps2 = rng.random_range(1..=12) as f64 / 2.0;
        let check = composition_law_check(&m, eps1, eps2);
        report.cases += 1;
        if !check.extra_pairs.is_empty() {
            report.failures.push(format!(
                "instance {k}: inclusion fails for eps=({eps1}, {eps2}): {:?}",
                check.extra_pairs
            ));
        }
    }
    report
}

/// Modified numerical radius against the top singular value, on seeded
/// pattern matrices.
pub fn suite_numerical_radius(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new("numerical-radius", cfg.seed);
    report.tolerances.insert("relative".into(), 1e-9);
    let count = cfg.trials.unwrap_or(500);
    let n_max = cfg.n.unwrap_or(8);
    let mut rng = seeded_rng(cfg.seed, 0xE5);
    let instances: Vec<(usize, PatternMatrix)> = (0..count)
        .map(|k| {
            let n = rng.random_range(1..=n_max);
            let r = random_relation(n, 0.5, &mut rng);
            (k, PatternMatrix::random(&r, &mut rng))
        })
        .collect();
    let outcomes = parallel_map(instances, cfg.threads, |(k, b)| {
        let radius = numerical_radius(b);
        let top = operator_norm(b.entries());
        let deviation = (radius - top).abs() / top.max(1.0);
        let failure = if deviation > 1e-9 {
            Some(format!(
                "instance {k} {}: radius {radius} vs top singular value {top}",
                describe(b.relation())
            ))
        } else {
            None
        };
        (deviation, failure)
    });
    report.cases = outcomes.len();
    for (deviation, failure) in outcomes {
        report.max_residual = report.max_residual.max(deviation);
        report.failures.extend(failure);
    }
    report
}

/// Band and circulant family check used by the acceptance gate: oracle
/// propagation equals the closed-form diameter on every family member.
pub fn band_circulant_family_check() -> Vec<String> {
    let mut failures = Vec::new();
    for p in 2..=12usize {
        for width in 1..p {
            let r = band_relation(p, width).unwrap();
            let (degree, _) = generated_algebra_degree(&r);
            let expected = band_diameter(p, width);
            if degree != expected || propagation_number(&r).overall != expected {
                failures.push(format!(
                    "band p={p} N={width}: degree {degree} expected {expected}"
                ));
            }
        }
    }
    for m in 3..=12usize {
        for width in 1..=m / 2 {
            let r = circulant_band_relation(m, width).unwrap();
            let (degree, _) = generated_algebra_degree(&r);
            let expected = circulant_diameter(m, width);
            if degree != expected || propagation_number(&r).overall != expected {
                failures.push(format!(
                    "circulant m={m} N={width}: degree {degree} expected {expected}"
                ));
            }
        }
    }
    failures
}

/// The dual-cone sandwich: positive functionals built from PSD densities
/// must come back `positive` with a certificate that is PSD at 1e-8 and
/// reproduces the representative exactly on the pattern.
pub fn dual_cone_sandwich_check(instances: usize, seed: u64) -> Vec<String> {
    let mut rng = seeded_rng(seed, 0x5A);
    let mut failures = Vec::new();
    for k in 0..instances {
        let n = rng.random_range(2..=5usize);
        let r = random_relation(n, 0.5, &mut rng);
        let a = PatternMatrix::random(&Relation::full(n), &mut rng);
        let rho = a.entries().adjoint() * a.entries();
        let phi = crate::states::functional_from_density(&r, &rho, false).unwrap();
        let check = crate::states::dual_positive(&phi, crate::states::DUAL_ACCEPT_RESIDUAL);
        if !check.positive {
            failures.push(format!(
                "instance {k} {}: feasible functional reported residual {:.3e}",
                describe(&r),
                check.residual
            ));
            continue;
        }
        let cert = check.certificate.unwrap();
        if !is_psd(&cert, 1e-8).unwrap_or(false) {
            failures.push(format!(
                "instance {k} {}: certificate not PSD at 1e-8",
                describe(&r)
            ));
        }
        let projected = crate::opsys::schur_project(&r, &cert).unwrap();
        let err = (projected.entries() - phi.rep())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if err > 1e-8 {
            failures.push(format!(
                "instance {k} {}: certificate pattern error {err:.3e}",
                describe(&r)
            ));
        }
    }
    failures
}

/// Positive functionals have dual norm equal to their trace (the norm is
/// attained at the unit).
pub fn positive_norm_check(instances: usize, seed: u64) -> Vec<String> {
    let mut rng = seeded_rng(seed, 0x6B);
    let mut failures = Vec::new();
    for k in 0..instances {
        let n = rng.random_range(2..=5usize);
        let r = random_relation(n, 0.5, &mut rng);
        let a = PatternMatrix::random(&Relation::full(n), &mut rng);
        let rho = a.entries().adjoint() * a.entries();
        let phi = crate::states::functional_from_density(&r, &rho, false).unwrap();
        let bracket = dual_norm_bracket(&phi, DUAL_NORM_SAMPLES.min(2000), seed ^ k as u64);
        let trace = phi.trace();
        if (bracket.value - trace).abs() > 1e-6 * trace.max(1.0) {
            failures.push(format!(
                "instance {k} {}: dual norm {} vs trace {trace}",
                describe(&r),
                bracket.value
            ));
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> SuiteConfig {
        let mut cfg = SuiteConfig::new(42);
        cfg.threads = 2;
        cfg
    }

    #[test]
    fn schur_suite_is_exhaustive_and_green() {
        let mut cfg = quick_config();
        cfg.n = Some(4);
        let report = suite_schur_lemma(&cfg);
        assert_eq!(report.cases, 64);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn propagation_suite_small() {
        let mut cfg = quick_config();
        cfg.n = Some(6);
        cfg.trials = Some(40);
        let report = suite_propagation(&cfg);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.cases, 75 + 40);
    }

    #[test]
    fn product_support_suite_small() {
        let mut cfg = quick_config();
        cfg.trials = Some(25);
        cfg.n = Some(5);
        let report = suite_product_support(&cfg);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn composition_suite_small_circle() {
        let mut cfg = quick_config();
        cfg.p = Some(1000);
        let report = suite_composition_law(&cfg);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn numerical_radius_suite_small() {
        let mut cfg = quick_config();
        cfg.trials = Some(60);
        cfg.n = Some(6);
        let report = suite_numerical_radius(&cfg);
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.max_residual <= 1e-9);
    }

    #[test]
    fn identical_seeds_reproduce_reports() {
        let mut cfg = quick_config();
        cfg.trials = Some(10);
        cfg.n = Some(5);
        let a = serde_json::to_string(&suite_numerical_radius(&cfg)).unwrap();
        let b = serde_json::to_string(&suite_numerical_radius(&cfg)).unwrap();
        assert_eq!(a, b);
        // thread count must not change the bytes
        cfg.threads = 1;
        let c = serde_json::to_string(&suite_numerical_radius(&cfg)).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("frobnicate", &quick_config()).is_err());
    }

    #[test]
    fn dual_cone_certificates_sandwich_the_representative() {
        let failures = dual_cone_sandwich_check(30, 42);
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn positive_functionals_have_trace_norm() {
        let failures = positive_norm_check(30, 42);
        assert!(failures.is_empty(), "{failures:?}");
    }
}
