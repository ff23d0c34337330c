//! Property-based invariants of the relation algebra, the Schur
//! projection, and the metric thresholds.

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

use tolsys::metric::{partition_relation, Eps};
use tolsys::opsys::{nonzero_pattern, schur_project, PatternMatrix};
use tolsys::relation::Relation;
use tolsys::verify::{random_metric, random_relation, seeded_rng};

fn arb_relation(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n, any::<u64>(), 0.1f64..0.9)
        .prop_map(|(n, seed, p)| random_relation(n, p, &mut seeded_rng(seed, 0)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn identity_is_neutral_for_symmetrized_composition(r in arb_relation(7)) {
        let id = Relation::identity(r.n());
        prop_assert_eq!(r.symmetrized_compose(&id).unwrap(), r.clone());
        prop_assert_eq!(id.symmetrized_compose(&r).unwrap(), r);
    }

    #[test]
    fn epsilon_relation_is_monotone(seed in any::<u64>(), n in 2usize..=7,
                                    eps1 in 0.5f64..6.0, gap in 0.0f64..4.0) {
        let m = random_metric(n, &mut seeded_rng(seed, 1));
        let small = m.epsilon_relation(eps1);
        let large = m.epsilon_relation(eps1 + gap);
        prop_assert!(small.adj().le(large.adj()));
    }

    #[test]
    fn composition_of_threshold_relations_is_included_in_sum(
        seed in any::<u64>(), n in 2usize..=7,
        eps1 in 0.5f64..5.0, eps2 in 0.5f64..5.0,
    ) {
        // the inclusion direction of the composition law holds for every
        // finite metric (distances here are exact small integers)
        let m = random_metric(n, &mut seeded_rng(seed, 2));
        let composed = m.epsilon_relation(eps1).symmetrized_compose(&m.epsilon_relation(eps2)).unwrap();
        let sum = m.epsilon_relation(eps1 + eps2);
        prop_assert!(composed.adj().le(sum.adj()));
    }

    #[test]
    fn schur_projection_is_idempotent_linear_contractive(
        r in arb_relation(6), seed in any::<u64>(), scale in -3.0f64..3.0,
    ) {
        let n = r.n();
        let mut rng = seeded_rng(seed, 3);
        let mut draw = || {
            use rand::Rng;
            DMatrix::from_fn(n, n, |_, _| {
                Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
            })
        };
        let a = draw();
        let b = draw();
        let pa = schur_project(&r, &a).unwrap();
        // idempotent
        let twice = schur_project(&r, pa.entries()).unwrap();
        prop_assert_eq!(twice.entries(), pa.entries());
        // linear: S(a*s + b) = S(a)*s + S(b), entrywise exact
        let s = Complex64::new(scale, -scale);
        let combined = schur_project(&r, &(&a * s + &b)).unwrap();
        let separate = pa.entries() * s + schur_project(&r, &b).unwrap().entries();
        prop_assert_eq!(combined.entries(), &separate);
        // entrywise contraction
        for i in 0..n {
            for j in 0..n {
                prop_assert!(pa.entries()[(i, j)].norm() <= a[(i, j)].norm());
            }
        }
    }

    #[test]
    fn product_support_is_contained_in_composition(
        r1 in arb_relation(6), seed in any::<u64>(),
    ) {
        let mut rng = seeded_rng(seed, 4);
        let r2 = random_relation(r1.n(), 0.5, &mut rng);
        let a = PatternMatrix::random(&r1, &mut rng);
        let b = PatternMatrix::random(&r2, &mut rng);
        let support = nonzero_pattern(&(a.entries() * b.entries()));
        prop_assert!(support.le(&r1.compose(&r2).unwrap()));
    }

    #[test]
    fn closure_classes_partition_the_points(r in arb_relation(8)) {
        let (closure, classes) = r.transitive_closure();
        let mut seen = vec![false; r.n()];
        for class in &classes {
            for &x in class {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
            // classes are cliques of the closure
            for &x in class {
                for &y in class {
                    prop_assert!(closure.contains(x, y));
                }
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
        prop_assert!(closure.is_transitive());
        // the closure contains the relation
        prop_assert!(r.adj().le(closure.adj()));
    }

    #[test]
    fn partition_band_is_monotone_in_eps(p in 2usize..=40, units in 1u128..=400) {
        // eps = units/100 and (units+1)/100, both above the 1/p floor
        let eps_lo = Eps::Decimal { units, scale: 2 };
        let eps_hi = Eps::Decimal { units: units + 1, scale: 2 };
        if let Ok((_, band_lo)) = partition_relation(p, &eps_lo) {
            let (_, band_hi) = partition_relation(p, &eps_hi).unwrap();
            prop_assert!(band_hi >= band_lo);
        }
    }

    #[test]
    fn relation_json_roundtrip(r in arb_relation(9)) {
        let text = tolsys::io::relation_to_json(&r);
        prop_assert_eq!(tolsys::io::relation_from_json(&text).unwrap(), r);
    }

    #[test]
    fn metric_csv_roundtrip(seed in any::<u64>(), n in 2usize..=6) {
        let m = random_metric(n, &mut seeded_rng(seed, 5));
        let text = tolsys::io::metric_to_csv(&m);
        prop_assert_eq!(tolsys::io::metric_from_csv(&text).unwrap(), m);
    }
}
