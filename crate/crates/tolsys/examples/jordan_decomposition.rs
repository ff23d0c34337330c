//! Jordan decomposition of hermitian functionals: split into positive
//! parts with additive norms.
//!
//! The dual norm is the minimal trace norm over completions of the
//! pattern representative. A minimal completion splits spectrally into
//! PSD pieces whose pattern projections are the two positive functionals;
//! the trace-norm optimizer certifies itself with a two-sided bracket
//! (feasible value above, unit-ball pairing below).
//!
//! ```bash
//! cargo run --example jordan_decomposition
//! ```

use nalgebra::DMatrix;
use num_complex::Complex64;
use tolsys::states::{dual_norm_bracket, jordan_decompose, HermitianFunctional};
use tolsys::verify::{random_relation, seeded_rng};
use tolsys::Relation;

fn main() {
    // The exact textbook case: diag(1, -1) splits into diag(1,0) and
    // diag(0,1), with norm 1 + 1 = 2.
    let mut rep: DMatrix<Complex64> = DMatrix::zeros(2, 2);
    rep[(0, 0)] = Complex64::ONE;
    rep[(1, 1)] = -Complex64::ONE;
    let phi = HermitianFunctional::new(Relation::full(2), rep).unwrap();
    let jd = jordan_decompose(&phi).unwrap();
    println!("diag(1, -1) on the full relation:");
    println!(
        "  norm {} = {} + {}",
        jd.norm_value,
        jd.plus.trace(),
        jd.minus.trace()
    );

    // Random functionals on random patterns: the norm requires optimizing
    // over the free entries, and the decomposition tracks it.
    let mut rng = seeded_rng(11, 0);
    println!("\nrandom hermitian functionals (n = 4):");
    println!("  |phi|      |phi+|    |phi-|    additivity error  bracket gap");
    for _ in 0..6 {
        let r = random_relation(4, 0.5, &mut rng);
        let phi = HermitianFunctional::random(&r, &mut rng);
        let jd = jordan_decompose(&phi).unwrap();
        let additivity = (jd.norm_value - (jd.plus.trace() + jd.minus.trace())).abs();
        println!(
            "  {:<9.5}  {:<8.5}  {:<8.5}  {:<16.2e}  {:.2e}",
            jd.norm_value,
            jd.plus.trace(),
            jd.minus.trace(),
            additivity,
            jd.gap()
        );
    }

    // The bracket on a functional with free entries: the optimizer value
    // is a feasible completion's trace norm, the lower bound a pairing
    // against a unit-ball element of the system.
    let path = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let phi =
        HermitianFunctional::new(path.clone(), tolsys::opsys::indicator_matrix(&path)).unwrap();
    let bracket = dual_norm_bracket(&phi, 2000, 1);
    println!("\npath indicator functional:");
    println!(
        "  dual norm in [{:.9}, {:.9}]",
        bracket.lower_bound, bracket.value
    );
    println!("  (the PSD completion has trace norm exactly 3)");
}
