//! The modified numerical radius at finite level.
//!
//! For a closed *-subspace of a matrix algebra the modified numerical
//! radius coincides with the operator norm: evaluating the vector
//! quasi-state of a top eigenvector of the hermitian dilation
//! `[[0, b], [b*, 0]]` recovers the largest singular value of `b`.
//!
//! ```bash
//! cargo run --example numerical_radius
//! ```

use tolsys::opsys::PatternMatrix;
use tolsys::states::{numerical_radius, operator_norm};
use tolsys::verify::{random_relation, seeded_rng};

fn main() {
    let mut rng = seeded_rng(17, 0);
    println!("  n  edges  numerical radius   top singular value   rel. deviation");
    let mut worst = 0.0f64;
    for n in [2usize, 4, 6, 8] {
        for _ in 0..3 {
            let r = random_relation(n, 0.5, &mut rng);
            let b = PatternMatrix::random(&r, &mut rng);
            let radius = numerical_radius(&b);
            let top = operator_norm(b.entries());
            let deviation = (radius - top).abs() / top.max(1.0);
            worst = worst.max(deviation);
            println!(
                "  {n}  {:5}  {radius:<16.12}   {top:<18.12}   {deviation:.2e}",
                r.edges().len()
            );
        }
    }
    println!("\nworst relative deviation: {worst:.2e}");
}
