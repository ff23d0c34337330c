//! The dual positive cone: a hermitian functional on the system is
//! positive exactly when its pattern representative admits a PSD
//! completion. The search alternates projections between the PSD cone and
//! the affine slice fixing the pattern entries, with Dykstra correction.
//!
//! ```bash
//! cargo run --example dual_completion
//! ```

use nalgebra::DMatrix;
use num_complex::Complex64;
use tolsys::opsys::indicator_matrix;
use tolsys::states::{dual_positive, HermitianFunctional, DUAL_ACCEPT_RESIDUAL};
use tolsys::Relation;

fn main() {
    // The indefinite path indicator completes to the rank-one all-ones
    // matrix: the free corner entries must be exactly 1.
    let path = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let phi = HermitianFunctional::new(path.clone(), indicator_matrix(&path)).unwrap();
    let check = dual_positive(&phi, DUAL_ACCEPT_RESIDUAL);
    println!("path indicator [[1,1,0],[1,1,1],[0,1,1]]:");
    println!(
        "  positive: {} (residual {:.2e})",
        check.positive, check.residual
    );
    let cert = check.certificate.unwrap();
    println!(
        "  completion corner (0,2) = {:.6} + {:.6}i  (the all-ones completion)",
        cert[(0, 2)].re,
        cert[(0, 2)].im
    );

    // A negative diagonal entry survives every completion: infeasible.
    let mut rep: DMatrix<Complex64> = DMatrix::zeros(2, 2);
    rep[(0, 0)] = Complex64::new(1.0, 0.0);
    rep[(1, 1)] = Complex64::new(-0.5, 0.0);
    let phi = HermitianFunctional::new(Relation::identity(2), rep).unwrap();
    let check = dual_positive(&phi, DUAL_ACCEPT_RESIDUAL);
    println!("\ndiag(1, -0.5) on the identity relation:");
    println!(
        "  positive: {}, undetermined: {}, residual {:.3}",
        check.positive, check.undetermined, check.residual
    );

    // Schur projections of PSD densities are always in the cone, and the
    // certificate reproduces the pattern entries exactly.
    let mut rng = tolsys::verify::seeded_rng(5, 0);
    let r = tolsys::verify::random_relation(4, 0.5, &mut rng);
    let a = tolsys::opsys::PatternMatrix::random(&Relation::full(4), &mut rng);
    let rho = a.entries().adjoint() * a.entries();
    let phi = tolsys::states::functional_from_density(&r, &rho, false).unwrap();
    let check = dual_positive(&phi, DUAL_ACCEPT_RESIDUAL);
    println!("\nSchur projection of a random Gram matrix onto {r:?}:");
    println!(
        "  positive: {} (residual {:.2e})",
        check.positive, check.residual
    );
    let cert = check.certificate.unwrap();
    let pattern_error = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&(i, j)| r.contains(i, j))
        .map(|(i, j)| (cert[(i, j)] - phi.rep()[(i, j)]).norm())
        .fold(0.0f64, f64::max);
    println!("  certificate pattern error: {pattern_error:.2e}");
}
