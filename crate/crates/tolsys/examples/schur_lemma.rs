//! Three faces of the same fact about a reflexive symmetric 0/1 matrix:
//! positive semidefiniteness, the triangle inequalities
//! `L_ij + L_jk - L_ik <= 1`, and transitivity of the relation. This
//! example checks all 2^10 = 1024 relations on five points exhaustively.
//!
//! ```bash
//! cargo run --example schur_lemma
//! ```

use tolsys::opsys::{
    hermitian_eigenvalues, indicator_matrix, is_equivalence_via_triangle, is_psd, PSD_TOL,
};
use tolsys::verify::enumerate_relations;

fn main() {
    // The smallest violating pattern: the 3-point path. Its 0/1 matrix is
    // indefinite with minimal eigenvalue 1 - sqrt(2).
    let path = tolsys::Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let indicator = indicator_matrix(&path);
    let eigs = hermitian_eigenvalues(&indicator);
    println!("path indicator matrix:");
    println!("  [[1,1,0],[1,1,1],[0,1,1]]");
    println!("  eigenvalues {eigs:?}");
    println!(
        "  min = {} (1 - sqrt(2) = {})",
        eigs[0],
        1.0 - 2.0f64.sqrt()
    );
    println!("  is_psd: {}\n", is_psd(&indicator, PSD_TOL).unwrap());

    let mut equivalences = 0usize;
    let mut mismatches = 0usize;
    let relations = enumerate_relations(5);
    let total = relations.len();
    for r in relations {
        let psd = is_psd(&indicator_matrix(&r), PSD_TOL).unwrap();
        let triangle = is_equivalence_via_triangle(&r);
        let transitive = r.is_transitive();
        if psd != triangle || triangle != transitive {
            mismatches += 1;
            println!("MISMATCH at {r:?}: psd={psd} triangle={triangle} transitive={transitive}");
        }
        if transitive {
            equivalences += 1;
        }
    }
    println!("checked {total} relations on 5 points");
    println!("equivalence relations among them: {equivalences} (the Bell number B(5) = 52)");
    println!("condition mismatches: {mismatches}");
}
