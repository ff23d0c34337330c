//! Purity of restricted vector states: a vector state of the full matrix
//! algebra stays pure on the system of a relation exactly when the
//! relation connects the vector's support.
//!
//! The combinatorial criterion is cross-checked by a direct extremality
//! search in the quasi-state set: split the support along closure classes
//! (the construction that wins whenever the support is disconnected) and
//! probe random directions in the face.
//!
//! ```bash
//! cargo run --example pure_states
//! ```

use tolsys::states::{extremality_oracle, is_pure_restricted, restrict_vector_state, VectorState};
use tolsys::verify::seeded_rng;
use tolsys::Relation;

fn main() {
    let path = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let id = Relation::identity(3);

    println!("relation: 3-point path (0 ~ 1 ~ 2)\n");
    let cases: Vec<(&str, Vec<usize>)> = vec![
        ("single point", vec![0]),
        ("adjacent pair", vec![0, 1]),
        ("far pair (no edge, no chain inside support)", vec![0, 2]),
        ("whole space (chain through the middle)", vec![0, 1, 2]),
    ];
    for (label, support) in &cases {
        let v = VectorState::uniform_on(3, support).unwrap();
        let pure = is_pure_restricted(&path, &v);
        let oracle = extremality_oracle(&path, &v, 1e-9, 1);
        println!("  support {support:?} ({label}): pure = {pure}, extremality search = {oracle}");
    }

    // On the identity relation every multi-point support splits.
    let v = VectorState::uniform_on(3, &[0, 1, 2]).unwrap();
    println!(
        "\nidentity relation, uniform vector: pure = {}, search = {}",
        is_pure_restricted(&id, &v),
        extremality_oracle(&id, &v, 1e-9, 2)
    );

    // The split is explicit: the restricted functional decomposes along
    // the closure classes of the support.
    let phi = restrict_vector_state(&id, &v);
    println!("restricted representative (diagonal only):");
    for i in 0..3 {
        print!("  {:.4}", phi.rep()[(i, i)].re);
    }
    println!("\n  = (1/3) * (pure state at 0) + (1/3) * (at 1) + (1/3) * (at 2)");

    // Random phases don't change any of this: purity is a property of the
    // support alone.
    let mut rng = seeded_rng(3, 0);
    let v = VectorState::random_on_support(3, &[0, 2], &mut rng);
    println!(
        "\nrandom-phase vector on the far pair: pure = {}, search = {}",
        is_pure_restricted(&path, &v),
        extremality_oracle(&path, &v, 1e-9, 3)
    );
}
