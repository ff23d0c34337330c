//! Tolerance relations as combinatorial objects: composition, closure,
//! connectivity, and diameter.
//!
//! ```bash
//! cargo run --example relation_basics
//! ```

use tolsys::Relation;

fn main() {
    // The 3-point path: 1 ~ 2 ~ 3, but 1 !~ 3. Reflexive, symmetric, not
    // transitive -- the smallest interesting tolerance relation.
    let path = Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    println!("path relation: {path:?}");
    println!("transitive: {}", path.is_transitive());

    // Composing the path with itself reaches the far pair through the
    // midpoint, giving the full relation.
    let squared = path.compose(&path).unwrap();
    println!("\npath composed with itself:\n{squared:?}");

    // Raw composition of two different relations need not be symmetric.
    let left = Relation::from_edges(3, &[(0, 1)]).unwrap();
    let right = Relation::from_edges(3, &[(1, 2)]).unwrap();
    let raw = left.compose(&right).unwrap();
    println!("asymmetric raw composition (0->2 but not 2->0):\n{raw:?}");
    let symmetrized = left.symmetrized_compose(&right).unwrap();
    println!("symmetrized composition: {symmetrized:?}");

    // The transitive closure and its equivalence classes.
    let two_parts = Relation::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
    let (closure, classes) = two_parts.transitive_closure();
    println!("\nrelation {two_parts:?}");
    println!("closure classes: {classes:?}");
    println!("closure is full: {}", closure.is_full());

    // Graph diameter; disconnected relations have none.
    println!("\ndiameter of the path: {:?}", path.diameter());
    println!("diameter of the split relation: {:?}", two_parts.diameter());
    let cycle = tolsys::invariants::circulant_band_relation(12, 1).unwrap();
    println!("diameter of the 12-cycle: {:?}", cycle.diameter());
}
