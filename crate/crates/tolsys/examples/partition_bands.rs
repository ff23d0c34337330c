//! Interval partitions and the two band conventions.
//!
//! Partitioning `[0,1)` into `p` half-open cells and relating cells whose
//! rectangle fits inside `R_eps` gives the band `max{m : (m+1)/p <= eps}`;
//! thresholding point distances on the grid gives `max{m : m/p < eps}`.
//! The two differ by exactly one except at integer boundaries of `eps·p`,
//! which is why both are exposed under explicit names, with exact decimal
//! threshold comparisons.
//!
//! ```bash
//! cargo run --example partition_bands
//! ```

use tolsys::invariants::propagation_number;
use tolsys::metric::{interval_point_band, partition_relation, Eps};

fn main() {
    let p = 10;
    println!("p = {p} cells; cell band vs point band across thresholds\n");
    println!("  eps     cell band  point band  note");
    for text in ["0.11", "0.15", "0.2", "0.25", "0.3", "0.35", "0.4", "1.1"] {
        let eps = Eps::parse_decimal(text).unwrap();
        let (_, cell) = partition_relation(p, &eps).unwrap();
        let point = interval_point_band(p, &eps);
        let note = if cell == point {
            "integer boundary: conventions agree"
        } else {
            ""
        };
        println!("  {text:<6}  {cell:9}  {point:10}  {note}");
    }

    // The exact-decimal comparison matters precisely at the boundaries:
    // the double nearest to 0.3 is *below* 3/10, so a float threshold
    // excludes the m = 2 cell pair that the decimal 0.3 admits.
    let exact = partition_relation(p, &Eps::parse_decimal("0.3").unwrap())
        .unwrap()
        .1;
    let float = partition_relation(p, &Eps::Float(0.3)).unwrap().1;
    println!("\neps = 0.3 exactly: cell band {exact}");
    println!("eps = nearest double to 0.3: cell band {float}");

    // The cell relation is the band operator system of the partition.
    println!("\npropagation of the partition relation at p = 10:");
    for text in ["0.11", "0.25", "0.45"] {
        let eps = Eps::parse_decimal(text).unwrap();
        let (relation, band) = partition_relation(p, &eps).unwrap();
        println!(
            "  eps = {text:<5} band {band}: propagation {}",
            propagation_number(&relation).overall
        );
    }
}
