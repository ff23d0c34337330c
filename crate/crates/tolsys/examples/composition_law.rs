//! The composition law for threshold relations: on a path metric space,
//! `R_eps1 * R_eps2 = R_{eps1+eps2}`. A finite metric only approximates
//! this; the checker reports exactly which pairs lack an eps-midpoint.
//!
//! ```bash
//! cargo run --example composition_law
//! ```

use tolsys::metric::{circle_metric, composition_law_check, graph_metric};
use tolsys::verify::CIRCLE_COMPOSITION_PAIRS;

fn main() {
    let metric = circle_metric(1000).unwrap();

    println!("fine circle, thresholds chosen away from grid boundaries:");
    for &(eps1, eps2) in CIRCLE_COMPOSITION_PAIRS.iter().take(5) {
        let check = composition_law_check(&metric, eps1, eps2);
        println!(
            "  R_{eps1} * R_{eps2} == R_{}: {}",
            eps1 + eps2,
            check.holds
        );
    }

    // At an integer grid boundary the outermost pairs of R_{eps1+eps2}
    // have no exact midpoint among the 1000 sample points: the law fails
    // by exactly one ring of pairs.
    let check = composition_law_check(&metric, 0.1, 0.1);
    println!(
        "\nboundary case R_0.1 * R_0.1 vs R_0.2: holds = {}, {} missing pairs",
        check.holds,
        check.missing_pairs.len()
    );
    let (i, j) = check.missing_pairs[0];
    let d = i.abs_diff(j);
    println!(
        "  first missing pair ({i}, {j}) at circular distance {}",
        d.min(1000 - d)
    );

    // Two points at distance 1 cannot be bridged at all below the
    // distance: the canonical counterexample.
    let two = graph_metric(2, &[(0, 1, 1.0)]).unwrap();
    let check = composition_law_check(&two, 0.6, 0.6);
    println!(
        "\ntwo points at distance 1, eps = 0.6 twice: holds = {}, missing = {:?}",
        check.holds, check.missing_pairs
    );

    // The inclusion direction is unconditional.
    println!(
        "extra pairs (would violate inclusion): {:?}",
        check.extra_pairs
    );
}
