//! A metric space seen at finite resolution: the relation `d(x, y) < eps`
//! on a 1000-point discretization of the unit circle.
//!
//! For a path metric space the propagation number of the resulting
//! operator system is `ceil(diameter / eps)` -- the number of eps-steps
//! needed to cross the space. The discretized circle reproduces the
//! formula exactly at these thresholds.
//!
//! ```bash
//! cargo run --example circle_resolution
//! ```

use tolsys::invariants::prop_from_metric_theorem;
use tolsys::metric::{circle_metric, graph_metric};

fn main() {
    let p = 1000;
    let metric = circle_metric(p).unwrap();
    println!(
        "discretized circle: {p} points, circumference 1, metric diameter {}",
        metric.diameter_value()
    );
    println!("\n  eps    band N   predicted ceil(0.5/eps)   computed   agree");
    for eps in [0.3, 0.21, 0.11, 0.07, 0.052] {
        let relation = metric.epsilon_relation(eps);
        let width = relation.circulant_band_width().unwrap();
        let check = prop_from_metric_theorem(&metric, eps).unwrap();
        println!(
            "  {eps:<5}  {width:6}   {:23}   {:8}   {}",
            check.predicted, check.actual, check.agrees
        );
    }

    // A graph metric with unit edges is NOT a path metric below the edge
    // scale: there are no midpoints, and the formula overshoots.
    let hexagon = graph_metric(
        6,
        &[
            (0, 1, 1.0),
            (1, 2, 1.0),
            (2, 3, 1.0),
            (3, 4, 1.0),
            (4, 5, 1.0),
            (5, 0, 1.0),
        ],
    )
    .unwrap();
    let check = prop_from_metric_theorem(&hexagon, 1.5).unwrap();
    println!(
        "\nunit-edge hexagon at eps = 1.5: predicted {}, computed {}, agree: {}",
        check.predicted, check.actual, check.agrees
    );
    println!("(sub-edge thresholds see no midpoints, so the path-metric formula fails)");
}
