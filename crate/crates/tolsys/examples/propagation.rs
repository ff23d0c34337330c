//! Propagation number three ways: graph diameter, brute-force support
//! oracle, and closed forms for the band and circulant families.
//!
//! The propagation number of the operator system of a connected relation
//! is the number of products needed before the spanned space closes into
//! the full matrix algebra; it equals the graph diameter. The support
//! oracle iterates boolean self-composition until the pattern is closed
//! under products and never consults the graph metric.
//!
//! ```bash
//! cargo run --example propagation
//! ```

use tolsys::invariants::{
    band_diameter, band_relation, circulant_band_relation, circulant_diameter,
    cstar_envelope_blocks, propagation_number,
};
use tolsys::opsys::generated_algebra_degree;
use tolsys::verify::{random_connected_relation, seeded_rng};

fn main() {
    println!("random connected relations: diameter vs support oracle");
    let mut rng = seeded_rng(7, 0);
    for n in [4usize, 6, 8] {
        for _ in 0..3 {
            let r = random_connected_relation(n, 0.35, &mut rng);
            let prop = propagation_number(&r);
            let (degree, blocks) = generated_algebra_degree(&r);
            println!(
                "  n={n} edges={:2}  propagation={} oracle={degree} blocks={blocks:?}",
                r.edges().len(),
                prop.overall,
            );
            assert_eq!(prop.overall, degree);
        }
    }

    // Disconnected case: per-component diameters, algebra block structure.
    let split = tolsys::Relation::from_edges(7, &[(0, 1), (1, 2), (2, 3), (5, 6)]).unwrap();
    let prop = propagation_number(&split);
    println!(
        "\ndisconnected example: per-component {:?}, overall {}, blocks {:?}",
        prop.per_component,
        prop.overall,
        cstar_envelope_blocks(&split)
    );

    println!("\nband family E(p, N): oracle vs ceil((p-1)/N) vs ceil(p/N)");
    println!("  p  N  oracle  ceil((p-1)/N)  ceil(p/N)");
    for p in [4usize, 5, 8, 10] {
        for width in [1usize, 2, 3] {
            if width >= p {
                continue;
            }
            let r = band_relation(p, width).unwrap();
            let (oracle, _) = generated_algebra_degree(&r);
            let diam = band_diameter(p, width);
            let ceil_pn = (p as u32).div_ceil(width as u32);
            let flag = if ceil_pn != oracle {
                "  <- ceil(p/N) differs"
            } else {
                ""
            };
            println!("  {p}  {width}  {oracle:6}  {diam:13}  {ceil_pn:9}{flag}");
        }
    }

    println!("\ncirculant family on C_m: oracle vs ceil(floor(m/2)/N)");
    for m in [6usize, 9, 12] {
        for width in 1..=3usize.min(m / 2) {
            let r = circulant_band_relation(m, width).unwrap();
            let (oracle, _) = generated_algebra_degree(&r);
            println!(
                "  m={m:2} N={width}: oracle {oracle}, closed form {}",
                circulant_diameter(m, width)
            );
        }
    }
}
