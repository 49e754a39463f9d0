//! The graph depends on the point order but its guarantees do not: every
//! order keeps the Fano graph triangle-free with a 7-vertex greedy set.
//!
//! ```text
//! cargo run --example point_orders
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    let fano = projective_plane(2)?;
    for seed in 0..10 {
        let od = OrderedDesign::shuffled(fano.clone(), seed);
        let g = build_gamma(&od)?;
        let alpha = exact_max_independent_set(&g, 64)?.len();
        println!(
            "order {:?}: edges={} greedy={} alpha={alpha} triangle-free={}",
            od.order(),
            g.edge_count(),
            greedy_independent_set(&od, &g).len(),
            check_clique_free(&g, 3).is_none(),
        );
    }
    Ok(())
}
