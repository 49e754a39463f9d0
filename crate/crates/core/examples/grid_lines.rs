//! Integer lines on an N × 2N² grid: N³ lines of N points each, so the
//! graph has N⁴ vertices and the greedy set has exactly N³ of them.
//!
//! ```text
//! cargo run --example grid_lines
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    for n in 1..=5 {
        let d = grid_line_design(n)?;
        let od = OrderedDesign::by_id(d);
        let g = build_gamma(&od)?;
        let greedy = greedy_independent_set(&od, &g).len();
        println!(
            "N={n}: points={} lines={} vertices={} greedy={} rectangle-free={} triangle-free={}",
            od.design().point_count(),
            od.design().block_count(),
            g.vertex_count(),
            greedy,
            rectangle_free(od.design()),
            check_clique_free(&g, 3).is_none(),
        );
    }
    Ok(())
}
