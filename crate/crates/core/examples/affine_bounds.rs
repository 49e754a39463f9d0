//! Independence bounds of affine-plane graphs: greedy lower bound, exact
//! value where it fits the solver budget, and the |A|+|B| ceiling.
//!
//! ```text
//! cargo run --example affine_bounds
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    println!(
        "{:>3} {:>9} {:>7} {:>6} {:>6} {:>9}",
        "p", "vertices", "greedy", "exact", "upper", "chi >="
    );
    for p in [2u64, 3, 5, 7] {
        let od = OrderedDesign::by_id(affine_plane(p)?);
        let g = build_gamma(&od)?;
        let greedy = greedy_independent_set(&od, &g);
        let exact = match exact_max_independent_set(&g, 64) {
            Ok(s) => s.len().to_string(),
            Err(_) => "-".into(),
        };
        let chi = chromatic_lower_bound(od.design()).reduced();
        println!(
            "{p:>3} {:>9} {:>7} {exact:>6} {:>6} {chi:>9}",
            g.vertex_count(),
            greedy.len(),
            upper_bound_alpha(od.design()),
        );
    }
    Ok(())
}
