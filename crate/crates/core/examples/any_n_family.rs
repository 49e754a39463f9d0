//! Triangle-free graphs with any number of vertices, cut out of an affine
//! plane. Prints the chosen parameters and the resulting bounds.
//!
//! ```text
//! cargo run --example any_n_family -- 10 100 1000
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    let ns: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("vertex count"))
        .collect();
    let ns = if ns.is_empty() {
        vec![1, 10, 12, 100, 1000]
    } else {
        ns
    };

    for n in ns {
        let (design, trace) = trim_to_n(n)?;
        let od = OrderedDesign::by_id(design);
        let g = build_gamma(&od)?;
        let greedy = greedy_independent_set(&od, &g);
        let upper = upper_bound_alpha(od.design());
        println!(
            "n={n}: k={} p={} removed={} |A'|={} |B'|={} greedy={} upper={} triangle-free={}",
            trace.k,
            trace.p,
            trace.removed.len(),
            od.design().point_count(),
            od.design().block_count(),
            greedy.len(),
            upper,
            check_clique_free(&g, 3).is_none(),
        );
    }
    Ok(())
}
