//! The order-2 projective plane end to end: build it, check the packing
//! conditions, build the incidence graph and confirm it is triangle-free.
//!
//! ```text
//! cargo run --example fano_plane
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    let fano = projective_plane(2)?;
    println!("points: {}", fano.point_count());
    for (i, block) in fano.blocks().iter().enumerate() {
        let labels: Vec<String> = block.iter().map(|&x| fano.label(x)).collect();
        println!("  line {i}: {}", labels.join(" "));
    }

    let report = validate_packing(&fano);
    println!("valid packing: {}", report.valid());
    println!("Steiner S(2,3,7): {}", is_steiner(&fano, 3));

    let od = OrderedDesign::by_id(fano);
    let g = build_gamma(&od)?;
    println!(
        "graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    match check_clique_free(&g, 3) {
        None => println!("triangle-free: yes"),
        Some(t) => println!("triangle found: {t:?}"),
    }
    Ok(())
}
