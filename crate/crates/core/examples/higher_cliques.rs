//! Strength-3 and strength-4 random packings give K4-free and K5-free
//! graphs. Triangles do appear, so the bound is tight in that sense.
//!
//! ```text
//! cargo run --example higher_cliques
//! ```

use ramsey_forge::*;

fn main() -> Result<()> {
    for (strength, block_size) in [(3usize, 4usize), (4, 5)] {
        let m = strength + 1;
        for seed in 0..4 {
            let d = random_packing(12, block_size, strength, 12, seed)?;
            assert!(validate_packing(&d).valid());
            let g = build_gamma(&OrderedDesign::by_id(d))?;
            println!(
                "strength {strength} seed {seed}: {} vertices, K{} found: {}, K{m} found: {}",
                g.vertex_count(),
                m - 1,
                check_clique_free(&g, m - 1).is_some(),
                check_clique_free(&g, m).is_some(),
            );
        }
    }
    Ok(())
}
