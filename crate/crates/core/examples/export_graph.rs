//! Writes an incidence graph as DIMACS (default) or edge-json to stdout.
//!
//! ```text
//! cargo run --example export_graph -- 3 edge-json
//! ```

use std::io::Write;

use ramsey_forge::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map(|a| a.parse().expect("prime")).unwrap_or(2);
    let format: ExportFormat = args.next().as_deref().unwrap_or("dimacs").parse()?;
    let g = build_gamma(&OrderedDesign::by_id(projective_plane(p)?))?;
    std::io::stdout().write_all(&export_graph(&g, format))?;
    Ok(())
}
