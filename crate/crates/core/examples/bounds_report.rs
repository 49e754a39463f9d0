//! A CSV bounds report covering every family, as `analyze` would emit it.
//!
//! ```text
//! cargo run --example bounds_report
//! ```

use ramsey_forge::independence::write_csv;
use ramsey_forge::*;

fn main() -> Result<()> {
    let designs = vec![
        ("projective", "2", projective_plane(2)?),
        ("projective", "3", projective_plane(3)?),
        ("affine", "3", affine_plane(3)?),
        ("grid", "2", grid_line_design(2)?),
        ("trim", "50", trim_to_n(50)?.0),
        ("random", "9:3:2:8:4", random_packing(9, 3, 2, 8, 4)?),
    ];
    let mut rows = Vec::new();
    for (family, param, d) in designs {
        let od = OrderedDesign::by_id(d);
        rows.push(BoundsReport::compute(&od, family, param, None, 64)?);
    }
    write_csv(&rows, std::io::stdout())?;
    Ok(())
}
