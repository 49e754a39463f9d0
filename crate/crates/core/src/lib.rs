//! Clique-free incidence graphs built from balanced packings.
//!
//! A packing of strength `m − 1` (no `m − 1` points together in two blocks)
//! plus a total order on its points gives a graph on incidence pairs with no
//! `m`-clique and independence number between `|B|` and `|A| + |B|`. The
//! crate builds the classical families (projective and affine planes over
//! prime fields, integer grid lines, trimmed affine planes with any vertex
//! count), the graphs themselves, and every bound with an exact check.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod constructions;
pub mod design;
pub mod error;
pub mod field;
pub mod graph;
pub mod independence;
pub mod primes;

pub use constructions::{
    affine_plane, grid_line_design, projective_plane, random_packing, trim_to_n, TrimTrace,
};
pub use design::{
    fisher_holds, incidence_count, is_pairwise_balanced, is_steiner, rectangle_free,
    validate_packing, Design, ValidationReport, Violation,
};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use graph::{
    build_gamma, check_clique_free, export_graph, BitGraph, ExportFormat, Incidence,
    IncidenceGraph, OrderedDesign,
};
pub use independence::{
    chromatic_lower_bound, exact_max_independent_set, greedy_independent_set, largest_block_set,
    ravsky_lower_bound, ravsky_quadratic_check, upper_bound_alpha, verify_independent,
    BoundsReport, Fraction, IndependentSet, SetSource,
};
pub use primes::smallest_prime_in;
