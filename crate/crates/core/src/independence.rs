//! Independent sets and independence-number bounds for incidence graphs.
//!
//! Lower bounds come from two explicit sets: the greedy set with one vertex
//! per block and the full fibre of a largest block. The upper bound is
//! `|A| + |B|`. An exact branch-and-bound solver is provided for graphs that
//! fit a vertex budget.

use serde::Serialize;

use crate::design::{incidence_count, Design};
use crate::error::{Error, Result};
use crate::graph::{bits, first_bit, BitGraph, IncidenceGraph, OrderedDesign};

/// Default vertex budget for [`exact_max_independent_set`].
pub const DEFAULT_EXACT_BUDGET: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetSource {
    Greedy,
    Block,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    /// Ascending vertex indices.
    pub vertices: Vec<usize>,
    pub source: SetSource,
}

impl IndependentSet {
    fn new(mut vertices: Vec<usize>, source: SetSource) -> Self {
        vertices.sort_unstable();
        IndependentSet { vertices, source }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A non-negative fraction kept exactly as computed (not reduced).
/// Equality and ordering compare values, not representations.
#[derive(Clone, Copy, Debug, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Fraction { num, den }
    }

    pub fn reduced(self) -> Fraction {
        let g = gcd(self.num, self.den).max(1);
        Fraction::new(self.num / g, self.den / g)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// One vertex per block: walk points in ascending order and take every pair
/// `(x, B)` whose block `B` is still live, then retire those blocks. Points
/// in no live block are skipped. Linear in the number of incidences.
pub fn greedy_independent_set(od: &OrderedDesign, g: &IncidenceGraph) -> IndependentSet {
    let design = od.design();
    // Vertices are sorted by (rank, block), so each point's pairs are contiguous.
    let mut start = vec![0usize; design.point_count() + 1];
    for v in g.vertices() {
        start[od.rank(v.point) + 1] += 1;
    }
    for i in 0..design.point_count() {
        start[i + 1] += start[i];
    }
    let mut live = vec![true; design.block_count()];
    let mut remaining = design.block_count();
    let mut chosen = Vec::with_capacity(remaining);
    for r in 0..design.point_count() {
        if remaining == 0 {
            break;
        }
        for vi in start[r]..start[r + 1] {
            let b = g.vertices()[vi].block;
            if live[b] {
                live[b] = false;
                remaining -= 1;
                chosen.push(vi);
            }
        }
    }
    IndependentSet::new(chosen, SetSource::Greedy)
}

/// All incidence pairs of the first block of maximum size.
pub fn largest_block_set(design: &Design, g: &IncidenceGraph) -> IndependentSet {
    let best = design
        .blocks()
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
        .map(|(i, _)| i);
    let chosen = match best {
        Some(b) => g
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.block == b)
            .map(|(i, _)| i)
            .collect(),
        None => Vec::new(),
    };
    IndependentSet::new(chosen, SetSource::Block)
}

/// True iff no two members of `s` are adjacent.
pub fn verify_independent(g: impl AsRef<BitGraph>, s: &IndependentSet) -> bool {
    let g = g.as_ref();
    s.vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| s.vertices[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// `|A| + |B|`.
pub fn upper_bound_alpha(design: &Design) -> usize {
    design.point_count() + design.block_count()
}

/// `Σ|B| / (|A| + |B|)`, unreduced.
pub fn chromatic_lower_bound(design: &Design) -> Fraction {
    Fraction::new(
        incidence_count(design) as u64,
        upper_bound_alpha(design) as u64,
    )
}

/// `∛(2n²) − (2/3)·∛n`, a lower bound on `|A| + |B|` for any strength-2
/// packing with `n` incidences.
pub fn ravsky_lower_bound(n: usize) -> f64 {
    let n = n as f64;
    (2.0 * n * n).cbrt() - 2.0 / 3.0 * n.cbrt()
}

/// Integer form of the incidence inequality: `a·(b² − b + n) ≥ n²`.
pub fn ravsky_quadratic_check(design: &Design) -> bool {
    let a = design.point_count() as u128;
    let b = design.block_count() as u128;
    let n = incidence_count(design) as u128;
    a * (b * b - b + n) >= n * n
}

/// Maximum independent set by branch and bound.
///
/// Branches on a maximum-degree vertex (lowest index on ties), taking it
/// first, and prunes with a greedy clique-cover bound. Vertices of degree
/// 0 or 1 in the remaining subgraph are taken without branching.
pub fn exact_max_independent_set(
    g: impl AsRef<BitGraph>,
    vertex_budget: usize,
) -> Result<IndependentSet> {
    let g = g.as_ref();
    if g.vertex_count() > vertex_budget {
        return Err(Error::BudgetExceeded {
            vertices: g.vertex_count(),
            budget: vertex_budget,
        });
    }
    let mut all = vec![0u64; g.words()];
    for v in 0..g.vertex_count() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut solver = Solver {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    solver.search(all);
    Ok(IndependentSet::new(solver.best, SetSource::Exact))
}

struct Solver<'a> {
    g: &'a BitGraph,
    best: Vec<usize>,
    current: Vec<usize>,
}

fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn remove(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1 << (v % 64));
}

fn degree_in(g: &BitGraph, v: usize, set: &[u64]) -> usize {
    g.row(v)
        .iter()
        .zip(set)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

fn remove_closed_neighborhood(g: &BitGraph, set: &mut [u64], v: usize) {
    for (s, r) in set.iter_mut().zip(g.row(v)) {
        *s &= !r;
    }
    remove(set, v);
}

impl Solver<'_> {
    fn search(&mut self, mut cand: Vec<u64>) {
        let saved = self.current.len();
        // Degree ≤ 1 vertices belong to some maximum independent set.
        loop {
            let low = bits(&cand).find(|&v| degree_in(self.g, v, &cand) <= 1);
            match low {
                Some(v) => {
                    self.current.push(v);
                    remove_closed_neighborhood(self.g, &mut cand, v);
                }
                None => break,
            }
        }
        if count(&cand) == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(saved);
            return;
        }
        if self.current.len() + self.clique_cover(&cand) <= self.best.len() {
            self.current.truncate(saved);
            return;
        }
        let mut pivot = usize::MAX;
        let mut pivot_degree = 0;
        for v in bits(&cand) {
            let d = degree_in(self.g, v, &cand);
            if pivot == usize::MAX || d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }

        let mut with = cand.clone();
        remove_closed_neighborhood(self.g, &mut with, pivot);
        self.current.push(pivot);
        self.search(with);
        self.current.pop();

        remove(&mut cand, pivot);
        self.search(cand);
        self.current.truncate(saved);
    }

    /// Number of cliques in a greedy partition of `cand`; bounds its
    /// independence number from above.
    fn clique_cover(&self, cand: &[u64]) -> usize {
        let mut rest = cand.to_vec();
        let mut cliques = 0;
        while let Some(v) = first_bit(&rest) {
            remove(&mut rest, v);
            let mut grow: Vec<u64> = rest.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            while let Some(u) = first_bit(&grow) {
                remove(&mut rest, u);
                for (gw, r) in grow.iter_mut().zip(self.g.row(u)) {
                    *gw &= r;
                }
            }
            cliques += 1;
        }
        cliques
    }
}

/// Every bound computed for one ordered design. Serialized field order is
/// the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub family: String,
    pub param: String,
    pub order_seed: Option<u64>,
    pub n_vertices: usize,
    pub a: usize,
    pub b: usize,
    pub greedy: usize,
    pub block: usize,
    pub exact: Option<usize>,
    pub upper: usize,
    pub chromatic_lb_num: u64,
    pub chromatic_lb_den: u64,
    pub ravsky_lb: f64,
}

impl BoundsReport {
    /// Builds the graph and delegates to [`BoundsReport::from_graph`].
    pub fn compute(
        od: &OrderedDesign,
        family: &str,
        param: &str,
        order_seed: Option<u64>,
        exact_budget: usize,
    ) -> Result<BoundsReport> {
        let g = crate::graph::build_gamma(od)?;
        Self::from_graph(od, &g, family, param, order_seed, exact_budget)
    }

    /// Both constructive sets (verified independent), the closed-form bounds
    /// and, when the graph fits `exact_budget`, the exact α.
    pub fn from_graph(
        od: &OrderedDesign,
        g: &IncidenceGraph,
        family: &str,
        param: &str,
        order_seed: Option<u64>,
        exact_budget: usize,
    ) -> Result<BoundsReport> {
        let design = od.design();
        let greedy = greedy_independent_set(od, g);
        let block = largest_block_set(design, g);
        for set in [&greedy, &block] {
            if !verify_independent(g, set) {
                return Err(Error::InvalidPacking(format!(
                    "{:?} set is not independent",
                    set.source
                )));
            }
        }
        let exact = if g.vertex_count() <= exact_budget {
            Some(exact_max_independent_set(g, exact_budget)?.len())
        } else {
            None
        };
        let chi = chromatic_lower_bound(design);
        Ok(BoundsReport {
            family: family.to_string(),
            param: param.to_string(),
            order_seed,
            n_vertices: g.vertex_count(),
            a: design.point_count(),
            b: design.block_count(),
            greedy: greedy.len(),
            block: block.len(),
            exact,
            upper: upper_bound_alpha(design),
            chromatic_lb_num: chi.num,
            chromatic_lb_den: chi.den,
            ravsky_lb: ravsky_lower_bound(incidence_count(design)),
        })
    }

    /// Lists every broken sandwich relation (empty when consistent).
    pub fn sandwich_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.greedy != self.b {
            out.push(format!("greedy {} != |B| {}", self.greedy, self.b));
        }
        if self.greedy > self.upper {
            out.push(format!("greedy {} > upper {}", self.greedy, self.upper));
        }
        if let Some(e) = self.exact {
            if self.block > e {
                out.push(format!("block {} > exact {e}", self.block));
            }
            if self.greedy > e {
                out.push(format!("greedy {} > exact {e}", self.greedy));
            }
            if e > self.upper {
                out.push(format!("exact {e} > upper {}", self.upper));
            }
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

/// Writes report rows as CSV with a header line.
pub fn write_csv<W: std::io::Write>(rows: &[BoundsReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    if rows.is_empty() {
        w.write_record(CSV_HEADER)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes report rows as JSON Lines, one object per row.
pub fn write_json_lines<W: std::io::Write>(rows: &[BoundsReport], mut out: W) -> Result<()> {
    for r in rows {
        writeln!(out, "{}", r.to_json()?)?;
    }
    Ok(())
}

pub const CSV_HEADER: [&str; 13] = [
    "family",
    "param",
    "order_seed",
    "n_vertices",
    "a",
    "b",
    "greedy",
    "block",
    "exact",
    "upper",
    "chromatic_lb_num",
    "chromatic_lb_den",
    "ravsky_lb",
];
