//! The incidence graph of an ordered packing and its clique check.
//!
//! Vertices are incidence pairs `(x, B)`. Two pairs `(x, B₁)` and `(y, B₂)`
//! are adjacent when `B₁ ≠ B₂` and the smaller of the two points (under the
//! chosen order) lies in the other pair's block. A packing of strength
//! `m − 1` yields a graph with no `m`-clique.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::design::{is_permutation, validate_packing, Design};
use crate::error::{Error, Result};

/// Undirected simple graph stored as fixed-width adjacency bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Hand-built graph from an edge list. Self-loops are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        if u == v {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

impl AsRef<BitGraph> for BitGraph {
    fn as_ref(&self) -> &BitGraph {
        self
    }
}

/// Iterates the set bit positions of a bitset, ascending.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

pub(crate) fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .position(|&w| w != 0)
        .map(|wi| wi * 64 + words[wi].trailing_zeros() as usize)
}

/// A design together with a strict total order on its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedDesign {
    design: Design,
    /// `order[i]` is the i-th smallest point.
    order: Vec<usize>,
    /// `rank[x]` is the position of `x` in `order`.
    rank: Vec<usize>,
}

impl OrderedDesign {
    pub fn new(design: Design, order: Vec<usize>) -> Result<Self> {
        if !is_permutation(&order, design.point_count()) {
            return Err(Error::BadOrder(design.point_count()));
        }
        let mut rank = vec![0; order.len()];
        for (i, &x) in order.iter().enumerate() {
            rank[x] = i;
        }
        Ok(OrderedDesign {
            design,
            order,
            rank,
        })
    }

    /// Points ordered by id.
    pub fn by_id(design: Design) -> Self {
        let order: Vec<usize> = (0..design.point_count()).collect();
        OrderedDesign::new(design, order).expect("identity is a permutation")
    }

    /// Points in a seeded uniformly random order.
    pub fn shuffled(design: Design, seed: u64) -> Self {
        let mut order: Vec<usize> = (0..design.point_count()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        OrderedDesign::new(design, order).expect("shuffle is a permutation")
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, point: usize) -> usize {
        self.rank[point]
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.rank[x] < self.rank[y]
    }
}

/// An incidence pair: a point id and the index of a block containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub point: usize,
    pub block: usize,
}

#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    vertices: Vec<Incidence>,
    adjacency: BitGraph,
    m: usize,
}

impl AsRef<BitGraph> for IncidenceGraph {
    fn as_ref(&self) -> &BitGraph {
        &self.adjacency
    }
}

impl IncidenceGraph {
    pub fn vertices(&self) -> &[Incidence] {
        &self.vertices
    }

    pub fn adjacency(&self) -> &BitGraph {
        &self.adjacency
    }

    /// Clique parameter: the graph has no `m`-clique when built from a valid packing.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.edge_count()
    }

    pub fn index_of(&self, inc: Incidence) -> Option<usize> {
        self.vertices.iter().position(|&v| v == inc)
    }

    /// Builds the graph without checking the packing conditions. The result
    /// follows the same edge rule but carries no clique-freeness guarantee.
    pub fn build_unchecked(od: &OrderedDesign) -> IncidenceGraph {
        let design = od.design();
        let point_blocks = design.point_blocks();

        let mut vertices: Vec<Incidence> = od
            .order()
            .iter()
            .flat_map(|&x| {
                point_blocks[x]
                    .iter()
                    .map(move |&b| Incidence { point: x, block: b })
            })
            .collect();
        // Already sorted by (rank, block); keep the invariant explicit.
        vertices.sort_by_key(|v| (od.rank(v.point), v.block));

        // index[x] holds the vertex indices of point x, aligned with point_blocks[x].
        let mut index: Vec<Vec<usize>> = vec![Vec::new(); design.point_count()];
        for (vi, v) in vertices.iter().enumerate() {
            index[v.point].push(vi);
        }

        let mut adjacency = BitGraph::new(vertices.len());
        // (x, B₁) ~ (y, B₂) with x < y, x ∈ B₂, B₁ ≠ B₂.
        for x in 0..design.point_count() {
            for &b2 in &point_blocks[x] {
                for &y in &design.blocks()[b2] {
                    if !od.less(x, y) {
                        continue;
                    }
                    let y_vertex = index[y][point_blocks[y].binary_search(&b2).unwrap()];
                    for (j1, &b1) in point_blocks[x].iter().enumerate() {
                        if b1 != b2 {
                            adjacency.add_edge(index[x][j1], y_vertex);
                        }
                    }
                }
            }
        }
        IncidenceGraph {
            vertices,
            adjacency,
            m: design.strength() + 1,
        }
    }
}

/// Builds the incidence graph of a valid packing.
pub fn build_gamma(od: &OrderedDesign) -> Result<IncidenceGraph> {
    let report = validate_packing(od.design());
    if !report.valid() {
        return Err(Error::InvalidPacking(report.violations[0].to_string()));
    }
    Ok(IncidenceGraph::build_unchecked(od))
}

/// Exhaustive search for an `m`-clique. Returns the lexicographically first
/// clique (ascending vertex indices), or `None` when the graph is `m`-clique-free.
pub fn check_clique_free(g: impl AsRef<BitGraph>, m: usize) -> Option<Vec<usize>> {
    let g = g.as_ref();
    if m == 0 {
        return Some(Vec::new());
    }
    if m == 3 {
        return find_triangle(g);
    }
    let mut stack = Vec::with_capacity(m);
    let all: Vec<u64> = full_set(g.vertex_count(), g.words());
    if extend_clique(g, &all, m, &mut stack) {
        Some(stack)
    } else {
        None
    }
}

fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut s = vec![0u64; words];
    for v in 0..n {
        s[v / 64] |= 1 << (v % 64);
    }
    s
}

/// Triangle scan: for each edge `u < v`, the first common neighbour above `v`.
fn find_triangle(g: &BitGraph) -> Option<Vec<usize>> {
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            let w = bits(&common).find(|&w| w > v);
            if let Some(w) = w {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

/// Depth-first clique extension restricted to `candidates`, which only holds
/// vertices above the last vertex on `stack` and adjacent to all of it.
fn extend_clique(g: &BitGraph, candidates: &[u64], m: usize, stack: &mut Vec<usize>) -> bool {
    if stack.len() == m {
        return true;
    }
    let need = m - stack.len();
    let available: usize = candidates.iter().map(|w| w.count_ones() as usize).sum();
    if available < need {
        return false;
    }
    for v in bits(candidates).collect::<Vec<_>>() {
        let mut next: Vec<u64> = candidates
            .iter()
            .zip(g.row(v))
            .map(|(a, b)| a & b)
            .collect();
        clear_through(&mut next, v);
        stack.push(v);
        if extend_clique(g, &next, m, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

/// Clears bits `0..=v`.
fn clear_through(set: &mut [u64], v: usize) {
    let full = ((v + 1) / 64).min(set.len());
    for w in &mut set[..full] {
        *w = 0;
    }
    if full < set.len() && !(v + 1).is_multiple_of(64) {
        set[full] &= !((1u64 << ((v + 1) % 64)) - 1);
    }
}

/// Graph export formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    EdgeJson,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(ExportFormat::Dimacs),
            "edge-json" => Ok(ExportFormat::EdgeJson),
            other => Err(Error::Usage(format!("unsupported graph format {other:?}"))),
        }
    }
}

/// Serializes the edge set. DIMACS is 1-based (`p edge n m`, then `e u v`);
/// edge-json is 0-based `{"n":…,"edges":[[u,v],…]}`. Edges appear once,
/// `u < v`, ascending.
pub fn export_graph(g: impl AsRef<BitGraph>, format: ExportFormat) -> Vec<u8> {
    use std::fmt::Write;
    let g = g.as_ref();
    let mut out = String::new();
    match format {
        ExportFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        ExportFormat::EdgeJson => {
            write!(out, "{{\"n\":{},\"edges\":[", g.vertex_count()).unwrap();
            for (i, (u, v)) in g.edges().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write!(out, "[{u},{v}]").unwrap();
            }
            out.push_str("]}");
        }
    }
    out.into_bytes()
}
