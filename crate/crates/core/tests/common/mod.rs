//! Independent oracles shared by the integration tests. Nothing here calls
//! into the graph builder or the solver it checks.
#![allow(dead_code)]

use ramsey_forge::{BitGraph, Design, OrderedDesign};

/// Incidence pairs `(point, block)` sorted by (order rank, block index),
/// collected by scanning blocks.
pub fn oracle_vertices(od: &OrderedDesign) -> Vec<(usize, usize)> {
    let d = od.design();
    let mut rank = vec![0; d.point_count()];
    for (i, &x) in od.order().iter().enumerate() {
        rank[x] = i;
    }
    let mut v: Vec<(usize, usize)> = d
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(b, pts)| pts.iter().map(move |&x| (x, b)))
        .collect();
    v.sort_by_key(|&(x, b)| (rank[x], b));
    v
}

/// The edge predicate evaluated literally, symmetrized.
pub fn edge_rule(od: &OrderedDesign, a: (usize, usize), b: (usize, usize)) -> bool {
    let d = od.design();
    let rank = |p: usize| od.order().iter().position(|&q| q == p).unwrap();
    let directed = |(x, b1): (usize, usize), (y, b2): (usize, usize)| {
        rank(x) < rank(y) && b1 != b2 && d.blocks()[b2].contains(&x)
    };
    directed(a, b) || directed(b, a)
}

/// All edges `(i, j)`, `i < j`, by checking every vertex pair.
pub fn oracle_edges(od: &OrderedDesign) -> Vec<(usize, usize)> {
    let v = oracle_vertices(od);
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if edge_rule(od, v[i], v[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// α by sweeping all `2^n` vertex subsets (`n ≤ 24`). `indep[mask]` is
/// derived from the mask without its lowest vertex.
pub fn alpha_by_enumeration(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!(n <= 24, "enumeration oracle limited to 24 vertices");
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut indep = vec![false; 1 << n];
    indep[0] = true;
    let mut best = 0;
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if indep[rest] && adj[low] & rest as u32 == 0 {
            indep[mask] = true;
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Edge list of a bit graph, read through `has_edge` only.
pub fn edges_of(g: &BitGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Does the graph contain a `k`-clique? Plain recursion over vertex subsets.
pub fn has_clique_brute(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    fn rec(adj: &[Vec<bool>], chosen: &mut Vec<usize>, start: usize, k: usize) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in start..adj.len() {
            if chosen.iter().all(|&u| adj[u][v]) {
                chosen.push(v);
                if rec(adj, chosen, v + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(&adj, &mut Vec::new(), 0, k)
}

/// Number of point pairs lying together in some block, by direct scan.
pub fn pairs_covered(d: &Design) -> usize {
    let mut count = 0;
    for x in 0..d.point_count() {
        for y in x + 1..d.point_count() {
            if d.blocks().iter().any(|b| b.contains(&x) && b.contains(&y)) {
                count += 1;
            }
        }
    }
    count
}

/// Random strength-2 packing whose graph has at most 20 vertices:
/// at most 12 incidences from accepted blocks plus at most 8 singletons.
pub fn small_packing(seed: u64) -> Design {
    let points = 4 + (seed % 5) as usize;
    let size = 2 + (seed % 2) as usize;
    ramsey_forge::random_packing(points, size, 2, 12 / size, seed).unwrap()
}
