//! Explicit design families: projective and affine planes over prime
//! fields, integer grid lines, the trimmed affine plane with an exact
//! incidence count, and seeded random packings.

use std::collections::HashSet;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::design::{incidence_count, Design};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::primes::smallest_prime_in;

/// Consecutive rejected samples after which [`random_packing`] stops.
pub const REJECTION_BUDGET: usize = 1000;

/// Normalized homogeneous triples over `F_p`: first nonzero coordinate is 1.
/// Ordered `(1,y,z)`, then `(0,1,z)`, then `(0,0,1)`.
fn normalized_triples(f: &PrimeField) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for y in f.elements() {
        for z in f.elements() {
            out.push([1, y, z]);
        }
    }
    for z in f.elements() {
        out.push([0, 1, z]);
    }
    out.push([0, 0, 1]);
    out
}

/// The projective plane `PG(2, p)`: `p²+p+1` points and lines, `p+1` points
/// per line. Point `i` and line `j` are both the `i`-th normalized triple;
/// a point lies on a line when their dot product vanishes.
pub fn projective_plane(p: u64) -> Result<Design> {
    let f = PrimeField::new(p)?;
    let triples = normalized_triples(&f);
    let blocks = triples
        .iter()
        .map(|line| {
            triples
                .iter()
                .enumerate()
                .filter(|(_, pt)| f.dot(&pt[..], &line[..]) == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let labels = triples
        .iter()
        .map(|t| format!("({}:{}:{})", t[0], t[1], t[2]))
        .collect();
    Design::new(triples.len(), 2, blocks)?.with_labels(labels)
}

/// The affine plane `AG(2, p)`. Point `(x, y)` has id `x·p + y`. Blocks are
/// the lines `y = m·x + c` (ordered by `m`, then `c`) followed by the
/// vertical lines `x = c`.
pub fn affine_plane(p: u64) -> Result<Design> {
    let f = PrimeField::new(p)?;
    let id = |x: u64, y: u64| (x * p + y) as usize;
    let mut blocks = Vec::with_capacity((p * p + p) as usize);
    for m in f.elements() {
        for c in f.elements() {
            blocks.push(f.elements().map(|x| id(x, f.add(f.mul(m, x), c))).collect());
        }
    }
    for c in f.elements() {
        blocks.push(f.elements().map(|y| id(c, y)).collect());
    }
    let labels = (0..p)
        .cartesian_product(0..p)
        .map(|(x, y)| format!("({x},{y})"))
        .collect();
    Design::new((p * p) as usize, 2, blocks)?.with_labels(labels)
}

/// Integer lines `{(x, m·x + b) : 1 ≤ x ≤ N}` for `1 ≤ m ≤ N`, `1 ≤ b ≤ N²`.
///
/// Only grid points `(a, b)` with `1 ≤ a ≤ N`, `1 ≤ b ≤ 2N²` that lie on some
/// line are kept, numbered in `(a, b)` lexicographic order, so every point
/// is covered.
pub fn grid_line_design(n: usize) -> Result<Design> {
    if n == 0 {
        return Err(Error::Usage("grid size N must be at least 1".into()));
    }
    let height = 2 * n * n;
    let cell = |a: usize, b: usize| (a - 1) * height + (b - 1);
    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(n * n * n);
    let mut covered = vec![false; n * height];
    for m in 1..=n {
        for b in 1..=n * n {
            let line: Vec<usize> = (1..=n).map(|x| cell(x, m * x + b)).collect();
            for &c in &line {
                covered[c] = true;
            }
            lines.push(line);
        }
    }
    let mut dense = vec![usize::MAX; covered.len()];
    let mut labels = Vec::new();
    for a in 1..=n {
        for b in 1..=height {
            if covered[cell(a, b)] {
                dense[cell(a, b)] = labels.len();
                labels.push(format!("({a},{b})"));
            }
        }
    }
    let blocks = lines
        .into_iter()
        .map(|l| l.into_iter().map(|c| dense[c]).collect())
        .collect();
    Design::new(labels.len(), 2, blocks)?.with_labels(labels)
}

/// Record of the choices made by [`trim_to_n`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrimTrace {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    /// Removed incidences as `(block index, point id)` in `AG(2, p)` numbering.
    pub removed: Vec<(usize, usize)>,
}

impl TrimTrace {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }
}

/// Smallest `k ≥ 1` with `k³ + k² ≥ n`.
pub fn cube_parameter(n: usize) -> usize {
    let mut k = 1;
    while k * k * k + k * k < n {
        k += 1;
    }
    k
}

/// Strength-2 design with exactly `n` incidences, cut out of `AG(2, p)`.
///
/// `k` is the smallest integer with `k³+k² ≥ n` and `p` the smallest prime
/// in `[k, 2k]`. Incidences are removed from the last block backwards,
/// largest point first, never emptying a block while another block still
/// has two or more points. Emptied blocks are dropped and the point set is
/// restricted to covered points (renumbered in ascending id order).
pub fn trim_to_n(n: usize) -> Result<(Design, TrimTrace)> {
    if n == 0 {
        return Err(Error::Usage("n must be at least 1".into()));
    }
    let k = cube_parameter(n);
    let p = smallest_prime_in(k, 2 * k).expect("Bertrand interval contains a prime");
    let plane = affine_plane(p as u64)?;
    let mut blocks: Vec<Vec<usize>> = plane.blocks().to_vec();
    let mut quota = incidence_count(&plane) - n;
    let mut removed = Vec::with_capacity(quota);

    for bi in (0..blocks.len()).rev() {
        while quota > 0 && blocks[bi].len() > 1 {
            let x = blocks[bi].pop().unwrap();
            removed.push((bi, x));
            quota -= 1;
        }
    }
    for bi in (0..blocks.len()).rev() {
        if quota == 0 {
            break;
        }
        if let Some(x) = blocks[bi].pop() {
            removed.push((bi, x));
            quota -= 1;
        }
    }
    debug_assert_eq!(quota, 0);

    blocks.retain(|b| !b.is_empty());
    let mut dense = vec![usize::MAX; plane.point_count()];
    for b in &blocks {
        for &x in b {
            dense[x] = 0;
        }
    }
    let mut labels = Vec::new();
    let plane_labels = plane.labels().unwrap_or(&[]);
    for (x, slot) in dense.iter_mut().enumerate() {
        if *slot == 0 {
            *slot = labels.len();
            labels.push(plane_labels[x].clone());
        }
    }
    let blocks = blocks
        .into_iter()
        .map(|b| b.into_iter().map(|x| dense[x]).collect())
        .collect();
    let design = Design::new(labels.len(), 2, blocks)?.with_labels(labels)?;
    Ok((design, TrimTrace { n, k, p, removed }))
}

/// Greedy seeded packing: random `block_size`-subsets are accepted when they
/// share no `strength`-subset with an accepted block (and do not repeat
/// one). Stops after `target_blocks` acceptances or [`REJECTION_BUDGET`]
/// consecutive rejections; uncovered points then get singleton blocks.
pub fn random_packing(
    point_count: usize,
    block_size: usize,
    strength: usize,
    target_blocks: usize,
    seed: u64,
) -> Result<Design> {
    if strength == 0 {
        return Err(Error::ZeroStrength);
    }
    if block_size == 0 {
        return Err(Error::Usage("block size must be at least 1".into()));
    }
    if block_size > point_count {
        return Err(Error::BlockTooLarge {
            block_size,
            point_count,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used: HashSet<Vec<usize>> = HashSet::new();
    let mut seen_blocks: HashSet<Vec<usize>> = HashSet::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut rejections = 0;
    while blocks.len() < target_blocks && rejections < REJECTION_BUDGET {
        let mut block = rand::seq::index::sample(&mut rng, point_count, block_size).into_vec();
        block.sort_unstable();
        let subsets: Vec<Vec<usize>> = block.iter().copied().combinations(strength).collect();
        if seen_blocks.contains(&block) || subsets.iter().any(|s| used.contains(s)) {
            rejections += 1;
            continue;
        }
        rejections = 0;
        used.extend(subsets);
        seen_blocks.insert(block.clone());
        blocks.push(block);
    }
    let mut covered = vec![false; point_count];
    for b in &blocks {
        for &x in b {
            covered[x] = true;
        }
    }
    for (x, c) in covered.into_iter().enumerate() {
        if !c {
            blocks.push(vec![x]);
        }
    }
    Design::new(point_count, strength, blocks)
}
