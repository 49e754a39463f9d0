//! Designs over dense point ids and the packing predicates defined on them.
//!
//! A [`Design`] stores `point_count` points (ids `0..point_count`), an ordered
//! list of blocks and a packing `strength`: no `strength` distinct points may
//! lie together in two different blocks. Structural sanity (ids in range, no
//! repeated id in a block) is enforced on construction; the three packing
//! conditions are checked by [`validate_packing`], which reports witnesses
//! instead of failing.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of witnesses kept in a [`ValidationReport`].
pub const MAX_WITNESSES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DesignFile", into = "DesignFile")]
pub struct Design {
    point_count: usize,
    strength: usize,
    blocks: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// On-disk JSON shape of a design.
#[derive(Serialize, Deserialize)]
struct DesignFile {
    point_count: usize,
    strength: usize,
    blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl TryFrom<DesignFile> for Design {
    type Error = Error;

    fn try_from(file: DesignFile) -> Result<Self> {
        let design = Design::new(file.point_count, file.strength, file.blocks)?;
        match file.labels {
            Some(labels) => design.with_labels(labels),
            None => Ok(design),
        }
    }
}

impl From<Design> for DesignFile {
    fn from(d: Design) -> Self {
        DesignFile {
            point_count: d.point_count,
            strength: d.strength,
            blocks: d.blocks,
            labels: d.labels,
        }
    }
}

impl Design {
    /// Builds a design, sorting every block. Fails on out-of-range or
    /// repeated ids and on `strength == 0`.
    pub fn new(point_count: usize, strength: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if strength == 0 {
            return Err(Error::ZeroStrength);
        }
        let mut blocks = blocks;
        for (bi, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            for w in block.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicatePoint {
                        block: bi,
                        point: w[0],
                    });
                }
            }
            if let Some(&max) = block.last() {
                if max >= point_count {
                    return Err(Error::PointOutOfRange {
                        block: bi,
                        point: max,
                        point_count,
                    });
                }
            }
        }
        Ok(Design {
            point_count,
            strength,
            blocks,
            labels: None,
        })
    }

    /// Attaches one human-readable label per point.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.point_count {
            return Err(Error::LabelCount {
                expected: self.point_count,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn strength(&self) -> usize {
        self.strength
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, point: usize) -> String {
        match &self.labels {
            Some(l) => l[point].clone(),
            None => point.to_string(),
        }
    }

    /// `point_blocks()[x]` lists, ascending, the indices of blocks containing `x`.
    pub fn point_blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.point_count];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x].push(bi);
            }
        }
        out
    }

    /// Same blocks with point ids rewritten through `map` (`map[old] = new`).
    /// `map` must be a permutation of `0..point_count`.
    pub fn relabel(&self, map: &[usize]) -> Result<Design> {
        if !is_permutation(map, self.point_count) {
            return Err(Error::BadOrder(self.point_count));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| map[x]).collect())
            .collect();
        let mut d = Design::new(self.point_count, self.strength, blocks)?;
        if let Some(labels) = &self.labels {
            let mut relabeled = vec![String::new(); labels.len()];
            for (old, l) in labels.iter().enumerate() {
                relabeled[map[old]] = l.clone();
            }
            d.labels = Some(relabeled);
        }
        Ok(d)
    }

    /// Drops the block at `index`, keeping every other block in order.
    pub fn without_block(&self, index: usize) -> Design {
        let mut d = self.clone();
        d.blocks.remove(index);
        d
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Design> {
        Ok(serde_json::from_str(s)?)
    }
}

pub(crate) fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// One broken packing condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyBlock {
        block: usize,
    },
    UncoveredPoint {
        point: usize,
    },
    /// `points` (a `strength`-subset) lies in both `first` and `second`.
    DuplicateSubset {
        points: Vec<usize>,
        first: usize,
        second: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::EmptyBlock { block } => write!(f, "block {block} is empty"),
            Violation::UncoveredPoint { point } => write!(f, "point {point} is in no block"),
            Violation::DuplicateSubset {
                points,
                first,
                second,
            } => write!(f, "points {points:?} lie in blocks {first} and {second}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Violations found beyond [`MAX_WITNESSES`] and not stored.
    pub truncated: usize,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty() && self.truncated == 0
    }

    pub fn total(&self) -> usize {
        self.violations.len() + self.truncated
    }

    fn push(&mut self, v: Violation) {
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(v);
        } else {
            self.truncated += 1;
        }
    }
}

/// Checks the three packing conditions: blocks non-empty, every point
/// covered, and no `strength`-subset shared by two blocks.
///
/// Each `strength`-subset is registered with the first block that contains
/// it; a later block containing it yields a [`Violation::DuplicateSubset`].
pub fn validate_packing(design: &Design) -> ValidationReport {
    let mut report = ValidationReport::default();

    let mut covered = vec![false; design.point_count];
    for (bi, block) in design.blocks.iter().enumerate() {
        if block.is_empty() {
            report.push(Violation::EmptyBlock { block: bi });
        }
        for &x in block {
            covered[x] = true;
        }
    }
    for (x, &c) in covered.iter().enumerate() {
        if !c {
            report.push(Violation::UncoveredPoint { point: x });
        }
    }

    if design.strength == 2 {
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (bi, block) in design.blocks.iter().enumerate() {
            for (i, &x) in block.iter().enumerate() {
                for &y in &block[i + 1..] {
                    if let Some(&first) = owner.get(&(x, y)) {
                        report.push(Violation::DuplicateSubset {
                            points: vec![x, y],
                            first,
                            second: bi,
                        });
                    } else {
                        owner.insert((x, y), bi);
                    }
                }
            }
        }
    } else {
        let mut owner: HashMap<Vec<usize>, usize> = HashMap::new();
        for (bi, block) in design.blocks.iter().enumerate() {
            for subset in block.iter().copied().combinations(design.strength) {
                if let Some(&first) = owner.get(&subset) {
                    report.push(Violation::DuplicateSubset {
                        points: subset,
                        first,
                        second: bi,
                    });
                } else {
                    owner.insert(subset, bi);
                }
            }
        }
    }
    report
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// True when the packing is valid and its blocks cover exactly
/// `C(point_count, strength)` subsets, i.e. every subset exactly once.
fn covers_every_subset_once(design: &Design) -> bool {
    if !validate_packing(design).valid() {
        return false;
    }
    let covered: u128 = design
        .blocks
        .iter()
        .map(|b| binomial(b.len(), design.strength))
        .sum();
    covered == binomial(design.point_count, design.strength)
}

/// Steiner system test: every block has exactly `k` points and every
/// `strength`-subset lies in exactly one block.
pub fn is_steiner(design: &Design, k: usize) -> bool {
    design.blocks.iter().all(|b| b.len() == k) && covers_every_subset_once(design)
}

/// Pairwise balanced design test: every block has at least two points and
/// every point pair lies in exactly one block.
pub fn is_pairwise_balanced(design: &Design) -> Result<bool> {
    if design.strength != 2 {
        return Err(Error::StrengthNotTwo(design.strength));
    }
    Ok(design.blocks.iter().all(|b| b.len() >= 2) && covers_every_subset_once(design))
}

/// Number of incidence pairs, `Σ |B|`.
pub fn incidence_count(design: &Design) -> usize {
    design.blocks.iter().map(Vec::len).sum()
}

/// True iff the point × block incidence matrix has no 2×2 all-ones
/// submatrix. Rows are stored as block bitsets and compared pairwise, which
/// is independent of the pair registry used by [`validate_packing`].
pub fn rectangle_free(design: &Design) -> bool {
    let words = design.blocks.len().div_ceil(64);
    let mut rows = vec![0u64; design.point_count * words];
    for (bi, block) in design.blocks.iter().enumerate() {
        for &x in block {
            rows[x * words + bi / 64] |= 1 << (bi % 64);
        }
    }
    for x in 0..design.point_count {
        let rx = &rows[x * words..(x + 1) * words];
        for y in x + 1..design.point_count {
            let ry = &rows[y * words..(y + 1) * words];
            let shared: u32 = rx.iter().zip(ry).map(|(a, b)| (a & b).count_ones()).sum();
            if shared >= 2 {
                return false;
            }
        }
    }
    true
}

/// `point_count ≤ block_count`.
pub fn fisher_holds(design: &Design) -> bool {
    design.point_count <= design.blocks.len()
}
