//! Deterministic builders for the named extremal families: comets,
//! splits and split forests, level-greedy / greedy / rooted greedy
//! trees, extended good and rgood trees, and the binary families.
//!
//! Vertex numbering is breadth-first from the root (or attachment
//! vertex), with children ordered by assigned degree descending, so
//! every construction is byte-deterministic.

use thiserror::Error;

use crate::tree_core::{RootedTree, Tree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("comet needs 1 <= r <= n, got r={r}, n={n}")]
    CometRange { n: usize, r: usize },
    #[error("split needs h >= 1 and 0 <= f <= h-1, got h={h}, f={f}")]
    SplitRange { h: usize, f: usize },
    #[error("split forest needs a nonempty parameter list")]
    EmptyForest,
    #[error("degree sequence must have at least two entries")]
    TooShort,
    #[error("degree sequence contains a non-positive degree")]
    NonPositiveDegree,
    #[error("degree sum {sum} does not equal 2(n-1) = {expected}")]
    DegreeSum { sum: usize, expected: usize },
    #[error("level-degree condition (i) fails: degree {degree} is not positive")]
    LevelConditionI { degree: usize },
    #[error("level-degree condition (ii) fails: |L_0| = {got}, need 1")]
    LevelConditionII { got: usize },
    #[error(
        "level-degree condition (iii) fails at level {level}: down-degrees sum to {supplied} but the next level has {needed} vertices"
    )]
    LevelConditionIII { level: usize, supplied: usize, needed: usize },
    #[error("root degree {degree} does not occur in the sequence")]
    RootDegreeAbsent { degree: usize },
    #[error("sequence cannot be realized with the requested root degree")]
    Unrealizable,
    #[error("extended family needs k >= 3, got k={k}")]
    DegreeTooSmall { k: usize },
    #[error("extended family needs n > k, got n={n}, k={k}")]
    OrderNotAboveDegree { n: usize, k: usize },
    #[error("no binary {kind} tree exists on {n} vertices")]
    BinaryInfeasible { kind: &'static str, n: usize },
    #[error("sequences have different lengths")]
    LengthMismatch,
}

/// A realizable tree degree sequence, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts the input non-increasing and checks realizability:
    /// positive entries summing to `2(n-1)`.
    pub fn new(mut degrees: Vec<usize>) -> Result<DegreeSequence, ConstructError> {
        if degrees.len() < 2 {
            return Err(ConstructError::TooShort);
        }
        if degrees.contains(&0) {
            return Err(ConstructError::NonPositiveDegree);
        }
        let sum: usize = degrees.iter().sum();
        let expected = 2 * (degrees.len() - 1);
        if sum != expected {
            return Err(ConstructError::DegreeSum { sum, expected });
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.0[0]
    }

    pub fn contains(&self, d: usize) -> bool {
        self.0.contains(&d)
    }
}

/// Per-height degree multisets `L_0..L_H` of a rooted tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDegreeSequence {
    levels: Vec<Vec<usize>>,
}

impl LevelDegreeSequence {
    /// Validates the three level conditions: positive degrees, a
    /// single root entry, and matching down-degree sums between
    /// consecutive levels (with the last level consisting of leaves).
    pub fn new(levels: Vec<Vec<usize>>) -> Result<LevelDegreeSequence, ConstructError> {
        if levels.is_empty() || levels[0].len() != 1 {
            return Err(ConstructError::LevelConditionII {
                got: levels.first().map_or(0, |l| l.len()),
            });
        }
        for level in &levels {
            if let Some(&d) = level.iter().find(|&&d| d == 0) {
                return Err(ConstructError::LevelConditionI { degree: d });
            }
        }
        let mut sorted = levels;
        for level in &mut sorted {
            level.sort_unstable_by(|a, b| b.cmp(a));
        }
        for i in 0..sorted.len() {
            let down: usize = sorted[i]
                .iter()
                .map(|&d| if i == 0 { d } else { d - 1 })
                .sum();
            let needed = sorted.get(i + 1).map_or(0, |l| l.len());
            if down != needed {
                return Err(ConstructError::LevelConditionIII {
                    level: i,
                    supplied: down,
                    needed,
                });
            }
        }
        Ok(LevelDegreeSequence { levels: sorted })
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn order(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }
}

/// Height budget plus the non-increasing split parameters of a split
/// forest. The induced forest has order `1 + sum_i (h + k_i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitProfile {
    pub h: usize,
    pub ks: Vec<usize>,
}

impl SplitProfile {
    pub fn new(h: usize, mut ks: Vec<usize>) -> Result<SplitProfile, ConstructError> {
        if ks.is_empty() {
            return Err(ConstructError::EmptyForest);
        }
        if h < 1 {
            return Err(ConstructError::SplitRange { h, f: 0 });
        }
        if let Some(&f) = ks.iter().find(|&&k| k + 1 > h) {
            return Err(ConstructError::SplitRange { h, f });
        }
        ks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplitProfile { h, ks })
    }

    pub fn order(&self) -> usize {
        1 + self.ks.iter().map(|k| self.h + k).sum::<usize>()
    }
}

impl std::fmt::Display for SplitProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.ks.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Path on `r` vertices with `n - r` pendant vertices attached to one
/// end. Path vertices are `0..r-1` with `0` the attachment end;
/// pendants are `r..n-1`, adjacent to `0`.
pub fn comet(n: usize, r: usize) -> Result<Tree, ConstructError> {
    if r < 1 || r > n {
        return Err(ConstructError::CometRange { n, r });
    }
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..r.saturating_sub(1) {
        edges.push((i, i + 1));
    }
    for p in r..n {
        edges.push((0, p));
    }
    Ok(Tree::build(n, &edges).expect("comet edges form a tree"))
}

/// A split branch: a root path of `h` vertices with a second path of
/// `f` vertices attached so that both leaves sit at depth `h-1`.
pub fn split(h: usize, f: usize) -> Result<RootedTree, ConstructError> {
    if h < 1 || f + 1 > h {
        return Err(ConstructError::SplitRange { h, f });
    }
    let n = h + f;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..h - 1 {
        edges.push((i, i + 1));
    }
    for j in 0..f.saturating_sub(1) {
        edges.push((h + j, h + j + 1));
    }
    if f >= 1 {
        // the second path hangs from the vertex at depth h-f-1
        edges.push((h, h - f - 1));
    }
    let tree = Tree::build(n, &edges).expect("split edges form a tree");
    Ok(RootedTree::new(tree, 0).expect("root 0 in range"))
}

/// A root joined to one split branch per entry of `ks` (normalized
/// non-increasing). Order `1 + sum (h + k_i)`, height `h`.
pub fn split_forest(h: usize, ks: &[usize]) -> Result<RootedTree, ConstructError> {
    let profile = SplitProfile::new(h, ks.to_vec())?;
    let mut edges = Vec::new();
    let mut offset = 1;
    for &k in &profile.ks {
        let branch = split(h, k)?;
        for &(u, v) in branch.tree().edges() {
            edges.push((u + offset, v + offset));
        }
        edges.push((0, offset));
        offset += h + k;
    }
    let tree = Tree::build(offset, &edges).expect("split forest edges form a tree");
    let rt = RootedTree::new(tree, 0).expect("root 0 in range");
    debug_assert_eq!(rt.height(), h);
    Ok(rt)
}

/// Builds the level-greedy rooted tree for a level-degree sequence:
/// vertices are placed level by level, degrees assigned left-to-right
/// in non-increasing order, and each vertex is joined to the next
/// still-unconnected vertices of the level below.
pub fn level_greedy(lds: &LevelDegreeSequence) -> Result<RootedTree, ConstructError> {
    let levels = lds.levels();
    let n = lds.order();
    let mut offsets = Vec::with_capacity(levels.len() + 1);
    let mut acc = 0;
    for level in levels {
        offsets.push(acc);
        acc += level.len();
    }
    offsets.push(acc);

    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, level) in levels.iter().enumerate() {
        if i + 1 >= levels.len() {
            break;
        }
        let mut next = offsets[i + 1];
        for (j, &d) in level.iter().enumerate() {
            let down = if i == 0 { d } else { d - 1 };
            let v = offsets[i] + j;
            for _ in 0..down {
                edges.push((v, next));
                next += 1;
            }
        }
        debug_assert_eq!(next, offsets[i + 1] + levels[i + 1].len());
    }
    let tree = Tree::build(n, &edges).expect("level-greedy edges form a tree");
    Ok(RootedTree::new(tree, 0).expect("root 0 in range"))
}

/// Fills levels from a descending degree list: the root takes `first`,
/// the next level takes the root's degree in entries, and each later
/// level takes as many entries as the previous level's down-degrees
/// supply.
fn fill_levels(first: usize, rest: &[usize]) -> Result<LevelDegreeSequence, ConstructError> {
    let mut levels = vec![vec![first]];
    let mut pos = 0;
    let mut need = first;
    while need > 0 {
        if pos + need > rest.len() {
            return Err(ConstructError::Unrealizable);
        }
        let level: Vec<usize> = rest[pos..pos + need].to_vec();
        pos += need;
        need = level.iter().map(|&d| d - 1).sum();
        levels.push(level);
    }
    if pos != rest.len() {
        return Err(ConstructError::Unrealizable);
    }
    LevelDegreeSequence::new(levels)
}

/// The greedy tree of a degree sequence: the level-greedy tree whose
/// root carries the largest degree and whose levels absorb the
/// remaining degrees largest-first.
pub fn greedy_tree(ds: &DegreeSequence) -> Result<RootedTree, ConstructError> {
    let d = ds.degrees();
    level_greedy(&fill_levels(d[0], &d[1..])?)
}

/// The rooted greedy tree: like [`greedy_tree`] but the root carries a
/// chosen degree, removed once from the sequence before level filling.
pub fn rooted_greedy(ds: &DegreeSequence, root_degree: usize) -> Result<RootedTree, ConstructError> {
    let pos = ds
        .degrees()
        .iter()
        .position(|&d| d == root_degree)
        .ok_or(ConstructError::RootDegreeAbsent { degree: root_degree })?;
    let mut rest = ds.degrees().to_vec();
    rest.remove(pos);
    level_greedy(&fill_levels(root_degree, &rest)?)
}

/// Degree multiset of the extended good tree on `n > k` vertices:
/// write `n-2 = q'(k-1) + s'`; then `q'` vertices of degree `k`, one of
/// degree `s'+1`, and leaves.
fn extended_good_degrees(n: usize, k: usize) -> Result<Vec<usize>, ConstructError> {
    if k < 3 {
        return Err(ConstructError::DegreeTooSmall { k });
    }
    if n <= k {
        return Err(ConstructError::OrderNotAboveDegree { n, k });
    }
    let q = (n - 2) / (k - 1);
    let s = (n - 2) % (k - 1) + 1;
    let mut degrees = vec![k; q];
    degrees.push(s);
    degrees.resize(n, 1);
    Ok(degrees)
}

/// The greedy tree with `q'` vertices of degree `k`, one residual
/// vertex, and leaves; defined for every `n > k >= 3`.
pub fn extended_good(n: usize, k: usize) -> Result<Tree, ConstructError> {
    let ds = DegreeSequence::new(extended_good_degrees(n, k)?)?;
    Ok(greedy_tree(&ds)?.into_tree())
}

/// Degree multiset of the extended rgood tree: `a` vertices of degree
/// `k`, the root of degree `k-1`, one residual vertex of degree
/// `s ≡ n (mod k-1)`, `1 <= s <= k-1`, and leaves.
fn extended_rgood_degrees(n: usize, k: usize) -> Result<Vec<usize>, ConstructError> {
    if k < 3 {
        return Err(ConstructError::DegreeTooSmall { k });
    }
    if n <= k {
        return Err(ConstructError::OrderNotAboveDegree { n, k });
    }
    let mut s = n % (k - 1);
    if s == 0 {
        s = k - 1;
    }
    let a = (n - s - (k - 1)) / (k - 1);
    debug_assert_eq!((n - s - (k - 1)) % (k - 1), 0, "s was chosen to divide");
    let mut degrees = vec![k; a];
    degrees.push(k - 1);
    degrees.push(s);
    degrees.resize(n, 1);
    Ok(degrees)
}

/// The rooted greedy tree with root degree `k-1` over the extended
/// rgood degree multiset; defined for every `n > k >= 3`.
pub fn extended_rgood(n: usize, k: usize) -> Result<RootedTree, ConstructError> {
    let ds = DegreeSequence::new(extended_rgood_degrees(n, k)?)?;
    rooted_greedy(&ds, k - 1)
}

/// Greedy tree with all internal degrees 3: exists for even `n`.
pub fn binary_good(n: usize) -> Result<Tree, ConstructError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(ConstructError::BinaryInfeasible { kind: "good", n });
    }
    let m = (n - 2) / 2;
    let mut degrees = vec![3; m];
    degrees.resize(n, 1);
    let ds = DegreeSequence::new(degrees)?;
    Ok(greedy_tree(&ds)?.into_tree())
}

/// Rooted greedy tree with root degree 2 and all other internal
/// degrees 3: exists for odd `n`.
pub fn binary_rgood(n: usize) -> Result<RootedTree, ConstructError> {
    if n < 3 || n % 2 != 1 {
        return Err(ConstructError::BinaryInfeasible { kind: "rgood", n });
    }
    let m = (n - 3) / 2;
    let mut degrees = vec![3; m];
    degrees.push(2);
    degrees.resize(n, 1);
    let ds = DegreeSequence::new(degrees)?;
    rooted_greedy(&ds, 2)
}

/// Spine path with one pendant per internal spine vertex, making every
/// internal degree 3: exists for even `n`.
pub fn binary_caterpillar(n: usize) -> Result<Tree, ConstructError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(ConstructError::BinaryInfeasible { kind: "caterpillar", n });
    }
    let s = (n + 2) / 2;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 0..s - 1 {
        edges.push((i, i + 1));
    }
    for j in 0..s.saturating_sub(2) {
        edges.push((j + 1, s + j));
    }
    Ok(Tree::build(n, &edges).expect("caterpillar edges form a tree"))
}

/// `true` iff `q` majorizes `p`: equal totals and every prefix sum of
/// `q` at least that of `p`.
pub fn majorizes(p: &DegreeSequence, q: &DegreeSequence) -> Result<bool, ConstructError> {
    if p.len() != q.len() {
        return Err(ConstructError::LengthMismatch);
    }
    let (mut sp, mut sq) = (0usize, 0usize);
    let mut dominated = true;
    for (a, b) in p.degrees().iter().zip(q.degrees()) {
        sp += a;
        sq += b;
        if sq < sp {
            dominated = false;
        }
    }
    Ok(dominated && sp == sq)
}
