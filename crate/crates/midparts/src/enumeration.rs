//! Isomorph-free exhaustive generation of rooted and free trees of a
//! given order, with optional structural constraints.
//!
//! Rooted trees are generated as canonical level sequences in
//! decreasing lexicographic order via the classic constant-time
//! successor rule; a level sequence is canonical when the subtree
//! sequences below every vertex appear in non-increasing lexicographic
//! order. Free trees are obtained by keeping exactly the rooted
//! representatives whose root is a centroid and whose sequence equals
//! the centroid-rooted canonical form of the underlying tree, so each
//! free isomorphism class is emitted exactly once, in a deterministic
//! order, with nothing materialized.
//!
//! An independent oracle counts isomorphism classes by enumerating all
//! labeled trees from their Prüfer codes and deduplicating bracket-form
//! canonical strings; it shares nothing with the successor generator.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::tree_core::{RootedTree, Tree};

/// Hard cap for the labeled-enumeration oracle (`n^(n-2)` codes).
pub const LABELED_ORACLE_LIMIT: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("order {n} exceeds the {kind} enumeration limit {limit}")]
    OverLimit { n: usize, limit: usize, kind: &'static str },
    #[error("diameter constraints apply to free enumeration only")]
    DiameterOnRooted,
    #[error("height constraints apply to rooted enumeration only")]
    HeightOnFree,
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("a Prüfer code for order n has n-2 entries below n")]
    BadPruferCode,
}

/// Enumeration caps: free trees are cheap to canonicalize, rooted
/// streams are larger, so the defaults differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    pub free: usize,
    pub rooted: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { free: 16, rooted: 14 }
    }
}

impl EnumLimits {
    /// Reads `MIDPARTS_ENUM_LIMIT`; either a single order applied to
    /// both streams or a `free,rooted` pair.
    pub fn from_env() -> Self {
        let mut limits = EnumLimits::default();
        if let Ok(raw) = std::env::var("MIDPARTS_ENUM_LIMIT") {
            let parts: Vec<&str> = raw.split(',').collect();
            match parts.as_slice() {
                [one] => {
                    if let Ok(v) = one.trim().parse() {
                        limits = EnumLimits { free: v, rooted: v };
                    }
                }
                [f, r] => {
                    if let (Ok(fv), Ok(rv)) = (f.trim().parse(), r.trim().parse()) {
                        limits = EnumLimits { free: fv, rooted: rv };
                    }
                }
                _ => {}
            }
        }
        limits
    }
}

/// Conjunctive structural filters; `None` means unconstrained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeFamilyConstraints {
    pub max_degree: Option<usize>,
    pub max_diameter: Option<usize>,
    pub max_height: Option<usize>,
}

impl TreeFamilyConstraints {
    pub const NONE: TreeFamilyConstraints = TreeFamilyConstraints {
        max_degree: None,
        max_diameter: None,
        max_height: None,
    };

    pub fn degree(k: usize) -> Self {
        TreeFamilyConstraints { max_degree: Some(k), ..Self::NONE }
    }

    pub fn diameter(d: usize) -> Self {
        TreeFamilyConstraints { max_diameter: Some(d), ..Self::NONE }
    }

    pub fn height(h: usize) -> Self {
        TreeFamilyConstraints { max_height: Some(h), ..Self::NONE }
    }
}

/// Canonical level sequences of all rooted trees on `n` vertices, in
/// decreasing lexicographic order (path first, star last). Levels are
/// 1-based; entry `i` is the level of the `i`-th vertex in preorder.
struct LevelSeqGen {
    seq: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl LevelSeqGen {
    fn new(n: usize) -> LevelSeqGen {
        LevelSeqGen { seq: (1..=n).collect(), fresh: true, done: n == 0 }
    }
}

impl Iterator for LevelSeqGen {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.seq.clone());
        }
        let n = self.seq.len();
        // rightmost vertex below level 2; its subtree is rotated into
        // copies of the segment starting at its parent
        let p = match (0..n).rev().find(|&i| self.seq[i] > 2) {
            Some(p) => p,
            None => {
                self.done = true;
                return None;
            }
        };
        let q = (0..p)
            .rev()
            .find(|&i| self.seq[i] == self.seq[p] - 1)
            .expect("parent position exists");
        let d = p - q;
        for i in p..n {
            self.seq[i] = self.seq[i - d];
        }
        Some(self.seq.clone())
    }
}

/// Rebuilds the rooted tree of a level sequence: each vertex hangs from
/// the nearest earlier vertex one level up.
pub fn rooted_from_level_sequence(seq: &[usize]) -> RootedTree {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut last_at = vec![usize::MAX; n + 2];
    last_at[seq[0]] = 0;
    for (i, &level) in seq.iter().enumerate().skip(1) {
        let parent = last_at[level - 1];
        edges.push((parent, i));
        last_at[level] = i;
    }
    let tree = Tree::from_edges_unchecked(n, edges);
    RootedTree::new(tree, 0).expect("root 0 in range")
}

fn subtree_seq(t: &Tree, v: usize, parent: usize, level: usize) -> Vec<usize> {
    let mut kids: Vec<Vec<usize>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| subtree_seq(t, w, v, level + 1))
        .collect();
    kids.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
    out.push(level);
    for k in kids {
        out.extend(k);
    }
    out
}

/// Canonical level sequence of `t` rooted at `root`: subtree sequences
/// below every vertex in non-increasing lexicographic order.
pub fn canonical_level_sequence(t: &Tree, root: usize) -> Vec<usize> {
    subtree_seq(t, root, usize::MAX, 1)
}

/// The one or two vertices minimizing the largest component of their
/// removal (equivalently, minimizing the distance sum).
pub fn centroid_vertices(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n == 1 {
        return vec![0];
    }
    let rt = RootedTree::new(t.clone(), 0).expect("root 0 in range");
    let sizes = rt.subtree_sizes();
    let weight = |v: usize| -> usize {
        t.neighbors(v)
            .iter()
            .map(|&u| if rt.parent(u) == Some(v) { sizes[u] } else { n - sizes[v] })
            .max()
            .unwrap()
    };
    let best = (0..n).map(weight).min().unwrap();
    (0..n).filter(|&v| weight(v) == best).collect()
}

/// Canonical form of the underlying free tree: the lexicographically
/// larger of the centroid-rooted canonical sequences.
pub fn free_canonical_sequence(t: &Tree) -> Vec<usize> {
    centroid_vertices(t)
        .into_iter()
        .map(|c| canonical_level_sequence(t, c))
        .max()
        .expect("tree has a centroid")
}

/// Canonical single-line encoding of a free tree:
/// `"{n}:{u-v,...}"` under the canonical labeling.
pub fn encode_free(t: &Tree) -> String {
    encode_seq(&free_canonical_sequence(t), false)
}

/// Canonical single-line encoding of a rooted tree:
/// `"{n}:r0:{u-v,...}"` under the canonical labeling (root is 0).
pub fn encode_rooted(rt: &RootedTree) -> String {
    encode_seq(&canonical_level_sequence(rt.tree(), rt.root()), true)
}

fn encode_seq(seq: &[usize], rooted: bool) -> String {
    let rt = rooted_from_level_sequence(seq);
    let mut edges: Vec<(usize, usize)> = rt.tree().edges().to_vec();
    edges.sort_unstable();
    let body: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if rooted {
        format!("{}:r0:{}", seq.len(), body.join(","))
    } else {
        format!("{}:{}", seq.len(), body.join(","))
    }
}

fn passes_rooted(rt: &RootedTree, c: &TreeFamilyConstraints) -> bool {
    if let Some(h) = c.max_height {
        if rt.height() > h {
            return false;
        }
    }
    if let Some(k) = c.max_degree {
        if rt.tree().max_degree() > k {
            return false;
        }
    }
    true
}

fn passes_free(t: &Tree, c: &TreeFamilyConstraints) -> bool {
    if let Some(k) = c.max_degree {
        if t.max_degree() > k {
            return false;
        }
    }
    if let Some(d) = c.max_diameter {
        if t.diameter() > d {
            return false;
        }
    }
    true
}

/// One representative per rooted isomorphism class of order `n`
/// satisfying the constraints, in canonical order.
pub fn rooted_trees(
    n: usize,
    c: TreeFamilyConstraints,
    limits: EnumLimits,
) -> Result<impl Iterator<Item = RootedTree>, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if n > limits.rooted {
        return Err(EnumError::OverLimit { n, limit: limits.rooted, kind: "rooted" });
    }
    if c.max_diameter.is_some() {
        return Err(EnumError::DiameterOnRooted);
    }
    Ok(LevelSeqGen::new(n).filter_map(move |seq| {
        if let Some(h) = c.max_height {
            if seq.iter().max().copied().unwrap_or(1) > h + 1 {
                return None;
            }
        }
        let rt = rooted_from_level_sequence(&seq);
        passes_rooted(&rt, &c).then_some(rt)
    }))
}

/// One representative per free isomorphism class of order `n`
/// satisfying the constraints, in canonical order.
pub fn free_trees(
    n: usize,
    c: TreeFamilyConstraints,
    limits: EnumLimits,
) -> Result<impl Iterator<Item = Tree>, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if n > limits.free {
        return Err(EnumError::OverLimit { n, limit: limits.free, kind: "free" });
    }
    if c.max_height.is_some() {
        return Err(EnumError::HeightOnFree);
    }
    Ok(LevelSeqGen::new(n).filter_map(move |seq| {
        let rt = rooted_from_level_sequence(&seq);
        let t = rt.into_tree();
        if !passes_free(&t, &c) {
            return None;
        }
        (free_canonical_sequence(&t) == seq).then_some(t)
    }))
}

/// Cardinality of the corresponding enumeration stream.
pub fn count_trees(
    n: usize,
    c: TreeFamilyConstraints,
    rooted: bool,
    limits: EnumLimits,
) -> Result<u64, EnumError> {
    if rooted {
        Ok(rooted_trees(n, c, limits)?.count() as u64)
    } else {
        Ok(free_trees(n, c, limits)?.count() as u64)
    }
}

/// Bracket canonical form rooted at `v` (children ascending), used
/// only by the labeled oracle.
fn ahu_bytes(t: &Tree, v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu_bytes(t, w, v))
        .collect();
    kids.sort_unstable();
    let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

fn ahu_free(t: &Tree) -> Vec<u8> {
    centroid_vertices(t)
        .into_iter()
        .map(|c| ahu_bytes(t, c, usize::MAX))
        .min()
        .expect("tree has a centroid")
}

fn prufer_decode(n: usize, code: &[usize]) -> Tree {
    let mut deg = vec![1usize; n];
    for &c in code {
        deg[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        deg[leaf] = 0;
        deg[c] -= 1;
    }
    let mut last = (0..n).filter(|&v| deg[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Tree::from_edges_unchecked(n, edges)
}

/// Decodes a Prüfer code into the labeled tree it encodes. The code
/// must have length `n - 2` with entries below `n`; every labeled tree
/// on `n >= 2` vertices arises from exactly one code.
pub fn tree_from_prufer(n: usize, code: &[usize]) -> Result<Tree, EnumError> {
    if n < 2 || code.len() != n - 2 || code.iter().any(|&c| c >= n) {
        return Err(EnumError::BadPruferCode);
    }
    Ok(prufer_decode(n, code))
}

/// Counts free and rooted isomorphism classes of order `n` under the
/// constraints by brute-force labeled enumeration: all `n^(n-2)`
/// Prüfer codes, deduplicated by bracket canonical form. Free classes
/// honor degree/diameter constraints; rooted classes honor
/// degree/height constraints.
pub fn labeled_class_counts(
    n: usize,
    c: TreeFamilyConstraints,
) -> Result<(u64, u64), EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if n > LABELED_ORACLE_LIMIT {
        return Err(EnumError::OverLimit { n, limit: LABELED_ORACLE_LIMIT, kind: "labeled oracle" });
    }
    let mut reps: HashMap<Vec<u8>, Tree> = HashMap::new();
    if n == 1 {
        reps.insert(vec![b'(', b')'], Tree::from_edges_unchecked(1, vec![]));
    } else if n == 2 {
        let t = Tree::from_edges_unchecked(2, vec![(0, 1)]);
        reps.insert(ahu_free(&t), t);
    } else {
        let mut code = vec![0usize; n - 2];
        loop {
            let t = prufer_decode(n, &code);
            let key = ahu_free(&t);
            reps.entry(key).or_insert(t);
            // odometer over the code digits
            let mut i = 0;
            loop {
                if i == code.len() {
                    break;
                }
                code[i] += 1;
                if code[i] < n {
                    break;
                }
                code[i] = 0;
                i += 1;
            }
            if i == code.len() {
                break;
            }
        }
    }
    let free = reps.values().filter(|t| passes_free(t, &c)).count() as u64;
    let mut rooted_forms: HashSet<Vec<u8>> = HashSet::new();
    for t in reps.values() {
        if let Some(k) = c.max_degree {
            if t.max_degree() > k {
                continue;
            }
        }
        for v in 0..t.n() {
            if let Some(h) = c.max_height {
                let rt = RootedTree::new(t.clone(), v).expect("v in range");
                if rt.height() > h {
                    continue;
                }
            }
            rooted_forms.insert(ahu_bytes(t, v, usize::MAX));
        }
    }
    Ok((free, rooted_forms.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FREE_COUNTS: [u64; 11] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235];
    const ROOTED_COUNTS: [u64; 10] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];

    #[test]
    fn free_counts_match_reference() {
        for (i, &want) in FREE_COUNTS.iter().enumerate() {
            let n = i + 1;
            let got = count_trees(n, TreeFamilyConstraints::NONE, false, EnumLimits::default())
                .unwrap();
            assert_eq!(got, want, "free trees of order {n}");
        }
    }

    #[test]
    fn rooted_counts_match_reference() {
        for (i, &want) in ROOTED_COUNTS.iter().enumerate() {
            let n = i + 1;
            let got = count_trees(n, TreeFamilyConstraints::NONE, true, EnumLimits::default())
                .unwrap();
            assert_eq!(got, want, "rooted trees of order {n}");
        }
    }

    #[test]
    fn constrained_examples() {
        assert_eq!(
            count_trees(6, TreeFamilyConstraints::diameter(3), false, EnumLimits::default())
                .unwrap(),
            3
        );
        assert_eq!(
            count_trees(4, TreeFamilyConstraints::degree(2), false, EnumLimits::default())
                .unwrap(),
            1
        );
        assert_eq!(
            count_trees(7, TreeFamilyConstraints::NONE, false, EnumLimits::default()).unwrap(),
            11
        );
        assert_eq!(
            count_trees(5, TreeFamilyConstraints::NONE, true, EnumLimits::default()).unwrap(),
            9
        );
    }

    #[test]
    fn limit_and_misuse_errors() {
        let limits = EnumLimits { free: 6, rooted: 6 };
        assert!(matches!(
            free_trees(7, TreeFamilyConstraints::NONE, limits),
            Err(EnumError::OverLimit { .. })
        ));
        assert_eq!(
            rooted_trees(5, TreeFamilyConstraints::diameter(3), EnumLimits::default()).err(),
            Some(EnumError::DiameterOnRooted)
        );
        assert_eq!(
            free_trees(5, TreeFamilyConstraints::height(2), EnumLimits::default()).err(),
            Some(EnumError::HeightOnFree)
        );
    }

    #[test]
    fn yielded_trees_are_pairwise_distinct() {
        for n in 1..=9 {
            let mut seen = HashSet::new();
            for t in free_trees(n, TreeFamilyConstraints::NONE, EnumLimits::default()).unwrap() {
                assert!(seen.insert(free_canonical_sequence(&t)), "duplicate at n={n}");
            }
        }
    }

    #[test]
    fn constraints_are_honored() {
        for t in free_trees(8, TreeFamilyConstraints::degree(3), EnumLimits::default()).unwrap() {
            assert!(t.max_degree() <= 3);
        }
        for rt in rooted_trees(8, TreeFamilyConstraints::height(3), EnumLimits::default()).unwrap()
        {
            assert!(rt.height() <= 3);
        }
    }

    #[test]
    fn oracle_agrees_on_small_orders() {
        for n in 1..=7 {
            let (free, rooted) = labeled_class_counts(n, TreeFamilyConstraints::NONE).unwrap();
            assert_eq!(free, FREE_COUNTS[n - 1]);
            assert_eq!(rooted, ROOTED_COUNTS[n - 1]);
        }
    }

    #[test]
    fn oracle_agrees_under_constraints() {
        for n in 3..=8 {
            for c in [
                TreeFamilyConstraints::degree(3),
                TreeFamilyConstraints::degree(4),
                TreeFamilyConstraints::diameter(4),
            ] {
                let (free, _) = labeled_class_counts(n, c).unwrap();
                let got = count_trees(n, c, false, EnumLimits::default()).unwrap();
                assert_eq!(free, got, "n={n}, {c:?}");
            }
            for c in [TreeFamilyConstraints::height(2), TreeFamilyConstraints::height(3)] {
                let (_, rooted) = labeled_class_counts(n, c).unwrap();
                let got = count_trees(n, c, true, EnumLimits::default()).unwrap();
                assert_eq!(rooted, got, "rooted n={n}, {c:?}");
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let run = || -> Vec<String> {
            free_trees(7, TreeFamilyConstraints::NONE, EnumLimits::default())
                .unwrap()
                .map(|t| encode_free(&t))
                .collect()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn env_limits() {
        std::env::set_var("MIDPARTS_ENUM_LIMIT", "12");
        assert_eq!(EnumLimits::from_env(), EnumLimits { free: 12, rooted: 12 });
        std::env::set_var("MIDPARTS_ENUM_LIMIT", "15,13");
        assert_eq!(EnumLimits::from_env(), EnumLimits { free: 15, rooted: 13 });
        std::env::remove_var("MIDPARTS_ENUM_LIMIT");
        assert_eq!(EnumLimits::from_env(), EnumLimits::default());
    }
}
