//! Trees, rooted trees, and the vertex functions behind the three middle
//! parts: eccentricity, distance sum, and the number of containing
//! subtrees.
//!
//! Subtree counts are exact [`BigUint`] values (a star on `n` vertices
//! already has `2^(n-1)` root-containing subtrees). The middle parts are
//! computed twice — once from the defining argmin/argmax and once from
//! the local edge characterizations — and the two derivations are
//! required to agree.

use num_bigint::BigUint;
use thiserror::Error;

/// Exact subtree count. Never rounded, never floated.
pub type BigCount = BigUint;

/// Default cap for the subset-enumeration oracle: `2^16` subsets per
/// vertex is the desk-scale budget.
pub const ORACLE_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("need exactly {expected} edges for {n} vertices, got {got}")]
    WrongEdgeCount { n: usize, expected: usize, got: usize },
    #[error("edge {edge}: vertex {vertex} out of range")]
    VertexOutOfRange { edge: usize, vertex: usize },
    #[error("edge {edge}: self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicate edge {u}-{v}")]
    DuplicateEdge { edge: usize, u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} out of range")]
    BadVertex { vertex: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("order {n} exceeds the subset-oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },
}

/// An undirected tree on vertices `0..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Validates and builds a tree. Errors identify the first violated
    /// invariant, in order: edge count, vertex range / self-loops /
    /// duplicates (per edge, in input order), connectivity.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 || edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                n,
                expected: n.saturating_sub(1),
                got: edges.len(),
            });
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let edge = i + 1;
            if u >= n {
                return Err(TreeError::VertexOutOfRange { edge, vertex: u });
            }
            if v >= n {
                return Err(TreeError::VertexOutOfRange { edge, vertex: v });
            }
            if u == v {
                return Err(TreeError::SelfLoop { edge, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(TreeError::DuplicateEdge { edge, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            norm.push(key);
        }
        let t = Tree { adj, edges: norm };
        // n-1 distinct edges and full reachability rule out cycles.
        if t.bfs_dist(0).contains(&usize::MAX) {
            return Err(TreeError::Disconnected);
        }
        Ok(t)
    }

    /// Internal constructor for edges already known to form a tree.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Tree {
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            norm.push((u.min(v), u.max(v)));
        }
        debug_assert_eq!(norm.len(), n - 1);
        Tree { adj, edges: norm }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as normalized `(min, max)` pairs, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Distances from `v` (edge counts). `usize::MAX` marks unreachable
    /// vertices, which only occurs on invalid input.
    pub fn bfs_dist(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The unique path from `u` to `v`, inclusive.
    pub fn path(&self, u: usize, v: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        parent[u] = u;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x] {
                if parent[w] == usize::MAX {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    pub fn diameter(&self) -> usize {
        // two BFS sweeps: farthest from 0, then farthest from there
        let d0 = self.bfs_dist(0);
        let a = (0..self.n()).max_by_key(|&v| d0[v]).unwrap();
        let da = self.bfs_dist(a);
        da.into_iter().max().unwrap()
    }
}

/// A tree with a distinguished root and derived parent/depth data.
#[derive(Debug, Clone)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
    height: usize,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<RootedTree, TreeError> {
        if root >= tree.n() {
            return Err(TreeError::BadVertex { vertex: root });
        }
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = std::collections::VecDeque::new();
        let mut seen = vec![false; n];
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let height = depth.iter().copied().max().unwrap_or(0);
        Ok(RootedTree { tree, root, parent, depth, order, height })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn into_tree(self) -> Tree {
        self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.tree
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.parent[w] == Some(v))
            .collect()
    }

    pub fn root_degree(&self) -> usize {
        self.tree.degree(self.root)
    }

    /// BFS order from the root (root first).
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// Size of the subtree hanging at each vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.n()];
        for &v in self.order.iter().rev() {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }
}

/// Per-vertex eccentricity, distance sum, and containing-subtree count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFunctions {
    pub ecc: Vec<usize>,
    pub dist: Vec<u64>,
    pub subtrees: Vec<BigCount>,
}

/// The two sides of a tree at one edge: component orders and the
/// within-component counts of subtrees containing each endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSplit {
    pub u: usize,
    pub v: usize,
    pub size_u: usize,
    pub size_v: usize,
    pub count_u: BigCount,
    pub count_v: BigCount,
}

/// Center, centroid, and core vertex sets plus their pairwise distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleReport {
    pub center: Vec<usize>,
    pub centroid: Vec<usize>,
    pub core: Vec<usize>,
    pub d_c_ct: usize,
    pub d_ct_core: usize,
    pub d_c_core: usize,
}

/// Validated tree constructor; see [`Tree::build`].
pub fn build_tree(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
    Tree::build(n, edges)
}

/// Down-counts and up-counts for subtree counting, relative to a fixed
/// root. `down[v]` counts subtrees of `v`'s hanging subtree containing
/// `v`; `up[v]` (for non-root `v`) counts subtrees of the complement of
/// `v`'s hanging subtree that contain `v`'s parent.
struct SubtreeCounts {
    down: Vec<BigCount>,
    up: Vec<BigCount>,
}

fn subtree_counts(rt: &RootedTree) -> SubtreeCounts {
    let n = rt.n();
    let one = BigUint::from(1u32);
    let mut down = vec![BigUint::from(1u32); n];
    for &v in rt.bfs_order().iter().rev() {
        if let Some(p) = rt.parent(v) {
            let f = std::mem::replace(&mut down[p], BigUint::from(0u32));
            down[p] = f * (&down[v] + &one);
        }
    }
    let mut up = vec![BigUint::from(0u32); n];
    for &p in rt.bfs_order() {
        let kids = rt.children(p);
        if kids.is_empty() {
            continue;
        }
        // prefix/suffix products of (1 + down[child]) to exclude one child
        let m = kids.len();
        let mut pre = vec![BigUint::from(1u32); m + 1];
        for i in 0..m {
            pre[i + 1] = &pre[i] * (&down[kids[i]] + &one);
        }
        let mut suf = vec![BigUint::from(1u32); m + 1];
        for i in (0..m).rev() {
            suf[i] = &suf[i + 1] * (&down[kids[i]] + &one);
        }
        let outer = if rt.parent(p).is_some() { &up[p] + &one } else { one.clone() };
        for (i, &c) in kids.iter().enumerate() {
            up[c] = (&pre[i] * &suf[i + 1]) * &outer;
        }
    }
    SubtreeCounts { down, up }
}

/// Number of subtrees containing the root, by the product recursion
/// over the root's children.
pub fn count_subtrees_at(rt: &RootedTree) -> BigCount {
    let counts = subtree_counts(rt);
    counts.down[rt.root()].clone()
}

/// For every vertex `v`, the number of subtrees of `v`'s hanging
/// subtree that contain `v`.
pub fn count_subtrees_below(rt: &RootedTree) -> Vec<BigCount> {
    subtree_counts(rt).down
}

/// All three vertex functions, exactly.
pub fn vertex_functions(t: &Tree) -> VertexFunctions {
    let n = t.n();
    let mut ecc = vec![0usize; n];
    let mut dist = vec![0u64; n];
    for v in 0..n {
        let d = t.bfs_dist(v);
        ecc[v] = d.iter().copied().max().unwrap();
        dist[v] = d.iter().map(|&x| x as u64).sum();
    }
    let rt = RootedTree::new(t.clone(), 0).expect("root 0 in range");
    let counts = subtree_counts(&rt);
    let one = BigUint::from(1u32);
    let subtrees = (0..n)
        .map(|v| {
            if v == rt.root() {
                counts.down[v].clone()
            } else {
                &counts.down[v] * (&counts.up[v] + &one)
            }
        })
        .collect();
    VertexFunctions { ecc, dist, subtrees }
}

/// Counts connected vertex subsets containing `v` by explicit subset
/// enumeration. Independent of the product-recursion path.
pub fn count_subtrees_oracle(t: &Tree, v: usize) -> Result<BigCount, TreeError> {
    let n = t.n();
    if n > ORACLE_LIMIT {
        return Err(TreeError::OracleLimit { n, limit: ORACLE_LIMIT });
    }
    if v >= n {
        return Err(TreeError::BadVertex { vertex: v });
    }
    let mut count = 0u64;
    for mask in 0u32..(1u32 << n) {
        if mask & (1 << v) == 0 {
            continue;
        }
        // BFS within the mask from v
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &w in t.neighbors(u) {
                let bit = 1u32 << w;
                if mask & bit != 0 && seen & bit == 0 {
                    seen |= bit;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        if cnt == mask.count_ones() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Number of all subtrees (connected induced nonempty subgraphs). Each
/// subtree is counted once, at its vertex closest to the root.
pub fn total_subtrees(t: &Tree) -> BigCount {
    let rt = RootedTree::new(t.clone(), 0).expect("root 0 in range");
    let counts = subtree_counts(&rt);
    counts.down.into_iter().sum()
}

/// Component orders and within-component root-subtree counts on both
/// sides of the edge `uv`.
pub fn edge_split(t: &Tree, u: usize, v: usize) -> Result<EdgeSplit, TreeError> {
    if u >= t.n() {
        return Err(TreeError::BadVertex { vertex: u });
    }
    if v >= t.n() {
        return Err(TreeError::BadVertex { vertex: v });
    }
    if !t.has_edge(u, v) {
        return Err(TreeError::NotAnEdge { u, v });
    }
    let rt = RootedTree::new(t.clone(), u).expect("u in range");
    let sizes = rt.subtree_sizes();
    let counts = subtree_counts(&rt);
    // v is a child of u, so down[v] counts v's side and up[v] counts u's.
    debug_assert_eq!(rt.parent(v), Some(u));
    Ok(EdgeSplit {
        u,
        v,
        size_u: t.n() - sizes[v],
        size_v: sizes[v],
        count_u: counts.up[v].clone(),
        count_v: counts.down[v].clone(),
    })
}

/// Minimum distance between two nonempty vertex sets,
/// `min { d(u,v) : u in s1, v in s2 }`.
///
/// The source material names this quantity a Hausdorff distance; the
/// formula implemented is the plain minimum over cross pairs, which is
/// what the definition spells out (a true Hausdorff distance would take
/// a max-min).
pub fn set_distance(t: &Tree, s1: &[usize], s2: &[usize]) -> Result<usize, TreeError> {
    if s1.is_empty() || s2.is_empty() {
        return Err(TreeError::EmptySet);
    }
    for &v in s1.iter().chain(s2) {
        if v >= t.n() {
            return Err(TreeError::BadVertex { vertex: v });
        }
    }
    let mut best = usize::MAX;
    for &u in s1 {
        let d = t.bfs_dist(u);
        for &v in s2 {
            best = best.min(d[v]);
        }
    }
    Ok(best)
}

fn argmin_usize(xs: &[usize]) -> Vec<usize> {
    let m = xs.iter().copied().min().unwrap();
    (0..xs.len()).filter(|&v| xs[v] == m).collect()
}

fn argmin_u64(xs: &[u64]) -> Vec<usize> {
    let m = xs.iter().copied().min().unwrap();
    (0..xs.len()).filter(|&v| xs[v] == m).collect()
}

fn argmax_big(xs: &[BigCount]) -> Vec<usize> {
    let m = xs.iter().max().unwrap();
    (0..xs.len()).filter(|&v| &xs[v] == m).collect()
}

/// Local center test: `v` is central iff some branch reaches its
/// eccentricity and a second, disjoint branch reaches at least
/// eccentricity minus one (with the degenerate `w = v` reading covering
/// eccentricity at most one).
fn center_by_characterization(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let mut out = Vec::new();
    for v in 0..n {
        let d = t.bfs_dist(v);
        let ecc = d.iter().copied().max().unwrap();
        // max distance from v within each neighbor branch
        let mut first_step = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(v);
        let mut seen = vec![false; n];
        seen[v] = true;
        while let Some(u) = queue.pop_front() {
            for &w in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    first_step[w] = if u == v { w } else { first_step[u] };
                    queue.push_back(w);
                }
            }
        }
        let mut branch_max = std::collections::HashMap::new();
        for u in 0..n {
            if u != v {
                let e = branch_max.entry(first_step[u]).or_insert(0usize);
                *e = (*e).max(d[u]);
            }
        }
        let mut tops: Vec<usize> = branch_max.values().copied().collect();
        tops.sort_unstable_by(|a, b| b.cmp(a));
        let second = tops.get(1).copied().unwrap_or(0);
        let ok = tops.first().copied().unwrap_or(0) == ecc
            && (ecc <= 1 || second + 1 >= ecc);
        if ok {
            out.push(v);
        }
    }
    out
}

/// Local centroid test: `u` is a centroid vertex iff no neighbor's
/// component in `T - uv` outweighs `u`'s own.
fn centroid_by_characterization(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let rt = RootedTree::new(t.clone(), 0).expect("root 0 in range");
    let sizes = rt.subtree_sizes();
    let side = |u: usize, v: usize| -> usize {
        // order of v's component in T - uv
        if rt.parent(v) == Some(u) {
            sizes[v]
        } else {
            n - sizes[u]
        }
    };
    (0..n)
        .filter(|&u| t.neighbors(u).iter().all(|&v| 2 * side(u, v) <= n))
        .collect()
}

/// Local core test: `u` is a core vertex iff its side of every incident
/// edge carries at least as many containing subtrees as the far side.
fn core_by_characterization(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let rt = RootedTree::new(t.clone(), 0).expect("root 0 in range");
    let counts = subtree_counts(&rt);
    let ok = |u: usize| -> bool {
        t.neighbors(u).iter().all(|&v| {
            // compare F_{T-uv}(u) against F_{T-uv}(v)
            if rt.parent(v) == Some(u) {
                counts.up[v] >= counts.down[v]
            } else {
                counts.down[u] >= counts.up[u]
            }
        })
    };
    (0..n).filter(|&u| ok(u)).collect()
}

/// Center, centroid, and core with pairwise set distances.
///
/// Each set is derived twice — argmin/argmax over [`vertex_functions`]
/// and the local edge characterizations — and the derivations must
/// agree; disagreement would mean a bug and panics.
pub fn middle_report(t: &Tree) -> MiddleReport {
    if t.n() == 1 {
        return MiddleReport {
            center: vec![0],
            centroid: vec![0],
            core: vec![0],
            d_c_ct: 0,
            d_ct_core: 0,
            d_c_core: 0,
        };
    }
    let vf = vertex_functions(t);
    let center = argmin_usize(&vf.ecc);
    let centroid = argmin_u64(&vf.dist);
    let core = argmax_big(&vf.subtrees);

    let center2 = center_by_characterization(t);
    let centroid2 = centroid_by_characterization(t);
    let core2 = core_by_characterization(t);
    assert_eq!(center, center2, "center characterization disagrees");
    assert_eq!(centroid, centroid2, "centroid characterization disagrees");
    assert_eq!(core, core2, "core characterization disagrees");

    let d_c_ct = set_distance(t, &center, &centroid).unwrap();
    let d_ct_core = set_distance(t, &centroid, &core).unwrap();
    let d_c_core = set_distance(t, &center, &core).unwrap();
    MiddleReport { center, centroid, core, d_c_ct, d_ct_core, d_c_core }
}
