//! Cross-module invariants checked by exhaustive sweeps at small order
//! and by randomized labeled trees.

use num_bigint::BigUint;
use proptest::prelude::*;

use midparts::constructions::{comet, level_greedy, LevelDegreeSequence};
use midparts::enumeration::{
    free_trees, rooted_trees, tree_from_prufer, EnumLimits, TreeFamilyConstraints,
};
use midparts::tree_core::{
    count_subtrees_at, count_subtrees_oracle, edge_split, middle_report, vertex_functions,
    RootedTree,
};
use midparts::verify::{
    brute_force_optimal, verify_concavity, verify_greedy, verify_majorization,
    verify_rgood_extremes,
};

fn limits() -> EnumLimits {
    EnumLimits::default()
}

/// Subset-enumeration oracle agrees with the product recursion on every
/// tree and vertex up to order 12.
#[test]
fn subtree_oracle_agreement() {
    for n in 1..=12 {
        for t in free_trees(n, TreeFamilyConstraints::NONE, limits()).unwrap() {
            let vf = vertex_functions(&t);
            for v in 0..n {
                assert_eq!(
                    count_subtrees_oracle(&t, v).unwrap(),
                    vf.subtrees[v],
                    "n={n}, v={v}"
                );
            }
        }
    }
}

/// Middle sets are a vertex or an edge, and the argmin/argmax route
/// agrees with the local characterizations (asserted inside
/// `middle_report`) on every tree up to order 12.
#[test]
fn middle_sets_and_characterizations() {
    for n in 1..=12 {
        for t in free_trees(n, TreeFamilyConstraints::NONE, limits()).unwrap() {
            let r = middle_report(&t);
            for set in [&r.center, &r.centroid, &r.core] {
                assert!(set.len() == 1 || set.len() == 2, "n={n}");
                if set.len() == 2 {
                    assert!(t.has_edge(set[0], set[1]), "n={n}");
                }
            }
        }
    }
}

/// If the centroid (resp. core) edge inequality is tight at an edge
/// with one endpoint in the set, the other endpoint is in the set too.
#[test]
fn equality_propagates_across_edges() {
    for n in 2..=10 {
        for t in free_trees(n, TreeFamilyConstraints::NONE, limits()).unwrap() {
            let r = middle_report(&t);
            for &u in &r.centroid {
                for &v in t.neighbors(u) {
                    let s = edge_split(&t, u, v).unwrap();
                    if s.size_u == s.size_v {
                        assert!(r.centroid.contains(&v), "centroid propagation at n={n}");
                    }
                }
            }
            for &u in &r.core {
                for &v in t.neighbors(u) {
                    let s = edge_split(&t, u, v).unwrap();
                    if s.count_u == s.count_v {
                        assert!(r.core.contains(&v), "core propagation at n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn concavity_holds_up_to_order_ten() {
    for n in 2..=10 {
        let r = verify_concavity(n, limits()).unwrap();
        assert!(r.pass, "n={n}: {:?}", r.params.get("failures"));
    }
}

/// Each side of an edge split carries between `size` and `2^(size-1)`
/// root-containing subtrees (the path and star extremes applied to the
/// component).
#[test]
fn edge_split_count_bounds() {
    for n in 2..=9 {
        for t in free_trees(n, TreeFamilyConstraints::NONE, limits()).unwrap() {
            for &(u, v) in t.edges() {
                let s = edge_split(&t, u, v).unwrap();
                assert_eq!(s.size_u + s.size_v, n);
                for (size, count) in [(s.size_u, &s.count_u), (s.size_v, &s.count_v)] {
                    assert!(*count >= BigUint::from(size));
                    assert!(*count <= BigUint::from(2u32).pow(size as u32 - 1));
                }
            }
        }
    }
}

/// Level-greedy output reproduces the level multisets it was built from.
#[test]
fn level_greedy_preserves_levels() {
    let cases = vec![
        vec![vec![2], vec![4, 3], vec![3, 3, 3, 2, 1], vec![1; 7]],
        vec![vec![3], vec![2, 2, 1], vec![1, 1]],
        vec![vec![1], vec![2], vec![1]],
    ];
    for levels in cases {
        let lds = LevelDegreeSequence::new(levels.clone()).unwrap();
        let rt = level_greedy(&lds).unwrap();
        let mut seen: Vec<Vec<usize>> = vec![Vec::new(); rt.height() + 1];
        for v in 0..rt.n() {
            seen[rt.depth(v)].push(rt.tree().degree(v));
        }
        for level in &mut seen {
            level.sort_unstable_by(|a, b| b.cmp(a));
        }
        assert_eq!(seen, lds.levels().to_vec());
    }
}

/// Strict majorization between rooted greedy degree sequences gives a
/// strict gap in root-containing subtrees.
#[test]
fn majorization_monotonicity() {
    for k in [3, 4] {
        let r = verify_majorization(9, k).unwrap();
        assert!(r.pass, "k={k}: {:?}", r.params.get("failures"));
    }
}

/// Greedy maximality over every degree sequence up to order 9, with no
/// degree cap at all (the acceptance criterion stops at degree 4).
#[test]
fn greedy_maximality_all_sequences() {
    let r = verify_greedy(9, 8, limits()).unwrap();
    assert!(r.pass, "{:?}", r.params.get("failures"));
}

/// The extended rgood tree minimizes height and the end-rooted path
/// uniquely minimizes root-containing subtrees over capped-root-degree
/// families up to order 12.
#[test]
fn rgood_height_and_path_extremes() {
    for k in [3usize, 4] {
        for n in (k + 1)..=12 {
            let r = verify_rgood_extremes(n, k, limits()).unwrap();
            assert!(r.pass, "(n={n}, k={k}): {:?}", r.params.get("failures"));
        }
    }
}

/// A larger height budget never increases the exhaustive minimum.
#[test]
fn optimal_minimum_monotone_in_height() {
    for n in 2..=11 {
        let mut prev: Option<BigUint> = None;
        for h in 1..n {
            let min = brute_force_optimal(n, h, limits()).unwrap().min;
            if let Some(p) = prev {
                assert!(min <= p, "n={n}, h={h}");
            }
            prev = Some(min);
        }
    }
}

/// Comets interpolate between the star and the path; spot-check the
/// middle parts match direct reports at both extremes.
#[test]
fn comet_extremes() {
    for n in 3..=10 {
        let star = comet(n, 1).unwrap();
        let r = middle_report(&star);
        assert_eq!(r.center, vec![0]);
        let path = comet(n, n).unwrap();
        let r = middle_report(&path);
        assert_eq!((r.d_c_ct, r.d_ct_core, r.d_c_core), (0, 0, 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Random labeled trees: the oracle, the recursion, and the rooted
    /// count all agree, and the middle sets stay a vertex or an edge.
    #[test]
    fn random_trees_consistent(n in 2usize..=10, seed in proptest::collection::vec(0usize..10, 8)) {
        let code: Vec<usize> = seed.iter().take(n.saturating_sub(2)).map(|&c| c % n).collect();
        let t = tree_from_prufer(n, &code).unwrap();
        let vf = vertex_functions(&t);
        for v in 0..n {
            prop_assert_eq!(&count_subtrees_oracle(&t, v).unwrap(), &vf.subtrees[v]);
            let rt = RootedTree::new(t.clone(), v).unwrap();
            prop_assert_eq!(&count_subtrees_at(&rt), &vf.subtrees[v]);
        }
        let r = middle_report(&t);
        for set in [&r.center, &r.centroid, &r.core] {
            prop_assert!(set.len() == 1 || set.len() == 2);
        }
    }

    /// The streamed free-tree representatives of a random order and
    /// constraint stay within the constraint.
    #[test]
    fn constrained_streams_respect_filters(n in 3usize..=9, k in 2usize..=4) {
        for t in free_trees(n, TreeFamilyConstraints::degree(k), limits()).unwrap() {
            prop_assert!(t.max_degree() <= k);
        }
        for rt in rooted_trees(n, TreeFamilyConstraints::height(k), limits()).unwrap() {
            prop_assert!(rt.height() <= k);
        }
    }
}
