//! Exact computation of the three "middle parts" of a tree — the center
//! (minimum eccentricity), the centroid (minimum distance sum), and the
//! subtree core (maximum number of containing subtrees) — together with
//! the machinery needed to study how far apart they can drift:
//!
//! * [`tree_core`] — trees, rooted trees, vertex functions, subtree
//!   counting (exact, arbitrary precision), and middle-part reports.
//! * [`constructions`] — deterministic builders for the extremal
//!   families: comets, split forests, level-greedy / greedy / rooted
//!   greedy trees, extended good and rgood trees, binary families.
//! * [`enumeration`] — isomorph-free exhaustive generation of free and
//!   rooted trees at small order, plus an independent labeled oracle.
//! * [`bounds`] — closed-form integer bounds on pairwise middle-part
//!   distances, for unrestricted, degree-bounded, and diameter-bounded
//!   trees.
//! * [`verify`] — brute-force verification campaigns and the exact
//!   solver for minimizing root-containing subtrees at fixed order and
//!   height.
//! * [`formats`] — edge-list file format, DOT export, and JSON reports.
//!
//! All counting is done in exact integer arithmetic; no floating point
//! is used anywhere on a counting or bound path.
//!
//! ```
//! use midparts::tree_core::{build_tree, middle_report};
//!
//! // a six-vertex spine with three pendants at one end: the three
//! // middle parts land on three consecutive spine vertices
//! let tree = build_tree(
//!     9,
//!     &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (0, 7), (0, 8)],
//! )
//! .unwrap();
//! let report = middle_report(&tree);
//! assert_eq!(report.center, vec![2]);
//! assert_eq!(report.centroid, vec![1]);
//! assert_eq!(report.core, vec![0]);
//! assert_eq!(report.d_c_core, 2);
//! ```

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod formats;
pub mod tree_core;
pub mod verify;

pub use num_bigint::BigUint;
