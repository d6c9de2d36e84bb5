//! Brute-force verification campaigns over exhaustively enumerated
//! trees, and the exact solver for minimizing root-containing subtrees
//! at fixed order and height.
//!
//! Campaigns fan out over worker stripes of the enumeration stream; all
//! reductions are associative and commutative (min/max/bounded set
//! union), so every report is identical regardless of worker count.
//! Wall-clock `runtime_ms` is the one field outside that guarantee.

pub mod campaigns;
pub mod optimal;

pub use campaigns::*;
pub use optimal::*;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::BoundError;
use crate::constructions::ConstructError;
use crate::enumeration::EnumError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("no split profile realizes order {n} at height {h}")]
    NoProfile { n: usize, h: usize },
    #[error("requires h >= 1 and n >= h+1, got n={n}, h={h}")]
    BadOrderHeight { n: usize, h: usize },
}

/// Outcome record of one verification claim.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    /// Computed extremum, as a decimal string (may be a big count).
    pub extremum: Option<String>,
    /// Applicable closed-form bound, as a decimal string.
    pub bound: Option<String>,
    pub pass: bool,
    /// Canonical edge-list encodings of extremal trees (bounded
    /// deterministic sample; `params["achiever_count"]` is exact).
    pub achievers: Vec<String>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(claim: &str) -> VerificationReport {
        VerificationReport {
            claim: claim.to_string(),
            params: BTreeMap::new(),
            extremum: None,
            bound: None,
            pass: true,
            achievers: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// Which pair of middle parts a campaign measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MiddlePair {
    CenterCentroid,
    CentroidCore,
    CenterCore,
}

impl MiddlePair {
    pub fn key(self) -> &'static str {
        match self {
            MiddlePair::CenterCentroid => "c-ct",
            MiddlePair::CentroidCore => "ct-core",
            MiddlePair::CenterCore => "c-core",
        }
    }

    pub fn of(self, r: &crate::tree_core::MiddleReport) -> usize {
        match self {
            MiddlePair::CenterCentroid => r.d_c_ct,
            MiddlePair::CentroidCore => r.d_ct_core,
            MiddlePair::CenterCore => r.d_c_core,
        }
    }
}

/// How many extremal trees a report retains verbatim.
pub const ACHIEVER_CAP: usize = 16;

/// Deterministically bounded achiever collection: keeps the
/// lexicographically smallest `ACHIEVER_CAP` encodings plus an exact
/// total, so merged results are independent of partitioning.
#[derive(Debug, Clone, Default)]
pub(crate) struct AchieverSet {
    items: BTreeSet<String>,
    pub total: u64,
}

impl AchieverSet {
    pub fn insert(&mut self, enc: String) {
        self.total += 1;
        self.items.insert(enc);
        self.trim();
    }

    pub fn clear(&mut self) {
        self.items.clear();
        self.total = 0;
    }

    pub fn merge(&mut self, other: AchieverSet) {
        self.total += other.total;
        for item in other.items {
            self.items.insert(item);
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.items.len() > ACHIEVER_CAP {
            let last = self.items.iter().next_back().cloned().expect("nonempty");
            self.items.remove(&last);
        }
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.items.iter().cloned().collect()
    }
}

/// Runs `step` over a fresh copy of the stream per worker, each worker
/// taking every `workers`-th item. Partial accumulators are returned in
/// worker order; callers merge with associative/commutative operations.
pub(crate) fn striped_fold<I, T, A>(
    workers: usize,
    make_iter: impl Fn() -> I + Sync,
    make_acc: impl Fn() -> A + Sync,
    step: impl Fn(&mut A, T) + Sync,
) -> Vec<A>
where
    I: Iterator<Item = T>,
    A: Send,
{
    let w = workers.max(1);
    if w == 1 {
        let mut acc = make_acc();
        for item in make_iter() {
            step(&mut acc, item);
        }
        return vec![acc];
    }
    std::thread::scope(|scope| {
        let make_iter = &make_iter;
        let make_acc = &make_acc;
        let step = &step;
        let handles: Vec<_> = (0..w)
            .map(|id| {
                scope.spawn(move || {
                    let mut acc = make_acc();
                    for (i, item) in make_iter().enumerate() {
                        if i % w == id {
                            step(&mut acc, item);
                        }
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

pub(crate) fn elapsed_ms(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}
