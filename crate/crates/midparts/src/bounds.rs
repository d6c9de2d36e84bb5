//! Closed-form integer bounds on the pairwise distances between middle
//! parts, for trees of given order, given maximum degree, and given
//! diameter.
//!
//! Every function here is a pure integer map. Expressions that are
//! naturally stated through logarithms are implemented as integer
//! threshold searches that agree exactly with the ceiling-of-log forms,
//! so no floating point can perturb a boundary case.

use num_bigint::BigUint;
use thiserror::Error;

use crate::constructions::extended_rgood;
use crate::tree_core::count_subtrees_at;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("requires n >= {min}, got {got}")]
    OrderTooSmall { min: u64, got: u64 },
    #[error("requires n > 8")]
    NeedsOrderAboveEight,
    #[error("requires D >= 2")]
    DiameterTooSmall,
    #[error("requires k >= 3")]
    DegreeTooSmall,
    #[error("requires n > k")]
    OrderNotAboveDegree,
    #[error("requires 0 <= k <= h-1 and h >= 1")]
    SplitParameter,
    #[error("requires n >= 1")]
    NotPositive,
}

/// Largest `t` with `2^t <= n`.
pub fn ilog2_floor(n: u64) -> Result<u64, BoundError> {
    if n < 1 {
        return Err(BoundError::NotPositive);
    }
    let mut t = 0;
    while (1u64 << (t + 1)) <= n {
        t += 1;
    }
    Ok(t)
}

/// Smallest `t` with `2^t >= n`.
pub fn ilog2_ceil(n: u64) -> Result<u64, BoundError> {
    if n < 1 {
        return Err(BoundError::NotPositive);
    }
    let mut t = 0;
    while (1u64 << t) < n {
        t += 1;
    }
    Ok(t)
}

/// Maximum possible center-centroid distance over trees of order `n`:
/// `floor((n-3)/4)`.
pub fn bound_center_centroid(n: u64) -> Result<u64, BoundError> {
    if n < 3 {
        return Err(BoundError::OrderTooSmall { min: 3, got: n });
    }
    Ok((n - 3) / 4)
}

/// Whether `n >= 2^(ceil(log2 n) - 1) + ceil(log2 n)`, the regime split
/// shared by the centroid-core and center-core bounds.
fn log_regime(n: u64) -> bool {
    let t = ilog2_ceil(n).expect("n > 8");
    n >= (1u64 << (t - 1)) + t
}

/// Bound on the centroid-core distance over trees of order `n > 8`.
pub fn bound_centroid_core(n: u64) -> Result<u64, BoundError> {
    if n <= 8 {
        return Err(BoundError::NeedsOrderAboveEight);
    }
    let lg = ilog2_floor(n)?;
    let base = (n - 1) / 2 - lg;
    Ok(if log_regime(n) { base - 1 } else { base })
}

/// The comet path length whose comet attains [`bound_centroid_core`].
pub fn centroid_core_comet(n: u64) -> Result<u64, BoundError> {
    if n <= 8 {
        return Err(BoundError::NeedsOrderAboveEight);
    }
    let lg = ilog2_floor(n)?;
    Ok(if log_regime(n) { n - lg - 1 } else { n - lg })
}

/// Bound on the center-core distance over trees of order `n > 8`.
pub fn bound_center_core(n: u64) -> Result<u64, BoundError> {
    if n <= 8 {
        return Err(BoundError::NeedsOrderAboveEight);
    }
    let lg = ilog2_floor(n)?;
    Ok(if log_regime(n) { (n - lg - 2) / 2 } else { (n - lg - 1) / 2 })
}

/// Bound on the center-centroid and center-core distances over trees of
/// diameter at most `d`: `floor((d-2)/2)`.
pub fn bound_diameter(d: u64) -> Result<u64, BoundError> {
    if d < 2 {
        return Err(BoundError::DiameterTooSmall);
    }
    Ok((d - 2) / 2)
}

/// Smallest height `h` with `sum_{i=0..h} (k-1)^i >= m`: the minimum
/// height of a rooted tree on `m` vertices with maximum degree `k` and
/// root degree at most `k-1`.
pub fn min_rooted_height(m: u64, k: u64) -> Result<u64, BoundError> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall);
    }
    if m < 1 {
        return Err(BoundError::NotPositive);
    }
    let mut h = 0u64;
    let mut capacity: u128 = 1;
    let mut layer: u128 = 1;
    while capacity < m as u128 {
        h += 1;
        layer *= (k - 1) as u128;
        capacity += layer;
    }
    Ok(h)
}

/// Degree-restricted center-centroid bound:
/// `floor((n - ceil((n+1)/2) - h_u) / 2)` with `h_u` the minimum height
/// of a majority-side blob, clamped at zero.
pub fn bound_deg_center_centroid(n: u64, k: u64) -> Result<u64, BoundError> {
    Ok(bound_deg_center_centroid_raw(n, k)?.max(0) as u64)
}

pub fn bound_deg_center_centroid_raw(n: u64, k: u64) -> Result<i64, BoundError> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall);
    }
    if n < 3 {
        return Err(BoundError::OrderTooSmall { min: 3, got: n });
    }
    let half = (n + 1).div_ceil(2);
    let h_u = min_rooted_height(half, k)?;
    Ok((n as i64 - half as i64 - h_u as i64).div_euclid(2))
}

/// Largest number of root-containing subtrees of any rooted tree on `m`
/// vertices with maximum degree `k` and root degree at most `k-1`: the
/// center-rooted star for `m <= k`, the extended rgood tree otherwise.
pub fn max_root_count(m: u64, k: u64) -> Result<BigUint, BoundError> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall);
    }
    if m < 1 {
        return Err(BoundError::NotPositive);
    }
    if m <= k {
        Ok(BigUint::from(2u32).pow(m as u32 - 1))
    } else {
        let rt = extended_rgood(m as usize, k as usize).expect("m > k >= 3");
        Ok(count_subtrees_at(&rt))
    }
}

/// Smallest order `m` such that a rooted tree on `m` vertices with
/// maximum degree `k` and root degree at most `k-1` can contain at
/// least `n - m` root-containing subtrees.
///
/// The scan walks `m` upward over the count-maximal tree of each order
/// ([`max_root_count`]); it terminates because the count grows with `m`
/// while `n - m` shrinks.
pub fn min_core_side_order(n: u64, k: u64) -> Result<u64, BoundError> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall);
    }
    if n <= k {
        return Err(BoundError::OrderNotAboveDegree);
    }
    let mut m = 1u64;
    loop {
        let need = n.saturating_sub(m);
        if max_root_count(m, k)? >= BigUint::from(need) {
            return Ok(m);
        }
        m += 1;
    }
}

/// Degree-restricted centroid-core bound:
/// `n - n' - ceil((n+1)/2) + 1`, clamped at zero.
pub fn bound_deg_centroid_core(n: u64, k: u64) -> Result<u64, BoundError> {
    Ok(bound_deg_centroid_core_raw(n, k)?.max(0) as u64)
}

pub fn bound_deg_centroid_core_raw(n: u64, k: u64) -> Result<i64, BoundError> {
    let n_prime = min_core_side_order(n, k)?;
    let half = (n + 1).div_ceil(2);
    Ok(n as i64 - n_prime as i64 - half as i64 + 1)
}

/// Degree-restricted center-core bound:
/// `n - n' - floor((n - n' + h')/2)` with `h'` the minimum height of an
/// `n'`-vertex blob, clamped at zero.
pub fn bound_deg_center_core(n: u64, k: u64) -> Result<u64, BoundError> {
    Ok(bound_deg_center_core_raw(n, k)?.max(0) as u64)
}

pub fn bound_deg_center_core_raw(n: u64, k: u64) -> Result<i64, BoundError> {
    let n_prime = min_core_side_order(n, k)?;
    let h_prime = min_rooted_height(n_prime, k)?;
    let gap = n as i64 - n_prime as i64;
    Ok(gap - (gap + h_prime as i64).div_euclid(2))
}

/// Root-containing subtrees of a root joined to a single split branch
/// of height budget `h` and split parameter `k`: `h + k^2 + k + 1`.
pub fn split_count(h: u64, k: u64) -> Result<u64, BoundError> {
    if h < 1 || k + 1 > h {
        return Err(BoundError::SplitParameter);
    }
    Ok(h + k * k + k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logs() {
        assert_eq!(ilog2_floor(12).unwrap(), 3);
        assert_eq!(ilog2_ceil(12).unwrap(), 4);
        assert_eq!(ilog2_floor(16).unwrap(), 4);
        assert_eq!(ilog2_ceil(16).unwrap(), 4);
        assert_eq!(ilog2_floor(1).unwrap(), 0);
        assert_eq!(ilog2_ceil(1).unwrap(), 0);
        assert_eq!(ilog2_floor(0), Err(BoundError::NotPositive));
    }

    #[test]
    fn center_centroid() {
        assert_eq!(bound_center_centroid(3).unwrap(), 0);
        assert_eq!(bound_center_centroid(8).unwrap(), 1);
        assert_eq!(bound_center_centroid(11).unwrap(), 2);
        assert!(bound_center_centroid(2).is_err());
    }

    #[test]
    fn centroid_core() {
        assert_eq!(bound_centroid_core(9).unwrap(), 1);
        assert_eq!(bound_centroid_core(12).unwrap(), 1);
        assert_eq!(bound_centroid_core(16).unwrap(), 2);
        assert_eq!(bound_centroid_core(8), Err(BoundError::NeedsOrderAboveEight));
        assert_eq!(centroid_core_comet(9).unwrap(), 6);
        assert_eq!(centroid_core_comet(12).unwrap(), 8);
    }

    #[test]
    fn center_core() {
        assert_eq!(bound_center_core(9).unwrap(), 2);
        assert_eq!(bound_center_core(12).unwrap(), 3);
        assert_eq!(bound_center_core(16).unwrap(), 5);
        assert!(bound_center_core(8).is_err());
    }

    #[test]
    fn diameter() {
        assert_eq!(bound_diameter(2).unwrap(), 0);
        assert_eq!(bound_diameter(4).unwrap(), 1);
        assert_eq!(bound_diameter(7).unwrap(), 2);
        assert!(bound_diameter(1).is_err());
    }

    #[test]
    fn packed_heights() {
        assert_eq!(min_rooted_height(8, 3).unwrap(), 3);
        assert_eq!(min_rooted_height(7, 3).unwrap(), 2);
        assert_eq!(min_rooted_height(1, 5).unwrap(), 0);
        assert!(min_rooted_height(4, 2).is_err());
    }

    #[test]
    fn deg_center_centroid() {
        assert_eq!(bound_deg_center_centroid(16, 3).unwrap(), 2);
        // floor((9 - 5 - 2)/2) = 1; a 9-vertex max-degree-3 tree attains it
        assert_eq!(bound_deg_center_centroid(9, 3).unwrap(), 1);
        assert_eq!(bound_deg_center_centroid(12, 4).unwrap(), 1);
    }

    #[test]
    fn core_side_orders() {
        assert_eq!(min_core_side_order(20, 3).unwrap(), 6);
        assert_eq!(min_core_side_order(30, 4).unwrap(), 7);
        // small orders fall into the star regime
        assert_eq!(min_core_side_order(10, 4).unwrap(), 4);
        assert!(min_core_side_order(3, 3).is_err());
    }

    #[test]
    fn deg_centroid_core() {
        assert_eq!(bound_deg_centroid_core(20, 3).unwrap(), 4);
        // the star regime keeps the blob order small enough that the
        // bound bottoms out at zero instead of going negative
        assert_eq!(bound_deg_centroid_core_raw(6, 4).unwrap(), 0);
        assert_eq!(bound_deg_centroid_core(6, 4).unwrap(), 0);
    }

    #[test]
    fn deg_center_core() {
        assert_eq!(bound_deg_center_core(20, 3).unwrap(), 6);
        let v = bound_deg_center_core(13, 3).unwrap();
        assert_eq!(v, 3);
    }

    #[test]
    fn split_counts() {
        assert_eq!(split_count(5, 0).unwrap(), 6);
        assert_eq!(split_count(5, 1).unwrap(), 8);
        assert_eq!(split_count(3, 2).unwrap(), 10);
        assert!(split_count(3, 3).is_err());
        assert!(split_count(0, 0).is_err());
    }
}
