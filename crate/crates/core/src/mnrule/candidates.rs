//! Partition-level filters that every `mu` with a nonzero coefficient passes.

use crate::actions::is_k_connected;
use crate::correspondences::{core_of_bounded, k_conjugate, BoundedPartition};
use crate::shapes::{Partition, SkewShape};

use super::Variant;

/// Candidates in reverse-lexicographic order.
pub fn candidate_mus(lambda: &BoundedPartition, r: usize, variant: Variant) -> Vec<BoundedPartition> {
    let k = lambda.k();
    let base = lambda.size();
    let sizes = match variant {
        Variant::K => base..=base + r,
        Variant::S => base + r..=base + r,
    };
    let mut out: Vec<BoundedPartition> = sizes
        .flat_map(|n| Partition::all_bounded(n, k))
        .filter(|p| p.contains(lambda.shape()))
        .map(|p| BoundedPartition::from_shape_unchecked(p, k))
        .filter(|mu| passes(lambda, mu, r, variant))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The containment, ribbon, support and height conditions for one pair.
pub fn passes(lambda: &BoundedPartition, mu: &BoundedPartition, r: usize, variant: Variant) -> bool {
    let m = lambda.k() + 1;
    let grown = mu.size().checked_sub(lambda.size());
    let size_ok = match variant {
        Variant::K => grown.is_some_and(|g| g <= r),
        Variant::S => grown == Some(r),
    };
    if !size_ok || !mu.shape().contains(lambda.shape()) {
        return false;
    }
    let (lk, mk) = (k_conjugate(lambda), k_conjugate(mu));
    let Ok(dual) = SkewShape::new(mk.into_shape(), lk.into_shape(), m) else {
        return false;
    };
    let (kappa, pi) = (core_of_bounded(lambda), core_of_bounded(mu));
    let Ok(core_skew) = SkewShape::new(pi.shape().clone(), kappa.shape().clone(), m) else {
        return false;
    };
    if !core_skew.is_ribbon() {
        return false;
    }
    let support = core_skew.support();
    let connected = is_k_connected(&support, lambda.k());
    let support_ok = match variant {
        Variant::K => connected || support.len() < r,
        Variant::S => connected,
    };
    if !support_ok {
        return false;
    }
    let plain = SkewShape::new(mu.shape().clone(), lambda.shape().clone(), m).expect("containment checked");
    let heights = plain.height() + dual.height();
    match variant {
        Variant::K => heights < r,
        Variant::S => heights + 1 == r,
    }
}
