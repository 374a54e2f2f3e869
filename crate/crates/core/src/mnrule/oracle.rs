//! Brute-force expansion: every word `d_A i_B` of the double sum applied to
//! the core of `lambda`.

use std::collections::BTreeMap;

use crate::actions::{act, cyclically_decreasing, cyclically_increasing, subsets_of_size};
use crate::correspondences::{bounded_of_core, core_of_bounded, BoundedPartition};
use crate::error::Result;
use crate::shapes::Partition;

use super::power_sum::double_sum_shape;
use super::{check_degree, Expansion, Variant};

pub fn oracle_coefficient_map(lambda: &BoundedPartition, r: usize, variant: Variant) -> Result<BTreeMap<Partition, i64>> {
    check_degree(lambda, r)?;
    let k = lambda.k();
    let kappa = core_of_bounded(lambda);
    let rep = variant.representation();
    let mut terms: BTreeMap<Partition, i64> = BTreeMap::new();
    for (a, b, sign) in double_sum_shape(r) {
        for set_a in subsets_of_size(k + 1, a) {
            let d = cyclically_decreasing(&set_a, k)?;
            for set_b in subsets_of_size(k + 1, b) {
                let word = d.concat(&cyclically_increasing(&set_b, k)?);
                if let Some(core) = act(&word, &kappa, rep).into_core() {
                    let mu = bounded_of_core(&core).into_shape();
                    let weight = variant.outer_sign(r, lambda.shape(), &mu);
                    *terms.entry(mu).or_default() += sign * weight;
                }
            }
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(terms)
}

pub fn oracle_expand(lambda: &BoundedPartition, r: usize, variant: Variant) -> Result<Expansion> {
    let terms = oracle_coefficient_map(lambda, r, variant)?;
    Ok(Expansion { k: lambda.k(), r, variant, lambda: lambda.clone(), terms })
}
