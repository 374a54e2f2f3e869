//! Rule against oracle over a grid of instances.

use std::fmt;

use crate::correspondences::BoundedPartition;
use crate::error::Result;
use crate::shapes::Partition;

use super::{mn_expand, oracle_expand, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub lambda: BoundedPartition,
    pub r: usize,
    pub variant: Variant,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lambda = if self.lambda.shape().is_empty() { "-".to_string() } else { self.lambda.to_string() };
        write!(f, "{} {} {} {}", self.lambda.k(), self.r, lambda, self.variant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub instance: Instance,
    pub mu: Partition,
    pub rule: i64,
    pub oracle: i64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: mu=({}) rule={} oracle={}", self.instance, self.mu, self.rule, self.oracle)
    }
}

/// The first differing coefficient (smallest `mu` first), if any.
pub fn check_instance(instance: &Instance) -> Result<Option<Mismatch>> {
    let rule = mn_expand(&instance.lambda, instance.r, instance.variant)?;
    let oracle = oracle_expand(&instance.lambda, instance.r, instance.variant)?;
    let mut keys: Vec<&Partition> = rule.terms.keys().chain(oracle.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().find_map(|mu| {
        let (a, b) = (rule.coefficient(mu), oracle.coefficient(mu));
        (a != b).then(|| Mismatch { instance: instance.clone(), mu: mu.clone(), rule: a, oracle: b })
    }))
}

/// Per-`(k, variant)` counts of checked instances, in grid order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridReport {
    pub counts: Vec<(usize, Variant, usize)>,
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

/// Instances ordered by `k`, then `|lambda|`, then `lambda`, then `r`, then variant.
pub fn grid(kmax: usize, sizemax: usize, variants: &[Variant]) -> Vec<Instance> {
    let mut out = Vec::new();
    for k in 1..=kmax {
        for lambda in BoundedPartition::all_up_to(k, sizemax) {
            for r in 1..=k {
                for &variant in variants {
                    out.push(Instance { lambda: lambda.clone(), r, variant });
                }
            }
        }
    }
    out
}

/// Checks every instance of [`grid`], stopping at the first mismatch.
pub fn verify_grid(kmax: usize, sizemax: usize, variants: &[Variant]) -> Result<GridReport> {
    verify_instances(&grid(kmax, sizemax, variants))
}

pub fn verify_instances(instances: &[Instance]) -> Result<GridReport> {
    let mut report = GridReport::default();
    for inst in instances {
        let key = (inst.lambda.k(), inst.variant);
        match report.counts.iter_mut().find(|(k, v, _)| (*k, *v) == key) {
            Some(entry) => entry.2 += 1,
            None => report.counts.push((key.0, key.1, 1)),
        }
        report.checked += 1;
        if let Some(m) = check_instance(inst)? {
            report.mismatch = Some(m);
            break;
        }
    }
    Ok(report)
}
