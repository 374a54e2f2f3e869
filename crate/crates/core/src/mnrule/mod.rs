//! Products `p_r * g_lambda` (K-k-Schur) and `p_r * s_lambda` (k-Schur) in the
//! same basis, by the hook-word rule and by the raw double sum.

mod candidates;
mod kset;
mod oracle;
mod power_sum;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::actions::Representation;
use crate::correspondences::BoundedPartition;
use crate::error::{Error, Result};
use crate::hookwords::{classify, Connectivity, HookClassification, HookType, Side};
use crate::shapes::Partition;

pub use candidates::{candidate_mus, passes};
pub use kset::{build_dot_set, build_star_set, build_word_set, KSetBranch, KSetBuild};
pub use oracle::{oracle_coefficient_map, oracle_expand};
pub use power_sum::{power_sum_terms, raw_power_sum, SignedWordMultiset};
pub use verify::{check_instance, grid, verify_grid, verify_instances, GridReport, Instance, Mismatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// K-k-Schur functions, star action.
    K,
    /// k-Schur functions, dot action.
    S,
}

impl Variant {
    pub fn representation(self) -> Representation {
        match self {
            Variant::K => Representation::Star,
            Variant::S => Representation::Dot,
        }
    }

    /// `(-1)^(r - |mu| + |lambda|)` for K, `1` for S.
    pub fn outer_sign(self, r: usize, lambda: &Partition, mu: &Partition) -> i64 {
        match self {
            Variant::K => parity_sign(r + mu.size() - lambda.size()),
            Variant::S => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::K => "K",
            Variant::S => "S",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "K" | "k" => Ok(Variant::K),
            "S" | "s" => Ok(Variant::S),
            other => Err(Error::Parse(format!("unknown variant {other:?}, expected K or S"))),
        }
    }
}

pub(crate) fn parity_sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Weight of a hook-word class in the cancellation-free power sum `p_r`.
pub fn census_weight(class: &HookClassification, r: usize) -> i64 {
    let asc = class.asc;
    match (class.hook_type, class.connectivity, class.side) {
        (HookType::V, con, _) if con.is_weak_connected() => parity_sign(asc),
        (HookType::U, con, _) if con.is_weak_connected() && asc + 2 <= r => {
            parity_sign(asc + 1) * (r - asc - 1) as i64
        }
        (HookType::U, Connectivity::Disconnected, Some(Side::Left)) if asc + 3 <= r => parity_sign(asc + 1),
        _ => 0,
    }
}

/// Weight of a class in the k-Schur census: connected V words only.
pub fn dot_census_weight(class: &HookClassification) -> i64 {
    match (class.hook_type, class.connectivity) {
        (HookType::V, Connectivity::Connected) => parity_sign(class.asc),
        _ => 0,
    }
}

/// An integer combination of basis elements indexed by bounded partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub lambda: BoundedPartition,
    pub terms: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct Term {
    mu: Vec<usize>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    k: usize,
    r: usize,
    variant: Variant,
    lambda: Vec<usize>,
    terms: Vec<Term>,
}

impl Expansion {
    pub fn coefficient(&self, mu: &Partition) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Terms in reverse-lexicographic order of `mu`.
    pub fn sorted_terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(mu, &c)| (mu, c))
    }

    pub fn to_json(&self) -> String {
        let wire = ExpansionJson {
            k: self.k,
            r: self.r,
            variant: self.variant,
            lambda: self.lambda.shape().parts().to_vec(),
            terms: self.sorted_terms().map(|(mu, coeff)| Term { mu: mu.parts().to_vec(), coeff }).collect(),
        };
        serde_json::to_string(&wire).expect("expansion serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: ExpansionJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let lambda = BoundedPartition::new(Partition::new(wire.lambda)?, wire.k)?;
        let mut terms = BTreeMap::new();
        for t in wire.terms {
            terms.insert(Partition::new(t.mu)?, t.coeff);
        }
        Ok(Expansion { k: wire.k, r: wire.r, variant: wire.variant, lambda, terms })
    }
}

pub(crate) fn check_degree(lambda: &BoundedPartition, r: usize) -> Result<()> {
    let k = lambda.k();
    if r == 0 || r > k {
        return Err(Error::DegreeOutOfRange { r, min: 1, k });
    }
    Ok(())
}

/// `sum over mu of weight(r, mu, lambda) * census(mu)`, where the census runs
/// over the weak hook words of length `r` sending `lambda` to `mu` under `rep`.
pub fn generic_expand<F>(
    lambda: &BoundedPartition,
    r: usize,
    rep: Representation,
    weight: F,
) -> Result<BTreeMap<Partition, i64>>
where
    F: Fn(usize, &Partition, &Partition) -> i64,
{
    check_degree(lambda, r)?;
    let mut terms = BTreeMap::new();
    for mu in candidate_mus(lambda, r, Variant::K) {
        if rep == Representation::Dot && mu.size() != lambda.size() + r {
            continue;
        }
        let census: i64 = build_word_set(lambda, &mu, r, rep)
            .words
            .iter()
            .filter_map(classify)
            .map(|c| census_weight(&c, r))
            .sum();
        let coeff = weight(r, mu.shape(), lambda.shape()) * census;
        if coeff != 0 {
            terms.insert(mu.into_shape(), coeff);
        }
    }
    Ok(terms)
}

/// Coefficient of `mu` in `p_r` times the basis element at `lambda`, from
/// the word set of the pair.
pub fn mn_coefficient(lambda: &BoundedPartition, mu: &BoundedPartition, r: usize, variant: Variant) -> i64 {
    let words = build_word_set(lambda, mu, r, variant.representation()).words;
    let census: i64 = match variant {
        Variant::K => words.iter().filter_map(classify).map(|c| census_weight(&c, r)).sum(),
        Variant::S => words.iter().filter_map(classify).map(|c| dot_census_weight(&c)).sum(),
    };
    variant.outer_sign(r, lambda.shape(), mu.shape()) * census
}

/// The hook-word rule: candidates filtered at the partition level, each
/// coefficient from its word set.
pub fn mn_expand(lambda: &BoundedPartition, r: usize, variant: Variant) -> Result<Expansion> {
    check_degree(lambda, r)?;
    let terms = candidate_mus(lambda, r, variant)
        .into_iter()
        .filter_map(|mu| {
            let c = mn_coefficient(lambda, &mu, r, variant);
            (c != 0).then(|| (mu.into_shape(), c))
        })
        .collect();
    Ok(Expansion { k: lambda.k(), r, variant, lambda: lambda.clone(), terms })
}
