//! Cyclic intervals, cyclically decreasing and increasing words, and the two
//! module actions of generator words on cores.
//!
//! Under [`Representation::Star`] a letter `i` adds every addable corner of
//! residue `i`, fixes the core when a removable corner of residue `i` exists,
//! and otherwise sends it to zero. [`Representation::Dot`] adds or sends to
//! zero. Zero absorbs every later letter.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::correspondences::{bounded_of_core, core_of_bounded, BoundedPartition, GeneratorWord};
use crate::error::{Error, Result};
use crate::shapes::{Core, Partition};

/// The linear order `a+1 < ... < k < 0 < ... < a-1` on `[0,k] \ {a}`, where
/// `a` is the least residue missing from the generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicInterval {
    k: usize,
    missing: usize,
    order: Vec<usize>,
}

impl CyclicInterval {
    pub fn new(set: &BTreeSet<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some(&letter) = set.iter().find(|&&x| x > k) {
            return Err(Error::ResidueOutOfRange { letter, k });
        }
        let missing = (0..=k).find(|x| !set.contains(x)).ok_or(Error::FullSupport(k))?;
        let order = (1..=k).map(|step| (missing + step) % (k + 1)).collect();
        Ok(CyclicInterval { k, missing, order })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The residue left out of the order.
    pub fn missing(&self) -> usize {
        self.missing
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `letter` in the order; `None` for the missing residue.
    pub fn rank(&self, letter: usize) -> Option<usize> {
        if letter > self.k || letter == self.missing {
            return None;
        }
        Some((letter + self.k + 1 - self.missing - 1) % (self.k + 1))
    }

    pub fn letter(&self, rank: usize) -> usize {
        self.order[rank]
    }

    /// Sorts letters into increasing order. Every letter must lie in the order.
    pub fn sort_increasing(&self, letters: &mut [usize]) {
        letters.sort_by_key(|&l| self.rank(l).expect("letter outside cyclic interval"));
    }

    /// True when `set` is a contiguous block of this order.
    pub fn is_interval(&self, set: &BTreeSet<usize>) -> bool {
        let mut ranks: Vec<usize> = match set.iter().map(|&x| self.rank(x)).collect::<Option<_>>() {
            Some(r) => r,
            None => return false,
        };
        ranks.sort_unstable();
        ranks.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

pub fn cyclic_interval(set: &BTreeSet<usize>, k: usize) -> Result<CyclicInterval> {
    CyclicInterval::new(set, k)
}

/// True when `set` is a proper subset of `[0,k]` forming an interval of its
/// own cyclic interval.
pub fn is_k_connected(set: &BTreeSet<usize>, k: usize) -> bool {
    CyclicInterval::new(set, k).map(|order| order.is_interval(set)).unwrap_or(false)
}

/// The canonical spelling of `d_A`: the elements of `A` in decreasing order of
/// `I_A`, so that `i+1` always precedes `i`.
pub fn cyclically_decreasing(set: &BTreeSet<usize>, k: usize) -> Result<GeneratorWord> {
    let order = CyclicInterval::new(set, k)?;
    let mut letters: Vec<usize> = set.iter().copied().collect();
    order.sort_increasing(&mut letters);
    letters.reverse();
    Ok(GeneratorWord::from_letters(k, letters))
}

/// `i_A`, the reverse of [`cyclically_decreasing`].
pub fn cyclically_increasing(set: &BTreeSet<usize>, k: usize) -> Result<GeneratorWord> {
    Ok(cyclically_decreasing(set, k)?.reversed())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Representation {
    /// 0-Hecke action: add, absorb, or zero.
    Star,
    /// nilCoxeter action: add or zero.
    Dot,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representation::Star => "star",
            Representation::Dot => "dot",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ActionResult {
    Core(Core),
    Zero,
}

impl ActionResult {
    pub fn core(&self) -> Option<&Core> {
        match self {
            ActionResult::Core(c) => Some(c),
            ActionResult::Zero => None,
        }
    }

    pub fn into_core(self) -> Option<Core> {
        match self {
            ActionResult::Core(c) => Some(c),
            ActionResult::Zero => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ActionResult::Zero)
    }
}

pub fn act_letter(i: usize, core: &Core, rep: Representation) -> ActionResult {
    if let Some(grown) = core.grow(i) {
        return ActionResult::Core(grown);
    }
    match rep {
        Representation::Star if core.has_removable_of_residue(i) => ActionResult::Core(core.clone()),
        _ => ActionResult::Zero,
    }
}

/// Applies the letters of `word` to `core`, rightmost first.
pub fn act(word: &GeneratorWord, core: &Core, rep: Representation) -> ActionResult {
    act_letters(word.letters(), core, rep)
}

pub(crate) fn act_letters(letters: &[usize], core: &Core, rep: Representation) -> ActionResult {
    let mut cur = core.clone();
    for &i in letters.iter().rev() {
        match act_letter(i, &cur, rep) {
            ActionResult::Core(next) => cur = next,
            ActionResult::Zero => return ActionResult::Zero,
        }
    }
    ActionResult::Core(cur)
}

/// The action transported to bounded partitions; `None` is zero.
pub fn act_bounded(
    word: &GeneratorWord,
    lambda: &BoundedPartition,
    rep: Representation,
) -> Option<BoundedPartition> {
    act(word, &core_of_bounded(lambda), rep).into_core().map(|c| bounded_of_core(&c))
}

/// The sign `(-1)^(weak length - change in Coxeter length)` attached to a
/// star-action step from `before` to `after`.
pub fn star_sign(weak_length: usize, before: &BoundedPartition, after: &BoundedPartition) -> i64 {
    let grown = after.size() - before.size();
    if (weak_length - grown).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn pieri(
    r: usize,
    lambda: &BoundedPartition,
    rep: Representation,
    word_of: fn(&BTreeSet<usize>, usize) -> Result<GeneratorWord>,
) -> Result<BTreeMap<Partition, i64>> {
    let k = lambda.k();
    if r > k {
        return Err(Error::DegreeOutOfRange { r, min: 0, k });
    }
    let core = core_of_bounded(lambda);
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for subset in subsets_of_size(k + 1, r) {
        let word = word_of(&subset, k)?;
        if let Some(c) = act(&word, &core, rep).into_core() {
            let mu = bounded_of_core(&c);
            let weight = match rep {
                Representation::Star => star_sign(r, lambda, &mu),
                Representation::Dot => 1,
            };
            *out.entry(mu.into_shape()).or_default() += weight;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// `h_r` applied to the basis element at `lambda`: the sum over `r`-subsets
/// `A` of `[0,k]` of the weighted terms at `d_A * lambda`.
pub fn pieri_h(r: usize, lambda: &BoundedPartition, rep: Representation) -> Result<BTreeMap<Partition, i64>> {
    pieri(r, lambda, rep, cyclically_decreasing)
}

/// `e_r` applied to the basis element at `lambda`, using `i_A`.
pub fn pieri_e(r: usize, lambda: &BoundedPartition, rep: Representation) -> Result<BTreeMap<Partition, i64>> {
    pieri(r, lambda, rep, cyclically_increasing)
}

/// All `size`-element subsets of `0..n`, in lexicographic order.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<BTreeSet<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if left == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        for x in start..n {
            if n - x < left {
                break;
            }
            cur.push(x);
            go(x + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        go(0, n, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Every subset of `set`, smallest first.
pub(crate) fn all_subsets(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    (0u32..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect())
        .collect()
}
