//! Noncommutative power sums as signed collections of generator words.

use std::collections::BTreeMap;

use crate::actions::{act, cyclically_decreasing, cyclically_increasing, subsets_of_size, Representation};
use crate::correspondences::GeneratorWord;
use crate::error::{Error, Result};
use crate::hookwords::{all_words, classify};
use crate::shapes::{Core, Partition};

use super::census_weight;

/// Words with integer multiplicities; words with multiplicity zero are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedWordMultiset {
    terms: BTreeMap<GeneratorWord, i64>,
}

impl SignedWordMultiset {
    pub fn new() -> Self {
        SignedWordMultiset::default()
    }

    pub fn add(&mut self, word: GeneratorWord, weight: i64) {
        let entry = self.terms.entry(word.clone()).or_default();
        *entry += weight;
        if *entry == 0 {
            self.terms.remove(&word);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GeneratorWord, i64> {
        &self.terms
    }

    pub fn weight(&self, word: &GeneratorWord) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The signed sum of the images of `core`, with the star sign folded in
    /// under [`Representation::Star`].
    pub fn act_on(&self, core: &Core, rep: Representation) -> BTreeMap<Partition, i64> {
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        for (word, &weight) in &self.terms {
            if let Some(image) = act(word, core, rep).into_core() {
                let sign = match rep {
                    Representation::Star if (word.len() + image.size() - core.size()) % 2 == 1 => -1,
                    _ => 1,
                };
                *out.entry(image.shape().clone()).or_default() += sign * weight;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

fn check_degree(k: usize, r: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if r == 0 || r > k {
        return Err(Error::DegreeOutOfRange { r, min: 1, k });
    }
    Ok(())
}

/// The cancellation-free form: every weak hook word of length `r` with its
/// class weight.
pub fn power_sum_terms(k: usize, r: usize) -> Result<SignedWordMultiset> {
    check_degree(k, r)?;
    let mut out = SignedWordMultiset::new();
    for word in all_words(k, r) {
        if let Some(class) = classify(&word) {
            let w = census_weight(&class, r);
            if w != 0 {
                out.add(word, w);
            }
        }
    }
    Ok(out)
}

/// The double sum over `h_{r-i+j} e_{i-j}` with sign `(-1)^(i+j)`, kept as
/// literal words `d_A i_B`.
pub fn raw_power_sum(k: usize, r: usize) -> Result<SignedWordMultiset> {
    check_degree(k, r)?;
    let mut out = SignedWordMultiset::new();
    for (a, b, sign) in double_sum_shape(r) {
        for set_a in subsets_of_size(k + 1, a) {
            let d = cyclically_decreasing(&set_a, k)?;
            for set_b in subsets_of_size(k + 1, b) {
                out.add(d.concat(&cyclically_increasing(&set_b, k)?), sign);
            }
        }
    }
    Ok(out)
}

/// `(|A|, |B|, sign)` for each `(i, j)` with `0 <= j <= i < r`.
pub(crate) fn double_sum_shape(r: usize) -> Vec<(usize, usize, i64)> {
    (0..r)
        .flat_map(|i| (0..=i).map(move |j| (r - i + j, i - j, if (i + j) % 2 == 0 { 1 } else { -1 })))
        .collect()
}
