//! Bounded partitions, Grassmannian words and cores, and the maps between them.
//!
//! A k-bounded partition is read into a word of residues, the word acts on the
//! empty core by simple reflections, and a core is collapsed back to a bounded
//! partition by counting cells of hook length at most `k` in each row. The
//! composite bounded -> word -> core -> bounded is the identity.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Core, Partition};

/// A finite word in the generators `0..=k`, read left to right and acting
/// right to left.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorWord {
    k: usize,
    letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(k: usize, letters: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l > k) {
            return Err(Error::ResidueOutOfRange { letter, k });
        }
        Ok(GeneratorWord { k, letters })
    }

    pub(crate) fn from_letters(k: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l <= k));
        GeneratorWord { k, letters }
    }

    pub fn empty(k: usize) -> Self {
        GeneratorWord { k, letters: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Weak length: the number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }

    /// `self` followed by `other` (so `other` acts first).
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        debug_assert_eq!(self.k, other.k);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GeneratorWord { k: self.k, letters }
    }

    pub fn reversed(&self) -> GeneratorWord {
        GeneratorWord { k: self.k, letters: self.letters.iter().rev().copied().collect() }
    }

    /// Parses `"2,3,0,4"`, or for `k <= 9` also the compact `"2304"`.
    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') || k > 9 {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        GeneratorWord::new(k, letters)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{self}]")
    }
}

/// A partition whose first part is at most `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedPartition {
    k: usize,
    shape: Partition,
}

impl BoundedPartition {
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if shape.row(1) > k {
            return Err(Error::NotBounded(shape.to_string(), k));
        }
        Ok(BoundedPartition { k, shape })
    }

    pub(crate) fn from_shape_unchecked(shape: Partition, k: usize) -> Self {
        debug_assert!(shape.row(1) <= k);
        BoundedPartition { k, shape }
    }

    pub fn empty(k: usize) -> Self {
        BoundedPartition { k, shape: Partition::empty() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Every k-bounded partition of size at most `max_size`, by size.
    pub fn all_up_to(k: usize, max_size: usize) -> Vec<BoundedPartition> {
        (0..=max_size)
            .flat_map(|n| Partition::all_bounded(n, k))
            .map(|shape| BoundedPartition { k, shape })
            .collect()
    }
}

impl fmt::Debug for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}({})", self.k, self.shape)
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.shape, f)
    }
}

/// Residues of the cells of `lambda`, bottom row first, each row right to left.
pub fn word_of_bounded(lambda: &BoundedPartition) -> GeneratorWord {
    let m = lambda.k + 1;
    let letters = (1..=lambda.shape.len())
        .rev()
        .flat_map(|row| (1..=lambda.shape.row(row)).rev().map(move |col| Cell::new(row, col).residue(m)))
        .collect();
    GeneratorWord::from_letters(lambda.k, letters)
}

/// The affine simple reflection `s_i` on cores: add every addable corner of
/// residue `i`, otherwise remove every removable corner of residue `i`,
/// otherwise leave the core alone.
pub fn simple_on_core(i: usize, core: &Core) -> Core {
    core.grow(i).or_else(|| core.shrink(i)).unwrap_or_else(|| core.clone())
}

/// Applies the word to the empty core, last letter first.
pub fn core_of_word(word: &GeneratorWord) -> Core {
    word.letters.iter().rev().fold(Core::empty(word.k), |core, &i| simple_on_core(i, &core))
}

/// Row `i` of the result counts the cells in row `i` of `core` whose hook
/// length is at most `k`.
pub fn bounded_of_core(core: &Core) -> BoundedPartition {
    let k = core.k();
    let shape = core.shape();
    let conj = shape.conjugate();
    let parts = (1..=shape.len())
        .map(|row| {
            let len = shape.row(row);
            (1..=len).filter(|&col| (len - col) + (conj.row(col) - row) < k).count()
        })
        .collect();
    BoundedPartition::from_shape_unchecked(Partition::from_sorted(parts), k)
}

pub fn core_of_bounded(lambda: &BoundedPartition) -> Core {
    core_of_word(&word_of_bounded(lambda))
}

/// The bounded partition of the transposed core.
pub fn k_conjugate(lambda: &BoundedPartition) -> BoundedPartition {
    bounded_of_core(&core_of_bounded(lambda).transpose())
}

/// Coxeter length of the Grassmannian element indexed by `lambda`.
pub fn grassmannian_length(lambda: &BoundedPartition) -> usize {
    lambda.size()
}
