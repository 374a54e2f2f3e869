//! Weak hook words: classification, enumeration, the left/right cancellation
//! map, Edelman-Greene insertion and the conversion of anti-weak hook words.
//!
//! All comparisons between letters of a word `u` are made in the cyclic
//! interval of `supp(u)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::actions::{CyclicInterval, Representation};
use crate::correspondences::GeneratorWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HookType {
    /// `i1 > ... > ij < ... < im`
    V,
    /// `i1 > ... > ij = ij+1 < ... < im`
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connectivity {
    /// The support is an interval of its cyclic interval.
    Connected,
    /// Not connected, the distinguished letter sits on both sides.
    WeakConnected,
    /// Not connected, the distinguished letter sits on one side only.
    Disconnected,
}

impl Connectivity {
    /// The `wc` classes of the cancellation-free power sum: connected or
    /// weak-connected.
    pub fn is_weak_connected(self) -> bool {
        !matches!(self, Connectivity::Disconnected)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookClassification {
    pub hook_type: HookType,
    pub asc: usize,
    pub connectivity: Connectivity,
    /// Only set for [`Connectivity::Disconnected`].
    pub side: Option<Side>,
    /// Smallest `c` closing a gap `a < c` in the support; `None` when the
    /// support has no gap.
    pub u_min: Option<usize>,
}

impl fmt::Display for HookClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let con = match self.connectivity {
            Connectivity::Connected => "c",
            Connectivity::WeakConnected => "wc",
            Connectivity::Disconnected => "notwc",
        };
        write!(f, "{:?} asc={} con={}", self.hook_type, self.asc, con)?;
        match self.side {
            Some(Side::Left) => write!(f, " side=left")?,
            Some(Side::Right) => write!(f, " side=right")?,
            None => {}
        }
        if let Some(u) = self.u_min {
            write!(f, " u_min={u}")?;
        }
        Ok(())
    }
}

/// Shape of a rank sequence: hook type and index of the (first) valley.
fn valley_form(ranks: &[usize]) -> Option<(HookType, usize)> {
    if ranks.is_empty() {
        return Some((HookType::V, 0));
    }
    let mut p = 0;
    while p + 1 < ranks.len() && ranks[p] > ranks[p + 1] {
        p += 1;
    }
    let (kind, rise_from) = if p + 1 < ranks.len() && ranks[p] == ranks[p + 1] {
        (HookType::U, p + 1)
    } else {
        (HookType::V, p)
    };
    ranks[rise_from..].windows(2).all(|w| w[0] < w[1]).then_some((kind, p))
}

fn ranks_of(word: &GeneratorWord, order: &CyclicInterval) -> Vec<usize> {
    word.letters().iter().map(|&l| order.rank(l).expect("letter in support")).collect()
}

fn support_order(word: &GeneratorWord) -> Option<CyclicInterval> {
    CyclicInterval::new(&word.support(), word.k()).ok()
}

fn u_min(word: &GeneratorWord, order: &CyclicInterval) -> Option<usize> {
    let mut ranks: Vec<usize> = word.support().iter().map(|&l| order.rank(l).unwrap()).collect();
    ranks.sort_unstable();
    ranks.windows(2).find(|w| w[1] != w[0] + 1).map(|w| order.letter(w[1]))
}

/// Classifies `word`; `None` when it is not a weak hook word (including the
/// case where its support is all of `[0,k]`).
pub fn classify(word: &GeneratorWord) -> Option<HookClassification> {
    let order = support_order(word)?;
    let ranks = ranks_of(word, &order);
    let (hook_type, valley) = valley_form(&ranks)?;
    let asc = ranks.windows(2).filter(|w| w[0] < w[1]).count();
    let u_min = u_min(word, &order);
    let (connectivity, side) = match u_min {
        None => (Connectivity::Connected, None),
        Some(c) => {
            let at: Vec<usize> = (0..word.len()).filter(|&i| word.letters()[i] == c).collect();
            match at.as_slice() {
                [q] if *q < valley => (Connectivity::Disconnected, Some(Side::Left)),
                [_] => (Connectivity::Disconnected, Some(Side::Right)),
                _ => (Connectivity::WeakConnected, None),
            }
        }
    };
    Some(HookClassification { hook_type, asc, connectivity, side, u_min })
}

/// Connectivity filter as used on the command line: `c`, `notc`, `wc`, `notwc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectivityFilter {
    Connected,
    NotConnected,
    WeakConnected,
    NotWeakConnected,
}

impl ConnectivityFilter {
    pub fn matches(self, con: Connectivity) -> bool {
        match self {
            ConnectivityFilter::Connected => con == Connectivity::Connected,
            ConnectivityFilter::NotConnected => con != Connectivity::Connected,
            ConnectivityFilter::WeakConnected => con.is_weak_connected(),
            ConnectivityFilter::NotWeakConnected => con == Connectivity::Disconnected,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HookFilter {
    pub hook_type: Option<HookType>,
    pub asc: Option<usize>,
    pub connectivity: Option<ConnectivityFilter>,
    pub side: Option<Side>,
}

impl HookFilter {
    pub fn matches(&self, c: &HookClassification) -> bool {
        self.hook_type.is_none_or(|t| t == c.hook_type)
            && self.asc.is_none_or(|a| a == c.asc)
            && self.connectivity.is_none_or(|f| f.matches(c.connectivity))
            && self.side.is_none_or(|s| Some(s) == c.side)
    }
}

/// All `(k+1)^r` words of length `r`, in lexicographic order.
pub fn all_words(k: usize, r: usize) -> impl Iterator<Item = GeneratorWord> {
    let m = k + 1;
    let total = m.pow(r as u32);
    (0..total).map(move |mut n| {
        let mut letters = vec![0; r];
        for slot in letters.iter_mut().rev() {
            *slot = n % m;
            n /= m;
        }
        GeneratorWord::from_letters(k, letters)
    })
}

/// Weak hook words of length `r` matching `filter`, in lexicographic order.
pub fn enumerate(k: usize, r: usize, filter: &HookFilter) -> Vec<(GeneratorWord, HookClassification)> {
    all_words(k, r)
        .filter_map(|w| classify(&w).filter(|c| filter.matches(c)).map(|c| (w, c)))
        .collect()
}

/// Moves the distinguished letter of a disconnected weak hook word across the
/// adjacent block of smaller letters, switching its side.
pub fn tau(word: &GeneratorWord) -> Result<GeneratorWord> {
    let ineligible = || Error::TauIneligible(word.to_string());
    let class = classify(word).ok_or_else(ineligible)?;
    let (Some(side), Some(c)) = (class.side, class.u_min) else {
        return Err(ineligible());
    };
    let order = support_order(word).ok_or_else(ineligible)?;
    let ranks = ranks_of(word, &order);
    let bound = order.rank(c).unwrap();
    let q = word.letters().iter().position(|&l| l == c).unwrap();
    let mut letters = word.letters().to_vec();
    match side {
        Side::Right => {
            let mut start = q;
            while start > 0 && ranks[start - 1] < bound {
                start -= 1;
            }
            letters[start..=q].rotate_right(1);
        }
        Side::Left => {
            let mut end = q;
            while end + 1 < ranks.len() && ranks[end + 1] < bound {
                end += 1;
            }
            letters[q..=end].rotate_left(1);
        }
    }
    Ok(GeneratorWord::from_letters(word.k(), letters))
}

/// A tableau with weakly increasing rows, first row on top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new() -> Self {
        Tableau::default()
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Strict increase along rows and down columns, measured in `order`.
    pub fn is_strict(&self, order: &CyclicInterval) -> bool {
        let rank = |x: usize| order.rank(x).unwrap_or(usize::MAX);
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| rank(w[0]) < rank(w[1])));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(&b, &a)| rank(a) < rank(b))
        });
        rows_ok && cols_ok
    }

    /// A single first row plus a first column.
    pub fn is_hook_shape(&self) -> bool {
        self.rows.iter().skip(1).all(|row| row.len() == 1)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&lines.join(" / "))
    }
}

/// Edelman-Greene insertion of `letter` into `tableau`, comparing by rank in
/// `order`. The bumped entry is replaced only when the row does not already
/// hold both the incoming letter and its successor.
pub fn eg_insert(tableau: &Tableau, letter: usize, order: &CyclicInterval) -> Tableau {
    let rank = |x: usize| order.rank(x).expect("letter outside cyclic interval");
    let mut rows = tableau.rows.clone();
    let mut x = letter;
    for row in rows.iter_mut() {
        let Some(pos) = row.iter().position(|&y| rank(y) > rank(x)) else {
            row.push(x);
            return Tableau { rows };
        };
        let bumped = row[pos];
        let succ = order.order().get(rank(x) + 1).copied();
        let both = row.contains(&x) && succ.is_some_and(|s| row.contains(&s));
        if !both {
            row[pos] = x;
        }
        x = bumped;
    }
    rows.push(vec![x]);
    Tableau { rows }
}

/// Inserts `letters` from left to right into the empty tableau.
pub fn eg_tableau(letters: &[usize], order: &CyclicInterval) -> Tableau {
    letters.iter().fold(Tableau::new(), |t, &x| eg_insert(&t, x, order))
}

/// `rho(EG(x))` as a word.
pub fn reading_word(tableau: &Tableau, k: usize) -> GeneratorWord {
    GeneratorWord::from_letters(k, tableau.reading_word())
}

/// Index of the (first) peak of an anti-weak hook word, with its type.
fn anti_form(ranks: &[usize]) -> Option<(HookType, usize)> {
    let top = ranks.iter().max().copied().unwrap_or(0);
    let flipped: Vec<usize> = ranks.iter().map(|&r| top - r).collect();
    valley_form(&flipped)
}

/// True for words that increase then decrease (with at most one repeated
/// letter at the peak) in the cyclic interval of their support.
pub fn is_anti_hook(word: &GeneratorWord) -> bool {
    support_order(word).is_some_and(|order| anti_form(&ranks_of(word, &order)).is_some())
}

/// Length of the increasing part of an anti-weak hook word, peak included
/// (for a repeated peak only its first copy counts).
pub fn anti_left_side_len(word: &GeneratorWord) -> Option<usize> {
    let order = support_order(word)?;
    anti_form(&ranks_of(word, &order)).map(|(_, peak)| peak + 1)
}

/// Length of the increasing part of a weak hook word, valley included.
pub fn right_side_len(word: &GeneratorWord) -> Option<usize> {
    let order = support_order(word)?;
    let ranks = ranks_of(word, &order);
    valley_form(&ranks).map(|(kind, valley)| match kind {
        HookType::V => ranks.len() - valley,
        HookType::U => ranks.len() - valley - 1,
    })
}

/// Merges each repeated letter of an anti-weak hook word into its first copy
/// when only letters larger than its successor stand between them.
fn merge_repeats(letters: &[usize], order: &CyclicInterval) -> Vec<usize> {
    let rank = |x: usize| order.rank(x).unwrap();
    let mut cur = letters.to_vec();
    loop {
        let mut repeated: Vec<usize> = cur.iter().copied().filter(|&x| cur.iter().filter(|&&y| y == x).count() > 1).collect();
        repeated.sort_by_key(|&x| rank(x));
        repeated.dedup();
        let merge = repeated.into_iter().find_map(|x| {
            let last = cur.iter().rposition(|&y| y == x)?;
            let mut j = last;
            while j > 0 && rank(cur[j - 1]) > rank(x) + 1 {
                j -= 1;
            }
            (j > 0 && cur[j - 1] == x).then_some(last)
        });
        match merge {
            Some(pos) => {
                cur.remove(pos);
            }
            None => return cur,
        }
    }
}

/// Rewrites an anti-weak hook word as a reduced weak hook word with the same
/// action. Under [`Representation::Dot`] the input must already be reduced.
pub fn anti_to_hook(word: &GeneratorWord, rep: Representation) -> Result<GeneratorWord> {
    let order = support_order(word).ok_or_else(|| Error::NotAntiHook(word.to_string()))?;
    if anti_form(&ranks_of(word, &order)).is_none() {
        return Err(Error::NotAntiHook(word.to_string()));
    }
    let merged = merge_repeats(word.letters(), &order);
    if rep == Representation::Dot && merged.len() != word.len() {
        return Err(Error::NotReduced(word.to_string()));
    }
    Ok(reading_word(&eg_tableau(&merged, &order), word.k()))
}

/// The `x~` stage of [`anti_to_hook`]: repeated letters merged.
pub fn merged_anti_hook(word: &GeneratorWord) -> Result<GeneratorWord> {
    let order = support_order(word).ok_or_else(|| Error::NotAntiHook(word.to_string()))?;
    if anti_form(&ranks_of(word, &order)).is_none() {
        return Err(Error::NotAntiHook(word.to_string()));
    }
    Ok(GeneratorWord::from_letters(word.k(), merge_repeats(word.letters(), &order)))
}

/// Letters of a weak hook word in canonical form: the first `left` letters
/// strictly decreasing and the rest strictly increasing, both against the
/// cyclic interval of the union.
pub fn hook_rewrite(k: usize, decreasing: &BTreeSet<usize>, increasing: &BTreeSet<usize>) -> Result<GeneratorWord> {
    let all: BTreeSet<usize> = decreasing.union(increasing).copied().collect();
    let order = CyclicInterval::new(&all, k)?;
    let mut left: Vec<usize> = decreasing.iter().copied().collect();
    order.sort_increasing(&mut left);
    left.reverse();
    let mut right: Vec<usize> = increasing.iter().copied().collect();
    order.sort_increasing(&mut right);
    left.extend(right);
    Ok(GeneratorWord::from_letters(k, left))
}
