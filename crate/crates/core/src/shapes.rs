//! Partitions, cells, hook lengths, cores and skew shapes.
//!
//! Rows are numbered top-down from 1 and columns left-right from 1. The
//! residue of cell `(row, col)` modulo `m` is `(col - row) mod m`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros. The empty partition is a valid value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-indexed); zero past the last row.
    pub fn row(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-indexed).
    pub fn column(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |col| Cell::new(i + 1, col)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition::from_sorted((1..=width).map(|c| self.column(c)).collect())
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutside { row: cell.row, col: cell.col });
        }
        let arm = self.row(cell.row) - cell.col;
        let leg = self.column(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    /// True iff no cell has hook length equal to `modulus`.
    pub fn is_core(&self, modulus: usize) -> bool {
        let conj = self.conjugate();
        self.parts.iter().enumerate().all(|(i, &len)| {
            (1..=len).all(|col| (len - col) + (conj.row(col) - (i + 1)) + 1 != modulus)
        })
    }

    /// Cells `(i,j)` in the diagram with neither `(i+1,j)` nor `(i,j+1)` in it.
    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&row| self.row(row) > self.row(row + 1))
            .map(|row| Cell::new(row, self.row(row)))
            .collect()
    }

    /// The first-row extension, the new-row start and every concave corner.
    pub fn addable_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&row| self.row(row) < self.row(row - 1))
            .map(|row| Cell::new(row, self.row(row) + 1))
            .collect()
    }

    /// Adds the given addable corners (distinct rows) simultaneously.
    pub(crate) fn with_added(&self, cells: &[Cell]) -> Partition {
        let mut parts = self.parts.clone();
        for c in cells {
            if c.row > parts.len() {
                parts.resize(c.row, 0);
            }
            parts[c.row - 1] += 1;
        }
        Partition::from_sorted(parts)
    }

    /// Removes the given removable corners (distinct rows) simultaneously.
    pub(crate) fn with_removed(&self, cells: &[Cell]) -> Partition {
        let mut parts = self.parts.clone();
        for c in cells {
            parts[c.row - 1] -= 1;
        }
        Partition::from_sorted(parts)
    }

    /// All partitions of `n` with every part at most `max_part`, in
    /// reverse-lexicographic order.
    pub fn all_bounded(n: usize, max_part: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, &mut Vec::new(), &mut out);
        out
    }

    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Partition::all_bounded(n, n)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty partition renders as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn residue(self, modulus: usize) -> usize {
        residue(self, modulus)
    }
}

/// `(col - row) mod modulus`.
pub fn residue(cell: Cell, modulus: usize) -> usize {
    let m = modulus as i64;
    ((cell.col as i64 - cell.row as i64).rem_euclid(m)) as usize
}

/// A skew diagram `outer / inner` together with the residue modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    modulus: usize,
}

pub fn skew(outer: &Partition, inner: &Partition, modulus: usize) -> Result<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone(), modulus)
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, modulus: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus));
        }
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(SkewShape { outer, inner, modulus })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|row| {
                (self.inner.row(row) + 1..=self.outer.row(row)).map(move |col| Cell::new(row, col))
            })
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    fn row_span(&self, row: usize) -> Option<(usize, usize)> {
        let (lo, hi) = (self.inner.row(row) + 1, self.outer.row(row));
        (lo <= hi).then_some((lo, hi))
    }

    /// No 2x2 block lies wholly inside the shape.
    pub fn is_ribbon(&self) -> bool {
        // rows r, r+1 contain a 2x2 block iff their column spans overlap in two columns
        (1..self.outer.len()).all(|row| match (self.row_span(row), self.row_span(row + 1)) {
            (Some((lo, _)), Some((_, hi2))) => hi2 < lo + 1,
            _ => true,
        })
    }

    /// No two cells share a row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|row| self.outer.row(row) - self.inner.row(row) <= 1)
    }

    /// No two cells share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        let (o, i) = (self.outer.conjugate(), self.inner.conjugate());
        (1..=o.len()).all(|col| o.row(col) - i.row(col) <= 1)
    }

    /// Occupied rows minus connected components, where consecutive occupied
    /// rows are joined when they share a column.
    pub fn height(&self) -> usize {
        let mut rows = 0;
        let mut components = 0;
        let mut prev: Option<(usize, usize)> = None;
        for row in 1..=self.outer.len() {
            match self.row_span(row) {
                Some((lo, hi)) => {
                    rows += 1;
                    // the row above starts at or right of this one
                    if !matches!(prev, Some((plo, _)) if plo <= hi) {
                        components += 1;
                    }
                    prev = Some((lo, hi));
                }
                None => prev = None,
            }
        }
        rows - components
    }

    /// Residues of all cells.
    pub fn support(&self) -> BTreeSet<usize> {
        self.cells().into_iter().map(|c| c.residue(self.modulus)).collect()
    }
}

/// A partition with no cell of hook length `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Core {
    shape: Partition,
    k: usize,
}

impl Core {
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if !shape.is_core(k + 1) {
            return Err(Error::NotCore(shape.to_string(), k + 1));
        }
        Ok(Core { shape, k })
    }

    pub fn empty(k: usize) -> Self {
        Core { shape: Partition::empty(), k }
    }

    pub(crate) fn from_shape_unchecked(shape: Partition, k: usize) -> Self {
        debug_assert!(shape.is_core(k + 1));
        Core { shape, k }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> usize {
        self.k + 1
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn addable_of_residue(&self, i: usize) -> Vec<Cell> {
        let m = self.modulus();
        self.shape.addable_corners().into_iter().filter(|c| c.residue(m) == i).collect()
    }

    pub fn removable_of_residue(&self, i: usize) -> Vec<Cell> {
        let m = self.modulus();
        self.shape.removable_corners().into_iter().filter(|c| c.residue(m) == i).collect()
    }

    /// Adds every addable corner of residue `i`, or `None` when there is none.
    pub fn grow(&self, i: usize) -> Option<Core> {
        let cells = self.addable_of_residue(i);
        (!cells.is_empty()).then(|| Core::from_shape_unchecked(self.shape.with_added(&cells), self.k))
    }

    /// Removes every removable corner of residue `i`, or `None` when there is none.
    pub fn shrink(&self, i: usize) -> Option<Core> {
        let cells = self.removable_of_residue(i);
        (!cells.is_empty())
            .then(|| Core::from_shape_unchecked(self.shape.with_removed(&cells), self.k))
    }

    pub fn has_removable_of_residue(&self, i: usize) -> bool {
        !self.removable_of_residue(i).is_empty()
    }

    pub fn transpose(&self) -> Core {
        Core::from_shape_unchecked(self.shape.conjugate(), self.k)
    }

    /// `self / inner` with this core's modulus.
    pub fn skew_over(&self, inner: &Core) -> Result<SkewShape> {
        skew(&self.shape, &inner.shape, self.modulus())
    }

    /// Every `(k+1)`-core with at most `max_size` cells.
    pub fn all_up_to(k: usize, max_size: usize) -> Vec<Core> {
        (0..=max_size)
            .flat_map(Partition::all_of_size)
            .filter(|p| p.is_core(k + 1))
            .map(|p| Core { shape: p, k })
            .collect()
    }
}

impl fmt::Debug for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Core[{}]({})", self.k + 1, self.shape)
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.shape, f)
    }
}

/// ASCII table of residues of the cells of `p`, one row per line.
pub fn residue_grid(p: &Partition, modulus: usize) -> String {
    let mut out = String::new();
    for row in 1..=p.len() {
        let line: Vec<String> =
            (1..=p.row(row)).map(|col| residue(Cell::new(row, col), modulus).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
