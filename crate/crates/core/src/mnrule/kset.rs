//! The per-`mu` word sets: all weak hook words of length `r` carrying `lambda`
//! to `mu`, built from the cells of the core skew shape instead of by
//! enumerating words.

use std::collections::BTreeSet;

use crate::actions::{act, all_subsets, cyclically_decreasing, cyclically_increasing, Representation};
use crate::correspondences::{core_of_bounded, BoundedPartition, GeneratorWord};
use crate::hookwords::hook_rewrite;
use crate::shapes::{Cell, Core, SkewShape};

/// One accepted choice of the branching steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSetBranch {
    pub up_choice: BTreeSet<usize>,
    /// Residues added while going up: `must_up_residue` plus `up_choice`.
    pub up_residues: BTreeSet<usize>,
    pub absorb_residue_up: BTreeSet<usize>,
    pub absorb_up_choice: BTreeSet<usize>,
    /// Residues added while going down.
    pub down_residues: BTreeSet<usize>,
    pub absorb_residue_down: BTreeSet<usize>,
    pub absorb_down_choice: BTreeSet<usize>,
    pub word: GeneratorWord,
}

/// Intermediate sets of the construction, kept for inspection.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KSetBuild {
    pub pre_must_down_cell: BTreeSet<Cell>,
    pub must_down_residue: BTreeSet<usize>,
    pub must_down_cell: BTreeSet<Cell>,
    pub pre_must_up_cell: BTreeSet<Cell>,
    pub must_up_residue: BTreeSet<usize>,
    pub must_up_cell: BTreeSet<Cell>,
    pub up_or_down_residue: BTreeSet<usize>,
    pub branches: Vec<KSetBranch>,
    pub words: BTreeSet<GeneratorWord>,
}

fn cells_between(outer: &Core, inner: &Core) -> Option<BTreeSet<Cell>> {
    SkewShape::new(outer.shape().clone(), inner.shape().clone(), outer.modulus())
        .ok()
        .map(|s| s.cells().into_iter().collect())
}

fn residues(cells: &BTreeSet<Cell>, modulus: usize) -> BTreeSet<usize> {
    cells.iter().map(|c| c.residue(modulus)).collect()
}

/// Undoes `word` on `core`: its first letter is removed first.
fn pull_back(word: &GeneratorWord, core: &Core) -> Core {
    word.letters().iter().fold(core.clone(), |c, &i| c.shrink(i).unwrap_or(c))
}

/// Runs the construction for `lambda -> mu` under `rep`. Under
/// [`Representation::Dot`] both absorb choices are forced empty.
pub fn build_word_set(lambda: &BoundedPartition, mu: &BoundedPartition, r: usize, rep: Representation) -> KSetBuild {
    let k = lambda.k();
    let m = k + 1;
    let kappa = core_of_bounded(lambda);
    let pi = core_of_bounded(mu);
    let mut build = KSetBuild::default();
    let Some(skew) = cells_between(&pi, &kappa) else {
        return build;
    };

    build.pre_must_down_cell =
        skew.iter().copied().filter(|c| c.col > 1 && skew.contains(&Cell::new(c.row, c.col - 1))).collect();
    build.must_down_residue = residues(&build.pre_must_down_cell, m);
    let Ok(down_word) = cyclically_decreasing(&build.must_down_residue, k) else {
        return build;
    };
    let down_core = pull_back(&down_word, &pi);
    build.must_down_cell = cells_between(&pi, &down_core).unwrap_or_default();

    build.pre_must_up_cell =
        skew.iter().copied().filter(|c| skew.contains(&Cell::new(c.row + 1, c.col))).collect();
    build.must_up_residue = residues(&build.pre_must_up_cell, m);
    let Ok(up_word) = cyclically_increasing(&build.must_up_residue, k) else {
        return build;
    };
    let Some(up_core) = act(&up_word, &kappa, rep).into_core() else {
        return build;
    };
    build.must_up_cell = cells_between(&up_core, &kappa).unwrap_or_default();
    let Some(middle) = cells_between(&down_core, &up_core) else {
        return build;
    };
    build.up_or_down_residue = residues(&middle, m);

    let skew_support = residues(&skew, m).len();
    for up_choice in all_subsets(&build.up_or_down_residue) {
        let up_residues: BTreeSet<usize> = build.must_up_residue.union(&up_choice).copied().collect();
        let Ok(v_word) = cyclically_increasing(&up_residues, k) else {
            continue;
        };
        let Some(v_core) = act(&v_word, &kappa, rep).into_core() else {
            continue;
        };
        let Some(v_cells) = cells_between(&v_core, &kappa) else {
            continue;
        };
        let absorb_residue_up: BTreeSet<usize> = kappa
            .shape()
            .removable_corners()
            .into_iter()
            .filter(|c| !v_cells.contains(&Cell::new(c.row, c.col + 1)))
            .map(|c| c.residue(m))
            .collect();
        let Some(rest) = cells_between(&pi, &v_core) else {
            continue;
        };
        let down_residues = residues(&rest, m);
        let absorb_residue_down: BTreeSet<usize> = v_core
            .shape()
            .removable_corners()
            .into_iter()
            .filter(|c| !rest.contains(&Cell::new(c.row + 1, c.col)))
            .map(|c| c.residue(m))
            .collect();

        for absorb_up_choice in absorb_choices(&absorb_residue_up, rep) {
            if absorb_up_choice.len() + skew_support > r {
                continue;
            }
            let v_letters: BTreeSet<usize> = up_residues.union(&absorb_up_choice).copied().collect();
            for absorb_down_choice in absorb_choices(&absorb_residue_down, rep) {
                let total = absorb_down_choice.len() + down_residues.len() + up_residues.len() + absorb_up_choice.len();
                if total != r {
                    continue;
                }
                let h_letters: BTreeSet<usize> = down_residues.union(&absorb_down_choice).copied().collect();
                let Ok(word) = hook_rewrite(k, &h_letters, &v_letters) else {
                    continue;
                };
                build.words.insert(word.clone());
                build.branches.push(KSetBranch {
                    up_choice: up_choice.clone(),
                    up_residues: up_residues.clone(),
                    absorb_residue_up: absorb_residue_up.clone(),
                    absorb_up_choice: absorb_up_choice.clone(),
                    down_residues: down_residues.clone(),
                    absorb_residue_down: absorb_residue_down.clone(),
                    absorb_down_choice,
                    word,
                });
            }
        }
    }
    build
}

fn absorb_choices(residues: &BTreeSet<usize>, rep: Representation) -> Vec<BTreeSet<usize>> {
    match rep {
        Representation::Star => all_subsets(residues),
        Representation::Dot => vec![BTreeSet::new()],
    }
}

/// Weak hook words of length `r` sending `lambda` to `mu` under the star action.
pub fn build_star_set(lambda: &BoundedPartition, mu: &BoundedPartition, r: usize) -> BTreeSet<GeneratorWord> {
    build_word_set(lambda, mu, r, Representation::Star).words
}

/// Weak hook words of length `r` sending `lambda` to `mu` under the dot action.
pub fn build_dot_set(lambda: &BoundedPartition, mu: &BoundedPartition, r: usize) -> BTreeSet<GeneratorWord> {
    build_word_set(lambda, mu, r, Representation::Dot).words
}
