//! Python bindings. Partitions and words cross the boundary as lists of ints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kschur_mn::actions::{CyclicInterval, Representation};
use kschur_mn::correspondences::{self as corr, BoundedPartition, GeneratorWord};
use kschur_mn::hookwords::{self, Connectivity, HookType, Side};
use kschur_mn::mnrule::{self, Expansion, Variant};
use kschur_mn::shapes::{Core, Partition};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bounded(k: usize, parts: Vec<usize>) -> PyResult<BoundedPartition> {
    BoundedPartition::new(Partition::new(parts).map_err(err)?, k).map_err(err)
}

fn word(k: usize, letters: Vec<usize>) -> PyResult<GeneratorWord> {
    GeneratorWord::new(k, letters).map_err(err)
}

fn variant(name: &str) -> PyResult<Variant> {
    name.parse().map_err(err)
}

fn representation(name: &str) -> PyResult<Representation> {
    match name {
        "star" => Ok(Representation::Star),
        "dot" => Ok(Representation::Dot),
        other => Err(PyValueError::new_err(format!("unknown representation {other:?}, expected star or dot"))),
    }
}

fn terms(e: &Expansion) -> Vec<(Vec<usize>, i64)> {
    e.sorted_terms().map(|(mu, c)| (mu.parts().to_vec(), c)).collect()
}

/// Word of a k-bounded partition, bottom row first.
#[pyfunction]
fn word_of_bounded(k: usize, parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(corr::word_of_bounded(&bounded(k, parts)?).letters().to_vec())
}

/// (k+1)-core of a k-bounded partition.
#[pyfunction]
fn core_of_bounded(k: usize, parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(corr::core_of_bounded(&bounded(k, parts)?).shape().parts().to_vec())
}

/// k-bounded partition of a (k+1)-core.
#[pyfunction]
fn bounded_of_core(k: usize, parts: Vec<usize>) -> PyResult<Vec<usize>> {
    let core = Core::new(Partition::new(parts).map_err(err)?, k).map_err(err)?;
    Ok(corr::bounded_of_core(&core).shape().parts().to_vec())
}

/// (k+1)-core reached from the empty core by a word.
#[pyfunction]
fn core_of_word(k: usize, letters: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(corr::core_of_word(&word(k, letters)?).shape().parts().to_vec())
}

#[pyfunction]
fn k_conjugate(k: usize, parts: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(corr::k_conjugate(&bounded(k, parts)?).shape().parts().to_vec())
}

/// Terms `(mu, coeff)` of `p_r` times the basis element at `lam`, variant "K" or "S".
#[pyfunction]
#[pyo3(signature = (k, r, lam, variant_name = "K"))]
fn mn_expand(k: usize, r: usize, lam: Vec<usize>, variant_name: &str) -> PyResult<Vec<(Vec<usize>, i64)>> {
    let e = mnrule::mn_expand(&bounded(k, lam)?, r, variant(variant_name)?).map_err(err)?;
    Ok(terms(&e))
}

/// Same as `mn_expand`, computed by acting with the full power sum.
#[pyfunction]
#[pyo3(signature = (k, r, lam, variant_name = "K"))]
fn oracle_expand(k: usize, r: usize, lam: Vec<usize>, variant_name: &str) -> PyResult<Vec<(Vec<usize>, i64)>> {
    let e = mnrule::oracle_expand(&bounded(k, lam)?, r, variant(variant_name)?).map_err(err)?;
    Ok(terms(&e))
}

#[pyfunction]
#[pyo3(signature = (k, r, lam, variant_name = "K"))]
fn mn_expand_json(k: usize, r: usize, lam: Vec<usize>, variant_name: &str) -> PyResult<String> {
    let e = mnrule::mn_expand(&bounded(k, lam)?, r, variant(variant_name)?).map_err(err)?;
    Ok(e.to_json())
}

/// `(type, asc, connectivity, side, u_min)` or `None` for a word that is not a weak hook word.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn classify(
    k: usize,
    letters: Vec<usize>,
) -> PyResult<Option<(&'static str, usize, &'static str, Option<&'static str>, Option<usize>)>> {
    Ok(hookwords::classify(&word(k, letters)?).map(|c| {
        let t = match c.hook_type {
            HookType::V => "V",
            HookType::U => "U",
        };
        let con = match c.connectivity {
            Connectivity::Connected => "connected",
            Connectivity::WeakConnected => "weak-connected",
            Connectivity::Disconnected => "disconnected",
        };
        let side = c.side.map(|s| match s {
            Side::Left => "left",
            Side::Right => "right",
        });
        (t, c.asc, con, side, c.u_min)
    }))
}

/// Rows of the Edelman-Greene tableau over the cyclic interval of the support.
#[pyfunction]
fn eg_tableau(k: usize, letters: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let w = word(k, letters)?;
    let order = CyclicInterval::new(&w.support(), k).map_err(err)?;
    Ok(hookwords::eg_tableau(w.letters(), &order).rows().to_vec())
}

#[pyfunction]
#[pyo3(signature = (k, letters, rep = "star"))]
fn anti_to_hook(k: usize, letters: Vec<usize>, rep: &str) -> PyResult<Vec<usize>> {
    let h = hookwords::anti_to_hook(&word(k, letters)?, representation(rep)?).map_err(err)?;
    Ok(h.letters().to_vec())
}

/// Weak hook words of length `r` carrying `lam` to `mu`.
#[pyfunction]
#[pyo3(signature = (k, r, lam, mu, rep = "star"))]
fn word_set(k: usize, r: usize, lam: Vec<usize>, mu: Vec<usize>, rep: &str) -> PyResult<Vec<Vec<usize>>> {
    let build = mnrule::build_word_set(&bounded(k, lam)?, &bounded(k, mu)?, r, representation(rep)?);
    Ok(build.words.iter().map(|w| w.letters().to_vec()).collect())
}

/// Number of grid instances checked and the first mismatch, if any.
#[pyfunction]
#[pyo3(signature = (kmax, sizemax))]
fn verify_grid(kmax: usize, sizemax: usize) -> PyResult<(usize, Option<String>)> {
    let report = mnrule::verify_grid(kmax, sizemax, &[Variant::K, Variant::S]).map_err(err)?;
    Ok((report.checked, report.mismatch.map(|m| m.to_string())))
}

#[pymodule]
fn pykschur(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(word_of_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(core_of_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(bounded_of_core, m)?)?;
    m.add_function(wrap_pyfunction!(core_of_word, m)?)?;
    m.add_function(wrap_pyfunction!(k_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(mn_expand, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_expand, m)?)?;
    m.add_function(wrap_pyfunction!(mn_expand_json, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(eg_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(anti_to_hook, m)?)?;
    m.add_function(wrap_pyfunction!(word_set, m)?)?;
    m.add_function(wrap_pyfunction!(verify_grid, m)?)?;
    Ok(())
}
