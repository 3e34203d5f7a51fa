//! Python bindings for the inverse braid monoid library.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use ::invbraid as core;
use core::garside::{self, reconstruct_word};
use core::words::relations::{relation_suite as suite, Presentation};
use core::{AbelianClass, Error, MonoidWord};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(invbraid_py, ResourceLimitError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => ResourceLimitError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A word over σ_i^{±1}, ε_i and ξ_i on n strands.
#[pyclass(module = "invbraid_py", name = "Word", frozen)]
struct PyWord(MonoidWord);

#[pymethods]
impl PyWord {
    #[new]
    #[pyo3(signature = (text, n))]
    fn new(text: &str, n: usize) -> PyResult<Self> {
        MonoidWord::parse(text, n).map(PyWord).map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        PyWord(MonoidWord::identity(n))
    }

    #[staticmethod]
    fn delta(k: usize) -> Self {
        PyWord(core::words::delta_word(k))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn letters(&self) -> Vec<String> {
        self.0.letters().iter().map(|l| l.to_string()).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word({:?}, n={})", self.0.to_string(), self.0.n())
    }

    fn __mul__(&self, other: &PyWord) -> PyResult<PyWord> {
        self.0.concat(&other.0).map(PyWord).map_err(err)
    }

    fn __pow__(&self, exp: usize, _modulo: Option<usize>) -> PyWord {
        PyWord(self.0.pow(exp))
    }

    /// Element equality in IB_n.
    fn __eq__(&self, other: &PyWord) -> PyResult<bool> {
        if self.0.contains_xi() || other.0.contains_xi() {
            return core::equal_action(&self.0, &other.0).map_err(err);
        }
        core::equal_nf(&self.0, &other.0).map_err(err)
    }

    fn __hash__(&self) -> PyResult<u64> {
        let mut h = DefaultHasher::new();
        if self.0.contains_xi() {
            core::evaluate(&self.0).map_err(err)?.hash(&mut h);
        } else {
            core::canonical_form(&self.0).map_err(err)?.hash(&mut h);
        }
        Ok(h.finish())
    }

    /// The inverse w*: reversed, with crossings inverted.
    fn inverse(&self) -> PyWord {
        PyWord(core::words::mirror_inverse(&self.0))
    }

    fn canonical_form(&self) -> PyResult<PyCanonicalForm> {
        core::canonical_form(&self.0).map(PyCanonicalForm).map_err(err)
    }

    fn tau(&self) -> PyResult<PyPartialInjection> {
        core::tau(&self.0).map(PyPartialInjection).map_err(err)
    }
}

/// Unique representative (I, J, Garside normal form) of a partial braid.
#[pyclass(module = "invbraid_py", name = "CanonicalForm", frozen)]
struct PyCanonicalForm(garside::CanonicalForm);

#[pymethods]
impl PyCanonicalForm {
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn domain(&self) -> Vec<usize> {
        self.0.domain.clone()
    }

    #[getter]
    fn codomain(&self) -> Vec<usize> {
        self.0.codomain.clone()
    }

    #[getter]
    fn inf(&self) -> i64 {
        self.0.nf.inf
    }

    /// Simple factors as 1-based permutation images.
    #[getter]
    fn factors(&self) -> Vec<Vec<usize>> {
        self.0.nf.factors.iter().map(|p| p.one_based()).collect()
    }

    fn word(&self) -> PyResult<PyWord> {
        reconstruct_word(&self.0).map(PyWord).map_err(err)
    }

    fn __eq__(&self, other: &PyCanonicalForm) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CanonicalForm({})", self.0)
    }
}

/// Element of the symmetric inverse monoid I_n.
#[pyclass(module = "invbraid_py", name = "PartialInjection", frozen)]
struct PyPartialInjection(core::PartialInjection);

#[pymethods]
impl PyPartialInjection {
    /// `mapping[i-1]` is the image of i, or None.
    #[new]
    fn new(mapping: Vec<Option<usize>>) -> PyResult<Self> {
        core::PartialInjection::new(mapping.len(), mapping)
            .map(PyPartialInjection)
            .map_err(err)
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<PyPartialInjection> {
        core::PartialInjection::all(n).into_iter().map(PyPartialInjection).collect()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn mapping(&self) -> Vec<Option<usize>> {
        self.0.mapping().to_vec()
    }

    fn domain(&self) -> Vec<usize> {
        self.0.domain()
    }

    fn image(&self) -> Vec<usize> {
        self.0.image()
    }

    fn __call__(&self, i: usize) -> Option<usize> {
        self.0.get(i)
    }

    /// `self` followed by `other`.
    fn then(&self, other: &PyPartialInjection) -> PyResult<PyPartialInjection> {
        self.0.then(&other.0).map(PyPartialInjection).map_err(err)
    }

    fn inverse(&self) -> PyPartialInjection {
        PyPartialInjection(self.0.inverse())
    }

    /// A positive partial braid realizing this injection.
    fn braid(&self) -> PyWord {
        PyWord(core::monoidal::partial_permutation_braid(&self.0))
    }

    fn __eq__(&self, other: &PyPartialInjection) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PartialInjection({})", self.0)
    }
}

#[pyfunction]
#[pyo3(signature = (a, b, max_letters = core::freegroup::DEFAULT_MAX_LETTERS))]
fn equal_action(a: &PyWord, b: &PyWord, max_letters: usize) -> PyResult<bool> {
    core::action::equal_action_with_cap(&a.0, &b.0, max_letters).map_err(err)
}

#[pyfunction]
fn equal_nf(a: &PyWord, b: &PyWord) -> PyResult<bool> {
    core::equal_nf(&a.0, &b.0).map_err(err)
}

/// Free-group images of x_1..x_n, None where the strand is deleted.
#[pyfunction]
#[pyo3(signature = (w, max_letters = core::freegroup::DEFAULT_MAX_LETTERS))]
fn evaluate(w: &PyWord, max_letters: usize) -> PyResult<Vec<Option<String>>> {
    let e = core::action::evaluate_with_cap(&w.0, max_letters).map_err(err)?;
    Ok(e.images().iter().map(|i| i.as_ref().map(|x| x.to_string())).collect())
}

#[pyfunction]
fn left_greedy_nf(b: &PyWord) -> PyResult<(i64, Vec<Vec<usize>>)> {
    let nf = garside::left_greedy_nf(&b.0).map_err(err)?;
    Ok((nf.inf, nf.factors.iter().map(|p| p.one_based()).collect()))
}

#[pyfunction]
fn delete_strand(b: &PyWord, i: usize) -> PyResult<PyWord> {
    core::delete_strand(&b.0, i).map(PyWord).map_err(err)
}

#[pyfunction]
fn is_makanin(w: &PyWord) -> PyResult<bool> {
    core::is_makanin(&w.0).map_err(err)
}

#[pyfunction]
fn is_i_makanin(w: &PyWord, i: usize) -> PyResult<bool> {
    core::is_i_makanin(&w.0, i).map_err(err)
}

#[pyfunction]
fn is_central(w: &PyWord) -> PyResult<bool> {
    core::is_central(&w.0).map_err(err)
}

#[pyfunction]
fn mu(a: &PyWord, b: &PyWord) -> PyWord {
    PyWord(core::mu(&a.0, &b.0))
}

#[pyfunction]
fn braiding(m: usize, n: usize) -> PyWord {
    PyWord(core::words::braiding_word(m, n))
}

#[pyfunction]
fn check_naturality(a: &PyWord, b: &PyWord) -> PyResult<bool> {
    core::monoidal::check_naturality(&a.0, &b.0).map_err(err)
}

/// (idempotent, full braid) with w = e·g.
#[pyfunction]
fn factorize(w: &PyWord) -> PyResult<(PyWord, PyWord)> {
    let (e, g) = core::factorize(&w.0).map_err(err)?;
    Ok((PyWord(e), PyWord(g)))
}

/// Exponent sum for full braids, None once a strand is deleted.
#[pyfunction]
fn abelian_invariant(w: &PyWord) -> PyResult<Option<i64>> {
    Ok(match core::abelian_invariant(&w.0).map_err(err)? {
        AbelianClass::Group(e) => Some(e),
        AbelianClass::Epsilon => None,
    })
}

/// Relation instances as (rule, left, right) triples.
#[pyfunction]
fn relation_suite(presentation: &str, n: usize) -> PyResult<Vec<(String, PyWord, PyWord)>> {
    let p: Presentation = presentation.parse().map_err(err)?;
    Ok(suite(p, n)
        .map_err(err)?
        .into_iter()
        .map(|r| (r.rule.to_string(), PyWord(r.left), PyWord(r.right)))
        .collect())
}

/// Whether every relation of the presentation holds in its engine.
#[pyfunction]
fn verify_presentation(presentation: &str, n: usize) -> PyResult<bool> {
    let p: Presentation = presentation.parse().map_err(err)?;
    for r in suite(p, n).map_err(err)? {
        if !r.holds().map_err(err)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[pymodule]
fn invbraid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyCanonicalForm>()?;
    m.add_class::<PyPartialInjection>()?;
    m.add("ResourceLimitError", m.py().get_type::<ResourceLimitError>())?;
    m.add_function(wrap_pyfunction!(equal_action, m)?)?;
    m.add_function(wrap_pyfunction!(equal_nf, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(left_greedy_nf, m)?)?;
    m.add_function(wrap_pyfunction!(delete_strand, m)?)?;
    m.add_function(wrap_pyfunction!(is_makanin, m)?)?;
    m.add_function(wrap_pyfunction!(is_i_makanin, m)?)?;
    m.add_function(wrap_pyfunction!(is_central, m)?)?;
    m.add_function(wrap_pyfunction!(mu, m)?)?;
    m.add_function(wrap_pyfunction!(braiding, m)?)?;
    m.add_function(wrap_pyfunction!(check_naturality, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(relation_suite, m)?)?;
    m.add_function(wrap_pyfunction!(verify_presentation, m)?)?;
    Ok(())
}
