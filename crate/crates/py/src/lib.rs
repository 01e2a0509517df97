//! Python bindings. Words are passed as whitespace-separated strings, labels
//! as integers with `None` for infinity, and reports as plain dicts.

use std::collections::BTreeMap;

use coxeter_rigidity::classify::{self as core_classify, maximal_spherical_subsets, GroupOrder};
use coxeter_rigidity::lab::{self as core_lab, LabOptions};
use coxeter_rigidity::twist::{self as core_twist, TwistSpec};
use coxeter_rigidity::words::{DEFAULT_BUDGET, DEFAULT_ORDER_CAP};
use coxeter_rigidity::{CoxeterDiagram, ElementOrder, Error, Label, Word, WordEngine};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: Error) -> PyErr {
    if e.is_resource_limit() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn label_from(m: Option<u32>) -> Label {
    m.map_or(Label::Infinity, Label::Finite)
}

fn order_value(o: GroupOrder) -> Option<u128> {
    match o {
        GroupOrder::Finite(n) => Some(n),
        GroupOrder::Infinite => None,
    }
}

#[pyclass(name = "Diagram", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDiagram {
    inner: CoxeterDiagram,
}

#[pymethods]
impl PyDiagram {
    /// `Diagram(vertices, edges)` with edges as `(a, b, m)`; `m=None` is infinity.
    /// Pairs not listed are joined by infinity.
    #[new]
    #[pyo3(signature = (vertices, edges = Vec::new()))]
    fn new(vertices: Vec<String>, edges: Vec<(String, String, Option<u32>)>) -> PyResult<Self> {
        let mut d = CoxeterDiagram::new(vertices).map_err(to_py)?;
        for (a, b, m) in edges {
            d = d.with_edge(&a, &b, label_from(m)).map_err(to_py)?;
        }
        Ok(PyDiagram { inner: d })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyDiagram {
            inner: text.parse().map_err(to_py)?,
        })
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    fn label(&self, a: &str, b: &str) -> PyResult<Option<u32>> {
        Ok(self.inner.label_of(a, b).map_err(to_py)?.value())
    }

    fn odd_components(&self) -> Vec<Vec<String>> {
        self.inner.odd_components()
    }

    /// A label-preserving vertex map onto `other`, or `None`.
    fn isomorphism(&self, other: &PyDiagram) -> Option<BTreeMap<String, String>> {
        coxeter_rigidity::diagram_isomorphic(&self.inner, &other.inner)
            .map(|m| m.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect())
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram({:?})", self.inner.serialize())
    }
}

#[pyclass(name = "WordEngine", frozen)]
struct PyWordEngine {
    inner: WordEngine,
}

#[pymethods]
impl PyWordEngine {
    #[new]
    #[pyo3(signature = (diagram, budget = DEFAULT_BUDGET))]
    fn new(diagram: &PyDiagram, budget: usize) -> Self {
        PyWordEngine {
            inner: WordEngine::with_budget(diagram.inner.clone(), budget),
        }
    }

    fn reduce(&self, word: &str) -> PyResult<String> {
        Ok(self.inner.reduce(&Word::parse(word)).map_err(to_py)?.to_string())
    }

    fn canonical(&self, word: &str) -> PyResult<String> {
        Ok(self.inner.canonical(&Word::parse(word)).map_err(to_py)?.word().to_string())
    }

    fn equal(&self, u: &str, v: &str) -> PyResult<bool> {
        self.inner.equal(&Word::parse(u), &Word::parse(v)).map_err(to_py)
    }

    fn length(&self, word: &str) -> PyResult<usize> {
        self.inner.length(&Word::parse(word)).map_err(to_py)
    }

    /// Order of the element, or `None` if it exceeds `cap`.
    #[pyo3(signature = (word, cap = DEFAULT_ORDER_CAP))]
    fn order(&self, word: &str, cap: usize) -> PyResult<Option<usize>> {
        Ok(match self.inner.element_order(&Word::parse(word), cap).map_err(to_py)? {
            ElementOrder::Finite(n) => Some(n),
            ElementOrder::ExceedsCap(_) => None,
        })
    }

    fn is_reflection(&self, word: &str) -> PyResult<bool> {
        self.inner.is_reflection(&Word::parse(word)).map_err(to_py)
    }
}

#[pyfunction]
fn rigidity_report<'py>(py: Python<'py>, diagram: &PyDiagram) -> PyResult<Bound<'py, PyDict>> {
    let r = coxeter_rigidity::rigidity_report(&diagram.inner).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("condition1", r.condition1.holds)?;
    out.set_item("condition1_violations", r.condition1.violations.clone())?;
    out.set_item("condition2", r.condition2.holds)?;
    out.set_item("condition2_violations", r.condition2.violations.clone())?;
    out.set_item("condition3", r.condition3.holds)?;
    out.set_item("condition3_counts", r.condition3.counts.clone())?;
    out.set_item("even", r.is_even)?;
    out.set_item("finite", r.is_finite)?;
    out.set_item("conditions_hold", r.conditions_hold())?;
    out.set_item("applicable", r.applicable.iter().map(|t| t.to_string()).collect::<Vec<_>>())?;
    Ok(out)
}

/// Group order (`None` if infinite), irreducible components with their
/// types, and the maximal spherical subsets.
#[pyfunction]
fn classify<'py>(py: Python<'py>, diagram: &PyDiagram) -> PyResult<Bound<'py, PyDict>> {
    let d = &diagram.inner;
    let out = PyDict::new(py);
    out.set_item("order", order_value(core_classify::group_order(d)))?;
    let mut components = Vec::new();
    for c in core_classify::irreducible_components(d, d.vertices()).map_err(to_py)? {
        let t = core_classify::classify_component(d, &c).map_err(to_py)?;
        components.push((c, t.map(|t| t.to_string())));
    }
    out.set_item("components", components)?;
    let max: Vec<(Vec<String>, String)> = maximal_spherical_subsets(d)
        .map_err(to_py)?
        .into_iter()
        .map(|s| {
            let t = s.type_string();
            (s.vertices, t)
        })
        .collect();
    out.set_item("maximal_spherical", max)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (diagram, j, b, budget = DEFAULT_BUDGET))]
fn twist<'py>(
    py: Python<'py>,
    diagram: &PyDiagram,
    j: Vec<String>,
    b: Vec<String>,
    budget: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let d = &diagram.inner;
    let spec = TwistSpec::with_complement(d, &j, &b).map_err(to_py)?;
    let result = core_twist::apply_twist(d, &spec).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("twisted", PyDiagram { inner: result.twisted.clone() })?;
    out.set_item("longest", result.longest.to_string())?;
    let images: BTreeMap<String, String> =
        result.inverse.images().map(|(s, w)| (s.to_string(), w.to_string())).collect();
    out.set_item("images", images)?;
    out.set_item("verified", core_twist::verify_twist(d, &spec, budget).map_err(to_py)?)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (k, cap = core_lab::DEFAULT_ELEMENT_CAP))]
fn example1<'py>(py: Python<'py>, k: u32, cap: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = core_lab::compare_dihedral_presentations(k, cap).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("order_left", r.order_left)?;
    out.set_item("order_right", r.order_right)?;
    out.set_item("isomorphisms", r.isomorphism_count)?;
    out.set_item("reflections_left", r.reflections_left)?;
    out.set_item("reflections_right", r.reflections_right)?;
    out.set_item("reflection_compatible", r.reflection_compatible)?;
    out.set_item("passed", r.passed())?;
    Ok(out)
}

#[pyfunction]
fn example2<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let demo = core_twist::default_twist_demo().map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("twisted", PyDiagram { inner: demo.result.twisted.clone() })?;
    out.set_item("matches_expected", demo.matches_expected.is_some())?;
    out.set_item("isomorphism_verified", demo.isomorphism_verified)?;
    out.set_item("diagrams_isomorphic", demo.diagrams_isomorphic)?;
    out.set_item("passed", demo.passed())?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (diagram, cap = core_lab::DEFAULT_ELEMENT_CAP, max_size = None, budget = DEFAULT_BUDGET))]
fn lab<'py>(
    py: Python<'py>,
    diagram: &PyDiagram,
    cap: usize,
    max_size: Option<usize>,
    budget: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = LabOptions { cap, max_size, budget };
    let r = core_lab::run_lab(&diagram.inner, opts).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("order", r.order)?;
    out.set_item("laws_hold", r.laws_hold)?;
    out.set_item("engine_check", r.engine.passes())?;
    out.set_item("reflections", r.reflection_count)?;
    out.set_item("conjugacy_lemma", r.conjugacy_lemma)?;
    out.set_item("generating_sets", r.records.len())?;
    out.set_item("reflection_rigidity", r.rigidity.passes())?;
    out.set_item("size_lemma", r.size_lemma)?;
    out.set_item("same_reflection_records", r.same_reflection_records.len())?;
    out.set_item("passed", r.passed())?;
    Ok(out)
}

#[pymodule]
fn coxeter(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyWordEngine>()?;
    m.add_function(wrap_pyfunction!(rigidity_report, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    m.add_function(wrap_pyfunction!(example1, m)?)?;
    m.add_function(wrap_pyfunction!(example2, m)?)?;
    m.add_function(wrap_pyfunction!(lab, m)?)?;
    Ok(())
}
