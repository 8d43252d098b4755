//! Python face of the workbench. An `Action` wraps a built group action;
//! reports come back as plain dicts so notebooks can poke at them without
//! extra classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use derange::builders;
use derange::action::DEFAULT_ELEMENT_CAP;
use derange::density::{self, AnalysisOptions};
use derange::graph::{derangement_graph, DEFAULT_GRAPH_CAP};
use derange::groupspec::GroupSpec;
use derange::product;
use derange::search;
use derange::verify;
use derange::{GroupAction, Permutation};

fn perr(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Serde value to Python object, so every report type crosses the boundary
/// through its one JSON shape.
fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64()
                    .expect("a JSON number is integral or finite")
                    .into_pyobject(py)?
                    .into_any()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py_dict(py: Python<'_>, value: impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let v = serde_json::to_value(value).map_err(perr)?;
    Ok(json_to_py(py, &v)?.unbind())
}

/// A permutation group in a fixed action on `0..degree` points.
#[pyclass(frozen)]
struct Action {
    inner: GroupAction,
    #[pyo3(get)]
    descriptor: String,
}

impl Action {
    fn wrap(inner: GroupAction, descriptor: String) -> Action {
        Action { inner, descriptor }
    }
}

#[pymethods]
impl Action {
    #[staticmethod]
    fn symmetric(n: usize) -> PyResult<Action> {
        let a = builders::symmetric_natural(n, DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, format!("S{n}")))
    }

    #[staticmethod]
    fn alternating(n: usize) -> PyResult<Action> {
        let a = builders::alternating_natural(n, DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, format!("A{n}")))
    }

    #[staticmethod]
    fn cyclic(n: usize) -> PyResult<Action> {
        let a = builders::cyclic_regular(n).map_err(perr)?;
        Ok(Action::wrap(a, format!("C{n}")))
    }

    #[staticmethod]
    fn dihedral(n: usize) -> PyResult<Action> {
        let a = builders::dihedral_natural(n).map_err(perr)?;
        Ok(Action::wrap(a, format!("D{n}")))
    }

    /// Group generated by cycle strings on 1-based points, e.g.
    /// `["(1 2 3)", "(2 3 4)"]`.
    #[staticmethod]
    fn from_generators(degree: usize, generators: Vec<String>) -> PyResult<Action> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<derange::Result<Vec<_>>>()
            .map_err(perr)?;
        let a = GroupAction::from_generators(degree, gens, DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, format!("<{}>@{degree}", generators.join(","))))
    }

    /// Build from the same JSON spec format the command line accepts.
    #[staticmethod]
    fn from_spec(text: &str) -> PyResult<Action> {
        let spec = GroupSpec::from_json(text).map_err(perr)?;
        let (a, descriptor) = spec.build_with_descriptor(DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, descriptor))
    }

    /// Induced action on the k-element subsets of the domain.
    fn on_k_subsets(&self, k: usize) -> PyResult<Action> {
        let a = builders::on_k_subsets(&self.inner, k).map_err(perr)?;
        Ok(Action::wrap(a, format!("{} on {k}-subsets", self.descriptor)))
    }

    /// The same group acting on its own elements by left multiplication.
    fn regular(&self) -> PyResult<Action> {
        let a = builders::left_regular(&self.inner, DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, format!("reg({})", self.descriptor)))
    }

    /// Direct product acting coordinatewise on the product of the domains.
    fn external(&self, other: &Action) -> PyResult<Action> {
        let a = product::external_product(&self.inner, &other.inner, DEFAULT_ELEMENT_CAP)
            .map_err(perr)?;
        Ok(Action::wrap(a, format!("{} x {}", self.descriptor, other.descriptor)))
    }

    /// Wreath product in the imprimitive action on `degree * order` points.
    fn wreath(&self, outer: &Action) -> PyResult<Action> {
        let a =
            product::wreath_product(&self.inner, &outer.inner, DEFAULT_ELEMENT_CAP).map_err(perr)?;
        Ok(Action::wrap(a, format!("{} wr {}", self.descriptor, outer.descriptor)))
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn is_transitive(&self) -> bool {
        self.inner.is_transitive()
    }

    /// Every element as a cycle string, in enumeration order.
    fn elements(&self) -> Vec<String> {
        self.inner
            .elements()
            .iter()
            .map(|p| p.cycle_string())
            .collect()
    }

    fn derangement_count(&self) -> usize {
        self.inner.derangement_ids().len()
    }

    /// Exact intersection density as a string like `"1"` or `"3/2"`, or
    /// None when the action is not transitive.
    fn density(&self) -> PyResult<Option<String>> {
        let opts = AnalysisOptions::default();
        let report = density::analyze(&self.inner, &self.descriptor, &opts).map_err(perr)?;
        Ok(report.intersection_density.map(|r| r.to_string()))
    }

    /// Independence number of the derangement graph.
    fn alpha(&self) -> PyResult<usize> {
        let opts = AnalysisOptions::default();
        let report = density::analyze(&self.inner, &self.descriptor, &opts).map_err(perr)?;
        Ok(report.alpha)
    }

    fn ekr(&self) -> PyResult<bool> {
        let opts = AnalysisOptions::default();
        let report = density::analyze(&self.inner, &self.descriptor, &opts).map_err(perr)?;
        Ok(report.ekr)
    }

    /// Full report as a dict; `strict=True` adds the coset scan of all
    /// maximum intersecting sets.
    #[pyo3(signature = (strict = false))]
    fn analyze(&self, py: Python<'_>, strict: bool) -> PyResult<Py<PyAny>> {
        let opts = AnalysisOptions {
            strict,
            ..AnalysisOptions::default()
        };
        let report = density::analyze(&self.inner, &self.descriptor, &opts).map_err(perr)?;
        to_py_dict(py, report)
    }

    /// Derangement graph (or its complement) in DOT format.
    #[pyo3(signature = (complement = false))]
    fn dot(&self, complement: bool) -> PyResult<String> {
        let g = derangement_graph(&self.inner, DEFAULT_GRAPH_CAP).map_err(perr)?;
        let g = if complement { g.complement() } else { g };
        Ok(g.to_dot(&self.descriptor))
    }

    fn __repr__(&self) -> String {
        format!(
            "Action({}, order={}, degree={})",
            self.descriptor,
            self.inner.order(),
            self.inner.degree()
        )
    }
}

/// Run verification checks; `ids=None` runs the whole registry. Returns the
/// suite report as a dict.
#[pyfunction]
#[pyo3(signature = (ids = None))]
fn verify_suite(py: Python<'_>, ids: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
    let ids = ids.unwrap_or_default();
    let report = verify::run_suite(&ids, &verify::Config::default()).map_err(perr)?;
    to_py_dict(py, report)
}

/// All registered check ids in report order.
#[pyfunction]
fn check_ids() -> Vec<String> {
    verify::registry().iter().map(|d| d.id.to_string()).collect()
}

/// Exhaustive search for transitive groups of the given degree whose
/// derangement graph is complete multipartite with `parts` parts.
#[pyfunction]
#[pyo3(signature = (degree, parts, budget = None))]
fn search_multipartite(
    py: Python<'_>,
    degree: usize,
    parts: usize,
    budget: Option<u64>,
) -> PyResult<Py<PyAny>> {
    let outcome =
        search::search_multipartite(degree, parts, budget.unwrap_or(search::DEFAULT_SEARCH_BUDGET))
            .map_err(perr)?;
    to_py_dict(py, outcome)
}

#[pymodule]
fn derange_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Action>()?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(search_multipartite, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
