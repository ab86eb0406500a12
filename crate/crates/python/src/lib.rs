//! Python bindings for `poscolour`.

use std::time::Duration;

use poscolour::closed_forms::predicted_chi;
use poscolour::constructions::construct_colouring as construct;
use poscolour::families::parse_spec;
use poscolour::graph::{graph6, json};
use poscolour::position;
use poscolour::reduction::NaeInstance;
use poscolour::solver;
use poscolour::suites::{self, SuiteOptions};
use poscolour::{Budget, Colouring, Error};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(
    pyposcolour,
    BudgetExceeded,
    PyException,
    "A search hit its node or time limit."
);

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(m) => BudgetExceeded::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn kind(name: &str) -> PyResult<position::PositionKind> {
    name.parse().map_err(err)
}

fn budget(node_limit: Option<u64>, time_limit: Option<f64>) -> Budget {
    let mut b = match node_limit {
        Some(0) => Budget::unlimited(),
        Some(n) => Budget::nodes(n),
        None => Budget::default(),
    };
    if let Some(t) = time_limit {
        b = b.with_time_limit(Duration::from_secs_f64(t.max(0.0)));
    }
    b
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: poscolour::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Graph {
            inner: poscolour::Graph::new(n, &edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: graph6::decode(text.trim()).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: json::from_json(text).map_err(err)?,
        })
    }

    /// A member of a named family, e.g. `"kneser2:6"` or
    /// `"cartesian(path:4,path:6)"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let s = parse_spec(spec).map_err(err)?;
        Ok(Graph {
            inner: s.generate().map_err(err)?,
        })
    }

    fn to_graph6(&self) -> PyResult<String> {
        graph6::encode(&self.inner).map_err(err)
    }

    fn to_json(&self) -> String {
        json::to_json(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(err(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.order(),
            }));
        }
        Ok(self.inner.neighbours(v).to_vec())
    }

    /// Largest finite distance.
    fn diameter(&self) -> u32 {
        self.inner.diameter()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: self.inner.complement(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={})",
            self.inner.order(),
            self.inner.size()
        )
    }
}

/// A verified colouring whose classes all have the recorded property.
#[pyclass(frozen, skip_from_py_object)]
struct CertifiedColouring {
    inner: solver::CertifiedColouring,
}

#[pymethods]
impl CertifiedColouring {
    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    #[getter]
    fn classes(&self) -> Vec<Vec<usize>> {
        self.inner.colouring.classes()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.name()
    }

    #[getter]
    fn verified(&self) -> bool {
        self.inner.verified
    }

    #[getter]
    fn provenance(&self) -> String {
        self.inner.provenance.clone()
    }

    /// `"exact"` or `"upper_bound_only"`.
    #[getter]
    fn optimality(&self) -> String {
        self.inner.optimality.to_string()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "CertifiedColouring(kind={}, k={}, optimality={})",
            self.inner.kind,
            self.inner.k(),
            self.inner.optimality
        )
    }
}

/// Whether `vertices` is a position set of the given kind.
#[pyfunction]
fn is_position_set(g: &Graph, vertices: Vec<usize>, kind_name: &str) -> PyResult<bool> {
    position::is_position_set(&g.inner, &vertices, kind(kind_name)?).map_err(err)
}

/// Position number and a maximum witness set.
#[pyfunction]
#[pyo3(signature = (g, kind_name, node_limit=None, time_limit=None))]
fn position_number(
    g: &Graph,
    kind_name: &str,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
) -> PyResult<(usize, Vec<usize>)> {
    let w =
        position::position_number_with(&g.inner, kind(kind_name)?, &budget(node_limit, time_limit))
            .map_err(err)?;
    Ok((w.value, w.witness))
}

/// Exact position chromatic number with an optimal colouring.
#[pyfunction]
#[pyo3(signature = (g, kind_name, node_limit=None, time_limit=None))]
fn chromatic_position_number(
    g: &Graph,
    kind_name: &str,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
) -> PyResult<CertifiedColouring> {
    let c = solver::chromatic_position_number(
        &g.inner,
        kind(kind_name)?,
        &budget(node_limit, time_limit),
    )
    .map_err(err)?;
    Ok(CertifiedColouring { inner: c })
}

/// Lower and upper bound on the position chromatic number.
#[pyfunction]
#[pyo3(signature = (g, kind_name, node_limit=None, time_limit=None))]
fn bounds(
    g: &Graph,
    kind_name: &str,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
) -> PyResult<(usize, usize)> {
    let b =
        solver::bounds(&g.inner, kind(kind_name)?, &budget(node_limit, time_limit)).map_err(err)?;
    Ok((b.lower, b.upper))
}

/// True iff every class is a position set of the given kind. The classes
/// must partition the vertex set.
#[pyfunction]
fn verify_colouring(g: &Graph, classes: Vec<Vec<usize>>, kind_name: &str) -> PyResult<bool> {
    let c = Colouring::from_classes(g.inner.order(), &classes).map_err(err)?;
    solver::verify_colouring(&g.inner, &c, kind(kind_name)?).map_err(err)
}

#[pyfunction]
fn construct_colouring(spec: &str, kind_name: &str) -> PyResult<CertifiedColouring> {
    let s = parse_spec(spec).map_err(err)?;
    Ok(CertifiedColouring {
        inner: construct(&s, kind(kind_name)?).map_err(err)?,
    })
}

/// Closed-form prediction as JSON.
#[pyfunction]
fn predict(spec: &str, kind_name: &str) -> PyResult<String> {
    let s = parse_spec(spec).map_err(err)?;
    Ok(serde_json::to_string(&predicted_chi(&s, kind(kind_name)?)).expect("plain data serialises"))
}

/// Equivalence report for an NAE3-SAT instance in CNF text, as JSON.
#[pyfunction]
#[pyo3(signature = (cnf, node_limit=None, time_limit=None))]
fn check_reduction(
    cnf: &str,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
) -> PyResult<String> {
    let inst = NaeInstance::parse_cnf(cnf).map_err(err)?;
    let r = poscolour::reduction::check_equivalence(&inst, &budget(node_limit, time_limit))
        .map_err(err)?;
    Ok(serde_json::to_string(&r).expect("plain data serialises"))
}

/// Runs a named suite and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (name, count=None, seed=0, max_n=None))]
fn run_suite(
    py: Python<'_>,
    name: &str,
    count: Option<usize>,
    seed: u64,
    max_n: Option<usize>,
) -> PyResult<String> {
    let opts = SuiteOptions {
        count,
        seed,
        max_n,
        ..SuiteOptions::default()
    };
    let r = py.detach(|| suites::run_suite(name, &opts)).map_err(err)?;
    Ok(r.to_json())
}

#[pymodule]
fn pyposcolour(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<CertifiedColouring>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("SUITES", suites::SUITES.to_vec())?;
    m.add_function(wrap_pyfunction!(is_position_set, m)?)?;
    m.add_function(wrap_pyfunction!(position_number, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_position_number, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(verify_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(construct_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(check_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
