use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use twodd::generation::{self, FamilySpec, DEFAULT_BUDGET};
use twodd::split::{self, DEFAULT_MAX_SPLIT_SIZE};
use twodd::{io, CertifyOptions, Error, MethodChoice, Selection, VertexId, DEFAULT_CAP};

create_exception!(twodd_py, TwoddError, PyException);
create_exception!(twodd_py, LimitExceeded, TwoddError);

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } | Error::CapExceeded { .. } | Error::TooManyAcs { .. } => {
            LimitExceeded::new_err(e.to_string())
        }
        _ => TwoddError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn vs(v: &[VertexId]) -> Vec<u32> {
    v.iter().map(|v| v.0).collect()
}

/// A 2-digraph: every vertex has (in, out) degree (0, 2), (2, 0) or (2, 2).
#[pyclass(name = "TwoDigraph", module = "twodd_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyTwoDigraph {
    g: twodd::TwoDigraph,
}

impl From<twodd::TwoDigraph> for PyTwoDigraph {
    fn from(g: twodd::TwoDigraph) -> Self {
        PyTwoDigraph { g }
    }
}

#[pymethods]
impl PyTwoDigraph {
    /// Build from `(id, tail, head)` triples.
    #[new]
    fn new(arcs: Vec<(u32, u32, u32)>) -> PyResult<Self> {
        twodd::TwoDigraph::from_arcs(&arcs).map(Into::into).map_err(err)
    }

    /// Build from `(tail, head)` pairs; arc ids follow list order.
    #[staticmethod]
    fn from_pairs(pairs: Vec<(u32, u32)>) -> PyResult<Self> {
        twodd::TwoDigraph::from_pairs(&pairs).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse(text).map(Into::into).map_err(err)
    }

    fn serialize(&self) -> String {
        io::serialize(&self.g)
    }

    fn vertices(&self) -> Vec<u32> {
        vs(self.g.vertices())
    }

    /// `(id, tail, head)` triples.
    fn arcs(&self) -> Vec<(u32, u32, u32)> {
        self.g.arcs().iter().map(|a| (a.id.0, a.tail.0, a.head.0)).collect()
    }

    /// Arc ids of each alternating cycle, forward arcs at even positions.
    fn acs(&self) -> Vec<Vec<u32>> {
        self.g.acs().iter().map(|x| x.arcs().iter().map(|a| a.0).collect()).collect()
    }

    fn entries(&self) -> Vec<u32> {
        vs(&self.g.entries())
    }

    fn exits(&self) -> Vec<u32> {
        vs(&self.g.exits())
    }

    fn saturated(&self) -> Vec<u32> {
        vs(&self.g.saturated())
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.g.vertex_count()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.g.arc_count()
    }

    #[getter]
    fn ac_count(&self) -> usize {
        self.g.ac_count()
    }

    fn is_saturated(&self) -> bool {
        self.g.is_saturated()
    }

    fn is_clean(&self) -> bool {
        self.g.is_clean()
    }

    fn is_connected(&self) -> bool {
        self.g.is_connected()
    }

    fn split(&self, v: u32) -> PyResult<Self> {
        self.g.split(VertexId(v)).map(Into::into).map_err(err)
    }

    fn splice(&self, entry: u32, exit: u32) -> PyResult<Self> {
        self.g.splice(VertexId(entry), VertexId(exit)).map(Into::into).map_err(err)
    }

    fn induced_subgraph(&self, acs: Vec<usize>) -> PyResult<Self> {
        self.g.induced_subgraph(&acs).map(Into::into).map_err(err)
    }

    /// Graphviz source; optionally highlight a factor (selection string) or
    /// one alternating cycle.
    #[pyo3(signature = (factor = None, ac = None))]
    fn to_dot(&self, factor: Option<String>, ac: Option<usize>) -> PyResult<String> {
        let f = match factor {
            Some(s) => {
                let sel = Selection::try_from(s).map_err(PyValueError::new_err)?;
                Some(twodd::factor::factor(&self.g, &sel).map_err(err)?)
            }
            None => None,
        };
        let highlight = match (&f, ac) {
            (Some(f), _) => io::Highlight::Factor(f),
            (None, Some(c)) if c < self.g.ac_count() => io::Highlight::Ac(c),
            (None, Some(c)) => return Err(err(Error::UnknownAc(c))),
            (None, None) => io::Highlight::None,
        };
        Ok(io::export_dot(&self.g, highlight))
    }

    fn __repr__(&self) -> String {
        format!(
            "TwoDigraph({} vertices, {} arcs, {} alternating cycles)",
            self.g.vertex_count(),
            self.g.arc_count(),
            self.g.ac_count()
        )
    }
}

/// `(selection, index)` for every factor.
#[pyfunction]
#[pyo3(signature = (g, cap = DEFAULT_CAP))]
fn factors(g: &PyTwoDigraph, cap: usize) -> PyResult<Vec<(String, usize)>> {
    Ok(twodd::enumerate_factors(&g.g, cap)
        .map_err(err)?
        .map(|f| (f.selection().to_string(), f.index()))
        .collect())
}

/// Minimum number of cycles over all factors.
#[pyfunction]
#[pyo3(signature = (g, cap = DEFAULT_CAP))]
fn index(g: &PyTwoDigraph, cap: usize) -> PyResult<usize> {
    twodd::index_of(&g.g, cap).map_err(err)
}

/// Selection string of a Hamiltonian factor, or `None`.
#[pyfunction]
#[pyo3(signature = (g, cap = DEFAULT_CAP))]
fn hamiltonian_factor(g: &PyTwoDigraph, cap: usize) -> PyResult<Option<String>> {
    Ok(twodd::is_hamiltonian_bruteforce(&g.g, cap).map_err(err)?.map(|f| f.selection().to_string()))
}

/// `"odd"`, `"even"` or `"mixed"`.
#[pyfunction]
#[pyo3(signature = (g, exhaustive = false, cap = DEFAULT_CAP))]
fn parity_class(g: &PyTwoDigraph, exhaustive: bool, cap: usize) -> PyResult<String> {
    Ok(twodd::parity_class(&g.g, exhaustive, cap).map_err(err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (g, cap = DEFAULT_CAP))]
fn is_closed(g: &PyTwoDigraph, cap: usize) -> PyResult<bool> {
    twodd::is_closed(&g.g, cap).map_err(err)
}

/// Distinct open routes as `(mapping, parity)` with `mapping` a list of
/// `(entry, exit)` pairs.
#[pyfunction]
#[pyo3(signature = (g, cap = DEFAULT_CAP))]
fn open_routes(g: &PyTwoDigraph, cap: usize) -> PyResult<Vec<(Vec<(u32, u32)>, String)>> {
    Ok(twodd::open_routes(&g.g, cap)
        .map_err(err)?
        .iter()
        .map(|r| (r.mapping.iter().map(|&(u, v)| (u.0, v.0)).collect(), r.parity().to_string()))
        .collect())
}

/// Certificate as a dict with `verdict`, `method` and `witness`.
#[pyfunction]
#[pyo3(signature = (g, method = "auto", cap = DEFAULT_CAP))]
fn certify<'py>(py: Python<'py>, g: &PyTwoDigraph, method: &str, cap: usize) -> PyResult<Bound<'py, PyAny>> {
    let method = match method {
        "auto" => MethodChoice::Auto,
        "brute" => MethodChoice::BruteForce,
        "split" => MethodChoice::Split,
        "closed" => MethodChoice::ClosedSubset,
        "reduce" => MethodChoice::Reduction,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    let opts = CertifyOptions { cap, method, ..CertifyOptions::default() };
    to_py(py, &twodd::certify(&g.g, &opts))
}

/// Checks a certificate dict as returned by `certify`.
#[pyfunction]
fn verify(py: Python<'_>, g: &PyTwoDigraph, certificate: &Bound<'_, PyDict>) -> PyResult<bool> {
    let text: String = py.import("json")?.call_method1("dumps", (certificate,))?.extract()?;
    let cert: twodd::Certificate = serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    twodd::verify(&g.g, &cert).map_err(err)
}

/// Classification row of a graph that is a single six-arc alternating cycle.
#[pyfunction]
fn classify_ac6<'py>(py: Python<'py>, g: &PyTwoDigraph) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &twodd::classify_ac6(&g.g).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (g, max_size = DEFAULT_MAX_SPLIT_SIZE))]
fn minimal_split_sets(g: &PyTwoDigraph, max_size: usize) -> Vec<Vec<u32>> {
    split::minimal_split_sets(&g.g, max_size).iter().map(|s| vs(&s.vertices)).collect()
}

/// The two 2-dds obtained by splitting a minimal split pair and splicing
/// each component back together.
#[pyfunction]
fn splice_pair(g: &PyTwoDigraph, u: u32, v: u32) -> PyResult<(PyTwoDigraph, PyTwoDigraph)> {
    let (a, b) = split::splice_pair(&g.g, VertexId(u), VertexId(v)).map_err(err)?;
    Ok((a.into(), b.into()))
}

/// Minors of `g` over the open routes of the alternating cycles `k`.
#[pyfunction]
fn quotient(g: &PyTwoDigraph, k: Vec<usize>) -> PyResult<Vec<PyTwoDigraph>> {
    Ok(twodd::quotient::quotient(&g.g, &k).map_err(err)?.minors.into_iter().map(|m| m.graph.into()).collect())
}

fn spec(name: &str) -> PyResult<FamilySpec> {
    name.parse().map_err(err)
}

/// One graph per isomorphism class of a family such as `"B6_2"`.
#[pyfunction]
#[pyo3(signature = (family, budget = DEFAULT_BUDGET))]
fn enumerate_family(py: Python<'_>, family: &str, budget: u64) -> PyResult<Vec<PyTwoDigraph>> {
    let spec = spec(family)?;
    let graphs = py.detach(|| generation::enumerate_family(&spec, budget)).map_err(err)?;
    Ok(graphs.into_iter().map(Into::into).collect())
}

#[pyfunction]
#[pyo3(signature = (family, budget = DEFAULT_BUDGET))]
fn census<'py>(py: Python<'py>, family: &str, budget: u64) -> PyResult<Bound<'py, PyAny>> {
    let spec = spec(family)?;
    let row = py.detach(|| generation::census(&spec, budget)).map_err(err)?;
    to_py(py, &row)
}

#[pyfunction]
fn even_pair_splice(g1: &PyTwoDigraph, g2: &PyTwoDigraph, v1: u32, v2: u32) -> PyResult<PyTwoDigraph> {
    split::even_pair_splice(&g1.g, &g2.g, VertexId(v1), VertexId(v2)).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (h, g, seed = 0))]
fn construct_closed_splice(h: &PyTwoDigraph, g: &PyTwoDigraph, seed: u64) -> PyResult<PyTwoDigraph> {
    generation::construct_closed_splice(&h.g, &g.g, seed).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g1, g2, seed = 0))]
fn construct_unique_route_splice(g1: &PyTwoDigraph, g2: &PyTwoDigraph, seed: u64) -> PyResult<PyTwoDigraph> {
    generation::construct_unique_route_splice(&g1.g, &g2.g, seed).map(Into::into).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (m, k, seed = 0))]
fn random_2dd(m: usize, k: usize, seed: u64) -> PyTwoDigraph {
    generation::random_2dd(m, k, seed).into()
}

/// Named fixtures: the ten six-arc forms plus `split_example` and `closed_example`.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyTwoDigraph> {
    let text = match name {
        "split_example" => twodd::fixtures::SPLIT_EXAMPLE,
        "closed_example" => twodd::fixtures::CLOSED_EXAMPLE,
        _ => twodd::fixtures::AC6_FORMS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))?,
    };
    PyTwoDigraph::parse(text)
}

#[pymodule]
fn twodd_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TwoddError", m.py().get_type::<TwoddError>())?;
    m.add("LimitExceeded", m.py().get_type::<LimitExceeded>())?;
    m.add_class::<PyTwoDigraph>()?;
    m.add_function(wrap_pyfunction!(factors, m)?)?;
    m.add_function(wrap_pyfunction!(index, m)?)?;
    m.add_function(wrap_pyfunction!(hamiltonian_factor, m)?)?;
    m.add_function(wrap_pyfunction!(parity_class, m)?)?;
    m.add_function(wrap_pyfunction!(is_closed, m)?)?;
    m.add_function(wrap_pyfunction!(open_routes, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_ac6, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_split_sets, m)?)?;
    m.add_function(wrap_pyfunction!(splice_pair, m)?)?;
    m.add_function(wrap_pyfunction!(quotient, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_family, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(even_pair_splice, m)?)?;
    m.add_function(wrap_pyfunction!(construct_closed_splice, m)?)?;
    m.add_function(wrap_pyfunction!(construct_unique_route_splice, m)?)?;
    m.add_function(wrap_pyfunction!(random_2dd, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    Ok(())
}
