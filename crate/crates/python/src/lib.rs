//! Python bindings for `flagstone`.
//!
//! Counts come back as `int`, exact bounds as `fractions.Fraction`, and
//! structured reports as plain `dict`s mirroring the JSON output of the
//! command-line tool.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

use flagstone::bounds;
use flagstone::complex::{self, FaceVector, HVector};
use flagstone::graph::{self, generators, MultipartitePattern};
use flagstone::io;
use flagstone::search::{self, SearchConfig};
use flagstone::structure::{self, PartitionWitness};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Serialises through JSON and hands the result to `json.loads`.
fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "flagstone", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: graph::Graph,
}

impl From<graph::Graph> for PyGraph {
    fn from(inner: graph::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Graph::from_edges(n, edges).map(Self::from).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        io::parse_graph6(text).map(Self::from).map_err(value_error)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        io::parse_edge_list(text).map(Self::from).map_err(value_error)
    }

    fn to_graph6(&self) -> String {
        io::write_graph6(&self.inner)
    }

    fn to_edge_list(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        if let Some(v) = vertices.iter().find(|&&v| v >= self.inner.n()) {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.induced(&vertices).into())
    }

    /// Canonical graph6 string: equal for isomorphic graphs (n <= 11).
    fn canonical_form(&self) -> PyResult<String> {
        if self.inner.n() > graph::MAX_CANONICAL_ORDER {
            return Err(value_error(format!(
                "canonical form supports at most {} vertices",
                graph::MAX_CANONICAL_ORDER
            )));
        }
        Ok(io::write_graph6(&graph::canonical_code(&self.inner).to_graph()))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyfunction]
fn cycle(k: usize) -> PyResult<PyGraph> {
    generators::cycle(k).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn independent(k: usize) -> PyGraph {
    generators::independent(k).into()
}

#[pyfunction]
fn complete_multipartite(parts: Vec<usize>) -> PyResult<PyGraph> {
    generators::complete_multipartite(&parts).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn cross_polytope(d: usize) -> PyGraph {
    generators::cross_polytope(d).into()
}

#[pyfunction]
fn join_of_cycles(s: usize, n: usize) -> PyResult<PyGraph> {
    generators::join_of_cycles(s, n).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn suspension_sphere(k: usize) -> PyResult<PyGraph> {
    generators::suspension_sphere(k).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn even_sphere_join(s: usize, k: usize) -> PyResult<PyGraph> {
    generators::even_sphere_join(s, k).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn grid_torus(p: usize, q: usize) -> PyResult<PyGraph> {
    generators::grid_torus(p, q).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn petersen() -> PyGraph {
    generators::petersen().into()
}

#[pyfunction]
fn join(g: &PyGraph, h: &PyGraph) -> PyGraph {
    graph::join(&g.inner, &h.inner).into()
}

#[pyfunction]
fn disjoint_union(g: &PyGraph, h: &PyGraph) -> PyGraph {
    graph::disjoint_union(&g.inner, &h.inner).into()
}

/// Link of a clique: the induced graph on its common neighbours and the
/// host label of each link vertex.
#[pyfunction]
fn link(g: &PyGraph, sigma: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
    let lk = graph::link(&g.inner, &sigma).map_err(value_error)?;
    Ok((lk.graph.into(), lk.host))
}

#[pyfunction]
fn clique_count(g: &PyGraph, k: usize) -> u64 {
    graph::clique_count(&g.inner, k)
}

#[pyfunction]
fn maximal_cliques(g: &PyGraph) -> Vec<Vec<usize>> {
    graph::maximal_cliques(&g.inner).into_iter().map(|c| c.into_vec()).collect()
}

#[pyfunction]
fn cliques_of_size(g: &PyGraph, k: usize) -> Vec<Vec<usize>> {
    graph::cliques_of_size(&g.inner, k).into_iter().map(|c| c.into_vec()).collect()
}

/// Parts of an embedding of the complete multipartite pattern, or `None`.
#[pyfunction]
fn contains_multipartite_subgraph(g: &PyGraph, parts: Vec<usize>) -> PyResult<Option<Vec<Vec<usize>>>> {
    let pattern = MultipartitePattern::new(parts).map_err(value_error)?;
    Ok(graph::contains_multipartite_subgraph(&g.inner, &pattern).map(|e| e.parts))
}

/// `{"is_leveled", "d", "witness"}`.
#[pyfunction]
fn is_d_leveled(py: Python<'_>, g: &PyGraph, d: usize) -> PyResult<Py<PyAny>> {
    to_py(py, &structure::is_d_leveled(&g.inner, d))
}

#[pyfunction]
fn is_d_leveled_via_complex(g: &PyGraph, d: usize) -> bool {
    structure::is_d_leveled_via_complex(&g.inner, d)
}

#[pyfunction]
fn link_leveled_property(g: &PyGraph, sigma: Vec<usize>, d: usize) -> PyResult<bool> {
    structure::link_leveled_property(&g.inner, &sigma, d).map_err(value_error)
}

/// `(f_{-1}, f_0, ..)` of the clique complex.
#[pyfunction]
fn f_vector(g: &PyGraph) -> Vec<u64> {
    complex::clique_f_vector(&g.inner).entries().to_vec()
}

#[pyfunction]
fn h_vector(f: Vec<u64>, d: usize) -> PyResult<Vec<BigInt>> {
    complex::h_vector(&FaceVector::new(f), d)
        .map(|h| h.entries().to_vec())
        .map_err(value_error)
}

#[pyfunction]
fn gamma_vector(h: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    complex::gamma_vector(&HVector::new(h))
        .map(|g| g.entries().to_vec())
        .map_err(value_error)
}

#[pyfunction]
fn euler_characteristic(f: Vec<u64>) -> i64 {
    complex::euler_characteristic(&FaceVector::new(f))
}

/// Invariants of the clique complex: f/h/γ vectors, flagness,
/// pseudomanifold, Dehn–Sommerville, Klee and Eulerian checks.
#[pyfunction]
fn complex_summary(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &bounds::complex_summary(&complex::clique_complex(&g.inner)))
}

/// `(coefficients, abs_sum)` where `coefficients[j + 1]` multiplies
/// `f_j` in the middle Dehn–Sommerville relation.
#[pyfunction]
fn middle_ds_coefficients(d: usize) -> PyResult<(Vec<BigRational>, BigRational)> {
    let m = complex::middle_ds_coefficients(d).map_err(value_error)?;
    Ok((m.coefficients, m.abs_sum))
}

/// `(independent, rhs, holds)` for |I| <= 2|X|^d.
#[pyfunction]
fn check_lemma_independent_bound(g: &PyGraph, d: usize, i: Vec<usize>, x: Vec<usize>) -> PyResult<(u64, BigInt, bool)> {
    let b = structure::check_lemma_independent_bound(&g.inner, d, &i, &x).map_err(value_error)?;
    Ok((b.independent as u64, b.rhs, b.holds))
}

fn positive(s: u64) -> PyResult<u64> {
    if s == 0 {
        Err(value_error("s must be positive"))
    } else {
        Ok(s)
    }
}

#[pyfunction]
fn edge_bound_odd(n: u64, s: u64) -> PyResult<BigRational> {
    Ok(bounds::edge_bound_odd(n, positive(s)?))
}

#[pyfunction]
fn edge_lower_bound_odd(n: u64, s: u64) -> PyResult<BigRational> {
    Ok(bounds::edge_lower_bound_odd(n, positive(s)?))
}

#[pyfunction]
fn edge_bound_even_conjecture(n: u64, s: u64) -> PyResult<BigRational> {
    Ok(bounds::edge_bound_even_conjecture(n, positive(s)?))
}

/// `(γ₁, γ₂, holds, equality)`.
#[pyfunction]
fn gamma_check(f0: u64, f1: u64, s: u64) -> PyResult<(BigInt, BigInt, bool, bool)> {
    let c = bounds::gamma_check(f0, f1, positive(s)?);
    Ok((c.g1, c.g2, c.holds, c.equality))
}

#[pyfunction]
fn linear_excess(g: &PyGraph, s: u64) -> PyResult<BigRational> {
    bounds::linear_excess(&g.inner, s).map_err(value_error)
}

/// `(value, in_window)`.
#[pyfunction]
fn bollobas_lower_bound(n: u64, m: u64, t: u32) -> PyResult<(BigRational, bool)> {
    if t == 0 {
        return Err(value_error("t must be positive"));
    }
    let b = structure::bollobas_lower_bound(n, m, t);
    Ok((b.value, b.in_window))
}

#[pyfunction]
#[pyo3(signature = (g, s, c = None))]
fn verify_theorem_instance(py: Python<'_>, g: &PyGraph, s: usize, c: Option<BigRational>) -> PyResult<Py<PyAny>> {
    let r = bounds::verify_theorem_instance(&g.inner, s, c.as_ref()).map_err(value_error)?;
    to_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (g, parts, exceptional, eta, c, alpha = None, m = 0))]
fn verify_type_partition(
    py: Python<'_>,
    g: &PyGraph,
    parts: Vec<Vec<usize>>,
    exceptional: Vec<usize>,
    eta: BigRational,
    c: usize,
    alpha: Option<BigRational>,
    m: usize,
) -> PyResult<Py<PyAny>> {
    let mut w = PartitionWitness::new(parts, exceptional, eta, c);
    if let Some(a) = alpha {
        w = w.with_flatness(a, m);
    } else {
        w.m = m;
    }
    to_py(py, &structure::verify_type_partition(&g.inner, &w).map_err(value_error)?)
}

#[pyfunction]
#[pyo3(signature = (g, t, eta, seed = 0, seed_parts = None))]
fn extract_partition(
    py: Python<'_>,
    g: &PyGraph,
    t: usize,
    eta: BigRational,
    seed: u64,
    seed_parts: Option<Vec<Vec<usize>>>,
) -> PyResult<Py<PyAny>> {
    let r = structure::extract_partition(&g.inner, t, &eta, seed_parts.as_deref(), seed).map_err(value_error)?;
    to_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (d, n_min, n_max, workers = None))]
fn exhaustive_search(py: Python<'_>, d: usize, n_min: usize, n_max: usize, workers: Option<usize>) -> PyResult<Py<PyAny>> {
    let cfg = SearchConfig {
        workers,
        ..SearchConfig::exhaustive(d, n_min, n_max)
    };
    let r = py.detach(|| search::exhaustive_search(&cfg)).map_err(value_error)?;
    to_py(py, &r)
}

#[pyfunction]
#[pyo3(signature = (d, n_min, n_max, seed, budget = search::DEFAULT_RANDOM_STEPS, dedup = false))]
fn random_search(
    py: Python<'_>,
    d: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
    budget: u64,
    dedup: bool,
) -> PyResult<Py<PyAny>> {
    let cfg = SearchConfig {
        budget,
        dedup,
        ..SearchConfig::random(d, n_min, n_max, seed)
    };
    let r = py.detach(|| search::random_search(&cfg)).map_err(value_error)?;
    to_py(py, &r)
}

#[pymodule]
#[pyo3(name = "flagstone")]
fn flagstone_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(independent, m)?)?;
    m.add_function(wrap_pyfunction!(complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(cross_polytope, m)?)?;
    m.add_function(wrap_pyfunction!(join_of_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(suspension_sphere, m)?)?;
    m.add_function(wrap_pyfunction!(even_sphere_join, m)?)?;
    m.add_function(wrap_pyfunction!(grid_torus, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(link, m)?)?;
    m.add_function(wrap_pyfunction!(clique_count, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(cliques_of_size, m)?)?;
    m.add_function(wrap_pyfunction!(contains_multipartite_subgraph, m)?)?;
    m.add_function(wrap_pyfunction!(is_d_leveled, m)?)?;
    m.add_function(wrap_pyfunction!(is_d_leveled_via_complex, m)?)?;
    m.add_function(wrap_pyfunction!(link_leveled_property, m)?)?;
    m.add_function(wrap_pyfunction!(f_vector, m)?)?;
    m.add_function(wrap_pyfunction!(h_vector, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_vector, m)?)?;
    m.add_function(wrap_pyfunction!(euler_characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(complex_summary, m)?)?;
    m.add_function(wrap_pyfunction!(middle_ds_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma_independent_bound, m)?)?;
    m.add_function(wrap_pyfunction!(edge_bound_odd, m)?)?;
    m.add_function(wrap_pyfunction!(edge_lower_bound_odd, m)?)?;
    m.add_function(wrap_pyfunction!(edge_bound_even_conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_check, m)?)?;
    m.add_function(wrap_pyfunction!(linear_excess, m)?)?;
    m.add_function(wrap_pyfunction!(bollobas_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem_instance, m)?)?;
    m.add_function(wrap_pyfunction!(verify_type_partition, m)?)?;
    m.add_function(wrap_pyfunction!(extract_partition, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_search, m)?)?;
    m.add_function(wrap_pyfunction!(random_search, m)?)?;
    Ok(())
}
