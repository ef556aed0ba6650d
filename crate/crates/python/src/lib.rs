//! Python module `clique_spectra_py`: graphs, t-clique spectra, packing checks
//! and exhaustive scans.

use clique_spectra::lab::{self, ScanOptions, ScanParams};
use clique_spectra::packing::find_disjoint_packing;
use clique_spectra::{graph, tensor, Error, FreenessQuery, SolverOptions};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph on at most 64 vertices.
#[pyclass(module = "clique_spectra_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Graph {
    inner: graph::Graph,
}

impl From<graph::Graph> for Graph {
    fn from(inner: graph::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Graph::from_edges(n, &edges).map(Graph::from).map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph::graph_from_graph6(text).map(Graph::from).map_err(py_err)
    }

    fn graph6(&self) -> String {
        graph::graph_to_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn with_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        let mut edges: Vec<_> = self.inner.edges().collect();
        edges.push((u, v));
        Graph::new(self.inner.n(), edges)
    }

    fn complement(&self) -> Self {
        self.inner.complement().into()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.graph6())
    }
}

/// Perron data of `A_t(G)`.
#[pyclass(module = "clique_spectra_py", frozen)]
pub struct Spectrum {
    inner: tensor::SpectralResult,
}

#[pymethods]
impl Spectrum {
    #[getter]
    fn rho(&self) -> f64 {
        self.inner.rho
    }

    #[getter]
    fn converged(&self) -> bool {
        self.inner.converged
    }

    #[getter]
    fn residual(&self) -> f64 {
        self.inner.residual
    }

    /// Eigenvector of the winning block, unit ℓ_t norm, zero elsewhere.
    #[getter]
    fn vector(&self) -> Vec<f64> {
        self.inner.perron_vector()
    }

    /// Vertex sets of the t-clique components.
    #[getter]
    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components.iter().map(|c| c.vertices.clone()).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("spectrum serialises")
    }

    fn __repr__(&self) -> String {
        format!("Spectrum(rho={}, converged={})", self.inner.rho, self.inner.converged)
    }
}

fn solver(tol: f64, max_iters: usize, shift: f64) -> SolverOptions {
    SolverOptions { tol, max_iters, shift }
}

#[pyfunction]
#[pyo3(signature = (g, t, tol = 1e-10, max_iters = 100_000, shift = 1.0))]
fn spectral_radius(py: Python<'_>, g: &Graph, t: usize, tol: f64, max_iters: usize, shift: f64) -> PyResult<Spectrum> {
    let g = g.inner.clone();
    py.detach(|| tensor::spectral_radius(&g, t, &solver(tol, max_iters, shift)))
        .map(|inner| Spectrum { inner })
        .map_err(py_err)
}

#[pyfunction]
fn weakly_irreducible(g: &Graph, t: usize) -> PyResult<bool> {
    tensor::weakly_irreducible(&g.inner, t).map_err(py_err)
}

#[pyfunction]
fn cliques(g: &Graph, t: usize) -> PyResult<Vec<Vec<usize>>> {
    let cs = clique_spectra::enumerate_cliques(&g.inner, t).map_err(py_err)?;
    Ok(cs.cliques().iter().map(|c| c.vertices().collect()).collect())
}

#[pyfunction]
fn count_cliques(g: &Graph, t: usize) -> u64 {
    clique_spectra::count_cliques(&g.inner, t)
}

#[pyfunction]
fn clique_connected(g: &Graph, t: usize) -> bool {
    clique_spectra::clique_connected(&g.inner, t)
}

/// Exact number of t-cliques of `K_{k-1} ∨ T_r(n-k+1)`.
#[pyfunction]
fn count_join_turan_cliques(n: usize, k: usize, r: usize, t: usize) -> PyResult<u128> {
    clique_spectra::count_join_turan_cliques(n, k, r, t).map_err(py_err)
}

#[pyfunction]
fn is_free(g: &Graph, k: usize, r: usize) -> PyResult<bool> {
    Ok(clique_spectra::is_free(&g.inner, FreenessQuery::new(k, r).map_err(py_err)?))
}

/// First packing of `k` disjoint `(r+1)`-cliques, or None.
#[pyfunction]
fn find_packing(g: &Graph, k: usize, r: usize) -> PyResult<Option<Vec<Vec<usize>>>> {
    let q = FreenessQuery::new(k, r).map_err(py_err)?;
    Ok(find_disjoint_packing(&g.inner, q).map(|p| p.vertex_lists()))
}

#[pyfunction]
fn are_isomorphic(a: &Graph, b: &Graph) -> PyResult<bool> {
    graph::are_isomorphic(&a.inner, &b.inner).map_err(py_err)
}

#[pyfunction]
fn matching_number(g: &Graph) -> usize {
    graph::matching_number(&g.inner)
}

#[pyfunction]
fn chvatal_hanson_bound(m: u64, delta: u64) -> PyResult<u64> {
    graph::chvatal_hanson_bound(m, delta).map_err(py_err)
}

#[pyfunction]
fn complete_graph(n: usize) -> PyResult<Graph> {
    graph::complete_graph(n).map(Graph::from).map_err(py_err)
}

#[pyfunction]
fn turan_graph(n: usize, r: usize) -> PyResult<Graph> {
    graph::turan_graph(n, r).map(Graph::from).map_err(py_err)
}

#[pyfunction]
fn complete_multipartite(sizes: Vec<usize>) -> PyResult<Graph> {
    graph::complete_multipartite(&sizes).map(Graph::from).map_err(py_err)
}

#[pyfunction]
fn join(a: &Graph, b: &Graph) -> PyResult<Graph> {
    graph::join(&a.inner, &b.inner).map(Graph::from).map_err(py_err)
}

#[pyfunction]
fn disjoint_union(a: &Graph, b: &Graph) -> PyResult<Graph> {
    graph::disjoint_union(&a.inner, &b.inner).map(Graph::from).map_err(py_err)
}

/// `K_{k-1} ∨ T_r(n-k+1)`.
#[pyfunction]
fn conjectured_extremal(n: usize, k: usize, r: usize) -> PyResult<Graph> {
    lab::conjectured_extremal(n, k, r).map(Graph::from).map_err(py_err)
}

/// Scans every labelled graph on `n <= 7` vertices; returns the record as JSON.
#[pyfunction]
#[pyo3(signature = (n, k, r, t, tie_tol = 1e-9, prune = true, threads = 1))]
#[allow(clippy::too_many_arguments)]
fn scan_all(py: Python<'_>, n: usize, k: usize, r: usize, t: usize, tie_tol: f64, prune: bool, threads: usize) -> PyResult<String> {
    let opts = ScanOptions { tie_tol, prune, threads, ..ScanOptions::default() };
    py.detach(|| lab::scan_all(ScanParams { n, k, r, t }, &opts))
        .map(|(rec, _)| rec.to_json())
        .map_err(py_err)
}

/// Scans the given graphs (graph6 strings); graphs of other orders are skipped.
#[pyfunction]
#[pyo3(signature = (graphs, n, k, r, t, tie_tol = 1e-9, prune = true))]
#[allow(clippy::too_many_arguments)]
fn scan_graphs(graphs: Vec<String>, n: usize, k: usize, r: usize, t: usize, tie_tol: f64, prune: bool) -> PyResult<String> {
    let parsed = graphs
        .iter()
        .map(|s| graph::graph_from_graph6(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(py_err)?;
    let opts = ScanOptions { tie_tol, prune, ..ScanOptions::default() };
    lab::scan(parsed, "python", ScanParams { n, k, r, t }, &opts)
        .map(|(rec, _)| rec.to_json())
        .map_err(py_err)
}

#[pymodule]
fn clique_spectra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Spectrum>()?;
    m.add_function(wrap_pyfunction!(spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(weakly_irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(cliques, m)?)?;
    m.add_function(wrap_pyfunction!(count_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(clique_connected, m)?)?;
    m.add_function(wrap_pyfunction!(count_join_turan_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(is_free, m)?)?;
    m.add_function(wrap_pyfunction!(find_packing, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(matching_number, m)?)?;
    m.add_function(wrap_pyfunction!(chvatal_hanson_bound, m)?)?;
    m.add_function(wrap_pyfunction!(complete_graph, m)?)?;
    m.add_function(wrap_pyfunction!(turan_graph, m)?)?;
    m.add_function(wrap_pyfunction!(complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(join, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_union, m)?)?;
    m.add_function(wrap_pyfunction!(conjectured_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(scan_all, m)?)?;
    m.add_function(wrap_pyfunction!(scan_graphs, m)?)?;
    Ok(())
}
