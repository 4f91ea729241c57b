//! Python bindings: graphs, Hamilton cycle enumeration, incidence tables and
//! cut-chain analysis. Structured results come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hamchain::chain::{
    end_degree, truncation_consistency, ChainAnalysis, CutChain, End, LimitCount,
};
use hamchain::constructions::{builtin_chain, builtin_graph, replacement_graph};
use hamchain::hamilton::{
    count_through, enumerate_hamilton_cycles, first_hamilton_cycle, parity_from_cycles,
    second_cycle_lollipop,
};
use hamchain::incidence::PairState;
use hamchain::incidence::{check_pair_sum_even, check_uniform_parity, incidence_multigraph};
use hamchain::{cycles_through, EdgeId, EdgeSpec, MultiGraph};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn loads<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A finite multigraph with labeled vertices and optionally labeled edges.
#[pyclass(name = "Graph", module = "hamchain")]
struct PyGraph {
    inner: MultiGraph,
}

impl PyGraph {
    fn edge_ids(&self, labels: &[String]) -> PyResult<Vec<EdgeId>> {
        labels
            .iter()
            .map(|l| self.inner.resolve_edge(l).map_err(err))
            .collect()
    }
}

#[pymethods]
impl PyGraph {
    /// `edges` holds `(label or None, a, b)` triples.
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(Option<String>, String, String)>) -> PyResult<Self> {
        let specs: Vec<EdgeSpec> = edges
            .iter()
            .map(|(l, a, b)| EdgeSpec::new(l.as_deref(), a, b))
            .collect();
        let inner = hamchain::build_graph(&vertices, &specs).map_err(err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        builtin_graph(name)
            .map(|inner| PyGraph { inner })
            .ok_or_else(|| err(format!("unknown graph `{name}`")))
    }

    #[staticmethod]
    fn replacement(n: usize) -> Self {
        PyGraph {
            inner: replacement_graph(n),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        MultiGraph::from_json(text)
            .map(|inner| PyGraph { inner })
            .map_err(err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self, name: &str) -> String {
        self.inner.to_dot(name)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner
            .vertices()
            .map(|v| self.inner.label(v).to_owned())
            .collect()
    }

    fn degree(&self, v: &str) -> PyResult<usize> {
        let id = self.inner.vertex(v).map_err(err)?;
        self.inner.degree(id).map_err(err)
    }

    fn is_cubic(&self) -> bool {
        self.inner.is_cubic()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    /// Every Hamilton cycle as a sorted list of edge names.
    fn hamilton_cycles(&self) -> Vec<Vec<String>> {
        enumerate_hamilton_cycles(&self.inner)
            .iter()
            .map(|c| c.labels(&self.inner))
            .collect()
    }

    #[pyo3(signature = (require=Vec::new(), forbid=Vec::new()))]
    fn count_through(&self, require: Vec<String>, forbid: Vec<String>) -> PyResult<u64> {
        count_through(
            &self.inner,
            &self.edge_ids(&require)?,
            &self.edge_ids(&forbid)?,
        )
        .map_err(err)
    }

    /// Membership count per edge name.
    fn edge_parity(&self) -> Vec<(String, u64)> {
        let report = parity_from_cycles(&self.inner, &enumerate_hamilton_cycles(&self.inner));
        report
            .counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (self.inner.edge_name(self.inner.edges()[i].id), c))
            .collect()
    }

    /// A Hamilton cycle through `edge` and a second one found by the lollipop walk.
    fn second_cycle(&self, edge: &str) -> PyResult<(Vec<String>, Vec<String>)> {
        let e = self.inner.resolve_edge(edge).map_err(err)?;
        let first = cycles_through(&self.inner, &[e], &[])
            .map_err(err)?
            .into_iter()
            .next()
            .ok_or_else(|| err(format!("no Hamilton cycle uses {edge}")))?;
        let second = second_cycle_lollipop(&self.inner, &first, e).map_err(err)?;
        Ok((first.labels(&self.inner), second.labels(&self.inner)))
    }

    fn has_hamilton_cycle(&self) -> bool {
        first_hamilton_cycle(&self.inner).is_some()
    }

    /// The incidence table between anchors `v` and `w`, with lemma audits.
    fn incidence<'py>(&self, py: Python<'py>, v: &str, w: &str) -> PyResult<Bound<'py, PyAny>> {
        let g = &self.inner;
        let (a, b) = (g.vertex(v).map_err(err)?, g.vertex(w).map_err(err)?);
        let h = incidence_multigraph(g, a, b).map_err(err)?;
        let states = |s: &[PairState]| s.iter().map(|p| p.render(g)).collect::<Vec<_>>();
        let dict = pyo3::types::PyDict::new(py);
        dict.set_item("left_states", states(&h.left_states))?;
        dict.set_item("right_states", states(&h.right_states))?;
        dict.set_item("multiplicity", h.multiplicity.clone())?;
        dict.set_item("pair_sums_even", check_pair_sum_even(&h).all_even)?;
        dict.set_item("uniform_parity", check_uniform_parity(&h).uniform())?;
        Ok(dict.into_any())
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A one- or two-ended cut-chain.
#[pyclass(name = "Chain", module = "hamchain")]
struct PyChain {
    inner: CutChain,
}

fn end(name: &str) -> PyResult<End> {
    match name {
        "left" => Ok(End::Left),
        "right" => Ok(End::Right),
        _ => Err(err(format!("end must be `left` or `right`, not `{name}`"))),
    }
}

#[pymethods]
impl PyChain {
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        builtin_chain(name)
            .map(|inner| PyChain { inner })
            .ok_or_else(|| err(format!("unknown chain `{name}`")))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        CutChain::from_json(text)
            .map(|inner| PyChain { inner })
            .map_err(err)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn interface_size(&self) -> usize {
        self.inner.interface_size()
    }

    fn truncation(&self, k: usize) -> PyResult<PyGraph> {
        let w = self.inner.truncation_minor(k).map_err(err)?;
        Ok(PyGraph { inner: w.graph })
    }

    #[pyo3(signature = (n, end_name="right"))]
    fn segment(&self, n: usize, end_name: &str) -> PyResult<PyGraph> {
        let s = self.inner.segment_minor(end(end_name)?, n).map_err(err)?;
        Ok(PyGraph { inner: s.graph })
    }

    /// `("Zero", None)`, `("Finite", k)` or `("Infinite", None)`.
    fn count(&self) -> PyResult<(String, Option<u128>)> {
        let r = ChainAnalysis::new(&self.inner)
            .and_then(|a| a.count())
            .map_err(err)?;
        Ok(match r.count {
            LimitCount::Zero => ("Zero".into(), None),
            LimitCount::Finite(k) => ("Finite".into(), Some(k)),
            LimitCount::Infinite => ("Infinite".into(), None),
        })
    }

    /// The full analysis report as a dict.
    #[pyo3(signature = (certificates=16))]
    fn analyze<'py>(&self, py: Python<'py>, certificates: usize) -> PyResult<Bound<'py, PyAny>> {
        let report = ChainAnalysis::new(&self.inner)
            .and_then(|a| a.report(certificates))
            .map_err(err)?;
        loads(py, &report.to_json())
    }

    /// Whether the transfer product matches brute force at depth `k`.
    fn consistent(&self, k: usize) -> PyResult<bool> {
        Ok(truncation_consistency(&self.inner, k)
            .map_err(err)?
            .consistent)
    }

    fn end_degree(&self) -> PyResult<usize> {
        end_degree(&self.inner).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Chain(interface size {})", self.inner.interface_size())
    }
}

#[pymodule]
#[pyo3(name = "hamchain")]
fn hamchain_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyChain>()?;
    m.add(
        "BUILTIN_GRAPHS",
        hamchain::constructions::BUILTIN_GRAPHS.to_vec(),
    )?;
    m.add(
        "BUILTIN_CHAINS",
        hamchain::constructions::BUILTIN_CHAINS.to_vec(),
    )?;
    Ok(())
}
