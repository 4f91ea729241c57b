//! Labeled finite multigraphs.
//!
//! Graphs are immutable once built. Every operation that changes structure
//! returns a fresh graph whose vertex and edge ids are assigned in insertion
//! order, so identical inputs always produce identical ids.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::flow::FlowNetwork;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertexLabel(String),
    #[error("duplicate edge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex set is not a subset of the graph's vertices")]
    NotSubset,
    #[error("kept vertex set must be nonempty and proper")]
    InvalidKeep,
    #[error("contraction creates a parallel edge or loop at `{0}`")]
    SimplifyCollision(String),
    #[error("source set is empty")]
    EmptySources,
    #[error("sink `{0}` is contained in the source set")]
    SinkInSources(String),
    #[error("malformed graph file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub(crate) usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub(crate) usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub id: EdgeId,
    pub ends: (VertexId, VertexId),
    pub label: Option<String>,
}

impl EdgeRecord {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    /// The end opposite to `v`; for a loop this is `v` itself.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }
}

/// Edge specification used by the builders: optional label plus endpoint labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub label: Option<String>,
    pub ends: (String, String),
}

impl EdgeSpec {
    pub fn new(label: Option<&str>, a: &str, b: &str) -> Self {
        EdgeSpec {
            label: label.map(str::to_owned),
            ends: (a.to_owned(), b.to_owned()),
        }
    }

    pub fn labeled(label: &str, a: &str, b: &str) -> Self {
        Self::new(Some(label), a, b)
    }
}

#[derive(Debug, Clone, Default)]
pub struct MultiGraph {
    labels: Vec<String>,
    edges: Vec<EdgeRecord>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    // incident edge ids per vertex; a loop appears once
    incidence: Vec<Vec<EdgeId>>,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

/// Edge set `E(S, V \ S)` together with the side it was computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub side: BTreeSet<VertexId>,
    pub cut_edges: BTreeSet<EdgeId>,
}

impl EdgeCut {
    pub fn len(&self) -> usize {
        self.cut_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cut_edges.is_empty()
    }
}

/// Incremental builder; the only way to obtain a [`MultiGraph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    graph: MultiGraph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_graph(graph: &MultiGraph) -> Self {
        GraphBuilder {
            graph: graph.clone(),
        }
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<VertexId, GraphError> {
        let g = &mut self.graph;
        if g.vertex_index.contains_key(label) {
            return Err(GraphError::DuplicateVertexLabel(label.to_owned()));
        }
        let id = VertexId(g.labels.len());
        g.labels.push(label.to_owned());
        g.vertex_index.insert(label.to_owned(), id);
        g.incidence.push(Vec::new());
        Ok(id)
    }

    pub fn add_edge_ids(
        &mut self,
        label: Option<&str>,
        a: VertexId,
        b: VertexId,
    ) -> Result<EdgeId, GraphError> {
        let g = &mut self.graph;
        for v in [a, b] {
            if v.0 >= g.labels.len() {
                return Err(GraphError::UnknownVertex(v.to_string()));
            }
        }
        if let Some(l) = label {
            if g.edge_index.contains_key(l) {
                return Err(GraphError::DuplicateEdgeLabel(l.to_owned()));
            }
        }
        let id = EdgeId(g.edges.len());
        g.edges.push(EdgeRecord {
            id,
            ends: (a, b),
            label: label.map(str::to_owned),
        });
        if let Some(l) = label {
            g.edge_index.insert(l.to_owned(), id);
        }
        g.incidence[a.0].push(id);
        if a != b {
            g.incidence[b.0].push(id);
        }
        Ok(id)
    }

    pub fn add_edge(
        &mut self,
        label: Option<&str>,
        a: &str,
        b: &str,
    ) -> Result<EdgeId, GraphError> {
        let a = self.graph.vertex(a)?;
        let b = self.graph.vertex(b)?;
        self.add_edge_ids(label, a, b)
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId, GraphError> {
        self.graph.vertex(label)
    }

    pub fn build(self) -> MultiGraph {
        self.graph
    }
}

/// Builds a graph from vertex labels and edge specs. Repeated endpoint pairs
/// create parallel edges.
pub fn build_graph<S: AsRef<str>>(
    vertex_labels: &[S],
    edge_specs: &[EdgeSpec],
) -> Result<MultiGraph, GraphError> {
    let mut b = GraphBuilder::new();
    for l in vertex_labels {
        b.add_vertex(l.as_ref())?;
    }
    for spec in edge_specs {
        b.add_edge(spec.label.as_deref(), &spec.ends.0, &spec.ends.1)?;
    }
    Ok(b.build())
}

impl MultiGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &EdgeRecord {
        &self.edges[e.0]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_owned()))
    }

    pub fn edge_by_label(&self, label: &str) -> Result<EdgeId, GraphError> {
        self.edge_index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownEdge(label.to_owned()))
    }

    pub fn edge_label(&self, e: EdgeId) -> Option<&str> {
        self.edges[e.0].label.as_deref()
    }

    /// Label if present, otherwise the `#id` form.
    pub fn edge_name(&self, e: EdgeId) -> String {
        match &self.edges[e.0].label {
            Some(l) => l.clone(),
            None => e.to_string(),
        }
    }

    /// Resolves either an edge label or the `#id` form.
    pub fn resolve_edge(&self, name: &str) -> Result<EdgeId, GraphError> {
        if let Some(id) = self.edge_index.get(name) {
            return Ok(*id);
        }
        if let Some(rest) = name.strip_prefix('#') {
            if let Ok(i) = rest.parse::<usize>() {
                if i < self.edges.len() {
                    return Ok(EdgeId(i));
                }
            }
        }
        Err(GraphError::UnknownEdge(name.to_owned()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.labels.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.to_string()))
        }
    }

    /// Incident edges of `v`, loops included once.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    /// `E(v)`: incident non-loop edges.
    pub fn link_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.incidence[v.0]
            .iter()
            .copied()
            .filter(|e| !self.edges[e.0].is_loop())
            .collect()
    }

    /// Number of edge-end incidences at `v`; loops count twice.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.degree_unchecked(v))
    }

    pub(crate) fn degree_unchecked(&self, v: VertexId) -> usize {
        self.incidence[v.0]
            .iter()
            .map(|e| if self.edges[e.0].is_loop() { 2 } else { 1 })
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree_unchecked(v)).collect()
    }

    pub fn edge_cut(&self, side: &BTreeSet<VertexId>) -> Result<EdgeCut, GraphError> {
        if side.iter().any(|v| !self.contains_vertex(*v)) {
            return Err(GraphError::NotSubset);
        }
        let cut_edges = self
            .edges
            .iter()
            .filter(|e| side.contains(&e.ends.0) != side.contains(&e.ends.1))
            .map(|e| e.id)
            .collect();
        Ok(EdgeCut {
            side: side.clone(),
            cut_edges,
        })
    }

    pub fn is_cubic(&self) -> bool {
        self.vertex_count() > 0 && self.vertices().all(|v| self.degree_unchecked(v) == 3)
    }

    pub fn is_nearly_cubic(&self) -> bool {
        let degrees = self.degrees();
        degrees.iter().filter(|&&d| d == 2).count() == 1
            && degrees.iter().all(|&d| d == 2 || d == 3)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| {
            let key = (e.ends.0.min(e.ends.1), e.ends.0.max(e.ends.1));
            !e.is_loop() && seen.insert(key)
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![VertexId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for e in &self.incidence[v.0] {
                let u = self.edges[e.0].other(v);
                if !seen[u.0] {
                    seen[u.0] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn vertex_set(&self, labels: &[&str]) -> Result<BTreeSet<VertexId>, GraphError> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    /// Merges every vertex outside `keep` into a single new vertex
    /// `dummy_label`. Edges with both ends outside `keep` are dropped and
    /// cut edges are re-attached to the dummy. With `simplify`, a contraction
    /// that would create a parallel edge at the dummy is an error.
    pub fn contract_to_dummy(
        &self,
        keep: &BTreeSet<VertexId>,
        dummy_label: &str,
        simplify: bool,
    ) -> Result<MultiGraph, GraphError> {
        if keep.iter().any(|v| !self.contains_vertex(*v)) {
            return Err(GraphError::NotSubset);
        }
        if keep.is_empty() || keep.len() == self.vertex_count() {
            return Err(GraphError::InvalidKeep);
        }
        let mut b = GraphBuilder::new();
        let mut map = vec![None; self.vertex_count()];
        for v in self.vertices().filter(|v| keep.contains(v)) {
            map[v.0] = Some(b.add_vertex(self.label(v))?);
        }
        let dummy = b.add_vertex(dummy_label)?;
        let mut dummy_neighbors = BTreeSet::new();
        for e in &self.edges {
            let (a, c) = (map[e.ends.0 .0], map[e.ends.1 .0]);
            let (a, c) = match (a, c) {
                (None, None) => continue,
                (Some(a), Some(c)) => (a, c),
                (Some(a), None) | (None, Some(a)) => {
                    if simplify && !dummy_neighbors.insert(a) {
                        return Err(GraphError::SimplifyCollision(b.graph.label(a).to_owned()));
                    }
                    (a, dummy)
                }
            };
            b.add_edge_ids(e.label.as_deref(), a, c)?;
        }
        Ok(b.build())
    }

    /// Identifies vertices along the given label pairs (union-find closure).
    /// Each merged class keeps the label of its earliest vertex. All edges are
    /// retained, so parallel edges and loops may appear.
    pub fn quotient<S: AsRef<str>>(
        &self,
        identifications: &[(S, S)],
    ) -> Result<MultiGraph, GraphError> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in identifications {
            let a = self.vertex(a.as_ref())?.0;
            let b = self.vertex(b.as_ref())?.0;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
        let mut b = GraphBuilder::new();
        let mut map = vec![VertexId(usize::MAX); n];
        for v in 0..n {
            if find(&mut parent, v) == v {
                map[v] = b.add_vertex(&self.labels[v])?;
            }
        }
        for v in 0..n {
            let r = find(&mut parent, v);
            map[v] = map[r];
        }
        for e in &self.edges {
            b.add_edge_ids(e.label.as_deref(), map[e.ends.0 .0], map[e.ends.1 .0])?;
        }
        Ok(b.build())
    }

    /// Disjoint union; labels of the two graphs must not collide.
    pub fn disjoint_union(&self, other: &MultiGraph) -> Result<MultiGraph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        let offset = self.vertex_count();
        for l in &other.labels {
            b.add_vertex(l)?;
        }
        for e in &other.edges {
            b.add_edge_ids(
                e.label.as_deref(),
                VertexId(e.ends.0 .0 + offset),
                VertexId(e.ends.1 .0 + offset),
            )?;
        }
        Ok(b.build())
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<MultiGraph, GraphError> {
        self.check_vertex(v)?;
        self.induced(|u| u != v)
    }

    /// Subgraph induced by the vertices satisfying `keep`, ids reassigned in order.
    pub fn induced(&self, keep: impl Fn(VertexId) -> bool) -> Result<MultiGraph, GraphError> {
        let mut b = GraphBuilder::new();
        let mut map = vec![None; self.vertex_count()];
        for u in self.vertices().filter(|u| keep(*u)) {
            map[u.0] = Some(b.add_vertex(self.label(u))?);
        }
        for e in &self.edges {
            if let (Some(a), Some(c)) = (map[e.ends.0 .0], map[e.ends.1 .0]) {
                b.add_edge_ids(e.label.as_deref(), a, c)?;
            }
        }
        Ok(b.build())
    }

    pub fn add_edges(&self, specs: &[EdgeSpec]) -> Result<MultiGraph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        for s in specs {
            b.add_edge(s.label.as_deref(), &s.ends.0, &s.ends.1)?;
        }
        Ok(b.build())
    }

    /// Renames every vertex and edge label through the given functions.
    pub fn relabel(
        &self,
        vertex: impl Fn(&str) -> String,
        edge: impl Fn(&str) -> String,
    ) -> Result<MultiGraph, GraphError> {
        let mut b = GraphBuilder::new();
        for l in &self.labels {
            b.add_vertex(&vertex(l))?;
        }
        for e in &self.edges {
            let label = e.label.as_deref().map(&edge);
            b.add_edge_ids(label.as_deref(), e.ends.0, e.ends.1)?;
        }
        Ok(b.build())
    }

    /// Appends `suffix` to every vertex and edge label.
    pub fn with_suffix(&self, suffix: &str) -> Result<MultiGraph, GraphError> {
        self.relabel(|l| format!("{l}{suffix}"), |l| format!("{l}{suffix}"))
    }

    pub fn rename_vertex(&self, from: &str, to: &str) -> Result<MultiGraph, GraphError> {
        self.vertex(from)?;
        self.relabel(
            |l| {
                if l == from {
                    to.to_owned()
                } else {
                    l.to_owned()
                }
            },
            str::to_owned,
        )
    }

    fn check_flow_ends(
        &self,
        sources: &BTreeSet<VertexId>,
        sink: VertexId,
    ) -> Result<(), GraphError> {
        if sources.is_empty() {
            return Err(GraphError::EmptySources);
        }
        self.check_vertex(sink)?;
        if sources.iter().any(|v| !self.contains_vertex(*v)) {
            return Err(GraphError::NotSubset);
        }
        if sources.contains(&sink) {
            return Err(GraphError::SinkInSources(self.label(sink).to_owned()));
        }
        Ok(())
    }

    /// Maximum number of edge-disjoint paths from `sources` to `sink`, which
    /// equals the minimum size of an edge cut separating them. Parallel edges
    /// count separately; loops are ignored.
    pub fn min_edge_cut(
        &self,
        sources: &BTreeSet<VertexId>,
        sink: VertexId,
    ) -> Result<usize, GraphError> {
        self.check_flow_ends(sources, sink)?;
        let n = self.vertex_count();
        let super_source = n;
        let mut net = FlowNetwork::new(n + 1);
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            net.add_undirected(e.ends.0 .0, e.ends.1 .0, 1);
        }
        for s in sources {
            net.add_arc(super_source, s.0, usize::MAX / 4);
        }
        Ok(net.max_flow(super_source, sink.0))
    }

    /// Maximum number of paths from `sources` to `sink` that share no vertex
    /// outside the source set and the sink (vertex-splitting reduction).
    pub fn max_vertex_disjoint_paths(
        &self,
        sources: &BTreeSet<VertexId>,
        sink: VertexId,
    ) -> Result<usize, GraphError> {
        self.check_flow_ends(sources, sink)?;
        let n = self.vertex_count();
        // node v splits into v_in = v and v_out = n + v
        let super_source = 2 * n;
        let big = usize::MAX / 4;
        let mut net = FlowNetwork::new(2 * n + 1);
        for v in self.vertices() {
            let cap = if sources.contains(&v) || v == sink {
                big
            } else {
                1
            };
            net.add_arc(v.0, n + v.0, cap);
        }
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            let (a, b) = (e.ends.0 .0, e.ends.1 .0);
            net.add_arc(n + a, b, 1);
            net.add_arc(n + b, a, 1);
        }
        for s in sources {
            net.add_arc(super_source, s.0, big);
        }
        Ok(net.max_flow(super_source, sink.0))
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self
                .labels
                .iter()
                .map(|l| VertexEntry { label: l.clone() })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeEntry {
                    label: e.label.clone(),
                    ends: [
                        self.labels[e.ends.0 .0].clone(),
                        self.labels[e.ends.1 .0].clone(),
                    ],
                })
                .collect(),
            boundary: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<MultiGraph, GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
        file.to_graph()
    }

    /// One node per vertex and one line per edge record.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", escape(name));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(l)));
        }
        for e in &self.edges {
            match &e.label {
                Some(l) => out.push_str(&format!(
                    "  n{} -- n{} [label=\"{}\"];\n",
                    e.ends.0 .0,
                    e.ends.1 .0,
                    escape(l)
                )),
                None => out.push_str(&format!("  n{} -- n{};\n", e.ends.0 .0, e.ends.1 .0)),
            }
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEntry {
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub ends: [String; 2],
}

/// On-disk graph format. Labels are the only identity across files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
    /// Designated boundary edge labels, present for fragments.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<String>>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<MultiGraph, GraphError> {
        let specs: Vec<EdgeSpec> = self
            .edges
            .iter()
            .map(|e| EdgeSpec::new(e.label.as_deref(), &e.ends[0], &e.ends[1]))
            .collect();
        let labels: Vec<&str> = self.vertices.iter().map(|v| v.label.as_str()).collect();
        build_graph(&labels, &specs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        build_graph(
            &["1", "2", "3", "4"],
            &[
                EdgeSpec::labeled("12", "1", "2"),
                EdgeSpec::labeled("13", "1", "3"),
                EdgeSpec::labeled("14", "1", "4"),
                EdgeSpec::labeled("23", "2", "3"),
                EdgeSpec::labeled("24", "2", "4"),
                EdgeSpec::labeled("34", "3", "4"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parallel_edges_and_loops() {
        let g = build_graph(
            &["a", "b"],
            &[
                EdgeSpec::labeled("e1", "a", "b"),
                EdgeSpec::labeled("e2", "a", "b"),
            ],
        )
        .unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());

        let l = build_graph(&["a"], &[EdgeSpec::labeled("l", "a", "a")]).unwrap();
        assert_eq!(l.degree(l.vertex("a").unwrap()).unwrap(), 2);
        assert!(l.link_edges(l.vertex("a").unwrap()).is_empty());
    }

    #[test]
    fn k4_is_cubic() {
        let g = k4();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
        assert!(g.is_cubic());
        assert!(g.is_simple());
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build_graph(&["a", "a"], &[]).unwrap_err(),
            GraphError::DuplicateVertexLabel("a".into())
        );
        assert_eq!(
            build_graph(&["a"], &[EdgeSpec::new(None, "a", "b")]).unwrap_err(),
            GraphError::UnknownVertex("b".into())
        );
        assert!(matches!(
            build_graph(
                &["a", "b"],
                &[
                    EdgeSpec::labeled("e", "a", "b"),
                    EdgeSpec::labeled("e", "a", "b")
                ]
            ),
            Err(GraphError::DuplicateEdgeLabel(_))
        ));
        let g = k4();
        assert!(g.degree(VertexId(9)).is_err());
    }

    #[test]
    fn cut_of_everything_is_empty() {
        let g = k4();
        let all: BTreeSet<_> = g.vertices().collect();
        assert!(g.edge_cut(&all).unwrap().is_empty());
        let bad: BTreeSet<_> = [VertexId(7)].into_iter().collect();
        assert_eq!(g.edge_cut(&bad).unwrap_err(), GraphError::NotSubset);
    }

    #[test]
    fn contract_path_keeps_single_edge() {
        let g = build_graph(
            &["a", "b", "c"],
            &[
                EdgeSpec::labeled("ab", "a", "b"),
                EdgeSpec::labeled("bc", "b", "c"),
            ],
        )
        .unwrap();
        let keep = g.vertex_set(&["a"]).unwrap();
        let h = g.contract_to_dummy(&keep, "d", false).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        let e = h.edge(h.edge_by_label("ab").unwrap());
        assert_eq!(h.label(e.ends.1), "d");
    }

    #[test]
    fn contract_errors() {
        let g = k4();
        assert_eq!(
            g.contract_to_dummy(&BTreeSet::new(), "d", false)
                .unwrap_err(),
            GraphError::InvalidKeep
        );
        let all: BTreeSet<_> = g.vertices().collect();
        assert_eq!(
            g.contract_to_dummy(&all, "d", false).unwrap_err(),
            GraphError::InvalidKeep
        );
        // keeping {1, 2} sends two edges from 1 into the dummy
        let keep = g.vertex_set(&["1", "2"]).unwrap();
        assert!(g.contract_to_dummy(&keep, "d", false).is_ok());
        assert!(matches!(
            g.contract_to_dummy(&keep, "d", true),
            Err(GraphError::SimplifyCollision(_))
        ));
    }

    #[test]
    fn quotient_glues_paths() {
        let g = build_graph(
            &["a", "b", "c", "d"],
            &[
                EdgeSpec::labeled("ab", "a", "b"),
                EdgeSpec::labeled("cd", "c", "d"),
            ],
        )
        .unwrap();
        let q = g.quotient(&[("b", "c")]).unwrap();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.edge_count(), 2);
        let b = q.vertex("b").unwrap();
        assert_eq!(q.degree(b).unwrap(), 2);
        assert!(q.vertex("c").is_err());

        let same = g.quotient::<&str>(&[]).unwrap();
        assert_eq!(same, g);
        assert!(g.quotient(&[("b", "zz")]).is_err());
    }

    #[test]
    fn union_delete_add() {
        let g = k4();
        let u = g.with_suffix("'").unwrap().disjoint_union(&g).unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (8, 12));
        assert!(g.disjoint_union(&g).is_err());

        let d = g.delete_vertex(g.vertex("4").unwrap()).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (3, 3));

        let added = d.add_edges(&[EdgeSpec::labeled("x", "1", "2")]).unwrap();
        assert_eq!(added.edge_count(), 4);
        assert!(d.add_edges(&[EdgeSpec::labeled("x", "1", "9")]).is_err());
    }

    #[test]
    fn near_cubic_checks() {
        let g = k4();
        let minus = g
            .induced(|_| true)
            .unwrap()
            .relabel(str::to_owned, str::to_owned)
            .unwrap();
        assert!(minus.is_cubic());
        // K4 minus an edge has two degree-2 vertices
        let specs: Vec<EdgeSpec> = g
            .edges()
            .iter()
            .skip(1)
            .map(|e| EdgeSpec::new(None, g.label(e.ends.0), g.label(e.ends.1)))
            .collect();
        let k4e = build_graph(&["1", "2", "3", "4"], &specs).unwrap();
        assert!(!k4e.is_cubic());
        assert!(!k4e.is_nearly_cubic());
    }

    #[test]
    fn flows() {
        let g = build_graph(
            &["a", "b"],
            &[EdgeSpec::new(None, "a", "b"), EdgeSpec::new(None, "a", "b")],
        )
        .unwrap();
        let s = g.vertex_set(&["a"]).unwrap();
        assert_eq!(g.min_edge_cut(&s, g.vertex("b").unwrap()).unwrap(), 2);

        let star = build_graph(
            &["c", "x", "y", "z"],
            &[
                EdgeSpec::new(None, "c", "x"),
                EdgeSpec::new(None, "c", "y"),
                EdgeSpec::new(None, "c", "z"),
            ],
        )
        .unwrap();
        let leaves = star.vertex_set(&["x", "y", "z"]).unwrap();
        let c = star.vertex("c").unwrap();
        assert_eq!(star.max_vertex_disjoint_paths(&leaves, c).unwrap(), 3);
        assert_eq!(star.min_edge_cut(&leaves, c).unwrap(), 3);

        let bad = star.vertex_set(&["c"]).unwrap();
        assert!(matches!(
            star.min_edge_cut(&bad, c),
            Err(GraphError::SinkInSources(_))
        ));
        assert_eq!(
            star.min_edge_cut(&BTreeSet::new(), c).unwrap_err(),
            GraphError::EmptySources
        );
    }

    #[test]
    fn vertex_disjoint_below_edge_disjoint() {
        // two triangles sharing vertex m: 2 edge-disjoint but 1 vertex-disjoint path
        let g = build_graph(
            &["s", "a", "m", "b", "t"],
            &[
                EdgeSpec::new(None, "s", "a"),
                EdgeSpec::new(None, "s", "m"),
                EdgeSpec::new(None, "a", "m"),
                EdgeSpec::new(None, "m", "b"),
                EdgeSpec::new(None, "m", "t"),
                EdgeSpec::new(None, "b", "t"),
            ],
        )
        .unwrap();
        let s = g.vertex_set(&["s"]).unwrap();
        let t = g.vertex("t").unwrap();
        assert_eq!(g.min_edge_cut(&s, t).unwrap(), 2);
        assert_eq!(g.max_vertex_disjoint_paths(&s, t).unwrap(), 1);
    }

    #[test]
    fn json_and_dot() {
        let g = k4();
        let back = MultiGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        let dot = g.to_dot("k4");
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(MultiGraph::from_json("{\"vertices\":1}").is_err());
    }
}
