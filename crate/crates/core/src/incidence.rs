//! Hamilton incidence multigraphs: how Hamilton cycles pair up the edges at
//! two anchor vertices.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{escape, EdgeId, MultiGraph, VertexId};
use crate::hamilton::{enumerate_hamilton_cycles, HamiltonCycle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("anchors must be distinct")]
    SameAnchor,
    #[error("anchor `{0}` has fewer than two non-loop edges")]
    AnchorDegree(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("table shape does not match the state lists")]
    Shape,
}

/// An unordered pair of distinct edges at one anchor, stored with `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairState {
    pub first: EdgeId,
    pub second: EdgeId,
}

impl PairState {
    pub fn new(a: EdgeId, b: EdgeId) -> Self {
        PairState {
            first: a.min(b),
            second: a.max(b),
        }
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.first == e || self.second == e
    }

    /// Shared edge of two distinct states, if any.
    pub fn shared(&self, other: &PairState) -> Option<EdgeId> {
        [self.first, self.second]
            .into_iter()
            .find(|e| other.contains(*e))
    }

    pub fn render(&self, g: &MultiGraph) -> String {
        format!(
            "{{{},{}}}",
            g.edge_name(self.first),
            g.edge_name(self.second)
        )
    }
}

/// All 2-subsets of `E(v)` in edge-id order.
pub fn pair_states(g: &MultiGraph, v: VertexId) -> Vec<PairState> {
    let mut edges = g.link_edges(v);
    edges.sort();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            out.push(PairState::new(edges[i], edges[j]));
        }
    }
    out
}

/// Dense multiplicity table between the pair states at two anchors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMultigraph {
    pub left_anchor: VertexId,
    pub right_anchor: VertexId,
    pub left_states: Vec<PairState>,
    pub right_states: Vec<PairState>,
    /// `multiplicity[i][j]` counts Hamilton cycles through `left_states[i] ∪ right_states[j]`.
    pub multiplicity: Vec<Vec<u64>>,
}

impl IncidenceMultigraph {
    /// Wraps an explicit table, e.g. for synthetic inputs.
    pub fn from_table(
        left_anchor: VertexId,
        right_anchor: VertexId,
        left_states: Vec<PairState>,
        right_states: Vec<PairState>,
        multiplicity: Vec<Vec<u64>>,
    ) -> Result<Self, IncidenceError> {
        if multiplicity.len() != left_states.len()
            || multiplicity.iter().any(|r| r.len() != right_states.len())
        {
            return Err(IncidenceError::Shape);
        }
        Ok(IncidenceMultigraph {
            left_anchor,
            right_anchor,
            left_states,
            right_states,
            multiplicity,
        })
    }

    pub fn left_degree(&self, i: usize) -> u64 {
        self.multiplicity[i].iter().sum()
    }

    pub fn right_degree(&self, j: usize) -> u64 {
        self.multiplicity.iter().map(|r| r[j]).sum()
    }

    pub fn left_degrees(&self) -> Vec<u64> {
        (0..self.left_states.len())
            .map(|i| self.left_degree(i))
            .collect()
    }

    pub fn right_degrees(&self) -> Vec<u64> {
        (0..self.right_states.len())
            .map(|j| self.right_degree(j))
            .collect()
    }

    /// Number of edges of the multigraph, i.e. the sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.multiplicity.iter().flatten().sum()
    }

    pub fn left_index(&self, p: &PairState) -> Option<usize> {
        self.left_states.iter().position(|s| s == p)
    }

    pub fn right_index(&self, q: &PairState) -> Option<usize> {
        self.right_states.iter().position(|s| s == q)
    }

    pub fn render_text(&self, g: &MultiGraph) -> String {
        let cols: Vec<String> = self.right_states.iter().map(|s| s.render(g)).collect();
        let rows: Vec<String> = self.left_states.iter().map(|s| s.render(g)).collect();
        let head = rows.iter().map(String::len).max().unwrap_or(0);
        let width = cols.iter().map(String::len).max().unwrap_or(1).max(3);
        let mut out = format!(
            "H({}, {})\n{:head$}",
            g.label(self.left_anchor),
            g.label(self.right_anchor),
            ""
        );
        for c in &cols {
            out.push_str(&format!(" {c:>width$}"));
        }
        out.push_str(&format!(" {:>5}\n", "deg"));
        for (i, r) in rows.iter().enumerate() {
            out.push_str(&format!("{r:head$}"));
            for m in &self.multiplicity[i] {
                out.push_str(&format!(" {m:>width$}"));
            }
            out.push_str(&format!(" {:>5}\n", self.left_degree(i)));
        }
        out.push_str(&format!("{:head$}", "deg"));
        for j in 0..cols.len() {
            out.push_str(&format!(" {:>width$}", self.right_degree(j)));
        }
        out.push('\n');
        out
    }

    /// Bipartite DOT drawing with one line per unit of multiplicity.
    pub fn to_dot(&self, g: &MultiGraph) -> String {
        let mut out = String::from("graph incidence {\n  rankdir=LR;\n");
        for (i, s) in self.left_states.iter().enumerate() {
            out.push_str(&format!("  l{i} [label=\"{}\"];\n", escape(&s.render(g))));
        }
        for (j, s) in self.right_states.iter().enumerate() {
            out.push_str(&format!("  r{j} [label=\"{}\"];\n", escape(&s.render(g))));
        }
        for (i, row) in self.multiplicity.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for _ in 0..m {
                    out.push_str(&format!("  l{i} -- r{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `H(G, v, w)` from one enumeration pass: every Hamilton cycle uses
/// exactly one pair at each anchor.
pub fn incidence_multigraph(
    g: &MultiGraph,
    v: VertexId,
    w: VertexId,
) -> Result<IncidenceMultigraph, IncidenceError> {
    let cycles = enumerate_hamilton_cycles(g);
    incidence_from_cycles(g, v, w, &cycles)
}

pub fn incidence_from_cycles(
    g: &MultiGraph,
    v: VertexId,
    w: VertexId,
    cycles: &[HamiltonCycle],
) -> Result<IncidenceMultigraph, IncidenceError> {
    for a in [v, w] {
        if !g.contains_vertex(a) {
            return Err(IncidenceError::UnknownVertex(a));
        }
    }
    if v == w {
        return Err(IncidenceError::SameAnchor);
    }
    for a in [v, w] {
        if g.link_edges(a).len() < 2 {
            return Err(IncidenceError::AnchorDegree(g.label(a).to_owned()));
        }
    }
    let left_states = pair_states(g, v);
    let right_states = pair_states(g, w);
    let mut multiplicity = vec![vec![0u64; right_states.len()]; left_states.len()];
    for c in cycles {
        let at_v = c.edges_at(g, v);
        let at_w = c.edges_at(g, w);
        let p = PairState::new(at_v[0], at_v[1]);
        let q = PairState::new(at_w[0], at_w[1]);
        let i = left_states
            .iter()
            .position(|s| *s == p)
            .expect("state at v");
        let j = right_states
            .iter()
            .position(|s| *s == q)
            .expect("state at w");
        multiplicity[i][j] += 1;
    }
    Ok(IncidenceMultigraph {
        left_anchor: v,
        right_anchor: w,
        left_states,
        right_states,
        multiplicity,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSum {
    pub side: Side,
    pub p: usize,
    pub q: usize,
    pub sum: u64,
    pub even: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSumReport {
    pub sums: Vec<PairSum>,
    pub all_even: bool,
}

/// For every two distinct states on the same side, whether `d(p) + d(q)` is even.
pub fn check_pair_sum_even(h: &IncidenceMultigraph) -> PairSumReport {
    let mut sums = Vec::new();
    for (side, degrees) in [
        (Side::Left, h.left_degrees()),
        (Side::Right, h.right_degrees()),
    ] {
        for p in 0..degrees.len() {
            for q in p + 1..degrees.len() {
                let sum = degrees[p] + degrees[q];
                sums.push(PairSum {
                    side,
                    p,
                    q,
                    sum,
                    even: sum % 2 == 0,
                });
            }
        }
    }
    let all_even = sums.iter().all(|s| s.even);
    PairSumReport { sums, all_even }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformParityReport {
    pub left_degrees: Vec<u64>,
    pub right_degrees: Vec<u64>,
    /// Common parity of all degrees, `None` when they disagree.
    pub parity: Option<Parity>,
}

impl UniformParityReport {
    pub fn uniform(&self) -> bool {
        self.parity.is_some()
    }
}

pub fn check_uniform_parity(h: &IncidenceMultigraph) -> UniformParityReport {
    let left_degrees = h.left_degrees();
    let right_degrees = h.right_degrees();
    let mut all = left_degrees.iter().chain(&right_degrees).map(|d| d % 2);
    let parity = match all.next() {
        None => Some(Parity::Even),
        Some(first) => {
            if all.all(|d| d == first) {
                Some(if first == 0 {
                    Parity::Even
                } else {
                    Parity::Odd
                })
            } else {
                None
            }
        }
    };
    UniformParityReport {
        left_degrees,
        right_degrees,
        parity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeSpec};
    use crate::hamilton::count_through;

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
    fn k4_table_matches_filtered_counts() {
        let g = k4();
        let (v, w) = (g.vertex("1").unwrap(), g.vertex("2").unwrap());
        let h = incidence_multigraph(&g, v, w).unwrap();
        assert_eq!(h.left_states.len(), 3);
        assert_eq!(h.right_states.len(), 3);
        assert_eq!(h.total(), 3);
        for (i, p) in h.left_states.iter().enumerate() {
            for (j, q) in h.right_states.iter().enumerate() {
                let mut req = vec![p.first, p.second, q.first, q.second];
                req.sort();
                req.dedup();
                assert_eq!(h.multiplicity[i][j], count_through(&g, &req, &[]).unwrap());
            }
        }
        assert!(check_pair_sum_even(&h).all_even);
        assert!(check_uniform_parity(&h).uniform());
    }

    #[test]
    fn errors() {
        let g = k4();
        let v = g.vertex("1").unwrap();
        assert_eq!(
            incidence_multigraph(&g, v, v).unwrap_err(),
            IncidenceError::SameAnchor
        );
        let path = build_graph(
            &["a", "b", "c"],
            &[EdgeSpec::new(None, "a", "b"), EdgeSpec::new(None, "b", "c")],
        )
        .unwrap();
        assert!(matches!(
            incidence_multigraph(&path, path.vertex("a").unwrap(), path.vertex("b").unwrap()),
            Err(IncidenceError::AnchorDegree(_))
        ));
    }

    #[test]
    fn zero_table_is_trivially_even() {
        let s = vec![
            PairState::new(EdgeId(0), EdgeId(1)),
            PairState::new(EdgeId(0), EdgeId(2)),
            PairState::new(EdgeId(1), EdgeId(2)),
        ];
        let h = IncidenceMultigraph::from_table(
            VertexId(0),
            VertexId(1),
            s.clone(),
            s,
            vec![vec![0; 3]; 3],
        )
        .unwrap();
        assert!(check_pair_sum_even(&h).all_even);
        assert_eq!(check_uniform_parity(&h).parity, Some(Parity::Even));
    }

    #[test]
    fn single_entry_is_mixed_parity() {
        let s = vec![
            PairState::new(EdgeId(0), EdgeId(1)),
            PairState::new(EdgeId(0), EdgeId(2)),
            PairState::new(EdgeId(1), EdgeId(2)),
        ];
        let mut table = vec![vec![0; 3]; 3];
        table[0][0] = 1;
        let h =
            IncidenceMultigraph::from_table(VertexId(0), VertexId(1), s.clone(), s, table).unwrap();
        assert_eq!(check_uniform_parity(&h).parity, None);
        assert!(!check_pair_sum_even(&h).all_even);
        assert!(IncidenceMultigraph::from_table(
            VertexId(0),
            VertexId(1),
            vec![],
            vec![],
            vec![vec![1]]
        )
        .is_err());
    }

    #[test]
    fn degree_two_anchor_gives_one_row() {
        // square a-b-c-d plus chord b-d: a has degree 2
        let g = build_graph(
            &["a", "b", "c", "d"],
            &[
                EdgeSpec::new(None, "a", "b"),
                EdgeSpec::new(None, "b", "c"),
                EdgeSpec::new(None, "c", "d"),
                EdgeSpec::new(None, "d", "a"),
                EdgeSpec::new(None, "b", "d"),
            ],
        )
        .unwrap();
        let h = incidence_multigraph(&g, g.vertex("a").unwrap(), g.vertex("b").unwrap()).unwrap();
        assert_eq!(h.left_states.len(), 1);
        assert_eq!(h.right_states.len(), 3);
        assert_eq!(h.total(), 1);
        assert!(h.render_text(&g).contains("deg"));
        assert_eq!(h.to_dot(&g).matches(" -- ").count(), 1);
    }
}
