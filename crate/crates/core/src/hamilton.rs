//! Exact Hamilton-cycle enumeration and the finite parity machinery built on it.
//!
//! The enumerator is a plain backtracking search over edges with degree-2
//! propagation and early rejection of short cycles. It is deliberately kept
//! free of any transfer shortcut so it can serve as the oracle for the chain
//! analysis.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HamiltonError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is both required and forbidden")]
    ConflictingConstraints(EdgeId),
    #[error("not a Hamilton cycle: {0}")]
    InvalidCycle(String),
    #[error("edge {0} is not on the given cycle")]
    EdgeNotInCycle(EdgeId),
    #[error("vertex `{0}` has even degree")]
    EvenDegree(String),
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph is not nearly cubic")]
    NotNearlyCubic,
    #[error("graph is not Hamiltonian")]
    NotHamiltonian,
    #[error("nearly cubic graph has a unique Hamilton cycle")]
    UniqueCycle,
    #[error("exchange walk stalled at a path with free end `{0}`")]
    WalkStalled(String),
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

/// A Hamilton cycle identified by its edge set, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamiltonCycle {
    edges: Vec<EdgeId>,
}

impl HamiltonCycle {
    /// Validates `edges` against `g`.
    pub fn new(g: &MultiGraph, edges: &[EdgeId]) -> Result<Self, HamiltonError> {
        check_hamilton_cycle(g, edges)?;
        let mut edges = edges.to_vec();
        edges.sort();
        Ok(HamiltonCycle { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge names sorted as strings; the serialized form of a cycle.
    pub fn labels(&self, g: &MultiGraph) -> Vec<String> {
        let mut out: Vec<String> = self.edges.iter().map(|e| g.edge_name(*e)).collect();
        out.sort();
        out
    }

    /// The two cycle edges at `v`, in id order.
    pub fn edges_at(&self, g: &MultiGraph, v: VertexId) -> Vec<EdgeId> {
        self.edges
            .iter()
            .copied()
            .filter(|e| g.edge(*e).touches(v))
            .collect()
    }

    /// Vertex order starting at `start`, leaving along the smaller edge id.
    pub fn vertex_sequence(&self, g: &MultiGraph, start: VertexId) -> Vec<VertexId> {
        let n = self.edges.len();
        let mut seq = Vec::with_capacity(n);
        let mut prev_edge = None;
        let mut v = start;
        for _ in 0..n {
            seq.push(v);
            let next = self
                .edges
                .iter()
                .copied()
                .find(|e| g.edge(*e).touches(v) && Some(*e) != prev_edge)
                .expect("cycle edge at every vertex");
            v = g.edge(next).other(v);
            prev_edge = Some(next);
        }
        seq
    }
}

/// Checks that `edges` form a spanning connected 2-regular subgraph without loops.
pub fn check_hamilton_cycle(g: &MultiGraph, edges: &[EdgeId]) -> Result<(), HamiltonError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(HamiltonError::InvalidCycle(
            "fewer than two vertices".into(),
        ));
    }
    let distinct: BTreeSet<EdgeId> = edges.iter().copied().collect();
    if distinct.len() != edges.len() {
        return Err(HamiltonError::InvalidCycle("repeated edge".into()));
    }
    if edges.len() != n {
        return Err(HamiltonError::InvalidCycle(format!(
            "{} edges on {} vertices",
            edges.len(),
            n
        )));
    }
    let mut deg = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in edges {
        if e.0 >= g.edge_count() {
            return Err(HamiltonError::UnknownEdge(e));
        }
        let rec = g.edge(e);
        if rec.is_loop() {
            return Err(HamiltonError::InvalidCycle(format!(
                "loop {}",
                g.edge_name(e)
            )));
        }
        let (a, b) = (rec.ends.0 .0, rec.ends.1 .0);
        deg[a] += 1;
        deg[b] += 1;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    if let Some(v) = (0..n).find(|&v| deg[v] != 2) {
        return Err(HamiltonError::InvalidCycle(format!(
            "vertex `{}` has cycle degree {}",
            g.label(VertexId(v)),
            deg[v]
        )));
    }
    let root = find(&mut parent, 0);
    if (0..n).any(|v| find(&mut parent, v) != root) {
        return Err(HamiltonError::InvalidCycle("disconnected".into()));
    }
    Ok(())
}

const UNKNOWN: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

enum Undo {
    Status(usize),
    End(usize, usize),
}

/// Backtracking state. `end[v]` is the opposite endpoint of the path fragment
/// ending at `v` (only meaningful while `v` is a fragment end or isolated).
struct Search<'g> {
    g: &'g MultiGraph,
    n: usize,
    status: Vec<u8>,
    in_deg: Vec<u32>,
    free_deg: Vec<u32>,
    end: Vec<usize>,
    in_count: usize,
    trail: Vec<Undo>,
    queue: Vec<usize>,
}

type Decision = (usize, bool);

impl<'g> Search<'g> {
    fn new(g: &'g MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut s = Search {
            g,
            n,
            status: vec![UNKNOWN; g.edge_count()],
            in_deg: vec![0; n],
            free_deg: vec![0; n],
            end: (0..n).collect(),
            in_count: 0,
            trail: Vec::new(),
            queue: Vec::new(),
        };
        for e in g.edges() {
            if e.is_loop() {
                s.status[e.id.0] = OUT;
            } else {
                s.free_deg[e.ends.0 .0] += 1;
                s.free_deg[e.ends.1 .0] += 1;
            }
        }
        s
    }

    fn ends(&self, e: usize) -> (usize, usize) {
        let r = self.g.edges()[e].ends;
        (r.0 .0, r.1 .0)
    }

    fn set_in(&mut self, e: usize) -> bool {
        if self.status[e] != UNKNOWN {
            return self.status[e] == IN;
        }
        let (u, v) = self.ends(e);
        if self.in_deg[u] >= 2 || self.in_deg[v] >= 2 {
            return false;
        }
        let closing = self.end[u] == v && self.in_deg[u] > 0;
        if closing && self.in_count + 1 != self.n {
            return false;
        }
        self.status[e] = IN;
        self.trail.push(Undo::Status(e));
        self.in_deg[u] += 1;
        self.in_deg[v] += 1;
        self.free_deg[u] -= 1;
        self.free_deg[v] -= 1;
        self.in_count += 1;
        if !closing {
            let (a, b) = (self.end[u], self.end[v]);
            self.trail.push(Undo::End(a, self.end[a]));
            self.trail.push(Undo::End(b, self.end[b]));
            self.end[a] = b;
            self.end[b] = a;
            self.queue.push(a);
            self.queue.push(b);
        }
        self.queue.push(u);
        self.queue.push(v);
        true
    }

    fn set_out(&mut self, e: usize) -> bool {
        if self.status[e] != UNKNOWN {
            return self.status[e] == OUT;
        }
        let (u, v) = self.ends(e);
        self.status[e] = OUT;
        self.trail.push(Undo::Status(e));
        self.free_deg[u] -= 1;
        self.free_deg[v] -= 1;
        self.queue.push(u);
        self.queue.push(v);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail above mark") {
                Undo::Status(e) => {
                    let (u, v) = self.ends(e);
                    if self.status[e] == IN {
                        self.in_deg[u] -= 1;
                        self.in_deg[v] -= 1;
                        self.in_count -= 1;
                    }
                    self.free_deg[u] += 1;
                    self.free_deg[v] += 1;
                    self.status[e] = UNKNOWN;
                }
                Undo::End(v, old) => self.end[v] = old,
            }
        }
        self.queue.clear();
    }

    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            let need = 2 - self.in_deg[v];
            let free = self.free_deg[v];
            if free < need {
                self.queue.clear();
                return false;
            }
            if free == 0 {
                continue;
            }
            let g = self.g;
            if need == 0 {
                for &e in g.incident(VertexId(v)) {
                    if self.status[e.0] == UNKNOWN && !self.set_out(e.0) {
                        self.queue.clear();
                        return false;
                    }
                }
            } else if free == need {
                for &e in g.incident(VertexId(v)) {
                    if self.status[e.0] == UNKNOWN && !self.set_in(e.0) {
                        self.queue.clear();
                        return false;
                    }
                }
            } else if need == 1 && self.in_count + 1 < self.n {
                // an edge joining the two ends of one fragment would close it early
                let other = self.end[v];
                for &e in g.incident(VertexId(v)) {
                    if self.status[e.0] == UNKNOWN
                        && g.edge(e).other(VertexId(v)).0 == other
                        && !self.set_out(e.0)
                    {
                        self.queue.clear();
                        return false;
                    }
                }
            }
        }
        true
    }

    fn apply(&mut self, e: usize, take: bool) -> bool {
        let ok = if take {
            self.set_in(e)
        } else {
            self.set_out(e)
        };
        ok && self.propagate()
    }

    fn seed(&mut self, decisions: &[Decision]) -> bool {
        self.queue.extend(0..self.n);
        if !self.propagate() {
            return false;
        }
        decisions.iter().all(|&(e, take)| self.apply(e, take))
    }

    /// Next edge to branch on: the first open edge at the most constrained vertex.
    fn branch_edge(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize)> = None;
        for v in 0..self.n {
            if self.in_deg[v] >= 2 {
                continue;
            }
            let slack = self.free_deg[v].saturating_sub(2 - self.in_deg[v]);
            let key = (slack, if self.in_deg[v] == 1 { 0 } else { 1 }, v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, _, v) = best?;
        self.g
            .incident(VertexId(v))
            .iter()
            .map(|e| e.0)
            .find(|&e| self.status[e] == UNKNOWN)
    }

    fn collect(&self) -> HamiltonCycle {
        let edges = (0..self.status.len())
            .filter(|&e| self.status[e] == IN)
            .map(EdgeId)
            .collect();
        HamiltonCycle { edges }
    }

    fn run(&mut self, out: &mut Vec<HamiltonCycle>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if self.in_count == self.n {
            out.push(self.collect());
            return;
        }
        let Some(e) = self.branch_edge() else {
            return;
        };
        for take in [true, false] {
            let mark = self.trail.len();
            if self.apply(e, take) {
                self.run(out, limit);
            }
            self.undo_to(mark);
            if out.len() >= limit {
                return;
            }
        }
    }

    /// Explores `depth` branching levels and returns the surviving decision prefixes.
    fn split(&mut self, depth: usize, prefix: &mut Vec<Decision>, out: &mut Vec<Vec<Decision>>) {
        if depth == 0 || self.in_count == self.n {
            out.push(prefix.clone());
            return;
        }
        let Some(e) = self.branch_edge() else {
            return;
        };
        for take in [true, false] {
            let mark = self.trail.len();
            if self.apply(e, take) {
                prefix.push((e, take));
                self.split(depth - 1, prefix, out);
                prefix.pop();
            }
            self.undo_to(mark);
        }
    }
}

/// Constraints for a filtered enumeration.
#[derive(Debug, Clone, Default)]
pub struct CycleFilter {
    pub require: Vec<EdgeId>,
    pub forbid: Vec<EdgeId>,
    pub limit: Option<usize>,
}

impl CycleFilter {
    fn decisions(&self, g: &MultiGraph) -> Result<Vec<Decision>, HamiltonError> {
        for &e in self.require.iter().chain(&self.forbid) {
            if e.0 >= g.edge_count() {
                return Err(HamiltonError::UnknownEdge(e));
            }
        }
        if let Some(&e) = self.require.iter().find(|e| self.forbid.contains(e)) {
            return Err(HamiltonError::ConflictingConstraints(e));
        }
        Ok(self
            .require
            .iter()
            .map(|e| (e.0, true))
            .chain(self.forbid.iter().map(|e| (e.0, false)))
            .collect())
    }
}

/// Hamilton cycles matching `filter`, sorted lexicographically by edge ids.
pub fn enumerate_filtered(
    g: &MultiGraph,
    filter: &CycleFilter,
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    let decisions = filter.decisions(g)?;
    let limit = filter.limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if g.vertex_count() < 2 || limit == 0 {
        return Ok(out);
    }
    let mut s = Search::new(g);
    if s.seed(&decisions) {
        s.run(&mut out, limit);
    }
    out.sort();
    Ok(out)
}

/// All Hamilton cycles of `g`, each once, in lexicographic order of their
/// sorted edge ids.
pub fn enumerate_hamilton_cycles(g: &MultiGraph) -> Vec<HamiltonCycle> {
    enumerate_filtered(g, &CycleFilter::default()).expect("unfiltered enumeration")
}

/// Same output as [`enumerate_hamilton_cycles`], with the search tree split
/// across `jobs` worker threads.
pub fn enumerate_hamilton_cycles_parallel(
    g: &MultiGraph,
    jobs: usize,
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    if jobs <= 1 || g.vertex_count() < 2 {
        return Ok(enumerate_hamilton_cycles(g));
    }
    let mut root = Search::new(g);
    let mut prefixes = Vec::new();
    if root.seed(&[]) {
        let depth = (usize::BITS - (jobs * 8).leading_zeros()) as usize;
        root.split(depth, &mut Vec::new(), &mut prefixes);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| HamiltonError::Pool(e.to_string()))?;
    let mut out: Vec<HamiltonCycle> = pool.install(|| {
        prefixes
            .par_iter()
            .flat_map_iter(|prefix| {
                let mut s = Search::new(g);
                let mut found = Vec::new();
                if s.seed(prefix) {
                    s.run(&mut found, usize::MAX);
                }
                found
            })
            .collect()
    });
    out.sort();
    Ok(out)
}

pub fn first_hamilton_cycle(g: &MultiGraph) -> Option<HamiltonCycle> {
    let filter = CycleFilter {
        limit: Some(1),
        ..CycleFilter::default()
    };
    enumerate_filtered(g, &filter)
        .expect("unfiltered enumeration")
        .into_iter()
        .next()
}

/// Hamilton cycles containing every edge of `require` and none of `forbid`.
pub fn cycles_through(
    g: &MultiGraph,
    require: &[EdgeId],
    forbid: &[EdgeId],
) -> Result<Vec<HamiltonCycle>, HamiltonError> {
    enumerate_filtered(
        g,
        &CycleFilter {
            require: require.to_vec(),
            forbid: forbid.to_vec(),
            limit: None,
        },
    )
}

pub fn count_through(
    g: &MultiGraph,
    require: &[EdgeId],
    forbid: &[EdgeId],
) -> Result<u64, HamiltonError> {
    Ok(cycles_through(g, require, forbid)?.len() as u64)
}

/// Finds a second Hamilton cycle through `e` by the lollipop exchange walk.
///
/// The walk anchors `e = xy` at `y` and drops `y`'s other cycle edge, giving
/// a Hamilton path from the fixed end `y`. Each step adds a non-path edge at
/// the free end and removes the path edge that breaks the resulting cycle.
/// When every degree is odd, the paths that close to a Hamilton cycle through
/// `e` are exactly the odd-degree states of this exchange graph, so a trail
/// that never reuses a move ends at a second such path. Among open moves the
/// smaller edge id is taken first.
pub fn second_cycle_lollipop(
    g: &MultiGraph,
    cycle: &HamiltonCycle,
    e: EdgeId,
) -> Result<HamiltonCycle, HamiltonError> {
    if e.0 >= g.edge_count() {
        return Err(HamiltonError::UnknownEdge(e));
    }
    if !g.is_simple() {
        return Err(HamiltonError::NotSimple);
    }
    if let Some(v) = g
        .vertices()
        .find(|v| g.degree_unchecked(*v).is_multiple_of(2))
    {
        return Err(HamiltonError::EvenDegree(g.label(v).to_owned()));
    }
    check_hamilton_cycle(g, cycle.edges())?;
    if !cycle.contains(e) {
        return Err(HamiltonError::EdgeNotInCycle(e));
    }

    let n = g.vertex_count();
    let (x, y) = g.edge(e).ends;
    // walk the cycle from y through x; the last vertex is y's other neighbour
    let mut path = Vec::with_capacity(n);
    path.push(y);
    let mut prev_edge = e;
    let mut cur = x;
    while cur != y {
        path.push(cur);
        let next = cycle
            .edges()
            .iter()
            .copied()
            .find(|f| *f != prev_edge && g.edge(*f).touches(cur))
            .expect("cycle edge");
        prev_edge = next;
        cur = g.edge(next).other(cur);
    }
    debug_assert_eq!(path.len(), n);

    let start = path.clone();
    let mut used: HashSet<(Vec<VertexId>, Vec<VertexId>)> = HashSet::new();
    let mut pos = vec![0usize; n];
    let steps_cap = 1usize << 40;
    for _ in 0..steps_cap {
        for (i, v) in path.iter().enumerate() {
            pos[v.0] = i;
        }
        let free = *path.last().expect("nonempty path");
        let before = path[n - 2];
        let mut incident: Vec<EdgeId> = g.incident(free).to_vec();
        incident.sort();
        if path != start {
            if let Some(close) = incident.iter().find(|f| g.edge(**f).other(free) == y) {
                let mut edges: Vec<EdgeId> = path
                    .windows(2)
                    .map(|w| edge_between(g, w[0], w[1]))
                    .collect();
                edges.push(*close);
                return HamiltonCycle::new(g, &edges);
            }
        }
        let mut moved = false;
        for f in incident {
            let u = g.edge(f).other(free);
            if u == y || u == before {
                continue;
            }
            let i = pos[u.0];
            let mut next = path.clone();
            next[i + 1..].reverse();
            let key = if path < next {
                (path.clone(), next.clone())
            } else {
                (next.clone(), path.clone())
            };
            if used.insert(key) {
                path = next;
                moved = true;
                break;
            }
        }
        if !moved {
            return Err(HamiltonError::WalkStalled(g.label(free).to_owned()));
        }
    }
    Err(HamiltonError::WalkStalled(
        g.label(*path.last().unwrap()).to_owned(),
    ))
}

fn edge_between(g: &MultiGraph, a: VertexId, b: VertexId) -> EdgeId {
    g.incident(a)
        .iter()
        .copied()
        .find(|e| g.edge(*e).other(a) == b)
        .expect("consecutive path vertices are adjacent")
}

/// Two distinct Hamilton cycles of a nearly cubic Hamiltonian graph, found by
/// enumeration.
pub fn second_cycle_nearly_cubic(
    g: &MultiGraph,
) -> Result<(HamiltonCycle, HamiltonCycle), HamiltonError> {
    if !g.is_nearly_cubic() {
        return Err(HamiltonError::NotNearlyCubic);
    }
    let found = enumerate_filtered(
        g,
        &CycleFilter {
            limit: Some(2),
            ..CycleFilter::default()
        },
    )?;
    let mut it = found.into_iter();
    match (it.next(), it.next()) {
        (None, _) => Err(HamiltonError::NotHamiltonian),
        (Some(_), None) => Err(HamiltonError::UniqueCycle),
        (Some(a), Some(b)) => Ok((a, b)),
    }
}

/// Per-edge Hamilton-cycle membership counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeParityReport {
    /// Indexed by edge id.
    pub counts: Vec<u64>,
    pub total: u64,
    pub vertex_count: usize,
    pub all_degrees_odd: bool,
}

impl EdgeParityReport {
    /// Edges with an odd count in a graph whose degrees are all odd. Any
    /// entry here contradicts Thomason's theorem and points at a defect.
    pub fn violations(&self) -> Vec<EdgeId> {
        if !self.all_degrees_odd {
            return Vec::new();
        }
        (0..self.counts.len())
            .filter(|&i| self.counts[i] % 2 == 1)
            .map(EdgeId)
            .collect()
    }

    pub fn all_even(&self) -> bool {
        self.counts.iter().all(|c| c % 2 == 0)
    }

    pub fn to_csv(&self, g: &MultiGraph) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["edge", "count"]).expect("in-memory csv");
        for (i, c) in self.counts.iter().enumerate() {
            w.write_record([g.edge_name(EdgeId(i)), c.to_string()])
                .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8 csv")
    }
}

pub fn edge_parity_report(g: &MultiGraph) -> EdgeParityReport {
    parity_from_cycles(g, &enumerate_hamilton_cycles(g))
}

pub fn parity_from_cycles(g: &MultiGraph, cycles: &[HamiltonCycle]) -> EdgeParityReport {
    let mut counts = vec![0u64; g.edge_count()];
    for c in cycles {
        for e in c.edges() {
            counts[e.0] += 1;
        }
    }
    EdgeParityReport {
        counts,
        total: cycles.len() as u64,
        vertex_count: g.vertex_count(),
        all_degrees_odd: g.vertex_count() > 0 && g.degrees().iter().all(|d| d % 2 == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeSpec};

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

    fn ids(g: &MultiGraph, labels: &[&str]) -> Vec<EdgeId> {
        labels.iter().map(|l| g.edge_by_label(l).unwrap()).collect()
    }

    #[test]
    fn k4_has_three_cycles() {
        let g = k4();
        let cycles = enumerate_hamilton_cycles(&g);
        assert_eq!(cycles.len(), 3);
        for c in &cycles {
            check_hamilton_cycle(&g, c.edges()).unwrap();
        }
        let mut sorted = cycles.clone();
        sorted.sort();
        assert_eq!(sorted, cycles);
    }

    #[test]
    fn two_vertex_digon() {
        let g = build_graph(
            &["a", "b"],
            &[EdgeSpec::new(None, "a", "b"), EdgeSpec::new(None, "a", "b")],
        )
        .unwrap();
        assert_eq!(enumerate_hamilton_cycles(&g).len(), 1);
        let tri = build_graph(
            &["a", "b"],
            &[
                EdgeSpec::new(None, "a", "b"),
                EdgeSpec::new(None, "a", "b"),
                EdgeSpec::new(None, "a", "b"),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_hamilton_cycles(&tri).len(), 3);
    }

    #[test]
    fn loops_never_used() {
        let g = build_graph(
            &["a", "b", "c"],
            &[
                EdgeSpec::new(None, "a", "b"),
                EdgeSpec::new(None, "b", "c"),
                EdgeSpec::new(None, "c", "a"),
                EdgeSpec::new(None, "a", "a"),
            ],
        )
        .unwrap();
        let cycles = enumerate_hamilton_cycles(&g);
        assert_eq!(cycles.len(), 1);
        assert!(!cycles[0].contains(EdgeId(3)));
        let single = build_graph(&["a"], &[EdgeSpec::new(None, "a", "a")]).unwrap();
        assert!(enumerate_hamilton_cycles(&single).is_empty());
    }

    #[test]
    fn filters() {
        let g = k4();
        let e12 = ids(&g, &["12"]);
        assert_eq!(count_through(&g, &e12, &[]).unwrap(), 2);
        assert_eq!(count_through(&g, &ids(&g, &["12", "34"]), &[]).unwrap(), 2);
        assert_eq!(
            count_through(&g, &ids(&g, &["12", "13", "14"]), &[]).unwrap(),
            0
        );
        assert_eq!(count_through(&g, &[], &e12).unwrap(), 1);
        assert_eq!(
            count_through(&g, &e12, &e12).unwrap_err(),
            HamiltonError::ConflictingConstraints(e12[0])
        );
        assert_eq!(
            count_through(&g, &[EdgeId(40)], &[]).unwrap_err(),
            HamiltonError::UnknownEdge(EdgeId(40))
        );
    }

    #[test]
    fn cycle_checker_rejects() {
        let g = k4();
        assert!(check_hamilton_cycle(&g, &ids(&g, &["12", "23", "13"])).is_err());
        assert!(check_hamilton_cycle(&g, &ids(&g, &["12", "23", "34", "14"])).is_ok());
        assert!(check_hamilton_cycle(&g, &ids(&g, &["12", "12", "34", "14"])).is_err());
    }

    #[test]
    fn lollipop_on_k4() {
        let g = k4();
        let c = HamiltonCycle::new(&g, &ids(&g, &["12", "23", "34", "14"])).unwrap();
        let e = g.edge_by_label("12").unwrap();
        let other = second_cycle_lollipop(&g, &c, e).unwrap();
        let expected = HamiltonCycle::new(&g, &ids(&g, &["12", "24", "34", "13"])).unwrap();
        assert_eq!(other, expected);
    }

    #[test]
    fn lollipop_preconditions() {
        let g = k4();
        let c = HamiltonCycle::new(&g, &ids(&g, &["12", "23", "34", "14"])).unwrap();
        assert_eq!(
            second_cycle_lollipop(&g, &c, g.edge_by_label("13").unwrap()).unwrap_err(),
            HamiltonError::EdgeNotInCycle(g.edge_by_label("13").unwrap())
        );
        let square = build_graph(
            &["1", "2", "3", "4"],
            &[
                EdgeSpec::labeled("12", "1", "2"),
                EdgeSpec::labeled("23", "2", "3"),
                EdgeSpec::labeled("34", "3", "4"),
                EdgeSpec::labeled("14", "1", "4"),
            ],
        )
        .unwrap();
        let c = HamiltonCycle::new(&square, &ids(&square, &["12", "23", "34", "14"])).unwrap();
        assert!(matches!(
            second_cycle_lollipop(&square, &c, EdgeId(0)),
            Err(HamiltonError::EvenDegree(_))
        ));
    }

    #[test]
    fn nearly_cubic_precondition() {
        assert_eq!(
            second_cycle_nearly_cubic(&k4()).unwrap_err(),
            HamiltonError::NotNearlyCubic
        );
    }

    #[test]
    fn parity_k4() {
        let g = k4();
        let r = edge_parity_report(&g);
        assert_eq!(r.total, 3);
        assert!(r.counts.iter().all(|&c| c == 2));
        assert!(r.all_degrees_odd);
        assert!(r.violations().is_empty());
        let csv = r.to_csv(&g);
        assert!(csv.starts_with("edge,count\n12,2\n"));
    }

    #[test]
    fn parallel_matches_serial() {
        let g = k4();
        assert_eq!(
            enumerate_hamilton_cycles_parallel(&g, 4).unwrap(),
            enumerate_hamilton_cycles(&g)
        );
    }

    #[test]
    fn vertex_sequence_walks_cycle() {
        let g = k4();
        let c = HamiltonCycle::new(&g, &ids(&g, &["12", "23", "34", "14"])).unwrap();
        let seq = c.vertex_sequence(&g, g.vertex("1").unwrap());
        let labels: Vec<&str> = seq.iter().map(|v| g.label(*v)).collect();
        assert_eq!(labels, ["1", "2", "3", "4"]);
    }
}
