//! Cut-chains: finite presentations of one- and two-ended infinite cubic
//! graphs as eventually periodic gluings of finite pieces.
//!
//! A piece is a finite graph whose boundary edges end in degree-1 terminal
//! vertices. Consecutive pieces are glued by an explicit matching between the
//! outward boundary labels of the inner piece and the inward boundary labels
//! of the outer piece. A one-ended chain is an initial piece followed by one
//! tail; a two-ended chain is a central piece with a tail on each side.
//!
//! Materialized graphs label a piece vertex `v` at position `p` as `v@p`.
//! The initial or central piece sits at position 0, the right tail at
//! positions 1, 2, ... and the left tail at -1, -2, .... A glued interface
//! edge carries the inward label of its outer piece, so the cut in front of
//! the piece at position `p` consists of the edges `l@p` for its inward
//! labels `l`. Segment minors and truncation minors share this naming, which
//! is what lets certificates be spliced by label.

mod analysis;
mod format;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, GraphBuilder, GraphError, MultiGraph, VertexId};
use crate::hamilton::HamiltonError;
use crate::incidence::IncidenceError;

pub use analysis::*;
pub use format::{ChainFile, PieceFile, TailFile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Hamilton(#[from] HamiltonError),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error("piece `{piece}`: {reason}")]
    Piece { piece: String, reason: String },
    #[error("unknown piece `{0}`")]
    UnknownPiece(String),
    #[error("{0}")]
    Interface(String),
    #[error("interface size {0} is not supported (only 2- and 3-edge cuts)")]
    UnsupportedInterface(usize),
    #[error("interface sizes differ along the chain ({0} vs {1})")]
    InterfaceSizeMismatch(usize, usize),
    #[error("empty period")]
    EmptyPeriod,
    #[error("operation needs a {0} chain")]
    ModeMismatch(&'static str),
    #[error("segment minor at level {level} of the {end} tail is not simple")]
    NonSimpleSegment { end: End, level: usize },
    #[error("invalid certificate: {0}")]
    Certificate(String),
    #[error("the chain is not cubic")]
    NotCubic,
    #[error("the limit graph has no Hamilton cycle")]
    NoHamiltonCycle,
    #[error("only one limit Hamilton cycle found; this contradicts the end-degree theorems")]
    TheoremViolation,
    #[error("counting overflow")]
    Overflow,
    #[error("internal inconsistency: {0}")]
    Defect(String),
    #[error("malformed chain file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Left,
    Right,
}

impl std::fmt::Display for End {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            End::Left => "left",
            End::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChainMode {
    #[serde(rename = "one-ended")]
    OneEnded,
    #[serde(rename = "two-ended")]
    TwoEnded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Stub {
    edge: EdgeId,
    inner: VertexId,
}

/// A finite piece with inward (`left`) and outward (`right`) boundary edges.
#[derive(Debug, Clone)]
pub struct Piece {
    name: String,
    graph: MultiGraph,
    left: Vec<String>,
    right: Vec<String>,
    stubs: HashMap<String, Stub>,
    terminals: BTreeSet<VertexId>,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.graph == other.graph
            && self.left == other.left
            && self.right == other.right
    }
}

impl Piece {
    /// Every boundary label must name an edge joining an interior vertex to
    /// a degree-1 terminal, and every edge must carry a label.
    pub fn new(
        name: &str,
        graph: MultiGraph,
        left: Vec<String>,
        right: Vec<String>,
    ) -> Result<Self, ChainError> {
        let bad = |reason: String| ChainError::Piece {
            piece: name.to_owned(),
            reason,
        };
        if let Some(e) = graph.edges().iter().find(|e| e.label.is_none()) {
            return Err(bad(format!("edge {} has no label", e.id)));
        }
        let mut stubs = HashMap::new();
        let mut terminals = BTreeSet::new();
        for label in left.iter().chain(&right) {
            let edge = graph.edge_by_label(label)?;
            let rec = graph.edge(edge);
            let (a, b) = rec.ends;
            let is_terminal = |v: VertexId| graph.degree_unchecked(v) == 1;
            let (inner, terminal) = match (is_terminal(a), is_terminal(b)) {
                (false, true) => (a, b),
                (true, false) => (b, a),
                _ => {
                    return Err(bad(format!(
                        "boundary edge `{label}` must join an interior vertex to a leaf"
                    )))
                }
            };
            if stubs.insert(label.clone(), Stub { edge, inner }).is_some() {
                return Err(bad(format!("boundary edge `{label}` listed twice")));
            }
            terminals.insert(terminal);
        }
        if terminals.len() == graph.vertex_count() {
            return Err(bad("no interior vertex".into()));
        }
        Ok(Piece {
            name: name.to_owned(),
            graph,
            left,
            right,
            stubs,
            terminals,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .vertices()
            .filter(|v| !self.terminals.contains(v))
    }

    fn is_stub(&self, e: EdgeId) -> bool {
        self.graph
            .edge_label(e)
            .is_some_and(|l| self.stubs.contains_key(l))
    }

    fn inner(&self, label: &str) -> VertexId {
        self.stubs[label].inner
    }

    /// Every interior vertex has degree 3 counting boundary edges.
    pub fn is_cubic(&self) -> bool {
        self.interior_vertices()
            .all(|v| self.graph.degree_unchecked(v) == 3)
    }
}

/// Matching `(outward label of inner piece, inward label of outer piece)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interface {
    pub pairs: Vec<(String, String)>,
}

impl Interface {
    pub fn new(pairs: &[(&str, &str)]) -> Self {
        Interface {
            pairs: pairs
                .iter()
                .map(|(a, b)| ((*a).to_owned(), (*b).to_owned()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Pieces running away from the anchor. `interfaces[0]` glues the anchor to
/// the first piece, `interfaces[i]` glues piece `i - 1` to piece `i`, and the
/// last entry glues the final period piece back onto the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub pre_period: Vec<usize>,
    pub period: Vec<usize>,
    pub interfaces: Vec<Interface>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainShape {
    OneEnded {
        initial: usize,
        tail: Tail,
    },
    TwoEnded {
        central: usize,
        left: Tail,
        right: Tail,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutChain {
    pieces: Vec<Piece>,
    shape: ChainShape,
    interface_size: usize,
}

/// A finite materialization of a chain with its dummies and cut records.
#[derive(Debug, Clone)]
pub struct Window {
    pub graph: MultiGraph,
    pub depth: usize,
    /// Dummy vertex per end.
    pub dummies: Vec<(End, VertexId)>,
    /// Interior vertices of the initial or central piece.
    pub core: BTreeSet<VertexId>,
    /// Cut edges, keyed by end and level; level `n` is the cut in front of
    /// tail piece `n`. The last level per end is the dummy's edge set.
    pub cuts: Vec<(End, usize, Vec<EdgeId>)>,
}

impl Window {
    pub fn dummy(&self, end: End) -> VertexId {
        self.dummies
            .iter()
            .find(|(e, _)| *e == end)
            .map(|(_, v)| *v)
            .expect("dummy for every end of the chain")
    }
}

/// Segment minor of one tail piece: `alpha` stands for everything inward,
/// `beta` for everything outward.
#[derive(Debug, Clone)]
pub struct Segment {
    pub graph: MultiGraph,
    pub alpha: VertexId,
    pub beta: VertexId,
}

pub(crate) fn at(label: &str, pos: i64) -> String {
    format!("{label}@{pos}")
}

impl CutChain {
    pub fn one_ended(pieces: Vec<Piece>, initial: usize, tail: Tail) -> Result<Self, ChainError> {
        Self::validated(pieces, ChainShape::OneEnded { initial, tail })
    }

    pub fn two_ended(
        pieces: Vec<Piece>,
        central: usize,
        left: Tail,
        right: Tail,
    ) -> Result<Self, ChainError> {
        Self::validated(
            pieces,
            ChainShape::TwoEnded {
                central,
                left,
                right,
            },
        )
    }

    fn validated(pieces: Vec<Piece>, shape: ChainShape) -> Result<Self, ChainError> {
        let mut names = BTreeSet::new();
        for p in &pieces {
            if !names.insert(p.name.clone()) {
                return Err(ChainError::Format(format!(
                    "duplicate piece name `{}`",
                    p.name
                )));
            }
        }
        let check_index = |i: usize| {
            if i < pieces.len() {
                Ok(())
            } else {
                Err(ChainError::UnknownPiece(format!("#{i}")))
            }
        };
        let anchor = match &shape {
            ChainShape::OneEnded { initial, .. } => *initial,
            ChainShape::TwoEnded { central, .. } => *central,
        };
        check_index(anchor)?;
        let mut tails: Vec<(&Tail, &[String])> = Vec::new();
        match &shape {
            ChainShape::OneEnded { tail, .. } => {
                if !pieces[anchor].left.is_empty() {
                    return Err(ChainError::Piece {
                        piece: pieces[anchor].name.clone(),
                        reason: "initial piece must not have inward boundary edges".into(),
                    });
                }
                tails.push((tail, &pieces[anchor].right));
            }
            ChainShape::TwoEnded { left, right, .. } => {
                tails.push((left, &pieces[anchor].left));
                tails.push((right, &pieces[anchor].right));
            }
        }
        let mut size = None;
        for (tail, anchor_out) in tails {
            if tail.period.is_empty() {
                return Err(ChainError::EmptyPeriod);
            }
            for &i in tail.pre_period.iter().chain(&tail.period) {
                check_index(i)?;
            }
            let seq: Vec<usize> = tail
                .pre_period
                .iter()
                .chain(&tail.period)
                .copied()
                .collect();
            if tail.interfaces.len() != seq.len() + 1 {
                return Err(ChainError::Interface(format!(
                    "expected {} interfaces, found {}",
                    seq.len() + 1,
                    tail.interfaces.len()
                )));
            }
            for (k, iface) in tail.interfaces.iter().enumerate() {
                let (outward, target) = if k == 0 {
                    (anchor_out, seq[0])
                } else if k < seq.len() {
                    (pieces[seq[k - 1]].right.as_slice(), seq[k])
                } else {
                    (pieces[seq[k - 1]].right.as_slice(), tail.period[0])
                };
                check_interface(iface, outward, &pieces[target].left, k)?;
                let n = iface.len();
                match size {
                    None => size = Some(n),
                    Some(s) if s != n => return Err(ChainError::InterfaceSizeMismatch(s, n)),
                    _ => {}
                }
            }
        }
        let interface_size = size.unwrap_or(0);
        if !(2..=3).contains(&interface_size) {
            return Err(ChainError::UnsupportedInterface(interface_size));
        }
        Ok(CutChain {
            pieces,
            shape,
            interface_size,
        })
    }

    pub fn mode(&self) -> ChainMode {
        match self.shape {
            ChainShape::OneEnded { .. } => ChainMode::OneEnded,
            ChainShape::TwoEnded { .. } => ChainMode::TwoEnded,
        }
    }

    pub fn shape(&self) -> &ChainShape {
        &self.shape
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn interface_size(&self) -> usize {
        self.interface_size
    }

    pub fn anchor(&self) -> &Piece {
        match &self.shape {
            ChainShape::OneEnded { initial, .. } => &self.pieces[*initial],
            ChainShape::TwoEnded { central, .. } => &self.pieces[*central],
        }
    }

    pub fn ends(&self) -> Vec<End> {
        match self.shape {
            ChainShape::OneEnded { .. } => vec![End::Right],
            ChainShape::TwoEnded { .. } => vec![End::Left, End::Right],
        }
    }

    pub fn tail(&self, end: End) -> Result<&Tail, ChainError> {
        match (&self.shape, end) {
            (ChainShape::OneEnded { tail, .. }, End::Right) => Ok(tail),
            (ChainShape::OneEnded { .. }, End::Left) => Err(ChainError::ModeMismatch("two-ended")),
            (ChainShape::TwoEnded { left, .. }, End::Left) => Ok(left),
            (ChainShape::TwoEnded { right, .. }, End::Right) => Ok(right),
        }
    }

    /// Index into `pieces` of tail piece `n`.
    pub fn tail_piece_index(&self, end: End, n: usize) -> Result<usize, ChainError> {
        let tail = self.tail(end)?;
        let pre = tail.pre_period.len();
        Ok(if n < pre {
            tail.pre_period[n]
        } else {
            tail.period[(n - pre) % tail.period.len()]
        })
    }

    pub fn tail_piece(&self, end: End, n: usize) -> Result<&Piece, ChainError> {
        Ok(&self.pieces[self.tail_piece_index(end, n)?])
    }

    /// Interface gluing tail piece `n - 1` (or the anchor) onto tail piece `n`.
    pub fn interface_into(&self, end: End, n: usize) -> Result<&Interface, ChainError> {
        let tail = self.tail(end)?;
        let pre = tail.pre_period.len();
        let p = tail.period.len();
        let idx = if n < pre + p {
            n
        } else if (n - pre).is_multiple_of(p) {
            pre + p
        } else {
            pre + (n - pre) % p
        };
        Ok(&tail.interfaces[idx])
    }

    pub fn position(end: End, n: usize) -> i64 {
        match end {
            End::Right => n as i64 + 1,
            End::Left => -(n as i64 + 1),
        }
    }

    /// Every interior vertex of every piece has degree 3.
    pub fn is_cubic(&self) -> bool {
        self.pieces.iter().all(Piece::is_cubic)
    }

    fn add_interior(
        b: &mut GraphBuilder,
        piece: &Piece,
        pos: i64,
    ) -> Result<Vec<Option<VertexId>>, ChainError> {
        let mut map = vec![None; piece.graph.vertex_count()];
        for v in piece.interior_vertices() {
            map[v.index()] = Some(b.add_vertex(&at(piece.graph.label(v), pos))?);
        }
        for e in piece.graph.edges() {
            if piece.is_stub(e.id) {
                continue;
            }
            let label = at(e.label.as_deref().expect("labeled piece edge"), pos);
            let (a, c) = (map[e.ends.0.index()], map[e.ends.1.index()]);
            b.add_edge_ids(
                Some(&label),
                a.expect("interior end"),
                c.expect("interior end"),
            )?;
        }
        Ok(map)
    }

    /// Truncation minor: the anchor plus `depth` tail pieces on every end,
    /// with everything beyond contracted to one dummy per end.
    pub fn truncation_minor(&self, depth: usize) -> Result<Window, ChainError> {
        let mut b = GraphBuilder::new();
        let anchor = self.anchor();
        let anchor_map = Self::add_interior(&mut b, anchor, 0)?;
        let core: BTreeSet<VertexId> = anchor_map.iter().flatten().copied().collect();
        let mut dummies = Vec::new();
        let mut cuts = Vec::new();
        let two = self.mode() == ChainMode::TwoEnded;
        for end in self.ends() {
            let mut prev: (&Piece, i64, Vec<Option<VertexId>>) = (anchor, 0, anchor_map.clone());
            for n in 0..depth {
                let piece = self.tail_piece(end, n)?;
                let pos = Self::position(end, n);
                let map = Self::add_interior(&mut b, piece, pos)?;
                let mut cut = Vec::new();
                for (out, inn) in &self.interface_into(end, n)?.pairs {
                    let a = prev.2[prev.0.inner(out).index()].expect("interior");
                    let c = map[piece.inner(inn).index()].expect("interior");
                    cut.push(b.add_edge_ids(Some(&at(inn, pos)), a, c)?);
                }
                cuts.push((end, n, cut));
                prev = (piece, pos, map);
            }
            let label = match (two, end) {
                (false, _) => "dummy",
                (true, End::Left) => "dummy_L",
                (true, End::Right) => "dummy_R",
            };
            let dummy = b.add_vertex(label)?;
            let pos = Self::position(end, depth);
            let mut cut = Vec::new();
            for (out, inn) in &self.interface_into(end, depth)?.pairs {
                let a = prev.2[prev.0.inner(out).index()].expect("interior");
                cut.push(b.add_edge_ids(Some(&at(inn, pos)), a, dummy)?);
            }
            cuts.push((end, depth, cut));
            dummies.push((end, dummy));
        }
        Ok(Window {
            graph: b.build(),
            depth,
            dummies,
            core,
            cuts,
        })
    }

    /// Segment minor of tail piece `n`: its inward side contracted to
    /// `alpha` and its outward side to `beta`.
    pub fn segment_minor(&self, end: End, n: usize) -> Result<Segment, ChainError> {
        let piece = self.tail_piece(end, n)?;
        let pos = Self::position(end, n);
        let next_pos = Self::position(end, n + 1);
        let outward: HashMap<&str, &str> = self
            .interface_into(end, n + 1)?
            .pairs
            .iter()
            .map(|(o, i)| (o.as_str(), i.as_str()))
            .collect();
        let mut b = GraphBuilder::new();
        let alpha = b.add_vertex("alpha")?;
        let map = Self::add_interior(&mut b, piece, pos)?;
        let beta = b.add_vertex("beta")?;
        for label in &piece.left {
            let v = map[piece.inner(label).index()].expect("interior");
            b.add_edge_ids(Some(&at(label, pos)), alpha, v)?;
        }
        for label in &piece.right {
            let v = map[piece.inner(label).index()].expect("interior");
            b.add_edge_ids(Some(&at(outward[label.as_str()], next_pos)), v, beta)?;
        }
        Ok(Segment {
            graph: b.build(),
            alpha,
            beta,
        })
    }

    /// Inward boundary labels of tail piece `n`, i.e. the names of the cut
    /// edges at level `n` without their position suffix.
    pub fn cut_labels(&self, end: End, n: usize) -> Result<&[String], ChainError> {
        Ok(self.tail_piece(end, n)?.left())
    }

    pub fn to_file(&self) -> ChainFile {
        format::to_file(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("chain serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ChainError> {
        let file: ChainFile =
            serde_json::from_str(text).map_err(|e| ChainError::Format(e.to_string()))?;
        file.to_chain()
    }
}

fn check_interface(
    iface: &Interface,
    outward: &[String],
    inward: &[String],
    k: usize,
) -> Result<(), ChainError> {
    let err = |m: String| Err(ChainError::Interface(format!("interface {k}: {m}")));
    if iface.len() != outward.len() || iface.len() != inward.len() {
        return err(format!(
            "matches {} edges but the boundaries have {} and {}",
            iface.len(),
            outward.len(),
            inward.len()
        ));
    }
    let outs: BTreeSet<&str> = iface.pairs.iter().map(|(o, _)| o.as_str()).collect();
    let ins: BTreeSet<&str> = iface.pairs.iter().map(|(_, i)| i.as_str()).collect();
    let want_out: BTreeSet<&str> = outward.iter().map(String::as_str).collect();
    let want_in: BTreeSet<&str> = inward.iter().map(String::as_str).collect();
    if outs != want_out {
        return err("outward labels do not match the inner piece".into());
    }
    if ins != want_in {
        return err("inward labels do not match the outer piece".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, EdgeSpec};

    /// `k` disjoint rails with one interior vertex each; enough to
    /// exercise validation.
    fn rails(name: &str, k: usize) -> Piece {
        let mut labels = Vec::new();
        let mut specs = Vec::new();
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for i in 0..k {
            let (v, a, b) = (format!("v{i}"), format!("a{i}'"), format!("b{i}'"));
            specs.push(EdgeSpec::labeled(&format!("in{i}"), &a, &v));
            specs.push(EdgeSpec::labeled(&format!("out{i}"), &v, &b));
            left.push(format!("in{i}"));
            right.push(format!("out{i}"));
            labels.extend([v, a, b]);
        }
        let g = build_graph(&labels, &specs).unwrap();
        Piece::new(name, g, left, right).unwrap()
    }

    fn straight(k: usize) -> Interface {
        Interface {
            pairs: (0..k)
                .map(|i| (format!("out{i}"), format!("in{i}")))
                .collect(),
        }
    }

    fn tail(k: usize) -> Tail {
        Tail {
            pre_period: Vec::new(),
            period: vec![1],
            interfaces: vec![straight(k), straight(k)],
        }
    }

    /// The central piece's inward edges face the first left piece's inward edges.
    fn left_tail(k: usize) -> Tail {
        let mut t = tail(k);
        t.interfaces[0] = Interface {
            pairs: (0..k)
                .map(|i| (format!("in{i}"), format!("in{i}")))
                .collect(),
        };
        t
    }

    #[test]
    fn refuses_four_edge_interfaces() {
        let err = CutChain::two_ended(vec![rails("c", 4), rails("p", 4)], 0, left_tail(4), tail(4));
        assert_eq!(err.unwrap_err(), ChainError::UnsupportedInterface(4));
        let ok = CutChain::two_ended(vec![rails("c", 3), rails("p", 3)], 0, left_tail(3), tail(3));
        assert!(ok.is_ok());
    }

    #[test]
    fn rejects_bad_matchings() {
        let mut t = tail(2);
        t.interfaces[1] = Interface::new(&[("out0", "in0"), ("out0", "in1")]);
        let err = CutChain::two_ended(vec![rails("c", 2), rails("p", 2)], 0, left_tail(2), t);
        assert!(matches!(err, Err(ChainError::Interface(_))));
        let mut t = tail(2);
        t.interfaces.pop();
        let err = CutChain::two_ended(vec![rails("c", 2), rails("p", 2)], 0, left_tail(2), t);
        assert!(matches!(err, Err(ChainError::Interface(_))));
    }

    #[test]
    fn one_ended_anchor_has_no_inward_edges() {
        let err = CutChain::one_ended(vec![rails("c", 2), rails("p", 2)], 0, tail(2));
        assert!(matches!(err, Err(ChainError::Piece { .. })));
    }

    #[test]
    fn boundary_edges_must_end_in_leaves() {
        let g = build_graph(
            &["a", "b"],
            &[
                EdgeSpec::labeled("ab", "a", "b"),
                EdgeSpec::labeled("ab2", "a", "b"),
            ],
        )
        .unwrap();
        let err = Piece::new("x", g, vec!["ab".into()], Vec::new());
        assert!(matches!(err, Err(ChainError::Piece { .. })));
    }

    #[test]
    fn window_labels_and_cuts() {
        let c = CutChain::two_ended(vec![rails("c", 2), rails("p", 2)], 0, left_tail(2), tail(2))
            .unwrap();
        let w = c.truncation_minor(1).unwrap();
        // central v0, v1; one piece per side; two dummies
        assert_eq!(w.graph.vertex_count(), 2 + 2 + 2 + 2);
        assert!(w.graph.edge_by_label("in0@1").is_ok());
        assert!(w.graph.edge_by_label("in0@-2").is_ok());
        assert_eq!(w.cuts.len(), 4);
        assert!(w.cuts.iter().all(|(_, _, cut)| cut.len() == 2));
        let s = c.segment_minor(End::Left, 0).unwrap();
        assert_eq!(s.graph.degree(s.alpha).unwrap(), 2);
        assert_eq!(s.graph.degree(s.beta).unwrap(), 2);
    }

    #[test]
    fn json_round_trip() {
        let c = CutChain::two_ended(vec![rails("c", 3), rails("p", 3)], 0, left_tail(3), tail(3))
            .unwrap();
        let back = CutChain::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
