//! JSON layout for cut-chains. Pieces are referenced by name.

use serde::{Deserialize, Serialize};

use super::{ChainError, ChainShape, CutChain, Interface, Piece, Tail};
use crate::graph::{EdgeEntry, GraphFile, VertexEntry};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceFile {
    pub name: String,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
    #[serde(default)]
    pub left: Vec<String>,
    #[serde(default)]
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailFile {
    #[serde(default)]
    pub pre_period: Vec<String>,
    pub period: Vec<String>,
    pub interfaces: Vec<Vec<[String; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFile {
    /// `one-ended` or `two-ended`.
    pub mode: String,
    pub pieces: Vec<PieceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pre_period: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interfaces: Option<Vec<Vec<[String; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<TailFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<TailFile>,
}

fn missing(field: &str) -> ChainError {
    ChainError::Format(format!("missing field `{field}`"))
}

impl ChainFile {
    pub fn to_chain(&self) -> Result<CutChain, ChainError> {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for p in &self.pieces {
            let graph = GraphFile {
                vertices: p.vertices.clone(),
                edges: p.edges.clone(),
                boundary: None,
            }
            .to_graph()?;
            pieces.push(Piece::new(&p.name, graph, p.left.clone(), p.right.clone())?);
        }
        let index = |name: &str| {
            pieces
                .iter()
                .position(|p| p.name == name)
                .ok_or_else(|| ChainError::UnknownPiece(name.to_owned()))
        };
        let tail = |pre: &[String], period: &[String], ifaces: &[Vec<[String; 2]>]| {
            Ok::<_, ChainError>(Tail {
                pre_period: pre.iter().map(|n| index(n)).collect::<Result<_, _>>()?,
                period: period.iter().map(|n| index(n)).collect::<Result<_, _>>()?,
                interfaces: ifaces
                    .iter()
                    .map(|pairs| Interface {
                        pairs: pairs.iter().map(|[a, b]| (a.clone(), b.clone())).collect(),
                    })
                    .collect(),
            })
        };
        match self.mode.as_str() {
            "one-ended" => {
                let initial = index(self.initial.as_deref().ok_or_else(|| missing("initial"))?)?;
                let t = tail(
                    self.pre_period.as_deref().unwrap_or_default(),
                    self.period.as_deref().ok_or_else(|| missing("period"))?,
                    self.interfaces
                        .as_deref()
                        .ok_or_else(|| missing("interfaces"))?,
                )?;
                CutChain::one_ended(pieces, initial, t)
            }
            "two-ended" => {
                let central = index(self.central.as_deref().ok_or_else(|| missing("central"))?)?;
                let l = self.left.as_ref().ok_or_else(|| missing("left"))?;
                let r = self.right.as_ref().ok_or_else(|| missing("right"))?;
                let left = tail(&l.pre_period, &l.period, &l.interfaces)?;
                let right = tail(&r.pre_period, &r.period, &r.interfaces)?;
                CutChain::two_ended(pieces, central, left, right)
            }
            other => Err(ChainError::Format(format!("unknown mode `{other}`"))),
        }
    }
}

pub(super) fn to_file(chain: &CutChain) -> ChainFile {
    let pieces = &chain.pieces;
    let names = |ids: &[usize]| {
        ids.iter()
            .map(|&i| pieces[i].name.clone())
            .collect::<Vec<_>>()
    };
    let ifaces = |t: &Tail| {
        t.interfaces
            .iter()
            .map(|i| {
                i.pairs
                    .iter()
                    .map(|(a, b)| [a.clone(), b.clone()])
                    .collect()
            })
            .collect::<Vec<_>>()
    };
    let tail_file = |t: &Tail| TailFile {
        pre_period: names(&t.pre_period),
        period: names(&t.period),
        interfaces: ifaces(t),
    };
    let piece_files = pieces
        .iter()
        .map(|p| {
            let g = p.graph.to_file();
            PieceFile {
                name: p.name.clone(),
                vertices: g.vertices,
                edges: g.edges,
                left: p.left.clone(),
                right: p.right.clone(),
            }
        })
        .collect();
    let mut file = ChainFile {
        mode: String::new(),
        pieces: piece_files,
        initial: None,
        central: None,
        pre_period: None,
        period: None,
        interfaces: None,
        left: None,
        right: None,
    };
    match &chain.shape {
        ChainShape::OneEnded { initial, tail } => {
            file.mode = "one-ended".into();
            file.initial = Some(pieces[*initial].name.clone());
            file.pre_period = Some(names(&tail.pre_period));
            file.period = Some(names(&tail.period));
            file.interfaces = Some(ifaces(tail));
        }
        ChainShape::TwoEnded {
            central,
            left,
            right,
        } => {
            file.mode = "two-ended".into();
            file.central = Some(pieces[*central].name.clone());
            file.left = Some(tail_file(left));
            file.right = Some(tail_file(right));
        }
    }
    file
}
