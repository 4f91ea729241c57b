//! Generators for the named graphs and chains: the Tutte fragment, its leaf
//! quotient, the iterated replacement graphs, the ladders and the chains
//! built from Tutte fragments.

use crate::chain::{ChainError, CutChain, Interface, Piece, Tail};
use crate::graph::{build_graph, EdgeSpec, GraphBuilder, GraphError, MultiGraph};

/// A graph with an ordered list of designated boundary edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFragment {
    pub graph: MultiGraph,
    pub boundary: Vec<String>,
}

impl LabeledFragment {
    pub fn new(graph: MultiGraph, boundary: Vec<String>) -> Result<Self, GraphError> {
        for (i, l) in boundary.iter().enumerate() {
            graph.edge_by_label(l)?;
            if boundary[..i].contains(l) {
                return Err(GraphError::DuplicateEdgeLabel(l.clone()));
            }
        }
        Ok(LabeledFragment { graph, boundary })
    }
}

const TUTTE_VERTICES: [&str; 18] = [
    "lx", "x", "p", "y", "ly", "q", "r", "b", "s", "t", "v", "c", "a", "u", "m", "n", "z", "lz",
];

// The frequently drawn q-u edge would leave q with degree 4 and s with
// degree 2; s-u is the edge every Hamilton cycle of the quotient uses.
const TUTTE_EDGES: [(&str, &str, &str); 24] = [
    ("e_x", "lx", "x"),
    ("x-p", "x", "p"),
    ("p-y", "p", "y"),
    ("e_y", "y", "ly"),
    ("x-q", "x", "q"),
    ("q-r", "q", "r"),
    ("r-b", "r", "b"),
    ("b-p", "b", "p"),
    ("q-s", "q", "s"),
    ("s-t", "s", "t"),
    ("t-r", "t", "r"),
    ("f_b", "b", "v"),
    ("f_c", "v", "c"),
    ("y-c", "y", "c"),
    ("t-a", "t", "a"),
    ("f_a", "v", "a"),
    ("s-u", "s", "u"),
    ("u-m", "u", "m"),
    ("m-n", "m", "n"),
    ("c-n", "c", "n"),
    ("a-m", "a", "m"),
    ("u-z", "u", "z"),
    ("n-z", "n", "z"),
    ("e_z", "z", "lz"),
];

fn tutte_graph() -> MultiGraph {
    let specs: Vec<EdgeSpec> = TUTTE_EDGES
        .iter()
        .map(|(l, a, b)| EdgeSpec::labeled(l, a, b))
        .collect();
    build_graph(&TUTTE_VERTICES, &specs).expect("fixed fragment")
}

/// The 18-vertex three-leaf Tutte fragment with boundary `e_x, e_y, e_z`.
pub fn tutte_fragment() -> LabeledFragment {
    LabeledFragment::new(
        tutte_graph(),
        vec!["e_x".into(), "e_y".into(), "e_z".into()],
    )
    .expect("fixed fragment")
}

/// The fragment with its three leaves identified into one vertex `w`.
pub fn tutte_quotient() -> MultiGraph {
    tutte_graph()
        .quotient(&[("lx", "ly"), ("lx", "lz")])
        .and_then(|g| g.rename_vertex("lx", "w"))
        .expect("fixed fragment")
}

/// `G_0` is the quotient with every label suffixed `@0`; `G_{i+1}` deletes
/// `v@i` and glues a fresh fragment suffixed `@{i+1}` by identifying its
/// leaves `lx, ly, lz` with `a@i, b@i, c@i`.
pub fn replacement_graph(n: usize) -> MultiGraph {
    let t = tutte_graph();
    let mut g = tutte_quotient().with_suffix("@0").expect("fresh labels");
    for i in 0..n {
        let v = g.vertex(&format!("v@{i}")).expect("current v");
        let next = t.with_suffix(&format!("@{}", i + 1)).expect("fresh labels");
        let glued = g
            .delete_vertex(v)
            .and_then(|h| h.disjoint_union(&next))
            .expect("disjoint labels");
        let j = i + 1;
        g = glued
            .quotient(&[
                (format!("a@{i}"), format!("lx@{j}")),
                (format!("b@{i}"), format!("ly@{j}")),
                (format!("c@{i}"), format!("lz@{j}")),
            ])
            .expect("labels present");
    }
    g
}

pub fn k4() -> MultiGraph {
    let specs: Vec<EdgeSpec> = [
        ("0", "1"),
        ("0", "2"),
        ("0", "3"),
        ("1", "2"),
        ("1", "3"),
        ("2", "3"),
    ]
    .iter()
    .map(|(a, b)| EdgeSpec::labeled(&format!("{a}{b}"), a, b))
    .collect();
    build_graph(&["0", "1", "2", "3"], &specs).expect("fixed graph")
}

pub fn petersen() -> MultiGraph {
    let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
    let mut specs = Vec::new();
    for i in 0..5 {
        let pairs = [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)];
        for (a, b) in pairs {
            specs.push(EdgeSpec::labeled(
                &format!("{a}-{b}"),
                &labels[a],
                &labels[b],
            ));
        }
    }
    build_graph(&labels, &specs).expect("fixed graph")
}

/// The 3-dimensional cube on bit strings.
pub fn cube() -> MultiGraph {
    let labels: Vec<String> = (0..8).map(|i| format!("{i:03b}")).collect();
    let mut specs = Vec::new();
    for i in 0..8usize {
        for bit in [1, 2, 4] {
            let j = i ^ bit;
            if i < j {
                specs.push(EdgeSpec::labeled(
                    &format!("{}-{}", labels[i], labels[j]),
                    &labels[i],
                    &labels[j],
                ));
            }
        }
    }
    build_graph(&labels, &specs).expect("fixed graph")
}

/// Adds a fresh terminal leaf for each `(label, inner vertex)` stub.
fn with_stubs(g: &MultiGraph, stubs: &[(&str, &str)]) -> MultiGraph {
    let mut b = GraphBuilder::from_graph(g);
    for (label, inner) in stubs {
        let leaf = format!("{label}'");
        b.add_vertex(&leaf).expect("fresh leaf");
        b.add_edge(Some(label), inner, &leaf).expect("fresh stub");
    }
    b.build()
}

fn without(g: &MultiGraph, vertex: &str) -> MultiGraph {
    g.delete_vertex(g.vertex(vertex).expect("vertex present"))
        .expect("vertex present")
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| (*s).to_owned()).collect()
}

const E: [&str; 3] = ["e_x", "e_y", "e_z"];
const F: [&str; 3] = ["f_a", "f_b", "f_c"];

/// The fragment with `v` cut open: inward edges `e_x, e_y, e_z`, outward
/// edges `f_a, f_b, f_c`.
pub fn tutte_piece() -> Piece {
    let g = with_stubs(
        &without(&tutte_graph(), "v"),
        &[("f_a", "a"), ("f_b", "b"), ("f_c", "c")],
    );
    Piece::new("P", g, strings(&E), strings(&F)).expect("fixed piece")
}

fn straight() -> Interface {
    Interface::new(&[("f_a", "e_x"), ("f_b", "e_y"), ("f_c", "e_z")])
}

fn crosswise() -> Interface {
    Interface::new(&[("e_x", "e_z"), ("e_y", "e_y"), ("e_z", "e_x")])
}

fn periodic(first: Interface, wrap: Interface) -> Tail {
    Tail {
        pre_period: Vec::new(),
        period: vec![1],
        interfaces: vec![first, wrap],
    }
}

fn built(r: Result<CutChain, ChainError>) -> CutChain {
    r.expect("fixed chain")
}

/// The limit of the replacement graphs: the quotient with `v` opened,
/// followed by infinitely many opened fragments.
pub fn chain_g() -> CutChain {
    let g = with_stubs(
        &without(&tutte_quotient(), "v"),
        &[("f_a", "a"), ("f_b", "b"), ("f_c", "c")],
    );
    let initial = Piece::new("G0", g, Vec::new(), strings(&F)).expect("fixed piece");
    built(CutChain::one_ended(
        vec![initial, tutte_piece()],
        0,
        periodic(straight(), straight()),
    ))
}

/// A fragment glued crosswise onto the limit graph with `w_0` removed.
pub fn chain_h() -> CutChain {
    let t = tutte_fragment();
    let initial = Piece::new("T", t.graph, Vec::new(), t.boundary).expect("fixed piece");
    built(CutChain::one_ended(
        vec![initial, tutte_piece()],
        0,
        periodic(crosswise(), straight()),
    ))
}

/// Two copies of the limit graph with `w_0` removed, joined crosswise.
pub fn chain_hprime() -> CutChain {
    let p = tutte_piece();
    let central =
        Piece::new("C", p.graph().clone(), strings(&E), strings(&F)).expect("fixed piece");
    built(CutChain::two_ended(
        vec![central, tutte_piece()],
        0,
        periodic(crosswise(), straight()),
        periodic(straight(), straight()),
    ))
}

/// One rung `u - l` with rails entering at `iu, il` and leaving at `ou, ol`.
fn rung_piece(name: &str) -> Piece {
    let g = build_graph(
        &["u", "l", "iu'", "il'", "ou'", "ol'"],
        &[
            EdgeSpec::labeled("iu", "iu'", "u"),
            EdgeSpec::labeled("il", "il'", "l"),
            EdgeSpec::labeled("rung", "u", "l"),
            EdgeSpec::labeled("ou", "u", "ou'"),
            EdgeSpec::labeled("ol", "l", "ol'"),
        ],
    )
    .expect("fixed piece");
    Piece::new(name, g, strings(&["iu", "il"]), strings(&["ou", "ol"])).expect("fixed piece")
}

fn rails() -> Interface {
    Interface::new(&[("ou", "iu"), ("ol", "il")])
}

/// The one-ended ladder closed off by `o` and `m`, where `m` subdivides the
/// first rung.
pub fn chain_ladder() -> CutChain {
    let g = build_graph(
        &["o", "m", "u1", "l1", "ru'", "rl'"],
        &[
            EdgeSpec::labeled("e1", "o", "u1"),
            EdgeSpec::labeled("e2", "o", "l1"),
            EdgeSpec::labeled("o-m", "o", "m"),
            EdgeSpec::labeled("f1", "m", "u1"),
            EdgeSpec::labeled("f2", "m", "l1"),
            EdgeSpec::labeled("ru", "u1", "ru'"),
            EdgeSpec::labeled("rl", "l1", "rl'"),
        ],
    )
    .expect("fixed piece");
    let initial = Piece::new("end", g, Vec::new(), strings(&["ru", "rl"])).expect("fixed piece");
    built(CutChain::one_ended(
        vec![initial, rung_piece("rung")],
        0,
        periodic(Interface::new(&[("ru", "iu"), ("rl", "il")]), rails()),
    ))
}

/// The two-way infinite ladder.
pub fn chain_double_ladder() -> CutChain {
    built(CutChain::two_ended(
        vec![rung_piece("central"), rung_piece("rung")],
        0,
        periodic(Interface::new(&[("iu", "iu"), ("il", "il")]), rails()),
        periodic(rails(), rails()),
    ))
}

/// Built-in chains by name.
pub fn builtin_chain(name: &str) -> Option<CutChain> {
    Some(match name {
        "chain-G" => chain_g(),
        "chain-H" => chain_h(),
        "chain-Hprime" => chain_hprime(),
        "chain-ladder" => chain_ladder(),
        "chain-double-ladder" => chain_double_ladder(),
        _ => return None,
    })
}

pub const BUILTIN_CHAINS: [&str; 5] = [
    "chain-G",
    "chain-H",
    "chain-Hprime",
    "chain-ladder",
    "chain-double-ladder",
];

/// Built-in finite graphs by name.
pub fn builtin_graph(name: &str) -> Option<MultiGraph> {
    Some(match name {
        "tutte-fragment" => tutte_graph(),
        "tutte-quotient" => tutte_quotient(),
        "k4" => k4(),
        "petersen" => petersen(),
        "cube" => cube(),
        _ => return None,
    })
}

pub const BUILTIN_GRAPHS: [&str; 5] =
    ["tutte-fragment", "tutte-quotient", "k4", "petersen", "cube"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::{count_through, enumerate_hamilton_cycles};

    #[test]
    fn fragment_shape() {
        let t = tutte_fragment();
        let g = &t.graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (18, 24));
        for leaf in ["lx", "ly", "lz"] {
            assert_eq!(g.degree(g.vertex(leaf).unwrap()).unwrap(), 1);
        }
        let v = g.vertex("v").unwrap();
        let mut at_v: Vec<&str> = g
            .incident(v)
            .iter()
            .map(|e| g.edge_label(*e).unwrap())
            .collect();
        at_v.sort();
        assert_eq!(at_v, ["f_a", "f_b", "f_c"]);
        assert_eq!(g.degrees().iter().sum::<usize>(), 48);
    }

    #[test]
    fn quotient_counts() {
        let g = tutte_quotient();
        assert!(g.is_cubic() && g.is_simple());
        assert_eq!((g.vertex_count(), g.edge_count()), (16, 24));
        assert_eq!(enumerate_hamilton_cycles(&g).len(), 6);
        let e = |l: &str| g.edge_by_label(l).unwrap();
        assert_eq!(count_through(&g, &[e("e_x"), e("e_y")], &[]).unwrap(), 0);
        assert_eq!(count_through(&g, &[e("e_x"), e("e_z")], &[]).unwrap(), 2);
        assert_eq!(count_through(&g, &[e("e_y"), e("e_z")], &[]).unwrap(), 4);
    }

    #[test]
    fn replacement_sizes() {
        for n in 0..3 {
            let g = replacement_graph(n);
            assert_eq!(g.vertex_count(), 16 + 14 * n);
            assert!(g.is_cubic() && g.is_simple() && g.is_connected());
        }
        let g1 = replacement_graph(1);
        let e = g1.edge_by_label("e_x@1").unwrap();
        let ends = g1.edge(e).ends;
        assert_eq!(g1.label(ends.0), "a@0");
        assert_eq!(g1.label(ends.1), "x@1");
    }

    #[test]
    fn small_graphs() {
        assert_eq!(enumerate_hamilton_cycles(&k4()).len(), 3);
        assert!(petersen().is_cubic());
        assert_eq!(enumerate_hamilton_cycles(&petersen()).len(), 0);
        assert_eq!(enumerate_hamilton_cycles(&cube()).len(), 6);
    }

    #[test]
    fn chains_build() {
        for name in BUILTIN_CHAINS {
            let c = builtin_chain(name).unwrap();
            assert!(c.is_cubic(), "{name}");
        }
        assert_eq!(chain_g().interface_size(), 3);
        assert_eq!(chain_ladder().interface_size(), 2);
    }
}
