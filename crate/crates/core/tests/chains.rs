use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;

use hamchain::chain::{
    end_degree, end_degrees, truncation_consistency, witness_two_cycles, ChainAnalysis, ChainError,
    CutChain, End, LimitCount,
};
use hamchain::constructions::{
    builtin_chain, chain_double_ladder, chain_g, chain_h, chain_hprime, chain_ladder,
    tutte_quotient, BUILTIN_CHAINS,
};
use hamchain::MultiGraph;

fn petgraph(g: &MultiGraph) -> UnGraph<(), ()> {
    let mut p = UnGraph::new_undirected();
    let nodes: Vec<_> = g.vertices().map(|_| p.add_node(())).collect();
    for e in g.edges() {
        p.add_edge(nodes[e.ends.0.index()], nodes[e.ends.1.index()], ());
    }
    p
}

#[test]
fn tutte_segments_are_quotients() {
    let t = petgraph(&tutte_quotient());
    for chain in [chain_g(), chain_h()] {
        for n in 0..3 {
            let s = chain.segment_minor(End::Right, n).unwrap();
            assert!(is_isomorphic(&petgraph(&s.graph), &t), "segment {n}");
        }
    }
    let hp = chain_hprime();
    for end in [End::Left, End::Right] {
        let s = hp.segment_minor(end, 1).unwrap();
        assert!(is_isomorphic(&petgraph(&s.graph), &t));
    }
}

#[test]
fn g_window_zero_is_the_quotient() {
    let w = chain_g().truncation_minor(0).unwrap();
    assert!(is_isomorphic(
        &petgraph(&w.graph),
        &petgraph(&tutte_quotient())
    ));
}

#[test]
fn window_sizes_grow_by_piece() {
    let g = chain_g();
    for k in 0..4 {
        let w = g.truncation_minor(k).unwrap();
        assert_eq!(w.graph.vertex_count(), 16 + 14 * k);
        assert!(w.graph.is_cubic());
    }
    let ladder = chain_ladder();
    for k in 0..5 {
        let w = ladder.truncation_minor(k).unwrap();
        assert!(w.graph.is_nearly_cubic() || w.graph.is_cubic());
    }
}

#[test]
fn g_brute_force_counts_grow() {
    let totals: Vec<u128> = (0..3)
        .map(|k| truncation_consistency(&chain_g(), k).unwrap())
        .inspect(|r| assert!(r.consistent))
        .map(|r| r.observed_total)
        .collect();
    assert!(totals.windows(2).all(|w| w[0] < w[1]), "{totals:?}");
}

#[test]
fn finite_chains_settle() {
    for chain in [chain_h(), chain_ladder(), chain_double_ladder()] {
        let r = ChainAnalysis::new(&chain).unwrap().count().unwrap();
        let LimitCount::Finite(k) = r.count else {
            panic!("expected a finite count, got {}", r.count)
        };
        let tail = &r.prefix_counts[r.settle_level..];
        assert!(tail.iter().all(|&c| c == k), "{:?}", r.prefix_counts);
    }
}

#[test]
fn ladder_certificates_are_distinct_and_valid() {
    let chain = chain_ladder();
    let a = ChainAnalysis::new(&chain).unwrap();
    let certs = a.certificates(16).unwrap();
    assert_eq!(certs.len(), 2);
    assert!(!certs[0].same_as(&certs[1]));
    for c in &certs {
        for depth in 0..=6 {
            a.validate(c, depth).unwrap();
        }
    }
    let with: Vec<bool> = certs
        .iter()
        .map(|c| a.splice(c, 2).unwrap().contains("e1@0"))
        .collect();
    assert_eq!(with.iter().filter(|&&b| b).count(), 1);
}

#[test]
fn double_ladder_has_one_cycle_with_two_rays() {
    let chain = chain_double_ladder();
    let a = ChainAnalysis::new(&chain).unwrap();
    let certs = a.certificates(16).unwrap();
    assert_eq!(certs.len(), 1);
    assert_eq!(certs[0].rays.len(), 2);
    for depth in 0..=4 {
        let r = a.validate(&certs[0], depth).unwrap();
        assert!(r.cut_crossings.iter().all(|&c| c == 2));
    }
}

#[test]
fn certificate_count_matches_limit_count() {
    for name in BUILTIN_CHAINS {
        let chain = builtin_chain(name).unwrap();
        let a = ChainAnalysis::new(&chain).unwrap();
        let certs = a.certificates(8).unwrap();
        match a.count().unwrap().count {
            LimitCount::Finite(k) => assert_eq!(certs.len() as u128, k, "{name}"),
            LimitCount::Zero => assert!(certs.is_empty()),
            LimitCount::Infinite => assert_eq!(certs.len(), 8, "{name}"),
        }
        for c in &certs {
            a.validate(c, 2).unwrap();
        }
    }
}

#[test]
fn g_witness_branches() {
    let r = ChainAnalysis::new(&chain_g()).unwrap().count().unwrap();
    let w = r.witness.unwrap();
    assert!(w.surviving_out_multiplicity >= 2);
    assert!(w.initial_weight > 0);
}

#[test]
fn end_degrees_of_builtins() {
    assert_eq!(end_degree(&chain_ladder()).unwrap(), 2);
    assert_eq!(end_degree(&chain_double_ladder()).unwrap(), 2);
    for chain in [chain_g(), chain_h()] {
        assert_eq!(end_degree(&chain).unwrap(), 3);
    }
    let both = end_degrees(&chain_hprime()).unwrap();
    assert_eq!(both.len(), 2);
    assert!(both.iter().all(|d| d.degree == 3));
}

#[test]
fn one_ended_chains_have_two_witness_cycles() {
    for chain in [chain_g(), chain_h(), chain_ladder()] {
        let (x, y) = witness_two_cycles(&chain).unwrap();
        assert!(!x.same_as(&y));
    }
    assert!(matches!(
        witness_two_cycles(&chain_hprime()),
        Err(ChainError::ModeMismatch(_))
    ));
}

#[test]
fn json_round_trip_preserves_analysis() {
    for name in BUILTIN_CHAINS {
        let chain = builtin_chain(name).unwrap();
        let back = CutChain::from_json(&chain.to_json()).unwrap();
        let a = ChainAnalysis::new(&chain).unwrap().count().unwrap();
        let b = ChainAnalysis::new(&back).unwrap().count().unwrap();
        assert_eq!(a.count, b.count, "{name}");
    }
}
