use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hamchain::audit::parity_violations;
use hamchain::hamilton::{
    check_hamilton_cycle, count_through, enumerate_hamilton_cycles,
    enumerate_hamilton_cycles_parallel, parity_from_cycles, second_cycle_lollipop,
};
use hamchain::incidence::incidence_from_cycles;
use hamchain::sample::{random_cubic, random_odd_degree};
use hamchain::{build_graph, EdgeSpec, MultiGraph};

fn graph(n: usize, pairs: &[(usize, usize)]) -> MultiGraph {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let specs: Vec<EdgeSpec> = pairs
        .iter()
        .map(|&(a, b)| EdgeSpec::new(None, &labels[a % n], &labels[b % n]))
        .collect();
    build_graph(&labels, &specs).unwrap()
}

/// Counts `n`-edge subsets that are connected and 2-regular, by brute force
/// over the raw endpoint list.
fn subset_oracle(n: usize, pairs: &[(usize, usize)]) -> usize {
    let ends: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a % n, b % n)).collect();
    let m = ends.len();
    let mut found = 0;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ends[i])
            .collect();
        let mut deg = vec![0; n];
        for &(a, b) in &chosen {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d != 2) {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(a, b) in &chosen {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        if (0..n).all(|v| find(&mut parent, v) == root) {
            found += 1;
        }
    }
    found
}

fn multigraph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=14)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_matches_subset_oracle((n, pairs) in multigraph()) {
        let g = graph(n, &pairs);
        let cycles = enumerate_hamilton_cycles(&g);
        prop_assert_eq!(cycles.len(), subset_oracle(n, &pairs));
        for c in &cycles {
            prop_assert!(check_hamilton_cycle(&g, c.edges()).is_ok());
        }
        prop_assert_eq!(enumerate_hamilton_cycles_parallel(&g, 3).unwrap(), cycles);
    }

    #[test]
    fn through_counts_partition((n, pairs) in multigraph()) {
        let g = graph(n, &pairs);
        let total = enumerate_hamilton_cycles(&g).len() as u64;
        if let Some(e) = g.edges().first().map(|r| r.id) {
            let with = count_through(&g, &[e], &[]).unwrap();
            let without = count_through(&g, &[], &[e]).unwrap();
            prop_assert_eq!(with + without, total);
        }
    }

    #[test]
    fn cubic_parity_lemmas(seed in any::<u64>(), half in 2usize..=6) {
        let g = random_cubic(2 * half, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(parity_violations(&g).is_empty());
        let cycles = enumerate_hamilton_cycles(&g);
        prop_assert!(parity_from_cycles(&g, &cycles).all_even());
        let vs: Vec<_> = g.vertices().collect();
        let h = incidence_from_cycles(&g, vs[0], vs[1], &cycles).unwrap();
        prop_assert_eq!(h.total(), cycles.len() as u64);
    }

    #[test]
    fn odd_degree_edges_on_even_counts(seed in any::<u64>(), half in 1usize..=5) {
        let g = random_odd_degree(2 * half, 0.4, &mut ChaCha8Rng::seed_from_u64(seed));
        let cycles = enumerate_hamilton_cycles(&g);
        prop_assert!(parity_from_cycles(&g, &cycles).all_even());
    }

    #[test]
    fn lollipop_finds_another_cycle(seed in any::<u64>(), half in 2usize..=8, pick in any::<usize>()) {
        let g = random_cubic(2 * half, &mut ChaCha8Rng::seed_from_u64(seed));
        let cycles = enumerate_hamilton_cycles(&g);
        prop_assume!(!cycles.is_empty());
        let c = &cycles[pick % cycles.len()];
        let e = c.edges()[pick % c.len()];
        let other = second_cycle_lollipop(&g, c, e).unwrap();
        prop_assert!(&other != c);
        prop_assert!(other.contains(e));
        prop_assert!(cycles.contains(&other));
    }
}
