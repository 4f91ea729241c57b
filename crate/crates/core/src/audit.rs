//! Seeded property audits over sampled graphs: Smith's and Thomason's
//! theorems, the incidence parity lemmas and the lollipop walk.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{EdgeId, MultiGraph};
use crate::hamilton::{
    check_hamilton_cycle, enumerate_hamilton_cycles, first_hamilton_cycle, parity_from_cycles,
    second_cycle_lollipop, HamiltonCycle,
};
use crate::incidence::{check_pair_sum_even, check_uniform_parity, incidence_from_cycles};
use crate::sample::{random_cubic, random_odd_degree};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub audit: String,
    pub seed: u64,
    pub instances: usize,
    /// Instances with at least one Hamilton cycle.
    pub hamiltonian: usize,
    pub violations: Vec<String>,
    /// Slowest single check, in milliseconds.
    pub max_millis: f64,
}

impl AuditReport {
    fn new(audit: &str, seed: u64) -> Self {
        AuditReport {
            audit: audit.to_owned(),
            seed,
            instances: 0,
            hamiltonian: 0,
            violations: Vec::new(),
            max_millis: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} audit (seed {}): {} instances, {} Hamiltonian, {} violations, slowest {:.2} ms\n",
            self.audit,
            self.seed,
            self.instances,
            self.hamiltonian,
            self.violations.len(),
            self.max_millis
        );
        for v in &self.violations {
            out.push_str(&format!("  {v}\n"));
        }
        out
    }
}

fn even_order<R: Rng>(rng: &mut R, min: usize, max: usize) -> usize {
    2 * rng.gen_range(min / 2..=max / 2)
}

/// Cubic Hamiltonian graph with at most `max_vertices` vertices, by
/// rejection.
fn hamiltonian_cubic<R: Rng>(
    rng: &mut R,
    min_vertices: usize,
    max_vertices: usize,
) -> (MultiGraph, HamiltonCycle) {
    loop {
        let g = random_cubic(even_order(rng, min_vertices, max_vertices), rng);
        if let Some(c) = first_hamilton_cycle(&g) {
            return (g, c);
        }
    }
}

/// Every sampled connected cubic Hamiltonian graph has at least three
/// Hamilton cycles, hence is never uniquely Hamiltonian.
pub fn audit_smith(seed: u64, count: usize, max_vertices: usize) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AuditReport::new("smith", seed);
    for i in 0..count {
        let g = random_cubic(even_order(&mut rng, 4, max_vertices), &mut rng);
        let start = Instant::now();
        let cycles = enumerate_hamilton_cycles(&g);
        report.max_millis = report.max_millis.max(start.elapsed().as_secs_f64() * 1e3);
        report.instances += 1;
        if cycles.is_empty() {
            continue;
        }
        report.hamiltonian += 1;
        if cycles.len() < 3 {
            report.violations.push(format!(
                "instance {i} ({} vertices) has {} Hamilton cycles",
                g.vertex_count(),
                cycles.len()
            ));
        }
    }
    report
}

/// In sampled simple graphs with all degrees odd, every edge lies on an
/// even number of Hamilton cycles, and a Hamiltonian one has at least three.
pub fn audit_thomason(seed: u64, count: usize, max_vertices: usize) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AuditReport::new("thomason", seed);
    for i in 0..count {
        let n = even_order(&mut rng, 4, max_vertices);
        let p = rng.gen_range(0.2..0.6);
        let g = random_odd_degree(n, p, &mut rng);
        let start = Instant::now();
        let cycles = enumerate_hamilton_cycles(&g);
        report.max_millis = report.max_millis.max(start.elapsed().as_secs_f64() * 1e3);
        report.instances += 1;
        let parity = parity_from_cycles(&g, &cycles);
        for e in parity.violations() {
            report.violations.push(format!(
                "instance {i}: edge {} lies on {} Hamilton cycles",
                g.edge_name(e),
                parity.counts[e.index()]
            ));
        }
        if !cycles.is_empty() {
            report.hamiltonian += 1;
            if cycles.len() < 3 {
                report.violations.push(format!(
                    "instance {i} has only {} Hamilton cycles",
                    cycles.len()
                ));
            }
        }
    }
    report
}

/// Pair-sum and uniform-parity lemmas of `H(G, v, w)` for every pair of
/// distinct anchors, plus the identity `d(p) + d(q) = #cycles through p ∩ q`.
pub fn parity_violations(g: &MultiGraph) -> Vec<String> {
    let cycles = enumerate_hamilton_cycles(g);
    let through = parity_from_cycles(g, &cycles);
    let mut out = Vec::new();
    let vs: Vec<_> = g.vertices().collect();
    for (i, &v) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            let h = match incidence_from_cycles(g, v, w, &cycles) {
                Ok(h) => h,
                Err(e) => {
                    out.push(format!("H({}, {}): {e}", g.label(v), g.label(w)));
                    continue;
                }
            };
            let name = format!("H({}, {})", g.label(v), g.label(w));
            if !check_pair_sum_even(&h).all_even {
                out.push(format!("{name}: odd pair sum"));
            }
            if !check_uniform_parity(&h).uniform() {
                out.push(format!("{name}: mixed degree parity"));
            }
            let left = h.left_degrees();
            for p in 0..h.left_states.len() {
                for q in p + 1..h.left_states.len() {
                    let Some(e) = h.left_states[p].shared(&h.left_states[q]) else {
                        continue;
                    };
                    if left[p] + left[q] != through.counts[e.index()] {
                        out.push(format!(
                            "{name}: degree identity fails at {}",
                            g.edge_name(e)
                        ));
                    }
                }
            }
        }
    }
    out
}

pub fn audit_parity(seed: u64, count: usize, max_vertices: usize) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AuditReport::new("parity", seed);
    for i in 0..count {
        let (g, _) = hamiltonian_cubic(&mut rng, 4, max_vertices);
        let start = Instant::now();
        let found = parity_violations(&g);
        report.max_millis = report.max_millis.max(start.elapsed().as_secs_f64() * 1e3);
        report.instances += 1;
        report.hamiltonian += 1;
        report
            .violations
            .extend(found.into_iter().map(|v| format!("instance {i}: {v}")));
    }
    report
}

/// Runs the lollipop walk from a known Hamilton cycle through a random edge
/// of it and checks the answer is a different Hamilton cycle through that
/// edge.
pub fn audit_lollipop(seed: u64, count: usize, max_vertices: usize) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AuditReport::new("lollipop", seed);
    for i in 0..count {
        let (g, cycle) = hamiltonian_cubic(&mut rng, 6.min(max_vertices), max_vertices);
        let e: EdgeId = cycle.edges()[rng.gen_range(0..cycle.len())];
        let start = Instant::now();
        let result = second_cycle_lollipop(&g, &cycle, e);
        report.max_millis = report.max_millis.max(start.elapsed().as_secs_f64() * 1e3);
        report.instances += 1;
        report.hamiltonian += 1;
        match result {
            Ok(other) => {
                if other == cycle
                    || !other.contains(e)
                    || check_hamilton_cycle(&g, other.edges()).is_err()
                {
                    report
                        .violations
                        .push(format!("instance {i}: invalid second cycle"));
                }
            }
            Err(err) => report.violations.push(format!("instance {i}: {err}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audits_pass() {
        assert!(audit_smith(1, 10, 10).passed());
        assert!(audit_thomason(1, 10, 8).passed());
        assert!(audit_parity(1, 5, 10).passed());
        assert!(audit_lollipop(1, 10, 12).passed());
    }

    #[test]
    fn identity_on_k4() {
        assert!(parity_violations(&crate::constructions::k4()).is_empty());
    }
}
