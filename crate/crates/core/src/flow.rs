//! Augmenting-path max-flow over small integer networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Arc `from -> to` with its residual partner of capacity 0.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: usize) {
        self.push_pair(from, to, cap, 0);
    }

    /// Undirected edge: both directions share one unit of capacity each way.
    pub(crate) fn add_undirected(&mut self, a: usize, b: usize, cap: usize) {
        self.push_pair(a, b, cap, cap);
    }

    fn push_pair(&mut self, a: usize, b: usize, cap_ab: usize, cap_ba: usize) {
        self.adj[a].push(self.arcs.len());
        self.arcs.push(Arc { to: b, cap: cap_ab });
        self.adj[b].push(self.arcs.len());
        self.arcs.push(Arc { to: a, cap: cap_ba });
    }

    /// Edmonds-Karp; the networks built here are tiny and mostly unit capacity.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    reached = true;
                    break;
                }
                for &a in &self.adj[u] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && arc.to != source && via[arc.to] == usize::MAX {
                        via[arc.to] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if !reached {
                return total;
            }
            let mut bottleneck = usize::MAX;
            let mut v = sink;
            while v != source {
                let a = via[v];
                bottleneck = bottleneck.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let a = via[v];
                self.arcs[a].cap -= bottleneck;
                self.arcs[a ^ 1].cap += bottleneck;
                v = self.arcs[a ^ 1].to;
            }
            total += bottleneck;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut net = FlowNetwork::new(4);
        net.add_undirected(0, 1, 1);
        net.add_undirected(0, 2, 1);
        net.add_undirected(1, 3, 1);
        net.add_undirected(2, 3, 1);
        net.add_undirected(1, 2, 1);
        assert_eq!(net.max_flow(0, 3), 2);
    }
}
