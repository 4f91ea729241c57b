//! Transfer layers, survival, limit counting and certificates for cut-chains.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{at, ChainError, ChainMode, CutChain, End, Window};
use crate::graph::{EdgeId, MultiGraph};
use crate::hamilton::{check_hamilton_cycle, enumerate_hamilton_cycles, HamiltonCycle};
use crate::incidence::incidence_from_cycles;

/// Pair states over an ordered cut of `size` edges: `(i, j)` with `i < j`,
/// in lexicographic order.
pub fn pair_indices(size: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            out.push((i, j));
        }
    }
    out
}

pub fn render_state(labels: &[String], s: usize) -> String {
    let (i, j) = pair_indices(labels.len())[s];
    format!("{{{},{}}}", labels[i], labels[j])
}

fn render_states(labels: &[String]) -> Vec<String> {
    (0..pair_indices(labels.len()).len())
        .map(|s| render_state(labels, s))
        .collect()
}

/// State index of the two cut edges `edges`, whose labels are `label@pos`
/// for labels in `labels`.
fn state_of(
    g: &MultiGraph,
    edges: &[EdgeId],
    labels: &[String],
    pos: i64,
) -> Result<usize, ChainError> {
    if edges.len() != 2 {
        return Err(ChainError::Defect(format!(
            "a Hamilton cycle uses {} edges at a dummy",
            edges.len()
        )));
    }
    let mut idx = Vec::with_capacity(2);
    for &e in edges {
        let name = g.edge_name(e);
        let i = labels
            .iter()
            .position(|l| at(l, pos) == name)
            .ok_or_else(|| {
                ChainError::Defect(format!("edge `{name}` is not a cut edge at {pos}"))
            })?;
        idx.push(i);
    }
    idx.sort_unstable();
    Ok(pair_indices(labels.len())
        .iter()
        .position(|&p| p == (idx[0], idx[1]))
        .expect("distinct cut edges"))
}

fn add(a: u128, b: u128) -> Result<u128, ChainError> {
    a.checked_add(b).ok_or(ChainError::Overflow)
}

fn mul(a: u128, b: u128) -> Result<u128, ChainError> {
    a.checked_mul(b).ok_or(ChainError::Overflow)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Incidence table of one segment minor, with rows indexed by pair states of
/// the cut in front of the piece and columns by those of the cut behind it.
#[derive(Debug, Clone, Serialize)]
pub struct TransferLayer {
    pub end: End,
    pub level: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
    /// `(row, col)` of each segment Hamilton cycle, in enumeration order.
    pub cycle_states: Vec<(usize, usize)>,
    #[serde(skip)]
    cycles: Vec<HamiltonCycle>,
}

pub fn transfer_layer(chain: &CutChain, end: End, n: usize) -> Result<TransferLayer, ChainError> {
    let seg = chain.segment_minor(end, n)?;
    if !seg.graph.is_simple() {
        return Err(ChainError::NonSimpleSegment { end, level: n });
    }
    let g = &seg.graph;
    let rows = chain.cut_labels(end, n)?;
    let cols = chain.cut_labels(end, n + 1)?;
    let (pos, next) = (CutChain::position(end, n), CutChain::position(end, n + 1));
    let cycles = enumerate_hamilton_cycles(g);
    let h = incidence_from_cycles(g, seg.alpha, seg.beta, &cycles)?;
    let row_of = h
        .left_states
        .iter()
        .map(|p| state_of(g, &[p.first, p.second], rows, pos))
        .collect::<Result<Vec<_>, _>>()?;
    let col_of = h
        .right_states
        .iter()
        .map(|q| state_of(g, &[q.first, q.second], cols, next))
        .collect::<Result<Vec<_>, _>>()?;
    let mut matrix = vec![vec![0u64; col_of.len()]; row_of.len()];
    for (i, row) in h.multiplicity.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            matrix[row_of[i]][col_of[j]] = m;
        }
    }
    let cycle_states = cycles
        .iter()
        .map(|c| {
            Ok((
                state_of(g, &c.edges_at(g, seg.alpha), rows, pos)?,
                state_of(g, &c.edges_at(g, seg.beta), cols, next)?,
            ))
        })
        .collect::<Result<Vec<_>, ChainError>>()?;
    Ok(TransferLayer {
        end,
        level: n,
        rows: render_states(rows),
        cols: render_states(cols),
        matrix,
        cycle_states,
        cycles,
    })
}

/// Limit Hamilton cycle count of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", content = "value")]
pub enum LimitCount {
    Zero,
    Finite(u128),
    Infinite,
}

impl fmt::Display for LimitCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitCount::Zero => f.write_str("Zero"),
            LimitCount::Finite(k) => write!(f, "Finite({k})"),
            LimitCount::Infinite => f.write_str("Infinite"),
        }
    }
}

/// A reachable surviving state that recurs with period and has at least two
/// surviving continuations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchingWitness {
    pub end: End,
    pub level: usize,
    pub state: usize,
    pub state_label: String,
    /// Its full transfer row.
    pub row: Vec<u64>,
    pub out_multiplicity: u64,
    pub surviving_out_multiplicity: u64,
    /// Number of surviving prefixes arriving at this state at `level`.
    pub initial_weight: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitResult {
    pub count: LimitCount,
    pub witness: Option<BranchingWitness>,
    /// Level from which the reachable state sets repeat periodically; the
    /// count is read off at this level.
    pub settle_level: usize,
    /// Length of the repeating stretch of reachable sets.
    pub cycle_length: usize,
    /// `N_k` for `k = 0..=settle_level + cycle_length`.
    pub prefix_counts: Vec<u128>,
}

/// Surviving states per level of the pre-period and period of one tail.
#[derive(Debug, Clone, Serialize)]
pub struct SurvivalSets {
    pub end: End,
    pub pre_period: usize,
    pub period: usize,
    /// `alive[n][s]` for levels `n < pre_period + period`; later levels
    /// repeat the period.
    pub alive: Vec<Vec<bool>>,
    pub labels: Vec<Vec<String>>,
}

impl SurvivalSets {
    pub fn alive_labels(&self, n: usize) -> Vec<&str> {
        self.labels[n]
            .iter()
            .zip(&self.alive[n])
            .filter(|(_, a)| **a)
            .map(|(l, _)| l.as_str())
            .collect()
    }
}

/// One choice of a segment Hamilton cycle at a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Choice {
    pub level: usize,
    pub cycle: usize,
    pub from: usize,
    pub to: usize,
}

/// An eventually periodic choice sequence along one tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayCertificate {
    pub end: End,
    pub start: usize,
    pub prefix: Vec<Choice>,
    pub repeat: Vec<Choice>,
}

impl RayCertificate {
    pub fn choice(&self, n: usize) -> Choice {
        if n < self.prefix.len() {
            self.prefix[n]
        } else {
            let c = self.repeat[(n - self.prefix.len()) % self.repeat.len()];
            Choice { level: n, ..c }
        }
    }

    fn same_as(&self, other: &RayCertificate) -> bool {
        let (a, b) = (self.repeat.len(), other.repeat.len());
        let horizon = self.prefix.len().max(other.prefix.len()) + a / gcd(a, b) * b;
        self.end == other.end
            && self.start == other.start
            && (0..horizon).all(|n| self.choice(n).cycle == other.choice(n).cycle)
    }
}

/// A limit Hamilton cycle: a Hamilton cycle of the level-0 truncation minor
/// together with one ray per end continuing its pair states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitCycleCertificate {
    pub anchor_cycle: usize,
    pub rays: Vec<RayCertificate>,
}

impl LimitCycleCertificate {
    pub fn same_as(&self, other: &LimitCycleCertificate) -> bool {
        self.anchor_cycle == other.anchor_cycle
            && self.rays.len() == other.rays.len()
            && self.rays.iter().zip(&other.rays).all(|(a, b)| a.same_as(b))
    }

    pub fn render(&self) -> String {
        let mut out = format!("anchor cycle {}", self.anchor_cycle);
        for r in &self.rays {
            let show = |cs: &[Choice]| {
                cs.iter()
                    .map(|c| c.cycle.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            out.push_str(&format!(
                "; {} ray [{}] ({})*",
                r.end,
                show(&r.prefix),
                show(&r.repeat)
            ));
        }
        out
    }
}

/// Outcome of splicing a certificate into a truncation minor.
#[derive(Debug, Clone, Serialize)]
pub struct SpliceReport {
    pub depth: usize,
    pub edges: Vec<String>,
    /// Cycle edges in each materialized cut, in window cut order.
    pub cut_crossings: Vec<usize>,
}

#[derive(Debug, Clone)]
struct TailModel {
    end: End,
    pre: usize,
    period: usize,
    layers: Vec<TransferLayer>,
    alive: Vec<Vec<bool>>,
}

struct RayAnalysis {
    count: LimitCount,
    witness: Option<BranchingWitness>,
    settle: usize,
    cycle_len: usize,
}

impl TailModel {
    fn build(chain: &CutChain, end: End) -> Result<Self, ChainError> {
        let tail = chain.tail(end)?;
        let pre = tail.pre_period.len();
        let period = tail.period.len();
        let layers = (0..pre + period)
            .into_par_iter()
            .map(|n| transfer_layer(chain, end, n))
            .collect::<Result<Vec<_>, _>>()?;
        let mut model = TailModel {
            end,
            pre,
            period,
            alive: layers.iter().map(|l| vec![true; l.rows.len()]).collect(),
            layers,
        };
        model.fixed_point();
        Ok(model)
    }

    fn idx(&self, n: usize) -> usize {
        if n < self.pre {
            n
        } else {
            self.pre + (n - self.pre) % self.period
        }
    }

    fn layer(&self, n: usize) -> &TransferLayer {
        &self.layers[self.idx(n)]
    }

    fn alive(&self, n: usize, s: usize) -> bool {
        self.alive[self.idx(n)][s]
    }

    fn states(&self, n: usize) -> usize {
        self.layer(n).rows.len()
    }

    /// Greatest fixed point on the period, then unrolled through the
    /// pre-period.
    fn fixed_point(&mut self) {
        let total = self.pre + self.period;
        let next = |i: usize| if i + 1 < total { i + 1 } else { self.pre };
        let step = |alive: &Vec<Vec<bool>>, i: usize| -> Vec<bool> {
            let m = &self.layers[i].matrix;
            (0..m.len())
                .map(|s| alive[i][s] && (0..m[s].len()).any(|t| m[s][t] > 0 && alive[next(i)][t]))
                .collect()
        };
        let mut alive = self.alive.clone();
        loop {
            let mut changed = false;
            for i in (self.pre..total).rev() {
                let row = step(&alive, i);
                if row != alive[i] {
                    alive[i] = row;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in (0..self.pre).rev() {
            alive[i] = step(&alive, i);
        }
        self.alive = alive;
    }

    fn survival(&self) -> SurvivalSets {
        SurvivalSets {
            end: self.end,
            pre_period: self.pre,
            period: self.period,
            alive: self.alive.clone(),
            labels: self.layers.iter().map(|l| l.rows.clone()).collect(),
        }
    }

    fn seed(&self, init: &[u128]) -> Vec<u128> {
        init.iter()
            .enumerate()
            .map(|(s, &w)| if self.alive(0, s) { w } else { 0 })
            .collect()
    }

    /// Surviving prefix weights at levels `0..=upto`.
    fn weights(&self, init: &[u128], upto: usize) -> Result<Vec<Vec<u128>>, ChainError> {
        let mut out = vec![self.seed(init)];
        for n in 0..upto {
            let m = &self.layer(n).matrix;
            let cur = &out[n];
            let mut next = vec![0u128; self.states(n + 1)];
            for (t, slot) in next.iter_mut().enumerate() {
                if !self.alive(n + 1, t) {
                    continue;
                }
                for (s, &w) in cur.iter().enumerate() {
                    if w > 0 && m[s][t] > 0 {
                        *slot = add(*slot, mul(w, m[s][t] as u128)?)?;
                    }
                }
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Raw product `init · M_0 · ... · M_{k-1}`, without survival pruning.
    fn raw_product(&self, init: &[u128], k: usize) -> Result<Vec<u128>, ChainError> {
        let mut v = init.to_vec();
        for n in 0..k {
            let m = &self.layer(n).matrix;
            let mut next = vec![0u128; self.states(n + 1)];
            for (s, &w) in v.iter().enumerate() {
                for (t, slot) in next.iter_mut().enumerate() {
                    *slot = add(*slot, mul(w, m[s][t] as u128)?)?;
                }
            }
            v = next;
        }
        Ok(v)
    }

    fn surviving_out(&self, n: usize, s: usize) -> u64 {
        let row = &self.layer(n).matrix[s];
        (0..row.len())
            .filter(|&t| self.alive(n + 1, t))
            .map(|t| row[t])
            .sum()
    }

    /// Reachable surviving sets from `init` until they repeat, then the
    /// branching check inside the repeating stretch.
    fn analyze(&self, init: &[u128]) -> Result<RayAnalysis, ChainError> {
        let mut reach: Vec<bool> = self.seed(init).iter().map(|&w| w > 0).collect();
        if !reach.iter().any(|&r| r) {
            return Ok(RayAnalysis {
                count: LimitCount::Zero,
                witness: None,
                settle: 0,
                cycle_len: 1,
            });
        }
        let mut history = vec![reach.clone()];
        let mut seen: HashMap<(usize, Vec<bool>), usize> = HashMap::new();
        let mut n = 0;
        let (start, stop) = loop {
            if n >= self.pre {
                if let Some(&m) = seen.get(&(self.idx(n), reach.clone())) {
                    break (m, n);
                }
                seen.insert((self.idx(n), reach.clone()), n);
            }
            let m = &self.layer(n).matrix;
            let next: Vec<bool> = (0..self.states(n + 1))
                .map(|t| self.alive(n + 1, t) && (0..reach.len()).any(|s| reach[s] && m[s][t] > 0))
                .collect();
            history.push(next.clone());
            reach = next;
            n += 1;
        };
        let max_states = self.layers.iter().map(|l| l.rows.len()).max().unwrap_or(1);
        let settle = start.max(self.pre + self.period * max_states);
        let cycle_len = stop - start;
        let mut witness = None;
        'search: for (m, set) in history.iter().enumerate().take(stop).skip(start) {
            for s in (0..set.len()).filter(|&s| set[s]) {
                let surviving = self.surviving_out(m, s);
                if surviving >= 2 {
                    let weights = self.weights(init, m)?;
                    let layer = self.layer(m);
                    witness = Some(BranchingWitness {
                        end: self.end,
                        level: m,
                        state: s,
                        state_label: layer.rows[s].clone(),
                        row: layer.matrix[s].clone(),
                        out_multiplicity: layer.matrix[s].iter().sum(),
                        surviving_out_multiplicity: surviving,
                        initial_weight: weights[m][s],
                    });
                    break 'search;
                }
            }
        }
        let weights = self.weights(init, settle + cycle_len)?;
        let total = |k: usize| weights[k].iter().try_fold(0u128, |a, &b| add(a, b));
        let (now, later) = (total(settle)?, total(settle + cycle_len)?);
        let count = if witness.is_some() {
            if later <= now {
                return Err(ChainError::Defect(format!(
                    "branching recurs but N stays at {now} over one period"
                )));
            }
            LimitCount::Infinite
        } else {
            if later != now {
                return Err(ChainError::Defect(format!(
                    "no branching but N grows from {now} to {later}"
                )));
            }
            LimitCount::Finite(now)
        };
        Ok(RayAnalysis {
            count,
            witness,
            settle,
            cycle_len,
        })
    }

    fn expansions(&self, n: usize, s: usize) -> impl Iterator<Item = Choice> + '_ {
        self.layer(n)
            .cycle_states
            .iter()
            .enumerate()
            .filter(move |(_, &(r, c))| r == s && self.alive(n + 1, c))
            .map(move |(i, &(r, c))| Choice {
                level: n,
                cycle: i,
                from: r,
                to: c,
            })
    }

    /// Up to `limit` distinct rays from `start`, branching freely for the
    /// first `min_depth..=max_depth` levels and then taking the smallest
    /// surviving cycle until the (level residue, state) pair repeats.
    fn rays(
        &self,
        start: usize,
        limit: usize,
        min_depth: usize,
        max_depth: usize,
    ) -> Vec<RayCertificate> {
        if limit == 0 || !self.alive(0, start) {
            return Vec::new();
        }
        let mut frontier: Vec<(Vec<Choice>, usize)> = vec![(Vec::new(), start)];
        let mut depth = 0;
        while depth < max_depth && !(depth >= min_depth && frontier.len() >= limit) {
            let mut next = Vec::new();
            for (prefix, s) in &frontier {
                for c in self.expansions(depth, *s) {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push((p, c.to));
                }
            }
            next.truncate(limit.max(frontier.len()));
            frontier = next;
            depth += 1;
        }
        frontier.truncate(limit);
        frontier
            .into_iter()
            .map(|(choices, state)| self.close(start, choices, state))
            .collect()
    }

    fn close(&self, start: usize, mut choices: Vec<Choice>, mut state: usize) -> RayCertificate {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut n = choices.len();
        loop {
            if n >= self.pre {
                if let Some(&m) = seen.get(&(self.idx(n), state)) {
                    let repeat = choices.split_off(m);
                    return RayCertificate {
                        end: self.end,
                        start,
                        prefix: choices,
                        repeat,
                    };
                }
                seen.insert((self.idx(n), state), n);
            }
            let c = self
                .expansions(n, state)
                .next()
                .expect("surviving state has a surviving continuation");
            choices.push(c);
            state = c.to;
            n += 1;
        }
    }
}

/// Layers, survival sets and anchor data of a chain, computed once.
#[derive(Debug, Clone)]
pub struct ChainAnalysis<'c> {
    chain: &'c CutChain,
    tails: Vec<TailModel>,
    anchor: Window,
    anchor_cycles: Vec<HamiltonCycle>,
    /// Per anchor cycle, its level-0 state at each end in `chain.ends()` order.
    anchor_states: Vec<Vec<usize>>,
}

impl<'c> ChainAnalysis<'c> {
    pub fn new(chain: &'c CutChain) -> Result<Self, ChainError> {
        let tails = chain
            .ends()
            .into_iter()
            .map(|end| TailModel::build(chain, end))
            .collect::<Result<Vec<_>, _>>()?;
        let anchor = chain.truncation_minor(0)?;
        let anchor_cycles = enumerate_hamilton_cycles(&anchor.graph);
        let anchor_states = anchor_cycles
            .iter()
            .map(|c| {
                chain
                    .ends()
                    .into_iter()
                    .map(|end| {
                        let d = anchor.dummy(end);
                        state_of(
                            &anchor.graph,
                            &c.edges_at(&anchor.graph, d),
                            chain.cut_labels(end, 0)?,
                            CutChain::position(end, 0),
                        )
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainAnalysis {
            chain,
            tails,
            anchor,
            anchor_cycles,
            anchor_states,
        })
    }

    pub fn chain(&self) -> &CutChain {
        self.chain
    }

    fn tail(&self, end: End) -> &TailModel {
        self.tails
            .iter()
            .find(|t| t.end == end)
            .expect("analysis covers every end")
    }

    fn end_slot(&self, end: End) -> usize {
        self.tails
            .iter()
            .position(|t| t.end == end)
            .expect("end exists")
    }

    /// Transfer layer at level `n`; levels past the pre-period and first
    /// period reuse the periodic tables.
    pub fn layer(&self, end: End, n: usize) -> Result<&TransferLayer, ChainError> {
        self.chain.tail(end)?;
        Ok(self.tail(end).layer(n))
    }

    /// The distinct layers of every tail (pre-period then one period).
    pub fn layers(&self) -> Vec<&TransferLayer> {
        self.tails.iter().flat_map(|t| t.layers.iter()).collect()
    }

    pub fn anchor_minor(&self) -> &Window {
        &self.anchor
    }

    pub fn anchor_cycles(&self) -> &[HamiltonCycle] {
        &self.anchor_cycles
    }

    pub fn state_labels(&self, end: End, n: usize) -> Result<Vec<String>, ChainError> {
        Ok(render_states(self.chain.cut_labels(end, n)?))
    }

    /// Hamilton cycles of the level-0 truncation minor per pair state at the
    /// dummy (one-ended chains).
    pub fn initial_vector(&self) -> Result<Vec<u64>, ChainError> {
        if self.chain.mode() != ChainMode::OneEnded {
            return Err(ChainError::ModeMismatch("one-ended"));
        }
        let mut v = vec![0u64; self.tails[0].states(0)];
        for s in &self.anchor_states {
            v[s[0]] += 1;
        }
        Ok(v)
    }

    /// Hamilton cycles of the central minor per (left state, right state).
    pub fn central_matrix(&self) -> Result<Vec<Vec<u64>>, ChainError> {
        if self.chain.mode() != ChainMode::TwoEnded {
            return Err(ChainError::ModeMismatch("two-ended"));
        }
        let (l, r) = (self.end_slot(End::Left), self.end_slot(End::Right));
        let mut m = vec![vec![0u64; self.tails[r].states(0)]; self.tails[l].states(0)];
        for s in &self.anchor_states {
            m[s[l]][s[r]] += 1;
        }
        Ok(m)
    }

    pub fn survival(&self) -> Vec<SurvivalSets> {
        self.tails.iter().map(TailModel::survival).collect()
    }

    fn unit(&self, end: End, p: usize) -> Vec<u128> {
        let mut v = vec![0u128; self.tail(end).states(0)];
        v[p] = 1;
        v
    }

    pub fn count(&self) -> Result<LimitResult, ChainError> {
        match self.chain.mode() {
            ChainMode::OneEnded => {
                let tail = &self.tails[0];
                let init: Vec<u128> = self.initial_vector()?.iter().map(|&x| x as u128).collect();
                let ra = tail.analyze(&init)?;
                let weights = tail.weights(&init, ra.settle + ra.cycle_len)?;
                let prefix_counts = weights
                    .iter()
                    .map(|w| w.iter().try_fold(0u128, |a, &b| add(a, b)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(LimitResult {
                    count: ra.count,
                    witness: ra.witness,
                    settle_level: ra.settle,
                    cycle_length: ra.cycle_len,
                    prefix_counts,
                })
            }
            ChainMode::TwoEnded => self.count_two_ended(),
        }
    }

    fn count_two_ended(&self) -> Result<LimitResult, ChainError> {
        let c = self.central_matrix()?;
        let (left, right) = (self.tail(End::Left), self.tail(End::Right));
        let per_state = |t: &TailModel, end: End| {
            (0..t.states(0))
                .map(|p| t.analyze(&self.unit(end, p)))
                .collect::<Result<Vec<_>, _>>()
        };
        let la = per_state(left, End::Left)?;
        let ra = per_state(right, End::Right)?;
        let mut total = 0u128;
        let mut witness = None;
        let mut infinite = false;
        let mut settle = 0;
        let mut cycle_len = 1;
        for (pl, row) in c.iter().enumerate() {
            for (pr, &m) in row.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let (a, b) = (&la[pl], &ra[pr]);
                if a.count == LimitCount::Zero || b.count == LimitCount::Zero {
                    continue;
                }
                settle = settle.max(a.settle).max(b.settle);
                for len in [a.cycle_len, b.cycle_len] {
                    cycle_len = cycle_len / gcd(cycle_len, len) * len;
                }
                match (a.count, b.count) {
                    (LimitCount::Finite(x), LimitCount::Finite(y)) => {
                        total = add(total, mul(m as u128, mul(x, y)?)?)?;
                    }
                    _ => {
                        infinite = true;
                        if witness.is_none() {
                            witness = a.witness.clone().or_else(|| b.witness.clone());
                        }
                    }
                }
            }
        }
        let upto = settle + cycle_len;
        let totals = |t: &TailModel, end: End| {
            (0..t.states(0))
                .map(|p| {
                    t.weights(&self.unit(end, p), upto)?
                        .iter()
                        .map(|w| w.iter().try_fold(0u128, |a, &b| add(a, b)))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, ChainError>>()
        };
        let (nl, nr) = (totals(left, End::Left)?, totals(right, End::Right)?);
        let mut prefix_counts = Vec::with_capacity(upto + 1);
        for k in 0..=upto {
            let mut n = 0u128;
            for (pl, row) in c.iter().enumerate() {
                for (pr, &m) in row.iter().enumerate() {
                    n = add(n, mul(m as u128, mul(nl[pl][k], nr[pr][k])?)?)?;
                }
            }
            prefix_counts.push(n);
        }
        let count = if infinite {
            LimitCount::Infinite
        } else if total == 0 {
            LimitCount::Zero
        } else {
            if prefix_counts[settle] != total {
                return Err(ChainError::Defect(format!(
                    "two-ended count {total} disagrees with N = {}",
                    prefix_counts[settle]
                )));
            }
            LimitCount::Finite(total)
        };
        Ok(LimitResult {
            count,
            witness,
            settle_level: settle,
            cycle_length: cycle_len,
            prefix_counts,
        })
    }

    /// Up to `limit` distinct limit-cycle certificates, anchor cycles in
    /// enumeration order and rays in order of their first differing choice.
    pub fn certificates(&self, limit: usize) -> Result<Vec<LimitCycleCertificate>, ChainError> {
        let mut out = Vec::new();
        let mut depth_for: HashMap<(End, usize), (usize, usize)> = HashMap::new();
        for (ci, states) in self.anchor_states.iter().enumerate() {
            if out.len() >= limit {
                break;
            }
            let mut per_end = Vec::new();
            for (slot, t) in self.tails.iter().enumerate() {
                let p = states[slot];
                if !t.alive(0, p) {
                    per_end.clear();
                    break;
                }
                let (min_d, max_d) = match depth_for.get(&(t.end, p)) {
                    Some(&d) => d,
                    None => {
                        let ra = t.analyze(&self.unit(t.end, p))?;
                        let d = match ra.count {
                            LimitCount::Infinite => (ra.settle, ra.settle + 64 * ra.cycle_len),
                            _ => (ra.settle, ra.settle),
                        };
                        depth_for.insert((t.end, p), d);
                        d
                    }
                };
                per_end.push(t.rays(p, limit - out.len(), min_d, max_d));
            }
            if per_end.len() != self.tails.len() {
                continue;
            }
            let mut combos: Vec<Vec<RayCertificate>> = vec![Vec::new()];
            for rays in per_end {
                let mut next = Vec::new();
                for combo in &combos {
                    for r in &rays {
                        let mut c = combo.clone();
                        c.push(r.clone());
                        next.push(c);
                    }
                }
                combos = next;
            }
            for rays in combos {
                if out.len() >= limit {
                    break;
                }
                out.push(LimitCycleCertificate {
                    anchor_cycle: ci,
                    rays,
                });
            }
        }
        Ok(out)
    }

    /// Edge labels of the Hamilton cycle of the level-`depth` truncation
    /// minor obtained by splicing the certificate's first `depth` choices.
    pub fn splice(
        &self,
        cert: &LimitCycleCertificate,
        depth: usize,
    ) -> Result<BTreeSet<String>, ChainError> {
        let bad = |m: String| Err(ChainError::Certificate(m));
        let Some(anchor) = self.anchor_cycles.get(cert.anchor_cycle) else {
            return bad(format!("no anchor cycle {}", cert.anchor_cycle));
        };
        if cert.rays.len() != self.tails.len() {
            return bad(format!("expected {} rays", self.tails.len()));
        }
        let mut labels: BTreeSet<String> = anchor.labels(&self.anchor.graph).into_iter().collect();
        for (slot, ray) in cert.rays.iter().enumerate() {
            let t = &self.tails[slot];
            if ray.end != t.end {
                return bad(format!("ray for the {} end out of order", ray.end));
            }
            if ray.repeat.is_empty() {
                return bad("empty repeating part".into());
            }
            let mut state = self.anchor_states[cert.anchor_cycle][slot];
            if ray.start != state {
                return bad(format!("{} ray starts in the wrong state", ray.end));
            }
            for n in 0..depth {
                let c = ray.choice(n);
                let layer = t.layer(n);
                let Some(&(r, col)) = layer.cycle_states.get(c.cycle) else {
                    return bad(format!("no segment cycle {} at level {n}", c.cycle));
                };
                if c.from != state || r != state || c.to != col {
                    return bad(format!(
                        "pair states disagree at level {n} of the {} end",
                        ray.end
                    ));
                }
                let seg = self.chain.segment_minor(t.end, n)?;
                labels.extend(layer.cycles[c.cycle].labels(&seg.graph));
                state = col;
            }
        }
        Ok(labels)
    }

    /// Splices the certificate at `depth` and checks that the result is a
    /// Hamilton cycle of the truncation minor crossing every cut twice.
    pub fn validate(
        &self,
        cert: &LimitCycleCertificate,
        depth: usize,
    ) -> Result<SpliceReport, ChainError> {
        let labels = self.splice(cert, depth)?;
        let window = self.chain.truncation_minor(depth)?;
        let g = &window.graph;
        let edges = labels
            .iter()
            .map(|l| {
                g.edge_by_label(l).map_err(|_| {
                    ChainError::Certificate(format!("edge `{l}` missing at depth {depth}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        check_hamilton_cycle(g, &edges)
            .map_err(|e| ChainError::Certificate(format!("depth {depth}: {e}")))?;
        let set: BTreeSet<EdgeId> = edges.iter().copied().collect();
        let cut_crossings: Vec<usize> = window
            .cuts
            .iter()
            .map(|(_, _, cut)| cut.iter().filter(|e| set.contains(e)).count())
            .collect();
        if let Some(k) = cut_crossings.iter().position(|&c| c != 2) {
            return Err(ChainError::Certificate(format!(
                "cut {k} crossed {} times at depth {depth}",
                cut_crossings[k]
            )));
        }
        Ok(SpliceReport {
            depth,
            edges: labels.into_iter().collect(),
            cut_crossings,
        })
    }

    /// Layered transfer multigraph to `depth` levels: one node per pair state
    /// and one line per unit of multiplicity.
    pub fn to_dot(&self, depth: usize) -> Result<String, ChainError> {
        let mut out = String::from("graph transfer {\n  rankdir=LR;\n  node [shape=box];\n");
        let node = |end: End, n: usize, s: usize| match end {
            End::Left => format!("L{n}_{s}"),
            End::Right => format!("R{n}_{s}"),
        };
        for t in &self.tails {
            for n in 0..=depth {
                for (s, label) in self.state_labels(t.end, n)?.iter().enumerate() {
                    let style = if t.alive(n, s) { "solid" } else { "dashed" };
                    out.push_str(&format!(
                        "  {} [label=\"{}\", style={style}];\n",
                        node(t.end, n, s),
                        crate::graph::escape(label)
                    ));
                }
            }
            for n in 0..depth {
                for (s, row) in t.layer(n).matrix.iter().enumerate() {
                    for (c, &m) in row.iter().enumerate() {
                        for _ in 0..m {
                            out.push_str(&format!(
                                "  {} -- {};\n",
                                node(t.end, n, s),
                                node(t.end, n + 1, c)
                            ));
                        }
                    }
                }
            }
        }
        match self.chain.mode() {
            ChainMode::OneEnded => {
                out.push_str("  start [shape=circle, label=\"\"];\n");
                for (s, &m) in self.initial_vector()?.iter().enumerate() {
                    for _ in 0..m {
                        out.push_str(&format!("  start -- {};\n", node(End::Right, 0, s)));
                    }
                }
            }
            ChainMode::TwoEnded => {
                for (pl, row) in self.central_matrix()?.iter().enumerate() {
                    for (pr, &m) in row.iter().enumerate() {
                        for _ in 0..m {
                            out.push_str(&format!(
                                "  {} -- {};\n",
                                node(End::Left, 0, pl),
                                node(End::Right, 0, pr)
                            ));
                        }
                    }
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }

    pub fn report(&self, certificate_limit: usize) -> Result<AnalysisReport, ChainError> {
        let result = self.count()?;
        let certificates = self.certificates(certificate_limit)?;
        if let LimitCount::Finite(k) = result.count {
            if (k as usize) <= certificate_limit && certificates.len() as u128 != k {
                return Err(ChainError::Defect(format!(
                    "{} certificates for Finite({k})",
                    certificates.len()
                )));
            }
        }
        let mode = self.chain.mode();
        let (initial_vector, central_matrix) = match mode {
            ChainMode::OneEnded => (Some(self.initial_vector()?), None),
            ChainMode::TwoEnded => (None, Some(self.central_matrix()?)),
        };
        Ok(AnalysisReport {
            mode,
            interface_size: self.chain.interface_size(),
            cubic: self.chain.is_cubic(),
            end_degrees: end_degrees(self.chain)?,
            layers: self.layers().into_iter().cloned().collect(),
            survival: self.survival(),
            initial_vector,
            central_matrix,
            result,
            certificates,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub mode: ChainMode,
    pub interface_size: usize,
    pub cubic: bool,
    pub end_degrees: Vec<EndDegree>,
    pub layers: Vec<TransferLayer>,
    pub survival: Vec<SurvivalSets>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial_vector: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_matrix: Option<Vec<Vec<u64>>>,
    pub result: LimitResult,
    pub certificates: Vec<LimitCycleCertificate>,
}

fn render_matrix(rows: &[String], cols: &[String], m: &[Vec<u64>]) -> String {
    let head = rows.iter().map(String::len).max().unwrap_or(0);
    let width = cols.iter().map(String::len).max().unwrap_or(1);
    let mut out = format!("  {:head$}", "");
    for c in cols {
        out.push_str(&format!(" {c:>width$}"));
    }
    out.push('\n');
    for (r, row) in rows.iter().zip(m) {
        out.push_str(&format!("  {r:head$}"));
        for x in row {
            out.push_str(&format!(" {x:>width$}"));
        }
        out.push('\n');
    }
    out
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mode = match self.mode {
            ChainMode::OneEnded => "one-ended",
            ChainMode::TwoEnded => "two-ended",
        };
        let mut out = format!(
            "mode: {mode}\ninterface size: {}\ncubic: {}\n",
            self.interface_size, self.cubic
        );
        for d in &self.end_degrees {
            out.push_str(&format!(
                "end degree ({}): {} (vertex degree {})\n",
                d.end, d.degree, d.vertex_degree
            ));
        }
        if let Some(v) = &self.initial_vector {
            let labels = &self.layers[0].rows;
            let parts: Vec<String> = labels
                .iter()
                .zip(v)
                .map(|(l, x)| format!("{l}:{x}"))
                .collect();
            out.push_str(&format!("initial vector: {}\n", parts.join(" ")));
        }
        if let Some(c) = &self.central_matrix {
            let left = self
                .layers
                .iter()
                .find(|l| l.end == End::Left)
                .expect("left layer");
            let right = self
                .layers
                .iter()
                .find(|l| l.end == End::Right)
                .expect("right layer");
            out.push_str("central matrix (left x right):\n");
            out.push_str(&render_matrix(&left.rows, &right.rows, c));
        }
        for l in &self.layers {
            out.push_str(&format!("layer {} {}:\n", l.end, l.level));
            out.push_str(&render_matrix(&l.rows, &l.cols, &l.matrix));
        }
        for s in &self.survival {
            for n in 0..s.alive.len() {
                let kind = if n < s.pre_period {
                    "pre-period"
                } else {
                    "period"
                };
                out.push_str(&format!(
                    "surviving {} {n} ({kind}): {}\n",
                    s.end,
                    s.alive_labels(n).join(" ")
                ));
            }
        }
        let counts: Vec<String> = self
            .result
            .prefix_counts
            .iter()
            .map(u128::to_string)
            .collect();
        out.push_str(&format!("N_k: {}\n", counts.join(" ")));
        out.push_str(&format!("count: {}\n", self.result.count));
        if let Some(w) = &self.result.witness {
            out.push_str(&format!(
                "branching witness: {} end, level {}, state {}, out-multiplicity {} {:?}, surviving {}, weight {}\n",
                w.end,
                w.level,
                w.state_label,
                w.out_multiplicity,
                w.row,
                w.surviving_out_multiplicity,
                w.initial_weight
            ));
        }
        out.push_str(&format!("certificates: {}\n", self.certificates.len()));
        for c in &self.certificates {
            out.push_str(&format!("  {}\n", c.render()));
        }
        out
    }
}

pub fn initial_vector(chain: &CutChain) -> Result<Vec<u64>, ChainError> {
    ChainAnalysis::new(chain)?.initial_vector()
}

pub fn surviving_states(chain: &CutChain) -> Result<Vec<SurvivalSets>, ChainError> {
    Ok(ChainAnalysis::new(chain)?.survival())
}

pub fn count_limit_hamilton_cycles(chain: &CutChain) -> Result<LimitResult, ChainError> {
    ChainAnalysis::new(chain)?.count()
}

/// Predicted versus brute-force pair-state counts at the level-`depth` cuts.
/// One-ended chains have a single row; two-ended chains index rows by left
/// states and columns by right states.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub depth: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub predicted: Vec<Vec<u128>>,
    pub observed: Vec<Vec<u128>>,
    pub predicted_total: u128,
    pub observed_total: u128,
    pub consistent: bool,
}

fn product_rows(t: &TailModel, k: usize) -> Result<Vec<Vec<u128>>, ChainError> {
    (0..t.states(0))
        .map(|p| {
            let mut v = vec![0u128; t.states(0)];
            v[p] = 1;
            t.raw_product(&v, k)
        })
        .collect()
}

pub fn truncation_consistency(
    chain: &CutChain,
    depth: usize,
) -> Result<ConsistencyReport, ChainError> {
    let a = ChainAnalysis::new(chain)?;
    let window = chain.truncation_minor(depth)?;
    let g = &window.graph;
    let cycles = enumerate_hamilton_cycles(g);
    let state_at = |c: &HamiltonCycle, end: End| -> Result<usize, ChainError> {
        state_of(
            g,
            &c.edges_at(g, window.dummy(end)),
            chain.cut_labels(end, depth)?,
            CutChain::position(end, depth),
        )
    };
    let (rows, cols, predicted, observed) = match chain.mode() {
        ChainMode::OneEnded => {
            let t = a.tail(End::Right);
            let init: Vec<u128> = a.initial_vector()?.iter().map(|&x| x as u128).collect();
            let predicted = vec![t.raw_product(&init, depth)?];
            let mut observed = vec![vec![0u128; t.states(depth)]];
            for c in &cycles {
                observed[0][state_at(c, End::Right)?] += 1;
            }
            (
                vec!["*".to_owned()],
                a.state_labels(End::Right, depth)?,
                predicted,
                observed,
            )
        }
        ChainMode::TwoEnded => {
            let (l, r) = (a.tail(End::Left), a.tail(End::Right));
            let c = a.central_matrix()?;
            let (pl, pr) = (product_rows(l, depth)?, product_rows(r, depth)?);
            let (sl, sr) = (l.states(depth), r.states(depth));
            let mut predicted = vec![vec![0u128; sr]; sl];
            for (i, row) in c.iter().enumerate() {
                for (j, &m) in row.iter().enumerate() {
                    for x in 0..sl {
                        for y in 0..sr {
                            let term = mul(m as u128, mul(pl[i][x], pr[j][y])?)?;
                            predicted[x][y] = add(predicted[x][y], term)?;
                        }
                    }
                }
            }
            let mut observed = vec![vec![0u128; sr]; sl];
            for cyc in &cycles {
                observed[state_at(cyc, End::Left)?][state_at(cyc, End::Right)?] += 1;
            }
            (
                a.state_labels(End::Left, depth)?,
                a.state_labels(End::Right, depth)?,
                predicted,
                observed,
            )
        }
    };
    let sum = |m: &Vec<Vec<u128>>| m.iter().flatten().try_fold(0u128, |x, &y| add(x, y));
    Ok(ConsistencyReport {
        depth,
        consistent: predicted == observed,
        predicted_total: sum(&predicted)?,
        observed_total: sum(&observed)?,
        rows,
        cols,
        predicted,
        observed,
    })
}

/// Minimum cuts between the initial or central piece and one end's dummy
/// over growing truncations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndDegree {
    pub end: End,
    /// Edge-disjoint path counts at depths `0, 1, ...`.
    pub cut_sizes: Vec<usize>,
    pub degree: usize,
    pub vertex_degree: usize,
}

pub fn end_degrees(chain: &CutChain) -> Result<Vec<EndDegree>, ChainError> {
    let mut out = Vec::new();
    for end in chain.ends() {
        let tail = chain.tail(end)?;
        let depth = tail.pre_period.len() + 2 * tail.period.len();
        let mut cut_sizes = Vec::with_capacity(depth + 1);
        let mut vertex_degree = 0;
        for k in 0..=depth {
            let w = chain.truncation_minor(k)?;
            let d = w.dummy(end);
            cut_sizes.push(w.graph.min_edge_cut(&w.core, d)?);
            if k == depth {
                vertex_degree = w.graph.max_vertex_disjoint_paths(&w.core, d)?;
            }
        }
        let degree = *cut_sizes.last().expect("at least one depth");
        out.push(EndDegree {
            end,
            cut_sizes,
            degree,
            vertex_degree,
        });
    }
    Ok(out)
}

/// Edge-degree of the chain's end (one-ended) or the smaller of the two.
pub fn end_degree(chain: &CutChain) -> Result<usize, ChainError> {
    Ok(end_degrees(chain)?
        .iter()
        .map(|d| d.degree)
        .min()
        .expect("every chain has an end"))
}

/// Two distinct limit Hamilton cycles of a Hamiltonian one-ended cubic chain
/// with end-degree at most 3.
pub fn witness_two_cycles(
    chain: &CutChain,
) -> Result<(LimitCycleCertificate, LimitCycleCertificate), ChainError> {
    if chain.mode() != ChainMode::OneEnded {
        return Err(ChainError::ModeMismatch("one-ended"));
    }
    if !chain.is_cubic() {
        return Err(ChainError::NotCubic);
    }
    let a = ChainAnalysis::new(chain)?;
    if a.count()?.count == LimitCount::Zero {
        return Err(ChainError::NoHamiltonCycle);
    }
    let mut certs = a.certificates(2)?.into_iter();
    match (certs.next(), certs.next()) {
        (Some(x), Some(y)) if !x.same_as(&y) => Ok((x, y)),
        _ => Err(ChainError::TheoremViolation),
    }
}
