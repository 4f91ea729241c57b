//! Exact Hamilton-cycle machinery for finite cubic multigraphs, and a
//! cut-chain transfer analysis that counts the Hamilton cycles of one- and
//! two-ended infinite cubic graphs given as eventually periodic gluings of
//! finite pieces.

pub mod audit;
pub mod chain;
pub mod cli;
pub mod constructions;
mod flow;
pub mod graph;
pub mod hamilton;
pub mod incidence;
pub mod sample;

pub use graph::{
    build_graph, EdgeCut, EdgeId, EdgeRecord, EdgeSpec, GraphBuilder, GraphError, MultiGraph,
    VertexId,
};
pub use hamilton::{
    check_hamilton_cycle, count_through, cycles_through, edge_parity_report, enumerate_filtered,
    enumerate_hamilton_cycles, enumerate_hamilton_cycles_parallel, first_hamilton_cycle,
    second_cycle_lollipop, second_cycle_nearly_cubic, CycleFilter, EdgeParityReport, HamiltonCycle,
    HamiltonError,
};
