//! Ihara zeta functions of regular graphs, ℤ/q voltage covers and the
//! partial zeta of a cover as an exact series in `u = q_g^{-s}`.

pub mod backend;
pub mod cycles;
pub mod ihara;
pub mod multigraph;
pub mod partial;
pub mod voltage;

pub use backend::{parse_edge_list, GraphBackend, MAX_CYCLE_LENGTH};
pub use cycles::{count_closed_walks, primitive_classes, CycleClass, DEFAULT_CLASS_BUDGET};
pub use ihara::{count_cycles, ihara_det, ihara_edge};
pub use multigraph::{cube, k4, petersen, EdgeMatrix, MultiGraph, MAX_VERTICES};
pub use partial::{
    direct_series, euler_product_inverse, graph_singularities_in_s, partial_zeta_series, recursive_series,
    RationalFunction, RationalG, MAX_SERIES_ORDER,
};
pub use voltage::{Cover, VoltageGraph};
