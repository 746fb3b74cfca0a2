//! Bounded complexes of f.g. free Z-modules: mapping cones, shifts, duals,
//! unions, half-handle complexes, and the chain-level splitting of relative
//! cobordism triads.

pub mod complex;
pub mod triad;

pub use complex::{
    cone, half_handle_complex, is_h_cobordism, is_quasi_iso, stack_targets, union, ChainComplex,
    ChainError, ChainMap, HalfHandleData,
};
pub use triad::{split_triad, RelativeCobordismTriad, SplitCertificates, SplitTriad};
