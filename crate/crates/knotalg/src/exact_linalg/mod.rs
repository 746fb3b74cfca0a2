//! Exact integer and rational matrix algebra: Smith normal form, saturated
//! kernels and images, finitely generated abelian groups and torsion-free
//! quotients. Everything downstream (homology, forms, Seifert invariants)
//! sits on this module.

pub mod abelian;
pub mod matrix;
pub mod snf;

pub use abelian::{
    homology_at, induced_tf_map, is_unimodular, saturation, torsion_free_part, AbelianGroup,
    LinalgError, Presentation,
};
pub use matrix::IntMatrix;
pub use snf::{
    complement_of_saturated, kernel_basis, rank, smith_normal_form, solve, SmithDecomposition,
};
