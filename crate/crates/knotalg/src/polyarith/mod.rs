//! Exact Laurent-polynomial arithmetic over Z and exact cyclotomic field
//! arithmetic over Q(ζ_q), including conjugation, matrix rank over the
//! field, and certified signs of real cyclotomic numbers.

pub mod cyclotomic;
pub mod interval;
pub mod laurent;

pub use cyclotomic::{
    certified_sign, cyclo_rank, cyclotomic_polynomial, euler_phi, eval_at, hermitian_inertia,
    CycError, CycMatrix, CyclotomicNumber, RootOfUnity, Sign,
};
pub use laurent::{
    laurent_det, poly_h_equivalent_with_witness, poly_s_equivalent, s_normalize, LaurentMatrix,
    LaurentPolynomial,
};
