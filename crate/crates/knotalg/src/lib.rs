//! Exact-arithmetic algebra for cobordism of manifolds with boundary and
//! codimension-2 embeddings: ε-symmetric forms and their enlargements,
//! chain-level splitting of relative cobordism triads, Seifert forms,
//! Alexander polynomials, and certified Levine–Tristram signatures and
//! nullities.
//!
//! Everything is exact. Integer linear algebra runs over arbitrary-
//! precision integers (Smith normal form, saturated kernels, homology of
//! bounded complexes); evaluations at roots of unity live in the
//! cyclotomic fields Q(ζ_q) reduced modulo the cyclotomic polynomial; and
//! where the sign of a real number is needed, it is certified by interval
//! refinement after an exact symbolic zero test. No floating point
//! participates in any result.
//!
//! Module map:
//!
//! - [`exact_linalg`]: integer matrices, Smith normal form, f.g. abelian
//!   groups, saturation, torsion-free quotients.
//! - [`chain`]: bounded complexes of free Z-modules: cones, shifts,
//!   duals, unions, half-handle complexes, and the splitting of relative
//!   cobordism triads with its four recovery certificates.
//! - [`forms`]: ε-symmetric forms over Z: exact inertia, radicals,
//!   sublagrangian quotients, enlargements, and Wall's non-additivity
//!   invariant.
//! - [`polyarith`]: Laurent polynomials over Z with fraction-free
//!   determinants; exact arithmetic in Q(ζ_q); certified signs.
//! - [`seifert`]: Seifert forms: symmetrization, Alexander polynomials,
//!   S/H-moves, Levine–Tristram invariants, enlargement invariance, the
//!   Murasugi–Kawauchi checker.
//! - [`io`]: the line-oriented text formats consumed by the CLI.
//! - [`verify`]: seeded randomized suites that exercise the theorems on
//!   fresh instances; also behind `knotalg verify`.
//!
//! The `examples/` directory walks through each capability; start with
//! `seifert_invariants` and `triad_splitting`. The thin `knotalg` binary
//! exposes the same operations on text files.

pub mod chain;
pub mod exact_linalg;
pub mod forms;
pub mod io;
pub mod polyarith;
pub mod seifert;
pub mod verify;

pub use chain::{ChainComplex, ChainMap, HalfHandleData, RelativeCobordismTriad};
pub use exact_linalg::{AbelianGroup, IntMatrix, SmithDecomposition};
pub use forms::{EnlargementSpec, EpsSymmetricForm, InertiaProfile, Subform, TriadLagrangians};
pub use polyarith::{CyclotomicNumber, LaurentPolynomial, RootOfUnity};
pub use seifert::{LTResult, MKInstance, SeifertEnlargementSpec, SeifertForm};
