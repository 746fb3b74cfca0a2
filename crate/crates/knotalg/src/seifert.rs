//! Seifert forms of framed codimension-2 embeddings: symmetrization,
//! S- and H-enlargement moves, the Alexander polynomial, exact
//! Levine–Tristram signatures and nullities, enlargement invariance, and
//! the Murasugi–Kawauchi inequality checker.

use crate::exact_linalg::{self, IntMatrix};
use crate::forms::{Eps, EpsSymmetricForm};
use crate::polyarith::{
    eval_at, hermitian_inertia, laurent_det, s_normalize, CycError, CycMatrix,
    CyclotomicNumber, LaurentMatrix, LaurentPolynomial, RootOfUnity,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("Seifert matrix must be square")]
    NotSquare,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation requires Seifert forms of equal parity")]
    ParityMismatch,
    #[error(transparent)]
    Cyclotomic(#[from] CycError),
}

/// A Seifert form: a square integer matrix with a parity `n mod 2` fixing
/// the sign ε = (−1)ⁿ. No nonsingularity is assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertForm {
    matrix: IntMatrix,
    parity: u8,
}

impl SeifertForm {
    pub fn new(matrix: IntMatrix, parity: u8) -> Result<Self, SeifertError> {
        if !matrix.is_square() {
            return Err(SeifertError::NotSquare);
        }
        Ok(SeifertForm {
            matrix,
            parity: parity % 2,
        })
    }

    /// The empty form of a trivial embedding.
    pub fn empty(parity: u8) -> Self {
        SeifertForm {
            matrix: IntMatrix::zeros(0, 0),
            parity: parity % 2,
        }
    }

    /// Seifert matrix of the trefoil (n odd).
    pub fn trefoil() -> Self {
        SeifertForm {
            matrix: IntMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]),
            parity: 1,
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn epsilon(&self) -> Eps {
        Eps::from_parity(self.parity)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Congruence `PᵀAP` by a unimodular matrix.
    pub fn congruent(&self, p: &IntMatrix) -> Self {
        assert!(
            exact_linalg::is_unimodular(p),
            "congruence requires a unimodular base change"
        );
        SeifertForm {
            matrix: p.transpose().mul(&self.matrix).mul(p),
            parity: self.parity,
        }
    }
}

/// The symmetrization `B = A + εAᵀ`, the intersection form of a Seifert
/// surface.
pub fn symmetrize(s: &SeifertForm) -> EpsSymmetricForm {
    let eps = s.epsilon();
    let gram = match eps {
        Eps::Plus => s.matrix.add(&s.matrix.transpose()),
        Eps::Minus => s.matrix.sub(&s.matrix.transpose()),
    };
    EpsSymmetricForm::new(eps, gram).expect("A + εAᵀ is ε-symmetric")
}

/// The Alexander polynomial `det(tA + εAᵀ)`, returned in the normal form
/// with lowest degree 0 and positive lowest coefficient. The empty matrix
/// gives 1; a k×k zero matrix with k ≥ 1 gives the zero polynomial.
pub fn alexander(s: &SeifertForm) -> LaurentPolynomial {
    s_normalize(&alexander_raw(s))
}

/// The determinant `det(tA + εAᵀ)` itself, before normalization.
pub fn alexander_raw(s: &SeifertForm) -> LaurentPolynomial {
    let eps = s.epsilon().sign() as i64;
    let k = s.dim();
    let m = LaurentMatrix::from_fn(k, k, |i, j| {
        let mut coeffs = vec![BigInt::zero(), BigInt::zero()];
        coeffs[0] = &s.matrix[(j, i)] * BigInt::from(eps);
        coeffs[1] = s.matrix[(i, j)].clone();
        LaurentPolynomial::from_coefficients(0, coeffs)
    });
    laurent_det(&m)
}

/// Which of the two generating stabilization moves to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMove {
    /// `[[A, 0, α], [0, 0, 0], [0, 1, 0]]` with a free column α.
    Column,
    /// `[[A, 0, 0], [0, 0, 1], [β, 0, 0]]` with a free row β.
    Row,
}

/// Apply a generating S-move; `vector` is the free column α (k×1) for the
/// column move or the free row β (1×k) for the row move.
pub fn s_enlarge(
    s: &SeifertForm,
    variant: SMove,
    vector: &IntMatrix,
) -> Result<SeifertForm, SeifertError> {
    let k = s.dim();
    let expected = match variant {
        SMove::Column => (k, 1),
        SMove::Row => (1, k),
    };
    if (vector.rows(), vector.cols()) != expected {
        return Err(SeifertError::DimensionMismatch(format!(
            "move vector is {}x{}, expected {}x{}",
            vector.rows(),
            vector.cols(),
            expected.0,
            expected.1
        )));
    }
    let mut out = IntMatrix::zeros(k + 2, k + 2);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = s.matrix[(i, j)].clone();
        }
    }
    match variant {
        SMove::Column => {
            for i in 0..k {
                out[(i, k + 1)] = vector[(i, 0)].clone();
            }
            out[(k + 1, k)] = BigInt::one();
        }
        SMove::Row => {
            for j in 0..k {
                out[(k + 1, j)] = vector[(0, j)].clone();
            }
            out[(k, k + 1)] = BigInt::one();
        }
    }
    Ok(SeifertForm {
        matrix: out,
        parity: s.parity,
    })
}

/// Enumerate all basis-visible inverse S-moves: for every ordered pair of
/// coordinates matching one of the generating move shapes, return the form
/// with those two coordinates deleted.
pub fn s_reduce_candidates(s: &SeifertForm) -> Vec<SeifertForm> {
    let k = s.dim();
    if k < 2 {
        return Vec::new();
    }
    let a = &s.matrix;
    let mut out = Vec::new();
    // p: the "minus" coordinate, q: the "plus" coordinate
    for p in 0..k {
        for q in 0..k {
            if p == q {
                continue;
            }
            let others: Vec<usize> = (0..k).filter(|&i| i != p && i != q).collect();
            // column-move shape: row p = 0; column p = 0 except a[q][p] = 1;
            // row q = 0 except that 1; entries (p,q) and (q,q) vanish
            let col_shape = (0..k).all(|j| a[(p, j)].is_zero())
                && (0..k).all(|i| i == q || a[(i, p)].is_zero())
                && a[(q, p)].is_one()
                && (0..k).all(|j| j == p || a[(q, j)].is_zero());
            // row-move shape: column p = 0 except... transposed pattern
            let row_shape = (0..k).all(|i| a[(i, p)].is_zero())
                && (0..k).all(|j| j == q || a[(p, j)].is_zero())
                && a[(p, q)].is_one()
                && (0..k).all(|i| i == p || a[(i, q)].is_zero());
            if col_shape || row_shape {
                let reduced = a.select(&others, &others);
                let cand = SeifertForm {
                    matrix: reduced,
                    parity: s.parity,
                };
                if !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

/// Breadth-first search through generating S-moves (enlargements with
/// vector entries bounded by `coeff_bound`, and all basis-visible
/// reductions), looking for `target` within `max_depth` moves of `start`.
/// Returns the number of moves if found. Best effort: states are matched
/// by exact matrix equality, congruences are not searched, and the
/// explored frontier is capped.
pub fn bounded_s_search(
    start: &SeifertForm,
    target: &SeifertForm,
    max_depth: usize,
    coeff_bound: i64,
) -> Option<usize> {
    if start.parity() != target.parity() {
        return None;
    }
    const STATE_CAP: usize = 20_000;
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![start.clone()];
    let enc = |s: &SeifertForm| format!("{:?}", s.matrix());
    seen.insert(enc(start));
    if start == target {
        return Some(0);
    }
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for s in &frontier {
            let mut push = |cand: SeifertForm| {
                if cand == *target {
                    return true;
                }
                if seen.len() < STATE_CAP && seen.insert(enc(&cand)) {
                    next.push(cand);
                }
                false
            };
            for cand in s_reduce_candidates(s) {
                if push(cand) {
                    return Some(depth);
                }
            }
            // only enlarge while it can still reach the target's size
            if s.dim() + 2 <= target.dim() + 2 * (max_depth - depth) {
                let k = s.dim();
                let mut vectors = vec![vec![0i64; k]];
                for pos in 0..k {
                    let mut grown = Vec::new();
                    for v in &vectors {
                        for c in -coeff_bound..=coeff_bound {
                            let mut w = v.clone();
                            w[pos] = c;
                            grown.push(w);
                        }
                    }
                    vectors = grown;
                }
                for v in vectors {
                    let col = IntMatrix::from_fn(k, 1, |i, _| BigInt::from(v[i]));
                    let row = col.transpose();
                    for cand in [
                        s_enlarge(s, SMove::Column, &col).expect("shape"),
                        s_enlarge(s, SMove::Row, &row).expect("shape"),
                    ] {
                        if push(cand) {
                            return Some(depth);
                        }
                    }
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    None
}

/// Block data `[[A, 0, α], [0, 0, x], [β, y, z]]` of a rank-(ℓ⁻, ℓ⁺)
/// enlargement of a Seifert form.
#[derive(Clone, Debug)]
pub struct SeifertEnlargementSpec {
    pub base: SeifertForm,
    pub alpha: IntMatrix,
    pub x: IntMatrix,
    pub beta: IntMatrix,
    pub y: IntMatrix,
    pub z: IntMatrix,
}

impl SeifertEnlargementSpec {
    pub fn new(
        base: SeifertForm,
        alpha: IntMatrix,
        x: IntMatrix,
        beta: IntMatrix,
        y: IntMatrix,
        z: IntMatrix,
    ) -> Result<Self, SeifertError> {
        let k = base.dim();
        let l_minus = x.rows();
        let l_plus = x.cols();
        let ok = alpha.rows() == k
            && alpha.cols() == l_plus
            && beta.rows() == l_plus
            && beta.cols() == k
            && y.rows() == l_plus
            && y.cols() == l_minus
            && z.rows() == l_plus
            && z.cols() == l_plus;
        if !ok {
            return Err(SeifertError::DimensionMismatch(format!(
                "blocks α {}x{}, x {}x{}, β {}x{}, y {}x{}, z {}x{} against base dim {}",
                alpha.rows(),
                alpha.cols(),
                x.rows(),
                x.cols(),
                beta.rows(),
                beta.cols(),
                y.rows(),
                y.cols(),
                z.rows(),
                z.cols(),
                k
            )));
        }
        Ok(SeifertEnlargementSpec {
            base,
            alpha,
            x,
            beta,
            y,
            z,
        })
    }

    pub fn l_minus(&self) -> usize {
        self.x.rows()
    }

    pub fn l_plus(&self) -> usize {
        self.x.cols()
    }

    /// `x + εyᵀ`, the block whose invertibility makes an H-enlargement.
    pub fn cross_block(&self) -> IntMatrix {
        let eyt = match self.base.epsilon() {
            Eps::Plus => self.y.transpose(),
            Eps::Minus => self.y.transpose().neg(),
        };
        self.x.add(&eyt)
    }
}

/// Assemble the enlarged Seifert form of a spec.
pub fn h_enlarge(spec: &SeifertEnlargementSpec) -> SeifertForm {
    let k = spec.base.dim();
    let lm = spec.l_minus();
    let z_km = IntMatrix::zeros(k, lm);
    let z_mk = IntMatrix::zeros(lm, k);
    let z_mm = IntMatrix::zeros(lm, lm);
    let matrix = IntMatrix::block(&[
        vec![spec.base.matrix(), &z_km, &spec.alpha],
        vec![&z_mk, &z_mm, &spec.x],
        vec![&spec.beta, &spec.y, &spec.z],
    ]);
    SeifertForm {
        matrix,
        parity: spec.base.parity,
    }
}

/// H-enlargement test: ℓ⁻ = ℓ⁺ and `det(x + εyᵀ) = ±1`.
pub fn is_h_enlargement(spec: &SeifertEnlargementSpec) -> bool {
    spec.l_minus() == spec.l_plus() && spec.cross_block().det().abs().is_one()
}

/// Nullity, signature and Alexander vanishing at a root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LTResult {
    pub xi: RootOfUnity,
    pub nullity: usize,
    pub signature: i64,
    pub alexander_value_is_zero: bool,
}

/// The (−ε)-hermitian matrix `B_A(ξ) = (1−ξ)A − ε(1−ξ̄)Aᵀ` over Q(ζ_q).
pub fn twisted_intersection_matrix(s: &SeifertForm, xi: RootOfUnity) -> CycMatrix {
    let q = xi.denominator();
    let xi_el = CyclotomicNumber::from_root(xi);
    let one = CyclotomicNumber::one(q);
    let c_a = one.sub(&xi_el); // (1 − ξ)
    let mut c_at = one.sub(&xi_el.conjugate()); // (1 − ξ̄)
    if s.epsilon() == Eps::Plus {
        c_at = c_at.neg();
    }
    let k = s.dim();
    CycMatrix::from_fn(q, k, k, |i, j| {
        c_a.scale_int(&s.matrix[(i, j)])
            .add(&c_at.scale_int(&s.matrix[(j, i)]))
    })
    .expect("single modulus by construction")
}

/// Signature of a (−ε)-hermitian cyclotomic matrix: directly hermitian for
/// ε = −1; for ε = +1 the matrix is skew-hermitian and the inertia of iB
/// is taken inside Q(ζ_lcm(4,q)).
fn twisted_inertia(b: &CycMatrix, eps: Eps) -> Result<(usize, usize, usize), CycError> {
    match eps {
        Eps::Minus => hermitian_inertia(b),
        Eps::Plus => {
            let q = b.modulus();
            let m = 4 * q / num_integer::gcd(4, q);
            let i_unit = CyclotomicNumber::zeta_pow(m, (m / 4) as i64);
            let scaled = CycMatrix::from_fn(m, b.rows(), b.cols(), |r, c| {
                b.at(r, c).embed(m).mul(&i_unit)
            })?;
            hermitian_inertia(&scaled)
        }
    }
}

/// Exact Levine–Tristram invariants of a Seifert form at `ξ ≠ 1`.
pub fn lt_invariants(s: &SeifertForm, xi: RootOfUnity) -> Result<LTResult, SeifertError> {
    let b = twisted_intersection_matrix(s, xi);
    let (r_plus, r_minus, nullity) = twisted_inertia(&b, s.epsilon())?;
    let signature = r_plus as i64 - r_minus as i64;
    let alexander_value_is_zero = eval_at(&alexander_raw(s), xi).is_zero();
    assert_eq!(
        nullity > 0,
        alexander_value_is_zero,
        "nullity/Alexander coupling violated at {}",
        xi
    );
    Ok(LTResult {
        xi,
        nullity,
        signature,
        alexander_value_is_zero,
    })
}

/// Outcome of the invariance check for one enlargement at one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    /// `det(ξx + εyᵀ) ≠ 0` over Q(ζ_q).
    pub applicable: bool,
    /// Signatures and nullities agree between base and enlargement.
    pub preserved: bool,
    /// `σ_enlarged(ξ) − σ_base(ξ)`.
    pub jump: i64,
    /// Signature of the kernel form carried by `z`; always equals `jump`.
    pub kernel_form_signature: i64,
}

/// Check invariance of (n, σ) at ξ under a rank-(ℓ, ℓ) enlargement, and
/// compute the signature jump together with the kernel form that explains
/// it when the enlargement degenerates at ξ.
pub fn verify_enlargement_invariance(
    spec: &SeifertEnlargementSpec,
    xi: RootOfUnity,
) -> Result<InvarianceReport, SeifertError> {
    if spec.l_minus() != spec.l_plus() {
        return Err(SeifertError::DimensionMismatch(format!(
            "invariance check needs a rank-(l, l) enlargement, got ({}, {})",
            spec.l_minus(),
            spec.l_plus()
        )));
    }
    let eps = spec.base.epsilon();
    let q = xi.denominator();
    let xi_el = CyclotomicNumber::from_root(xi);
    let ell = spec.l_plus();
    // ξx + εyᵀ over Q(ζ_q)
    let eps_int = BigInt::from(eps.sign());
    let cross = CycMatrix::from_fn(q, ell, ell, |i, j| {
        xi_el
            .scale_int(&spec.x[(i, j)])
            .add(&CyclotomicNumber::from_int(q, &(&spec.y[(j, i)] * &eps_int)))
    })?;
    let applicable = cross.rank() == ell;

    let base_lt = lt_invariants(&spec.base, xi)?;
    let enlarged_lt = lt_invariants(&h_enlarge(spec), xi)?;
    let preserved =
        base_lt.nullity == enlarged_lt.nullity && base_lt.signature == enlarged_lt.signature;
    let jump = enlarged_lt.signature - base_lt.signature;

    // kernel form: F = {w | (ξx + εyᵀ)w = 0, (ξα + εβᵀ)w ∈ im B_A0(ξ)}
    // carrying the form induced from the enlarged twisted intersection
    // form on the annihilator of the base. On representatives (f, 0, w)
    // with B_A0(ξ)·f = −C·w (C the full off-diagonal block) the induced
    // pairing is w₁†Ez w₂ + f₁†C w₂; the base-block correction does not
    // vanish in general.
    let w1 = cross.kernel_basis();
    let k = spec.base.dim();
    let maps_into = CycMatrix::from_fn(q, k, ell, |i, j| {
        xi_el
            .scale_int(&spec.alpha[(i, j)])
            .add(&CyclotomicNumber::from_int(q, &(&spec.beta[(j, i)] * &eps_int)))
    })?
    .mul(&w1)?;
    let b0 = twisted_intersection_matrix(&spec.base, xi);
    // columns c with maps_into * c in the column space of b0: project the
    // kernel of [b0 | −maps_into] onto the c block
    let stacked = CycMatrix::from_fn(q, k, k + w1.cols(), |i, j| {
        if j < k {
            b0.at(i, j).clone()
        } else {
            maps_into.at(i, j - k).neg()
        }
    })?;
    let big_kernel = stacked.kernel_basis();
    let projected = CycMatrix::from_fn(q, w1.cols(), big_kernel.cols(), |i, j| {
        big_kernel.at(k + i, j).clone()
    })?;
    // column-space basis of the projection
    let f_basis_cols = projected.column_space_pivots();
    let f_basis = CycMatrix::from_fn(q, w1.cols(), f_basis_cols.len(), |i, j| {
        projected.at(i, f_basis_cols[j]).clone()
    })?;
    let f_in_ambient = w1.mul(&f_basis)?;
    // the z-pairing block
    let one = CyclotomicNumber::one(q);
    let c_z = one.sub(&xi_el);
    let mut c_zt = one.sub(&xi_el.conjugate());
    if eps == Eps::Plus {
        c_zt = c_zt.neg();
    }
    let bz = CycMatrix::from_fn(q, ell, ell, |i, j| {
        c_z.scale_int(&spec.z[(i, j)])
            .add(&c_zt.scale_int(&spec.z[(j, i)]))
    })?;
    // the full (F, L+) block C = (ξ̄ − 1)(ξα + εβᵀ)
    let scale = xi_el.conjugate().sub(&one);
    let c_full = CycMatrix::from_fn(q, k, ell, |i, j| {
        scale.mul(
            &xi_el
                .scale_int(&spec.alpha[(i, j)])
                .add(&CyclotomicNumber::from_int(q, &(&spec.beta[(j, i)] * &eps_int))),
        )
    })?;
    let c_on_basis = c_full.mul(&f_in_ambient)?;
    let neg_c = CycMatrix::from_fn(q, k, c_on_basis.cols(), |i, j| c_on_basis.at(i, j).neg())?;
    let lifts = b0
        .solve(&neg_c)
        .expect("membership constraint makes the lift solvable");
    let restricted = f_in_ambient
        .conj_transpose()
        .mul(&bz)?
        .mul(&f_in_ambient)?;
    let correction = lifts.conj_transpose().mul(&c_on_basis)?;
    let induced = CycMatrix::from_fn(q, restricted.rows(), restricted.cols(), |i, j| {
        restricted.at(i, j).add(correction.at(i, j))
    })?;
    let (rp, rm, _) = twisted_inertia(&induced, eps)?;
    let kernel_form_signature = rp as i64 - rm as i64;

    Ok(InvarianceReport {
        applicable,
        preserved,
        jump,
        kernel_form_signature,
    })
}

/// Inputs of the Murasugi–Kawauchi inequality: two Seifert forms, the
/// middle Betti numbers of the closed surface and the two Seifert
/// surfaces (trusted geometric data), and a root of unity.
#[derive(Clone, Debug)]
pub struct MKInstance {
    pub a0: SeifertForm,
    pub a1: SeifertForm,
    pub b_sigma: usize,
    pub b_sigma0: usize,
    pub b_sigma1: usize,
    pub xi: RootOfUnity,
}

impl MKInstance {
    pub fn new(
        a0: SeifertForm,
        a1: SeifertForm,
        b_sigma: usize,
        b_sigma0: usize,
        b_sigma1: usize,
        xi: RootOfUnity,
    ) -> Result<Self, SeifertError> {
        if a0.parity() != a1.parity() {
            return Err(SeifertError::ParityMismatch);
        }
        Ok(MKInstance {
            a0,
            a1,
            b_sigma,
            b_sigma0,
            b_sigma1,
            xi,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MKReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub slack: i64,
}

/// Evaluate `|σ₀(ξ) − σ₁(ξ)| ≤ b(Σ) − b(Σ₀) − b(Σ₁) + n₀(ξ) + n₁(ξ)`.
pub fn mk_check(inst: &MKInstance) -> Result<MKReport, SeifertError> {
    let lt0 = lt_invariants(&inst.a0, inst.xi)?;
    let lt1 = lt_invariants(&inst.a1, inst.xi)?;
    let lhs = (lt0.signature - lt1.signature).abs();
    let rhs = inst.b_sigma as i64 - inst.b_sigma0 as i64 - inst.b_sigma1 as i64
        + lt0.nullity as i64
        + lt1.nullity as i64;
    Ok(MKReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
        slack: rhs - lhs,
    })
}

/// What, if anything, separated two Seifert forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinction {
    AlexanderPolynomial {
        delta0: LaurentPolynomial,
        delta1: LaurentPolynomial,
    },
    LevineTristram {
        xi: RootOfUnity,
        invariants0: (usize, i64),
        invariants1: (usize, i64),
    },
}

/// Compare the computable invariants of two Seifert forms over all roots
/// of unity with denominator at most `sample_q`. A `None` distinction
/// never claims the forms are equivalent.
pub fn distinguish(
    s0: &SeifertForm,
    s1: &SeifertForm,
    sample_q: u64,
) -> Result<Option<Distinction>, SeifertError> {
    if s0.parity() != s1.parity() {
        return Err(SeifertError::ParityMismatch);
    }
    let d0 = alexander(s0);
    let d1 = alexander(s1);
    if d0 != d1 {
        return Ok(Some(Distinction::AlexanderPolynomial {
            delta0: d0,
            delta1: d1,
        }));
    }
    for xi in RootOfUnity::all_with_denominator_up_to(sample_q) {
        let lt0 = lt_invariants(s0, xi)?;
        let lt1 = lt_invariants(s1, xi)?;
        if (lt0.nullity, lt0.signature) != (lt1.nullity, lt1.signature) {
            return Ok(Some(Distinction::LevineTristram {
                xi,
                invariants0: (lt0.nullity, lt0.signature),
                invariants1: (lt1.nullity, lt1.signature),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn xi(p: i64, q: i64) -> RootOfUnity {
        RootOfUnity::new(p, q).unwrap()
    }

    #[test]
    fn symmetrization() {
        // zero form
        let z = SeifertForm::new(IntMatrix::zeros(2, 2), 0).unwrap();
        assert!(symmetrize(&z).gram().is_zero());
        // trefoil: A + (−1)Aᵀ is the standard symplectic form
        let b = symmetrize(&SeifertForm::trefoil());
        assert_eq!(b.gram(), &m(&[vec![0, 1], vec![-1, 0]]));
        // n even with symmetric A doubles it
        let a = SeifertForm::new(m(&[vec![2, 1], vec![1, 5]]), 0).unwrap();
        assert_eq!(symmetrize(&a).gram(), &m(&[vec![4, 2], vec![2, 10]]));
    }

    #[test]
    fn alexander_polynomials() {
        // empty matrix: Δ = 1
        assert_eq!(
            alexander(&SeifertForm::empty(1)),
            LaurentPolynomial::one()
        );
        // trefoil: 1 − t + t²
        assert_eq!(
            alexander(&SeifertForm::trefoil()),
            LaurentPolynomial::from_i64(0, &[1, -1, 1])
        );
        // k×k zero matrix, k ≥ 1: determinant vanishes identically
        let z = SeifertForm::new(IntMatrix::zeros(2, 2), 1).unwrap();
        assert!(alexander(&z).is_zero());
    }

    #[test]
    fn alexander_transpose_symmetry() {
        use crate::polyarith::poly_s_equivalent;
        for (a, parity) in [
            (m(&[vec![-1, 1], vec![0, -1]]), 1u8),
            (m(&[vec![2, 3, 0], vec![-1, 0, 1], vec![4, 1, 1]]), 0),
            (m(&[vec![1, -2], vec![5, 0]]), 0),
        ] {
            let s = SeifertForm::new(a.clone(), parity).unwrap();
            let st = SeifertForm::new(a.transpose(), parity).unwrap();
            // Δ_{Aᵀ}(t) is S-equivalent to Δ_A(t⁻¹)
            assert!(poly_s_equivalent(
                &alexander_raw(&st),
                &alexander_raw(&s).reverse()
            ));
        }
    }

    #[test]
    fn s_moves_round_trip() {
        let tre = SeifertForm::trefoil();
        let alpha = m(&[vec![3], vec![-2]]);
        let up = s_enlarge(&tre, SMove::Column, &alpha).unwrap();
        assert_eq!(up.dim(), 4);
        // Alexander polynomial survives up to normalization
        assert_eq!(alexander(&up), alexander(&tre));
        // the enlargement is recognized and reduced back
        let candidates = s_reduce_candidates(&up);
        assert!(candidates.contains(&tre));

        let beta = m(&[vec![7, 0]]);
        let up = s_enlarge(&tre, SMove::Row, &beta).unwrap();
        assert_eq!(alexander(&up), alexander(&tre));
        assert!(s_reduce_candidates(&up).contains(&tre));

        // enlargement of the empty form by a column move
        let e = SeifertForm::empty(1);
        let up = s_enlarge(&e, SMove::Column, &IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(up.matrix(), &m(&[vec![0, 0], vec![1, 0]]));
        assert_eq!(alexander(&up), LaurentPolynomial::one());

        // wrong vector shape
        assert!(s_enlarge(&tre, SMove::Column, &beta).is_err());
    }

    #[test]
    fn h_enlargement_tests() {
        let tre = SeifertForm::trefoil();
        let spec = SeifertEnlargementSpec::new(
            tre.clone(),
            IntMatrix::zeros(2, 1),
            m(&[vec![1]]),
            IntMatrix::zeros(1, 2),
            IntMatrix::zeros(1, 1),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        assert!(is_h_enlargement(&spec));
        assert_eq!(h_enlarge(&spec).dim(), 4);

        let spec = SeifertEnlargementSpec::new(
            tre.clone(),
            IntMatrix::zeros(2, 1),
            m(&[vec![2]]),
            IntMatrix::zeros(1, 2),
            IntMatrix::zeros(1, 1),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        assert!(!is_h_enlargement(&spec));
    }

    #[test]
    fn enlargement_alexander_factorization() {
        // Δ_{A'} = −det(tx + εy*) det(ty + εx*) Δ_A exactly
        let base = SeifertForm::trefoil();
        let eps = base.epsilon().sign() as i64;
        let spec = SeifertEnlargementSpec::new(
            base.clone(),
            m(&[vec![1], vec![-1]]),
            m(&[vec![2]]),
            m(&[vec![0, 3]]),
            m(&[vec![1]]),
            m(&[vec![-1]]),
        )
        .unwrap();
        let big = h_enlarge(&spec);
        let det_block = |p: &IntMatrix, s: &IntMatrix| {
            let lm = LaurentMatrix::from_fn(p.rows(), p.cols(), |i, j| {
                LaurentPolynomial::from_coefficients(
                    0,
                    vec![&s[(j, i)] * BigInt::from(eps), p[(i, j)].clone()],
                )
            });
            laurent_det(&lm)
        };
        let factor = det_block(&spec.x, &spec.y)
            .mul(&det_block(&spec.y, &spec.x))
            .neg();
        assert_eq!(alexander_raw(&big), factor.mul(&alexander_raw(&base)));
    }

    #[test]
    fn trefoil_levine_tristram() {
        let tre = SeifertForm::trefoil();
        // at ξ = −1: signature −2, nullity 0
        let lt = lt_invariants(&tre, xi(1, 2)).unwrap();
        assert_eq!(lt.signature, -2);
        assert_eq!(lt.nullity, 0);
        assert!(!lt.alexander_value_is_zero);
        // at ζ₆: Δ vanishes, nullity 1
        let lt = lt_invariants(&tre, xi(1, 6)).unwrap();
        assert_eq!(lt.nullity, 1);
        assert!(lt.alexander_value_is_zero);
        // zero matrix: nullity = dim, signature 0
        let z = SeifertForm::new(IntMatrix::zeros(3, 3), 1).unwrap();
        let lt = lt_invariants(&z, xi(1, 3)).unwrap();
        assert_eq!(lt.nullity, 3);
        assert_eq!(lt.signature, 0);
    }

    #[test]
    fn even_parity_lt_runs_through_the_i_twist() {
        // ε = +1: B_A(ξ) is skew-hermitian; inertia computed on iB
        let a = SeifertForm::new(m(&[vec![0, 1], vec![0, 0]]), 0).unwrap();
        let lt = lt_invariants(&a, xi(1, 3)).unwrap();
        assert!(lt.signature.unsigned_abs() as usize + lt.nullity <= a.dim());
        // mirror flips the signature at every ξ
        let mirror = SeifertForm::new(a.matrix().transpose().neg(), 0).unwrap();
        for root in [xi(1, 2), xi(1, 3), xi(2, 5)] {
            let l1 = lt_invariants(&a, root).unwrap();
            let l2 = lt_invariants(&mirror, root).unwrap();
            assert_eq!(l1.signature, -l2.signature);
            assert_eq!(l1.nullity, l2.nullity);
        }
    }

    #[test]
    fn rewriting_identity() {
        // B_A(ξ) = (ξ̄ − 1)(ξA + εAᵀ) as an exact matrix identity
        let s = SeifertForm::trefoil();
        let root = xi(2, 7);
        let q = root.denominator();
        let b = twisted_intersection_matrix(&s, root);
        let xi_el = CyclotomicNumber::from_root(root);
        let factor = xi_el.conjugate().sub(&CyclotomicNumber::one(q));
        let eps = s.epsilon().sign() as i64;
        let rhs = CycMatrix::from_fn(q, 2, 2, |i, j| {
            let term = xi_el
                .scale_int(&s.matrix()[(i, j)])
                .add(&CyclotomicNumber::from_int(
                    q,
                    &(&s.matrix()[(j, i)] * BigInt::from(eps)),
                ));
            factor.mul(&term)
        })
        .unwrap();
        assert_eq!(b, rhs);
    }

    #[test]
    fn invariance_reports() {
        let tre = SeifertForm::trefoil();
        // an H-enlargement is applicable and preserving at every ξ
        let spec = SeifertEnlargementSpec::new(
            tre.clone(),
            m(&[vec![1], vec![0]]),
            m(&[vec![1]]),
            m(&[vec![2, -1]]),
            IntMatrix::zeros(1, 1),
            m(&[vec![3]]),
        )
        .unwrap();
        assert!(is_h_enlargement(&spec));
        for root in [xi(1, 2), xi(1, 6), xi(3, 8)] {
            let rep = verify_enlargement_invariance(&spec, root).unwrap();
            assert!(rep.applicable);
            assert!(rep.preserved);
            assert_eq!(rep.jump, 0);
            assert_eq!(rep.kernel_form_signature, 0);
        }

        // x = y = 0, z = [1]: never applicable; the jump equals the kernel
        // form signature (+1 here, since (1−ξ)+(1−ξ̄) > 0)
        let spec = SeifertEnlargementSpec::new(
            tre.clone(),
            IntMatrix::zeros(2, 1),
            IntMatrix::zeros(1, 1),
            IntMatrix::zeros(1, 2),
            IntMatrix::zeros(1, 1),
            m(&[vec![1]]),
        )
        .unwrap();
        let rep = verify_enlargement_invariance(&spec, xi(1, 2)).unwrap();
        assert!(!rep.applicable);
        assert!(!rep.preserved);
        assert_eq!(rep.jump, 1);
        assert_eq!(rep.kernel_form_signature, 1);

        // empty base: direct recomputation matches
        let spec = SeifertEnlargementSpec::new(
            SeifertForm::empty(1),
            IntMatrix::zeros(0, 1),
            m(&[vec![1]]),
            IntMatrix::zeros(1, 0),
            IntMatrix::zeros(1, 1),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        let rep = verify_enlargement_invariance(&spec, xi(1, 4)).unwrap();
        assert!(rep.applicable && rep.preserved);
    }

    #[test]
    fn murasugi_kawauchi_worked_values() {
        // trivial instance
        let e = SeifertForm::empty(1);
        let inst = MKInstance::new(e.clone(), e.clone(), 0, 0, 0, xi(1, 2)).unwrap();
        let rep = mk_check(&inst).unwrap();
        assert_eq!((rep.lhs, rep.rhs, rep.holds, rep.slack), (0, 0, true, 0));

        // trefoil vs unknot with Betti data (4, 2, 0) at ξ = −1
        let inst = MKInstance::new(SeifertForm::trefoil(), e, 4, 2, 0, xi(1, 2)).unwrap();
        let rep = mk_check(&inst).unwrap();
        assert_eq!(rep.lhs, 2);
        assert_eq!(rep.rhs, 2);
        assert!(rep.holds);
        assert_eq!(rep.slack, 0);

        // identical forms: lhs = 0
        let tre = SeifertForm::trefoil();
        let inst = MKInstance::new(tre.clone(), tre, 7, 2, 2, xi(1, 3)).unwrap();
        let rep = mk_check(&inst).unwrap();
        assert_eq!(rep.lhs, 0);
        assert!(rep.holds);
    }

    #[test]
    fn distinguishing_power() {
        let tre = SeifertForm::trefoil();
        // an S-enlargement is not distinguished
        let up = s_enlarge(&tre, SMove::Column, &m(&[vec![5], vec![1]])).unwrap();
        assert_eq!(distinguish(&tre, &up, 8).unwrap(), None);
        // trefoil vs empty form: Alexander polynomial differs
        match distinguish(&tre, &SeifertForm::empty(1), 6).unwrap() {
            Some(Distinction::AlexanderPolynomial { .. }) => {}
            other => panic!("expected Alexander distinction, got {:?}", other),
        }
        // trefoil vs its mirror: same Δ, signature flips at −1
        let mirror = SeifertForm::new(tre.matrix().transpose().neg(), 1).unwrap();
        match distinguish(&tre, &mirror, 4).unwrap() {
            Some(Distinction::LevineTristram { invariants0, invariants1, .. }) => {
                assert_eq!(invariants0.1, -invariants1.1);
            }
            other => panic!("expected LT distinction, got {:?}", other),
        }
        // parity mismatch rejected
        let even = SeifertForm::empty(0);
        assert_eq!(
            distinguish(&tre, &even, 4).unwrap_err(),
            SeifertError::ParityMismatch
        );
    }
}

#[cfg(test)]
mod search_tests {
    use super::*;

    #[test]
    fn bounded_search_recovers_move_chains() {
        let tre = SeifertForm::trefoil();
        assert_eq!(bounded_s_search(&tre, &tre, 4, 1), Some(0));
        let up = s_enlarge(&tre, SMove::Column, &IntMatrix::from_rows(&[vec![1], vec![0]]))
            .unwrap();
        assert_eq!(bounded_s_search(&tre, &up, 4, 1), Some(1));
        assert_eq!(bounded_s_search(&up, &tre, 4, 1), Some(1));
        let up2 = s_enlarge(&up, SMove::Row, &IntMatrix::from_rows(&[vec![0, 1, 0, -1]]))
            .unwrap();
        assert_eq!(bounded_s_search(&tre, &up2, 4, 1), Some(2));
        // forms with different Alexander polynomials are never reached
        assert_eq!(bounded_s_search(&tre, &SeifertForm::empty(1), 3, 1), None);
    }
}
