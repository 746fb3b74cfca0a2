//! ε-symmetric forms over Z: radicals, annihilators, sublagrangian
//! quotients, rank-(ℓ⁻,ℓ⁺) enlargements and H-enlargements, exact
//! signatures and nullities, signature/nullity bounds for enlargements,
//! and Wall's non-additivity invariant for a triple of lagrangians.

use crate::exact_linalg::{self, IntMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("gram matrix is not {0}-symmetric")]
    NotEpsSymmetric(i8),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not isotropic for the form")]
    NotIsotropic,
    #[error("subspace basis does not span a direct summand (not saturated)")]
    NotSaturated,
    #[error("adjoint restricted to the subform is not surjective onto the dual")]
    AdjointNotSurjective,
    #[error("matrix is not a morphism of forms (j^T B j != B')")]
    NotAFormMorphism,
    #[error("supplied subspace is not a lagrangian")]
    InvalidLagrangian,
}

/// Sign ε ∈ {+1, −1} distinguishing symmetric from skew-symmetric forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub fn sign(self) -> i8 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }

    pub fn from_parity(n: u8) -> Self {
        if n.is_multiple_of(2) {
            Eps::Plus
        } else {
            Eps::Minus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Eps::Plus => Eps::Minus,
            Eps::Minus => Eps::Plus,
        }
    }

    fn apply(self, m: &IntMatrix) -> IntMatrix {
        match self {
            Eps::Plus => m.clone(),
            Eps::Minus => m.neg(),
        }
    }
}

/// An ε-symmetric bilinear form (F, B) over Z: `gram = ε · gramᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsSymmetricForm {
    epsilon: Eps,
    gram: IntMatrix,
}

impl EpsSymmetricForm {
    pub fn new(epsilon: Eps, gram: IntMatrix) -> Result<Self, FormError> {
        if !gram.is_square() || gram != epsilon.apply(&gram.transpose()) {
            return Err(FormError::NotEpsSymmetric(epsilon.sign()));
        }
        Ok(EpsSymmetricForm { epsilon, gram })
    }

    pub fn zero(epsilon: Eps, dim: usize) -> Self {
        EpsSymmetricForm {
            epsilon,
            gram: IntMatrix::zeros(dim, dim),
        }
    }

    /// The hyperbolic plane [[0, 1], [ε, 0]].
    pub fn hyperbolic(epsilon: Eps) -> Self {
        let mut gram = IntMatrix::zeros(2, 2);
        gram[(0, 1)] = BigInt::one();
        gram[(1, 0)] = BigInt::from(epsilon.sign());
        EpsSymmetricForm { epsilon, gram }
    }

    pub fn epsilon(&self) -> Eps {
        self.epsilon
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.epsilon, other.epsilon);
        let z1 = IntMatrix::zeros(self.dim(), other.dim());
        let z2 = IntMatrix::zeros(other.dim(), self.dim());
        EpsSymmetricForm {
            epsilon: self.epsilon,
            gram: IntMatrix::block(&[vec![&self.gram, &z1], vec![&z2, &other.gram]]),
        }
    }

    /// Base change `PᵀBP` along an arbitrary integer matrix P.
    pub fn pullback(&self, p: &IntMatrix) -> Self {
        EpsSymmetricForm {
            epsilon: self.epsilon,
            gram: p.transpose().mul(&self.gram).mul(p),
        }
    }

    pub fn is_nonsingular(&self) -> bool {
        self.gram.det().abs().is_one()
    }
}

/// Counts of positive, negative and zero eigenvalues of the associated
/// hermitian form; `signature = r_plus − r_minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaProfile {
    pub r_plus: usize,
    pub r_minus: usize,
    pub nullity: usize,
}

impl InertiaProfile {
    pub fn signature(&self) -> i64 {
        self.r_plus as i64 - self.r_minus as i64
    }

    pub fn dimension(&self) -> usize {
        self.r_plus + self.r_minus + self.nullity
    }
}

/// Inertia of a rational symmetric matrix by exact symmetric pivoting.
/// Zero diagonals are handled by 2×2 hyperbolic pivot blocks (inertia
/// (1,1)); an all-zero remaining block contributes nullity.
fn rational_symmetric_inertia(m: &IntMatrix) -> InertiaProfile {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut r_plus = 0;
    let mut r_minus = 0;
    let mut nullity = 0;
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let i = active[pos];
            let d = a[i][i].clone();
            if d.is_positive() {
                r_plus += 1;
            } else {
                r_minus += 1;
            }
            active.remove(pos);
            for &r in &active {
                if a[r][i].is_zero() {
                    continue;
                }
                let f = &a[r][i] / &d;
                for &c in &active {
                    let t = &f * &a[i][c];
                    a[r][c] -= t;
                }
            }
            continue;
        }
        let mut found = None;
        'search: for (pi, &i) in active.iter().enumerate() {
            for (pj, &j) in active.iter().enumerate() {
                if pi < pj && !a[i][j].is_zero() {
                    found = Some((pi, pj));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else {
            nullity += active.len();
            break;
        };
        let (i, j) = (active[pi], active[pj]);
        r_plus += 1;
        r_minus += 1;
        let s = a[i][j].clone();
        active.remove(pj);
        active.remove(pi);
        for &r in &active {
            let f1 = &a[r][i] / &s; // pairs against row j
            let f2 = &a[r][j] / &s; // pairs against row i
            for &c in &active {
                let t = &f1 * &a[j][c] + &f2 * &a[i][c];
                a[r][c] -= t;
            }
        }
    }
    InertiaProfile {
        r_plus,
        r_minus,
        nullity,
    }
}

/// Exact inertia of an ε-symmetric form over Z.
///
/// For ε = +1 this is Sylvester inertia of the gram matrix over Q. For
/// ε = −1 the hermitian form iB is evaluated through its real doubling
/// [[0, −B], [B, 0]], whose inertia is twice that of iB.
pub fn inertia(f: &EpsSymmetricForm) -> InertiaProfile {
    match f.epsilon {
        Eps::Plus => rational_symmetric_inertia(&f.gram),
        Eps::Minus => {
            let n = f.dim();
            let z = IntMatrix::zeros(n, n);
            let neg = f.gram.neg();
            let doubled = IntMatrix::block(&[vec![&z, &neg], vec![&f.gram, &z]]);
            let p = rational_symmetric_inertia(&doubled);
            debug_assert!(p.r_plus.is_multiple_of(2) && p.r_minus.is_multiple_of(2) && p.nullity.is_multiple_of(2));
            InertiaProfile {
                r_plus: p.r_plus / 2,
                r_minus: p.r_minus / 2,
                nullity: p.nullity / 2,
            }
        }
    }
}

pub fn signature(f: &EpsSymmetricForm) -> i64 {
    inertia(f).signature()
}

pub fn nullity(f: &EpsSymmetricForm) -> usize {
    inertia(f).nullity
}

/// A direct summand of a form's underlying module, with the restricted
/// pairing. The stored basis is always saturated; if the input basis was
/// not, it is saturated at construction and `input_was_saturated` is false.
#[derive(Clone, Debug)]
pub struct Subform {
    parent: EpsSymmetricForm,
    inclusion: IntMatrix,
    input_was_saturated: bool,
}

impl Subform {
    pub fn new(parent: &EpsSymmetricForm, inclusion: IntMatrix) -> Result<Self, FormError> {
        if inclusion.rows() != parent.dim() {
            return Err(FormError::DimensionMismatch(format!(
                "inclusion has {} rows, form has dimension {}",
                inclusion.rows(),
                parent.dim()
            )));
        }
        if exact_linalg::rank(&inclusion) != inclusion.cols() {
            return Err(FormError::DimensionMismatch(
                "inclusion columns are linearly dependent".into(),
            ));
        }
        let saturated = exact_linalg::saturation(&inclusion, parent.dim());
        // saturated input iff the original columns already span the saturation
        let input_was_saturated = exact_linalg::solve(&inclusion, &saturated).is_some();
        let basis = if input_was_saturated {
            inclusion
        } else {
            saturated
        };
        Ok(Subform {
            parent: parent.clone(),
            inclusion: basis,
            input_was_saturated,
        })
    }

    pub fn parent(&self) -> &EpsSymmetricForm {
        &self.parent
    }

    pub fn inclusion(&self) -> &IntMatrix {
        &self.inclusion
    }

    pub fn rank(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn input_was_saturated(&self) -> bool {
        self.input_was_saturated
    }

    /// The restriction of the parent pairing to this summand.
    pub fn restricted_form(&self) -> EpsSymmetricForm {
        self.parent.pullback(&self.inclusion)
    }

    pub fn is_isotropic(&self) -> bool {
        self.restricted_form().gram().is_zero()
    }
}

/// The annihilator subform: `ker(jᵀB : F -> L*)`, always saturated.
pub fn annihilator(s: &Subform) -> Subform {
    let jt_b = s.inclusion.transpose().mul(s.parent.gram());
    let basis = exact_linalg::kernel_basis(&jt_b);
    Subform {
        parent: s.parent.clone(),
        inclusion: basis,
        input_was_saturated: true,
    }
}

/// The radical: the annihilator of the whole form, `ker(B)`.
pub fn radical(f: &EpsSymmetricForm) -> Subform {
    let whole = Subform {
        parent: f.clone(),
        inclusion: IntMatrix::identity(f.dim()),
        input_was_saturated: true,
    };
    annihilator(&whole)
}

/// Checks that `l` is a sublagrangian: isotropic, saturated as given, and
/// with `jᵀB : F -> L*` surjective.
fn check_sublagrangian(l: &Subform) -> Result<(), FormError> {
    if !l.is_isotropic() {
        return Err(FormError::NotIsotropic);
    }
    if !l.input_was_saturated {
        return Err(FormError::NotSaturated);
    }
    let jt_b = l.inclusion.transpose().mul(l.parent.gram());
    let snf = exact_linalg::smith_normal_form(&jt_b);
    let onto = snf.rank() == l.rank() && snf.diagonal().iter().all(|d| d.is_zero() || d.is_one());
    if !onto {
        return Err(FormError::AdjointNotSurjective);
    }
    Ok(())
}

/// Whether `l` is a lagrangian: a sublagrangian equal to its own annihilator.
pub fn is_lagrangian(l: &Subform) -> bool {
    if check_sublagrangian(l).is_err() {
        return false;
    }
    annihilator(l).rank() == l.rank()
}

/// The quotient form `(L^⊥ / L, [B])` of a sublagrangian.
///
/// Signature and nullity agree with the ambient form; the dimension drops
/// by twice the rank of `L`.
pub fn sublagrangian_quotient(
    f: &EpsSymmetricForm,
    l: &Subform,
) -> Result<EpsSymmetricForm, FormError> {
    assert_eq!(l.parent.gram(), f.gram(), "subform belongs to another form");
    check_sublagrangian(l)?;
    let perp = annihilator(l); // saturated, contains l
    let l_in_perp = exact_linalg::solve(perp.inclusion(), l.inclusion())
        .expect("sublagrangian lies inside its annihilator");
    // complement of l inside the annihilator projects to a basis of L^⊥/L
    let complement = exact_linalg::complement_of_saturated(&l_in_perp);
    let section = perp.inclusion().mul(&complement);
    Ok(f.pullback(&section))
}

/// The data of a rank-(ℓ⁻, ℓ⁺) enlargement
/// `[[B, 0, C], [0, 0, D], [εCᵀ, εDᵀ, E]]` of a base form.
#[derive(Clone, Debug)]
pub struct EnlargementSpec {
    pub base: EpsSymmetricForm,
    pub l_minus: usize,
    pub l_plus: usize,
    pub c: IntMatrix,
    pub d: IntMatrix,
    pub e: IntMatrix,
}

impl EnlargementSpec {
    pub fn new(
        base: EpsSymmetricForm,
        c: IntMatrix,
        d: IntMatrix,
        e: IntMatrix,
    ) -> Result<Self, FormError> {
        let k = base.dim();
        let l_minus = d.rows();
        let l_plus = d.cols();
        if c.rows() != k || c.cols() != l_plus || e.rows() != l_plus || e.cols() != l_plus {
            return Err(FormError::DimensionMismatch(format!(
                "blocks C {}x{}, D {}x{}, E {}x{} against base dim {}",
                c.rows(),
                c.cols(),
                d.rows(),
                d.cols(),
                e.rows(),
                e.cols(),
                k
            )));
        }
        if e != base.epsilon().apply(&e.transpose()) {
            return Err(FormError::NotEpsSymmetric(base.epsilon().sign()));
        }
        Ok(EnlargementSpec {
            base,
            l_minus,
            l_plus,
            c,
            d,
            e,
        })
    }

    pub fn rank_increase(&self) -> usize {
        self.l_minus + self.l_plus
    }
}

/// Build the enlarged form of a spec.
pub fn enlarge(spec: &EnlargementSpec) -> EpsSymmetricForm {
    let eps = spec.base.epsilon();
    let k = spec.base.dim();
    let zero_km = IntMatrix::zeros(k, spec.l_minus);
    let zero_mk = IntMatrix::zeros(spec.l_minus, k);
    let zero_mm = IntMatrix::zeros(spec.l_minus, spec.l_minus);
    let ect = eps.apply(&spec.c.transpose());
    let edt = eps.apply(&spec.d.transpose());
    let gram = IntMatrix::block(&[
        vec![spec.base.gram(), &zero_km, &spec.c],
        vec![&zero_mk, &zero_mm, &spec.d],
        vec![&ect, &edt, &spec.e],
    ]);
    EpsSymmetricForm::new(eps, gram).expect("block pattern is eps-symmetric by construction")
}

/// An H-enlargement has ℓ⁻ = ℓ⁺ and unimodular cross block D.
pub fn is_h_enlargement(spec: &EnlargementSpec) -> bool {
    spec.l_minus == spec.l_plus && spec.d.det().abs().is_one()
}

/// The annihilator `(F^⊥, B^⊥)` of the base inside its enlargement:
/// `F^⊥ = ker((B 0 C))` carrying the restriction of the enlarged pairing.
/// Satisfies `σ(enlarged) − σ(base) = σ(F^⊥, B^⊥)`.
pub fn perp_of_base(spec: &EnlargementSpec) -> EpsSymmetricForm {
    let k = spec.base.dim();
    let adjoint_rows = spec
        .base
        .gram()
        .hstack(&IntMatrix::zeros(k, spec.l_minus))
        .hstack(&spec.c);
    let kernel = exact_linalg::kernel_basis(&adjoint_rows);
    enlarge(spec).pullback(&kernel)
}

/// Signature/nullity deltas of an enlargement against the rank bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnlargementInvariants {
    pub delta_sigma: i64,
    pub delta_nullity: i64,
    pub bound_ok: bool,
    /// `Some(|Δσ| + |Δn| == 1)` when ell == 1, `None` otherwise.
    pub equality_if_rank1: Option<bool>,
}

/// Check `|Δσ| + |Δn| <= ell` (with equality forced at ell = 1) for a
/// caller-supplied enlargement relationship.
pub fn verify_inv1(
    base: &EpsSymmetricForm,
    enlarged: &EpsSymmetricForm,
    ell: usize,
) -> Result<EnlargementInvariants, FormError> {
    if enlarged.dim() != base.dim() + ell {
        return Err(FormError::DimensionMismatch(format!(
            "enlarged dim {} != base dim {} + {}",
            enlarged.dim(),
            base.dim(),
            ell
        )));
    }
    let pb = inertia(base);
    let pe = inertia(enlarged);
    let delta_sigma = pe.signature() - pb.signature();
    let delta_nullity = pe.nullity as i64 - pb.nullity as i64;
    let total = delta_sigma.abs() + delta_nullity.abs();
    Ok(EnlargementInvariants {
        delta_sigma,
        delta_nullity,
        bound_ok: total <= ell as i64,
        equality_if_rank1: (ell == 1).then_some(total == 1),
    })
}

/// Three verified lagrangians of one ε-symmetric form, the input to Wall's
/// non-additivity invariant.
#[derive(Clone, Debug)]
pub struct TriadLagrangians {
    pub ambient: EpsSymmetricForm,
    pub j_minus: IntMatrix,
    pub j_dprime: IntMatrix,
    pub j_plus: IntMatrix,
}

impl TriadLagrangians {
    pub fn new(
        ambient: EpsSymmetricForm,
        j_minus: IntMatrix,
        j_dprime: IntMatrix,
        j_plus: IntMatrix,
    ) -> Result<Self, FormError> {
        for j in [&j_minus, &j_dprime, &j_plus] {
            let sub = Subform::new(&ambient, j.clone())?;
            if !sub.input_was_saturated() || !is_lagrangian(&sub) {
                return Err(FormError::InvalidLagrangian);
            }
        }
        Ok(TriadLagrangians {
            ambient,
            j_minus,
            j_dprime,
            j_plus,
        })
    }
}

/// Wall's non-additivity invariant: the signature of the (−ε)-symmetric
/// kernel form assembled from the three lagrangians. Antisymmetric under
/// swapping two of them.
pub fn wall_triad_signature(t: &TriadLagrangians) -> i64 {
    let b = t.ambient.gram();
    let pairing = |x: &IntMatrix, y: &IntMatrix| x.transpose().mul(b).mul(y);
    // block order (L'', L^-, L^+)
    let (p, q, r) = (&t.j_dprime, &t.j_minus, &t.j_plus);
    let w12 = pairing(p, q);
    let w13 = pairing(p, r);
    let w23 = pairing(q, r);
    let w21 = pairing(q, p).neg();
    let w31 = pairing(r, p).neg();
    let w32 = pairing(r, q).neg();
    let z1 = IntMatrix::zeros(p.cols(), p.cols());
    let z2 = IntMatrix::zeros(q.cols(), q.cols());
    let z3 = IntMatrix::zeros(r.cols(), r.cols());
    let w = IntMatrix::block(&[
        vec![&z1, &w12, &w13],
        vec![&w21, &z2, &w23],
        vec![&w31, &w32, &z3],
    ]);
    let stacked = p.hstack(q).hstack(r);
    let kernel = exact_linalg::kernel_basis(&stacked);
    let restricted = kernel.transpose().mul(&w).mul(&kernel);
    let form = EpsSymmetricForm::new(t.ambient.epsilon().flip(), restricted)
        .expect("kernel form is (-eps)-symmetric");
    signature(&form)
}

/// The bound `|σ(F′,B′)| <= dim F − dim F′ + n(F′,B′)` for a morphism
/// `j : (F′,B′) -> (F,B)` into a metabolic form. The caller supplies the
/// lagrangian certifying metabolicity; the morphism and the lagrangian are
/// both verified before the inequality is evaluated.
pub fn metabolic_bound(
    f_sub: &EpsSymmetricForm,
    f_meta: &EpsSymmetricForm,
    j: &IntMatrix,
    lagrangian: &IntMatrix,
) -> Result<bool, FormError> {
    if j.rows() != f_meta.dim() || j.cols() != f_sub.dim() {
        return Err(FormError::DimensionMismatch(format!(
            "morphism is {}x{}, expected {}x{}",
            j.rows(),
            j.cols(),
            f_meta.dim(),
            f_sub.dim()
        )));
    }
    if f_meta.pullback(j).gram() != f_sub.gram() {
        return Err(FormError::NotAFormMorphism);
    }
    let lsub = Subform::new(f_meta, lagrangian.clone())?;
    if !lsub.input_was_saturated() || !is_lagrangian(&lsub) {
        return Err(FormError::InvalidLagrangian);
    }
    let p = inertia(f_sub);
    let bound = f_meta.dim() as i64 - f_sub.dim() as i64 + p.nullity as i64;
    Ok(p.signature().abs() <= bound)
}

/// Exhaustive search for a lagrangian using primitive vectors with entries
/// bounded by `coeff_bound`. Only sensible for dim <= 4; returns the first
/// lagrangian found (columns), or None.
pub fn find_lagrangian_bounded(f: &EpsSymmetricForm, coeff_bound: i64) -> Option<IntMatrix> {
    let n = f.dim();
    if !n.is_multiple_of(2) {
        return None;
    }
    if n == 0 {
        return Some(IntMatrix::zeros(0, 0));
    }
    let half = n / 2;
    assert!(n <= 4, "bounded lagrangian search is limited to dim <= 4");
    // enumerate primitive isotropic vectors
    let mut candidates: Vec<IntMatrix> = Vec::new();
    let range: Vec<i64> = (-coeff_bound..=coeff_bound).collect();
    let mut idx = vec![0usize; n];
    loop {
        let v: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
        if v.iter().any(|&x| x != 0) {
            let g = v.iter().fold(0i64, |a, &b| num_integer::gcd(a, b.abs()));
            // primitive, and deduplicated up to overall sign
            if g == 1 && v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
                let vm = IntMatrix::from_fn(n, 1, |i, _| BigInt::from(v[i]));
                if vm.transpose().mul(f.gram()).mul(&vm).is_zero() {
                    candidates.push(vm);
                }
            }
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            idx[pos] += 1;
            if idx[pos] < range.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    let try_basis = |basis: IntMatrix| -> Option<IntMatrix> {
        if exact_linalg::rank(&basis) != half {
            return None;
        }
        let sat = exact_linalg::saturation(&basis, n);
        let sub = Subform::new(f, sat.clone()).ok()?;
        if sub.is_isotropic() && is_lagrangian(&sub) {
            Some(sat)
        } else {
            None
        }
    };
    if half == 1 {
        for v in &candidates {
            if let Some(l) = try_basis(v.clone()) {
                return Some(l);
            }
        }
        return None;
    }
    for i in 0..candidates.len() {
        for j in i + 1..candidates.len() {
            let vi = &candidates[i];
            let vj = &candidates[j];
            if !vi.transpose().mul(f.gram()).mul(vj).is_zero() {
                continue;
            }
            if let Some(l) = try_basis(vi.hstack(vj)) {
                return Some(l);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn sym(rows: &[Vec<i64>]) -> EpsSymmetricForm {
        EpsSymmetricForm::new(Eps::Plus, m(rows)).unwrap()
    }

    #[test]
    fn inertia_worked_values() {
        let id3 = sym(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(
            inertia(&id3),
            InertiaProfile { r_plus: 3, r_minus: 0, nullity: 0 }
        );
        let hyp = sym(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            inertia(&hyp),
            InertiaProfile { r_plus: 1, r_minus: 1, nullity: 0 }
        );
        assert_eq!(signature(&hyp), 0);
        // skew standard plane: signature 0 over (Z, -1)
        let skew = EpsSymmetricForm::new(Eps::Minus, m(&[vec![0, 1], vec![-1, 0]])).unwrap();
        assert_eq!(signature(&skew), 0);
        assert_eq!(
            inertia(&skew),
            InertiaProfile { r_plus: 1, r_minus: 1, nullity: 0 }
        );
        // skew with radical
        let skew0 = EpsSymmetricForm::new(Eps::Minus, IntMatrix::zeros(1, 1)).unwrap();
        assert_eq!(inertia(&skew0).nullity, 1);
    }

    #[test]
    fn symmetry_enforced() {
        assert!(EpsSymmetricForm::new(Eps::Plus, m(&[vec![0, 1], vec![-1, 0]])).is_err());
        assert!(EpsSymmetricForm::new(Eps::Minus, m(&[vec![0, 1], vec![1, 0]])).is_err());
        assert!(EpsSymmetricForm::new(Eps::Minus, m(&[vec![1]])).is_err());
    }

    #[test]
    fn radical_and_annihilator() {
        let f = sym(&[vec![1, 0], vec![0, -1]]);
        assert_eq!(radical(&f).rank(), 0);
        let zero = EpsSymmetricForm::zero(Eps::Plus, 2);
        assert_eq!(radical(&zero).rank(), 2);
        // f = diag(1, 0), subform = first axis: annihilator = second axis
        let f = sym(&[vec![1, 0], vec![0, 0]]);
        let first = Subform::new(&f, m(&[vec![1], vec![0]])).unwrap();
        let ann = annihilator(&first);
        assert_eq!(ann.rank(), 1);
        assert!(ann.inclusion()[(0, 0)].is_zero());
        assert!(ann.inclusion()[(1, 0)].abs().is_one());
    }

    #[test]
    fn subform_saturates_input() {
        let f = sym(&[vec![0, 1], vec![1, 0]]);
        let s = Subform::new(&f, m(&[vec![2], vec![0]])).unwrap();
        assert!(!s.input_was_saturated());
        assert!(s.inclusion()[(0, 0)].abs().is_one());
    }

    #[test]
    fn sublagrangian_quotients() {
        // hyperbolic with lagrangian first axis: quotient is the zero-dim form
        let hyp = EpsSymmetricForm::hyperbolic(Eps::Plus);
        let l = Subform::new(&hyp, m(&[vec![1], vec![0]])).unwrap();
        let q = sublagrangian_quotient(&hyp, &l).unwrap();
        assert_eq!(q.dim(), 0);

        // f ⊕ H with L the lagrangian of H recovers f
        let f = sym(&[vec![3]]);
        let fh = f.direct_sum(&EpsSymmetricForm::hyperbolic(Eps::Plus));
        let l = Subform::new(&fh, m(&[vec![0], vec![1], vec![0]])).unwrap();
        let q = sublagrangian_quotient(&fh, &l).unwrap();
        assert_eq!(q.gram(), f.gram());

        // [[0,1,0],[1,0,0],[0,0,2]] with L = e1: quotient [[2]]
        let g = sym(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 2]]);
        let l = Subform::new(&g, m(&[vec![1], vec![0], vec![0]])).unwrap();
        let q = sublagrangian_quotient(&g, &l).unwrap();
        assert_eq!(q.gram(), &m(&[vec![2]]));

        // error paths are distinct
        let not_iso = Subform::new(&g, m(&[vec![0], vec![0], vec![1]])).unwrap();
        assert_eq!(
            sublagrangian_quotient(&g, &not_iso).unwrap_err(),
            FormError::NotIsotropic
        );
        let zero = EpsSymmetricForm::zero(Eps::Plus, 2);
        let l = Subform::new(&zero, m(&[vec![1], vec![0]])).unwrap();
        assert_eq!(
            sublagrangian_quotient(&zero, &l).unwrap_err(),
            FormError::AdjointNotSurjective
        );
    }

    #[test]
    fn enlargement_block_and_h_test() {
        let base = sym(&[vec![1]]);
        // trivial enlargement
        let spec = EnlargementSpec::new(
            base.clone(),
            IntMatrix::zeros(1, 0),
            IntMatrix::zeros(0, 0),
            IntMatrix::zeros(0, 0),
        )
        .unwrap();
        assert_eq!(enlarge(&spec).gram(), base.gram());
        assert!(is_h_enlargement(&spec));

        // hyperbolic H-enlargement preserves signature and nullity
        let spec = EnlargementSpec::new(
            base.clone(),
            IntMatrix::zeros(1, 1),
            m(&[vec![1]]),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        assert!(is_h_enlargement(&spec));
        let big = enlarge(&spec);
        assert_eq!(signature(&big), signature(&base));
        assert_eq!(nullity(&big), nullity(&base));

        // D = [2] is not an H-enlargement
        let spec = EnlargementSpec::new(
            base,
            IntMatrix::zeros(1, 1),
            m(&[vec![2]]),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        assert!(!is_h_enlargement(&spec));
    }

    #[test]
    fn perp_of_base_cases() {
        // base nonsingular, rank-(0,1) enlargement with C = 0: perp is the new
        // line with its self-pairing E
        let base = sym(&[vec![1]]);
        let spec = EnlargementSpec::new(
            base.clone(),
            IntMatrix::zeros(1, 1),
            IntMatrix::zeros(0, 1),
            m(&[vec![7]]),
        )
        .unwrap();
        let perp = perp_of_base(&spec);
        assert_eq!(perp.gram(), &m(&[vec![7]]));

        // zero-dimensional base: perp is the whole enlargement
        let spec = EnlargementSpec::new(
            EpsSymmetricForm::zero(Eps::Plus, 0),
            IntMatrix::zeros(0, 1),
            m(&[vec![1]]),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        let perp = perp_of_base(&spec);
        assert_eq!(perp.dim(), 2);
        assert_eq!(signature(&perp), signature(&enlarge(&spec)));

        // hyperbolic enlargement of I1: signature difference 0 = σ(perp)
        let spec = EnlargementSpec::new(
            base.clone(),
            IntMatrix::zeros(1, 1),
            m(&[vec![1]]),
            IntMatrix::zeros(1, 1),
        )
        .unwrap();
        let diff = signature(&enlarge(&spec)) - signature(&base);
        assert_eq!(diff, 0);
        assert_eq!(signature(&perp_of_base(&spec)), 0);
    }

    #[test]
    fn inv1_worked_values() {
        // new diagonal entry 1: Δσ = 1, Δn = 0
        let base = sym(&[vec![1]]);
        let enlarged = sym(&[vec![1, 0], vec![0, 1]]);
        let r = verify_inv1(&base, &enlarged, 1).unwrap();
        assert_eq!((r.delta_sigma, r.delta_nullity), (1, 0));
        assert_eq!(r.equality_if_rank1, Some(true));

        // all-zero new row/column: Δσ = 0, Δn = 1
        let enlarged = sym(&[vec![1, 0], vec![0, 0]]);
        let r = verify_inv1(&base, &enlarged, 1).unwrap();
        assert_eq!((r.delta_sigma, r.delta_nullity), (0, 1));
        assert_eq!(r.equality_if_rank1, Some(true));

        // rank-2 hyperbolic enlargement: both zero, bound 2 holds
        let enlarged = base.direct_sum(&EpsSymmetricForm::hyperbolic(Eps::Plus));
        let r = verify_inv1(&base, &enlarged, 2).unwrap();
        assert_eq!((r.delta_sigma, r.delta_nullity), (0, 0));
        assert!(r.bound_ok);
        assert_eq!(r.equality_if_rank1, None);

        // dimension mismatch is an error
        assert!(verify_inv1(&base, &base, 1).is_err());
    }

    #[test]
    fn wall_on_complex_projective_plane_data() {
        // F'' = Z^2 with the standard skew form; L^- the diagonal,
        // L'' the second axis, L^+ the first axis. Expected value 1.
        let ambient = EpsSymmetricForm::new(Eps::Minus, m(&[vec![0, 1], vec![-1, 0]])).unwrap();
        let t = TriadLagrangians::new(
            ambient.clone(),
            m(&[vec![1], vec![1]]),
            m(&[vec![0], vec![1]]),
            m(&[vec![1], vec![0]]),
        )
        .unwrap();
        assert_eq!(wall_triad_signature(&t), 1);

        // swapping L^- and L^+ flips the sign
        let swapped = TriadLagrangians::new(
            ambient.clone(),
            m(&[vec![1], vec![0]]),
            m(&[vec![0], vec![1]]),
            m(&[vec![1], vec![1]]),
        )
        .unwrap();
        assert_eq!(wall_triad_signature(&swapped), -1);

        // two coinciding lagrangians give 0
        let degenerate = TriadLagrangians::new(
            ambient,
            m(&[vec![1], vec![1]]),
            m(&[vec![1], vec![1]]),
            m(&[vec![1], vec![0]]),
        )
        .unwrap();
        assert_eq!(wall_triad_signature(&degenerate), 0);
    }

    #[test]
    fn wall_on_symmetric_ambient_is_zero() {
        // for a +1-symmetric ambient the kernel form is skew, so the
        // signature vanishes identically
        let h2 = EpsSymmetricForm::hyperbolic(Eps::Plus);
        let ambient = h2.direct_sum(&EpsSymmetricForm::hyperbolic(Eps::Plus));
        let l1 = m(&[vec![1, 0], vec![0, 0], vec![0, 1], vec![0, 0]]); // e1, e3
        let l2 = m(&[vec![0, 0], vec![1, 0], vec![0, 0], vec![0, 1]]); // e2, e4
        let l3 = m(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![0, 0]]); // e2, e3
        let t = TriadLagrangians::new(ambient, l1, l2, l3).unwrap();
        assert_eq!(wall_triad_signature(&t), 0);
    }

    #[test]
    fn wall_rejects_non_lagrangians() {
        let ambient = EpsSymmetricForm::new(Eps::Minus, m(&[vec![0, 1], vec![-1, 0]])).unwrap();
        let bad = TriadLagrangians::new(
            ambient,
            m(&[vec![1], vec![1]]),
            m(&[vec![0], vec![2]]), // not saturated
            m(&[vec![1], vec![0]]),
        );
        assert_eq!(bad.unwrap_err(), FormError::InvalidLagrangian);
    }

    #[test]
    fn metabolic_bound_cases() {
        let hyp = EpsSymmetricForm::hyperbolic(Eps::Plus);
        let lag = m(&[vec![1], vec![0]]);
        // identity into itself: 0 <= 0
        assert!(metabolic_bound(&hyp, &hyp, &IntMatrix::identity(2), &lag).unwrap());

        // I1 diagonally into H ⊕ I1 ⊕ (−I1)
        let meta = hyp
            .direct_sum(&sym(&[vec![1]]))
            .direct_sum(&sym(&[vec![-1]]));
        let l = m(&[
            vec![1, 0],
            vec![0, 0],
            vec![0, 1],
            vec![0, 1],
        ]);
        // j embeds I1 with image (0,0,1,0): j^T B j = [1]
        let j = m(&[vec![0], vec![0], vec![1], vec![0]]);
        assert!(metabolic_bound(&sym(&[vec![1]]), &meta, &j, &l).unwrap());

        // non-morphism rejected
        let j_bad = m(&[vec![1], vec![0], vec![0], vec![0]]);
        assert_eq!(
            metabolic_bound(&sym(&[vec![1]]), &meta, &j_bad, &l).unwrap_err(),
            FormError::NotAFormMorphism
        );
    }

    #[test]
    fn bounded_lagrangian_search_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..8 {
            // a visibly metabolic form [[0, I],[εI, C]] pushed through a
            // small unimodular congruence
            let c = rng.random_range(-2..=2i64);
            let gram = m(&[vec![0, 1], vec![1, c]]);
            let f = EpsSymmetricForm::new(Eps::Plus, gram).unwrap();
            let p = m(&[vec![1, rng.random_range(-1..=1)], vec![0, 1]]);
            let g = f.pullback(&p);
            let l = find_lagrangian_bounded(&g, 3).expect("metabolic by construction");
            let sub = Subform::new(&g, l).unwrap();
            assert!(is_lagrangian(&sub));
        }
    }

    #[test]
    fn sylvester_consistency_under_congruence() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let n = rng.random_range(1..=4);
            let raw = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.random_range(-4..=4)));
            let gram = raw.add(&raw.transpose());
            let f = EpsSymmetricForm::new(Eps::Plus, gram).unwrap();
            // random unimodular: product of elementary operations
            let mut p = IntMatrix::identity(n);
            for _ in 0..6 {
                let i = rng.random_range(0..n);
                let j = rng.random_range(0..n);
                if i != j {
                    let c = BigInt::from(rng.random_range(-2..=2));
                    let mut e = IntMatrix::identity(n);
                    e[(i, j)] = c;
                    p = p.mul(&e);
                }
            }
            assert_eq!(inertia(&f), inertia(&f.pullback(&p)));
        }
    }
}
