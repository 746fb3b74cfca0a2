//! Bounded chain complexes of finitely generated free Z-modules, chain
//! maps, mapping cones, shifts, duals, unions, and the half-handle
//! construction whose cone detects H-cobordisms.

use crate::exact_linalg::{homology_at, AbelianGroup, IntMatrix};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("differential shape mismatch at degree {degree}: expected {expected_rows}x{expected_cols}, got {got_rows}x{got_cols}")]
    DifferentialShape {
        degree: i64,
        expected_rows: usize,
        expected_cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("d∘d != 0 at degree {0}")]
    SquareNotZero(i64),
    #[error("chain map condition fails at degree {0}")]
    NotAChainMap(i64),
    #[error("component shape mismatch at degree {0}")]
    ComponentShape(i64),
    #[error("maps into a union must share their source complex")]
    MismatchedSources,
    #[error("triad squares do not commute: {0}")]
    TriadCommutation(String),
}

fn parity_sign(r: i64) -> i64 {
    if r.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn signed(m: &IntMatrix, sign: i64) -> IntMatrix {
    if sign >= 0 {
        m.clone()
    } else {
        m.neg()
    }
}

/// A bounded complex `(C, d)` with `d_r : C_r -> C_{r-1}` and `d² = 0`.
/// Ranks are zero outside the stored degree window.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    lo: i64,
    ranks: Vec<usize>,
    /// `diffs[i]` is the differential leaving degree `lo + i`; its shape is
    /// `rank(lo+i-1) × rank(lo+i)`, with `rank(lo-1) = 0` for `i = 0`.
    diffs: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Build from the ranks at degrees `lo, lo+1, ...` and the interior
    /// differentials `d_{lo+1}, ..., d_{hi}` (shape `ranks[i] × ranks[i+1]`).
    pub fn new(lo: i64, ranks: Vec<usize>, interior: Vec<IntMatrix>) -> Result<Self, ChainError> {
        if interior.len() + 1 != ranks.len().max(1) {
            return Err(ChainError::DifferentialShape {
                degree: lo,
                expected_rows: ranks.len().saturating_sub(1),
                expected_cols: 0,
                got_rows: interior.len(),
                got_cols: 0,
            });
        }
        let mut diffs = Vec::with_capacity(ranks.len());
        if !ranks.is_empty() {
            diffs.push(IntMatrix::zeros(0, ranks[0]));
            for (i, d) in interior.into_iter().enumerate() {
                let degree = lo + i as i64 + 1;
                if d.rows() != ranks[i] || d.cols() != ranks[i + 1] {
                    return Err(ChainError::DifferentialShape {
                        degree,
                        expected_rows: ranks[i],
                        expected_cols: ranks[i + 1],
                        got_rows: d.rows(),
                        got_cols: d.cols(),
                    });
                }
                diffs.push(d);
            }
        }
        let c = ChainComplex { lo, ranks, diffs };
        for r in c.degree_lo()..=c.degree_hi() {
            let comp = c.differential_at(r).mul(&c.differential_at(r + 1));
            if !comp.is_zero() {
                return Err(ChainError::SquareNotZero(r + 1));
            }
        }
        Ok(c.trimmed())
    }

    /// The zero complex.
    pub fn zero() -> Self {
        ChainComplex {
            lo: 0,
            ranks: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// `Z^rank` concentrated in one degree.
    pub fn concentrated(degree: i64, rank: usize) -> Self {
        if rank == 0 {
            return Self::zero();
        }
        ChainComplex {
            lo: degree,
            ranks: vec![rank],
            diffs: vec![IntMatrix::zeros(0, rank)],
        }
    }

    fn trimmed(mut self) -> Self {
        while self.ranks.last() == Some(&0) {
            self.ranks.pop();
            self.diffs.pop();
        }
        while self.ranks.first() == Some(&0) {
            self.ranks.remove(0);
            self.diffs.remove(0);
            self.lo += 1;
            if !self.diffs.is_empty() {
                // the new bottom differential leaves into rank 0
                self.diffs[0] = IntMatrix::zeros(0, self.ranks[0]);
            }
        }
        if self.ranks.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero_complex(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lowest degree with (possibly) nonzero rank.
    pub fn degree_lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree with (possibly) nonzero rank.
    pub fn degree_hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn rank_at(&self, r: i64) -> usize {
        if self.ranks.is_empty() || r < self.lo || r > self.degree_hi() {
            0
        } else {
            self.ranks[(r - self.lo) as usize]
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.degree_lo()..=self.degree_hi())
            .map(|r| parity_sign(r) * self.rank_at(r) as i64)
            .sum()
    }

    /// `d_r : C_r -> C_{r-1}`, a zero matrix of the right shape outside the
    /// stored window.
    pub fn differential_at(&self, r: i64) -> IntMatrix {
        if self.ranks.is_empty() || r < self.lo || r > self.degree_hi() {
            IntMatrix::zeros(self.rank_at(r - 1), self.rank_at(r))
        } else {
            self.diffs[(r - self.lo) as usize].clone()
        }
    }

    /// Degree shift `(C[k])_r = C_{r+k}` with unchanged differentials.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.lo -= k;
        out
    }

    /// The dual complex at ambient degree `m`: rank at `r` is the rank of
    /// `C` at `m − r`, with differential `(−1)^r d_{m-r+1}ᵀ`.
    pub fn dual(&self, m: i64) -> Self {
        if self.is_zero_complex() {
            return Self::zero();
        }
        let lo = m - self.degree_hi();
        let hi = m - self.degree_lo();
        let ranks: Vec<usize> = (lo..=hi).map(|r| self.rank_at(m - r)).collect();
        let mut diffs = Vec::with_capacity(ranks.len());
        diffs.push(IntMatrix::zeros(0, ranks[0]));
        for r in lo + 1..=hi {
            diffs.push(signed(
                &self.differential_at(m - r + 1).transpose(),
                parity_sign(r),
            ));
        }
        let c = ChainComplex { lo, ranks, diffs };
        debug_assert!(c.clone().validate().is_ok());
        c.trimmed()
    }

    fn validate(self) -> Result<Self, ChainError> {
        for r in self.degree_lo()..=self.degree_hi() {
            if !self.differential_at(r).mul(&self.differential_at(r + 1)).is_zero() {
                return Err(ChainError::SquareNotZero(r + 1));
            }
        }
        Ok(self)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.is_zero_complex() {
            return other.clone();
        }
        if other.is_zero_complex() {
            return self.clone();
        }
        let lo = self.degree_lo().min(other.degree_lo());
        let hi = self.degree_hi().max(other.degree_hi());
        let ranks: Vec<usize> = (lo..=hi)
            .map(|r| self.rank_at(r) + other.rank_at(r))
            .collect();
        let mut diffs = vec![IntMatrix::zeros(0, ranks[0])];
        for r in lo + 1..=hi {
            let a = self.differential_at(r);
            let b = other.differential_at(r);
            let z1 = IntMatrix::zeros(a.rows(), b.cols());
            let z2 = IntMatrix::zeros(b.rows(), a.cols());
            diffs.push(IntMatrix::block(&[vec![&a, &z1], vec![&z2, &b]]));
        }
        ChainComplex { lo, ranks, diffs }.trimmed()
    }

    pub fn homology_at_degree(&self, r: i64) -> AbelianGroup {
        homology_at(&self.differential_at(r + 1), &self.differential_at(r))
            .expect("stored differentials compose to zero")
    }

    /// Homology in every degree of the window, lowest first.
    pub fn homology(&self) -> Vec<(i64, AbelianGroup)> {
        (self.degree_lo()..=self.degree_hi())
            .map(|r| (r, self.homology_at_degree(r)))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology().iter().all(|(_, h)| h.is_trivial())
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_complex() {
            return write!(f, "ChainComplex(0)");
        }
        write!(
            f,
            "ChainComplex[{}..={}] ranks {:?}",
            self.degree_lo(),
            self.degree_hi(),
            self.ranks
        )
    }
}

/// A degreewise map commuting with the differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    lo: i64,
    components: Vec<IntMatrix>,
}

impl ChainMap {
    /// `components[i]` is the block in degree `lo + i`; degrees not covered
    /// get zero components. The chain-map condition is verified exactly.
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        lo: i64,
        components: Vec<IntMatrix>,
    ) -> Result<Self, ChainError> {
        for (i, c) in components.iter().enumerate() {
            let r = lo + i as i64;
            if c.rows() != target.rank_at(r) || c.cols() != source.rank_at(r) {
                return Err(ChainError::ComponentShape(r));
            }
        }
        let f = ChainMap {
            source,
            target,
            lo,
            components,
        };
        let check_lo = f.source.degree_lo().min(f.target.degree_lo());
        let check_hi = f.source.degree_hi().max(f.target.degree_hi());
        for r in check_lo..=check_hi + 1 {
            let lhs = f.target.differential_at(r).mul(&f.component_at(r));
            let rhs = f.component_at(r - 1).mul(&f.source.differential_at(r));
            if lhs != rhs {
                return Err(ChainError::NotAChainMap(r));
            }
        }
        Ok(f)
    }

    pub fn zero(source: ChainComplex, target: ChainComplex) -> Self {
        ChainMap {
            source,
            target,
            lo: 0,
            components: Vec::new(),
        }
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let comps = (c.degree_lo()..=c.degree_hi())
            .map(|r| IntMatrix::identity(c.rank_at(r)))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            lo: c.degree_lo(),
            components: comps,
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component_at(&self, r: i64) -> IntMatrix {
        let idx = r - self.lo;
        if idx < 0 || idx >= self.components.len() as i64 {
            IntMatrix::zeros(self.target.rank_at(r), self.source.rank_at(r))
        } else {
            self.components[idx as usize].clone()
        }
    }
}

/// The algebraic mapping cone `C(f)_r = D_r ⊕ C_{r-1}` with differential
/// `[[d_D, (−1)^{r−1} f], [0, d_C]]`.
pub fn cone(f: &ChainMap) -> ChainComplex {
    let c = f.source();
    let d = f.target();
    if c.is_zero_complex() && d.is_zero_complex() {
        return ChainComplex::zero();
    }
    let lo = d.degree_lo().min(c.degree_lo() + 1) - 1;
    let hi = d.degree_hi().max(c.degree_hi() + 1) + 1;
    let ranks: Vec<usize> = (lo..=hi).map(|r| d.rank_at(r) + c.rank_at(r - 1)).collect();
    let mut diffs = vec![IntMatrix::zeros(0, ranks[0])];
    for r in lo + 1..=hi {
        let dd = d.differential_at(r);
        let fc = signed(&f.component_at(r - 1), parity_sign(r - 1));
        let dc = c.differential_at(r - 1);
        let z = IntMatrix::zeros(c.rank_at(r - 2), d.rank_at(r));
        diffs.push(IntMatrix::block(&[vec![&dd, &fc], vec![&z, &dc]]));
    }
    ChainComplex { lo, ranks, diffs }
        .validate()
        .expect("cone differential squares to zero")
        .trimmed()
}

/// The union `D ∪_C D'` along `f : C -> D`, `f' : C -> D'`: the cone of the
/// stacked map `C -> D ⊕ D'`.
pub fn union(f: &ChainMap, f_prime: &ChainMap) -> Result<ChainComplex, ChainError> {
    if f.source() != f_prime.source() {
        return Err(ChainError::MismatchedSources);
    }
    let stacked = stack_targets(f, f_prime)?;
    Ok(cone(&stacked))
}

///`(f, f') : C -> D ⊕ D'` for maps out of a shared source.
pub fn stack_targets(f: &ChainMap, f_prime: &ChainMap) -> Result<ChainMap, ChainError> {
    if f.source() != f_prime.source() {
        return Err(ChainError::MismatchedSources);
    }
    let target = f.target().direct_sum(f_prime.target());
    let src = f.source().clone();
    let lo = src.degree_lo();
    let comps: Vec<IntMatrix> = (lo..=src.degree_hi())
        .map(|r| {
            let top = pad_rows(&f.component_at(r), f.target().rank_at(r), target.rank_at(r), 0);
            let bot_off = f.target().rank_at(r);
            let bot = pad_rows(
                &f_prime.component_at(r),
                f_prime.target().rank_at(r),
                target.rank_at(r),
                bot_off,
            );
            top.add(&bot)
        })
        .collect();
    ChainMap::new(src, target, lo, comps)
}

fn pad_rows(m: &IntMatrix, used: usize, total: usize, offset: usize) -> IntMatrix {
    debug_assert_eq!(m.rows(), used);
    IntMatrix::from_fn(total, m.cols(), |i, j| {
        if i >= offset && i < offset + used {
            m[(i - offset, j)].clone()
        } else {
            num_bigint::BigInt::from(0)
        }
    })
}

/// A map is a quasi-isomorphism iff its cone is acyclic; over Z on free
/// complexes this certifies chain equivalence.
pub fn is_quasi_iso(f: &ChainMap) -> bool {
    cone(f).is_acyclic()
}

/// Half-handle data: complexes `C⁺, C⁻` and a degree-lowering chain map
/// `d : C⁺ -> C⁻[-1]` (strict commutation `d⁻ ∘ d = d ∘ d⁺`).
#[derive(Clone, Debug)]
pub struct HalfHandleData {
    pub c_plus: ChainComplex,
    pub c_minus: ChainComplex,
    pub d: ChainMap,
}

impl HalfHandleData {
    /// `components[i]` maps `C⁺_{lo+i} -> C⁻_{lo+i-1}`.
    pub fn new(
        c_plus: ChainComplex,
        c_minus: ChainComplex,
        lo: i64,
        components: Vec<IntMatrix>,
    ) -> Result<Self, ChainError> {
        let shifted = c_minus.shift(-1);
        let d = ChainMap::new(c_plus.clone(), shifted, lo, components)?;
        Ok(HalfHandleData {
            c_plus,
            c_minus,
            d,
        })
    }
}

/// The half-handle complex `C_r = C⁺_r ⊕ C⁻_r` with differential
/// `[[d⁺, 0], [(−1)^r d, d⁻]]`. Its homology agrees with the cone of `d`
/// up to a degree shift.
pub fn half_handle_complex(h: &HalfHandleData) -> ChainComplex {
    let cp = &h.c_plus;
    let cm = &h.c_minus;
    if cp.is_zero_complex() && cm.is_zero_complex() {
        return ChainComplex::zero();
    }
    let lo = cp.degree_lo().min(cm.degree_lo()) - 1;
    let hi = cp.degree_hi().max(cm.degree_hi()) + 1;
    let ranks: Vec<usize> = (lo..=hi).map(|r| cp.rank_at(r) + cm.rank_at(r)).collect();
    let mut diffs = vec![IntMatrix::zeros(0, ranks[0])];
    for r in lo + 1..=hi {
        let dp = cp.differential_at(r);
        let dm = cm.differential_at(r);
        let dr = signed(&h.d.component_at(r), parity_sign(r));
        let z = IntMatrix::zeros(cp.rank_at(r - 1), cm.rank_at(r));
        diffs.push(IntMatrix::block(&[vec![&dp, &z], vec![&dr, &dm]]));
    }
    ChainComplex { lo, ranks, diffs }
        .validate()
        .expect("half-handle differential squares to zero")
        .trimmed()
}

/// `(W; M, M')` is an H-cobordism iff `d` is a chain equivalence, i.e. its
/// cone is acyclic.
pub fn is_h_cobordism(h: &HalfHandleData) -> bool {
    is_quasi_iso(&h.d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::AbelianGroup;
    use num_bigint::BigInt;

    fn z_in_degree(r: i64) -> ChainComplex {
        ChainComplex::concentrated(r, 1)
    }

    fn scalar_map(c: &ChainComplex, d: &ChainComplex, r: i64, v: i64) -> ChainMap {
        ChainMap::new(
            c.clone(),
            d.clone(),
            r,
            vec![IntMatrix::from_rows(&[vec![v]])],
        )
        .unwrap()
    }

    #[test]
    fn construction_checks_composability() {
        // 0 -> Z --2--> Z -> 0 in degrees 1, 0
        let c = ChainComplex::new(0, vec![1, 1], vec![IntMatrix::from_rows(&[vec![2]])]).unwrap();
        assert_eq!(c.rank_at(0), 1);
        assert_eq!(c.rank_at(1), 1);
        assert_eq!(c.rank_at(2), 0);
        let h0 = c.homology_at_degree(0);
        assert_eq!(h0.torsion, vec![BigInt::from(2)]);
        assert_eq!(c.homology_at_degree(1), AbelianGroup::trivial());

        // d ∘ d != 0 must be rejected
        let bad = ChainComplex::new(
            0,
            vec![1, 1, 1],
            vec![
                IntMatrix::from_rows(&[vec![1]]),
                IntMatrix::from_rows(&[vec![1]]),
            ],
        );
        assert_eq!(bad.unwrap_err(), ChainError::SquareNotZero(2));
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = ChainComplex::new(0, vec![2, 1], vec![IntMatrix::from_rows(&[vec![1], vec![3]])])
            .unwrap();
        assert!(cone(&ChainMap::identity(&c)).is_acyclic());
        assert!(is_quasi_iso(&ChainMap::identity(&c)));
    }

    #[test]
    fn cone_of_zero_map_splits() {
        let c = z_in_degree(0);
        let d = z_in_degree(0);
        let z = ChainMap::zero(c.clone(), d.clone());
        let k = cone(&z);
        // H_*(cone) = H_*(D) ⊕ H_{*-1}(C)
        assert_eq!(k.homology_at_degree(0), AbelianGroup::free(1));
        assert_eq!(k.homology_at_degree(1), AbelianGroup::free(1));
    }

    #[test]
    fn cone_of_multiplication_by_two() {
        let c = z_in_degree(0);
        let f = scalar_map(&c, &c, 0, 2);
        let k = cone(&f);
        let h0 = k.homology_at_degree(0);
        assert_eq!(h0.free_rank, 0);
        assert_eq!(h0.torsion, vec![BigInt::from(2)]);
        assert!(k.homology_at_degree(1).is_trivial());
        assert!(!is_quasi_iso(&f));
    }

    #[test]
    fn quasi_iso_detects_deformation_retract() {
        // C ⊕ (acyclic Z --1--> Z), inclusion of C
        let c = z_in_degree(0);
        let acyclic =
            ChainComplex::new(0, vec![1, 1], vec![IntMatrix::from_rows(&[vec![1]])]).unwrap();
        let big = c.direct_sum(&acyclic);
        let incl = ChainMap::new(
            c.clone(),
            big.clone(),
            0,
            vec![IntMatrix::from_rows(&[vec![1], vec![0]])],
        )
        .unwrap();
        assert!(is_quasi_iso(&incl));
    }

    #[test]
    fn dual_examples() {
        // point dual: Z in degree 0, dual at m = 2 lands in degree 2
        let c = z_in_degree(0);
        let d = c.dual(2);
        assert_eq!(d.rank_at(2), 1);
        assert_eq!(d.total_rank(), 1);

        // dual twice restores all ranks
        let c = ChainComplex::new(
            -1,
            vec![2, 3, 1],
            vec![
                IntMatrix::zeros(2, 3),
                IntMatrix::zeros(3, 1),
            ],
        )
        .unwrap();
        let dd = c.dual(3).dual(3);
        for r in -2..=4 {
            assert_eq!(dd.rank_at(r), c.rank_at(r));
        }

        // Z --3--> Z in degrees 1, 0; dual at m = 1 transposes with sign (−1)^r
        let c = ChainComplex::new(0, vec![1, 1], vec![IntMatrix::from_rows(&[vec![3]])]).unwrap();
        let d = c.dual(1);
        assert_eq!(d.differential_at(1), IntMatrix::from_rows(&[vec![-3]]));
    }

    #[test]
    fn union_examples() {
        // empty glue: C = 0 gives D ⊕ D'
        let d = z_in_degree(0);
        let dp = z_in_degree(2);
        let z = ChainComplex::zero();
        let f = ChainMap::zero(z.clone(), d.clone());
        let g = ChainMap::zero(z, dp.clone());
        let u = union(&f, &g).unwrap();
        assert_eq!(u.homology_at_degree(0), AbelianGroup::free(1));
        assert_eq!(u.homology_at_degree(2), AbelianGroup::free(1));

        // diagonal: D = D' = C = Z, both maps identity: contractible union
        let c = z_in_degree(0);
        let id1 = scalar_map(&c, &c, 0, 1);
        let u = union(&id1, &id1).unwrap();
        assert_eq!(u.homology_at_degree(0), AbelianGroup::free(1));
        assert!(u.homology_at_degree(1).is_trivial());

        // two intervals glued along S^0: a circle
        let s0 = ChainComplex::concentrated(0, 2);
        let interval = z_in_degree(0);
        let collapse = ChainMap::new(
            s0.clone(),
            interval.clone(),
            0,
            vec![IntMatrix::from_rows(&[vec![1, 1]])],
        )
        .unwrap();
        let u = union(&collapse, &collapse).unwrap();
        assert_eq!(u.homology_at_degree(0), AbelianGroup::free(1));
        assert_eq!(u.homology_at_degree(1), AbelianGroup::free(1));

        // mismatched sources rejected
        let other = ChainMap::zero(ChainComplex::zero(), interval);
        assert_eq!(
            union(&collapse, &other).unwrap_err(),
            ChainError::MismatchedSources
        );
    }

    #[test]
    fn union_homology_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..10 {
            let c = ChainComplex::concentrated(0, rng.random_range(1..=2));
            let d = ChainComplex::concentrated(0, rng.random_range(1..=2));
            let dp = ChainComplex::concentrated(0, rng.random_range(1..=2));
            let f = ChainMap::new(
                c.clone(),
                d.clone(),
                0,
                vec![IntMatrix::from_fn(d.rank_at(0), c.rank_at(0), |_, _| {
                    BigInt::from(rng.random_range(-2..=2))
                })],
            )
            .unwrap();
            let g = ChainMap::new(
                c.clone(),
                dp.clone(),
                0,
                vec![IntMatrix::from_fn(dp.rank_at(0), c.rank_at(0), |_, _| {
                    BigInt::from(rng.random_range(-2..=2))
                })],
            )
            .unwrap();
            let u1 = union(&f, &g).unwrap();
            let u2 = union(&g, &f).unwrap();
            for r in -1..=2 {
                assert_eq!(u1.homology_at_degree(r), u2.homology_at_degree(r));
            }
        }
    }

    #[test]
    fn half_handle_cases() {
        // cancelling pair: d = identity
        let cp = z_in_degree(1);
        let cm = z_in_degree(0);
        let h = HalfHandleData::new(
            cp.clone(),
            cm.clone(),
            1,
            vec![IntMatrix::from_rows(&[vec![1]])],
        )
        .unwrap();
        let c = half_handle_complex(&h);
        assert!(c.is_acyclic());
        assert!(is_h_cobordism(&h));

        // d = 0 keeps both generators
        let h = HalfHandleData::new(cp.clone(), cm.clone(), 1, vec![IntMatrix::zeros(1, 1)])
            .unwrap();
        let c = half_handle_complex(&h);
        assert_eq!(c.homology_at_degree(1), AbelianGroup::free(1));
        assert_eq!(c.homology_at_degree(0), AbelianGroup::free(1));
        assert!(!is_h_cobordism(&h));

        // d = ×2: torsion in the lower degree
        let h = HalfHandleData::new(
            cp.clone(),
            cm.clone(),
            1,
            vec![IntMatrix::from_rows(&[vec![2]])],
        )
        .unwrap();
        let c = half_handle_complex(&h);
        assert_eq!(c.homology_at_degree(0).torsion, vec![BigInt::from(2)]);
        assert!(c.homology_at_degree(1).is_trivial());
        assert!(!is_h_cobordism(&h));

        // Euler characteristic is additive
        assert_eq!(
            c.euler_characteristic(),
            cp.euler_characteristic() + cm.euler_characteristic()
        );
    }

    #[test]
    fn half_handle_matches_shifted_cone() {
        // d must commute strictly: d⁻ ∘ d = d ∘ d⁺
        let cp = ChainComplex::new(0, vec![1, 1], vec![IntMatrix::from_rows(&[vec![2]])]).unwrap();
        let cm = ChainComplex::new(-1, vec![1, 1], vec![IntMatrix::from_rows(&[vec![2]])]).unwrap();
        let h = HalfHandleData::new(
            cp,
            cm,
            0,
            vec![
                IntMatrix::from_rows(&[vec![3]]),
                IntMatrix::from_rows(&[vec![3]]),
            ],
        )
        .unwrap();
        let c = half_handle_complex(&h);
        let k = cone(&h.d);
        for r in -2..=3 {
            assert_eq!(c.homology_at_degree(r), k.homology_at_degree(r + 1));
        }
    }
}
