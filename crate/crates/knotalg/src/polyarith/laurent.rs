//! Exact Laurent polynomial arithmetic over Z, determinants of Laurent
//! matrices by fraction-free elimination, and the normal form under
//! multiplication by ±t^k.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An element of Z[t, t^-1]. Stored as the coefficient run starting at
/// `lowest_degree`; the first and last stored coefficients are nonzero,
/// except for the canonical zero (empty run, lowest_degree 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    lowest_degree: i64,
    coefficients: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            lowest_degree: 0,
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            lowest_degree: degree,
            coefficients: vec![c],
        }
    }

    /// `t` itself.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn from_coefficients(lowest_degree: i64, coefficients: Vec<BigInt>) -> Self {
        let mut p = LaurentPolynomial {
            lowest_degree,
            coefficients,
        };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, ascending from
    /// `lowest_degree`.
    pub fn from_i64(lowest_degree: i64, coefficients: &[i64]) -> Self {
        Self::from_coefficients(
            lowest_degree,
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coefficients.last().is_some_and(|c| c.is_zero()) {
            self.coefficients.pop();
        }
        let leading_zeros = self
            .coefficients
            .iter()
            .take_while(|c| c.is_zero())
            .count();
        if leading_zeros > 0 {
            self.coefficients.drain(..leading_zeros);
            self.lowest_degree += leading_zeros as i64;
        }
        if self.coefficients.is_empty() {
            self.lowest_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn lowest_degree(&self) -> i64 {
        self.lowest_degree
    }

    pub fn highest_degree(&self) -> i64 {
        self.lowest_degree + self.coefficients.len() as i64 - 1
    }

    pub fn coefficient(&self, degree: i64) -> BigInt {
        if self.is_zero() || degree < self.lowest_degree || degree > self.highest_degree() {
            BigInt::zero()
        } else {
            self.coefficients[(degree - self.lowest_degree) as usize].clone()
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lowest_degree.min(other.lowest_degree);
        let hi = self.highest_degree().max(other.highest_degree());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coefficients.iter().enumerate() {
            coeffs[(self.lowest_degree - lo) as usize + i] += c;
        }
        for (i, c) in other.coefficients.iter().enumerate() {
            coeffs[(other.lowest_degree - lo) as usize + i] += c;
        }
        Self::from_coefficients(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            lowest_degree: self.lowest_degree,
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coefficients(self.lowest_degree + other.lowest_degree, coeffs)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            lowest_degree: self.lowest_degree + k,
            coefficients: self.coefficients.clone(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn reverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            lowest_degree: -self.highest_degree(),
            coefficients: self.coefficients.iter().rev().cloned().collect(),
        }
    }

    /// Exact division in Z[t, t^-1]; `None` if not divisible.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coefficients.clone();
        let d = &divisor.coefficients;
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let dlead = d.last().unwrap();
        for k in (0..qlen).rev() {
            let target = rem[k + d.len() - 1].clone();
            if target.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(target, dlead.clone());
            if !r.is_zero() {
                return None;
            }
            for (i, di) in d.iter().enumerate() {
                let t = &q * di;
                rem[k + i] -= t;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coefficients(
            self.lowest_degree - divisor.lowest_degree,
            quot,
        ))
    }

    /// Evaluate at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical ascending-degree form, e.g. `1 - t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let deg = self.lowest_degree + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{}", mag)?,
                1 => {
                    if mag.is_one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{}t", mag)?;
                    }
                }
                d => {
                    if mag.is_one() {
                        write!(f, "t^{}", d)?;
                    } else {
                        write!(f, "{}t^{}", mag, d)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Normal form under multiplication by ±t^k: lowest degree 0 and positive
/// lowest coefficient. The zero polynomial is its own normal form.
pub fn s_normalize(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return LaurentPolynomial::zero();
    }
    let shifted = p.shift(-p.lowest_degree);
    if shifted.coefficients[0].is_negative() {
        shifted.neg()
    } else {
        shifted
    }
}

/// `p1 = ±t^k p0` for some k.
pub fn poly_s_equivalent(p0: &LaurentPolynomial, p1: &LaurentPolynomial) -> bool {
    s_normalize(p0) == s_normalize(p1)
}

/// Witness checker for H-equivalence of polynomials:
/// `p0 q0(t) q0(t^-1) ~S p1 q1(t) q1(t^-1)` with `q0(1), q1(1) = ±1`.
/// Verifies a supplied witness pair; performs no search.
pub fn poly_h_equivalent_with_witness(
    p0: &LaurentPolynomial,
    p1: &LaurentPolynomial,
    q0: &LaurentPolynomial,
    q1: &LaurentPolynomial,
) -> bool {
    if !q0.eval_at_one().abs().is_one() || !q1.eval_at_one().abs().is_one() {
        return false;
    }
    let lhs = p0.mul(q0).mul(&q0.reverse());
    let rhs = p1.mul(q1).mul(&q1.reverse());
    poly_s_equivalent(&lhs, &rhs)
}

/// A rectangular matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPolynomial>,
}

impl LaurentMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPolynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LaurentMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentPolynomial {
        &self.entries[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut LaurentPolynomial {
        &mut self.entries[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Exact determinant of a square Laurent matrix. Negative powers of t are
/// cleared row by row first, then fraction-free (Bareiss) elimination runs
/// in `Z[t]`; the cleared powers come back as a final shift.
pub fn laurent_det(m: &LaurentMatrix) -> LaurentPolynomial {
    assert_eq!(m.rows, m.cols, "determinant of a non-square Laurent matrix");
    let n = m.rows;
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut a = m.clone();
    let mut total_shift: i64 = 0;
    for i in 0..n {
        let min_deg = (0..n)
            .filter(|&j| !a.at(i, j).is_zero())
            .map(|j| a.at(i, j).lowest_degree())
            .min();
        let Some(min_deg) = min_deg else {
            return LaurentPolynomial::zero(); // an all-zero row
        };
        if min_deg != 0 {
            for j in 0..n {
                *a.at_mut(i, j) = a.at(i, j).shift(-min_deg);
            }
            total_shift += min_deg;
        }
    }
    // Bareiss in Z[t]
    let mut sign_flip = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign_flip = !sign_flip;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a
                    .at(k, k)
                    .mul(a.at(i, j))
                    .sub(&a.at(i, k).mul(a.at(k, j)));
                let q = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
                *a.at_mut(i, j) = q;
            }
            *a.at_mut(i, k) = LaurentPolynomial::zero();
        }
        prev = a.at(k, k).clone();
    }
    let det = a.at(n - 1, n - 1).shift(total_shift);
    if sign_flip {
        det.neg()
    } else {
        det
    }
}
