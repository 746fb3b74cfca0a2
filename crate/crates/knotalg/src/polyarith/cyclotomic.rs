//! Exact arithmetic in the cyclotomic fields Q(ζ_q): residues modulo the
//! q-th cyclotomic polynomial, the conjugation ζ -> ζ^(q-1), evaluation of
//! Laurent polynomials at roots of unity, matrix rank and kernels over
//! Q(ζ_q), hermitian inertia with certified pivot signs.

use super::interval::{cos_two_pi_ratio, sin_two_pi_ratio, Interval};
use super::laurent::LaurentPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("root of unity p/q reduces to 1, which is excluded")]
    UnitRootIsOne,
    #[error("mixed cyclotomic moduli: {0} vs {1}")]
    MixedModuli(u64, u64),
    #[error("certified_sign requires a conjugation-fixed (real) input")]
    NotReal,
    #[error("sign certification exceeded the {0}-bit precision cap on a nonzero value")]
    PrecisionExceeded(u32),
    #[error("matrix is not hermitian with respect to the cyclotomic involution")]
    NotHermitian,
    #[error("operation requires a square matrix")]
    NotSquare,
}

/// ξ = e^{2πi p/q} with gcd(p, q) = 1 and 0 < p < q (so ξ ≠ 1 always).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    p: u64,
    q: u64,
}

impl RootOfUnity {
    pub fn new(p: i64, q: i64) -> Result<Self, CycError> {
        assert!(q > 0, "denominator must be positive");
        let q = q as u64;
        let p = p.rem_euclid(q as i64) as u64;
        let g = p.gcd(&q); // >= 1 since q >= 1
        let (p, q) = (p / g, q / g);
        if q < 2 {
            return Err(CycError::UnitRootIsOne);
        }
        Ok(RootOfUnity { p, q })
    }

    pub fn numerator(&self) -> u64 {
        self.p
    }

    pub fn denominator(&self) -> u64 {
        self.q
    }

    /// The complex conjugate root (q−p)/q.
    pub fn conjugate(&self) -> RootOfUnity {
        RootOfUnity {
            p: self.q - self.p,
            q: self.q,
        }
    }

    /// Angle comparison key p/q, for sorted profiles.
    pub fn angle(&self) -> (u64, u64) {
        (self.p, self.q)
    }

    /// All roots e^{2πi p/q} with 2 <= q <= max_q, gcd(p,q)=1, sorted by angle.
    pub fn all_with_denominator_up_to(max_q: u64) -> Vec<RootOfUnity> {
        let mut out = Vec::new();
        for q in 2..=max_q {
            for p in 1..q {
                if p.gcd(&q) == 1 {
                    out.push(RootOfUnity { p, q });
                }
            }
        }
        out.sort_by(|a, b| (a.p * b.q).cmp(&(b.p * a.q)));
        out
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

// ---- dense integer polynomials, ascending coefficients ----

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`; exact over Z.
fn poly_mod_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let deg_m = m.len() - 1;
    debug_assert!(m.last().unwrap().is_one());
    while a.len() > deg_m {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let off = a.len() - deg_m;
        for (i, c) in m[..deg_m].iter().enumerate() {
            let t = &lead * c;
            a[off + i] -= t;
        }
    }
    poly_trim(&mut a);
    a
}

/// Exact quotient of `a` by monic `m` assuming zero remainder.
fn poly_div_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let deg_m = m.len() - 1;
    debug_assert!(m.last().unwrap().is_one());
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(deg_m)];
    while a.len() > deg_m {
        let lead = a.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let off = a.len() - deg_m;
        for (i, c) in m[..deg_m].iter().enumerate() {
            let t = &lead * c;
            a[off + i] -= t;
        }
        q[off] = lead;
    }
    debug_assert!(a.iter().all(|c| c.is_zero()), "division not exact");
    q
}

/// The q-th cyclotomic polynomial Φ_q, ascending integer coefficients.
/// Reduction mod Φ_q runs on every field multiplication, so the
/// polynomials are cached per modulus.
pub fn cyclotomic_polynomial(q: u64) -> Vec<BigInt> {
    assert!(q >= 1);
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<u64, Vec<BigInt>>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&q).cloned()) {
        return hit;
    }
    // Φ_q = (x^q − 1) / prod_{d | q, d < q} Φ_d
    let mut num = vec![BigInt::zero(); q as usize + 1];
    num[0] = -BigInt::one();
    num[q as usize] = BigInt::one();
    let mut result = num;
    for d in 1..q {
        if q.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            result = poly_div_monic(result, &phi_d);
        }
    }
    CACHE.with(|c| c.borrow_mut().insert(q, result.clone()));
    result
}

/// Euler's totient, as the degree of Φ_q.
pub fn euler_phi(q: u64) -> usize {
    cyclotomic_polynomial(q).len() - 1
}

/// Residues of ζ^0, ζ^1, ..., ζ^(q−1) modulo Φ_q, cached per modulus.
/// Powers of ζ and the conjugation ζ -> ζ^(q−1) are both table lookups.
fn zeta_power_residues(q: u64) -> std::rc::Rc<Vec<Vec<BigInt>>> {
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<u64, std::rc::Rc<Vec<Vec<BigInt>>>>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|c| {
        if let Some(hit) = c.borrow().get(&q) {
            return hit.clone();
        }
        let phi = cyclotomic_polynomial(q);
        let mut table = Vec::with_capacity(q as usize);
        for e in 0..q as usize {
            let mut p = vec![BigInt::zero(); e + 1];
            p[e] = BigInt::one();
            table.push(poly_mod_monic(p, &phi));
        }
        let rc = std::rc::Rc::new(table);
        c.borrow_mut().insert(q, rc.clone());
        rc
    })
}

/// An element of Q(ζ_q): `num(ζ)/den` with `deg num < φ(q)`, `den > 0`,
/// and gcd(content(num), den) = 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    q: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn normalized(q: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        assert!(!den.is_zero());
        poly_trim(&mut num);
        if num.is_empty() {
            return CyclotomicNumber {
                q,
                num,
                den: BigInt::one(),
            };
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = den.clone();
        for c in &num {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            den /= &g;
            for c in num.iter_mut() {
                *c /= &g;
            }
        }
        CyclotomicNumber { q, num, den }
    }

    pub fn zero(q: u64) -> Self {
        CyclotomicNumber {
            q,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one(q: u64) -> Self {
        CyclotomicNumber {
            q,
            num: vec![BigInt::one()],
            den: BigInt::one(),
        }
    }

    pub fn from_int(q: u64, n: &BigInt) -> Self {
        Self::normalized(q, vec![n.clone()], BigInt::one())
    }

    pub fn from_ratio(q: u64, num: &BigInt, den: &BigInt) -> Self {
        Self::normalized(q, vec![num.clone()], den.clone())
    }

    /// ζ_q^e for any integer exponent.
    pub fn zeta_pow(q: u64, e: i64) -> Self {
        let e = e.rem_euclid(q as i64) as usize;
        let table = zeta_power_residues(q);
        Self::normalized(q, table[e].clone(), BigInt::one())
    }

    /// The root ξ itself as an element of Q(ζ_q).
    pub fn from_root(xi: RootOfUnity) -> Self {
        Self::zeta_pow(xi.q, xi.p as i64)
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn residue(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    fn check_modulus(&self, other: &Self) -> Result<(), CycError> {
        if self.q != other.q {
            return Err(CycError::MixedModuli(self.q, other.q));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_modulus(other).expect("mixed moduli");
        let len = self.num.len().max(other.num.len());
        let mut num = vec![BigInt::zero(); len];
        for (i, c) in self.num.iter().enumerate() {
            num[i] += c * &other.den;
        }
        for (i, c) in other.num.iter().enumerate() {
            num[i] += c * &self.den;
        }
        Self::normalized(self.q, num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            q: self.q,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_modulus(other).expect("mixed moduli");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.q);
        }
        let phi = cyclotomic_polynomial(self.q);
        let num = poly_mod_monic(poly_mul(&self.num, &other.num), &phi);
        Self::normalized(self.q, num, &self.den * &other.den)
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::normalized(
            self.q,
            self.num.iter().map(|c| c * k).collect(),
            self.den.clone(),
        )
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero cyclotomic number");
        let phi = cyclotomic_polynomial(self.q);
        // extended Euclid over Q[x]: s*num + t*Φ = g with g a nonzero constant
        let (g_num, g_den, s_num, s_den) = rational_ext_gcd(&self.num, &phi);
        // inverse = (s/g) * den
        let mut num: Vec<BigInt> = s_num.iter().map(|c| c * &g_den * &self.den).collect();
        poly_trim(&mut num);
        let num = poly_mod_monic(num, &phi);
        Self::normalized(self.q, num, &s_den * &g_num)
    }

    /// The canonical involution ζ -> ζ^{q-1} = ζ̄ (i.e. t̄ = t^{-1}):
    /// ζ^j maps to ζ^{q−j}, a lookup in the cached power table.
    pub fn conjugate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let table = zeta_power_residues(self.q);
        let deg = euler_phi(self.q);
        let mut num = vec![BigInt::zero(); deg];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((self.q - j as u64 % self.q) % self.q) as usize;
            for (i, t) in table[e].iter().enumerate() {
                num[i] += c * t;
            }
        }
        Self::normalized(self.q, num, self.den.clone())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Reinterpret in Q(ζ_m) for q | m via ζ_q -> ζ_m^{m/q}.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.q), "embedding requires q | m");
        if m == self.q {
            return self.clone();
        }
        let step = (m / self.q) as usize;
        let phi = cyclotomic_polynomial(m);
        let mut num = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            num[j * step] = c.clone();
        }
        Self::normalized(m, poly_mod_monic(num, &phi), self.den.clone())
    }

    /// Interval enclosures of the real and imaginary parts at `prec` bits.
    pub fn approximate(&self, prec: u32) -> (Interval, Interval) {
        let mut re = Interval::zero(prec);
        let mut im = Interval::zero(prec);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            re = re.add(&cos_two_pi_ratio(j as u64, self.q, prec).mul_ratio(c, &self.den));
            im = im.add(&sin_two_pi_ratio(j as u64, self.q, prec).mul_ratio(c, &self.den));
        }
        (re, im)
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("{}", c),
                1 => format!("{}*z", c),
                _ => format!("{}*z^{}", c, j),
            })
            .collect();
        write!(f, "({})/{} mod Phi_{}", terms.join(" + "), self.den, self.q)
    }
}

/// Extended gcd of `a` against the monic irreducible `m` over Q, returning
/// `(g_num, g_den, s_num, s_den)` with `s*a ≡ g (mod m)` and g a nonzero
/// rational constant. Coefficient vectors share one denominator.
fn rational_ext_gcd(a: &[BigInt], m: &[BigInt]) -> (BigInt, BigInt, Vec<BigInt>, BigInt) {
    // work over Q[x] with (numerators, denominator) pairs
    #[derive(Clone)]
    struct QPoly {
        num: Vec<BigInt>,
        den: BigInt,
    }
    impl QPoly {
        fn normalize(&mut self) {
            poly_trim(&mut self.num);
            if self.num.is_empty() {
                self.den = BigInt::one();
                return;
            }
            if self.den.is_negative() {
                self.den = -self.den.clone();
                for c in self.num.iter_mut() {
                    *c = -c.clone();
                }
            }
            let mut g = self.den.clone();
            for c in &self.num {
                g = g.gcd(c);
                if g.is_one() {
                    return;
                }
            }
            if !g.is_one() {
                self.den /= &g;
                for c in self.num.iter_mut() {
                    *c /= &g;
                }
            }
        }
        fn is_zero(&self) -> bool {
            self.num.is_empty()
        }
        fn deg(&self) -> usize {
            self.num.len().saturating_sub(1)
        }
    }

    fn qp_sub_mul(a: &QPoly, q: &QPoly, b: &QPoly) -> QPoly {
        // a − q*b
        let qb_num = poly_mul(&q.num, &b.num);
        let qb_den = &q.den * &b.den;
        let len = a.num.len().max(qb_num.len());
        let mut num = vec![BigInt::zero(); len];
        for (i, c) in a.num.iter().enumerate() {
            num[i] += c * &qb_den;
        }
        for (i, c) in qb_num.iter().enumerate() {
            num[i] -= c * &a.den;
        }
        let mut out = QPoly {
            num,
            den: &a.den * &qb_den,
        };
        out.normalize();
        out
    }

    fn qp_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
        let mut rem = a.clone();
        let mut quo = QPoly {
            num: Vec::new(),
            den: BigInt::one(),
        };
        let b_lead = b.num.last().unwrap();
        while !rem.is_zero() && rem.deg() >= b.deg() {
            let shift = rem.deg() - b.deg();
            let mut t_num = vec![BigInt::zero(); shift + 1];
            t_num[shift] = rem.num.last().unwrap() * &b.den;
            let mut t = QPoly {
                num: t_num,
                den: &rem.den * b_lead,
            };
            t.normalize();
            // quo += t
            let len = quo.num.len().max(t.num.len());
            let mut num = vec![BigInt::zero(); len];
            for (i, c) in quo.num.iter().enumerate() {
                num[i] += c * &t.den;
            }
            for (i, c) in t.num.iter().enumerate() {
                num[i] += c * &quo.den;
            }
            quo = QPoly {
                num,
                den: &quo.den * &t.den,
            };
            quo.normalize();
            let new_rem = qp_sub_mul(&rem, &t, b);
            debug_assert!(new_rem.is_zero() || new_rem.deg() < rem.deg());
            rem = new_rem;
        }
        (quo, rem)
    }

    let mut r0 = QPoly {
        num: m.to_vec(),
        den: BigInt::one(),
    };
    let mut r1 = QPoly {
        num: a.to_vec(),
        den: BigInt::one(),
    };
    r1.normalize();
    let mut s0 = QPoly {
        num: Vec::new(),
        den: BigInt::one(),
    };
    let mut s1 = QPoly {
        num: vec![BigInt::one()],
        den: BigInt::one(),
    };
    while !r1.is_zero() && r1.deg() > 0 {
        let (q, r) = qp_divrem(&r0, &r1);
        let s = qp_sub_mul(&s0, &q, &s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    assert!(!r1.is_zero(), "element is divisible by the modulus");
    (r1.num[0].clone(), r1.den.clone(), s1.num, s1.den)
}

/// Evaluate a Laurent polynomial at ξ (the ring morphism t -> ξ).
pub fn eval_at(p: &LaurentPolynomial, xi: RootOfUnity) -> CyclotomicNumber {
    let q = xi.q;
    let mut acc = CyclotomicNumber::zero(q);
    for (i, c) in p.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = (p.lowest_degree() + i as i64) * xi.p as i64;
        acc = acc.add(&CyclotomicNumber::zeta_pow(q, e).scale_int(c));
    }
    acc
}

pub use eval_at as evaluate_laurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Maximum working precision for interval refinement, in bits.
pub const SIGN_PRECISION_CAP: u32 = 4096;

/// Certified sign of a conjugation-fixed cyclotomic number. Exact zero is
/// decided symbolically; otherwise interval enclosures of the cosine values
/// are refined (64 bits doubling up to the cap) until zero is excluded.
pub fn certified_sign(z: &CyclotomicNumber) -> Result<Sign, CycError> {
    if !z.is_real() {
        return Err(CycError::NotReal);
    }
    if z.is_zero() {
        return Ok(Sign::Zero);
    }
    let mut prec: u32 = 64;
    loop {
        let mut acc = Interval::zero(prec);
        for (j, c) in z.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&cos_two_pi_ratio(j as u64, z.q, prec).mul_ratio(c, &BigInt::one()));
        }
        // den > 0 never affects the sign
        if acc.is_positive() {
            return Ok(Sign::Positive);
        }
        if acc.is_negative() {
            return Ok(Sign::Negative);
        }
        if prec >= SIGN_PRECISION_CAP {
            return Err(CycError::PrecisionExceeded(SIGN_PRECISION_CAP));
        }
        prec *= 2;
    }
}

/// A rectangular matrix over Q(ζ_q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    q: u64,
    rows: usize,
    cols: usize,
    entries: Vec<CyclotomicNumber>,
}

impl CycMatrix {
    pub fn from_fn(
        q: u64,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CyclotomicNumber,
    ) -> Result<Self, CycError> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                if e.modulus() != q {
                    return Err(CycError::MixedModuli(q, e.modulus()));
                }
                entries.push(e);
            }
        }
        Ok(CycMatrix {
            q,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(q: u64, rows: usize, cols: usize) -> Self {
        Self::from_fn(q, rows, cols, |_, _| CyclotomicNumber::zero(q)).unwrap()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn at(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CyclotomicNumber) {
        assert_eq!(v.modulus(), self.q);
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CycError> {
        if self.q != other.q {
            return Err(CycError::MixedModuli(self.q, other.q));
        }
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.q, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).add(&a.mul(other.at(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.q, self.cols, self.rows, |i, j| self.at(j, i).clone()).unwrap()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.q, self.cols, self.rows, |i, j| {
            self.at(j, i).conjugate()
        })
        .unwrap()
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    /// Row-reduce in place; returns the pivot column indices.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pi) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let a = self.at(r, j).clone();
                let b = self.at(pi, j).clone();
                self.set(r, j, b);
                self.set(pi, j, a);
            }
            let inv = self.at(r, c).inv();
            for j in 0..self.cols {
                let v = self.at(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in 0..self.cols {
                    let v = self.at(i, j).sub(&f.mul(self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Exact rank over Q(ζ_q).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Indices of columns forming a basis of the column space.
    pub fn column_space_pivots(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.rref()
    }

    /// Exact determinant over Q(ζ_q) by elimination with pivot tracking.
    pub fn det(&self) -> CyclotomicNumber {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return CyclotomicNumber::one(self.q);
        }
        let mut a = self.clone();
        let mut det = CyclotomicNumber::one(self.q);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.at(i, k).is_zero()) else {
                return CyclotomicNumber::zero(self.q);
            };
            if p != k {
                for j in 0..n {
                    let x = a.at(k, j).clone();
                    let y = a.at(p, j).clone();
                    a.set(k, j, y);
                    a.set(p, j, x);
                }
                det = det.neg();
            }
            let pivot = a.at(k, k).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv();
            for i in k + 1..n {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let f = a.at(i, k).mul(&inv);
                for j in k..n {
                    let v = a.at(i, j).sub(&f.mul(a.at(k, j)));
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    /// Solve `self * X = rhs` over the field; `None` if inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &CycMatrix) -> Option<CycMatrix> {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.q, rhs.q);
        let n = self.cols;
        let mut aug = CycMatrix::from_fn(self.q, self.rows, n + rhs.cols, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else {
                rhs.at(i, j - n).clone()
            }
        })
        .expect("shared modulus");
        // elimination with pivots restricted to the coefficient columns
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == aug.rows {
                break;
            }
            let Some(pi) = (r..aug.rows).find(|&i| !aug.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..aug.cols {
                let a = aug.at(r, j).clone();
                let b = aug.at(pi, j).clone();
                aug.set(r, j, b);
                aug.set(pi, j, a);
            }
            let inv = aug.at(r, c).inv();
            for j in 0..aug.cols {
                let v = aug.at(r, j).mul(&inv);
                aug.set(r, j, v);
            }
            for i in 0..aug.rows {
                if i == r || aug.at(i, c).is_zero() {
                    continue;
                }
                let f = aug.at(i, c).clone();
                for j in 0..aug.cols {
                    let v = aug.at(i, j).sub(&f.mul(aug.at(r, j)));
                    aug.set(i, j, v);
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        // rows with no pivot must have vanished entirely on the rhs side
        for i in r..aug.rows {
            for j in 0..rhs.cols() {
                if !aug.at(i, n + j).is_zero() {
                    return None;
                }
            }
        }
        let mut x = CycMatrix::zero(self.q, n, rhs.cols());
        for &(row, col) in &pivots {
            for j in 0..rhs.cols() {
                x.set(col, j, aug.at(row, n + j).clone());
            }
        }
        Some(x)
    }

    /// Basis of the right kernel, as columns of a matrix.
    pub fn kernel_basis(&self) -> CycMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = CycMatrix::zero(self.q, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, CyclotomicNumber::one(self.q));
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, m.at(r, fc).neg());
            }
        }
        out
    }
}

/// Exact rank of a matrix of cyclotomic numbers sharing one modulus.
pub fn cyclo_rank(m: &CycMatrix) -> usize {
    m.rank()
}

/// Inertia (r_+, r_-, nullity) of a hermitian matrix over Q(ζ_q) ⊂ C.
///
/// Diagonal pivoting with exact zero tests throughout: certified signs for
/// symbolically nonzero diagonal pivots, hyperbolic 2×2 blocks (inertia
/// (1,1)) when the active diagonal vanishes, and an all-zero remaining
/// block contributing exactly the radical. Every sign query is on a
/// provably nonzero real value, so interval refinement terminates.
pub fn hermitian_inertia(m: &CycMatrix) -> Result<(usize, usize, usize), CycError> {
    if m.rows != m.cols {
        return Err(CycError::NotSquare);
    }
    if !m.is_hermitian() {
        return Err(CycError::NotHermitian);
    }
    let n = m.rows;
    let (rp, rm, nullity) = pivot_inertia(m.clone())?;
    debug_assert_eq!(rp + rm + nullity, n);
    Ok((rp, rm, nullity))
}

fn pivot_inertia(mut b: CycMatrix) -> Result<(usize, usize, usize), CycError> {
    let mut rp = 0;
    let mut rm = 0;
    let mut nullity = 0;
    let mut active: Vec<usize> = (0..b.rows()).collect();
    while !active.is_empty() {
        // prefer a nonzero diagonal entry
        if let Some(pos) = active.iter().position(|&i| !b.at(i, i).is_zero()) {
            let i = active[pos];
            let d = b.at(i, i).clone();
            match certified_sign(&d)? {
                Sign::Positive => rp += 1,
                Sign::Negative => rm += 1,
                Sign::Zero => unreachable!("pivot is symbolically nonzero"),
            }
            active.remove(pos);
            let d_inv = d.inv();
            for &r in &active {
                let bri = b.at(r, i).clone();
                if bri.is_zero() {
                    continue;
                }
                let factor = bri.mul(&d_inv);
                for &c in &active {
                    let v = b.at(r, c).sub(&factor.mul(b.at(i, c)));
                    b.set(r, c, v);
                }
            }
            // zero out the pivot row entries we no longer read
            continue;
        }
        // whole active diagonal is zero: find any nonzero off-diagonal entry
        let mut found = None;
        'search: for (pi, &i) in active.iter().enumerate() {
            for (pj, &j) in active.iter().enumerate() {
                if pi < pj && !b.at(i, j).is_zero() {
                    found = Some((pi, pj));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else {
            // remaining block is zero: it is the radical of the form
            nullity += active.len();
            break;
        };
        let (i, j) = (active[pi], active[pj]);
        // hyperbolic block [[0, s],[s̄, 0]] contributes (1, 1)
        rp += 1;
        rm += 1;
        let s = b.at(i, j).clone();
        let s_inv = s.inv();
        let s_conj_inv = s.conjugate().inv();
        active.remove(pj);
        active.remove(pi);
        for &r in &active {
            let bri = b.at(r, i).clone();
            let brj = b.at(r, j).clone();
            if bri.is_zero() && brj.is_zero() {
                continue;
            }
            // row correction [b_ri, b_rj] * [[0, s],[s̄,0]]^{-1} * [b_ic; b_jc]
            // = b_ri * s̄^{-1} * b_jc + b_rj * s^{-1} * b_ic
            let f1 = bri.mul(&s_conj_inv);
            let f2 = brj.mul(&s_inv);
            for &c in &active {
                let corr = f1.mul(b.at(j, c)).add(&f2.mul(b.at(i, c)));
                let v = b.at(r, c).sub(&corr);
                b.set(r, c, v);
            }
        }
    }
    Ok((rp, rm, nullity))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(11), 10);
    }

    #[test]
    fn root_reduction_and_exclusion() {
        let xi = RootOfUnity::new(3, 6).unwrap();
        assert_eq!((xi.numerator(), xi.denominator()), (1, 2));
        assert_eq!(RootOfUnity::new(0, 1), Err(CycError::UnitRootIsOne));
        assert_eq!(RootOfUnity::new(4, 4), Err(CycError::UnitRootIsOne));
        assert_eq!(RootOfUnity::new(-1, 4).unwrap().to_string(), "3/4");
    }

    #[test]
    fn field_axioms_spot_checks() {
        let q = 5;
        let z = CyclotomicNumber::zeta_pow(q, 1);
        // 1 + ζ + ζ^2 + ζ^3 + ζ^4 = 0
        let mut s = CyclotomicNumber::zero(q);
        for e in 0..5 {
            s = s.add(&CyclotomicNumber::zeta_pow(q, e));
        }
        assert!(s.is_zero());
        // ζ * ζ^4 = 1
        assert_eq!(z.mul(&CyclotomicNumber::zeta_pow(q, 4)), CyclotomicNumber::one(q));
        // inverse
        let w = z.add(&CyclotomicNumber::from_int(q, &BigInt::from(3)));
        assert_eq!(w.mul(&w.inv()), CyclotomicNumber::one(q));
    }

    #[test]
    fn conjugation_is_an_involution_and_automorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for q in [3u64, 4, 5, 6, 8, 12] {
            let phi = euler_phi(q);
            let rand_el = |rng: &mut rand_chacha::ChaCha8Rng| {
                let num: Vec<BigInt> = (0..phi).map(|_| BigInt::from(rng.random_range(-5..=5))).collect();
                CyclotomicNumber::normalized(q, num, BigInt::from(rng.random_range(1..=4)))
            };
            for _ in 0..10 {
                let a = rand_el(&mut rng);
                let b = rand_el(&mut rng);
                assert_eq!(a.conjugate().conjugate(), a);
                assert_eq!(a.add(&b).conjugate(), a.conjugate().add(&b.conjugate()));
                assert_eq!(a.mul(&b).conjugate(), a.conjugate().mul(&b.conjugate()));
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        // t at ξ = −1
        let t = LaurentPolynomial::t();
        let minus_one = RootOfUnity::new(1, 2).unwrap();
        assert_eq!(
            eval_at(&t, minus_one),
            CyclotomicNumber::from_int(2, &BigInt::from(-1))
        );
        // t^2 − t + 1 vanishes at ζ_6
        let p = LaurentPolynomial::from_i64(0, &[1, -1, 1]);
        let z6 = RootOfUnity::new(1, 6).unwrap();
        assert!(eval_at(&p, z6).is_zero());
        // conjugation at q = 4 sends i to −i
        let i = CyclotomicNumber::zeta_pow(4, 1);
        assert_eq!(i.conjugate(), i.neg());
        // conj(eval(p)) = eval(p with t -> t^-1)
        let p = LaurentPolynomial::from_i64(-1, &[2, 0, 3, 1]);
        let xi = RootOfUnity::new(2, 7).unwrap();
        assert_eq!(eval_at(&p, xi).conjugate(), eval_at(&p.reverse(), xi));
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let a = CyclotomicNumber::zeta_pow(6, 1);
        let e = a.embed(12);
        assert_eq!(e, CyclotomicNumber::zeta_pow(12, 2));
        let b = a.add(&CyclotomicNumber::one(6));
        assert_eq!(b.embed(12), e.add(&CyclotomicNumber::one(12)));
        assert_eq!(a.mul(&b).embed(12), e.mul(&b.embed(12)));
    }

    #[test]
    fn certified_signs() {
        // 0
        assert_eq!(certified_sign(&CyclotomicNumber::zero(6)), Ok(Sign::Zero));
        // ζ_6 + ζ_6^-1 = 2 cos(π/3) = 1 > 0
        let z = CyclotomicNumber::zeta_pow(6, 1).add(&CyclotomicNumber::zeta_pow(6, -1));
        assert_eq!(certified_sign(&z), Ok(Sign::Positive));
        assert_eq!(z, CyclotomicNumber::one(6)); // exact simplification
        // sum of all primitive fifth roots = −1 < 0
        let mut s = CyclotomicNumber::zero(5);
        for e in [1i64, -1, 2, -2] {
            s = s.add(&CyclotomicNumber::zeta_pow(5, e));
        }
        assert_eq!(certified_sign(&s), Ok(Sign::Negative));
        // non-real input rejected
        assert_eq!(
            certified_sign(&CyclotomicNumber::zeta_pow(5, 1)),
            Err(CycError::NotReal)
        );
    }

    #[test]
    fn rank_and_kernel() {
        let q = 6;
        let zero = CycMatrix::zero(q, 3, 3);
        assert_eq!(cyclo_rank(&zero), 0);
        let id = CycMatrix::from_fn(q, 3, 3, |i, j| {
            if i == j {
                CyclotomicNumber::one(q)
            } else {
                CyclotomicNumber::zero(q)
            }
        })
        .unwrap();
        assert_eq!(cyclo_rank(&id), 3);
        // [[1, ζ],[ζ^-1, 1]] has rank 1
        let m = CycMatrix::from_fn(q, 2, 2, |i, j| match (i, j) {
            (0, 1) => CyclotomicNumber::zeta_pow(q, 1),
            (1, 0) => CyclotomicNumber::zeta_pow(q, -1),
            _ => CyclotomicNumber::one(q),
        })
        .unwrap();
        assert_eq!(cyclo_rank(&m), 1);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let prod = m.mul(&k).unwrap();
        assert!((0..2).all(|i| prod.at(i, 0).is_zero()));
        // mixed moduli rejected
        let err = CycMatrix::from_fn(6, 1, 1, |_, _| CyclotomicNumber::one(5));
        assert!(matches!(err, Err(CycError::MixedModuli(6, 5))));
    }

    #[test]
    fn hermitian_inertia_examples() {
        let q = 4;
        // diag(1, -2): inertia (1,1,0)
        let m = CycMatrix::from_fn(q, 2, 2, |i, j| {
            if i != j {
                CyclotomicNumber::zero(q)
            } else if i == 0 {
                CyclotomicNumber::one(q)
            } else {
                CyclotomicNumber::from_int(q, &BigInt::from(-2))
            }
        })
        .unwrap();
        assert_eq!(hermitian_inertia(&m), Ok((1, 1, 0)));

        // hyperbolic [[0, i],[-i, 0]]: inertia (1,1,0)
        let i_unit = CyclotomicNumber::zeta_pow(q, 1);
        let m = CycMatrix::from_fn(q, 2, 2, |r, c| match (r, c) {
            (0, 1) => i_unit.clone(),
            (1, 0) => i_unit.conjugate(),
            _ => CyclotomicNumber::zero(q),
        })
        .unwrap();
        assert!(m.is_hermitian());
        assert_eq!(hermitian_inertia(&m), Ok((1, 1, 0)));

        // radical handling: diag(1, 0)
        let m = CycMatrix::from_fn(q, 2, 2, |r, c| {
            if (r, c) == (0, 0) {
                CyclotomicNumber::one(q)
            } else {
                CyclotomicNumber::zero(q)
            }
        })
        .unwrap();
        assert_eq!(hermitian_inertia(&m), Ok((1, 0, 1)));

        // non-hermitian rejected
        let m = CycMatrix::from_fn(q, 2, 2, |r, c| {
            if (r, c) == (0, 1) {
                CyclotomicNumber::one(q)
            } else {
                CyclotomicNumber::zero(q)
            }
        })
        .unwrap();
        assert_eq!(hermitian_inertia(&m), Err(CycError::NotHermitian));
    }

    #[test]
    fn inertia_invariant_under_congruence() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let q = 8;
        for _ in 0..12 {
            let n = rng.random_range(1..=4);
            // random hermitian: H = G + G^†
            let g = CycMatrix::from_fn(q, n, n, |_, _| {
                let num: Vec<BigInt> = (0..euler_phi(q))
                    .map(|_| BigInt::from(rng.random_range(-2..=2)))
                    .collect();
                CyclotomicNumber::normalized(q, num, BigInt::one())
            })
            .unwrap();
            let h = {
                let ct = g.conj_transpose();
                let mut out = CycMatrix::zero(q, n, n);
                for i in 0..n {
                    for j in 0..n {
                        out.set(i, j, g.at(i, j).add(ct.at(i, j)));
                    }
                }
                out
            };
            let before = hermitian_inertia(&h).unwrap();
            // congruence by a random invertible triangular-ish matrix
            let p = CycMatrix::from_fn(q, n, n, |i, j| {
                if i == j {
                    CyclotomicNumber::one(q)
                } else if i < j {
                    CyclotomicNumber::zeta_pow(q, rng.random_range(0..8))
                        .scale_int(&BigInt::from(rng.random_range(-1..=1)))
                } else {
                    CyclotomicNumber::zero(q)
                }
            })
            .unwrap();
            let congruent = p.conj_transpose().mul(&h).unwrap().mul(&p).unwrap();
            assert_eq!(hermitian_inertia(&congruent).unwrap(), before);
        }
    }
}

#[cfg(test)]
mod det_tests {
    use super::*;
    use crate::polyarith::laurent::{laurent_det, LaurentMatrix, LaurentPolynomial};
    use rand::{Rng, SeedableRng};

    #[test]
    fn inertia_rank_consistency() {
        // r+ + r- from diagonal pivoting must equal the rank from row
        // reduction, an independent elimination route
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let q = [3u64, 4, 5, 8, 12][rng.random_range(0..5)];
            let n = rng.random_range(0..=4);
            let g = CycMatrix::from_fn(q, n, n, |_, _| {
                let num: Vec<BigInt> = (0..euler_phi(q))
                    .map(|_| BigInt::from(rng.random_range(-3..=3)))
                    .collect();
                CyclotomicNumber::normalized(q, num, BigInt::one())
            })
            .unwrap();
            let mut h = CycMatrix::zero(q, n, n);
            let gt = g.conj_transpose();
            for i in 0..n {
                for j in 0..n {
                    h.set(i, j, g.at(i, j).add(gt.at(i, j)));
                }
            }
            let (rp, rm, null) = hermitian_inertia(&h).unwrap();
            assert_eq!(rp + rm, h.rank());
            assert_eq!(rp + rm + null, n);
        }
    }

    #[test]
    fn evaluation_respects_determinants() {
        // det then eval equals eval entrywise then det over Q(ζ_q)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let q = rng.random_range(2..=12);
            let p = rng.random_range(1..q);
            let Ok(xi) = RootOfUnity::new(p as i64, q as i64) else {
                continue;
            };
            let n = rng.random_range(0..=4);
            let entries: Vec<Vec<LaurentPolynomial>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let lo = rng.random_range(-2..=1);
                            let coeffs: Vec<i64> =
                                (0..rng.random_range(1..=3)).map(|_| rng.random_range(-3..=3)).collect();
                            LaurentPolynomial::from_i64(lo, &coeffs)
                        })
                        .collect()
                })
                .collect();
            let lm = LaurentMatrix::from_fn(n, n, |i, j| entries[i][j].clone());
            let lhs = eval_at(&laurent_det(&lm), xi);
            let cm = CycMatrix::from_fn(xi.denominator(), n, n, |i, j| {
                eval_at(&entries[i][j], xi)
            })
            .unwrap();
            assert_eq!(lhs, cm.det());
        }
    }
}
