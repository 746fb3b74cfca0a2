//! Self-contained dyadic interval arithmetic: enclosures for π and for
//! cos/sin of rational multiples of π, at arbitrary working precision.
//! This is what certifies signs of nonzero real cyclotomic numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Closed interval `[lo, hi] * 2^-prec`. All operations round outward.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub prec: u32,
}

fn div_floor(a: &BigInt, shift: u32) -> BigInt {
    a >> shift
}

fn div_ceil(a: &BigInt, shift: u32) -> BigInt {
    -((-a) >> shift)
}

impl Interval {
    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Interval {
            lo: n << prec,
            hi: n << prec,
            prec,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Interval {
            lo: BigInt::zero(),
            hi: BigInt::zero(),
            prec,
        }
    }

    /// Tight outward enclosure of the rational `num/den` (`den > 0`).
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(den.is_positive());
        let scaled = num << prec;
        let lo = scaled.div_floor(den);
        let hi = scaled.div_ceil(den);
        Interval { lo, hi, prec }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap();
        let hi = candidates.iter().max().unwrap();
        Interval {
            lo: div_floor(lo, self.prec),
            hi: div_ceil(hi, self.prec),
            prec: self.prec,
        }
    }

    /// Multiply by the exact rational `num/den` (`den > 0`).
    pub fn mul_ratio(&self, num: &BigInt, den: &BigInt) -> Self {
        assert!(den.is_positive());
        let a = &self.lo * num;
        let b = &self.hi * num;
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        Interval {
            lo: x.div_floor(den),
            hi: y.div_ceil(den),
            prec: self.prec,
        }
    }

    /// Divide by a positive integer.
    pub fn div_uint(&self, d: &BigInt) -> Self {
        self.mul_ratio(&BigInt::one(), d)
    }

    /// Widen both ends by `ulps` units in the last place.
    pub fn widen(&self, ulps: &BigInt) -> Self {
        Interval {
            lo: &self.lo - ulps,
            hi: &self.hi + ulps,
            prec: self.prec,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Magnitude bound `max(|lo|, |hi|)` in ulps.
    fn mag(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn midpoint_f64(&self) -> f64 {
        // test/debug aid only; never used for decisions
        let two = BigInt::from(2);
        let m = (&self.lo + &self.hi) / &two;
        let mut v = 0.0f64;
        let (sign, digits) = m.to_u64_digits();
        for d in digits.iter().rev() {
            v = v * 1.8446744073709552e19 + *d as f64;
        }
        if sign == num_bigint::Sign::Minus {
            v = -v;
        }
        v / 2f64.powi(self.prec as i32)
    }
}

impl Interval {
    /// Round outward to a smaller working precision.
    fn rescale_down(&self, new_prec: u32) -> Interval {
        assert!(new_prec <= self.prec);
        let shift = self.prec - new_prec;
        Interval {
            lo: div_floor(&self.lo, shift),
            hi: div_ceil(&self.hi, shift),
            prec: new_prec,
        }
    }
}

/// arctan(1/x) for integer x >= 2 by the alternating Gregory series,
/// summed in interval arithmetic with the truncation bracketed.
fn atan_recip(x: u64, prec: u32) -> Interval {
    let work = prec + 16;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut sum = Interval::zero(work);
    let mut denom_pow = x.clone(); // x^(2k+1)
    let mut k: u64 = 0;
    let one = BigInt::one();
    loop {
        let term_den = &denom_pow * BigInt::from(2 * k + 1);
        let term = Interval::from_ratio(&one, &term_den, work);
        if k.is_multiple_of(2) {
            sum = sum.add(&term);
        } else {
            sum = sum.sub(&term);
        }
        // alternating series: the truncation error is below the next term
        let next_den = &denom_pow * &x2 * BigInt::from(2 * k + 3);
        let bound = (BigInt::one() << work).div_ceil(&next_den) + 1;
        if bound <= BigInt::from(2) || k > 4 * work as u64 {
            sum = sum.widen(&bound);
            break;
        }
        denom_pow *= &x2;
        k += 1;
    }
    sum.rescale_down(prec)
}

/// Rigorous enclosure of π (Machin: π = 16 atan(1/5) − 4 atan(1/239)).
/// Enclosures are cached per precision; they are immutable values, so the
/// cache never affects results.
pub fn pi(prec: u32) -> Interval {
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<u32, Interval>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|c| {
        if let Some(iv) = c.borrow().get(&prec) {
            return iv.clone();
        }
        let work = prec + 16;
        let a = atan_recip(5, work);
        let b = atan_recip(239, work);
        let sixteen = Interval::from_bigint(&BigInt::from(16), work);
        let four = Interval::from_bigint(&BigInt::from(4), work);
        let p = sixteen.mul(&a).sub(&four.mul(&b)).rescale_down(prec);
        c.borrow_mut().insert(prec, p.clone());
        p
    })
}

/// cos on a small interval: Taylor series at the interval itself, with the
/// remainder term bracketed by |x|^(2N+2)/(2N+2)!. Valid for |x| <= 4.
fn cos_core(x: &Interval, prec: u32) -> Interval {
    let x2 = x.mul(x);
    let mut term = Interval::from_bigint(&BigInt::one(), prec);
    let mut sum = term.clone();
    let mut mag_bound = BigInt::one() << prec; // bound on |x|^(2k)/ (2k)! in ulps
    let x_mag = x.mag();
    let mut k: u64 = 1;
    loop {
        let d = BigInt::from((2 * k - 1) * (2 * k));
        term = term.mul(&x2).div_uint(&d);
        if k % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        // propagate the same recurrence on the magnitude bound
        mag_bound = (&mag_bound * &x_mag * &x_mag) >> (2 * prec);
        mag_bound = mag_bound.div_ceil(&d) + 1;
        if mag_bound <= BigInt::from(2) || k > 8 * prec as u64 {
            // remainder after N terms is below the next magnitude bound
            let next = (&mag_bound * &x_mag * &x_mag) >> (2 * prec);
            let next = next.div_ceil(&BigInt::from((2 * k + 1) * (2 * k + 2))) + 2;
            return sum.widen(&next);
        }
        k += 1;
    }
}

/// Enclosure of cos(2π j / q), exact range reduction through the symmetry
/// cos(2π − θ) = cos(θ). Cached per (j, q, precision).
pub fn cos_two_pi_ratio(j: u64, q: u64, prec: u32) -> Interval {
    assert!(q >= 1);
    let j = j % q;
    let j = j.min(q - j); // now 2πj/q ∈ [0, π]
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<(u64, u64, u32), Interval>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|c| {
        if let Some(iv) = c.borrow().get(&(j, q, prec)) {
            return iv.clone();
        }
        let work = prec + 16;
        let theta = pi(work).mul_ratio(&BigInt::from(2 * j), &BigInt::from(q));
        let out = cos_core(&theta, work).rescale_down(prec);
        c.borrow_mut().insert((j, q, prec), out.clone());
        out
    })
}

/// Enclosure of sin(2π j / q) via sin θ = cos(θ − π/2), with the sign
/// handled by sin(2π − θ) = −sin(θ).
pub fn sin_two_pi_ratio(j: u64, q: u64, prec: u32) -> Interval {
    assert!(q >= 1);
    let j = j % q;
    let (j, flip) = if 2 * j > q { (q - j, true) } else { (j, false) };
    let work = prec + 16;
    // θ = 2πj/q ∈ [0, π]; sin θ = cos(θ − π/2), argument in [−π/2, π/2]
    let p = pi(work);
    let theta = p.mul_ratio(&BigInt::from(2 * j), &BigInt::from(q));
    let arg = theta.sub(&p.div_uint(&BigInt::from(2)));
    let c = cos_core(&arg, work);
    let c = if flip { c.neg() } else { c };
    c.rescale_down(prec)
}
