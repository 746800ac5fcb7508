//! Coefficient rings for polynomial data.
//!
//! Two implementations are provided: `Complex64` for the double-precision
//! pipelines, and [`Exact`] for coefficients of the form `Σ q_k √d_k` with
//! rational `q_k` and squarefree `d_k` in both the real and imaginary parts.
//! The exact ring is closed under `+`, `-`, `*` and conjugation, which is all
//! the verification identities need; the bundled example data (entries like
//! `√15/4` or `-√3/2`) live in it without rounding.

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


/// Absolute pruning threshold for float-mode coefficients.
pub const PRUNE_EPS: f64 = 1e-14;

/// Ring operations required of a polynomial coefficient.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// `num / den`, with `den != 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `(num / den) · √radicand`, with `den != 0` and `radicand >= 1`.
    fn from_surd(num: i64, den: i64, radicand: u64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// Whether the value should be pruned from sparse storage. Exactly zero
    /// for the exact ring; below [`PRUNE_EPS`] in magnitude for floats.
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> Complex64;
    /// Magnitude used for residual reports. An exact zero maps to exactly 0.0.
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            self.to_c64().norm()
        }
    }
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_surd(num: i64, den: i64, radicand: u64) -> Self {
        assert!(den != 0, "zero denominator");
        assert!(radicand >= 1, "radicand must be >= 1");
        Complex64::new(num as f64 / den as f64 * (radicand as f64).sqrt(), 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::new(self.re, -self.im)
    }
    fn is_zero(&self) -> bool {
        self.norm() <= PRUNE_EPS
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Splits `n` as `s² · d` with `d` squarefree; returns `(s, d)`.
fn squarefree_split(n: u64) -> (u64, u64) {
    debug_assert!(n >= 1);
    let mut m = n;
    let mut s = 1u64;
    let mut d = 1u64;
    let mut f = 2u64;
    while f * f <= m {
        if m.is_multiple_of(f) {
            let mut k = 0u32;
            while m.is_multiple_of(f) {
                m /= f;
                k += 1;
            }
            s *= f.pow(k / 2);
            if k % 2 == 1 {
                d *= f;
            }
        }
        f += 1;
    }
    (s, d * m)
}

/// A finite sum `Σ q_d √d` over squarefree radicands `d ≥ 1`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SurdSum {
    terms: BTreeMap<u64, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        SurdSum { terms: BTreeMap::new() }
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = SurdSum::zero();
        s.push(1, q);
        s
    }

    pub fn surd(num: i64, den: i64, radicand: u64) -> Self {
        assert!(den != 0, "zero denominator");
        assert!(radicand >= 1, "radicand must be >= 1");
        let (sq, d) = squarefree_split(radicand);
        let q = BigRational::new(BigInt::from(num) * BigInt::from(sq), BigInt::from(den));
        let mut s = SurdSum::zero();
        s.push(d, q);
        s
    }

    fn push(&mut self, radicand: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, q) in &rhs.terms {
            out.push(*d, q.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SurdSum {
            terms: self.terms.iter().map(|(d, q)| (*d, -q.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = SurdSum::zero();
        for (d1, q1) in &self.terms {
            for (d2, q2) in &rhs.terms {
                let prod = (*d1 as u128) * (*d2 as u128);
                assert!(prod <= u64::MAX as u128, "radicand overflow");
                let (s, d) = squarefree_split(prod as u64);
                out.push(d, q1 * q2 * BigRational::from_integer(BigInt::from(s)));
            }
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, q)| q.to_f64().unwrap_or(f64::NAN) * (*d as f64).sqrt())
            .sum()
    }

    /// True when the sum is a plain rational (at most a `√1` term).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&d| d == 1)
    }
}

/// Exact complex scalar with [`SurdSum`] real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Exact {
    pub re: SurdSum,
    pub im: SurdSum,
}

impl Exact {
    pub fn new(re: SurdSum, im: SurdSum) -> Self {
        Exact { re, im }
    }

    pub fn from_big_rational(q: BigRational) -> Self {
        Exact { re: SurdSum::rational(q), im: SurdSum::zero() }
    }

    /// Exact dyadic-rational image of a finite `f64`. Returns `None` for
    /// NaN or infinities.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self::from_big_rational)
    }

    /// `(re, im)` built from two finite floats, exactly.
    pub fn from_f64_pair(re: f64, im: f64) -> Option<Self> {
        Some(Exact {
            re: BigRational::from_float(re).map(SurdSum::rational)?,
            im: if im == 0.0 {
                SurdSum::zero()
            } else {
                BigRational::from_float(im).map(SurdSum::rational)?
            },
        })
    }

    pub fn i_times(&self) -> Self {
        Exact { re: self.im.neg(), im: self.re.clone() }
    }
}

impl Coeff for Exact {
    fn zero() -> Self {
        Exact::default()
    }
    fn one() -> Self {
        Exact::from_int(1)
    }
    fn from_int(n: i64) -> Self {
        Exact {
            re: SurdSum::rational(BigRational::from_integer(BigInt::from(n))),
            im: SurdSum::zero(),
        }
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Exact {
            re: SurdSum::rational(BigRational::new(BigInt::from(num), BigInt::from(den))),
            im: SurdSum::zero(),
        }
    }
    fn from_surd(num: i64, den: i64, radicand: u64) -> Self {
        Exact { re: SurdSum::surd(num, den, radicand), im: SurdSum::zero() }
    }
    fn add(&self, rhs: &Self) -> Self {
        Exact { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Exact { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Exact {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
    fn neg(&self) -> Self {
        Exact { re: self.re.neg(), im: self.im.neg() }
    }
    fn conj(&self) -> Self {
        Exact { re: self.re.clone(), im: self.im.neg() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            let a = self.re.to_f64();
            let b = self.im.to_f64();
            a.hypot(b)
        }
    }
}
