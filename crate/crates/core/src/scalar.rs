//! Exact scalar fields.
//!
//! The linear algebra and jet code is generic over [`Scalar`]; the
//! representation-theoretic code is written against [`Rational`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{FromPrimitive, Num, One, Signed, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// A field with exact arithmetic.
pub trait Scalar:
    Clone + fmt::Debug + PartialEq + Zero + One + Neg<Output = Self> + Num + FromPrimitive
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer embeds in every scalar field")
    }

    fn from_rational(q: &Rational) -> Self;
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// Canonical "p/q" rendering; integers render without a denominator.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Exact integer square root of a nonnegative rational, if it exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Element a + b·√Δ of ℚ(√Δ).
///
/// `delta == 0` marks an element of ℚ that is compatible with every
/// extension; arithmetic between two distinct nonzero discriminants panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub delta: BigInt,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), delta: BigInt::zero() }
    }

    /// Builds a + b√Δ with Δ reduced to a squarefree integer when small
    /// square factors are found; perfect squares collapse to ℚ.
    pub fn new(a: Rational, b: Rational, delta: Rational) -> Self {
        let (scale, core) = squarefree_part(&delta);
        let b = b * scale;
        if core.is_one() {
            return QuadExt::rational(a + b);
        }
        if b.is_zero() || core.is_zero() {
            return QuadExt::rational(a);
        }
        QuadExt { a, b, delta: core }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.delta.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), delta: self.delta.clone() }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * big(&self.delta)
    }

    fn joint_delta(&self, other: &Self) -> BigInt {
        match (self.delta.is_zero(), other.delta.is_zero()) {
            (true, _) => other.delta.clone(),
            (_, true) => self.delta.clone(),
            _ => {
                assert_eq!(self.delta, other.delta, "mixing distinct quadratic extensions");
                self.delta.clone()
            }
        }
    }

    fn normalized(mut self) -> Self {
        if self.b.is_zero() {
            self.delta = BigInt::zero();
        }
        self
    }

    /// Approximate value, for ordering conjugates only.
    pub fn approx(&self) -> f64 {
        use num::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.delta.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

/// Writes a rational r as s²·c with c a squarefree integer, returning (s, c).
/// Trial division is capped; an unfactored remainder stays in c.
pub fn squarefree_part(r: &Rational) -> (Rational, BigInt) {
    if r.is_zero() {
        return (Rational::zero(), BigInt::zero());
    }
    // r = p/q = p·q / q²
    let mut m = r.numer() * r.denom();
    let mut scale = Rational::new(BigInt::one(), r.denom().clone());
    let neg = m.is_negative();
    if neg {
        m = -m;
    }
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while &p * &p <= m && p < limit {
        let sq = &p * &p;
        while (&m % &sq).is_zero() {
            m /= &sq;
            scale *= big(&p);
        }
        if (&m % &p).is_zero() {
            m /= &p;
            core *= &p;
        }
        p += 1;
    }
    let rest = m.sqrt();
    if &rest * &rest == m {
        scale *= big(&rest);
    } else {
        core *= m;
    }
    if neg {
        core = -core;
    }
    (scale, core)
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                format_rational(&self.a),
                format_rational(&self.b),
                self.delta
            )
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        let delta = self.joint_delta(&o);
        QuadExt { a: self.a + o.a, b: self.b + o.b, delta }.normalized()
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        let delta = self.joint_delta(&o);
        QuadExt { a: self.a - o.a, b: self.b - o.b, delta }.normalized()
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        let delta = self.joint_delta(&o);
        let d = big(&delta);
        QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
            delta,
        }
        .normalized()
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, o: QuadExt) -> QuadExt {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in quadratic extension");
        let num = self * o.conj();
        QuadExt { a: num.a / n.clone(), b: num.b / n, delta: num.delta }.normalized()
    }
}

impl Rem for QuadExt {
    type Output = QuadExt;
    fn rem(self, _o: QuadExt) -> QuadExt {
        QuadExt::zero()
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, delta: self.delta }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
}

impl Num for QuadExt {
    type FromStrRadixErr = ();
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ()> {
        Rational::from_str_radix(s, radix).map(QuadExt::rational).map_err(|_| ())
    }
}

impl FromPrimitive for QuadExt {
    fn from_i64(n: i64) -> Option<Self> {
        Some(QuadExt::rational(int(n)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(QuadExt::rational(Rational::from_integer(BigInt::from(n))))
    }
}

impl Scalar for QuadExt {
    fn from_rational(q: &Rational) -> Self {
        QuadExt::rational(q.clone())
    }
}

