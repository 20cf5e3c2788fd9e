//! Exact arithmetic: rationals, square classes, p-adic valuations and
//! quadratic fields `ℚ(√d)`.
//!
//! Factorization is deterministic trial division and refuses integers whose
//! absolute value exceeds [`FACTOR_LIMIT`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Largest absolute value accepted by [`factor`].
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Prime factorization of `|n|` by trial division, as `(p, e)` pairs with
/// increasing `p`. `|n| = 1` gives the empty list.
pub fn factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let mut m = n
        .abs()
        .to_u64()
        .filter(|&m| m <= FACTOR_LIMIT)
        .ok_or_else(|| Error::FactorizationLimit(n.to_string()))?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

pub fn prime_divisors(n: &BigInt) -> Result<Vec<u64>> {
    Ok(factor(n)?.into_iter().map(|(p, _)| p).collect())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p > FACTOR_LIMIT {
        return Err(Error::FactorizationLimit(p.to_string()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(())
}

/// Writes `n = s·m²` with `s` squarefree, `sign(s) = sign(n)` and `m > 0`.
pub fn squarefree_part(n: &BigInt) -> Result<(BigInt, BigInt)> {
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    for (p, e) in factor(n)? {
        let p = BigInt::from(p);
        if e % 2 == 1 {
            s *= &p;
        }
        m *= num_traits::pow(p, (e / 2) as usize);
    }
    if n.is_negative() {
        s = -s;
    }
    Ok((s, m))
}

/// Squarefree integer representing the square class of a nonzero rational.
pub fn square_class(x: &Rational) -> Result<BigInt> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    let (s, _) = squarefree_part(&(x.numer() * x.denom()))?;
    Ok(s)
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `x` is the square of a rational. Needs no factorization.
pub fn is_rational_square(x: &Rational) -> bool {
    is_perfect_square(x.numer()) && is_perfect_square(x.denom())
}

/// Whether `x = y²` for some `y` in `k`.
pub fn is_square(x: &Rational, k: &FieldDescriptor) -> bool {
    if x.is_zero() || is_rational_square(x) {
        return true;
    }
    match k.radicand() {
        None => false,
        // x = (a + b√d)² with x rational forces a = 0 or b = 0, so x or x/d is
        // a rational square; x/d and x·d share a square class.
        Some(d) => is_rational_square(&(x * Rational::from_integer(d.clone()))),
    }
}

/// `v` such that `x = p^v·u` with `u` a `p`-adic unit.
pub fn padic_valuation(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Zero);
    }
    check_prime(p)?;
    Ok(int_valuation(x.numer(), p) as i64 - int_valuation(x.denom(), p) as i64)
}

/// Valuation of a nonzero integer; the prime is not checked.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Legendre symbol `(a/p)` for odd prime `p` and `p ∤ a`.
pub(crate) fn legendre(a: &BigInt, p: u64) -> i8 {
    let pb = BigInt::from(p);
    let a = a.mod_floor(&pb);
    debug_assert!(!a.is_zero());
    let e = BigInt::from((p - 1) / 2);
    if a.modpow(&e, &pb).is_one() {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Quadratic,
}

/// `ℚ`, or `ℚ(√d)` with `d` squarefree and `d ∉ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    d: Option<BigInt>,
}

impl FieldDescriptor {
    pub fn rationals() -> Self {
        FieldDescriptor { d: None }
    }

    /// `ℚ(√D)`. `D` is reduced to its squarefree part; perfect squares and
    /// zero are rejected.
    pub fn quadratic(radicand: impl Into<BigInt>) -> Result<Self> {
        let radicand = radicand.into();
        if radicand.is_zero() {
            return Err(Error::InvalidField("radicand 0".into()));
        }
        let (s, _) = squarefree_part(&radicand)?;
        if s.is_one() {
            return Err(Error::InvalidField(format!(
                "{radicand} is a perfect square, so Q(sqrt {radicand}) = Q"
            )));
        }
        Ok(FieldDescriptor { d: Some(s) })
    }

    pub fn kind(&self) -> FieldKind {
        match self.d {
            None => FieldKind::Rational,
            Some(_) => FieldKind::Quadratic,
        }
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        self.d.as_ref()
    }

    pub fn is_rationals(&self) -> bool {
        self.d.is_none()
    }

    /// Admits an ordering (ℚ or a real quadratic field).
    pub fn is_formally_real(&self) -> bool {
        self.d.as_ref().map_or(true, |d| d.is_positive())
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            None => write!(f, "Q"),
            Some(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    /// Accepts `Q` and `Q(sqrt D)`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q" {
            return Ok(Self::rationals());
        }
        let err = || Error::Parse {
            what: "field",
            input: s.to_string(),
        };
        let inner = compact
            .strip_prefix("Q(sqrt")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let d: BigInt = inner.parse().map_err(|_| err())?;
        Self::quadratic(d)
    }
}

/// `a + b√d` in `ℚ(√d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadFieldElem {
    pub a: Rational,
    pub b: Rational,
    d: BigInt,
}

impl QuadFieldElem {
    /// Panics if `field` is `ℚ`.
    pub fn new(a: Rational, b: Rational, field: &FieldDescriptor) -> Self {
        let d = field
            .radicand()
            .expect("QuadFieldElem needs a quadratic field")
            .clone();
        QuadFieldElem { a, b, d }
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn field(&self) -> FieldDescriptor {
        FieldDescriptor {
            d: Some(self.d.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.d, other.d, "elements of different quadratic fields");
    }
}

/// `N(a + b√d) = a² − d·b²`.
pub fn quad_norm(e: &QuadFieldElem) -> Rational {
    &e.a * &e.a - Rational::from_integer(e.d.clone()) * &e.b * &e.b
}

impl Add for &QuadFieldElem {
    type Output = QuadFieldElem;
    fn add(self, rhs: Self) -> QuadFieldElem {
        self.same_field(rhs);
        QuadFieldElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Sub for &QuadFieldElem {
    type Output = QuadFieldElem;
    fn sub(self, rhs: Self) -> QuadFieldElem {
        self.same_field(rhs);
        QuadFieldElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Mul for &QuadFieldElem {
    type Output = QuadFieldElem;
    fn mul(self, rhs: Self) -> QuadFieldElem {
        self.same_field(rhs);
        let d = Rational::from_integer(self.d.clone());
        QuadFieldElem {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        }
    }
}

impl Neg for &QuadFieldElem {
    type Output = QuadFieldElem;
    fn neg(self) -> QuadFieldElem {
        QuadFieldElem {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for QuadFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}
