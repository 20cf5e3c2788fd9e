//! Local computations at the places of `ℚ`: Hilbert symbols, Hasse
//! invariants and isotropy of diagonal forms over `ℚ_p`, `ℝ`, and quadratic
//! extensions of `ℚ_p`.
//!
//! Convention: the Hasse invariant of `⟨a₁,…,aₙ⟩` is `∏_{i<j} (aᵢ,aⱼ)_v`.
//! With this convention a quaternary form over `ℚ_p` is anisotropic exactly
//! when its discriminant is a square and its Hasse invariant is
//! `−(−1,−1)_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{check_prime, int_valuation, legendre, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    Real,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Real => write!(f, "inf"),
        }
    }
}

/// Nondegenerate diagonal form `⟨a₁,…,aₙ⟩` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    coeffs: Vec<Rational>,
}

impl DiagonalForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyForm);
        }
        if coeffs.iter().any(Zero::is_zero) {
            return Err(Error::Zero);
        }
        Ok(DiagonalForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `n⟨1⟩`; panics for `n = 0`.
    pub fn ones(n: usize) -> Self {
        Self::repeated(n, Rational::one())
    }

    /// `n⟨c⟩`; panics for `n = 0` or `c = 0`.
    pub fn repeated(n: usize, c: Rational) -> Self {
        Self::new(vec![c; n]).expect("n > 0 and c != 0")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `self ⊥ other`.
    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        DiagonalForm { coeffs }
    }

    /// `(positive, negative)` coefficient counts.
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.coeffs.iter().filter(|c| c.is_positive()).count();
        (pos, self.dim() - pos)
    }

    pub fn is_definite(&self) -> bool {
        let (pos, neg) = self.signature();
        pos == 0 || neg == 0
    }

    pub fn determinant(&self) -> Rational {
        self.coeffs.iter().fold(Rational::one(), |acc, c| acc * c)
    }

    /// Integer representatives of the coefficient square classes.
    pub(crate) fn integer_classes(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(integer_class).collect()
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ">")
    }
}

/// `num·den` lies in the square class of `num/den`.
pub(crate) fn integer_class(x: &Rational) -> BigInt {
    x.numer() * x.denom()
}

/// Splits a nonzero integer as `p^v · u` with `p ∤ u`.
fn split_unit(n: &BigInt, p: u64) -> (u64, BigInt) {
    let v = int_valuation(n, p);
    let u = n / num_traits::pow(BigInt::from(p), v as usize);
    (v, u)
}

fn mod_small(n: &BigInt, m: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(m));
    r.iter_u64_digits().next().unwrap_or(0)
}

pub(crate) fn hilbert_int(a: &BigInt, b: &BigInt, v: Place) -> i8 {
    match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = split_unit(a, 2);
            let (beta, w) = split_unit(b, 2);
            // ε(x) = (x−1)/2 and ω(x) = (x²−1)/8 modulo 2
            let eps = |x: &BigInt| (mod_small(x, 4) == 3) as u64;
            let omega = |x: &BigInt| matches!(mod_small(x, 8), 3 | 5) as u64;
            let e = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = split_unit(a, p);
            let (beta, w) = split_unit(b, p);
            let mut s: i8 = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && p % 4 == 3 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    }
}

fn check_place(v: Place) -> Result<()> {
    match v {
        Place::Real => Ok(()),
        Place::Finite(p) => check_prime(p),
    }
}

/// `(a, b)_v`: `+1` iff `z² = ax² + by²` has a nontrivial solution over the
/// completion of `ℚ` at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    check_place(v)?;
    Ok(hilbert_int(&integer_class(a), &integer_class(b), v))
}

/// Whether a nonzero integer is a square in `ℚ_v`.
pub(crate) fn is_local_square(n: &BigInt, v: Place) -> bool {
    match v {
        Place::Real => n.is_positive(),
        Place::Finite(p) => {
            let (e, u) = split_unit(n, p);
            e % 2 == 0
                && if p == 2 {
                    mod_small(&u, 8) == 1
                } else {
                    legendre(&u, p) == 1
                }
        }
    }
}

pub(crate) fn hasse_int(classes: &[BigInt], v: Place) -> i8 {
    let mut s = 1;
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            s *= hilbert_int(&classes[i], &classes[j], v);
        }
    }
    s
}

/// `∏_{i<j} (aᵢ, aⱼ)_v`.
pub fn hasse_invariant(f: &DiagonalForm, v: Place) -> Result<i8> {
    check_place(v)?;
    Ok(hasse_int(&f.integer_classes(), v))
}

/// Isotropy over `ℚ_p` from the classifying data `(dim, disc, hasse)`.
/// `disc` is any nonzero integer in the discriminant's square class.
pub(crate) fn padic_isotropic_from_invariants(dim: usize, disc: &BigInt, hasse: i8, p: u64) -> bool {
    let v = Place::Finite(p);
    match dim {
        0 | 1 => false,
        2 => is_local_square(&-disc, v),
        3 => hilbert_int(&BigInt::from(-1), &-disc, v) == hasse,
        4 => !(is_local_square(disc, v) && hasse == -hilbert_int(&BigInt::from(-1), &BigInt::from(-1), v)),
        _ => true,
    }
}

/// Whether `f` has a nontrivial zero over `ℚ_v`.
pub fn local_isotropic(f: &DiagonalForm, v: Place) -> Result<bool> {
    check_place(v)?;
    Ok(local_isotropic_unchecked(f, v))
}

pub(crate) fn local_isotropic_unchecked(f: &DiagonalForm, v: Place) -> bool {
    match v {
        Place::Real => {
            let (pos, neg) = f.signature();
            pos > 0 && neg > 0
        }
        Place::Finite(p) => {
            let classes = f.integer_classes();
            let disc = classes.iter().fold(BigInt::one(), |acc, c| acc * c);
            padic_isotropic_from_invariants(f.dim(), &disc, hasse_int(&classes, v), p)
        }
    }
}

/// Isotropy of `f` over the unramified quadratic extension of `ℚ_p`, `p` odd.
///
/// Every `p`-unit of `ℚ_p` becomes a square there, and so does `−1`, so each
/// coefficient is `1` or `p` up to squares and every Hilbert symbol between
/// them is trivial. The form is then isotropic iff `dim ≥ 3`, or `dim = 2`
/// with coefficient valuations of equal parity.
pub fn local_isotropic_unramified_ext(f: &DiagonalForm, p: u64) -> Result<bool> {
    if p == 2 {
        return Err(Error::EvenPrime(p));
    }
    check_prime(p)?;
    Ok(match f.dim() {
        1 => false,
        2 => {
            let v: u64 = f
                .integer_classes()
                .iter()
                .map(|c| int_valuation(c, p))
                .sum();
            v % 2 == 0
        }
        _ => true,
    })
}

/// Isotropy of `f` (coefficients in `ℚ`) over the quadratic extension
/// `ℚ_p(√d)`, assumed to be a field (`d` not a square in `ℚ_p`).
///
/// For `a, b ∈ ℚ_p` and a quadratic extension `L`, `(a,b)_L = (a, N_{L/ℚ_p} b)_p
/// = (a, b²)_p = 1`, so every form of dimension ≥ 3 defined over `ℚ_p` is
/// isotropic over `L`. A binary form is isotropic iff `−a₁a₂` is a square in
/// `L`, i.e. `−a₁a₂` or `−a₁a₂·d` is a square in `ℚ_p`.
pub fn local_isotropic_quadratic_ext(f: &DiagonalForm, p: u64, d: &BigInt) -> Result<bool> {
    check_prime(p)?;
    if d.is_zero() {
        return Err(Error::Zero);
    }
    let v = Place::Finite(p);
    if is_local_square(d, v) {
        return Err(Error::InvalidField(format!("{d} is a square in Q_{p}")));
    }
    Ok(match f.dim() {
        1 => false,
        2 => {
            let c = f.integer_classes();
            let t = -(&c[0] * &c[1]);
            is_local_square(&t, v) || is_local_square(&(t * d), v)
        }
        _ => true,
    })
}
