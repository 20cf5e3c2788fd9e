//! Global quadratic-form decisions over `ℚ` and `ℚ(√d)`.
//!
//! Over `ℚ` everything is read off the complete invariants (dimension,
//! discriminant, signature, Hasse invariants) via Hasse–Minkowski. Over a
//! quadratic field a form with rational coefficients can only be obstructed
//! at a real place or at a split prime, because a form of dimension ≥ 3
//! defined over `ℚ_p` becomes isotropic over every quadratic extension of
//! `ℚ_p`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    is_square, legendre, prime_divisors, squarefree_part, FieldDescriptor, Rational,
};
use crate::localfields::{
    hasse_int, hilbert_int, local_isotropic_quadratic_ext, local_isotropic_unchecked,
    local_isotropic_unramified_ext, padic_isotropic_from_invariants, DiagonalForm, Place,
};

/// Complete invariants of a nondegenerate form over `ℚ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormInvariants {
    pub dim: usize,
    /// Squarefree representative of the determinant's square class.
    pub disc: BigInt,
    /// `(positive, negative)`.
    pub signature: (usize, usize),
    /// Places where the Hasse invariant is `−1`.
    pub hasse_bad: BTreeSet<Place>,
}

impl FormInvariants {
    /// Invariants of the zero-dimensional form.
    pub fn zero() -> Self {
        FormInvariants {
            dim: 0,
            disc: BigInt::one(),
            signature: (0, 0),
            hasse_bad: BTreeSet::new(),
        }
    }

    pub fn hasse_at(&self, v: Place) -> i8 {
        if self.hasse_bad.contains(&v) {
            -1
        } else {
            1
        }
    }

    /// Finite places where a form with these invariants could fail to be
    /// isotropic: 2, primes of the discriminant, and finite Hasse-bad places.
    fn critical_primes(&self) -> Result<BTreeSet<u64>> {
        let mut out: BTreeSet<u64> = prime_divisors(&self.disc)?.into_iter().collect();
        out.insert(2);
        out.extend(self.hasse_bad.iter().filter_map(|v| match v {
            Place::Finite(p) => Some(*p),
            Place::Real => None,
        }));
        Ok(out)
    }

    pub fn is_indefinite(&self) -> bool {
        self.signature.0 > 0 && self.signature.1 > 0
    }

    pub fn local_isotropic(&self, v: Place) -> bool {
        match v {
            Place::Real => self.is_indefinite(),
            Place::Finite(p) => {
                padic_isotropic_from_invariants(self.dim, &self.disc, self.hasse_at(v), p)
            }
        }
    }

    /// Hasse–Minkowski over `ℚ`.
    pub fn is_isotropic(&self) -> Result<bool> {
        Ok(match self.dim {
            0 | 1 => false,
            2 => self.disc == BigInt::from(-1),
            3 | 4 => {
                self.is_indefinite()
                    && self
                        .critical_primes()?
                        .into_iter()
                        .all(|p| self.local_isotropic(Place::Finite(p)))
            }
            _ => self.is_indefinite(),
        })
    }

    /// Invariants of `g` where `self ≅ ⟨1,−1⟩ ⊥ g`. Only meaningful when the
    /// form is isotropic.
    fn split_hyperbolic_plane(&self) -> Result<Self> {
        let disc = -&self.disc;
        // ε(H ⊥ g) = ε(g)·(d_H, d_g) = ε(g)·(−1, d_g)
        let mut places: BTreeSet<Place> = self.hasse_bad.clone();
        places.insert(Place::Real);
        places.insert(Place::Finite(2));
        places.extend(prime_divisors(&disc)?.into_iter().map(Place::Finite));
        let minus_one = BigInt::from(-1);
        let hasse_bad = places
            .into_iter()
            .filter(|&v| self.hasse_at(v) * hilbert_int(&minus_one, &disc, v) == -1)
            .collect();
        Ok(FormInvariants {
            dim: self.dim - 2,
            disc,
            signature: (self.signature.0 - 1, self.signature.1 - 1),
            hasse_bad,
        })
    }
}

impl fmt::Display for FormInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad: Vec<String> = self.hasse_bad.iter().map(ToString::to_string).collect();
        write!(
            f,
            "dim {}, disc {}, signature ({}, {}), hasse_bad {{{}}}",
            self.dim,
            self.disc,
            self.signature.0,
            self.signature.1,
            bad.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IsotropyOutcome {
    Isotropic,
    Anisotropic,
    Unsupported(String),
}

/// Three-valued answer for sums of squares.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Unsupported(String),
}

impl Decision {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Unsupported(_) => None,
        }
    }
}

/// Level `s(k)`: the least `n` with `−1` a sum of `n` squares in `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    One,
    Two,
    Four,
    Infinite,
}

impl Level {
    pub fn value(self) -> Option<u32> {
        match self {
            Level::One => Some(1),
            Level::Two => Some(2),
            Level::Four => Some(4),
            Level::Infinite => None,
        }
    }
}

pub fn form_invariants(f: &DiagonalForm) -> Result<FormInvariants> {
    let classes = f.integer_classes();
    let det = classes.iter().fold(BigInt::one(), |acc, c| acc * c);
    let (disc, _) = squarefree_part(&det)?;
    let mut places = BTreeSet::from([Place::Real, Place::Finite(2)]);
    for c in f.coeffs() {
        for n in [c.numer(), c.denom()] {
            places.extend(prime_divisors(n)?.into_iter().map(Place::Finite));
        }
    }
    let hasse_bad = places
        .into_iter()
        .filter(|&v| hasse_int(&classes, v) == -1)
        .collect();
    Ok(FormInvariants {
        dim: f.dim(),
        disc,
        signature: f.signature(),
        hasse_bad,
    })
}

/// Isometry over `ℚ`.
pub fn equivalent_q(f: &DiagonalForm, g: &DiagonalForm) -> Result<bool> {
    Ok(form_invariants(f)? == form_invariants(g)?)
}

pub fn isotropic_q(f: &DiagonalForm) -> Result<bool> {
    form_invariants(f)?.is_isotropic()
}

/// Witt index over `ℚ` and the invariants of the anisotropic kernel.
pub fn witt_index_q(f: &DiagonalForm) -> Result<(usize, FormInvariants)> {
    let mut kernel = form_invariants(f)?;
    let mut index = 0;
    while kernel.is_isotropic()? {
        kernel = kernel.split_hyperbolic_plane()?;
        index += 1;
    }
    Ok((index, kernel))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Splitting {
    Split,
    Inert,
    Ramified,
}

fn splitting(p: u64, d: &BigInt) -> Splitting {
    if p == 2 {
        match d.mod_floor(&BigInt::from(8)).to_string().as_str() {
            "1" => Splitting::Split,
            "5" => Splitting::Inert,
            _ => Splitting::Ramified,
        }
    } else if (d % p).is_zero() {
        Splitting::Ramified
    } else if legendre(d, p) == 1 {
        Splitting::Split
    } else {
        Splitting::Inert
    }
}

fn validate_radicand(d: &BigInt) -> Result<FieldDescriptor> {
    let k = FieldDescriptor::quadratic(d.clone())?;
    if k.radicand() != Some(d) {
        return Err(Error::InvalidField(format!("{d} is not squarefree")));
    }
    Ok(k)
}

/// Isotropy of a rational-coefficient form over `ℚ(√d)`, `d` squarefree.
pub fn isotropic_quad(f: &DiagonalForm, d: &BigInt) -> Result<IsotropyOutcome> {
    let k = validate_radicand(d)?;
    use IsotropyOutcome::*;
    let relevant = match relevant_primes(f) {
        Ok(ps) => ps,
        Err(Error::FactorizationLimit(n)) => {
            return Ok(Unsupported(format!(
                "cannot enumerate the places of {n}: exceeds the factorization limit"
            )))
        }
        Err(e) => return Err(e),
    };
    if f.dim() >= 3 && !f.is_definite() && isotropic_q(f)? {
        return Ok(Isotropic);
    }
    match f.dim() {
        1 => return Ok(Anisotropic),
        2 => {
            let t = -(&f.coeffs()[0] * &f.coeffs()[1]);
            return Ok(if is_square(&t, &k) { Isotropic } else { Anisotropic });
        }
        _ => {}
    }
    if d.is_positive() && f.is_definite() {
        return Ok(Anisotropic);
    }
    if f.dim() >= 5 {
        return Ok(Isotropic);
    }
    for p in relevant {
        let isotropic_here = match splitting(p, d) {
            Splitting::Split => local_isotropic_unchecked(f, Place::Finite(p)),
            Splitting::Inert if p != 2 => local_isotropic_unramified_ext(f, p)?,
            _ => local_isotropic_quadratic_ext(f, p, d)?,
        };
        if !isotropic_here {
            return Ok(Anisotropic);
        }
    }
    Ok(Isotropic)
}

/// 2 and every prime dividing a numerator or denominator.
fn relevant_primes(f: &DiagonalForm) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::from([2u64]);
    for c in f.coeffs() {
        out.extend(prime_divisors(c.numer())?);
        out.extend(prime_divisors(c.denom())?);
    }
    Ok(out)
}

/// Isotropy over `ℚ` or a quadratic field.
pub fn isotropic_over(f: &DiagonalForm, k: &FieldDescriptor) -> Result<IsotropyOutcome> {
    match k.radicand() {
        Some(d) => isotropic_quad(f, d),
        None => match isotropic_q(f) {
            Ok(true) => Ok(IsotropyOutcome::Isotropic),
            Ok(false) => Ok(IsotropyOutcome::Anisotropic),
            Err(Error::FactorizationLimit(n)) => Ok(IsotropyOutcome::Unsupported(format!(
                "cannot enumerate the places of {n}: exceeds the factorization limit"
            ))),
            Err(e) => Err(e),
        },
    }
}

/// Whether `alpha` is a sum of `n` squares in `k`, decided as isotropy of
/// `n⟨1⟩ ⊥ ⟨−alpha⟩` (a zero with last coordinate 0 makes `n⟨1⟩` isotropic,
/// hence universal).
pub fn sum_of_squares(alpha: &Rational, n: usize, k: &FieldDescriptor) -> Result<Decision> {
    if n == 0 {
        return Err(Error::NotPositive("0".into()));
    }
    let f = DiagonalForm::ones(n).orthogonal_sum(&DiagonalForm::new(vec![-alpha.clone()])?);
    Ok(match isotropic_over(&f, k)? {
        IsotropyOutcome::Isotropic => Decision::Yes,
        IsotropyOutcome::Anisotropic => Decision::No,
        IsotropyOutcome::Unsupported(r) => Decision::Unsupported(r),
    })
}

/// Legendre's criterion: `n` is a sum of three squares iff `n ∉ 4^a(8b+7)`.
pub fn three_squares_nat(n: &BigInt) -> Result<bool> {
    if !n.is_positive() {
        return Err(Error::NotPositive(n.to_string()));
    }
    let four = BigInt::from(4);
    let mut m = n.clone();
    while m.is_multiple_of(&four) {
        m /= &four;
    }
    Ok(m.mod_floor(&BigInt::from(8)) != BigInt::from(7))
}

pub fn level(k: &FieldDescriptor) -> Level {
    match k.radicand() {
        None => Level::Infinite,
        Some(d) if d.is_positive() => Level::Infinite,
        Some(d) if *d == BigInt::from(-1) => Level::One,
        Some(d) if d.mod_floor(&BigInt::from(8)) == BigInt::one() => Level::Four,
        Some(_) => Level::Two,
    }
}
