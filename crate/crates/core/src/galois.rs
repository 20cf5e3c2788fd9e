//! Cyclotomic 2-power extensions, Bailey's invariant group and 2-torsion
//! Brauer classes of `ℚ`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{prime_divisors, square_class, FieldDescriptor, Rational};
use crate::localfields::{hilbert_symbol, DiagonalForm, Place};

/// Largest cyclotomic level `n` accepted.
pub const MAX_LEVEL: u32 = 20;

/// `Gal(k(ζ_{2ⁿ})/k)` as a subgroup of `(ℤ/2ⁿ)ˣ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitSubgroup2n {
    pub n: u32,
    /// Sorted odd residues mod `2ⁿ`.
    pub members: Vec<u32>,
}

impl UnitSubgroup2n {
    pub fn modulus(&self) -> u64 {
        1 << self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Multiplicative order of a unit mod `2ⁿ`.
    pub fn element_order(&self, x: u32) -> u64 {
        let m = self.modulus();
        let (mut y, mut ord) = (x as u64 % m, 1);
        while y != 1 % m {
            y = y * y % m;
            ord *= 2;
        }
        ord
    }

    pub fn is_cyclic(&self) -> bool {
        let size = self.len() as u64;
        self.members.iter().any(|&x| self.element_order(x) == size)
    }
}

fn check_level(n: u32) -> Result<()> {
    if (1..=MAX_LEVEL).contains(&n) {
        Ok(())
    } else {
        Err(Error::LevelOutOfRange(n))
    }
}

/// The residue filter cutting out `Gal(k(ζ_{2ⁿ})/k)`: units fixing `√d`
/// when `√d ∈ ℚ(ζ_{2ⁿ})`, all units otherwise.
fn fixes_radicand(d: &BigInt, n: u32) -> fn(u32) -> bool {
    let small = i64::try_from(d).ok();
    match small {
        Some(-1) if n >= 2 => |x| x % 4 == 1,
        Some(2) if n >= 3 => |x| x % 8 == 1 || x % 8 == 7,
        Some(-2) if n >= 3 => |x| x % 8 == 1 || x % 8 == 3,
        _ => |_| true,
    }
}

pub fn cyclotomic_galois(k: &FieldDescriptor, n: u32) -> Result<UnitSubgroup2n> {
    check_level(n)?;
    let keep = match k.radicand() {
        Some(d) => fixes_radicand(d, n),
        None => |_| true,
    };
    let members = (1..1u32 << n).step_by(2).filter(|&x| keep(x)).collect();
    Ok(UnitSubgroup2n { n, members })
}

/// Whether `k(ζ_{2ⁿ})/k` is cyclic.
pub fn is_cyclic_ext(k: &FieldDescriptor, n: u32) -> Result<bool> {
    Ok(cyclotomic_galois(k, n)?.is_cyclic())
}

/// `(ℤ/2)^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaileyGroup {
    pub e: u32,
}

impl fmt::Display for BaileyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Z/2)^{}", self.e)
    }
}

/// `e` counts the `dᵢ` with `k(ζ_{2^{dᵢ}})/k` not cyclic.
pub fn bailey_group(k: &FieldDescriptor, dvec: &[u32]) -> Result<BaileyGroup> {
    if dvec.windows(2).any(|w| w[0] < w[1]) || dvec.contains(&0) {
        return Err(Error::NotDescending(dvec.to_vec()));
    }
    let mut e = 0;
    for &d in dvec {
        if !is_cyclic_ext(k, d)? {
            e += 1;
        }
    }
    Ok(BaileyGroup { e })
}

/// A class in `₂Br(ℚ)`, given by its ramified places.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BrauerClass2 {
    pub ramified: BTreeSet<Place>,
}

impl BrauerClass2 {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn is_split(&self) -> bool {
        self.ramified.is_empty()
    }

    /// Hilbert reciprocity: the number of ramified places is even.
    pub fn is_consistent(&self) -> bool {
        self.ramified.len() % 2 == 0
    }

    /// Group law: symmetric difference of ramification sets.
    pub fn add(&self, other: &Self) -> Self {
        BrauerClass2 { ramified: self.ramified.symmetric_difference(&other.ramified).copied().collect() }
    }
}

impl fmt::Display for BrauerClass2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places: Vec<String> = self.ramified.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", places.join(", "))
    }
}

fn places_of(values: &[&Rational]) -> Result<BTreeSet<Place>> {
    let mut out = BTreeSet::from([Place::Real, Place::Finite(2)]);
    for x in values {
        out.extend(prime_divisors(x.numer())?.into_iter().map(Place::Finite));
        out.extend(prime_divisors(x.denom())?.into_iter().map(Place::Finite));
    }
    Ok(out)
}

/// Class of the quaternion algebra `(a, b)_ℚ`.
pub fn quaternion_class(a: &Rational, b: &Rational) -> Result<BrauerClass2> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    let mut ramified = BTreeSet::new();
    for v in places_of(&[a, b])? {
        if hilbert_symbol(a, b, v)? == -1 {
            ramified.insert(v);
        }
    }
    let class = BrauerClass2 { ramified };
    assert!(class.is_consistent(), "reciprocity failed for ({a}, {b})");
    Ok(class)
}

/// First and second Stiefel–Whitney classes of a diagonal form:
/// `w₁` as a squarefree integer, `w₂ = Σ_{i<j} (aᵢ, aⱼ)`.
pub fn w1w2(f: &DiagonalForm) -> Result<(BigInt, BrauerClass2)> {
    let w1 = square_class(&f.determinant())?;
    let c = f.coeffs();
    let mut w2 = BrauerClass2::trivial();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            w2 = w2.add(&quaternion_class(&c[i], &c[j])?);
        }
    }
    Ok((w1, w2))
}

/// Side conditions on `c` for the trace form over `ℚ`: `(2) ∪ (c) = 0`, and
/// `c` positive (a norm-type square condition that only the real place can
/// obstruct here).
pub fn trace_form_conditions(c: &Rational) -> Result<(bool, bool)> {
    let two = Rational::from_integer(BigInt::from(2));
    let cond_i = quaternion_class(&two, c)?.is_split();
    Ok((cond_i, c.is_positive()))
}
