//! Brute-force oracles. None of these call into the invariant-based decision
//! procedures they are used to check; they search for solutions directly.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{prime_divisors, ratio};
use crate::localfields::{hilbert_symbol, DiagonalForm, Place};
use crate::quadforms::{isotropic_q, three_squares_nat};

pub const THREE_SQUARES_MAX: u64 = 10_000;
pub const ISOTROPY_HEIGHT_MAX: i64 = 60;
pub const HILBERT_SAMPLES_MAX: usize = 10_000;

/// Coefficients of the isotropy grid.
pub const GRID_COEFFS: [i64; 10] = [1, -1, 2, -2, 3, -3, 5, -5, 7, -7];
/// Places at which the grid forms can be obstructed.
pub const GRID_PLACES: [Place; 5] = [
    Place::Real,
    Place::Finite(2),
    Place::Finite(3),
    Place::Finite(5),
    Place::Finite(7),
];

fn valuation_i64(mut a: i64, p: i64) -> u32 {
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    v
}

/// Divides out `p²` while possible so every valuation is 0 or 1.
fn reduce_squares(coeffs: &[i64], p: i64) -> Vec<i64> {
    coeffs
        .iter()
        .map(|&a| {
            let mut a = a;
            while a % (p * p) == 0 {
                a /= p * p;
            }
            a
        })
        .collect()
}

/// Modulus exponent beyond which a primitive solution lifts by Hensel.
fn hensel_exponent(coeffs: &[i64], p: i64) -> u32 {
    let maxval = coeffs.iter().map(|&a| valuation_i64(a, p)).max().unwrap_or(0);
    let v2 = if p == 2 { 1 } else { 0 };
    2 * (maxval + v2) + 1
}

/// Is there a choice of one `(value, is_unit)` term per variable whose values
/// sum to zero modulo `modulus` with at least one unit term?
fn primitive_zero_exists(terms: &[Vec<(usize, bool)>], modulus: usize) -> bool {
    // reach[flag * modulus + s]
    let mut reach = vec![false; 2 * modulus];
    reach[0] = true;
    for options in terms {
        let mut next = vec![false; 2 * modulus];
        for flag in 0..2 {
            for s in 0..modulus {
                if !reach[flag * modulus + s] {
                    continue;
                }
                for &(t, unit) in options {
                    let nf = (flag == 1 || unit) as usize;
                    next[nf * modulus + (s + t) % modulus] = true;
                }
            }
        }
        reach = next;
    }
    reach[modulus]
}

fn dedup(mut v: Vec<(usize, bool)>) -> Vec<(usize, bool)> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Isotropy of `⟨coeffs⟩` over `ℚ_v` by exhaustive search for a primitive
/// zero modulo `p^k` (`k` past the Hensel bound), or by sign pattern at `∞`.
pub fn local_isotropic_bruteforce(coeffs: &[i64], v: Place) -> bool {
    let p = match v {
        Place::Real => {
            return coeffs.iter().any(|&a| a > 0) && coeffs.iter().any(|&a| a < 0);
        }
        Place::Finite(p) => p as i64,
    };
    let coeffs = reduce_squares(coeffs, p);
    let modulus = (p as usize).pow(hensel_exponent(&coeffs, p));
    let m = modulus as i128;
    let terms: Vec<_> = coeffs
        .iter()
        .map(|&a| {
            dedup(
                (0..modulus)
                    .map(|x| {
                        let x = x as i128;
                        let t = (a as i128 * x * x).rem_euclid(m) as usize;
                        (t, x % p as i128 != 0)
                    })
                    .collect(),
            )
        })
        .collect();
    primitive_zero_exists(&terms, modulus)
}

/// Isotropy of `⟨coeffs⟩` over the unramified quadratic extension of `ℚ_p`
/// (`p` odd), by exhaustive search for a primitive zero in `O_L / p^k` where
/// `O_L = ℤ_p[√u]` for the least quadratic non-residue `u`.
pub fn unramified_isotropic_bruteforce(coeffs: &[i64], p: u64) -> bool {
    assert!(p % 2 == 1, "odd primes only");
    let p = p as i64;
    let u = (2..p)
        .find(|&u| (1..p).all(|x| (x * x - u).rem_euclid(p) != 0))
        .expect("a non-residue exists for odd p");
    let coeffs = reduce_squares(coeffs, p);
    let q = p.pow(hensel_exponent(&coeffs, p)) as i128;
    let qs = q as usize;
    let modulus = qs * qs;
    let terms: Vec<_> = coeffs
        .iter()
        .map(|&a| {
            let mut out = Vec::with_capacity(modulus);
            for x in 0..q {
                for y in 0..q {
                    // a·(x + y√u)² = a(x² + u y²) + 2a·xy·√u
                    let re = (a as i128 * (x * x + u as i128 * y * y)).rem_euclid(q) as usize;
                    let im = (2 * a as i128 * x * y).rem_euclid(q) as usize;
                    let unit = x % p as i128 != 0 || y % p as i128 != 0;
                    out.push((re * qs + im, unit));
                }
            }
            dedup(out)
        })
        .collect();
    // sums live in (ℤ/q)², encoded as re·q + im; addition is componentwise
    let mut reach = vec![false; 2 * modulus];
    reach[0] = true;
    for options in &terms {
        let mut next = vec![false; 2 * modulus];
        for flag in 0..2 {
            for s in 0..modulus {
                if !reach[flag * modulus + s] {
                    continue;
                }
                let (sr, si) = (s / qs, s % qs);
                for &(t, unit) in options {
                    let (tr, ti) = (t / qs, t % qs);
                    let idx = ((sr + tr) % qs) * qs + (si + ti) % qs;
                    next[(flag == 1 || unit) as usize * modulus + idx] = true;
                }
            }
        }
        reach = next;
    }
    reach[modulus]
}

/// A nonzero integer vector `x` with `Σ aᵢxᵢ² = 0` and `|xᵢ| ≤ height`.
/// Meet-in-the-middle over nonnegative entries (signs do not matter).
pub fn global_zero_search(coeffs: &[i64], height: i64) -> Option<Vec<i64>> {
    let n = coeffs.len();
    let split = n / 2;
    let (left, right) = coeffs.split_at(split);

    fn vectors(len: usize, height: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=height).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }
    let value = |c: &[i64], x: &[i64]| -> i128 {
        c.iter().zip(x).map(|(&a, &x)| a as i128 * (x as i128) * (x as i128)).sum()
    };

    // sum -> some nonzero right vector attaining it (or the zero vector)
    let mut table: HashMap<i128, Vec<i64>> = HashMap::new();
    for r in vectors(right.len(), height) {
        let s = value(right, &r);
        let nonzero = r.iter().any(|&x| x != 0);
        let entry = table.entry(s).or_insert_with(|| r.clone());
        if nonzero && entry.iter().all(|&x| x == 0) {
            *entry = r;
        }
    }
    for l in vectors(left.len(), height) {
        let target = -value(left, &l);
        if let Some(r) = table.get(&target) {
            if l.iter().chain(r.iter()).any(|&x| x != 0) {
                let mut x = l.clone();
                x.extend_from_slice(r);
                return Some(x);
            }
        }
    }
    None
}

/// `table[n]` says whether `n` is a sum of three integer squares, `n ≤ limit`.
pub fn three_squares_table(limit: u64) -> Vec<bool> {
    let mut table = vec![false; limit as usize + 1];
    let mut x = 0u64;
    while x * x <= limit {
        let mut y = x;
        while x * x + y * y <= limit {
            let mut z = y;
            while x * x + y * y + z * z <= limit {
                table[(x * x + y * y + z * z) as usize] = true;
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    table
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleSummary {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the three-square decision with exhaustive search on `1..=limit`.
pub fn check_three_squares(limit: u64) -> Result<OracleSummary> {
    if limit == 0 || limit > THREE_SQUARES_MAX {
        return Err(Error::OutOfRange(format!(
            "three-squares bound must be in 1..={THREE_SQUARES_MAX}"
        )));
    }
    let table = three_squares_table(limit);
    let mut mismatches = Vec::new();
    for n in 1..=limit {
        if three_squares_nat(&BigInt::from(n))? != table[n as usize] {
            mismatches.push(format!("n = {n}"));
        }
    }
    Ok(OracleSummary {
        checked: limit as usize,
        mismatches,
    })
}

/// Hilbert reciprocity on `samples` pseudorandom pairs of rationals with
/// numerators and denominators bounded by `10⁴` in absolute value.
pub fn check_hilbert_reciprocity(samples: usize, seed: u64) -> Result<OracleSummary> {
    if samples == 0 || samples > HILBERT_SAMPLES_MAX {
        return Err(Error::OutOfRange(format!(
            "hilbert sample count must be in 1..={HILBERT_SAMPLES_MAX}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let n: i64 = rng.gen_range(-10_000..=10_000);
        if n != 0 {
            return (n, rng.gen_range(1..=10_000i64));
        }
    };
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let (an, ad) = draw(&mut rng);
        let (bn, bd) = draw(&mut rng);
        let (a, b) = (ratio(an, ad), ratio(bn, bd));
        let mut places = vec![Place::Real, Place::Finite(2)];
        for n in [an, ad, bn, bd] {
            for p in prime_divisors(&BigInt::from(n))? {
                places.push(Place::Finite(p));
            }
        }
        places.sort();
        places.dedup();
        let mut product = 1;
        for v in places {
            product *= hilbert_symbol(&a, &b, v)?;
        }
        if product != 1 {
            mismatches.push(format!("({a}, {b})"));
        }
    }
    Ok(OracleSummary {
        checked: samples,
        mismatches,
    })
}

/// Every multiset of at most four coefficients from [`GRID_COEFFS`].
pub fn isotropy_grid() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn extend(start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == 4 {
            return;
        }
        for i in start..GRID_COEFFS.len() {
            cur.push(GRID_COEFFS[i]);
            extend(i, cur, out);
            cur.pop();
        }
    }
    extend(0, &mut Vec::new(), &mut out);
    out
}

/// Checks `isotropic_q` on the grid: isotropic forms must have a zero of
/// height at most `height`, anisotropic ones a brute-force local obstruction.
pub fn check_isotropy_grid(height: i64) -> Result<OracleSummary> {
    if !(1..=ISOTROPY_HEIGHT_MAX).contains(&height) {
        return Err(Error::OutOfRange(format!(
            "isotropy height must be in 1..={ISOTROPY_HEIGHT_MAX}"
        )));
    }
    let grid = isotropy_grid();
    let mut mismatches = Vec::new();
    for coeffs in &grid {
        let decided = isotropic_q(&DiagonalForm::from_ints(coeffs)?)?;
        let witness = global_zero_search(coeffs, height);
        let obstruction = GRID_PLACES
            .iter()
            .find(|&&v| !local_isotropic_bruteforce(coeffs, v));
        let agree = match (decided, &witness, obstruction) {
            (true, Some(_), None) | (false, None, Some(_)) => true,
            _ => false,
        };
        if !agree {
            mismatches.push(format!(
                "{coeffs:?}: decided {decided}, witness {witness:?}, obstruction {obstruction:?}"
            ));
        }
    }
    Ok(OracleSummary {
        checked: grid.len(),
        mismatches,
    })
}
