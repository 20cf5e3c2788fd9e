//! Finite groups, enumerated in full.
//!
//! A group is built from permutation generators, a metacyclic presentation
//! or a catalog name, then every element is enumerated. Analyses (derived
//! subgroup, abelian invariants, 2-Sylow, Q₁₆ recognition) run on element
//! indices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Permutation closure stops beyond this many elements.
pub const PERM_CAP: usize = 1_000_000;
/// Metacyclic presentations need `a·b` at most this.
pub const METACYCLIC_CAP: u64 = 100_000;
/// Groups up to this order get a dense multiplication table.
pub const DENSE_TABLE_MAX: usize = 4096;

/// A permutation of `{1, …, degree}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// From 0-based images; must be a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            match seen.get_mut(x as usize) {
                Some(s) if !*s => *s = true,
                _ => {
                    return Err(Error::Parse {
                        what: "permutation",
                        input: format!("{images:?}"),
                    })
                }
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based cycles.
    pub fn from_cycles(cycles: &[Vec<u32>], degree: usize) -> Result<Self> {
        let bad = || Error::Parse { what: "permutation", input: format!("{cycles:?}") };
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x as usize > degree || y as usize > degree {
                    return Err(bad());
                }
                if std::mem::replace(&mut moved[x as usize - 1], true) {
                    return Err(bad());
                }
                images[x as usize - 1] = y - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    /// `self ∘ other`: apply `other` first.
    /// Degrees may differ; the shorter one fixes the extra points.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.degree().max(other.degree());
        let (x, y) = (self.with_degree(n), other.with_degree(n));
        Permutation { images: y.images.iter().map(|&i| x.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn with_degree(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(images.len() as u32..degree.max(images.len()) as u32);
        Permutation { images }
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32 + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation such as `(1 2)(3 4 5)` or `()`; degree is the largest point.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "permutation", input: s.to_string() };
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let body = &rest[..close];
            let pts = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if pts.len() > 1 {
                cycles.push(pts);
            }
            rest = rest[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        Permutation::from_cycles(&cycles, degree).map_err(|_| bad())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    PermGens { generators: Vec<Permutation>, degree: usize },
    /// `⟨σ, τ | σ^a, τ^b = σ^c, τστ⁻¹ = σ^r⟩`.
    Metacyclic { a: u64, b: u64, c: u64, r: u64 },
    Catalog(String),
}

impl GroupSpec {
    pub fn perm(generators: Vec<Permutation>) -> Self {
        let degree = generators.iter().map(Permutation::degree).max().unwrap_or(0);
        let generators = generators.iter().map(|g| g.with_degree(degree)).collect();
        GroupSpec::PermGens { generators, degree }
    }

    pub fn catalog(name: &str) -> Result<Self> {
        catalog_model(name)?;
        Ok(GroupSpec::Catalog(name.to_string()))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::PermGens { generators, .. } => {
                let gens: Vec<String> = generators.iter().map(ToString::to_string).collect();
                write!(f, "perm:{}", gens.join(";"))
            }
            GroupSpec::Metacyclic { a, b, c, r } => write!(f, "metacyclic:a={a},b={b},c={c},r={r}"),
            GroupSpec::Catalog(name) => write!(f, "catalog:{name}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "group", input: s.to_string() };
        let (kind, body) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "catalog" => GroupSpec::catalog(body.trim()),
            "perm" => {
                let gens = body
                    .split(';')
                    .filter(|t| !t.trim().is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<Permutation>>>()?;
                if gens.is_empty() {
                    return Err(bad());
                }
                Ok(GroupSpec::perm(gens))
            }
            "metacyclic" => {
                let mut vals = BTreeMap::new();
                for kv in body.split(',') {
                    let (k, v) = kv.split_once('=').ok_or_else(bad)?;
                    let v: u64 = v.trim().parse().map_err(|_| bad())?;
                    if vals.insert(k.trim().to_string(), v).is_some() {
                        return Err(bad());
                    }
                }
                let get = |k: &str| vals.get(k).copied().ok_or_else(bad);
                if vals.len() != 4 {
                    return Err(bad());
                }
                Ok(GroupSpec::Metacyclic { a: get("a")?, b: get("b")?, c: get("c")?, r: get("r")? })
            }
            _ => Err(bad()),
        }
    }
}

/// Catalog names, in listing order.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = (1..=64).map(|n| format!("C{n}")).collect();
    names.extend(
        ["D16", "SD16", "Q16", "S4", "A4", "SL2_7", "SL2_9", "Ex3_3"].iter().map(|s| s.to_string()),
    );
    names
}

enum CatalogModel {
    Spec(GroupSpec),
    /// `SL₂(𝔽_q)` for `q ∈ {7, 9}`.
    Sl2(u32),
}

fn catalog_model(name: &str) -> Result<CatalogModel> {
    let meta = |a, b, c, r| Ok(CatalogModel::Spec(GroupSpec::Metacyclic { a, b, c, r }));
    let perm = |gens: &[&str]| -> Result<CatalogModel> {
        let gens = gens.iter().map(|g| g.parse()).collect::<Result<Vec<_>>>()?;
        Ok(CatalogModel::Spec(GroupSpec::perm(gens)))
    };
    if let Some(n) = name.strip_prefix('C').and_then(|n| n.parse::<u64>().ok()) {
        if (1..=64).contains(&n) && name == format!("C{n}") {
            return meta(n, 1, 0, 1 % n);
        }
    }
    match name {
        "D16" => meta(8, 2, 0, 7),
        "SD16" => meta(8, 2, 0, 3),
        "Q16" => meta(8, 2, 4, 7),
        "Ex3_3" => meta(64, 16, 32, 7),
        "S4" => perm(&["(1 2)", "(1 2 3 4)"]),
        "A4" => perm(&["(1 2 3)", "(1 2)(3 4)"]),
        "SL2_7" => Ok(CatalogModel::Sl2(7)),
        "SL2_9" => Ok(CatalogModel::Sl2(9)),
        _ => Err(Error::UnknownCatalog(name.to_string())),
    }
}

/// Arithmetic in 𝔽_7 or 𝔽_9 = 𝔽_3[i], `i² = −1`. 𝔽_9 elements `x + yi` are
/// coded `x + 3y`.
#[derive(Clone, Copy, Debug)]
struct SmallField {
    q: u32,
}

impl SmallField {
    fn split(self, u: u32) -> (u32, u32) {
        (u % 3, u / 3)
    }

    fn add(self, u: u32, v: u32) -> u32 {
        if self.q == 9 {
            let ((a, b), (c, d)) = (self.split(u), self.split(v));
            (a + c) % 3 + 3 * ((b + d) % 3)
        } else {
            (u + v) % self.q
        }
    }

    fn neg(self, u: u32) -> u32 {
        if self.q == 9 {
            let (a, b) = self.split(u);
            (3 - a) % 3 + 3 * ((3 - b) % 3)
        } else {
            (self.q - u) % self.q
        }
    }

    fn mul(self, u: u32, v: u32) -> u32 {
        if self.q == 9 {
            let ((a, b), (c, d)) = (self.split(u), self.split(v));
            (a * c + 2 * b * d) % 3 + 3 * ((a * d + b * c) % 3)
        } else {
            u * v % self.q
        }
    }

    /// 2×2 matrices as `[a, b, c, d]` for `[[a, b], [c, d]]`.
    fn mat_mul(self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let dot = |p: u32, q: u32, r: u32, s: u32| self.add(self.mul(p, q), self.mul(r, s));
        vec![
            dot(x[0], y[0], x[1], y[2]),
            dot(x[0], y[1], x[1], y[3]),
            dot(x[2], y[0], x[3], y[2]),
            dot(x[2], y[1], x[3], y[3]),
        ]
    }

    /// Inverse of a determinant-one matrix.
    fn sl2_inverse(self, x: &[u32]) -> Vec<u32> {
        vec![x[3], self.neg(x[1]), self.neg(x[2]), x[0]]
    }
}

#[derive(Clone, Debug)]
enum Model {
    Perm,
    Metacyclic { a: u64, b: u64, c: u64, rpow: Vec<u64> },
    Sl2(SmallField),
}

impl Model {
    fn compose(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        match self {
            Model::Perm => y.iter().map(|&i| x[i as usize]).collect(),
            Model::Metacyclic { a, b, c, rpow } => {
                let (i1, j1, i2, j2) = (x[0] as u64, x[1] as u64, y[0] as u64, y[1] as u64);
                let mut i = (i1 + i2 * rpow[j1 as usize]) % a;
                let mut j = j1 + j2;
                if j >= *b {
                    j -= b;
                    i = (i + c) % a;
                }
                vec![i as u32, j as u32]
            }
            Model::Sl2(k) => k.mat_mul(x, y),
        }
    }

    fn inverse(&self, x: &[u32]) -> Vec<u32> {
        match self {
            Model::Perm => {
                let mut out = vec![0; x.len()];
                for (i, &v) in x.iter().enumerate() {
                    out[v as usize] = i as u32;
                }
                out
            }
            Model::Metacyclic { a, b, c, rpow } => {
                let (i, j) = (x[0] as u64, x[1] as u64);
                if j == 0 {
                    vec![((a - i % a) % a) as u32, 0]
                } else {
                    let s = (a - (i + c) % a) % a;
                    vec![(s * rpow[(b - j) as usize] % a) as u32, (b - j) as u32]
                }
            }
            Model::Sl2(k) => k.sl2_inverse(x),
        }
    }
}

/// A fully enumerated finite group. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    model: Model,
    keys: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
    mult: Option<Vec<u32>>,
    inv: Vec<u32>,
    generators: Vec<u32>,
}

impl FiniteGroupTable {
    fn from_elements(
        model: Model,
        keys: Vec<Vec<u32>>,
        index: HashMap<Vec<u32>, u32>,
        gen_keys: &[Vec<u32>],
    ) -> Self {
        let mut g = FiniteGroupTable {
            model,
            keys,
            index,
            mult: None,
            inv: Vec::new(),
            generators: Vec::new(),
        };
        g.inv = (0..g.keys.len()).map(|x| g.lookup(&g.model.inverse(&g.keys[x]))).collect();
        let mut gens: Vec<u32> = gen_keys.iter().map(|k| g.lookup(k)).filter(|&x| x != 0).collect();
        let mut seen = std::collections::HashSet::new();
        gens.retain(|x| seen.insert(*x));
        g.generators = gens;
        let n = g.keys.len();
        if n <= DENSE_TABLE_MAX {
            let mut table = Vec::with_capacity(n * n);
            for x in 0..n {
                for y in 0..n {
                    table.push(g.lookup(&g.model.compose(&g.keys[x], &g.keys[y])));
                }
            }
            g.mult = Some(table);
        }
        g
    }

    fn lookup(&self, key: &[u32]) -> u32 {
        match &self.model {
            Model::Metacyclic { a, .. } => key[0] + (*a as u32) * key[1],
            _ => self.index[key],
        }
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order() as u32
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        match &self.mult {
            Some(t) => t[x as usize * self.order() + y as usize],
            None => self.lookup(&self.model.compose(&self.keys[x as usize], &self.keys[y as usize])),
        }
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn pow(&self, x: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (x, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, x: u32) -> u64 {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Model-level description of an element: permutation images, `[i, j]`
    /// for `σ^i τ^j`, or matrix entries.
    pub fn element_key(&self, x: u32) -> &[u32] {
        &self.keys[x as usize]
    }

    /// Left-regular representation generators, as permutations of the
    /// element indices.
    pub fn regular_generators(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| Permutation { images: self.elements().map(|x| self.mul(g, x)).collect() })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&x| self.generators.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }
}

fn enumerate_closure(model: Model, identity: Vec<u32>, gens: Vec<Vec<u32>>, cap: usize) -> Result<FiniteGroupTable> {
    let mut keys = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0u32)]);
    let mut pos = 0;
    while pos < keys.len() {
        for g in &gens {
            let k = model.compose(&keys[pos], g);
            if !index.contains_key(&k) {
                if keys.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(k.clone(), keys.len() as u32);
                keys.push(k);
            }
        }
        pos += 1;
    }
    Ok(FiniteGroupTable::from_elements(model, keys, index, &gens))
}

fn check_metacyclic(a: u64, b: u64, c: u64, r: u64) -> Result<()> {
    let bad = |why: &str| Err(Error::InvalidMetacyclic(format!("a={a},b={b},c={c},r={r}: {why}")));
    if a == 0 || b == 0 {
        return bad("a and b must be positive");
    }
    if a.checked_mul(b).map_or(true, |n| n > METACYCLIC_CAP) {
        return Err(Error::CapExceeded { cap: METACYCLIC_CAP as usize });
    }
    if c >= a || r >= a.max(2) {
        return bad("c and r must be residues mod a");
    }
    if a > 1 && r.gcd(&a) != 1 {
        return bad("gcd(r, a) must be 1");
    }
    let rb = (0..b).fold(1 % a, |acc, _| acc * r % a);
    if rb != 1 % a {
        return bad("r^b must be 1 mod a");
    }
    if (c * ((r + a - 1) % a)) % a != 0 {
        return bad("c(r - 1) must be 0 mod a");
    }
    Ok(())
}

fn build_metacyclic(a: u64, b: u64, c: u64, r: u64) -> Result<FiniteGroupTable> {
    check_metacyclic(a, b, c, r)?;
    let rpow: Vec<u64> = (0..b).scan(1 % a, |acc, _| {
        let v = *acc;
        *acc = *acc * r % a;
        Some(v)
    }).collect();
    let model = Model::Metacyclic { a, b, c, rpow };
    let keys: Vec<Vec<u32>> =
        (0..b).flat_map(|j| (0..a).map(move |i| vec![i as u32, j as u32])).collect();
    // with b = 1 the relation τ = σ^c makes τ redundant
    let tau = if b > 1 { vec![0, 1] } else { vec![c as u32, 0] };
    let sigma = vec![(1 % a) as u32, 0];
    Ok(FiniteGroupTable::from_elements(model, keys, HashMap::new(), &[sigma, tau]))
}

fn build_sl2(q: u32) -> Result<FiniteGroupTable> {
    let k = SmallField { q };
    let mut gens = vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]];
    if q == 9 {
        gens.extend([vec![1, 3, 0, 1], vec![1, 0, 3, 1]]);
    }
    enumerate_closure(Model::Sl2(k), vec![1, 0, 0, 1], gens, PERM_CAP)
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroupTable> {
    match spec {
        GroupSpec::PermGens { generators, degree } => {
            let gens = generators.iter().map(|g| g.with_degree(*degree).images).collect();
            enumerate_closure(Model::Perm, Permutation::identity(*degree).images, gens, PERM_CAP)
        }
        &GroupSpec::Metacyclic { a, b, c, r } => build_metacyclic(a, b, c, r),
        GroupSpec::Catalog(name) => match catalog_model(name)? {
            CatalogModel::Spec(s) => build_group(&s),
            CatalogModel::Sl2(q) => build_sl2(q),
        },
    }
}

/// A subgroup given by its sorted member indices.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroupTable,
    members: Vec<u32>,
    mask: Vec<bool>,
    generators: Vec<u32>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FiniteGroupTable {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, x: u32) -> bool {
        self.mask[x as usize]
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_cyclic(&self) -> bool {
        self.members.iter().any(|&x| self.parent.element_order(x) == self.order() as u64)
    }

    /// Closure, identity, inverses and Lagrange divisibility, checked
    /// exhaustively.
    pub fn verify(&self) -> bool {
        let g = self.parent;
        self.contains(0)
            && g.order() % self.order() == 0
            && self.members.iter().all(|&x| self.contains(g.inv(x)))
            && self.members.iter().all(|&x| self.members.iter().all(|&y| self.contains(g.mul(x, y))))
    }

    pub fn is_normal(&self) -> bool {
        let g = self.parent;
        g.generators().iter().all(|&s| self.generators.iter().all(|&h| self.contains(g.conjugate(s, h))))
    }

    /// A group table for this subgroup on its own, as permutations of its
    /// members.
    pub fn to_group(&self) -> FiniteGroupTable {
        let pos: HashMap<u32, u32> =
            self.members.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let mut perms: Vec<Permutation> = self
            .generators
            .iter()
            .map(|&h| Permutation {
                images: self.members.iter().map(|&x| pos[&self.parent.mul(h, x)]).collect(),
            })
            .collect();
        if perms.is_empty() {
            perms.push(Permutation::identity(1));
        }
        build_group(&GroupSpec::perm(perms)).expect("subgroup order is within the cap")
    }
}

/// `⟨gens⟩`.
pub fn subgroup_generated<'g>(g: &'g FiniteGroupTable, gens: &[u32]) -> Subgroup<'g> {
    let mut gens: Vec<u32> = gens.iter().copied().filter(|&x| x != 0).collect();
    let mut seen = std::collections::HashSet::new();
    gens.retain(|x| seen.insert(*x));
    let mut mask = vec![false; g.order()];
    mask[0] = true;
    let mut members = vec![0];
    let mut pos = 0;
    while pos < members.len() {
        for &s in &gens {
            let y = g.mul(members[pos], s);
            if !mask[y as usize] {
                mask[y as usize] = true;
                members.push(y);
            }
        }
        pos += 1;
    }
    members.sort_unstable();
    Subgroup { parent: g, members, mask, generators: gens }
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure<'g>(g: &'g FiniteGroupTable, gens: &[u32]) -> Subgroup<'g> {
    let mut gens = gens.to_vec();
    loop {
        let h = subgroup_generated(g, &gens);
        let extra = g
            .generators()
            .iter()
            .flat_map(|&s| h.generators.iter().map(move |&x| (s, x)))
            .map(|(s, x)| g.conjugate(s, x))
            .find(|&c| !h.contains(c));
        match extra {
            Some(c) => gens.push(c),
            None => return h,
        }
    }
}

/// `[G, G]`, the normal closure of the generator commutators `xyx⁻¹y⁻¹`.
pub fn derived_subgroup(g: &FiniteGroupTable) -> Subgroup<'_> {
    let gens = g.generators();
    let comms: Vec<u32> = gens
        .iter()
        .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))))
        .collect();
    normal_closure(g, &comms)
}

fn small_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of `G/[G,G]`, largest first; empty for a perfect group.
pub fn abelian_invariants(g: &FiniteGroupTable) -> Vec<u64> {
    let d = derived_subgroup(g);
    let mut label = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if label[x as usize] == u32::MAX {
            let id = reps.len() as u32;
            reps.push(x);
            for &y in d.members() {
                label[g.mul(x, y) as usize] = id;
            }
        }
    }
    let trivial = label[0];
    // exponents of cyclic p-factors, largest first, for each prime
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, e) in small_factor(reps.len() as u64) {
        let full = p.pow(e);
        let mut powers = reps.clone();
        let mut lambdas = Vec::new();
        let mut prev = 1u64;
        loop {
            for y in powers.iter_mut() {
                *y = g.pow(*y, p);
            }
            let c = powers.iter().filter(|&&y| label[y as usize] == trivial).count() as u64;
            lambdas.push((c / prev).ilog(p));
            prev = c;
            if c == full {
                break;
            }
        }
        // λ_k counts factors of order ≥ p^k
        let mut exps = Vec::new();
        for k in (0..lambdas.len()).rev() {
            let exact = lambdas[k] - lambdas.get(k + 1).copied().unwrap_or(0);
            exps.extend(std::iter::repeat(k as u32 + 1).take(exact as usize));
        }
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    (0..len)
        .map(|i| primary.iter().map(|(p, e)| e.get(i).map_or(1, |&k| p.pow(k))).product())
        .collect()
}

/// Largest `n` with `G ↠ C_{2^n}`.
pub fn max_cyclic_two_quotient(g: &FiniteGroupTable) -> u32 {
    abelian_invariants(g).first().map_or(0, |n| n.trailing_zeros())
}

fn two_part(n: usize) -> usize {
    1 << n.trailing_zeros()
}

/// A 2-Sylow subgroup grown through normalizers, always taking the
/// smallest admissible element index.
pub fn two_sylow(g: &FiniteGroupTable) -> Subgroup<'_> {
    let target = two_part(g.order());
    let start = g.elements().skip(1).find(|&x| g.element_order(x).is_power_of_two());
    let mut gens: Vec<u32> = start.into_iter().collect();
    let mut p = subgroup_generated(g, &gens);
    while p.order() < target {
        let y = g
            .elements()
            .find(|&y| {
                !p.contains(y)
                    && p.contains(g.mul(y, y))
                    && p.generators().iter().all(|&h| p.contains(g.conjugate(y, h)))
            })
            .expect("a p-subgroup below Sylow order grows inside its normalizer");
        gens.push(y);
        p = subgroup_generated(g, &gens);
    }
    p
}

/// Whether `h` is generalized quaternion of order 16: some `a` of order 8
/// and `b ∉ ⟨a⟩` with `b² = a⁴` and `bab⁻¹ = a⁻¹`.
pub fn is_generalized_quaternion16(h: &Subgroup<'_>) -> bool {
    if h.order() != 16 {
        return false;
    }
    let g = h.parent();
    h.members().iter().filter(|&&a| g.element_order(a) == 8).any(|&a| {
        let cyclic = subgroup_generated(g, &[a]);
        h.members().iter().any(|&b| {
            !cyclic.contains(b) && g.mul(b, b) == g.pow(a, 4) && g.conjugate(b, a) == g.inv(a)
        })
    })
}

/// The whole group as a subgroup of itself.
pub fn whole(g: &FiniteGroupTable) -> Subgroup<'_> {
    Subgroup {
        parent: g,
        members: g.elements().collect(),
        mask: vec![true; g.order()],
        generators: g.generators().to_vec(),
    }
}
