//! Restricted root systems of the classical families and their Weyl groups.
//!
//! Roots are stored as exact integer vectors in the `e_i` basis. Family `A`
//! at rank `r` uses `r + 1` coordinates (roots live in the sum-zero
//! sublattice); the other families use `r` coordinates. Weyl elements are
//! signed permutations of the basis, so every reflection and every group
//! element acts exactly.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default cap on brute-force Weyl group generation.
pub const DEFAULT_GROUP_CAP: usize = 50_000;

/// The classical irreducible families, including the non-reduced `BC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
        };
        write!(f, "{s}")
    }
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "BC" => Some(Family::BC),
            _ => None,
        }
    }

    /// Order of the Weyl group at the given rank.
    pub fn weyl_order(self, rank: u32) -> u128 {
        let fact = |k: u32| -> u128 { (1..=k as u128).product::<u128>().max(1) };
        match self {
            Family::A => fact(rank + 1),
            Family::B | Family::C | Family::BC => (1u128 << rank) * fact(rank),
            Family::D => {
                if rank == 0 {
                    1
                } else {
                    (1u128 << (rank - 1)) * fact(rank)
                }
            }
        }
    }

    /// Number of roots at the given rank.
    pub fn root_count(self, rank: u32) -> usize {
        let r = rank as usize;
        match self {
            Family::A => (r + 1) * r,
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r.saturating_sub(1)),
            Family::BC => 2 * r * (r + 1),
        }
    }
}

/// A root as an integer vector in the `e_i` basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i32>);

impl RootVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|&c| -c).collect())
    }

    pub fn dot(&self, other: &RootVector) -> i64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    /// `e_i - e_j`, 1-based.
    pub fn diff(dim: usize, i: usize, j: usize) -> RootVector {
        let mut v = vec![0; dim];
        v[i - 1] = 1;
        v[j - 1] = -1;
        RootVector(v)
    }

    /// `e_i + e_j`, 1-based.
    pub fn sum(dim: usize, i: usize, j: usize) -> RootVector {
        let mut v = vec![0; dim];
        v[i - 1] = 1;
        v[j - 1] += 1;
        RootVector(v)
    }

    /// `c * e_i`, 1-based.
    pub fn unit(dim: usize, i: usize, c: i32) -> RootVector {
        let mut v = vec![0; dim];
        v[i - 1] = c;
        RootVector(v)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Render short names like "e1-e2", "2e3", falling back to the raw vector.
        let nz: Vec<(usize, i32)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
            .collect();
        let coef = |c: i32, lead: bool| -> String {
            match (c, lead) {
                (1, true) => String::new(),
                (1, false) => "+".into(),
                (-1, _) => "-".into(),
                (c, true) => format!("{c}"),
                (c, false) => {
                    if c > 0 {
                        format!("+{c}")
                    } else {
                        format!("{c}")
                    }
                }
            }
        };
        if nz.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (pos, (i, c)) in nz.iter().enumerate() {
            out.push_str(&coef(*c, pos == 0));
            out.push_str(&format!("e{i}"));
        }
        write!(f, "{out}")
    }
}

/// A full root system: family, rank, and the explicit root set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub family: Family,
    pub rank: u32,
    pub ambient_dim: usize,
    roots: Vec<RootVector>,
}

impl RootSystem {
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        self.roots.binary_search(v).is_ok()
    }

    /// Positive roots with respect to the standard simple system: the first
    /// nonzero coordinate is positive for B/C/D/BC; for family A the sign of
    /// the first nonzero coordinate decides as well.
    pub fn positive_roots(&self) -> Vec<RootVector> {
        self.roots
            .iter()
            .filter(|r| r.0.iter().find(|&&c| c != 0).copied().unwrap_or(0) > 0)
            .cloned()
            .collect()
    }
}

/// Build the root system of `family` at `rank` with the standard coordinates.
pub fn build_root_system(family: Family, rank: u32) -> Result<RootSystem> {
    if rank == 0 || (family == Family::D && rank < 2) {
        return Err(Error::UnsupportedRank { family, rank });
    }
    let r = rank as usize;
    let dim = match family {
        Family::A => r + 1,
        _ => r,
    };
    let mut roots = Vec::new();
    match family {
        Family::A => {
            for i in 1..=dim {
                for j in 1..=dim {
                    if i != j {
                        roots.push(RootVector::diff(dim, i, j));
                    }
                }
            }
        }
        Family::B | Family::C | Family::D | Family::BC => {
            for i in 1..=r {
                for j in (i + 1)..=r {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![0; r];
                        v[i - 1] = si;
                        v[j - 1] = sj;
                        roots.push(RootVector(v));
                    }
                }
            }
            for i in 1..=r {
                match family {
                    Family::B => {
                        roots.push(RootVector::unit(r, i, 1));
                        roots.push(RootVector::unit(r, i, -1));
                    }
                    Family::C => {
                        roots.push(RootVector::unit(r, i, 2));
                        roots.push(RootVector::unit(r, i, -2));
                    }
                    Family::BC => {
                        roots.push(RootVector::unit(r, i, 1));
                        roots.push(RootVector::unit(r, i, -1));
                        roots.push(RootVector::unit(r, i, 2));
                        roots.push(RootVector::unit(r, i, -2));
                    }
                    _ => {}
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(RootSystem {
        family,
        rank,
        ambient_dim: dim,
        roots,
    })
}

/// An ordered simple system together with its parent root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleSystem {
    pub roots: Vec<RootVector>,
    pub parent: RootSystem,
}

/// The standard simple system of each family:
/// differences `e_i - e_{i+1}` plus `e_r` (B, BC), `2e_r` (C), or
/// `e_{r-1} + e_r` (D); family A takes the differences only.
pub fn standard_simple_system(rs: &RootSystem) -> SimpleSystem {
    let r = rs.rank as usize;
    let dim = rs.ambient_dim;
    let mut roots: Vec<RootVector> = Vec::new();
    match rs.family {
        Family::A => {
            for i in 1..=r {
                roots.push(RootVector::diff(dim, i, i + 1));
            }
        }
        Family::B | Family::BC => {
            for i in 1..r {
                roots.push(RootVector::diff(dim, i, i + 1));
            }
            roots.push(RootVector::unit(dim, r, 1));
        }
        Family::C => {
            for i in 1..r {
                roots.push(RootVector::diff(dim, i, i + 1));
            }
            roots.push(RootVector::unit(dim, r, 2));
        }
        Family::D => {
            for i in 1..r {
                roots.push(RootVector::diff(dim, i, i + 1));
            }
            roots.push(RootVector::sum(dim, r - 1, r));
        }
    }
    SimpleSystem {
        roots,
        parent: rs.clone(),
    }
}

/// A Weyl group element as a signed permutation: `e_i ↦ signs[i] · e_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    perm: Vec<u8>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(dim: usize) -> WeylElement {
        WeylElement {
            perm: (0..dim as u8).collect(),
            signs: vec![1; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
            && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_pure_permutation(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    pub fn sign_flip_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    /// Image of coordinate `i` (0-based): returns (target, sign).
    pub fn image(&self, i: usize) -> (usize, i8) {
        (self.perm[i] as usize, self.signs[i])
    }

    /// Apply to a vector in the `e_i` basis.
    pub fn apply(&self, v: &RootVector) -> RootVector {
        let mut out = vec![0; v.0.len()];
        for (i, &c) in v.0.iter().enumerate() {
            if c != 0 {
                out[self.perm[i] as usize] += self.signs[i] as i32 * c;
            }
        }
        RootVector(out)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let dim = self.dim();
        debug_assert_eq!(dim, other.dim());
        let mut perm = vec![0u8; dim];
        let mut signs = vec![1i8; dim];
        for i in 0..dim {
            let j = other.perm[i] as usize;
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let dim = self.dim();
        let mut perm = vec![0u8; dim];
        let mut signs = vec![1i8; dim];
        for i in 0..dim {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// Sign flip of a single coordinate (0-based).
    pub fn sign_flip(dim: usize, i: usize) -> WeylElement {
        let mut w = WeylElement::identity(dim);
        w.signs[i] = -1;
        w
    }

    /// Dual action on functionals; for orthogonal signed permutations this is
    /// the same as the plain action on vectors.
    pub fn act_on_functional(&self, lambda: &RootVector) -> RootVector {
        self.apply(lambda)
    }

    /// A short word description used in rendered tables, e.g. "s2 s1 s3 s2".
    pub fn describe(&self) -> String {
        if self.is_identity() {
            "id".to_string()
        } else {
            let mut parts = Vec::new();
            for i in 0..self.dim() {
                let (j, s) = self.image(i);
                if j != i || s != 1 {
                    parts.push(format!(
                        "e{}→{}e{}",
                        i + 1,
                        if s == 1 { "" } else { "-" },
                        j + 1
                    ));
                }
            }
            parts.join(", ")
        }
    }
}

/// The reflection along a root of any supported family pattern.
///
/// Supported patterns: `±e_i ± e_j` (transpositions, possibly with sign
/// flips) and `±e_i`, `±2e_i` (single sign flips; the short and long root on
/// the same axis give the same orthogonal map).
pub fn reflection(root: &RootVector) -> Result<WeylElement> {
    let dim = root.dim();
    let nz: Vec<(usize, i32)> = root
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    match nz.as_slice() {
        [(i, c)] if c.abs() == 1 || c.abs() == 2 => Ok(WeylElement::sign_flip(dim, *i)),
        [(i, a), (j, b)] if a.abs() == 1 && b.abs() == 1 => {
            let mut w = WeylElement::identity(dim);
            w.perm[*i] = *j as u8;
            w.perm[*j] = *i as u8;
            if a * b > 0 {
                w.signs[*i] = -1;
                w.signs[*j] = -1;
            }
            Ok(w)
        }
        _ => Err(Error::NotARoot(root.to_string())),
    }
}

/// Pack a signed permutation into a hashable word (dimension ≤ 12).
fn packed_key(w: &WeylElement) -> u64 {
    let mut key: u64 = 0;
    for i in 0..w.dim() {
        let (j, s) = w.image(i);
        key = key << 5 | (j as u64) << 1 | u64::from(s == -1);
    }
    key
}

/// Breadth-first closure of a generating set of Weyl elements.
///
/// Deterministic: elements are reported in discovery order starting from the
/// identity, with generators applied in the order given.
pub fn generate_group(generators: &[WeylElement], cap: usize) -> Result<Vec<WeylElement>> {
    let dim = match generators.first() {
        Some(g) => g.dim(),
        None => return Ok(vec![WeylElement::identity(1)]),
    };
    assert!(dim <= 12, "group generation supports dimension ≤ 12");
    let mut seen: HashSet<u64> = HashSet::new();
    let mut order: Vec<WeylElement> = Vec::new();
    let mut queue: VecDeque<WeylElement> = VecDeque::new();
    let id = WeylElement::identity(dim);
    seen.insert(packed_key(&id));
    order.push(id.clone());
    queue.push_back(id);
    while let Some(w) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&w);
            if seen.insert(packed_key(&next)) {
                if order.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

/// Generate the full Weyl group from a simple system, guarded by `cap`.
pub fn generate_weyl(simple: &SimpleSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let predicted = simple.parent.family.weyl_order(simple.parent.rank);
    if predicted > cap as u128 {
        return Err(Error::GroupTooLarge { cap });
    }
    let gens: Vec<WeylElement> = simple.roots.iter().map(reflection).collect::<Result<_>>()?;
    generate_group(&gens, cap)
}
