//! Explicit complete systems of representatives for `W(Δ)/W(Δᵃ)` for the
//! subsystem embeddings that occur in the classical symmetric-pair catalog,
//! plus a brute-force oracle that certifies a putative system.
//!
//! The structured constructions are:
//! * `Δ = Δᵃ`: the singleton `{id}`.
//! * `A_{n-1} ⊂ C_n` (or `B_n`/`BC_n`): all `2^n` sign changes.
//! * `A_{n-1} ⊂ D_n`: all `2^{n-1}` even sign changes (the alternative
//!   embedding through `e_i + e_n` uses the same set).
//! * `D_n ⊂ C_n`/`B_n`/`BC_n`: `{id, s_{2e_n}}`.
//! * `A_{p-1} × A_{n-p-1} ⊂ A_{n-1}`: the binomial recursion
//!   `reps(n,p) = reps(n-1,p) ∪ reps(n-1,p-1)·s_{e_{n-1}-e_n}⋯s_{e_p-e_{p+1}}`.
//! * products `X_p × Y_{n-p}` with sign-complete factors (B/C/BC): the same
//!   permutation representatives as the `A`-quotient; one extra factor
//!   `s_{e_p-e_{p+1}} s_{e_p+e_{p+1}}` doubles the system when a `D` factor
//!   is present.

use std::collections::HashSet;
use std::fmt;

use crate::rootsys::{
    build_root_system, generate_group, reflection, standard_simple_system, Family, RootSystem,
    RootVector, WeylElement,
};
use crate::{Error, Result};

/// Which subsystem sits inside the ambient system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubDescriptor {
    /// `Δᵃ = Δ`.
    Full,
    /// The permutation subsystem `A_{n-1} = {e_i - e_j}`.
    TypeA,
    /// The variant `{e_i - e_j : i,j ≤ n-1} ∪ {±(e_i + e_n)}` inside `D_n`.
    TypeAAlt,
    /// `D_n` inside `B_n`, `C_n` or `BC_n`.
    SingleD,
    /// `B_n` inside `BC_n`.
    SingleB,
    /// `C_n` inside `BC_n`.
    SingleC,
    /// `A_{p-1} × A_{n-p-1}` inside `A_{n-1}` (`p` counts coordinates in the
    /// first block).
    AProduct { p: u32 },
    /// `left_{split} × right_{rank-split}` on the first/last coordinates.
    Product {
        split: u32,
        left: Family,
        right: Family,
    },
}

impl fmt::Display for SubDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubDescriptor::Full => write!(f, "full"),
            SubDescriptor::TypeA => write!(f, "A"),
            SubDescriptor::TypeAAlt => write!(f, "A~"),
            SubDescriptor::SingleD => write!(f, "D"),
            SubDescriptor::SingleB => write!(f, "B"),
            SubDescriptor::SingleC => write!(f, "C"),
            SubDescriptor::AProduct { p } => write!(f, "AxA(p={p})"),
            SubDescriptor::Product { split, left, right } => {
                write!(f, "{left}{split}x{right}*")
            }
        }
    }
}

/// A subsystem embedded in an ambient root system by explicit coordinates.
#[derive(Debug, Clone)]
pub struct EmbeddedSubsystem {
    pub ambient: RootSystem,
    pub descriptor: SubDescriptor,
    pub sub_roots: Vec<RootVector>,
    pub label: String,
}

/// A complete system of coset representatives for `W(Δ)/W(Δᵃ)`.
#[derive(Debug, Clone)]
pub struct CosetSystem {
    pub reps: Vec<WeylElement>,
    pub sub: EmbeddedSubsystem,
}

fn binom(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n as u128 - i) / (i + 1);
    }
    out
}

/// Roots of a single block factor on coordinates `lo..hi` (0-based, half-open).
fn block_roots(dim: usize, lo: usize, hi: usize, family: Family) -> Vec<RootVector> {
    let mut out = Vec::new();
    for i in lo..hi {
        for j in (i + 1)..hi {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; dim];
                v[i] = si;
                v[j] = sj;
                out.push(RootVector(v));
            }
        }
        match family {
            Family::B => {
                out.push(RootVector::unit(dim, i + 1, 1));
                out.push(RootVector::unit(dim, i + 1, -1));
            }
            Family::C => {
                out.push(RootVector::unit(dim, i + 1, 2));
                out.push(RootVector::unit(dim, i + 1, -2));
            }
            Family::BC => {
                out.push(RootVector::unit(dim, i + 1, 1));
                out.push(RootVector::unit(dim, i + 1, -1));
                out.push(RootVector::unit(dim, i + 1, 2));
                out.push(RootVector::unit(dim, i + 1, -2));
            }
            Family::D | Family::A => {}
        }
    }
    if family == Family::A {
        // difference roots only
        out.retain(|r| {
            r.0.iter().sum::<i32>() == 0 && r.0.iter().map(|c| c.abs()).sum::<i32>() == 2
        });
    }
    out
}

fn factor_allowed(ambient: Family, factor: Family) -> bool {
    matches!(
        (ambient, factor),
        (Family::B, Family::B)
            | (Family::B, Family::D)
            | (Family::C, Family::C)
            | (Family::C, Family::D)
            | (Family::D, Family::D)
            | (Family::BC, Family::B)
            | (Family::BC, Family::C)
            | (Family::BC, Family::D)
            | (Family::BC, Family::BC)
    )
}

/// Build the embedded subsystem for a descriptor, normalizing degenerate
/// splits (empty blocks, full-span single factors).
pub fn embed_subsystem(
    ambient: &RootSystem,
    descriptor: SubDescriptor,
) -> Result<EmbeddedSubsystem> {
    let rank = ambient.rank;
    let dim = ambient.ambient_dim;
    let fail = |msg: String| Err(Error::UnsupportedEmbedding(msg));

    // Normalize products with an empty block down to a single factor.
    let descriptor = match descriptor {
        SubDescriptor::Product { split, left, right } => {
            if split > rank {
                return fail(format!("split {split} exceeds rank {rank}"));
            }
            if split == 0 || split == rank {
                let factor = if split == 0 { right } else { left };
                if factor == ambient.family
                    || (ambient.family != Family::D && factor != Family::D && rank == 0)
                {
                    SubDescriptor::Full
                } else {
                    match (ambient.family, factor) {
                        (a, f) if a == f => SubDescriptor::Full,
                        // W(B) = W(C) = W(BC): a full-span sign-complete factor
                        // gives the whole Weyl group.
                        (Family::BC, Family::B) => SubDescriptor::SingleB,
                        (Family::BC, Family::C) => SubDescriptor::SingleC,
                        (Family::B | Family::C | Family::BC, Family::D) => SubDescriptor::SingleD,
                        (a, f) => return fail(format!("{f} is not a subsystem of {a}")),
                    }
                }
            } else {
                SubDescriptor::Product { split, left, right }
            }
        }
        SubDescriptor::AProduct { p } if p == 0 || p as usize + 1 == dim => SubDescriptor::Full,
        d => d,
    };

    let (sub_roots, label) = match &descriptor {
        SubDescriptor::Full => (
            ambient.roots().to_vec(),
            format!("{}{} = ambient", ambient.family, rank),
        ),
        SubDescriptor::TypeA => {
            if ambient.family == Family::A {
                return fail("type-A subsystem of A is the full system".into());
            }
            (
                block_roots(dim, 0, dim, Family::A),
                format!("A{} ⊂ {}{}", rank - 1, ambient.family, rank),
            )
        }
        SubDescriptor::TypeAAlt => {
            if ambient.family != Family::D {
                return fail("the alternative A-embedding lives in D only".into());
            }
            let mut roots = block_roots(dim, 0, dim - 1, Family::A);
            for i in 1..dim {
                roots.push(RootVector::sum(dim, i, dim));
                roots.push(RootVector::sum(dim, i, dim).neg());
            }
            (roots, format!("A{}~ ⊂ D{rank}", rank - 1))
        }
        SubDescriptor::SingleD => {
            if !factor_allowed(ambient.family, Family::D) {
                return fail(format!("D is not a subsystem of {}", ambient.family));
            }
            (
                block_roots(dim, 0, dim, Family::D),
                format!("D{rank} ⊂ {}{rank}", ambient.family),
            )
        }
        SubDescriptor::SingleB => {
            if ambient.family != Family::BC {
                return fail("B full-rank subsystem requires BC ambient".into());
            }
            (
                block_roots(dim, 0, dim, Family::B),
                format!("B{rank} ⊂ BC{rank}"),
            )
        }
        SubDescriptor::SingleC => {
            if ambient.family != Family::BC {
                return fail("C full-rank subsystem requires BC ambient".into());
            }
            (
                block_roots(dim, 0, dim, Family::C),
                format!("C{rank} ⊂ BC{rank}"),
            )
        }
        SubDescriptor::AProduct { p } => {
            if ambient.family != Family::A {
                return fail("A-product subsystem requires A ambient".into());
            }
            let p = *p as usize;
            if p >= dim {
                return fail(format!("split {p} exceeds coordinate count {dim}"));
            }
            let mut roots = block_roots(dim, 0, p, Family::A);
            roots.extend(block_roots(dim, p, dim, Family::A));
            (
                roots,
                format!("A{}xA{} ⊂ A{}", p.saturating_sub(1), dim - p - 1, rank),
            )
        }
        SubDescriptor::Product { split, left, right } => {
            if ambient.family == Family::A {
                return fail("use AProduct for A ambients".into());
            }
            if !factor_allowed(ambient.family, *left) || !factor_allowed(ambient.family, *right) {
                return fail(format!(
                    "{left}x{right} is not a subsystem of {}",
                    ambient.family
                ));
            }
            if *left == Family::D && *right == Family::D && ambient.family != Family::D {
                return fail("two D factors are only supported inside D".into());
            }
            if ambient.family == Family::D && (*left != Family::D || *right != Family::D) {
                return fail("inside D only DxD products are supported".into());
            }
            let p = *split as usize;
            let mut roots = block_roots(dim, 0, p, *left);
            roots.extend(block_roots(dim, p, dim, *right));
            (
                roots,
                format!(
                    "{left}{split}x{right}{} ⊂ {}{rank}",
                    rank - split,
                    ambient.family
                ),
            )
        }
    };

    let mut sub_roots = sub_roots;
    sub_roots.sort();
    sub_roots.dedup();
    for r in &sub_roots {
        if !ambient.contains(r) {
            return fail(format!("{r} is not a root of the ambient system"));
        }
    }
    Ok(EmbeddedSubsystem {
        ambient: ambient.clone(),
        descriptor,
        sub_roots,
        label,
    })
}

/// Closed-form index of `W(Δ)/W(Δᵃ)` for an embedded subsystem.
pub fn coset_index(sub: &EmbeddedSubsystem) -> u128 {
    let n = sub.ambient.rank;
    match &sub.descriptor {
        SubDescriptor::Full | SubDescriptor::SingleB | SubDescriptor::SingleC => 1,
        SubDescriptor::SingleD => 2,
        SubDescriptor::TypeA | SubDescriptor::TypeAAlt => {
            if sub.ambient.family == Family::D {
                1u128 << (n - 1)
            } else {
                1u128 << n
            }
        }
        SubDescriptor::AProduct { p } => binom(n + 1, *p),
        SubDescriptor::Product { split, left, right } => {
            let base = binom(n, *split);
            if *left == Family::D || *right == Family::D {
                2 * base
            } else {
                base
            }
        }
    }
}

/// Index formula as written in the classification table, e.g. `2^n` or `nCp`.
pub fn coset_index_formula(sub: &EmbeddedSubsystem) -> String {
    let n = sub.ambient.rank;
    match &sub.descriptor {
        SubDescriptor::Full | SubDescriptor::SingleB | SubDescriptor::SingleC => "1".into(),
        SubDescriptor::SingleD => "2".into(),
        SubDescriptor::TypeA | SubDescriptor::TypeAAlt => {
            if sub.ambient.family == Family::D {
                format!("2^{}", n - 1)
            } else {
                format!("2^{n}")
            }
        }
        SubDescriptor::AProduct { p } => format!("C({},{})", n + 1, p),
        SubDescriptor::Product { split, left, right } => {
            if *left == Family::D || *right == Family::D {
                format!("2*C({n},{split})")
            } else {
                format!("C({n},{split})")
            }
        }
    }
}

/// Representatives for `W(A_{n-1}) / W(A_{p-1} × A_{n-p-1})` as permutations
/// of the first `n` of `dim` coordinates, via the binomial recursion. The
/// list is deterministic; the recursion appends the second branch after the
/// first.
pub fn a_quotient_reps(dim: usize, n: u32, p: u32) -> Vec<WeylElement> {
    assert!(n as usize <= dim);
    if p == 0 || p >= n || n <= 1 {
        return vec![WeylElement::identity(dim)];
    }
    let transposition = |i: usize| -> WeylElement {
        reflection(&RootVector::diff(dim, i, i + 1)).expect("difference roots reflect")
    };
    // chain = s_{e_{n-1}-e_n} ⋯ s_{e_p-e_{p+1}}, rightmost applied first
    let mut chain = WeylElement::identity(dim);
    for i in p..n {
        chain = transposition(i as usize).compose(&chain);
    }
    let mut out = a_quotient_reps(dim, n - 1, p);
    for w in a_quotient_reps(dim, n - 1, p - 1) {
        out.push(w.compose(&chain));
    }
    out
}

/// Sign-change element flipping exactly the listed coordinates (0-based).
fn flips(dim: usize, coords: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(dim);
    for &c in coords {
        w = WeylElement::sign_flip(dim, c).compose(&w);
    }
    w
}

/// Build the explicit complete system of representatives for `W(Δ)/W(Δᵃ)`.
pub fn coset_reps(sub: &EmbeddedSubsystem) -> Result<CosetSystem> {
    let dim = sub.ambient.ambient_dim;
    let rank = sub.ambient.rank as usize;
    let reps: Vec<WeylElement> = match &sub.descriptor {
        SubDescriptor::Full | SubDescriptor::SingleB | SubDescriptor::SingleC => {
            vec![WeylElement::identity(dim)]
        }
        SubDescriptor::SingleD => {
            vec![
                WeylElement::identity(dim),
                WeylElement::sign_flip(dim, dim - 1),
            ]
        }
        SubDescriptor::TypeA | SubDescriptor::TypeAAlt if sub.ambient.family != Family::D => {
            // all sign changes, in binary counter order
            (0..(1usize << rank))
                .map(|mask| {
                    let coords: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
                    flips(dim, &coords)
                })
                .collect()
        }
        SubDescriptor::TypeA | SubDescriptor::TypeAAlt => {
            // even sign changes: products of adjacent double flips
            (0..(1usize << (rank - 1)))
                .map(|mask| {
                    let mut w = WeylElement::identity(dim);
                    for i in 0..rank - 1 {
                        if mask >> i & 1 == 1 {
                            w = flips(dim, &[i, i + 1]).compose(&w);
                        }
                    }
                    w
                })
                .collect()
        }
        SubDescriptor::AProduct { p } => a_quotient_reps(dim, dim as u32, *p),
        SubDescriptor::Product { split, left, right } => {
            let perms = a_quotient_reps(dim, rank as u32, *split);
            if *left == Family::D || *right == Family::D {
                // One extra coset per permutation class. The doubling factor
                // must act before the permutation: w∘f always flips the
                // block-1 sign parity, while f∘w can land back in the same
                // coset (e.g. when w carries block 1 onto {p, p+1}).
                let p = *split as usize;
                let f = flips(dim, &[p - 1, p]);
                let mut out = Vec::with_capacity(2 * perms.len());
                out.extend(perms.iter().cloned());
                out.extend(perms.iter().map(|w| w.compose(&f)));
                out
            } else {
                perms
            }
        }
    };
    Ok(CosetSystem {
        reps,
        sub: sub.clone(),
    })
}

/// Structural membership test for the subgroup `W(Δᵃ)`.
///
/// Each supported embedding has an exact characterization: block
/// preservation for products, pure-permutation for type-A subsystems, even
/// sign-change parity for `D` factors. Falls back to brute force only when
/// asked explicitly (`in_subgroup_brute`).
pub fn in_subgroup(w: &WeylElement, sub: &EmbeddedSubsystem) -> bool {
    let dim = sub.ambient.ambient_dim;
    let preserves_block = |w: &WeylElement, lo: usize, hi: usize| -> bool {
        (lo..hi).all(|i| {
            let (j, _) = w.image(i);
            (lo..hi).contains(&j)
        })
    };
    let block_flip_parity = |w: &WeylElement, lo: usize, hi: usize| -> usize {
        (lo..hi).filter(|&i| w.image(i).1 == -1).count()
    };
    match &sub.descriptor {
        SubDescriptor::Full | SubDescriptor::SingleB | SubDescriptor::SingleC => true,
        SubDescriptor::SingleD => w.sign_flip_count() % 2 == 0,
        SubDescriptor::TypeA => w.is_pure_permutation(),
        SubDescriptor::TypeAAlt => {
            let f = WeylElement::sign_flip(dim, dim - 1);
            f.compose(&w.compose(&f)).is_pure_permutation()
        }
        SubDescriptor::AProduct { p } => {
            w.is_pure_permutation() && preserves_block(w, 0, *p as usize)
        }
        SubDescriptor::Product { split, left, right } => {
            let p = *split as usize;
            if !preserves_block(w, 0, p) || !preserves_block(w, p, dim) {
                return false;
            }
            if *left == Family::D && block_flip_parity(w, 0, p) % 2 != 0 {
                return false;
            }
            if *right == Family::D && block_flip_parity(w, p, dim) % 2 != 0 {
                return false;
            }
            true
        }
    }
}

/// Brute-force membership: generate the subgroup from its root reflections.
pub fn in_subgroup_brute(w: &WeylElement, sub: &EmbeddedSubsystem, cap: usize) -> Result<bool> {
    let group = subgroup_elements(sub, cap)?;
    Ok(group.contains(w))
}

/// Generate the subgroup `W(Δᵃ)` from the reflections of the subsystem roots.
pub fn subgroup_elements(sub: &EmbeddedSubsystem, cap: usize) -> Result<Vec<WeylElement>> {
    if sub.sub_roots.is_empty() {
        return Ok(vec![WeylElement::identity(sub.ambient.ambient_dim)]);
    }
    let gens: Vec<WeylElement> = sub
        .sub_roots
        .iter()
        .map(reflection)
        .collect::<Result<_>>()?;
    generate_group(&gens, cap)
}

/// Generate the ambient group `W(Δ)`.
pub fn ambient_elements(ambient: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    let psi = standard_simple_system(ambient);
    let gens: Vec<WeylElement> = psi.roots.iter().map(reflection).collect::<Result<_>>()?;
    generate_group(&gens, cap)
}

/// Count the cosets of `sub` in `ambient` by brute-force partition.
pub fn brute_force_coset_count(ambient: &[WeylElement], subgroup: &[WeylElement]) -> usize {
    let mut unvisited: HashSet<&WeylElement> = ambient.iter().collect();
    let mut classes = 0;
    while let Some(&g) = unvisited.iter().next() {
        let g = g.clone();
        classes += 1;
        for h in subgroup {
            let member = g.compose(h);
            unvisited.remove(&member);
        }
    }
    classes
}

/// Result of checking a coset system against its defining properties.
#[derive(Debug, Clone)]
pub struct CompletenessReport {
    pub expected_index: u128,
    pub count: usize,
    pub count_matches: bool,
    pub pairwise_inequivalent: bool,
    pub covers_group: bool,
    pub ambient_order: usize,
    pub subgroup_order: usize,
}

impl CompletenessReport {
    pub fn passed(&self) -> bool {
        self.count_matches && self.pairwise_inequivalent && self.covers_group
    }
}

/// Verify that a coset system is a complete system of pairwise-inequivalent
/// representatives, with the coverage check done by brute force.
pub fn verify_complete_system(cs: &CosetSystem, cap: usize) -> Result<CompletenessReport> {
    let expected = coset_index(&cs.sub);
    let count_matches = cs.reps.len() as u128 == expected;

    let mut pairwise = true;
    'outer: for (i, wi) in cs.reps.iter().enumerate() {
        for wj in cs.reps.iter().skip(i + 1) {
            if in_subgroup(&wi.inverse().compose(wj), &cs.sub) {
                pairwise = false;
                break 'outer;
            }
        }
    }

    let ambient = ambient_elements(&cs.sub.ambient, cap)?;
    let subgroup = subgroup_elements(&cs.sub, cap)?;
    let ambient_set: HashSet<&WeylElement> = ambient.iter().collect();
    let mut covered: HashSet<WeylElement> = HashSet::with_capacity(ambient.len());
    let mut covers = true;
    for w in &cs.reps {
        for h in &subgroup {
            let g = w.compose(h);
            if !ambient_set.contains(&g) {
                covers = false;
            }
            covered.insert(g);
        }
    }
    covers = covers && covered.len() == ambient.len();

    Ok(CompletenessReport {
        expected_index: expected,
        count: cs.reps.len(),
        count_matches,
        pairwise_inequivalent: pairwise,
        covers_group: covers,
        ambient_order: ambient.len(),
        subgroup_order: subgroup.len(),
    })
}

/// Parse a selector like `C3-D3`, `A4-A1xA2`, `B3-D1xB2` or `D4-A3alt` into
/// an embedded subsystem.
pub fn parse_pair_selector(s: &str) -> Result<EmbeddedSubsystem> {
    let (amb, subpart) = s
        .split_once('-')
        .ok_or_else(|| Error::Parse(format!("selector {s} must look like C3-D3")))?;
    let parse_sys = |t: &str| -> Result<(Family, u32)> {
        let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
            Error::Parse(format!(
                "system token {t} must be a family followed by a rank"
            ))
        })?;
        let fam = Family::parse(&t[..split])
            .ok_or_else(|| Error::Parse(format!("unknown family in {t}")))?;
        let rank: u32 = t[split..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {t}")))?;
        Ok((fam, rank))
    };
    let (fam, rank) = parse_sys(amb)?;
    let ambient = build_root_system(fam, rank)?;

    let alt = subpart.ends_with("alt");
    let subpart = subpart.trim_end_matches("alt");
    let descriptor = if let Some((l, r)) = subpart.split_once('x') {
        let (lf, lr) = parse_sys(l)?;
        let (rf, rr) = parse_sys(r)?;
        if fam == Family::A {
            if lf != Family::A || rf != Family::A || lr + rr + 2 != rank + 1 {
                return Err(Error::Parse(format!(
                    "A-product ranks in {s} must satisfy (p-1)+(n-p-1) = n-2"
                )));
            }
            SubDescriptor::AProduct { p: lr + 1 }
        } else {
            if lr + rr != rank {
                return Err(Error::Parse(format!(
                    "product ranks in {s} must sum to the ambient rank"
                )));
            }
            SubDescriptor::Product {
                split: lr,
                left: lf,
                right: rf,
            }
        }
    } else {
        let (sf, sr) = parse_sys(subpart)?;
        if sf == fam && sr == rank {
            SubDescriptor::Full
        } else if sf == Family::A && sr + 1 == rank {
            if alt {
                SubDescriptor::TypeAAlt
            } else {
                SubDescriptor::TypeA
            }
        } else if sr == rank {
            match sf {
                Family::D => SubDescriptor::SingleD,
                Family::B => SubDescriptor::SingleB,
                Family::C => SubDescriptor::SingleC,
                _ => {
                    return Err(Error::Parse(format!(
                        "unsupported full-rank subsystem in {s}"
                    )))
                }
            }
        } else {
            return Err(Error::Parse(format!("unsupported subsystem selector {s}")));
        }
    };
    embed_subsystem(&ambient, descriptor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DEFAULT_GROUP_CAP;

    fn sys(f: Family, r: u32) -> RootSystem {
        build_root_system(f, r).unwrap()
    }

    #[test]
    fn embed_examples() {
        // D3 inside C3.
        let sub = embed_subsystem(&sys(Family::C, 3), SubDescriptor::SingleD).unwrap();
        assert_eq!(sub.sub_roots.len(), 12);
        assert!(sub.sub_roots.contains(&RootVector(vec![1, 1, 0])));
        assert!(!sub.sub_roots.contains(&RootVector(vec![2, 0, 0])));

        // A1 x A2 inside A4 at p = 2.
        let sub = embed_subsystem(&sys(Family::A, 4), SubDescriptor::AProduct { p: 2 }).unwrap();
        assert_eq!(sub.sub_roots.len(), 2 + 6);
        assert!(sub.sub_roots.contains(&RootVector::diff(5, 1, 2)));
        assert!(sub.sub_roots.contains(&RootVector::diff(5, 4, 5)));
        assert!(!sub.sub_roots.contains(&RootVector::diff(5, 2, 3)));

        // B2 = B2: the whole system.
        let sub = embed_subsystem(&sys(Family::B, 2), SubDescriptor::Full).unwrap();
        assert_eq!(sub.sub_roots.len(), 8);
        assert_eq!(coset_index(&sub), 1);
    }

    #[test]
    fn cn_dn_pair() {
        let sub = embed_subsystem(&sys(Family::C, 2), SubDescriptor::SingleD).unwrap();
        let cs = coset_reps(&sub).unwrap();
        assert_eq!(cs.reps.len(), 2);
        assert!(cs.reps[0].is_identity());
        assert_eq!(cs.reps[1], WeylElement::sign_flip(2, 1));
        let report = verify_complete_system(&cs, DEFAULT_GROUP_CAP).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.ambient_order, 8);
        assert_eq!(report.subgroup_order, 4);
    }

    #[test]
    fn a4_a1xa2_ten_words() {
        let sub = embed_subsystem(&sys(Family::A, 4), SubDescriptor::AProduct { p: 2 }).unwrap();
        let cs = coset_reps(&sub).unwrap();
        assert_eq!(cs.reps.len(), 10);

        // The ten explicit words, rightmost reflection applied first.
        let s = |i: usize| reflection(&RootVector::diff(5, i, i + 1)).unwrap();
        let word = |idx: &[usize]| -> WeylElement {
            let mut w = WeylElement::identity(5);
            for &i in idx.iter().rev() {
                w = s(i).compose(&w);
            }
            w
        };
        let expected = [
            word(&[]),
            word(&[2]),
            word(&[1, 2]),
            word(&[3, 2]),
            word(&[1, 3, 2]),
            word(&[2, 1, 3, 2]),
            word(&[4, 3, 2]),
            word(&[1, 4, 3, 2]),
            word(&[2, 1, 4, 3, 2]),
            word(&[3, 2, 1, 4, 3, 2]),
        ];
        // Same cosets in the same order.
        for (got, want) in cs.reps.iter().zip(expected.iter()) {
            assert!(in_subgroup(&got.inverse().compose(want), &sub));
        }
        let report = verify_complete_system(&cs, DEFAULT_GROUP_CAP).unwrap();
        assert!(report.passed());
        assert_eq!(report.ambient_order, 120);
        assert_eq!(report.subgroup_order, 12);
    }

    #[test]
    fn c3_a2_sign_changes() {
        let sub = embed_subsystem(&sys(Family::C, 3), SubDescriptor::TypeA).unwrap();
        let cs = coset_reps(&sub).unwrap();
        assert_eq!(cs.reps.len(), 8);
        let ambient = ambient_elements(&sub.ambient, DEFAULT_GROUP_CAP).unwrap();
        let subgroup = subgroup_elements(&sub, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(brute_force_coset_count(&ambient, &subgroup), 8);
        assert!(verify_complete_system(&cs, DEFAULT_GROUP_CAP)
            .unwrap()
            .passed());
    }

    #[test]
    fn membership_examples() {
        let sub = embed_subsystem(&sys(Family::C, 3), SubDescriptor::SingleD).unwrap();
        assert!(in_subgroup(&WeylElement::identity(3), &sub));
        // s_{2e_3} is an odd sign change.
        assert!(!in_subgroup(&WeylElement::sign_flip(3, 2), &sub));
        // s_{e_1-e_2} s_{e_1+e_2} flips two signs.
        let a = reflection(&RootVector(vec![1, -1, 0])).unwrap();
        let b = reflection(&RootVector(vec![1, 1, 0])).unwrap();
        let w = a.compose(&b);
        assert!(in_subgroup(&w, &sub));
        assert!(in_subgroup_brute(&w, &sub, DEFAULT_GROUP_CAP).unwrap());
        assert!(
            !in_subgroup_brute(&WeylElement::sign_flip(3, 2), &sub, DEFAULT_GROUP_CAP).unwrap()
        );
    }

    #[test]
    fn dn_even_sign_changes_and_alt_variant() {
        for desc in [SubDescriptor::TypeA, SubDescriptor::TypeAAlt] {
            let sub = embed_subsystem(&sys(Family::D, 4), desc).unwrap();
            let cs = coset_reps(&sub).unwrap();
            assert_eq!(cs.reps.len(), 8);
            let report = verify_complete_system(&cs, DEFAULT_GROUP_CAP).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn t_elements_commute_and_are_involutions() {
        // Sign-change generators inside C4.
        let dim = 4;
        let t: Vec<WeylElement> = (0..dim).map(|i| WeylElement::sign_flip(dim, i)).collect();
        for a in &t {
            assert!(a.compose(a).is_identity());
            for b in &t {
                assert_eq!(a.compose(b), b.compose(a));
            }
        }
        // The map from exponent vectors to elements is injective.
        let sub = embed_subsystem(&sys(Family::C, 4), SubDescriptor::TypeA).unwrap();
        let cs = coset_reps(&sub).unwrap();
        let set: HashSet<_> = cs.reps.iter().collect();
        assert_eq!(set.len(), 16);
    }

    #[test]
    fn product_with_d_factor() {
        // D1 x B2 inside B3: index 2 * C(3,1) = 6.
        let sub = embed_subsystem(
            &sys(Family::B, 3),
            SubDescriptor::Product {
                split: 1,
                left: Family::D,
                right: Family::B,
            },
        )
        .unwrap();
        assert_eq!(coset_index(&sub), 6);
        let cs = coset_reps(&sub).unwrap();
        let report = verify_complete_system(&cs, DEFAULT_GROUP_CAP).unwrap();
        assert!(report.passed(), "{report:?}");

        // D2 x D2 inside D4: index 2 * C(4,2) = 12.
        let sub = embed_subsystem(
            &sys(Family::D, 4),
            SubDescriptor::Product {
                split: 2,
                left: Family::D,
                right: Family::D,
            },
        )
        .unwrap();
        assert_eq!(coset_index(&sub), 12);
        let cs = coset_reps(&sub).unwrap();
        assert!(verify_complete_system(&cs, DEFAULT_GROUP_CAP)
            .unwrap()
            .passed());
    }

    #[test]
    fn degenerate_product_normalizes() {
        // D3 x (empty) inside B3 is the full-span D3: index 2.
        let sub = embed_subsystem(
            &sys(Family::B, 3),
            SubDescriptor::Product {
                split: 3,
                left: Family::D,
                right: Family::B,
            },
        )
        .unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::SingleD);
        assert_eq!(coset_index(&sub), 2);

        // (empty) x C3 inside C3 is the full system.
        let sub = embed_subsystem(
            &sys(Family::C, 3),
            SubDescriptor::Product {
                split: 0,
                left: Family::C,
                right: Family::C,
            },
        )
        .unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::Full);
    }

    #[test]
    fn recursion_cardinality_identity() {
        for n in 2..=8u32 {
            for p in 1..n {
                let lhs = a_quotient_reps(n as usize, n, p).len() as u128;
                assert_eq!(lhs, binom(n, p));
                let a = a_quotient_reps(n as usize, n - 1, p).len() as u128;
                let b = a_quotient_reps(n as usize, n - 1, p.saturating_sub(1)).len() as u128;
                if p >= 1 {
                    assert_eq!(lhs, a + b, "n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn selector_parsing() {
        let sub = parse_pair_selector("A4-A1xA2").unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::AProduct { p: 2 });
        let sub = parse_pair_selector("C3-D3").unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::SingleD);
        let sub = parse_pair_selector("C3-A2").unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::TypeA);
        let sub = parse_pair_selector("D4-A3alt").unwrap();
        assert_eq!(sub.descriptor, SubDescriptor::TypeAAlt);
        let sub = parse_pair_selector("B3-D1xB2").unwrap();
        assert!(matches!(
            sub.descriptor,
            SubDescriptor::Product { split: 1, .. }
        ));
        assert!(parse_pair_selector("E8-D4").is_err());
    }
}
