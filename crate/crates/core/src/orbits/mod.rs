//! Enumeration of local orbit types: for each coset representative `w` and
//! each subset `Θ` of the transformed simple system `w·Ψ`, compute the
//! closed subsystem `Δ_Θ` and classify the subalgebra `h_Θ`, then merge
//! equal values across all `(w, Θ)` pairs.

pub mod table3;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::json;

use crate::cosets::{coset_reps, CosetSystem};
use crate::liealg::{LieAlgebraExpr, Style};
use crate::pairs::rules::{PositionalRules, RuleShape, ThetaRules};
use crate::pairs::SymmetricPairSpec;
use crate::rootsys::{standard_simple_system, Family, RootSystem, RootVector, WeylElement};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Δ_Θ: exact span intersection.
// ---------------------------------------------------------------------------

/// Reduced row echelon basis of the span of the given vectors, over ℚ.
fn rref(rows: &[RootVector]) -> Vec<Vec<Rational64>> {
    let mut mat: Vec<Vec<Rational64>> = rows
        .iter()
        .map(|r| {
            r.0.iter()
                .map(|&c| Rational64::from_integer(c as i64))
                .collect()
        })
        .collect();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(sel) = (pivot_row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, sel);
        let inv = mat[pivot_row][col];
        for c in 0..cols {
            mat[pivot_row][c] /= inv;
        }
        for r in 0..mat.len() {
            if r != pivot_row && !mat[r][col].is_zero() {
                let factor = mat[r][col];
                for c in 0..cols {
                    let sub = factor * mat[pivot_row][c];
                    mat[r][c] -= sub;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == mat.len() {
            break;
        }
    }
    mat.truncate(pivot_row);
    mat
}

fn in_span(basis: &[Vec<Rational64>], v: &RootVector) -> bool {
    let mut residual: Vec<Rational64> =
        v.0.iter()
            .map(|&c| Rational64::from_integer(c as i64))
            .collect();
    for row in basis {
        let pivot = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("rref rows are nonzero");
        if !residual[pivot].is_zero() {
            let factor = residual[pivot];
            for (res, b) in residual.iter_mut().zip(row) {
                let sub = factor * *b;
                *res -= sub;
            }
        }
    }
    residual.iter().all(|x| x.is_zero())
}

/// `Δ_Θ = Δ ∩ span_ℚ(Θ)`, computed by exact rational elimination.
pub fn delta_theta(rs: &RootSystem, theta: &[RootVector]) -> Vec<RootVector> {
    if theta.is_empty() {
        return Vec::new();
    }
    let basis = rref(theta);
    rs.roots()
        .iter()
        .filter(|r| in_span(&basis, r))
        .cloned()
        .collect()
}

// ---------------------------------------------------------------------------
// Component type descriptors.
// ---------------------------------------------------------------------------

/// Abstract type of one irreducible component of a closed subsystem.
/// Labels are canonical: rank-one components are `A_1` (or `BC_1` when the
/// doubled root is present), `D_3` is reported as `A_3`, and rank-two
/// double-norm components as `B_2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentType(pub Family, pub u32);

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

fn canonical_component(family: Family, rank: u32) -> Vec<ComponentType> {
    match (family, rank) {
        (_, 0) => vec![],
        (Family::BC, r) => vec![ComponentType(Family::BC, r)],
        (_, 1) => vec![ComponentType(Family::A, 1)],
        (Family::D, 2) => vec![ComponentType(Family::A, 1), ComponentType(Family::A, 1)],
        (Family::D, 3) => vec![ComponentType(Family::A, 3)],
        (Family::B, 2) | (Family::C, 2) => vec![ComponentType(Family::B, 2)],
        (f, r) => vec![ComponentType(f, r)],
    }
}

/// Decompose a root subset (closed under negation) into irreducible
/// components and classify each one.
pub fn component_types(roots: &[RootVector]) -> Vec<ComponentType> {
    let positive: Vec<&RootVector> = roots
        .iter()
        .filter(|r| r.0.iter().find(|&&c| c != 0).copied().unwrap_or(0) > 0)
        .collect();
    let n = positive.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if positive[i].dot(positive[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<&RootVector>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(positive[i]);
    }
    let mut out = Vec::new();
    for group in groups.values() {
        let full: Vec<RootVector> = group.iter().flat_map(|r| [(*r).clone(), r.neg()]).collect();
        let rank = rref(&full).len() as u32;
        let count = full.len();
        let norms: BTreeSet<i64> = full.iter().map(|r| r.dot(r)).collect();
        let family = match norms.len() {
            1 => {
                let r = rank as usize;
                if count == 2 * r * (r.saturating_sub(1)) && rank >= 4 {
                    Family::D
                } else {
                    Family::A
                }
            }
            2 => {
                let min = *norms.iter().next().unwrap();
                let max = *norms.iter().last().unwrap();
                if max == 4 * min {
                    // short and doubled roots only: a BC system without middles
                    // does not occur here; treat as BC for safety
                    Family::BC
                } else {
                    let short_count = full.iter().filter(|r| r.dot(r) == min).count();
                    let r = rank as usize;
                    if rank == 2 || short_count == 2 * r {
                        Family::B
                    } else {
                        Family::C
                    }
                }
            }
            _ => Family::BC,
        };
        // For two-norm systems, B vs C is decided by which length is the
        // minority at rank ≥ 3.
        let family = if norms.len() == 2 && rank >= 3 {
            let min = *norms.iter().next().unwrap();
            let short_count = full.iter().filter(|r| r.dot(r) == min).count();
            if short_count == 2 * rank as usize {
                Family::B
            } else {
                Family::C
            }
        } else {
            family
        };
        out.extend(canonical_component(family, rank));
    }
    out.sort();
    out
}

/// Predicted component types of `Δ_Θ` from the removal pattern, using only
/// the Dynkin-graph adjacency of the simple system. Independent of the span
/// computation; used as a structural cross-check.
pub fn predicted_components(
    family: Family,
    rank: u32,
    kept: &BTreeSet<usize>,
) -> Vec<ComponentType> {
    let r = rank as usize;
    // adjacency in the simple-root diagram (positions 1-based)
    let adjacent = |a: usize, b: usize| -> bool {
        match family {
            Family::D => {
                let (a, b) = (a.min(b), a.max(b));
                (b == a + 1 && b <= r - 1) || (a == r - 2 && b == r)
            }
            _ => a + 1 == b || b + 1 == a,
        }
    };
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in kept {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut queue = vec![start];
        while let Some(x) = queue.pop() {
            for &y in kept {
                if !seen.contains(&y) && adjacent(x, y) {
                    seen.insert(y);
                    comp.push(y);
                    queue.push(y);
                }
            }
        }
        let size = comp.len() as u32;
        let fam = match family {
            Family::A => Family::A,
            Family::D => {
                if comp.contains(&(r - 1)) && comp.contains(&r) {
                    Family::D
                } else {
                    Family::A
                }
            }
            f => {
                if comp.contains(&r) {
                    f
                } else {
                    Family::A
                }
            }
        };
        out.extend(canonical_component(fam, size));
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Classification of h_Θ.
// ---------------------------------------------------------------------------

/// Removal-pattern data handed to a rule row.
struct RemovalEnv {
    with_last: bool,
    k: i64,
    gaps: Vec<i64>,
    ik: i64,
}

fn removal_env(shape: RuleShape, rank: u32, removed: &BTreeSet<usize>) -> RemovalEnv {
    let r = rank as usize;
    let gaps_of = |ii: &[usize]| -> Vec<i64> {
        let mut prev = 0i64;
        let mut out = Vec::with_capacity(ii.len());
        for &i in ii {
            out.push(i as i64 - prev);
            prev = i as i64;
        }
        out
    };
    match shape {
        RuleShape::TypeA => {
            let mut ii: Vec<usize> = removed.iter().copied().collect();
            let k = ii.len() as i64;
            ii.push(r + 1);
            RemovalEnv {
                with_last: false,
                k,
                gaps: gaps_of(&ii),
                ik: removed.iter().last().map_or(0, |&x| x as i64),
            }
        }
        RuleShape::Tailed => {
            if removed.contains(&r) {
                let mut ii: Vec<usize> = removed.iter().copied().filter(|&x| x != r).collect();
                ii.push(r);
                RemovalEnv {
                    with_last: true,
                    k: ii.len() as i64,
                    gaps: gaps_of(&ii),
                    ik: r as i64,
                }
            } else {
                let ii: Vec<usize> = removed.iter().copied().collect();
                RemovalEnv {
                    with_last: false,
                    k: ii.len() as i64,
                    ik: ii.last().map_or(0, |&x| x as i64),
                    gaps: gaps_of(&ii),
                }
            }
        }
        RuleShape::DTailed => {
            let s1 = removed.contains(&(r - 1));
            let s2 = removed.contains(&r);
            if s1 || s2 {
                // Either end root counts as "the" removed end root; when only
                // e_{r-1} - e_r is removed the diagram symmetry swapping the
                // two end nodes carries the pattern to the tabulated one.
                let drop = if s2 { r } else { r - 1 };
                let mut ii: Vec<usize> = removed.iter().copied().filter(|&x| x != drop).collect();
                ii.push(r);
                RemovalEnv {
                    with_last: true,
                    k: ii.len() as i64,
                    gaps: gaps_of(&ii),
                    ik: r as i64,
                }
            } else {
                let ii: Vec<usize> = removed.iter().copied().collect();
                RemovalEnv {
                    with_last: false,
                    k: ii.len() as i64,
                    ik: ii.last().map_or(0, |&x| x as i64),
                    gaps: gaps_of(&ii),
                }
            }
        }
    }
}

fn eval_positional(
    rules: &PositionalRules,
    rank: u32,
    removed: &BTreeSet<usize>,
) -> LieAlgebraExpr {
    let env = removal_env(rules.shape, rank, removed);
    let row = if env.with_last {
        rules
            .with_last
            .as_ref()
            .expect("tailed rules carry a with-last row")
    } else {
        &rules.without_last
    };
    row.eval(env.k, &env.gaps, env.ik)
}

/// The transformed simple system `w·Ψ` in root order.
pub fn transformed_simple_system(spec: &SymmetricPairSpec, w: &WeylElement) -> Vec<RootVector> {
    let psi = standard_simple_system(&spec.resolved.delta);
    psi.roots.iter().map(|r| w.act_on_functional(r)).collect()
}

/// Positions (1-based) of `theta` inside `w·Ψ`; fails if `theta ⊄ w·Ψ`.
fn theta_positions(w_psi: &[RootVector], theta: &[RootVector]) -> Result<BTreeSet<usize>> {
    let mut kept = BTreeSet::new();
    for t in theta {
        let j = w_psi
            .iter()
            .position(|r| r == t)
            .ok_or(Error::NonSimpleTheta)?;
        kept.insert(j + 1);
    }
    Ok(kept)
}

/// Classify `h_Θ` for `Θ ⊆ w·Ψ` using the family's encoded table rows.
pub fn classify_h_theta(
    spec: &SymmetricPairSpec,
    w: &WeylElement,
    theta: &[RootVector],
) -> Result<LieAlgebraExpr> {
    let rules = spec
        .resolved
        .rules
        .as_ref()
        .ok_or_else(|| Error::UnsupportedFamily(spec.display()))?;
    let w_psi = transformed_simple_system(spec, w);
    let kept = theta_positions(&w_psi, theta)?;
    match rules {
        ThetaRules::Positional(rules) => {
            let rank = spec.resolved.delta.rank;
            let removed: BTreeSet<usize> =
                (1..=rank as usize).filter(|i| !kept.contains(i)).collect();
            Ok(eval_positional(rules, rank, &removed))
        }
        ThetaRules::Sl4RSo22 => {
            let mask = kept.iter().fold(0u32, |m, &j| m | (1 << (j - 1)));
            table3::lookup(w, mask).ok_or_else(|| {
                Error::UnsupportedFamily(format!(
                    "{}: representative not in the tabulated system",
                    spec.display()
                ))
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Orbit type records and enumeration.
// ---------------------------------------------------------------------------

/// Classification outcome for one `(w, Θ)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Classification {
    /// A classified subalgebra value.
    Value(LieAlgebraExpr),
    /// No rule table for this family: only the subsystem type is reported.
    StructuralOnly(Vec<ComponentType>),
}

impl Classification {
    pub fn render(&self) -> String {
        match self {
            Classification::Value(e) => e.render(Style::Unicode),
            Classification::StructuralOnly(c) => {
                let desc = if c.is_empty() {
                    "∅".to_string()
                } else {
                    c.iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(" x ")
                };
                format!("structural-only: Δ_Θ ≅ {desc}")
            }
        }
    }

    fn merge_key(&self, iso: bool) -> String {
        match self {
            Classification::Value(e) => {
                if iso {
                    format!("v:{}", e.iso_key().render(Style::Unicode))
                } else {
                    format!("v:{}", e.render(Style::Unicode))
                }
            }
            Classification::StructuralOnly(c) => format!("s:{c:?}"),
        }
    }
}

/// One witness: block index (into the representative list) and keep-mask.
#[derive(Debug, Clone)]
pub struct Witness {
    pub block: usize,
    pub mask: u32,
    pub theta: Vec<RootVector>,
}

/// One merged orbit type with all witnesses that produce it.
#[derive(Debug, Clone)]
pub struct OrbitTypeRecord {
    pub classification: Classification,
    pub delta_theta_types: Vec<Vec<ComponentType>>,
    pub witnesses: Vec<Witness>,
}

/// One representative block of the enumeration.
#[derive(Debug, Clone)]
pub struct Block {
    pub w: WeylElement,
    pub w_psi: Vec<RootVector>,
    /// `(mask, Θ, classification)` for every subset.
    pub rows: Vec<(u32, Vec<RootVector>, Classification)>,
}

/// Full enumeration output.
#[derive(Debug, Clone)]
pub struct OrbitTypeSet {
    pub pair: String,
    pub kind: OrbitKind,
    pub blocks: Vec<Block>,
    pub types: Vec<OrbitTypeRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    Hyperbolic,
    Elliptic,
}

/// Merge mode: annotated equality (default) or isomorphism-level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeMode {
    Annotated,
    Iso,
}

/// Enumerate all local orbit types of the hyperbolic orbits of a pair.
pub fn local_orbit_types(spec: &SymmetricPairSpec) -> Result<OrbitTypeSet> {
    local_orbit_types_with(spec, MergeMode::Annotated)
}

pub fn local_orbit_types_with(spec: &SymmetricPairSpec, mode: MergeMode) -> Result<OrbitTypeSet> {
    let cs: CosetSystem = coset_reps(&spec.resolved.sub)?;
    let rank = spec.resolved.delta.rank;
    let mut blocks = Vec::new();
    for w in &cs.reps {
        let w_psi = transformed_simple_system(spec, w);
        let mut rows = Vec::new();
        for mask in 0..(1u32 << rank) {
            let theta: Vec<RootVector> = (0..rank)
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| w_psi[j as usize].clone())
                .collect();
            let classification = if spec.resolved.rules.is_some() {
                Classification::Value(classify_h_theta(spec, w, &theta)?)
            } else {
                let sub = delta_theta(&spec.resolved.delta, &theta);
                Classification::StructuralOnly(component_types(&sub))
            };
            rows.push((mask, theta, classification));
        }
        blocks.push(Block {
            w: w.clone(),
            w_psi,
            rows,
        });
    }

    let mut types: Vec<OrbitTypeRecord> = Vec::new();
    let mut index: std::collections::HashMap<String, usize> = Default::default();
    for (bi, block) in blocks.iter().enumerate() {
        for (mask, theta, classification) in &block.rows {
            let key = classification.merge_key(mode == MergeMode::Iso);
            let sub = delta_theta(&spec.resolved.delta, theta);
            let types_of_theta = component_types(&sub);
            let entry = index.entry(key).or_insert_with(|| {
                types.push(OrbitTypeRecord {
                    classification: classification.clone(),
                    delta_theta_types: Vec::new(),
                    witnesses: Vec::new(),
                });
                types.len() - 1
            });
            let rec = &mut types[*entry];
            if !rec.delta_theta_types.contains(&types_of_theta) {
                rec.delta_theta_types.push(types_of_theta);
            }
            rec.witnesses.push(Witness {
                block: bi,
                mask: *mask,
                theta: theta.clone(),
            });
        }
    }
    types.sort_by_key(|t| {
        (
            t.witnesses.iter().map(|w| w.theta.len()).max().unwrap_or(0),
            t.classification.merge_key(false),
        )
    });

    Ok(OrbitTypeSet {
        pair: spec.display(),
        kind: OrbitKind::Hyperbolic,
        blocks,
        types,
    })
}

/// Local orbit types of the elliptic orbits: the hyperbolic types of the
/// c-dual pair, relabeled.
pub fn elliptic_orbit_types(spec: &SymmetricPairSpec) -> Result<OrbitTypeSet> {
    let dual = crate::pairs::c_dual(spec)?;
    let mut set = local_orbit_types(&dual)?;
    set.kind = OrbitKind::Elliptic;
    set.pair = format!(
        "{} (elliptic, via c-dual {})",
        spec.display(),
        dual.display()
    );
    Ok(set)
}

/// The principal type: the record witnessed by `Θ = ∅`.
pub fn principal_type(set: &OrbitTypeSet) -> Option<&OrbitTypeRecord> {
    set.types
        .iter()
        .find(|t| t.witnesses.iter().any(|w| w.mask == 0))
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

fn theta_label(theta: &[RootVector]) -> String {
    if theta.is_empty() {
        "∅".to_string()
    } else {
        format!(
            "{{{}}}",
            theta
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

pub fn to_json(set: &OrbitTypeSet) -> serde_json::Value {
    json!({
        "pair": set.pair,
        "kind": match set.kind { OrbitKind::Hyperbolic => "hyperbolic", OrbitKind::Elliptic => "elliptic" },
        "reps": set.blocks.len(),
        "orbit_types": set.types.iter().map(|t| json!({
            "h_theta": match &t.classification {
                Classification::Value(e) => e.to_json(),
                Classification::StructuralOnly(_) => serde_json::Value::Null,
            },
            "label": t.classification.render(),
            "delta_theta_types": t.delta_theta_types.iter().map(|c| {
                c.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
            "witnesses": t.witnesses.iter().map(|w| json!({
                "block": w.block,
                "mask": w.mask,
                "theta": w.theta.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn to_markdown(set: &OrbitTypeSet) -> String {
    let mut out = String::new();
    out.push_str(&format!("# Local orbit types for {}\n\n", set.pair));
    for (i, block) in set.blocks.iter().enumerate() {
        let w_label = if block.w.is_identity() {
            "id".to_string()
        } else {
            block.w.describe()
        };
        out.push_str(&format!(
            "## Block {} — w = {}, w·Ψ = {}\n\n",
            i + 1,
            w_label,
            theta_label(&block.w_psi)
        ));
        out.push_str("| Θ | h_Θ |\n|---|---|\n");
        for (_, theta, class) in block.rows.iter().rev() {
            out.push_str(&format!(
                "| {} | {} |\n",
                theta_label(theta),
                class.render()
            ));
        }
        out.push('\n');
    }
    out.push_str("## Merged orbit types\n\n");
    for t in &set.types {
        out.push_str(&format!(
            "- {} ({} witnesses)\n",
            t.classification.render(),
            t.witnesses.len()
        ));
    }
    out
}

pub fn to_latex(set: &OrbitTypeSet) -> String {
    let mut out = String::new();
    for block in &set.blocks {
        out.push_str("\\begin{tabular}{|c|c|}\n\\hline\n");
        out.push_str("$\\Theta$ & $h_\\Theta$ \\\\\n\\hline\n");
        for (_, theta, class) in block.rows.iter().rev() {
            let label = theta
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let value = match class {
                Classification::Value(e) => format!("${}$", e.render(Style::Latex)),
                Classification::StructuralOnly(_) => class.render(),
            };
            out.push_str(&format!("$\\{{{label}\\}}$ & {value} \\\\\n"));
        }
        out.push_str("\\hline\n\\end{tabular}\n\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build::*;
    use crate::pairs::{hpis, lookup_pair, Params};
    use crate::rootsys::build_root_system;

    fn pair(slug: &str, params: &[(&'static str, i64)]) -> SymmetricPairSpec {
        lookup_pair(slug, &Params::new(params)).unwrap()
    }

    #[test]
    fn delta_theta_examples() {
        let a4 = build_root_system(Family::A, 4).unwrap();
        assert!(delta_theta(&a4, &[]).is_empty());

        // Θ = {e1-e2, e3-e4} inside A_4: exactly ±(e1-e2), ±(e3-e4).
        let theta = vec![RootVector::diff(5, 1, 2), RootVector::diff(5, 3, 4)];
        let sub = delta_theta(&a4, &theta);
        assert_eq!(sub.len(), 4);
        assert_eq!(
            component_types(&sub),
            vec![ComponentType(Family::A, 1), ComponentType(Family::A, 1)]
        );

        // Θ = full simple system spans everything.
        let psi = standard_simple_system(&a4);
        let sub = delta_theta(&a4, &psi.roots);
        assert_eq!(sub.len(), a4.roots().len());
    }

    #[test]
    fn delta_theta_monotone_under_subsets() {
        let c3 = build_root_system(Family::C, 3).unwrap();
        let psi = standard_simple_system(&c3);
        for small in 0..(1u32 << 3) {
            for large in 0..(1u32 << 3) {
                if small & large != small {
                    continue;
                }
                let pick = |mask: u32| -> Vec<RootVector> {
                    (0..3)
                        .filter(|j| mask >> j & 1 == 1)
                        .map(|j| psi.roots[j as usize].clone())
                        .collect()
                };
                let a = delta_theta(&c3, &pick(small));
                let b = delta_theta(&c3, &pick(large));
                for r in &a {
                    assert!(b.contains(r));
                }
            }
        }
    }

    #[test]
    fn component_classifier_spot_checks() {
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::BC, 2),
            (Family::B, 2),
        ] {
            let rs = build_root_system(family, rank).unwrap();
            let got = component_types(rs.roots());
            let want = canonical_component(family, rank);
            assert_eq!(got, want, "{family}_{rank}");
        }
    }

    #[test]
    fn empty_theta_gives_hpis_and_full_theta_gives_h() {
        // For families with encoded rules, check the two limit identities.
        let samples: Vec<(&str, Vec<(&'static str, i64)>)> = vec![
            ("slC-slR", vec![("n", 6)]),
            ("slC-slR", vec![("n", 7)]),
            ("slR2-slR", vec![("n", 5)]),
            ("spR2-spR", vec![("n", 3)]),
            ("so2-so", vec![("n", 7), ("p", 2)]),
            ("so2-so", vec![("n", 6), ("p", 3)]),
            ("su2-su", vec![("n", 7), ("p", 3)]),
            ("sp2-sp", vec![("n", 6), ("p", 3)]),
            ("sonn-slR", vec![("n", 5)]),
            ("su-so", vec![("n", 8), ("p", 4)]),
        ];
        for (slug, params) in samples {
            let spec = pair(slug, &params);
            let set = local_orbit_types(&spec).unwrap();
            for block in &set.blocks {
                let (_, _, empty) = &block.rows[0];
                assert_eq!(
                    empty,
                    &Classification::Value(hpis(&spec)),
                    "{slug}: empty Θ must give the principal isotropy subalgebra"
                );
            }
        }
    }

    #[test]
    fn sp_r2_example_values() {
        // (sp(n,R)^2, sp(n,R)) at n = 3: removing the long root only.
        let spec = pair("spR2-spR", &[("n", 3)]);
        let psi = standard_simple_system(&spec.resolved.delta);
        let id = WeylElement::identity(3);
        let theta: Vec<RootVector> = psi.roots[..2].to_vec();
        let h = classify_h_theta(&spec, &id, &theta).unwrap();
        assert_eq!(h, r(1) + sl_r(3));

        // Removing e1-e2 keeps an A_1-chain and the C_2 tail.
        let theta = vec![psi.roots[1].clone(), psi.roots[2].clone()];
        let h = classify_h_theta(&spec, &id, &theta).unwrap();
        assert_eq!(h, r(1) + sp_r(2));
    }

    #[test]
    fn structural_only_families_report_descriptors() {
        let spec = pair("spC-spR", &[("n", 2)]);
        let set = local_orbit_types(&spec).unwrap();
        assert_eq!(set.blocks.len(), 4);
        for t in &set.types {
            assert!(matches!(
                t.classification,
                Classification::StructuralOnly(_)
            ));
        }
        // Witness-count identity: index * 2^rank subsets in total.
        let total: usize = set.types.iter().map(|t| t.witnesses.len()).sum();
        assert_eq!(total, 4 * 4);
    }

    #[test]
    fn elliptic_group_manifold_reduction() {
        let spec = pair("slR2-slR", &[("n", 4)]);
        let set = elliptic_orbit_types(&spec).unwrap();
        let principal = principal_type(&set).unwrap();
        assert_eq!(
            principal.classification,
            Classification::Value(r(1) + so2(2))
        );
    }

    #[test]
    fn predicted_components_match_span_components() {
        // Cross-check the positional prediction against the exact span
        // computation for every subset of every representative.
        for (slug, params) in [
            ("slC-slR", vec![("n", 6)]),
            ("su-so", vec![("n", 6), ("p", 3)]),
            ("so2-so", vec![("n", 8), ("p", 4)]),
            ("sp2-sp", vec![("n", 5), ("p", 2)]),
            ("sonn-slR", vec![("n", 4)]),
        ] {
            let spec = pair(slug, &params);
            let rank = spec.resolved.delta.rank;
            let cs = coset_reps(&spec.resolved.sub).unwrap();
            for w in &cs.reps {
                let w_psi = transformed_simple_system(&spec, w);
                for mask in 0..(1u32 << rank) {
                    let kept: BTreeSet<usize> = (0..rank)
                        .filter(|j| mask >> j & 1 == 1)
                        .map(|j| j as usize + 1)
                        .collect();
                    let theta: Vec<RootVector> =
                        kept.iter().map(|&j| w_psi[j - 1].clone()).collect();
                    let sub = delta_theta(&spec.resolved.delta, &theta);
                    let got = component_types(&sub);
                    let want = predicted_components(spec.resolved.delta.family, rank, &kept);
                    assert_eq!(got, want, "{slug} mask={mask:b}");
                }
            }
        }
    }
}
