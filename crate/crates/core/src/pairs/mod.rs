//! Catalog of the classical semisimple symmetric pairs: restricted root
//! system types, `Δᵃ` subsystem, coset index formulas, hyperbolic principal
//! isotropy subalgebras, signature data where available, orbit-type rules,
//! and c-dual links.

mod catalog;
pub mod rules;

use serde_json::json;

use crate::cosets::{coset_index, EmbeddedSubsystem};
use crate::liealg::{LieAlgebraExpr, Style};
use crate::rootsys::{build_root_system, RootSystem, RootVector};
use crate::{Error, Result};

pub use rules::ThetaRules;

/// Named integer parameters of a pair, e.g. `n = 5, p = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Params(Vec<(&'static str, i64)>);

impl Params {
    pub fn new(values: &[(&'static str, i64)]) -> Params {
        Params(values.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn require(&self, name: &str, pair: &str) -> Result<i64> {
        self.get(name).ok_or_else(|| Error::ConstraintViolated {
            pair: pair.to_string(),
            detail: format!("missing parameter {name}"),
        })
    }

    pub fn entries(&self) -> &[(&'static str, i64)] {
        &self.0
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Signature data encoded for a pair: `(m⁺, m⁻)` on each simple root, to be
/// extended multiplicatively (all encoded pairs have multiplicity-one roots).
#[derive(Debug, Clone)]
pub struct SimpleRootSigns(pub Vec<(u32, u32)>);

/// A pair resolved at concrete parameters.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub g_display: String,
    pub h_display: String,
    pub delta: RootSystem,
    pub sub: EmbeddedSubsystem,
    pub index: u128,
    pub index_formula: String,
    pub hpis: LieAlgebraExpr,
    pub case_remark: String,
    pub rules: Option<ThetaRules>,
    pub simple_signs: Option<SimpleRootSigns>,
}

/// A catalog family (one table row schema, parameterized).
pub struct FamilyDef {
    pub slug: &'static str,
    pub g_sym: &'static str,
    pub h_sym: &'static str,
    pub param_names: &'static [&'static str],
    pub delta_sym: &'static str,
    pub delta_a_sym: &'static str,
    pub index_sym: &'static str,
    pub hpis_sym: &'static str,
    pub remarks: &'static str,
    pub(crate) resolve: fn(&Params) -> Result<Resolved>,
}

impl std::fmt::Debug for FamilyDef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FamilyDef({})", self.slug)
    }
}

/// A fully resolved pair instance.
#[derive(Debug)]
pub struct SymmetricPairSpec {
    pub family: &'static FamilyDef,
    pub params: Params,
    pub resolved: Resolved,
}

impl SymmetricPairSpec {
    pub fn display(&self) -> String {
        format!("({}, {})", self.resolved.g_display, self.resolved.h_display)
    }
}

/// The whole catalog, in stable order.
pub fn catalog() -> &'static [FamilyDef] {
    catalog::families()
}

pub fn family(slug: &str) -> Result<&'static FamilyDef> {
    catalog()
        .iter()
        .find(|f| f.slug == slug)
        .ok_or_else(|| Error::UnknownPair(slug.to_string()))
}

/// Resolve a pair at concrete parameters, validating constraints.
pub fn lookup_pair(slug: &str, params: &Params) -> Result<SymmetricPairSpec> {
    let def = family(slug)?;
    for name in def.param_names {
        if params.get(name).is_none() {
            return Err(Error::ConstraintViolated {
                pair: slug.to_string(),
                detail: format!("missing parameter {name}"),
            });
        }
    }
    let resolved = (def.resolve)(params)?;
    Ok(SymmetricPairSpec {
        family: def,
        params: params.clone(),
        resolved,
    })
}

/// The hyperbolic principal isotropy subalgebra of a resolved pair.
pub fn hpis(spec: &SymmetricPairSpec) -> LieAlgebraExpr {
    spec.resolved.hpis.clone()
}

/// Full signature table: `(m⁺, m⁻)` for every positive root.
///
/// Available only for pairs with encoded simple-root signature data; other
/// pairs report `SignatureDataUnavailable` (their `Δᵃ`-support is always
/// available through [`delta_a_support`]).
pub fn signatures(spec: &SymmetricPairSpec) -> Result<Vec<(RootVector, (u32, u32))>> {
    let signs = spec
        .resolved
        .simple_signs
        .as_ref()
        .ok_or_else(|| Error::SignatureDataUnavailable(spec.display()))?;
    let simple = crate::rootsys::standard_simple_system(&spec.resolved.delta);
    let mut out = Vec::new();
    for root in spec.resolved.delta.positive_roots() {
        let coeffs =
            express_in_basis(&root, &simple.roots).ok_or_else(|| Error::ConstraintViolated {
                pair: spec.display(),
                detail: format!("{root} is not a combination of the simple system"),
            })?;
        let mut sign = 1i64;
        for (c, &(mp, mm)) in coeffs.iter().zip(&signs.0) {
            let eps = if mp > 0 { 1 } else { -1 };
            if c % 2 != 0 {
                sign *= eps;
            }
            let _ = mm;
        }
        let entry = if sign > 0 { (1, 0) } else { (0, 1) };
        out.push((root, entry));
    }
    Ok(out)
}

/// Membership of a root in `Δᵃ` (the positive-signature support).
pub fn delta_a_support(spec: &SymmetricPairSpec, root: &RootVector) -> bool {
    spec.resolved.sub.sub_roots.binary_search(root).is_ok()
}

fn express_in_basis(root: &RootVector, basis: &[RootVector]) -> Option<Vec<i64>> {
    // The standard simple systems are triangular enough for greedy peeling:
    // repeatedly subtract the simple root whose leading coordinate matches.
    // Exact integer search over small coefficient boxes is simplest here.
    fn search(
        target: &RootVector,
        basis: &[RootVector],
        idx: usize,
        acc: &mut Vec<i64>,
    ) -> Option<Vec<i64>> {
        if idx == basis.len() {
            let mut v = target.clone();
            for (c, b) in acc.iter().zip(basis) {
                for (vi, bi) in v.0.iter_mut().zip(&b.0) {
                    *vi -= (*c as i32) * bi;
                }
            }
            return v.is_zero().then(|| acc.clone());
        }
        for c in -4..=4i64 {
            acc.push(c);
            if let Some(found) = search(target, basis, idx + 1, acc) {
                return Some(found);
            }
            acc.pop();
        }
        None
    }
    search(root, basis, 0, &mut Vec::new())
}

/// The c-dual pair `(h + √-1·q, h)` when it is in the catalog.
pub fn c_dual(spec: &SymmetricPairSpec) -> Result<SymmetricPairSpec> {
    let links: &[(&str, &str)] = &[
        ("slR2-slR", "slC-slR"),
        ("sustar2-sustar", "slC-sustar"),
        ("su2-su", "slC-su"),
        ("so2-so", "soC-so"),
        ("sostar2-sostar", "soC-sostar"),
        ("spR2-spR", "spC-spR"),
        ("sp2-sp", "spC-sp"),
        ("slR-so", "su-so"),
        ("slR-spR", "sunn-spR"),
    ];
    let slug = spec.family.slug;
    let dual = links
        .iter()
        .find_map(|&(a, b)| {
            if a == slug {
                Some(b)
            } else if b == slug {
                Some(a)
            } else {
                None
            }
        })
        .ok_or_else(|| Error::UnknownPair(format!("{} has no encoded c-dual", spec.display())))?;
    lookup_pair(dual, &spec.params)
}

/// Stable JSON document describing the whole catalog.
pub fn catalog_json() -> serde_json::Value {
    json!(catalog()
        .iter()
        .map(|f| {
            json!({
                "slug": f.slug,
                "g": f.g_sym,
                "h": f.h_sym,
                "params": f.param_names,
                "delta": f.delta_sym,
                "delta_a": f.delta_a_sym,
                "index": f.index_sym,
                "hpis": f.hpis_sym,
                "remarks": f.remarks,
            })
        })
        .collect::<Vec<_>>())
}

/// JSON description of one resolved instance.
pub fn instance_json(spec: &SymmetricPairSpec) -> serde_json::Value {
    json!({
        "slug": spec.family.slug,
        "pair": spec.display(),
        "params": spec.params.entries().iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
        "delta": format!("{}{}", spec.resolved.delta.family, spec.resolved.delta.rank),
        "delta_a": spec.resolved.sub.label,
        "index": spec.resolved.index.to_string(),
        "index_formula": spec.resolved.index_formula,
        "hpis": spec.resolved.hpis.render(Style::Unicode),
        "hpis_json": spec.resolved.hpis.to_json(),
        "remark": spec.resolved.case_remark,
        "has_theta_rules": spec.resolved.rules.is_some(),
    })
}

/// Enumerate all valid parameter points of a family whose restricted root
/// system has rank at most `max_rank` (used by sweeps and verification).
pub fn sweep_params(def: &FamilyDef, max_rank: u32) -> Vec<Params> {
    let mut out = Vec::new();
    let limit = (2 * max_rank as i64 + 2).max(10);
    let mut push = |params: Params| {
        if let Ok(resolved) = (def.resolve)(&params) {
            if resolved.delta.rank <= max_rank {
                out.push(params);
            }
        }
    };
    match def.param_names {
        ["n"] => {
            for n in 1..=limit {
                push(Params::new(&[("n", n)]));
            }
        }
        ["n", "p"] => {
            for n in 1..=limit {
                for p in 0..=n {
                    push(Params::new(&[("n", n), ("p", p)]));
                }
            }
        }
        ["n", "m", "i", "j"] => {
            let cap = (max_rank as i64 + 2).min(8);
            for n in 1..=cap {
                for m in n..=cap {
                    for i in 0..=n {
                        for j in 0..=m {
                            push(Params::new(&[("n", n), ("m", m), ("i", i), ("j", j)]));
                        }
                    }
                }
            }
        }
        other => panic!("unexpected parameter schema {other:?}"),
    }
    out
}

/// Helper for resolvers: build the root system and embed the subsystem.
pub(crate) fn make_pair(
    fam: crate::rootsys::Family,
    rank: u32,
    desc: crate::cosets::SubDescriptor,
) -> Result<(RootSystem, EmbeddedSubsystem, u128)> {
    let delta = build_root_system(fam, rank)?;
    let sub = crate::cosets::embed_subsystem(&delta, desc)?;
    let index = coset_index(&sub);
    Ok((delta, sub, index))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(slug: &str, params: &[(&'static str, i64)]) -> SymmetricPairSpec {
        lookup_pair(slug, &Params::new(params)).unwrap()
    }

    #[test]
    fn signature_table_for_the_worked_pair() {
        let spec = pair("slR-so", &[("n", 4), ("p", 2)]);
        let table = signatures(&spec).unwrap();
        let lookup = |root: RootVector| -> (u32, u32) {
            table
                .iter()
                .find(|(r, _)| *r == root)
                .map(|&(_, s)| s)
                .unwrap()
        };
        assert_eq!(lookup(RootVector::diff(4, 1, 2)), (1, 0));
        assert_eq!(lookup(RootVector::diff(4, 2, 3)), (0, 1));
        assert_eq!(lookup(RootVector::diff(4, 3, 4)), (1, 0));
        // Multiplicative extension to the non-simple roots.
        assert_eq!(lookup(RootVector::diff(4, 1, 3)), (0, 1));
        assert_eq!(lookup(RootVector::diff(4, 1, 4)), (0, 1));
        assert_eq!(lookup(RootVector::diff(4, 2, 4)), (0, 1));

        // The induced positive-signature support is exactly the embedded
        // subsystem of the catalog row.
        let induced: Vec<RootVector> = table
            .iter()
            .filter(|(_, (mp, _))| *mp > 0)
            .flat_map(|(r, _)| [r.clone(), r.neg()])
            .collect();
        for r in &induced {
            assert!(delta_a_support(&spec, r), "{r} should be in the support");
        }
        assert_eq!(induced.len(), spec.resolved.sub.sub_roots.len());
    }

    #[test]
    fn signature_support_without_exact_data() {
        let spec = pair("spC-spR", &[("n", 3)]);
        assert!(matches!(
            signatures(&spec),
            Err(Error::SignatureDataUnavailable(_))
        ));
        // Support is the permutation subsystem: differences in, long roots out.
        assert!(delta_a_support(&spec, &RootVector::diff(3, 1, 2)));
        assert!(!delta_a_support(&spec, &RootVector::unit(3, 1, 2)));
    }

    #[test]
    fn c_dual_links() {
        let spec = pair("slR2-slR", &[("n", 5)]);
        let dual = c_dual(&spec).unwrap();
        assert_eq!(dual.family.slug, "slC-slR");
        let back = c_dual(&dual).unwrap();
        assert_eq!(back.family.slug, "slR2-slR");

        let spec = pair("su2-su", &[("n", 5), ("p", 2)]);
        let dual = c_dual(&spec).unwrap();
        assert_eq!(dual.family.slug, "slC-su");
        assert_eq!(dual.resolved.index, 10);

        let spec = pair("slR-so", &[("n", 4), ("p", 2)]);
        let dual = c_dual(&spec).unwrap();
        assert_eq!(dual.family.slug, "su-so");

        let spec = pair("slC-soC", &[("n", 4)]);
        assert!(matches!(c_dual(&spec), Err(Error::UnknownPair(_))));
    }

    #[test]
    fn catalog_json_shape() {
        let value = catalog_json();
        let rows = value.as_array().unwrap();
        assert_eq!(rows.len(), catalog().len());
        assert_eq!(rows[0]["slug"], "slC-slR");
        for row in rows {
            for key in [
                "slug", "g", "h", "params", "delta", "delta_a", "index", "hpis",
            ] {
                assert!(!row[key].is_null(), "missing {key}");
            }
        }
    }

    #[test]
    fn instance_json_includes_resolution() {
        let spec = pair("spC-spR", &[("n", 4)]);
        let value = instance_json(&spec);
        assert_eq!(value["index"], "16");
        assert_eq!(value["delta"], "C4");
        assert_eq!(value["has_theta_rules"], false);
    }

    #[test]
    fn sweeps_respect_rank_bound() {
        for def in catalog() {
            for params in sweep_params(def, 4) {
                let spec = lookup_pair(def.slug, &params).unwrap();
                assert!(spec.resolved.delta.rank <= 4, "{} {params}", def.slug);
            }
        }
    }
}
