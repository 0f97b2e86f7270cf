//! Golden verification suite: every embedded classification datum that can
//! be checked mechanically, checked mechanically.
//!
//! Items cover the index table (closed form vs brute-force group orders),
//! the explicit representative systems (against the coset oracle), the
//! low-rank worked orbit table, the recipe outputs against the principal
//! isotropy catalog, the elliptic reduction, the two limit identities of
//! every rule family, and the diagram text goldens.

use std::collections::HashMap;

use crate::cosets::{
    ambient_elements, brute_force_coset_count, coset_reps, embed_subsystem, in_subgroup,
    subgroup_elements, verify_complete_system, SubDescriptor,
};
use crate::liealg::build;
use crate::orbits::{self, local_orbit_types, principal_type, table3, Classification};
use crate::pairs::{self, catalog, hpis, lookup_pair, sweep_params, Params, ThetaRules};
use crate::rootsys::{build_root_system, reflection, Family, RootVector, WeylElement};
use crate::satake;
use crate::Result;

/// Outcome of one verification item.
#[derive(Debug, Clone)]
pub struct Item {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Item {
    fn ok(name: impl Into<String>, detail: impl Into<String>) -> Item {
        Item {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }
    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Item {
        Item {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }
    fn from(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Item {
        Item {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Run the whole suite. `max_rank` bounds the brute-force sweeps.
pub fn run_all(max_rank: u32, cap: usize) -> Vec<Item> {
    let mut items = Vec::new();
    items.extend(index_table_items(max_rank, cap));
    items.push(ten_representatives_item(cap));
    items.extend(sign_change_system_items(cap));
    items.push(low_rank_orbit_table_item());
    items.extend(recipe_items());
    items.push(elliptic_reduction_item());
    items.extend(limit_identity_items());
    items.extend(diagram_golden_items());
    items.push(catalog_json_item());
    items
}

/// Closed-form index vs brute-force `|W(Δ)| / |W(Δᵃ)|` over the whole
/// catalog, one item per family.
pub fn index_table_items(max_rank: u32, cap: usize) -> Vec<Item> {
    let mut ambient_orders: HashMap<(Family, u32), usize> = HashMap::new();
    let mut subgroup_orders: HashMap<String, usize> = HashMap::new();
    let mut items = Vec::new();
    for def in catalog() {
        let name = format!("index-table:{}", def.slug);
        let points = sweep_params(def, max_rank);
        if points.is_empty() {
            items.push(Item::fail(name, "no valid parameter points in sweep"));
            continue;
        }
        let mut checked = 0usize;
        let mut failure: Option<String> = None;
        for params in &points {
            let spec = match lookup_pair(def.slug, params) {
                Ok(s) => s,
                Err(e) => {
                    failure = Some(format!("{params}: {e}"));
                    break;
                }
            };
            let delta = &spec.resolved.delta;
            let ambient = match ambient_orders.entry((delta.family, delta.rank)) {
                std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                std::collections::hash_map::Entry::Vacant(v) => {
                    let rs = build_root_system(delta.family, delta.rank).unwrap();
                    match ambient_elements(&rs, cap) {
                        Ok(g) => *v.insert(g.len()),
                        Err(e) => {
                            failure = Some(format!("{params}: {e}"));
                            break;
                        }
                    }
                }
            };
            let key = format!(
                "{}{}:{}",
                delta.family, delta.rank, spec.resolved.sub.descriptor
            );
            let suborder = match subgroup_orders.entry(key) {
                std::collections::hash_map::Entry::Occupied(e) => *e.get(),
                std::collections::hash_map::Entry::Vacant(v) => {
                    match subgroup_elements(&spec.resolved.sub, cap) {
                        Ok(g) => *v.insert(g.len()),
                        Err(e) => {
                            failure = Some(format!("{params}: {e}"));
                            break;
                        }
                    }
                }
            };
            if ambient % suborder != 0 || (ambient / suborder) as u128 != spec.resolved.index {
                failure = Some(format!(
                    "{params}: formula {} but |W(Δ)|/|W(Δᵃ)| = {}/{}",
                    spec.resolved.index, ambient, suborder
                ));
                break;
            }
            checked += 1;
        }
        match failure {
            Some(msg) => items.push(Item::fail(name, msg)),
            None => items.push(Item::ok(name, format!("{checked} parameter points"))),
        }
    }
    items
}

/// The explicit ten-element representative system for `W(A_4)/W(A_1 x A_2)`.
pub fn ten_representatives_item(cap: usize) -> Item {
    let name = "ten-representatives:A4-A1xA2";
    let run = || -> Result<(bool, String)> {
        let a4 = build_root_system(Family::A, 4)?;
        let sub = embed_subsystem(&a4, SubDescriptor::AProduct { p: 2 })?;
        let cs = coset_reps(&sub)?;
        let s = |i: usize| reflection(&RootVector::diff(5, i, i + 1)).unwrap();
        let word = |idx: &[usize]| -> WeylElement {
            let mut w = WeylElement::identity(5);
            for &i in idx.iter().rev() {
                w = s(i).compose(&w);
            }
            w
        };
        let reference: Vec<WeylElement> = [
            vec![],
            vec![2],
            vec![1, 2],
            vec![3, 2],
            vec![1, 3, 2],
            vec![2, 1, 3, 2],
            vec![4, 3, 2],
            vec![1, 4, 3, 2],
            vec![2, 1, 4, 3, 2],
            vec![3, 2, 1, 4, 3, 2],
        ]
        .iter()
        .map(|w| word(w))
        .collect();
        let same_cosets = cs.reps.len() == 10
            && cs
                .reps
                .iter()
                .zip(&reference)
                .all(|(a, b)| in_subgroup(&a.inverse().compose(b), &sub));
        let ambient = ambient_elements(&a4, cap)?;
        let subgroup = subgroup_elements(&sub, cap)?;
        let classes = brute_force_coset_count(&ambient, &subgroup);
        let pass = same_cosets && classes == 10 && ambient.len() == 120 && subgroup.len() == 12;
        Ok((
            pass,
            format!(
                "{} representatives, {} brute-force classes, |W| = {}",
                cs.reps.len(),
                classes,
                ambient.len()
            ),
        ))
    };
    match run() {
        Ok((pass, detail)) => Item::from(name, pass, detail),
        Err(e) => Item::fail(name, e.to_string()),
    }
}

/// Sign-change representative systems against the oracle, ranks ≤ 5.
pub fn sign_change_system_items(cap: usize) -> Vec<Item> {
    let mut items = Vec::new();
    let mut check = |name: String, family: Family, rank: u32, desc: SubDescriptor| {
        let run = || -> Result<(bool, String)> {
            let rs = build_root_system(family, rank)?;
            let sub = embed_subsystem(&rs, desc)?;
            let cs = coset_reps(&sub)?;
            let report = verify_complete_system(&cs, cap)?;
            Ok((
                report.passed(),
                format!(
                    "{} representatives, |W(Δ)| = {}, |W(Δᵃ)| = {}",
                    report.count, report.ambient_order, report.subgroup_order
                ),
            ))
        };
        items.push(match run() {
            Ok((pass, detail)) => Item::from(name, pass, detail),
            Err(e) => Item::fail(name, e.to_string()),
        });
    };
    for n in 1..=5u32 {
        check(
            format!("sign-changes:C{n}-A{}", n - 1),
            Family::C,
            n,
            SubDescriptor::TypeA,
        );
        check(
            format!("two-cosets:C{n}-D{n}"),
            Family::C,
            n,
            SubDescriptor::SingleD,
        );
        if n >= 2 {
            check(
                format!("even-sign-changes:D{n}-A{}", n - 1),
                Family::D,
                n,
                SubDescriptor::TypeA,
            );
        }
    }
    items
}

/// The 48-row worked orbit table at `(sl(4,R), so(2,2))`.
pub fn low_rank_orbit_table_item() -> Item {
    let name = "orbit-table:sl4R-so22";
    let run = || -> Result<(bool, String)> {
        let spec = lookup_pair("slR-so", &Params::new(&[("n", 4), ("p", 2)]))?;
        let set = local_orbit_types(&spec)?;
        if set.blocks.len() != 6 {
            return Ok((false, format!("{} blocks, expected 6", set.blocks.len())));
        }
        let mut rows = 0;
        for (bi, golden) in table3::SL4_BLOCKS.iter().enumerate() {
            let block = &set.blocks[bi];
            if block.w != table3::block_element(golden.word) {
                return Ok((false, format!("block {bi}: unexpected representative")));
            }
            for (j, root) in golden.w_psi.iter().enumerate() {
                if block.w_psi[j] != RootVector(root.to_vec()) {
                    return Ok((false, format!("block {bi}: transformed system differs")));
                }
            }
            for (mask, _, classification) in &block.rows {
                let expected = table3::parse_so_sum(golden.values[*mask as usize]);
                if classification != &Classification::Value(expected) {
                    return Ok((false, format!("block {bi}, mask {mask}: value differs")));
                }
                rows += 1;
            }
        }
        let distinct = set.types.len();
        Ok((
            rows == 48 && distinct == 9,
            format!("{rows} rows verified, {distinct} merged types"),
        ))
    };
    match run() {
        Ok((pass, detail)) => Item::from(name, pass, detail),
        Err(e) => Item::fail(name, e.to_string()),
    }
}

/// Recipe outputs against the catalog values for all encoded triples.
pub fn recipe_items() -> Vec<Item> {
    let mut items = Vec::new();
    let mut check = |name: String, slug: &str, params: Params| {
        let run = || -> Result<(bool, String)> {
            let spec = lookup_pair(slug, &params)?;
            let triple = satake::triple_for(slug, &params)?;
            let trace = satake::recipe_run(&triple)?;
            let expected = hpis(&spec);
            Ok((
                trace.z_h == expected,
                format!("recipe {} vs catalog {}", trace.z_h, expected),
            ))
        };
        items.push(match run() {
            Ok((pass, detail)) => Item::from(name, pass, detail),
            Err(e) => Item::fail(name, e.to_string()),
        });
    };
    for p in 1..=3i64 {
        for n in (2 * p)..=8 {
            check(
                format!("recipe:su-sp n={n} p={p}"),
                "su-sp",
                Params::new(&[("n", n), ("p", p)]),
            );
        }
    }
    for n in 2..=8i64 {
        check(
            format!("recipe:slC-slR n={n}"),
            "slC-slR",
            Params::new(&[("n", n)]),
        );
    }
    for (n, p) in [(4, 2), (5, 1), (6, 3)] {
        check(
            format!("recipe:slR-so n={n} p={p}"),
            "slR-so",
            Params::new(&[("n", n), ("p", p)]),
        );
    }
    items
}

/// Elliptic principal types of the group manifold family via the c-dual.
pub fn elliptic_reduction_item() -> Item {
    let name = "elliptic-principal:slR2-slR";
    let run = || -> Result<(bool, String)> {
        for n in 2..=8i64 {
            let spec = lookup_pair("slR2-slR", &Params::new(&[("n", n)]))?;
            let set = orbits::elliptic_orbit_types(&spec)?;
            let principal = principal_type(&set)
                .ok_or_else(|| crate::Error::UnsupportedFamily("no principal type".into()))?;
            let expected = Classification::Value(build::r((n - 1) / 2) + build::so2(n / 2));
            if principal.classification != expected {
                return Ok((
                    false,
                    format!("n={n}: {}", principal.classification.render()),
                ));
            }
        }
        Ok((true, "n = 2..8".into()))
    };
    match run() {
        Ok((pass, detail)) => Item::from(name, pass, detail),
        Err(e) => Item::fail(name, e.to_string()),
    }
}

/// Up to three parameter points for every family that carries rule rows.
pub fn rule_family_samples() -> Vec<(&'static str, Params)> {
    let mut out = Vec::new();
    for def in catalog() {
        let points = sweep_params(def, 5);
        let mut taken = 0;
        for params in points {
            let spec = lookup_pair(def.slug, &params).unwrap();
            if spec.resolved.rules.is_some() && spec.resolved.delta.rank >= 1 {
                out.push((def.slug, params));
                taken += 1;
                if taken == 3 {
                    break;
                }
            }
        }
    }
    out
}

/// The two limit identities for every rule family: the empty subset gives
/// the principal isotropy subalgebra; the full subset gives the same value
/// in every block and a classified value at all.
pub fn limit_identity_items() -> Vec<Item> {
    let mut items = Vec::new();
    let mut by_family: HashMap<&'static str, (usize, Option<String>)> = HashMap::new();
    for (slug, params) in rule_family_samples() {
        let spec = lookup_pair(slug, &params).unwrap();
        let entry = by_family.entry(slug).or_insert((0, None));
        let run = || -> Result<Option<String>> {
            let set = local_orbit_types(&spec)?;
            let full_mask = (1u32 << spec.resolved.delta.rank) - 1;
            let mut full_values = Vec::new();
            for block in &set.blocks {
                let empty = &block.rows[0].2;
                if empty != &Classification::Value(hpis(&spec)) {
                    return Ok(Some(format!("{params}: Θ=∅ gave {}", empty.render())));
                }
                match &block.rows[full_mask as usize].2 {
                    Classification::Value(v) => full_values.push(v.clone()),
                    other => return Ok(Some(format!("{params}: Θ=w·Ψ gave {}", other.render()))),
                }
            }
            if full_values.windows(2).any(|w| w[0] != w[1]) {
                return Ok(Some(format!("{params}: Θ=w·Ψ differs between blocks")));
            }
            if matches!(spec.resolved.rules, Some(ThetaRules::Sl4RSo22))
                && full_values[0] != build::so(2, 2)
            {
                return Ok(Some(format!("{params}: Θ=w·Ψ is not the expected h")));
            }
            Ok(None)
        };
        match run() {
            Ok(None) => entry.0 += 1,
            Ok(Some(msg)) => entry.1 = Some(msg),
            Err(e) => entry.1 = Some(e.to_string()),
        }
    }
    let mut slugs: Vec<_> = by_family.keys().copied().collect();
    slugs.sort();
    for slug in slugs {
        let (count, failure) = &by_family[slug];
        let name = format!("limit-identities:{slug}");
        match failure {
            Some(msg) => items.push(Item::fail(name, msg.clone())),
            None => items.push(Item::ok(name, format!("{count} parameter points"))),
        }
    }
    items
}

/// Embedded golden diagram files, with an environment override directory.
pub fn diagram_golden_items() -> Vec<Item> {
    let embedded: [(&str, &str); 5] = [
        (
            "su-sp_n3_p1",
            include_str!("../data/satake/su-sp_n3_p1.txt"),
        ),
        (
            "su-sp_n4_p2",
            include_str!("../data/satake/su-sp_n4_p2.txt"),
        ),
        ("slC-slR_n4", include_str!("../data/satake/slC-slR_n4.txt")),
        ("slC-slR_n5", include_str!("../data/satake/slC-slR_n5.txt")),
        (
            "slR-so_n4_p2",
            include_str!("../data/satake/slR-so_n4_p2.txt"),
        ),
    ];
    let builders: HashMap<&str, satake::SatakeTriple> = [
        ("su-sp_n3_p1", satake::triple_su_sp(3, 1).unwrap()),
        ("su-sp_n4_p2", satake::triple_su_sp(4, 2).unwrap()),
        ("slC-slR_n4", satake::triple_slc_slr(4).unwrap()),
        ("slC-slR_n5", satake::triple_slc_slr(5).unwrap()),
        ("slR-so_n4_p2", satake::triple_slr_so(4, 2).unwrap()),
    ]
    .into_iter()
    .collect();

    let override_dir = std::env::var("SREP_GOLDEN_DIR").ok();
    let mut items = Vec::new();
    for (name, embedded_text) in embedded {
        let item_name = format!("diagram-golden:{name}");
        let text = match &override_dir {
            Some(dir) => match std::fs::read_to_string(format!("{dir}/{name}.txt")) {
                Ok(t) => t,
                Err(e) => {
                    items.push(Item::fail(item_name, format!("override read failed: {e}")));
                    continue;
                }
            },
            None => embedded_text.to_string(),
        };
        let run = || -> Result<(bool, String)> {
            let parsed = satake::parse_triple(&text)?;
            let built = &builders[name];
            let bit_exact = text == satake::render_triple(built);
            let same = satake::render_triple(&parsed) == satake::render_triple(built);
            Ok((
                same && bit_exact,
                if bit_exact {
                    "bit-exact".into()
                } else {
                    "file differs from the builder output".into()
                },
            ))
        };
        items.push(match run() {
            Ok((pass, detail)) => Item::from(item_name, pass, detail),
            Err(e) => Item::fail(item_name, e.to_string()),
        });
    }
    items
}

/// Catalog JSON is well-formed and covers the whole catalog.
pub fn catalog_json_item() -> Item {
    let value = pairs::catalog_json();
    let rows = value.as_array().map(|a| a.len()).unwrap_or(0);
    Item::from(
        "catalog-json",
        rows == catalog().len(),
        format!("{rows} rows"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DEFAULT_GROUP_CAP;

    #[test]
    fn quick_suite_passes() {
        // Smaller rank bound keeps the unit test fast; the acceptance suite
        // runs the full sweep.
        let mut items = Vec::new();
        items.extend(index_table_items(3, DEFAULT_GROUP_CAP));
        items.push(ten_representatives_item(DEFAULT_GROUP_CAP));
        items.push(low_rank_orbit_table_item());
        items.push(elliptic_reduction_item());
        items.push(catalog_json_item());
        for item in &items {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }

    #[test]
    fn diagram_goldens_are_bit_exact() {
        for item in diagram_golden_items() {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }

    #[test]
    fn limit_identities_hold_for_every_rule_family() {
        let items = limit_identity_items();
        assert!(!items.is_empty());
        for item in &items {
            assert!(item.passed, "{}: {}", item.name, item.detail);
        }
    }
}
