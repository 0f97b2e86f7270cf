//! Satake diagrams and the recipe that computes hyperbolic principal
//! isotropy subalgebras from a compatible triple of diagrams.
//!
//! A triple carries three colorings of the same Dynkin graph — with respect
//! to the split part `a`, the maximal part `a_q` of `q`, and the maximal
//! part `a_p` of `p` — together with the four rank invariants and the two
//! semisimple toral dimensions that the bookkeeping step consumes. The
//! engine walks the black components of the `a`-diagram, decides the case
//! of each from blackness and arrow-invariance in the other two diagrams,
//! reads off one factor per component (or component pair), and assembles
//! the centralizer from the factors plus the abelian part.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde_json::json;

use crate::liealg::{build, LieAlgebraExpr, Style};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Diagrams.
// ---------------------------------------------------------------------------

/// A Satake diagram: a classical Dynkin graph with black nodes and a partial
/// arrow involution on white nodes. For `a`-diagrams of complex-type pairs,
/// restriction classes can have more than two members; those are stored as
/// plain node groups in `classes` and are never consumed by the recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeDiagram {
    pub nodes: usize,
    /// Edges `(a, b, multiplicity)`, 1-based, `a < b`.
    pub edges: Vec<(usize, usize, u8)>,
    pub black: BTreeSet<usize>,
    /// Arrow pairs `(a, b)`, `a < b`, both white.
    pub arrows: Vec<(usize, usize)>,
    /// Restriction classes of size > 2 (informational).
    pub classes: Vec<Vec<usize>>,
}

impl SatakeDiagram {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(msg));
        for &(a, b, m) in &self.edges {
            if a == 0 || b == 0 || a > self.nodes || b > self.nodes || a >= b || m == 0 || m > 3 {
                return bad(format!("bad edge {a}-{b}:{m}"));
            }
        }
        for &n in &self.black {
            if n == 0 || n > self.nodes {
                return bad(format!("black node {n} out of range"));
            }
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.arrows {
            if a == b {
                return bad(format!("arrow {a}-{b} is a fixed point"));
            }
            if self.black.contains(&a) || self.black.contains(&b) {
                return bad(format!("arrow {a}-{b} touches a black node"));
            }
            if !seen.insert(a) || !seen.insert(b) {
                return bad(format!("node in two arrows near {a}-{b}"));
            }
        }
        Ok(())
    }

    /// Arrow partner of a white node (itself when no arrow).
    pub fn involution(&self, n: usize) -> usize {
        for &(a, b) in &self.arrows {
            if a == n {
                return b;
            }
            if b == n {
                return a;
            }
        }
        n
    }

    pub fn neighbors(&self, n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b, _) in &self.edges {
            if a == n {
                out.push(b);
            } else if b == n {
                out.push(a);
            }
        }
        out
    }

    /// Connected components of the black node set under the graph edges.
    pub fn black_components(&self) -> Vec<BTreeSet<usize>> {
        let mut remaining: BTreeSet<usize> = self.black.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = vec![start];
            remaining.remove(&start);
            comp.insert(start);
            while let Some(x) = queue.pop() {
                for y in self.neighbors(x) {
                    if remaining.contains(&y) {
                        remaining.remove(&y);
                        comp.insert(y);
                        queue.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out.sort_by_key(|c| *c.iter().next().unwrap());
        out
    }
}

/// Rank invariants of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ranks {
    pub rank_gc: i64,
    pub rank_gh: i64,
    pub rank_gk: i64,
    pub s_rank: i64,
}

/// Toral dimensions of the semisimple part, carried as input data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToralData {
    pub s_kh: i64,
    pub s_ph: i64,
}

/// A compatible triple of Satake diagrams plus the bookkeeping data.
#[derive(Debug, Clone)]
pub struct SatakeTriple {
    pub label: String,
    pub d_a: SatakeDiagram,
    pub d_q: SatakeDiagram,
    pub d_p: SatakeDiagram,
    pub ranks: Ranks,
    pub toral: ToralData,
}

impl SatakeTriple {
    pub fn validate(&self) -> Result<()> {
        self.d_a.validate()?;
        self.d_q.validate()?;
        self.d_p.validate()?;
        let same_graph = self.d_a.nodes == self.d_q.nodes
            && self.d_a.nodes == self.d_p.nodes
            && self.d_a.edges == self.d_q.edges
            && self.d_a.edges == self.d_p.edges;
        if !same_graph {
            return Err(Error::Parse(
                "the three diagrams must share one Dynkin graph".into(),
            ));
        }
        if !self.d_q.black.is_subset(&self.d_a.black) || !self.d_p.black.is_subset(&self.d_a.black)
        {
            return Err(Error::Parse(
                "maximal-diagram black nodes must be black in the a-diagram".into(),
            ));
        }
        // Arrow involution of the p-diagram must close on the white nodes that
        // are disconnected from its black part.
        let disconnected: BTreeSet<usize> = (1..=self.d_p.nodes)
            .filter(|n| {
                !self.d_p.black.contains(n)
                    && self
                        .d_p
                        .neighbors(*n)
                        .iter()
                        .all(|m| !self.d_p.black.contains(m))
            })
            .collect();
        for &n in &disconnected {
            let partner = self.d_p.involution(n);
            if !disconnected.contains(&partner) {
                return Err(Error::Parse(format!(
                    "p-diagram arrow at node {n} leaves the black-disconnected set"
                )));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Component cases.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    Case1,
    Case2,
    Case3,
    Case5,
    Case6,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CaseTag::Case1 => "Case 1",
            CaseTag::Case2 => "Case 2",
            CaseTag::Case3 => "Case 3",
            CaseTag::Case5 => "Case 5",
            CaseTag::Case6 => "Case 6",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct ComponentCase {
    pub component: BTreeSet<usize>,
    pub case: CaseTag,
}

/// Connected components of the `a`-diagram's black set.
pub fn components_phi0(triple: &SatakeTriple) -> Vec<BTreeSet<usize>> {
    triple.d_a.black_components()
}

fn invariant_under(diagram: &SatakeDiagram, set: &BTreeSet<usize>) -> bool {
    set.iter().all(|&n| set.contains(&diagram.involution(n)))
}

/// Decide which case a black component belongs to.
pub fn classify_component(
    triple: &SatakeTriple,
    component: &BTreeSet<usize>,
) -> Result<ComponentCase> {
    let black_q: BTreeSet<usize> = component
        .iter()
        .copied()
        .filter(|n| triple.d_q.black.contains(n))
        .collect();
    let black_p: BTreeSet<usize> = component
        .iter()
        .copied()
        .filter(|n| triple.d_p.black.contains(n))
        .collect();
    let diff_p: BTreeSet<usize> = component.difference(&black_p).copied().collect();
    let diff_q: BTreeSet<usize> = component.difference(&black_q).copied().collect();

    let tag = if diff_p.is_empty() && diff_q.is_empty() {
        CaseTag::Case1
    } else {
        let inv_p = !diff_p.is_empty() && invariant_under(&triple.d_p, &diff_p);
        let inv_q = !diff_q.is_empty() && invariant_under(&triple.d_q, &diff_q);
        if inv_p && inv_q {
            return Err(Error::Case4Detected);
        } else if inv_p && diff_q.is_empty() {
            CaseTag::Case2
        } else if inv_q && diff_p.is_empty() {
            CaseTag::Case3
        } else if !diff_p.is_empty() && !invariant_under(&triple.d_p, &diff_p) {
            CaseTag::Case5
        } else if !diff_q.is_empty() && !invariant_under(&triple.d_q, &diff_q) {
            CaseTag::Case6
        } else {
            return Err(Error::UnknownDiagramClassification(format!(
                "component {component:?} fits no case"
            )));
        }
    };
    Ok(ComponentCase {
        component: component.clone(),
        case: tag,
    })
}

// ---------------------------------------------------------------------------
// Dynkin type detection and real-form lookup.
// ---------------------------------------------------------------------------

/// Classical Dynkin type of a connected induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
}

/// Detect the type of a connected node set; the nodes are returned in chain
/// order so callers can map positions.
fn detect_type(
    diagram: &SatakeDiagram,
    nodes: &BTreeSet<usize>,
) -> Result<(DynkinType, Vec<usize>)> {
    let r = nodes.len() as u32;
    let in_set = |n: usize| nodes.contains(&n);
    let degree = |n: usize| {
        diagram
            .neighbors(n)
            .into_iter()
            .filter(|&m| in_set(m))
            .count()
    };
    let edge_mult = |a: usize, b: usize| -> u8 {
        diagram
            .edges
            .iter()
            .find_map(|&(x, y, m)| ((x, y) == (a.min(b), a.max(b))).then_some(m))
            .unwrap_or(0)
    };
    if r == 1 {
        let n = *nodes.iter().next().unwrap();
        return Ok((DynkinType::A(1), vec![n]));
    }
    let branch_nodes: Vec<usize> = nodes.iter().copied().filter(|&n| degree(n) >= 3).collect();
    if branch_nodes.len() > 1 {
        return Err(Error::UnknownDiagramClassification(
            "multiple branch nodes".into(),
        ));
    }
    if let Some(&branch) = branch_nodes.first() {
        // Type D: a chain with two extra leaves at one end.
        let leaves: Vec<usize> = diagram
            .neighbors(branch)
            .into_iter()
            .filter(|&m| in_set(m) && degree(m) == 1)
            .collect();
        if leaves.len() < 2 {
            return Err(Error::UnknownDiagramClassification("bad branch".into()));
        }
        let mut order: Vec<usize> = Vec::new();
        let mut prev = branch;
        let mut current = diagram
            .neighbors(branch)
            .into_iter()
            .find(|&m| in_set(m) && !leaves.contains(&m));
        let mut tail = Vec::new();
        while let Some(c) = current {
            tail.push(c);
            let next = diagram
                .neighbors(c)
                .into_iter()
                .find(|&m| in_set(m) && m != prev);
            prev = c;
            current = next;
        }
        tail.reverse();
        order.extend(tail);
        order.push(branch);
        order.extend([leaves[0], leaves[1]]);
        return Ok((DynkinType::D(r), order));
    }
    // A chain: find the two endpoints, walk from one.
    let ends: Vec<usize> = nodes.iter().copied().filter(|&n| degree(n) <= 1).collect();
    if ends.len() != 2 {
        return Err(Error::UnknownDiagramClassification("not a chain".into()));
    }
    let mut order = vec![ends[0].min(ends[1])];
    while order.len() < nodes.len() {
        let last = *order.last().unwrap();
        let next = diagram
            .neighbors(last)
            .into_iter()
            .find(|&m| in_set(m) && !order.contains(&m))
            .ok_or_else(|| Error::UnknownDiagramClassification("broken chain".into()))?;
        order.push(next);
    }
    let multiplicities: Vec<u8> = order.windows(2).map(|w| edge_mult(w[0], w[1])).collect();
    if multiplicities.iter().all(|&m| m == 1) {
        return Ok((DynkinType::A(r), order));
    }
    if multiplicities[..multiplicities.len() - 1]
        .iter()
        .all(|&m| m == 1)
    {
        // Convention: the doubled final edge is stored with multiplicity 2
        // when the end root is short (type B) and 3 when it is long (type C).
        let last = *multiplicities.last().unwrap();
        if last == 2 {
            return Ok((DynkinType::B(r), order));
        }
        if last == 3 {
            return Ok((DynkinType::C(r), order));
        }
    }
    Err(Error::UnknownDiagramClassification(
        "unsupported edge pattern".into(),
    ))
}

fn compact_form(t: DynkinType) -> LieAlgebraExpr {
    match t {
        DynkinType::A(r) => build::su_c(r as i64 + 1),
        DynkinType::B(r) => build::so_compact(2 * r as i64 + 1),
        DynkinType::C(r) => build::sp_compact(r as i64),
        DynkinType::D(r) => build::so_compact(2 * r as i64),
    }
}

fn complex_form(t: DynkinType) -> LieAlgebraExpr {
    match t {
        DynkinType::A(r) => build::sl_c(r as i64 + 1),
        DynkinType::B(r) => build::so_c(2 * r as i64 + 1),
        DynkinType::C(r) => build::sp_c(r as i64),
        DynkinType::D(r) => build::so_c(2 * r as i64),
    }
}

/// A classified real form with its maximal compact subalgebra.
#[derive(Debug, Clone)]
pub struct RealForm {
    pub algebra: LieAlgebraExpr,
    pub max_compact: LieAlgebraExpr,
}

/// Classify an induced Satake diagram (component, black subset, arrow pairs
/// within the component) against the classical patterns.
pub fn classify_real_form(
    diagram: &SatakeDiagram,
    component: &BTreeSet<usize>,
    black: &BTreeSet<usize>,
    arrows: &[(usize, usize)],
) -> Result<RealForm> {
    let (dynkin, order) = detect_type(diagram, component)?;
    let r = component.len();
    let position: BTreeMap<usize, usize> =
        order.iter().enumerate().map(|(i, &n)| (n, i + 1)).collect();
    let black_pos: BTreeSet<usize> = black.iter().map(|n| position[n]).collect();
    let arrow_pos: BTreeSet<(usize, usize)> = arrows
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (position[&a], position[&b]);
            (x.min(y), x.max(y))
        })
        .collect();

    if black_pos.len() == r {
        let algebra = compact_form(dynkin);
        return Ok(RealForm {
            max_compact: algebra.clone(),
            algebra,
        });
    }

    match dynkin {
        DynkinType::A(rank) => {
            let n = rank as i64 + 1;
            if black_pos.is_empty() && arrow_pos.is_empty() {
                return Ok(RealForm {
                    algebra: build::sl_r(n),
                    max_compact: build::so_compact(n),
                });
            }
            // su*(2m): odd positions black, even white, no arrows.
            let alternating = (1..=r).all(|i| black_pos.contains(&i) == (i % 2 == 1));
            if alternating && arrow_pos.is_empty() && n % 2 == 0 {
                return Ok(RealForm {
                    algebra: build::su_star(n),
                    max_compact: build::sp_compact(n / 2),
                });
            }
            // su(p, n-p): arrows i ↔ r+1-i on the white outer block, black
            // middle block.
            let p = (1..=r).take_while(|i| !black_pos.contains(i)).count();
            let expected_black: BTreeSet<usize> = ((p + 1)..=(r - p)).collect();
            let expected_arrows: BTreeSet<(usize, usize)> = (1..=p)
                .filter(|&i| i != r + 1 - i)
                .map(|i| (i, r + 1 - i))
                .collect();
            if black_pos == expected_black && arrow_pos == expected_arrows && p >= 1 {
                let q = n - p as i64;
                return Ok(RealForm {
                    algebra: build::su(p as i64, q),
                    max_compact: build::su_c(p as i64) + build::su_c(q) + build::so2(1),
                });
            }
            Err(Error::UnknownDiagramClassification(format!(
                "A-type diagram with black {black_pos:?}, arrows {arrow_pos:?}"
            )))
        }
        DynkinType::B(rank) => {
            let n = 2 * rank as i64 + 1;
            if arrow_pos.is_empty() {
                // so(p, n-p): white head of length p, black tail.
                let p = (1..=r).take_while(|i| !black_pos.contains(i)).count() as i64;
                let expected: BTreeSet<usize> = ((p as usize + 1)..=r).collect();
                if black_pos == expected {
                    return Ok(RealForm {
                        algebra: build::so(p, n - p),
                        max_compact: build::so_compact(p) + build::so_compact(n - p),
                    });
                }
            }
            Err(Error::UnknownDiagramClassification("B-type pattern".into()))
        }
        DynkinType::C(rank) => {
            let n = rank as i64;
            if black_pos.is_empty() && arrow_pos.is_empty() {
                return Ok(RealForm {
                    algebra: build::sp_r(n),
                    max_compact: build::su_c(n) + build::so2(1),
                });
            }
            Err(Error::UnknownDiagramClassification("C-type pattern".into()))
        }
        DynkinType::D(rank) => {
            let n = 2 * rank as i64;
            if black_pos.is_empty() && arrow_pos.is_empty() {
                return Ok(RealForm {
                    algebra: build::so(n / 2, n / 2),
                    max_compact: build::so_compact(n / 2) + build::so_compact(n / 2),
                });
            }
            Err(Error::UnknownDiagramClassification("D-type pattern".into()))
        }
    }
}

// ---------------------------------------------------------------------------
// The recipe.
// ---------------------------------------------------------------------------

/// One processed component (or component pair) in a recipe run.
#[derive(Debug, Clone)]
pub struct FactorTrace {
    pub nodes: Vec<usize>,
    pub case: CaseTag,
    pub factor: LieAlgebraExpr,
    pub h_part: LieAlgebraExpr,
}

/// Full trace of a recipe run.
#[derive(Debug, Clone)]
pub struct RecipeTrace {
    pub label: String,
    pub factors: Vec<FactorTrace>,
    pub abelian_r: i64,
    pub abelian_so2: i64,
    pub z_h: LieAlgebraExpr,
}

/// The per-component factor and its h-part.
pub fn component_factor(
    triple: &SatakeTriple,
    case: &ComponentCase,
) -> Result<(LieAlgebraExpr, LieAlgebraExpr)> {
    let comp = &case.component;
    match case.case {
        CaseTag::Case1 => {
            let (dynkin, _) = detect_type(&triple.d_a, comp)?;
            let factor = compact_form(dynkin);
            Ok((factor.clone(), factor))
        }
        CaseTag::Case2 => {
            let black: BTreeSet<usize> = comp
                .iter()
                .copied()
                .filter(|n| triple.d_p.black.contains(n))
                .collect();
            let arrows: Vec<(usize, usize)> = triple
                .d_p
                .arrows
                .iter()
                .copied()
                .filter(|&(a, b)| comp.contains(&a) && comp.contains(&b))
                .collect();
            let form = classify_real_form(&triple.d_a, comp, &black, &arrows)?;
            Ok((form.algebra.clone(), form.algebra))
        }
        CaseTag::Case3 => {
            let black: BTreeSet<usize> = comp
                .iter()
                .copied()
                .filter(|n| triple.d_q.black.contains(n))
                .collect();
            let arrows: Vec<(usize, usize)> = triple
                .d_q
                .arrows
                .iter()
                .copied()
                .filter(|&(a, b)| comp.contains(&a) && comp.contains(&b))
                .collect();
            let form = classify_real_form(&triple.d_a, comp, &black, &arrows)?;
            let (dynkin, _) = detect_type(&triple.d_a, comp)?;
            Ok((compact_form(dynkin), form.max_compact))
        }
        CaseTag::Case5 => {
            let (dynkin, _) = detect_type(&triple.d_a, comp)?;
            let factor = complex_form(dynkin);
            Ok((factor.clone(), factor))
        }
        CaseTag::Case6 => {
            let (dynkin, _) = detect_type(&triple.d_a, comp)?;
            let m = compact_form(dynkin);
            Ok((m.clone() + &m, m))
        }
    }
}

fn image_component(diagram: &SatakeDiagram, comp: &BTreeSet<usize>) -> BTreeSet<usize> {
    comp.iter().map(|&n| diagram.involution(n)).collect()
}

/// Run the recipe on a triple, producing the centralizer and a trace.
pub fn recipe_run(triple: &SatakeTriple) -> Result<RecipeTrace> {
    triple.validate()?;
    let components = components_phi0(triple);
    let mut consumed: Vec<bool> = vec![false; components.len()];
    let mut factors: Vec<FactorTrace> = Vec::new();

    for (idx, comp) in components.iter().enumerate() {
        if consumed[idx] {
            continue;
        }
        consumed[idx] = true;
        let case = classify_component(triple, comp)?;
        match case.case {
            CaseTag::Case5 | CaseTag::Case6 => {
                let diagram = if case.case == CaseTag::Case5 {
                    &triple.d_p
                } else {
                    &triple.d_q
                };
                let partner = image_component(diagram, comp);
                if partner == *comp || partner.intersection(comp).next().is_some() {
                    return Err(Error::UnknownDiagramClassification(format!(
                        "component {comp:?} is not cleanly swapped with a partner"
                    )));
                }
                let pos = components
                    .iter()
                    .position(|c| *c == partner)
                    .ok_or_else(|| {
                        Error::UnknownDiagramClassification(format!(
                            "partner {partner:?} is not a black component"
                        ))
                    })?;
                if consumed[pos] {
                    return Err(Error::UnknownDiagramClassification(
                        "partner component consumed twice".into(),
                    ));
                }
                consumed[pos] = true;
                let (factor, h_part) = component_factor(triple, &case)?;
                factors.push(FactorTrace {
                    nodes: comp.iter().chain(partner.iter()).copied().collect(),
                    case: case.case,
                    factor,
                    h_part,
                });
            }
            _ => {
                let (factor, h_part) = component_factor(triple, &case)?;
                factors.push(FactorTrace {
                    nodes: comp.iter().copied().collect(),
                    case: case.case,
                    factor,
                    h_part,
                });
            }
        }
    }

    let Ranks {
        rank_gc,
        rank_gh,
        rank_gk,
        s_rank,
    } = triple.ranks;
    let dim_kh = rank_gc - rank_gh - rank_gk + s_rank;
    let dim_ph = rank_gk - s_rank;
    let abelian_so2 = dim_kh - triple.toral.s_kh;
    let abelian_r = dim_ph - triple.toral.s_ph;
    if abelian_so2 < 0 || abelian_r < 0 {
        return Err(Error::Parse(format!(
            "negative abelian dimensions (so2 part {abelian_so2}, R part {abelian_r}); \
             the triple data is inconsistent"
        )));
    }

    let mut z_h = build::r(abelian_r) + build::so2(abelian_so2);
    for f in &factors {
        z_h = z_h + &f.h_part;
    }
    Ok(RecipeTrace {
        label: triple.label.clone(),
        factors,
        abelian_r,
        abelian_so2,
        z_h,
    })
}

pub fn trace_json(trace: &RecipeTrace) -> serde_json::Value {
    json!({
        "pair": trace.label,
        "components": trace.factors.iter().map(|f| json!({
            "nodes": f.nodes,
            "case": f.case.to_string(),
            "factor": f.factor.render(Style::Unicode),
            "h_part": f.h_part.render(Style::Unicode),
        })).collect::<Vec<_>>(),
        "abelian": {"r": trace.abelian_r, "so2": trace.abelian_so2},
        "z_h": trace.z_h.render(Style::Unicode),
        "z_h_json": trace.z_h.to_json(),
    })
}

// ---------------------------------------------------------------------------
// Encoded triples.
// ---------------------------------------------------------------------------

fn chain_edges(nodes: &[usize]) -> Vec<(usize, usize, u8)> {
    nodes
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1]), 1))
        .collect()
}

/// Triple for `(su(2p, 2(n-p)), sp(p, n-p))`, `n ≥ 2p ≥ 2`.
pub fn triple_su_sp(n: i64, p: i64) -> Result<SatakeTriple> {
    if p < 1 || n < 2 * p {
        return Err(Error::ConstraintViolated {
            pair: "su-sp".into(),
            detail: "need 1 ≤ p and n ≥ 2p".into(),
        });
    }
    let total = (2 * n - 1) as usize;
    let all: Vec<usize> = (1..=total).collect();
    let edges = chain_edges(&all);
    let np = n as usize;
    let pp = p as usize;

    let mut black_a: BTreeSet<usize> = BTreeSet::new();
    for i in 1..=pp {
        black_a.insert(2 * i - 1);
        black_a.insert(2 * np - (2 * i - 1));
    }
    for x in (2 * pp + 1)..=(2 * np - 2 * pp - 1) {
        black_a.insert(x);
    }
    let arrows_a: Vec<(usize, usize)> = (1..=pp)
        .filter(|&i| 2 * i != 2 * np - 2 * i)
        .map(|i| (2 * i, 2 * np - 2 * i))
        .collect();

    let black_q: BTreeSet<usize> = (1..=total).filter(|x| x % 2 == 1).collect();

    let black_p: BTreeSet<usize> = ((2 * pp + 1)..=(2 * np - 2 * pp - 1)).collect();
    let arrows_p: Vec<(usize, usize)> = (1..=2 * pp)
        .filter(|&i| i != np)
        .map(|i| (i, 2 * np - i))
        .collect();

    let triple = SatakeTriple {
        label: format!("(su({},{}), sp({p},{}))", 2 * p, 2 * (n - p), n - p),
        d_a: SatakeDiagram {
            nodes: total,
            edges: edges.clone(),
            black: black_a,
            arrows: arrows_a,
            classes: Vec::new(),
        },
        d_q: SatakeDiagram {
            nodes: total,
            edges: edges.clone(),
            black: black_q,
            arrows: Vec::new(),
            classes: Vec::new(),
        },
        d_p: SatakeDiagram {
            nodes: total,
            edges,
            black: black_p,
            arrows: arrows_p,
            classes: Vec::new(),
        },
        ranks: Ranks {
            rank_gc: 2 * n - 1,
            rank_gh: n - 1,
            rank_gk: 2 * p,
            s_rank: p,
        },
        toral: ToralData {
            s_kh: n - p,
            s_ph: p,
        },
    };
    triple.validate()?;
    Ok(triple)
}

/// Triple for `(sl(n,C), sl(n,R))`, `n ≥ 2`: two all-white copies of
/// `A_{n-1}` swapped by the maximal-diagram involution.
pub fn triple_slc_slr(n: i64) -> Result<SatakeTriple> {
    if n < 2 {
        return Err(Error::ConstraintViolated {
            pair: "slC-slR".into(),
            detail: "need n ≥ 2".into(),
        });
    }
    let half = (n - 1) as usize;
    let copy1: Vec<usize> = (1..=half).collect();
    let copy2: Vec<usize> = (half + 1..=2 * half).collect();
    let mut edges = chain_edges(&copy1);
    edges.extend(chain_edges(&copy2));
    // a-restriction classes {α_j, α_{n-j}, α'_j, α'_{n-j}} (informational).
    let mut classes = Vec::new();
    for j in 1..=half {
        let quad: BTreeSet<usize> = [j, half + 1 - j, half + j, 2 * half + 1 - j]
            .into_iter()
            .collect();
        let quad: Vec<usize> = quad.into_iter().collect();
        if !classes.contains(&quad) {
            classes.push(quad);
        }
    }
    // The maximal diagrams swap the copies composed with the chain reversal.
    let arrows_max: Vec<(usize, usize)> = (1..=half).map(|j| (j, half + (half + 1 - j))).collect();

    let blank = |arrows: Vec<(usize, usize)>, classes: Vec<Vec<usize>>| SatakeDiagram {
        nodes: 2 * half,
        edges: edges.clone(),
        black: BTreeSet::new(),
        arrows,
        classes,
    };
    let triple = SatakeTriple {
        label: format!("(sl({n},C), sl({n},R))"),
        d_a: blank(Vec::new(), classes),
        d_q: blank(arrows_max.clone(), Vec::new()),
        d_p: blank(arrows_max, Vec::new()),
        ranks: Ranks {
            rank_gc: 2 * (n - 1),
            rank_gh: n - 1,
            rank_gk: n - 1,
            s_rank: n / 2,
        },
        toral: ToralData { s_kh: 0, s_ph: 0 },
    };
    triple.validate()?;
    Ok(triple)
}

/// Triple for `(sl(n,R), so(p,n-p))`: the split form, everything white, all
/// abelian dimensions zero.
pub fn triple_slr_so(n: i64, p: i64) -> Result<SatakeTriple> {
    if n < 2 || !(1..n).contains(&p) {
        return Err(Error::ConstraintViolated {
            pair: "slR-so".into(),
            detail: "need n ≥ 2, 1 ≤ p ≤ n-1".into(),
        });
    }
    let nodes: Vec<usize> = (1..=(n - 1) as usize).collect();
    let edges = chain_edges(&nodes);
    let blank = || SatakeDiagram {
        nodes: nodes.len(),
        edges: edges.clone(),
        black: BTreeSet::new(),
        arrows: Vec::new(),
        classes: Vec::new(),
    };
    let triple = SatakeTriple {
        label: format!("(sl({n},R), so({p},{}))", n - p),
        d_a: blank(),
        d_q: blank(),
        d_p: blank(),
        ranks: Ranks {
            rank_gc: n - 1,
            rank_gh: n - 1,
            rank_gk: n - 1,
            s_rank: n - 1,
        },
        toral: ToralData { s_kh: 0, s_ph: 0 },
    };
    triple.validate()?;
    Ok(triple)
}

/// Build the encoded triple for a catalog pair, when one exists.
pub fn triple_for(slug: &str, params: &crate::pairs::Params) -> Result<SatakeTriple> {
    match slug {
        "su-sp" => triple_su_sp(params.require("n", slug)?, params.require("p", slug)?),
        "slC-slR" => triple_slc_slr(params.require("n", slug)?),
        "slR-so" => triple_slr_so(params.require("n", slug)?, params.require("p", slug)?),
        other => Err(Error::UnknownPair(format!(
            "no encoded Satake triple for {other}"
        ))),
    }
}

/// Slugs with recipe-verified triples; every other catalog entry's principal
/// isotropy subalgebra is classification data only.
pub const RECIPE_VERIFIED: [&str; 3] = ["su-sp", "slC-slR", "slR-so"];

// ---------------------------------------------------------------------------
// Text format.
// ---------------------------------------------------------------------------

/// Render a triple in the diagram text format.
pub fn render_triple(triple: &SatakeTriple) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "triple {}", triple.label);
    let _ = writeln!(
        out,
        "ranks gc={} gh={} gk={} s={}",
        triple.ranks.rank_gc, triple.ranks.rank_gh, triple.ranks.rank_gk, triple.ranks.s_rank
    );
    let _ = writeln!(
        out,
        "toral kh={} ph={}",
        triple.toral.s_kh, triple.toral.s_ph
    );
    for (name, d) in [("a", &triple.d_a), ("q", &triple.d_q), ("p", &triple.d_p)] {
        let _ = writeln!(out, "diagram {name}");
        let _ = writeln!(out, "  nodes {}", d.nodes);
        let edges: Vec<String> = d
            .edges
            .iter()
            .map(|&(a, b, m)| {
                if m == 1 {
                    format!("{a}-{b}")
                } else {
                    format!("{a}-{b}:{m}")
                }
            })
            .collect();
        let _ = writeln!(out, "  edges {}", edges.join(" "));
        if !d.black.is_empty() {
            let black: Vec<String> = d.black.iter().map(|n| n.to_string()).collect();
            let _ = writeln!(out, "  black {}", black.join(" "));
        }
        if !d.arrows.is_empty() {
            let arrows: Vec<String> = d.arrows.iter().map(|&(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "  arrows {}", arrows.join(" "));
        }
        for class in &d.classes {
            let nodes: Vec<String> = class.iter().map(|n| n.to_string()).collect();
            let _ = writeln!(out, "  class {}", nodes.join(" "));
        }
    }
    out
}

/// Parse the diagram text format.
pub fn parse_triple(text: &str) -> Result<SatakeTriple> {
    let mut label = String::new();
    let mut ranks: Option<Ranks> = None;
    let mut toral: Option<ToralData> = None;
    let mut diagrams: BTreeMap<String, SatakeDiagram> = BTreeMap::new();
    let mut current: Option<String> = None;

    let kv = |token: &str, key: &str| -> Result<i64> {
        token
            .strip_prefix(&format!("{key}="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected {key}=<int>, got {token}")))
    };

    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().unwrap();
        match head {
            "triple" => label = tokens.collect::<Vec<_>>().join(" "),
            "ranks" => {
                let t: Vec<&str> = tokens.collect();
                if t.len() != 4 {
                    return Err(Error::Parse("ranks needs gc gh gk s".into()));
                }
                ranks = Some(Ranks {
                    rank_gc: kv(t[0], "gc")?,
                    rank_gh: kv(t[1], "gh")?,
                    rank_gk: kv(t[2], "gk")?,
                    s_rank: kv(t[3], "s")?,
                });
            }
            "toral" => {
                let t: Vec<&str> = tokens.collect();
                if t.len() != 2 {
                    return Err(Error::Parse("toral needs kh ph".into()));
                }
                toral = Some(ToralData {
                    s_kh: kv(t[0], "kh")?,
                    s_ph: kv(t[1], "ph")?,
                });
            }
            "diagram" => {
                let name = tokens
                    .next()
                    .ok_or_else(|| Error::Parse("diagram needs a name".into()))?;
                diagrams.insert(
                    name.to_string(),
                    SatakeDiagram {
                        nodes: 0,
                        edges: Vec::new(),
                        black: BTreeSet::new(),
                        arrows: Vec::new(),
                        classes: Vec::new(),
                    },
                );
                current = Some(name.to_string());
            }
            "nodes" | "edges" | "black" | "arrows" | "class" => {
                let name = current
                    .clone()
                    .ok_or_else(|| Error::Parse(format!("{head} outside a diagram block")))?;
                let d = diagrams.get_mut(&name).unwrap();
                match head {
                    "nodes" => {
                        d.nodes = tokens
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| Error::Parse("nodes needs a count".into()))?;
                    }
                    "edges" => {
                        for t in tokens {
                            let (pair, mult) = match t.split_once(':') {
                                Some((p, m)) => (
                                    p,
                                    m.parse::<u8>()
                                        .map_err(|_| Error::Parse(format!("bad edge {t}")))?,
                                ),
                                None => (t, 1),
                            };
                            let (a, b) = pair
                                .split_once('-')
                                .ok_or_else(|| Error::Parse(format!("bad edge {t}")))?;
                            let a: usize = a
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad edge {t}")))?;
                            let b: usize = b
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad edge {t}")))?;
                            d.edges.push((a.min(b), a.max(b), mult));
                        }
                    }
                    "black" => {
                        for t in tokens {
                            d.black.insert(
                                t.parse()
                                    .map_err(|_| Error::Parse(format!("bad black node {t}")))?,
                            );
                        }
                    }
                    "arrows" => {
                        for t in tokens {
                            let (a, b) = t
                                .split_once('-')
                                .ok_or_else(|| Error::Parse(format!("bad arrow {t}")))?;
                            let a: usize = a
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad arrow {t}")))?;
                            let b: usize = b
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad arrow {t}")))?;
                            d.arrows.push((a.min(b), a.max(b)));
                        }
                    }
                    "class" => {
                        let class: Vec<usize> = tokens
                            .map(|t| {
                                t.parse()
                                    .map_err(|_| Error::Parse(format!("bad class node {t}")))
                            })
                            .collect::<Result<_>>()?;
                        d.classes.push(class);
                    }
                    _ => unreachable!(),
                }
            }
            other => return Err(Error::Parse(format!("unknown directive {other}"))),
        }
    }

    let take = |name: &str| -> Result<SatakeDiagram> {
        diagrams
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("missing diagram {name}")))
    };
    let triple = SatakeTriple {
        label,
        d_a: take("a")?,
        d_q: take("q")?,
        d_p: take("p")?,
        ranks: ranks.ok_or_else(|| Error::Parse("missing ranks line".into()))?,
        toral: toral.ok_or_else(|| Error::Parse("missing toral line".into()))?,
    };
    triple.validate()?;
    Ok(triple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build::*;

    #[test]
    fn su_sp_components_and_cases() {
        // n = 4, p = 1: singletons {1}, {7} and the middle chain {3,4,5}.
        let triple = triple_su_sp(4, 1).unwrap();
        let comps = components_phi0(&triple);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], BTreeSet::from([1]));
        assert_eq!(comps[1], BTreeSet::from([3, 4, 5]));
        assert_eq!(comps[2], BTreeSet::from([7]));

        let c1 = classify_component(&triple, &comps[0]).unwrap();
        assert_eq!(c1.case, CaseTag::Case5);
        let mid = classify_component(&triple, &comps[1]).unwrap();
        assert_eq!(mid.case, CaseTag::Case3);

        // An all-white diagram has no black components at all.
        let blank = triple_slc_slr(4).unwrap();
        assert!(components_phi0(&blank).is_empty());

        // A middle chain of length one is black in all three diagrams.
        let triple = triple_su_sp(3, 1).unwrap();
        let comps = components_phi0(&triple);
        assert_eq!(comps.len(), 3);
        let mid = classify_component(&triple, &comps[1]).unwrap();
        assert_eq!(mid.case, CaseTag::Case1);
    }

    #[test]
    fn su_sp_recipe_matches_catalog_value() {
        for (n, p) in [(2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (8, 3)] {
            let triple = triple_su_sp(n, p).unwrap();
            let trace = recipe_run(&triple).unwrap();
            let expected = sl_c_pow(2, p) + sp_compact(n - 2 * p);
            assert_eq!(trace.z_h, expected, "(n,p)=({n},{p})");
        }
    }

    #[test]
    fn slc_slr_recipe_matches_catalog_value() {
        for n in 2..=8 {
            let triple = triple_slc_slr(n).unwrap();
            let trace = recipe_run(&triple).unwrap();
            let expected = r((n - 1) / 2) + so2(n / 2);
            assert_eq!(trace.z_h, expected, "n={n}");
            assert!(trace.factors.is_empty());
        }
    }

    #[test]
    fn all_white_split_triple_gives_zero() {
        let triple = triple_slr_so(5, 2).unwrap();
        let trace = recipe_run(&triple).unwrap();
        assert!(trace.z_h.is_zero());
        assert_eq!(components_phi0(&triple).len(), 0);
    }

    #[test]
    fn case5_pair_is_disconnected_and_isomorphic() {
        let triple = triple_su_sp(4, 2).unwrap();
        let comps = components_phi0(&triple);
        for comp in &comps {
            let case = classify_component(&triple, comp).unwrap();
            if case.case == CaseTag::Case5 {
                let partner = image_component(&triple.d_p, comp);
                assert!(partner.intersection(comp).next().is_none());
                assert_eq!(partner.len(), comp.len());
                assert!(comps.contains(&partner));
            }
        }
    }

    #[test]
    fn case4_is_rejected() {
        // A single black node, black in neither maximal diagram, fixed by
        // both involutions: both difference sets are invariant.
        let d = |black: &[usize], arrows: &[(usize, usize)]| SatakeDiagram {
            nodes: 3,
            edges: vec![(1, 2, 1), (2, 3, 1)],
            black: black.iter().copied().collect(),
            arrows: arrows.to_vec(),
            classes: Vec::new(),
        };
        let triple = SatakeTriple {
            label: "inconsistent".into(),
            d_a: d(&[2], &[]),
            d_q: d(&[], &[]),
            d_p: d(&[], &[]),
            ranks: Ranks {
                rank_gc: 3,
                rank_gh: 2,
                rank_gk: 2,
                s_rank: 1,
            },
            toral: ToralData { s_kh: 0, s_ph: 0 },
        };
        let comp = BTreeSet::from([2]);
        assert!(matches!(
            classify_component(&triple, &comp),
            Err(Error::Case4Detected)
        ));
    }

    #[test]
    fn real_form_lookup_patterns() {
        let chain = |n: usize| SatakeDiagram {
            nodes: n,
            edges: (1..n).map(|i| (i, i + 1, 1)).collect(),
            black: BTreeSet::new(),
            arrows: Vec::new(),
            classes: Vec::new(),
        };
        let d5 = chain(5);
        let comp: BTreeSet<usize> = (1..=5).collect();

        // All white, no arrows: the split form.
        let f = classify_real_form(&d5, &comp, &BTreeSet::new(), &[]).unwrap();
        assert_eq!(f.algebra, sl_r(6));

        // Alternating black: the quaternionic form.
        let f = classify_real_form(&d5, &comp, &BTreeSet::from([1, 3, 5]), &[]).unwrap();
        assert_eq!(f.algebra, su_star(6));
        assert_eq!(f.max_compact, sp_compact(3));

        // Arrows with a black middle: su(p, q).
        let f = classify_real_form(&d5, &comp, &BTreeSet::from([3]), &[(1, 5), (2, 4)]).unwrap();
        assert_eq!(f.algebra, su(2, 4));

        // All black: compact.
        let f = classify_real_form(&d5, &comp, &comp, &[]).unwrap();
        assert_eq!(f.algebra, su_c(6));
    }

    #[test]
    fn text_round_trip() {
        for triple in [
            triple_su_sp(3, 1).unwrap(),
            triple_su_sp(4, 2).unwrap(),
            triple_slc_slr(4).unwrap(),
            triple_slr_so(4, 2).unwrap(),
        ] {
            let text = render_triple(&triple);
            let parsed = parse_triple(&text).unwrap();
            assert_eq!(render_triple(&parsed), text);
            assert_eq!(
                recipe_run(&parsed).unwrap().z_h,
                recipe_run(&triple).unwrap().z_h
            );
        }
    }

    #[test]
    fn negative_abelian_dimension_is_an_error() {
        let mut triple = triple_slc_slr(4).unwrap();
        triple.toral.s_kh = 10;
        assert!(recipe_run(&triple).is_err());
    }
}
