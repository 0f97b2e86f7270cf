//! Formal Lie algebra values: multisets of atomic classical factors with a
//! canonical form, two equality modes, and deterministic rendering.
//!
//! Values such as `ℝ^{m-1} + so(2)^m` or `sl(2,ℂ)^p + sp(n-2p)` are stored as
//! sorted factor/exponent lists. Canonicalization removes degenerate factors
//! (`sl(1,·)`, `su(1)`, `sp(0)`, `so(0)`, `so(1)`, …) and folds the forced
//! rank-one coincidences that the classification tables spell differently in
//! different rows (`sp(1) = su(2) = su*(2)`, `u(1) = so(2) = so*(2)`,
//! `sp(1,ℝ) = su(1,1) = sl(2,ℝ)`, `sp(1,ℂ) = sl(2,ℂ)`, `so(2,ℂ) = ℂ`,
//! `u(m) = u(1) + su(m)`). Signature annotations on rank-one `so` factors are
//! preserved: `so(2,0)`, `so(0,2)` and `so(2)` are distinct in the canonical
//! form and indefinite `so(p,q)` keeps its written order. The iso-mode key
//! additionally identifies `so(p,q) ≅ so(q,p)` and drops the `so(2)`
//! orientation; nothing else is ever merged.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Orientation annotation on a rank-one `so` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// Plain `so(2)` (no signature recorded).
    Neutral,
    /// `so(2,0)`: the positive-definite plane.
    Positive,
    /// `so(0,2)`: the negative-definite plane.
    Negative,
}

/// One atomic classical factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AtomicFactor {
    /// ℝ (one-dimensional abelian).
    R,
    /// ℂ as a real abelian algebra.
    C,
    /// `so(2)` with an optional definiteness annotation.
    So2(Orientation),
    /// `u(1)`; canonicalizes to `So2(Neutral)`.
    U1,
    /// `sl(n, ℝ)`, n ≥ 2.
    SlR(u32),
    /// `sl(n, ℂ)`, n ≥ 2.
    SlC(u32),
    /// `su(p, q)` with p ≤ q after canonicalization, p ≥ 1.
    Su(u32, u32),
    /// `su*(2n)`; the parameter stores n.
    SuStar(u32),
    /// `so(p, q)` kept in written order (p, q ≥ 1, p + q ≥ 3, or (1,1)).
    SoPq(u32, u32),
    /// `so(n, ℂ)`, n ≥ 3.
    SoC(u32),
    /// `so*(2n)`; the parameter stores n (n ≥ 2 after canonicalization).
    SoStar(u32),
    /// `sp(n, ℝ)`, n ≥ 2 after canonicalization.
    SpR(u32),
    /// `sp(p, q)` with p ≤ q after canonicalization, p ≥ 1.
    SpPq(u32, u32),
    /// `sp(n, ℂ)`, n ≥ 2 after canonicalization.
    SpC(u32),
    /// Compact `su(n)`, n ≥ 2.
    SuCompact(u32),
    /// Compact `sp(n)`, n ≥ 2 after canonicalization.
    SpCompact(u32),
    /// Compact `so(n)`, n ≥ 3.
    SoCompact(u32),
}

impl AtomicFactor {
    /// Canonical image: `None` means the factor is degenerate (zero algebra).
    /// May expand into several factors (`u(m) = u(1) + su(m)`).
    fn canonical(self) -> Vec<AtomicFactor> {
        use AtomicFactor::*;
        match self {
            R => vec![R],
            C => vec![C],
            So2(o) => vec![So2(o)],
            U1 => vec![So2(Orientation::Neutral)],
            SlR(n) => match n {
                0 | 1 => vec![],
                n => vec![SlR(n)],
            },
            SlC(n) => match n {
                0 | 1 => vec![],
                n => vec![SlC(n)],
            },
            Su(p, q) => {
                let (a, b) = (p.min(q), p.max(q));
                match (a, b) {
                    (_, 0) => vec![],
                    (0, 1) => vec![],
                    (0, m) => SuCompact(m).canonical(),
                    (1, 1) => vec![SlR(2)],
                    (a, b) => vec![Su(a, b)],
                }
            }
            SuStar(n) => match n {
                0 => vec![],
                1 => vec![SuCompact(2)],
                n => vec![SuStar(n)],
            },
            SoPq(p, q) => match (p, q) {
                (0, 0) => vec![],
                (1, 0) | (0, 1) => vec![],
                (2, 0) => vec![So2(Orientation::Positive)],
                (0, 2) => vec![So2(Orientation::Negative)],
                (p, 0) => SoCompact(p).canonical(),
                (0, q) => SoCompact(q).canonical(),
                (p, q) => vec![SoPq(p, q)],
            },
            SoC(n) => match n {
                0 | 1 => vec![],
                2 => vec![C],
                n => vec![SoC(n)],
            },
            SoStar(n) => match n {
                0 => vec![],
                1 => vec![So2(Orientation::Neutral)],
                n => vec![SoStar(n)],
            },
            SpR(n) => match n {
                0 => vec![],
                1 => vec![SlR(2)],
                n => vec![SpR(n)],
            },
            SpPq(p, q) => {
                let (a, b) = (p.min(q), p.max(q));
                match (a, b) {
                    (_, 0) => vec![],
                    (0, m) => SpCompact(m).canonical(),
                    (a, b) => vec![SpPq(a, b)],
                }
            }
            SpC(n) => match n {
                0 => vec![],
                1 => vec![SlC(2)],
                n => vec![SpC(n)],
            },
            SuCompact(n) => match n {
                0 | 1 => vec![],
                n => vec![SuCompact(n)],
            },
            SpCompact(n) => match n {
                0 => vec![],
                1 => vec![SuCompact(2)],
                n => vec![SpCompact(n)],
            },
            SoCompact(n) => match n {
                0 | 1 => vec![],
                2 => vec![So2(Orientation::Neutral)],
                n => vec![SoCompact(n)],
            },
        }
    }

    /// Iso-mode image: forgets so(2) orientation and so(p,q) order.
    fn iso(self) -> AtomicFactor {
        use AtomicFactor::*;
        match self {
            So2(_) => So2(Orientation::Neutral),
            SoPq(p, q) => SoPq(p.min(q), p.max(q)),
            f => f,
        }
    }

    fn render(self, style: Style) -> String {
        use AtomicFactor::*;
        let frak = |name: &str, args: String| match style {
            Style::Unicode => format!("{name}({args})"),
            Style::Latex => format!("\\mathfrak{{{name}}}({args})"),
        };
        match self {
            R => match style {
                Style::Unicode => "R".into(),
                Style::Latex => "\\mathbb{R}".into(),
            },
            C => match style {
                Style::Unicode => "C".into(),
                Style::Latex => "\\mathbb{C}".into(),
            },
            So2(Orientation::Neutral) => frak("so", "2".into()),
            So2(Orientation::Positive) => frak("so", "2,0".into()),
            So2(Orientation::Negative) => frak("so", "0,2".into()),
            U1 => frak("u", "1".into()),
            SlR(n) => frak("sl", format!("{n},R")),
            SlC(n) => frak("sl", format!("{n},C")),
            Su(p, q) => frak("su", format!("{p},{q}")),
            SuStar(n) => match style {
                Style::Unicode => format!("su*({})", 2 * n),
                Style::Latex => format!("\\mathfrak{{su}}^*({})", 2 * n),
            },
            SoPq(p, q) => frak("so", format!("{p},{q}")),
            SoC(n) => frak("so", format!("{n},C")),
            SoStar(n) => match style {
                Style::Unicode => format!("so*({})", 2 * n),
                Style::Latex => format!("\\mathfrak{{so}}^*({})", 2 * n),
            },
            SpR(n) => frak("sp", format!("{n},R")),
            SpPq(p, q) => frak("sp", format!("{p},{q}")),
            SpC(n) => frak("sp", format!("{n},C")),
            SuCompact(n) => frak("su", format!("{n}")),
            SpCompact(n) => frak("sp", format!("{n}")),
            SoCompact(n) => frak("so", format!("{n}")),
        }
    }

    fn kind_name(self) -> &'static str {
        use AtomicFactor::*;
        match self {
            R => "R",
            C => "C_abelian",
            So2(_) => "so2",
            U1 => "u1",
            SlR(_) => "sl_R",
            SlC(_) => "sl_C",
            Su(_, _) => "su",
            SuStar(_) => "su_star",
            SoPq(_, _) => "so_pq",
            SoC(_) => "so_C",
            SoStar(_) => "so_star",
            SpR(_) => "sp_R",
            SpPq(_, _) => "sp_pq",
            SpC(_) => "sp_C",
            SuCompact(_) => "su_compact",
            SpCompact(_) => "sp_compact",
            SoCompact(_) => "so_compact",
        }
    }

    fn params(self) -> Vec<u32> {
        use AtomicFactor::*;
        match self {
            R | C | U1 => vec![],
            So2(Orientation::Neutral) => vec![],
            So2(Orientation::Positive) => vec![2, 0],
            So2(Orientation::Negative) => vec![0, 2],
            SlR(n) | SlC(n) | SoC(n) | SpR(n) | SpC(n) | SuCompact(n) | SpCompact(n)
            | SoCompact(n) => vec![n],
            SuStar(n) | SoStar(n) => vec![2 * n],
            Su(p, q) | SoPq(p, q) | SpPq(p, q) => vec![p, q],
        }
    }

    fn from_kind(kind: &str, params: &[u32]) -> Result<AtomicFactor> {
        use AtomicFactor::*;
        let one = |params: &[u32]| -> Result<u32> {
            params
                .first()
                .copied()
                .ok_or_else(|| Error::Parse(format!("kind {kind} needs one parameter")))
        };
        let two = |params: &[u32]| -> Result<(u32, u32)> {
            match params {
                [p, q, ..] => Ok((*p, *q)),
                _ => Err(Error::Parse(format!("kind {kind} needs two parameters"))),
            }
        };
        Ok(match kind {
            "R" => R,
            "C_abelian" => C,
            "so2" => match params {
                [] => So2(Orientation::Neutral),
                [2, 0] => So2(Orientation::Positive),
                [0, 2] => So2(Orientation::Negative),
                _ => {
                    return Err(Error::Parse(
                        "so2 parameters must be [], [2,0] or [0,2]".into(),
                    ))
                }
            },
            "u1" => U1,
            "sl_R" => SlR(one(params)?),
            "sl_C" => SlC(one(params)?),
            "su" => {
                let (p, q) = two(params)?;
                Su(p, q)
            }
            "su_star" => {
                let n = one(params)?;
                if n % 2 != 0 {
                    return Err(Error::Parse("su_star parameter must be even".into()));
                }
                SuStar(n / 2)
            }
            "so_pq" => {
                let (p, q) = two(params)?;
                SoPq(p, q)
            }
            "so_C" => SoC(one(params)?),
            "so_star" => {
                let n = one(params)?;
                if n % 2 != 0 {
                    return Err(Error::Parse("so_star parameter must be even".into()));
                }
                SoStar(n / 2)
            }
            "sp_R" => SpR(one(params)?),
            "sp_pq" => {
                let (p, q) = two(params)?;
                SpPq(p, q)
            }
            "sp_C" => SpC(one(params)?),
            "su_compact" => SuCompact(one(params)?),
            "sp_compact" => SpCompact(one(params)?),
            "so_compact" => SoCompact(one(params)?),
            other => return Err(Error::Parse(format!("unknown factor kind {other}"))),
        })
    }
}

/// Rendering styles for expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Unicode,
    Latex,
}

/// A formal sum of atomic factors with multiplicities, kept canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LieAlgebraExpr {
    factors: Vec<(AtomicFactor, u32)>,
}

impl LieAlgebraExpr {
    /// The zero algebra `{0}`.
    pub fn zero() -> LieAlgebraExpr {
        LieAlgebraExpr::default()
    }

    pub fn is_zero(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(AtomicFactor, u32)] {
        &self.factors
    }

    /// Build from an arbitrary factor/exponent list, canonicalizing.
    pub fn from_factors(raw: impl IntoIterator<Item = (AtomicFactor, u32)>) -> LieAlgebraExpr {
        let mut out: Vec<(AtomicFactor, u32)> = Vec::new();
        for (f, exp) in raw {
            if exp == 0 {
                continue;
            }
            for g in f.canonical() {
                out.push((g, exp));
            }
        }
        out.sort_by_key(|&(f, _)| f);
        let mut merged: Vec<(AtomicFactor, u32)> = Vec::new();
        for (f, e) in out {
            match merged.last_mut() {
                Some((g, acc)) if *g == f => *acc += e,
                _ => merged.push((f, e)),
            }
        }
        LieAlgebraExpr { factors: merged }
    }

    /// Re-canonicalize (idempotent on values produced by this module).
    pub fn canonicalize(&self) -> LieAlgebraExpr {
        LieAlgebraExpr::from_factors(self.factors.iter().copied())
    }

    /// Equality key that additionally identifies `so(p,q) ≅ so(q,p)` and
    /// forgets the definiteness annotation on `so(2)` factors.
    pub fn iso_key(&self) -> LieAlgebraExpr {
        LieAlgebraExpr::from_factors(self.factors.iter().map(|&(f, e)| (f.iso(), e)))
    }

    pub fn render(&self, style: Style) -> String {
        if self.factors.is_empty() {
            return "{0}".into();
        }
        let sep = match style {
            Style::Unicode => " + ",
            Style::Latex => "+",
        };
        self.factors
            .iter()
            .map(|&(f, e)| {
                let base = f.render(style);
                if e == 1 {
                    base
                } else {
                    match style {
                        Style::Unicode => format!("{base}^{e}"),
                        Style::Latex => format!("{base}^{{{e}}}"),
                    }
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "factors": self.factors.iter().map(|&(f, e)| {
                serde_json::json!({
                    "kind": f.kind_name(),
                    "params": f.params(),
                    "exp": e,
                })
            }).collect::<Vec<_>>()
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<LieAlgebraExpr> {
        let factors = value
            .get("factors")
            .and_then(|f| f.as_array())
            .ok_or_else(|| Error::Parse("expression JSON must have a factors array".into()))?;
        let mut raw = Vec::new();
        for item in factors {
            let kind = item
                .get("kind")
                .and_then(|k| k.as_str())
                .ok_or_else(|| Error::Parse("factor needs a kind".into()))?;
            let params: Vec<u32> = item
                .get("params")
                .and_then(|p| p.as_array())
                .map(|arr| {
                    arr.iter()
                        .filter_map(|v| v.as_u64().map(|x| x as u32))
                        .collect()
                })
                .unwrap_or_default();
            let exp = item.get("exp").and_then(|e| e.as_u64()).unwrap_or(1) as u32;
            raw.push((AtomicFactor::from_kind(kind, &params)?, exp));
        }
        Ok(LieAlgebraExpr::from_factors(raw))
    }
}

impl fmt::Display for LieAlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Style::Unicode))
    }
}

impl Add for LieAlgebraExpr {
    type Output = LieAlgebraExpr;
    fn add(self, rhs: LieAlgebraExpr) -> LieAlgebraExpr {
        LieAlgebraExpr::from_factors(self.factors.into_iter().chain(rhs.factors))
    }
}

impl Add<&LieAlgebraExpr> for LieAlgebraExpr {
    type Output = LieAlgebraExpr;
    fn add(self, rhs: &LieAlgebraExpr) -> LieAlgebraExpr {
        LieAlgebraExpr::from_factors(self.factors.into_iter().chain(rhs.factors.iter().copied()))
    }
}

/// Convenience constructors used throughout the catalog.
pub mod build {
    use super::{AtomicFactor as F, LieAlgebraExpr as E, Orientation};

    fn pow(f: F, k: i64) -> E {
        if k <= 0 {
            E::zero()
        } else {
            E::from_factors([(f, k as u32)])
        }
    }
    fn nn(x: i64) -> u32 {
        x.max(0) as u32
    }

    pub fn zero() -> E {
        E::zero()
    }
    pub fn r(k: i64) -> E {
        pow(F::R, k)
    }
    pub fn c(k: i64) -> E {
        pow(F::C, k)
    }
    pub fn so2(k: i64) -> E {
        pow(F::So2(Orientation::Neutral), k)
    }
    pub fn so2_pos() -> E {
        pow(F::So2(Orientation::Positive), 1)
    }
    pub fn so2_neg() -> E {
        pow(F::So2(Orientation::Negative), 1)
    }
    pub fn u1(k: i64) -> E {
        pow(F::U1, k)
    }
    /// `u(m) = u(1) + su(m)`.
    pub fn u_n(m: i64) -> E {
        if m <= 0 {
            E::zero()
        } else {
            u1(1) + su_c(m)
        }
    }
    pub fn sl_r(n: i64) -> E {
        pow(F::SlR(nn(n)), 1)
    }
    pub fn sl_r_pow(n: i64, k: i64) -> E {
        pow(F::SlR(nn(n)), k)
    }
    pub fn sl_c(n: i64) -> E {
        pow(F::SlC(nn(n)), 1)
    }
    pub fn sl_c_pow(n: i64, k: i64) -> E {
        pow(F::SlC(nn(n)), k)
    }
    pub fn su(p: i64, q: i64) -> E {
        if p < 0 || q < 0 {
            return E::zero();
        }
        pow(F::Su(p as u32, q as u32), 1)
    }
    pub fn su_c(n: i64) -> E {
        pow(F::SuCompact(nn(n)), 1)
    }
    pub fn su_c_pow(n: i64, k: i64) -> E {
        pow(F::SuCompact(nn(n)), k)
    }
    /// `su*(m)` for even `m`.
    pub fn su_star(m: i64) -> E {
        debug_assert!(m % 2 == 0);
        pow(F::SuStar(nn(m / 2)), 1)
    }
    pub fn su_star_pow(m: i64, k: i64) -> E {
        debug_assert!(m % 2 == 0);
        pow(F::SuStar(nn(m / 2)), k)
    }
    pub fn so(p: i64, q: i64) -> E {
        if p < 0 || q < 0 {
            return E::zero();
        }
        pow(F::SoPq(p as u32, q as u32), 1)
    }
    pub fn so_c(n: i64) -> E {
        pow(F::SoC(nn(n)), 1)
    }
    pub fn so_c_pow(n: i64, k: i64) -> E {
        pow(F::SoC(nn(n)), k)
    }
    pub fn so_compact(n: i64) -> E {
        pow(F::SoCompact(nn(n)), 1)
    }
    /// `so*(m)` for even `m`.
    pub fn so_star(m: i64) -> E {
        debug_assert!(m % 2 == 0);
        pow(F::SoStar(nn(m / 2)), 1)
    }
    pub fn so_star_pow(m: i64, k: i64) -> E {
        debug_assert!(m % 2 == 0);
        pow(F::SoStar(nn(m / 2)), k)
    }
    pub fn sp_r(n: i64) -> E {
        pow(F::SpR(nn(n)), 1)
    }
    pub fn sp_r_pow(n: i64, k: i64) -> E {
        pow(F::SpR(nn(n)), k)
    }
    pub fn sp(p: i64, q: i64) -> E {
        if p < 0 || q < 0 {
            return E::zero();
        }
        pow(F::SpPq(p as u32, q as u32), 1)
    }
    pub fn sp_c(n: i64) -> E {
        pow(F::SpC(nn(n)), 1)
    }
    pub fn sp_c_pow(n: i64, k: i64) -> E {
        pow(F::SpC(nn(n)), k)
    }
    pub fn sp_compact(n: i64) -> E {
        pow(F::SpCompact(nn(n)), 1)
    }
    pub fn sp_compact_pow(n: i64, k: i64) -> E {
        pow(F::SpCompact(nn(n)), k)
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn exponent_merge() {
        let e = r(1) + r(2);
        assert_eq!(e, r(3));
        assert_eq!(e.to_string(), "R^3");
    }

    #[test]
    fn degenerate_factors_vanish() {
        let e = sl_r(1) + sp_compact(0) + su(2, 1);
        assert_eq!(e, su(1, 2));
        assert_eq!(e.to_string(), "su(1,2)");
    }

    #[test]
    fn so_rank_one_orientations_are_kept_apart() {
        let pos = LieAlgebraExpr::from_factors([(AtomicFactor::SoPq(2, 0), 1)]);
        let neg = LieAlgebraExpr::from_factors([(AtomicFactor::SoPq(0, 2), 1)]);
        assert_eq!(pos, so2_pos());
        assert_eq!(neg, so2_neg());
        assert_ne!(pos, neg);
        assert_ne!(pos, so2(1));
        assert_eq!(pos.iso_key(), neg.iso_key());
        assert_eq!(pos.iso_key(), so2(1).iso_key());
    }

    #[test]
    fn indefinite_so_keeps_written_order() {
        assert_ne!(so(1, 2), so(2, 1));
        assert_eq!(so(1, 2).iso_key(), so(2, 1).iso_key());
    }

    #[test]
    fn rank_one_coincidences_fold() {
        assert_eq!(sp_compact(1), su_c(2));
        assert_eq!(su_star(2), su_c(2));
        assert_eq!(u1(1), so2(1));
        assert_eq!(so_star(2), so2(1));
        assert_eq!(sp_r(1), sl_r(2));
        assert_eq!(su(1, 1), sl_r(2));
        assert_eq!(sp_c(1), sl_c(2));
        assert_eq!(so_c(2), c(1));
        assert_eq!(u_n(1), so2(1));
        assert_eq!(u_n(3), so2(1) + su_c(3));
    }

    #[test]
    fn zero_renders_as_braces() {
        assert_eq!(zero().to_string(), "{0}");
        assert_eq!(zero().render(Style::Latex), "{0}");
    }

    #[test]
    fn latex_style() {
        let e = r(2) + so2(3) + sl_c(2);
        assert_eq!(
            e.render(Style::Latex),
            "\\mathbb{R}^{2}+\\mathfrak{so}(2)^{3}+\\mathfrak{sl}(2,C)"
        );
    }

    #[test]
    fn json_round_trip() {
        let e = r(2) + so2_pos() + su_star(6) + so(1, 2) + sp(1, 3);
        let j = e.to_json();
        let back = LieAlgebraExpr::from_json(&j).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn instantiated_render() {
        // sl(2,C)^p + sp(n-2p) at p = 1, n = 3; sp(1) folds to su(2).
        let (p, n) = (1, 3);
        let e = sl_c_pow(2, p) + sp_compact(n - 2 * p);
        assert_eq!(e.to_string(), "sl(2,C) + su(2)");
        assert_eq!(e, sl_c(2) + su_c(2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_factor() -> impl Strategy<Value = AtomicFactor> {
            use AtomicFactor::*;
            prop_oneof![
                Just(R),
                Just(C),
                Just(U1),
                Just(So2(Orientation::Neutral)),
                Just(So2(Orientation::Positive)),
                Just(So2(Orientation::Negative)),
                (0u32..6).prop_map(SlR),
                (0u32..6).prop_map(SlC),
                (0u32..4, 0u32..4).prop_map(|(p, q)| Su(p, q)),
                (0u32..4).prop_map(SuStar),
                (0u32..4, 0u32..4).prop_map(|(p, q)| SoPq(p, q)),
                (0u32..6).prop_map(SoC),
                (0u32..4).prop_map(SoStar),
                (0u32..4).prop_map(SpR),
                (0u32..4, 0u32..4).prop_map(|(p, q)| SpPq(p, q)),
                (0u32..4).prop_map(SpC),
                (0u32..6).prop_map(SuCompact),
                (0u32..4).prop_map(SpCompact),
                (0u32..6).prop_map(SoCompact),
            ]
        }

        proptest! {
            #[test]
            fn canonicalize_idempotent(raw in proptest::collection::vec((arb_factor(), 0u32..4), 0..12)) {
                let e = LieAlgebraExpr::from_factors(raw);
                prop_assert_eq!(e.canonicalize(), e.clone());
                prop_assert_eq!(e.canonicalize().canonicalize(), e);
            }

            #[test]
            fn equality_invariant_under_reordering_and_splitting(
                raw in proptest::collection::vec((arb_factor(), 1u32..4), 0..10),
                seed in any::<u64>(),
            ) {
                let e = LieAlgebraExpr::from_factors(raw.clone());
                // Reorder deterministically from the seed and split exponents into units.
                let mut shuffled: Vec<(AtomicFactor, u32)> = Vec::new();
                for (f, k) in &raw {
                    for _ in 0..*k {
                        shuffled.push((*f, 1));
                    }
                }
                let n = shuffled.len().max(1);
                let mut state = seed;
                for i in (1..shuffled.len()).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    let j = (state >> 33) as usize % (i + 1);
                    shuffled.swap(i, j);
                }
                let _ = n;
                prop_assert_eq!(LieAlgebraExpr::from_factors(shuffled), e);
            }

            #[test]
            fn json_round_trips(raw in proptest::collection::vec((arb_factor(), 0u32..4), 0..10)) {
                let e = LieAlgebraExpr::from_factors(raw);
                let back = LieAlgebraExpr::from_json(&e.to_json()).unwrap();
                prop_assert_eq!(back, e);
            }
        }
    }
}
