//! Per-family rules that evaluate `h_Θ` from the pattern of removed simple
//! roots.
//!
//! A subset `Θ ⊆ Ψ` is recorded as the set of removed positions. Each rule
//! row receives the data of the removal pattern — `k` (the row's own count),
//! the gaps `i_l - i_{l-1}` between consecutive removal indices, and the
//! largest removed index `i_k` — and returns the classified subalgebra.

use std::sync::Arc;

use crate::liealg::LieAlgebraExpr;

/// Shape of the simple system underlying a rule set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleShape {
    /// Family A: no distinguished end root; every subset uses one row with
    /// `k + 1` gaps (the last gap runs to `n = rank + 1`).
    TypeA,
    /// B/C/BC: positions `1..rank-1` are difference roots, position `rank` is
    /// the short or long end root.
    Tailed,
    /// D: positions `rank-1` and `rank` are the two symmetric end roots.
    DTailed,
}

/// One row of a classification table: `(k, gaps, i_k) ↦ h_Θ`.
#[derive(Clone)]
pub struct RowRule(pub Arc<dyn Fn(i64, &[i64], i64) -> LieAlgebraExpr + Send + Sync>);

impl RowRule {
    pub fn new(f: impl Fn(i64, &[i64], i64) -> LieAlgebraExpr + Send + Sync + 'static) -> RowRule {
        RowRule(Arc::new(f))
    }

    pub fn eval(&self, k: i64, gaps: &[i64], ik: i64) -> LieAlgebraExpr {
        (self.0)(k, gaps, ik)
    }
}

impl std::fmt::Debug for RowRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("RowRule(..)")
    }
}

/// How `h_Θ` is classified for one family at one parameter point.
#[derive(Debug, Clone)]
pub enum ThetaRules {
    /// Evaluate the family's table rows from the removal pattern.
    Positional(PositionalRules),
    /// The worked low-rank example with per-(w,Θ) values; handled by the
    /// orbit module's golden table.
    Sl4RSo22,
}

#[derive(Debug, Clone)]
pub struct PositionalRules {
    pub shape: RuleShape,
    /// Row applied when the end root is among the removed positions
    /// (`None` for shape `TypeA`).
    pub with_last: Option<RowRule>,
    /// Row applied when the end root is kept (the only row for `TypeA`).
    pub without_last: RowRule,
}

impl PositionalRules {
    pub fn type_a(row: RowRule) -> ThetaRules {
        ThetaRules::Positional(PositionalRules {
            shape: RuleShape::TypeA,
            with_last: None,
            without_last: row,
        })
    }

    pub fn tailed(with_last: RowRule, without_last: RowRule) -> ThetaRules {
        ThetaRules::Positional(PositionalRules {
            shape: RuleShape::Tailed,
            with_last: Some(with_last),
            without_last,
        })
    }

    pub fn d_tailed(with_last: RowRule, without_last: RowRule) -> ThetaRules {
        ThetaRules::Positional(PositionalRules {
            shape: RuleShape::DTailed,
            with_last: Some(with_last),
            without_last,
        })
    }
}

/// Sum a per-gap factor over all gaps.
pub fn segs(gaps: &[i64], f: impl Fn(i64) -> LieAlgebraExpr) -> LieAlgebraExpr {
    gaps.iter()
        .fold(LieAlgebraExpr::zero(), |acc, &d| acc + f(d))
}
