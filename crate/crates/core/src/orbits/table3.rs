//! Golden per-(w, Θ) classification for `(sl(4,R), so(2,2))`.
//!
//! The six coset representatives of `W(A_3)/W(A_1 × A_1)` each carry eight
//! subsets; the subalgebra for every one of the 48 rows is recorded
//! literally, including the definiteness annotations that distinguish
//! `so(2,0)`, `so(0,2)` and `so(1,1)` placements between blocks.

use crate::liealg::{build, LieAlgebraExpr};
use crate::rootsys::{reflection, RootVector, WeylElement};

/// One representative block: the reduced word (indices of simple reflections
/// `s_i = s_{e_i - e_{i+1}}`, rightmost applied first), the expected
/// transformed simple system, and the eight subalgebras indexed by the
/// keep-mask over the three transformed simple roots.
pub struct Sl4Block {
    pub word: &'static [usize],
    pub w_psi: [[i32; 4]; 3],
    pub values: [&'static str; 8],
}

/// Masks index subsets: bit `j` set means the image of the `(j+1)`-th simple
/// root is kept in Θ.
pub const SL4_BLOCKS: [Sl4Block; 6] = [
    Sl4Block {
        word: &[],
        w_psi: [[1, -1, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]],
        values: [
            "0",               // ∅
            "so(2,0)",         // {ψ1}
            "so(1,1)",         // {ψ2}
            "so(2,1)",         // {ψ1,ψ2}
            "so(0,2)",         // {ψ3}
            "so(2,0)+so(0,2)", // {ψ1,ψ3}
            "so(1,2)",         // {ψ2,ψ3}
            "so(2,2)",         // Ψ
        ],
    },
    Sl4Block {
        word: &[2],
        w_psi: [[1, 0, -1, 0], [0, -1, 1, 0], [0, 1, 0, -1]],
        values: [
            "0",
            "so(1,1)",
            "so(1,1)",
            "so(2,1)",
            "so(1,1)",
            "so(1,1)+so(1,1)",
            "so(1,2)",
            "so(2,2)",
        ],
    },
    Sl4Block {
        word: &[1, 2],
        w_psi: [[0, 1, -1, 0], [-1, 0, 1, 0], [1, 0, 0, -1]],
        values: [
            "0",
            "so(1,1)",
            "so(1,1)",
            "so(2,1)",
            "so(1,1)",
            "so(1,1)+so(1,1)",
            "so(1,2)",
            "so(2,2)",
        ],
    },
    Sl4Block {
        word: &[3, 2],
        w_psi: [[1, 0, 0, -1], [0, -1, 0, 1], [0, 1, -1, 0]],
        values: [
            "0",
            "so(1,1)",
            "so(1,1)",
            "so(2,1)",
            "so(1,1)",
            "so(1,1)+so(1,1)",
            "so(1,2)",
            "so(2,2)",
        ],
    },
    Sl4Block {
        word: &[1, 3, 2],
        w_psi: [[0, 1, 0, -1], [-1, 0, 0, 1], [1, 0, -1, 0]],
        values: [
            "0",
            "so(1,1)",
            "so(1,1)",
            "so(2,1)",
            "so(1,1)",
            "so(1,1)+so(1,1)",
            "so(1,2)",
            "so(2,2)",
        ],
    },
    Sl4Block {
        word: &[2, 1, 3, 2],
        w_psi: [[0, 0, 1, -1], [-1, 0, 0, 1], [1, -1, 0, 0]],
        values: [
            "0",
            "so(0,2)",
            "so(1,1)",
            "so(1,2)",
            "so(2,0)",
            "so(2,0)+so(0,2)",
            "so(2,1)",
            "so(2,2)",
        ],
    },
];

/// Parse a golden value: `0` or a `+`-separated list of `so(p,q)` factors.
pub fn parse_so_sum(s: &str) -> LieAlgebraExpr {
    if s == "0" {
        return LieAlgebraExpr::zero();
    }
    let mut out = LieAlgebraExpr::zero();
    for part in s.split('+') {
        let inner = part
            .trim()
            .strip_prefix("so(")
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or_else(|| panic!("bad golden factor {part}"));
        let (p, q) = inner
            .split_once(',')
            .expect("so factor needs two arguments");
        out = out + build::so(p.trim().parse().unwrap(), q.trim().parse().unwrap());
    }
    out
}

/// The Weyl element of a block word (dimension 4).
pub fn block_element(word: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(4);
    for &i in word.iter().rev() {
        let s = reflection(&RootVector::diff(4, i, i + 1)).expect("simple reflection");
        w = s.compose(&w);
    }
    w
}

/// Look up the golden value for a representative and a keep-mask.
pub fn lookup(w: &WeylElement, mask: u32) -> Option<LieAlgebraExpr> {
    SL4_BLOCKS.iter().find_map(|block| {
        (block_element(block.word) == *w).then(|| parse_so_sum(block.values[mask as usize]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_words_produce_the_recorded_simple_systems() {
        for block in &SL4_BLOCKS {
            let w = block_element(block.word);
            let psi: Vec<RootVector> = (1..=3).map(|i| RootVector::diff(4, i, i + 1)).collect();
            for (j, root) in psi.iter().enumerate() {
                assert_eq!(
                    w.act_on_functional(root),
                    RootVector(block.w_psi[j].to_vec()),
                    "word {:?}, position {}",
                    block.word,
                    j + 1
                );
            }
        }
    }

    #[test]
    fn forty_eight_rows_nine_distinct_values() {
        let mut all = std::collections::HashSet::new();
        let mut rows = 0;
        for block in &SL4_BLOCKS {
            for v in &block.values {
                all.insert(parse_so_sum(v));
                rows += 1;
            }
        }
        assert_eq!(rows, 48);
        assert_eq!(all.len(), 9);
    }
}
