//! Direct and skew sums, global ascents and descents, the canonical block
//! decomposition, and enumeration of the separable classes.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::patterns::{is_separable_perm, is_separable_signed, require_separable};
use crate::perm::{sts_of, SignedPerm};

/// `⊕` or `⊖`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumOp {
    Direct,
    Skew,
}

impl SumOp {
    pub fn symbol(self) -> &'static str {
        match self {
            SumOp::Direct => "+",
            SumOp::Skew => "-",
        }
    }
}

impl fmt::Display for SumOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `u ⊕ v`: `v` is shifted up by `|u|` in absolute value, keeping signs.
/// The empty permutation is a two-sided identity.
pub fn direct_sum(u: &SignedPerm, v: &SignedPerm) -> SignedPerm {
    let p = u.len() as i32;
    let mut out = u.entries().to_vec();
    out.extend(v.entries().iter().map(|&x| x + x.signum() * p));
    SignedPerm::from_vec_unchecked(out)
}

/// `u ⊖ v`: `u` is shifted up by `|v|` in absolute value. Defined only when
/// every entry of both operands has the same sign.
pub fn skew_sum(u: &SignedPerm, v: &SignedPerm) -> Result<SignedPerm> {
    let mut signs = u.entries().iter().chain(v.entries()).map(|&x| x > 0);
    if let Some(first) = signs.next() {
        if signs.any(|s| s != first) {
            return Err(Error::MixedSigns);
        }
    }
    let q = v.len() as i32;
    let mut out: Vec<i32> = u.entries().iter().map(|&x| x + x.signum() * q).collect();
    out.extend_from_slice(v.entries());
    Ok(SignedPerm::from_vec_unchecked(out))
}

fn prefix_max_abs(w: &SignedPerm) -> Vec<u32> {
    w.entries()
        .iter()
        .scan(0, |m, &x| {
            *m = (*m).max(x.unsigned_abs());
            Some(*m)
        })
        .collect()
}

/// Positions `p ∈ [1, n-1]` with `w_i < w_j` for all `i <= p < j`.
pub fn global_ascents(w: &SignedPerm) -> Result<Vec<usize>> {
    w.require_unsigned()?;
    Ok(prefix_max_abs(w)
        .iter()
        .enumerate()
        .take(w.len().saturating_sub(1))
        .filter(|&(i, &m)| m as usize == i + 1)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Positions `p ∈ [1, n-1]` with `w_i > w_j` for all `i <= p < j`.
pub fn global_descents(w: &SignedPerm) -> Result<Vec<usize>> {
    w.require_unsigned()?;
    let n = w.len();
    let mut min = u32::MAX;
    let mut out = Vec::new();
    for (i, &x) in w.entries().iter().enumerate().take(n.saturating_sub(1)) {
        min = min.min(x as u32);
        // prefix of length i+1 is {n-i, …, n}
        if min as usize == n - i {
            out.push(i + 1);
        }
    }
    Ok(out)
}

/// The two ways a signed permutation can split at a position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub at: usize,
    pub op: SumOp,
    pub left: SignedPerm,
    pub right: SignedPerm,
}

/// All decompositions `w = u ⊕ v` or `w = u ⊖ v` with `|u| = p`, for
/// `1 <= p < n`, with no separability requirement on the factors.
pub fn splits_at(w: &SignedPerm, p: usize) -> Vec<Split> {
    let n = w.len();
    assert!(0 < p && p < n);
    let e = w.entries();
    let max_prefix = e[..p].iter().map(|x| x.unsigned_abs()).max().unwrap();
    let min_prefix = e[..p].iter().map(|x| x.unsigned_abs()).min().unwrap();
    let mut out = Vec::new();
    if max_prefix as usize == p {
        out.push(Split {
            at: p,
            op: SumOp::Direct,
            left: SignedPerm::from_vec_unchecked(e[..p].to_vec()),
            right: sts_of(&e[p..]),
        });
    }
    let same_sign = e.iter().all(|&x| x > 0) || e.iter().all(|&x| x < 0);
    if same_sign && min_prefix as usize == n - p + 1 {
        out.push(Split {
            at: p,
            op: SumOp::Skew,
            left: sts_of(&e[..p]),
            right: SignedPerm::from_vec_unchecked(e[p..].to_vec()),
        });
    }
    out
}

/// The unique maximal decomposition `w = B_1 ⊕ sts(B_2) ⊕ … ⊕ sts(B_{k+1})`
/// into factors whose neighbours have opposite signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// `0 = p_0 < p_1 < … < p_{k+1} = n`.
    pub boundaries: Vec<usize>,
    /// Block 1 verbatim, later blocks signed-standardized.
    pub blocks: Vec<SignedPerm>,
}

impl BlockDecomposition {
    /// Iterated direct sum of the blocks.
    pub fn reassemble(&self) -> SignedPerm {
        self.blocks
            .iter()
            .fold(SignedPerm::empty(), |acc, b| direct_sum(&acc, b))
    }
}

/// Block decomposition of a separable signed permutation by a single
/// left-to-right scan: a boundary sits at every sign change.
pub fn canonical_blocks(w: &SignedPerm) -> Result<BlockDecomposition> {
    require_separable(w)?;
    let e = w.entries();
    let n = e.len();
    let max = prefix_max_abs(w);
    let mut boundaries = vec![0];
    for p in 1..n {
        if (e[p - 1] > 0) != (e[p] > 0) {
            // Separability forces the prefix to be exactly [p] here.
            assert_eq!(
                max[p - 1] as usize,
                p,
                "sign change at {p} in {w} is not a boundary"
            );
            boundaries.push(p);
        }
    }
    if n > 0 {
        boundaries.push(n);
    }
    let blocks = boundaries
        .windows(2)
        .enumerate()
        .map(|(i, b)| {
            let f = &e[b[0]..b[1]];
            if i == 0 {
                SignedPerm::from_vec_unchecked(f.to_vec())
            } else {
                sts_of(f)
            }
        })
        .collect();
    Ok(BlockDecomposition { boundaries, blocks })
}

/// How to produce a separable class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Closure of the rank-one seeds under `⊕` and legal `⊖`.
    #[default]
    Grammar,
    /// Filter the whole group by pattern avoidance.
    PatternFilter,
}

/// `K(B_n)` in lexicographic order.
pub fn enumerate_separable_b(n: usize) -> Vec<SignedPerm> {
    enumerate_separable_b_with(n, Strategy::Grammar)
}

/// `K(S_n)` in lexicographic order.
pub fn enumerate_separable_s(n: usize) -> Vec<SignedPerm> {
    enumerate_separable_s_with(n, Strategy::Grammar)
}

pub fn enumerate_separable_b_with(n: usize, strategy: Strategy) -> Vec<SignedPerm> {
    match strategy {
        Strategy::Grammar => grammar_closure(n, true),
        Strategy::PatternFilter => SignedPerm::all_signed(n)
            .into_iter()
            .filter(is_separable_signed)
            .collect(),
    }
}

pub fn enumerate_separable_s_with(n: usize, strategy: Strategy) -> Vec<SignedPerm> {
    match strategy {
        Strategy::Grammar => grammar_closure(n, false),
        Strategy::PatternFilter => SignedPerm::all_unsigned(n)
            .into_iter()
            .filter(|w| is_separable_perm(w).expect("unsigned"))
            .collect(),
    }
}

// Level m is the set of all u ⊕ v and legal u ⊖ v with |u| + |v| = m, both
// factors drawn from lower levels.
fn grammar_closure(n: usize, signed: bool) -> Vec<SignedPerm> {
    if n == 0 {
        return vec![SignedPerm::empty()];
    }
    let mut seeds = vec![SignedPerm::identity(1)];
    if signed {
        seeds.push(SignedPerm::longest_b(1));
    }
    let mut levels: Vec<Vec<SignedPerm>> = vec![Vec::new(), seeds];
    for m in 2..=n {
        let mut seen = HashSet::new();
        for p in 1..m {
            for u in &levels[p] {
                for v in &levels[m - p] {
                    seen.insert(direct_sum(u, v));
                    if let Ok(s) = skew_sum(u, v) {
                        seen.insert(s);
                    }
                }
            }
        }
        let mut level: Vec<_> = seen.into_iter().collect();
        level.sort_unstable();
        levels.push(level);
    }
    let mut out = levels.swap_remove(n);
    out.sort_unstable();
    out
}
