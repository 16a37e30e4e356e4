//! Separating trees and the closed-form rank generating functions of lower
//! and upper intervals in the left weak order.
//!
//! The tree of a separable signed permutation records its recursive
//! decomposition into direct and skew sums, always splitting at the largest
//! admissible index. Internal nodes carry `⊕` (positive) or `⊖` (negative);
//! leaves carry the original entries. Nodes whose sign differs from their
//! parent's, `S⁺` and `S⁻`, determine the interval generating functions.

use std::fmt::{self, Write as _};

use serde_json::{json, Value};

use crate::error::Result;
use crate::patterns::{require_separable, require_separable_perm};
use crate::perm::{st, st_of, sts_of, SignedPerm};
use crate::qpoly::{q_binomial, q_factorial, two_term, IntPoly};
use crate::sums::{global_ascents, global_descents, SumOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SepTree {
    Leaf(i32),
    Node {
        op: SumOp,
        left: Box<SepTree>,
        right: Box<SepTree>,
        leaf_count: usize,
    },
}

impl SepTree {
    pub fn node(op: SumOp, left: SepTree, right: SepTree) -> SepTree {
        let leaf_count = left.leaf_count() + right.leaf_count();
        SepTree::Node {
            op,
            left: Box::new(left),
            right: Box::new(right),
            leaf_count,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            SepTree::Leaf(_) => 1,
            SepTree::Node { leaf_count, .. } => *leaf_count,
        }
    }

    /// The node label; `None` for a leaf.
    pub fn op(&self) -> Option<SumOp> {
        match self {
            SepTree::Leaf(_) => None,
            SepTree::Node { op, .. } => Some(*op),
        }
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<i32>) {
        match self {
            SepTree::Leaf(x) => out.push(*x),
            SepTree::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    /// Equality of shape and internal labels, ignoring leaf labels.
    pub fn skeleton_eq(&self, other: &SepTree) -> bool {
        match (self, other) {
            (SepTree::Leaf(_), SepTree::Leaf(_)) => true,
            (
                SepTree::Node {
                    op: a,
                    left: al,
                    right: ar,
                    ..
                },
                SepTree::Node {
                    op: b,
                    left: bl,
                    right: br,
                    ..
                },
            ) => a == b && al.skeleton_eq(bl) && ar.skeleton_eq(br),
            _ => false,
        }
    }

    /// `{"op": "+"|"-", "left": …, "right": …}` or `{"leaf": k}`.
    pub fn to_json(&self) -> Value {
        match self {
            SepTree::Leaf(x) => json!({ "leaf": x }),
            SepTree::Node {
                op, left, right, ..
            } => json!({
                "op": op.symbol(),
                "left": left.to_json(),
                "right": right.to_json(),
            }),
        }
    }
}

/// S-expression form, e.g. `(+ (- -1 -2) 3)`.
impl fmt::Display for SepTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SepTree::Leaf(x) => write!(f, "{x}"),
            SepTree::Node {
                op, left, right, ..
            } => write!(f, "({op} {left} {right})"),
        }
    }
}

/// Separating tree of a separable signed permutation of positive length.
pub fn build_tree(w: &SignedPerm) -> Result<SepTree> {
    require_separable(w)?;
    if w.is_empty() {
        return Err(crate::error::Error::EmptyPermutation);
    }
    Ok(build(w.entries(), w.entries()))
}

// `vals` is a signed permutation; `labels` are the original entries.
fn build(vals: &[i32], labels: &[i32]) -> SepTree {
    let n = vals.len();
    if n == 1 {
        return SepTree::Leaf(labels[0]);
    }
    let p = largest_split(vals).expect("separable signed permutation has a separating index");
    let op = if vals[p - 1] < vals[p] {
        SumOp::Direct
    } else {
        SumOp::Skew
    };
    SepTree::node(
        op,
        build(sts_of(&vals[..p]).entries(), &labels[..p]),
        build(sts_of(&vals[p..]).entries(), &labels[p..]),
    )
}

// Largest p in [1, n-1] such that either
// (a) {|w_1|..|w_p|} = [p] and w_{p+1}..w_n share one sign, or
// (b) {|w_1|..|w_p|} = [n-p+1, n] and every entry shares one sign.
fn largest_split(vals: &[i32]) -> Option<usize> {
    let n = vals.len();
    let all_same_sign = vals.iter().all(|&x| (x > 0) == (vals[0] > 0));
    let mut prefix_max = vec![0u32; n + 1];
    let mut prefix_min = vec![u32::MAX; n + 1];
    for (i, &x) in vals.iter().enumerate() {
        prefix_max[i + 1] = prefix_max[i].max(x.unsigned_abs());
        prefix_min[i + 1] = prefix_min[i].min(x.unsigned_abs());
    }
    let last_sign = vals[n - 1] > 0;
    let mut suffix_same_sign = true;
    for p in (1..n).rev() {
        suffix_same_sign &= (vals[p] > 0) == last_sign;
        let a = suffix_same_sign && prefix_max[p] as usize == p;
        let b = all_same_sign && prefix_min[p] as usize == n - p + 1;
        if a || b {
            return Some(p);
        }
    }
    None
}

/// Whether two trees agree up to leaf labels.
pub fn tree_skeleton_equal(a: &SepTree, b: &SepTree) -> bool {
    a.skeleton_eq(b)
}

/// `(S⁺, S⁻)`: non-root internal nodes whose sign differs from their
/// parent's, positive under negative and negative under positive, in
/// preorder. `N(V)` is [`SepTree::leaf_count`].
pub fn s_plus_minus(t: &SepTree) -> (Vec<&SepTree>, Vec<&SepTree>) {
    fn walk<'a>(
        t: &'a SepTree,
        parent: SumOp,
        plus: &mut Vec<&'a SepTree>,
        minus: &mut Vec<&'a SepTree>,
    ) {
        if let SepTree::Node {
            op, left, right, ..
        } = t
        {
            match (parent, op) {
                (SumOp::Skew, SumOp::Direct) => plus.push(t),
                (SumOp::Direct, SumOp::Skew) => minus.push(t),
                _ => {}
            }
            walk(left, *op, plus, minus);
            walk(right, *op, plus, minus);
        }
    }
    let (mut plus, mut minus) = (Vec::new(), Vec::new());
    if let SepTree::Node {
        op, left, right, ..
    } = t
    {
        walk(left, *op, &mut plus, &mut minus);
        walk(right, *op, &mut plus, &mut minus);
    }
    (plus, minus)
}

// Numerator ∏_{S⁻}[N]! and denominator ∏_{S⁺}[N]!.
fn ratio_parts(t: &SepTree) -> (IntPoly, IntPoly) {
    let (plus, minus) = s_plus_minus(t);
    let fac = |v: Vec<&SepTree>| v.iter().map(|x| q_factorial(x.leaf_count())).product();
    (fac(minus), fac(plus))
}

fn two_terms(idx: impl Iterator<Item = usize>) -> IntPoly {
    idx.map(two_term).product()
}

struct Sides {
    lower: IntPoly,
    upper: IntPoly,
}

fn b_sides(w: &SignedPerm) -> Result<Sides> {
    let t = build_tree(w)?;
    let n = w.len();
    let (num, den) = ratio_parts(&t);
    let neg = w.negative_positions();
    let neg_part = two_terms(neg.iter().copied());
    let pos_part = two_terms((1..=n).filter(|i| !neg.contains(i)));
    let e = w.entries();
    let ascending = if n == 1 { e[0] > 0 } else { e[0] < e[n - 1] };
    let nfac = q_factorial(n);
    let (lower, upper) = if ascending {
        (
            (&num * &neg_part).div_exact(&den)?,
            (&den * &nfac * pos_part).div_exact(&num)?,
        )
    } else {
        (
            (&num * &nfac * neg_part).div_exact(&den)?,
            (&den * &pos_part).div_exact(&num)?,
        )
    };
    Ok(Sides { lower, upper })
}

/// `Σ_{u <=_L w} q^{ℓ(u)}` over `B_n`, from the separating tree.
pub fn rank_gf_lower_b(w: &SignedPerm) -> Result<IntPoly> {
    Ok(b_sides(w)?.lower)
}

/// `Σ_{v >=_L w} q^{ℓ(v) - ℓ(w)}` over `B_n`, from the separating tree.
pub fn rank_gf_upper_b(w: &SignedPerm) -> Result<IntPoly> {
    Ok(b_sides(w)?.upper)
}

fn s_sides(w: &SignedPerm) -> Result<Sides> {
    require_separable_perm(w)?;
    let t = build_tree(w)?;
    let (num, den) = ratio_parts(&t);
    let nfac = q_factorial(w.len());
    let (lower, upper) = if t.op() == Some(SumOp::Skew) {
        ((&num * &nfac).div_exact(&den)?, den.div_exact(&num)?)
    } else {
        (num.div_exact(&den)?, (&den * &nfac).div_exact(&num)?)
    };
    Ok(Sides { lower, upper })
}

/// `Σ_{u <=_L w} q^{ℓ(u)}` over `S_n`, from the separating tree.
pub fn rank_gf_lower_s(w: &SignedPerm) -> Result<IntPoly> {
    Ok(s_sides(w)?.lower)
}

/// `Σ_{v >=_L w} q^{ℓ(v) - ℓ(w)}` over `S_n`, from the separating tree.
pub fn rank_gf_upper_s(w: &SignedPerm) -> Result<IntPoly> {
    Ok(s_sides(w)?.upper)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Interval generating function over `S_n` by recursion on global ascents
/// and descents, with a Gaussian binomial at each split.
pub fn rank_gf_s_recursive(w: &SignedPerm, side: Side) -> Result<IntPoly> {
    require_separable_perm(w)?;
    Ok(s_recursive(w, side))
}

fn s_recursive(w: &SignedPerm, side: Side) -> IntPoly {
    let n = w.len();
    if n <= 1 {
        return IntPoly::one();
    }
    let e = w.entries();
    if let Some(&p) = global_ascents(w).expect("unsigned").last() {
        let head = SignedPerm::from_vec_unchecked(e[..p].to_vec());
        let prod = s_recursive(&head, side) * s_recursive(&st_of(&e[p..]), side);
        return match side {
            Side::Lower => prod,
            Side::Upper => q_binomial(n, p) * prod,
        };
    }
    let p = *global_descents(w)
        .expect("unsigned")
        .last()
        .expect("separable permutation has a global ascent or descent");
    let tail = SignedPerm::from_vec_unchecked(e[p..].to_vec());
    let prod = s_recursive(&st_of(&e[..p]), side) * s_recursive(&tail, side);
    match side {
        Side::Lower => q_binomial(n, p) * prod,
        Side::Upper => prod,
    }
}

/// `F(Λ^S_{st w}) · ∏_{i ∈ Neg(w)} (1 + q^i)`, with the type-A factor from
/// [`rank_gf_s_recursive`].
pub fn rank_gf_lower_b_via_reduction(w: &SignedPerm) -> Result<IntPoly> {
    require_separable(w)?;
    let s = rank_gf_s_recursive(&st(w.entries())?, Side::Lower)?;
    Ok(s * two_terms(w.negative_positions().into_iter()))
}

/// `F(V^S_{st w}) · ∏_{i ∉ Neg(w)} (1 + q^i)`.
pub fn rank_gf_upper_b_via_reduction(w: &SignedPerm) -> Result<IntPoly> {
    require_separable(w)?;
    let s = rank_gf_s_recursive(&st(w.entries())?, Side::Upper)?;
    let neg = w.negative_positions();
    Ok(s * two_terms((1..=w.len()).filter(|i| !neg.contains(i))))
}

/// `F(B_n, q) = [n]! (n)!`.
pub fn f_bn(n: usize) -> IntPoly {
    q_factorial(n) * crate::qpoly::two_factorial(n)
}

/// DOT rendering; nodes are numbered in preorder.
pub fn tree_to_dot(t: &SepTree) -> String {
    fn walk(t: &SepTree, next: &mut usize, out: &mut String) -> usize {
        let id = *next;
        *next += 1;
        match t {
            SepTree::Leaf(x) => {
                let _ = writeln!(out, "  n{id} [label=\"{x}\", shape=plaintext];");
            }
            SepTree::Node {
                op, left, right, ..
            } => {
                let _ = writeln!(out, "  n{id} [label=\"{op}\", shape=circle];");
                let l = walk(left, next, out);
                let r = walk(right, next, out);
                let _ = writeln!(out, "  n{id} -> n{l};");
                let _ = writeln!(out, "  n{id} -> n{r};");
            }
        }
        id
    }
    let mut out = String::from("digraph separating_tree {\n");
    walk(t, &mut 0, &mut out);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_int;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn leaf(x: i32) -> SepTree {
        SepTree::Leaf(x)
    }

    fn plus(l: SepTree, r: SepTree) -> SepTree {
        SepTree::node(SumOp::Direct, l, r)
    }

    fn minus(l: SepTree, r: SepTree) -> SepTree {
        SepTree::node(SumOp::Skew, l, r)
    }

    fn nine_leaf_tree() -> SepTree {
        minus(
            plus(
                minus(
                    leaf(1),
                    plus(plus(leaf(-5), minus(leaf(-3), leaf(-4))), leaf(-2)),
                ),
                leaf(6),
            ),
            plus(leaf(-9), minus(leaf(-7), leaf(-8))),
        )
    }

    fn counts(v: &[&SepTree]) -> Vec<usize> {
        let mut c: Vec<usize> = v.iter().map(|t| t.leaf_count()).collect();
        c.sort_unstable();
        c
    }

    #[test]
    fn fixture_trees() {
        let w = p("1 -5 -3 -4 -2 6 -9 -7 -8");
        let t = build_tree(&w).unwrap();
        assert_eq!(t, nine_leaf_tree());
        assert_eq!(t.leaves(), w.entries());
        assert!(tree_skeleton_equal(
            &t,
            &build_tree(&p("8 4 6 5 7 9 1 3 2")).unwrap()
        ));
        let (sp, sm) = s_plus_minus(&t);
        assert_eq!(counts(&sm), vec![2, 2, 5]);
        assert_eq!(counts(&sp), vec![3, 4, 6]);

        let t3 = build_tree(&p("-1 -2 3")).unwrap();
        assert_eq!(t3, plus(minus(leaf(-1), leaf(-2)), leaf(3)));
        assert_eq!(t3.to_string(), "(+ (- -1 -2) 3)");
        let (sp, sm) = s_plus_minus(&t3);
        assert!(sp.is_empty());
        assert_eq!(counts(&sm), vec![2]);

        assert_eq!(build_tree(&p("1")).unwrap(), leaf(1));
        assert!(build_tree(&p("2 -1")).is_err());
        assert!(build_tree(&SignedPerm::empty()).is_err());
    }

    #[test]
    fn skeleton_examples() {
        assert!(leaf(1).skeleton_eq(&leaf(-1)));
        assert!(!plus(leaf(1), leaf(2)).skeleton_eq(&minus(leaf(1), leaf(2))));
        let t = plus(leaf(1), leaf(2));
        let (sp, sm) = s_plus_minus(&t);
        assert!(sp.is_empty() && sm.is_empty());
    }

    #[test]
    fn example_polynomials() {
        let w = p("-1 -2 3");
        assert_eq!(
            rank_gf_lower_b(&w).unwrap(),
            IntPoly::from_i64s(&[1, 2, 2, 2, 1])
        );
        assert_eq!(
            rank_gf_upper_b(&w).unwrap(),
            IntPoly::from_i64s(&[1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            rank_gf_lower_b_via_reduction(&w).unwrap(),
            IntPoly::from_i64s(&[1, 2, 2, 2, 1])
        );
        assert_eq!(
            rank_gf_upper_b_via_reduction(&w).unwrap(),
            IntPoly::from_i64s(&[1, 1, 1, 1, 1, 1])
        );
        assert_eq!(rank_gf_lower_b(&p("1")).unwrap(), IntPoly::one());
        assert_eq!(rank_gf_upper_b(&p("1")).unwrap(), two_term(1));
        assert_eq!(rank_gf_lower_b(&p("-1")).unwrap(), two_term(1));
        assert_eq!(rank_gf_upper_b(&p("-1")).unwrap(), IntPoly::one());
        assert_eq!(
            rank_gf_lower_b_via_reduction(&p("-1")).unwrap(),
            two_term(1)
        );
    }

    #[test]
    fn nine_leaf_polynomials() {
        let w = p("1 -5 -3 -4 -2 6 -9 -7 -8");
        let fac = |ns: &[usize]| -> IntPoly { ns.iter().map(|&n| q_factorial(n)).product() };
        let expect_lower =
            (fac(&[2, 2, 5]) * q_factorial(9) * two_terms([2, 3, 4, 5, 7, 8, 9].into_iter()))
                .div_exact(&fac(&[3, 4, 6]))
                .unwrap();
        let expect_upper = (fac(&[3, 4, 6]) * two_terms([1, 6].into_iter()))
            .div_exact(&fac(&[2, 2, 5]))
            .unwrap();
        let lower = rank_gf_lower_b(&w).unwrap();
        let upper = rank_gf_upper_b(&w).unwrap();
        assert_eq!(lower, expect_lower);
        assert_eq!(upper, expect_upper);
        assert_eq!(&lower * &upper, f_bn(9));
        assert_eq!(lower, rank_gf_lower_b_via_reduction(&w).unwrap());
        assert_eq!(upper, rank_gf_upper_b_via_reduction(&w).unwrap());

        let s = p("8 4 6 5 7 9 1 3 2");
        let lower_s = rank_gf_lower_s(&s).unwrap();
        assert_eq!(
            lower_s,
            IntPoly::from_i64s(&[
                1, 4, 9, 17, 29, 44, 62, 83, 104, 123, 139, 149, 152, 149, 139, 123, 104, 83, 62,
                44, 29, 17, 9, 4, 1
            ])
        );
        assert_eq!(
            rank_gf_upper_s(&s).unwrap(),
            IntPoly::from_i64s(&[1, 4, 10, 18, 26, 32, 34, 32, 26, 18, 10, 4, 1])
        );
        assert_eq!(
            lower_s,
            lower
                .div_exact(&two_terms(w.negative_positions().into_iter()))
                .unwrap()
        );
        assert_eq!(lower_s, rank_gf_s_recursive(&s, Side::Lower).unwrap());
        assert_eq!(
            rank_gf_upper_s(&s).unwrap(),
            rank_gf_s_recursive(&s, Side::Upper).unwrap()
        );
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(rank_gf_lower_s(&p("2 1")).unwrap(), q_int(2));
        assert_eq!(rank_gf_lower_s(&p("1 2")).unwrap(), IntPoly::one());
        assert_eq!(
            rank_gf_s_recursive(&p("1 2"), Side::Lower).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            rank_gf_s_recursive(&p("2 1"), Side::Lower).unwrap(),
            q_int(2)
        );
        assert_eq!(
            rank_gf_s_recursive(&p("2 1 4 3"), Side::Lower).unwrap(),
            q_int(2) * q_int(2)
        );
        assert!(rank_gf_lower_s(&p("-1")).is_err());
        assert!(rank_gf_lower_s(&p("2 4 1 3")).is_err());
    }

    #[test]
    fn f_bn_examples() {
        assert_eq!(f_bn(0), IntPoly::one());
        assert_eq!(f_bn(2), IntPoly::from_i64s(&[1, 2, 2, 2, 1]));
        assert_eq!(f_bn(3).eval_at_one(), 48.into());
    }

    #[test]
    fn dot_and_json() {
        assert_eq!(
            tree_to_dot(&leaf(1)),
            "digraph separating_tree {\n  n0 [label=\"1\", shape=plaintext];\n}\n"
        );
        let t = build_tree(&p("-1 -2 3")).unwrap();
        let dot = tree_to_dot(&t);
        assert_eq!(dot.matches("label=").count(), 5);
        assert_eq!(dot, tree_to_dot(&t.clone()));
        assert_eq!(
            t.to_json(),
            json!({"op": "+", "left": {"op": "-", "left": {"leaf": -1}, "right": {"leaf": -2}}, "right": {"leaf": 3}})
        );
    }
}
