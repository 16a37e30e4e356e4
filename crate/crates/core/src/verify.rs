//! Exhaustive consistency checks over small ranks.
//!
//! Each criterion sweeps the relevant objects up to a fixed rank, capped by
//! the `max_rank` argument, and reports the first discrepancy it finds.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::bijection::{phi, psi, psi_closed};
use crate::patterns::{is_separable_perm, is_separable_signed};
use crate::perm::{st, SignedPerm};
use crate::qpoly::IntPoly;
use crate::septree::{
    build_tree, f_bn, rank_gf_lower_b, rank_gf_lower_b_via_reduction, rank_gf_lower_s,
    rank_gf_s_recursive, rank_gf_upper_b, rank_gf_upper_b_via_reduction, rank_gf_upper_s,
    s_plus_minus, tree_skeleton_equal, Side,
};
use crate::stats::{
    des_sets_a, des_sets_b, descent_polynomial_b, descent_polynomial_s, gamma_counts_b,
    gamma_expansion, is_gamma_positive,
};
use crate::sums::{enumerate_separable_b, enumerate_separable_s};
use crate::weak_order::{bfs_weak_order, length, leq_left_b, leq_left_s, Group, IntervalOracle};

/// Number of separable signed permutations of rank `0..=6`.
pub const SEPARABLE_B_COUNTS: [usize; 7] = [1, 2, 6, 22, 90, 394, 1806];

/// `φ` on separable permutations of length 3.
pub const PHI_VALUES_3: [(&str, &str); 6] = [
    ("1 2 3", "1 2"),
    ("1 3 2", "2 1"),
    ("2 1 3", "-1 2"),
    ("2 3 1", "1 -2"),
    ("3 1 2", "-2 -1"),
    ("3 2 1", "-1 -2"),
];

/// `φ` on separable permutations of length 4.
pub const PHI_VALUES_4: [(&str, &str); 22] = [
    ("1 2 3 4", "1 2 3"),
    ("2 1 3 4", "-1 2 3"),
    ("1 3 2 4", "2 1 3"),
    ("1 2 4 3", "1 3 2"),
    ("3 1 2 4", "-2 -1 3"),
    ("2 3 1 4", "1 -2 3"),
    ("2 1 4 3", "-1 3 2"),
    ("1 4 2 3", "3 1 2"),
    ("1 3 4 2", "2 3 1"),
    ("4 1 2 3", "-3 -2 -1"),
    ("3 2 1 4", "-1 -2 3"),
    ("2 3 4 1", "1 2 -3"),
    ("1 4 3 2", "3 2 1"),
    ("4 2 1 3", "-2 -3 -1"),
    ("4 1 3 2", "-3 -1 -2"),
    ("3 4 1 2", "1 -3 -2"),
    ("3 2 4 1", "-1 2 -3"),
    ("2 4 3 1", "2 1 -3"),
    ("4 3 1 2", "-1 -3 -2"),
    ("4 2 3 1", "-2 -1 -3"),
    ("3 4 2 1", "1 -2 -3"),
    ("4 3 2 1", "-1 -2 -3"),
];

/// Largest rank used by any criterion.
pub const FULL_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(s: &str) -> SignedPerm {
    s.parse().expect("fixture permutation")
}

fn report(id: u8, name: &'static str, check: Check) -> CriterionReport {
    let (passed, detail) = match check {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport {
        id,
        name,
        passed,
        detail,
    }
}

/// Runs all nine criteria with ranks capped at `max_rank`.
pub fn run_all(max_rank: usize) -> Vec<CriterionReport> {
    (1..=9).map(|id| run(id, max_rank)).collect()
}

/// Runs criterion `id` (1 to 9).
///
/// # Panics
///
/// If `id` is out of range.
pub fn run(id: u8, max_rank: usize) -> CriterionReport {
    let r = max_rank;
    match id {
        1 => report(1, "enumeration counts", enumeration(r.min(6))),
        2 => report(2, "bijection fixtures", bijection_fixtures()),
        3 => report(3, "bijection inverse sweep", inverse_sweep(r.min(5))),
        4 => report(4, "descent polynomial identity", descent_identity(r.min(6))),
        5 => report(5, "order isomorphism", order_isomorphism(r.min(4))),
        6 => report(
            6,
            "length and order oracles",
            length_oracles(r.min(4), r.min(3)),
        ),
        7 => report(
            7,
            "rank generating functions vs brute force",
            rank_gf_sweep(r.min(5), r.min(6)),
        ),
        8 => report(8, "fixture polynomials", fixture_polynomials()),
        9 => report(9, "structural properties", structural(r.min(6), r.min(5))),
        _ => panic!("criterion id {id} out of range 1..=9"),
    }
}

fn enumeration(max: usize) -> Check {
    let counts: Vec<usize> = (0..=max).map(|n| enumerate_separable_b(n).len()).collect();
    ensure(counts == SEPARABLE_B_COUNTS[..=max], || {
        format!(
            "counts {counts:?} differ from {:?}",
            &SEPARABLE_B_COUNTS[..=max]
        )
    })?;
    Ok(format!("#K(B_n), n = 0..={max}: {counts:?}"))
}

fn bijection_fixtures() -> Check {
    for (w, img) in PHI_VALUES_3.iter().chain(&PHI_VALUES_4) {
        let got = phi(&perm(w)).map_err(|e| e.to_string())?;
        ensure(got == perm(img), || {
            format!("phi({w}) = {got}, expected {img}")
        })?;
    }
    let got = psi(&perm("3 1 2 -4 -6 -5")).map_err(|e| e.to_string())?;
    ensure(got == perm("4 7 5 6 3 1 2"), || {
        format!("psi(3 1 2 -4 -6 -5) = {got}")
    })?;
    let got = phi(&perm("5 6 2 3 4 1")).map_err(|e| e.to_string())?;
    ensure(got == perm("1 -4 -3 -2 -5"), || {
        format!("phi(5 6 2 3 4 1) = {got}")
    })?;
    Ok("6 + 22 tabulated values and 2 worked examples".into())
}

fn inverse_sweep(max: usize) -> Check {
    let mut checked = 0;
    for n in 0..=max {
        for w in enumerate_separable_s(n + 1) {
            let v = phi(&w).map_err(|e| e.to_string())?;
            let back = psi(&v).map_err(|e| e.to_string())?;
            ensure(back == w, || format!("psi(phi({w})) = {back}"))?;
        }
        for v in enumerate_separable_b(n) {
            let w = psi(&v).map_err(|e| e.to_string())?;
            let closed = psi_closed(&v).map_err(|e| e.to_string())?;
            ensure(closed == w, || {
                format!("psi_closed({v}) = {closed}, psi = {w}")
            })?;
            let back = phi(&w).map_err(|e| e.to_string())?;
            ensure(back == v, || format!("phi(psi({v})) = {back}"))?;
            checked += 1;
        }
    }
    Ok(format!("n <= {max}: {checked} round trips each way"))
}

fn descent_identity(max: usize) -> Check {
    for n in 0..=max {
        let b = descent_polynomial_b(n);
        let s = descent_polynomial_s(n + 1);
        ensure(b == s, || {
            format!("n = {n}: B_n(t) = {b}, S_(n+1)(t) = {s}")
        })?;
        let gamma = gamma_expansion(&b, n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(is_gamma_positive(&gamma), || {
            format!("n = {n}: gamma {gamma:?} has a negative entry")
        })?;
        let direct = gamma_counts_b(n);
        ensure(gamma == direct, || {
            format!("n = {n}: gamma {gamma:?}, direct counts {direct:?}")
        })?;
    }
    if max >= 3 {
        let b3 = descent_polynomial_b(3);
        ensure(b3 == IntPoly::from_i64s(&[1, 10, 10, 1]), || {
            format!("B_3(t) = {b3}")
        })?;
        let g3 = gamma_expansion(&b3, 3).map_err(|e| e.to_string())?;
        ensure(g3 == [BigInt::from(1), BigInt::from(7)], || {
            format!("gamma(B_3) = {g3:?}")
        })?;
    }
    Ok(format!(
        "n <= {max}: B_n(t) = S_(n+1)(t), gamma vectors match direct counts"
    ))
}

fn order_isomorphism(rank: usize) -> Check {
    let ks = enumerate_separable_s(rank + 1);
    let images: Vec<SignedPerm> = ks.iter().map(|w| phi(w).expect("separable")).collect();
    for (u, pu) in ks.iter().zip(&images) {
        for (v, pv) in ks.iter().zip(&images) {
            let a = leq_left_s(u, v).map_err(|e| e.to_string())?;
            let b = leq_left_b(pu, pv).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{u} <= {v} is {a}, images give {b}"))?;
        }
    }
    Ok(format!(
        "{} pairs in K(S_{})",
        ks.len() * ks.len(),
        rank + 1
    ))
}

fn length_oracles(length_rank: usize, reach_rank: usize) -> Check {
    let mut elements = 0;
    for n in 0..=length_rank {
        let g = bfs_weak_order(n).map_err(|e| e.to_string())?;
        for (w, &d) in g.elements.iter().zip(&g.distance) {
            let l = length(w);
            ensure(l == d, || format!("length({w}) = {l}, BFS distance {d}"))?;
        }
        elements += g.elements.len();
    }
    let g = bfs_weak_order(reach_rank).map_err(|e| e.to_string())?;
    let reach = g.reachability();
    for (i, u) in g.elements.iter().enumerate() {
        for (j, w) in g.elements.iter().enumerate() {
            let a = leq_left_b(u, w).map_err(|e| e.to_string())?;
            ensure(a == reach[i][j], || {
                format!("{u} <= {w}: inclusion {a}, reachability {}", reach[i][j])
            })?;
        }
    }
    let m = g.elements.len();
    Ok(format!(
        "{elements} lengths for n <= {length_rank}; {} pairs in B_{reach_rank}",
        m * m
    ))
}

fn rank_gf_sweep(b_rank: usize, s_rank: usize) -> Check {
    let mut count = 0;
    for n in 0..=b_rank {
        let oracle = IntervalOracle::new(Group::B, n).map_err(|e| e.to_string())?;
        for w in enumerate_separable_b(n).iter().filter(|w| !w.is_empty()) {
            let e = |x: crate::error::Error| format!("{w}: {x}");
            let lower = [
                rank_gf_lower_b(w).map_err(e)?,
                rank_gf_lower_b_via_reduction(w).map_err(e)?,
                oracle.lower(w).map_err(e)?,
            ];
            ensure(lower[0] == lower[1] && lower[1] == lower[2], || {
                format!(
                    "lower {w}: tree {}, reduction {}, brute {}",
                    lower[0], lower[1], lower[2]
                )
            })?;
            let upper = [
                rank_gf_upper_b(w).map_err(e)?,
                rank_gf_upper_b_via_reduction(w).map_err(e)?,
                oracle.upper(w).map_err(e)?,
            ];
            ensure(upper[0] == upper[1] && upper[1] == upper[2], || {
                format!(
                    "upper {w}: tree {}, reduction {}, brute {}",
                    upper[0], upper[1], upper[2]
                )
            })?;
            count += 1;
        }
    }
    let mut count_s = 0;
    for n in 1..=s_rank {
        let oracle = IntervalOracle::new(Group::A, n).map_err(|e| e.to_string())?;
        for w in enumerate_separable_s(n) {
            let e = |x: crate::error::Error| format!("{w}: {x}");
            for (side, tree, brute) in [
                (
                    Side::Lower,
                    rank_gf_lower_s(&w).map_err(e)?,
                    oracle.lower(&w).map_err(e)?,
                ),
                (
                    Side::Upper,
                    rank_gf_upper_s(&w).map_err(e)?,
                    oracle.upper(&w).map_err(e)?,
                ),
            ] {
                let rec = rank_gf_s_recursive(&w, side).map_err(e)?;
                ensure(tree == brute && rec == brute, || {
                    format!("{side:?} {w}: tree {tree}, recursion {rec}, brute {brute}")
                })?;
            }
            count_s += 1;
        }
    }
    Ok(format!(
        "{count} signed (n <= {b_rank}) and {count_s} unsigned (n <= {s_rank}) permutations, both sides"
    ))
}

fn fixture_polynomials() -> Check {
    let w = perm("-1 -2 3");
    let lower = rank_gf_lower_b(&w).map_err(|e| e.to_string())?;
    let upper = rank_gf_upper_b(&w).map_err(|e| e.to_string())?;
    ensure(lower == IntPoly::from_i64s(&[1, 2, 2, 2, 1]), || {
        format!("lower(-1 -2 3) = {lower}")
    })?;
    ensure(upper == IntPoly::from_i64s(&[1; 6]), || {
        format!("upper(-1 -2 3) = {upper}")
    })?;

    let w = perm("1 -5 -3 -4 -2 6 -9 -7 -8");
    let t = build_tree(&w).map_err(|e| e.to_string())?;
    let (plus, minus) = s_plus_minus(&t);
    let sorted = |v: Vec<&crate::septree::SepTree>| {
        let mut c: Vec<usize> = v.iter().map(|x| x.leaf_count()).collect();
        c.sort_unstable();
        c
    };
    let (sp, sm) = (sorted(plus), sorted(minus));
    ensure(sm == [2, 2, 5] && sp == [3, 4, 6], || {
        format!("S+ {sp:?}, S- {sm:?}")
    })?;
    let lower = rank_gf_lower_b(&w).map_err(|e| e.to_string())?;
    let upper = rank_gf_upper_b(&w).map_err(|e| e.to_string())?;
    ensure(&lower * &upper == f_bn(9), || {
        "lower * upper != [9]!(9)!".to_string()
    })?;
    Ok("two worked intervals and the 9-leaf tree".into())
}

fn structural(poly_rank: usize, sweep_rank: usize) -> Check {
    for n in 1..=poly_rank {
        let f = f_bn(n);
        for w in enumerate_separable_b(n) {
            let e = |x: crate::error::Error| format!("{w}: {x}");
            let lower = rank_gf_lower_b(&w).map_err(e)?;
            let upper = rank_gf_upper_b(&w).map_err(e)?;
            ensure(&lower * &upper == f, || {
                format!("{w}: lower * upper != [n]!(n)!")
            })?;
            for (side, p) in [("lower", &lower), ("upper", &upper)] {
                let center = p.degree().unwrap_or(0);
                ensure(p.is_palindromic(center) && p.is_unimodal(), || {
                    format!("{w}: {side} {p} not palindromic and unimodal")
                })?;
            }
            let s = st(w.entries()).map_err(e)?;
            let (t, ts) = (build_tree(&w).map_err(e)?, build_tree(&s).map_err(e)?);
            ensure(tree_skeleton_equal(&t, &ts), || {
                format!("{w}: skeleton differs from st = {s}")
            })?;
        }
    }
    for n in 0..=sweep_rank {
        let kb = enumerate_separable_b(n);
        let w0 = SignedPerm::longest_b(n);
        for w in &kb {
            let images = [
                w0.compose(w).expect("same rank"),
                w.compose(&w0).expect("same rank"),
                w.inverse(),
            ];
            ensure(images.iter().all(is_separable_signed), || {
                format!("{w}: closure fails")
            })?;
            let s = st(w.entries()).map_err(|e| e.to_string())?;
            ensure(is_separable_perm(&s) == Ok(true), || {
                format!("st({w}) = {s} not separable")
            })?;
        }
        let abs: BTreeSet<SignedPerm> = kb.iter().map(SignedPerm::abs).collect();
        let ks: BTreeSet<SignedPerm> = enumerate_separable_s(n).into_iter().collect();
        ensure(abs == ks, || {
            format!("n = {n}: |K(B_n)| image differs from K(S_n)")
        })?;
        for w in enumerate_separable_s(n + 1) {
            let a = des_sets_a(&w).map_err(|e| e.to_string())?;
            let b = des_sets_b(&phi(&w).map_err(|e| e.to_string())?);
            let shift = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
            ensure(
                a.descents == shift(&b.descents) && a.double_descents == shift(&b.double_descents),
                || format!("{w}: descent transfer fails"),
            )?;
        }
    }
    Ok(format!(
        "product law, symmetry, unimodality and skeletons for n <= {poly_rank}; closure, images and descent transfer for n <= {sweep_rank}"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_passes() {
        for r in run_all(3) {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn report_format() {
        let r = run(2, 0);
        assert!(r.to_string().starts_with("[PASS] 2. bijection fixtures: "));
    }
}
