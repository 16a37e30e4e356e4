//! Coxeter length and the left weak order in types A and B.
//!
//! The combinatorial side works with the position sets
//!
//! * `Neg(w) = {i : w_i < 0}`
//! * `Inv(w) = {(i, j) : i < j, w_i > w_j}`
//! * `Nsp(w) = {(i, j) : i < j, w_i + w_j < 0}`
//!
//! whose sizes add up to the length, and `u <=_L w` holds exactly when each
//! set of `u` is contained in the corresponding set of `w`.
//!
//! The brute-force side walks the Cayley graph: left multiplication by a
//! simple generator acts on values (`s_0` negates the value 1, `s_i` swaps the
//! values `i` and `i + 1`), and breadth-first search from the identity yields
//! graph distances and cover relations. Those oracles, and the interval rank
//! generating functions computed by filtering the whole group, exist to check
//! the closed forms elsewhere in the crate.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use log::warn;

use crate::error::{Error, Result};
use crate::perm::SignedPerm;
use crate::qpoly::IntPoly;

/// Largest rank accepted by the brute-force oracles over `B_n` by default.
pub const DEFAULT_ORACLE_BOUND: usize = 6;
/// Hard ceiling for the configurable oracle bound.
pub const MAX_ORACLE_BOUND: usize = 7;
/// Largest rank accepted by brute-force oracles over `S_n`.
pub const S_ORACLE_BOUND: usize = 9;

/// Largest rank served by the bitmask fast path.
pub const MASK_MAX_N: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderSets {
    /// 1-based positions.
    pub neg: Vec<usize>,
    /// 1-based position pairs, sorted.
    pub inv: Vec<(usize, usize)>,
    pub nsp: Vec<(usize, usize)>,
}

impl OrderSets {
    pub fn of(w: &SignedPerm) -> OrderSets {
        let e = w.entries();
        let mut s = OrderSets {
            neg: w.negative_positions(),
            ..Default::default()
        };
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    s.inv.push((i + 1, j + 1));
                }
                if e[i] + e[j] < 0 {
                    s.nsp.push((i + 1, j + 1));
                }
            }
        }
        s
    }

    pub fn length(&self) -> usize {
        self.neg.len() + self.inv.len() + self.nsp.len()
    }

    /// Which of `Neg`, `Inv`, `Nsp` of `self` fail to be contained in `other`.
    pub fn violated_inclusions(&self, other: &OrderSets) -> Vec<OrderSet> {
        let mut out = Vec::new();
        if !is_subset(&self.neg, &other.neg) {
            out.push(OrderSet::Neg);
        }
        if !is_subset(&self.inv, &other.inv) {
            out.push(OrderSet::Inv);
        }
        if !is_subset(&self.nsp, &other.nsp) {
            out.push(OrderSet::Nsp);
        }
        out
    }

    pub fn is_below(&self, other: &OrderSets) -> bool {
        self.violated_inclusions(other).is_empty()
    }

    /// Bitmask form for rank at most [`MASK_MAX_N`].
    pub fn mask(&self) -> Option<OrderMask> {
        let max = self
            .inv
            .iter()
            .chain(&self.nsp)
            .map(|&(_, j)| j)
            .chain(self.neg.iter().copied())
            .max()
            .unwrap_or(0);
        if max > MASK_MAX_N {
            return None;
        }
        let bit = |(i, j): (usize, usize)| 1u64 << ((j - 1) * (j - 2) / 2 + (i - 1));
        Some(OrderMask {
            neg: self.neg.iter().fold(0, |m, &i| m | 1 << (i - 1)),
            inv: self.inv.iter().fold(0, |m, &p| m | bit(p)),
            nsp: self.nsp.iter().fold(0, |m, &p| m | bit(p)),
        })
    }
}

// Both slices sorted ascending.
fn is_subset<T: Ord>(a: &[T], b: &[T]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSet {
    Neg,
    Inv,
    Nsp,
}

impl OrderSet {
    pub fn name(self) -> &'static str {
        match self {
            OrderSet::Neg => "Neg",
            OrderSet::Inv => "Inv",
            OrderSet::Nsp => "Nsp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderMask {
    pub neg: u32,
    pub inv: u64,
    pub nsp: u64,
}

impl OrderMask {
    pub fn is_below(&self, other: &OrderMask) -> bool {
        self.neg & !other.neg == 0 && self.inv & !other.inv == 0 && self.nsp & !other.nsp == 0
    }

    pub fn length(&self) -> usize {
        (self.neg.count_ones() + self.inv.count_ones() + self.nsp.count_ones()) as usize
    }
}

pub fn order_sets(w: &SignedPerm) -> OrderSets {
    OrderSets::of(w)
}

/// `#Neg + #Inv + #Nsp`; the inversion number for ordinary permutations.
pub fn length(w: &SignedPerm) -> usize {
    OrderSets::of(w).length()
}

fn same_len(u: &SignedPerm, w: &SignedPerm) -> Result<()> {
    if u.len() == w.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            left: u.len(),
            right: w.len(),
        })
    }
}

/// `u <=_L w` in `B_n`.
pub fn leq_left_b(u: &SignedPerm, w: &SignedPerm) -> Result<bool> {
    Ok(violated_inclusions(u, w)?.is_empty())
}

/// `u <=_L w` in `S_n`: inclusion of inversion sets.
pub fn leq_left_s(u: &SignedPerm, w: &SignedPerm) -> Result<bool> {
    same_len(u, w)?;
    u.require_unsigned()?;
    w.require_unsigned()?;
    Ok(is_subset(&OrderSets::of(u).inv, &OrderSets::of(w).inv))
}

/// The inclusions that fail for `u <=_L w`; empty when the relation holds.
pub fn violated_inclusions(u: &SignedPerm, w: &SignedPerm) -> Result<Vec<OrderSet>> {
    same_len(u, w)?;
    Ok(OrderSets::of(u).violated_inclusions(&OrderSets::of(w)))
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    let bound = bound.min(MAX_ORACLE_BOUND);
    if n > bound {
        return Err(Error::OracleBoundExceeded { n, bound });
    }
    if n > DEFAULT_ORACLE_BOUND {
        warn!(
            "brute-force oracle at rank {n}: {} group elements",
            (1..=n).product::<usize>() << n
        );
    }
    Ok(())
}

/// Left multiplication by a simple generator of `B_n`: `s_0` negates the
/// value 1, `s_i` (for `1 <= i < n`) swaps the values `i` and `i + 1`.
pub fn left_generator(i: usize, w: &SignedPerm) -> SignedPerm {
    let e = w.entries().iter().map(|&x| {
        let a = x.unsigned_abs() as usize;
        match i {
            0 if a == 1 => -x,
            0 => x,
            _ if a == i => x + x.signum(),
            _ if a == i + 1 => x - x.signum(),
            _ => x,
        }
    });
    SignedPerm::from_vec_unchecked(e.collect())
}

/// Cayley graph of `B_n` under left multiplication by simple generators,
/// explored breadth first from the identity.
#[derive(Clone, Debug)]
pub struct WeakOrderGraph {
    pub n: usize,
    /// Elements in BFS discovery order; index 0 is the identity.
    pub elements: Vec<SignedPerm>,
    /// Graph distance from the identity, parallel to `elements`.
    pub distance: Vec<usize>,
    /// `(u, v)` index pairs with `v = s·u` and `distance[v] = distance[u] + 1`.
    pub covers: Vec<(usize, usize)>,
    index: HashMap<SignedPerm, usize>,
}

/// BFS oracle under the default bound.
pub fn bfs_weak_order(n: usize) -> Result<WeakOrderGraph> {
    bfs_weak_order_with_bound(n, DEFAULT_ORACLE_BOUND)
}

pub fn bfs_weak_order_with_bound(n: usize, bound: usize) -> Result<WeakOrderGraph> {
    check_bound(n, bound)?;
    let e = SignedPerm::identity(n);
    let mut g = WeakOrderGraph {
        n,
        elements: vec![e.clone()],
        distance: vec![0],
        covers: Vec::new(),
        index: HashMap::from([(e, 0)]),
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for s in 0..n {
            let v = left_generator(s, &g.elements[u]);
            let vi = match g.index.get(&v) {
                Some(&vi) => vi,
                None => {
                    let vi = g.elements.len();
                    g.index.insert(v.clone(), vi);
                    g.elements.push(v);
                    g.distance.push(g.distance[u] + 1);
                    queue.push_back(vi);
                    vi
                }
            };
            if g.distance[vi] == g.distance[u] + 1 {
                g.covers.push((u, vi));
            }
        }
    }
    Ok(g)
}

impl WeakOrderGraph {
    pub fn index_of(&self, w: &SignedPerm) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn distance_of(&self, w: &SignedPerm) -> Option<usize> {
        self.index_of(w).map(|i| self.distance[i])
    }

    pub fn max_distance(&self) -> usize {
        self.distance.iter().copied().max().unwrap_or(0)
    }

    /// For every element, the set of elements reachable along covers
    /// (reflexively), as a dense boolean matrix indexed like `elements`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let m = self.elements.len();
        let mut succ = vec![Vec::new(); m];
        for &(u, v) in &self.covers {
            succ[u].push(v);
        }
        // Process in decreasing distance so successors are complete first.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.distance[i]));
        let mut reach = vec![vec![false; m]; m];
        for &u in &order {
            let mut row = vec![false; m];
            row[u] = true;
            for &v in &succ[u] {
                for (r, &x) in row.iter_mut().zip(&reach[v]) {
                    *r |= x;
                }
            }
            reach[u] = row;
        }
        reach
    }

    /// Hasse diagram in DOT, bottom to top, labels in one-line notation.
    /// Meant for `n <= 3`; larger ranks produce unreadable drawings.
    pub fn to_dot(&self) -> String {
        let mut s =
            String::from("digraph weak_order {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, w) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{w}\"];");
        }
        let mut covers = self.covers.clone();
        covers.sort_unstable();
        for (u, v) in covers {
            let _ = writeln!(s, "  n{u} -> n{v};");
        }
        s.push_str("}\n");
        s
    }
}

/// Which group an interval lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    /// The symmetric group `S_n`.
    A,
    /// The hyperoctahedral group `B_n`.
    B,
}

struct Element {
    sets: OrderSets,
    mask: Option<OrderMask>,
    length: usize,
}

impl Element {
    fn new(w: &SignedPerm) -> Self {
        let sets = OrderSets::of(w);
        Element {
            mask: sets.mask(),
            length: sets.length(),
            sets,
        }
    }

    fn is_below(&self, other: &Element) -> bool {
        match (&self.mask, &other.mask) {
            (Some(a), Some(b)) => a.is_below(b),
            _ => self.sets.is_below(&other.sets),
        }
    }
}

/// The whole group with precomputed order data, for filtering intervals.
pub struct IntervalOracle {
    group: Group,
    n: usize,
    elements: Vec<Element>,
}

impl IntervalOracle {
    pub fn new(group: Group, n: usize) -> Result<Self> {
        Self::with_bound(group, n, DEFAULT_ORACLE_BOUND)
    }

    pub fn with_bound(group: Group, n: usize, bound: usize) -> Result<Self> {
        let all = match group {
            Group::B => {
                check_bound(n, bound)?;
                SignedPerm::all_signed(n)
            }
            Group::A => {
                if n > S_ORACLE_BOUND {
                    return Err(Error::OracleBoundExceeded {
                        n,
                        bound: S_ORACLE_BOUND,
                    });
                }
                SignedPerm::all_unsigned(n)
            }
        };
        Ok(IntervalOracle {
            group,
            n,
            elements: all.iter().map(Element::new).collect(),
        })
    }

    fn prepare(&self, w: &SignedPerm) -> Result<Element> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.n,
            });
        }
        if self.group == Group::A {
            w.require_unsigned()?;
        }
        Ok(Element::new(w))
    }

    /// `Σ_{u <= w} q^{ℓ(u)}`.
    pub fn lower(&self, w: &SignedPerm) -> Result<IntPoly> {
        let top = self.prepare(w)?;
        let mut c = vec![0u64; top.length + 1];
        for u in self.elements.iter().filter(|u| u.is_below(&top)) {
            c[u.length] += 1;
        }
        Ok(counts_to_poly(&c))
    }

    /// `Σ_{v >= w} q^{ℓ(v) - ℓ(w)}`.
    pub fn upper(&self, w: &SignedPerm) -> Result<IntPoly> {
        let bottom = self.prepare(w)?;
        let mut c = Vec::new();
        for v in self.elements.iter().filter(|v| bottom.is_below(v)) {
            let r = v.length - bottom.length;
            if c.len() <= r {
                c.resize(r + 1, 0u64);
            }
            c[r] += 1;
        }
        Ok(counts_to_poly(&c))
    }

    /// `Σ_{w} q^{ℓ(w)}` over the whole group.
    pub fn whole_group(&self) -> IntPoly {
        let mut c = Vec::new();
        for e in &self.elements {
            if c.len() <= e.length {
                c.resize(e.length + 1, 0u64);
            }
            c[e.length] += 1;
        }
        counts_to_poly(&c)
    }
}

fn counts_to_poly(c: &[u64]) -> IntPoly {
    IntPoly::from_coeffs(c.iter().map(|&x| x.into()).collect())
}

/// Rank generating function of `[e, w]` in `B_n`, by enumeration.
pub fn rank_gf_lower_brute(w: &SignedPerm) -> Result<IntPoly> {
    IntervalOracle::new(Group::B, w.len())?.lower(w)
}

/// Rank generating function of `[w, w0]` in `B_n`, by enumeration.
pub fn rank_gf_upper_brute(w: &SignedPerm) -> Result<IntPoly> {
    IntervalOracle::new(Group::B, w.len())?.upper(w)
}

/// Rank generating function of `[e, w]` in `S_n`, by enumeration.
pub fn rank_gf_lower_brute_s(w: &SignedPerm) -> Result<IntPoly> {
    IntervalOracle::new(Group::A, w.len())?.lower(w)
}

/// Rank generating function of `[w, w0]` in `S_n`, by enumeration.
pub fn rank_gf_upper_brute_s(w: &SignedPerm) -> Result<IntPoly> {
    IntervalOracle::new(Group::A, w.len())?.upper(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{q_factorial, two_factorial};

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&SignedPerm::longest_b(3)), 9);
        assert_eq!(length(&SignedPerm::identity(4)), 0);
        let s = order_sets(&p("2 -1"));
        assert_eq!(s.neg, vec![2]);
        assert_eq!(s.inv, vec![(1, 2)]);
        assert!(s.nsp.is_empty());
        assert_eq!(s.length(), 2);
        assert_eq!(length(&p("3 1 2")), 2);
    }

    #[test]
    fn comparison_examples() {
        for w in SignedPerm::all_signed(3) {
            assert!(leq_left_b(&SignedPerm::identity(3), &w).unwrap());
        }
        assert!(leq_left_b(&p("-1 2 3"), &p("-1 -2 3")).unwrap());
        assert!(!leq_left_s(&p("1 3 2"), &p("2 1 3")).unwrap());
        assert!(leq_left_b(&p("1 2"), &p("1 2 3")).is_err());
        assert!(leq_left_s(&p("-1 2"), &p("1 2")).is_err());
        assert_eq!(
            violated_inclusions(&p("-1 2"), &p("2 1")).unwrap(),
            vec![OrderSet::Neg]
        );
    }

    #[test]
    fn bfs_examples() {
        let g = bfs_weak_order(1).unwrap();
        assert_eq!(g.distance_of(&p("1")), Some(0));
        assert_eq!(g.distance_of(&p("-1")), Some(1));
        let g = bfs_weak_order(2).unwrap();
        assert_eq!(g.max_distance(), 4);
        assert_eq!(g.distance_of(&p("-1 -2")), Some(4));
        let g = bfs_weak_order(3).unwrap();
        assert_eq!(g.elements.len(), 48);
        assert_eq!(g.max_distance(), 9);
        assert!(matches!(
            bfs_weak_order(7),
            Err(Error::OracleBoundExceeded { .. })
        ));
        assert!(matches!(
            bfs_weak_order_with_bound(8, 9),
            Err(Error::OracleBoundExceeded { bound: 7, .. })
        ));
    }

    #[test]
    fn length_matches_bfs_distance() {
        for n in 0..=5 {
            let g = bfs_weak_order(n).unwrap();
            assert_eq!(g.elements.len(), (1..=n).product::<usize>() << n);
            for (w, &d) in g.elements.iter().zip(&g.distance) {
                assert_eq!(length(w), d, "{w}");
            }
        }
    }

    #[test]
    fn inclusion_criterion_matches_reachability() {
        for n in 1..=3 {
            let g = bfs_weak_order(n).unwrap();
            let reach = g.reachability();
            for (i, u) in g.elements.iter().enumerate() {
                for (j, w) in g.elements.iter().enumerate() {
                    assert_eq!(leq_left_b(u, w).unwrap(), reach[i][j], "{u} vs {w}");
                }
            }
        }
    }

    #[test]
    fn type_a_inclusion_is_type_b_restricted() {
        let all = SignedPerm::all_unsigned(4);
        for u in &all {
            for w in &all {
                assert_eq!(leq_left_s(u, w).unwrap(), leq_left_b(u, w).unwrap());
            }
        }
    }

    #[test]
    fn mask_matches_list_form() {
        for n in 0..=4 {
            let all = SignedPerm::all_signed(n);
            let sets: Vec<_> = all.iter().map(OrderSets::of).collect();
            for a in &sets {
                let ma = a.mask().unwrap();
                assert_eq!(ma.length(), a.length());
                for b in &sets {
                    assert_eq!(ma.is_below(&b.mask().unwrap()), a.is_below(b));
                }
            }
        }
        assert!(OrderSets::of(&SignedPerm::longest_b(9)).mask().is_none());
    }

    #[test]
    fn longest_element_complements_length() {
        for n in 0..=5 {
            let w0 = SignedPerm::longest_b(n);
            for w in SignedPerm::all_signed(n) {
                assert_eq!(length(&w0.compose(&w).unwrap()), n * n - length(&w));
            }
        }
    }

    #[test]
    fn left_multiplication_by_w0_reverses_upper_intervals() {
        let n = 3;
        let all = SignedPerm::all_signed(n);
        let w0 = SignedPerm::longest_b(n);
        for w in &all {
            let upper: Vec<&SignedPerm> =
                all.iter().filter(|v| leq_left_b(w, v).unwrap()).collect();
            let top = w0.compose(w).unwrap();
            let lower: Vec<SignedPerm> = all
                .iter()
                .filter(|v| leq_left_b(v, &top).unwrap())
                .cloned()
                .collect();
            let mut image: Vec<SignedPerm> = upper.iter().map(|v| w0.compose(v).unwrap()).collect();
            image.sort();
            assert_eq!(image, lower);
            for a in &upper {
                for b in &upper {
                    let (ma, mb) = (w0.compose(a).unwrap(), w0.compose(b).unwrap());
                    assert_eq!(leq_left_b(a, b).unwrap(), leq_left_b(&mb, &ma).unwrap());
                }
            }
        }
    }

    #[test]
    fn whole_group_generating_function() {
        for n in 0..=6 {
            let o = IntervalOracle::new(Group::B, n).unwrap();
            assert_eq!(o.whole_group(), &q_factorial(n) * &two_factorial(n));
        }
        assert_eq!(
            IntervalOracle::new(Group::B, 3).unwrap().whole_group(),
            IntPoly::from_i64s(&[1, 3, 5, 7, 8, 8, 7, 5, 3, 1])
        );
    }

    #[test]
    fn brute_interval_examples() {
        assert_eq!(
            rank_gf_lower_brute(&p("-1 -2 3")).unwrap(),
            IntPoly::from_i64s(&[1, 2, 2, 2, 1])
        );
        assert_eq!(
            rank_gf_upper_brute(&p("-1 -2 3")).unwrap(),
            IntPoly::from_i64s(&[1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            rank_gf_lower_brute(&SignedPerm::identity(3)).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            rank_gf_upper_brute(&SignedPerm::longest_b(2)).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            rank_gf_lower_brute_s(&p("2 1 4 3")).unwrap(),
            IntPoly::from_i64s(&[1, 2, 1])
        );
        assert!(rank_gf_lower_brute_s(&p("-1")).is_err());
        assert!(rank_gf_lower_brute(&SignedPerm::identity(7)).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = bfs_weak_order(1).unwrap().to_dot();
        assert_eq!(
            dot,
            "digraph weak_order {\n  rankdir=BT;\n  node [shape=plaintext];\n  n0 [label=\"1\"];\n  n1 [label=\"-1\"];\n  n0 -> n1;\n}\n"
        );
        let g = bfs_weak_order(3).unwrap();
        assert_eq!(g.to_dot(), bfs_weak_order(3).unwrap().to_dot());
        // each element of B_3 has three neighbours, half of the 72 edges are covers from below
        assert_eq!(g.covers.len(), 72);
    }
}
