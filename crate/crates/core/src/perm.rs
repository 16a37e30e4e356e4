//! Signed permutations in one-line notation.
//!
//! A [`SignedPerm`] of rank `n` is a word `w_1 … w_n` of nonzero integers whose
//! absolute values are a rearrangement of `1..=n`. Ordinary permutations are
//! the all-positive special case and use the same type. The empty word is the
//! unique element of rank 0.
//!
//! Group products follow the functional convention `(u∘v)(i) = u(v(i))`, so
//! left multiplication acts on values and right multiplication on positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    /// Validates `entries` and wraps them.
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for (i, &x) in entries.iter().enumerate() {
            if x == 0 {
                return Err(Error::ZeroEntry { position: i + 1 });
            }
            let a = x.unsigned_abs();
            if a as usize > n {
                return Err(Error::AbsValueOutOfRange { value: a, n });
            }
            if seen[a as usize] {
                return Err(Error::RepeatedAbsValue { value: a });
            }
            seen[a as usize] = true;
        }
        Ok(SignedPerm(entries))
    }

    /// Wraps entries already known to be valid.
    pub(crate) fn from_vec_unchecked(entries: Vec<i32>) -> Self {
        debug_assert!(SignedPerm::new(entries.clone()).is_ok(), "{entries:?}");
        SignedPerm(entries)
    }

    /// The empty permutation.
    pub fn empty() -> Self {
        SignedPerm(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm((1..=n as i32).collect())
    }

    /// `n (n-1) … 1`, the longest element of the symmetric group.
    pub fn longest_s(n: usize) -> Self {
        SignedPerm((1..=n as i32).rev().collect())
    }

    /// `-1 -2 … -n`, the longest element of the hyperoctahedral group.
    pub fn longest_b(n: usize) -> Self {
        SignedPerm((1..=n as i32).map(|x| -x).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i32> {
        self.0
    }

    /// Image of a nonzero signed point `x` with `|x| <= n`.
    pub fn apply(&self, x: i32) -> i32 {
        let y = self.0[x.unsigned_abs() as usize - 1];
        if x > 0 {
            y
        } else {
            -y
        }
    }

    /// True when no entry is negative.
    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    /// Fails with [`Error::NegativeEntry`] unless all entries are positive.
    pub fn require_unsigned(&self) -> Result<()> {
        if self.is_unsigned() {
            Ok(())
        } else {
            Err(Error::NegativeEntry {
                perm: self.to_string(),
            })
        }
    }

    /// 1-based positions of negative entries.
    pub fn negative_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x < 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `u∘v`, i.e. `i ↦ u(v(i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(SignedPerm(other.0.iter().map(|&x| self.apply(x)).collect()))
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let pos = i as i32 + 1;
            out[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        SignedPerm(out)
    }

    /// Entrywise sign flip; equals both `w0 w` and `w w0` for the longest
    /// signed permutation `w0`.
    pub fn negate(&self) -> SignedPerm {
        SignedPerm(self.0.iter().map(|&x| -x).collect())
    }

    /// The permutation of absolute values `|w_1| … |w_n|`.
    pub fn abs(&self) -> SignedPerm {
        SignedPerm(self.0.iter().map(|&x| x.abs()).collect())
    }

    /// Left multiplication by the longest element of the symmetric group:
    /// every value `±k` becomes `±(n + 1 - k)`.
    pub fn reverse_values(&self) -> SignedPerm {
        let m = self.len() as i32 + 1;
        SignedPerm(self.0.iter().map(|&x| x.signum() * (m - x.abs())).collect())
    }

    /// Contiguous factor `w_{lo+1} … w_hi` as a raw word.
    pub fn factor(&self, lo: usize, hi: usize) -> &[i32] {
        &self.0[lo..hi]
    }

    /// Every element of `B_n` in lexicographic order of one-line notation.
    pub fn all_signed(n: usize) -> Vec<SignedPerm> {
        let mut out = Vec::with_capacity(factorial(n) << n);
        for p in all_unsigned_raw(n) {
            for mask in 0u32..(1 << n) {
                out.push(SignedPerm(
                    p.iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect(),
                ));
            }
        }
        out.sort_unstable();
        out
    }

    /// Every element of `S_n` in lexicographic order.
    pub fn all_unsigned(n: usize) -> Vec<SignedPerm> {
        all_unsigned_raw(n).into_iter().map(SignedPerm).collect()
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn all_unsigned_raw(n: usize) -> Vec<Vec<i32>> {
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    let mut out = vec![cur.clone()];
    // Narayana's next-permutation step.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Standardization: the permutation with the same relative order as `word`.
/// Entries must be pairwise distinct.
pub fn st(word: &[i32]) -> Result<SignedPerm> {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| word[i]);
    let mut out = vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        if rank > 0 && word[idx[rank - 1]] == word[i] {
            return Err(Error::RepeatedEntry { value: word[i] });
        }
        out[i] = rank as i32 + 1;
    }
    Ok(SignedPerm(out))
}

/// Signed standardization: keeps the sign of every entry and replaces the
/// absolute values by `1..=n` in the same relative order. Entries must be
/// nonzero with pairwise distinct absolute values.
pub fn sts(word: &[i32]) -> Result<SignedPerm> {
    if let Some(i) = word.iter().position(|&x| x == 0) {
        return Err(Error::ZeroEntry { position: i + 1 });
    }
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| word[i].unsigned_abs());
    let mut out = vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        if rank > 0 && word[idx[rank - 1]].unsigned_abs() == word[i].unsigned_abs() {
            return Err(Error::RepeatedAbsValue {
                value: word[i].unsigned_abs(),
            });
        }
        let r = rank as i32 + 1;
        out[i] = if word[i] > 0 { r } else { -r };
    }
    Ok(SignedPerm(out))
}

// Factors of a valid signed permutation always standardize.
pub(crate) fn st_of(word: &[i32]) -> SignedPerm {
    st(word).expect("factor of a permutation has distinct entries")
}

pub(crate) fn sts_of(word: &[i32]) -> SignedPerm {
    sts(word).expect("factor of a signed permutation has distinct absolute values")
}

impl FromStr for SignedPerm {
    type Err = Error;

    /// Accepts signed integers separated by whitespace and/or commas.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>().map_err(|_| Error::ParseInt {
                    token: t.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(entries)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm({self})")
    }
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;

    fn try_from(v: Vec<i32>) -> Result<Self> {
        SignedPerm::new(v)
    }
}

impl AsRef<[i32]> for SignedPerm {
    fn as_ref(&self) -> &[i32] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_render() {
        let w = p("3 -5 -2 4 1 -6");
        assert_eq!(w.entries(), &[3, -5, -2, 4, 1, -6]);
        assert_eq!(w.to_string(), "3 -5 -2 4 1 -6");
        assert_eq!(p("3,-5 ,  -2\t4,1,-6"), w);
        assert_eq!(p(""), SignedPerm::empty());
        assert_eq!(p("   ").len(), 0);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "1 1".parse::<SignedPerm>(),
            Err(Error::RepeatedAbsValue { value: 1 })
        );
        assert_eq!(
            "1 -1".parse::<SignedPerm>(),
            Err(Error::RepeatedAbsValue { value: 1 })
        );
        assert_eq!(
            "2 0".parse::<SignedPerm>(),
            Err(Error::ZeroEntry { position: 2 })
        );
        assert_eq!(
            "1 3".parse::<SignedPerm>(),
            Err(Error::AbsValueOutOfRange { value: 3, n: 2 })
        );
        assert!(matches!(
            "1 x".parse::<SignedPerm>(),
            Err(Error::ParseInt { .. })
        ));
    }

    #[test]
    fn compose_negate_abs() {
        let w = p("3 -5 -2 4 1 -6");
        let neg = p("-3 5 2 -4 -1 6");
        assert_eq!(SignedPerm::longest_b(6).compose(&w).unwrap(), neg);
        assert_eq!(w.compose(&SignedPerm::longest_b(6)).unwrap(), neg);
        assert_eq!(w.negate(), neg);
        assert_eq!(SignedPerm::empty().negate(), SignedPerm::empty());
        assert_eq!(w.abs(), p("3 5 2 4 1 6"));
        assert_eq!(SignedPerm::longest_b(3).abs(), SignedPerm::identity(3));
        assert_eq!(SignedPerm::identity(6).compose(&w).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), SignedPerm::identity(6));
        assert!(matches!(
            w.compose(&SignedPerm::identity(2)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(SignedPerm::identity(4).inverse(), SignedPerm::identity(4));
        assert_eq!(p("-1").inverse(), p("-1"));
        assert_eq!(p("2 -3 1").inverse(), p("3 1 -2"));
    }

    #[test]
    fn longest_elements() {
        assert_eq!(SignedPerm::longest_s(4), p("4 3 2 1"));
        assert_eq!(SignedPerm::longest_b(3), p("-1 -2 -3"));
        assert_eq!(SignedPerm::longest_b(0), SignedPerm::empty());
        assert_eq!(
            p("2 -3 1").reverse_values(),
            SignedPerm::longest_s(3).compose(&p("2 -3 1")).unwrap()
        );
    }

    #[test]
    fn standardizations() {
        assert_eq!(st(&[4, -7, -3, 5, 2, -9]).unwrap(), p("5 2 3 6 4 1"));
        assert_eq!(sts(&[4, -7, -3, 5, 2, -9]).unwrap(), p("3 -5 -2 4 1 -6"));
        assert_eq!(st(&[0, 1, -4, -3, -2, -5]).unwrap(), p("5 6 2 3 4 1"));
        assert_eq!(st(&[2, 5, 2]), Err(Error::RepeatedEntry { value: 2 }));
        assert!(sts(&[2, -2]).is_err());
        assert!(sts(&[1, 0]).is_err());
    }

    #[test]
    fn group_axioms_exhaustive_small() {
        for n in 0..=3 {
            let all = SignedPerm::all_signed(n);
            assert_eq!(all.len(), factorial(n) << n);
            let e = SignedPerm::identity(n);
            for u in &all {
                assert_eq!(e.compose(u).unwrap(), *u);
                assert_eq!(u.compose(&e).unwrap(), *u);
                assert_eq!(u.compose(&u.inverse()).unwrap(), e);
                assert_eq!(u.inverse().compose(u).unwrap(), e);
                assert_eq!(sts(u.entries()).unwrap(), *u);
                let w0 = SignedPerm::longest_b(n);
                assert_eq!(w0.compose(u).unwrap(), u.negate());
                assert_eq!(u.compose(&w0).unwrap(), u.negate());
                for v in &all {
                    for x in &all {
                        let l = u.compose(&v.compose(x).unwrap()).unwrap();
                        let r = u.compose(v).unwrap().compose(x).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = SignedPerm::all_signed(3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let s = SignedPerm::all_unsigned(4);
        assert_eq!(s.len(), 24);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(SignedPerm::all_unsigned(0), vec![SignedPerm::empty()]);
        for w in s {
            assert_eq!(st(w.entries()).unwrap(), w);
        }
    }
}
