//! Descents, double descents, descent polynomials and gamma vectors.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::SignedPerm;
use crate::qpoly::IntPoly;
use crate::sums::{enumerate_separable_b, enumerate_separable_s};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescentSets {
    pub descents: Vec<usize>,
    pub double_descents: Vec<usize>,
}

impl DescentSets {
    pub fn des(&self) -> usize {
        self.descents.len()
    }

    pub fn dd(&self) -> usize {
        self.double_descents.len()
    }
}

// None stands for +∞.
fn descent_sets(word: &[Option<i64>], range: std::ops::RangeInclusive<usize>) -> DescentSets {
    let gt = |a: Option<i64>, b: Option<i64>| match (a, b) {
        (None, None) => false,
        (None, Some(_)) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x > y,
    };
    let mut out = DescentSets::default();
    for i in range {
        // word[k] holds w_{k-1}
        let (prev, cur, next) = (word[i], word[i + 1], word[i + 2]);
        if gt(cur, next) {
            out.descents.push(i);
            if gt(prev, cur) {
                out.double_descents.push(i);
            }
        }
    }
    out
}

/// Type-B descents `i ∈ [0, n]` with `w_i > w_{i+1}`, and double descents
/// `w_{i-1} > w_i > w_{i+1}`, under `w_0 = 0` and `w_{-1} = w_{n+1} = +∞`.
pub fn des_sets_b(w: &SignedPerm) -> DescentSets {
    let mut word = vec![None, Some(0)];
    word.extend(w.entries().iter().map(|&x| Some(x as i64)));
    word.push(None);
    descent_sets(&word, 0..=w.len())
}

/// Type-A descents `i ∈ [1, n]` under `w_0 = w_{n+1} = +∞`.
pub fn des_sets_a(w: &SignedPerm) -> Result<DescentSets> {
    w.require_unsigned()?;
    let mut word = vec![None, None];
    word.extend(w.entries().iter().map(|&x| Some(x as i64)));
    word.push(None);
    Ok(descent_sets(&word, 1..=w.len()))
}

/// `Σ_{w ∈ K(B_n)} t^{des_B(w)}`.
pub fn descent_polynomial_b(n: usize) -> IntPoly {
    distribution(enumerate_separable_b(n).iter().map(|w| des_sets_b(w).des()))
}

/// `Σ_{w ∈ K(S_n)} t^{des_A(w)}`.
pub fn descent_polynomial_s(n: usize) -> IntPoly {
    distribution(
        enumerate_separable_s(n)
            .iter()
            .map(|w| des_sets_a(w).expect("unsigned").des()),
    )
}

fn distribution(values: impl Iterator<Item = usize>) -> IntPoly {
    let mut c: Vec<BigInt> = Vec::new();
    for v in values {
        if c.len() <= v {
            c.resize(v + 1, BigInt::zero());
        }
        c[v] += 1;
    }
    IntPoly::from_coeffs(c)
}

/// Coefficients `γ_0, …, γ_{⌊center/2⌋}` with
/// `p = Σ γ_k t^k (1+t)^{center-2k}`.
///
/// Peels from the lowest degree: `γ_k` is the coefficient of `t^k` once the
/// terms for `j < k` have been subtracted. Negative coefficients are
/// returned as computed; use [`is_gamma_positive`] to test positivity.
pub fn gamma_expansion(p: &IntPoly, center: usize) -> Result<Vec<BigInt>> {
    if p.degree().is_some_and(|d| d > center) {
        return Err(Error::NonGammaRepresentable { center });
    }
    if !p.is_palindromic(center) {
        return Err(Error::NotPalindromic { center });
    }
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    let mut residual = p.clone();
    let mut gamma = Vec::with_capacity(center / 2 + 1);
    for k in 0..=center / 2 {
        let g = residual.coeff(k);
        let term = one_plus_t.pow((center - 2 * k) as u32).shift(k).scale(&g);
        residual = &residual - &term;
        gamma.push(g);
    }
    if residual.is_zero() {
        Ok(gamma)
    } else {
        Err(Error::NonGammaRepresentable { center })
    }
}

pub fn is_gamma_positive(gamma: &[BigInt]) -> bool {
    gamma.iter().all(|g| g >= &BigInt::zero())
}

fn gamma_counts(center: usize, stats: impl Iterator<Item = DescentSets>) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); center / 2 + 1];
    for d in stats.filter(|d| d.dd() == 0) {
        if d.des() >= out.len() {
            out.resize(d.des() + 1, BigInt::zero());
        }
        out[d.des()] += 1;
    }
    out
}

/// `#{w ∈ K(B_n) : dd_B(w) = 0, des_B(w) = k}` for `k = 0..=⌊n/2⌋`.
pub fn gamma_counts_b(n: usize) -> Vec<BigInt> {
    gamma_counts(n, enumerate_separable_b(n).iter().map(des_sets_b))
}

/// `#{w ∈ K(S_m) : dd_A(w) = 0, des_A(w) = k}` for `k = 0..=⌊(m-1)/2⌋`,
/// the gamma vector of the type-A descent polynomial of center `m - 1`.
pub fn gamma_counts_s(m: usize) -> Vec<BigInt> {
    gamma_counts(
        m.saturating_sub(1),
        enumerate_separable_s(m)
            .iter()
            .map(|w| des_sets_a(w).expect("unsigned")),
    )
}
