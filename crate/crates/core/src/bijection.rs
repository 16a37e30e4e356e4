//! The bijection `φ_n : K(S_{n+1}) → K(B_n)` and its inverse `ψ_n`.
//!
//! `φ` peels off a global ascent or descent of the input. At a global ascent
//! `p` the result is `φ(w_1…w_p) ⊕ st(w_{p+1}…)`; at a global descent it is
//! `φ(st(w_1…w_p)) ⊕ x` where the suffix `x` is reflected in value and
//! negated, so that its entries become `x_i - m - 1` for a suffix of length
//! `m`. `ψ` undoes this along a direct-sum split with a sign-constant right
//! factor. `ψ` also has a closed form: `ψ(w) = st(0 · w)`.

use crate::error::Result;
use crate::patterns::{require_separable, require_separable_perm};
use crate::perm::{st, st_of, sts_of, SignedPerm};
use crate::sums::{direct_sum, global_ascents, global_descents, skew_sum};

/// `φ_n(w)` for a separable permutation `w` of length `n + 1`.
pub fn phi(w: &SignedPerm) -> Result<SignedPerm> {
    require_separable_perm(w)?;
    Ok(phi_unchecked(w))
}

/// The choice of split in `φ` at the top level only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiSplit {
    Ascent(usize),
    Descent(usize),
}

fn phi_unchecked(w: &SignedPerm) -> SignedPerm {
    if w.len() <= 1 {
        return SignedPerm::empty();
    }
    let asc = global_ascents(w).expect("unsigned");
    let split = match asc.last() {
        Some(&p) => PhiSplit::Ascent(p),
        None => {
            let des = global_descents(w).expect("unsigned");
            PhiSplit::Descent(
                *des.last()
                    .expect("separable permutation has a global ascent or descent"),
            )
        }
    };
    phi_at(w, split)
}

fn phi_at(w: &SignedPerm, split: PhiSplit) -> SignedPerm {
    let e = w.entries();
    match split {
        PhiSplit::Ascent(p) => {
            let head = SignedPerm::from_vec_unchecked(e[..p].to_vec());
            direct_sum(&phi_unchecked(&head), &st_of(&e[p..]))
        }
        PhiSplit::Descent(p) => {
            let m = (e.len() - p) as i32;
            let tail = SignedPerm::from_vec_unchecked(e[p..].iter().map(|&x| x - m - 1).collect());
            direct_sum(&phi_unchecked(&st_of(&e[..p])), &tail)
        }
    }
}

/// `φ(w)` evaluated once per admissible top-level split. All entries agree
/// when `φ` is well defined.
pub fn phi_all_splits(w: &SignedPerm) -> Result<Vec<(PhiSplit, SignedPerm)>> {
    require_separable_perm(w)?;
    let splits = global_ascents(w)?
        .into_iter()
        .map(PhiSplit::Ascent)
        .chain(global_descents(w)?.into_iter().map(PhiSplit::Descent));
    Ok(splits.map(|s| (s, phi_at(w, s))).collect())
}

/// `ψ_n(w)` by the recursive definition.
pub fn psi(w: &SignedPerm) -> Result<SignedPerm> {
    require_separable(w)?;
    Ok(psi_unchecked(w))
}

// Positions p in [0, n-1] with {|w_1|,…,|w_p|} = [p] and w_{p+1},…,w_n of
// one sign.
fn psi_splits(w: &SignedPerm) -> Vec<usize> {
    let e = w.entries();
    let n = e.len();
    let last_sign = e[n - 1] > 0;
    let mut max = 0u32;
    let mut out = Vec::new();
    // Walk p downward while the suffix stays sign-constant.
    let mut prefix_max = vec![0u32; n + 1];
    for (i, &x) in e.iter().enumerate() {
        max = max.max(x.unsigned_abs());
        prefix_max[i + 1] = max;
    }
    let mut p = n - 1;
    loop {
        if prefix_max[p] as usize == p {
            out.push(p);
        }
        if p == 0 || (e[p - 1] > 0) != last_sign {
            break;
        }
        p -= 1;
    }
    out
}

fn psi_at(w: &SignedPerm, p: usize) -> SignedPerm {
    let e = w.entries();
    let head = psi_unchecked(&SignedPerm::from_vec_unchecked(e[..p].to_vec()));
    let tail = sts_of(&e[p..]);
    if *e.last().unwrap() > 0 {
        direct_sum(&head, &tail)
    } else {
        let m = tail.len() as i32;
        let flipped =
            SignedPerm::from_vec_unchecked(tail.entries().iter().map(|&x| m + 1 + x).collect());
        skew_sum(&head, &flipped).expect("both factors are unsigned")
    }
}

fn psi_unchecked(w: &SignedPerm) -> SignedPerm {
    if w.is_empty() {
        return SignedPerm::identity(1);
    }
    // psi_splits lists candidates from the largest down.
    psi_at(w, psi_splits(w)[0])
}

/// `ψ(w)` evaluated once per admissible top-level split `p`.
pub fn psi_all_splits(w: &SignedPerm) -> Result<Vec<(usize, SignedPerm)>> {
    require_separable(w)?;
    if w.is_empty() {
        return Ok(vec![(0, SignedPerm::identity(1))]);
    }
    Ok(psi_splits(w)
        .into_iter()
        .map(|p| (p, psi_at(w, p)))
        .collect())
}

/// `ψ(w) = st(0 · w)`, in linear time after sorting.
pub fn psi_closed(w: &SignedPerm) -> Result<SignedPerm> {
    require_separable(w)?;
    let mut word = Vec::with_capacity(w.len() + 1);
    word.push(0);
    word.extend_from_slice(w.entries());
    st(&word)
}

/// Returns `φ(w0 · w)`, asserting that it equals `w0 · φ(w)`, where the
/// longest elements are taken in the respective groups.
///
/// # Panics
///
/// If the two sides differ.
pub fn phi_w0_twist(w: &SignedPerm) -> Result<SignedPerm> {
    let lhs = phi(&w.reverse_values())?;
    let rhs = phi(w)?.negate();
    assert_eq!(lhs, rhs, "phi(w0 w) != w0 phi(w) for {w}");
    Ok(lhs)
}
