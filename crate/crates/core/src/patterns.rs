//! Pattern containment and the separability predicates.
//!
//! `w` contains `u` when some subsequence of `w` signed-standardizes to `u`:
//! the signs agree position by position and the absolute values appear in
//! the same relative order.

use crate::error::{Error, Result};
use crate::perm::SignedPerm;

/// The six forbidden patterns of a separable signed permutation:
/// `-2 1`, `2 -1`, `3 1 4 2`, `2 4 1 3`, `-3 -1 -4 -2`, `-2 -4 -1 -3`.
pub const SEPARABLE_B_PATTERNS: [&[i32]; 6] = [
    &[-2, 1],
    &[2, -1],
    &[3, 1, 4, 2],
    &[2, 4, 1, 3],
    &[-3, -1, -4, -2],
    &[-2, -4, -1, -3],
];

/// The two forbidden patterns of a separable permutation.
pub const SEPARABLE_S_PATTERNS: [&[i32]; 2] = [&[3, 1, 4, 2], &[2, 4, 1, 3]];

/// First occurrence (lexicographically smallest 1-based position tuple) of
/// the pattern `u` in `w`.
pub fn find_pattern(w: &SignedPerm, u: &SignedPerm) -> Result<Option<Vec<usize>>> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if u.len() > w.len() {
        return Err(Error::PatternTooLong {
            pattern: u.len(),
            perm: w.len(),
        });
    }
    Ok(find_raw(w.entries(), u.entries()))
}

pub fn contains_pattern(w: &SignedPerm, u: &SignedPerm) -> Result<bool> {
    find_pattern(w, u).map(|o| o.is_some())
}

// Depth-first search over increasing index tuples. A partial choice is kept
// only if it already agrees with the pattern in sign and in the relative
// order of absolute values, so dead branches are cut at the first mismatch.
fn find_raw(w: &[i32], u: &[i32]) -> Option<Vec<usize>> {
    if u.len() > w.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(u.len());
    if dfs(w, u, 0, &mut chosen) {
        Some(chosen.into_iter().map(|i| i + 1).collect())
    } else {
        None
    }
}

fn dfs(w: &[i32], u: &[i32], start: usize, chosen: &mut Vec<usize>) -> bool {
    let k = chosen.len();
    if k == u.len() {
        return true;
    }
    let remaining = u.len() - k;
    for i in start..=w.len() - remaining {
        let x = w[i];
        if (x > 0) != (u[k] > 0) {
            continue;
        }
        let consistent = chosen.iter().enumerate().all(|(j, &c)| {
            (w[c].unsigned_abs() < x.unsigned_abs()) == (u[j].unsigned_abs() < u[k].unsigned_abs())
        });
        if !consistent {
            continue;
        }
        chosen.push(i);
        if dfs(w, u, i + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Occurrences of forbidden patterns in `w`, one per pattern that occurs.
pub fn separability_witnesses(w: &SignedPerm) -> Vec<(SignedPerm, Vec<usize>)> {
    SEPARABLE_B_PATTERNS
        .iter()
        .filter_map(|&p| {
            find_raw(w.entries(), p).map(|idx| (SignedPerm::from_vec_unchecked(p.to_vec()), idx))
        })
        .collect()
}

/// Avoids all six type-B patterns.
pub fn is_separable_signed(w: &SignedPerm) -> bool {
    SEPARABLE_B_PATTERNS
        .iter()
        .all(|p| find_raw(w.entries(), p).is_none())
}

/// Avoids `3142` and `2413`. Rejects inputs with negative entries.
pub fn is_separable_perm(w: &SignedPerm) -> Result<bool> {
    w.require_unsigned()?;
    Ok(SEPARABLE_S_PATTERNS
        .iter()
        .all(|p| find_raw(w.entries(), p).is_none()))
}

/// Fails with [`Error::NotSeparable`] unless `w` is separable.
pub fn require_separable(w: &SignedPerm) -> Result<()> {
    if is_separable_signed(w) {
        Ok(())
    } else {
        Err(Error::NotSeparable {
            perm: w.to_string(),
        })
    }
}

/// Like [`require_separable`] for ordinary permutations.
pub fn require_separable_perm(w: &SignedPerm) -> Result<()> {
    if is_separable_perm(w)? {
        Ok(())
    } else {
        Err(Error::NotSeparable {
            perm: w.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{st, sts};

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, k: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in s..n {
                cur.push(i);
                go(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, k, 0, &mut Vec::new(), &mut out);
        out
    }

    // Reference scan: signed-standardize every subsequence of the right length.
    fn contains_by_scan(w: &SignedPerm, u: &SignedPerm) -> bool {
        combinations(w.len(), u.len()).into_iter().any(|c| {
            let sub: Vec<i32> = c.iter().map(|&i| w.entries()[i]).collect();
            sts(&sub).unwrap() == *u
        })
    }

    #[test]
    fn containment_examples() {
        let w = p("-2 5 3 -6 -4 1");
        assert!(contains_pattern(&w, &p("2 -3 1")).unwrap());
        assert_eq!(find_pattern(&w, &p("2 -3 1")).unwrap(), Some(vec![2, 4, 6]));
        assert!(!contains_pattern(&w, &p("3 -1 2")).unwrap());
        assert!(contains_pattern(&w, &w).unwrap());
        assert_eq!(
            contains_pattern(&w, &SignedPerm::empty()),
            Err(Error::EmptyPattern)
        );
        assert!(matches!(
            contains_pattern(&p("1"), &p("1 2")),
            Err(Error::PatternTooLong { .. })
        ));
    }

    #[test]
    fn separability_examples() {
        assert!(is_separable_signed(&p("-1 -2 3")));
        assert!(!is_separable_signed(&p("2 -1 -3")));
        assert!(is_separable_signed(&p("1")));
        assert!(is_separable_signed(&p("-1")));
        assert!(is_separable_signed(&SignedPerm::empty()));
        assert!(!is_separable_perm(&p("3 1 4 2")).unwrap());
        assert!(!is_separable_perm(&p("2 4 1 3")).unwrap());
        assert!(is_separable_perm(&p("5 6 2 3 4 1")).unwrap());
        assert!(is_separable_perm(&p("-1 2")).is_err());
        let wit = separability_witnesses(&p("2 -1 -3"));
        assert_eq!(wit, vec![(p("2 -1"), vec![1, 2])]);
    }

    #[test]
    fn dfs_matches_reference_scan() {
        let patterns: Vec<SignedPerm> = (1..=3).flat_map(SignedPerm::all_signed).collect();
        for n in 1..=4 {
            for w in SignedPerm::all_signed(n) {
                for u in patterns.iter().filter(|u| u.len() <= n) {
                    assert_eq!(
                        contains_pattern(&w, u).unwrap(),
                        contains_by_scan(&w, u),
                        "{w} / {u}"
                    );
                }
            }
        }
    }

    #[test]
    fn separable_closure_under_symmetries() {
        for n in 0..=4 {
            for w in SignedPerm::all_signed(n) {
                if !is_separable_signed(&w) {
                    continue;
                }
                let w0 = SignedPerm::longest_b(n);
                assert!(is_separable_signed(&w0.compose(&w).unwrap()));
                assert!(is_separable_signed(&w.compose(&w0).unwrap()));
                assert!(is_separable_signed(&w.inverse()));
                assert!(is_separable_perm(&st(w.entries()).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn type_a_agrees_on_unsigned() {
        for n in 0..=6 {
            for w in SignedPerm::all_unsigned(n) {
                assert_eq!(is_separable_signed(&w), is_separable_perm(&w).unwrap());
            }
        }
    }
}
