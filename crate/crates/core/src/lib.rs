//! Separable signed permutations.
//!
//! A signed permutation is separable when it avoids `-2 1`, `2 -1`, `3142`,
//! `2413`, `-3 -1 -4 -2` and `-2 -4 -1 -3`; equivalently, when it can be
//! built from `1` and `-1` by direct sums and same-sign skew sums. This crate
//! provides
//!
//! * the pattern characterization and enumeration ([`patterns`], [`sums`]),
//! * the bijection [`phi`] from separable permutations of length `n + 1` to
//!   separable signed permutations of length `n`, and its inverse [`psi`],
//! * type-B descent statistics and gamma vectors ([`stats`]),
//! * Coxeter length and the left weak order ([`weak_order`]),
//! * separating trees and closed forms for interval rank generating
//!   functions ([`septree`]),
//! * exact integer polynomials ([`qpoly`]) and consistency checks
//!   ([`verify`]).
//!
//! ```
//! use signed_separable::{phi, psi, SignedPerm};
//!
//! let w: SignedPerm = "2 1 4 3".parse().unwrap();
//! let v = phi(&w).unwrap();
//! assert_eq!(v.to_string(), "-1 3 2");
//! assert_eq!(psi(&v).unwrap(), w);
//! ```

pub mod bijection;
pub mod error;
pub mod patterns;
pub mod perm;
pub mod qpoly;
pub mod septree;
pub mod stats;
pub mod sums;
pub mod verify;
pub mod weak_order;

pub use bijection::{phi, psi, psi_closed};
pub use error::{Error, Result};
pub use patterns::{contains_pattern, find_pattern, is_separable_perm, is_separable_signed};
pub use perm::{st, sts, SignedPerm};
pub use qpoly::{IntPoly, Var};
pub use septree::{build_tree, SepTree, Side};
pub use stats::{des_sets_a, des_sets_b, gamma_expansion, DescentSets};
pub use sums::{
    canonical_blocks, direct_sum, enumerate_separable_b, enumerate_separable_s, skew_sum, SumOp,
};
pub use weak_order::{length, leq_left_b, leq_left_s};
