//! The bijection phi between separable permutations of length n+1 and
//! separable signed permutations of length n, with its inverse psi.
//!
//! Run with `cargo run --example bijection`.

use signed_separable::bijection::phi_all_splits;
use signed_separable::{enumerate_separable_s, phi, psi, psi_closed, st, SignedPerm};

fn main() -> signed_separable::Result<()> {
    for m in [3, 4] {
        println!("phi on K(S_{m}):");
        for w in enumerate_separable_s(m) {
            let v = phi(&w)?;
            assert_eq!(psi(&v)?, w);
            assert_eq!(psi_closed(&v)?, w);
            println!("  {w}  ->  {v}");
        }
        println!();
    }

    let w: SignedPerm = "5 6 2 3 4 1".parse()?;
    println!("phi({w}) = {}", phi(&w)?);
    for (split, v) in phi_all_splits(&w)? {
        println!("  split {split:?} gives {v}");
    }

    let v: SignedPerm = "3 1 2 -4 -6 -5".parse()?;
    let mut word = vec![0];
    word.extend_from_slice(v.entries());
    println!("psi({v}) = {} = st(0 {v}) = {}", psi(&v)?, st(&word)?);
    Ok(())
}
