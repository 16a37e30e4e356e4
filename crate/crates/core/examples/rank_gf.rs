//! Rank generating functions of weak-order intervals by three routes:
//! separating-tree closed form, reduction to ordinary permutations, and
//! brute-force enumeration.
//!
//! Run with `cargo run --example rank_gf [W]` (default "-1 -2 3").

use signed_separable::qpoly::Var;
use signed_separable::septree::{
    f_bn, rank_gf_lower_b, rank_gf_lower_b_via_reduction, rank_gf_upper_b,
    rank_gf_upper_b_via_reduction,
};
use signed_separable::weak_order::{
    rank_gf_lower_brute, rank_gf_upper_brute, DEFAULT_ORACLE_BOUND,
};
use signed_separable::SignedPerm;

fn main() -> signed_separable::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "-1 -2 3".into());
    let w: SignedPerm = arg.parse()?;

    let lower = rank_gf_lower_b(&w)?;
    let upper = rank_gf_upper_b(&w)?;
    println!("w = {w}");
    println!("lower interval: {}", lower.display(Var::Q));
    println!("upper interval: {}", upper.display(Var::Q));

    assert_eq!(lower, rank_gf_lower_b_via_reduction(&w)?);
    assert_eq!(upper, rank_gf_upper_b_via_reduction(&w)?);
    println!("reduction route agrees");
    if w.len() <= DEFAULT_ORACLE_BOUND {
        assert_eq!(lower, rank_gf_lower_brute(&w)?);
        assert_eq!(upper, rank_gf_upper_brute(&w)?);
        println!("brute force agrees");
    }

    assert_eq!(&lower * &upper, f_bn(w.len()));
    println!("product = [n]!(n)! = {}", f_bn(w.len()).display(Var::Q));
    Ok(())
}
