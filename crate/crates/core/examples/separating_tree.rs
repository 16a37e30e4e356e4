//! Separating trees, their sign-change nodes, and DOT output.
//!
//! Run with `cargo run --example separating_tree [W]`
//! (default "1 -5 -3 -4 -2 6 -9 -7 -8").

use signed_separable::septree::{s_plus_minus, tree_skeleton_equal, tree_to_dot};
use signed_separable::{build_tree, st, SignedPerm};

fn main() -> signed_separable::Result<()> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1 -5 -3 -4 -2 6 -9 -7 -8".into());
    let w: SignedPerm = arg.parse()?;
    let s = st(w.entries())?;

    let t = build_tree(&w)?;
    let ts = build_tree(&s)?;
    println!("T({w}) = {t}");
    println!("T({s}) = {ts}");
    println!("same skeleton: {}", tree_skeleton_equal(&t, &ts));

    let (plus, minus) = s_plus_minus(&t);
    let n = |v: &[&signed_separable::SepTree]| v.iter().map(|x| x.leaf_count()).collect::<Vec<_>>();
    println!("S+ leaf counts: {:?}", n(&plus));
    println!("S- leaf counts: {:?}\n", n(&minus));

    print!("{}", tree_to_dot(&t));
    Ok(())
}
