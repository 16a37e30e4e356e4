//! Pattern containment and the six-pattern separability test.
//!
//! Run with `cargo run --example patterns`.

use signed_separable::patterns::{find_pattern, separability_witnesses, SEPARABLE_B_PATTERNS};
use signed_separable::{is_separable_signed, SignedPerm};

fn main() -> signed_separable::Result<()> {
    let w: SignedPerm = "-2 5 3 -6 -4 1".parse()?;
    let u: SignedPerm = "2 -3 1".parse()?;
    match find_pattern(&w, &u)? {
        Some(idx) => println!("{w} contains {u} at positions {idx:?}"),
        None => println!("{w} avoids {u}"),
    }

    println!("\nforbidden patterns:");
    for p in SEPARABLE_B_PATTERNS {
        println!("  {}", SignedPerm::new(p.to_vec())?);
    }

    println!();
    for s in ["-1 -2 3", "2 -1 -3", "3 1 4 2", "1 -5 -3 -4 -2 6 -9 -7 -8"] {
        let w: SignedPerm = s.parse()?;
        if is_separable_signed(&w) {
            println!("{w}: separable");
        } else {
            for (p, idx) in separability_witnesses(&w) {
                println!("{w}: contains {p} at {idx:?}");
            }
        }
    }
    Ok(())
}
