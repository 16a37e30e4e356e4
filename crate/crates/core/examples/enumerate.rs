//! Enumerating separable signed permutations and their block structure.
//!
//! Run with `cargo run --example enumerate [N]` (default 3).

use signed_separable::sums::{enumerate_separable_b_with, Strategy};
use signed_separable::{canonical_blocks, enumerate_separable_b, enumerate_separable_s};

fn main() -> signed_separable::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);

    println!("rank  #K(S_n)  #K(B_n)");
    for k in 0..=n.max(6) {
        println!(
            "{k:>4}  {:>7}  {:>7}",
            enumerate_separable_s(k).len(),
            enumerate_separable_b(k).len()
        );
    }

    let by_grammar = enumerate_separable_b(n);
    assert_eq!(
        by_grammar,
        enumerate_separable_b_with(n, Strategy::PatternFilter)
    );
    println!("\nK(B_{n}) with canonical blocks:");
    for w in &by_grammar {
        let d = canonical_blocks(w)?;
        let blocks: Vec<String> = d.blocks.iter().map(|b| format!("({b})")).collect();
        println!("  {w:<12} {}", blocks.join(" + "));
    }
    Ok(())
}
