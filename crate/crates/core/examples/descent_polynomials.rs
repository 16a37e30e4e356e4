//! Descent polynomials of separable classes and their gamma vectors.
//!
//! Run with `cargo run --example descent_polynomials [N]` (default 6).

use signed_separable::qpoly::Var;
use signed_separable::stats::{
    descent_polynomial_b, descent_polynomial_s, gamma_counts_b, gamma_expansion, is_gamma_positive,
};
use signed_separable::{des_sets_b, SignedPerm};

fn main() -> signed_separable::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    let w: SignedPerm = "3 1 2 -4 -6 -5".parse()?;
    let d = des_sets_b(&w);
    println!(
        "{w}: descents {:?}, double descents {:?}\n",
        d.descents, d.double_descents
    );

    for n in 0..=max {
        let b = descent_polynomial_b(n);
        assert_eq!(b, descent_polynomial_s(n + 1));
        let gamma = gamma_expansion(&b, n)?;
        assert!(is_gamma_positive(&gamma));
        assert_eq!(gamma, gamma_counts_b(n));
        let g: Vec<String> = gamma.iter().map(|x| x.to_string()).collect();
        println!("B_{n}(t) = {}", b.display(Var::T));
        println!("  gamma = ({})", g.join(", "));
    }
    Ok(())
}
