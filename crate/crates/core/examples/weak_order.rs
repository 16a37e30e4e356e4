//! Length, the left weak order, and phi as an order isomorphism.
//!
//! Prints the Hasse diagrams of K(S_4) and K(B_3) under the left weak order,
//! nodes numbered so that k and phi(k) share a label. Pipe the DOT part into
//! `dot -Tsvg` to draw it.
//!
//! Run with `cargo run --example weak_order`.

use signed_separable::weak_order::{bfs_weak_order, order_sets, violated_inclusions};
use signed_separable::{enumerate_separable_s, length, leq_left_b, leq_left_s, phi, SignedPerm};

fn covers(
    elems: &[SignedPerm],
    leq: impl Fn(&SignedPerm, &SignedPerm) -> bool,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, u) in elems.iter().enumerate() {
        for (j, v) in elems.iter().enumerate() {
            if i == j || !leq(u, v) {
                continue;
            }
            let between = elems
                .iter()
                .any(|x| x != u && x != v && leq(u, x) && leq(x, v));
            if !between {
                out.push((i, j));
            }
        }
    }
    out
}

fn main() -> signed_separable::Result<()> {
    let w: SignedPerm = "2 -1".parse()?;
    let s = order_sets(&w);
    println!(
        "{w}: length {} (Neg {:?}, Inv {:?}, Nsp {:?})",
        length(&w),
        s.neg,
        s.inv,
        s.nsp
    );
    let g = bfs_weak_order(2)?;
    println!("BFS distance from identity: {:?}", g.distance_of(&w));
    let (u, v): (SignedPerm, SignedPerm) = ("-1 2".parse()?, "2 1".parse()?);
    println!(
        "{u} <= {v}? violated inclusions: {:?}\n",
        violated_inclusions(&u, &v)?
    );

    let mut ks = enumerate_separable_s(4);
    ks.sort_by_key(|w| (length(w), w.clone()));
    let kb: Vec<SignedPerm> = ks.iter().map(phi).collect::<Result<_, _>>()?;
    let cs = covers(&ks, |a, b| leq_left_s(a, b).unwrap());
    let cb = covers(&kb, |a, b| leq_left_b(a, b).unwrap());
    assert_eq!(cs, cb);

    println!("digraph separable_weak_order {{\n  rankdir=BT;");
    for (k, (a, b)) in ks.iter().zip(&kb).enumerate() {
        println!("  n{k} [label=\"{}: {a} / {b}\"];", k + 1);
    }
    for (i, j) in cs {
        println!("  n{i} -> n{j};");
    }
    println!("}}");
    Ok(())
}
