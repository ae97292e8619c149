//! Show every absolutely symmetric rooted tree with n edges in all three
//! encodings: level sequence, canonical parentheses, and DOT.
//!
//! Usage: `cargo run --example tree_gallery [N]` (default 8)
//!
//! Pipe the DOT blocks to Graphviz to render them, e.g.
//! `cargo run --example tree_gallery 8 | awk '/^digraph/,/^}/' | dot -Tsvg > trees.svg`

use asrt::trees::enumerate_trees;
use asrt::DivisorSieve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(8), |s| s.parse())?;

    let sieve = DivisorSieve::new(n.max(2))?;
    let trees = enumerate_trees(n, &sieve)?;
    println!("{} trees with {n} edges", trees.len());
    println!();
    for (i, t) in trees.iter().enumerate() {
        println!(
            "levels {t}    vector {}    paren {}",
            t.to_vector(),
            t.to_paren()?
        );
        if i == 0 {
            println!();
            print!("{}", t.to_dot(&format!("t{i}"))?);
            println!();
        }
    }
    Ok(())
}
