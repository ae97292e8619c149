//! List every composition vector with f(A) = n and check the count
//! against both the table and the streaming counter.
//!
//! Usage: `cargo run --example vector_census [N]` (default 12)

use num_bigint::BigUint;

use asrt::vectors::{count_vectors, enumerate_vectors};
use asrt::{ComplexityTable, DivisorSieve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u64 = std::env::args().nth(1).map_or(Ok(12), |s| s.parse())?;

    let sieve = DivisorSieve::new(n.max(2))?;
    let table = ComplexityTable::build(n, &sieve)?;

    let vs = enumerate_vectors(n, &sieve)?;
    for v in &vs {
        println!("{v}  ->  f = {}", v.eval_f());
    }
    println!();
    println!("enumerated: {}", vs.len());
    println!("streamed:   {}", count_vectors(n, &sieve)?);
    println!("table T({n}): {}", table.t(n)?);
    assert_eq!(BigUint::from(vs.len() as u64), *table.t(n)?);
    Ok(())
}
