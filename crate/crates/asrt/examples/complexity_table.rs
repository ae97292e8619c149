//! Build the complexity table and read a few things off it.
//!
//! Usage: `cargo run --example complexity_table [LIMIT]` (default 40)

use asrt::{ComplexityTable, DivisorSieve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: u64 = std::env::args().nth(1).map_or(Ok(40), |s| s.parse())?;

    let sieve = DivisorSieve::new(limit.max(2))?;
    let table = ComplexityTable::build(limit, &sieve)?;

    println!("n\tT(n)\tT*(n)");
    for n in 0..=limit {
        let star = if n == 0 {
            "-".to_string()
        } else {
            table.t_star(n)?.to_string()
        };
        println!("{n}\t{}\t{star}", table.t(n)?);
    }

    if limit >= 12 {
        let terms: Vec<String> = sieve
            .divisors(12)?
            .into_iter()
            .map(|r| table.t(r - 1).map(|t| t.to_string()))
            .collect::<Result<_, _>>()?;
        println!();
        println!(
            "T(12) decomposes over its divisors as {} = {}",
            terms.join(" + "),
            table.t(12)?
        );
    }
    Ok(())
}
