//! Primality straight off the complexity table: n >= 2 is prime exactly
//! when T*(n) = 1. Cross-checked against trial division on every value.
//!
//! Usage: `cargo run --example primality [LIMIT]` (default 100)

use asrt::complexity::is_prime_by_complexity;
use asrt::verify::trial_division_is_prime;
use asrt::{ComplexityTable, DivisorSieve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: u64 = std::env::args().nth(1).map_or(Ok(100), |s| s.parse())?;

    let sieve = DivisorSieve::new(limit.max(2))?;
    let table = ComplexityTable::build(limit, &sieve)?;

    let mut primes = Vec::new();
    for n in 2..=limit {
        let by_star = is_prime_by_complexity(&table, n)?;
        assert_eq!(by_star, trial_division_is_prime(n)?, "disagreement at {n}");
        if by_star {
            primes.push(n.to_string());
        }
    }
    println!("primes up to {limit}, by T*(n) = 1:");
    println!("{}", primes.join(" "));
    println!(
        "({} of them, every one confirmed by trial division)",
        primes.len()
    );
    Ok(())
}
