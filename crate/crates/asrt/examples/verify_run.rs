//! Run the full oracle cross-check and print the claim-by-claim report.
//!
//! Usage: `cargo run --release --example verify_run [MAX] [DEEP_MAX]`
//! (defaults 2000 and 40)

use asrt::verify;
use asrt::{ComplexityTable, DivisorSieve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let max: u64 = args.next().map_or(Ok(2000), |s| s.parse())?;
    let deep: u64 = args.next().map_or(Ok(40), |s| s.parse())?.min(max);

    let sieve = DivisorSieve::new(max.max(2))?;
    let table = ComplexityTable::build(max, &sieve)?;

    let mut report = verify::verify_census(deep, &table, &sieve)?;
    report.absorb(verify::verify_recurrence(max, &table, &sieve)?);
    report.absorb(verify::verify_star_identities(max, &table, &sieve)?);
    report.absorb(verify::verify_bounds(max, &table, &sieve)?);

    print!("{report}");
    if report.all_passed() {
        println!("all claims passed over [{}, {}]", report.lo, report.hi);
        Ok(())
    } else {
        Err("some claims failed".into())
    }
}
