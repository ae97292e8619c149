//! The plain-text table cache: write it, extend it by resuming the
//! recurrence, and read it back.
//!
//! Usage: `cargo run --example cache_roundtrip [PATH]`
//! (default `target/asrt-demo.cache`)

use std::path::PathBuf;

use asrt::cli::{read_cache, write_cache};
use asrt::{ComplexityTable, DivisorSieve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path: PathBuf = std::env::args()
        .nth(1)
        .map_or_else(|| PathBuf::from("target/asrt-demo.cache"), PathBuf::from);

    let sieve = DivisorSieve::new(500)?;
    let table = ComplexityTable::build(100, &sieve)?;
    write_cache(&table, &path)?;
    println!("wrote T(0..=100) to {}", path.display());

    let mut reloaded = read_cache(&path)?;
    assert_eq!(reloaded, table);
    println!("read back {} entries, identical", reloaded.limit() + 1);

    reloaded.extend_to(500, &sieve)?;
    write_cache(&reloaded, &path)?;
    println!(
        "extended to T(0..=500) by resuming the recurrence; T(500) has {} digits",
        reloaded.t(500)?.to_string().len()
    );

    let full = ComplexityTable::build(500, &sieve)?;
    assert_eq!(read_cache(&path)?, full);
    println!("extension agrees with a fresh build");
    Ok(())
}
