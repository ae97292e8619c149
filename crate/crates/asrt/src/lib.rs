//! Complexity of natural numbers through absolutely symmetric rooted trees.
//!
//! The complexity `T(n)` counts the composition vectors `A = (a1, ..., ak)`
//! with `f(A) = n`, where `f(a1) = a1` and
//! `f(a1, ..., a(i+1)) = (f(a1, ..., ai) + 1) * a(i+1)`. Those vectors are
//! in bijection with the rooted trees whose siblings all carry identical
//! subtrees ("absolutely symmetric" trees), `T(n)` of them with `n` edges,
//! and `T` obeys the divisor recurrence `T(n) = sum over r | n of T(r-1)`
//! with `T(0) = 1`.
//!
//! The crate computes the table exactly (big integers throughout), realizes
//! the vector/tree bijection, recognizes the trees, and cross-checks every
//! identity against independent brute-force oracles:
//!
//! * [`factorization`] - smallest-prime-factor sieve, divisors, and the
//!   signed squarefree-divisor terms used by inclusion-exclusion;
//! * [`complexity`] - the `T` table, `T*` both as a difference and by
//!   inclusion-exclusion, the primality characterization, and bound checks;
//! * [`vectors`] - the functional `f` and the streaming enumeration of all
//!   vectors with `f(A) = n`, independent of the table;
//! * [`trees`] - level sequences, expansion, the identical-siblings
//!   recognizer, and parenthesis/DOT encodings;
//! * [`verify`] - the oracle cross-checks, reported claim by claim;
//! * [`cli`] - the `asrt` command-line tool and the table cache format.
//!
//! ```
//! use asrt::{ComplexityTable, DivisorSieve};
//!
//! let sieve = DivisorSieve::new(100).unwrap();
//! let table = ComplexityTable::build(100, &sieve).unwrap();
//! assert_eq!(table.t(12).unwrap(), &40u32.into());
//! assert_eq!(table.t_star(13).unwrap(), 1u32.into()); // 13 is prime
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, one
//! per capability; `cargo run --example complexity_table` is a good start.

#![forbid(unsafe_code)]

pub mod cli;
pub mod complexity;
pub mod error;
pub mod factorization;
pub mod trees;
pub mod vectors;
pub mod verify;

pub use complexity::ComplexityTable;
pub use error::{Error, Result};
pub use factorization::{DivisorSieve, Factorization};
pub use trees::{AsrtTree, RootedTree};
pub use vectors::CompositionVector;
pub use verify::VerificationReport;
