//! The complexity table `T(0..=limit)` and the identities built on it.
//!
//! `T(n)` counts the composition vectors with `f(A) = n` (equivalently,
//! the absolutely symmetric rooted trees with `n` edges) and satisfies the
//! divisor recurrence
//!
//! ```text
//! T(0) = 1,    T(n) = sum over divisors r of n of T(r - 1)
//! ```
//!
//! so the table is filled in ascending `n`, each entry reading only
//! strictly smaller indices. Values grow quasi-polynomially and overflow
//! fixed-width words quickly; everything here is exact big-integer
//! arithmetic and nothing is ever rounded through a float.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factorization::DivisorSieve;

/// Exact values `T(0), ..., T(limit)`.
///
/// Invariants: `T(0) = T(1) = 1` and `T(n) >= T(n-1) + 1` for `n >= 2`.
/// A completed table is immutable through `&self` and safe to share.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityTable {
    values: Vec<BigUint>,
}

impl ComplexityTable {
    /// Builds the table up to `limit` by the divisor recurrence. The sieve
    /// must cover `limit`.
    pub fn build(limit: u64, sieve: &DivisorSieve) -> Result<Self> {
        let mut table = ComplexityTable {
            values: vec![BigUint::from(1u32)],
        };
        table.extend_to(limit, sieve)?;
        Ok(table)
    }

    /// Extends the table in place up to `limit`, resuming the recurrence
    /// from the last stored entry. A no-op if the table already covers it.
    pub fn extend_to(&mut self, limit: u64, sieve: &DivisorSieve) -> Result<()> {
        if limit > sieve.limit() {
            return Err(Error::Usage(format!(
                "sieve covers only {}, cannot build table to {limit}",
                sieve.limit()
            )));
        }
        let target = usize::try_from(limit).expect("limit fits in usize") + 1;
        self.values
            .reserve(target.saturating_sub(self.values.len()));
        for n in self.values.len() as u64..=limit {
            let mut sum = BigUint::zero();
            for r in sieve.divisors(n)? {
                sum += &self.values[(r - 1) as usize];
            }
            self.values.push(sum);
        }
        Ok(())
    }

    /// Reassembles a table from raw values, checking the type invariants.
    /// Used when ingesting a cache file.
    pub(crate) fn from_values(values: Vec<BigUint>) -> Result<Self> {
        if values.first() != Some(&BigUint::from(1u32)) {
            return Err(Error::Format("table must start with T(0) = 1".into()));
        }
        if values.len() > 1 && values[1] != BigUint::from(1u32) {
            return Err(Error::Format("table must have T(1) = 1".into()));
        }
        for n in 2..values.len() {
            if values[n] <= values[n - 1] {
                return Err(Error::Format(format!(
                    "table values must be strictly increasing from n = 2; violated at n = {n}"
                )));
            }
        }
        Ok(ComplexityTable { values })
    }

    /// Inclusive upper index of the table.
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// `T(n)`.
    pub fn t(&self, n: u64) -> Result<&BigUint> {
        self.check_range(n)?;
        Ok(&self.values[n as usize])
    }

    /// `T*(n) = T(n) - T(n-1)` for `n >= 1`; zero only at `n = 1`.
    pub fn t_star(&self, n: u64) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::Domain("T* is defined for n >= 1".into()));
        }
        self.check_range(n)?;
        let diff = &self.values[n as usize] - &self.values[(n - 1) as usize];
        Ok(diff)
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n > self.limit() {
            return Err(Error::Range(format!(
                "n = {n} exceeds the table limit {}",
                self.limit()
            )));
        }
        Ok(())
    }
}

/// `T*(n)` recomputed by inclusion-exclusion over the distinct primes of
/// `n`: the signed sum of `T(n / prod(S))` over nonempty prime subsets `S`,
/// with sign `(-1)^(|S|-1)`. Defined for `n >= 2`.
///
/// Returned as a signed integer so that a table violating the identity
/// still yields a comparable value instead of an underflow.
pub fn t_star_inclusion_exclusion(
    table: &ComplexityTable,
    sieve: &DivisorSieve,
    n: u64,
) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "inclusion-exclusion form of T* is defined for n >= 2, got {n}"
        )));
    }
    if n > table.limit() {
        return Err(Error::Range(format!(
            "n = {n} exceeds the table limit {}",
            table.limit()
        )));
    }
    let mut sum = BigInt::zero();
    for (d, sign) in sieve.squarefree_divisor_terms(n)? {
        let term = BigInt::from(table.t(n / d)?.clone());
        if sign > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// Primality read off the table: `n >= 2` is prime exactly when
/// `T*(n) = 1`.
pub fn is_prime_by_complexity(table: &ComplexityTable, n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::Range(format!(
            "primality by complexity is defined for n >= 2, got {n}"
        )));
    }
    Ok(table.t_star(n)? == BigUint::from(1u32))
}

/// For composite `n`, checks the strict upper bound
/// `T(n) < 1 + T(n-1) + (2*isqrt(n) - 2) * T(n/p - 1)` where `p` is the
/// smallest prime factor of `n`. The square root is the exact integer
/// square root. Returns whether the inequality holds.
pub fn check_composite_bound(
    table: &ComplexityTable,
    sieve: &DivisorSieve,
    n: u64,
) -> Result<bool> {
    if n > table.limit() || n > sieve.limit() {
        return Err(Error::Range(format!(
            "n = {n} exceeds the table limit {} or sieve limit {}",
            table.limit(),
            sieve.limit()
        )));
    }
    if n < 4 {
        return Err(Error::Domain(format!(
            "composite bound applies to composite n only, got {n}"
        )));
    }
    let p = sieve.smallest_prime_factor(n)?;
    if p == n {
        return Err(Error::Domain(format!(
            "composite bound applies to composite n only, {n} is prime"
        )));
    }
    let factor = 2 * n.isqrt() - 2;
    let rhs = BigUint::from(1u32) + table.t(n - 1)? + BigUint::from(factor) * table.t(n / p - 1)?;
    Ok(*table.t(n)? < rhs)
}

/// Checks `T(n) <= C(n, floor(n/2))` in exact arithmetic for `n >= 1`.
pub fn check_binomial_bound(table: &ComplexityTable, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Domain("binomial bound is stated for n >= 1".into()));
    }
    Ok(*table.t(n)? <= binomial(n, n / 2))
}

/// Checks the prime-power identity `T(p^r) = sum over k in 0..=r of
/// T(p^k - 1)` exactly. `p` must be prime and `r >= 1`.
pub fn prime_power_identity(table: &ComplexityTable, p: u64, r: u32) -> Result<bool> {
    if !is_prime_u64(p) {
        return Err(Error::Domain(format!("p = {p} is not prime")));
    }
    if r == 0 {
        return Err(Error::Domain("exponent r must be at least 1".into()));
    }
    let n = p
        .checked_pow(r)
        .ok_or_else(|| Error::Range(format!("{p}^{r} overflows")))?;
    let lhs = table.t(n)?.clone();
    let mut rhs = BigUint::zero();
    let mut power = 1u64;
    for _ in 0..=r {
        rhs += table.t(power - 1)?;
        power = power.saturating_mul(p);
    }
    Ok(lhs == rhs)
}

/// Rebuilds `T(0..=N)` from the first differences `T*(1..=N)`:
/// `T(0) = 1` and `T(n) = 1 + sum of the first n differences`. Handy for
/// ingesting an externally tabulated difference sequence as golden data.
pub fn t_from_star_prefix(star_values: &[BigUint]) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(star_values.len() + 1);
    let mut acc = BigUint::from(1u32);
    out.push(acc.clone());
    for s in star_values {
        acc += s;
        out.push(acc.clone());
    }
    out
}

/// Binomial coefficient `C(n, k)` by the exact multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n.saturating_sub(k));
    let mut res = BigUint::from(1u32);
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// T(0..=12); the tail entries are pinned by the module-level golden
    /// tests and by the enumeration oracle in the vectors module.
    const T_THROUGH_12: [u32; 13] = [1, 1, 2, 3, 5, 6, 10, 11, 16, 19, 26, 27, 40];

    fn setup(limit: u64) -> (DivisorSieve, ComplexityTable) {
        let sieve = DivisorSieve::new(limit).unwrap();
        let table = ComplexityTable::build(limit, &sieve).unwrap();
        (sieve, table)
    }

    #[test]
    fn table_prefix_values() {
        let (_, table) = setup(12);
        for (n, &expected) in T_THROUGH_12.iter().enumerate() {
            assert_eq!(
                table.t(n as u64).unwrap(),
                &BigUint::from(expected),
                "T({n})"
            );
        }
    }

    #[test]
    fn t_of_twelve_is_forty() {
        let (_, table) = setup(12);
        assert_eq!(table.t(12).unwrap(), &BigUint::from(40u32));
        assert_eq!(table.t(0).unwrap(), &BigUint::from(1u32));
        assert_eq!(table.t(8).unwrap(), &BigUint::from(16u32));
    }

    #[test]
    fn t_star_examples() {
        let (_, table) = setup(40);
        assert_eq!(table.t_star(1).unwrap(), BigUint::from(0u32));
        assert_eq!(table.t_star(12).unwrap(), BigUint::from(13u32));
        assert_eq!(table.t_star(40).unwrap(), BigUint::from(145u32));
    }

    #[test]
    fn t_star_domain_and_range_errors() {
        let (_, table) = setup(10);
        assert!(matches!(table.t_star(0), Err(Error::Domain(_))));
        assert!(matches!(table.t_star(11), Err(Error::Range(_))));
        assert!(matches!(table.t(11), Err(Error::Range(_))));
    }

    #[test]
    fn strictly_increasing_from_two() {
        let (_, table) = setup(2000);
        for n in 2..=2000u64 {
            assert!(
                table.t(n).unwrap() >= &(table.t(n - 1).unwrap() + BigUint::from(1u32)),
                "T({n}) >= T({}) + 1",
                n - 1
            );
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let (sieve, table) = setup(30);
        // n = 12: T(6) + T(4) - T(2) = 10 + 5 - 2 = 13
        assert_eq!(
            t_star_inclusion_exclusion(&table, &sieve, 12).unwrap(),
            BigInt::from(13)
        );
        // n = 30: T(15)+T(10)+T(6) - T(5)-T(3)-T(2) + T(1) = 61+26+10-6-3-2+1 = 87
        assert_eq!(
            t_star_inclusion_exclusion(&table, &sieve, 30).unwrap(),
            BigInt::from(87)
        );
        // n = 7: single prime, single term T(1) = 1
        assert_eq!(
            t_star_inclusion_exclusion(&table, &sieve, 7).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn inclusion_exclusion_rejects_small_n() {
        let (sieve, table) = setup(10);
        assert!(matches!(
            t_star_inclusion_exclusion(&table, &sieve, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            t_star_inclusion_exclusion(&table, &sieve, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn primality_examples() {
        let (_, table) = setup(12);
        assert!(is_prime_by_complexity(&table, 7).unwrap());
        assert!(!is_prime_by_complexity(&table, 9).unwrap());
        assert!(is_prime_by_complexity(&table, 2).unwrap());
        assert!(matches!(
            is_prime_by_complexity(&table, 1),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn composite_bound_examples() {
        let (sieve, table) = setup(12);
        // n = 4: T(4) = 5 < 1 + T(3) + (2*2-2)*T(1) = 6
        assert!(check_composite_bound(&table, &sieve, 4).unwrap());
        // n = 12: 40 < 1 + 27 + (2*3-2)*T(5) = 52
        assert!(check_composite_bound(&table, &sieve, 12).unwrap());
        // n = 9: 19 < 1 + 16 + (2*3-2)*T(2) = 25
        assert!(check_composite_bound(&table, &sieve, 9).unwrap());
    }

    #[test]
    fn composite_bound_rejects_primes_and_units() {
        let (sieve, table) = setup(12);
        assert!(matches!(
            check_composite_bound(&table, &sieve, 7),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            check_composite_bound(&table, &sieve, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            check_composite_bound(&table, &sieve, 13),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn binomial_bound_examples() {
        let (_, table) = setup(12);
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(12, 6), BigUint::from(924u32));
        assert!(check_binomial_bound(&table, 1).unwrap());
        assert!(check_binomial_bound(&table, 4).unwrap());
        assert!(check_binomial_bound(&table, 12).unwrap());
        assert!(matches!(
            check_binomial_bound(&table, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn prime_power_examples() {
        let (_, table) = setup(25);
        // T(8) = T(0)+T(1)+T(3)+T(7) = 1+1+3+11 = 16
        assert!(prime_power_identity(&table, 2, 3).unwrap());
        // T(9) = T(0)+T(2)+T(8) = 1+2+16 = 19
        assert!(prime_power_identity(&table, 3, 2).unwrap());
        // T(5) = T(0)+T(4) = 6
        assert!(prime_power_identity(&table, 5, 1).unwrap());
    }

    #[test]
    fn prime_power_rejects_bad_inputs() {
        let (_, table) = setup(25);
        assert!(matches!(
            prime_power_identity(&table, 4, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            prime_power_identity(&table, 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            prime_power_identity(&table, 2, 5),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn star_prefix_examples() {
        assert_eq!(t_from_star_prefix(&[]), vec![BigUint::from(1u32)]);
        let star: Vec<BigUint> = [0u32, 1, 1, 2, 1, 4]
            .iter()
            .map(|&x| BigUint::from(x))
            .collect();
        let expected: Vec<BigUint> = [1u32, 1, 2, 3, 5, 6, 10]
            .iter()
            .map(|&x| BigUint::from(x))
            .collect();
        assert_eq!(t_from_star_prefix(&star), expected);
    }

    #[test]
    fn build_requires_covering_sieve() {
        let sieve = DivisorSieve::new(10).unwrap();
        assert!(matches!(
            ComplexityTable::build(11, &sieve),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn extend_matches_fresh_build() {
        let sieve = DivisorSieve::new(60).unwrap();
        let mut grown = ComplexityTable::build(12, &sieve).unwrap();
        grown.extend_to(60, &sieve).unwrap();
        let fresh = ComplexityTable::build(60, &sieve).unwrap();
        assert_eq!(grown, fresh);
        // extending backwards is a no-op
        grown.extend_to(12, &sieve).unwrap();
        assert_eq!(grown.limit(), 60);
    }

    #[test]
    fn from_values_validates_invariants() {
        let ok = vec![1u32, 1, 2, 3].into_iter().map(BigUint::from).collect();
        assert!(ComplexityTable::from_values(ok).is_ok());
        let bad_start = vec![2u32].into_iter().map(BigUint::from).collect();
        assert!(matches!(
            ComplexityTable::from_values(bad_start),
            Err(Error::Format(_))
        ));
        let not_increasing = vec![1u32, 1, 2, 2].into_iter().map(BigUint::from).collect();
        assert!(matches!(
            ComplexityTable::from_values(not_increasing),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn zero_limit_table() {
        let sieve = DivisorSieve::new(2).unwrap();
        let table = ComplexityTable::build(0, &sieve).unwrap();
        assert_eq!(table.limit(), 0);
        assert_eq!(table.t(0).unwrap(), &BigUint::from(1u32));
    }
}
