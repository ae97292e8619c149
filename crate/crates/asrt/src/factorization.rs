//! Smallest-prime-factor sieve and the divisor machinery built on it.
//!
//! The sieve is the single factorization authority in this crate: every
//! module that needs divisors or prime factors takes a [`DivisorSieve`]
//! rather than refactorizing on its own.

use crate::error::{Error, Result};

/// Precomputed smallest prime factors for every `2 <= m <= limit`.
///
/// Construction is `O(limit log log limit)`; afterwards the table is
/// immutable and any number of threads may read it concurrently.
/// Storage is one `u32` per entry, so the limit is capped at `u32::MAX`.
#[derive(Clone)]
pub struct DivisorSieve {
    limit: u64,
    spf: Vec<u32>,
}

/// Prime factorization `n = p1^r1 * p2^r2 * ... * pm^rm` with the primes
/// strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub primes: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of divisors of `n`, the product of `(r_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.primes.iter().map(|&(_, r)| u64::from(r) + 1).product()
    }
}

impl DivisorSieve {
    /// Builds the sieve for all `m <= limit`. `limit` must be at least 2.
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::Usage(format!(
                "sieve limit must be at least 2, got {limit}"
            )));
        }
        if limit > u64::from(u32::MAX) {
            return Err(Error::Usage(format!(
                "sieve limit {limit} exceeds the u32 entry width"
            )));
        }
        let len = usize::try_from(limit).expect("limit fits in usize") + 1;
        let mut spf = vec![0u32; len];
        for m in (2..len).step_by(2) {
            spf[m] = 2;
        }
        let mut p = 3usize;
        while p * p < len {
            if spf[p] == 0 {
                for m in (p * p..len).step_by(2 * p) {
                    if spf[m] == 0 {
                        spf[m] = p as u32;
                    }
                }
            }
            p += 2;
        }
        // remaining zeros are odd primes
        for (m, entry) in spf.iter_mut().enumerate().skip(3).step_by(2) {
            if *entry == 0 {
                *entry = m as u32;
            }
        }
        Ok(DivisorSieve { limit, spf })
    }

    /// Inclusive upper bound of the sieve.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        self.check_range(n)?;
        Ok(u64::from(self.spf[n as usize]))
    }

    /// Whether `n` is prime, answered from the sieve (`spf(n) = n`).
    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check_range(n)?;
        Ok(u64::from(self.spf[n as usize]) == n)
    }

    /// Prime factorization of `n`, primes ascending.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        self.check_range(n)?;
        let mut primes = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = u64::from(self.spf[m as usize]);
            let mut r = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                r += 1;
            }
            primes.push((p, r));
        }
        Ok(Factorization { n, primes })
    }

    /// All divisors of `n`, strictly ascending, including 1 and `n`.
    ///
    /// `n = 1` is allowed and answered without consulting the table.
    /// Generated from the factorization by nested exponent products,
    /// which is `O(d(n))` per call instead of `O(sqrt n)`.
    pub fn divisors(&self, n: u64) -> Result<Vec<u64>> {
        if n == 1 {
            return Ok(vec![1]);
        }
        let fact = self.factorize(n)?;
        let mut divs = vec![1u64];
        for &(p, r) in &fact.primes {
            let prev_len = divs.len();
            let mut power = 1u64;
            for _ in 0..r {
                power *= p;
                for i in 0..prev_len {
                    divs.push(divs[i] * power);
                }
            }
        }
        divs.sort_unstable();
        Ok(divs)
    }

    /// Inclusion-exclusion terms over the nonempty subsets of the distinct
    /// primes of `n`: one `(d, sign)` entry per subset `S`, with
    /// `d = prod(S)` and `sign = (-1)^(|S|-1)`, ascending by `d`.
    ///
    /// For `m` distinct primes this yields `2^m - 1` entries.
    pub fn squarefree_divisor_terms(&self, n: u64) -> Result<Vec<(u64, i8)>> {
        let fact = self.factorize(n)?;
        let primes: Vec<u64> = fact.primes.iter().map(|&(p, _)| p).collect();
        let m = primes.len();
        let mut terms = Vec::with_capacity((1usize << m) - 1);
        for mask in 1u32..(1u32 << m) {
            let mut d = 1u64;
            for (i, &p) in primes.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    d *= p;
                }
            }
            let sign: i8 = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
            terms.push((d, sign));
        }
        terms.sort_unstable_by_key(|&(d, _)| d);
        Ok(terms)
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n < 2 {
            return Err(Error::Range(format!("n must be at least 2, got {n}")));
        }
        if n > self.limit {
            return Err(Error::Range(format!(
                "n = {n} exceeds the sieve limit {}",
                self.limit
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: smallest factor by trial division.
    fn spf_by_trial_division(n: u64) -> u64 {
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return d;
            }
            d += 1;
        }
        n
    }

    #[test]
    fn spf_small_values() {
        let sieve = DivisorSieve::new(12).unwrap();
        assert_eq!(sieve.smallest_prime_factor(12).unwrap(), 2);
        assert_eq!(sieve.smallest_prime_factor(9).unwrap(), 3);
        assert_eq!(sieve.smallest_prime_factor(11).unwrap(), 11);
    }

    #[test]
    fn spf_minimal_sieve() {
        let sieve = DivisorSieve::new(2).unwrap();
        assert_eq!(sieve.smallest_prime_factor(2).unwrap(), 2);
        assert!(sieve.is_prime(2).unwrap());
    }

    #[test]
    fn spf_matches_trial_division_to_million() {
        let sieve = DivisorSieve::new(1_000_000).unwrap();
        // trial division confirms 999983 prime
        assert_eq!(spf_by_trial_division(999_983), 999_983);
        assert_eq!(sieve.smallest_prime_factor(999_983).unwrap(), 999_983);
        for n in 2..=20_000 {
            assert_eq!(
                sieve.smallest_prime_factor(n).unwrap(),
                spf_by_trial_division(n),
                "spf({n})"
            );
        }
    }

    #[test]
    fn sieve_limit_below_two_is_usage_error() {
        assert!(matches!(DivisorSieve::new(0), Err(Error::Usage(_))));
        assert!(matches!(DivisorSieve::new(1), Err(Error::Usage(_))));
    }

    #[test]
    fn factorize_examples() {
        let sieve = DivisorSieve::new(100).unwrap();
        assert_eq!(sieve.factorize(12).unwrap().primes, vec![(2, 2), (3, 1)]);
        assert_eq!(sieve.factorize(7).unwrap().primes, vec![(7, 1)]);
        assert_eq!(
            sieve.factorize(30).unwrap().primes,
            vec![(2, 1), (3, 1), (5, 1)]
        );
    }

    #[test]
    fn factorize_out_of_range() {
        let sieve = DivisorSieve::new(10).unwrap();
        assert!(matches!(sieve.factorize(11), Err(Error::Range(_))));
        assert!(matches!(sieve.factorize(1), Err(Error::Range(_))));
        assert!(matches!(sieve.factorize(0), Err(Error::Range(_))));
    }

    #[test]
    fn divisors_examples() {
        let sieve = DivisorSieve::new(20).unwrap();
        assert_eq!(sieve.divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(sieve.divisors(1).unwrap(), vec![1]);
        assert_eq!(sieve.divisors(13).unwrap(), vec![1, 13]);
    }

    #[test]
    fn squarefree_terms_examples() {
        let sieve = DivisorSieve::new(30).unwrap();
        assert_eq!(
            sieve.squarefree_divisor_terms(12).unwrap(),
            vec![(2, 1), (3, 1), (6, -1)]
        );
        assert_eq!(sieve.squarefree_divisor_terms(7).unwrap(), vec![(7, 1)]);
        assert_eq!(
            sieve.squarefree_divisor_terms(30).unwrap(),
            vec![(2, 1), (3, 1), (5, 1), (6, -1), (10, -1), (15, -1), (30, 1)]
        );
    }

    #[test]
    fn factorization_product_and_divisor_count() {
        let sieve = DivisorSieve::new(5000).unwrap();
        for n in 2..=5000u64 {
            let fact = sieve.factorize(n).unwrap();
            let product: u64 = fact.primes.iter().map(|&(p, r)| p.pow(r)).product();
            assert_eq!(product, n);
            let divs = sieve.divisors(n).unwrap();
            assert_eq!(divs.len() as u64, fact.divisor_count(), "d({n})");
            assert!(divs.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(divs.first(), Some(&1));
            assert_eq!(divs.last(), Some(&n));
            assert!(divs.iter().all(|d| n % d == 0));
        }
    }

    #[test]
    fn squarefree_sign_sum_is_one() {
        // sum over k >= 1 of C(m, k) (-1)^(k-1) = 1 for every m >= 1
        let sieve = DivisorSieve::new(1000).unwrap();
        for n in 2..=1000u64 {
            let sum: i64 = sieve
                .squarefree_divisor_terms(n)
                .unwrap()
                .iter()
                .map(|&(_, s)| i64::from(s))
                .sum();
            assert_eq!(sum, 1, "sign sum for n = {n}");
        }
    }

    #[test]
    fn squarefree_term_count_is_two_pow_m_minus_one() {
        let sieve = DivisorSieve::new(2310).unwrap();
        for &(n, m) in &[(12u64, 2u32), (7, 1), (30, 3), (210, 4), (2310, 5)] {
            let terms = sieve.squarefree_divisor_terms(n).unwrap();
            assert_eq!(terms.len(), (1usize << m) - 1);
        }
    }
}
