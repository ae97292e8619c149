//! Composition vectors and the functional `f` they are measured by.
//!
//! For a vector `A = (a1, ..., ak)` with every `ai >= 1`,
//!
//! ```text
//! f(a1) = a1,    f(a1, ..., a(i+1)) = (f(a1, ..., ai) + 1) * a(i+1)
//! ```
//!
//! which unrolls to `a1*a2*...*ak + a2*a3*...*ak + ... + ak`. The number of
//! vectors with `f(A) = n` is the complexity `T(n)`; the enumeration here
//! counts them directly from the structure of `f`, without the memoized
//! divisor recurrence, so it can serve as an independent oracle for the
//! [`crate::complexity`] table.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factorization::DivisorSieve;

/// A nonempty sequence `(a1, ..., ak)` with every component at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionVector {
    components: Vec<u64>,
}

impl CompositionVector {
    /// Validates that the component list is nonempty and positive.
    pub fn new(components: Vec<u64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Domain("composition vector must be nonempty".into()));
        }
        if components.contains(&0) {
            return Err(Error::Domain(
                "composition vector components must be at least 1".into(),
            ));
        }
        Ok(CompositionVector { components })
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Never true; a valid vector has at least one component.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Evaluates the defining recurrence left to right in exact arithmetic.
    pub fn eval_f(&self) -> BigUint {
        let mut value = BigUint::from(self.components[0]);
        for &a in &self.components[1..] {
            value = (value + 1u32) * a;
        }
        value
    }

    /// The nested product-sum `a1*a2*...*ak + a2*a3*...*ak + ... + ak`,
    /// the closed form that `f` unrolls to. Computed by suffix products,
    /// independently of [`Self::eval_f`].
    pub fn expand_nested_sum(&self) -> BigUint {
        let mut suffix = BigUint::from(1u32);
        let mut total = BigUint::from(0u32);
        for &a in self.components.iter().rev() {
            suffix *= a;
            total += &suffix;
        }
        total
    }
}

impl fmt::Display for CompositionVector {
    /// Components joined by commas: `a1,a2,...,ak`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Streams every vector `A` with `f(A) = n` to `visit`, in the traversal's
/// own order (not sorted). Returns early if `visit` returns `false`.
///
/// The traversal peels the last component: either `A = (n)`, or the last
/// component is a divisor `d` of `n` with `2d <= n` and the prefix is any
/// vector evaluating to `n/d - 1`. Each vector is produced exactly once.
/// The walk is iterative, so deep all-ones chains do not exhaust the stack.
pub fn visit_vectors<F>(n: u64, sieve: &DivisorSieve, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> bool,
{
    let mut buf: Vec<u64> = Vec::new();
    walk(n, sieve, |head, tail| {
        buf.clear();
        buf.push(head);
        buf.extend(tail.iter().rev());
        visit(&buf)
    })
}

/// Counts the vectors with `f(A) = n` by running the full traversal and
/// counting emissions. Deliberately does not consult a complexity table:
/// this is the independent recount of the definition of `T(n)`.
pub fn count_vectors(n: u64, sieve: &DivisorSieve) -> Result<BigUint> {
    let mut count: u64 = 0;
    walk(n, sieve, |_, _| {
        count += 1;
        true
    })?;
    Ok(BigUint::from(count))
}

/// All vectors with `f(A) = n`, sorted lexicographically by components
/// (a shorter vector precedes any extension of it), duplicate-free.
pub fn enumerate_vectors(n: u64, sieve: &DivisorSieve) -> Result<Vec<CompositionVector>> {
    enumerate_vectors_capped(n, sieve, usize::MAX)
}

/// As [`enumerate_vectors`], but fails with a capacity error if the result
/// would hold more than `cap` vectors.
pub fn enumerate_vectors_capped(
    n: u64,
    sieve: &DivisorSieve,
    cap: usize,
) -> Result<Vec<CompositionVector>> {
    let mut out: Vec<CompositionVector> = Vec::new();
    let mut overflowed = false;
    visit_vectors(n, sieve, |components| {
        if out.len() == cap {
            overflowed = true;
            return false;
        }
        out.push(CompositionVector {
            components: components.to_vec(),
        });
        true
    })?;
    if overflowed {
        return Err(Error::Capacity(format!(
            "more than {cap} vectors with f(A) = {n}; raise the limit or count instead"
        )));
    }
    out.sort_unstable();
    Ok(out)
}

/// Iterative depth-first walk over the decomposition tree. The callback
/// receives the leading component and the already-chosen suffix in reverse
/// order (last component first); together they form one complete vector.
fn walk<F>(n: u64, sieve: &DivisorSieve, mut emit: F) -> Result<()>
where
    F: FnMut(u64, &[u64]) -> bool,
{
    if n == 0 {
        return Err(Error::Range(
            "no vector evaluates to 0; n must be at least 1".into(),
        ));
    }
    if n > sieve.limit() {
        return Err(Error::Range(format!(
            "n = {n} exceeds the sieve limit {}",
            sieve.limit()
        )));
    }

    struct Frame {
        branches: Vec<u64>,
        next: usize,
        owns_suffix_entry: bool,
    }

    // Only divisors d of m with 2d <= m can serve as the last component of
    // a prefix evaluating to m.
    let branch_divisors = |m: u64| -> Result<Vec<u64>> {
        let mut divs = sieve.divisors(m)?;
        divs.retain(|&d| 2 * d <= m);
        Ok(divs)
    };

    let mut suffix: Vec<u64> = Vec::new();
    if !emit(n, &suffix) {
        return Ok(());
    }
    let mut stack = vec![Frame {
        branches: branch_divisors(n)?,
        next: 0,
        owns_suffix_entry: false,
    }];
    // Invariant: stack.last() describes a target m whose remaining branch
    // divisors are branches[next..]; suffix holds the components chosen so
    // far, rightmost first.
    let mut targets = vec![n];

    while let Some(frame) = stack.last_mut() {
        if frame.next == frame.branches.len() {
            if frame.owns_suffix_entry {
                suffix.pop();
            }
            stack.pop();
            targets.pop();
            continue;
        }
        let d = frame.branches[frame.next];
        frame.next += 1;
        let m = targets.last().unwrap() / d - 1;
        suffix.push(d);
        if !emit(m, &suffix) {
            return Ok(());
        }
        stack.push(Frame {
            branches: branch_divisors(m)?,
            next: 0,
            owns_suffix_entry: true,
        });
        targets.push(m);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(components: &[u64]) -> CompositionVector {
        CompositionVector::new(components.to_vec()).unwrap()
    }

    fn sieve(limit: u64) -> DivisorSieve {
        DivisorSieve::new(limit).unwrap()
    }

    /// Independent oracle: depth-first search over all vectors using only
    /// the definition of `f`, extending by every component value that keeps
    /// the running value at most `n`. No divisor structure involved.
    fn count_by_definition(n: u64) -> u64 {
        fn dfs(value: u64, target: u64, count: &mut u64) {
            if value == target {
                *count += 1;
            }
            let mut a = 1;
            loop {
                let next = (value + 1) * a;
                if next > target {
                    break;
                }
                dfs(next, target, count);
                a += 1;
            }
        }
        let mut count = 0;
        let mut a = 1;
        while a <= n {
            dfs(a, n, &mut count);
            a += 1;
        }
        count
    }

    #[test]
    fn eval_f_examples() {
        assert_eq!(vec_of(&[5]).eval_f(), BigUint::from(5u32));
        assert_eq!(vec_of(&[1, 2]).eval_f(), BigUint::from(4u32));
        // f(2) = 2, f(2,1) = 3, f(2,1,3) = (3+1)*3 = 12
        assert_eq!(vec_of(&[2, 1, 3]).eval_f(), BigUint::from(12u32));
    }

    #[test]
    fn nested_sum_examples() {
        assert_eq!(vec_of(&[5]).expand_nested_sum(), BigUint::from(5u32));
        // 2*1*3 + 1*3 + 3 = 12
        assert_eq!(vec_of(&[2, 1, 3]).expand_nested_sum(), BigUint::from(12u32));
        assert_eq!(
            vec_of(&[1, 1, 1, 1]).expand_nested_sum(),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn eval_f_equals_nested_sum_exhaustive_small() {
        // all vectors with length <= 4 and entries <= 5
        fn rec(prefix: &mut Vec<u64>) {
            if !prefix.is_empty() {
                let v = CompositionVector::new(prefix.clone()).unwrap();
                assert_eq!(v.eval_f(), v.expand_nested_sum(), "vector {prefix:?}");
            }
            if prefix.len() == 4 {
                return;
            }
            for a in 1..=5 {
                prefix.push(a);
                rec(prefix);
                prefix.pop();
            }
        }
        rec(&mut Vec::new());
    }

    #[test]
    fn invalid_vectors_rejected() {
        assert!(matches!(
            CompositionVector::new(vec![]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            CompositionVector::new(vec![2, 0, 1]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn display_joins_with_commas() {
        assert_eq!(vec_of(&[2, 1, 3]).to_string(), "2,1,3");
        assert_eq!(vec_of(&[7]).to_string(), "7");
    }

    #[test]
    fn enumerate_base_case() {
        let s = sieve(2);
        assert_eq!(enumerate_vectors(1, &s).unwrap(), vec![vec_of(&[1])]);
    }

    #[test]
    fn enumerate_four() {
        let s = sieve(4);
        let got = enumerate_vectors(4, &s).unwrap();
        let expected = vec![
            vec_of(&[1, 1, 1, 1]),
            vec_of(&[1, 2]),
            vec_of(&[2, 1, 1]),
            vec_of(&[3, 1]),
            vec_of(&[4]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_three() {
        let s = sieve(3);
        let got = enumerate_vectors(3, &s).unwrap();
        let expected = vec![vec_of(&[1, 1, 1]), vec_of(&[2, 1]), vec_of(&[3])];
        assert_eq!(got, expected);
    }

    #[test]
    fn count_examples() {
        let s = sieve(12);
        assert_eq!(count_vectors(1, &s).unwrap(), BigUint::from(1u32));
        assert_eq!(count_vectors(12, &s).unwrap(), BigUint::from(40u32));
        assert_eq!(count_vectors(8, &s).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn count_matches_definition_oracle() {
        let s = sieve(40);
        for n in 1..=40 {
            assert_eq!(
                count_vectors(n, &s).unwrap(),
                BigUint::from(count_by_definition(n)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn enumerated_vectors_evaluate_to_n_and_are_strictly_sorted() {
        let s = sieve(60);
        for n in 1..=60u64 {
            let vs = enumerate_vectors(n, &s).unwrap();
            assert_eq!(vs.len() as u64, count_by_definition(n), "count at n = {n}");
            for v in &vs {
                assert_eq!(v.eval_f(), BigUint::from(n), "f({v}) at n = {n}");
            }
            assert!(
                vs.windows(2).all(|w| w[0] < w[1]),
                "strictly sorted, duplicate-free at n = {n}"
            );
        }
    }

    #[test]
    fn prime_vectors_end_in_one() {
        let s = sieve(200);
        for n in (2..=200u64).filter(|&n| (2..n).all(|d| n % d != 0)) {
            for v in enumerate_vectors(n, &s).unwrap() {
                if v.len() > 1 {
                    assert_eq!(v.components().last(), Some(&1), "prime n = {n}, vector {v}");
                }
            }
        }
    }

    #[test]
    fn cap_is_inclusive() {
        let s = sieve(4);
        assert_eq!(enumerate_vectors_capped(4, &s, 5).unwrap().len(), 5);
        assert!(matches!(
            enumerate_vectors_capped(4, &s, 4),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn range_errors() {
        let s = sieve(10);
        assert!(matches!(count_vectors(0, &s), Err(Error::Range(_))));
        assert!(matches!(count_vectors(11, &s), Err(Error::Range(_))));
        assert!(matches!(enumerate_vectors(11, &s), Err(Error::Range(_))));
    }

    #[test]
    fn visit_can_stop_early() {
        let s = sieve(12);
        let mut seen = 0;
        visit_vectors(12, &s, |_| {
            seen += 1;
            seen < 7
        })
        .unwrap();
        assert_eq!(seen, 7);
    }
}
