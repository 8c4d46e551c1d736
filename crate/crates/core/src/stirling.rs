//! Exact combinatorics: binomial coefficients, factorials, Stirling numbers
//! of both kinds and the alternating power sum.
//!
//! Stirling tables are memoized per thread, so repeated lookups are cheap and
//! no locking is involved.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

thread_local! {
    static STIRLING2: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
    static STIRLING1: RefCell<Vec<Vec<BigInt>>> = RefCell::new(vec![vec![BigInt::one()]]);
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for a signed upper argument, via the falling factorial.
pub fn binomial_signed(n: i64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i as i64;
    }
    acc / factorial(k)
}

fn extend_table(table: &mut Vec<Vec<BigInt>>, upto: usize, first_kind: bool) {
    while table.len() <= upto {
        let m = table.len();
        let prev = &table[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for n in 1..=m {
            let diag = if n - 1 < prev.len() { prev[n - 1].clone() } else { BigInt::zero() };
            let same = if n < prev.len() { prev[n].clone() } else { BigInt::zero() };
            // second kind: {m n} = n{m-1 n} + {m-1 n-1}
            // first kind:  <m n> = (m-1)<m-1 n> + <m-1 n-1>
            let factor = if first_kind { m - 1 } else { n };
            row[n] = diag + same * factor;
        }
        table.push(row);
    }
}

/// Stirling number of the second kind `{m n}`: partitions of an `m`-set into
/// `n` nonempty blocks.
pub fn stirling2(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    STIRLING2.with(|t| {
        let mut t = t.borrow_mut();
        extend_table(&mut t, m, false);
        t[m][n].clone()
    })
}

/// Unsigned Stirling number of the first kind `<n k>`: permutations of `n`
/// letters with exactly `k` cycles.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    STIRLING1.with(|t| {
        let mut t = t.borrow_mut();
        extend_table(&mut t, n, true);
        t[n][k].clone()
    })
}

/// Signed Stirling number of the first kind `(-1)^(n-k) <n k>`.
pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    let s = stirling1_unsigned(n, k);
    if (n - k.min(n)) % 2 == 1 {
        -s
    } else {
        s
    }
}

/// `sum_{k=0}^{n} (-1)^(n+k) C(n,k) k^m` by direct summation, with `0^0 = 1`.
///
/// Equals `n! {m n}`; this function does not use that identity.
pub fn alternating_power_sum(n: usize, m: usize) -> BigInt {
    let mut total = BigInt::zero();
    for k in 0..=n {
        let power = if m == 0 { BigInt::one() } else { BigInt::from(k).pow(m as u32) };
        let term = binomial(n, k as i64) * power;
        if (n + k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    // Number of set partitions of {0..m} into exactly n blocks, by restricted
    // growth strings.
    fn brute_stirling2(m: usize, n: usize) -> u64 {
        fn go(pos: usize, m: usize, used: usize, n: usize) -> u64 {
            if pos == m {
                return (used == n) as u64;
            }
            let mut count = 0;
            for block in 0..=used {
                if block < n {
                    count += go(pos + 1, m, used.max(block + 1), n);
                }
            }
            count
        }
        go(0, m, 0, n)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn cycles(p: &[usize]) -> usize {
        let mut seen = vec![false; p.len()];
        let mut count = 0;
        for s in 0..p.len() {
            if !seen[s] {
                count += 1;
                let mut i = s;
                while !seen[i] {
                    seen[i] = true;
                    i = p[i];
                }
            }
        }
        count
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..8 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial_signed(-2, 3), BigInt::from(-4));
        assert_eq!(binomial_signed(5, 2), BigInt::from(10));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::one()];
        for n in 0..30usize {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), row[k]);
            }
            let mut next = vec![BigInt::one(); n + 2];
            for k in 1..=n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::one());
        for m in 1..6 {
            assert_eq!(stirling2(m, 0), BigInt::zero());
        }
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_unsigned(4, 1), BigInt::from(6));
        for n in 0..8 {
            assert_eq!(stirling1_unsigned(n, n), BigInt::one());
        }
        assert_eq!(stirling1_signed(4, 3), BigInt::from(-6));
    }

    #[test]
    fn stirling_tables_match_enumeration() {
        for m in 0..=10 {
            for n in 0..=10 {
                assert_eq!(stirling2(m, n), BigInt::from(brute_stirling2(m, n)), "{{{m} {n}}}");
            }
        }
        for n in 0..=8 {
            let mut counts = vec![0u64; n + 1];
            for p in permutations(n) {
                counts[cycles(&p)] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(stirling1_unsigned(n, k), BigInt::from(*c), "<{n} {k}>");
            }
        }
    }

    #[test]
    fn alternating_power_sum_examples() {
        assert_eq!(alternating_power_sum(3, 2), BigInt::zero());
        assert_eq!(alternating_power_sum(3, 3), BigInt::from(6));
        assert_eq!(alternating_power_sum(2, 2), BigInt::from(2));
        assert_eq!(alternating_power_sum(0, 0), BigInt::one());
    }

    #[test]
    fn alternating_power_sum_identity() {
        for n in 0..=25 {
            for m in 0..=25 {
                assert_eq!(alternating_power_sum(n, m), factorial(n) * stirling2(m, n));
            }
        }
    }

    #[test]
    fn orthogonality() {
        for i in 0..=20 {
            for k in 0..=20 {
                let s: BigInt = (0..=i).map(|j| stirling1_signed(i, j) * stirling2(j, k)).sum();
                assert_eq!(s, if i == k { BigInt::one() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn memo_is_per_thread_and_consistent() {
        let here = stirling2(15, 6);
        let there = std::thread::spawn(|| stirling2(15, 6)).join().unwrap();
        assert_eq!(here, there);
        // querying a small entry after a large one must not disturb the table
        assert_eq!(stirling2(3, 2), BigInt::from(3));
    }
}
