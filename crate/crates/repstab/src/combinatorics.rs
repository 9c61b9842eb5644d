//! Exact combinatorial primitives: binomial coefficients, factorials, perfect
//! matching counts, derangement numbers, and Stirling numbers of the second
//! kind.
//!
//! Everything returns arbitrary-precision integers so the callers never have
//! to reason about overflow; the inputs themselves are machine-size indices.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;

/// Binomial coefficient `C(n, d)`, zero when `d > n`.
///
/// Computed by the multiplicative formula with exact division at every step,
/// so intermediate values stay integral.
pub fn binomial(n: u64, d: u64) -> BigUint {
    if d > n {
        return BigUint::zero();
    }
    // C(n, d) = C(n, n - d); iterate over the shorter leg.
    let d = d.min(n - d);
    let mut acc = BigUint::one();
    for i in 1..=d {
        acc = acc * BigUint::from(n - d + i) / BigUint::from(i);
    }
    acc
}

/// Factorial `n!`.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Number of perfect matchings on `m` labelled points, `m!/((m/2)! 2^(m/2))`,
/// also known as the double factorial `(m - 1)!!`.
///
/// This is the dimension of the span of perfect matchings, the building block
/// for free FIM+-module dimensions. An odd `m` has no perfect matchings at
/// all; that case is rejected rather than reported as zero so that parity
/// bookkeeping mistakes in callers surface immediately.
pub fn matchings_count(m: u64) -> Result<BigUint, Error> {
    if !m.is_multiple_of(2) {
        return Err(Error::OddMatchingSize(m));
    }
    let half = m / 2;
    let denom = factorial(half) * BigUint::from(2u32).pow(half.try_into().unwrap_or(u32::MAX));
    Ok(factorial(m) / denom)
}

/// Rank of the twisted coefficient system `T_p` on `p` points: the number of
/// derangements of `p` letters, `sum_i (-1)^i p!/i!`.
///
/// Computed by the recurrence `D_p = p D_{p-1} + (-1)^p` with `D_0 = 1`.
/// In particular `t_rank(1) = 0`, which is what makes the `p = 0` column of
/// the arc resolution spectral sequence vanish identically.
pub fn t_rank(p: u64) -> BigUint {
    let mut d = num_bigint::BigInt::one();
    for i in 1..=p {
        d = d * num_bigint::BigInt::from(i)
            + if i % 2 == 0 {
                num_bigint::BigInt::one()
            } else {
                -num_bigint::BigInt::one()
            };
    }
    d.to_biguint().expect("derangement numbers are non-negative")
}

/// Stirling number of the second kind `S(k, d)`: partitions of a `k`-set into
/// `d` non-empty blocks.
///
/// Used by the monomial-to-binomial-basis change `n^k = sum_d S(k, d) d! C(n, d)`,
/// which the test suites use to cross-check polynomial evaluation.
pub fn stirling_second(k: u64, d: u64) -> BigUint {
    if d > k {
        return BigUint::zero();
    }
    let (k, d) = (k as usize, d as usize);
    // dp[j] holds S(i, j); advance i with S(i, j) = j S(i-1, j) + S(i-1, j-1),
    // updating from high j to low so dp[j-1] still belongs to row i-1.
    let mut dp = vec![BigUint::zero(); d + 1];
    dp[0] = BigUint::one();
    for _ in 1..=k {
        for j in (1..=d).rev() {
            dp[j] = BigUint::from(j) * &dp[j] + &dp[j - 1];
        }
        dp[0] = BigUint::zero();
    }
    dp[d].clone()
}
