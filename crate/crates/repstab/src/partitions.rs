//! Integer partitions, irreducible symmetric-group dimensions, and the
//! family `D_{2n}` of constituents of the signed matching representation.
//!
//! Diagrams are drawn in English orientation: rows weakly decrease from top
//! to bottom, the arm of a cell extends to the right, the leg extends down.
//!
//! The span of perfect matchings on `2n` points, twisted by the sign of the
//! induced block permutation, decomposes multiplicity-free into the
//! irreducibles `V_lambda` with `lambda` self-paired in a precise way: in
//! Frobenius coordinates `(a_1, ..., a_r | b_1, ..., b_r)` the members are
//! exactly the partitions with `a_i = b_i + 1` for every `i`
//! (Miller–Wilson 2019). [`d_family`] enumerates them with their hook-length
//! dimensions; the acceptance tests calibrate the criterion against a
//! character-theoretic oracle for `2n <= 8`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::factorial;
use crate::error::Error;

/// Default cap on partition sizes accepted by the enumeration entry points.
/// The command-line front end lets `REPSTAB_CAP` override it.
pub const DEFAULT_CAP: u64 = 30;

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, panicking if the parts are not weakly decreasing
    /// and positive — malformed shapes are programmer errors, not data.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Self { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u64)
            .collect();
        Self { parts }
    }

    /// Number of cells on the main diagonal, the Frobenius rank.
    pub fn diagonal_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i as u64)
            .count()
    }

    /// Frobenius coordinates `(arms | legs)`: for diagonal cell `i`, the arm
    /// counts cells strictly to the right, the leg cells strictly below.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.diagonal_rank();
        let arms = (0..r).map(|i| self.parts[i] - i as u64 - 1).collect();
        let legs = (0..r).map(|i| conj.parts[i] - i as u64 - 1).collect();
        FrobeniusCoords { arms, legs }
    }
}

impl fmt::Display for Partition {
    /// Renders as `(4,1,1)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Frobenius coordinates of a partition: strictly decreasing arm lengths and
/// leg lengths of the diagonal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub arms: Vec<u64>,
    pub legs: Vec<u64>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Total number of cells: each diagonal cell contributes its arm, its
    /// leg, and itself.
    pub fn size(&self) -> u64 {
        self.arms.iter().sum::<u64>() + self.legs.iter().sum::<u64>() + self.rank() as u64
    }

    /// Rebuilds the partition. Rows `i < rank` are `a_i + i + 1`; the rows
    /// below the diagonal block are read off the legs.
    pub fn to_partition(&self) -> Partition {
        assert_eq!(self.arms.len(), self.legs.len(), "rank mismatch");
        assert!(
            self.arms.windows(2).all(|w| w[0] > w[1])
                && self.legs.windows(2).all(|w| w[0] > w[1]),
            "Frobenius coordinates must be strictly decreasing"
        );
        let r = self.rank();
        let mut parts: Vec<u64> = (0..r).map(|i| self.arms[i] + i as u64 + 1).collect();
        let depth = self.legs.first().map_or(0, |&b| b as usize);
        for i in r..=r.saturating_add(depth) {
            let row = self
                .legs
                .iter()
                .enumerate()
                .filter(|(j, &b)| b as usize + j >= i)
                .count() as u64;
            if row == 0 {
                break;
            }
            parts.push(row);
        }
        Partition::new(parts)
    }
}

/// All partitions of `m` in reverse-lexicographic order, e.g.
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for `m = 4`.
pub fn enumerate_partitions(m: u64) -> Result<Vec<Partition>, Error> {
    enumerate_partitions_with_cap(m, DEFAULT_CAP)
}

/// [`enumerate_partitions`] with an explicit size cap.
pub fn enumerate_partitions_with_cap(m: u64, cap: u64) -> Result<Vec<Partition>, Error> {
    if m > cap {
        return Err(Error::CapExceeded { size: m, cap });
    }
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m.max(1), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Dimension of the irreducible `S_m`-representation `V_lambda` by the
/// hook length formula: `m! / prod hooks`.
pub fn irreducible_dim(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hook_product = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = row - j + conj.parts()[j as usize] - i as u64 - 1;
            hook_product *= BigUint::from(hook);
        }
    }
    factorial(lambda.size()) / hook_product
}

/// Whether `lambda` indexes a constituent of the signed matching
/// representation of `S_{2n}`: every Frobenius arm exceeds its leg by
/// exactly one. Only defined for even sizes.
pub fn in_d_family(lambda: &Partition) -> Result<bool, Error> {
    let size = lambda.size();
    if !size.is_multiple_of(2) {
        return Err(Error::OddPartitionSize(size));
    }
    let fr = lambda.frobenius();
    Ok(fr.arms.iter().zip(&fr.legs).all(|(&a, &b)| a == b + 1))
}

/// The family `D_{2n}` with hook-length dimensions, in the enumeration
/// order of [`enumerate_partitions`].
pub fn d_family(n2: u64) -> Result<Vec<(Partition, BigUint)>, Error> {
    d_family_with_cap(n2, DEFAULT_CAP)
}

/// [`d_family`] with an explicit size cap.
pub fn d_family_with_cap(n2: u64, cap: u64) -> Result<Vec<(Partition, BigUint)>, Error> {
    if !n2.is_multiple_of(2) {
        return Err(Error::OddPartitionSize(n2));
    }
    let mut out = Vec::new();
    for lambda in enumerate_partitions_with_cap(n2, cap)? {
        if in_d_family(&lambda)? {
            let dim = irreducible_dim(&lambda);
            out.push((lambda, dim));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::matchings_count;
    use num_traits::Zero;
    use std::collections::HashMap;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent oracle: partition counts from Euler's pentagonal-number
    /// recurrence, no enumeration involved.
    fn partition_counts_pentagonal(up_to: usize) -> Vec<i64> {
        let mut counts = vec![0i64; up_to + 1];
        counts[0] = 1;
        for m in 1..=up_to {
            let mut acc = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 as usize > m && g2 as usize > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 as usize <= m {
                    acc += sign * counts[m - g1 as usize];
                }
                if g2 as usize <= m {
                    acc += sign * counts[m - g2 as usize];
                }
                k += 1;
            }
            counts[m] = acc;
        }
        counts
    }

    /// Independent oracle: number of standard Young tableaux by the
    /// remove-a-corner recursion, memoized on the shape.
    fn syt_count(parts: &[u64], memo: &mut HashMap<Vec<u64>, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            let removable = parts[i] > 0 && (i + 1 == parts.len() || parts[i] > parts[i + 1]);
            if removable {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                if smaller[i] == 0 {
                    smaller.remove(i);
                }
                total += syt_count(&smaller, memo);
            }
        }
        memo.insert(parts.to_vec(), total.clone());
        total
    }

    #[test]
    fn enumeration_is_reverse_lexicographic() {
        let got: Vec<String> = enumerate_partitions(4)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        let oracle = partition_counts_pentagonal(30);
        for m in 0..=30u64 {
            assert_eq!(
                enumerate_partitions(m).unwrap().len() as i64,
                oracle[m as usize],
                "p({m})"
            );
        }
        assert_eq!(oracle[10], 42);
    }

    #[test]
    fn enumeration_respects_the_cap() {
        assert_eq!(
            enumerate_partitions(31),
            Err(Error::CapExceeded { size: 31, cap: 30 })
        );
        assert!(enumerate_partitions_with_cap(31, 31).is_ok());
        assert_eq!(
            d_family_with_cap(40, 16),
            Err(Error::CapExceeded { size: 40, cap: 16 })
        );
    }

    #[test]
    fn hook_length_dims_match_known_values() {
        assert_eq!(irreducible_dim(&p(&[3, 1])), BigUint::from(3u32));
        assert_eq!(irreducible_dim(&p(&[4, 1, 1])), BigUint::from(10u32));
        assert_eq!(irreducible_dim(&p(&[3, 3])), BigUint::from(5u32));
        assert_eq!(irreducible_dim(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(irreducible_dim(&p(&[7])), BigUint::one());
        assert_eq!(irreducible_dim(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn hook_length_dims_match_tableau_recursion() {
        let mut memo = HashMap::new();
        for m in 0..=10u64 {
            for lambda in enumerate_partitions(m).unwrap() {
                assert_eq!(
                    irreducible_dim(&lambda),
                    syt_count(lambda.parts(), &mut memo),
                    "dim of {lambda}"
                );
            }
        }
    }

    #[test]
    fn rsk_identity_sums_squares_to_factorial() {
        for m in 0..=12u64 {
            let total: BigUint = enumerate_partitions(m)
                .unwrap()
                .iter()
                .map(|l| {
                    let d = irreducible_dim(l);
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(m), "m = {m}");
        }
    }

    #[test]
    fn frobenius_coordinates_worked_example() {
        let fr = p(&[4, 3, 1]).frobenius();
        assert_eq!(fr.arms, vec![3, 1]);
        assert_eq!(fr.legs, vec![2, 0]);
        assert_eq!(fr.size(), 8);
        assert_eq!(Partition::empty().frobenius().rank(), 0);
    }

    #[test]
    fn frobenius_round_trips_for_all_small_partitions() {
        for m in 0..=20u64 {
            for lambda in enumerate_partitions(m).unwrap() {
                let fr = lambda.frobenius();
                assert_eq!(fr.size(), m, "size via coordinates of {lambda}");
                assert_eq!(fr.to_partition(), lambda, "round trip of {lambda}");
            }
        }
    }

    #[test]
    fn membership_needs_even_size() {
        assert_eq!(in_d_family(&p(&[3])), Err(Error::OddPartitionSize(3)));
        assert_eq!(d_family(7), Err(Error::OddPartitionSize(7)));
    }

    #[test]
    fn d_family_small_tables() {
        let show = |n2: u64| -> Vec<(String, u64)> {
            d_family(n2)
                .unwrap()
                .iter()
                .map(|(l, d)| (l.to_string(), u64::try_from(d).unwrap()))
                .collect()
        };
        assert_eq!(show(0), vec![("()".to_string(), 1)]);
        assert_eq!(show(2), vec![("(2)".to_string(), 1)]);
        assert_eq!(show(4), vec![("(3,1)".to_string(), 3)]);
        assert_eq!(
            show(6),
            vec![("(4,1,1)".to_string(), 10), ("(3,3)".to_string(), 5)]
        );
        assert_eq!(
            show(8),
            vec![("(5,1,1,1)".to_string(), 35), ("(4,3,1)".to_string(), 70)]
        );
    }

    #[test]
    fn d_family_dims_sum_to_matching_counts() {
        // dim of the signed matching representation = (2n - 1)!!, and the
        // decomposition is multiplicity-free.
        for n2 in (0..=16u64).step_by(2) {
            let total: BigUint = d_family(n2).unwrap().iter().map(|(_, d)| d.clone()).sum();
            assert_eq!(total, matchings_count(n2).unwrap(), "2n = {n2}");
        }
    }

    #[test]
    fn d_family_members_have_arm_leg_offset_one() {
        for n2 in (0..=16u64).step_by(2) {
            for (lambda, _) in d_family(n2).unwrap() {
                let fr = lambda.frobenius();
                for (a, b) in fr.arms.iter().zip(&fr.legs) {
                    assert_eq!(*a, b + 1, "coordinates of {lambda}");
                }
            }
        }
    }
}
