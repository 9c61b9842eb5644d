//! End-to-end consistency battery.
//!
//! Every headline identity the crate is supposed to certify is re-run here
//! from scratch against frozen expected values: the derived punctured-torus
//! table, the Poincaré round trip, the degree and leading-coefficient
//! profile, the non-freeness certificate, the signed-matching families, the
//! spectral-sequence vanishing sweeps, the secondary generator profiles, and
//! the algebraic property sweeps behind them. The `selfcheck` CLI subcommand
//! prints one line per check and exits non-zero if any fails; the
//! integration test suite runs the same battery plus the independent
//! character-theoretic oracles that live in test code.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arc_ss;
use crate::betti_tables;
use crate::binom_poly::BinomialPolynomial;
use crate::combinatorics::{binomial, matchings_count, t_rank};
use crate::fi_decomp::{secondary_generators, DimAnswer};
use crate::fim_plus::{certify_not_free, free_fim_dim, FimGeneratorSpec, FreenessVerdict};
use crate::partitions;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

type Check = fn() -> Result<(), String>;

/// Runs the whole battery in a fixed order.
pub fn run_all() -> Vec<CheckResult> {
    let checks: [(&'static str, Check); 8] = [
        ("betti-derivation", check_betti_derivation),
        ("poincare-round-trip", check_poincare_round_trip),
        ("degree-leading-profile", check_degree_leading_profile),
        ("nonfree-certificate", check_nonfree_certificate),
        ("signed-matching-family", check_signed_matching_family),
        ("spectral-vanishing", check_spectral_vanishing),
        ("secondary-profiles", check_secondary_profiles),
        ("property-sweeps", check_property_sweeps),
    ];
    checks
        .into_iter()
        .map(|(name, f)| CheckResult { name, outcome: f() })
        .collect()
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// The derived punctured-torus rows, compared against literal coefficient
/// vectors (independent of the checksum constants inside `betti_tables`).
fn check_betti_derivation() -> Result<(), String> {
    let expected: [&[i64]; 6] = [
        &[1],
        &[0, 2],
        &[0, 0, 5, 2],
        &[0, 0, 0, 18, 14],
        &[0, 0, 0, 0, 79, 106, 32],
        &[0, 0, 0, 0, 0, 432, 853, 490, 63],
    ];
    let derived = betti_tables::torus_table()
        .shift_rows()
        .divide_by_one_plus_t_squared();
    for (k, row) in expected.iter().enumerate() {
        let want = BinomialPolynomial::from_i64(row);
        let got = derived.row(k).ok_or_else(|| format!("missing row {k}"))?;
        ensure(got == &want, format!("row {k}: derived {got}, expected {want}"))?;
    }
    Ok(())
}

/// Multiplying the punctured table by (1 + t)^2 reproduces the shifted torus
/// rows 0..=3 exactly.
fn check_poincare_round_trip() -> Result<(), String> {
    let punctured = betti_tables::punctured_torus_table().map_err(|e| e.to_string())?;
    let product = punctured.multiply_by_one_plus_t_squared();
    let shifted = betti_tables::torus_table().shift_rows();
    for k in 0..=3usize {
        let got = product.row(k).unwrap();
        let want = shifted.row(k).unwrap();
        ensure(
            got == want,
            format!("product row {k} is {got}, shifted torus row is {want}"),
        )?;
        ensure(product.is_row_complete(k), format!("product row {k} not trusted"))?;
    }
    Ok(())
}

/// Degrees 0, 1, 3, 4, 6, 8; leading coefficients 1, 2, 2, 14, 32, 63; and
/// the growth bound c_k >= C(2k - 3, k - 3) for k = 3, 4, 5.
fn check_degree_leading_profile() -> Result<(), String> {
    let degrees = betti_tables::degree_report(betti_tables::Surface::PuncturedTorus)
        .map_err(|e| e.to_string())?;
    ensure(
        degrees == vec![(0, 0), (1, 1), (2, 3), (3, 4), (4, 6), (5, 8)],
        format!("degree profile {degrees:?}"),
    )?;
    let leading: Vec<BigInt> = (0..=5)
        .map(|k| {
            betti_tables::punctured_torus_betti(k)
                .expect("tabulated")
                .leading_coefficient()
                .cloned()
                .unwrap_or_else(BigInt::zero)
        })
        .collect();
    let want: Vec<BigInt> = [1, 2, 2, 14, 32, 63].iter().map(|&v| BigInt::from(v)).collect();
    ensure(leading == want, format!("leading coefficients {leading:?}"))?;
    for check in betti_tables::leading_coefficient_bound_check() {
        ensure(
            check.holds,
            format!("bound fails at k = {}: {} < {}", check.k, check.leading, check.bound),
        )?;
    }
    Ok(())
}

/// The profile (0, 5, 14) at degrees (0, 2, 4) with generation capped at 4
/// is certified non-free with witness 30 > 14 at degree 4.
fn check_nonfree_certificate() -> Result<(), String> {
    let actual = [(0u64, 0u64), (2, 5), (4, 14)]
        .into_iter()
        .map(|(d, v)| (d, BigUint::from(v)))
        .collect();
    match certify_not_free(&actual, 4).map_err(|e| e.to_string())? {
        FreenessVerdict::NotFree { witness } => {
            ensure(
                witness.degree == 4
                    && witness.required == BigUint::from(30u32)
                    && witness.actual == BigUint::from(14u32),
                format!(
                    "witness (degree {}, required {}, actual {})",
                    witness.degree, witness.required, witness.actual
                ),
            )
        }
        FreenessVerdict::FreeCompatible { .. } => Err("verdict was FreeCompatible".into()),
    }
}

/// D_{2n} for 2n <= 8 matches the frozen family tables, and the dimension
/// sums equal (2n - 1)!! through 2n = 16.
fn check_signed_matching_family() -> Result<(), String> {
    type FamilyRow = &'static [(&'static [u64], u64)];
    let frozen: [(u64, FamilyRow); 4] = [
        (2, &[(&[2], 1)]),
        (4, &[(&[3, 1], 3)]),
        (6, &[(&[4, 1, 1], 10), (&[3, 3], 5)]),
        (8, &[(&[5, 1, 1, 1], 35), (&[4, 3, 1], 70)]),
    ];
    for (n2, want) in frozen {
        let got = partitions::d_family(n2).map_err(|e| e.to_string())?;
        ensure(got.len() == want.len(), format!("D_{n2} has {} members", got.len()))?;
        for ((lambda, dim), (parts, wdim)) in got.iter().zip(want) {
            ensure(
                lambda.parts() == *parts && dim == &BigUint::from(*wdim),
                format!("D_{n2} member {lambda} of dim {dim}"),
            )?;
        }
    }
    let sums: [u64; 8] = [1, 3, 15, 105, 945, 10_395, 135_135, 2_027_025];
    for (i, want) in sums.iter().enumerate() {
        let n2 = 2 * (i as u64 + 1);
        let total: BigUint = partitions::d_family(n2)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|(_, d)| d)
            .sum();
        ensure(
            total == BigUint::from(*want),
            format!("sum over D_{n2} is {total}, want {want}"),
        )?;
        ensure(
            total == matchings_count(n2).expect("even"),
            format!("sum over D_{n2} disagrees with the matching count"),
        )?;
    }
    // Column-orthogonality style sanity on the full S_m dimension data.
    for m in 0..=12u64 {
        let total: BigUint = partitions::enumerate_partitions(m)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|l| {
                let d = partitions::irreducible_dim(l);
                &d * &d
            })
            .sum();
        ensure(
            total == crate::combinatorics::factorial(m),
            format!("sum of squared dims at m = {m} is {total}"),
        )?;
    }
    Ok(())
}

/// The p = 0 column, the slope -1 diagonals for even 8 <= n <= 40, and the
/// two n = 6 obstruction cells all vanish — with no report leaning on an
/// Unknown entry.
fn check_spectral_vanishing() -> Result<(), String> {
    for n in 0..=30u64 {
        for q in 0..=8u64 {
            ensure(
                arc_ss::e2_entry_dim(0, q, n) == DimAnswer::Zero,
                format!("p = 0 column entry at (q = {q}, n = {n})"),
            )?;
        }
    }
    for n in (8..=40u64).step_by(2) {
        let cells = arc_ss::diagonal_vanishing_report(n).map_err(|e| e.to_string())?;
        for cell in cells {
            ensure(
                cell.answer == DimAnswer::Zero,
                format!("diagonal cell ({}, {}) at n = {n} is {:?}", cell.p, cell.q, cell.answer),
            )?;
        }
    }
    for (p, q) in [(3i64, 1u64), (4, 0)] {
        ensure(
            arc_ss::e2_entry_dim(p, q, 6) == DimAnswer::Zero,
            format!("n = 6 cell ({p}, {q})"),
        )?;
    }
    Ok(())
}

/// W_0 = (1, 0, 0, ...), W_1 = (2, 2) at n = 1, 3 and zero at higher odd n,
/// W_2 = (5, 14, 32, 63) at n = 2, 4, 6, 8 and zero at odd n.
fn check_secondary_profiles() -> Result<(), String> {
    let expect_exact = |i: u64, n: u64, v: u64| -> Result<(), String> {
        ensure(
            secondary_generators(i, n) == DimAnswer::Exact(BigUint::from(v)),
            format!("W_{i}({n}) != {v}"),
        )
    };
    expect_exact(0, 0, 1)?;
    for n in (2..=40u64).step_by(2) {
        ensure(
            secondary_generators(0, n) == DimAnswer::Zero,
            format!("W_0({n}) not zero"),
        )?;
    }
    expect_exact(1, 1, 2)?;
    expect_exact(1, 3, 2)?;
    for n in (5..=41u64).step_by(2) {
        ensure(
            secondary_generators(1, n) == DimAnswer::Zero,
            format!("W_1({n}) not zero"),
        )?;
    }
    for (n, v) in [(2u64, 5u64), (4, 14), (6, 32), (8, 63)] {
        expect_exact(2, n, v)?;
    }
    for n in (1..=21u64).step_by(2) {
        ensure(
            secondary_generators(2, n) == DimAnswer::Zero,
            format!("W_2({n}) not zero"),
        )?;
    }
    Ok(())
}

/// Deterministic sweeps of the algebraic identities the data structures rely
/// on: Pascal, derangement and double-factorial recurrences, shift
/// evaluation, both series round trips, the free-profile round trip, and
/// Frobenius coordinates.
fn check_property_sweeps() -> Result<(), String> {
    // Pascal triangle built by addition, compared entry by entry.
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for n in 0..=64u64 {
        for (d, v) in row.iter().enumerate() {
            ensure(
                &binomial(n, d as u64) == v,
                format!("C({n}, {d}) disagrees with the additive triangle"),
            )?;
        }
        let mut next = vec![BigUint::one()];
        for d in 1..row.len() {
            next.push(&row[d - 1] + &row[d]);
        }
        next.push(BigUint::one());
        row = next;
    }
    for p in 1..=20u64 {
        let sign = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let want = BigInt::from(p) * BigInt::from(t_rank(p - 1)) + sign;
        ensure(
            BigInt::from(t_rank(p)) == want,
            format!("derangement recurrence fails at p = {p}"),
        )?;
    }
    for m in (2..=40u64).step_by(2) {
        ensure(
            matchings_count(m).expect("even")
                == BigUint::from(m - 1) * matchings_count(m - 2).expect("even"),
            format!("double-factorial recurrence fails at m = {m}"),
        )?;
    }
    // Shift evaluation across every tabulated row.
    let punctured = betti_tables::punctured_torus_table().map_err(|e| e.to_string())?;
    for table in [betti_tables::torus_table(), punctured] {
        for (k, poly) in table.rows().iter().enumerate() {
            for n in 0..=25u64 {
                ensure(
                    poly.shift().evaluate(n) == poly.evaluate(n + 1),
                    format!("shift/evaluate mismatch in row {k} at n = {n}"),
                )?;
            }
        }
        // Series round trips on the trusted range.
        let there = table.divide_by_one_plus_t_squared().multiply_by_one_plus_t_squared();
        let back = table.multiply_by_one_plus_t_squared().divide_by_one_plus_t_squared();
        for k in 0..=table.max_k() {
            ensure(
                there.row(k) == table.row(k) && back.row(k) == table.row(k),
                format!("series round trip fails at row {k}"),
            )?;
        }
    }
    // Free-profile round trip for a fixed spread of generator specs.
    let specs: [&[(u64, u64)]; 4] = [&[], &[(0, 1)], &[(2, 5)], &[(1, 2), (2, 1), (4, 3)]];
    for entries in specs {
        let spec = FimGeneratorSpec::new(
            entries.iter().map(|&(d, g)| (d, BigUint::from(g))).collect(),
        );
        let cap = entries.iter().map(|&(d, _)| d).max().unwrap_or(0);
        let profile = (0..=cap + 2).map(|d| (d, free_fim_dim(&spec, d))).collect();
        match certify_not_free(&profile, cap).map_err(|e| e.to_string())? {
            FreenessVerdict::FreeCompatible { recovered } => ensure(
                recovered == spec,
                format!("recovered {recovered} from the profile of {spec}"),
            )?,
            FreenessVerdict::NotFree { .. } => {
                return Err(format!("free profile of {spec} certified non-free"))
            }
        }
    }
    // Frobenius round trip over all partitions of size <= 20.
    for m in 0..=20u64 {
        for lambda in partitions::enumerate_partitions(m).map_err(|e| e.to_string())? {
            let fr = lambda.frobenius();
            ensure(
                fr.size() == m && fr.to_partition() == lambda,
                format!("Frobenius round trip fails for {lambda}"),
            )?;
        }
    }
    Ok(())
}
