//! Free FIM+-module dimension counting and a sound non-freeness certifier.
//!
//! FIM+ is the category of finite sets with injections decorated by perfect
//! matchings on the complement (Miller–Wilson 2019). The free module on a
//! single generator in degree `d` with multiplicity `g` has dimension
//! `g * C(N, d) * (N - d - 1)!!` at a set of size `N`: choose where the
//! generator's labels go, then perfectly match the remaining points. Degrees
//! of the wrong parity contribute nothing, because an odd complement has no
//! perfect matching.
//!
//! The certifier runs that formula forward: walking the supplied dimension
//! profile degree by degree, every surplus at or below the generation cap is
//! forced to be a new generator, and a *deficit* anywhere is a certificate of
//! non-freeness — a free module containing the forced generators can never be
//! smaller than what they generate, no matter what lives in higher degrees.
//! The verdict is sound but incomplete: `NotFree` is conclusive, while
//! `FreeCompatible` only says no obstruction was found.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::combinatorics::{binomial, matchings_count};
use crate::error::Error as DomainError;

/// Generator multiplicities of a free FIM+-module, degree -> multiplicity.
///
/// Canonical: zero multiplicities are dropped, so two specs are equal exactly
/// when they describe the same module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FimGeneratorSpec {
    gen_dims: BTreeMap<u64, BigUint>,
}

impl FimGeneratorSpec {
    pub fn new(gen_dims: BTreeMap<u64, BigUint>) -> Self {
        Self {
            gen_dims: gen_dims.into_iter().filter(|(_, g)| !g.is_zero()).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn gen_dims(&self) -> &BTreeMap<u64, BigUint> {
        &self.gen_dims
    }

    pub fn is_empty(&self) -> bool {
        self.gen_dims.is_empty()
    }

    fn add(&mut self, degree: u64, mult: BigUint) {
        if !mult.is_zero() {
            self.gen_dims.insert(degree, mult);
        }
    }
}

impl fmt::Display for FimGeneratorSpec {
    /// Canonical `degree:multiplicity` pairs joined by commas, ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, g) in &self.gen_dims {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{d}:{g}")?;
        }
        Ok(())
    }
}

impl FromStr for FimGeneratorSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Self::new(parse_degree_map(s)?))
    }
}

/// Errors from the `degree:dim,...` map grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecParseError {
    #[error("empty entry in degree map (stray comma?)")]
    EmptyEntry,
    #[error("entry {0:?} is missing the ':' separator")]
    MissingColon(String),
    #[error("bad degree in entry {0:?}: expected a decimal integer")]
    BadDegree(String),
    #[error("bad dimension in entry {0:?}: expected a decimal integer")]
    BadDimension(String),
    #[error("degree {0} appears twice")]
    DuplicateDegree(u64),
}

/// Parses a `degree:dim,degree:dim,...` map.
///
/// Degrees are machine integers, dimensions arbitrary-precision naturals;
/// whitespace around entries and around the colon is tolerated. An empty or
/// all-whitespace string is the empty map. Duplicate degrees are rejected so
/// a typo cannot silently drop data.
pub fn parse_degree_map(s: &str) -> Result<BTreeMap<u64, BigUint>, SpecParseError> {
    let mut map = BTreeMap::new();
    if s.trim().is_empty() {
        return Ok(map);
    }
    for raw in s.split(',') {
        let entry = raw.trim();
        if entry.is_empty() {
            return Err(SpecParseError::EmptyEntry);
        }
        let (deg_s, dim_s) = entry
            .split_once(':')
            .ok_or_else(|| SpecParseError::MissingColon(entry.to_string()))?;
        let degree: u64 = deg_s
            .trim()
            .parse()
            .map_err(|_| SpecParseError::BadDegree(entry.to_string()))?;
        let dim_s = dim_s.trim();
        // BigUint::from_str accepts a bare "+"-free digit string only.
        if dim_s.is_empty() || !dim_s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(SpecParseError::BadDimension(entry.to_string()));
        }
        let dim = BigUint::from_str(dim_s).map_err(|_| SpecParseError::BadDimension(entry.to_string()))?;
        if map.insert(degree, dim).is_some() {
            return Err(SpecParseError::DuplicateDegree(degree));
        }
    }
    Ok(map)
}

/// Dimension of the free FIM+-module with the given generators at a set of
/// size `n`: `sum_d g_d * C(n, d) * matchings(n - d)`, where terms with
/// `d > n` or an odd complement vanish.
pub fn free_fim_dim(spec: &FimGeneratorSpec, n: u64) -> BigUint {
    let mut total = BigUint::zero();
    for (&d, g) in spec.gen_dims() {
        if d > n || !(n - d).is_multiple_of(2) {
            continue;
        }
        let m = matchings_count(n - d).expect("complement size is even by construction");
        total += g * binomial(n, d) * m;
    }
    total
}

/// A degree at which the supplied profile is strictly smaller than what its
/// own forced generators would generate: conclusive proof of non-freeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonFreeWitness {
    pub degree: u64,
    /// Dimension the forced generators below `degree` already generate.
    pub required: BigUint,
    /// Dimension the profile claims.
    pub actual: BigUint,
}

/// Outcome of [`certify_not_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreenessVerdict {
    /// No obstruction found; `recovered` is the generator spec that would
    /// realize the profile as a free module (exact at degrees up to the cap).
    FreeCompatible { recovered: FimGeneratorSpec },
    /// The profile cannot be the dimension profile of any free FIM+-module.
    NotFree { witness: NonFreeWitness },
}

/// Tests a dimension profile against freeness, assuming generation in
/// degrees `<= cap`.
///
/// `actual` maps set sizes to claimed dimensions. For each parity that
/// occurs among its keys, every degree of that parity up to `cap` must be
/// present — otherwise the forcing walk has a hole and the answer is
/// [`DomainError::MissingDimension`]. Degrees above the cap are checked but
/// never absorb generators; a surplus there is tolerated (it may simply mean
/// the generation hypothesis was too optimistic), which is what keeps
/// `NotFree` sound without making `FreeCompatible` a claim of freeness.
pub fn certify_not_free(
    actual: &BTreeMap<u64, BigUint>,
    cap: u64,
) -> Result<FreenessVerdict, DomainError> {
    // Completeness of each supplied parity class up to the cap.
    let parities: Vec<u64> = {
        let mut p: Vec<u64> = actual.keys().map(|d| d % 2).collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    let mut missing: Option<u64> = None;
    for parity in parities {
        let mut d = parity;
        while d <= cap {
            if !actual.contains_key(&d) {
                missing = Some(missing.map_or(d, |m| m.min(d)));
            }
            d += 2;
        }
    }
    if let Some(d) = missing {
        return Err(DomainError::MissingDimension(d));
    }

    let mut forced = FimGeneratorSpec::empty();
    for (&d, a) in actual {
        let required = free_fim_dim(&forced, d);
        if required > *a {
            return Ok(FreenessVerdict::NotFree {
                witness: NonFreeWitness {
                    degree: d,
                    required,
                    actual: a.clone(),
                },
            });
        }
        if d <= cap {
            forced.add(d, a - &required);
        }
    }
    Ok(FreenessVerdict::FreeCompatible { recovered: forced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn spec(entries: &[(u64, u64)]) -> FimGeneratorSpec {
        FimGeneratorSpec::new(entries.iter().map(|&(d, g)| (d, BigUint::from(g))).collect())
    }

    fn map(entries: &[(u64, u64)]) -> BTreeMap<u64, BigUint> {
        entries.iter().map(|&(d, g)| (d, BigUint::from(g))).collect()
    }

    /// Independent oracle: count basis elements by explicit enumeration —
    /// subsets of size d for the generator labels, brute-force perfect
    /// matchings on the complement.
    fn free_dim_brute(spec: &FimGeneratorSpec, n: u64) -> BigUint {
        fn matchings_brute(free: &mut Vec<u64>) -> u64 {
            if free.is_empty() {
                return 1;
            }
            let a = free.remove(0);
            let mut total = 0;
            for i in 0..free.len() {
                let b = free.remove(i);
                total += matchings_brute(free);
                free.insert(i, b);
            }
            free.insert(0, a);
            total
        }
        let mut total = BigUint::zero();
        for (&d, g) in spec.gen_dims() {
            if d > n {
                continue;
            }
            for subset in (0..n).combinations(d as usize) {
                let mut complement: Vec<u64> = (0..n).filter(|x| !subset.contains(x)).collect();
                if complement.len().is_multiple_of(2) {
                    total += g * BigUint::from(matchings_brute(&mut complement));
                }
            }
        }
        total
    }

    #[test]
    fn free_dim_worked_examples() {
        assert_eq!(free_fim_dim(&spec(&[(2, 5)]), 4), BigUint::from(30u32));
        assert_eq!(free_fim_dim(&spec(&[(0, 1)]), 6), BigUint::from(15u32));
        // Odd total with an even generator: no perfect matching on the rest.
        assert_eq!(free_fim_dim(&spec(&[(2, 5)]), 5), BigUint::zero());
        assert_eq!(free_fim_dim(&FimGeneratorSpec::empty(), 9), BigUint::zero());
    }

    #[test]
    fn free_dim_matches_enumeration_oracle() {
        let samples = [
            spec(&[(0, 1)]),
            spec(&[(2, 5)]),
            spec(&[(1, 2), (3, 1)]),
            spec(&[(0, 2), (2, 1), (4, 3)]),
        ];
        for s in &samples {
            for n in 0..=8 {
                assert_eq!(free_fim_dim(s, n), free_dim_brute(s, n), "spec {s}, n = {n}");
            }
        }
    }

    #[test]
    fn single_degree_zero_generator_counts_matchings() {
        let one = spec(&[(0, 1)]);
        for n in (0..=20u64).step_by(2) {
            assert_eq!(free_fim_dim(&one, n), matchings_count(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn parse_golden_and_errors() {
        assert_eq!(
            parse_degree_map("0:0,2:5,4:14").unwrap(),
            map(&[(0, 0), (2, 5), (4, 14)])
        );
        assert_eq!(parse_degree_map(" 0 : 1 , 2:3 ").unwrap(), map(&[(0, 1), (2, 3)]));
        assert_eq!(parse_degree_map("").unwrap(), BTreeMap::new());
        assert_eq!(parse_degree_map("  ").unwrap(), BTreeMap::new());
        // Dimensions larger than u64 parse exactly.
        let big = parse_degree_map("3:184756184756184756184756").unwrap();
        assert_eq!(
            big[&3],
            BigUint::from_str("184756184756184756184756").unwrap()
        );

        assert_eq!(
            parse_degree_map("1:2,1:3"),
            Err(SpecParseError::DuplicateDegree(1))
        );
        assert!(matches!(parse_degree_map("a:b"), Err(SpecParseError::BadDegree(_))));
        assert!(matches!(parse_degree_map("7"), Err(SpecParseError::MissingColon(_))));
        assert!(matches!(parse_degree_map("1:"), Err(SpecParseError::BadDimension(_))));
        assert!(matches!(parse_degree_map(":2"), Err(SpecParseError::BadDegree(_))));
        assert!(matches!(parse_degree_map("1:2,,3:4"), Err(SpecParseError::EmptyEntry)));
        assert!(matches!(parse_degree_map("-1:2"), Err(SpecParseError::BadDegree(_))));
        assert!(matches!(parse_degree_map("2:-5"), Err(SpecParseError::BadDimension(_))));
        assert!(matches!(parse_degree_map("2:+5"), Err(SpecParseError::BadDimension(_))));
    }

    #[test]
    fn display_is_canonical_and_round_trips() {
        let s = spec(&[(2, 5), (0, 1), (4, 0)]);
        assert_eq!(s.to_string(), "0:1,2:5");
        assert_eq!(s.to_string().parse::<FimGeneratorSpec>().unwrap(), s);
        assert_eq!(FimGeneratorSpec::empty().to_string(), "");
    }

    #[test]
    fn certifier_finds_the_secondary_stability_deficit() {
        // Degree-2 part of dimension 5 forces 6 * 5 * 1 = 30 at four points;
        // the actual dimension there is 14.
        let verdict = certify_not_free(&map(&[(0, 0), (2, 5), (4, 14)]), 4).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::NotFree {
                witness: NonFreeWitness {
                    degree: 4,
                    required: BigUint::from(30u32),
                    actual: BigUint::from(14u32),
                }
            }
        );
    }

    #[test]
    fn certifier_tolerates_surplus_above_the_cap() {
        // With generation capped at degree 0, the surpluses at 2, 4, 6 are
        // not absorbed, but they are not deficits either.
        let verdict = certify_not_free(&map(&[(0, 1), (2, 3), (4, 15), (6, 105)]), 0).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::FreeCompatible { recovered: spec(&[(0, 1)]) }
        );
    }

    #[test]
    fn certifier_accepts_the_zero_module() {
        let verdict = certify_not_free(&map(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]), 4).unwrap();
        assert_eq!(
            verdict,
            FreenessVerdict::FreeCompatible { recovered: FimGeneratorSpec::empty() }
        );
        assert_eq!(
            certify_not_free(&BTreeMap::new(), 7).unwrap(),
            FreenessVerdict::FreeCompatible { recovered: FimGeneratorSpec::empty() }
        );
    }

    #[test]
    fn certifier_demands_complete_parity_classes() {
        assert_eq!(
            certify_not_free(&map(&[(0, 1), (4, 2)]), 4),
            Err(DomainError::MissingDimension(2))
        );
        assert_eq!(
            certify_not_free(&map(&[(1, 1)]), 3),
            Err(DomainError::MissingDimension(3))
        );
        // Both parities present: the even class is missing degree 2 first.
        assert_eq!(
            certify_not_free(&map(&[(1, 1), (0, 1)]), 3),
            Err(DomainError::MissingDimension(2))
        );
        // Gaps above the cap are fine; no generator could sit there anyway.
        assert!(certify_not_free(&map(&[(0, 1), (2, 1), (6, 15)]), 2).is_ok());
    }

    fn arb_spec() -> impl Strategy<Value = FimGeneratorSpec> {
        prop::collection::btree_map(0u64..7, 1u64..10, 0..4)
            .prop_map(|m| FimGeneratorSpec::new(m.into_iter().map(|(d, g)| (d, BigUint::from(g))).collect()))
    }

    proptest! {
        /// Round trip: the profile of a free module is certified compatible
        /// and the forcing walk recovers the generators exactly.
        #[test]
        fn certifier_recovers_free_profiles(s in arb_spec()) {
            let cap = s.gen_dims().keys().max().copied().unwrap_or(0);
            let profile: BTreeMap<u64, BigUint> =
                (0..=cap.max(2) + 2).map(|d| (d, free_fim_dim(&s, d))).collect();
            let verdict = certify_not_free(&profile, cap).unwrap();
            prop_assert_eq!(verdict, FreenessVerdict::FreeCompatible { recovered: s });
        }

        /// Soundness bookkeeping: a NotFree witness always shows a strict
        /// deficit, and a FreeCompatible recovery reproduces the profile at
        /// degrees up to the cap and never exceeds it above.
        #[test]
        fn verdicts_are_internally_consistent(
            s in arb_spec(),
            corrupt_degree in 0u64..9,
            delta in 0u64..40,
        ) {
            let cap = s.gen_dims().keys().max().copied().unwrap_or(0);
            let mut profile: BTreeMap<u64, BigUint> =
                (0..=cap.max(2) + 2).map(|d| (d, free_fim_dim(&s, d))).collect();
            if let Some(v) = profile.get_mut(&corrupt_degree) {
                let delta = BigUint::from(delta);
                *v = if *v >= delta { &*v - delta } else { BigUint::zero() };
            }
            match certify_not_free(&profile, cap).unwrap() {
                FreenessVerdict::NotFree { witness } => {
                    prop_assert!(witness.required > witness.actual);
                    prop_assert_eq!(&profile[&witness.degree], &witness.actual);
                }
                FreenessVerdict::FreeCompatible { recovered } => {
                    for (&d, a) in &profile {
                        let have = free_fim_dim(&recovered, d);
                        if d <= cap {
                            prop_assert_eq!(&have, a, "degree {}", d);
                        } else {
                            prop_assert!(have <= *a, "degree {}", d);
                        }
                    }
                }
            }
        }
    }
}
