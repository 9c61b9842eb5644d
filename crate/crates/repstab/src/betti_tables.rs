//! Betti polynomials of ordered configuration spaces of the torus `T` and the
//! once-punctured torus `T°`, for homological degrees `k <= 5`.
//!
//! The torus rows are transcribed constants (Pagaria 2020, Cor. 2.9). The
//! punctured-torus rows are *derived*: the group structure of the torus gives
//! `F_n(T) ~ T x F_{n-1}(T°)` (Cohen 2010, Ex. 2.6), hence
//! `P(F_{n-1}(T°)) = P(F_n(T)) / (1 + t)^2` at the level of Poincaré series,
//! which in table form is an argument shift `n -> n + 1` followed by division
//! by `(1 + t)^2`. The derived rows are checked against independently stored
//! closed forms every time the table is built; a disagreement is reported as
//! [`Error::DerivationMismatch`], never papered over.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::binom_poly::{BinomialPolynomial, PoincareTable};
use crate::combinatorics::binomial;
use crate::error::Error;

/// The two surfaces whose configuration-space Betti tables are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    /// The 2-torus `T = R^2 / Z^2`.
    Torus,
    /// The once-punctured torus `T°`.
    PuncturedTorus,
}

/// Largest homological degree the tables cover.
pub const MAX_DEGREE: u64 = 5;

/// Binomial-basis coefficient rows of `b_k(F_n(T))`, lowest degree first.
///
/// Transcribed from Pagaria 2020, Cor. 2.9 (as collected in the secondary
/// representation stability literature); row `k` lists the coefficients of
/// `C(n, 0), C(n, 1), ...`.
const TORUS_ROWS: [&[i64]; 6] = [
    &[1],                                  // b_0 = 1
    &[0, 2],                               // b_1 = 2n
    &[0, 1, 3, 2],                         // b_2 = 2C(n,3) + 3C(n,2) + n
    &[0, 0, 2, 8, 14],                     // b_3 = 14C(n,4) + 8C(n,3) + 2C(n,2)
    &[0, 0, 0, 5, 33, 74, 32],             // b_4 = 32C(n,6) + 74C(n,5) + 33C(n,4) + 5C(n,3)
    &[0, 0, 0, 0, 18, 154, 490, 427, 63],  // b_5 = 63C(n,8) + 427C(n,7) + 490C(n,6) + 154C(n,5) + 18C(n,4)
];

/// Closed forms of `b_k(F_n(T°))`, stored independently of the derivation as
/// a transcription checksum. The construction in [`punctured_torus_table`]
/// must reproduce these exactly.
const PUNCTURED_ROWS: [&[i64]; 6] = [
    &[1],                               // b_0 = 1
    &[0, 2],                            // b_1 = 2n
    &[0, 0, 5, 2],                      // b_2 = 2C(n,3) + 5C(n,2)
    &[0, 0, 0, 18, 14],                 // b_3 = 14C(n,4) + 18C(n,3)
    &[0, 0, 0, 0, 79, 106, 32],         // b_4 = 32C(n,6) + 106C(n,5) + 79C(n,4)
    &[0, 0, 0, 0, 0, 432, 853, 490, 63], // b_5 = 63C(n,8) + 490C(n,7) + 853C(n,6) + 432C(n,5)
];

fn rows_to_table(rows: &[&[i64]]) -> PoincareTable {
    PoincareTable::from_rows(rows.iter().map(|r| BinomialPolynomial::from_i64(r)).collect())
}

/// The torus Betti table for `k = 0..=5`.
pub fn torus_table() -> &'static PoincareTable {
    static TABLE: OnceLock<PoincareTable> = OnceLock::new();
    TABLE.get_or_init(|| rows_to_table(&TORUS_ROWS))
}

/// The punctured-torus Betti table for `k = 0..=5`, derived by
/// shift-then-divide and verified against the stored closed forms.
pub fn punctured_torus_table() -> Result<&'static PoincareTable, Error> {
    static TABLE: OnceLock<Result<PoincareTable, Error>> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let derived = torus_table().shift_rows().divide_by_one_plus_t_squared();
            let stored = rows_to_table(&PUNCTURED_ROWS);
            for k in 0..=stored.max_k() {
                if derived.row(k) != stored.row(k) {
                    return Err(Error::DerivationMismatch { k: k as u64 });
                }
            }
            Ok(derived)
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// `b_k(F_n(T))` as a binomial-basis polynomial in `n`.
pub fn torus_betti(k: u64) -> Result<BinomialPolynomial, Error> {
    if k > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(k));
    }
    Ok(torus_table().row(k as usize).expect("tabulated row").clone())
}

/// `b_k(F_n(T°))` as a binomial-basis polynomial in `n`.
pub fn punctured_torus_betti(k: u64) -> Result<BinomialPolynomial, Error> {
    if k > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(k));
    }
    Ok(punctured_torus_table()?
        .row(k as usize)
        .expect("tabulated row")
        .clone())
}

/// Betti polynomial of the requested surface.
pub fn betti(surface: Surface, k: u64) -> Result<BinomialPolynomial, Error> {
    match surface {
        Surface::Torus => torus_betti(k),
        Surface::PuncturedTorus => punctured_torus_betti(k),
    }
}

/// Degrees of `b_k` for `k = 0..=5` on the requested surface.
///
/// The degree profile is the same for both surfaces, `(0, 1, 3, 4, 6, 8)`:
/// the shift and the division by `(1 + t)^2` are both unitriangular in the
/// top coefficient, so they cannot change a row's degree. That agreement is
/// asserted here on every call, whichever surface was asked for.
pub fn degree_report(surface: Surface) -> Result<Vec<(u64, u64)>, Error> {
    let torus = torus_table();
    let punctured = punctured_torus_table()?;
    let mut out = Vec::with_capacity(torus.max_k() + 1);
    for k in 0..=torus.max_k() {
        let dt = torus.row(k).unwrap().degree().expect("non-zero Betti row") as u64;
        let dp = punctured.row(k).unwrap().degree().expect("non-zero Betti row") as u64;
        assert_eq!(dt, dp, "degree profiles of the two surfaces diverged at k = {k}");
        let degree = match surface {
            Surface::Torus => dt,
            Surface::PuncturedTorus => dp,
        };
        out.push((k as u64, degree));
    }
    Ok(out)
}

/// One row of [`leading_coefficient_bound_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingBound {
    pub k: u64,
    /// Leading binomial-basis coefficient `c_k` of `b_k`.
    pub leading: BigInt,
    /// The lower bound `C(2k - 3, k - 3)` from Pagaria 2020, Cor. 2.9.
    pub bound: BigInt,
    pub holds: bool,
}

/// Checks `c_k >= C(2k - 3, k - 3)` for `k = 3, 4, 5` on the torus rows.
///
/// The leading coefficients survive the passage to the punctured torus
/// unchanged, so the same bound holds for both tables.
pub fn leading_coefficient_bound_check() -> Vec<LeadingBound> {
    (3..=MAX_DEGREE)
        .map(|k| {
            let leading = torus_table()
                .row(k as usize)
                .unwrap()
                .leading_coefficient()
                .expect("non-zero Betti row")
                .clone();
            let bound = BigInt::from(binomial(2 * k - 3, k - 3));
            let holds = leading >= bound;
            LeadingBound { k, leading, bound, holds }
        })
        .collect()
}
