//! Dimension data for the `E^2` page of the arc resolution spectral sequence
//! of `F_n(T°)`, and the vanishing reports that feed the secondary-stability
//! generation arguments.
//!
//! For a noncompact surface the `E^2` entries decompose as induced modules
//! (Miller–Wilson 2019): the dimension of `E^2_{p,q}(n)` is
//!
//! ```text
//! C(n, p + 1) * rank(T_{p+1}) * (number of degree-(n-p-1) generators of H_q)
//! ```
//!
//! — choose which points ride the arc component, tensor the twisted
//! coefficient system `T_{p+1}` (of rank the derangement number) with the
//! FI-generator space in the remaining points. The last factor comes from
//! [`crate::fi_decomp`] and may be `Unknown` outside the tabulated range;
//! that answer is propagated honestly and *poisons* any report that would
//! need it, unless a structural zero multiplies it away first.
//!
//! Everything lives in the augmented range `p >= -1`; the `p = -1` column is
//! where the secondary-stability sequences `W_i` sit, and the `p = 0` column
//! vanishes identically because `T_1` has rank zero.

use num_traits::Zero as _;

use crate::combinatorics::{binomial, t_rank};
use crate::error::Error;
use crate::fi_decomp::{fi_generator_dim, DimAnswer};

/// Default homological height for page assembly and reports.
pub const DEFAULT_Q_MAX: u64 = 5;

/// Dimension of `E^2_{p,q}[T°](n)`.
///
/// Structural zeros (empty index set, `rank(T_1) = 0`, or the FI degree
/// bound) give [`DimAnswer::Zero`] even when another factor is unknown;
/// otherwise an unknown factor makes the whole entry `Unknown`. Entries
/// left of the augmentation column (`p < -1`) are zero.
pub fn e2_entry_dim(p: i64, q: u64, n: u64) -> DimAnswer {
    if p < -1 {
        return DimAnswer::Zero;
    }
    let col = (p + 1) as u64;
    if col > n {
        return DimAnswer::Zero;
    }
    let t = t_rank(col);
    if t.is_zero() {
        return DimAnswer::Zero;
    }
    match fi_generator_dim(q, n - col) {
        DimAnswer::Zero => DimAnswer::Zero,
        DimAnswer::Unknown => DimAnswer::Unknown,
        DimAnswer::Exact(g) => DimAnswer::Exact(binomial(n, col) * t * g),
    }
}

/// Whether `E^infty_{p,q}(n)` vanishes by the stable range of the arc
/// resolution: `p + q + 2 <= n`.
pub fn vanishes_at_infinity(p: i64, q: u64, n: u64) -> bool {
    p + q as i64 + 2 <= n as i64
}

/// The `E^2` page over the rectangle `-1 <= p <= n - 1`, `0 <= q <= q_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E2Page {
    n: u64,
    q_max: u64,
    /// `entries[q][p + 1]`.
    entries: Vec<Vec<DimAnswer>>,
}

impl E2Page {
    pub fn new(n: u64, q_max: u64) -> Self {
        let entries = (0..=q_max)
            .map(|q| (-1..=n as i64 - 1).map(|p| e2_entry_dim(p, q, n)).collect())
            .collect();
        Self { n, q_max, entries }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q_max(&self) -> u64 {
        self.q_max
    }

    /// Entry at `(p, q)`, if inside the assembled rectangle.
    pub fn entry(&self, p: i64, q: u64) -> Option<&DimAnswer> {
        if p < -1 || p + 1 > self.n as i64 {
            return None;
        }
        self.entries.get(q as usize)?.get((p + 1) as usize)
    }

    /// All cells in a fixed order — top row (`q = q_max`) first, `p`
    /// ascending inside a row, matching how the page is usually drawn.
    pub fn cells(&self) -> impl Iterator<Item = (i64, u64, &DimAnswer, bool)> + '_ {
        (0..=self.q_max).rev().flat_map(move |q| {
            self.entries[q as usize].iter().enumerate().map(move |(i, a)| {
                let p = i as i64 - 1;
                (p, q, a, vanishes_at_infinity(p, q, self.n))
            })
        })
    }
}

/// Cells in the rectangle `-1 <= p <= n - 1`, `0 <= q <= q_max` whose
/// `E^infty` entries vanish by the stable range; `p` ascending, then `q`.
pub fn vanishing_line_report(n: u64, q_max: u64) -> Vec<(i64, u64)> {
    let mut out = Vec::new();
    for p in -1..=n as i64 - 1 {
        for q in 0..=q_max {
            if vanishes_at_infinity(p, q, n) {
                out.push((p, q));
            }
        }
    }
    out
}

/// One verified cell of [`diagonal_vanishing_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCell {
    pub q: u64,
    pub p: i64,
    pub answer: DimAnswer,
}

/// Checks the slope `-1` diagonal through `(p, q) = ((n + 2)/2, 0)`:
/// every `E^2` entry with `p + q = (n + 2)/2`, `0 <= q <= (n - 2)/2` must be
/// structurally zero.
///
/// This is the differential-free half of the argument that `W_2(n)` is
/// generated from `W_2(n - 2)` for even `n >= 8`: with the diagonal dead,
/// only `d^2` can reach the `(-1, (n + 2)/2)` cell. The zeros here come from
/// the FI degree bound, which holds for every homological degree — but if
/// an entry were merely `Unknown` the report refuses to certify anything
/// and returns [`Error::UnresolvedEntry`] instead of assuming vanishing.
pub fn diagonal_vanishing_report(n: u64) -> Result<Vec<DiagonalCell>, Error> {
    if n < 8 || !n.is_multiple_of(2) {
        return Err(Error::DiagonalRange { n });
    }
    let mut out = Vec::new();
    for q in 0..=(n - 2) / 2 {
        let p = ((n + 2) / 2) as i64 - q as i64;
        let answer = e2_entry_dim(p, q, n);
        if answer.is_unknown() {
            return Err(Error::UnresolvedEntry { p, q, n });
        }
        out.push(DiagonalCell { q, p, answer });
    }
    Ok(out)
}

/// The three `E^2[T°](3)` cells in the argument that `W_1` is generated in
/// degree 1, with the geometric input recorded as an explicit assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W1Report {
    pub n: u64,
    /// `(-1, 2)`: the cell carrying `W_1(3)` itself.
    pub target: ((i64, u64), DimAnswer),
    /// `(1, 1)`: the source of the `d^2` that must hit the target.
    pub d2_source: ((i64, u64), DimAnswer),
    /// `(2, 0)`: the only other cell that could map to the target, via `d^3`.
    pub d3_source: ((i64, u64), DimAnswer),
    /// The target lies in the stable range (`-1 + 2 + 2 <= 3`), so it must
    /// die by `E^infty`.
    pub target_vanishes_at_infinity: bool,
    /// External geometric input consumed, not derived, by this report.
    pub assumption: &'static str,
}

/// Assembles the `W_1` generation report at `n = 3`.
pub fn w1_generation_report() -> W1Report {
    let n = 3;
    let cell = |p: i64, q: u64| ((p, q), e2_entry_dim(p, q, n));
    W1Report {
        n,
        target: cell(-1, 2),
        d2_source: cell(1, 1),
        d3_source: cell(2, 0),
        target_vanishes_at_infinity: vanishes_at_infinity(-1, 2, n),
        assumption: "the bullseye class (two particles orbiting a third) bounds an embedded \
                     3-manifold in F_3 of the punctured torus, so d^3 vanishes on the (2, 0) \
                     cell and d^2 from (1, 1) must surject onto (-1, 2); this geometric step \
                     is an external input (cf. Miller-Wilson 2019), recorded here, not derived",
    }
}
