//! Lie-type bookkeeping for the algebra `g_N`.
//!
//! `g_N` is `so_{2r+1}` when `N = 2r` (family B), `sp_{2r}` when
//! `N = 2r + 1` with `r >= 2` (family C), and `sl_2` when `N = 3` (treated
//! as family A1, which behaves exactly like C with `r = 1`). Dominant
//! integral weights are stored in fundamental coordinates; the derived
//! bar-partition gives the exponents used by every character determinant.
//!
//! The module also translates between `g_N`-weights decorated with a
//! base-point order `k` and partitions with at most `N` parts, and solves
//! the `|xi| = N(d - N)` bookkeeping for the ambient Grassmannian.

use std::fmt;

use thiserror::Error;

/// Simple-algebra family of `g_N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// `so_{2r+1}`, for even `N = 2r`.
    B,
    /// `sp_{2r}`, for odd `N = 2r + 1` with `r >= 2`.
    C,
    /// `sl_2`, for `N = 3`.
    A1,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::A1 => write!(f, "A1"),
        }
    }
}

/// Validation and bookkeeping errors for `g_N` data.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("N = {0} is not a valid ambient dimension; N must be at least 3")]
    InvalidN(i64),
    #[error(
        "N = 2 is not supported: every 2-dimensional space of polynomials is \
         self-dual, so the count reduces to the ordinary real Schubert count \
         for Gr(2, d) covered by prior work"
    )]
    UnsupportedN2,
    #[error("weight has {got} coordinates but g_{n} has rank {expected}")]
    RankMismatch { n: u32, expected: usize, got: usize },
    #[error("parts are not nonincreasing at position {0}")]
    NotNonincreasing(usize),
    #[error("expected exactly {expected} parts, got {got}")]
    WrongPartCount { expected: usize, got: usize },
    #[error("bar-partition parts {0} and {1} must differ by an even number")]
    BadBarParity(usize, usize),
    #[error("the last bar-partition part must be even for families C and A1")]
    BadBarLastPart,
    #[error(
        "partition breaks the self-duality symmetry at position {i}: \
         difference {left} on the left, {right} mirrored on the right"
    )]
    SymmetryViolation { i: usize, left: u32, right: u32 },
    #[error("total partition size {total} is not divisible by N = {n}; no ambient Grassmannian dimension exists")]
    Indivisible { total: u64, n: u32 },
    #[error("weight transposition requires rank 2, got rank {0}")]
    TransposeRank(usize),
    #[error("at least one ramification point is required")]
    NoPoints,
}

/// The algebra `g_N`: ambient parameter `N`, family, and rank `r`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LieContext {
    n: u32,
    r: usize,
    family: Family,
}

impl LieContext {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Staircase exponents `N + 1 - 2j` for `j = 1, ..., r`: the column
    /// exponents of the Weyl denominator determinant.
    pub fn staircase(&self) -> Vec<i32> {
        let n = self.n as i32;
        (1..=self.r as i32).map(|j| n + 1 - 2 * j).collect()
    }

    pub fn validate_weight(&self, w: &Weight) -> Result<(), LieError> {
        if w.rank() != self.r {
            return Err(LieError::RankMismatch {
                n: self.n,
                expected: self.r,
                got: w.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LieContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::B => write!(f, "so_{}", 2 * self.r + 1),
            Family::C => write!(f, "sp_{}", 2 * self.r),
            Family::A1 => write!(f, "sl_2"),
        }
    }
}

/// Determine `g_N` from the ambient dimension `N`.
///
/// `N = 2` is rejected explicitly: that case needs no self-duality theory.
pub fn make_context(n: i64) -> Result<LieContext, LieError> {
    match n {
        2 => Err(LieError::UnsupportedN2),
        n if n < 3 => Err(LieError::InvalidN(n)),
        3 => Ok(LieContext {
            n: 3,
            r: 1,
            family: Family::A1,
        }),
        n if n % 2 == 0 => Ok(LieContext {
            n: n as u32,
            r: (n / 2) as usize,
            family: Family::B,
        }),
        n => Ok(LieContext {
            n: n as u32,
            r: ((n - 1) / 2) as usize,
            family: Family::C,
        }),
    }
}

/// Dominant integral weight in fundamental coordinates `<lambda, alpha_i^v>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<u32>,
}

impl Weight {
    pub fn new(coords: Vec<u32>) -> Self {
        Weight { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Bar-partition of a weight: `r` nonincreasing nonnegative integers with
/// even consecutive differences; for families C and A1 the last part is
/// even as well. These are the doubled epsilon-coordinates of the weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BarPartition {
    parts: Vec<u32>,
}

impl BarPartition {
    pub fn try_new(ctx: &LieContext, parts: Vec<u32>) -> Result<Self, LieError> {
        if parts.len() != ctx.rank() {
            return Err(LieError::WrongPartCount {
                expected: ctx.rank(),
                got: parts.len(),
            });
        }
        for i in 0..parts.len().saturating_sub(1) {
            if parts[i] < parts[i + 1] {
                return Err(LieError::NotNonincreasing(i));
            }
            if (parts[i] - parts[i + 1]) % 2 != 0 {
                return Err(LieError::BadBarParity(i, i + 1));
            }
        }
        if matches!(ctx.family(), Family::C | Family::A1) {
            if let Some(&last) = parts.last() {
                if last % 2 != 0 {
                    return Err(LieError::BadBarLastPart);
                }
            }
        }
        Ok(BarPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }
}

/// Convert fundamental coordinates to the bar-partition.
///
/// The defining recurrences: consecutive parts differ by twice the
/// corresponding fundamental coordinate, and the last part equals the last
/// coordinate for family B and twice it for families C and A1.
pub fn to_bar(ctx: &LieContext, w: &Weight) -> BarPartition {
    assert_eq!(
        w.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let r = ctx.rank();
    let mut parts = vec![0u32; r];
    parts[r - 1] = match ctx.family() {
        Family::B => w.coords()[r - 1],
        Family::C | Family::A1 => 2 * w.coords()[r - 1],
    };
    for i in (0..r - 1).rev() {
        parts[i] = parts[i + 1] + 2 * w.coords()[i];
    }
    BarPartition { parts }
}

/// Inverse of [`to_bar`]; kept as a consistency check.
#[cfg(test)]
fn from_bar(ctx: &LieContext, bar: &BarPartition) -> Weight {
    let r = ctx.rank();
    let parts = bar.parts();
    let mut coords = vec![0u32; r];
    for i in 0..r - 1 {
        coords[i] = (parts[i] - parts[i + 1]) / 2;
    }
    coords[r - 1] = match ctx.family() {
        Family::B => parts[r - 1],
        Family::C | Family::A1 => parts[r - 1] / 2,
    };
    Weight::new(coords)
}

/// A ramification point: a dominant weight plus a base-point order `k`.
///
/// Evaluation points carry no coordinates; only the conjugate-pairing
/// structure ever enters the bound, so points are identified positionally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RamificationPoint {
    pub weight: Weight,
    pub k: u32,
}

impl RamificationPoint {
    pub fn new(weight: Weight, k: u32) -> Self {
        RamificationPoint { weight, k }
    }
}

impl fmt::Display for RamificationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.weight)
        } else {
            write!(f, "{}_{}", self.weight, self.k)
        }
    }
}

/// Partition with exactly `N` nonincreasing nonnegative parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartitionN {
    parts: Vec<u32>,
}

impl PartitionN {
    pub fn try_new(ctx: &LieContext, parts: Vec<u32>) -> Result<Self, LieError> {
        if parts.len() != ctx.n() as usize {
            return Err(LieError::WrongPartCount {
                expected: ctx.n() as usize,
                got: parts.len(),
            });
        }
        for i in 0..parts.len().saturating_sub(1) {
            if parts[i] < parts[i + 1] {
                return Err(LieError::NotNonincreasing(i));
            }
        }
        Ok(PartitionN { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|xi|`: the sum of all parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

impl fmt::Display for PartitionN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Consecutive differences of `mu_A_k`: the fundamental coordinates read
/// forward up to the middle and mirrored after it.
fn mu_differences(ctx: &LieContext, w: &Weight) -> Vec<u32> {
    let n = ctx.n() as usize;
    let half = n / 2;
    (1..n)
        .map(|i| {
            let idx = if i <= half { i } else { n - i };
            // For N = 3 (rank 1) every index maps to the single coordinate.
            let idx = idx.min(ctx.rank());
            w.coords()[idx - 1]
        })
        .collect()
}

/// The partition with at most `N` parts associated with a weight and a
/// base-point order: the last part is `k` and consecutive differences are
/// the palindromically extended fundamental coordinates.
pub fn mu_a_k(ctx: &LieContext, w: &Weight, k: u32) -> PartitionN {
    assert_eq!(
        w.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let n = ctx.n() as usize;
    let difs = mu_differences(ctx, w);
    let mut parts = vec![0u32; n];
    parts[n - 1] = k;
    for i in (0..n - 1).rev() {
        parts[i] = parts[i + 1] + difs[i];
    }
    PartitionN { parts }
}

/// Recover the unique `(weight, k)` with `mu_a_k(weight, k) = xi`.
///
/// Fails with a symmetry violation when the difference sequence of `xi` is
/// not palindromic; such Schubert data admit no self-dual spaces at all.
pub fn from_xi(ctx: &LieContext, xi: &PartitionN) -> Result<(Weight, u32), LieError> {
    let n = ctx.n() as usize;
    let parts = xi.parts();
    debug_assert_eq!(parts.len(), n);
    let dif = |i: usize| parts[i - 1] - parts[i];
    for i in 1..n {
        let (left, right) = (dif(i), dif(n - i));
        if left != right {
            return Err(LieError::SymmetryViolation { i, left, right });
        }
    }
    let coords: Vec<u32> = (1..=ctx.rank()).map(dif).collect();
    Ok((Weight::new(coords), parts[n - 1]))
}

/// Ambient Grassmannian dimensions for a list of ramification points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrassmannDims {
    /// `d` with `sum |mu_A_k| = N(d - N)` for the data as given.
    pub d: u64,
    /// `d - sum k`: the ambient dimension after stripping base points,
    /// which is the problem the bound actually depends on.
    pub d_reduced: u64,
    /// `sum k` over all points.
    pub total_k: u64,
}

/// Solve `sum_s |mu_A_k(lambda_s, k_s)| = N(d - N)` for `d`, reporting both
/// the given-`k` and the stripped (`k = 0`) ambient dimensions.
pub fn grassmann_dims(
    ctx: &LieContext,
    points: &[RamificationPoint],
) -> Result<GrassmannDims, LieError> {
    if points.is_empty() {
        return Err(LieError::NoPoints);
    }
    let n = u64::from(ctx.n());
    let total: u64 = points
        .iter()
        .map(|p| mu_a_k(ctx, &p.weight, p.k).size())
        .sum();
    if total % n != 0 {
        return Err(LieError::Indivisible {
            total,
            n: ctx.n(),
        });
    }
    let d = total / n + n;
    let total_k: u64 = points.iter().map(|p| u64::from(p.k)).sum();
    Ok(GrassmannDims {
        d,
        d_reduced: d - total_k,
        total_k,
    })
}

/// `d` alone; see [`grassmann_dims`].
pub fn grassmann_d(ctx: &LieContext, points: &[RamificationPoint]) -> Result<u64, LieError> {
    grassmann_dims(ctx, points).map(|dims| dims.d)
}

/// Swap the two coordinates of a rank-2 weight.
///
/// Transporting every weight of an `N = 4` problem this way yields the
/// `N = 5` problem with identical dimension and bounds (the rank-2
/// orthogonal and symplectic algebras are isomorphic).
pub fn transpose_bc(w: &Weight) -> Result<Weight, LieError> {
    if w.rank() != 2 {
        return Err(LieError::TransposeRank(w.rank()));
    }
    Ok(Weight::new(vec![w.coords()[1], w.coords()[0]]))
}
