//! Characters of `g_N` as Laurent polynomials, and character values of
//! symmetric-group elements on multiplicity spaces.
//!
//! The torus element behind every formula is
//! `diag(x_1^2, ..., x_r^2, 1, x_r^{-2}, ..., x_1^{-2})` for family B and
//! `diag(x_1^2, ..., x_r^2, x_r^{-2}, ..., x_1^{-2})` for families C and
//! A1, so all exponents are doubled epsilon-coordinates and spin weights
//! stay integral.
//!
//! Two independent oracles live at the bottom of the module: the Weyl
//! dimension product formula and the Freudenthal multiplicity recursion
//! (completed to full weight tables by the signed-permutation Weyl group).
//! They share no code with the determinant-ratio path and exist purely so
//! tests can cross-check it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::lie::{to_bar, BarPartition, Family, LieContext, Weight};

/// Validation errors for cycle data.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("a cycle group needs at least one cycle")]
    EmptyCycles,
    #[error("cycle lengths must be positive")]
    ZeroCycleLength,
}

/// One group of tensor copies of `V_{weight}` together with the cycle type
/// of the symmetric-group element acting on those copies. The number of
/// copies is the sum of the cycle lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleGroup {
    weight: Weight,
    cycles: Vec<u32>,
}

impl CycleGroup {
    pub fn new(weight: Weight, cycles: Vec<u32>) -> Result<Self, CharError> {
        if cycles.is_empty() {
            return Err(CharError::EmptyCycles);
        }
        if cycles.iter().any(|&l| l == 0) {
            return Err(CharError::ZeroCycleLength);
        }
        Ok(CycleGroup { weight, cycles })
    }

    /// The identity element on `copies` tensor copies.
    pub fn identity(weight: Weight, copies: u32) -> Self {
        assert!(copies >= 1, "a cycle group needs at least one copy");
        CycleGroup {
            weight,
            cycles: vec![1; copies as usize],
        }
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn cycles(&self) -> &[u32] {
        &self.cycles
    }

    /// Number of tensor copies this group acts on.
    pub fn copies(&self) -> u32 {
        self.cycles.iter().sum()
    }
}

/// Visit all permutations of `0..r` with their signs.
fn for_each_permutation(r: usize, mut f: impl FnMut(&[usize], i64)) {
    fn rec(
        remaining: &mut Vec<usize>,
        acc: &mut Vec<usize>,
        sign: i64,
        f: &mut impl FnMut(&[usize], i64),
    ) {
        if remaining.is_empty() {
            f(acc, sign);
            return;
        }
        for idx in 0..remaining.len() {
            let v = remaining.remove(idx);
            acc.push(v);
            // Removing position idx costs idx transpositions.
            let s = if idx % 2 == 0 { sign } else { -sign };
            rec(remaining, acc, s, f);
            acc.pop();
            remaining.insert(idx, v);
        }
    }
    let mut remaining: Vec<usize> = (0..r).collect();
    let mut acc = Vec::with_capacity(r);
    rec(&mut remaining, &mut acc, 1, &mut f);
}

/// `det(x_i^{e_j} - x_i^{-e_j})` expanded over permutations.
fn alternant(rank: usize, exponents: &[i32]) -> LaurentPoly {
    assert_eq!(exponents.len(), rank);
    let mut result = LaurentPoly::zero(rank);
    for_each_permutation(rank, |perm, sign| {
        let mut prod = LaurentPoly::monomial(rank, &vec![0; rank], BigInt::from(sign));
        for (i, &p) in perm.iter().enumerate() {
            let e = exponents[p];
            let mut pos = vec![0i32; rank];
            pos[i] = e;
            let mut neg = vec![0i32; rank];
            neg[i] = -e;
            let binomial = LaurentPoly::monomial(rank, &pos, 1)
                .sub(&LaurentPoly::monomial(rank, &neg, 1));
            prod = prod.mul(&binomial);
        }
        result = result.add(&prod);
    });
    result
}

/// The Weyl denominator of `g_N`:
/// `det(x_i^{N+1-2j} - x_i^{-(N+1-2j)})` for `i, j = 1, ..., r`.
pub fn vandermonde(ctx: &LieContext) -> LaurentPoly {
    alternant(ctx.rank(), &ctx.staircase())
}

/// The character numerator: the denominator determinant with column
/// exponents shifted by the bar-partition.
pub fn numerator(ctx: &LieContext, bar: &BarPartition) -> LaurentPoly {
    let exponents: Vec<i32> = bar
        .parts()
        .iter()
        .zip(ctx.staircase())
        .map(|(&b, v)| b as i32 + v)
        .collect();
    alternant(ctx.rank(), &exponents)
}

type SchurKey = (u32, Vec<u32>);

static SCHUR_CACHE: Lazy<RwLock<HashMap<SchurKey, Arc<LaurentPoly>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Character of the irreducible module `V_w` as a Laurent polynomial in the
/// doubled-epsilon variables: the exact quotient of [`numerator`] by
/// [`vandermonde`].
///
/// Results are memoized per `(N, weight)`; the cache is safe for concurrent
/// use and writes are idempotent because the function is deterministic.
pub fn schur(ctx: &LieContext, w: &Weight) -> LaurentPoly {
    assert_eq!(
        w.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let key: SchurKey = (ctx.n(), w.coords().to_vec());
    if let Some(hit) = SCHUR_CACHE.read().expect("schur cache poisoned").get(&key) {
        return (**hit).clone();
    }
    let bar = to_bar(ctx, w);
    let quotient = numerator(ctx, &bar)
        .exact_div(&vandermonde(ctx))
        .expect("the character determinant ratio divides exactly");
    SCHUR_CACHE
        .write()
        .expect("schur cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::new(quotient.clone()));
    quotient
}

/// Exponent vector at which coefficients are read off: the bar-partition of
/// `mu` plus the staircase.
pub fn target_exponents(ctx: &LieContext, mu: &Weight) -> Vec<i32> {
    to_bar(ctx, mu)
        .parts()
        .iter()
        .zip(ctx.staircase())
        .map(|(&b, v)| b as i32 + v)
        .collect()
}

/// Character value of a product of symmetric groups on the multiplicity
/// space of `V_mu` inside the tensor product described by `groups`.
///
/// The value is the coefficient of `x^(bar(mu) + staircase)` in the Weyl
/// denominator times one substituted character per cycle: a cycle of length
/// `l` in the group of `V_w` contributes the factor `S_w(x_1^l, ..., x_r^l)`.
/// On the identity this is the multiplicity of `V_mu`; the trace depends
/// only on the cycle type, so cycle data is all a caller can supply.
pub fn char_value(ctx: &LieContext, groups: &[CycleGroup], mu: &Weight) -> BigInt {
    assert!(!groups.is_empty(), "at least one cycle group is required");
    assert_eq!(
        mu.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let mut product = vandermonde(ctx);
    for group in groups {
        let s = schur(ctx, group.weight());
        for &l in group.cycles() {
            product = product.mul(&s.power_substitute(l));
        }
    }
    product.coeff(&target_exponents(ctx, mu))
}

/// All dominant weights whose bar-partition starts at most `max_bar1`.
///
/// Utility for oracle sweeps and completeness sums; the order is
/// deterministic (lexicographic in fundamental coordinates).
pub fn enumerate_dominant_weights(ctx: &LieContext, max_bar1: u32) -> Vec<Weight> {
    let r = ctx.rank();
    let mut out = Vec::new();
    let mut coords = vec![0u32; r];
    loop {
        let w = Weight::new(coords.clone());
        if to_bar(ctx, &w).parts()[0] <= max_bar1 {
            out.push(w);
        }
        // Odometer over coordinates, each bounded by max_bar1 (coarse but
        // sufficient: any coordinate above that already overshoots).
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            if coords[i] < max_bar1 {
                coords[i] += 1;
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Verification oracles. Nothing below is used by the production path.
// ---------------------------------------------------------------------------

/// Dimension of `V_w` by the Weyl product formula over positive roots,
/// written uniformly for both families via the staircase:
/// with `u_j = bar_j + (N+1-2j)` and `v_j = N+1-2j`,
/// `dim = prod_{i<j} (u_i^2 - u_j^2)/(v_i^2 - v_j^2) * prod_i u_i/v_i`.
pub fn weyl_dim(ctx: &LieContext, w: &Weight) -> BigInt {
    assert_eq!(
        w.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let v = ctx.staircase();
    let u: Vec<i64> = to_bar(ctx, w)
        .parts()
        .iter()
        .zip(&v)
        .map(|(&b, &s)| i64::from(b) + i64::from(s))
        .collect();
    let v: Vec<i64> = v.into_iter().map(i64::from).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            num *= BigInt::from(u[i] * u[i] - u[j] * u[j]);
            den *= BigInt::from(v[i] * v[i] - v[j] * v[j]);
        }
        num *= BigInt::from(u[i]);
        den *= BigInt::from(v[i]);
    }
    let (q, r) = (&num / &den, &num % &den);
    assert!(r.is_zero(), "Weyl dimension product is always integral");
    q
}

/// Full weight-multiplicity table of an irreducible module, keyed by
/// doubled-epsilon exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMultiplicityTable {
    rank: usize,
    entries: BTreeMap<Vec<i32>, BigInt>,
}

impl WeightMultiplicityTable {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.entries
    }

    pub fn multiplicity(&self, exps: &[i32]) -> BigInt {
        self.entries.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of all multiplicities: the module dimension.
    pub fn total(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// The character reconstructed term by term from the table.
    pub fn to_character(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.rank,
            self.entries.iter().map(|(e, m)| (e.clone(), m.clone())),
        )
    }

    /// Weyl-group invariance: every signed permutation of every entry is
    /// present with the same multiplicity.
    pub fn is_weyl_invariant(&self) -> bool {
        self.entries.iter().all(|(exps, mult)| {
            signed_permutation_orbit(exps)
                .iter()
                .all(|image| self.entries.get(image) == Some(mult))
        })
    }
}

/// All distinct signed permutations of a vector (signs flip only nonzero
/// entries, so the orbit is genuinely distinct vectors).
fn signed_permutation_orbit(exps: &[i32]) -> BTreeSet<Vec<i32>> {
    let mut orbit = BTreeSet::new();
    let mut sorted = exps.to_vec();
    sorted.sort_unstable();
    permute_rec(&mut sorted, 0, &mut |perm: &[i32]| {
        sign_rec(perm, 0, &mut vec![0; perm.len()], &mut orbit);
    });
    orbit
}

fn permute_rec(current: &mut Vec<i32>, index: usize, f: &mut impl FnMut(&[i32])) {
    if index == current.len() {
        f(current);
        return;
    }
    let mut seen = BTreeSet::new();
    for i in index..current.len() {
        if !seen.insert(current[i]) {
            continue;
        }
        current.swap(index, i);
        permute_rec(current, index + 1, f);
        current.swap(index, i);
    }
}

fn sign_rec(perm: &[i32], index: usize, acc: &mut Vec<i32>, orbit: &mut BTreeSet<Vec<i32>>) {
    if index == perm.len() {
        orbit.insert(acc.clone());
        return;
    }
    acc[index] = perm[index];
    sign_rec(perm, index + 1, acc, orbit);
    if perm[index] != 0 {
        acc[index] = -perm[index];
        sign_rec(perm, index + 1, acc, orbit);
    }
}

/// Positive roots of `g_N` in doubled epsilon-coordinates.
fn positive_roots_doubled(ctx: &LieContext) -> Vec<Vec<i32>> {
    let r = ctx.rank();
    let mut roots = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            for sign in [1i32, -1] {
                let mut root = vec![0i32; r];
                root[i] = 2;
                root[j] = 2 * sign;
                roots.push(root);
            }
        }
    }
    let diag = match ctx.family() {
        Family::B => 2,
        Family::C | Family::A1 => 4,
    };
    for i in 0..r {
        let mut root = vec![0i32; r];
        root[i] = diag;
        roots.push(root);
    }
    roots
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| i64::from(x) * i64::from(y))
        .sum()
}

/// Dominant candidates below `lam` (componentwise parity class of `lam`,
/// difference in the positive root lattice), paired with their depth:
/// the total simple-root coefficient of `lam - v`.
fn dominant_candidates_below(ctx: &LieContext, lam: &[i32]) -> Vec<(Vec<i32>, i64)> {
    let r = ctx.rank();
    let parity = (lam[0].rem_euclid(2)) as u32;
    let max = lam[0];
    let mut out = Vec::new();
    let mut v = vec![0i32; r];

    fn rec(
        ctx: &LieContext,
        lam: &[i32],
        parity: u32,
        max: i32,
        pos: usize,
        v: &mut Vec<i32>,
        out: &mut Vec<(Vec<i32>, i64)>,
    ) {
        let r = v.len();
        if pos == r {
            // Partial sums of lam - v decide membership in the positive
            // root lattice; they are automatically even in the uniform
            // parity class.
            let mut s = 0i64;
            let mut depth = 0i64;
            for k in 0..r {
                s += i64::from(lam[k] - v[k]);
                if s < 0 {
                    return;
                }
                debug_assert_eq!(s % 2, 0);
                if k + 1 < r {
                    depth += s / 2;
                }
            }
            match ctx.family() {
                Family::B => depth += s / 2,
                Family::C | Family::A1 => {
                    if s % 4 != 0 {
                        return;
                    }
                    depth += s / 4;
                }
            }
            out.push((v.clone(), depth));
            return;
        }
        let upper = if pos == 0 { max } else { v[pos - 1] };
        let mut val = parity as i32;
        while val <= upper {
            v[pos] = val;
            rec(ctx, lam, parity, max, pos + 1, v, out);
            val += 2;
        }
        v[pos] = 0;
    }

    rec(ctx, lam, parity, max, 0, &mut v, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Weight multiplicities of `V_w` by the Freudenthal recursion, completed
/// to the full table with the signed-permutation Weyl group.
///
/// This is a verification oracle: it never touches the determinant ratio.
pub fn freudenthal_weights(ctx: &LieContext, w: &Weight) -> WeightMultiplicityTable {
    assert_eq!(
        w.rank(),
        ctx.rank(),
        "weight rank must equal the context rank"
    );
    let r = ctx.rank();
    let lam: Vec<i32> = to_bar(ctx, w).parts().iter().map(|&p| p as i32).collect();
    let rho = ctx.staircase();
    let roots = positive_roots_doubled(ctx);
    let lam_rho: Vec<i32> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let lam_rho_norm = dot(&lam_rho, &lam_rho);
    let t_max = lam[0];

    let candidates = dominant_candidates_below(ctx, &lam);
    let mut mult: HashMap<Vec<i32>, BigInt> = HashMap::new();
    for (v, depth) in &candidates {
        if *depth == 0 {
            mult.insert(v.clone(), BigInt::one());
            continue;
        }
        let v_rho: Vec<i32> = v.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denom = lam_rho_norm - dot(&v_rho, &v_rho);
        assert!(denom > 0, "Freudenthal denominator must be positive below the highest weight");
        let mut numer = BigInt::zero();
        for root in &roots {
            for t in 1..=t_max {
                let shifted: Vec<i32> = v
                    .iter()
                    .zip(root)
                    .map(|(a, b)| a + t * b)
                    .collect();
                let mut dominant_rep: Vec<i32> = shifted.iter().map(|e| e.abs()).collect();
                dominant_rep.sort_unstable_by(|a, b| b.cmp(a));
                if let Some(m) = mult.get(&dominant_rep) {
                    numer += m * BigInt::from(2 * dot(&shifted, root));
                }
            }
        }
        let denom = BigInt::from(denom);
        let (q, rem) = (&numer / &denom, &numer % &denom);
        assert!(rem.is_zero(), "Freudenthal numerator divides exactly");
        mult.insert(v.clone(), q);
    }

    let mut entries: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    for (v, _) in &candidates {
        let m = &mult[v];
        if m.is_zero() {
            continue;
        }
        for image in signed_permutation_orbit(v) {
            entries.insert(image, m.clone());
        }
    }
    WeightMultiplicityTable { rank: r, entries }
}
