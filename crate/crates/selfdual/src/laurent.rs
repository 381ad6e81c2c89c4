//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! A [`LaurentPoly`] is a finite map from exponent vectors (entries may be
//! negative) to nonzero `BigInt` coefficients. Terms are stored in graded
//! lexicographic order: higher total degree first, ties broken by the
//! leftmost differing exponent with `x1 > x2 > ... > xr`. The textual
//! rendering and the exact-division algorithm both rely on this order.
//!
//! Everything here is exact integer arithmetic; operations never round and
//! never store a zero coefficient (canonical form).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exponent vector of a single Laurent monomial `x1^{e_1} ... xr^{e_r}`.
///
/// Ordered by graded lexicographic comparison: total degree first, then
/// lexicographically with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn new(exps: Vec<i32>) -> Self {
        ExponentVector(exps)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    /// Sum of all exponents (may be negative).
    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub_checked(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.rank(), other.rank());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let d = a - b;
            if d < 0 {
                return None;
            }
            out.push(d);
        }
        Some(ExponentVector(out))
    }

    fn scale(&self, l: i32) -> Self {
        ExponentVector(self.0.iter().map(|&e| e * l).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.rank(), other.rank());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Componentwise bounding box of a set of exponent vectors.
///
/// Used by callers that multiply long chains of polynomials but only need
/// one target coefficient: monomials that cannot reach the target once the
/// remaining factors' boxes are added can be dropped early.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentBox {
    lo: Vec<i32>,
    hi: Vec<i32>,
}

impl ExponentBox {
    pub fn new(lo: Vec<i32>, hi: Vec<i32>) -> Self {
        assert_eq!(lo.len(), hi.len(), "box bounds must have equal rank");
        assert!(
            lo.iter().zip(&hi).all(|(l, h)| l <= h),
            "box lower bound exceeds upper bound"
        );
        ExponentBox { lo, hi }
    }

    /// Degenerate box containing a single point.
    pub fn point(exps: &[i32]) -> Self {
        ExponentBox {
            lo: exps.to_vec(),
            hi: exps.to_vec(),
        }
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i32] {
        &self.lo
    }

    pub fn hi(&self) -> &[i32] {
        &self.hi
    }

    /// Minkowski sum: the box of all `a + b` with `a` here and `b` in `other`.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank());
        ExponentBox {
            lo: self.lo.iter().zip(&other.lo).map(|(a, b)| a + b).collect(),
            hi: self.hi.iter().zip(&other.hi).map(|(a, b)| a + b).collect(),
        }
    }

    /// The box of all `t - b` with `t` in `target` and `b` in `self`.
    pub fn target_minus(target: &[i32], b: &Self) -> Self {
        assert_eq!(target.len(), b.rank());
        ExponentBox {
            lo: target.iter().zip(&b.hi).map(|(t, h)| t - h).collect(),
            hi: target.iter().zip(&b.lo).map(|(t, l)| t - l).collect(),
        }
    }

    pub fn contains(&self, exps: &[i32]) -> bool {
        debug_assert_eq!(self.rank(), exps.len());
        exps.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(e, (l, h))| l <= e && e <= h)
    }
}

/// Error from [`LaurentPoly::exact_div`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactDivError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("inexact division: the dividend is not a multiple of the divisor")]
    Inexact,
}

/// Sparse Laurent polynomial in `rank` variables with `BigInt` coefficients.
///
/// Invariants: every stored coefficient is nonzero and every exponent vector
/// has length `rank`. All constructors and operations preserve both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(rank, &vec![0; rank], BigInt::one())
    }

    /// Single term `coeff * x^exps`; the zero polynomial when `coeff == 0`.
    pub fn monomial(rank: usize, exps: &[i32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), rank, "exponent vector length must equal rank");
        let mut terms = BTreeMap::new();
        let coeff = coeff.into();
        if !coeff.is_zero() {
            terms.insert(ExponentVector::new(exps.to_vec()), coeff);
        }
        LaurentPoly { rank, terms }
    }

    /// Sums duplicate exponent vectors and drops zero coefficients.
    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>,
    ) -> Self {
        let mut map: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), rank, "exponent vector length must equal rank");
            if coeff.is_zero() {
                continue;
            }
            let key = ExponentVector::new(exps);
            *map.entry(key).or_insert_with(BigInt::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { rank, terms: map }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Inspection hook for the canonical-form invariant.
    pub fn is_canonical(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| e.rank() == self.rank && !c.is_zero())
    }

    /// Coefficient of `x^exps`, zero when the monomial is absent.
    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        assert_eq!(exps.len(), self.rank, "exponent vector length must equal rank");
        self.terms
            .get(&ExponentVector::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in add");
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly {
            rank: self.rank,
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in sub");
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Convolution product keeping only monomials inside `window`.
    ///
    /// Equals `mul` followed by dropping every term outside the window; the
    /// point of the method is that dropped terms are never accumulated.
    pub fn mul_within(&self, other: &Self, window: &ExponentBox) -> Self {
        assert_eq!(window.rank(), self.rank, "window rank mismatch");
        self.mul_filtered(other, |e| window.contains(e.exps()))
    }

    fn mul_filtered(&self, other: &Self, keep: impl Fn(&ExponentVector) -> bool) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch in mul");
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        // Iterate the smaller polynomial in the outer loop.
        let (outer, inner) = if self.terms.len() <= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        for (ea, ca) in outer {
            for (eb, cb) in inner {
                let e = ea.add(eb);
                if !keep(&e) {
                    continue;
                }
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly {
            rank: self.rank,
            terms,
        }
    }

    /// Substitution `x_i -> x_i^l` for every variable: exponents scale by
    /// `l`, coefficients are unchanged.
    pub fn power_substitute(&self, l: u32) -> Self {
        assert!(l >= 1, "power_substitute requires l >= 1");
        if l == 1 {
            return self.clone();
        }
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.scale(l as i32), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are first shifted by their componentwise minimal
    /// exponents, which turns the problem into ordinary polynomial division
    /// (per-variable minimal exponents are additive over products, so the
    /// shifted quotient has nonnegative exponents). The quotient is then
    /// built by repeated elimination of the graded-lex leading term; in the
    /// divisible case the leading term of the remainder is always a term
    /// multiple of the divisor's leading term, so any failed step proves
    /// the division inexact.
    pub fn exact_div(&self, den: &Self) -> Result<Self, ExactDivError> {
        assert_eq!(self.rank, den.rank, "rank mismatch in exact_div");
        if den.is_zero() {
            return Err(ExactDivError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }

        let num_min = self.componentwise_min();
        let den_min = den.componentwise_min();
        let num_shifted = self.shift_by_neg(&num_min);
        let den_shifted = den.shift_by_neg(&den_min);

        let (den_lead_e, den_lead_c) = den_shifted
            .terms
            .last_key_value()
            .expect("nonzero divisor has a leading term");

        let mut rem = num_shifted.terms.clone();
        let mut quot: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        while let Some((rem_lead_e, rem_lead_c)) = rem.last_key_value() {
            let t = rem_lead_e
                .sub_checked(den_lead_e)
                .ok_or(ExactDivError::Inexact)?;
            if !(rem_lead_c % den_lead_c).is_zero() {
                return Err(ExactDivError::Inexact);
            }
            let q = rem_lead_c / den_lead_c;
            // Subtract q * x^t * den_shifted from the remainder; the leading
            // term cancels and every other touched monomial is strictly
            // smaller, so the loop terminates (graded-lex well-orders N^r).
            for (e, c) in &den_shifted.terms {
                let key = t.add(e);
                let entry = rem.entry(key.clone()).or_insert_with(BigInt::zero);
                *entry -= &q * c;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(t, q);
        }

        // Undo the shift: the true quotient sits at num_min - den_min.
        let unshift: Vec<i32> = num_min
            .iter()
            .zip(&den_min)
            .map(|(a, b)| a - b)
            .collect();
        let terms = quot
            .into_iter()
            .map(|(e, c)| (e.add(&ExponentVector::new(unshift.clone())), c))
            .collect();
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    /// Sum of all coefficients: the value at `x1 = ... = xr = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Componentwise bounding box of the support; `None` for zero.
    pub fn exponent_box(&self) -> Option<ExponentBox> {
        if self.is_zero() {
            return None;
        }
        let mut lo = vec![i32::MAX; self.rank];
        let mut hi = vec![i32::MIN; self.rank];
        for e in self.terms.keys() {
            for (i, &v) in e.exps().iter().enumerate() {
                lo[i] = lo[i].min(v);
                hi[i] = hi[i].max(v);
            }
        }
        Some(ExponentBox::new(lo, hi))
    }

    /// Relabel variables: new variable `i` gets old variable `perm[i]`'s
    /// exponent. `perm` must be a permutation of `0..rank`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank, "permutation length must equal rank");
        let mut seen = vec![false; self.rank];
        for &p in perm {
            assert!(p < self.rank && !seen[p], "not a permutation");
            seen[p] = true;
        }
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let exps: Vec<i32> = perm.iter().map(|&p| e.exps()[p]).collect();
                    (ExponentVector::new(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Substitution `x_i -> x_i^{-1}` for the single variable `i`.
    pub fn invert_var(&self, i: usize) -> Self {
        assert!(i < self.rank, "variable index out of range");
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut exps = e.exps().to_vec();
                    exps[i] = -exps[i];
                    (ExponentVector::new(exps), c.clone())
                })
                .collect(),
        }
    }

    fn componentwise_min(&self) -> Vec<i32> {
        let mut min = vec![0; self.rank];
        let mut first = true;
        for e in self.terms.keys() {
            for (i, &v) in e.exps().iter().enumerate() {
                if first {
                    min[i] = v;
                } else {
                    min[i] = min[i].min(v);
                }
            }
            first = false;
        }
        min
    }

    fn shift_by_neg(&self, min: &[i32]) -> Self {
        let shift: Vec<i32> = min.iter().map(|&m| -m).collect();
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(&ExponentVector::new(shift.clone())), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms in descending graded-lex order, monomials
    /// as `x1^a1*...*xr^ar` with `^1` omitted, zero exponents dropped, unit
    /// coefficients suppressed on nonconstant monomials, and the constant
    /// monomial printed as a bare integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp != 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, exp)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rank: usize, terms: &[(&[i32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            rank,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn grlex_order_degree_first_then_lex() {
        let a = ExponentVector::new(vec![2, 0]);
        let b = ExponentVector::new(vec![0, 2]);
        let c = ExponentVector::new(vec![0, 0]);
        let d = ExponentVector::new(vec![0, -2]);
        let e = ExponentVector::new(vec![-2, 0]);
        assert!(a > b);
        assert!(b > c);
        assert!(c > d);
        assert!(d > e);
    }

    #[test]
    fn add_cancels_to_empty_map() {
        let p = poly(1, &[(&[1], 1)]);
        let q = poly(1, &[(&[1], -1)]);
        let sum = p.add(&q);
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
        assert!(sum.is_canonical());
    }

    #[test]
    fn add_merges_equal_monomials() {
        let p = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let q = poly(2, &[(&[0, 1], 1)]);
        let expected = poly(2, &[(&[1, 0], 1), (&[0, 1], 2)]);
        assert_eq!(p.add(&q), expected);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = poly(2, &[(&[1, -1], 3), (&[0, 0], -2)]);
        assert_eq!(p.add(&LaurentPoly::zero(2)), p);
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = poly(1, &[(&[1], 1), (&[-1], -1)]);
        let q = poly(1, &[(&[1], 1), (&[-1], 1)]);
        let expected = poly(1, &[(&[2], 1), (&[-2], -1)]);
        assert_eq!(p.mul(&q), expected);
    }

    #[test]
    fn mul_one_is_identity() {
        let p = poly(2, &[(&[3, -2], 5), (&[0, 1], -1)]);
        assert_eq!(p.mul(&LaurentPoly::one(2)), p);
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn mul_rank_mismatch_panics() {
        let p = LaurentPoly::one(1);
        let q = LaurentPoly::one(2);
        let _ = p.mul(&q);
    }

    #[test]
    fn power_substitute_scales_exponents() {
        let p = poly(1, &[(&[1], 1), (&[-1], 1)]);
        assert_eq!(p.power_substitute(2), poly(1, &[(&[2], 1), (&[-2], 1)]));
        assert_eq!(p.power_substitute(1), p);
        let q = poly(2, &[(&[1, -1], 3)]);
        assert_eq!(q.power_substitute(3), poly(2, &[(&[3, -3], 3)]));
    }

    #[test]
    #[should_panic(expected = "l >= 1")]
    fn power_substitute_rejects_zero() {
        let _ = LaurentPoly::one(1).power_substitute(0);
    }

    #[test]
    fn coeff_lookup() {
        let p = poly(1, &[(&[2], 1), (&[0], -2)]);
        assert_eq!(p.coeff(&[2]), BigInt::from(1));
        assert_eq!(p.coeff(&[0]), BigInt::from(-2));
        assert_eq!(p.coeff(&[5]), BigInt::zero());
    }

    #[test]
    fn exact_div_by_self_is_one() {
        let p = poly(2, &[(&[3, 1], 1), (&[-1, 2], -4), (&[0, 0], 7)]);
        assert_eq!(p.exact_div(&p).unwrap(), LaurentPoly::one(2));
    }

    #[test]
    fn exact_div_factored_difference_of_squares() {
        let num = poly(1, &[(&[2], 1), (&[-2], -1)]);
        let den = poly(1, &[(&[1], 1), (&[-1], -1)]);
        let expected = poly(1, &[(&[1], 1), (&[-1], 1)]);
        assert_eq!(num.exact_div(&den).unwrap(), expected);
    }

    #[test]
    fn exact_div_roundtrip_with_negative_exponents() {
        let a = poly(2, &[(&[-3, 2], 5), (&[1, -4], -2), (&[0, 0], 1)]);
        let b = poly(2, &[(&[-1, -1], 3), (&[2, 0], 1)]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn exact_div_detects_inexact_input() {
        let num = poly(1, &[(&[2], 1), (&[0], 1)]);
        let den = poly(1, &[(&[1], 1), (&[-1], -1)]);
        assert_eq!(num.exact_div(&den), Err(ExactDivError::Inexact));
        // Coefficient-level failure: x1 is not divisible by 2*x1.
        let num = poly(1, &[(&[1], 1)]);
        let den = poly(1, &[(&[1], 2)]);
        assert_eq!(num.exact_div(&den), Err(ExactDivError::Inexact));
    }

    #[test]
    fn exact_div_zero_divisor_is_an_error() {
        let p = LaurentPoly::one(1);
        assert_eq!(
            p.exact_div(&LaurentPoly::zero(1)),
            Err(ExactDivError::ZeroDivisor)
        );
        assert_eq!(
            LaurentPoly::zero(1).exact_div(&p).unwrap(),
            LaurentPoly::zero(1)
        );
    }

    #[test]
    fn evaluate_at_one_sums_coefficients() {
        let p = poly(2, &[(&[5, -3], 4), (&[0, 0], -1), (&[1, 1], 2)]);
        assert_eq!(p.evaluate_at_one(), BigInt::from(5));
        assert_eq!(LaurentPoly::zero(2).evaluate_at_one(), BigInt::zero());
    }

    #[test]
    fn exponent_box_bounds_support() {
        let p = poly(2, &[(&[3, -1], 1), (&[-2, 4], 1)]);
        let b = p.exponent_box().unwrap();
        assert_eq!(b.lo(), &[-2, -1]);
        assert_eq!(b.hi(), &[3, 4]);
        assert!(LaurentPoly::zero(2).exponent_box().is_none());
    }

    #[test]
    fn mul_within_equals_filtered_full_product() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 2), (&[-1, -1], -3)]);
        let b = poly(2, &[(&[1, 1], 1), (&[2, -1], 1)]);
        let window = ExponentBox::new(vec![0, -1], vec![2, 1]);
        let pruned = a.mul_within(&b, &window);
        let full = a.mul(&b);
        let filtered = LaurentPoly::from_terms(
            2,
            full.terms()
                .filter(|(e, _)| window.contains(e.exps()))
                .map(|(e, c)| (e.exps().to_vec(), c.clone())),
        );
        assert_eq!(pruned, filtered);
    }

    #[test]
    fn permute_and_invert_variables() {
        let p = poly(2, &[(&[2, -1], 3)]);
        assert_eq!(p.permute_vars(&[1, 0]), poly(2, &[(&[-1, 2], 3)]));
        assert_eq!(p.invert_var(0), poly(2, &[(&[-2, -1], 3)]));
        assert_eq!(p.invert_var(1), poly(2, &[(&[2, 1], 3)]));
    }

    #[test]
    fn rendering_follows_graded_lex_descending() {
        let p = poly(
            2,
            &[
                (&[2, 0], 1),
                (&[0, 2], 1),
                (&[0, 0], 1),
                (&[0, -2], 1),
                (&[-2, 0], 1),
            ],
        );
        assert_eq!(p.to_string(), "x1^2 + x2^2 + 1 + x2^-2 + x1^-2");
    }

    #[test]
    fn rendering_edge_cases() {
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(LaurentPoly::one(0).to_string(), "1");
        assert_eq!(poly(1, &[(&[1], -1), (&[0], 1)]).to_string(), "-x1 + 1");
        assert_eq!(poly(2, &[(&[2, -1], 2)]).to_string(), "2*x1^2*x2^-1");
        assert_eq!(poly(2, &[(&[1, 1], -1)]).to_string(), "-x1*x2");
        assert_eq!(poly(1, &[(&[0], -7)]).to_string(), "-7");
    }

    #[test]
    fn operations_preserve_canonical_form() {
        let a = poly(2, &[(&[1, 0], 2), (&[0, 1], -2)]);
        let b = poly(2, &[(&[1, 0], -2), (&[0, 1], 2), (&[1, 1], 1)]);
        for p in [
            a.add(&b),
            a.sub(&b),
            a.mul(&b),
            a.neg(),
            a.power_substitute(3),
        ] {
            assert!(p.is_canonical());
        }
    }
}
