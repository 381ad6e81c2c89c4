//! Signatures of the conjugation-twisted form, the resulting lower bounds
//! on real self-dual spaces, pairing enumeration, and verification against
//! the shipped golden tables.
//!
//! The central quantity is the signature `q`: the coefficient of
//! `x^staircase` in the Weyl denominator times one squared-variable Schur
//! factor per conjugate pair and one plain Schur factor per unpaired
//! point. Its absolute value bounds the number of real self-dual spaces
//! from below; at zero pairs it equals the dimension of the invariant
//! space, i.e. the total count with multiplicities.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::characters::{char_value, schur, vandermonde, CycleGroup};
use crate::laurent::{ExponentBox, LaurentPoly};
use crate::lie::{make_context, GrassmannDims, LieContext, LieError, RamificationPoint, Weight};

/// Environment variable naming a directory with replacement golden data
/// files (`table1.toml`, `table2.toml`). When unset, the data compiled
/// into the library is used.
pub const DATA_DIR_ENV: &str = "SELFDUAL_DATA_DIR";

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("a problem needs at least one ramification point")]
    EmptyProblem,
    #[error("point index {index} is out of range: the problem has {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point index {0} appears in more than one pair")]
    OverlappingIndex(usize),
    #[error("points {i} and {j} cannot be conjugate: their (weight, k) data differ")]
    PairMismatch { i: usize, j: usize },
    #[error("expected {expected} per-class pair counts, got {got}")]
    ClassCountLength { expected: usize, got: usize },
    #[error("class {index} has {size} points and admits at most {max} pairs, got {got}")]
    ClassCountRange {
        index: usize,
        size: u32,
        max: u32,
        got: u32,
    },
    #[error("unknown table {0}: available tables are 1 and 2")]
    UnknownTable(u8),
    #[error("golden table data unusable: {0}")]
    GoldenData(String),
}

/// An osculating Schubert problem: the algebra context for `N` plus the
/// ordered ramification points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Problem {
    ctx: LieContext,
    points: Vec<RamificationPoint>,
}

impl Problem {
    /// Builds a problem, validating `n` and every weight's rank.
    ///
    /// Divisibility of the total partition size is deliberately not
    /// required here: multiplicities and signatures are well-defined for
    /// any weight data, and [`Problem::grassmann`] reports the
    /// divisibility failure when the ambient space is actually requested.
    pub fn new(n: i64, points: Vec<RamificationPoint>) -> Result<Self, BoundsError> {
        let ctx = make_context(n)?;
        if points.is_empty() {
            return Err(BoundsError::EmptyProblem);
        }
        for p in &points {
            ctx.validate_weight(&p.weight)?;
        }
        Ok(Problem { ctx, points })
    }

    pub fn ctx(&self) -> &LieContext {
        &self.ctx
    }

    pub fn points(&self) -> &[RamificationPoint] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    /// Ambient Grassmannian data; fails when the total partition size is
    /// not divisible by `N`.
    pub fn grassmann(&self) -> Result<GrassmannDims, LieError> {
        crate::lie::grassmann_dims(&self.ctx, &self.points)
    }
}

/// An explicit assignment of disjoint conjugate pairs by point index.
/// Stored canonically: each pair as `(min, max)`, pairs sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairingSpec {
    pairs: Vec<(usize, usize)>,
}

impl PairingSpec {
    /// No pairs at all (`c = 0`).
    pub fn empty() -> Self {
        PairingSpec { pairs: Vec::new() }
    }

    /// Validates index range, disjointness, and that both members of each
    /// pair carry identical `(weight, k)` data.
    pub fn new(problem: &Problem, pairs: &[(usize, usize)]) -> Result<Self, BoundsError> {
        let len = problem.num_points();
        let mut used = BTreeSet::new();
        let mut canonical = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for idx in [a, b] {
                if idx >= len {
                    return Err(BoundsError::IndexOutOfRange { index: idx, len });
                }
            }
            let (i, j) = (a.min(b), a.max(b));
            for idx in [i, j] {
                if !used.insert(idx) {
                    return Err(BoundsError::OverlappingIndex(idx));
                }
            }
            let pi = &problem.points()[i];
            let pj = &problem.points()[j];
            if pi.weight != pj.weight || pi.k != pj.k {
                return Err(BoundsError::PairMismatch { i, j });
            }
            canonical.push((i, j));
        }
        canonical.sort_unstable();
        Ok(PairingSpec { pairs: canonical })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of conjugate pairs.
    pub fn c(&self) -> u32 {
        self.pairs.len() as u32
    }
}

/// One `(weight, k)` class of a problem with its point count and the
/// number of conjugate pairs placed inside it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassEntry {
    weight: Weight,
    k: u32,
    size: u32,
    pairs: u32,
}

impl ClassEntry {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of points in this class.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of conjugate pairs inside this class.
    pub fn pairs(&self) -> u32 {
        self.pairs
    }

    /// Points left unpaired in this class.
    pub fn unpaired(&self) -> u32 {
        self.size - 2 * self.pairs
    }
}

/// The canonical form of a pairing: only how many pairs sit inside each
/// `(weight, k)` class matters for the signature, not which indices are
/// joined. Classes are kept in first-occurrence order of the problem's
/// points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairingClass {
    classes: Vec<ClassEntry>,
}

/// The `(weight, k)` classes of a problem in first-occurrence order, with
/// zero pairs each.
fn base_classes(problem: &Problem) -> Vec<ClassEntry> {
    let mut classes: Vec<ClassEntry> = Vec::new();
    for p in problem.points() {
        match classes
            .iter_mut()
            .find(|c| c.weight == p.weight && c.k == p.k)
        {
            Some(entry) => entry.size += 1,
            None => classes.push(ClassEntry {
                weight: p.weight.clone(),
                k: p.k,
                size: 1,
                pairs: 0,
            }),
        }
    }
    classes
}

impl PairingClass {
    /// Canonicalizes an explicit pairing: counts pairs per class.
    pub fn of(problem: &Problem, spec: &PairingSpec) -> Self {
        let mut classes = base_classes(problem);
        for &(i, _) in spec.pairs() {
            let p = &problem.points()[i];
            let entry = classes
                .iter_mut()
                .find(|c| c.weight == p.weight && c.k == p.k)
                .expect("a validated pair always lies in some class");
            entry.pairs += 1;
        }
        PairingClass { classes }
    }

    /// Builds a class pairing from explicit per-class pair counts, in the
    /// problem's first-occurrence class order.
    pub fn from_pair_counts(problem: &Problem, counts: &[u32]) -> Result<Self, BoundsError> {
        let mut classes = base_classes(problem);
        if counts.len() != classes.len() {
            return Err(BoundsError::ClassCountLength {
                expected: classes.len(),
                got: counts.len(),
            });
        }
        for (index, (entry, &count)) in classes.iter_mut().zip(counts).enumerate() {
            let max = entry.size / 2;
            if count > max {
                return Err(BoundsError::ClassCountRange {
                    index,
                    size: entry.size,
                    max,
                    got: count,
                });
            }
            entry.pairs = count;
        }
        Ok(PairingClass { classes })
    }

    pub fn classes(&self) -> &[ClassEntry] {
        &self.classes
    }

    /// Total number of conjugate pairs.
    pub fn c(&self) -> u32 {
        self.classes.iter().map(|e| e.pairs).sum()
    }

    /// The per-class pair counts in class order.
    pub fn pair_counts(&self) -> Vec<u32> {
        self.classes.iter().map(|e| e.pairs).collect()
    }
}

impl std::fmt::Display for PairingClass {
    /// Human-readable class assignment, e.g. `{(0,1,0): 2, (0,0,1): 0}`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, entry) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let point = RamificationPoint::new(entry.weight.clone(), entry.k);
            write!(f, "{}: {}", point, entry.pairs)?;
        }
        write!(f, "}}")
    }
}

/// A signature together with the derived bound data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundResult {
    signature: BigInt,
    bound: BigInt,
    dimension: BigInt,
    parity_floor: u8,
}

impl BoundResult {
    fn new(signature: BigInt, dimension: BigInt) -> Self {
        let bound = signature.abs();
        let parity_floor = if (&dimension % 2u8).is_zero() { 0 } else { 1 };
        assert!(bound <= dimension, "a signature never exceeds the dimension");
        assert!(
            ((&dimension - &signature) % 2u8).is_zero(),
            "a signature always has the dimension's parity"
        );
        assert!(
            bound >= BigInt::from(parity_floor),
            "an odd dimension forces a nonzero signature"
        );
        BoundResult {
            signature,
            bound,
            dimension,
            parity_floor,
        }
    }

    /// The signed signature `q` of the twisted form.
    pub fn signature(&self) -> &BigInt {
        &self.signature
    }

    /// The lower bound `|q|` on the number of real self-dual spaces.
    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    /// The dimension of the invariant space (the signature at zero pairs).
    pub fn dimension(&self) -> &BigInt {
        &self.dimension
    }

    /// `dimension mod 2`: a parity-forced lower bound that every
    /// signature respects.
    pub fn parity_floor(&self) -> u8 {
        self.parity_floor
    }
}

/// Multiplicity of the trivial module in the full tensor product: the
/// total number of self-dual spaces counted with multiplicities.
///
/// Computed through the general character machinery (identity element,
/// trivial target weight), independently of [`signature`]'s product path.
pub fn trivial_multiplicity(problem: &Problem) -> BigInt {
    let groups: Vec<CycleGroup> = problem
        .points()
        .iter()
        .map(|p| CycleGroup::identity(p.weight.clone(), 1))
        .collect();
    let mu = Weight::new(vec![0; problem.ctx().rank()]);
    char_value(problem.ctx(), &groups, &mu)
}

/// Coefficient of `x^target` in the product of `factors`, multiplying
/// left to right and discarding every intermediate monomial that cannot
/// reach `target` given the exponent ranges of the remaining factors.
fn coeff_of_product(factors: &[LaurentPoly], target: &[i32]) -> BigInt {
    let rank = target.len();
    let origin = ExponentBox::point(&vec![0; rank]);
    let boxes: Vec<ExponentBox> = factors
        .iter()
        .map(|f| f.exponent_box().expect("character factors are never zero"))
        .collect();
    // suffix[i] = Minkowski sum of the boxes of factors[i..].
    let mut suffix = vec![origin; factors.len() + 1];
    for i in (0..factors.len()).rev() {
        suffix[i] = boxes[i].sum(&suffix[i + 1]);
    }
    let mut acc = LaurentPoly::one(rank);
    for (i, factor) in factors.iter().enumerate() {
        let window = ExponentBox::target_minus(target, &suffix[i + 1]);
        acc = acc.mul_within(factor, &window);
        if acc.is_zero() {
            return BigInt::zero();
        }
    }
    acc.coeff(target)
}

/// The signature `q` for a canonical pairing class: the coefficient of
/// `x^staircase` in the Weyl denominator times `S_w(x^2)` once per pair
/// and `S_w(x)` once per unpaired point. Base-point orders never enter.
pub fn signature_of_class(problem: &Problem, class: &PairingClass) -> BigInt {
    let ctx = problem.ctx();
    let mut factors = vec![vandermonde(ctx)];
    for entry in class.classes() {
        if entry.pairs() > 0 {
            let squared = schur(ctx, entry.weight()).power_substitute(2);
            for _ in 0..entry.pairs() {
                factors.push(squared.clone());
            }
        }
        if entry.unpaired() > 0 {
            let plain = schur(ctx, entry.weight());
            for _ in 0..entry.unpaired() {
                factors.push(plain.clone());
            }
        }
    }
    coeff_of_product(&factors, &ctx.staircase())
}

/// The signature `q` for an explicit pairing; canonicalized first, since
/// the value depends only on which classes are paired.
pub fn signature(problem: &Problem, pairing: &PairingSpec) -> BigInt {
    signature_of_class(problem, &PairingClass::of(problem, pairing))
}

/// Full bound data for a canonical pairing class.
pub fn lower_bound_of_class(problem: &Problem, class: &PairingClass) -> BoundResult {
    BoundResult::new(
        signature_of_class(problem, class),
        trivial_multiplicity(problem),
    )
}

/// Full bound data for an explicit pairing.
pub fn lower_bound(problem: &Problem, pairing: &PairingSpec) -> BoundResult {
    lower_bound_of_class(problem, &PairingClass::of(problem, pairing))
}

/// All inequivalent ways to place exactly `c` conjugate pairs: one
/// `PairingClass` per valid per-class pair-count vector, ordered
/// lexicographically decreasing (classes pairing the leftmost points come
/// first). Returns an empty list when no assignment exists.
pub fn enumerate_pairings(problem: &Problem, c: u32) -> Vec<PairingClass> {
    let classes = base_classes(problem);
    let maxes: Vec<u32> = classes.iter().map(|e| e.size / 2).collect();
    let mut out = Vec::new();
    let mut counts = vec![0u32; classes.len()];

    fn rec(
        classes: &[ClassEntry],
        maxes: &[u32],
        idx: usize,
        remaining: u32,
        counts: &mut Vec<u32>,
        out: &mut Vec<PairingClass>,
    ) {
        if idx == maxes.len() {
            if remaining == 0 {
                let entries = classes
                    .iter()
                    .zip(counts.iter())
                    .map(|(e, &p)| ClassEntry {
                        weight: e.weight.clone(),
                        k: e.k,
                        size: e.size,
                        pairs: p,
                    })
                    .collect();
                out.push(PairingClass { classes: entries });
            }
            return;
        }
        let cap: u32 = maxes[idx + 1..].iter().sum();
        let hi = remaining.min(maxes[idx]);
        let lo = remaining.saturating_sub(cap);
        let mut p = hi;
        while p >= lo {
            counts[idx] = p;
            rec(classes, maxes, idx + 1, remaining - p, counts, out);
            if p == 0 {
                break;
            }
            p -= 1;
        }
        counts[idx] = 0;
    }

    rec(&classes, &maxes, 0, c, &mut counts, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Golden tables.
// ---------------------------------------------------------------------------

static TABLE1_TOML: &str = include_str!("../data/table1.toml");
static TABLE2_TOML: &str = include_str!("../data/table2.toml");

#[derive(Deserialize)]
struct GoldenTable {
    schema: u32,
    table: u8,
    n: i64,
    max_c: u32,
    #[serde(rename = "row")]
    rows: Vec<GoldenRow>,
}

#[derive(Deserialize)]
struct GoldenRow {
    label: String,
    points: Vec<GoldenPoint>,
    dim: u64,
    cells: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct GoldenPoint {
    weight: Vec<u32>,
    k: u32,
    count: u32,
}

fn parse_golden(text: &str, table_id: u8) -> Result<GoldenTable, BoundsError> {
    let table: GoldenTable =
        toml::from_str(text).map_err(|e| BoundsError::GoldenData(e.to_string()))?;
    if table.schema != 1 {
        return Err(BoundsError::GoldenData(format!(
            "unsupported schema {}",
            table.schema
        )));
    }
    if table.table != table_id {
        return Err(BoundsError::GoldenData(format!(
            "file describes table {}, expected table {}",
            table.table, table_id
        )));
    }
    for row in &table.rows {
        if row.cells.len() != table.max_c as usize {
            return Err(BoundsError::GoldenData(format!(
                "row {:?} has {} cells, expected {}",
                row.label,
                row.cells.len(),
                table.max_c
            )));
        }
    }
    Ok(table)
}

fn golden_source(table_id: u8) -> Result<String, BoundsError> {
    let embedded = match table_id {
        1 => TABLE1_TOML,
        2 => TABLE2_TOML,
        other => return Err(BoundsError::UnknownTable(other)),
    };
    match std::env::var(DATA_DIR_ENV) {
        Ok(dir) => {
            let path = Path::new(&dir).join(format!("table{table_id}.toml"));
            std::fs::read_to_string(&path)
                .map_err(|e| BoundsError::GoldenData(format!("{}: {e}", path.display())))
        }
        Err(_) => Ok(embedded.to_string()),
    }
}

/// Comparison of one table cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellReport {
    /// Number of conjugate pairs for this column.
    pub c: u32,
    /// Golden values in printed order; empty for a blank cell.
    pub expected: Vec<BigInt>,
    /// Computed bounds, one per pairing class, in enumeration order.
    pub computed: Vec<BigInt>,
    /// The pairing classes aligned with `computed`.
    pub classes: Vec<PairingClass>,
}

impl CellReport {
    /// Multiset equality, with one concession to the source's display
    /// convention: a single golden value also matches several computed
    /// classes when every class produces exactly that value (equal bounds
    /// are collapsed into one printed number).
    pub fn matched(&self) -> bool {
        let mut expected = self.expected.clone();
        let mut computed = self.computed.clone();
        expected.sort();
        computed.sort();
        if expected == computed {
            return true;
        }
        if let [single] = expected.as_slice() {
            return !computed.is_empty() && computed.iter().all(|v| v == single);
        }
        false
    }
}

/// Comparison of one table row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowReport {
    /// Verbatim row label from the golden file.
    pub label: String,
    /// The expanded ramification points.
    pub points: Vec<RamificationPoint>,
    /// Golden dimension column.
    pub expected_dim: BigInt,
    /// Computed trivial multiplicity.
    pub computed_dim: BigInt,
    /// One report per `c` column.
    pub cells: Vec<CellReport>,
}

impl RowReport {
    pub fn dim_matched(&self) -> bool {
        self.expected_dim == self.computed_dim
    }

    pub fn all_matched(&self) -> bool {
        self.dim_matched() && self.cells.iter().all(CellReport::matched)
    }
}

/// Full comparison of a golden table against recomputed values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableReport {
    pub table: u8,
    pub n: i64,
    pub max_c: u32,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn all_matched(&self) -> bool {
        self.rows.iter().all(RowReport::all_matched)
    }

    /// Total number of mismatching cells, counting a dimension mismatch
    /// as one cell.
    pub fn mismatch_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| {
                usize::from(!r.dim_matched())
                    + r.cells.iter().filter(|c| !c.matched()).count()
            })
            .sum()
    }
}

fn golden_row_problem(n: i64, row: &GoldenRow) -> Result<Problem, BoundsError> {
    let mut points = Vec::new();
    for p in &row.points {
        for _ in 0..p.count {
            points.push(RamificationPoint::new(Weight::new(p.weight.clone()), p.k));
        }
    }
    Problem::new(n, points)
}

fn compute_row(n: i64, max_c: u32, row: &GoldenRow) -> Result<RowReport, BoundsError> {
    let problem = golden_row_problem(n, row)?;
    let computed_dim = trivial_multiplicity(&problem);
    let mut cells = Vec::with_capacity(max_c as usize);
    for c in 1..=max_c {
        let classes = enumerate_pairings(&problem, c);
        let computed: Vec<BigInt> = classes
            .iter()
            .map(|class| signature_of_class(&problem, class).abs())
            .collect();
        let expected = row.cells[(c - 1) as usize]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        cells.push(CellReport {
            c,
            expected,
            computed,
            classes,
        });
    }
    Ok(RowReport {
        label: row.label.clone(),
        points: problem.points().to_vec(),
        expected_dim: BigInt::from(row.dim),
        computed_dim,
        cells,
    })
}

/// Recomputes every row of a golden table and compares cell by cell.
/// Sequential evaluation; see [`reproduce_table_with_jobs`].
pub fn reproduce_table(table_id: u8) -> Result<TableReport, BoundsError> {
    reproduce_table_with_jobs(table_id, 1)
}

/// Like [`reproduce_table`], evaluating rows on up to `jobs` worker
/// threads. Row computations are pure and the report is assembled in row
/// order, so the result is identical for any job count.
pub fn reproduce_table_with_jobs(table_id: u8, jobs: usize) -> Result<TableReport, BoundsError> {
    let golden = parse_golden(&golden_source(table_id)?, table_id)?;
    let workers = jobs.max(1).min(golden.rows.len().max(1));
    let slots: Mutex<Vec<Option<Result<RowReport, BoundsError>>>> =
        Mutex::new(vec![None; golden.rows.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= golden.rows.len() {
                    break;
                }
                let report = compute_row(golden.n, golden.max_c, &golden.rows[i]);
                slots.lock().expect("row slot lock poisoned")[i] = Some(report);
            });
        }
    });
    let rows = slots
        .into_inner()
        .expect("row slot lock poisoned")
        .into_iter()
        .map(|slot| slot.expect("every row computed"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TableReport {
        table: golden.table,
        n: golden.n,
        max_c: golden.max_c,
        rows,
    })
}
