//! Matrix-level oracle for the tensor-square flip signs.
//!
//! For the defining representation V of each small algebra, this test
//! builds the algebra action on V ⊗ V from explicit matrices, computes
//! the invariant subspace as an exact rational kernel, checks it is a
//! line, and reads off the eigenvalue of the factor swap on that line.
//! The sign must agree with the two-cycle character value and with the
//! one-pair signature — three independent code paths.
//!
//! The construction is self-validating: every generator is checked
//! against the defining equation Xᵀ J + J X = 0 of the algebra, and the
//! generator span is checked to have the algebra's dimension.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use selfdual::bounds::{signature, PairingSpec, Problem};
use selfdual::characters::{char_value, CycleGroup};
use selfdual::lie::{make_context, RamificationPoint, Weight};

type Mat = Vec<Vec<BigRational>>;

fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![BigRational::zero(); cols]; rows]
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Xᵀ J + J X.
fn form_defect(x: &Mat, j: &Mat) -> Mat {
    let n = x.len();
    let mut out = zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let mut acc = BigRational::zero();
            for c in 0..n {
                acc += &x[c][a] * &j[c][b] + &j[a][c] * &x[c][b];
            }
            out[a][b] = acc;
        }
    }
    out
}

fn is_zero_mat(m: &Mat) -> bool {
    m.iter().flatten().all(|e| e.is_zero())
}

/// Action of x on V ⊗ V: x ⊗ I + I ⊗ x, rows/cols indexed by a*n + b.
fn tensor_square_action(x: &Mat) -> Mat {
    let n = x.len();
    let mut out = zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // (x ⊗ I): basis e_c ⊗ e_b picks up x[a][c] on e_a ⊗ e_b.
                out[a * n + b][c * n + b] += &x[a][c];
                // (I ⊗ x): basis e_a ⊗ e_c picks up x[b][c] on e_a ⊗ e_b.
                out[a * n + b][a * n + c] += &x[b][c];
            }
        }
    }
    out
}

/// Reduced row echelon form; returns (rank, kernel basis).
fn rank_and_kernel(mut m: Mat, cols: usize) -> (usize, Vec<Vec<BigRational>>) {
    m.retain(|row| row.iter().any(|e| !e.is_zero()));
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(r) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, r);
        let inv = m[row][col].clone();
        for c in col..cols {
            let v = &m[row][c] / &inv;
            m[row][c] = v;
        }
        for r2 in 0..m.len() {
            if r2 != row && !m[r2][col].is_zero() {
                let f = m[r2][col].clone();
                for c in col..cols {
                    let v = &m[r2][c] - &f * &m[row][c];
                    m[r2][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (pr, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[pr][free].clone();
        }
        kernel.push(v);
    }
    (pivots.len(), kernel)
}

struct DefiningRep {
    /// Matrix size N and the generators F_ij spanning the algebra.
    generators: Vec<Mat>,
    /// The invariant bilinear form J.
    form: Mat,
    /// Expected dimension of the algebra.
    algebra_dim: usize,
}

/// Orthogonal algebra preserving the antidiagonal symmetric form on C^n:
/// F_ij = E_ij - E_{n+1-j, n+1-i} (1-indexed).
fn orthogonal_rep(n: usize) -> DefiningRep {
    let mut generators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut f = zeros(n, n);
            f[i][j] += rat(1);
            f[n - 1 - j][n - 1 - i] -= rat(1);
            generators.push(f);
        }
    }
    let mut form = zeros(n, n);
    for a in 0..n {
        form[a][n - 1 - a] = rat(1);
    }
    let r = (n - 1) / 2;
    DefiningRep {
        generators,
        form,
        algebra_dim: r * (2 * r + 1),
    }
}

/// Symplectic algebra preserving the antidiagonal alternating form on
/// C^4: F_ij = E_ij - ε_i ε_j E_{5-j, 5-i} (1-indexed), ε = (1,1,-1,-1).
fn symplectic_rep_4() -> DefiningRep {
    let n = 4;
    let eps = [1i64, 1, -1, -1];
    let mut generators = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut f = zeros(n, n);
            f[i][j] += rat(1);
            let sign = rat(eps[i] * eps[j]);
            f[n - 1 - j][n - 1 - i] -= sign;
            generators.push(f);
        }
    }
    let mut form = zeros(n, n);
    for a in 0..n {
        form[a][n - 1 - a] = rat(eps[a]);
    }
    DefiningRep {
        generators,
        form,
        algebra_dim: 10,
    }
}

/// Eigenvalue of the factor swap on the invariant line of V ⊗ V.
fn flip_sign(rep: &DefiningRep) -> i64 {
    let n = rep.form.len();

    // Self-validation 1: every generator preserves the form.
    for (idx, g) in rep.generators.iter().enumerate() {
        assert!(
            is_zero_mat(&form_defect(g, &rep.form)),
            "generator {idx} does not preserve the form"
        );
    }

    // Self-validation 2: the generators span an algebra of the expected
    // dimension.
    let flattened: Mat = rep
        .generators
        .iter()
        .map(|g| g.iter().flatten().cloned().collect())
        .collect();
    let (span_dim, _) = rank_and_kernel(flattened, n * n);
    assert_eq!(span_dim, rep.algebra_dim, "generator span dimension");

    // Invariants of V ⊗ V: common kernel of all generator actions.
    let mut stacked: Mat = Vec::new();
    for g in &rep.generators {
        stacked.extend(tensor_square_action(g));
    }
    let (_, kernel) = rank_and_kernel(stacked, n * n);
    assert_eq!(kernel.len(), 1, "invariant space of V ⊗ V must be a line");
    let v = &kernel[0];

    // Apply the swap e_a ⊗ e_b -> e_b ⊗ e_a.
    let mut swapped = vec![BigRational::zero(); n * n];
    for a in 0..n {
        for b in 0..n {
            swapped[a * n + b] = v[b * n + a].clone();
        }
    }
    let plus: Vec<BigRational> = v.clone();
    let minus: Vec<BigRational> = v.iter().map(|e| -e.clone()).collect();
    if swapped == plus {
        1
    } else if swapped == minus {
        -1
    } else {
        panic!("swap does not act by a sign on the invariant line");
    }
}

/// All three routes to the flip sign must agree: explicit matrices,
/// the two-cycle character, and the one-pair signature.
fn check_rep(n_space: i64, rep: &DefiningRep, defining_weight: &[u32]) {
    let matrix_sign = BigInt::from(flip_sign(rep));

    let ctx = make_context(n_space).unwrap();
    let w = Weight::new(defining_weight.to_vec());
    let groups = [CycleGroup::new(w.clone(), vec![2]).unwrap()];
    let mu = Weight::new(vec![0; ctx.rank()]);
    let character_sign = char_value(&ctx, &groups, &mu);

    let problem = Problem::new(
        n_space,
        vec![
            RamificationPoint::new(w.clone(), 0),
            RamificationPoint::new(w, 0),
        ],
    )
    .unwrap();
    let spec = PairingSpec::new(&problem, &[(0, 1)]).unwrap();
    let signature_sign = signature(&problem, &spec);

    assert!(matrix_sign.abs().is_one());
    assert_eq!(matrix_sign, character_sign, "matrix vs character route");
    assert_eq!(matrix_sign, signature_sign, "matrix vs signature route");
}

#[test]
fn so5_flip_on_vector_invariant_is_plus_one() {
    let rep = orthogonal_rep(5);
    assert_eq!(flip_sign(&rep), 1);
    check_rep(4, &rep, &[1, 0]);
}

#[test]
fn sp4_flip_on_defining_invariant_is_minus_one() {
    let rep = symplectic_rep_4();
    assert_eq!(flip_sign(&rep), -1);
    check_rep(5, &rep, &[1, 0]);
}

#[test]
fn so7_flip_on_vector_invariant_is_plus_one() {
    let rep = orthogonal_rep(7);
    assert_eq!(flip_sign(&rep), 1);
    check_rep(6, &rep, &[1, 0, 0]);
}
