//! Jacobi kernels for small dense complex matrices.

use num_complex::Complex;

use super::haar::dot;
use super::{CMatrix, Real};

const MAX_SWEEPS: usize = 80;

/// Descending spectrum plus the relative reconstruction residual.
#[derive(Clone, Debug)]
pub struct Decomposition<F> {
    pub values: Vec<F>,
    pub residual: F,
}

fn sign<F: Real>(x: F) -> F {
    if x < F::zero() {
        -F::one()
    } else {
        F::one()
    }
}

/// `(c, s)` of the real rotation annihilating the off-diagonal entry `g`
/// of the symmetric 2x2 block `[[a, g], [g, b]]`, `g > 0`.
fn rotation<F: Real>(a: F, b: F, g: F) -> (F, F) {
    let two = F::one() + F::one();
    let zeta = (b - a) / (two * g);
    let t = sign(zeta) / (zeta.abs() + (F::one() + zeta * zeta).sqrt());
    let c = F::one() / (F::one() + t * t).sqrt();
    (c, c * t)
}

fn rotate_columns<F: Real>(cols: &mut [Vec<Complex<F>>], i: usize, j: usize, c: F, s: F) {
    let (left, right) = cols.split_at_mut(j);
    for (x, y) in left[i].iter_mut().zip(right[0].iter_mut()) {
        let (a, b) = (*x, *y);
        *x = a * c - b * s;
        *y = a * s + b * c;
    }
}

fn scale_column<F: Real>(col: &mut [Complex<F>], z: Complex<F>) {
    for x in col.iter_mut() {
        *x = *x * z;
    }
}

type Columns<F> = Vec<Vec<Complex<F>>>;

/// One-sided (Hestenes) Jacobi: returns `G = M V` with orthogonal columns
/// and the unitary `V`, as column lists.
fn hestenes<F: Real>(mut g: Columns<F>) -> (Columns<F>, Columns<F>) {
    let n = g.len();
    let mut v: Vec<Vec<Complex<F>>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Complex::new(if i == j { F::one() } else { F::zero() }, F::zero()))
                .collect()
        })
        .collect();
    let eps = F::epsilon();
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n {
            for j in i + 1..n {
                let a = dot(&g[i], &g[i]).re;
                let b = dot(&g[j], &g[j]).re;
                let gam = dot(&g[i], &g[j]);
                let m = gam.norm();
                if m <= eps * (a * b).sqrt() || m <= F::min_positive_value() {
                    continue;
                }
                rotated = true;
                // make g_i* g_j real and positive, then rotate
                let phase = (gam / m).conj();
                scale_column(&mut g[j], phase);
                scale_column(&mut v[j], phase);
                let (c, s) = rotation(a, b, m);
                rotate_columns(&mut g, i, j, c, s);
                rotate_columns(&mut v, i, j, c, s);
            }
        }
        if !rotated {
            break;
        }
    }
    (g, v)
}

fn relative<F: Real>(diff: F, scale: F) -> F {
    if scale > F::zero() {
        diff / scale
    } else {
        diff
    }
}

/// Singular values of `m`, descending, `min(rows, cols)` of them.
pub fn singular_values<F: Real>(m: &CMatrix<F>) -> Decomposition<F> {
    let tall = m.rows() >= m.cols();
    let work = if tall { m.clone() } else { m.adjoint() };
    let cols: Vec<Vec<Complex<F>>> = (0..work.cols()).map(|j| work.column(j)).collect();
    let (g, v) = hestenes(cols);
    let gm = CMatrix::from_columns(work.rows(), &g);
    let vm = CMatrix::from_columns(work.cols(), &v);
    // work = G V*
    let rebuilt = gm.mul(&vm.adjoint());
    let residual = relative(work.sub(&rebuilt).frobenius_norm(), work.frobenius_norm());
    let mut values: Vec<F> = g
        .iter()
        .map(|c| c.iter().fold(F::zero(), |a, z| a + z.norm_sqr()).sqrt())
        .collect();
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Decomposition { values, residual }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi, descending.
pub fn hermitian_eigenvalues<F: Real>(m: &CMatrix<F>) -> Decomposition<F> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "square matrix expected");
    let mut a = m.clone();
    let mut v = CMatrix::identity(n);
    let scale = m.frobenius_norm();
    let eps = F::epsilon();
    for _ in 0..MAX_SWEEPS {
        let mut off = F::zero();
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= eps * scale || off <= F::min_positive_value() {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= F::min_positive_value() {
                    continue;
                }
                // A <- D* A D with D = diag(.., conj(phase) at q, ..)
                let e = apq / mag;
                for k in 0..n {
                    a[(k, q)] = a[(k, q)] * e.conj();
                    v[(k, q)] = v[(k, q)] * e.conj();
                }
                for k in 0..n {
                    a[(q, k)] = a[(q, k)] * e;
                }
                let (c, s) = rotation(a[(p, p)].re, a[(q, q)].re, mag);
                for k in 0..n {
                    let (x, y) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = x * c - y * s;
                    a[(k, q)] = x * s + y * c;
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = x * c - y * s;
                    v[(k, q)] = x * s + y * c;
                }
                for k in 0..n {
                    let (x, y) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = x * c - y * s;
                    a[(q, k)] = x * s + y * c;
                }
            }
        }
    }
    let diag: Vec<F> = (0..n).map(|i| a[(i, i)].re).collect();
    let rebuilt = v.mul(&CMatrix::from_diag(n, n, &diag)).mul(&v.adjoint());
    let residual = relative(m.sub(&rebuilt).frobenius_norm(), scale);
    let mut values = diag;
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    Decomposition { values, residual }
}
