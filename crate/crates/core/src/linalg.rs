//! Small dense exact linear algebra: row reduction, kernels and solves.

use crate::scalar::ExactField;
use crate::vector::Vector;

/// Reduced row echelon form of `rows` (each of length `ncols`). Returns the
/// nonzero reduced rows and their pivot columns.
pub fn rref<F: ExactField>(rows: &[Vec<F>], ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(pivot) {
                    *x = x.clone() - p * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<F: ExactField>(vectors: &[Vector<F>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let rows: Vec<Vec<F>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    rref(&rows, first.dim()).1.len()
}

/// Basis of `{ x : row . x = 0 for every row }` in dimension `ncols`.
pub fn kernel<F: ExactField>(rows: &[Vector<F>], ncols: usize) -> Vec<Vector<F>> {
    let raw: Vec<Vec<F>> = rows.iter().map(|v| v.coords().to_vec()).collect();
    let (red, pivots) = rref(&raw, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = Vector::zeros(ncols);
            x[f] = F::one();
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve<F: ExactField>(a: &[Vector<F>], b: &[F], ncols: usize) -> Option<Vector<F>> {
    let aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.coords().to_vec();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = Vector::zeros(ncols);
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Unique solution of a square system, `None` if singular.
pub fn solve_unique<F: ExactField>(a: &[Vector<F>], b: &[F]) -> Option<Vector<F>> {
    let n = a.len();
    if a.iter().any(|r| r.dim() != n) {
        return None;
    }
    let rows: Vec<Vec<F>> = a.iter().map(|v| v.coords().to_vec()).collect();
    if rref(&rows, n).1.len() < n {
        return None;
    }
    solve(a, b, n)
}

/// Coefficients `c` with `sum c_i basis_i = target`, for a linearly
/// independent `basis`; `None` when `target` is outside the span.
pub fn coordinates_in<F: ExactField>(basis: &[Vector<F>], target: &Vector<F>) -> Option<Vec<F>> {
    let d = target.dim();
    let k = basis.len();
    // rows indexed by ambient coordinate, columns by basis vector
    let a: Vec<Vector<F>> = (0..d)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    let x = solve(&a, target.coords(), k)?;
    Some(x.into_coords())
}

/// Inverse of a square matrix given by rows.
pub fn inverse<F: ExactField>(rows: &[Vector<F>]) -> Option<Vec<Vector<F>>> {
    let n = rows.len();
    let aug: Vec<Vec<F>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.coords().to_vec();
            v.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            v
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| Vector::new(r[n..].to_vec())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn v(xs: &[i64]) -> Vector<Rational> {
        Vector::from_ints(xs)
    }

    #[test]
    fn kernel_of_sum_functional() {
        let k = kernel(&[v(&[1, 1, 1])], 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(x.sum().is_zero());
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = [v(&[1, 1]), v(&[2, 2])];
        let b = [Rational::from_integer(1.into()), Rational::from_integer(3.into())];
        assert!(solve(&a, &b, 2).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = [v(&[2, 1]), v(&[1, 1])];
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![v(&[1, -1]), v(&[-1, 2])]);
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
    }

    #[test]
    fn coordinates_in_span() {
        let basis = [v(&[1, -1, 0]), v(&[0, 1, -1])];
        let c = coordinates_in(&basis, &v(&[1, 0, -1])).unwrap();
        assert_eq!(c, vec![Rational::from_integer(1.into()); 2]);
        assert!(coordinates_in(&basis, &v(&[1, 0, 0])).is_none());
    }
}
