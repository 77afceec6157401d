use std::ops::{Index, IndexMut};

use num_complex::Complex;

use super::Real;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<F>>,
}

impl<F: Real> CMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::new(F::zero(), F::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(F::one(), F::zero());
        }
        m
    }

    /// `rows x cols` with `diag` on the leading diagonal.
    pub fn from_diag(rows: usize, cols: usize, diag: &[F]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = Complex::new(*d, F::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex<F>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn frobenius_norm(&self) -> F {
        self.data.iter().fold(F::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    /// `|| self* self - I ||_F`.
    pub fn unitarity_defect(&self) -> F {
        self.adjoint().mul(self).sub(&Self::identity(self.cols)).frobenius_norm()
    }

    pub fn column(&self, j: usize) -> Vec<Complex<F>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Complex<F>>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }
}

impl<F> Index<(usize, usize)> for CMatrix<F> {
    type Output = Complex<F>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<F> {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for CMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<F> {
        &mut self.data[i * self.cols + j]
    }
}
