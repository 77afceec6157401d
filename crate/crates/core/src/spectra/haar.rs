use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{CMatrix, Field, Real};

/// Haar-distributed element of `O(n)` or `U(n)`: the `Q` factor of a
/// Gaussian matrix, taken with positive diagonal in `R` (Gram-Schmidt with
/// one reorthogonalization pass).
pub fn haar_frame<F, R>(n: usize, field: Field, rng: &mut R) -> CMatrix<F>
where
    F: Real,
    R: Rng + ?Sized,
    StandardNormal: Distribution<F>,
{
    assert!(n >= 1, "frame size must be positive");
    let mut cols: Vec<Vec<Complex<F>>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let re: F = StandardNormal.sample(rng);
                    let im: F = match field {
                        Field::Real => F::zero(),
                        Field::Complex => StandardNormal.sample(rng),
                    };
                    Complex::new(re, im)
                })
                .collect()
        })
        .collect();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let proj = dot(&cols[k], &cols[j]);
                let qk = cols[k].clone();
                for (x, q) in cols[j].iter_mut().zip(&qk) {
                    *x = *x - q * proj;
                }
            }
        }
        let norm = cols[j].iter().fold(F::zero(), |a, z| a + z.norm_sqr()).sqrt();
        for x in cols[j].iter_mut() {
            *x = *x / norm;
        }
    }
    CMatrix::from_columns(n, &cols)
}

/// `a* b`
pub(crate) fn dot<F: Real>(a: &[Complex<F>], b: &[Complex<F>]) -> Complex<F> {
    a.iter()
        .zip(b)
        .fold(Complex::new(F::zero(), F::zero()), |acc, (x, y)| acc + x.conj() * y)
}
