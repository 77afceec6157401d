//! Floating-point Monte-Carlo oracle: sums of matrices with prescribed
//! singular or eigenvalue spectra in Haar-random frames, and membership of
//! their spectra in exact polytopes.

mod haar;
mod jacobi;
mod matrix;
mod oracle;

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

pub use haar::haar_frame;
pub use jacobi::{hermitian_eigenvalues, singular_values, Decomposition};
pub use matrix::CMatrix;
pub use oracle::{monte_carlo_check, MonteCarloConfig, OracleReport, Violation};

use crate::error::{Error, Result};

/// Scalar type of the floating-point side.
pub trait Real: num_traits::Float + Send + Sync + std::fmt::Debug + 'static {}

impl<T: num_traits::Float + Send + Sync + std::fmt::Debug + 'static> Real for T {}

/// Decomposition residual accepted by the samplers.
pub const DECOMPOSITION_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Singular,
    Eigen,
}

/// How the frame of the second summand relates to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameMode {
    /// Independent Haar frames.
    Independent,
    /// Shared frames: the sum is diagonal in one basis.
    Aligned,
    /// Shared frames with the second spectrum permuted and signed:
    /// entry `i` becomes `signs[i] * mu[perm[i]]`. Signs are ignored for
    /// eigenvalue sums.
    Twisted { perm: Vec<usize>, signs: Vec<i8> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumSample<F> {
    pub values: Vec<F>,
    pub kind: SpectrumKind,
    pub residual: F,
}

fn check_descending<F: Real>(name: &str, xs: &[F], nonneg: bool) -> Result<()> {
    if xs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parameter(format!("{name} must be descending")));
    }
    if nonneg && xs.iter().any(|x| *x < F::zero()) {
        return Err(Error::Parameter(format!("{name} must be nonnegative")));
    }
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(Error::Parameter(format!("{name} must be finite")));
    }
    Ok(())
}

fn second_spectrum<F: Real>(mu: &[F], frames: &FrameMode, signed: bool) -> Result<Vec<F>> {
    match frames {
        FrameMode::Independent | FrameMode::Aligned => Ok(mu.to_vec()),
        FrameMode::Twisted { perm, signs } => {
            let n = mu.len();
            let mut seen = vec![false; n];
            if perm.len() != n || signs.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
                return Err(Error::Parameter("twist must be a signed permutation of the spectrum".into()));
            }
            Ok((0..n)
                .map(|i| {
                    let x = mu[perm[i]];
                    if signed && signs[i] < 0 {
                        -x
                    } else {
                        x
                    }
                })
                .collect())
        }
    }
}

/// Singular spectrum of `A + B` for `p x q` matrices `A = C1 S_lambda D1*`,
/// `B = C2 S_mu D2*` with Haar frames (`p = lambda.len() <= q`).
pub fn sample_singular_sum<F, R>(
    lambda: &[F],
    mu: &[F],
    q: usize,
    field: Field,
    frames: &FrameMode,
    rng: &mut R,
) -> Result<SpectrumSample<F>>
where
    F: Real,
    R: Rng + ?Sized,
    StandardNormal: Distribution<F>,
{
    let p = lambda.len();
    if p == 0 || mu.len() != p || p > q {
        return Err(Error::Parameter(format!(
            "need 1 <= p <= q with |lambda| = |mu| = p, got p={p}, |mu|={}, q={q}",
            mu.len()
        )));
    }
    check_descending("lambda", lambda, true)?;
    check_descending("mu", mu, true)?;
    let c1 = haar_frame(p, field, rng);
    let d1 = haar_frame(q, field, rng);
    let (c2, d2) = match frames {
        FrameMode::Independent => (haar_frame(p, field, rng), haar_frame(q, field, rng)),
        _ => (c1.clone(), d1.clone()),
    };
    let mu2 = second_spectrum(mu, frames, true)?;
    let a = c1.mul(&CMatrix::from_diag(p, q, lambda)).mul(&d1.adjoint());
    let b = c2.mul(&CMatrix::from_diag(p, q, &mu2)).mul(&d2.adjoint());
    let dec = singular_values(&a.add(&b));
    Ok(SpectrumSample { values: dec.values, kind: SpectrumKind::Singular, residual: dec.residual })
}

/// Eigenvalues of `A + B` for Hermitian (`Complex`) or real symmetric
/// (`Real`) matrices with spectra `lambda`, `mu` in Haar frames.
pub fn sample_eigen_sum<F, R>(
    lambda: &[F],
    mu: &[F],
    field: Field,
    frames: &FrameMode,
    rng: &mut R,
) -> Result<SpectrumSample<F>>
where
    F: Real,
    R: Rng + ?Sized,
    StandardNormal: Distribution<F>,
{
    let n = lambda.len();
    if n == 0 || mu.len() != n {
        return Err(Error::Parameter(format!("spectra lengths {n} and {} differ or are empty", mu.len())));
    }
    check_descending("lambda", lambda, false)?;
    check_descending("mu", mu, false)?;
    let q1 = haar_frame(n, field, rng);
    let q2 = match frames {
        FrameMode::Independent => haar_frame(n, field, rng),
        _ => q1.clone(),
    };
    let mu2 = second_spectrum(mu, frames, false)?;
    let a = q1.mul(&CMatrix::from_diag(n, n, lambda)).mul(&q1.adjoint());
    let b = q2.mul(&CMatrix::from_diag(n, n, &mu2)).mul(&q2.adjoint());
    let sum = a.add(&b);
    // symmetrize away rounding so the kernel sees an exactly Hermitian input
    let herm = CMatrix::from_fn(n, n, |i, j| {
        let two = F::one() + F::one();
        (sum[(i, j)] + sum[(j, i)].conj()) / Complex::new(two, F::zero())
    });
    let dec = hermitian_eigenvalues(&herm);
    Ok(SpectrumSample { values: dec.values, kind: SpectrumKind::Eigen, residual: dec.residual })
}
