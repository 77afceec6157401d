use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::polytope::Polytope;
use crate::scalar::ExactField;
use crate::sympair::{PairLabel, SymmetricPair};
use crate::vector::Vector;

use super::{sample_eigen_sum, sample_singular_sum, Field, FrameMode, Real, SpectrumSample, DECOMPOSITION_TOL};

/// Trials per RNG substream.
const CHUNK: usize = 250;
/// Violations kept verbatim in a report; the count is always exact.
const MAX_RECORDED: usize = 200;

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloConfig {
    pub trials: usize,
    pub tol: f64,
    pub seed: u64,
    /// Fraction of trials drawn with shared frames and a random signed
    /// permutation of `mu`; these land on `lambda + v mu` for Weyl
    /// elements `v` and so reach vertices of the polytope.
    pub aligned_fraction: f64,
}

impl MonteCarloConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        Self { trials, tol: 1e-8, seed, aligned_fraction: 0.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub trial: usize,
    pub sample: Vec<f64>,
    pub inequality: String,
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub pair: String,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub decomposition_tol: f64,
    pub aligned_fraction: f64,
    pub aligned_trials: usize,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    /// Samples with `nu_1 > lambda_1 + mu_1 + tol`.
    pub weyl_violations: usize,
    pub max_residual: f64,
    /// Samples whose decomposition residual exceeded `decomposition_tol`.
    pub residual_failures: usize,
    /// Smallest distance from any sample to each vertex.
    pub vertex_coverage: BTreeMap<String, f64>,
}

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0 && self.weyl_violations == 0 && self.residual_failures == 0
    }

    fn empty(pair: String, config: &MonteCarloConfig, vertices: &[String]) -> Self {
        Self {
            pair,
            trials: 0,
            seed: config.seed,
            tol: config.tol,
            decomposition_tol: DECOMPOSITION_TOL,
            aligned_fraction: config.aligned_fraction,
            aligned_trials: 0,
            violation_count: 0,
            violations: Vec::new(),
            weyl_violations: 0,
            max_residual: 0.0,
            residual_failures: 0,
            vertex_coverage: vertices.iter().map(|v| (v.clone(), f64::INFINITY)).collect(),
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.trials += other.trials;
        self.aligned_trials += other.aligned_trials;
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
        self.violations.sort_by_key(|v| v.trial);
        self.violations.truncate(MAX_RECORDED);
        self.weyl_violations += other.weyl_violations;
        self.max_residual = self.max_residual.max(other.max_residual);
        self.residual_failures += other.residual_failures;
        for (k, d) in other.vertex_coverage {
            let e = self.vertex_coverage.entry(k).or_insert(f64::INFINITY);
            *e = e.min(d);
        }
        self
    }
}

#[derive(Clone, Copy, Debug)]
enum Sampler {
    Eigen { field: Field },
    Singular { q: usize, field: Field },
}

fn sampler_for<E: ExactField>(pair: &SymmetricPair<E>) -> Result<Sampler> {
    match pair.label() {
        PairLabel::AI(_) => Ok(Sampler::Eigen { field: Field::Real }),
        PairLabel::AIII(_, q) => Ok(Sampler::Singular { q, field: Field::Complex }),
        PairLabel::BDI(p, q) if p < q => Ok(Sampler::Singular { q, field: Field::Real }),
        other => Err(Error::Unsupported(format!("no spectral sampler for {other}"))),
    }
}

fn to_float<F: Real>(x: f64) -> F {
    F::from(x).expect("f64 converts into the sampling float")
}

/// Draws spectra for `(lambda, mu)` with the sampler matching the pair
/// (real symmetric eigenvalues for `AI`, complex singular values for
/// `AIII`, real singular values for `BDI`) and checks each against `poly`.
pub fn monte_carlo_check<F, E>(
    pair: &SymmetricPair<E>,
    lambda: &Vector<E>,
    mu: &Vector<E>,
    poly: &Polytope<E>,
    config: &MonteCarloConfig,
) -> Result<OracleReport>
where
    F: Real,
    E: ExactField,
    StandardNormal: Distribution<F>,
{
    let sampler = sampler_for(pair)?;
    pair.check_dominant(lambda)?;
    pair.check_dominant(mu)?;
    check_dim(pair.a_dim(), poly.dim())?;
    if !(0.0..=1.0).contains(&config.aligned_fraction) || config.tol.is_nan() || config.tol < 0.0 {
        return Err(Error::Parameter("aligned fraction must lie in [0, 1] and tol must be >= 0".into()));
    }
    let lam: Vec<F> = lambda.to_f64().into_iter().map(to_float).collect();
    let mu_f: Vec<F> = mu.to_f64().into_iter().map(to_float).collect();
    let rows: Vec<(Vec<F>, F, String)> = poly
        .inequalities()
        .iter()
        .map(|h| {
            (
                h.normal().to_f64().into_iter().map(to_float).collect(),
                to_float(h.offset().to_f64()),
                h.to_string(),
            )
        })
        .collect();
    let vertices: Vec<(String, Vec<F>)> = poly
        .known_vertices()
        .unwrap_or(&[])
        .iter()
        .map(|v| (v.to_string(), v.to_f64().into_iter().map(to_float).collect()))
        .collect();
    let names: Vec<String> = vertices.iter().map(|(s, _)| s.clone()).collect();
    let label = pair.label().to_string();
    let tol: F = to_float(config.tol);
    let weyl_bound = lam[0] + mu_f[0] + tol;

    let chunks = config.trials.div_ceil(CHUNK);
    let report = (0..chunks)
        .into_par_iter()
        .map(|chunk| -> Result<OracleReport> {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(chunk as u64);
            let mut rep = OracleReport::empty(label.clone(), config, &names);
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(config.trials);
            for trial in start..end {
                let aligned = config.aligned_fraction > 0.0 && rng.random::<f64>() < config.aligned_fraction;
                let frames = if aligned {
                    let mut perm: Vec<usize> = (0..lam.len()).collect();
                    perm.shuffle(&mut rng);
                    let signs = (0..lam.len()).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
                    FrameMode::Twisted { perm, signs }
                } else {
                    FrameMode::Independent
                };
                let s: SpectrumSample<F> = match sampler {
                    Sampler::Eigen { field } => sample_eigen_sum(&lam, &mu_f, field, &frames, &mut rng)?,
                    Sampler::Singular { q, field } => {
                        sample_singular_sum(&lam, &mu_f, q, field, &frames, &mut rng)?
                    }
                };
                rep.trials += 1;
                rep.aligned_trials += usize::from(aligned);
                let res = s.residual.to_f64().unwrap_or(f64::INFINITY);
                rep.max_residual = rep.max_residual.max(res);
                if res > DECOMPOSITION_TOL {
                    rep.residual_failures += 1;
                }
                if s.values[0] > weyl_bound {
                    rep.weyl_violations += 1;
                }
                for (normal, offset, text) in &rows {
                    let lhs = normal.iter().zip(&s.values).fold(F::zero(), |a, (n, x)| a + *n * *x);
                    let margin = lhs - *offset;
                    if margin > tol {
                        rep.violation_count += 1;
                        if rep.violations.len() < MAX_RECORDED {
                            rep.violations.push(Violation {
                                trial,
                                sample: s.values.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(),
                                inequality: text.clone(),
                                margin: margin.to_f64().unwrap_or(f64::NAN),
                            });
                        }
                    }
                }
                for (name, v) in &vertices {
                    let d = v
                        .iter()
                        .zip(&s.values)
                        .fold(F::zero(), |a, (x, y)| a + (*x - *y) * (*x - *y))
                        .sqrt()
                        .to_f64()
                        .unwrap_or(f64::INFINITY);
                    let e = rep.vertex_coverage.get_mut(name).expect("vertex registered");
                    *e = e.min(d);
                }
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(OracleReport::empty(label.clone(), config, &names), OracleReport::merge);
    Ok(report)
}
