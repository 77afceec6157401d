//! Compact symmetric pairs from a closed catalog, with their restricted
//! root systems and the maps between `t*` and `a*` coordinates.
//!
//! | label | ambient | restricted | embed |
//! |---|---|---|---|
//! | `AI:n` | `A_{n-1}` | `A_{n-1}` | identity |
//! | `AIII:p,q` | `A_{p+q-1}` | `BC_p` (`C_p` if `p = q`) | `(l, 0^{q-p}, -l_p..-l_1)` |
//! | `BDI:p,q` | `B_m` or `D_m`, `m = (p+q)/2` | `B_p` (`D_p` if `p = q`) | `(l, 0..0)` |
//! | `Torus:n` | rank 0 on `n` coords | same | identity |
//! | `Diag:Xr` | `X_r + X_r` | `X_r` | `x -> (x/2, x/2)` |
//!
//! `restrict` is the left inverse of `embed`. For `AIII` the restriction
//! of an ambient root is half of a restricted root; the factor is exposed
//! as [`SymmetricPair::root_scale`].

mod bruhat;
mod hulls;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use bruhat::RestrictedWeylGroup;
pub use hulls::{bruhat_leq, kostant_polytope, orbit_closure_points, orbit_closure_polytope, weyl_hull};

use crate::error::{check_dim, Error, Result};
use crate::polytope::AffineMap;
use crate::rootsys::{build_root_system, Family, RootSystem, WeylElement};
use crate::scalar::{two, ExactField};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairLabel {
    AI(usize),
    AIII(usize, usize),
    BDI(usize, usize),
    Torus(usize),
    Diagonal(Family, usize),
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairLabel::AI(n) => write!(f, "AI:{n}"),
            PairLabel::AIII(p, q) => write!(f, "AIII:{p},{q}"),
            PairLabel::BDI(p, q) => write!(f, "BDI:{p},{q}"),
            PairLabel::Torus(n) => write!(f, "Torus:{n}"),
            PairLabel::Diagonal(fam, r) => write!(f, "Diag:{fam}{r}"),
        }
    }
}

impl FromStr for PairLabel {
    type Err = Error;

    /// `AI:4`, `AIII:2,2`, `BDI:2,3`, `Torus:3`, `Diag:A3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("unknown pair label {s:?}"));
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = || -> Result<Vec<usize>> {
            args.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match kind.trim() {
            "AI" => match nums()?[..] {
                [n] => Ok(PairLabel::AI(n)),
                _ => Err(bad()),
            },
            "AIII" => match nums()?[..] {
                [p, q] => Ok(PairLabel::AIII(p, q)),
                _ => Err(bad()),
            },
            "BDI" => match nums()?[..] {
                [p, q] => Ok(PairLabel::BDI(p, q)),
                _ => Err(bad()),
            },
            "Torus" => match nums()?[..] {
                [n] => Ok(PairLabel::Torus(n)),
                _ => Err(bad()),
            },
            "Diag" => {
                let args = args.trim();
                let split = args.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
                let fam: Family = args[..split].parse()?;
                let rank = args[split..].parse::<usize>().map_err(|_| bad())?;
                Ok(PairLabel::Diagonal(fam, rank))
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymmetricPair<F> {
    label: PairLabel,
    ambient: RootSystem<F>,
    restricted: RootSystem<F>,
    restrict_map: AffineMap<F>,
    embed_map: AffineMap<F>,
    root_scale: F,
    weyl: RestrictedWeylGroup<F>,
}

/// Matrix rows from an entry function `(row, col) -> value`.
fn matrix_rows<F: ExactField>(
    rows: usize,
    cols: usize,
    entry: impl Fn(usize, usize) -> F,
) -> Vec<Vector<F>> {
    (0..rows).map(|i| (0..cols).map(|j| entry(i, j)).collect()).collect()
}

/// `(l_1..l_p) -> (l_1..l_p, 0^{n-2p}, -l_p..-l_1)` in `n` coordinates.
pub(crate) fn singular_pattern<F: ExactField>(p: usize, n: usize) -> AffineMap<F> {
    AffineMap::linear(singular_pattern_rows(p, n), p).expect("shapes agree")
}

fn singular_pattern_rows<F: ExactField>(p: usize, n: usize) -> Vec<Vector<F>> {
    matrix_rows(n, p, |i, j| {
        if i == j {
            F::one()
        } else if i == n - 1 - j {
            -F::one()
        } else {
            F::zero()
        }
    })
}

pub fn build_pair<F: ExactField>(label: PairLabel) -> Result<SymmetricPair<F>> {
    let param = |msg: String| Err(Error::Parameter(msg));
    let (ambient, restricted, restrict_rows, embed_rows, root_scale) = match label {
        PairLabel::AI(n) => {
            if n < 2 {
                return param(format!("AI(n) needs n >= 2, got {n}"));
            }
            let rs = build_root_system(Family::A, n - 1)?;
            let id = matrix_rows(n, n, |i, j| if i == j { F::one() } else { F::zero() });
            (rs.clone(), rs, id.clone(), id, F::one())
        }
        PairLabel::AIII(p, q) => {
            if p == 0 || p > q {
                return param(format!("AIII(p,q) needs 1 <= p <= q, got ({p},{q})"));
            }
            let n = p + q;
            let ambient = build_root_system(Family::A, n - 1)?;
            let fam = if p < q { Family::BC } else { Family::C };
            let restricted = build_root_system(fam, p)?;
            let half = F::one() / two::<F>();
            let restrict = matrix_rows(p, n, |i, j| {
                if j == i {
                    half.clone()
                } else if j == n - 1 - i {
                    -half.clone()
                } else {
                    F::zero()
                }
            });
            (ambient, restricted, restrict, singular_pattern_rows(p, n), two())
        }
        PairLabel::BDI(p, q) => {
            if p == 0 || p > q {
                return param(format!("BDI(p,q) needs 1 <= p <= q, got ({p},{q})"));
            }
            if p + q < 3 {
                return param("BDI(1,1) has no roots; use Torus:1".into());
            }
            let m = (p + q) / 2;
            let amb_fam = if (p + q) % 2 == 1 { Family::B } else { Family::D };
            let ambient = build_root_system(amb_fam, m)?;
            let res_fam = if p < q { Family::B } else { Family::D };
            if res_fam == Family::D && p < 2 {
                return param(format!("BDI({p},{q}) has no restricted roots"));
            }
            let restricted = build_root_system(res_fam, p)?;
            let restrict = matrix_rows(p, m, |i, j| if i == j { F::one() } else { F::zero() });
            let embed = matrix_rows(m, p, |i, j| if i == j { F::one() } else { F::zero() });
            (ambient, restricted, restrict, embed, F::one())
        }
        PairLabel::Torus(n) => {
            if n == 0 {
                return param("Torus(n) needs n >= 1".into());
            }
            let rs = RootSystem::toral(n);
            let id = matrix_rows(n, n, |i, j| if i == j { F::one() } else { F::zero() });
            (rs.clone(), rs, id.clone(), id, F::one())
        }
        PairLabel::Diagonal(fam, rank) => {
            let r = build_root_system::<F>(fam, rank)?;
            let d = r.ambient_dim();
            let ambient = RootSystem::direct_sum(&[&r, &r]);
            let restrict = matrix_rows(d, 2 * d, |i, j| if j % d == i { F::one() } else { F::zero() });
            let half = F::one() / two::<F>();
            let embed = matrix_rows(2 * d, d, |i, j| if i % d == j { half.clone() } else { F::zero() });
            (ambient, r, restrict, embed, F::one())
        }
    };
    let restrict_map = AffineMap::linear(restrict_rows, ambient.ambient_dim())?;
    let embed_map = AffineMap::linear(embed_rows, restricted.ambient_dim())?;
    let weyl = RestrictedWeylGroup::new(restricted.clone());
    let pair = SymmetricPair { label, ambient, restricted, restrict_map, embed_map, root_scale, weyl };
    pair.verify()?;
    Ok(pair)
}

impl<F: ExactField> SymmetricPair<F> {
    pub fn parse(label: &str) -> Result<Self> {
        build_pair(label.parse()?)
    }

    /// Construction-time checks: `restrict . embed = id`, the restricted
    /// positive roots are the scaled nonzero restrictions of the ambient
    /// positive roots, and the embedded chamber lies in the ambient one.
    fn verify(&self) -> Result<()> {
        let a = self.a_dim();
        for j in 0..a {
            let e = Vector::unit(a, j);
            if self.restrict(&self.embed(&e)?)? != e {
                return Err(Error::Precondition(format!("{}: restrict . embed != id", self.label)));
            }
        }
        let restricted_pos: BTreeSet<Vector<F>> = self.restricted.positive_roots().iter().cloned().collect();
        let mut images = BTreeSet::new();
        for alpha in self.ambient.positive_roots() {
            let r = self.restrict(alpha)?.scale(&self.root_scale);
            if !r.is_zero() {
                images.insert(r);
            }
        }
        if images != restricted_pos {
            return Err(Error::Precondition(format!(
                "{}: restricted roots are not the restrictions of the ambient roots",
                self.label
            )));
        }
        let mut generators = self.restricted.fundamental_weights();
        for d in self.restricted.invariant_directions() {
            generators.push(-&d);
            generators.push(d);
        }
        for g in generators {
            if !self.ambient.is_dominant(&self.embed(&g)?) {
                return Err(Error::Precondition(format!(
                    "{}: embedded chamber leaves the ambient chamber",
                    self.label
                )));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> PairLabel {
        self.label
    }

    pub fn ambient(&self) -> &RootSystem<F> {
        &self.ambient
    }

    pub fn restricted(&self) -> &RootSystem<F> {
        &self.restricted
    }

    /// Dimension of the `a*` coordinates.
    pub fn a_dim(&self) -> usize {
        self.restricted.ambient_dim()
    }

    /// Dimension of the `t*` coordinates.
    pub fn t_dim(&self) -> usize {
        self.ambient.ambient_dim()
    }

    pub fn root_scale(&self) -> &F {
        &self.root_scale
    }

    pub fn restrict_map(&self) -> &AffineMap<F> {
        &self.restrict_map
    }

    pub fn embed_map(&self) -> &AffineMap<F> {
        &self.embed_map
    }

    pub fn restrict(&self, x: &Vector<F>) -> Result<Vector<F>> {
        self.restrict_map.apply(x)
    }

    pub fn embed(&self, xi: &Vector<F>) -> Result<Vector<F>> {
        self.embed_map.apply(xi)
    }

    pub fn weyl_group(&self) -> &RestrictedWeylGroup<F> {
        &self.weyl
    }

    /// Element of the restricted Weyl group from a word in its simple
    /// reflections.
    pub fn weyl_element(&self, word: &[usize]) -> Result<WeylElement> {
        self.restricted.element_from_word(word)
    }

    pub fn check_dominant(&self, xi: &Vector<F>) -> Result<()> {
        check_dim(self.a_dim(), xi.dim())?;
        if !self.restricted.is_dominant(xi) {
            return Err(Error::Parameter(format!(
                "{xi} is not dominant for {}",
                self.restricted.label()
            )));
        }
        Ok(())
    }

    /// `W^a lambda`.
    pub fn restricted_orbit(&self, lambda: &Vector<F>) -> Result<BTreeSet<Vector<F>>> {
        self.restricted.weyl_orbit(lambda)
    }

    /// Realization of `a*` inside the diagonal of `u(n)*` used for the
    /// Horn system: eigenvalues for `AI`, the singular-value pattern
    /// `(s, 0, -s)` of the Hermitian dilation for `AIII` and for `BDI`
    /// with `p < q`.
    pub fn hermitian_model(&self) -> Result<(usize, AffineMap<F>)> {
        match self.label {
            PairLabel::AI(n) => Ok((n, AffineMap::identity(n))),
            PairLabel::AIII(p, q) => Ok((p + q, singular_pattern(p, p + q))),
            PairLabel::BDI(p, q) if p < q => Ok((p + q, singular_pattern(p, p + q))),
            PairLabel::BDI(p, q) => Err(Error::Unsupported(format!(
                "BDI({p},{q}) with p = q: the chamber allows a signed last singular value, \
                 which the Hermitian dilation does not model"
            ))),
            other => Err(Error::Unsupported(format!("no Horn model for {other}"))),
        }
    }
}

#[cfg(test)]
mod tests;
