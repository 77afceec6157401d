//! Exact rational convex polyhedra in H-representation, with an optional
//! V-representation for bounded low-dimensional cases.

mod format;
mod hull;
mod klyachko;
pub mod lp;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use format::{parse_hrep_text, PolytopeJson};
pub use hull::hull_from_points;
pub use klyachko::{horn_system, klyachko_polytope, su22_symbolic_system};
pub use lp::LpOutcome;

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::scalar::ExactField;
use crate::vector::Vector;

/// Largest ambient dimension accepted by [`Polytope::vertices`].
pub const MAX_VERTEX_DIM: usize = 4;

/// `normal . x <= offset`, stored with integer coefficients whose overall
/// gcd is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality<F> {
    normal: Vector<F>,
    offset: F,
}

impl<F: ExactField> Inequality<F> {
    /// Builds and normalizes `normal . x <= offset`.
    pub fn new(normal: Vector<F>, offset: F) -> Self {
        let mut out = Self { normal, offset };
        out.normalize();
        out
    }

    /// `normal . x >= offset`
    pub fn at_least(normal: Vector<F>, offset: F) -> Self {
        Self::new(-&normal, -offset)
    }

    pub fn normal(&self) -> &Vector<F> {
        &self.normal
    }

    pub fn offset(&self) -> &F {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// Multiplies by the positive scalar that clears all denominators and
    /// leaves coprime integers.
    fn normalize(&mut self) {
        let vals: Vec<&F> = self.normal.iter().chain(std::iter::once(&self.offset)).collect();
        if vals.iter().all(|x| x.is_zero()) {
            return;
        }
        if self.normal.is_zero() {
            // 0 <= b: keep only the sign of b
            self.offset = if self.offset.is_negative() { -F::one() } else { F::zero() };
            return;
        }
        let lcm = vals
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom_bigint()));
        let ints: Vec<BigInt> = vals
            .iter()
            .map(|x| x.numer_bigint() * (&lcm / x.denom_bigint()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut it = ints.into_iter().map(|x| F::from_bigints(x / &g, BigInt::one()));
        let d = self.normal.dim();
        self.normal = (&mut it).take(d).collect();
        self.offset = it.next().expect("offset present");
    }

    /// `normal . x - offset`; nonpositive exactly when satisfied.
    pub fn slack(&self, x: &Vector<F>) -> F {
        self.normal.dot(x) - self.offset.clone()
    }

    pub fn is_satisfied(&self, x: &Vector<F>) -> bool {
        !self.slack(x).is_positive()
    }

    pub fn is_tight(&self, x: &Vector<F>) -> bool {
        self.slack(x).is_zero()
    }

    /// `0 <= b` with `b >= 0`.
    pub fn is_trivial(&self) -> bool {
        self.normal.is_zero() && !self.offset.is_negative()
    }

    /// `0 <= b` with `b < 0`.
    pub fn is_contradiction(&self) -> bool {
        self.normal.is_zero() && self.offset.is_negative()
    }

    /// Key identifying the half-space direction: the normal scaled to a
    /// primitive integer vector, plus the offset under the same scaling.
    fn direction_key(&self) -> (Vector<F>, F) {
        let d = self.normal.dim();
        let probe = Inequality::new(self.normal.clone(), F::zero());
        // the factor mapping our normal to the primitive one
        let i = (0..d).find(|&i| !self.normal[i].is_zero()).expect("nonzero normal");
        let factor = probe.normal[i].clone() / self.normal[i].clone();
        (probe.normal, self.offset.clone() * factor)
    }

    /// Pull back along `x = M y + t`.
    pub fn pull_back(&self, map: &AffineMap<F>) -> Self {
        let normal = map.transpose_apply(&self.normal);
        let offset = self.offset.clone() - self.normal.dot(&map.translation);
        Self::new(normal, offset)
    }
}

impl<F: ExactField> fmt::Display for Inequality<F> {
    /// Text format: `a_1 ... a_d | b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.normal.iter().map(|x| x.to_string()).collect();
        write!(f, "{} | {}", coeffs.join(" "), self.offset)
    }
}

/// `x = M y + t`, from `source_dim` coordinates into `target_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<F> {
    rows: Vec<Vector<F>>,
    translation: Vector<F>,
    source_dim: usize,
}

impl<F: ExactField> AffineMap<F> {
    pub fn new(rows: Vec<Vector<F>>, translation: Vector<F>, source_dim: usize) -> Result<Self> {
        check_dim(rows.len(), translation.dim())?;
        for r in &rows {
            check_dim(source_dim, r.dim())?;
        }
        Ok(Self { rows, translation, source_dim })
    }

    pub fn linear(rows: Vec<Vector<F>>, source_dim: usize) -> Result<Self> {
        let t = Vector::zeros(rows.len());
        Self::new(rows, t, source_dim)
    }

    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim).map(|i| Vector::unit(dim, i)).collect();
        Self { rows, translation: Vector::zeros(dim), source_dim: dim }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, y: &Vector<F>) -> Result<Vector<F>> {
        check_dim(self.source_dim, y.dim())?;
        Ok(self
            .rows
            .iter()
            .zip(self.translation.iter())
            .map(|(r, t)| r.dot(y) + t.clone())
            .collect())
    }

    fn transpose_apply(&self, a: &Vector<F>) -> Vector<F> {
        (0..self.source_dim)
            .map(|j| {
                self.rows
                    .iter()
                    .zip(a.iter())
                    .fold(F::zero(), |acc, (r, x)| acc + r[j].clone() * x.clone())
            })
            .collect()
    }
}

/// Result of [`Polytope::remove_redundant`].
#[derive(Clone, Debug)]
pub enum Reduction<F> {
    Reduced(Polytope<F>),
    Empty,
}

impl<F: ExactField> Reduction<F> {
    pub fn into_polytope(self) -> Option<Polytope<F>> {
        match self {
            Reduction::Reduced(p) => Some(p),
            Reduction::Empty => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Reduction::Empty)
    }
}

#[derive(Clone, Debug)]
pub struct Polytope<F> {
    dim: usize,
    hrep: Vec<Inequality<F>>,
    vrep: Option<Vec<Vector<F>>>,
    reduced: bool,
    bounded: Option<bool>,
}

impl<F: ExactField> Polytope<F> {
    pub fn new(dim: usize, hrep: Vec<Inequality<F>>) -> Result<Self> {
        for h in &hrep {
            check_dim(dim, h.dim())?;
        }
        Ok(Self { dim, hrep, vrep: None, reduced: false, bounded: None })
    }

    /// The whole space.
    pub fn universe(dim: usize) -> Self {
        Self { dim, hrep: Vec::new(), vrep: None, reduced: true, bounded: Some(dim == 0) }
    }

    /// `{ p }`, as pairs of opposite inequalities.
    pub fn point(p: &Vector<F>) -> Self {
        let d = p.dim();
        let mut hrep = Vec::with_capacity(2 * d);
        for i in 0..d {
            let e = Vector::unit(d, i);
            hrep.push(Inequality::new(e.clone(), p[i].clone()));
            hrep.push(Inequality::at_least(e, p[i].clone()));
        }
        Self { dim: d, hrep, vrep: Some(vec![p.clone()]), reduced: true, bounded: Some(true) }
    }

    /// The interval `[lo, hi]` in one dimension.
    pub fn interval(lo: F, hi: F) -> Self {
        let e = Vector::unit(1, 0);
        let hrep = vec![Inequality::new(e.clone(), hi), Inequality::at_least(e, lo)];
        Self { dim: 1, hrep, vrep: None, reduced: false, bounded: Some(true) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality<F>] {
        &self.hrep
    }

    /// The stored V-representation, if one has been computed.
    pub fn known_vertices(&self) -> Option<&[Vector<F>]> {
        self.vrep.as_deref()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn with_vertices(mut self, vertices: Vec<Vector<F>>) -> Self {
        self.vrep = Some(vertices);
        self
    }

    pub(crate) fn mark_reduced(mut self) -> Self {
        self.reduced = true;
        self
    }

    pub fn push(&mut self, ineq: Inequality<F>) -> Result<()> {
        check_dim(self.dim, ineq.dim())?;
        self.hrep.push(ineq);
        self.vrep = None;
        self.reduced = false;
        self.bounded = None;
        Ok(())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut hrep = self.hrep.clone();
        hrep.extend(other.hrep.iter().cloned());
        Self::new(self.dim, hrep)
    }

    pub fn membership(&self, x: &Vector<F>) -> Result<bool> {
        check_dim(self.dim, x.dim())?;
        Ok(self.hrep.iter().all(|h| h.is_satisfied(x)))
    }

    /// Indices of the inequalities holding with equality at `x`.
    pub fn tight_at(&self, x: &Vector<F>) -> Result<Vec<usize>> {
        check_dim(self.dim, x.dim())?;
        Ok((0..self.hrep.len()).filter(|&i| self.hrep[i].is_tight(x)).collect())
    }

    /// Pulls every inequality back along `map`, whose target must be this
    /// polytope's space. The result is not reduced.
    pub fn substitute(&self, map: &AffineMap<F>) -> Result<Self> {
        check_dim(self.dim, map.target_dim())?;
        let hrep = self.hrep.iter().map(|h| h.pull_back(map)).collect();
        Self::new(map.source_dim(), hrep)
    }

    pub fn maximize(&self, objective: &Vector<F>) -> Result<LpOutcome<F>> {
        check_dim(self.dim, objective.dim())?;
        Ok(lp::maximize(objective, &self.hrep))
    }

    pub fn is_empty(&self) -> bool {
        lp::feasible_point(self.dim, &self.hrep).is_none()
    }

    /// Bounded iff every coordinate is bounded above and below.
    pub fn is_bounded(&self) -> bool {
        if let Some(b) = self.bounded {
            return b;
        }
        (0..self.dim).all(|i| {
            let e = Vector::unit(self.dim, i);
            !matches!(lp::maximize(&e, &self.hrep), LpOutcome::Unbounded)
                && !matches!(lp::maximize(&-&e, &self.hrep), LpOutcome::Unbounded)
        })
    }

    /// Drops duplicate and dominated parallel inequalities, keeping the
    /// tightest offset per direction.
    fn deduplicated(&self) -> Vec<Inequality<F>> {
        let mut best: BTreeMap<Vector<F>, F> = BTreeMap::new();
        let mut out = Vec::new();
        for h in &self.hrep {
            if h.is_trivial() {
                continue;
            }
            if h.is_contradiction() {
                out.push(h.clone());
                continue;
            }
            let (key, off) = h.direction_key();
            match best.get_mut(&key) {
                Some(b) if *b <= off => {}
                Some(b) => *b = off,
                None => {
                    best.insert(key, off);
                }
            }
        }
        out.extend(best.into_iter().map(|(n, b)| Inequality::new(n, b)));
        out
    }

    /// Minimal H-representation: an inequality survives iff maximizing its
    /// normal over the remaining ones exceeds its offset.
    pub fn remove_redundant(&self) -> Reduction<F> {
        let mut rows = self.deduplicated();
        if lp::feasible_point(self.dim, &rows).is_none() {
            return Reduction::Empty;
        }
        let mut i = 0;
        while i < rows.len() {
            let candidate = rows.remove(i);
            let keep = match lp::maximize(candidate.normal(), &rows) {
                LpOutcome::Optimal { value, .. } => value > *candidate.offset(),
                LpOutcome::Unbounded => true,
                LpOutcome::Infeasible => unreachable!("remaining system stays feasible"),
            };
            if keep {
                rows.insert(i, candidate);
                i += 1;
            }
        }
        let mut p = Self { dim: self.dim, hrep: rows, vrep: None, reduced: true, bounded: self.bounded };
        if let Some(v) = &self.vrep {
            p.vrep = Some(v.clone());
        }
        Reduction::Reduced(p)
    }

    /// `other` is a subset of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        if other.is_empty() {
            return Ok(true);
        }
        for h in &self.hrep {
            match lp::maximize(h.normal(), &other.hrep) {
                LpOutcome::Optimal { value, .. } if value <= *h.offset() => {}
                LpOutcome::Infeasible => return Ok(true),
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Equality of solution sets by mutual inclusion.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// Vertices by intersecting `dim`-subsets of the (reduced) inequalities.
    pub fn vertices(&self) -> Result<Vec<Vector<F>>> {
        if self.dim > MAX_VERTEX_DIM {
            return Err(Error::Unsupported(format!(
                "vertex enumeration is limited to dimension {MAX_VERTEX_DIM}, got {}",
                self.dim
            )));
        }
        let reduced = if self.reduced {
            self.clone()
        } else {
            match self.remove_redundant() {
                Reduction::Reduced(p) => p,
                Reduction::Empty => return Ok(Vec::new()),
            }
        };
        if !reduced.is_bounded() {
            return Err(Error::Unsupported("vertex enumeration of an unbounded polyhedron".into()));
        }
        if self.dim == 0 {
            return Ok(vec![Vector::zeros(0)]);
        }
        let h = &reduced.hrep;
        let mut found = BTreeSet::new();
        for subset in combinations(h.len(), self.dim) {
            let a: Vec<Vector<F>> = subset.iter().map(|&i| h[i].normal().clone()).collect();
            let b: Vec<F> = subset.iter().map(|&i| h[i].offset().clone()).collect();
            if let Some(x) = linalg::solve_unique(&a, &b) {
                if h.iter().all(|q| q.is_satisfied(&x)) {
                    found.insert(x);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Reduces and attaches the vertex list.
    pub fn with_computed_vertices(&self) -> Result<Self> {
        let reduced = match self.remove_redundant() {
            Reduction::Reduced(p) => p,
            Reduction::Empty => return Ok(self.clone().with_vertices(Vec::new())),
        };
        let v = reduced.vertices()?;
        Ok(reduced.with_vertices(v))
    }

    /// Image under `x -> center + factor (x - center)`, `factor > 0`.
    pub fn scaled_about(&self, center: &Vector<F>, factor: &F) -> Result<Self> {
        check_dim(self.dim, center.dim())?;
        if !factor.is_positive() {
            return Err(Error::Parameter("scale factor must be positive".into()));
        }
        let hrep = self
            .hrep
            .iter()
            .map(|h| {
                let b = h.offset().clone() * factor.clone()
                    + (F::one() - factor.clone()) * h.normal().dot(center);
                Inequality::new(h.normal().clone(), b)
            })
            .collect();
        let mut p = Self::new(self.dim, hrep)?;
        if let Some(v) = &self.vrep {
            p.vrep = Some(
                v.iter()
                    .map(|x| center.axpy(factor, &(x - center)))
                    .collect(),
            );
        }
        Ok(p)
    }

    /// Canonical ordering of the inequalities, for stable output.
    pub fn sorted(mut self) -> Self {
        self.hrep.sort_by(canonical_order);
        self
    }
}

/// Orders inequalities by their normal read as a key with sign-insensitive
/// magnitudes first, so related facets sit together in printed output.
fn canonical_order<F: ExactField>(a: &Inequality<F>, b: &Inequality<F>) -> Ordering {
    let key = |h: &Inequality<F>| -> Vec<F> { h.normal().iter().map(|x| -x.abs()).collect() };
    key(a)
        .cmp(&key(b))
        .then_with(|| b.normal().cmp(a.normal()))
        .then_with(|| a.offset().cmp(b.offset()))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
