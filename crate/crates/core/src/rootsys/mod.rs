//! Exact root systems of the classical families, including the non-reduced
//! family BC, and the action of their Weyl groups.
//!
//! Coordinates are the standard ones: `A_{n-1}` lives in `n` coordinates
//! (sum-zero understood, never quotiented out), the other families of rank
//! `n` live in `n` coordinates. Simple roots are listed in Bourbaki order:
//!
//! | family | simple roots |
//! |--------|--------------|
//! | `A_{n-1}` | `e_i - e_{i+1}`, `i < n` |
//! | `B_n`  | `e_i - e_{i+1}`, `e_n` |
//! | `C_n`  | `e_i - e_{i+1}`, `2 e_n` |
//! | `D_n`  | `e_i - e_{i+1}`, `e_{n-1} + e_n` |
//! | `BC_n` | `e_i - e_{i+1}`, `e_n` |
//!
//! Direct sums (needed for the diagonal symmetric pair) and the empty system
//! on a torus are supported as well; simple roots of a sum are the simple
//! roots of the summands in order.

mod weyl;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

pub use weyl::{parse_word, WeylElement};

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::scalar::{two, ExactField};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
}

impl Family {
    /// Number of coordinates used by the standard realization.
    pub fn coords(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            _ => rank,
        }
    }

    pub fn weyl_order(self, rank: usize) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            Family::A => fact(rank + 1),
            Family::B | Family::C | Family::BC => (1u128 << rank) * fact(rank),
            Family::D => (1u128 << (rank - 1)) * fact(rank),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "BC" => Ok(Family::BC),
            other => Err(Error::Parameter(format!("unsupported root system family {other:?}"))),
        }
    }
}

/// One irreducible summand, occupying a block of ambient coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct RootSystem<F> {
    components: Vec<Component>,
    ambient_dim: usize,
    positive_roots: Vec<Vector<F>>,
    simple_roots: Vec<Vector<F>>,
    rho: Vector<F>,
}

/// Builds `family_rank` in its standard coordinates.
pub fn build_root_system<F: ExactField>(family: Family, rank: usize) -> Result<RootSystem<F>> {
    if rank == 0 {
        return Err(Error::Parameter("rank must be at least 1".into()));
    }
    if family == Family::D && rank < 2 {
        return Err(Error::Parameter("D_n requires n >= 2".into()));
    }
    let n = family.coords(rank);
    let e = |i: usize| Vector::<F>::unit(n, i);
    let mut pos = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pos.push(&e(i) - &e(j));
            if family != Family::A {
                pos.push(&e(i) + &e(j));
            }
        }
    }
    for i in 0..n {
        match family {
            Family::B => pos.push(e(i)),
            Family::C => pos.push(e(i).scale(&two())),
            Family::BC => {
                pos.push(e(i));
                pos.push(e(i).scale(&two()));
            }
            Family::A | Family::D => {}
        }
    }
    let mut simple: Vec<Vector<F>> = (0..n - 1).map(|i| &e(i) - &e(i + 1)).collect();
    match family {
        Family::A => {}
        Family::B | Family::BC => simple.push(e(n - 1)),
        Family::C => simple.push(e(n - 1).scale(&two())),
        Family::D => simple.push(&e(n - 2) + &e(n - 1)),
    }
    Ok(RootSystem::assemble(
        vec![Component { family, rank, offset: 0 }],
        n,
        pos,
        simple,
    ))
}

impl<F: ExactField> RootSystem<F> {
    fn assemble(
        components: Vec<Component>,
        ambient_dim: usize,
        mut positive_roots: Vec<Vector<F>>,
        simple_roots: Vec<Vector<F>>,
    ) -> Self {
        positive_roots.sort();
        let half = F::one() / two::<F>();
        let rho = positive_roots
            .iter()
            .fold(Vector::zeros(ambient_dim), |acc, r| acc.axpy(&half, r));
        Self {
            components,
            ambient_dim,
            positive_roots,
            simple_roots,
            rho,
        }
    }

    /// The empty root system on `dim` coordinates (Weyl group trivial).
    pub fn toral(dim: usize) -> Self {
        Self::assemble(Vec::new(), dim, Vec::new(), Vec::new())
    }

    /// Orthogonal direct sum on concatenated coordinates.
    pub fn direct_sum(parts: &[&RootSystem<F>]) -> Self {
        let dim: usize = parts.iter().map(|p| p.ambient_dim).sum();
        let mut components = Vec::new();
        let mut pos = Vec::new();
        let mut simple = Vec::new();
        let mut offset = 0;
        for p in parts {
            let lift = |v: &Vector<F>| {
                let mut out = Vector::zeros(dim);
                for i in 0..v.dim() {
                    out[offset + i] = v[i].clone();
                }
                out
            };
            components.extend(p.components.iter().map(|c| Component {
                offset: c.offset + offset,
                ..*c
            }));
            pos.extend(p.positive_roots.iter().map(lift));
            simple.extend(p.simple_roots.iter().map(lift));
            offset += p.ambient_dim;
        }
        Self::assemble(components, dim, pos, simple)
    }

    /// `Some` for an irreducible system.
    pub fn family(&self) -> Option<Family> {
        match self.components.as_slice() {
            [c] => Some(c.family),
            _ => None,
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn positive_roots(&self) -> &[Vector<F>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vector<F>] {
        &self.simple_roots
    }

    pub fn roots(&self) -> Vec<Vector<F>> {
        self.positive_roots
            .iter()
            .flat_map(|r| [r.clone(), -r])
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        !self.components.iter().any(|c| c.family == Family::BC)
    }

    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return format!("T{}", self.ambient_dim);
        }
        self.components
            .iter()
            .map(|c| format!("{}{}", c.family, c.rank))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.family.weyl_order(c.rank)).product()
    }

    pub fn is_positive_root(&self, v: &Vector<F>) -> bool {
        self.positive_roots.binary_search(v).is_ok()
    }

    pub fn is_root(&self, v: &Vector<F>) -> bool {
        self.is_positive_root(v) || self.is_positive_root(&-v)
    }

    /// `s_alpha(x) = x - 2 (x, alpha) / (alpha, alpha) alpha`
    pub fn reflect(alpha: &Vector<F>, x: &Vector<F>) -> Vector<F> {
        let c = two::<F>() * x.dot(alpha) / alpha.norm_sq();
        x.axpy(&-c, alpha)
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple_reflect(&self, i: usize, x: &Vector<F>) -> Vector<F> {
        Self::reflect(&self.simple_roots[i - 1], x)
    }

    /// Simple coroots `2 alpha / (alpha, alpha)`.
    pub fn simple_coroots(&self) -> Vec<Vector<F>> {
        self.simple_roots
            .iter()
            .map(|a| a.scale(&(two::<F>() / a.norm_sq())))
            .collect()
    }

    /// Half the sum of the positive roots; strictly dominant.
    pub fn rho(&self) -> &Vector<F> {
        &self.rho
    }

    pub fn check_dim(&self, x: &Vector<F>) -> Result<()> {
        check_dim(self.ambient_dim, x.dim())
    }

    /// Closed fundamental chamber: every simple root pairs nonnegatively.
    pub fn is_dominant(&self, x: &Vector<F>) -> bool {
        self.simple_roots.iter().all(|a| !x.dot(a).is_negative())
    }

    pub fn is_strictly_dominant(&self, x: &Vector<F>) -> bool {
        self.simple_roots.iter().all(|a| x.dot(a).is_positive())
    }

    fn first_descent(&self, x: &Vector<F>) -> Option<usize> {
        self.simple_roots
            .iter()
            .position(|a| x.dot(a).is_negative())
            .map(|i| i + 1)
    }

    /// Signed permutation of the simple reflection `s_i`.
    fn simple_perm(&self, i: usize) -> (Vec<usize>, Vec<i8>) {
        let n = self.ambient_dim;
        let alpha = &self.simple_roots[i - 1];
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = vec![1i8; n];
        let support: Vec<usize> = (0..n).filter(|&k| !alpha[k].is_zero()).collect();
        match support.as_slice() {
            [k] => sign[*k] = -1,
            [a, b] if alpha[*a] == -alpha[*b].clone() => perm.swap(*a, *b),
            [a, b] => {
                perm.swap(*a, *b);
                sign[*a] = -1;
                sign[*b] = -1;
            }
            _ => unreachable!("classical simple roots have support 1 or 2"),
        }
        (perm, sign)
    }

    /// Canonical reduced word of a signed permutation, found by sorting
    /// `w rho` into the chamber with the lowest available descent each step.
    fn reduced_word(&self, perm: &[usize], sign: &[i8]) -> Vec<usize> {
        let w = WeylElement::from_parts(perm.to_vec(), sign.to_vec(), Vec::new());
        let mut x = w.apply(&self.rho);
        let mut word = Vec::new();
        while let Some(i) = self.first_descent(&x) {
            x = self.simple_reflect(i, &x);
            word.push(i);
        }
        word
    }

    fn element(&self, perm: Vec<usize>, sign: Vec<i8>) -> WeylElement {
        let word = self.reduced_word(&perm, &sign);
        WeylElement::from_parts(perm, sign, word)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.ambient_dim)
    }

    /// The element `s_{w[0]} * s_{w[1]} * ...`; the stored word is the
    /// canonical reduced word, which may differ from `word`.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut acc = self.identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(Error::Parameter(format!(
                    "simple reflection index {i} out of range 1..={}",
                    self.rank()
                )));
            }
            let (p, s) = self.simple_perm(i);
            let (p, s) = acc.compose_raw(&WeylElement::from_parts(p, s, Vec::new()));
            acc = WeylElement::from_parts(p, s, Vec::new());
        }
        Ok(self.element(acc.perm().to_vec(), acc.signs().to_vec()))
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.element_from_word(&[i])
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let (p, s) = a.compose_raw(b);
        self.element(p, s)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let (p, s) = w.inverse_raw();
        self.element(p, s)
    }

    /// True when the signed permutation preserves the root set, i.e. lies in
    /// this Weyl group (for the families realized here).
    pub fn contains(&self, w: &WeylElement) -> bool {
        if w.dim() != self.ambient_dim {
            return false;
        }
        let rebuilt = self.element_from_word(&self.reduced_word(w.perm(), w.signs()));
        matches!(rebuilt, Ok(r) if &r == w)
    }

    /// Longest element, the one sending `rho` to `-rho`.
    pub fn longest_element(&self) -> WeylElement {
        let (_, w) = self.dominant_representative_unchecked(&-&self.rho);
        w
    }

    /// Every group element, in breadth-first order from the identity.
    pub fn elements(&self) -> Vec<WeylElement> {
        let mut seen = BTreeSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.identity()]);
        let gens: Vec<WeylElement> = (1..=self.rank())
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        seen.insert((self.identity().perm().to_vec(), self.identity().signs().to_vec()));
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let (p, sg) = w.compose_raw(s);
                if seen.insert((p.clone(), sg.clone())) {
                    queue.push_back(self.element(p, sg));
                }
            }
            order.push(w);
        }
        order
    }

    /// Closure of `{lambda}` under the simple reflections.
    pub fn weyl_orbit(&self, lambda: &Vector<F>) -> Result<BTreeSet<Vector<F>>> {
        self.check_dim(lambda)?;
        let mut seen = BTreeSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rank() {
                let y = self.simple_reflect(i, &x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    /// The unique chamber point `lambda = w xi` of the orbit of `xi`.
    pub fn dominant_representative(&self, xi: &Vector<F>) -> Result<(Vector<F>, WeylElement)> {
        self.check_dim(xi)?;
        Ok(self.dominant_representative_unchecked(xi))
    }

    fn dominant_representative_unchecked(&self, xi: &Vector<F>) -> (Vector<F>, WeylElement) {
        let mut x = xi.clone();
        let mut steps = Vec::new();
        while let Some(i) = self.first_descent(&x) {
            x = self.simple_reflect(i, &x);
            steps.push(i);
        }
        steps.reverse();
        let w = self
            .element_from_word(&steps)
            .expect("descent indices are in range");
        (x, w)
    }

    /// Whether `xi` is a nonnegative combination of positive roots. The
    /// simple roots are independent, so the combination is unique when it
    /// exists and the feasibility question reduces to one exact solve.
    pub fn cone_member(&self, xi: &Vector<F>) -> Result<bool> {
        self.check_dim(xi)?;
        if xi.is_zero() {
            return Ok(true);
        }
        Ok(match linalg::coordinates_in(&self.simple_roots, xi) {
            Some(c) => c.iter().all(|x| !x.is_negative()),
            None => false,
        })
    }

    /// `xi <= lambda` in the order defined by the positive root cone.
    pub fn dominance_leq(&self, xi: &Vector<F>, lambda: &Vector<F>) -> Result<bool> {
        self.check_dim(xi)?;
        self.cone_member(&(lambda - xi))
    }

    /// The basis of the span of the roots dual to the simple roots:
    /// `(coweight_i, alpha_j) = delta_ij`.
    pub fn fundamental_coweights(&self) -> Vec<Vector<F>> {
        let k = self.rank();
        if k == 0 {
            return Vec::new();
        }
        let gram: Vec<Vector<F>> = self
            .simple_roots
            .iter()
            .map(|a| self.simple_roots.iter().map(|b| a.dot(b)).collect())
            .collect();
        let inv = linalg::inverse(&gram).expect("simple roots are independent");
        inv.iter()
            .map(|row| {
                (0..k).fold(Vector::zeros(self.ambient_dim), |acc, j| {
                    acc.axpy(&row[j], &self.simple_roots[j])
                })
            })
            .collect()
    }

    /// Fundamental weights: `(weight_i, coroot_j) = delta_ij`, inside the
    /// span of the roots.
    pub fn fundamental_weights(&self) -> Vec<Vector<F>> {
        self.fundamental_coweights()
            .into_iter()
            .zip(&self.simple_roots)
            .map(|(c, a)| c.scale(&(a.norm_sq() / two::<F>())))
            .collect()
    }

    /// Orthogonal complement of the span of the roots.
    pub fn invariant_directions(&self) -> Vec<Vector<F>> {
        linalg::kernel(&self.simple_roots, self.ambient_dim)
    }
}

impl<F: ExactField> fmt::Display for RootSystem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

#[cfg(test)]
mod tests;
