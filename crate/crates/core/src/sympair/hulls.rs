use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polytope::{hull_from_points, klyachko_polytope, Inequality, Polytope};
use crate::rootsys::{RootSystem, WeylElement};
use crate::scalar::ExactField;
use crate::vector::Vector;

use super::SymmetricPair;

/// `hull(W lambda)` as `intersection_w w(lambda - C)`: for each fundamental
/// coweight `c`, the inequalities `(w c) . x <= (c, lambda+)` over the orbit
/// of `c`, plus the equalities fixing the components orthogonal to the
/// roots. Reduced, with the orbit as V-representation.
pub fn weyl_hull<F: ExactField>(roots: &RootSystem<F>, lambda: &Vector<F>) -> Result<Polytope<F>> {
    let (dominant, _) = roots.dominant_representative(lambda)?;
    let d = roots.ambient_dim();
    let mut hrep = Vec::new();
    for c in roots.fundamental_coweights() {
        let bound = c.dot(&dominant);
        for n in roots.weyl_orbit(&c)? {
            hrep.push(Inequality::new(n, bound.clone()));
        }
    }
    for n in roots.invariant_directions() {
        let b = n.dot(&dominant);
        hrep.push(Inequality::new(n.clone(), b.clone()));
        hrep.push(Inequality::at_least(n, b));
    }
    let orbit: Vec<Vector<F>> = roots.weyl_orbit(&dominant)?.into_iter().collect();
    let p = Polytope::new(d, hrep)?
        .remove_redundant()
        .into_polytope()
        .expect("contains the orbit");
    Ok(p.with_vertices(orbit))
}

/// Kostant's polytope `hull(W^a lambda)` for dominant `lambda`.
pub fn kostant_polytope<F: ExactField>(pair: &SymmetricPair<F>, lambda: &Vector<F>) -> Result<Polytope<F>> {
    pair.check_dominant(lambda)?;
    weyl_hull(pair.restricted(), lambda)
}

/// `v <= w` in the restricted Weyl group.
pub fn bruhat_leq<F: ExactField>(pair: &SymmetricPair<F>, v: &WeylElement, w: &WeylElement) -> Result<bool> {
    pair.weyl_group().bruhat_leq(v, w)
}

/// Dominant points `u(lambda + v mu)` over `v <= w`.
pub fn orbit_closure_points<F: ExactField>(
    pair: &SymmetricPair<F>,
    lambda: &Vector<F>,
    mu: &Vector<F>,
    w: &WeylElement,
) -> Result<Vec<Vector<F>>> {
    pair.check_dominant(lambda)?;
    pair.check_dominant(mu)?;
    let rs = pair.restricted();
    let mut pts = BTreeSet::new();
    for v in pair.weyl_group().lower_interval(w)? {
        let (dom, _) = rs.dominant_representative(&(lambda + &v.apply(mu)))?;
        pts.insert(dom);
    }
    Ok(pts.into_iter().collect())
}

/// The moment polytope of the closure of the orbit indexed by `w`: the hull
/// of [`orbit_closure_points`]. Only valid when the full polytope for
/// `(lambda, mu)` avoids every wall of the chamber, which is checked.
pub fn orbit_closure_polytope<F: ExactField>(
    pair: &SymmetricPair<F>,
    lambda: &Vector<F>,
    mu: &Vector<F>,
    w: &WeylElement,
) -> Result<Polytope<F>> {
    let full = klyachko_polytope(pair, lambda, mu)?;
    let verts = match full.known_vertices() {
        Some(v) => v.to_vec(),
        None => full.vertices()?,
    };
    let rs = pair.restricted();
    for x in &verts {
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            if !x.dot(alpha).is_positive() {
                return Err(Error::Precondition(format!(
                    "vertex {x} of the full polytope lies on the wall of simple root alpha_{} = {alpha}",
                    i + 1
                )));
            }
        }
    }
    hull_from_points(&orbit_closure_points(pair, lambda, mu, w)?)
}
