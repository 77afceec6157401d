//! Convex hulls of finite point sets in small affine dimension, by direct
//! facet enumeration over point subsets.

use std::collections::BTreeSet;

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::scalar::ExactField;
use crate::vector::Vector;

use super::{combinations, Inequality, Polytope};

/// Largest affine dimension handled by [`hull_from_points`].
pub const MAX_HULL_DIM: usize = 3;

/// H- and V-representation of the convex hull of `points`.
///
/// The affine hull contributes paired equality constraints; inside it,
/// every hyperplane through affinely independent points that leaves all
/// points on one side is a facet.
pub fn hull_from_points<F: ExactField>(points: &[Vector<F>]) -> Result<Polytope<F>> {
    let Some(first) = points.first() else {
        return Err(Error::Parameter("hull of an empty point set".into()));
    };
    let d = first.dim();
    for p in points {
        check_dim(d, p.dim())?;
    }
    let pts: Vec<Vector<F>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let p0 = pts[0].clone();

    // basis of the direction space of the affine hull
    let mut basis: Vec<Vector<F>> = Vec::new();
    for p in &pts[1..] {
        let diff = p - &p0;
        let mut trial = basis.clone();
        trial.push(diff);
        if linalg::rank(&trial) > basis.len() {
            basis = trial;
        }
    }
    let r = basis.len();
    if r > MAX_HULL_DIM {
        return Err(Error::Unsupported(format!(
            "hull by facet enumeration is limited to affine dimension {MAX_HULL_DIM}, got {r}"
        )));
    }

    let mut hrep = Vec::new();
    for n in linalg::kernel(&basis, d) {
        let b = n.dot(&p0);
        hrep.push(Inequality::new(n.clone(), b.clone()));
        hrep.push(Inequality::at_least(n, b));
    }

    // local coordinates c with p = p0 + sum c_k basis_k
    let local: Vec<Vector<F>> = pts
        .iter()
        .map(|p| {
            Vector::new(linalg::coordinates_in(&basis, &(p - &p0)).expect("point lies in its affine hull"))
        })
        .collect();
    // rows of a left inverse of the basis matrix: dual basis inside the span
    let gram: Vec<Vector<F>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| a.dot(b)).collect())
        .collect();
    let dual: Vec<Vector<F>> = if r == 0 {
        Vec::new()
    } else {
        let inv = linalg::inverse(&gram).expect("basis is independent");
        inv.iter()
            .map(|row| (0..r).fold(Vector::zeros(d), |acc, j| acc.axpy(&row[j], &basis[j])))
            .collect()
    };

    let mut facets: BTreeSet<Inequality<F>> = BTreeSet::new();
    if r >= 1 {
        for subset in combinations(local.len(), r) {
            let q0 = &local[subset[0]];
            let diffs: Vec<Vector<F>> = subset[1..].iter().map(|&i| &local[i] - q0).collect();
            let ker = linalg::kernel(&diffs, r);
            if ker.len() != 1 {
                continue;
            }
            let a = &ker[0];
            let b = a.dot(q0);
            let vals: Vec<F> = local.iter().map(|q| a.dot(q) - b.clone()).collect();
            let sign = if vals.iter().all(|v| !v.is_positive()) {
                F::one()
            } else if vals.iter().all(|v| !v.is_negative()) {
                -F::one()
            } else {
                continue;
            };
            // lift a.c <= b to ambient space via c = L (x - p0)
            let lifted: Vector<F> = (0..r).fold(Vector::zeros(d), |acc, k| acc.axpy(&a[k], &dual[k]));
            let normal = lifted.scale(&sign);
            let offset = (b + lifted.dot(&p0)) * sign;
            facets.insert(Inequality::new(normal, offset));
        }
    }
    let facet_list: Vec<Inequality<F>> = facets.into_iter().collect();

    // vertices: points whose tight facets pin down a single point of the hull
    let vertices: Vec<Vector<F>> = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Vector<F>> = facet_list
                .iter()
                .filter(|h| h.is_tight(p))
                .map(|h| h.normal().clone())
                .collect();
            let mut all = tight;
            all.extend(linalg::kernel(&basis, d));
            linalg::rank(&all) == d
        })
        .cloned()
        .collect();

    hrep.extend(facet_list);
    let mut poly = Polytope::new(d, hrep)?.with_vertices(vertices).mark_reduced();
    poly.bounded = Some(true);
    Ok(poly)
}
