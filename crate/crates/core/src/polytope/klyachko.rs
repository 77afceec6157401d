//! Moment polytopes of products of two orbits, from the Horn system of
//! `SU(n)` restricted to the pair's `a*`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::schubert::{all_horn_triples, triple_to_inequality, HornTriple};
use crate::scalar::ExactField;
use crate::sympair::SymmetricPair;
use crate::vector::Vector;

use super::{AffineMap, Inequality, Polytope, Reduction};

/// Horn triples are pure functions of `n`; enumerating them dominates the
/// cost of repeated polytope builds, so they are kept per `n`.
fn cached_triples(n: usize) -> Arc<Vec<HornTriple>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<HornTriple>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(all_horn_triples(n));
    cache.lock().expect("cache lock").insert(n, Arc::clone(&t));
    t
}

/// The Horn inequalities on `(lambda, mu, nu)` in `3n` coordinates, with
/// the trace identity as a pair of opposite inequalities.
pub fn horn_system<F: ExactField>(n: usize) -> Vec<Inequality<F>> {
    let mut out: Vec<Inequality<F>> = cached_triples(n).iter().map(triple_to_inequality).collect();
    let trace: Vector<F> = (0..3 * n)
        .map(|i| if i < 2 * n { -F::one() } else { F::one() })
        .collect();
    out.push(Inequality::new(trace.clone(), F::zero()));
    out.push(Inequality::at_least(trace, F::zero()));
    out
}

/// `Delta(K lambda x K mu)` in `a*` coordinates: the attainable `nu` with
/// `lambda`, `mu` fixed, cut by the restricted chamber and reduced.
pub fn klyachko_polytope<F: ExactField>(
    pair: &SymmetricPair<F>,
    lambda: &Vector<F>,
    mu: &Vector<F>,
) -> Result<Polytope<F>> {
    let (n, model) = pair.hermitian_model()?;
    pair.check_dominant(lambda)?;
    pair.check_dominant(mu)?;
    let l = model.apply(lambda)?;
    let m = model.apply(mu)?;
    let fixed = Vector::concat(&[&l, &m]);
    let mut on_nu = Vec::new();
    for h in horn_system::<F>(n) {
        let a = h.normal().coords();
        let head: Vector<F> = a[..2 * n].iter().cloned().collect();
        let tail: Vector<F> = a[2 * n..].iter().cloned().collect();
        on_nu.push(Inequality::new(tail, h.offset().clone() - head.dot(&fixed)));
    }
    let mut p = Polytope::new(n, on_nu)?.substitute(&model)?;
    for alpha in pair.restricted().simple_roots() {
        p.push(Inequality::new(-alpha, F::zero()))?;
    }
    match p.remove_redundant() {
        Reduction::Reduced(r) if r.dim() <= super::MAX_VERTEX_DIM && r.is_bounded() => {
            r.with_computed_vertices()
        }
        Reduction::Reduced(r) => Ok(r),
        Reduction::Empty => Err(Error::Precondition(format!(
            "empty moment polytope for {} with lambda={lambda}, mu={mu}",
            pair.label()
        ))),
    }
}

/// The `SU(2,2)` system in the symbolic variables
/// `(l1, l2, m1, m2, n1, n2)`: the `SU(4)` Horn system under
/// `x -> (x1, x2, -x2, -x1)` in each weight, plus the chamber conditions
/// `x1 >= x2 >= 0`, reduced.
pub fn su22_symbolic_system<F: ExactField>() -> Polytope<F> {
    let pattern = |x: i64, y: i64| -> Vector<F> {
        Vector::from_ints(&[x, y])
    };
    let mut rows = Vec::with_capacity(12);
    for block in 0..3 {
        for r in [pattern(1, 0), pattern(0, 1), pattern(0, -1), pattern(-1, 0)] {
            let mut row = Vector::zeros(6);
            row[2 * block] = r[0].clone();
            row[2 * block + 1] = r[1].clone();
            rows.push(row);
        }
    }
    let map = AffineMap::linear(rows, 6).expect("shapes agree");
    let mut p = Polytope::new(12, horn_system(4))
        .expect("dims agree")
        .substitute(&map)
        .expect("dims agree");
    for block in 0..3 {
        let mut a = Vector::zeros(6);
        a[2 * block] = -F::one();
        a[2 * block + 1] = F::one();
        p.push(Inequality::new(a, F::zero())).expect("dims agree");
        p.push(Inequality::new(-&Vector::unit(6, 2 * block + 1), F::zero()))
            .expect("dims agree");
    }
    p.remove_redundant()
        .into_polytope()
        .expect("the origin is feasible")
        .sorted()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympair::{build_pair, PairLabel};
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn rank_one_interval() {
        let pair = build_pair::<Rational>(PairLabel::AIII(1, 3)).unwrap();
        let p = klyachko_polytope(&pair, &Vector::from_ints(&[2]), &Vector::from_ints(&[5])).unwrap();
        assert_eq!(
            p.known_vertices().unwrap(),
            &[Vector::from_ints(&[3]), Vector::from_ints(&[7])]
        );
    }

    #[test]
    fn ai2_segment() {
        let pair = build_pair::<Rational>(PairLabel::AI(2)).unwrap();
        let l = Vector::from_ints(&[1, -1]);
        let p = klyachko_polytope(&pair, &l, &l).unwrap();
        assert_eq!(
            p.known_vertices().unwrap(),
            &[Vector::from_ints(&[0, 0]), Vector::from_ints(&[2, -2])]
        );
    }

    #[test]
    fn figure_weights_contain_sum() {
        let pair = build_pair::<Rational>(PairLabel::AIII(2, 2)).unwrap();
        let l = Vector::new(vec![q(3, 2), q(1, 1)]);
        let m = Vector::from_ints(&[8, 4]);
        let p = klyachko_polytope(&pair, &l, &m).unwrap();
        let top = &l + &m;
        assert!(p.known_vertices().unwrap().contains(&top));
        assert_eq!(p.tight_at(&top).unwrap().len(), 2);
    }

    #[test]
    fn su22_has_eighteen_plus_six() {
        let p = su22_symbolic_system::<Rational>();
        assert_eq!(p.inequalities().len(), 24);
    }

    #[test]
    fn unsupported_pairs() {
        let pair = build_pair::<Rational>(PairLabel::Torus(2)).unwrap();
        let x = Vector::from_ints(&[1, 0]);
        assert!(matches!(klyachko_polytope(&pair, &x, &x), Err(Error::Unsupported(_))));
        let pair = build_pair::<Rational>(PairLabel::AIII(2, 2)).unwrap();
        let bad = Vector::from_ints(&[0, 1]);
        assert!(matches!(klyachko_polytope(&pair, &bad, &bad), Err(Error::Parameter(_))));
    }
}
