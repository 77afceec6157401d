use super::*;
use crate::Rational;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

type V = Vector<Rational>;

fn v(xs: &[i64]) -> V {
    Vector::from_ints(xs)
}

fn all_systems() -> Vec<RootSystem<Rational>> {
    let mut out = Vec::new();
    for (family, ranks) in [
        (Family::A, 1..=4),
        (Family::B, 1..=4),
        (Family::C, 1..=4),
        (Family::D, 2..=4),
        (Family::BC, 1..=4),
    ] {
        for r in ranks {
            out.push(build_root_system(family, r).unwrap());
        }
    }
    out
}

/// Closure of the simple roots under all reflections they generate, computed
/// without using the enumerated positive roots.
fn brute_force_roots(rs: &RootSystem<Rational>) -> BTreeSet<V> {
    let mut roots: BTreeSet<V> = rs.simple_roots().iter().cloned().collect();
    // the non-reduced family also carries 2 * (short simple root)
    if !rs.is_reduced() {
        let last = rs.simple_roots().last().unwrap().scale(&two());
        roots.insert(last);
    }
    loop {
        let snapshot: Vec<V> = roots.iter().cloned().collect();
        let mut grew = false;
        for a in &snapshot {
            for b in &snapshot {
                let r = RootSystem::reflect(a, b);
                if roots.insert(r) {
                    grew = true;
                }
            }
        }
        if !grew {
            return roots;
        }
    }
}

#[test]
fn build_examples() {
    // A_1 realized in 2 coordinates
    let a1 = build_root_system::<Rational>(Family::A, 1).unwrap();
    assert_eq!(a1.positive_roots(), &[v(&[1, -1])]);
    assert_eq!(a1.ambient_dim(), 2);

    let bc2 = build_root_system::<Rational>(Family::BC, 2).unwrap();
    let expected: BTreeSet<V> = [
        v(&[1, -1]),
        v(&[1, 1]),
        v(&[1, 0]),
        v(&[0, 1]),
        v(&[2, 0]),
        v(&[0, 2]),
    ]
    .into();
    assert_eq!(bc2.positive_roots().iter().cloned().collect::<BTreeSet<_>>(), expected);

    // A_3 in 4 coordinates: e_i - e_j, i < j <= 4
    let a3 = build_root_system::<Rational>(Family::A, 3).unwrap();
    let mut brute = BTreeSet::new();
    for i in 0..4 {
        for j in i + 1..4 {
            brute.insert(&V::unit(4, i) - &V::unit(4, j));
        }
    }
    assert_eq!(a3.positive_roots().len(), 6);
    assert_eq!(a3.positive_roots().iter().cloned().collect::<BTreeSet<_>>(), brute);
}

#[test]
fn invalid_parameters() {
    assert!(build_root_system::<Rational>(Family::A, 0).is_err());
    assert!(build_root_system::<Rational>(Family::D, 1).is_err());
    assert!("E".parse::<Family>().is_err());
    assert_eq!("bc".parse::<Family>().unwrap(), Family::BC);
}

#[test]
fn root_sets_are_closed_and_match_brute_force() {
    for rs in all_systems() {
        let all: BTreeSet<V> = rs.roots().into_iter().collect();
        assert_eq!(brute_force_roots(&rs), all, "{}", rs.label());
        for a in &all {
            for b in &all {
                assert!(all.contains(&RootSystem::reflect(a, b)));
            }
        }
    }
}

#[test]
fn simple_roots_form_a_basis_with_nonnegative_integer_coordinates() {
    for rs in all_systems() {
        assert_eq!(linalg::rank(rs.simple_roots()), rs.rank());
        for r in rs.positive_roots() {
            let c = linalg::coordinates_in(rs.simple_roots(), r).unwrap();
            assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{} {r}", rs.label());
        }
    }
}

#[test]
fn only_bc_is_non_reduced() {
    for rs in all_systems() {
        let doubled = rs
            .positive_roots()
            .iter()
            .filter(|r| rs.is_positive_root(&r.scale(&two())))
            .count();
        if rs.family() == Some(Family::BC) {
            assert_eq!(doubled, rs.rank());
            assert!(!rs.is_reduced());
        } else {
            assert_eq!(doubled, 0);
        }
    }
}

#[test]
fn simple_reflection_flips_only_its_own_ray() {
    for rs in all_systems() {
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            let flipped: Vec<&V> = rs
                .positive_roots()
                .iter()
                .filter(|r| !rs.is_positive_root(&rs.simple_reflect(i + 1, r)))
                .collect();
            for r in &flipped {
                let c = linalg::coordinates_in(std::slice::from_ref(alpha), r).unwrap();
                assert!(c[0].is_positive());
            }
            let expected = if rs.is_positive_root(&alpha.scale(&two())) { 2 } else { 1 };
            assert_eq!(flipped.len(), expected, "{} s{}", rs.label(), i + 1);
        }
    }
}

#[test]
fn group_orders_and_longest_elements() {
    for rs in all_systems() {
        let elems = rs.elements();
        assert_eq!(elems.len() as u128, rs.weyl_order(), "{}", rs.label());
        let w0 = rs.longest_element();
        let indivisible = rs
            .positive_roots()
            .iter()
            .filter(|r| {
                let half = r.scale(&(Rational::one() / two::<Rational>()));
                !rs.is_positive_root(&half)
            })
            .count();
        assert_eq!(w0.length(), indivisible);
        assert_eq!(elems.iter().map(|w| w.length()).max(), Some(w0.length()));
    }
    assert_eq!(build_root_system::<Rational>(Family::A, 3).unwrap().weyl_order(), 24);
    assert_eq!(build_root_system::<Rational>(Family::D, 4).unwrap().weyl_order(), 192);
}

#[test]
fn elements_permute_roots_and_match_their_words() {
    for rs in all_systems().into_iter().filter(|r| r.rank() <= 3) {
        let roots: BTreeSet<V> = rs.roots().into_iter().collect();
        for w in rs.elements() {
            let image: BTreeSet<V> = roots.iter().map(|r| w.apply(r)).collect();
            assert_eq!(image, roots);
            let rebuilt = rs.element_from_word(w.word()).unwrap();
            assert_eq!(rebuilt, w);
            // a word equals the composition of its reflections on vectors
            let x = rs.rho().clone();
            let by_word = w
                .word()
                .iter()
                .rev()
                .fold(x.clone(), |acc, &i| rs.simple_reflect(i, &acc));
            assert_eq!(w.apply(&x), by_word);
            assert!(rs.contains(&w));
        }
    }
}

#[test]
fn orbit_examples() {
    let a1 = build_root_system::<Rational>(Family::A, 1).unwrap();
    assert_eq!(a1.weyl_orbit(&v(&[0, 0])).unwrap().len(), 1);

    let a2 = build_root_system::<Rational>(Family::A, 2).unwrap();
    assert_eq!(a2.weyl_orbit(&v(&[2, 1, -3])).unwrap().len(), 6);

    let bc2 = build_root_system::<Rational>(Family::BC, 2).unwrap();
    let orbit = bc2.weyl_orbit(&v(&[1, 0])).unwrap();
    let expected: BTreeSet<V> = [v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])].into();
    assert_eq!(orbit, expected);

    assert!(bc2.weyl_orbit(&v(&[1, 0, 0])).is_err());
}

#[test]
fn orbit_sizes_divide_group_order() {
    for rs in all_systems() {
        let order = rs.weyl_order();
        let n = rs.ambient_dim() as i64;
        let samples = [
            Vector::from_ints(&(0..n).map(|i| n - i).collect::<Vec<_>>()),
            Vector::from_ints(&(0..n).map(|i| if i == 0 { 1 } else { 0 }).collect::<Vec<_>>()),
            Vector::from_ints(&vec![1; n as usize]),
        ];
        for s in &samples {
            let size = rs.weyl_orbit(s).unwrap().len() as u128;
            assert_eq!(order % size, 0);
        }
        let rho = rs.rho().clone();
        assert!(rs.is_strictly_dominant(&rho));
        assert_eq!(rs.weyl_orbit(&rho).unwrap().len() as u128, order);
    }
}

#[test]
fn dominant_representative_examples() {
    let a1 = build_root_system::<Rational>(Family::A, 1).unwrap();
    let (l, w) = a1.dominant_representative(&v(&[0, 1])).unwrap();
    assert_eq!(l, v(&[1, 0]));
    assert_eq!(w.word(), &[1]);

    let (l, w) = a1.dominant_representative(&v(&[3, 1])).unwrap();
    assert_eq!(l, v(&[3, 1]));
    assert!(w.is_identity());

    let bc2 = build_root_system::<Rational>(Family::BC, 2).unwrap();
    let xi = v(&[-3, 1]);
    let (l, w) = bc2.dominant_representative(&xi).unwrap();
    assert_eq!(l, v(&[3, 1]));
    assert_eq!(w.apply(&xi), l);
    // oracle: the unique chamber point of the orbit
    let chamber: Vec<V> = bc2
        .weyl_orbit(&xi)
        .unwrap()
        .into_iter()
        .filter(|p| bc2.is_dominant(p))
        .collect();
    assert_eq!(chamber, vec![v(&[3, 1])]);
}

#[test]
fn cone_examples() {
    let a3 = build_root_system::<Rational>(Family::A, 3).unwrap();
    assert!(a3.cone_member(&v(&[0, 0, 0, 0])).unwrap());
    assert!(a3.cone_member(&v(&[1, 0, 0, -1])).unwrap());
    assert!(!a3.cone_member(&v(&[-1, 0, 0, 1])).unwrap());
    // off the sum-zero hyperplane
    assert!(!a3.cone_member(&v(&[1, 0, 0, 0])).unwrap());
}

#[test]
fn orbit_points_lie_below_the_dominant_point() {
    for rs in all_systems().into_iter().filter(|r| r.rank() <= 3) {
        let lambda = rs.rho().clone();
        for xi in rs.weyl_orbit(&lambda).unwrap() {
            assert!(rs.dominance_leq(&xi, &lambda).unwrap());
            if xi != lambda {
                assert!(!rs.dominance_leq(&lambda, &xi).unwrap());
            }
        }
    }
}

#[test]
fn coweights_and_weights_are_dual() {
    for rs in all_systems() {
        let cw = rs.fundamental_coweights();
        let fw = rs.fundamental_weights();
        let coroots = rs.simple_coroots();
        for i in 0..rs.rank() {
            for (j, (alpha, coroot)) in rs.simple_roots().iter().zip(&coroots).enumerate() {
                let delta = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(cw[i].dot(alpha), delta);
                assert_eq!(fw[i].dot(coroot), delta);
            }
        }
    }
    let c2 = build_root_system::<Rational>(Family::C, 2).unwrap();
    assert_eq!(c2.fundamental_weights(), vec![v(&[1, 0]), v(&[1, 1])]);
}

#[test]
fn works_over_fixed_width_rationals() {
    let b3 = build_root_system::<Rational64>(Family::B, 3).unwrap();
    assert_eq!(b3.elements().len(), 48);
    let (l, _) = b3
        .dominant_representative(&Vector::from_ints(&[-1, 3, -2]))
        .unwrap();
    assert_eq!(l, Vector::from_ints(&[3, 2, 1]));
}

#[test]
fn direct_sum_and_toral() {
    let a1 = build_root_system::<Rational>(Family::A, 1).unwrap();
    let sum = RootSystem::direct_sum(&[&a1, &a1]);
    assert_eq!(sum.ambient_dim(), 4);
    assert_eq!(sum.rank(), 2);
    assert_eq!(sum.weyl_order(), 4);
    assert_eq!(sum.elements().len(), 4);
    assert_eq!(sum.family(), None);

    let t = RootSystem::<Rational>::toral(3);
    assert_eq!(t.rank(), 0);
    assert_eq!(t.weyl_order(), 1);
    assert_eq!(t.weyl_orbit(&v(&[1, 2, 3])).unwrap().len(), 1);
    assert!(t.cone_member(&v(&[0, 0, 0])).unwrap());
    assert!(!t.cone_member(&v(&[1, 0, 0])).unwrap());
}

fn system_strategy() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|r| (Family::A, r)),
        (1usize..=4).prop_map(|r| (Family::B, r)),
        (1usize..=4).prop_map(|r| (Family::C, r)),
        (2usize..=4).prop_map(|r| (Family::D, r)),
        (1usize..=4).prop_map(|r| (Family::BC, r)),
    ]
}

proptest! {
    #[test]
    fn dominant_representative_is_orbit_invariant(
        (family, rank) in system_strategy(),
        coords in prop::collection::vec(-6i64..=6, 5),
        dens in prop::collection::vec(1i64..=4, 5),
        word in prop::collection::vec(1usize..=4, 0..12),
    ) {
        let rs = build_root_system::<Rational>(family, rank).unwrap();
        let n = rs.ambient_dim();
        let xi: V = (0..n).map(|i| Rational::from_ratio(coords[i], dens[i])).collect();
        let word: Vec<usize> = word.into_iter().filter(|&i| i <= rs.rank()).collect();
        let w = rs.element_from_word(&word).unwrap();
        let (a, wa) = rs.dominant_representative(&xi).unwrap();
        let (b, _) = rs.dominant_representative(&w.apply(&xi)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(rs.is_dominant(&a));
        prop_assert_eq!(wa.apply(&xi), a);
        prop_assert!(w.length() <= word.len());
    }
}
