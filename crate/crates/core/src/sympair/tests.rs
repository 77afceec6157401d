use super::*;
use crate::polytope::{hull_from_points, klyachko_polytope};
use crate::rootsys::parse_word;
use crate::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn pair(s: &str) -> SymmetricPair<Rational> {
    SymmetricPair::parse(s).unwrap()
}

fn catalog() -> Vec<SymmetricPair<Rational>> {
    [
        "AI:2", "AI:3", "AI:4", "AIII:1,1", "AIII:1,2", "AIII:1,3", "AIII:2,2", "AIII:2,3",
        "AIII:3,3", "BDI:1,2", "BDI:1,3", "BDI:2,2", "BDI:2,3", "BDI:3,3", "BDI:3,4", "Torus:1",
        "Torus:3", "Diag:A2", "Diag:B2", "Diag:C2", "Diag:BC2", "Diag:D3",
    ]
    .iter()
    .map(|s| pair(s))
    .collect()
}

/// Random dominant point: nonnegative rational combination of fundamental
/// weights plus an arbitrary invariant component.
fn random_dominant(p: &SymmetricPair<Rational>, rng: &mut ChaCha8Rng) -> Vector<Rational> {
    let rs = p.restricted();
    let mut x = Vector::zeros(p.a_dim());
    for w in rs.fundamental_weights() {
        x = x.axpy(&q(rng.random_range(0..7), rng.random_range(1..4)), &w);
    }
    for d in rs.invariant_directions() {
        x = x.axpy(&q(rng.random_range(-5..6), rng.random_range(1..4)), &d);
    }
    x
}

fn random_point(dim: usize, rng: &mut ChaCha8Rng) -> Vector<Rational> {
    (0..dim).map(|_| q(rng.random_range(-6..7), rng.random_range(1..4))).collect()
}

#[test]
fn labels_round_trip() {
    for s in ["AI:4", "AIII:2,2", "BDI:2,3", "Torus:3", "Diag:A3", "Diag:BC2"] {
        assert_eq!(s.parse::<PairLabel>().unwrap().to_string(), s);
    }
    for s in ["AX:1", "AIII:2", "AI", "Diag:E8", "Diag:A", "Torus:x"] {
        assert!(s.parse::<PairLabel>().is_err(), "{s}");
    }
}

#[test]
fn construction_errors() {
    for s in ["AIII:3,2", "BDI:3,2", "AI:1", "AIII:0,2", "BDI:1,1", "Torus:0", "Diag:D1"] {
        assert!(SymmetricPair::<Rational>::parse(s).is_err(), "{s}");
    }
}

#[test]
fn restricted_families() {
    let p = pair("AIII:2,2");
    assert_eq!(p.restricted().family(), Some(Family::C));
    assert_eq!(p.restricted().rank(), 2);
    let p = pair("AIII:1,3");
    assert_eq!(p.restricted().family(), Some(Family::BC));
    assert_eq!(p.restricted().rank(), 1);
    let p = pair("AI:4");
    assert_eq!(p.restricted().label(), "A3");
    assert_eq!(p.ambient().label(), "A3");
    let x = Vector::from_ints(&[3, 1, 0, -2]);
    assert_eq!(p.embed(&x).unwrap(), x);
    assert_eq!(p.restrict(&x).unwrap(), x);
    assert_eq!(pair("BDI:2,3").ambient().label(), "B2");
    assert_eq!(pair("BDI:2,4").ambient().label(), "D3");
    assert_eq!(pair("BDI:2,2").restricted().label(), "D2");
}

#[test]
fn aiii_maps() {
    let p = pair("AIII:2,3");
    let l = Vector::new(vec![q(3, 2), q(1, 1)]);
    let e = p.embed(&l).unwrap();
    assert_eq!(e, Vector::new(vec![q(3, 2), q(1, 1), q(0, 1), q(-1, 1), q(-3, 2)]));
    assert_eq!(p.restrict(&e).unwrap(), l);
    assert_eq!(p.root_scale(), &q(2, 1));
}

#[test]
fn diagonal_restriction_is_addition() {
    let p = pair("Diag:A2");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let x = random_point(3, &mut rng);
        let y = random_point(3, &mut rng);
        let r = p.restrict(&Vector::concat(&[&x, &y])).unwrap();
        assert_eq!(r, &x + &y);
    }
}

#[test]
fn chambers_embed_into_ambient_chamber() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for p in catalog() {
        for _ in 0..25 {
            let x = random_dominant(&p, &mut rng);
            assert!(p.ambient().is_dominant(&p.embed(&x).unwrap()), "{} {x}", p.label());
        }
    }
}

#[test]
fn cone_is_ambient_cone_on_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in catalog() {
        for _ in 0..40 {
            let x = random_point(p.a_dim(), &mut rng);
            let inside = p.restricted().cone_member(&x).unwrap();
            assert_eq!(inside, p.ambient().cone_member(&p.embed(&x).unwrap()).unwrap(), "{}", p.label());
        }
        // positive combinations of positive roots are members
        let s: Vector<Rational> = p.restricted().positive_roots().iter().fold(Vector::zeros(p.a_dim()), |a, r| &a + r);
        assert!(p.ambient().cone_member(&p.embed(&s).unwrap()).unwrap());
    }
}

#[test]
fn restricted_orbit_is_restricted_ambient_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in catalog() {
        if p.ambient().weyl_order() > 1000 {
            continue;
        }
        for _ in 0..5 {
            let l = random_dominant(&p, &mut rng);
            let direct = p.restricted_orbit(&l).unwrap();
            let via: BTreeSet<_> = p
                .ambient()
                .weyl_orbit(&p.embed(&l).unwrap())
                .unwrap()
                .into_iter()
                .filter_map(|x| {
                    let r = p.restrict(&x).unwrap();
                    (p.embed(&r).unwrap() == x).then_some(r)
                })
                .collect();
            assert_eq!(direct, via, "{} {l}", p.label());
        }
    }
}

#[test]
fn orbit_examples() {
    let p = pair("AIII:2,2");
    let o = p.restricted_orbit(&Vector::from_ints(&[1, 0])).unwrap();
    let expect: BTreeSet<_> = [[1, 0], [-1, 0], [0, 1], [0, -1]].iter().map(|x| Vector::from_ints(x)).collect();
    assert_eq!(o, expect);
    assert_eq!(p.restricted_orbit(&Vector::zeros(2)).unwrap().len(), 1);
    let p = pair("AI:3");
    assert_eq!(p.restricted_orbit(&Vector::from_ints(&[1, 0, -1])).unwrap().len(), 6);
}

#[test]
fn kostant_examples() {
    let p = pair("AIII:1,3");
    let k = kostant_polytope(&p, &Vector::from_ints(&[3])).unwrap();
    assert!(k.equal(&crate::polytope::Polytope::interval(q(-3, 1), q(3, 1))).unwrap());
    let z = kostant_polytope(&p, &Vector::from_ints(&[0])).unwrap();
    assert_eq!(z.vertices().unwrap(), vec![Vector::from_ints(&[0])]);
    let p = pair("AI:2");
    let k = kostant_polytope(&p, &Vector::from_ints(&[1, -1])).unwrap();
    assert_eq!(k.vertices().unwrap(), vec![Vector::from_ints(&[-1, 1]), Vector::from_ints(&[1, -1])]);
    assert!(kostant_polytope(&p, &Vector::from_ints(&[-1, 1])).is_err());
}

#[test]
fn kostant_matches_point_hull_in_low_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for p in catalog() {
        if p.a_dim() > 3 {
            continue;
        }
        for _ in 0..4 {
            let l = random_dominant(&p, &mut rng);
            let k = kostant_polytope(&p, &l).unwrap();
            let pts: Vec<_> = p.restricted_orbit(&l).unwrap().into_iter().collect();
            let h = hull_from_points(&pts).unwrap();
            assert!(k.equal(&h).unwrap(), "{} {l}", p.label());
        }
    }
}

#[test]
fn kostant_is_ambient_hull_on_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in catalog() {
        for _ in 0..3 {
            let l = random_dominant(&p, &mut rng);
            let k = kostant_polytope(&p, &l).unwrap();
            let amb = weyl_hull(p.ambient(), &p.embed(&l).unwrap()).unwrap();
            let pulled = amb.substitute(p.embed_map()).unwrap();
            assert!(k.equal(&pulled).unwrap(), "{} {l}", p.label());
        }
    }
}

/// Brute-force Bruhat order from the subword property: `v <= w` iff some
/// subword of the reduced word of `w` multiplies to `v`.
fn subword_leq(rs: &RootSystem<Rational>, v: &WeylElement, w: &WeylElement) -> bool {
    let word = w.word();
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<usize> = (0..word.len()).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
        &rs.element_from_word(&sub).unwrap() == v
    })
}

#[test]
fn bruhat_matches_subword_property() {
    for s in ["AIII:2,2", "AI:4", "BDI:3,4", "AIII:1,3"] {
        let p = pair(s);
        let g = p.weyl_group();
        let els = g.elements();
        for v in &els {
            for w in &els {
                assert_eq!(g.bruhat_leq(v, w).unwrap(), subword_leq(p.restricted(), v, w), "{s}: {v} <= {w}");
            }
        }
    }
}

#[test]
fn bruhat_examples() {
    let p = pair("AIII:2,2");
    let e = |s: &str| p.weyl_element(&parse_word(s).unwrap()).unwrap();
    assert!(bruhat_leq(&p, &e("e"), &e("s2s1")).unwrap());
    assert!(bruhat_leq(&p, &e("s2s1"), &e("s2s1")).unwrap());
    assert!(bruhat_leq(&p, &e("s1"), &e("s2s1")).unwrap());
    assert!(!bruhat_leq(&p, &e("s2s1s2"), &e("s1s2")).unwrap());
    assert!(!bruhat_leq(&p, &e("s1s2"), &e("s2s1")).unwrap());
    let other = pair("AI:3");
    let foreign = other.weyl_element(&[1]).unwrap();
    assert!(bruhat_leq(&p, &foreign, &e("s1")).is_err());
}

fn figure_weights() -> (Vector<Rational>, Vector<Rational>) {
    (Vector::new(vec![q(3, 2), q(1, 1)]), Vector::from_ints(&[8, 4]))
}

#[test]
fn orbit_closure_identity_and_longest() {
    let p = pair("AIII:2,2");
    let (l, m) = figure_weights();
    let id = p.weyl_element(&[]).unwrap();
    let pt = orbit_closure_polytope(&p, &l, &m, &id).unwrap();
    assert_eq!(pt.known_vertices().unwrap(), &[&l + &m]);
    let w0 = p.restricted().longest_element();
    let full = orbit_closure_polytope(&p, &l, &m, &w0).unwrap();
    assert!(full.equal(&klyachko_polytope(&p, &l, &m).unwrap()).unwrap());
}

#[test]
fn figure_subpolytopes() {
    let p = pair("AIII:2,2");
    let (l, m) = figure_weights();
    let full = klyachko_polytope(&p, &l, &m).unwrap();
    let top = &l + &m;
    for word in ["s2s1", "s1s2"] {
        let w = p.weyl_element(&parse_word(word).unwrap()).unwrap();
        let sub = orbit_closure_polytope(&p, &l, &m, &w).unwrap();
        assert!(full.contains(&sub).unwrap(), "{word}");
        assert!(sub.membership(&top).unwrap(), "{word}");
    }
    // the shaded region as drawn: vertices in these coordinates
    let w = p.weyl_element(&parse_word("s1s2").unwrap()).unwrap();
    let mut v = orbit_closure_polytope(&p, &l, &m, &w).unwrap().known_vertices().unwrap().to_vec();
    v.sort();
    let expect = vec![
        Vector::new(vec![q(9, 1), q(5, 2)]),
        Vector::new(vec![q(9, 1), q(11, 2)]),
        Vector::new(vec![q(19, 2), q(3, 1)]),
        Vector::new(vec![q(19, 2), q(5, 1)]),
    ];
    assert_eq!(v, expect);
}

#[test]
fn orbit_closure_refuses_wall_touching_weights() {
    let p = pair("AIII:2,2");
    let l = Vector::from_ints(&[1, 0]);
    let w = p.restricted().longest_element();
    match orbit_closure_polytope(&p, &l, &l, &w) {
        Err(crate::Error::Precondition(msg)) => assert!(msg.contains("alpha_"), "{msg}"),
        other => panic!("expected a precondition error, got {other:?}"),
    }
}
