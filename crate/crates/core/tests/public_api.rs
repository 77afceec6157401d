use momentcone::polytope::klyachko_polytope;
use momentcone::sympair::SymmetricPair;
use momentcone::vector::Vector;
use momentcone::{ExactField, Rational};
use num_rational::Ratio;

fn text<F: ExactField>(vs: &[Vector<F>]) -> Vec<String> {
    vs.iter().map(ToString::to_string).collect()
}

fn figure_polytope<F: ExactField>() -> (Vec<Vector<F>>, bool, bool) {
    let pair = SymmetricPair::<F>::parse("AIII:2,2").unwrap();
    let lambda = Vector::parse("3/2,1").unwrap();
    let mu = Vector::parse("8,4").unwrap();
    let p = klyachko_polytope(&pair, &lambda, &mu).unwrap();
    let inside = p.membership(&Vector::parse("19/2,5").unwrap()).unwrap();
    let outside = p.membership(&Vector::parse("10,5").unwrap()).unwrap();
    (p.vertices().unwrap(), inside, outside)
}

// Same answer whichever exact field backs the computation.
#[test]
fn fields_agree() {
    let (big, inside, outside) = figure_polytope::<Rational>();
    assert!(inside && !outside);
    assert_eq!(big.len(), 8);
    let (small, _, _) = figure_polytope::<Ratio<i64>>();
    let (wide, _, _) = figure_polytope::<Ratio<i128>>();
    assert_eq!(text(&big), text(&small));
    assert_eq!(text(&big), text(&wide));
}

#[test]
fn refuses_unmodelled_pairs() {
    let pair = SymmetricPair::<Rational>::parse("BDI:2,2").unwrap();
    let x = Vector::parse("1,0").unwrap();
    assert!(klyachko_polytope(&pair, &x, &x).is_err());
}
