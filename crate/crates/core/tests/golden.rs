use lodeg_core::budget::Limits;
use lodeg_core::field::Rationals;
use lodeg_core::genericity::Seed;
use lodeg_core::invariants::Analyzer;
use lodeg_core::monomial::MonomialOrder;
use lodeg_core::parse::parse_polynomial;
use lodeg_core::poly::PolyRing;
use lodeg_core::variety::VarietySpec;

fn analyzer(names: &[&str], gens: &[&str]) -> Analyzer<'static> {
    let ring = PolyRing::new(Rationals, names.iter().copied(), MonomialOrder::Grevlex);
    let g: Vec<_> = gens.iter().map(|t| parse_polynomial(&ring, t).unwrap()).collect();
    Analyzer::new(VarietySpec::new(ring, g).unwrap(), Seed(7), Limits::unlimited())
}

fn quartic() -> Analyzer<'static> {
    analyzer(&["x1", "x2", "x3", "x4"], &["x1^2*x2 - x3*x4"])
}

#[test]
fn quartic_bidegrees_and_polar() {
    let q = quartic();
    assert_eq!(q.bidegrees().unwrap().value.values, vec![1, 4, 5, 3]);
    assert_eq!(q.sectional_lo_degrees().unwrap().value.values, vec![1, 4, 5, 3]);
    assert_eq!(q.polar_degrees().unwrap().value.values, vec![3, 6, 6, 3]);
    assert!(q.dual_contains_hyperplane_at_infinity().unwrap().value);
    let (_, a) = q.chern_mather().unwrap();
    assert_eq!(a.values, vec![1, 3, 4, 3]);
    assert!(q.verify_polar_relation().unwrap().passed);
}

#[test]
fn cubic_surface() {
    let c = analyzer(&["x1", "x2", "x3"], &["1 + x1 + x2^2 + x3^3"]);
    assert_eq!(c.bidegrees().unwrap().value.values, vec![2, 4, 3]);
    assert!(c.verify_theorem_bs().unwrap().passed);
}
