use noether_core::exact::{quad_norm, ratio};
use noether_core::galois::{quaternion_class, w1w2};
use noether_core::groups::{build_group, is_generalized_quaternion16, two_sylow};
use noether_core::quadforms::{isotropic_over, sum_of_squares, witt_index_q};
use noether_core::{
    verdict, Decision, DiagonalForm, FieldDescriptor, GroupSpec, IsotropyOutcome, Place, QuadFieldElem,
    Report,
};

#[test]
fn seven_is_three_squares_in_q_sqrt_5() {
    let k: FieldDescriptor = "Q(sqrt 5)".parse().unwrap();
    let half = ratio(1, 2);
    let x = QuadFieldElem::new(ratio(2, 1), ratio(0, 1), &k);
    let y = QuadFieldElem::new(half.clone(), half.clone(), &k);
    let z = QuadFieldElem::new(half.clone(), -half, &k);
    let sum = &(&(&x * &x) + &(&y * &y)) + &(&z * &z);
    assert_eq!(sum, QuadFieldElem::new(ratio(7, 1), ratio(0, 1), &k));
    assert_eq!(sum_of_squares(&ratio(7, 1), 3, &k).unwrap(), Decision::Yes);
    assert_eq!(quad_norm(&y), ratio(-1, 1));
}

#[test]
fn forms_over_fields() {
    let f = DiagonalForm::from_ints(&[1, 1, 1, -7]).unwrap();
    let over = |s: &str| isotropic_over(&f, &s.parse().unwrap()).unwrap();
    assert_eq!(over("Q"), IsotropyOutcome::Anisotropic);
    assert_eq!(over("Q(sqrt -1)"), IsotropyOutcome::Isotropic);
    assert_eq!(over("Q(sqrt 17)"), IsotropyOutcome::Anisotropic);
    let (w, _) = witt_index_q(&f.orthogonal_sum(&DiagonalForm::from_ints(&[7, -1]).unwrap())).unwrap();
    assert_eq!(w, 2);
}

#[test]
fn brauer_data_of_the_sum_of_four_squares() {
    let (w1, w2) = w1w2(&DiagonalForm::ones(4)).unwrap();
    assert_eq!(w1, 1.into());
    assert!(w2.is_split());
    let c = quaternion_class(&ratio(-1, 1), &ratio(-1, 1)).unwrap();
    assert!(c.ramified.contains(&Place::Real) && c.ramified.contains(&Place::Finite(2)));
}

#[test]
fn sylow_of_a_permutation_group() {
    // symmetries of the octagon
    let spec: GroupSpec = "perm:(1 2 3 4 5 6 7 8);(1 2)(3 8)(4 7)(5 6)".parse().unwrap();
    let g = build_group(&spec).unwrap();
    assert_eq!(g.order(), 16);
    let p = two_sylow(&g);
    assert!(p.is_whole());
    assert!(!is_generalized_quaternion16(&p));
}

#[test]
fn report_round_trip_through_library() {
    let v = verdict(&"catalog:SL2_9".parse().unwrap(), &FieldDescriptor::rationals()).unwrap();
    let r = Report::from(&v);
    assert_eq!(r.theorem.as_deref(), Some("1.5"));
    assert_eq!(r.group.order, 720);
    assert!(r.group.abelian_invariants.is_empty());
}
