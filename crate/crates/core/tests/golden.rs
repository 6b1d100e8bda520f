//! Frozen text forms. The sorted, canonical serialization is a stable
//! interface: these strings must never change silently.

use glhat::completion::{Evaluator, YangianGen};
use glhat::pbw::{multiply, normal_order, UEAElement};
use glhat::scalar::{ParamPoint, Rational};
use glhat::{LieElement, LoopAlgebra, LoopGen};

#[test]
fn generator_forms() {
    let alg = LoopAlgebra::new(3);
    assert_eq!(alg.e(1, 2, -3).to_string(), "E[1,2](-3)");
    assert_eq!(LoopGen::Central.to_string(), "c");
    assert_eq!(LoopGen::Degree.to_string(), "d");
    assert_eq!("E[2,3](5)".parse::<LoopGen>().unwrap(), alg.e(2, 3, 5));
}

#[test]
fn lie_element_form_is_sorted_and_stable() {
    let alg = LoopAlgebra::new(4);
    let h0 = alg.h(0);
    assert_eq!(h0.to_string(), "-E[1,1](0) + E[4,4](0) + c");
    let x = alg
        .e_elem(2, 1, 2)
        .scale(&Rational::new(-7, 3))
        .add(&alg.e_elem(1, 1, -1));
    assert_eq!(x.to_string(), "-7/3*E[2,1](2) + E[1,1](-1)");
}

#[test]
fn enveloping_element_form() {
    let alg = LoopAlgebra::new(3);
    let prod = multiply(
        &UEAElement::from_lie(&alg.x_plus(1)).unwrap(),
        &UEAElement::from_lie(&alg.x_minus(1)).unwrap(),
    );
    assert_eq!(prod.to_string(), "E[1,2](0)*E[2,1](0)");
    let swapped = normal_order(&[alg.e(2, 1, 0), alg.e(1, 2, 0)]);
    assert_eq!(
        swapped.to_string(),
        "-E[1,1](0) + E[1,2](0)*E[2,1](0) + E[2,2](0)"
    );
    let with_central = normal_order(&[alg.e(2, 1, -1), alg.e(1, 2, 1)]);
    assert_eq!(
        with_central.to_string(),
        "E[1,2](1)*E[2,1](-1) - E[1,1](0) + E[2,2](0) - c"
    );
}

#[test]
fn evaluation_image_form() {
    let alg = LoopAlgebra::new(3);
    let params = ParamPoint::new(Rational::new(1, 2), Rational::new(1, 3), 3, true).unwrap();
    let ev = Evaluator::new(alg, params, 2).unwrap();
    let img = ev.ev_gen(YangianGen::XPlus { i: 0, r: 1 }).unwrap();
    assert_eq!(
        img.to_string(),
        "5/6*E[1,1](3)*E[3,1](-2) + 5/6*E[2,1](3)*E[3,2](-2) + 5/6*E[3,1](3)*E[3,3](-2) + \
         5/6*E[1,1](2)*E[3,1](-1) + 5/6*E[2,1](2)*E[3,2](-1) + 5/6*E[3,1](2)*E[3,3](-1) + \
         5/6*E[1,1](1)*E[3,1](0) + 5/6*E[2,1](1)*E[3,2](0) + 2*E[3,1](1) + \
         5/6*E[3,1](1)*E[3,3](0) (window 1)"
    );
}

#[test]
fn wild_round_trip() {
    // parse(print(x)) is the identity on a messy element
    let text = "-E[2,2](0) + 5/6*E[1,2](-1) + 2*c - 1/3*E[3,1](4)";
    let parsed: LieElement = text.parse().unwrap();
    let reprinted = parsed.to_string();
    let reparsed: LieElement = reprinted.parse().unwrap();
    assert_eq!(parsed, reparsed);
}
