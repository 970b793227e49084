use std::collections::BTreeSet;

use num_complex::Complex64;

use super::*;
use crate::newton::LatticePoint;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn quads(p: &MixedPolynomial) -> Vec<(u32, u32, u32, u32)> {
    p.monomials().iter().map(|m| m.quad()).collect()
}

fn pts(coords: &[(i64, i64)]) -> BTreeSet<LatticePoint> {
    coords
        .iter()
        .map(|&(x, y)| LatticePoint::new(x, y))
        .collect()
}

#[test]
fn parse_quartic_fixture() {
    let p = MixedPolynomial::parse("u^4 + ~u u^2 v + u^2 ~v^2 + v^6").unwrap();
    let mut got = quads(&p);
    got.sort();
    assert_eq!(
        got,
        vec![(0, 6, 0, 0), (2, 0, 0, 2), (2, 1, 1, 0), (4, 0, 0, 0)]
    );
}

#[test]
fn parse_cancellation_gives_zero() {
    let p = MixedPolynomial::parse("u - u").unwrap();
    assert!(p.is_zero());
}

#[test]
fn parse_complex_coefficient() {
    let p = MixedPolynomial::parse("(1-2i) u v^3").unwrap();
    assert_eq!(p.monomials().len(), 1);
    let m = p.monomials()[0];
    assert_eq!(m.coeff, c(1.0, -2.0));
    assert_eq!(m.quad(), (1, 3, 0, 0));
}

#[test]
fn parse_aliases_and_star() {
    let a = MixedPolynomial::parse("~u v^6 + 2 ub^2").unwrap();
    let b = MixedPolynomial::parse("ub * v^6 + 2 ~u^2").unwrap();
    assert_eq!(a, b);
}

#[test]
fn parse_errors() {
    assert!(matches!(
        MixedPolynomial::parse("u +"),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        MixedPolynomial::parse(""),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        MixedPolynomial::parse("u^-1"),
        Err(Error::NegativeExponent { .. })
    ));
    assert!(matches!(
        MixedPolynomial::parse("u^2.5"),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        MixedPolynomial::parse("1 + u"),
        Err(Error::NonzeroConstantTerm)
    ));
    assert!(matches!(
        MixedPolynomial::parse("~w"),
        Err(Error::Syntax { .. })
    ));
    assert!(matches!(
        MixedPolynomial::parse("u ^"),
        Err(Error::Syntax { .. })
    ));
}

#[test]
fn syntax_error_reports_position() {
    match MixedPolynomial::parse("u^4 $ v") {
        Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("expected syntax error, got {other:?}"),
    }
}

#[test]
fn constant_zero_input_is_the_zero_polynomial() {
    assert!(MixedPolynomial::parse("0").unwrap().is_zero());
    assert!(MixedPolynomial::parse("1 - 1").unwrap().is_zero());
}

#[test]
fn evaluate_modulus_squared() {
    let p = MixedPolynomial::parse("u ~u").unwrap();
    let got = p.evaluate(c(3.0, 4.0), c(7.0, -2.0));
    assert!((got - c(25.0, 0.0)).norm() < 1e-12);
}

#[test]
fn evaluate_single_power() {
    let p = MixedPolynomial::parse("v^6").unwrap();
    assert!((p.evaluate(c(0.3, 9.0), c(1.0, 0.0)) - c(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn evaluate_quartic_fixture_at_ones() {
    let p = MixedPolynomial::parse("u^4 + ~u u^2 v + u^2 ~v^2 + v^6").unwrap();
    assert!((p.evaluate(c(1.0, 0.0), c(1.0, 0.0)) - c(4.0, 0.0)).norm() < 1e-12);
}

#[test]
fn face_function_selects_by_total_exponent() {
    let p = MixedPolynomial::parse("u^4 + ~u u^2 v + u^2 ~v^2 + v^6").unwrap();
    let f = p.face_function(&pts(&[(2, 2), (3, 1)]));
    assert_eq!(f, MixedPolynomial::parse("~u u^2 v + u^2 ~v^2").unwrap());

    assert!(p.face_function(&BTreeSet::new()).is_zero());
}

#[test]
fn face_function_general_fixture_vertex() {
    let p = MixedPolynomial::parse(
        "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9",
    )
    .unwrap();
    let f = p.face_function(&pts(&[(3, 2)]));
    assert_eq!(
        f,
        MixedPolynomial::parse("u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2").unwrap()
    );
}

#[test]
fn specialize_t_quartic_vertex() {
    // u^2 ~v^2 at t = π/2 becomes u^2 e^{−iπ} = −u^2.
    let p = MixedPolynomial::parse("u^2 ~v^2").unwrap();
    let h = p.specialize_t(std::f64::consts::FRAC_PI_2, 1e-12);
    let terms: Vec<_> = h.terms().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].0, (2, 0));
    assert!((terms[0].1 - c(-1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn specialize_t_keeps_u_structure() {
    // (u^3 − i u ū^2 + u^2 ū) v^2 at any t is the u-part times e^{2it}.
    let p = MixedPolynomial::parse("u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2").unwrap();
    for t in [0.0, 0.83, 2.0] {
        let h = p.specialize_t(t, 1e-12);
        let unit = Complex64::from_polar(1.0, 2.0 * t);
        let expected = [
            ((3u32, 0u32), unit),
            ((1, 2), c(0.0, -1.0) * unit),
            ((2, 1), unit),
        ];
        for (k, v) in expected {
            let got = h
                .terms()
                .find(|(&key, _)| key == k)
                .map(|(_, &c)| c)
                .unwrap();
            assert!((got - v).norm() < 1e-12);
        }
    }
}

#[test]
fn specialize_zero_polynomial() {
    let z = MixedPolynomial::zero();
    assert!(z.specialize_t(1.0, 1e-12).is_zero());
    assert!(z.specialize_phi(1.0, 1e-12).is_zero());
}

#[test]
fn specialize_phi_examples() {
    // (u^3 − i u ū^2 + u^2 ū) v^2 at φ = 0 → (1 − i + 1) v^2 = (2−i) v^2.
    let p = MixedPolynomial::parse("u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2").unwrap();
    let h = p.specialize_phi(0.0, 1e-12);
    let terms: Vec<_> = h.terms().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(terms, vec![((2, 0), c(2.0, -1.0))]);

    // u^2 ~v^2 at φ = 0 → v̄^2.
    let p = MixedPolynomial::parse("u^2 ~v^2").unwrap();
    let h = p.specialize_phi(0.0, 1e-12);
    let terms: Vec<_> = h.terms().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(terms[0].0, (0, 2));
    assert!((terms[0].1 - c(1.0, 0.0)).norm() < 1e-12);

    // v^9 is independent of φ.
    let p = MixedPolynomial::parse("v^9").unwrap();
    for phi in [0.0, 1.0, 4.4] {
        let h = p.specialize_phi(phi, 1e-12);
        let terms: Vec<_> = h.terms().map(|(&k, &v)| (k, v)).collect();
        assert_eq!(terms[0].0, (9, 0));
        assert!((terms[0].1 - c(1.0, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn wirtinger_examples() {
    let one = c(1.0, 0.0);
    // w^2 at 1 → (2, 0)
    let h = UniMixedPoly::from_terms(VarSide::USide, [((2, 0), one)]);
    let (dw, dwb) = h.wirtinger_at(one);
    assert!((dw - c(2.0, 0.0)).norm() < 1e-12 && dwb.norm() < 1e-12);
    // w̄^2 at 1 → (0, 2)
    let h = UniMixedPoly::from_terms(VarSide::USide, [((0, 2), one)]);
    let (dw, dwb) = h.wirtinger_at(one);
    assert!(dw.norm() < 1e-12 && (dwb - c(2.0, 0.0)).norm() < 1e-12);
    // w w̄ at 2+i → (2−i, 2+i)
    let h = UniMixedPoly::from_terms(VarSide::USide, [((1, 1), one)]);
    let (dw, dwb) = h.wirtinger_at(c(2.0, 1.0));
    assert!((dw - c(2.0, -1.0)).norm() < 1e-12);
    assert!((dwb - c(2.0, 1.0)).norm() < 1e-12);
}

#[test]
fn semiholomorphic_kinds() {
    let p = MixedPolynomial::parse("v^9").unwrap();
    assert_eq!(
        p.semiholomorphic_kind(),
        BTreeSet::from([Variable::U, Variable::UBar, Variable::V])
    );
    let p = MixedPolynomial::parse("~u v^6").unwrap();
    assert_eq!(
        p.semiholomorphic_kind(),
        BTreeSet::from([Variable::UBar, Variable::V])
    );
    let p = MixedPolynomial::parse("u ~u").unwrap();
    assert_eq!(
        p.semiholomorphic_kind(),
        BTreeSet::from([Variable::V, Variable::VBar])
    );
}

#[test]
fn conjugation_swaps_exponents() {
    let p = MixedPolynomial::parse("(1-2i) u^2 v ~v^3").unwrap();
    let q = p.conj();
    assert_eq!(q, MixedPolynomial::parse("(1+2i) ~u^2 ~v v^3").unwrap());
}

#[test]
fn display_round_trips_fixtures() {
    for text in [
        "u^4 + ~u u^2 v + u^2 ~v^2 + v^6",
        "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9",
        "u^4 - u^3 v ~v + u^2 v^3 ~v^3 - u v^6 ~v^6 + v^10 ~v^10",
        "(1.5-2i) u v^3 - 0.25 ~v^2 + 3 i u^7",
        "0",
    ] {
        let p = MixedPolynomial::parse(text).unwrap();
        let printed = p.to_string();
        let q = MixedPolynomial::parse(&printed).unwrap();
        assert_eq!(p, q, "round trip failed for {text} -> {printed}");
        assert_eq!(printed, q.to_string());
    }
}

#[test]
fn homogeneous_conversion_and_bidegree() {
    let p = MixedPolynomial::parse("u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2").unwrap();
    let h = p.specialize_t(0.0, 1e-12).to_homogeneous().unwrap();
    assert_eq!(h.degree(), 3);
    assert_eq!(h.bi_degree(), Some((3, 2)));

    let mixed_degrees = MixedPolynomial::parse("u^2 + u")
        .unwrap()
        .specialize_t(0.0, 1e-12);
    assert!(matches!(
        mixed_degrees.to_homogeneous(),
        Err(Error::NotHomogeneous { .. })
    ));
}

#[test]
fn hom_product_convolves() {
    let a = HomUniMixedPoly::new(1, [(1, c(1.0, 0.0)), (0, c(2.0, 0.0))]); // w + 2w̄
    let b = HomUniMixedPoly::new(1, [(1, c(0.0, 1.0))]); // i w
    let ab = a.mul(&b);
    assert_eq!(ab.degree(), 2);
    assert_eq!(ab.coeff(2), c(0.0, 1.0));
    assert_eq!(ab.coeff(1), c(0.0, 2.0));
    assert_eq!(ab.coeff(0), c(0.0, 0.0));
}
