//! Printer/parser fixed point: printing any polynomial and reparsing
//! yields an identical monomial list, and the printed form is stable.

use mixedtori::{Complex64, MixedPolynomial};
use proptest::prelude::*;

fn coeff_strategy() -> impl Strategy<Value = Complex64> {
    // Mix of integer-ish, dyadic and awkward decimal values, plus pure
    // real / pure imaginary / full complex shapes.
    let magnitude = prop_oneof![
        (1i32..=9).prop_map(f64::from),
        (1i32..=99).prop_map(|k| f64::from(k) / 4.0),
        (1i32..=999).prop_map(|k| f64::from(k) / 10.0),
    ];
    (magnitude, any::<bool>(), 0u8..3).prop_map(|(mag, neg, shape)| {
        let s = if neg { -mag } else { mag };
        match shape {
            0 => Complex64::new(s, 0.0),
            1 => Complex64::new(0.0, s),
            _ => Complex64::new(s, s * 0.5 + 1.0),
        }
    })
}

fn poly_strategy() -> impl Strategy<Value = MixedPolynomial> {
    let quad = (0u32..6, 0u32..6, 0u32..6, 0u32..6)
        .prop_filter("no constant term", |q| *q != (0, 0, 0, 0));
    proptest::collection::vec((coeff_strategy(), quad), 0..8)
        .prop_map(|terms| MixedPolynomial::from_terms(terms).expect("constant term filtered"))
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in poly_strategy()) {
        let printed = p.to_string();
        let reparsed = MixedPolynomial::parse(&printed)
            .unwrap_or_else(|e| panic!("printed form {printed:?} failed to parse: {e}"));
        prop_assert_eq!(&reparsed, &p);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn parse_never_panics_on_ascii(s in "[ 0-9uvib+~^().*-]{0,40}") {
        let _ = MixedPolynomial::parse(&s);
    }
}
