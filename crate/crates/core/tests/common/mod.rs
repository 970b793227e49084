//! Shared fixtures and random generators for the integration tests.
#![allow(dead_code)] // not every test target uses every helper

use std::collections::BTreeSet;

use mixedtori::mixedpoly::{HomUniMixedPoly, UniMixedPoly, VarSide};
use mixedtori::{Complex64, MixedPolynomial};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Fires the fast single-vertex criterion.
pub const QUARTIC: &str = "u^4 + ~u u^2 v + u^2 ~v^2 + v^6";
/// Fires only the general criterion (last branch).
pub const GENERAL: &str = "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9";
/// Fires only the count criterion.
pub const CHAIN: &str = "u^4 - u^3 v ~v + u^2 v^3 ~v^3 - u v^6 ~v^6 + v^10 ~v^10";

pub const FIXTURES: [&str; 3] = [QUARTIC, GENERAL, CHAIN];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coeff(rng: &mut ChaCha8Rng) -> Complex64 {
    let modulus = rng.gen_range(0.3..2.0);
    let phase = rng.gen_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(modulus, phase)
}

/// Random homogeneous mixed univariate polynomial of degree ≤ `max_deg`.
pub fn random_hom(rng: &mut ChaCha8Rng, max_deg: u32) -> HomUniMixedPoly {
    let d = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<(u32, Complex64)> = Vec::new();
    for nu in 0..=d {
        if rng.gen_bool(0.5) {
            coeffs.push((nu, random_coeff(rng)));
        }
    }
    if coeffs.is_empty() {
        coeffs.push((rng.gen_range(0..=d), random_coeff(rng)));
    }
    HomUniMixedPoly::new(d, coeffs)
}

/// Random (not necessarily homogeneous) mixed univariate polynomial with
/// total degree ≤ `max_deg`.
pub fn random_uni(rng: &mut ChaCha8Rng, max_deg: u32) -> UniMixedPoly {
    let nterms = rng.gen_range(1..=6);
    let terms: Vec<((u32, u32), Complex64)> = (0..nterms)
        .map(|_| {
            let p = rng.gen_range(0..=max_deg);
            let q = rng.gen_range(0..=max_deg.saturating_sub(p));
            ((p, q), random_coeff(rng))
        })
        .collect();
    UniMixedPoly::from_terms(VarSide::USide, terms)
}

/// Random mixed polynomial in two variables without constant term.
pub fn random_mixed(rng: &mut ChaCha8Rng) -> MixedPolynomial {
    let nterms = rng.gen_range(1..=8);
    let terms: Vec<(Complex64, (u32, u32, u32, u32))> = (0..nterms)
        .map(|_| loop {
            let quad = (
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
                rng.gen_range(0..=4u32),
            );
            if quad != (0, 0, 0, 0) {
                return (random_coeff(rng), quad);
            }
        })
        .collect();
    MixedPolynomial::from_terms(terms).expect("constant quadruple filtered out")
}

/// Random convenient holomorphic polynomial: support touching both axes,
/// no conjugate variables.
pub fn random_convenient_holomorphic(rng: &mut ChaCha8Rng) -> MixedPolynomial {
    let y0 = rng.gen_range(1..=10u32);
    let x0 = rng.gen_range(1..=10u32);
    let mut points: BTreeSet<(u32, u32)> = BTreeSet::new();
    points.insert((0, y0));
    points.insert((x0, 0));
    for _ in 0..rng.gen_range(0..=8) {
        let p = (rng.gen_range(0..=10u32), rng.gen_range(0..=10u32));
        if p != (0, 0) {
            points.insert(p);
        }
    }
    let terms: Vec<_> = points
        .into_iter()
        .map(|(x, y)| (random_coeff(rng), (x, y, 0, 0)))
        .collect();
    MixedPolynomial::from_terms(terms).expect("no constant term generated")
}
