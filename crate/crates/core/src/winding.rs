//! Per-vertex multiplicity table and per-face winding numbers of the
//! nested link decomposition.
//!
//! The table holds `ms_t[i] = m_s(f^t_{Δᵢ}, 0)` and
//! `ms_phi[i] = m_s(f^φ_{Δᵢ}, 0)` for the vertices `Δ₀ … Δ_N`. Winding
//! numbers of the per-face links are first differences:
//! `w[i] = ms_t[i] − ms_t[i−1]` and `w'[i] = ms_phi[i−1] − ms_phi[i]`.
//! These integers are angle-independent under the nonvanishing
//! hypotheses, so each entry is computed at several sampled angles and
//! any disagreement is reported as a diagnostic, never averaged away.
//!
//! An independent annulus-degree oracle recomputes `w[i]` as the
//! difference of circle windings of the face restriction `g_i^t` on a
//! large and a small circle, with radii certified by coefficient bounds.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::config::AnalysisConfig;
use crate::error::Error;
use crate::mixedpoly::{MixedPolynomial, UniMixedPoly};
use crate::multiplicity::{degree_oracle, signed_multiplicity_at_zero, MsMethod};
use crate::newton::{is_convenient, NewtonBoundary};
use crate::Result;

const GOLDEN_FRAC: f64 = 0.618_033_988_749_894_9;
const MAX_ANGLE_FAILURES: usize = 20;

/// Deterministic low-discrepancy angle sequence; index 0 is exactly 0.
fn golden_angle(index: usize) -> f64 {
    2.0 * std::f64::consts::PI * ((index as f64) * GOLDEN_FRAC).fract()
}

/// Which side a vertex restriction lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    T,
    Phi,
}

/// Signed multiplicities of the vertex restrictions, per vertex and side,
/// together with the angles that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityTable {
    /// `ms_t[i]`, `i = 0..=N`.
    pub ms_t: Vec<i64>,
    /// `ms_phi[i]`, `i = 0..=N`.
    pub ms_phi: Vec<i64>,
    /// Per vertex, the `t` angles at which the entry was confirmed.
    pub t_angles: Vec<Vec<f64>>,
    /// Per vertex, the `φ` angles at which the entry was confirmed.
    pub phi_angles: Vec<Vec<f64>>,
    /// Evaluation method per vertex, t-side.
    pub method_t: Vec<MsMethod>,
    /// Evaluation method per vertex, φ-side.
    pub method_phi: Vec<MsMethod>,
}

impl MultiplicityTable {
    /// Number of 1-faces `N`.
    pub fn face_count(&self) -> usize {
        self.ms_t.len() - 1
    }

    /// First differences `w[i] = ms_t[i] − ms_t[i−1]` for `i = 1..=N`.
    pub fn w_diffs(&self) -> Vec<i64> {
        self.ms_t.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// First differences `w'[i] = ms_phi[i−1] − ms_phi[i]` for `i = 1..=N`.
    pub fn wprime_diffs(&self) -> Vec<i64> {
        self.ms_phi.windows(2).map(|w| w[0] - w[1]).collect()
    }
}

/// Winding data of the per-face links, derived from the table.
#[derive(Debug, Clone, PartialEq)]
pub struct WindingProfile {
    /// `w[i]`, winding of `Lᵢ` in `Vᵢ`; index 0 holds face 1.
    pub w: Vec<i64>,
    /// `w'[i]`, winding of `Lᵢ` in `W_{i−1}`; index 0 holds face 1.
    pub wprime: Vec<i64>,
    /// Cumulative winding `w(L₁∪…∪Lᵢ) = ms_t[i]`; index 0 holds face 1.
    pub w_in: Vec<i64>,
    /// Cumulative winding `w'(Lᵢ∪…∪L_N) = ms_phi[i−1]`; index 0 holds face 1.
    pub w_out: Vec<i64>,
    /// Faces certified nonempty: `max(|w[i]|, |w'[i]|) > 0`. Emptiness of
    /// the remaining faces is undecidable from the table alone, so this
    /// is a certified subset, never an emptiness claim.
    pub certified_nonempty: BTreeSet<usize>,
}

impl WindingProfile {
    pub fn face_count(&self) -> usize {
        self.w.len()
    }

    /// 1-based accessors matching the `Δ¹ᵢ` labels.
    pub fn w(&self, i: usize) -> i64 {
        self.w[i - 1]
    }

    pub fn wprime(&self, i: usize) -> i64 {
        self.wprime[i - 1]
    }
}

/// Builds the multiplicity table of a convenient polynomial by
/// specializing each vertex face function at `cfg.t_samples` angles per
/// side and requiring exact agreement.
///
/// Angles at which the specialization drops below the lattice-predicted
/// bi-degree (an extreme coefficient cancels) are discarded and replaced;
/// twenty failures for one entry is an error.
pub fn multiplicity_table(
    p: &MixedPolynomial,
    b: &NewtonBoundary,
    cfg: &AnalysisConfig,
) -> Result<MultiplicityTable> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_convenient(b) {
        return Err(Error::NotConvenient);
    }

    let nv = b.vertices.len();
    let mut ms_t = Vec::with_capacity(nv);
    let mut ms_phi = Vec::with_capacity(nv);
    let mut method_t = Vec::with_capacity(nv);
    let mut method_phi = Vec::with_capacity(nv);
    let mut t_angles = Vec::with_capacity(nv);
    let mut phi_angles = Vec::with_capacity(nv);

    for i in 0..nv {
        let face_fn = p.face_function(&b.vertex_point(i));
        debug_assert!(
            !face_fn.is_zero(),
            "boundary vertex must come from the support"
        );
        let (ms, method, angles) = vertex_multiplicity(&face_fn, i, Side::T, cfg)?;
        ms_t.push(ms);
        method_t.push(method);
        t_angles.push(angles);
        let (ms, method, angles) = vertex_multiplicity(&face_fn, i, Side::Phi, cfg)?;
        ms_phi.push(ms);
        method_phi.push(method);
        phi_angles.push(angles);
    }

    Ok(MultiplicityTable {
        ms_t,
        ms_phi,
        t_angles,
        phi_angles,
        method_t,
        method_phi,
    })
}

fn vertex_multiplicity(
    face_fn: &MixedPolynomial,
    vertex: usize,
    side: Side,
    cfg: &AnalysisConfig,
) -> Result<(i64, MsMethod, Vec<f64>)> {
    // Lattice-predicted bi-degree of the specialization: the extreme
    // exponents present before any angle-dependent cancellation.
    let (m_pred, n_pred) = match side {
        Side::T => (
            face_fn.monomials().iter().map(|m| m.nu1).max().unwrap_or(0),
            face_fn.monomials().iter().map(|m| m.mu1).max().unwrap_or(0),
        ),
        Side::Phi => (
            face_fn.monomials().iter().map(|m| m.nu2).max().unwrap_or(0),
            face_fn.monomials().iter().map(|m| m.mu2).max().unwrap_or(0),
        ),
    };

    let mut results: Vec<(f64, i64, MsMethod)> = Vec::with_capacity(cfg.t_samples);
    let mut failures = 0usize;
    let mut index = 0usize;
    while results.len() < cfg.t_samples {
        let angle = golden_angle(index);
        index += 1;
        let uni = match side {
            Side::T => face_fn.specialize_t(angle, cfg.tol_zero),
            Side::Phi => face_fn.specialize_phi(angle, cfg.tol_zero),
        };
        if uni.bi_degree() != Some((m_pred, n_pred)) {
            // Extreme coefficient cancelled at this angle; resample.
            failures += 1;
            if failures >= MAX_ANGLE_FAILURES {
                return Err(Error::DegenerateAngles { vertex });
            }
            continue;
        }
        let hom = uni.to_homogeneous().map_err(|e| Error::AtVertex {
            vertex,
            angle,
            source: Box::new(e),
        })?;
        let r = signed_multiplicity_at_zero(&hom, cfg).map_err(|e| Error::AtVertex {
            vertex,
            angle,
            source: Box::new(e),
        })?;
        results.push((angle, r.ms, r.method));
    }

    let ms = results[0].1;
    if results.iter().any(|&(_, v, _)| v != ms) {
        return Err(Error::InconsistentAcrossAngles {
            vertex,
            values: results
                .iter()
                .map(|&(a, v, _)| (format!("{a:.6}"), v))
                .collect(),
        });
    }
    let method = results[0].2;
    Ok((ms, method, results.into_iter().map(|(a, _, _)| a).collect()))
}

/// Differences, cumulative windings and the certified-nonempty set.
pub fn winding_profile(tab: &MultiplicityTable) -> WindingProfile {
    let n = tab.face_count();
    let w = tab.w_diffs();
    let wprime = tab.wprime_diffs();
    let w_in = tab.ms_t[1..].to_vec();
    let w_out = tab.ms_phi[..n].to_vec();
    let certified_nonempty = (1..=n)
        .filter(|&i| w[i - 1] != 0 || wprime[i - 1] != 0)
        .collect();
    WindingProfile {
        w,
        wprime,
        w_in,
        w_out,
        certified_nonempty,
    }
}

/// Certified radii `(r_small, r_large)` bounding all roots of `g` in
/// `ℂ*` strictly inside the annulus. The bound compares the extreme
/// homogeneous pieces (whose minimum modulus on the unit circle is found
/// by dense sampling plus descent) against the coefficient mass of the
/// remaining pieces.
pub fn annulus_bounds(g: &UniMixedPoly, cfg: &AnalysisConfig) -> Result<(f64, f64)> {
    let (lo, hi) = g.degree_range().ok_or(Error::ZeroPolynomial)?;
    let bottom = g.homogeneous_part(lo);
    let top = g.homogeneous_part(hi);
    let m_bot = circle_min_modulus(&bottom, 2048).0;
    let m_top = circle_min_modulus(&top, 2048).0;
    if m_bot <= cfg.tol_vanish * bottom.scale_on_circle(1.0) {
        return Err(Error::VanishesOnCircle { radius: 0.0 });
    }
    if m_top <= cfg.tol_vanish * top.scale_on_circle(1.0) {
        return Err(Error::VanishesOnCircle {
            radius: f64::INFINITY,
        });
    }
    let mass_above: f64 = (lo + 1..=hi).map(|ell| g.part_coeff_norm(ell)).sum();
    let mass_below: f64 = (lo..hi).map(|ell| g.part_coeff_norm(ell)).sum();
    let r_small = 0.5 * (m_bot / (m_bot + mass_above)).min(1.0);
    let r_large = 2.0 * ((m_top + mass_below) / m_top).max(1.0);
    Ok((r_small, r_large))
}

/// Minimum of `|h|` over the circle of radius 1, by uniform sampling
/// followed by a deterministic bisection descent. Returns the minimum and
/// its angle.
pub fn circle_min_modulus(h: &UniMixedPoly, samples: usize) -> (f64, f64) {
    let eval = |theta: f64| h.eval(Complex64::from_polar(1.0, theta)).norm();
    let mut best = (eval(0.0), 0.0);
    for k in 1..samples {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
        let v = eval(theta);
        if v < best.0 {
            best = (v, theta);
        }
    }
    let mut step = 2.0 * std::f64::consts::PI / (samples as f64);
    for _ in 0..60 {
        for _ in 0..64 {
            let mut improved = false;
            for cand in [best.1 - step, best.1 + step] {
                let v = eval(cand);
                if v < best.0 {
                    best = (v, cand);
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        step *= 0.5;
    }
    best
}

/// Winding number `w(Lᵢ)` of the face-`face_index` link (1-based),
/// computed independently of the multiplicity table as the difference of
/// circle degrees of `gᵢᵗ` on the large and small certified circles.
/// Equals `w[i]` of the profile for every `t` under the hypotheses.
pub fn winding_oracle(
    p: &MixedPolynomial,
    face_index: usize,
    t: f64,
    cfg: &AnalysisConfig,
) -> Result<i64> {
    let b = crate::newton::newton_boundary(&crate::newton::support(p))?;
    let face_fn = p.face_function(&b.face_points(face_index));
    let g = face_fn.specialize_t(t, cfg.tol_zero);
    annulus_winding(&g, cfg)
}

/// The φ-side analogue: recomputes `w'(Lᵢ)` from the restriction
/// `g_ī^φ` of the face function.
pub fn winding_oracle_phi(
    p: &MixedPolynomial,
    face_index: usize,
    phi: f64,
    cfg: &AnalysisConfig,
) -> Result<i64> {
    let b = crate::newton::newton_boundary(&crate::newton::support(p))?;
    let face_fn = p.face_function(&b.face_points(face_index));
    let g = face_fn.specialize_phi(phi, cfg.tol_zero);
    annulus_winding(&g, cfg)
}

fn annulus_winding(g: &UniMixedPoly, cfg: &AnalysisConfig) -> Result<i64> {
    let (r_small, r_large) = annulus_bounds(g, cfg)?;
    let large = degree_oracle(g, r_large, cfg.oracle_samples, cfg)?;
    let small = degree_oracle(g, r_small, cfg.oracle_samples, cfg)?;
    Ok(large - small)
}

/// All roots of a mixed univariate polynomial in `ℂ*`, found by damped
/// Newton iteration from a deterministic grid of starts over the
/// certified annulus. Intended for spot checks and diagnostics; roots are
/// deduplicated and sorted by `(re, im)`.
pub fn find_roots(g: &UniMixedPoly, cfg: &AnalysisConfig) -> Result<Vec<Complex64>> {
    let (r_small, r_large) = annulus_bounds(g, cfg)?;
    let mut roots: Vec<Complex64> = Vec::new();
    let nr = cfg.root_grid_radii.max(2);
    let na = cfg.root_grid_angles.max(4);
    let log_lo = r_small.ln();
    let log_hi = r_large.ln();
    for ir in 0..nr {
        let frac = (ir as f64 + 0.5) / (nr as f64);
        let r = (log_lo + frac * (log_hi - log_lo)).exp();
        for ia in 0..na {
            let theta = 2.0 * std::f64::consts::PI * (ia as f64) / (na as f64);
            if let Some(root) = newton_root(g, Complex64::from_polar(r, theta), cfg) {
                let r_abs = root.norm();
                if r_abs <= r_small || r_abs >= r_large {
                    continue;
                }
                let tol = 1e-7 * root.norm().max(1.0);
                if !roots.iter().any(|&known| (known - root).norm() < tol) {
                    roots.push(root);
                }
            }
        }
    }
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("finite roots")
    });
    Ok(roots)
}

/// Damped Newton iteration on the real 2×2 system underlying
/// `g(u, ū) = 0`. Returns a polished root or `None`.
fn newton_root(g: &UniMixedPoly, start: Complex64, cfg: &AnalysisConfig) -> Option<Complex64> {
    let mut u = start;
    for _ in 0..80 {
        let f = g.eval(u);
        let scale = g.scale_on_circle(u.norm()).max(f64::MIN_POSITIVE);
        if f.norm() <= 1e-13 * scale {
            return Some(u);
        }
        let (a, b) = g.wirtinger_at(u);
        // Solve a·δ + b·conj(δ) = −f as a real 2×2 system in (x, y).
        let cx = a + b;
        let cy = Complex64::new(0.0, 1.0) * (a - b);
        let det = cx.re * cy.im - cx.im * cy.re;
        if det.abs() < 1e-300 {
            return None;
        }
        let rhs = -f;
        let x = (rhs.re * cy.im - rhs.im * cy.re) / det;
        let y = (cx.re * rhs.im - cx.im * rhs.re) / det;
        let mut step = Complex64::new(x, y);
        // Damp oversized steps to keep starts from shooting far away.
        let max_step = 0.5 * u.norm().max(1.0);
        if step.norm() > max_step {
            step *= max_step / step.norm();
        }
        u += step;
        if !u.re.is_finite() || !u.im.is_finite() {
            return None;
        }
    }
    let scale = g.scale_on_circle(u.norm()).max(f64::MIN_POSITIVE);
    if g.eval(u).norm() <= cfg.tol_root * scale {
        Some(u)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixedpoly::VarSide;
    use crate::newton::{newton_boundary, support};

    fn table_for(text: &str) -> MultiplicityTable {
        let cfg = AnalysisConfig::default();
        let p = MixedPolynomial::parse(text).unwrap();
        let b = newton_boundary(&support(&p)).unwrap();
        multiplicity_table(&p, &b, &cfg).unwrap()
    }

    #[test]
    fn quartic_fixture_table() {
        let tab = table_for("u^4 + ~u u^2 v + u^2 ~v^2 + v^6");
        assert_eq!(tab.ms_t, vec![0, 2, 4]);
        assert_eq!(tab.ms_phi, vec![6, -2, 0]);
        assert_eq!(tab.w_diffs(), vec![2, 2]);
        assert_eq!(tab.wprime_diffs(), vec![8, -2]);
    }

    #[test]
    fn general_fixture_table() {
        let tab =
            table_for("u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9");
        assert_eq!(tab.ms_t, vec![0, -1, 1, 5]);
        assert_eq!(tab.ms_phi, vec![9, 6, 2, 0]);
        assert_eq!(tab.w_diffs(), vec![-1, 2, 4]);
        assert_eq!(tab.wprime_diffs(), vec![3, 4, 2]);
    }

    #[test]
    fn chain_fixture_table() {
        let tab = table_for("u^4 - u^3 v ~v + u^2 v^3 ~v^3 - u v^6 ~v^6 + v^10 ~v^10");
        assert_eq!(tab.ms_t, vec![0, 1, 2, 3, 4]);
        assert_eq!(tab.ms_phi, vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn extreme_entries_vanish() {
        for text in [
            "u^4 + ~u u^2 v + u^2 ~v^2 + v^6",
            "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9",
        ] {
            let tab = table_for(text);
            assert_eq!(tab.ms_t[0], 0);
            assert_eq!(*tab.ms_phi.last().unwrap(), 0);
        }
    }

    #[test]
    fn profile_of_general_fixture() {
        let tab =
            table_for("u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9");
        let prof = winding_profile(&tab);
        assert_eq!(prof.w, vec![-1, 2, 4]);
        assert_eq!(prof.wprime, vec![3, 4, 2]);
        assert_eq!(prof.certified_nonempty, BTreeSet::from([1, 2, 3]));
        assert_eq!(prof.w_in, vec![-1, 1, 5]);
        assert_eq!(prof.w_out, vec![9, 6, 2]);
    }

    #[test]
    fn profile_of_all_zero_table() {
        let tab = MultiplicityTable {
            ms_t: vec![0, 0],
            ms_phi: vec![0, 0],
            t_angles: vec![],
            phi_angles: vec![],
            method_t: vec![MsMethod::Constant, MsMethod::Constant],
            method_phi: vec![MsMethod::Constant, MsMethod::Constant],
        };
        let prof = winding_profile(&tab);
        assert_eq!(prof.w, vec![0]);
        assert_eq!(prof.wprime, vec![0]);
        assert!(prof.certified_nonempty.is_empty());
    }

    #[test]
    fn angle_dependent_multiplicity_is_inconsistent() {
        // The (2,1) vertex carries 2i sin(t) u^2 + e^{it} u ū, whose
        // ς-root crosses the unit circle as t moves: the signed
        // multiplicity genuinely differs between sampled angles.
        let cfg = AnalysisConfig::default();
        let p = MixedPolynomial::parse("u^2 v - u^2 ~v + u ~u v + v^3 + u^4").unwrap();
        let b = newton_boundary(&support(&p)).unwrap();
        match multiplicity_table(&p, &b, &cfg) {
            Err(Error::InconsistentAcrossAngles { vertex, values }) => {
                assert_eq!(vertex, 1);
                assert!(values.iter().any(|&(_, v)| v == 0));
                assert!(values.iter().any(|&(_, v)| v == 2));
            }
            other => panic!("expected InconsistentAcrossAngles, got {other:?}"),
        }
    }

    #[test]
    fn not_convenient_is_reported() {
        let cfg = AnalysisConfig::default();
        let p = MixedPolynomial::parse("u v + u^2 v^3").unwrap();
        let b = newton_boundary(&support(&p)).unwrap();
        assert!(matches!(
            multiplicity_table(&p, &b, &cfg),
            Err(Error::NotConvenient)
        ));
    }

    #[test]
    fn oracle_matches_table_on_general_fixture() {
        let cfg = AnalysisConfig::default();
        let text = "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9";
        let p = MixedPolynomial::parse(text).unwrap();
        let tab = table_for(text);
        let prof = winding_profile(&tab);
        for i in 1..=3 {
            for t in [0.0, 1.0, 2.5] {
                assert_eq!(
                    winding_oracle(&p, i, t, &cfg).unwrap(),
                    prof.w(i),
                    "face {i}, t={t}"
                );
            }
            for phi in [0.0, 0.7] {
                assert_eq!(
                    winding_oracle_phi(&p, i, phi, &cfg).unwrap(),
                    prof.wprime(i),
                    "face {i}, phi={phi}"
                );
            }
        }
    }

    #[test]
    fn oracle_on_single_monomial_face() {
        // g = u^2 ū e^{…}: winding is p − q at any radius, so the annulus
        // difference is 0; as a face this never happens, but the degree
        // oracle itself must see 1 at both radii.
        let cfg = AnalysisConfig::default();
        let g = UniMixedPoly::from_terms(VarSide::USide, [((2, 1), Complex64::new(0.5, 0.5))]);
        assert_eq!(degree_oracle(&g, 0.2, 1024, &cfg).unwrap(), 1);
        assert_eq!(degree_oracle(&g, 5.0, 1024, &cfg).unwrap(), 1);
    }

    #[test]
    fn find_roots_locates_the_two_circle_roots() {
        // g = e^{6it} + u^2 e^{-2it} at t = 0.3: roots u^2 = −e^{8it}.
        let cfg = AnalysisConfig::default();
        let t = 0.3;
        let p = MixedPolynomial::parse("u^4 + ~u u^2 v + u^2 ~v^2 + v^6").unwrap();
        let b = newton_boundary(&support(&p)).unwrap();
        let g = p
            .face_function(&b.face_points(1))
            .specialize_t(t, cfg.tol_zero);
        let roots = find_roots(&g, &cfg).unwrap();
        assert_eq!(roots.len(), 2);
        let want = Complex64::from_polar(1.0, (8.0 * t + std::f64::consts::PI) / 2.0);
        assert!(roots.iter().any(|r| (r - want).norm() < 1e-8));
        for r in &roots {
            assert!((g.eval(*r)).norm() < 1e-9);
        }
    }
}
