//! Numerical checks of the hypotheses behind the criteria: nonvanishing
//! of vertex face functions on the unit torus, and a heuristic spot check
//! of 1-face non-degeneracy.
//!
//! Vertex face functions that are semiholomorphic reduce to a one-variable
//! homogeneous factor, whose unit-circle root distances certify
//! nonvanishing exactly; all other vertices fall back to a grid-plus-
//! descent minimum search. A violated vertex carries a witness angle
//! pair. None of these checks block the analysis: the verdict carries
//! their outcome as confidence, separately from the criterion arithmetic.

use num_complex::Complex64;

use crate::config::AnalysisConfig;
use crate::mixedpoly::{MixedPolynomial, Variable};
use crate::multiplicity::associated_roots;
use crate::newton::{is_convenient, Face, LatticePoint, NewtonBoundary};
use crate::winding::find_roots;

/// Outcome of the nonvanishing check at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexStatus {
    /// Certified through unit-circle root distances of the
    /// semiholomorphic factor.
    CertifiedExact,
    /// Certified by the sampled torus minimum.
    CertifiedNumeric,
    /// A torus point with modulus below tolerance was found.
    Violated,
    /// Neither certified nor refuted (e.g. a root too close to the unit
    /// circle to classify).
    Inconclusive,
}

impl VertexStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VertexStatus::CertifiedExact => "certified-exact",
            VertexStatus::CertifiedNumeric => "certified-numeric",
            VertexStatus::Violated => "violated",
            VertexStatus::Inconclusive => "inconclusive",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(
            self,
            VertexStatus::CertifiedExact | VertexStatus::CertifiedNumeric
        )
    }
}

/// Per-vertex nonvanishing result.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexCheck {
    pub index: usize,
    pub vertex: LatticePoint,
    pub status: VertexStatus,
    /// Minimum modulus found (numeric path) or a certified lower bound
    /// (exact path).
    pub min_modulus: f64,
    /// Angles `(φ, t)` witnessing a violation.
    pub witness: Option<(f64, f64)>,
}

/// Outcome of the per-face non-degeneracy spot check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpotStatus {
    NoViolationFound,
    Violated,
}

impl SpotStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpotStatus::NoViolationFound => "no-violation-found",
            SpotStatus::Violated => "violated",
        }
    }
}

/// Per-face spot check result. `zeros_sampled` counts the zero-set points
/// at which the Jacobian rank was tested; the check is a heuristic, not a
/// certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceSpotCheck {
    pub face_index: usize,
    pub status: SpotStatus,
    pub zeros_sampled: usize,
    pub witness: Option<(Complex64, Complex64)>,
}

/// Aggregated hypothesis confidence for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub vertices: Vec<VertexCheck>,
    pub faces: Vec<FaceSpotCheck>,
    pub convenient: bool,
    /// All non-extreme vertices certified nonvanishing.
    pub gamma_nice: bool,
    /// Extreme vertices certified and every face spot check clean; worded
    /// as "asserted (spot-checked)" in reports because it is heuristic.
    pub nondegeneracy_asserted: bool,
}

impl HypothesisReport {
    /// Caveat strings for every hypothesis that is not certified.
    pub fn caveats(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.convenient {
            out.push("polynomial is not convenient".to_string());
        }
        for v in &self.vertices {
            match v.status {
                VertexStatus::Violated => out.push(format!(
                    "vertex {} {}: face function vanishes on the unit torus (min modulus {:.3e})",
                    v.index, v.vertex, v.min_modulus
                )),
                VertexStatus::Inconclusive => out.push(format!(
                    "vertex {} {}: nonvanishing on the unit torus is inconclusive",
                    v.index, v.vertex
                )),
                _ => {}
            }
        }
        for f in &self.faces {
            if f.status == SpotStatus::Violated {
                out.push(format!(
                    "face {}: non-degeneracy spot check found a rank-deficient zero",
                    f.face_index
                ));
            }
        }
        if self
            .faces
            .iter()
            .all(|f| f.status == SpotStatus::NoViolationFound)
            && !self.faces.is_empty()
        {
            out.push("face non-degeneracy is asserted (spot-checked), not certified".to_string());
        }
        out
    }

    pub fn any_violation(&self) -> bool {
        self.vertices
            .iter()
            .any(|v| v.status == VertexStatus::Violated)
            || self.faces.iter().any(|f| f.status == SpotStatus::Violated)
    }
}

/// Minimum of `|face_fn(e^{iφ}, e^{it})|` over a `grid × grid` uniform
/// angle grid, refined by a deterministic coordinate-bisection descent
/// from the grid minimizer. The refined minimum never exceeds any grid
/// value visited.
pub fn torus_min_modulus(face_fn: &MixedPolynomial, grid: usize) -> (f64, (f64, f64)) {
    let grid = grid.max(8);
    let eval = |phi: f64, t: f64| {
        face_fn
            .evaluate(
                Complex64::from_polar(1.0, phi),
                Complex64::from_polar(1.0, t),
            )
            .norm()
    };
    let tau = 2.0 * std::f64::consts::PI;
    let mut best = (f64::INFINITY, (0.0, 0.0));
    for i in 0..grid {
        let phi = tau * (i as f64) / (grid as f64);
        for j in 0..grid {
            let t = tau * (j as f64) / (grid as f64);
            let v = eval(phi, t);
            if v < best.0 {
                best = (v, (phi, t));
            }
        }
    }
    let mut step = tau / (grid as f64);
    for _ in 0..50 {
        // Exhaust coordinate moves at this scale before bisecting the
        // step, otherwise the descent stalls far above sharp minima.
        for _ in 0..64 {
            let (phi, t) = best.1;
            let mut improved = false;
            for (cp, ct) in [
                (phi - step, t),
                (phi + step, t),
                (phi, t - step),
                (phi, t + step),
            ] {
                let v = eval(cp, ct);
                if v < best.0 {
                    best = (v, (cp, ct));
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

/// Checks nonvanishing of every vertex face function on the unit torus
/// (extreme vertices included) and fills the convenience / Γ-niceness
/// flags. Face spot checks are left to [`full_hypothesis_report`].
pub fn check_gamma_nice(
    p: &MixedPolynomial,
    b: &NewtonBoundary,
    cfg: &AnalysisConfig,
) -> HypothesisReport {
    let nv = b.vertices.len();
    let mut vertices = Vec::with_capacity(nv);
    for i in 0..nv {
        let face_fn = p.face_function(&b.vertex_point(i));
        vertices.push(check_vertex(&face_fn, i, b.vertices[i], cfg));
    }
    let gamma_nice = vertices
        .iter()
        .filter(|v| v.index != 0 && v.index != nv - 1)
        .all(|v| v.status.is_certified());
    HypothesisReport {
        vertices,
        faces: Vec::new(),
        convenient: is_convenient(b),
        gamma_nice,
        nondegeneracy_asserted: false,
    }
}

fn check_vertex(
    face_fn: &MixedPolynomial,
    index: usize,
    vertex: LatticePoint,
    cfg: &AnalysisConfig,
) -> VertexCheck {
    if let Some(check) = exact_vertex_check(face_fn, index, vertex, cfg) {
        return check;
    }
    let (min, witness) = torus_min_modulus(face_fn, cfg.grid);
    let scale = face_fn.coeff_norm().max(f64::MIN_POSITIVE);
    let status = if min > cfg.tol_vanish * scale {
        VertexStatus::CertifiedNumeric
    } else if min < cfg.tol_vanish * scale {
        VertexStatus::Violated
    } else {
        VertexStatus::Inconclusive
    };
    VertexCheck {
        index,
        vertex,
        status,
        min_modulus: min,
        witness: if status == VertexStatus::Violated {
            Some(witness)
        } else {
            None
        },
    }
}

/// Exact path for semiholomorphic vertex face functions: factor off the
/// unit-modulus part and certify through the ς-root moduli of the
/// remaining one-variable homogeneous factor. Returns `None` when the
/// vertex is not semiholomorphic or the factorization path fails, in
/// which case the caller falls back to the numeric check.
fn exact_vertex_check(
    face_fn: &MixedPolynomial,
    index: usize,
    vertex: LatticePoint,
    cfg: &AnalysisConfig,
) -> Option<VertexCheck> {
    let kinds = face_fn.semiholomorphic_kind();
    if face_fn.is_zero() || kinds.is_empty() {
        return None;
    }
    // A variable pair is "free" if the polynomial only sees it through a
    // common monomial factor of unit modulus on the torus; the remaining
    // one-variable factor decides nonvanishing.
    let u_free = kinds.contains(&Variable::U) || kinds.contains(&Variable::UBar);
    let v_free = kinds.contains(&Variable::V) || kinds.contains(&Variable::VBar);
    let hom = if v_free {
        face_fn.specialize_t(0.0, 0.0).to_homogeneous().ok()?
    } else if u_free {
        face_fn.specialize_phi(0.0, 0.0).to_homogeneous().ok()?
    } else {
        return None;
    };
    if hom.is_zero() {
        return None;
    }
    let (m, n) = hom.bi_degree()?;
    let k = m + n - hom.degree();
    let lead = hom.coeff(m).norm();
    if k == 0 {
        // Single monomial: constant modulus |c| on the torus.
        return Some(VertexCheck {
            index,
            vertex,
            status: VertexStatus::CertifiedExact,
            min_modulus: lead,
            witness: None,
        });
    }
    let roots = associated_roots(&hom, cfg).ok()?;
    let mut bound = lead;
    for r in &roots {
        let gap = (r.norm() - 1.0).abs();
        if gap <= cfg.tol_unit {
            // Too close to the circle to certify; let the numeric path
            // decide (and produce a witness if it really vanishes).
            return None;
        }
        bound *= gap;
    }
    Some(VertexCheck {
        index,
        vertex,
        status: VertexStatus::CertifiedExact,
        min_modulus: bound,
        witness: None,
    })
}

/// Samples the zero set of the 1-face function on `|v| = 1` slices (which
/// by radial homogeneity reach every ray of the zero set) and tests the
/// rank-2 condition of the real Jacobian at each zero found.
pub fn spot_check_face_nondegeneracy(
    p: &MixedPolynomial,
    face: &Face,
    cfg: &AnalysisConfig,
) -> FaceSpotCheck {
    let points = face.points.iter().copied().collect();
    let face_fn = p.face_function(&points);
    let face_index = 0; // filled by the caller when known
    let mut zeros_sampled = 0usize;

    let partials = [
        face_fn.diff(Variable::U),
        face_fn.diff(Variable::UBar),
        face_fn.diff(Variable::V),
        face_fn.diff(Variable::VBar),
    ];

    for k in 0..cfg.spot_angles {
        let t = 2.0 * std::f64::consts::PI * ((k as f64) * 0.618_033_988_749_894_9).fract();
        let g = face_fn.specialize_t(t, cfg.tol_zero);
        if g.is_zero() {
            continue;
        }
        let roots = match find_roots(&g, cfg) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let v = Complex64::from_polar(1.0, t);
        for u in roots {
            zeros_sampled += 1;
            if !jacobian_has_rank_two(&partials, u, v, cfg) {
                return FaceSpotCheck {
                    face_index,
                    status: SpotStatus::Violated,
                    zeros_sampled,
                    witness: Some((u, v)),
                };
            }
        }
    }
    FaceSpotCheck {
        face_index,
        status: SpotStatus::NoViolationFound,
        zeros_sampled,
        witness: None,
    }
}

/// Rank test of the 2×4 real Jacobian of `(Re f, Im f)` at `(u, v)`,
/// assembled from the four Wirtinger partials. Rank-deficient means the
/// smallest singular value is below `tol_rank` relative to the
/// coefficient scale of the partials.
fn jacobian_has_rank_two(
    partials: &[MixedPolynomial; 4],
    u: Complex64,
    v: Complex64,
    cfg: &AnalysisConfig,
) -> bool {
    let fu = partials[0].evaluate(u, v);
    let fub = partials[1].evaluate(u, v);
    let fv = partials[2].evaluate(u, v);
    let fvb = partials[3].evaluate(u, v);
    let i = Complex64::new(0.0, 1.0);
    let cols = [fu + fub, i * (fu - fub), fv + fvb, i * (fv - fvb)];

    let mut g11 = 0.0;
    let mut g22 = 0.0;
    let mut g12 = 0.0;
    for c in cols {
        g11 += c.re * c.re;
        g22 += c.im * c.im;
        g12 += c.re * c.im;
    }
    let trace = g11 + g22;
    // Smallest singular value of the 2×4 matrix from the 2×2 Gram matrix.
    let disc = ((g11 - g22) * (g11 - g22) + 4.0 * g12 * g12).sqrt();
    let sigma_min_sq = 0.5 * (trace - disc).max(0.0);

    let ru = u.norm().max(1.0);
    let rv = v.norm().max(1.0);
    let scale: f64 = partials
        .iter()
        .flat_map(|p| p.monomials())
        .map(|m| m.coeff.norm() * ru.powi((m.nu1 + m.mu1) as i32) * rv.powi((m.nu2 + m.mu2) as i32))
        .sum::<f64>()
        .max(f64::MIN_POSITIVE);
    sigma_min_sq.sqrt() > cfg.tol_rank * scale
}

/// Runs the vertex checks and the per-face spot checks and merges them
/// into one report.
pub fn full_hypothesis_report(
    p: &MixedPolynomial,
    b: &NewtonBoundary,
    cfg: &AnalysisConfig,
) -> HypothesisReport {
    let mut report = check_gamma_nice(p, b, cfg);
    for (idx, face) in b.faces.iter().enumerate() {
        let mut check = spot_check_face_nondegeneracy(p, face, cfg);
        check.face_index = idx + 1;
        report.faces.push(check);
    }
    let nv = b.vertices.len();
    let extremes_ok = report
        .vertices
        .iter()
        .filter(|v| v.index == 0 || v.index == nv - 1)
        .all(|v| v.status.is_certified());
    report.nondegeneracy_asserted = extremes_ok
        && report
            .faces
            .iter()
            .all(|f| f.status == SpotStatus::NoViolationFound);
    report
}
