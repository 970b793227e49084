//! Signed multiplicity at the origin of homogeneous mixed univariate
//! polynomials, with an independent circle-winding degree oracle.
//!
//! For a homogeneous `h(w, w̄)` of degree `d` and bi-degree `(m, n)` that
//! does not vanish on `ℂ*`, the factorization
//! `h = c w^{d−n} w̄^{d−m} ∏ (w − ς_i w̄)` reduces the signed multiplicity
//! to root counting: `ms = m − n + Σ ε(ς_i)` where `ε` is `+1` inside the
//! unit circle and `−1` outside. A root on the circle means the
//! nonvanishing hypothesis fails and is always an error, never silently
//! classified.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::config::AnalysisConfig;
use crate::error::Error;
use crate::mixedpoly::{HomUniMixedPoly, UniMixedPoly};
use crate::Result;

/// How a signed multiplicity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MsMethod {
    /// Root classification through the homogeneous factorization.
    Factorization,
    /// Single-term fast path: `ms = m − n` with no ς-roots.
    SemiholoFast,
    /// Nonzero constant, vanishing topological degree.
    Constant,
}

impl MsMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            MsMethod::Factorization => "factorization",
            MsMethod::SemiholoFast => "semiholo-fast",
            MsMethod::Constant => "constant",
        }
    }
}

/// A ς-root of the associated polynomial together with its unit-circle
/// classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifiedRoot {
    pub value: Complex64,
    pub inside: bool,
}

/// Result of [`signed_multiplicity_at_zero`].
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityResult {
    pub ms: i64,
    pub bi_degree: (u32, u32),
    pub degree: u32,
    pub roots: Vec<ClassifiedRoot>,
    pub epsilon_sum: i64,
    pub method: MsMethod,
}

/// Signed multiplicity at 0 of a nonzero homogeneous mixed univariate
/// polynomial.
pub fn signed_multiplicity_at_zero(
    h: &HomUniMixedPoly,
    cfg: &AnalysisConfig,
) -> Result<MultiplicityResult> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = h.degree();
    let (m, n) = h.bi_degree().expect("nonzero polynomial has a bi-degree");
    if d == 0 {
        // Nonzero constant: the argument map has vanishing degree.
        return Ok(MultiplicityResult {
            ms: 0,
            bi_degree: (0, 0),
            degree: 0,
            roots: Vec::new(),
            epsilon_sum: 0,
            method: MsMethod::Constant,
        });
    }
    let k = m + n - d;
    if k == 0 {
        // Single term c w^m w̄^n; covers the semiholomorphic cases where
        // ms is just ± the degree in the surviving variable.
        return Ok(MultiplicityResult {
            ms: i64::from(m) - i64::from(n),
            bi_degree: (m, n),
            degree: d,
            roots: Vec::new(),
            epsilon_sum: 0,
            method: MsMethod::SemiholoFast,
        });
    }

    let roots = associated_roots(h, cfg)?;
    let mut classified = Vec::with_capacity(roots.len());
    let mut epsilon_sum = 0i64;
    for r in roots {
        let modulus = r.norm();
        if (modulus - 1.0).abs() <= cfg.tol_unit {
            return Err(Error::RootOnUnitCircle {
                modulus,
                tol: cfg.tol_unit,
            });
        }
        let inside = modulus < 1.0;
        epsilon_sum += if inside { 1 } else { -1 };
        classified.push(ClassifiedRoot { value: r, inside });
    }
    Ok(MultiplicityResult {
        ms: i64::from(m) - i64::from(n) + epsilon_sum,
        bi_degree: (m, n),
        degree: d,
        roots: classified,
        epsilon_sum,
        method: MsMethod::Factorization,
    })
}

/// The `m + n − d` roots of the associated ordinary polynomial
/// `P(ς) = Σ_{ν=νmin}^{νmax} c_ν ς^{ν−νmin}`, sorted by `(re, im)` for
/// determinism. Requires `m + n − d ≥ 1`.
pub fn associated_roots(h: &HomUniMixedPoly, cfg: &AnalysisConfig) -> Result<Vec<Complex64>> {
    let d = h.degree();
    let (m, n) = h.bi_degree().ok_or(Error::ZeroPolynomial)?;
    let k = (m + n).checked_sub(d).expect("bi-degree bounds the degree");
    assert!(k >= 1, "associated_roots requires m + n - d >= 1");
    let nu_min = d - n;
    let coeffs: Vec<Complex64> = (0..=k).map(|j| h.coeff(nu_min + j)).collect();
    let mut roots = polynomial_roots(&coeffs, cfg)?;
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("finite roots")
    });
    Ok(roots)
}

/// All complex roots of `P(x) = Σ coeffs[j] x^j` via companion-matrix
/// eigenvalues, each polished by one Newton step and checked against the
/// relative residual tolerance.
pub fn polynomial_roots(coeffs: &[Complex64], cfg: &AnalysisConfig) -> Result<Vec<Complex64>> {
    assert!(
        coeffs.len() >= 2,
        "constant polynomials have no roots to find"
    );
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    if lead.norm() == 0.0 {
        return Err(Error::RootFindingFailed(
            "leading coefficient is zero".into(),
        ));
    }

    let mut companion = DMatrix::from_element(deg, deg, Complex64::new(0.0, 0.0));
    for i in 1..deg {
        companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -coeffs[i] / lead;
    }
    let eigenvalues = companion.eigenvalues().ok_or_else(|| {
        Error::RootFindingFailed("companion eigenvalue iteration did not converge".into())
    })?;

    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let eval_deriv = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * x + c * (j as f64);
        }
        acc
    };

    let coeff_norm: f64 = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut roots = Vec::with_capacity(deg);
    for mut root in eigenvalues.iter().copied() {
        let dp = eval_deriv(root);
        if dp.norm() > 0.0 {
            let step = eval(root) / dp;
            if step.norm().is_finite() {
                root -= step;
            }
        }
        let scale = 1.0 + coeff_norm * root.norm().max(1.0).powi(deg as i32);
        let residual = eval(root).norm() / scale;
        if residual > cfg.tol_residual {
            return Err(Error::RootFindingFailed(format!(
                "residual {residual:.3e} above tolerance {:.3e}",
                cfg.tol_residual
            )));
        }
        roots.push(root);
    }
    Ok(roots)
}

/// Topological degree of `h/|h|` along the circle of the given radius:
/// the total winding of `arg h(radius·e^{iθ})`, accumulated over
/// `samples` uniform steps and rounded to the nearest integer.
///
/// Errors with `VanishesOnCircle` if the sampled modulus dips below
/// `tol_vanish` relative to the coefficient scale, and with
/// `AliasingSuspected` when the rounding defect reaches 0.1 or a single
/// step advances the argument by π/2 or more.
pub fn degree_oracle(
    h: &UniMixedPoly,
    radius: f64,
    samples: usize,
    cfg: &AnalysisConfig,
) -> Result<i64> {
    assert!(samples >= 8, "degree oracle needs at least 8 samples");
    let scale = h.scale_on_circle(radius);
    if scale == 0.0 {
        return Err(Error::VanishesOnCircle { radius });
    }
    let mut prev = h.eval(Complex64::from_polar(radius, 0.0));
    let mut min_mod = prev.norm();
    let mut total = 0.0f64;
    let mut max_step = 0.0f64;
    for k in 1..=samples {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
        let cur = h.eval(Complex64::from_polar(radius, theta));
        min_mod = min_mod.min(cur.norm());
        let step = (cur / prev).arg();
        max_step = max_step.max(step.abs());
        total += step;
        prev = cur;
    }
    if min_mod <= cfg.tol_vanish * scale {
        return Err(Error::VanishesOnCircle { radius });
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let rounded = turns.round();
    let defect = (turns - rounded).abs();
    if defect >= 0.1 || max_step >= std::f64::consts::FRAC_PI_2 {
        return Err(Error::AliasingSuspected { defect, max_step });
    }
    Ok(rounded as i64)
}

/// Sign of a simple root `alpha` of `h`: `+1` iff
/// `|∂h/∂w(α)| − |∂h/∂w̄(α)| > 0`.
pub fn simple_root_sign(h: &UniMixedPoly, alpha: Complex64, cfg: &AnalysisConfig) -> Result<i8> {
    let scale = 1.0 + h.scale_on_circle(alpha.norm());
    if h.eval(alpha).norm() > cfg.tol_root * scale {
        return Err(Error::NotARoot(alpha));
    }
    let (dw, dwb) = h.wirtinger_at(alpha);
    let gap = dw.norm() - dwb.norm();
    if gap.abs() <= cfg.tol_sign * (1.0 + dw.norm() + dwb.norm()) {
        return Err(Error::IndeterminateSign);
    }
    Ok(if gap > 0.0 { 1 } else { -1 })
}
