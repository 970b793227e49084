//! Mixed polynomials in two complex variables and their restrictions.
//!
//! A mixed polynomial is a finite sum of monomials
//! `c · u^ν₁ ū^μ₁ v^ν₂ v̄^μ₂` with complex coefficients and the constant
//! term normalized away. Everything downstream (Newton boundary, signed
//! multiplicities, winding numbers) is computed from this representation.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so they are safe to share and move across threads.

mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;

use crate::error::Error;
use crate::newton::LatticePoint;
use crate::Result;

/// Default modulus below which coefficients produced by cancellation are
/// dropped (see [`MixedPolynomial::specialize_t`]).
pub const DEFAULT_TOL_ZERO: f64 = 1e-12;

/// One of the four mixed variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    U,
    UBar,
    V,
    VBar,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::U => write!(f, "u"),
            Variable::UBar => write!(f, "~u"),
            Variable::V => write!(f, "v"),
            Variable::VBar => write!(f, "~v"),
        }
    }
}

/// A single monomial `c · u^ν₁ ū^μ₁ v^ν₂ v̄^μ₂`. The coefficient is
/// never zero in a stored polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedMonomial {
    pub coeff: Complex64,
    pub nu1: u32,
    pub nu2: u32,
    pub mu1: u32,
    pub mu2: u32,
}

impl MixedMonomial {
    /// Exponent quadruple `(ν₁, ν₂, μ₁, μ₂)`, the canonical sort key.
    pub fn quad(&self) -> (u32, u32, u32, u32) {
        (self.nu1, self.nu2, self.mu1, self.mu2)
    }

    /// Total exponent `(ν₁ + μ₁, ν₂ + μ₂)`, the support point.
    pub fn total_exponent(&self) -> LatticePoint {
        LatticePoint::new(
            i64::from(self.nu1) + i64::from(self.mu1),
            i64::from(self.nu2) + i64::from(self.mu2),
        )
    }
}

/// A mixed polynomial: a canonically sorted list of monomials, at most one
/// per exponent quadruple, with no constant term. The zero polynomial is
/// the empty list and is a first-class value.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MixedPolynomial {
    monomials: Vec<MixedMonomial>,
}

impl MixedPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MixedPolynomial {
            monomials: Vec::new(),
        }
    }

    /// Build from raw `(coefficient, (ν₁, ν₂, μ₁, μ₂))` terms. Like terms
    /// are collected, exact zeros are dropped, and a surviving nonzero
    /// constant term is an error.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Complex64, (u32, u32, u32, u32))>,
    ) -> Result<Self> {
        let mut map: BTreeMap<(u32, u32, u32, u32), Complex64> = BTreeMap::new();
        for (c, quad) in terms {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::Syntax {
                    pos: 0,
                    expected: "finite coefficients".into(),
                });
            }
            *map.entry(quad).or_insert_with(|| Complex64::new(0.0, 0.0)) += c;
        }
        let mut monomials = Vec::with_capacity(map.len());
        for ((nu1, nu2, mu1, mu2), coeff) in map {
            if coeff.norm_sqr() == 0.0 {
                continue;
            }
            if (nu1, nu2, mu1, mu2) == (0, 0, 0, 0) {
                return Err(Error::NonzeroConstantTerm);
            }
            let coeff = normalize_zero(coeff);
            monomials.push(MixedMonomial {
                coeff,
                nu1,
                nu2,
                mu1,
                mu2,
            });
        }
        Ok(MixedPolynomial { monomials })
    }

    /// Parse from the plain-text grammar (`~u`/`ub` denote ū).
    pub fn parse(text: &str) -> Result<Self> {
        parse::parse(text)
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[MixedMonomial] {
        &self.monomials
    }

    /// Evaluate at `(u, v)`, with `ū`, `v̄` the conjugates of the inputs.
    pub fn evaluate(&self, u: Complex64, v: Complex64) -> Complex64 {
        let ub = u.conj();
        let vb = v.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in &self.monomials {
            acc += m.coeff
                * u.powi(m.nu1 as i32)
                * ub.powi(m.mu1 as i32)
                * v.powi(m.nu2 as i32)
                * vb.powi(m.mu2 as i32);
        }
        acc
    }

    /// The sub-polynomial of monomials whose total exponent lies in
    /// `points` (the face function `f_Δ` when `points` is a face).
    pub fn face_function(&self, points: &BTreeSet<LatticePoint>) -> MixedPolynomial {
        let monomials = self
            .monomials
            .iter()
            .filter(|m| points.contains(&m.total_exponent()))
            .copied()
            .collect();
        MixedPolynomial { monomials }
    }

    /// Substitute `v = e^{it}`, `v̄ = e^{−it}` and group by the remaining
    /// `(ν₁, μ₁)` exponents. Merged coefficients with modulus below
    /// `tol_zero` are dropped.
    pub fn specialize_t(&self, t: f64, tol_zero: f64) -> UniMixedPoly {
        let mut terms: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
        for m in &self.monomials {
            let phase = Complex64::from_polar(1.0, t * (f64::from(m.nu2) - f64::from(m.mu2)));
            *terms
                .entry((m.nu1, m.mu1))
                .or_insert_with(|| Complex64::new(0.0, 0.0)) += m.coeff * phase;
        }
        UniMixedPoly::from_map(VarSide::USide, terms, tol_zero)
    }

    /// Substitute `u = e^{iφ}`, `ū = e^{−iφ}`; mirror of
    /// [`specialize_t`](Self::specialize_t) with the variable roles swapped.
    pub fn specialize_phi(&self, phi: f64, tol_zero: f64) -> UniMixedPoly {
        let mut terms: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
        for m in &self.monomials {
            let phase = Complex64::from_polar(1.0, phi * (f64::from(m.nu1) - f64::from(m.mu1)));
            *terms
                .entry((m.nu2, m.mu2))
                .or_insert_with(|| Complex64::new(0.0, 0.0)) += m.coeff * phase;
        }
        UniMixedPoly::from_map(VarSide::VSide, terms, tol_zero)
    }

    /// Every `x` such that the polynomial is algebraically independent of
    /// the conjugate partner of `x` (e.g. `u` is in the result iff no
    /// monomial contains ū).
    pub fn semiholomorphic_kind(&self) -> BTreeSet<Variable> {
        let mut kinds = BTreeSet::new();
        if self.monomials.iter().all(|m| m.mu1 == 0) {
            kinds.insert(Variable::U);
        }
        if self.monomials.iter().all(|m| m.nu1 == 0) {
            kinds.insert(Variable::UBar);
        }
        if self.monomials.iter().all(|m| m.mu2 == 0) {
            kinds.insert(Variable::V);
        }
        if self.monomials.iter().all(|m| m.nu2 == 0) {
            kinds.insert(Variable::VBar);
        }
        kinds
    }

    /// Conjugate polynomial: coefficients conjugated, `ν₁ ↔ μ₁` and
    /// `ν₂ ↔ μ₂` swapped, so that `conj(p)(u, v) = conj(p(u, v))`.
    pub fn conj(&self) -> MixedPolynomial {
        let terms = self
            .monomials
            .iter()
            .map(|m| (m.coeff.conj(), (m.mu1, m.mu2, m.nu1, m.nu2)));
        MixedPolynomial::from_terms(terms)
            .expect("conjugation preserves the c_(0,0) = 0 normalization")
    }

    /// Termwise Wirtinger partial derivative in one of the four variables.
    /// Unlike inputs, a derivative may legitimately carry a constant term.
    pub fn diff(&self, var: Variable) -> MixedPolynomial {
        let mut map: BTreeMap<(u32, u32, u32, u32), Complex64> = BTreeMap::new();
        for m in &self.monomials {
            let e = match var {
                Variable::U => m.nu1,
                Variable::UBar => m.mu1,
                Variable::V => m.nu2,
                Variable::VBar => m.mu2,
            };
            if e == 0 {
                continue;
            }
            let mut quad = (m.nu1, m.nu2, m.mu1, m.mu2);
            match var {
                Variable::U => quad.0 -= 1,
                Variable::UBar => quad.2 -= 1,
                Variable::V => quad.1 -= 1,
                Variable::VBar => quad.3 -= 1,
            }
            *map.entry(quad).or_insert_with(|| Complex64::new(0.0, 0.0)) += m.coeff * f64::from(e);
        }
        let monomials = map
            .into_iter()
            .filter(|(_, c)| c.norm_sqr() != 0.0)
            .map(|((nu1, nu2, mu1, mu2), coeff)| MixedMonomial {
                coeff: normalize_zero(coeff),
                nu1,
                nu2,
                mu1,
                mu2,
            })
            .collect();
        MixedPolynomial { monomials }
    }

    /// Sum of coefficient moduli, a cheap magnitude scale.
    pub fn coeff_norm(&self) -> f64 {
        self.monomials.iter().map(|m| m.coeff.norm()).sum()
    }
}

fn normalize_zero(c: Complex64) -> Complex64 {
    // Avoid -0.0 leaking into printed output.
    let re = if c.re == 0.0 { 0.0 } else { c.re };
    let im = if c.im == 0.0 { 0.0 } else { c.im };
    Complex64::new(re, im)
}

impl std::str::FromStr for MixedPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MixedPolynomial::parse(s)
    }
}

impl fmt::Display for MixedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (idx, m) in self.monomials.iter().enumerate() {
            let (sign, coeff_str) = format_coeff(m.coeff, m.quad() != (0, 0, 0, 0));
            if idx == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !coeff_str.is_empty() {
                parts.push(coeff_str);
            }
            push_var(&mut parts, "u", m.nu1);
            push_var(&mut parts, "~u", m.mu1);
            push_var(&mut parts, "v", m.nu2);
            push_var(&mut parts, "~v", m.mu2);
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

fn push_var(parts: &mut Vec<String>, name: &str, exp: u32) {
    match exp {
        0 => {}
        1 => parts.push(name.to_string()),
        e => parts.push(format!("{name}^{e}")),
    }
}

/// Renders a coefficient as (leading-sign, grammar-valid factor text).
/// An empty factor means the coefficient is ±1 and variables follow.
fn format_coeff(c: Complex64, has_vars: bool) -> (bool, String) {
    if c.im == 0.0 {
        let sign = c.re < 0.0;
        let a = c.re.abs();
        if a == 1.0 && has_vars {
            (sign, String::new())
        } else {
            (sign, format!("{a}"))
        }
    } else if c.re == 0.0 {
        let sign = c.im < 0.0;
        let b = c.im.abs();
        if b == 1.0 {
            (sign, "i".to_string())
        } else {
            (sign, format!("{b} i"))
        }
    } else {
        let im_abs = c.im.abs();
        let op = if c.im < 0.0 { '-' } else { '+' };
        if im_abs == 1.0 {
            (false, format!("({}{}i)", c.re, op))
        } else {
            (false, format!("({}{}{}i)", c.re, op, im_abs))
        }
    }
}

/// Which variable pair a univariate restriction lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSide {
    /// Polynomial in `(u, ū)` (from `v = e^{it}`).
    USide,
    /// Polynomial in `(v, v̄)` (from `u = e^{iφ}`).
    VSide,
}

/// A mixed univariate polynomial `h(w, w̄) = Σ c_{p,q} w^p w̄^q`, the
/// result of specializing a mixed polynomial along one torus direction.
#[derive(Debug, Clone, PartialEq)]
pub struct UniMixedPoly {
    side: VarSide,
    terms: BTreeMap<(u32, u32), Complex64>,
}

impl UniMixedPoly {
    pub fn from_map(side: VarSide, terms: BTreeMap<(u32, u32), Complex64>, tol_zero: f64) -> Self {
        let terms = terms
            .into_iter()
            .filter(|(_, c)| c.norm() >= tol_zero)
            .map(|(k, c)| (k, normalize_zero(c)))
            .collect();
        UniMixedPoly { side, terms }
    }

    /// Build directly from `(p, q) → c` pairs, keeping exact nonzeros.
    pub fn from_terms(
        side: VarSide,
        terms: impl IntoIterator<Item = ((u32, u32), Complex64)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(|| Complex64::new(0.0, 0.0)) += c;
        }
        UniMixedPoly::from_map(side, map, 0.0)
    }

    pub fn side(&self) -> VarSide {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Complex64)> {
        self.terms.iter()
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let wb = w.conj();
        self.terms
            .iter()
            .map(|(&(p, q), &c)| c * w.powi(p as i32) * wb.powi(q as i32))
            .sum()
    }

    /// `(∂h/∂w, ∂h/∂w̄)` at `alpha`, computed termwise.
    pub fn wirtinger_at(&self, alpha: Complex64) -> (Complex64, Complex64) {
        let ab = alpha.conj();
        let mut dw = Complex64::new(0.0, 0.0);
        let mut dwb = Complex64::new(0.0, 0.0);
        for (&(p, q), &c) in &self.terms {
            if p > 0 {
                dw += c * f64::from(p) * alpha.powi(p as i32 - 1) * ab.powi(q as i32);
            }
            if q > 0 {
                dwb += c * f64::from(q) * alpha.powi(p as i32) * ab.powi(q as i32 - 1);
            }
        }
        (dw, dwb)
    }

    /// Bi-degree `(m, n) = (deg_w, deg_w̄)`, or `None` for the zero
    /// polynomial.
    pub fn bi_degree(&self) -> Option<(u32, u32)> {
        if self.terms.is_empty() {
            return None;
        }
        let m = self.terms.keys().map(|&(p, _)| p).max().unwrap_or(0);
        let n = self.terms.keys().map(|&(_, q)| q).max().unwrap_or(0);
        Some((m, n))
    }

    /// Minimal and maximal total degree `p + q` over stored terms.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        if self.terms.is_empty() {
            return None;
        }
        let lo = self.terms.keys().map(|&(p, q)| p + q).min().unwrap_or(0);
        let hi = self.terms.keys().map(|&(p, q)| p + q).max().unwrap_or(0);
        Some((lo, hi))
    }

    /// The homogeneous part of total degree `ell`.
    pub fn homogeneous_part(&self, ell: u32) -> UniMixedPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(&(p, q), _)| p + q == ell)
            .map(|(&k, &c)| (k, c))
            .collect();
        UniMixedPoly {
            side: self.side,
            terms,
        }
    }

    /// Sum of coefficient moduli of the degree-`ell` part.
    pub fn part_coeff_norm(&self, ell: u32) -> f64 {
        self.terms
            .iter()
            .filter(|(&(p, q), _)| p + q == ell)
            .map(|(_, c)| c.norm())
            .sum()
    }

    /// `Σ |c_{p,q}| r^{p+q}`, an upper bound for `|h|` on the circle of
    /// radius `r` and the natural scale for relative comparisons there.
    pub fn scale_on_circle(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(p, q), c)| c.norm() * r.powi((p + q) as i32))
            .sum()
    }

    /// Reinterpret as a homogeneous polynomial; errors if two terms have
    /// different total degree. The zero polynomial converts to the
    /// designated zero value.
    pub fn to_homogeneous(&self) -> Result<HomUniMixedPoly> {
        if self.terms.is_empty() {
            return Ok(HomUniMixedPoly::zero());
        }
        let (lo, hi) = self.degree_range().expect("nonempty");
        if lo != hi {
            return Err(Error::NotHomogeneous { a: lo, b: hi });
        }
        let coeffs = self.terms.iter().map(|(&(p, _), &c)| (p, c)).collect();
        Ok(HomUniMixedPoly { degree: hi, coeffs })
    }

    /// Conjugate: coefficients conjugated and `(p, q)` exponents swapped.
    pub fn conj(&self) -> UniMixedPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(p, q), c)| ((q, p), c.conj()))
            .collect();
        UniMixedPoly {
            side: self.side,
            terms,
        }
    }
}

/// A homogeneous mixed univariate polynomial of degree `d`: terms
/// `c_ν w^ν w̄^{d−ν}`. Carrier of the signed-multiplicity factorization.
#[derive(Debug, Clone, PartialEq)]
pub struct HomUniMixedPoly {
    degree: u32,
    coeffs: BTreeMap<u32, Complex64>,
}

impl HomUniMixedPoly {
    /// The designated zero value.
    pub fn zero() -> Self {
        HomUniMixedPoly {
            degree: 0,
            coeffs: BTreeMap::new(),
        }
    }

    /// Build from `ν → c_ν` for terms `c_ν w^ν w̄^{d−ν}`. Exponents above
    /// the degree are rejected by panic (caller bug, not input error).
    pub fn new(degree: u32, coeffs: impl IntoIterator<Item = (u32, Complex64)>) -> Self {
        let coeffs: BTreeMap<u32, Complex64> = coeffs
            .into_iter()
            .inspect(|&(nu, _)| assert!(nu <= degree, "exponent exceeds degree"))
            .filter(|(_, c)| c.norm_sqr() != 0.0)
            .collect();
        HomUniMixedPoly { degree, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &Complex64)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, nu: u32) -> Complex64 {
        self.coeffs
            .get(&nu)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// Bi-degree `(m, n)` with `m = max ν` and `n = d − min ν`.
    pub fn bi_degree(&self) -> Option<(u32, u32)> {
        let max = *self.coeffs.keys().next_back()?;
        let min = *self.coeffs.keys().next()?;
        Some((max, self.degree - min))
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let wb = w.conj();
        self.coeffs
            .iter()
            .map(|(&nu, &c)| c * w.powi(nu as i32) * wb.powi((self.degree - nu) as i32))
            .sum()
    }

    /// View as a general mixed univariate polynomial.
    pub fn as_uni(&self, side: VarSide) -> UniMixedPoly {
        UniMixedPoly {
            side,
            terms: self
                .coeffs
                .iter()
                .map(|(&nu, &c)| ((nu, self.degree - nu), c))
                .collect(),
        }
    }

    /// Conjugate: `ν ↦ d − ν` with conjugated coefficients.
    pub fn conj(&self) -> HomUniMixedPoly {
        let degree = self.degree;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&nu, c)| (degree - nu, c.conj()))
            .collect();
        HomUniMixedPoly { degree, coeffs }
    }

    /// Product by convolution of coefficient maps.
    pub fn mul(&self, other: &HomUniMixedPoly) -> HomUniMixedPoly {
        if self.is_zero() || other.is_zero() {
            return HomUniMixedPoly::zero();
        }
        let degree = self.degree + other.degree;
        let mut coeffs: BTreeMap<u32, Complex64> = BTreeMap::new();
        for (&a, &ca) in &self.coeffs {
            for (&b, &cb) in &other.coeffs {
                *coeffs
                    .entry(a + b)
                    .or_insert_with(|| Complex64::new(0.0, 0.0)) += ca * cb;
            }
        }
        coeffs.retain(|_, c| c.norm_sqr() != 0.0);
        HomUniMixedPoly { degree, coeffs }
    }
}

#[cfg(test)]
mod tests;
