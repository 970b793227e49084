//! Support and Newton boundary of a mixed polynomial.
//!
//! The Newton polygon is the convex hull of `∪ (ω + ℝ²≥0)` over the
//! support; its compact faces form a staircase chain running from the
//! vertex nearest the vertical axis down to the one nearest the
//! horizontal axis. All geometry here is exact 64-bit integer arithmetic.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::mixedpoly::MixedPolynomial;
use crate::Result;

/// A point of the exponent lattice: `x` is the total `u`-exponent
/// `ν₁ + μ₁`, `y` the total `v`-exponent `ν₂ + μ₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        debug_assert!(x >= 0 && y >= 0);
        LatticePoint { x, y }
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// A compact 1-face of the Newton boundary: its endpoints and every
/// support point lying on the segment (endpoints included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub start: LatticePoint,
    pub end: LatticePoint,
    pub points: Vec<LatticePoint>,
}

/// Ordered vertices `Δ₀ … Δ_N` and faces `Δ¹₁ … Δ¹_N` of the Newton
/// boundary. Vertex x-coordinates strictly increase, y-coordinates
/// strictly decrease, and `faces[i]` joins `vertices[i]` to
/// `vertices[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonBoundary {
    pub vertices: Vec<LatticePoint>,
    pub faces: Vec<Face>,
}

impl NewtonBoundary {
    /// Number of 1-faces (`N`); always `vertices.len() - 1`.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Lattice points of face `i` (1-based, matching the `Δ¹ᵢ` labels) as
    /// a set, ready for [`MixedPolynomial::face_function`].
    pub fn face_points(&self, i: usize) -> BTreeSet<LatticePoint> {
        self.faces[i - 1].points.iter().copied().collect()
    }

    /// The singleton `{Δᵢ}` for vertex `i` (0-based).
    pub fn vertex_point(&self, i: usize) -> BTreeSet<LatticePoint> {
        std::iter::once(self.vertices[i]).collect()
    }
}

/// The support `{ν + μ : c_{ν,μ} ≠ 0}` of a mixed polynomial.
pub fn support(p: &MixedPolynomial) -> BTreeSet<LatticePoint> {
    p.monomials().iter().map(|m| m.total_exponent()).collect()
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Computes the compact faces of the Newton polygon of a nonempty support
/// set. Support points interior to an edge are attached to that face, not
/// promoted to vertices.
pub fn newton_boundary(support: &BTreeSet<LatticePoint>) -> Result<NewtonBoundary> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }

    // Pareto-minimal points: anything dominated towards the upper right
    // lies strictly inside the polygon or on a non-compact face.
    let pts: Vec<LatticePoint> = support.iter().copied().collect();
    let mut frontier: Vec<LatticePoint> = pts
        .iter()
        .copied()
        .filter(|p| !pts.iter().any(|q| q != p && q.x <= p.x && q.y <= p.y))
        .collect();
    // BTreeSet order is (x, y) lexicographic; on the frontier x strictly
    // increases and y strictly decreases.
    frontier.sort();

    // Monotone chain keeping only strict left turns: collinear interior
    // points are dropped here and recovered per face below.
    let mut chain: Vec<LatticePoint> = Vec::with_capacity(frontier.len());
    for p in frontier {
        while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0 {
            chain.pop();
        }
        chain.push(p);
    }

    let faces = chain
        .windows(2)
        .map(|w| {
            let (start, end) = (w[0], w[1]);
            let mut points: Vec<LatticePoint> = support
                .iter()
                .copied()
                .filter(|p| p.x >= start.x && p.x <= end.x && cross(start, end, *p) == 0)
                .collect();
            points.sort();
            Face { start, end, points }
        })
        .collect();

    Ok(NewtonBoundary {
        vertices: chain,
        faces,
    })
}

/// True iff the boundary touches both coordinate axes (`Δ₀` on the
/// vertical, `Δ_N` on the horizontal).
pub fn is_convenient(b: &NewtonBoundary) -> bool {
    let first = b
        .vertices
        .first()
        .expect("boundary has at least one vertex");
    let last = b.vertices.last().expect("boundary has at least one vertex");
    first.x == 0 && last.y == 0
}
