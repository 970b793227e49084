//! Tunable tolerances and sampling budgets for the numerical pipeline.

/// Configuration shared by the specialization, multiplicity, winding and
/// hypothesis-check routines. All fields have spec'd defaults; the CLI
/// exposes the ones users most often need to adjust.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    /// Coefficients with modulus below this are dropped after
    /// specialization (cancellations at special angles must not leave
    /// spurious terms behind).
    pub tol_zero: f64,
    /// Half-width of the forbidden band around the unit circle when
    /// classifying ς-roots: a root with ||ς| − 1| ≤ tol_unit is an error,
    /// never silently classified.
    pub tol_unit: f64,
    /// Threshold below which a sampled torus/circle modulus counts as
    /// vanishing. Applied relative to the coefficient scale.
    pub tol_vanish: f64,
    /// Maximum accepted relative residual for polynomial roots.
    pub tol_residual: f64,
    /// Relative threshold for accepting a point as a root of a mixed
    /// univariate polynomial.
    pub tol_root: f64,
    /// Minimum relative gap between Wirtinger moduli for a determinate
    /// simple-root sign.
    pub tol_sign: f64,
    /// Relative threshold on the smallest singular value of the real
    /// Jacobian in the non-degeneracy spot check.
    pub tol_rank: f64,
    /// Angle grid resolution per coordinate for the torus minimum search.
    pub grid: usize,
    /// Number of angles sampled per vertex when building the
    /// multiplicity table; all samples must agree.
    pub t_samples: usize,
    /// Sample count for the circle winding (degree) oracle.
    pub oracle_samples: usize,
    /// Angle slices sampled by the face non-degeneracy spot check.
    pub spot_angles: usize,
    /// Radial × angular grid of Newton starts for the annulus root search.
    pub root_grid_radii: usize,
    pub root_grid_angles: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            tol_zero: 1e-12,
            tol_unit: 1e-8,
            tol_vanish: 1e-9,
            tol_residual: 1e-10,
            tol_root: 1e-8,
            tol_sign: 1e-9,
            tol_rank: 1e-6,
            grid: 256,
            t_samples: 7,
            oracle_samples: 4096,
            spot_angles: 6,
            root_grid_radii: 12,
            root_grid_angles: 24,
        }
    }
}
