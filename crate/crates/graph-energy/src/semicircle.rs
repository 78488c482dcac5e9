//! The semicircle law and distances to it.
//!
//! The centered, scaled adjacency matrices produced by this crate have
//! empirical spectral distributions converging to a semicircle law with
//! scale `sigma = sqrt(p * (1 - p))`: density
//!
//! ```text
//! phi(x) = sqrt(4 sigma^2 - x^2) / (2 pi sigma^2)   for |x| <= 2 sigma
//! ```
//!
//! Everything downstream needs three integrals of `phi`: the CDF (for
//! Kolmogorov–Smirnov distances), the absolute first moment
//! `8 sigma / (3 pi)` (the constant in the energy law), and the even moments
//! `Catalan(k) * sigma^(2k)` (for trace-moment checks). All three are closed
//! forms here; the test suite locks each one against adaptive Simpson
//! quadrature of `density`, which shares no arithmetic with them.

use crate::spectral::Spectrum;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SemicircleError {
    /// The law is only defined for a strictly positive, finite scale.
    #[error("semicircle scale must be positive and finite, got {sigma}")]
    InvalidSigma { sigma: f64 },
}

/// Semicircle distribution with support `[-2 sigma, 2 sigma]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemicircleLaw {
    sigma: f64,
}

/// `Catalan(k)` for `k = 0..=10`; the 2k-th moment of the law is
/// `Catalan(k) * sigma^(2k)`.
const CATALAN: [f64; 11] = [
    1.0, 1.0, 2.0, 5.0, 14.0, 42.0, 132.0, 429.0, 1430.0, 4862.0, 16796.0,
];

impl SemicircleLaw {
    pub fn new(sigma: f64) -> Result<Self, SemicircleError> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(SemicircleError::InvalidSigma { sigma });
        }
        Ok(Self { sigma })
    }

    /// Law matched by the centered edge indicator at density `p`:
    /// `sigma = sqrt(p * (1 - p))`.
    pub fn from_edge_density(p: f64) -> Result<Self, SemicircleError> {
        if !(p.is_finite() && p > 0.0 && p < 1.0) {
            return Err(SemicircleError::InvalidSigma {
                sigma: (p * (1.0 - p)).sqrt(),
            });
        }
        Self::new((p * (1.0 - p)).sqrt())
    }

    #[must_use]
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Right edge of the support, `2 sigma`.
    #[must_use]
    pub fn support_radius(&self) -> f64 {
        2.0 * self.sigma
    }

    /// Density at `x`; zero outside the support.
    #[must_use]
    pub fn density(&self, x: f64) -> f64 {
        let r = self.support_radius();
        if x.abs() >= r {
            return 0.0;
        }
        (r * r - x * x).sqrt() / (2.0 * std::f64::consts::PI * self.sigma * self.sigma)
    }

    /// Distribution function `P(X <= x)`.
    ///
    /// Closed form `1/2 + x sqrt(4 sigma^2 - x^2) / (4 pi sigma^2)
    /// + asin(x / (2 sigma)) / pi`, clamped to `{0, 1}` off the support.
    #[must_use]
    pub fn cdf(&self, x: f64) -> f64 {
        let r = self.support_radius();
        if x <= -r {
            return 0.0;
        }
        if x >= r {
            return 1.0;
        }
        let s2 = self.sigma * self.sigma;
        0.5 + x * (4.0 * s2 - x * x).sqrt() / (4.0 * std::f64::consts::PI * s2)
            + (x / r).asin() / std::f64::consts::PI
    }

    /// `E|X| = 8 sigma / (3 pi)`, the per-eigenvalue constant behind the
    /// `n^(3/2)` energy law.
    #[must_use]
    pub fn abs_first_moment(&self) -> f64 {
        abs_first_moment_of_scale(self.sigma)
    }

    /// The `2k`-th moment `E[X^(2k)] = Catalan(k) * sigma^(2k)`, `k <= 10`
    /// (`k = 0` is the normalization, 1).
    #[must_use]
    pub fn even_moment(&self, k: u32) -> f64 {
        assert!(k <= 10, "even_moment supports k <= 10");
        CATALAN[k as usize] * self.sigma.powi(2 * k as i32)
    }
}

/// `8 sigma / (3 pi)` as a plain function of the scale, defined for
/// `sigma >= 0` (degenerate scale included: the limit is 0).
#[must_use]
pub fn abs_first_moment_of_scale(sigma: f64) -> f64 {
    assert!(sigma >= 0.0, "scale must be nonnegative");
    8.0 * sigma / (3.0 * std::f64::consts::PI)
}

/// Kolmogorov–Smirnov distance between the empirical distribution of
/// `scale * lambda_i` and the law.
///
/// The supremum of `|ESD(x) - F(x)|` over all `x` is attained at an
/// eigenvalue, approaching from the left or the right, so both one-sided
/// limits are evaluated at every jump.
#[must_use]
pub fn ks_distance(s: &Spectrum, scale: f64, law: &SemicircleLaw) -> f64 {
    assert!(scale > 0.0 && scale.is_finite(), "scale must be positive");
    let n = s.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &lambda) in s.eigenvalues().iter().enumerate() {
        let f = law.cdf(scale * lambda);
        let below = i as f64 / n;
        let above = (i + 1) as f64 / n;
        d = d.max((below - f).abs()).max((above - f).abs());
    }
    d
}
