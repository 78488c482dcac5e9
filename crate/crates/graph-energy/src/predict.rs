//! Closed-form energy predictions and the maximizing edge density.
//!
//! For a weight rule `f` on a dense random graph, the expected energy of
//! the weighted adjacency matrix grows as
//!
//! ```text
//! E(A(f)) ~ f(np, np) * (8 / 3 pi) * sqrt(p (1 - p)) * n^(3/2)
//! ```
//!
//! the general law: every eigenvalue contributes the absolute first
//! moment of the semicircle law after undoing the centering scale. Each
//! catalog entry also has a per-index closed form obtained by replacing
//! `f(np, np)` with its leading large-`n` asymptotic, which flattens the
//! formula into a constant times a power of `n` (times `ln n` for the
//! logarithmic entries). The two sources agree to `O(1)` relative error
//! as `n` grows; `ratio_t3` in experiment output always refers to the
//! general law.
//!
//! For `sci` the closed-form constant is `4 sqrt(2) / (3 pi)`, the value
//! the general law yields at the typical degree `2np`. A published
//! alternative, half that value, is retained as [`SCI_ALT_CONSTANT`];
//! the acceptance suite adjudicates between the two by Monte Carlo and
//! confirms the derived constant.

use crate::semicircle::SemicircleLaw;
use crate::weights::{WeightError, WeightFunction};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PredictError {
    #[error("prediction needs 0 < p < 1, got {p}")]
    InvalidP { p: f64 },
    #[error("prediction needs n >= 1, got {n}")]
    InvalidN { n: usize },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Which formula produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictionSource {
    /// `f(np, np) * (8 / 3 pi) * sqrt(p (1 - p)) * n^(3/2)` with the exact
    /// center value.
    General,
    /// The per-index closed form with the leading asymptotic center.
    ClosedForm,
}

/// A predicted energy together with its growth order.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub index_id: &'static str,
    pub alpha: Option<f64>,
    pub n: usize,
    pub p: f64,
    pub predicted_energy: f64,
    /// Power of `n` in the leading term.
    pub leading_exponent: f64,
    /// Whether the leading term carries an `ln n` factor.
    pub log_factor: bool,
    pub source: PredictionSource,
}

/// Alternative closed-form constant for `sci`, `2 sqrt(2) / (3 pi)`;
/// rejected by the Monte Carlo adjudication in the acceptance suite but
/// kept so the comparison stays reproducible.
pub const SCI_ALT_CONSTANT: f64 = 0.3001054387190354;

fn c0() -> f64 {
    8.0 / (3.0 * PI)
}

/// Power of `n` in the leading term of the closed form.
#[must_use]
pub fn leading_exponent(spec: &WeightFunction) -> f64 {
    use WeightFunction::*;
    match spec {
        Unit | Ag1 | MZagreb1Star | MZagreb2 => 1.5,
        ZagrebM1 => 2.5,
        ZagrebM2 | Lanzhou => 3.5,
        Randic | Harmonic | MZagreb1 => 0.5,
        GeneralRandic { alpha } => 1.5 + 2.0 * alpha,
        Abc | Sci => 1.0,
        Azi => 4.5,
    }
}

/// Whether the leading term carries `ln n`.
#[must_use]
pub fn has_log_factor(spec: &WeightFunction) -> bool {
    matches!(
        spec,
        WeightFunction::MZagreb1 | WeightFunction::MZagreb1Star | WeightFunction::MZagreb2
    )
}

/// Leading large-`n` asymptotic of the center value `f(np, np)`. This is
/// the center the closed forms use; it differs from the exact center only
/// in lower-order terms (`2np - 2` vs `2np` for `abc` and `azi`, `n - 1`
/// vs `n` for `lanzhou`, `ln(np)` vs `ln n` for the logarithmic entries).
pub fn leading_center_value(spec: &WeightFunction, n: usize, p: f64) -> Result<f64, PredictError> {
    use WeightFunction::*;
    validate(n, p)?;
    let nf = n as f64;
    let np = nf * p;
    let v = match spec {
        Unit => 1.0,
        ZagrebM1 => 2.0 * np,
        ZagrebM2 => np * np,
        Randic => 1.0 / np,
        GeneralRandic { alpha } => (np * np).powf(*alpha),
        Abc => (2.0 * np).sqrt() / np,
        Azi => (np / 2.0).powi(3),
        Ag1 => 1.0,
        Harmonic => 1.0 / np,
        Sci => 1.0 / (2.0 * np).sqrt(),
        MZagreb1 => 2.0 * nf.ln() / np,
        MZagreb1Star => nf.ln(),
        MZagreb2 => 2.0 * nf.ln(),
        Lanzhou => 2.0 * nf * nf * p * (1.0 - p),
    };
    Ok(v)
}

fn validate(n: usize, p: f64) -> Result<(), PredictError> {
    if n == 0 {
        return Err(PredictError::InvalidN { n });
    }
    if !(p.is_finite() && p > 0.0 && p < 1.0) {
        return Err(PredictError::InvalidP { p });
    }
    Ok(())
}

/// Predicted energy of `A(f)` on a graph of order `n` with edge density
/// `p`, from the requested source.
pub fn predict_energy(
    spec: &WeightFunction,
    n: usize,
    p: f64,
    source: PredictionSource,
) -> Result<Prediction, PredictError> {
    validate(n, p)?;
    let nf = n as f64;
    let predicted_energy = match source {
        PredictionSource::General => {
            let fc = spec.center_value(n, p)?;
            let law = SemicircleLaw::from_edge_density(p).expect("0 < p < 1 was validated");
            fc * law.abs_first_moment() * nf.powf(1.5)
        }
        PredictionSource::ClosedForm => closed_form(spec, nf, p),
    };
    Ok(Prediction {
        index_id: spec.id(),
        alpha: spec.alpha(),
        n,
        p,
        predicted_energy,
        leading_exponent: leading_exponent(spec),
        log_factor: has_log_factor(spec),
        source,
    })
}

/// Per-index closed forms; total on `(0, 1)`, unlike the exact center.
fn closed_form(spec: &WeightFunction, n: f64, p: f64) -> f64 {
    use WeightFunction::*;
    let q = 1.0 - p;
    let sig = (p * q).sqrt();
    match spec {
        Unit => c0() * sig * n.powf(1.5),
        ZagrebM1 => p * 2.0 * c0() * sig * n.powf(2.5),
        ZagrebM2 => p * p * c0() * sig * n.powf(3.5),
        Randic => c0() * (q / p).sqrt() * n.sqrt(),
        GeneralRandic { alpha } => c0() * p.powf(2.0 * alpha) * sig * n.powf(1.5 + 2.0 * alpha),
        Abc => c0() * 2.0f64.sqrt() * q.sqrt() * n,
        Azi => p.powi(3) * sig / (3.0 * PI) * n.powf(4.5),
        Ag1 => c0() * sig * n.powf(1.5),
        Harmonic => c0() * (q / p).sqrt() * n.sqrt(),
        Sci => c0() / 2.0f64.sqrt() * q.sqrt() * n,
        MZagreb1 => 2.0 * c0() * (q / p).sqrt() * n.sqrt() * n.ln(),
        MZagreb1Star => c0() * sig * n.powf(1.5) * n.ln(),
        MZagreb2 => 2.0 * c0() * sig * n.powf(1.5) * n.ln(),
        Lanzhou => 2.0 * c0() * (p * q).powf(1.5) * n.powf(3.5),
    }
}

/// Where the closed-form prediction attains its maximum over `p` in
/// `(0, 1)` at fixed `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArgmaxOutcome {
    /// Interior maximum at `p_star`.
    Interior { p_star: f64, value: f64 },
    /// No interior maximum; the supremum is approached as `p -> 0+`.
    DecreasingInP,
    /// No interior maximum; the supremum is approached as `p -> 1-`.
    IncreasingInP,
}

/// Grid step for the coarse scan over `(0, 1)`.
const ARGMAX_GRID_STEP: f64 = 1e-3;
/// Bracket width at which golden-section refinement stops.
const ARGMAX_REFINE_TOL: f64 = 1e-6;

/// Finds the edge density maximizing the closed-form prediction: a
/// `1e-3` grid scan brackets the maximum and golden-section search
/// refines it to `1e-6`. A maximum on the first or last grid cell is
/// reported as a boundary trend instead of an interior point.
pub fn argmax_p(spec: &WeightFunction, n: usize) -> Result<ArgmaxOutcome, PredictError> {
    if n == 0 {
        return Err(PredictError::InvalidN { n });
    }
    let nf = n as f64;
    let f = |p: f64| closed_form(spec, nf, p);

    let steps = (1.0 / ARGMAX_GRID_STEP) as usize; // cells across (0, 1)
    let mut best_i = 1;
    let mut best_v = f64::NEG_INFINITY;
    for i in 1..steps {
        let v = f(i as f64 * ARGMAX_GRID_STEP);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    if best_i == 1 {
        return Ok(ArgmaxOutcome::DecreasingInP);
    }
    if best_i == steps - 1 {
        return Ok(ArgmaxOutcome::IncreasingInP);
    }

    // Golden-section search on the bracketing cell pair.
    let mut a = (best_i - 1) as f64 * ARGMAX_GRID_STEP;
    let mut b = (best_i + 1) as f64 * ARGMAX_GRID_STEP;
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > ARGMAX_REFINE_TOL {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    let p_star = 0.5 * (a + b);
    Ok(ArgmaxOutcome::Interior {
        p_star,
        value: f(p_star),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use WeightFunction::*;

    #[test]
    fn rejects_bad_arguments() {
        assert!(predict_energy(&Unit, 0, 0.5, PredictionSource::General).is_err());
        assert!(predict_energy(&Unit, 100, 0.0, PredictionSource::General).is_err());
        assert!(predict_energy(&Unit, 100, 1.0, PredictionSource::ClosedForm).is_err());
        assert!(predict_energy(&Unit, 100, f64::NAN, PredictionSource::General).is_err());
    }

    #[test]
    fn general_law_is_center_times_first_moment() {
        // Identical arithmetic path: center * (8 sigma / 3 pi) * n^(3/2).
        let spec = Sci;
        let (n, p) = (500usize, 0.37);
        let got = predict_energy(&spec, n, p, PredictionSource::General)
            .unwrap()
            .predicted_energy;
        let fc = spec.center_value(n, p).unwrap();
        let law = SemicircleLaw::from_edge_density(p).unwrap();
        let want = fc * law.abs_first_moment() * (n as f64).powf(1.5);
        assert_eq!(got.to_bits(), want.to_bits());
    }

    #[test]
    fn frozen_closed_form_values() {
        let v = |spec: &WeightFunction, n: usize, p: f64| {
            predict_energy(spec, n, p, PredictionSource::ClosedForm)
                .unwrap()
                .predicted_energy
        };
        assert!((v(&ZagrebM1, 100, 0.75) - 55132.88954217921).abs() < 1e-6);
        assert!((v(&Ag1, 1000, 0.5) - 13421.12322786321).abs() < 1e-8);
        assert!((v(&Unit, 2000, 0.5) - 37960.668982249445).abs() < 1e-7);
        assert!((v(&Randic, 1000, 0.5) - 26.84224645572642).abs() < 1e-10);
        assert!((v(&Sci, 1000, 0.5) - 424.41318157838765).abs() < 1e-9);
        assert!((v(&Azi, 100, 0.875) - 23507804.195360158).abs() < 1e-4);
        assert!((v(&Lanzhou, 100, 0.5) - 2122065.907891938).abs() < 1e-5);
        assert!((v(&MZagreb2, 100, 0.5) - 3908.989860690282).abs() < 1e-8);
    }

    #[test]
    fn sci_alternative_constant_is_half_the_derived_one() {
        let derived = predict_energy(&Sci, 1000, 0.5, PredictionSource::ClosedForm)
            .unwrap()
            .predicted_energy;
        let alt = SCI_ALT_CONSTANT * 0.5f64.sqrt() * 1000.0;
        assert!((alt - 212.20659078919383).abs() < 1e-9);
        assert!((derived / alt - 2.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_equals_general_law_with_leading_center() {
        // Swapping the exact center for its leading asymptotic must
        // reproduce the closed form exactly (up to float roundoff); this
        // pins every closed-form constant to the general law.
        let law_part = |n: usize, p: f64| {
            let law = SemicircleLaw::from_edge_density(p).unwrap();
            law.abs_first_moment() * (n as f64).powf(1.5)
        };
        for spec in WeightFunction::catalog() {
            for &(n, p) in &[(100usize, 0.3), (1000, 0.5), (10_000, 0.75)] {
                let lead = leading_center_value(&spec, n, p).unwrap();
                let want = lead * law_part(n, p);
                // The logarithmic entries' closed forms use ln n directly.
                let got = predict_energy(&spec, n, p, PredictionSource::ClosedForm)
                    .unwrap()
                    .predicted_energy;
                assert!(
                    (got - want).abs() <= 1e-12 * want.abs(),
                    "{} at n={n} p={p}: closed {got} vs rebuilt {want}",
                    spec.id()
                );
            }
        }
    }

    #[test]
    fn closed_form_tracks_exact_center_at_large_n() {
        // At n = 10^6 the sources agree within 1%. The logarithmic centers
        // converge only like 1 / ln n, so each is compared where its lag is
        // inside the band: ln(np) needs p near 1, while ln(2np) equals ln n
        // exactly at p = 1/2. The structural agreement is already pinned by
        // closed_form_equals_general_law_with_leading_center.
        let n = 1_000_000usize;
        for spec in WeightFunction::catalog() {
            let p = match spec {
                MZagreb1 | MZagreb2 => 0.9,
                _ => 0.5,
            };
            let general = predict_energy(&spec, n, p, PredictionSource::General)
                .unwrap()
                .predicted_energy;
            let closed = predict_energy(&spec, n, p, PredictionSource::ClosedForm)
                .unwrap()
                .predicted_energy;
            let ratio = closed / general;
            assert!(
                (ratio - 1.0).abs() < 0.01,
                "{}: ratio {ratio} at n={n}",
                spec.id()
            );
        }
    }

    #[test]
    fn prediction_metadata() {
        let pred = predict_energy(&GeneralRandic { alpha: 0.5 }, 100, 0.5,
            PredictionSource::ClosedForm).unwrap();
        assert_eq!(pred.index_id, "general_randic");
        assert_eq!(pred.alpha, Some(0.5));
        assert_eq!(pred.leading_exponent, 2.5);
        assert!(!pred.log_factor);
        let pred = predict_energy(&MZagreb2, 100, 0.5, PredictionSource::General).unwrap();
        assert!(pred.log_factor);
        assert_eq!(pred.leading_exponent, 1.5);
    }

    #[test]
    fn center_zero_and_undefined_centers_propagate() {
        // abc at np = 1 has a zero center: the general law must reject it.
        assert!(matches!(
            predict_energy(&Abc, 10, 0.1, PredictionSource::General),
            Err(PredictError::Weight(WeightError::CenterZero { .. }))
        ));
        // The closed form stays total.
        assert!(predict_energy(&Abc, 10, 0.1, PredictionSource::ClosedForm).is_ok());
    }

    fn interior(spec: &WeightFunction) -> f64 {
        match argmax_p(spec, 1000).unwrap() {
            ArgmaxOutcome::Interior { p_star, .. } => p_star,
            other => panic!("{}: expected interior maximum, got {other:?}", spec.id()),
        }
    }

    #[test]
    fn argmax_matches_stationary_points() {
        assert!((interior(&ZagrebM1) - 0.75).abs() < 1e-4);
        assert!((interior(&ZagrebM2) - 5.0 / 6.0).abs() < 1e-4);
        assert!((interior(&Azi) - 0.875).abs() < 1e-4);
        assert!((interior(&Ag1) - 0.5).abs() < 1e-4);
        assert!((interior(&MZagreb2) - 0.5).abs() < 1e-4);
        assert!((interior(&Lanzhou) - 0.5).abs() < 1e-4);
        assert!((interior(&Unit) - 0.5).abs() < 1e-4);
        assert!((interior(&MZagreb1Star) - 0.5).abs() < 1e-4);
    }

    #[test]
    fn argmax_general_randic_follows_the_alpha_formula() {
        // Stationary point (4 alpha + 1) / (4 alpha + 2) for alpha > -1/4.
        for alpha in [0.5f64, 1.0, 2.0] {
            let want = (4.0 * alpha + 1.0) / (4.0 * alpha + 2.0);
            let got = interior(&GeneralRandic { alpha });
            assert!((got - want).abs() < 1e-4, "alpha={alpha}: {got} vs {want}");
        }
        // At or below alpha = -1/4 the closed form is strictly decreasing.
        assert_eq!(
            argmax_p(&GeneralRandic { alpha: -0.25 }, 1000).unwrap(),
            ArgmaxOutcome::DecreasingInP
        );
        assert_eq!(
            argmax_p(&GeneralRandic { alpha: -1.0 }, 1000).unwrap(),
            ArgmaxOutcome::DecreasingInP
        );
    }

    #[test]
    fn argmax_monotone_indices_report_boundary_trend() {
        for spec in [Randic, Harmonic, Sci, Abc, MZagreb1] {
            assert_eq!(
                argmax_p(&spec, 1000).unwrap(),
                ArgmaxOutcome::DecreasingInP,
                "{}",
                spec.id()
            );
        }
    }

    #[test]
    fn argmax_interior_value_is_the_maximum_nearby() {
        if let ArgmaxOutcome::Interior { p_star, value } = argmax_p(&Azi, 100).unwrap() {
            for dp in [-0.01, -0.001, 0.001, 0.01] {
                let p = p_star + dp;
                let v = predict_energy(&Azi, 100, p, PredictionSource::ClosedForm)
                    .unwrap()
                    .predicted_energy;
                assert!(v <= value + 1e-9 * value.abs());
            }
        } else {
            panic!("azi has an interior maximum");
        }
    }
}
