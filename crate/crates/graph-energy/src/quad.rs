//! Adaptive Simpson quadrature.
//!
//! Small, dependency-free integrator used to cross-check closed-form
//! integrals (distribution normalization, CDF values, moments) against a
//! numerical path that shares no code with them. Accuracy is controlled by
//! an absolute tolerance; each recursion level halves the budget and the
//! Richardson term `(s2 - s1) / 15` corrects the final estimate.

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// `f` must be finite on the closed interval. Recursion stops either when
/// the two-panel refinement agrees within `15 * tol` or at a fixed depth
/// cap, so the call always terminates.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    assert!(a.is_finite() && b.is_finite() && b >= a, "bad interval");
    assert!(tol > 0.0, "tolerance must be positive");
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

/// Depth cap: 2^40 panels is far beyond any tolerance used here; hitting it
/// means the integrand is pathological and the current estimate is returned.
const MAX_DEPTH: u32 = 40;

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
        return refined + (refined - whole) / 15.0;
    }
    let half = 0.5 * tol;
    recurse(f, a, m, fa, flm, fm, left, half, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, half, depth - 1)
}
