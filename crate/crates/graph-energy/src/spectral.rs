//! Dense symmetric eigenvalues and spectrum statistics.
//!
//! The solver reduces the matrix to tridiagonal form with Householder
//! reflections applied to a packed lower triangle (the classical
//! EISPACK/JAMA reduction, eigenvectors never formed) and then runs
//! implicit-shift QL on the tridiagonal. Cost is `O(n^3)` for the
//! reduction and `O(n^2)` for QL; memory is one packed triangle,
//! `n (n + 1) / 2` doubles. Accuracy is set by [`QL_EPS`]: eigenvalues
//! come out correct to roughly that fraction of the matrix scale, which
//! leaves ample slack for the `1e-8`/`1e-9` checks in the test suite.
//!
//! On top of the solver sit the quantities the experiments need: energy
//! (sum of absolute eigenvalues), empirical spectral distribution values,
//! trace moments, the brute-force closed-walk moment oracle, and the
//! Ky Fan triangle inequality check.

use crate::graph::{Graph, Seed};
use crate::weights::{build_weighted_adjacency, center_scale, WeightError, WeightFunction};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not symmetric at ({i}, {j}): |a_ij - a_ji| = {delta}")]
    Asymmetric { i: usize, j: usize, delta: f64 },
    #[error("matrix has a non-finite entry at ({i}, {j})")]
    NonFinite { i: usize, j: usize },
    #[error("eigenvalue {index} failed to converge within {iterations} QL sweeps")]
    NoConvergence { index: usize, iterations: u32 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("moment order {k} exceeds the supported cap {cap}")]
    OrderCap { k: u32, cap: u32 },
    #[error("walk oracle limited to n <= {cap}, got {n}")]
    WalkOrderCap { n: usize, cap: usize },
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Highest trace-moment order served; beyond this, powers of large
/// eigenvalues lose too much precision to be meaningful.
pub const MOMENT_CAP: u32 = 12;

/// Off-diagonal convergence threshold for QL, relative to the matrix scale.
pub const QL_EPS: f64 = 1e-12;

/// QL sweeps allowed per eigenvalue before reporting non-convergence.
pub const QL_MAX_ITER: u32 = 50;

/// Dense symmetric matrix; `set` mirrors, so symmetry holds by
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    #[must_use]
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds from full rows, rejecting asymmetry beyond `1e-12` absolute;
    /// surviving roundoff asymmetry is averaged away so the stored matrix
    /// is exactly symmetric.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, SpectralError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SpectralError::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(SpectralError::NonFinite { i, j });
                }
            }
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let delta = (rows[i][j] - rows[j][i]).abs();
                if delta > 1e-12 {
                    return Err(SpectralError::Asymmetric { i, j, delta });
                }
                m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
            }
        }
        Ok(m)
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    /// Entrywise sum; operands must agree in size.
    pub fn add(&self, other: &Self) -> Result<Self, SpectralError> {
        if self.n != other.n {
            return Err(SpectralError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { n: self.n, data })
    }

    #[must_use]
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    #[must_use]
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries (squared Frobenius norm), which equals the
    /// sum of squared eigenvalues.
    #[must_use]
    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum()
    }

    fn check_finite(&self) -> Result<(), SpectralError> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_finite() {
                    return Err(SpectralError::NonFinite { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Symmetric matrix with entries drawn uniformly from `[-1, 1)`, for
/// randomized identity checks.
#[must_use]
pub fn build_random_symmetric(n: usize, seed: Seed) -> SymmetricMatrix {
    use rand::Rng;
    let mut rng = seed.rng();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, rng.random::<f64>() * 2.0 - 1.0);
        }
    }
    m
}

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eig: Vec<f64>,
}

impl Spectrum {
    /// Wraps precomputed eigenvalues; sorts defensively so the ordering
    /// invariant cannot be violated from outside.
    #[must_use]
    pub fn from_sorted(mut eig: Vec<f64>) -> Self {
        eig.sort_unstable_by(f64::total_cmp);
        Self { eig }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.eig.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.eig.is_empty()
    }

    #[must_use]
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eig
    }

    /// Graph energy: the sum of absolute eigenvalues.
    #[must_use]
    pub fn energy(&self) -> f64 {
        self.eig.iter().map(|l| l.abs()).sum()
    }

    /// Empirical spectral distribution of `scale * lambda_i` at `x`
    /// (right-continuous).
    #[must_use]
    pub fn esd(&self, x: f64, scale: f64) -> f64 {
        assert!(scale > 0.0, "scale must be positive");
        let count = self.eig.partition_point(|&l| scale * l <= x);
        count as f64 / self.eig.len() as f64
    }

    /// `(1/n) * sum((scale * lambda_i)^k)`.
    #[must_use]
    pub fn scaled_moment(&self, k: u32, scale: f64) -> f64 {
        let n = self.eig.len() as f64;
        self.eig
            .iter()
            .map(|&l| (scale * l).powi(k as i32))
            .sum::<f64>()
            / n
    }
}

/// Sup distance between the empirical spectral distributions of two
/// spectra under a common scale. Both step functions are constant between
/// jump points, so the supremum is attained at a jump.
#[must_use]
pub fn esd_sup_distance(a: &Spectrum, b: &Spectrum, scale: f64) -> f64 {
    let mut d: f64 = 0.0;
    for &l in a.eigenvalues().iter().chain(b.eigenvalues()) {
        let x = scale * l;
        d = d.max((a.esd(x, scale) - b.esd(x, scale)).abs());
    }
    d
}

/// All eigenvalues of `a`, ascending.
///
/// # Errors
///
/// Rejects non-finite entries and reports [`SpectralError::NoConvergence`]
/// if QL exceeds its sweep budget (which, for finite symmetric input,
/// indicates a pathological matrix rather than an expected outcome).
pub fn eigenvalues(a: &SymmetricMatrix) -> Result<Spectrum, SpectralError> {
    a.check_finite()?;
    let n = a.n();
    if n == 0 {
        return Ok(Spectrum { eig: Vec::new() });
    }
    // Packed lower triangle: row i occupies tri[i (i + 1) / 2 ..= i (i + 1) / 2 + i].
    let mut tri = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in 0..=i {
            tri.push(a.get(i, j));
        }
    }
    let (mut d, mut e) = tridiagonalize_packed(&mut tri, n);
    ql_implicit(&mut d, &mut e)?;
    d.sort_unstable_by(f64::total_cmp);
    Ok(Spectrum { eig: d })
}

/// Energy of `a`: sum of absolute eigenvalues.
pub fn energy(a: &SymmetricMatrix) -> Result<f64, SpectralError> {
    Ok(eigenvalues(a)?.energy())
}

/// `(1/n) * trace(A^k)`, evaluated through the spectrum.
pub fn trace_moment(a: &SymmetricMatrix, k: u32) -> Result<f64, SpectralError> {
    if k == 0 || k > MOMENT_CAP {
        return Err(SpectralError::OrderCap { k, cap: MOMENT_CAP });
    }
    Ok(eigenvalues(a)?.scaled_moment(k, 1.0))
}

/// Largest graph order the walk oracle enumerates; `n^k` sequences are
/// visited, so both caps are small by design.
pub const WALK_N_CAP: usize = 8;
pub const WALK_K_CAP: u32 = 6;

/// Closed-walk moment oracle: `(1/n)` times the sum, over all `n^k`
/// cyclic vertex sequences, of the product of centered-scaled adjacency
/// entries along the sequence. Equals `(1/n) trace(M^k)` for the matrix
/// `M = center_scale(A(f), fc, p)` by direct expansion of the trace, but
/// never multiplies matrices or touches the eigensolver, which is what
/// makes it an independent check.
pub fn walk_moment(
    g: &Graph,
    spec: &WeightFunction,
    fc: f64,
    p: f64,
    k: u32,
) -> Result<f64, SpectralError> {
    if g.n() > WALK_N_CAP {
        return Err(SpectralError::WalkOrderCap {
            n: g.n(),
            cap: WALK_N_CAP,
        });
    }
    if k == 0 || k > WALK_K_CAP {
        return Err(SpectralError::OrderCap {
            k,
            cap: WALK_K_CAP,
        });
    }
    let m = center_scale(&build_weighted_adjacency(g, spec)?, fc, p)?;
    let n = g.n();

    // Depth-first product over v_0, .., v_{k-1}, closing back to v_0.
    fn extend(m: &SymmetricMatrix, n: usize, v0: usize, vt: usize, left: u32, partial: f64) -> f64 {
        if left == 0 {
            return partial * m.get(vt, v0);
        }
        let mut acc = 0.0;
        for w in 0..n {
            let step = m.get(vt, w);
            if step != 0.0 {
                acc += extend(m, n, v0, w, left - 1, partial * step);
            }
        }
        acc
    }

    // A closed walk v_0 .. v_{k-1} back to v_0 chooses k - 1 free vertices;
    // the closing factor m[v_{k-1}, v_0] is applied at the recursion floor.
    let mut total = 0.0;
    for v0 in 0..n {
        total += extend(&m, n, v0, v0, k - 1, 1.0);
    }
    Ok(total / n as f64)
}

/// Outcome of the Ky Fan triangle inequality `E(X + Y) <= E(X) + E(Y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KyFanCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs <= rhs` up to `1e-9` relative slack for eigensolver roundoff.
    pub holds: bool,
}

/// Evaluates both sides of the Ky Fan inequality for a pair of symmetric
/// matrices of equal size.
pub fn ky_fan_check(x: &SymmetricMatrix, y: &SymmetricMatrix) -> Result<KyFanCheck, SpectralError> {
    let sum = x.add(y)?;
    let lhs = energy(&sum)?;
    let rhs = energy(x)? + energy(y)?;
    let holds = lhs <= rhs + 1e-9 * rhs.abs().max(1.0);
    Ok(KyFanCheck { lhs, rhs, holds })
}

/// Householder reduction of a packed lower triangle to tridiagonal form.
/// Returns `(d, e)` with `d` the diagonal and `e[i]` the coupling between
/// rows `i` and `i - 1` (`e[0] = 0`). Destroys `tri`.
fn tridiagonalize_packed(tri: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let idx = |i: usize| i * (i + 1) / 2;
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut pv = vec![0.0; n];

    for i in (1..n).rev() {
        let l = i - 1;
        let (head, tail) = tri.split_at_mut(idx(i));
        let (u, rest) = tail.split_at_mut(i);
        d[i] = rest[0];

        let scale: f64 = u.iter().map(|x| x.abs()).sum();
        if scale == 0.0 {
            e[i] = 0.0;
            continue;
        }
        for x in u.iter_mut() {
            *x /= scale;
        }
        let mut h: f64 = u.iter().map(|x| x * x).sum();
        let f = u[l];
        let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
        e[i] = scale * g;
        h -= f * g;
        u[l] = f - g;

        // pv = A u / h over the leading i-by-i block.
        let p = &mut pv[..i];
        p.fill(0.0);
        for j in 0..i {
            let row = &head[idx(j)..idx(j) + j + 1];
            let (off, diag) = row.split_at(j);
            let uj = u[j];
            let mut s = diag[0] * uj;
            s += dot(off, &u[..j]);
            axpy(&mut p[..j], uj, off);
            p[j] += s;
        }
        for x in p.iter_mut() {
            *x /= h;
        }

        // q = p - (u . p / 2h) u, then the rank-2 update A -= u q^T + q u^T.
        let k = dot(u, p) / (2.0 * h);
        for (qi, &ui) in p.iter_mut().zip(u.iter()) {
            *qi -= k * ui;
        }
        for j in 0..i {
            let row = &mut head[idx(j)..idx(j) + j + 1];
            axpy(row, -u[j], &p[..j + 1]);
            axpy(row, -p[j], &u[..j + 1]);
        }
    }
    d[0] = tri[0];
    e[0] = 0.0;
    (d, e)
}

/// Dot product with four accumulators so the reduction vectorizes.
#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    let m = a.len() / 4 * 4;
    let mut acc = [0.0f64; 4];
    let (a4, ar) = a.split_at(m);
    let (b4, br) = b.split_at(m);
    for (ca, cb) in a4.chunks_exact(4).zip(b4.chunks_exact(4)) {
        acc[0] += ca[0] * cb[0];
        acc[1] += ca[1] * cb[1];
        acc[2] += ca[2] * cb[2];
        acc[3] += ca[3] * cb[3];
    }
    let mut s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (x, y) in ar.iter().zip(br) {
        s += x * y;
    }
    s
}

/// `y += alpha * x` over the common prefix.
#[inline]
fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Implicit-shift QL on a tridiagonal `(d, e)`; `e[i]` couples rows `i`
/// and `i - 1` on entry. Eigenvalues replace `d`, unsorted.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), SpectralError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 {
            if e[m].abs() <= QL_EPS * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0u32;
            loop {
                iter += 1;
                if iter > QL_MAX_ITER {
                    return Err(SpectralError::NoConvergence {
                        index: l,
                        iterations: QL_MAX_ITER,
                    });
                }
                // Implicit shift from the leading 2x2.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // One QL sweep from m down to l.
                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= QL_EPS * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}
