//! Monte Carlo trials and sweeps.
//!
//! A trial samples one random graph, builds the weighted adjacency for one
//! index, solves for its spectrum, and compares the measured energy with the
//! predicted values. A sweep runs every `(n, p, index)` cell of a config for
//! a fixed number of trials, deriving each trial's generator from the master
//! seed and a global trial counter, so the full record list (minus wall-clock
//! times) is a pure function of the config.
//!
//! Weight-domain failures (an index undefined at some edge, say) mark the
//! record as failed with the reason; they do not abort the sweep. A sweep
//! only errors out when more than 1% of its trials fail.

use std::collections::BTreeMap;
use std::time::Instant;

use thiserror::Error;

use crate::graph::{Graph, Seed};
use crate::predict::{predict_energy, PredictionSource};
use crate::semicircle::{ks_distance, SemicircleLaw};
use crate::spectral::{eigenvalues, Spectrum, MOMENT_CAP};
use crate::weights::{build_weighted_adjacency, center_scale, WeightFunction};

/// Errors from config validation or sweep orchestration.
#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("config lists no {what}")]
    EmptyList { what: &'static str },
    #[error("vertex count {n} out of range; need n >= 2")]
    BadN { n: usize },
    #[error("edge probability {p} out of range; need 0 < p < 1")]
    BadP { p: f64 },
    #[error("trials must be at least 1")]
    BadTrials,
    #[error("moment order {k} out of range; need 1 <= k <= {MOMENT_CAP}")]
    BadMomentOrder { k: u32 },
    #[error("parallelism must be at least 1")]
    BadParallelism,
    #[error("thread pool construction failed: {0}")]
    Pool(String),
    #[error("{failed} of {total} trials failed (first: {first}); a sweep tolerates at most 1%")]
    TooManyFailures {
        failed: usize,
        total: usize,
        first: String,
    },
}

/// Grid of trial cells plus sampling and measurement options.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub n_values: Vec<usize>,
    pub p_values: Vec<f64>,
    pub indices: Vec<WeightFunction>,
    /// Trials per `(n, p, index)` cell.
    pub trials: u64,
    pub master_seed: u64,
    /// Compute the Kolmogorov-Smirnov statistics per trial (costs a second
    /// eigensolve together with `moment_orders`).
    pub compute_ks: bool,
    /// Spectral moment orders of the centered matrix to record per trial.
    pub moment_orders: Vec<u32>,
    /// Worker threads for trial execution.
    pub parallelism: usize,
}

impl ExperimentConfig {
    /// Config with the default measurement options: moments 2 and 4, no
    /// Kolmogorov-Smirnov statistic, parallelism from the host.
    #[must_use]
    pub fn new(
        n_values: Vec<usize>,
        p_values: Vec<f64>,
        indices: Vec<WeightFunction>,
        trials: u64,
        master_seed: u64,
    ) -> Self {
        Self {
            n_values,
            p_values,
            indices,
            trials,
            master_seed,
            compute_ks: false,
            moment_orders: vec![2, 4],
            parallelism: default_parallelism(),
        }
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.n_values.is_empty() {
            return Err(ExperimentError::EmptyList { what: "n values" });
        }
        if self.p_values.is_empty() {
            return Err(ExperimentError::EmptyList { what: "p values" });
        }
        if self.indices.is_empty() {
            return Err(ExperimentError::EmptyList { what: "indices" });
        }
        for &n in &self.n_values {
            if n < 2 {
                return Err(ExperimentError::BadN { n });
            }
        }
        for &p in &self.p_values {
            if !(p.is_finite() && p > 0.0 && p < 1.0) {
                return Err(ExperimentError::BadP { p });
            }
        }
        if self.trials == 0 {
            return Err(ExperimentError::BadTrials);
        }
        for &k in &self.moment_orders {
            if k == 0 || k > MOMENT_CAP {
                return Err(ExperimentError::BadMomentOrder { k });
            }
        }
        if self.parallelism == 0 {
            return Err(ExperimentError::BadParallelism);
        }
        Ok(())
    }

    fn trial_options(&self) -> TrialOptions {
        TrialOptions {
            compute_ks: self.compute_ks,
            moment_orders: self.moment_orders.clone(),
        }
    }
}

/// Worker-thread count reported by the host, with a single-thread fallback.
#[must_use]
pub fn default_parallelism() -> usize {
    std::thread::available_parallelism()
        .map(|k| k.get())
        .unwrap_or(1)
}

/// Per-trial measurement options; see the config fields of the same names.
#[derive(Debug, Clone)]
pub struct TrialOptions {
    pub compute_ks: bool,
    pub moment_orders: Vec<u32>,
}

impl Default for TrialOptions {
    fn default() -> Self {
        Self {
            compute_ks: false,
            moment_orders: vec![2, 4],
        }
    }
}

/// Whether a trial completed, and if not, why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrialStatus {
    Ok,
    Failed(String),
}

impl TrialStatus {
    #[must_use]
    pub fn is_ok(&self) -> bool {
        matches!(self, TrialStatus::Ok)
    }

    /// Status text for serialized rows.
    #[must_use]
    pub fn text(&self) -> String {
        match self {
            TrialStatus::Ok => "ok".to_owned(),
            TrialStatus::Failed(reason) => format!("failed: {reason}"),
        }
    }
}

/// One trial's measurements next to the predictions they are judged against.
///
/// Optional fields are absent when the trial failed before producing them or
/// when the config did not request them.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub n: usize,
    pub p: f64,
    pub index_id: &'static str,
    pub alpha: Option<f64>,
    /// Trial index within its `(n, p, index)` cell.
    pub trial: u64,
    /// Measured energy, the sum of absolute eigenvalues of `A(f)`.
    pub energy: Option<f64>,
    /// General prediction `f(np, np) * (8 / 3 pi) * sqrt(p (1 - p)) * n^(3/2)`.
    pub predicted_t3: Option<f64>,
    /// Closed-form prediction with the leading asymptotic center.
    pub predicted_cor: Option<f64>,
    /// `energy / predicted_t3`.
    pub ratio_t3: Option<f64>,
    /// Kolmogorov-Smirnov distance between the empirical spectral
    /// distribution of `n^(-1/2) Atilde` and the semicircle law.
    pub ks: Option<f64>,
    /// Diagnostic: the same statistic for the raw spectrum scaled by
    /// `1 / (f(np, np) sqrt(n))` and shifted by `p / sqrt(n)`. Exceeds `ks`
    /// by at most `1/n` because the two matrices differ by a rank-one term.
    pub ks_diag: Option<f64>,
    /// Requested spectral moments `M_k(n^(-1/2) Atilde)` keyed by order.
    pub moments: BTreeMap<u32, f64>,
    pub wall_ms: f64,
    pub status: TrialStatus,
}

impl ExperimentRecord {
    fn pending(n: usize, p: f64, spec: &WeightFunction, trial: u64) -> Self {
        Self {
            n,
            p,
            index_id: spec.id(),
            alpha: spec.alpha(),
            trial,
            energy: None,
            predicted_t3: None,
            predicted_cor: None,
            ratio_t3: None,
            ks: None,
            ks_diag: None,
            moments: BTreeMap::new(),
            wall_ms: 0.0,
            status: TrialStatus::Ok,
        }
    }

    /// Equality ignoring the wall-clock field, for determinism checks.
    #[must_use]
    pub fn same_modulo_wall(&self, other: &Self) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.wall_ms = 0.0;
        b.wall_ms = 0.0;
        a == b
    }
}

/// Samples a graph from the seed and measures one index on it.
#[must_use]
pub fn run_trial(
    n: usize,
    p: f64,
    spec: &WeightFunction,
    seed: Seed,
    opts: &TrialOptions,
) -> ExperimentRecord {
    let started = Instant::now();
    let mut rec = ExperimentRecord::pending(n, p, spec, seed.trial);
    let outcome = Graph::sample_gnp(n, p, seed)
        .map_err(|e| e.to_string())
        .and_then(|g| measure(&g, p, spec, opts, &mut rec));
    if let Err(reason) = outcome {
        rec.status = TrialStatus::Failed(reason);
    }
    rec.wall_ms = started.elapsed().as_secs_f64() * 1e3;
    rec
}

/// Measures one index on a fixed graph instead of a sampled one. The record
/// carries trial index 0.
#[must_use]
pub fn run_trial_on_graph(
    g: &Graph,
    p: f64,
    spec: &WeightFunction,
    opts: &TrialOptions,
) -> ExperimentRecord {
    let started = Instant::now();
    let mut rec = ExperimentRecord::pending(g.n(), p, spec, 0);
    if let Err(reason) = measure(g, p, spec, opts, &mut rec) {
        rec.status = TrialStatus::Failed(reason);
    }
    rec.wall_ms = started.elapsed().as_secs_f64() * 1e3;
    rec
}

fn measure(
    g: &Graph,
    p: f64,
    spec: &WeightFunction,
    opts: &TrialOptions,
    rec: &mut ExperimentRecord,
) -> Result<(), String> {
    let n = g.n();
    let t3 = predict_energy(spec, n, p, PredictionSource::General).map_err(|e| e.to_string())?;
    let cor =
        predict_energy(spec, n, p, PredictionSource::ClosedForm).map_err(|e| e.to_string())?;
    rec.predicted_t3 = Some(t3.predicted_energy);
    rec.predicted_cor = Some(cor.predicted_energy);

    let a = build_weighted_adjacency(g, spec).map_err(|e| e.to_string())?;
    let spectrum = eigenvalues(&a).map_err(|e| e.to_string())?;
    let energy = spectrum.energy();
    rec.energy = Some(energy);
    rec.ratio_t3 = Some(energy / t3.predicted_energy);

    if !opts.compute_ks && opts.moment_orders.is_empty() {
        return Ok(());
    }
    let fc = spec.center_value(n, p).map_err(|e| e.to_string())?;
    let centered = center_scale(&a, fc, p).map_err(|e| e.to_string())?;
    let centered_spectrum = eigenvalues(&centered).map_err(|e| e.to_string())?;
    let scale = 1.0 / (n as f64).sqrt();
    for &k in &opts.moment_orders {
        rec.moments
            .insert(k, centered_spectrum.scaled_moment(k, scale));
    }
    if opts.compute_ks {
        let law = SemicircleLaw::from_edge_density(p).map_err(|e| e.to_string())?;
        rec.ks = Some(ks_distance(&centered_spectrum, scale, &law));
        // Scaling the raw spectrum by 1/(fc sqrt(n)) and shifting by
        // p/sqrt(n) gives the spectrum of Atilde/sqrt(n) + (p/sqrt(n)) J, a
        // rank-one perturbation of the scaled centered matrix, so this
        // distance exceeds the one above by at most 1/n.
        let shift = p * scale;
        let shifted: Vec<f64> = spectrum
            .eigenvalues()
            .iter()
            .map(|&x| x / fc * scale + shift)
            .collect();
        rec.ks_diag = Some(ks_distance(&Spectrum::from_sorted(shifted), 1.0, &law));
    }
    Ok(())
}

/// Per-cell aggregate over the successful trials.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub n: usize,
    pub p: f64,
    pub index_id: &'static str,
    pub alpha: Option<f64>,
    pub trials: u64,
    pub failed: u64,
    pub mean_ratio_t3: Option<f64>,
    pub std_ratio_t3: Option<f64>,
    pub mean_ks: Option<f64>,
    pub std_ks: Option<f64>,
}

/// Records in deterministic cell-major order plus one summary row per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub records: Vec<ExperimentRecord>,
    pub summaries: Vec<CellSummary>,
}

/// Runs every cell of the config. Record order is the nested iteration order
/// of `n_values`, `p_values`, `indices`, trial index, regardless of which
/// worker thread finishes first; generator streams are keyed by the position
/// in that order.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<SweepOutput, ExperimentError> {
    cfg.validate()?;
    let opts = cfg.trial_options();

    struct Job {
        n: usize,
        p: f64,
        spec: WeightFunction,
        seed: Seed,
        trial: u64,
    }
    let mut jobs = Vec::new();
    let mut counter = 0u64;
    for &n in &cfg.n_values {
        for &p in &cfg.p_values {
            for spec in &cfg.indices {
                for trial in 0..cfg.trials {
                    jobs.push(Job {
                        n,
                        p,
                        spec: spec.clone(),
                        seed: Seed::new(cfg.master_seed, counter),
                        trial,
                    });
                    counter += 1;
                }
            }
        }
    }

    let run_one = |job: &Job| {
        let mut rec = run_trial(job.n, job.p, &job.spec, job.seed, &opts);
        rec.trial = job.trial;
        rec
    };
    let records: Vec<ExperimentRecord> = if cfg.parallelism > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallelism)
            .build()
            .map_err(|e| ExperimentError::Pool(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(run_one).collect())
    } else {
        jobs.iter().map(run_one).collect()
    };

    let total = records.len();
    let failures: Vec<&ExperimentRecord> =
        records.iter().filter(|r| !r.status.is_ok()).collect();
    if failures.len() * 100 > total {
        return Err(ExperimentError::TooManyFailures {
            failed: failures.len(),
            total,
            first: failures[0].status.text(),
        });
    }

    let mut summaries = Vec::new();
    let mut offset = 0;
    let per_cell = cfg.trials as usize;
    for &n in &cfg.n_values {
        for &p in &cfg.p_values {
            for spec in &cfg.indices {
                let cell = &records[offset..offset + per_cell];
                offset += per_cell;
                summaries.push(summarize_cell(n, p, spec, cell));
            }
        }
    }
    Ok(SweepOutput { records, summaries })
}

fn summarize_cell(
    n: usize,
    p: f64,
    spec: &WeightFunction,
    cell: &[ExperimentRecord],
) -> CellSummary {
    let ratios: Vec<f64> = cell.iter().filter_map(|r| r.ratio_t3).collect();
    let kss: Vec<f64> = cell.iter().filter_map(|r| r.ks).collect();
    let (mean_ratio_t3, std_ratio_t3) = mean_std(&ratios);
    let (mean_ks, std_ks) = mean_std(&kss);
    CellSummary {
        n,
        p,
        index_id: spec.id(),
        alpha: spec.alpha(),
        trials: cell.len() as u64,
        failed: cell.iter().filter(|r| !r.status.is_ok()).count() as u64,
        mean_ratio_t3,
        std_ratio_t3,
        mean_ks,
        std_ks,
    }
}

/// Mean and sample standard deviation; the deviation needs two points.
fn mean_std(xs: &[f64]) -> (Option<f64>, Option<f64>) {
    if xs.is_empty() {
        return (None, None);
    }
    let k = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / k;
    if xs.len() < 2 {
        return (Some(mean), None);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1.0);
    (Some(mean), Some(var.sqrt()))
}
