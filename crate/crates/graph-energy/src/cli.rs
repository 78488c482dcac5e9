//! Command-line front end.
//!
//! Subcommands: `predict` (closed-form tables and argmax-over-p), `energy`
//! (one measured trial), `esd` (spectrum dump), `sweep` (the full Monte
//! Carlo grid), `selftest` (oracle smoke checks). stdout carries data only;
//! diagnostics go to stderr.
//!
//! Exit codes: 0 success, 2 usage or config errors, 3 domain failures (an
//! index undefined on the sampled graph, say), 1 internal failures.
//!
//! Sweep configs are flat `key = value` text; list values are comma
//! separated. Recognized keys: `n`, `p`, `index`, `alpha`, `trials`, `seed`,
//! `ks`, `moments`, `parallelism`. `#` starts a comment line.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::experiments::{
    run_sweep, run_trial_on_graph, ExperimentConfig, ExperimentError, TrialOptions, TrialStatus,
};
use crate::graph::{Graph, Seed};
use crate::output::{self, OutputError, OutputRow};
use crate::predict::{argmax_p, predict_energy, PredictError, PredictionSource};
use crate::quad;
use crate::semicircle::SemicircleLaw;
use crate::spectral::{
    build_random_symmetric, eigenvalues, ky_fan_check, trace_moment, walk_moment, SymmetricMatrix,
};
use crate::weights::{build_weighted_adjacency, center_scale, WeightError, WeightFunction};

/// Parses argv and runs one subcommand, returning the process exit code.
#[must_use]
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "graph-energy",
    version,
    about = "Measured vs predicted spectral energy of degree-weighted random graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print predicted energies, or where they peak over p
    Predict(PredictArgs),
    /// Sample one graph and measure one index on it
    Energy(EnergyArgs),
    /// Dump the spectrum of one sampled weighted graph
    Esd(EsdArgs),
    /// Run a full (n, p, index, trial) grid and summarize it
    Sweep(SweepArgs),
    /// Run the built-in oracle checks and report pass/fail per check
    Selftest,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct PredictArgs {
    /// Catalog id, comma-separated ids, or "all"
    #[arg(long)]
    index: String,
    /// Exponent for general_randic entries
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Report the maximizer of the closed form over p instead of values
    #[arg(long)]
    argmax_p: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnergyArgs {
    /// Vertex count for sampling; exclusive with --graph
    #[arg(long, conflicts_with = "graph")]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Catalog id
    #[arg(long)]
    index: String,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Measure a fixture edge-list file instead of sampling
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Also write the centered scaled spectrum here, one real per line
    #[arg(long)]
    esd_out: Option<PathBuf>,
    /// Compute the Kolmogorov-Smirnov statistics
    #[arg(long)]
    ks: bool,
    /// Moment orders, comma separated; "none" disables them
    #[arg(long, default_value = "2,4")]
    moments: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EsdArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long)]
    index: String,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dump raw eigenvalues of A(f) instead of the centered scaled spectrum
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat key=value config file; exclusive with the grid flags
    #[arg(long, conflicts_with_all = ["n", "p", "index", "alpha", "trials", "seed", "ks", "moments", "parallelism"])]
    config: Option<PathBuf>,
    /// Vertex counts, comma separated
    #[arg(long)]
    n: Option<String>,
    /// Edge probabilities, comma separated
    #[arg(long)]
    p: Option<String>,
    /// Catalog ids, comma separated, or "all"
    #[arg(long)]
    index: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    /// Trials per cell
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    ks: bool,
    #[arg(long)]
    moments: Option<String>,
    #[arg(long)]
    parallelism: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Internal(m) => m,
        }
    }
}

fn weight_error(e: WeightError) -> CliError {
    match e {
        WeightError::UnknownId(_) | WeightError::MissingAlpha => CliError::Usage(e.to_string()),
        other => CliError::Domain(other.to_string()),
    }
}

fn predict_error(e: PredictError) -> CliError {
    match e {
        PredictError::InvalidP { .. } | PredictError::InvalidN { .. } => {
            CliError::Usage(e.to_string())
        }
        PredictError::Weight(w) => weight_error(w),
    }
}

fn output_error(e: OutputError) -> CliError {
    CliError::Internal(e.to_string())
}

fn dispatch(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Predict(a) => cmd_predict(a),
        Cmd::Energy(a) => cmd_energy(a),
        Cmd::Esd(a) => cmd_esd(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::Selftest => cmd_selftest(),
    }
}

/// Runs `emit` against either the `--out` file or locked stdout.
fn write_output<F>(out: &Option<PathBuf>, emit: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), OutputError>,
{
    match out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| {
                CliError::Internal(format!("cannot create {}: {e}", path.display()))
            })?;
            let mut w = io::BufWriter::new(file);
            emit(&mut w).map_err(output_error)?;
            w.flush()
                .map_err(|e| CliError::Internal(format!("flush failed: {e}")))
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            emit(&mut w).map_err(output_error)
        }
    }
}

fn emit_rows(out: &Option<PathBuf>, format: Format, rows: &[OutputRow]) -> Result<(), CliError> {
    write_output(out, |w| match format {
        Format::Csv => output::write_csv(w, rows),
        Format::Json => output::write_json(w, rows),
    })
}

/// Parses `--index`: one id, a comma list, or "all" for the whole catalog.
fn parse_indices(value: &str, alpha: Option<f64>) -> Result<Vec<WeightFunction>, CliError> {
    if value.trim() == "all" {
        let mut specs = WeightFunction::catalog();
        if let Some(a) = alpha {
            for spec in &mut specs {
                if let WeightFunction::GeneralRandic { alpha } = spec {
                    *alpha = a;
                }
            }
        }
        return Ok(specs);
    }
    value
        .split(',')
        .map(|tok| WeightFunction::from_id(tok.trim(), alpha).map_err(weight_error))
        .collect()
}

fn parse_single_index(value: &str, alpha: Option<f64>) -> Result<WeightFunction, CliError> {
    WeightFunction::from_id(value.trim(), alpha).map_err(weight_error)
}

fn cmd_predict(a: PredictArgs) -> Result<(), CliError> {
    let specs = parse_indices(&a.index, a.alpha)?;
    let mut rows = Vec::with_capacity(specs.len());
    for spec in &specs {
        if a.argmax_p {
            let outcome = argmax_p(spec, a.n).map_err(predict_error)?;
            rows.push(OutputRow::from_argmax(spec, a.n, &outcome));
        } else {
            let general =
                predict_energy(spec, a.n, a.p, PredictionSource::General).map_err(predict_error)?;
            let closed = predict_energy(spec, a.n, a.p, PredictionSource::ClosedForm)
                .map_err(predict_error)?;
            rows.push(OutputRow::from_predictions(&general, &closed));
        }
    }
    emit_rows(&a.out, a.format, &rows)
}

fn cmd_energy(a: EnergyArgs) -> Result<(), CliError> {
    let spec = parse_single_index(&a.index, a.alpha)?;
    let opts = TrialOptions {
        compute_ks: a.ks,
        moment_orders: parse_moments(&a.moments).map_err(CliError::Usage)?,
    };
    let g = match (&a.graph, a.n) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read graph file {}: {e}", path.display()))
            })?;
            Graph::parse_edge_list(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        (None, Some(n)) => Graph::sample_gnp(n, a.p, Seed::new(a.seed, 0))
            .map_err(|e| CliError::Usage(e.to_string()))?,
        (None, None) => {
            return Err(CliError::Usage(
                "energy requires either --n or --graph".to_owned(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects --n together with --graph"),
    };
    let rec = run_trial_on_graph(&g, a.p, &spec, &opts);
    if let TrialStatus::Failed(reason) = &rec.status {
        return Err(CliError::Domain(reason.clone()));
    }
    if let Some(path) = &a.esd_out {
        let mat = build_weighted_adjacency(&g, &spec).map_err(weight_error)?;
        let fc = spec.center_value(g.n(), a.p).map_err(weight_error)?;
        let centered = center_scale(&mat, fc, a.p).map_err(weight_error)?;
        let s = eigenvalues(&centered).map_err(|e| CliError::Domain(e.to_string()))?;
        let scale = 1.0 / (g.n() as f64).sqrt();
        write_output(&Some(path.clone()), |w| output::write_esd(w, &s, scale))?;
    }
    emit_rows(&a.out, a.format, &[OutputRow::from_record(&rec)])
}

fn cmd_esd(a: EsdArgs) -> Result<(), CliError> {
    let spec = parse_single_index(&a.index, a.alpha)?;
    let g = Graph::sample_gnp(a.n, a.p, Seed::new(a.seed, 0))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mat = build_weighted_adjacency(&g, &spec).map_err(weight_error)?;
    let (target, scale) = if a.raw {
        (mat, 1.0)
    } else {
        let fc = spec.center_value(a.n, a.p).map_err(weight_error)?;
        let centered = center_scale(&mat, fc, a.p).map_err(weight_error)?;
        (centered, 1.0 / (a.n as f64).sqrt())
    };
    let s = eigenvalues(&target).map_err(|e| CliError::Domain(e.to_string()))?;
    write_output(&a.out, |w| output::write_esd(w, &s, scale))
}

fn cmd_sweep(a: SweepArgs) -> Result<(), CliError> {
    let cfg = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::Usage(format!("cannot read config {}: {e}", path.display()))
            })?;
            parse_config(&text).map_err(CliError::Usage)?
        }
        None => config_from_flags(&a)?,
    };
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let out = run_sweep(&cfg).map_err(|e| match e {
        ExperimentError::TooManyFailures { .. } => CliError::Domain(e.to_string()),
        other => CliError::Usage(other.to_string()),
    })?;
    write_output(&a.out, |w| match a.format {
        Format::Csv => output::write_sweep_csv(w, &out),
        Format::Json => output::write_sweep_json(w, &out),
    })
}

fn config_from_flags(a: &SweepArgs) -> Result<ExperimentConfig, CliError> {
    fn require<'a>(field: Option<&'a String>, name: &str) -> Result<&'a String, CliError> {
        field.ok_or_else(|| CliError::Usage(format!("sweep requires --config or {name}")))
    }
    let n_values =
        parse_scalar_list::<usize>(require(a.n.as_ref(), "--n")?, "--n").map_err(CliError::Usage)?;
    let p_values =
        parse_scalar_list::<f64>(require(a.p.as_ref(), "--p")?, "--p").map_err(CliError::Usage)?;
    let indices = parse_indices(require(a.index.as_ref(), "--index")?, a.alpha)?;
    let mut cfg = ExperimentConfig::new(
        n_values,
        p_values,
        indices,
        a.trials.unwrap_or(1),
        a.seed.unwrap_or(0),
    );
    cfg.compute_ks = a.ks;
    if let Some(m) = &a.moments {
        cfg.moment_orders = parse_moments(m).map_err(CliError::Usage)?;
    }
    if let Some(k) = a.parallelism {
        cfg.parallelism = k;
    }
    Ok(cfg)
}

fn parse_scalar_list<T: FromStr>(value: &str, what: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    value
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<T>()
                .map_err(|e| format!("bad {what} entry {tok:?}: {e}"))
        })
        .collect()
}

fn parse_moments(value: &str) -> Result<Vec<u32>, String> {
    let value = value.trim();
    if value.is_empty() || value == "none" {
        return Ok(Vec::new());
    }
    parse_scalar_list::<u32>(value, "moment order")
}

/// Parses the flat key=value sweep config format. Errors name the line and
/// field. Keys `n`, `p`, `index` are required; the rest have defaults.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, String> {
    fn put<T>(slot: &mut Option<T>, v: T, key: &str, lineno: usize) -> Result<(), String> {
        if slot.is_some() {
            return Err(format!("line {lineno}: duplicate key {key}"));
        }
        *slot = Some(v);
        Ok(())
    }

    let mut n_values: Option<Vec<usize>> = None;
    let mut p_values: Option<Vec<f64>> = None;
    let mut index_raw: Option<String> = None;
    let mut index_line = 0usize;
    let mut alpha: Option<f64> = None;
    let mut trials: Option<u64> = None;
    let mut seed: Option<u64> = None;
    let mut ks: Option<bool> = None;
    let mut moments: Option<Vec<u32>> = None;
    let mut parallelism: Option<usize> = None;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("line {lineno}: expected key = value, got {line:?}"));
        };
        let key = key.trim();
        let value = value.trim();
        let field = |e: String| format!("line {lineno}: field {key}: {e}");
        match key {
            "n" => put(
                &mut n_values,
                parse_scalar_list::<usize>(value, "n").map_err(field)?,
                key,
                lineno,
            )?,
            "p" => put(
                &mut p_values,
                parse_scalar_list::<f64>(value, "p").map_err(field)?,
                key,
                lineno,
            )?,
            "index" => {
                put(&mut index_raw, value.to_owned(), key, lineno)?;
                index_line = lineno;
            }
            "alpha" => put(
                &mut alpha,
                value
                    .parse::<f64>()
                    .map_err(|e| field(format!("bad real {value:?}: {e}")))?,
                key,
                lineno,
            )?,
            "trials" => put(
                &mut trials,
                value
                    .parse::<u64>()
                    .map_err(|e| field(format!("bad integer {value:?}: {e}")))?,
                key,
                lineno,
            )?,
            "seed" => put(
                &mut seed,
                value
                    .parse::<u64>()
                    .map_err(|e| field(format!("bad integer {value:?}: {e}")))?,
                key,
                lineno,
            )?,
            "ks" => put(
                &mut ks,
                value
                    .parse::<bool>()
                    .map_err(|e| field(format!("bad boolean {value:?}: {e}")))?,
                key,
                lineno,
            )?,
            "moments" => put(&mut moments, parse_moments(value).map_err(field)?, key, lineno)?,
            "parallelism" => put(
                &mut parallelism,
                value
                    .parse::<usize>()
                    .map_err(|e| field(format!("bad integer {value:?}: {e}")))?,
                key,
                lineno,
            )?,
            other => return Err(format!("line {lineno}: unknown key {other:?}")),
        }
    }

    let n_values = n_values.ok_or("config is missing required key n")?;
    let p_values = p_values.ok_or("config is missing required key p")?;
    let index_raw = index_raw.ok_or("config is missing required key index")?;
    let indices = parse_indices(&index_raw, alpha)
        .map_err(|e| format!("line {index_line}: field index: {}", e.message()))?;
    let mut cfg = ExperimentConfig::new(
        n_values,
        p_values,
        indices,
        trials.unwrap_or(1),
        seed.unwrap_or(0),
    );
    cfg.compute_ks = ks.unwrap_or(false);
    if let Some(m) = moments {
        cfg.moment_orders = m;
    }
    if let Some(k) = parallelism {
        cfg.parallelism = k;
    }
    Ok(cfg)
}

fn cmd_selftest() -> Result<(), CliError> {
    let checks: [(&str, fn() -> bool); 3] = [
        ("walk_trace_equivalence", selftest_walk_trace),
        ("ky_fan_inequality", selftest_ky_fan),
        ("semicircle_quadrature", selftest_quadrature),
    ];
    let mut failed = 0;
    println!("check,status");
    for (name, check) in checks {
        let ok = check();
        println!("{name},{}", if ok { "pass" } else { "fail" });
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        Err(CliError::Internal(format!(
            "{failed} selftest check(s) failed"
        )))
    } else {
        Ok(())
    }
}

/// Closed-walk sums must match eigenvalue moments on every graph with up to
/// four vertices (unit weights) and on a few weighted samples.
fn selftest_walk_trace() -> bool {
    let tol = 1e-9;
    for n in 2..=4usize {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|i| ((i + 1)..n as u32).map(move |j| (i, j)))
            .collect();
        for mask in 0..(1u32 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, edges).expect("valid enumeration");
            let a = build_weighted_adjacency(&g, &WeightFunction::Unit).expect("unit is total");
            let m = match center_scale(&a, 1.0, 0.5) {
                Ok(m) => m,
                Err(_) => return false,
            };
            for k in 1..=4 {
                let walk = match walk_moment(&g, &WeightFunction::Unit, 1.0, 0.5, k) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
                let trace = match trace_moment(&m, k) {
                    Ok(v) => v,
                    Err(_) => return false,
                };
                if (walk - trace).abs() > tol {
                    return false;
                }
            }
        }
    }
    for t in 0..5 {
        let g = match Graph::sample_gnp(6, 0.6, Seed::new(77, t)) {
            Ok(g) => g,
            Err(_) => return false,
        };
        let spec = WeightFunction::ZagrebM1;
        let fc = 3.0;
        let a = match build_weighted_adjacency(&g, &spec) {
            Ok(a) => a,
            Err(_) => return false,
        };
        let m = match center_scale(&a, fc, 0.6) {
            Ok(m) => m,
            Err(_) => return false,
        };
        for k in 1..=5 {
            let walk = match walk_moment(&g, &spec, fc, 0.6, k) {
                Ok(v) => v,
                Err(_) => return false,
            };
            let trace = match trace_moment(&m, k) {
                Ok(v) => v,
                Err(_) => return false,
            };
            if (walk - trace).abs() > tol {
                return false;
            }
        }
    }
    true
}

/// The energy triangle inequality on random pairs and on its equality and
/// cancellation fixtures.
fn selftest_ky_fan() -> bool {
    for t in 0..20 {
        let x = build_random_symmetric(20, Seed::new(501, 2 * t));
        let y = build_random_symmetric(20, Seed::new(501, 2 * t + 1));
        match ky_fan_check(&x, &y) {
            Ok(check) if check.holds => {}
            _ => return false,
        }
    }
    let x = build_random_symmetric(20, Seed::new(502, 0));
    let minus = x.scaled(-1.0);
    let zero = SymmetricMatrix::zeros(20);
    match ky_fan_check(&x, &minus) {
        Ok(check) if check.holds && check.lhs.abs() < 1e-8 => {}
        _ => return false,
    }
    match ky_fan_check(&x, &zero) {
        Ok(check) if check.holds && (check.lhs - check.rhs).abs() < 1e-8 => {}
        _ => return false,
    }
    true
}

/// Quadrature against the closed-form density: total mass, absolute first
/// moment, second moment.
fn selftest_quadrature() -> bool {
    let law = match SemicircleLaw::new(0.5) {
        Ok(law) => law,
        Err(_) => return false,
    };
    let r = law.support_radius();
    let tol = 1e-8;
    let mass = quad::integrate(&|x| law.density(x), -r, r, tol);
    let abs1 = quad::integrate(&|x| x.abs() * law.density(x), -r, r, tol);
    let m2 = quad::integrate(&|x| x * x * law.density(x), -r, r, tol);
    (mass - 1.0).abs() < 1e-6
        && (abs1 - law.abs_first_moment()).abs() < 1e-6
        && (m2 - law.even_moment(1)).abs() < 1e-6
        && (law.cdf(r) - 1.0).abs() < 1e-12
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parser_accepts_a_full_file() {
        let text = "\
# grid
n = 500, 1000
p = 0.5
index = unit, general_randic
alpha = 0.5
trials = 3
seed = 42
ks = true
moments = 2,4
parallelism = 2
";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.n_values, vec![500, 1000]);
        assert_eq!(cfg.p_values, vec![0.5]);
        assert_eq!(cfg.indices.len(), 2);
        assert_eq!(cfg.indices[1].alpha(), Some(0.5));
        assert_eq!(cfg.trials, 3);
        assert_eq!(cfg.master_seed, 42);
        assert!(cfg.compute_ks);
        assert_eq!(cfg.moment_orders, vec![2, 4]);
        assert_eq!(cfg.parallelism, 2);
    }

    #[test]
    fn config_parser_defaults_optional_keys() {
        let cfg = parse_config("n=10\np=0.5\nindex=unit\n").unwrap();
        assert_eq!(cfg.trials, 1);
        assert_eq!(cfg.master_seed, 0);
        assert!(!cfg.compute_ks);
        assert_eq!(cfg.moment_orders, vec![2, 4]);
    }

    #[test]
    fn config_parser_errors_name_line_and_field() {
        let err = parse_config("n=10\np=half\nindex=unit\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
        assert!(err.contains("p"), "{err}");

        let err = parse_config("n=10\nn=20\np=0.5\nindex=unit\n").unwrap_err();
        assert!(err.contains("line 2") && err.contains("duplicate"), "{err}");

        let err = parse_config("n=10\np=0.5\nindex=unit\nwat=1\n").unwrap_err();
        assert!(err.contains("unknown key"), "{err}");

        let err = parse_config("n=10\np=0.5\n").unwrap_err();
        assert!(err.contains("missing required key index"), "{err}");

        let err = parse_config("just some text\n").unwrap_err();
        assert!(err.contains("expected key = value"), "{err}");
    }

    #[test]
    fn config_parser_rejects_unknown_index_with_line() {
        let err = parse_config("n=10\np=0.5\nindex=unit,wat\n").unwrap_err();
        assert!(err.contains("line 3"), "{err}");
        assert!(err.contains("wat"), "{err}");
    }

    #[test]
    fn moments_value_none_disables_moments() {
        assert_eq!(parse_moments("none").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_moments("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_moments("2,4,6").unwrap(), vec![2, 4, 6]);
        assert!(parse_moments("two").is_err());
    }

    #[test]
    fn index_all_expands_catalog_with_alpha_override() {
        let specs = parse_indices("all", Some(1.5)).unwrap();
        assert_eq!(specs.len(), WeightFunction::catalog().len());
        let gr = specs
            .iter()
            .find(|s| s.id() == "general_randic")
            .expect("catalog contains general_randic");
        assert_eq!(gr.alpha(), Some(1.5));
    }

    #[test]
    fn selftest_checks_pass() {
        assert!(selftest_walk_trace());
        assert!(selftest_ky_fan());
        assert!(selftest_quadrature());
    }
}
