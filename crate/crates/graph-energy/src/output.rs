//! Row flattening and serialization.
//!
//! Every emitted table row carries the same fourteen columns in a fixed
//! order; fields that do not apply to a row kind stay empty in CSV and null
//! in JSON. Reals are written with 17 significant digits in exponent
//! notation, which round-trips any finite double exactly.
//!
//! A sweep serializes as the record table, one blank line, then the summary
//! table; JSON output nests both under `records` and `summary` keys.

use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use crate::experiments::{CellSummary, ExperimentRecord, SweepOutput};
use crate::predict::{ArgmaxOutcome, Prediction};
use crate::spectral::Spectrum;
use crate::weights::WeightFunction;

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("csv write failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
    #[error("json write failed: {0}")]
    Json(#[from] serde_json::Error),
}

/// Column names of every row table, in serialization order.
pub const COLUMNS: [&str; 14] = [
    "n",
    "p",
    "index",
    "alpha",
    "trial",
    "energy",
    "predicted_t3",
    "predicted_cor",
    "ratio_t3",
    "ks",
    "m2",
    "m4",
    "wall_ms",
    "status",
];

/// Column names of the sweep summary table.
pub const SUMMARY_COLUMNS: [&str; 10] = [
    "n",
    "p",
    "index",
    "alpha",
    "trials",
    "failed",
    "mean_ratio_t3",
    "std_ratio_t3",
    "mean_ks",
    "std_ks",
];

/// 17 significant digits; enough to reproduce the double bit for bit.
#[must_use]
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_real(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

/// One table row. See the module docs for which fields each row kind fills.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRow {
    pub n: u64,
    pub p: Option<f64>,
    pub index: String,
    pub alpha: Option<f64>,
    pub trial: Option<u64>,
    pub energy: Option<f64>,
    pub predicted_t3: Option<f64>,
    pub predicted_cor: Option<f64>,
    pub ratio_t3: Option<f64>,
    pub ks: Option<f64>,
    pub m2: Option<f64>,
    pub m4: Option<f64>,
    pub wall_ms: Option<f64>,
    pub status: String,
}

impl OutputRow {
    /// Flattens a trial record; moments of orders other than 2 and 4 do not
    /// appear in row form.
    #[must_use]
    pub fn from_record(rec: &ExperimentRecord) -> Self {
        Self {
            n: rec.n as u64,
            p: Some(rec.p),
            index: rec.index_id.to_owned(),
            alpha: rec.alpha,
            trial: Some(rec.trial),
            energy: rec.energy,
            predicted_t3: rec.predicted_t3,
            predicted_cor: rec.predicted_cor,
            ratio_t3: rec.ratio_t3,
            ks: rec.ks,
            m2: rec.moments.get(&2).copied(),
            m4: rec.moments.get(&4).copied(),
            wall_ms: Some(rec.wall_ms),
            status: rec.status.text(),
        }
    }

    /// A prediction-only row: the general value in `predicted_t3`, the
    /// closed form in `predicted_cor`, status `predicted`.
    #[must_use]
    pub fn from_predictions(general: &Prediction, closed: &Prediction) -> Self {
        Self {
            n: general.n as u64,
            p: Some(general.p),
            index: general.index_id.to_owned(),
            alpha: general.alpha,
            trial: None,
            energy: None,
            predicted_t3: Some(general.predicted_energy),
            predicted_cor: Some(closed.predicted_energy),
            ratio_t3: None,
            ks: None,
            m2: None,
            m4: None,
            wall_ms: None,
            status: "predicted".to_owned(),
        }
    }

    /// An argmax row: for an interior maximum, `p` holds the maximizer and
    /// `predicted_cor` the closed-form value there; monotone outcomes leave
    /// both empty and report the direction in `status`.
    #[must_use]
    pub fn from_argmax(spec: &WeightFunction, n: usize, outcome: &ArgmaxOutcome) -> Self {
        let (p, value, status) = match outcome {
            ArgmaxOutcome::Interior { p_star, value } => {
                (Some(*p_star), Some(*value), "argmax_interior")
            }
            ArgmaxOutcome::DecreasingInP => (None, None, "decreasing_in_p"),
            ArgmaxOutcome::IncreasingInP => (None, None, "increasing_in_p"),
        };
        Self {
            n: n as u64,
            p,
            index: spec.id().to_owned(),
            alpha: spec.alpha(),
            trial: None,
            energy: None,
            predicted_t3: None,
            predicted_cor: value,
            ratio_t3: None,
            ks: None,
            m2: None,
            m4: None,
            wall_ms: None,
            status: status.to_owned(),
        }
    }

    fn csv_fields(&self) -> [String; 14] {
        [
            self.n.to_string(),
            opt_real(self.p),
            self.index.clone(),
            opt_real(self.alpha),
            self.trial.map(|t| t.to_string()).unwrap_or_default(),
            opt_real(self.energy),
            opt_real(self.predicted_t3),
            opt_real(self.predicted_cor),
            opt_real(self.ratio_t3),
            opt_real(self.ks),
            opt_real(self.m2),
            opt_real(self.m4),
            opt_real(self.wall_ms),
            self.status.clone(),
        ]
    }
}

/// One sweep summary row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub n: u64,
    pub p: f64,
    pub index: String,
    pub alpha: Option<f64>,
    pub trials: u64,
    pub failed: u64,
    pub mean_ratio_t3: Option<f64>,
    pub std_ratio_t3: Option<f64>,
    pub mean_ks: Option<f64>,
    pub std_ks: Option<f64>,
}

impl SummaryRow {
    #[must_use]
    pub fn from_summary(s: &CellSummary) -> Self {
        Self {
            n: s.n as u64,
            p: s.p,
            index: s.index_id.to_owned(),
            alpha: s.alpha,
            trials: s.trials,
            failed: s.failed,
            mean_ratio_t3: s.mean_ratio_t3,
            std_ratio_t3: s.std_ratio_t3,
            mean_ks: s.mean_ks,
            std_ks: s.std_ks,
        }
    }

    fn csv_fields(&self) -> [String; 10] {
        [
            self.n.to_string(),
            format_real(self.p),
            self.index.clone(),
            opt_real(self.alpha),
            self.trials.to_string(),
            self.failed.to_string(),
            opt_real(self.mean_ratio_t3),
            opt_real(self.std_ratio_t3),
            opt_real(self.mean_ks),
            opt_real(self.std_ks),
        ]
    }
}

/// Writes a header plus one CSV line per row.
pub fn write_csv<W: Write>(mut w: W, rows: &[OutputRow]) -> Result<(), OutputError> {
    let mut wtr = csv::Writer::from_writer(&mut w);
    wtr.write_record(COLUMNS)?;
    for row in rows {
        wtr.write_record(row.csv_fields())?;
    }
    wtr.flush()?;
    Ok(())
}

/// Writes the record table, a blank line, then the summary table.
pub fn write_sweep_csv<W: Write>(mut w: W, out: &SweepOutput) -> Result<(), OutputError> {
    {
        let mut wtr = csv::Writer::from_writer(&mut w);
        wtr.write_record(COLUMNS)?;
        for rec in &out.records {
            wtr.write_record(OutputRow::from_record(rec).csv_fields())?;
        }
        wtr.flush()?;
    }
    writeln!(w)?;
    {
        let mut wtr = csv::Writer::from_writer(&mut w);
        wtr.write_record(SUMMARY_COLUMNS)?;
        for s in &out.summaries {
            wtr.write_record(SummaryRow::from_summary(s).csv_fields())?;
        }
        wtr.flush()?;
    }
    Ok(())
}

/// JSON formatter that writes every double with 17 significant digits, the
/// same representation the CSV path uses.
struct RealFormatter;

impl serde_json::ser::Formatter for RealFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, OutputError> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, RealFormatter);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serde_json emits utf-8"))
}

/// One JSON object per row, newline separated.
pub fn write_json<W: Write>(mut w: W, rows: &[OutputRow]) -> Result<(), OutputError> {
    for row in rows {
        writeln!(w, "{}", to_json(row)?)?;
    }
    Ok(())
}

/// A single JSON document `{"records": [...], "summary": [...]}`.
pub fn write_sweep_json<W: Write>(mut w: W, out: &SweepOutput) -> Result<(), OutputError> {
    #[derive(Serialize)]
    struct Doc {
        records: Vec<OutputRow>,
        summary: Vec<SummaryRow>,
    }
    let doc = Doc {
        records: out.records.iter().map(OutputRow::from_record).collect(),
        summary: out.summaries.iter().map(SummaryRow::from_summary).collect(),
    };
    writeln!(w, "{}", to_json(&doc)?)?;
    Ok(())
}

/// Sorted eigenvalues scaled by `scale`, one real per line.
pub fn write_esd<W: Write>(mut w: W, s: &Spectrum, scale: f64) -> Result<(), OutputError> {
    for &x in s.eigenvalues() {
        writeln!(w, "{}", format_real(x * scale))?;
    }
    Ok(())
}
