//! Spectral energy of degree-weighted random graphs.
//!
//! The crate samples Erdős–Rényi graphs, assigns each edge a weight from a
//! catalog of degree-based rules (Randić, Zagreb, ABC, and friends), solves
//! the dense symmetric eigenproblem, and compares the measured energy (the
//! sum of absolute eigenvalues) and spectral distribution against
//! closed-form predictions and the semicircle law.
//!
//! Layering, bottom up:
//!
//! * [`quad`]: adaptive Simpson quadrature, the numeric oracle.
//! * [`semicircle`]: the limiting law (density, CDF, moments) and the
//!   Kolmogorov-Smirnov distance to it.
//! * [`graph`]: seeded reproducible graph sampling and edge-list I/O.
//! * [`weights`]: the weight-rule catalog and weighted adjacency assembly.
//! * [`spectral`]: eigensolver, energy, trace moments, walk-sum oracle.
//! * [`predict`]: closed-form energy predictions and argmax over density.
//! * [`experiments`]: Monte Carlo trials, sweeps, aggregation.
//! * [`output`], [`cli`]: serialization and the command-line front end.
//!
//! The `examples/` directory has one runnable program per capability; the
//! thin `graph-energy` binary exposes the same flows as subcommands.

pub mod cli;
pub mod experiments;
pub mod graph;
pub mod output;
pub mod predict;
pub mod quad;
pub mod semicircle;
pub mod spectral;
pub mod weights;

pub use experiments::{run_sweep, run_trial, ExperimentConfig, ExperimentRecord, TrialOptions};
pub use graph::{Graph, Seed};
pub use predict::{argmax_p, predict_energy, Prediction, PredictionSource};
pub use semicircle::SemicircleLaw;
pub use spectral::{eigenvalues, SymmetricMatrix};
pub use weights::{build_weighted_adjacency, WeightFunction};
