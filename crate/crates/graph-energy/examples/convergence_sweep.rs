// Sweep over graph sizes and watch the measured-over-predicted energy
// ratio close in on 1 as n grows.

use graph_energy::experiments::{run_sweep, ExperimentConfig};
use graph_energy::weights::WeightFunction;

fn main() {
    let mut cfg = ExperimentConfig::new(
        vec![250, 500, 1000, 2000],
        vec![0.5],
        vec![WeightFunction::Unit, WeightFunction::Randic],
        4,
        20240915,
    );
    cfg.moment_orders = Vec::new();

    let out = run_sweep(&cfg).unwrap();
    println!("{:<8} {:<10} {:>14} {:>12}", "n", "index", "mean ratio", "std");
    for s in &out.summaries {
        println!(
            "{:<8} {:<10} {:>14.5} {:>12.5}",
            s.n,
            s.index_id,
            s.mean_ratio_t3.unwrap(),
            s.std_ratio_t3.unwrap()
        );
    }
    println!();
    println!(
        "{} trials total, {} failed",
        out.records.len(),
        out.summaries.iter().map(|s| s.failed).sum::<u64>()
    );
}
