// For each catalog index, find the edge density p that maximizes the
// predicted energy at fixed n, or report the boundary trend when the
// prediction is monotone in p.

use graph_energy::predict::{argmax_p, ArgmaxOutcome};
use graph_energy::weights::WeightFunction;

fn main() {
    let n = 10_000;
    println!("maximizing edge density of the predicted energy at n = {n}");
    println!("{:<16} {:>12} {:>16}", "index", "p*", "prediction");
    for spec in WeightFunction::catalog() {
        match argmax_p(&spec, n).unwrap() {
            ArgmaxOutcome::Interior { p_star, value } => {
                println!("{:<16} {:>12.6} {:>16.4e}", spec.id(), p_star, value);
            }
            ArgmaxOutcome::DecreasingInP => {
                println!("{:<16} {:>12} {:>16}", spec.id(), "-> 0+", "decreasing");
            }
            ArgmaxOutcome::IncreasingInP => {
                println!("{:<16} {:>12} {:>16}", spec.id(), "-> 1-", "increasing");
            }
        }
    }
}
