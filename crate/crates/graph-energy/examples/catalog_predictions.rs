// Print the full weight catalog with growth orders and predicted
// energies at a fixed size and density.

use graph_energy::predict::{predict_energy, PredictionSource};
use graph_energy::weights::WeightFunction;

fn main() {
    let n = 2000;
    let p = 0.5;
    println!("predicted energies at n = {n}, p = {p}");
    println!("{:<16} {:>10} {:>8} {:>16}", "index", "exponent", "log", "predicted");
    for spec in WeightFunction::catalog() {
        let pred = predict_energy(&spec, n, p, PredictionSource::ClosedForm).unwrap();
        let log = if pred.log_factor { "ln n" } else { "" };
        println!(
            "{:<16} {:>10.2} {:>8} {:>16.4e}",
            spec.id(),
            pred.leading_exponent,
            log,
            pred.predicted_energy
        );
    }
}
