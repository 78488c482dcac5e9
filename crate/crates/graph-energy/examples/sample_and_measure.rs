// Sample one random graph, measure its energy, and compare against the
// closed-form prediction. The quickest tour of the crate.

use graph_energy::graph::{Graph, Seed};
use graph_energy::predict::{predict_energy, PredictionSource};
use graph_energy::spectral::{eigenvalues, energy};
use graph_energy::weights::{build_weighted_adjacency, WeightFunction};

fn main() {
    let n = 1000;
    let p = 0.5;
    let spec = WeightFunction::Unit;

    let g = Graph::sample_gnp(n, p, Seed::new(42, 0)).unwrap();
    println!("sampled G({n}, {p}): {} edges", g.edge_count());

    let a = build_weighted_adjacency(&g, &spec).unwrap();
    let e = energy(&a).unwrap();
    let predicted = predict_energy(&spec, n, p, PredictionSource::General)
        .unwrap()
        .predicted_energy;

    println!("measured energy   {e:.3}");
    println!("predicted energy  {predicted:.3}");
    println!("ratio             {:.4}", e / predicted);

    let s = eigenvalues(&a).unwrap();
    let eig = s.eigenvalues();
    println!(
        "spectrum range    [{:.3}, {:.3}], top eigenvalue near np = {}",
        eig[0],
        eig[n - 1],
        n as f64 * p
    );
}
