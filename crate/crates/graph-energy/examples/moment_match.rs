// Scaled trace moments of the centered matrix against the Catalan-number
// moments of the semicircle law.

use graph_energy::graph::{Graph, Seed};
use graph_energy::semicircle::SemicircleLaw;
use graph_energy::spectral::eigenvalues;
use graph_energy::weights::{build_weighted_adjacency, center_scale, WeightFunction};

fn main() {
    let n = 1500;
    let p = 0.5;
    let spec = WeightFunction::Unit;

    let g = Graph::sample_gnp(n, p, Seed::new(11, 0)).unwrap();
    let a = build_weighted_adjacency(&g, &spec).unwrap();
    let fc = spec.center_value(n, p).unwrap();
    let s = eigenvalues(&center_scale(&a, fc, p).unwrap()).unwrap();
    let scale = 1.0 / (n as f64).sqrt();

    let law = SemicircleLaw::from_edge_density(p).unwrap();
    println!("moments of the scaled spectrum vs semicircle, n = {n}, p = {p}");
    println!("{:>4} {:>14} {:>14} {:>10}", "k", "measured", "catalan", "rel err");
    for half in 1..=4u32 {
        let k = 2 * half;
        let measured = s.scaled_moment(k, scale);
        let exact = law.even_moment(half);
        println!(
            "{k:>4} {measured:>14.6} {exact:>14.6} {:>10.2e}",
            (measured - exact).abs() / exact
        );
    }
    for k in [1u32, 3, 5] {
        println!("{k:>4} {:>14.6} {:>14.6}", s.scaled_moment(k, scale), 0.0);
    }
}
