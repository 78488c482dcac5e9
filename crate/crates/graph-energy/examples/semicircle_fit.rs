// Center and scale a weighted adjacency matrix, then measure how close
// its empirical spectral distribution sits to the semicircle law.

use graph_energy::graph::{Graph, Seed};
use graph_energy::semicircle::{ks_distance, SemicircleLaw};
use graph_energy::spectral::eigenvalues;
use graph_energy::weights::{build_weighted_adjacency, center_scale, WeightFunction};

fn main() {
    let n = 1500;
    let p = 0.5;
    let spec = WeightFunction::Randic;

    let g = Graph::sample_gnp(n, p, Seed::new(7, 0)).unwrap();
    let a = build_weighted_adjacency(&g, &spec).unwrap();
    let fc = spec.center_value(n, p).unwrap();
    let centered = center_scale(&a, fc, p).unwrap();
    let s = eigenvalues(&centered).unwrap();

    let law = SemicircleLaw::from_edge_density(p).unwrap();
    let scale = 1.0 / (n as f64).sqrt();

    println!("{} weights on G({n}, {p}), spectrum scaled by 1/sqrt(n)", spec.id());
    println!("semicircle sigma = {:.4}, support radius = {:.4}", law.sigma(), law.support_radius());
    println!();
    println!("{:>8} {:>12} {:>12}", "x", "esd", "law cdf");
    for i in -4..=4 {
        let x = i as f64 * 0.25;
        println!("{:>8.2} {:>12.5} {:>12.5}", x, s.esd(x, scale), law.cdf(x));
    }
    println!();
    println!("Kolmogorov-Smirnov distance: {:.5}", ks_distance(&s, scale, &law));
}
