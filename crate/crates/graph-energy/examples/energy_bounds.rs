// Two exact spectral identities in action: the closed-walk moment oracle
// and the triangle inequality for matrix energy.

use graph_energy::graph::{Graph, Seed};
use graph_energy::spectral::{
    build_random_symmetric, ky_fan_check, trace_moment, walk_moment,
};
use graph_energy::weights::{build_weighted_adjacency, center_scale, WeightFunction};

fn main() {
    // Moments three ways on a small weighted graph: eigenvalues vs a
    // direct sum over closed walks.
    let p = 0.4;
    let spec = WeightFunction::ZagrebM1;
    let g = Graph::sample_gnp(8, p, Seed::new(5, 0)).unwrap();
    let fc = spec.center_value(8, p).unwrap();
    let a = build_weighted_adjacency(&g, &spec).unwrap();
    let centered = center_scale(&a, fc, p).unwrap();

    println!("closed-walk sums vs eigenvalue moments ({} weights, n = 8)", spec.id());
    println!("{:>4} {:>16} {:>16}", "k", "walks", "eigenvalues");
    for k in 1..=6 {
        let w = walk_moment(&g, &spec, fc, p, k).unwrap();
        let t = trace_moment(&centered, k).unwrap();
        println!("{k:>4} {w:>16.10} {t:>16.10}");
    }

    // E(X + Y) <= E(X) + E(Y) on random symmetric matrices.
    println!();
    println!("energy triangle inequality, 5 random pairs at n = 40");
    for t in 0..5 {
        let x = build_random_symmetric(40, Seed::new(100, 2 * t));
        let y = build_random_symmetric(40, Seed::new(100, 2 * t + 1));
        let c = ky_fan_check(&x, &y).unwrap();
        println!(
            "  E(X+Y) = {:>9.4}  <=  E(X) + E(Y) = {:>9.4}   {}",
            c.lhs,
            c.rhs,
            if c.holds { "ok" } else { "VIOLATED" }
        );
    }
}
