// Draw an ASCII histogram of the centered scaled spectrum with the
// semicircle density overlaid as a target column.

use graph_energy::graph::{Graph, Seed};
use graph_energy::semicircle::SemicircleLaw;
use graph_energy::spectral::eigenvalues;
use graph_energy::weights::{build_weighted_adjacency, center_scale, WeightFunction};

fn main() {
    let n = 1200;
    let p = 0.3;
    let spec = WeightFunction::Harmonic;
    let bins = 31;

    let g = Graph::sample_gnp(n, p, Seed::new(2, 0)).unwrap();
    let a = build_weighted_adjacency(&g, &spec).unwrap();
    let fc = spec.center_value(n, p).unwrap();
    let s = eigenvalues(&center_scale(&a, fc, p).unwrap()).unwrap();
    let scale = 1.0 / (n as f64).sqrt();

    let law = SemicircleLaw::from_edge_density(p).unwrap();
    let r = law.support_radius();
    let lo = -1.15 * r;
    let width = 2.3 * r / bins as f64;

    let mut counts = vec![0usize; bins];
    for &l in s.eigenvalues() {
        let x = l * scale;
        let b = ((x - lo) / width).floor() as isize;
        if (0..bins as isize).contains(&b) {
            counts[b as usize] += 1;
        }
    }

    let peak = law.density(0.0);
    println!("{} weights, n = {n}, p = {p}; '#' empirical, '|' semicircle density", spec.id());
    for (b, &c) in counts.iter().enumerate() {
        let mid = lo + (b as f64 + 0.5) * width;
        let empirical = c as f64 / (n as f64 * width);
        let bar = (empirical / peak * 40.0).round() as usize;
        let target = (law.density(mid) / peak * 40.0).round() as usize;
        let mut row: Vec<char> = vec![' '; 44];
        for cell in row.iter_mut().take(bar.min(44)) {
            *cell = '#';
        }
        if target < 44 {
            row[target] = '|';
        }
        let line: String = row.into_iter().collect();
        println!("{mid:>6.2} {line}");
    }
}
