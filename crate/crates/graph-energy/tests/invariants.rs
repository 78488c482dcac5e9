//! Property tests for structural invariants: weight symmetry, spectral
//! distribution shape, energy invariances, sampling bookkeeping, and
//! numeric round trips.

use graph_energy::graph::{Graph, Seed};
use graph_energy::output::format_real;
use graph_energy::spectral::{energy, eigenvalues, Spectrum, SymmetricMatrix};
use graph_energy::weights::WeightFunction;
use proptest::prelude::*;

fn catalog_index() -> impl Strategy<Value = WeightFunction> {
    let n = WeightFunction::catalog().len();
    (0..n).prop_map(|i| WeightFunction::catalog().swap_remove(i))
}

/// Symmetric matrix from a generated lower triangle, entries in [-3, 3].
fn symmetric_matrix(max_n: usize) -> impl Strategy<Value = SymmetricMatrix> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(-3.0f64..3.0, n * (n + 1) / 2),
            )
        })
        .prop_map(|(n, tri)| {
            let mut m = SymmetricMatrix::zeros(n);
            let mut it = tri.into_iter();
            for i in 0..n {
                for j in 0..=i {
                    m.set(i, j, it.next().unwrap());
                }
            }
            m
        })
}

proptest! {
    /// Edge weights do not depend on endpoint order.
    #[test]
    fn weight_evaluation_is_symmetric(
        spec in catalog_index(),
        di in 1u32..=50,
        dj in 1u32..=50,
        n in 3usize..=200,
    ) {
        prop_assume!(spec.id() != "azi" || di + dj > 2);
        let a = spec.eval(di, dj, n).unwrap();
        let b = spec.eval(dj, di, n).unwrap();
        prop_assert_eq!(a.to_bits(), b.to_bits());
    }

    /// The empirical spectral distribution is a proper CDF: within [0, 1],
    /// nondecreasing, 0 left of the spectrum and 1 right of it.
    #[test]
    fn esd_is_a_cdf(
        mut eig in proptest::collection::vec(-100.0f64..100.0, 1..60),
        queries in proptest::collection::vec(-150.0f64..150.0, 1..40),
        scale in 0.01f64..10.0,
    ) {
        eig.sort_unstable_by(f64::total_cmp);
        let lo = eig[0] * scale;
        let hi = eig[eig.len() - 1] * scale;
        let s = Spectrum::from_sorted(eig);
        let mut q = queries;
        q.sort_unstable_by(f64::total_cmp);
        let mut prev = 0.0;
        for x in q {
            let v = s.esd(x, scale);
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert!(v >= prev, "esd decreased: {} after {}", v, prev);
            prev = v;
        }
        prop_assert_eq!(s.esd(lo - 1.0, scale), 0.0);
        prop_assert_eq!(s.esd(hi + 1.0, scale), 1.0);
    }

    /// Energy is absolutely homogeneous: E(cA) = |c| E(A).
    #[test]
    fn energy_is_absolutely_homogeneous(
        m in symmetric_matrix(25),
        c in -5.0f64..5.0,
    ) {
        let base = energy(&m).unwrap();
        let scaled = energy(&m.scaled(c)).unwrap();
        let want = c.abs() * base;
        prop_assert!(
            (scaled - want).abs() <= 1e-9 * want.max(1.0),
            "E(cA) = {} but |c| E(A) = {}", scaled, want
        );
    }

    /// Energy does not depend on vertex labels: conjugating by a
    /// permutation leaves the spectrum as a multiset unchanged.
    #[test]
    fn energy_is_permutation_invariant(
        m in symmetric_matrix(20),
        seed in any::<u64>(),
    ) {
        let n = m.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the generated seed.
        let mut state = seed.max(1);
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state as usize) % (i + 1));
        }
        let mut pm = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                pm.set(perm[i], perm[j], m.get(i, j));
            }
        }
        let a = eigenvalues(&m).unwrap();
        let b = eigenvalues(&pm).unwrap();
        prop_assert!(
            (a.energy() - b.energy()).abs() <= 1e-9 * a.energy().max(1.0)
        );
        for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
            prop_assert!((x - y).abs() <= 1e-8, "spectra differ: {} vs {}", x, y);
        }
    }

    /// Sampled graphs keep their bookkeeping consistent: degree sums equal
    /// twice the edge count, no vertex exceeds n - 1, and the edge count
    /// respects the simple-graph maximum.
    #[test]
    fn sampled_graphs_are_simple_and_consistent(
        n in 1usize..=60,
        p in 0.0f64..=1.0,
        master in any::<u64>(),
    ) {
        let g = Graph::sample_gnp(n, p, Seed::new(master, 0)).unwrap();
        let m = g.edge_count();
        prop_assert!(m <= n * (n - 1) / 2);
        let degree_sum: u64 = g.degrees().iter().map(|&d| u64::from(d)).sum();
        prop_assert_eq!(degree_sum, 2 * m as u64);
        prop_assert!(g.degrees().iter().all(|&d| (d as usize) < n.max(1)));
        for &(u, v) in g.edges() {
            prop_assert!(u < v, "edges stored as ordered pairs without loops");
        }
    }

    /// Serialized reals parse back bit for bit.
    #[test]
    fn formatted_reals_round_trip_bitwise(x in any::<f64>()) {
        prop_assume!(x.is_finite());
        let text = format_real(x);
        let back: f64 = text.parse().unwrap();
        prop_assert_eq!(back.to_bits(), x.to_bits());
    }
}
