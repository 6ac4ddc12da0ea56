use dehn::coloring::{dehn_count_linear, factors_equivalent, structure_count, ColoringKind};
use dehn::goeritz::has_zero_row_sums;
use dehn::intlattice::{elementary_gcds, invariant_factors_from_gcds, DEFAULT_MINOR_BUDGET};
use dehn::planar::PlaneGraph;
use dehn::shading::Shade;
use dehn::{
    checkerboard, dehn_count_bruteforce, dehn_structure, goeritz_matrix, invariant_factors, kernel_count_mod,
    parse_diagram, realize, trace_regions, verify_realization, Diagram, IntMatrix, RealizationSpec,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c)
            .prop_map(move |v| IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..(3 * n).min(12) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            for k in 0..n {
                u[(i, k)] = -u[(i, k)].clone();
            }
        } else {
            let f = BigInt::from(rng.gen_range(-2i64..=2));
            for k in 0..n {
                let add = &f * &u[(j, k)];
                u[(i, k)] += add;
            }
        }
    }
    u
}

fn kernel_bruteforce(m: &IntMatrix, modulus: u64) -> u64 {
    let rows = m.rows();
    let total = modulus.pow(rows as u32);
    let mb = BigInt::from(modulus);
    (0..total)
        .filter(|&code| {
            let x: Vec<BigInt> = (0..rows).map(|i| BigInt::from(code / modulus.pow(i as u32) % modulus)).collect();
            (0..m.cols()).all(|j| {
                let s: BigInt = (0..rows).map(|i| &x[i] * &m[(i, j)]).sum();
                (s % &mb).is_zero()
            })
        })
        .count() as u64
}

fn graph(seed: u64, vertices: usize, chords: usize) -> PlaneGraph {
    PlaneGraph::random(&mut ChaCha8Rng::seed_from_u64(seed), vertices, chords, true)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factors_survive_unimodular_change(m in matrix(5, 9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = unimodular(&mut rng, m.rows());
        let q = unimodular(&mut rng, m.cols());
        let n = p.mul(&m).unwrap().mul(&q).unwrap();
        prop_assert_eq!(invariant_factors(&n), invariant_factors(&m));
    }

    #[test]
    fn factors_match_minor_gcds(m in matrix(4, 20)) {
        let deltas = elementary_gcds(&m, DEFAULT_MINOR_BUDGET).unwrap();
        prop_assert_eq!(invariant_factors_from_gcds(&deltas), invariant_factors(&m));
    }

    #[test]
    fn transpose_keeps_nonzero_factors(m in matrix(5, 9)) {
        let nz = |v: Vec<BigUint>| v.into_iter().filter(|f| !f.is_zero()).collect::<Vec<_>>();
        prop_assert_eq!(nz(invariant_factors(&m.transpose())), nz(invariant_factors(&m)));
    }

    #[test]
    fn kernel_count_matches_enumeration(m in matrix(4, 6), modulus in 2u64..=6) {
        prop_assert_eq!(
            kernel_count_mod(&m, &BigUint::from(modulus)),
            BigUint::from(kernel_bruteforce(&m, modulus))
        );
    }

    #[test]
    fn medial_goeritz_is_signed_laplacian(seed in any::<u64>(), v in 1usize..7, chords in 0usize..5) {
        let g = graph(seed, v, chords);
        let medial = g.medial();
        let rm = trace_regions(&medial.diagram).unwrap();
        let (a, b) = checkerboard(&rm).unwrap();
        let s = if a.shade(medial.vertex_region(&rm, 0)) == Shade::Unshaded { a } else { b };
        let order: Vec<usize> = (0..g.vertex_count()).map(|v| medial.vertex_region(&rm, v)).collect();
        let data = goeritz_matrix(&rm, &s).with_region_order(&order).unwrap();
        prop_assert_eq!(data.matrix, IntMatrix::from_rows(&g.signed_laplacian()).unwrap());
    }

    #[test]
    fn coloring_counts_follow_factors(seed in any::<u64>(), v in 1usize..5, chords in 0usize..3, m in 2u64..=5) {
        let d = graph(seed, v, chords).medial().diagram;
        let rm = trace_regions(&d).unwrap();
        let (a, b) = checkerboard(&rm).unwrap();
        let linear = dehn_count_linear(&rm, m).unwrap();
        for s in [a, b] {
            let predicted = structure_count(&dehn_structure(&rm, &s), &BigUint::from(m), ColoringKind::Dehn);
            prop_assert_eq!(&predicted, &linear);
            if rm.region_count() <= 9 {
                prop_assert_eq!(&dehn_count_bruteforce(&rm, m, 9).unwrap(), &predicted);
            }
        }
    }

    #[test]
    fn diagram_text_round_trips(seed in any::<u64>(), v in 1usize..6, chords in 0usize..4, circles in 0usize..3) {
        let d = graph(seed, v, chords).medial().diagram.split_union(&Diagram::circles(circles.max(1)).unwrap());
        let again = parse_diagram(&d.to_string()).unwrap();
        prop_assert_eq!(again, d);
    }

    #[test]
    fn factors_ignore_labels_and_order(seed in any::<u64>(), v in 1usize..6, chords in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
        let d = graph(seed, v, chords).medial().diagram;
        let mut labels: Vec<u64> = (1..=2 * d.max_label() + 2).collect();
        labels.shuffle(&mut rng);
        let mut order: Vec<usize> = (0..d.crossing_count()).collect();
        order.shuffle(&mut rng);
        let e = d.relabel(|l| labels[l as usize]).unwrap().permute_crossings(&order);
        let phi = |d: &Diagram| {
            let rm = trace_regions(d).unwrap();
            let (a, _) = checkerboard(&rm).unwrap();
            invariant_factors(&goeritz_matrix(&rm, &a).adjusted)
        };
        prop_assert!(factors_equivalent(&phi(&d), &phi(&e)));
    }

    #[test]
    fn realizations_are_faithful(phis in prop::collection::vec(0u32..=9, 0..=5)) {
        let spec = RealizationSpec::new(phis);
        prop_assert!(verify_realization(&spec));
        let r = realize(&spec);
        prop_assert_eq!(r.goeritz.beta_s, 1);
        prop_assert!(r.goeritz.adjusted.is_symmetric());
        prop_assert!(has_zero_row_sums(&r.goeritz.adjusted));
        let rm = trace_regions(&r.diagram).unwrap();
        prop_assert_eq!(r.goeritz.unshaded_regions.last().copied(), Some(rm.unbounded_region()));
    }
}
