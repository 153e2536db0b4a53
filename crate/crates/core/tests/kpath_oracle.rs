mod common;

use ldc_core::kpath::{
    colorcoding_kpath, colorful_trial, extract_path_witness, subsetdp_count_states, subsetdp_kpath,
    ColorCoding, KPathQuery, KPathSolver, Repetitions, SubsetDp,
};
use ldc_core::DirectedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn subset_dp_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut cached = SubsetDp::default();
    for _ in 0..60 {
        let n = rng.gen_range(1..=10);
        let density = rng.gen_range(0.1..0.5);
        let g = common::random_graph(n, density, &mut rng);
        let table = common::all_path_lengths(&g);
        for from in 0..n {
            for to in 0..n {
                for len in 1..=n + 1 {
                    let q = KPathQuery::new(from, to, len);
                    let expected = len <= n && table[from][to][len];
                    assert_eq!(subsetdp_kpath(&g, &q, 25).unwrap(), expected, "{q:?}");
                    assert_eq!(cached.decide(&g, &q).unwrap(), expected, "{q:?}");
                }
            }
        }
    }
}

#[test]
fn state_count_matches_enumeration() {
    let k4 = DirectedGraph::complete(4);
    let q = KPathQuery::new(0, 3, 4);
    assert_eq!(
        subsetdp_count_states(&k4, &q, 25).unwrap(),
        common::path_vertex_sets(&k4, 0, 3, 4)
    );

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let g = common::random_graph(7, 0.4, &mut rng);
        for len in 1..=7 {
            let q = KPathQuery::new(0, 6, len);
            assert_eq!(
                subsetdp_count_states(&g, &q, 25).unwrap(),
                common::path_vertex_sets(&g, 0, 6, len),
                "{q:?}"
            );
        }
    }
}

#[test]
fn color_coding_never_errs_on_no_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let n = rng.gen_range(2..=9);
        let g = common::random_graph(n, 0.3, &mut rng);
        let table = common::all_path_lengths(&g);
        for from in 0..n {
            for to in 0..n {
                for len in 2..=n {
                    if !table[from][to][len] {
                        let q = KPathQuery::new(from, to, len);
                        assert!(!colorcoding_kpath(&g, &q, 5, &mut rng).unwrap(), "{q:?}");
                    }
                }
            }
        }
    }
    // DAG back-edges are never realizable
    for _ in 0..20 {
        let g = common::random_dag(8, 0.5, &mut rng);
        for len in 2..=8 {
            assert!(!colorcoding_kpath(&g, &KPathQuery::new(7, 0, len), 20, &mut rng).unwrap());
        }
    }
}

#[test]
fn single_coloring_success_rate_on_path() {
    // all 27 colorings of three vertices; exactly the 6 injective ones are colorful
    let colorful = (0..27u32)
        .filter(|c| {
            let (a, b, d) = (c % 3, c / 3 % 3, c / 9);
            a != b && b != d && a != d
        })
        .count();
    assert_eq!(colorful, 6);
    let p = colorful as f64 / 27.0;

    let g = DirectedGraph::path(3);
    let q = KPathQuery::new(0, 2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let trials = 20_000;
    let hits = (0..trials)
        .filter(|_| colorful_trial(&g, &q, &mut rng).unwrap())
        .count();
    let freq = hits as f64 / trials as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    assert!((freq - p).abs() <= 3.0 * sigma, "freq {freq} vs {p}");
}

#[test]
fn planted_four_path_detection_rate() {
    let reps = Repetitions::Scaled(3.0).for_length(4);
    assert_eq!(reps, (3.0 * 4f64.exp()).ceil() as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut detected = 0;
    for _ in 0..200 {
        let mut order: Vec<usize> = (0..12).collect();
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
        let mut edges: Vec<(usize, usize)> = order[..4].windows(2).map(|w| (w[0], w[1])).collect();
        for u in 0..12 {
            for v in 0..12 {
                if u != v && rng.gen_bool(0.05) {
                    edges.push((u, v));
                }
            }
        }
        let g = DirectedGraph::from_edges(12, edges).unwrap().0;
        let q = KPathQuery::new(order[0], order[3], 4);
        if colorcoding_kpath(&g, &q, reps, &mut rng).unwrap() {
            detected += 1;
        }
    }
    let rate = detected as f64 / 200.0;
    assert!(rate >= 0.94, "detection rate {rate}");
}

#[test]
fn extracted_witnesses_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(3..=10);
        let g = common::random_graph(n, rng.gen_range(0.15..0.5), &mut rng);
        let table = common::all_path_lengths(&g);
        let (from, to, len) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(2..=n),
        );
        if !table[from][to][len] {
            continue;
        }
        checked += 1;
        let q = KPathQuery::new(from, to, len);
        let mut dp = SubsetDp::default();
        let w = extract_path_witness(&mut dp, &g, &q, 3)
            .unwrap()
            .expect("yes-instance");
        assert!(w.check_query(&g, from, to, len).is_ok());
        let mut cc = ColorCoding::new(Repetitions::Scaled(3.0), rng.gen());
        if let Some(w) = extract_path_witness(&mut cc, &g, &q, 3).unwrap() {
            assert!(w.check_query(&g, from, to, len).is_ok());
        }
    }
}

#[test]
fn color_coding_is_reproducible_per_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = common::random_graph(10, 0.3, &mut rng);
    let answers = |seed| {
        let mut cc = ColorCoding::new(Repetitions::Fixed(2), seed);
        (2..=8)
            .flat_map(|len| (0..10).map(move |to| KPathQuery::new(0, to, len)))
            .map(|q| cc.decide(&g, &q).unwrap())
            .collect::<Vec<_>>()
    };
    assert_eq!(answers(5), answers(5));
}
