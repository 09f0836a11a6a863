use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cvcluster::cluster::{apply_loss, canonical_cluster, physical_cluster, SqueezingParams};
use cvcluster::graph::{grid_graph, path_graph, WeightedGraph};
use cvcluster::measures::entropic_entanglement;
use cvcluster::qubit::QubitGraph;
use cvcluster::width::*;
use cvcluster::Bipartition;

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((a, b, rng.gen_range(0.3..5.0)));
            }
        }
    }
    WeightedGraph::new(n, edges).unwrap()
}

fn table_cut(n: usize, values: Vec<f64>) -> FnCut<impl Fn(&Bipartition) -> cvcluster::Result<f64> + Sync> {
    FnCut::new(n, false, move |b: &Bipartition| Ok(values[b.mask().unwrap() as usize]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_brute_force_on_arbitrary_tables(n in 2usize..=6, seed in any::<u64>(), levels in 1u32..6) {
        // Few distinct levels force many ties.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = (1usize << n) - 1;
        let mut values = vec![0.0; full + 1];
        for m in 1..full {
            values[m] = rng.gen_range(0..levels) as f64;
        }
        // Symmetrize: a decomposition edge carries one value whichever side is named.
        for m in 1..full {
            let v = values[m].max(values[full ^ m]);
            values[m] = v;
            values[full ^ m] = v;
        }
        let cut = table_cut(n, values);
        let dp = exact_width(&cut).unwrap();
        let bf = brute_force_width(&cut).unwrap();
        prop_assert_eq!(dp.width, bf.width);
        prop_assert_eq!(dp.witness.width(&cut).unwrap(), dp.width);
    }
}

#[test]
fn dp_matches_brute_force_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..30 {
        let n = 4 + trial % 3;
        let g = random_graph(&mut rng, n);
        let b = rng.gen_range(0.3..5.0);
        let eta = rng.gen_range(0.5..1.0);

        let ee = EntropicCut::new(canonical_cluster(&g)).unwrap();
        let (dp, bf) = (exact_width(&ee).unwrap(), brute_force_width(&ee).unwrap());
        assert_eq!(dp.width, bf.width, "trial {trial}, EE");
        assert!((dp.witness.width(&ee).unwrap() - dp.width).abs() <= 1e-10);

        let lossy = apply_loss(
            &physical_cluster(&g.with_strength(1.0).unwrap(), SqueezingParams::from_b(b).unwrap()).unwrap(),
            eta,
        )
        .unwrap();
        let ln = LogNegativityCut::new(lossy);
        let (dp, bf) = (exact_width(&ln).unwrap(), brute_force_width(&ln).unwrap());
        assert!((dp.width - bf.width).abs() <= 1e-12, "trial {trial}, LN");
        assert!((dp.witness.width(&ln).unwrap() - dp.width).abs() <= 1e-10);
    }
}

#[test]
fn exact_width_bounds_every_decomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_graph(&mut rng, 7);
    let cut = EntropicCut::new(canonical_cluster(&g)).unwrap();
    let best = exact_width(&cut).unwrap().width;
    for tree in enumerate_decompositions(7).unwrap() {
        assert!(best <= tree.width(&cut).unwrap() + 1e-10);
    }
}

#[test]
fn width_is_at_least_every_singleton_cut() {
    let g = grid_graph(3, 1.5).unwrap();
    let st = canonical_cluster(&g);
    let cut = EntropicCut::new(st.clone()).unwrap();
    let w = diagonal_decomposition(3).unwrap().width(&cut).unwrap();
    for v in 0..9 {
        let single = entropic_entanglement(&st, &Bipartition::new(9, [v]).unwrap()).unwrap();
        assert!(w >= single);
    }
}

#[test]
fn three_mode_wire_has_one_decomposition() {
    for b in [0.4, 1.0, 3.0] {
        let st = canonical_cluster(&path_graph(3, b).unwrap());
        let cut = EntropicCut::new(st.clone()).unwrap();
        let r = exact_width(&cut).unwrap();
        let centre = entropic_entanglement(&st, &Bipartition::new(3, [1]).unwrap()).unwrap();
        assert_eq!(r.width, cut.evaluate(&Bipartition::new(3, [1]).unwrap()).unwrap());
        assert!((r.width - centre).abs() < 1e-12);
        assert_eq!(enumerate_decompositions(3).unwrap().len(), 1);
    }
}

#[test]
fn qubit_rankwidths() {
    for n in 2..=8 {
        let cut = QubitCut::new(QubitGraph::from_graph(&path_graph(n, 1.0).unwrap()));
        assert_eq!(exact_width(&cut).unwrap().width, 1.0, "path {n}");
    }
    for l in [2, 3] {
        let cut = QubitCut::new(QubitGraph::from_graph(&grid_graph(l, 1.0).unwrap()));
        assert_eq!(exact_width(&cut).unwrap().width, (l - 1) as f64, "grid {l}");
    }
    let cut = QubitCut::new(QubitGraph::from_graph(&grid_graph(3, 1.0).unwrap()));
    assert_eq!(diagonal_decomposition(3).unwrap().width(&cut).unwrap(), 2.0);
    assert_eq!(rectangular_decomposition(3).unwrap().width(&cut).unwrap(), 3.0);
}

#[test]
fn diagonal_is_optimal_for_strongly_squeezed_3x3_grid() {
    let cut = EntropicCut::new(canonical_cluster(&grid_graph(3, 8.0).unwrap())).unwrap();
    let exact = exact_width(&cut).unwrap().width;
    let (diag, argmax) = diagonal_decomposition(3).unwrap().width_with_argmax(&cut).unwrap();
    assert!((exact - diag).abs() <= 1e-6);
    // The maximizing diagonal-decomposition cut isolates the central anti-diagonal.
    assert_eq!(argmax.complement().side_a(), vec![2, 4, 6]);
}

#[test]
fn named_decomposition_widths_ignore_within_block_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for l in [3, 4, 5] {
        for b in [0.5, 2.0] {
            let cut = EntropicCut::new(canonical_cluster(&grid_graph(l, b).unwrap())).unwrap();
            for blocks in [diagonal_blocks(l), rectangular_blocks(l)] {
                let reference = string_decomposition(&blocks).unwrap().width(&cut).unwrap();
                for _ in 0..4 {
                    let mut shuffled = blocks.clone();
                    for block in &mut shuffled {
                        block.shuffle(&mut rng);
                    }
                    let w = string_decomposition(&shuffled).unwrap().width(&cut).unwrap();
                    assert!((w - reference).abs() <= 1e-9, "l = {l}, B = {b}");
                }
            }
        }
    }
}

#[test]
fn witness_is_a_valid_decomposition() {
    let cut = EntropicCut::new(canonical_cluster(&grid_graph(3, 1.0).unwrap())).unwrap();
    let r = exact_width(&cut).unwrap();
    assert_eq!(r.witness.n_modes(), 9);
    assert_eq!(r.witness.n_nodes(), 16);
    assert_eq!(r.witness.edge_bipartitions().len(), 15);
    assert_eq!(cut.evaluate(&r.maximizing_cut).unwrap(), r.width);
    assert_eq!(r.cut_evaluations, (1 << 8) - 1);
}
