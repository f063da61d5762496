mod common;

use common::{all_gallai_colorings, brute_min_partition, is_gallai_partition, random_gallai};
use gallai_ramsey::construct::ColorRouting;
use gallai_ramsey::{
    blow_up, coarsen_to_minimal, find_gallai_partition, verify_partition, ColorRole, EdgeColoredCompleteGraph,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pentagon() -> EdgeColoredCompleteGraph {
    EdgeColoredCompleteGraph::from_fn(5, 2, |i, j| if matches!(j - i, 1 | 4) { 1 } else { 2 }).unwrap()
}

#[test]
fn pentagon_has_no_coarser_partition() {
    assert_eq!(brute_min_partition(&pentagon()), Some(5));
    let p = find_gallai_partition(&pentagon()).unwrap();
    assert_eq!(coarsen_to_minimal(&pentagon(), &p).len(), 5);
}

#[test]
fn every_small_gallai_coloring_has_a_partition() {
    let mut count = 0;
    for n in 2..=7 {
        all_gallai_colorings(n, 3, &mut |g| {
            count += 1;
            let p = find_gallai_partition(g).unwrap_or_else(|e| panic!("{e}: {:?}", g.colors()));
            assert!(verify_partition(g, &p.parts).unwrap().valid);
            assert!(is_gallai_partition(g, &p.parts));
            if n <= 6 {
                let c = coarsen_to_minimal(g, &p);
                assert!(is_gallai_partition(g, &c.parts));
                assert!(c.len() >= brute_min_partition(g).unwrap());
            }
        });
    }
    assert!(count > 1000);
}

#[test]
fn random_nested_blow_ups() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(2..=200);
        let k = rng.gen_range(1..=6);
        let g = random_gallai(&mut rng, n, k);
        let p = find_gallai_partition(&g).unwrap();
        assert!(is_gallai_partition(&g, &p.parts));
        let c = coarsen_to_minimal(&g, &p);
        assert!(c.len() <= p.len() && is_gallai_partition(&g, &c.parts));
    }
}

#[test]
fn block_partition_of_a_blow_up_is_valid_and_coarsens() {
    // outer graph with a monochromatic cut {0,1} | {2,3}
    let outer = EdgeColoredCompleteGraph::from_fn(4, 2, |i, j| if (i < 2) == (j < 2) { 1 } else { 2 }).unwrap();
    let inner = EdgeColoredCompleteGraph::from_fn(2, 1, |_, _| 1).unwrap();
    let routing = ColorRouting::new(vec![2, 3], vec![ColorRole::LastT; 2]).unwrap();
    let g = blow_up(&outer, &inner, &routing).unwrap();
    let blocks: Vec<Vec<usize>> = (0..4).map(|b| vec![2 * b, 2 * b + 1]).collect();
    assert!(verify_partition(&g, &blocks).unwrap().valid);
    let p = gallai_ramsey::GallaiPartition::from_parts(&g, blocks).unwrap();
    let c = coarsen_to_minimal(&g, &p);
    assert!(c.len() < 4);
    assert_eq!(brute_min_partition(&g), Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_graph_reproduces_cross_edges(seed in any::<u64>(), n in 2usize..60, k in 1u8..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_gallai(&mut rng, n, k);
        let p = find_gallai_partition(&g).unwrap();
        let mut owner = vec![0; n];
        for (i, part) in p.parts.iter().enumerate() {
            for &v in part {
                owner[v] = i;
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if owner[x] != owner[y] {
                    prop_assert_eq!(p.reduced.color(owner[x], owner[y]), g.color(x, y));
                }
            }
        }
        prop_assert!(p.cross_colors.len() <= 2);
    }
}
