mod common;

use std::collections::BTreeMap;

use common::{eonv_by_definition, random_hypergraph};
use hypercode::hypergraph::{
    block_row, circulant_hypergraph, complete_3partite, f_count, projective_geometry,
};
use hypercode::{Hypergraph, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mask_set(mask: u64) -> VertexSet {
    (0..64).filter(|i| (mask >> i) & 1 == 1).collect()
}

#[test]
fn row_sum_support_is_eonv() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(1..=20);
        let h = random_hypergraph(&mut rng, n, m);
        let s: u64 = loop {
            let s = rng.gen_range(1u64..1 << n);
            if s != 0 {
                break s;
            }
        };
        let set = mask_set(s);
        let x = h
            .incidence_matrix()
            .row_combination(set.as_slice())
            .unwrap();
        assert_eq!(x.support().collect::<Vec<_>>(), h.eonv(&set).unwrap());
    }
}

#[test]
fn edge_complement_splits_every_subset() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=8 {
        let h = random_hypergraph(&mut rng, n, 6);
        for j in 0..h.num_edges() {
            let e = VertexSet::new(h.edges()[j].iter().copied());
            let ebar = h.complement_edge(j).unwrap();
            assert_eq!(e.len() + ebar.len(), n);
            for s in 1u64..1 << n {
                let set = mask_set(s);
                let in_e = set.iter().filter(|&v| e.contains(v)).count();
                let in_ebar = set.iter().filter(|&v| ebar.contains(v)).count();
                assert_eq!(set.len(), in_e + in_ebar);
                if set.len() % 2 == 0 {
                    assert_eq!(in_e % 2, in_ebar % 2);
                } else {
                    assert_ne!(in_e % 2, in_ebar % 2);
                }
            }
        }
    }
}

fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    // spanning tree plus a few random extra edges
    let mut edges: Vec<Vec<usize>> = (1..n).map(|v| vec![rng.gen_range(0..v), v]).collect();
    for _ in 0..rng.gen_range(0..n) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push(vec![a, b]);
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

#[test]
fn nonempty_eonv_of_a_graph_is_an_edge_cut() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let n = rng.gen_range(2..=10);
        let g = random_connected_graph(&mut rng, n);
        assert!(g.is_connected());
        for _ in 0..20 {
            let s = rng.gen_range(1u64..1 << n);
            let set = mask_set(s);
            let cut = g.eonv(&set).unwrap();
            if cut.is_empty() || set.len() == n {
                continue;
            }
            // for a graph, eonv(S) is exactly the set of edges crossing S
            for (j, e) in g.edges().iter().enumerate() {
                let crossing = set.contains(e[0]) != set.contains(e[1]);
                assert_eq!(crossing, cut.contains(&j));
            }
            let rest: Vec<Vec<usize>> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(j, _)| !cut.contains(j))
                .map(|(_, e)| e.clone())
                .collect();
            assert!(!Hypergraph::new(n, rest).unwrap().is_connected());
        }
    }
}

#[test]
fn block_circulant_columns_come_in_complementary_copies() {
    for k in 1..=4 {
        for m in 1..=4 {
            let h = circulant_hypergraph(&block_row(k, m).unwrap()).unwrap();
            let n = 2 * k * m;
            let inc = h.incidence_matrix();
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for j in 0..n {
                *counts.entry(inc.column(j).to_string()).or_default() += 1;
                let comp = h.complement_edge(j).unwrap();
                assert_eq!(comp.as_slice(), h.edges()[(j + m) % n].as_slice());
                assert_eq!(inc.column((j + m) % n), inc.column(j).complement());
            }
            assert_eq!(counts.len(), 2 * m);
            assert!(counts.values().all(|&c| c == k));
        }
    }
}

#[test]
fn projective_lines_through_point_pairs() {
    for n in 3..=5u32 {
        let pg = projective_geometry(n).unwrap();
        let points = (1usize << n) - 1;
        assert_eq!(pg.num_edges(), points * ((1 << (n - 1)) - 1) / 3);
        assert!(pg.is_simple());
        assert_eq!(pg.uniformity(), Some(3));
        let mut pairs = vec![0usize; points * points];
        for e in pg.edges() {
            for a in 0..3 {
                for b in 0..3 {
                    if a != b {
                        pairs[e[a] * points + e[b]] += 1;
                    }
                }
            }
        }
        for a in 0..points {
            for b in 0..points {
                if a != b {
                    assert_eq!(pairs[a * points + b], 1, "points {a},{b} in PG({},2)", n - 1);
                }
            }
        }
    }
}

#[test]
fn f_count_matches_eonv_sizes() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4usize);
        let h = complete_3partite(n).unwrap();
        let s = rng.gen_range(1u64..1 << (3 * n));
        let part = |p: usize| (0..n).filter(|i| (s >> (p * n + i)) & 1 == 1).count() as i64;
        let expected = eonv_by_definition(&h, s) as u64;
        assert_eq!(f_count(n as u64, part(0), part(1), part(2)).unwrap(), expected);
    }
}

#[test]
fn tripartite_degrees_and_connectivity() {
    for n in 1..=4 {
        let h = complete_3partite(n).unwrap();
        assert!(h.is_connected());
        for u in 0..3 * n {
            assert_eq!(h.degree(u).unwrap(), n * n);
        }
    }
}

proptest! {
    #[test]
    fn hypergraph_text_round_trip(
        n in 1usize..10,
        raw in proptest::collection::vec(proptest::collection::btree_set(0usize..10, 1..5), 0..12),
    ) {
        let edges: Vec<Vec<usize>> = raw
            .into_iter()
            .map(|e| e.into_iter().map(|v| v % n).collect::<std::collections::BTreeSet<_>>().into_iter().collect())
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        let text = h.to_text();
        let back = Hypergraph::parse_text(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(Hypergraph::from_incidence(&h.incidence_matrix()).unwrap(), h);
    }

    #[test]
    fn column_weight_is_edge_size(n in 1usize..12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, n, 10);
        let m = h.incidence_matrix();
        for (j, e) in h.edges().iter().enumerate() {
            prop_assert_eq!(m.column(j).weight(), e.len());
        }
    }
}
