#![allow(dead_code)]

use hypercode::{BitMatrix, BitVector, Hypergraph};
use rand::Rng;

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> BitMatrix {
    let rows = (0..rows)
        .map(|_| BitVector::from_bools(&(0..cols).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>()))
        .collect();
    BitMatrix::from_rows(cols, rows).unwrap()
}

/// Random hypergraph with `n` vertices and `m` nonempty edges (repeats allowed).
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> Hypergraph {
    let edges = (0..m)
        .map(|_| loop {
            let e: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if !e.is_empty() {
                break e;
            }
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

/// Direct definition: edges with an odd number of vertices in `mask`.
pub fn eonv_by_definition(h: &Hypergraph, mask: u64) -> usize {
    h.edges()
        .iter()
        .filter(|e| e.iter().filter(|&&v| (mask >> v) & 1 == 1).count() % 2 == 1)
        .count()
}

/// Smallest nonzero `|eonv(S)|`, recomputed from scratch for every subset.
pub fn brute_force_eonv_min(h: &Hypergraph) -> Option<usize> {
    (1u64..1 << h.num_vertices())
        .map(|s| eonv_by_definition(h, s))
        .filter(|&w| w > 0)
        .min()
}

/// Smallest nonzero codeword weight, every codeword built as an explicit
/// row sum of the generator in binary counting order.
pub fn brute_force_min_weight(m: &BitMatrix) -> Option<usize> {
    (1u64..1 << m.num_rows())
        .map(|s| {
            let mut acc = vec![false; m.num_cols()];
            for i in 0..m.num_rows() {
                if (s >> i) & 1 == 1 {
                    for (j, a) in acc.iter_mut().enumerate() {
                        *a ^= m.get(i, j);
                    }
                }
            }
            acc.iter().filter(|&&b| b).count()
        })
        .filter(|&w| w > 0)
        .min()
}

/// Dense rank by Gaussian elimination on `Vec<Vec<bool>>`.
pub fn dense_rank(m: &BitMatrix) -> usize {
    let mut a: Vec<Vec<bool>> = (0..m.num_rows())
        .map(|i| (0..m.num_cols()).map(|j| m.get(i, j)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.num_cols() {
        if let Some(p) = (rank..a.len()).find(|&r| a[r][c]) {
            a.swap(rank, p);
            let pivot = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && row[c] {
                    row.iter_mut().zip(&pivot).for_each(|(x, &y)| *x ^= y);
                }
            }
            rank += 1;
        }
    }
    rank
}
