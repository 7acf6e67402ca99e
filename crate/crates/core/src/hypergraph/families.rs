use super::Hypergraph;
use crate::error::{Error, Result};
use crate::gf2core::BitVector;

/// Complete 3-partite 3-uniform hypergraph with parts of size `n`.
///
/// Parts are `X = 0..n`, `Y = n..2n`, `Z = 2n..3n`; the `n^3` edges
/// `{i, n + j, 2n + k}` are listed in lexicographic `(i, j, k)` order.
pub fn complete_3partite(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::Precondition("part size must be at least 1".into()));
    }
    let mut edges = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                edges.push(vec![i, n + j, 2 * n + k]);
            }
        }
    }
    Hypergraph::new(3 * n, edges)
}

/// Number of edges of `complete_3partite(n)` meeting a vertex set `S` oddly,
/// given `k1 = |S ∩ X|`, `k2 = |S ∩ Y|`, `k3 = |S ∩ Z|`.
///
/// An edge meets `S` oddly when it hits `S` in exactly one part or in all three.
pub fn f_count(n: u64, k1: i64, k2: i64, k3: i64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Precondition("part size must be at least 1".into()));
    }
    let bound = i64::try_from(n).map_err(|_| Error::Precondition("part size too large".into()))?;
    let mut ks = [0u64; 3];
    for (slot, k) in ks.iter_mut().zip([k1, k2, k3]) {
        if !(0..=bound).contains(&k) {
            return Err(Error::Precondition(format!("k = {k} outside 0..={n}")));
        }
        *slot = k as u64;
    }
    let [a, b, c] = ks;
    let (na, nb, nc) = (n - a, n - b, n - c);
    Ok(a * nb * nc + na * b * nc + na * nb * c + a * b * c)
}

/// Points and lines of the binary projective geometry of `F_2^n`.
///
/// Point `a` (a nonzero vector read as an integer) is vertex `a - 1`. Lines are
/// the triples `{a, b, a ^ b}` with `a < b < a ^ b`, in lexicographic order.
/// `n` is limited to `3..=20`.
pub fn projective_geometry(n: u32) -> Result<Hypergraph> {
    if !(3..=20).contains(&n) {
        return Err(Error::Precondition(format!(
            "projective geometry needs 3 <= n <= 20, got {n}"
        )));
    }
    let points = (1usize << n) - 1;
    let mut edges = Vec::new();
    for a in 1..=points {
        for b in a + 1..=points {
            let c = a ^ b;
            if c > b {
                edges.push(vec![a - 1, b - 1, c - 1]);
            }
        }
    }
    Hypergraph::new(points, edges)
}

/// The Fano plane with the cyclic labeling whose lines are `{i, i+1, i+3} mod 7`.
pub fn fano_circulant() -> Hypergraph {
    let edges = (0..7)
        .map(|i| vec![i, (i + 1) % 7, (i + 3) % 7])
        .collect();
    Hypergraph::new(7, edges).expect("fano lines are valid")
}

/// Hypergraph whose incidence matrix is the circulant with the given first row:
/// `M[i][j] = first_row[(j - i) mod n]`.
pub fn circulant_hypergraph(first_row: &BitVector) -> Result<Hypergraph> {
    let n = first_row.len();
    if n == 0 {
        return Err(Error::Precondition("first row must be nonempty".into()));
    }
    if first_row.is_zero() {
        return Err(Error::EmptyEdge(0));
    }
    let support: Vec<usize> = first_row.support().collect();
    let edges = (0..n)
        .map(|j| support.iter().map(|&s| (j + n - s) % n).collect())
        .collect();
    Hypergraph::new(n, edges)
}

/// `k` blocks of `m` ones followed by `m` zeros (length `2km`).
pub fn block_row(k: usize, m: usize) -> Result<BitVector> {
    if k == 0 || m == 0 {
        return Err(Error::Precondition("block counts must be at least 1".into()));
    }
    let len = 2 * k * m;
    BitVector::from_indices(len, (0..k).flat_map(|j| 2 * j * m..2 * j * m + m))
}
