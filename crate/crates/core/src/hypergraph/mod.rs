//! Hypergraphs, their incidence matrices, and the odd-intersection edge sets
//! (`eonv`) that describe the codewords of the incidence code.

mod families;
mod format;

use std::collections::VecDeque;

pub use families::{
    block_row, circulant_hypergraph, complete_3partite, f_count, fano_circulant,
    projective_geometry,
};

use crate::error::{Error, Result};
use crate::gf2core::search::{self, SearchLimits};
use crate::gf2core::{BitMatrix, BitVector};

/// Hypergraph on vertices `0..num_vertices` with an ordered multiset of edges.
///
/// Each edge is a nonempty, strictly increasing list of vertex indices.
/// Repeated edges are kept as given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
}

/// A set of vertices, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|i| (mask >> i) & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Labels shifted to start at 1.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// Result of minimizing `|eonv(S)|` over nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EonvMin {
    pub size: usize,
    /// Lexicographically smallest minimizer (or the early-exit hit).
    pub witness: VertexSet,
    /// False if the search stopped at an early-exit threshold.
    pub exact: bool,
}

impl Hypergraph {
    /// Validates and normalizes the edges (each edge is sorted).
    ///
    /// Fails on an empty edge, a vertex out of range, a vertex repeated
    /// inside one edge, or `num_vertices == 0`.
    pub fn new(num_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::Precondition(
                "a hypergraph needs at least one vertex".into(),
            ));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (j, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(j));
            }
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    bound: num_vertices,
                });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!(
                    "edge {j} lists a vertex twice"
                )));
            }
            normalized.push(e);
        }
        Ok(Self {
            num_vertices,
            edges: normalized,
        })
    }

    /// Hypergraph whose incidence matrix is `m` (rows are vertices, columns edges).
    pub fn from_incidence(m: &BitMatrix) -> Result<Self> {
        let edges = (0..m.num_cols())
            .map(|j| m.column(j).support().collect())
            .collect();
        Self::new(m.num_rows(), edges)
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> Result<&[usize]> {
        self.edges
            .get(j)
            .map(Vec::as_slice)
            .ok_or(Error::IndexOutOfRange {
                index: j,
                bound: self.edges.len(),
            })
    }

    /// No edge occurs twice.
    pub fn is_simple(&self) -> bool {
        let mut sorted: Vec<&Vec<usize>> = self.edges.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// `Some(r)` if every edge has exactly `r` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// `n x m` matrix with entry `(i, j)` set iff vertex `i` lies in edge `j`.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.num_vertices, self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                m.set(v, j, true);
            }
        }
        m
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.num_vertices {
            return Err(Error::IndexOutOfRange {
                index: v,
                bound: self.num_vertices,
            });
        }
        Ok(())
    }

    /// Indices of the edges meeting `s` in an odd number of vertices.
    pub fn eonv(&self, s: &VertexSet) -> Result<Vec<usize>> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.iter().filter(|&&v| s.contains(v)).count() % 2 == 1)
            .map(|(j, _)| j)
            .collect())
    }

    /// Minimum of `|eonv(S)|` over nonempty `S` with nonempty `eonv(S)`.
    pub fn eonv_min(&self) -> Result<EonvMin> {
        self.eonv_min_with(&SearchLimits::default())
    }

    /// As [`Hypergraph::eonv_min`], enumerating all `2^n - 1` vertex subsets in
    /// Gray-code order under the given limits.
    pub fn eonv_min_with(&self, limits: &SearchLimits) -> Result<EonvMin> {
        eonv_min_rows(self.incidence_matrix().rows(), limits)
    }

    /// `V \ edge_j`.
    pub fn complement_edge(&self, j: usize) -> Result<VertexSet> {
        let e = self.edge(j)?;
        Ok((0..self.num_vertices)
            .filter(|v| e.binary_search(v).is_err())
            .collect())
    }

    /// Indices of the edges containing `u`.
    pub fn edges_at(&self, u: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.binary_search(&u).is_ok())
            .map(|(j, _)| j)
            .collect())
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.edges_at(u).map(|e| e.len())
    }

    /// Connectivity of the vertex-edge incidence structure.
    pub fn is_connected(&self) -> bool {
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices];
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                at[v].push(j);
            }
        }
        let mut seen_v = vec![false; self.num_vertices];
        let mut seen_e = vec![false; self.edges.len()];
        let mut queue = VecDeque::from([0usize]);
        seen_v[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &j in &at[u] {
                if std::mem::replace(&mut seen_e[j], true) {
                    continue;
                }
                for &w in &self.edges[j] {
                    if !std::mem::replace(&mut seen_v[w], true) {
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        reached == self.num_vertices
    }
}

/// Row-subset form of the eonv minimization; rows are vertices of an
/// incidence matrix, columns are edges.
pub(crate) fn eonv_min_rows(rows: &[BitVector], limits: &SearchLimits) -> Result<EonvMin> {
    let outcome = search::min_weight_combination(rows, limits)?;
    let best = outcome.best.ok_or(Error::NoNonzeroCodeword)?;
    Ok(EonvMin {
        size: best.weight,
        witness: VertexSet::from_mask(best.mask),
        exact: outcome.exact,
    })
}
