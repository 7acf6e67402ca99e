//! Binary linear codes given by a generator matrix, with two independent
//! minimum-distance engines:
//!
//! * message enumeration: all `2^k - 1` nonzero combinations of the reduced basis;
//! * vertex-subset enumeration: all `2^n - 1` nonempty row subsets of the raw
//!   generator, i.e. `min |eonv(S)|` when the generator is an incidence matrix.
//!
//! Both are exhaustive and agree on every input; the second may revisit the same
//! codeword many times when the rows are dependent.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf2core::search;
use crate::gf2core::{BitMatrix, BitVector};
use crate::hypergraph::{self, EonvMin, Hypergraph};

pub use crate::gf2core::search::{SearchLimits, DEFAULT_ENUM_CAP};

/// The row space of a generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

/// Minimum nonzero weight found by message enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub distance: usize,
    /// False when an early-exit threshold cut the search short; `distance`
    /// is then an upper bound.
    pub exact: bool,
    pub codeword: BitVector,
}

/// Which exhaustive search to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Enumerate the `2^k` messages of the code.
    Codeword,
    /// Enumerate the `2^n` row subsets of the generator.
    Eonv,
}

/// The engine with the smaller exponent; ties go to message enumeration.
pub fn preferred_engine(generator_rows: usize, dimension: usize) -> Engine {
    if generator_rows < dimension {
        Engine::Eonv
    } else {
        Engine::Codeword
    }
}

impl LinearCode {
    pub fn from_generator(generator: BitMatrix) -> Result<Self> {
        if generator.num_cols() == 0 {
            return Err(Error::EmptyLength);
        }
        let rref = generator.rref();
        Ok(Self {
            basis: rref.basis(),
            pivots: rref.pivots,
            generator,
        })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Self::from_generator(h.incidence_matrix())
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.generator.num_cols()
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Reduced row-echelon basis.
    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Codeword for the message whose bit `i` selects basis row `i`.
    pub fn encode_mask(&self, mask: u64) -> BitVector {
        let mut acc = BitVector::zeros(self.length());
        for (i, row) in self.basis.rows().iter().enumerate().take(64) {
            if (mask >> i) & 1 == 1 {
                acc.xor_in_place(row);
            }
        }
        acc
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &BitVector) -> bool {
        if v.len() != self.length() {
            return false;
        }
        let mut r = v.clone();
        for (row, &p) in self.basis.rows().iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_in_place(row);
            }
        }
        r.is_zero()
    }

    pub fn min_distance(&self) -> Result<MinDistance> {
        self.min_distance_with(&SearchLimits::default())
    }

    /// Minimum weight over the `2^k - 1` nonzero codewords.
    pub fn min_distance_with(&self, limits: &SearchLimits) -> Result<MinDistance> {
        if self.dimension() == 0 {
            return Err(Error::NoNonzeroCodeword);
        }
        let outcome = search::min_weight_combination(self.basis.rows(), limits)?;
        let best = outcome.best.ok_or(Error::NoNonzeroCodeword)?;
        Ok(MinDistance {
            distance: best.weight,
            exact: outcome.exact,
            codeword: self.encode_mask(best.mask),
        })
    }

    /// Number of codewords of each weight; only weights that occur are listed.
    pub fn weight_distribution(&self, cap: u64) -> Result<BTreeMap<usize, u64>> {
        let hist = search::weight_histogram(self.basis.rows(), self.length(), cap)?;
        Ok(hist
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .collect())
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_generator(self.basis.nullspace_basis()).expect("length is positive")
    }

    /// `C ⊆ C⊥`, i.e. the basis Gram matrix vanishes.
    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.gram().is_zero()
    }

    /// `C = C⊥`.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length() && self.is_self_orthogonal()
    }
}

/// Minimum of `|eonv(S)|` over the vertex subsets of `h`; equals the minimum
/// distance of the incidence code.
pub fn min_distance_via_eonv(h: &Hypergraph, limits: &SearchLimits) -> Result<EonvMin> {
    h.eonv_min_with(limits)
}

/// Row-subset engine on an arbitrary generator matrix. Rows play the role of
/// vertices and columns of edges; all-zero columns never contribute.
pub fn min_distance_via_row_subsets(m: &BitMatrix, limits: &SearchLimits) -> Result<EonvMin> {
    hypergraph::eonv_min_rows(m.rows(), limits)
}

/// Self-orthogonality read off the hypergraph: every vertex has even degree and
/// every two distinct vertices share an even number of edges.
pub fn structural_self_orthogonality(h: &Hypergraph) -> bool {
    let at: Vec<Vec<usize>> = (0..h.num_vertices())
        .map(|u| h.edges_at(u).expect("vertex in range"))
        .collect();
    if at.iter().any(|e| e.len() % 2 == 1) {
        return false;
    }
    for u in 0..at.len() {
        for v in u + 1..at.len() {
            if sorted_intersection_len(&at[u], &at[v]) % 2 == 1 {
                return false;
            }
        }
    }
    true
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Self-duality test for connected graphs: `|E| = 2|V| - 2` and every pair of
/// vertices (a vertex with itself included) shares an even number of edges.
///
/// Fails unless `h` is 2-uniform and connected.
pub fn graph_self_duality_criterion(h: &Hypergraph) -> Result<bool> {
    if !h.is_uniform(2) {
        return Err(Error::Precondition("input must be 2-uniform".into()));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("input graph must be connected".into()));
    }
    let n = h.num_vertices();
    Ok(h.num_edges() + 2 == 2 * n && structural_self_orthogonality(h))
}
