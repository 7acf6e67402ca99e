//! Exhaustive Gray-code enumeration of GF(2) row combinations.
//!
//! Subset index `i` maps to the Gray code `i ^ (i >> 1)`, so consecutive
//! subsets differ in exactly one row and the running sum is updated with a
//! single row XOR. The index space is cut into fixed-size chunks; each chunk
//! seeds its running sum from scratch, which lets chunks run on any worker
//! while the reduction stays independent of the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::BitVector;
use crate::error::{Error, Result};

/// Default upper bound on weight evaluations for a single search.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 32;

const CHUNK_LOG: u32 = 12;

/// Bounds for an exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of weight evaluations; exceeding it is an error.
    pub cap: u64,
    /// Stop as soon as a nonzero combination of weight at most this is found.
    /// The result is then only an upper bound.
    pub early_exit: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ENUM_CAP,
            early_exit: None,
        }
    }
}

impl SearchLimits {
    pub fn with_cap(cap: u64) -> Self {
        Self {
            cap,
            ..Self::default()
        }
    }
}

/// Lightest nonzero combination found by [`min_weight_combination`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Combination {
    pub weight: usize,
    /// Bit `i` set iff row `i` takes part in the sum.
    pub mask: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// `None` when every combination sums to zero.
    pub best: Option<Combination>,
    /// False when the search stopped early on the threshold.
    pub exact: bool,
}

/// Whether the sorted index list encoded by `a` precedes the one encoded by `b`
/// lexicographically (a proper prefix comes first).
pub fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let p = diff.trailing_zeros();
    if (a >> p) & 1 == 1 {
        // b skips p: a is smaller unless b ends before p
        (b >> p) != 0
    } else {
        (a >> p) == 0
    }
}

fn better(a: Combination, b: Combination) -> bool {
    a.weight < b.weight || (a.weight == b.weight && lex_less(a.mask, b.mask))
}

fn evaluations(num_rows: usize, include_zero: bool) -> u128 {
    let total = if num_rows >= 127 {
        u128::MAX
    } else {
        1u128 << num_rows
    };
    if include_zero {
        total
    } else {
        total - 1
    }
}

fn check_cap(num_rows: usize, include_zero: bool, cap: u64) -> Result<()> {
    let required = evaluations(num_rows, include_zero);
    if num_rows >= 64 || required > u128::from(cap) {
        return Err(Error::ResourceCap { required, cap });
    }
    Ok(())
}

struct Packed {
    words_per_row: usize,
    data: Vec<u64>,
}

impl Packed {
    fn new(rows: &[BitVector]) -> Self {
        let words_per_row = rows.first().map_or(0, |r| r.words().len());
        let data = rows.iter().flat_map(|r| r.words().iter().copied()).collect();
        Self {
            words_per_row,
            data,
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn seed(&self, mask: u64, acc: &mut [u64]) {
        acc.fill(0);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            xor_into(acc, self.row(i));
        }
    }
}

#[inline]
fn xor_into(acc: &mut [u64], row: &[u64]) {
    for (a, r) in acc.iter_mut().zip(row) {
        *a ^= r;
    }
}

#[inline]
fn popcount(acc: &[u64]) -> usize {
    acc.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn chunk_bounds(chunk: usize, end: u64) -> (u64, u64) {
    let lo = (chunk as u64) << CHUNK_LOG;
    (lo, (lo + (1 << CHUNK_LOG)).min(end))
}

/// Minimum weight over all nonzero sums of nonempty row subsets.
///
/// Ties are broken toward the lexicographically smallest subset.
pub fn min_weight_combination(rows: &[BitVector], limits: &SearchLimits) -> Result<SearchOutcome> {
    check_cap(rows.len(), false, limits.cap)?;
    let packed = Packed::new(rows);
    let end = 1u64 << rows.len();
    let num_chunks = (end >> CHUNK_LOG).max(1) as usize;
    let first_hit = AtomicUsize::new(usize::MAX);

    let per_chunk: Vec<(Option<Combination>, bool)> = (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            if limits.early_exit.is_some() && first_hit.load(Ordering::Relaxed) < chunk {
                return (None, false);
            }
            let (lo, hi) = chunk_bounds(chunk, end);
            let lo = lo.max(1);
            if lo >= hi {
                return (None, false);
            }
            let mut acc = vec![0u64; packed.words_per_row];
            let mut mask = gray(lo);
            packed.seed(mask, &mut acc);
            let mut best: Option<Combination> = None;
            let mut i = lo;
            loop {
                let w = popcount(&acc);
                if w > 0 {
                    let cand = Combination { weight: w, mask };
                    if best.is_none_or(|b| better(cand, b)) {
                        best = Some(cand);
                    }
                    if limits.early_exit.is_some_and(|t| w <= t) {
                        first_hit.fetch_min(chunk, Ordering::Relaxed);
                        return (Some(cand), true);
                    }
                }
                i += 1;
                if i >= hi {
                    break;
                }
                let bit = i.trailing_zeros();
                mask ^= 1 << bit;
                xor_into(&mut acc, packed.row(bit as usize));
            }
            (best, false)
        })
        .collect();

    if limits.early_exit.is_some() {
        if let Some((hit, _)) = per_chunk.iter().find(|(_, hit)| *hit) {
            return Ok(SearchOutcome {
                best: *hit,
                exact: false,
            });
        }
    }
    let best = per_chunk
        .into_iter()
        .filter_map(|(b, _)| b)
        .reduce(|a, b| if better(b, a) { b } else { a });
    Ok(SearchOutcome { best, exact: true })
}

/// Histogram of weights over all `2^r` subset sums (including the empty one).
///
/// `hist[w]` counts subsets whose sum has weight `w`.
pub fn weight_histogram(rows: &[BitVector], width: usize, cap: u64) -> Result<Vec<u64>> {
    check_cap(rows.len(), true, cap)?;
    let packed = Packed::new(rows);
    let end = 1u64 << rows.len();
    let num_chunks = (end >> CHUNK_LOG).max(1) as usize;

    Ok((0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let (lo, hi) = chunk_bounds(chunk, end);
            let mut hist = vec![0u64; width + 1];
            let mut acc = vec![0u64; packed.words_per_row];
            packed.seed(gray(lo), &mut acc);
            hist[popcount(&acc)] += 1;
            for i in lo + 1..hi {
                xor_into(&mut acc, packed.row(i.trailing_zeros() as usize));
                hist[popcount(&acc)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; width + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask_to_list(m: u64) -> Vec<u32> {
        (0..64).filter(|i| (m >> i) & 1 == 1).collect()
    }

    #[test]
    fn lex_order_matches_sorted_lists() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let expected = mask_to_list(a) < mask_to_list(b);
                assert_eq!(lex_less(a, b), expected, "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn gray_walk_covers_every_subset_once() {
        // 14 rows spans several chunks
        let n = 14;
        let rows: Vec<BitVector> = (0..n)
            .map(|i| BitVector::from_indices(n, [i]).unwrap())
            .collect();
        let hist = weight_histogram(&rows, n, u64::MAX).unwrap();
        // identity rows: weight distribution is binomial
        let mut binom = 1u64;
        for (w, &count) in hist.iter().enumerate() {
            assert_eq!(count, binom, "weight {w}");
            binom = binom * (n - w) as u64 / (w as u64 + 1);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rows = vec![BitVector::ones(3); 10];
        let err = min_weight_combination(&rows, &SearchLimits::with_cap(1000)).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceCap {
                required: 1023,
                cap: 1000
            }
        );
        assert!(min_weight_combination(&rows, &SearchLimits::with_cap(1023)).is_ok());
    }

    #[test]
    fn all_zero_rows_have_no_best() {
        let rows = vec![BitVector::zeros(5); 4];
        let out = min_weight_combination(&rows, &SearchLimits::default()).unwrap();
        assert_eq!(out.best, None);
        assert!(out.exact);
    }

    #[test]
    fn early_exit_flags_upper_bound() {
        let rows: Vec<BitVector> = ["1110000", "0001111", "1111111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let exact = min_weight_combination(&rows, &SearchLimits::default()).unwrap();
        assert_eq!(exact.best.unwrap().weight, 3);
        let limits = SearchLimits {
            early_exit: Some(4),
            ..SearchLimits::default()
        };
        let out = min_weight_combination(&rows, &limits).unwrap();
        assert!(!out.exact);
        assert!(out.best.unwrap().weight <= 4);
    }
}
