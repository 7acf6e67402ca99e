use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bit `i` lives in `words[i / 64]` at position `i % 64`. Bits at positions
/// `>= len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, bound: len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_tail();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending indices of the nonzero coordinates.
    pub fn support(&self) -> Support<'_> {
        Support {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.support().next()
    }

    /// Index of the highest set bit.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }

    /// Weight of the coordinate-wise AND.
    pub fn and_weight(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &Self) -> bool {
        self.and_weight(other) % 2 == 1
    }

    pub fn xor_in_place(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Bitwise complement, i.e. `1 + v (mod 2)`.
    pub fn complement(&self) -> Self {
        let mut v = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        v.clear_tail();
        v
    }

    /// Cyclic shift toward higher indices: `out[(i + s) mod len] = self[i]`.
    pub fn rotate_right(&self, s: usize) -> Self {
        if self.len == 0 {
            return self.clone();
        }
        let s = s % self.len;
        let mut out = Self::zeros(self.len);
        for i in self.support() {
            out.set((i + s) % self.len, true);
        }
        out
    }

    /// Same vector with a different length; truncates or zero-extends.
    pub fn resized(&self, len: usize) -> Self {
        Self::from_words(len, self.words.clone())
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub struct Support<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Support<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + tz);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        self.xor_in_place(rhs);
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_in_place(rhs);
        out
    }
}

/// Contiguous `0`/`1` characters, index 0 first.
impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::parse(
                        1,
                        format!("unexpected character {other:?} in bit string"),
                    ))
                }
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_matches_support() {
        let v = BitVector::from_indices(130, [0, 63, 64, 127, 129]).unwrap();
        assert_eq!(v.weight(), 5);
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 63, 64, 127, 129]);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(v.last_one(), Some(129));
    }

    #[test]
    fn ones_and_complement_keep_tail_clear() {
        let v = BitVector::ones(70);
        assert_eq!(v.weight(), 70);
        assert!(v.complement().is_zero());
        assert_eq!(BitVector::zeros(70).complement(), v);
    }

    #[test]
    fn string_round_trip() {
        let v: BitVector = "1000101".parse().unwrap();
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 4, 6]);
        assert_eq!(v.to_string(), "1000101");
        assert!("10x".parse::<BitVector>().is_err());
        assert_eq!("".parse::<BitVector>().unwrap().len(), 0);
    }

    #[test]
    fn rotate_right_is_cyclic() {
        let v: BitVector = "1000101".parse().unwrap();
        assert_eq!(v.rotate_right(1).to_string(), "1100010");
        assert_eq!(v.rotate_right(7), v);
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(matches!(
            BitVector::from_indices(3, [3]),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        ));
    }

    #[test]
    fn dot_is_parity_of_overlap() {
        let a: BitVector = "1101".parse().unwrap();
        let b: BitVector = "1011".parse().unwrap();
        assert_eq!(a.and_weight(&b), 2);
        assert!(!a.dot(&b));
        assert!(a.dot(&a));
    }
}
