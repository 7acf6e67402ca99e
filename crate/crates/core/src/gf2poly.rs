//! Polynomials over GF(2) and the cyclic-code view of circulant hypergraphs.
//!
//! A polynomial is stored as its coefficient vector: bit `j` is the
//! coefficient of `x^j`. Exponents are 0-based, so row `M_i` of a matrix maps
//! to `Σ_{j ∈ supp(M_i)} x^j` with `j` the 0-based column index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2core::{BitMatrix, BitVector};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial over GF(2) in canonical form (no zero coefficients above the degree).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GF2Poly {
    // len() == degree + 1, or 0 for the zero polynomial
    coeffs: BitVector,
}

impl GF2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = BitVector::zeros(exp + 1);
        coeffs.set(exp, true);
        Self { coeffs }
    }

    /// `x^n + 1`, which is `x^n - 1` over GF(2).
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs.flip(0);
        p.normalize();
        p
    }

    pub fn from_coefficients(coeffs: &BitVector) -> Self {
        let mut p = Self {
            coeffs: coeffs.clone(),
        };
        p.normalize();
        p
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let exps: Vec<usize> = exps.into_iter().collect();
        let len = exps.iter().max().map_or(0, |&m| m + 1);
        let mut coeffs = BitVector::zeros(len);
        for e in exps {
            coeffs.flip(e);
        }
        Self::from_coefficients(&coeffs)
    }

    fn normalize(&mut self) {
        let len = self.coeffs.last_one().map_or(0, |d| d + 1);
        if len != self.coeffs.len() {
            self.coeffs = self.coeffs.resized(len);
        }
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: usize) -> bool {
        j < self.coeffs.len() && self.coeffs.get(j)
    }

    /// Exponents with coefficient 1.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.support().collect()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    /// Coefficients padded (or truncated) to `len` positions.
    pub fn to_coefficients(&self, len: usize) -> BitVector {
        self.coeffs.resized(len)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.resized(len);
        out.xor_in_place(&other.coeffs.resized(len));
        Self::from_coefficients(&out)
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc = vec![0u64; len.div_ceil(64) + 1];
        let b = other.coeffs.words();
        for i in self.coeffs.support() {
            let (word, bit) = (i / 64, i % 64);
            for (k, &w) in b.iter().enumerate() {
                acc[word + k] ^= w << bit;
                if bit != 0 {
                    acc[word + k + 1] ^= w >> (64 - bit);
                }
            }
        }
        Self::from_coefficients(&BitVector::from_words(len, acc))
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Degree::Finite(db) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.coeffs.clone();
        let Degree::Finite(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = BitVector::zeros(da - db + 1);
        let shifted = |s: usize| divisor.coeffs.resized(da + 1).rotate_right(s);
        for d in (db..=da).rev() {
            if rem.get(d) {
                quot.set(d - db, true);
                rem.xor_in_place(&shifted(d - db));
            }
        }
        Ok((Self::from_coefficients(&quot), Self::from_coefficients(&rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Greatest common divisor by Euclid's algorithm (monic, as every nonzero
    /// polynomial over GF(2) is).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a)
    }
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .support()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Poly({self})")
    }
}

/// Ascending coefficient string, e.g. `"1000101"` is `1 + x^4 + x^6`.
impl FromStr for GF2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_coefficients(&s.trim().parse()?))
    }
}

/// Dimension of the length-`n` cyclic code generated by `p`:
/// `n - deg gcd(p, x^n - 1)`.
pub fn cyclic_code_dimension(p: &GF2Poly, n: usize) -> Result<usize> {
    match p.degree() {
        Degree::NegInfinity => Err(Error::Precondition("generator polynomial is zero".into())),
        Degree::Finite(d) if d >= n => Err(Error::Precondition(format!(
            "degree {d} must be below the length {n}"
        ))),
        Degree::Finite(_) => {
            let g = p.gcd(&GF2Poly::x_n_minus_one(n))?;
            let dg = g.degree().finite().expect("gcd of nonzero inputs is nonzero");
            Ok(n - dg)
        }
    }
}

/// `n x n` circulant with first row the coefficients of `p`:
/// `M[i][j] = p_{(j - i) mod n}`.
pub fn circulant_matrix(p: &GF2Poly, n: usize) -> Result<BitMatrix> {
    if let Degree::Finite(d) = p.degree() {
        if d >= n {
            return Err(Error::Precondition(format!(
                "degree {d} must be below the length {n}"
            )));
        }
    }
    let first = p.to_coefficients(n);
    BitMatrix::from_rows(n, (0..n).map(|i| first.rotate_right(i)).collect())
}

/// `p_i(x) = Σ_{j ∈ supp(M_i)} x^j`.
pub fn row_polynomial(m: &BitMatrix, i: usize) -> Result<GF2Poly> {
    if i >= m.num_rows() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: m.num_rows(),
        });
    }
    Ok(GF2Poly::from_coefficients(m.row(i)))
}

/// `|supp(Σ_{t ∈ S} p_t)|` for the row polynomials of `h`'s incidence matrix.
///
/// Requires a square incidence matrix; for circulant `h` this equals
/// `|eonv(S)|`.
pub fn eonv_weight_via_polys(h: &Hypergraph, s: &VertexSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if h.num_vertices() != h.num_edges() {
        return Err(Error::Precondition(
            "incidence matrix must be square".into(),
        ));
    }
    let m = h.incidence_matrix();
    let mut sum = GF2Poly::zero();
    for t in s.iter() {
        sum = sum.add(&row_polynomial(&m, t)?);
    }
    Ok(sum.weight())
}

/// Lower bound on the minimum distance of the cyclic code generated by
/// `block_row(k, m)`: `k` when `m = 1`, otherwise `2k`.
pub fn block_circulant_bound(k: usize, m: usize) -> Result<usize> {
    match (k, m) {
        (0, _) | (_, 0) => Err(Error::Precondition("k and m must be at least 1".into())),
        (k, 1) => Ok(k),
        (k, _) => Ok(2 * k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fano_circulant;

    fn p(s: &str) -> GF2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_and_degree() {
        assert_eq!(p("0000").degree(), Degree::NegInfinity);
        assert!(p("0000").is_zero());
        assert_eq!(p("0100"), p("01"));
        assert_eq!(p("1000101").degree(), Degree::Finite(6));
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(p("1000101").to_string(), "1 + x^4 + x^6");
        assert_eq!(GF2Poly::x_n_minus_one(3), p("1001"));
    }

    #[test]
    fn addition() {
        let a = p("1011");
        assert!(a.add(&a).is_zero());
        assert_eq!(p("11").add(&p("011")), p("101"));
    }

    #[test]
    fn multiplication() {
        assert_eq!(p("11").mul(&p("11")), p("101"));
        let a = p("1101001");
        assert_eq!(a.mul(&GF2Poly::one()), a);
        assert!(a.mul(&GF2Poly::zero()).is_zero());
        // crosses a word boundary
        let x63 = GF2Poly::monomial(63);
        assert_eq!(x63.mul(&GF2Poly::monomial(5)), GF2Poly::monomial(68));
    }

    #[test]
    fn remainder() {
        assert!(p("101").rem(&p("11")).unwrap().is_zero());
        assert!(p("1101").rem(&GF2Poly::one()).unwrap().is_zero());
        let x7 = GF2Poly::x_n_minus_one(7);
        assert!(x7.rem(&p("1011")).unwrap().is_zero());
        assert_eq!(p("11").rem(&GF2Poly::zero()), Err(Error::DivisionByZero));
        let (q, r) = p("1").div_rem(&p("11")).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p("1"));
    }

    #[test]
    fn gcd_examples() {
        let a = p("1011");
        assert_eq!(a.gcd(&GF2Poly::zero()).unwrap(), a);
        let x7 = GF2Poly::x_n_minus_one(7);
        assert_eq!(p("11").gcd(&x7).unwrap(), p("11"));
        let fano = p("1000101");
        assert_eq!(fano.gcd(&x7).unwrap().degree(), Degree::Finite(3));
        assert_eq!(GF2Poly::zero().gcd(&GF2Poly::zero()), Err(Error::UndefinedGcd));
    }

    #[test]
    fn cyclic_dimension_examples() {
        for n in 1..10 {
            assert_eq!(cyclic_code_dimension(&GF2Poly::one(), n).unwrap(), n);
        }
        assert_eq!(cyclic_code_dimension(&p("1000101"), 7).unwrap(), 4);
        assert!(cyclic_code_dimension(&GF2Poly::zero(), 7).is_err());
        assert!(cyclic_code_dimension(&p("1000101"), 6).is_err());
    }

    #[test]
    fn row_polynomials() {
        let m = BitMatrix::from_strs(&["101", "000"]).unwrap();
        assert_eq!(row_polynomial(&m, 0).unwrap(), p("101"));
        assert!(row_polynomial(&m, 1).unwrap().is_zero());
        assert!(row_polynomial(&m, 2).is_err());
        let f = fano_circulant().incidence_matrix();
        assert_eq!(row_polynomial(&f, 0).unwrap(), GF2Poly::from_exponents([0, 4, 6]));
    }

    #[test]
    fn eonv_weight_examples() {
        let h = fano_circulant();
        let m = h.incidence_matrix();
        for u in 0..7 {
            let w = eonv_weight_via_polys(&h, &VertexSet::new([u])).unwrap();
            assert_eq!(w, m.row(u).weight());
        }
        assert_eq!(eonv_weight_via_polys(&h, &VertexSet::new(0..7)).unwrap(), 7);
        assert_eq!(
            eonv_weight_via_polys(&h, &VertexSet::default()),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn block_bounds() {
        assert_eq!(block_circulant_bound(3, 2).unwrap(), 6);
        assert_eq!(block_circulant_bound(5, 1).unwrap(), 5);
        assert_eq!(block_circulant_bound(1, 3).unwrap(), 2);
        assert!(block_circulant_bound(0, 3).is_err());
    }

    #[test]
    fn circulant_matrix_of_fano_row() {
        let m = circulant_matrix(&p("1000101"), 7).unwrap();
        assert_eq!(m, fano_circulant().incidence_matrix());
        assert_eq!(m.rank(), 4);
    }
}
