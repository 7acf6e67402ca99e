use std::fmt;

use super::BitVector;
use crate::error::{Error, Result};

/// Dense binary matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    num_cols: usize,
    rows: Vec<BitVector>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; nonzero rows first.
    pub matrix: BitMatrix,
    /// Strictly increasing pivot columns, one per nonzero row of `matrix`.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of the reduced form, i.e. a canonical basis of the row space.
    pub fn basis(&self) -> BitMatrix {
        BitMatrix {
            num_cols: self.matrix.num_cols,
            rows: self.matrix.rows[..self.pivots.len()].to_vec(),
        }
    }
}

impl BitMatrix {
    pub fn zeros(num_rows: usize, num_cols: usize) -> Self {
        Self {
            num_cols,
            rows: vec![BitVector::zeros(num_cols); num_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Every row must have length `num_cols`.
    pub fn from_rows(num_cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != num_cols) {
            return Err(Error::DimensionMismatch {
                expected: num_cols,
                found: bad.len(),
            });
        }
        Ok(Self { num_cols, rows })
    }

    /// Parses rows given as `0`/`1` strings. All rows must have equal length.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        let num_cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(num_cols, parsed)
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.num_cols
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.num_rows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.num_cols, self.num_rows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// Reduced row-echelon form over GF(2).
    ///
    /// Columns are scanned left to right; the pivot for a column is the lowest
    /// unresolved row index holding a one there.
    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.num_cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            let (head, tail) = rows.split_at_mut(next);
            let (pivot, rest) = tail.split_first_mut().expect("pivot row exists");
            for r in head.iter_mut().chain(rest.iter_mut()) {
                if r.get(col) {
                    r.xor_in_place(pivot);
                }
            }
            pivots.push(col);
            next += 1;
        }
        Rref {
            matrix: Self {
                num_cols: self.num_cols,
                rows,
            },
            pivots,
        }
    }

    /// Rank over GF(2), the dimension of the row space.
    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{ v : M v = 0 }`, one row per free column (ascending).
    pub fn nullspace_basis(&self) -> Self {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.num_cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.num_cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::zeros(self.num_cols);
                v.set(f, true);
                for (r, &p) in rref.pivots.iter().enumerate() {
                    if rref.matrix.rows[r].get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        Self {
            num_cols: self.num_cols,
            rows,
        }
    }

    /// `M Mᵀ` over GF(2). Entry `(u, v)` is the parity of the overlap of rows `u` and `v`.
    pub fn gram(&self) -> Self {
        let n = self.num_rows();
        let mut g = Self::zeros(n, n);
        for u in 0..n {
            for v in u..n {
                if self.rows[u].dot(&self.rows[v]) {
                    g.rows[u].set(v, true);
                    g.rows[v].set(u, true);
                }
            }
        }
        g
    }

    /// `M v` over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.num_cols {
            return Err(Error::DimensionMismatch {
                expected: self.num_cols,
                found: v.len(),
            });
        }
        Ok(BitVector::from_bools(
            &self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>(),
        ))
    }

    /// Whether both matrices span the same row space.
    pub fn row_space_equal(&self, other: &Self) -> Result<bool> {
        if self.num_cols != other.num_cols {
            return Err(Error::DimensionMismatch {
                expected: self.num_cols,
                found: other.num_cols,
            });
        }
        let a = self.rref();
        let b = other.rref();
        Ok(a.pivots == b.pivots && a.basis() == b.basis())
    }

    /// GF(2) sum of the rows listed in `subset`. An empty subset gives the zero vector.
    pub fn row_combination(&self, subset: &[usize]) -> Result<BitVector> {
        let mut acc = BitVector::zeros(self.num_cols);
        for &i in subset {
            let row = self.rows.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                bound: self.num_rows(),
            })?;
            acc.xor_in_place(row);
        }
        Ok(acc)
    }

    /// Parses the text format: a `<num_rows> <num_cols>` header followed by one
    /// line of `0`/`1` characters per row.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (num_rows, num_cols) = match lines.next() {
            Some((_, header)) => parse_header(header)?,
            None => return Err(Error::parse(1, "missing header")),
        };
        let mut rows = Vec::with_capacity(num_rows);
        for r in 0..num_rows {
            let (idx, line) = lines
                .next()
                .ok_or_else(|| Error::parse(r + 2, format!("expected {num_rows} rows, found {r}")))?;
            let row: BitVector = line
                .parse()
                .map_err(|_| Error::parse(idx + 1, "row must consist of 0/1 characters"))?;
            if row.len() != num_cols {
                return Err(Error::parse(
                    idx + 1,
                    format!("row has {} columns, header says {num_cols}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((idx, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(idx + 1, "trailing content after last row"));
        }
        Ok(Self { num_cols, rows })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.num_rows(), self.num_cols);
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }
}

pub(crate) fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::parse(1, "header must be two non-negative integers")),
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.num_rows(), self.num_cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}
