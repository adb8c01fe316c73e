use std::fmt;

use super::{BitVector, Gf2Error};

/// Dense matrix over GF(2) stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BinaryMatrix {
    pub fn empty(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVector::from_indices(n, [i])).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from per-row supports.
    pub fn from_supports<I, R>(cols: usize, supports: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        Self {
            cols,
            rows: supports
                .into_iter()
                .map(|s| BitVector::from_indices(cols, s))
                .collect(),
        }
    }

    pub fn parse_rows<S: AsRef<str>>(cols: usize, rows: &[S]) -> Result<Self, Gf2Error> {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().parse::<BitVector>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut BitVector {
        &mut self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn push_row(&mut self, row: BitVector) {
        assert_eq!(row.len(), self.cols, "row length must match column count");
        self.rows.push(row);
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_indices(
            self.rows.len(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.get(c))
                .map(|(i, _)| i),
        )
    }

    pub fn column_weight(&self, c: usize) -> usize {
        self.rows.iter().filter(|r| r.get(c)).count()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for r in &self.rows {
            for c in r.iter_ones() {
                w[c] += 1;
            }
        }
        w
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(BitVector::weight).collect()
    }

    pub fn total_weight(&self) -> usize {
        self.rows.iter().map(BitVector::weight).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for c in r.iter_ones() {
                t.rows[c].set(i, true);
            }
        }
        t
    }

    /// `self · otherᵀ`; entry (i, j) is the parity of row i of `self` against row j of `other`.
    pub fn mul_transpose(&self, other: &Self) -> Result<Self, Gf2Error> {
        if self.cols != other.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut out = Self::zeros(self.rows.len(), other.rows.len());
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in other.rows.iter().enumerate() {
                if a.dot(b) {
                    out.rows[i].set(j, true);
                }
            }
        }
        Ok(out)
    }

    /// `v · self` for a row vector `v` of length `nrows`.
    pub fn left_mul(&self, v: &BitVector) -> BitVector {
        let mut acc = BitVector::zeros(self.cols);
        for i in v.iter_ones() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }

    /// `self · v` for a column vector `v` of length `ncols`.
    pub fn syndrome(&self, v: &BitVector) -> BitVector {
        BitVector::from_indices(
            self.rows.len(),
            self.rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.dot(v))
                .map(|(i, _)| i),
        )
    }

    /// Reduced row-echelon form and pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && r.get(c) {
                    r.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (
            Self {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        EchelonBasis::from_rows(self.cols, &self.rows).rank()
    }

    /// Whether `v` is a GF(2) combination of the rows.
    pub fn in_rowspace(&self, v: &BitVector) -> Result<bool, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(EchelonBasis::from_rows(self.cols, &self.rows).contains(v))
    }

    /// Basis of the right kernel `{v : self · v = 0}`.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !is_pivot[*c]) {
            let mut v = BitVector::zeros(self.cols);
            v.set(free, true);
            for (row, &p) in r.rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        Self {
            cols: self.cols,
            rows: basis,
        }
    }

    /// Whether both matrices span the same row space.
    pub fn same_rowspace(&self, other: &Self) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let a = EchelonBasis::from_rows(self.cols, &self.rows);
        let b = EchelonBasis::from_rows(other.cols, &other.rows);
        a.rank() == b.rank() && other.rows.iter().all(|r| a.contains(r))
    }

    /// `(self | other)`, stacking columns side by side.
    pub fn hstack(&self, other: &Self) -> Result<Self, Gf2Error> {
        if self.rows.len() != other.rows.len() {
            return Err(Gf2Error::LengthMismatch {
                expected: self.rows.len(),
                found: other.rows.len(),
            });
        }
        Ok(Self {
            cols: self.cols + other.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.concat(b))
                .collect(),
        })
    }

    /// Keep only the listed columns, in the listed order.
    pub fn select_columns(&self, columns: &[usize]) -> Self {
        Self {
            cols: columns.len(),
            rows: self.rows.iter().map(|r| r.select(columns)).collect(),
        }
    }

    /// Zero-pad every row to `cols` columns.
    pub fn pad_columns(&self, cols: usize) -> Self {
        assert!(cols >= self.cols);
        Self {
            cols,
            rows: self.rows.iter().map(|r| r.resized(cols)).collect(),
        }
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained echelon basis, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    // (pivot column, row) with each row's pivot cleared from every other row
    rows: Vec<(usize, BitVector)>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows<'a>(cols: usize, rows: impl IntoIterator<Item = &'a BitVector>) -> Self {
        let mut basis = Self::new(cols);
        for r in rows {
            basis.insert(r.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Residue of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut out = v.clone();
        for (p, r) in &self.rows {
            if out.get(*p) {
                out.xor_assign(r);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: BitVector) -> bool {
        let r = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for (_, row) in self.rows.iter_mut() {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn to_matrix(&self) -> BinaryMatrix {
        let mut rows: Vec<_> = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        BinaryMatrix {
            cols: self.cols,
            rows: rows.into_iter().map(|(_, r)| r).collect(),
        }
    }
}
