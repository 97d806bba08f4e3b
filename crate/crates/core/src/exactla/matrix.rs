use super::{Fp, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    fp: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(fp: Fp, rows: usize, cols: usize) -> Self {
        Matrix { fp, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fp: Fp, n: usize) -> Self {
        let mut m = Self::zeros(fp, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from row vectors; every row must have length `cols`. Entries are reduced mod p.
    pub fn from_rows(fp: Fp, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { left: cols, right: r.len() });
            }
            data.extend(r.iter().map(|&v| v % fp.p()));
        }
        Ok(Matrix { fp, rows: rows.len(), cols, data })
    }

    pub fn from_fn(fp: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % fp.p());
            }
        }
        Matrix { fp, rows, cols, data }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(fp: Fp, rows: usize, columns: &[Vec<u32>]) -> Self {
        Self::from_fn(fp, rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.fp.p();
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: u32) {
        let k = i * self.cols + j;
        self.data[k] = self.fp.add(self.data[k], v % self.fp.p());
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.rows).map(move |i| self.row(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.fp, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Matrix product. Panics on a shape mismatch, which is always a caller bug.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let fp = self.fp;
        let p = fp.p() as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix { fp, rows: self.rows, cols: other.cols, data: out.into_iter().map(|v| v as u32).collect() }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "vector length does not match matrix");
        (0..self.rows).map(|i| self.fp.dot(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.fp.add_vec(&self.data, &other.data);
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.fp.sub_vec(&self.data, &other.data);
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        Matrix { fp: self.fp, rows: self.rows, cols: self.cols, data: self.fp.scale_vec(c, &self.data) }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.fp, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { fp: self.fp, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(
            self.fp,
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j)
                } else {
                    other.get(i, j - self.cols)
                }
            },
        )
    }

    /// Reduced row-echelon form, rank and pivot columns.
    ///
    /// Columns are scanned left to right; the pivot row is the topmost
    /// remaining row with a nonzero entry in that column.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let fp = self.fp;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = fp.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let k = r * m.cols + j;
                m.data[k] = fp.mul(m.data[k], inv);
            }
            let pivot_row: Vec<u32> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                let nf = fp.neg(f);
                let base = i * m.cols + c;
                for (off, &pv) in pivot_row.iter().enumerate() {
                    m.data[base + off] = fp.fma(m.data[base + off], nf, pv);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Matrix, usize) {
        let (m, piv) = self.rref_with_pivots();
        (m, piv.len())
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = self.fp.neg(r.get(row, free));
            }
            vectors.push(v);
        }
        Subspace::span(self.fp, self.cols, vectors).expect("kernel vectors have the right length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.fp, self.rows, (0..self.cols).map(|j| self.column(j))).expect("columns have the right length")
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.fp, n));
        let (r, piv) = aug.rref_with_pivots();
        if piv.len() < n || (n > 0 && piv[n - 1] != n - 1) {
            return None;
        }
        Some(Self::from_fn(self.fp, n, n, |i, j| r.get(i, n + j)))
    }

    /// One solution `x` of `self * x = b`, if any.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let bcol = Matrix::from_fn(self.fp, self.rows, 1, |i, _| b[i]);
        let (r, piv) = self.hstack(&bcol).rref_with_pivots();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &c) in piv.iter().enumerate() {
            x[c] = r.get(row, self.cols);
        }
        Some(x)
    }
}
