//! The dual numbers `Λ = k[x]/x²`, matrices over `Λ`, and the enveloping algebra `Λ^op ⊗ Λ`.

use crate::exactla::Fp;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `a + b·x` in `Λ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lam {
    pub a: u32,
    pub b: u32,
}

impl Lam {
    pub const ZERO: Lam = Lam { a: 0, b: 0 };
    pub const ONE: Lam = Lam { a: 1, b: 0 };
    pub const X: Lam = Lam { a: 0, b: 1 };

    pub fn new(a: u32, b: u32) -> Self {
        Lam { a, b }
    }
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
    pub fn add(self, fp: Fp, o: Lam) -> Lam {
        Lam { a: fp.add(self.a, o.a), b: fp.add(self.b, o.b) }
    }
    pub fn sub(self, fp: Fp, o: Lam) -> Lam {
        Lam { a: fp.sub(self.a, o.a), b: fp.sub(self.b, o.b) }
    }
    pub fn neg(self, fp: Fp) -> Lam {
        Lam { a: fp.neg(self.a), b: fp.neg(self.b) }
    }
    pub fn mul(self, fp: Fp, o: Lam) -> Lam {
        Lam { a: fp.mul(self.a, o.a), b: fp.add(fp.mul(self.a, o.b), fp.mul(self.b, o.a)) }
    }
    pub fn scale(self, fp: Fp, c: u32) -> Lam {
        Lam { a: fp.mul(c, self.a), b: fp.mul(c, self.b) }
    }
    pub fn pow(self, fp: Fp, e: u32) -> Lam {
        (0..e).fold(Lam::ONE, |acc, _| acc.mul(fp, self))
    }
}

impl fmt::Display for Lam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "x"),
            (0, b) => write!(f, "{b}x"),
            (a, 1) => write!(f, "{a}+x"),
            (a, b) => write!(f, "{a}+{b}x"),
        }
    }
}

/// A dense matrix with entries in `Λ`, acting on column vectors of free right `Λ`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Lam>,
}

impl LamMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LamMatrix { rows, cols, data: vec![Lam::ZERO; rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Lam::ONE)
    }
    pub fn scalar(n: usize, c: Lam) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Lam) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        LamMatrix { rows, cols, data }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> Lam {
        self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: Lam) {
        self.data[i * self.cols + j] = v;
    }
    pub fn entries(&self) -> &[Lam] {
        &self.data
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }
    pub fn mul(&self, fp: Fp, o: &LamMatrix) -> LamMatrix {
        assert_eq!(self.cols, o.rows, "Λ-matrix shapes do not chain");
        LamMatrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(Lam::ZERO, |acc, k| acc.add(fp, self.get(i, k).mul(fp, o.get(k, j))))
        })
    }
    pub fn add(&self, fp: Fp, o: &LamMatrix) -> LamMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        LamMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(fp, *b)).collect() }
    }
    pub fn sub(&self, fp: Fp, o: &LamMatrix) -> LamMatrix {
        self.add(fp, &o.scale(fp, fp.neg(1)))
    }
    pub fn scale(&self, fp: Fp, c: u32) -> LamMatrix {
        LamMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| e.scale(fp, c)).collect() }
    }
    pub fn trace(&self, fp: Fp) -> Lam {
        (0..self.rows.min(self.cols)).fold(Lam::ZERO, |acc, i| acc.add(fp, self.get(i, i)))
    }
    /// Entries as `k`-coordinates `(a, b)` in row-major order.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.iter().flat_map(|e| [e.a, e.b]).collect()
    }
    pub fn unflatten(rows: usize, cols: usize, v: &[u32]) -> LamMatrix {
        assert_eq!(v.len(), 2 * rows * cols);
        LamMatrix { rows, cols, data: v.chunks(2).map(|c| Lam::new(c[0], c[1])).collect() }
    }
}

/// An element of `Λ^op ⊗ Λ` on the basis `1⊗1, x⊗1, 1⊗x, x⊗x`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bimod(pub [u32; 4]);

impl Bimod {
    pub const ZERO: Bimod = Bimod([0, 0, 0, 0]);
    pub const ONE: Bimod = Bimod([1, 0, 0, 0]);
    /// `x⊗1`
    pub const X_LEFT: Bimod = Bimod([0, 1, 0, 0]);
    /// `1⊗x`
    pub const X_RIGHT: Bimod = Bimod([0, 0, 1, 0]);

    pub fn add(self, fp: Fp, o: Bimod) -> Bimod {
        Bimod(std::array::from_fn(|i| fp.add(self.0[i], o.0[i])))
    }
    pub fn scale(self, fp: Fp, c: u32) -> Bimod {
        Bimod(self.0.map(|v| fp.mul(c, v)))
    }
    /// Basis index bits: bit 0 is the left `x`, bit 1 the right one.
    pub fn mul(self, fp: Fp, o: Bimod) -> Bimod {
        let mut out = [0u32; 4];
        for i in 0..4 {
            for j in 0..4 {
                if i & j == 0 {
                    out[i | j] = fp.fma(out[i | j], self.0[i], o.0[j]);
                }
            }
        }
        Bimod(out)
    }
    /// `d_± = x⊗1 ± 1⊗x`.
    pub fn d(fp: Fp, sign: i64) -> Bimod {
        Bimod::X_LEFT.add(fp, Bimod::X_RIGHT.scale(fp, fp.sign(sign)))
    }

    /// Left multiplication on `Λ^op ⊗ Λ ≅ Λ ⊕ Λ` (right module on `1⊗1`, `x⊗1`).
    pub fn as_right_module_map(self) -> [[Lam; 2]; 2] {
        let [a, b, c, d] = self.0;
        [[Lam::new(a, c), Lam::ZERO], [Lam::new(b, d), Lam::new(a, c)]]
    }
}

/// A matrix over `Λ^op ⊗ Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimodMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Bimod>,
}

impl BimodMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BimodMatrix { rows, cols, data: vec![Bimod::ZERO; rows * cols] }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> Bimod {
        self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: Bimod) {
        self.data[i * self.cols + j] = v;
    }
    pub fn mul(&self, fp: Fp, o: &BimodMatrix) -> BimodMatrix {
        assert_eq!(self.cols, o.rows, "Λ^e-matrix shapes do not chain");
        let mut out = BimodMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let v = (0..self.cols).fold(Bimod::ZERO, |acc, k| acc.add(fp, self.get(i, k).mul(fp, o.get(k, j))));
                out.set(i, j, v);
            }
        }
        out
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| *e == Bimod::ZERO)
    }
    /// The same map on `Λ^{2·cols} → Λ^{2·rows}`.
    pub fn to_lam(&self) -> LamMatrix {
        let mut m = LamMatrix::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = self.get(i, j).as_right_module_map();
                for (r, row) in block.iter().enumerate() {
                    for (c, &v) in row.iter().enumerate() {
                        m.set(2 * i + r, 2 * j + c, v);
                    }
                }
            }
        }
        m
    }
}
