//! Bounded cochain complexes of free `Λ`-modules and chain maps modulo homotopy.
//!
//! Everything here is solved by brute linear algebra over `k`, so it doubles
//! as the oracle for the closed-form calculus in [`super::morphism`].

use super::lambda::{Lam, LamMatrix};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Quotient, Subspace};
use std::ops::RangeInclusive;

/// `X^lo → X^{lo+1} → ⋯`, with `X^i = Λ^{ranks[i-lo]}` and `d^i: X^i → X^{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamComplex {
    lo: i32,
    ranks: Vec<usize>,
    diffs: Vec<LamMatrix>,
}

impl LamComplex {
    pub fn new(lo: i32, ranks: Vec<usize>, diffs: Vec<LamMatrix>) -> Result<Self> {
        if ranks.is_empty() || diffs.len() + 1 != ranks.len() {
            return Err(Error::Malformed("a complex needs one differential between consecutive degrees".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k + 1] || d.cols() != ranks[k] {
                return Err(Error::Malformed(format!("differential out of degree {} has the wrong shape", lo + k as i32)));
            }
        }
        Ok(LamComplex { lo, ranks, diffs })
    }

    /// `Λ^{[m,n]}`: `Λ` in degrees `m..=n` with differential `x`.
    pub fn interval(m: i32, n: i32) -> Self {
        let len = (n - m + 1).max(1) as usize;
        LamComplex { lo: m, ranks: vec![1; len], diffs: vec![LamMatrix::scalar(1, Lam::X); len - 1] }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }
    pub fn hi(&self) -> i32 {
        self.lo + self.ranks.len() as i32 - 1
    }
    pub fn degrees(&self) -> RangeInclusive<i32> {
        self.lo..=self.hi()
    }
    pub fn rank(&self, i: i32) -> usize {
        if self.degrees().contains(&i) {
            self.ranks[(i - self.lo) as usize]
        } else {
            0
        }
    }

    /// `d^i: X^i → X^{i+1}`, a zero matrix of the right shape when either side vanishes.
    pub fn diff(&self, i: i32) -> LamMatrix {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            LamMatrix::zeros(self.rank(i + 1), self.rank(i))
        }
    }

    /// `X[t]`: `X[t]^i = X^{i+t}` with differential `(-1)^t d`.
    pub fn shift(&self, fp: Fp, t: i32) -> Self {
        let sign = fp.sign(t as i64);
        LamComplex { lo: self.lo - t, ranks: self.ranks.clone(), diffs: self.diffs.iter().map(|d| d.scale(fp, sign)).collect() }
    }

    pub fn is_complex(&self, fp: Fp) -> bool {
        self.diffs.windows(2).all(|w| w[1].mul(fp, &w[0]).is_zero())
    }
}

/// A degree-preserving map of graded free modules, stored per source degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    lo: i32,
    comps: Vec<LamMatrix>,
}

impl ChainMap {
    pub fn zero(a: &LamComplex, b: &LamComplex) -> Self {
        ChainMap { lo: a.lo(), comps: a.degrees().map(|i| LamMatrix::zeros(b.rank(i), a.rank(i))).collect() }
    }

    /// Builds `f` from `comp(i)` over the source degrees.
    pub fn from_fn(a: &LamComplex, b: &LamComplex, mut comp: impl FnMut(i32) -> LamMatrix) -> Result<Self> {
        let comps: Vec<LamMatrix> = a.degrees().map(&mut comp).collect();
        for (i, c) in a.degrees().zip(&comps) {
            if c.rows() != b.rank(i) || c.cols() != a.rank(i) {
                return Err(Error::Malformed(format!("chain map component in degree {i} has the wrong shape")));
            }
        }
        Ok(ChainMap { lo: a.lo(), comps })
    }

    /// The component in source degree `i`; empty outside the source.
    pub fn comp(&self, i: i32) -> Option<&LamMatrix> {
        usize::try_from(i - self.lo).ok().and_then(|k| self.comps.get(k))
    }

    fn comp_or_zero(&self, i: i32, a: &LamComplex, b: &LamComplex) -> LamMatrix {
        self.comp(i).cloned().unwrap_or_else(|| LamMatrix::zeros(b.rank(i), a.rank(i)))
    }

    pub fn add(&self, fp: Fp, o: &ChainMap) -> ChainMap {
        ChainMap { lo: self.lo, comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(fp, b)).collect() }
    }
    pub fn sub(&self, fp: Fp, o: &ChainMap) -> ChainMap {
        ChainMap { lo: self.lo, comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(fp, b)).collect() }
    }
    pub fn scale(&self, fp: Fp, c: u32) -> ChainMap {
        ChainMap { lo: self.lo, comps: self.comps.iter().map(|a| a.scale(fp, c)).collect() }
    }
    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(LamMatrix::is_zero)
    }

    /// `f[t]`, with components `f[t]^i = f^{i+t}` and no sign.
    pub fn shift(&self, t: i32) -> ChainMap {
        ChainMap { lo: self.lo - t, comps: self.comps.clone() }
    }

    /// `g∘f` for `f: a → b` (`self`) and `g: b → c`.
    pub fn then(&self, fp: Fp, g: &ChainMap, a: &LamComplex, b: &LamComplex, c: &LamComplex) -> ChainMap {
        ChainMap { lo: a.lo(), comps: a.degrees().map(|i| g.comp_or_zero(i, b, c).mul(fp, &self.comp_or_zero(i, a, b))).collect() }
    }

    /// `d_b f - f d_a` in the degrees `a.lo()-1 ..= a.hi()`.
    pub fn defect(&self, fp: Fp, a: &LamComplex, b: &LamComplex) -> Vec<LamMatrix> {
        chain_defect(fp, a, b, self)
    }

    pub fn is_chain_map(&self, fp: Fp, a: &LamComplex, b: &LamComplex) -> bool {
        chain_defect(fp, a, b, self).iter().all(LamMatrix::is_zero)
    }
}

fn chain_defect(fp: Fp, a: &LamComplex, b: &LamComplex, f: &ChainMap) -> Vec<LamMatrix> {
    (a.lo() - 1..=a.hi())
        .map(|i| {
            let left = b.diff(i).mul(fp, &f.comp_or_zero(i, a, b));
            let right = f.comp_or_zero(i + 1, a, b).mul(fp, &a.diff(i));
            left.sub(fp, &right)
        })
        .collect()
}

/// Degree-0 maps `a → b` and homotopies `a^i → b^{i-1}`, with their `k`-linear coordinates.
pub struct HomSpace<'a> {
    fp: Fp,
    a: &'a LamComplex,
    b: &'a LamComplex,
    map_offsets: Vec<usize>,
    htpy_offsets: Vec<usize>,
}

impl<'a> HomSpace<'a> {
    pub fn new(fp: Fp, a: &'a LamComplex, b: &'a LamComplex) -> Self {
        let offsets = |shift: i32| {
            let mut out = vec![0];
            for i in a.degrees() {
                out.push(out.last().copied().unwrap_or(0) + 2 * a.rank(i) * b.rank(i - shift));
            }
            out
        };
        HomSpace { fp, a, b, map_offsets: offsets(0), htpy_offsets: offsets(1) }
    }

    pub fn map_dim(&self) -> usize {
        *self.map_offsets.last().expect("nonempty")
    }
    fn htpy_dim(&self) -> usize {
        *self.htpy_offsets.last().expect("nonempty")
    }

    pub fn flatten(&self, f: &ChainMap) -> Vec<u32> {
        self.a.degrees().flat_map(|i| f.comp_or_zero(i, self.a, self.b).flatten()).collect()
    }

    pub fn unflatten(&self, v: &[u32]) -> ChainMap {
        let comps = self
            .a
            .degrees()
            .enumerate()
            .map(|(k, i)| LamMatrix::unflatten(self.b.rank(i), self.a.rank(i), &v[self.map_offsets[k]..self.map_offsets[k + 1]]))
            .collect();
        ChainMap { lo: self.a.lo(), comps }
    }

    fn htpy_unflatten(&self, v: &[u32]) -> Vec<LamMatrix> {
        self.a
            .degrees()
            .enumerate()
            .map(|(k, i)| LamMatrix::unflatten(self.b.rank(i - 1), self.a.rank(i), &v[self.htpy_offsets[k]..self.htpy_offsets[k + 1]]))
            .collect()
    }

    fn htpy_at(&self, h: &[LamMatrix], i: i32) -> LamMatrix {
        usize::try_from(i - self.a.lo())
            .ok()
            .and_then(|k| h.get(k).cloned())
            .unwrap_or_else(|| LamMatrix::zeros(self.b.rank(i - 1), self.a.rank(i)))
    }

    /// `d_b h + h d_a` as a degree-0 map.
    pub fn boundary_of(&self, h: &[LamMatrix]) -> ChainMap {
        let fp = self.fp;
        let comps = self
            .a
            .degrees()
            .map(|i| {
                let left = self.b.diff(i - 1).mul(fp, &self.htpy_at(h, i));
                left.add(fp, &self.htpy_at(h, i + 1).mul(fp, &self.a.diff(i)))
            })
            .collect();
        ChainMap { lo: self.a.lo(), comps }
    }

    fn linear(&self, src_dim: usize, mut image: impl FnMut(&[u32]) -> Vec<u32>) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..src_dim)
            .map(|k| {
                let mut e = vec![0; src_dim];
                e[k] = 1;
                image(&e)
            })
            .collect();
        let rows = cols.first().map_or(0, Vec::len);
        Matrix::from_columns(self.fp, rows, &cols)
    }

    /// Degree-0 chain maps, as a subspace of the flattened coordinates.
    pub fn cycles(&self) -> Subspace {
        self.linear(self.map_dim(), |v| {
            chain_defect(self.fp, self.a, self.b, &self.unflatten(v)).iter().flat_map(LamMatrix::flatten).collect()
        })
        .kernel()
    }

    /// The boundary map restricted to the degrees in `eqs`.
    fn boundary_matrix(&self, eqs: &RangeInclusive<i32>) -> Matrix {
        let keep: Vec<usize> = self.a.degrees().enumerate().filter(|(_, i)| eqs.contains(i)).map(|(k, _)| k).collect();
        let m = self.linear(self.htpy_dim(), |v| {
            let f = self.flatten(&self.boundary_of(&self.htpy_unflatten(v)));
            keep.iter().flat_map(|&k| f[self.map_offsets[k]..self.map_offsets[k + 1]].to_vec()).collect()
        });
        if m.rows() == 0 && self.htpy_dim() == 0 {
            Matrix::zeros(self.fp, 0, 0)
        } else {
            m
        }
    }

    /// Null-homotopic maps.
    pub fn boundaries(&self) -> Subspace {
        let m = self.boundary_matrix(&self.a.degrees());
        if m.cols() == 0 {
            return Subspace::zero(self.fp, self.map_dim());
        }
        m.image()
    }

    /// Chain maps modulo homotopy.
    pub fn homology(&self) -> Result<Quotient> {
        Quotient::new(&self.cycles(), &self.boundaries())
    }

    /// A homotopy `h` with `f = d h + h d` in the degrees `eqs`, if one exists.
    pub fn null_homotopy(&self, f: &ChainMap, eqs: RangeInclusive<i32>) -> Option<Vec<LamMatrix>> {
        let m = self.boundary_matrix(&eqs);
        let target: Vec<u32> = {
            let flat = self.flatten(f);
            self.a
                .degrees()
                .enumerate()
                .filter(|(_, i)| eqs.contains(i))
                .flat_map(|(k, _)| flat[self.map_offsets[k]..self.map_offsets[k + 1]].to_vec())
                .collect()
        };
        if target.iter().all(|&c| c == 0) {
            return Some(self.htpy_unflatten(&vec![0; self.htpy_dim()]));
        }
        if m.cols() == 0 {
            return None;
        }
        m.solve(&target).map(|h| self.htpy_unflatten(&h))
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.null_homotopy(f, self.a.degrees()).is_some()
    }
}
