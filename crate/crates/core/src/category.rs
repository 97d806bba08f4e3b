//! Finite (nongraded) k-linear categories and their automorphisms.
//!
//! Morphisms go `x → y`; composition `g∘f` of `f: x → y` and `g: y → z` is
//! stored as a tensor indexed `[g][f][k]` for each object triple `(x, y, z)`.

use crate::algebra::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCategory {
    fp: Fp,
    objects: Vec<String>,
    dims: Vec<usize>,
    comp: Vec<Vec<u32>>,
    identities: Vec<Vec<u32>>,
}

impl LinearCategory {
    /// `dims[x*n + y] = dim Hom(x, y)`, `comp[(x*n + y)*n + z]` composes `Hom(y,z) × Hom(x,y)`.
    pub fn new(fp: Fp, objects: Vec<String>, dims: Vec<usize>, comp: Vec<Vec<u32>>, identities: Vec<Vec<u32>>) -> Result<Self> {
        let n = objects.len();
        if dims.len() != n * n || comp.len() != n * n * n || identities.len() != n {
            return Err(Error::Malformed("category data has the wrong number of blocks".into()));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let want = dims[y * n + z] * dims[x * n + y] * dims[x * n + z];
                    if comp[(x * n + y) * n + z].len() != want {
                        return Err(Error::Malformed(format!("composition block ({x},{y},{z}) has the wrong size")));
                    }
                }
            }
            if identities[x].len() != dims[x * n + x] {
                return Err(Error::Malformed(format!("identity of object {x} has the wrong length")));
            }
        }
        let comp = comp.into_iter().map(|b| b.into_iter().map(|v| v % fp.p()).collect()).collect();
        let cat = LinearCategory { fp, objects, dims, comp, identities };
        cat.check_axioms()?;
        Ok(cat)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.n_objects();
        for x in 0..n {
            for y in 0..n {
                for f in 0..self.hom_dim(x, y) {
                    let ef = self.basis(x, y, f);
                    if self.compose(x, y, y, &self.identities[y], &ef) != ef || self.compose(x, x, y, &ef, &self.identities[x]) != ef {
                        return Err(Error::Malformed(format!("identity law fails on a morphism {x} -> {y}")));
                    }
                }
            }
        }
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for f in 0..self.hom_dim(w, x) {
                            for g in 0..self.hom_dim(x, y) {
                                let gf = self.compose_basis(w, x, y, g, f).to_vec();
                                for h in 0..self.hom_dim(y, z) {
                                    let hg = self.compose_basis(x, y, z, h, g).to_vec();
                                    let left = self.compose(w, y, z, &self.basis(y, z, h), &gf);
                                    let right = self.compose(w, x, z, &hg, &self.basis(w, x, f));
                                    if left != right {
                                        return Err(Error::Malformed(format!("composition is not associative on objects {w},{x},{y},{z}")));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// A one-object category whose endomorphisms are the algebra; `g∘f = g f`.
    pub fn from_algebra(alg: &FinDimAlgebra) -> Self {
        let d = alg.dim();
        let mut comp = Vec::with_capacity(d * d * d);
        for g in 0..d {
            for f in 0..d {
                comp.extend_from_slice(alg.structure(g, f));
            }
        }
        LinearCategory { fp: alg.fp(), objects: vec!["*".into()], dims: vec![d], comp: vec![comp], identities: vec![alg.unit().to_vec()] }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.dims[x * self.n_objects() + y]
    }
    pub fn identity(&self, x: usize) -> &[u32] {
        &self.identities[x]
    }

    pub fn basis(&self, x: usize, y: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.hom_dim(x, y)];
        v[i] = 1;
        v
    }

    /// Coordinates of `g_j ∘ f_i` for basis morphisms `f_i: x → y`, `g_j: y → z`.
    pub fn compose_basis(&self, x: usize, y: usize, z: usize, g: usize, f: usize) -> &[u32] {
        let n = self.n_objects();
        let dz = self.hom_dim(x, z);
        let off = (g * self.hom_dim(x, y) + f) * dz;
        &self.comp[(x * n + y) * n + z][off..off + dz]
    }

    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[u32], f: &[u32]) -> Vec<u32> {
        let fp = self.fp;
        let mut out = vec![0u32; self.hom_dim(x, z)];
        for (gi, &gc) in g.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (fi, &fc) in f.iter().enumerate().filter(|(_, &c)| c != 0) {
                fp.axpy(&mut out, fp.mul(gc, fc), self.compose_basis(x, y, z, gi, fi));
            }
        }
        out
    }
}

/// An automorphism: an object permutation plus a matrix `Hom(x,y) → Hom(πx,πy)` for every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatAutomorphism {
    perm: Vec<usize>,
    maps: Vec<Matrix>,
}

impl CatAutomorphism {
    pub fn identity(cat: &LinearCategory) -> Self {
        let n = cat.n_objects();
        let maps = (0..n * n).map(|i| Matrix::identity(cat.fp(), cat.dims[i])).collect();
        CatAutomorphism { perm: (0..n).collect(), maps }
    }

    /// Validates invertibility, functoriality and preservation of identities.
    pub fn new(cat: &LinearCategory, perm: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let n = cat.n_objects();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Malformed("object map is not a permutation".into()));
        }
        if maps.len() != n * n {
            return Err(Error::Malformed("automorphism needs one matrix per object pair".into()));
        }
        for x in 0..n {
            for y in 0..n {
                let m = &maps[x * n + y];
                let (src, dst) = (cat.hom_dim(x, y), cat.hom_dim(perm[x], perm[y]));
                if m.cols() != src || m.rows() != dst || m.rank() != src || src != dst {
                    return Err(Error::Malformed(format!("map on Hom({x},{y}) is not invertible of the right shape")));
                }
            }
        }
        let auto = CatAutomorphism { perm, maps };
        for x in 0..n {
            if auto.apply(x, x, cat.identity(x)) != cat.identity(auto.perm[x]) {
                return Err(Error::Malformed(format!("automorphism moves the identity of {x}")));
            }
            for y in 0..n {
                for z in 0..n {
                    for f in 0..cat.hom_dim(x, y) {
                        for g in 0..cat.hom_dim(y, z) {
                            let lhs = auto.apply(x, z, cat.compose_basis(x, y, z, g, f));
                            let (px, py, pz) = (auto.perm[x], auto.perm[y], auto.perm[z]);
                            let rhs =
                                cat.compose(px, py, pz, &auto.apply(y, z, &cat.basis(y, z, g)), &auto.apply(x, y, &cat.basis(x, y, f)));
                            if lhs != rhs {
                                return Err(Error::Malformed(format!("automorphism is not functorial on {x},{y},{z}")));
                            }
                        }
                    }
                }
            }
        }
        Ok(auto)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }
    pub fn object(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// Matrix `Hom(x,y) → Hom(πx,πy)`.
    pub fn map(&self, x: usize, y: usize) -> &Matrix {
        &self.maps[x * self.perm.len() + y]
    }

    pub fn apply(&self, x: usize, y: usize, f: &[u32]) -> Vec<u32> {
        self.map(x, y).mul_vec(f)
    }

    pub fn compose_with(&self, other: &CatAutomorphism) -> CatAutomorphism {
        // (self ∘ other) on Hom(x,y): first other, then self from (πx, πy)
        let n = self.perm.len();
        let perm: Vec<usize> = (0..n).map(|x| self.perm[other.perm[x]]).collect();
        let maps = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.map(other.perm[x], other.perm[y]).mul(other.map(x, y))
            })
            .collect();
        CatAutomorphism { perm, maps }
    }

    pub fn inverse(&self) -> CatAutomorphism {
        let n = self.perm.len();
        let mut inv = vec![0; n];
        for (x, &px) in self.perm.iter().enumerate() {
            inv[px] = x;
        }
        let maps = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                self.map(inv[x], inv[y]).inverse().expect("automorphism maps are invertible")
            })
            .collect();
        CatAutomorphism { perm: inv, maps }
    }

    /// `self^k` for any integer `k`.
    pub fn power(&self, k: i64) -> CatAutomorphism {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let n = self.perm.len();
        let id = CatAutomorphism {
            perm: (0..n).collect(),
            maps: (0..n * n).map(|i| Matrix::identity(self.maps[0].fp(), self.maps[i].cols())).collect(),
        };
        (0..k.unsigned_abs()).fold(id, |acc, _| base.compose_with(&acc))
    }

    /// Smallest `k ≥ 1` with `self^k = id`, searched up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=limit {
            let is_id =
                acc.perm.iter().enumerate().all(|(x, &p)| p == x) && acc.maps.iter().all(|m| *m == Matrix::identity(m.fp(), m.rows()));
            if is_id {
                return Some(k);
            }
            acc = self.compose_with(&acc);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::dual_numbers;

    #[test]
    fn algebra_as_category() {
        let a = dual_numbers(3).unwrap();
        let c = LinearCategory::from_algebra(&a);
        assert_eq!(c.hom_dim(0, 0), 2);
        assert_eq!(c.compose(0, 0, 0, &[0, 1], &[0, 1]), vec![0, 0]);
        let fp = a.fp();
        // x ↦ -x is an automorphism of order 2
        let neg = Matrix::from_rows(fp, 2, &[vec![1, 0], vec![0, 2]]).unwrap();
        let s = CatAutomorphism::new(&c, vec![0], vec![neg]).unwrap();
        assert_eq!(s.order(10), Some(2));
        assert_eq!(s.power(-1), s);
        // x ↦ 1 + x is not multiplicative
        let bad = Matrix::from_rows(fp, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(CatAutomorphism::new(&c, vec![0], vec![bad]).is_err());
    }
}
