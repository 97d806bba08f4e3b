use super::{Fp, Matrix};
use crate::error::{Error, Result};

/// A subspace of GF(p)^n stored by its canonical RREF basis, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(fp: Fp, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(fp, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(fp: Fp, ambient: usize) -> Self {
        Self::from_matrix(&Matrix::identity(fp, ambient))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let basis = Matrix::from_fn(m.fp(), rank, m.cols(), |i, j| r.get(i, j));
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span<I>(fp: Fp, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let rows: Vec<Vec<u32>> = vectors.into_iter().collect();
        Ok(Self::from_matrix(&Matrix::from_rows(fp, ambient, &rows)?))
    }

    pub fn fp(&self) -> Fp {
        self.basis.fp()
    }
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn vectors(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.fp() != other.fp() {
            return Err(Error::FieldMismatch(self.fp().p(), other.fp().p()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace (pivot entries cleared).
    pub fn reduce(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { left: self.ambient, right: v.len() });
        }
        let fp = self.fp();
        let mut w: Vec<u32> = v.iter().map(|&x| x % fp.p()).collect();
        for (row, &c) in self.pivots.iter().enumerate() {
            let f = w[c];
            if f != 0 {
                fp.axpy(&mut w, fp.neg(f), self.basis.row(row));
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&c| v[c] % self.fp().p()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        for v in self.vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Intersection, computed as the kernel of the stacked annihilator equations.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let eqs = self.annihilator().basis.vstack(other.annihilator().basis());
        Ok(eqs.kernel())
    }

    /// Representatives completing `small`'s basis to one of `self`.
    pub fn quotient_basis(&self, small: &Subspace) -> Result<Vec<Vec<u32>>> {
        Ok(Quotient::new(self, small)?.reps().row_vecs().collect())
    }

    /// `{v : m v ∈ target}`.
    pub fn preimage(m: &Matrix, target: &Subspace) -> Result<Subspace> {
        if m.rows() != target.ambient {
            return Err(Error::DimensionMismatch { left: m.rows(), right: target.ambient });
        }
        let eqs = target.annihilator().basis.mul(m);
        Ok(eqs.kernel())
    }

    /// Image of this subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch { left: m.cols(), right: self.ambient });
        }
        Subspace::span(self.fp(), m.rows(), self.vectors().map(|v| m.mul_vec(&v)))
    }
}

/// A quotient `big / small` with canonical coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    small: Subspace,
    reps: Matrix,
    rep_pivots: Vec<usize>,
}

impl Quotient {
    pub fn new(big: &Subspace, small: &Subspace) -> Result<Self> {
        big.check(small)?;
        if !small.is_subspace_of(big)? {
            return Err(Error::NotContained);
        }
        let reduced: Vec<Vec<u32>> = big.vectors().map(|v| small.reduce(&v)).collect::<Result<_>>()?;
        let q = Subspace::span(big.fp(), big.ambient, reduced)?;
        Ok(Quotient { small: small.clone(), reps: q.basis, rep_pivots: q.pivots })
    }

    /// Quotient of the whole ambient space.
    pub fn of_ambient(small: &Subspace) -> Self {
        Self::new(&Subspace::full(small.fp(), small.ambient), small).expect("small lies in the ambient space")
    }

    pub fn dim(&self) -> usize {
        self.reps.rows()
    }
    pub fn small(&self) -> &Subspace {
        &self.small
    }
    pub fn ambient_dim(&self) -> usize {
        self.small.ambient
    }
    pub fn reps(&self) -> &Matrix {
        &self.reps
    }
    pub fn rep(&self, j: usize) -> Vec<u32> {
        self.reps.row(j).to_vec()
    }

    /// Coordinates of the class of `v`; errors if `v` is outside the big space.
    pub fn project(&self, v: &[u32]) -> Result<Vec<u32>> {
        let fp = self.small.fp();
        let mut w = self.small.reduce(v)?;
        let coords: Vec<u32> = self.rep_pivots.iter().map(|&c| w[c]).collect();
        for (j, &c) in coords.iter().enumerate() {
            fp.axpy(&mut w, fp.neg(c), self.reps.row(j));
        }
        if w.iter().any(|&x| x != 0) {
            return Err(Error::NotContained);
        }
        Ok(coords)
    }

    /// A representative of the class with the given coordinates.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        let fp = self.small.fp();
        let mut v = vec![0u32; self.ambient_dim()];
        for (j, &c) in coords.iter().enumerate() {
            fp.axpy(&mut v, c, self.reps.row(j));
        }
        v
    }

    /// Matrix of the projection `ambient -> quotient` (assumes `big` is the whole ambient space).
    pub fn projection_matrix(&self) -> Result<Matrix> {
        let fp = self.small.fp();
        let n = self.ambient_dim();
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut e = vec![0u32; n];
                e[i] = 1;
                self.project(&e)
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(fp, self.dim(), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let f = two();
        let e1 = Subspace::span(f, 2, [vec![1, 0]]).unwrap();
        let e2 = Subspace::span(f, 2, [vec![0, 1]]).unwrap();
        let e12 = Subspace::span(f, 2, [vec![1, 1]]).unwrap();
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.sum(&e12).unwrap(), Subspace::full(f, 2));
        let v = Subspace::span(f, 3, [vec![1, 1, 0]]).unwrap();
        assert_eq!(Subspace::preimage(&Matrix::identity(f, 3), &v).unwrap(), v);
    }

    #[test]
    fn errors() {
        let f = two();
        let a = Subspace::full(f, 2);
        let b = Subspace::full(f, 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        let e1 = Subspace::span(f, 2, [vec![1, 0]]).unwrap();
        assert_eq!(e1.quotient_basis(&a), Err(Error::NotContained));
    }

    #[test]
    fn quotient_round_trip() {
        let f = Fp::new(3).unwrap();
        let small = Subspace::span(f, 3, [vec![1, 2, 0]]).unwrap();
        let q = Quotient::of_ambient(&small);
        assert_eq!(q.dim(), 2);
        for v in [[1u32, 0, 0], [0, 1, 2], [2, 2, 1]] {
            let c = q.project(&v).unwrap();
            let back = q.lift(&c);
            assert!(small.contains(&f.sub_vec(&v, &back)).unwrap());
        }
        assert_eq!(q.project(&[1, 2, 0]).unwrap(), vec![0, 0]);
    }
}
