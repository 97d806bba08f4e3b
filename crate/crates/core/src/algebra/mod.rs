//! Finite-dimensional unital associative algebras given by structure constants.

mod constructors;
pub mod examples;
mod spec;

pub use constructors::Arrow;
pub use spec::AlgebraSpec;

use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Quotient, Subspace};
use std::fmt;

/// A finite-dimensional algebra over GF(p).
///
/// `table[(i*dim + j)*dim + k]` is the `e_k` coordinate of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    fp: Fp,
    dim: usize,
    labels: Vec<String>,
    table: Vec<u32>,
    unit: Vec<u32>,
    form: Option<Matrix>,
    radical: Option<Subspace>,
}

/// First failure found while checking a bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormViolation {
    Shape {
        rows: usize,
        cols: usize,
    },
    Asymmetric {
        i: usize,
        j: usize,
    },
    /// `(e_i e_j, e_k) != (e_i, e_j e_k)`
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
    Degenerate,
}

impl fmt::Display for FormViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormViolation::Shape { rows, cols } => write!(f, "gram matrix has shape {rows}x{cols}"),
            FormViolation::Asymmetric { i, j } => write!(f, "(e{i}, e{j}) != (e{j}, e{i})"),
            FormViolation::NotAssociative { i, j, k } => {
                write!(f, "(e{i} e{j}, e{k}) != (e{i}, e{j} e{k})")
            }
            FormViolation::Degenerate => write!(f, "form is degenerate"),
        }
    }
}

/// `Λ/[Λ,Λ]` with a fixed basis of coset representatives.
#[derive(Clone, Debug)]
pub struct Hh0 {
    quotient: Quotient,
}

impl Hh0 {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
    pub fn project(&self, a: &[u32]) -> Vec<u32> {
        self.quotient.project(a).expect("every element lies in the algebra")
    }
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        self.quotient.lift(coords)
    }
    /// Section representatives, one per quotient basis vector.
    pub fn reps(&self) -> Vec<Vec<u32>> {
        self.quotient.reps().row_vecs().collect()
    }
    pub fn projection_matrix(&self) -> Matrix {
        self.quotient.projection_matrix().expect("quotient of the whole algebra")
    }
    pub fn commutators(&self) -> &Subspace {
        self.quotient.small()
    }
}

impl FinDimAlgebra {
    /// Validate raw data and build the algebra.
    pub fn new(fp: Fp, labels: Vec<String>, table: Vec<u32>, unit: Vec<u32>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim * dim {
            return Err(Error::Malformed(format!("structure table has {} entries, expected {}", table.len(), dim * dim * dim)));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { left: dim, right: unit.len() });
        }
        let table: Vec<u32> = table.into_iter().map(|v| v % fp.p()).collect();
        let unit: Vec<u32> = unit.into_iter().map(|v| v % fp.p()).collect();
        let alg = FinDimAlgebra { fp, dim, labels, table, unit, form: None, radical: None };
        alg.check_associative()?;
        alg.check_unit()?;
        Ok(alg)
    }

    fn check_associative(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let eij = self.structure(i, j).to_vec();
                for k in 0..self.dim {
                    let left = self.multiply(&eij, &self.basis_vec(k));
                    let right = self.multiply(&self.basis_vec(i), self.structure(j, k));
                    if left != right {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    /// Attach a symmetrizing form after validating it.
    pub fn with_form(mut self, gram: Matrix) -> Result<Self> {
        self.validate_symmetrizing_form(&gram).map_err(|v| Error::InvalidForm(v.to_string()))?;
        self.form = Some(gram);
        Ok(self)
    }

    /// Record a radical basis after checking that it spans a nilpotent ideal.
    pub fn with_radical(mut self, rad: Subspace) -> Result<Self> {
        if rad.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: rad.ambient_dim() });
        }
        if !self.is_nilpotent_ideal(&rad) {
            return Err(Error::Malformed("recorded radical is not a nilpotent ideal".into()));
        }
        self.radical = Some(rad);
        Ok(self)
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn p(&self) -> u32 {
        self.fp.p()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }
    pub fn recorded_radical(&self) -> Option<&Subspace> {
        self.radical.as_ref()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// Coordinates of `e_i e_j`.
    pub fn structure(&self, i: usize, j: usize) -> &[u32] {
        let off = (i * self.dim + j) * self.dim;
        &self.table[off..off + self.dim]
    }

    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let fp = self.fp;
        let mut out = vec![0u32; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                fp.axpy(&mut out, fp.mul(ai, bj), self.structure(i, j));
            }
        }
        out
    }

    pub fn power(&self, a: &[u32], e: u64) -> Vec<u32> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    /// Matrix of `v ↦ a v`.
    pub fn left_mul_matrix(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(a, &self.basis_vec(j))).collect();
        Matrix::from_columns(self.fp, self.dim, &cols)
    }

    /// Matrix of `v ↦ v a`.
    pub fn right_mul_matrix(&self, a: &[u32]) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|j| self.multiply(&self.basis_vec(j), a)).collect();
        Matrix::from_columns(self.fp, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.structure(i, j) == self.structure(j, i)))
    }

    /// `{a : a e_i = e_i a for all i}`.
    pub fn center(&self) -> Subspace {
        let mut eqs = Matrix::zeros(self.fp, 0, self.dim);
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            let comm = self.right_mul_matrix(&e).sub(&self.left_mul_matrix(&e));
            eqs = eqs.vstack(&comm);
        }
        eqs.kernel()
    }

    /// `[Λ,Λ]`, spanned by `e_i e_j - e_j e_i`.
    pub fn commutator_subspace(&self) -> Subspace {
        let mut vecs = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                vecs.push(self.fp.sub_vec(self.structure(i, j), self.structure(j, i)));
            }
        }
        Subspace::span(self.fp, self.dim, vecs).expect("commutators live in the algebra")
    }

    pub fn hh0(&self) -> Hh0 {
        Hh0 { quotient: Quotient::of_ambient(&self.commutator_subspace()) }
    }

    /// Matrix of the map induced by `a ↦ a^p` on `Λ/[Λ,Λ]`, in the basis of [`Hh0::reps`].
    pub fn xi_p_on_hh0(&self) -> Matrix {
        let hh0 = self.hh0();
        let cols: Vec<Vec<u32>> = hh0.reps().iter().map(|r| hh0.project(&self.power(r, self.p() as u64))).collect();
        Matrix::from_columns(self.fp, hh0.dim(), &cols)
    }

    /// Checks symmetry, `(ab,c) = (a,bc)` on basis triples and nondegeneracy.
    pub fn validate_symmetrizing_form(&self, gram: &Matrix) -> std::result::Result<(), FormViolation> {
        if gram.rows() != self.dim || gram.cols() != self.dim {
            return Err(FormViolation::Shape { rows: gram.rows(), cols: gram.cols() });
        }
        for i in 0..self.dim {
            for j in 0..i {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(FormViolation::Asymmetric { i: j, j: i });
                }
            }
        }
        let pair = |a: &[u32], b: &[u32]| self.fp.dot(a, &gram.mul_vec(b));
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let lhs = pair(self.structure(i, j), &self.basis_vec(k));
                    let rhs = pair(&self.basis_vec(i), self.structure(j, k));
                    if lhs != rhs {
                        return Err(FormViolation::NotAssociative { i, j, k });
                    }
                }
            }
        }
        if gram.rank() < self.dim {
            return Err(FormViolation::Degenerate);
        }
        Ok(())
    }

    /// Product subspace `U V`.
    pub fn product_subspace(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for a in u.vectors() {
            for b in v.vectors() {
                vecs.push(self.multiply(&a, &b));
            }
        }
        Subspace::span(self.fp, self.dim, vecs).expect("products live in the algebra")
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.vectors().all(|v| {
            (0..self.dim).all(|i| {
                let e = self.basis_vec(i);
                s.contains(&self.multiply(&e, &v)).unwrap_or(false) && s.contains(&self.multiply(&v, &e)).unwrap_or(false)
            })
        })
    }

    /// Ideal whose powers reach zero within `dim + 1` steps.
    pub fn is_nilpotent_ideal(&self, s: &Subspace) -> bool {
        if !self.is_ideal(s) {
            return false;
        }
        let mut pow = s.clone();
        for _ in 0..=self.dim {
            if pow.is_zero() {
                return true;
            }
            pow = self.product_subspace(&pow, s);
        }
        pow.is_zero()
    }

    /// The Jacobson radical.
    ///
    /// Uses the recorded radical when there is one. Otherwise tries the
    /// trace-form radical `{a : tr(L_a L_b) = 0 for all b}` and, for
    /// commutative algebras, the kernel of a high power of Frobenius. A
    /// candidate is only accepted after checking it is a nilpotent ideal,
    /// which forces it to equal the radical.
    pub fn radical(&self) -> Result<Subspace> {
        if let Some(r) = &self.radical {
            return Ok(r.clone());
        }
        let trace_form = self.trace_form_radical();
        if self.is_nilpotent_ideal(&trace_form) {
            return Ok(trace_form);
        }
        if self.is_commutative() {
            let frob = self.frobenius_matrix();
            let mut k = 1u32;
            while (self.p() as u64).pow(k) < self.dim as u64 + 1 {
                k += 1;
            }
            let cand = frob.pow(k).kernel();
            if self.is_nilpotent_ideal(&cand) {
                return Ok(cand);
            }
        }
        Err(Error::RadicalUnsupported(format!(
            "trace-form candidate of dimension {} is not nilpotent in characteristic {}",
            trace_form.dim(),
            self.p()
        )))
    }

    fn trace_form_radical(&self) -> Subspace {
        let mats: Vec<Matrix> = (0..self.dim).map(|i| self.left_mul_matrix(&self.basis_vec(i))).collect();
        let gram = Matrix::from_fn(self.fp, self.dim, self.dim, |i, j| {
            let prod = mats[i].mul(&mats[j]);
            (0..self.dim).fold(0, |acc, k| self.fp.add(acc, prod.get(k, k)))
        });
        gram.kernel()
    }

    /// `a ↦ a^p`, which is linear over GF(p) when the algebra is commutative.
    fn frobenius_matrix(&self) -> Matrix {
        let cols: Vec<Vec<u32>> = (0..self.dim).map(|i| self.power(&self.basis_vec(i), self.p() as u64)).collect();
        Matrix::from_columns(self.fp, self.dim, &cols)
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, v: &[u32]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let c = self.fp.signed(c);
                match c {
                    1 => self.labels[i].clone(),
                    -1 => format!("-{}", self.labels[i]),
                    _ => format!("{c}*{}", self.labels[i]),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn dual_numbers_basics() {
        let a = dual_numbers(2).unwrap();
        let x = a.basis_vec(1);
        assert_eq!(a.multiply(&x, &x), vec![0, 0]);
        assert_eq!(a.multiply(a.unit(), &x), x);
        assert_eq!(a.center().dim(), 2);
        assert!(a.commutator_subspace().is_zero());
        assert_eq!(a.hh0().dim(), 2);
        // (a + bx)^2 = a^2 = a over GF(2)
        let xi = a.xi_p_on_hh0();
        assert_eq!(xi, Matrix::from_rows(a.fp(), 2, &[vec![1, 0], vec![0, 0]]).unwrap());
    }

    #[test]
    fn field_is_trivial() {
        let k = field(3).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.xi_p_on_hh0(), Matrix::identity(k.fp(), 1));
        assert!(k.radical().unwrap().is_zero());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let fp = Fp::new(2).unwrap();
        // e1 e1 = e0 but e0 is not a unit for e1
        let table = vec![1, 0, 0, 0, 0, 0, 1, 0];
        let err = FinDimAlgebra::new(fp, vec!["a".into(), "b".into()], table, vec![1, 0]).unwrap_err();
        assert!(matches!(err, Error::NonAssociative { .. } | Error::BadUnit(_)));
        // associative (zero product) but no unit
        let zero = vec![0; 8];
        let err = FinDimAlgebra::new(fp, vec!["a".into(), "b".into()], zero, vec![1, 0]).unwrap_err();
        assert_eq!(err, Error::BadUnit(0));
    }

    #[test]
    fn nonassociative_table_reports_a_triple() {
        let fp = Fp::new(3).unwrap();
        // basis 1, u with u*u = 1 + u breaks nothing; instead build a 3-dim table with
        // u*v = u, v*v = v, v*u = 0 and u*u = v, so (uu)u = vu = 0 but u(uu) = uv = u.
        let mut table = vec![0u32; 27];
        let set = |t: &mut Vec<u32>, i: usize, j: usize, k: usize| t[(i * 3 + j) * 3 + k] = 1;
        for i in 0..3 {
            set(&mut table, 0, i, i);
            set(&mut table, i, 0, i);
        }
        set(&mut table, 1, 2, 1);
        set(&mut table, 2, 2, 2);
        set(&mut table, 1, 1, 2);
        let err = FinDimAlgebra::new(fp, vec!["1".into(), "u".into(), "v".into()], table, vec![1, 0, 0]).unwrap_err();
        assert!(matches!(err, Error::NonAssociative { .. }));
    }

    #[test]
    fn matrix_algebra_over_gf2() {
        let m2 = matrix_algebra(&field(2).unwrap(), 2);
        assert_eq!(m2.dim(), 4);
        assert_eq!(m2.center().dim(), 1);
        assert_eq!(m2.commutator_subspace().dim(), 3);
        assert_eq!(m2.hh0().dim(), 1);
        // tr(a^2) = tr(a)^2 over GF(2)
        assert_eq!(m2.xi_p_on_hh0(), Matrix::identity(m2.fp(), 1));
        // E11 * E12 = E12
        let e = |a: usize, b: usize| m2.basis_vec(a * 2 + b);
        assert_eq!(m2.multiply(&e(0, 0), &e(0, 1)), e(0, 1));
    }

    #[test]
    fn matrix_algebra_over_gf3_and_dual_numbers() {
        let m2 = matrix_algebra(&field(3).unwrap(), 2);
        assert_eq!(m2.commutator_subspace().dim(), 3);
        assert!(m2.radical().unwrap().is_zero());
        let m2d = matrix_algebra(&dual_numbers(2).unwrap(), 2);
        assert_eq!(m2d.dim(), 8);
        assert_eq!(m2d.center().dim(), 2);
        assert_eq!(matrix_algebra(&dual_numbers(3).unwrap(), 1), dual_numbers(3).unwrap());
    }

    #[test]
    fn forms() {
        let a = dual_numbers(2).unwrap();
        let fp = a.fp();
        let good = Matrix::from_rows(fp, 2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(a.validate_symmetrizing_form(&good), Ok(()));
        assert_eq!(a.validate_symmetrizing_form(&Matrix::zeros(fp, 2, 2)), Err(FormViolation::Degenerate));
        // (1*x, x) = 1 but (1, x*x) = 0
        let bad = Matrix::identity(fp, 2);
        assert_eq!(a.validate_symmetrizing_form(&bad), Err(FormViolation::NotAssociative { i: 0, j: 1, k: 1 }));
        for (_, alg) in symmetric_fixtures() {
            assert_eq!(alg.validate_symmetrizing_form(alg.form().unwrap()), Ok(()));
        }
    }

    #[test]
    fn quiver_constructor() {
        let fp = Fp::new(2).unwrap();
        let kk = FinDimAlgebra::monomial_quiver_algebra(fp, 2, &[], &[]).unwrap();
        assert_eq!(kk.dim(), 2);
        assert_eq!(kk.unit(), &[1, 1]);
        let local = three_dim_local(2).unwrap();
        assert_eq!(local.labels(), &["1", "x", "y"]);
        assert_eq!(local.radical().unwrap().dim(), 2);
        // x with no relation: infinitely many paths
        let err = FinDimAlgebra::monomial_quiver_algebra(fp, 1, &[Arrow::new("x", 0, 0)], &[]).unwrap_err();
        assert_eq!(err, Error::InfinitePaths);
        // x^2 = 0 but y is free
        let arrows = [Arrow::new("x", 0, 0), Arrow::new("y", 0, 0)];
        let err = FinDimAlgebra::monomial_quiver_algebra(fp, 1, &arrows, &[vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::InfinitePaths);
        // A_2 quiver a: 0 -> 1
        let a2 = FinDimAlgebra::monomial_quiver_algebra(fp, 2, &[Arrow::new("a", 0, 1)], &[]).unwrap();
        assert_eq!(a2.labels(), &["e0", "e1", "a"]);
        assert_eq!(a2.multiply(&[1, 0, 0], &[0, 0, 1]), vec![0, 0, 1]);
        assert_eq!(a2.multiply(&[0, 0, 1], &[1, 0, 0]), vec![0, 0, 0]);
        assert_eq!(a2.center().dim(), 1);
        // a cycle of length two with both composites killed
        let arrows = [Arrow::new("a", 0, 1), Arrow::new("b", 1, 0)];
        let alg = FinDimAlgebra::monomial_quiver_algebra(fp, 2, &arrows, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(alg.dim(), 4);
    }

    #[test]
    fn group_constructor() {
        let fp = Fp::new(2).unwrap();
        let triv = FinDimAlgebra::group_algebra(fp, &[vec![0]], None).unwrap();
        assert_eq!(triv.dim(), 1);
        assert!(FinDimAlgebra::group_algebra(fp, &[vec![0, 0], vec![0, 0]], None).is_err());
        assert!(FinDimAlgebra::group_algebra(fp, &[vec![0, 1], vec![1, 1]], None).is_err());
        let c3 = cyclic_group_algebra(2, 3).unwrap();
        assert!(c3.radical().unwrap().is_zero());
        let c2 = cyclic_group_algebra(2, 2).unwrap();
        assert_eq!(c2.radical().unwrap().dim(), 1);
        assert_eq!(klein_four_group_algebra().unwrap().center().dim(), 4);
    }

    #[test]
    fn radicals() {
        assert_eq!(dual_numbers(2).unwrap().radical().unwrap(), Subspace::span(Fp::new(2).unwrap(), 2, [vec![0, 1]]).unwrap());
        let v4 = klein_four_group_algebra().unwrap();
        let j = v4.radical().unwrap();
        assert_eq!(j.dim(), 3);
        // augmentation ideal: coordinates sum to zero
        assert!(j.vectors().all(|v| v.iter().sum::<u32>() % 2 == 0));
    }

    #[test]
    fn radical_fallbacks_without_recorded_data() {
        // Klein four group algebra with the recorded radical stripped: the trace
        // form vanishes identically in characteristic 2, Frobenius takes over.
        let v4 = klein_four_group_algebra().unwrap();
        let bare = FinDimAlgebra::new(v4.fp(), v4.labels().to_vec(), v4.table.clone(), v4.unit().to_vec()).unwrap();
        assert_eq!(bare.radical().unwrap(), v4.radical().unwrap());
        // M_2(GF(3)) stripped of data: semisimple, the trace form is nondegenerate
        let m2 = matrix_algebra(&field(3).unwrap(), 2);
        let bare = FinDimAlgebra::new(m2.fp(), m2.labels().to_vec(), m2.table.clone(), m2.unit().to_vec()).unwrap();
        assert!(bare.radical().unwrap().is_zero());
        // over GF(2) the regular trace form of M_2 vanishes and the algebra is
        // not commutative, so neither strategy applies
        let m2 = matrix_algebra(&field(2).unwrap(), 2);
        let bare = FinDimAlgebra::new(m2.fp(), m2.labels().to_vec(), m2.table.clone(), m2.unit().to_vec()).unwrap();
        assert!(matches!(bare.radical(), Err(Error::RadicalUnsupported(_))));
    }
}
