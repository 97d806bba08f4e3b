//! Külshammer and Reynolds ideals of a finite-dimensional algebra, and the
//! dimension fingerprints built from them.

use crate::algebra::FinDimAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use serde::Serialize;
use std::fmt;

/// `T_r = ker(ξ_p^r)` inside `Λ/[Λ,Λ]`, in the coordinates of the HH₀ representatives.
pub fn t_r(alg: &FinDimAlgebra, r: usize) -> Subspace {
    alg.xi_p_on_hh0().pow(r as u32).kernel()
}

/// Lifts of a `T_r` basis back to elements of the algebra.
fn lifted_t_r(alg: &FinDimAlgebra, r: usize) -> Vec<Vec<u32>> {
    let hh0 = alg.hh0();
    t_r(alg, r).vectors().map(|v| hh0.lift(&v)).collect()
}

/// `{a ∈ Z(Λ) : a b ∈ [Λ,Λ] and b a ∈ [Λ,Λ] for every b in `vs`}`.
fn central_annihilator(alg: &FinDimAlgebra, vs: &[Vec<u32>]) -> Subspace {
    let z = alg.center();
    let zmat = z.basis().transpose();
    let proj = alg.hh0().projection_matrix();
    let mut eqs = Matrix::zeros(alg.fp(), 0, z.dim());
    for b in vs {
        eqs = eqs.vstack(&proj.mul(&alg.right_mul_matrix(b)).mul(&zmat));
        eqs = eqs.vstack(&proj.mul(&alg.left_mul_matrix(b)).mul(&zmat));
    }
    let coeffs = eqs.kernel();
    coeffs.map(&zmat).expect("center coordinates have the right length")
}

/// `K_r(Λ) = {a ∈ Z(Λ) : a b ∈ [Λ,Λ] whenever b^{p^r} ∈ [Λ,Λ]}`, as a subspace of Λ.
pub fn k_r(alg: &FinDimAlgebra, r: usize) -> Subspace {
    central_annihilator(alg, &lifted_t_r(alg, r))
}

/// The orthogonal complement, under a symmetrizing form, of `{b : b^{p^r} ∈ [Λ,Λ]}`.
pub fn k_r_classical(alg: &FinDimAlgebra, gram: &Matrix, r: usize) -> Result<Subspace> {
    alg.validate_symmetrizing_form(gram).map_err(|v| Error::InvalidForm(v.to_string()))?;
    let preimage = Subspace::span(alg.fp(), alg.dim(), lifted_t_r(alg, r))?.sum(&alg.commutator_subspace())?;
    Ok(preimage.basis().mul(gram).kernel())
}

/// First `r` with `T_r = T_{r+1}`; from there on every ideal in the chain is constant.
pub fn stabilization_index(alg: &FinDimAlgebra) -> usize {
    let xi = alg.xi_p_on_hh0();
    let mut pow = Matrix::identity(alg.fp(), xi.rows());
    let mut r = 0;
    loop {
        let next = pow.mul(&xi);
        if next.rank() == pow.rank() {
            return r;
        }
        pow = next;
        r += 1;
    }
}

/// `1 + ⌈log_p(dim Λ)⌉`.
pub fn default_r_max(alg: &FinDimAlgebra) -> usize {
    let p = alg.p() as usize;
    let mut r = 0;
    let mut pr = 1usize;
    while pr < alg.dim() {
        pr = pr.saturating_mul(p);
        r += 1;
    }
    r + 1
}

/// `R(Λ) = ∩_r K_r(Λ)`, read off at the stabilization index.
pub fn reynolds(alg: &FinDimAlgebra) -> Subspace {
    k_r(alg, stabilization_index(alg))
}

/// `{a ∈ Z(Λ) : a J ⊆ [Λ,Λ]}`, computed from the radical.
pub fn reynolds_via_radical(alg: &FinDimAlgebra) -> Result<Subspace> {
    let j: Vec<Vec<u32>> = alg.radical()?.vectors().collect();
    Ok(central_annihilator(alg, &j))
}

/// `Z = K_0 ⊇ K_1 ⊇ … ⊇ K_{r_max} ⊇ R` together with the `T_r`.
#[derive(Clone, Debug)]
pub struct IdealChain {
    pub k: Vec<Subspace>,
    pub t: Vec<Subspace>,
    pub reynolds: Subspace,
    pub stable_from: usize,
}

pub fn ideal_chain(alg: &FinDimAlgebra, r_max: usize) -> IdealChain {
    let stable_from = stabilization_index(alg);
    IdealChain {
        k: (0..=r_max).map(|r| k_r(alg, r)).collect(),
        t: (0..=r_max).map(|r| t_r(alg, r)).collect(),
        reynolds: reynolds(alg),
        stable_from,
    }
}

impl IdealChain {
    /// Checks `K_{r+1} ⊆ K_r` and `R ⊆ K_r` for every stored `r`.
    pub fn is_decreasing(&self) -> bool {
        self.k.windows(2).all(|w| w[1].is_subspace_of(&w[0]).unwrap_or(false))
            && self.k.iter().all(|k| self.reynolds.is_subspace_of(k).unwrap_or(false))
    }
}

/// Dimension data of the ideal chain. `t_dims` are extra: they are cheap and
/// separate more algebras, but only the ideal dimensions transport along
/// derived equivalences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub p: u32,
    /// `[dim Z, dim K_1, …, dim K_{r*}, dim R]`
    pub ideals: Vec<usize>,
    pub hh0: usize,
    pub t_dims: Vec<usize>,
}

pub fn fingerprint(alg: &FinDimAlgebra) -> Fingerprint {
    let rs = stabilization_index(alg).max(1);
    let mut ideals: Vec<usize> = (0..=rs).map(|r| k_r(alg, r).dim()).collect();
    ideals.push(reynolds(alg).dim());
    Fingerprint { p: alg.p(), ideals, hh0: alg.hh0().dim(), t_dims: (0..=rs).map(|r| t_r(alg, r).dim()).collect() }
}

/// Outcome of comparing two fingerprints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Differs { entry: String, left: String, right: String },
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Equal => write!(f, "indistinguishable"),
            Comparison::Differs { entry, left, right } => write!(f, "differs at {entry}: {left} vs {right}"),
        }
    }
}

/// Pads a chain that stabilized early by repeating its last entry.
fn padded(v: &[usize], len: usize) -> Vec<usize> {
    let mut v = v.to_vec();
    let last = *v.last().expect("chains are nonempty");
    v.resize(len, last);
    v
}

pub fn compare(a: &Fingerprint, b: &Fingerprint) -> Comparison {
    let differs =
        |entry: String, l: &dyn ToString, r: &dyn ToString| Comparison::Differs { entry, left: l.to_string(), right: r.to_string() };
    if a.p != b.p {
        return differs("p".into(), &a.p, &b.p);
    }
    let (ka, ra) = a.ideals.split_at(a.ideals.len() - 1);
    let (kb, rb) = b.ideals.split_at(b.ideals.len() - 1);
    let n = ka.len().max(kb.len());
    for (i, (x, y)) in padded(ka, n).into_iter().zip(padded(kb, n)).enumerate() {
        if x != y {
            let entry = if i == 0 { "dim Z".to_string() } else { format!("dim K_{i}") };
            return differs(entry, &x, &y);
        }
    }
    if ra != rb {
        return differs("dim R".into(), &ra[0], &rb[0]);
    }
    if a.hh0 != b.hh0 {
        return differs("dim HH0".into(), &a.hh0, &b.hh0);
    }
    let m = a.t_dims.len().max(b.t_dims.len());
    for (i, (x, y)) in padded(&a.t_dims, m).into_iter().zip(padded(&b.t_dims, m)).enumerate() {
        if x != y {
            return differs(format!("dim T_{i} (extra)"), &x, &y);
        }
    }
    Comparison::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples::*;
    use crate::exactla::Fp;

    fn span(p: u64, v: Vec<u32>) -> Subspace {
        let n = v.len();
        Subspace::span(Fp::new(p).unwrap(), n, [v]).unwrap()
    }

    #[test]
    fn dual_numbers_char_two() {
        let a = dual_numbers(2).unwrap();
        assert_eq!(t_r(&a, 0).dim(), 0);
        assert_eq!(t_r(&a, 1), span(2, vec![0, 1]));
        assert_eq!(k_r(&a, 0), a.center());
        assert_eq!(k_r(&a, 1), span(2, vec![0, 1]));
        assert_eq!(reynolds(&a), span(2, vec![0, 1]));
        assert_eq!(reynolds_via_radical(&a).unwrap(), span(2, vec![0, 1]));
    }

    #[test]
    fn group_algebras() {
        // t = g - 1, t^2 = g^2 + g + 1 over GF(3)
        let c3 = cyclic_group_algebra(3, 3).unwrap();
        assert_eq!(t_r(&c3, 1).dim(), 2);
        assert_eq!(k_r(&c3, 1), span(3, vec![1, 1, 1]));
        let v4 = klein_four_group_algebra().unwrap();
        assert_eq!(t_r(&v4, 1).dim(), 3);
        assert_eq!(k_r(&v4, 1), span(2, vec![1, 1, 1, 1]));
        assert_eq!(k_r_classical(&v4, v4.form().unwrap(), 1).unwrap(), span(2, vec![1, 1, 1, 1]));
        assert_eq!(reynolds(&v4), reynolds_via_radical(&v4).unwrap());
    }

    #[test]
    fn semisimple_algebras_keep_everything() {
        for a in [field(2).unwrap(), field(3).unwrap(), split_pair(2).unwrap()] {
            for r in 0..3 {
                assert_eq!(k_r(&a, r), a.center());
            }
            assert_eq!(reynolds(&a), a.center());
        }
    }

    #[test]
    fn classical_matches_annihilator() {
        for (_, a) in symmetric_fixtures() {
            for r in 0..4 {
                assert_eq!(k_r_classical(&a, a.form().unwrap(), r).unwrap(), k_r(&a, r));
            }
        }
        let a = dual_numbers(2).unwrap();
        assert!(k_r_classical(&a, &Matrix::identity(a.fp(), 2), 1).is_err());
    }

    #[test]
    fn fingerprints() {
        let a = dual_numbers(2).unwrap();
        let fa = fingerprint(&a);
        assert_eq!(fa.ideals, vec![2, 1, 1]);
        assert_eq!(compare(&fa, &fingerprint(&a.matrix_algebra(2))), Comparison::Equal);
        let kk = fingerprint(&split_pair(2).unwrap());
        assert_eq!(compare(&fa, &kk), Comparison::Differs { entry: "dim K_1".into(), left: "1".into(), right: "2".into() });
        assert_eq!(fingerprint(&field(2).unwrap()).ideals, vec![1, 1, 1]);
    }

    #[test]
    fn r_max_default() {
        assert_eq!(default_r_max(&dual_numbers(2).unwrap()), 2);
        assert_eq!(default_r_max(&field(3).unwrap()), 1);
        assert_eq!(default_r_max(&klein_four_group_algebra().unwrap()), 3);
    }
}
