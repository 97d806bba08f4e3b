//! Small algebras used throughout the tests, benches and the CLI.

use super::{Arrow, FinDimAlgebra};
use crate::error::Result;
use crate::exactla::{Fp, Matrix};

/// GF(p) as a one-dimensional algebra.
pub fn field(p: u64) -> Result<FinDimAlgebra> {
    let fp = Fp::new(p)?;
    FinDimAlgebra::new(fp, vec!["1".into()], vec![1], vec![1])?.with_form(Matrix::identity(fp, 1))
}

/// `k[t]/t^n` with basis `1, t, …, t^{n-1}` and the form picking the top coefficient.
pub fn truncated_polynomial(p: u64, n: usize, var: &str) -> Result<FinDimAlgebra> {
    let fp = Fp::new(p)?;
    let alg = FinDimAlgebra::monomial_quiver_algebra(fp, 1, &[Arrow::new(var, 0, 0)], &[vec![0; n]])?;
    let gram = Matrix::from_fn(fp, n, n, |i, j| u32::from(i + j == n - 1));
    alg.with_form(gram)
}

/// The dual numbers `k[x]/x²` with basis `1, x` and `(1, x) = 1`.
pub fn dual_numbers(p: u64) -> Result<FinDimAlgebra> {
    truncated_polynomial(p, 2, "x")
}

/// `k × k`, the path algebra of two vertices and no arrows.
pub fn split_pair(p: u64) -> Result<FinDimAlgebra> {
    let fp = Fp::new(p)?;
    FinDimAlgebra::monomial_quiver_algebra(fp, 2, &[], &[])?.with_form(Matrix::identity(fp, 2))
}

/// Cayley table of the cyclic group of order `n`, elements `0..n` under addition.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Cayley table of `C_2 × C_2` with elements `1, a, b, ab` as bit masks.
pub fn klein_four_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

pub fn cyclic_group_algebra(p: u64, n: usize) -> Result<FinDimAlgebra> {
    let labels = (0..n).map(|i| if i == 0 { "1".into() } else { format!("g^{i}") }).collect();
    FinDimAlgebra::group_algebra(Fp::new(p)?, &cyclic_table(n), Some(labels))
}

/// GF(2)[C_2 × C_2].
pub fn klein_four_group_algebra() -> Result<FinDimAlgebra> {
    let labels = ["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    FinDimAlgebra::group_algebra(Fp::new(2)?, &klein_four_table(), Some(labels))
}

/// `M_n` over the given base.
pub fn matrix_algebra(base: &FinDimAlgebra, n: usize) -> FinDimAlgebra {
    base.matrix_algebra(n)
}

/// The algebras carrying a symmetrizing form that the test suites sweep over.
pub fn symmetric_fixtures() -> Vec<(&'static str, FinDimAlgebra)> {
    vec![
        ("dual-numbers-p2", dual_numbers(2).unwrap()),
        ("dual-numbers-p3", dual_numbers(3).unwrap()),
        ("gf3-c3", cyclic_group_algebra(3, 3).unwrap()),
        ("gf2-klein-four", klein_four_group_algebra().unwrap()),
    ]
}

/// Every shipped fixture, symmetric or not.
pub fn all_fixtures() -> Vec<(&'static str, FinDimAlgebra)> {
    let mut v = symmetric_fixtures();
    v.push(("gf2", field(2).unwrap()));
    v.push(("gf3", field(3).unwrap()));
    v.push(("gf2-pair", split_pair(2).unwrap()));
    v.push(("m2-gf2", matrix_algebra(&field(2).unwrap(), 2)));
    v.push(("gf2-c3", cyclic_group_algebra(2, 3).unwrap()));
    v.push(("k-x-cubed-p2", truncated_polynomial(2, 3, "x").unwrap()));
    v.push(("three-dim-local-p2", three_dim_local(2).unwrap()));
    v
}

/// `k⟨x, y⟩/(x², y², xy, yx)`, a three-dimensional local algebra.
pub fn three_dim_local(p: u64) -> Result<FinDimAlgebra> {
    let arrows = [Arrow::new("x", 0, 0), Arrow::new("y", 0, 0)];
    let rels = vec![vec![0, 0], vec![1, 1], vec![0, 1], vec![1, 0]];
    FinDimAlgebra::monomial_quiver_algebra(Fp::new(p)?, 1, &arrows, &rels)
}
