use super::{Generator, GradedCategory};
use crate::category::{CatAutomorphism, LinearCategory};
use crate::error::{Error, Result};

/// The orbit category `C/σ` truncated to degrees `|n| ≤ D`.
///
/// `Hom_n(x, y) = C(x, σ^n y)` and `g∘f = σ^{|f|}(g)·f`. Generators are the
/// degree-zero morphisms of `C` plus `Id_{σy} ∈ Hom_1(σy, y)` and
/// `Id_{σ⁻¹y} ∈ Hom_{-1}(σ⁻¹y, y)`, so degree `n` is computable when `|n| < D`.
pub fn orbit_category(c: &LinearCategory, sigma: &CatAutomorphism, window: i32) -> Result<GradedCategory> {
    if window < 1 {
        return Err(Error::Malformed("orbit categories need a window of at least 1".into()));
    }
    let powers: Vec<CatAutomorphism> = (-window..=window).map(|k| sigma.power(k as i64)).collect();
    let pow = |k: i32| &powers[(k + window) as usize];
    let n = c.n_objects();
    let dim = |x: usize, y: usize, d: i32| c.hom_dim(x, pow(d).object(y));
    let compose = |x: usize, y: usize, z: usize, i: i32, j: i32, g: usize, f: usize| {
        let si = pow(i);
        let (yi, zj, zij) = (si.object(y), pow(j).object(z), pow(i + j).object(z));
        let moved = si.apply(y, zj, &c.basis(y, zj, g));
        c.compose(x, yi, zij, &moved, &c.basis(x, yi, f))
    };
    let mut gens = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for b in 0..c.hom_dim(x, y) {
                gens.push(Generator { source: x, target: y, degree: 0, coords: c.basis(x, y, b) });
            }
        }
    }
    for y in 0..n {
        let up = pow(1).object(y);
        gens.push(Generator { source: up, target: y, degree: 1, coords: c.identity(up).to_vec() });
        let down = pow(-1).object(y);
        gens.push(Generator { source: down, target: y, degree: -1, coords: c.identity(down).to_vec() });
    }
    let identities = (0..n).map(|x| c.identity(x).to_vec()).collect();
    let mut cat = GradedCategory::from_fn(c.fp(), c.objects().to_vec(), window, false, dim, compose, identities, Some(gens))?;
    cat.set_orbit(c.clone(), sigma.clone());
    Ok(cat)
}
