//! Hattori–Stallings traces, the map `φ: Λ → Ab_0`, and the degree-0 decomposition.

use super::complex::{ChainMap, LamComplex};
use super::lambda::Lam;
use super::morphism::{DualNumMorphism, IndecObj};
use super::skeleton::{ab_component_model, AbModel, DualWindow};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Subspace};
use crate::graded_category::TraceData;
use serde::Serialize;

/// `Σ_i (-1)^i tr(f^i)` for an endomorphism of a complex of free modules.
pub fn hattori_stallings(fp: Fp, x: &LamComplex, f: &ChainMap) -> Lam {
    x.degrees().fold(Lam::ZERO, |acc, i| {
        let tr = f.comp(i).map_or(Lam::ZERO, |c| c.trace(fp));
        acc.add(fp, tr.scale(fp, fp.sign(i as i64)))
    })
}

/// The trace of a degree-0 endomorphism of an interval complex.
pub fn hs_trace(fp: Fp, f: &DualNumMorphism) -> Result<Lam> {
    if f.source != f.target || f.shift != 0 {
        return Err(Error::Malformed(format!("{f} is not an endomorphism in degree 0")));
    }
    Ok(hattori_stallings(fp, &f.source.complex(), &f.representative(fp)))
}

/// `φ(a)`: right multiplication by `a` on the stalk complex `Λ`.
pub fn phi_map(a: Lam) -> DualNumMorphism {
    let stalk = IndecObj::new(0, 0).expect("stalk");
    DualNumMorphism { source: stalk, target: stalk, shift: 0, c_id: a.a, c_x: a.b }
}

/// The trace `Ab_0 → Λ` on the model coordinates, columns `(1, x)`-coefficients.
pub fn trace_matrix(fp: Fp, ab: &AbModel) -> Result<Matrix> {
    let cols = (0..ab.dim()).map(|k| hs_trace(fp, &ab.representative(k)).map(|t| vec![t.a, t.b])).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(fp, 2, &cols))
}

/// `Ab_0 = Im φ ⊕ ⊕_{x∈C} k·1̄_x` in the window, on the model coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct Ab0Decomposition {
    pub window: i32,
    pub ab0_dim: usize,
    pub image_phi_dim: usize,
    /// `Λ^{[m,0]}` for `-W ≤ m < 0`.
    pub c_objects: Vec<IndecObj>,
    pub c_dim: usize,
    pub intersection_dim: usize,
    pub direct: bool,
    /// `tr∘φ = Id` on `Λ`.
    pub tr_phi_identity: bool,
    /// `Ker tr` is spanned by the `1̄_x - φ(tr 1̄_x)`.
    pub kernel_tr_matches: bool,
}

pub fn ab0_decomposition(fp: Fp, w: i32) -> Result<Ab0Decomposition> {
    let ab = ab_component_model(fp, 0, w);
    let n = ab.dim();
    let image: Vec<Vec<u32>> = [Lam::ONE, Lam::X].iter().map(|&a| ab.class_of(fp, &phi_map(a))).collect::<Result<_>>()?;
    let image_phi = Subspace::span(fp, n, image.clone())?;
    let c_objects: Vec<IndecObj> = (-w..0).map(|m| IndecObj::new(m, 0).expect("m < 0")).collect();
    let c_classes: Vec<Vec<u32>> = c_objects.iter().map(|&x| ab.class_of(fp, &DualNumMorphism::identity(x))).collect::<Result<_>>()?;
    let c_span = Subspace::span(fp, n, c_classes.clone())?;
    let intersection_dim = image_phi.intersect(&c_span)?.dim();
    let sum_dim = image_phi.sum(&c_span)?.dim();
    let tr = trace_matrix(fp, &ab)?;
    let tr_phi = tr.mul(&Matrix::from_columns(fp, n, &image));
    let kernel_gens = c_classes
        .iter()
        .map(|c| {
            let t = tr.mul_vec(c);
            let back = ab.class_of(fp, &phi_map(Lam::new(t[0], t[1])))?;
            Ok(fp.sub_vec(c, &back))
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel_tr_matches = Subspace::span(fp, n, kernel_gens)? == tr.kernel();
    Ok(Ab0Decomposition {
        window: w,
        ab0_dim: n,
        image_phi_dim: image_phi.dim(),
        c_dim: c_span.dim(),
        c_objects,
        intersection_dim,
        direct: intersection_dim == 0 && sum_dim == n,
        tr_phi_identity: tr_phi == Matrix::identity(fp, 2),
        kernel_tr_matches,
    })
}

/// The degree-0 trace `tr_X(f) = coefficient of x in the Hattori–Stallings trace`, on every window object.
pub fn calabi_yau_trace(window: &DualWindow) -> Result<TraceData> {
    let fp = window.fp();
    let functionals = window
        .objects()
        .iter()
        .map(|&x| {
            let n = DualNumMorphism::identity(x).coords().len();
            (0..n)
                .map(|k| {
                    let mut c = vec![0; n];
                    c[k] = 1;
                    hs_trace(fp, &DualNumMorphism::from_coords(x, x, 0, &c)?).map(|t| t.b)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceData { d: 0, functionals })
}
