//! The ideal tables of the orbit category: `K_{r,s}`, `K_r`, `R`, and their
//! preimages `HK_{r,s}` in `HH^*(Λ)` under `χ`, all in the model coordinates.
//!
//! A cell is certified when every morphism it touches is an interval of length
//! at most `W` and every class it needs lies in a degree the window models.
//! A `p`-th power that vanishes as a morphism is exact in any window.

use super::bicomplex::{chi, hh_closed_form, HhGen};
use super::morphism::{compose, DualNumMorphism, IndecObj};
use super::skeleton::{ab_component_model, act, graded_center, AbModel, CenterCoord, CenterModel};
use super::trace::hs_trace;
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Subspace};
use serde::Serialize;
use std::ops::RangeInclusive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Full,
    #[serde(rename = "tilde_Z0")]
    TildeZ0,
    Zero,
    Span,
}

/// `μ = 0` inside `Z^0`.
pub fn tilde_z0(fp: Fp, w: i32) -> Result<Subspace> {
    let z = graded_center(fp, 0, w);
    let gens = (0..z.dim()).filter(|&k| matches!(z.coords[k], CenterCoord::Lambda(_))).map(|k| unit(z.dim(), k)).collect::<Vec<_>>();
    Subspace::span(fp, z.dim(), gens)
}

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

fn classify(fp: Fp, t: i32, w: i32, space: &Subspace, ambient: usize) -> Result<CellKind> {
    Ok(if space.dim() == 0 {
        CellKind::Zero
    } else if space.dim() == ambient {
        CellKind::Full
    } else if t == 0 && *space == tilde_z0(fp, w)? {
        CellKind::TildeZ0
    } else {
        CellKind::Span
    })
}

/// `T_r` in degree `t`, with a flag saying whether the window saw every image.
pub fn t_r_certified(fp: Fp, r: usize, t: i32, w: i32) -> Result<(Subspace, bool)> {
    let ab = ab_component_model(fp, t, w);
    let p = fp.p() as usize;
    let mut certified = t.unsigned_abs() as i32 <= w;
    let mut cols = Vec::with_capacity(ab.dim());
    let target = ab_component_model(fp, t * (p.pow(r as u32) as i32), w);
    for k in 0..ab.dim() {
        let f = ab.representative(k);
        let mut power = f;
        for _ in 1..p.pow(r as u32) {
            power = compose(fp, &f, &power)?;
        }
        if power.is_zero() {
            cols.push(vec![0; target.dim()]);
        } else {
            certified &= (target.degree.unsigned_abs() as i32) <= w;
            cols.push(target.class_of(fp, &power)?);
        }
    }
    Ok((Matrix::from_columns(fp, target.dim(), &cols).kernel(), certified))
}

/// One cell `(K_{r,s})_t = Ann_{Z^t}((T_r)_{s-t})`.
#[derive(Clone, Debug, Serialize)]
pub struct KrsCell {
    pub p: u32,
    pub r: usize,
    pub s: i32,
    pub t: i32,
    pub window: i32,
    pub kind: CellKind,
    pub dim: usize,
    pub center_dim: usize,
    /// Basis in the coordinates of [`graded_center`].
    pub basis: Vec<Vec<u32>>,
    pub certified: bool,
    #[serde(skip)]
    pub space: Subspace,
}

/// Annihilator in `Z^t` of a subspace of `Ab_b`, with a flag for products that left the window.
fn annihilator(fp: Fp, z: &CenterModel, ab: &AbModel, vs: &[Vec<u32>]) -> Result<(Subspace, bool)> {
    let w = z.window;
    let target_degree = z.degree + ab.degree;
    let mut certified = true;
    let mut rows = Vec::new();
    for v in vs {
        let cols = (0..z.dim()).map(|k| act(fp, z, &unit(z.dim(), k), ab, v)).collect::<Result<Vec<_>>>()?;
        if target_degree.abs() > w {
            // the product is known only if it vanishes as a morphism
            for f in ab.lift(fp, v) {
                for k in 0..z.dim() {
                    let prod = compose(fp, &f, &z.component(fp, &unit(z.dim(), k), f.source))?;
                    certified &= prod.is_zero();
                }
            }
        }
        let m = Matrix::from_columns(fp, ab_component_model(fp, target_degree, w).dim(), &cols);
        rows.push(m);
    }
    let stacked = rows.iter().fold(Matrix::zeros(fp, 0, z.dim()), |acc, m| acc.vstack(m));
    Ok((stacked.kernel(), certified))
}

pub fn k_rs_cell(fp: Fp, r: usize, s: i32, t: i32, w: i32) -> Result<KrsCell> {
    if r == 0 {
        return Err(Error::Malformed("K_{r,s} tables need r ≥ 1".into()));
    }
    let z = graded_center(fp, t, w);
    let ab = ab_component_model(fp, s - t, w);
    let (tr, t_ok) = t_r_certified(fp, r, s - t, w)?;
    let (space, ann_ok) = annihilator(fp, &z, &ab, &tr.vectors().collect::<Vec<_>>())?;
    let certified = t_ok && ann_ok && t.abs() <= w && (s - t).abs() <= w;
    Ok(KrsCell {
        p: fp.p(),
        r,
        s,
        t,
        window: w,
        kind: classify(fp, t, w, &space, z.dim())?,
        dim: space.dim(),
        center_dim: z.dim(),
        basis: space.vectors().collect(),
        certified,
        space,
    })
}

pub fn k_rs_tables(fp: Fp, r: usize, ss: RangeInclusive<i32>, ts: RangeInclusive<i32>, w: i32) -> Result<Vec<KrsCell>> {
    ss.flat_map(|s| ts.clone().map(move |t| (s, t))).map(|(s, t)| k_rs_cell(fp, r, s, t, w)).collect()
}

/// `(K_r)_t = ∩_s (K_{r,s})_t` over a range of `s`, or `R_t` when several `r` are given.
#[derive(Clone, Debug, Serialize)]
pub struct IdealCell {
    pub p: u32,
    pub rs: Vec<usize>,
    pub s_range: (i32, i32),
    pub t: i32,
    pub window: i32,
    pub kind: CellKind,
    pub dim: usize,
    pub basis: Vec<Vec<u32>>,
    pub certified: bool,
    #[serde(skip)]
    pub space: Subspace,
}

pub fn intersect_cells(fp: Fp, rs: &[usize], ss: RangeInclusive<i32>, t: i32, w: i32) -> Result<IdealCell> {
    let z = graded_center(fp, t, w);
    let mut space = Subspace::span(fp, z.dim(), (0..z.dim()).map(|k| unit(z.dim(), k)).collect::<Vec<_>>())?;
    let mut certified = true;
    for &r in rs {
        for s in ss.clone() {
            let cell = k_rs_cell(fp, r, s, t, w)?;
            certified &= cell.certified;
            space = space.intersect(&cell.space)?;
        }
    }
    Ok(IdealCell {
        p: fp.p(),
        rs: rs.to_vec(),
        s_range: (*ss.start(), *ss.end()),
        t,
        window: w,
        kind: classify(fp, t, w, &space, z.dim())?,
        dim: space.dim(),
        basis: space.vectors().collect(),
        certified,
        space,
    })
}

/// `χ: HH^l(Λ) → Z^l` in the generator basis of [`hh_closed_form`] and the model coordinates.
///
/// Solved from the components on `[-ℓ,0]` for every length `ℓ ≤ W`.
pub fn chi_matrix(fp: Fp, l: usize, w: i32) -> Result<Matrix> {
    let z = graded_center(fp, l as i32, w);
    let probes: Vec<IndecObj> = (0..=w).map(|len| IndecObj::new(-len, 0).expect("len ≥ 0")).collect();
    let flat = |f: &dyn Fn(IndecObj) -> DualNumMorphism| -> Vec<u32> {
        probes
            .iter()
            .flat_map(|&x| {
                let m = f(x);
                [m.c_id, m.c_x]
            })
            .collect()
    };
    let system_cols: Vec<Vec<u32>> = (0..z.dim()).map(|k| flat(&|x| z.component(fp, &unit(z.dim(), k), x))).collect();
    let system = Matrix::from_columns(fp, 2 * probes.len(), &system_cols);
    let cols = hh_closed_form(l, fp.p())
        .generators
        .iter()
        .map(|&g| {
            let images = probes.iter().map(|&x| chi(fp, l, g, x)).collect::<Result<Vec<_>>>()?;
            let rhs: Vec<u32> = images.iter().flat_map(|m| [m.c_id, m.c_x]).collect();
            system.solve(&rhs).ok_or_else(|| Error::SolveFailed(format!("χ({g:?}) in degree {l} is not in the center model")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(fp, z.dim(), &cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HkKind {
    /// All of `HH^l`.
    Full,
    /// `⟨x⟩_l`.
    X,
    Zero,
    Span,
}

/// `HK^l_{r,s} = χ^{-1}((K_{r,s})_l)`.
#[derive(Clone, Debug, Serialize)]
pub struct HkCell {
    pub p: u32,
    pub r: usize,
    pub s: i32,
    pub l: usize,
    pub window: i32,
    pub generators: Vec<HhGen>,
    pub kind: HkKind,
    pub dim: usize,
    /// Basis in the coordinates of `generators`.
    pub basis: Vec<Vec<u32>>,
    pub certified: bool,
}

pub fn hk_cell(fp: Fp, r: usize, s: i32, l: usize, w: i32, chi: &Matrix) -> Result<HkCell> {
    let k = k_rs_cell(fp, r, s, l as i32, w)?;
    let generators = hh_closed_form(l, fp.p()).generators;
    let space = Subspace::preimage(chi, &k.space)?;
    let x_only = generators.iter().position(|&g| g == HhGen::X).map(|i| unit(generators.len(), i));
    let kind = if space.dim() == 0 {
        HkKind::Zero
    } else if space.dim() == generators.len() {
        HkKind::Full
    } else if x_only.is_some_and(|v| space.dim() == 1 && space.contains(&v).unwrap_or(false)) {
        HkKind::X
    } else {
        HkKind::Span
    };
    Ok(HkCell {
        p: fp.p(),
        r,
        s,
        l,
        window: w,
        dim: space.dim(),
        basis: space.vectors().collect(),
        generators,
        kind,
        certified: k.certified,
    })
}

pub fn hk_tables(fp: Fp, r: usize, ss: RangeInclusive<i32>, l_max: usize, w: i32) -> Result<Vec<HkCell>> {
    let chis = (0..=l_max).map(|l| chi_matrix(fp, l, w)).collect::<Result<Vec<_>>>()?;
    ss.flat_map(|s| (0..=l_max).map(move |l| (s, l))).map(|(s, l)| hk_cell(fp, r, s, l, w, &chis[l])).collect()
}

/// The degree-0 pairing `(η, v) ↦ x-coefficient of tr(η∘v)` between `Z^t` and `Ab_{-t}`.
pub fn cy_pairing(fp: Fp, t: i32, w: i32) -> Result<Matrix> {
    let z = graded_center(fp, t, w);
    let ab = ab_component_model(fp, -t, w);
    let rows = (0..z.dim())
        .map(|j| {
            (0..ab.dim())
                .map(|k| {
                    let v = ab.representative(k);
                    let eta = z.component(fp, &unit(z.dim(), j), v.source);
                    hs_trace(fp, &compose(fp, &v, &eta)?).map(|tr| tr.b)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(fp, ab.dim(), &rows)
}
