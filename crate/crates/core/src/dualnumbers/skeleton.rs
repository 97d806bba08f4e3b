//! The windowed skeleton of the orbit category and the parametrized model of
//! its graded center and abelianization.
//!
//! The window `W` keeps the intervals `[m,n]` with `-W ≤ m ≤ n ≤ W` and length
//! `n - m ≤ W`. Every Hom between two such objects vanishes outside degrees
//! `[-2W, 2W]`, so the skeleton is a bounded graded category with window `2W`.

use super::morphism::{compose, hom_basis, DualNumMorphism, IndecObj};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Subspace};
use crate::graded_category::GradedCategory;
use serde::Serialize;
use std::collections::HashMap;

/// The objects of the window, ordered by bottom then top degree.
pub fn window_objects(w: i32) -> Vec<IndecObj> {
    (-w..=w).flat_map(|m| (m..=(m + w).min(w)).map(move |n| IndecObj::new(m, n).expect("m ≤ n"))).collect()
}

/// The full subcategory of the orbit category on [`window_objects`].
pub struct DualWindow {
    fp: Fp,
    w: i32,
    objects: Vec<IndecObj>,
    index: HashMap<IndecObj, usize>,
}

impl DualWindow {
    pub fn new(fp: Fp, w: i32) -> Result<Self> {
        if w < 0 {
            return Err(Error::Malformed("window must be nonnegative".into()));
        }
        let objects = window_objects(w);
        let index = objects.iter().enumerate().map(|(k, &o)| (o, k)).collect();
        Ok(DualWindow { fp, w, objects, index })
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn w(&self) -> i32 {
        self.w
    }
    pub fn objects(&self) -> &[IndecObj] {
        &self.objects
    }
    pub fn index_of(&self, x: IndecObj) -> Option<usize> {
        self.index.get(&x).copied()
    }

    /// The skeleton as a bounded graded category, every basis morphism a generator.
    /// Associativity is not re-swept here; the calculus is checked against the oracle instead.
    pub fn category(&self) -> Result<GradedCategory> {
        let fp = self.fp;
        let objs = &self.objects;
        GradedCategory::from_fn_unchecked(
            fp,
            objs.iter().map(ToString::to_string).collect(),
            2 * self.w,
            true,
            |x, y, t| hom_basis(objs[x], objs[y], t).len(),
            |x, y, z, i, j, g, f| {
                let unit = |a: IndecObj, b: IndecObj, t: i32, k: usize| {
                    let mut c = vec![0; hom_basis(a, b, t).len()];
                    c[k] = 1;
                    DualNumMorphism::from_coords(a, b, t, &c).expect("basis coordinates")
                };
                let f = unit(objs[x], objs[y], i, f);
                let g = unit(objs[y], objs[z], j, g);
                compose(fp, &f, &g).expect("composable by construction").coords()
            },
            objs.iter().map(|&o| DualNumMorphism::identity(o).coords()).collect(),
            None,
        )
    }

    /// Coordinates in `⊕_x Hom_t(x, x)` of the family `x ↦ family(x)`.
    pub fn family_coords(&self, t: i32, family: impl Fn(IndecObj) -> DualNumMorphism) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        for &x in &self.objects {
            let f = family(x);
            if (f.source, f.target, f.shift) != (x, x, t) {
                return Err(Error::Malformed(format!("family component at {x} is not a degree-{t} endomorphism")));
            }
            out.extend(f.coords());
        }
        Ok(out)
    }
}

/// A coordinate of the parametrized graded center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CenterCoord {
    /// `μ`, the coefficient of the identity on every object.
    Mu,
    /// `λ_ℓ`, the coefficient of `x_n` on objects of length `ℓ`.
    Lambda(i32),
    /// `c`, the coefficient of `Id_{[m,n-t]}` in positive degree `t`.
    C,
}

/// `Z^t` in the window, on the coordinates `μ, λ_0, …, λ_W` (`t = 0`) or `c` (`t > 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterModel {
    pub degree: i32,
    pub window: i32,
    pub coords: Vec<CenterCoord>,
}

pub fn graded_center(fp: Fp, t: i32, w: i32) -> CenterModel {
    let coords = match t {
        0 => std::iter::once(CenterCoord::Mu).chain((0..=w).map(CenterCoord::Lambda)).collect(),
        t if t > 0 && t <= w && (fp.p() == 2 || t % 2 == 0) => vec![CenterCoord::C],
        _ => Vec::new(),
    };
    CenterModel { degree: t, window: w, coords }
}

impl CenterModel {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The component `η_X` of the element with the given coordinates.
    pub fn component(&self, fp: Fp, coeffs: &[u32], x: IndecObj) -> DualNumMorphism {
        let t = self.degree;
        let (mut c_id, mut c_x) = (0, 0);
        for (coord, &c) in self.coords.iter().zip(coeffs) {
            match *coord {
                CenterCoord::Mu => c_id = fp.add(c_id, c),
                CenterCoord::Lambda(l) if l == x.len() => c_x = fp.add(c_x, c),
                CenterCoord::C if x.len() >= t => c_id = fp.add(c_id, c),
                _ => {}
            }
        }
        DualNumMorphism { source: x, target: x, shift: t, c_id, c_x }
    }
}

/// A coordinate of the parametrized abelianization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AbCoord {
    /// The class of `Id_{[0,ℓ]}`; `Id_{[m,n]}` has class `(-1)^m` times this.
    Id(i32),
    /// `v_t`, the class of `x_0` on `[t,0]`; `x_n` on `[m,n]` has class `(-1)^n v_t`.
    V,
}

/// `Ab_t` in the window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbModel {
    pub degree: i32,
    pub window: i32,
    pub coords: Vec<AbCoord>,
}

pub fn ab_component_model(fp: Fp, t: i32, w: i32) -> AbModel {
    let coords = match t {
        0 => (0..=w).map(AbCoord::Id).chain(std::iter::once(AbCoord::V)).collect(),
        t if t < 0 && -t <= w && (fp.p() == 2 || t % 2 == 0) => vec![AbCoord::V],
        _ => Vec::new(),
    };
    AbModel { degree: t, window: w, coords }
}

impl AbModel {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The class of a degree-`t` endomorphism of a window object.
    pub fn class_of(&self, fp: Fp, f: &DualNumMorphism) -> Result<Vec<u32>> {
        if f.source != f.target || f.shift != self.degree {
            return Err(Error::Malformed(format!("{f} is not a degree-{} endomorphism", self.degree)));
        }
        let x = f.source;
        Ok(self
            .coords
            .iter()
            .map(|coord| match *coord {
                AbCoord::Id(l) if l == x.len() => fp.mul(f.c_id, fp.sign(x.m() as i64)),
                AbCoord::V => fp.mul(f.c_x, fp.sign(x.n() as i64)),
                _ => 0,
            })
            .collect())
    }

    /// The endomorphism representing the `k`-th coordinate.
    pub fn representative(&self, k: usize) -> DualNumMorphism {
        let t = self.degree;
        match self.coords[k] {
            AbCoord::Id(l) => DualNumMorphism::identity(IndecObj::new(0, l).expect("ℓ ≥ 0")),
            AbCoord::V => {
                let x = IndecObj::new(t, 0).expect("t ≤ 0");
                DualNumMorphism { source: x, target: x, shift: t, c_id: 0, c_x: 1 }
            }
        }
    }

    pub fn lift(&self, fp: Fp, v: &[u32]) -> Vec<DualNumMorphism> {
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| self.representative(k).scale(fp, c)).collect()
    }
}

/// `η·v` in `Ab_{a+b}` for `η ∈ Z^a` and `v ∈ Ab_b`, computed on representatives.
pub fn act(fp: Fp, z: &CenterModel, eta: &[u32], ab: &AbModel, v: &[u32]) -> Result<Vec<u32>> {
    let target = ab_component_model(fp, z.degree + ab.degree, z.window);
    let mut out = vec![0; target.dim()];
    for f in ab.lift(fp, v) {
        let prod = compose(fp, &f, &z.component(fp, eta, f.source))?;
        out = fp.add_vec(&out, &target.class_of(fp, &prod)?);
    }
    Ok(out)
}

/// `ξ_p: Ab_t → Ab_{pt}` on the model coordinates, from `p`-th powers of representatives.
pub fn xi_model(fp: Fp, ab: &AbModel) -> Result<Matrix> {
    let p = fp.p() as i32;
    let target = ab_component_model(fp, ab.degree * p, ab.window);
    let cols = (0..ab.dim())
        .map(|k| {
            let f = ab.representative(k);
            let mut power = f;
            for _ in 1..p {
                power = compose(fp, &f, &power)?;
            }
            target.class_of(fp, &power)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(fp, target.dim(), &cols))
}

/// `T_r` in degree `t`: the kernel of `ξ_p^r`.
pub fn t_r_model(fp: Fp, r: usize, t: i32, w: i32) -> Result<Subspace> {
    let mut ab = ab_component_model(fp, t, w);
    let mut acc = Matrix::identity(fp, ab.dim());
    for _ in 0..r {
        acc = xi_model(fp, &ab)?.mul(&acc);
        ab = ab_component_model(fp, ab.degree * fp.p() as i32, w);
    }
    Ok(acc.kernel())
}
