//! Indecomposable complexes `Λ^{[m,n]}`, normal-form morphisms between them and their composition.
//!
//! A degree-`t` morphism `X → Y` is a chain map `X → Y[t]`, where `Y[t]^i = Y^{i+t}`
//! carries the differential `(-1)^t x`. Composition is `g∘f = g[t]∘f`, where
//! `g[t]` has the components of `g` shifted and no extra sign. The Id-type
//! generator of `Hom(X, Y[t])` is `(-1)^{t(i-m)}` in degree `i`, counted from
//! the bottom `m` of `X`, and the x-type generator is `x` in the top degree of `X`.

use super::complex::{ChainMap, HomSpace, LamComplex};
use super::lambda::{Lam, LamMatrix};
use crate::error::{Error, Result};
use crate::exactla::Fp;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The interval complex `Λ^{[m,n]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndecObj {
    m: i32,
    n: i32,
}

impl IndecObj {
    pub fn new(m: i32, n: i32) -> Result<Self> {
        if m > n {
            return Err(Error::Malformed(format!("empty interval [{m},{n}]")));
        }
        Ok(IndecObj { m, n })
    }
    pub fn m(self) -> i32 {
        self.m
    }
    pub fn n(self) -> i32 {
        self.n
    }
    /// `n - m`; zero for a stalk, never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> i32 {
        self.n - self.m
    }
    /// `X[t]` as an interval.
    pub fn shifted(self, t: i32) -> IndecObj {
        IndecObj { m: self.m - t, n: self.n - t }
    }
    pub fn complex(self) -> LamComplex {
        LamComplex::interval(self.m, self.n)
    }
}

impl fmt::Display for IndecObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.m, self.n)
    }
}

/// A generator of `Hom(X, Y[t])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HomGen {
    /// `±Id` in degrees `lo..=hi`.
    Id { lo: i32, hi: i32 },
    /// `x` in degree `at`, the top of the source.
    X { at: i32 },
}

impl fmt::Display for HomGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomGen::Id { lo, hi } => write!(f, "Id[{lo},{hi}]"),
            HomGen::X { at } => write!(f, "x{at}"),
        }
    }
}

/// Whether `Hom(a, b[t])` has the x-type and the Id-type generator.
fn cases(a: IndecObj, b: IndecObj, t: i32) -> (bool, bool) {
    let c = b.shifted(t);
    let x_case = a.m <= c.m && a.n <= c.n && a.n >= c.m;
    let id_case = a.m >= c.m && a.n >= c.n && a.m <= c.n;
    (id_case, x_case)
}

/// Basis of `Hom(a, b[t])`, Id-type first.
pub fn hom_basis(a: IndecObj, b: IndecObj, t: i32) -> Vec<HomGen> {
    let (id_case, x_case) = cases(a, b, t);
    let mut out = Vec::with_capacity(2);
    if id_case {
        out.push(HomGen::Id { lo: a.m, hi: b.n - t });
    }
    if x_case {
        out.push(HomGen::X { at: a.n });
    }
    out
}

/// `c_id·Id + c_x·x` in `Hom(source, target[shift])`, in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualNumMorphism {
    pub source: IndecObj,
    pub target: IndecObj,
    pub shift: i32,
    pub c_id: u32,
    pub c_x: u32,
}

impl DualNumMorphism {
    pub fn new(fp: Fp, source: IndecObj, target: IndecObj, shift: i32, c_id: u32, c_x: u32) -> Result<Self> {
        let (id_case, x_case) = cases(source, target, shift);
        let (c_id, c_x) = (c_id % fp.p(), c_x % fp.p());
        if (c_id != 0 && !id_case) || (c_x != 0 && !x_case) {
            return Err(Error::Malformed(format!("Hom({source}, {target}[{shift}]) has no such generator")));
        }
        Ok(DualNumMorphism { source, target, shift, c_id, c_x })
    }

    pub fn zero(source: IndecObj, target: IndecObj, shift: i32) -> Self {
        DualNumMorphism { source, target, shift, c_id: 0, c_x: 0 }
    }

    pub fn identity(x: IndecObj) -> Self {
        DualNumMorphism { source: x, target: x, shift: 0, c_id: 1, c_x: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.c_id == 0 && self.c_x == 0
    }

    /// Coordinates on [`hom_basis`].
    pub fn coords(&self) -> Vec<u32> {
        let (id_case, x_case) = cases(self.source, self.target, self.shift);
        let mut v = Vec::with_capacity(2);
        if id_case {
            v.push(self.c_id);
        }
        if x_case {
            v.push(self.c_x);
        }
        v
    }

    pub fn from_coords(source: IndecObj, target: IndecObj, shift: i32, coords: &[u32]) -> Result<Self> {
        let (id_case, x_case) = cases(source, target, shift);
        if coords.len() != id_case as usize + x_case as usize {
            return Err(Error::Malformed("coordinate vector does not match the Hom basis".into()));
        }
        let mut it = coords.iter().copied();
        let c_id = if id_case { it.next().unwrap_or(0) } else { 0 };
        let c_x = if x_case { it.next().unwrap_or(0) } else { 0 };
        Ok(DualNumMorphism { source, target, shift, c_id, c_x })
    }

    pub fn add(&self, fp: Fp, o: &DualNumMorphism) -> Result<Self> {
        if (self.source, self.target, self.shift) != (o.source, o.target, o.shift) {
            return Err(Error::NotComposable("summands live in different Hom spaces".into()));
        }
        Ok(DualNumMorphism { c_id: fp.add(self.c_id, o.c_id), c_x: fp.add(self.c_x, o.c_x), ..*self })
    }

    pub fn scale(&self, fp: Fp, c: u32) -> Self {
        DualNumMorphism { c_id: fp.mul(c, self.c_id), c_x: fp.mul(c, self.c_x), ..*self }
    }

    /// The target complex `target[shift]`.
    pub fn target_complex(&self, fp: Fp) -> LamComplex {
        self.target.complex().shift(fp, self.shift)
    }

    /// The chain map built from the generators.
    pub fn representative(&self, fp: Fp) -> ChainMap {
        let (a, b) = (self.source.complex(), self.target_complex(fp));
        let top = self.target.n - self.shift;
        ChainMap::from_fn(&a, &b, |i| {
            let mut e = Lam::ZERO;
            if self.c_id != 0 && i <= top {
                e = e.add(fp, Lam::ONE.scale(fp, fp.mul(self.c_id, fp.sign(self.shift as i64 * (i - self.source.m) as i64))));
            }
            if self.c_x != 0 && i == self.source.n {
                e = e.add(fp, Lam::X.scale(fp, self.c_x));
            }
            if b.rank(i) == 0 {
                LamMatrix::zeros(0, 1)
            } else {
                LamMatrix::scalar(1, e)
            }
        })
        .expect("interval complexes have rank one")
    }

    /// Reads off the normal form of a chain map `source → target[shift]`.
    ///
    /// The Id coefficient is the unit part in the bottom degree of the source;
    /// the x coefficient is `Σ_j b_j (-ε)^{n-j}` over the x parts `b_j`, where
    /// `ε = (-1)^shift` is the sign of the target differential. Both vanish on
    /// null-homotopic maps.
    pub fn normal_form(fp: Fp, source: IndecObj, target: IndecObj, shift: i32, f: &ChainMap) -> Self {
        let (id_case, x_case) = cases(source, target, shift);
        let at = |i: i32| f.comp(i).filter(|c| c.rows() == 1).map_or(Lam::ZERO, |c| c.get(0, 0));
        let c_id = if id_case { at(source.m).a } else { 0 };
        let c_x = if x_case {
            let w = target.shifted(shift);
            let step = fp.neg(fp.sign(shift as i64));
            (source.m.max(w.m)..=source.n.min(w.n)).fold(0, |acc, j| fp.fma(acc, at(j).b, fp.pow(step, (source.n - j) as u64)))
        } else {
            0
        };
        DualNumMorphism { source, target, shift, c_id, c_x }
    }
}

impl fmt::Display for DualNumMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for g in hom_basis(self.source, self.target, self.shift) {
            match g {
                HomGen::Id { lo, hi } if self.c_id != 0 => terms.push(format!("{}·Id[{lo},{hi}]", self.c_id)),
                HomGen::X { at } if self.c_x != 0 => terms.push(format!("{}·x{at}", self.c_x)),
                _ => {}
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} : {} -> {}[{}]", terms.join(" + "), self.source, self.target, self.shift)
    }
}

/// `g∘f = g[t]∘f` in closed form, for `f: X → Y[t]` and `g: Y → Z[s]`.
pub fn compose(fp: Fp, f: &DualNumMorphism, g: &DualNumMorphism) -> Result<DualNumMorphism> {
    if f.target != g.source {
        return Err(Error::NotComposable(format!("{} is not {}", f.target, g.source)));
    }
    let (x, y, z) = (f.source, f.target, g.target);
    let (t, s) = (f.shift, g.shift);
    let w = z.shifted(s + t);
    let (id_case, x_case) = cases(x, z, s + t);
    let sign = |e: i64| fp.sign(e);
    let mut c_id = 0;
    let mut c_x = 0;
    // Id∘Id: unit on [m, min(n'-t, q)] with sign (-1)^{s(m+t-m')} at the bottom
    if f.c_id != 0 && g.c_id != 0 && x.m <= (y.n - t).min(w.n) && id_case {
        c_id = fp.mul(fp.mul(f.c_id, g.c_id), sign(s as i64 * (x.m + t - y.m) as i64));
    }
    if x_case {
        // Id-type g after x-type f: x in degree n with g's sign there
        if f.c_x != 0 && g.c_id != 0 && x.n <= w.n {
            let c = fp.mul(fp.mul(f.c_x, g.c_id), sign(s as i64 * (x.n + t - y.m) as i64));
            c_x = fp.add(c_x, c);
        }
        // x-type g after Id-type f: x in degree j = n'-t, moved up to the top of X
        if f.c_id != 0 && g.c_x != 0 {
            let j = y.n - t;
            let step = fp.neg(sign((s + t) as i64));
            let c = fp.mul(fp.mul(f.c_id, g.c_x), sign(t as i64 * (j - x.m) as i64));
            c_x = fp.add(c_x, fp.mul(c, fp.pow(step, (x.n - j) as u64)));
        }
    }
    Ok(DualNumMorphism { source: x, target: z, shift: s + t, c_id, c_x })
}

/// Chain maps modulo homotopy, computed by brute force.
#[derive(Clone, Debug)]
pub struct OracleHom {
    pub dim: usize,
    pub representatives: Vec<ChainMap>,
}

/// `Hom_K(a, b[t])` by linear algebra on the chain level.
pub fn oracle_hom(fp: Fp, a: IndecObj, b: IndecObj, t: i32) -> Result<OracleHom> {
    let (src, dst) = (a.complex(), b.complex().shift(fp, t));
    let space = HomSpace::new(fp, &src, &dst);
    let q = space.homology()?;
    let representatives = (0..q.dim()).map(|k| space.unflatten(&q.rep(k))).collect();
    Ok(OracleHom { dim: q.dim(), representatives })
}

/// Composes chain-map representatives on the chain level and checks that the
/// result is homotopic to the representative of [`compose`].
pub fn oracle_compose_agrees(fp: Fp, f: &DualNumMorphism, g: &DualNumMorphism) -> Result<bool> {
    let normal = compose(fp, f, g)?;
    let (a, b) = (f.source.complex(), f.target_complex(fp));
    let c = g.target.complex().shift(fp, g.shift + f.shift);
    let chain = f.representative(fp).then(fp, &g.representative(fp).shift(f.shift), &a, &b, &c);
    if !chain.is_chain_map(fp, &a, &c) {
        return Ok(false);
    }
    let diff = chain.sub(fp, &normal.representative(fp));
    Ok(HomSpace::new(fp, &a, &c).is_null_homotopic(&diff))
}
