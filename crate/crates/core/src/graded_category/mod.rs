//! Graded k-linear categories truncated to a degree window `[-D, D]`.
//!
//! Morphisms of degree `n` from `x` to `y` live in `Hom_n(x, y)`; composition
//! adds degrees. Compositions that leave the window are reported as
//! [`Error::WindowTooSmall`] unless the category is *bounded*, meaning every
//! Hom outside the window is known to vanish.
//!
//! Every linear system over all morphisms is posed only over a generating set.
//! A category records its generators and their largest degree `D'`; degree-`n`
//! centers and commutators are computable when `|n| + D' ≤ D`.

mod ideals;
mod orbit;
mod spec;
mod trace;

pub use ideals::{GradedIdeal, IdealComponent, Side};
pub use orbit::orbit_category;
pub use spec::{AutomorphismSpec, CategorySpec, OrbitData, OrbitInput, TraceSpec};
pub use trace::{CyViolation, TraceData, ZetaMap};

use crate::category::{CatAutomorphism, LinearCategory};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Quotient, Subspace};
use std::collections::HashMap;

/// `(-1)^{ij}` exponent for moving a degree-`i` element past a degree-`j` one.
pub fn koszul(i: i32, j: i32) -> i64 {
    i as i64 * j as i64
}

/// A morphism used to generate the category under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub source: usize,
    pub target: usize,
    pub degree: i32,
    pub coords: Vec<u32>,
}

/// The orbit data a category was built from, kept for the Σ-action.
#[derive(Clone, Debug)]
struct OrbitSource {
    base: LinearCategory,
    sigma: CatAutomorphism,
}

type BlockKey = (usize, usize, usize, i32, i32);

#[derive(Clone, Debug)]
pub struct GradedCategory {
    fp: Fp,
    objects: Vec<String>,
    window: i32,
    bounded: bool,
    dims: Vec<usize>,
    /// `[g][f][k]` tensors keyed by `(x, y, z, |f|, |g|)`, only for nonzero blocks.
    comp: HashMap<BlockKey, Vec<u32>>,
    identities: Vec<Vec<u32>>,
    generators: Vec<Generator>,
    orbit: Option<OrbitSource>,
}

/// `⊕_x Hom_n(x, x)` modulo graded commutators.
#[derive(Clone, Debug)]
pub struct AbComponent {
    pub degree: i32,
    pub offsets: Vec<usize>,
    pub commutators: Subspace,
    pub quotient: Quotient,
}

impl AbComponent {
    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// Families `(m_x)_x` of degree `n` satisfying the graded commutation equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterComponent {
    pub degree: i32,
    pub offsets: Vec<usize>,
    pub space: Subspace,
}

impl CenterComponent {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

impl GradedCategory {
    /// Builds a category from callbacks. `dim(x, y, n)` is queried for `|n| ≤ D`;
    /// `compose(x, y, z, i, j, g, f)` returns the coordinates of `g∘f` for basis
    /// morphisms `f ∈ Hom_i(x, y)`, `g ∈ Hom_j(y, z)` whenever `|i + j| ≤ D`.
    /// Without explicit generators every in-window basis morphism is one.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn(
        fp: Fp,
        objects: Vec<String>,
        window: i32,
        bounded: bool,
        dim: impl Fn(usize, usize, i32) -> usize,
        compose: impl Fn(usize, usize, usize, i32, i32, usize, usize) -> Vec<u32>,
        identities: Vec<Vec<u32>>,
        generators: Option<Vec<Generator>>,
    ) -> Result<Self> {
        let cat = Self::from_fn_unchecked(fp, objects, window, bounded, dim, compose, identities, generators)?;
        cat.check_associativity()?;
        Ok(cat)
    }

    /// [`GradedCategory::from_fn`] without the associativity sweep, which is
    /// cubic in the number of nonzero blocks. Identities are still checked.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn_unchecked(
        fp: Fp,
        objects: Vec<String>,
        window: i32,
        bounded: bool,
        dim: impl Fn(usize, usize, i32) -> usize,
        compose: impl Fn(usize, usize, usize, i32, i32, usize, usize) -> Vec<u32>,
        identities: Vec<Vec<u32>>,
        generators: Option<Vec<Generator>>,
    ) -> Result<Self> {
        if window < 0 {
            return Err(Error::Malformed("window must be nonnegative".into()));
        }
        let n = objects.len();
        let w = (2 * window + 1) as usize;
        let mut dims = vec![0; n * n * w];
        for x in 0..n {
            for y in 0..n {
                for d in -window..=window {
                    dims[(x * n + y) * w + (d + window) as usize] = dim(x, y, d);
                }
            }
        }
        let mut cat =
            GradedCategory { fp, objects, window, bounded, dims, comp: HashMap::new(), identities, generators: Vec::new(), orbit: None };
        let blocks = cat.nonzero_blocks();
        let mut from: HashMap<usize, Vec<(usize, i32)>> = HashMap::new();
        for &(x, y, d) in &blocks {
            from.entry(x).or_default().push((y, d));
        }
        for &(x, y, i) in &blocks {
            for &(z, j) in from.get(&y).map(Vec::as_slice).unwrap_or(&[]) {
                if (i + j).abs() > window {
                    continue;
                }
                let dz = cat.dim_in_window(x, z, i + j);
                if dz == 0 {
                    continue;
                }
                let (df, dg) = (cat.dim_in_window(x, y, i), cat.dim_in_window(y, z, j));
                let mut block = Vec::with_capacity(dg * df * dz);
                for g in 0..dg {
                    for f in 0..df {
                        let v = compose(x, y, z, i, j, g, f);
                        if v.len() != dz {
                            return Err(Error::Malformed(format!(
                                "composite of degrees {i},{j} on objects {x},{y},{z} has the wrong length"
                            )));
                        }
                        block.extend(v.into_iter().map(|c| c % fp.p()));
                    }
                }
                cat.comp.insert((x, y, z, i, j), block);
            }
        }
        if cat.identities.len() != n || (0..n).any(|x| cat.identities[x].len() != cat.dim_in_window(x, x, 0)) {
            return Err(Error::Malformed("identity coordinates have the wrong shape".into()));
        }
        cat.generators = match generators {
            Some(gens) => gens,
            None => blocks
                .iter()
                .flat_map(|&(x, y, d)| {
                    let dim = cat.dim_in_window(x, y, d);
                    (0..dim).map(move |b| {
                        let mut coords = vec![0; dim];
                        coords[b] = 1;
                        Generator { source: x, target: y, degree: d, coords }
                    })
                })
                .collect(),
        };
        for g in &cat.generators {
            if g.source >= n
                || g.target >= n
                || g.degree.abs() > window
                || g.coords.len() != cat.dim_in_window(g.source, g.target, g.degree)
            {
                return Err(Error::Malformed("generator has the wrong shape".into()));
            }
        }
        cat.check_identities()?;
        Ok(cat)
    }

    pub(crate) fn set_orbit(&mut self, base: LinearCategory, sigma: CatAutomorphism) {
        self.orbit = Some(OrbitSource { base, sigma });
    }

    fn nonzero_blocks(&self) -> Vec<(usize, usize, i32)> {
        let n = self.n_objects();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for d in -self.window..=self.window {
                    if self.dim_in_window(x, y, d) > 0 {
                        out.push((x, y, d));
                    }
                }
            }
        }
        out
    }

    fn dim_in_window(&self, x: usize, y: usize, n: i32) -> usize {
        let w = (2 * self.window + 1) as usize;
        self.dims[(x * self.n_objects() + y) * w + (n + self.window) as usize]
    }

    fn check_identities(&self) -> Result<()> {
        for (x, y, d) in self.nonzero_blocks() {
            for b in 0..self.dim_in_window(x, y, d) {
                let f = self.basis(x, y, d, b);
                let left = self.compose(x, y, y, d, 0, &self.identities[y], &f)?;
                let right = self.compose(x, x, y, 0, d, &f, &self.identities[x])?;
                if left != f || right != f {
                    return Err(Error::Malformed(format!("identity law fails on a degree-{d} morphism {x} -> {y}")));
                }
            }
        }
        Ok(())
    }

    /// `h∘(g∘f) = (h∘g)∘f` on basis morphisms whenever every partial composite is in the window.
    pub fn check_associativity(&self) -> Result<()> {
        let blocks = self.nonzero_blocks();
        let mut from: HashMap<usize, Vec<(usize, i32)>> = HashMap::new();
        for &(x, y, d) in &blocks {
            from.entry(x).or_default().push((y, d));
        }
        let none = Vec::new();
        let d_max = self.window;
        for &(w, x, i) in &blocks {
            for &(y, j) in from.get(&x).unwrap_or(&none) {
                if (i + j).abs() > d_max {
                    continue;
                }
                for &(z, k) in from.get(&y).unwrap_or(&none) {
                    if (j + k).abs() > d_max || (i + j + k).abs() > d_max {
                        continue;
                    }
                    for f in 0..self.dim_in_window(w, x, i) {
                        let ef = self.basis(w, x, i, f);
                        for g in 0..self.dim_in_window(x, y, j) {
                            let eg = self.basis(x, y, j, g);
                            let gf = self.compose(w, x, y, i, j, &eg, &ef)?;
                            for h in 0..self.dim_in_window(y, z, k) {
                                let eh = self.basis(y, z, k, h);
                                let left = self.compose(w, y, z, i + j, k, &eh, &gf)?;
                                let hg = self.compose(x, y, z, j, k, &eh, &eg)?;
                                let right = self.compose(w, x, z, i, j + k, &hg, &ef)?;
                                if left != right {
                                    return Err(Error::Malformed(format!(
                                        "composition is not associative on objects {w},{x},{y},{z} in degrees {i},{j},{k}"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn window(&self) -> i32 {
        self.window
    }
    pub fn is_bounded(&self) -> bool {
        self.bounded
    }
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }
    pub fn identity(&self, x: usize) -> &[u32] {
        &self.identities[x]
    }

    /// Largest absolute degree among the generators.
    pub fn generator_degree(&self) -> i32 {
        self.generators.iter().map(|g| g.degree.abs()).max().unwrap_or(0)
    }

    /// `dim Hom_n(x, y)`; zero outside the window for bounded categories.
    pub fn hom_dim(&self, x: usize, y: usize, n: i32) -> Result<usize> {
        if n.abs() <= self.window {
            Ok(self.dim_in_window(x, y, n))
        } else if self.bounded {
            Ok(0)
        } else {
            Err(Error::WindowTooSmall { degree: n })
        }
    }

    pub fn basis(&self, x: usize, y: usize, n: i32, b: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim_in_window(x, y, n)];
        v[b] = 1;
        v
    }

    /// `g∘f` for `f ∈ Hom_i(x, y)` and `g ∈ Hom_j(y, z)`.
    #[allow(clippy::too_many_arguments)]
    pub fn compose(&self, x: usize, y: usize, z: usize, i: i32, j: i32, g: &[u32], f: &[u32]) -> Result<Vec<u32>> {
        let dz = self.hom_dim(x, z, i + j)?;
        let mut out = vec![0u32; dz];
        if dz == 0 || f.is_empty() || g.is_empty() {
            return Ok(out);
        }
        let Some(block) = self.comp.get(&(x, y, z, i, j)) else {
            return Ok(out);
        };
        let df = f.len();
        let fp = self.fp;
        for (gi, &gc) in g.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (fi, &fc) in f.iter().enumerate().filter(|(_, &c)| c != 0) {
                let off = (gi * df + fi) * dz;
                fp.axpy(&mut out, fp.mul(gc, fc), &block[off..off + dz]);
            }
        }
        Ok(out)
    }

    /// Offsets of each `Hom_n(x, x)` inside `⊕_x Hom_n(x, x)`, with the total at the end.
    pub fn end_offsets(&self, n: i32) -> Result<Vec<usize>> {
        let mut offsets = vec![0];
        for x in 0..self.n_objects() {
            let next = offsets[x] + self.hom_dim(x, x, n)?;
            offsets.push(next);
        }
        Ok(offsets)
    }

    fn require_generated(&self, n: i32) -> Result<()> {
        if !self.bounded && n.abs() + self.generator_degree() > self.window {
            return Err(Error::WindowTooSmall { degree: n });
        }
        Ok(())
    }

    /// Columns: the linear map `m ↦ f∘m_x - (-1)^{nj} m_y∘f` on `⊕_x Hom_n(x,x)`.
    fn commutation_rows(&self, n: i32, f: &Generator, offsets: &[usize]) -> Result<Matrix> {
        let (x, y, j) = (f.source, f.target, f.degree);
        let rows = self.hom_dim(x, y, n + j)?;
        let total = *offsets.last().expect("offsets end with the total");
        let mut m = Matrix::zeros(self.fp, rows, total);
        if rows == 0 {
            return Ok(m);
        }
        let sign = self.fp.sign(koszul(n, j));
        for b in 0..self.hom_dim(x, x, n)? {
            let v = self.compose(x, x, y, n, j, &f.coords, &self.basis(x, x, n, b))?;
            for (r, c) in v.into_iter().enumerate() {
                m.add_at(r, offsets[x] + b, c);
            }
        }
        for b in 0..self.hom_dim(y, y, n)? {
            let v = self.compose(x, y, y, j, n, &self.basis(y, y, n, b), &f.coords)?;
            for (r, c) in v.into_iter().enumerate() {
                m.add_at(r, offsets[y] + b, self.fp.neg(self.fp.mul(sign, c)));
            }
        }
        Ok(m)
    }

    fn center_against(&self, n: i32, gens: &[Generator]) -> Result<CenterComponent> {
        let offsets = self.end_offsets(n)?;
        let total = *offsets.last().expect("nonempty");
        let mut eqs = Matrix::zeros(self.fp, 0, total);
        for f in gens {
            eqs = eqs.vstack(&self.commutation_rows(n, f, &offsets)?);
        }
        Ok(CenterComponent { degree: n, offsets, space: eqs.kernel() })
    }

    /// Degree-`n` part of the graded center: `f∘m_x = (-1)^{nj} m_y∘f` for every generator `f` of degree `j`.
    pub fn center_component(&self, n: i32) -> Result<CenterComponent> {
        self.require_generated(n)?;
        self.center_against(n, &self.generators)
    }

    /// Span of `f∘u - (-1)^{j(n-j)} u∘f` over generators `f` of degree `j` and basis morphisms `u`.
    pub fn commutator_component(&self, n: i32) -> Result<Subspace> {
        self.require_generated(n)?;
        self.commutators_against(n, &self.generators)
    }

    fn commutators_against(&self, n: i32, gens: &[Generator]) -> Result<Subspace> {
        let offsets = self.end_offsets(n)?;
        let total = *offsets.last().expect("nonempty");
        let mut vectors = Vec::new();
        for f in gens {
            let (x, y, j) = (f.source, f.target, f.degree);
            let sign = self.fp.sign(koszul(j, n - j));
            for b in 0..self.hom_dim(y, x, n - j)? {
                let u = self.basis(y, x, n - j, b);
                let mut v = vec![0u32; total];
                let fu = self.compose(y, x, y, n - j, j, &f.coords, &u)?;
                let uf = self.compose(x, y, x, j, n - j, &u, &f.coords)?;
                self.fp.axpy(&mut v[offsets[y]..offsets[y + 1]], 1, &fu);
                self.fp.axpy(&mut v[offsets[x]..offsets[x + 1]], self.fp.neg(sign), &uf);
                vectors.push(v);
            }
        }
        Subspace::span(self.fp, total, vectors)
    }

    pub fn ab_component(&self, n: i32) -> Result<AbComponent> {
        let commutators = self.commutator_component(n)?;
        let offsets = self.end_offsets(n)?;
        Ok(AbComponent { degree: n, offsets, quotient: Quotient::of_ambient(&commutators), commutators })
    }

    /// `Σ_x a_x∘b_x` for families of degrees `i` and `j`.
    pub fn multiply_families(&self, i: i32, a: &[u32], j: i32, b: &[u32]) -> Result<Vec<u32>> {
        let (oa, ob, out) = (self.end_offsets(i)?, self.end_offsets(j)?, self.end_offsets(i + j)?);
        let mut v = vec![0u32; *out.last().expect("nonempty")];
        for x in 0..self.n_objects() {
            // first b_x (degree j), then a_x (degree i)
            let c = self.compose(x, x, x, j, i, &a[oa[x]..oa[x + 1]], &b[ob[x]..ob[x + 1]])?;
            self.fp.axpy(&mut v[out[x]..out[x + 1]], 1, &c);
        }
        Ok(v)
    }

    /// The p-th power map on families, `(r_x)_x ↦ (r_x^p)_x`.
    pub fn power_family(&self, n: i32, r: &[u32]) -> Result<Vec<u32>> {
        let mut acc = r.to_vec();
        for k in 1..self.fp.p() as i32 {
            acc = self.multiply_families(n, r, k * n, &acc)?;
        }
        Ok(acc)
    }

    /// `ξ_p: Ab_n → Ab_{np}` on quotient coordinates.
    pub fn xi_p_ab(&self, n: i32) -> Result<Matrix> {
        let p = self.fp.p() as i32;
        let src = self.ab_component(n)?;
        let dst = self.ab_component(n * p)?;
        self.xi_between(&src, &dst)
    }

    fn xi_between(&self, src: &AbComponent, dst: &AbComponent) -> Result<Matrix> {
        let cols = (0..src.dim())
            .map(|c| {
                let power = self.power_family(src.degree, &src.quotient.rep(c))?;
                dst.quotient.project(&power)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.fp, dst.dim(), &cols))
    }

    /// `ξ_p^r: Ab_n → Ab_{np^r}`.
    pub fn xi_power(&self, n: i32, r: usize) -> Result<Matrix> {
        let p = self.fp.p() as i64;
        let mut comp = self.ab_component(n)?;
        let mut acc = Matrix::identity(self.fp, comp.dim());
        for _ in 0..r {
            let next_deg = comp.degree as i64 * p;
            let next_deg = i32::try_from(next_deg).map_err(|_| Error::WindowTooSmall { degree: i32::MAX })?;
            let next = self.ab_component(next_deg)?;
            acc = self.xi_between(&comp, &next)?.mul(&acc);
            comp = next;
        }
        Ok(acc)
    }

    /// `T_r` in degree `n`: classes whose `p^r`-th power is a graded commutator.
    pub fn t_r(&self, r: usize, n: i32) -> Result<Subspace> {
        Ok(self.xi_power(n, r)?.kernel())
    }

    /// The Σ-action on `⊕_x Hom_n(x, x)`, `(Σm)_{σx} = (-1)^n σ(m_x)`; orbit categories only.
    pub fn sigma_action(&self, n: i32) -> Result<Matrix> {
        let orbit = self.orbit.as_ref().ok_or_else(|| Error::Malformed("no Σ-action recorded".into()))?;
        let offsets = self.end_offsets(n)?;
        let total = *offsets.last().expect("nonempty");
        let sign = self.fp.sign(n as i64);
        let sn = orbit.sigma.power(n as i64);
        let mut m = Matrix::zeros(self.fp, total, total);
        for x in 0..self.n_objects() {
            // m_x ∈ C(x, σ^n x) maps to C(σx, σ^{n+1} x)
            let sx = orbit.sigma.object(x);
            let map = orbit.sigma.map(x, sn.object(x));
            for b in 0..map.cols() {
                for r in 0..map.rows() {
                    m.add_at(offsets[sx] + r, offsets[x] + b, self.fp.mul(sign, map.get(r, b)));
                }
            }
        }
        Ok(m)
    }

    fn degree_zero_base_generators(&self) -> Result<Vec<Generator>> {
        let orbit = self.orbit.as_ref().ok_or_else(|| Error::Malformed("no Σ-action recorded".into()))?;
        let c = &orbit.base;
        let mut gens = Vec::new();
        for x in 0..c.n_objects() {
            for y in 0..c.n_objects() {
                for b in 0..c.hom_dim(x, y) {
                    gens.push(Generator { source: x, target: y, degree: 0, coords: c.basis(x, y, b) });
                }
            }
        }
        Ok(gens)
    }

    /// Families commuting with degree-zero morphisms only; orbit categories only.
    pub fn base_center_component(&self, n: i32) -> Result<CenterComponent> {
        self.hom_dim(0, 0, n)?;
        self.center_against(n, &self.degree_zero_base_generators()?)
    }

    /// Commutators against degree-zero morphisms only; orbit categories only.
    pub fn base_commutator_component(&self, n: i32) -> Result<Subspace> {
        self.hom_dim(0, 0, n)?;
        self.commutators_against(n, &self.degree_zero_base_generators()?)
    }
}

/// `{v ∈ space : action v = v}`.
pub fn sigma_invariants(space: &Subspace, action: &Matrix) -> Result<Subspace> {
    let fixed = action.sub(&Matrix::identity(action.fp(), action.rows())).kernel();
    space.intersect(&fixed)
}

/// The ambient space modulo `relations + Im(id - a·action)`.
pub fn sigma_coinvariants(relations: &Subspace, action: &Matrix, sign: i64) -> Result<Quotient> {
    let fp = action.fp();
    let a = fp.from_i64(sign);
    let moved = Matrix::identity(fp, action.rows()).sub(&action.scale(a)).image();
    Ok(Quotient::of_ambient(&relations.sum(&moved)?))
}

impl From<&LinearCategory> for GradedCategory {
    /// A nongraded category viewed as concentrated in degree 0, bounded with window 0.
    fn from(c: &LinearCategory) -> Self {
        GradedCategory::from_fn(
            c.fp(),
            c.objects().to_vec(),
            0,
            true,
            |x, y, _| c.hom_dim(x, y),
            |x, y, z, _, _, g, f| c.compose_basis(x, y, z, g, f).to_vec(),
            (0..c.n_objects()).map(|x| c.identity(x).to_vec()).collect(),
            None,
        )
        .expect("a valid category stays valid in degree 0")
    }
}

#[cfg(test)]
mod tests;
