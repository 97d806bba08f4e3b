//! Hochschild–Mitchell chains and cochains of a finite linear category with
//! coefficients in a bimodule, built from the bar construction.
//!
//! Following the usual juxtaposition convention, `A^a_b` denotes `Hom(b, a)`
//! and the product `f g` of `f ∈ A^a_b`, `g ∈ A^b_c` is `f∘g ∈ A^a_c`. A
//! bimodule `M` has spaces `M(a,b)` with `A^a_b × M(b,c) → M(a,c)` on the
//! left and `M(a,b) × A^b_c → M(a,c)` on the right.
//!
//! Cochain index: object tuples `(x_0..x_n)` in lexicographic order, then the
//! basis tensor of `A^{x_0}_{x_1} ⊗ … ⊗ A^{x_{n-1}}_{x_n}` (first factor most
//! significant), then the coordinate in `M(x_0, x_n)`. Chain index: object
//! tuple, then the coordinate in `M(x_n, x_0)`, then the basis tensor.

use crate::algebra::FinDimAlgebra;
use crate::category::{CatAutomorphism, LinearCategory};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix, Quotient, Subspace};
use std::collections::HashMap;

/// Largest dense matrix (in entries) any single computation may build.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// A bimodule over a finite linear category.
#[derive(Clone, Debug)]
pub struct Bimodule {
    n: usize,
    dims: Vec<usize>,
    /// `(a,b,c)`: `A^a_b × M(b,c) → M(a,c)`, indexed `[f][m][k]`
    left: Vec<Vec<u32>>,
    /// `(a,b,c)`: `M(a,b) × A^b_c → M(a,c)`, indexed `[m][g][k]`
    right: Vec<Vec<u32>>,
}

/// Product `N(a,b) × M(b,c) → P(a,c)`, used to contract chains against cochains.
#[derive(Clone, Debug)]
pub struct Contraction {
    n: usize,
    p_dims: Vec<usize>,
    /// `(a,b,c)`, indexed `[u][v][k]`
    product: Vec<Vec<u32>>,
}

/// An action `M(a,b) → M(πa, πb)` compatible with a category automorphism.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    auto: CatAutomorphism,
    maps: Vec<Matrix>,
}

fn idx3(n: usize, a: usize, b: usize, c: usize) -> usize {
    (a * n + b) * n + c
}

/// `A^a_b = Hom(b, a)`.
fn adim(cat: &LinearCategory, a: usize, b: usize) -> usize {
    cat.hom_dim(b, a)
}

/// `f g` for basis elements `f ∈ A^a_b`, `g ∈ A^b_c`.
fn aprod(cat: &LinearCategory, a: usize, b: usize, c: usize, f: usize, g: usize) -> &[u32] {
    cat.compose_basis(c, b, a, f, g)
}

impl Bimodule {
    /// Builds a bimodule from closures giving `f·m` and `m·g` on basis elements.
    fn from_fns(
        cat: &LinearCategory,
        dims: Vec<usize>,
        left: impl Fn(usize, usize, usize, usize, usize) -> Vec<u32>,
        right: impl Fn(usize, usize, usize, usize, usize) -> Vec<u32>,
    ) -> Self {
        let n = cat.n_objects();
        let mut l = vec![Vec::new(); n * n * n];
        let mut r = vec![Vec::new(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let block = &mut l[idx3(n, a, b, c)];
                    for f in 0..adim(cat, a, b) {
                        for m in 0..dims[b * n + c] {
                            block.extend(left(a, b, c, f, m));
                        }
                    }
                    let block = &mut r[idx3(n, a, b, c)];
                    for m in 0..dims[a * n + b] {
                        for g in 0..adim(cat, b, c) {
                            block.extend(right(a, b, c, m, g));
                        }
                    }
                }
            }
        }
        Bimodule { n, dims, left: l, right: r }
    }

    /// `A` as a bimodule over itself.
    pub fn regular(cat: &LinearCategory) -> Self {
        Self::twisted(cat, &CatAutomorphism::identity(cat), 0)
    }

    /// `M_i(a,b) = A^{Σ^i a}_b = Hom(b, Σ^i a)` with `f·m = Σ^i(f) m` and `m·g = m g`;
    /// the degree `i` part of the orbit bimodule.
    pub fn twisted(cat: &LinearCategory, sigma: &CatAutomorphism, i: i64) -> Self {
        let n = cat.n_objects();
        let s = sigma.power(i);
        let dims = (0..n * n).map(|ab| cat.hom_dim(ab % n, s.object(ab / n))).collect();
        Self::from_fns(
            cat,
            dims,
            |a, b, c, f, m| {
                // Σ^i(f): Hom(π^i b, π^i a), m: Hom(c, π^i b)
                let sf = s.apply(b, a, &cat.basis(b, a, f));
                cat.compose(c, s.object(b), s.object(a), &sf, &cat.basis(c, s.object(b), m))
            },
            |a, b, c, m, g| cat.compose_basis(c, b, s.object(a), m, g).to_vec(),
        )
    }

    pub fn dim(&self, a: usize, b: usize) -> usize {
        self.dims[a * self.n + b]
    }

    fn left(&self, a: usize, b: usize, c: usize, f: usize, m: usize) -> &[u32] {
        let d = self.dim(a, c);
        let off = (f * self.dim(b, c) + m) * d;
        &self.left[idx3(self.n, a, b, c)][off..off + d]
    }

    fn right(&self, a: usize, b: usize, c: usize, m: usize, g: usize, adim_bc: usize) -> &[u32] {
        let d = self.dim(a, c);
        let off = (m * adim_bc + g) * d;
        &self.right[idx3(self.n, a, b, c)][off..off + d]
    }
}

impl Contraction {
    /// `Λ × Λ → Λ` for the regular bimodule.
    pub fn regular(cat: &LinearCategory) -> Self {
        Self::twisted(cat, &CatAutomorphism::identity(cat), 0, 0)
    }

    /// `M_j × M_i → M_{i+j}`, `u ∘ v = Σ^i(u) v`.
    pub fn twisted(cat: &LinearCategory, sigma: &CatAutomorphism, j: i64, i: i64) -> Self {
        let n = cat.n_objects();
        let (sj, si, sij) = (sigma.power(j), sigma.power(i), sigma.power(i + j));
        let mj = |a: usize, b: usize| cat.hom_dim(b, sj.object(a));
        let mi = |a: usize, b: usize| cat.hom_dim(b, si.object(a));
        let p_dims: Vec<usize> = (0..n * n).map(|ab| cat.hom_dim(ab % n, sij.object(ab / n))).collect();
        let mut product = vec![Vec::new(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let block = &mut product[idx3(n, a, b, c)];
                    for u in 0..mj(a, b) {
                        // u: Hom(b, π^j a), Σ^i u: Hom(π^i b, π^{i+j} a)
                        let su = si.apply(b, sj.object(a), &cat.basis(b, sj.object(a), u));
                        for v in 0..mi(b, c) {
                            let vv = cat.basis(c, si.object(b), v);
                            block.extend(cat.compose(c, si.object(b), sij.object(a), &su, &vv));
                        }
                    }
                }
            }
        }
        Contraction { n, p_dims, product }
    }

    pub fn p_dim(&self, a: usize, b: usize) -> usize {
        self.p_dims[a * self.n + b]
    }
}

impl ModuleAction {
    /// The identity action on any bimodule.
    pub fn identity(cat: &LinearCategory, m: &Bimodule) -> Self {
        let n = cat.n_objects();
        ModuleAction { auto: CatAutomorphism::identity(cat), maps: (0..n * n).map(|ab| Matrix::identity(cat.fp(), m.dims[ab])).collect() }
    }

    /// `u ↦ sign·Σ(u)` on `M_i`.
    pub fn twisted(cat: &LinearCategory, sigma: &CatAutomorphism, i: i64, sign: u32) -> Self {
        let n = cat.n_objects();
        let s = sigma.power(i);
        let maps = (0..n * n)
            .map(|ab| {
                let (a, b) = (ab / n, ab % n);
                // M_i(a,b) = Hom(b, π^i a) → Hom(πb, π^{i+1} a) = M_i(πa, πb)
                sigma.map(b, s.object(a)).scale(sign)
            })
            .collect();
        ModuleAction { auto: sigma.clone(), maps }
    }

    fn map(&self, a: usize, b: usize) -> &Matrix {
        &self.maps[a * self.auto.perm().len() + b]
    }
}

/// Index bookkeeping for one chain or cochain degree.
#[derive(Clone, Debug)]
struct Layout {
    blocks: Vec<Block>,
    lookup: HashMap<Vec<usize>, usize>,
    total: usize,
}

#[derive(Clone, Debug)]
struct Block {
    objs: Vec<usize>,
    offset: usize,
    radices: Vec<usize>,
    tensor: usize,
    mdim: usize,
}

impl Layout {
    fn new(cat: &LinearCategory, n: usize, mdim: impl Fn(&[usize]) -> usize) -> Self {
        let k = cat.n_objects();
        let mut blocks = Vec::new();
        let mut lookup = HashMap::new();
        let mut total = 0usize;
        let count = k.pow(n as u32 + 1);
        for mut code in 0..count {
            let mut objs = vec![0; n + 1];
            for slot in objs.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            let radices: Vec<usize> = objs.windows(2).map(|w| adim(cat, w[0], w[1])).collect();
            let tensor = radices.iter().product();
            let md = mdim(&objs);
            lookup.insert(objs.clone(), blocks.len());
            blocks.push(Block { objs, offset: total, radices, tensor, mdim: md });
            total += tensor * md;
        }
        Layout { blocks, lookup, total }
    }

    fn block(&self, objs: &[usize]) -> &Block {
        &self.blocks[self.lookup[objs]]
    }
}

fn decode(mut t: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = t % r;
        t /= r;
    }
    out
}

fn encode(digits: &[usize], radices: &[usize]) -> usize {
    digits.iter().zip(radices).fold(0, |acc, (&d, &r)| acc * r + d)
}

/// Chains and cochains of a finite category with coefficients in one bimodule.
#[derive(Clone, Debug)]
pub struct HochschildComplex {
    cat: LinearCategory,
    module: Bimodule,
    budget: u128,
}

/// `HH^n` with a basis of cocycle representatives.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: usize,
    pub dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub reps: Vec<Vec<u32>>,
}

impl HochschildComplex {
    pub fn new(cat: LinearCategory, module: Bimodule) -> Self {
        HochschildComplex { cat, module, budget: DEFAULT_BUDGET }
    }

    /// The algebra with coefficients in itself.
    pub fn of_algebra(alg: &FinDimAlgebra) -> Self {
        let cat = LinearCategory::from_algebra(alg);
        let module = Bimodule::regular(&cat);
        Self::new(cat, module)
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn category(&self) -> &LinearCategory {
        &self.cat
    }
    pub fn module(&self) -> &Bimodule {
        &self.module
    }
    fn fp(&self) -> Fp {
        self.cat.fp()
    }

    fn cochain_layout(&self, n: usize) -> Layout {
        Layout::new(&self.cat, n, |o| self.module.dim(o[0], o[o.len() - 1]))
    }

    fn chain_layout(&self, n: usize) -> Layout {
        Layout::new(&self.cat, n, |o| self.module.dim(o[o.len() - 1], o[0]))
    }

    pub fn cochain_dim(&self, n: usize) -> usize {
        self.cochain_layout(n).total
    }

    pub fn chain_dim(&self, n: usize) -> usize {
        self.chain_layout(n).total
    }

    fn check_budget(&self, rows: usize, cols: usize) -> Result<()> {
        let entries = rows as u128 * cols as u128;
        if entries > self.budget {
            return Err(Error::BudgetExceeded { entries, budget: self.budget });
        }
        Ok(())
    }

    /// Calls `emit(row, col, coef)` for every contribution to `d^n: C^n → C^{n+1}`.
    fn cochain_entries(&self, n: usize, mut emit: impl FnMut(usize, usize, u32)) {
        let fp = self.fp();
        let (src, dst) = (self.cochain_layout(n), self.cochain_layout(n + 1));
        let cat = &self.cat;
        let m = &self.module;
        for blk in &dst.blocks {
            let o = &blk.objs;
            let last = n + 1;
            for t in 0..blk.tensor {
                let fs = decode(t, &blk.radices);
                let row0 = blk.offset + t * blk.mdim;
                // f_0 α(f_1 ⊗ … ⊗ f_n)
                let sb = src.block(&o[1..]);
                let st = encode(&fs[1..], &sb.radices);
                for k in 0..sb.mdim {
                    let col = sb.offset + st * sb.mdim + k;
                    for (kk, &c) in m.left(o[0], o[1], o[last], fs[0], k).iter().enumerate() {
                        if c != 0 {
                            emit(row0 + kk, col, c);
                        }
                    }
                }
                // (-1)^i α(… ⊗ f_{i-1} f_i ⊗ …)
                for i in 1..=n {
                    let mut objs = o.clone();
                    objs.remove(i);
                    let sb = src.block(&objs);
                    let sign = fp.sign(i as i64);
                    let prod = aprod(cat, o[i - 1], o[i], o[i + 1], fs[i - 1], fs[i]);
                    for (g, &c) in prod.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let mut digits = fs.clone();
                        digits.remove(i);
                        digits[i - 1] = g;
                        let st = encode(&digits, &sb.radices);
                        for k in 0..sb.mdim {
                            emit(row0 + k, sb.offset + st * sb.mdim + k, fp.mul(sign, c));
                        }
                    }
                }
                // (-1)^{n+1} α(f_0 ⊗ … ⊗ f_{n-1}) f_n
                let sb = src.block(&o[..last]);
                let st = encode(&fs[..n], &sb.radices);
                let sign = fp.sign(n as i64 + 1);
                let abc = adim(cat, o[n], o[last]);
                for k in 0..sb.mdim {
                    let col = sb.offset + st * sb.mdim + k;
                    for (kk, &c) in m.right(o[0], o[n], o[last], k, fs[n], abc).iter().enumerate() {
                        if c != 0 {
                            emit(row0 + kk, col, fp.mul(sign, c));
                        }
                    }
                }
            }
        }
    }

    /// Calls `emit(row, col, coef)` for every contribution to `d_n: C_{n+1} → C_n`.
    fn chain_entries(&self, n: usize, mut emit: impl FnMut(usize, usize, u32)) {
        let fp = self.fp();
        let (src, dst) = (self.chain_layout(n + 1), self.chain_layout(n));
        let cat = &self.cat;
        let m = &self.module;
        let last = n + 1;
        for blk in &src.blocks {
            let o = &blk.objs;
            for u in 0..blk.mdim {
                for t in 0..blk.tensor {
                    let col = blk.offset + u * blk.tensor + t;
                    let fs = decode(t, &blk.radices);
                    // u f_0 ⊗ f_1 ⊗ … ⊗ f_n
                    let db = dst.block(&o[1..]);
                    let dt = encode(&fs[1..], &db.radices);
                    let a01 = adim(cat, o[0], o[1]);
                    for (k, &c) in m.right(o[last], o[0], o[1], u, fs[0], a01).iter().enumerate() {
                        if c != 0 {
                            emit(db.offset + k * db.tensor + dt, col, c);
                        }
                    }
                    // (-1)^i u ⊗ … ⊗ f_{i-1} f_i ⊗ …
                    for i in 1..=n {
                        let mut objs = o.clone();
                        objs.remove(i);
                        let db = dst.block(&objs);
                        let sign = fp.sign(i as i64);
                        let prod = aprod(cat, o[i - 1], o[i], o[i + 1], fs[i - 1], fs[i]);
                        for (g, &c) in prod.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            let mut digits = fs.clone();
                            digits.remove(i);
                            digits[i - 1] = g;
                            emit(db.offset + u * db.tensor + encode(&digits, &db.radices), col, fp.mul(sign, c));
                        }
                    }
                    // (-1)^{n+1} f_n u ⊗ f_0 ⊗ … ⊗ f_{n-1}
                    let db = dst.block(&o[..last]);
                    let dt = encode(&fs[..n], &db.radices);
                    let sign = fp.sign(n as i64 + 1);
                    for (k, &c) in m.left(o[n], o[last], o[0], fs[n], u).iter().enumerate() {
                        if c != 0 {
                            emit(db.offset + k * db.tensor + dt, col, fp.mul(sign, c));
                        }
                    }
                }
            }
        }
    }

    /// Matrix of `d^n: C^n → C^{n+1}`.
    pub fn cochain_differential(&self, n: usize) -> Result<Matrix> {
        let (rows, cols) = (self.cochain_dim(n + 1), self.cochain_dim(n));
        self.check_budget(rows, cols)?;
        let mut m = Matrix::zeros(self.fp(), rows, cols);
        self.cochain_entries(n, |r, c, v| m.add_at(r, c, v));
        Ok(m)
    }

    /// Matrix of `d_n: C_{n+1} → C_n`.
    pub fn chain_differential(&self, n: usize) -> Result<Matrix> {
        let (rows, cols) = (self.chain_dim(n), self.chain_dim(n + 1));
        self.check_budget(rows, cols)?;
        let mut m = Matrix::zeros(self.fp(), rows, cols);
        self.chain_entries(n, |r, c, v| m.add_at(r, c, v));
        Ok(m)
    }

    /// `d^n α` without building the matrix.
    pub fn apply_cochain_differential(&self, n: usize, alpha: &[u32]) -> Vec<u32> {
        let fp = self.fp();
        let mut out = vec![0u32; self.cochain_dim(n + 1)];
        self.cochain_entries(n, |r, c, v| {
            if alpha[c] != 0 {
                out[r] = fp.fma(out[r], v, alpha[c]);
            }
        });
        out
    }

    /// `d_n γ` without building the matrix.
    pub fn apply_chain_differential(&self, n: usize, gamma: &[u32]) -> Vec<u32> {
        let fp = self.fp();
        let mut out = vec![0u32; self.chain_dim(n)];
        self.chain_entries(n, |r, c, v| {
            if gamma[c] != 0 {
                out[r] = fp.fma(out[r], v, gamma[c]);
            }
        });
        out
    }

    fn rank_of_cochain_differential(&self, n: Option<usize>) -> Result<usize> {
        match n {
            None => Ok(0),
            Some(n) => Ok(self.cochain_differential(n)?.rank()),
        }
    }

    /// `HH^n = ker d^n / im d^{n-1}` with cocycle representatives.
    pub fn cohomology(&self, n: usize) -> Result<Cohomology> {
        let d = self.cochain_differential(n)?;
        let cocycles = d.kernel();
        let coboundaries = match n.checked_sub(1) {
            None => Subspace::zero(self.fp(), self.cochain_dim(0)),
            Some(m) => self.cochain_differential(m)?.image(),
        };
        let q = Quotient::new(&cocycles, &coboundaries)?;
        Ok(Cohomology { degree: n, dim: q.dim(), reps: q.reps().row_vecs().collect(), cocycles, coboundaries })
    }

    /// `dim HH^n`, computed from ranks only.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize> {
        let rank_n = self.rank_of_cochain_differential(Some(n))?;
        let rank_prev = self.rank_of_cochain_differential(n.checked_sub(1))?;
        Ok(self.cochain_dim(n) - rank_n - rank_prev)
    }

    /// `dim HH_n = dim ker d_{n-1} - rank d_n`.
    pub fn homology_dim(&self, n: usize) -> Result<usize> {
        let rank_in = self.chain_differential(n)?.rank();
        let rank_out = match n.checked_sub(1) {
            None => 0,
            Some(m) => self.chain_differential(m)?.rank(),
        };
        Ok(self.chain_dim(n) - rank_out - rank_in)
    }

    /// `HH_0 = C_0 / im d_0`, with the canonical quotient basis.
    pub fn hh0_quotient(&self) -> Result<Quotient> {
        Ok(Quotient::of_ambient(&self.chain_differential(0)?.image()))
    }

    /// Matrix of `(Σα)(f_1⊗…⊗f_n) = Σ(α(Σ⁻¹f_1 ⊗ … ⊗ Σ⁻¹f_n))` on `C^n`.
    pub fn sigma_action_cochains(&self, n: usize, act: &ModuleAction) -> Result<Matrix> {
        let lay = self.cochain_layout(n);
        self.check_budget(lay.total, lay.total)?;
        let inv = act.auto.inverse();
        let mut out = Matrix::zeros(self.fp(), lay.total, lay.total);
        for blk in &lay.blocks {
            let o = &blk.objs;
            let src_objs: Vec<usize> = o.iter().map(|&x| inv.object(x)).collect();
            let sb = lay.block(&src_objs);
            // Σ⁻¹ on each factor A^{x_i}_{x_{i+1}} = Hom(x_{i+1}, x_i)
            let factor_maps: Vec<&Matrix> = o.windows(2).map(|w| inv.map(w[1], w[0])).collect();
            let tmap = act.map(src_objs[0], src_objs[n]);
            for t in 0..blk.tensor {
                let fs = decode(t, &blk.radices);
                // expand Σ⁻¹f_1 ⊗ … as a sum of basis tensors
                let mut terms: Vec<(Vec<usize>, u32)> = vec![(Vec::new(), 1)];
                for (i, &f) in fs.iter().enumerate() {
                    let col = factor_maps[i].column(f);
                    let mut next = Vec::new();
                    for (digits, c) in &terms {
                        for (g, &v) in col.iter().enumerate().filter(|(_, &v)| v != 0) {
                            let mut d = digits.clone();
                            d.push(g);
                            next.push((d, self.fp().mul(*c, v)));
                        }
                    }
                    terms = next;
                }
                for (digits, c) in terms {
                    let st = encode(&digits, &sb.radices);
                    for k in 0..sb.mdim {
                        for kk in 0..blk.mdim {
                            let v = self.fp().mul(c, tmap.get(kk, k));
                            if v != 0 {
                                out.add_at(blk.offset + t * blk.mdim + kk, sb.offset + st * sb.mdim + k, v);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `Σ(u ⊗ f_1 ⊗ … ⊗ f_n) = Σu ⊗ Σf_1 ⊗ … ⊗ Σf_n` on `C_n`.
    pub fn sigma_action_chains(&self, n: usize, act: &ModuleAction) -> Result<Matrix> {
        let lay = self.chain_layout(n);
        self.check_budget(lay.total, lay.total)?;
        let fp = self.fp();
        let mut out = Matrix::zeros(fp, lay.total, lay.total);
        for blk in &lay.blocks {
            let o = &blk.objs;
            let dst_objs: Vec<usize> = o.iter().map(|&x| act.auto.object(x)).collect();
            let db = lay.block(&dst_objs);
            let factor_maps: Vec<&Matrix> = o.windows(2).map(|w| act.auto.map(w[1], w[0])).collect();
            let umap = act.map(o[n], o[0]);
            for u in 0..blk.mdim {
                let ucol = umap.column(u);
                for t in 0..blk.tensor {
                    let fs = decode(t, &blk.radices);
                    let mut terms: Vec<(Vec<usize>, u32)> = vec![(Vec::new(), 1)];
                    for (i, &f) in fs.iter().enumerate() {
                        let col = factor_maps[i].column(f);
                        let mut next = Vec::new();
                        for (digits, c) in &terms {
                            for (g, &v) in col.iter().enumerate().filter(|(_, &v)| v != 0) {
                                let mut d = digits.clone();
                                d.push(g);
                                next.push((d, fp.mul(*c, v)));
                            }
                        }
                        terms = next;
                    }
                    for (digits, c) in terms {
                        let dt = encode(&digits, &db.radices);
                        for (uu, &uv) in ucol.iter().enumerate().filter(|(_, &v)| v != 0) {
                            out.add_at(db.offset + uu * db.tensor + dt, blk.offset + u * blk.tensor + t, fp.mul(c, uv));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Cochains with coefficients in `M` paired against chains with coefficients in `N`.
#[derive(Clone, Debug)]
pub struct PairedComplexes {
    pub cochains: HochschildComplex,
    pub chains: HochschildComplex,
    pub contraction: Contraction,
}

impl PairedComplexes {
    /// One-object algebra, `M = N = P = Λ`.
    pub fn of_algebra(alg: &FinDimAlgebra) -> Self {
        let cx = HochschildComplex::of_algebra(alg);
        let contraction = Contraction::regular(cx.category());
        PairedComplexes { chains: cx.clone(), cochains: cx, contraction }
    }

    /// Orbit bimodules: cochains in degree `i`, chains in degree `j`.
    pub fn orbit(cat: &LinearCategory, sigma: &CatAutomorphism, i: i64, j: i64) -> Self {
        PairedComplexes {
            cochains: HochschildComplex::new(cat.clone(), Bimodule::twisted(cat, sigma, i)),
            chains: HochschildComplex::new(cat.clone(), Bimodule::twisted(cat, sigma, j)),
            contraction: Contraction::twisted(cat, sigma, j, i),
        }
    }

    /// `i_α(γ) ∈ C_0(A, P) = ⊕_x P(x,x)`, indexed by object then coordinate.
    pub fn contraction(&self, n: usize, alpha: &[u32], gamma: &[u32]) -> Vec<u32> {
        let cat = &self.cochains.cat;
        let fp = cat.fp();
        let k = cat.n_objects();
        let c = &self.contraction;
        let offsets: Vec<usize> = (0..k)
            .scan(0, |acc, x| {
                let o = *acc;
                *acc += c.p_dim(x, x);
                Some(o)
            })
            .collect();
        let total: usize = (0..k).map(|x| c.p_dim(x, x)).sum();
        let mut out = vec![0u32; total];
        let (cl, chl) = (self.cochains.cochain_layout(n), self.chains.chain_layout(n));
        for blk in &chl.blocks {
            let o = &blk.objs;
            let ab = cl.block(o);
            let (xn, x0) = (o[n], o[0]);
            for u in 0..blk.mdim {
                for t in 0..blk.tensor {
                    let gv = gamma[blk.offset + u * blk.tensor + t];
                    if gv == 0 {
                        continue;
                    }
                    for v in 0..ab.mdim {
                        let av = alpha[ab.offset + t * ab.mdim + v];
                        if av == 0 {
                            continue;
                        }
                        let coef = fp.mul(gv, av);
                        let d = c.p_dim(xn, xn);
                        let off = (u * ab.mdim + v) * d;
                        let prod = &c.product[idx3(k, xn, x0, xn)][off..off + d];
                        fp.axpy(&mut out[offsets[xn]..offsets[xn] + d], coef, prod);
                    }
                }
            }
        }
        out
    }

    /// Matrix with rows indexed by chains, columns by cochains, entry `tr(i_α(γ))`.
    ///
    /// `trace[x]` is a linear functional on `P(x,x)`.
    pub fn theta_matrix(&self, n: usize, trace: &[Vec<u32>]) -> Result<Matrix> {
        let (rows, cols) = (self.chains.chain_dim(n), self.cochains.cochain_dim(n));
        self.cochains.check_budget(rows, cols)?;
        let fp = self.cochains.fp();
        let k = self.cochains.cat.n_objects();
        let c = &self.contraction;
        let (cl, chl) = (self.cochains.cochain_layout(n), self.chains.chain_layout(n));
        let mut m = Matrix::zeros(fp, rows, cols);
        // u ⊗ f paired with α only sees α's value on the same tensor f
        for blk in &chl.blocks {
            let o = &blk.objs;
            let ab = cl.block(o);
            let (xn, x0) = (o[n], o[0]);
            let d = c.p_dim(xn, xn);
            for u in 0..blk.mdim {
                for v in 0..ab.mdim {
                    let off = (u * ab.mdim + v) * d;
                    let val = fp.dot(&trace[xn], &c.product[idx3(k, xn, x0, xn)][off..off + d]);
                    if val == 0 {
                        continue;
                    }
                    for t in 0..blk.tensor {
                        m.set(blk.offset + u * blk.tensor + t, ab.offset + t * ab.mdim + v, val);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Single value `tr(i_α(γ))`.
    pub fn theta_pairing(&self, n: usize, alpha: &[u32], gamma: &[u32], trace: &[Vec<u32>]) -> u32 {
        let flat: Vec<u32> = trace.iter().flatten().copied().collect();
        self.cochains.fp().dot(&flat, &self.contraction(n, alpha, gamma))
    }
}

/// `dim HH^n(Λ, Λ)` via the bar complex.
pub fn hh_cohomology_dim(alg: &FinDimAlgebra, n: usize) -> Result<usize> {
    HochschildComplex::of_algebra(alg).cohomology_dim(n)
}

/// `dim HH_n(Λ, Λ)` via the bar complex.
pub fn hh_homology_dim(alg: &FinDimAlgebra, n: usize) -> Result<usize> {
    HochschildComplex::of_algebra(alg).homology_dim(n)
}

/// `t(a) = (a, 1)`: the functional whose associated bilinear form is the given gram matrix.
pub fn trace_from_form(alg: &FinDimAlgebra, gram: &Matrix) -> Vec<u32> {
    gram.mul_vec(alg.unit())
}
