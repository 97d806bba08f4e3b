//! `Λ^{[-n,0]} ⊗^L_Λ Λ` as the totalization of the bicomplex built from the
//! periodic bimodule resolution `⋯ → Λ^e --d_+--> Λ^e --d_- --> Λ^e → Λ`,
//! the comparison maps `ι`, `π`, and the characteristic map `χ`.
//!
//! Summands of `C^{-i}` are numbered `1..` from the row of `X^0` (with `P_i`)
//! up to the row of `X^{-i}` (with `P_0`), so summand `q` is `X^{1-q} ⊗ P_{i-q+1}`.

use super::complex::{ChainMap, HomSpace, LamComplex};
use super::lambda::{Bimod, BimodMatrix, Lam, LamMatrix};
use super::morphism::{DualNumMorphism, IndecObj};
use crate::error::{Error, Result};
use crate::exactla::{Fp, Matrix};
use serde::{Deserialize, Serialize};

/// `(-1)^{⌈k/2⌉}`
fn ceil_half_sign(fp: Fp, k: usize) -> u32 {
    fp.sign(k.div_ceil(2) as i64)
}

/// The totalization truncated to degrees `-depth..=0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Totalization {
    pub n: usize,
    pub depth: usize,
    /// `d^{-i}: C^{-i} → C^{-i+1}` at index `i - 1`.
    pub diffs: Vec<BimodMatrix>,
}

/// Builds the differentials `d^{-i}_{k,k} = d_{(-1)^{i+k-1}}` and `d^{-i}_{k,k+1} = (-1)^{i+k} x⊗1`.
pub fn build_bicomplex_totalization(fp: Fp, n: usize, depth: usize) -> Totalization {
    let rank = |i: usize| i.min(n) + 1;
    let diffs = (1..=depth)
        .map(|i| {
            let mut d = BimodMatrix::zeros(rank(i - 1), rank(i));
            for k in 1..=rank(i - 1) {
                if k <= rank(i) {
                    d.set(k - 1, k - 1, Bimod::d(fp, (i + k - 1) as i64));
                }
                if k < rank(i) {
                    d.set(k - 1, k, Bimod::X_LEFT.scale(fp, fp.sign((i + k) as i64)));
                }
            }
            d
        })
        .collect();
    Totalization { n, depth, diffs }
}

impl Totalization {
    /// Number of `Λ^e` summands in `C^{-i}`.
    pub fn rank(&self, i: usize) -> usize {
        i.min(self.n) + 1
    }

    /// `d^{-i+1} d^{-i} = 0` for every composable pair.
    pub fn squares_to_zero(&self, fp: Fp) -> bool {
        self.diffs.windows(2).all(|w| w[0].mul(fp, &w[1]).is_zero())
    }

    /// The same complex of free right `Λ`-modules, in degrees `-depth..=0`.
    pub fn lam_complex(&self) -> LamComplex {
        let ranks = (0..=self.depth).rev().map(|i| 2 * self.rank(i)).collect();
        let diffs = (1..=self.depth).rev().map(|i| self.diffs[i - 1].to_lam()).collect();
        LamComplex::new(-(self.depth as i32), ranks, diffs).expect("shapes agree by construction")
    }
}

/// The comparison maps `ι: Λ^{[-n,0]} → C` and `π: C → Λ^{[-n,0]}`.
#[derive(Clone, Debug)]
pub struct IotaPi {
    pub n: usize,
    pub totalization: Totalization,
    pub iota: ChainMap,
    pub pi: ChainMap,
    /// Coefficients of `x_2` on the summands of `C^{-n}` in `π_{-n}`, found by solving.
    pub x2_coefficients: Vec<u32>,
    /// Dimension of the space of admissible `x_2` coefficients.
    pub solution_dim: usize,
}

/// `ι_{-i} = ((-1)^{⌈i/2⌉}ι_1, (-1)^{⌈(i-1)/2⌉}ι_1, …, ι_1)` and
/// `π_{-i} = ((-1)^{⌈i/2⌉}π_1, 0, …, 0)` for `i < n`, with `π_{-n}` corrected by
/// multiples of `x_2` chosen so that `π` is a chain map.
pub fn iota_pi_maps(fp: Fp, n: usize) -> Result<IotaPi> {
    let tot = build_bicomplex_totalization(fp, n, n + 2);
    let c = tot.lam_complex();
    let x = LamComplex::interval(-(n as i32), 0);
    let iota = ChainMap::from_fn(&x, &c, |deg| {
        let i = (-deg) as usize;
        let r = tot.rank(i);
        LamMatrix::from_fn(2 * r, 1, |row, _| {
            if row % 2 == 0 {
                let q = row / 2 + 1;
                Lam::new(ceil_half_sign(fp, i + 1 - q), 0)
            } else {
                Lam::ZERO
            }
        })
    })?;
    let pi_with = |coeffs: &[u32], base: bool| {
        ChainMap::from_fn(&c, &x, |deg| {
            let i = (-deg) as usize;
            let r = tot.rank(i);
            if i > n {
                return LamMatrix::zeros(0, 2 * r);
            }
            let mut m = LamMatrix::zeros(1, 2 * r);
            if base {
                m.set(0, 0, Lam::new(ceil_half_sign(fp, i), 0));
            }
            if i == n {
                for (q, &a) in coeffs.iter().enumerate() {
                    m.set(0, 2 * q + 1, Lam::new(0, a));
                }
            }
            m
        })
    };
    let flat = |f: &ChainMap| f.defect(fp, &c, &x).iter().flat_map(LamMatrix::flatten).collect::<Vec<u32>>();
    let base = flat(&pi_with(&vec![0; n + 1], true)?);
    let cols = (0..=n)
        .map(|q| {
            let mut e = vec![0; n + 1];
            e[q] = 1;
            pi_with(&e, false).map(|f| flat(&f))
        })
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::from_columns(fp, base.len(), &cols);
    let rhs: Vec<u32> = base.iter().map(|&v| fp.neg(v)).collect();
    let x2_coefficients =
        system.solve(&rhs).ok_or_else(|| Error::SolveFailed(format!("no x_2 correction makes π a chain map for n = {n}")))?;
    let solution_dim = system.kernel().dim();
    let pi = pi_with(&x2_coefficients, true)?;
    if !iota.is_chain_map(fp, &x, &c) {
        return Err(Error::SolveFailed(format!("ι is not a chain map for n = {n}")));
    }
    Ok(IotaPi { n, totalization: tot, iota, pi, x2_coefficients, solution_dim })
}

impl IotaPi {
    /// `π∘ι = Id` on the nose.
    pub fn pi_iota_is_identity(&self, fp: Fp) -> bool {
        let x = LamComplex::interval(-(self.n as i32), 0);
        let c = self.totalization.lam_complex();
        let id = ChainMap::from_fn(&x, &x, |_| LamMatrix::identity(1)).expect("rank one");
        self.iota.then(fp, &self.pi, &x, &c, &x) == id
    }

    /// A homotopy `ι∘π ≃ Id` on the degrees the truncation can see.
    pub fn iota_pi_homotopy(&self, fp: Fp) -> Option<Vec<LamMatrix>> {
        let x = LamComplex::interval(-(self.n as i32), 0);
        let c = self.totalization.lam_complex();
        let id = ChainMap::from_fn(&c, &c, |deg| LamMatrix::identity(c.rank(deg))).expect("square");
        let diff = self.pi.then(fp, &self.iota, &c, &x, &c).sub(fp, &id);
        let lowest = -(self.totalization.depth as i32) + 1;
        HomSpace::new(fp, &c, &c).null_homotopy(&diff, lowest..=0)
    }
}

/// A generator of `HH^l(Λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HhGen {
    One,
    X,
}

/// `HH^l(Λ)` in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HhClosedForm {
    pub degree: usize,
    pub description: &'static str,
    pub dim: usize,
    pub generators: Vec<HhGen>,
}

pub fn hh_closed_form(l: usize, p: u32) -> HhClosedForm {
    let (description, generators) = match (l, p) {
        (0, _) => ("Λ", vec![HhGen::One, HhGen::X]),
        (_, 2) if l.is_multiple_of(2) => ("Λ/2xΛ", vec![HhGen::One, HhGen::X]),
        (_, 2) => ("Ann(2x)", vec![HhGen::One, HhGen::X]),
        _ if l.is_multiple_of(2) => ("Λ/2xΛ", vec![HhGen::One]),
        _ => ("Ann(2x)", vec![HhGen::X]),
    };
    HhClosedForm { degree: l, description, dim: generators.len(), generators }
}

/// The element `e ∈ Λ^e` with `f_k = e: P_k → P_{k-l}` lifting the generator.
fn lift(fp: Fp, l: usize, gen: HhGen) -> Result<Bimod> {
    if !hh_closed_form(l, fp.p()).generators.contains(&gen) {
        return Err(Error::Malformed(format!("{gen:?} is not a generator of HH^{l} in characteristic {}", fp.p())));
    }
    Ok(match (gen, l) {
        (HhGen::One, _) => Bimod::ONE,
        // in degree 0 the central element acts by right multiplication
        (HhGen::X, 0) => Bimod::X_RIGHT,
        (HhGen::X, _) => Bimod::X_LEFT,
    })
}

/// `Id ⊗ f: C → C[l]`, sending summand `q` of `C^{-i}` to summand `q` of `C^{-i+l}`.
fn tensor_lift(fp: Fp, tot: &Totalization, l: usize, e: Bimod) -> Result<ChainMap> {
    let c = tot.lam_complex();
    let cl = c.shift(fp, l as i32);
    let map = ChainMap::from_fn(&c, &cl, |deg| {
        let i = (-deg) as usize;
        if i < l {
            return LamMatrix::zeros(0, 2 * tot.rank(i));
        }
        let (r_src, r_dst) = (tot.rank(i), tot.rank(i - l));
        let mut m = BimodMatrix::zeros(r_dst, r_src);
        for q in 0..r_dst.min(r_src) {
            m.set(q, q, e);
        }
        m.to_lam()
    })?;
    if !map.is_chain_map(fp, &c, &cl) {
        return Err(Error::SolveFailed(format!("Id ⊗ f is not a chain map in degree {l}")));
    }
    Ok(map)
}

/// `χ(f)_X = π[l] ∘ (Id ⊗ f) ∘ ι` on the interval `target`, in normal form.
///
/// The composite is computed on `Λ^{[-N,0]}` with `N` the length of `target`
/// and moved to `target` by the shift, which contributes `(-1)^{l·r}` for a
/// shift by `r`, as for any element of the graded center.
pub fn chi(fp: Fp, l: usize, gen: HhGen, target: IndecObj) -> Result<DualNumMorphism> {
    let e = lift(fp, l, gen)?;
    let n = target.len() as usize;
    let ip = iota_pi_maps(fp, n)?;
    let tot = &ip.totalization;
    let li = l as i32;
    let x = LamComplex::interval(-(n as i32), 0);
    let xl = x.shift(fp, li);
    let c = tot.lam_complex();
    let cl = c.shift(fp, li);
    let f = tensor_lift(fp, tot, l, e)?;
    let composite = ip.iota.then(fp, &f, &x, &c, &cl).then(fp, &ip.pi.shift(li), &x, &cl, &xl);
    if !composite.is_chain_map(fp, &x, &xl) {
        return Err(Error::SolveFailed(format!("χ composite is not a chain map in degree {l}")));
    }
    let base = IndecObj::new(-(n as i32), 0).expect("n ≥ 0");
    let nf = DualNumMorphism::normal_form(fp, base, base, li, &composite);
    let r = -target.n();
    let sign = fp.sign(l as i64 * r as i64);
    Ok(DualNumMorphism { source: target, target, shift: li, c_id: fp.mul(sign, nf.c_id), c_x: fp.mul(sign, nf.c_x) })
}
