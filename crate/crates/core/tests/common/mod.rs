//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use kulideal::algebra::examples::dual_numbers;
use kulideal::category::{CatAutomorphism, LinearCategory};
use kulideal::dualnumbers::{CellKind, HkKind};
use kulideal::{FinDimAlgebra, Fp, Matrix, Subspace};
use std::collections::BTreeSet;

pub fn dual(p: u64) -> LinearCategory {
    LinearCategory::from_algebra(&dual_numbers(p).unwrap())
}

fn negate_x(p: u64) -> (LinearCategory, CatAutomorphism) {
    let c = dual(p);
    let fp = c.fp();
    let m = Matrix::from_rows(fp, 2, &[vec![1, 0], vec![0, fp.neg(1)]]).unwrap();
    let s = CatAutomorphism::new(&c, vec![0], vec![m]).unwrap();
    (c, s)
}

/// Two copies of the dual numbers with no maps between them, swapped.
fn swapped_pair(p: u64) -> (LinearCategory, CatAutomorphism) {
    let a = dual_numbers(p).unwrap();
    let (d, fp) = (a.dim(), a.fp());
    let end: Vec<u32> = (0..d).flat_map(|g| (0..d).map(move |f| (g, f))).flat_map(|(g, f)| a.structure(g, f).to_vec()).collect();
    let comp = (0..8).map(|i| if i == 0 || i == 7 { end.clone() } else { Vec::new() }).collect();
    let ids = vec![a.unit().to_vec(), a.unit().to_vec()];
    let c = LinearCategory::new(fp, vec!["u".into(), "v".into()], vec![d, 0, 0, d], comp, ids).unwrap();
    let id = Matrix::identity(fp, d);
    let empty = Matrix::zeros(fp, 0, 0);
    let s = CatAutomorphism::new(&c, vec![1, 0], vec![id.clone(), empty.clone(), empty, id]).unwrap();
    (c, s)
}

/// The path category of `1 → 2`.
fn a2_quiver(p: u64) -> (LinearCategory, CatAutomorphism) {
    let fp = Fp::new(p).unwrap();
    let dims = vec![1, 1, 0, 1];
    let comp = (0..8)
        .map(|i| {
            let (x, y, z) = (i / 4, (i / 2) % 2, i % 2);
            let d = |a: usize, b: usize| dims[a * 2 + b];
            if d(x, y) * d(y, z) * d(x, z) == 0 {
                Vec::new()
            } else {
                vec![1]
            }
        })
        .collect();
    let c = LinearCategory::new(fp, vec!["1".into(), "2".into()], dims, comp, vec![vec![1], vec![1]]).unwrap();
    let s = CatAutomorphism::identity(&c);
    (c, s)
}

/// Finite categories with an automorphism, for orbit constructions.
pub fn instances(p: u64) -> Vec<(&'static str, LinearCategory, CatAutomorphism)> {
    let c = dual(p);
    let (nc, ns) = negate_x(p);
    let (sc, ss) = swapped_pair(p);
    let (qc, qs) = a2_quiver(p);
    vec![("dual/id", c.clone(), CatAutomorphism::identity(&c)), ("dual/neg", nc, ns), ("swap", sc, ss), ("a2", qc, qs)]
}

fn offsets(c: &LinearCategory, sn: &CatAutomorphism) -> Vec<usize> {
    let mut off = vec![0];
    for x in 0..c.n_objects() {
        off.push(off[x] + c.hom_dim(x, sn.object(x)));
    }
    off
}

/// Natural transformations `η: Id → σ^n` on `C` with `η_{σx} = (-1)^n σ(η_x)`, solved on `C` itself.
pub fn nat_dim(c: &LinearCategory, s: &CatAutomorphism, n: i32) -> usize {
    let fp = c.fp();
    let sn = s.power(n as i64);
    let off = offsets(c, &sn);
    let total = *off.last().unwrap();
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    for x in 0..c.n_objects() {
        for y in 0..c.n_objects() {
            for b in 0..c.hom_dim(x, y) {
                // σ^n(f) η_x - η_y f, one column per coordinate of η
                let f = c.basis(x, y, b);
                let moved = sn.apply(x, y, &f);
                let rows = c.hom_dim(x, sn.object(y));
                let mut block = vec![vec![0u32; total]; rows];
                for i in 0..total {
                    let mut e = vec![0; total];
                    e[i] = 1;
                    let mut lhs = vec![0; rows];
                    if (off[x]..off[x + 1]).contains(&i) {
                        lhs = fp.add_vec(&lhs, &c.compose(x, sn.object(x), sn.object(y), &moved, &e[off[x]..off[x + 1]]));
                    }
                    if (off[y]..off[y + 1]).contains(&i) {
                        lhs = fp.sub_vec(&lhs, &c.compose(x, y, sn.object(y), &e[off[y]..off[y + 1]], &f));
                    }
                    for (r, v) in lhs.into_iter().enumerate() {
                        block[r][i] = v;
                    }
                }
                eqs.extend(block);
            }
        }
    }
    let sign = fp.sign(n as i64);
    for x in 0..c.n_objects() {
        let sx = s.object(x);
        let m = s.map(x, sn.object(x));
        for r in 0..m.rows() {
            let mut row = vec![0u32; total];
            row[off[sx] + r] = 1;
            for b in 0..m.cols() {
                row[off[x] + b] = fp.sub(row[off[x] + b], fp.mul(sign, m.get(r, b)));
            }
            eqs.push(row);
        }
    }
    Matrix::from_rows(fp, total, &eqs).unwrap().kernel().dim()
}

/// `⊕_x C(x, σ^n x)` modulo `fg - σ^n(g)f` and `f + (-1)^n σ(f)`, solved on `C` itself.
pub fn nat_ab_dim(c: &LinearCategory, s: &CatAutomorphism, n: i32) -> usize {
    let fp = c.fp();
    let sn = s.power(n as i64);
    let off = offsets(c, &sn);
    let total = *off.last().unwrap();
    let mut rel = Vec::new();
    for x in 0..c.n_objects() {
        for y in 0..c.n_objects() {
            let sy = sn.object(y);
            for fb in 0..c.hom_dim(x, sy) {
                let f = c.basis(x, sy, fb);
                for gb in 0..c.hom_dim(y, x) {
                    let g = c.basis(y, x, gb);
                    let mut v = vec![0u32; total];
                    let fg = c.compose(y, x, sy, &f, &g);
                    let sgf = c.compose(x, sy, sn.object(x), &sn.apply(y, x, &g), &f);
                    fp.axpy(&mut v[off[y]..off[y + 1]], 1, &fg);
                    fp.axpy(&mut v[off[x]..off[x + 1]], fp.neg(1), &sgf);
                    rel.push(v);
                }
            }
        }
        for b in 0..c.hom_dim(x, sn.object(x)) {
            let f = c.basis(x, sn.object(x), b);
            let sf = s.apply(x, sn.object(x), &f);
            let mut v = vec![0u32; total];
            v[off[x] + b] = 1;
            let sx = s.object(x);
            fp.axpy(&mut v[off[sx]..off[sx + 1]], fp.sign(n as i64), &sf);
            rel.push(v);
        }
    }
    total - Subspace::span(fp, total, rel).unwrap().dim()
}

/// Every element of `Λ`, in coordinates.
pub fn all_elements(alg: &FinDimAlgebra) -> Vec<Vec<u32>> {
    let p = alg.p();
    (0..p.pow(alg.dim() as u32))
        .map(|mut k| {
            (0..alg.dim())
                .map(|_| {
                    let c = k % p;
                    k /= p;
                    c
                })
                .collect()
        })
        .collect()
}

/// Product straight from the structure constants.
pub fn mul(alg: &FinDimAlgebra, a: &[u32], b: &[u32]) -> Vec<u32> {
    let fp = alg.fp();
    let mut out = vec![0; alg.dim()];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            fp.axpy(&mut out, fp.mul(ai, bj), alg.structure(i, j));
        }
    }
    out
}

/// `K_1` by enumerating `Λ`: central `z` with `z b, b z ∈ [Λ,Λ]` whenever `b^p ∈ [Λ,Λ]`.
pub fn brute_k1(alg: &FinDimAlgebra) -> BTreeSet<Vec<u32>> {
    let fp = alg.fp();
    let elems = all_elements(alg);
    let basis: Vec<Vec<u32>> = (0..alg.dim()).map(|i| alg.basis_vec(i)).collect();
    let comm_gens: Vec<Vec<u32>> =
        basis.iter().flat_map(|a| basis.iter().map(move |b| (a, b))).map(|(a, b)| fp.sub_vec(&mul(alg, a, b), &mul(alg, b, a))).collect();
    let comm = Subspace::span(fp, alg.dim(), comm_gens).unwrap();
    let in_comm = |v: &[u32]| comm.contains(v).unwrap();
    let pth = |b: &[u32]| (1..alg.p()).fold(b.to_vec(), |acc, _| mul(alg, &acc, b));
    let t1: Vec<&Vec<u32>> = elems.iter().filter(|b| in_comm(&pth(b))).collect();
    elems
        .iter()
        .filter(|z| basis.iter().all(|e| mul(alg, z, e) == mul(alg, e, z)))
        .filter(|z| t1.iter().all(|b| in_comm(&mul(alg, z, b)) && in_comm(&mul(alg, b, z))))
        .cloned()
        .collect()
}

/// The cases displayed for `(K_{r,s})_t` in the dual-number category, `r > 0`, `t ≥ 0`.
pub fn expected_krs(p: u32, s: i32, t: i32) -> CellKind {
    let even = (s - t).rem_euclid(2) == 0;
    match (p, s > 0, even, t) {
        (_, true, _, _) => CellKind::Full,
        (2, false, _, 0) => CellKind::TildeZ0,
        (2, false, _, _) => CellKind::Zero,
        (_, false, false, _) => CellKind::Full,
        (_, false, true, 0) => CellKind::TildeZ0,
        (_, false, true, _) => CellKind::Zero,
    }
}

/// The displayed `HK^l_{r,s}` for `r > 0`.
pub fn expected_hk(p: u32, s: i32, l: usize) -> HkKind {
    if s > 0 || (p != 2 && s % 2 != 0) {
        HkKind::Full
    } else if p == 2 || l == 0 {
        HkKind::X
    } else if l % 2 == 1 {
        HkKind::Full
    } else {
        HkKind::Zero
    }
}
