use super::*;
use crate::algebra::examples::dual_numbers;

fn dual(p: u64) -> LinearCategory {
    LinearCategory::from_algebra(&dual_numbers(p).unwrap())
}

fn identity_orbit(p: u64, window: i32) -> GradedCategory {
    let c = dual(p);
    orbit_category(&c, &CatAutomorphism::identity(&c), window).unwrap()
}

fn negate_x(p: u64) -> (LinearCategory, CatAutomorphism) {
    let c = dual(p);
    let fp = c.fp();
    let m = Matrix::from_rows(fp, 2, &[vec![1, 0], vec![0, fp.neg(1)]]).unwrap();
    let s = CatAutomorphism::new(&c, vec![0], vec![m]).unwrap();
    (c, s)
}

/// Two objects with the given endomorphism algebra each, no maps between them, swapped.
fn swapped_pair(p: u64) -> (LinearCategory, CatAutomorphism) {
    let a = dual_numbers(p).unwrap();
    let d = a.dim();
    let fp = a.fp();
    let mut end = Vec::new();
    for g in 0..d {
        for f in 0..d {
            end.extend_from_slice(a.structure(g, f));
        }
    }
    let dims = vec![d, 0, 0, d];
    let comp = (0..8)
        .map(|i| match i {
            0 | 7 => end.clone(),
            _ => Vec::new(),
        })
        .collect();
    let ids = vec![a.unit().to_vec(), a.unit().to_vec()];
    let c = LinearCategory::new(fp, vec!["u".into(), "v".into()], dims, comp, ids).unwrap();
    let id = Matrix::identity(fp, d);
    let empty = Matrix::zeros(fp, 0, 0);
    let s = CatAutomorphism::new(&c, vec![1, 0], vec![id.clone(), empty.clone(), empty, id]).unwrap();
    (c, s)
}

/// The path category of `1 → 2` with the identity automorphism.
fn a2_quiver(p: u64) -> (LinearCategory, CatAutomorphism) {
    let fp = Fp::new(p).unwrap();
    let dims = vec![1, 1, 0, 1];
    // blocks (x,y,z) for x,y,z ∈ {0,1}
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

fn instances(p: u64) -> Vec<(&'static str, LinearCategory, CatAutomorphism)> {
    let c = dual(p);
    let (nc, ns) = negate_x(p);
    let (sc, ss) = swapped_pair(p);
    let (qc, qs) = a2_quiver(p);
    vec![("dual/id", c.clone(), CatAutomorphism::identity(&c)), ("dual/neg", nc, ns), ("swap", sc, ss), ("a2", qc, qs)]
}

/// Every in-window basis morphism `(x, y, degree, coords)`, generators or not.
fn all_morphisms(a: &GradedCategory) -> Vec<Generator> {
    let w = a.window();
    let mut out = Vec::new();
    for x in 0..a.n_objects() {
        for y in 0..a.n_objects() {
            for d in -w..=w {
                for b in 0..a.hom_dim(x, y, d).unwrap() {
                    out.push(Generator { source: x, target: y, degree: d, coords: a.basis(x, y, d, b) });
                }
            }
        }
    }
    out
}

fn all_vectors(fp: Fp, len: usize) -> Vec<Vec<u32>> {
    let p = fp.p();
    (0..p.pow(len as u32))
        .map(|mut k| {
            (0..len)
                .map(|_| {
                    let c = k % p;
                    k /= p;
                    c
                })
                .collect()
        })
        .collect()
}

/// Center by enumeration: families commuting, up to sign, with every in-window morphism.
fn brute_center(a: &GradedCategory, n: i32) -> Subspace {
    let fp = a.fp();
    let off = a.end_offsets(n).unwrap();
    let total = *off.last().unwrap();
    let morphisms = all_morphisms(a);
    let central = all_vectors(fp, total).into_iter().filter(|m| {
        morphisms.iter().all(|f| {
            let (x, y, j) = (f.source, f.target, f.degree);
            if (n + j).abs() > a.window() {
                return true;
            }
            let fm = a.compose(x, x, y, n, j, &f.coords, &m[off[x]..off[x + 1]]).unwrap();
            let mf = a.compose(x, y, y, j, n, &m[off[y]..off[y + 1]], &f.coords).unwrap();
            fm == fp.scale_vec(fp.sign(koszul(n, j)), &mf)
        })
    });
    Subspace::span(fp, total, central).unwrap()
}

/// Commutators by enumeration over all pairs of in-window morphisms.
fn brute_commutators(a: &GradedCategory, n: i32) -> Subspace {
    let fp = a.fp();
    let off = a.end_offsets(n).unwrap();
    let total = *off.last().unwrap();
    let mut vs = Vec::new();
    let morphisms = all_morphisms(a);
    for f in &morphisms {
        for u in &morphisms {
            let (x, y, j) = (f.source, f.target, f.degree);
            if u.source != y || u.target != x || u.degree != n - j {
                continue;
            }
            let mut v = vec![0; total];
            let fu = a.compose(y, x, y, n - j, j, &f.coords, &u.coords).unwrap();
            let uf = a.compose(x, y, x, j, n - j, &u.coords, &f.coords).unwrap();
            fp.axpy(&mut v[off[y]..off[y + 1]], 1, &fu);
            fp.axpy(&mut v[off[x]..off[x + 1]], fp.neg(fp.sign(koszul(j, n - j))), &uf);
            vs.push(v);
        }
    }
    Subspace::span(fp, total, vs).unwrap()
}

#[test]
fn orbit_hom_dims() {
    let a = identity_orbit(2, 3);
    for n in -3..=3 {
        assert_eq!(a.hom_dim(0, 0, n).unwrap(), 2);
    }
    assert_eq!(a.hom_dim(0, 0, 4), Err(Error::WindowTooSmall { degree: 4 }));
    let (c, s) = swapped_pair(2);
    let b = orbit_category(&c, &s, 3).unwrap();
    for n in -3..=3i32 {
        let same = n.rem_euclid(2) == 0;
        assert_eq!(b.hom_dim(0, 0, n).unwrap() > 0, same);
        assert_eq!(b.hom_dim(0, 1, n).unwrap() > 0, !same);
    }
}

#[test]
fn graded_field() {
    let fp = Fp::new(3).unwrap();
    let k = LinearCategory::new(fp, vec!["*".into()], vec![1], vec![vec![1]], vec![vec![1]]).unwrap();
    let a = orbit_category(&k, &CatAutomorphism::identity(&k), 3).unwrap();
    // σ = id forces η = (-1)^n η, so odd degrees vanish away from char 2
    for n in -2..=2 {
        assert_eq!(a.center_component(n).unwrap().dim(), if n % 2 == 0 { 1 } else { 0 });
    }
    let a2 = orbit_category(&k.clone(), &CatAutomorphism::identity(&k), 3).unwrap();
    assert_eq!(a2.hom_dim(0, 0, -3).unwrap(), 1);
}

#[test]
fn nongraded_commutative_center() {
    let c = dual(3);
    let a = GradedCategory::from(&c);
    assert!(a.center_component(0).unwrap().space.is_full());
    assert!(a.commutator_component(0).unwrap().is_zero());
    // bounded: degree 5 is zero, not out of window
    assert_eq!(a.center_component(5).unwrap().dim(), 0);
}

#[test]
fn dual_numbers_center_and_ab() {
    let a = identity_orbit(2, 3);
    for n in -2..=2 {
        assert_eq!(a.center_component(n).unwrap().dim(), 2);
        assert_eq!(a.ab_component(n).unwrap().dim(), 2);
    }
    assert_eq!(a.center_component(3), Err(Error::WindowTooSmall { degree: 3 }));
    let b = identity_orbit(3, 3);
    for n in -2..=2i32 {
        let even = n % 2 == 0;
        assert_eq!(b.center_component(n).unwrap().dim(), if even { 2 } else { 0 });
        assert_eq!(b.ab_component(n).unwrap().dim(), if even { 0 } else { 2 });
    }
}

#[test]
fn generators_match_enumeration() {
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 3).unwrap();
            for n in -2..=2 {
                assert_eq!(a.center_component(n).unwrap().space, brute_center(&a, n), "{name} p={p} n={n}");
                assert_eq!(a.commutator_component(n).unwrap(), brute_commutators(&a, n), "{name} p={p} n={n}");
            }
        }
    }
}

#[test]
fn sigma_twisted_descriptions() {
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 3).unwrap();
            for n in -2..=2 {
                let act = a.sigma_action(n).unwrap();
                let inv = sigma_invariants(&a.base_center_component(n).unwrap().space, &act).unwrap();
                assert_eq!(inv, a.center_component(n).unwrap().space, "{name} p={p} n={n}");
                let co = sigma_coinvariants(&a.base_commutator_component(n).unwrap(), &act, -1).unwrap();
                assert_eq!(co.small(), &a.commutator_component(n).unwrap(), "{name} p={p} n={n}");
            }
        }
    }
}

#[test]
fn invariants_and_coinvariants() {
    let fp = Fp::new(2).unwrap();
    let id = Matrix::identity(fp, 2);
    assert!(sigma_invariants(&Subspace::full(fp, 2), &id).unwrap().is_full());
    assert_eq!(sigma_coinvariants(&Subspace::zero(fp, 2), &id, -1).unwrap().dim(), 2);
    let f3 = Fp::new(3).unwrap();
    let swap = Matrix::from_rows(f3, 2, &[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(sigma_invariants(&Subspace::full(f3, 2), &swap).unwrap().dim(), 1);
    assert_eq!(sigma_coinvariants(&Subspace::zero(f3, 2), &swap, 1).unwrap().dim(), 1);
}

#[test]
fn center_is_graded_commutative() {
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 4).unwrap();
            for n in -1..=1 {
                for m in -1..=1 {
                    let (zn, zm) = (a.center_component(n).unwrap(), a.center_component(m).unwrap());
                    for eta in zn.space.vectors() {
                        for theta in zm.space.vectors() {
                            let et = a.multiply_families(n, &eta, m, &theta).unwrap();
                            let te = a.multiply_families(m, &theta, n, &eta).unwrap();
                            let fp = a.fp();
                            assert_eq!(et, fp.scale_vec(fp.sign(koszul(n, m)), &te), "{name} p={p}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn xi_on_dual_numbers() {
    let a = identity_orbit(2, 3);
    let ab0 = a.ab_component(0).unwrap();
    let xi = a.xi_p_ab(0).unwrap();
    let one = ab0.quotient.project(&[1, 0]).unwrap();
    let x = ab0.quotient.project(&[0, 1]).unwrap();
    assert_eq!(xi.mul_vec(&one), one);
    assert!(xi.mul_vec(&x).iter().all(|&c| c == 0));
    let abm = a.ab_component(-1).unwrap();
    let xm = abm.quotient.project(&[0, 1]).unwrap();
    assert!(a.xi_p_ab(-1).unwrap().mul_vec(&xm).iter().all(|&c| c == 0));
    assert_eq!(a.xi_p_ab(2), Err(Error::WindowTooSmall { degree: 4 }));
}

#[test]
fn xi_is_additive_mod_commutators() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 4).unwrap();
            let fp = a.fp();
            for n in -1..=1 {
                let (src, dst) = (a.ab_component(n).unwrap(), a.ab_component(n * p as i32).unwrap());
                let total = src.ambient_dim();
                let xi = a.xi_p_ab(n).unwrap();
                for _ in 0..20 {
                    let u: Vec<u32> = (0..total).map(|_| rng.gen_range(0..fp.p())).collect();
                    let v: Vec<u32> = (0..total).map(|_| rng.gen_range(0..fp.p())).collect();
                    let pw = |w: &[u32]| dst.quotient.project(&a.power_family(n, w).unwrap()).unwrap();
                    assert_eq!(pw(&fp.add_vec(&u, &v)), fp.add_vec(&pw(&u), &pw(&v)), "{name} p={p} n={n}");
                    // the class of the power depends only on the class of the element
                    let cls = src.quotient.project(&u).unwrap();
                    assert_eq!(pw(&u), xi.mul_vec(&cls), "{name} p={p} n={n}");
                }
            }
        }
    }
}

#[test]
fn kulshammer_ideals_on_dual_numbers() {
    let a = identity_orbit(2, 3);
    let z0 = a.center_component(0).unwrap().space;
    assert_eq!(a.k_rs_component(0, 0, 0, Side::Both).unwrap(), z0);
    let k = a.k_rs_component(1, 0, 0, Side::Both).unwrap();
    let x = Subspace::span(a.fp(), 2, [vec![0, 1]]).unwrap();
    assert_eq!(k, x);
    // brute force: a ∈ Z_0 with a·v a commutator for every v whose square is one
    let comm0 = brute_commutators(&a, 0);
    let t1: Vec<Vec<u32>> =
        all_vectors(a.fp(), 2).into_iter().filter(|v| comm0.contains(&a.power_family(0, v).unwrap()).unwrap()).collect();
    let brute = all_vectors(a.fp(), 2)
        .into_iter()
        .filter(|c| z0.contains(c).unwrap() && t1.iter().all(|v| comm0.contains(&a.multiply_families(0, c, 0, v).unwrap()).unwrap()));
    assert_eq!(Subspace::span(a.fp(), 2, brute).unwrap(), k);
    assert!(a.k_rs_component(2, 0, 0, Side::Both).unwrap().is_subspace_of(&k).unwrap());
}

#[test]
fn annihilator_sides_agree() {
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 4).unwrap();
            for n in -1..=1 {
                for sdeg in -1..=1 {
                    let l = a.k_rs_component(1, sdeg, n, Side::Left);
                    let r = a.k_rs_component(1, sdeg, n, Side::Right);
                    assert_eq!(l, r, "{name} p={p} n={n} s={sdeg}");
                }
            }
        }
    }
}

#[test]
fn t_r_is_a_submodule() {
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 4).unwrap();
            let t = a.t_r(1, 0).unwrap();
            let ab = a.ab_component(0).unwrap();
            for theta in a.center_component(0).unwrap().space.vectors() {
                for v in t.vectors() {
                    let prod = a.multiply_families(0, &theta, 0, &ab.quotient.lift(&v)).unwrap();
                    assert!(t.contains(&ab.quotient.project(&prod).unwrap()).unwrap(), "{name} p={p}");
                }
            }
        }
    }
}

#[test]
fn ideal_chains_decrease() {
    // the window certifies only some s, so containments are checked per (r, s)
    for p in [2, 3] {
        for (name, c, s) in instances(p) {
            let a = orbit_category(&c, &s, 4).unwrap();
            for n in -1..=1 {
                assert_eq!(a.k_r_component(0, n).unwrap().space, a.center_component(n).unwrap().space);
                let reynolds = a.reynolds_component(n).unwrap();
                for sdeg in n - 4..=n + 4 {
                    let ks: Vec<_> = (0..4).map(|r| a.k_rs_component(r, sdeg, n, Side::Both).ok()).collect();
                    for r in 0..3 {
                        if let (Some(big), Some(small)) = (&ks[r], &ks[r + 1]) {
                            assert!(small.is_subspace_of(big).unwrap(), "{name} p={p} n={n} s={sdeg} r={r}");
                        }
                    }
                    if reynolds.range.contains(&sdeg) {
                        let rs = a.r_s_component(sdeg, n).unwrap();
                        assert!(reynolds.space.is_subspace_of(&rs.space).unwrap());
                        for &r in &rs.range {
                            assert!(rs.space.is_subspace_of(ks[r as usize].as_ref().unwrap()).unwrap(), "{name} p={p}");
                        }
                    }
                }
                for r in 0..3 {
                    let kr = a.k_r_component(r, n).unwrap();
                    for &sdeg in &kr.range {
                        assert!(kr.space.is_subspace_of(&a.k_rs_component(r, sdeg, n, Side::Both).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}

fn coeff_of_x() -> TraceData {
    TraceData { d: 0, functionals: vec![vec![0, 1]] }
}

#[test]
fn calabi_yau_checks() {
    let a = identity_orbit(2, 3);
    assert_eq!(a.cy_check(&coeff_of_x(), false), Ok(()));
    let b = identity_orbit(3, 3);
    assert_eq!(b.cy_check(&coeff_of_x(), true), Ok(()));
    assert!(matches!(b.cy_check(&coeff_of_x(), false), Err(CyViolation::Symmetry { degree, .. }) if degree % 2 != 0));
    let zero = TraceData { d: 0, functionals: vec![vec![0, 0]] };
    assert!(matches!(a.cy_check(&zero, true), Err(CyViolation::Degenerate { .. })));
    assert!(b.k_r_via_perp(&coeff_of_x(), 1, 0).is_err());
}

#[test]
fn perp_and_zeta_match_k_r() {
    let a = identity_orbit(2, 4);
    let tr = coeff_of_x();
    for n in -1..=1 {
        let z = a.center_component(n).unwrap().space;
        assert_eq!(a.k_r_via_perp(&tr, 0, n).unwrap(), z);
        for r in 0..=1 {
            let perp = a.k_r_via_perp(&tr, r, n).unwrap();
            assert_eq!(perp, a.k_rs_component(r, 0, n, Side::Both).unwrap(), "r={r} n={n}");
            assert_eq!(perp, a.k_r_component(r, n).unwrap().space, "r={r} n={n}");
        }
        assert_eq!(a.zeta_image(&tr, 0, n).unwrap(), z);
    }
    for n in -1..=0 {
        assert_eq!(a.zeta_image(&tr, 1, n).unwrap(), a.k_r_component(1, n).unwrap().space, "n={n}");
    }
    // p ∤ d - m gives the zero map
    let odd = a.zeta_r(&tr, 1, 1).unwrap();
    assert_eq!(odd.target, None);
    let id = a.zeta_r(&tr, 0, 1).unwrap();
    let basis: Vec<Vec<u32>> = a.center_component(1).unwrap().space.vectors().collect();
    assert_eq!(id.images, basis);
}

#[test]
fn json_round_trip() {
    let (c, s) = swapped_pair(3);
    let a = orbit_category(&c, &s, 2).unwrap();
    let spec = CategorySpec::from_category(&a);
    let b = CategorySpec::from_json(&spec.to_json()).unwrap().build().unwrap();
    for n in -1..=1 {
        assert_eq!(a.center_component(n).unwrap(), b.center_component(n).unwrap());
        assert_eq!(a.commutator_component(n).unwrap(), b.commutator_component(n).unwrap());
    }
    assert!(CategorySpec::from_json("{").is_err());
}

#[test]
fn orbit_input_json() {
    let text = r#"{
        "p": 3,
        "objects": ["*"],
        "homs": {"(*,*)": ["1", "x"]},
        "compose": {"(1,1,1)": 1, "(1,x,x)": 1, "(x,1,x)": 1},
        "identities": {"*": [1, 0]},
        "automorphisms": {"neg": {"perm": {"*": "*"}, "maps": {"(*,*)": [[1, 0], [0, -1]]}}},
        "trace": {"d": 0, "functionals": {"*": [0, 1]}}
    }"#;
    let data = OrbitInput::from_json(text).unwrap().build().unwrap();
    let neg = &data.automorphisms["neg"];
    assert_eq!(neg.order(4), Some(2));
    assert_eq!(data.trace.unwrap(), coeff_of_x());
    let bad = text.replace("[0, -1]", "[1, -1]");
    assert!(OrbitInput::from_json(&bad).unwrap().build().is_err());
}
