use crate::output::{push_line, Output, Table};
use crate::CmdError;
use kulideal::algebra::examples::all_fixtures;
use kulideal::dualnumbers::{build_bicomplex_totalization, iota_pi_maps};
use kulideal::kulshammer::{fingerprint, ideal_chain, k_r, k_r_classical};
use kulideal::{FinDimAlgebra, Fp};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn random_vec(rng: &mut ChaCha8Rng, fp: Fp, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(0..fp.p())).collect()
}

fn random_commutator(rng: &mut ChaCha8Rng, alg: &FinDimAlgebra) -> Vec<u32> {
    let fp = alg.fp();
    let comm = alg.commutator_subspace();
    comm.vectors().fold(vec![0; alg.dim()], |acc, v| fp.add_vec(&acc, &fp.scale_vec(rng.gen_range(0..fp.p()), &v)))
}

/// Counts trials where the class of `a^p` moves when `a` changes by a commutator, or the map fails to be additive.
fn xi_failures(rng: &mut ChaCha8Rng, alg: &FinDimAlgebra, trials: usize) -> (usize, usize) {
    let fp = alg.fp();
    let hh0 = alg.hh0();
    let p = u64::from(alg.p());
    let pw = |a: &[u32]| hh0.project(&alg.power(a, p));
    let (mut well_defined, mut additive) = (0, 0);
    for _ in 0..trials {
        let a = random_vec(rng, fp, alg.dim());
        let b = random_vec(rng, fp, alg.dim());
        let c = random_commutator(rng, alg);
        well_defined += usize::from(pw(&fp.add_vec(&a, &c)) != pw(&a));
        additive += usize::from(pw(&fp.add_vec(&a, &b)) != fp.add_vec(&pw(&a), &pw(&b)));
    }
    (well_defined, additive)
}

pub fn selftest(seed: u64, trials: usize) -> Result<Output, CmdError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut check = |name: String, passed: bool, detail: String| checks.push(Check { name, passed, detail });
    for (name, alg) in all_fixtures() {
        let (wd, add) = xi_failures(&mut rng, &alg, trials);
        check(format!("{name}: xi well defined mod commutators"), wd == 0, format!("{wd}/{trials} failures"));
        check(format!("{name}: xi additive mod commutators"), add == 0, format!("{add}/{trials} failures"));
        let chain = ideal_chain(&alg, 3);
        check(format!("{name}: K_(r+1) in K_r"), chain.is_decreasing(), format!("r <= 3, stable from {}", chain.stable_from));
        if let Some(gram) = alg.form() {
            let bad: Vec<usize> = (0..=3).filter(|&r| k_r_classical(&alg, gram, r).ok() != Some(k_r(&alg, r))).collect();
            check(format!("{name}: classical K_r equals K_r"), bad.is_empty(), format!("mismatched r: {bad:?}"));
        }
        let same = fingerprint(&alg) == fingerprint(&alg.matrix_algebra(2));
        check(format!("{name}: fingerprint of M_2"), same, String::new());
    }
    for p in [2u64, 3] {
        let fp = Fp::new(p)?;
        let bad: Vec<usize> = (1..=6).filter(|&n| !build_bicomplex_totalization(fp, n, n + 2).squares_to_zero(fp)).collect();
        check(format!("p = {p}: bicomplex totalization squares to zero"), bad.is_empty(), format!("n <= 6, failing n: {bad:?}"));
        let bad: Vec<usize> = (1..=4)
            .filter(|&n| !iota_pi_maps(fp, n).is_ok_and(|m| m.pi_iota_is_identity(fp) && m.iota_pi_homotopy(fp).is_some()))
            .collect();
        check(format!("p = {p}: iota and pi are inverse homotopy equivalences"), bad.is_empty(), format!("n <= 4, failing n: {bad:?}"));
    }

    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    let mut tsv = Table::default();
    let rows = tsv.section(&["check", "result", "detail"]);
    for c in &checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
        push_line(&mut text, format!("{verdict} {}{detail}", c.name));
        rows.push(vec![c.name.clone(), verdict.into(), c.detail.clone()]);
    }
    push_line(&mut text, format!("seed {seed}, {} checks, {failed} failed", checks.len()));
    let report = serde_json::json!({ "seed": seed, "trials": trials, "failed": failed, "checks": checks });
    Ok(Output::new(text, &report, tsv, failed == 0))
}
