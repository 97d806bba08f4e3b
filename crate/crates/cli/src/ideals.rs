use crate::output::{list, push_line, Output, Table};
use crate::CmdError;
use kulideal::kulshammer::{compare, default_r_max, fingerprint as fingerprint_of, ideal_chain, Comparison, Fingerprint};
use kulideal::{FinDimAlgebra, Subspace};
use serde::Serialize;

#[derive(Serialize)]
struct Level {
    r: usize,
    t_dim: usize,
    k_dim: usize,
    k_basis: Vec<String>,
}

#[derive(Serialize)]
struct IdealsReport {
    p: u32,
    dim: usize,
    center_dim: usize,
    commutator_dim: usize,
    chain: Vec<Level>,
    reynolds_dim: usize,
    reynolds_basis: Vec<String>,
    stable_from: usize,
    decreasing: bool,
}

fn basis(alg: &FinDimAlgebra, s: &Subspace) -> Vec<String> {
    s.vectors().map(|v| alg.format_element(&v)).collect()
}

pub fn ideals(alg: &FinDimAlgebra, r_max: Option<usize>) -> Result<Output, CmdError> {
    let r_max = r_max.unwrap_or_else(|| default_r_max(alg));
    let chain = ideal_chain(alg, r_max);
    let report = IdealsReport {
        p: alg.p(),
        dim: alg.dim(),
        center_dim: alg.center().dim(),
        commutator_dim: alg.commutator_subspace().dim(),
        chain: (0..=r_max)
            .map(|r| Level { r, t_dim: chain.t[r].dim(), k_dim: chain.k[r].dim(), k_basis: basis(alg, &chain.k[r]) })
            .collect(),
        reynolds_dim: chain.reynolds.dim(),
        reynolds_basis: basis(alg, &chain.reynolds),
        stable_from: chain.stable_from,
        decreasing: chain.is_decreasing(),
    };
    let mut text = String::new();
    push_line(
        &mut text,
        format!("p = {}, dim = {}, dim Z = {}, dim [A,A] = {}", report.p, report.dim, report.center_dim, report.commutator_dim),
    );
    for l in &report.chain {
        push_line(&mut text, format!("r = {}: dim T_r = {}, K_r = span{}", l.r, l.t_dim, list(&l.k_basis, |s| s.clone())));
    }
    push_line(&mut text, format!("R = span{}", list(&report.reynolds_basis, |s| s.clone())));
    push_line(&mut text, format!("chain stabilizes from r = {}", report.stable_from));
    if !report.decreasing {
        push_line(&mut text, "FAIL: the chain is not decreasing");
    }
    let mut tsv = Table::default();
    let rows = tsv.section(&["r", "t_dim", "k_dim", "k_basis"]);
    for l in &report.chain {
        rows.push(vec![l.r.to_string(), l.t_dim.to_string(), l.k_dim.to_string(), l.k_basis.join(";")]);
    }
    rows.push(vec!["R".into(), String::new(), report.reynolds_dim.to_string(), report.reynolds_basis.join(";")]);
    let ok = report.decreasing;
    Ok(Output::new(text, &report, tsv, ok))
}

#[derive(Serialize)]
struct FingerprintReport {
    a: Fingerprint,
    b: Fingerprint,
    equal: bool,
    verdict: String,
}

pub fn fingerprint(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Result<Output, CmdError> {
    let (fa, fb) = (fingerprint_of(a), fingerprint_of(b));
    let verdict = compare(&fa, &fb);
    let report = FingerprintReport { equal: verdict == Comparison::Equal, verdict: verdict.to_string(), a: fa, b: fb };
    let show = |f: &Fingerprint| {
        format!(
            "p = {}, ideals {}, dim HH0 = {}, T dims {}",
            f.p,
            list(&f.ideals, usize::to_string),
            f.hh0,
            list(&f.t_dims, usize::to_string)
        )
    };
    let mut text = String::new();
    push_line(&mut text, format!("a: {}", show(&report.a)));
    push_line(&mut text, format!("b: {}", show(&report.b)));
    push_line(&mut text, &report.verdict);
    let mut tsv = Table::default();
    let rows = tsv.section(&["side", "p", "ideals", "hh0", "t_dims"]);
    for (side, f) in [("a", &report.a), ("b", &report.b)] {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        rows.push(vec![side.into(), f.p.to_string(), join(&f.ideals), f.hh0.to_string(), join(&f.t_dims)]);
    }
    tsv.section(&["verdict"]).push(vec![report.verdict.clone()]);
    Ok(Output::new(text, &report, tsv, true))
}
