use crate::output::{push_line, Output, Table};
use crate::CmdError;
use kulideal::hochschild::HochschildComplex;
use kulideal::{Error, FinDimAlgebra};
use serde::Serialize;

#[derive(Serialize)]
struct HhReport {
    p: u32,
    dim: usize,
    /// `dims[l] = dim HH^l` for the degrees that fit the budget.
    dims: Vec<usize>,
    /// Set when the bar complex outgrew the budget before `l_max`.
    stopped_at: Option<usize>,
    note: Option<String>,
}

pub fn hh(alg: &FinDimAlgebra, l_max: usize, budget: Option<u128>) -> Result<Output, CmdError> {
    let mut complex = HochschildComplex::of_algebra(alg);
    if let Some(b) = budget {
        complex = complex.with_budget(b);
    }
    let mut report = HhReport { p: alg.p(), dim: alg.dim(), dims: Vec::new(), stopped_at: None, note: None };
    for l in 0..=l_max {
        match complex.cohomology_dim(l) {
            Ok(d) => report.dims.push(d),
            Err(e @ Error::BudgetExceeded { .. }) => {
                report.stopped_at = Some(l);
                report.note = Some(format!("HH^{l} skipped: {e}; raise --budget or lower --l-max"));
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let mut text = String::new();
    push_line(&mut text, format!("p = {}, dim = {}", report.p, report.dim));
    for (l, d) in report.dims.iter().enumerate() {
        push_line(&mut text, format!("dim HH^{l} = {d}"));
    }
    if let Some(note) = &report.note {
        push_line(&mut text, note);
    }
    let mut tsv = Table::default();
    let rows = tsv.section(&["l", "dim"]);
    rows.extend(report.dims.iter().enumerate().map(|(l, d)| vec![l.to_string(), d.to_string()]));
    Ok(Output::new(text, &report, tsv, true))
}
