use crate::output::{push_line, Output, Table};
use crate::CmdError;
use kulideal::category::CatAutomorphism;
use kulideal::graded_category::{orbit_category, GradedCategory, OrbitData, Side, TraceData};
use kulideal::Subspace;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Report {
    Center,
    Ab,
    Krs,
    Cy,
}

/// `None` where the window cannot certify the degree.
#[derive(Serialize)]
struct DegreeRow {
    degree: i32,
    dim: Option<usize>,
}

#[derive(Serialize)]
struct KrsRow {
    r: usize,
    /// `None` for `K_r` itself.
    s: Option<i32>,
    degree: i32,
    dim: Option<usize>,
    /// The `s` values a `K_r` row intersected over.
    s_range: Option<Vec<i32>>,
}

#[derive(Serialize)]
struct CyRow {
    r: usize,
    degree: i32,
    k_r: Option<usize>,
    via_perp: Option<usize>,
    zeta_image: Option<usize>,
    perp_agrees: Option<bool>,
    zeta_agrees: Option<bool>,
}

#[derive(Serialize)]
struct CyReport {
    status: &'static str,
    violation: Option<String>,
    rows: Vec<CyRow>,
}

#[derive(Serialize, Default)]
struct OrbitReport {
    p: u32,
    objects: Vec<String>,
    sigma: String,
    window: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<Vec<DegreeRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ab: Option<Vec<DegreeRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    krs: Option<Vec<KrsRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cy: Option<CyReport>,
}

fn show(d: Option<usize>) -> String {
    d.map_or("-".into(), |d| d.to_string())
}

fn show_bool(b: Option<bool>) -> String {
    b.map_or("-".into(), |b| b.to_string())
}

fn same(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).unwrap_or(false) && b.is_subspace_of(a).unwrap_or(false)
}

fn cy_report(cat: &GradedCategory, trace: &TraceData, degrees: &[i32], r_max: usize) -> CyReport {
    let full = cat.cy_check(trace, false);
    let weak = cat.cy_check(trace, true);
    let (status, violation) = match (&full, &weak) {
        (Ok(()), _) => ("CY ok", None),
        (Err(v), Ok(())) => ("weak CY only", Some(v.to_string())),
        (Err(v), Err(_)) => ("not CY", Some(v.to_string())),
    };
    let mut rows = Vec::new();
    if full.is_ok() {
        for r in 0..=r_max {
            for &n in degrees {
                let kr = cat.k_r_component(r, n).ok().map(|c| c.space);
                let perp = cat.k_r_via_perp(trace, r, n).ok();
                let zeta = cat.zeta_image(trace, r, n).ok();
                let agree = |x: &Option<Subspace>| kr.as_ref().zip(x.as_ref()).map(|(a, b)| same(a, b));
                rows.push(CyRow {
                    r,
                    degree: n,
                    k_r: kr.as_ref().map(Subspace::dim),
                    via_perp: perp.as_ref().map(Subspace::dim),
                    zeta_image: zeta.as_ref().map(Subspace::dim),
                    perp_agrees: agree(&perp),
                    zeta_agrees: agree(&zeta),
                });
            }
        }
    }
    CyReport { status, violation, rows }
}

pub fn orbit(data: &OrbitData, sigma_name: &str, window: i32, report: Report, r_max: usize) -> Result<Output, CmdError> {
    let sigma = if sigma_name == "id" {
        CatAutomorphism::identity(&data.category)
    } else {
        data.automorphisms.get(sigma_name).cloned().ok_or_else(|| CmdError::Input(format!("no automorphism named {sigma_name:?}")))?
    };
    if window < 1 {
        return Err(CmdError::Input("the degree window must be at least 1".into()));
    }
    let cat = orbit_category(&data.category, &sigma, window).map_err(|e| CmdError::Input(e.to_string()))?;
    let degrees: Vec<i32> = (-window..=window).collect();
    let mut rep = OrbitReport { p: cat.fp().p(), objects: cat.objects().to_vec(), sigma: sigma_name.into(), window, ..Default::default() };
    let mut ok = true;
    match report {
        Report::Center => {
            rep.center =
                Some(degrees.iter().map(|&n| DegreeRow { degree: n, dim: cat.center_component(n).ok().map(|c| c.dim()) }).collect())
        }
        Report::Ab => {
            rep.ab = Some(degrees.iter().map(|&n| DegreeRow { degree: n, dim: cat.ab_component(n).ok().map(|c| c.dim()) }).collect())
        }
        Report::Krs => {
            let mut rows = Vec::new();
            for r in 0..=r_max {
                for s in -window..=window {
                    for &n in &degrees {
                        let dim = cat.k_rs_component(r, s, n, Side::Both).ok().map(|c| c.dim());
                        rows.push(KrsRow { r, s: Some(s), degree: n, dim, s_range: None });
                    }
                }
                for &n in &degrees {
                    let c = cat.k_r_component(r, n).ok();
                    rows.push(KrsRow { r, s: None, degree: n, dim: c.as_ref().map(|c| c.space.dim()), s_range: c.map(|c| c.range) });
                }
            }
            rep.krs = Some(rows);
        }
        Report::Cy => {
            let trace = data.trace.as_ref().ok_or_else(|| CmdError::Input("the input has no trace".into()))?;
            let cy = cy_report(&cat, trace, &degrees, r_max);
            ok = cy.rows.iter().all(|r| r.perp_agrees != Some(false) && r.zeta_agrees != Some(false));
            rep.cy = Some(cy);
        }
    }
    let mut text = String::new();
    let mut tsv = Table::default();
    push_line(&mut text, format!("p = {}, objects {:?}, sigma = {}, degree window {}", rep.p, rep.objects, rep.sigma, rep.window));
    push_line(&mut text, "'-' marks degrees the window cannot certify");
    for (name, rows) in [("Z", &rep.center), ("Ab", &rep.ab)] {
        if let Some(rows) = rows {
            let table = tsv.section(&["degree", "dim"]);
            for r in rows {
                push_line(&mut text, format!("dim {name}_{} = {}", r.degree, show(r.dim)));
                table.push(vec![r.degree.to_string(), show(r.dim)]);
            }
        }
    }
    if let Some(rows) = &rep.krs {
        let table = tsv.section(&["r", "s", "degree", "dim"]);
        for r in rows {
            let s = r.s.map_or("all".to_string(), |s| s.to_string());
            let name = r.s.map_or(format!("K_{}", r.r), |s| format!("K_{{{},{s}}}", r.r));
            push_line(&mut text, format!("dim ({name})_{} = {}", r.degree, show(r.dim)));
            table.push(vec![r.r.to_string(), s, r.degree.to_string(), show(r.dim)]);
        }
    }
    if let Some(cy) = &rep.cy {
        push_line(&mut text, cy.status);
        if let Some(v) = &cy.violation {
            push_line(&mut text, format!("  {v}"));
        }
        let table = tsv.section(&["r", "degree", "k_r", "via_perp", "zeta_image", "perp_agrees", "zeta_agrees"]);
        for r in &cy.rows {
            push_line(
                &mut text,
                format!(
                    "r = {}, degree {}: dim K_r {}, via perp {} ({}), Im zeta {} ({})",
                    r.r,
                    r.degree,
                    show(r.k_r),
                    show(r.via_perp),
                    show_bool(r.perp_agrees),
                    show(r.zeta_image),
                    show_bool(r.zeta_agrees)
                ),
            );
            table.push(vec![
                r.r.to_string(),
                r.degree.to_string(),
                show(r.k_r),
                show(r.via_perp),
                show(r.zeta_image),
                show_bool(r.perp_agrees),
                show_bool(r.zeta_agrees),
            ]);
        }
        if cy.status == "CY ok" && !ok {
            push_line(&mut text, "FAIL: K_r via the pairing disagrees with the direct computation");
        }
    }
    Ok(Output::new(text, &rep, tsv, ok))
}
