use crate::output::{list, push_line, Output, Table};
use crate::CmdError;
use kulideal::dualnumbers::{
    ab_component_model, chi, chi_matrix, graded_center, hh_closed_form, hk_tables, hom_basis, intersect_cells, iota_pi_maps, k_rs_cell,
    t_r_certified, window_objects, AbCoord, CellKind, CenterCoord, HhGen, HkKind, IndecObj,
};
use kulideal::Fp;
use rayon::prelude::*;
use serde::Serialize;
use std::ops::RangeInclusive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Report {
    Homs,
    Center,
    Ab,
    Chi,
    Krs,
    Hk,
    All,
}

pub struct Config {
    fp: Fp,
    window: i32,
    report: Report,
    s: RangeInclusive<i32>,
    t_max: i32,
}

impl Config {
    pub fn new(p: u64, window: i32, report: Report, s: RangeInclusive<i32>, t_max: i32) -> Result<Self, CmdError> {
        let fp = Fp::new(p).map_err(|e| CmdError::Input(e.to_string()))?;
        if window < 1 {
            return Err(CmdError::Input("--window must be at least 1".into()));
        }
        if s.is_empty() || t_max < 0 {
            return Err(CmdError::Input("need --s-min ≤ --s-max and --t-max ≥ 0".into()));
        }
        Ok(Config { fp, window, report, s, t_max })
    }

    fn wants(&self, r: Report) -> bool {
        self.report == r || self.report == Report::All
    }
}

#[derive(Serialize)]
struct HomRow {
    source: String,
    target: String,
    t: i32,
    dim: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct ComponentRow {
    t: i32,
    dim: usize,
    coords: Vec<String>,
    certified: bool,
}

#[derive(Serialize)]
struct ChiRow {
    l: usize,
    generator: HhGen,
    /// Image in the coordinates of the center row for degree `l`.
    image: Vec<i64>,
    /// The component on `[-W,0]`.
    sample: String,
}

#[derive(Serialize)]
struct IotaPiRow {
    n: usize,
    x2_coefficients: Vec<i64>,
    solution_dim: usize,
    pi_iota_identity: bool,
    iota_pi_homotopic: Option<bool>,
}

#[derive(Serialize)]
struct KrsRow {
    r: usize,
    s: i32,
    t: i32,
    kind: CellKind,
    dim: usize,
    center_dim: usize,
    basis: Vec<Vec<i64>>,
    certified: bool,
}

#[derive(Serialize)]
struct IdealRow {
    ideal: String,
    t: i32,
    kind: CellKind,
    dim: usize,
    certified: bool,
}

#[derive(Serialize)]
struct TrRow {
    t: i32,
    ab_dim: usize,
    t1_dim: usize,
    t2_dim: usize,
    certified: bool,
}

#[derive(Serialize)]
struct HkRow {
    r: usize,
    s: i32,
    l: usize,
    generators: Vec<HhGen>,
    kind: HkKind,
    dim: usize,
    certified: bool,
}

#[derive(Serialize, Default)]
struct DualReport {
    p: u32,
    window: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    homs: Option<Vec<HomRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<Vec<ComponentRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ab: Option<Vec<ComponentRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<Vec<ChiRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    iota_pi: Option<Vec<IotaPiRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_r: Option<Vec<TrRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    krs: Option<Vec<KrsRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideals: Option<Vec<IdealRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hk: Option<Vec<HkRow>>,
}

const RS: [usize; 2] = [1, 2];

fn center_label(c: &CenterCoord) -> String {
    match c {
        CenterCoord::Mu => "mu".into(),
        CenterCoord::Lambda(l) => format!("lambda{l}"),
        CenterCoord::C => "c".into(),
    }
}

fn ab_label(c: &AbCoord) -> String {
    match c {
        AbCoord::Id(l) => format!("Id{l}"),
        AbCoord::V => "v".into(),
    }
}

fn homs(cfg: &Config) -> Vec<HomRow> {
    let w = cfg.window;
    let targets = window_objects(w);
    let mut rows = Vec::new();
    for len in 0..=w {
        let a = IndecObj::new(0, len).expect("len ≥ 0");
        for &b in &targets {
            for t in -w..=w {
                let gens = hom_basis(a, b, t);
                if !gens.is_empty() {
                    rows.push(HomRow {
                        source: a.to_string(),
                        target: b.to_string(),
                        t,
                        dim: gens.len(),
                        generators: gens.iter().map(ToString::to_string).collect(),
                    });
                }
            }
        }
    }
    rows
}

fn components(cfg: &Config) -> (Vec<ComponentRow>, Vec<ComponentRow>) {
    let (fp, w) = (cfg.fp, cfg.window);
    let certified = |t: i32| t.abs() < w;
    let center = (-w..=w)
        .map(|t| {
            let z = graded_center(fp, t, w);
            ComponentRow { t, dim: z.dim(), coords: z.coords.iter().map(center_label).collect(), certified: certified(t) }
        })
        .collect();
    let ab = (-w..=w)
        .map(|t| {
            let a = ab_component_model(fp, t, w);
            ComponentRow { t, dim: a.dim(), coords: a.coords.iter().map(ab_label).collect(), certified: certified(t) }
        })
        .collect();
    (center, ab)
}

fn signed(fp: Fp, v: &[u32]) -> Vec<i64> {
    v.iter().map(|&c| fp.signed(c)).collect()
}

fn chi_rows(cfg: &Config) -> Result<(Vec<ChiRow>, Vec<IotaPiRow>), CmdError> {
    let (fp, w) = (cfg.fp, cfg.window);
    let probe = IndecObj::new(-w, 0).expect("w ≥ 1");
    let mut rows = Vec::new();
    for l in 0..=cfg.t_max as usize {
        let m = chi_matrix(fp, l, w)?;
        for (k, &g) in hh_closed_form(l, fp.p()).generators.iter().enumerate() {
            let image: Vec<u32> = (0..m.rows()).map(|i| m.get(i, k)).collect();
            rows.push(ChiRow { l, generator: g, image: signed(fp, &image), sample: chi(fp, l, g, probe)?.to_string() });
        }
    }
    let iota_pi = (0..=w as usize)
        .into_par_iter()
        .map(|n| {
            let ip = iota_pi_maps(fp, n)?;
            Ok(IotaPiRow {
                n,
                x2_coefficients: signed(fp, &ip.x2_coefficients),
                solution_dim: ip.solution_dim,
                pi_iota_identity: ip.pi_iota_is_identity(fp),
                iota_pi_homotopic: (n <= 4).then(|| ip.iota_pi_homotopy(fp).is_some()),
            })
        })
        .collect::<Result<Vec<_>, kulideal::Error>>()?;
    Ok((rows, iota_pi))
}

type KrsSections = (Vec<TrRow>, Vec<KrsRow>, Vec<IdealRow>);

fn krs_rows(cfg: &Config) -> Result<KrsSections, CmdError> {
    let (fp, w) = (cfg.fp, cfg.window);
    let t_r = (-w..=0)
        .map(|t| {
            let (t1, ok1) = t_r_certified(fp, 1, t, w)?;
            let (t2, ok2) = t_r_certified(fp, 2, t, w)?;
            Ok(TrRow { t, ab_dim: ab_component_model(fp, t, w).dim(), t1_dim: t1.dim(), t2_dim: t2.dim(), certified: ok1 && ok2 })
        })
        .collect::<Result<Vec<_>, kulideal::Error>>()?;
    let cells: Vec<(usize, i32, i32)> =
        RS.iter().flat_map(|&r| cfg.s.clone().flat_map(move |s| (0..=cfg.t_max).map(move |t| (r, s, t)))).collect();
    let krs = cells
        .par_iter()
        .map(|&(r, s, t)| {
            let c = k_rs_cell(fp, r, s, t, w)?;
            Ok(KrsRow {
                r,
                s,
                t,
                kind: c.kind,
                dim: c.dim,
                center_dim: c.center_dim,
                basis: c.basis.iter().map(|b| signed(fp, b)).collect(),
                certified: c.certified,
            })
        })
        .collect::<Result<Vec<_>, kulideal::Error>>()?;
    let mut ideals = Vec::new();
    for (name, rs) in [("K_1", &RS[..1]), ("K_2", &RS[1..]), ("R", &RS[..])] {
        for t in 0..=cfg.t_max {
            let c = intersect_cells(fp, rs, cfg.s.clone(), t, w)?;
            ideals.push(IdealRow { ideal: name.into(), t, kind: c.kind, dim: c.dim, certified: c.certified });
        }
    }
    Ok((t_r, krs, ideals))
}

fn hk_rows(cfg: &Config) -> Result<Vec<HkRow>, CmdError> {
    let mut rows = Vec::new();
    for r in RS {
        for c in hk_tables(cfg.fp, r, cfg.s.clone(), cfg.t_max as usize, cfg.window)? {
            rows.push(HkRow { r, s: c.s, l: c.l, generators: c.generators, kind: c.kind, dim: c.dim, certified: c.certified });
        }
    }
    Ok(rows)
}

fn mark(certified: bool) -> &'static str {
    if certified {
        ""
    } else {
        " (uncertified)"
    }
}

fn kind_name(k: CellKind) -> &'static str {
    match k {
        CellKind::Full => "Z^t",
        CellKind::TildeZ0 => "~Z0",
        CellKind::Zero => "0",
        CellKind::Span => "span",
    }
}

fn hk_name(k: HkKind) -> &'static str {
    match k {
        HkKind::Full => "HH^l",
        HkKind::X => "<x>",
        HkKind::Zero => "0",
        HkKind::Span => "span",
    }
}

fn render(rep: &DualReport) -> (String, Table) {
    let mut text = String::new();
    let mut tsv = Table::default();
    push_line(&mut text, format!("p = {}, window W = {}", rep.p, rep.window));
    if let Some(homs) = &rep.homs {
        push_line(&mut text, format!("\nHom(X, Y[t]) for X = [0,len]: {} nonzero spaces", homs.len()));
        let rows = tsv.section(&["source", "target", "t", "dim", "generators"]);
        for h in homs {
            push_line(&mut text, format!("  {} -> {}[{}]: {}", h.source, h.target, h.t, h.generators.join(", ")));
            rows.push(vec![h.source.clone(), h.target.clone(), h.t.to_string(), h.dim.to_string(), h.generators.join(";")]);
        }
    }
    for (name, comps) in [("Z", &rep.center), ("Ab", &rep.ab)] {
        if let Some(comps) = comps {
            push_line(&mut text, format!("\n{name}^t (certified for |t| < W):"));
            let rows = tsv.section(&["space", "t", "dim", "coords", "certified"]);
            for c in comps {
                push_line(&mut text, format!("  t = {:>3}: dim {} {}{}", c.t, c.dim, list(&c.coords, String::clone), mark(c.certified)));
                rows.push(vec![name.into(), c.t.to_string(), c.dim.to_string(), c.coords.join(";"), c.certified.to_string()]);
            }
        }
    }
    if let Some(chis) = &rep.chi {
        push_line(&mut text, "\nchi: HH^l -> Z^l");
        let rows = tsv.section(&["l", "generator", "image", "sample"]);
        for c in chis {
            push_line(&mut text, format!("  l = {}, {:?}: {} ; {}", c.l, c.generator, list(&c.image, i64::to_string), c.sample));
            rows.push(vec![c.l.to_string(), format!("{:?}", c.generator), list(&c.image, i64::to_string), c.sample.clone()]);
        }
    }
    if let Some(ips) = &rep.iota_pi {
        push_line(&mut text, "\npi_{-n} x2 coefficients (solved):");
        let rows = tsv.section(&["n", "x2_coefficients", "solution_dim", "pi_iota_identity", "iota_pi_homotopic"]);
        for r in ips {
            let homotopic = r.iota_pi_homotopic.map_or("-".to_string(), |b| b.to_string());
            push_line(
                &mut text,
                format!(
                    "  n = {}: {} (free dims {}), pi.iota = Id: {}, iota.pi ~ Id: {}",
                    r.n,
                    list(&r.x2_coefficients, i64::to_string),
                    r.solution_dim,
                    r.pi_iota_identity,
                    homotopic
                ),
            );
            rows.push(vec![
                r.n.to_string(),
                list(&r.x2_coefficients, i64::to_string),
                r.solution_dim.to_string(),
                r.pi_iota_identity.to_string(),
                homotopic,
            ]);
        }
    }
    if let Some(trs) = &rep.t_r {
        push_line(&mut text, "\nT_r inside Ab_t:");
        let rows = tsv.section(&["t", "ab_dim", "t1_dim", "t2_dim", "certified"]);
        for r in trs {
            push_line(
                &mut text,
                format!("  t = {:>3}: dim Ab {}, dim T_1 {}, dim T_2 {}{}", r.t, r.ab_dim, r.t1_dim, r.t2_dim, mark(r.certified)),
            );
            rows.push(vec![r.t.to_string(), r.ab_dim.to_string(), r.t1_dim.to_string(), r.t2_dim.to_string(), r.certified.to_string()]);
        }
    }
    if let Some(krs) = &rep.krs {
        push_line(&mut text, "\n(K_{r,s})_t:");
        let rows = tsv.section(&["r", "s", "t", "kind", "dim", "center_dim", "certified"]);
        for c in krs {
            push_line(
                &mut text,
                format!(
                    "  r = {}, s = {:>2}, t = {}: {} (dim {}/{}){}",
                    c.r,
                    c.s,
                    c.t,
                    kind_name(c.kind),
                    c.dim,
                    c.center_dim,
                    mark(c.certified)
                ),
            );
            rows.push(vec![
                c.r.to_string(),
                c.s.to_string(),
                c.t.to_string(),
                kind_name(c.kind).into(),
                c.dim.to_string(),
                c.center_dim.to_string(),
                c.certified.to_string(),
            ]);
        }
    }
    if let Some(ideals) = &rep.ideals {
        push_line(&mut text, "\nK_r and R over the s range:");
        let rows = tsv.section(&["ideal", "t", "kind", "dim", "certified"]);
        for c in ideals {
            push_line(&mut text, format!("  {} in degree {}: {} (dim {}){}", c.ideal, c.t, kind_name(c.kind), c.dim, mark(c.certified)));
            rows.push(vec![c.ideal.clone(), c.t.to_string(), kind_name(c.kind).into(), c.dim.to_string(), c.certified.to_string()]);
        }
    }
    if let Some(hk) = &rep.hk {
        push_line(&mut text, "\nHK^l_{r,s}:");
        let rows = tsv.section(&["r", "s", "l", "kind", "dim", "certified"]);
        for c in hk {
            push_line(
                &mut text,
                format!("  r = {}, s = {:>2}, l = {}: {} (dim {}){}", c.r, c.s, c.l, hk_name(c.kind), c.dim, mark(c.certified)),
            );
            rows.push(vec![
                c.r.to_string(),
                c.s.to_string(),
                c.l.to_string(),
                hk_name(c.kind).into(),
                c.dim.to_string(),
                c.certified.to_string(),
            ]);
        }
    }
    (text, tsv)
}

pub fn dualnum(cfg: &Config) -> Result<Output, CmdError> {
    let mut rep = DualReport { p: cfg.fp.p(), window: cfg.window, ..Default::default() };
    if cfg.wants(Report::Homs) {
        rep.homs = Some(homs(cfg));
    }
    if cfg.wants(Report::Center) || cfg.wants(Report::Ab) {
        let (center, ab) = components(cfg);
        if cfg.wants(Report::Center) {
            rep.center = Some(center);
        }
        if cfg.wants(Report::Ab) {
            rep.ab = Some(ab);
        }
    }
    if cfg.wants(Report::Chi) {
        let (chis, ips) = chi_rows(cfg)?;
        rep.chi = Some(chis);
        rep.iota_pi = Some(ips);
    }
    if cfg.wants(Report::Krs) {
        let (t_r, krs, ideals) = krs_rows(cfg)?;
        rep.t_r = Some(t_r);
        rep.krs = Some(krs);
        rep.ideals = Some(ideals);
    }
    if cfg.wants(Report::Hk) {
        rep.hk = Some(hk_rows(cfg)?);
    }
    let ok = rep.iota_pi.iter().flatten().all(|r| r.pi_iota_identity && r.iota_pi_homotopic != Some(false));
    let (text, tsv) = render(&rep);
    Ok(Output::new(text, &rep, tsv, ok))
}
