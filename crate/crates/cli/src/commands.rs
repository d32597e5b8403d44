//! One function per subcommand. Each returns a document plus an optional
//! headline printed first in human mode.

use std::path::Path;
use std::sync::Arc;

use rspin_core::assemblage::{
    build_standard_assemblage, capping_order, certify, monodromy_report, parse_assemblage,
    FramingCertificate,
};
use rspin_core::braidcalc::{
    format_word, main_lemma_plan, main_lemma_plan_relabeled, parse_word, psi as psi_image,
};
use rspin_core::curveconf::parse_config;
use rspin_core::milnor::{jet_requirement, milnor_number_with_ceiling, PlaneGerm};
use rspin_core::picard::{
    adjoint_and_root, genus_of_section, lefschetz_full_decision, lookup, parse_lattice,
    standard_names, JetLedger, LefschetzDecision, PicardLattice,
};
use rspin_core::report::format_vec;
use rspin_core::winding::{act, enumerate_forms, is_admissible, TwistWord};
use rspin_core::{Error, ReportDocument};

use crate::input::read;
use crate::{LatticeArgs, ReportArgs};

pub struct Output {
    pub headline: Option<String>,
    pub title: Option<String>,
    pub doc: ReportDocument,
}

impl Output {
    fn new(title: impl Into<String>) -> Self {
        Output {
            headline: None,
            title: Some(title.into()),
            doc: ReportDocument::new(),
        }
    }

    fn headline(mut self, h: impl Into<String>) -> Self {
        self.headline = Some(h.into());
        self
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        if let Some(h) = &self.headline {
            out.push_str(h);
            out.push('\n');
        }
        out.push_str(&self.doc.render_human(self.title.as_deref()));
        out
    }
}

/// Routes a module error through the crate-wide error type.
fn core<T, E: Into<Error>>(r: Result<T, E>) -> anyhow::Result<T> {
    r.map_err(|e| anyhow::Error::new(e.into()))
}

fn load_lattice(
    file: Option<&Path>,
    surface: Option<&str>,
) -> anyhow::Result<(Arc<PicardLattice>, JetLedger)> {
    match (file, surface) {
        (Some(path), _) => {
            let f = core(parse_lattice(&read(path)?))?;
            Ok((f.lattice, f.ledger))
        }
        (None, Some(name)) => {
            let e = core(lookup(name))?;
            Ok((e.lattice, e.ledger))
        }
        (None, None) => anyhow::bail!("give a lattice file or --surface"),
    }
}

fn push_lattice(doc: &mut ReportDocument, lat: &PicardLattice, ledger: &JetLedger) {
    let (pos, neg, _) = lat.signature();
    doc.push("name", lat.name().unwrap_or("(unnamed)"))
        .push("rank", lat.rank())
        .push("signature", format!("({pos},{neg})"));
    for (i, row) in lat.gram().iter().enumerate() {
        doc.push(format!("gram.{i}"), format_vec(row));
    }
    doc.push("canonical", format_vec(lat.canonical()))
        .push("simply_connected", lat.simply_connected());
    for (i, (coords, entry)) in ledger.entries().enumerate() {
        doc.push(
            format!("jet.{i}"),
            format!("{} level {} ({})", format_vec(coords), entry.level, entry.note),
        );
    }
}

pub fn lattice(args: &LatticeArgs) -> anyhow::Result<Output> {
    let (lat, ledger) = load_lattice(args.source.file.as_deref(), args.source.surface.as_deref())?;
    let mut out = Output::new("lattice");
    push_lattice(&mut out.doc, &lat, &ledger);
    match lefschetz_full_decision(&lat, None) {
        Ok(LefschetzDecision::FullMonodromyPencilExists { .. }) => {
            out.doc.push("lefschetz", "full monodromy pencil exists");
        }
        Ok(LefschetzDecision::RankOne(v)) => {
            let ms: Vec<String> = v.achievable_m.iter().map(i64::to_string).collect();
            out.doc
                .push("lefschetz", format!("rank one, K = {}L", v.canonical_multiple))
                .push("lefschetz.achievable_m", format!("[{}]", ms.join(",")))
                .push("lefschetz.exceptional", v.exceptional);
        }
        Err(e) => {
            out.doc.push("lefschetz", format!("undecided: {e}"));
        }
    }
    for (i, coords) in args.classes.iter().enumerate() {
        let l = core(lat.class(coords.0.clone()))?;
        let adj = adjoint_and_root(&l);
        let key = |k: &str| format!("class.{i}.{k}");
        out.doc
            .push(key("coords"), &l)
            .push(key("self_intersection"), lat.pair(l.coords(), l.coords()))
            .push(key("adjoint"), &adj.adjoint)
            .push(key("divisibility"), adj.divisibility);
        match genus_of_section(&l) {
            Ok(g) => out.doc.push(key("genus"), g),
            Err(e) => out.doc.push(key("genus"), format!("undefined: {e}")),
        };
        match ledger.certified_level(&l, rspin_core::picard::DEFAULT_MAX_TERMS) {
            Some(k) => out.doc.push(key("jet_level"), k),
            None => out.doc.push(key("jet_level"), "uncertified"),
        };
    }
    Ok(out)
}

pub fn config_analyze(file: &Path, ambient: Option<(u32, u32)>) -> anyhow::Result<Output> {
    let sys = core(parse_config(&read(file)?))?;
    let mut out = Output::new("configuration");
    let doc = &mut out.doc;
    doc.push("curves", sys.len()).push("points", sys.points().len());
    let graph = core(sys.intersection_graph())?;
    doc.push(
        "graph.type",
        graph
            .dynkin_type()
            .map_or_else(|| "other".to_string(), |t| t.to_string()),
    )
    .push("graph.tree", graph.is_tree())
    .push("arboreal", core(sys.is_arboreal())?)
    .push("E_arboreal", core(sys.is_E_arboreal())?);
    if let Some(e6) = graph.find_induced_e6() {
        let names: Vec<&str> = e6.iter().map(|&v| graph.vertices()[v].as_str()).collect();
        doc.push("E6_subgraph", names.join(" "));
    }
    let comps = sys.component_invariants();
    doc.push("components", comps.len());
    for (i, (names, inv)) in comps.iter().enumerate() {
        doc.push(
            format!("component.{i}"),
            format!(
                "{}: chi = {}, b = {}, g = {}",
                names.join(" "),
                inv.euler,
                inv.boundary,
                inv.genus
            ),
        );
    }
    if let Ok(inv) = sys.neighborhood_invariants() {
        doc.push("euler", inv.euler)
            .push("boundary", inv.boundary)
            .push("genus", inv.genus);
    }
    if let Ok(values) = sys.compatible_boundary_values() {
        for (i, (face, v)) in values.iter().enumerate() {
            doc.push(
                format!("boundary.{i}"),
                format!("{} corners along {}, value {v}", face.corners, face.curves.join(" ")),
            );
        }
    }
    if let Some(amb) = ambient.or(sys.ambient()) {
        doc.push("ambient", format!("({},{})", amb.0, amb.1))
            .push("spanning", sys.is_spanning(amb));
    }
    Ok(out)
}

pub fn winding_act(file: &Path, word: Option<&str>) -> anyhow::Result<Output> {
    let f = core(rspin_core::winding::parse_winding_file(&read(file)?))?;
    let word: TwistWord = match word {
        Some(w) => core(w.parse::<TwistWord>())?,
        None => f.word.clone(),
    };
    let ctx = &f.context;
    let mut out = Output::new("winding action");
    out.doc
        .push("genus", ctx.genus())
        .push("boundary", ctx.boundary())
        .push("modulus", ctx.modulus())
        .push("word", if word.letters.is_empty() { "1".to_string() } else { word.to_string() });
    for name in &f.order {
        let c = &f.curves[name];
        let img = core(act(ctx, &word, &f.curves, c))?;
        out.doc
            .push(
                format!("{name}.before"),
                format!("{} : {}", format_vec(&c.hclass), ctx.residue(c.winding)),
            )
            .push(
                format!("{name}.after"),
                format!("{} : {}", format_vec(&img.hclass), img.winding),
            )
            .push(format!("{name}.admissible"), is_admissible(ctx, c));
    }
    Ok(out)
}

pub fn census(genus: u32) -> anyhow::Result<Output> {
    let c = core(enumerate_forms(genus))?;
    let mut out = Output::new("arf census").headline(format!(
        "g = {genus}: {} even, {} odd",
        c.arf_zero, c.arf_one
    ));
    out.doc
        .push("genus", genus)
        .push("forms", c.arf_zero + c.arf_one)
        .push("arf_zero", c.arf_zero)
        .push("arf_one", c.arf_one);
    Ok(out)
}

fn push_certificate(doc: &mut ReportDocument, cert: &FramingCertificate) {
    doc.push("core_genus", cert.core_genus)
        .push("steps", cert.stages.len() - 1)
        .push("genus", cert.genus)
        .push("boundary", cert.boundary)
        .push("euler", cert.euler)
        .push("modulus", cert.modulus);
    for (n, v) in &cert.boundary_values {
        doc.push(format!("value.{n}"), v);
    }
    let finals: Vec<i64> = cert.boundary_values.iter().map(|(_, v)| *v).collect();
    if let Ok(r) = capping_order(&finals) {
        doc.push("capping_order", r);
    }
    doc.push("type_e", cert.type_e)
        .push("core_genus_ok", cert.core_genus_ok)
        .push("genus_ok", cert.genus_ok)
        .push("has_boundary", cert.has_boundary)
        .push("filling", cert.filling)
        .push("windings_zero", cert.windings_zero)
        .push("core_consistent", cert.core_consistent)
        .push("generates", cert.generates);
}

fn verdict_line(cert: &FramingCertificate) -> String {
    if cert.generates {
        "admissible twists generate the framed mapping class group".into()
    } else {
        "generation criterion not met".into()
    }
}

pub fn assemblage_run(file: &Path) -> anyhow::Result<Output> {
    let f = core(parse_assemblage(&read(file)?))?;
    let cert = core(certify(&f.assemblage, &f.initial))?;
    let mut out = Output::new("assemblage").headline(verdict_line(&cert));
    push_certificate(&mut out.doc, &cert);
    Ok(out)
}

pub fn assemblage_standard(gc: u32, gd: u32, d: u32) -> anyhow::Result<Output> {
    let p = core(build_standard_assemblage(gc, gd, d))?;
    let cert = core(certify(&p.assemblage, &p.initial))?;
    let mut out = Output::new("assemblage").headline(verdict_line(&cert));
    out.doc
        .push("g_C", gc)
        .push("g_D", gd)
        .push("d", d)
        .push(
            "expected_final",
            format!("({},{})", p.expected_final.0, p.expected_final.1),
        );
    push_certificate(&mut out.doc, &cert);
    Ok(out)
}

pub fn milnor(src: &str, ceiling: u32) -> anyhow::Result<Output> {
    let f = core(PlaneGerm::parse(src))?;
    let res = core(milnor_number_with_ceiling(&f, ceiling))?;
    let basis: Vec<String> = res.basis.iter().map(ToString::to_string).collect();
    let mut out = Output::new("milnor").headline(format!("μ = {}", res.mu));
    out.doc
        .push("germ", &f)
        .push("mu", res.mu)
        .push("basis", format!("{{{}}}", basis.join(", ")))
        .push("truncation", res.truncation)
        .push("jet_requirement", jet_requirement(&f, &res.basis));
    Ok(out)
}

pub fn psi(word: &str, d: usize) -> anyhow::Result<Output> {
    let w = core(parse_word(word))?;
    let image = core(psi_image(&w, d))?;
    let mut out = Output::new("psi").headline(image.to_string());
    out.doc
        .push("word", format_word(&w))
        .push("d", d)
        .push("psi", &image)
        .push("in_stabilizer", image.is_zero());
    Ok(out)
}

pub fn mainlemma(k: &[i64], labels: Option<&[i64]>) -> anyhow::Result<Output> {
    let plan = core(main_lemma_plan(k))?;
    let mut out = Output::new("correction plan");
    out.doc.push("k", format_vec(k));
    let word = match labels {
        None => {
            out.doc
                .push("stage1", format_word(&plan.stage1))
                .push("stage2", format_word(&plan.stage2))
                .push("stage3", format_word(&plan.stage3))
                .push("primed", format_vec(&plan.primed))
                .push("ell", plan.ell);
            plan.word()
        }
        Some(labels) => {
            let labels: Vec<usize> = labels
                .iter()
                .map(|&i| usize::try_from(i).map_err(|_| anyhow::anyhow!("label {i} is negative")))
                .collect::<anyhow::Result<_>>()?;
            let word = core(main_lemma_plan_relabeled(k, &labels))?;
            out.doc
                .push("labels", format_vec(&labels.iter().map(|&i| i as i64).collect::<Vec<_>>()))
                .push("word", format_word(&word));
            word
        }
    };
    let residue = core(psi_image(&word, k.len()))?;
    out.doc.push("psi", &residue);
    Ok(out.headline(format_word(&word)))
}

pub fn report(args: &ReportArgs) -> anyhow::Result<Output> {
    let (lat, ledger) = load_lattice(args.lattice.as_deref(), args.surface.as_deref())?;
    let c = core(lat.class(args.c.0.clone()))?;
    let d = core(lat.class(args.d.0.clone()))?;
    let rep = core(monodromy_report(&c, &d, &ledger))?;
    let mut out = Output::new("monodromy report").headline(rep.verdict.to_string());
    out.doc = ReportDocument::from_monodromy(&rep);
    Ok(out)
}

pub fn catalog_list() -> anyhow::Result<Output> {
    let mut out = Output::new("catalog");
    for name in standard_names() {
        let e = core(lookup(&name))?;
        out.doc.push(name, e.description);
    }
    Ok(out)
}

pub fn catalog_show(name: &str) -> anyhow::Result<Output> {
    let e = core(lookup(name))?;
    let mut out = Output::new(name.to_string()).headline(e.description.clone());
    push_lattice(&mut out.doc, &e.lattice, &e.ledger);
    for (i, (coords, g, what)) in e.known_genera.iter().enumerate() {
        out.doc
            .push(format!("check.{i}"), format!("{} genus {g}: {what}", format_vec(coords)));
    }
    if let Some(h) = &e.ample_generator {
        out.doc.push("ample_generator", h);
    }
    Ok(out)
}
