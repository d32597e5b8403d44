//! Key/value documents with a machine and a human rendering.
//!
//! The machine form is one `key=value` per line, in insertion order. Keys
//! may not contain `=`; newlines and backslashes in values are escaped.

use std::fmt::Write as _;

use crate::assemblage::{MonodromyReport, ReportVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportDocument {
    entries: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportParseError {
    pub line: usize,
}

impl std::fmt::Display for ReportParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: expected `key=value`", self.line)
    }
}

impl std::error::Error for ReportParseError {}

fn escape(v: &str) -> String {
    v.replace('\\', "\\\\").replace('\n', "\\n")
}

fn unescape(v: &str) -> String {
    let mut out = String::with_capacity(v.len());
    let mut chars = v.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some(o) => out.push(o),
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

pub fn format_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

impl ReportDocument {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an entry; `=` in keys is replaced by `_`.
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        let key = key.into().replace(['=', '\n'], "_");
        self.entries.push((key, value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k}={}", escape(v));
        }
        out
    }

    pub fn parse_machine(src: &str) -> Result<Self, ReportParseError> {
        let mut doc = ReportDocument::new();
        for (i, line) in src.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or(ReportParseError { line: i + 1 })?;
            doc.entries.push((k.to_string(), unescape(v)));
        }
        Ok(doc)
    }

    /// Aligned `key  value` lines under an optional title.
    pub fn render_human(&self, title: Option<&str>) -> String {
        let width = self.entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        if let Some(t) = title {
            let _ = writeln!(out, "{t}");
        }
        for (k, v) in &self.entries {
            let pad = width - k.chars().count();
            let indent = if title.is_some() { "  " } else { "" };
            let _ = writeln!(out, "{indent}{k}{}  {v}", " ".repeat(pad));
        }
        out
    }

    pub fn from_monodromy(rep: &MonodromyReport) -> Self {
        let mut doc = ReportDocument::new();
        doc.push("surface", rep.surface.as_deref().unwrap_or("(unnamed)"))
            .push("C", format_vec(&rep.c))
            .push("D", format_vec(&rep.d));
        match &rep.hypothesis {
            Some(h) => {
                doc.push("hypothesis", "certified")
                    .push("hypothesis.L1", format_vec(h.l1.coords()))
                    .push("hypothesis.L1.jet", h.jet_l1)
                    .push("hypothesis.L2", format_vec(h.l2.coords()))
                    .push("hypothesis.L2.jet", h.jet_l2);
            }
            None => {
                doc.push("hypothesis", "not certified");
            }
        }
        doc.push("g_C", rep.genus_c)
            .push("g_D", rep.genus_d)
            .push("d", rep.intersection)
            .push("g_E", rep.genus_e)
            .push("adjoint", format_vec(&rep.adjoint))
            .push("r", rep.r)
            .push("r_prime.lattice", rep.r_prime_lattice)
            .push(
                "adjoint_values",
                format!("({},{})", rep.adjoint_values.0, rep.adjoint_values.1),
            );
        if let Some((a, b)) = rep.final_values {
            doc.push("boundary.final", format!("({a},{b})"));
        }
        if let Some(rp) = rep.r_prime_capping {
            doc.push("r_prime", rp);
        }
        if let Some(cert) = &rep.certificate {
            doc.push("assemblage.core_genus", cert.core_genus)
                .push("assemblage.steps", cert.stages.len() - 1)
                .push("assemblage.genus", cert.genus)
                .push("assemblage.boundary", cert.boundary)
                .push("assemblage.euler", cert.euler)
                .push("assemblage.type_e", cert.type_e)
                .push("assemblage.filling", cert.filling)
                .push("assemblage.generates", cert.generates);
        }
        if let Some(rp) = rep.r_prime_capping {
            doc.push("r_divides_r_prime", rep.r != 0 && rp % rep.r == 0);
        }
        let refuted: Vec<String> = rep.refuted.iter().map(|x| x.s.to_string()).collect();
        doc.push("refuted_orders", format!("[{}]", refuted.join(",")));
        for (i, x) in rep.refuted.iter().enumerate() {
            doc.push(
                format!("refuted.{i}"),
                format!("s={} adjoint[{}]={} not divisible", x.s, x.witness, x.coordinate),
            );
        }
        for (i, w) in rep.warnings.iter().enumerate() {
            doc.push(format!("warning.{i}"), w);
        }
        match &rep.verdict {
            ReportVerdict::Certified { r } => doc.push("verdict", "certified").push("spin_order", r),
            ReportVerdict::NotCertified(_) => doc.push("verdict", "not certified"),
        };
        doc.push("conclusion", &rep.verdict);
        doc
    }
}
