//! The assemblage on a smoothed curve `E = C~ ∪ D~` and the end-to-end
//! monodromy report.
//!
//! `C~` has genus `g_C` and `D~` genus `g_D`; they are glued along the
//! `d = C·D` circles `Delta_1 .. Delta_d`. The thirteen-curve core sits over
//! `Delta_1 .. Delta_4` with its E6 part inside `C~`, leaving one boundary
//! circle on each side, of values `-9` (C side) and `-3` (D side). Then:
//!
//! 1. `g_C - 3` handle pairs inside `C~` (split the C circle, merge the two
//!    halves), each lowering its value by 2;
//! 2. for `i = 1 .. d-4`, a curve `a_i` merging the two circles, then
//!    `Delta_{4+i}` splitting them again, lowering both values by 1;
//! 3. `g_D` handle pairs inside `D~`.
//!
//! The result is a genus `g_C + g_D + d - 1` surface with two boundary
//! circles of values `chi(C) - d - 1` and `chi(D) - d - 1`, each bounding a
//! disk in `E`.

use crate::arith::{divisors, gcd_all};
use crate::curveconf::CurveSystem;
use crate::picard::{
    adjoint_and_root, genus_of_section, intersect, smoothed_genus, theorem_hypothesis_check,
    DivisorClass, HypothesisCertificate, JetLedger,
};

use super::{
    capping_order, certify, Assemblage, AssemblageError, AssemblageStep, FramingCertificate,
    MIN_GENUS,
};

/// Final boundary values `(chi(C) - d - 1, chi(D) - d - 1)`.
pub fn standard_boundary_values(g_c: u32, g_d: u32, d: u32) -> (i64, i64) {
    let chi = |g: u32| 2 - 2 * g as i64;
    (chi(g_c) - d as i64 - 1, chi(g_d) - d as i64 - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardAssemblage {
    pub assemblage: Assemblage,
    /// Core boundary values, `dC` then `dD`.
    pub initial: Vec<(String, i64)>,
    pub expected_final: (i64, i64),
    pub genus: u32,
}

/// Split `v` into two values summing to `v - 1`, then merge them back.
fn handle_pair(steps: &mut Vec<AssemblageStep>, label: &str, circle: &str, v: i64) -> i64 {
    let lo = (v - 1).div_euclid(2);
    let hi = v - 1 - lo;
    let (left, right) = (format!("{circle}'"), format!("{circle}''"));
    steps.push(AssemblageStep::split(
        format!("{label}.s"),
        circle,
        (left.clone(), lo),
        (right.clone(), hi),
    ));
    steps.push(AssemblageStep::merge(
        format!("{label}.m"),
        left,
        right,
        (circle, lo + hi - 1),
    ));
    v - 2
}

pub fn build_standard_assemblage(g_c: u32, g_d: u32, d: u32) -> Result<StandardAssemblage, AssemblageError> {
    if d < 6 {
        return Err(AssemblageError::Precondition(format!(
            "C·D = {d}, but at least 6 crossings are needed"
        )));
    }
    if g_c < 3 {
        return Err(AssemblageError::Precondition(format!(
            "the core needs genus 3 inside C~, but g(C) = {g_c}"
        )));
    }
    let core = CurveSystem::standard_core();
    let mut initial = Vec::new();
    for (face, v) in core.compatible_boundary_values()? {
        let name = if face.curves.iter().any(|c| c.starts_with('b')) {
            "dC"
        } else {
            "dD"
        };
        initial.push((name.to_string(), v));
    }
    initial.sort();
    if initial != [("dC".to_string(), -9), ("dD".to_string(), -3)] {
        return Err(AssemblageError::Internal(format!(
            "unexpected core boundary values {initial:?}"
        )));
    }

    let mut steps = Vec::new();
    let (mut vc, mut vd) = (-9i64, -3i64);
    for i in 1..=g_c - 3 {
        vc = handle_pair(&mut steps, &format!("C.h{i}"), "dC", vc);
    }
    for i in 1..=(d - 4) {
        steps.push(AssemblageStep::merge(
            format!("a{i}"),
            "dC",
            "dD",
            ("dCD", vc + vd - 1),
        ));
        steps.push(AssemblageStep::split(
            format!("Delta{}", 4 + i),
            "dCD",
            ("dC", vc - 1),
            ("dD", vd - 1),
        ));
        vc -= 1;
        vd -= 1;
    }
    for i in 1..=g_d {
        vd = handle_pair(&mut steps, &format!("D.h{i}"), "dD", vd);
    }
    let genus = g_c + g_d + d - 1;
    let expected_final = standard_boundary_values(g_c, g_d, d);
    if (vc, vd) != expected_final {
        return Err(AssemblageError::Internal(format!(
            "construction ends at {:?}, expected {expected_final:?}",
            (vc, vd)
        )));
    }
    Ok(StandardAssemblage {
        assemblage: Assemblage {
            core,
            steps,
            ambient: (genus, 2),
            modulus: 0,
        },
        initial,
        expected_final,
        genus,
    })
}

/// A spin order `s` strictly between `r` and `r'` that the lattice rules out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutedRefinement {
    pub s: i64,
    /// Index of an adjoint coordinate not divisible by `s`.
    pub witness: usize,
    pub coordinate: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReportVerdict {
    /// The monodromy group is the `r`-spin mapping class group of `M`.
    Certified { r: i64 },
    NotCertified(String),
}

impl std::fmt::Display for ReportVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportVerdict::Certified { r } => write!(f, "Γ = Mod(E)[φ_M], r = {r}"),
            ReportVerdict::NotCertified(why) => write!(f, "not certified: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyReport {
    pub surface: Option<String>,
    pub c: Vec<i64>,
    pub d: Vec<i64>,
    pub hypothesis: Option<HypothesisCertificate>,
    pub genus_c: i64,
    pub genus_d: i64,
    pub intersection: i64,
    pub genus_e: i64,
    pub adjoint: Vec<i64>,
    /// Divisibility of the adjoint class `K + C + D`.
    pub r: i64,
    /// `gcd(C·(K+C+D), D·(K+C+D))`.
    pub r_prime_lattice: i64,
    /// The two products `C·(K+C+D) - 1`, `D·(K+C+D) - 1`, expected to match the final boundary values up to sign.
    pub adjoint_values: (i64, i64),
    pub final_values: Option<(i64, i64)>,
    pub r_prime_capping: Option<i64>,
    pub certificate: Option<FramingCertificate>,
    pub refuted: Vec<RefutedRefinement>,
    pub verdict: ReportVerdict,
    pub warnings: Vec<String>,
}

/// Runs the whole chain for `L = C + D` on the lattice of `C`.
pub fn monodromy_report(
    c: &DivisorClass,
    d: &DivisorClass,
    ledger: &JetLedger,
) -> Result<MonodromyReport, AssemblageError> {
    let l = c.add(d)?;
    let adj = adjoint_and_root(&l);
    if adj.degenerate {
        return Err(AssemblageError::DegenerateAdjoint);
    }
    let r = adj.divisibility;
    let genus_c = genus_of_section(c)?;
    let genus_d = genus_of_section(d)?;
    let intersection = intersect(c, d)?;
    let genus_e = smoothed_genus(c, d)?;
    let ca = intersect(c, &adj.adjoint)?;
    let da = intersect(d, &adj.adjoint)?;
    let r_prime_lattice = gcd_all([ca, da]);

    let mut report = MonodromyReport {
        surface: c.lattice().name().map(str::to_string),
        c: c.coords().to_vec(),
        d: d.coords().to_vec(),
        hypothesis: None,
        genus_c,
        genus_d,
        intersection,
        genus_e,
        adjoint: adj.adjoint.coords().to_vec(),
        r,
        r_prime_lattice,
        adjoint_values: (ca - 1, da - 1),
        final_values: None,
        r_prime_capping: None,
        certificate: None,
        refuted: Vec::new(),
        verdict: ReportVerdict::NotCertified(String::new()),
        warnings: Vec::new(),
    };
    let not_certified = |mut rep: MonodromyReport, why: String| {
        rep.verdict = ReportVerdict::NotCertified(why);
        Ok(rep)
    };

    let Some(cert) = theorem_hypothesis_check(&l, ledger, std::slice::from_ref(c)) else {
        return not_certified(
            report,
            "the ledger does not certify C as 6-jet ample and D as very ample".into(),
        );
    };
    report.hypothesis = Some(cert);
    if genus_e < MIN_GENUS as i64 {
        return not_certified(report, format!("g(E) = {genus_e} < {MIN_GENUS}"));
    }
    if genus_c < 0 || genus_d < 0 || intersection < 0 {
        return not_certified(report, "negative genus or intersection".into());
    }
    let standard = match build_standard_assemblage(genus_c as u32, genus_d as u32, intersection as u32) {
        Ok(p) => p,
        Err(AssemblageError::Precondition(why)) => return not_certified(report, why),
        Err(e) => return Err(e),
    };
    if standard.genus as i64 != genus_e {
        return Err(AssemblageError::Internal(format!(
            "assemblage genus {} differs from g(E) = {genus_e}",
            standard.genus
        )));
    }
    let framing = certify(&standard.assemblage, &standard.initial)?;
    let finals: Vec<i64> = framing.boundary_values.iter().map(|(_, v)| *v).collect();
    let r_prime = capping_order(&finals)?;
    report.final_values = Some(standard.expected_final);
    report.r_prime_capping = Some(r_prime);
    let generates = framing.generates;
    report.certificate = Some(framing);
    if !generates {
        return not_certified(report, "assemblage does not meet the generation criterion".into());
    }
    if r_prime != r_prime_lattice {
        return Err(AssemblageError::Internal(format!(
            "capping gives r' = {r_prime}, the lattice gives {r_prime_lattice}"
        )));
    }
    if r == 0 || r_prime % r != 0 {
        return Err(AssemblageError::Internal(format!("r = {r} does not divide r' = {r_prime}")));
    }
    if (ca, da) != (-(standard.expected_final.0 + 1), -(standard.expected_final.1 + 1)) {
        return Err(AssemblageError::Internal(
            "adjoint products disagree with chi - d beyond sign".into(),
        ));
    }
    report.warnings.push(format!(
        "boundary identity holds up to sign: chi(C) - d - 1 = {}, C·(C+D+K) - 1 = {}",
        standard.expected_final.0,
        ca - 1
    ));
    if r_prime == 0 {
        report.warnings.push("r' = 0: capping leaves a framing".into());
    }
    for s in divisors(r_prime) {
        if s <= r || s % r != 0 {
            continue;
        }
        let (witness, coordinate) = adj
            .adjoint
            .coords()
            .iter()
            .copied()
            .enumerate()
            .find(|(_, a)| a % s != 0)
            .ok_or_else(|| {
                AssemblageError::Internal(format!("adjoint divisible by {s} > r = {r}"))
            })?;
        report.refuted.push(RefutedRefinement {
            s,
            witness,
            coordinate,
        });
    }
    report.verdict = ReportVerdict::Certified { r };
    Ok(report)
}
