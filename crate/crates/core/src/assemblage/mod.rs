//! Assemblages: a spanning core configuration followed by curves that each
//! meet the current subsurface in a single arc.
//!
//! The engine is schematic. It tracks genus, boundary circles and their
//! winding values, not embedded curves. Attaching a 1-handle along an arc
//!
//! * with both ends on one boundary circle `v` splits it into two circles
//!   `v', v''` with `v' + v'' = v - 1`; genus is unchanged;
//! * with ends on two circles `v1, v2` merges them into one circle with
//!   value `v1 + v2 - 1`; genus goes up by one.
//!
//! Both rules lower `chi` by one and keep `sum of boundary values = chi`
//! (mod `r`), which is re-checked after every step.

mod format;
mod construction;

use thiserror::Error;

use crate::arith::{gcd_all, residue};
use crate::curveconf::{CurveError, CurveSystem, NeighborhoodInvariants};
use crate::picard::PicardError;

pub use format::{parse_assemblage, AssemblageFile};
pub use construction::{
    build_standard_assemblage, monodromy_report, standard_boundary_values, MonodromyReport,
    StandardAssemblage, RefutedRefinement, ReportVerdict,
};

/// Genus bound required of the core and of the surface.
pub const MIN_GENUS: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssemblageError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error("capping needs at least one boundary value")]
    NoCap,
    #[error("unknown boundary component `{0}`")]
    UnknownComponent(String),
    #[error("boundary component `{0}` already exists")]
    DuplicateComponent(String),
    #[error("step `{curve}`: {msg}")]
    InconsistentStep { curve: String, msg: String },
    #[error("boundary values sum to {sum}, but chi = {chi} (mod {modulus})")]
    Incoherent { sum: i64, chi: i64, modulus: u64 },
    #[error("core neighborhood {got:?} does not match its declared surface {expected:?}")]
    NotSpanning {
        got: (u32, u32),
        expected: (u32, u32),
    },
    #[error("core has {got} boundary values, its neighborhood has {expected} boundary circles")]
    CoreBoundary { got: usize, expected: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("adjoint class is zero; no maximal root")]
    DegenerateAdjoint,
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attachment {
    /// Both ends on `component`, which becomes two circles with the given values.
    Split {
        component: String,
        into: [(String, i64); 2],
    },
    /// Ends on two different circles, which become one.
    Merge {
        components: [String; 2],
        into: (String, i64),
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblageStep {
    pub curve: String,
    pub attach: Attachment,
    /// Winding number of the attached curve.
    pub winding: i64,
}

impl AssemblageStep {
    pub fn split(
        curve: impl Into<String>,
        component: impl Into<String>,
        first: (impl Into<String>, i64),
        second: (impl Into<String>, i64),
    ) -> Self {
        AssemblageStep {
            curve: curve.into(),
            attach: Attachment::Split {
                component: component.into(),
                into: [(first.0.into(), first.1), (second.0.into(), second.1)],
            },
            winding: 0,
        }
    }

    pub fn merge(
        curve: impl Into<String>,
        a: impl Into<String>,
        b: impl Into<String>,
        into: (impl Into<String>, i64),
    ) -> Self {
        AssemblageStep {
            curve: curve.into(),
            attach: Attachment::Merge {
                components: [a.into(), b.into()],
                into: (into.0.into(), into.1),
            },
            winding: 0,
        }
    }

    pub fn with_winding(mut self, w: i64) -> Self {
        self.winding = w;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assemblage {
    pub core: CurveSystem,
    pub steps: Vec<AssemblageStep>,
    /// `(genus, boundary count)` of the surface to be filled.
    pub ambient: (u32, u32),
    /// `0` for a framing.
    pub modulus: u64,
}

/// Genus, boundary circles and values of the subsurface built so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblageState {
    pub genus: u32,
    pub euler: i64,
    pub boundary: Vec<(String, i64)>,
    pub modulus: u64,
}

impl AssemblageState {
    pub fn new(genus: u32, boundary: Vec<(String, i64)>, modulus: u64) -> Result<Self, AssemblageError> {
        let euler = 2 - 2 * genus as i64 - boundary.len() as i64;
        let state = AssemblageState {
            genus,
            euler,
            boundary: boundary
                .into_iter()
                .map(|(n, v)| (n, residue(v, modulus)))
                .collect(),
            modulus,
        };
        state.check_names()?;
        state.check_coherence()?;
        Ok(state)
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary.len() as u32
    }

    pub fn value(&self, name: &str) -> Option<i64> {
        self.boundary.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn values(&self) -> Vec<i64> {
        self.boundary.iter().map(|(_, v)| *v).collect()
    }

    fn check_names(&self) -> Result<(), AssemblageError> {
        for (i, (n, _)) in self.boundary.iter().enumerate() {
            if self.boundary[..i].iter().any(|(m, _)| m == n) {
                return Err(AssemblageError::DuplicateComponent(n.clone()));
            }
        }
        Ok(())
    }

    fn check_coherence(&self) -> Result<(), AssemblageError> {
        let sum: i64 = self.boundary.iter().map(|(_, v)| v).sum();
        if residue(sum - self.euler, self.modulus) != 0 {
            return Err(AssemblageError::Incoherent {
                sum,
                chi: self.euler,
                modulus: self.modulus,
            });
        }
        Ok(())
    }

    fn take(&mut self, name: &str) -> Result<(usize, i64), AssemblageError> {
        let pos = self
            .boundary
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| AssemblageError::UnknownComponent(name.to_string()))?;
        Ok((pos, self.boundary.remove(pos).1))
    }
}

/// Attaches one curve. New circles take the place of the old ones in the list.
pub fn apply_step(
    state: &AssemblageState,
    step: &AssemblageStep,
) -> Result<AssemblageState, AssemblageError> {
    let r = state.modulus;
    let bad = |msg: String| AssemblageError::InconsistentStep {
        curve: step.curve.clone(),
        msg,
    };
    let mut next = state.clone();
    match &step.attach {
        Attachment::Split { component, into } => {
            let (pos, v) = next.take(component)?;
            let got = into[0].1 + into[1].1;
            if residue(got - (v - 1), r) != 0 {
                return Err(bad(format!(
                    "split values sum to {got}, expected {} - 1 = {}",
                    v,
                    v - 1
                )));
            }
            next.boundary
                .insert(pos, (into[1].0.clone(), residue(into[1].1, r)));
            next.boundary
                .insert(pos, (into[0].0.clone(), residue(into[0].1, r)));
        }
        Attachment::Merge { components, into } => {
            if components[0] == components[1] {
                return Err(bad("a merge needs two different boundary circles".into()));
            }
            let (p1, v1) = next.take(&components[0])?;
            let (p2, v2) = next.take(&components[1])?;
            if residue(into.1 - (v1 + v2 - 1), r) != 0 {
                return Err(bad(format!(
                    "merged value {} differs from {v1} + {v2} - 1 = {}",
                    into.1,
                    v1 + v2 - 1
                )));
            }
            next.boundary
                .insert(p1.min(p2), (into.0.clone(), residue(into.1, r)));
            next.genus += 1;
        }
    }
    next.euler -= 1;
    next.check_names()?;
    debug_assert_eq!(
        next.euler,
        2 - 2 * next.genus as i64 - next.boundary.len() as i64
    );
    next.check_coherence()?;
    Ok(next)
}

/// What the core contributes to a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReport {
    pub genus: u32,
    pub invariants: NeighborhoodInvariants,
    pub type_e: bool,
    /// Boundary values of the framing with every core curve at winding 0,
    /// one per boundary circle, with the curves each circle runs along.
    pub compatible_values: Vec<(Vec<String>, i64)>,
}

/// Simplicity, arboreality and spanning of the core.
pub fn verify_core(core: &CurveSystem) -> Result<CoreReport, AssemblageError> {
    let graph = core.intersection_graph()?;
    let invariants = core.neighborhood_invariants()?;
    if let Some(expected) = core.ambient() {
        let got = (invariants.genus, invariants.boundary);
        if got != expected {
            return Err(AssemblageError::NotSpanning { got, expected });
        }
    }
    let type_e = graph.is_tree() && graph.find_induced_e6().is_some();
    let compatible_values = core
        .compatible_boundary_values()?
        .into_iter()
        .map(|(f, v)| (f.curves, v))
        .collect();
    Ok(CoreReport {
        genus: invariants.genus,
        invariants,
        type_e,
        compatible_values,
    })
}

/// State after each step, starting with the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub curve: Option<String>,
    pub genus: u32,
    pub boundary: u32,
    pub euler: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramingCertificate {
    pub core_genus: u32,
    pub genus: u32,
    pub boundary: u32,
    pub euler: i64,
    pub boundary_values: Vec<(String, i64)>,
    pub modulus: u64,
    pub type_e: bool,
    pub core_genus_ok: bool,
    pub genus_ok: bool,
    pub has_boundary: bool,
    pub filling: bool,
    pub windings_zero: bool,
    /// Initial values agree with the framing making every core curve admissible.
    pub core_consistent: bool,
    pub stages: Vec<StageRecord>,
    /// All flags hold: the twists generate the stabilizer of the framing.
    pub generates: bool,
}

/// Runs the core checks and every step, then evaluates the generation criterion.
pub fn certify(
    asm: &Assemblage,
    initial: &[(String, i64)],
) -> Result<FramingCertificate, AssemblageError> {
    let core = verify_core(&asm.core)?;
    if initial.len() != core.compatible_values.len() {
        return Err(AssemblageError::CoreBoundary {
            got: initial.len(),
            expected: core.compatible_values.len(),
        });
    }
    let r = asm.modulus;
    let mut expected: Vec<i64> = core
        .compatible_values
        .iter()
        .map(|(_, v)| residue(*v, r))
        .collect();
    let mut given: Vec<i64> = initial.iter().map(|(_, v)| residue(*v, r)).collect();
    expected.sort_unstable();
    given.sort_unstable();
    let core_consistent = expected == given;

    let mut state = AssemblageState::new(core.genus, initial.to_vec(), r)?;
    let mut stages = vec![StageRecord {
        curve: None,
        genus: state.genus,
        boundary: state.boundary_count(),
        euler: state.euler,
    }];
    for step in &asm.steps {
        state = apply_step(&state, step)?;
        stages.push(StageRecord {
            curve: Some(step.curve.clone()),
            genus: state.genus,
            boundary: state.boundary_count(),
            euler: state.euler,
        });
    }
    let windings_zero = asm.steps.iter().all(|s| residue(s.winding, r) == 0);
    let core_genus_ok = core.genus >= MIN_GENUS;
    let genus_ok = state.genus >= MIN_GENUS;
    let has_boundary = state.boundary_count() >= 1;
    let filling = (state.genus, state.boundary_count()) == asm.ambient;
    let generates = core.type_e
        && core_genus_ok
        && genus_ok
        && has_boundary
        && filling
        && windings_zero
        && core_consistent;
    Ok(FramingCertificate {
        core_genus: core.genus,
        genus: state.genus,
        boundary: state.boundary_count(),
        euler: state.euler,
        boundary_values: state.boundary,
        modulus: r,
        type_e: core.type_e,
        core_genus_ok,
        genus_ok,
        has_boundary,
        filling,
        windings_zero,
        core_consistent,
        stages,
        generates,
    })
}

/// `gcd(v_i + 1)`: the spin order of the closed surface obtained by capping
/// each boundary circle with a disk. `0` means the framing survives.
pub fn capping_order(values: &[i64]) -> Result<i64, AssemblageError> {
    if values.is_empty() {
        return Err(AssemblageError::NoCap);
    }
    Ok(gcd_all(values.iter().map(|v| v + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curveconf::DynkinType;

    fn state(g: u32, vals: &[(&str, i64)]) -> AssemblageState {
        AssemblageState::new(
            g,
            vals.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn merge_rule() {
        // genus 2 with three circles: chi = -5
        let s = state(2, &[("p", 3), ("q", 7), ("z", -15)]);
        let t = apply_step(&s, &AssemblageStep::merge("c", "p", "q", ("pq", 9))).unwrap();
        assert_eq!((t.genus, t.boundary_count(), t.euler), (3, 2, s.euler - 1));
        assert_eq!(t.value("pq"), Some(9));
        let wrong = AssemblageStep::merge("c", "p", "q", ("pq", 10));
        assert!(matches!(apply_step(&s, &wrong), Err(AssemblageError::InconsistentStep { .. })));
    }

    #[test]
    fn split_rule() {
        let s = state(1, &[("p", -1)]);
        let t = apply_step(&s, &AssemblageStep::split("c", "p", ("p1", -1), ("p2", -1))).unwrap();
        assert_eq!((t.genus, t.boundary_count(), t.euler), (1, 2, -2));
        assert!(apply_step(&s, &AssemblageStep::split("c", "p", ("p1", 0), ("p2", 0))).is_err());
        assert_eq!(
            apply_step(&s, &AssemblageStep::split("c", "zz", ("a", 0), ("b", -2))),
            Err(AssemblageError::UnknownComponent("zz".into()))
        );
    }

    #[test]
    fn incoherent_start_is_rejected() {
        assert!(matches!(
            AssemblageState::new(1, vec![("p".into(), 0)], 0),
            Err(AssemblageError::Incoherent { .. })
        ));
        assert!(AssemblageState::new(1, vec![("p".into(), 3)], 4).is_ok());
    }

    #[test]
    fn capping_examples() {
        assert_eq!(capping_order(&[3, 7]).unwrap(), 4);
        assert_eq!(capping_order(&[-1, -1]).unwrap(), 0);
        assert_eq!(capping_order(&[-25, -5]).unwrap(), 4);
        assert_eq!(capping_order(&[]), Err(AssemblageError::NoCap));
    }

    #[test]
    fn core_checks() {
        let core = verify_core(&CurveSystem::standard_core()).unwrap();
        assert_eq!(core.genus, 6);
        assert!(core.type_e);
        let e6 = verify_core(&CurveSystem::dynkin(DynkinType::E6).unwrap()).unwrap();
        assert_eq!(e6.genus, 3);
        assert!(e6.type_e);
        let a7 = verify_core(&CurveSystem::chain(7).unwrap()).unwrap();
        assert!(!a7.type_e);
        let wrong = CurveSystem::chain(3).unwrap().with_ambient(Some((2, 2)));
        assert!(matches!(verify_core(&wrong), Err(AssemblageError::NotSpanning { .. })));
    }

    #[test]
    fn small_certificates() {
        let e6 = CurveSystem::dynkin(DynkinType::E6).unwrap();
        let asm = Assemblage {
            core: e6,
            steps: vec![],
            ambient: (3, 1),
            modulus: 0,
        };
        let cert = certify(&asm, &[("d".into(), -5)]).unwrap();
        assert!(cert.filling && cert.type_e && cert.core_consistent);
        assert!(!cert.core_genus_ok && !cert.generates);

        let asm = Assemblage {
            core: CurveSystem::standard_core(),
            steps: vec![],
            ambient: (7, 2),
            modulus: 0,
        };
        let init = [("dC".to_string(), -9), ("dD".to_string(), -3)];
        let cert = certify(&asm, &init).unwrap();
        assert!(!cert.filling && !cert.generates);
        assert!(cert.core_genus_ok && cert.core_consistent);

        let off = [("dC".to_string(), -8), ("dD".to_string(), -4)];
        let cert = certify(&asm, &off).unwrap();
        assert!(!cert.core_consistent);
    }
}
