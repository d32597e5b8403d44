//! Exact arithmetic for the monodromy of sufficiently ample linear systems on
//! simply connected surfaces.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`picard`]: the Picard lattice, adjunction, maximal roots of the adjoint
//!   bundle and jet-ampleness bookkeeping.
//! * [`curveconf`]: curve configurations with ribbon data, intersection graphs,
//!   Dynkin recognition and regular-neighborhood invariants.
//! * [`winding`]: mod-`r` winding number functions and their twist dynamics.
//! * [`assemblage`]: assemblage certificates, capping, and the end-to-end
//!   monodromy report.
//! * [`milnor`]: Milnor numbers of plane curve germs by exact linear algebra.
//! * [`braidcalc`]: the abelianized simple-braid calculus and the correction
//!   word used to turn arcs into vanishing cycles.
//! * [`report`]: the key/value report document shared by the command line.

pub mod arith;
pub mod assemblage;
pub mod braidcalc;
pub mod curveconf;
pub mod milnor;
pub mod picard;
pub mod report;
pub mod winding;

mod error;

pub use error::{Error, Result};

pub use assemblage::{
    build_standard_assemblage, capping_order, certify, monodromy_report, Assemblage, AssemblageStep,
    FramingCertificate, MonodromyReport,
};
pub use braidcalc::{main_lemma_plan, psi, BraidGenerator, BraidLetter, CorrectionPlan, PsiImage};
pub use curveconf::{CurveSystem, DynkinType, IntersectionGraph, NeighborhoodInvariants};
pub use milnor::{milnor_number, MilnorResult, PlaneGerm};
pub use picard::{AdjointReport, DivisorClass, JetLedger, PicardLattice};
pub use report::ReportDocument;
pub use winding::{HomologyCurve, TwistWord, WindingContext, WindingFunction};
