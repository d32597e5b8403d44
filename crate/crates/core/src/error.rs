use thiserror::Error;

use crate::{assemblage, braidcalc, curveconf, milnor, picard, winding};

/// Any domain error raised by the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Picard(#[from] picard::PicardError),
    #[error(transparent)]
    Curve(#[from] curveconf::CurveError),
    #[error(transparent)]
    Winding(#[from] winding::WindingError),
    #[error(transparent)]
    Assemblage(#[from] assemblage::AssemblageError),
    #[error(transparent)]
    Milnor(#[from] milnor::MilnorError),
    #[error(transparent)]
    Braid(#[from] braidcalc::BraidError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
