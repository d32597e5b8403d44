//! Picard lattices of simply connected surfaces.
//!
//! `Pic(X)` is modeled as a free module with a chosen basis, an integral
//! intersection form and the class of the canonical bundle. Simple
//! connectivity makes `Pic(X)` torsion free, so the divisibility of a class is
//! just the gcd of its coordinates.

mod catalog;
mod decision;
mod format;
mod jets;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{dot, gcd_all};

pub use catalog::{lookup, standard_names, CatalogEntry};
pub use decision::{
    lefschetz_full_decision, LefschetzDecision, RankOneClass, RankOneVerdict,
};
pub use format::{parse_lattice, LatticeFile};
pub use jets::{
    jet_compose, theorem_hypothesis_check, HypothesisCertificate, JetEntry, JetLedger,
    DEFAULT_MAX_TERMS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("gram matrix must be square of size {rank}")]
    BadShape { rank: usize },
    #[error("gram matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("intersection form is degenerate")]
    Degenerate,
    #[error("intersection form has signature ({pos}, {neg}); expected (1, {expected_neg})")]
    Signature {
        pos: usize,
        neg: usize,
        expected_neg: usize,
    },
    #[error("class has {got} coordinates, lattice rank is {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("classes live on different lattices")]
    LatticeMismatch,
    #[error("L.(K+L) = {0} is odd; the class is not represented by a smooth curve")]
    NotRepresentable(i64),
    #[error("smoothed genus {smoothed} disagrees with adjunction genus {direct}")]
    GenusMismatch { smoothed: i64, direct: i64 },
    #[error("no ledger entry certifies class {0}")]
    Uncertified(String),
    #[error("surface is not simply connected")]
    NotSimplyConnected,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("unknown catalog surface `{0}`")]
    UnknownSurface(String),
    #[error("canonical class failed adjunction check on {curve}: genus {got}, expected {expected}")]
    CanonicalCheck {
        curve: String,
        got: i64,
        expected: i64,
    },
    #[error("lattice file, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An integral lattice with intersection form and canonical vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardLattice {
    name: Option<String>,
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    simply_connected: bool,
}

impl PicardLattice {
    /// Validates symmetry and the Hodge-index signature `(1, rank - 1)`.
    pub fn new(
        name: Option<String>,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        simply_connected: bool,
    ) -> Result<Arc<Self>, PicardError> {
        let rank = canonical.len();
        if rank == 0 || gram.len() != rank || gram.iter().any(|row| row.len() != rank) {
            return Err(PicardError::BadShape { rank });
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(PicardError::NotSymmetric(i, j));
                }
            }
        }
        let lattice = PicardLattice {
            name,
            gram,
            canonical,
            simply_connected,
        };
        let (pos, neg, zero) = lattice.signature();
        if zero > 0 {
            return Err(PicardError::Degenerate);
        }
        if pos != 1 {
            return Err(PicardError::Signature {
                pos,
                neg,
                expected_neg: rank - 1,
            });
        }
        Ok(Arc::new(lattice))
    }

    pub fn rank(&self) -> usize {
        self.canonical.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn simply_connected(&self) -> bool {
        self.simply_connected
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        self.gram
            .iter()
            .zip(a)
            .map(|(row, ai)| ai * dot(row, b))
            .sum()
    }

    /// Counts of positive, negative and zero eigenvalues of the gram matrix.
    ///
    /// The characteristic polynomial of a symmetric matrix is real-rooted, so
    /// Descartes' rule of signs is exact for it.
    pub fn signature(&self) -> (usize, usize, usize) {
        let coeffs = charpoly(&self.gram);
        let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
        let pos = sign_changes(coeffs.iter().cloned());
        let neg = sign_changes(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }),
        );
        (pos, neg, zero)
    }

    pub fn class(self: &Arc<Self>, coords: Vec<i64>) -> Result<DivisorClass, PicardError> {
        if coords.len() != self.rank() {
            return Err(PicardError::RankMismatch {
                got: coords.len(),
                rank: self.rank(),
            });
        }
        Ok(DivisorClass {
            coords,
            lattice: Arc::clone(self),
        })
    }

    pub fn canonical_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            coords: self.canonical.clone(),
            lattice: Arc::clone(self),
        }
    }
}

/// Coefficients `c_0, .., c_n` of `det(xI - A)` by Faddeev-LeVerrier.
fn charpoly(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let a: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &a[i][l] * &m[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &a[i][l] * &m[l][i];
            }
        }
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    coeffs
}

fn sign_changes<I: Iterator<Item = BigInt>>(coeffs: I) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let positive = c.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                changes += 1;
            }
        }
        last = Some(positive);
    }
    changes
}

/// A class in `Pic(X)`.
#[derive(Debug, Clone)]
pub struct DivisorClass {
    coords: Vec<i64>,
    lattice: Arc<PicardLattice>,
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && same_lattice(&self.lattice, &other.lattice)
    }
}

impl Eq for DivisorClass {}

fn same_lattice(a: &Arc<PicardLattice>, b: &Arc<PicardLattice>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl DivisorClass {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn lattice(&self) -> &Arc<PicardLattice> {
        &self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &DivisorClass) -> Result<(), PicardError> {
        if same_lattice(&self.lattice, &other.lattice) {
            Ok(())
        } else {
            Err(PicardError::LatticeMismatch)
        }
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass, PicardError> {
        self.check_same(other)?;
        Ok(DivisorClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            lattice: Arc::clone(&self.lattice),
        })
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass, PicardError> {
        self.check_same(other)?;
        Ok(DivisorClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
            lattice: Arc::clone(&self.lattice),
        })
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass {
            coords: self.coords.iter().map(|c| c * k).collect(),
            lattice: Arc::clone(&self.lattice),
        }
    }

    /// Largest `r` with `self = r * M`; 0 for the zero class.
    pub fn divisibility(&self) -> i64 {
        gcd_all(self.coords.iter().copied())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The intersection number `A . B`.
pub fn intersect(a: &DivisorClass, b: &DivisorClass) -> Result<i64, PicardError> {
    a.check_same(b)?;
    Ok(a.lattice.pair(&a.coords, &b.coords))
}

/// The adjoint class `K + L` and its maximal root order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointReport {
    pub adjoint: DivisorClass,
    /// gcd of the adjoint coordinates; 0 when `degenerate`.
    pub divisibility: i64,
    pub degenerate: bool,
}

impl AdjointReport {
    /// The primitive class `M` with `K + L = r M`, if the adjoint is nonzero.
    pub fn maximal_root(&self) -> Option<DivisorClass> {
        if self.degenerate {
            return None;
        }
        Some(DivisorClass {
            coords: self
                .adjoint
                .coords
                .iter()
                .map(|c| c / self.divisibility)
                .collect(),
            lattice: Arc::clone(&self.adjoint.lattice),
        })
    }
}

pub fn adjoint_and_root(l: &DivisorClass) -> AdjointReport {
    let adjoint = l.lattice.canonical_class().add(l).expect("same lattice");
    let degenerate = adjoint.is_zero();
    AdjointReport {
        divisibility: adjoint.divisibility(),
        adjoint,
        degenerate,
    }
}

/// Genus of a smooth curve in the class `L`, by adjunction: `2g - 2 = L.(K+L)`.
pub fn genus_of_section(l: &DivisorClass) -> Result<i64, PicardError> {
    let adjoint = l.lattice.canonical_class().add(l)?;
    let p = intersect(l, &adjoint)?;
    if p % 2 != 0 {
        return Err(PicardError::NotRepresentable(p));
    }
    Ok(1 + p / 2)
}

/// Genus of the smoothing of `C u D`: `g(C) + g(D) + C.D - 1`.
///
/// Cross-checked against adjunction on `C + D`.
pub fn smoothed_genus(c: &DivisorClass, d: &DivisorClass) -> Result<i64, PicardError> {
    let smoothed = genus_of_section(c)? + genus_of_section(d)? + intersect(c, d)? - 1;
    let direct = genus_of_section(&c.add(d)?)?;
    if smoothed != direct {
        return Err(PicardError::GenusMismatch { smoothed, direct });
    }
    Ok(smoothed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Arc<PicardLattice> {
        PicardLattice::new(Some("P2".into()), vec![vec![1]], vec![-3], true).unwrap()
    }

    fn p1p1() -> Arc<PicardLattice> {
        PicardLattice::new(None, vec![vec![0, 1], vec![1, 0]], vec![-2, -2], true).unwrap()
    }

    #[test]
    fn intersections() {
        let x = p2();
        let h = x.class(vec![1]).unwrap();
        assert_eq!(intersect(&h, &h).unwrap(), 1);
        assert_eq!(intersect(&h.scale(5), &h.scale(5)).unwrap(), 25);
        let q = p1p1();
        let a = q.class(vec![1, 0]).unwrap();
        let b = q.class(vec![0, 1]).unwrap();
        assert_eq!(intersect(&a, &b).unwrap(), 1);
        assert_eq!(intersect(&h, &a), Err(PicardError::LatticeMismatch));
    }

    #[test]
    fn adjoint_roots() {
        let x = p2();
        let r5 = adjoint_and_root(&x.class(vec![5]).unwrap());
        assert_eq!((r5.adjoint.coords(), r5.divisibility), (&[2][..], 2));
        let r7 = adjoint_and_root(&x.class(vec![7]).unwrap());
        assert_eq!(r7.divisibility, 4);
        assert_eq!(r7.maximal_root().unwrap().coords(), &[1]);
        let r3 = adjoint_and_root(&x.class(vec![3]).unwrap());
        assert!(r3.degenerate);
        assert_eq!(r3.divisibility, 0);
        assert!(r3.maximal_root().is_none());
    }

    #[test]
    fn plane_curve_genera() {
        let x = p2();
        for d in 1..12 {
            let g = genus_of_section(&x.class(vec![d]).unwrap()).unwrap();
            assert_eq!(g, (d - 1) * (d - 2) / 2);
        }
        let q = p1p1();
        assert_eq!(genus_of_section(&q.class(vec![2, 2]).unwrap()).unwrap(), 1);
        // anticanonical curves are elliptic
        assert_eq!(genus_of_section(&q.class(vec![2, 2]).unwrap()).unwrap(), 1);
        assert_eq!(genus_of_section(&x.class(vec![3]).unwrap()).unwrap(), 1);
    }

    #[test]
    fn odd_adjunction_is_rejected() {
        // a deliberately non-characteristic canonical vector
        let bad = PicardLattice::new(None, vec![vec![1]], vec![0], true).unwrap();
        assert_eq!(
            genus_of_section(&bad.class(vec![1]).unwrap()),
            Err(PicardError::NotRepresentable(1))
        );
    }

    #[test]
    fn smoothing_genera() {
        let x = p2();
        let h = x.class(vec![1]).unwrap();
        assert_eq!(smoothed_genus(&h, &h).unwrap(), 0);
        assert_eq!(smoothed_genus(&h.scale(6), &h).unwrap(), 15);
        assert_eq!(genus_of_section(&h.scale(7)).unwrap(), 15);
        let q = p1p1();
        let c = q.class(vec![1, 1]).unwrap();
        assert_eq!(smoothed_genus(&c, &c).unwrap(), 1);
    }

    #[test]
    fn hodge_index_is_enforced() {
        assert!(matches!(
            PicardLattice::new(None, vec![vec![1, 0], vec![0, 1]], vec![0, 0], true),
            Err(PicardError::Signature { pos: 2, .. })
        ));
        assert_eq!(
            PicardLattice::new(None, vec![vec![1, 1], vec![1, 1]], vec![0, 0], true),
            Err(PicardError::Degenerate)
        );
        assert_eq!(
            PicardLattice::new(None, vec![vec![1, 2], vec![0, 1]], vec![0, 0], true),
            Err(PicardError::NotSymmetric(1, 0))
        );
        let bl = PicardLattice::new(
            None,
            vec![vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]],
            vec![-3, 1, 1],
            true,
        )
        .unwrap();
        assert_eq!(bl.signature(), (1, 2, 0));
    }
}
