//! Milnor numbers of plane curve germs.
//!
//! The local algebra `C[[x,y]] / (f_x, f_y)` is approximated by
//! `P_N / (J + m^{N+1})`, where `P_N` holds polynomials of degree at most `N`
//! and `J` is spanned by monomial multiples of the partials, truncated above
//! degree `N`. Its dimension is computed by exact elimination over the
//! integers; `N` grows until two consecutive truncations agree.
//!
//! Columns are ordered by descending degree, ties broken with higher powers
//! of `x` first, so pivots sit on the largest monomials and the remaining
//! columns form a monomial basis of the quotient.

mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::curveconf::{CurveSystem, DynkinType};

/// Default ceiling on the truncation degree.
pub const DEFAULT_CEILING: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MilnorError {
    #[error("at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("no stabilization up to degree {ceiling}: singularity not isolated or too deep")]
    NotIsolated { ceiling: u32 },
    #[error("unsupported singularity type `{0}`")]
    Unsupported(String),
}

/// A monomial `x^i y^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub u32, pub u32);

impl Monomial {
    pub fn degree(self) -> u32 {
        self.0 + self.1
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: &str, e: u32| match e {
            0 => String::new(),
            1 => v.to_string(),
            e => format!("{v}^{e}"),
        };
        match (self.0, self.1) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write!(f, "{}", part("x", i)),
            (0, j) => write!(f, "{}", part("y", j)),
            (i, j) => write!(f, "{}*{}", part("x", i), part("y", j)),
        }
    }
}

/// Sparse polynomial with rational coefficients and no zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Poly(BTreeMap<Monomial, BigRational>);

impl Poly {
    fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    fn constant(c: BigRational) -> Self {
        Poly::zero().with(Monomial(0, 0), c)
    }

    fn monomial(i: u32, j: u32) -> Self {
        Poly::zero().with(Monomial(i, j), BigRational::one())
    }

    fn with(mut self, m: Monomial, c: BigRational) -> Self {
        let entry = self.0.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
        self
    }

    fn add(&self, other: &Poly) -> Poly {
        other
            .0
            .iter()
            .fold(self.clone(), |acc, (m, c)| acc.with(*m, c.clone()))
    }

    fn sub(&self, other: &Poly) -> Poly {
        other
            .0
            .iter()
            .fold(self.clone(), |acc, (m, c)| acc.with(*m, -c.clone()))
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                out = out.with(Monomial(a.0 + b.0, a.1 + b.1), ca * cb);
            }
        }
        out
    }

    fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::constant(BigRational::one()), |acc, _| acc.mul(self))
    }
}

/// A germ `f(x, y)` at the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGerm {
    poly: Poly,
}

impl PlaneGerm {
    /// Builds a germ from `((i, j), coefficient)` terms; repeated exponents
    /// are summed and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(terms: I) -> Self {
        let poly = terms
            .into_iter()
            .fold(Poly::zero(), |acc, ((i, j), c)| acc.with(Monomial(i, j), c));
        PlaneGerm { poly }
    }

    pub fn parse(src: &str) -> Result<Self, MilnorError> {
        Ok(PlaneGerm {
            poly: parse::parse_poly(src)?,
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigRational)> {
        self.poly.0.iter().map(|(m, c)| (*m, c))
    }

    /// Total degree; 0 for constants and the zero germ.
    pub fn degree(&self) -> u32 {
        self.poly.0.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.0.is_empty()
    }

    /// The germ with `x` and `y` exchanged.
    pub fn swapped(&self) -> PlaneGerm {
        PlaneGerm::from_terms(self.terms().map(|(m, c)| ((m.1, m.0), c.clone())))
    }

    /// Formal partial derivatives `(f_x, f_y)`.
    pub fn jacobian(&self) -> (PlaneGerm, PlaneGerm) {
        let mut fx = Poly::zero();
        let mut fy = Poly::zero();
        for (m, c) in &self.poly.0 {
            if m.0 > 0 {
                fx = fx.with(Monomial(m.0 - 1, m.1), c * BigInt::from(m.0));
            }
            if m.1 > 0 {
                fy = fy.with(Monomial(m.0, m.1 - 1), c * BigInt::from(m.1));
            }
        }
        (PlaneGerm { poly: fx }, PlaneGerm { poly: fy })
    }
}

impl fmt::Display for PlaneGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.0.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigRational)> = self.poly.0.iter().collect();
        terms.sort_by_key(|(m, _)| column_key(**m));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_one = abs.is_one();
            match (is_one, m.degree()) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{m}")?,
                (false, 0) => write!(f, "{abs}")?,
                (false, _) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

/// Sort key: descending degree, then descending power of `x`.
fn column_key(m: Monomial) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
    (std::cmp::Reverse(m.degree()), std::cmp::Reverse(m.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorResult {
    pub mu: usize,
    /// Standard monomials, ascending by degree then by power of `y`.
    pub basis: Vec<Monomial>,
    /// Truncation degree at which the value stabilized.
    pub truncation: u32,
}

/// `dim P_N / (J + m^{N+1})` and the standard monomials.
pub fn truncated_quotient(f: &PlaneGerm, n: u32) -> (usize, Vec<Monomial>) {
    let mut columns: Vec<Monomial> = (0..=n)
        .flat_map(|d| (0..=d).map(move |i| Monomial(i, d - i)))
        .collect();
    columns.sort_by_key(|m| column_key(*m));
    let col_of: BTreeMap<Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();

    let (fx, fy) = f.jacobian();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in [&fx, &fy] {
        let low = g.poly.0.keys().map(|m| m.degree()).min();
        let Some(low) = low else { continue };
        for &shift in &columns {
            if shift.degree() + low > n {
                continue;
            }
            let mut entries: Vec<(usize, BigRational)> = Vec::new();
            for (m, c) in &g.poly.0 {
                let t = Monomial(m.0 + shift.0, m.1 + shift.1);
                if let Some(&col) = col_of.get(&t) {
                    entries.push((col, c.clone()));
                }
            }
            let den = entries
                .iter()
                .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
            let mut row = vec![BigInt::zero(); columns.len()];
            for (col, c) in entries {
                row[col] = (c * &den).to_integer();
            }
            rows.push(row);
        }
    }
    let pivots = pivot_columns(rows, columns.len());
    let mut basis: Vec<Monomial> = columns
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots[*i])
        .map(|(_, m)| *m)
        .collect();
    basis.sort_by_key(|m| (m.degree(), m.1));
    (basis.len(), basis)
}

/// Fraction-free row reduction; returns which columns carry a pivot.
fn pivot_columns(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<bool> {
    let mut pivots = vec![false; ncols];
    let mut top = 0;
    for col in 0..ncols {
        let Some(sel) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, sel);
        let pivot_row = rows[top].clone();
        let p = pivot_row[col].clone();
        for row in rows.iter_mut().skip(top + 1) {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x * &p - &a * y;
            }
            let content = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x /= &content;
                }
            }
        }
        pivots[col] = true;
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    pivots
}

/// Milnor number with the default degree ceiling.
pub fn milnor_number(f: &PlaneGerm) -> Result<MilnorResult, MilnorError> {
    milnor_number_with_ceiling(f, DEFAULT_CEILING)
}

pub fn milnor_number_with_ceiling(f: &PlaneGerm, ceiling: u32) -> Result<MilnorResult, MilnorError> {
    let mut n = f.degree().max(1);
    let mut prev = truncated_quotient(f, n);
    while n < ceiling {
        let next = truncated_quotient(f, n + 1);
        if next.0 == prev.0 {
            return Ok(MilnorResult {
                mu: prev.0,
                basis: prev.1,
                truncation: n,
            });
        }
        prev = next;
        n += 1;
    }
    Err(MilnorError::NotIsolated { ceiling })
}

/// Smallest `k` with `k >= deg f + 2` and every basis monomial of degree `<= k`.
pub fn jet_requirement(f: &PlaneGerm, basis: &[Monomial]) -> u32 {
    let top = basis.iter().map(|m| m.degree()).max().unwrap_or(0);
    (f.degree() + 2).max(top)
}

/// Role of a vanishing cycle in the local smoothing picture.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleRole {
    /// Isotopic to a boundary circle of the local smoothing.
    BoundaryCircle,
    /// Crosses between the two branches.
    CrossArc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorsificationReference {
    pub system: CurveSystem,
    /// One entry per curve when roles are known, empty otherwise.
    pub roles: Vec<(String, CycleRole)>,
    pub germ: Option<PlaneGerm>,
    pub note: &'static str,
}

/// Vanishing-cycle configurations of the reference Morsifications. These are
/// recorded data, not computed: A7 as `y(y + x^4)` with alternating roles,
/// E6 as `x^3 + y^4`.
pub fn morsification_reference(t: DynkinType) -> Result<MorsificationReference, MilnorError> {
    let system = CurveSystem::dynkin(t).map_err(|_| MilnorError::Unsupported(t.to_string()))?;
    let (roles, germ, note) = match t {
        DynkinType::A(7) => (
            system
                .names()
                .iter()
                .enumerate()
                .map(|(i, n)| {
                    let role = if i % 2 == 0 {
                        CycleRole::BoundaryCircle
                    } else {
                        CycleRole::CrossArc
                    };
                    (n.clone(), role)
                })
                .collect(),
            Some(PlaneGerm::parse("y^2 + y*x^4").expect("static germ")),
            "reference data: divide picture of the A7 Morsification",
        ),
        DynkinType::E6 => (
            Vec::new(),
            Some(PlaneGerm::parse("x^3 + y^4").expect("static germ")),
            "reference data: E6 Morsification",
        ),
        DynkinType::A(_) => (Vec::new(), None, "plumbing chain, no role data"),
    };
    Ok(MorsificationReference {
        system,
        roles,
        germ,
        note,
    })
}
