//! Winding number functions modulo `r`.
//!
//! Conventions, fixed once:
//!
//! * Homology is written in a symplectic basis `a1, b1, .., ag, bg` followed
//!   by one coordinate per boundary circle; `<ai, bi> = 1` and boundary
//!   coordinates pair trivially with everything.
//! * Twists are right-handed: `T_c(x) = x + <x, c> c`, and
//!   `phi(T_c(x)) = phi(x) + <x, c> phi(c)`.
//! * A boundary value is taken with the subsurface to its left.
//! * `r = 0` means integer-valued (a framing); residues are then plain integers.
//! * Arcs carry half-integral values and are stored doubled, modulo `2r`.
//!   Which endpoint convention produces the half is left to the caller.

mod format;
mod quadratic;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{divides, gcd_all, residue};

pub use format::{parse_winding_file, WindingFile};
pub use quadratic::{enumerate_forms, transvect_mod2, ArfCensus, QuadraticForm, MAX_CENSUS_GENUS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindingError {
    #[error("cannot pass from modulus {from} to {to}: {to} does not divide {from}")]
    ModulusOrder { from: u64, to: u64 },
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("class of `{name}` has length {got}, expected {expected}")]
    Dimension {
        name: String,
        got: usize,
        expected: usize,
    },
    #[error("empty input")]
    Empty,
    #[error("refusing to enumerate forms in genus {0} (limit {MAX_CENSUS_GENUS})")]
    TooLarge(u32),
    #[error("a mod 2 quadratic form needs an even modulus, got {0}")]
    OddModulus(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingContext {
    modulus: u64,
    genus: u32,
    boundary_names: Vec<String>,
}

impl WindingContext {
    pub fn new(modulus: u64, genus: u32, boundary_names: Vec<String>) -> Self {
        WindingContext {
            modulus,
            genus,
            boundary_names,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> u32 {
        self.boundary_names.len() as u32
    }

    pub fn boundary_names(&self) -> &[String] {
        &self.boundary_names
    }

    /// Length of a homology vector: `2g + b`.
    pub fn rank(&self) -> usize {
        2 * self.genus as usize + self.boundary_names.len()
    }

    pub fn residue(&self, v: i64) -> i64 {
        residue(v, self.modulus)
    }

    /// The algebraic intersection pairing.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        symplectic_pair(self.genus, x, y)
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary() as i64
    }
}

pub(crate) fn symplectic_pair(genus: u32, x: &[i64], y: &[i64]) -> i64 {
    (0..genus as usize)
        .map(|k| x[2 * k] * y[2 * k + 1] - x[2 * k + 1] * y[2 * k])
        .sum()
}

/// A named oriented curve with its homology class and winding number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyCurve {
    pub name: String,
    pub hclass: Vec<i64>,
    pub winding: i64,
}

impl HomologyCurve {
    pub fn new(name: impl Into<String>, hclass: Vec<i64>, winding: i64) -> Self {
        HomologyCurve {
            name: name.into(),
            hclass,
            winding,
        }
    }

    fn check(&self, ctx: &WindingContext) -> Result<(), WindingError> {
        if self.hclass.len() != ctx.rank() {
            return Err(WindingError::Dimension {
                name: self.name.clone(),
                got: self.hclass.len(),
                expected: ctx.rank(),
            });
        }
        Ok(())
    }
}

/// Values of a winding function on named curves and arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingFunction {
    context: WindingContext,
    values: BTreeMap<String, i64>,
    arc_values: BTreeMap<String, i64>,
}

impl WindingFunction {
    pub fn new(context: WindingContext) -> Self {
        WindingFunction {
            context,
            values: BTreeMap::new(),
            arc_values: BTreeMap::new(),
        }
    }

    pub fn context(&self) -> &WindingContext {
        &self.context
    }

    pub fn with_value(mut self, curve: impl Into<String>, v: i64) -> Self {
        let v = self.context.residue(v);
        self.values.insert(curve.into(), v);
        self
    }

    /// Records an arc value given doubled, so `3` means `3/2`.
    pub fn with_arc_doubled(mut self, arc: impl Into<String>, doubled: i64) -> Self {
        let v = residue(doubled, 2 * self.context.modulus);
        self.arc_values.insert(arc.into(), v);
        self
    }

    pub fn value(&self, curve: &str) -> Option<i64> {
        self.values.get(curve).copied()
    }

    pub fn arc_doubled(&self, arc: &str) -> Option<i64> {
        self.arc_values.get(arc).copied()
    }

    pub fn values(&self) -> &BTreeMap<String, i64> {
        &self.values
    }

    pub fn arc_values(&self) -> &BTreeMap<String, i64> {
        &self.arc_values
    }

    /// The unique reduction to a divisor `r_new` of the modulus.
    pub fn reduce_mod(&self, r_new: u64) -> Result<WindingFunction, WindingError> {
        let r = self.context.modulus;
        if !divides(r_new as i64, r as i64) {
            return Err(WindingError::ModulusOrder { from: r, to: r_new });
        }
        let context = WindingContext {
            modulus: r_new,
            ..self.context.clone()
        };
        Ok(WindingFunction {
            values: self
                .values
                .iter()
                .map(|(k, &v)| (k.clone(), residue(v, r_new)))
                .collect(),
            arc_values: self
                .arc_values
                .iter()
                .map(|(k, &v)| (k.clone(), residue(v, 2 * r_new)))
                .collect(),
            context,
        })
    }
}

/// `phi(T_c^e(a)) = phi(a) + e <a, c> phi(c)` reduced mod `r`.
pub fn twist_value(phi_a: i64, phi_c: i64, pairing: i64, exponent: i64, r: u64) -> i64 {
    residue(phi_a + exponent * pairing * phi_c, r)
}

/// A product of twist powers, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwistWord {
    pub letters: Vec<(String, i64)>,
}

impl TwistWord {
    pub fn new(letters: Vec<(String, i64)>) -> Self {
        TwistWord { letters }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(c, e)| (c.clone(), -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }
}

impl std::str::FromStr for TwistWord {
    type Err = WindingError;

    /// Whitespace-separated letters `name` or `name^e`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>().map_err(|_| WindingError::Parse {
                        line: 0,
                        msg: format!("bad exponent in `{tok}`"),
                    })?,
                ),
                None => (tok, 1),
            };
            letters.push((name.to_string(), e));
        }
        Ok(TwistWord { letters })
    }
}

impl std::fmt::Display for TwistWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(c, e)| if *e == 1 { c.clone() } else { format!("{c}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Image of `curve` under `word`. Twist curves are looked up in `curves`
/// and stay fixed; only the target moves.
pub fn act(
    ctx: &WindingContext,
    word: &TwistWord,
    curves: &BTreeMap<String, HomologyCurve>,
    curve: &HomologyCurve,
) -> Result<HomologyCurve, WindingError> {
    curve.check(ctx)?;
    let mut x = curve.hclass.clone();
    let mut w = ctx.residue(curve.winding);
    for (name, e) in &word.letters {
        let c = curves
            .get(name)
            .ok_or_else(|| WindingError::UnknownCurve(name.clone()))?;
        c.check(ctx)?;
        let p = ctx.pair(&x, &c.hclass);
        w = twist_value(w, c.winding, p, *e, ctx.modulus);
        for (xi, ci) in x.iter_mut().zip(&c.hclass) {
            *xi += e * p * ci;
        }
    }
    Ok(HomologyCurve {
        name: curve.name.clone(),
        hclass: x,
        winding: w,
    })
}

/// Homological coherence: the boundary values of a subsurface, each taken
/// with the subsurface to its left, sum to its Euler characteristic mod `r`.
pub fn coherence_check(values: &[i64], chi: i64, r: u64) -> bool {
    residue(values.iter().sum::<i64>() - chi, r) == 0
}

/// Nonzero in the homology of the capped surface and winding 0.
pub fn is_admissible(ctx: &WindingContext, curve: &HomologyCurve) -> bool {
    let sympl = 2 * ctx.genus as usize;
    curve.hclass.len() == ctx.rank()
        && curve.hclass[..sympl].iter().any(|&c| c != 0)
        && ctx.residue(curve.winding) == 0
}

/// `gcd({k_i r} ∪ {r'})`: the modulus generated by the orbit residues.
pub fn nonconmax_gcd(ks: &[i64], r: i64, r_prime: i64) -> Result<i64, WindingError> {
    if ks.is_empty() {
        return Err(WindingError::Empty);
    }
    if !divides(r, r_prime) {
        return Err(WindingError::ModulusOrder {
            from: r_prime.unsigned_abs(),
            to: r.unsigned_abs(),
        });
    }
    Ok(gcd_all(ks.iter().map(|k| k * r).chain([r_prime])))
}
