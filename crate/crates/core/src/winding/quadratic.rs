//! Quadratic forms on `H_1(S; Z/2)` refining the intersection pairing:
//! `q(x + y) = q(x) + q(y) + <x, y>` mod 2.

use super::{symplectic_pair, WindingError};

/// Largest genus for which [`enumerate_forms`] enumerates all forms.
pub const MAX_CENSUS_GENUS: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    genus: u32,
    /// Values on `a1, b1, .., ag, bg`.
    basis: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArfCensus {
    pub genus: u32,
    pub arf_zero: u64,
    pub arf_one: u64,
}

impl QuadraticForm {
    pub fn new(genus: u32, values: &[i64]) -> Result<Self, WindingError> {
        if values.len() != 2 * genus as usize {
            return Err(WindingError::Dimension {
                name: "quadratic form".into(),
                got: values.len(),
                expected: 2 * genus as usize,
            });
        }
        Ok(QuadraticForm {
            genus,
            basis: values.iter().map(|v| v.rem_euclid(2) as u8).collect(),
        })
    }

    /// The form of a spin structure read from winding numbers of the basis
    /// curves: `q(x) = phi(x) + 1` mod 2. Needs `r` even, or 0.
    pub fn from_winding(modulus: u64, genus: u32, windings: &[i64]) -> Result<Self, WindingError> {
        if modulus % 2 != 0 {
            return Err(WindingError::OddModulus(modulus));
        }
        let q: Vec<i64> = windings.iter().map(|w| w + 1).collect();
        Self::new(genus, &q)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn basis_values(&self) -> &[u8] {
        &self.basis
    }

    /// Value on a class given in the symplectic basis (boundary coordinates,
    /// if any, are ignored).
    pub fn eval(&self, x: &[i64]) -> u8 {
        let g = self.genus as usize;
        let bit = |i: usize| x[i].rem_euclid(2) as u8;
        let mut q = 0u8;
        for k in 0..g {
            let (a, b) = (bit(2 * k), bit(2 * k + 1));
            q ^= (a & self.basis[2 * k]) ^ (b & self.basis[2 * k + 1]) ^ (a & b);
        }
        q
    }

    pub fn arf(&self) -> u8 {
        (0..self.genus as usize).fold(0, |acc, k| acc ^ (self.basis[2 * k] & self.basis[2 * k + 1]))
    }

    /// Whether `q(T_v x) = q(x)` for every `x`, by enumeration.
    pub fn preserved_by(&self, v: &[i64]) -> bool {
        let n = 2 * self.genus as usize;
        (0u64..1 << n).all(|bits| {
            let x: Vec<i64> = (0..n).map(|i| ((bits >> i) & 1) as i64).collect();
            self.eval(&transvect_mod2(self.genus, &x, v)) == self.eval(&x)
        })
    }
}

/// `x + <x, v> v` reduced mod 2.
pub fn transvect_mod2(genus: u32, x: &[i64], v: &[i64]) -> Vec<i64> {
    let p = symplectic_pair(genus, x, v);
    x.iter()
        .zip(v)
        .map(|(xi, vi)| (xi + p * vi).rem_euclid(2))
        .collect()
}

/// Counts forms by Arf invariant over all `2^{2g}` basis assignments.
pub fn enumerate_forms(genus: u32) -> Result<ArfCensus, WindingError> {
    if genus > MAX_CENSUS_GENUS {
        return Err(WindingError::TooLarge(genus));
    }
    let n = 2 * genus as usize;
    let mut out = ArfCensus {
        genus,
        arf_zero: 0,
        arf_one: 0,
    };
    for bits in 0u64..1 << n {
        let values: Vec<i64> = (0..n).map(|i| ((bits >> i) & 1) as i64).collect();
        let q = QuadraticForm::new(genus, &values)?;
        if q.arf() == 0 {
            out.arf_zero += 1;
        } else {
            out.arf_one += 1;
        }
    }
    Ok(out)
}
