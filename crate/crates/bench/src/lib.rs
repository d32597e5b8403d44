//! Inputs shared by the benchmarks in `benches/`.

use rspin_core::milnor::PlaneGerm;
use rspin_core::picard::{lookup, DivisorClass, JetLedger};

/// Germs of increasing Milnor number.
pub const GERMS: &[(&str, &str)] = &[
    ("E6", "x^3+y^4"),
    ("A7", "y^2+y*x^4"),
    ("x5y6", "x^5+y^6"),
    ("x7y8", "x^7+y^8+x^3*y^4"),
];

pub fn germ(src: &str) -> PlaneGerm {
    PlaneGerm::parse(src).expect("fixture parses")
}

/// `C = aH`, `D = bH` on the plane with its catalog ledger.
pub fn plane_pair(a: i64, b: i64) -> (DivisorClass, DivisorClass, JetLedger) {
    let p2 = lookup("P2").expect("catalog has P2");
    let c = p2.lattice.class(vec![a]).expect("rank one");
    let d = p2.lattice.class(vec![b]).expect("rank one");
    (c, d, p2.ledger)
}

/// A deterministic even-sum vector of length `d`.
pub fn even_vector(d: usize) -> Vec<i64> {
    let mut k: Vec<i64> = (0..d as i64).map(|i| (i * 7 + 3) % 11 - 5).collect();
    if k.iter().sum::<i64>() % 2 != 0 {
        k[0] += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for (_, src) in GERMS {
            assert!(rspin_core::milnor::milnor_number(&germ(src)).is_ok());
        }
        let (c, d, _) = plane_pair(6, 1);
        assert_eq!(c.add(&d).unwrap().coords(), &[7]);
        assert_eq!(even_vector(9).iter().sum::<i64>() % 2, 0);
    }
}
