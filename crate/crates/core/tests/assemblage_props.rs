use proptest::prelude::*;

use rspin_core::arith::{divisors, residue};
use rspin_core::assemblage::{
    apply_step, build_standard_assemblage, capping_order, certify, monodromy_report, AssemblageState,
    AssemblageStep, ReportVerdict,
};
use rspin_core::picard::lookup;

/// A random walk of valid steps from the values `start` on a genus-`g` surface.
fn walk(g: u32, start: Vec<(String, i64)>, r: u64, moves: &[(bool, usize, usize, i64)]) -> Vec<AssemblageStep> {
    let mut state = AssemblageState::new(g, start, r).unwrap();
    let mut steps = Vec::new();
    for (k, (split, i, j, v)) in moves.iter().enumerate() {
        let n = state.boundary.len();
        let step = if *split || n < 2 {
            let (name, val) = state.boundary[i % n].clone();
            AssemblageStep::split(format!("h{k}"), name, (format!("s{k}a"), *v), (format!("s{k}b"), val - 1 - v))
        } else {
            let (a, va) = state.boundary[i % n].clone();
            let (b, vb) = state.boundary[(i % n + 1 + j % (n - 1)) % n].clone();
            AssemblageStep::merge(format!("h{k}"), a, b, (format!("m{k}"), va + vb - 1))
        };
        state = apply_step(&state, &step).unwrap();
        steps.push(step);
    }
    steps
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coherence_at_every_stage(r in prop::sample::select(vec![0u64, 2, 3, 4]), moves in prop::collection::vec((any::<bool>(), 0usize..8, 0usize..8, -6i64..=6), 0..20)) {
        let start = vec![("dC".to_string(), -9), ("dD".to_string(), -3)];
        let steps = walk(6, start.clone(), r, &moves);
        let mut state = AssemblageState::new(6, start, r).unwrap();
        for s in &steps {
            let next = apply_step(&state, s).unwrap();
            prop_assert_eq!(next.euler, state.euler - 1);
            prop_assert_eq!(residue(next.values().iter().sum::<i64>() - next.euler, r), 0);
            state = next;
        }
    }

    #[test]
    fn broken_split_is_rejected(v in -6i64..=6, off in 1i64..=5) {
        let state = AssemblageState::new(6, vec![("dC".into(), -9), ("dD".into(), -3)], 0).unwrap();
        let bad = AssemblageStep::split("h", "dC", ("x", v), ("y", -10 - v + off));
        prop_assert!(apply_step(&state, &bad).is_err());
    }

    #[test]
    fn capping_divides_every_shifted_value(vals in prop::collection::vec(-40i64..=40, 1..6)) {
        let c = capping_order(&vals).unwrap();
        for v in &vals {
            if c == 0 {
                prop_assert_eq!(v + 1, 0);
            } else {
                prop_assert_eq!((v + 1) % c, 0);
            }
        }
        let mut rev = vals.clone();
        rev.reverse();
        prop_assert_eq!(capping_order(&rev).unwrap(), c);
    }

    #[test]
    fn standard_assemblage_fills(g_c in 3u32..=8, g_d in 0u32..=3, d in 6u32..=10) {
        let p = build_standard_assemblage(g_c, g_d, d).unwrap();
        let cert = certify(&p.assemblage, &p.initial).unwrap();
        prop_assert!(cert.generates);
        prop_assert_eq!(cert.genus, g_c + g_d + d - 1);
        let finals: Vec<i64> = cert.boundary_values.iter().map(|(_, v)| *v).collect();
        prop_assert_eq!(finals, vec![p.expected_final.0, p.expected_final.1]);
    }

    #[test]
    fn independent_splits_commute(a in -5i64..=5, b in -5i64..=5) {
        let start = vec![("dC".to_string(), -9), ("dD".to_string(), -3)];
        let s1 = AssemblageStep::split("h1", "dC", ("x", a), ("y", -10 - a));
        let s2 = AssemblageStep::split("h2", "dD", ("u", b), ("w", -4 - b));
        let st = AssemblageState::new(6, start, 0).unwrap();
        let one = apply_step(&apply_step(&st, &s1).unwrap(), &s2).unwrap();
        let two = apply_step(&apply_step(&st, &s2).unwrap(), &s1).unwrap();
        let mut v1 = one.boundary.clone();
        let mut v2 = two.boundary.clone();
        v1.sort();
        v2.sort();
        prop_assert_eq!(v1, v2);
        prop_assert_eq!((one.genus, one.euler), (two.genus, two.euler));
    }
}

fn check_r_divides_r_prime(name: &str, c: Vec<i64>, d: Vec<i64>) -> bool {
    let e = lookup(name).unwrap();
    let cc = e.lattice.class(c).unwrap();
    let dd = e.lattice.class(d).unwrap();
    let rep = monodromy_report(&cc, &dd, &e.ledger).unwrap();
    let ReportVerdict::Certified { r } = rep.verdict else {
        return false;
    };
    let rp = rep.r_prime_capping.unwrap();
    assert_eq!(rp, rep.r_prime_lattice);
    assert!(rp == 0 || divisors(rp).contains(&r), "{name}: r = {r}, r' = {rp}");
    for refuted in &rep.refuted {
        assert!(refuted.s > r && rp % refuted.s == 0);
        assert_ne!(refuted.coordinate % refuted.s, 0);
    }
    true
}

#[test]
fn r_divides_r_prime_on_catalog() {
    let mut certified = 0;
    for a in 6..=8 {
        for b in 1..=3 {
            certified += check_r_divides_r_prime("P2", vec![a], vec![b]) as usize;
        }
    }
    for (a1, a2) in [(6, 6), (6, 7), (7, 8)] {
        for (b1, b2) in [(1, 1), (1, 2), (2, 2)] {
            certified += check_r_divides_r_prime("P1xP1", vec![a1, a2], vec![b1, b2]) as usize;
        }
    }
    assert!(certified >= 12, "only {certified} certified cases");
}
