use proptest::prelude::*;

use rspin_core::picard::{
    genus_of_section, intersect, jet_compose, lookup, smoothed_genus, standard_names, JetLedger,
};

fn entry_and_classes() -> impl Strategy<Value = (String, Vec<i64>, Vec<i64>)> {
    let names = standard_names();
    (0..names.len()).prop_flat_map(move |i| {
        let name = names[i].clone();
        let rank = lookup(&name).unwrap().lattice.rank();
        (
            Just(name),
            prop::collection::vec(-8i64..=8, rank),
            prop::collection::vec(-8i64..=8, rank),
        )
    })
}

proptest! {
    #[test]
    fn intersection_is_symmetric((name, a, b) in entry_and_classes()) {
        let lat = lookup(&name).unwrap().lattice;
        let (a, b) = (lat.class(a).unwrap(), lat.class(b).unwrap());
        prop_assert_eq!(intersect(&a, &b).unwrap(), intersect(&b, &a).unwrap());
    }

    #[test]
    fn smoothing_matches_sum((name, a, b) in entry_and_classes()) {
        let lat = lookup(&name).unwrap().lattice;
        let (c, d) = (lat.class(a).unwrap(), lat.class(b).unwrap());
        let sum = genus_of_section(&c.add(&d).unwrap()).unwrap();
        prop_assert_eq!(smoothed_genus(&c, &d).unwrap(), sum);
    }

    #[test]
    fn divisibility_divides_products((name, a, b) in entry_and_classes()) {
        let lat = lookup(&name).unwrap().lattice;
        let (l, x) = (lat.class(a).unwrap(), lat.class(b).unwrap());
        let r = l.divisibility();
        let p = intersect(&l, &x).unwrap();
        if r == 0 {
            prop_assert_eq!(p, 0);
        } else {
            prop_assert_eq!(p % r, 0);
        }
        prop_assert_eq!(l.scale(3).divisibility(), 3 * r);
    }

    #[test]
    fn plane_jets_are_monotone(n in 1i64..20, m in 1i64..20) {
        let lat = lookup("P2").unwrap().lattice;
        let mut ledger = JetLedger::new(lat.clone());
        let o = |k| lat.class(vec![k]).unwrap();
        ledger.declare(&o(1), 1, "base").unwrap();
        let ln = ledger.certified_level(&o(n), 24).unwrap();
        let ln1 = ledger.certified_level(&o(n + 1), 24).unwrap();
        prop_assert!(ln1 >= ln);
        prop_assert_eq!(ln as i64, n);
        ledger.declare(&o(n), ln, "closure").unwrap();
        ledger.declare(&o(m), m as u32, "closure").unwrap();
        prop_assert_eq!(jet_compose(&mut ledger, &o(n), &o(m)).unwrap() as i64, n + m);
    }
}
