use proptest::prelude::*;

use rspin_core::braidcalc::{format_word, main_lemma_plan, parse_word, psi, BraidGenerator, BraidLetter};

fn letters(d: usize) -> impl Strategy<Value = Vec<BraidLetter>> {
    prop::collection::vec((1..=d, 1..=d, -4i64..=4, 0u8..4), 0..12).prop_map(|raw| {
        raw.into_iter()
            .map(|(i, j, e, kind)| {
                let g = match kind {
                    0 => BraidGenerator::Boundary(i),
                    1 => BraidGenerator::Stabilizer("t".into()),
                    _ if i != j => BraidGenerator::Meridian(i.min(j), i.max(j)),
                    _ => BraidGenerator::Boundary(j),
                };
                BraidLetter::new(g, e)
            })
            .collect()
    })
}

fn even_vector() -> impl Strategy<Value = Vec<i64>> {
    (6usize..=10).prop_flat_map(|d| prop::collection::vec(-12i64..=12, d)).prop_map(|mut k| {
        if k.iter().sum::<i64>() % 2 != 0 {
            k[0] += 1;
        }
        k
    })
}

proptest! {
    #[test]
    fn image_sum_is_even(w in letters(7)) {
        let v = psi(&w, 7).unwrap();
        prop_assert_eq!(v.as_slice().iter().sum::<i64>() % 2, 0);
    }

    #[test]
    fn psi_is_a_homomorphism(a in letters(6), b in letters(6)) {
        let mut ab = a.clone();
        ab.extend(b.iter().cloned());
        let (pa, pb, pab) = (psi(&a, 6).unwrap(), psi(&b, 6).unwrap(), psi(&ab, 6).unwrap());
        let sum: Vec<i64> = pa.as_slice().iter().zip(pb.as_slice()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(pab.as_slice(), &sum[..]);
    }

    #[test]
    fn words_round_trip(w in letters(6)) {
        prop_assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
    }

    #[test]
    fn plan_cancels(k in even_vector()) {
        let plan = main_lemma_plan(&k).unwrap();
        prop_assert_eq!(plan.ell, k[0] - k[1]);
        let image = psi(&plan.word(), k.len()).unwrap();
        let neg: Vec<i64> = k.iter().map(|x| -x).collect();
        prop_assert_eq!(image.as_slice(), &neg[..]);
        if k.iter().all(|&x| x == 0) {
            prop_assert!(plan.word().is_empty());
        }
    }
}
