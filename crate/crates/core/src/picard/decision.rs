//! Which surfaces carry a Lefschetz pencil with full monodromy.

use super::{DivisorClass, PicardError, PicardLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankOneClass {
    /// `K = 0`.
    K3,
    /// `K` negative; the only such surface of Picard rank one is `P2`.
    DelPezzo,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneVerdict {
    /// `K = n L` for the ample generator `L`.
    pub canonical_multiple: i64,
    /// Every `m >= 1` with `|m + n| <= 1`: the adjoint of `mL` has no nontrivial root.
    pub achievable_m: Vec<i64>,
    pub class: RankOneClass,
    /// Excluded by the hypotheses of the full-monodromy criterion (`P2`, rank-one K3).
    pub exceptional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LefschetzDecision {
    /// Picard rank at least two: some pencil has monodromy the full mapping class group.
    FullMonodromyPencilExists { rank: usize },
    RankOne(RankOneVerdict),
}

pub fn lefschetz_full_decision(
    lattice: &std::sync::Arc<PicardLattice>,
    ample_generator: Option<&DivisorClass>,
) -> Result<LefschetzDecision, PicardError> {
    if !lattice.simply_connected() {
        return Err(PicardError::NotSimplyConnected);
    }
    if lattice.rank() >= 2 {
        return Ok(LefschetzDecision::FullMonodromyPencilExists {
            rank: lattice.rank(),
        });
    }
    let generator = match ample_generator {
        Some(g) => {
            if g.coords().len() != 1 {
                return Err(PicardError::RankMismatch {
                    got: g.coords().len(),
                    rank: 1,
                });
            }
            g.coords()[0]
        }
        None => 1,
    };
    if generator.abs() != 1 || lattice.gram()[0][0] <= 0 {
        return Err(PicardError::Inconsistent(
            "rank-one lattice needs a positive generator".into(),
        ));
    }
    let k = lattice.canonical()[0];
    if k % generator != 0 {
        return Err(PicardError::Inconsistent(
            "canonical class is not a multiple of the generator".into(),
        ));
    }
    let n = k / generator;
    let achievable_m: Vec<i64> = ((-n - 1).max(1)..=(-n + 1)).collect();
    let class = match n {
        0 => RankOneClass::K3,
        n if n < 0 => RankOneClass::DelPezzo,
        _ => RankOneClass::Neither,
    };
    let exceptional = class == RankOneClass::K3 || (class == RankOneClass::DelPezzo && n == -3);
    Ok(LefschetzDecision::RankOne(RankOneVerdict {
        canonical_multiple: n,
        achievable_m,
        class,
        exceptional,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::lookup;
    use super::*;

    #[test]
    fn plane_quartics() {
        let p2 = lookup("P2").unwrap();
        let LefschetzDecision::RankOne(v) =
            lefschetz_full_decision(&p2.lattice, p2.ample_generator.as_ref()).unwrap()
        else {
            panic!("rank one expected");
        };
        assert_eq!(v.canonical_multiple, -3);
        assert!(v.achievable_m.contains(&4));
        assert_eq!(v.achievable_m, vec![2, 3, 4]);
        assert_eq!(v.class, RankOneClass::DelPezzo);
        assert!(v.exceptional);
    }

    #[test]
    fn rank_one_k3() {
        let k3 = lookup("K3_4").unwrap();
        let LefschetzDecision::RankOne(v) =
            lefschetz_full_decision(&k3.lattice, k3.ample_generator.as_ref()).unwrap()
        else {
            panic!("rank one expected");
        };
        assert_eq!(v.achievable_m, vec![1]);
        assert_eq!(v.class, RankOneClass::K3);
        assert!(v.exceptional);
    }

    #[test]
    fn higher_rank_and_general_type() {
        let f1 = lookup("F1").unwrap();
        assert_eq!(
            lefschetz_full_decision(&f1.lattice, None).unwrap(),
            LefschetzDecision::FullMonodromyPencilExists { rank: 2 }
        );
        let gt = PicardLattice::new(None, vec![vec![1]], vec![2], true).unwrap();
        let LefschetzDecision::RankOne(v) = lefschetz_full_decision(&gt, None).unwrap() else {
            panic!()
        };
        assert!(v.achievable_m.is_empty());
        assert_eq!(v.class, RankOneClass::Neither);
    }

    #[test]
    fn bad_inputs() {
        let nsc = PicardLattice::new(None, vec![vec![1]], vec![-3], false).unwrap();
        assert_eq!(
            lefschetz_full_decision(&nsc, None),
            Err(PicardError::NotSimplyConnected)
        );
        let p2 = lookup("P2").unwrap();
        let two_h = p2.lattice.class(vec![2]).unwrap();
        assert!(matches!(
            lefschetz_full_decision(&p2.lattice, Some(&two_h)),
            Err(PicardError::Inconsistent(_))
        ));
    }
}
