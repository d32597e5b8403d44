//! Jet-ampleness bookkeeping.
//!
//! A ledger records classes that are *declared* `k`-jet ample. Tensor
//! products add levels, so the ledger can certify new classes, but it never
//! decides non-ampleness: a missing certificate means "not certified".

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{DivisorClass, PicardError, PicardLattice};

/// Cap on the number of ledger entries summed when searching for a class.
pub const DEFAULT_MAX_TERMS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetEntry {
    pub level: u32,
    pub note: String,
}

/// Certified jet levels on one lattice. Levels only ever go up.
#[derive(Debug, Clone)]
pub struct JetLedger {
    lattice: Arc<PicardLattice>,
    entries: BTreeMap<Vec<i64>, JetEntry>,
}

impl JetLedger {
    pub fn new(lattice: Arc<PicardLattice>) -> Self {
        JetLedger {
            lattice,
            entries: BTreeMap::new(),
        }
    }

    pub fn lattice(&self) -> &Arc<PicardLattice> {
        &self.lattice
    }

    fn check(&self, class: &DivisorClass) -> Result<(), PicardError> {
        if Arc::ptr_eq(class.lattice(), &self.lattice) || **class.lattice() == *self.lattice {
            Ok(())
        } else {
            Err(PicardError::LatticeMismatch)
        }
    }

    /// Records `class` at `level`; an existing higher level is kept.
    pub fn declare(
        &mut self,
        class: &DivisorClass,
        level: u32,
        note: impl Into<String>,
    ) -> Result<u32, PicardError> {
        self.check(class)?;
        let note = note.into();
        let entry = self
            .entries
            .entry(class.coords().to_vec())
            .or_insert(JetEntry {
                level,
                note: note.clone(),
            });
        if level > entry.level {
            *entry = JetEntry { level, note };
        }
        Ok(entry.level)
    }

    pub fn level(&self, class: &DivisorClass) -> Option<u32> {
        self.entries.get(class.coords()).map(|e| e.level)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[i64], &JetEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// A class pairing nonnegatively with every ledger entry, used to bound
    /// the search: the sum of all entries certified very ample.
    fn bounding_class(&self) -> Option<Vec<i64>> {
        let mut sum = vec![0; self.lattice.rank()];
        let mut any = false;
        for (coords, e) in &self.entries {
            if e.level >= 1 {
                any = true;
                for (s, c) in sum.iter_mut().zip(coords) {
                    *s += c;
                }
            }
        }
        any.then_some(sum)
    }

    fn degree(&self, h: &[i64], coords: &[i64]) -> i64 {
        self.lattice.pair(h, coords)
    }

    /// Best level reachable for `target` as a sum of at most `max_terms`
    /// ledger entries (the empty sum certifies 0 at level 0).
    pub fn certified_level(&self, target: &DivisorClass, max_terms: usize) -> Option<u32> {
        self.check(target).ok()?;
        let items: Vec<(&Vec<i64>, u32)> =
            self.entries.iter().map(|(c, e)| (c, e.level)).collect();
        let h = self.bounding_class();
        let mut best = None;
        let mut remaining = target.coords().to_vec();
        self.search(&items, 0, &mut remaining, max_terms, 0, h.as_deref(), &mut best);
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        items: &[(&Vec<i64>, u32)],
        idx: usize,
        remaining: &mut Vec<i64>,
        terms_left: usize,
        acc: u32,
        h: Option<&[i64]>,
        best: &mut Option<u32>,
    ) {
        if remaining.iter().all(|&c| c == 0) {
            *best = Some(best.map_or(acc, |b| b.max(acc)));
        }
        if idx == items.len() || terms_left == 0 {
            return;
        }
        if let Some(h) = h {
            // entries pair nonnegatively with h when they are nef; a
            // negative remainder cannot be filled by them
            if self.degree(h, remaining) < 0 && items[idx..].iter().all(|(c, _)| self.degree(h, c) >= 0)
            {
                return;
            }
        }
        let (coords, level) = items[idx];
        let mut used = 0;
        loop {
            self.search(items, idx + 1, remaining, terms_left - used, acc + level * used as u32, h, best);
            if used == terms_left {
                break;
            }
            used += 1;
            for (r, c) in remaining.iter_mut().zip(coords.iter()) {
                *r -= c;
            }
            if let Some(h) = h {
                if self.degree(h, coords) > 0 && self.degree(h, remaining) < 0 {
                    break;
                }
            }
        }
        for (r, c) in remaining.iter_mut().zip(coords.iter()) {
            *r += c * used as i64;
        }
    }

    /// Every class reachable as a nonempty sum of ledger entries whose
    /// degree against the bounding class does not exceed `bound`, sorted by
    /// degree then coordinates.
    fn reachable(&self, bound: i64, max_terms: usize) -> Vec<Vec<i64>> {
        let Some(h) = self.bounding_class() else {
            return Vec::new();
        };
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; self.lattice.rank()]];
        for _ in 0..max_terms {
            let mut next = Vec::new();
            for base in &frontier {
                for coords in self.entries.keys() {
                    let sum: Vec<i64> = base.iter().zip(coords).map(|(a, b)| a + b).collect();
                    if self.degree(&h, &sum) <= bound && seen.insert(sum.clone()) {
                        next.push(sum);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
        out.sort_by_key(|c| (self.degree(&h, c), c.clone()));
        out
    }
}

/// Certifies `a + b` at `jet(a) + jet(b)` and records it.
pub fn jet_compose(
    ledger: &mut JetLedger,
    a: &DivisorClass,
    b: &DivisorClass,
) -> Result<u32, PicardError> {
    let la = ledger
        .level(a)
        .ok_or_else(|| PicardError::Uncertified(a.to_string()))?;
    let lb = ledger
        .level(b)
        .ok_or_else(|| PicardError::Uncertified(b.to_string()))?;
    let sum = a.add(b)?;
    ledger.declare(&sum, la + lb, format!("composed {a} + {b}"))
}

/// A splitting `L = L1 + L2` with `L1` 6-jet ample and `L2` very ample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCertificate {
    pub l1: DivisorClass,
    pub l2: DivisorClass,
    pub jet_l1: u32,
    pub jet_l2: u32,
}

/// Searches splittings `L = L1 + L2` certified by the ledger (with composition
/// closure). Candidates for `L1` are tried in order; an empty list means all
/// ledger-reachable classes, smallest first. `None` means "not certified".
pub fn theorem_hypothesis_check(
    l: &DivisorClass,
    ledger: &JetLedger,
    candidates: &[DivisorClass],
) -> Option<HypothesisCertificate> {
    let owned;
    let candidates = if candidates.is_empty() {
        let h = ledger.bounding_class()?;
        let bound = ledger.degree(&h, l.coords()).max(0);
        owned = ledger
            .reachable(bound, DEFAULT_MAX_TERMS)
            .into_iter()
            .filter_map(|c| ledger.lattice.class(c).ok())
            .collect::<Vec<_>>();
        &owned[..]
    } else {
        candidates
    };
    candidates.iter().find_map(|l1| {
        let l2 = l.sub(l1).ok()?;
        let j1 = ledger.certified_level(l1, DEFAULT_MAX_TERMS)?;
        if j1 < 6 {
            return None;
        }
        let j2 = ledger.certified_level(&l2, DEFAULT_MAX_TERMS)?;
        (j2 >= 1).then(|| HypothesisCertificate {
            l1: l1.clone(),
            l2,
            jet_l1: j1,
            jet_l2: j2,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2_ledger() -> (Arc<PicardLattice>, JetLedger) {
        let x = PicardLattice::new(Some("P2".into()), vec![vec![1]], vec![-3], true).unwrap();
        let mut ledger = JetLedger::new(Arc::clone(&x));
        ledger.declare(&x.class(vec![1]).unwrap(), 1, "O(1)").unwrap();
        (x, ledger)
    }

    #[test]
    fn seven_fold_composition() {
        let (x, mut ledger) = p2_ledger();
        let h = x.class(vec![1]).unwrap();
        let mut acc = h.clone();
        for _ in 0..6 {
            jet_compose(&mut ledger, &acc, &h).unwrap();
            acc = acc.add(&h).unwrap();
        }
        assert_eq!(ledger.level(&x.class(vec![7]).unwrap()), Some(7));
    }

    #[test]
    fn composition_rule_instances() {
        let (x, mut ledger) = p2_ledger();
        let a = x.class(vec![6]).unwrap();
        let b = x.class(vec![1]).unwrap();
        ledger.declare(&a, 6, "declared").unwrap();
        assert_eq!(jet_compose(&mut ledger, &a, &b).unwrap(), 7);
        let c = x.class(vec![2]).unwrap();
        ledger.declare(&c, 3, "declared").unwrap();
        assert_eq!(jet_compose(&mut ledger, &c, &c).unwrap(), 6);
        let missing = x.class(vec![11]).unwrap();
        assert!(matches!(
            jet_compose(&mut ledger, &missing, &b),
            Err(PicardError::Uncertified(_))
        ));
    }

    #[test]
    fn declare_is_monotone() {
        let (x, mut ledger) = p2_ledger();
        let h2 = x.class(vec![2]).unwrap();
        ledger.declare(&h2, 2, "a").unwrap();
        assert_eq!(ledger.declare(&h2, 1, "b").unwrap(), 2);
        assert_eq!(ledger.level(&h2), Some(2));
    }

    #[test]
    fn closure_levels() {
        let (x, ledger) = p2_ledger();
        assert_eq!(ledger.certified_level(&x.class(vec![5]).unwrap(), 24), Some(5));
        assert_eq!(ledger.certified_level(&x.class(vec![-1]).unwrap(), 24), None);
        assert_eq!(ledger.certified_level(&x.class(vec![0]).unwrap(), 24), Some(0));
    }

    #[test]
    fn hypothesis_gate() {
        let (x, ledger) = p2_ledger();
        let cert = theorem_hypothesis_check(&x.class(vec![7]).unwrap(), &ledger, &[]).unwrap();
        assert_eq!(cert.l1.coords(), &[6]);
        assert_eq!(cert.l2.coords(), &[1]);
        assert!(theorem_hypothesis_check(&x.class(vec![5]).unwrap(), &ledger, &[]).is_none());
    }

    #[test]
    fn direct_declared_split() {
        let q = PicardLattice::new(None, vec![vec![0, 1], vec![1, 0]], vec![-2, -2], true).unwrap();
        let mut ledger = JetLedger::new(Arc::clone(&q));
        let l1 = q.class(vec![3, 4]).unwrap();
        let l2 = q.class(vec![1, 1]).unwrap();
        ledger.declare(&l1, 6, "declared").unwrap();
        ledger.declare(&l2, 1, "declared").unwrap();
        let l = l1.add(&l2).unwrap();
        let cert = theorem_hypothesis_check(&l, &ledger, std::slice::from_ref(&l1)).unwrap();
        assert_eq!((cert.jet_l1, cert.jet_l2), (6, 1));
    }
}
