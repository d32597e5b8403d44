//! Built-in surfaces.
//!
//! Every entry carries a list of curves of known genus. Looking an entry up
//! re-derives those genera from the stored canonical vector by adjunction, so
//! a wrong canonical vector cannot leave the catalog.

use std::sync::Arc;

use super::{genus_of_section, DivisorClass, JetLedger, PicardError, PicardLattice};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub lattice: Arc<PicardLattice>,
    pub ledger: JetLedger,
    /// `(coords, genus, description)` of curves used to validate the canonical class.
    pub known_genera: Vec<(Vec<i64>, i64, String)>,
    /// Ample generator for rank-one lattices.
    pub ample_generator: Option<DivisorClass>,
    pub description: String,
}

/// Names of the representative catalog members. `F<n>`, `Bl<k>P2` and
/// `K3_<2n>` are parametric and accept other values too.
pub fn standard_names() -> Vec<String> {
    let mut names = vec!["P2".to_string(), "P1xP1".to_string()];
    names.extend((0..=3).map(|n| format!("F{n}")));
    names.extend((1..=8).map(|k| format!("Bl{k}P2")));
    names.extend([2, 4, 6].iter().map(|d| format!("K3_{d}")));
    names
}

pub fn lookup(name: &str) -> Result<CatalogEntry, PicardError> {
    let unknown = || PicardError::UnknownSurface(name.to_string());
    let entry = if name == "P2" {
        blowup(0)?
    } else if name == "P1xP1" {
        quadric()?
    } else if let Some(n) = name.strip_prefix('F') {
        hirzebruch(n.parse().map_err(|_| unknown())?)?
    } else if let Some(k) = name.strip_prefix("Bl").and_then(|s| s.strip_suffix("P2")) {
        let k: usize = k.parse().map_err(|_| unknown())?;
        if !(1..=8).contains(&k) {
            return Err(unknown());
        }
        blowup(k)?
    } else if let Some(d) = name.strip_prefix("K3_") {
        let d: i64 = d.parse().map_err(|_| unknown())?;
        if d <= 0 || d % 2 != 0 {
            return Err(unknown());
        }
        k3(d / 2)?
    } else {
        return Err(unknown());
    };
    validate(&entry)?;
    Ok(entry)
}

fn validate(entry: &CatalogEntry) -> Result<(), PicardError> {
    for (coords, expected, what) in &entry.known_genera {
        let got = genus_of_section(&entry.lattice.class(coords.clone())?)?;
        if got != *expected {
            return Err(PicardError::CanonicalCheck {
                curve: what.clone(),
                got,
                expected: *expected,
            });
        }
    }
    Ok(())
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// `P2` blown up at `k` general points; basis `H, E_1, .., E_k`.
fn blowup(k: usize) -> Result<CatalogEntry, PicardError> {
    let rank = k + 1;
    let mut gram = vec![vec![0; rank]; rank];
    gram[0][0] = 1;
    for (i, row) in gram.iter_mut().enumerate().skip(1) {
        row[i] = -1;
    }
    let mut canonical = vec![1; rank];
    canonical[0] = -3;
    let name = if k == 0 { "P2".to_string() } else { format!("Bl{k}P2") };
    let lattice = PicardLattice::new(Some(name.clone()), gram, canonical.clone(), true)?;

    let h = unit(rank, 0);
    let mut known = vec![
        (h.clone(), 0, "line".to_string()),
        (h.iter().map(|c| 2 * c).collect(), 0, "conic".to_string()),
        (h.iter().map(|c| 3 * c).collect(), 1, "plane cubic".to_string()),
    ];
    for i in 1..rank {
        known.push((unit(rank, i), 0, format!("exceptional curve E{i}")));
        let mut l = h.clone();
        l[i] = -1;
        known.push((l, 0, format!("strict transform of a line through p{i}")));
    }

    let mut ledger = JetLedger::new(Arc::clone(&lattice));
    let mut ample_generator = None;
    if k == 0 {
        let hc = lattice.class(h)?;
        ledger.declare(&hc, 1, "O(1) is very ample")?;
        ample_generator = Some(hc);
    } else {
        ledger.declare(&lattice.class(h.clone())?, 0, "pullback of O(1), globally generated")?;
        for i in 1..rank {
            let mut l = h.clone();
            l[i] = -1;
            ledger.declare(&lattice.class(l)?, 0, format!("conic pencil H - E{i}"))?;
        }
        // -K very ample in degree >= 3, -2K in degree 2, -3K in degree 1
        let mult = match k {
            0..=6 => 1,
            7 => 2,
            _ => 3,
        };
        let anti: Vec<i64> = canonical.iter().map(|c| -mult * c).collect();
        ledger.declare(
            &lattice.class(anti)?,
            1,
            format!("-{mult}K very ample on a degree {} del Pezzo", 9 - k),
        )?;
    }
    Ok(CatalogEntry {
        description: if k == 0 {
            "projective plane".into()
        } else {
            format!("del Pezzo surface of degree {}", 9 - k)
        },
        lattice,
        ledger,
        known_genera: known,
        ample_generator,
    })
}

fn quadric() -> Result<CatalogEntry, PicardError> {
    let lattice = PicardLattice::new(
        Some("P1xP1".into()),
        vec![vec![0, 1], vec![1, 0]],
        vec![-2, -2],
        true,
    )?;
    let mut ledger = JetLedger::new(Arc::clone(&lattice));
    ledger.declare(&lattice.class(vec![1, 1])?, 1, "Segre embedding")?;
    ledger.declare(&lattice.class(vec![1, 0])?, 0, "ruling, globally generated")?;
    ledger.declare(&lattice.class(vec![0, 1])?, 0, "ruling, globally generated")?;
    Ok(CatalogEntry {
        description: "smooth quadric surface".into(),
        lattice,
        ledger,
        known_genera: vec![
            (vec![1, 0], 0, "ruling".into()),
            (vec![0, 1], 0, "ruling".into()),
            (vec![1, 1], 0, "plane section".into()),
            (vec![2, 2], 1, "anticanonical curve".into()),
        ],
        ample_generator: None,
    })
}

/// Hirzebruch surface `F_n`; basis `F` (fiber), `E` (section with `E^2 = -n`).
fn hirzebruch(n: i64) -> Result<CatalogEntry, PicardError> {
    if !(0..=64).contains(&n) {
        return Err(PicardError::UnknownSurface(format!("F{n}")));
    }
    let lattice = PicardLattice::new(
        Some(format!("F{n}")),
        vec![vec![0, 1], vec![1, -n]],
        vec![-(n + 2), -2],
        true,
    )?;
    let mut ledger = JetLedger::new(Arc::clone(&lattice));
    ledger.declare(&lattice.class(vec![n + 1, 1])?, 1, "E + (n+1)F very ample")?;
    ledger.declare(&lattice.class(vec![1, 0])?, 0, "fiber class, globally generated")?;
    Ok(CatalogEntry {
        description: format!("Hirzebruch surface F_{n}"),
        lattice,
        ledger,
        known_genera: vec![
            (vec![1, 0], 0, "fiber".into()),
            (vec![0, 1], 0, "negative section".into()),
            (vec![n, 1], 0, "positive section".into()),
        ],
        ample_generator: None,
    })
}

/// K3 surface of Picard rank one with `L^2 = 2n`.
fn k3(n: i64) -> Result<CatalogEntry, PicardError> {
    let lattice = PicardLattice::new(Some(format!("K3_{}", 2 * n)), vec![vec![2 * n]], vec![0], true)?;
    let mut ledger = JetLedger::new(Arc::clone(&lattice));
    let l = lattice.class(vec![1])?;
    if n >= 2 {
        ledger.declare(&l, 1, "general polarized K3 of degree >= 4")?;
    } else {
        ledger.declare(&lattice.class(vec![3])?, 1, "3L very ample on a double plane")?;
    }
    Ok(CatalogEntry {
        description: format!("K3 surface of Picard rank 1, L^2 = {}", 2 * n),
        lattice,
        ledger,
        known_genera: vec![(vec![1], n + 1, "hyperplane section".into())],
        ample_generator: Some(l),
    })
}
