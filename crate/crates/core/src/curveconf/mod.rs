//! Configurations of simple closed curves with ribbon data.
//!
//! A [`CurveSystem`] stores named curves, their transverse intersection
//! points and, for each curve, the cyclic order in which it passes through
//! its points. The regular neighborhood of the union is a ribbon graph whose
//! vertices are the intersection points; its boundary is found by tracing
//! faces.
//!
//! Darts at a point `p` where curve `A` crosses curve `B` with sign
//! `e = <A, B>` are `A+, A-, B+, B-` (leaving along or against the curve).
//! The rotation at `p` is `(A+, B+, A-, B-)` for `e = +1` and
//! `(A+, B-, A-, B+)` for `e = -1`, which does not depend on the order in
//! which the pair was written.

mod format;
mod graph;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use format::parse_config;
pub use graph::IntersectionGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("curve `{0}` declared twice")]
    DuplicateCurve(String),
    #[error("intersection point `{0}` declared twice")]
    DuplicatePoint(String),
    #[error("unknown intersection point `{0}`")]
    UnknownPoint(String),
    #[error("point `{0}` joins a curve to itself")]
    SelfIntersection(String),
    #[error("sign of point `{0}` must be +1 or -1")]
    BadSign(String),
    #[error("cyclic order of `{curve}`: {msg}")]
    BadOrder { curve: String, msg: String },
    #[error("curve `{0}` needs an explicit cyclic order (the configuration is not a tree)")]
    MissingRibbon(String),
    #[error("curves `{a}` and `{b}` meet in {count} points")]
    NotSimple { a: String, b: String, count: usize },
    #[error("configuration has {0} connected components")]
    Disconnected(usize),
    #[error("configuration has no curves")]
    Empty,
    #[error("unsupported configuration type `{0}`")]
    UnsupportedType(String),
    #[error("boundary face of {0} darts has non-integral winding")]
    NonIntegralBoundary(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A transverse intersection point of two distinct curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub id: String,
    pub curves: (usize, usize),
    /// Algebraic intersection sign of the ordered pair.
    pub sign: i8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    E6,
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::E6 => write!(f, "E6"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("e6") {
            return Ok(DynkinType::E6);
        }
        match t.strip_prefix(['A', 'a']).and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => Ok(DynkinType::A(n)),
            _ => Err(CurveError::UnsupportedType(s.to_string())),
        }
    }
}

/// Euler characteristic, boundary count and genus of a regular neighborhood.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodInvariants {
    pub euler: i64,
    pub boundary: u32,
    pub genus: u32,
}

impl NeighborhoodInvariants {
    pub fn from_genus_boundary(genus: u32, boundary: u32) -> Self {
        NeighborhoodInvariants {
            euler: 2 - 2 * genus as i64 - boundary as i64,
            boundary,
            genus,
        }
    }
}

/// One boundary circle of a neighborhood, as a cycle of darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryFace {
    /// Curves whose darts the face runs along, sorted and deduplicated.
    pub curves: Vec<String>,
    /// Number of corners (darts) in the face; 0 for a boundary of an annulus.
    pub corners: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSystem {
    names: Vec<String>,
    points: Vec<Point>,
    /// Per curve, indices into `points` in cyclic order.
    ribbon: Vec<Vec<usize>>,
    ambient: Option<(u32, u32)>,
}

/// Incremental construction of a [`CurveSystem`].
#[derive(Debug, Clone, Default)]
pub struct CurveSystemBuilder {
    names: Vec<String>,
    points: Vec<(String, String, String, i8)>,
    orders: BTreeMap<String, Vec<String>>,
    ambient: Option<(u32, u32)>,
}

impl CurveSystemBuilder {
    pub fn curve(&mut self, name: impl Into<String>) -> &mut Self {
        self.names.push(name.into());
        self
    }

    pub fn point(
        &mut self,
        id: impl Into<String>,
        a: impl Into<String>,
        b: impl Into<String>,
        sign: i8,
    ) -> &mut Self {
        self.points.push((id.into(), a.into(), b.into(), sign));
        self
    }

    pub fn order<S: Into<String>>(
        &mut self,
        curve: impl Into<String>,
        ids: impl IntoIterator<Item = S>,
    ) -> &mut Self {
        self.orders
            .insert(curve.into(), ids.into_iter().map(Into::into).collect());
        self
    }

    pub fn ambient(&mut self, genus: u32, boundary: u32) -> &mut Self {
        self.ambient = Some((genus, boundary));
        self
    }

    /// Validates the data. Curves without an explicit order use the order in
    /// which their points were declared; that is only accepted when it cannot
    /// matter (at most two points, or a tree configuration).
    pub fn build(&self) -> Result<CurveSystem, CurveError> {
        let mut index = BTreeMap::new();
        for (i, n) in self.names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(CurveError::DuplicateCurve(n.clone()));
            }
        }
        let lookup = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| CurveError::UnknownCurve(n.to_string()))
        };
        let mut point_index = BTreeMap::new();
        let mut points = Vec::with_capacity(self.points.len());
        let mut ribbon = vec![Vec::new(); self.names.len()];
        for (id, a, b, sign) in &self.points {
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if ia == ib {
                return Err(CurveError::SelfIntersection(id.clone()));
            }
            if *sign != 1 && *sign != -1 {
                return Err(CurveError::BadSign(id.clone()));
            }
            if point_index.insert(id.clone(), points.len()).is_some() {
                return Err(CurveError::DuplicatePoint(id.clone()));
            }
            ribbon[ia].push(points.len());
            ribbon[ib].push(points.len());
            points.push(Point {
                id: id.clone(),
                curves: (ia, ib),
                sign: *sign,
            });
        }
        for (curve, ids) in &self.orders {
            let c = lookup(curve)?;
            let bad = |msg: &str| CurveError::BadOrder {
                curve: curve.clone(),
                msg: msg.to_string(),
            };
            let mut order = Vec::with_capacity(ids.len());
            for id in ids {
                let p = *point_index
                    .get(id)
                    .ok_or_else(|| CurveError::UnknownPoint(id.clone()))?;
                let (a, b) = points[p].curves;
                if a != c && b != c {
                    return Err(bad(&format!("`{id}` does not lie on this curve")));
                }
                order.push(p);
            }
            let mut sorted = order.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != order.len() {
                return Err(bad("a point is listed twice"));
            }
            if order.len() != ribbon[c].len() {
                return Err(bad(&format!(
                    "lists {} of its {} points",
                    order.len(),
                    ribbon[c].len()
                )));
            }
            ribbon[c] = order;
        }
        let sys = CurveSystem {
            names: self.names.clone(),
            points,
            ribbon,
            ambient: self.ambient,
        };
        let needs_order: Vec<usize> = (0..sys.names.len())
            .filter(|&c| sys.ribbon[c].len() >= 3 && !self.orders.contains_key(&sys.names[c]))
            .collect();
        if let Some(&c) = needs_order.first() {
            let is_tree = sys
                .intersection_graph()
                .map(|g| g.is_forest())
                .unwrap_or(false);
            if !is_tree {
                return Err(CurveError::MissingRibbon(sys.names[c].clone()));
            }
        }
        Ok(sys)
    }
}

impl CurveSystem {
    pub fn builder() -> CurveSystemBuilder {
        CurveSystemBuilder::default()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn ambient(&self) -> Option<(u32, u32)> {
        self.ambient
    }

    pub fn with_ambient(mut self, ambient: Option<(u32, u32)>) -> Self {
        self.ambient = ambient;
        self
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Point ids on `curve` in cyclic order.
    pub fn cyclic_order(&self, curve: &str) -> Option<Vec<&str>> {
        let c = self.index_of(curve)?;
        Some(self.ribbon[c].iter().map(|&p| self.points[p].id.as_str()).collect())
    }

    /// Number of intersection points between two curves, by index.
    pub fn meeting_count(&self, a: usize, b: usize) -> usize {
        self.points
            .iter()
            .filter(|p| p.curves == (a, b) || p.curves == (b, a))
            .count()
    }

    /// Algebraic intersection number `<a, b>`.
    pub fn algebraic_intersection(&self, a: &str, b: &str) -> Result<i64, CurveError> {
        let ia = self
            .index_of(a)
            .ok_or_else(|| CurveError::UnknownCurve(a.to_string()))?;
        let ib = self
            .index_of(b)
            .ok_or_else(|| CurveError::UnknownCurve(b.to_string()))?;
        Ok(self
            .points
            .iter()
            .map(|p| {
                if p.curves == (ia, ib) {
                    p.sign as i64
                } else if p.curves == (ib, ia) {
                    -(p.sign as i64)
                } else {
                    0
                }
            })
            .sum())
    }

    /// Edge iff the pair meets exactly once. Pairs meeting twice or more make
    /// the configuration non-simple.
    pub fn intersection_graph(&self) -> Result<IntersectionGraph, CurveError> {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for p in &self.points {
            let (a, b) = p.curves;
            *counts.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        let mut edges = Vec::new();
        for ((a, b), n) in counts {
            if n >= 2 {
                return Err(CurveError::NotSimple {
                    a: self.names[a].clone(),
                    b: self.names[b].clone(),
                    count: n,
                });
            }
            edges.push((a, b));
        }
        Ok(IntersectionGraph::new(self.names.clone(), edges))
    }

    pub fn is_arboreal(&self) -> Result<bool, CurveError> {
        Ok(self.intersection_graph()?.is_tree())
    }

    #[allow(non_snake_case)]
    pub fn is_E_arboreal(&self) -> Result<bool, CurveError> {
        let g = self.intersection_graph()?;
        Ok(g.is_tree() && g.find_induced_e6().is_some())
    }

    /// Connected components of the union, as sorted lists of curve indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &self.points {
            let (a, b) = (find(&mut parent, p.curves.0), find(&mut parent, p.curves.1));
            parent[a] = b;
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            groups.entry(r).or_default().push(c);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// The sub-configuration on the given curves, keeping their points and orders.
    pub fn restrict(&self, curves: &[usize]) -> CurveSystem {
        let keep: BTreeSet<usize> = curves.iter().copied().collect();
        let mut new_index = BTreeMap::new();
        let mut names = Vec::new();
        for &c in &keep {
            new_index.insert(c, names.len());
            names.push(self.names[c].clone());
        }
        let mut point_map = BTreeMap::new();
        let mut points = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if let (Some(&a), Some(&b)) = (new_index.get(&p.curves.0), new_index.get(&p.curves.1)) {
                point_map.insert(i, points.len());
                points.push(Point {
                    id: p.id.clone(),
                    curves: (a, b),
                    sign: p.sign,
                });
            }
        }
        let ribbon = keep
            .iter()
            .map(|&c| {
                self.ribbon[c]
                    .iter()
                    .filter_map(|p| point_map.get(p).copied())
                    .collect()
            })
            .collect();
        CurveSystem {
            names,
            points,
            ribbon,
            ambient: None,
        }
    }

    /// Darts are numbered `4 * point + slot` with slots `A+, A-, B+, B-`.
    fn trace_faces(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut alpha = vec![0usize; 4 * n];
        for (c, order) in self.ribbon.iter().enumerate() {
            let k = order.len();
            for i in 0..k {
                let (p, q) = (order[i], order[(i + 1) % k]);
                let out = 4 * p + self.slot(p, c, true);
                let inc = 4 * q + self.slot(q, c, false);
                alpha[out] = inc;
                alpha[inc] = out;
            }
        }
        let sigma = |d: usize| {
            let p = d / 4;
            let rot: [usize; 4] = if self.points[p].sign > 0 {
                [0, 2, 1, 3]
            } else {
                [0, 3, 1, 2]
            };
            let pos = rot.iter().position(|&s| s == d % 4).unwrap();
            4 * p + rot[(pos + 1) % 4]
        };
        let mut seen = vec![false; 4 * n];
        let mut faces = Vec::new();
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = sigma(alpha[d]);
            }
            faces.push(face);
        }
        faces
    }

    fn slot(&self, p: usize, curve: usize, outgoing: bool) -> usize {
        let base = if self.points[p].curves.0 == curve { 0 } else { 2 };
        base + if outgoing { 0 } else { 1 }
    }

    fn dart_curve(&self, d: usize) -> usize {
        let p = &self.points[d / 4];
        if d % 4 < 2 {
            p.curves.0
        } else {
            p.curves.1
        }
    }

    /// Boundary circles of the regular neighborhood. An isolated curve
    /// contributes the two boundary circles of its annulus.
    pub fn boundary_faces(&self) -> Vec<BoundaryFace> {
        let mut out = Vec::new();
        for face in self.trace_faces() {
            let curves: BTreeSet<&String> =
                face.iter().map(|&d| &self.names[self.dart_curve(d)]).collect();
            out.push(BoundaryFace {
                curves: curves.into_iter().cloned().collect(),
                corners: face.len(),
            });
        }
        for (c, order) in self.ribbon.iter().enumerate() {
            if order.is_empty() {
                for _ in 0..2 {
                    out.push(BoundaryFace {
                        curves: vec![self.names[c].clone()],
                        corners: 0,
                    });
                }
            }
        }
        out
    }

    /// Invariants of the neighborhood of a connected system.
    pub fn neighborhood_invariants(&self) -> Result<NeighborhoodInvariants, CurveError> {
        if self.names.is_empty() {
            return Err(CurveError::Empty);
        }
        let comps = self.components();
        if comps.len() != 1 {
            return Err(CurveError::Disconnected(comps.len()));
        }
        Ok(self.invariants_unchecked())
    }

    /// Invariants of each connected component, in component order.
    pub fn component_invariants(&self) -> Vec<(Vec<String>, NeighborhoodInvariants)> {
        self.components()
            .into_iter()
            .map(|comp| {
                let sub = self.restrict(&comp);
                let inv = sub.invariants_unchecked();
                (sub.names, inv)
            })
            .collect()
    }

    fn invariants_unchecked(&self) -> NeighborhoodInvariants {
        let euler = -(self.points.len() as i64);
        let boundary = self.boundary_faces().len() as u32;
        let genus = ((2 - euler - boundary as i64) / 2) as u32;
        NeighborhoodInvariants {
            euler,
            boundary,
            genus,
        }
    }

    /// Winding values of the boundary circles for the framing in which every
    /// curve of the system has winding number 0, with the neighborhood to the
    /// left of each circle. A boundary circle turns a quarter at each corner.
    pub fn compatible_boundary_values(&self) -> Result<Vec<(BoundaryFace, i64)>, CurveError> {
        self.boundary_faces()
            .into_iter()
            .map(|f| {
                if f.corners % 4 != 0 {
                    Err(CurveError::NonIntegralBoundary(f.corners))
                } else {
                    let v = -(f.corners as i64) / 4;
                    Ok((f, v))
                }
            })
            .collect()
    }

    /// Whether the neighborhood has the given genus and boundary count.
    pub fn is_spanning(&self, ambient: (u32, u32)) -> bool {
        match self.neighborhood_invariants() {
            Ok(inv) => (inv.genus, inv.boundary) == ambient,
            Err(_) => false,
        }
    }

    /// Plumbing of `n` curves `c1, .., cn` along a path.
    pub fn chain(n: usize) -> Result<CurveSystem, CurveError> {
        if n == 0 {
            return Err(CurveError::UnsupportedType("A0".into()));
        }
        let names: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Ok(Self::plumbing(&names, &edges))
    }

    /// Standard plumbing for a Dynkin diagram. `E6` has the branch at `c3`
    /// of the path `c1 .. c5` and the short arm `c6`.
    pub fn dynkin(t: DynkinType) -> Result<CurveSystem, CurveError> {
        match t {
            DynkinType::A(n) => Self::chain(n),
            DynkinType::E6 => {
                let names: Vec<String> = (1..=6).map(|i| format!("c{i}")).collect();
                Ok(Self::plumbing(
                    &names,
                    &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
                ))
            }
        }
    }

    /// Plumbing along a forest with all signs `+1`; each curve meets its
    /// neighbors in the order the edges are listed.
    pub fn plumbing(names: &[String], edges: &[(usize, usize)]) -> CurveSystem {
        let mut b = CurveSystem::builder();
        for n in names {
            b.curve(n.clone());
        }
        for &(i, j) in edges {
            b.point(format!("{}.{}", names[i], names[j]), names[i].clone(), names[j].clone(), 1);
        }
        b.build().expect("plumbing data is valid by construction")
    }

    /// The thirteen-curve core: the chain `a1 .. a7`, the E6 tree on
    /// `b1 .. b6` (path `b1 .. b5`, `b6` attached to `b3`) and one crossing
    /// of `b6` with `a4`.
    ///
    /// The attachments `b6 - b3` and `b6 - a4` and the cyclic orders at `a4`
    /// and `b3` are fixed data chosen to give `chi = -12`, `b = 2`, `g = 6`.
    pub fn standard_core() -> CurveSystem {
        let mut b = CurveSystem::builder();
        for i in 1..=7 {
            b.curve(format!("a{i}"));
        }
        for i in 1..=6 {
            b.curve(format!("b{i}"));
        }
        for i in 1..7 {
            b.point(format!("a{i}a{}", i + 1), format!("a{i}"), format!("a{}", i + 1), 1);
        }
        for i in 1..5 {
            b.point(format!("b{i}b{}", i + 1), format!("b{i}"), format!("b{}", i + 1), 1);
        }
        b.point("b3b6", "b3", "b6", 1);
        b.point("a4b6", "a4", "b6", 1);
        b.order("a4", ["a3a4", "a4b6", "a4a5"]);
        b.order("b3", ["b2b3", "b3b6", "b3b4"]);
        b.order("b6", ["b3b6", "a4b6"]);
        b.ambient(6, 2);
        b.build().expect("core data is valid by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CurveSystem {
        CurveSystem::chain(2).unwrap()
    }

    #[test]
    fn graph_examples() {
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y");
        let disjoint = b.build().unwrap();
        let g = disjoint.intersection_graph().unwrap();
        assert_eq!((g.vertex_count(), g.edges().len()), (2, 0));
        assert_eq!(a2().intersection_graph().unwrap().edges().len(), 1);
        let core = CurveSystem::standard_core().intersection_graph().unwrap();
        assert_eq!(core.edges().len(), 12);
        assert!(core.is_tree());
    }

    #[test]
    fn two_point_pairs_are_not_simple() {
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y").point("p", "x", "y", 1).point("q", "x", "y", -1);
        let sys = b.build().unwrap();
        assert!(matches!(sys.intersection_graph(), Err(CurveError::NotSimple { count: 2, .. })));
        assert_eq!(sys.algebraic_intersection("x", "y").unwrap(), 0);
        // opposite signs: two overlapping planar circles, a 4-holed sphere
        let inv = sys.neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-2, 4, 0));
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y").point("p", "x", "y", 1).point("q", "x", "y", 1);
        let same = b.build().unwrap();
        assert_eq!(same.algebraic_intersection("y", "x").unwrap(), -2);
        let inv = same.neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-2, 2, 1));
    }

    #[test]
    fn arboreal_predicates() {
        let a7 = CurveSystem::chain(7).unwrap();
        assert!(a7.is_arboreal().unwrap());
        assert!(!a7.is_E_arboreal().unwrap());
        let e6 = CurveSystem::dynkin(DynkinType::E6).unwrap();
        assert!(e6.is_arboreal().unwrap() && e6.is_E_arboreal().unwrap());
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y").curve("z");
        b.point("p", "x", "y", 1).point("q", "y", "z", 1).point("s", "z", "x", 1);
        let tri = b.build().unwrap();
        assert!(!tri.is_arboreal().unwrap());
    }

    #[test]
    fn neighborhood_examples() {
        let mut b = CurveSystem::builder();
        b.curve("x");
        let one = b.build().unwrap().neighborhood_invariants().unwrap();
        assert_eq!((one.euler, one.boundary, one.genus), (0, 2, 0));
        let inv = a2().neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-1, 1, 1));
        let e6 = CurveSystem::dynkin(DynkinType::E6).unwrap();
        let inv = e6.neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-5, 1, 3));
        let inv = CurveSystem::chain(7).unwrap().neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-6, 2, 3));
    }

    #[test]
    fn core_is_spanning() {
        let core = CurveSystem::standard_core();
        let inv = core.neighborhood_invariants().unwrap();
        assert_eq!((inv.euler, inv.boundary, inv.genus), (-12, 2, 6));
        assert!(core.is_spanning((6, 2)));
        assert!(core.is_E_arboreal().unwrap());
        let e6 = CurveSystem::dynkin(DynkinType::E6).unwrap();
        assert!(e6.is_spanning((3, 1)));
        assert!(!a2().is_spanning((1, 2)));
    }

    #[test]
    fn chain_parity() {
        for n in 1..=12 {
            let inv = CurveSystem::chain(n).unwrap().neighborhood_invariants().unwrap();
            assert_eq!(inv.boundary, if n % 2 == 0 { 1 } else { 2 }, "n = {n}");
            assert_eq!(inv.genus as usize, n / 2);
            assert_eq!(inv.euler, -(n as i64 - 1));
        }
        assert_eq!(CurveSystem::chain(2).unwrap(), a2());
    }

    #[test]
    fn compatible_values() {
        let vals = |s: &CurveSystem| -> Vec<i64> {
            let mut v: Vec<i64> = s
                .compatible_boundary_values()
                .unwrap()
                .into_iter()
                .map(|(_, v)| v)
                .collect();
            v.sort();
            v
        };
        assert_eq!(vals(&a2()), vec![-1]);
        assert_eq!(vals(&CurveSystem::chain(7).unwrap()), vec![-3, -3]);
        assert_eq!(vals(&CurveSystem::dynkin(DynkinType::E6).unwrap()), vec![-5]);
        let core = CurveSystem::standard_core();
        let faces = core.compatible_boundary_values().unwrap();
        let with_b: Vec<i64> = faces
            .iter()
            .filter(|(f, _)| f.curves.iter().any(|c| c.starts_with('b')))
            .map(|(_, v)| *v)
            .collect();
        assert_eq!(with_b, vec![-9]);
        assert_eq!(vals(&core), vec![-9, -3]);
    }

    #[test]
    fn disconnected_systems() {
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y").curve("z").point("p", "x", "y", 1);
        let sys = b.build().unwrap();
        assert_eq!(sys.neighborhood_invariants(), Err(CurveError::Disconnected(2)));
        let parts = sys.component_invariants();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1.euler + parts[1].1.euler, -1);
        assert!(!sys.is_spanning((1, 1)));
    }

    #[test]
    fn missing_ribbon_rejected_off_trees() {
        let mut b = CurveSystem::builder();
        b.curve("x").curve("y").curve("z").curve("w");
        b.point("p", "x", "y", 1).point("q", "x", "z", 1).point("s", "x", "w", 1);
        b.point("t", "y", "z", 1);
        assert_eq!(b.build(), Err(CurveError::MissingRibbon("x".into())));
        b.order("x", ["p", "q", "s"]);
        assert!(b.build().is_ok());
        b.order("x", ["p", "q"]);
        assert!(matches!(b.build(), Err(CurveError::BadOrder { .. })));
    }

    #[test]
    fn dynkin_names() {
        assert_eq!("E6".parse::<DynkinType>().unwrap(), DynkinType::E6);
        assert_eq!("A7".parse::<DynkinType>().unwrap(), DynkinType::A(7));
        assert!("D4".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
    }
}
