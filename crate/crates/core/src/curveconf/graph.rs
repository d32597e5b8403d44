//! Intersection graphs and Dynkin recognition.

use std::collections::BTreeSet;

use super::DynkinType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<BTreeSet<usize>>,
}

impl IntersectionGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![BTreeSet::new(); vertices.len()];
        for &(a, b) in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        IntersectionGraph {
            vertices,
            edges,
            adj,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_within(&(0..self.vertex_count()).collect::<Vec<_>>())
    }

    /// Connectivity of the subgraph induced on `set`.
    fn connected_within(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return true;
        };
        let inside: BTreeSet<usize> = set.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    pub fn is_forest(&self) -> bool {
        let comps = self.component_count();
        self.edges.len() + comps == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.edges.len() + 1 == self.vertex_count()
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    fn induced_edge_count(&self, set: &[usize]) -> usize {
        set.iter()
            .map(|&v| set.iter().filter(|&&w| w > v && self.adj[v].contains(&w)).count())
            .sum()
    }

    /// Whether the induced subgraph on `set` is the E6 diagram: a tree with a
    /// single branch vertex whose arms have lengths 1, 2, 2.
    fn induces_e6(&self, set: &[usize]) -> bool {
        if set.len() != 6 || self.induced_edge_count(set) != 5 || !self.connected_within(set) {
            return false;
        }
        let inside: BTreeSet<usize> = set.iter().copied().collect();
        let deg = |v: usize| self.adj[v].intersection(&inside).count();
        let branch: Vec<usize> = set.iter().copied().filter(|&v| deg(v) == 3).collect();
        if branch.len() != 1 || set.iter().any(|&v| deg(v) > 3) {
            return false;
        }
        let center = branch[0];
        let mut arms: Vec<usize> = self.adj[center]
            .intersection(&inside)
            .map(|&start| {
                let (mut prev, mut cur, mut len) = (center, start, 1);
                loop {
                    let next: Vec<usize> = self.adj[cur]
                        .intersection(&inside)
                        .copied()
                        .filter(|&w| w != prev)
                        .collect();
                    match next.as_slice() {
                        [w] => {
                            prev = cur;
                            cur = *w;
                            len += 1;
                        }
                        _ => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        arms == [1, 2, 2]
    }

    /// Exhaustive search for six vertices inducing E6; returns the first
    /// such set in lexicographic order.
    pub fn find_induced_e6(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n < 6 {
            return None;
        }
        let mut chosen = Vec::with_capacity(6);
        self.extend_e6(0, &mut chosen)
    }

    fn extend_e6(&self, from: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        if chosen.len() == 6 {
            return self.induces_e6(chosen).then(|| chosen.clone());
        }
        // an induced E6 has at most 5 edges among any subset
        if self.induced_edge_count(chosen) + 1 > chosen.len().max(1) {
            return None;
        }
        for v in from..self.vertex_count() {
            if self.vertex_count() - v < 6 - chosen.len() {
                break;
            }
            chosen.push(v);
            if let Some(found) = self.extend_e6(v + 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    /// The Dynkin type of the whole graph, if it is `A_n` or `E6`.
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        let n = self.vertex_count();
        if !self.is_tree() {
            return None;
        }
        if (0..n).all(|v| self.degree(v) <= 2) {
            return Some(DynkinType::A(n));
        }
        let all: Vec<usize> = (0..n).collect();
        (n == 6 && self.induces_e6(&all)).then_some(DynkinType::E6)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> IntersectionGraph {
        IntersectionGraph::new((0..n).map(|i| format!("v{i}")).collect(), edges.to_vec())
    }

    #[test]
    fn e6_and_neighbors() {
        let e6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]);
        assert_eq!(e6.find_induced_e6(), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(e6.dynkin_type(), Some(DynkinType::E6));
        let d6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]);
        assert_eq!(d6.find_induced_e6(), None);
        assert_eq!(d6.dynkin_type(), None);
        let a6 = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(a6.dynkin_type(), Some(DynkinType::A(6)));
        assert_eq!(a6.find_induced_e6(), None);
    }

    #[test]
    fn e6_inside_larger_graphs() {
        // E7 contains E6 as a full subgraph
        let e7 = graph(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        assert!(e7.find_induced_e6().is_some());
        // closing a cycle through the arms breaks inducedness for that set only
        let cyc = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (0, 4)]);
        assert_eq!(cyc.find_induced_e6(), None);
    }

    #[test]
    fn forests_and_trees() {
        let f = graph(4, &[(0, 1), (2, 3)]);
        assert!(f.is_forest() && !f.is_tree());
        let t = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!t.is_forest() && !t.is_tree());
        assert!(!graph(0, &[]).is_tree());
    }
}
