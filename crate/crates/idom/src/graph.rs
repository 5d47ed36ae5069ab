//! Graphs of maximum degree three and the degree-weight calculus built on them.
//!
//! Every vertex carries a weight determined by its degree (8, 5, 4, 3 for
//! degrees 0, 1, 2, 3), so deleting vertices raises the weight of the
//! survivors whose degree drops. `removal_cost` measures exactly that rise.

use arrayvec::ArrayVec;
use smallvec::{smallvec, SmallVec};
use std::fmt;
use thiserror::Error;

/// Maximum vertex degree accepted by [`SubcubicGraph`].
pub const MAX_DEGREE: usize = 3;

/// Vertex weight by degree: isolated vertices weigh 8, leaves 5, degree-two
/// vertices 4, and degree-three vertices 3.
pub const DEGREE_WEIGHT: [u64; 4] = [8, 5, 4, 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: u32 },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("vertex {v} would exceed degree three")]
    DegreeExceedsThree { v: u32 },
    #[error("vertex set covers the whole graph")]
    XIsFullVertexSet,
}

/// A set of vertices of a fixed universe `0..n`, stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: u32,
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        let words = smallvec![0u64; n.div_ceil(64).max(1)];
        VertexSet { n: n as u32, words }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = !0u64;
        }
        s.trim();
        s
    }

    pub fn singleton(n: usize, v: u32) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = u32>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the universe this set lives in (not the member count).
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    fn trim(&mut self) {
        let bits = self.n as usize % 64;
        if bits != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << bits) - 1;
        }
        if self.n == 0 {
            self.words[0] = 0;
        }
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.words[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: u32) {
        debug_assert!(v < self.n);
        self.words[(v / 64) as usize] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: u32) -> bool {
        if v >= self.n {
            return false;
        }
        self.words[(v / 64) as usize] >> (v % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi as u32 * 64;
            std::iter::successors(Some(w), |&w| (w != 0).then(|| w & (w - 1)))
                .take_while(|&w| w != 0)
                .map(move |w| base + w.trailing_zeros())
        })
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn to_sorted_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet::full(self.n as usize);
        s.subtract(self);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Vertex counts by degree. `n0` counts isolated vertices, `n3` cubic ones.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DegreeProfile {
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl DegreeProfile {
    pub fn total(&self) -> usize {
        self.n0 + self.n1 + self.n2 + self.n3
    }

    pub fn weight(&self) -> u64 {
        DEGREE_WEIGHT[0] * self.n0 as u64
            + DEGREE_WEIGHT[1] * self.n1 as u64
            + DEGREE_WEIGHT[2] * self.n2 as u64
            + DEGREE_WEIGHT[3] * self.n3 as u64
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.n0, self.n1, self.n2, self.n3]
    }
}

/// Length of a shortest cycle, or `Acyclic` when the graph is a forest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Girth {
    Acyclic,
    Finite(usize),
}

/// An immutable simple graph with maximum degree three.
///
/// Adjacency lists are kept sorted; vertices may carry string labels so
/// builders can tag structural roles. Equality is labeled-graph equality:
/// same order, same edges, same labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubcubicGraph {
    adj: Vec<ArrayVec<u32, MAX_DEGREE>>,
    labels: Option<Vec<String>>,
}

impl SubcubicGraph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut adj: Vec<ArrayVec<u32, MAX_DEGREE>> = vec![ArrayVec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            if adj[u as usize].contains(&v) {
                let (u, v) = (u.min(v), u.max(v));
                return Err(GraphError::DuplicateEdge { u, v });
            }
            if adj[u as usize].len() == MAX_DEGREE {
                return Err(GraphError::DegreeExceedsThree { v: u });
            }
            if adj[v as usize].len() == MAX_DEGREE {
                return Err(GraphError::DegreeExceedsThree { v });
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SubcubicGraph { adj, labels: None })
    }

    /// Attaches one label per vertex. Panics if the count does not match.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[v as usize].as_str())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n() as u32
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighborhood(&self, v: u32) -> VertexSet {
        VertexSet::from_iter(self.n(), self.neighbors(v).iter().copied())
    }

    pub fn closed_neighborhood(&self, v: u32) -> VertexSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts = [0usize; 4];
        for v in self.vertices() {
            counts[self.degree(v)] += 1;
        }
        DegreeProfile {
            n0: counts[0],
            n1: counts[1],
            n2: counts[2],
            n3: counts[3],
        }
    }

    pub fn vertex_weight(&self, v: u32) -> u64 {
        DEGREE_WEIGHT[self.degree(v)]
    }

    /// Total weight of the graph: the degree-profile weighted sum.
    pub fn graph_weight(&self) -> u64 {
        self.vertices().map(|v| self.vertex_weight(v)).sum()
    }

    /// Sum of the weights of the vertices in `x`, taken in this graph.
    pub fn set_weight(&self, x: &VertexSet) -> u64 {
        x.iter().map(|v| self.vertex_weight(v)).sum()
    }

    /// Deletes the vertices in `x`. Returns the reduced graph together with
    /// the relabeling map: entry `i` is the old index of new vertex `i`.
    pub fn delete_vertices(&self, x: &VertexSet) -> (SubcubicGraph, Vec<u32>) {
        debug_assert_eq!(x.universe(), self.n());
        let keep: Vec<u32> = self.vertices().filter(|&v| !x.contains(v)).collect();
        let mut new_index = vec![u32::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v as usize] = i as u32;
        }
        let mut adj: Vec<ArrayVec<u32, MAX_DEGREE>> = vec![ArrayVec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                if new_index[w as usize] != u32::MAX {
                    adj[i].push(new_index[w as usize]);
                }
            }
            adj[i].sort_unstable();
        }
        let labels = self
            .labels
            .as_ref()
            .map(|ls| keep.iter().map(|&v| ls[v as usize].clone()).collect());
        (SubcubicGraph { adj, labels }, keep)
    }

    /// The subgraph induced on `keep`, with the same relabeling map.
    pub fn induced(&self, keep: &VertexSet) -> (SubcubicGraph, Vec<u32>) {
        self.delete_vertices(&keep.complement())
    }

    /// Number of edges with one endpoint in `x` and the other in `y`; every
    /// qualifying edge is counted once, even when the sets overlap.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        let mut count = 0;
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v
                    && ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
                {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of edges leaving `x`, which must be a proper subset of the
    /// vertices.
    pub fn exit_edge_count(&self, x: &VertexSet) -> Result<usize, GraphError> {
        if x.count() == self.n() {
            return Err(GraphError::XIsFullVertexSet);
        }
        Ok(self.edges_between(x, &x.complement()))
    }

    /// Total weight increase suffered by the surviving vertices when `x` is
    /// deleted: the sum over `v` outside `x` of the weight of `v` after the
    /// deletion minus its weight before.
    pub fn removal_cost(&self, x: &VertexSet) -> Result<u64, GraphError> {
        if x.count() == self.n() {
            return Err(GraphError::XIsFullVertexSet);
        }
        let mut cost = 0;
        for v in self.vertices() {
            if x.contains(v) {
                continue;
            }
            let lost = self.neighbors(v).iter().filter(|&&w| x.contains(w)).count();
            let reduced = self.degree(v) - lost;
            cost += DEGREE_WEIGHT[reduced] - DEGREE_WEIGHT[self.degree(v)];
        }
        Ok(cost)
    }

    /// Exact girth by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in self.vertices() {
            dist.fill(u32::MAX);
            parent.fill(u32::MAX);
            queue.clear();
            dist[root as usize] = 0;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in self.neighbors(u) {
                    if dist[v as usize] == u32::MAX {
                        dist[v as usize] = dist[u as usize] + 1;
                        parent[v as usize] = u;
                        queue.push(v);
                    }
                }
            }
            for (u, v) in self.edges() {
                if dist[u as usize] == u32::MAX || dist[v as usize] == u32::MAX {
                    continue;
                }
                if parent[u as usize] == v || parent[v as usize] == u {
                    continue;
                }
                let len = dist[u as usize] as usize + dist[v as usize] as usize + 1;
                best = best.min(len);
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if !comp.contains(v) {
                        comp.insert(v);
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    /// Labels survive only when both operands carry them.
    pub fn disjoint_union(&self, other: &SubcubicGraph) -> SubcubicGraph {
        let offset = self.n() as u32;
        let mut edges = self.edges();
        edges.extend(other.edges().iter().map(|&(a, b)| (a + offset, b + offset)));
        let g = SubcubicGraph::from_edges(self.n() + other.n(), &edges)
            .expect("operands are already subcubic");
        match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => g.with_labels(a.iter().chain(b.iter()).cloned().collect()),
            _ => g,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> SubcubicGraph {
        SubcubicGraph::from_edges(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            SubcubicGraph::from_edges(2, &[(0, 0)]),
            Err(GraphError::LoopEdge { v: 0 })
        );
        assert_eq!(
            SubcubicGraph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            SubcubicGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            Err(GraphError::DegreeExceedsThree { v: 0 })
        );
        assert_eq!(
            SubcubicGraph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        );
    }

    #[test]
    fn profile_and_weight() {
        let g = k23();
        let p = g.degree_profile();
        assert_eq!(p.as_array(), [0, 0, 3, 2]);
        assert_eq!(g.graph_weight(), 18);
        assert_eq!(p.weight(), 18);

        let lone = SubcubicGraph::from_edges(1, &[]).unwrap();
        assert_eq!(lone.graph_weight(), 8);
        let pair = SubcubicGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(pair.graph_weight(), 10);
    }

    #[test]
    fn set_weight_sums_member_weights() {
        let g = k23();
        assert_eq!(g.set_weight(&VertexSet::empty(5)), 0);
        assert_eq!(g.set_weight(&VertexSet::full(5)), 18);
        assert_eq!(g.set_weight(&VertexSet::from_iter(5, [3, 4])), 6);
    }

    #[test]
    fn delete_vertices_relabels() {
        let g = k23();
        let (h, map) = g.delete_vertices(&VertexSet::singleton(5, 4));
        assert_eq!(h.n(), 4);
        assert_eq!(map, vec![0, 1, 2, 3]);
        // One hub of degree three, three leaves: a claw.
        assert_eq!(h.degree_profile().as_array(), [0, 3, 0, 1]);

        let (same, map) = g.delete_vertices(&VertexSet::empty(5));
        assert_eq!(same.edges(), g.edges());
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn edges_between_counts_once() {
        let g = k23();
        let all = VertexSet::full(5);
        assert_eq!(g.edges_between(&all, &all), 6);
        let small = VertexSet::from_iter(5, [0, 1, 2]);
        let large = VertexSet::from_iter(5, [3, 4]);
        assert_eq!(g.edges_between(&small, &large), 6);
        assert_eq!(g.edges_between(&small, &small), 0);
    }

    #[test]
    fn exit_edges_and_removal_cost() {
        let pair = SubcubicGraph::from_edges(2, &[(0, 1)]).unwrap();
        let x = VertexSet::singleton(2, 0);
        assert_eq!(pair.exit_edge_count(&x), Ok(1));
        // The survivor becomes isolated: weight rises from 5 to 8.
        assert_eq!(pair.removal_cost(&x), Ok(3));
        assert_eq!(
            pair.exit_edge_count(&VertexSet::full(2)),
            Err(GraphError::XIsFullVertexSet)
        );
        assert_eq!(
            pair.removal_cost(&VertexSet::full(2)),
            Err(GraphError::XIsFullVertexSet)
        );

        // Deleting a whole component costs nothing and has no exit edges.
        let two = SubcubicGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let comp = VertexSet::from_iter(4, [0, 1]);
        assert_eq!(two.exit_edge_count(&comp), Ok(0));
        assert_eq!(two.removal_cost(&comp), Ok(0));
    }

    #[test]
    fn girth_cases() {
        assert_eq!(k23().girth(), Girth::Finite(4));
        let path = SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), Girth::Acyclic);
        let triangle = SubcubicGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(triangle.girth(), Girth::Finite(3));
        let c5 = SubcubicGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.girth(), Girth::Finite(5));
    }

    #[test]
    fn components_ordered_by_min_vertex() {
        let g = SubcubicGraph::from_edges(6, &[(4, 5), (1, 2)]).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 4);
        assert_eq!(comps[0].to_sorted_vec(), vec![0]);
        assert_eq!(comps[1].to_sorted_vec(), vec![1, 2]);
        assert_eq!(comps[2].to_sorted_vec(), vec![3]);
        assert_eq!(comps[3].to_sorted_vec(), vec![4, 5]);
        assert!(!g.is_connected());
        assert!(k23().is_connected());
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(69);
        s.insert(33);
        assert_eq!(s.count(), 3);
        assert_eq!(s.to_sorted_vec(), vec![0, 33, 69]);
        assert!(s.contains(69));
        s.remove(33);
        assert!(!s.contains(33));
        let c = s.complement();
        assert_eq!(c.count(), 68);
        assert!(s.is_disjoint(&c));
        assert!(s.is_subset_of(&VertexSet::full(70)));
        assert_eq!(VertexSet::full(70).count(), 70);
    }
}
