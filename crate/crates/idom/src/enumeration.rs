//! Canonical labeling and exhaustive generation of connected graphs with
//! maximum degree three.
//!
//! The canonical labeler relabels a graph so that isomorphic graphs map to
//! byte-identical encodings. Generation grows graphs one vertex at a time,
//! deduplicating each level by canonical form, so its output is a sorted
//! list of class representatives.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::codec;
use crate::graph::SubcubicGraph;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("canonical labeling supports at most 64 vertices, got {n}")]
    TooLarge { n: usize },
    #[error("no 3-regular graph has an odd number of vertices ({n})")]
    OddOrder { n: usize },
    #[error("no 3-regular graph has fewer than four vertices ({n})")]
    OrderTooSmall { n: usize },
}

/// The graph6 encoding of a graph's canonical relabeling. Two graphs on the
/// same vertex count are isomorphic exactly when their forms are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

/// Which end of each candidate list the generator consumes first. The final
/// graph lists are equal either way; running both orders and comparing is a
/// cheap self-check of that claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugmentationOrder {
    Forward,
    Reverse,
}

/// Canonical form of `g` (at most 64 vertices).
pub fn canonical_form(g: &SubcubicGraph) -> Result<CanonicalForm, EnumerationError> {
    Ok(CanonicalForm(
        codec::to_graph6(&canonical_relabel(g)?).into_bytes(),
    ))
}

/// The canonical representative of `g`'s isomorphism class. Labels do not
/// carry over.
///
/// A connected graph is renamed so its upper-triangle adjacency bit string
/// is the lexicographically smallest achievable. A disconnected graph is
/// laid out component by component, each component canonical, ordered by
/// their encodings; a pile of interchangeable components would otherwise
/// drown the search in symmetry.
pub fn canonical_relabel(g: &SubcubicGraph) -> Result<SubcubicGraph, EnumerationError> {
    let n = g.n();
    if n > 64 {
        return Err(EnumerationError::TooLarge { n });
    }
    if n == 0 {
        return Ok(SubcubicGraph::from_edges(0, &[]).unwrap());
    }
    let components = g.components();
    if components.len() > 1 {
        let mut blocks: Vec<(Vec<u8>, SubcubicGraph)> = components
            .iter()
            .map(|comp| {
                let rep = canonical_connected(&g.induced(comp).0)?;
                Ok((codec::to_graph6(&rep).into_bytes(), rep))
            })
            .collect::<Result<_, EnumerationError>>()?;
        blocks.sort_by(|(a, _), (b, _)| a.cmp(b));
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(g.edge_count());
        let mut offset = 0u32;
        for (_, block) in &blocks {
            edges.extend(block.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += block.n() as u32;
        }
        return Ok(SubcubicGraph::from_edges(n, &edges).unwrap());
    }
    canonical_connected(g)
}

fn canonical_connected(g: &SubcubicGraph) -> Result<SubcubicGraph, EnumerationError> {
    let n = g.n();
    if g.edge_count() == n - 1 {
        // A tree. The search below handles trees, but a deeply nested
        // symmetric one defeats its pruning, while rooted-shape sorting is
        // exact and linear.
        return Ok(canonical_tree(g));
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let mut labeler = Labeler {
        adj: &adj,
        n,
        bit_words: (n * (n - 1) / 2).div_ceil(64).max(1),
        best_bits: None,
        best_order: Vec::new(),
        aut_gens: Vec::new(),
    };
    let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let mut cells = vec![full];
    labeler.refine(&mut cells);
    labeler.descend(&cells);
    let order = labeler.best_order;
    Ok(relabel_by(g, &order))
}

/// Rebuild `g` with the vertex at `order[pos]` renamed to `pos`.
fn relabel_by(g: &SubcubicGraph, order: &[u32]) -> SubcubicGraph {
    let mut new_name = vec![u32::MAX; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        new_name[v as usize] = pos as u32;
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (new_name[u as usize], new_name[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    SubcubicGraph::from_edges(g.n(), &edges).unwrap()
}

/// Canonical relabeling of a tree: root at the center (the smaller-shaped
/// one if the center is an edge), then lay vertices out preorder with
/// siblings in sorted shape order. Isomorphic trees produce identical
/// layouts because every placement decision is made on shapes alone.
fn canonical_tree(g: &SubcubicGraph) -> SubcubicGraph {
    let n = g.n();
    if n == 1 {
        return SubcubicGraph::from_edges(1, &[]).unwrap();
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut peeled = vec![false; n];
    let mut layer: Vec<u32> = g.vertices().filter(|&v| degree[v as usize] <= 1).collect();
    let mut alive = n;
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            peeled[v as usize] = true;
            alive -= 1;
            for &u in g.neighbors(v) {
                if !peeled[u as usize] {
                    degree[u as usize] -= 1;
                    if degree[u as usize] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<u32> = g.vertices().filter(|&v| !peeled[v as usize]).collect();
    let root = if centers.len() == 1 {
        centers[0]
    } else {
        let (a, b) = (centers[0], centers[1]);
        if tree_shape(g, a, u32::MAX) <= tree_shape(g, b, u32::MAX) {
            a
        } else {
            b
        }
    };
    let mut order = Vec::with_capacity(n);
    emit_tree(g, root, u32::MAX, &mut order);
    relabel_by(g, &order)
}

fn tree_shape(g: &SubcubicGraph, v: u32, parent: u32) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| tree_shape(g, u, v))
        .collect();
    kids.sort();
    let mut shape = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
    shape.push(b'(');
    for k in kids {
        shape.extend_from_slice(&k);
    }
    shape.push(b')');
    shape
}

fn emit_tree(g: &SubcubicGraph, v: u32, parent: u32, order: &mut Vec<u32>) {
    order.push(v);
    let mut kids: Vec<(Vec<u8>, u32)> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| (tree_shape(g, u, v), u))
        .collect();
    kids.sort();
    for (_, u) in kids {
        emit_tree(g, u, v, order);
    }
}

/// Individualization-refinement search for the lexicographically least
/// relabeled adjacency string. Cells are vertex bitmasks; the concatenation
/// of cells in order is the labeling being explored, and once every cell is
/// a singleton the labeling is complete.
struct Labeler<'a> {
    adj: &'a [u64],
    n: usize,
    bit_words: usize,
    best_bits: Option<Vec<u64>>,
    best_order: Vec<u32>,
    /// Automorphisms discovered when two labelings tie: whenever one of
    /// them also respects the current partition, branches it maps onto
    /// already-explored ones are duplicates and are skipped.
    aut_gens: Vec<Vec<u32>>,
}

const MAX_AUT_GENS: usize = 128;

impl Labeler<'_> {
    /// Split cells by neighbor counts into other cells until stable. Every
    /// split is ordered by count, so refinement is label-independent.
    fn refine(&self, cells: &mut Vec<u64>) {
        let mut queue: VecDeque<u64> = cells.iter().copied().collect();
        while let Some(splitter) = queue.pop_front() {
            let mut idx = 0;
            while idx < cells.len() {
                let cell = cells[idx];
                if cell.count_ones() > 1 {
                    let mut groups: Vec<(u32, u64)> = Vec::new();
                    let mut rest = cell;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        rest &= rest - 1;
                        let sig = (self.adj[v as usize] & splitter).count_ones();
                        match groups.binary_search_by_key(&sig, |&(s, _)| s) {
                            Ok(pos) => groups[pos].1 |= 1 << v,
                            Err(pos) => groups.insert(pos, (sig, 1 << v)),
                        }
                    }
                    if groups.len() > 1 {
                        cells.splice(idx..=idx, groups.iter().map(|&(_, m)| m));
                        for &(_, m) in &groups {
                            queue.push_back(m);
                        }
                        idx += groups.len();
                        continue;
                    }
                }
                idx += 1;
            }
        }
    }

    fn descend(&mut self, cells: &[u64]) {
        let mut order: Vec<u32> = Vec::with_capacity(self.n);
        for &c in cells {
            if c.count_ones() == 1 {
                order.push(c.trailing_zeros());
            } else {
                break;
            }
        }
        // Bits fixed by the singleton prefix can already disqualify this
        // whole branch against the incumbent.
        let prefix = self.pack(&order);
        let prefix_len = order.len() * order.len().saturating_sub(1) / 2;
        if let Some(best) = &self.best_bits {
            if exceeds_on_prefix(&prefix, best, prefix_len) {
                return;
            }
        }
        if order.len() == self.n {
            match &self.best_bits {
                Some(best) if prefix == *best => {
                    // A tie composes into an automorphism of the graph.
                    if self.aut_gens.len() < MAX_AUT_GENS {
                        let mut sigma = vec![0u32; self.n];
                        for (pos, &v) in self.best_order.iter().enumerate() {
                            sigma[v as usize] = order[pos];
                        }
                        debug_assert!(self.is_automorphism(&sigma));
                        self.aut_gens.push(sigma);
                    }
                }
                Some(best) if prefix < *best => {
                    self.best_bits = Some(prefix);
                    self.best_order = order;
                }
                None => {
                    self.best_bits = Some(prefix);
                    self.best_order = order;
                }
                _ => {}
            }
            return;
        }
        let (idx, &cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("a non-singleton cell exists before the labeling is complete");
        let mut tried = 0u64;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if tried != 0 && self.orbit_of(tried, cells) & 1u64 << v != 0 {
                continue;
            }
            let mut child: Vec<u64> = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..idx]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[idx + 1..]);
            self.refine(&mut child);
            self.descend(&child);
            tried |= 1u64 << v;
        }
    }

    /// Closure of `seed` under the known automorphisms that map every cell
    /// of the current partition onto itself. A vertex in the closure heads
    /// a subtree isomorphic to one already searched.
    fn orbit_of(&self, seed: u64, cells: &[u64]) -> u64 {
        let usable: Vec<&Vec<u32>> = self
            .aut_gens
            .iter()
            .filter(|sigma| cells.iter().all(|&c| stabilizes(sigma, c)))
            .collect();
        let mut closure = seed;
        if usable.is_empty() {
            return closure;
        }
        loop {
            let mut grew = false;
            for sigma in &usable {
                let mut add = 0u64;
                let mut m = closure;
                while m != 0 {
                    let u = m.trailing_zeros();
                    m &= m - 1;
                    add |= 1u64 << sigma[u as usize];
                }
                if add & !closure != 0 {
                    closure |= add;
                    grew = true;
                }
            }
            if !grew {
                return closure;
            }
        }
    }

    fn is_automorphism(&self, sigma: &[u32]) -> bool {
        (0..self.n).all(|v| {
            let mut mapped = 0u64;
            let mut m = self.adj[v];
            while m != 0 {
                let u = m.trailing_zeros();
                m &= m - 1;
                mapped |= 1u64 << sigma[u as usize];
            }
            mapped == self.adj[sigma[v] as usize]
        })
    }

    /// Upper-triangle bits of the relabeled graph restricted to `order`,
    /// column by column, packed so word-wise numeric order is bit-string
    /// order (bit t lives at position 63 - t of word t / 64).
    fn pack(&self, order: &[u32]) -> Vec<u64> {
        let mut words = vec![0u64; self.bit_words];
        let mut t = 0;
        for j in 1..order.len() {
            let row = self.adj[order[j] as usize];
            for &vi in &order[..j] {
                if row & 1 << vi != 0 {
                    words[t / 64] |= 1 << (63 - t % 64);
                }
                t += 1;
            }
        }
        words
    }
}

fn stabilizes(sigma: &[u32], cell: u64) -> bool {
    let mut m = cell;
    while m != 0 {
        let u = m.trailing_zeros();
        m &= m - 1;
        if cell & 1u64 << sigma[u as usize] == 0 {
            return false;
        }
    }
    true
}

fn exceeds_on_prefix(prefix: &[u64], best: &[u64], bits: usize) -> bool {
    let whole = bits / 64;
    for w in 0..whole {
        if prefix[w] != best[w] {
            return prefix[w] > best[w];
        }
    }
    let rem = bits % 64;
    if rem != 0 {
        let mask = !0u64 << (64 - rem);
        return prefix[whole] & mask > best[whole] & mask;
    }
    false
}

/// All connected 3-regular graphs on `n` vertices, one canonically labeled
/// representative per isomorphism class, sorted by canonical form.
pub fn enumerate_cubic(
    n: usize,
    order: AugmentationOrder,
) -> Result<Vec<SubcubicGraph>, EnumerationError> {
    if !n.is_multiple_of(2) {
        return Err(EnumerationError::OddOrder { n });
    }
    if n < 4 {
        return Err(EnumerationError::OrderTooSmall { n });
    }
    let levels = grow_levels(n, order, true)?;
    Ok(levels)
}

/// All connected graphs on `n >= 1` vertices with maximum degree three, one
/// canonically labeled representative per class, sorted by canonical form.
pub fn enumerate_subcubic_connected(
    n: usize,
    order: AugmentationOrder,
) -> Result<Vec<SubcubicGraph>, EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::OrderTooSmall { n });
    }
    grow_levels(n, order, false)
}

/// Levelled growth: every connected graph arises from a connected one-vertex-
/// smaller graph by adding a vertex adjacent to one, two or three existing
/// vertices (delete any non-cut vertex to see this), so growing all such
/// extensions level by level and deduplicating reaches every class.
///
/// On the 3-regular path there is also a degree argument: deleting r
/// vertices from a 3-regular graph removes at most 3r edge endpoints, so
/// any m-vertex ancestor satisfies sum(3 - deg) <= 3(n - m). Extensions
/// violating that can never finish and are dropped early.
fn grow_levels(
    n: usize,
    order: AugmentationOrder,
    cubic: bool,
) -> Result<Vec<SubcubicGraph>, EnumerationError> {
    let single = SubcubicGraph::from_edges(1, &[]).unwrap();
    if n == 1 {
        return Ok(vec![single]);
    }
    let mut level: Vec<SubcubicGraph> = vec![single];
    for m in 2..=n {
        let remaining = (n - m) as i64;
        let extended: HashMap<CanonicalForm, SubcubicGraph> = level
            .par_iter()
            .map(|g| {
                let mut local: HashMap<CanonicalForm, SubcubicGraph> = HashMap::new();
                for target_set in attachment_sets(g, order) {
                    if cubic {
                        let deficiency =
                            3 * (m as i64) - 2 * (g.edge_count() + target_set.len()) as i64;
                        if deficiency > 3 * remaining {
                            continue;
                        }
                    }
                    let mut edges = g.edges();
                    let new = (m - 1) as u32;
                    edges.extend(target_set.iter().map(|&t| (t, new)));
                    let h = SubcubicGraph::from_edges(m, &edges).unwrap();
                    let rep = canonical_relabel(&h)?;
                    let form = CanonicalForm(codec::to_graph6(&rep).into_bytes());
                    local.entry(form).or_insert(rep);
                }
                Ok(local)
            })
            .try_reduce(HashMap::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })?;
        level = {
            let mut pairs: Vec<(CanonicalForm, SubcubicGraph)> = extended.into_iter().collect();
            pairs.sort_unstable_by(|(a, _), (b, _)| a.cmp(b));
            pairs.into_iter().map(|(_, g)| g).collect()
        };
    }
    if cubic {
        level.retain(|g| g.is_cubic());
    }
    Ok(level)
}

/// Nonempty subsets of up to three distinct attachable vertices (degree
/// below three), each sorted ascending.
fn attachment_sets(g: &SubcubicGraph, order: AugmentationOrder) -> Vec<Vec<u32>> {
    let open: Vec<u32> = g.vertices().filter(|&v| g.degree(v) < 3).collect();
    let mut sets = Vec::new();
    for a in 0..open.len() {
        sets.push(vec![open[a]]);
        for b in a + 1..open.len() {
            sets.push(vec![open[a], open[b]]);
            for c in b + 1..open.len() {
                sets.push(vec![open[a], open[b], open[c]]);
            }
        }
    }
    if order == AugmentationOrder::Reverse {
        sets.reverse();
    }
    sets
}
