//! Structural detectors: small-pattern subgraph search, membership in the
//! bad family, troublesome-occurrence finding with exact disjoint packing,
//! and the combined weight ledger built on top of them.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{BadGraphSpec, TroublesomeKind};
use crate::graph::{SubcubicGraph, VertexSet};
use crate::solver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("bad-family membership is defined for connected graphs")]
    NotConnected,
}

/// Positive answer from [`is_bad_graph`]: the subfamily index (the root's
/// degree), the unit count, the root vertex, and a construction spec that
/// rebuilds the graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadClassification {
    pub subfamily: usize,
    pub k: usize,
    pub root: u32,
    pub spec: BadGraphSpec,
}

/// One troublesome configuration found in a host graph: its full vertex
/// set (including the second link), a representative link pair, which type
/// it is, and the unit count of the underlying bad graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TroublesomeOccurrence {
    pub vertices: VertexSet,
    pub link_pair: (u32, u32),
    pub kind: TroublesomeKind,
    pub unit_count: usize,
}

/// Full structural ledger for one graph. Serializes with fixed field
/// names; the certificates are sorted vertex arrays witnessing `i` and
/// `gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub w: u64,
    pub b: usize,
    pub tc: usize,
    pub theta: u64,
    pub omega: u64,
    pub i: usize,
    pub gamma: usize,
    pub i_certificate: Vec<u32>,
    pub gamma_certificate: Vec<u32>,
    pub margin: i64,
}

/// All embeddings of `pattern` into `host` (as a subgraph, not necessarily
/// induced), one representative per image: two embeddings that differ only
/// by an automorphism of the pattern hit the same image and count once.
/// Entry `u` of a returned map is the host vertex carrying pattern vertex
/// `u`.
///
/// Sorted vertex image plus sorted edge image; two embeddings with equal
/// keys are the same subgraph.
type ImageKey = (Vec<u32>, Vec<(u32, u32)>);

/// Panics if the pattern has more than 12 vertices.
pub fn find_subgraph(host: &SubcubicGraph, pattern: &SubcubicGraph) -> Vec<Vec<u32>> {
    search_subgraph(host, pattern, false)
}

/// Early-exit variant of [`find_subgraph`].
pub fn contains_subgraph(host: &SubcubicGraph, pattern: &SubcubicGraph) -> bool {
    !search_subgraph(host, pattern, true).is_empty()
}

fn search_subgraph(
    host: &SubcubicGraph,
    pattern: &SubcubicGraph,
    first_only: bool,
) -> Vec<Vec<u32>> {
    let k = pattern.n();
    assert!(k <= 12, "subgraph search is meant for small patterns");
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > host.n() {
        return Vec::new();
    }
    // Place the most anchored pattern vertex next; break ties towards high
    // degree so sparse tails come last.
    let mut order: Vec<u32> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let next = (0..k as u32)
            .filter(|&u| !placed[u as usize])
            .max_by_key(|&u| {
                let anchors = pattern
                    .neighbors(u)
                    .iter()
                    .filter(|&&p| placed[p as usize])
                    .count();
                (anchors, pattern.degree(u), std::cmp::Reverse(u))
            })
            .expect("unplaced vertex remains");
        placed[next as usize] = true;
        order.push(next);
    }
    let mut images: BTreeSet<ImageKey> = BTreeSet::new();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut assignment = vec![u32::MAX; k];
    let mut used = VertexSet::empty(host.n());
    search_rec(
        host,
        pattern,
        &order,
        0,
        &mut assignment,
        &mut used,
        &mut images,
        &mut reps,
        first_only,
    );
    reps
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    host: &SubcubicGraph,
    pattern: &SubcubicGraph,
    order: &[u32],
    pos: usize,
    assignment: &mut Vec<u32>,
    used: &mut VertexSet,
    images: &mut BTreeSet<ImageKey>,
    reps: &mut Vec<Vec<u32>>,
    first_only: bool,
) {
    if pos == order.len() {
        let mut verts: Vec<u32> = assignment.clone();
        verts.sort_unstable();
        let mut edges: Vec<(u32, u32)> = pattern
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (assignment[a as usize], assignment[b as usize]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if images.insert((verts, edges)) {
            reps.push(assignment.clone());
        }
        return;
    }
    let u = order[pos];
    let anchors: Vec<u32> = pattern
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&p| assignment[p as usize] != u32::MAX)
        .collect();
    let candidates: Vec<u32> = match anchors.first() {
        Some(&a) => host.neighbors(assignment[a as usize]).to_vec(),
        None => host.vertices().collect(),
    };
    for c in candidates {
        if used.contains(c) || host.degree(c) < pattern.degree(u) {
            continue;
        }
        if !anchors
            .iter()
            .all(|&p| host.has_edge(assignment[p as usize], c))
        {
            continue;
        }
        assignment[u as usize] = c;
        used.insert(c);
        search_rec(
            host, pattern, order, pos + 1, assignment, used, images, reps, first_only,
        );
        used.remove(c);
        assignment[u as usize] = u32::MAX;
        if first_only && !reps.is_empty() {
            return;
        }
    }
}

/// Edges whose removal disconnects the graph, normalized low-high.
fn bridges(g: &SubcubicGraph) -> HashSet<(u32, u32)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut out = HashSet::new();
    let mut timer = 0usize;
    // Iterative lowpoint search; the stack holds (vertex, parent, next
    // neighbor slot).
    for start in 0..n as u32 {
        if disc[start as usize] != usize::MAX {
            continue;
        }
        let mut stack: Vec<(u32, Option<u32>, usize)> = vec![(start, None, 0)];
        disc[start as usize] = timer;
        low[start as usize] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut slot)) = stack.last_mut() {
            if *slot < g.degree(v) {
                let w = g.neighbors(v)[*slot];
                *slot += 1;
                if disc[w as usize] == usize::MAX {
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, Some(v), 0));
                } else if Some(w) != parent {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] > disc[p as usize] {
                        out.insert((p.min(v), p.max(v)));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PeelOrder {
    LowestMinIndex,
    // Exercised by the order-invariance test only.
    #[cfg_attr(not(test), allow(dead_code))]
    HighestMinIndex,
}

struct PendantUnit {
    larges: [u32; 2],
    smalls: [u32; 3],
    core: u32,
    target: u32,
}

impl PendantUnit {
    fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.larges.iter().chain(self.smalls.iter()).copied()
    }

    fn min_index(&self) -> u32 {
        self.members().min().expect("unit is nonempty")
    }
}

fn alive_neighborhood(g: &SubcubicGraph, alive: &VertexSet, v: u32) -> VertexSet {
    VertexSet::from_iter(
        g.n(),
        g.neighbors(v).iter().copied().filter(|&w| alive.contains(w)),
    )
}

/// Units that could be detached next: an induced complete bipartite 3+2
/// block joined to the rest of the alive graph by exactly one edge.
fn pendant_units(g: &SubcubicGraph, alive: &VertexSet, root: u32) -> Vec<PendantUnit> {
    let mut units = Vec::new();
    let verts: Vec<u32> = alive.iter().collect();
    for (ai, &a) in verts.iter().enumerate() {
        let na = alive_neighborhood(g, alive, a);
        if na.count() != 3 {
            continue;
        }
        for &b in verts[ai + 1..].iter() {
            let nb = alive_neighborhood(g, alive, b);
            if nb != na {
                continue;
            }
            let smalls_set = na.clone();
            if smalls_set.contains(root) || a == root || b == root {
                continue;
            }
            // The three common neighbors must be pairwise non-adjacent,
            // otherwise the block is not bipartite.
            let smalls: Vec<u32> = smalls_set.iter().collect();
            if smalls.iter().any(|&s| {
                !alive_neighborhood(g, alive, s)
                    .intersection(&smalls_set)
                    .is_empty()
            }) {
                continue;
            }
            let mut members = VertexSet::from_iter(g.n(), [a, b]);
            members.union_with(&smalls_set);
            // Exactly one edge may leave the unit, and only a small can
            // carry it (the block vertices a and b have no alive
            // neighbors outside their common neighborhood).
            let mut exits = Vec::new();
            for &s in &smalls {
                for &t in g.neighbors(s) {
                    if alive.contains(t) && !members.contains(t) {
                        exits.push((s, t));
                    }
                }
            }
            if let [(core, target)] = exits[..] {
                units.push(PendantUnit {
                    larges: [a, b],
                    smalls: [smalls[0], smalls[1], smalls[2]],
                    core,
                    target,
                });
            }
        }
    }
    units
}

fn is_base_block(g: &SubcubicGraph, alive: &VertexSet, root: u32) -> Option<PendantUnit> {
    if alive.count() != 6 || !alive.contains(root) {
        return None;
    }
    if alive_neighborhood(g, alive, root).count() != 1 {
        return None;
    }
    let core = alive_neighborhood(g, alive, root).first().expect("degree 1");
    let mut rest = alive.clone();
    rest.remove(root);
    // The remaining five vertices must form the complete bipartite block,
    // with the root's neighbor on the 3-side.
    let verts: Vec<u32> = rest.iter().collect();
    let degrees: Vec<usize> = verts
        .iter()
        .map(|&v| alive_neighborhood(g, &rest, v).count())
        .collect();
    let larges: Vec<u32> = verts
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d == 3)
        .map(|(&v, _)| v)
        .collect();
    let smalls: Vec<u32> = verts
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d == 2)
        .map(|(&v, _)| v)
        .collect();
    if larges.len() != 2 || smalls.len() != 3 || !smalls.contains(&core) {
        return None;
    }
    let small_set = VertexSet::from_iter(g.n(), smalls.iter().copied());
    for &l in &larges {
        if alive_neighborhood(g, &rest, l) != small_set {
            return None;
        }
    }
    Some(PendantUnit {
        larges: [larges[0], larges[1]],
        smalls: [smalls[0], smalls[1], smalls[2]],
        core,
        target: root,
    })
}

fn classify_connected(g: &SubcubicGraph, order: PeelOrder) -> Option<BadClassification> {
    let n = g.n();
    if n < 6 || n % 5 != 1 {
        return None;
    }
    let k = (n - 1) / 5;
    let bridge_edges = bridges(g);
    // The root is the unique vertex lying on no cycle, equivalently the
    // unique vertex all of whose edges are bridges.
    let mut acyclic = g.vertices().filter(|&v| {
        g.neighbors(v)
            .iter()
            .all(|&w| bridge_edges.contains(&(v.min(w), v.max(w))))
    });
    let root = acyclic.next()?;
    if acyclic.next().is_some() {
        return None;
    }
    let mut alive = VertexSet::full(n);
    let mut peeled: Vec<PendantUnit> = Vec::new();
    while alive.count() > 6 {
        let candidates = pendant_units(g, &alive, root);
        let unit = match order {
            PeelOrder::LowestMinIndex => candidates.into_iter().min_by_key(PendantUnit::min_index),
            PeelOrder::HighestMinIndex => candidates.into_iter().max_by_key(PendantUnit::min_index),
        }?;
        for v in unit.members() {
            alive.remove(v);
        }
        peeled.push(unit);
    }
    let base = is_base_block(g, &alive, root)?;
    // Reverse the peeling into a construction order and renumber.
    let mut construction = vec![base];
    construction.extend(peeled.into_iter().rev());
    let mut index = vec![u32::MAX; n];
    index[root as usize] = 0;
    for (j, unit) in construction.iter().enumerate() {
        let slot = (1 + 5 * j) as u32;
        index[unit.core as usize] = slot;
        let mut others: Vec<u32> = unit
            .smalls
            .iter()
            .copied()
            .filter(|&s| s != unit.core)
            .collect();
        others.sort_unstable();
        let mut larges = unit.larges;
        larges.sort_unstable();
        index[others[0] as usize] = slot + 1;
        index[others[1] as usize] = slot + 2;
        index[larges[0] as usize] = slot + 3;
        index[larges[1] as usize] = slot + 4;
    }
    let attachments = construction[1..]
        .iter()
        .map(|unit| {
            debug_assert_ne!(index[unit.target as usize], u32::MAX);
            index[unit.target as usize]
        })
        .collect();
    Some(BadClassification {
        subfamily: g.degree(root),
        k,
        root,
        spec: BadGraphSpec { k, attachments },
    })
}

/// Decides membership in the bad family. On membership, reports the
/// subfamily (root degree), unit count, root vertex, and a spec that
/// rebuilds the graph up to isomorphism. Units are detached pendant-first,
/// lowest minimum vertex index first; the order does not affect the
/// verdict.
pub fn is_bad_graph(g: &SubcubicGraph) -> Result<Option<BadClassification>, RecognitionError> {
    if !g.is_connected() {
        return Err(RecognitionError::NotConnected);
    }
    Ok(classify_connected(g, PeelOrder::LowestMinIndex))
}

/// Number of components that belong to the bad family.
pub fn count_bad_components(g: &SubcubicGraph) -> usize {
    g.components()
        .iter()
        .filter(|c| {
            let (sub, _) = g.induced(c);
            classify_connected(&sub, PeelOrder::LowestMinIndex).is_some()
        })
        .count()
}

/// Component of `v1` when `v2` is deleted and, optionally, the single edge
/// from `v1` to `skip_edge_to` is cut.
fn side_component(g: &SubcubicGraph, v1: u32, v2: u32, skip_edge_to: Option<u32>) -> VertexSet {
    let mut seen = VertexSet::empty(g.n());
    seen.insert(v1);
    let mut queue = vec![v1];
    while let Some(u) = queue.pop() {
        for &w in g.neighbors(u) {
            if w == v2 || seen.contains(w) {
                continue;
            }
            if u == v1 && Some(w) == skip_edge_to {
                continue;
            }
            if w == v1 && Some(u) == skip_edge_to {
                continue;
            }
            seen.insert(w);
            queue.push(w);
        }
    }
    seen
}

fn try_occurrence(
    g: &SubcubicGraph,
    v1: u32,
    v2: u32,
    stub: Option<u32>,
) -> Option<TroublesomeOccurrence> {
    let bset = side_component(g, v1, v2, stub);
    if let Some(x) = stub {
        if bset.contains(x) {
            return None;
        }
    }
    let size = bset.count();
    if size < 6 || size % 5 != 1 {
        return None;
    }
    // Of the second link's two remaining edges, one stays inside the bad
    // part (on a vertex of degree 2 there) and one leaves.
    let others: Vec<u32> = g
        .neighbors(v2)
        .iter()
        .copied()
        .filter(|&w| w != v1)
        .collect();
    let w2 = match others[..] {
        [p, q] if bset.contains(p) && !bset.contains(q) => p,
        [p, q] if bset.contains(q) && !bset.contains(p) => q,
        _ => return None,
    };
    let w2_inside = g
        .neighbors(w2)
        .iter()
        .filter(|&&t| bset.contains(t))
        .count();
    if w2_inside != 2 {
        return None;
    }
    let (sub, keep) = g.induced(&bset);
    let class = classify_connected(&sub, PeelOrder::LowestMinIndex)?;
    if keep[class.root as usize] != v1 || class.subfamily != 1 {
        return None;
    }
    let mut vertices = bset;
    vertices.insert(v2);
    Some(TroublesomeOccurrence {
        vertices,
        link_pair: (v1, v2),
        kind: if stub.is_some() {
            TroublesomeKind::Type2
        } else {
            TroublesomeKind::Type1
        },
        unit_count: class.k,
    })
}

/// All troublesome configurations in `g`, one occurrence per distinct
/// vertex set. When several link pairs describe the same set, the reported
/// pair is the first in scan order (ascending second link, then its
/// neighbor order).
pub fn find_troublesome(g: &SubcubicGraph) -> Vec<TroublesomeOccurrence> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |occ: Option<TroublesomeOccurrence>| {
        if let Some(occ) = occ {
            if seen.insert(occ.vertices.to_sorted_vec()) {
                out.push(occ);
            }
        }
    };
    for v2 in g.vertices().filter(|&v| g.degree(v) == 3) {
        for &v1 in g.neighbors(v2) {
            match g.degree(v1) {
                2 => push(try_occurrence(g, v1, v2, None)),
                3 => {
                    for &x in g.neighbors(v1) {
                        if x != v2 {
                            push(try_occurrence(g, v1, v2, Some(x)));
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

/// Maximum number of vertex-disjoint troublesome configurations, by exact
/// packing over the found occurrences. Occurrence lists stay tiny at the
/// orders this toolkit targets, so the exponential packing is immaterial.
pub fn tc(g: &SubcubicGraph) -> usize {
    let sets: Vec<VertexSet> = find_troublesome(g)
        .into_iter()
        .map(|o| o.vertices)
        .collect();
    fn pack(sets: &[VertexSet], idx: usize, used: &VertexSet) -> usize {
        if idx == sets.len() {
            return 0;
        }
        let mut best = pack(sets, idx + 1, used);
        if sets[idx].is_disjoint(used) {
            let next = used.union(&sets[idx]);
            best = best.max(1 + pack(sets, idx + 1, &next));
        }
        best
    }
    pack(&sets, 0, &VertexSet::empty(g.n()))
}

/// Structural weight: twice the packing number plus twice the number of
/// bad components.
pub fn theta(g: &SubcubicGraph) -> u64 {
    2 * (tc(g) + count_bad_components(g)) as u64
}

/// Computes the full ledger: degree profile, weight, structural terms, and
/// both domination numbers with certificates.
pub fn weight_report(g: &SubcubicGraph) -> WeightReport {
    let profile = g.degree_profile().as_array();
    let w = g.graph_weight();
    let b = count_bad_components(g);
    let tc = self::tc(g);
    let theta = 2 * (tc + b) as u64;
    let omega = w + theta;
    let ind = solver::independent_domination_number(g);
    let dom = solver::domination_number(g);
    assert!(dom.value <= ind.value);
    WeightReport {
        n: g.n(),
        n0: profile[0],
        n1: profile[1],
        n2: profile[2],
        n3: profile[3],
        w,
        b,
        tc,
        theta,
        omega,
        i: ind.value,
        gamma: dom.value,
        i_certificate: ind.witness.to_sorted_vec(),
        gamma_certificate: dom.witness.to_sorted_vec(),
        margin: omega as i64 - 8 * ind.value as i64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        base_b1, build_bad, build_troublesome, diamond, embed_template, example_graph,
        extremal_family, k23, k33, prism, random_bad_spec, BadGraphSpec, ExampleId, ExtremalId,
        TroublesomeKind,
    };
    use crate::enumeration::canonical_form;
    use crate::oracle;
    use crate::random::random_connected_subcubic;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> SubcubicGraph {
        SubcubicGraph::from_edges(n, &(1..n as u32).map(|v| (v - 1, v)).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn subgraph_search_fixed_counts() {
        assert_eq!(find_subgraph(&k23(), &k23()).len(), 1);
        assert_eq!(find_subgraph(&k33(), &k23()).len(), 6);
        let c4 = SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(find_subgraph(&k23(), &c4).len(), 3);
        assert!(!contains_subgraph(&k23(), &diamond()));
        assert!(contains_subgraph(&k33(), &c4));
        assert!(!contains_subgraph(&path(6), &c4));
    }

    #[test]
    fn subgraph_search_matches_naive_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let patterns = [
            k23(),
            diamond(),
            SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            path(4),
        ];
        for trial in 0..12 {
            let host = random_connected_subcubic(&mut rng, 7 + trial % 4, 0.35);
            for pattern in &patterns {
                assert_eq!(
                    find_subgraph(&host, pattern).len(),
                    oracle::naive_subgraph_copy_count(&host, pattern),
                );
            }
        }
    }

    #[test]
    fn bad_graphs_carry_no_diamond() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for k in 1..=3 {
            let spec = random_bad_spec(&mut rng, k);
            let g = build_bad(&spec).unwrap().graph;
            assert!(!contains_subgraph(&g, &diamond()));
        }
    }

    #[test]
    fn recognizes_built_bad_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for k in 1..=5 {
            for _ in 0..3 {
                let spec = random_bad_spec(&mut rng, k);
                let built = build_bad(&spec).unwrap();
                let class = is_bad_graph(&built.graph).unwrap().expect("member");
                assert_eq!(class.k, k);
                assert_eq!(class.root, built.root);
                assert_eq!(class.subfamily, built.subfamily());
                let rebuilt = build_bad(&class.spec).unwrap();
                assert_eq!(
                    canonical_form(&rebuilt.graph),
                    canonical_form(&built.graph)
                );
            }
        }
    }

    #[test]
    fn recognition_agrees_across_peel_orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for k in 1..=5 {
            let spec = random_bad_spec(&mut rng, k);
            let g = build_bad(&spec).unwrap().graph;
            let lo = classify_connected(&g, PeelOrder::LowestMinIndex).expect("member");
            let hi = classify_connected(&g, PeelOrder::HighestMinIndex).expect("member");
            assert_eq!(lo.k, hi.k);
            assert_eq!(lo.subfamily, hi.subfamily);
            assert_eq!(lo.root, hi.root);
        }
    }

    #[test]
    fn rejects_non_members() {
        assert_eq!(is_bad_graph(&k23()).unwrap(), None);
        assert_eq!(is_bad_graph(&k33()).unwrap(), None);
        assert_eq!(is_bad_graph(&path(6)).unwrap(), None);
        assert_eq!(is_bad_graph(&path(11)).unwrap(), None);
        let c5_pendant =
            SubcubicGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
                .unwrap();
        assert_eq!(is_bad_graph(&c5_pendant).unwrap(), None);
        assert_eq!(is_bad_graph(&example_graph(ExampleId::F2)).unwrap(), None);
        let two = base_b1().graph.disjoint_union(&base_b1().graph);
        assert_eq!(is_bad_graph(&two), Err(RecognitionError::NotConnected));
    }

    #[test]
    fn counts_bad_components() {
        let b1 = base_b1().graph;
        let k4 = SubcubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(count_bad_components(&b1), 1);
        assert_eq!(count_bad_components(&b1.disjoint_union(&k4)), 1);
        assert_eq!(count_bad_components(&b1.disjoint_union(&b1)), 2);
        assert_eq!(count_bad_components(&k33()), 0);
        assert_eq!(count_bad_components(&prism(5)), 0);
    }

    #[test]
    fn finds_occurrences_in_fixed_instances() {
        let fig9a = example_graph(ExampleId::Fig9a);
        let occ = find_troublesome(&fig9a);
        assert_eq!(occ.len(), 2);
        assert!(occ
            .iter()
            .all(|o| o.kind == TroublesomeKind::Type2 && o.unit_count == 1));
        assert_eq!(tc(&fig9a), 2);
        assert_eq!(tc(&example_graph(ExampleId::Fig9b)), 2);
        let f1 = example_graph(ExampleId::F1);
        assert_eq!(find_troublesome(&f1).len(), 2);
        assert_eq!(tc(&f1), 1);
        assert_eq!(tc(&example_graph(ExampleId::F2)), 1);
        assert_eq!(tc(&example_graph(ExampleId::F3)), 1);
        assert_eq!(tc(&example_graph(ExampleId::Fig11)), 2);
    }

    #[test]
    fn cubic_graphs_are_clean() {
        for g in [
            k33(),
            prism(3),
            prism(5),
            extremal_family(ExtremalId::Fig2a, 2).unwrap(),
        ] {
            assert!(find_troublesome(&g).is_empty());
            assert_eq!(theta(&g), 0);
        }
    }

    #[test]
    fn planted_templates_are_recalled() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for trial in 0..20 {
            let k = 1 + trial % 2;
            let spec = loop {
                let s = random_bad_spec(&mut rng, k);
                if !s.attachments.contains(&0) {
                    break s;
                }
            };
            let kind = if trial % 3 == 0 {
                TroublesomeKind::Type1
            } else {
                TroublesomeKind::Type2
            };
            let template = build_troublesome(kind, &spec).unwrap();
            // A ring host leaves every vertex a spare slot.
            let host_n = 6 + trial % 5;
            let host = SubcubicGraph::from_edges(
                host_n,
                &(0..host_n as u32)
                    .map(|v| (v, (v + 1) % host_n as u32))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let targets: Vec<u32> = (0..template.stubs().len() as u32).map(|s| 2 * s).collect();
            let composite = embed_template(&host, &template, &targets).unwrap();
            let offset = host_n as u32;
            let planted = VertexSet::from_iter(
                composite.n(),
                (0..template.graph.n() as u32).map(|v| v + offset),
            );
            let occ = find_troublesome(&composite);
            assert!(
                occ.iter().any(|o| o.vertices == planted),
                "planted occurrence missed on trial {trial}"
            );
            let found = occ.iter().find(|o| o.vertices == planted).unwrap();
            assert_eq!(found.kind, kind);
            assert_eq!(found.unit_count, k);
        }
    }

    #[test]
    fn occurrence_soundness_via_rebuild() {
        // Reported occurrences must themselves verify: stripping the
        // external edges leaves a fragment whose bad part classifies with
        // the advertised unit count and the link pair intact.
        let g = example_graph(ExampleId::Fig11);
        for occ in find_troublesome(&g) {
            let (v1, v2) = occ.link_pair;
            assert!(occ.vertices.contains(v1) && occ.vertices.contains(v2));
            let mut bad_part = occ.vertices.clone();
            bad_part.remove(v2);
            let (sub, keep) = g.induced(&bad_part);
            let class = is_bad_graph(&sub).unwrap().expect("bad part");
            assert_eq!(class.k, occ.unit_count);
            assert_eq!(keep[class.root as usize], v1);
        }
    }

    #[test]
    fn weight_reports_match_fixed_ledgers() {
        let fig9a = weight_report(&example_graph(ExampleId::Fig9a));
        assert_eq!(
            (fig9a.w, fig9a.b, fig9a.tc, fig9a.theta, fig9a.omega),
            (44, 0, 2, 4, 48)
        );
        assert_eq!((fig9a.i, fig9a.margin), (6, 0));
        assert!(fig9a.gamma <= fig9a.i);

        let k3 = weight_report(&build_bad(&BadGraphSpec { k: 3, attachments: vec![2, 7] }).unwrap().graph);
        assert_eq!((k3.w, k3.b, k3.tc, k3.theta, k3.omega), (54, 1, 0, 2, 56));
        assert_eq!((k3.i, k3.margin), (7, 0));

        let p3 = weight_report(&prism(3));
        assert_eq!((p3.w, p3.theta, p3.i, p3.margin), (18, 0, 2, 2));

        let k33r = weight_report(&k33());
        assert_eq!(k33r.margin, -6);
        let p5 = weight_report(&prism(5));
        assert_eq!(p5.margin, -2);
    }

    #[test]
    fn weight_report_serializes_with_fixed_keys() {
        let report = weight_report(&k23());
        let value: serde_json::Value = serde_json::to_value(&report).unwrap();
        let obj = value.as_object().unwrap();
        for key in [
            "n",
            "n0",
            "n1",
            "n2",
            "n3",
            "w",
            "b",
            "tc",
            "theta",
            "omega",
            "i",
            "gamma",
            "i_certificate",
            "gamma_certificate",
            "margin",
        ] {
            assert!(obj.contains_key(key), "missing key {key}");
        }
        assert_eq!(value["n"], 5);
        assert_eq!(value["w"], 18);
        assert_eq!(value["margin"], 2);
        let parsed: WeightReport = serde_json::from_value(value).unwrap();
        assert_eq!(parsed, report);
    }
}
