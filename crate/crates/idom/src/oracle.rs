//! Brute-force reference implementations.
//!
//! Everything here trades speed for obviousness: exhaustive subset scans,
//! raw permutation minima, mask enumeration. The fast solver, the canonical
//! labeler and the enumeration pipeline are all tested against these on
//! small inputs, so none of the clever code is trusted on its own word.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{Girth, SubcubicGraph, VertexSet};

const SUBSET_SCAN_MAX: usize = 22;
const PERMUTATION_MAX: usize = 11;

/// Minimum independent dominating set by scanning all vertex subsets.
/// The witness is the lexicographically first optimum (as a bitmask).
pub fn naive_min_independent_dominating(g: &SubcubicGraph) -> (usize, VertexSet) {
    scan_subsets(g, true)
}

/// Minimum dominating set by scanning all vertex subsets.
pub fn naive_min_dominating(g: &SubcubicGraph) -> (usize, VertexSet) {
    scan_subsets(g, false)
}

fn scan_subsets(g: &SubcubicGraph, independent: bool) -> (usize, VertexSet) {
    let n = g.n();
    assert!(n <= SUBSET_SCAN_MAX, "subset scan is limited to n <= {SUBSET_SCAN_MAX}");
    let closed: Vec<u64> = g
        .vertices()
        .map(|v| {
            g.closed_neighborhood(v)
                .iter()
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect();
    let edges = g.edges();
    let mut best_mask = 0u64;
    let mut best_size = usize::MAX;
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size >= best_size {
            continue;
        }
        if independent && edges.iter().any(|&(u, v)| mask & 1 << u != 0 && mask & 1 << v != 0) {
            continue;
        }
        if closed.iter().all(|&c| c & mask != 0) {
            best_size = size;
            best_mask = mask;
        }
    }
    let witness = VertexSet::from_iter(n, (0..n as u32).filter(|&v| best_mask & 1 << v != 0));
    (best_size, witness)
}

/// Canonical identity by raw search over vertex relabelings: the
/// lexicographically smallest upper-triangle adjacency bit string any
/// relabeling of `g` can produce, packed into a `u64` together with the
/// order. Shares no machinery with the partition-refinement labeler.
pub fn bruteforce_canonical(g: &SubcubicGraph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= PERMUTATION_MAX, "permutation scan is limited to n <= {PERMUTATION_MAX}");
    if n < 2 {
        return (n, 0);
    }
    let mut best = u64::MAX;
    let mut perm = vec![u32::MAX; n];
    let mut used = vec![false; n];
    place(g, 0, 0, 0, &mut perm, &mut used, &mut best);
    (n, best)
}

/// Bits of the upper triangle in column order: column `j` contributes bits
/// for rows `0..j`, and bit index `t` is stored at u64 position `63 - t` so
/// that numeric order on the packed word is string order on the bits.
fn place(
    g: &SubcubicGraph,
    depth: usize,
    bits: u64,
    bit_count: u32,
    perm: &mut [u32],
    used: &mut [bool],
    best: &mut u64,
) {
    let n = g.n();
    if depth == n {
        if bits < *best {
            *best = bits;
        }
        return;
    }
    for old in 0..n {
        if used[old] {
            continue;
        }
        let mut next_bits = bits;
        let mut next_count = bit_count;
        for &placed in perm.iter().take(depth) {
            if g.has_edge(placed, old as u32) {
                next_bits |= 1 << (63 - next_count);
            }
            next_count += 1;
        }
        // All later bits of this prefix are zero, so a prefix already above
        // the incumbent can never get back under it.
        if next_bits > *best {
            continue;
        }
        used[old] = true;
        perm[depth] = old as u32;
        place(g, depth + 1, next_bits, next_count, perm, used, best);
        perm[depth] = u32::MAX;
        used[old] = false;
    }
}

/// Every isomorphism class of connected graph on `n` labeled vertices with
/// maximum degree three, found by trying all 2^C(n,2) edge subsets. Returns
/// the sorted canonical identities.
pub fn naive_connected_subcubic_classes(n: usize) -> Vec<u64> {
    assert!(n <= 6, "edge-mask scan is limited to n <= 6");
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)))
        .collect();
    let mut seen = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(t, _)| mask & 1 << t != 0)
            .map(|(_, &e)| e)
            .collect();
        let Ok(g) = SubcubicGraph::from_edges(n, &edges) else {
            continue;
        };
        if !g.is_connected() {
            continue;
        }
        seen.insert(bruteforce_canonical(&g).1);
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// One representative per isomorphism class of connected 3-regular graph on
/// `n` vertices, found by depth-first search over edge subsets with degree
/// saturation pruning.
pub fn naive_connected_cubic_classes(n: usize) -> Vec<SubcubicGraph> {
    assert!(n <= 8 && n.is_multiple_of(2) && n >= 4, "edge subset search is limited to even 4 <= n <= 8");
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|i| (i + 1..n as u32).map(move |j| (i, j)))
        .collect();
    let mut degrees = vec![0u8; n];
    let mut chosen: Vec<(u32, u32)> = Vec::new();
    let mut found: Vec<Vec<(u32, u32)>> = Vec::new();
    cubic_rec(&pairs, 0, n, &mut degrees, &mut chosen, &mut found);
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for edges in found {
        let g = SubcubicGraph::from_edges(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        if seen.insert(bruteforce_canonical(&g).1) {
            reps.push(g);
        }
    }
    reps
}

fn cubic_rec(
    pairs: &[(u32, u32)],
    idx: usize,
    n: usize,
    degrees: &mut [u8],
    chosen: &mut Vec<(u32, u32)>,
    found: &mut Vec<Vec<(u32, u32)>>,
) {
    if idx == pairs.len() {
        if degrees.iter().all(|&d| d == 3) {
            found.push(chosen.clone());
        }
        return;
    }
    let (i, j) = pairs[idx];
    // Position (i, i+1) opens row i; every pair touching vertex i-1 has been
    // decided by then, so an unsaturated vertex i-1 can never recover.
    if j == i + 1 && i >= 1 && degrees[i as usize - 1] != 3 {
        return;
    }
    // Vertex i can only gain edges from the rest of its own row.
    let row_left = n - j as usize;
    let need_i = (3 - degrees[i as usize]) as usize;
    if need_i > row_left {
        return;
    }
    if degrees[i as usize] < 3 && degrees[j as usize] < 3 {
        degrees[i as usize] += 1;
        degrees[j as usize] += 1;
        chosen.push((i, j));
        cubic_rec(pairs, idx + 1, n, degrees, chosen, found);
        chosen.pop();
        degrees[i as usize] -= 1;
        degrees[j as usize] -= 1;
    }
    if need_i < row_left {
        cubic_rec(pairs, idx + 1, n, degrees, chosen, found);
    }
}

/// Number of isomorphism classes of connected 3-regular graphs on `n`
/// vertices, computed by generating every labeled such graph exactly once
/// and deduplicating with the supplied canonical identity function.
///
/// The growth rule is: take the lowest vertex that still needs edges and
/// decide all of its missing partners in one step. Replaying any labeled
/// graph through that rule is deterministic, so each one is built once.
/// This checks generation completeness independently of the leveled
/// augmentation pipeline; the identity function is vouched for separately.
pub fn labeled_growth_cubic_class_count<K, F>(n: usize, canon: F) -> usize
where
    K: std::hash::Hash + Eq + Send,
    F: Fn(&SubcubicGraph) -> K + Sync,
{
    assert!(n <= 10 && n.is_multiple_of(2) && n >= 4, "labeled growth is limited to even 4 <= n <= 10");
    // Branch in parallel over the partner sets of vertex 0.
    let firsts: Vec<Vec<u32>> = choose_sets(&(1..n as u32).collect::<Vec<_>>(), 3);
    let classes: HashSet<K> = firsts
        .into_par_iter()
        .map(|partners| {
            let mut degrees = vec![0u8; n];
            let mut edges: Vec<(u32, u32)> = Vec::new();
            degrees[0] = 3;
            for &p in &partners {
                degrees[p as usize] += 1;
                edges.push((0, p));
            }
            let mut local = HashSet::new();
            labeled_rec(n, &mut degrees, &mut edges, &canon, &mut local);
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    classes.len()
}

fn labeled_rec<K: std::hash::Hash + Eq, F: Fn(&SubcubicGraph) -> K>(
    n: usize,
    degrees: &mut Vec<u8>,
    edges: &mut Vec<(u32, u32)>,
    canon: &F,
    out: &mut HashSet<K>,
) {
    let Some(v) = degrees.iter().position(|&d| d < 3) else {
        let g = SubcubicGraph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            out.insert(canon(&g));
        }
        return;
    };
    let need = (3 - degrees[v]) as usize;
    let candidates: Vec<u32> = (v as u32 + 1..n as u32)
        .filter(|&u| degrees[u as usize] < 3 && !edges.contains(&(v as u32, u)))
        .collect();
    if candidates.len() < need {
        return;
    }
    for partners in choose_sets(&candidates, need) {
        degrees[v] = 3;
        for &p in &partners {
            degrees[p as usize] += 1;
            edges.push((v as u32, p));
        }
        labeled_rec(n, degrees, edges, canon, out);
        for &p in &partners {
            degrees[p as usize] -= 1;
            edges.pop();
        }
        degrees[v] = 3 - need as u8;
    }
}

fn choose_sets(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..items.len() {
            cur.push(items[t]);
            rec(items, k, t + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Number of distinct subgraph copies of `pattern` inside `host`: injective
/// vertex maps preserving every pattern edge, counted up to their edge
/// image so that different maps onto the same copy count once.
pub fn naive_subgraph_copy_count(host: &SubcubicGraph, pattern: &SubcubicGraph) -> usize {
    let p = pattern.n();
    if p > host.n() {
        return 0;
    }
    // Place pattern vertices so each one after the first touches something
    // already placed whenever the pattern allows it; pure speed, the set of
    // found images is order-independent.
    let order = placement_order(pattern);
    let mut assignment = vec![u32::MAX; p];
    let mut used = vec![false; host.n()];
    let mut images: HashSet<Vec<(u32, u32)>> = HashSet::new();
    embed_rec(host, pattern, &order, 0, &mut assignment, &mut used, &mut images);
    images.len()
}

fn placement_order(pattern: &SubcubicGraph) -> Vec<u32> {
    let p = pattern.n();
    let mut order: Vec<u32> = Vec::with_capacity(p);
    let mut placed = vec![false; p];
    for _ in 0..p {
        let pick = (0..p as u32)
            .filter(|&v| !placed[v as usize])
            .max_by_key(|&v| {
                let anchored = pattern
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| placed[u as usize])
                    .count();
                (anchored, std::cmp::Reverse(v))
            })
            .unwrap();
        placed[pick as usize] = true;
        order.push(pick);
    }
    order
}

fn embed_rec(
    host: &SubcubicGraph,
    pattern: &SubcubicGraph,
    order: &[u32],
    depth: usize,
    assignment: &mut [u32],
    used: &mut [bool],
    images: &mut HashSet<Vec<(u32, u32)>>,
) {
    if depth == order.len() {
        let mut image: Vec<(u32, u32)> = pattern
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (assignment[a as usize], assignment[b as usize]);
                (x.min(y), x.max(y))
            })
            .collect();
        image.sort_unstable();
        images.insert(image);
        return;
    }
    let v = order[depth];
    'hosts: for h in host.vertices() {
        if used[h as usize] {
            continue;
        }
        for &u in pattern.neighbors(v) {
            let hu = assignment[u as usize];
            if hu != u32::MAX && !host.has_edge(h, hu) {
                continue 'hosts;
            }
        }
        assignment[v as usize] = h;
        used[h as usize] = true;
        embed_rec(host, pattern, order, depth + 1, assignment, used, images);
        used[h as usize] = false;
        assignment[v as usize] = u32::MAX;
    }
}

/// Girth by exhaustive simple-cycle enumeration: every cycle is walked from
/// its smallest vertex, in both directions.
pub fn naive_girth(g: &SubcubicGraph) -> Girth {
    let mut best: Option<usize> = None;
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        on_path[s as usize] = true;
        cycle_rec(g, s, s, 1, &mut on_path, &mut best);
        on_path[s as usize] = false;
    }
    match best {
        Some(len) => Girth::Finite(len),
        None => Girth::Acyclic,
    }
}

fn cycle_rec(
    g: &SubcubicGraph,
    start: u32,
    at: u32,
    len: usize,
    on_path: &mut [bool],
    best: &mut Option<usize>,
) {
    for &u in g.neighbors(at) {
        if u == start && len >= 3 {
            if best.is_none_or(|b| len < b) {
                *best = Some(len);
            }
        } else if u > start && !on_path[u as usize] {
            on_path[u as usize] = true;
            cycle_rec(g, start, u, len + 1, on_path, best);
            on_path[u as usize] = false;
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
    fn subset_scan_basics() {
        let g = k23();
        let (i, wi) = naive_min_independent_dominating(&g);
        assert_eq!(i, 2);
        assert!(crate::solver::is_independent_dominating(&g, &wi));
        let (d, wd) = naive_min_dominating(&g);
        assert_eq!(d, 2);
        assert!(crate::solver::is_dominating(&g, &wd));

        let edgeless = SubcubicGraph::from_edges(4, &[]).unwrap();
        assert_eq!(naive_min_independent_dominating(&edgeless).0, 4);
    }

    #[test]
    fn bruteforce_canonical_separates_and_unifies() {
        let path = SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let path_shuffled = SubcubicGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = SubcubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(bruteforce_canonical(&path), bruteforce_canonical(&path_shuffled));
        assert_ne!(bruteforce_canonical(&path), bruteforce_canonical(&star));
    }

    #[test]
    fn subcubic_class_counts_tiny() {
        assert_eq!(naive_connected_subcubic_classes(1).len(), 1);
        assert_eq!(naive_connected_subcubic_classes(2).len(), 1);
        assert_eq!(naive_connected_subcubic_classes(3).len(), 2);
        assert_eq!(naive_connected_subcubic_classes(4).len(), 6);
        assert_eq!(naive_connected_subcubic_classes(5).len(), 10);
    }

    #[test]
    fn cubic_classes_small() {
        assert_eq!(naive_connected_cubic_classes(4).len(), 1);
        assert_eq!(naive_connected_cubic_classes(6).len(), 2);
        assert_eq!(naive_connected_cubic_classes(8).len(), 5);
    }

    #[test]
    fn labeled_growth_small() {
        let canon = |g: &SubcubicGraph| bruteforce_canonical(g);
        assert_eq!(labeled_growth_cubic_class_count(4, canon), 1);
        assert_eq!(labeled_growth_cubic_class_count(6, canon), 2);
        assert_eq!(labeled_growth_cubic_class_count(8, canon), 5);
    }

    #[test]
    fn subgraph_copies() {
        let host = k23();
        // K2,3 contains itself once, C4 three ways, and no triangle.
        assert_eq!(naive_subgraph_copy_count(&host, &k23()), 1);
        let c4 = SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(naive_subgraph_copy_count(&host, &c4), 3);
        let c3 = SubcubicGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(naive_subgraph_copy_count(&host, &c3), 0);
        // Six copies inside the complete bipartite graph on 3+3: pick the
        // side holding the pair, then the vertex the pair misses.
        let k33 = SubcubicGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(naive_subgraph_copy_count(&k33, &k23()), 6);
    }

    #[test]
    fn girth_matches_bfs_computation() {
        let graphs = [
            k23(),
            SubcubicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            SubcubicGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
            SubcubicGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(naive_girth(g), g.girth());
        }
    }
}
