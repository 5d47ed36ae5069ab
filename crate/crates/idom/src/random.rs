//! Seeded random graph generators for the randomized verification suites
//! and the property tests. Everything takes the RNG by reference, so a
//! fixed seed replays the exact same stream of graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{SubcubicGraph, VertexSet};

/// Random subcubic graph: every vertex pair is visited once in random
/// order and kept with probability `density` while both endpoints have
/// spare degree.
pub fn random_subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> SubcubicGraph {
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u as usize] < 3 && degree[v as usize] < 3 && rng.gen_bool(density) {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
            edges.push((u, v));
        }
    }
    SubcubicGraph::from_edges(n, &edges).expect("degree-capped edge stream")
}

/// Random connected subcubic graph: a degree-capped random spanning tree,
/// then leftover pairs kept with probability `extra_density` while degrees
/// allow.
pub fn random_connected_subcubic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra_density: f64,
) -> SubcubicGraph {
    assert!(n >= 1, "need at least one vertex");
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for idx in 1..n {
        // Some earlier vertex always has spare degree: a tree prefix of
        // size s has degree sum 2(s-1) < 3s.
        let parents: Vec<u32> = order[..idx]
            .iter()
            .copied()
            .filter(|&u| degree[u as usize] < 3)
            .collect();
        let u = *parents.choose(rng).expect("tree prefix has spare degree");
        let v = order[idx];
        degree[u as usize] += 1;
        degree[v as usize] += 1;
        edges.push((u.min(v), u.max(v)));
    }
    let tree: std::collections::HashSet<(u32, u32)> = edges.iter().copied().collect();
    let mut pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .filter(|p| !tree.contains(p))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if degree[u as usize] < 3 && degree[v as usize] < 3 && rng.gen_bool(extra_density) {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
            edges.push((u, v));
        }
    }
    SubcubicGraph::from_edges(n, &edges).expect("degree-capped edge stream")
}

/// Random subcubic graph with no isolated vertex: a disjoint union of
/// random connected pieces, each on at least two vertices.
pub fn random_isolate_free_subcubic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra_density: f64,
) -> SubcubicGraph {
    assert!(n >= 2, "need at least two vertices");
    let mut result: Option<SubcubicGraph> = None;
    let mut left = n;
    while left > 0 {
        let mut part = rng.gen_range(2..=left.min(9));
        if left - part == 1 {
            part += 1;
        }
        let piece = random_connected_subcubic(rng, part, extra_density);
        result = Some(match result {
            None => piece,
            Some(acc) => acc.disjoint_union(&piece),
        });
        left -= part;
    }
    result.expect("n >= 2 yields at least one piece")
}

/// Uniformly random proper subset of the vertices (the empty set counts).
pub fn random_proper_subset<R: Rng + ?Sized>(rng: &mut R, n: usize) -> VertexSet {
    let mut x = VertexSet::empty(n);
    for v in 0..n as u32 {
        if rng.gen_bool(0.5) {
            x.insert(v);
        }
    }
    if x.count() == n {
        x.remove(rng.gen_range(0..n as u32));
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_replay_from_seed() {
        let draw = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (
                random_subcubic(&mut rng, 12, 0.4),
                random_connected_subcubic(&mut rng, 12, 0.2),
                random_isolate_free_subcubic(&mut rng, 12, 0.2),
                random_proper_subset(&mut rng, 12),
            )
        };
        assert_eq!(draw(7), draw(7));
    }

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..40 {
            let n = 2 + (trial % 14);
            let g = random_subcubic(&mut rng, n, 0.5);
            assert!(g.vertices().all(|v| g.degree(v) <= 3));
            let c = random_connected_subcubic(&mut rng, n, 0.3);
            assert!(c.is_connected());
            let f = random_isolate_free_subcubic(&mut rng, n, 0.3);
            assert!(f.vertices().all(|v| f.degree(v) >= 1));
            let x = random_proper_subset(&mut rng, n);
            assert!(x.count() < n);
        }
    }

    #[test]
    fn removal_cost_identity_on_isolate_free_hosts() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..60 {
            let n = 2 + (trial % 16);
            let g = random_isolate_free_subcubic(&mut rng, n, 0.4);
            let x = random_proper_subset(&mut rng, n);
            let (h, _) = g.delete_vertices(&x);
            let isolated = h.degree_profile().as_array()[0] as u64;
            assert_eq!(
                g.removal_cost(&x).unwrap(),
                g.exit_edge_count(&x).unwrap() as u64 + 2 * isolated
            );
        }
    }
}
