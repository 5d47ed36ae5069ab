//! Cross-cutting randomized laws. Proptest drives generator seeds and
//! size parameters; the graphs themselves come from the seeded samplers in
//! `idom::random`, so failures shrink to a reproducible seed.

use idom::codec::{from_graph6, to_graph6};
use idom::enumeration::canonical_form;
use idom::oracle::{bruteforce_canonical, naive_min_dominating, naive_min_independent_dominating};
use idom::random::{random_connected_subcubic, random_isolate_free_subcubic, random_proper_subset, random_subcubic};
use idom::recognition::weight_report;
use idom::solver::{
    domination_number, greedy_independent_dominating, independent_domination_number,
    is_dominating, is_independent, is_independent_dominating,
};
use idom::{SubcubicGraph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relabels `g` by a seeded random permutation.
fn permuted(g: &SubcubicGraph, rng: &mut ChaCha8Rng) -> SubcubicGraph {
    let mut perm: Vec<u32> = (0..g.n() as u32).collect();
    perm.shuffle(rng);
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    SubcubicGraph::from_edges(g.n(), &edges).expect("permutation preserves degrees")
}

/// A random independent set, not necessarily maximal.
fn random_independent_set(g: &SubcubicGraph, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut order: Vec<u32> = (0..g.n() as u32).collect();
    order.shuffle(rng);
    let mut s = VertexSet::empty(g.n());
    for v in order {
        if rng.gen_bool(0.7) && g.neighbors(v).iter().all(|&w| !s.contains(w)) {
            s.insert(v);
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(seed in any::<u64>(), n in 0usize..=20, density in 0.0f64..=1.0) {
        let g = random_subcubic(&mut rng_for(seed), n, density);
        let decoded = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(decoded.n(), g.n());
        prop_assert_eq!(decoded.edges(), g.edges());
    }

    #[test]
    fn canonical_form_ignores_labeling(seed in any::<u64>(), n in 1usize..=12, density in 0.0f64..=1.0) {
        let mut rng = rng_for(seed);
        let g = random_subcubic(&mut rng, n, density);
        let h = permuted(&g, &mut rng);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_agrees_with_permutation_scan(
        seed in any::<u64>(),
        n in 1usize..=7,
        density in 0.0f64..=1.0,
        twin in proptest::bool::ANY,
    ) {
        let mut rng = rng_for(seed);
        let a = random_subcubic(&mut rng, n, density);
        let b = if twin { permuted(&a, &mut rng) } else { random_subcubic(&mut rng, n, density) };
        let fast = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        let slow = bruteforce_canonical(&a) == bruteforce_canonical(&b);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn solvers_match_subset_scan(seed in any::<u64>(), n in 1usize..=8, density in 0.0f64..=1.0) {
        let g = random_subcubic(&mut rng_for(seed), n, density);
        let ind = independent_domination_number(&g);
        let dom = domination_number(&g);
        prop_assert_eq!(ind.value, naive_min_independent_dominating(&g).0);
        prop_assert_eq!(dom.value, naive_min_dominating(&g).0);
        prop_assert!(is_independent_dominating(&g, &ind.witness));
        prop_assert_eq!(ind.witness.count(), ind.value);
        prop_assert!(is_dominating(&g, &dom.witness));
        prop_assert_eq!(dom.witness.count(), dom.value);
    }

    #[test]
    fn domination_equals_maximality_on_independent_sets(
        seed in any::<u64>(),
        n in 1usize..=12,
        density in 0.0f64..=1.0,
    ) {
        let mut rng = rng_for(seed);
        let g = random_subcubic(&mut rng, n, density);
        let s = random_independent_set(&g, &mut rng);
        prop_assert!(is_independent(&g, &s));
        let maximal = g
            .vertices()
            .filter(|&v| !s.contains(v))
            .all(|v| g.neighbors(v).iter().any(|&w| s.contains(w)));
        prop_assert_eq!(is_dominating(&g, &s), maximal);
        prop_assert_eq!(is_independent_dominating(&g, &s), maximal);
    }

    #[test]
    fn greedy_set_is_independent_dominating(seed in any::<u64>(), n in 1usize..=14, density in 0.0f64..=1.0) {
        let g = random_subcubic(&mut rng_for(seed), n, density);
        let s = greedy_independent_dominating(&g);
        prop_assert!(is_independent_dominating(&g, &s));
        prop_assert!(independent_domination_number(&g).value <= s.count());
    }

    #[test]
    fn removal_cost_identity_on_isolate_free_hosts(seed in any::<u64>(), n in 2usize..=12, extra in 0.0f64..=1.0) {
        let mut rng = rng_for(seed);
        let g = random_isolate_free_subcubic(&mut rng, n, extra);
        let x = random_proper_subset(&mut rng, n);
        let cost = g.removal_cost(&x).unwrap();
        let exits = g.exit_edge_count(&x).unwrap() as u64;
        let isolates = g.delete_vertices(&x).0.degree_profile().as_array()[0] as u64;
        prop_assert_eq!(cost, exits + 2 * isolates);
    }

    #[test]
    fn deletions_compose(seed in any::<u64>(), n in 1usize..=14, density in 0.0f64..=1.0) {
        let mut rng = rng_for(seed);
        let g = random_subcubic(&mut rng, n, density);
        let x = random_proper_subset(&mut rng, n);
        let (after_x, map_x) = g.delete_vertices(&x);
        let y = random_proper_subset(&mut rng, after_x.n());
        let (two_step, map_y) = after_x.delete_vertices(&y);

        let mut both = x.clone();
        for v in y.iter() {
            both.insert(map_x[v as usize]);
        }
        let (one_step, map_both) = g.delete_vertices(&both);

        prop_assert_eq!(one_step.n(), two_step.n());
        prop_assert_eq!(one_step.edges(), two_step.edges());
        let composed: Vec<u32> = map_y.iter().map(|&mid| map_x[mid as usize]).collect();
        prop_assert_eq!(composed, map_both);
    }

    #[test]
    fn weight_report_is_internally_consistent(seed in any::<u64>(), n in 1usize..=10, density in 0.0f64..=1.0) {
        let g = random_subcubic(&mut rng_for(seed), n, density);
        let r = weight_report(&g);
        prop_assert_eq!(r.n0 + r.n1 + r.n2 + r.n3, r.n);
        prop_assert_eq!(r.w, (8 * r.n0 + 5 * r.n1 + 4 * r.n2 + 3 * r.n3) as u64);
        prop_assert_eq!(r.theta, 2 * (r.tc + r.b) as u64);
        prop_assert_eq!(r.omega, r.w + r.theta);
        prop_assert_eq!(r.margin, r.omega as i64 - 8 * r.i as i64);
        prop_assert!(r.gamma <= r.i);
        let i_cert = VertexSet::from_iter(r.n, r.i_certificate.iter().copied());
        let g_cert = VertexSet::from_iter(r.n, r.gamma_certificate.iter().copied());
        prop_assert!(is_independent_dominating(&g, &i_cert));
        prop_assert_eq!(i_cert.count(), r.i);
        prop_assert!(is_dominating(&g, &g_cert));
        prop_assert_eq!(g_cert.count(), r.gamma);
    }

    #[test]
    fn connected_sampler_keeps_its_promise(seed in any::<u64>(), n in 1usize..=16, extra in 0.0f64..=1.0) {
        let g = random_connected_subcubic(&mut rng_for(seed), n, extra);
        prop_assert_eq!(g.n(), n);
        prop_assert!(g.is_connected());
    }
}
