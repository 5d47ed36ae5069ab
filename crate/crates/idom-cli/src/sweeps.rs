//! Exhaustive small-order sweeps and the randomized structural-law suite.
//!
//! Each sweep enumerates a graph class, checks the advertised inequality
//! on every member with exact integer arithmetic, and folds the flagged
//! graphs into a [`SweepReport`]. Enumeration levels fan out across worker
//! threads; partial results are merged in index order and the flagged
//! lists are sorted by encoding, so reports are deterministic for a given
//! set of flags.

use std::time::Instant;

use idom::codec::to_graph6;
use idom::enumeration::{canonical_relabel, enumerate_cubic, enumerate_subcubic_connected, AugmentationOrder};
use idom::families::{
    apply_o1, build_bad, build_troublesome, k23, k33, prism, random_bad_spec, TroublesomeKind,
};
use idom::random::{random_connected_subcubic, random_isolate_free_subcubic, random_proper_subset};
use idom::recognition::{contains_subgraph, theta};
use idom::solver::{
    independent_domination_constrained, independent_domination_number, is_independent_dominating,
};
use idom::{SubcubicGraph, VertexSet};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{BoundCheck, GraphRecord, SweepReport};

/// Worker count used when no `--jobs` flag is given.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
}

/// Applies `f` to `0..len`, sharding contiguous chunks across `jobs`
/// threads. Results come back in index order regardless of scheduling.
fn shard_indexed<R: Send>(len: usize, jobs: usize, f: impl Fn(usize) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1).min(len.max(1));
    if jobs == 1 || len < 64 {
        return (0..len).map(f).collect();
    }
    let chunk = len.div_ceil(jobs);
    let mut shards: Vec<Vec<R>> = Vec::with_capacity(jobs);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let lo = (j * chunk).min(len);
                let hi = ((j + 1) * chunk).min(len);
                let f = &f;
                scope.spawn(move || (lo..hi).map(f).collect::<Vec<R>>())
            })
            .collect();
        shards.extend(handles.into_iter().map(|h| h.join().expect("sweep worker")));
    });
    shards.into_iter().flatten().collect()
}

fn sort_records(records: &mut [GraphRecord]) {
    records.sort_by(|a, b| a.graph6.as_bytes().cmp(b.graph6.as_bytes()));
}

fn canonical_g6(g: &SubcubicGraph) -> String {
    to_graph6(&canonical_relabel(g).expect("canonical form of a fixed instance"))
}

/// Two-way comparison of a flagged list against its expected contents,
/// appending one failure line per discrepancy.
fn expect_exactly(
    label: &str,
    actual: &[GraphRecord],
    expected: &[String],
    failures: &mut Vec<String>,
) {
    for rec in actual {
        if !expected.contains(&rec.graph6) {
            failures.push(format!("unexpected {label}: {}", rec.graph6));
        }
    }
    for want in expected {
        if !actual.iter().any(|rec| &rec.graph6 == want) {
            failures.push(format!("missing expected {label}: {want}"));
        }
    }
}

/// Checks `8i <= 3n` over every connected cubic graph of order `4..=max_n`,
/// expecting exactly the two known exceptional graphs to violate it. The
/// same pass re-checks `8*gamma <= 3n` (no exceptions) and `5i <= 2n`
/// (one exception, one equality case).
pub fn run_verify_cubic(max_n: usize, jobs: usize) -> SweepReport {
    assert!((4..=14).contains(&max_n), "cubic sweep is sized for orders 4..=14");
    let started = Instant::now();
    let k33_c = canonical_g6(&k33());
    let prism5_c = canonical_g6(&prism(5));

    let mut violations = Vec::new();
    let mut equality = Vec::new();
    let mut gamma_check = BoundCheck::new("8*gamma <= 3n");
    let mut two_fifths = BoundCheck::new("5i <= 2n");
    let mut counts_by_order = Vec::new();
    let mut checked = 0u64;

    for n in (4..=max_n).step_by(2) {
        let graphs = enumerate_cubic(n, AugmentationOrder::Forward).expect("even order in range");
        counts_by_order.push((n, graphs.len() as u64));
        checked += graphs.len() as u64;
        let results = shard_indexed(graphs.len(), jobs, |idx| {
            let g = &graphs[idx];
            (
                independent_domination_number(g).value,
                idom::solver::domination_number(g).value,
            )
        });
        for (g, (i, gamma)) in graphs.iter().zip(results) {
            if 8 * i > 3 * n {
                violations.push(GraphRecord::new(g));
            } else if 8 * i == 3 * n {
                equality.push(GraphRecord::new(g));
            }
            if 8 * gamma > 3 * n {
                gamma_check.violations.push(GraphRecord::new(g));
            } else if 8 * gamma == 3 * n {
                gamma_check.equality_cases.push(GraphRecord::new(g));
            }
            if 5 * i > 2 * n {
                two_fifths.violations.push(GraphRecord::new(g));
            } else if 5 * i == 2 * n {
                two_fifths.equality_cases.push(GraphRecord::new(g));
            }
        }
    }
    sort_records(&mut violations);
    sort_records(&mut equality);
    sort_records(&mut gamma_check.violations);
    sort_records(&mut gamma_check.equality_cases);
    sort_records(&mut two_fifths.violations);
    sort_records(&mut two_fifths.equality_cases);

    let mut failures = Vec::new();
    let mut expected_exceptions = Vec::new();
    if max_n >= 6 {
        expected_exceptions.push(k33_c.clone());
    }
    if max_n >= 10 {
        expected_exceptions.push(prism5_c.clone());
    }
    expect_exactly("8i <= 3n violation", &violations, &expected_exceptions, &mut failures);
    for rec in &gamma_check.violations {
        failures.push(format!("8*gamma <= 3n violated: {}", rec.graph6));
    }
    let expected_two_fifths_violations: Vec<String> =
        if max_n >= 6 { vec![k33_c] } else { Vec::new() };
    expect_exactly(
        "5i <= 2n violation",
        &two_fifths.violations,
        &expected_two_fifths_violations,
        &mut failures,
    );
    let expected_two_fifths_equalities: Vec<String> =
        if max_n >= 10 { vec![prism5_c] } else { Vec::new() };
    expect_exactly(
        "5i <= 2n equality case",
        &two_fifths.equality_cases,
        &expected_two_fifths_equalities,
        &mut failures,
    );

    SweepReport {
        theorem: "8i <= 3n over connected cubic graphs".into(),
        orders: (4, max_n),
        graphs_checked: checked,
        counts_by_order,
        violations,
        equality_cases: equality,
        side_checks: vec![gamma_check, two_fifths],
        failures,
        seed: None,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

/// Checks `8i <= w + Theta` over every connected subcubic graph of order
/// `1..=max_n`, skipping the two exceptional graphs. Zero violations are
/// expected; equality cases are recorded.
pub fn run_verify_subcubic(max_n: usize, jobs: usize) -> SweepReport {
    assert!((1..=10).contains(&max_n), "subcubic sweep is sized for orders 1..=10");
    let started = Instant::now();
    let skip = [canonical_g6(&k33()), canonical_g6(&prism(5))];

    let mut violations = Vec::new();
    let mut equality = Vec::new();
    let mut counts_by_order = Vec::new();
    let mut checked = 0u64;

    for n in 1..=max_n {
        let graphs = enumerate_subcubic_connected(n, AugmentationOrder::Forward).expect("n >= 1");
        let margins = shard_indexed(graphs.len(), jobs, |idx| {
            let g = &graphs[idx];
            // The enumerator emits canonically labeled graphs, so the
            // exceptional pair is recognized by encoding alone.
            if skip.contains(&to_graph6(g)) {
                return None;
            }
            let i = independent_domination_number(g).value;
            let omega = g.graph_weight() + theta(g);
            Some(omega as i64 - 8 * i as i64)
        });
        let mut level = 0u64;
        for (g, margin) in graphs.iter().zip(margins) {
            let Some(margin) = margin else { continue };
            level += 1;
            if margin < 0 {
                violations.push(GraphRecord::new(g));
            } else if margin == 0 {
                equality.push(GraphRecord::new(g));
            }
        }
        counts_by_order.push((n, level));
        checked += level;
    }
    sort_records(&mut violations);
    sort_records(&mut equality);
    let failures = violations
        .iter()
        .map(|rec| format!("8i <= w + Theta violated: {}", rec.graph6))
        .collect();

    SweepReport {
        theorem: "8i <= w + Theta over connected subcubic graphs (two exceptional graphs excluded)"
            .into(),
        orders: (1, max_n),
        graphs_checked: checked,
        counts_by_order,
        violations,
        equality_cases: equality,
        side_checks: Vec::new(),
        failures,
        seed: None,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

/// Checks `8i <= w` over every connected subcubic graph of order
/// `1..=max_n` that contains no complete bipartite 2x3 subgraph, skipping
/// the 5-prism. Zero violations are expected.
pub fn run_verify_dorbec(max_n: usize, jobs: usize) -> SweepReport {
    assert!((1..=10).contains(&max_n), "sweep is sized for orders 1..=10");
    let started = Instant::now();
    let prism5_c = canonical_g6(&prism(5));
    let pattern = k23();

    let mut violations = Vec::new();
    let mut equality = Vec::new();
    let mut counts_by_order = Vec::new();
    let mut checked = 0u64;

    for n in 1..=max_n {
        let graphs = enumerate_subcubic_connected(n, AugmentationOrder::Forward).expect("n >= 1");
        let margins = shard_indexed(graphs.len(), jobs, |idx| {
            let g = &graphs[idx];
            if to_graph6(g) == prism5_c || contains_subgraph(g, &pattern) {
                return None;
            }
            let i = independent_domination_number(g).value;
            Some(g.graph_weight() as i64 - 8 * i as i64)
        });
        let mut level = 0u64;
        for (g, margin) in graphs.iter().zip(margins) {
            let Some(margin) = margin else { continue };
            level += 1;
            if margin < 0 {
                violations.push(GraphRecord::new(g));
            } else if margin == 0 {
                equality.push(GraphRecord::new(g));
            }
        }
        counts_by_order.push((n, level));
        checked += level;
    }
    sort_records(&mut violations);
    sort_records(&mut equality);
    let failures = violations
        .iter()
        .map(|rec| format!("8i <= w violated: {}", rec.graph6))
        .collect();

    SweepReport {
        theorem:
            "8i <= w over connected subcubic graphs without the complete bipartite 2x3 pattern \
             (5-prism excluded)"
                .into(),
        orders: (1, max_n),
        graphs_checked: checked,
        counts_by_order,
        violations,
        equality_cases: equality,
        side_checks: Vec::new(),
        failures,
        seed: None,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

struct Suite {
    check: BoundCheck,
    failures: Vec<String>,
    draws: u64,
}

impl Suite {
    fn new(bound: &str) -> Self {
        Suite { check: BoundCheck::new(bound), failures: Vec::new(), draws: 0 }
    }

    fn fail(&mut self, g: &SubcubicGraph, message: String) {
        self.check.violations.push(GraphRecord::new(g));
        self.failures.push(message);
    }
}

/// Removal-cost identity: deleting a set from an isolate-free graph raises
/// the outside weight by the exit-edge count plus twice the number of
/// vertices the deletion isolates.
fn suite_removal_cost<R: Rng>(rng: &mut R, trials: usize) -> Suite {
    let mut suite = Suite::new("removal cost = exit edges + 2 * new isolates");
    for trial in 0..trials {
        let n = rng.gen_range(2..=12);
        let g = random_isolate_free_subcubic(rng, n, 0.3);
        let x = random_proper_subset(rng, n);
        suite.draws += 1;
        let cost = g.removal_cost(&x).expect("proper subset");
        let exits = g.exit_edge_count(&x).expect("proper subset") as u64;
        let isolates = g.delete_vertices(&x).0.degree_profile().as_array()[0] as u64;
        if cost != exits + 2 * isolates {
            suite.fail(
                &g,
                format!(
                    "removal-cost trial {trial}: cost {cost} != {exits} + 2*{isolates} \
                     deleting {:?} from {}",
                    x.to_sorted_vec(),
                    to_graph6(&g)
                ),
            );
        }
    }
    suite
}

/// Unit-attachment deltas: attaching a five-vertex unit to a vertex of
/// degree one or two adds exactly 2 to i and 16 to w.
fn suite_attachment_deltas<R: Rng>(rng: &mut R, trials: usize) -> Suite {
    let mut suite = Suite::new("unit attachment: i += 2, w += 16");
    for trial in 0..trials {
        let n = rng.gen_range(2..=12);
        let (g, target) = loop {
            let g = random_connected_subcubic(rng, n, 0.25);
            let targets: Vec<u32> =
                g.vertices().filter(|&v| (1..=2).contains(&g.degree(v))).collect();
            if !targets.is_empty() {
                let target = targets[rng.gen_range(0..targets.len())];
                break (g, target);
            }
        };
        suite.draws += 1;
        let grown = apply_o1(&g, target).expect("target degree fits");
        let di = independent_domination_number(&grown).value
            - independent_domination_number(&g).value;
        let dw = grown.graph_weight() - g.graph_weight();
        if (di, dw) != (2, 16) {
            suite.fail(
                &g,
                format!(
                    "attachment trial {trial}: deltas (i {di}, w {dw}) at vertex {target} of {}",
                    to_graph6(&g)
                ),
            );
        }
    }
    suite
}

fn mapped_set(set: &VertexSet, map: &[u32], universe: usize) -> VertexSet {
    VertexSet::from_iter(
        universe,
        map.iter()
            .enumerate()
            .filter(|(_, &old)| set.contains(old))
            .map(|(new, _)| new as u32),
    )
}

/// Bad-family laws on random specs: the exact values of i and w, the three
/// distinguished vertex classes, single-vertex deletions, and the two
/// structural constraints on low-degree vertices.
fn suite_bad_family<R: Rng>(rng: &mut R, trials: usize) -> Suite {
    let mut suite = Suite::new("bad family: 8i = w + 2 and companion laws");
    for trial in 0..trials {
        let k = 1 + trial % 6;
        let spec = random_bad_spec(rng, k);
        let art = build_bad(&spec).expect("random spec is valid");
        let g = &art.graph;
        suite.draws += 1;
        let bad = |message: String| {
            format!("bad-family trial {trial} (spec {spec:?}): {message}")
        };
        let i = independent_domination_number(g).value;
        let w = g.graph_weight();
        if i != 2 * k + 1 || w != (16 * k + 6) as u64 {
            let msg = bad(format!("i {i}, w {w}"));
            suite.fail(g, msg);
            continue;
        }
        if art.canonical_id_set.count() != 2 * k + 1
            || !is_independent_dominating(g, &art.canonical_id_set)
        {
            let msg = bad("canonical class is not a minimum ID-set".into());
            suite.fail(g, msg);
        }
        let non_canonical = art.non_canonical_set.union(&VertexSet::singleton(g.n(), art.root));
        if !is_independent_dominating(g, &non_canonical) {
            let msg = bad("non-canonical class plus root is not an ID-set".into());
            suite.fail(g, msg);
        }
        let mut deletions: Vec<u32> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
        deletions.push(art.root);
        for v in deletions {
            let (rest, _) = g.delete_vertices(&VertexSet::singleton(g.n(), v));
            let down = independent_domination_number(&rest).value;
            if down != 2 * k {
                let msg = bad(format!("deleting vertex {v} gives i {down}"));
                suite.fail(g, msg);
            }
        }
        let degree_two = VertexSet::from_iter(
            g.n(),
            g.vertices().filter(|&v| g.degree(v) == 2),
        );
        let (trimmed, map) = g.delete_vertices(&degree_two);
        let core = mapped_set(&art.core_set, &map, trimmed.n());
        if core.count() != k
            || !is_independent_dominating(&trimmed, &core)
            || independent_domination_number(&trimmed).value != k
        {
            let msg = bad("core class is not a minimum ID-set after trimming".into());
            suite.fail(g, msg);
        }
        if g.degree_profile().as_array()[1] > 1 {
            let msg = bad("more than one leaf".into());
            suite.fail(g, msg);
        }
        if g.edges()
            .iter()
            .any(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2)
        {
            let msg = bad("adjacent degree-two pair".into());
            suite.fail(g, msg);
        }
    }
    suite
}

/// Troublesome-fragment laws on random templates: the fragment solves to
/// the same value as its bad part, some minimum set contains the second
/// link, and deleting any degree-two non-link set drops i by its size.
fn suite_troublesome<R: Rng>(rng: &mut R, trials: usize) -> Suite {
    let mut suite = Suite::new("troublesome fragment: i = 2k + 1 and companion laws");
    for trial in 0..trials {
        let k = 1 + trial % 3;
        let spec = loop {
            let s = random_bad_spec(rng, k);
            if !s.attachments.contains(&0) {
                break s;
            }
        };
        let kind = if trial % 2 == 0 { TroublesomeKind::Type1 } else { TroublesomeKind::Type2 };
        let template = build_troublesome(kind, &spec).expect("root kept degree one");
        let g = &template.graph;
        suite.draws += 1;
        let bad = |message: String| {
            format!("troublesome trial {trial} ({kind:?}, spec {spec:?}): {message}")
        };
        let i = independent_domination_number(g).value;
        if i != 2 * k + 1 {
            let msg = bad(format!("i {i}"));
            suite.fail(g, msg);
            continue;
        }
        let with_link = independent_domination_constrained(
            g,
            &VertexSet::singleton(g.n(), template.v2),
            &VertexSet::empty(g.n()),
        );
        if with_link.map(|o| o.value) != Some(i) {
            let msg = bad("no minimum ID-set contains the second link".into());
            suite.fail(g, msg);
        }
        let removable: Vec<u32> = g
            .vertices()
            .filter(|&v| g.degree(v) == 2 && v != template.v1 && v != template.v2)
            .collect();
        let chosen: Vec<u32> = removable.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !chosen.is_empty() {
            let s = VertexSet::from_iter(g.n(), chosen.iter().copied());
            let (rest, _) = g.delete_vertices(&s);
            let down = independent_domination_number(&rest).value;
            if down != i - chosen.len() {
                let msg = bad(format!("deleting {chosen:?} gives i {down}"));
                suite.fail(g, msg);
            }
        }
    }
    suite
}

/// Runs the four randomized structural-law suites, `trials` draws each,
/// from one seeded generator.
pub fn run_verify_props(trials: usize, seed: u64) -> SweepReport {
    assert!(trials >= 1, "at least one trial");
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suites = [
        suite_removal_cost(&mut rng, trials),
        suite_attachment_deltas(&mut rng, trials),
        suite_bad_family(&mut rng, trials),
        suite_troublesome(&mut rng, trials),
    ];

    let mut side_checks = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for suite in suites {
        checked += suite.draws;
        failures.extend(suite.failures);
        side_checks.push(suite.check);
    }

    SweepReport {
        theorem: "randomized structural laws: removal cost, attachment deltas, bad family, \
                  troublesome fragments"
            .into(),
        orders: (2, 31),
        graphs_checked: checked,
        counts_by_order: Vec::new(),
        violations: Vec::new(),
        equality_cases: Vec::new(),
        side_checks,
        failures,
        seed: Some(seed),
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}
