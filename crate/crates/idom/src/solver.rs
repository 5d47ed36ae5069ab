//! Exact solvers for the domination number and the independent domination
//! number, by branch and bound over dominators of an undominated vertex.
//!
//! Branching always targets the undominated vertex with the fewest eligible
//! dominators and tries those dominators in ascending index order, so runs
//! are deterministic: the same graph yields the same witness and the same
//! node count every time.

use crate::graph::{SubcubicGraph, VertexSet};

/// An optimal set together with the search effort that produced it.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
}

pub fn is_independent(g: &SubcubicGraph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)))
}

pub fn is_dominating(g: &SubcubicGraph, s: &VertexSet) -> bool {
    g.vertices()
        .all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w)))
}

pub fn is_independent_dominating(g: &SubcubicGraph, s: &VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

/// Minimum independent dominating set (equivalently, a smallest maximal
/// independent set).
pub fn independent_domination_number(g: &SubcubicGraph) -> SolveOutcome {
    let seed = greedy_independent_dominating(g);
    solve_seeded(g, true, seed)
}

/// Minimum dominating set.
pub fn domination_number(g: &SubcubicGraph) -> SolveOutcome {
    let seed = greedy_dominating(g);
    solve_seeded(g, false, seed)
}

fn solve_seeded(g: &SubcubicGraph, independent: bool, seed: VertexSet) -> SolveOutcome {
    let mut best = Some(Best {
        value: seed.count(),
        witness: seed,
    });
    let mut searcher = Searcher::new(g, independent);
    let empty = VertexSet::empty(g.n());
    searcher.recurse(&empty, &empty, &empty, &mut best);
    let best = best.expect("seeded search always holds an incumbent");
    SolveOutcome {
        value: best.value,
        witness: best.witness,
        nodes: searcher.nodes,
    }
}

/// Minimum independent dominating set among those containing all of
/// `forced_in` and none of `forced_out`. Returns `None` when no independent
/// dominating set satisfies the constraints.
pub fn independent_domination_constrained(
    g: &SubcubicGraph,
    forced_in: &VertexSet,
    forced_out: &VertexSet,
) -> Option<SolveOutcome> {
    if !forced_in.is_disjoint(forced_out) || !is_independent(g, forced_in) {
        return None;
    }
    let n = g.n();
    let mut chosen = VertexSet::empty(n);
    let mut excluded = forced_out.clone();
    let mut dominated = VertexSet::empty(n);
    for v in forced_in.iter() {
        chosen.insert(v);
        dominated.union_with(&g.closed_neighborhood(v));
        excluded.union_with(&g.neighborhood(v));
    }
    let mut searcher = Searcher::new(g, true);
    let mut found: Option<Best> = None;
    searcher.recurse(&chosen, &excluded, &dominated, &mut found);
    found.map(|best| SolveOutcome {
        value: best.value,
        witness: best.witness,
        nodes: searcher.nodes,
    })
}

struct Best {
    value: usize,
    witness: VertexSet,
}

struct Searcher<'g> {
    g: &'g SubcubicGraph,
    independent: bool,
    closed: Vec<VertexSet>,
    ball2: Vec<VertexSet>,
    nodes: u64,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g SubcubicGraph, independent: bool) -> Self {
        let closed: Vec<VertexSet> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
        let ball2 = g
            .vertices()
            .map(|v| {
                let mut b = closed[v as usize].clone();
                for u in closed[v as usize].iter() {
                    b.union_with(&closed[u as usize]);
                }
                b
            })
            .collect();
        Searcher {
            g,
            independent,
            closed,
            ball2,
            nodes: 0,
        }
    }

    /// Bound-and-branch: any incumbent must be beaten strictly, so a search
    /// seeded with a greedy solution proves its optimality or improves on
    /// it, and one started without an incumbent reports the first optimum
    /// it proves (or nothing, for infeasible constraints).
    fn recurse(
        &mut self,
        chosen: &VertexSet,
        excluded: &VertexSet,
        dominated: &VertexSet,
        best: &mut Option<Best>,
    ) {
        self.nodes += 1;
        let undominated = dominated.complement();
        if undominated.is_empty() {
            let value = chosen.count();
            let improves = match best {
                Some(b) => value < b.value,
                None => true,
            };
            if improves {
                *best = Some(Best {
                    value,
                    witness: chosen.clone(),
                });
            }
            return;
        }
        if let Some(b) = best {
            if chosen.count() + self.lower_bound(&undominated) >= b.value {
                return;
            }
        }
        // The undominated vertex with the fewest ways to cover it.
        let mut branch_v = u32::MAX;
        let mut branch_opts = usize::MAX;
        for v in undominated.iter() {
            let opts = self.closed[v as usize].difference(excluded).count();
            if opts < branch_opts {
                branch_opts = opts;
                branch_v = v;
                if opts == 0 {
                    return;
                }
            }
        }
        let eligible = self.closed[branch_v as usize].difference(excluded);
        let mut excluded = excluded.clone();
        for u in eligible.iter() {
            let mut next_chosen = chosen.clone();
            next_chosen.insert(u);
            let mut next_dominated = dominated.clone();
            next_dominated.union_with(&self.closed[u as usize]);
            let mut next_excluded = excluded.clone();
            if self.independent {
                next_excluded.union_with(&self.g.neighborhood(u));
            }
            next_excluded.insert(u);
            self.recurse(&next_chosen, &next_excluded, &next_dominated, best);
            excluded.insert(u);
        }
    }

    /// Vertices pairwise farther apart than two need distinct dominators;
    /// each future pick dominates at most four undominated vertices.
    fn lower_bound(&self, undominated: &VertexSet) -> usize {
        let mut blocked = VertexSet::empty(self.g.n());
        let mut packing = 0;
        for v in undominated.iter() {
            if !blocked.contains(v) {
                packing += 1;
                blocked.union_with(&self.ball2[v as usize]);
            }
        }
        packing.max(undominated.count().div_ceil(4))
    }
}

/// Maximal independent set grown min-degree-first; its size is the initial
/// upper bound for the exact search.
pub fn greedy_independent_dominating(g: &SubcubicGraph) -> VertexSet {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut chosen = VertexSet::empty(n);
    while !alive.is_empty() {
        let mut pick = u32::MAX;
        let mut pick_deg = usize::MAX;
        for v in alive.iter() {
            let d = g.neighbors(v).iter().filter(|&&w| alive.contains(w)).count();
            if d < pick_deg {
                pick_deg = d;
                pick = v;
            }
        }
        chosen.insert(pick);
        alive.remove(pick);
        for &w in g.neighbors(pick) {
            alive.remove(w);
        }
    }
    chosen
}

fn greedy_dominating(g: &SubcubicGraph) -> VertexSet {
    let n = g.n();
    let mut dominated = VertexSet::empty(n);
    let mut chosen = VertexSet::empty(n);
    while dominated.count() < n {
        let mut pick = u32::MAX;
        let mut gain = 0;
        for v in g.vertices() {
            if chosen.contains(v) {
                continue;
            }
            let new = g.closed_neighborhood(v).difference(&dominated).count();
            if new > gain {
                gain = new;
                pick = v;
            }
        }
        chosen.insert(pick);
        dominated.union_with(&g.closed_neighborhood(pick));
    }
    chosen
}
