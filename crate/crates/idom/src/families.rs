//! Builders for the named graphs and parametric families the toolkit works
//! with: a handful of small fixed graphs, the bad family grown by unit
//! attachments, troublesome templates with their link stubs, six fixed
//! equality instances, and three extremal cubic families.
//!
//! Everything here is deterministic. Graphs come back labeled so embeddings
//! and recognition results can be cross-checked against ground truth.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, SubcubicGraph, VertexSet};
use crate::solver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    /// A bad-graph spec that cannot be realized.
    #[error("invalid bad-graph spec: {reason}")]
    InvalidSpec { reason: String },
    /// The unit operation needs a target with spare degree.
    #[error("attachment target {vertex} has degree {degree}, need degree at most 2")]
    AttachmentDegreeTooHigh { vertex: u32, degree: usize },
    /// Troublesome templates are built over a bad graph whose root has
    /// degree exactly 1.
    #[error("underlying bad graph has root degree {root_degree}, expected 1")]
    SpecNotInB1 { root_degree: usize },
    /// A template embedding got the wrong number of stub targets.
    #[error("template carries {expected} stubs, got {got} targets")]
    StubArityMismatch { expected: usize, got: usize },
    #[error("family {family} needs at least {minimum} blocks, got {blocks}")]
    InvalidBlockCount {
        family: ExtremalId,
        blocks: usize,
        minimum: usize,
    },
    /// An extremal generator emitted a graph that failed its own validation.
    /// This is a bug in the generator, never in the caller.
    #[error("reconstruction of {family} with {blocks} blocks failed: {reason}")]
    ReconstructionFailure {
        family: ExtremalId,
        blocks: usize,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn assemble(names: &[&str], edges: &[(&str, &str)]) -> SubcubicGraph {
    let idx = |s: &str| {
        names
            .iter()
            .position(|t| *t == s)
            .unwrap_or_else(|| panic!("unknown vertex name {s}")) as u32
    };
    let list: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    SubcubicGraph::from_edges(names.len(), &list)
        .expect("edge table is consistent")
        .with_labels(names.iter().map(|s| s.to_string()).collect())
}

/// The complete bipartite graph on parts of size 2 and 3. Vertices `x1..x3`
/// are the small side (degree 2), `y1`/`y2` the large side (degree 3).
pub fn k23() -> SubcubicGraph {
    assemble(
        &["x1", "x2", "x3", "y1", "y2"],
        &[
            ("x1", "y1"),
            ("x1", "y2"),
            ("x2", "y1"),
            ("x2", "y2"),
            ("x3", "y1"),
            ("x3", "y2"),
        ],
    )
}

/// The complete bipartite graph on two parts of size 3.
pub fn k33() -> SubcubicGraph {
    assemble(
        &["a1", "a2", "a3", "b1", "b2", "b3"],
        &[
            ("a1", "b1"),
            ("a1", "b2"),
            ("a1", "b3"),
            ("a2", "b1"),
            ("a2", "b2"),
            ("a2", "b3"),
            ("a3", "b1"),
            ("a3", "b2"),
            ("a3", "b3"),
        ],
    )
}

/// The diamond: a 4-clique minus one edge.
pub fn diamond() -> SubcubicGraph {
    assemble(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
}

/// The prism over a cycle of length `m`: two disjoint `m`-cycles joined by a
/// perfect matching. `prism(5)` is the exceptional graph from the sweep
/// exception list.
///
/// Panics if `m < 3`.
pub fn prism(m: usize) -> SubcubicGraph {
    assert!(m >= 3, "prism needs cycle length at least 3");
    let m32 = m as u32;
    let mut edges = Vec::with_capacity(3 * m);
    for j in 0..m32 {
        let jn = (j + 1) % m32;
        edges.push((j, jn));
        edges.push((m32 + j, m32 + jn));
        edges.push((j, m32 + j));
    }
    let labels = (0..m)
        .map(|j| format!("u{j}"))
        .chain((0..m).map(|j| format!("v{j}")))
        .collect();
    SubcubicGraph::from_edges(2 * m, &edges)
        .expect("prism edge table")
        .with_labels(labels)
}

/// Fixed 7-vertex instance with degree profile (0, 0, 3, 4): two adjacent
/// degree-2 vertices each tied into a shared complete bipartite core.
pub fn g7() -> SubcubicGraph {
    assemble(
        &["u1", "u2", "v1", "v2", "v3", "x1", "x2"],
        &[
            ("u1", "u2"),
            ("u1", "v1"),
            ("u2", "v2"),
            ("v1", "x1"),
            ("v1", "x2"),
            ("v2", "x1"),
            ("v2", "x2"),
            ("v3", "x1"),
            ("v3", "x2"),
        ],
    )
}

/// Fixed 8-vertex instance: a complete bipartite core whose three small
/// vertices each carry a pendant leaf.
pub fn g82() -> SubcubicGraph {
    assemble(
        &["p1", "p2", "p3", "s1", "s2", "s3", "t1", "t2"],
        &[
            ("p1", "s1"),
            ("p2", "s2"),
            ("p3", "s3"),
            ("s1", "t1"),
            ("s1", "t2"),
            ("s2", "t1"),
            ("s2", "t2"),
            ("s3", "t1"),
            ("s3", "t2"),
        ],
    )
}

/// Recipe for a member of the bad family. The graph is grown from the base
/// unit by attaching one fresh unit at a time, so a spec pins the graph down
/// exactly: `attachments[j - 2]` names the vertex (by construction-order
/// index) that unit `j` bridges to. Valid targets have degree at most 2 when
/// their turn comes; targets equal to 0 raise the root degree and thereby
/// select the subfamily.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BadGraphSpec {
    pub k: usize,
    pub attachments: Vec<u32>,
}

impl BadGraphSpec {
    /// The one-unit spec.
    pub fn base() -> Self {
        BadGraphSpec {
            k: 1,
            attachments: Vec::new(),
        }
    }
}

/// A built bad graph together with its distinguished vertex sets. The three
/// sets partition the vertices: the canonical set holds the root and the two
/// open degree-2 slots of every unit, the non-canonical set the two interior
/// vertices of every unit, and the core set the bridge-receiving vertex of
/// every unit.
#[derive(Clone, Debug)]
pub struct BadGraphArtifacts {
    pub graph: SubcubicGraph,
    pub root: u32,
    pub canonical_id_set: VertexSet,
    pub non_canonical_set: VertexSet,
    pub core_set: VertexSet,
}

impl BadGraphArtifacts {
    /// Number of units.
    pub fn k(&self) -> usize {
        (self.graph.n() - 1) / 5
    }

    /// Subfamily index, which is the degree of the root.
    pub fn subfamily(&self) -> usize {
        self.graph.degree(self.root)
    }
}

/// Attaches a fresh unit to `target`: the new unit is a complete bipartite
/// graph on parts 3 and 2, joined to `target` by a single bridge edge into
/// one of its degree-2 vertices. New vertices take indices `n..n+5` with the
/// bridge landing on `n`. Labels are dropped; use [`build_bad`] when the
/// distinguished sets or labels matter.
pub fn apply_o1(g: &SubcubicGraph, target: u32) -> Result<SubcubicGraph, FamilyError> {
    let n = g.n();
    if (target as usize) >= n {
        return Err(GraphError::VertexOutOfRange { v: target, n }.into());
    }
    let degree = g.degree(target);
    if degree > 2 {
        return Err(FamilyError::AttachmentDegreeTooHigh {
            vertex: target,
            degree,
        });
    }
    let b = n as u32;
    let mut edges = g.edges();
    for s in 0..3 {
        edges.push((b + s, b + 3));
        edges.push((b + s, b + 4));
    }
    edges.push((target, b));
    Ok(SubcubicGraph::from_edges(n + 5, &edges).expect("unit attachment stays subcubic"))
}

/// Builds the bad graph a spec describes, along with its distinguished sets.
///
/// Vertex layout: 0 is the root; unit `j` (1-based) occupies
/// `1+5(j-1) .. 6+5(j-1)` as core, two canonical slots, then the two
/// interior vertices.
pub fn build_bad(spec: &BadGraphSpec) -> Result<BadGraphArtifacts, FamilyError> {
    let invalid = |reason: String| FamilyError::InvalidSpec { reason };
    if spec.k == 0 {
        return Err(invalid("unit count must be at least 1".into()));
    }
    if spec.attachments.len() != spec.k - 1 {
        return Err(invalid(format!(
            "{} units need {} attachment targets, got {}",
            spec.k,
            spec.k - 1,
            spec.attachments.len()
        )));
    }
    let mut g = SubcubicGraph::from_edges(
        6,
        &[(0, 1), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
    )
    .expect("base unit");
    for (slot, &target) in spec.attachments.iter().enumerate() {
        let unit = slot + 2;
        g = apply_o1(&g, target).map_err(|e| match e {
            FamilyError::Graph(GraphError::VertexOutOfRange { v, n }) => invalid(format!(
                "unit {unit} targets vertex {v}, but only {n} vertices exist at that step"
            )),
            FamilyError::AttachmentDegreeTooHigh { vertex, degree } => invalid(format!(
                "unit {unit} targets vertex {vertex}, which already has degree {degree}"
            )),
            other => other,
        })?;
    }
    let mut labels = vec!["r".to_string()];
    for j in 1..=spec.k {
        labels.extend(["c", "a", "b", "x", "y"].iter().map(|p| format!("{p}{j}")));
    }
    let graph = g.with_labels(labels);
    let n = graph.n();
    let mut canonical_id_set = VertexSet::empty(n);
    let mut non_canonical_set = VertexSet::empty(n);
    let mut core_set = VertexSet::empty(n);
    canonical_id_set.insert(0);
    for j in 0..spec.k {
        let base = (1 + 5 * j) as u32;
        core_set.insert(base);
        canonical_id_set.insert(base + 1);
        canonical_id_set.insert(base + 2);
        non_canonical_set.insert(base + 3);
        non_canonical_set.insert(base + 4);
    }
    Ok(BadGraphArtifacts {
        graph,
        root: 0,
        canonical_id_set,
        non_canonical_set,
        core_set,
    })
}

/// The base member: one unit plus its pendant root.
pub fn base_b1() -> BadGraphArtifacts {
    build_bad(&BadGraphSpec::base()).expect("base spec is valid")
}

/// Draws a uniformly random valid attachment sequence with `k` units. Every
/// intermediate target is chosen uniformly among the vertices that still
/// have degree at most 2.
pub fn random_bad_spec<R: Rng>(rng: &mut R, k: usize) -> BadGraphSpec {
    assert!(k >= 1, "unit count must be at least 1");
    let mut degrees = vec![1usize, 3, 2, 2, 3, 3];
    let mut attachments = Vec::with_capacity(k - 1);
    for _ in 2..=k {
        let open: Vec<u32> = (0..degrees.len() as u32)
            .filter(|&v| degrees[v as usize] <= 2)
            .collect();
        let target = open[rng.gen_range(0..open.len())];
        attachments.push(target);
        degrees[target as usize] += 1;
        degrees.extend([3, 2, 2, 3, 3]);
    }
    BadGraphSpec { k, attachments }
}

/// How a troublesome template hooks into its host: type 1 keeps the root at
/// degree 2 (one stub, at the second link), type 2 gives the root a stub of
/// its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TroublesomeKind {
    Type1,
    Type2,
}

impl TroublesomeKind {
    pub fn stub_count(self) -> usize {
        match self {
            TroublesomeKind::Type1 => 1,
            TroublesomeKind::Type2 => 2,
        }
    }
}

/// A standalone troublesome fragment. The fragment is a root-degree-1 bad
/// graph `B` plus one extra vertex `v2` adjacent to the root `v1` and to a
/// degree-2 vertex `w2` of `B`. When embedded, `v2` always carries one edge
/// to the rest of the host; for type 2, `v1` carries one as well.
#[derive(Clone, Debug)]
pub struct TroublesomeTemplate {
    pub graph: SubcubicGraph,
    pub v1: u32,
    pub v2: u32,
    pub w2: u32,
    pub kind: TroublesomeKind,
    pub spec: BadGraphSpec,
}

impl TroublesomeTemplate {
    /// Fragment vertices that carry an edge into the host, in the order
    /// [`embed_template`] expects their targets.
    pub fn stubs(&self) -> Vec<u32> {
        match self.kind {
            TroublesomeKind::Type1 => vec![self.v2],
            TroublesomeKind::Type2 => vec![self.v1, self.v2],
        }
    }
}

/// Builds a troublesome template over the bad graph `spec` describes,
/// picking the smallest-index degree-2 vertex as `w2`.
pub fn build_troublesome(
    kind: TroublesomeKind,
    spec: &BadGraphSpec,
) -> Result<TroublesomeTemplate, FamilyError> {
    let artifacts = build_bad(spec)?;
    let w2 = artifacts
        .graph
        .vertices()
        .find(|&v| artifacts.graph.degree(v) == 2)
        .expect("bad graphs have degree-2 vertices");
    troublesome_over(kind, spec, artifacts, w2)
}

/// Same as [`build_troublesome`] with an explicit `w2`, which must have
/// degree 2 in the underlying bad graph.
pub fn build_troublesome_at(
    kind: TroublesomeKind,
    spec: &BadGraphSpec,
    w2: u32,
) -> Result<TroublesomeTemplate, FamilyError> {
    let artifacts = build_bad(spec)?;
    troublesome_over(kind, spec, artifacts, w2)
}

fn troublesome_over(
    kind: TroublesomeKind,
    spec: &BadGraphSpec,
    artifacts: BadGraphArtifacts,
    w2: u32,
) -> Result<TroublesomeTemplate, FamilyError> {
    if artifacts.subfamily() != 1 {
        return Err(FamilyError::SpecNotInB1 {
            root_degree: artifacts.subfamily(),
        });
    }
    let b = artifacts.graph;
    if (w2 as usize) >= b.n() || b.degree(w2) != 2 {
        return Err(FamilyError::InvalidSpec {
            reason: format!("second link must attach to a degree-2 vertex, got {w2}"),
        });
    }
    let v1 = artifacts.root;
    let v2 = b.n() as u32;
    let mut edges = b.edges();
    edges.push((v1, v2));
    edges.push((w2, v2));
    let labels = (0..b.n() as u32)
        .map(|v| b.label(v).expect("bad graphs are labeled").to_string())
        .chain(std::iter::once("v2".to_string()))
        .collect();
    let graph = SubcubicGraph::from_edges(b.n() + 1, &edges)
        .expect("link vertex fits")
        .with_labels(labels);
    Ok(TroublesomeTemplate {
        graph,
        v1,
        v2,
        w2,
        kind,
        spec: spec.clone(),
    })
}

/// Disjoint union of `host` and the template fragment, plus one edge per
/// stub: stub `i` of the template is joined to `stub_targets[i]` in the
/// host. Fragment vertices land at `host.n()..` and keep their labels under
/// a `t{offset}:` prefix, so planted occurrences stay identifiable.
pub fn embed_template(
    host: &SubcubicGraph,
    template: &TroublesomeTemplate,
    stub_targets: &[u32],
) -> Result<SubcubicGraph, FamilyError> {
    let stubs = template.stubs();
    if stubs.len() != stub_targets.len() {
        return Err(FamilyError::StubArityMismatch {
            expected: stubs.len(),
            got: stub_targets.len(),
        });
    }
    let offset = host.n() as u32;
    let mut edges = host.edges();
    edges.extend(
        template
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| (a + offset, b + offset)),
    );
    for (&stub, &target) in stubs.iter().zip(stub_targets) {
        if (target as usize) >= host.n() {
            return Err(GraphError::VertexOutOfRange {
                v: target,
                n: host.n(),
            }
            .into());
        }
        edges.push((target, stub + offset));
    }
    let composite = SubcubicGraph::from_edges(host.n() + template.graph.n(), &edges)?;
    let labels = (0..host.n() as u32)
        .map(|v| {
            host.label(v)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("h{v}"))
        })
        .chain((0..template.graph.n() as u32).map(|v| {
            format!(
                "t{offset}:{}",
                template.graph.label(v).expect("templates are labeled")
            )
        }))
        .collect();
    Ok(composite.with_labels(labels))
}

/// Names for the six fixed equality instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleId {
    Fig9a,
    Fig9b,
    F1,
    F2,
    F3,
    Fig11,
}

impl ExampleId {
    pub const ALL: [ExampleId; 6] = [
        ExampleId::Fig9a,
        ExampleId::Fig9b,
        ExampleId::F1,
        ExampleId::F2,
        ExampleId::F3,
        ExampleId::Fig11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::Fig9a => "fig9a",
            ExampleId::Fig9b => "fig9b",
            ExampleId::F1 => "f1",
            ExampleId::F2 => "f2",
            ExampleId::F3 => "f3",
            ExampleId::Fig11 => "fig11",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fig9a" => Ok(ExampleId::Fig9a),
            "fig9b" => Ok(ExampleId::Fig9b),
            "f1" | "fig10a" => Ok(ExampleId::F1),
            "f2" | "fig10b" => Ok(ExampleId::F2),
            "f3" | "fig10c" => Ok(ExampleId::F3),
            "fig11" => Ok(ExampleId::Fig11),
            other => Err(format!("unknown example '{other}'")),
        }
    }
}

/// The fixed equality instance with the given name, vertex-labeled.
pub fn example_graph(id: ExampleId) -> SubcubicGraph {
    match id {
        ExampleId::Fig9a => assemble(
            &[
                "v1", "v2", "v3", "v4", "v5", "u1", "u2", "u3", "u4", "u5", "w1", "w2", "z1",
                "z2",
            ],
            &[
                ("v1", "v2"),
                ("v2", "v5"),
                ("v5", "v4"),
                ("v4", "v1"),
                ("v1", "v3"),
                ("v3", "v5"),
                ("u1", "u2"),
                ("u2", "u5"),
                ("u5", "u4"),
                ("u4", "u1"),
                ("u1", "u3"),
                ("u3", "u5"),
                ("v2", "w1"),
                ("w1", "z1"),
                ("z1", "u2"),
                ("v4", "w2"),
                ("w2", "z2"),
                ("z2", "u4"),
                ("w1", "w2"),
                ("z1", "z2"),
            ],
        ),
        ExampleId::Fig9b => assemble(
            &[
                "v1", "v2", "v3", "v4", "v5", "u1", "u2", "u3", "u4", "u5", "w1", "w2", "z1",
                "z2", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4",
            ],
            &[
                ("v1", "v2"),
                ("v2", "v5"),
                ("v5", "v4"),
                ("v4", "v1"),
                ("v1", "v3"),
                ("v3", "v5"),
                ("u1", "u2"),
                ("u2", "u5"),
                ("u5", "u4"),
                ("u4", "u1"),
                ("u1", "u3"),
                ("u3", "u5"),
                ("v2", "w1"),
                ("w1", "z1"),
                ("z1", "x1"),
                ("x1", "x2"),
                ("x2", "x3"),
                ("x3", "x4"),
                ("x4", "u2"),
                ("v4", "w2"),
                ("w2", "z2"),
                ("z2", "y1"),
                ("y1", "y2"),
                ("y2", "y3"),
                ("y3", "y4"),
                ("y4", "u4"),
                ("w1", "w2"),
                ("z1", "z2"),
                ("x1", "y2"),
                ("x2", "y1"),
                ("x3", "y3"),
                ("x4", "y4"),
            ],
        ),
        ExampleId::F1 => assemble(
            &[
                "v1", "v2", "v3", "v4", "v5", "u1", "u2", "u3", "u4", "u5", "w1", "w2",
            ],
            &[
                ("v1", "v2"),
                ("v2", "v5"),
                ("v5", "v4"),
                ("v4", "v1"),
                ("v1", "v3"),
                ("v3", "v5"),
                ("u1", "u2"),
                ("u2", "u5"),
                ("u5", "u4"),
                ("u4", "u1"),
                ("u1", "u3"),
                ("u3", "u5"),
                ("v2", "w1"),
                ("w1", "u2"),
                ("v4", "w2"),
                ("w2", "u4"),
                ("w1", "w2"),
            ],
        ),
        ExampleId::F2 => assemble(
            &["w1", "v1", "v2", "w2", "u1", "u2", "u3", "u4", "u5"],
            &[
                ("w1", "v1"),
                ("v1", "v2"),
                ("v2", "w2"),
                ("u1", "u2"),
                ("u2", "u5"),
                ("u5", "u4"),
                ("u4", "u1"),
                ("u1", "u3"),
                ("u3", "u5"),
                ("w1", "u2"),
                ("w2", "u4"),
                ("w1", "w2"),
            ],
        ),
        ExampleId::F3 => assemble(
            &[
                "v01", "v04", "v1", "v2", "v3", "v4", "u1", "u2", "u3", "u4", "u5",
            ],
            &[
                ("v1", "v2"),
                ("v3", "v4"),
                ("v1", "v4"),
                ("v2", "v3"),
                ("u1", "u2"),
                ("u2", "u5"),
                ("u5", "u4"),
                ("u4", "u1"),
                ("u1", "u3"),
                ("u3", "u5"),
                ("v2", "u2"),
                ("v3", "u4"),
                ("v1", "v01"),
                ("v4", "v04"),
            ],
        ),
        ExampleId::Fig11 => {
            let mut names: Vec<String> = Vec::new();
            let mut edges: Vec<(String, String)> = Vec::new();
            let mut outer = |p: &str, q: &str, r: &str| {
                for (pre, count) in [(p, 4), (q, 6), (r, 4)] {
                    names.extend((1..=count).map(|t| format!("{pre}{t}")));
                }
                let e = |a: String, b: String| (a, b);
                edges.extend([
                    e(format!("{p}1"), format!("{p}2")),
                    e(format!("{p}2"), format!("{p}3")),
                    e(format!("{p}3"), format!("{p}4")),
                    e(format!("{q}1"), format!("{q}2")),
                    e(format!("{q}2"), format!("{q}3")),
                    e(format!("{q}4"), format!("{q}5")),
                    e(format!("{q}5"), format!("{q}6")),
                    e(format!("{r}1"), format!("{r}2")),
                    e(format!("{r}2"), format!("{r}3")),
                    e(format!("{r}3"), format!("{r}4")),
                    e(format!("{p}1"), format!("{q}1")),
                    e(format!("{q}1"), format!("{r}1")),
                    e(format!("{r}1"), format!("{q}3")),
                    e(format!("{q}3"), format!("{p}1")),
                    e(format!("{p}2"), format!("{r}2")),
                    e(format!("{p}3"), format!("{r}3")),
                    e(format!("{p}4"), format!("{q}4")),
                    e(format!("{q}4"), format!("{r}4")),
                    e(format!("{r}4"), format!("{q}6")),
                    e(format!("{q}6"), format!("{p}4")),
                ]);
            };
            outer("a", "b", "c");
            outer("g", "h", "i");
            for pre in ["d", "e", "f"] {
                names.extend((1..=6).map(|t| format!("{pre}{t}")));
                edges.push((format!("{pre}1"), format!("{pre}2")));
                edges.push((format!("{pre}2"), format!("{pre}3")));
                edges.push((format!("{pre}4"), format!("{pre}5")));
                edges.push((format!("{pre}5"), format!("{pre}6")));
            }
            for t in [1, 2, 5, 6] {
                edges.push((format!("d{t}"), format!("f{t}")));
            }
            for (a, b) in [
                ("d3", "e1"),
                ("e1", "f3"),
                ("f3", "e3"),
                ("e3", "d3"),
                ("d4", "e4"),
                ("e4", "f4"),
                ("f4", "e6"),
                ("e6", "d4"),
                ("d1", "b2"),
                ("d6", "b5"),
                ("f1", "h2"),
                ("f6", "h5"),
            ] {
                edges.push((a.to_string(), b.to_string()));
            }
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let edge_refs: Vec<(&str, &str)> = edges
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .collect();
            assemble(&name_refs, &edge_refs)
        }
    }
}

/// Names for the three extremal cubic families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremalId {
    Fig2a,
    Fig2b,
    Fig3,
}

impl ExtremalId {
    pub const ALL: [ExtremalId; 3] = [ExtremalId::Fig2a, ExtremalId::Fig2b, ExtremalId::Fig3];

    pub fn name(self) -> &'static str {
        match self {
            ExtremalId::Fig2a => "fig2a",
            ExtremalId::Fig2b => "fig2b",
            ExtremalId::Fig3 => "fig3",
        }
    }

    /// Vertices per block.
    pub fn block_order(self) -> usize {
        match self {
            ExtremalId::Fig2a | ExtremalId::Fig2b => 8,
            ExtremalId::Fig3 => 16,
        }
    }
}

impl fmt::Display for ExtremalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExtremalId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fig2a" => Ok(ExtremalId::Fig2a),
            "fig2b" => Ok(ExtremalId::Fig2b),
            "fig3" => Ok(ExtremalId::Fig3),
            other => Err(format!("unknown extremal family '{other}'")),
        }
    }
}

/// A member of one of the extremal cubic families, assembled from `blocks`
/// repeating blocks closed into a ring. Every emitted graph is validated on
/// the spot: it must be connected, 3-regular, and have independent
/// domination number exactly 3n/8, otherwise the call reports
/// [`FamilyError::ReconstructionFailure`] instead of returning a wrong
/// family member. The solver check makes construction cost grow with
/// `blocks`.
pub fn extremal_family(id: ExtremalId, blocks: usize) -> Result<SubcubicGraph, FamilyError> {
    if blocks < 2 {
        return Err(FamilyError::InvalidBlockCount {
            family: id,
            blocks,
            minimum: 2,
        });
    }
    let g = match id {
        ExtremalId::Fig2a => fig2a(blocks),
        ExtremalId::Fig2b => fig2b(blocks),
        ExtremalId::Fig3 => fig3(blocks),
    };
    let fail = |reason: String| FamilyError::ReconstructionFailure {
        family: id,
        blocks,
        reason,
    };
    if !g.is_connected() {
        return Err(fail("emitted graph is not connected".into()));
    }
    if !g.is_cubic() {
        return Err(fail("emitted graph is not 3-regular".into()));
    }
    let n = g.n();
    let i = solver::independent_domination_number(&g).value;
    if 8 * i != 3 * n {
        return Err(fail(format!(
            "independent domination number is {i}, expected {}",
            3 * n / 8
        )));
    }
    Ok(g)
}

fn ring_graph(
    blocks: usize,
    block_order: usize,
    label: impl Fn(usize) -> String,
    mut block_edges: impl FnMut(&mut Vec<(u32, u32)>, usize, usize),
) -> SubcubicGraph {
    let n = blocks * block_order;
    let mut edges = Vec::new();
    for j in 0..blocks {
        block_edges(&mut edges, j, blocks);
    }
    let labels = (0..n).map(label).collect();
    SubcubicGraph::from_edges(n, &edges)
        .expect("block tables are consistent")
        .with_labels(labels)
}

/// Ladder-of-squares family: each block is two 4-paths cross-linked at the
/// ends and matched in the middle, chained into a ring on both sides.
fn fig2a(blocks: usize) -> SubcubicGraph {
    let l = |j: usize, t: u32| (8 * j) as u32 + t;
    let r = |j: usize, t: u32| (8 * j) as u32 + 4 + t;
    ring_graph(
        blocks,
        8,
        |v| format!("{}{}{}", if v % 8 < 4 { "L" } else { "R" }, v / 8, v % 4),
        |edges, j, m| {
            let jn = (j + 1) % m;
            for t in 0..3 {
                edges.push((l(j, t), l(j, t + 1)));
                edges.push((r(j, t), r(j, t + 1)));
            }
            edges.push((l(j, 0), r(j, 1)));
            edges.push((l(j, 1), r(j, 0)));
            edges.push((l(j, 2), r(j, 2)));
            edges.push((l(j, 3), r(j, 3)));
            edges.push((l(j, 3), l(jn, 0)));
            edges.push((r(j, 3), r(jn, 0)));
        },
    )
}

/// Bipartite-pod family: each block hangs a complete bipartite pod off a
/// 3-path, chained into a single ring.
fn fig2b(blocks: usize) -> SubcubicGraph {
    let l = |j: usize, t: u32| (8 * j) as u32 + t;
    let m_ = |j: usize, t: u32| (8 * j) as u32 + 3 + t;
    let r = |j: usize, t: u32| (8 * j) as u32 + 6 + t;
    ring_graph(
        blocks,
        8,
        |v| {
            let t = v % 8;
            let (part, idx) = match t {
                0..=2 => ("l", t),
                3..=5 => ("m", t - 3),
                _ => ("r", t - 6),
            };
            format!("{part}{}{idx}", v / 8)
        },
        |edges, j, m| {
            let jn = (j + 1) % m;
            edges.push((l(j, 0), l(j, 1)));
            edges.push((l(j, 1), l(j, 2)));
            for t in 0..3 {
                edges.push((l(j, t), m_(j, t)));
                edges.push((m_(j, t), r(j, 0)));
                edges.push((m_(j, t), r(j, 1)));
            }
            edges.push((l(j, 2), l(jn, 0)));
        },
    )
}

/// Double-pod family: each 16-vertex block carries two complete bipartite
/// pods tied through a 4-cycle, with a bottom rail, chained into a ring.
fn fig3(blocks: usize) -> SubcubicGraph {
    const SL: u32 = 0;
    const P: [u32; 5] = [1, 2, 3, 4, 5];
    const Q: [u32; 4] = [6, 7, 8, 9];
    const R: [u32; 5] = [10, 11, 12, 13, 14];
    const SR: u32 = 15;
    let at = |j: usize, t: u32| (16 * j) as u32 + t;
    ring_graph(
        blocks,
        16,
        |v| {
            let (j, t) = (v / 16, (v % 16) as u32);
            match t {
                SL => format!("sL{j}"),
                SR => format!("sR{j}"),
                1..=5 => format!("p{j}{t}"),
                6..=9 => format!("q{j}{}", t - 5),
                _ => format!("r{j}{}", t - 9),
            }
        },
        |edges, j, m| {
            let jn = (j + 1) % m;
            edges.push((at(j, SL), at(j, P[0])));
            for s in [P[0], P[3], P[4]] {
                edges.push((at(j, s), at(j, P[1])));
                edges.push((at(j, s), at(j, P[2])));
            }
            edges.push((at(j, Q[0]), at(j, Q[1])));
            edges.push((at(j, Q[1]), at(j, Q[3])));
            edges.push((at(j, Q[3]), at(j, Q[2])));
            edges.push((at(j, Q[2]), at(j, Q[0])));
            edges.push((at(j, P[3]), at(j, Q[1])));
            edges.push((at(j, P[4]), at(j, Q[0])));
            edges.push((at(j, Q[2]), at(j, R[3])));
            edges.push((at(j, Q[3]), at(j, R[4])));
            for s in [R[0], R[3], R[4]] {
                edges.push((at(j, s), at(j, R[1])));
                edges.push((at(j, s), at(j, R[2])));
            }
            edges.push((at(j, SR), at(j, R[0])));
            edges.push((at(j, SL), at(j, SR)));
            edges.push((at(j, SR), at(jn, SL)));
        },
    )
}
