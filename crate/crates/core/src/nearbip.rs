//! Near-bipartite graphs: doubleton witnesses, the type I / type II split of
//! nonremovable edges, and executable checks of the removable-edge bounds
//! for near-bipartite bricks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, named, Bipartition, EdgeId, Multigraph, VertexSet};
use crate::structure::{is_brick, is_matching_covered, mc_without, removable_unchecked};
use crate::triladder::is_triladder;

/// A pair `{e1, e2}` such that `H = G − {e1, e2}` is bipartite and matching
/// covered, with `e1` inside `U` and `e2` inside `W`. `e1` is the edge of
/// lower id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubletonWitness {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub bipartition: Bipartition,
}

impl DoubletonWitness {
    pub fn side_u(&self) -> VertexSet {
        self.bipartition.side_u
    }

    pub fn side_w(&self) -> VertexSet {
        self.bipartition.side_w
    }

    /// `H = G − {e1, e2}` with surviving edge ids.
    pub fn residual(&self, g: &Multigraph) -> Result<Multigraph> {
        g.without_edges(&[self.e1, self.e2])
    }

    /// Checks the witness against `g` from scratch.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let e1 = g.try_edge(self.e1)?;
        let e2 = g.try_edge(self.e2)?;
        let (u, w) = (self.side_u(), self.side_w());
        let fail = |msg: &str| Err(Error::Precondition(format!("invalid witness: {msg}")));
        if !u.is_disjoint(w) || u.union(w) != g.vertices() {
            return fail("sides do not partition the vertex set");
        }
        if !e1.ends().is_subset(u) || !e2.ends().is_subset(w) {
            return fail("e1 must lie inside U and e2 inside W");
        }
        let crossing = g
            .edges()
            .iter()
            .filter(|e| e.id != self.e1 && e.id != self.e2)
            .all(|e| u.contains(e.u) != u.contains(e.v));
        if !crossing {
            return fail("an edge other than e1, e2 lies inside a side");
        }
        if !mc_without(g, &[self.e1, self.e2]) {
            return fail("G − {e1, e2} is not matching covered");
        }
        Ok(())
    }
}

/// Every doubleton witness of a nonbipartite matching covered graph, in
/// order of `(e1, e2)`. Empty exactly when `g` is not near-bipartite.
pub fn near_bipartite_witnesses(g: &Multigraph) -> Result<Vec<DoubletonWitness>> {
    if g.is_bipartite() {
        return Err(Error::Precondition(
            "near-bipartiteness is defined for nonbipartite graphs".into(),
        ));
    }
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    Ok(witnesses_unchecked(g))
}

pub(crate) fn witnesses_unchecked(g: &Multigraph) -> Vec<DoubletonWitness> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let Ok(h) = g.without_edges(&[a.id, b.id]) else {
                continue;
            };
            let Some(bip) = h.bipartition() else { continue };
            // both removed edges must lie inside sides, on opposite sides
            let a_in_u = a.ends().is_subset(bip.side_u);
            let a_in_w = a.ends().is_subset(bip.side_w);
            let b_in_u = b.ends().is_subset(bip.side_u);
            let b_in_w = b.ends().is_subset(bip.side_w);
            let bipartition = if a_in_u && b_in_w {
                bip
            } else if a_in_w && b_in_u {
                bip.swapped()
            } else {
                continue;
            };
            if !mc_without(g, &[a.id, b.id]) {
                continue;
            }
            out.push(DoubletonWitness {
                e1: a.id,
                e2: b.id,
                bipartition,
            });
        }
    }
    out
}

pub fn is_near_bipartite(g: &Multigraph) -> bool {
    !g.is_bipartite() && is_matching_covered(g) && !witnesses_unchecked(g).is_empty()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeType {
    /// Nonremovable in `G`, removable in `H`.
    TypeI,
    /// Nonremovable in both `G` and `H`.
    TypeII,
}

/// Type labels of the nonremovable edges of `G` outside the witness pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeTypeMap {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub labels: Vec<(EdgeId, EdgeType)>,
}

impl EdgeTypeMap {
    pub fn get(&self, e: EdgeId) -> Option<EdgeType> {
        self.labels.iter().find(|(id, _)| *id == e).map(|&(_, t)| t)
    }
}

pub fn classify_nonremovable(g: &Multigraph, witness: &DoubletonWitness) -> Result<EdgeTypeMap> {
    witness.validate(g)?;
    let removable_g = removable_unchecked(g);
    Ok(classify_with(g, witness, &removable_g))
}

fn classify_with(g: &Multigraph, witness: &DoubletonWitness, removable_g: &[EdgeId]) -> EdgeTypeMap {
    let h = witness.residual(g).expect("witness edges exist");
    let removable_h = removable_unchecked(&h);
    let labels = g
        .edge_ids()
        .filter(|e| *e != witness.e1 && *e != witness.e2 && !removable_g.contains(e))
        .map(|e| {
            let t = if removable_h.contains(&e) {
                EdgeType::TypeI
            } else {
                EdgeType::TypeII
            };
            (e, t)
        })
        .collect();
    EdgeTypeMap {
        e1: witness.e1,
        e2: witness.e2,
        labels,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexTypeCount {
    pub vertex: usize,
    pub type_i: usize,
    pub type_ii: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCountReport {
    pub per_vertex: Vec<VertexTypeCount>,
    /// Vertices with more than one type-I or more than two type-II edges.
    pub violations: Vec<VertexTypeCount>,
}

pub fn type_count_bounds(g: &Multigraph, witness: &DoubletonWitness) -> Result<TypeCountReport> {
    let map = classify_nonremovable(g, witness)?;
    Ok(type_counts(g, &map))
}

pub(crate) fn type_counts(g: &Multigraph, map: &EdgeTypeMap) -> TypeCountReport {
    let mut per_vertex: Vec<VertexTypeCount> = (0..g.vertex_count())
        .map(|vertex| VertexTypeCount {
            vertex,
            type_i: 0,
            type_ii: 0,
        })
        .collect();
    for &(e, t) in &map.labels {
        let edge = g.edge(e).expect("labelled edge exists");
        for v in [edge.u, edge.v] {
            match t {
                EdgeType::TypeI => per_vertex[v].type_i += 1,
                EdgeType::TypeII => per_vertex[v].type_ii += 1,
            }
        }
    }
    let violations = per_vertex
        .iter()
        .filter(|c| c.type_i > 1 || c.type_ii > 2)
        .cloned()
        .collect();
    TypeCountReport {
        per_vertex,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionViolation {
    pub set: VertexSet,
    pub neighbourhood: VertexSet,
}

/// Subsets `S` of one side, `|S| ≤ max_size`, holding at most one end of the
/// witness edge on that side, with `2 ≤ |N(S)| < |S| + 2`.
pub fn expansion_violations(
    g: &Multigraph,
    witness: &DoubletonWitness,
    max_size: usize,
) -> Result<Vec<ExpansionViolation>> {
    witness.validate(g)?;
    let mut out = Vec::new();
    for (side, e) in [(witness.side_u(), witness.e1), (witness.side_w(), witness.e2)] {
        let ends = g.try_edge(e)?.ends();
        for size in 1..=max_size.min(side.len()) {
            crate::graph::for_each_subset_of_size(side, size, &mut |s| {
                if s.intersection(ends).len() > 1 {
                    return;
                }
                let nb = g.neighborhood(s);
                if nb.len() >= 2 && nb.len() < s.len() + 2 {
                    out.push(ExpansionViolation {
                        set: s,
                        neighbourhood: nb,
                    });
                }
            });
        }
    }
    Ok(out)
}

fn is_k4(g: &Multigraph) -> bool {
    g.vertex_count() == 4
        && g.edge_count() == 6
        && canonical_form(g).ok() == canonical_form(&named::k4()).ok()
}

/// Precondition shared by the two bound checks: a near-bipartite brick
/// other than `K4`. Returns its witnesses.
pub fn require_near_bipartite_brick(g: &Multigraph) -> Result<Vec<DoubletonWitness>> {
    if is_k4(g) {
        return Err(Error::Precondition("graph is K4".into()));
    }
    if !is_brick(g) {
        return Err(Error::Precondition("graph is not a brick".into()));
    }
    let witnesses = witnesses_unchecked(g);
    if witnesses.is_empty() {
        return Err(Error::Precondition("graph is not near-bipartite".into()));
    }
    Ok(witnesses)
}

/// Outcome of the per-vertex nonremovable-degree check: every vertex other
/// than at most six degree-3 vertices covered by two disjoint triangles is
/// incident with at most two nonremovable edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonremovableDegreeReport {
    pub holds: bool,
    /// Vertices incident with three or more nonremovable edges.
    pub exceptional: VertexSet,
    /// Disjoint triangles covering the exceptional set, when found. A single
    /// triangle is reported when no disjoint pair covers the set.
    pub covering_triangles: Option<Vec<[usize; 3]>>,
    /// Whether two disjoint triangles (not just one) cover the set.
    pub covered_by_triangle_pair: bool,
    /// Some witness has every exceptional vertex in a triangle through its
    /// `e1` or `e2`. Informational.
    pub within_doubleton_triangles: bool,
}

pub fn check_nonremovable_degree(g: &Multigraph) -> Result<NonremovableDegreeReport> {
    let witnesses = require_near_bipartite_brick(g)?;
    let removable = removable_unchecked(g);
    let mut count = vec![0usize; g.vertex_count()];
    for e in g.edges() {
        if !removable.contains(&e.id) {
            count[e.u] += 1;
            count[e.v] += 1;
        }
    }
    let exceptional: VertexSet = (0..g.vertex_count()).filter(|&v| count[v] >= 3).collect();
    let triangles = g.triangles();
    let tri_set = |t: &[usize; 3]| VertexSet::from_iter(*t);
    let mut covering_triangles = None;
    let mut covered_by_triangle_pair = false;
    if exceptional.is_empty() {
        covering_triangles = Some(Vec::new());
    } else {
        'pairs: for (i, a) in triangles.iter().enumerate() {
            for b in &triangles[i + 1..] {
                let (sa, sb) = (tri_set(a), tri_set(b));
                if sa.is_disjoint(sb) && exceptional.is_subset(sa.union(sb)) {
                    covering_triangles = Some(vec![*a, *b]);
                    covered_by_triangle_pair = true;
                    break 'pairs;
                }
            }
        }
        if covering_triangles.is_none() {
            covering_triangles = triangles
                .iter()
                .find(|t| exceptional.is_subset(tri_set(t)))
                .map(|t| vec![*t]);
        }
    }
    let degree_ok = exceptional.iter().all(|v| g.degree(v) == 3);
    let holds = exceptional.len() <= 6 && degree_ok && covering_triangles.is_some();
    let within_doubleton_triangles = witnesses.iter().any(|w| {
        let through: Vec<VertexSet> = triangles
            .iter()
            .map(tri_set)
            .filter(|t| {
                [w.e1, w.e2]
                    .iter()
                    .any(|&e| g.edge(e).is_some_and(|e| e.ends().is_subset(*t)))
            })
            .collect();
        exceptional
            .iter()
            .all(|v| through.iter().any(|t| t.contains(v)))
    });
    Ok(NonremovableDegreeReport {
        holds,
        exceptional,
        covering_triangles,
        covered_by_triangle_pair,
        within_doubleton_triangles,
    })
}

/// Outcome of the removable-edge lower bound check: at least `(n − 6)/2`
/// removable edges, with equality only for tri-ladders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovableBoundReport {
    pub holds: bool,
    pub n: usize,
    pub removable_count: usize,
    pub attains_bound: bool,
    pub is_triladder: bool,
}

pub fn check_removable_bound(g: &Multigraph) -> Result<RemovableBoundReport> {
    require_near_bipartite_brick(g)?;
    let n = g.vertex_count();
    let removable_count = removable_unchecked(g).len();
    let at_least = 2 * removable_count + 6 >= n;
    let attains_bound = 2 * removable_count + 6 == n;
    let is_triladder = is_triladder(g);
    Ok(RemovableBoundReport {
        holds: at_least && (!attains_bound || is_triladder),
        n,
        removable_count,
        attains_bound,
        is_triladder,
    })
}
