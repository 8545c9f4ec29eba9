//! Admissibility, matching covered graphs, bricks and braces, tight and
//! separating cuts, removable edges and removable doubletons.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{for_each_subset_of_size, Cut, EdgeId, Multigraph, VertexSet};
use crate::matching::{adjacency, has_perfect_within};

/// Exhaustive cut enumeration refuses graphs above this size.
pub const MAX_CUT_ENUMERATION_VERTICES: usize = 16;

pub fn is_admissible(g: &Multigraph, e: EdgeId) -> bool {
    let Some(edge) = g.edge(e) else { return false };
    let adj = adjacency(g, &[]);
    has_perfect_within(&adj, g.vertices().difference(edge.ends()))
}

/// Connected, at least two vertices, every edge in some perfect matching.
pub fn is_matching_covered(g: &Multigraph) -> bool {
    mc_without(g, &[])
}

/// Whether `G − removed` is matching covered. Edges with the same ends are
/// tested once.
pub(crate) fn mc_without(g: &Multigraph, removed: &[EdgeId]) -> bool {
    let n = g.vertex_count();
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let adj = adjacency(g, removed);
    if !connected(&adj, g.vertices()) {
        return false;
    }
    let mut tested = vec![0u64; n];
    for e in g.edges() {
        if removed.contains(&e.id) || tested[e.u] >> e.v & 1 == 1 {
            continue;
        }
        tested[e.u] |= 1 << e.v;
        if !has_perfect_within(&adj, g.vertices().difference(e.ends())) {
            return false;
        }
    }
    true
}

fn connected(adj: &[u64], alive: VertexSet) -> bool {
    let Some(start) = alive.first() else {
        return true;
    };
    let alive = alive.bits();
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in VertexSet::from_bits(frontier) {
            next |= adj[v] & alive;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == alive
}

/// Brick test by the Edmonds–Lovász–Plummer characterization: 3-connected
/// and `G − x − y` has a perfect matching for all distinct `x, y`.
pub fn is_brick(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n < 4 || n % 2 == 1 || !g.is_k_connected(3) {
        return false;
    }
    let adj = adjacency(g, &[]);
    let all = g.vertices();
    (0..n).all(|x| (x + 1..n).all(|y| has_perfect_within(&adj, all.without(x).without(y))))
}

/// Brick test from the definition: nonbipartite, matching covered and free
/// of nontrivial tight cuts.
pub fn is_brick_by_tight_cuts(g: &Multigraph) -> Result<bool> {
    check_cut_enumeration_size(g)?;
    Ok(!g.is_bipartite() && is_matching_covered(g) && first_nontrivial_tight_cut(g).is_none())
}

/// Bipartite, matching covered, and free of nontrivial tight cuts.
pub fn is_brace(g: &Multigraph) -> Result<bool> {
    check_cut_enumeration_size(g)?;
    Ok(g.is_bipartite() && is_matching_covered(g) && first_nontrivial_tight_cut(g).is_none())
}

fn check_cut_enumeration_size(g: &Multigraph) -> Result<()> {
    if g.vertex_count() > MAX_CUT_ENUMERATION_VERTICES {
        return Err(Error::TooLarge {
            n: g.vertex_count(),
            max: MAX_CUT_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// Every PM meets `∂(X)` exactly once. Tested by pairwise co-extendability:
/// no two disjoint boundary edges extend to a common perfect matching.
pub fn is_tight_cut(g: &Multigraph, x: VertexSet) -> Result<bool> {
    check_proper_subset(g, x)?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    Ok(tight_unchecked(g, &adjacency(g, &[]), x))
}

pub(crate) fn tight_unchecked(g: &Multigraph, adj: &[u64], x: VertexSet) -> bool {
    if x.len() % 2 == 0 {
        return false;
    }
    let all = g.vertices();
    let boundary: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| x.contains(e.u) != x.contains(e.v))
        .collect();
    for (i, e) in boundary.iter().enumerate() {
        for f in &boundary[i + 1..] {
            let ends = e.ends().union(f.ends());
            if ends.len() == 4 && has_perfect_within(adj, all.difference(ends)) {
                return false;
            }
        }
    }
    true
}

fn check_proper_subset(g: &Multigraph, x: VertexSet) -> Result<()> {
    if x.is_empty() || !x.is_subset(g.vertices()) || x == g.vertices() {
        return Err(Error::InvalidVertexSet(format!(
            "{x:?} is not a nonempty proper subset of the vertex set"
        )));
    }
    Ok(())
}

/// Both cut-contractions `G/X` and `G/X̄` are matching covered.
pub fn is_separating_cut(g: &Multigraph, x: VertexSet) -> Result<bool> {
    check_proper_subset(g, x)?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    separating_unchecked(g, x)
}

pub(crate) fn separating_unchecked(g: &Multigraph, x: VertexSet) -> Result<bool> {
    let (gx, _) = g.contract(x)?;
    if !is_matching_covered(&gx) {
        return Ok(false);
    }
    let (gxbar, _) = g.contract(x.complement(g.vertex_count()))?;
    Ok(is_matching_covered(&gxbar))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutClassification {
    pub cut: Cut,
    pub is_trivial: bool,
    pub is_tight: bool,
    pub is_separating: bool,
    pub is_good: bool,
}

pub fn classify_cut(g: &Multigraph, x: VertexSet) -> Result<CutClassification> {
    check_proper_subset(g, x)?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let is_tight = tight_unchecked(g, &adjacency(g, &[]), x);
    let is_separating = separating_unchecked(g, x)?;
    if is_tight && !is_separating {
        return Err(Error::Inconsistent(format!(
            "cut {x:?} is tight but not separating"
        )));
    }
    let cut = g.cut(x);
    Ok(CutClassification {
        is_trivial: cut.is_trivial(),
        cut,
        is_tight,
        is_separating,
        is_good: is_separating && !is_tight,
    })
}

/// Nontrivial tight cuts, one shore per cut: the shore avoiding vertex 0.
pub fn nontrivial_tight_cuts(g: &Multigraph) -> Result<Vec<VertexSet>> {
    check_cut_enumeration_size(g)?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let adj = adjacency(g, &[]);
    let mut out = Vec::new();
    for_each_odd_shore(g, &mut |x| {
        if tight_unchecked(g, &adj, x) {
            out.push(x);
        }
        true
    });
    Ok(out)
}

fn first_nontrivial_tight_cut(g: &Multigraph) -> Option<VertexSet> {
    let adj = adjacency(g, &[]);
    let mut found = None;
    for_each_odd_shore(g, &mut |x| {
        if tight_unchecked(g, &adj, x) {
            found = Some(x);
            return false;
        }
        true
    });
    found
}

/// Odd `X ⊆ V − {0}` with `3 ≤ |X| ≤ n − 3`, in order of size then bits.
/// The callback returns `false` to stop.
fn for_each_odd_shore(g: &Multigraph, f: &mut dyn FnMut(VertexSet) -> bool) {
    let n = g.vertex_count();
    if n < 6 {
        return;
    }
    let universe = g.vertices().without(0);
    let mut go = true;
    for size in (3..=n - 3).step_by(2) {
        for_each_subset_of_size(universe, size, &mut |x| {
            if go {
                go = f(x);
            }
        });
        if !go {
            return;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovabilityReport {
    pub removable: Vec<EdgeId>,
    pub nonremovable: Vec<EdgeId>,
    pub doubletons: Vec<(EdgeId, EdgeId)>,
}

/// Removable edges of a matching covered graph, computed once per parallel
/// class.
pub fn removable_edges(g: &Multigraph) -> Result<Vec<EdgeId>> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    Ok(removable_unchecked(g))
}

pub(crate) fn removable_unchecked(g: &Multigraph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut class_result: Vec<Vec<Option<bool>>> = vec![vec![None; n]; n];
    let mut out = Vec::new();
    for e in g.edges() {
        let r = match class_result[e.u][e.v] {
            Some(r) => r,
            None => {
                let r = mc_without(g, &[e.id]);
                class_result[e.u][e.v] = Some(r);
                r
            }
        };
        if r {
            out.push(e.id);
        }
    }
    out
}

/// All pairs of nonremovable edges whose joint removal leaves a matching
/// covered graph, sorted. Adjacent pairs are not excluded a priori.
pub fn removable_doubletons(g: &Multigraph) -> Result<Vec<(EdgeId, EdgeId)>> {
    Ok(removability(g)?.doubletons)
}

pub fn removability(g: &Multigraph) -> Result<RemovabilityReport> {
    let removable = removable_edges(g)?;
    let nonremovable: Vec<EdgeId> = g.edge_ids().filter(|e| !removable.contains(e)).collect();
    let doubletons = doubletons_among(g, &nonremovable);
    Ok(RemovabilityReport {
        removable,
        nonremovable,
        doubletons,
    })
}

pub(crate) fn doubletons_among(g: &Multigraph, nonremovable: &[EdgeId]) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for (i, &a) in nonremovable.iter().enumerate() {
        for &b in &nonremovable[i + 1..] {
            if mc_without(g, &[a, b]) {
                out.push((a, b));
            }
        }
    }
    out
}
