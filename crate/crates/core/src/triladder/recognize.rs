use std::collections::HashMap;

use serde::Serialize;

use super::generate::{trace_ridges, Rung};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, named, CanonicalForm, EdgeId, Multigraph, VertexSet};

/// Whether `g` is a tri-ladder: `C̄6`, or a simple cubic graph with a
/// triangle whose contraction is a tri-ladder in which the contracted
/// vertex lies on a triangle (so `g` is that tri-ladder spliced with `K4`
/// at a triangle vertex).
pub fn is_triladder(g: &Multigraph) -> bool {
    let cbar6 = canonical_form(&named::cbar6()).expect("small");
    let mut memo = HashMap::new();
    peelable(g, &cbar6, &mut memo)
}

fn peelable(g: &Multigraph, cbar6: &CanonicalForm, memo: &mut HashMap<CanonicalForm, bool>) -> bool {
    let n = g.vertex_count();
    if n < 6 || n % 2 == 1 || !g.is_simple() || !g.is_cubic() {
        return false;
    }
    let Ok(key) = canonical_form(g) else { return false };
    if n == 6 {
        return &key == cbar6;
    }
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let result = g.triangles().into_iter().any(|t| {
        let Some((gp, x)) = peel(g, t) else { return false };
        gp.triangles().iter().any(|s| s.contains(&x)) && peelable(&gp, cbar6, memo)
    });
    memo.insert(key, result);
    result
}

/// Contracts a triangle; `None` when that creates parallel edges.
fn peel(g: &Multigraph, t: [usize; 3]) -> Option<(Multigraph, usize)> {
    let (gp, _) = g.contract(VertexSet::from_iter(t)).ok()?;
    let x = gp.vertex_count() - 1;
    gp.is_simple().then_some((gp, x))
}

/// Rungs, triangles and ridges of a tri-ladder, recovered from the graph
/// alone. The labelling found need not be the one a generator used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriLadderStructure {
    pub rungs: Vec<Rung>,
    pub fixed_triangle: [usize; 3],
    pub moving_triangle: [usize; 3],
    pub ridges: [Vec<usize>; 3],
}

/// Recovers a splice history by repeatedly contracting the moving
/// triangle, and checks the result: `(n − 6)/2` rungs forming a matching,
/// three ridges covering all vertices, and ranks increasing along every
/// ridge.
pub fn triladder_structure(g: &Multigraph) -> Option<TriLadderStructure> {
    let n = g.vertex_count();
    if n < 6 || !g.is_simple() || !g.is_cubic() {
        return None;
    }
    let cbar6 = canonical_form(&named::cbar6()).ok()?;
    let triangles = g.triangles();
    if n == 6 {
        if canonical_form(g).ok()? != cbar6 {
            return None;
        }
        let fixed = triangles[0];
        let moving = *triangles.iter().find(|t| disjoint(t, &fixed))?;
        return finish(g, Vec::new(), fixed, moving);
    }
    for &moving in &triangles {
        if let Some((rungs_top_down, fixed)) = chain(g, moving, &cbar6) {
            let r = rungs_top_down.len();
            let rungs = rungs_top_down.into_iter().enumerate().map(|(i, e)| (e, r - i)).collect();
            if let Some(s) = finish(g, rungs, fixed, moving) {
                return Some(s);
            }
        }
    }
    None
}

fn disjoint(a: &[usize; 3], b: &[usize; 3]) -> bool {
    a.iter().all(|v| !b.contains(v))
}

/// Peels `moving`, then the triangle through the contracted vertex, down to
/// `C̄6`. Returns rung ids from the last splice down and the fixed triangle
/// in `g`'s labels.
fn chain(g: &Multigraph, moving: [usize; 3], cbar6: &CanonicalForm) -> Option<(Vec<EdgeId>, [usize; 3])> {
    let set = VertexSet::from_iter(moving);
    let (gp, map) = g.contract(set).ok()?;
    if !gp.is_simple() {
        return None;
    }
    let x = gp.vertex_count() - 1;
    let back = |v: usize| (0..g.vertex_count()).find(|&o| !set.contains(o) && map[o] == v);
    for tri in gp.triangles().into_iter().filter(|t| t.contains(&x)) {
        let others: Vec<usize> = tri.iter().copied().filter(|&v| v != x).collect();
        let rung = gp.edge_between(others[0], others[1])?;
        if gp.vertex_count() == 6 {
            if canonical_form(&gp).ok()? != *cbar6 {
                return None;
            }
            let fixed = *gp.triangles().iter().find(|t| disjoint(t, &tri))?;
            return Some((vec![rung], fixed.map(|v| back(v).unwrap())));
        }
        if let Some((mut rungs, fixed)) = chain(&gp, tri, cbar6) {
            rungs.insert(0, rung);
            return Some((rungs, fixed.map(|v| back(v).unwrap())));
        }
    }
    None
}

fn finish(
    g: &Multigraph,
    rungs: Vec<(EdgeId, usize)>,
    fixed: [usize; 3],
    moving: [usize; 3],
) -> Option<TriLadderStructure> {
    let rungs: Vec<Rung> = rungs
        .into_iter()
        .map(|(edge, rank)| {
            let e = g.edge(edge).expect("rung edge survives contraction");
            Rung {
                edge,
                ends: (e.u, e.v),
                rank,
            }
        })
        .collect();
    let s = TriLadderStructure {
        ridges: trace_ridges(g, &rungs.iter().map(|r| r.edge).collect::<Vec<_>>(), fixed, moving).ok()?,
        rungs,
        fixed_triangle: fixed,
        moving_triangle: moving,
    };
    s.validate(g).ok()?;
    Some(s)
}

impl TriLadderStructure {
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let fail = |msg: &str| Err(Error::Inconsistent(format!("tri-ladder structure: {msg}")));
        if 2 * self.rungs.len() + 6 != g.vertex_count() {
            return fail("rung count is not (n - 6)/2");
        }
        let mut covered = VertexSet::EMPTY;
        for r in &self.rungs {
            let ends = g.try_edge(r.edge)?.ends();
            if !covered.is_disjoint(ends) {
                return fail("rungs do not form a matching");
            }
            covered = covered.union(ends);
        }
        let ids: Vec<EdgeId> = self.rungs.iter().map(|r| r.edge).collect();
        let ridges = trace_ridges(g, &ids, self.fixed_triangle, self.moving_triangle)?;
        if ridges != self.ridges {
            return fail("ridges differ from a fresh trace");
        }
        if !ranks_increase_along_ridges(&self.rungs, &self.ridges) {
            return fail("rung ranks do not increase along a ridge");
        }
        Ok(())
    }
}

/// Along each ridge, from the fixed triangle outwards, the ranks of the
/// rungs met are strictly increasing.
pub fn ranks_increase_along_ridges(rungs: &[Rung], ridges: &[Vec<usize>; 3]) -> bool {
    ridges.iter().all(|ridge| {
        let ranks: Vec<usize> = ridge
            .iter()
            .filter_map(|&v| {
                rungs
                    .iter()
                    .find(|r| r.ends.0 == v || r.ends.1 == v)
                    .map(|r| r.rank)
            })
            .collect();
        ranks.windows(2).all(|w| w[0] < w[1])
    })
}
