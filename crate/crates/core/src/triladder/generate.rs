use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::splice::{all_bijections, splice};
use crate::error::{Error, Result};
use crate::graph::{canonical_code_colored, canonical_form, named, EdgeId, Multigraph, VertexSet};

/// The largest order the generator accepts.
pub const MAX_GENERATED_VERTICES: usize = 20;

/// One K4 splice of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpliceRecord {
    pub rank: usize,
    /// Vertex of the moving triangle that was replaced, labelled in the
    /// graph before this splice.
    pub triangle_vertex: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rung {
    pub edge: EdgeId,
    pub ends: (usize, usize),
    pub rank: usize,
}

/// How a tri-ladder was built from `C̄6`: the splices, the rungs with their
/// ranks, the fixed triangle `T`, the final moving triangle, and the
/// U/V/W ridges (vertex sequences from `T` to the moving triangle).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriLadderBlueprint {
    pub splice_count: usize,
    pub splices: Vec<SpliceRecord>,
    pub rungs: Vec<Rung>,
    pub fixed_triangle: [usize; 3],
    pub moving_triangle: [usize; 3],
    pub ridges: [Vec<usize>; 3],
}

impl TriLadderBlueprint {
    /// One line per splice: `splice i: triangle_vertex=v, rung=(a,b), rank=i`.
    /// Rung ends are labels in the final graph.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (rec, rung) in self.splices.iter().zip(&self.rungs) {
            let _ = writeln!(
                s,
                "splice {}: triangle_vertex={}, rung=({},{}), rank={}",
                rec.rank, rec.triangle_vertex, rung.ends.0, rung.ends.1, rung.rank
            );
        }
        s
    }

    /// Re-checks the structural claims against `g`: order `6 + 2r`, cubic,
    /// rungs a matching, and three ridges.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let r = self.splice_count;
        let fail = |msg: String| Err(Error::Inconsistent(format!("blueprint: {msg}")));
        if g.vertex_count() != 6 + 2 * r || !g.is_cubic() {
            return fail(format!("expected a cubic graph on {} vertices", 6 + 2 * r));
        }
        if self.rungs.len() != r || self.splices.len() != r {
            return fail("rung or splice count differs from splice_count".into());
        }
        let mut covered = VertexSet::EMPTY;
        for rung in &self.rungs {
            let e = g.try_edge(rung.edge)?;
            if (e.u, e.v) != rung.ends {
                return fail(format!("rung {} has ends {}-{}", rung.edge, e.u, e.v));
            }
            if !covered.is_disjoint(e.ends()) {
                return fail("rungs do not form a matching".into());
            }
            covered = covered.union(e.ends());
        }
        let rung_ids: Vec<EdgeId> = self.rungs.iter().map(|r| r.edge).collect();
        let ridges = trace_ridges(g, &rung_ids, self.fixed_triangle, self.moving_triangle)?;
        if ridges != self.ridges {
            return fail("ridges differ from a fresh trace".into());
        }
        if !super::ranks_increase_along_ridges(&self.rungs, &self.ridges) {
            return fail("rung ranks do not increase along a ridge".into());
        }
        Ok(())
    }
}

/// Traces the three ridges: the paths left after deleting the rungs and the
/// edges of both triangles, each from a vertex of `t` (in order) to the
/// moving triangle. Fails unless those paths cover every vertex.
pub fn trace_ridges(
    g: &Multigraph,
    rungs: &[EdgeId],
    t: [usize; 3],
    moving: [usize; 3],
) -> Result<[Vec<usize>; 3]> {
    let ts = VertexSet::from_iter(t);
    let ms = VertexSet::from_iter(moving);
    let fail = |msg: &str| Err(Error::Inconsistent(format!("ridges: {msg}")));
    if !ts.is_disjoint(ms) || ts.len() != 3 || ms.len() != 3 {
        return fail("triangles must be disjoint");
    }
    let kept: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| {
            !rungs.contains(&e.id) && !e.ends().is_subset(ts) && !e.ends().is_subset(ms)
        })
        .collect();
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for e in &kept {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = VertexSet::EMPTY;
    let mut ridges: [Vec<usize>; 3] = Default::default();
    for (i, &start) in t.iter().enumerate() {
        if adj[start].len() != 1 {
            return fail("a fixed-triangle vertex does not start exactly one ridge");
        }
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while !ms.contains(cur) {
            let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
            if next.len() != 1 || path.contains(&next[0]) {
                return fail("ridge is not a path");
            }
            prev = cur;
            cur = next[0];
            path.push(cur);
        }
        if adj[cur].len() != 1 {
            return fail("ridge does not end at the moving triangle");
        }
        let vs = VertexSet::from_iter(path.iter().copied());
        if !seen.is_disjoint(vs) {
            return fail("ridges intersect");
        }
        seen = seen.union(vs);
        ridges[i] = path;
    }
    if seen != g.vertices() {
        return fail("ridges miss some vertices");
    }
    Ok(ridges)
}

#[derive(Clone)]
struct State {
    graph: Multigraph,
    fixed: [usize; 3],
    moving: [usize; 3],
    splices: Vec<SpliceRecord>,
    rungs: Vec<Rung>,
}

impl State {
    fn base() -> State {
        // T = {0,1,2}, T0 = {3,4,5}, matching 03, 14, 25
        let graph = Multigraph::build(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .expect("valid base graph");
        State {
            graph,
            fixed: [0, 1, 2],
            moving: [3, 4, 5],
            splices: Vec::new(),
            rungs: Vec::new(),
        }
    }

    fn colored_key(&self) -> Vec<u8> {
        let n = self.graph.vertex_count();
        let mut adj = vec![vec![0u8; n]; n];
        for e in self.graph.edges() {
            adj[e.u][e.v] += 1;
            adj[e.v][e.u] += 1;
        }
        let colors: Vec<u32> = (0..n)
            .map(|v| {
                if self.fixed.contains(&v) {
                    1
                } else if self.moving.contains(&v) {
                    2
                } else {
                    0
                }
            })
            .collect();
        canonical_code_colored(&adj, &colors).0
    }

    /// Every splice of K4 at a vertex of the moving triangle.
    fn children(&self) -> Vec<State> {
        let k4 = named::k4();
        let mut out = Vec::new();
        for &w in &self.moving {
            let others: Vec<usize> = self.moving.iter().copied().filter(|&x| x != w).collect();
            let rung_old = self
                .graph
                .edge_between(others[0], others[1])
                .expect("moving triangle edge");
            for b in all_bijections(&self.graph, w, &k4, 3) {
                let s = splice(&self.graph, w, &k4, 3, &b).expect("cubic splice");
                let vmap = |v: usize| s.left_vertices[v].expect("survivor");
                let emap = |e: EdgeId| {
                    s.left_edges
                        .iter()
                        .find(|(old, _)| *old == e)
                        .expect("surviving edge")
                        .1
                };
                let mut rungs: Vec<Rung> = self
                    .rungs
                    .iter()
                    .map(|r| {
                        let edge = emap(r.edge);
                        let e = s.graph.edge(edge).unwrap();
                        Rung {
                            edge,
                            ends: (e.u, e.v),
                            rank: r.rank,
                        }
                    })
                    .collect();
                let rank = self.splices.len() + 1;
                let edge = emap(rung_old);
                let e = s.graph.edge(edge).unwrap();
                rungs.push(Rung {
                    edge,
                    ends: (e.u, e.v),
                    rank,
                });
                let mut splices = self.splices.clone();
                splices.push(SpliceRecord {
                    rank,
                    triangle_vertex: w,
                });
                let moving = [0, 1, 2].map(|k| s.right_vertices[k].expect("triangle survivor"));
                out.push(State {
                    fixed: self.fixed.map(vmap),
                    moving,
                    graph: s.graph,
                    splices,
                    rungs,
                });
            }
        }
        out
    }

    fn blueprint(&self) -> Result<TriLadderBlueprint> {
        let rung_ids: Vec<EdgeId> = self.rungs.iter().map(|r| r.edge).collect();
        let ridges = trace_ridges(&self.graph, &rung_ids, self.fixed, self.moving)?;
        Ok(TriLadderBlueprint {
            splice_count: self.splices.len(),
            splices: self.splices.clone(),
            rungs: self.rungs.clone(),
            fixed_triangle: self.fixed,
            moving_triangle: self.moving,
            ridges,
        })
    }
}

/// All tri-ladders on at most `max_n` vertices up to isomorphism, each with
/// the blueprint of its first construction, ordered by order and then by
/// construction order. Vertices of the fixed triangle are never spliced.
pub fn generate_triladders(max_n: usize) -> Result<Vec<(Multigraph, TriLadderBlueprint)>> {
    if max_n < 6 || max_n % 2 == 1 || max_n > MAX_GENERATED_VERTICES {
        return Err(Error::Precondition(format!(
            "max_n must be even in 6..={MAX_GENERATED_VERTICES}, got {max_n}"
        )));
    }
    let mut out = Vec::new();
    let mut seen_graphs = HashSet::new();
    let mut level = vec![State::base()];
    loop {
        for st in &level {
            if seen_graphs.insert(canonical_form(&st.graph)?) {
                let bp = st.blueprint()?;
                bp.validate(&st.graph)?;
                out.push((st.graph.clone(), bp));
            }
        }
        if level[0].graph.vertex_count() + 2 > max_n {
            break;
        }
        // states are deduplicated up to isomorphisms fixing both triangles
        let mut seen_states = HashSet::new();
        level = level
            .iter()
            .flat_map(State::children)
            .filter(|st| seen_states.insert(st.colored_key()))
            .collect();
    }
    Ok(out)
}

/// Tri-ladders up to `max_n` allowing a splice at any vertex of any triangle
/// at every step. Graphs only; used to confirm the fixed-triangle
/// convention loses nothing.
pub fn generate_triladders_any_triangle(max_n: usize) -> Result<Vec<Multigraph>> {
    if max_n < 6 || max_n % 2 == 1 || max_n > MAX_GENERATED_VERTICES {
        return Err(Error::Precondition(format!("bad max_n {max_n}")));
    }
    let k4 = named::k4();
    let mut out = vec![named::cbar6()];
    let mut seen: HashSet<_> = out.iter().map(|g| canonical_form(g).unwrap()).collect();
    let mut level = out.clone();
    while level[0].vertex_count() + 2 <= max_n {
        let mut next = Vec::new();
        for g in &level {
            let in_triangle: VertexSet = g.triangles().into_iter().flatten().collect();
            for w in in_triangle {
                for b in all_bijections(g, w, &k4, 3) {
                    let s = splice(g, w, &k4, 3, &b)?;
                    if seen.insert(canonical_form(&s.graph)?) {
                        next.push(s.graph);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}
