//! Loop-free multigraphs with stable edge identities.
//!
//! Every analysis in this crate acts on [`Multigraph`]. Vertices are dense
//! labels `0..n`; edges carry an [`EdgeId`] that survives deletion and
//! contraction, so a removable edge found in a contraction can be traced back
//! to the graph it came from.

mod canon;
mod io;
mod vertex_set;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_VERTICES};
pub(crate) use canon::canonical_code_colored;
pub use io::{
    emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, parse_graph_stream, GraphFormat,
    ParsedGraph,
};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Hard limit on vertex count; vertex sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge with endpoints normalized so that `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn ends(&self) -> VertexSet {
        VertexSet::from_iter([self.u, self.v])
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        debug_assert!(self.touches(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    nbrs: Vec<VertexSet>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}-{}", e.id.0, e.u, e.v)?;
        }
        write!(f, "])")
    }
}

/// An edge cut `∂(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub inside: VertexSet,
    pub boundary: Vec<EdgeId>,
    #[serde(skip)]
    n: usize,
}

impl Cut {
    pub fn outside(&self) -> VertexSet {
        self.inside.complement(self.n)
    }

    pub fn is_trivial(&self) -> bool {
        self.inside.len() <= 1 || self.n - self.inside.len() <= 1
    }

    pub fn size(&self) -> usize {
        self.boundary.len()
    }
}

/// A proper 2-colouring of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side_u: VertexSet,
    pub side_w: VertexSet,
}

impl Bipartition {
    pub fn swapped(&self) -> Self {
        Bipartition {
            side_u: self.side_w,
            side_w: self.side_u,
        }
    }
}

impl Multigraph {
    /// Builds a graph on `n` vertices; edge ids are `0..m` in input order.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (EdgeId(i), u, v))
            .collect::<Vec<_>>();
        Self::from_edges(n, edges)
    }

    /// Builds a graph from explicitly identified edges. Ids must be unique.
    pub fn from_edges(n: usize, edges: Vec<(EdgeId, usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut list = Vec::with_capacity(edges.len());
        for (index, (id, a, b)) in edges.into_iter().enumerate() {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop { index, vertex: a });
            }
            list.push(Edge {
                id,
                u: a.min(b),
                v: a.max(b),
            });
        }
        list.sort_by_key(|e| e.id);
        if let Some(w) = list.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateEdge(w[0].id));
        }
        let mut incident = vec![Vec::new(); n];
        let mut nbrs = vec![VertexSet::EMPTY; n];
        for (idx, e) in list.iter().enumerate() {
            incident[e.u].push(idx);
            incident[e.v].push(idx);
            nbrs[e.u].insert(e.v);
            nbrs[e.v].insert(e.u);
        }
        Ok(Multigraph {
            n,
            edges: list,
            incident,
            nbrs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn try_edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.incident[v].iter().map(move |&i| &self.edges[i])
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Distinct neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.nbrs[v]
    }

    /// `N(S)`: vertices outside `s` with a neighbour in `s`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s.iter() {
            out = out.union(self.nbrs[v]);
        }
        out.difference(s)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.nbrs[u].contains(v)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incident_edges(u).filter(|e| e.touches(v) && u != v).count()
    }

    /// Lowest-id edge joining `u` and `v`.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.incident_edges(u)
            .filter(|e| e.other(u) == v)
            .map(|e| e.id)
            .min()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| self.nbrs[v].len() == self.degree(v))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.is_regular(3)
    }

    /// `G - ids`, keeping surviving ids. Unknown ids are an error.
    pub fn without_edges(&self, ids: &[EdgeId]) -> Result<Multigraph> {
        for &id in ids {
            self.try_edge(id)?;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !ids.contains(&e.id))
            .map(|e| (e.id, e.u, e.v))
            .collect();
        Multigraph::from_edges(self.n, edges)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. Edge ids are kept.
    pub fn relabeled(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| (e.id, perm[e.u], perm[e.v]))
            .collect();
        Multigraph::from_edges(self.n, edges).expect("relabeling preserves validity")
    }

    /// Keeps one edge (the lowest id) per parallel class.
    pub fn simplified(&self) -> Multigraph {
        let mut seen = std::collections::HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert((e.u, e.v)))
            .map(|e| (e.id, e.u, e.v))
            .collect();
        Multigraph::from_edges(self.n, edges).expect("subgraph of a valid graph")
    }

    /// Reassigns edge ids to `0..m` in current order.
    pub fn renumbered(&self) -> Multigraph {
        let pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        Multigraph::build(self.n, &pairs).expect("valid graph")
    }

    /// Endpoint pairs in id order.
    pub fn endpoint_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    pub fn cut(&self, inside: VertexSet) -> Cut {
        Cut {
            inside,
            boundary: self.boundary(inside),
            n: self.n,
        }
    }

    /// Ids of the edges with exactly one end in `x`.
    pub fn boundary(&self, x: VertexSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| x.contains(e.u) != x.contains(e.v))
            .map(|e| e.id)
            .collect()
    }

    /// `E[X, Y]` for disjoint `x`, `y`; `E(X)` when `x == y`.
    pub fn edges_between_sets(&self, x: VertexSet, y: VertexSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| {
                (x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))
            })
            .map(|e| e.id)
            .collect()
    }

    pub fn edges_within(&self, x: VertexSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| x.contains(e.u) && x.contains(e.v))
            .map(|e| e.id)
            .collect()
    }

    /// Connected components of the subgraph induced by `alive`, ordered by
    /// lowest vertex.
    pub fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut left = alive;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::single(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.nbrs[v]);
                }
                next = next.intersection(alive).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected_within(&self, alive: VertexSet) -> bool {
        self.components_within(alive).len() <= 1
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// `G/X`: contracts `x` to a single new vertex, which receives the highest
    /// label. Edges inside `x` vanish; boundary edges keep their ids.
    ///
    /// Returns the contracted graph and the map from old to new labels.
    pub fn contract(&self, x: VertexSet) -> Result<(Multigraph, Vec<usize>)> {
        if x.is_empty() || x.len() >= self.n || !x.is_subset(self.vertices()) {
            return Err(Error::InvalidVertexSet(format!(
                "contraction needs a nonempty proper subset, got {x:?} in n={}",
                self.n
            )));
        }
        let new_n = self.n - x.len() + 1;
        let shrunk = new_n - 1;
        let mut map = vec![0; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if x.contains(v) {
                *slot = shrunk;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !(x.contains(e.u) && x.contains(e.v)))
            .map(|e| (e.id, map[e.u], map[e.v]))
            .collect();
        Ok((Multigraph::from_edges(new_n, edges)?, map))
    }

    /// Two-colouring if bipartite. The lowest vertex of each component goes
    /// to `side_u`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for w in self.nbrs[v].iter() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut side_u = VertexSet::EMPTY;
        let mut side_w = VertexSet::EMPTY;
        for (v, c) in colour.iter().enumerate() {
            if c == &Some(false) {
                side_u.insert(v);
            } else {
                side_w.insert(v);
            }
        }
        Some(Bipartition { side_u, side_w })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertex connectivity of the underlying simple graph is at least `k`.
    /// Requires `n >= k + 1`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.n < k + 1 {
            return false;
        }
        let all = self.vertices();
        let mut separated = false;
        for size in 0..k {
            for_each_subset_of_size(all, size, &mut |s| {
                if !separated && !self.is_connected_within(all.difference(s)) {
                    separated = true;
                }
            });
            if separated {
                return false;
            }
        }
        true
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in self.nbrs[a].iter().filter(|&b| b > a) {
                for c in self.nbrs[a]
                    .intersection(self.nbrs[b])
                    .iter()
                    .filter(|&c| c > b)
                {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }
}

/// Calls `f` on every subset of `universe` with exactly `size` elements, in
/// colexicographic order of bit patterns.
pub fn for_each_subset_of_size(universe: VertexSet, size: usize, f: &mut dyn FnMut(VertexSet)) {
    let items: Vec<usize> = universe.iter().collect();
    if size > items.len() {
        return;
    }
    let n = items.len();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(idx.iter().map(|&i| items[i]).collect());
        let mut i = size;
        let pos = loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < i + n - size {
                break i;
            }
        };
        idx[pos] += 1;
        for j in pos + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Small named graphs used throughout the test suites and examples.
pub mod named {
    use super::*;

    /// Shifts 1-based vertex pairs to 0-based.
    pub fn one_based(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
        let shifted: Vec<_> = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        Multigraph::build(n, &shifted).unwrap()
    }

    pub fn k4() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Triangles {1,3,5} and {2,4,6} joined by the matching 14, 25, 36.
    /// Edge ids: 13, 15, 35, 24, 26, 46, 14, 25, 36.
    pub fn cbar6() -> Multigraph {
        one_based(
            6,
            &[(1, 3), (1, 5), (3, 5), (2, 4), (2, 6), (4, 6), (1, 4), (2, 5), (3, 6)],
        )
    }

    pub fn cycle(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    pub fn path(n: usize) -> Multigraph {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Multigraph::build(n, &pairs).unwrap()
    }

    pub fn k33() -> Multigraph {
        let mut pairs = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                pairs.push((a, b));
            }
        }
        Multigraph::build(6, &pairs).unwrap()
    }

    pub fn petersen() -> Multigraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        Multigraph::build(10, &pairs).unwrap()
    }

    pub fn star3() -> Multigraph {
        Multigraph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }
}
