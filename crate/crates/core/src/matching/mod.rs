//! Maximum matchings, perfect-matching oracles and Tutte-type certificates.

mod blossom;
mod enumerate;
mod tutte;

use serde::Serialize;

use crate::graph::{EdgeId, Multigraph, VertexSet};

pub use enumerate::{enumerate_perfect_matchings, MAX_ENUMERATION_VERTICES};
pub use tutte::{find_barrier_for_inadmissible, is_barrier, is_factor_critical, odd_components, Barrier};

/// A set of pairwise disjoint edges, kept sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching {
    pub edge_ids: Vec<EdgeId>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    pub fn covered(&self, g: &Multigraph) -> VertexSet {
        self.edge_ids
            .iter()
            .filter_map(|&e| g.edge(e))
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e.ends()))
    }

    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        self.is_valid(g) && 2 * self.len() == g.vertex_count()
    }

    /// Edges exist and no two share an endpoint.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &id in &self.edge_ids {
            let Some(e) = g.edge(id) else { return false };
            if !seen.is_disjoint(e.ends()) {
                return false;
            }
            seen = seen.union(e.ends());
        }
        true
    }
}

/// Neighbour bitmasks of `g` with the listed edges deleted. Parallel
/// copies of a deleted edge keep the adjacency alive.
pub(crate) fn adjacency(g: &Multigraph, removed: &[EdgeId]) -> Vec<u64> {
    let mut adj = vec![0u64; g.vertex_count()];
    for e in g.edges() {
        if !removed.contains(&e.id) {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
    }
    adj
}

pub(crate) fn has_perfect_within(adj: &[u64], alive: VertexSet) -> bool {
    blossom::has_perfect(adj, alive.bits())
}

pub(crate) fn matching_number_within(adj: &[u64], alive: VertexSet) -> usize {
    blossom::matching_number(adj, alive.bits())
}

/// A maximum-cardinality matching. Each matched pair is realised by its
/// lowest edge id.
pub fn max_matching(g: &Multigraph) -> Matching {
    let adj = adjacency(g, &[]);
    let mates = blossom::max_mates(&adj, g.vertices().bits());
    let mut edge_ids: Vec<EdgeId> = (0..g.vertex_count())
        .filter(|&v| mates[v] != usize::MAX && v < mates[v])
        .map(|v| g.edge_between(v, mates[v]).expect("matched pair is adjacent"))
        .collect();
    edge_ids.sort();
    Matching { edge_ids }
}

pub fn matching_number(g: &Multigraph) -> usize {
    matching_number_within(&adjacency(g, &[]), g.vertices())
}

pub fn has_perfect_matching(g: &Multigraph) -> bool {
    has_perfect_within(&adjacency(g, &[]), g.vertices())
}

/// Whether `G − S` has a perfect matching.
pub fn has_pm_avoiding(g: &Multigraph, s: VertexSet) -> bool {
    has_perfect_within(&adjacency(g, &[]), g.vertices().difference(s))
}
