use super::Matching;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexSet};

/// Enumeration is exponential; it exists as an independent oracle.
pub const MAX_ENUMERATION_VERTICES: usize = 16;

/// Every perfect matching exactly once, ordered lexicographically by the
/// sorted edge-id sequence. Parallel edges give distinct matchings.
pub fn enumerate_perfect_matchings(g: &Multigraph) -> Result<Vec<Matching>> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut out = Vec::new();
    if n % 2 == 0 {
        let mut chosen = Vec::with_capacity(n / 2);
        extend(g, g.vertices(), &mut chosen, &mut out);
    }
    out.sort();
    Ok(out)
}

fn extend(g: &Multigraph, open: VertexSet, chosen: &mut Vec<EdgeId>, out: &mut Vec<Matching>) {
    let Some(v) = open.first() else {
        let mut edge_ids = chosen.clone();
        edge_ids.sort();
        out.push(Matching { edge_ids });
        return;
    };
    for e in g.incident_edges(v) {
        let u = e.other(v);
        if open.contains(u) {
            chosen.push(e.id);
            extend(g, open.without(v).without(u), chosen, out);
            chosen.pop();
        }
    }
}
