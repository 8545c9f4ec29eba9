use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// The result of splicing `G1` at `u1` with `G2` at `u2`.
///
/// Vertices of `G1 − u1` come first in their original order, then those of
/// `G2 − u2`. Edge ids are: surviving `G1` edges, surviving `G2` edges, then
/// the joining edges in bijection order.
#[derive(Clone, Debug)]
pub struct Splice {
    pub graph: Multigraph,
    /// New label of each `G1` vertex (`None` for `u1`).
    pub left_vertices: Vec<Option<usize>>,
    pub right_vertices: Vec<Option<usize>>,
    /// `(old id, new id)` for every surviving `G1` edge.
    pub left_edges: Vec<(EdgeId, EdgeId)>,
    pub right_edges: Vec<(EdgeId, EdgeId)>,
    /// Ids of the edges created by the bijection, in its order.
    pub joined: Vec<EdgeId>,
}

/// Splices two graphs at vertices of equal degree.
///
/// `bijection` pairs a neighbour of `u1` with a neighbour of `u2`; a
/// neighbour reached by `k` parallel edges must appear in exactly `k` pairs.
pub fn splice(
    g1: &Multigraph,
    u1: usize,
    g2: &Multigraph,
    u2: usize,
    bijection: &[(usize, usize)],
) -> Result<Splice> {
    for (g, u) in [(g1, u1), (g2, u2)] {
        if u >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: g.vertex_count(),
            });
        }
    }
    if g1.degree(u1) != g2.degree(u2) {
        return Err(Error::Splice(format!(
            "degrees differ: {} vs {}",
            g1.degree(u1),
            g2.degree(u2)
        )));
    }
    check_slots(g1, u1, bijection.iter().map(|p| p.0), "left")?;
    check_slots(g2, u2, bijection.iter().map(|p| p.1), "right")?;

    let n1 = g1.vertex_count();
    let left_vertices: Vec<Option<usize>> = (0..n1)
        .map(|v| match v.cmp(&u1) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect();
    let offset = n1 - 1;
    let right_vertices: Vec<Option<usize>> = (0..g2.vertex_count())
        .map(|v| match v.cmp(&u2) {
            std::cmp::Ordering::Less => Some(offset + v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(offset + v - 1),
        })
        .collect();

    let mut edges = Vec::new();
    let mut left_edges = Vec::new();
    let mut right_edges = Vec::new();
    for (g, u, map, record) in [
        (g1, u1, &left_vertices, &mut left_edges),
        (g2, u2, &right_vertices, &mut right_edges),
    ] {
        for e in g.edges().iter().filter(|e| !e.touches(u)) {
            let id = EdgeId(edges.len());
            record.push((e.id, id));
            edges.push((id, map[e.u].unwrap(), map[e.v].unwrap()));
        }
    }
    let mut joined = Vec::new();
    for &(a, b) in bijection {
        let id = EdgeId(edges.len());
        joined.push(id);
        edges.push((id, left_vertices[a].unwrap(), right_vertices[b].unwrap()));
    }
    let n = n1 + g2.vertex_count() - 2;
    Ok(Splice {
        graph: Multigraph::from_edges(n, edges)?,
        left_vertices,
        right_vertices,
        left_edges,
        right_edges,
        joined,
    })
}

fn check_slots(
    g: &Multigraph,
    u: usize,
    given: impl Iterator<Item = usize>,
    side: &str,
) -> Result<()> {
    let mut want: Vec<usize> = g.incident_edges(u).map(|e| e.other(u)).collect();
    let mut got: Vec<usize> = given.collect();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(Error::Splice(format!(
            "{side} side of the bijection is {got:?}, neighbour slots are {want:?}"
        )));
    }
    Ok(())
}

/// All bijections between the neighbour slots of `u1` and `u2`, in a fixed
/// order. Repeated slots produce repeated bijections only once.
pub fn all_bijections(g1: &Multigraph, u1: usize, g2: &Multigraph, u2: usize) -> Vec<Vec<(usize, usize)>> {
    let left: Vec<usize> = g1.incident_edges(u1).map(|e| e.other(u1)).collect();
    let right: Vec<usize> = g2.incident_edges(u2).map(|e| e.other(u2)).collect();
    if left.len() != right.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..right.len()).collect();
    loop {
        let mut b: Vec<(usize, usize)> = left.iter().zip(&perm).map(|(&a, &j)| (a, right[j])).collect();
        b.sort_unstable();
        if !out.contains(&b) {
            out.push(b);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, named::*};

    #[test]
    fn two_k4s_make_cbar6() {
        let k4 = k4();
        let target = canonical_form(&cbar6()).unwrap();
        for u1 in 0..4 {
            for u2 in 0..4 {
                for b in all_bijections(&k4, u1, &k4, u2) {
                    let s = splice(&k4, u1, &k4, u2, &b).unwrap();
                    assert_eq!(canonical_form(&s.graph).unwrap(), target);
                    assert_eq!(s.joined.len(), 3);
                }
            }
        }
    }

    #[test]
    fn two_cycles_make_a_longer_cycle() {
        let c6 = cycle(6);
        let s = splice(&c6, 0, &c6, 0, &[(1, 1), (5, 5)]).unwrap();
        assert_eq!(canonical_form(&s.graph).unwrap(), canonical_form(&cycle(10)).unwrap());
    }

    #[test]
    fn cbar6_with_k4_gives_one_graph_whose_rung_is_46() {
        // splice C̄6 at vertex 2 (1-based); 46 is edge id 5
        let g = cbar6();
        let mut forms = Vec::new();
        for u2 in 0..4 {
            for b in all_bijections(&g, 1, &k4(), u2) {
                let s = splice(&g, 1, &k4(), u2, &b).unwrap();
                let rung = s.left_edges.iter().find(|(old, _)| *old == EdgeId(5)).unwrap().1;
                let e = s.graph.edge(rung).unwrap();
                // the rung joins the two survivors of the spliced triangle
                assert_eq!((e.u, e.v), (2, 4));
                assert!(s.graph.is_cubic() && s.graph.vertex_count() == 8);
                forms.push(canonical_form(&s.graph).unwrap());
            }
        }
        forms.dedup();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn parallel_slots() {
        // digon-with-pendants: vertex 0 joined to 1 twice and to 2 once
        let g = Multigraph::build(4, &[(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]).unwrap();
        assert!(splice(&g, 0, &k4(), 0, &[(1, 1), (2, 2), (2, 3)]).is_err());
        let s = splice(&g, 0, &k4(), 0, &[(1, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(s.graph.vertex_count(), 6);
        assert_eq!(all_bijections(&g, 0, &k4(), 0).len(), 3);
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            splice(&cycle(4), 0, &k4(), 0, &[(1, 1), (3, 2)]),
            Err(Error::Splice(_))
        ));
    }
}
