use serde::Serialize;

use super::{adjacency, has_perfect_within, matching_number_within};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexSet};

/// A vertex set `S` with `o(G − S) = |S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barrier {
    pub vertices: VertexSet,
    pub odd_component_count: usize,
}

impl Barrier {
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() <= 1
    }
}

/// Number of odd components of `G − S`.
pub fn odd_components(g: &Multigraph, s: VertexSet) -> usize {
    g.components_within(g.vertices().difference(s))
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

pub fn is_barrier(g: &Multigraph, s: VertexSet) -> bool {
    odd_components(g, s) == s.len()
}

/// `G − v` has a perfect matching for every vertex `v`.
pub fn is_factor_critical(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 0 {
        return false;
    }
    let adj = adjacency(g, &[]);
    g.vertices()
        .iter()
        .all(|v| has_perfect_within(&adj, g.vertices().without(v)))
}

/// A barrier containing both ends of an edge that lies in no perfect
/// matching.
///
/// With `G' = G − V(e)`, the Gallai–Edmonds set `A(G')` has deficiency
/// `o(G' − A) − |A| ≥ 2`; since `G` itself has a perfect matching this
/// forces equality, so `A ∪ V(e)` is a barrier of `G`. The result is
/// recounted before it is returned.
pub fn find_barrier_for_inadmissible(g: &Multigraph, e: EdgeId) -> Result<Barrier> {
    let edge = *g.try_edge(e)?;
    let adj = adjacency(g, &[]);
    let all = g.vertices();
    if !has_perfect_within(&adj, all) {
        return Err(Error::Precondition("graph has no perfect matching".into()));
    }
    let rest = all.difference(edge.ends());
    if has_perfect_within(&adj, rest) {
        return Err(Error::AdmissibleEdge(e));
    }
    let nu = matching_number_within(&adj, rest);
    let d: VertexSet = rest
        .iter()
        .filter(|&v| matching_number_within(&adj, rest.without(v)) == nu)
        .collect();
    let a = rest_neighbourhood(&adj, d).intersection(rest).difference(d);
    let s = a.union(edge.ends());
    let odd = odd_components(g, s);
    if odd != s.len() {
        return Err(Error::Inconsistent(format!(
            "barrier candidate {s:?} has {odd} odd components"
        )));
    }
    Ok(Barrier {
        vertices: s,
        odd_component_count: odd,
    })
}

fn rest_neighbourhood(adj: &[u64], d: VertexSet) -> VertexSet {
    VertexSet::from_bits(d.iter().fold(0, |acc, v| acc | adj[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::matching::enumerate_perfect_matchings;

    fn k4_minus_ab() -> Multigraph {
        // a=0 b=1 c=2 d=3; cd is edge 4
        Multigraph::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn odd_component_counts() {
        assert_eq!(odd_components(&star3(), VertexSet::single(0)), 3);
        assert_eq!(odd_components(&cycle(6), VertexSet::EMPTY), 0);
        assert_eq!(odd_components(&k4_minus_ab(), VertexSet::from_iter([2, 3])), 2);
    }

    #[test]
    fn factor_criticality() {
        assert!(is_factor_critical(&cycle(3)));
        assert!(is_factor_critical(&cycle(5)));
        assert!(!is_factor_critical(&path(3)));
        assert!(!is_factor_critical(&k4()));
        assert!(is_factor_critical(&Multigraph::build(1, &[]).unwrap()));
    }

    #[test]
    fn barrier_for_k4_minus_edge() {
        let b = find_barrier_for_inadmissible(&k4_minus_ab(), EdgeId(4)).unwrap();
        assert_eq!(b.vertices, VertexSet::from_iter([2, 3]));
        assert_eq!(b.odd_component_count, 2);
    }

    #[test]
    fn barrier_refuses_admissible_edge() {
        assert_eq!(
            find_barrier_for_inadmissible(&k4(), EdgeId(0)),
            Err(Error::AdmissibleEdge(EdgeId(0)))
        );
    }

    #[test]
    fn barrier_for_every_inadmissible_edge_of_c6_plus_chord() {
        // hexagon 0..5 with chord 0-2; the chord and its neighbours are tested
        let mut pairs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        pairs.push((0, 2));
        let g = Multigraph::build(6, &pairs).unwrap();
        let pms = enumerate_perfect_matchings(&g).unwrap();
        let mut seen = 0;
        for e in g.edge_ids() {
            let used = pms.iter().any(|m| m.contains(e));
            match find_barrier_for_inadmissible(&g, e) {
                Ok(b) => {
                    assert!(!used);
                    assert!(b.vertices.is_subset(g.vertices()));
                    assert!(g.edge(e).unwrap().ends().is_subset(b.vertices));
                    assert_eq!(odd_components(&g, b.vertices), b.vertices.len());
                    seen += 1;
                }
                Err(err) => {
                    assert!(used);
                    assert_eq!(err, Error::AdmissibleEdge(e));
                }
            }
        }
        assert_eq!(seen, 1);
    }
}
