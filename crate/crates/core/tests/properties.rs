mod common;

use common::{isomorphic, Plain};
use mcbrick::graph::{canonical_form, emit_graph6, parse_graph6};
use mcbrick::harness::builtin_cubic;
use mcbrick::structure::{is_brick, is_matching_covered, removable_doubletons, removable_edges};
use mcbrick::triladder::{all_bijections, splice};
use mcbrick::{EdgeId, Multigraph};
use proptest::prelude::*;
use proptest::sample::Index;

fn graph(max_n: usize, parallel: bool) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        (Just(n), proptest::collection::vec(0..=if parallel { 2usize } else { 1 }, k)).prop_map(
            move |(n, mult)| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(&mult)
                    .flat_map(|(&p, &m)| std::iter::repeat_n(p, m))
                    .collect();
                Multigraph::build(n, &edges).unwrap()
            },
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn sorted_ids(v: Vec<EdgeId>) -> Vec<usize> {
    let mut out: Vec<usize> = v.into_iter().map(|e| e.0).collect();
    out.sort_unstable();
    out
}

fn matching_covered_cubic() -> Vec<Multigraph> {
    (4..=8)
        .step_by(2)
        .flat_map(|n| builtin_cubic(n).unwrap())
        .filter(is_matching_covered)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels(
        (g, perm) in graph(9, true).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), permutation(n))
        })
    ) {
        let h = g.relabeled(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(is_matching_covered(&g), is_matching_covered(&h));
        prop_assert_eq!(is_brick(&g), is_brick(&h));
    }

    #[test]
    fn canonical_form_decides_isomorphism(a in graph(6, false), b in graph(6, false)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, isomorphic(&Plain::of(&a), &Plain::of(&b)));
    }

    #[test]
    fn graph6_round_trip(g in graph(12, false)) {
        let back = parse_graph6(&emit_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let norm = |g: &Multigraph| {
            let mut e: Vec<(usize, usize)> = g.endpoint_pairs().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
            e.sort_unstable();
            e
        };
        prop_assert_eq!(norm(&back), norm(&g));
    }

    #[test]
    fn structure_agrees_with_oracle(g in graph(6, true)) {
        let p = Plain::of(&g);
        let mc = p.matching_covered(p.all());
        prop_assert_eq!(is_matching_covered(&g), mc);
        if mc {
            prop_assert_eq!(sorted_ids(removable_edges(&g).unwrap()), p.ids_of(p.removable()));
            prop_assert_eq!(removable_doubletons(&g).unwrap().len(), p.doubletons().len());
            prop_assert_eq!(is_brick(&g), p.is_brick());
        }
    }

    #[test]
    fn splicing_preserves_matching_covered(i in any::<Index>(), j in any::<Index>(), u in any::<Index>(), v in any::<Index>(), b in any::<Index>()) {
        let corpus = matching_covered_cubic();
        let g1 = i.get(&corpus);
        let g2 = j.get(&corpus);
        let u1 = u.index(g1.vertex_count());
        let u2 = v.index(g2.vertex_count());
        let bijections = all_bijections(g1, u1, g2, u2);
        let s = splice(g1, u1, g2, u2, b.get(&bijections)).unwrap();
        prop_assert!(is_matching_covered(&s.graph));
        let p = Plain::of(&s.graph);
        prop_assert!(p.matching_covered(p.all()));
    }

    /// Splicing a matching covered graph with a bipartite one creates a tight
    /// cut; an edge is removable in the splice exactly when it is removable
    /// in every side that contains it.
    #[test]
    fn removability_lifts_across_tight_cuts(i in any::<Index>(), j in any::<Index>(), u in any::<Index>(), v in any::<Index>(), b in any::<Index>()) {
        let corpus = matching_covered_cubic();
        let braces: Vec<&Multigraph> = corpus.iter().filter(|g| g.is_bipartite()).collect();
        let g1 = i.get(&corpus);
        let g2 = *j.get(&braces);
        let u1 = u.index(g1.vertex_count());
        let u2 = v.index(g2.vertex_count());
        let bijections = all_bijections(g1, u1, g2, u2);
        let s = splice(g1, u1, g2, u2, b.get(&bijections)).unwrap();
        let r = sorted_ids(removable_edges(&s.graph).unwrap());
        let r1 = sorted_ids(removable_edges(g1).unwrap());
        let r2 = sorted_ids(removable_edges(g2).unwrap());
        for &(old, new) in &s.left_edges {
            prop_assert_eq!(r.contains(&new.0), r1.contains(&old.0));
        }
        for &(old, new) in &s.right_edges {
            prop_assert_eq!(r.contains(&new.0), r2.contains(&old.0));
        }
        let bij = b.get(&bijections);
        for (&(a, c), &new) in bij.iter().zip(&s.joined) {
            let e1 = g1.edge_between(u1, a).unwrap();
            let e2 = g2.edge_between(u2, c).unwrap();
            prop_assert_eq!(r.contains(&new.0), r1.contains(&e1.0) && r2.contains(&e2.0));
        }
    }
}
