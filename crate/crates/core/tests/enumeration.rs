mod common;

use std::collections::HashMap;

use common::{isomorphic, Plain};
use mcbrick::harness::{builtin_connected, builtin_cubic};

/// Every labelled simple cubic graph on `n` vertices with `N(0) = {1,2,3}`;
/// each isomorphism class has such a labelling.
fn labelled_cubic(n: usize, f: &mut dyn FnMut(&[(usize, usize)])) {
    fn go(v: usize, n: usize, deg: &mut [usize], edges: &mut Vec<(usize, usize)>, f: &mut dyn FnMut(&[(usize, usize)])) {
        if v == n {
            f(edges);
            return;
        }
        let need = 3 - deg[v];
        let open: Vec<usize> = (v + 1..n).filter(|&w| deg[w] < 3).collect();
        choose(&open, need, 0, &mut Vec::new(), &mut |picked| {
            for &w in picked {
                deg[w] += 1;
                edges.push((v, w));
            }
            deg[v] = 3;
            go(v + 1, n, deg, edges, f);
            deg[v] -= need;
            for &w in picked {
                deg[w] -= 1;
                edges.pop();
            }
        });
    }
    fn choose(from: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..from.len() {
            acc.push(from[i]);
            choose(from, k, i + 1, acc, f);
            acc.pop();
        }
    }
    let mut deg = vec![0; n];
    let mut edges = vec![(0, 1), (0, 2), (0, 3)];
    deg[..4].copy_from_slice(&[3, 1, 1, 1]);
    go(1, n, &mut deg, &mut edges, f);
}

/// Sorted per-vertex profile: counts of vertices at each distance and
/// triangles through the vertex.
fn invariant(p: &Plain) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..p.n)
        .map(|s| {
            let mut dist = vec![usize::MAX; p.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(a, b) in &p.edges {
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            let mut row = vec![0; p.n + 1];
            for d in dist {
                row[d.min(p.n)] += 1;
            }
            row.push(p.triangles().iter().filter(|t| *t >> s & 1 == 1).count());
            row
        })
        .collect();
    out.sort();
    out
}

fn classes(graphs: impl IntoIterator<Item = Plain>) -> Vec<Plain> {
    let mut buckets: HashMap<Vec<Vec<usize>>, Vec<Plain>> = HashMap::new();
    let mut reps = Vec::new();
    for p in graphs {
        let bucket = buckets.entry(invariant(&p)).or_default();
        if !bucket.iter().any(|q| isomorphic(q, &p)) {
            bucket.push(p.clone());
            reps.push(p);
        }
    }
    reps
}

#[test]
fn builtin_cubic_matches_labelled_enumeration() {
    for n in [4, 6, 8, 10] {
        let mut found = Vec::new();
        labelled_cubic(n, &mut |edges| {
            let ids = (0..edges.len()).collect();
            let p = Plain { n, edges: edges.to_vec(), ids };
            if p.connected_on(p.vertex_mask(), p.all()) {
                found.push(p);
            }
        });
        let reps = classes(found);
        let builtin: Vec<Plain> = builtin_cubic(n).unwrap().iter().map(Plain::of).collect();
        assert_eq!(builtin.len(), reps.len(), "n = {n}");
        assert_eq!(classes(builtin.iter().cloned()).len(), builtin.len(), "duplicates at n = {n}");
        for r in &reps {
            assert!(builtin.iter().any(|b| isomorphic(b, r)), "n = {n}: class missing");
        }
    }
}

#[test]
fn builtin_connected_is_isomorph_free() {
    for n in 1..=6 {
        let graphs: Vec<Plain> = builtin_connected(n).unwrap().iter().map(Plain::of).collect();
        for p in &graphs {
            assert!(p.connected_on(p.vertex_mask(), p.all()));
        }
        assert_eq!(classes(graphs.iter().cloned()).len(), graphs.len(), "n = {n}");
    }
}
