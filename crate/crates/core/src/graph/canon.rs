//! Canonical labelling by colour refinement and individualization.
//!
//! The search tree is explored completely except for two prunings that only
//! discard subtrees equivalent under an automorphism already found: orbit
//! pruning under the pointwise stabilizer of the current prefix, and the
//! jump back to the common ancestor with the first leaf whenever a leaf
//! reproduces the first leaf's code.

use std::fmt;

use super::Multigraph;
use crate::error::{Error, Result};

pub const MAX_CANON_VERTICES: usize = 20;

/// Byte string that is equal for two multigraphs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form plus a labelling `perm` (vertex `v` goes to `perm[v]`)
/// under which `g.relabeled(&perm)` has adjacency exactly as encoded.
pub fn canonical_labeling(g: &Multigraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut adj = vec![vec![0u8; n]; n];
    for e in g.edges() {
        let m = adj[e.u][e.v].saturating_add(1);
        adj[e.u][e.v] = m;
        adj[e.v][e.u] = m;
    }
    let (code, perm) = canonical_code_colored(&adj, &vec![0; n]);
    Ok((CanonicalForm(code), perm))
}

/// Canonical code of a vertex-coloured multiplicity matrix. Isomorphisms
/// must preserve colours. Returns the code and the canonical labelling.
pub(crate) fn canonical_code_colored(adj: &[Vec<u8>], colors: &[u32]) -> (Vec<u8>, Vec<usize>) {
    let n = adj.len();
    let mut search = Search {
        adj,
        colors,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut path = Vec::new();
    search.explore(cells, &mut path);
    let best = search.best.expect("at least one leaf");
    (best.code, best.labeling)
}

struct Leaf {
    code: Vec<u8>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [Vec<u8>],
    colors: &'a [u32],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the caller should unwind to the node at
    /// `depth` because the rest of its current subtree is equivalent to
    /// something already explored.
    fn explore(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let depth = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !tried.is_empty() {
                let orbit_rep = self.orbit_rep_fixing(path);
                if tried.iter().any(|&t| orbit_rep[t] == orbit_rep[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            path.push(v);
            let jump = self.explore(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut labeling = vec![0; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let code = self.encode(&labeling);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                code,
                labeling,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                code: leaf.code.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if code == first.code {
            let auto = compose_to(&labeling, &first.labeling);
            let common = path
                .iter()
                .zip(&first.path)
                .take_while(|(a, b)| a == b)
                .count();
            self.autos.push(auto);
            return Some(common);
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            std::cmp::Ordering::Equal => {
                let auto = compose_to(&labeling, &best.labeling);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    code,
                    labeling,
                    path: path.to_vec(),
                });
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    fn encode(&self, labeling: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (v, &p) in labeling.iter().enumerate() {
            inv[p] = v;
        }
        let mut code = Vec::with_capacity(1 + 4 * n + n * n / 2);
        code.push(n as u8);
        for &v in &inv {
            code.extend_from_slice(&self.colors[v].to_be_bytes());
        }
        for j in 1..n {
            for i in 0..j {
                code.push(self.adj[inv[i]][inv[j]]);
            }
        }
        code
    }

    /// Union-find representatives of the orbits of the group generated by
    /// the stored automorphisms that fix every vertex of `path`.
    fn orbit_rep_fixing(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.autos {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for v in 0..self.n {
                let a = find(&mut parent, v);
                let b = find(&mut parent, auto[v]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    /// Equitable refinement: split every cell by the vector of edge counts
    /// into each current cell, until stable. Depends only on the ordered
    /// partition and adjacency, never on vertex names.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let k = cells.len();
            if k == n {
                return cells;
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u16>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u16; k];
                        for (w, &m) in self.adj[v].iter().enumerate() {
                            if m > 0 {
                                sig[cell_of[w]] += m as u16;
                            }
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let before = next.len();
                for (i, (sig, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != *sig {
                        next.push(vec![*v]);
                    } else {
                        next.last_mut().unwrap().push(*v);
                    }
                }
                if next.len() - before > 1 {
                    changed = true;
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }
}

/// `v -> to_inv[from[v]]`: maps a vertex to the vertex occupying the same
/// position under the other labelling.
fn compose_to(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut to_inv = vec![0; to.len()];
    for (v, &p) in to.iter().enumerate() {
        to_inv[p] = v;
    }
    from.iter().map(|&p| to_inv[p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn shuffled(g: &Multigraph, seed: u64) -> Multigraph {
        // small LCG-driven Fisher-Yates, no external RNG needed here
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabeled(&perm)
    }

    /// Brute-force isomorphism over all vertex permutations.
    fn isomorphic_brute(a: &Multigraph, b: &Multigraph) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if (0..n).all(|u| {
                (0..n).all(|v| u == v || a.multiplicity(u, v) == b.multiplicity(perm[u], perm[v]))
            }) {
                return true;
            }
            // next permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return false;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn cbar6_labelings_agree() {
        let g = cbar6();
        let c = canonical_form(&g).unwrap();
        for seed in 0..100 {
            assert_eq!(canonical_form(&shuffled(&g, seed)).unwrap(), c);
        }
    }

    #[test]
    fn cbar6_is_complement_of_c6() {
        let mut pairs = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if (b - a) % 6 != 1 && !(a == 0 && b == 5) {
                    pairs.push((a, b));
                }
            }
        }
        let complement = Multigraph::build(6, &pairs).unwrap();
        assert_eq!(
            canonical_form(&complement).unwrap(),
            canonical_form(&cbar6()).unwrap()
        );
    }

    #[test]
    fn distinguishes_small_pairs() {
        let c4_chord = Multigraph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&k4()).unwrap(), canonical_form(&c4_chord).unwrap());
        assert_ne!(canonical_form(&cbar6()).unwrap(), canonical_form(&k33()).unwrap());
        let digon = Multigraph::build(2, &[(0, 1), (0, 1)]).unwrap();
        let single = Multigraph::build(2, &[(0, 1)]).unwrap();
        assert_ne!(canonical_form(&digon).unwrap(), canonical_form(&single).unwrap());
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = petersen();
        let (form, perm) = canonical_labeling(&g).unwrap();
        let h = g.relabeled(&perm);
        let (form2, perm2) = canonical_labeling(&h).unwrap();
        assert_eq!(form, form2);
        assert_eq!(perm2, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        let mut pairs = Vec::new();
        for a in 0..20 {
            for b in a + 1..20 {
                pairs.push((a, b));
            }
        }
        let k20 = Multigraph::build(20, &pairs).unwrap();
        assert_eq!(canonical_form(&k20).unwrap(), canonical_form(&shuffled(&k20, 3)).unwrap());
        let empty = Multigraph::build(20, &[]).unwrap();
        canonical_form(&empty).unwrap();
    }

    #[test]
    fn size_cap() {
        let g = Multigraph::build(21, &[]).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn agrees_with_brute_force_on_random_small_multigraphs() {
        let mut s: u64 = 7;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as usize
        };
        for _ in 0..300 {
            let n = 2 + next() % 5;
            let m = next() % 9;
            let mut pairs = Vec::new();
            for _ in 0..m {
                let a = next() % n;
                let b = (a + 1 + next() % (n - 1)) % n;
                pairs.push((a, b));
            }
            let a = Multigraph::build(n, &pairs).unwrap();
            let b = if next() % 2 == 0 {
                shuffled(&a, next() as u64)
            } else {
                let mut p2 = pairs.clone();
                if !p2.is_empty() {
                    let i = next() % p2.len();
                    let x = next() % n;
                    let y = (x + 1 + next() % (n - 1)) % n;
                    p2[i] = (x, y);
                }
                Multigraph::build(n, &p2).unwrap()
            };
            let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            assert_eq!(same, isomorphic_brute(&a, &b), "{a:?} vs {b:?}");
        }
    }
}
