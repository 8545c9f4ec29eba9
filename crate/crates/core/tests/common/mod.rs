//! Brute-force oracles built only on perfect-matching enumeration over edge
//! bitmasks. Shares nothing with the library except reading endpoint pairs.

#![allow(dead_code)]

use mcbrick::Multigraph;

/// A graph as plain endpoint pairs; edge `i` is bit `i` of a mask.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Library edge id of each position.
    pub ids: Vec<usize>,
}

impl Plain {
    pub fn of(g: &Multigraph) -> Plain {
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert!(edges.len() <= 64, "oracle handles at most 64 edges");
        Plain {
            n: g.vertex_count(),
            ids: g.edges().iter().map(|e| e.id.0).collect(),
            edges,
        }
    }

    /// Library edge ids of the positions set in `mask`, ascending.
    pub fn ids_of(&self, mask: u64) -> Vec<usize> {
        let mut out: Vec<usize> = Self::bits(mask).map(|i| self.ids[i]).collect();
        out.sort_unstable();
        out
    }

    pub fn all(&self) -> u64 {
        if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    fn bits(mask: u64) -> impl Iterator<Item = usize> {
        (0..64).filter(move |i| mask >> i & 1 == 1)
    }

    /// Every perfect matching using only edges in `alive` and covering
    /// exactly the vertices in `verts`.
    pub fn perfect_matchings_on(&self, verts: u64, alive: u64) -> Vec<u64> {
        let mut out = Vec::new();
        self.extend(verts, alive, 0, &mut out, usize::MAX);
        out
    }

    pub fn perfect_matchings(&self, alive: u64) -> Vec<u64> {
        self.perfect_matchings_on(self.vertex_mask(), alive)
    }

    pub fn has_perfect_matching_on(&self, verts: u64, alive: u64) -> bool {
        let mut out = Vec::new();
        self.extend(verts, alive, 0, &mut out, 1);
        !out.is_empty()
    }

    fn extend(&self, open: u64, alive: u64, chosen: u64, out: &mut Vec<u64>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if open == 0 {
            out.push(chosen);
            return;
        }
        let v = open.trailing_zeros() as usize;
        for i in Self::bits(alive) {
            let (a, b) = self.edges[i];
            if a == b {
                continue;
            }
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if open >> w & 1 == 1 {
                self.extend(open & !(1 << v) & !(1 << w), alive, chosen | 1 << i, out, limit);
            }
        }
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn connected_on(&self, verts: u64, alive: u64) -> bool {
        if verts == 0 {
            return true;
        }
        let start = verts.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for i in Self::bits(alive) {
                let (a, b) = self.edges[i];
                if verts >> a & 1 == 0 || verts >> b & 1 == 0 {
                    continue;
                }
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == verts
    }

    pub fn admissible(&self, alive: u64) -> u64 {
        self.perfect_matchings(alive).iter().fold(0, |acc, m| acc | m)
    }

    /// Connected, at least two vertices, every alive edge in a perfect
    /// matching.
    pub fn matching_covered(&self, alive: u64) -> bool {
        self.n >= 2
            && self.connected_on(self.vertex_mask(), alive)
            && self.admissible(alive) == alive
    }

    pub fn removable(&self) -> u64 {
        let all = self.all();
        Self::bits(all)
            .filter(|&i| self.matching_covered(all & !(1 << i)))
            .fold(0, |acc, i| acc | 1 << i)
    }

    /// Pairs `(i, j)`, `i < j`, neither removable, whose joint removal
    /// leaves a matching covered graph.
    pub fn doubletons(&self) -> Vec<(usize, usize)> {
        let all = self.all();
        let removable = self.removable();
        let m = self.edges.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if removable >> i & 1 == 0
                    && removable >> j & 1 == 0
                    && self.matching_covered(all & !(1 << i) & !(1 << j))
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Side of each vertex in a proper 2-colouring with the alive edges.
    pub fn two_colouring(&self, alive: u64) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for i in Self::bits(alive) {
                    let (a, b) = self.edges[i];
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    let want = !colour[v].unwrap();
                    match colour[w] {
                        None => {
                            colour[w] = Some(want);
                            stack.push(w);
                        }
                        Some(c) if c != want => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Near-bipartite witnesses: pairs of nonremovable edges whose removal
    /// leaves a bipartite matching covered graph. Only meaningful when the
    /// graph itself is nonbipartite and matching covered.
    pub fn witnesses(&self) -> Vec<Witness> {
        let all = self.all();
        let removable = self.removable();
        let m = self.edges.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                if removable >> i & 1 == 1 || removable >> j & 1 == 1 {
                    continue;
                }
                let rest = all & !(1 << i) & !(1 << j);
                let Some(colour) = self.two_colouring(rest) else { continue };
                if !self.matching_covered(rest) {
                    continue;
                }
                let side = |k: usize| colour[self.edges[k].0];
                // e1 lies inside the false side, e2 inside the true side
                let (e1, e2) = if side(i) { (j, i) } else { (i, j) };
                out.push(Witness { e1, e2, colour });
            }
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring(self.all()).is_some()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    /// 3-connected: at least four vertices and no set of at most two
    /// vertices disconnects the rest.
    pub fn three_connected(&self) -> bool {
        let all = self.all();
        let full = self.vertex_mask();
        if self.n < 4 || !self.connected_on(full, all) {
            return false;
        }
        for x in 0..self.n {
            for y in x..self.n {
                if !self.connected_on(full & !(1 << x) & !(1 << y), all) {
                    return false;
                }
            }
        }
        true
    }

    /// Brick: nonbipartite, 3-connected and bicritical.
    pub fn is_brick(&self) -> bool {
        let all = self.all();
        let full = self.vertex_mask();
        if self.n % 2 == 1 || self.is_bipartite() || !self.three_connected() {
            return false;
        }
        (0..self.n).all(|x| {
            (x + 1..self.n).all(|y| self.has_perfect_matching_on(full & !(1 << x) & !(1 << y), all))
        })
    }

    pub fn cut_mask(&self, x: u64) -> u64 {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| (x >> a & 1) != (x >> b & 1))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Every perfect matching meets the cut in exactly one edge.
    pub fn is_tight(&self, x: u64) -> bool {
        let cut = self.cut_mask(x);
        self.perfect_matchings(self.all())
            .iter()
            .all(|m| (m & cut).count_ones() == 1)
    }

    /// Shrinks the vertices of `x` to a single new last vertex.
    pub fn contract(&self, x: u64) -> Plain {
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if x >> v & 1 == 0 {
                *slot = next;
                next += 1;
            }
        }
        let merged = next;
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| x >> a & 1 == 0 || x >> b & 1 == 0)
            .map(|&(a, b)| {
                let f = |v: usize| if x >> v & 1 == 1 { merged } else { index[v] };
                (f(a), f(b))
            })
            .collect();
        let ids = (0..edges.len()).collect();
        Plain {
            n: merged + 1,
            edges,
            ids,
        }
    }

    /// Both cut-contractions are matching covered.
    pub fn is_separating(&self, x: u64) -> bool {
        let xbar = self.vertex_mask() & !x;
        [x, xbar].iter().all(|&s| {
            let c = self.contract(s);
            c.matching_covered(c.all())
        })
    }

    pub fn triangles(&self) -> Vec<u64> {
        let adj = |a: usize, b: usize| self.edges.iter().any(|&(p, q)| (p, q) == (a, b) || (q, p) == (a, b));
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !adj(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if adj(a, c) && adj(b, c) {
                        out.push(1 << a | 1 << b | 1 << c);
                    }
                }
            }
        }
        out
    }

    pub fn neighbourhood(&self, s: u64) -> u64 {
        self.edges.iter().fold(0, |acc, &(a, b)| {
            let mut acc = acc;
            if s >> a & 1 == 1 {
                acc |= 1 << b;
            }
            if s >> b & 1 == 1 {
                acc |= 1 << a;
            }
            acc
        })
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub e1: usize,
    pub e2: usize,
    /// `false` is the side holding `e1`.
    pub colour: Vec<bool>,
}

impl Witness {
    pub fn side(&self, which: bool) -> u64 {
        self.colour
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == which)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }
}

pub fn subsets_of_size(universe: u64, size: usize, f: &mut dyn FnMut(u64)) {
    fn go(rest: u64, size: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if size == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < size {
            return;
        }
        let v = rest.trailing_zeros();
        let rest = rest & !(1 << v);
        go(rest, size - 1, acc | 1 << v, f);
        go(rest, size, acc, f);
    }
    go(universe, size, 0, f);
}

/// Whether `g` is isomorphic to `h`, by trying every vertex bijection with
/// degree pruning. Only for small graphs.
pub fn isomorphic(g: &Plain, h: &Plain) -> bool {
    if g.n != h.n || g.edges.len() != h.edges.len() {
        return false;
    }
    let count = |p: &Plain, a: usize, b: usize| {
        p.edges
            .iter()
            .filter(|&&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
            .count()
    };
    let gd: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let hd: Vec<usize> = (0..h.n).map(|v| h.degree(v)).collect();
    fn go(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        n: usize,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if !used[w] && ok(v, w, map) {
                used[w] = true;
                map.push(w);
                if go(v + 1, map, used, ok, n) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    let ok = |v: usize, w: usize, map: &[usize]| {
        gd[v] == hd[w]
            && count(g, v, v) == count(h, w, w)
            && (0..v).all(|u| count(g, u, v) == count(h, map[u], w))
    };
    go(0, &mut Vec::new(), &mut vec![false; g.n], &ok, g.n)
}
