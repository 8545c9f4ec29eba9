//! Edmonds' blossom algorithm on adjacency bitmasks.

const NONE: usize = usize::MAX;

/// Maximum matching of the subgraph induced by `alive`, as a mate array
/// (`usize::MAX` for exposed vertices).
pub(crate) fn max_mates(adj: &[u64], alive: u64) -> Vec<usize> {
    let n = adj.len();
    let mut s = Search {
        adj,
        alive,
        mate: vec![NONE; n],
        p: vec![NONE; n],
        base: (0..n).collect(),
        used: 0,
        blossom: 0,
        queue: Vec::with_capacity(n),
    };
    // greedy start
    for v in bits(alive) {
        if s.mate[v] == NONE {
            if let Some(u) = bits(adj[v] & alive).find(|&u| s.mate[u] == NONE) {
                s.mate[v] = u;
                s.mate[u] = v;
            }
        }
    }
    for root in bits(alive) {
        if s.mate[root] == NONE {
            if let Some(end) = s.find_path(root) {
                s.augment(end);
            }
        }
    }
    s.mate
}

/// Size of a maximum matching of the subgraph induced by `alive`.
pub(crate) fn matching_number(adj: &[u64], alive: u64) -> usize {
    max_mates(adj, alive).iter().filter(|&&m| m != NONE).count() / 2
}

pub(crate) fn has_perfect(adj: &[u64], alive: u64) -> bool {
    let k = alive.count_ones() as usize;
    k % 2 == 0 && 2 * matching_number(adj, alive) == k
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            v
        })
    })
}

struct Search<'a> {
    adj: &'a [u64],
    alive: u64,
    mate: Vec<usize>,
    p: Vec<usize>,
    base: Vec<usize>,
    used: u64,
    blossom: u64,
    queue: Vec<usize>,
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= 1 << a;
            if self.mate[a] == NONE {
                break;
            }
            a = self.p[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen >> b & 1 == 1 {
                return b;
            }
            b = self.p[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.blossom |= 1 << self.base[v] | 1 << self.base[m];
            self.p[v] = child;
            child = m;
            v = self.p[m];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used = 1 << root;
        self.p.fill(NONE);
        for i in 0..self.base.len() {
            self.base[i] = i;
        }
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in bits(self.adj[v] & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.p[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom = 0;
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in bits(self.alive) {
                        if self.blossom >> self.base[i] & 1 == 1 {
                            self.base[i] = cur;
                            if self.used >> i & 1 == 0 {
                                self.used |= 1 << i;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.p[to] == NONE {
                    self.p[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used |= 1 << next;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.p[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive matching number by branching on the lowest alive vertex.
    fn brute(adj: &[u64], alive: u64) -> usize {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let mut best = brute(adj, rest);
        for u in bits(adj[v] & rest) {
            best = best.max(1 + brute(adj, rest & !(1 << u)));
        }
        best
    }

    fn rows(n: usize, bits_in: &[bool]) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits_in[k] {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        adj
    }

    #[test]
    fn odd_cycle_with_tail_needs_blossom() {
        // 5-cycle 0..4 with pendant 5 at 2 and pendant 6 at 4
        let mut adj = vec![0u64; 7];
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (4, 6)] {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        assert_eq!(matching_number(&adj, 0x7f), 3);
        let mates = max_mates(&adj, 0x7f);
        for v in 0..7 {
            if mates[v] != NONE {
                assert_eq!(mates[mates[v]], v);
                assert!(adj[v] >> mates[v] & 1 == 1);
            }
        }
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 1usize..=10, edges in proptest::collection::vec(any::<bool>(), 45), mask in any::<u64>()) {
            let adj = rows(n, &edges);
            let alive = mask & ((1u64 << n) - 1);
            prop_assert_eq!(matching_number(&adj, alive), brute(&adj, alive));
            let mates = max_mates(&adj, alive);
            for v in 0..n {
                if mates[v] != NONE {
                    prop_assert!(alive >> v & 1 == 1);
                    prop_assert_eq!(mates[mates[v]], v);
                    prop_assert!(adj[v] >> mates[v] & 1 == 1);
                }
            }
        }
    }
}
