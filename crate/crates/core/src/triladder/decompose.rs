use std::collections::HashMap;
use std::fmt::Write as _;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::cuts::nontrivial_3cuts;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, emit_graph6, named, CanonicalForm, Multigraph, VertexSet};

/// A 3-cut decomposition: internal nodes carry the shore `X` of the cut
/// used and the children `[G/X̄, G/X]`; leaves have no nontrivial 3-cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTree {
    pub graph: Multigraph,
    pub cut: Option<VertexSet>,
    pub children: Vec<DecompositionTree>,
}

impl DecompositionTree {
    fn leaf(graph: Multigraph) -> Self {
        DecompositionTree {
            graph,
            cut: None,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves in depth-first, left-to-right order.
    pub fn leaves(&self) -> Vec<&Multigraph> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Multigraph>) {
        if self.is_leaf() {
            out.push(&self.graph);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    /// Every leaf is isomorphic to `K4`.
    pub fn is_k4_decomposition(&self) -> bool {
        let k4 = canonical_form(&named::k4()).expect("K4 is small");
        self.leaves()
            .iter()
            .all(|g| canonical_form(g).ok().as_ref() == Some(&k4))
    }

    /// Indented text, one node per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        self.write_text(0, &mut s);
        s
    }

    fn write_text(&self, depth: usize, s: &mut String) {
        let g6 = emit_graph6(&self.graph).unwrap_or_else(|_| "-".into());
        let _ = write!(
            s,
            "{:indent$}n={} m={} graph6={}",
            "",
            self.graph.vertex_count(),
            self.graph.edge_count(),
            g6,
            indent = 2 * depth
        );
        match self.cut {
            Some(x) => {
                let _ = writeln!(s, " cut={:?}", x);
            }
            None => {
                let _ = writeln!(s, " leaf");
            }
        }
        for c in &self.children {
            c.write_text(depth + 1, s);
        }
    }
}

impl Serialize for DecompositionTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DecompositionTree", 5)?;
        st.serialize_field("n", &self.graph.vertex_count())?;
        st.serialize_field("edges", &self.graph.endpoint_pairs())?;
        st.serialize_field("graph6", &emit_graph6(&self.graph).ok())?;
        st.serialize_field("cut", &self.cut)?;
        st.serialize_field("children", &self.children)?;
        st.end()
    }
}

fn require_cubic_3_connected(g: &Multigraph) -> Result<()> {
    if !g.is_cubic() || !g.is_k_connected(3) {
        return Err(Error::Precondition(
            "decomposition needs a 3-connected cubic graph".into(),
        ));
    }
    Ok(())
}

fn split(g: &Multigraph, x: VertexSet) -> (Multigraph, Multigraph) {
    let n = g.vertex_count();
    let (keep_x, _) = g.contract(x.complement(n)).expect("nontrivial shore");
    let (keep_xbar, _) = g.contract(x).expect("nontrivial shore");
    (keep_x, keep_xbar)
}

/// Decomposes along the lexicographically least nontrivial 3-cut at every
/// node.
pub fn three_cut_decomposition(g: &Multigraph) -> Result<DecompositionTree> {
    require_cubic_3_connected(g)?;
    Ok(greedy(g))
}

fn greedy(g: &Multigraph) -> DecompositionTree {
    let Some(cut) = nontrivial_3cuts(g).into_iter().next() else {
        return DecompositionTree::leaf(g.clone());
    };
    let (a, b) = split(g, cut.inside);
    DecompositionTree {
        graph: g.clone(),
        cut: Some(cut.inside),
        children: vec![greedy(&a), greedy(&b)],
    }
}

/// A 3-cut decomposition whose leaves are all `K4`, if one exists. Cut
/// choices are searched exhaustively, memoized on canonical forms.
pub fn k4_decomposition(g: &Multigraph) -> Result<Option<DecompositionTree>> {
    require_cubic_3_connected(g)?;
    let mut search = K4Search {
        k4: canonical_form(&named::k4())?,
        memo: HashMap::new(),
    };
    if !search.decomposable(g) {
        return Ok(None);
    }
    Ok(Some(search.build(g)))
}

struct K4Search {
    k4: CanonicalForm,
    memo: HashMap<CanonicalForm, bool>,
}

impl K4Search {
    fn decomposable(&mut self, g: &Multigraph) -> bool {
        let key = canonical_form(g).expect("decomposition graphs are small");
        if key == self.k4 {
            return true;
        }
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let result = nontrivial_3cuts(g).into_iter().any(|cut| {
            let (a, b) = split(g, cut.inside);
            self.decomposable(&a) && self.decomposable(&b)
        });
        self.memo.insert(key, result);
        result
    }

    fn build(&mut self, g: &Multigraph) -> DecompositionTree {
        if canonical_form(g).expect("small") == self.k4 {
            return DecompositionTree::leaf(g.clone());
        }
        for cut in nontrivial_3cuts(g) {
            let (a, b) = split(g, cut.inside);
            if self.decomposable(&a) && self.decomposable(&b) {
                return DecompositionTree {
                    graph: g.clone(),
                    cut: Some(cut.inside),
                    children: vec![self.build(&a), self.build(&b)],
                };
            }
        }
        unreachable!("build is only called on decomposable graphs")
    }
}
