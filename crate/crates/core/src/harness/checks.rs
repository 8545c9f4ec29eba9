//! The verification checks a campaign runs against every corpus graph.
//!
//! Each check decides its own applicability and recomputes what it needs
//! from the library, so a failure is self-contained.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, named, for_each_subset_of_size, EdgeId, Multigraph, VertexSet};
use crate::matching::{
    enumerate_perfect_matchings, find_barrier_for_inadmissible, has_perfect_matching, is_barrier,
    Matching,
};
use crate::nearbip::{
    check_nonremovable_degree, check_removable_bound, classify_nonremovable, expansion_violations,
    type_count_bounds, witnesses_unchecked, DoubletonWitness,
};
use crate::structure::{
    is_admissible, is_brick, is_brick_by_tight_cuts, is_matching_covered, is_separating_cut,
    is_tight_cut, removable_doubletons, removable_edges,
};
use crate::triladder::{
    classify_3cut, is_triladder, k4_decomposition, nontrivial_3cuts, three_cut_decomposition,
    triladder_structure, ThreeCutKind, TriLadderBlueprint,
};

/// Largest order the perfect-matching oracle is run on.
pub const ORACLE_MAX_VERTICES: usize = 8;
/// Largest order the two brick definitions are compared on.
pub const BRICK_DEFINITIONS_MAX_VERTICES: usize = 12;
/// Largest subset size in the near-bipartite expansion check.
pub const EXPANSION_MAX_SUBSET: usize = 6;
/// Largest side the bipartite expansion check enumerates subsets of.
const BIPARTITE_EXPANSION_MAX_SIDE: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Skipped,
    Passed,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub status: Status,
    /// The violated predicate, for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckOutcome {
    fn skipped() -> Self {
        CheckOutcome {
            status: Status::Skipped,
            detail: None,
            notes: Vec::new(),
        }
    }

    fn passed() -> Self {
        CheckOutcome {
            status: Status::Passed,
            detail: None,
            notes: Vec::new(),
        }
    }

    fn failed(detail: impl Into<String>) -> Self {
        CheckOutcome {
            status: Status::Failed,
            detail: Some(detail.into()),
            notes: Vec::new(),
        }
    }

    fn verdict(failure: Option<String>) -> Self {
        failure.map_or_else(Self::passed, Self::failed)
    }

    fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }
}

/// Facts about a graph shared by the applicability gates.
#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub n: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub cubic: bool,
    pub three_connected: bool,
    pub matching_covered: bool,
    pub brick: bool,
    pub is_k4: bool,
    pub is_cbar6: bool,
    /// Empty unless the graph is nonbipartite and matching covered.
    pub witnesses: Vec<DoubletonWitness>,
}

impl GraphProfile {
    pub fn of(g: &Multigraph) -> GraphProfile {
        let bipartite = g.is_bipartite();
        let matching_covered = is_matching_covered(g);
        let brick = !bipartite && is_brick(g);
        let small = g.vertex_count() <= 6;
        let same_as = |h: Multigraph| {
            small
                && g.vertex_count() == h.vertex_count()
                && g.edge_count() == h.edge_count()
                && canonical_form(g).ok() == canonical_form(&h).ok()
        };
        let witnesses = if matching_covered && !bipartite {
            witnesses_unchecked(g)
        } else {
            Vec::new()
        };
        GraphProfile {
            n: g.vertex_count(),
            connected: g.is_connected(),
            bipartite,
            cubic: g.is_cubic(),
            three_connected: g.is_k_connected(3),
            matching_covered,
            brick,
            is_k4: same_as(named::k4()),
            is_cbar6: same_as(named::cbar6()),
            witnesses,
        }
    }

    pub fn near_bipartite(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn near_bipartite_brick(&self) -> bool {
        self.brick && self.near_bipartite()
    }
}

/// A graph under test, with its generator blueprint when it has one.
pub struct Subject<'a> {
    pub graph: &'a Multigraph,
    pub blueprint: Option<&'a TriLadderBlueprint>,
    pub profile: &'a GraphProfile,
}

pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(&Subject) -> Result<CheckOutcome>,
}

impl Check {
    /// Runs the check. `Err` means the check itself could not be carried
    /// out, which is distinct from the property failing.
    pub fn run(&self, subject: &Subject) -> Result<CheckOutcome> {
        (self.run)(subject)
    }
}

pub const CHECKS: &[Check] = &[
    Check {
        name: "pm-oracle",
        description: "admissibility, tight cuts, removable edges and removable doubletons agree with perfect-matching enumeration",
        run: pm_oracle,
    },
    Check {
        name: "brick-definitions",
        description: "the 3-connectivity brick test agrees with the tight-cut definition",
        run: brick_definitions,
    },
    Check {
        name: "nonremovable-degree",
        description: "in near-bipartite bricks other than K4, vertices with three or more nonremovable edges are at most six degree-3 vertices covered by two disjoint triangles",
        run: nonremovable_degree,
    },
    Check {
        name: "removable-bound",
        description: "near-bipartite bricks other than K4 have at least (n-6)/2 removable edges, with equality exactly for tri-ladders",
        run: removable_bound,
    },
    Check {
        name: "delta-bound",
        description: "bricks other than K4 and the triangular prism have at least max-degree minus 2 removable edges",
        run: delta_bound,
    },
    Check {
        name: "edge-types",
        description: "per witness, each vertex has at most one type-I and two type-II nonremovable edges",
        run: edge_types,
    },
    Check {
        name: "neighborhood-expansion",
        description: "in near-bipartite bricks, one-sided sets S with at most one end of the side's doubleton edge have |N(S)| >= |S|+2 whenever |N(S)| >= 2",
        run: neighborhood_expansion,
    },
    Check {
        name: "three-cut-classification",
        description: "the witness-based tight/good verdict on nontrivial 3-cuts matches direct tight and separating tests",
        run: three_cut_classification,
    },
    Check {
        name: "k4-decomposition",
        description: "a cubic near-bipartite brick has a K4-decomposition exactly when it is a tri-ladder",
        run: k4_decomposition_check,
    },
    Check {
        name: "triladder-rungs",
        description: "in near-bipartite tri-ladders the removable edges are exactly the rungs",
        run: triladder_rungs,
    },
    Check {
        name: "bipartite-expansion",
        description: "a balanced bipartite graph is matching covered exactly when every proper nonempty S on one side has |N(S)| >= |S|+1",
        run: bipartite_expansion,
    },
    Check {
        name: "four-cycle",
        description: "in bipartite matching covered graphs, of two edges at a vertex of degree >= 3 on a common 4-cycle at least one is removable",
        run: four_cycle,
    },
    Check {
        name: "brick-barriers",
        description: "barriers certified after deleting one edge of a brick are never nontrivial barriers of the brick",
        run: brick_barriers,
    },
    Check {
        name: "barrier-intersection",
        description: "for adjacent edges f1, f2 of a brick, barriers of G-f1 and G-f2 share at most one vertex",
        run: barrier_intersection,
    },
    Check {
        name: "near-bipartite-pairs",
        description: "near-bipartite witnesses are exactly the removable doubletons leaving a bipartite graph, and in 3-connected cubic graphs every bipartizing pair",
        run: near_bipartite_pairs,
    },
    Check {
        name: "decomposition-leaves",
        description: "3-cut decompositions shrink at every step and end in bricks or braces without nontrivial 3-cuts",
        run: decomposition_leaves,
    },
];

pub fn check_by_name(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Parses `all` or a comma-separated list of check names, keeping the
/// canonical order.
pub fn select_checks(selector: &str) -> Result<Vec<&'static Check>> {
    if selector.trim() == "all" {
        return Ok(CHECKS.iter().collect());
    }
    let mut wanted = BTreeSet::new();
    for name in selector.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let pos = CHECKS
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::Precondition(format!("unknown check {name:?}")))?;
        wanted.insert(pos);
    }
    if wanted.is_empty() {
        return Err(Error::Precondition("no checks selected".into()));
    }
    Ok(wanted.into_iter().map(|i| &CHECKS[i]).collect())
}

fn fmt_ids(ids: &[EdgeId]) -> String {
    let parts: Vec<String> = ids.iter().map(|e| e.0.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn pm_oracle(s: &Subject) -> Result<CheckOutcome> {
    let g = s.graph;
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Ok(CheckOutcome::skipped());
    }
    let pms = enumerate_perfect_matchings(g)?;
    let some_pm = |pred: &dyn Fn(&Matching) -> bool| pms.iter().any(pred);
    for e in g.edge_ids() {
        if is_admissible(g, e) != some_pm(&|m| m.contains(e)) {
            return Ok(CheckOutcome::failed(format!("is_admissible disagrees on edge {}", e.0)));
        }
    }
    let mc_oracle = g.is_connected() && n >= 2 && g.edge_ids().all(|e| some_pm(&|m| m.contains(e)));
    if mc_oracle != s.profile.matching_covered {
        return Ok(CheckOutcome::failed("is_matching_covered disagrees"));
    }
    if !mc_oracle {
        return Ok(CheckOutcome::passed());
    }

    let mut failure = None;
    let rest = g.vertices().without(0);
    for size in (0..n).step_by(2) {
        for_each_subset_of_size(rest, size, &mut |y| {
            if failure.is_some() {
                return;
            }
            let x = y.with(0);
            let boundary = g.boundary(x);
            let oracle = pms
                .iter()
                .all(|m| boundary.iter().filter(|&&e| m.contains(e)).count() == 1);
            match is_tight_cut(g, x) {
                Ok(t) if t == oracle => {}
                Ok(_) => failure = Some(format!("is_tight_cut disagrees on X = {x:?}")),
                Err(e) => failure = Some(format!("is_tight_cut failed on X = {x:?}: {e}")),
            }
        });
    }
    if let Some(f) = failure {
        return Ok(CheckOutcome::failed(f));
    }

    let mc_after = |removed: &[EdgeId]| -> Result<bool> {
        let connected = g.without_edges(removed)?.is_connected();
        Ok(connected
            && g.edge_ids().filter(|f| !removed.contains(f)).all(|f| {
                some_pm(&|m| m.contains(f) && removed.iter().all(|&r| !m.contains(r)))
            }))
    };
    let mut oracle_removable = Vec::new();
    for e in g.edge_ids() {
        if mc_after(&[e])? {
            oracle_removable.push(e);
        }
    }
    let removable = removable_edges(g)?;
    if removable != oracle_removable {
        return Ok(CheckOutcome::failed(format!(
            "removable_edges = {} but the oracle gives {}",
            fmt_ids(&removable),
            fmt_ids(&oracle_removable)
        )));
    }
    let nonremovable: Vec<EdgeId> = g.edge_ids().filter(|e| !removable.contains(e)).collect();
    let mut oracle_doubletons = BTreeSet::new();
    for (i, &a) in nonremovable.iter().enumerate() {
        for &b in &nonremovable[i + 1..] {
            if mc_after(&[a, b])? {
                oracle_doubletons.insert((a.min(b), a.max(b)));
            }
        }
    }
    let doubletons: BTreeSet<_> = removable_doubletons(g)?
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    Ok(CheckOutcome::verdict((doubletons != oracle_doubletons).then(|| {
        format!("removable_doubletons = {doubletons:?} but the oracle gives {oracle_doubletons:?}")
    })))
}

fn brick_definitions(s: &Subject) -> Result<CheckOutcome> {
    if s.graph.vertex_count() > BRICK_DEFINITIONS_MAX_VERTICES {
        return Ok(CheckOutcome::skipped());
    }
    let by_cuts = is_brick_by_tight_cuts(s.graph)?;
    let elp = is_brick(s.graph);
    Ok(CheckOutcome::verdict((by_cuts != elp).then(|| {
        format!("3-connectivity test says {elp}, tight-cut definition says {by_cuts}")
    })))
}

fn nonremovable_degree(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.near_bipartite_brick() || s.profile.is_k4 {
        return Ok(CheckOutcome::skipped());
    }
    let report = check_nonremovable_degree(s.graph)?;
    let mut notes = Vec::new();
    if report.holds && !report.exceptional.is_empty() && !report.covered_by_triangle_pair {
        notes.push(format!(
            "exceptional set {:?} lies in a single triangle and no disjoint pair covers it",
            report.exceptional
        ));
    }
    if report.holds && !report.within_doubleton_triangles {
        notes.push(format!(
            "exceptional set {:?} is not covered by triangles through a doubleton edge",
            report.exceptional
        ));
    }
    let failure = (!report.holds).then(|| {
        let g = s.graph;
        let in_triangle: VertexSet = g.triangles().into_iter().flatten().collect();
        let outside = report.exceptional.difference(in_triangle);
        let on_doubletons = s.profile.witnesses.iter().all(|w| {
            let ends = [w.e1, w.e2]
                .iter()
                .filter_map(|&e| g.edge(e))
                .fold(VertexSet::EMPTY, |acc, e| acc.union(e.ends()));
            outside.is_subset(ends)
        });
        format!(
            "exceptional vertices {:?} (count {}) are not at most six degree-3 vertices covered by two disjoint triangles; outside every triangle: {:?}{}",
            report.exceptional,
            report.exceptional.len(),
            outside,
            if on_doubletons && !outside.is_empty() {
                ", each an end of a doubleton edge for every witness"
            } else {
                ""
            }
        )
    });
    Ok(CheckOutcome::verdict(failure).with_notes(notes))
}

fn removable_bound(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.near_bipartite_brick() || s.profile.is_k4 {
        return Ok(CheckOutcome::skipped());
    }
    let r = check_removable_bound(s.graph)?;
    let failure = if 2 * r.removable_count + 6 < r.n {
        Some(format!(
            "{} removable edges, below (n-6)/2 for n = {}",
            r.removable_count, r.n
        ))
    } else if r.attains_bound && !r.is_triladder {
        Some(format!(
            "attains the bound with {} removable edges but is not a tri-ladder",
            r.removable_count
        ))
    } else if r.is_triladder && !r.attains_bound {
        Some(format!(
            "tri-ladder with {} removable edges does not attain (n-6)/2 for n = {}",
            r.removable_count, r.n
        ))
    } else {
        None
    };
    Ok(CheckOutcome::verdict(failure))
}

fn delta_bound(s: &Subject) -> Result<CheckOutcome> {
    let p = s.profile;
    if !p.brick || p.is_k4 || p.is_cbar6 {
        return Ok(CheckOutcome::skipped());
    }
    let removable = removable_edges(s.graph)?.len();
    let delta = s.graph.max_degree();
    Ok(CheckOutcome::verdict((removable + 2 < delta).then(|| {
        format!("{removable} removable edges but maximum degree {delta}")
    })))
}

fn edge_types(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.near_bipartite_brick() {
        return Ok(CheckOutcome::skipped());
    }
    for w in &s.profile.witnesses {
        let report = type_count_bounds(s.graph, w)?;
        if let Some(v) = report.violations.first() {
            return Ok(CheckOutcome::failed(format!(
                "witness ({}, {}): vertex {} has {} type-I and {} type-II nonremovable edges",
                w.e1.0, w.e2.0, v.vertex, v.type_i, v.type_ii
            )));
        }
    }
    Ok(CheckOutcome::passed())
}

fn neighborhood_expansion(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.near_bipartite_brick() {
        return Ok(CheckOutcome::skipped());
    }
    for w in &s.profile.witnesses {
        let violations = expansion_violations(s.graph, w, EXPANSION_MAX_SUBSET)?;
        if let Some(v) = violations.first() {
            return Ok(CheckOutcome::failed(format!(
                "witness ({}, {}): S = {:?} has N(S) = {:?}",
                w.e1.0, w.e2.0, v.set, v.neighbourhood
            )));
        }
    }
    Ok(CheckOutcome::passed())
}

fn three_cut_classification(s: &Subject) -> Result<CheckOutcome> {
    let p = s.profile;
    if !p.cubic || !p.three_connected || !p.near_bipartite() {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let removable = removable_edges(g)?;
    for cut in nontrivial_3cuts(g) {
        let x = cut.inside;
        let tight = is_tight_cut(g, x)?;
        let separating = is_separating_cut(g, x)?;
        if !separating {
            return Ok(CheckOutcome::failed(format!("3-cut {x:?} is not separating")));
        }
        for w in &p.witnesses {
            let tag = format!("X = {x:?}, witness ({}, {})", w.e1.0, w.e2.0);
            let verdict = match classify_3cut(g, x, w) {
                Ok(v) => v,
                Err(Error::Inconsistent(msg)) => {
                    return Ok(CheckOutcome::failed(format!("{tag}: {msg}")))
                }
                Err(e) => return Err(e),
            };
            let c = &verdict.certificate;
            if c.x_in_u != c.x_in_w + 1 {
                return Ok(CheckOutcome::failed(format!(
                    "{tag}: |X∩U| = {}, |X∩W| = {}",
                    c.x_in_u, c.x_in_w
                )));
            }
            let classified_tight = verdict.kind == ThreeCutKind::Tight;
            if classified_tight != tight {
                return Ok(CheckOutcome::failed(format!(
                    "{tag}: classified {:?} but is_tight_cut = {tight}",
                    verdict.kind
                )));
            }
            if verdict.kind == ThreeCutKind::Good {
                let Some(zw) = c.zw else {
                    return Ok(CheckOutcome::failed(format!("{tag}: good cut without zw")));
                };
                if removable.contains(&zw) || c.zw_nonremovable != Some(true) {
                    return Ok(CheckOutcome::failed(format!(
                        "{tag}: zw = edge {} is removable",
                        zw.0
                    )));
                }
            }
            if !c.contractions_consistent {
                return Ok(CheckOutcome::failed(format!(
                    "{tag}: contractions lack the predicted near-bipartite structure"
                )));
            }
        }
    }
    Ok(CheckOutcome::passed())
}

fn k4_decomposition_check(s: &Subject) -> Result<CheckOutcome> {
    let p = s.profile;
    if !p.cubic || !p.near_bipartite_brick() || p.n < 6 {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let tree = k4_decomposition(g)?;
    let triladder = is_triladder(g);
    let structure = triladder_structure(g);
    let structure_ok = match &structure {
        Some(st) => st.validate(g).is_ok(),
        None => false,
    };
    let mut notes = Vec::new();
    let greedy = three_cut_decomposition(g)?.is_k4_decomposition();
    if greedy != tree.is_some() {
        notes.push(format!(
            "least-cut decomposition {} a K4-decomposition but the search says {}",
            if greedy { "is" } else { "is not" },
            if tree.is_some() { "present" } else { "absent" }
        ));
    }
    let failure = if let Some(t) = tree.as_ref().filter(|t| !t.is_k4_decomposition()) {
        Some(format!("returned tree has leaves other than K4: {} leaves", t.leaves().len()))
    } else if tree.is_some() != triladder {
        Some(format!(
            "K4-decomposition {} but tri-ladder recognizer says {triladder}",
            if tree.is_some() { "present" } else { "absent" }
        ))
    } else if triladder != structure_ok {
        Some(format!(
            "tri-ladder recognizer says {triladder} but structural recovery says {structure_ok}"
        ))
    } else {
        None
    };
    Ok(CheckOutcome::verdict(failure).with_notes(notes))
}

fn triladder_rungs(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.near_bipartite_brick() {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let rungs: Vec<EdgeId> = match s.blueprint {
        Some(bp) => {
            if let Err(e) = bp.validate(g) {
                return Ok(CheckOutcome::failed(format!("blueprint invalid: {e}")));
            }
            bp.rungs.iter().map(|r| r.edge).collect()
        }
        None => {
            if !is_triladder(g) {
                return Ok(CheckOutcome::skipped());
            }
            match triladder_structure(g) {
                Some(st) => st.rungs.iter().map(|r| r.edge).collect(),
                None => {
                    return Ok(CheckOutcome::failed(
                        "recognized as a tri-ladder but no rung structure was recovered",
                    ))
                }
            }
        }
    };
    let mut rungs = rungs;
    rungs.sort();
    let removable = removable_edges(g)?;
    Ok(CheckOutcome::verdict((removable != rungs).then(|| {
        format!(
            "removable edges {} differ from rungs {}",
            fmt_ids(&removable),
            fmt_ids(&rungs)
        )
    })))
}

fn bipartite_expansion(s: &Subject) -> Result<CheckOutcome> {
    let g = s.graph;
    let Some(bip) = g.bipartition() else {
        return Ok(CheckOutcome::skipped());
    };
    let (u, w) = (bip.side_u, bip.side_w);
    if g.vertex_count() < 4 || u.len() != w.len() || u.len() > BIPARTITE_EXPANSION_MAX_SIDE {
        return Ok(CheckOutcome::skipped());
    }
    let mut deficient = None;
    for size in 1..u.len() {
        for_each_subset_of_size(u, size, &mut |set| {
            if deficient.is_none() && g.neighborhood(set).len() < set.len() + 1 {
                deficient = Some(set);
            }
        });
    }
    let mc = s.profile.matching_covered;
    let failure = match (mc, deficient) {
        (true, Some(set)) => Some(format!(
            "matching covered but N({set:?}) = {:?}",
            g.neighborhood(set)
        )),
        (false, None) => Some("every proper subset expands but the graph is not matching covered".into()),
        _ => None,
    };
    Ok(CheckOutcome::verdict(failure))
}

fn four_cycle(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.bipartite || !s.profile.matching_covered {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let removable = removable_edges(g)?;
    for u in 0..g.vertex_count() {
        if g.degree(u) < 3 {
            continue;
        }
        let at_u: Vec<_> = g.incident_edges(u).copied().collect();
        for (i, f1) in at_u.iter().enumerate() {
            for f2 in &at_u[i + 1..] {
                let (a, b) = (f1.other(u), f2.other(u));
                if a == b {
                    continue;
                }
                let common = g.neighbors(a).intersection(g.neighbors(b)).without(u);
                if common.is_empty() {
                    continue;
                }
                if !removable.contains(&f1.id) && !removable.contains(&f2.id) {
                    return Ok(CheckOutcome::failed(format!(
                        "edges {} and {} at vertex {u} lie on a 4-cycle and are both nonremovable",
                        f1.id.0, f2.id.0
                    )));
                }
            }
        }
    }
    Ok(CheckOutcome::passed())
}

/// For each edge `f` of a brick, the barriers certified for the
/// inadmissible edges of `G − f`, deduplicated.
fn barriers_after_deletion(g: &Multigraph) -> Result<Vec<(EdgeId, Vec<VertexSet>)>> {
    let mut out = Vec::new();
    for f in g.edge_ids() {
        let gf = g.without_edges(&[f])?;
        let mut found = BTreeSet::new();
        if has_perfect_matching(&gf) {
            for e in gf.edge_ids() {
                if !is_admissible(&gf, e) {
                    found.insert(find_barrier_for_inadmissible(&gf, e)?.vertices);
                }
            }
        }
        out.push((f, found.into_iter().collect()));
    }
    Ok(out)
}

fn brick_barriers(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.brick {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    for (f, barriers) in barriers_after_deletion(g)? {
        let gf = g.without_edges(&[f])?;
        for b in barriers {
            if !is_barrier(&gf, b) {
                return Ok(CheckOutcome::failed(format!(
                    "{b:?} certified for G - edge {} is not a barrier there",
                    f.0
                )));
            }
            if b.len() > 1 && is_barrier(g, b) {
                return Ok(CheckOutcome::failed(format!(
                    "{b:?} is a nontrivial barrier of the brick"
                )));
            }
        }
    }
    Ok(CheckOutcome::passed())
}

fn barrier_intersection(s: &Subject) -> Result<CheckOutcome> {
    if !s.profile.brick {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let all = barriers_after_deletion(g)?;
    for (i, (f1, b1)) in all.iter().enumerate() {
        for (f2, b2) in &all[i + 1..] {
            let (e1, e2) = (g.try_edge(*f1)?, g.try_edge(*f2)?);
            if e1.ends().is_disjoint(e2.ends()) {
                continue;
            }
            for s1 in b1 {
                for s2 in b2 {
                    if s1.intersection(*s2).len() > 1 {
                        return Ok(CheckOutcome::failed(format!(
                            "barriers {s1:?} of G - edge {} and {s2:?} of G - edge {} share more than one vertex",
                            f1.0, f2.0
                        )));
                    }
                }
            }
        }
    }
    Ok(CheckOutcome::passed())
}

fn near_bipartite_pairs(s: &Subject) -> Result<CheckOutcome> {
    let p = s.profile;
    if !p.matching_covered || p.bipartite {
        return Ok(CheckOutcome::skipped());
    }
    let g = s.graph;
    let witnessed: BTreeSet<(EdgeId, EdgeId)> = p.witnesses.iter().map(|w| (w.e1, w.e2)).collect();
    for w in &p.witnesses {
        if let Err(e) = classify_nonremovable(g, w) {
            return Ok(CheckOutcome::failed(format!(
                "witness ({}, {}) rejected: {e}",
                w.e1.0, w.e2.0
            )));
        }
    }
    let mut bipartizing = BTreeSet::new();
    for (a, b) in removable_doubletons(g)? {
        if g.without_edges(&[a, b])?.is_bipartite() {
            bipartizing.insert((a.min(b), a.max(b)));
        }
    }
    if bipartizing != witnessed {
        return Ok(CheckOutcome::failed(format!(
            "witness pairs {witnessed:?} differ from bipartizing doubletons {bipartizing:?}"
        )));
    }
    if p.cubic && p.three_connected {
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if g.without_edges(&[a, b])?.is_bipartite() && !witnessed.contains(&(a, b)) {
                    return Ok(CheckOutcome::failed(format!(
                        "removing edges {} and {} leaves a bipartite graph but they are not a witness",
                        a.0, b.0
                    )));
                }
            }
        }
    }
    Ok(CheckOutcome::passed())
}

fn decomposition_leaves(s: &Subject) -> Result<CheckOutcome> {
    let p = s.profile;
    if !p.cubic || !p.three_connected {
        return Ok(CheckOutcome::skipped());
    }
    let tree = three_cut_decomposition(s.graph)?;
    let mut stack = vec![&tree];
    while let Some(node) = stack.pop() {
        for child in &node.children {
            if child.graph.vertex_count() >= node.graph.vertex_count() {
                return Ok(CheckOutcome::failed("a child is not smaller than its parent"));
            }
            stack.push(child);
        }
    }
    for leaf in tree.leaves() {
        if !leaf.is_cubic() || !leaf.is_k_connected(3) || !nontrivial_3cuts(leaf).is_empty() {
            return Ok(CheckOutcome::failed(
                "a leaf is not a 3-connected cubic graph free of nontrivial 3-cuts",
            ));
        }
        let brick_or_brace = if leaf.is_bipartite() {
            crate::structure::is_brace(leaf)?
        } else {
            is_brick(leaf)
        };
        if !brick_or_brace {
            return Ok(CheckOutcome::failed("a leaf is neither a brick nor a brace"));
        }
    }
    Ok(CheckOutcome::passed())
}
