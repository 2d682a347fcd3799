//! Deciding whether all Eulerian trails from `a` to `b` share one label.
//!
//! The graph is cut into 3-cores along one Eulerian trail. Inside each
//! core's instance the labeling is normalized along a breadth-first
//! spanning tree; the answer is "yes" exactly when every normalized label is
//! an involution and all of them commute, i.e. they generate an elementary
//! abelian 2-group.

use std::collections::{BTreeSet, VecDeque};

use crate::algebra::{GroupOracle, Word};
use crate::cores::{core_partition, extract_unchecked, is_three_edge_connected, ValidInstance};
use crate::euler::{find_trail, trail_exists};
use crate::graph::{LabeledGraph, Shifting};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    /// No Eulerian trail from `a` to `b` exists.
    VacuousYes,
    Yes,
    No,
}

/// Why a normalized labeling fails to generate `Z₂ᵏ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotInvolution { edge: String, label: Word },
    NotCommuting { first_edge: String, first: Word, second_edge: String, second: Word },
}

/// Summary of one core's extracted instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreReport {
    pub block: BTreeSet<String>,
    pub start: String,
    pub end: String,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl CoreReport {
    fn new(block: &BTreeSet<String>, inst: &ValidInstance) -> Self {
        Self {
            block: block.clone(),
            start: inst.start.clone(),
            end: inst.end.clone(),
            vertex_count: inst.graph.vertex_count(),
            edge_count: inst.graph.edge_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    VacuousYes,
    /// `shifting` normalizes every core's instance onto an elementary
    /// abelian 2-group.
    Yes { shifting: Shifting, cores: Vec<CoreReport> },
    No { core: BTreeSet<String>, violation: Violation, cores: Vec<CoreReport> },
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::VacuousYes => VerdictKind::VacuousYes,
            Verdict::Yes { .. } => VerdictKind::Yes,
            Verdict::No { .. } => VerdictKind::No,
        }
    }

    pub fn is_no(&self) -> bool {
        self.kind() == VerdictKind::No
    }

    pub fn cores(&self) -> &[CoreReport] {
        match self {
            Verdict::VacuousYes => &[],
            Verdict::Yes { cores, .. } | Verdict::No { cores, .. } => cores,
        }
    }
}

/// A tree-normalized relabeling of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub shifting: Shifting,
    /// Relabeled graph with every label freely reduced.
    pub graph: LabeledGraph,
    /// Edges of the breadth-first spanning tree; their labels are empty.
    pub tree: BTreeSet<String>,
}

/// Shifts along a breadth-first spanning tree from `root` (neighbors in
/// edge-id order) so that every tree edge ends up with the empty word.
pub fn normalized_shifting(g: &LabeledGraph, root: &str) -> Result<Normalized> {
    g.require_vertex(root)?;
    let mut shifting = Shifting::new();
    shifting.set(root, Word::identity());
    let mut tree = BTreeSet::new();
    let mut queue = VecDeque::from([root.to_string()]);
    while let Some(x) = queue.pop_front() {
        let alpha = shifting.get(&x);
        for e in g.edges() {
            if e.is_loop() || (e.u != x && e.v != x) {
                continue;
            }
            let y = e.other_end(&x);
            if shifting.iter().any(|(v, _)| v == y) {
                continue;
            }
            // the arc x → y reads alpha · label after x has been shifted;
            // shifting y by that word cancels it
            let label = if e.u == x { e.label.clone() } else { e.label.invert() };
            shifting.set(y, alpha.concat(&label).free_reduce());
            tree.insert(e.id.clone());
            queue.push_back(y.to_string());
        }
    }
    if shifting.iter().count() != g.vertex_count() {
        return Err(Error::Disconnected);
    }
    let graph = g.apply_shifting(&shifting)?.map_labels(Word::free_reduce);
    debug_assert!(tree.iter().all(|id| graph.edge(id).is_some_and(|e| e.label.is_empty())));
    Ok(Normalized { shifting, graph, tree })
}

/// Checks that the labels of `g` are involutions that pairwise commute.
/// Returns the first failure in edge-id order.
pub fn check_elementary_abelian(g: &LabeledGraph, oracle: &GroupOracle) -> Result<Option<Violation>> {
    let labels: Vec<(&str, Word)> =
        g.edges().map(|e| (e.id.as_str(), e.label.free_reduce())).collect();
    for (id, w) in &labels {
        if !oracle.has_order_at_most_2(w)? {
            return Ok(Some(Violation::NotInvolution { edge: id.to_string(), label: w.clone() }));
        }
    }
    for (i, (id1, w1)) in labels.iter().enumerate() {
        for (id2, w2) in &labels[i + 1..] {
            if !oracle.commutes(w1, w2)? {
                return Ok(Some(Violation::NotCommuting {
                    first_edge: id1.to_string(),
                    first: w1.clone(),
                    second_edge: id2.to_string(),
                    second: w2.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Normalizes from `root` and checks the result; `Ok(None)` means the
/// normalized labels generate an elementary abelian 2-group.
pub fn check_normalized(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    root: &str,
) -> Result<(Normalized, Option<Violation>)> {
    let n = normalized_shifting(g, root)?;
    let v = check_elementary_abelian(&n.graph, oracle)?;
    Ok((n, v))
}

/// Decision for a 3-edge-connected graph, normalizing from `a`.
pub fn decide_3ec(g: &LabeledGraph, oracle: &GroupOracle, a: &str, b: &str) -> Result<Verdict> {
    decide_3ec_rooted(g, oracle, a, b, a)
}

/// [`decide_3ec`] with an explicit normalization root.
pub fn decide_3ec_rooted(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
    root: &str,
) -> Result<Verdict> {
    if !trail_exists(g, a, b)? {
        return Err(Error::Precondition(format!("no Eulerian trail from `{a}` to `{b}`")));
    }
    if !is_three_edge_connected(g) {
        return Err(Error::Precondition("graph is not 3-edge-connected".into()));
    }
    let block: BTreeSet<String> = g.vertex_set().clone();
    let report = CoreReport {
        block: block.clone(),
        start: a.to_string(),
        end: b.to_string(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
    };
    let (n, violation) = check_normalized(g, oracle, root)?;
    Ok(match violation {
        None => Verdict::Yes { shifting: n.shifting, cores: vec![report] },
        Some(violation) => Verdict::No { core: block, violation, cores: vec![report] },
    })
}

/// Full decision: vacuous when no Eulerian `a → b` trail exists, otherwise
/// "yes" exactly when every core's instance passes the normalized check.
pub fn decide(g: &LabeledGraph, oracle: &GroupOracle, a: &str, b: &str) -> Result<Verdict> {
    if !trail_exists(g, a, b)? {
        return Ok(Verdict::VacuousYes);
    }
    let trail = find_trail(g, a, b)?;
    let partition = core_partition(g);
    let mut instances = Vec::with_capacity(partition.len());
    for block in partition.blocks() {
        instances.push(extract_unchecked(g, &trail, block)?);
    }
    let cores: Vec<CoreReport> = partition
        .blocks()
        .iter()
        .zip(&instances)
        .map(|(b, i)| CoreReport::new(b, i))
        .collect();
    let mut shifting = Shifting::new();
    for (block, inst) in partition.blocks().iter().zip(&instances) {
        let (n, violation) = check_normalized(&inst.graph, oracle, &inst.start)?;
        if let Some(violation) = violation {
            return Ok(Verdict::No { core: block.clone(), violation, cores });
        }
        shifting.extend(n.shifting);
    }
    Ok(Verdict::Yes { shifting, cores })
}

/// Re-extracts every core under `shifting` and checks the instance labels
/// directly, without normalizing again.
pub fn verify_same_label(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
    shifting: &Shifting,
) -> Result<bool> {
    let shifted = g.apply_shifting(shifting)?;
    if !trail_exists(&shifted, a, b)? {
        return Ok(true);
    }
    let trail = find_trail(&shifted, a, b)?;
    for block in core_partition(&shifted).blocks() {
        let inst = extract_unchecked(&shifted, &trail, block)?;
        if check_elementary_abelian(&inst.graph, oracle)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
