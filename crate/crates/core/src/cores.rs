//! 3-cores and the valid instances extracted from them.
//!
//! A core is a maximal vertex set whose members are pairwise joined by at
//! least three edge-disjoint paths. Since `λ(u,w) ≥ min(λ(u,v), λ(v,w))`,
//! "λ ≥ 3" is an equivalence relation and the cores are its classes.
//!
//! Given an Eulerian trail `C` from `a` to `b` and a core `X`, the extracted
//! instance keeps the edges inside `X` and replaces every excursion of `C`
//! that leaves `X` and comes back by one edge carrying the excursion's
//! label.

use std::collections::{BTreeMap, BTreeSet};

use crate::euler::{is_eulerian, trail_label, Trail};
use crate::graph::{Indexed, LabeledGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorePartition {
    blocks: Vec<BTreeSet<String>>,
}

impl CorePartition {
    /// Blocks ordered by their smallest vertex id.
    pub fn blocks(&self) -> &[BTreeSet<String>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains_block(&self, block: &BTreeSet<String>) -> bool {
        self.blocks.iter().any(|b| b == block)
    }

    pub fn block_of(&self, v: &str) -> Option<&BTreeSet<String>> {
        self.blocks.iter().find(|b| b.contains(v))
    }
}

/// Where an edge of an extracted instance came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// An edge of the original graph with both ends in the core.
    Original(String),
    /// An excursion of the Eulerian trail outside the core, oriented like
    /// the new edge's forward arc.
    Excursion(Trail),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidInstance {
    pub graph: LabeledGraph,
    pub start: String,
    pub end: String,
    pub provenance: BTreeMap<String, Provenance>,
}

impl ValidInstance {
    /// Original edge ids hidden behind one edge of the instance.
    pub fn original_edges(&self, edge: &str) -> Vec<String> {
        match self.provenance.get(edge) {
            Some(Provenance::Original(id)) => vec![id.clone()],
            Some(Provenance::Excursion(t)) => t.edge_ids().map(str::to_string).collect(),
            None => Vec::new(),
        }
    }
}

/// Partition of the vertex set into 3-cores, via pairwise truncated flows.
pub fn core_partition(g: &LabeledGraph) -> CorePartition {
    let ix = Indexed::new(g);
    let n = ix.vertex_count();
    let mut class: Vec<Option<usize>> = vec![None; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let found = reps.iter().position(|&r| ix.max_flow(r, v, 3) >= 3);
        match found {
            Some(c) => class[v] = Some(c),
            None => {
                class[v] = Some(reps.len());
                reps.push(v);
            }
        }
    }
    let mut blocks = vec![BTreeSet::new(); reps.len()];
    for (v, c) in class.into_iter().enumerate() {
        blocks[c.expect("every vertex is classified")].insert(ix.name(v).to_string());
    }
    // vertices are scanned in id order, so blocks already sort by smallest id
    CorePartition { blocks }
}

/// No proper non-empty vertex subset has at most two edges leaving it.
pub fn is_three_edge_connected(g: &LabeledGraph) -> bool {
    let vs: Vec<&String> = g.vertices().collect();
    if vs.len() <= 1 {
        return true;
    }
    if vs.iter().any(|v| g.degree(v) - self_loop_ends(g, v) < 3) {
        return false;
    }
    let ix = Indexed::new(g);
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| ix.max_flow(i, j, 3) >= 3))
}

fn self_loop_ends(g: &LabeledGraph, v: &str) -> usize {
    2 * g.edges().filter(|e| e.is_loop() && e.u == v).count()
}

/// Every component of `G − X` has at most two edges into `X`.
pub fn check_core_boundary(g: &LabeledGraph, core: &BTreeSet<String>) -> bool {
    let mut rest = g.clone();
    for v in core {
        rest = rest.remove_vertex(v);
    }
    rest.connected_components().iter().all(|comp| {
        g.edges()
            .filter(|e| {
                (comp.contains(&e.u) && core.contains(&e.v)) || (comp.contains(&e.v) && core.contains(&e.u))
            })
            .count()
            <= 2
    })
}

/// Extracts the valid instance of `core` along the Eulerian trail `trail`.
pub fn extract_valid_instance(
    g: &LabeledGraph,
    trail: &Trail,
    core: &BTreeSet<String>,
) -> Result<ValidInstance> {
    if !is_eulerian(g, trail, trail.tail(), trail.head()) {
        return Err(Error::Precondition("trail is not Eulerian".into()));
    }
    if !core_partition(g).contains_block(core) {
        return Err(Error::Precondition("vertex set is not a core".into()));
    }
    extract_unchecked(g, trail, core)
}

/// Extraction without re-validating the trail or the core.
pub(crate) fn extract_unchecked(
    g: &LabeledGraph,
    trail: &Trail,
    core: &BTreeSet<String>,
) -> Result<ValidInstance> {
    // vertices visited by the trail: visits[i] is the tail of arc i
    let mut visits: Vec<&str> = Vec::with_capacity(trail.len() + 1);
    visits.push(trail.tail());
    for arc in trail.arcs() {
        visits.push(g.arc_head(arc)?);
    }
    let inside: Vec<usize> = (0..visits.len()).filter(|&i| core.contains(visits[i])).collect();

    let mut h = LabeledGraph::new();
    for v in core {
        h.add_vertex(v.clone());
    }
    let mut provenance = BTreeMap::new();
    for pair in inside.windows(2) {
        let (from, to) = (pair[0], pair[1]);
        let arcs = &trail.arcs()[from..to];
        if let [arc] = arcs {
            let e = g.edge(&arc.edge).expect("trail arcs belong to g");
            h.add_edge(e.id.clone(), e.u.clone(), e.v.clone(), e.label.clone())?;
            provenance.insert(e.id.clone(), Provenance::Original(e.id.clone()));
        } else {
            let sub = Trail::from_arcs(g, visits[from], arcs.to_vec())?;
            let id = format!("{}~{}", arcs[0].edge, arcs[arcs.len() - 1].edge);
            h.add_edge(id.clone(), visits[from], visits[to], trail_label(g, &sub)?)?;
            provenance.insert(id, Provenance::Excursion(sub));
        }
    }
    // a core the trail never enters (an isolated vertex) anchors at its
    // smallest vertex
    let anchor = || core.iter().next().cloned().unwrap_or_default();
    let start = inside.first().map_or_else(anchor, |&i| visits[i].to_string());
    let end = inside.last().map_or_else(anchor, |&i| visits[i].to_string());
    Ok(ValidInstance { graph: h, start, end, provenance })
}
