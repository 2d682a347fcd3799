//! Certificates for "no" answers.
//!
//! A witness is an Eulerian trail `T₁ · L · T₂` whose closed middle part
//! `L` has a label that is not an involution. Reversing `L` gives a second
//! Eulerian trail `T₁ · L⁻¹ · T₂` with a different label.
//!
//! The search splits off pairs of consecutive arcs as long as the instance
//! stays a "no" instance, remembering which original arc pairs failed, and
//! reads the witness off the few edges that remain.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use crate::algebra::GroupOracle;
use crate::brute::for_each_trail;
use crate::decide::decide;
use crate::euler::{is_eulerian, trail_label, Trail};
use crate::graph::{Arc, LabeledGraph};
use crate::{Error, Result};

const FINAL_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub prefix: Trail,
    pub circuit: Trail,
    pub suffix: Trail,
}

impl Witness {
    /// `prefix · circuit · suffix`.
    pub fn trail(&self) -> Trail {
        Trail::insert_subcircuit(&self.prefix, &self.circuit, &self.suffix)
            .expect("witness parts fit together")
    }

    /// `prefix · circuit⁻¹ · suffix`.
    pub fn flipped(&self) -> Trail {
        Trail::insert_subcircuit(&self.prefix, &self.circuit.invert(), &self.suffix)
            .expect("witness parts fit together")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSearch {
    pub witness: Witness,
    pub decide_calls: usize,
    pub splits: usize,
}

/// Progress reports from [`find_witness_observed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchEvent {
    /// `first` and `second` were merged into `edge` and the instance stayed
    /// a "no" instance. `last` and `next` are the original arcs that became
    /// consecutive.
    Split { first: Arc, second: Arc, edge: String, last: Arc, next: Arc },
    /// Making the original arcs `last` and `next` consecutive loses the "no"
    /// answer; the pair is never tried again.
    Rejected { last: Arc, next: Arc },
}

/// Finds a witness for a "no" instance. Fails with
/// [`Error::Precondition`] when [`decide`] does not answer "no".
pub fn find_witness(g: &LabeledGraph, oracle: &GroupOracle, a: &str, b: &str) -> Result<WitnessSearch> {
    find_witness_observed(g, oracle, a, b, |_, _| {})
}

/// [`find_witness`], reporting each event together with the current graph
/// after it.
pub fn find_witness_observed(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
    mut observe: impl FnMut(&SearchEvent, &LabeledGraph),
) -> Result<WitnessSearch> {
    let mut decide_calls = 1;
    if !decide(g, oracle, a, b)?.is_no() {
        return Err(Error::Precondition("instance is not a \"no\" instance".into()));
    }
    let mut current = g.clone();
    let mut provenance: BTreeMap<String, Vec<Arc>> =
        g.edges().map(|e| (e.id.clone(), vec![Arc::forward(e.id.clone())])).collect();
    let mut forbidden: BTreeSet<(Arc, Arc)> = BTreeSet::new();
    let mut splits = 0;

    'scan: loop {
        let arcs: Vec<Arc> = current
            .edges()
            .flat_map(|e| [Arc::forward(e.id.clone()), Arc::reverse(e.id.clone())])
            .collect();
        for x in &arcs {
            let middle = current.arc_head(x)?;
            for y in &arcs {
                if x.edge == y.edge || current.arc_tail(y)? != middle {
                    continue;
                }
                let last = expand(&provenance, x).pop().expect("provenance is non-empty");
                let next = expand(&provenance, y).swap_remove(0);
                if forbidden.contains(&(last.clone(), next.clone())) {
                    continue;
                }
                let (split, id) = current.split_off(x, y)?;
                decide_calls += 1;
                if decide(&split, oracle, a, b)?.is_no() {
                    let mut joined = expand(&provenance, x);
                    joined.extend(expand(&provenance, y));
                    provenance.remove(&x.edge);
                    provenance.remove(&y.edge);
                    provenance.insert(id.clone(), joined);
                    current = split;
                    let event = SearchEvent::Split { first: x.clone(), second: y.clone(), edge: id, last, next };
                    observe(&event, &current);
                    splits += 1;
                    continue 'scan;
                }
                observe(&SearchEvent::Rejected { last: last.clone(), next: next.clone() }, &current);
                forbidden.insert((next.reversed(), last.reversed()));
                forbidden.insert((last, next));
            }
        }
        break;
    }

    let (prefix, circuit, suffix) = small_witness(&current, oracle, a, b)?;
    let lift = |t: &Trail| -> Result<Trail> {
        let arcs: Vec<Arc> = t.arcs().iter().flat_map(|arc| expand(&provenance, arc)).collect();
        Trail::from_arcs(g, t.tail(), arcs)
    };
    let witness = Witness { prefix: lift(&prefix)?, circuit: lift(&circuit)?, suffix: lift(&suffix)? };
    debug_assert!(validate_witness(g, oracle, a, b, &witness).unwrap_or(false));
    Ok(WitnessSearch { witness, decide_calls, splits })
}

/// Original arcs traversed by `arc` of the current graph.
fn expand(provenance: &BTreeMap<String, Vec<Arc>>, arc: &Arc) -> Vec<Arc> {
    let forward = &provenance[&arc.edge];
    if arc.is_forward() {
        forward.clone()
    } else {
        forward.iter().rev().map(Arc::reversed).collect()
    }
}

/// Exhaustive search over the remaining graph for an Eulerian trail with a
/// closed segment whose label is not an involution.
fn small_witness(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
) -> Result<(Trail, Trail, Trail)> {
    let mut found = None;
    let mut failure = None;
    for_each_trail(g, a, b, FINAL_ENUMERATION_CAP, |t| {
        match closed_segment(g, oracle, t) {
            Ok(Some(parts)) => {
                found = Some(parts);
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    found.ok_or_else(|| {
        Error::Invariant(format!(
            "no non-involutive circuit among the {} remaining edges",
            g.edge_count()
        ))
    })
}

fn closed_segment(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    t: &Trail,
) -> Result<Option<(Trail, Trail, Trail)>> {
    let arcs = t.arcs();
    let mut at = vec![t.tail().to_string()];
    for arc in arcs {
        at.push(g.arc_head(arc)?.to_string());
    }
    for len in 1..=arcs.len() {
        for i in 0..=arcs.len() - len {
            let j = i + len;
            if at[i] != at[j] {
                continue;
            }
            let part = |lo: usize, hi: usize| {
                Trail::from_parts_unchecked(&at[lo], &at[hi], arcs[lo..hi].to_vec())
            };
            let circuit = part(i, j);
            if !oracle.has_order_at_most_2(&trail_label(g, &circuit)?.free_reduce())? {
                return Ok(Some((part(0, i), circuit, part(j, arcs.len()))));
            }
        }
    }
    Ok(None)
}

/// Whether `w` really certifies a "no": both of its trails are Eulerian
/// from `a` to `b` and their labels differ.
pub fn validate_witness(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
    w: &Witness,
) -> Result<bool> {
    if !w.circuit.is_circuit()
        || w.prefix.head() != w.circuit.tail()
        || w.circuit.head() != w.suffix.tail()
    {
        return Ok(false);
    }
    let Ok(first) = Trail::insert_subcircuit(&w.prefix, &w.circuit, &w.suffix) else {
        return Ok(false);
    };
    let second = w.flipped();
    if !is_eulerian(g, &first, a, b) || !is_eulerian(g, &second, a, b) {
        return Ok(false);
    }
    Ok(!oracle.equals(&trail_label(g, &first)?, &trail_label(g, &second)?)?)
}
