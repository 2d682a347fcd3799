//! Exhaustive Eulerian trail enumeration and seeded random instances.
//!
//! Nothing here shares code with the decision procedure beyond the graph
//! and oracle types; the decision module is tested against it.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GroupOracle, Symbol, Word};
use crate::euler::{trail_label, Trail};
use crate::graph::{Arc, Indexed, LabeledGraph};
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 100_000;

/// Visits every Eulerian trail from `a` to `b` in lexicographic arc order.
/// The visitor can stop the walk early. Returns the number of trails
/// visited, or [`Error::Overflow`] once more than `cap` have been seen.
pub fn for_each_trail(
    g: &LabeledGraph,
    a: &str,
    b: &str,
    cap: usize,
    mut visit: impl FnMut(&Trail) -> ControlFlow<()>,
) -> Result<usize> {
    g.require_vertex(a)?;
    g.require_vertex(b)?;
    if cap == 0 {
        return Err(Error::Precondition("cap must be at least 1".into()));
    }
    let ix = Indexed::new(g);
    let mut walk = Walk {
        ix: &ix,
        out: ix.out_arcs(),
        used: vec![false; ix.edge_count()],
        path: Vec::with_capacity(ix.edge_count()),
        target: ix.index(b),
        count: 0,
        cap,
        start: a,
    };
    let _ = walk.dfs(ix.index(a), &mut visit)?;
    Ok(walk.count)
}

struct Walk<'a, 'g> {
    ix: &'a Indexed<'g>,
    out: Vec<Vec<(usize, bool, usize)>>,
    used: Vec<bool>,
    path: Vec<(usize, bool)>,
    target: usize,
    count: usize,
    cap: usize,
    start: &'a str,
}

impl Walk<'_, '_> {
    fn dfs(
        &mut self,
        at: usize,
        visit: &mut dyn FnMut(&Trail) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        if self.path.len() == self.ix.edge_count() {
            if at != self.target {
                return Ok(ControlFlow::Continue(()));
            }
            self.count += 1;
            if self.count > self.cap {
                return Err(Error::Overflow { cap: self.cap });
            }
            return Ok(visit(&self.trail()));
        }
        for k in 0..self.out[at].len() {
            let (e, rev, head) = self.out[at][k];
            if self.used[e] {
                continue;
            }
            self.used[e] = true;
            self.path.push((e, rev));
            let flow = self.dfs(head, visit)?;
            self.path.pop();
            self.used[e] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn trail(&self) -> Trail {
        let arcs = self
            .path
            .iter()
            .map(|&(e, rev)| {
                let id = self.ix.edge_id(e);
                if rev {
                    Arc::reverse(id)
                } else {
                    Arc::forward(id)
                }
            })
            .collect();
        Trail::from_parts_unchecked(self.start, self.ix.name(self.target), arcs)
    }
}

/// All Eulerian trails from `a` to `b`, in lexicographic arc order.
pub fn enumerate_trails(g: &LabeledGraph, a: &str, b: &str, cap: usize) -> Result<Vec<Trail>> {
    let mut out = Vec::new();
    for_each_trail(g, a, b, cap, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelAgreement {
    /// There is no Eulerian trail at all.
    Vacuous,
    Equal,
    Distinct,
}

/// Whether every Eulerian `a → b` trail label is oracle-equal to the first.
/// Stops at the first disagreement.
pub fn all_labels_equal(
    g: &LabeledGraph,
    oracle: &GroupOracle,
    a: &str,
    b: &str,
    cap: usize,
) -> Result<LabelAgreement> {
    let mut first: Option<Word> = None;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut outcome = LabelAgreement::Vacuous;
    let mut failure = None;
    for_each_trail(g, a, b, cap, |t| {
        let label = match trail_label(g, t) {
            Ok(l) => l.free_reduce(),
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        };
        let Some(reference) = &first else {
            first = Some(label.clone());
            seen.insert(label);
            outcome = LabelAgreement::Equal;
            return ControlFlow::Continue(());
        };
        if seen.contains(&label) {
            return ControlFlow::Continue(());
        }
        match oracle.equals(reference, &label) {
            Ok(true) => {
                seen.insert(label);
                ControlFlow::Continue(())
            }
            Ok(false) => {
                outcome = LabelAgreement::Distinct;
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(outcome),
    }
}

/// Trail labels grouped up to oracle equality; one representative word
/// (the first seen) per class.
pub fn distinct_labels(g: &LabeledGraph, oracle: &GroupOracle, trails: &[Trail]) -> Result<Vec<Word>> {
    let mut reps: Vec<Word> = Vec::new();
    let mut seen: HashSet<Word> = HashSet::new();
    for t in trails {
        let label = trail_label(g, t)?;
        if !seen.insert(label.free_reduce()) {
            continue;
        }
        let mut known = false;
        for r in &reps {
            if oracle.equals(r, &label)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(label);
        }
    }
    Ok(reps)
}

/// Groups available to [`random_instance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RandomBackend {
    Z2 { rank: usize },
    Cyclic { order: u64 },
    /// `S₃` generated by `(123)` and `(12)`.
    S3,
    Free { rank: usize },
}

impl RandomBackend {
    pub fn oracle(&self) -> Result<GroupOracle> {
        Ok(match self {
            RandomBackend::Z2 { rank } => GroupOracle::z2(*rank),
            RandomBackend::Cyclic { order } => GroupOracle::cyclic(*order)?,
            RandomBackend::S3 => GroupOracle::symmetric(3, &[("r", "(123)"), ("s", "(12)")])?,
            RandomBackend::Free { rank } => GroupOracle::free(*rank),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomParams {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub backend: RandomBackend,
    pub max_label_length: usize,
    pub force_eulerian: bool,
    pub same_endpoints: bool,
}

#[derive(Clone, Debug)]
pub struct RandomInstance {
    pub oracle: GroupOracle,
    pub graph: LabeledGraph,
    pub from: String,
    pub to: String,
}

/// A deterministic random instance for `seed`.
///
/// With `force_eulerian` the edges are the steps of a random walk from the
/// start vertex to the end vertex, so that walk is itself an Eulerian trail.
/// Otherwise the edges are uniform random pairs and a trail may not exist.
/// Vertices are `v0..`; `v0` is the start, and `v1` the end when endpoints
/// differ. Edge ids are `e00, e01, …` so that id order is numeric order.
pub fn random_instance(seed: u64, params: &RandomParams) -> Result<RandomInstance> {
    let n = params.vertex_count;
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    if !params.same_endpoints && n < 2 {
        return Err(Error::Precondition("distinct endpoints need two vertices".into()));
    }
    if params.edge_count > 99 {
        return Err(Error::Precondition("at most 99 edges".into()));
    }
    let oracle = params.backend.oracle()?;
    let gens = oracle.generator_count() as u32;
    if gens == 0 && params.max_label_length > 0 {
        return Err(Error::Precondition("labels need at least one generator".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = |i: usize| format!("v{i}");
    let from = name(0);
    let to = if params.same_endpoints { name(0) } else { name(1) };

    let m = params.edge_count;
    let mut ends: Vec<(usize, usize)> = Vec::with_capacity(m);
    if params.force_eulerian {
        if m == 0 && !params.same_endpoints {
            return Err(Error::Precondition("an edgeless walk cannot join distinct endpoints".into()));
        }
        let mut at = 0;
        for step in 0..m {
            let next = if step + 1 == m {
                if params.same_endpoints { 0 } else { 1 }
            } else {
                rng.gen_range(0..n)
            };
            ends.push((at, next));
            at = next;
        }
    } else {
        for _ in 0..m {
            ends.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
    }

    let mut graph = LabeledGraph::new();
    for i in 0..n {
        graph.add_vertex(name(i));
    }
    for (k, (u, v)) in ends.into_iter().enumerate() {
        let (u, v) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        let len = rng.gen_range(0..=params.max_label_length);
        let label: Word = (0..len)
            .map(|_| Symbol::new(rng.gen_range(1..=gens), rng.gen_bool(0.5)))
            .collect();
        graph.add_edge(format!("e{k:02}"), name(u), name(v), label)?;
    }
    Ok(RandomInstance { oracle, graph, from, to })
}

/// The mixed distribution used by the randomized agreement checks:
/// backends `Z₂²`, `Z₆`, `S₃` and `free(2)` in turn, 2 to 5 vertices,
/// 1 to 10 edges, labels of length at most 2, mostly forced Eulerian.
pub fn suite_params(seed: u64) -> RandomParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    let backend = match seed % 4 {
        0 => RandomBackend::Z2 { rank: 2 },
        1 => RandomBackend::Cyclic { order: 6 },
        2 => RandomBackend::S3,
        _ => RandomBackend::Free { rank: 2 },
    };
    let same_endpoints = rng.gen_bool(0.5);
    let vertex_count = rng.gen_range(2..=5);
    RandomParams {
        vertex_count,
        edge_count: rng.gen_range(1..=10),
        backend,
        max_label_length: 2,
        force_eulerian: rng.gen_bool(0.85),
        same_endpoints,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{is_eulerian, trail_exists};

    fn w(ids: &[i32]) -> Word {
        Word::from_signed(ids)
    }

    fn parallel(k: usize) -> LabeledGraph {
        let mut g = LabeledGraph::new();
        for i in 0..k {
            g.add_edge(format!("e{i}"), "x", "y", w(&[])).unwrap();
        }
        g
    }

    #[test]
    fn enumeration_examples() {
        let mut empty = LabeledGraph::new();
        empty.add_vertex("x");
        let ts = enumerate_trails(&empty, "x", "x", 10).unwrap();
        assert_eq!(ts, vec![Trail::empty("x")]);

        let mut looped = LabeledGraph::new();
        looped.add_edge("l", "x", "x", w(&[1])).unwrap();
        let ts = enumerate_trails(&looped, "x", "x", 10).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].to_tokens(), "l");
        assert_eq!(ts[1].to_tokens(), "l'");
    }

    #[test]
    fn parallel_edge_counts_are_factorial() {
        // a closed trail over k parallel edges alternates direction, so it
        // is fixed by the edge order: k! trails
        assert_eq!(enumerate_trails(&parallel(2), "x", "x", 1000).unwrap().len(), 2);
        assert_eq!(enumerate_trails(&parallel(4), "x", "x", 1000).unwrap().len(), 24);
        assert_eq!(enumerate_trails(&parallel(3), "x", "y", 1000).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_is_sound_and_duplicate_free() {
        let mut g = parallel(2);
        g.add_edge("l", "x", "x", w(&[])).unwrap();
        g.add_edge("m", "y", "z", w(&[])).unwrap();
        g.add_edge("n", "z", "y", w(&[])).unwrap();
        let ts = enumerate_trails(&g, "x", "x", 1000).unwrap();
        assert!(!ts.is_empty());
        let unique: HashSet<String> = ts.iter().map(Trail::to_tokens).collect();
        assert_eq!(unique.len(), ts.len());
        assert!(ts.iter().all(|t| is_eulerian(&g, t, "x", "x")));
        let mut sorted = ts.clone();
        sorted.sort_by(|p, q| p.arcs().cmp(q.arcs()));
        assert_eq!(sorted, ts);
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            enumerate_trails(&parallel(4), "x", "x", 23),
            Err(Error::Overflow { cap: 23 })
        );
        assert!(enumerate_trails(&parallel(4), "x", "x", 0).is_err());
    }

    #[test]
    fn label_agreement_examples() {
        let o = GroupOracle::symmetric(3, &[("r", "(123)")]).unwrap();
        let mut g = parallel(2);
        g.add_edge("e2", "x", "y", w(&[1])).unwrap();
        assert_eq!(all_labels_equal(&g, &o, "x", "y", 100).unwrap(), LabelAgreement::Distinct);
        let ts = enumerate_trails(&g, "x", "y", 100).unwrap();
        let reps = distinct_labels(&g, &o, &ts).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(o.equals(&reps[0], &reps[1].invert()).unwrap());

        let mut disjoint = LabeledGraph::new();
        disjoint.add_edge("a", "x", "x", w(&[])).unwrap();
        disjoint.add_edge("b", "y", "y", w(&[])).unwrap();
        assert_eq!(all_labels_equal(&disjoint, &o, "x", "x", 100).unwrap(), LabelAgreement::Vacuous);
    }

    #[test]
    fn random_instances_are_deterministic_and_eulerian() {
        let params = RandomParams {
            vertex_count: 4,
            edge_count: 8,
            backend: RandomBackend::S3,
            max_label_length: 2,
            force_eulerian: true,
            same_endpoints: false,
        };
        for seed in 0..50 {
            let x = random_instance(seed, &params).unwrap();
            let y = random_instance(seed, &params).unwrap();
            assert_eq!(x.graph, y.graph);
            assert_eq!(x.graph.edge_count(), 8);
            assert!(trail_exists(&x.graph, &x.from, &x.to).unwrap());
            assert!(x.graph.edges().all(|e| e.label.len() <= 2));
        }
        let bad = RandomParams { vertex_count: 1, ..params };
        assert!(random_instance(0, &bad).is_err());
    }
}
