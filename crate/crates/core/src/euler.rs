//! Trails, Eulerian trail construction and trail labels.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Word;
use crate::graph::{Arc, Indexed, LabeledGraph};
use crate::{Error, Result};

/// A sequence of arcs over distinct edges, each starting where the previous
/// one ends. The empty trail keeps an anchor vertex so both ends are defined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trail {
    tail: String,
    head: String,
    arcs: Vec<Arc>,
}

impl Trail {
    pub fn empty(at: impl Into<String>) -> Self {
        let at = at.into();
        Self { tail: at.clone(), head: at, arcs: Vec::new() }
    }

    /// Checks the arcs against `g` and builds the trail. `start` is only
    /// consulted when `arcs` is empty.
    pub fn from_arcs(g: &LabeledGraph, start: &str, arcs: Vec<Arc>) -> Result<Self> {
        g.require_vertex(start)?;
        let Some(first) = arcs.first() else {
            return Ok(Self::empty(start));
        };
        let tail = g.arc_tail(first)?.to_string();
        let mut at = tail.as_str();
        let mut edges = BTreeSet::new();
        for arc in &arcs {
            let t = g.arc_tail(arc)?;
            if t != at {
                return Err(Error::InvalidTrail(format!("`{arc}` starts at `{t}`, not `{at}`")));
            }
            if !edges.insert(arc.edge.as_str()) {
                return Err(Error::InvalidTrail(format!("edge `{}` used twice", arc.edge)));
            }
            at = g.arc_head(arc)?;
        }
        let head = at.to_string();
        Ok(Self { tail, head, arcs })
    }

    pub(crate) fn from_parts_unchecked(tail: &str, head: &str, arcs: Vec<Arc>) -> Self {
        Self { tail: tail.to_string(), head: head.to_string(), arcs }
    }

    pub fn tail(&self) -> &str {
        &self.tail
    }

    pub fn head(&self) -> &str {
        &self.head
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_circuit(&self) -> bool {
        self.tail == self.head
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &str> {
        self.arcs.iter().map(|a| a.edge.as_str())
    }

    /// The same edges walked backwards.
    #[must_use]
    pub fn invert(&self) -> Trail {
        Trail {
            tail: self.head.clone(),
            head: self.tail.clone(),
            arcs: self.arcs.iter().rev().map(Arc::reversed).collect(),
        }
    }

    pub fn concat(&self, next: &Trail) -> Result<Trail> {
        if self.head != next.tail {
            return Err(Error::InvalidTrail(format!(
                "cannot join a trail ending at `{}` to one starting at `{}`",
                self.head, next.tail
            )));
        }
        let mine: BTreeSet<&str> = self.edge_ids().collect();
        if let Some(e) = next.edge_ids().find(|e| mine.contains(e)) {
            return Err(Error::InvalidTrail(format!("edge `{e}` used twice")));
        }
        let mut arcs = self.arcs.clone();
        arcs.extend(next.arcs.iter().cloned());
        Ok(Trail { tail: self.tail.clone(), head: next.head.clone(), arcs })
    }

    /// Builds `before · circuit · after`, where `circuit` must be closed.
    pub fn insert_subcircuit(before: &Trail, circuit: &Trail, after: &Trail) -> Result<Trail> {
        if !circuit.is_circuit() {
            return Err(Error::InvalidTrail("inserted trail is not a circuit".into()));
        }
        before.concat(circuit)?.concat(after)
    }

    /// Whitespace-separated arc tokens, `id` or `id'`.
    pub fn to_tokens(&self) -> String {
        self.arcs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }

    /// Parses arc tokens written by [`Trail::to_tokens`]. `start` anchors an
    /// empty trail and must match the first arc's tail otherwise.
    pub fn parse(g: &LabeledGraph, start: &str, text: &str) -> Result<Trail> {
        let arcs = text
            .split_whitespace()
            .map(|tok| match tok.strip_suffix('\'') {
                Some(id) if !id.is_empty() => Arc::reverse(id),
                _ => Arc::forward(tok),
            })
            .collect();
        let t = Self::from_arcs(g, start, arcs)?;
        if t.tail != start {
            return Err(Error::InvalidTrail(format!("trail starts at `{}`, not `{start}`", t.tail)));
        }
        Ok(t)
    }
}

impl fmt::Display for Trail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arcs.is_empty() {
            write!(f, "(empty at {})", self.tail)
        } else {
            f.write_str(&self.to_tokens())
        }
    }
}

/// Degree and connectivity test for an Eulerian trail from `a` to `b`.
pub fn trail_exists(g: &LabeledGraph, a: &str, b: &str) -> Result<bool> {
    g.require_vertex(a)?;
    g.require_vertex(b)?;
    for v in g.vertices() {
        let odd = g.degree(v) % 2 == 1;
        let should_be_odd = a != b && (v == a || v == b);
        if odd != should_be_odd {
            return Ok(false);
        }
    }
    if g.edge_count() == 0 {
        return Ok(a == b);
    }
    let Some(component) = g.connected_components().into_iter().find(|c| c.contains(a)) else {
        return Ok(false);
    };
    Ok(component.contains(b)
        && g.edges().all(|e| component.contains(&e.u)))
}

/// Hierholzer's algorithm. At each vertex the smallest unused arc is taken
/// first, so the output is a function of the graph alone.
pub fn find_trail(g: &LabeledGraph, a: &str, b: &str) -> Result<Trail> {
    if !trail_exists(g, a, b)? {
        return Err(Error::Precondition(format!("no Eulerian trail from `{a}` to `{b}`")));
    }
    let ix = Indexed::new(g);
    let out = ix.out_arcs();
    let mut next = vec![0usize; ix.vertex_count()];
    let mut used = vec![false; ix.edge_count()];
    let mut stack: Vec<(usize, Option<(usize, bool)>)> = vec![(ix.index(a), None)];
    let mut reversed_trail = Vec::with_capacity(ix.edge_count());
    while let Some(&(v, _)) = stack.last() {
        while next[v] < out[v].len() && used[out[v][next[v]].0] {
            next[v] += 1;
        }
        if let Some(&(e, rev, head)) = out[v].get(next[v]) {
            used[e] = true;
            stack.push((head, Some((e, rev))));
        } else {
            let (_, via) = stack.pop().expect("stack is non-empty");
            if let Some(arc) = via {
                reversed_trail.push(arc);
            }
        }
    }
    let arcs = reversed_trail
        .into_iter()
        .rev()
        .map(|(e, rev)| {
            let id = ix.edge_id(e);
            if rev {
                Arc::reverse(id)
            } else {
                Arc::forward(id)
            }
        })
        .collect();
    let t = Trail::from_arcs(g, a, arcs)?;
    debug_assert!(is_eulerian(g, &t, a, b));
    Ok(t)
}

/// Concatenated arc labels.
pub fn trail_label(g: &LabeledGraph, t: &Trail) -> Result<Word> {
    let mut w = Word::identity();
    for arc in t.arcs() {
        w.extend_from(&g.arc_label(arc)?);
    }
    Ok(w)
}

/// Whether `t` is a trail of `g` from `a` to `b` using every edge once.
pub fn is_eulerian(g: &LabeledGraph, t: &Trail, a: &str, b: &str) -> bool {
    let Ok(checked) = Trail::from_arcs(g, t.tail(), t.arcs().to_vec()) else {
        return false;
    };
    checked == *t && t.tail() == a && t.head() == b && t.len() == g.edge_count()
}
