//! Group-labeled multigraphs.
//!
//! Each edge stores the word read along its written orientation (the
//! forward arc). The reverse arc's label is always the formal inverse and is
//! never stored, so inverse-consistency holds by construction. Loops and
//! parallel edges are allowed; a loop still has two distinct arcs.

mod connectivity;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::algebra::Word;
use crate::{Error, Result};

pub(crate) use connectivity::Indexed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

/// One orientation of an edge. Arcs order by edge id, forward first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub edge: String,
    pub direction: Direction,
}

impl Arc {
    pub fn forward(edge: impl Into<String>) -> Self {
        Self { edge: edge.into(), direction: Direction::Forward }
    }

    pub fn reverse(edge: impl Into<String>) -> Self {
        Self { edge: edge.into(), direction: Direction::Reverse }
    }

    #[must_use]
    pub fn reversed(&self) -> Self {
        let direction = match self.direction {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        };
        Self { edge: self.edge.clone(), direction }
    }

    pub fn is_forward(&self) -> bool {
        self.direction == Direction::Forward
    }
}

impl fmt::Display for Arc {
    /// `id` for the forward arc, `id'` for the reverse one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Forward => write!(f, "{}", self.edge),
            Direction::Reverse => write!(f, "{}'", self.edge),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// Tail of the forward arc.
    pub u: String,
    /// Head of the forward arc.
    pub v: String,
    pub label: Word,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other_end(&self, x: &str) -> &str {
        if self.u == x {
            &self.v
        } else {
            &self.u
        }
    }
}

/// A per-vertex shift word; vertices not listed shift by the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Shifting(BTreeMap<String, Word>);

impl Shifting {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, vertex: impl Into<String>, word: Word) {
        self.0.insert(vertex.into(), word);
    }

    pub fn get(&self, vertex: &str) -> Word {
        self.0.get(vertex).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Word)> {
        self.0.iter()
    }

    /// Longest shift word.
    pub fn difference(&self) -> usize {
        self.0.values().map(Word::len).max().unwrap_or(0)
    }

    /// Merges `other` in; entries of `other` win.
    pub fn extend(&mut self, other: Shifting) {
        self.0.extend(other.0);
    }
}

/// Undirected multigraph with a word on every edge.
///
/// Vertices and edges are kept in id order, which every algorithm in the
/// crate relies on for deterministic tie-breaking.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, Edge>,
}

impl LabeledGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: impl Into<String>) {
        self.vertices.insert(v.into());
    }

    /// Adds an edge oriented `u → v`, creating missing end vertices.
    pub fn add_edge(
        &mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        label: Word,
    ) -> Result<()> {
        let id = id.into();
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let (u, v) = (u.into(), v.into());
        self.vertices.insert(u.clone());
        self.vertices.insert(v.clone());
        self.edges.insert(id.clone(), Edge { id, u, v, label });
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &String> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.values()
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of the forward-label lengths.
    pub fn total_word_length(&self) -> usize {
        self.edges.values().map(|e| e.label.len()).sum()
    }

    pub(crate) fn require_vertex(&self, v: &str) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    fn require_edge(&self, id: &str) -> Result<&Edge> {
        self.edges.get(id).ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn arc_tail(&self, arc: &Arc) -> Result<&str> {
        let e = self.require_edge(&arc.edge)?;
        Ok(match arc.direction {
            Direction::Forward => &e.u,
            Direction::Reverse => &e.v,
        })
    }

    pub fn arc_head(&self, arc: &Arc) -> Result<&str> {
        self.arc_tail(&arc.reversed())
    }

    pub fn arc_label(&self, arc: &Arc) -> Result<Word> {
        let e = self.require_edge(&arc.edge)?;
        Ok(match arc.direction {
            Direction::Forward => e.label.clone(),
            Direction::Reverse => e.label.invert(),
        })
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .values()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Arcs whose tail is `v`, in arc order. A loop at `v` contributes both
    /// of its arcs.
    pub fn arcs_from(&self, v: &str) -> Vec<Arc> {
        let mut out = Vec::new();
        for e in self.edges.values() {
            if e.u == v {
                out.push(Arc::forward(e.id.clone()));
            }
            if e.v == v {
                out.push(Arc::reverse(e.id.clone()));
            }
        }
        out
    }

    /// Non-loop edges with exactly one end in `set`.
    pub fn delta(&self, set: &BTreeSet<String>) -> BTreeSet<String> {
        self.edges
            .values()
            .filter(|e| set.contains(&e.u) != set.contains(&e.v))
            .map(|e| e.id.clone())
            .collect()
    }

    #[must_use]
    pub fn remove_edge(&self, id: &str) -> Self {
        let mut g = self.clone();
        g.edges.remove(id);
        g
    }

    /// Deletes `v` together with its incident edges.
    #[must_use]
    pub fn remove_vertex(&self, v: &str) -> Self {
        let mut g = self.clone();
        g.vertices.remove(v);
        g.edges.retain(|_, e| e.u != v && e.v != v);
        g
    }

    /// Rewrites every label with `f`.
    #[must_use]
    pub fn map_labels(&self, mut f: impl FnMut(&Word) -> Word) -> Self {
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            e.label = f(&e.label);
        }
        g
    }

    /// Shifts by `alpha` at `v`: arcs leaving `v` gain the prefix `alpha`,
    /// arcs entering `v` gain the suffix `alpha⁻¹`.
    pub fn shift_at(&self, v: &str, alpha: &Word) -> Result<Self> {
        self.require_vertex(v)?;
        let inv = alpha.invert();
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            if e.u == v {
                e.label = alpha.concat(&e.label);
            }
            if e.v == v {
                e.label = e.label.concat(&inv);
            }
        }
        Ok(g)
    }

    /// Shifts at every vertex named in `shifting`. Shifts at distinct
    /// vertices commute, so the order does not matter.
    pub fn apply_shifting(&self, shifting: &Shifting) -> Result<Self> {
        for (v, _) in shifting.iter() {
            self.require_vertex(v)?;
        }
        let mut g = self.clone();
        for e in g.edges.values_mut() {
            let head = shifting.get(&e.v).invert();
            let mut label = shifting.get(&e.u);
            label.extend_from(&e.label);
            label.extend_from(&head);
            e.label = label;
        }
        Ok(g)
    }

    /// Replaces the consecutive arcs `first`, `second` by one edge from the
    /// tail of `first` to the head of `second`, labeled by the concatenation.
    /// The new edge is named `"<first-id>*<second-id>"`.
    pub fn split_off(&self, first: &Arc, second: &Arc) -> Result<(Self, String)> {
        if first.edge == second.edge {
            return Err(Error::InvalidSplit(format!("`{first}` and `{second}` share an edge")));
        }
        let tail = self.arc_tail(first)?.to_string();
        let middle = self.arc_head(first)?;
        if middle != self.arc_tail(second)? {
            return Err(Error::InvalidSplit(format!("`{first}` does not end where `{second}` starts")));
        }
        let head = self.arc_head(second)?.to_string();
        let label = self.arc_label(first)?.concat(&self.arc_label(second)?);
        let id = format!("{}*{}", first.edge, second.edge);
        let mut g = self.clone();
        g.edges.remove(&first.edge);
        g.edges.remove(&second.edge);
        g.add_edge(id.clone(), tail, head, label)?;
        Ok((g, id))
    }

    /// Suppresses `v` when it has exactly two incident edges and neither is
    /// a loop; otherwise returns the graph unchanged.
    #[must_use]
    pub fn smooth(&self, v: &str) -> Self {
        let incident: Vec<&Edge> = self.edges.values().filter(|e| e.u == v || e.v == v).collect();
        let [first, second] = incident.as_slice() else {
            return self.clone();
        };
        if first.is_loop() || second.is_loop() {
            return self.clone();
        }
        let into_v = if first.v == v { Arc::forward(&first.id) } else { Arc::reverse(&first.id) };
        let out_of_v = if second.u == v { Arc::forward(&second.id) } else { Arc::reverse(&second.id) };
        let (mut g, _) = self
            .split_off(&into_v, &out_of_v)
            .expect("both arcs pass through v");
        g.vertices.remove(v);
        g
    }

    pub fn connected_components(&self) -> Vec<BTreeSet<String>> {
        let ix = Indexed::new(self);
        let mut comp = vec![usize::MAX; ix.vertex_count()];
        let mut out = Vec::new();
        for s in 0..ix.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut block = BTreeSet::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(x) = stack.pop() {
                block.insert(ix.name(x).to_string());
                for &(_, y) in ix.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            out.push(block);
        }
        out
    }

    /// True when there is at most one component; the empty graph counts.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `u` and `v` are joined by `k` pairwise edge-disjoint paths.
    pub fn edge_connectivity_at_least(&self, u: &str, v: &str, k: usize) -> Result<bool> {
        self.require_vertex(u)?;
        self.require_vertex(v)?;
        if u == v {
            return Err(Error::Precondition("edge connectivity needs two distinct vertices".into()));
        }
        let ix = Indexed::new(self);
        Ok(ix.max_flow(ix.index(u), ix.index(v), k) >= k)
    }

    /// Vertex index map in id order, used by the indexed algorithms.
    pub(crate) fn vertex_positions(&self) -> HashMap<&str, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(ids: &[i32]) -> Word {
        Word::from_signed(ids)
    }

    fn set(vs: &[&str]) -> BTreeSet<String> {
        vs.iter().map(|s| s.to_string()).collect()
    }

    fn digon_path() -> LabeledGraph {
        let mut g = LabeledGraph::new();
        g.add_edge("e1", "u0", "u1", w(&[])).unwrap();
        g.add_edge("e2", "u0", "u1", w(&[1])).unwrap();
        g.add_edge("e3", "u1", "u2", w(&[])).unwrap();
        g.add_edge("e4", "u1", "u2", w(&[2])).unwrap();
        g
    }

    #[test]
    fn arc_labels() {
        let mut g = LabeledGraph::new();
        g.add_edge("e", "x", "y", w(&[1, 2])).unwrap();
        g.add_edge("l", "x", "x", w(&[3])).unwrap();
        assert_eq!(g.arc_label(&Arc::forward("e")).unwrap(), w(&[1, 2]));
        assert_eq!(g.arc_label(&Arc::reverse("e")).unwrap(), w(&[-2, -1]));
        assert_ne!(Arc::forward("l"), Arc::reverse("l"));
        assert_eq!(g.arc_label(&Arc::reverse("l")).unwrap(), w(&[3]).invert());
        assert_eq!(g.arc_tail(&Arc::reverse("e")).unwrap(), "y");
        assert!(g.arc_label(&Arc::forward("zz")).is_err());
        assert_eq!(g.degree("x"), 3);
        assert_eq!(g.arcs_from("x").len(), 3);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let mut g = digon_path();
        assert_eq!(g.add_edge("e1", "a", "b", w(&[])), Err(Error::DuplicateEdge("e1".into())));
    }

    #[test]
    fn shift_examples() {
        let mut g = LabeledGraph::new();
        g.add_edge("l", "v", "v", w(&[2])).unwrap();
        g.add_edge("out", "v", "x", w(&[3])).unwrap();
        g.add_edge("in", "x", "v", w(&[3])).unwrap();
        g.add_edge("far", "x", "y", w(&[4])).unwrap();
        let h = g.shift_at("v", &w(&[1])).unwrap();
        assert_eq!(h.edge("l").unwrap().label, w(&[1, 2, -1]));
        assert_eq!(h.edge("out").unwrap().label, w(&[1, 3]));
        assert_eq!(h.edge("in").unwrap().label, w(&[3, -1]));
        assert_eq!(h.edge("far").unwrap().label, w(&[4]));
        assert_eq!(g.shift_at("v", &Word::identity()).unwrap(), g);
        assert!(g.shift_at("nope", &w(&[1])).is_err());
    }

    #[test]
    fn shiftings_commute_symbolically() {
        let g = digon_path();
        let a = g.shift_at("u0", &w(&[1])).unwrap().shift_at("u1", &w(&[2, 2])).unwrap();
        let b = g.shift_at("u1", &w(&[2, 2])).unwrap().shift_at("u0", &w(&[1])).unwrap();
        assert_eq!(a, b);
        let mut s = Shifting::new();
        s.set("u0", w(&[1]));
        s.set("u1", w(&[2, 2]));
        assert_eq!(g.apply_shifting(&s).unwrap(), a);
        assert_eq!(s.difference(), 2);
        assert_eq!(g.apply_shifting(&Shifting::new()).unwrap(), g);
    }

    #[test]
    fn split_off_examples() {
        let mut g = LabeledGraph::new();
        g.add_edge("e1", "x", "v", w(&[1])).unwrap();
        g.add_edge("e2", "v", "y", w(&[2])).unwrap();
        g.add_edge("e3", "y", "x", w(&[])).unwrap();
        let (h, id) = g.split_off(&Arc::forward("e1"), &Arc::forward("e2")).unwrap();
        assert_eq!(id, "e1*e2");
        let e = h.edge(&id).unwrap();
        assert_eq!((e.u.as_str(), e.v.as_str()), ("x", "y"));
        assert_eq!(e.label, w(&[1, 2]));
        assert!(h.edge("e1").is_none() && h.edge("e2").is_none());

        // closing back on the tail gives a loop
        let (h, id) = g.split_off(&Arc::forward("e2"), &Arc::forward("e3")).unwrap();
        let (h, id) = h.split_off(&Arc::forward(&id), &Arc::forward("e1")).unwrap();
        assert!(h.edge(&id).unwrap().is_loop());
        assert_eq!(id, "e2*e3*e1");

        assert!(g.split_off(&Arc::forward("e1"), &Arc::reverse("e1")).is_err());
        assert!(g.split_off(&Arc::forward("e1"), &Arc::forward("e3")).is_err());
    }

    #[test]
    fn split_off_identity_arcs() {
        let mut g = LabeledGraph::new();
        g.add_edge("a", "x", "y", w(&[])).unwrap();
        g.add_edge("b", "y", "z", w(&[])).unwrap();
        let (h, id) = g.split_off(&Arc::forward("a"), &Arc::forward("b")).unwrap();
        assert!(h.edge(&id).unwrap().label.is_empty());
    }

    #[test]
    fn smooth_examples() {
        let mut g = LabeledGraph::new();
        g.add_edge("e1", "u", "v", w(&[1])).unwrap();
        g.add_edge("e2", "w", "v", w(&[2])).unwrap();
        let h = g.smooth("v");
        assert!(!h.contains_vertex("v"));
        assert_eq!(h.edge_count(), 1);
        let e = h.edge("e1*e2").unwrap();
        assert_eq!((e.u.as_str(), e.v.as_str()), ("u", "w"));
        assert_eq!(e.label, w(&[1, -2]));

        let mut looped = LabeledGraph::new();
        looped.add_edge("l", "v", "v", w(&[1])).unwrap();
        assert_eq!(looped.smooth("v"), looped);

        let mut four = g.clone();
        four.add_edge("e3", "v", "u", w(&[])).unwrap();
        four.add_edge("e4", "v", "w", w(&[])).unwrap();
        assert_eq!(four.smooth("v"), four);
    }

    #[test]
    fn delta_examples() {
        let g = digon_path();
        assert!(g.delta(g.vertex_set()).is_empty());
        assert_eq!(g.delta(&set(&["u0"])), set(&["e1", "e2"]));
        assert_eq!(g.delta(&set(&["u0", "u1"])), set(&["e3", "e4"]));
        let mut h = g.clone();
        h.add_edge("l", "u0", "u0", w(&[])).unwrap();
        assert_eq!(h.delta(&set(&["u0"])), set(&["e1", "e2"]));
    }

    #[test]
    fn connectivity_examples() {
        let g = digon_path();
        assert!(!g.edge_connectivity_at_least("u0", "u1", 3).unwrap());
        assert!(g.edge_connectivity_at_least("u0", "u1", 2).unwrap());
        assert!(g.edge_connectivity_at_least("u0", "u2", 2).unwrap());
        assert!(g.edge_connectivity_at_least("u0", "u1", 1).unwrap());
        assert!(g.edge_connectivity_at_least("u0", "u0", 1).is_err());

        let mut three = LabeledGraph::new();
        for id in ["a", "b", "c"] {
            three.add_edge(id, "x", "y", w(&[])).unwrap();
        }
        assert!(three.edge_connectivity_at_least("x", "y", 3).unwrap());
        assert!(!three.edge_connectivity_at_least("x", "y", 4).unwrap());
    }

    #[test]
    fn components() {
        let mut single = LabeledGraph::new();
        single.add_vertex("v");
        assert!(single.is_connected());
        assert!(digon_path().is_connected());
        let mut loops = LabeledGraph::new();
        loops.add_edge("a", "x", "x", w(&[])).unwrap();
        loops.add_edge("b", "y", "y", w(&[])).unwrap();
        assert!(!loops.is_connected());
        assert_eq!(loops.connected_components().len(), 2);
    }

    fn small_graph() -> impl Strategy<Value = LabeledGraph> {
        (2usize..7, prop::collection::vec((0usize..7, 0usize..7), 0..12)).prop_map(|(n, pairs)| {
            let mut g = LabeledGraph::new();
            for i in 0..n {
                g.add_vertex(format!("v{i}"));
            }
            for (k, (a, b)) in pairs.into_iter().enumerate() {
                g.add_edge(format!("e{k:02}"), format!("v{}", a % n), format!("v{}", b % n), Word::identity())
                    .unwrap();
            }
            g
        })
    }

    /// Smallest cut separating `u` from `v`, by trying every vertex subset.
    fn brute_min_cut(g: &LabeledGraph, u: &str, v: &str) -> usize {
        let vs: Vec<&String> = g.vertices().collect();
        let n = vs.len();
        (0u32..1 << n)
            .filter_map(|mask| {
                let x: BTreeSet<String> =
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
                (x.contains(u) && !x.contains(v)).then(|| g.delta(&x).len())
            })
            .min()
            .unwrap()
    }

    proptest! {
        #[test]
        fn flow_matches_min_cut(g in small_graph(), k in 1usize..5) {
            let vs: Vec<String> = g.vertices().cloned().collect();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let cut = brute_min_cut(&g, &vs[i], &vs[j]);
                    prop_assert_eq!(g.edge_connectivity_at_least(&vs[i], &vs[j], k).unwrap(), cut >= k);
                }
            }
        }

        #[test]
        fn delta_is_submodular(g in small_graph(), xm in 0u32..128, ym in 0u32..128) {
            let vs: Vec<String> = g.vertices().cloned().collect();
            let pick = |m: u32| -> BTreeSet<String> {
                vs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, v)| v.clone()).collect()
            };
            let (x, y) = (pick(xm), pick(ym));
            let union: BTreeSet<String> = x.union(&y).cloned().collect();
            let inter: BTreeSet<String> = x.intersection(&y).cloned().collect();
            prop_assert!(
                g.delta(&union).len() + g.delta(&inter).len() <= g.delta(&x).len() + g.delta(&y).len()
            );
        }
    }
}
