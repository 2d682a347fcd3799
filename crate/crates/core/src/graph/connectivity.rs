use std::collections::{HashMap, VecDeque};

use super::LabeledGraph;

/// Integer-indexed snapshot of a graph: vertices and edges numbered in id
/// order. Used by the flow, traversal and enumeration routines.
pub(crate) struct Indexed<'g> {
    names: Vec<&'g str>,
    index: HashMap<&'g str, usize>,
    /// Edge ends `(u, v)` of the forward arc, by edge index.
    ends: Vec<(usize, usize)>,
    edge_ids: Vec<&'g str>,
    /// `(edge, other end)` for every non-loop edge end, in edge order.
    neighbors: Vec<Vec<(usize, usize)>>,
}

impl<'g> Indexed<'g> {
    pub(crate) fn new(g: &'g LabeledGraph) -> Self {
        let index = g.vertex_positions();
        let names: Vec<&str> = g.vertices().map(String::as_str).collect();
        let mut ends = Vec::with_capacity(g.edge_count());
        let mut edge_ids = Vec::with_capacity(g.edge_count());
        let mut neighbors = vec![Vec::new(); names.len()];
        for (k, e) in g.edges().enumerate() {
            let (u, v) = (index[e.u.as_str()], index[e.v.as_str()]);
            ends.push((u, v));
            edge_ids.push(e.id.as_str());
            if u != v {
                neighbors[u].push((k, v));
                neighbors[v].push((k, u));
            }
        }
        Self { names, index, ends, edge_ids, neighbors }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub(crate) fn name(&self, v: usize) -> &'g str {
        self.names[v]
    }

    pub(crate) fn index(&self, v: &str) -> usize {
        self.index[v]
    }



    pub(crate) fn edge_id(&self, e: usize) -> &'g str {
        self.edge_ids[e]
    }

    pub(crate) fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.neighbors[v]
    }

    /// Arcs leaving every vertex as `(edge, reversed, head)`, in arc order.
    /// Loops contribute both arcs.
    pub(crate) fn out_arcs(&self) -> Vec<Vec<(usize, bool, usize)>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (k, &(u, v)) in self.ends.iter().enumerate() {
            out[u].push((k, false, v));
            out[v].push((k, true, u));
        }
        out
    }

    /// Unit-capacity max flow between `s` and `t`, stopping once `limit`
    /// augmenting paths are found.
    pub(crate) fn max_flow(&self, s: usize, t: usize, limit: usize) -> usize {
        // flow[e] is +1 when edge e carries flow u→v, -1 for v→u
        let mut flow = vec![0i8; self.edge_count()];
        let mut found = 0;
        while found < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertex_count()];
            let mut seen = vec![false; self.vertex_count()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &(e, y) in &self.neighbors[x] {
                    if seen[y] {
                        continue;
                    }
                    let dir: i8 = if self.ends[e].0 == x { 1 } else { -1 };
                    if flow[e] == dir {
                        continue;
                    }
                    seen[y] = true;
                    prev[y] = Some((e, x));
                    if y == t {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while let Some((e, x)) = prev[y] {
                flow[e] += if self.ends[e].0 == x { 1 } else { -1 };
                y = x;
            }
            found += 1;
        }
        found
    }
}
