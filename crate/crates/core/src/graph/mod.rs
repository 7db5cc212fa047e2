//! Simple undirected graphs: structural predicates, Cayley and product
//! constructors, quotients, and automorphism/isomorphism search.

mod iso;

pub use iso::{are_isomorphic, automorphism_group, SearchBudget, DEFAULT_SEARCH_BUDGET};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// A simple undirected graph with optional distinct vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Graph {
        Graph {
            adjacency: vec![BTreeSet::new(); vertex_count],
            labels: None,
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n {
            return Err(Error::PointOutOfRange { point: u, degree: n });
        }
        if v >= n {
            return Err(Error::PointOutOfRange { point: v, degree: n });
        }
        if u == v {
            return Err(Error::Parse(format!("loop at vertex {u}")));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    /// Attaches distinct labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Parse("label count != vertex count".into()));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Parse("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// The common valency, present only when the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let mut degrees = (0..self.vertex_count()).map(|v| self.degree_of(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The image of the graph under a relabelling permutation
    /// (vertex `v` becomes `v^p`). Labels are carried along.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: self.vertex_count(),
                found: p.degree(),
            });
        }
        let mut g = Graph::new(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(p.apply(u), p.apply(v))?;
        }
        if let Some(labels) = &self.labels {
            let mut new_labels = vec![String::new(); labels.len()];
            for (v, label) in labels.iter().enumerate() {
                new_labels[p.apply(v)] = label.clone();
            }
            g.labels = Some(new_labels);
        }
        Ok(g)
    }

    /// True iff `p` maps edges onto edges (checked exhaustively).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    /// Edge-list text format: first line `vertices n`, then one `u v` line
    /// per edge with `u < v`.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// JSON export mirroring the edge-list data plus optional labels.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        match self.labels() {
            Some(labels) => serde_json::json!({
                "vertices": self.vertex_count(),
                "edges": edges,
                "labels": labels,
            }),
            None => serde_json::json!({
                "vertices": self.vertex_count(),
                "edges": edges,
            }),
        }
    }

    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let n: usize = header
            .strip_prefix("vertices")
            .map(str::trim)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `vertices n`, got {header:?}")))?;
        let mut g = Graph::new(n);
        for line in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).unwrap();
    }
    g
}

/// Cayley graph on an explicit element list: vertices are indices into
/// `elements`, with `{a, b}` an edge iff `b * a^{-1}` lies in the
/// connection set. Right multiplications then act as automorphisms.
pub fn cayley_graph(elements: &[Permutation], connection: &[Permutation]) -> Result<Graph> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut conn: Vec<&Permutation> = Vec::new();
    for s in connection {
        if s.is_identity() {
            return Err(Error::InvalidConnectionSet);
        }
        if !connection.contains(&s.inverse()) {
            return Err(Error::InvalidConnectionSet);
        }
        if !index.contains_key(s) {
            return Err(Error::UnknownGroupElement);
        }
        if !conn.contains(&s) {
            conn.push(s);
        }
    }
    let mut g = Graph::new(elements.len());
    for (a, ga) in elements.iter().enumerate() {
        for s in &conn {
            // b = s * a  (so that b * a^{-1} = s)
            let b = *index
                .get(&s.compose(ga))
                .ok_or(Error::UnknownGroupElement)?;
            if a != b {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// Standard Cartesian product: `(u1, u2) ~ (v1, v2)` iff equal in one
/// coordinate and adjacent in the other. Vertex `(u1, u2)` is encoded as
/// `u1 * |V2| + u2`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut g = Graph::new(n1 * n2);
    for u1 in 0..n1 {
        for (u2, v2) in g2.edges() {
            g.add_edge(u1 * n2 + u2, u1 * n2 + v2).unwrap();
        }
    }
    for (u1, v1) in g1.edges() {
        for u2 in 0..n2 {
            g.add_edge(u1 * n2 + u2, v1 * n2 + u2).unwrap();
        }
    }
    g
}

/// Quotient by a vertex partition: vertices are blocks, with an edge
/// between distinct blocks iff some edge of the source crosses them.
/// Loops and multiplicities are discarded.
pub fn quotient_by_partition(graph: &Graph, blocks: &[Vec<usize>]) -> Result<Graph> {
    let n = graph.vertex_count();
    let mut block_of = vec![usize::MAX; n];
    let mut count = 0;
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= n || block_of[v] != usize::MAX {
                return Err(Error::InvalidPartition);
            }
            block_of[v] = b;
            count += 1;
        }
    }
    if count != n {
        return Err(Error::InvalidPartition);
    }
    let mut g = Graph::new(blocks.len());
    for (u, v) in graph.edges() {
        if block_of[u] != block_of[v] {
            g.add_edge(block_of[u], block_of[v])?;
        }
    }
    Ok(g)
}

/// All 4-cycles, each in canonical form `(v0, v1, v2, v3)` with `v0`
/// minimal and `v1 < v3`, sorted.
pub fn four_cycles(graph: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let n = graph.vertex_count();
    for a in 0..n {
        let nbrs: Vec<usize> = graph.neighbors(a).filter(|&x| x > a).collect();
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                // common neighbors of b and d other than a, also > a
                for c in graph.neighbors(b) {
                    if c != a && c > a && graph.has_edge(c, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Checks each generator is an automorphism, then returns the orbits of
/// the induced action on edges (orbits sorted by least edge).
pub fn edge_orbits(group: &PermGroup, graph: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    verify_acts_by_automorphisms(group, graph)?;
    let edges = graph.edges();
    let edge_index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut orbit_of = vec![usize::MAX; edges.len()];
    let mut orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for start in 0..edges.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let idx = orbits.len();
        orbit_of[start] = idx;
        let mut members = vec![edges[start]];
        let mut queue = VecDeque::from([edges[start]]);
        while let Some((u, v)) = queue.pop_front() {
            for g in group.generators() {
                let (mut a, mut b) = (g.apply(u), g.apply(v));
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                let e = edge_index[&(a, b)];
                if orbit_of[e] == usize::MAX {
                    orbit_of[e] = idx;
                    members.push((a, b));
                    queue.push_back((a, b));
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

pub fn verify_acts_by_automorphisms(group: &PermGroup, graph: &Graph) -> Result<()> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: graph.vertex_count(),
            found: group.degree(),
        });
    }
    for g in group.generators() {
        if !graph.is_automorphism(g) {
            return Err(Error::NotAutomorphism);
        }
    }
    Ok(())
}

pub fn is_vertex_transitive(group: &PermGroup, graph: &Graph) -> Result<bool> {
    verify_acts_by_automorphisms(group, graph)?;
    Ok(group.is_transitive())
}

/// Arc transitivity via orbit closure on one arc: the orbit of a single
/// directed edge must cover all `2|E|` arcs.
pub fn is_arc_transitive(group: &PermGroup, graph: &Graph) -> Result<bool> {
    verify_acts_by_automorphisms(group, graph)?;
    let edges = graph.edges();
    if edges.is_empty() {
        return Ok(true);
    }
    let arc_count = 2 * edges.len();
    let start = (edges[0].0, edges[0].1);
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((u, v)) = queue.pop_front() {
        for g in group.generators() {
            let arc = (g.apply(u), g.apply(v));
            if seen.insert(arc) {
                queue.push_back(arc);
            }
        }
    }
    Ok(seen.len() == arc_count)
}
