//! Constructions of the Praeger-Xu graphs `PX(2, r, s)`, their splits
//! `S(PX(2, r, s))`, the natural 4-cycle decomposition, the `Split`
//! construction, and the small named cubic graphs.

mod wreath;

pub use wreath::{
    wreath_generators, wreath_group, DihedralElement, PxSpace, SpxSpace, WreathElement,
    WreathTarget,
};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use std::collections::BTreeSet;

/// `PX(2, r, s)`: vertex set `Z2^s x Zr`, with
/// `(n_0, .., n_{s-1}, x)` adjacent to `(n_1, .., n_s, x+1)` for both
/// values of the new bit `n_s`. Connected and 4-valent on `r * 2^s`
/// vertices.
pub fn px_graph(r: usize, s: usize) -> Result<Graph> {
    let space = PxSpace::new(r, s)?;
    let mut g = Graph::new(space.vertex_count());
    for x in 0..r {
        for word in 0..(1u64 << (s + 1)) {
            // word holds (n_0, .., n_s); the two endpoints read windows
            // word[0..s] and word[1..=s]
            let a = space.encode(word & ((1 << s) - 1), x);
            let b = space.encode(word >> 1, (x + 1) % r);
            g.add_edge(a, b)?;
        }
    }
    let labels = (0..space.vertex_count()).map(|v| space.label(v)).collect();
    g.with_labels(labels)
}

/// `S(PX(2, r, s))`: vertex set `Z2^s x Zr x {+,-}` with the two edge
/// families `{(n_0..n_{s-1}, x, +), (n_1..n_s, x+1, -)}` and
/// `{(n, x, +), (n, x, -)}`. Cubic on `r * 2^{s+1}` vertices.
pub fn spx_graph(r: usize, s: usize) -> Result<Graph> {
    let space = SpxSpace::new(r, s)?;
    let mut g = Graph::new(space.vertex_count());
    for x in 0..r {
        for word in 0..(1u64 << (s + 1)) {
            let a = space.encode(word & ((1 << s) - 1), x, 0);
            let b = space.encode(word >> 1, (x + 1) % r, 1);
            g.add_edge(a, b)?;
        }
        for bits in 0..(1u64 << s) {
            g.add_edge(space.encode(bits, x, 0), space.encode(bits, x, 1))?;
        }
    }
    let labels = (0..space.vertex_count()).map(|v| space.label(v)).collect();
    g.with_labels(labels)
}

/// Independent construction of `PX(2, r, s)` from traversing paths of
/// `PX(2, r, 1)`: vertices are the paths on `s` vertices meeting each
/// fiber at most once, adjacent when their union is a traversing path on
/// `s + 1` vertices. Serves as an oracle for `px_graph`.
pub fn px_via_traversing_paths(r: usize, s: usize) -> Result<Graph> {
    PxSpace::new(r, s)?;
    let base = px_r1_lexicographic(r)?;
    let fiber = |v: usize| v / 2;
    if s == 1 {
        return Ok(base);
    }
    // enumerate all traversing paths with s vertices by DFS
    let mut paths: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..base.vertex_count()).map(|v| vec![v]).collect();
    while let Some(path) = stack.pop() {
        if path.len() == s {
            let mut canonical = path.clone();
            if canonical[0] > canonical[s - 1] {
                canonical.reverse();
            }
            paths.insert(canonical);
            continue;
        }
        let last = *path.last().unwrap();
        for next in base.neighbors(last) {
            if path.iter().all(|&v| fiber(v) != fiber(next)) {
                let mut extended = path.clone();
                extended.push(next);
                stack.push(extended);
            }
        }
    }
    let paths: Vec<Vec<usize>> = paths.into_iter().collect();
    let mut g = Graph::new(paths.len());
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate().skip(i + 1) {
            if union_is_traversing_path(fiber, p, q, s) {
                g.add_edge(i, j)?;
            }
        }
    }
    let labels = paths
        .iter()
        .map(|p| {
            let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            format!("p:{}", parts.join("-"))
        })
        .collect();
    g.with_labels(labels)
}

/// `PX(2, r, 1)` built directly as the lexicographic product of an
/// `r`-cycle with two independent vertices: `(u, x) ~ (v, y)` iff
/// `x - y = +-1`. Vertex `(u, x)` is encoded as `2x + u`.
fn px_r1_lexicographic(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::ParamRange(format!("r={r} must be at least 3")));
    }
    let mut g = Graph::new(2 * r);
    for x in 0..r {
        for u in 0..2 {
            for v in 0..2 {
                g.add_edge(2 * x + u, 2 * ((x + 1) % r) + v)?;
            }
        }
    }
    Ok(g)
}

/// The union here is the union of the two paths as subgraphs (their
/// vertices and edges), which must again be a path meeting `s + 1`
/// distinct fibers.
fn union_is_traversing_path(
    fiber: impl Fn(usize) -> usize,
    p: &[usize],
    q: &[usize],
    s: usize,
) -> bool {
    let mut union: Vec<usize> = p.iter().chain(q.iter()).copied().collect();
    union.sort_unstable();
    union.dedup();
    if union.len() != s + 1 {
        return false;
    }
    let mut fibers: Vec<usize> = union.iter().map(|&v| fiber(v)).collect();
    fibers.sort_unstable();
    fibers.dedup();
    if fibers.len() != s + 1 {
        return false;
    }
    let path_edges = |path: &[usize]| -> Vec<(usize, usize)> {
        path.windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    };
    let mut edges = path_edges(p);
    edges.extend(path_edges(q));
    edges.sort_unstable();
    edges.dedup();
    // a connected graph on s+1 vertices with s edges and max degree 2
    // is a path
    if edges.len() != s {
        return false;
    }
    let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    if union.iter().any(|&v| degree(v) > 2) {
        return false;
    }
    let mut seen = vec![union[0]];
    let mut queue = vec![union[0]];
    while let Some(v) = queue.pop() {
        for &(a, b) in &edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen.contains(&w) {
                seen.push(w);
                queue.push(w);
            }
        }
    }
    seen.len() == union.len()
}

// ---------------------------------------------------------------------------
// Cycle decompositions
// ---------------------------------------------------------------------------

/// A set of cycles intended to partition the edge set of a host graph.
/// Cycles are kept in canonical form: least vertex first, then the
/// smaller of its two cycle neighbours second; the list is sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn new(cycles: Vec<Vec<usize>>) -> CycleDecomposition {
        let mut cycles: Vec<Vec<usize>> = cycles.into_iter().map(canonical_cycle).collect();
        cycles.sort();
        CycleDecomposition { cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// The edges of one cycle, as ordered `(min, max)` pairs.
    pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
        (0..cycle.len())
            .map(|i| {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                (u.min(v), u.max(v))
            })
            .collect()
    }

    /// True iff every cycle is a genuine cycle of `host` and the cycle
    /// edge sets partition the host's edge set.
    pub fn is_valid_for(&self, host: &Graph) -> bool {
        let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
        for cycle in &self.cycles {
            if cycle.len() < 3 {
                return false;
            }
            let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
            if distinct.len() != cycle.len() {
                return false;
            }
            for (u, v) in Self::cycle_edges(cycle) {
                if u >= host.vertex_count() || v >= host.vertex_count() || !host.has_edge(u, v) {
                    return false;
                }
                if !covered.insert((u, v)) {
                    return false; // edge in two cycles
                }
            }
        }
        covered.len() == host.edge_count()
    }

    /// The image decomposition under a permutation of the host vertices.
    pub fn image_under(&self, p: &crate::perm::Permutation) -> CycleDecomposition {
        CycleDecomposition::new(
            self.cycles
                .iter()
                .map(|c| c.iter().map(|&v| p.apply(v)).collect())
                .collect(),
        )
    }

    /// One cycle per line as a parenthesised vertex sequence.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for cycle in &self.cycles {
            let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("({})\n", parts.join(" ")));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<CycleDecomposition> {
        let mut cycles = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let inner = line
                .strip_prefix('(')
                .and_then(|l| l.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle line {line:?}")))?;
            let cycle: Vec<usize> = inner
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex {t:?}")))
                })
                .collect::<Result<_>>()?;
            cycles.push(cycle);
        }
        Ok(CycleDecomposition::new(cycles))
    }
}

/// Rotates/reflects a cyclic sequence so the least vertex comes first,
/// followed by the smaller of its two neighbours.
fn canonical_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let n = cycle.len();
    if n == 0 {
        return cycle;
    }
    let min_pos = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let forward: Vec<usize> = (0..n).map(|i| cycle[(min_pos + i) % n]).collect();
    if n >= 3 && forward[1] > forward[n - 1] {
        let mut reversed = vec![forward[0]];
        reversed.extend(forward[1..].iter().rev());
        reversed
    } else {
        forward
    }
}

/// The natural 4-cycle decomposition of `PX(2, r, s)`: the `r * 2^{s-1}`
/// cycles `((0,n,x), (n,0,x+1), (1,n,x), (n,1,x+1))`.
pub fn natural_decomposition(r: usize, s: usize) -> Result<CycleDecomposition> {
    let space = PxSpace::new(r, s)?;
    let mut cycles = Vec::new();
    for x in 0..r {
        for middle in 0..(1u64 << (s - 1)) {
            // middle = (n_1, .., n_{s-1}); prepending a bit shifts left,
            // appending writes bit s-1
            let v0 = space.encode(middle << 1, x);
            let v1 = space.encode(middle, (x + 1) % r);
            let v2 = space.encode((middle << 1) | 1, x);
            let v3 = space.encode(middle | (1 << (s - 1)), (x + 1) % r);
            cycles.push(vec![v0, v1, v2, v3]);
        }
    }
    Ok(CycleDecomposition::new(cycles))
}

/// The `Split` construction: vertices are incident `(v, C)` pairs of a
/// 4-valent graph and a cycle decomposition, with `(v1, C1) ~ (v2, C2)`
/// iff the cycles differ and `v1 = v2`, or the cycles agree and
/// `{v1, v2}` is an edge of that cycle. The output is cubic on
/// `2 |V|` vertices.
pub fn split(host: &Graph, decomposition: &CycleDecomposition) -> Result<Graph> {
    if host.valency() != Some(4) {
        return Err(Error::NotFourValent);
    }
    if !decomposition.is_valid_for(host) {
        return Err(Error::InvalidDecomposition);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (c, cycle) in decomposition.cycles().iter().enumerate() {
        for &v in cycle {
            pairs.push((v, c));
        }
    }
    pairs.sort_unstable();
    let index_of = |v: usize, c: usize| -> usize {
        pairs.binary_search(&(v, c)).expect("incident pair exists")
    };
    let mut g = Graph::new(pairs.len());
    // same vertex, two different cycles
    for window in pairs.windows(2) {
        if window[0].0 == window[1].0 {
            g.add_edge(index_of(window[0].0, window[0].1), index_of(window[1].0, window[1].1))?;
        }
    }
    // same cycle, adjacent along it
    for (c, cycle) in decomposition.cycles().iter().enumerate() {
        for (u, v) in CycleDecomposition::cycle_edges(cycle) {
            g.add_edge(index_of(u, c), index_of(v, c))?;
        }
    }
    let labels = pairs.iter().map(|&(v, c)| format!("{v}/{c}")).collect();
    g.with_labels(labels)
}

// ---------------------------------------------------------------------------
// Small named graphs
// ---------------------------------------------------------------------------

/// The circular ladder: Cartesian product of an `n`-cycle with an edge.
pub fn circular_ladder(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::ParamRange(format!("circular ladder needs n >= 3, got {n}")));
    }
    Ok(graph::cartesian_product(&graph::cycle(n), &graph::complete(2)))
}

/// The Moebius ladder: Cayley graph of `Z_{2n}` with connection set
/// `{1, -1, n}`.
pub fn moebius_ladder(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::ParamRange(format!("Moebius ladder needs n >= 2, got {n}")));
    }
    let m = 2 * n;
    let rot = crate::perm::Permutation::from_cycles(m, &[(0..m).collect()])?;
    let elements: Vec<_> = (0..m).map(|k| rot.pow(k as i64)).collect();
    let connection = vec![
        elements[1].clone(),
        elements[m - 1].clone(),
        elements[n].clone(),
    ];
    graph::cayley_graph(&elements, &connection)
}

pub fn k4() -> Graph {
    graph::complete(4)
}

pub fn k33() -> Graph {
    graph::complete_bipartite(3, 3)
}

/// The 3-cube, as the circular ladder on a 4-cycle.
pub fn q3() -> Graph {
    graph::cartesian_product(&graph::cycle(4), &graph::complete(2))
}
