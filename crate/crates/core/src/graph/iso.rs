//! Automorphism and isomorphism search by iterated partition refinement
//! with individualization backtracking.
//!
//! Colourings are refined with the signature `(colour, sorted multiset of
//! neighbour colours)` until stable; new colour ids are assigned in sorted
//! signature order, so every step is deterministic. The search budget
//! counts visited nodes and errors with `CapExceeded` when exhausted.

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use std::collections::BTreeMap;

pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// Node budget shared across one search.
pub struct SearchBudget {
    remaining: u64,
}

impl SearchBudget {
    pub fn new(nodes: u64) -> SearchBudget {
        SearchBudget { remaining: nodes }
    }

    fn spend(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::CapExceeded {
                what: "isomorphism search nodes",
                cap: 0,
            });
        }
        self.remaining -= 1;
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget::new(DEFAULT_SEARCH_BUDGET)
    }
}

type Color = u32;

fn signature(g: &Graph, colors: &[Color], v: usize) -> (Color, Vec<Color>) {
    let mut ns: Vec<Color> = g.neighbors(v).map(|w| colors[w]).collect();
    ns.sort_unstable();
    (colors[v], ns)
}

fn distinct_count(colors: &[Color]) -> usize {
    let mut seen: Vec<Color> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Refines a single colouring to its stable partition, normalising colour
/// ids to `0..k`.
fn refine_single(g: &Graph, colors: &mut [Color]) {
    let mut current = distinct_count(colors);
    loop {
        let sigs: Vec<(Color, Vec<Color>)> =
            (0..g.vertex_count()).map(|v| signature(g, colors, v)).collect();
        let mut ids: BTreeMap<&(Color, Vec<Color>), Color> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len() as Color;
            ids.entry(s).or_insert(next);
        }
        // reassign in sorted signature order for canonical ids
        let mut sorted_keys: Vec<&(Color, Vec<Color>)> = ids.keys().copied().collect();
        sorted_keys.sort();
        let ids: BTreeMap<&(Color, Vec<Color>), Color> = sorted_keys
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i as Color))
            .collect();
        for v in 0..g.vertex_count() {
            colors[v] = ids[&sigs[v]];
        }
        let next = distinct_count(colors);
        if next == current {
            return;
        }
        current = next;
    }
}

/// Jointly refines colourings of two graphs; returns false when the
/// colour histograms diverge, in which case no colour-respecting
/// isomorphism exists.
fn refine_pair(
    ga: &Graph,
    ca: &mut [Color],
    gb: &Graph,
    cb: &mut [Color],
) -> bool {
    let mut current = (distinct_count(ca), distinct_count(cb));
    loop {
        let sigs_a: Vec<(Color, Vec<Color>)> =
            (0..ga.vertex_count()).map(|v| signature(ga, ca, v)).collect();
        let sigs_b: Vec<(Color, Vec<Color>)> =
            (0..gb.vertex_count()).map(|v| signature(gb, cb, v)).collect();
        let mut keys: Vec<&(Color, Vec<Color>)> = sigs_a.iter().chain(sigs_b.iter()).collect();
        keys.sort();
        keys.dedup();
        let ids: BTreeMap<&(Color, Vec<Color>), Color> = keys
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i as Color))
            .collect();
        for v in 0..ga.vertex_count() {
            ca[v] = ids[&sigs_a[v]];
        }
        for v in 0..gb.vertex_count() {
            cb[v] = ids[&sigs_b[v]];
        }
        // histograms must agree colour by colour
        let k = ids.len();
        let mut ha = vec![0usize; k];
        let mut hb = vec![0usize; k];
        for &c in ca.iter() {
            ha[c as usize] += 1;
        }
        for &c in cb.iter() {
            hb[c as usize] += 1;
        }
        if ha != hb {
            return false;
        }
        let next = (distinct_count(ca), distinct_count(cb));
        if next == current {
            return true;
        }
        current = next;
    }
}

/// The colour of the branching cell: among colours whose cell has size
/// at least two, the one with the smallest (size, colour) pair.
fn pick_cell(colors: &[Color]) -> Option<Color> {
    let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_default() += 1;
    }
    counts
        .into_iter()
        .filter(|&(_, size)| size >= 2)
        .min_by_key(|&(c, size)| (size, c))
        .map(|(c, _)| c)
}

fn fresh_color(colors: &[Color]) -> Color {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Backtracking search for a colour-respecting isomorphism `ga -> gb`.
fn search(
    ga: &Graph,
    gb: &Graph,
    mut ca: Vec<Color>,
    mut cb: Vec<Color>,
    budget: &mut SearchBudget,
) -> Result<Option<Vec<usize>>> {
    budget.spend()?;
    if !refine_pair(ga, &mut ca, gb, &mut cb) {
        return Ok(None);
    }
    let Some(color) = pick_cell(&ca) else {
        // discrete on both sides: colours give the candidate bijection
        let n = ga.vertex_count();
        let mut of_color = vec![usize::MAX; n];
        for (u, &c) in cb.iter().enumerate() {
            of_color[c as usize] = u;
        }
        let mapping: Vec<usize> = ca.iter().map(|&c| of_color[c as usize]).collect();
        for (u, v) in ga.edges() {
            if !gb.has_edge(mapping[u], mapping[v]) {
                return Ok(None);
            }
        }
        if ga.edge_count() != gb.edge_count() {
            return Ok(None);
        }
        return Ok(Some(mapping));
    };
    let v = (0..ga.vertex_count())
        .find(|&v| ca[v] == color)
        .expect("cell is nonempty");
    let fresh = fresh_color(&ca);
    for u in 0..gb.vertex_count() {
        if cb[u] != color {
            continue;
        }
        let mut ca2 = ca.clone();
        ca2[v] = fresh;
        let mut cb2 = cb.clone();
        cb2[u] = fresh;
        if let Some(m) = search(ga, gb, ca2, cb2, budget)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// A witness isomorphism between two graphs, or `None`. The returned
/// permutation maps vertex `v` of `g1` to `v^p` of `g2` and is re-verified
/// edge by edge before being returned.
pub fn are_isomorphic(
    g1: &Graph,
    g2: &Graph,
    budget: &mut SearchBudget,
) -> Result<Option<Permutation>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    if g1.vertex_count() == 0 {
        return Ok(Some(Permutation::identity(0)));
    }
    let ca = vec![0; g1.vertex_count()];
    let cb = vec![0; g2.vertex_count()];
    match search(g1, g2, ca, cb, budget)? {
        None => Ok(None),
        Some(mapping) => {
            let p = Permutation::from_images(mapping)?;
            for (u, v) in g1.edges() {
                assert!(
                    g2.has_edge(p.apply(u), p.apply(v)),
                    "isomorphism witness failed re-verification"
                );
            }
            Ok(Some(p))
        }
    }
}

/// The full automorphism group, by individualization-refinement: the
/// group respecting a stable colouring is generated by the stabiliser of
/// one vertex of the branching cell (computed recursively) together with
/// one coset representative per further orbit member, each found by a
/// complete colour-respecting search.
pub fn automorphism_group(graph: &Graph, budget: &mut SearchBudget) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let mut colors = vec![0; n];
    refine_single(graph, &mut colors);
    let gens = aut_gens(graph, colors, budget)?;
    for g in &gens {
        assert!(
            graph.is_automorphism(g),
            "automorphism generator failed edge preservation"
        );
    }
    PermGroup::new(n, gens)
}

fn aut_gens(
    graph: &Graph,
    colors: Vec<Color>,
    budget: &mut SearchBudget,
) -> Result<Vec<Permutation>> {
    let Some(color) = pick_cell(&colors) else {
        return Ok(Vec::new());
    };
    let cell: Vec<usize> = (0..graph.vertex_count())
        .filter(|&v| colors[v] == color)
        .collect();
    let v = cell[0];
    let fresh = fresh_color(&colors);
    let mut colors_v = colors.clone();
    colors_v[v] = fresh;
    let mut refined_v = colors_v.clone();
    refine_single(graph, &mut refined_v);
    let mut gens = aut_gens(graph, refined_v, budget)?;
    let mut orbit = orbit_of_under(v, &gens, graph.vertex_count());
    for &u in &cell[1..] {
        if orbit[u] {
            continue;
        }
        let mut colors_u = colors.clone();
        colors_u[u] = fresh;
        if let Some(m) = search(graph, graph, colors_v.clone(), colors_u, budget)? {
            gens.push(Permutation::from_images(m)?);
            orbit = orbit_of_under(v, &gens, graph.vertex_count());
        }
    }
    Ok(gens)
}

fn orbit_of_under(v: usize, gens: &[Permutation], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut queue = vec![v];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, Graph};

    #[test]
    fn aut_orders_of_small_graphs() {
        let mut b = SearchBudget::default();
        assert_eq!(automorphism_group(&complete(4), &mut b).unwrap().order(), 24);
        assert_eq!(
            automorphism_group(&complete_bipartite(3, 3), &mut b)
                .unwrap()
                .order(),
            72
        );
        assert_eq!(automorphism_group(&cycle(5), &mut b).unwrap().order(), 10);
        assert_eq!(automorphism_group(&cycle(8), &mut b).unwrap().order(), 16);
    }

    #[test]
    fn aut_of_petersen_graph() {
        // Kneser graph K(5,2): vertices are 2-subsets, disjointness edges
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        let mut g = Graph::new(10);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate() {
                if i < j && a != c && a != d && b != c && b != d {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        let aut = automorphism_group(&g, &mut SearchBudget::default()).unwrap();
        assert_eq!(aut.order(), 120);
    }

    #[test]
    fn iso_reflexive_and_negative_cases() {
        let mut b = SearchBudget::default();
        let k4 = complete(4);
        let w = are_isomorphic(&k4, &k4, &mut b).unwrap().unwrap();
        assert!(k4.is_automorphism(&w));
        assert!(are_isomorphic(&cycle(6), &complete_bipartite(3, 3), &mut b)
            .unwrap()
            .is_none());
        // same degree sequence, different structure: C6 vs 2 triangles
        let mut two_triangles = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            two_triangles.add_edge(u, v).unwrap();
        }
        assert!(are_isomorphic(&cycle(6), &two_triangles, &mut b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn iso_finds_witness_under_relabelling() {
        let g = complete_bipartite(2, 3);
        let p = Permutation::from_images(vec![3, 1, 4, 0, 2]).unwrap();
        let h = g.relabel(&p).unwrap();
        let w = are_isomorphic(&g, &h, &mut SearchBudget::default())
            .unwrap()
            .expect("relabelled graph is isomorphic");
        for (u, v) in g.edges() {
            assert!(h.has_edge(w.apply(u), w.apply(v)));
        }
    }

    #[test]
    fn aut_order_invariant_under_relabelling() {
        let g = complete_bipartite(3, 3);
        let p = Permutation::from_images(vec![5, 2, 0, 4, 1, 3]).unwrap();
        let h = g.relabel(&p).unwrap();
        let mut b = SearchBudget::default();
        assert_eq!(
            automorphism_group(&g, &mut b).unwrap().order(),
            automorphism_group(&h, &mut b).unwrap().order()
        );
    }

    #[test]
    fn budget_exhaustion_reports_cap() {
        let g = complete_bipartite(4, 4);
        let mut tiny = SearchBudget::new(2);
        assert!(matches!(
            automorphism_group(&g, &mut tiny),
            Err(Error::CapExceeded { .. })
        ));
    }
}
