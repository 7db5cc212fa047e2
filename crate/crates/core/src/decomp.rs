//! Cycle-decomposition checks: validation, arc-transitivity, exhaustive
//! enumeration of 4-cycle decompositions by exact cover, conjugacy
//! testing, and the r = 4 uniqueness harness.

use crate::construct::{natural_decomposition, px_graph, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{self, automorphism_group, Graph, SearchBudget};
use crate::perm::{PermGroup, Permutation};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// True iff the cycles are genuine cycles of `host` whose edge sets
/// partition the edge set of `host`.
pub fn validate_decomposition(host: &Graph, decomposition: &CycleDecomposition) -> bool {
    decomposition.is_valid_for(host)
}

/// True iff `group` is arc-transitive on `host` and every generator maps
/// each cycle of the decomposition onto a member of the decomposition.
pub fn is_arc_transitive_decomposition(
    host: &Graph,
    group: &PermGroup,
    decomposition: &CycleDecomposition,
) -> Result<bool> {
    graph::verify_acts_by_automorphisms(group, host)?;
    if !decomposition.is_valid_for(host) {
        return Err(Error::InvalidDecomposition);
    }
    if !graph::is_arc_transitive(group, host)? {
        return Ok(false);
    }
    Ok(preserves_decomposition_gens(group, decomposition))
}

fn preserves_decomposition_gens(group: &PermGroup, decomposition: &CycleDecomposition) -> bool {
    group
        .generators()
        .iter()
        .all(|g| decomposition.image_under(g) == *decomposition)
}

/// All partitions of the edge set of a 4-valent graph into 4-cycles, by
/// exact-cover backtracking branching on the least uncovered edge.
/// `cap` bounds the number of search nodes.
pub fn enumerate_4cycle_decompositions(
    host: &Graph,
    cap: u64,
) -> Result<Vec<CycleDecomposition>> {
    if host.valency() != Some(4) {
        return Err(Error::NotFourValent);
    }
    let edges = host.edges();
    if edges.len() > 128 {
        return Err(Error::ParamRange(format!(
            "edge count {} exceeds the 128-edge bound",
            edges.len()
        )));
    }
    let edge_index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let cycles = graph::four_cycles(host);
    let masks: Vec<u128> = cycles
        .iter()
        .map(|c| {
            let mut mask = 0u128;
            for (u, v) in CycleDecomposition::cycle_edges(c) {
                mask |= 1 << edge_index[&(u, v)];
            }
            mask
        })
        .collect();
    let full: u128 = if edges.len() == 128 {
        u128::MAX
    } else {
        (1 << edges.len()) - 1
    };
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    cover(
        &cycles, &masks, full, 0, &mut chosen, &mut out, &mut nodes, cap,
    )?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cover(
    cycles: &[[usize; 4]],
    masks: &[u128],
    full: u128,
    covered: u128,
    chosen: &mut Vec<usize>,
    out: &mut Vec<CycleDecomposition>,
    nodes: &mut u64,
    cap: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > cap {
        return Err(Error::CapExceeded {
            what: "4-cycle exact cover",
            cap: cap as u128,
        });
    }
    if covered == full {
        out.push(CycleDecomposition::new(
            chosen.iter().map(|&i| cycles[i].to_vec()).collect(),
        ));
        return Ok(());
    }
    let least = (!covered & full).trailing_zeros() as usize;
    for (i, &mask) in masks.iter().enumerate() {
        if mask & (1 << least) != 0 && mask & covered == 0 {
            chosen.push(i);
            cover(cycles, masks, full, covered | mask, chosen, out, nodes, cap)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// An element of `conjugators` mapping the first decomposition onto the
/// second (setwise), found by orbit closure with witness tracking; `None`
/// when the decompositions lie in different orbits.
pub fn decompositions_conjugate(
    host: &Graph,
    first: &CycleDecomposition,
    second: &CycleDecomposition,
    conjugators: &PermGroup,
    cap: usize,
) -> Result<Option<Permutation>> {
    graph::verify_acts_by_automorphisms(conjugators, host)?;
    if !first.is_valid_for(host) || !second.is_valid_for(host) {
        return Err(Error::InvalidDecomposition);
    }
    let mut witness: BTreeMap<CycleDecomposition, Permutation> = BTreeMap::new();
    let identity = Permutation::identity(conjugators.degree());
    witness.insert(first.clone(), identity);
    let mut queue = VecDeque::from([first.clone()]);
    while let Some(d) = queue.pop_front() {
        if d == *second {
            let w = witness[&d].clone();
            debug_assert_eq!(first.image_under(&w), *second);
            return Ok(Some(w));
        }
        let reach = witness[&d].clone();
        for g in conjugators.generators() {
            let image = d.image_under(g);
            if !witness.contains_key(&image) {
                if witness.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "decomposition orbit",
                        cap: cap as u128,
                    });
                }
                witness.insert(image.clone(), reach.compose(g));
                queue.push_back(image);
            }
        }
    }
    Ok(None)
}

/// The orbit of a decomposition under a group, as a set of canonical forms.
fn decomposition_orbit(
    start: &CycleDecomposition,
    group: &PermGroup,
    cap: usize,
) -> Result<BTreeSet<CycleDecomposition>> {
    let mut seen: BTreeSet<CycleDecomposition> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(d) = queue.pop_front() {
        for g in group.generators() {
            let image = d.image_under(g);
            if !seen.contains(&image) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "decomposition orbit",
                        cap: cap as u128,
                    });
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone, Serialize)]
pub struct R4GraphReport {
    pub r: usize,
    pub s: usize,
    pub vertices: usize,
    pub automorphism_order: u128,
    pub decomposition_count: usize,
    pub arc_transitive_count: usize,
    pub natural_is_arc_transitive: bool,
    pub conjugacy_class_count: usize,
    pub all_conjugate_to_natural: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct R4Report {
    pub graphs: Vec<R4GraphReport>,
    pub pass: bool,
}

/// The r = 4 computer check: for each of `PX(2,4,1)`, `PX(2,4,2)` and
/// `PX(2,4,3)`, enumerate every 4-cycle decomposition, keep those whose
/// setwise stabiliser in the full automorphism group is arc-transitive,
/// and verify the survivors form a single conjugacy class containing the
/// natural decomposition.
pub fn verify_r4_unique_class() -> Result<R4Report> {
    let mut graphs = Vec::new();
    for s in 1..=3 {
        graphs.push(r4_graph_report(4, s)?);
    }
    let pass = graphs.iter().all(|g| {
        g.conjugacy_class_count == 1 && g.natural_is_arc_transitive && g.all_conjugate_to_natural
    });
    Ok(R4Report { graphs, pass })
}

fn r4_graph_report(r: usize, s: usize) -> Result<R4GraphReport> {
    let host = px_graph(r, s)?;
    let natural = natural_decomposition(r, s)?;
    let aut = automorphism_group(&host, &mut SearchBudget::default())?;
    let elements = aut.enumerate_elements(crate::perm::DESK_CAP)?;
    let decompositions = enumerate_4cycle_decompositions(&host, 50_000_000)?;

    let mut survivors = Vec::new();
    for d in &decompositions {
        let stab_gens: Vec<Permutation> = elements
            .iter()
            .filter(|g| d.image_under(g) == *d)
            .cloned()
            .collect();
        let stabilizer = PermGroup::new(host.vertex_count(), stab_gens)?;
        if graph::is_arc_transitive(&stabilizer, &host)? {
            survivors.push(d.clone());
        }
    }
    let natural_is_arc_transitive = survivors.contains(&natural);

    // conjugacy classes among survivors, via orbit closure
    let mut remaining: BTreeSet<CycleDecomposition> = survivors.iter().cloned().collect();
    let mut class_count = 0;
    while let Some(d) = remaining.iter().next().cloned() {
        let orbit = decomposition_orbit(&d, &aut, crate::perm::DESK_CAP)?;
        remaining.retain(|x| !orbit.contains(x));
        class_count += 1;
    }
    let natural_orbit = decomposition_orbit(&natural, &aut, crate::perm::DESK_CAP)?;
    let all_conjugate_to_natural = survivors.iter().all(|d| natural_orbit.contains(d));

    Ok(R4GraphReport {
        r,
        s,
        vertices: host.vertex_count(),
        automorphism_order: aut.order(),
        decomposition_count: decompositions.len(),
        arc_transitive_count: survivors.len(),
        natural_is_arc_transitive,
        conjugacy_class_count: class_count,
        all_conjugate_to_natural,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{wreath_group, WreathTarget};
    use crate::graph::complete;

    #[test]
    fn natural_decomposition_validates() {
        let g = px_graph(3, 1).unwrap();
        let d = natural_decomposition(3, 1).unwrap();
        assert!(validate_decomposition(&g, &d));
    }

    #[test]
    fn missing_or_repeated_edges_fail_validation() {
        let g = px_graph(3, 1).unwrap();
        let d = natural_decomposition(3, 1).unwrap();
        // drop one cycle: misses edges
        let missing = CycleDecomposition::new(d.cycles()[1..].to_vec());
        assert!(!validate_decomposition(&g, &missing));
        // repeat a cycle: edge covered twice
        let mut cycles = d.cycles().to_vec();
        cycles.push(cycles[0].clone());
        assert!(!validate_decomposition(&g, &CycleDecomposition::new(cycles)));
    }

    #[test]
    fn natural_decomposition_is_arc_transitive_under_wreath() {
        let g = px_graph(3, 1).unwrap();
        let w = wreath_group(3, 1, WreathTarget::Px).unwrap();
        let d = natural_decomposition(3, 1).unwrap();
        assert!(is_arc_transitive_decomposition(&g, &w, &d).unwrap());
        // the trivial group preserves the decomposition but is not
        // arc-transitive
        let trivial = PermGroup::trivial(6);
        assert!(!is_arc_transitive_decomposition(&g, &trivial, &d).unwrap());
    }

    #[test]
    fn k5_has_no_4cycle_decompositions() {
        // 10 edges cannot split into 4-cycles
        let k5 = complete(5);
        assert_eq!(k5.valency(), Some(4));
        assert!(enumerate_4cycle_decompositions(&k5, 1_000_000)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn enumeration_rejects_non_4valent() {
        assert!(matches!(
            enumerate_4cycle_decompositions(&complete(4), 1000),
            Err(Error::NotFourValent)
        ));
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_graphs() {
        for (r, s) in [(4, 1), (4, 2)] {
            let host = px_graph(r, s).unwrap();
            let fast = enumerate_4cycle_decompositions(&host, 10_000_000).unwrap();
            let slow = brute_force_decompositions(&host);
            assert_eq!(fast.len(), slow.len(), "px({r},{s})");
            assert_eq!(fast, slow);
            assert!(fast.contains(&natural_decomposition(r, s).unwrap()));
            for d in &fast {
                assert!(validate_decomposition(&host, d));
            }
            // duplicate-free under canonical ordering
            let set: BTreeSet<&CycleDecomposition> = fast.iter().collect();
            assert_eq!(set.len(), fast.len());
        }
    }

    /// Independent oracle: choose k = |E|/4 cycles from the full 4-cycle
    /// list by combinations and keep the disjoint exact covers.
    fn brute_force_decompositions(host: &Graph) -> Vec<CycleDecomposition> {
        let cycles = graph::four_cycles(host);
        let k = host.edge_count() / 4;
        let mut out = Vec::new();
        let mut pick = Vec::new();
        combos(&cycles, host, k, 0, &mut pick, &mut out);
        out.sort();
        out
    }

    fn combos(
        cycles: &[[usize; 4]],
        host: &Graph,
        k: usize,
        from: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<CycleDecomposition>,
    ) {
        if pick.len() == k {
            let d = CycleDecomposition::new(pick.iter().map(|&i| cycles[i].to_vec()).collect());
            if d.is_valid_for(host) {
                out.push(d);
            }
            return;
        }
        for i in from..cycles.len() {
            pick.push(i);
            combos(cycles, host, k, i + 1, pick, out);
            pick.pop();
        }
    }

    #[test]
    fn conjugate_decomposition_witness_round_trip() {
        let host = px_graph(4, 2).unwrap();
        let w = wreath_group(4, 2, WreathTarget::Px).unwrap();
        let d = natural_decomposition(4, 2).unwrap();
        // identity conjugates a decomposition to itself
        let id = decompositions_conjugate(&host, &d, &d, &w, 100_000)
            .unwrap()
            .unwrap();
        assert_eq!(d.image_under(&id), d);
        // image under a group element is conjugate with verified witness
        let g = &w.generators()[2];
        let image = d.image_under(g);
        let witness = decompositions_conjugate(&host, &d, &image, &w, 100_000)
            .unwrap()
            .unwrap();
        assert_eq!(d.image_under(&witness), image);
    }

    #[test]
    fn full_automorphism_group_stabilizes_natural_decomposition() {
        // away from r = 4 the natural decomposition is the unique one,
        // so the full automorphism group (= the wreath group) preserves
        // it setwise
        for (r, s) in [(5, 2), (6, 1)] {
            let host = px_graph(r, s).unwrap();
            let d = natural_decomposition(r, s).unwrap();
            let aut = automorphism_group(&host, &mut SearchBudget::default()).unwrap();
            assert_eq!(aut.order(), (1u128 << r) * 2 * r as u128);
            for g in aut.enumerate_elements(2000).unwrap() {
                assert_eq!(d.image_under(&g), d, "r={r} s={s}");
            }
        }
    }
}
