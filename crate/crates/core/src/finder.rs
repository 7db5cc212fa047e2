//! Constructive search for semiregular subgroups of vertex-transitive
//! groups on connected cubic graphs: the maximal-cubic-quotient
//! reduction, the three-case dispatch, and brute-force oracles.

use crate::error::{Error, Result};
use crate::graph::{self, Graph, SearchBudget};
use crate::perm::{
    centralizer_in, find_abelian_normal_nonsemiregular, kernel_on_block_system,
    minimal_abelian_normal, ElementTable, PermGroup, Permutation, Subgroup,
};
use crate::quotient::{classify, recognize_spx, Family};
use std::collections::HashMap;

/// How a witness was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// an element of order coprime to 6, necessarily semiregular when
    /// vertex stabilisers are {2,3}-groups
    Case1LargeOrderElement,
    /// a preimage of a full-order rotation in a split Praeger-Xu graph
    Case2PxCorollary,
    /// a rotation of the quotient cycle over a minimal abelian normal
    /// subgroup
    Case3Rotation,
    BruteForce,
}

impl Strategy {
    pub fn tag(&self) -> &'static str {
        match self {
            Strategy::Case1LargeOrderElement => "case1-large-order-element",
            Strategy::Case2PxCorollary => "case2-px-corollary",
            Strategy::Case3Rotation => "case3-rotation",
            Strategy::BruteForce => "brute-force",
        }
    }
}

/// A verified semiregular subgroup, by generators.
#[derive(Clone, Debug)]
pub struct SemiregularWitness {
    pub generators: Vec<Permutation>,
    pub order: u128,
    pub strategy: Strategy,
}

impl SemiregularWitness {
    fn build(degree: usize, generators: Vec<Permutation>, strategy: Strategy) -> Result<Self> {
        let group = PermGroup::new(degree, generators.clone())?;
        if !group.is_semiregular() {
            return Err(Error::WitnessFailed);
        }
        Ok(SemiregularWitness {
            generators,
            order: group.order(),
            strategy,
        })
    }

    pub fn group(&self, degree: usize) -> PermGroup {
        PermGroup::new(degree, self.generators.clone()).expect("witness generators are valid")
    }
}

/// Output of the maximal-cubic-quotient reduction.
pub struct Reduction {
    /// the quotient graph, still connected cubic and vertex-transitive
    pub graph: Graph,
    /// the induced action on kernel orbits (faithful for the quotient
    /// group)
    pub group: PermGroup,
    /// the maximal normal subgroup with cubic quotient; semiregular
    pub kernel: Subgroup,
    pub blocks: Vec<Vec<usize>>,
}

/// Finds a normal subgroup of maximal order whose quotient graph is
/// still cubic and returns the reduced pair. A semiregular subgroup of
/// the reduced pair pulls back to one of the original through the kernel.
pub fn reduce_maximal_cubic_quotient(
    graph_: &Graph,
    group: &PermGroup,
    cap: usize,
) -> Result<Reduction> {
    check_cubic_pair(graph_, group)?;
    // a kernel giving a cubic quotient is semiregular, so its order is at
    // most the vertex count; the bounded lattice is exhaustive there
    let mut subs =
        crate::perm::normal_subgroups_bounded(group, cap, graph_.vertex_count())?;
    // descending order; ties keep the deterministic lattice order
    subs.sort_by_key(|s| std::cmp::Reverse(s.order()));
    for m in subs {
        let blocks = m.group().orbits();
        let quotient = graph::quotient_by_partition(graph_, &blocks)?;
        if quotient.valency() != Some(3) {
            continue;
        }
        // valency preservation forces the kernel to be semiregular and
        // to coincide with the kernel of the action on its orbits
        assert!(m.is_semiregular(), "cubic-quotient kernel must be semiregular");
        let kernel = kernel_on_block_system(group, &blocks)?;
        assert_eq!(kernel.order(), m.order(), "kernel on orbits equals the subgroup");
        let action = group.induced_block_action(&blocks)?;
        assert_eq!(action.order() * m.order(), group.order());
        assert!(quotient.is_connected());
        assert!(action.is_transitive());
        return Ok(Reduction {
            graph: quotient,
            group: action,
            kernel: m,
            blocks,
        });
    }
    unreachable!("the trivial subgroup always yields a cubic quotient")
}

fn check_cubic_pair(graph_: &Graph, group: &PermGroup) -> Result<()> {
    if graph_.valency() != Some(3) {
        return Err(Error::NotCubic);
    }
    if !graph_.is_connected() {
        return Err(Error::Disconnected);
    }
    if !graph::is_vertex_transitive(group, graph_)? {
        return Err(Error::NotVertexTransitive);
    }
    Ok(())
}

/// Scans element orders for the largest order coprime to 6 and returns
/// the cyclic subgroup it generates, verified semiregular. `None` when
/// no element of order coprime to 6 exists.
pub fn find_semiregular_case1(
    group: &PermGroup,
    cap: usize,
) -> Result<Option<SemiregularWitness>> {
    let mut elements = group.enumerate_elements(cap)?;
    elements.sort_by_key(|g| std::cmp::Reverse(g.order()));
    for g in elements {
        let order = g.order();
        if order > 1 && order % 2 != 0 && order % 3 != 0 {
            if let Ok(w) =
                SemiregularWitness::build(group.degree(), vec![g], Strategy::Case1LargeOrderElement)
            {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// For a graph recognised as `S(PX(2, r, s))` with `r >= 5`, finds an
/// element of the group projecting onto a rotation of order `r` of the
/// position circle. Its `r`-th power is `(x, .., x; 1)` with
/// `x` the base-coordinate sum, so the element is semiregular of order
/// `r` or `2r`.
pub fn find_semiregular_case2(graph_: &Graph, group: &PermGroup) -> Result<SemiregularWitness> {
    check_cubic_pair(graph_, group)?;
    let (r, s, to_spx) =
        recognize_spx(graph_, &mut SearchBudget::default()).ok_or(Error::NotSplitPx)?;
    if r < 5 {
        return Err(Error::NotSplitPx);
    }
    // transport the group onto standard spx coordinates
    let conjugated: Vec<Permutation> = group
        .generators()
        .iter()
        .map(|g| g.conjugate_by(&to_spx))
        .collect();
    let space = crate::construct::SpxSpace::new(r, s)?;
    let blocks: Vec<Vec<usize>> = (0..r)
        .map(|x| {
            (0..space.vertex_count())
                .filter(|&v| space.decode(v).1 == x)
                .collect()
        })
        .collect();
    let on_spx = PermGroup::new(graph_.vertex_count(), conjugated)?;
    let rep = element_with_block_image(&on_spx, &blocks, |top| {
        let k = top.apply(0);
        k != 0
            && crate::perm::gcd(k as u128, r as u128) == 1
            && (0..r).all(|x| top.apply(x) == (x + k) % r)
    })?
    .ok_or(Error::NoRotation)?;
    // back to the original labelling
    let g0 = rep.conjugate_by(&to_spx.inverse());
    let order = g0.order();
    assert!(order % r as u128 == 0 && order >= r as u128);
    SemiregularWitness::build(group.degree(), vec![g0], Strategy::Case2PxCorollary)
}

/// The permutation a group element induces on a list of blocks, with the
/// invariance of every block verified.
fn block_image(g: &Permutation, blocks: &[Vec<usize>], block_of: &[usize]) -> Result<Permutation> {
    let mut images = Vec::with_capacity(blocks.len());
    for block in blocks {
        let target = block_of[g.apply(block[0])];
        for &v in block {
            if block_of[g.apply(v)] != target {
                return Err(Error::PartitionNotInvariant);
            }
        }
        images.push(target);
    }
    Permutation::from_images(images).map_err(|_| Error::PartitionNotInvariant)
}

fn block_index_of(degree: usize, blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut block_of = vec![usize::MAX; degree];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = i;
        }
    }
    block_of
}

/// Breadth-first search over the induced block-permutation image with
/// representative tracking; returns a preimage of the first image
/// accepted.
fn element_with_block_image(
    group: &PermGroup,
    blocks: &[Vec<usize>],
    accept: impl Fn(&Permutation) -> bool,
) -> Result<Option<Permutation>> {
    let block_of = block_index_of(group.degree(), blocks);
    let gen_pairs: Vec<(Permutation, Permutation)> = group
        .generators()
        .iter()
        .map(|g| Ok((g.clone(), block_image(g, blocks, &block_of)?)))
        .collect::<Result<_>>()?;
    let id_top = Permutation::identity(blocks.len());
    let id = Permutation::identity(group.degree());
    let mut reps: HashMap<Permutation, Permutation> = HashMap::from([(id_top.clone(), id)]);
    let mut queue = std::collections::VecDeque::from([id_top]);
    while let Some(top) = queue.pop_front() {
        if accept(&top) {
            return Ok(Some(reps[&top].clone()));
        }
        let rep = reps[&top].clone();
        for (g, tg) in &gen_pairs {
            let next_top = top.compose(tg);
            if !reps.contains_key(&next_top) {
                reps.insert(next_top.clone(), rep.compose(g));
                queue.push_back(next_top);
            }
        }
    }
    Ok(None)
}

/// Case 3: every abelian normal subgroup is semiregular and one exists.
/// Takes a minimal abelian normal subgroup `N`, checks the quotient is a
/// cycle on at least 3 blocks, verifies the centraliser of `N` in the
/// block kernel is `N` itself, and scans the centraliser of `N` for the
/// element of minimal positive rotation step on the quotient cycle.
pub fn find_semiregular_case3(
    graph_: &Graph,
    group: &PermGroup,
    cap: usize,
) -> Result<SemiregularWitness> {
    check_cubic_pair(graph_, group)?;
    if find_abelian_normal_nonsemiregular(group, cap)?.is_some() {
        return Err(Error::NoAbelianNormal); // hypothesis violated
    }
    let n = minimal_abelian_normal(group, cap)?.ok_or(Error::NoAbelianNormal)?;
    assert!(n.is_semiregular());
    let blocks = n.group().orbits();
    if blocks.len() < 3 {
        return Err(Error::QuotientNotCycle);
    }
    let quotient = graph::quotient_by_partition(graph_, &blocks)?;
    if quotient.valency() != Some(2) || !quotient.is_connected() {
        return Err(Error::QuotientNotCycle);
    }
    let kernel = kernel_on_block_system(group, &blocks)?;
    let c_kernel = centralizer_in(kernel.group(), n.generators(), cap)?;
    assert_eq!(
        c_kernel.order(),
        n.order(),
        "the centraliser of N in the block kernel is N"
    );
    let centralizer = centralizer_in(group, n.generators(), cap)?;

    // positions along the quotient cycle
    let cycle_len = blocks.len();
    let positions = cycle_positions(&quotient);
    let block_of = block_index_of(group.degree(), &blocks);
    let mut best: Option<(usize, Permutation)> = None;
    for g in centralizer.group().enumerate_elements(cap)? {
        let top = block_image(&g, &blocks, &block_of)?;
        if let Some(step) = rotation_step(&top, &positions, cycle_len) {
            if step != 0 && best.as_ref().is_none_or(|(b, _)| step < *b) {
                best = Some((step, g));
            }
        }
    }
    let (step, g) = best.ok_or(Error::NoRotation)?;
    assert_eq!(cycle_len % step, 0, "minimal step divides the cycle length");
    let m = (cycle_len / step) as i64;
    assert!(
        n.group().contains(&g.pow(m)),
        "the rotation's power of cycle order lands in N"
    );
    SemiregularWitness::build(group.degree(), vec![g], Strategy::Case3Rotation)
}

/// Cyclic positions of the vertices of a cycle graph.
fn cycle_positions(quotient: &Graph) -> Vec<usize> {
    let n = quotient.vertex_count();
    let mut pos = vec![usize::MAX; n];
    pos[0] = 0;
    let mut prev = 0usize;
    let mut current = quotient.neighbors(0).next().expect("cycle");
    let mut i = 1;
    while current != 0 {
        pos[current] = i;
        let next = quotient
            .neighbors(current)
            .find(|&w| w != prev)
            .expect("cycle");
        prev = current;
        current = next;
        i += 1;
    }
    pos
}

/// The step of a rotation, or `None` when the permutation is not a
/// rotation of the cycle.
fn rotation_step(top: &Permutation, positions: &[usize], len: usize) -> Option<usize> {
    let mut step = None;
    for b in 0..top.degree() {
        let d = (positions[top.apply(b)] + len - positions[b]) % len;
        match step {
            None => step = Some(d),
            Some(s) if s != d => return None,
            _ => {}
        }
    }
    step
}

/// Mode used by the brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// exhaustive scan over all semiregular subgroups
    FullSubgroupScan,
    /// maximum over cyclic subgroups only
    CyclicOnly,
}

pub struct MaxSemiregular {
    pub witness: SemiregularWitness,
    pub mode: OracleMode,
}

/// Brute-force oracle: the maximum-order semiregular subgroup when the
/// group has at most 2000 elements (every semiregular subgroup arises by
/// repeatedly adjoining a fixed-point-free element, so a breadth-first
/// closure over all-fixed-point-free subgroups is exhaustive), and the
/// maximum-order semiregular cyclic subgroup otherwise.
pub fn max_semiregular_bruteforce(
    graph_: &Graph,
    group: &PermGroup,
    cap: usize,
) -> Result<MaxSemiregular> {
    graph::verify_acts_by_automorphisms(group, graph_)?;
    if group.order() <= 2000 {
        let table = ElementTable::build(group, cap)?;
        Ok(MaxSemiregular {
            witness: full_subgroup_scan(group, &table)?,
            mode: OracleMode::FullSubgroupScan,
        })
    } else {
        let mut elements = group.enumerate_elements(cap)?;
        elements.sort_by_key(|g| std::cmp::Reverse(g.order()));
        for g in elements {
            if g.is_identity() {
                continue;
            }
            if let Ok(witness) =
                SemiregularWitness::build(group.degree(), vec![g], Strategy::BruteForce)
            {
                return Ok(MaxSemiregular {
                    witness,
                    mode: OracleMode::CyclicOnly,
                });
            }
        }
        // trivial subgroup as a last resort
        Ok(MaxSemiregular {
            witness: SemiregularWitness::build(group.degree(), vec![], Strategy::BruteForce)?,
            mode: OracleMode::CyclicOnly,
        })
    }
}

/// Exhaustive scan over all semiregular subgroups. Every such subgroup
/// is reached by repeatedly adjoining the least element outside the
/// current span (its canonical chain), so the search walks each subgroup
/// exactly once; closures abort as soon as they grow past the degree or
/// hit an element with a fixed point.
fn full_subgroup_scan(group: &PermGroup, table: &ElementTable) -> Result<SemiregularWitness> {
    let n = table.elements[0].degree();
    let id = table.identity_index();
    debug_assert_eq!(id, 0, "identity is lexicographically least");
    let fpf_ok: Vec<bool> = (0..table.len())
        .map(|i| i == id || !table.elements[i].has_fixed_point())
        .collect();
    // candidates: elements whose whole cyclic subgroup is fixed-point-free
    let candidates: Vec<usize> = (0..table.len())
        .filter(|&i| {
            if i == id {
                return false;
            }
            let mut j = i;
            while j != id {
                if !fpf_ok[j] {
                    return false;
                }
                j = table.mul(j, i);
            }
            true
        })
        .collect();
    let mut best: (usize, Vec<usize>) = (1, Vec::new());
    let mut queue: std::collections::VecDeque<(Vec<usize>, Vec<usize>, usize)> =
        std::collections::VecDeque::from([(vec![id], Vec::new(), 0)]);
    while let Some((members, gens, last)) = queue.pop_front() {
        if members.len() > best.0 {
            best = (members.len(), gens.clone());
        }
        if members.len() * 2 > n {
            continue; // any proper extension would exceed the degree
        }
        for &x in candidates.iter().filter(|&&x| x > last) {
            if members.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(x);
            let Some((new_members, new_gens)) =
                table.closure_bounded(&seed, n, |i| fpf_ok[i])
            else {
                continue;
            };
            // canonical chain: x must be the least adjoined element
            let least_new = new_members
                .iter()
                .find(|m| members.binary_search(m).is_err())
                .copied()
                .expect("extension adds elements");
            if least_new != x {
                continue;
            }
            queue.push_back((new_members, new_gens, x));
        }
    }
    let generators: Vec<Permutation> = best
        .1
        .iter()
        .map(|&i| table.elements[i].clone())
        .collect();
    SemiregularWitness::build(group.degree(), generators, Strategy::BruteForce)
}

/// The full pipeline: reduce to the maximal cubic quotient, dispatch on
/// the abelian normal structure of the reduced group, then pull the
/// witness back through the kernel. The result is always re-verified.
pub fn find_semiregular(
    graph_: &Graph,
    group: &PermGroup,
    cap: usize,
) -> Result<SemiregularWitness> {
    check_cubic_pair(graph_, group)?;
    let reduction = reduce_maximal_cubic_quotient(graph_, group, cap)?;
    let q_graph = &reduction.graph;
    let q_group = &reduction.group;

    let inner = dispatch(q_graph, q_group, cap)?;

    if reduction.kernel.is_trivial() {
        // blocks are singletons in orbit order, i.e. the identity
        // relabelling; reuse the witness directly
        return SemiregularWitness::build(group.degree(), inner.generators, inner.strategy);
    }
    // lift each witness generator to any preimage and adjoin the kernel
    let preimages = preimage_map(group, &reduction.blocks, cap)?;
    let mut lifted: Vec<Permutation> = inner
        .generators
        .iter()
        .map(|g| {
            preimages
                .get(g)
                .cloned()
                .ok_or(Error::WitnessFailed)
        })
        .collect::<Result<_>>()?;
    lifted.extend_from_slice(reduction.kernel.generators());
    SemiregularWitness::build(group.degree(), lifted, inner.strategy)
}

fn dispatch(q_graph: &Graph, q_group: &PermGroup, cap: usize) -> Result<SemiregularWitness> {
    let has_abelian_normal = minimal_abelian_normal(q_group, cap)?.is_some();
    if !has_abelian_normal {
        if let Some(w) = find_semiregular_case1(q_group, cap)? {
            return Ok(w);
        }
        return brute_force_on(q_graph, q_group, cap);
    }
    if let Some(n) = find_abelian_normal_nonsemiregular(q_group, cap)? {
        let classification = classify(q_graph, q_group, Some(&n))?;
        return match classification.family {
            Family::Spx { r, .. } if r >= 5 => find_semiregular_case2(q_graph, q_group),
            _ => brute_force_on(q_graph, q_group, cap),
        };
    }
    match find_semiregular_case3(q_graph, q_group, cap) {
        Ok(w) => Ok(w),
        Err(Error::QuotientNotCycle) | Err(Error::NoRotation) => {
            brute_force_on(q_graph, q_group, cap)
        }
        Err(e) => Err(e),
    }
}

fn brute_force_on(q_graph: &Graph, q_group: &PermGroup, cap: usize) -> Result<SemiregularWitness> {
    let oracle = max_semiregular_bruteforce(q_graph, q_group, cap)?;
    Ok(oracle.witness)
}

/// First-seen representatives of each induced block permutation.
fn preimage_map(
    group: &PermGroup,
    blocks: &[Vec<usize>],
    cap: usize,
) -> Result<HashMap<Permutation, Permutation>> {
    let mut block_of = vec![usize::MAX; group.degree()];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            block_of[v] = i;
        }
    }
    let mut map: HashMap<Permutation, Permutation> = HashMap::new();
    for g in group.enumerate_elements(cap)? {
        let images: Vec<usize> = blocks.iter().map(|b| block_of[g.apply(b[0])]).collect();
        let top = Permutation::from_images(images)?;
        map.entry(top).or_insert(g);
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        circular_ladder, moebius_ladder, spx_graph, wreath_group, WreathTarget,
    };
    use crate::graph::{automorphism_group, complete};
    use crate::perm::DESK_CAP;

    fn petersen() -> (Graph, PermGroup) {
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
        // A5 acting on pairs, generated by (0 1 2 3 4) and (0 1 2)
        let on_pairs = |perm: &[usize]| -> Permutation {
            let images: Vec<usize> = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                    pairs.iter().position(|&p| p == (x, y)).unwrap()
                })
                .collect();
            Permutation::from_images(images).unwrap()
        };
        let a5 = PermGroup::new(
            10,
            vec![on_pairs(&[1, 2, 3, 4, 0]), on_pairs(&[1, 2, 0, 3, 4])],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        (g, a5)
    }

    #[test]
    fn petersen_case1_gives_order_five() {
        let (g, a5) = petersen();
        let w = find_semiregular_case1(&a5, DESK_CAP).unwrap().unwrap();
        assert_eq!(w.order, 5);
        assert!(w.group(10).is_semiregular());
        // full pipeline dispatches to case 1 as well
        let w = find_semiregular(&g, &a5, DESK_CAP).unwrap();
        assert_eq!(w.strategy, Strategy::Case1LargeOrderElement);
        assert_eq!(w.order, 5);
    }

    #[test]
    fn case2_on_split_px_graphs() {
        for (r, s) in [(5, 1), (5, 2), (6, 1)] {
            let g = spx_graph(r, s).unwrap();
            let w_group = wreath_group(r, s, WreathTarget::Spx).unwrap();
            let witness = find_semiregular_case2(&g, &w_group).unwrap();
            assert!(witness.order == r as u128 || witness.order == 2 * r as u128);
            assert!(witness.group(g.vertex_count()).is_semiregular());
        }
    }

    #[test]
    fn case2_power_dichotomy() {
        // a rotation with zero base sum has order r; with odd base sum,
        // order 2r
        use crate::construct::{DihedralElement, WreathElement};
        let r = 5;
        for (base, expected) in [(0b01010u64, r as u64), (0b00111, 2 * r as u64)] {
            let g = WreathElement::new(r, base, DihedralElement::rotation(1, r)).unwrap();
            assert_eq!(g.order(), expected);
            let p = g.pow(r as u64);
            assert!(p.top.is_identity());
            let x = (base.count_ones() % 2) as u64;
            let want = if x == 1 { (1 << r) - 1 } else { 0 };
            assert_eq!(p.base, want);
        }
    }

    #[test]
    fn case3_on_prisms_and_moebius_ladders() {
        let prism = circular_ladder(7).unwrap();
        let aut = automorphism_group(&prism, &mut SearchBudget::default()).unwrap();
        assert_eq!(aut.order(), 28);
        let w = find_semiregular_case3(&prism, &aut, DESK_CAP).unwrap();
        assert!(w.order >= 7, "order {} too small", w.order);
        assert!(w.group(14).is_semiregular());

        let moebius = moebius_ladder(6).unwrap();
        let aut = automorphism_group(&moebius, &mut SearchBudget::default()).unwrap();
        let w = find_semiregular(&moebius, &aut, DESK_CAP).unwrap();
        assert!(w.order >= 6);
    }

    #[test]
    fn k4_with_s4_brute_forces_to_regular_subgroup() {
        let k4 = complete(4);
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap();
        let w = find_semiregular(&k4, &s4, DESK_CAP).unwrap();
        assert_eq!(w.strategy, Strategy::BruteForce);
        assert_eq!(w.order, 4);
    }

    #[test]
    fn spx_pipeline_uses_case2() {
        let g = spx_graph(6, 1).unwrap();
        let w_group = wreath_group(6, 1, WreathTarget::Spx).unwrap();
        let witness = find_semiregular(&g, &w_group, DESK_CAP).unwrap();
        assert!(witness.order >= 6);
        assert!(witness.group(g.vertex_count()).is_semiregular());
    }

    #[test]
    fn oracle_on_k33_automorphisms() {
        let k33 = crate::graph::complete_bipartite(3, 3);
        let aut = automorphism_group(&k33, &mut SearchBudget::default()).unwrap();
        assert_eq!(aut.order(), 72);
        let m = max_semiregular_bruteforce(&k33, &aut, DESK_CAP).unwrap();
        assert_eq!(m.mode, OracleMode::FullSubgroupScan);
        assert_eq!(m.witness.order, 6);
    }

    #[test]
    fn oracle_on_regular_group_returns_whole_group() {
        let c6 = PermGroup::new(
            6,
            vec![Permutation::from_cycles(6, &[(0..6).collect()]).unwrap()],
        )
        .unwrap();
        let hexagon = crate::graph::cycle(6);
        // C6 is 2-valent; the oracle does not require cubic input
        let m = max_semiregular_bruteforce(&hexagon, &c6, DESK_CAP).unwrap();
        assert_eq!(m.witness.order, 6);
    }

    #[test]
    fn reduction_on_simple_pairs_is_trivial() {
        let (g, a5) = petersen();
        let red = reduce_maximal_cubic_quotient(&g, &a5, DESK_CAP).unwrap();
        assert!(red.kernel.is_trivial());
        assert_eq!(red.graph.vertex_count(), 10);
    }

    #[test]
    fn reduction_collapses_prism_product() {
        // the prism over C6 with the full automorphism group Z2 x D6:
        // no nontrivial normal subgroup keeps the quotient cubic, or one
        // does; either way the reduced pair must stay cubic, connected,
        // vertex-transitive with semiregular kernel
        let prism = circular_ladder(6).unwrap();
        let aut = automorphism_group(&prism, &mut SearchBudget::default()).unwrap();
        let red = reduce_maximal_cubic_quotient(&prism, &aut, DESK_CAP).unwrap();
        assert_eq!(red.graph.valency(), Some(3));
        assert!(red.graph.is_connected());
        assert!(red.group.is_transitive());
        assert!(red.kernel.is_semiregular());
        assert_eq!(
            red.group.order() * red.kernel.order(),
            aut.order()
        );
    }

    #[test]
    fn pipeline_witness_never_beats_oracle() {
        for (graph_, group) in [
            {
                let g = spx_graph(3, 1).unwrap();
                let w = wreath_group(3, 1, WreathTarget::Spx).unwrap();
                (g, w)
            },
            {
                let g = circular_ladder(5).unwrap();
                let a = automorphism_group(&g, &mut SearchBudget::default()).unwrap();
                (g, a)
            },
        ] {
            let found = find_semiregular(&graph_, &group, DESK_CAP).unwrap();
            let oracle = max_semiregular_bruteforce(&graph_, &group, DESK_CAP).unwrap();
            assert!(found.order <= oracle.witness.order);
        }
    }
}
