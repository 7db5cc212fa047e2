use super::Permutation;
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

/// A permutation group given by generators, with a lazily built
/// base-and-strong-generating structure shared across clones.
///
/// The Schreier-Sims computation is deterministic: base points are taken
/// in natural order (the smallest point moved by the offending element),
/// so caches and generator lists are reproducible.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Arc<OnceLock<StabChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            chain: Arc::new(OnceLock::new()),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Arc::new(OnceLock::new()),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    fn stab_chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    /// The group order, from the product of orbit sizes along the
    /// stabiliser chain.
    pub fn order(&self) -> u128 {
        self.stab_chain().order
    }

    /// Membership test via sifting through the stabiliser chain.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.stab_chain().strip(g.clone(), 0);
        residue.is_identity()
    }

    /// Orbits of the natural action, as a partition of `{0, .., n-1}`
    /// sorted by least element; each orbit is sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let orbit = self.orbit_of(start);
            for &v in &orbit {
                seen[v] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// The orbit of a single point, sorted.
    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        let mut orbit = vec![v];
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit_of(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        for (i, g) in self.generators.iter().enumerate() {
            for h in &self.generators[i + 1..] {
                if !g.commutes_with(h) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every orbit has size equal to the group order; equivalently
    /// no non-identity element fixes a point.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.degree as u128 == self.order()
    }

    /// Generators of the stabiliser of `v`, from a stabiliser chain built
    /// with `v` forced as the first base point.
    pub(crate) fn point_stabilizer_gens(&self, v: usize) -> Vec<Permutation> {
        let chain = StabChain::build(self.degree, &self.generators, &[v]);
        chain.level_gens_below(1)
    }

    /// Generators of the pointwise stabiliser of a set of points.
    pub(crate) fn pointwise_stabilizer_gens(&self, points: &[usize]) -> Vec<Permutation> {
        let chain = StabChain::build(self.degree, &self.generators, points);
        chain.level_gens_below(points.len())
    }

    /// All elements in lexicographic order of image lists.
    /// Errors with `CapExceeded` when the group is larger than `cap`.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = g.compose(s);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "element enumeration",
                            cap: cap as u128,
                        });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(elements)
    }

    /// The action induced on the blocks of a group-invariant partition.
    /// Blocks are indexed in the given order; errors if some generator
    /// fails to permute the blocks.
    pub fn induced_block_action(&self, blocks: &[Vec<usize>]) -> Result<PermGroup> {
        let block_of = block_index_map(self.degree, blocks)?;
        let mut images = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut img = vec![usize::MAX; blocks.len()];
            for (b, block) in blocks.iter().enumerate() {
                let target = block_of[g.apply(block[0])];
                // the whole block must land in one block
                for &v in block {
                    if block_of[g.apply(v)] != target {
                        return Err(Error::PartitionNotInvariant);
                    }
                }
                img[b] = target;
            }
            images.push(Permutation::from_images(img).map_err(|_| Error::PartitionNotInvariant)?);
        }
        PermGroup::new(blocks.len(), images)
    }

    /// Conjugacy classes over an explicit element list; classes and their
    /// members are sorted, so the output is deterministic.
    pub fn conjugacy_classes(&self, cap: usize) -> Result<ConjugacyClasses> {
        let table = ElementTable::build(self, cap)?;
        Ok(table.conjugacy_classes())
    }

    /// Serialises as the group file format: first line `degree n`, then one
    /// generator per line as an image list.
    pub fn to_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the group file format. Generators may be image lists or
    /// cycle notation.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty group file".into()))?;
        let degree: usize = header
            .strip_prefix("degree")
            .map(str::trim)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `degree n`, got {header:?}")))?;
        let gens = lines
            .map(|l| Permutation::parse(l, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }
}

/// Checks that `blocks` partitions `{0, .., degree-1}` and returns the
/// block index of each point.
pub(crate) fn block_index_map(degree: usize, blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut block_of = vec![usize::MAX; degree];
    let mut count = 0usize;
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= degree || block_of[v] != usize::MAX {
                return Err(Error::InvalidPartition);
            }
            block_of[v] = b;
            count += 1;
        }
    }
    if count != degree {
        return Err(Error::InvalidPartition);
    }
    Ok(block_of)
}

// ---------------------------------------------------------------------------
// Stabiliser chain (deterministic Schreier-Sims)
// ---------------------------------------------------------------------------

struct Level {
    point: usize,
    gens: Vec<Permutation>,
    /// transversal[p] = u with point^u = p, for p in the orbit
    transversal: Vec<Option<Permutation>>,
    /// orbit in discovery order
    orbit: Vec<usize>,
}

pub(crate) struct StabChain {
    base: Vec<usize>,
    levels: Vec<Level>,
    pub(crate) order: u128,
}

impl StabChain {
    /// Builds a stabiliser chain. `forced_prefix` points are installed as
    /// the first base points whether or not the group moves them, which
    /// makes pointwise stabilisers directly readable off the chain.
    pub(crate) fn build(
        degree: usize,
        generators: &[Permutation],
        forced_prefix: &[usize],
    ) -> StabChain {
        let mut chain = StabChain {
            base: Vec::new(),
            levels: Vec::new(),
            order: 1,
        };
        for &b in forced_prefix {
            chain.push_base_point(b, degree);
        }
        for g in generators {
            if !g.is_identity() && chain.base.iter().all(|&b| g.apply(b) == b) {
                let moved = smallest_moved(g).expect("non-identity moves a point");
                chain.push_base_point(moved, degree);
            }
        }
        for g in generators {
            if g.is_identity() {
                continue;
            }
            // a generator belongs to every level whose base prefix it fixes
            for i in 0..chain.base.len() {
                chain.levels[i].gens.push(g.clone());
                if g.apply(chain.base[i]) != chain.base[i] {
                    break;
                }
            }
        }
        for i in (0..chain.base.len()).rev() {
            chain.complete_level(i, degree);
        }
        chain.order = chain
            .levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .expect("group order exceeds u128");
        chain
    }

    fn push_base_point(&mut self, point: usize, degree: usize) {
        self.base.push(point);
        self.levels.push(Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        });
    }

    fn recompute_orbit(&mut self, i: usize, degree: usize) {
        let level = &mut self.levels[i];
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        let mut orbit = Vec::new();
        transversal[level.point] = Some(Permutation::identity(degree));
        orbit.push(level.point);
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &level.gens {
                let q = g.apply(p);
                if transversal[q].is_none() {
                    let u = transversal[p]
                        .as_ref()
                        .expect("orbit point has transversal")
                        .compose(g);
                    transversal[q] = Some(u);
                    orbit.push(q);
                }
            }
        }
        level.transversal = transversal;
        level.orbit = orbit;
    }

    /// Ensures `<gens at level i>` has verified Schreier generators all the
    /// way down. Assumes deeper levels are already complete.
    fn complete_level(&mut self, i: usize, degree: usize) {
        'restart: loop {
            self.recompute_orbit(i, degree);
            let orbit = self.levels[i].orbit.clone();
            let gens = self.levels[i].gens.clone();
            for &p in &orbit {
                for s in &gens {
                    let u = self.levels[i].transversal[p].clone().unwrap();
                    let q = s.apply(p);
                    let uq = self.levels[i].transversal[q].clone().unwrap();
                    let schreier = u.compose(s).compose(&uq.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(schreier, i + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == self.base.len() {
                        let moved = smallest_moved(&residue).expect("non-identity");
                        self.push_base_point(moved, degree);
                    }
                    for l in (i + 1)..=j {
                        self.levels[l].gens.push(residue.clone());
                    }
                    for l in ((i + 1)..=j).rev() {
                        self.complete_level(l, degree);
                    }
                    continue 'restart;
                }
            }
            return;
        }
    }

    /// Sifts `g` through levels `from..`, returning the residue and the
    /// level at which sifting stopped.
    pub(crate) fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for i in from..self.base.len() {
            let p = g.apply(self.base[i]);
            match &self.levels[i].transversal[p] {
                None => return (g, i),
                Some(u) => g = g.compose(&u.inverse()),
            }
        }
        (g, self.base.len())
    }

    /// Generators of the stabiliser of the first `k` base points,
    /// deduplicated and sorted.
    fn level_gens_below(&self, k: usize) -> Vec<Permutation> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        let mut gens: Vec<Permutation> = self.levels[k].gens.clone();
        gens.sort_unstable();
        gens.dedup();
        gens
    }
}

fn smallest_moved(g: &Permutation) -> Option<usize> {
    (0..g.degree()).find(|&v| g.apply(v) != v)
}

// ---------------------------------------------------------------------------
// Element tables
// ---------------------------------------------------------------------------

/// An exhaustively enumerated group, with index arithmetic. This is the
/// backbone of the desk-scale oracles: subgroup closures, conjugacy
/// classes and brute-force scans all run in index space.
pub struct ElementTable {
    pub elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    pub inverse: Vec<usize>,
    gen_indices: Vec<usize>,
    /// flat n*n multiplication table, built when the order is small enough
    mult: Option<Vec<u16>>,
}

const MULT_TABLE_LIMIT: usize = 2048;

impl ElementTable {
    pub fn build(group: &PermGroup, cap: usize) -> Result<ElementTable> {
        let elements = group.enumerate_elements(cap)?;
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let inverse: Vec<usize> = elements.iter().map(|g| index[&g.inverse()]).collect();
        let gen_indices: Vec<usize> = group
            .generators()
            .iter()
            .map(|g| index[g])
            .collect();
        let n = elements.len();
        let mult = if n <= MULT_TABLE_LIMIT {
            let mut table = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    table[i * n + j] = index[&elements[i].compose(&elements[j])] as u16;
                }
            }
            Some(table)
        } else {
            None
        };
        Ok(ElementTable {
            elements,
            index,
            inverse,
            gen_indices,
            mult,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn gen_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn identity_index(&self) -> usize {
        self.index[&Permutation::identity(self.elements[0].degree())]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mult {
            Some(table) => table[i * self.len() + j] as usize,
            None => self.index[&self.elements[i].compose(&self.elements[j])],
        }
    }

    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        // h^g = g^-1 h g
        self.mul(self.mul(self.inverse[g], h), g)
    }

    /// Closure of a seed set into a subgroup: a sorted member list plus
    /// the essential generators actually used. Generators are added one at
    /// a time and skipped when already in the span, so the closure work is
    /// proportional to the subgroup size times a near-minimal generator
    /// count rather than the seed size.
    pub fn closure_with_gens(&self, seed: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let id = self.identity_index();
        let mut member = vec![false; self.len()];
        member[id] = true;
        let mut members: Vec<usize> = vec![id];
        let mut essential: Vec<usize> = Vec::new();
        for &s in seed {
            if member[s] {
                continue;
            }
            essential.push(s);
            // regenerate the closure with the enlarged generator list
            member.iter_mut().for_each(|m| *m = false);
            member[id] = true;
            members.clear();
            members.push(id);
            let mut head = 0;
            while head < members.len() {
                let g = members[head];
                head += 1;
                for &e in &essential {
                    let h = self.mul(g, e);
                    if !member[h] {
                        member[h] = true;
                        members.push(h);
                    }
                }
            }
        }
        members.sort_unstable();
        (members, essential)
    }

    /// Closure of a seed set into a subgroup, as a sorted index list.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        self.closure_with_gens(seed).0
    }

    /// Bounded closure: aborts with `None` as soon as the subgroup grows
    /// past `max_size` or reaches an element rejected by `keep`. Used by
    /// scans that only care about small subgroups with a pointwise
    /// property (semiregular subgroups, cubic-quotient kernels).
    pub fn closure_bounded(
        &self,
        seed: &[usize],
        max_size: usize,
        keep: impl Fn(usize) -> bool,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let id = self.identity_index();
        let mut member = vec![false; self.len()];
        member[id] = true;
        let mut members: Vec<usize> = vec![id];
        let mut essential: Vec<usize> = Vec::new();
        for &s in seed {
            if member[s] {
                continue;
            }
            if !keep(s) {
                return None;
            }
            essential.push(s);
            member.iter_mut().for_each(|m| *m = false);
            member[id] = true;
            members.clear();
            members.push(id);
            let mut head = 0;
            while head < members.len() {
                let g = members[head];
                head += 1;
                for &e in &essential {
                    let h = self.mul(g, e);
                    if !member[h] {
                        if members.len() >= max_size || !keep(h) {
                            return None;
                        }
                        member[h] = true;
                        members.push(h);
                    }
                }
            }
        }
        members.sort_unstable();
        Some((members, essential))
    }

    /// Conjugacy classes as sorted index lists, ordered by least member.
    /// Class closure only conjugates by group generators.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(h) = queue.pop_front() {
                for &g in &self.gen_indices {
                    let k = self.conj(h, g);
                    if class_of[k] == usize::MAX {
                        class_of[k] = c;
                        members.push(k);
                        queue.push_back(k);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }
}

pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let mut gens = vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()];
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        PermGroup::new(n, gens).unwrap()
    }

    fn dihedral(n: usize) -> PermGroup {
        let rot = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        let refl =
            Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        PermGroup::new(n, vec![rot, refl]).unwrap()
    }

    #[test]
    fn trivial_group_on_four_points() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.order(), 1);
        assert_eq!(g.orbits(), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 1..7 {
            let expected: u128 = (1..=n as u128).product();
            assert_eq!(sym(n).order(), expected, "S{n}");
        }
    }

    #[test]
    fn dihedral_group_order_and_transitivity() {
        for n in 3..9 {
            let d = dihedral(n);
            assert_eq!(d.order(), 2 * n as u128);
            assert!(d.is_transitive());
            assert!(!d.is_abelian());
        }
    }

    #[test]
    fn order_matches_enumeration() {
        for g in [sym(4), sym(5), dihedral(6), dihedral(7)] {
            let elements = g.enumerate_elements(10_000).unwrap();
            assert_eq!(g.order(), elements.len() as u128);
            // enumeration is deduplicated and sorted
            let mut sorted = elements.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted, elements);
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let s4 = sym(4);
        assert!(matches!(
            s4.enumerate_elements(10),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(s4.enumerate_elements(24).unwrap().len(), 24);
    }

    #[test]
    fn membership_via_chain() {
        let d5 = dihedral(5);
        let rot2 = Permutation::from_cycles(5, &[vec![0, 2, 4, 1, 3]]).unwrap();
        assert!(d5.contains(&rot2));
        let transposition = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        assert!(!d5.contains(&transposition));
    }

    #[test]
    fn cyclic_group_single_orbit() {
        let c4 = PermGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()],
        )
        .unwrap();
        assert_eq!(c4.orbits(), vec![vec![0, 1, 2, 3]]);
        assert!(c4.is_regular());
        assert!(c4.is_semiregular());
    }

    #[test]
    fn point_stabilizer_orbit_stabilizer_identity() {
        for g in [sym(5), dihedral(6), dihedral(7)] {
            for v in 0..g.degree() {
                let stab =
                    PermGroup::new(g.degree(), g.point_stabilizer_gens(v)).unwrap();
                let orbit = g.orbit_of(v);
                assert_eq!(g.order(), stab.order() * orbit.len() as u128);
                for s in stab.generators() {
                    assert_eq!(s.apply(v), v);
                }
            }
        }
    }

    #[test]
    fn stabilizer_of_regular_action_is_trivial() {
        let c4 = PermGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()],
        )
        .unwrap();
        assert!(c4.point_stabilizer_gens(0).is_empty());
    }

    #[test]
    fn d5_is_transitive_not_abelian() {
        let d5 = dihedral(5);
        assert!(d5.is_transitive());
        assert!(!d5.is_abelian());
    }

    #[test]
    fn induced_block_action_on_antipodal_pairs() {
        let d6 = dihedral(6);
        let blocks = vec![vec![0, 3], vec![1, 4], vec![2, 5]];
        let action = d6.induced_block_action(&blocks).unwrap();
        assert_eq!(action.degree(), 3);
        assert_eq!(action.order(), 6); // D3 image
    }

    #[test]
    fn invalid_partition_rejected() {
        let d6 = dihedral(6);
        assert!(d6.induced_block_action(&[vec![0, 1], vec![2, 3]]).is_err());
        // not invariant: {0,1} is not a block of D6
        let blocks = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        assert!(matches!(
            d6.induced_block_action(&blocks),
            Err(Error::PartitionNotInvariant)
        ));
    }

    #[test]
    fn element_table_round_trip() {
        let s4 = sym(4);
        let table = ElementTable::build(&s4, 100).unwrap();
        assert_eq!(table.len(), 24);
        for i in 0..table.len() {
            assert_eq!(table.mul(i, table.inverse[i]), table.identity_index());
        }
        // closure of a transposition and a 4-cycle is everything
        let t = table
            .index_of(&Permutation::from_cycles(4, &[vec![0, 1]]).unwrap())
            .unwrap();
        let c = table
            .index_of(&Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap())
            .unwrap();
        assert_eq!(table.subgroup_closure(&[t, c]).len(), 24);
        assert_eq!(table.subgroup_closure(&[t]).len(), 2);
    }

    #[test]
    fn s4_conjugacy_classes() {
        let s4 = sym(4);
        let classes = s4.conjugacy_classes(100).unwrap();
        let mut sizes: Vec<usize> = classes.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn group_text_round_trip() {
        let d5 = dihedral(5);
        let text = d5.to_text();
        let parsed = PermGroup::parse_text(&text).unwrap();
        assert_eq!(parsed.order(), d5.order());
        assert_eq!(parsed.generators(), d5.generators());
        let cyc = PermGroup::parse_text("degree 4\n(0 1 2 3)\n").unwrap();
        assert_eq!(cyc.order(), 4);
    }
}
