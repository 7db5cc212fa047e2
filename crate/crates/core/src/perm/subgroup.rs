use super::group::{block_index_map, ElementTable, PermGroup};
use super::Permutation;
use crate::error::{Error, Result};

/// Default desk-scale cap for enumeration-backed operations.
pub const DESK_CAP: usize = 100_000;

/// A subgroup tied to its ambient group. Construction verifies that every
/// generator sifts to the identity in the parent's stabiliser chain.
#[derive(Clone)]
pub struct Subgroup {
    parent: PermGroup,
    group: PermGroup,
}

impl Subgroup {
    pub fn new(parent: &PermGroup, generators: Vec<Permutation>) -> Result<Subgroup> {
        for g in &generators {
            if !parent.contains(g) {
                return Err(Error::NotInParent);
            }
        }
        let group = PermGroup::new(parent.degree(), generators)?;
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    /// The whole group, viewed as a subgroup of itself.
    pub fn full(parent: &PermGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: parent.clone(),
        }
    }

    pub fn trivial(parent: &PermGroup) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            group: PermGroup::trivial(parent.degree()),
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn generators(&self) -> &[Permutation] {
        self.group.generators()
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    /// True iff `h^g` stays in the subgroup for all generators `h` of the
    /// subgroup and `g` of the parent.
    pub fn is_normal(&self) -> bool {
        for g in self.parent.generators() {
            for h in self.group.generators() {
                if !self.group.contains(&h.conjugate_by(g)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.group.is_abelian()
    }

    pub fn is_semiregular(&self) -> bool {
        self.group.is_semiregular()
    }
}

impl PermGroup {
    /// The stabiliser of `v`, with Schreier generators reduced through a
    /// stabiliser chain based at `v`. Satisfies `|G| = |G_v| * |v^G|`.
    pub fn point_stabilizer(&self, v: usize) -> Subgroup {
        let gens = self.point_stabilizer_gens(v);
        Subgroup {
            parent: self.clone(),
            group: PermGroup::new(self.degree(), gens).expect("stabiliser generators are valid"),
        }
    }
}

/// The subgroup of `N` generated by its elements of order exactly `p`.
/// For abelian `N` this is elementary abelian, characteristic in `N`, and
/// therefore normal in any overgroup in which `N` is normal.
pub fn reduce_to_elementary_abelian(n: &Subgroup, p: u64) -> Result<Subgroup> {
    if !n.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !n.order().is_multiple_of(p as u128) {
        return Err(Error::PrimeDoesNotDivide { p });
    }
    let elements = n.group().enumerate_elements(DESK_CAP)?;
    let mut span = PermGroup::trivial(n.parent().degree());
    let mut gens: Vec<Permutation> = Vec::new();
    for g in elements {
        if g.order() == p as u128 && !span.contains(&g) {
            gens.push(g);
            span = PermGroup::new(n.parent().degree(), gens.clone())?;
        }
    }
    Subgroup::new(n.parent(), gens)
}

/// The centraliser of `N` (given by generators) inside `ambient`, computed
/// by filtering an exhaustive element list.
pub fn centralizer_in(
    ambient: &PermGroup,
    n_generators: &[Permutation],
    cap: usize,
) -> Result<Subgroup> {
    let elements = ambient.enumerate_elements(cap)?;
    let mut span = PermGroup::trivial(ambient.degree());
    let mut gens: Vec<Permutation> = Vec::new();
    for g in elements {
        if g.is_identity() {
            continue;
        }
        if n_generators.iter().all(|h| g.commutes_with(h)) && !span.contains(&g) {
            gens.push(g);
            span = PermGroup::new(ambient.degree(), gens.clone())?;
        }
    }
    Subgroup::new(ambient, gens)
}

/// The subgroup of `g` fixing every block of `blocks` setwise, computed
/// from a stabiliser chain of the extended action on points plus blocks.
pub fn kernel_on_block_system(g: &PermGroup, blocks: &[Vec<usize>]) -> Result<Subgroup> {
    let n = g.degree();
    let block_of = block_index_map(n, blocks)?;
    let b = blocks.len();
    let mut extended_gens = Vec::with_capacity(g.generators().len());
    for gen in g.generators() {
        let mut images = vec![usize::MAX; n + b];
        for (v, slot) in images.iter_mut().enumerate().take(n) {
            *slot = gen.apply(v);
        }
        for (idx, block) in blocks.iter().enumerate() {
            let target = block_of[gen.apply(block[0])];
            for &v in block {
                if block_of[gen.apply(v)] != target {
                    return Err(Error::PartitionNotInvariant);
                }
            }
            images[n + idx] = n + target;
        }
        extended_gens.push(Permutation::from_images(images)?);
    }
    let extended = PermGroup::new(n + b, extended_gens)?;
    let block_points: Vec<usize> = (n..n + b).collect();
    let kernel_ext = extended.pointwise_stabilizer_gens(&block_points);
    let kernel_gens = kernel_ext
        .into_iter()
        .map(|perm| {
            Permutation::from_images(perm.images()[..n].to_vec())
                .expect("restriction of block-fixing element is a permutation")
        })
        .collect();
    Subgroup::new(g, kernel_gens)
}

// ---------------------------------------------------------------------------
// Normal-subgroup searches
// ---------------------------------------------------------------------------

/// A normal subgroup in index space: its sorted element list plus a small
/// generating set (indices into the same table).
struct IndexedSubgroup {
    members: Vec<usize>,
    gens: Vec<usize>,
}

/// Normal closures of prime-order class representatives. Every minimal
/// normal subgroup of the group appears among these.
fn prime_order_atoms(table: &ElementTable) -> Vec<IndexedSubgroup> {
    atoms_for(table, is_prime)
}

fn atoms_for(table: &ElementTable, keep: impl Fn(u128) -> bool) -> Vec<IndexedSubgroup> {
    let classes = table.conjugacy_classes();
    let mut atoms: Vec<IndexedSubgroup> = Vec::new();
    for class in &classes.classes {
        let rep = class[0];
        let order = table.elements[rep].order();
        if order == 1 || !keep(order) {
            continue;
        }
        // normal closure = subgroup generated by the whole class
        let (members, gens) = table.closure_with_gens(class);
        if !atoms.iter().any(|a| a.members == members) {
            atoms.push(IndexedSubgroup { members, gens });
        }
    }
    atoms
}

fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_prime_power(mut n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            return n == 1;
        }
        d += 1;
    }
    true // n itself prime
}

fn subgroup_from_indices(
    parent: &PermGroup,
    table: &ElementTable,
    indexed: &IndexedSubgroup,
) -> Subgroup {
    let gens = indexed
        .gens
        .iter()
        .map(|&i| table.elements[i].clone())
        .collect();
    Subgroup::new(parent, gens).expect("table elements lie in the parent")
}

fn indexed_is_abelian(table: &ElementTable, sub: &IndexedSubgroup) -> bool {
    for (i, &a) in sub.gens.iter().enumerate() {
        for &b in &sub.gens[i + 1..] {
            if table.mul(a, b) != table.mul(b, a) {
                return false;
            }
        }
    }
    true
}

fn indexed_is_semiregular(table: &ElementTable, sub: &IndexedSubgroup) -> bool {
    sub.members.iter().all(|&i| {
        let g = &table.elements[i];
        g.is_identity() || !g.has_fixed_point()
    })
}

/// Searches for an abelian normal subgroup of `g` with a nontrivial point
/// stabiliser. The search takes normal closures of prime-order elements,
/// then products of commuting closures, and finally (for small groups)
/// an exhaustive scan over the full normal-subgroup lattice.
///
/// A closure `ncl(x)` of a prime-order element `x` with a fixed point is
/// abelian exactly when it witnesses the property, and any abelian normal
/// non-semiregular subgroup contains such an `x`, so the first stage is
/// already decisive; the later stages are kept as independent backstops.
pub fn find_abelian_normal_nonsemiregular(
    g: &PermGroup,
    cap: usize,
) -> Result<Option<Subgroup>> {
    if g.is_semiregular() {
        return Ok(None); // every subgroup of a semiregular group is semiregular
    }
    let table = ElementTable::build(g, cap)?;
    let atoms = prime_order_atoms(&table);
    let abelian: Vec<&IndexedSubgroup> = atoms
        .iter()
        .filter(|a| indexed_is_abelian(&table, a))
        .collect();
    for atom in &abelian {
        if !indexed_is_semiregular(&table, atom) {
            return Ok(Some(subgroup_from_indices(g, &table, atom)));
        }
    }
    // products of commuting abelian closures
    for (i, a) in abelian.iter().enumerate() {
        for b in &abelian[i + 1..] {
            let commute = a.gens.iter().all(|&x| {
                b.gens
                    .iter()
                    .all(|&y| table.mul(x, y) == table.mul(y, x))
            });
            if !commute {
                continue;
            }
            let mut seed = a.gens.clone();
            seed.extend_from_slice(&b.gens);
            let (members, gens) = table.closure_with_gens(&seed);
            let joined = IndexedSubgroup { members, gens };
            if indexed_is_abelian(&table, &joined) && !indexed_is_semiregular(&table, &joined) {
                return Ok(Some(subgroup_from_indices(g, &table, &joined)));
            }
        }
    }
    // exhaustive fallback over the normal-subgroup lattice
    if table.len() <= 2000 {
        for sub in normal_lattice(&table, usize::MAX) {
            if indexed_is_abelian(&table, &sub) && !indexed_is_semiregular(&table, &sub) {
                return Ok(Some(subgroup_from_indices(g, &table, &sub)));
            }
        }
    }
    Ok(None)
}

/// An abelian normal subgroup minimal among the nontrivial normal
/// subgroups of `g` (hence elementary abelian), or `None` when every
/// minimal normal subgroup is nonabelian.
pub fn minimal_abelian_normal(g: &PermGroup, cap: usize) -> Result<Option<Subgroup>> {
    let table = ElementTable::build(g, cap)?;
    let atoms = prime_order_atoms(&table);
    let mut minimal: Vec<&IndexedSubgroup> = Vec::new();
    'outer: for a in &atoms {
        for b in &atoms {
            if b.members.len() < a.members.len() && is_subset(&b.members, &a.members) {
                continue 'outer;
            }
        }
        minimal.push(a);
    }
    minimal.sort_by_key(|a| (a.members.len(), a.members.clone()));
    for a in minimal {
        if indexed_is_abelian(&table, a) {
            return Ok(Some(subgroup_from_indices(g, &table, a)));
        }
    }
    Ok(None)
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // both sorted
    let mut it = big.iter();
    'outer: for &x in small {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Normal subgroups of the table's group with at most `max_members`
/// elements, plus the trivial and full subgroups. The lattice is
/// generated by taking normal closures of prime-power-order class
/// representatives and closing under joins; joins only ever grow, so a
/// size bound prunes whole branches exactly.
fn normal_lattice(table: &ElementTable, max_members: usize) -> Vec<IndexedSubgroup> {
    let mut subs: Vec<IndexedSubgroup> = Vec::new();
    subs.push(IndexedSubgroup {
        members: vec![table.identity_index()],
        gens: Vec::new(),
    });
    if table.len() > 1 {
        let full: Vec<usize> = (0..table.len()).collect();
        let full_gens = table.gen_indices().to_vec();
        subs.push(IndexedSubgroup {
            members: full,
            gens: full_gens,
        });
    }
    let classes = table.conjugacy_classes();
    let mut atoms: Vec<IndexedSubgroup> = Vec::new();
    for class in &classes.classes {
        let rep = class[0];
        let order = table.elements[rep].order();
        if order == 1 || !is_prime_power(order) {
            continue;
        }
        let Some((members, gens)) = table.closure_bounded(class, max_members, |_| true) else {
            continue;
        };
        if !atoms.iter().any(|a| a.members == members) {
            atoms.push(IndexedSubgroup { members, gens });
        }
    }
    let first_atom = subs.len();
    let mut queue: Vec<usize> = Vec::new();
    for a in atoms {
        if !subs.iter().any(|s| s.members == a.members) {
            subs.push(a);
            queue.push(subs.len() - 1);
        }
    }
    let atom_range: Vec<usize> = (first_atom..subs.len()).collect();
    while let Some(i) = queue.pop() {
        for &j in &atom_range {
            let mut seed = subs[i].gens.clone();
            seed.extend_from_slice(&subs[j].gens);
            let Some((members, gens)) = table.closure_bounded(&seed, max_members, |_| true)
            else {
                continue;
            };
            if !subs.iter().any(|s| s.members == members) {
                subs.push(IndexedSubgroup { members, gens });
                queue.push(subs.len() - 1);
            }
        }
    }
    subs.sort_by_key(|s| (s.members.len(), s.members.clone()));
    subs
}

/// All normal subgroups of `g`, sorted by order then by element list.
/// Exhaustive for the groups it accepts; errors with `CapExceeded` when
/// the group cannot be enumerated within `cap`.
pub fn normal_subgroups(g: &PermGroup, cap: usize) -> Result<Vec<Subgroup>> {
    normal_subgroups_bounded(g, cap, usize::MAX)
}

/// All normal subgroups of order at most `max_order`, plus the trivial
/// and full subgroups. Exhaustive below the bound.
pub fn normal_subgroups_bounded(
    g: &PermGroup,
    cap: usize,
    max_order: usize,
) -> Result<Vec<Subgroup>> {
    let table = ElementTable::build(g, cap)?;
    Ok(normal_lattice(&table, max_order)
        .iter()
        .map(|s| subgroup_from_indices(g, &table, s))
        .collect())
}
