//! The desk-scale test corpus: cubic connected Cayley graphs of the
//! small-group catalogue under their regular actions and full
//! automorphism groups, the split Praeger-Xu family with its wreath
//! groups, and a few curated pairs that realise the small target
//! families.

use crate::families::NamedGroup;
use cvt_core::construct::{spx_graph, wreath_group, WreathTarget};
use cvt_core::graph::{self, automorphism_group, Graph, SearchBudget};
use cvt_core::perm::{ElementTable, PermGroup, Permutation};
use cvt_core::Result;

pub struct CorpusInstance {
    pub name: String,
    pub graph: Graph,
    pub group: PermGroup,
    /// regular | aut | wreath | curated
    pub group_kind: &'static str,
}

#[derive(Clone, Copy)]
pub struct CorpusOptions {
    /// bound on the catalogue group orders (also the Cayley vertex counts)
    pub max_group_order: u128,
    /// bound on vertex counts of emitted instances
    pub max_vertices: usize,
    /// connection sets kept per group and shape
    pub sets_per_shape: usize,
    /// attach the full automorphism group as a second instance
    pub include_aut_pairs: bool,
    pub max_aut_order: u128,
}

impl Default for CorpusOptions {
    fn default() -> CorpusOptions {
        CorpusOptions {
            max_group_order: 120,
            max_vertices: 64,
            sets_per_shape: 2,
            include_aut_pairs: true,
            max_aut_order: 5000,
        }
    }
}

/// The embedded small-groups table.
pub fn embedded_table() -> &'static str {
    include_str!("../assets/small_groups.txt")
}

pub fn build_corpus(table: &[NamedGroup], opts: &CorpusOptions) -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();
    for entry in table {
        if entry.group.order() > opts.max_group_order
            || entry.group.order() > opts.max_vertices as u128
        {
            continue;
        }
        for (set_name, connection, elements) in cubic_connection_sets(&entry.group, opts.sets_per_shape)? {
            let graph_ = graph::cayley_graph(&elements, &connection)?;
            if !graph_.is_connected() || graph_.valency() != Some(3) {
                continue;
            }
            let regular = regular_action(&elements, entry.group.generators());
            let name = format!("cay-{}-{set_name}", entry.name);
            out.push(CorpusInstance {
                name: name.clone(),
                graph: graph_.clone(),
                group: regular,
                group_kind: "regular",
            });
            if opts.include_aut_pairs {
                if let Ok(aut) = automorphism_group(&graph_, &mut SearchBudget::default()) {
                    if aut.order() <= opts.max_aut_order {
                        out.push(CorpusInstance {
                            name: format!("{name}-aut"),
                            graph: graph_,
                            group: aut,
                            group_kind: "aut",
                        });
                    }
                }
            }
        }
    }
    // split Praeger-Xu family with its wreath groups
    for r in 3..=7usize {
        for s in 1..r {
            let vertices = r << (s + 1);
            if vertices > opts.max_vertices {
                continue;
            }
            out.push(CorpusInstance {
                name: format!("spx-{r}-{s}"),
                graph: spx_graph(r, s)?,
                group: wreath_group(r, s, WreathTarget::Spx)?,
                group_kind: "wreath",
            });
        }
    }
    out.extend(curated_pairs()?);
    Ok(out)
}

/// (set name, connection set, full element list)
type ConnectionSet = (String, Vec<Permutation>, Vec<Permutation>);

/// Cubic connection sets of both shapes, in deterministic element order:
/// triples of involutions, and an involution together with an inverse
/// pair. Only generating (connected) sets are returned.
fn cubic_connection_sets(group: &PermGroup, per_shape: usize) -> Result<Vec<ConnectionSet>> {
    let table = ElementTable::build(group, 1 << 14)?;
    let order = table.len();
    let involutions: Vec<usize> = (0..order)
        .filter(|&i| table.elements[i].order() == 2)
        .collect();
    let mut out = Vec::new();

    // shape A: three involutions
    let mut found = 0usize;
    'triples: for (a_pos, &a) in involutions.iter().enumerate() {
        for (b_pos, &b) in involutions.iter().enumerate().skip(a_pos + 1) {
            for &c in involutions.iter().skip(b_pos + 1) {
                if table.subgroup_closure(&[a, b, c]).len() == order {
                    out.push((
                        format!("iii{found}"),
                        vec![
                            table.elements[a].clone(),
                            table.elements[b].clone(),
                            table.elements[c].clone(),
                        ],
                        table.elements.clone(),
                    ));
                    found += 1;
                    if found >= per_shape {
                        break 'triples;
                    }
                }
            }
        }
    }

    // shape B: an inverse pair and an involution
    let mut found = 0usize;
    'pairs: for x in 0..order {
        let xi = table.inverse[x];
        if x >= xi || table.elements[x].order() <= 2 {
            continue; // keep one representative per inverse pair
        }
        for &t in &involutions {
            if table.subgroup_closure(&[x, t]).len() == order {
                out.push((
                    format!("pi{found}"),
                    vec![
                        table.elements[x].clone(),
                        table.elements[xi].clone(),
                        table.elements[t].clone(),
                    ],
                    table.elements.clone(),
                ));
                found += 1;
                if found >= per_shape {
                    break 'pairs;
                }
            }
        }
    }
    Ok(out)
}

/// The right-regular action on the element list, generated by right
/// multiplication with the group's defining generators.
fn regular_action(elements: &[Permutation], generators: &[Permutation]) -> PermGroup {
    let position = |g: &Permutation| elements.iter().position(|e| e == g).unwrap();
    let gens = generators
        .iter()
        .map(|h| {
            Permutation::from_images(elements.iter().map(|a| position(&a.compose(h))).collect())
                .unwrap()
        })
        .collect();
    PermGroup::new(elements.len(), gens).unwrap()
}

/// Hand-picked pairs realising the bounded target families: `K4` with a
/// dihedral group, `K33` with an order-18 group whose `Z3 x Z3` is not
/// semiregular, and the cube in its prism labelling with `Z2 x D4`.
fn curated_pairs() -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();

    let k4 = graph::complete(4);
    let d4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[vec![0, 1, 2, 3]])?,
            Permutation::from_cycles(4, &[vec![1, 3]])?,
        ],
    )?;
    out.push(CorpusInstance {
        name: "curated-k4-d4".into(),
        graph: k4,
        group: d4,
        group_kind: "curated",
    });

    let k33 = graph::complete_bipartite(3, 3);
    let g18 = PermGroup::new(
        6,
        vec![
            Permutation::from_cycles(6, &[vec![0, 1, 2]])?,
            Permutation::from_cycles(6, &[vec![3, 4, 5]])?,
            Permutation::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]])?,
        ],
    )?;
    out.push(CorpusInstance {
        name: "curated-k33-g18".into(),
        graph: k33,
        group: g18,
        group_kind: "curated",
    });

    // the cube as the prism over C4 (vertex (i, j) encoded as 2i + j)
    let cube = graph::cartesian_product(&graph::cycle(4), &graph::complete(2));
    let rot = Permutation::from_images((0..8).map(|v| (v + 2) % 8).collect())?;
    let refl = Permutation::from_images(
        (0..8)
            .map(|v| {
                let (i, j) = (v / 2, v % 2);
                2 * ((4 - i) % 4) + j
            })
            .collect(),
    )?;
    let swap = Permutation::from_images((0..8).map(|v| v ^ 1).collect())?;
    let z2d4 = PermGroup::new(8, vec![rot, refl, swap])?;
    out.push(CorpusInstance {
        name: "curated-q3-z2d4".into(),
        graph: cube,
        group: z2d4,
        group_kind: "curated",
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn corpus_instances_are_cubic_vertex_transitive() {
        let table = families::catalogue(24);
        let corpus = build_corpus(
            &table,
            &CorpusOptions {
                max_group_order: 24,
                max_vertices: 24,
                sets_per_shape: 1,
                include_aut_pairs: true,
                max_aut_order: 5000,
            },
        )
        .unwrap();
        assert!(corpus.len() >= 10, "corpus too small: {}", corpus.len());
        for inst in &corpus {
            assert_eq!(inst.graph.valency(), Some(3), "{}", inst.name);
            assert!(inst.graph.is_connected(), "{}", inst.name);
            assert!(
                graph::is_vertex_transitive(&inst.group, &inst.graph).unwrap(),
                "{}",
                inst.name
            );
        }
    }

    #[test]
    fn curated_pairs_have_nonsemiregular_abelian_normals() {
        for inst in curated_pairs().unwrap() {
            let n = cvt_core::perm::find_abelian_normal_nonsemiregular(&inst.group, 10_000)
                .unwrap();
            assert!(n.is_some(), "{} lacks a witness subgroup", inst.name);
        }
    }

    #[test]
    fn embedded_table_matches_regenerated_catalogue() {
        let embedded = embedded_table();
        let regenerated = families::catalogue_text(120);
        assert_eq!(embedded, regenerated, "asset is stale; rerun gen-smallgroups");
    }
}
