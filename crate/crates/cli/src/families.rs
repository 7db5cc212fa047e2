//! Constructors for the small-group catalogue: every group is produced
//! as a faithful permutation representation with a short generator list.
//! The catalogue covers all abelian groups up to the order bound plus
//! the standard nonabelian families at desk scale: dihedral, dicyclic,
//! metacyclic extensions of cyclic groups by an involution, Frobenius
//! groups `Zp : Zd`, alternating/symmetric groups, `SL(2,3)`, and a few
//! direct products.

use cvt_core::perm::{PermGroup, Permutation};

pub struct NamedGroup {
    pub name: String,
    pub group: PermGroup,
}

/// The whole catalogue, sorted by (order, name); deterministic.
pub fn catalogue(max_order: u128) -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = Vec::new();
    out.extend(abelian_groups(max_order));
    for n in 3..=63 {
        if 2 * n as u128 <= max_order {
            out.push(NamedGroup {
                name: format!("D{n}"),
                group: dihedral(n),
            });
        }
    }
    for n in 2..=30 {
        if 4 * n as u128 <= max_order {
            out.push(NamedGroup {
                name: format!("Dic{n}"),
                group: dicyclic(n),
            });
        }
    }
    out.extend(metacyclic_involution_extensions(max_order));
    out.extend(frobenius_groups(max_order));
    for (name, group) in sporadic_groups() {
        if group.order() <= max_order {
            out.push(NamedGroup { name, group });
        }
    }
    out.extend(direct_products(max_order));
    out.sort_by(|a, b| {
        (a.group.order(), a.name.clone()).cmp(&(b.group.order(), b.name.clone()))
    });
    out
}

/// All abelian groups of each order up to the bound, one per isomorphism
/// type, as direct sums of prime-power cyclic factors acting on disjoint
/// cycles.
fn abelian_groups(max_order: u128) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in 2..=max_order as u64 {
        for factors in abelian_types(n) {
            let degree: usize = factors.iter().map(|&f| f as usize).sum();
            let mut gens = Vec::new();
            let mut offset = 0usize;
            for &f in &factors {
                let cycle: Vec<usize> = (offset..offset + f as usize).collect();
                gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
                offset += f as usize;
            }
            let name = format!(
                "Z{}",
                factors
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join("xZ")
            );
            out.push(NamedGroup {
                name,
                group: PermGroup::new(degree, gens).unwrap(),
            });
        }
    }
    out
}

/// The isomorphism types of abelian groups of order `n`: multisets of
/// prime-power factors, one per partition of each prime exponent.
/// Factors are listed in decreasing order.
fn abelian_types(n: u64) -> Vec<Vec<u64>> {
    let mut types: Vec<Vec<u64>> = vec![vec![]];
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            types = extend_by_prime(types, p, e);
        }
        p += 1;
    }
    if m > 1 {
        types = extend_by_prime(types, m, 1);
    }
    for t in &mut types {
        t.sort_unstable_by(|a, b| b.cmp(a));
    }
    types.sort();
    types.dedup();
    types
}

fn extend_by_prime(types: Vec<Vec<u64>>, p: u64, e: u32) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for partition in partitions(e) {
        for t in &types {
            let mut extended = t.clone();
            for &part in &partition {
                extended.push(p.pow(part));
            }
            out.push(extended);
        }
    }
    out
}

fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            prefix.push(next);
            rec(remaining - next, next, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

pub fn dihedral(n: usize) -> PermGroup {
    let rot = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
    let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    PermGroup::new(n, vec![rot, refl]).unwrap()
}

/// The dicyclic group of order `4n` in its regular representation:
/// elements `a^i` and `a^i b` with `a` of order `2n`, `b^2 = a^n`,
/// `b a b^{-1} = a^{-1}`. Point `(i, j)` is encoded as `j * 2n + i`.
fn dicyclic(n: usize) -> PermGroup {
    let m = 2 * n;
    let degree = 2 * m;
    let idx = |i: usize, j: usize| j * m + (i % m);
    let right_a = Permutation::from_images(
        (0..degree)
            .map(|v| {
                let (i, j) = (v % m, v / m);
                if j == 0 {
                    idx(i + 1, 0)
                } else {
                    idx(i + m - 1, 1)
                }
            })
            .collect(),
    )
    .unwrap();
    let right_b = Permutation::from_images(
        (0..degree)
            .map(|v| {
                let (i, j) = (v % m, v / m);
                if j == 0 {
                    idx(i, 1)
                } else {
                    idx(i + n, 0)
                }
            })
            .collect(),
    )
    .unwrap();
    PermGroup::new(degree, vec![right_a, right_b]).unwrap()
}

/// Regular representations of `Zm : Z2` with `b a b^{-1} = a^k`, for
/// `k^2 = 1 (mod m)` and `k` distinct from `1` and `m-1` (those give the
/// direct product and the dihedral group). Covers the semidihedral and
/// modular 2-groups among others.
fn metacyclic_involution_extensions(max_order: u128) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for m in 3..=60usize {
        if 2 * m as u128 > max_order {
            break;
        }
        for k in 2..m.saturating_sub(1) {
            if (k * k) % m != 1 {
                continue;
            }
            let degree = 2 * m;
            let idx = |i: usize, j: usize| j * m + (i % m);
            let right_a = Permutation::from_images(
                (0..degree)
                    .map(|v| {
                        let (i, j) = (v % m, v / m);
                        if j == 0 {
                            idx(i + 1, 0)
                        } else {
                            idx(i + k, 1)
                        }
                    })
                    .collect(),
            )
            .unwrap();
            let right_b = Permutation::from_images(
                (0..degree)
                    .map(|v| {
                        let (i, j) = (v % m, v / m);
                        if j == 0 {
                            idx(i, 1)
                        } else {
                            idx(i, 0)
                        }
                    })
                    .collect(),
            )
            .unwrap();
            out.push(NamedGroup {
                name: format!("Z{m}:Z2(k={k})"),
                group: PermGroup::new(degree, vec![right_a, right_b]).unwrap(),
            });
        }
    }
    out
}

/// Frobenius groups `Zp : Zd` of degree `p`, for primes `p` and divisors
/// `d > 2` of `p - 1` (d = 2 is the dihedral group, listed separately).
fn frobenius_groups(max_order: u128) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for p in [5usize, 7, 11, 13, 17, 19, 23] {
        let g = primitive_root(p);
        for d in 3..p {
            if (p - 1) % d != 0 || (p * d) as u128 > max_order {
                continue;
            }
            let u = pow_mod(g, (p - 1) / d, p);
            let cycle = Permutation::from_cycles(p, &[(0..p).collect()]).unwrap();
            let mult = Permutation::from_images(
                (0..p).map(|x| x * u % p).collect(),
            )
            .unwrap();
            out.push(NamedGroup {
                name: format!("Z{p}:Z{d}"),
                group: PermGroup::new(p, vec![cycle, mult]).unwrap(),
            });
        }
    }
    out
}

fn primitive_root(p: usize) -> usize {
    'next: for g in 2..p {
        let mut seen = 1usize;
        let mut x = g;
        while x != 1 {
            x = x * g % p;
            seen += 1;
        }
        if seen == p - 1 {
            return g;
        }
        continue 'next;
    }
    unreachable!("prime has a primitive root")
}

fn pow_mod(mut base: usize, mut e: usize, m: usize) -> usize {
    let mut acc = 1usize;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn symmetric(n: usize) -> PermGroup {
    PermGroup::new(
        n,
        vec![
            Permutation::from_cycles(n, &[(0..n).collect()]).unwrap(),
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
        ],
    )
    .unwrap()
}

fn alternating(n: usize) -> PermGroup {
    let three_cycle = Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()]).unwrap()
    };
    PermGroup::new(n, vec![three_cycle, long]).unwrap()
}

/// `SL(2,3)` acting on the eight nonzero vectors of `F3^2`.
fn sl23() -> PermGroup {
    let vectors: Vec<(usize, usize)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .collect();
    let apply_matrix = |m: [[usize; 2]; 2]| -> Permutation {
        let images: Vec<usize> = vectors
            .iter()
            .map(|&(x, y)| {
                let nx = (m[0][0] * x + m[0][1] * y) % 3;
                let ny = (m[1][0] * x + m[1][1] * y) % 3;
                vectors.iter().position(|&v| v == (nx, ny)).unwrap()
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    PermGroup::new(
        8,
        vec![apply_matrix([[1, 1], [0, 1]]), apply_matrix([[0, 2], [1, 0]])],
    )
    .unwrap()
}

fn sporadic_groups() -> Vec<(String, PermGroup)> {
    vec![
        ("A4".into(), alternating(4)),
        ("S4".into(), symmetric(4)),
        ("A5".into(), alternating(5)),
        ("S5".into(), symmetric(5)),
        ("SL(2,3)".into(), sl23()),
    ]
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = (0..da + db).collect();
        for (v, slot) in images.iter_mut().enumerate().take(da) {
            *slot = g.apply(v);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..da + db).collect();
        for v in 0..db {
            images[da + v] = da + g.apply(v);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    PermGroup::new(da + db, gens).unwrap()
}

fn z2() -> PermGroup {
    PermGroup::new(2, vec![Permutation::from_cycles(2, &[vec![0, 1]]).unwrap()]).unwrap()
}

fn direct_products(max_order: u128) -> Vec<NamedGroup> {
    let mut out = Vec::new();
    for n in 3..=29usize {
        if 4 * n as u128 <= max_order {
            out.push(NamedGroup {
                name: format!("Z2xD{n}"),
                group: direct_product(&z2(), &dihedral(n)),
            });
        }
    }
    for (name, g) in [
        ("Z2xA4", alternating(4)),
        ("Z2xS4", symmetric(4)),
        ("Z2xA5", alternating(5)),
        ("Z2xSL(2,3)", sl23()),
    ] {
        let product = direct_product(&z2(), &g);
        if product.order() <= max_order {
            out.push(NamedGroup {
                name: name.into(),
                group: product,
            });
        }
    }
    out
}

/// Serialises the catalogue in the plain-text asset format.
pub fn catalogue_text(max_order: u128) -> String {
    let mut out = String::from(
        "# small-groups generator table\n\
         # one block per group:\n\
         #   group <name> order <o> degree <d>\n\
         #   gen <permutation image list>\n\
         #   end\n\
         # regenerate with: cargo run -p cvt-cli --bin gen-smallgroups\n",
    );
    for entry in catalogue(max_order) {
        out.push_str(&format!(
            "group {} order {} degree {}\n",
            entry.name,
            entry.group.order(),
            entry.group.degree()
        ));
        for g in entry.group.generators() {
            out.push_str(&format!("gen {g}\n"));
        }
        out.push_str("end\n");
    }
    out
}

/// Parses the asset format back into named groups, cross-checking each
/// recorded order against the computed one.
pub fn parse_catalogue(text: &str) -> anyhow::Result<Vec<NamedGroup>> {
    let mut out = Vec::new();
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    while let Some(header) = lines.next() {
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 6 || parts[0] != "group" || parts[2] != "order" || parts[4] != "degree" {
            anyhow::bail!("bad group header: {header}");
        }
        let name = parts[1].to_string();
        let order: u128 = parts[3].parse()?;
        let degree: usize = parts[5].parse()?;
        let mut gens = Vec::new();
        for line in lines.by_ref() {
            if line == "end" {
                break;
            }
            let image_list = line
                .strip_prefix("gen ")
                .ok_or_else(|| anyhow::anyhow!("expected `gen`, got {line}"))?;
            gens.push(Permutation::parse(image_list, degree)?);
        }
        let group = PermGroup::new(degree, gens)?;
        anyhow::ensure!(
            group.order() == order,
            "group {name}: recorded order {order} but computed {}",
            group.order()
        );
        out.push(NamedGroup { name, group });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_type_counts() {
        assert_eq!(abelian_types(1).len(), 1);
        assert_eq!(abelian_types(8).len(), 3); // Z8, Z4xZ2, Z2^3
        assert_eq!(abelian_types(12).len(), 2);
        assert_eq!(abelian_types(16).len(), 5);
        assert_eq!(abelian_types(64).len(), 11);
    }

    #[test]
    fn family_orders() {
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(dicyclic(2).order(), 8); // quaternion group
        assert_eq!(dicyclic(3).order(), 12); // Z3 : Z4
        assert_eq!(sl23().order(), 24);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        // dicyclic has a unique involution
        let q8 = dicyclic(2);
        let involutions = q8
            .enumerate_elements(100)
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn frobenius_f20_f21() {
        let groups = frobenius_groups(120);
        let f20 = groups.iter().find(|g| g.name == "Z5:Z4").unwrap();
        assert_eq!(f20.group.order(), 20);
        let f21 = groups.iter().find(|g| g.name == "Z7:Z3").unwrap();
        assert_eq!(f21.group.order(), 21);
    }

    #[test]
    fn catalogue_orders_within_bound_and_text_round_trip() {
        let max = 48;
        let cat = catalogue(max);
        assert!(cat.iter().all(|g| g.group.order() <= max));
        // covers all abelian groups of order 16
        let sixteen: Vec<&NamedGroup> =
            cat.iter().filter(|g| g.group.order() == 16).collect();
        assert!(sixteen.len() >= 5);
        let text = catalogue_text(max);
        let parsed = parse_catalogue(&text).unwrap();
        assert_eq!(parsed.len(), cat.len());
        for (a, b) in parsed.iter().zip(cat.iter()) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.group.order(), b.group.order());
        }
    }
}
