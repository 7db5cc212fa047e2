//! Exact permutation and permutation-group machinery.
//!
//! Permutations act on the right: the image of `v` under `g` is `v^g`,
//! and composition is fixed as `v^(gh) = (v^g)^h`.

mod group;
mod subgroup;

pub use group::{ConjugacyClasses, ElementTable, PermGroup};
pub use subgroup::{
    centralizer_in, find_abelian_normal_nonsemiregular, kernel_on_block_system,
    minimal_abelian_normal, normal_subgroups, normal_subgroups_bounded, reduce_to_elementary_abelian,
    Subgroup, DESK_CAP,
};

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::NotAPermutation { degree: n });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint-cycle data.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        degree,
                    });
                }
                if touched[p] {
                    return Err(Error::NotAPermutation { degree });
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The image `v^g`.
    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Composition `gh` with `v^(gh) = (v^g)^h`; `self` acts first.
    pub fn compose(&self, then: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), then.degree());
        Permutation {
            images: self.images.iter().map(|&v| then.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// The conjugate `self^g = g^{-1} self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // v^(g^-1 h g): track w = v^(g^-1), then w^h, then ^g.
        let mut images = vec![0; self.degree()];
        for w in 0..self.degree() {
            images[g.images[w]] = g.images[self.images[w]];
        }
        Permutation { images }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Order via the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        let mut order: u128 = 1;
        for cycle in self.cycles() {
            order = lcm(order, cycle.len() as u128);
        }
        order
    }

    /// Nontrivial cycles, each rotated to start at its least point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&v| self.images[v] == v)
            .collect()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &img)| i == img)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Parses either an image list `[0 2 1]` or cycle notation `(0 1 2)(3 4)`.
    /// The degree is needed for cycle notation (fixed points are implicit).
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            let inner = text
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("unterminated image list: {text}")))?;
            let images: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                })
                .collect::<Result<_>>()?;
            if images.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: images.len(),
                });
            }
            Permutation::from_images(images)
        } else if text.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in text.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let chunk = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("bad cycle syntax: {text}")))?;
                let cycle: Vec<usize> = chunk
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            Permutation::from_cycles(degree, &cycles)
        } else if text == "id" || text == "()" {
            Ok(Permutation::identity(degree))
        } else {
            Err(Error::Parse(format!("unrecognised permutation: {text}")))
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id/{}", self.degree());
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// Order of a permutation; free-function form used by callers that work
/// with generator lists rather than a group value.
pub fn element_order(g: &Permutation) -> u128 {
    g.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_order_one() {
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn five_cycle_has_order_five() {
        let g = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(g.order(), 5);
    }

    #[test]
    fn mixed_cycle_order_is_lcm() {
        let g = Permutation::from_cycles(5, &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn compose_is_left_to_right() {
        // 0^(gh) = (0^g)^h
        let g = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let h = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let gh = g.compose(&h);
        assert_eq!(gh.apply(0), h.apply(g.apply(0)));
        assert_eq!(gh.apply(0), 2);
    }

    #[test]
    fn inverse_round_trips() {
        let g = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
    }

    #[test]
    fn conjugate_matches_definition() {
        let h = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let g = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let direct = g.inverse().compose(&h).compose(&g);
        assert_eq!(h.conjugate_by(&g), direct);
    }

    #[test]
    fn parse_both_formats() {
        let a = Permutation::parse("[1 2 0 3]", 4).unwrap();
        let b = Permutation::parse("(0 1 2)", 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(Permutation::parse(&a.to_string(), 4).unwrap(), a);
        assert!(Permutation::parse("[0 0 1]", 3).is_err());
        assert!(Permutation::parse("(0 1)(1 2)", 3).is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }
}
