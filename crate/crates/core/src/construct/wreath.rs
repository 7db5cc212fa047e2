//! The wreath group `Z2^r : Dr` and its coordinate actions on the
//! Praeger-Xu graphs and their splits.

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A dihedral element in normal form: `(t, false)` is rotation by `t`,
/// `(t, true)` is rotation by `t` followed by the reflection fixing
/// position 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralElement {
    pub fn identity() -> DihedralElement {
        DihedralElement {
            rotation: 0,
            reflected: false,
        }
    }

    pub fn rotation(t: usize, r: usize) -> DihedralElement {
        DihedralElement {
            rotation: t % r,
            reflected: false,
        }
    }

    pub fn reflection(t: usize, r: usize) -> DihedralElement {
        DihedralElement {
            rotation: t % r,
            reflected: true,
        }
    }

    /// The image of position `x` (mod `r`).
    pub fn act(&self, x: usize, r: usize) -> usize {
        let shifted = (x + self.rotation) % r;
        if self.reflected {
            (r - shifted) % r
        } else {
            shifted
        }
    }

    /// `self` applied first, `other` second.
    pub fn compose(&self, other: &DihedralElement, r: usize) -> DihedralElement {
        let rotation = if self.reflected {
            (self.rotation + r - other.rotation % r) % r
        } else {
            (self.rotation + other.rotation) % r
        };
        DihedralElement {
            rotation,
            reflected: self.reflected ^ other.reflected,
        }
    }

    pub fn inverse(&self, r: usize) -> DihedralElement {
        if self.reflected {
            *self
        } else {
            DihedralElement {
                rotation: (r - self.rotation % r) % r,
                reflected: false,
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.reflected
    }

    /// True iff the element generates the rotation subgroup, i.e. it is a
    /// rotation of order exactly `r`.
    pub fn is_full_order_rotation(&self, r: usize) -> bool {
        !self.reflected && crate::perm::gcd(self.rotation as u128, r as u128) == 1
    }
}

/// Which coordinate action a wreath element is realised on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WreathTarget {
    Px,
    Spx,
}

/// An element `(g_0, .., g_{r-1}; h)` of `Z2^r : Dr`, with the base
/// vector packed as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub r: usize,
    pub base: u64,
    pub top: DihedralElement,
}

impl WreathElement {
    pub fn new(r: usize, base: u64, top: DihedralElement) -> Result<WreathElement> {
        if !(3..=63).contains(&r) {
            return Err(Error::ParamRange(format!("wreath degree r={r} not in 3..=63")));
        }
        Ok(WreathElement {
            r,
            base: base & ((1u64 << r) - 1),
            top,
        })
    }

    pub fn identity(r: usize) -> WreathElement {
        WreathElement {
            r,
            base: 0,
            top: DihedralElement::identity(),
        }
    }

    #[inline]
    pub fn base_bit(&self, y: usize) -> u64 {
        (self.base >> (y % self.r)) & 1
    }

    pub fn base_weight(&self) -> u32 {
        self.base.count_ones()
    }

    /// Composition `self * other`, applying `self` first: the combined
    /// base entry at `y` is `g_y + g'_{y^h}` and the tops compose in `Dr`.
    pub fn compose(&self, other: &WreathElement) -> WreathElement {
        debug_assert_eq!(self.r, other.r);
        let mut base = 0u64;
        for y in 0..self.r {
            let bit = self.base_bit(y) ^ other.base_bit(self.top.act(y, self.r));
            base |= bit << y;
        }
        WreathElement {
            r: self.r,
            base,
            top: self.top.compose(&other.top, self.r),
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let inv_top = self.top.inverse(self.r);
        let mut base = 0u64;
        for z in 0..self.r {
            base |= self.base_bit(inv_top.act(z, self.r)) << z;
        }
        WreathElement {
            r: self.r,
            base,
            top: inv_top,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.base == 0 && self.top.is_identity()
    }

    pub fn pow(&self, e: u64) -> WreathElement {
        let mut acc = WreathElement::identity(self.r);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut acc = *self;
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }

    /// Action on a Praeger-Xu vertex `(n_0, .., n_{s-1}, x)`: the bit read
    /// at fiber `y = x + i` is flipped by `g_y` and moved to fiber `y^h`.
    /// Rotations keep the tuple order; reflections reverse it, because
    /// they reverse the fiber interval the vertex occupies.
    pub fn act_px(&self, space: &PxSpace, vertex: usize) -> usize {
        let (bits, x) = space.decode(vertex);
        let (new_bits, new_x) = self.act_window(space.s, bits, x);
        space.encode(new_bits, new_x)
    }

    /// Action on a split Praeger-Xu vertex: same as `act_px` on the
    /// `(bits, position)` part; the sign is kept by rotations and flipped
    /// by reflections.
    pub fn act_spx(&self, space: &SpxSpace, vertex: usize) -> usize {
        let (bits, x, sign) = space.decode(vertex);
        let (new_bits, new_x) = self.act_window(space.s, bits, x);
        let new_sign = if self.top.reflected { sign ^ 1 } else { sign };
        space.encode(new_bits, new_x, new_sign)
    }

    fn act_window(&self, s: usize, bits: u64, x: usize) -> (u64, usize) {
        let r = self.r;
        if !self.top.reflected {
            let mut new_bits = 0u64;
            for i in 0..s {
                new_bits |= (((bits >> i) & 1) ^ self.base_bit(x + i)) << i;
            }
            (new_bits, self.top.act(x, r))
        } else {
            let new_x = self.top.act(x + s - 1, r);
            let mut new_bits = 0u64;
            for i in 0..s {
                let bit = ((bits >> i) & 1) ^ self.base_bit(x + i);
                new_bits |= bit << (s - 1 - i);
            }
            (new_bits, new_x)
        }
    }

    pub fn to_permutation(&self, target: WreathTarget, s: usize) -> Result<Permutation> {
        match target {
            WreathTarget::Px => {
                let space = PxSpace::new(self.r, s)?;
                Permutation::from_images(
                    (0..space.vertex_count())
                        .map(|v| self.act_px(&space, v))
                        .collect(),
                )
            }
            WreathTarget::Spx => {
                let space = SpxSpace::new(self.r, s)?;
                Permutation::from_images(
                    (0..space.vertex_count())
                        .map(|v| self.act_spx(&space, v))
                        .collect(),
                )
            }
        }
    }
}

/// The wreath group realised as permutations of the chosen graph's dense
/// vertex encoding. Generators are the `r` base involutions `e_i`, the
/// one-step rotation, and the reflection about position 0.
pub fn wreath_group(r: usize, s: usize, target: WreathTarget) -> Result<PermGroup> {
    let degree = match target {
        WreathTarget::Px => PxSpace::new(r, s)?.vertex_count(),
        WreathTarget::Spx => SpxSpace::new(r, s)?.vertex_count(),
    };
    let mut gens = Vec::with_capacity(r + 2);
    for element in wreath_generators(r)? {
        gens.push(element.to_permutation(target, s)?);
    }
    PermGroup::new(degree, gens)
}

/// The generating wreath elements themselves, in the fixed order
/// `e_0, .., e_{r-1}, rotation, reflection`.
pub fn wreath_generators(r: usize) -> Result<Vec<WreathElement>> {
    let mut gens = Vec::with_capacity(r + 2);
    for i in 0..r {
        gens.push(WreathElement::new(r, 1 << i, DihedralElement::identity())?);
    }
    gens.push(WreathElement::new(r, 0, DihedralElement::rotation(1, r))?);
    gens.push(WreathElement::new(r, 0, DihedralElement::reflection(0, r))?);
    Ok(gens)
}

// ---------------------------------------------------------------------------
// Dense vertex encodings
// ---------------------------------------------------------------------------

fn check_params(r: usize, s: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::ParamRange(format!("r={r} must be at least 3")));
    }
    if r > 63 {
        return Err(Error::ParamRange(format!("r={r} exceeds the bitmask bound 63")));
    }
    if s < 1 || s > r - 1 {
        return Err(Error::ParamRange(format!("s={s} not in 1..={}", r - 1)));
    }
    Ok(())
}

/// Vertex coordinates of `PX(2, r, s)`: index = `x * 2^s + bits` where
/// bit `i` of `bits` is `n_i`.
#[derive(Clone, Copy, Debug)]
pub struct PxSpace {
    pub r: usize,
    pub s: usize,
}

impl PxSpace {
    pub fn new(r: usize, s: usize) -> Result<PxSpace> {
        check_params(r, s)?;
        Ok(PxSpace { r, s })
    }

    pub fn vertex_count(&self) -> usize {
        self.r << self.s
    }

    pub fn encode(&self, bits: u64, x: usize) -> usize {
        debug_assert!(bits < (1 << self.s));
        (x % self.r) * (1 << self.s) + bits as usize
    }

    pub fn decode(&self, vertex: usize) -> (u64, usize) {
        let m = 1 << self.s;
        ((vertex % m) as u64, vertex / m)
    }

    pub fn label(&self, vertex: usize) -> String {
        let (bits, x) = self.decode(vertex);
        let word: String = (0..self.s)
            .map(|i| if (bits >> i) & 1 == 1 { '1' } else { '0' })
            .collect();
        format!("{word}@{x}")
    }
}

/// Vertex coordinates of `S(PX(2, r, s))`: index =
/// `(x * 2^s + bits) * 2 + sign` with sign 0 for `+` and 1 for `-`.
#[derive(Clone, Copy, Debug)]
pub struct SpxSpace {
    pub r: usize,
    pub s: usize,
}

impl SpxSpace {
    pub fn new(r: usize, s: usize) -> Result<SpxSpace> {
        check_params(r, s)?;
        Ok(SpxSpace { r, s })
    }

    pub fn vertex_count(&self) -> usize {
        self.r << (self.s + 1)
    }

    pub fn encode(&self, bits: u64, x: usize, sign: u8) -> usize {
        debug_assert!(bits < (1 << self.s) && sign < 2);
        ((x % self.r) * (1 << self.s) + bits as usize) * 2 + sign as usize
    }

    pub fn decode(&self, vertex: usize) -> (u64, usize, u8) {
        let sign = (vertex & 1) as u8;
        let rest = vertex >> 1;
        let m = 1 << self.s;
        ((rest % m) as u64, rest / m, sign)
    }

    pub fn label(&self, vertex: usize) -> String {
        let (bits, x, sign) = self.decode(vertex);
        let word: String = (0..self.s)
            .map(|i| if (bits >> i) & 1 == 1 { '1' } else { '0' })
            .collect();
        format!("{word}@{x}{}", if sign == 0 { '+' } else { '-' })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_presentation_relations() {
        for r in 3..9 {
            let rho = DihedralElement::rotation(1, r);
            let sigma = DihedralElement::reflection(0, r);
            // rho^r = 1
            let mut acc = DihedralElement::identity();
            for _ in 0..r {
                acc = acc.compose(&rho, r);
            }
            assert!(acc.is_identity());
            // sigma^2 = 1
            assert!(sigma.compose(&sigma, r).is_identity());
            // sigma rho sigma = rho^{-1}
            let conj = sigma.compose(&rho, r).compose(&sigma, r);
            assert_eq!(conj, rho.inverse(r));
            // action is a homomorphism
            for t1 in 0..r {
                for t2 in 0..r {
                    for (f1, f2) in [(false, false), (false, true), (true, false), (true, true)] {
                        let a = DihedralElement { rotation: t1, reflected: f1 };
                        let b = DihedralElement { rotation: t2, reflected: f2 };
                        let ab = a.compose(&b, r);
                        for x in 0..r {
                            assert_eq!(ab.act(x, r), b.act(a.act(x, r), r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn wreath_composition_matches_degree_2r_action() {
        // the base-times-top composition law must agree with the faithful
        // action (b, y) -> (b + g_y, y^h) on Z2 x Zr
        let r = 5;
        let elems = [
            WreathElement::new(r, 0b10110, DihedralElement::rotation(2, r)).unwrap(),
            WreathElement::new(r, 0b00001, DihedralElement::reflection(3, r)).unwrap(),
            WreathElement::new(r, 0b11111, DihedralElement::rotation(4, r)).unwrap(),
        ];
        let act = |g: &WreathElement, b: u64, y: usize| -> (u64, usize) {
            (b ^ g.base_bit(y), g.top.act(y, r))
        };
        for g in &elems {
            for h in &elems {
                let gh = g.compose(h);
                for y in 0..r {
                    for b in 0..2u64 {
                        let (b1, y1) = act(g, b, y);
                        let step = act(h, b1, y1);
                        assert_eq!(step, act(&gh, b, y));
                    }
                }
                // inverse round trip
                assert!(g.compose(&g.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn identity_fixes_every_vertex() {
        let space = SpxSpace::new(5, 2).unwrap();
        let id = WreathElement::identity(5);
        for v in 0..space.vertex_count() {
            assert_eq!(id.act_spx(&space, v), v);
        }
    }

    #[test]
    fn rotation_shifts_position_on_px() {
        let space = PxSpace::new(3, 1).unwrap();
        let rho = WreathElement::new(3, 0, DihedralElement::rotation(1, 3)).unwrap();
        for x in 0..3 {
            for bits in 0..2 {
                let v = space.encode(bits, x);
                assert_eq!(rho.act_px(&space, v), space.encode(bits, (x + 1) % 3));
            }
        }
    }

    #[test]
    fn wreath_group_order_on_px() {
        // |Z2^r : Dr| = 2^r * 2r, faithful on both targets
        let w = wreath_group(3, 1, WreathTarget::Px).unwrap();
        assert_eq!(w.order(), 48);
        let w = wreath_group(4, 2, WreathTarget::Spx).unwrap();
        assert_eq!(w.order(), (1u128 << 4) * 8);
    }

    #[test]
    fn action_is_homomorphism_on_spx() {
        let r = 5;
        let s = 2;
        let space = SpxSpace::new(r, s).unwrap();
        let gens = wreath_generators(r).unwrap();
        let a = gens[1].compose(&gens[r]).compose(&gens[3]);
        let b = gens[r + 1].compose(&gens[0]).compose(&gens[r]);
        let ab = a.compose(&b);
        for v in 0..space.vertex_count() {
            assert_eq!(b.act_spx(&space, a.act_spx(&space, v)), ab.act_spx(&space, v));
        }
        // and via permutations
        let pa = a.to_permutation(WreathTarget::Spx, s).unwrap();
        let pb = b.to_permutation(WreathTarget::Spx, s).unwrap();
        let pab = ab.to_permutation(WreathTarget::Spx, s).unwrap();
        assert_eq!(pa.compose(&pb), pab);
    }

    #[test]
    fn encode_decode_round_trip() {
        let px = PxSpace::new(6, 3).unwrap();
        for v in 0..px.vertex_count() {
            let (bits, x) = px.decode(v);
            assert_eq!(px.encode(bits, x), v);
        }
        let spx = SpxSpace::new(6, 3).unwrap();
        for v in 0..spx.vertex_count() {
            let (bits, x, sign) = spx.decode(v);
            assert_eq!(spx.encode(bits, x, sign), v);
        }
    }
}
