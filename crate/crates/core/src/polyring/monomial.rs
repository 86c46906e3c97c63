use std::fmt;

/// Number of exponent slots in a [`Monomial`].
pub const SLOTS: usize = 32;
/// Slot reserved for the homogenizing variable `t`.
pub const T_SLOT: usize = SLOTS - 1;

/// A variable of the ring: the homogenizing variable `t` or a coordinate
/// `z_ij` strictly above the main antidiagonal (`i + j <= n`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Variable {
    T,
    Z(usize, usize),
}

/// Slot of `z_ij` in the antidiagonal reading order
/// `z11, z12, z21, z13, z22, z31, ...`.
pub fn z_slot(i: usize, j: usize) -> usize {
    let s = i + j;
    // antidiagonals 2..s-1 hold 1 + 2 + ... + (s-2) variables
    (s - 2) * (s - 1) / 2 + (i - 1)
}

/// Inverse of [`z_slot`].
pub fn slot_z(slot: usize) -> (usize, usize) {
    let mut s = 2;
    let mut base = 0;
    while base + (s - 1) <= slot {
        base += s - 1;
        s += 1;
    }
    let i = slot - base + 1;
    (i, s - i)
}

/// A monomial stored as a dense exponent vector.
///
/// Slots `0..m` hold the `z` variables in antidiagonal reading order and
/// [`T_SLOT`] holds `t`. The total degree and a support bitmask are cached.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; SLOTS],
    degree: u16,
    mask: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; SLOTS],
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(slot: usize) -> Self {
        Self::var_pow(slot, 1)
    }

    pub fn var_pow(slot: usize, e: u8) -> Self {
        let mut m = Self::one();
        m.set(slot, e);
        m
    }

    pub fn t() -> Self {
        Self::var(T_SLOT)
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= SLOTS, "too many exponents");
        let mut m = Self::one();
        for (slot, &e) in exps.iter().enumerate() {
            m.set(slot, e);
        }
        m
    }

    fn set(&mut self, slot: usize, e: u8) {
        let old = self.exps[slot];
        self.exps[slot] = e;
        self.degree = self.degree - old as u16 + e as u16;
        if e == 0 {
            self.mask &= !(1 << slot);
        } else {
            self.mask |= 1 << slot;
        }
    }

    pub fn exponent(&self, slot: usize) -> u8 {
        self.exps[slot]
    }

    pub fn exponents(&self) -> &[u8; SLOTS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn t_degree(&self) -> u32 {
        self.exps[T_SLOT] as u32
    }

    /// Degree in the `z` variables alone.
    pub fn z_degree(&self) -> u32 {
        self.degree() - self.t_degree()
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Nonzero `(slot, exponent)` pairs in slot order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        let mask = self.mask;
        (0..SLOTS)
            .filter(move |s| mask >> s & 1 == 1)
            .map(move |s| (s, self.exps[s]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = [0u8; SLOTS];
        for (k, e) in exps.iter_mut().enumerate() {
            *e = self.exps[k]
                .checked_add(other.exps[k])
                .expect("exponent overflow");
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = [0u8; SLOTS];
        let mut mask = 0;
        for (k, e) in exps.iter_mut().enumerate() {
            *e = other.exps[k] - self.exps[k];
            if *e != 0 {
                mask |= 1 << k;
            }
        }
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
            mask,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = [0u8; SLOTS];
        let mut degree = 0u16;
        for (k, e) in exps.iter_mut().enumerate() {
            *e = self.exps[k].max(other.exps[k]);
            degree += *e as u16;
        }
        Monomial {
            exps,
            degree,
            mask: self.mask | other.mask,
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut exps = [0u8; SLOTS];
        let mut degree = 0u16;
        for (k, e) in exps.iter_mut().enumerate() {
            *e = self.exps[k].min(other.exps[k]);
            degree += *e as u16;
        }
        Monomial {
            exps,
            degree,
            mask: self.mask & other.mask,
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.mask & other.mask == 0
    }

    /// `self / gcd(self, other)`, the generator of the colon `<self> : other`.
    pub fn colon(&self, other: &Self) -> Self {
        let mut m = *self;
        for slot in 0..SLOTS {
            let e = self.exps[slot].saturating_sub(other.exps[slot]);
            if e != self.exps[slot] {
                m.set(slot, e);
            }
        }
        m
    }

    /// The same monomial with `t` set to 1.
    pub fn without_t(&self) -> Self {
        let mut m = *self;
        m.set(T_SLOT, 0);
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .support()
            .map(|(s, e)| {
                let name = if s == T_SLOT {
                    "t".to_string()
                } else {
                    format!("v{s}")
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_numbering_follows_antidiagonals() {
        let order = [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1), (1, 4), (2, 3), (3, 2), (4, 1)];
        for (slot, &(i, j)) in order.iter().enumerate() {
            assert_eq!(z_slot(i, j), slot);
            assert_eq!(slot_z(slot), (i, j));
        }
        for slot in 0..28 {
            let (i, j) = slot_z(slot);
            assert_eq!(z_slot(i, j), slot);
        }
    }

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[1, 2, 0, 1]);
        let b = Monomial::from_exponents(&[0, 1, 3]);
        let ab = a.mul(&b);
        assert_eq!(ab, Monomial::from_exponents(&[1, 3, 3, 1]));
        assert_eq!(ab.degree(), 8);
        assert!(a.divides(&ab) && b.divides(&ab));
        assert_eq!(a.divide_into(&ab), Some(b));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[1, 2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::from_exponents(&[0, 1]));
        assert_eq!(a.colon(&b), Monomial::from_exponents(&[1, 1, 0, 1]));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(0).is_coprime(&Monomial::t()));
        let at = a.mul(&Monomial::var_pow(T_SLOT, 2));
        assert_eq!(at.t_degree(), 2);
        assert_eq!(at.z_degree(), 4);
        assert_eq!(at.without_t(), a);
    }
}
