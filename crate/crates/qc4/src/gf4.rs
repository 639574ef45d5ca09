//! Exact arithmetic in the four-element field.
//!
//! GF(4) = {0, 1, ω, ω²} with ω² = 1 + ω and ω³ = 1. Elements are stored as
//! 2-bit values where the digits 2 and 3 stand for ω and ω². With this
//! encoding addition is plain XOR, which is what the packed distance kernels
//! rely on. Conjugation is the squaring map x̄ = x².

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::distributions::{Distribution, Standard};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// An element of GF(4), encoded as one of the digits {0, 1, 2, 3}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1], // ω·ω = ω², ω·ω² = 1
    [0, 3, 1, 2],
];

const CONJ: [u8; 4] = [0, 1, 3, 2];
const INV: [u8; 4] = [0, 1, 3, 2]; // INV[0] is never read

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA_SQ: Gf4 = Gf4(3);

    /// All four field elements in digit order.
    pub const ALL: [Gf4; 4] = [Gf4(0), Gf4(1), Gf4(2), Gf4(3)];

    /// The three nonzero elements.
    pub const NONZERO: [Gf4; 3] = [Gf4(1), Gf4(2), Gf4(3)];

    /// Builds an element from its digit; returns `None` for digits ≥ 4.
    pub const fn new(digit: u8) -> Option<Gf4> {
        if digit < 4 {
            Some(Gf4(digit))
        } else {
            None
        }
    }

    /// The digit encoding of this element.
    pub const fn digit(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Conjugation x̄ = x², an involution fixing exactly {0, 1}.
    pub const fn conj(self) -> Gf4 {
        Gf4(CONJ[self.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub const fn inv(self) -> Option<Gf4> {
        if self.0 == 0 {
            None
        } else {
            Some(Gf4(INV[self.0 as usize]))
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    fn sub(self, rhs: Gf4) -> Gf4 {
        // characteristic 2
        self + rhs
    }
}

impl SubAssign for Gf4 {
    #[inline]
    fn sub_assign(&mut self, rhs: Gf4) {
        *self += rhs;
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    #[inline]
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Distribution<Gf4> for Standard {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf4 {
        Gf4(rng.gen_range(0..4u8))
    }
}
