//! Bit-plane packed GF(4) vectors for the enumeration kernels.
//!
//! A vector of length ≤ 64·W is stored as two plane words: `lo` holds the
//! low bit of every digit, `hi` the high bit. Addition is two XORs,
//! Hamming weight is popcount of `lo | hi`, and scaling by ω or ω² is a
//! fixed shuffle of the planes. These three operations are the entire inner
//! loop of every kernel.

use crate::gf4::Gf4;
#[cfg(test)]
use crate::linalg::Gf4Vector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Packed<const W: usize> {
    lo: [u64; W],
    hi: [u64; W],
}

impl<const W: usize> Packed<W> {
    pub fn zero() -> Self {
        Packed {
            lo: [0; W],
            hi: [0; W],
        }
    }

    pub fn from_coords(coords: &[Gf4]) -> Self {
        assert!(coords.len() <= 64 * W, "vector does not fit {W} words");
        let mut p = Packed::zero();
        for (i, c) in coords.iter().enumerate() {
            let d = c.digit() as u64;
            p.lo[i / 64] |= (d & 1) << (i % 64);
            p.hi[i / 64] |= (d >> 1) << (i % 64);
        }
        p
    }

    #[cfg(test)]
    pub fn to_vector(&self, len: usize) -> Gf4Vector {
        let coords = (0..len)
            .map(|i| {
                let lo = (self.lo[i / 64] >> (i % 64)) & 1;
                let hi = (self.hi[i / 64] >> (i % 64)) & 1;
                Gf4::new((lo | (hi << 1)) as u8).expect("2-bit digit")
            })
            .collect();
        Gf4Vector::new(coords)
    }

    #[inline(always)]
    pub fn xor_assign(&mut self, rhs: &Self) {
        for w in 0..W {
            self.lo[w] ^= rhs.lo[w];
            self.hi[w] ^= rhs.hi[w];
        }
    }

    #[inline(always)]
    pub fn xored(&self, rhs: &Self) -> Self {
        let mut out = *self;
        out.xor_assign(rhs);
        out
    }

    #[inline(always)]
    pub fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..W {
            w += (self.lo[i] | self.hi[i]).count_ones();
        }
        w
    }

    /// Scalar multiple. ω maps (lo, hi) → (hi, lo^hi); ω² is that twice.
    pub fn scaled(&self, s: Gf4) -> Self {
        match s.digit() {
            0 => Packed::zero(),
            1 => *self,
            2 => {
                let mut out = Packed::zero();
                for w in 0..W {
                    out.lo[w] = self.hi[w];
                    out.hi[w] = self.lo[w] ^ self.hi[w];
                }
                out
            }
            _ => {
                let mut out = Packed::zero();
                for w in 0..W {
                    out.lo[w] = self.lo[w] ^ self.hi[w];
                    out.hi[w] = self.lo[w];
                }
                out
            }
        }
    }
}

/// Words needed for a given vector length, rounded to a kernel width.
pub(crate) fn kernel_words(len: usize) -> usize {
    match len.div_ceil(64) {
        0 | 1 => 1,
        2 => 2,
        3 | 4 => 4,
        w if w <= 8 => 8,
        w => panic!("vector length {len} needs {w} words, beyond the supported 512"),
    }
}

/// Packs the rows of a basis matrix.
pub(crate) fn pack_rows<const W: usize>(basis: &crate::linalg::Gf4Matrix) -> Vec<Packed<W>> {
    (0..basis.nrows())
        .map(|r| Packed::from_coords(basis.row(r)))
        .collect()
}
