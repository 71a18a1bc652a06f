//! Bit-plane packed GF(4) vectors.
//!
//! Coordinate `i` of a [`BitplaneWord`] is `a_i + b_i·ω`, with `a_i` stored in
//! bit `i` of `plane_a` and `b_i` in bit `i` of `plane_b`. Addition is an XOR
//! per plane and Hamming weight is `popcount(plane_a | plane_b)`.

use crate::gf4::{Gf4, SymbolVector};
use crate::Error;

/// Largest vector length a single-word plane can hold.
pub const MAX_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BitplaneWord {
    n: u8,
    a: u64,
    b: u64,
}

#[inline]
pub(crate) const fn len_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl BitplaneWord {
    pub fn zero(n: usize) -> Result<Self, Error> {
        Self::from_planes(n, 0, 0)
    }

    /// Builds a word from raw planes. Bits at or above `n` must be clear.
    pub fn from_planes(n: usize, a: u64, b: u64) -> Result<Self, Error> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::Capacity { n, max: MAX_LEN });
        }
        let mask = len_mask(n);
        if (a | b) & !mask != 0 {
            return Err(Error::StrayBits { n });
        }
        Ok(BitplaneWord { n: n as u8, a, b })
    }

    pub fn encode(s: &SymbolVector) -> Result<Self, Error> {
        let n = s.len();
        if n == 0 || n > MAX_LEN {
            return Err(Error::Capacity { n, max: MAX_LEN });
        }
        let (mut a, mut b) = (0u64, 0u64);
        for (i, x) in s.as_slice().iter().enumerate() {
            a |= (x.a() as u64) << i;
            b |= (x.b() as u64) << i;
        }
        Ok(BitplaneWord { n: n as u8, a, b })
    }

    pub fn decode(&self) -> SymbolVector {
        (0..self.len()).map(|i| self.get(i)).collect::<Vec<_>>().into()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn plane_a(&self) -> u64 {
        self.a
    }

    #[inline]
    pub fn plane_b(&self) -> u64 {
        self.b
    }

    #[inline]
    pub fn get(&self, i: usize) -> Gf4 {
        assert!(i < self.len(), "coordinate {i} out of range for length {}", self.n);
        Gf4::from_bits(self.a >> i & 1 != 0, self.b >> i & 1 != 0)
    }

    pub fn set(&mut self, i: usize, x: Gf4) {
        assert!(i < self.len(), "coordinate {i} out of range for length {}", self.n);
        let bit = 1u64 << i;
        self.a = (self.a & !bit) | ((x.a() as u64) << i);
        self.b = (self.b & !bit) | ((x.b() as u64) << i);
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a | self.b == 0
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        (self.a | self.b).count_ones()
    }

    pub fn try_add(&self, other: &BitplaneWord) -> Result<BitplaneWord, Error> {
        self.check_len(other)?;
        Ok(BitplaneWord {
            n: self.n,
            a: self.a ^ other.a,
            b: self.b ^ other.b,
        })
    }

    /// In-place `self += other`. Lengths are only checked in debug builds;
    /// this is the hot-loop entry point.
    #[inline]
    pub fn add_assign(&mut self, other: &BitplaneWord) {
        debug_assert_eq!(self.n, other.n);
        self.a ^= other.a;
        self.b ^= other.b;
    }

    /// Symplectic form `popcount(a_u & b_v) + popcount(b_u & a_v) mod 2`,
    /// which equals the Hermitian trace inner product of the decoded vectors.
    pub fn symplectic_ip(&self, other: &BitplaneWord) -> Result<u8, Error> {
        self.check_len(other)?;
        Ok((((self.a & other.b).count_ones() + (self.b & other.a).count_ones()) & 1) as u8)
    }

    /// Cyclic rotation to the right by `k` places: coordinate `j` of the
    /// result is coordinate `j - k (mod n)` of `self`.
    pub fn rotate_right(&self, k: usize) -> BitplaneWord {
        let n = self.len();
        let k = k % n;
        let rot = |p: u64| {
            if k == 0 {
                p
            } else {
                ((p << k) | (p >> (n - k))) & len_mask(n)
            }
        };
        BitplaneWord {
            n: self.n,
            a: rot(self.a),
            b: rot(self.b),
        }
    }

    fn check_len(&self, other: &BitplaneWord) -> Result<(), Error> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            })
        }
    }
}
