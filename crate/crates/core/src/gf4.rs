//! Scalar arithmetic over GF(4) = {0, 1, ω, ω²} with ω² = 1 + ω.
//!
//! An element is stored as the bit pair `(a, b)` meaning `a + b·ω`, packed
//! into the two low bits of a byte (`a` in bit 0, `b` in bit 1). Addition is
//! then a plain XOR, which is the same trick [`crate::word::BitplaneWord`]
//! uses across a whole vector.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::Error;

/// An element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0b00);
    pub const ONE: Gf4 = Gf4(0b01);
    pub const OMEGA: Gf4 = Gf4(0b10);
    pub const OMEGA2: Gf4 = Gf4(0b11);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds `a + b·ω` from its two coordinate bits.
    #[inline]
    pub const fn from_bits(a: bool, b: bool) -> Gf4 {
        Gf4((a as u8) | ((b as u8) << 1))
    }

    /// Coefficient of 1.
    #[inline]
    pub const fn a(self) -> bool {
        self.0 & 1 != 0
    }

    /// Coefficient of ω.
    #[inline]
    pub const fn b(self) -> bool {
        self.0 & 2 != 0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }

    #[inline]
    pub const fn mul(self, rhs: Gf4) -> Gf4 {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², and ω² = 1 + ω.
        let (a, b) = (self.0 & 1, self.0 >> 1);
        let (c, d) = (rhs.0 & 1, rhs.0 >> 1);
        let bd = b & d;
        let lo = (a & c) ^ bd;
        let hi = (a & d) ^ (b & c) ^ bd;
        Gf4(lo | (hi << 1))
    }

    /// Conjugation `x ↦ x²` (the Frobenius map). Swaps ω and ω².
    #[inline]
    pub const fn conj(self) -> Gf4 {
        // a + bω  ↦  a + bω² = (a + b) + bω
        let a = self.0 & 1;
        let b = self.0 >> 1;
        Gf4((a ^ b) | (b << 1))
    }

    /// Trace `x + x̄`, which always lands in GF(2). Equal to the ω bit.
    #[inline]
    pub const fn trace(self) -> u8 {
        self.0 >> 1
    }

    /// The text symbol used for I/O: `0`, `1`, `w` (ω) or `W` (ω²).
    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4::add(self, rhs)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    fn add_assign(&mut self, rhs: Gf4) {
        *self = Gf4::add(*self, rhs);
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4::mul(self, rhs)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.0 {
            0 => "0",
            1 => "1",
            2 => "ω",
            _ => "ω²",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A length-n vector over GF(4).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SymbolVector(Vec<Gf4>);

impl SymbolVector {
    pub fn new(symbols: Vec<Gf4>) -> Self {
        SymbolVector(symbols)
    }

    pub fn zeros(n: usize) -> Self {
        SymbolVector(vec![Gf4::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Gf4] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Gf4 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, x: Gf4) {
        self.0[i] = x;
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn try_add(&self, other: &SymbolVector) -> Result<SymbolVector, Error> {
        check_len(self.len(), other.len())?;
        Ok(SymbolVector(
            self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect(),
        ))
    }
}

impl From<Vec<Gf4>> for SymbolVector {
    fn from(v: Vec<Gf4>) -> Self {
        SymbolVector(v)
    }
}

impl fmt::Display for SymbolVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{}", x.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for SymbolVector {
    type Err = Error;

    /// Parses the `0`/`1`/`w`/`W` alphabet; no other spellings are accepted.
    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| Gf4::from_symbol(ch).ok_or(Error::InvalidSymbol { pos, ch }))
            .collect::<Result<Vec<_>, _>>()
            .map(SymbolVector)
    }
}

fn check_len(left: usize, right: usize) -> Result<(), Error> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}

/// Hermitian trace inner product `Σ Tr(u_i · v̄_i)`, returned as a bit.
pub fn herm_trace_ip(u: &SymbolVector, v: &SymbolVector) -> Result<u8, Error> {
    check_len(u.len(), v.len())?;
    Ok(u.0
        .iter()
        .zip(&v.0)
        .fold(0, |acc, (&x, &y)| acc ^ (x * y.conj()).trace()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: Gf4 = Gf4::OMEGA;
    const W2: Gf4 = Gf4::OMEGA2;

    #[test]
    fn add_examples() {
        assert_eq!(W + W, Gf4::ZERO);
        assert_eq!(Gf4::ONE + W, W2);
        assert_eq!(Gf4::ZERO + W2, W2);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(W * W, W2);
        assert_eq!(W * W2, Gf4::ONE);
        assert_eq!(Gf4::ZERO * W, Gf4::ZERO);
    }

    #[test]
    fn conj_and_trace_examples() {
        assert_eq!(W.conj(), W2);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        assert_eq!(W2.conj(), W);
        assert_eq!(Gf4::ZERO.trace(), 0);
        assert_eq!(W.trace(), 1);
        assert_eq!(Gf4::ONE.trace(), 0);
    }

    // Independent multiplication table written from ω² = 1 + ω, ω³ = 1.
    fn mul_by_log(x: Gf4, y: Gf4) -> Gf4 {
        let log = |g: Gf4| match g {
            Gf4::ONE => 0,
            Gf4::OMEGA => 1,
            _ => 2,
        };
        if x.is_zero() || y.is_zero() {
            return Gf4::ZERO;
        }
        [Gf4::ONE, W, W2][(log(x) + log(y)) % 3]
    }

    #[test]
    fn field_axioms_exhaustive() {
        for x in Gf4::ALL {
            assert_eq!(x + Gf4::ZERO, x);
            assert_eq!(x + x, Gf4::ZERO);
            assert_eq!(x * Gf4::ONE, x);
            assert_eq!(x.conj().conj(), x);
            assert_eq!(x.conj(), x * x);
            assert!(x.trace() <= 1);
            // Tr(x) = x + x² must land in the prime field {0, 1}.
            let t = x + x * x;
            assert_eq!(t, if x.trace() == 1 { Gf4::ONE } else { Gf4::ZERO });
            for y in Gf4::ALL {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                assert_eq!(x * y, mul_by_log(x, y));
                assert_eq!((x + y).trace(), x.trace() ^ y.trace());
                for z in Gf4::ALL {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
        assert_eq!(W * W * W, Gf4::ONE);
    }

    #[test]
    fn herm_ip_examples() {
        let v = |s: &str| s.parse::<SymbolVector>().unwrap();
        assert_eq!(herm_trace_ip(&v("w"), &v("1")).unwrap(), 1);
        assert_eq!(herm_trace_ip(&v("1w"), &v("w1")).unwrap(), 0);
        assert_eq!(herm_trace_ip(&v("1wW0w"), &v("1wW0w")).unwrap(), 0);
        assert!(matches!(
            herm_trace_ip(&v("1w"), &v("1")),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn symbol_text_roundtrip() {
        let s: SymbolVector = "01wW".parse().unwrap();
        assert_eq!(s.as_slice(), &[Gf4::ZERO, Gf4::ONE, W, W2]);
        assert_eq!(s.to_string(), "01wW");
        assert!(matches!(
            "01x".parse::<SymbolVector>(),
            Err(Error::InvalidSymbol { pos: 2, ch: 'x' })
        ));
    }
}
