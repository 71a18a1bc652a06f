//! Self-duality and the MacWilliams identity.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use super::enumerator::WeightEnumerator;
use crate::circulant::GeneratorMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfDualReport {
    /// Every pair of rows (including a row with itself) is orthogonal.
    pub self_orthogonal: bool,
    /// The rows span `2^n` codewords, `n` being the code length.
    pub independent_rows: bool,
    pub self_dual: bool,
    /// First row pair `(i, j)`, `i ≤ j`, with a nonzero inner product.
    pub first_violation: Option<(usize, usize)>,
    /// GF(2) rank of the rows viewed as `2n`-bit vectors.
    pub rank: usize,
}

/// A self-orthogonal code with `2^n` codewords equals its dual by counting.
pub fn check_self_dual(matrix: &GeneratorMatrix) -> SelfDualReport {
    let rows = matrix.rows();
    let mut first_violation = None;
    'outer: for i in 0..rows.len() {
        for j in i..rows.len() {
            if rows[i].symplectic_ip(&rows[j]).expect("rows share a length") != 0 {
                first_violation = Some((i, j));
                break 'outer;
            }
        }
    }
    let rank = gf2_rank(rows.iter().map(|r| r.plane_a() as u128 | (r.plane_b() as u128) << 64).collect());
    let self_orthogonal = first_violation.is_none();
    let independent_rows = rank == matrix.len();
    SelfDualReport {
        self_orthogonal,
        independent_rows,
        self_dual: self_orthogonal && independent_rows,
        first_violation,
        rank,
    }
}

fn gf2_rank(mut vectors: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let pivot = 1u128 << bit;
        let Some(p) = (rank..vectors.len()).find(|&r| vectors[r] & pivot != 0) else {
            continue;
        };
        vectors.swap(rank, p);
        let pv = vectors[rank];
        for (r, v) in vectors.iter_mut().enumerate() {
            if r != rank && *v & pivot != 0 {
                *v ^= pv;
            }
        }
        rank += 1;
    }
    rank
}

/// Why an enumerator cannot belong to a self-dual `(n, 2^n)` code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MacWilliamsViolation {
    /// `A_0` must be 1.
    ZeroWeight { actual: u64 },
    /// `Σ A_i` must be `2^n`.
    Total { expected: String, actual: String },
    /// `2^n · A_j` differs from coefficient `j` of `W(x + 3y, x − y)`.
    Coefficient { index: usize, actual: u64, transformed: String, scale: String },
}

impl fmt::Display for MacWilliamsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MacWilliamsViolation::ZeroWeight { actual } => write!(f, "A_0 = {actual}, expected 1"),
            MacWilliamsViolation::Total { expected, actual } => {
                write!(f, "sum of A_i = {actual}, expected {expected}")
            }
            MacWilliamsViolation::Coefficient { index, actual, transformed, scale } => write!(
                f,
                "A_{index} = {actual} but the transformed enumerator gives {transformed}/{scale}"
            ),
        }
    }
}

/// Checks `W(x, y) = 2^{-n} W(x + 3y, x − y)` coefficientwise in exact
/// integers, after `A_0 = 1` and `Σ A_i = 2^n`.
pub fn macwilliams_check(w: &WeightEnumerator) -> Result<(), MacWilliamsViolation> {
    let n = w.len();
    let counts = w.counts();
    if counts[0] != 1 {
        return Err(MacWilliamsViolation::ZeroWeight { actual: counts[0] });
    }
    let scale = BigUint::from(1u8) << n;
    let total: BigUint = counts.iter().map(|&a| BigUint::from(a)).sum();
    if total != scale {
        return Err(MacWilliamsViolation::Total { expected: scale.to_string(), actual: total.to_string() });
    }
    let scale = BigInt::from(scale);
    let transformed = macwilliams_transform(counts);
    for (j, t) in transformed.iter().enumerate() {
        if *t != BigInt::from(counts[j]) * &scale {
            return Err(MacWilliamsViolation::Coefficient {
                index: j,
                actual: counts[j],
                transformed: t.to_string(),
                scale: scale.to_string(),
            });
        }
    }
    Ok(())
}

/// Coefficients of `x^{n-j} y^j` in `Σ_i A_i (x + 3y)^{n-i} (x − y)^i`.
pub fn macwilliams_transform(counts: &[u64]) -> Vec<BigInt> {
    let n = counts.len() - 1;
    let mut out = vec![BigInt::from(0); n + 1];
    for (i, &a) in counts.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let poly = poly_mul(&binomial_poly(n - i, 3), &binomial_poly(i, -1));
        for (j, c) in poly.into_iter().enumerate() {
            out[j] += c * a;
        }
    }
    out
}

/// Coefficients of `(1 + t·y)^m` in `y`.
fn binomial_poly(m: usize, t: i64) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1)];
    for _ in 0..m {
        let mut next = vec![BigInt::from(0); p.len() + 1];
        for (j, c) in p.iter().enumerate() {
            next[j] += c;
            next[j + 1] += c * t;
        }
        p = next;
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::GeneratorVector;
    use crate::gf4::Gf4;

    #[test]
    fn circulant_codes_are_self_dual() {
        for s in ["w", "w11", "w10100100101", "w111000111", "w01100001101111111110110000110"] {
            let r = check_self_dual(&GeneratorVector::parse(s).unwrap().expand());
            assert!(r.self_dual, "{s}: {r:?}");
            assert_eq!(r.rank, s.len());
        }
    }

    #[test]
    fn plain_adjacency_rows_are_dependent() {
        let m = GeneratorMatrix::from_symbol_rows(&[
            "011".parse().unwrap(),
            "101".parse().unwrap(),
            "110".parse().unwrap(),
        ])
        .unwrap();
        let r = check_self_dual(&m);
        assert!(r.self_orthogonal);
        assert!(!r.independent_rows);
        assert!(!r.self_dual);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn asymmetric_flip_breaks_orthogonality() {
        let mut m = GeneratorVector::parse("w10100100101").unwrap().expand().into_matrix();
        // Entry (0, 2) is 0; flipping it alone makes Γ asymmetric.
        assert_eq!(m.get(0, 2), Gf4::ZERO);
        m.set(0, 2, Gf4::ONE);
        let r = check_self_dual(&m);
        assert!(!r.self_orthogonal);
        assert_eq!(r.first_violation, Some((0, 2)));
    }

    #[test]
    fn triangle_enumerator_passes() {
        let w = WeightEnumerator::from_counts(3, vec![1, 0, 3, 4]).unwrap();
        assert_eq!(macwilliams_check(&w), Ok(()));
        let t = macwilliams_transform(w.counts());
        assert_eq!(t, [8, 0, 24, 32].map(BigInt::from).to_vec());
    }

    #[test]
    fn violations_are_named() {
        let w = WeightEnumerator::from_counts(3, vec![1, 1, 2, 4]).unwrap();
        assert!(matches!(macwilliams_check(&w), Err(MacWilliamsViolation::Coefficient { index: 1, .. })));
        let w = WeightEnumerator::from_counts(3, vec![1, 0, 3, 3]).unwrap();
        assert!(matches!(macwilliams_check(&w), Err(MacWilliamsViolation::Total { .. })));
        let w = WeightEnumerator::from_counts(3, vec![2, 0, 3, 3]).unwrap();
        assert!(matches!(macwilliams_check(&w), Err(MacWilliamsViolation::ZeroWeight { actual: 2 })));
    }
}
