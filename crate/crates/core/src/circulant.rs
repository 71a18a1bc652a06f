//! Circulant generator vectors and the graph codes `Γ + ωI` they expand to.
//!
//! Vertices are 0-based throughout. A generator vector of length `n` is
//! `(ω, a_1, …, a_{n-1})` where `a_j = 1` iff every vertex `i` is adjacent to
//! `i ± j (mod n)`; the ± forces `a_j = a_{n-j}`.

use std::fmt;
use std::fmt::Write as _;
use std::ops::Deref;
use std::str::FromStr;

use crate::gf4::{Gf4, SymbolVector};
use crate::word::{len_mask, BitplaneWord, MAX_LEN};
use crate::Error;

/// First offending offset pair `(j, n - j)` of an asymmetric adjacency row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryViolation {
    pub offset: usize,
    pub mirror: usize,
}

impl fmt::Display for SymmetryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "adjacency entries at offsets {} and {} differ",
            self.offset, self.mirror
        )
    }
}

/// Checks `a_j = a_{n-j}` for every `1 ≤ j ≤ n-1`, where bit `j` of
/// `adjacency` holds `a_j`. Bit 0 is ignored.
pub fn validate_circulant_symmetry(n: usize, adjacency: u64) -> Result<(), SymmetryViolation> {
    for j in 1..=n / 2 {
        let mirror = n - j;
        if (adjacency >> j & 1) != (adjacency >> mirror & 1) {
            return Err(SymmetryViolation { offset: j, mirror });
        }
    }
    Ok(())
}

/// The first row `(ω, a_1, …, a_{n-1})` of a circulant graph code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorVector {
    n: usize,
    adjacency: u64,
}

impl GeneratorVector {
    /// Builds a vector from adjacency bits (bit `j` = `a_j`; bit 0 must be clear).
    pub fn from_adjacency(n: usize, adjacency: u64) -> Result<Self, Error> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::Capacity { n, max: MAX_LEN });
        }
        if adjacency & 1 != 0 {
            return Err(Error::SelfLoop);
        }
        if adjacency & !len_mask(n) != 0 {
            return Err(Error::StrayBits { n });
        }
        validate_circulant_symmetry(n, adjacency).map_err(Error::Asymmetric)?;
        Ok(GeneratorVector { n, adjacency })
    }

    /// Builds a vector from 0-based neighbour offsets in `1..n`.
    pub fn from_offsets(n: usize, offsets: impl IntoIterator<Item = usize>) -> Result<Self, Error> {
        let mut adjacency = 0u64;
        for j in offsets {
            if j == 0 || j >= n {
                return Err(Error::OffsetOutOfRange { offset: j, n });
            }
            adjacency |= 1 << j;
        }
        Self::from_adjacency(n, adjacency)
    }

    /// Parses the text form. A leading `w` is taken as is; a leading `0` is
    /// read as a plain adjacency row and promoted to `ω`. Every later symbol
    /// must be `0` or `1`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let chars: Vec<char> = text.chars().collect();
        if chars.is_empty() {
            return Err(Error::Empty);
        }
        let n = chars.len();
        if n > MAX_LEN {
            return Err(Error::Capacity { n, max: MAX_LEN });
        }
        match chars[0] {
            'w' | '0' => {}
            '1' => return Err(Error::SelfLoop),
            'W' => return Err(Error::BadLeadingSymbol { ch: 'W' }),
            ch => return Err(Error::InvalidSymbol { pos: 0, ch }),
        }
        let mut adjacency = 0u64;
        for (pos, &ch) in chars.iter().enumerate().skip(1) {
            match ch {
                '0' => {}
                '1' => adjacency |= 1 << pos,
                'w' | 'W' => return Err(Error::OmegaInAdjacency { pos, ch }),
                _ => return Err(Error::InvalidSymbol { pos, ch }),
            }
        }
        Self::from_adjacency(n, adjacency)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Adjacency bits; bit `j` is `a_j`, bit 0 is always clear.
    pub fn adjacency(&self) -> u64 {
        self.adjacency
    }

    /// Vertex degree of the circulant graph.
    pub fn degree(&self) -> u32 {
        self.adjacency.count_ones()
    }

    /// Neighbour offsets of vertex 0, ascending.
    pub fn offsets(&self) -> Vec<usize> {
        (1..self.n).filter(|&j| self.adjacency >> j & 1 != 0).collect()
    }

    pub fn to_word(&self) -> BitplaneWord {
        BitplaneWord::from_planes(self.n, self.adjacency, 1).expect("validated at construction")
    }

    pub fn to_symbols(&self) -> SymbolVector {
        self.to_word().decode()
    }

    /// Expands to `Γ + ωI`: row `i` is the vector cyclically shifted right
    /// by `i`, so entry `(i, j)` is coordinate `j - i (mod n)`.
    pub fn expand(&self) -> CirculantCode {
        let row0 = self.to_word();
        let rows = (0..self.n).map(|i| row0.rotate_right(i)).collect();
        CirculantCode {
            vector: *self,
            matrix: GeneratorMatrix { n: self.n, rows },
        }
    }

    /// Graphviz DOT text listing every edge `{i, j}` once.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph circulant_{} {{\n", self.n);
        for i in 0..self.n {
            let _ = writeln!(out, "  {i};");
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.adjacency >> (j - i) & 1 != 0 {
                    let _ = writeln!(out, "  {i} -- {j};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for GeneratorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('w')?;
        for j in 1..self.n {
            f.write_char(if self.adjacency >> j & 1 != 0 { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        GeneratorVector::parse(s)
    }
}

/// Which of the two neighbourhood sizes around a target distance `L` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateMode {
    /// `|E_1| = L + 1`
    Plus,
    /// `|E_1| = L - 1`
    Minus,
}

impl CandidateMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CandidateMode::Plus => "plus",
            CandidateMode::Minus => "minus",
        }
    }
}

impl FromStr for CandidateMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "plus" | "+" => Ok(CandidateMode::Plus),
            "minus" | "-" => Ok(CandidateMode::Minus),
            other => Err(Error::BadMode(other.to_string())),
        }
    }
}

/// Candidate vector for even `n` and even target distance `target`.
///
/// The neighbour set of vertex 0 (0-based offsets) is
/// `{1,2} ∪ {4,6,…,top} ∪ {n/2} ∪ {n-top,…,n-6,n-4} ∪ {n-2,n-1}` with
/// `top = target - 2` in plus mode and `target - 4` in minus mode; an
/// ascending run whose upper end is below 4 is empty.
pub fn candidate_vector(n: usize, target: usize, mode: CandidateMode) -> Result<GeneratorVector, Error> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength { n });
    }
    if n > MAX_LEN {
        return Err(Error::Capacity { n, max: MAX_LEN });
    }
    let min_target = match mode {
        CandidateMode::Plus => 4,
        CandidateMode::Minus => 6,
    };
    if target < min_target || !target.is_multiple_of(2) {
        return Err(Error::BadTarget { target, mode: mode.as_str() });
    }
    let top = match mode {
        CandidateMode::Plus => target - 2,
        CandidateMode::Minus => target - 4,
    };
    let run: Vec<usize> = (4..=top).step_by(2).collect();

    let mut offsets = vec![1, 2];
    offsets.extend(run.iter().copied());
    offsets.push(n / 2);
    offsets.extend(run.iter().rev().map(|&j| n.wrapping_sub(j)));
    offsets.extend([n.wrapping_sub(2), n.wrapping_sub(1)]);

    let mut seen = 0u64;
    for &j in &offsets {
        if j == 0 || j >= n || seen >> j & 1 != 0 {
            return Err(Error::CandidateCollision { n, target });
        }
        seen |= 1 << j;
    }
    GeneratorVector::from_adjacency(n, seen)
}

const DENSE_PREFIX: [u8; 10] = [0, 1, 1, 0, 0, 0, 0, 1, 1, 0];

/// The dense family `(ω,0,1,1,0,0,0,0,1,1,0, 1…1, 0,1,1,0,0,0,0,1,1,0)` with
/// `n - 21` ones in the middle block.
pub fn dense_family_vector(n: usize) -> Result<GeneratorVector, Error> {
    if n < 21 {
        return Err(Error::DenseTooShort { n });
    }
    if n > MAX_LEN {
        return Err(Error::Capacity { n, max: MAX_LEN });
    }
    let mut bits: Vec<u8> = Vec::with_capacity(n - 1);
    bits.extend_from_slice(&DENSE_PREFIX);
    bits.extend(std::iter::repeat_n(1, n - 21));
    bits.extend_from_slice(&DENSE_PREFIX);
    let adjacency = bits
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &b)| acc | (b as u64) << (i + 1));
    GeneratorVector::from_adjacency(n, adjacency)
}

/// `n` generator rows of length `n`, not necessarily circulant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<BitplaneWord>,
}

impl GeneratorMatrix {
    /// Any number of rows, all of the same length.
    pub fn from_rows(rows: Vec<BitplaneWord>) -> Result<Self, Error> {
        let first = rows.first().ok_or(Error::Empty)?;
        let n = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: bad.len() });
        }
        Ok(GeneratorMatrix { n, rows })
    }

    pub fn from_symbol_rows(rows: &[SymbolVector]) -> Result<Self, Error> {
        Self::from_rows(rows.iter().map(BitplaneWord::encode).collect::<Result<_, _>>()?)
    }

    /// Codeword length.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rows(&self) -> &[BitplaneWord] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Gf4) {
        self.rows[i].set(j, x);
    }

    pub fn to_symbol_rows(&self) -> Vec<SymbolVector> {
        self.rows.iter().map(BitplaneWord::decode).collect()
    }
}

/// The generator matrix `Γ + ωI` of a circulant graph code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CirculantCode {
    vector: GeneratorVector,
    matrix: GeneratorMatrix,
}

impl CirculantCode {
    pub fn vector(&self) -> &GeneratorVector {
        &self.vector
    }

    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> GeneratorMatrix {
        self.matrix
    }
}

impl Deref for CirculantCode {
    type Target = GeneratorMatrix;
    fn deref(&self) -> &GeneratorMatrix {
        &self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALPHA12: &str = "w10100100101";

    // A'_12 as displayed, row by row.
    const A12_PRIME: [&str; 12] = [
        "w10100100101",
        "1w1010010010",
        "01w101001001",
        "101w10100100",
        "0101w1010010",
        "00101w101001",
        "100101w10100",
        "0100101w1010",
        "00100101w101",
        "100100101w10",
        "0100100101w1",
        "10100100101w",
    ];

    fn ones_1based(v: &GeneratorVector) -> Vec<usize> {
        v.offsets().into_iter().map(|j| j + 1).collect()
    }

    #[test]
    fn parse_reference_vector_and_promotion() {
        let v = GeneratorVector::parse("w11010000000100000001011").unwrap();
        assert_eq!(v.len(), 24);
        assert_eq!(ones_1based(&v), vec![2, 3, 5, 13, 21, 23, 24]);
        assert_eq!(
            GeneratorVector::parse("010100100101").unwrap(),
            GeneratorVector::parse(ALPHA12).unwrap()
        );
    }

    #[test]
    fn parse_rejections() {
        assert!(matches!(
            GeneratorVector::parse("w1w1"),
            Err(Error::OmegaInAdjacency { pos: 2, ch: 'w' })
        ));
        assert!(matches!(GeneratorVector::parse("W11"), Err(Error::BadLeadingSymbol { .. })));
        assert!(matches!(GeneratorVector::parse("111"), Err(Error::SelfLoop)));
        assert!(matches!(
            GeneratorVector::parse("w1x"),
            Err(Error::InvalidSymbol { pos: 2, ch: 'x' })
        ));
        assert!(matches!(GeneratorVector::parse(""), Err(Error::Empty)));
        assert!(matches!(
            GeneratorVector::parse("w100"),
            Err(Error::Asymmetric(SymmetryViolation { offset: 1, mirror: 3 }))
        ));
    }

    #[test]
    fn symmetry_examples() {
        let alpha30 = "w01100001101111111110110000110";
        assert!(GeneratorVector::parse(alpha30).is_ok());
        assert_eq!(
            validate_circulant_symmetry(4, 0b0010),
            Err(SymmetryViolation { offset: 1, mirror: 3 })
        );
        assert_eq!(validate_circulant_symmetry(3, 0b110), Ok(()));
    }

    #[test]
    fn expand_a12_prime() {
        let code = GeneratorVector::parse(ALPHA12).unwrap().expand();
        let printed: Vec<String> = code.to_symbol_rows().iter().map(|r| r.to_string()).collect();
        assert_eq!(printed, A12_PRIME);
    }

    #[test]
    fn expand_triangle_and_single() {
        let tri = GeneratorVector::parse("w11").unwrap().expand();
        let rows: Vec<String> = tri.to_symbol_rows().iter().map(|r| r.to_string()).collect();
        assert_eq!(rows, ["w11", "1w1", "11w"]);
        let v = tri.vector().to_symbols();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(tri.get(i, j), v.get((j + 3 - i) % 3));
            }
        }
        let one = GeneratorVector::parse("w").unwrap().expand();
        assert_eq!(one.to_symbol_rows()[0].to_string(), "w");
    }

    #[test]
    fn expansion_invariants_on_all_small_symmetric_vectors() {
        for n in 1..=12 {
            for free in 0u64..(1 << (n / 2)) {
                let v = symmetric_from_free(n, free);
                let code = v.expand();
                for i in 0..n {
                    assert_eq!(code.rows()[i], code.rows()[0].rotate_right(i));
                    assert_eq!(code.get(i, i), Gf4::OMEGA);
                    for j in 0..n {
                        if i != j {
                            assert_eq!(code.get(i, j), code.get(j, i));
                            assert!(code.get(i, j) == Gf4::ZERO || code.get(i, j) == Gf4::ONE);
                        }
                    }
                }
            }
        }
    }

    fn symmetric_from_free(n: usize, free: u64) -> GeneratorVector {
        let mut adj = 0u64;
        for j in 1..=n / 2 {
            if free >> (j - 1) & 1 != 0 {
                adj |= 1 << j | 1 << (n - j);
            }
        }
        GeneratorVector::from_adjacency(n, adj).unwrap()
    }

    #[test]
    fn candidate_examples() {
        let plus = candidate_vector(24, 8, CandidateMode::Plus).unwrap();
        assert_eq!(ones_1based(&plus), vec![2, 3, 5, 7, 13, 19, 21, 23, 24]);
        let minus = candidate_vector(24, 8, CandidateMode::Minus).unwrap();
        assert_eq!(ones_1based(&minus), vec![2, 3, 5, 13, 21, 23, 24]);
        assert_eq!(minus.to_string(), "w11010000000100000001011");
        let n16 = candidate_vector(16, 6, CandidateMode::Plus).unwrap();
        assert_eq!(n16.to_string(), "w110100010001011");
        // Both ascending and descending runs empty.
        let n12 = candidate_vector(12, 6, CandidateMode::Minus).unwrap();
        assert_eq!(ones_1based(&n12), vec![2, 3, 7, 11, 12]);
    }

    #[test]
    fn candidate_errors() {
        assert!(matches!(candidate_vector(25, 8, CandidateMode::Plus), Err(Error::OddLength { .. })));
        assert!(matches!(candidate_vector(24, 4, CandidateMode::Minus), Err(Error::BadTarget { .. })));
        assert!(matches!(candidate_vector(24, 2, CandidateMode::Plus), Err(Error::BadTarget { .. })));
        assert!(matches!(candidate_vector(24, 7, CandidateMode::Plus), Err(Error::BadTarget { .. })));
        assert!(matches!(
            candidate_vector(10, 8, CandidateMode::Plus),
            Err(Error::CandidateCollision { .. })
        ));
    }

    #[test]
    fn candidate_counts_and_regularity() {
        for n in (4usize..=64).step_by(2) {
            for target in (4..=n).step_by(2) {
                for (mode, expect) in [(CandidateMode::Plus, target + 1), (CandidateMode::Minus, target.wrapping_sub(1))] {
                    if let Ok(v) = candidate_vector(n, target, mode) {
                        assert_eq!(v.degree() as usize, expect, "n={n} L={target} {mode:?}");
                        let code = v.expand();
                        for row in code.rows() {
                            // off-diagonal ones per row = vertex degree
                            assert_eq!(row.plane_a().count_ones() as usize, expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dense_family_examples() {
        assert_eq!(
            dense_family_vector(30).unwrap().to_string(),
            "w01100001101111111110110000110"
        );
        assert_eq!(
            dense_family_vector(32).unwrap().to_string(),
            "w0110000110111111111110110000110"
        );
        assert_eq!(
            dense_family_vector(34).unwrap().to_string(),
            "w011000011011111111111110110000110"
        );
        assert_eq!(dense_family_vector(21).unwrap().to_string(), "w01100001100110000110");
        assert_eq!(dense_family_vector(30).unwrap().degree(), 17);
        assert!(matches!(dense_family_vector(20), Err(Error::DenseTooShort { n: 20 })));
    }

    #[test]
    fn dot_lists_each_edge_once() {
        let dot = GeneratorVector::parse("w11100111").unwrap().to_dot();
        let edges = dot.lines().filter(|l| l.contains("--")).count();
        assert_eq!(edges, 9 * 6 / 2);
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("0 -- 8;"));
        assert!(!dot.contains("0 -- 4;"));
    }
}
