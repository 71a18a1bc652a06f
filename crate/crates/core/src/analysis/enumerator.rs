//! Full weight distribution by Gray-code traversal of the row span.
//!
//! Binary index `i` visits the codeword `Σ_{bit j of g(i)} row_j` where
//! `g(i) = i ^ (i >> 1)`. Moving from `i - 1` to `i` flips exactly bit
//! `trailing_zeros(i)` of the Gray code, so each step XORs a single row into
//! the running word.
//!
//! The index space is cut into `2^p` contiguous blocks. Each block rebuilds
//! its start word from scratch, tallies a private histogram, and the
//! histograms are summed in block order, so sequential and parallel runs
//! agree bit for bit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circulant::GeneratorMatrix;
use crate::exec::Execution;
use crate::word::BitplaneWord;
use crate::Error;

/// Lengths above this need an explicit override.
pub const DEFAULT_LENGTH_GUARD: usize = 34;

/// Most rows a traversal can span (the index must fit in a `u64`).
pub const MAX_TRAVERSAL_ROWS: usize = 63;

const BLOCK_BITS: usize = 8;

/// Weight distribution `(A_0, …, A_n)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEnumerator {
    n: usize,
    counts: Vec<u64>,
}

impl WeightEnumerator {
    /// Wraps raw counts; `counts.len()` must be `n + 1`.
    pub fn from_counts(n: usize, counts: Vec<u64>) -> Result<Self, Error> {
        if counts.len() != n + 1 {
            return Err(Error::LengthMismatch { left: n + 1, right: counts.len() });
        }
        Ok(WeightEnumerator { n, counts })
    }

    /// Builds from `(weight, count)` pairs; unlisted weights are zero.
    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> Result<Self, Error> {
        let mut counts = vec![0; n + 1];
        for &(i, a) in terms {
            if i > n {
                return Err(Error::LengthMismatch { left: n + 1, right: i + 1 });
            }
            counts[i] += a;
        }
        Ok(WeightEnumerator { n, counts })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&a| a as u128).sum()
    }

    /// Smallest positive weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&a| a > 0).map(|i| i + 1)
    }
}

impl fmt::Display for WeightEnumerator {
    /// Polynomial form, e.g. `1 + 3z^2 + 4z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}z")?,
                _ => write!(f, "{a}z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions {
    /// Lift the length guard.
    pub allow_large: bool,
    pub execution: Execution,
}

/// Exact weight distribution of the additive span of `matrix`'s rows.
///
/// Fails with [`Error::RankDeficient`] if the zero word shows up more than
/// once, since the counts would then describe a multiset, not the code.
pub fn weight_enumerator(
    matrix: &GeneratorMatrix,
    opts: EnumerationOptions,
) -> Result<WeightEnumerator, Error> {
    let n = matrix.len();
    if n > DEFAULT_LENGTH_GUARD && !opts.allow_large {
        return Err(Error::CostGuard { n, limit: DEFAULT_LENGTH_GUARD });
    }
    let t = traverse(matrix.rows(), opts.execution)?;
    if t.histogram[0] != 1 {
        return Err(Error::RankDeficient { zero_count: t.histogram[0] });
    }
    let mut counts = t.histogram;
    counts.truncate(n + 1);
    Ok(WeightEnumerator { n, counts })
}

/// Raw outcome of a traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Traversal {
    /// Indexed by weight, length 65.
    pub histogram: Vec<u64>,
    /// Lightest nonzero word and the Gray code that produced it.
    pub lightest: Option<(u32, u64)>,
}

/// Packed lane for the hot loop.
trait Lane: Copy + Send + Sync {
    fn pack(w: &BitplaneWord) -> Self;
    fn zero() -> Self;
    fn xor(self, other: Self) -> Self;
    fn weight(self) -> u32;
}

/// Both planes in one `u64` (`a` low, `b` high); lengths up to 32.
impl Lane for u64 {
    #[inline(always)]
    fn pack(w: &BitplaneWord) -> Self {
        w.plane_a() | w.plane_b() << 32
    }
    #[inline(always)]
    fn zero() -> Self {
        0
    }
    #[inline(always)]
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    #[inline(always)]
    fn weight(self) -> u32 {
        ((self | self >> 32) as u32).count_ones()
    }
}

impl Lane for u128 {
    #[inline(always)]
    fn pack(w: &BitplaneWord) -> Self {
        w.plane_a() as u128 | (w.plane_b() as u128) << 64
    }
    #[inline(always)]
    fn zero() -> Self {
        0
    }
    #[inline(always)]
    fn xor(self, other: Self) -> Self {
        self ^ other
    }
    #[inline(always)]
    fn weight(self) -> u32 {
        ((self | self >> 64) as u64).count_ones()
    }
}

pub(crate) fn traverse(rows: &[BitplaneWord], exec: Execution) -> Result<Traversal, Error> {
    let k = rows.len();
    if k == 0 {
        return Err(Error::Empty);
    }
    if k > MAX_TRAVERSAL_ROWS {
        return Err(Error::Capacity { n: k, max: MAX_TRAVERSAL_ROWS });
    }
    if rows[0].len() <= 32 {
        Ok(traverse_lanes::<u64>(rows, exec))
    } else {
        Ok(traverse_lanes::<u128>(rows, exec))
    }
}

struct BlockResult {
    histogram: [u64; 65],
    lightest: Option<(u32, u64)>,
}

fn traverse_lanes<L: Lane>(rows: &[BitplaneWord], exec: Execution) -> Traversal {
    let k = rows.len();
    let packed: Vec<L> = rows.iter().map(L::pack).collect();
    let block_bits = k.min(BLOCK_BITS);
    let inner_bits = k - block_bits;

    let blocks = exec.map_range(1 << block_bits, |t| run_block(&packed, (t as u64) << inner_bits, inner_bits));

    let mut histogram = vec![0u64; 65];
    let mut lightest: Option<(u32, u64)> = None;
    for b in blocks {
        for (acc, x) in histogram.iter_mut().zip(b.histogram.iter()) {
            *acc += x;
        }
        if let Some((w, g)) = b.lightest {
            if lightest.is_none_or(|(best, _)| w < best) {
                lightest = Some((w, g));
            }
        }
    }
    Traversal { histogram, lightest }
}

fn run_block<L: Lane>(rows: &[L], start: u64, inner_bits: usize) -> BlockResult {
    let gray = start ^ (start >> 1);
    let mut word = L::zero();
    for (j, r) in rows.iter().enumerate() {
        if gray >> j & 1 != 0 {
            word = word.xor(*r);
        }
    }

    // Four interleaved histograms keep consecutive increments from stalling
    // on the same counter.
    let mut hist = [[0u64; 65]; 4];
    let mut best = u32::MAX;
    let mut best_index = 0u64;

    let mut tally = |word: L, i: u64, lane: usize, hist: &mut [[u64; 65]; 4]| {
        let w = word.weight();
        hist[lane][w as usize] += 1;
        if w < best && w != 0 {
            best = w;
            best_index = i;
        }
    };

    tally(word, start, 0, &mut hist);
    let end = start + (1u64 << inner_bits);
    let mut i = start + 1;
    while i + 4 <= end {
        for lane in 0..4 {
            word = word.xor(rows[(i + lane as u64).trailing_zeros() as usize]);
            tally(word, i + lane as u64, lane, &mut hist);
        }
        i += 4;
    }
    while i < end {
        word = word.xor(rows[i.trailing_zeros() as usize]);
        tally(word, i, 0, &mut hist);
        i += 1;
    }

    let mut histogram = [0u64; 65];
    for h in &hist {
        for (acc, x) in histogram.iter_mut().zip(h.iter()) {
            *acc += x;
        }
    }
    BlockResult {
        histogram,
        lightest: (best != u32::MAX).then_some((best, best_index ^ (best_index >> 1))),
    }
}
