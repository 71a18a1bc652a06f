//! Minimum distance of a circulant graph code.
//!
//! Every codeword is a sum of some subset `S` of the generator rows. The
//! diagonal of `Γ + ωI` is ω, and the 0/1 entries of the other rows can only
//! turn it into ω² = ω + 1, never 0, so the sum is nonzero on all `|S|`
//! chosen diagonal positions: `weight ≥ |S|`. Enumerating subsets by size
//! `k = 1, 2, …` can therefore stop once `k` exceeds the best weight seen.

use std::sync::atomic::{AtomicBool, Ordering};

use serde::{Deserialize, Serialize};

use super::enumerator::traverse;
use crate::circulant::CirculantCode;
use crate::combin::{binomial, RevolvingDoor};
use crate::exec::Execution;
use crate::word::BitplaneWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStrategy {
    /// Pick per level: keep enumerating subsets while that is cheaper than
    /// walking all `2^n` codewords.
    Auto,
    Subsets,
    FullTraversal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    /// Lightest nonzero weight found. Exact when `proof_complete`.
    pub d: u32,
    /// Row indices whose sum has weight `d`, ascending.
    pub witness: Vec<usize>,
    /// Largest subset size fully examined.
    pub k_max_searched: usize,
    pub proof_complete: bool,
    /// How the search actually ended up running.
    pub strategy: DistanceStrategy,
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceOptions {
    /// Largest subset size to try. Setting a cap forces subset enumeration.
    pub cap: Option<usize>,
    pub strategy: DistanceStrategy,
    pub execution: Execution,
    /// Give up as soon as any word lighter than this is found.
    pub reject_below: Option<u32>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            cap: None,
            strategy: DistanceStrategy::Auto,
            execution: Execution::default(),
            reject_below: None,
        }
    }
}

/// Minimum distance with default options and an optional subset-size cap.
pub fn min_distance(code: &CirculantCode, cap: Option<usize>) -> DistanceResult {
    min_distance_with(code, &DistanceOptions { cap, ..Default::default() })
}

pub fn min_distance_with(code: &CirculantCode, opts: &DistanceOptions) -> DistanceResult {
    let n = code.len();
    let rows = code.rows();
    let strategy = match (opts.cap, opts.strategy) {
        (Some(_), _) => DistanceStrategy::Subsets,
        (None, s) => s,
    };
    if strategy == DistanceStrategy::FullTraversal {
        return full_traversal(rows, opts.execution);
    }
    let cap = opts.cap.unwrap_or(n).clamp(1, n);

    let mut best = Best { weight: u32::MAX, mask: 0 };
    let mut k_max_searched = 0;
    for k in 1..=n {
        if k as u32 > best.weight {
            return best.into_result(k_max_searched, true, DistanceStrategy::Subsets);
        }
        if k > cap {
            return best.into_result(k_max_searched, false, DistanceStrategy::Subsets);
        }
        if strategy == DistanceStrategy::Auto && k > 1 && n <= 63 {
            let last = (best.weight as usize).min(n);
            let remaining: u128 = (k..=last).map(|j| binomial(n as u64, j as u64)).sum();
            if remaining > 1u128 << n {
                return full_traversal(rows, opts.execution);
            }
        }
        let level = search_level(rows, k, best.weight, opts.reject_below, opts.execution);
        if level.weight < best.weight {
            best = level;
        }
        if opts.reject_below.is_some_and(|t| best.weight < t) {
            return best.into_result(k_max_searched, false, DistanceStrategy::Subsets);
        }
        k_max_searched = k;
    }
    // Only reachable when every level up to n ran; that is a complete search.
    best.into_result(k_max_searched, true, DistanceStrategy::Subsets)
}

#[derive(Clone, Copy, Debug)]
struct Best {
    weight: u32,
    mask: u64,
}

impl Best {
    fn into_result(self, k_max_searched: usize, proof_complete: bool, strategy: DistanceStrategy) -> DistanceResult {
        DistanceResult {
            d: self.weight,
            witness: mask_indices(self.mask),
            k_max_searched,
            proof_complete,
            strategy,
        }
    }
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask >> j & 1 != 0).collect()
}

fn full_traversal(rows: &[BitplaneWord], exec: Execution) -> DistanceResult {
    let t = traverse(rows, exec).expect("circulant codes have between 1 and 63 rows");
    let (d, gray) = t.lightest.expect("a code with an ω diagonal has nonzero words");
    DistanceResult {
        d,
        witness: mask_indices(gray),
        k_max_searched: rows.len(),
        proof_complete: true,
        strategy: DistanceStrategy::FullTraversal,
    }
}

/// Lightest sum over all `k`-subsets, split into blocks by the largest
/// chosen row `top`: `{top} ∪ (k-1)-subset of {0, …, top-1}`.
fn search_level(
    rows: &[BitplaneWord],
    k: usize,
    incumbent: u32,
    reject_below: Option<u32>,
    exec: Execution,
) -> Best {
    let n = rows.len();
    let stop = AtomicBool::new(false);
    let tops: Vec<usize> = (k - 1..n).collect();
    let blocks = exec.map(tops, |top| {
        if stop.load(Ordering::Relaxed) {
            return Best { weight: u32::MAX, mask: 0 };
        }
        let mut door = RevolvingDoor::new(top, k - 1);
        let mut word = rows[top];
        let mut mask = 1u64 << top;
        for &j in door.current() {
            word.add_assign(&rows[j]);
            mask |= 1 << j;
        }
        let mut best = Best { weight: incumbent, mask: 0 };
        let mut improved = false;
        loop {
            let w = word.weight();
            if w < best.weight {
                best = Best { weight: w, mask };
                improved = true;
                if reject_below.is_some_and(|t| w < t) {
                    stop.store(true, Ordering::Relaxed);
                    break;
                }
            }
            let Some((out, inc)) = door.advance() else { break };
            word.add_assign(&rows[out]);
            word.add_assign(&rows[inc]);
            mask ^= (1 << out) | (1 << inc);
            if reject_below.is_some() && stop.load(Ordering::Relaxed) {
                break;
            }
        }
        if improved {
            best
        } else {
            Best { weight: u32::MAX, mask: 0 }
        }
    });
    blocks
        .into_iter()
        .fold(Best { weight: u32::MAX, mask: 0 }, |acc, b| if b.weight < acc.weight { b } else { acc })
}
