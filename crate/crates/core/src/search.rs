//! End-to-end construction pipeline and symmetric-vector sweeps.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    check_self_dual, classify, min_distance_with, weight_enumerator, BoundsTable, Classification,
    DistanceOptions, EnumerationOptions,
};
use crate::circulant::{candidate_vector, CandidateMode, GeneratorVector};
use crate::exec::Execution;
use crate::word::MAX_LEN;
use crate::Error;

/// Where a reported vector came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Supplied directly by the user.
    Direct,
    CandidatePlus,
    CandidateMinus,
    DenseFamily,
    Sweep,
}

impl From<CandidateMode> for Strategy {
    fn from(m: CandidateMode) -> Self {
        match m {
            CandidateMode::Plus => Strategy::CandidatePlus,
            CandidateMode::Minus => Strategy::CandidateMinus,
        }
    }
}

/// One analysed code. Field order is the JSON-lines schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub n: usize,
    pub vector: String,
    pub d: u32,
    pub proof_complete: bool,
    pub self_dual: bool,
    pub classification: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enumerator: Option<Vec<u64>>,
    pub strategy: Strategy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub bounds: BoundsTable,
    pub cap: Option<usize>,
    pub enumerator: bool,
    pub allow_large: bool,
    pub execution: Execution,
    /// Record wall-clock time; off gives byte-identical reports across runs.
    pub timing: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            bounds: BoundsTable::embedded(),
            cap: None,
            enumerator: false,
            allow_large: false,
            execution: Execution::default(),
            timing: true,
        }
    }
}

/// Distance, self-duality, classification and (optionally) the enumerator.
pub fn analyze_vector(
    vector: &GeneratorVector,
    strategy: Strategy,
    opts: &AnalyzeOptions,
) -> Result<ReportRecord, Error> {
    let started = Instant::now();
    let code = vector.expand();
    let enumerator = if opts.enumerator {
        let e = weight_enumerator(
            &code,
            EnumerationOptions { allow_large: opts.allow_large, execution: opts.execution },
        )?;
        Some(e.counts().to_vec())
    } else {
        None
    };
    let dist = min_distance_with(
        &code,
        &DistanceOptions { cap: opts.cap, execution: opts.execution, ..Default::default() },
    );
    let report = check_self_dual(&code);
    Ok(ReportRecord {
        n: vector.len(),
        vector: vector.to_string(),
        d: dist.d,
        proof_complete: dist.proof_complete,
        self_dual: report.self_dual,
        classification: classify(dist.d as usize, vector.len(), &opts.bounds),
        enumerator,
        strategy,
        seed: None,
        elapsed_ms: if opts.timing { started.elapsed().as_millis() as u64 } else { 0 },
    })
}

/// Builds both candidate vectors for `n` from `L_n` and analyses them,
/// plus mode first.
pub fn candidate_pipeline(n: usize, opts: &AnalyzeOptions) -> Result<Vec<ReportRecord>, Error> {
    let target = opts.bounds.lower(n)?;
    [CandidateMode::Plus, CandidateMode::Minus]
        .into_iter()
        .map(|mode| {
            let v = candidate_vector(n, target, mode)?;
            analyze_vector(&v, mode.into(), opts)
        })
        .collect()
}

/// Number of circulant-symmetric adjacency rows of length `n`: the free
/// bits are `a_1 … a_⌊n/2⌋`.
pub fn symmetric_space_size(n: usize) -> u128 {
    1u128 << (n / 2)
}

/// The symmetric vector whose free bit `j - 1` sets `a_j = a_{n-j}`.
pub fn symmetric_vector(n: usize, free: u64) -> Result<GeneratorVector, Error> {
    let mut adjacency = 0u64;
    for j in 1..=n / 2 {
        if free >> (j - 1) & 1 != 0 {
            adjacency |= 1 << j | 1 << (n - j);
        }
    }
    GeneratorVector::from_adjacency(n, adjacency)
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Most vectors to analyse.
    pub budget: usize,
    pub seed: u64,
    /// Keep only vectors reaching this distance; losers are dropped after a
    /// capped search finds a lighter word.
    pub target: Option<u32>,
    pub analyze: AnalyzeOptions,
}

/// Analyses symmetric vectors of length `n`: all of them when the space fits
/// in the budget, else `budget` distinct ones drawn with the given seed.
/// Records come back sorted by `d` descending, then vector text.
pub fn sweep_symmetric(n: usize, opts: &SweepOptions) -> Result<Vec<ReportRecord>, Error> {
    if n == 0 || n > MAX_LEN {
        return Err(Error::Capacity { n, max: MAX_LEN });
    }
    let space = symmetric_space_size(n);
    let budget = opts.budget.max(1);
    let (frees, seed): (Vec<u64>, Option<u64>) = if space <= budget as u128 {
        ((0..space as u64).collect(), None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut picked: Vec<u64> = rand::seq::index::sample(&mut rng, space as usize, budget)
            .into_iter()
            .map(|i| i as u64)
            .collect();
        picked.sort_unstable();
        (picked, Some(opts.seed))
    };

    let analyze = &opts.analyze;
    let records = analyze
        .execution
        .map(frees, |free| -> Result<Option<ReportRecord>, Error> {
            let v = symmetric_vector(n, free)?;
            if let Some(t) = opts.target {
                let code = v.expand();
                let probe = min_distance_with(
                    &code,
                    &DistanceOptions {
                        cap: Some((t as usize).saturating_sub(1).max(1)),
                        reject_below: Some(t),
                        execution: analyze.execution,
                        ..Default::default()
                    },
                );
                if probe.d < t {
                    return Ok(None);
                }
            }
            let mut r = analyze_vector(&v, Strategy::Sweep, analyze)?;
            r.seed = seed;
            if opts.target.is_some_and(|t| r.d < t) {
                return Ok(None);
            }
            Ok(Some(r))
        })
        .into_iter()
        .filter_map(Result::transpose)
        .collect::<Result<Vec<_>, _>>()?;

    let mut records = records;
    records.sort_by(|x, y| y.d.cmp(&x.d).then_with(|| x.vector.cmp(&y.vector)));
    Ok(records)
}
