//! Lower/upper distance bounds for `(n, 2^n)` additive codes and the
//! optimality classification built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub lower: usize,
    pub upper: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsTable {
    entries: BTreeMap<usize, Bound>,
}

/// `(n, L_n, U_n)` as published alongside the circulant constructions.
const EMBEDDED: [(usize, usize, Option<usize>); 6] = [
    (12, 6, Some(6)),
    (16, 6, None),
    (19, 7, None),
    (22, 8, None),
    (24, 8, None),
    (30, 12, Some(12)),
];

impl BoundsTable {
    pub fn empty() -> Self {
        BoundsTable::default()
    }

    pub fn embedded() -> Self {
        let mut t = BoundsTable::empty();
        for (n, lower, upper) in EMBEDDED {
            t.insert(n, lower, upper).expect("embedded bounds are consistent");
        }
        t
    }

    pub fn insert(&mut self, n: usize, lower: usize, upper: Option<usize>) -> Result<(), Error> {
        if lower == 0 || upper.is_some_and(|u| u < lower) {
            return Err(Error::BoundsParse {
                line: 0,
                msg: format!("inconsistent bounds for n = {n}: L = {lower}, U = {upper:?}"),
            });
        }
        self.entries.insert(n, Bound { lower, upper });
        Ok(())
    }

    pub fn get(&self, n: usize) -> Option<Bound> {
        self.entries.get(&n).copied()
    }

    pub fn lower(&self, n: usize) -> Result<usize, Error> {
        self.get(n).map(|b| b.lower).ok_or(Error::MissingBound { n })
    }

    /// Entries of `other` replace entries here.
    pub fn merge(&mut self, other: &BoundsTable) {
        self.entries.extend(other.entries.iter().map(|(&n, &b)| (n, b)));
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Bound)> + '_ {
        self.entries.iter().map(|(&n, &b)| (n, b))
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        std::fs::read_to_string(path)?.parse()
    }
}

impl FromStr for BoundsTable {
    type Err = Error;

    /// Lines of `n L [U]`; `#` starts a comment.
    fn from_str(text: &str) -> Result<Self, Error> {
        let mut t = BoundsTable::empty();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(Error::BoundsParse { line, msg: format!("expected `n L [U]`, got {body:?}") });
            }
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|e| Error::BoundsParse { line, msg: format!("{s:?}: {e}") })
            };
            let n = num(fields[0])?;
            let lower = num(fields[1])?;
            let upper = fields.get(2).map(|s| num(s)).transpose()?;
            t.insert(n, lower, upper).map_err(|e| match e {
                Error::BoundsParse { msg, .. } => Error::BoundsParse { line, msg },
                other => other,
            })?;
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Meets both the lower and the upper bound.
    Optimum,
    /// Meets the lower bound; the upper bound is unknown or higher.
    ProposedOptimum,
    Suboptimal,
    /// No bounds for this length, or the code beats the recorded lower bound.
    Unknown,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Optimum => "optimum",
            Classification::ProposedOptimum => "proposed_optimum",
            Classification::Suboptimal => "suboptimal",
            Classification::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(d: usize, n: usize, bounds: &BoundsTable) -> Classification {
    let Some(Bound { lower, upper }) = bounds.get(n) else {
        return Classification::Unknown;
    };
    if d < lower {
        return Classification::Suboptimal;
    }
    if d > lower {
        return Classification::Unknown;
    }
    match upper {
        Some(u) if u == lower => Classification::Optimum,
        _ => Classification::ProposedOptimum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let t = BoundsTable::embedded();
        assert_eq!(classify(8, 24, &t), Classification::ProposedOptimum);
        assert_eq!(classify(6, 12, &t), Classification::Optimum);
        assert_eq!(classify(5, 12, &t), Classification::Suboptimal);
        assert_eq!(classify(10, 32, &t), Classification::Unknown);
        assert_eq!(classify(12, 30, &t), Classification::Optimum);
    }

    #[test]
    fn embedded_table_contents() {
        let t = BoundsTable::embedded();
        let lowers: Vec<(usize, usize)> = t.iter().map(|(n, b)| (n, b.lower)).collect();
        assert_eq!(lowers, [(12, 6), (16, 6), (19, 7), (22, 8), (24, 8), (30, 12)]);
        assert!(matches!(t.lower(32), Err(Error::MissingBound { n: 32 })));
    }

    #[test]
    fn parse_and_override() {
        let file = "# comment\n32 10\n\n24 8 9  # trailing\n";
        let parsed: BoundsTable = file.parse().unwrap();
        assert_eq!(parsed.get(32), Some(Bound { lower: 10, upper: None }));
        let mut t = BoundsTable::embedded();
        t.merge(&parsed);
        assert_eq!(t.get(24), Some(Bound { lower: 8, upper: Some(9) }));
        assert_eq!(classify(8, 24, &t), Classification::ProposedOptimum);
        assert_eq!(t.lower(32).unwrap(), 10);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!("12 6\n12\n".parse::<BoundsTable>(), Err(Error::BoundsParse { line: 2, .. })));
        assert!(matches!("12 x".parse::<BoundsTable>(), Err(Error::BoundsParse { line: 1, .. })));
        assert!(matches!("12 6 5".parse::<BoundsTable>(), Err(Error::BoundsParse { line: 1, .. })));
    }
}
