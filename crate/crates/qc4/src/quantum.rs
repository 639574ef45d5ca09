//! Binary quantum code parameters from Hermitian dual-containing quaternary
//! codes, the four propagation rules, breadth-first derivation closure, and
//! comparison against a best-known-parameters records table.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::distance::DistanceResult;
use crate::error::{Error, Result};
use crate::qc2::LinearCode;

/// [[n, k, d]] binary quantum code parameters with purity and a derivation
/// trail back to the classical base code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub pure: bool,
    pub provenance: Derivation,
}

/// Where a parameter set came from: a base label plus applied rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub base: String,
    pub rules: Vec<PropagationRule>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropagationRule {
    Subcode,
    Lengthen,
    Puncture,
    PurePuncture,
}

impl PropagationRule {
    pub const ALL: [PropagationRule; 4] = [
        PropagationRule::Subcode,
        PropagationRule::Lengthen,
        PropagationRule::Puncture,
        PropagationRule::PurePuncture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropagationRule::Subcode => "subcode",
            PropagationRule::Lengthen => "lengthen",
            PropagationRule::Puncture => "puncture",
            PropagationRule::PurePuncture => "pure_puncture",
        }
    }
}

impl QuantumParams {
    fn validate(&self) -> Result<()> {
        if self.n < 1 || self.k > self.n || self.d < 1 || self.d > self.n {
            return Err(Error::Invariant(format!(
                "[[{}, {}, {}]] violates parameter bounds",
                self.n, self.k, self.d
            )));
        }
        Ok(())
    }
}

/// The Hermitian construction: a dual-containing [n, k, d] code over GF(4)
/// yields a pure [[n, 2k−n, d]] binary quantum code.
///
/// The caller must pass the matrix-oracle verdict and an exact distance;
/// anything weaker is refused rather than silently trusted.
pub fn hermitian_construction(
    code: &LinearCode,
    dual_containing_verified: bool,
    distance: &DistanceResult,
    base_label: &str,
) -> Result<QuantumParams> {
    if !dual_containing_verified {
        return Err(Error::Contract(
            "hermitian construction requires a verified dual-containing code".into(),
        ));
    }
    let Some(d) = distance.exact() else {
        return Err(Error::Contract(
            "hermitian construction requires an exact minimum distance".into(),
        ));
    };
    let (n, k) = (code.length(), code.dimension());
    if 2 * k < n {
        return Err(Error::Contract(format!(
            "2·{k} < {n}: negative logical dimension, the code cannot be dual-containing"
        )));
    }
    let params = QuantumParams {
        n: n as u32,
        k: (2 * k - n) as u32,
        d,
        pure: true,
        provenance: Derivation {
            base: base_label.to_string(),
            rules: Vec::new(),
        },
    };
    params.validate()?;
    Ok(params)
}

/// Applies one propagation rule. Derived parameters are conservatively
/// marked impure: the rules do not state purity of their outputs, so rule
/// four is only ever applied to codes whose purity was established
/// directly.
pub fn propagate(q: &QuantumParams, rule: PropagationRule) -> Result<QuantumParams> {
    let fail = |reason: String| Error::RuleInapplicable {
        rule: rule.name(),
        reason,
    };
    let (n, k, d) = (q.n, q.k, q.d);
    let (n2, k2, d2) = match rule {
        PropagationRule::Subcode => {
            if k < 1 {
                return Err(fail(format!("needs k ≥ 1, have k = {k}")));
            }
            (n, k - 1, d)
        }
        PropagationRule::Lengthen => {
            if k == 0 {
                return Err(fail("needs k > 0".into()));
            }
            (n + 1, k, d)
        }
        PropagationRule::Puncture => {
            if k == 0 {
                return Err(fail("needs k > 0".into()));
            }
            if d < 2 {
                return Err(fail(format!("needs d ≥ 2, have d = {d}")));
            }
            (n - 1, k, d - 1)
        }
        PropagationRule::PurePuncture => {
            if n <= 2 {
                return Err(fail(format!("needs n > 2, have n = {n}")));
            }
            if !q.pure {
                return Err(fail("source code is not pure".into()));
            }
            if d < 2 {
                return Err(fail(format!("needs d ≥ 2, have d = {d}")));
            }
            (n - 1, k + 1, d - 1)
        }
    };
    let mut rules = q.provenance.rules.clone();
    rules.push(rule);
    let out = QuantumParams {
        n: n2,
        k: k2,
        d: d2,
        pure: false,
        provenance: Derivation {
            base: q.provenance.base.clone(),
            rules,
        },
    };
    out.validate()?;
    Ok(out)
}

/// (n, k) window for the derivation closure; `None` bounds are unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub min_n: Option<u32>,
    pub max_n: Option<u32>,
    pub min_k: Option<u32>,
    pub max_k: Option<u32>,
}

impl Window {
    pub fn contains(&self, q: &QuantumParams) -> bool {
        self.min_n.is_none_or(|b| q.n >= b)
            && self.max_n.is_none_or(|b| q.n <= b)
            && self.min_k.is_none_or(|b| q.k >= b)
            && self.max_k.is_none_or(|b| q.k <= b)
    }
}

/// Breadth-first closure of the propagation rules inside a window, keeping
/// for each (n, k) the largest d (then purity, then the shorter derivation).
/// The result is sorted by (n, k) and includes the base itself when it fits
/// the window.
pub fn derive_closure(base: &QuantumParams, max_steps: usize, window: Window) -> Vec<QuantumParams> {
    let mut best: BTreeMap<(u32, u32), QuantumParams> = BTreeMap::new();
    let mut frontier = vec![base.clone()];
    if window.contains(base) {
        best.insert((base.n, base.k), base.clone());
    }
    for _ in 0..max_steps {
        let mut next = Vec::new();
        for q in &frontier {
            for rule in PropagationRule::ALL {
                let Ok(candidate) = propagate(q, rule) else {
                    continue;
                };
                if !window.contains(&candidate) {
                    continue;
                }
                let key = (candidate.n, candidate.k);
                let better = match best.get(&key) {
                    None => true,
                    Some(cur) => {
                        (candidate.d, candidate.pure, std::cmp::Reverse(candidate.provenance.rules.len()))
                            > (cur.d, cur.pure, std::cmp::Reverse(cur.provenance.rules.len()))
                    }
                };
                if better {
                    best.insert(key, candidate.clone());
                    next.push(candidate);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    best.into_values().collect()
}

/// One row of the best-known-parameters table: the record distance for an
/// (n, k) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub source: String,
}

/// Records database keyed by (n, k); one row per pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecordsDb {
    rows: BTreeMap<(u32, u32), CodeRecord>,
    pub warnings: Vec<String>,
}

impl RecordsDb {
    /// Parses the CSV format `n,k,d,source` with `#` comment lines.
    /// Malformed rows produce warnings, not errors.
    pub fn from_reader<R: Read>(reader: R) -> Result<RecordsDb> {
        let mut db = RecordsDb::default();
        let mut csv_reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = csv_reader
            .headers()
            .map_err(|e| Error::Records(e.to_string()))?
            .clone();
        if headers.iter().take(3).collect::<Vec<_>>() != ["n", "k", "d"] {
            return Err(Error::Records(format!(
                "expected header n,k,d,source; found {headers:?}"
            )));
        }
        for (idx, row) in csv_reader.records().enumerate() {
            let line = idx + 2;
            let row = match row {
                Ok(r) => r,
                Err(e) => {
                    db.warnings.push(format!("line {line}: {e}"));
                    continue;
                }
            };
            let parsed = (|| -> Option<CodeRecord> {
                Some(CodeRecord {
                    n: row.get(0)?.parse().ok()?,
                    k: row.get(1)?.parse().ok()?,
                    d: row.get(2)?.parse().ok()?,
                    source: row.get(3).unwrap_or("").to_string(),
                })
            })();
            match parsed {
                Some(record) => {
                    if let Some(old) = db.rows.insert((record.n, record.k), record) {
                        db.warnings.push(format!(
                            "line {line}: duplicate row for ({}, {}), keeping the later one",
                            old.n, old.k
                        ));
                    }
                }
                None => db.warnings.push(format!("line {line}: malformed row")),
            }
        }
        Ok(db)
    }

    pub fn from_path(path: &Path) -> Result<RecordsDb> {
        RecordsDb::from_reader(std::fs::File::open(path)?)
    }

    pub fn get(&self, n: u32, k: u32) -> Option<&CodeRecord> {
        self.rows.get(&(n, k))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Improves,
    Ties,
    Worse,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordComparison {
    pub candidate: QuantumParams,
    pub record: Option<CodeRecord>,
    pub status: RecordStatus,
}

/// Compares candidates against the records table; the report is sorted by
/// (n, k) and deduplicated to the best candidate per pair.
pub fn compare_records(candidates: &[QuantumParams], db: &RecordsDb) -> Vec<RecordComparison> {
    let mut best: BTreeMap<(u32, u32), &QuantumParams> = BTreeMap::new();
    for q in candidates {
        best.entry((q.n, q.k))
            .and_modify(|cur| {
                if q.d > cur.d {
                    *cur = q;
                }
            })
            .or_insert(q);
    }
    best.into_values()
        .map(|q| {
            let record = db.get(q.n, q.k).cloned();
            let status = match &record {
                None => RecordStatus::Unknown,
                Some(r) if q.d > r.d => RecordStatus::Improves,
                Some(r) if q.d == r.d => RecordStatus::Ties,
                Some(_) => RecordStatus::Worse,
            };
            RecordComparison {
                candidate: q.clone(),
                record,
                status,
            }
        })
        .collect()
}
