//! Sweeps over coprime pairs comparing the closed form with the oracle on
//! every exceptional third generator.
//!
//! Mismatches are recorded, never raised: the report is the measurement.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, CoprimePair};
use crate::engine::{candidate_points, decompose, dispatch, CandidateKind, CaseLabel};
use crate::error::{Budget, FrobError, Result};
use crate::oracle::{apery_table_within, GeneratorSet};
use crate::region::enumerate_exceptional_within;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub case: CaseLabel,
    pub candidate: CandidateKind,
    pub g_formula: i64,
    pub g_oracle: i64,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    pub a_max: i64,
    pub b_max: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub params: SweepParams,
    pub records: Vec<AuditRecord>,
    pub totals: BTreeMap<String, u64>,
    pub agreement: BTreeMap<String, f64>,
    pub version: String,
}

impl AuditReport {
    fn from_records(params: SweepParams, mut records: Vec<AuditRecord>) -> AuditReport {
        records.sort_unstable_by_key(|r| (r.a, r.b, r.c));
        let mut totals: BTreeMap<String, u64> = CaseLabel::EXCEPTIONAL
            .iter()
            .map(|c| (c.as_str().to_string(), 0))
            .collect();
        let mut agreeing: BTreeMap<String, u64> = BTreeMap::new();
        for r in &records {
            *totals.entry(r.case.as_str().to_string()).or_default() += 1;
            *agreeing.entry(r.case.as_str().to_string()).or_default() += r.agree as u64;
        }
        let agreement = totals
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(k, &n)| (k.clone(), agreeing.get(k).copied().unwrap_or(0) as f64 / n as f64))
            .collect();
        AuditReport {
            params,
            records,
            totals,
            agreement,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records.iter().filter(|r| !r.agree)
    }

    /// Stable JSON: fixed key order, one record per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"params\": {},\n", line(&self.params)));
        out.push_str("  \"records\": [");
        for (i, r) in self.records.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&line(r));
        }
        out.push_str(if self.records.is_empty() {
            "],\n"
        } else {
            "\n  ],\n"
        });
        out.push_str(&format!("  \"totals\": {},\n", line(&self.totals)));
        out.push_str(&format!("  \"agreement\": {},\n", line(&self.agreement)));
        out.push_str(&format!("  \"version\": {}\n", line(&self.version)));
        out.push_str("}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<AuditReport> {
        serde_json::from_str(text).map_err(|e| FrobError::Domain(format!("bad audit report: {e}")))
    }
}

fn line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report values always serialize")
}

pub fn audit_pair(pair: CoprimePair) -> Result<Vec<AuditRecord>> {
    audit_pair_within(pair, Budget::default())
}

/// One record per exceptional `c`, by descending `c`.
pub fn audit_pair_within(pair: CoprimePair, budget: Budget) -> Result<Vec<AuditRecord>> {
    let (a, b) = (pair.a(), pair.b());
    let exceptional = enumerate_exceptional_within(pair, budget)?;
    let mut records = Vec::with_capacity(exceptional.len());
    for ev in exceptional {
        let c = ev.c;
        let dec = decompose(pair, c)?.ok_or_else(|| {
            FrobError::Invariant(format!("red point value {c} did not decompose for ({a}, {b})"))
        })?;
        // dispatch failures are asserted-unreachable; surface them
        let case = dispatch(pair, &dec)?;
        let kind = case.winner().expect("exceptional case");
        let winner = candidate_points(pair, &dec)
            .into_iter()
            .find(|p| p.kind == kind)
            .expect("winner is always generated");
        let g_oracle = apery_table_within(&GeneratorSet::new([a, b, c])?, budget)?.frobenius();
        records.push(AuditRecord {
            a,
            b,
            c,
            case,
            candidate: kind,
            g_formula: winner.value_xy,
            g_oracle,
            agree: winner.value_xy == g_oracle,
        });
    }
    Ok(records)
}

pub fn audit_sweep(a_max: i64, b_max: i64) -> Result<AuditReport> {
    audit_sweep_within(a_max, b_max, Budget::default())
}

/// Every coprime `2 ≤ a < b ≤ b_max` with `a ≤ a_max`. Pairs are audited in
/// parallel; the merged output does not depend on the schedule.
pub fn audit_sweep_within(a_max: i64, b_max: i64, budget: Budget) -> Result<AuditReport> {
    if a_max > b_max {
        return Err(FrobError::Domain(format!(
            "a_max = {a_max} exceeds b_max = {b_max}"
        )));
    }
    let pairs: Vec<CoprimePair> = (2..=a_max)
        .flat_map(|a| (a + 1..=b_max).map(move |b| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .map(|(a, b)| CoprimePair::new(a, b))
        .collect::<Result<_>>()?;
    let chunks: Vec<Vec<AuditRecord>> = pairs
        .par_iter()
        .map(|&p| audit_pair_within(p, budget))
        .collect::<Result<_>>()?;
    Ok(AuditReport::from_records(
        SweepParams { a_max, b_max },
        chunks.into_iter().flatten().collect(),
    ))
}
