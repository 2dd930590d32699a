//! Ground truth for arbitrary generator sets.
//!
//! The primary oracle is the Apéry table: for the smallest generator `m`, the
//! least semigroup element in every residue class mod `m`, found by Dijkstra
//! over the cyclic group `Z/m`. A dense sieve up to the Schur bound
//! `a₁·aₙ` is kept as an independent second opinion.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Budget, FrobError, Result};

/// Sorted, deduplicated, positive generators with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<i64>,
}

impl GeneratorSet {
    pub fn new(gens: impl IntoIterator<Item = i64>) -> Result<GeneratorSet> {
        let mut gens: Vec<i64> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(FrobError::Domain("generator set is empty".into()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g < 1) {
            return Err(FrobError::Domain(format!("generators must be positive, got {g}")));
        }
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(FrobError::Domain(format!("generators share the factor {d}")));
        }
        Ok(GeneratorSet { gens })
    }

    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn smallest(&self) -> i64 {
        self.gens[0]
    }
}

/// Coefficients of `a·c1 + b·c2 + c·c3` (unused trailing slots are zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RepresentationWitness {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl RepresentationWitness {
    pub fn evaluate(&self, gens: &[i64]) -> i128 {
        [self.c1, self.c2, self.c3]
            .iter()
            .zip(gens)
            .map(|(&k, &g)| k as i128 * g as i128)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    pub modulus: i64,
    pub min_rep: Vec<i64>,
}

impl AperyTable {
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && n >= self.min_rep[n.rem_euclid(self.modulus) as usize]
    }

    /// Largest gap, or −1 when there are none.
    pub fn frobenius(&self) -> i64 {
        self.min_rep.iter().copied().max().unwrap_or(0) - self.modulus
    }
}

pub fn apery_table(gs: &GeneratorSet) -> Result<AperyTable> {
    apery_table_within(gs, Budget::default())
}

pub fn apery_table_within(gs: &GeneratorSet, budget: Budget) -> Result<AperyTable> {
    let m = gs.smallest();
    budget.check(m as i128, "Apéry table")?;
    let mut dist = vec![i64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gs.gens()[1..] {
            let next = d + g;
            let slot = (next % m) as usize;
            if next < dist[slot] {
                dist[slot] = next;
                heap.push(Reverse((next, slot)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&d| d != i64::MAX), "gcd 1 reaches every class");
    Ok(AperyTable {
        modulus: m,
        min_rep: dist,
    })
}

/// A generator set with its Apéry table, for repeated queries.
#[derive(Debug, Clone)]
pub struct Semigroup {
    gens: GeneratorSet,
    table: AperyTable,
}

impl Semigroup {
    pub fn new(gens: GeneratorSet) -> Result<Semigroup> {
        Semigroup::within(gens, Budget::default())
    }

    pub fn within(gens: GeneratorSet, budget: Budget) -> Result<Semigroup> {
        let table = apery_table_within(&gens, budget)?;
        Ok(Semigroup { gens, table })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn table(&self) -> &AperyTable {
        &self.table
    }

    pub fn frobenius(&self) -> i64 {
        self.table.frobenius()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.table.contains(n)
    }

    /// Lexicographically least `(c1, c2, c3)` representing `n`, for sets of at
    /// most three generators.
    pub fn witness(&self, n: i64) -> Option<RepresentationWitness> {
        let gens = self.gens.gens();
        if gens.len() > 3 || !self.contains(n) {
            return None;
        }
        let mut coeffs = [0i64; 3];
        if !least_coefficients(gens, n, &mut coeffs) {
            unreachable!("Apéry table says {n} is representable but no witness found");
        }
        let [c1, c2, c3] = coeffs;
        Some(RepresentationWitness { c1, c2, c3 })
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius()).filter(|&n| !self.contains(n)).collect()
    }
}

/// Fills `out` with the lexicographically least coefficient vector, if any.
fn least_coefficients(gens: &[i64], n: i64, out: &mut [i64]) -> bool {
    match gens {
        [] => n == 0,
        [g] => {
            if n % g == 0 {
                out[0] = n / g;
                true
            } else {
                false
            }
        }
        [g, rest @ ..] => {
            // with a single generator h left, solvability is periodic in k
            // with period dividing h
            let k_max = if rest.len() == 1 {
                (n / g).min(rest[0])
            } else {
                n / g
            };
            for k in 0..=k_max {
                if least_coefficients(rest, n - k * g, &mut out[1..]) {
                    out[0] = k;
                    return true;
                }
            }
            false
        }
    }
}

pub fn frobenius_oracle(gs: &GeneratorSet) -> Result<i64> {
    Ok(apery_table(gs)?.frobenius())
}

pub fn is_representable(n: i64, gs: &GeneratorSet) -> Result<(bool, Option<RepresentationWitness>)> {
    let sg = Semigroup::new(gs.clone())?;
    let member = sg.contains(n);
    Ok((member, if member { sg.witness(n) } else { None }))
}

pub fn gaps(gs: &GeneratorSet) -> Result<Vec<i64>> {
    let sg = Semigroup::new(gs.clone())?;
    Budget::default().check(sg.frobenius() as i128 + 1, "gap listing")?;
    Ok(sg.gaps())
}

/// Membership flags for `0..=limit` by dynamic programming.
pub fn representable_sieve(gens: &[i64], limit: usize) -> Vec<bool> {
    let mut hit = vec![false; limit + 1];
    hit[0] = true;
    for n in 1..=limit {
        hit[n] = gens.iter().any(|&g| (g as usize) <= n && hit[n - g as usize]);
    }
    hit
}

/// Frobenius number from the dense sieve, searching up to `a₁·aₙ`
/// (which exceeds every gap by Schur's bound).
pub fn sieve_frobenius(gs: &GeneratorSet) -> Result<i64> {
    let gens = gs.gens();
    let limit = gens[0] as i128 * gens[gens.len() - 1] as i128;
    Budget::default().check(limit, "sieve")?;
    let hit = representable_sieve(gens, limit as usize);
    Ok(hit.iter().rposition(|&h| !h).map_or(-1, |n| n as i64))
}
