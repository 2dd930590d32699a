//! Integer primitives: Bezout witnesses, modular inverses, the canonical
//! solution of `a·x + b·y = c`, and Sylvester's two-generator formula.
//!
//! Every generator is bounded by [`MAX_GENERATOR`], so products of up to three
//! input-scale factors fit comfortably in `i128`.

use serde::Serialize;

use crate::error::{FrobError, Result};

/// Largest generator accepted anywhere in the crate.
pub const MAX_GENERATOR: i64 = 1 << 31;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Extended Euclid. Returns `(d, s, t)` with `d = gcd(a, b) ≥ 0` and
/// `s·a + t·b = d`.
pub fn gcd_ext(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(FrobError::Degenerate("gcd_ext(0, 0) is undefined".into()));
    }
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    Ok((old_r as i64, old_s as i64, old_t as i64))
}

/// Inverse of `x` modulo `m`, in `[1, m)`.
pub fn mod_inverse(x: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(FrobError::Domain(format!("modulus must be at least 2, got {m}")));
    }
    let (d, s, _) = gcd_ext(x.rem_euclid(m), m)?;
    if d != 1 {
        return Err(FrobError::NoInverse { x, m });
    }
    Ok(s.rem_euclid(m))
}

/// `n / d` where the caller knows `d | n`.
pub(crate) fn exact_div(n: i128, d: i128) -> i128 {
    assert!(d != 0 && n % d == 0, "inexact division {n} / {d}");
    n / d
}

/// `⌊n / d⌋` for `d > 0`.
pub(crate) fn floor_div(n: i128, d: i128) -> i128 {
    assert!(d > 0, "floor division by non-positive {d}");
    n.div_euclid(d)
}

pub(crate) fn narrow(v: i128, what: &str) -> Result<i64> {
    i64::try_from(v).map_err(|_| FrobError::Resource(format!("{what} overflows 64 bits: {v}")))
}

/// Two generators `a < b` with `gcd(a, b) = 1` and `a ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoprimePair {
    a: i64,
    b: i64,
}

impl CoprimePair {
    pub fn new(a: i64, b: i64) -> Result<CoprimePair> {
        if a < 2 {
            return Err(FrobError::Domain(format!(
                "generator a must be at least 2, got {a}"
            )));
        }
        if b <= a {
            return Err(FrobError::Domain(format!(
                "generators must satisfy a < b, got ({a}, {b})"
            )));
        }
        if b > MAX_GENERATOR {
            return Err(FrobError::Resource(format!(
                "generator {b} exceeds the supported maximum {MAX_GENERATOR}"
            )));
        }
        if gcd(a, b) != 1 {
            return Err(FrobError::Domain(format!("gcd({a}, {b}) = {} ≠ 1", gcd(a, b))));
        }
        Ok(CoprimePair { a, b })
    }

    /// Like [`CoprimePair::new`] but accepts the generators in either order.
    pub fn sorted(x: i64, y: i64) -> Result<CoprimePair> {
        CoprimePair::new(x.min(y), x.max(y))
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `a·b`; never overflows because both generators are at most 2³¹.
    pub fn product(&self) -> i64 {
        self.a * self.b
    }
}

/// The unique `(x1, y1)` with `a·x1 + b·y1 = c` and `0 ≤ x1 < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub x1: i64,
    pub y1: i64,
}

pub fn solve_congruence(pair: CoprimePair, c: i64) -> Result<CongruenceSolution> {
    if c < 1 {
        return Err(FrobError::Domain(format!("target must be positive, got {c}")));
    }
    let (a, b) = (pair.a as i128, pair.b as i128);
    let inv = mod_inverse(pair.a, pair.b)? as i128;
    let x1 = ((c as i128).rem_euclid(b) * inv).rem_euclid(b);
    let y1 = exact_div(c as i128 - a * x1, b);
    Ok(CongruenceSolution {
        x1: x1 as i64,
        y1: narrow(y1, "congruence solution")?,
    })
}

/// Sylvester: `g(a, b) = ab − a − b`.
pub fn frobenius_two(pair: CoprimePair) -> i64 {
    pair.a * pair.b - pair.a - pair.b
}
