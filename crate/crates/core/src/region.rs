//! The lattice strip `D` attached to a coprime pair `(a, b)`.
//!
//! A point `(x, y)` carries the value `a·x + b·y`. Inside the box
//! `0 ≤ x < b, |y| < a` with `0 < ax + by < ab`, points above the x-axis are
//! blue (values `ax + by` with `x, y > 0`) and points below are red (values
//! `ab − ax − by`). Axis points with values in `[0, ab]` are green. Red points
//! whose value exceeds `b` are exactly the third generators `c` that lower the
//! Frobenius number below `g(a, b)`.

use serde::Serialize;

use crate::arith::{exact_div, floor_div, solve_congruence, CoprimePair};
use crate::error::{Budget, FrobError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> LatticePoint {
        LatticePoint { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointColor {
    Green,
    Blue,
    Red,
    Outside,
}

impl PointColor {
    pub fn name(self) -> &'static str {
        match self {
            PointColor::Green => "green",
            PointColor::Blue => "blue",
            PointColor::Red => "red",
            PointColor::Outside => "outside",
        }
    }
}

/// Brauer's split of `0 < c < ab`: either `ax + by` or `ab − ax − by` with
/// `x, y > 0`, never both, unless `a | c` or `b | c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrauerForm {
    PositiveForm { x: i64, y: i64 },
    NegativeForm { x: i64, y: i64 },
    GreenMultiple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionCensus {
    pub blue_count: u64,
    pub red_count: u64,
    pub green_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionPoints {
    pub blue: Vec<LatticePoint>,
    pub red: Vec<LatticePoint>,
    pub green: Vec<LatticePoint>,
    pub census: RegionCensus,
}

/// An exceptional third generator together with its red point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExceptionalValue {
    pub c: i64,
    pub point: LatticePoint,
}

pub fn linear_form(pair: CoprimePair, p: LatticePoint) -> i128 {
    pair.a() as i128 * p.x as i128 + pair.b() as i128 * p.y as i128
}

pub fn classify_point(pair: CoprimePair, p: LatticePoint) -> PointColor {
    let (a, b) = (pair.a(), pair.b());
    let ab = pair.product() as i128;
    let value = linear_form(pair, p);
    if (p.x == 0 || p.y == 0) && (0..=ab).contains(&value) {
        return PointColor::Green;
    }
    let in_strip = (0..b).contains(&p.x) && p.y.abs() < a && 0 < value && value < ab;
    match (in_strip, p.x > 0, p.y.signum()) {
        (true, true, 1) => PointColor::Blue,
        (true, true, -1) => PointColor::Red,
        _ => PointColor::Outside,
    }
}

/// `(x, y) ↦ (b − x, −y)`, swapping blue and red; the two values sum to `ab`.
pub fn mirror_point(pair: CoprimePair, p: LatticePoint) -> Result<LatticePoint> {
    match classify_point(pair, p) {
        PointColor::Blue | PointColor::Red => Ok(LatticePoint::new(pair.b() - p.x, -p.y)),
        _ => Err(FrobError::NotInRegion(p)),
    }
}

pub fn enumerate_region(pair: CoprimePair) -> Result<RegionPoints> {
    enumerate_region_within(pair, Budget::default())
}

/// Lists every blue, red and green point, each list sorted by `(x, y)`.
pub fn enumerate_region_within(pair: CoprimePair, budget: Budget) -> Result<RegionPoints> {
    let (a, b) = (pair.a(), pair.b());
    let ab = pair.product();
    budget.check(ab as i128, "region enumeration")?;

    let mut blue = Vec::new();
    let mut red = Vec::new();
    for x in 1..b {
        for y in -(a - 1)..=(a - 1) {
            if y == 0 {
                continue;
            }
            let value = a * x + b * y;
            if value <= 0 || value >= ab {
                continue;
            }
            // green is "divisible by a or b"; off the axes that never happens
            assert!(
                value % a != 0 && value % b != 0,
                "off-axis point ({x}, {y}) has value {value} divisible by a generator"
            );
            if y > 0 {
                blue.push(LatticePoint::new(x, y));
            } else {
                red.push(LatticePoint::new(x, y));
            }
        }
    }

    let mut green: Vec<LatticePoint> = (0..=b)
        .map(|x| LatticePoint::new(x, 0))
        .chain((1..=a).map(|y| LatticePoint::new(0, y)))
        .collect();
    green.sort_unstable();

    let census = RegionCensus {
        blue_count: blue.len() as u64,
        red_count: red.len() as u64,
        green_count: green.len() as u64,
    };
    Ok(RegionPoints {
        blue,
        red,
        green,
        census,
    })
}

pub fn brauer_form(pair: CoprimePair, c: i64) -> Result<BrauerForm> {
    let (a, b) = (pair.a(), pair.b());
    if c <= 0 || c >= pair.product() {
        return Err(FrobError::Domain(format!(
            "Brauer classification needs 0 < c < ab = {}, got {c}",
            pair.product()
        )));
    }
    if c % a == 0 || c % b == 0 {
        return Ok(BrauerForm::GreenMultiple);
    }
    let sol = solve_congruence(pair, c)?;
    // y1 = 0 would mean a | c, x1 = 0 would mean b | c
    debug_assert!(sol.x1 > 0 && sol.y1 != 0);
    if sol.y1 > 0 {
        Ok(BrauerForm::PositiveForm { x: sol.x1, y: sol.y1 })
    } else {
        Ok(BrauerForm::NegativeForm {
            x: b - sol.x1,
            y: -sol.y1,
        })
    }
}

/// The red point carrying value `c`, if `c` is exceptional for the pair.
pub fn exceptional_point(pair: CoprimePair, c: i64) -> Result<Option<LatticePoint>> {
    if c <= pair.b() {
        return Err(FrobError::Domain(format!(
            "exceptional values must exceed b = {}, got {c}",
            pair.b()
        )));
    }
    if c >= pair.product() {
        return Ok(None);
    }
    Ok(match brauer_form(pair, c)? {
        BrauerForm::NegativeForm { x, y } => Some(LatticePoint::new(pair.b() - x, -y)),
        _ => None,
    })
}

/// Whether `g(a, b, c) < g(a, b)`, decided geometrically.
pub fn is_exceptional(pair: CoprimePair, c: i64) -> Result<bool> {
    Ok(exceptional_point(pair, c)?.is_some())
}

pub fn enumerate_exceptional(pair: CoprimePair) -> Result<Vec<ExceptionalValue>> {
    enumerate_exceptional_within(pair, Budget::default())
}

/// Red points strictly above `ax + by = b`, by descending value. The first
/// entry, when present, is `g(a, b)` at `(b − 1, −1)`.
pub fn enumerate_exceptional_within(pair: CoprimePair, budget: Budget) -> Result<Vec<ExceptionalValue>> {
    let (a, b) = (pair.a(), pair.b());
    budget.check(pair.product() as i128, "exceptional enumeration")?;
    let mut out = Vec::new();
    for x in 1..b {
        // smallest y with a·x + b·y > b
        let y_min = floor_div((b - a * x) as i128, b as i128) as i64 + 1;
        for y in y_min.max(-(a - 1))..0 {
            out.push(ExceptionalValue {
                c: a * x + b * y,
                point: LatticePoint::new(x, y),
            });
        }
    }
    out.sort_unstable_by_key(|v| std::cmp::Reverse(v.c));
    assert!(
        out.windows(2).all(|w| w[0].c > w[1].c),
        "two red points share a value"
    );
    Ok(out)
}

/// `(a − 3)(b − 1)/2 + ⌊b/a⌋`.
pub fn count_exceptional(pair: CoprimePair) -> u64 {
    let (a, b) = (pair.a() as i128, pair.b() as i128);
    let half = exact_div((a - 3) * (b - 1), 2);
    (half + floor_div(b, a)) as u64
}
