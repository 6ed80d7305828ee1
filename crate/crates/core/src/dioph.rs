//! Ten exponential Diophantine equations over the naturals, with closed-form
//! solution families, an exhaustive search oracle, and cross-verification of
//! the two.
//!
//!   I    ((x+y)/2)^z = x^z - y^z          (x + y even, x > y)
//!   II   (x+y)^z = (2x)^z + y^z
//!   III  (x+y)^z = (3x)^z + y^z
//!   IV   (y-x)^(x+y) = x^y                (y > x)
//!   V    (y-x)^(x+y) = y^x                (y > x)
//!   VI   (x+y)^(x-y) = x^y                (x >= y)
//!   VII  (x+y)^(x-y) = y^x                (x >= y)
//!   VIII (x+y)^y = (x-y)^x                (x > y)
//!   IX   (x-y)^(x+y) = x^(x-y)            (x > y)
//!   X    (x+y)^(x-y) = (x-y)^x            (x > y)
//!
//! The bundled families claim III, V and IX empty and provide no family for
//! X; `cross_verify` checks each claim against the oracle inside a box and
//! reports mismatches in both directions rather than trusting either side.

use crate::arith::factorize;
use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EquationId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
}

impl EquationId {
    pub const ALL: [EquationId; 10] = [
        EquationId::I,
        EquationId::II,
        EquationId::III,
        EquationId::IV,
        EquationId::V,
        EquationId::VI,
        EquationId::VII,
        EquationId::VIII,
        EquationId::IX,
        EquationId::X,
    ];

    /// Equations I..III carry the extra exponent variable z.
    pub fn has_z(self) -> bool {
        matches!(self, EquationId::I | EquationId::II | EquationId::III)
    }

    pub fn family_status(self) -> FamilyStatus {
        match self {
            EquationId::III | EquationId::V | EquationId::IX => FamilyStatus::ClaimedEmpty,
            EquationId::X => FamilyStatus::Unknown,
            _ => FamilyStatus::Explicit,
        }
    }

    /// The defining relation, human readable.
    pub fn relation(self) -> &'static str {
        match self {
            EquationId::I => "((x+y)/2)^z = x^z - y^z",
            EquationId::II => "(x+y)^z = (2x)^z + y^z",
            EquationId::III => "(x+y)^z = (3x)^z + y^z",
            EquationId::IV => "(y-x)^(x+y) = x^y, y > x",
            EquationId::V => "(y-x)^(x+y) = y^x, y > x",
            EquationId::VI => "(x+y)^(x-y) = x^y, x >= y",
            EquationId::VII => "(x+y)^(x-y) = y^x, x >= y",
            EquationId::VIII => "(x+y)^y = (x-y)^x, x > y",
            EquationId::IX => "(x-y)^(x+y) = x^(x-y), x > y",
            EquationId::X => "(x+y)^(x-y) = (x-y)^x, x > y",
        }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EquationId::I => "I",
            EquationId::II => "II",
            EquationId::III => "III",
            EquationId::IV => "IV",
            EquationId::V => "V",
            EquationId::VI => "VI",
            EquationId::VII => "VII",
            EquationId::VIII => "VIII",
            EquationId::IX => "IX",
            EquationId::X => "X",
        };
        f.write_str(s)
    }
}

impl FromStr for EquationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(EquationId::I),
            "II" | "2" => Ok(EquationId::II),
            "III" | "3" => Ok(EquationId::III),
            "IV" | "4" => Ok(EquationId::IV),
            "V" | "5" => Ok(EquationId::V),
            "VI" | "6" => Ok(EquationId::VI),
            "VII" | "7" => Ok(EquationId::VII),
            "VIII" | "8" => Ok(EquationId::VIII),
            "IX" | "9" => Ok(EquationId::IX),
            "X" | "10" => Ok(EquationId::X),
            other => Err(Error::domain(format!("unknown equation id: {other}"))),
        }
    }
}

/// Whether a closed-form family exists for an equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyStatus {
    /// A parametric family (or finite explicit list) is provided.
    Explicit,
    /// The family table claims the equation has no solutions.
    ClaimedEmpty,
    /// No family is provided; the oracle is the only coverage.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    Search,
    ClosedForm { family: String, param: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophSolution {
    pub equation: EquationId,
    #[serde(with = "crate::serde_nat")]
    pub x: Natural,
    #[serde(with = "crate::serde_nat")]
    pub y: Natural,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<u64>,
    pub provenance: Provenance,
}

impl DiophSolution {
    fn key(&self) -> (Natural, Natural, Option<u64>) {
        (self.x.clone(), self.y.clone(), self.z)
    }
}

/// Cap on the bit-length of values the exact evaluator will materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalBudget {
    pub max_bits: u64,
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget {
            max_bits: 1_000_000,
        }
    }
}

fn pow_checked(base: &Natural, exp: &Natural, budget: &EvalBudget) -> Result<Natural> {
    if base.is_one() || exp.is_zero() {
        return Ok(if exp.is_zero() {
            BigUint::one()
        } else {
            base.clone()
        });
    }
    let exp_f = exp.to_f64().unwrap_or(f64::INFINITY);
    let bits_needed = exp_f * (base.bits() as f64);
    if bits_needed > budget.max_bits as f64 {
        return Err(Error::BitBudgetExceeded {
            bits: bits_needed.min(u64::MAX as f64) as u64,
            budget: budget.max_bits,
        });
    }
    let exp_u32 = exp
        .to_u32()
        .ok_or(Error::BitBudgetExceeded {
            bits: u64::MAX,
            budget: budget.max_bits,
        })?;
    Ok(base.pow(exp_u32))
}

/// Exact left and right side values for a candidate tuple. Side conditions
/// (strictness, parity for I, z arity) are domain errors, not inequalities.
pub fn evaluate(
    equation: EquationId,
    x: &Natural,
    y: &Natural,
    z: Option<u64>,
    budget: &EvalBudget,
) -> Result<(Natural, Natural)> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::domain("variables must be naturals (>= 1)"));
    }
    if equation.has_z() != z.is_some() {
        return Err(Error::domain(format!(
            "equation {equation} {} an exponent z",
            if equation.has_z() {
                "requires"
            } else {
                "does not take"
            }
        )));
    }
    let b = budget;
    match equation {
        EquationId::I => {
            let z = BigUint::from(z.unwrap());
            if x <= y {
                return Err(Error::domain("equation I needs x > y"));
            }
            let sum = x + y;
            if sum.bit(0) {
                return Err(Error::domain("equation I needs x + y even"));
            }
            let lhs = pow_checked(&(sum >> 1), &z, b)?;
            let rhs = pow_checked(x, &z, b)? - pow_checked(y, &z, b)?;
            Ok((lhs, rhs))
        }
        EquationId::II | EquationId::III => {
            let z = BigUint::from(z.unwrap());
            let mult: u32 = if equation == EquationId::II { 2 } else { 3 };
            let lhs = pow_checked(&(x + y), &z, b)?;
            let rhs = pow_checked(&(x * mult), &z, b)? + pow_checked(y, &z, b)?;
            Ok((lhs, rhs))
        }
        EquationId::IV | EquationId::V => {
            if y <= x {
                return Err(Error::domain("needs y > x"));
            }
            let lhs = pow_checked(&(y - x), &(x + y), b)?;
            let rhs = if equation == EquationId::IV {
                pow_checked(x, y, b)?
            } else {
                pow_checked(y, x, b)?
            };
            Ok((lhs, rhs))
        }
        EquationId::VI | EquationId::VII => {
            if x < y {
                return Err(Error::domain("needs x >= y"));
            }
            let lhs = pow_checked(&(x + y), &(x - y), b)?;
            let rhs = if equation == EquationId::VI {
                pow_checked(x, y, b)?
            } else {
                pow_checked(y, x, b)?
            };
            Ok((lhs, rhs))
        }
        EquationId::VIII => {
            if x <= y {
                return Err(Error::domain("needs x > y"));
            }
            let lhs = pow_checked(&(x + y), y, b)?;
            let rhs = pow_checked(&(x - y), x, b)?;
            Ok((lhs, rhs))
        }
        EquationId::IX => {
            if x <= y {
                return Err(Error::domain("needs x > y"));
            }
            let lhs = pow_checked(&(x - y), &(x + y), b)?;
            let rhs = pow_checked(x, &(x - y), b)?;
            Ok((lhs, rhs))
        }
        EquationId::X => {
            if x <= y {
                return Err(Error::domain("needs x > y"));
            }
            let lhs = pow_checked(&(x + y), &(x - y), b)?;
            let rhs = pow_checked(&(x - y), x, b)?;
            Ok((lhs, rhs))
        }
    }
}

/// a^b = c^d over the naturals, decided on prime signatures so family
/// members too large to materialize still get exact verification.
fn powers_equal(a: &Natural, b: &Natural, c: &Natural, d: &Natural) -> bool {
    let lhs_one = a.is_one() || b.is_zero();
    let rhs_one = c.is_one() || d.is_zero();
    if lhs_one || rhs_one {
        return lhs_one && rhs_one;
    }
    let signature = |base: &Natural, exp: &Natural| -> BTreeMap<Natural, Natural> {
        let f = factorize(base).expect("family bases are small and smooth");
        assert!(f.is_complete(), "family base must factor completely");
        f.factors
            .into_iter()
            .map(|e| (e.prime, BigUint::from(e.exponent) * exp))
            .collect()
    };
    signature(a, b) == signature(c, d)
}

/// Exact check that a tuple solves its equation, without a bit budget:
/// falls back to prime-signature comparison for the pure-power equations
/// when direct evaluation would be enormous.
pub fn verify_solution(equation: EquationId, x: &Natural, y: &Natural, z: Option<u64>) -> bool {
    let generous = EvalBudget { max_bits: 1 << 22 };
    match evaluate(equation, x, y, z, &generous) {
        Ok((lhs, rhs)) => lhs == rhs,
        Err(Error::BitBudgetExceeded { .. }) => match equation {
            EquationId::IV => powers_equal(&(y - x), &(x + y), x, y),
            EquationId::V => powers_equal(&(y - x), &(x + y), y, x),
            EquationId::VI => powers_equal(&(x + y), &(x - y), x, y),
            EquationId::VII => powers_equal(&(x + y), &(x - y), y, x),
            EquationId::VIII => powers_equal(&(x + y), y, &(x - y), x),
            EquationId::IX => powers_equal(&(x - y), &(x + y), x, &(x - y)),
            EquationId::X => powers_equal(&(x + y), &(x - y), &(x - y), x),
            // the sum equations never exceed the budget at family scale
            _ => false,
        },
        Err(_) => false,
    }
}

/// Outcome of an exhaustive box scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub solutions: Vec<DiophSolution>,
    /// Candidates skipped because exact evaluation would exceed the bit
    /// budget. Zero on the default boxes.
    pub skipped: u64,
}

/// Exhaustive scan of 1 <= x <= x_max, 1 <= y <= y_max (and 1 <= z <= z_max
/// for I..III), respecting each equation's side conditions.
pub fn search(equation: EquationId, x_max: u64, y_max: u64, z_max: Option<u64>) -> SearchOutcome {
    search_with(equation, x_max, y_max, z_max, &EvalBudget::default())
}

pub fn search_with(
    equation: EquationId,
    x_max: u64,
    y_max: u64,
    z_max: Option<u64>,
    budget: &EvalBudget,
) -> SearchOutcome {
    let mut solutions = Vec::new();
    let mut skipped = 0u64;
    if equation.has_z() {
        let z_max = z_max.unwrap_or(8);
        for x in 1..=x_max {
            for y in 1..=y_max {
                for z in 1..=z_max {
                    let xn = BigUint::from(x);
                    let yn = BigUint::from(y);
                    match evaluate(equation, &xn, &yn, Some(z), budget) {
                        Ok((lhs, rhs)) if lhs == rhs => solutions.push(DiophSolution {
                            equation,
                            x: xn,
                            y: yn,
                            z: Some(z),
                            provenance: Provenance::Search,
                        }),
                        Ok(_) => {}
                        Err(Error::BitBudgetExceeded { .. }) => skipped += 1,
                        Err(_) => {} // side condition: not part of the domain
                    }
                }
            }
        }
    } else {
        for x in 1..=x_max {
            for y in 1..=y_max {
                if !candidate_plausible(equation, x, y) {
                    continue;
                }
                let xn = BigUint::from(x);
                let yn = BigUint::from(y);
                match evaluate(equation, &xn, &yn, None, budget) {
                    Ok((lhs, rhs)) if lhs == rhs => solutions.push(DiophSolution {
                        equation,
                        x: xn,
                        y: yn,
                        z: None,
                        provenance: Provenance::Search,
                    }),
                    Ok(_) => {}
                    Err(Error::BitBudgetExceeded { .. }) => skipped += 1,
                    Err(_) => {}
                }
            }
        }
    }
    solutions.sort_by_key(|s| s.key());
    SearchOutcome { solutions, skipped }
}

/// Cheap log-scale screen for the two-variable equations. The two sides can
/// only be equal if their logarithms agree; f64 evaluation of those is
/// accurate to ~1e-11 here, so a gap above 1e-6 proves inequality while
/// anything closer goes to exact evaluation.
fn candidate_plausible(equation: EquationId, x: u64, y: u64) -> bool {
    let (lhs, rhs): (f64, f64) = match equation {
        EquationId::IV if y > x => (
            ((y - x) as f64).ln() * (x + y) as f64,
            (x as f64).ln() * y as f64,
        ),
        EquationId::V if y > x => (
            ((y - x) as f64).ln() * (x + y) as f64,
            (y as f64).ln() * x as f64,
        ),
        EquationId::VI if x >= y => (
            ((x + y) as f64).ln() * (x - y) as f64,
            (x as f64).ln() * y as f64,
        ),
        EquationId::VII if x >= y => (
            ((x + y) as f64).ln() * (x - y) as f64,
            (y as f64).ln() * x as f64,
        ),
        EquationId::VIII if x > y => (
            ((x + y) as f64).ln() * y as f64,
            ((x - y) as f64).ln() * x as f64,
        ),
        EquationId::IX if x > y => (
            ((x - y) as f64).ln() * (x + y) as f64,
            (x as f64).ln() * (x - y) as f64,
        ),
        EquationId::X if x > y => (
            ((x + y) as f64).ln() * (x - y) as f64,
            ((x - y) as f64).ln() * x as f64,
        ),
        _ => return false, // side condition fails; skip without evaluating
    };
    (lhs - rhs).abs() <= 1e-6 * lhs.abs().max(rhs.abs()).max(1.0)
}

/// One parametric branch of a closed-form family. Members are strictly
/// monotone in the parameter, so box enumeration can stop at the first
/// member past the edge.
struct FamilyBranch {
    name: &'static str,
    first_param: u64,
    /// None marks an unbounded branch; fixed solutions set last = first.
    last_param: Option<u64>,
    member: fn(u64) -> (Natural, Natural, Option<u64>),
}

fn family_branches(equation: EquationId) -> Vec<FamilyBranch> {
    match equation {
        EquationId::I => vec![
            FamilyBranch {
                name: "linear",
                first_param: 1,
                last_param: None,
                member: |k| (BigUint::from(3 * k), BigUint::from(k), Some(1)),
            },
            FamilyBranch {
                name: "quadratic",
                first_param: 1,
                last_param: None,
                member: |k| (BigUint::from(5 * k), BigUint::from(3 * k), Some(2)),
            },
        ],
        EquationId::II => vec![FamilyBranch {
            name: "pythagorean",
            first_param: 1,
            last_param: None,
            member: |t| (BigUint::from(2 * t), BigUint::from(3 * t), Some(2)),
        }],
        EquationId::IV => vec![FamilyBranch {
            name: "fixed",
            first_param: 1,
            last_param: Some(1),
            member: |_| (BigUint::one(), BigUint::from(2u32), None),
        }],
        EquationId::VI => vec![FamilyBranch {
            name: "fixed",
            first_param: 1,
            last_param: Some(1),
            member: |_| (BigUint::one(), BigUint::one(), None),
        }],
        EquationId::VII => vec![FamilyBranch {
            name: "tower",
            first_param: 1,
            last_param: None,
            member: |t| {
                let d = BigUint::from(t + 1).pow((t - 1) as u32);
                (&d * t, d, None)
            },
        }],
        EquationId::VIII => vec![
            FamilyBranch {
                name: "diff1",
                first_param: 2,
                last_param: None,
                member: |x1| {
                    let d = BigUint::from(2 * x1 - 1).pow((x1 - 1) as u32);
                    (&d * x1, &d * (x1 - 1), None)
                },
            },
            FamilyBranch {
                name: "diff2",
                first_param: 1,
                last_param: None,
                member: |n| {
                    let half = BigUint::from(2 * n).pow((4 * n * n - 1) as u32) >> 1;
                    (&half * (4 * n * n + 1), &half * (4 * n * n - 1), None)
                },
            },
        ],
        EquationId::III | EquationId::V | EquationId::IX | EquationId::X => Vec::new(),
    }
}

fn family_member(
    equation: EquationId,
    branch: &FamilyBranch,
    param: u64,
) -> DiophSolution {
    let (x, y, z) = (branch.member)(param);
    let sol = DiophSolution {
        equation,
        x,
        y,
        z,
        provenance: Provenance::ClosedForm {
            family: branch.name.to_string(),
            param,
        },
    };
    assert!(
        verify_solution(equation, &sol.x, &sol.y, sol.z),
        "generated family member fails its own equation: {sol:?}"
    );
    sol
}

/// The closed-form families, generated for parameters in `params` and
/// self-checked against the defining relation at generation time.
///
///   I:    (3k, k, 1) and (5k, 3k, 2)
///   II:   (2t, 3t, 2)
///   IV:   the single solution (1, 2)
///   VI:   the single solution (1, 1)
///   VII:  (t(t+1)^(t-1), (t+1)^(t-1))
///   VIII: two branches, by reduced difference x1 - y1:
///           diff1, x1 >= 2: (x1 * d, (x1-1) * d) with d = (2x1-1)^(x1-1)
///           diff2, n >= 1:  ((4n^2+1) * h, (4n^2-1) * h) with
///                           h = (2n)^(4n^2-1) / 2
///   III, V, IX: claimed empty; X: no family known.
pub fn closed_form(
    equation: EquationId,
    params: std::ops::RangeInclusive<u64>,
) -> Vec<DiophSolution> {
    let mut out = Vec::new();
    for branch in family_branches(equation) {
        let lo = (*params.start()).max(branch.first_param);
        let hi = branch.last_param.unwrap_or(u64::MAX).min(*params.end());
        for param in lo..=hi.min(lo.saturating_add(1 << 20)) {
            out.push(family_member(equation, &branch, param));
        }
    }
    out.sort_by_key(|s| s.key());
    out
}

/// Family members falling inside the search box; generation walks each
/// monotone branch and stops at the first member past the edge.
fn family_in_box(
    equation: EquationId,
    x_max: u64,
    y_max: u64,
    z_max: Option<u64>,
) -> Vec<DiophSolution> {
    let x_lim = BigUint::from(x_max);
    let y_lim = BigUint::from(y_max);
    let mut out = Vec::new();
    for branch in family_branches(equation) {
        let mut param = branch.first_param;
        loop {
            let sol = family_member(equation, &branch, param);
            if sol.x > x_lim || sol.y > y_lim {
                break;
            }
            if sol.z.map_or(true, |z| z <= z_max.unwrap_or(u64::MAX)) {
                out.push(sol);
            }
            if branch.last_param == Some(param) {
                break;
            }
            param += 1;
        }
    }
    out.sort_by_key(|s| s.key());
    out
}

/// Search and closed form compared on the same box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub equation: EquationId,
    pub x_max: u64,
    pub y_max: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_max: Option<u64>,
    pub family_status: FamilyStatus,
    pub search_solutions: Vec<DiophSolution>,
    pub family_solutions: Vec<DiophSolution>,
    /// Oracle hits the family does not generate.
    pub missed_by_family: Vec<DiophSolution>,
    /// Family members the oracle did not find (should never happen).
    pub extra_in_family: Vec<DiophSolution>,
    pub matched: bool,
    pub skipped_candidates: u64,
}

impl CrossReport {
    /// A mismatch is a violation unless no family is claimed at all.
    pub fn is_violation(&self) -> bool {
        self.family_status != FamilyStatus::Unknown && !self.matched
    }
}

pub fn cross_verify(
    equation: EquationId,
    x_max: u64,
    y_max: u64,
    z_max: Option<u64>,
) -> CrossReport {
    let z_max = if equation.has_z() { z_max.or(Some(8)) } else { None };
    let outcome = search(equation, x_max, y_max, z_max);
    let family = family_in_box(equation, x_max, y_max, z_max);

    let search_keys: Vec<_> = outcome.solutions.iter().map(|s| s.key()).collect();
    let family_keys: Vec<_> = family.iter().map(|s| s.key()).collect();
    let missed_by_family: Vec<DiophSolution> = outcome
        .solutions
        .iter()
        .filter(|s| !family_keys.contains(&s.key()))
        .cloned()
        .collect();
    let extra_in_family: Vec<DiophSolution> = family
        .iter()
        .filter(|s| !search_keys.contains(&s.key()))
        .cloned()
        .collect();
    let matched = missed_by_family.is_empty() && extra_in_family.is_empty();

    CrossReport {
        equation,
        x_max,
        y_max,
        z_max,
        family_status: equation.family_status(),
        search_solutions: outcome.solutions,
        family_solutions: family,
        missed_by_family,
        extra_in_family,
        matched,
        skipped_candidates: outcome.skipped,
    }
}

/// Whether |a - b| divides a^n (equivalently b^n) for coprime a != b.
/// Divisibility can only happen with |a - b| = 1, and that consequence is
/// asserted, as is the a/b symmetry.
pub fn lemma1_holds(a: &Natural, b: &Natural, n: u64) -> Result<bool> {
    if a == b {
        return Err(Error::domain("lemma needs a != b"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime);
    }
    let diff = if a > b { a - b } else { b - a };
    if diff.is_one() {
        return Ok(true);
    }
    let n_nat = BigUint::from(n);
    let divides_a = a.modpow(&n_nat, &diff).is_zero();
    let divides_b = b.modpow(&n_nat, &diff).is_zero();
    assert_eq!(divides_a, divides_b, "a^n and b^n agree mod |a-b|");
    assert!(!divides_a, "divisibility with |a - b| > 1 contradicts coprimality");
    Ok(divides_a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    fn pairs(solutions: &[DiophSolution]) -> Vec<(u64, u64)> {
        solutions
            .iter()
            .map(|s| (s.x.to_u64().unwrap(), s.y.to_u64().unwrap()))
            .collect()
    }

    fn triples(solutions: &[DiophSolution]) -> Vec<(u64, u64, u64)> {
        solutions
            .iter()
            .map(|s| (s.x.to_u64().unwrap(), s.y.to_u64().unwrap(), s.z.unwrap()))
            .collect()
    }

    #[test]
    fn evaluate_examples() {
        let b = EvalBudget::default();
        assert_eq!(
            evaluate(EquationId::I, &nat(5), &nat(3), Some(2), &b).unwrap(),
            (nat(16), nat(16))
        );
        assert_eq!(
            evaluate(EquationId::II, &nat(2), &nat(3), Some(2), &b).unwrap(),
            (nat(25), nat(25))
        );
        assert_eq!(
            evaluate(EquationId::VIII, &nat(6), &nat(3), None, &b).unwrap(),
            (nat(729), nat(729))
        );
        // x + y odd is outside equation I's domain
        assert!(matches!(
            evaluate(EquationId::I, &nat(4), &nat(3), Some(2), &b),
            Err(Error::Domain(_))
        ));
        // bit budget refusal is explicit
        let tiny = EvalBudget { max_bits: 8 };
        assert!(matches!(
            evaluate(EquationId::X, &nat(600), &nat(2), None, &tiny),
            Err(Error::BitBudgetExceeded { .. })
        ));
    }

    #[test]
    fn search_iv_through_x() {
        assert_eq!(pairs(&search(EquationId::IV, 200, 200, None).solutions), vec![(1, 2)]);
        assert!(search(EquationId::V, 200, 200, None).solutions.is_empty());
        assert_eq!(pairs(&search(EquationId::VI, 200, 200, None).solutions), vec![(1, 1)]);
        assert_eq!(
            pairs(&search(EquationId::VII, 200, 200, None).solutions),
            vec![(1, 1), (6, 3), (48, 16)]
        );
        assert_eq!(
            pairs(&search(EquationId::VIII, 200, 200, None).solutions),
            vec![(6, 3), (20, 12), (75, 50)]
        );
        assert!(search(EquationId::IX, 200, 200, None).solutions.is_empty());
        assert_eq!(
            pairs(&search(EquationId::X, 200, 200, None).solutions),
            vec![(6, 2), (6, 3)]
        );
    }

    #[test]
    fn search_sum_equations() {
        let one = search(EquationId::I, 30, 30, Some(8)).solutions;
        // (3k, k, 1) for 3k <= 30 and (5k, 3k, 2) for 5k <= 30
        let mut expected = Vec::new();
        for k in 1..=10 {
            expected.push((3 * k, k, 1));
        }
        for k in 1..=6 {
            expected.push((5 * k, 3 * k, 2));
        }
        expected.sort();
        assert_eq!(triples(&one), expected);

        let two = search(EquationId::II, 30, 30, Some(8)).solutions;
        let expected: Vec<_> = (1..=10).map(|t| (2 * t, 3 * t, 2)).collect();
        assert_eq!(triples(&two), expected);

        // the claimed-empty equation III actually carries (t, 4t, 2)
        let three = search(EquationId::III, 30, 30, Some(8)).solutions;
        let expected: Vec<_> = (1..=7).map(|t| (t, 4 * t, 2)).collect();
        assert_eq!(triples(&three), expected);
    }

    #[test]
    fn closed_form_members_verify() {
        for eq in EquationId::ALL {
            let members = closed_form(eq, 1..=6);
            for m in &members {
                assert!(verify_solution(eq, &m.x, &m.y, m.z), "{m:?}");
            }
        }
        // spot values
        let vii = closed_form(EquationId::VII, 2..=2);
        assert_eq!(pairs(&vii), vec![(6, 3)]);
        let viii = closed_form(EquationId::VIII, 1..=2);
        // diff1 at x1 = 2 gives (6, 3); diff2 at n = 1, 2 gives (20, 12)
        // and 2^29 * (17, 15)
        assert_eq!(
            pairs(&viii),
            vec![(6, 3), (20, 12), (17 << 29, 15 << 29)]
        );
        let one = closed_form(EquationId::I, 1..=1);
        assert_eq!(triples(&one), vec![(3, 1, 1), (5, 3, 2)]);
    }

    #[test]
    fn closed_form_large_members_verify_by_signature() {
        // (x+y)^y = (x-y)^x at n = 2: values near 2^34 * 17 with huge exponents
        let viii = closed_form(EquationId::VIII, 1..=4);
        assert_eq!(viii.len(), 7); // diff1 for x1 in 2..=4, diff2 for n in 1..=4
        for m in &viii {
            assert!(verify_solution(EquationId::VIII, &m.x, &m.y, m.z));
        }
        let vii = closed_form(EquationId::VII, 1..=12);
        for m in &vii {
            assert!(verify_solution(EquationId::VII, &m.x, &m.y, m.z));
        }
    }

    #[test]
    fn cross_verification_small_boxes() {
        let r = cross_verify(EquationId::II, 60, 60, Some(8));
        assert!(r.matched && !r.is_violation());
        assert_eq!(r.search_solutions.len(), 20);

        let r = cross_verify(EquationId::IV, 100, 100, None);
        assert!(r.matched);
        assert_eq!(pairs(&r.search_solutions), vec![(1, 2)]);

        let r = cross_verify(EquationId::V, 100, 100, None);
        assert!(r.matched && r.search_solutions.is_empty());

        let r = cross_verify(EquationId::IX, 100, 100, None);
        assert!(r.matched && r.search_solutions.is_empty());

        // X: no family; (6,2) is present; mismatches are not violations
        let r = cross_verify(EquationId::X, 100, 100, None);
        assert_eq!(r.family_status, FamilyStatus::Unknown);
        assert!(!r.is_violation());
        assert!(pairs(&r.search_solutions).contains(&(6, 2)));

        // III: the claimed-empty family misses the oracle's solutions
        let r = cross_verify(EquationId::III, 60, 60, Some(8));
        assert_eq!(r.family_status, FamilyStatus::ClaimedEmpty);
        assert!(!r.matched && r.is_violation());
        assert_eq!(r.missed_by_family.len(), 15);
        assert!(r.extra_in_family.is_empty());
    }

    #[test]
    fn homogeneous_families_scale() {
        // I and II are homogeneous in (x, y): scaling a solution stays one
        let b = EvalBudget::default();
        for k in 1..=9u64 {
            let (l, r) = evaluate(EquationId::I, &nat(3 * k), &nat(k), Some(1), &b).unwrap();
            assert_eq!(l, r);
            let (l, r) = evaluate(EquationId::I, &nat(5 * k), &nat(3 * k), Some(2), &b).unwrap();
            assert_eq!(l, r);
            let (l, r) = evaluate(EquationId::II, &nat(2 * k), &nat(3 * k), Some(2), &b).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn lemma1_examples() {
        assert_eq!(lemma1_holds(&nat(4), &nat(3), 5), Ok(true));
        assert_eq!(lemma1_holds(&nat(5), &nat(3), 4), Ok(false));
        assert_eq!(lemma1_holds(&nat(7), &nat(2), 3), Ok(false));
        assert!(lemma1_holds(&nat(3), &nat(3), 2).is_err());
        assert_eq!(lemma1_holds(&nat(6), &nat(3), 2), Err(Error::NotCoprime));
    }

    #[test]
    fn lemma1_sweep_small() {
        // coprime a != b <= 60: divisibility only ever happens at |a-b| = 1
        for a in 1u64..=60 {
            for b in 1..=60 {
                if a == b || !nat(a).gcd(&nat(b)).is_one() {
                    continue;
                }
                for n in 1..=6 {
                    let holds = lemma1_holds(&nat(a), &nat(b), n).unwrap();
                    assert_eq!(holds, a.abs_diff(b) == 1, "a={a} b={b} n={n}");
                }
            }
        }
    }
}
