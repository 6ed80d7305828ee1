//! Base-p repunits A = (p^q - 1)/(p - 1) = 1 + p + ... + p^(q-1): computing
//! them, classifying their prime divisors relative to p, and sweeping the
//! four divisor-structure claims.
//!
//! The four claims, for q an odd prime:
//!   1. p = 2q + 1 prime: exactly one prime divisor of A is below p and it
//!      is q itself; A has at least two distinct prime divisors.
//!   2. p an odd prime with p < 2q + 1: every prime divisor of A exceeds p.
//!   3. p in [2..q] or [q+2..2q] (p need not be prime): every prime divisor
//!      of A exceeds p. A second published reading, "exactly one divisor
//!      exceeds p", is recorded per instance but not enforced.
//!   4. p = q + 1 or p = 2q + 1 (p need not be prime): as in claim 1.
//!
//! In every case the other divisors r satisfy r = 1 (mod q) and p has
//! multiplicative order q modulo r; the reports check that too.

use crate::arith::{factorize_with, is_prime_u64, primes_up_to, FactorBudget, Factorization};
use crate::Natural;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Which claim a (p, q) pair falls under. Claim 1 wins over claim 4 and
/// claim 2 over claim 3 when both apply, so classification is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremCase {
    T1,
    T2,
    T3,
    T4,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "detail")]
pub enum Verdict {
    Consistent,
    Violation(String),
    /// The factorization budget ran out; carries the unfactored cofactor in
    /// decimal (the same value sits in `factorization.cofactor`).
    Indeterminate(String),
}

/// Both readings of claim 3, recorded for every instance it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremThreeReadings {
    /// All prime divisors exceed p.
    pub all_divisors_exceed_p: bool,
    /// Exactly one prime divisor exceeds p.
    pub exactly_one_exceeds_p: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepunitReport {
    #[serde(with = "crate::serde_nat")]
    pub p: Natural,
    pub q: u64,
    #[serde(rename = "A", with = "crate::serde_nat")]
    pub a: Natural,
    pub factorization: Factorization,
    /// Distinct prime divisors of A below p, ascending.
    #[serde(with = "crate::serde_nat::vec")]
    pub below_p: Vec<Natural>,
    /// Distinct prime divisors of A above p, ascending.
    #[serde(with = "crate::serde_nat::vec")]
    pub above_p: Vec<Natural>,
    /// Whether p itself divides A; always false since A = 1 (mod p).
    pub equal_p: bool,
    pub theorem_case: TheoremCase,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem3_readings: Option<TheoremThreeReadings>,
}

impl RepunitReport {
    pub fn is_violation(&self) -> bool {
        matches!(self.verdict, Verdict::Violation(_))
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self.verdict, Verdict::Indeterminate(_))
    }
}

/// (p^q - 1)/(p - 1) by Horner summation of 1 + p + ... + p^(q-1).
pub fn repunit_value(p: &Natural, q: u64) -> Natural {
    assert!(*p >= BigUint::from(2u32), "repunit base must be at least 2");
    assert!(q >= 1, "repunit length must be at least 1");
    let mut acc = BigUint::one();
    for _ in 1..q {
        acc = acc * p + 1u32;
    }
    // the closed form is the assertion, not the method
    debug_assert_eq!(&acc * (p - 1u32), p.pow(q as u32) - 1u32);
    acc
}

/// Sweep configuration: factorization effort and seed.
#[derive(Debug, Clone, Default)]
pub struct SweepConfig {
    pub budget: FactorBudget,
    pub seed: Option<u64>,
}

impl SweepConfig {
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(crate::arith::DEFAULT_FACTOR_SEED)
    }
}

fn theorem_case(p: &Natural, q: u64) -> TheoremCase {
    if q < 3 || !is_prime_u64(q) {
        return TheoremCase::None;
    }
    let q_nat = BigUint::from(q);
    let two_q_plus_1 = BigUint::from(2 * q + 1);
    let q_plus_1 = BigUint::from(q + 1);
    let p_is_odd_prime = p.bit(0) && crate::arith::is_prime(p).is_prime();
    if *p == two_q_plus_1 && p_is_odd_prime {
        return TheoremCase::T1;
    }
    if p_is_odd_prime && *p < two_q_plus_1 {
        return TheoremCase::T2;
    }
    if (*p >= BigUint::from(2u32) && *p <= q_nat)
        || (*p >= &q_plus_1 + 1u32 && *p <= BigUint::from(2 * q))
    {
        return TheoremCase::T3;
    }
    if *p == q_plus_1 || *p == two_q_plus_1 {
        return TheoremCase::T4;
    }
    TheoremCase::None
}

/// Checks shared by claims 1 and 4: below-p divisors are exactly {q},
/// at least two distinct prime divisors, and every other divisor r exceeds
/// p with r = 1 (mod q) and ord_r(p) = q.
fn check_unique_small_divisor(report: &RepunitReport) -> Option<String> {
    let q_nat = BigUint::from(report.q);
    if report.below_p != vec![q_nat.clone()] {
        return Some(format!(
            "(p={}, q={}): expected the only divisor below p to be q, found {:?}",
            report.p,
            report.q,
            report
                .below_p
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
        ));
    }
    if report.factorization.factors.len() < 2 {
        return Some(format!(
            "(p={}, q={}): fewer than two distinct prime divisors",
            report.p, report.q
        ));
    }
    check_large_divisors(report, true)
}

/// Every prime divisor r != q satisfies r > p, r = 1 (mod q), and p has
/// order exactly q mod r. Since q is prime the order check reduces to
/// p^q = 1 (mod r) together with p != 1 (mod r).
fn check_large_divisors(report: &RepunitReport, skip_q: bool) -> Option<String> {
    let q_nat = BigUint::from(report.q);
    for entry in &report.factorization.factors {
        let r = &entry.prime;
        if skip_q && *r == q_nat {
            continue;
        }
        if *r <= report.p {
            return Some(format!(
                "(p={}, q={}): prime divisor {} does not exceed p",
                report.p, report.q, r
            ));
        }
        if !((r - 1u32) % &q_nat).is_zero() {
            return Some(format!(
                "(p={}, q={}): prime divisor {} is not 1 mod q",
                report.p, report.q, r
            ));
        }
        if (&report.p % r).is_one() {
            return Some(format!(
                "(p={}, q={}): order of p mod {} is 1, expected q",
                report.p, report.q, r
            ));
        }
        if !report.p.modpow(&q_nat, r).is_one() {
            return Some(format!(
                "(p={}, q={}): p^q != 1 mod {}, order cannot be q",
                report.p, report.q, r
            ));
        }
    }
    None
}

/// Computes A = (p^q - 1)/(p - 1), factors it, splits its prime divisors
/// around p, and checks the claim applicable to (p, q).
pub fn classify_divisors(p: &Natural, q: u64) -> RepunitReport {
    classify_divisors_with(p, q, &SweepConfig::default())
}

pub fn classify_divisors_with(p: &Natural, q: u64, config: &SweepConfig) -> RepunitReport {
    assert!(*p >= BigUint::from(2u32) && q >= 2);
    let a = repunit_value(p, q);
    let factorization =
        factorize_with(&a, &config.budget, config.seed()).expect("A >= 3 for p >= 2, q >= 2");

    let mut below_p = Vec::new();
    let mut above_p = Vec::new();
    let mut equal_p = false;
    for entry in &factorization.factors {
        match entry.prime.cmp(p) {
            std::cmp::Ordering::Less => below_p.push(entry.prime.clone()),
            std::cmp::Ordering::Equal => equal_p = true,
            std::cmp::Ordering::Greater => above_p.push(entry.prime.clone()),
        }
    }

    let case = theorem_case(p, q);
    let mut report = RepunitReport {
        p: p.clone(),
        q,
        a,
        factorization,
        below_p,
        above_p,
        equal_p,
        theorem_case: case,
        verdict: Verdict::Consistent,
        theorem3_readings: None,
    };

    // Structural invariants, independent of the claim under test.
    if report.equal_p {
        report.verdict = Verdict::Violation(format!(
            "(p={p}, q={q}): p divides A, contradicting A = 1 (mod p)"
        ));
        return report;
    }
    let p_minus_1 = p - 1u32;
    let gcd_a = report.a.gcd(&p_minus_1);
    let gcd_q = p_minus_1.gcd(&BigUint::from(q));
    if gcd_a != gcd_q {
        report.verdict = Verdict::Violation(format!(
            "(p={p}, q={q}): gcd(A, p-1) = {gcd_a} but gcd(p-1, q) = {gcd_q}"
        ));
        return report;
    }

    if let Some(cofactor) = &report.factorization.cofactor {
        report.verdict = Verdict::Indeterminate(cofactor.to_string());
        return report;
    }

    // The claim-3 range [2..q] u [q+2..2q] also contains odd primes, which
    // the case priority labels T2; record both readings for any instance in
    // the range so the sweep's dual-reading data is complete.
    if q >= 3 && is_prime_u64(q) {
        let p_small = *p >= BigUint::from(2u32) && *p <= BigUint::from(q);
        let p_upper = *p >= BigUint::from(q + 2) && *p <= BigUint::from(2 * q);
        if p_small || p_upper {
            report.theorem3_readings = Some(TheoremThreeReadings {
                all_divisors_exceed_p: report.below_p.is_empty() && !report.equal_p,
                exactly_one_exceeds_p: report.above_p.len() == 1,
            });
        }
    }

    let failure = match case {
        TheoremCase::T1 | TheoremCase::T4 => check_unique_small_divisor(&report),
        TheoremCase::T2 | TheoremCase::T3 => check_large_divisors(&report, false),
        TheoremCase::None => None,
    };
    if let Some(details) = failure {
        report.verdict = Verdict::Violation(details);
    }
    report
}

fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    primes_up_to(limit).into_iter().filter(|&p| p > 2).collect()
}

/// Claim 1 sweep: every odd prime q <= q_max with 2q + 1 prime.
pub fn verify_theorem_1(q_max: u64) -> Vec<RepunitReport> {
    verify_theorem_1_with(q_max, &SweepConfig::default())
}

pub fn verify_theorem_1_with(q_max: u64, config: &SweepConfig) -> Vec<RepunitReport> {
    odd_primes_up_to(q_max)
        .into_iter()
        .filter(|&q| is_prime_u64(2 * q + 1))
        .map(|q| classify_divisors_with(&BigUint::from(2 * q + 1), q, config))
        .collect()
}

/// Claim 2 sweep: all odd prime pairs (p, q) with p < 2q + 1, p, q <= bound.
pub fn verify_theorem_2(bound: u64) -> Vec<RepunitReport> {
    verify_theorem_2_with(bound, &SweepConfig::default())
}

pub fn verify_theorem_2_with(bound: u64, config: &SweepConfig) -> Vec<RepunitReport> {
    let primes = odd_primes_up_to(bound);
    let mut reports = Vec::new();
    for &q in &primes {
        for &p in &primes {
            if p < 2 * q + 1 {
                reports.push(classify_divisors_with(&BigUint::from(p), q, config));
            }
        }
    }
    reports
}

/// Claim 3 sweep: odd primes q <= q_max, p over [2..q] and [q+2..2q].
pub fn verify_theorem_3(q_max: u64) -> Vec<RepunitReport> {
    verify_theorem_3_with(q_max, &SweepConfig::default())
}

pub fn verify_theorem_3_with(q_max: u64, config: &SweepConfig) -> Vec<RepunitReport> {
    let mut reports = Vec::new();
    for q in odd_primes_up_to(q_max) {
        for p in (2..=q).chain(q + 2..=2 * q) {
            reports.push(classify_divisors_with(&BigUint::from(p), q, config));
        }
    }
    reports
}

/// Claim 4 sweep: odd primes q <= q_max, p in {q+1, 2q+1}; p may be
/// composite in both branches.
pub fn verify_theorem_4(q_max: u64) -> Vec<RepunitReport> {
    verify_theorem_4_with(q_max, &SweepConfig::default())
}

pub fn verify_theorem_4_with(q_max: u64, config: &SweepConfig) -> Vec<RepunitReport> {
    let mut reports = Vec::new();
    for q in odd_primes_up_to(q_max) {
        for p in [q + 1, 2 * q + 1] {
            reports.push(classify_divisors_with(&BigUint::from(p), q, config));
        }
    }
    reports
}

/// (total, violations, indeterminate) for a report batch.
pub fn count_verdicts(reports: &[RepunitReport]) -> (usize, usize, usize) {
    let violations = reports.iter().filter(|r| r.is_violation()).count();
    let indeterminate = reports.iter().filter(|r| r.is_indeterminate()).count();
    (reports.len(), violations, indeterminate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn repunit_values() {
        assert_eq!(repunit_value(&nat(7), 3), nat(57));
        assert_eq!(repunit_value(&nat(17), 1), nat(1));
        assert_eq!(repunit_value(&nat(11), 5), nat(16105));
        assert_eq!(repunit_value(&nat(2), 13), nat(8191));
    }

    #[test]
    fn classify_7_3() {
        let r = classify_divisors(&nat(7), 3);
        assert_eq!(r.a, nat(57));
        assert_eq!(r.below_p, vec![nat(3)]);
        assert_eq!(r.above_p, vec![nat(19)]);
        assert!(!r.equal_p);
        assert_eq!(r.theorem_case, TheoremCase::T1);
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn classify_7_5() {
        let r = classify_divisors(&nat(7), 5);
        assert_eq!(r.a, nat(2801));
        assert!(r.below_p.is_empty());
        assert_eq!(r.above_p, vec![nat(2801)]);
        assert_eq!(r.theorem_case, TheoremCase::T2);
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn classify_4_3() {
        let r = classify_divisors(&nat(4), 3);
        assert_eq!(r.a, nat(21));
        assert_eq!(r.below_p, vec![nat(3)]);
        assert_eq!(r.above_p, vec![nat(7)]);
        assert_eq!(r.theorem_case, TheoremCase::T4);
        assert_eq!(r.verdict, Verdict::Consistent);
    }

    #[test]
    fn theorem_1_small_sweep() {
        let reports = verify_theorem_1(11);
        // q in {3, 5, 11}: 2q+1 in {7, 11, 23} all prime
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Consistent, "q={}", r.q);
            assert_eq!(r.below_p, vec![nat(r.q)]);
        }
        assert_eq!(reports[1].a, nat(16105));
        assert_eq!(reports[2].a, nat(43_309_534_450_633));
    }

    #[test]
    fn theorem_2_small_sweep() {
        let reports = verify_theorem_2(13);
        assert!(!reports.is_empty());
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Consistent, "p={} q={}", r.p, r.q);
            assert!(r.below_p.is_empty());
        }
        // spot: A(5,7) = 19531 is prime
        let spot = reports
            .iter()
            .find(|r| r.p == nat(5) && r.q == 7)
            .expect("pair (5,7) in sweep");
        assert_eq!(spot.a, nat(19531));
        assert_eq!(spot.above_p, vec![nat(19531)]);
    }

    #[test]
    fn theorem_3_small_sweep_records_both_readings() {
        let reports = verify_theorem_3(5);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Consistent, "p={} q={}", r.p, r.q);
            assert!(r.theorem3_readings.unwrap().all_divisors_exceed_p);
        }
        // A(4,5) = 341 = 11 * 31: the one-divisor reading fails there
        let spot = reports
            .iter()
            .find(|r| r.p == nat(4) && r.q == 5)
            .expect("pair (4,5) in sweep");
        assert_eq!(spot.a, nat(341));
        assert_eq!(spot.above_p, vec![nat(11), nat(31)]);
        assert!(!spot.theorem3_readings.unwrap().exactly_one_exceeds_p);
        // (8,3) sits just past the upper interval (8 > 2q+1), so it is not a
        // sweep member; classify it directly: A = 73 prime, all divisors > 8.
        assert!(!reports.iter().any(|r| r.p == nat(8) && r.q == 3));
        let spot = classify_divisors(&nat(8), 3);
        assert_eq!(spot.a, nat(73));
        assert_eq!(spot.theorem_case, TheoremCase::None);
        assert_eq!(spot.verdict, Verdict::Consistent);
        assert!(spot.below_p.is_empty());
        assert_eq!(spot.above_p, vec![nat(73)]);
    }

    #[test]
    fn theorem_4_small_sweep() {
        let reports = verify_theorem_4(7);
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Consistent, "p={} q={}", r.p, r.q);
        }
        // A(6,5) = 1555 = 5 * 311
        let spot = reports
            .iter()
            .find(|r| r.p == nat(6) && r.q == 5)
            .expect("pair (6,5) in sweep");
        assert_eq!(spot.a, nat(1555));
        assert_eq!(spot.below_p, vec![nat(5)]);
        assert_eq!(spot.above_p, vec![nat(311)]);
    }

    #[test]
    fn indeterminate_when_budget_exhausted() {
        let config = SweepConfig {
            budget: FactorBudget {
                trial_bound: 10,
                rho_steps: 8,
            },
            seed: None,
        };
        // A(59,29) is far out of reach for an 8-step budget
        let r = classify_divisors_with(&nat(59), 29, &config);
        assert!(r.is_indeterminate());
        match (&r.verdict, &r.factorization.cofactor) {
            (Verdict::Indeterminate(shown), Some(cofactor)) => {
                assert_eq!(shown, &cofactor.to_string());
                assert!(*cofactor > nat(1));
            }
            other => panic!("expected indeterminate with cofactor, got {other:?}"),
        }
    }

    #[test]
    fn case_classification_priorities() {
        assert_eq!(theorem_case(&nat(7), 3), TheoremCase::T1);
        assert_eq!(theorem_case(&nat(3), 5), TheoremCase::T2);
        assert_eq!(theorem_case(&nat(4), 5), TheoremCase::T3);
        assert_eq!(theorem_case(&nat(6), 5), TheoremCase::T4);
        assert_eq!(theorem_case(&nat(15), 7), TheoremCase::T4); // 2q+1 composite
        assert_eq!(theorem_case(&nat(16), 7), TheoremCase::None); // beyond 2q
        assert_eq!(theorem_case(&nat(5), 4), TheoremCase::None); // q composite
    }
}
