//! Order-k pseudo-Fibonacci sequences: u_1 = ... = u_k = 1 and
//! u_n = u_{n-1} + ... + u_{n-k} afterwards.
//!
//! Exact-integer machinery: term generation, the telescoped two-term shift
//! identity u_n = 2u_{n-1} - u_{n-k-1}, the same identity for iterated
//! partial sums, and closure of the solution space under scaling and
//! addition (in exact rational arithmetic).
//!
//! Analytic machinery: the characteristic roots of x^k = x^{k-1} + ... + 1,
//! equivalently the fixed points of x^k (2 - x) = 1 on [1, 2), and the
//! Binet-style closed form u_n = sum of c_i q_i^(n-1) with coefficients from
//! the k-by-k Vandermonde system pinned by the all-ones initial terms.

use crate::{Error, Natural, Result};
use nalgebra::{Complex, DMatrix, DVector};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub type Complex64 = Complex<f64>;

/// Serializable (re, im) pair for roots and coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

impl ComplexValue {
    pub fn as_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Order k >= 2 with k initial terms (all ones unless overridden).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub order: usize,
    pub initial_terms: Vec<Natural>,
}

impl RecurrenceSpec {
    pub fn new(order: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::domain("order must be at least 2"));
        }
        Ok(RecurrenceSpec {
            order,
            initial_terms: vec![BigUint::one(); order],
        })
    }

    pub fn with_initial_terms(order: usize, initial_terms: Vec<Natural>) -> Result<Self> {
        if order < 2 {
            return Err(Error::domain("order must be at least 2"));
        }
        if initial_terms.len() != order {
            return Err(Error::domain(format!(
                "need exactly {order} initial terms, got {}",
                initial_terms.len()
            )));
        }
        Ok(RecurrenceSpec {
            order,
            initial_terms,
        })
    }
}

/// Exact terms u_1 ..= u_n.
pub fn terms(spec: &RecurrenceSpec, n: usize) -> Vec<Natural> {
    let k = spec.order;
    let mut u: Vec<Natural> = spec.initial_terms.iter().take(n).cloned().collect();
    while u.len() < n {
        let next: Natural = u[u.len() - k..].iter().sum();
        u.push(next);
    }
    u
}

/// Exact partial sums S_n = u_1 + ... + u_n of a term list.
pub fn partial_sums(values: &[Natural]) -> Vec<Natural> {
    let mut sums = Vec::with_capacity(values.len());
    let mut acc = BigUint::zero();
    for v in values {
        acc += v;
        sums.push(acc.clone());
    }
    sums
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub order: usize,
    /// Indices checked: k + 2 ..= n_max.
    pub checked_from: usize,
    pub checked_to: usize,
    pub holds: bool,
    pub first_failure: Option<usize>,
}

fn shift_identity_on(values: &[BigInt], k: usize, offset: usize) -> (bool, Option<usize>) {
    // values[i] is the (i+1)-th element; check v_n = 2v_{n-1} - v_{n-k-1}
    // for n from offset to the end (1-based indices).
    for n in offset..=values.len() {
        let lhs = &values[n - 1];
        let rhs = 2 * &values[n - 2] - &values[n - k - 2];
        if *lhs != rhs {
            return (false, Some(n));
        }
    }
    (true, None)
}

/// The defining k-term sum telescopes to u_n = 2u_{n-1} - u_{n-k-1}; checked
/// exactly for all k + 2 <= n <= n_max.
pub fn verify_shift_identity(spec: &RecurrenceSpec, n_max: usize) -> Result<IdentityReport> {
    let k = spec.order;
    if n_max < k + 2 {
        return Err(Error::domain("n_max must be at least order + 2"));
    }
    let values: Vec<BigInt> = terms(spec, n_max)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let (holds, first_failure) = shift_identity_on(&values, k, k + 2);
    Ok(IdentityReport {
        order: k,
        checked_from: k + 2,
        checked_to: n_max,
        holds,
        first_failure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumIdentityReport {
    pub order: usize,
    pub n_max: usize,
    pub depth: usize,
    /// One entry per summation level (level 1 = partial sums of the terms).
    pub levels: Vec<IdentityReport>,
    pub holds: bool,
}

/// Partial sums satisfy the same shift identity, and so do their partial
/// sums, level after level; checked exactly for `depth` levels.
pub fn verify_sum_identity(
    spec: &RecurrenceSpec,
    n_max: usize,
    depth: usize,
) -> Result<SumIdentityReport> {
    let k = spec.order;
    if depth < 1 {
        return Err(Error::domain("depth must be at least 1"));
    }
    if n_max < k + 2 {
        return Err(Error::domain("n_max must be at least order + 2"));
    }
    let mut level_values = terms(spec, n_max);
    let mut levels = Vec::new();
    for _ in 1..=depth {
        level_values = partial_sums(&level_values);
        let signed: Vec<BigInt> = level_values.iter().cloned().map(BigInt::from).collect();
        let (holds, first_failure) = shift_identity_on(&signed, k, k + 2);
        levels.push(IdentityReport {
            order: k,
            checked_from: k + 2,
            checked_to: n_max,
            holds,
            first_failure,
        });
    }
    let holds = levels.iter().all(|l| l.holds);
    Ok(SumIdentityReport {
        order: k,
        n_max,
        depth,
        levels,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionSpaceReport {
    pub order: usize,
    pub trials: usize,
    pub horizon: usize,
    pub scaling_ok: bool,
    pub addition_ok: bool,
}

fn satisfies_relation(seq: &[BigRational], k: usize) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    (k + 2..=seq.len()).all(|n| seq[n - 1] == &two * &seq[n - 2] - &seq[n - k - 2])
}

/// Solutions of v_n = 2v_{n-1} - v_{n-k-1} form a linear space: closure under
/// scaling and under (three-way) addition, checked in exact rationals on
/// seeded random initial segments.
pub fn solution_space_check(order: usize, trials: usize, seed: u64) -> Result<SolutionSpaceReport> {
    if order < 2 {
        return Err(Error::domain("order must be at least 2"));
    }
    if trials < 1 {
        return Err(Error::domain("need at least one trial"));
    }
    let k = order;
    let horizon = 50usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_rational = |rng: &mut ChaCha8Rng| {
        let numerator = rng.gen_range(-999i64..=999);
        let denominator = rng.gen_range(1i64..=30);
        BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
    };
    let random_solution = |rng: &mut ChaCha8Rng| -> Vec<BigRational> {
        // k + 1 free initial values, then the relation takes over
        let mut seq: Vec<BigRational> = (0..=k).map(|_| random_rational(rng)).collect();
        let two = BigRational::from_integer(BigInt::from(2));
        while seq.len() < horizon {
            let n = seq.len();
            let next = &two * &seq[n - 1] - &seq[n - k - 1];
            seq.push(next);
        }
        debug_assert!(satisfies_relation(&seq, k));
        seq
    };

    let mut scaling_ok = true;
    let mut addition_ok = true;
    for _ in 0..trials {
        let base = random_solution(&mut rng);
        let c = random_rational(&mut rng);
        let scaled: Vec<BigRational> = base.iter().map(|v| v * &c).collect();
        scaling_ok &= satisfies_relation(&scaled, k);
        // zero scaling stays a solution too
        let zeroed: Vec<BigRational> = base.iter().map(|_| BigRational::zero()).collect();
        scaling_ok &= satisfies_relation(&zeroed, k);

        let second = random_solution(&mut rng);
        let third = random_solution(&mut rng);
        let sum: Vec<BigRational> = (0..horizon)
            .map(|i| &base[i] + &second[i] + &third[i])
            .collect();
        addition_ok &= satisfies_relation(&sum, k);
    }
    Ok(SolutionSpaceReport {
        order,
        trials,
        horizon,
        scaling_ok,
        addition_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacteristicRoots {
    pub order: usize,
    /// All k roots, dominant first, then descending real part.
    pub roots: Vec<ComplexValue>,
    /// The unique real root in [1, 2).
    pub dominant: f64,
}

fn eval_poly(k: usize, x: f64) -> (f64, f64) {
    // p(x) = x^k - x^(k-1) - ... - x - 1 and its derivative, by Horner
    let mut p = 1.0f64;
    let mut dp = 0.0f64;
    for _ in 0..k {
        dp = dp * x + p;
        p = p * x - 1.0;
    }
    (p, dp)
}

/// All k roots of x^k = x^(k-1) + ... + x + 1 for 2 <= k <= 64.
///
/// The dominant root comes from Newton iteration started at 2 (the
/// polynomial is increasing and convex there, so the iteration brackets
/// monotonically); the full set comes from the companion-matrix
/// eigenvalues, with the dominant eigenvalue snapped to the Newton value.
pub fn characteristic_roots(order: usize) -> Result<CharacteristicRoots> {
    if !(2..=64).contains(&order) {
        return Err(Error::domain("order must be between 2 and 64"));
    }
    let k = order;
    let mut x = 2.0f64;
    for _ in 0..64 {
        let (p, dp) = eval_poly(k, x);
        let step = p / dp;
        x -= step;
        if step.abs() < 1e-15 * x.abs() {
            break;
        }
    }
    let dominant = x;

    // companion matrix of x^k - x^(k-1) - ... - 1: subdiagonal ones,
    // last column all ones
    let companion = DMatrix::<f64>::from_fn(k, k, |i, j| {
        if j + 1 == k {
            1.0
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut roots: Vec<Complex64> = companion.complex_eigenvalues().iter().copied().collect();

    // snap the eigenvalue nearest the Newton root to the refined value
    let mut best = 0usize;
    let mut best_dist = f64::INFINITY;
    for (i, r) in roots.iter().enumerate() {
        let d = (r - Complex64::new(dominant, 0.0)).norm();
        if d < best_dist {
            best_dist = d;
            best = i;
        }
    }
    roots[best] = Complex64::new(dominant, 0.0);
    roots.sort_by(|a, b| {
        b.re.partial_cmp(&a.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });

    // every root satisfies the defining equation
    for r in &roots {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for _ in 0..k {
            sum += pow;
            pow *= r;
        }
        let residual = (pow - sum).norm();
        if residual > 1e-8 {
            return Err(Error::domain(format!(
                "root {r} fails the characteristic equation (residual {residual:e})"
            )));
        }
    }
    // the fixed-point form x^k (2 - x) = 1 pins the dominant root
    let fixed_point = dominant.powi(k as i32) * (2.0 - dominant);
    if (fixed_point - 1.0).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "dominant root fails the fixed-point form: {fixed_point}"
        )));
    }
    if !(1.0..2.0).contains(&dominant) {
        return Err(Error::domain("dominant root must lie in [1, 2)"));
    }

    Ok(CharacteristicRoots {
        order,
        roots: roots.into_iter().map(ComplexValue::from).collect(),
        dominant,
    })
}

/// The order-3 roots in explicit radicals, evaluated numerically and tested
/// against the cubic 1 + q + q^2 = q^3 and both expectations for the root
/// product (+1 from the coefficient signs, -1 as also published).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CardanoReport {
    pub q1: ComplexValue,
    pub q2: ComplexValue,
    pub q3: ComplexValue,
    /// |1 + q + q^2 - q^3| per root.
    pub cubic_residuals: [f64; 3],
    pub cubic_ok: bool,
    pub product: ComplexValue,
    /// |product - 1| < 1e-9: the value the coefficients force.
    pub product_matches_plus_one: bool,
    /// |product + 1| < 1e-9: the also-published value; expected false.
    pub product_matches_minus_one: bool,
    /// |q1 - dominant root of order 3| — the radical and the solver agree.
    pub dominant_gap: f64,
}

pub fn cardano_root_check() -> Result<CardanoReport> {
    let s33 = 33.0f64.sqrt();
    let c_plus = (19.0 + 3.0 * s33).cbrt();
    let c_minus = (19.0 - 3.0 * s33).cbrt();
    let q1 = Complex64::new((c_plus + c_minus + 1.0) / 3.0, 0.0);
    let re = -(c_plus + c_minus - 2.0) / 6.0;
    let im = 3.0f64.sqrt() * (c_plus - c_minus) / 6.0;
    let q2 = Complex64::new(re, im);
    let q3 = Complex64::new(re, -im);

    let residual = |q: Complex64| (Complex64::new(1.0, 0.0) + q + q * q - q * q * q).norm();
    let cubic_residuals = [residual(q1), residual(q2), residual(q3)];
    let cubic_ok = cubic_residuals.iter().all(|r| *r < 1e-9);
    let product = q1 * q2 * q3;
    let dominant = characteristic_roots(3)?.dominant;
    Ok(CardanoReport {
        q1: q1.into(),
        q2: q2.into(),
        q3: q3.into(),
        cubic_residuals,
        cubic_ok,
        product: product.into(),
        product_matches_plus_one: (product - Complex64::new(1.0, 0.0)).norm() < 1e-9,
        product_matches_minus_one: (product + Complex64::new(1.0, 0.0)).norm() < 1e-9,
        dominant_gap: (q1.re - dominant).abs(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub order: usize,
    pub coefficients: Vec<ComplexValue>,
    pub roots: CharacteristicRoots,
}

/// Solves the k-by-k Vandermonde system sum_i c_i q_i^j = 1 for
/// j = 0 .. k-1 (the all-ones initial terms), giving
/// u_n = sum_i c_i q_i^(n-1). Double precision holds to k = 12.
pub fn closed_form(order: usize) -> Result<ClosedForm> {
    if !(2..=12).contains(&order) {
        return Err(Error::domain("order must be between 2 and 12"));
    }
    let roots = characteristic_roots(order)?;
    let k = order;
    let matrix = DMatrix::<Complex64>::from_fn(k, k, |j, i| {
        roots.roots[i].as_complex().powu(j as u32)
    });
    let det = matrix.clone().lu().determinant();
    if det.norm() < 1e-9 {
        return Err(Error::DegenerateRoots {
            determinant: det.norm(),
        });
    }
    let rhs = DVector::<Complex64>::from_element(k, Complex64::new(1.0, 0.0));
    let solution = matrix
        .lu()
        .solve(&rhs)
        .ok_or(Error::DegenerateRoots {
            determinant: det.norm(),
        })?;
    Ok(ClosedForm {
        order,
        coefficients: solution.iter().map(|c| ComplexValue::from(*c)).collect(),
        roots,
    })
}

/// sum_i c_i q_i^(n-1) as a real number; the imaginary parts must cancel to
/// within 1e-6 of the magnitude or the evaluation is rejected.
pub fn closed_form_eval(cf: &ClosedForm, n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("term index starts at 1"));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (c, r) in cf.coefficients.iter().zip(&cf.roots.roots) {
        acc += c.as_complex() * r.as_complex().powu((n - 1) as u32);
    }
    if acc.im.abs() > 1e-6 * acc.re.abs().max(1.0) {
        return Err(Error::domain(format!(
            "imaginary residue {} too large at n = {n}",
            acc.im
        )));
    }
    Ok(acc.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    fn u64s(values: &[Natural]) -> Vec<u64> {
        values.iter().map(|v| v.to_u64().unwrap()).collect()
    }

    #[test]
    fn order3_terms_match_published_list() {
        let spec = RecurrenceSpec::new(3).unwrap();
        let u = terms(&spec, 11);
        assert_eq!(u64s(&u), vec![1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193]);
    }

    #[test]
    fn order2_is_fibonacci_and_order4_extends() {
        let spec = RecurrenceSpec::new(2).unwrap();
        assert_eq!(u64s(&terms(&spec, 7)), vec![1, 1, 2, 3, 5, 8, 13]);
        let spec = RecurrenceSpec::new(4).unwrap();
        assert_eq!(u64s(&terms(&spec, 8)), vec![1, 1, 1, 1, 4, 7, 13, 25]);
    }

    #[test]
    fn shift_identity_holds() {
        for k in 2..=8 {
            let spec = RecurrenceSpec::new(k).unwrap();
            let report = verify_shift_identity(&spec, 60).unwrap();
            assert!(report.holds, "order {k}: {report:?}");
        }
        // spot: u_8 = 2 u_7 - u_4 for k = 3 reads 31 = 34 - 3
        let spec = RecurrenceSpec::new(3).unwrap();
        let u = terms(&spec, 8);
        assert_eq!(2u32 * &u[6] - &u[3], u[7]);
        assert_eq!(u[7], nat(31));
    }

    #[test]
    fn sums_match_published_list_and_identity() {
        let spec = RecurrenceSpec::new(3).unwrap();
        let sums = partial_sums(&terms(&spec, 8));
        assert_eq!(u64s(&sums), vec![1, 2, 3, 6, 11, 20, 37, 68]);
        // spot: S_5 = 11 = 2 * 6 - 1 = 2 S_4 - S_1
        assert_eq!(2u32 * &sums[3] - &sums[0], sums[4]);

        let report = verify_sum_identity(&spec, 60, 3).unwrap();
        assert_eq!(report.levels.len(), 3);
        // For k = 3 the identity survives exactly one extra summation: the
        // first-level sums hold, the second-level sums hold only because the
        // boundary constant S'_4 - 2 S'_3 vanishes, and the third level
        // fails from n = 5 on with constant defect 2 (S''_5 = 45 vs 43).
        assert!(report.levels[0].holds);
        assert!(report.levels[1].holds);
        assert!(!report.levels[2].holds);
        assert_eq!(report.levels[2].first_failure, Some(5));
        assert!(!report.holds);
    }

    #[test]
    fn sum_identity_beyond_first_level_is_special_to_order_3() {
        // only k = 3 keeps the identity at the second summation level
        for k in [2usize, 3, 4, 5] {
            let spec = RecurrenceSpec::new(k).unwrap();
            let report = verify_sum_identity(&spec, 60, 2).unwrap();
            assert!(report.levels[0].holds, "level 1 must hold for k = {k}");
            assert_eq!(report.levels[1].holds, k == 3, "level 2 for k = {k}");
        }
    }

    #[test]
    fn solution_space_closure() {
        for k in [2usize, 3, 5] {
            let report = solution_space_check(k, 8, 42).unwrap();
            assert!(report.scaling_ok && report.addition_ok, "order {k}");
        }
    }

    #[test]
    fn dominant_roots_match_published_table() {
        let printed = [
            (2, "1.6180"),
            (3, "1.83929"),
            (4, "1.9276"),
            (5, "1.96595"),
            (6, "1.98358"),
            (7, "1.99196"),
            (8, "1.99603"),
            (9, "1.99803"),
        ];
        let mut last = 0.0f64;
        for (k, text) in printed {
            let roots = characteristic_roots(k).unwrap();
            let decimals = text.len() - text.find('.').unwrap() - 1;
            let tolerance = 0.5 * 10f64.powi(-(decimals as i32));
            let expected: f64 = text.parse().unwrap();
            assert!(
                (roots.dominant - expected).abs() <= tolerance,
                "k = {k}: dominant {} vs printed {text}",
                roots.dominant
            );
            assert!(roots.dominant > last, "dominant roots increase with k");
            assert!(roots.dominant < 2.0);
            last = roots.dominant;
        }
    }

    #[test]
    fn golden_ratio_for_order_2() {
        let roots = characteristic_roots(2).unwrap();
        assert!((roots.dominant - 1.618_033_988_7).abs() < 1e-9);
    }

    #[test]
    fn roots_satisfy_fixed_point_form() {
        for k in 2..=12 {
            let roots = characteristic_roots(k).unwrap();
            let d = roots.dominant;
            assert!((d.powi(k as i32) * (2.0 - d) - 1.0).abs() < 1e-9, "k = {k}");
            assert_eq!(roots.roots.len(), k);
        }
    }

    #[test]
    fn cardano_radicals() {
        let report = cardano_root_check().unwrap();
        assert!(report.cubic_ok, "{:?}", report.cubic_residuals);
        assert!(report.dominant_gap < 1e-9);
        assert!((report.q1.re - 1.839_286_755_2).abs() < 1e-9);
        // the product comes out +1; the published -1 does not hold
        assert!(report.product_matches_plus_one);
        assert!(!report.product_matches_minus_one);
    }

    #[test]
    fn closed_form_matches_exact_terms() {
        for k in 2..=5 {
            let cf = closed_form(k).unwrap();
            let spec = RecurrenceSpec::new(k).unwrap();
            let exact = terms(&spec, 40);
            for n in 1..=40usize {
                let approx = closed_form_eval(&cf, n).unwrap();
                let expected = exact[n - 1].to_f64().unwrap();
                let rel = (approx - expected).abs() / expected;
                assert!(rel < 1e-6, "k = {k}, n = {n}: {approx} vs {expected}");
            }
        }
    }

    #[test]
    fn closed_form_initial_terms_exact() {
        let cf = closed_form(3).unwrap();
        for n in 1..=3 {
            assert!((closed_form_eval(&cf, n).unwrap() - 1.0).abs() < 1e-9);
        }
        // u_10 = 105 within 1e-6
        assert!((closed_form_eval(&cf, 10).unwrap() - 105.0).abs() < 1e-4);
    }

    #[test]
    fn binet_order_2() {
        let cf = closed_form(2).unwrap();
        assert!((closed_form_eval(&cf, 7).unwrap() - 13.0).abs() < 1e-9);
    }
}
