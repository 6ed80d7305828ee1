//! Integer factorization: trial division, perfect-power peeling, then a
//! Brent-variant Pollard rho with a deterministic seed sequence.
//!
//! Factorization never lies: when the effort budget runs out the remaining
//! composite is returned explicitly as an unfactored cofactor instead of
//! being dropped or mislabeled.

use super::montgomery::{OddRing, RhoRing};
use super::primality::{is_prime, to_u64, Certainty};
use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    #[serde(with = "crate::serde_nat")]
    pub prime: Natural,
    pub exponent: u32,
    pub certainty: Certainty,
}

/// Prime decomposition, strictly increasing in `prime`. `cofactor`, when
/// present, is a composite (or unresolved) part the budget did not cover;
/// the product of all entries times the cofactor equals the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<FactorEntry>,
    #[serde(with = "crate::serde_nat::option")]
    pub cofactor: Option<Natural>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Reconstructs the factored value.
    pub fn value(&self) -> Natural {
        let mut acc = BigUint::one();
        for entry in &self.factors {
            acc *= entry.prime.pow(entry.exponent);
        }
        if let Some(c) = &self.cofactor {
            acc *= c;
        }
        acc
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|e| &e.prime)
    }

    /// Compact text form such as `3 * 19` or `11^2 * 31`.
    pub fn display_compact(&self) -> String {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|e| {
                if e.exponent == 1 {
                    e.prime.to_string()
                } else {
                    format!("{}^{}", e.prime, e.exponent)
                }
            })
            .collect();
        if let Some(c) = &self.cofactor {
            parts.push(format!("[{c}]"));
        }
        parts.join(" * ")
    }
}

/// Effort limits for `factorize_with`. `rho_steps` counts applications of
/// the rho iteration map across all attempts on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_bound: u64,
    pub rho_steps: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: 10_000,
            rho_steps: 1 << 31,
        }
    }
}

pub const DEFAULT_FACTOR_SEED: u64 = 1;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The c in x^2 + c for a given (seed, attempt); deterministic, never 0.
fn rho_constant(seed: u64, attempt: u32) -> u64 {
    if seed == DEFAULT_FACTOR_SEED {
        return attempt as u64 + 1;
    }
    (splitmix64(seed ^ ((attempt as u64) << 32)) % 0xFFFF_FFFF) + 1
}

static DEFAULT_TRIAL_PRIMES: OnceLock<Vec<u64>> = OnceLock::new();

fn trial_primes(bound: u64) -> std::borrow::Cow<'static, Vec<u64>> {
    let default_bound = FactorBudget::default().trial_bound;
    if bound == default_bound {
        std::borrow::Cow::Borrowed(
            DEFAULT_TRIAL_PRIMES.get_or_init(|| super::primes_up_to(default_bound)),
        )
    } else {
        std::borrow::Cow::Owned(super::primes_up_to(bound))
    }
}

/// Brent's cycle-finding variant of Pollard rho on an arbitrary ring.
/// Returns a nontrivial divisor of n, or None if the step budget ran out
/// or this constant led to the degenerate full-cycle gcd.
fn brent_rho<R: RhoRing>(
    ring: &R,
    n: &BigUint,
    c: u64,
    max_steps: u64,
    steps_used: &mut u64,
) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let c_elem = ring.embed(c);
    let f = |v: &R::Elem| -> R::Elem { ring.add(&ring.mul(v, v), &c_elem) };

    let mut y = ring.embed(2);
    let mut q = ring.embed(1);
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut r: u64 = 1;
    let mut local_steps: u64 = 0;

    'outer: while g.is_one() {
        x = y.clone();
        let mut done: u64 = 0;
        while done < r {
            let chunk = BATCH.min(r - done);
            for _ in 0..chunk {
                y = f(&y);
            }
            done += chunk;
            local_steps += chunk;
            if local_steps >= max_steps {
                break 'outer;
            }
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = BATCH.min(r - k);
            for _ in 0..lim {
                y = f(&y);
                q = ring.mul(&q, &ring.sub(&x, &y));
            }
            local_steps += lim;
            g = ring.residue(&q).gcd(n);
            k += lim;
            if local_steps >= max_steps && g.is_one() {
                break 'outer;
            }
        }
        r <<= 1;
    }
    if g == *n {
        // The batched product jumped past the first collision; replay single
        // steps from the last checkpoint. The factor sits at most one batch
        // ahead, so the walk is bounded.
        for _ in 0..2 * BATCH {
            ys = f(&ys);
            local_steps += 1;
            g = ring.residue(&ring.sub(&x, &ys)).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    *steps_used += local_steps;
    if g.is_one() || g == *n {
        None
    } else {
        Some(g)
    }
}

fn rho_split(n: &BigUint, seed: u64, steps_left: &mut u64) -> Option<BigUint> {
    let ring = OddRing::new(n);
    let mut attempt: u32 = 0;
    // Collision probability grows quadratically within one walk, so later
    // attempts get half the remaining budget. The first walk is capped
    // tighter: a constant whose walk happens to be several times longer
    // than the median should yield to the next constant instead of eating
    // the budget.
    while *steps_left > 0 {
        let c = rho_constant(seed, attempt);
        let share = if attempt == 0 {
            *steps_left / 8
        } else {
            *steps_left / 2
        };
        let max_steps = share.max(1 << 22).min(*steps_left);
        let mut used = 0;
        let found = match &ring {
            OddRing::U64(r) => brent_rho(r, n, c, max_steps, &mut used),
            OddRing::M2(r) => brent_rho(r, n, c, max_steps, &mut used),
            OddRing::M3(r) => brent_rho(r, n, c, max_steps, &mut used),
            OddRing::Big(r) => brent_rho(r, n, c, max_steps, &mut used),
        };
        *steps_left = steps_left.saturating_sub(used.max(1));
        if let Some(d) = found {
            return Some(d);
        }
        attempt += 1;
    }
    None
}

/// Exponent k >= 2 and root r with r^k = n, if n is a perfect power.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    for k in super::primes_up_to(bits.max(2) as u64) {
        let k = k as u32;
        let root = n.nth_root(k);
        if root.pow(k) == *n {
            return Some((root, k));
        }
    }
    None
}

/// Factors n >= 2 under the default budget and seed.
pub fn factorize(n: &Natural) -> Result<Factorization> {
    factorize_with(n, &FactorBudget::default(), DEFAULT_FACTOR_SEED)
}

pub fn factorize_with(n: &Natural, budget: &FactorBudget, seed: u64) -> Result<Factorization> {
    if *n < BigUint::from(2u32) {
        return Err(Error::domain(format!("cannot factor {n}: need n >= 2")));
    }
    let mut remaining = n.clone();
    let mut found: Vec<(BigUint, u32)> = Vec::new();

    // Powers of two come off first no matter how small the trial bound is;
    // the rho rings require an odd modulus.
    let twos = remaining.trailing_zeros().unwrap_or(0);
    if twos > 0 {
        remaining >>= twos;
        found.push((BigUint::from(2u32), twos as u32));
    }

    for &p in trial_primes(budget.trial_bound).iter() {
        if remaining.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > remaining {
            break;
        }
        let mut exp = 0u32;
        loop {
            let (q, r) = remaining.div_rem(&pb);
            if r.is_zero() {
                remaining = q;
                exp += 1;
            } else {
                break;
            }
        }
        if exp > 0 {
            found.push((pb, exp));
        }
    }
    if !remaining.is_one() {
        // anything left below the trial square is prime
        let bound_sq = BigUint::from(budget.trial_bound) * budget.trial_bound;
        if remaining <= bound_sq {
            found.push((remaining.clone(), 1));
            remaining = BigUint::one();
        }
    }

    let mut steps_left = budget.rho_steps;
    let mut cofactors: Vec<(BigUint, u32)> = Vec::new();
    let mut stack: Vec<(BigUint, u32)> = Vec::new();
    if !remaining.is_one() {
        stack.push((remaining, 1));
    }
    while let Some((m, mult)) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m).is_prime() {
            found.push((m, mult));
            continue;
        }
        if let Some((root, k)) = perfect_power(&m) {
            stack.push((root, mult * k));
            continue;
        }
        match rho_split(&m, seed, &mut steps_left) {
            Some(d) => {
                let other = &m / &d;
                stack.push((d, mult));
                stack.push((other, mult));
            }
            None => cofactors.push((m, mult)),
        }
    }

    found.sort();
    let mut factors: Vec<FactorEntry> = Vec::new();
    for (prime, exp) in found {
        if let Some(last) = factors.last_mut() {
            if last.prime == prime {
                last.exponent += exp;
                continue;
            }
        }
        let certainty = if to_u64(&prime).is_some() {
            Certainty::Proven
        } else {
            is_prime(&prime).certainty()
        };
        factors.push(FactorEntry {
            prime,
            exponent: exp,
            certainty,
        });
    }
    let cofactor = if cofactors.is_empty() {
        None
    } else {
        let mut acc = BigUint::one();
        for (m, mult) in cofactors {
            acc *= m.pow(mult);
        }
        Some(acc)
    };
    let result = Factorization { factors, cofactor };
    debug_assert_eq!(result.value(), *n);
    Ok(result)
}


#[cfg(test)]
mod bench_probe {
    use super::*;

    #[test]
    #[ignore]
    fn time_hard_sweep_cases() {
        for (name, digits) in [
            ("A(29,31) 146-bit [16,54,77]", {
                let p = BigUint::from(29u32);
                ((p.pow(31) - 1u32) / 28u32).to_string()
            }),
            ("A(19,29) 120-bit [6,8,49,58]", {
                let p = BigUint::from(19u32);
                ((p.pow(29) - 1u32) / 18u32).to_string()
            }),
            ("A(23,31) 136-bit [46,91]", {
                let p = BigUint::from(23u32);
                ((p.pow(31) - 1u32) / 22u32).to_string()
            }),
            ("A(59,29) 165-bit [5,27,38,96]", {
                let p = BigUint::from(59u32);
                ((p.pow(29) - 1u32) / 58u32).to_string()
            }),
        ] {
            let n = BigUint::parse_bytes(digits.as_bytes(), 10).unwrap();
            let t = std::time::Instant::now();
            let f = factorize(&n).unwrap();
            println!(
                "{name}: {:?} complete={} {}",
                t.elapsed(),
                f.is_complete(),
                f.display_compact()
            );
            assert!(f.is_complete());
        }
    }
}
