//! Number-theoretic primitives shared by every other module: gcd, modular
//! exponentiation, primality, factorization, multiplicative order, integer
//! roots, and a small prime sieve.

mod factor;
mod montgomery;
mod primality;

pub use factor::{
    factorize, factorize_with, FactorBudget, FactorEntry, Factorization, DEFAULT_FACTOR_SEED,
};
pub use primality::{is_prime, is_prime_u64, Certainty, Primality};

use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// base^exp mod modulus, for modulus >= 2.
pub fn mod_pow(base: &Natural, exp: &Natural, modulus: &Natural) -> Result<Natural> {
    if *modulus < BigUint::from(2u32) {
        return Err(Error::ModulusTooSmall);
    }
    Ok(base.modpow(exp, modulus))
}

/// Greatest common divisor; the arguments must not both be zero.
pub fn gcd(a: &Natural, b: &Natural) -> Result<Natural> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::domain("gcd(0, 0) is undefined"));
    }
    Ok(a.gcd(b))
}

/// Floor of the k-th root together with an exactness flag, k >= 1.
pub fn integer_nth_root(n: &Natural, k: u32) -> (Natural, bool) {
    assert!(k >= 1, "root index must be at least 1");
    let root = n.nth_root(k);
    let exact = root.pow(k) == *n;
    (root, exact)
}

/// Least e >= 1 with a^e = 1 (mod m); requires gcd(a, m) = 1 and m >= 2.
///
/// Computed by factoring the group order phi(m) and dividing out each prime
/// while the congruence still holds. Both m and phi(m) must factor within
/// the default budget, otherwise the incomplete factorization surfaces as an
/// error rather than a wrong answer.
pub fn multiplicative_order(a: &Natural, m: &Natural) -> Result<Natural> {
    if *m < BigUint::from(2u32) {
        return Err(Error::ModulusTooSmall);
    }
    if !a.gcd(m).is_one() {
        return Err(Error::NotCoprime);
    }
    let m_factored = factorize(m)?;
    if let Some(cofactor) = m_factored.cofactor {
        return Err(Error::IncompleteFactorization { cofactor });
    }
    let mut phi = BigUint::one();
    for entry in &m_factored.factors {
        phi *= entry.prime.pow(entry.exponent - 1) * (&entry.prime - 1u32);
    }
    if phi.is_one() {
        return Ok(BigUint::one()); // m = 2, the trivial group
    }
    let phi_factored = factorize(&phi)?;
    if let Some(cofactor) = phi_factored.cofactor {
        return Err(Error::IncompleteFactorization { cofactor });
    }
    let mut order = phi;
    for entry in &phi_factored.factors {
        for _ in 0..entry.exponent {
            let candidate = &order / &entry.prime;
            if a.modpow(&candidate, m).is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    debug_assert!(a.modpow(&order, m).is_one());
    Ok(order)
}

/// Ascending list of all primes <= limit (plain sieve of Eratosthenes).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}
