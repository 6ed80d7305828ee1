//! Prime-power repunit equations N^x = (y^z - 1)/(y - 1) with y prime.
//!
//! For N = 2 the complete solution family is x = P prime, y = 2^P - 1 a
//! Mersenne prime, z = 2. For N = 3 the only solution is (1, 2, 2); for
//! N = 7 it is (1, 2, 3); N = 5 has none. The exhaustive search here is the
//! oracle those characterizations are checked against.

use crate::arith::{is_prime, primes_up_to};
use crate::repunit::repunit_value;
use crate::Natural;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    Search,
}

/// One solution of base^x = (y^z - 1)/(y - 1) with y prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerEqSolution {
    #[serde(with = "crate::serde_nat")]
    pub base: Natural,
    pub x: u64,
    #[serde(with = "crate::serde_nat")]
    pub y: Natural,
    pub z: u64,
    pub provenance: Provenance,
}

impl PowerEqSolution {
    /// base^x really equals (y^z - 1)/(y - 1).
    pub fn verify(&self) -> bool {
        self.x >= 1
            && self.z >= 1
            && is_prime(&self.y).is_prime()
            && self.base.pow(self.x as u32) == repunit_value(&self.y, self.z)
    }
}

/// Exhaustive oracle: all (x, y, z) with y prime <= y_max, 2 <= z <= z_max,
/// 1 <= x <= x_max and base^x = (y^z - 1)/(y - 1). z = 1 is excluded since
/// it forces x = 0, which is not a natural. Sorted by (x, y, z).
pub fn search_power_eq(
    base: &Natural,
    x_max: u64,
    y_max: u64,
    z_max: u64,
) -> Vec<PowerEqSolution> {
    assert!(*base >= BigUint::from(2u32));
    let mut powers: Vec<Natural> = Vec::new(); // powers[i] = base^(i+1)
    let mut acc = base.clone();
    for _ in 0..x_max {
        powers.push(acc.clone());
        acc *= base;
    }
    let max_power = match powers.last() {
        Some(p) => p.clone(),
        None => return Vec::new(),
    };

    let mut hits = Vec::new();
    for y in primes_up_to(y_max) {
        let y_nat = BigUint::from(y);
        let mut value = &y_nat + 1u32; // repunit of length 2
        for z in 2..=z_max {
            if value > max_power {
                break;
            }
            if let Ok(i) = powers.binary_search(&value) {
                hits.push(PowerEqSolution {
                    base: base.clone(),
                    x: (i + 1) as u64,
                    y: y_nat.clone(),
                    z,
                    provenance: Provenance::Search,
                });
            }
            value = value * &y_nat + 1u32; // extend 1 + y + ... by one term
        }
    }
    hits.sort_by(|a, b| (a.x, &a.y, a.z).cmp(&(b.x, &b.y, b.z)));
    hits
}

/// The complete base-2 family: for each prime P <= x_max with 2^P - 1 prime,
/// the solution (2, P, 2^P - 1, 2).
pub fn mersenne_solutions(x_max: u64) -> Vec<PowerEqSolution> {
    let mut out = Vec::new();
    for p in primes_up_to(x_max) {
        let candidate = (BigUint::from(1u32) << p) - 1u32;
        if is_prime(&candidate).is_prime() {
            out.push(PowerEqSolution {
                base: BigUint::from(2u32),
                x: p,
                y: candidate,
                z: 2,
                provenance: Provenance::ClosedForm,
            });
        }
    }
    out
}

/// Decides whether 2^n factors as a product of (P_i + 1) over distinct
/// Mersenne primes P_i = 2^{p_i} - 1, i.e. whether n is a sum of distinct
/// Mersenne-prime exponents. Returns the ascending exponent set found by
/// depth-first search preferring small exponents, or None.
pub fn power_of_two_product_decomposition(n: u64) -> Option<Vec<u64>> {
    let exponents: Vec<u64> = primes_up_to(n)
        .into_iter()
        .filter(|&p| is_prime(&((BigUint::from(1u32) << p) - 1u32)).is_prime())
        .collect();

    fn dfs(target: u64, start: usize, exps: &[u64], chosen: &mut Vec<u64>) -> bool {
        if target == 0 {
            return true;
        }
        for i in start..exps.len() {
            if exps[i] > target {
                break;
            }
            chosen.push(exps[i]);
            if dfs(target - exps[i], i + 1, exps, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    if dfs(n, 0, &exponents, &mut chosen) {
        // value check: the product of the (P_i + 1) reconstructs 2^n
        let mut product = BigUint::from(1u32);
        for &p in &chosen {
            let mersenne = (BigUint::from(1u32) << p) - 1u32;
            debug_assert!(is_prime(&mersenne).is_prime());
            product *= mersenne + 1u32;
        }
        assert_eq!(product, BigUint::from(1u32) << n);
        Some(chosen)
    } else {
        None
    }
}

/// Whether (y^m - 1) divides (y^n - 1); equivalent to m | n, and the
/// equivalence is asserted.
pub fn divisibility_lemma_check(y: &Natural, m: u64, n: u64) -> bool {
    assert!(*y >= BigUint::from(2u32));
    assert!(m >= 1 && n >= 1);
    let divides = {
        let ym = y.pow(m as u32) - 1u32;
        let yn = y.pow(n as u32) - 1u32;
        use num_traits::Zero;
        (yn % ym).is_zero()
    };
    assert_eq!(divides, n % m == 0, "divisibility must match index divisibility");
    divides
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime_u64;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    fn tuples(solutions: &[PowerEqSolution]) -> Vec<(u64, String, u64)> {
        solutions
            .iter()
            .map(|s| (s.x, s.y.to_string(), s.z))
            .collect()
    }

    #[test]
    fn base2_oracle_is_the_mersenne_set() {
        let found = search_power_eq(&nat(2), 15, 100_000, 16);
        assert_eq!(
            tuples(&found),
            vec![
                (2, "3".into(), 2),
                (3, "7".into(), 2),
                (5, "31".into(), 2),
                (7, "127".into(), 2),
                (13, "8191".into(), 2),
            ]
        );
        assert!(found.iter().all(|s| s.z == 2));
        assert!(found.iter().all(|s| s.verify()));

        let family: Vec<_> = mersenne_solutions(15)
            .into_iter()
            .map(|s| (s.x, s.y.to_string(), s.z))
            .collect();
        assert_eq!(tuples(&found), family);
    }

    #[test]
    fn mersenne_solutions_bounds() {
        assert!(mersenne_solutions(1).is_empty());
        let small = mersenne_solutions(5);
        assert_eq!(
            small
                .iter()
                .map(|s| (s.x, s.y.to_string(), s.z))
                .collect::<Vec<_>>(),
            vec![(2, "3".into(), 2), (3, "7".into(), 2), (5, "31".into(), 2)]
        );
        // 2^11 - 1 = 2047 = 23 * 89 must be excluded
        assert!(mersenne_solutions(13).iter().all(|s| s.x != 11));
        assert!(small.iter().all(|s| s.verify()));
    }

    #[test]
    fn base3_oracle() {
        let found = search_power_eq(&nat(3), 15, 100_000, 16);
        assert_eq!(tuples(&found), vec![(1, "2".into(), 2)]);
    }

    #[test]
    fn base7_and_base5_oracle() {
        let found = search_power_eq(&nat(7), 15, 100_000, 16);
        assert_eq!(tuples(&found), vec![(1, "2".into(), 3)]);
        assert!(search_power_eq(&nat(5), 15, 100_000, 16).is_empty());
    }

    #[test]
    fn base_at_least_5_congruence() {
        // for solutions with z an odd prime, base = 1 (mod z)
        for base in [5u64, 7, 11, 13] {
            for s in search_power_eq(&nat(base), 15, 100_000, 16) {
                if s.z % 2 == 1 && is_prime_u64(s.z) {
                    assert_eq!(base % s.z, 1, "base {base} solution {s:?}");
                }
            }
        }
    }

    #[test]
    fn power_of_two_decompositions() {
        assert_eq!(power_of_two_product_decomposition(5), Some(vec![2, 3]));
        assert_eq!(power_of_two_product_decomposition(2), Some(vec![2]));
        assert_eq!(power_of_two_product_decomposition(1), None);
        assert_eq!(power_of_two_product_decomposition(4), None);
        assert_eq!(power_of_two_product_decomposition(10), Some(vec![2, 3, 5]));
        assert_eq!(power_of_two_product_decomposition(12), Some(vec![2, 3, 7]));
    }

    #[test]
    fn divisibility_lemma() {
        assert!(divisibility_lemma_check(&nat(2), 3, 6));
        assert!(divisibility_lemma_check(&nat(9), 4, 4));
        assert!(!divisibility_lemma_check(&nat(2), 4, 6));
        assert!(!divisibility_lemma_check(&nat(10), 3, 7));
    }

    #[test]
    fn prime_mersenne_needs_prime_exponent() {
        for x in 2u64..=64 {
            let m = (nat(1) << x) - 1u32;
            if is_prime(&m).is_prime() {
                assert!(is_prime_u64(x), "2^{x} - 1 prime but {x} composite");
            }
        }
    }
}
