//! Fixed-width modular multiplication for odd moduli.
//!
//! Pollard rho spends essentially all of its time in `x -> x^2 + c (mod n)`.
//! For the repunit sweeps n is 100..170 bits, where allocating bignum
//! arithmetic is an order of magnitude slower than CIOS Montgomery
//! multiplication on two or three 64-bit limbs. Moduli up to 64 bits use
//! plain `u128` reduction; moduli above 192 bits fall back to `BigUint`.

use num_bigint::BigUint;
use num_traits::One;

/// a + b*c + carry as (low, high).
#[inline(always)]
fn mac(a: u64, b: u64, c: u64, carry: u64) -> (u64, u64) {
    let t = a as u128 + (b as u128) * (c as u128) + carry as u128;
    (t as u64, (t >> 64) as u64)
}

/// -n^{-1} mod 2^64 for odd n, by Newton iteration on the 2-adic inverse.
fn neg_inv64(n0: u64) -> u64 {
    debug_assert!(n0 & 1 == 1);
    let mut inv = n0; // odd squares are 1 mod 8, so this is already correct to 3 bits
    inv = inv.wrapping_mul(2u64.wrapping_sub(n0.wrapping_mul(inv)));
    inv = inv.wrapping_mul(2u64.wrapping_sub(n0.wrapping_mul(inv)));
    inv = inv.wrapping_mul(2u64.wrapping_sub(n0.wrapping_mul(inv)));
    inv = inv.wrapping_mul(2u64.wrapping_sub(n0.wrapping_mul(inv)));
    inv = inv.wrapping_mul(2u64.wrapping_sub(n0.wrapping_mul(inv)));
    debug_assert_eq!(n0.wrapping_mul(inv), 1);
    inv.wrapping_neg()
}

fn limbs_from_biguint<const L: usize>(n: &BigUint) -> [u64; L] {
    let digits = n.to_u64_digits();
    let mut out = [0u64; L];
    out[..digits.len()].copy_from_slice(&digits);
    out
}

fn limbs_to_biguint<const L: usize>(x: &[u64; L]) -> BigUint {
    BigUint::from_slice(
        &x.iter()
            .flat_map(|&limb| [limb as u32, (limb >> 32) as u32])
            .collect::<Vec<u32>>(),
    )
}

#[inline(always)]
fn geq<const L: usize>(a: &[u64; L], b: &[u64; L]) -> bool {
    for i in (0..L).rev() {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

#[inline(always)]
fn sub_assign<const L: usize>(a: &mut [u64; L], b: &[u64; L]) -> bool {
    let mut borrow = false;
    for i in 0..L {
        let (d, b1) = a[i].overflowing_sub(b[i]);
        let (d, b2) = d.overflowing_sub(borrow as u64);
        a[i] = d;
        borrow = b1 || b2;
    }
    borrow
}

#[inline(always)]
fn add_assign<const L: usize>(a: &mut [u64; L], b: &[u64; L]) -> bool {
    let mut carry = false;
    for i in 0..L {
        let (s, c1) = a[i].overflowing_add(b[i]);
        let (s, c2) = s.overflowing_add(carry as u64);
        a[i] = s;
        carry = c1 || c2;
    }
    carry
}

/// Montgomery context for an odd modulus occupying exactly up to L limbs.
pub struct Mont<const L: usize> {
    n: [u64; L],
    ninv: u64,
    r2: [u64; L],
}

impl<const L: usize> Mont<L> {
    pub fn new(n: &BigUint) -> Self {
        debug_assert!(n.bit(0), "modulus must be odd");
        debug_assert!(n.bits() as usize <= 64 * L);
        let limbs = limbs_from_biguint::<L>(n);
        let r2 = (BigUint::one() << (128 * L)) % n;
        Mont {
            n: limbs,
            ninv: neg_inv64(limbs[0]),
            r2: limbs_from_biguint::<L>(&r2),
        }
    }

    /// CIOS Montgomery product a*b*R^{-1} mod n for a, b < n.
    #[inline]
    pub fn mul(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        let mut t = [0u64; L];
        let mut t_hi = 0u64; // limb L
        let mut t_top = 0u64; // limb L+1, always 0 or 1
        for i in 0..L {
            let mut carry = 0u64;
            for j in 0..L {
                let (lo, hi) = mac(t[j], a[i], b[j], carry);
                t[j] = lo;
                carry = hi;
            }
            let (s, c1) = t_hi.overflowing_add(carry);
            t_hi = s;
            t_top += c1 as u64;

            let m = t[0].wrapping_mul(self.ninv);
            let (_, mut carry) = mac(t[0], m, self.n[0], 0);
            for j in 1..L {
                let (lo, hi) = mac(t[j], m, self.n[j], carry);
                t[j - 1] = lo;
                carry = hi;
            }
            let (s, c1) = t_hi.overflowing_add(carry);
            t[L - 1] = s;
            t_hi = t_top + c1 as u64;
            t_top = 0;
        }
        // t < 2n here, one conditional subtraction suffices
        if t_hi != 0 || geq(&t, &self.n) {
            sub_assign(&mut t, &self.n);
        }
        t
    }

    #[inline]
    pub fn add(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        let mut t = *a;
        let carry = add_assign(&mut t, b);
        if carry || geq(&t, &self.n) {
            sub_assign(&mut t, &self.n);
        }
        t
    }

    #[inline]
    pub fn sub(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        let mut t = *a;
        if sub_assign(&mut t, b) {
            add_assign(&mut t, &self.n);
        }
        t
    }

    pub fn to_mont(&self, x: &BigUint) -> [u64; L] {
        let reduced = x % limbs_to_biguint(&self.n);
        self.mul(&limbs_from_biguint::<L>(&reduced), &self.r2)
    }

    pub fn elem_to_biguint(&self, x: &[u64; L]) -> BigUint {
        limbs_to_biguint(x)
    }
}

/// An element of a modular ring, with just enough surface for Pollard rho.
pub trait RhoRing {
    type Elem: Clone + PartialEq;
    fn embed(&self, x: u64) -> Self::Elem;
    #[allow(dead_code)] // exercised by the cross-checking tests
    fn embed_big(&self, x: &BigUint) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Residue as an integer for gcd purposes. For Montgomery rings this is
    /// the raw representative x*R mod n; since gcd(R, n) = 1 that changes
    /// nothing about gcd(., n).
    fn residue(&self, a: &Self::Elem) -> BigUint;
}

pub struct RingU64 {
    n: u64,
}

impl RingU64 {
    pub fn new(n: u64) -> Self {
        RingU64 { n }
    }
}

impl RhoRing for RingU64 {
    type Elem = u64;
    fn embed(&self, x: u64) -> u64 {
        x % self.n
    }
    fn embed_big(&self, x: &BigUint) -> u64 {
        (x % self.n).iter_u64_digits().next().unwrap_or(0)
    }
    #[inline(always)]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
    #[inline(always)]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    #[inline(always)]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.n - b + a
        }
    }
    fn residue(&self, a: &u64) -> BigUint {
        BigUint::from(*a)
    }
}

impl<const L: usize> RhoRing for Mont<L> {
    type Elem = [u64; L];
    fn embed(&self, x: u64) -> [u64; L] {
        self.to_mont(&BigUint::from(x))
    }
    fn embed_big(&self, x: &BigUint) -> [u64; L] {
        self.to_mont(x)
    }
    #[inline(always)]
    fn mul(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        Mont::mul(self, a, b)
    }
    #[inline(always)]
    fn add(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        Mont::add(self, a, b)
    }
    #[inline(always)]
    fn sub(&self, a: &[u64; L], b: &[u64; L]) -> [u64; L] {
        Mont::sub(self, a, b)
    }
    fn residue(&self, a: &[u64; L]) -> BigUint {
        self.elem_to_biguint(a)
    }
}

pub struct RingBig {
    n: BigUint,
}

impl RingBig {
    pub fn new(n: BigUint) -> Self {
        RingBig { n }
    }
}

impl RhoRing for RingBig {
    type Elem = BigUint;
    fn embed(&self, x: u64) -> BigUint {
        BigUint::from(x) % &self.n
    }
    fn embed_big(&self, x: &BigUint) -> BigUint {
        x % &self.n
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &self.n
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.n {
            s - &self.n
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.n - b + a
        }
    }
    fn residue(&self, a: &BigUint) -> BigUint {
        a.clone()
    }
}

/// Montgomery-or-fallback multiplication context chosen by modulus width.
pub enum OddRing {
    U64(RingU64),
    M2(Mont<2>),
    M3(Mont<3>),
    Big(RingBig),
}

impl OddRing {
    pub fn new(n: &BigUint) -> Self {
        debug_assert!(n.bit(0));
        match n.bits() {
            0..=63 => OddRing::U64(RingU64::new(n.iter_u64_digits().next().unwrap_or(0))),
            64..=128 => OddRing::M2(Mont::new(n)),
            129..=192 => OddRing::M3(Mont::new(n)),
            _ => OddRing::Big(RingBig::new(n.clone())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn check_ring<R: RhoRing>(ring: &R, n: &BigUint, pairs: &[(BigUint, BigUint)])
    where
        R::Elem: std::fmt::Debug,
    {
        for (a, b) in pairs {
            let prod = ring.mul(&ring.embed_big(a), &ring.embed_big(b));
            let sum = ring.add(&ring.embed_big(a), &ring.embed_big(b));
            let diff = ring.sub(&ring.embed_big(a), &ring.embed_big(b));
            // Compare in the domain itself: embed the bignum answers too, so
            // Montgomery's extra R factor cancels on both sides.
            assert_eq!(prod, ring.embed_big(&(a * b)), "mul, n={n} a={a} b={b}");
            assert_eq!(sum, ring.embed_big(&(a + b)), "add, n={n} a={a} b={b}");
            let want_diff = ((a + n * n) - b) % n;
            assert_eq!(diff, ring.embed_big(&want_diff), "sub, n={n} a={a} b={b}");
        }
    }

    #[test]
    fn ring_ops_match_bignum() {
        let moduli: Vec<BigUint> = vec![
            BigUint::from(101u32),
            BigUint::from(0xFFFF_FFFF_FFFF_FFC5u64),
            BigUint::parse_bytes(b"340282366920938463463374607431768211297", 10).unwrap(),
            BigUint::parse_bytes(b"39019378174832163909972622372170131931859526600761", 10)
                .unwrap(),
            BigUint::parse_bytes(b"6864797660130609714981900799081393217269435300143305409394463459185543183397656052122559640661454554977296311391480858037121987999716643812574028291115057151", 10).unwrap(),
        ];
        let pairs: Vec<(BigUint, BigUint)> = (0..48u64)
            .map(|i| {
                let a = BigUint::from(i)
                    * BigUint::parse_bytes(b"982451653037961584361982451653037961", 10).unwrap()
                    + BigUint::from(7u32);
                let b = BigUint::from(i * i + 1)
                    * BigUint::parse_bytes(b"18446744073709551557", 10).unwrap()
                    + BigUint::from(3u32);
                (a, b)
            })
            .collect();
        for n in &moduli {
            let reduced: Vec<(BigUint, BigUint)> =
                pairs.iter().map(|(a, b)| (a % n, b % n)).collect();
            match OddRing::new(n) {
                OddRing::U64(r) => check_ring(&r, n, &reduced),
                OddRing::M2(r) => check_ring(&r, n, &reduced),
                OddRing::M3(r) => check_ring(&r, n, &reduced),
                OddRing::Big(r) => check_ring(&r, n, &reduced),
            }
        }
    }
}
