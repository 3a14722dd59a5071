//! Integer number theory: factorization, totient, quadratic residues and
//! modular square roots.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::{Integer, Roots};

/// Exact rational number with an `i128` numerator and a positive denominator,
/// always kept in lowest terms.
pub type Rational = num_rational::Ratio<i128>;

/// Convenience constructor for [`Rational`].
pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Largest input for which [`factorize`] is documented to finish quickly.
///
/// Trial division costs `O(sqrt(n))` in the worst case, so `10^12` keeps the
/// worst case around a million divisions.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    NotOddPrime(u64),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
        }
    }
}

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of distinct primes `p` with `p % 8 == residue`.
    pub fn count_class(&self, residue: u64) -> u32 {
        self.factors.iter().filter(|(p, _)| p % 8 == residue).count() as u32
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|(q, _)| *q == p).map_or(0, |&(_, e)| e)
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Largest `g` with `g^2` dividing the value.
    pub fn square_part_root(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e / 2)).product()
    }

    /// Squarefree kernel: the value divided by its largest square divisor.
    pub fn squarefree_part(&self) -> u64 {
        self.factors.iter().filter(|(_, e)| e % 2 == 1).map(|&(p, _)| p).product()
    }

    /// All `g >= 1` with `g^2` dividing the value, ascending.
    pub fn square_divisor_roots(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e as usize / 2 + 1));
            for &g in &out {
                let mut pk = 1u64;
                for _ in 0..=e / 2 {
                    next.push(g * pk);
                    pk *= p;
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// Checks the structural invariants: product, ordering and primality.
    pub fn is_valid(&self) -> bool {
        let mut product: u128 = 1;
        let mut last = 1u64;
        for &(p, e) in &self.factors {
            if p <= last || e == 0 || !is_prime(p) {
                return false;
            }
            last = p;
            product *= (p as u128).pow(e);
        }
        product == self.value as u128
    }
}

/// Factorizes `n >= 1` by trial division (see [`FACTOR_LIMIT`]).
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs a positive integer");
    let mut factors = Vec::new();
    let mut m = n;
    for p in [2u64, 3] {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    let mut p = 5u64;
    let mut step = 2;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += step;
        step = 6 - step;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { value: n, factors }
}

pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut p = 5u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 || n % (p + 2) == 0 {
            return false;
        }
        p += 6;
    }
    true
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi needs a positive integer");
    factorize(n)
        .factors
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// The Legendre symbol `(2/p)` for an odd prime `p`.
pub fn legendre_2(p: u64) -> Result<i8, ArithError> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p));
    }
    Ok(if matches!(p % 8, 1 | 7) { 1 } else { -1 })
}

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a mod m` in `[0, m)` for signed `a`.
pub fn residue(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Square roots of `a` modulo an odd prime `p` via Tonelli-Shanks.
fn tonelli_shanks(a: u64, p: u64) -> Vec<u64> {
    let a = a % p;
    if a == 0 {
        return vec![0];
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return Vec::new();
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mod_mul(tt, tt, p);
            i += 1;
        }
        let b = mod_pow(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mod_mul(b, b, p);
        t = mod_mul(t, c, p);
        r = mod_mul(r, b, p);
    }
    let mut roots = vec![r, p - r];
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Threshold below which prime moduli are solved by direct search.
const BRUTE_FORCE_PRIME_LIMIT: u64 = 1000;

fn roots_mod_prime(a: i64, p: u64) -> Vec<u64> {
    let ar = residue(a, p);
    if p < BRUTE_FORCE_PRIME_LIMIT {
        (0..p).filter(|&j| j * j % p == ar).collect()
    } else {
        tonelli_shanks(ar, p)
    }
}

fn roots_mod_prime_power(a: i64, p: u64, e: u32) -> Vec<u64> {
    let mut roots = roots_mod_prime(a, p);
    let mut modulus = p;
    for _ in 1..e {
        let next = modulus * p;
        let target = residue(a, next);
        let mut lifted = Vec::new();
        if p != 2 && residue(a, p) != 0 {
            // f(j) = j^2 - a has f'(j) = 2j invertible mod p: the lift is unique.
            for &r in &roots {
                let f = (mod_mul(r, r, next) + next - target) % next;
                let k = f / modulus;
                let inv = mod_pow((2 * r) % p, p - 2, p);
                let shift = (p - mod_mul(k % p, inv, p)) % p;
                lifted.push(r + shift * modulus);
            }
        } else {
            for &r in &roots {
                for k in 0..p {
                    let cand = r + k * modulus;
                    if mod_mul(cand, cand, next) == target {
                        lifted.push(cand);
                    }
                }
            }
        }
        roots = lifted;
        modulus = next;
        if roots.is_empty() {
            break;
        }
    }
    roots.sort_unstable();
    roots
}

/// Combines residues `r1 mod m1` and `r2 mod m2` for coprime moduli.
fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let (m1i, m2i) = (m1 as i128, m2 as i128);
    let g = (m1i).extended_gcd(&m2i);
    debug_assert_eq!(g.gcd, 1);
    let m = m1i * m2i;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2i);
    let k = (diff * g.x).rem_euclid(m2i);
    ((r1 as i128 + k * m1i).rem_euclid(m)) as u64
}

/// All `j` in `[0, m)` with `j^2 = a (mod m)`, ascending.
///
/// Each prime is solved separately (direct search below 1000, Tonelli-Shanks
/// above), lifted to its prime power and recombined with the CRT.
pub fn sqrt_mod(a: i64, m: u64) -> Vec<u64> {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return vec![0];
    }
    let mut acc = vec![0u64];
    let mut acc_mod = 1u64;
    for (p, e) in factorize(m).factors {
        let pe = p.pow(e);
        let local = roots_mod_prime_power(a, p, e);
        if local.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &r in &acc {
            for &s in &local {
                next.push(crt_pair(r, acc_mod, s, pe));
            }
        }
        acc = next;
        acc_mod *= pe;
    }
    acc.sort_unstable();
    acc
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    a.gcd(&b).gcd(&c)
}

/// Integer square root of `n` if `n` is a perfect square.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Splits `n > 0` as `g^2 * d` with `d` squarefree, returning `(g, d)`.
pub fn square_split(n: u64) -> (u64, u64) {
    let f = factorize(n);
    (f.square_part_root(), f.squarefree_part())
}
