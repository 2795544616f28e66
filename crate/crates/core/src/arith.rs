//! Rational-integer helpers: modular arithmetic, primality, primitive roots.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Bases making Miller-Rabin deterministic below 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

pub fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Inverse of `a` modulo the prime `p`. `a` must be nonzero mod `p`.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_BASES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let (d, s) = split_pow2(n - 1);
    'bases: for &a in &MR_BASES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn split_pow2(mut d: u64) -> (u64, u32) {
    let s = d.trailing_zeros();
    d >>= s;
    (d, s)
}

/// Miller-Rabin over arbitrary-precision integers with the same fixed bases.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let two = &one + &one;
    if n.is_even() {
        return false;
    }
    for &q in &MR_BASES {
        if (n % q).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors by trial division; fine for the field sizes in use.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest positive primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Floor of the r-th root of `n`.
pub fn integer_root(n: u128, r: u32) -> u128 {
    if n < 2 || r == 1 {
        return n;
    }
    let mut x = (n as f64).powf(1.0 / r as f64).round() as u128;
    // Float seed can be off by one or two in either direction.
    while x > 0 && checked_pow(x, r).is_none_or(|v| v > n) {
        x -= 1;
    }
    while checked_pow(x + 1, r).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

pub fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_match_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    #[test]
    fn big_primality() {
        assert!(is_prime_big(&BigUint::from(33461u32)));
        assert!(!is_prime_big(&BigUint::from(985u32)));
        // 2^89 - 1 is a Mersenne prime, 2^67 - 1 is not.
        let m89 = (BigUint::one() << 89usize) - BigUint::one();
        let m67 = (BigUint::one() << 67usize) - BigUint::one();
        assert!(is_prime_big(&m89));
        assert!(!is_prime_big(&m67));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(13), 2);
        assert_eq!(primitive_root(17), 3);
        assert_eq!(primitive_root(41), 6);
        assert_eq!(primitive_root(61), 2);
    }

    #[test]
    fn roots() {
        assert_eq!(integer_root(985 * 985, 2), 985);
        assert_eq!(integer_root(985 * 985 - 1, 2), 984);
        assert_eq!(integer_root(1_000_000_000_000_000_000, 3), 1_000_000);
        assert_eq!(integer_root(u64::MAX as u128, 5), 7131);
    }
}
