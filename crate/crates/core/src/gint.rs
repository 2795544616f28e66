//! Gaussian integers: exact arithmetic, primality, canonical associates and
//! minimal-weight residues modulo a Gaussian prime.
//!
//! [`Gaussian`] is generic over its integer type. The crate root exposes
//! [`crate::GaussInt`] (arbitrary precision) and [`crate::SmallGaussInt`]
//! (`i64`, used for the dense residue tables).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_prime_big};
use crate::error::{Error, Result};

/// Integer types usable as Gaussian-integer components.
pub trait GaussScalar:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Display + fmt::Debug
{
}

impl<T> GaussScalar for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + fmt::Display + fmt::Debug
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: GaussScalar> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }

    pub fn from_int(re: T) -> Self {
        Gaussian::new(re, T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Gaussian::new(-self.im.clone(), self.re.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Gaussian::new(
            self.re.clone() + other.re.clone(),
            self.im.clone() + other.im.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Gaussian::new(
            self.re.clone() - other.re.clone(),
            self.im.clone() - other.im.clone(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (self.re.clone(), self.im.clone());
        let (c, d) = (other.re.clone(), other.im.clone());
        Gaussian::new(
            a.clone() * c.clone() - b.clone() * d.clone(),
            a * d + b * c,
        )
    }

    /// `|re| + |im|`, the Mannheim weight of this particular representative.
    pub fn taxicab(&self) -> T {
        self.re.abs() + self.im.abs()
    }

    /// True when `divisor` divides `self` in Z[i].
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        let n = divisor.norm();
        if n.is_zero() {
            return self.is_zero();
        }
        let q = self.mul(&divisor.conj());
        q.re.is_multiple_of(&n) && q.im.is_multiple_of(&n)
    }

    /// The eight associates and conjugate-associates `u*g`, `u*conj(g)`.
    pub fn associates(&self) -> Vec<Self> {
        let mut out = Vec::with_capacity(8);
        for base in [self.clone(), self.conj()] {
            let mut g = base;
            for _ in 0..4 {
                let next = g.mul_i();
                out.push(g);
                g = next;
            }
        }
        out
    }

    fn convert<U: GaussScalar>(&self) -> Option<Gaussian<U>> {
        Some(Gaussian::new(
            U::from_i128(self.re.to_i128()?)?,
            U::from_i128(self.im.to_i128()?)?,
        ))
    }
}

impl<T: GaussScalar> fmt::Display for Gaussian<T> {
    /// Compact form as printed in residue tables: `3`, `2i`, `-i`, `1-3i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit_im = |im: &T| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", unit_im(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, unit_im(&self.im))
        } else {
            write!(f, "{}+{}", self.re, unit_im(&self.im))
        }
    }
}

impl<T: GaussScalar + FromStr> FromStr for Gaussian<T> {
    type Err = Error;

    /// Accepts `a+bi`, `a-bi`, `bi`, `a`, `i`, `-i` with optional spaces.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Gaussian integer: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let parse_int = |t: &str| -> Result<T> { t.parse::<T>().map_err(|_| bad()) };
        let Some(body) = compact.strip_suffix('i') else {
            return Ok(Gaussian::from_int(parse_int(&compact)?));
        };
        // Split before the last sign that is not the leading character.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => T::one(),
            "-" => -T::one(),
            t => parse_int(t.strip_prefix('+').unwrap_or(t))?,
        };
        Ok(Gaussian::new(parse_int(re_part)?, im))
    }
}

impl<T: GaussScalar> Serialize for Gaussian<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, T: GaussScalar + FromStr> Deserialize<'de> for Gaussian<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A Gaussian prime `a + bi` with `0 < a < b` and `a^2 + b^2` a rational
/// prime congruent to 1 mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussPrime {
    a: u64,
    b: u64,
}

impl GaussPrime {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        let describe = || format!("{a}+{b}i");
        if a == 0 || a >= b || a.gcd(&b) != 1 {
            return Err(Error::NotGaussianPrime(describe()));
        }
        let p = a
            .checked_mul(a)
            .and_then(|aa| b.checked_mul(b).and_then(|bb| aa.checked_add(bb)))
            .ok_or_else(|| Error::NotGaussianPrime(describe()))?;
        if p % 4 != 1 || !is_prime(p) {
            return Err(Error::NotGaussianPrime(describe()));
        }
        Ok(GaussPrime { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// The rational prime `a^2 + b^2`.
    pub fn p(&self) -> u64 {
        self.a * self.a + self.b * self.b
    }

    pub fn to_gaussian<T: GaussScalar>(&self) -> Gaussian<T> {
        Gaussian::new(
            T::from_u64(self.a).expect("component fits"),
            T::from_u64(self.b).expect("component fits"),
        )
    }
}

impl fmt::Display for GaussPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.a, self.b)
    }
}

impl FromStr for GaussPrime {
    type Err = Error;

    /// Parses any associate or conjugate, e.g. `3-2i`, and canonicalises it.
    fn from_str(s: &str) -> Result<Self> {
        let g: Gaussian<i64> = s.parse()?;
        canonical_prime(&g)
    }
}

/// The unique associate-or-conjugate `a + bi` of `g` with `0 < a < b`.
pub fn canonical_prime<T: GaussScalar>(g: &Gaussian<T>) -> Result<GaussPrime> {
    let describe = || g.to_string();
    let norm = g
        .norm()
        .to_u64()
        .ok_or_else(|| Error::NotGaussianPrime(describe()))?;
    if norm % 4 != 1 || !is_prime(norm) {
        return Err(Error::NotGaussianPrime(describe()));
    }
    if g.re.abs() == g.im.abs() {
        return Err(Error::NoCanonicalForm(describe()));
    }
    let (a, b) = g
        .associates()
        .into_iter()
        .filter_map(|h| Some((h.re.to_u64()?, h.im.to_u64()?)))
        .find(|&(a, b)| 0 < a && a < b)
        .ok_or_else(|| Error::NoCanonicalForm(describe()))?;
    GaussPrime::new(a, b)
}

/// True iff `g` is prime in Z[i]: associates of `1+i`, rational primes
/// `q = 3 (mod 4)` times a unit, or elements of prime norm.
pub fn is_gaussian_prime<T: GaussScalar>(g: &Gaussian<T>) -> bool {
    if g.is_zero() {
        return false;
    }
    if g.re.is_zero() || g.im.is_zero() {
        let q = if g.re.is_zero() { g.im.abs() } else { g.re.abs() };
        return match q.to_u64() {
            Some(q) => q % 4 == 3 && is_prime(q),
            None => {
                let Some(q) = q.to_i128().and_then(|v| u128::try_from(v).ok()) else {
                    return false;
                };
                q % 4 == 3 && is_prime_big(&BigUint::from(q))
            }
        };
    }
    match g.norm().to_u128() {
        Some(n) => is_prime_big(&BigUint::from(n)),
        None => false,
    }
}

/// Residue of `g` modulo `pi` minimising `|re| + |im|`.
///
/// Among minimal residues the one with the largest real part, then the
/// largest imaginary part, is returned.
pub fn mod_reduce<T: GaussScalar>(g: &Gaussian<T>, pi: &GaussPrime) -> Gaussian<T> {
    let pi_g: Gaussian<T> = pi.to_gaussian();
    let n = pi_g.norm();
    let num = g.mul(&pi_g.conj());
    let two = T::one() + T::one();
    let round = |x: T| -> T { (two.clone() * x + n.clone()).div_floor(&(two.clone() * n.clone())) };
    let q = Gaussian::new(round(num.re), round(num.im));

    let mut best: Option<Gaussian<T>> = None;
    for dx in [-1i32, 0, 1] {
        for dy in [-1i32, 0, 1] {
            let shift = Gaussian::new(T::from_i32(dx).unwrap(), T::from_i32(dy).unwrap());
            let cand = g.sub(&q.add(&shift).mul(&pi_g));
            let better = match &best {
                None => true,
                Some(b) => {
                    let (wc, wb) = (cand.taxicab(), b.taxicab());
                    wc < wb
                        || (wc == wb && (cand.re > b.re || (cand.re == b.re && cand.im > b.im)))
                }
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.expect("nine candidates examined")
}

/// Image of the rational integer `x` in Z[i]/(pi), reduced to minimal weight.
pub fn eta<T: GaussScalar>(x: i64, pi: &GaussPrime) -> Gaussian<T> {
    mod_reduce(&Gaussian::from_int(T::from_i64(x).expect("fits")), pi)
}

/// Converts between component types when the values fit.
pub fn convert<T: GaussScalar, U: GaussScalar>(g: &Gaussian<T>) -> Option<Gaussian<U>> {
    g.convert()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussInt;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn gi(re: i64, im: i64) -> Gaussian<i64> {
        Gaussian::new(re, im)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(gi(2, 3).norm(), 13);
        assert_eq!(gi(0, 0).norm(), 0);
        assert_eq!(gi(-4, 5).norm(), 41);
        let big = GaussInt::new(BigInt::from(-4), BigInt::from(5));
        assert_eq!(big.norm(), BigInt::from(41));
    }

    #[test]
    fn canonical_prime_examples() {
        assert_eq!(canonical_prime(&gi(3, -2)).unwrap(), GaussPrime::new(2, 3).unwrap());
        assert_eq!(canonical_prime(&gi(2, 3)).unwrap(), GaussPrime::new(2, 3).unwrap());
        assert_eq!(canonical_prime(&gi(-5, 4)).unwrap(), GaussPrime::new(4, 5).unwrap());
        assert!(matches!(canonical_prime(&gi(1, 3)), Err(Error::NotGaussianPrime(_))));
        assert!(matches!(canonical_prime(&gi(3, 0)), Err(Error::NotGaussianPrime(_))));
    }

    #[test]
    fn mod_reduce_examples() {
        let p25 = GaussPrime::new(2, 5).unwrap();
        let p14 = GaussPrime::new(1, 4).unwrap();
        assert_eq!(eta::<i64>(8, &p25), gi(1, -3));
        assert_eq!(mod_reduce(&gi(0, 0), &p25), gi(0, 0));
        assert_eq!(eta::<i64>(6, &p14), gi(2, 1));
    }

    #[test]
    fn gaussian_primality_examples() {
        assert!(is_gaussian_prime(&gi(1, 1)));
        assert!(is_gaussian_prime(&gi(2, 3)));
        assert!(!is_gaussian_prime(&gi(1, 3)));
        assert!(is_gaussian_prime(&gi(0, -7)));
        assert!(!is_gaussian_prime(&gi(5, 0)));
        assert!(!is_gaussian_prime(&gi(0, 0)));
    }

    #[test]
    fn parse_and_display() {
        for s in ["2+3i", "1-3i", "-1+2i", "2i", "-i", "i", "7", "-3-i"] {
            let g: Gaussian<i64> = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("3 - 2i".parse::<Gaussian<i64>>().unwrap(), gi(3, -2));
        assert_eq!("+4+5i".parse::<Gaussian<i64>>().unwrap(), gi(4, 5));
        assert!("2+3j".parse::<Gaussian<i64>>().is_err());
        assert_eq!("3-2i".parse::<GaussPrime>().unwrap().to_string(), "2+3i");
    }

    /// Exhaustive oracle: smallest |c|+|d| over c+di congruent to x with
    /// |c|, |d| <= p.
    fn brute_weight(x: i64, pi: &GaussPrime) -> i64 {
        let p = pi.p() as i64;
        let pig = pi.to_gaussian::<i64>();
        let mut best = i64::MAX;
        for c in -p..=p {
            for d in -p..=p {
                if gi(x - c, -d).divisible_by(&pig) {
                    best = best.min(c.abs() + d.abs());
                }
            }
        }
        best
    }

    #[test]
    fn reduced_weight_matches_brute_force() {
        for (a, b) in [(2, 3), (1, 4), (2, 5), (1, 6), (4, 5), (2, 7), (5, 6)] {
            let pi = GaussPrime::new(a, b).unwrap();
            for x in 0..pi.p() as i64 {
                let r = eta::<i64>(x, &pi);
                assert_eq!(r.taxicab(), brute_weight(x, &pi), "x = {x} mod {pi}");
            }
        }
    }

    proptest! {
        #[test]
        fn reduction_is_congruent_and_idempotent(re in -10_000i64..10_000, im in -10_000i64..10_000, which in 0usize..4) {
            let pi = [(2, 3), (1, 4), (2, 5), (5, 6)][which];
            let pi = GaussPrime::new(pi.0, pi.1).unwrap();
            let g = gi(re, im);
            let r = mod_reduce(&g, &pi);
            prop_assert!(g.sub(&r).divisible_by(&pi.to_gaussian()));
            prop_assert_eq!(mod_reduce(&r, &pi), r.clone());
            let big = GaussInt::new(BigInt::from(re), BigInt::from(im));
            prop_assert_eq!(convert::<BigInt, i64>(&mod_reduce(&big, &pi)).unwrap(), r);
        }

        #[test]
        fn conjugate_keeps_norm(re in -1_000_000i64..1_000_000, im in -1_000_000i64..1_000_000) {
            let g = gi(re, im);
            prop_assert_eq!(g.conj().norm(), g.norm());
            prop_assert!(g.norm() >= 0);
            prop_assert_eq!(g.norm() == 0, g.is_zero());
        }
    }
}
