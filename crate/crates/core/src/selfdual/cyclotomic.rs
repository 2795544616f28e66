//! Exact arithmetic in Q(ξ), ξ = e^{2πi/p}, and in the subring spanned by
//! the Gaussian periods `η_c = Σ_{a ∈ cH} ξ^a`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::fp::{self, Elem};
use crate::ring::PrimeContext;

/// An element of Q(ξ) in the basis `ξ, ξ², …, ξ^{p−1}`; the relation
/// `1 = −(ξ + ⋯ + ξ^{p−1})` removes the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    p: Elem,
    /// `coeffs[e − 1]` multiplies `ξ^e`.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(p: Elem) -> Self {
        Cyclotomic {
            p,
            coeffs: vec![BigRational::zero(); p as usize - 1],
        }
    }

    pub fn from_rational(p: Elem, q: BigRational) -> Self {
        Cyclotomic {
            p,
            coeffs: vec![-q; p as usize - 1],
        }
    }

    pub fn from_int(p: Elem, x: i64) -> Self {
        Self::from_rational(p, BigRational::from_integer(BigInt::from(x)))
    }

    /// `ξ^e`.
    pub fn xi_pow(p: Elem, e: u64) -> Self {
        let e = (e % p as u64) as usize;
        if e == 0 {
            return Self::from_int(p, 1);
        }
        let mut out = Self::zero(p);
        out.coeffs[e - 1] = BigRational::from_integer(1.into());
        out
    }

    pub fn p(&self) -> Elem {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p as usize;
        // Product in Z[x]/(x^p − 1) first, then fold the constant back.
        let mut acc = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j + 2) % p] += a * b;
                }
            }
        }
        let c0 = acc[0].clone();
        Cyclotomic {
            p: self.p,
            coeffs: acc[1..].iter().map(|a| a - &c0).collect(),
        }
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let first = &self.coeffs[0];
        self.coeffs.iter().all(|c| c == first).then(|| -first.clone())
    }

    /// Numeric value under ξ ↦ e^{2πi/p}, as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * (i + 1) as f64 / p;
            (re + v * t.cos(), im + v * t.sin())
        })
    }
}

/// `α_{j,s} = Σ_{a ∈ ω_j ω_s H} ξ^a` for 1-based coset indices, with the
/// coset leaders as representatives `ω_j`.
pub fn alpha(ctx: &PrimeContext, j: usize, s: usize) -> Cyclotomic {
    let p = ctx.p();
    let w = fp::mul(ctx.leaders()[j - 1], ctx.leaders()[s - 1], p);
    period(ctx, ctx.coset_raw(w))
}

/// `η_c` for a 1-based coset index.
pub fn period(ctx: &PrimeContext, c: usize) -> Cyclotomic {
    let p = ctx.p();
    let lead = ctx.leaders()[c - 1];
    ctx.units().iter().fold(Cyclotomic::zero(p), |acc, &h| {
        acc.add(&Cyclotomic::xi_pow(p, fp::mul(lead, h, p) as u64))
    })
}

/// Multiplication table of the periods.
///
/// The periods `η_1, …, η_m` (m = (p−1)/4) form a Q-basis of the fixed field
/// of H, and `1 = −Σ η_c`. Elements are stored as integer coordinate vectors
/// in that basis, which keeps the enumerator transform m-dimensional instead
/// of (p−1)-dimensional.
#[derive(Clone, Debug)]
pub struct PeriodAlgebra {
    m: usize,
    /// `table[a][b][e]`: coordinate of `η_e` in `η_a η_b` (0-based).
    table: Vec<Vec<Vec<i128>>>,
}

impl PeriodAlgebra {
    pub fn new(ctx: &PrimeContext) -> Self {
        let p = ctx.p();
        let m = ctx.num_cosets();
        let units = ctx.units();
        let coset_elems: Vec<Vec<Elem>> = ctx
            .leaders()
            .iter()
            .map(|&l| units.iter().map(|&h| fp::mul(l, h, p)).collect())
            .collect();
        let mut table = vec![vec![vec![0i128; m]; m]; m];
        for a in 0..m {
            for b in 0..m {
                let mut tally = vec![0i128; m + 1];
                for &x in &coset_elems[a] {
                    for &y in &coset_elems[b] {
                        tally[ctx.coset_raw(fp::add(x, y, p))] += 1;
                    }
                }
                for e in 0..m {
                    table[a][b][e] = tally[e + 1] / 4 - tally[0];
                }
            }
        }
        PeriodAlgebra { m, table }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// Coordinates of the rational integer `r`.
    pub fn rational(&self, r: i128) -> Vec<i128> {
        vec![-r; self.m]
    }

    /// `out += x · η_c` (c 0-based).
    #[inline]
    pub fn mul_period_add(&self, x: &[i128], c: usize, out: &mut [i128]) {
        for (a, &xa) in x.iter().enumerate() {
            if xa != 0 {
                for (o, &t) in out.iter_mut().zip(&self.table[a][c]) {
                    *o += xa * t;
                }
            }
        }
    }

    /// Rational value of `x` if all coordinates agree.
    pub fn as_rational(x: &[i128]) -> Option<i128> {
        let first = *x.first()?;
        x.iter().all(|&c| c == first).then_some(-first)
    }

    /// Embeds coordinates into Q(ξ).
    pub fn to_cyclotomic(&self, ctx: &PrimeContext, x: &[i128]) -> Cyclotomic {
        let p = ctx.p();
        x.iter().enumerate().fold(Cyclotomic::zero(p), |acc, (c, &v)| {
            acc.add(&period(ctx, c + 1).scale(&BigRational::from_integer(BigInt::from(v))))
        })
    }
}
