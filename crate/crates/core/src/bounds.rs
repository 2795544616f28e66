//! Distance bounds, Mannheim ball volumes, the sphere-packing test and the
//! search for parameters of 2-error-correcting perfect codes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{integer_root, is_prime, is_prime_big};
use crate::error::{Error, Result};
use crate::ring::PrimeContext;

/// Best known `d_H` of self-dual codes over F13 at lengths 2, 4, …, 40.
pub const DH_SD_F13: [u32; 20] = [2, 3, 4, 5, 6, 6, 8, 8, 8, 10, 10, 10, 10, 11, 11, 12, 12, 13, 13, 14];
/// Best known `d_H` of self-dual codes over F17 at lengths 2, 4, …, 40.
pub const DH_SD_F17: [u32; 20] = [2, 3, 4, 5, 6, 7, 7, 8, 10, 10, 10, 10, 10, 11, 12, 12, 12, 13, 14, 14];

/// Number of vectors of each Mannheim weight in F_p^n, for all n up to a
/// limit and weights up to a limit.
#[derive(Clone, Debug)]
pub struct BallTable {
    /// `w[n][s]` = W_π(s, n).
    w: Vec<Vec<BigUint>>,
}

impl BallTable {
    /// Dynamic programme over coordinates: the generating function of one
    /// coordinate is `Σ_j W_j x^j`, so `W(·, n)` is its n-th power.
    pub fn new(ctx: &PrimeContext, max_n: usize, max_s: usize) -> Self {
        let per: Vec<u64> = ctx.weight_distribution();
        let mut w = vec![vec![BigUint::zero(); max_s + 1]];
        w[0][0] = BigUint::one();
        for n in 1..=max_n {
            let prev = &w[n - 1];
            let mut row = vec![BigUint::zero(); max_s + 1];
            for (s, slot) in row.iter_mut().enumerate() {
                let mut acc = BigUint::zero();
                for (j, &c) in per.iter().enumerate().take(s + 1) {
                    if c != 0 && !prev[s - j].is_zero() {
                        acc += &prev[s - j] * c;
                    }
                }
                *slot = acc;
            }
            w.push(row);
        }
        BallTable { w }
    }

    /// `W_π(s, n)`, vectors of weight exactly `s`.
    pub fn exact(&self, s: usize, n: usize) -> &BigUint {
        &self.w[n][s]
    }

    /// `V_π(s, n)`, vectors of weight at most `s`.
    pub fn volume(&self, s: usize, n: usize) -> BigUint {
        self.w[n][..=s].iter().sum()
    }
}

pub fn ball_count(ctx: &PrimeContext, s: usize, n: usize) -> BigUint {
    BallTable::new(ctx, n, s).exact(s, n).clone()
}

pub fn ball_volume(ctx: &PrimeContext, s: usize, n: usize) -> BigUint {
    BallTable::new(ctx, n, s).volume(s, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingVerdict {
    pub n: usize,
    pub k: usize,
    pub d: u32,
    /// Correction radius `⌊(d−1)/2⌋`.
    pub e: u32,
    /// `p^k · V(e, n)` as a decimal string.
    pub lhs: String,
    /// `p^n`.
    pub rhs: String,
    pub holds: bool,
    pub perfect: bool,
}

/// `p^k · V_π(e, n) ≤ p^n` with `e = ⌊(d−1)/2⌋`.
pub fn sphere_packing_ok(ctx: &PrimeContext, n: usize, k: usize, d: u32) -> PackingVerdict {
    let e = d.saturating_sub(1) / 2;
    let p = BigUint::from(ctx.p());
    let lhs = p.pow(k as u32) * ball_volume(ctx, e as usize, n);
    let rhs = p.pow(n as u32);
    PackingVerdict {
        n,
        k,
        d,
        e,
        holds: lhs <= rhs,
        perfect: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// A solution of `u² − 2v² = 1`; `(u_m + v_m √2) = (3 + 2√2)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PellPair {
    pub m: u32,
    #[serde(serialize_with = "as_decimal")]
    pub u: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub v: BigUint,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl PellPair {
    pub fn fundamental() -> Self {
        PellPair {
            m: 1,
            u: BigUint::from(3u32),
            v: BigUint::from(2u32),
        }
    }

    pub fn satisfies_equation(&self) -> bool {
        &self.u * &self.u == BigUint::from(2u32) * &self.v * &self.v + 1u32
    }
}

/// `(u, v) ↦ (3u + 4v, 2u + 3v)`.
pub fn pell_next(pp: &PellPair) -> PellPair {
    PellPair {
        m: pp.m + 1,
        u: &pp.u * 3u32 + &pp.v * 4u32,
        v: &pp.u * 2u32 + &pp.v * 3u32,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Perfect2Candidate {
    pub n: String,
    pub p: String,
    /// Pell index for r = 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Perfect2Report {
    pub r: u32,
    pub limit: u64,
    pub candidates: Vec<Perfect2Candidate>,
    /// Solutions of the equation discarded because `p` is composite.
    pub rejected_composite: Vec<Perfect2Candidate>,
    /// For r ∈ {3,4,5}: every n in `1..=verified_range` was checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_range: Option<u64>,
}

/// Parameters `(n, p)` with `p^r = 8n² + 4n + 1 = V_π(2, n)`, p prime.
///
/// `limit` bounds n for r ∈ {1, 3, 4, 5} and the Pell index m for r = 2.
pub fn perfect2_candidates(r: u32, limit: u64) -> Result<Perfect2Report> {
    let mut report = Perfect2Report {
        r,
        limit,
        candidates: Vec::new(),
        rejected_composite: Vec::new(),
        verified_range: None,
    };
    let value = |n: u64| 8 * n as u128 * n as u128 + 4 * n as u128 + 1;
    match r {
        1 => {
            let hits: Vec<u64> = (1..=limit)
                .into_par_iter()
                .filter(|&n| {
                    let v = value(n);
                    v <= u64::MAX as u128 && is_prime(v as u64)
                })
                .collect();
            report.candidates = hits
                .into_iter()
                .map(|n| Perfect2Candidate {
                    n: n.to_string(),
                    p: value(n).to_string(),
                    m: None,
                })
                .collect();
        }
        2 => {
            let mut pp = PellPair::fundamental();
            while (pp.m as u64) < limit {
                pp = pell_next(&pp);
                if !pp.m.is_multiple_of(2) {
                    continue;
                }
                let n = (&pp.u + &pp.v * 2u32 - 1u32) / 4u32;
                let p = &pp.u + &pp.v;
                let c = Perfect2Candidate {
                    n: n.to_string(),
                    p: p.to_string(),
                    m: Some(pp.m),
                };
                if is_prime_big(&p) {
                    report.candidates.push(c);
                } else {
                    report.rejected_composite.push(c);
                }
            }
        }
        3..=5 => {
            let mut hits: Vec<u64> = (1..=limit)
                .into_par_iter()
                .filter(|&n| {
                    let v = value(n);
                    let root = integer_root(v, r);
                    root.checked_pow(r) == Some(v)
                })
                .collect();
            hits.sort_unstable();
            for n in hits {
                let root = integer_root(value(n), r);
                let c = Perfect2Candidate {
                    n: n.to_string(),
                    p: root.to_string(),
                    m: None,
                };
                if root <= u64::MAX as u128 && is_prime(root as u64) {
                    report.candidates.push(c);
                } else {
                    report.rejected_composite.push(c);
                }
            }
            report.verified_range = Some(limit);
        }
        _ => return Err(Error::UnsupportedR(r)),
    }
    Ok(report)
}

/// `⌊4 S(a,b) d_H / (p − 1)⌋`.
pub fn upper_bound_dpi(ctx: &PrimeContext, d_h: u64) -> u64 {
    4 * ctx.s_value() * d_h / (ctx.p() as u64 - 1)
}

/// `S(a,b) · d_H(s, k) + d_π(t, k)` for `n = s(p−1)/4 + t`; the tail term is
/// taken as zero when `t < k`.
pub fn lower_bound_dpi(ctx: &PrimeContext, n: u64, k: u64, dh_small: u64, dpi_tail: u64) -> Result<u64> {
    let m = ctx.num_cosets() as u64;
    let (s, t) = (n / m, n % m);
    if s < k {
        return Err(Error::PreconditionSGeK { s, k });
    }
    let tail = if t < k { 0 } else { dpi_tail };
    Ok(ctx.s_value() * dh_small + tail)
}

fn require_p(ctx: &PrimeContext, p: u32) -> Result<()> {
    if ctx.p() == p {
        Ok(())
    } else {
        Err(Error::WrongContext {
            expected: p as u64,
            actual: ctx.p() as u64,
        })
    }
}

/// Exact `d_π(n, 1) = 2n − ⌈n/3⌉` over F13.
pub fn dpi_n1_f13(ctx: &PrimeContext, n: u64) -> Result<u64> {
    require_p(ctx, 13)?;
    Ok(2 * n - n.div_ceil(3))
}

/// `(8s + 2t − 1, 8s + 2t)` bracketing `d_π(n, 1)` over F17, `n = 4s + t`;
/// exact `8s` when `t = 0`.
pub fn dpi_n1_f17_bracket(ctx: &PrimeContext, n: u64) -> Result<(u64, u64)> {
    require_p(ctx, 17)?;
    let (s, t) = (n / 4, n % 4);
    Ok(if t == 0 {
        (8 * s, 8 * s)
    } else {
        (8 * s + 2 * t - 1, 8 * s + 2 * t)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DistanceValue {
    Exact(u64),
    AtLeast(u64),
}

/// `d_π(n, n−1)`: 2 above `(p−1)/4`, 3 at it, and only `≥ 3` below.
pub fn dpi_nminus1(ctx: &PrimeContext, n: u64) -> DistanceValue {
    let m = ctx.num_cosets() as u64;
    match n.cmp(&m) {
        std::cmp::Ordering::Greater => DistanceValue::Exact(2),
        std::cmp::Ordering::Equal => DistanceValue::Exact(3),
        std::cmp::Ordering::Less => DistanceValue::AtLeast(3),
    }
}

/// `2(n−k+1) − ⌈(n−k+1)/3⌉` over F13.
pub fn singleton_style_bound_f13(ctx: &PrimeContext, n: u64, k: u64) -> Result<u64> {
    require_p(ctx, 13)?;
    let r = n + 1 - k;
    Ok(2 * r - r.div_ceil(3))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GriesmerVerdict {
    /// `Σ_{i<k} ⌈d / p^i⌉`.
    pub sum: u128,
    pub holds: bool,
    pub meets: bool,
}

pub fn griesmer_ok(p: u64, n: u64, k: u32, d: u64) -> GriesmerVerdict {
    let mut sum: u128 = 0;
    let mut q: u128 = 1;
    for _ in 0..k {
        sum += (d as u128).div_ceil(q);
        q = q.saturating_mul(p as u128);
    }
    GriesmerVerdict {
        sum,
        holds: n as u128 >= sum,
        meets: n as u128 == sum,
    }
}

/// `V(e, n)` as a plain integer when small enough; convenience for tests.
pub fn volume_u128(ctx: &PrimeContext, s: usize, n: usize) -> Option<u128> {
    ball_volume(ctx, s, n).to_u128()
}
