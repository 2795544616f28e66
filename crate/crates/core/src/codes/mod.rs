//! Linear codes over F_p ≅ G_π with Mannheim and Hamming distances.

mod construct;
pub mod io;
pub(crate) mod search;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{self, Elem, Matrix, Vector};
use crate::ring::PrimeContext;

pub use construct::{
    apply_monomial, concat_codes, construct_l, extended_simplex, omec_code, simplex_prime,
    MonomialFlavor,
};
pub use tables::{max_min_distance_systematic, systematic_generator, TableSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Mannheim,
    Hamming,
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mannheim" => Ok(Metric::Mannheim),
            "hamming" => Ok(Metric::Hamming),
            _ => Err(Error::Parse(format!("unknown metric {s:?}"))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Mannheim => "mannheim",
            Metric::Hamming => "hamming",
        })
    }
}

impl Metric {
    /// Per-element weight table over F_p.
    pub fn weights(self, ctx: &PrimeContext) -> Vec<u32> {
        match self {
            Metric::Mannheim => ctx.weight_table().to_vec(),
            Metric::Hamming => (0..ctx.p()).map(|x| (x != 0) as u32).collect(),
        }
    }

    /// Scalars representing every orbit of nonzero multiples on which the
    /// weight is constant, and the orbit size.
    pub fn transversal(self, ctx: &PrimeContext) -> (Vec<Elem>, u64) {
        match self {
            Metric::Mannheim => (ctx.leaders().to_vec(), 4),
            Metric::Hamming => (vec![1], ctx.p() as u64 - 1),
        }
    }

    pub fn weight_of(self, ctx: &PrimeContext, v: &[Elem]) -> u32 {
        match self {
            Metric::Mannheim => mannheim_weight_vec(ctx, v),
            Metric::Hamming => fp::hamming(v),
        }
    }
}

/// `Σ wt_π(v_j)`.
pub fn mannheim_weight_vec(ctx: &PrimeContext, v: &[Elem]) -> u32 {
    v.iter().map(|&x| ctx.weight(x % ctx.p())).sum()
}

/// `min_λ wt_π(λ v)` over nonzero scalars; one λ per coset suffices.
pub fn min_scaled_weight(ctx: &PrimeContext, v: &[Elem]) -> Result<u32> {
    if v.iter().all(|&x| x % ctx.p() == 0) {
        return Err(Error::ZeroVector);
    }
    let p = ctx.p();
    Ok(ctx
        .leaders()
        .iter()
        .map(|&l| v.iter().map(|&x| ctx.weight(fp::mul(x, l, p))).sum())
        .min()
        .expect("at least one coset"))
}

/// A linear `[n, k]` code over F_p bound to its Gaussian context.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ctx: Arc<PrimeContext>,
    n: usize,
    g: Matrix,
    h: Matrix,
}

impl LinearCode {
    /// Wraps a generator matrix after checking that its rows are independent.
    pub fn from_generator(ctx: Arc<PrimeContext>, m: Matrix) -> Result<Self> {
        let n = m.first().map_or(0, Vec::len);
        if m.is_empty() || n == 0 {
            return Err(Error::DimensionMismatch("generator matrix is empty".into()));
        }
        let p = ctx.p();
        if m.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged generator matrix".into()));
        }
        if let Some(&x) = m.iter().flatten().find(|&&x| x >= p) {
            return Err(Error::BadEntries(format!("entry {x} is not in [0, {p})")));
        }
        let (_, pivots) = fp::rref(&m, p);
        if pivots.len() < m.len() {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                expected: m.len(),
            });
        }
        let h = fp::null_space(&m, n, p);
        Ok(LinearCode { ctx, n, g: m, h })
    }

    /// The code `{x : H x^T = 0}`.
    pub fn from_parity_check(ctx: Arc<PrimeContext>, h: Matrix) -> Result<Self> {
        let n = h.first().map_or(0, Vec::len);
        let p = ctx.p();
        let r = fp::rank(&h, p);
        if r < h.len() {
            return Err(Error::RankDeficient {
                rank: r,
                expected: h.len(),
            });
        }
        if r == n {
            return Err(Error::ZeroDualCode);
        }
        let g = fp::null_space(&h, n, p);
        Ok(LinearCode { ctx, n, g, h })
    }

    /// The `[n, 0]` code.
    pub fn zero(ctx: Arc<PrimeContext>, n: usize) -> Self {
        let h = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as Elem).collect())
            .collect();
        LinearCode {
            ctx,
            n,
            g: Vec::new(),
            h,
        }
    }

    pub fn full_space(ctx: Arc<PrimeContext>, n: usize) -> Self {
        let g = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as Elem).collect())
            .collect();
        LinearCode {
            ctx,
            n,
            g,
            h: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &Arc<PrimeContext> {
        &self.ctx
    }

    pub fn p(&self) -> Elem {
        self.ctx.p()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.g.len()
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.h
    }

    /// Reduced row echelon form of the generator.
    pub fn canonical_generator(&self) -> Matrix {
        fp::rref(&self.g, self.p()).0
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.p() == other.p() && self.n == other.n && self.canonical_generator() == other.canonical_generator()
    }

    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n {
            return Err(Error::ZeroDualCode);
        }
        Ok(LinearCode {
            ctx: self.ctx.clone(),
            n: self.n,
            g: self.h.clone(),
            h: self.g.clone(),
        })
    }

    pub fn is_self_dual(&self) -> bool {
        let p = self.p();
        self.n == 2 * self.k()
            && self
                .g
                .iter()
                .all(|r| self.g.iter().all(|s| fp::dot(r, s, p) == 0))
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && fp::mul_transpose(v, &self.h, self.p()).iter().all(|&x| x == 0)
    }

    pub fn encode(&self, msg: &[Elem]) -> Vector {
        fp::vec_mat(msg, &self.g, self.p())
    }

    /// Number of codewords as an exact count when it fits.
    pub fn size(&self) -> Option<u128> {
        (self.p() as u128).checked_pow(self.k() as u32)
    }

    /// Minimum distance under `metric`.
    ///
    /// Enumerates orbit representatives of the code when that fits the
    /// budget; otherwise searches low-weight vectors against the parity
    /// check, which is cheap for codes of small redundancy.
    pub fn min_distance(&self, metric: Metric, budget: u64) -> Result<u32> {
        let (tr, _) = metric.transversal(&self.ctx);
        let weights = metric.weights(&self.ctx);
        if self.k() == 0 {
            return Err(Error::DimensionMismatch(
                "the zero code has no minimum distance".into(),
            ));
        }
        let walker = search::Walker::new(&self.g, self.p());
        if walker.leaf_count(tr.len()) <= budget as u128 {
            return search::min_weight(&self.g, self.p(), &weights, &tr, 0, budget, true);
        }
        search::min_weight_parity(&self.h, self.n, self.p(), &weights, &tr, budget).map_err(|e| match e {
            Error::SearchTooLarge { .. } => Error::SearchTooLarge {
                what: "minimum-distance search",
                needed: walker.leaf_count(tr.len()),
                budget,
            },
            other => other,
        })
    }

    pub fn min_mannheim(&self, budget: u64) -> Result<u32> {
        self.min_distance(Metric::Mannheim, budget)
    }

    pub fn min_hamming(&self, budget: u64) -> Result<u32> {
        self.min_distance(Metric::Hamming, budget)
    }

    /// Weight histogram over all `p^k` codewords.
    pub fn enumerator(&self, metric: Metric, budget: u64) -> Result<BTreeMap<u32, u64>> {
        let mut out = BTreeMap::from([(0, 1)]);
        if self.k() == 0 {
            return Ok(out);
        }
        let (tr, mult) = metric.transversal(&self.ctx);
        let reps = search::rep_histogram(&self.g, self.p(), &metric.weights(&self.ctx), &tr, budget)?;
        for (w, c) in reps.into_iter().enumerate() {
            if c > 0 {
                *out.entry(w as u32).or_insert(0) += c * mult;
            }
        }
        Ok(out)
    }

    pub fn mannheim_enumerator(&self, budget: u64) -> Result<BTreeMap<u32, u64>> {
        self.enumerator(Metric::Mannheim, budget)
    }

    /// Calls `f` on every codeword (including zero), sequentially.
    pub fn for_each_codeword<F: FnMut(&[Elem])>(&self, budget: u64, mut f: F) -> Result<()> {
        let p = self.p();
        f(&vec![0; self.n]);
        if self.k() == 0 {
            return Ok(());
        }
        let walker = search::Walker::new(&self.g, p);
        let all: Vec<Elem> = (1..p).collect();
        crate::error::check_budget("codeword enumeration", walker.leaf_count(all.len()), budget)?;
        let mut word = vec![0; self.n];
        walker.walk_all(&all, &mut |acc, add| {
            for ((w, &a), &b) in word.iter_mut().zip(acc).zip(add) {
                *w = if a + b >= p { a + b - p } else { a + b };
            }
            f(&word);
            true
        });
        Ok(())
    }

    /// Builds another code over the same context.
    pub fn with_generator(&self, m: Matrix) -> Result<LinearCode> {
        LinearCode::from_generator(self.ctx.clone(), m)
    }
}
