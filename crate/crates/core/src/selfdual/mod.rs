//! Self-dual codes: Gaussian weight enumerators, their MacWilliams-type
//! transform, the feasibility bound d*, exhaustive small-length enumeration
//! and the catalog of long optimal codes.

mod catalog;
pub mod cyclotomic;
mod dstar;
mod enumerate;
pub mod lp;
pub mod transform;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::codes::search::Walker;
use crate::codes::LinearCode;
use crate::error::{check_budget, Error, Result};
use crate::fp::{self, Elem};
use crate::ring::PrimeContext;

pub use catalog::{catalog, verify_catalog, verify_entry, CatalogCode, CatalogReport};
pub use cyclotomic::{alpha, Cyclotomic, PeriodAlgebra};
pub use dstar::{dstar, feasible_at, DstarReport, DstarSystem, Feasibility, LpMode};
pub use enumerate::{
    all_selfdual_codes, enumerate_selfdual, max_selfdual_distance, orthogonal_count, selfdual_count,
    SelfDualClass, SelfDualEnumeration, SelfDualOptimum,
};
pub use lp::{ExactSimplex, FloatSimplex, LpOutcome, LpScalar, Simplex};
pub use transform::{compositions, Expander};

/// `(t_0, t_1, …, t_m)`: zeros, then coordinates per coset of H.
pub type Composition = Vec<u32>;

pub fn composition_of(ctx: &PrimeContext, v: &[Elem]) -> Composition {
    let mut t = vec![0u32; ctx.num_cosets() + 1];
    for &x in v {
        t[ctx.coset_raw(x % ctx.p())] += 1;
    }
    t
}

/// `Σ_j m_j t_j`, the Mannheim weight of any word with composition t.
pub fn composition_weight(ctx: &PrimeContext, t: &[u32]) -> u32 {
    t.iter().enumerate().map(|(j, &c)| c * ctx.coset_weight(j)).sum()
}

/// Composition of `α_prim · c` given that of c: coset j moves to σ(j).
pub fn phi(ctx: &PrimeContext, t: &[u32]) -> Composition {
    let mut out = vec![0u32; t.len()];
    out[0] = t[0];
    for j in 1..t.len() {
        out[ctx.sigma(j)] = t[j];
    }
    out
}

/// The distinct compositions `t, φ(t), φ²(t), …`.
pub fn phi_orbit(ctx: &PrimeContext, t: &[u32]) -> Vec<Composition> {
    let mut out = vec![t.to_vec()];
    loop {
        let next = phi(ctx, out.last().expect("nonempty"));
        if next == out[0] {
            return out;
        }
        out.push(next);
    }
}

/// Gaussian weight enumerator: codeword counts per composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gwe {
    pub n: usize,
    pub terms: BTreeMap<Composition, u64>,
}

impl Serialize for Gwe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            t: &'a [u32],
            count: u64,
        }
        let terms: Vec<Term> = self.terms.iter().map(|(t, &count)| Term { t, count }).collect();
        let mut st = s.serialize_struct("Gwe", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Gwe {
    pub fn zero_code(ctx: &PrimeContext, n: usize) -> Self {
        let mut t = vec![0u32; ctx.num_cosets() + 1];
        t[0] = n as u32;
        Gwe {
            n,
            terms: BTreeMap::from([(t, 1)]),
        }
    }

    /// Enumerator of F_p^n: `multinomial(n; t) · 4^{n − t_0}`.
    pub fn full_space(ctx: &PrimeContext, n: usize) -> Self {
        let terms = compositions(n, ctx.num_cosets() + 1)
            .into_iter()
            .map(|t| {
                let mut c: u64 = 1;
                let mut left = n as u64;
                for &x in &t {
                    c *= binomial(left, x as u64);
                    left -= x as u64;
                }
                let c = c * 4u64.pow(n as u32 - t[0]);
                (t, c)
            })
            .collect();
        Gwe { n, terms }
    }

    /// Number of codewords.
    pub fn total(&self) -> u128 {
        self.terms.values().map(|&c| c as u128).sum()
    }

    pub fn count(&self, t: &[u32]) -> u64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    /// `A(t) = A(φ(t))` for every t.
    pub fn is_phi_invariant(&self, ctx: &PrimeContext) -> bool {
        self.terms.iter().all(|(t, &c)| self.count(&phi(ctx, t)) == c)
    }

    /// Mannheim weight enumerator obtained by collapsing compositions.
    pub fn mannheim_enumerator(&self, ctx: &PrimeContext) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (t, &c) in &self.terms {
            *out.entry(composition_weight(ctx, t)).or_insert(0) += c;
        }
        out
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Enumerator of a code by full enumeration (one word per H-orbit, counted
/// four times, since unit multiples share a composition).
pub fn gwe(code: &LinearCode, budget: u64) -> Result<Gwe> {
    let ctx = code.ctx();
    let n = code.n();
    let mut zero = vec![0u32; ctx.num_cosets() + 1];
    zero[0] = n as u32;
    let mut terms: BTreeMap<Composition, u64> = BTreeMap::from([(zero, 1)]);
    if code.k() == 0 {
        return Ok(Gwe { n, terms });
    }
    let p = ctx.p();
    let walker = Walker::new(code.generator(), p);
    let tr = ctx.leaders();
    check_budget("enumerator", walker.leaf_count(tr.len()), budget)?;
    let parts: Vec<HashMap<Composition, u64>> = walker
        .tasks(tr, true)
        .into_par_iter()
        .map(|task| {
            let mut local: HashMap<Composition, u64> = HashMap::new();
            let mut t = vec![0u32; ctx.num_cosets() + 1];
            walker.walk(task, &mut |acc, add| {
                t.iter_mut().for_each(|x| *x = 0);
                for (&a, &b) in acc.iter().zip(add) {
                    let s = if a + b >= p { a + b - p } else { a + b };
                    t[ctx.coset_raw(s)] += 1;
                }
                *local.entry(t.clone()).or_insert(0) += 4;
                true
            });
            local
        })
        .collect();
    for part in parts {
        for (t, c) in part {
            *terms.entry(t).or_insert(0) += c;
        }
    }
    Ok(Gwe { n, terms })
}

/// Enumerator of the dual code: `(1/|C|) · GWE_C(Z_0, …, Z_m)`.
pub fn macwilliams_transform(ctx: &PrimeContext, w: &Gwe, code_size: u128, budget: u64) -> Result<Gwe> {
    let ex = Expander::new(ctx, w.n);
    let s_len = ex.compositions().len() as u128;
    check_budget("enumerator transform", s_len * w.terms.len() as u128 * w.n.max(1) as u128, budget)?;
    let targets: Vec<Composition> = w.terms.keys().cloned().collect();
    let weights: Vec<i128> = w.terms.values().map(|&c| c as i128).collect();
    let acc = ex.expand_weighted(&targets, &weights);
    let mut terms = BTreeMap::new();
    for (t, coords) in ex.compositions().iter().zip(acc.chunks_exact(ex.dim())) {
        let bad = || Error::NonIntegerResult(format!("{t:?}"));
        let v = PeriodAlgebra::as_rational(coords).ok_or_else(bad)?;
        if v < 0 || v % code_size as i128 != 0 {
            return Err(bad());
        }
        let c = v / code_size as i128;
        if c > 0 {
            terms.insert(t.clone(), u64::try_from(c).map_err(|_| bad())?);
        }
    }
    Ok(Gwe { n: w.n, terms })
}

/// Nondecreasing (h−1)-tuples of nonzero squares summing to −1.
pub fn solutions_eh(ctx: &PrimeContext, h: usize) -> Vec<Vec<Elem>> {
    let p = ctx.p();
    let squares: Vec<Elem> = (1..p).map(|x| fp::mul(x, x, p)).collect::<BTreeSet<_>>().into_iter().collect();
    let target = p - 1;
    let mut out = Vec::new();
    fn rec(sq: &[Elem], p: Elem, left: usize, from: usize, sum: Elem, target: Elem, cur: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if left == 0 {
            if sum == target {
                out.push(cur.clone());
            }
            return;
        }
        for i in from..sq.len() {
            cur.push(sq[i]);
            rec(sq, p, left - 1, i, fp::add(sum, sq[i], p), target, cur, out);
            cur.pop();
        }
    }
    if h >= 2 {
        rec(&squares, p, h - 1, 0, 0, target, &mut Vec::new(), &mut out);
    }
    out
}

/// Compositions a self-dual code of length n may contain: zero, plus the
/// φ-orbits of the compositions forced by each solution in `E_h`.
pub fn allowed_compositions(ctx: &PrimeContext, n: usize) -> BTreeSet<Composition> {
    let p = ctx.p();
    let mut sqrt = vec![0 as Elem; p as usize];
    for x in 1..p {
        sqrt[fp::mul(x, x, p) as usize] = x;
    }
    let mut zero = vec![0u32; ctx.num_cosets() + 1];
    zero[0] = n as u32;
    let mut out = BTreeSet::from([zero]);
    for h in 2..=n {
        for s in solutions_eh(ctx, h) {
            let mut t = vec![0u32; ctx.num_cosets() + 1];
            t[0] = (n - h) as u32;
            t[ctx.coset_raw(1)] += 1;
            for &x in &s {
                t[ctx.coset_raw(sqrt[x as usize])] += 1;
            }
            out.extend(phi_orbit(ctx, &t));
        }
    }
    out
}

/// `⌊4 S(a,b) d / (p−1)⌋` for each entry of a `d_H^{SD}` list.
pub fn sd_upper_table(ctx: &PrimeContext, dh_sd: &[u32]) -> Vec<u64> {
    dh_sd
        .iter()
        .map(|&d| crate::bounds::upper_bound_dpi(ctx, d as u64))
        .collect()
}

/// Largest value, over all ways to spread h nonzero coordinates across the
/// cosets, of the least Mannheim weight among the scalar multiples. Every
/// word of Hamming weight h has some multiple of at most this weight.
pub fn mds_scaling_witness(ctx: &PrimeContext, _n: usize, h: usize) -> u32 {
    let p = ctx.p();
    let m = ctx.num_cosets();
    // shift[l][j]: coset of leader_l · leader_j.
    let shift: Vec<Vec<usize>> = ctx
        .leaders()
        .iter()
        .map(|&l| ctx.leaders().iter().map(|&x| ctx.coset_raw(fp::mul(l, x, p))).collect())
        .collect();
    let mut best = 0;
    for t in compositions(h, m) {
        let worst = shift
            .iter()
            .map(|row| t.iter().zip(row).map(|(&c, &j)| c * ctx.coset_weight(j)).sum::<u32>())
            .min()
            .unwrap_or(0);
        best = best.max(worst);
    }
    best
}
