//! Best minimum distance over systematic generators `[I_k | A]`.
//!
//! Every linear code is permutation-equivalent to a systematic one, and
//! permutations preserve both weights, so scanning all `p^{k(n−k)}` choices
//! of `A` gives the exact optimum `d(n, k)`.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_budget, Result};
use crate::fp::{self, Elem, Matrix};
use crate::ring::PrimeContext;

use super::search::{doubled, min_weight_seq, Walker};
use super::Metric;

#[derive(Clone, Debug, Serialize)]
pub struct TableSearch {
    pub n: usize,
    pub k: usize,
    pub metric: Metric,
    /// Best minimum distance found (exact optimum unless `capped`).
    pub best: u32,
    /// A generator attaining `best`: the one with the smallest index when
    /// the scan ran to completion.
    pub witness: Matrix,
    pub codes_examined: u128,
    /// True when the scan stopped early because `best` reached the cap.
    pub capped: bool,
}

/// `[I_k | A]` where `A` is read from `idx` in base p, row-major, first entry
/// most significant.
pub fn systematic_generator(p: Elem, n: usize, k: usize, idx: u64) -> Matrix {
    let r = n - k;
    let a = fp::index_to_vec(idx, k * r, p);
    (0..k)
        .map(|i| {
            let mut row = vec![0; n];
            row[i] = 1;
            row[k..].copy_from_slice(&a[i * r..(i + 1) * r]);
            row
        })
        .collect()
}

/// Maximum minimum distance over all systematic `[n, k]` codes.
///
/// With `cap = Some(d)` the scan stops once some code reaches distance `d`;
/// a result with `best < d` then proves no systematic code reaches `d`.
pub fn max_min_distance_systematic(
    ctx: &PrimeContext,
    n: usize,
    k: usize,
    metric: Metric,
    cap: Option<u32>,
    budget: u64,
) -> Result<TableSearch> {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let p = ctx.p();
    let total = (p as u128).pow((k * (n - k)) as u32);
    check_budget("systematic generator scan", total, budget)?;
    let (tr, _) = metric.transversal(ctx);
    let wt2 = doubled(&metric.weights(ctx));
    let probe = Walker::new(&systematic_generator(p, n, k, 0), p);
    check_budget("minimum-distance search", probe.leaf_count(tr.len()), budget)?;

    let cap = cap.unwrap_or(u32::MAX);
    let best = AtomicU32::new(0);
    let found = (0..total as u64)
        .into_par_iter()
        .filter_map(|idx| {
            let current = best.load(Ordering::Relaxed);
            if current >= cap {
                return None;
            }
            let g = systematic_generator(p, n, k, idx);
            let walker = Walker::new(&g, p);
            // Prune only codes strictly worse than the running best so that
            // ties survive and the smallest index wins deterministically.
            let d = min_weight_seq(&walker, &wt2, &tr, current.saturating_sub(1));
            if d >= current {
                best.fetch_max(d, Ordering::Relaxed);
                Some((d, idx))
            } else {
                None
            }
        })
        .reduce_with(|a, b| match a.0.cmp(&b.0) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => {
                if a.1 <= b.1 {
                    a
                } else {
                    b
                }
            }
        });
    let (d, idx) = found.expect("at least one systematic code");
    Ok(TableSearch {
        n,
        k,
        metric,
        best: d,
        witness: systematic_generator(p, n, k, idx),
        codes_examined: total,
        capped: d >= cap,
    })
}
