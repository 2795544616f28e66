//! Exhaustive codeword enumeration over orbit representatives.
//!
//! A message is visited only if its first nonzero coordinate lies in a fixed
//! transversal of scalar orbits: the coset leaders for the Mannheim metric
//! (weights are constant on H-multiples) or `{1}` for the Hamming metric
//! (constant on all nonzero multiples). The last generator row is handled
//! through a precomputed table of its multiples, so leaves cost one pass of
//! table lookups with early exit against the running best.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use crate::error::{check_budget, Error, Result};
use crate::fp::{Elem, Vector};

/// Enumeration task: first nonzero position, its value, and optionally the
/// value of the following coordinate (used to split work across threads).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Task {
    first: usize,
    lead: Elem,
    next: Option<Elem>,
}

/// Multiples `c · row` for every generator row and every `c ∈ F_p`.
pub(crate) struct Walker {
    p: Elem,
    n: usize,
    k: usize,
    mul: Vec<Vec<Vector>>,
    zero: Vector,
}

impl Walker {
    pub fn new(rows: &[Vector], p: Elem) -> Self {
        let n = rows.first().map_or(0, Vec::len);
        let mul = rows
            .iter()
            .map(|row| {
                (0..p)
                    .map(|c| row.iter().map(|&x| ((c as u64 * x as u64) % p as u64) as Elem).collect())
                    .collect()
            })
            .collect();
        Walker {
            p,
            n,
            k: rows.len(),
            mul,
            zero: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of leaves visited for a transversal of the given size.
    pub fn leaf_count(&self, transversal: usize) -> u128 {
        let p = self.p as u128;
        transversal as u128 * (0..self.k as u32).map(|e| p.pow(e)).sum::<u128>()
    }

    /// Tasks splitting the enumeration; finer when `split` is set.
    pub fn tasks(&self, transversal: &[Elem], split: bool) -> Vec<Task> {
        let mut out = Vec::new();
        for first in 0..self.k {
            for &lead in transversal {
                if split && first + 1 < self.k {
                    out.extend((0..self.p).map(|c| Task {
                        first,
                        lead,
                        next: Some(c),
                    }));
                } else {
                    out.push(Task {
                        first,
                        lead,
                        next: None,
                    });
                }
            }
        }
        out
    }

    /// Visits every codeword of a task as a pair `(acc, add)` whose
    /// coordinate-wise sum mod p is the word; `acc + add < 2p` entrywise.
    /// Stops when `visit` returns false; returns false in that case.
    pub fn walk<F: FnMut(&[Elem], &[Elem]) -> bool>(&self, task: Task, visit: &mut F) -> bool {
        let mut acc = self.mul[task.first][task.lead as usize].clone();
        let mut start = task.first + 1;
        if let Some(c) = task.next {
            if start == self.k - 1 {
                return visit(&acc, &self.mul[start][c as usize]);
            }
            self.add_into(&mut acc, start, c);
            start += 1;
        }
        if start >= self.k {
            return visit(&acc, &self.zero);
        }
        self.rec(start, &acc, visit)
    }

    fn add_into(&self, acc: &mut [Elem], pos: usize, c: Elem) {
        let p = self.p;
        for (a, &x) in acc.iter_mut().zip(&self.mul[pos][c as usize]) {
            let s = *a + x;
            *a = if s >= p { s - p } else { s };
        }
    }

    fn rec<F: FnMut(&[Elem], &[Elem]) -> bool>(&self, pos: usize, acc: &[Elem], visit: &mut F) -> bool {
        if pos == self.k - 1 {
            return self.mul[pos].iter().all(|add| visit(acc, add));
        }
        let mut next = acc.to_vec();
        for c in 0..self.p {
            next.copy_from_slice(acc);
            self.add_into(&mut next, pos, c);
            if !self.rec(pos + 1, &next, visit) {
                return false;
            }
        }
        true
    }

    /// Runs `walk` over all tasks sequentially.
    pub fn walk_all<F: FnMut(&[Elem], &[Elem]) -> bool>(&self, transversal: &[Elem], visit: &mut F) -> bool {
        self.tasks(transversal, false)
            .into_iter()
            .all(|t| self.walk(t, visit))
    }
}

/// Per-element weight table doubled to length `2p`, so `acc + add` indexes
/// it without reduction.
pub(crate) fn doubled(weights: &[u32]) -> Vec<u32> {
    weights.iter().chain(weights.iter()).copied().collect()
}

#[inline]
fn capped_weight(wt2: &[u32], acc: &[Elem], add: &[Elem], cap: u32) -> u32 {
    let mut s = 0;
    for (&a, &b) in acc.iter().zip(add) {
        s += wt2[(a + b) as usize];
        if s >= cap {
            return s;
        }
    }
    s
}

/// Minimum nonzero weight of the code spanned by `rows`, under the
/// per-element weights `weights` (constant on the orbits of `transversal`).
///
/// Stops as soon as a word of weight `≤ stop_at` is found and returns that
/// weight; otherwise returns the exact minimum.
pub(crate) fn min_weight(
    rows: &[Vector],
    p: Elem,
    weights: &[u32],
    transversal: &[Elem],
    stop_at: u32,
    budget: u64,
    parallel: bool,
) -> Result<u32> {
    if rows.is_empty() {
        return Err(Error::DimensionMismatch(
            "the zero code has no minimum distance".into(),
        ));
    }
    let walker = Walker::new(rows, p);
    check_budget("minimum-distance search", walker.leaf_count(transversal.len()), budget)?;
    let wt2 = doubled(weights);
    if !parallel {
        return Ok(min_weight_seq(&walker, &wt2, transversal, stop_at));
    }
    let best = AtomicU32::new(u32::MAX);
    walker.tasks(transversal, true).into_par_iter().for_each(|task| {
        let mut local = best.load(Ordering::Relaxed);
        walker.walk(task, &mut |acc, add| {
            let global = best.load(Ordering::Relaxed);
            if global <= stop_at {
                return false;
            }
            local = local.min(global);
            let w = capped_weight(&wt2, acc, add, local);
            if w < local && w > 0 {
                local = w;
                best.fetch_min(w, Ordering::Relaxed);
            }
            true
        });
    });
    Ok(best.into_inner())
}

/// Sequential variant for callers that parallelise over many codes.
pub(crate) fn min_weight_seq(walker: &Walker, wt2: &[u32], transversal: &[Elem], stop_at: u32) -> u32 {
    let mut best = u32::MAX;
    walker.walk_all(transversal, &mut |acc, add| {
        let w = capped_weight(wt2, acc, add, best);
        if w < best && w > 0 {
            best = w;
        }
        best > stop_at
    });
    best
}

/// Histogram of weights over orbit representatives, in parallel.
/// Index `w` holds the number of representatives of weight `w`.
pub(crate) fn rep_histogram(
    rows: &[Vector],
    p: Elem,
    weights: &[u32],
    transversal: &[Elem],
    budget: u64,
) -> Result<Vec<u64>> {
    let walker = Walker::new(rows, p);
    check_budget("codeword enumeration", walker.leaf_count(transversal.len()), budget)?;
    let wt2 = doubled(weights);
    let max_w = *weights.iter().max().unwrap_or(&0) as usize * walker.n();
    let hist = walker
        .tasks(transversal, true)
        .into_par_iter()
        .fold(
            || vec![0u64; max_w + 1],
            |mut h, task| {
                walker.walk(task, &mut |acc, add| {
                    h[capped_weight(&wt2, acc, add, u32::MAX) as usize] += 1;
                    true
                });
                h
            },
        )
        .reduce(
            || vec![0u64; max_w + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist)
}

/// Minimum nonzero weight of `{x : H x^T = 0}` by depth-first search over
/// vectors of weight at most `w`, for `w = 1, 2, …`.
///
/// The cost grows with the ball volume around zero rather than with the code
/// size, which makes it the right tool for high-rate codes. Every visited
/// node counts against `budget`.
pub(crate) fn min_weight_parity(
    h: &[Vector],
    n: usize,
    p: Elem,
    weights: &[u32],
    transversal: &[Elem],
    budget: u64,
) -> Result<u32> {
    let r = h.len();
    // cols[j][x] = x * (column j of H).
    let cols: Vec<Vec<Vector>> = (0..n)
        .map(|j| {
            (0..p)
                .map(|x| h.iter().map(|row| ((x as u64 * row[j] as u64) % p as u64) as Elem).collect())
                .collect()
        })
        .collect();
    let mut by_weight: Vec<Elem> = (1..p).collect();
    by_weight.sort_by_key(|&x| (weights[x as usize], x));

    struct Dfs<'a> {
        cols: &'a [Vec<Vector>],
        weights: &'a [u32],
        by_weight: &'a [Elem],
        transversal: &'a [Elem],
        p: Elem,
        nodes: u64,
        budget: u64,
    }

    impl Dfs<'_> {
        fn go(&mut self, j: usize, rem: u32, syn: &mut Vec<Elem>, started: bool) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchTooLarge {
                    what: "parity-side minimum-distance search",
                    needed: self.nodes as u128,
                    budget: self.budget,
                });
            }
            if j == self.cols.len() {
                return Ok(started && syn.iter().all(|&s| s == 0));
            }
            if self.go(j + 1, rem, syn, started)? {
                return Ok(true);
            }
            let saved = syn.clone();
            for idx in 0..self.by_weight.len() {
                let x = self.by_weight[idx];
                if self.weights[x as usize] > rem {
                    break;
                }
                if !started && !self.transversal.contains(&x) {
                    continue;
                }
                for (s, &c) in syn.iter_mut().zip(&self.cols[j][x as usize]) {
                    *s = (*s + c) % self.p;
                }
                let found = self.go(j + 1, rem - self.weights[x as usize], syn, true)?;
                syn.copy_from_slice(&saved);
                if found {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    let mut dfs = Dfs {
        cols: &cols,
        weights,
        by_weight: &by_weight,
        transversal,
        p,
        nodes: 0,
        budget,
    };
    let max_w = weights.iter().max().copied().unwrap_or(0) * n as u32;
    for w in 1..=max_w {
        if dfs.go(0, w, &mut vec![0; r], false)? {
            return Ok(w);
        }
    }
    Err(Error::DimensionMismatch(
        "the zero code has no minimum distance".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp;

    /// Plain oracle over every message.
    fn brute_min(rows: &[Vector], p: Elem, weights: &[u32]) -> u32 {
        let k = rows.len();
        (1..(p as u64).pow(k as u32))
            .map(|i| {
                let w = fp::vec_mat(&fp::index_to_vec(i, k, p), rows, p);
                w.iter().map(|&x| weights[x as usize]).sum::<u32>()
            })
            .filter(|&w| w > 0)
            .min()
            .unwrap()
    }

    #[test]
    fn walker_visits_every_projective_representative() {
        let rows = vec![vec![1, 0, 3], vec![0, 1, 5], vec![0, 0, 1]];
        let w = Walker::new(&rows, 7);
        let mut seen = std::collections::BTreeSet::new();
        let mut count = 0;
        w.walk_all(&[1], &mut |acc, add| {
            let word: Vec<u32> = acc.iter().zip(add).map(|(a, b)| (a + b) % 7).collect();
            seen.insert(word);
            count += 1;
            true
        });
        assert_eq!(count, (7u32.pow(3) - 1) / 6);
        assert_eq!(seen.len() as u32, count);
        let tasks = w.tasks(&[1], true).len();
        assert_eq!(tasks, 7 + 7 + 1);
    }

    #[test]
    fn parity_side_search_agrees() {
        let p = 13;
        let mannheim = vec![0, 1, 2, 2, 2, 1, 2, 2, 1, 2, 2, 2, 1];
        let rows = vec![vec![1, 0, 5, 7, 2], vec![0, 1, 3, 3, 9]];
        let h = fp::null_space(&rows, 5, p);
        let got = min_weight_parity(&h, 5, p, &mannheim, &[1, 2, 4], 1 << 30).unwrap();
        assert_eq!(got, brute_min(&rows, p, &mannheim));
        assert!(min_weight_parity(&h, 5, p, &mannheim, &[1, 2, 4], 3).unwrap_err().is_budget());
    }

    #[test]
    fn parallel_and_sequential_agree_with_brute_force() {
        let p = 13;
        let hamming: Vec<u32> = (0..p).map(|x| (x != 0) as u32).collect();
        let rows = vec![vec![1, 0, 5, 7, 2], vec![0, 1, 3, 3, 9]];
        for par in [false, true] {
            let got = min_weight(&rows, p, &hamming, &[1], 0, 1 << 30, par).unwrap();
            assert_eq!(got, brute_min(&rows, p, &hamming));
        }
    }
}
