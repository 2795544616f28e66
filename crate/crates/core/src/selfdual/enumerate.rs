//! Exhaustive enumeration of self-dual codes of small length.
//!
//! Up to a coordinate permutation every self-dual `[2m, m]` code has a
//! generator `[I | A]` with `A Aᵀ = −I`, i.e. `A = γ Q` with Q orthogonal.
//! Orthogonal matrices are built row by row; closing the systematic codes
//! under signed permutations then yields every self-dual code, and the
//! connected components of that closure are the (1,−1,0)-equivalence classes.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::search::{doubled, min_weight_seq, Walker};
use crate::codes::{LinearCode, Metric};
use crate::error::{check_budget, Error, Result};
use crate::fp::{self, Elem, Matrix};
use crate::ring::PrimeContext;

#[derive(Clone, Debug, Serialize)]
pub struct SelfDualClass {
    /// Lexicographically least reduced generator in the class.
    pub generator: Matrix,
    /// Number of distinct codes in the class.
    pub size: usize,
    pub d_h: u32,
    pub d_pi: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfDualEnumeration {
    pub p: Elem,
    pub n: usize,
    pub total_codes: usize,
    /// `Π_{i<n/2} (p^i + 1)`, the number of self-dual codes.
    pub expected_total: u128,
    pub classes: Vec<SelfDualClass>,
    pub max_d_h: u32,
    pub max_d_pi: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfDualOptimum {
    pub p: Elem,
    pub n: usize,
    pub max_d_pi: u32,
    /// `[I | A]` attaining the maximum.
    pub witness: Matrix,
    pub matrices_examined: u64,
}

/// `Π_{i<m} (p^i + 1)` for p ≡ 1 (mod 4).
pub fn selfdual_count(p: Elem, n: usize) -> u128 {
    (0..n / 2).map(|i| (p as u128).pow(i as u32) + 1).product()
}

/// `|O(m, F_p)|` for the identity form, p ≡ 1 (mod 4).
pub fn orthogonal_count(p: Elem, m: usize) -> u128 {
    let q = p as u128;
    if m == 0 {
        return 1;
    }
    let k = m / 2;
    let mut out = if m % 2 == 1 {
        2 * q.pow((k * k) as u32)
    } else {
        2 * q.pow((k * (k - 1)) as u32) * (q.pow(k as u32) - 1)
    };
    for i in 1..=(if m % 2 == 1 { k } else { k - 1 }) {
        out *= q.pow(2 * i as u32) - 1;
    }
    out
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!("self-dual length must be even, got {n}")));
    }
    Ok(())
}

fn unit_vectors(p: Elem, m: usize) -> Vec<Vec<Elem>> {
    (0..(p as u64).pow(m as u32))
        .map(|i| fp::index_to_vec(i, m, p))
        .filter(|v| fp::dot(v, v, p) == 1)
        .collect()
}

fn normalized_units(p: Elem, m: usize) -> Vec<Vec<Elem>> {
    let mut v = unit_vectors(p, m);
    v.retain(|v| v.iter().find(|&&x| x != 0).is_some_and(|&x| x <= (p - 1) / 2));
    v
}

/// Extends `cur` to every orthogonal m×m matrix with rows from `cands`.
/// With `increasing`, rows must increase strictly; combined with normalized
/// candidates this yields one matrix per row signed-permutation class.
fn for_each_orthogonal<F: FnMut(&Matrix)>(p: Elem, m: usize, increasing: bool, cands: &[Vec<Elem>], cur: &mut Matrix, f: &mut F) {
    if cur.len() == m {
        f(cur);
        return;
    }
    for v in cands {
        if increasing && cur.last().is_some_and(|last| v <= last) {
            continue;
        }
        if cur.iter().all(|r| fp::dot(r, v, p) == 0) {
            cur.push(v.clone());
            for_each_orthogonal(p, m, increasing, cands, cur, f);
            cur.pop();
        }
    }
}

fn systematic(p: Elem, gamma: Elem, q: &Matrix) -> Matrix {
    let m = q.len();
    q.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut g = vec![0; 2 * m];
            g[i] = 1;
            for (j, &x) in row.iter().enumerate() {
                g[m + j] = fp::mul(gamma, x, p);
            }
            g
        })
        .collect()
}

/// Every self-dual code of length n, as reduced generators.
pub fn all_selfdual_codes(ctx: &PrimeContext, n: usize, budget: u64) -> Result<Vec<Matrix>> {
    Ok(closure(ctx, n, budget)?.0)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn closure(ctx: &PrimeContext, n: usize, budget: u64) -> Result<(Vec<Matrix>, UnionFind)> {
    check_even(n)?;
    let p = ctx.p();
    let m = n / 2;
    let expected = selfdual_count(p, n);
    check_budget("self-dual enumeration", expected * n as u128, budget)?;
    let mut codes: Vec<Matrix> = Vec::new();
    let mut index: HashMap<Matrix, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let units = unit_vectors(p, m);
    for_each_orthogonal(p, m, false, &units, &mut Vec::new(), &mut |q| {
        let g = systematic(p, ctx.gamma(), q);
        if !index.contains_key(&g) {
            index.insert(g.clone(), codes.len());
            queue.push_back(codes.len());
            codes.push(g);
        }
    });
    let mut uf_edges = Vec::new();
    let moves: [fn(&[Elem], Elem) -> Vec<Elem>; 3] = [
        |r, _| {
            let mut v = r.to_vec();
            v.swap(0, 1);
            v
        },
        |r, _| {
            let mut v = r.to_vec();
            v.rotate_right(1);
            v
        },
        |r, p| {
            let mut v = r.to_vec();
            v[0] = fp::neg(v[0], p);
            v
        },
    ];
    while let Some(i) = queue.pop_front() {
        for mv in &moves {
            let moved: Matrix = codes[i].iter().map(|r| mv(r, p)).collect();
            let key = fp::rref(&moved, p).0;
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    let j = codes.len();
                    index.insert(key.clone(), j);
                    codes.push(key);
                    queue.push_back(j);
                    j
                }
            };
            uf_edges.push((i, j));
        }
    }
    let mut uf = UnionFind((0..codes.len()).collect());
    for (a, b) in uf_edges {
        uf.union(a, b);
    }
    Ok((codes, uf))
}

/// All self-dual codes of length n grouped into (1,−1,0)-equivalence
/// classes, with the distances of each class.
pub fn enumerate_selfdual(ctx: &std::sync::Arc<PrimeContext>, n: usize, budget: u64) -> Result<SelfDualEnumeration> {
    let (codes, mut uf) = closure(ctx, n, budget)?;
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..codes.len() {
        groups.entry(uf.find(i)).or_default().push(i);
    }
    let mut classes = groups
        .into_values()
        .map(|members| {
            let rep = members.iter().map(|&i| &codes[i]).min().expect("nonempty").clone();
            let code = LinearCode::from_generator(ctx.clone(), rep.clone())?;
            Ok(SelfDualClass {
                d_h: code.min_distance(Metric::Hamming, budget)?,
                d_pi: code.min_distance(Metric::Mannheim, budget)?,
                generator: rep,
                size: members.len(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    classes.sort_by(|a, b| a.generator.cmp(&b.generator));
    Ok(SelfDualEnumeration {
        p: ctx.p(),
        n,
        total_codes: codes.len(),
        expected_total: selfdual_count(ctx.p(), n),
        max_d_h: classes.iter().map(|c| c.d_h).max().unwrap_or(0),
        max_d_pi: classes.iter().map(|c| c.d_pi).max().unwrap_or(0),
        classes,
    })
}

/// Largest Mannheim distance of a self-dual code of length n, scanning one
/// orthogonal matrix per row signed-permutation class. The witness is the
/// lexicographically least optimal matrix in scan order.
pub fn max_selfdual_distance(ctx: &PrimeContext, n: usize, budget: u64) -> Result<SelfDualOptimum> {
    check_even(n)?;
    let p = ctx.p();
    let m = n / 2;
    let estimate = orthogonal_count(p, m) / (1u128 << m) / (1..=m as u128).product::<u128>();
    check_budget("self-dual optimum scan", estimate, budget)?;
    let (tr, _) = Metric::Mannheim.transversal(ctx);
    let wt2 = doubled(&Metric::Mannheim.weights(ctx));
    let probe = (0..m).map(|i| (0..n).map(|j| (j == i) as Elem).collect()).collect::<Matrix>();
    check_budget("minimum-distance search", Walker::new(&probe, p).leaf_count(tr.len()), budget)?;
    let firsts = normalized_units(p, m);
    let best = AtomicU32::new(0);
    let witness: Mutex<Option<(u32, Matrix)>> = Mutex::new(None);
    let examined: u64 = firsts
        .par_iter()
        .map(|first| {
            let mut count = 0u64;
            for_each_orthogonal(p, m, true, &firsts, &mut vec![first.clone()], &mut |q| {
                count += 1;
                let g = systematic(p, ctx.gamma(), q);
                let walker = Walker::new(&g, p);
                let current = best.load(Ordering::Relaxed);
                // Keep ties alive so the witness does not depend on timing.
                let d = min_weight_seq(&walker, &wt2, &tr, current.saturating_sub(1));
                if d >= current {
                    best.fetch_max(d, Ordering::Relaxed);
                    let mut w = witness.lock().expect("no poisoning");
                    let replace = match &*w {
                        None => true,
                        Some((wd, wq)) => d > *wd || (d == *wd && q < wq),
                    };
                    if replace {
                        *w = Some((d, q.clone()));
                    }
                }
            });
            count
        })
        .sum();
    let (d, q) = witness.into_inner().expect("no poisoning").expect("orthogonal matrices exist");
    Ok(SelfDualOptimum {
        p,
        n,
        max_d_pi: d,
        witness: systematic(p, ctx.gamma(), &q),
        matrices_examined: examined,
    })
}
