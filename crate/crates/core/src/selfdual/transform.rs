//! Expansion of `Π_j Z_j^{t_j}` with exact period-basis coefficients.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::fp;
use crate::ring::PrimeContext;

use super::cyclotomic::PeriodAlgebra;

#[derive(Clone, Copy, Debug)]
enum Coef {
    Rational(i128),
    /// 0-based period index.
    Period(usize),
}

/// Expands products of the linear forms
/// `Z_0 = z_0 + 4 Σ z_s`, `Z_j = z_0 + Σ_s α_{j,s} z_s`.
///
/// A product of k forms is homogeneous of degree k, so it is stored densely
/// over the compositions of k, each coefficient an m-vector of period
/// coordinates.
pub struct Expander {
    n: usize,
    m: usize,
    alg: PeriodAlgebra,
    /// `comps[k]`: compositions of k into m+1 parts, lexicographic.
    comps: Vec<Vec<Vec<u32>>>,
    /// `succ[k][i][s]`: index in degree k+1 of `comps[k][i] + e_s`.
    succ: Vec<Vec<Vec<u32>>>,
    z: Vec<Vec<Coef>>,
}

pub fn compositions(n: usize, parts: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(left - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

impl Expander {
    pub fn new(ctx: &PrimeContext, n: usize) -> Self {
        let m = ctx.num_cosets();
        let q = m + 1;
        let comps: Vec<Vec<Vec<u32>>> = (0..=n).map(|k| compositions(k, q)).collect();
        let mut succ = Vec::with_capacity(n);
        for k in 0..n {
            let index: HashMap<&[u32], u32> = comps[k + 1]
                .iter()
                .enumerate()
                .map(|(i, c)| (c.as_slice(), i as u32))
                .collect();
            let table = comps[k]
                .iter()
                .map(|c| {
                    (0..q)
                        .map(|s| {
                            let mut d = c.clone();
                            d[s] += 1;
                            index[d.as_slice()]
                        })
                        .collect()
                })
                .collect();
            succ.push(table);
        }
        let p = ctx.p();
        let mut z = Vec::with_capacity(q);
        let mut row0 = vec![Coef::Rational(1)];
        row0.extend(std::iter::repeat_n(Coef::Rational(4), m));
        z.push(row0);
        for j in 0..m {
            let mut row = vec![Coef::Rational(1)];
            for s in 0..m {
                let w = fp::mul(ctx.leaders()[j], ctx.leaders()[s], p);
                row.push(Coef::Period(ctx.coset_raw(w) - 1));
            }
            z.push(row);
        }
        Expander {
            n,
            m,
            alg: PeriodAlgebra::new(ctx),
            comps,
            succ,
            z,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    /// All compositions of n, in the order used by expansion outputs.
    pub fn compositions(&self) -> &[Vec<u32>] {
        &self.comps[self.n]
    }

    pub fn algebra(&self) -> &PeriodAlgebra {
        &self.alg
    }

    fn one(&self) -> Vec<i128> {
        self.alg.rational(1)
    }

    /// Multiplies a degree-k polynomial by `Z_j`.
    fn mul_form(&self, k: usize, poly: &[i128], j: usize) -> Vec<i128> {
        let m = self.m;
        let mut out = vec![0i128; self.comps[k + 1].len() * m];
        for (i, coef) in poly.chunks_exact(m).enumerate() {
            if coef.iter().all(|&x| x == 0) {
                continue;
            }
            for (s, &zc) in self.z[j].iter().enumerate() {
                let dst = self.succ[k][i][s] as usize * m;
                let slot = &mut out[dst..dst + m];
                match zc {
                    Coef::Rational(r) => {
                        for (o, &x) in slot.iter_mut().zip(coef) {
                            *o += r * x;
                        }
                    }
                    Coef::Period(c) => self.alg.mul_period_add(coef, c, slot),
                }
            }
        }
        out
    }

    /// `Π_j Z_j^{t_j}` as a dense degree-n polynomial.
    pub fn expand(&self, t: &[u32]) -> Vec<i128> {
        let mut poly = self.one();
        let mut k = 0;
        for (j, &e) in t.iter().enumerate() {
            for _ in 0..e {
                poly = self.mul_form(k, &poly, j);
                k += 1;
            }
        }
        poly
    }

    /// Calls `f(i, expansion)` for every target, sharing work between
    /// targets with a common prefix. Targets must all be compositions of n.
    fn visit_group(&self, targets: &[(&[u32], usize)], f: &mut dyn FnMut(usize, &[i128])) {
        fn rec(
            ex: &Expander,
            j: usize,
            k: usize,
            poly: Vec<i128>,
            targets: &[(&[u32], usize)],
            f: &mut dyn FnMut(usize, &[i128]),
        ) {
            if j == ex.m + 1 {
                for &(_, i) in targets {
                    f(i, &poly);
                }
                return;
            }
            let (mut cur, mut deg, mut applied) = (poly, k, 0u32);
            let mut start = 0;
            while start < targets.len() {
                let e = targets[start].0[j];
                let end = start + targets[start..].iter().take_while(|t| t.0[j] == e).count();
                while applied < e {
                    cur = ex.mul_form(deg, &cur, j);
                    deg += 1;
                    applied += 1;
                }
                rec(ex, j + 1, deg, cur.clone(), &targets[start..end], f);
                start = end;
            }
        }
        rec(self, 0, 0, self.one(), targets, f);
    }

    fn groups<'a>(&self, targets: &'a [Vec<u32>]) -> Vec<Vec<(&'a [u32], usize)>> {
        let mut sorted: Vec<(&[u32], usize)> = targets.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        // Ascending exponents so each branch only ever multiplies further.
        sorted.sort();
        let mut groups: Vec<Vec<(&[u32], usize)>> = Vec::new();
        for t in sorted {
            match groups.last_mut() {
                Some(g) if g[0].0[..2] == t.0[..2] => g.push(t),
                _ => groups.push(vec![t]),
            }
        }
        groups
    }

    /// Expansions of every target, in target order.
    pub fn expand_many(&self, targets: &[Vec<u32>]) -> Vec<Vec<i128>> {
        let mut parts: Vec<(usize, Vec<i128>)> = self
            .groups(targets)
            .par_iter()
            .flat_map_iter(|g| {
                let mut local = Vec::with_capacity(g.len());
                self.visit_group(g, &mut |i, poly| local.push((i, poly.to_vec())));
                local
            })
            .collect();
        parts.sort_by_key(|x| x.0);
        parts.into_iter().map(|x| x.1).collect()
    }

    /// `Σ_i w_i · Π_j Z_j^{t_{i,j}}`.
    pub fn expand_weighted(&self, targets: &[Vec<u32>], weights: &[i128]) -> Vec<i128> {
        let len = self.comps[self.n].len() * self.m;
        self.groups(targets)
            .par_iter()
            .map(|g| {
                let mut acc = vec![0i128; len];
                self.visit_group(g, &mut |i, poly| {
                    let w = weights[i];
                    for (a, &x) in acc.iter_mut().zip(poly) {
                        *a += w * x;
                    }
                });
                acc
            })
            .reduce(
                || vec![0i128; len],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gint::GaussPrime;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 4).len(), 35);
        assert_eq!(compositions(8, 5).len(), 495);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn shared_expansion_matches_direct() {
        let ctx = PrimeContext::new(GaussPrime::new(2, 3).unwrap()).unwrap();
        let ex = Expander::new(&ctx, 4);
        let targets = compositions(4, 4);
        let many = ex.expand_many(&targets);
        for (t, e) in targets.iter().zip(&many) {
            assert_eq!(&ex.expand(t), e);
        }
        let w: Vec<i128> = (0..targets.len() as i128).collect();
        let sum = ex.expand_weighted(&targets, &w);
        let mut direct = vec![0i128; sum.len()];
        for (i, e) in many.iter().enumerate() {
            for (d, x) in direct.iter_mut().zip(e) {
                *d += i as i128 * x;
            }
        }
        assert_eq!(sum, direct);
    }

    #[test]
    fn z0_power_is_rational() {
        // Z_0^n = (z_0 + 4 Σ z_s)^n has multinomial · 4^{n − t_0} coefficients.
        let ctx = PrimeContext::new(GaussPrime::new(1, 4).unwrap()).unwrap();
        let ex = Expander::new(&ctx, 3);
        let e = ex.expand(&[3, 0, 0, 0, 0]);
        for (t, c) in ex.compositions().iter().zip(e.chunks_exact(ex.dim())) {
            let v = PeriodAlgebra::as_rational(c).unwrap();
            let nonzero: u32 = t[1..].iter().sum();
            let multi = 6 / t.iter().map(|&x| (1..=x as i128).product::<i128>()).product::<i128>();
            assert_eq!(v, multi * 4i128.pow(nonzero));
        }
    }
}
