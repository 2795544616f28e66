//! Codes over G_p = Z[i]/(p) for a rational prime p ≡ 3 (mod 4).
//!
//! Here the Mannheim weight of `x + yi` is `wt_L(x) + wt_L(y)` and the map
//! φ splitting a vector into real and imaginary halves carries a G_p-linear
//! `[n,k]` code onto a Z_p-linear `[2n,2k]` code with the same weight
//! distribution (Lee weight on the image). For π = 1+i the residue ring is
//! F_2 and the Mannheim weight coincides with the Hamming weight; that case
//! needs no code of its own.

use std::collections::BTreeMap;

use crate::arith::is_prime;
use crate::error::{check_budget, Error, Result};
use crate::fp::{self, Elem, Matrix};

/// A vector over G_p with entries `x_j + y_j i`, `0 ≤ x_j, y_j < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GpVector {
    pub p: Elem,
    pub entries: Vec<(Elem, Elem)>,
}

impl GpVector {
    pub fn new(p: Elem, entries: Vec<(Elem, Elem)>) -> Result<Self> {
        check_p(p)?;
        if let Some(&(x, y)) = entries.iter().find(|&&(x, y)| x >= p || y >= p) {
            return Err(Error::BadEntries(format!("({x},{y}) not reduced mod {p}")));
        }
        Ok(GpVector { p, entries })
    }

    pub fn zero(p: Elem, n: usize) -> Self {
        GpVector {
            p,
            entries: vec![(0, 0); n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `λ · self` for `λ = μ + υi`.
    pub fn scale(&self, lambda: (Elem, Elem)) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&e| gp_mul(e, lambda, self.p))
            .collect();
        GpVector { p: self.p, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.p;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&(a, b), &(c, d))| (fp::add(a, c, p), fp::add(b, d, p)))
            .collect();
        GpVector { p, entries }
    }

    /// `i · self`.
    pub fn mul_i(&self) -> Self {
        self.scale((0, 1))
    }
}

fn check_p(p: Elem) -> Result<()> {
    if p % 4 == 3 && is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotGaussianPrime(format!(
            "{p} (need a rational prime p = 3 mod 4)"
        )))
    }
}

/// `(a + bi)(c + di)` in G_p.
pub fn gp_mul((a, b): (Elem, Elem), (c, d): (Elem, Elem), p: Elem) -> (Elem, Elem) {
    (
        fp::sub(fp::mul(a, c, p), fp::mul(b, d, p), p),
        fp::add(fp::mul(a, d, p), fp::mul(b, c, p), p),
    )
}

/// `min(x, p − x)`.
pub fn lee_weight(x: Elem, p: Elem) -> u32 {
    let x = x % p;
    x.min(p - x)
}

pub fn lee_weight_vec(v: &[Elem], p: Elem) -> u32 {
    v.iter().map(|&x| lee_weight(x, p)).sum()
}

/// Mannheim weight of a vector over G_p.
pub fn mannheim_weight_3mod4(v: &GpVector) -> u32 {
    v.entries
        .iter()
        .map(|&(x, y)| lee_weight(x, v.p) + lee_weight(y, v.p))
        .sum()
}

/// `(x_1, …, x_n, y_1, …, y_n)`.
pub fn phi(v: &GpVector) -> Vec<Elem> {
    v.entries
        .iter()
        .map(|e| e.0)
        .chain(v.entries.iter().map(|e| e.1))
        .collect()
}

/// Generator `[[X, Y], [−Y, X]]` of the lifted `[2n, 2k]` code over Z_p.
pub fn lift_code(g: &[GpVector]) -> Result<Matrix> {
    let Some(first) = g.first() else {
        return Ok(Vec::new());
    };
    let (p, n) = (first.p, first.len());
    check_p(p)?;
    if let Some(bad) = g.iter().find(|r| r.p != p || r.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "row of length {} over p = {} in a length-{n} code over p = {p}",
            bad.len(),
            bad.p
        )));
    }
    let mut rows: Matrix = g.iter().map(phi).collect();
    rows.extend(g.iter().map(|r| phi(&r.mul_i())));
    let r = fp::rank(&rows, p);
    if r < rows.len() {
        return Err(Error::RankDeficient {
            rank: r,
            expected: rows.len(),
        });
    }
    Ok(rows)
}

/// Mannheim weight histogram of the G_p-span of `g`, by full enumeration.
pub fn mannheim_histogram(g: &[GpVector], budget: u64) -> Result<BTreeMap<u32, u64>> {
    let Some(first) = g.first() else {
        return Ok(BTreeMap::from([(0, 1)]));
    };
    let (p, n, k) = (first.p, first.len(), g.len());
    check_budget(
        "G_p codeword enumeration",
        (p as u128 * p as u128).pow(k as u32),
        budget,
    )?;
    let mut hist = BTreeMap::new();
    let mut msg = vec![(0, 0); k];
    loop {
        let mut word = GpVector::zero(p, n);
        for (lambda, row) in msg.iter().zip(g) {
            word = word.add(&row.scale(*lambda));
        }
        *hist.entry(mannheim_weight_3mod4(&word)).or_insert(0) += 1;
        // Odometer over (x, y) pairs.
        let mut i = 0;
        loop {
            if i == k {
                return Ok(hist);
            }
            let (x, y) = &mut msg[i];
            *x += 1;
            if *x == p {
                *x = 0;
                *y += 1;
                if *y == p {
                    *y = 0;
                    i += 1;
                    continue;
                }
            }
            break;
        }
    }
}

/// Lee weight histogram of the Z_p-span of the rows of `g`.
pub fn lee_histogram(g: &[Vec<Elem>], p: Elem, budget: u64) -> Result<BTreeMap<u32, u64>> {
    let k = g.len();
    check_budget("Z_p codeword enumeration", (p as u128).pow(k as u32), budget)?;
    let total = (p as u64).pow(k as u32);
    let mut hist = BTreeMap::new();
    for idx in 0..total {
        let msg = fp::index_to_vec(idx, k, p);
        let word = fp::vec_mat(&msg, g, p);
        *hist.entry(lee_weight_vec(&word, p)).or_insert(0) += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gv(p: Elem, e: &[(Elem, Elem)]) -> GpVector {
        GpVector::new(p, e.to_vec()).unwrap()
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(5, 7), 2);
        assert_eq!(lee_weight(0, 7), 0);
        assert_eq!(lee_weight(3, 7), 3);
    }

    #[test]
    fn mannheim_examples() {
        assert_eq!(mannheim_weight_3mod4(&gv(7, &[(1, 1)])), 2);
        assert_eq!(mannheim_weight_3mod4(&gv(7, &[(0, 0)])), 0);
        assert_eq!(mannheim_weight_3mod4(&gv(7, &[(6, 5)])), 3);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&gv(7, &[(1, 2), (3, 4)])), vec![1, 3, 2, 4]);
        assert_eq!(phi(&GpVector::zero(7, 3)), vec![0; 6]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let r = gv(7, &(0..3).map(|_| (rng.gen_range(0..7), rng.gen_range(0..7))).collect::<Vec<_>>());
            let (mu, up) = (rng.gen_range(0..7), rng.gen_range(0..7));
            let lhs = phi(&r.scale((mu, up)));
            let rhs = fp::add_vec(&fp::scale(&phi(&r), mu, 7), &fp::scale(&phi(&r.mul_i()), up, 7), 7);
            assert_eq!(lhs, rhs);
            assert_eq!(lee_weight_vec(&phi(&r), 7), mannheim_weight_3mod4(&r));
        }
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_code(&[gv(7, &[(1, 1)])]).unwrap(), vec![vec![1, 1], vec![6, 1]]);
        let id = lift_code(&[gv(7, &[(1, 0), (0, 0)]), gv(7, &[(0, 0), (1, 0)])]).unwrap();
        assert_eq!(
            id,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        );
        let dep = [gv(7, &[(1, 0), (2, 0)]), gv(7, &[(0, 1), (0, 2)])];
        assert!(matches!(lift_code(&dep), Err(Error::RankDeficient { .. })));
        assert!(GpVector::new(13, vec![(1, 1)]).is_err());
    }

    #[test]
    fn random_lifts_preserve_distribution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 20 {
            let p = if checked % 2 == 0 { 7 } else { 11 };
            let n = rng.gen_range(1..=3);
            let k = 1;
            let g: Vec<GpVector> = (0..k)
                .map(|_| gv(p, &(0..n).map(|_| (rng.gen_range(0..p), rng.gen_range(0..p))).collect::<Vec<_>>()))
                .collect();
            let Ok(lifted) = lift_code(&g) else { continue };
            assert_eq!(
                mannheim_histogram(&g, DEFAULT_BUDGET).unwrap(),
                lee_histogram(&lifted, p, DEFAULT_BUDGET).unwrap()
            );
            checked += 1;
        }
    }
}
