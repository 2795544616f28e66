//! Phase-one simplex: does `A x = b, x ≥ 0` have a solution?

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Scalars the simplex can pivot over.
pub trait LpScalar: Clone + Signed + PartialOrd + Send + Sync {
    fn from_bigint(x: &BigInt) -> Self;
    /// Treated as strictly positive by pivot rules.
    fn is_pos(&self) -> bool;
    /// Treated as zero when reading off the phase-one objective.
    fn is_negligible(&self) -> bool;
}

impl LpScalar for BigRational {
    fn from_bigint(x: &BigInt) -> Self {
        BigRational::from_integer(x.clone())
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl LpScalar for f64 {
    fn from_bigint(x: &BigInt) -> Self {
        x.to_f64().unwrap_or(f64::NAN)
    }
    fn is_pos(&self) -> bool {
        *self > 1e-9
    }
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-7
    }
}

/// Dense tableau for the phase-one problem `min Σ a_i` subject to
/// `A x + a = b`, `x, a ≥ 0`, with `b ≥ 0` arranged by row negation.
/// Bland's rule guarantees termination.
pub struct Simplex<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    /// Reduced objective over the structural and artificial columns.
    obj: Vec<T>,
    obj_rhs: T,
    basis: Vec<usize>,
    vars: usize,
}

/// Exact verdicts.
pub type ExactSimplex = Simplex<BigRational>;
/// Fast prescreen; verdicts near the boundary are not reliable.
pub type FloatSimplex = Simplex<f64>;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T> {
    Feasible(Vec<T>),
    Infeasible,
}

impl<T: LpScalar> LpOutcome<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

impl<T: LpScalar> Simplex<T> {
    pub fn new(a: &[Vec<BigInt>], b: &[BigInt]) -> Self {
        let vars = a.first().map_or(0, Vec::len);
        let r = a.len();
        let mut rows = Vec::with_capacity(r);
        let mut rhs = Vec::with_capacity(r);
        for (i, (row, bi)) in a.iter().zip(b).enumerate() {
            let flip = bi.is_negative();
            let mut out: Vec<T> = row
                .iter()
                .map(|x| {
                    let v = T::from_bigint(x);
                    if flip {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            out.extend((0..r).map(|k| if k == i { T::one() } else { T::zero() }));
            rows.push(out);
            rhs.push(T::from_bigint(&bi.abs()));
        }
        let mut obj = vec![T::zero(); vars + r];
        let mut obj_rhs = T::zero();
        for (row, b) in rows.iter().zip(&rhs) {
            for (o, x) in obj.iter_mut().zip(&row[..vars]) {
                *o = o.clone() + x.clone();
            }
            obj_rhs = obj_rhs + b.clone();
        }
        Simplex {
            rows,
            rhs,
            obj,
            obj_rhs,
            basis: (vars..vars + r).collect(),
            vars,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = T::one() / self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        self.rhs[r] = self.rhs[r].clone() * inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        let nz: Vec<usize> = (0..prow.len()).filter(|&k| !prow[k].is_zero()).collect();
        let eliminate = |row: &mut Vec<T>, rhs: &mut T| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &k in &nz {
                row[k] = row[k].clone() - f.clone() * prow[k].clone();
            }
            *rhs = rhs.clone() - f * prhs.clone();
        };
        for i in 0..self.rows.len() {
            if i != r {
                let (mut row, mut rhs) = (std::mem::take(&mut self.rows[i]), self.rhs[i].clone());
                eliminate(&mut row, &mut rhs);
                self.rows[i] = row;
                self.rhs[i] = rhs;
            }
        }
        let (mut obj, mut orhs) = (std::mem::take(&mut self.obj), self.obj_rhs.clone());
        eliminate(&mut obj, &mut orhs);
        self.obj = obj;
        self.obj_rhs = orhs;
        self.basis[r] = c;
    }

    pub fn solve(mut self) -> LpOutcome<T> {
        loop {
            // Artificial columns never re-enter.
            let Some(c) = (0..self.vars).find(|&j| self.obj[j].is_pos()) else {
                break;
            };
            let mut best: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_pos() {
                    let ratio = self.rhs[i].clone() / row[c].clone();
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                // Unbounded direction cannot occur: the objective is ≥ 0.
                None => break,
            }
        }
        if !self.obj_rhs.is_negligible() {
            return LpOutcome::Infeasible;
        }
        let mut x = vec![T::zero(); self.vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.vars {
                x[b] = self.rhs[i].clone();
            }
        }
        LpOutcome::Feasible(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_systems() {
        // x + y = 3, x − y = 1 → (2, 1).
        let a = bi(&[&[1, 1], &[1, -1]]);
        let out = ExactSimplex::new(&a, &bv(&[3, 1])).solve();
        let two = BigRational::from_integer(2.into());
        assert_eq!(out, LpOutcome::Feasible(vec![two, BigRational::from_integer(1.into())]));
        // x − y = 1, x − y = 2 is inconsistent.
        assert!(!ExactSimplex::new(&bi(&[&[1, -1], &[1, -1]]), &bv(&[1, 2])).solve().is_feasible());
        // x + y = −1 has no nonnegative solution.
        assert!(!ExactSimplex::new(&bi(&[&[1, 1]]), &bv(&[-1])).solve().is_feasible());
        assert!(FloatSimplex::new(&a, &bv(&[3, 1])).solve().is_feasible());
        // 2x = 1 needs a fractional value.
        match ExactSimplex::new(&bi(&[&[2]]), &bv(&[1])).solve() {
            LpOutcome::Feasible(x) => assert_eq!(x[0], BigRational::new(1.into(), 2.into())),
            LpOutcome::Infeasible => panic!("feasible"),
        }
    }

    #[test]
    fn degenerate_and_redundant_rows() {
        let a = bi(&[&[1, 1, 0], &[2, 2, 0], &[0, 1, 1], &[1, 2, 1]]);
        let b = bv(&[2, 4, 1, 3]);
        match ExactSimplex::new(&a, &b).solve() {
            LpOutcome::Feasible(x) => {
                for (row, bi) in a.iter().zip(&b) {
                    let lhs: BigRational = row
                        .iter()
                        .zip(&x)
                        .map(|(c, v)| BigRational::from_integer(c.clone()) * v)
                        .sum();
                    assert_eq!(lhs, BigRational::from_integer(bi.clone()));
                }
                assert!(x.iter().all(|v| !v.is_negative()));
            }
            LpOutcome::Infeasible => panic!("feasible"),
        }
    }
}
