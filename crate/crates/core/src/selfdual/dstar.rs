//! The feasibility system whose largest solvable d bounds the Mannheim
//! distance of self-dual codes of length n.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{check_budget, Error, Result};
use crate::ring::PrimeContext;

use super::lp::{ExactSimplex, FloatSimplex, LpOutcome};
use super::transform::Expander;
use super::{allowed_compositions, phi_orbit, Composition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpMode {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub n: usize,
    pub d: u32,
    pub feasible: bool,
    /// Free φ-orbit variables after the weight window.
    pub variables: usize,
    /// Independent equations handed to the simplex.
    pub equations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DstarReport {
    pub p: u32,
    pub n: usize,
    pub mode: LpMode,
    pub dstar: u32,
    pub steps: Vec<Feasibility>,
}

/// One column per φ-orbit of allowed nonzero compositions.
struct OrbitColumn {
    min_weight: u32,
    /// Dense over (composition of n, period coordinate).
    col: Vec<i128>,
}

/// The equations `p^{n/2} A(t) = Σ_{t'} A(t') [z^t] Π Z_j^{t'_j}`, split
/// into period coordinates, with `A(zero) = 1` moved to the right.
pub struct DstarSystem {
    p: u32,
    n: usize,
    rows: usize,
    orbits: Vec<OrbitColumn>,
    rhs: Vec<i128>,
}

const MOD: u64 = (1 << 61) - 1;

fn to_mod(x: i128) -> u64 {
    x.rem_euclid(MOD as i128) as u64
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD as u128) as u64
}

fn invmod(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a, MOD - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

impl DstarSystem {
    pub fn new(ctx: &PrimeContext, n: usize, budget: u64) -> Result<Self> {
        let weights: Vec<u32> = (0..=ctx.num_cosets()).map(|j| ctx.coset_weight(j)).collect();
        Self::with_coset_weights(ctx, n, &weights, budget)
    }

    /// Same system, but the weight window uses `weights[j]` as the weight of
    /// coset j (index 0 is the zero element). Useful for checking how the
    /// bound reacts to a different weight assignment.
    pub fn with_coset_weights(ctx: &PrimeContext, n: usize, weights: &[u32], budget: u64) -> Result<Self> {
        if weights.len() != ctx.num_cosets() + 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coset weights, got {}",
                ctx.num_cosets() + 1,
                weights.len()
            )));
        }
        if !n.is_multiple_of(2) || n == 0 {
            return Err(Error::DimensionMismatch(format!("self-dual length must be even, got {n}")));
        }
        let ex = Expander::new(ctx, n);
        let comps = ex.compositions();
        let m = ex.dim();
        let allowed = allowed_compositions(ctx, n);
        let zero = comps
            .iter()
            .find(|t| t[0] as usize == n)
            .expect("zero composition")
            .clone();
        check_budget(
            "d* system expansion",
            (allowed.len() as u128) * (comps.len() as u128) * n as u128,
            budget,
        )?;
        let index: HashMap<&Composition, usize> = comps.iter().enumerate().map(|(i, t)| (t, i)).collect();

        let mut seen = BTreeSet::new();
        let mut orbits: Vec<Vec<Composition>> = Vec::new();
        for t in allowed.iter().filter(|t| **t != zero) {
            if seen.contains(t) {
                continue;
            }
            let orb = phi_orbit(ctx, t);
            seen.extend(orb.iter().cloned());
            orbits.push(orb);
        }

        let mut targets: Vec<Composition> = vec![zero.clone()];
        targets.extend(orbits.iter().flatten().cloned());
        let expansions = ex.expand_many(&targets);
        let scale = (ctx.p() as i128).pow(n as u32 / 2);
        let rows = comps.len() * m;

        let mut rhs: Vec<i128> = expansions[0].iter().map(|&x| -x).collect();
        let zi = index[&zero];
        for c in 0..m {
            rhs[zi * m + c] -= scale;
        }
        let mut cols = Vec::with_capacity(orbits.len());
        let mut next = 1;
        for orb in &orbits {
            let mut col = vec![0i128; rows];
            for t in orb {
                for (a, &x) in col.iter_mut().zip(&expansions[next]) {
                    *a += x;
                }
                next += 1;
                let ti = index[t];
                for c in 0..m {
                    col[ti * m + c] += scale;
                }
            }
            cols.push(OrbitColumn {
                min_weight: orb
                    .iter()
                    .map(|t| t.iter().zip(weights).map(|(&c, &w)| c * w).sum())
                    .min()
                    .unwrap_or(0),
                col,
            });
        }
        Ok(DstarSystem {
            p: ctx.p(),
            n,
            rows,
            orbits: cols,
            rhs,
        })
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Row indices whose augmented rows are independent modulo a large prime,
    /// hence independent over Q.
    fn select_rows(&self, vars: &[usize]) -> Vec<usize> {
        let width = vars.len() + 1;
        let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
        let mut chosen = Vec::new();
        for r in 0..self.rows {
            if basis.len() == width {
                break;
            }
            let mut row: Vec<u64> = vars.iter().map(|&v| to_mod(self.orbits[v].col[r])).collect();
            row.push(to_mod(self.rhs[r]));
            if row.iter().all(|&x| x == 0) {
                continue;
            }
            for (piv, b) in &basis {
                let f = row[*piv];
                if f != 0 {
                    for (x, &y) in row.iter_mut().zip(b) {
                        *x = (*x + MOD - mulmod(f, y)) % MOD;
                    }
                }
            }
            if let Some(piv) = row.iter().position(|&x| x != 0) {
                let inv = invmod(row[piv]);
                row.iter_mut().for_each(|x| *x = mulmod(*x, inv));
                basis.push((piv, row));
                chosen.push(r);
            }
        }
        chosen
    }

    fn violated_row(&self, vars: &[usize], x: &[BigRational]) -> Option<usize> {
        (0..self.rows).find(|&r| {
            let lhs: BigRational = vars
                .iter()
                .zip(x)
                .filter(|(_, v)| !v.is_zero())
                .map(|(&v, xv)| xv * BigRational::from_integer(BigInt::from(self.orbits[v].col[r])))
                .sum();
            lhs != BigRational::from_integer(BigInt::from(self.rhs[r]))
        })
    }

    /// Does the system with the weight window `0 < wt < d` admit a
    /// nonnegative rational solution?
    pub fn feasible(&self, d: u32, mode: LpMode) -> Feasibility {
        let vars: Vec<usize> = (0..self.orbits.len())
            .filter(|&v| self.orbits[v].min_weight >= d)
            .collect();
        let mut rows = self.select_rows(&vars);
        let build = |rows: &[usize]| {
            let a: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&r| vars.iter().map(|&v| BigInt::from(self.orbits[v].col[r])).collect())
                .collect();
            let b: Vec<BigInt> = rows.iter().map(|&r| BigInt::from(self.rhs[r])).collect();
            (a, b)
        };
        let feasible = loop {
            let (a, b) = build(&rows);
            match mode {
                LpMode::Float => break FloatSimplex::new(&a, &b).solve().is_feasible(),
                LpMode::Exact => match ExactSimplex::new(&a, &b).solve() {
                    LpOutcome::Infeasible => break false,
                    LpOutcome::Feasible(x) => {
                        debug_assert!(x.iter().all(|v| !v.is_negative()));
                        match self.violated_row(&vars, &x) {
                            None => break true,
                            Some(r) => rows.push(r),
                        }
                    }
                },
            }
        };
        Feasibility {
            n: self.n,
            d,
            feasible,
            variables: vars.len(),
            equations: rows.len(),
        }
    }

    /// Largest d with a feasible system, scanning upward from 2.
    pub fn dstar(&self, mode: LpMode) -> DstarReport {
        let mut steps = Vec::new();
        let mut d = 2;
        loop {
            let f = self.feasible(d, mode);
            let ok = f.feasible;
            steps.push(f);
            if !ok {
                break;
            }
            d += 1;
        }
        DstarReport {
            p: self.p,
            n: self.n,
            mode,
            dstar: d - 1,
            steps,
        }
    }
}

pub fn feasible_at(ctx: &PrimeContext, n: usize, d: u32, budget: u64) -> Result<Feasibility> {
    Ok(DstarSystem::new(ctx, n, budget)?.feasible(d, LpMode::Exact))
}

pub fn dstar(ctx: &PrimeContext, n: usize, mode: LpMode, budget: u64) -> Result<DstarReport> {
    Ok(DstarSystem::new(ctx, n, budget)?.dstar(mode))
}
