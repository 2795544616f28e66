use std::sync::Arc;

use crate::error::{check_budget, Error, Result};
use crate::fp::{self, Elem, Matrix};
use crate::ring::PrimeContext;

use super::LinearCode;

/// `(i_1 G, i_2 G, …, i_m G)`: every nonzero codeword `v` maps to a word of
/// Mannheim weight `S(a,b) · w_H(v)`.
pub fn construct_l(code: &LinearCode) -> Result<LinearCode> {
    let ctx = code.ctx();
    let p = ctx.p();
    let rows = code
        .generator()
        .iter()
        .map(|row| {
            ctx.leaders()
                .iter()
                .flat_map(|&l| fp::scale(row, l, p))
                .collect()
        })
        .collect();
    code.with_generator(rows)
}

/// Columns: one representative (first nonzero entry 1) of every
/// one-dimensional subspace of F_p^k, in lexicographic order.
fn projective_columns(p: Elem, k: usize) -> Vec<Vec<Elem>> {
    let total = (p as u64).pow(k as u32);
    (1..total)
        .map(|i| fp::index_to_vec(i, k, p))
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

fn check_simplex(ctx: &PrimeContext, k: usize, budget: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::DimensionMismatch("simplex codes need k >= 1".into()));
    }
    check_budget(
        "simplex code length",
        (ctx.p() as u128).checked_pow(k as u32).unwrap_or(u128::MAX),
        budget,
    )
}

/// The `[(p^k−1)/(p−1), k, p^{k−1}]` simplex code `S_{k,p}`.
pub fn simplex_prime(ctx: Arc<PrimeContext>, k: usize, budget: u64) -> Result<LinearCode> {
    check_simplex(&ctx, k, budget)?;
    let cols = projective_columns(ctx.p(), k);
    LinearCode::from_generator(ctx, fp::transpose(&cols))
}

/// `S'_{k,p} = {(v, 2v, …, (p−1)v) : v ∈ S_{k,p}}`, of length `p^k − 1`.
pub fn extended_simplex(ctx: Arc<PrimeContext>, k: usize, budget: u64) -> Result<LinearCode> {
    let base = simplex_prime(ctx.clone(), k, budget)?;
    let p = ctx.p();
    let rows = base
        .generator()
        .iter()
        .map(|row| (1..p).flat_map(|c| fp::scale(row, c, p)).collect())
        .collect();
    LinearCode::from_generator(ctx, rows)
}

/// Side-by-side juxtaposition `(G_1 | G_2)`. An empty second matrix (no
/// rows, or rows of length zero) returns the first code unchanged.
pub fn concat_codes(first: &LinearCode, second: &[Vec<Elem>]) -> Result<LinearCode> {
    if second.is_empty() || second.iter().all(Vec::is_empty) {
        return Ok(first.clone());
    }
    if second.len() != first.k() {
        return Err(Error::DimensionMismatch(format!(
            "cannot juxtapose a {}-row generator with a {}-row generator",
            first.k(),
            second.len()
        )));
    }
    let rows: Matrix = first
        .generator()
        .iter()
        .zip(second)
        .map(|(a, b)| a.iter().chain(b).copied().collect())
        .collect();
    first.with_generator(rows)
}

/// The one-Mannheim-error-correcting code of length `(p−1)/4` whose parity
/// check is the row of coset leaders.
pub fn omec_code(ctx: Arc<PrimeContext>) -> Result<LinearCode> {
    let h = vec![ctx.leaders().to_vec()];
    LinearCode::from_parity_check(ctx, h)
}

/// Which monomial transforms are admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialFlavor {
    /// Nonzero entries in H = {±1, ±γ}; preserves Mannheim weights.
    Units,
    /// Nonzero entries in {1, p−1}; additionally preserves self-duality.
    Signs,
}

/// The code `C · M` for a monomial matrix `M`.
pub fn apply_monomial(code: &LinearCode, m: &[Vec<Elem>], flavor: MonomialFlavor) -> Result<LinearCode> {
    let n = code.n();
    let p = code.p();
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(Error::NotMonomial(format!("expected a {n}x{n} matrix")));
    }
    let row_ok = m.iter().all(|r| r.iter().filter(|&&x| x % p != 0).count() == 1);
    let col_ok = (0..n).all(|j| m.iter().filter(|r| r[j] % p != 0).count() == 1);
    if !row_ok || !col_ok {
        return Err(Error::NotMonomial(
            "each row and column needs exactly one nonzero entry".into(),
        ));
    }
    let allowed: Vec<Elem> = match flavor {
        MonomialFlavor::Units => code.ctx().units().to_vec(),
        MonomialFlavor::Signs => vec![1, p - 1],
    };
    if let Some(&x) = m
        .iter()
        .flatten()
        .find(|&&x| x % p != 0 && !allowed.contains(&(x % p)))
    {
        return Err(Error::BadEntries(format!(
            "{x} is not an allowed monomial entry ({flavor:?})"
        )));
    }
    let rows = code
        .generator()
        .iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(m)
                        .fold(0, |acc, (&x, mr)| fp::add(acc, fp::mul(x, mr[j] % p, p), p))
                })
                .collect()
        })
        .collect();
    code.with_generator(rows)
}
