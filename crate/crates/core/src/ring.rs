//! The residue field G_π ≅ F_p for a Gaussian prime π over p ≡ 1 (mod 4):
//! the square root of −1 matching `i`, the unit group H = {±1, ±γ}, the coset
//! decomposition of F_p^*, and dense Mannheim weight tables.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::{mod_inv, primitive_root};
use crate::error::{Error, Result};
use crate::fp::{self, Elem};
use crate::gint::{eta, GaussPrime, Gaussian};

/// Immutable derived structure of F_p viewed as Z[i]/(π).
#[derive(Clone, Debug)]
pub struct PrimeContext {
    pi: GaussPrime,
    p: Elem,
    gamma: Elem,
    units: [Elem; 4],
    leaders: Vec<Elem>,
    weight: Vec<u32>,
    coset: Vec<usize>,
    reps: Vec<Gaussian<i64>>,
    alpha_prim: Elem,
    sigma: Vec<usize>,
}

impl PrimeContext {
    pub fn new(pi: GaussPrime) -> Result<Self> {
        let p64 = pi.p();
        if p64 > 1 << 24 {
            return Err(Error::NotGaussianPrime(format!(
                "{pi}: p = {p64} is too large for dense tables"
            )));
        }
        let p = p64 as Elem;
        let gamma = ((p64 - pi.a() * mod_inv(pi.b(), p64) % p64) % p64) as Elem;
        let units = [1, gamma, p - 1, p - gamma];

        let m = (p as usize - 1) / 4;
        let mut coset = vec![0usize; p as usize];
        let mut leaders = Vec::with_capacity(m);
        for x in 1..p {
            if coset[x as usize] != 0 {
                continue;
            }
            leaders.push(x);
            for &u in &units {
                coset[fp::mul(x, u, p) as usize] = leaders.len();
            }
        }
        debug_assert_eq!(leaders.len(), m);

        let reps: Vec<Gaussian<i64>> = (0..p as i64).map(|x| eta(x, &pi)).collect();
        let weight = reps.iter().map(|r| r.taxicab() as u32).collect();

        let alpha_prim = primitive_root(p64) as Elem;
        let sigma = leaders
            .iter()
            .map(|&l| coset[fp::mul(alpha_prim, l, p) as usize])
            .collect();

        Ok(PrimeContext {
            pi,
            p,
            gamma,
            units,
            leaders,
            weight,
            coset,
            reps,
            alpha_prim,
            sigma,
        })
    }

    /// Convenience constructor returning a shared handle.
    pub fn shared(pi: GaussPrime) -> Result<Arc<Self>> {
        Self::new(pi).map(Arc::new)
    }

    pub fn pi(&self) -> GaussPrime {
        self.pi
    }

    pub fn p(&self) -> Elem {
        self.p
    }

    /// γ with γ² = −1 and η(γ) = i.
    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    /// `[1, γ, p−1, p−γ]`.
    pub fn units(&self) -> [Elem; 4] {
        self.units
    }

    /// `H` sorted ascending.
    pub fn unit_group_sorted(&self) -> [Elem; 4] {
        let mut h = self.units;
        h.sort_unstable();
        h
    }

    /// Number of cosets of H in F_p^*, `(p−1)/4`.
    pub fn num_cosets(&self) -> usize {
        self.leaders.len()
    }

    /// Sorted smallest representatives `i_1 < i_2 < …`.
    pub fn leaders(&self) -> &[Elem] {
        &self.leaders
    }

    /// Mannheim weight of `x ∈ [0, p)`.
    #[inline]
    pub fn weight(&self, x: Elem) -> u32 {
        self.weight[x as usize]
    }

    pub fn weight_table(&self) -> &[u32] {
        &self.weight
    }

    /// Minimal-weight Gaussian representative of `x`.
    pub fn representative(&self, x: Elem) -> &Gaussian<i64> {
        &self.reps[x as usize]
    }

    /// 1-based coset index of nonzero `x`.
    pub fn coset_index(&self, x: Elem) -> Result<usize> {
        match self.coset_raw(x % self.p) {
            0 => Err(Error::ZeroHasNoCoset),
            j => Ok(j),
        }
    }

    /// Coset index with 0 standing for the zero element.
    #[inline]
    pub fn coset_raw(&self, x: Elem) -> usize {
        self.coset[x as usize]
    }

    /// Mannheim weight shared by all elements of coset `j` (1-based).
    pub fn coset_weight(&self, j: usize) -> u32 {
        if j == 0 {
            0
        } else {
            self.weight(self.leaders[j - 1])
        }
    }

    /// `(a+b−1)/2`, the last weight with `4j` elements.
    pub fn t_threshold(&self) -> u64 {
        (self.pi.a() + self.pi.b() - 1) / 2
    }

    /// Number of elements of each weight `0..=b−1`, tallied from the table.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let max = *self.weight.iter().max().unwrap_or(&0) as usize;
        let mut counts = vec![0u64; max + 1];
        for &w in &self.weight {
            counts[w as usize] += 1;
        }
        counts
    }

    /// The closed-form distribution `1, 4j (j ≤ t), 4(b−j) (t < j < b)`.
    pub fn predicted_distribution(&self) -> Vec<u64> {
        let (b, t) = (self.pi.b(), self.t_threshold());
        let mut w = vec![1u64];
        for j in 1..b {
            w.push(if j <= t { 4 * j } else { 4 * (b - j) });
        }
        w
    }

    /// `S(a,b) = Σ_{j≤t} j² + Σ_{t<j<b} j(b−j)`.
    pub fn s_value(&self) -> u64 {
        let (b, t) = (self.pi.b(), self.t_threshold());
        (1..b).map(|j| if j <= t { j * j } else { j * (b - j) }).sum()
    }

    /// Smallest primitive root mod p.
    pub fn alpha_prim(&self) -> Elem {
        self.alpha_prim
    }

    /// `σ(j)`, the coset of `α_prim · i_j`, for 1-based `j`.
    pub fn sigma(&self, j: usize) -> usize {
        self.sigma[j - 1]
    }

    /// `σ` as a list `[σ(1), σ(2), …]`.
    pub fn sigma_table(&self) -> &[usize] {
        &self.sigma
    }

    /// One representative λ per coset, i.e. the leaders. Scanning these covers
    /// every nonzero scalar up to a unit.
    pub fn scalar_transversal(&self) -> &[Elem] {
        &self.leaders
    }

    /// JSON-friendly snapshot used by the CLI.
    pub fn summary(&self) -> ContextSummary {
        ContextSummary {
            pi: self.pi.to_string(),
            p: self.p,
            gamma: self.gamma,
            h: self.unit_group_sorted().to_vec(),
            leaders: self.leaders.clone(),
            weights: self.weight.clone(),
            s: self.s_value(),
            sigma: self.sigma.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ContextSummary {
    pub pi: String,
    pub p: Elem,
    pub gamma: Elem,
    #[serde(rename = "H")]
    pub h: Vec<Elem>,
    pub leaders: Vec<Elem>,
    pub weights: Vec<u32>,
    #[serde(rename = "S")]
    pub s: u64,
    pub sigma: Vec<usize>,
}

/// Every Gaussian prime `a+bi` with `0 < a < b` and `a²+b² ≤ max_p`.
pub fn gaussian_primes_up_to(max_p: u64) -> Vec<GaussPrime> {
    let mut out = Vec::new();
    let mut b = 2;
    while b * b < max_p {
        for a in 1..b {
            if a * a + b * b > max_p {
                break;
            }
            if let Ok(pi) = GaussPrime::new(a, b) {
                out.push(pi);
            }
        }
        b += 1;
    }
    out.sort_by_key(|pi| pi.p());
    out
}

/// The canonical Gaussian prime over the rational prime `p ≡ 1 (mod 4)`.
pub fn prime_over(p: u64) -> Result<GaussPrime> {
    let mut a = 1;
    while 2 * a * a < p {
        let rest = p - a * a;
        let b = (rest as f64).sqrt().round() as u64;
        if b * b == rest {
            return GaussPrime::new(a, b);
        }
        a += 1;
    }
    Err(Error::NotGaussianPrime(format!("p = {p}")))
}
