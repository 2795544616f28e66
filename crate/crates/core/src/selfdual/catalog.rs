//! Long self-dual codes with the best known Mannheim distance.

use serde::Serialize;

use crate::codes::{LinearCode, Metric};
use crate::error::{Error, Result};
use crate::fp::{Elem, Matrix};
use crate::gint::GaussPrime;
use crate::ring::PrimeContext;

#[derive(Clone, Debug)]
pub struct CatalogCode {
    pub name: &'static str,
    pub pi: (u64, u64),
    /// Redundancy part A of the generator `[I | A]`.
    pub a: Vec<Vec<Elem>>,
    pub d_h: u32,
    pub d_pi: u32,
}

impl CatalogCode {
    pub fn generator(&self) -> Matrix {
        let k = self.a.len();
        self.a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut g = vec![0; k];
                g[i] = 1;
                g.extend_from_slice(row);
                g
            })
            .collect()
    }

    pub fn code(&self) -> Result<LinearCode> {
        let ctx = PrimeContext::shared(GaussPrime::new(self.pi.0, self.pi.1)?)?;
        LinearCode::from_generator(ctx, self.generator())
    }
}

pub fn catalog() -> Vec<CatalogCode> {
    vec![
        CatalogCode {
            name: "[10,5]_13",
            pi: (2, 3),
            a: vec![
                vec![9, 0, 1, 11, 11],
                vec![0, 8, 6, 11, 5],
                vec![1, 6, 1, 2, 3],
                vec![11, 11, 2, 3, 2],
                vec![11, 5, 3, 2, 10],
            ],
            d_h: 5,
            d_pi: 7,
        },
        CatalogCode {
            name: "[12,6]_13",
            pi: (2, 3),
            a: vec![
                vec![4, 0, 0, 1, 11, 11],
                vec![0, 2, 1, 0, 6, 7],
                vec![0, 1, 12, 6, 9, 7],
                vec![1, 0, 6, 3, 11, 12],
                vec![11, 6, 9, 11, 12, 9],
                vec![11, 7, 7, 12, 9, 6],
            ],
            d_h: 5,
            d_pi: 8,
        },
        CatalogCode {
            name: "[14,7]_13",
            pi: (2, 3),
            a: vec![
                vec![7, 1, 0, 0, 0, 7, 2],
                vec![1, 9, 0, 1, 7, 7, 0],
                vec![0, 0, 7, 1, 0, 11, 7],
                vec![0, 1, 1, 3, 2, 0, 6],
                vec![0, 7, 0, 2, 6, 7, 11],
                vec![7, 7, 11, 0, 7, 9, 12],
                vec![2, 0, 7, 6, 11, 12, 3],
            ],
            d_h: 5,
            d_pi: 8,
        },
        CatalogCode {
            name: "[10,5]_17",
            pi: (1, 4),
            a: vec![
                vec![3, 0, 1, 5, 10],
                vec![0, 2, 12, 6, 6],
                vec![1, 12, 16, 10, 5],
                vec![5, 6, 10, 12, 0],
                vec![10, 6, 5, 0, 5],
            ],
            d_h: 5,
            d_pi: 8,
        },
        CatalogCode {
            name: "[12,6]_17",
            pi: (1, 4),
            a: vec![
                vec![14, 0, 0, 1, 15, 11],
                vec![0, 15, 1, 0, 10, 8],
                vec![0, 1, 3, 10, 5, 0],
                vec![1, 0, 10, 15, 15, 14],
                vec![15, 10, 5, 15, 16, 1],
                vec![11, 8, 0, 14, 1, 5],
            ],
            d_h: 5,
            d_pi: 8,
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub name: String,
    pub p: Elem,
    pub n: usize,
    pub k: usize,
    pub self_dual: bool,
    pub d_h: u32,
    pub d_pi: u32,
    pub expected: (u32, u32),
    pub ok: bool,
}

/// Computes the distances of one catalog code without judging them.
pub fn verify_entry(entry: &CatalogCode, budget: u64) -> Result<CatalogReport> {
    let code = entry.code()?;
    let d_h = code.min_distance(Metric::Hamming, budget)?;
    let d_pi = code.min_distance(Metric::Mannheim, budget)?;
    let self_dual = code.is_self_dual();
    Ok(CatalogReport {
        name: entry.name.to_string(),
        p: code.p(),
        n: code.n(),
        k: code.k(),
        self_dual,
        d_h,
        d_pi,
        expected: (entry.d_h, entry.d_pi),
        ok: self_dual && (d_h, d_pi) == (entry.d_h, entry.d_pi),
    })
}

/// Checks every catalog code; the first mismatch is an error.
pub fn verify_catalog(budget: u64) -> Result<Vec<CatalogReport>> {
    let mut out = Vec::new();
    for entry in catalog() {
        let r = verify_entry(&entry, budget)?;
        if !r.ok {
            return Err(Error::CatalogMismatch(format!(
                "{}: self-dual {}, (d_H, d_pi) = ({}, {}), expected ({}, {})",
                r.name, r.self_dual, r.d_h, r.d_pi, entry.d_h, entry.d_pi
            )));
        }
        out.push(r);
    }
    Ok(out)
}
