//! The golden-table suite behind `reproduce-all`.

use std::fmt;
use std::sync::Arc;

use mannheim::bounds::{perfect2_candidates, sphere_packing_ok};
use mannheim::codes::{max_min_distance_systematic, omec_code};
use mannheim::decode::{syndrome, SyndromeTable};
use mannheim::fp::Elem;
use mannheim::selfdual::{
    catalog, dstar, enumerate_selfdual, max_selfdual_distance, verify_entry, DstarSystem, LpMode,
};
use mannheim::{Error, GaussPrime, LinearCode, Metric, PrimeContext, Result};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Differs from the printed value for a documented reason.
    Deviation,
    Skipped,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Deviation => "deviation",
            Status::Skipped => "skipped",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub id: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub long: bool,
    pub passed: usize,
    pub failed: usize,
    pub deviations: usize,
    pub skipped: usize,
    pub items: Vec<Item>,
}

enum Outcome {
    Ok(String),
    Bad(String),
    Deviates(String),
}

type Check = fn(u64) -> Result<Outcome>;

fn ctx(a: u64, b: u64) -> Result<Arc<PrimeContext>> {
    PrimeContext::shared(GaussPrime::new(a, b)?)
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Ok(detail)
    } else {
        Outcome::Bad(detail)
    }
}

fn leader_table(pi: (u64, u64), leaders: &[Elem], weights: &[u32]) -> Result<Outcome> {
    let c = ctx(pi.0, pi.1)?;
    let got: Vec<u32> = c.leaders().iter().map(|&x| c.weight(x)).collect();
    Ok(verdict(
        c.leaders() == leaders && got == weights,
        format!("leaders {:?}, weights {:?}", c.leaders(), got),
    ))
}

fn table1(_: u64) -> Result<Outcome> {
    leader_table((4, 5), &[1, 2, 3, 4, 6, 7, 8, 11, 12, 16], &[1, 2, 3, 4, 4, 3, 2, 3, 4, 4])
}

fn table2(_: u64) -> Result<Outcome> {
    leader_table(
        (5, 6),
        &[1, 2, 3, 4, 5, 7, 8, 9, 10, 13, 14, 15, 19, 20, 25],
        &[1, 2, 3, 4, 5, 5, 4, 3, 2, 3, 4, 5, 5, 4, 5],
    )
}

fn table3(_: u64) -> Result<Outcome> {
    let c = ctx(2, 5)?;
    let got: Vec<u32> = (1..=14).map(|x| c.weight(x)).collect();
    Ok(verdict(got == [1, 2, 3, 3, 2, 3, 3, 4, 4, 3, 2, 1, 2, 3], format!("weights of 1..14: {got:?}")))
}

fn distribution(_: u64) -> Result<Outcome> {
    let mut bad = Vec::new();
    for (a, b) in [(2, 3), (1, 4), (2, 5), (1, 6), (4, 5), (2, 7), (5, 6)] {
        let c = ctx(a, b)?;
        if c.weight_distribution() != c.predicted_distribution() {
            bad.push(c.p());
        }
    }
    Ok(verdict(bad.is_empty(), format!("mismatching p: {bad:?}")))
}

fn s_values(_: u64) -> Result<Outcome> {
    let (s13, s17) = (ctx(2, 3)?.s_value(), ctx(1, 4)?.s_value());
    Ok(verdict((s13, s17) == (5, 8), format!("S(2,3) = {s13}, S(1,4) = {s17}")))
}

fn perfect2(_: u64) -> Result<Outcome> {
    let r = perfect2_candidates(2, 8)?;
    let found: Vec<(String, String)> = r.candidates.iter().map(|c| (c.n.clone(), c.p.clone())).collect();
    let want = [("10".to_string(), "29".to_string()), ("11830".to_string(), "33461".to_string())];
    let rejected = r.rejected_composite.iter().any(|c| c.n == "348" && c.p == "985");
    Ok(verdict(found == want && rejected, format!("candidates {found:?}, (348, 985) rejected: {rejected}")))
}

fn omec(budget: u64) -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut ok = true;
    for (a, b) in [(2, 3), (1, 4), (2, 5)] {
        let c = ctx(a, b)?;
        let code = omec_code(c.clone())?;
        let d = code.min_distance(Metric::Mannheim, budget)?;
        let perfect = sphere_packing_ok(&c, code.n(), code.k(), d).perfect;
        ok &= d == 3 && perfect;
        notes.push(format!("p={} [{},{}] d={d} perfect={perfect}", c.p(), code.n(), code.k()));
    }
    Ok(verdict(ok, notes.join("; ")))
}

fn dstar_row(c: &PrimeContext, lengths: &[usize], want: &[u32], budget: u64) -> Result<Outcome> {
    let got = lengths
        .iter()
        .map(|&n| Ok(dstar(c, n, LpMode::Exact, budget)?.dstar))
        .collect::<Result<Vec<u32>>>()?;
    Ok(verdict(got == want, format!("p={} n={lengths:?}: {got:?}", c.p())))
}

fn dstar13(budget: u64) -> Result<Outcome> {
    dstar_row(&*ctx(2, 3)?, &[2, 4, 6, 8], &[2, 5, 5, 7], budget)
}

fn dstar17(budget: u64) -> Result<Outcome> {
    dstar_row(&*ctx(1, 4)?, &[2, 4, 6], &[2, 5, 6], budget)
}

/// The printed value 9 is reached only with the printed (incorrect) coset
/// weights 4 and 5 for 2H and 6H; the true weights are 2 and 3.
fn dstar17_n8(budget: u64) -> Result<Outcome> {
    let c = ctx(1, 4)?;
    let got = dstar(&c, 8, LpMode::Exact, budget)?.dstar;
    let mut printed = vec![0u32];
    for &l in c.leaders() {
        printed.push(match l {
            2 => 4,
            6 => 5,
            x => c.weight(x),
        });
    }
    let alt = DstarSystem::with_coset_weights(&c, 8, &printed, budget)?.dstar(LpMode::Exact).dstar;
    let detail = format!("d* = {got}; printed 9; with the printed coset weights the system gives {alt}");
    Ok(match (got, alt) {
        (9, _) => Outcome::Ok(detail),
        (_, 9) => Outcome::Deviates(detail),
        _ => Outcome::Bad(detail),
    })
}

fn selfdual_small(budget: u64) -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for ((a, b), want_d, want_classes) in [((2, 3), [2, 5, 5], [1, 2, 5]), ((1, 4), [2, 5, 6], [1, 2, 6])] {
        let c = ctx(a, b)?;
        for (i, n) in [2, 4, 6].into_iter().enumerate() {
            let e = enumerate_selfdual(&c, n, budget)?;
            ok &= e.max_d_pi == want_d[i] && e.classes.len() == want_classes[i] && e.total_codes as u128 == e.expected_total;
            notes.push(format!("p={} n={n}: max {} classes {}", c.p(), e.max_d_pi, e.classes.len()));
        }
    }
    Ok(verdict(ok, notes.join("; ")))
}

fn selfdual_eight(budget: u64) -> Result<Outcome> {
    let a = max_selfdual_distance(&*ctx(2, 3)?, 8, budget)?.max_d_pi;
    let b = max_selfdual_distance(&*ctx(1, 4)?, 8, budget)?.max_d_pi;
    Ok(verdict((a, b) == (6, 7), format!("n=8: p=13 {a}, p=17 {b}")))
}

fn nonexistence(budget: u64) -> Result<Outcome> {
    let r = max_min_distance_systematic(&*ctx(2, 3)?, 5, 3, Metric::Mannheim, Some(5), budget)?;
    Ok(verdict(r.best < 5, format!("best systematic [5,3] over F13: {}", r.best)))
}

fn catalog_check(budget: u64) -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for e in catalog() {
        let r = verify_entry(&e, budget)?;
        ok &= r.ok;
        notes.push(format!("{} ({}, {})", r.name, r.d_h, r.d_pi));
    }
    Ok(verdict(ok, notes.join("; ")))
}

fn decoding(budget: u64) -> Result<Outcome> {
    let c17 = ctx(1, 4)?;
    let small = LinearCode::from_parity_check(c17, vec![vec![1, 5, 8, 6], vec![1, 14, 9, 7]])?;
    let t = SyndromeTable::build(&small, Metric::Mannheim, budget)?;
    let r = [2, 9, 12, 1];
    let s1 = syndrome(&small, &r)?;
    let mut leaders = t.list_leaders(&r)?;
    leaders.sort();
    let want: Vec<Vec<Elem>> = vec![
        vec![0, 0, 5, 4],
        vec![0, 1, 4, 13],
        vec![0, 9, 13, 0],
        vec![1, 0, 13, 13],
        vec![8, 1, 0, 0],
    ];
    let big = catalog()[0].code()?;
    let r2 = [1, 2, 0, 1, 11, 2, 1, 9, 12, 8];
    let s2 = syndrome(&big, &r2)?;
    let t2 = SyndromeTable::build(&big, Metric::Mannheim, budget)?;
    let d2 = t2.decode(&r2)?;
    let ok = s1 == [13, 5]
        && leaders == want
        && t.leader(&s1)? == [8, 1, 0, 0]
        && s2 == [4, 10, 0, 6, 5]
        && d2.codeword == [0, 0, 0, 1, 11, 2, 1, 9, 12, 8];
    Ok(verdict(
        ok,
        format!("syndromes {s1:?} and {s2:?}; {} minimal leaders; codeword {:?}", leaders.len(), d2.codeword),
    ))
}

const ITEMS: &[(&str, bool, Check)] = &[
    ("table1-z41", false, table1),
    ("table2-z61", false, table2),
    ("table3-z29", false, table3),
    ("weight-distribution", false, distribution),
    ("s-values", false, s_values),
    ("perfect2-pell", false, perfect2),
    ("omec-perfect", false, omec),
    ("dstar-f13", false, dstar13),
    ("dstar-f17", false, dstar17),
    ("selfdual-n2-6", false, selfdual_small),
    ("catalog", false, catalog_check),
    ("decoding-examples", false, decoding),
    ("dstar-f17-n8", true, dstar17_n8),
    ("selfdual-n8", true, selfdual_eight),
    ("nonexistence-5-3-f13", true, nonexistence),
];

pub fn run_all(budget: u64, long: bool) -> Report {
    let items: Vec<Item> = ITEMS
        .iter()
        .filter(|(_, is_long, _)| long || !is_long)
        .map(|&(id, _, check)| {
            let (status, detail) = match check(budget) {
                Ok(Outcome::Ok(d)) => (Status::Pass, d),
                Ok(Outcome::Bad(d)) => (Status::Fail, d),
                Ok(Outcome::Deviates(d)) => (Status::Deviation, d),
                Err(e @ Error::SearchTooLarge { .. }) => (Status::Skipped, e.to_string()),
                Err(e) => (Status::Error, e.to_string()),
            };
            Item { id, status, detail }
        })
        .collect();
    let count = |s: Status| items.iter().filter(|i| i.status == s).count();
    Report {
        long,
        passed: count(Status::Pass),
        failed: count(Status::Fail) + count(Status::Error),
        deviations: count(Status::Deviation),
        skipped: count(Status::Skipped),
        items,
    }
}
