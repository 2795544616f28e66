//! Nearest-neighbour decoding: exhaustive, by syndrome table, and the
//! column-matching shortcut for perfect single-error-correcting codes.

use std::io::{self, Write};

use serde::Serialize;

use crate::bounds::sphere_packing_ok;
use crate::codes::{LinearCode, Metric};
use crate::error::{check_budget, Error, Result};
use crate::fp::{self, Elem, Vector};

/// `r · Hᵀ` for the code's stored parity-check matrix.
pub fn syndrome(code: &LinearCode, r: &[Elem]) -> Result<Vector> {
    check_len(code, r)?;
    Ok(fp::mul_transpose(r, code.parity_check(), code.p()))
}

fn check_len(code: &LinearCode, r: &[Elem]) -> Result<()> {
    if r.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: r.len(),
        });
    }
    if let Some(&x) = r.iter().find(|&&x| x >= code.p()) {
        return Err(Error::BadEntries(format!("entry {x} is not in [0, {})", code.p())));
    }
    Ok(())
}

/// Visits every vector of length n and weight exactly `w`, together with its
/// syndrome. Order: increasing index with coordinate 0 varying fastest, so
/// errors packed towards the front come first.
struct Layers {
    p: Elem,
    n: usize,
    r: usize,
    wts: Vec<u32>,
    /// `cols[j][x]`: syndrome of the word with x at position j.
    cols: Vec<Vec<Vector>>,
    /// `reach[i][w]`: some word on positions `0..i` has weight w.
    reach: Vec<Vec<bool>>,
}

impl Layers {
    fn new(code: &LinearCode, metric: Metric) -> Self {
        let p = code.p();
        let n = code.n();
        let h = code.parity_check();
        let wts = metric.weights(code.ctx());
        let cols = (0..n)
            .map(|j| {
                (0..p)
                    .map(|x| h.iter().map(|row| fp::mul(row[j], x, p)).collect())
                    .collect()
            })
            .collect();
        let max = *wts.iter().max().unwrap_or(&0) as usize;
        let mut reach = vec![vec![false; n * max + 1]; n + 1];
        reach[0][0] = true;
        for i in 1..=n {
            for w in 0..=n * max {
                reach[i][w] = wts.iter().any(|&x| (x as usize) <= w && reach[i - 1][w - x as usize]);
            }
        }
        Layers {
            p,
            n,
            r: h.len(),
            wts,
            cols,
            reach,
        }
    }

    fn max_weight(&self) -> u32 {
        (self.reach[self.n].len() - 1) as u32
    }

    fn for_each<F: FnMut(&[Elem], &[Elem])>(&self, w: u32, f: &mut F) {
        if w as usize >= self.reach[self.n].len() || !self.reach[self.n][w as usize] {
            return;
        }
        let mut e = vec![0; self.n];
        let mut syn = vec![vec![0; self.r]; self.n + 1];
        self.rec(self.n, w, &mut e, &mut syn, f);
    }

    fn rec<F: FnMut(&[Elem], &[Elem])>(&self, pos: usize, left: u32, e: &mut Vector, syn: &mut [Vector], f: &mut F) {
        if pos == 0 {
            f(e, &syn[self.n]);
            return;
        }
        let j = pos - 1;
        let depth = self.n - pos;
        for x in 0..self.p {
            let wx = self.wts[x as usize];
            if wx > left || !self.reach[j][(left - wx) as usize] {
                continue;
            }
            e[j] = x;
            let (done, rest) = syn.split_at_mut(depth + 1);
            for ((out, &a), &b) in rest[0].iter_mut().zip(&done[depth]).zip(&self.cols[j][x as usize]) {
                *out = fp::add(a, b, self.p);
            }
            self.rec(pos - 1, left - wx, e, syn, f);
        }
        e[j] = 0;
    }
}

const UNSET: u32 = u32::MAX;

/// One minimal-weight coset leader per syndrome.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    code: LinearCode,
    metric: Metric,
    /// Leaders back to back, indexed by syndrome (first coordinate most
    /// significant).
    leaders: Vec<Elem>,
    weights: Vec<u32>,
    /// Number of minimal-weight words in each coset, saturating.
    counts: Vec<u32>,
    min_distance: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decoded {
    pub codeword: Vector,
    pub error: Vector,
    pub error_weight: u32,
    /// The coset has more than one word of least weight.
    pub ambiguous: bool,
}

impl SyndromeTable {
    /// Breadth-first over error weights 0, 1, 2, …, keeping the first
    /// pattern reaching each syndrome. Each layer is finished completely so
    /// the per-coset tie counts are exact.
    pub fn build(code: &LinearCode, metric: Metric, budget: u64) -> Result<Self> {
        let p = code.p();
        let n = code.n();
        let r = n - code.k();
        let total = (p as u128).pow(r as u32);
        check_budget("syndrome table", total, budget)?;
        let min_distance = if r == 0 { 0 } else { code.min_distance(metric, budget)? };
        let total = total as usize;
        let layers = Layers::new(code, metric);
        let mut leaders = vec![0; total * n];
        let mut weights = vec![UNSET; total];
        let mut counts = vec![0u32; total];
        let mut filled = 0usize;
        let mut visited: u128 = 0;
        let mut w = 0;
        while filled < total {
            if w > layers.max_weight() {
                unreachable!("every syndrome has a leader");
            }
            layers.for_each(w, &mut |e, s| {
                visited += 1;
                let idx = fp::vec_to_index(s, p) as usize;
                if weights[idx] == UNSET {
                    weights[idx] = w;
                    counts[idx] = 1;
                    leaders[idx * n..(idx + 1) * n].copy_from_slice(e);
                    filled += 1;
                } else if weights[idx] == w {
                    counts[idx] = counts[idx].saturating_add(1);
                }
            });
            check_budget("syndrome table error patterns", visited, budget)?;
            w += 1;
        }
        Ok(SyndromeTable {
            code: code.clone(),
            metric,
            leaders,
            weights,
            counts,
            min_distance,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// `p^{n−k}`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn min_distance(&self) -> u32 {
        self.min_distance
    }

    /// `⌊(d−1)/2⌋`.
    pub fn correction_radius(&self) -> u32 {
        self.min_distance.saturating_sub(1) / 2
    }

    /// Largest leader weight.
    pub fn covering_radius(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    fn index(&self, s: &[Elem]) -> Result<usize> {
        let r = self.code.n() - self.code.k();
        if s.len() != r {
            return Err(Error::LengthMismatch {
                expected: r,
                actual: s.len(),
            });
        }
        Ok(fp::vec_to_index(s, self.code.p()) as usize)
    }

    pub fn leader(&self, s: &[Elem]) -> Result<&[Elem]> {
        let n = self.code.n();
        let i = self.index(s)?;
        Ok(&self.leaders[i * n..(i + 1) * n])
    }

    pub fn leader_weight(&self, s: &[Elem]) -> Result<u32> {
        Ok(self.weights[self.index(s)?])
    }

    /// Number of least-weight words in the coset with syndrome s.
    pub fn minimal_count(&self, s: &[Elem]) -> Result<u32> {
        Ok(self.counts[self.index(s)?])
    }

    pub fn is_unique(&self, s: &[Elem]) -> Result<bool> {
        Ok(self.minimal_count(s)? == 1)
    }

    /// `(syndrome, leader, weight, unique)` in syndrome order.
    pub fn entries(&self) -> impl Iterator<Item = (Vector, &[Elem], u32, bool)> + '_ {
        let n = self.code.n();
        let r = n - self.code.k();
        let p = self.code.p();
        (0..self.len()).map(move |i| {
            (
                fp::index_to_vec(i as u64, r, p),
                &self.leaders[i * n..(i + 1) * n],
                self.weights[i],
                self.counts[i] == 1,
            )
        })
    }

    pub fn decode(&self, r: &[Elem]) -> Result<Decoded> {
        let s = syndrome(&self.code, r)?;
        let i = self.index(&s)?;
        let n = self.code.n();
        let error = self.leaders[i * n..(i + 1) * n].to_vec();
        Ok(Decoded {
            codeword: fp::sub_vec(r, &error, self.code.p()),
            error,
            error_weight: self.weights[i],
            ambiguous: self.counts[i] != 1,
        })
    }

    /// Every least-weight word in the coset of r, in table-build order.
    pub fn list_leaders(&self, r: &[Elem]) -> Result<Vec<Vector>> {
        let s = syndrome(&self.code, r)?;
        let w = self.leader_weight(&s)?;
        let mut out = Vec::new();
        Layers::new(&self.code, self.metric).for_each(w, &mut |e, t| {
            if t == s.as_slice() {
                out.push(e.to_vec());
            }
        });
        Ok(out)
    }

    /// Header `p, n, k` as little-endian u32, then one leader per syndrome
    /// in syndrome order, each entry a little-endian u16.
    pub fn write_binary<W: Write>(&self, mut out: W) -> io::Result<()> {
        for x in [self.code.p(), self.code.n() as u32, self.code.k() as u32] {
            out.write_all(&x.to_le_bytes())?;
        }
        for &x in &self.leaders {
            out.write_all(&(x as u16).to_le_bytes())?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut v = Vec::with_capacity(12 + 2 * self.leaders.len());
        self.write_binary(&mut v).expect("writing to a Vec cannot fail");
        v
    }
}

/// Reads back `(p, n, k, leaders)` from [`SyndromeTable::write_binary`].
pub fn read_binary(bytes: &[u8]) -> Result<(u32, usize, usize, Vec<Vector>)> {
    let bad = |m: &str| Error::Parse(format!("syndrome table: {m}"));
    if bytes.len() < 12 {
        return Err(bad("truncated header"));
    }
    let word = |i: usize| u32::from_le_bytes(bytes[4 * i..4 * i + 4].try_into().expect("4 bytes"));
    let (p, n, k) = (word(0), word(1) as usize, word(2) as usize);
    if n == 0 || k > n {
        return Err(bad("bad dimensions"));
    }
    let body = &bytes[12..];
    let count = (p as usize).checked_pow((n - k) as u32).ok_or_else(|| bad("too many records"))?;
    if body.len() != count * n * 2 {
        return Err(bad("wrong body length"));
    }
    let elems: Vec<Elem> = body
        .chunks_exact(2)
        .map(|c| u16::from_le_bytes([c[0], c[1]]) as Elem)
        .collect();
    Ok((p, n, k, elems.chunks(n).map(<[Elem]>::to_vec).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearestDecoded {
    pub codeword: Vector,
    pub distance: u32,
    /// Codewords at the same least distance, including the one returned.
    pub ties: u64,
}

/// Exhaustive nearest codeword. Ties go to the lexicographically smallest.
pub fn decode_nn(code: &LinearCode, r: &[Elem], metric: Metric, budget: u64) -> Result<NearestDecoded> {
    check_len(code, r)?;
    let ctx = code.ctx();
    let p = code.p();
    let mut best: Option<NearestDecoded> = None;
    code.for_each_codeword(budget, |c| {
        let d = metric.weight_of(ctx, &fp::sub_vec(r, c, p));
        match &mut best {
            Some(b) if d > b.distance => {}
            Some(b) if d == b.distance => {
                b.ties += 1;
                if c < b.codeword.as_slice() {
                    b.codeword = c.to_vec();
                }
            }
            _ => {
                best = Some(NearestDecoded {
                    codeword: c.to_vec(),
                    distance: d,
                    ties: 1,
                })
            }
        }
    })?;
    Ok(best.expect("a code has at least the zero word"))
}

/// Single-error correction for a perfect code: a nonzero syndrome must be a
/// unit multiple of one parity-check column.
pub fn decode_perfect(code: &LinearCode, r: &[Elem], budget: u64) -> Result<Decoded> {
    check_len(code, r)?;
    let ctx = code.ctx();
    let d = code.min_distance(Metric::Mannheim, budget)?;
    let verdict = sphere_packing_ok(ctx, code.n(), code.k(), d);
    if !verdict.perfect {
        return Err(Error::NotPerfect(format!(
            "[{}, {}] code with d = {d} does not meet the sphere-packing bound",
            code.n(),
            code.k()
        )));
    }
    if verdict.e != 1 {
        return Err(Error::NotPerfect(format!("correction radius {} is not 1", verdict.e)));
    }
    let p = code.p();
    let s = syndrome(code, r)?;
    let mut error = vec![0; code.n()];
    if s.iter().any(|&x| x != 0) {
        let h = code.parity_check();
        let (j, u) = (0..code.n())
            .flat_map(|j| ctx.units().into_iter().map(move |u| (j, u)))
            .find(|&(j, u)| h.iter().zip(&s).all(|(row, &x)| fp::mul(u, row[j], p) == x))
            .ok_or(Error::NoColumnMatch)?;
        error[j] = u;
    }
    Ok(Decoded {
        codeword: fp::sub_vec(r, &error, p),
        error_weight: ctx.weight(error.iter().copied().find(|&x| x != 0).unwrap_or(0)),
        error,
        ambiguous: false,
    })
}

/// How two tables fare on every error pattern of one Mannheim weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub mannheim_weight: u32,
    pub patterns: u64,
    pub mannheim_corrected: u64,
    pub hamming_corrected: u64,
    /// First pattern the Mannheim table corrects and the Hamming table does not.
    pub witness: Option<Vector>,
}

/// Feeds every error of Mannheim weight `w` to both tables (the transmitted
/// word is zero, which loses nothing by linearity).
pub fn compare_tables(mannheim: &SyndromeTable, hamming: &SyndromeTable, w: u32) -> Result<TableComparison> {
    if mannheim.metric() != Metric::Mannheim || hamming.metric() != Metric::Hamming {
        return Err(Error::DimensionMismatch("expected a Mannheim and a Hamming table".into()));
    }
    if !mannheim.code().same_code(hamming.code()) {
        return Err(Error::DimensionMismatch("tables belong to different codes".into()));
    }
    let code = mannheim.code();
    let mut out = TableComparison {
        mannheim_weight: w,
        patterns: 0,
        mannheim_corrected: 0,
        hamming_corrected: 0,
        witness: None,
    };
    let mut res: Result<()> = Ok(());
    Layers::new(code, Metric::Mannheim).for_each(w, &mut |e, s| {
        if res.is_err() {
            return;
        }
        let (lm, lh) = match (mannheim.leader(s), hamming.leader(s)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(x), _) | (_, Err(x)) => {
                res = Err(x);
                return;
            }
        };
        out.patterns += 1;
        let m_ok = lm == e;
        let h_ok = lh == e;
        out.mannheim_corrected += m_ok as u64;
        out.hamming_corrected += h_ok as u64;
        if m_ok && !h_ok && out.witness.is_none() {
            out.witness = Some(e.to_vec());
        }
    });
    res.map(|_| out)
}

#[cfg(test)]
mod tests;
