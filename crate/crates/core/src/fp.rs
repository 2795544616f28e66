//! Dense linear algebra over a prime field F_p with `u32` entries.

use crate::arith::mod_inv;

pub type Elem = u32;
pub type Vector = Vec<Elem>;
pub type Matrix = Vec<Vec<Elem>>;

#[inline]
pub fn add(a: Elem, b: Elem, p: Elem) -> Elem {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: Elem, b: Elem, p: Elem) -> Elem {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(a: Elem, b: Elem, p: Elem) -> Elem {
    ((a as u64 * b as u64) % p as u64) as Elem
}

#[inline]
pub fn neg(a: Elem, p: Elem) -> Elem {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn inv(a: Elem, p: Elem) -> Elem {
    mod_inv(a as u64, p as u64) as Elem
}

/// Reduces arbitrary signed integers into `[0, p)`.
pub fn reduce(x: i64, p: Elem) -> Elem {
    x.rem_euclid(p as i64) as Elem
}

pub fn dot(u: &[Elem], v: &[Elem], p: Elem) -> Elem {
    let acc: u64 = u
        .iter()
        .zip(v)
        .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p as u64);
    acc as Elem
}

pub fn scale(v: &[Elem], c: Elem, p: Elem) -> Vector {
    v.iter().map(|&x| mul(x, c, p)).collect()
}

pub fn add_vec(u: &[Elem], v: &[Elem], p: Elem) -> Vector {
    u.iter().zip(v).map(|(&a, &b)| add(a, b, p)).collect()
}

pub fn sub_vec(u: &[Elem], v: &[Elem], p: Elem) -> Vector {
    u.iter().zip(v).map(|(&a, &b)| sub(a, b, p)).collect()
}

/// Row vector times matrix: `Σ_i msg[i] * rows[i]`.
pub fn vec_mat(msg: &[Elem], rows: &[Vector], p: Elem) -> Vector {
    let n = rows.first().map_or(0, Vec::len);
    let mut acc = vec![0u64; n];
    for (&c, row) in msg.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (a, &x) in acc.iter_mut().zip(row) {
            *a = (*a + c as u64 * x as u64) % p as u64;
        }
    }
    acc.into_iter().map(|x| x as Elem).collect()
}

/// `v * M^T`, i.e. the vector of inner products with each row of `m`.
pub fn mul_transpose(v: &[Elem], m: &[Vector], p: Elem) -> Vector {
    m.iter().map(|row| dot(v, row, p)).collect()
}

pub fn transpose(m: &[Vector]) -> Matrix {
    let n = m.first().map_or(0, Vec::len);
    (0..n).map(|j| m.iter().map(|row| row[j]).collect()).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(m: &[Vector], p: Elem) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(sel) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, sel);
        let iv = inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul(*x, iv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = sub(*x, mul(f, y, p), p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &[Vector], p: Elem) -> usize {
    rref(m, p).1.len()
}

/// Basis of `{x : m x^T = 0}`, one row per free column, in the standard
/// form read off the reduced echelon matrix.
pub fn null_space(m: &[Vector], n: usize, p: Elem) -> Matrix {
    let (r, pivots) = rref(m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut h = vec![0; n];
            h[f] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                h[pc] = neg(row[f], p);
            }
            h
        })
        .collect()
}

/// Decodes a base-p little-endian-by-position lexicographic index
/// (first coordinate most significant).
pub fn index_to_vec(mut idx: u64, len: usize, p: Elem) -> Vector {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = (idx % p as u64) as Elem;
        idx /= p as u64;
    }
    v
}

pub fn vec_to_index(v: &[Elem], p: Elem) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc * p as u64 + x as u64)
}

/// Hamming weight.
pub fn hamming(v: &[Elem]) -> u32 {
    v.iter().filter(|&&x| x != 0).count() as u32
}
