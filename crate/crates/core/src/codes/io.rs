//! Matrix file format.
//!
//! JSON: `{"p": 13, "pi": [2, 3], "k": 2, "n": 3, "rows": [[1,0,2],[0,1,4]]}`
//! with entries in `[0, p)`. Plain text: one row per line, entries separated
//! by spaces or commas; `#` starts a comment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::Matrix;
use crate::gint::GaussPrime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub p: u64,
    pub pi: [u64; 2],
    pub k: usize,
    pub n: usize,
    pub rows: Matrix,
}

impl MatrixFile {
    pub fn new(pi: GaussPrime, rows: Matrix) -> Self {
        MatrixFile {
            p: pi.p(),
            pi: [pi.a(), pi.b()],
            k: rows.len(),
            n: rows.first().map_or(0, Vec::len),
            rows,
        }
    }

    pub fn gauss_prime(&self) -> Result<GaussPrime> {
        let pi = GaussPrime::new(self.pi[0], self.pi[1])?;
        if pi.p() != self.p {
            return Err(Error::WrongContext {
                expected: pi.p(),
                actual: self.p,
            });
        }
        Ok(pi)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}

/// A parsed matrix; text input carries no field information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedMatrix {
    pub pi: Option<GaussPrime>,
    pub rows: Matrix,
}

pub fn parse_matrix(text: &str) -> Result<ParsedMatrix> {
    if text.trim_start().starts_with('{') {
        let f: MatrixFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let pi = f.gauss_prime()?;
        check_shape(&f.rows, Some(f.p))?;
        if f.rows.len() != f.k || f.rows.first().map_or(0, Vec::len) != f.n {
            return Err(Error::DimensionMismatch(format!(
                "header says {}x{}, rows are {}x{}",
                f.k,
                f.n,
                f.rows.len(),
                f.rows.first().map_or(0, Vec::len)
            )));
        }
        return Ok(ParsedMatrix {
            pi: Some(pi),
            rows: f.rows,
        });
    }
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("line {}: bad entry {t:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    check_shape(&rows, None)?;
    Ok(ParsedMatrix { pi: None, rows })
}

fn check_shape(rows: &Matrix, p: Option<u64>) -> Result<()> {
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("rows have different lengths".into()));
    }
    if let Some(p) = p {
        if let Some(x) = rows.iter().flatten().find(|&&x| x as u64 >= p) {
            return Err(Error::BadEntries(format!("entry {x} is not in [0, {p})")));
        }
    }
    Ok(())
}

/// Plain-text rendering, one row per line.
pub fn matrix_to_text(rows: &Matrix) -> String {
    rows.iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let pi = GaussPrime::new(2, 3).unwrap();
        let f = MatrixFile::new(pi, vec![vec![1, 0, 2], vec![0, 1, 4]]);
        let s = f.to_json();
        assert_eq!(s, r#"{"p":13,"pi":[2,3],"k":2,"n":3,"rows":[[1,0,2],[0,1,4]]}"#);
        let back = parse_matrix(&s).unwrap();
        assert_eq!(back.pi, Some(pi));
        assert_eq!(back.rows, f.rows);
    }

    #[test]
    fn text_and_errors() {
        let m = parse_matrix("1 0 2\n# comment\n0,1,4\n").unwrap();
        assert_eq!(m.rows, vec![vec![1, 0, 2], vec![0, 1, 4]]);
        assert_eq!(matrix_to_text(&m.rows), "1 0 2\n0 1 4");
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix(r#"{"p":13,"pi":[2,3],"k":1,"n":2,"rows":[[1,13]]}"#).is_err());
        assert!(parse_matrix(r#"{"p":17,"pi":[2,3],"k":1,"n":2,"rows":[[1,1]]}"#).is_err());
    }
}
