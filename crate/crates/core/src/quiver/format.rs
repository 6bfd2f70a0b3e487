//! Line-oriented quiver files and the JSON mirror of [`ValuedQuiver`].
//!
//! ```text
//! # linear A3
//! n 3
//! arrow 1 2 1 1
//! arrow 2 3 1 1
//! ```
//!
//! A `matrix <n>` line followed by `n` rows of integers may replace the
//! arrow lines.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Arrow, ExchangeMatrix, ValuedQuiver};
use crate::error::{QuiverError, Result};
use crate::json::big;
use crate::matrix::IntMatrix;

fn syntax(line: usize, message: impl Into<String>) -> QuiverError {
    QuiverError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found {tok:?}")))
}

/// Parses the quiver file format. Arrows come back sorted by source, then target.
pub fn parse_quiver(text: &str) -> Result<ValuedQuiver> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut n: Option<usize> = None;
    let mut arrows: Vec<(usize, Arrow)> = Vec::new();
    let mut matrix: Option<IntMatrix> = None;

    while let Some((ln, line)) = lines.next() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "n" => {
                if n.is_some() {
                    return Err(syntax(ln, "repeated 'n' line"));
                }
                if toks.len() != 2 {
                    return Err(syntax(ln, "expected 'n <count>'"));
                }
                n = Some(number(toks[1], ln, "vertex count")?);
            }
            "arrow" => {
                let count = n.ok_or_else(|| syntax(ln, "'arrow' before 'n <count>'"))?;
                if matrix.is_some() {
                    return Err(syntax(ln, "cannot mix 'arrow' lines with a matrix block"));
                }
                if toks.len() != 5 {
                    return Err(syntax(ln, "expected 'arrow <i> <j> <v1> <v2>'"));
                }
                let i: usize = number(toks[1], ln, "vertex")?;
                let j: usize = number(toks[2], ln, "vertex")?;
                for v in [i, j] {
                    if v == 0 || v > count {
                        return Err(syntax(ln, format!("vertex {v} out of range 1..={count}")));
                    }
                }
                let v1: BigInt = number(toks[3], ln, "integer value")?;
                let v2: BigInt = number(toks[4], ln, "integer value")?;
                arrows.push((ln, Arrow::new(i - 1, j - 1, v1, v2)));
            }
            "matrix" => {
                if matrix.is_some() || !arrows.is_empty() {
                    return Err(syntax(ln, "unexpected matrix block"));
                }
                if toks.len() != 2 {
                    return Err(syntax(ln, "expected 'matrix <n>'"));
                }
                let m: usize = number(toks[1], ln, "matrix order")?;
                if let Some(count) = n {
                    if count != m {
                        return Err(syntax(
                            ln,
                            format!("matrix order {m} differs from n {count}"),
                        ));
                    }
                }
                n = Some(m);
                let mut rows = Vec::with_capacity(m);
                for r in 0..m {
                    let (rl, row) = lines
                        .next()
                        .ok_or_else(|| syntax(ln, format!("matrix block ends after {r} rows")))?;
                    let vals = row
                        .split_whitespace()
                        .map(|t| number::<BigInt>(t, rl, "integer"))
                        .collect::<Result<Vec<_>>>()?;
                    if vals.len() != m {
                        return Err(syntax(
                            rl,
                            format!("expected {m} entries, found {}", vals.len()),
                        ));
                    }
                    rows.push(vals);
                }
                matrix = Some(IntMatrix::from_rows(&rows).ok_or(QuiverError::Shape)?);
            }
            other => return Err(syntax(ln, format!("unknown directive {other:?}"))),
        }
    }

    let n = n.ok_or_else(|| syntax(1, "missing 'n <count>' line"))?;
    if let Some(m) = matrix {
        return Ok(ExchangeMatrix::new(m)?.to_quiver());
    }
    // structural errors carry line numbers when we can attribute them
    let mut seen = std::collections::HashMap::new();
    for (ln, a) in &arrows {
        if a.source == a.target {
            return Err(syntax(
                *ln,
                QuiverError::LoopArrow(a.source + 1).to_string(),
            ));
        }
        let pair = (a.source.min(a.target), a.source.max(a.target));
        if let Some(first) = seen.insert(pair, *ln) {
            return Err(syntax(
                *ln,
                format!(
                    "{} (first on line {first})",
                    QuiverError::DuplicatePair(pair.0 + 1, pair.1 + 1)
                ),
            ));
        }
    }
    ValuedQuiver::new(n, arrows.into_iter().map(|(_, a)| a).collect())
}

impl FromStr for ValuedQuiver {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self> {
        parse_quiver(s)
    }
}

impl ValuedQuiver {
    /// Serializes in the quiver file format (1-based vertices).
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for a in self.arrows() {
            let _ = writeln!(
                out,
                "arrow {} {} {} {}",
                a.source + 1,
                a.target + 1,
                a.v1,
                a.v2
            );
        }
        out
    }

    /// `{n, arrows: [[i, j, v1, v2], ...], symmetrizer}` with 1-based vertices.
    /// The symmetrizer is the attached one, or the minimal one when valid.
    pub fn to_json(&self) -> Value {
        let arrows: Vec<Value> = self
            .arrows()
            .iter()
            .map(|a| json!([a.source + 1, a.target + 1, big(&a.v1), big(&a.v2)]))
            .collect();
        let d = match self.symmetrizer() {
            Some(d) => Some(d.to_vec()),
            None => self.validate().ok(),
        };
        json!({
            "n": self.order(),
            "arrows": arrows,
            "symmetrizer": d.map(|d| crate::json::big_list(&d)),
        })
    }
}
