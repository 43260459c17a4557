//! Text and JSON file formats.
//!
//! Quivers: `{"vertices": m, "arrows": [[s, t], ...]}` or the plain text
//! `m n` followed by `n` lines `s t`. Forms: `{"n": n, "upper": [[...], ...]}`.
//! Matrices: `rows cols` followed by the rows. Writers emit the canonical
//! form, so `save(load(f))` is stable.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::congruence::CongruenceCertificate;
use crate::exactmat::IntMatrix;
use crate::quiver::Quiver;
use crate::unitform::UnitForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl IoError {
    fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        IoError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn from_json(e: serde_json::Error) -> Self {
        IoError::parse(e.line(), e.column(), e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    vertices: usize,
    arrows: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    n: usize,
    upper: Vec<Vec<i64>>,
}

/// Either kind of input accepted where a form is expected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Quiver(Quiver),
    Form(UnitForm),
}

impl Input {
    pub fn form(&self) -> UnitForm {
        match self {
            Input::Quiver(q) => UnitForm::from_quiver(q),
            Input::Form(f) => f.clone(),
        }
    }
}

/// Whitespace-separated tokens with 1-based positions.
fn tokens(src: &str) -> Vec<(usize, usize, &str)> {
    let mut out = Vec::new();
    for (i, line) in src.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            out.push((i + 1, offset + start + 1, &tail[..len]));
            offset += start + len;
            rest = &tail[len..];
        }
    }
    out
}

fn next_token<'a, T: std::str::FromStr>(
    it: &mut impl Iterator<Item = (usize, usize, &'a str)>,
    last: (usize, usize),
    what: &str,
) -> Result<(T, (usize, usize)), IoError> {
    let (line, col, tok) = it.next().ok_or_else(|| {
        IoError::parse(
            last.0,
            last.1,
            format!("unexpected end of input, expected {what}"),
        )
    })?;
    tok.parse::<T>()
        .map(|v| (v, (line, col)))
        .map_err(|_| IoError::parse(line, col, format!("expected {what}, found {tok:?}")))
}

fn no_trailing<'a>(mut it: impl Iterator<Item = (usize, usize, &'a str)>) -> Result<(), IoError> {
    match it.next() {
        Some((line, col, tok)) => Err(IoError::parse(
            line,
            col,
            format!("unexpected token {tok:?}"),
        )),
        None => Ok(()),
    }
}

pub fn parse_matrix_text(src: &str) -> Result<IntMatrix, IoError> {
    let mut it = tokens(src).into_iter();
    let (rows, pos) = next_token::<usize>(&mut it, (1, 1), "row count")?;
    let (cols, mut pos) = next_token::<usize>(&mut it, pos, "column count")?;
    let mut data = Vec::with_capacity(rows);
    for _ in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for _ in 0..cols {
            let (v, p) = next_token::<BigInt>(&mut it, pos, "integer entry")?;
            pos = p;
            row.push(v);
        }
        data.push(row);
    }
    no_trailing(it)?;
    Ok(IntMatrix::from_big_rows(data, cols).expect("rows have `cols` entries"))
}

pub fn matrix_to_text(m: &IntMatrix) -> String {
    format!("{} {}\n{}", m.rows(), m.cols(), m)
}

pub fn parse_quiver_text(src: &str) -> Result<Quiver, IoError> {
    let mut it = tokens(src).into_iter();
    let (m, pos) = next_token::<usize>(&mut it, (1, 1), "vertex count")?;
    let (n, mut pos) = next_token::<usize>(&mut it, pos, "arrow count")?;
    let mut arrows = Vec::with_capacity(n);
    for _ in 0..n {
        let (s, p) = next_token::<usize>(&mut it, pos, "arrow source")?;
        let (t, p) = next_token::<usize>(&mut it, p, "arrow target")?;
        pos = p;
        arrows.push((s, t));
    }
    no_trailing(it)?;
    Quiver::new(m, arrows).map_err(|e| IoError::Invariant(e.to_string()))
}

pub fn quiver_to_text(q: &Quiver) -> String {
    let mut s = format!("{} {}\n", q.vertex_count(), q.arrow_count());
    for &(a, b) in q.arrows() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

pub fn parse_quiver_json(src: &str) -> Result<Quiver, IoError> {
    let raw: QuiverJson = serde_json::from_str(src).map_err(IoError::from_json)?;
    let arrows = raw.arrows.into_iter().map(|[s, t]| (s, t)).collect();
    Quiver::new(raw.vertices, arrows).map_err(|e| IoError::Invariant(e.to_string()))
}

pub fn quiver_to_json(q: &Quiver) -> String {
    let raw = QuiverJson {
        vertices: q.vertex_count(),
        arrows: q.arrows().iter().map(|&(s, t)| [s, t]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data") + "\n"
}

pub fn parse_form_json(src: &str) -> Result<UnitForm, IoError> {
    let raw: FormJson = serde_json::from_str(src).map_err(IoError::from_json)?;
    if raw.upper.len() != raw.n || raw.upper.iter().any(|r| r.len() != raw.n) {
        return Err(IoError::Invariant(format!(
            "\"upper\" must be {0}x{0}",
            raw.n
        )));
    }
    UnitForm::new(IntMatrix::from_rows(&raw.upper)).map_err(|e| IoError::Invariant(e.to_string()))
}

pub fn form_to_json(f: &UnitForm) -> String {
    let raw = FormJson {
        n: f.n(),
        upper: f
            .upper()
            .to_i64_rows()
            .expect("unit form entries fit in i64"),
    };
    serde_json::to_string(&raw).expect("plain data") + "\n"
}

/// Quiver JSON, form JSON or quiver text, told apart by their first token
/// and keys.
pub fn parse_input(src: &str) -> Result<Input, IoError> {
    if !src.trim_start().starts_with('{') {
        return parse_quiver_text(src).map(Input::Quiver);
    }
    let v: Value = serde_json::from_str(src).map_err(IoError::from_json)?;
    if v.get("vertices").is_some() {
        parse_quiver_json(src).map(Input::Quiver)
    } else if v.get("upper").is_some() {
        parse_form_json(src).map(Input::Form)
    } else {
        Err(IoError::parse(
            1,
            1,
            "expected a quiver (\"vertices\") or a form (\"upper\")",
        ))
    }
}

/// JSON for one matrix entry: a number if it fits in `i64`, else a string.
pub fn big_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(big_to_json).collect()))
            .collect(),
    )
}

/// `{"rho", "B", "target_partition", "degeneracy", "verified"}`; the
/// certificate is re-checked here and never emitted unverified.
pub fn certificate_json(cert: &CongruenceCertificate) -> Result<Value, IoError> {
    cert.check()
        .map_err(|e| IoError::Invariant(e.to_string()))?;
    Ok(json!({
        "rho": cert.rho.images(),
        "B": matrix_to_json(&cert.b),
        "target_partition": cert.target_partition.parts(),
        "degeneracy": cert.degeneracy,
        "verified": true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imat;
    use crate::quiver::fixtures::q1;

    #[test]
    fn matrix_text() {
        assert_eq!(
            parse_matrix_text("2 2\n1 0\n0 1").unwrap(),
            IntMatrix::identity(2)
        );
        let m = imat![[1, -2, 3], [0, 4, -5]];
        assert_eq!(parse_matrix_text(&matrix_to_text(&m)).unwrap(), m);
        assert_eq!(matrix_to_text(&m), "2 3\n1 -2 3\n0 4 -5\n");
    }

    #[test]
    fn matrix_text_errors_have_positions() {
        assert_eq!(
            parse_matrix_text("2 2\n1 0\n0 x"),
            Err(IoError::parse(3, 3, "expected integer entry, found \"x\""))
        );
        assert!(matches!(
            parse_matrix_text("1 1\n1 2"),
            Err(IoError::Parse {
                line: 2,
                col: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_matrix_text("2 2\n1"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn quiver_round_trips() {
        let q = q1();
        let js = quiver_to_json(&q);
        assert_eq!(
            js,
            "{\"vertices\":3,\"arrows\":[[3,1],[2,3],[1,2],[3,1]]}\n"
        );
        assert_eq!(parse_quiver_json(&js).unwrap(), q);
        let txt = quiver_to_text(&q);
        assert_eq!(parse_quiver_text(&txt).unwrap(), q);
        let spaced = "{ \"arrows\": [[3, 1], [2, 3], [1, 2], [3, 1]], \"vertices\": 3 }";
        assert_eq!(quiver_to_json(&parse_quiver_json(spaced).unwrap()), js);
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            parse_quiver_json("{\"vertices\": 2, \"arrows\": [[1, 1]]}"),
            Err(IoError::Invariant(_))
        ));
        assert!(matches!(
            parse_quiver_json("{\"vertices\": 2,"),
            Err(IoError::Parse { .. })
        ));
        assert!(matches!(
            parse_form_json("{\"n\": 2, \"upper\": [[2, 0], [0, 1]]}"),
            Err(IoError::Invariant(_))
        ));
        assert!(matches!(
            parse_input("{\"x\": 1}"),
            Err(IoError::Parse { .. })
        ));
    }

    #[test]
    fn form_round_trip_and_detection() {
        let f = UnitForm::from_quiver(&q1());
        let js = form_to_json(&f);
        assert_eq!(parse_form_json(&js).unwrap(), f);
        assert_eq!(parse_input(&js).unwrap(), Input::Form(f.clone()));
        assert_eq!(parse_input(&quiver_to_json(&q1())).unwrap().form(), f);
        assert_eq!(
            parse_input(&quiver_to_text(&q1())).unwrap(),
            Input::Quiver(q1())
        );
    }
}
