//! Input and output formats of the `cluster-finite` command.
//!
//! A matrix is read either as text (a line holding `n`, then `n` rows of
//! `n` integers; `#` starts a comment) or as a JSON object
//! `{"n": 3, "rows": [[...], ...], "symmetrizer": [...], "name": "..."}`.
//! Entries too large for a JSON number may be given as decimal strings.

use std::fmt;

use cluster_finite::{IntMatrix, Symmetrizer};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: IntMatrix,
    pub symmetrizer: Option<Symmetrizer>,
    pub name: Option<String>,
    pub format: Format,
}

/// Position is 1-based; column 0 means the whole line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.column > 0 {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Non-comment tokens of `text` with their 1-based line and column.
fn tokens(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    let mut out = Vec::new();
    for (l, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (c, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(c),
                (true, Some(s)) => {
                    toks.push((s + 1, &line[s..c]));
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push((l + 1, toks));
        }
    }
    out
}

fn int_token(line: usize, (col, tok): (usize, &str)) -> Result<BigInt, ParseError> {
    tok.parse()
        .map_err(|_| err(line, col, format!("expected an integer, found {:?}", tok)))
}

pub fn parse(text: &str) -> Result<MatrixDocument, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_text(text: &str) -> Result<MatrixDocument, ParseError> {
    let lines = tokens(text);
    let Some((first, head)) = lines.first() else {
        return Err(err(1, 0, "empty input"));
    };
    if head.len() != 1 {
        return Err(err(*first, head[1].0, "the first line must hold only the size n"));
    }
    let n: usize = head[0]
        .1
        .parse()
        .map_err(|_| err(*first, head[0].0, format!("expected the size n, found {:?}", head[0].1)))?;
    let body = &lines[1..];
    let mut rows = Vec::with_capacity(n);
    for (line, toks) in body.iter().take(n) {
        if toks.len() != n {
            let col = toks.get(n).map_or(0, |t| t.0);
            return Err(err(*line, col, format!("expected {} entries, found {}", n, toks.len())));
        }
        rows.push(toks.iter().map(|&t| int_token(*line, t)).collect::<Result<Vec<_>, _>>()?);
    }
    if body.len() != n {
        let line = body.get(n).map_or(lines.last().map_or(1, |l| l.0), |l| l.0);
        return Err(err(line, 0, format!("expected {} rows, found {}", n, body.len())));
    }
    let matrix = IntMatrix::from_rows(rows).map_err(|e| err(1, 0, e.to_string()))?;
    Ok(MatrixDocument {
        matrix,
        symmetrizer: None,
        name: None,
        format: Format::Text,
    })
}

fn json_int(v: &Value, what: &str) -> Result<BigInt, ParseError> {
    let parsed = match v {
        Value::Number(x) => x.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    };
    parsed.ok_or_else(|| err(1, 0, format!("{} must be an integer, found {}", what, v)))
}

fn parse_json(text: &str) -> Result<MatrixDocument, ParseError> {
    let v: Value = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| err(1, 1, "expected a JSON object"))?;
    let rows_v = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| err(1, 0, "missing array field \"rows\""))?;
    let mut rows = Vec::with_capacity(rows_v.len());
    for (i, r) in rows_v.iter().enumerate() {
        let r = r
            .as_array()
            .ok_or_else(|| err(1, 0, format!("row {} is not an array", i + 1)))?;
        rows.push(
            r.iter()
                .enumerate()
                .map(|(j, x)| json_int(x, &format!("entry ({}, {})", i + 1, j + 1)))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    if let Some(n) = obj.get("n") {
        let n = n.as_u64().ok_or_else(|| err(1, 0, "\"n\" must be a non-negative integer"))?;
        if n as usize != rows.len() {
            return Err(err(1, 0, format!("\"n\" is {} but there are {} rows", n, rows.len())));
        }
    }
    let matrix = IntMatrix::from_rows(rows).map_err(|e| err(1, 0, e.to_string()))?;
    let symmetrizer = match obj.get("symmetrizer") {
        None | Some(Value::Null) => None,
        Some(Value::Array(d)) => {
            let diag = d
                .iter()
                .map(|x| json_int(x, "symmetrizer entry"))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Symmetrizer::from_diag(diag).map_err(|e| err(1, 0, e.to_string()))?)
        }
        Some(other) => return Err(err(1, 0, format!("\"symmetrizer\" must be an array, found {}", other))),
    };
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(err(1, 0, format!("\"name\" must be a string, found {}", other))),
    };
    Ok(MatrixDocument {
        matrix,
        symmetrizer,
        name,
        format: Format::Json,
    })
}

/// `n` on the first line, then one row per line, single spaces, LF endings.
pub fn render_text(m: &IntMatrix) -> String {
    let mut s = format!("{}\n", m.n());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn json_num(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn document_json(doc: &MatrixDocument) -> Value {
    let rows: Vec<Value> = doc
        .matrix
        .rows()
        .map(|r| Value::Array(r.iter().map(json_num).collect()))
        .collect();
    let mut v = json!({ "n": doc.matrix.n(), "rows": rows });
    if let Some(d) = &doc.symmetrizer {
        v["symmetrizer"] = Value::Array(d.diag().iter().map(json_num).collect());
    }
    if let Some(name) = &doc.name {
        v["name"] = json!(name);
    }
    v
}

pub fn render_json(doc: &MatrixDocument) -> String {
    let mut s = serde_json::to_string(&document_json(doc)).expect("plain JSON values");
    s.push('\n');
    s
}

/// Renders in the document's own format. JSON keys come out sorted.
pub fn render(doc: &MatrixDocument) -> String {
    match doc.format {
        Format::Text => render_text(&doc.matrix),
        Format::Json => render_json(doc),
    }
}

/// Edge list: one `i j [weight]` per line, vertices 1-based, `#` comments.
/// The vertex count is the largest index mentioned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    /// 0-based endpoints and the weight, 1 when omitted.
    pub edges: Vec<(usize, usize, u64)>,
    pub weighted: bool,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList, ParseError> {
    let mut edges = Vec::new();
    let mut weighted = false;
    let mut n = 0;
    for (line, toks) in tokens(text) {
        if toks.len() < 2 || toks.len() > 3 {
            return Err(err(line, 0, "expected \"i j\" or \"i j weight\""));
        }
        let mut vertex = |(col, tok): (usize, &str)| -> Result<usize, ParseError> {
            match tok.parse::<usize>() {
                Ok(v) if v >= 1 => {
                    n = n.max(v);
                    Ok(v - 1)
                }
                _ => Err(err(line, col, format!("expected a vertex number >= 1, found {:?}", tok))),
            }
        };
        let u = vertex(toks[0])?;
        let v = vertex(toks[1])?;
        let w = match toks.get(2) {
            Some(&(col, tok)) => {
                weighted = true;
                tok.parse::<u64>()
                    .ok()
                    .filter(|&w| w > 0)
                    .ok_or_else(|| err(line, col, format!("expected a positive weight, found {:?}", tok)))?
            }
            None => 1,
        };
        if u == v {
            return Err(err(line, toks[1].0, "self-loops are not allowed"));
        }
        if edges.iter().any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v))) {
            return Err(err(line, 0, format!("edge {} {} listed twice", u + 1, v + 1)));
        }
        edges.push((u.min(v), u.max(v), w));
    }
    Ok(EdgeList { n, edges, weighted })
}
