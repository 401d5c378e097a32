//! The structured result of every command and its two encodings.
//!
//! JSON round-trips exactly; non-finite numbers are written as the strings
//! `"inf"`, `"-inf"` and `"NaN"`. The long-format CSV (`kind,name,value,anchor`)
//! rounds results to 12 significant digits, so it round-trips as text: decoding
//! and re-encoding reproduces the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use stickygap::BoundCurve;

use crate::format::sig;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<u32> for Value {
    fn from(x: u32) -> Self {
        Value::Int(i64::from(x))
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Text(x.to_string())
    }
}

fn non_finite_name(x: f64) -> &'static str {
    if x.is_nan() {
        "NaN"
    } else if x > 0.0 {
        "inf"
    } else {
        "-inf"
    }
}

fn parse_non_finite(s: &str) -> Option<f64> {
    match s {
        "inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        "NaN" => Some(f64::NAN),
        _ => None,
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Num(x) if x.is_finite() => s.serialize_f64(*x),
            Value::Num(x) => s.serialize_str(non_finite_name(*x)),
            Value::Int(i) => s.serialize_i64(*i),
            Value::Bool(b) => s.serialize_bool(*b),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValue {
    Bool(bool),
    Int(i64),
    Num(f64),
    Text(String),
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match RawValue::deserialize(d)? {
            RawValue::Bool(b) => Value::Bool(b),
            RawValue::Int(i) => Value::Int(i),
            RawValue::Num(x) => Value::Num(x),
            RawValue::Text(t) => match parse_non_finite(&t) {
                Some(x) => Value::Num(x),
                None => Value::Text(t),
            },
        })
    }
}

impl Value {
    /// Query values are echoed exactly: `{:?}` is the shortest round-trip
    /// representation and always marks floats with `.`, `e` or a
    /// non-finite name.
    fn to_query_text(&self) -> String {
        match self {
            Value::Num(x) if x.is_finite() => format!("{x:?}"),
            Value::Num(x) => non_finite_name(*x).to_string(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(t) => t.clone(),
        }
    }

    fn to_result_text(&self) -> String {
        match self {
            Value::Num(x) => sig(*x),
            other => other.to_query_text(),
        }
    }

    fn parse_query(s: &str) -> Value {
        if let Ok(b) = s.parse::<bool>() {
            return Value::Bool(b);
        }
        if let Ok(i) = s.parse::<i64>() {
            return Value::Int(i);
        }
        Self::parse_number_or_text(s)
    }

    fn parse_result(s: &str) -> Value {
        if let Ok(b) = s.parse::<bool>() {
            return Value::Bool(b);
        }
        Self::parse_number_or_text(s)
    }

    fn parse_number_or_text(s: &str) -> Value {
        if let Some(x) = parse_non_finite(s) {
            return Value::Num(x);
        }
        let numeric = s.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '.');
        match s.parse::<f64>() {
            Ok(x) if numeric => Value::Num(x),
            _ => Value::Text(s.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub query_echo: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<BoundCurve>,
    /// One entry per key of `results`, plus `curve` when a curve is present.
    pub provenance: BTreeMap<String, String>,
}

pub const CURVE_KEY: &str = "curve";

#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("malformed JSON record: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV record: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed CSV record: {0}")]
    Layout(String),
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        OutputRecord {
            command: command.into(),
            query_echo: BTreeMap::new(),
            results: BTreeMap::new(),
            curve: None,
            provenance: BTreeMap::new(),
        }
    }

    pub fn echo(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.query_echo.insert(key.to_string(), value.into());
        self
    }

    pub fn echo_opt<V: Into<Value>>(&mut self, key: &str, value: Option<V>) -> &mut Self {
        if let Some(v) = value {
            self.echo(key, v);
        }
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>, anchor: &str) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self.provenance.insert(key.to_string(), anchor.to_string());
        self
    }

    pub fn set_curve(&mut self, curve: BoundCurve, anchor: &str) -> &mut Self {
        self.curve = Some(curve);
        self.provenance
            .insert(CURVE_KEY.to_string(), anchor.to_string());
        self
    }

    /// Keys of results (and the curve) that lack a provenance anchor.
    pub fn missing_provenance(&self) -> Vec<String> {
        let mut keys: Vec<&str> = self.results.keys().map(String::as_str).collect();
        if self.curve.is_some() {
            keys.push(CURVE_KEY);
        }
        keys.into_iter()
            .filter(|k| self.provenance.get(*k).is_none_or(|a| a.is_empty()))
            .map(str::to_string)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, DecodeError> {
        Ok(serde_json::from_str(s)?)
    }

    fn curve_columns(curve: &BoundCurve) -> Vec<(&'static str, &[f64])> {
        let mut cols: Vec<(&'static str, &[f64])> = vec![("alpha", &curve.alphas)];
        if let Some(exact) = &curve.exact {
            cols.push(("exact", exact));
        }
        cols.push(("upper_bound", &curve.upper_bounds));
        cols
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let mut row = |fields: [&str; 4]| w.write_record(fields).expect("writing to memory");
        row(["kind", "name", "value", "anchor"]);
        row(["command", &self.command, "", ""]);
        for (k, v) in &self.query_echo {
            row(["query", k, &v.to_query_text(), ""]);
        }
        for (k, v) in &self.results {
            let anchor = self.provenance.get(k).map_or("", String::as_str);
            row(["result", k, &v.to_result_text(), anchor]);
        }
        if let Some(curve) = &self.curve {
            let anchor = self.provenance.get(CURVE_KEY).map_or("", String::as_str);
            for (name, column) in Self::curve_columns(curve) {
                for (i, x) in column.iter().enumerate() {
                    row(["curve", &format!("{name}[{i}]"), &sig(*x), anchor]);
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
    }

    pub fn from_csv(s: &str) -> Result<Self, DecodeError> {
        let layout = |msg: String| DecodeError::Layout(msg);
        let mut r = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(s.as_bytes());
        let headers = r.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["kind", "name", "value", "anchor"] {
            return Err(layout(format!("unexpected header {headers:?}")));
        }
        let mut rec: Option<OutputRecord> = None;
        let mut columns: BTreeMap<String, Vec<(usize, f64)>> = BTreeMap::new();
        for row in r.records() {
            let row = row?;
            let (kind, name, value, anchor) = (&row[0], &row[1], &row[2], &row[3]);
            if kind == "command" {
                if rec.is_some() {
                    return Err(layout("more than one command row".into()));
                }
                rec = Some(OutputRecord::new(name));
                continue;
            }
            let out = rec
                .as_mut()
                .ok_or_else(|| layout("first row must name the command".into()))?;
            match kind {
                "query" => {
                    out.echo(name, Value::parse_query(value));
                }
                "result" => {
                    out.result(name, Value::parse_result(value), anchor);
                }
                "curve" => {
                    let (col, idx) = name
                        .strip_suffix(']')
                        .and_then(|n| n.split_once('['))
                        .ok_or_else(|| layout(format!("bad curve cell name {name:?}")))?;
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| layout(format!("bad index in {name:?}")))?;
                    let x: f64 = value
                        .parse()
                        .map_err(|_| layout(format!("bad number {value:?}")))?;
                    columns.entry(col.to_string()).or_default().push((idx, x));
                    out.provenance
                        .insert(CURVE_KEY.to_string(), anchor.to_string());
                }
                other => return Err(layout(format!("unknown row kind {other:?}"))),
            }
        }
        let mut out = rec.ok_or_else(|| layout("empty record".into()))?;
        if !columns.is_empty() {
            let mut take = |name: &str| -> Result<Option<Vec<f64>>, DecodeError> {
                let Some(mut cells) = columns.remove(name) else {
                    return Ok(None);
                };
                cells.sort_by_key(|c| c.0);
                if cells.iter().enumerate().any(|(i, c)| c.0 != i) {
                    return Err(layout(format!("curve column {name} has gaps")));
                }
                Ok(Some(cells.into_iter().map(|c| c.1).collect()))
            };
            let alphas = take("alpha")?.ok_or_else(|| layout("curve lacks alpha".into()))?;
            let upper_bounds =
                take("upper_bound")?.ok_or_else(|| layout("curve lacks upper_bound".into()))?;
            let exact = take("exact")?;
            if let Some(extra) = columns.keys().next() {
                return Err(layout(format!("unknown curve column {extra}")));
            }
            out.curve = Some(BoundCurve {
                alphas,
                upper_bounds,
                exact,
            });
        }
        Ok(out)
    }
}

/// `alpha,upper_bound` or `alpha,exact,upper_bound` table for a curve.
pub fn curve_csv(curve: &BoundCurve) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let cols = OutputRecord::curve_columns(curve);
    w.write_record(cols.iter().map(|c| c.0))
        .expect("writing to memory");
    for i in 0..curve.len() {
        w.write_record(cols.iter().map(|c| sig(c.1[i])))
            .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is UTF-8")
}
