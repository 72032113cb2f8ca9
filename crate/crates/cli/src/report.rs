//! Flat key-value records and their three renderings.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

use zerosum::arith::format_ratio;
use zerosum::Rational;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// One output row. Keys keep insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(Map<String, Value>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    pub fn ratio(self, key: &str, v: &Rational) -> Self {
        self.with(key, format_ratio(v))
    }

    pub fn opt_ratio(self, key: &str, v: Option<&Rational>) -> Self {
        match v {
            Some(v) => self.ratio(key, v),
            None => self.with(key, Value::Null),
        }
    }

    pub fn ratios<'a>(self, key: &str, vs: impl IntoIterator<Item = &'a Rational>) -> Self {
        self.with(key, vs.into_iter().map(format_ratio).collect::<Vec<_>>())
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.get(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &String> {
        self.0.keys()
    }
}

/// `12` significant digits in positional notation.
pub fn decimal12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (11 - magnitude).max(0) as usize;
    format!("{x:.places$}")
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

pub fn render(records: &[Record], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            let value = match records {
                [single] => Value::Object(single.0.clone()),
                many => Value::Array(many.iter().map(|r| Value::Object(r.0.clone())).collect()),
            };
            let text = serde_json::to_string_pretty(&value).map_err(|e| CliError::Output(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some(first) = records.first() {
                w.write_record(first.keys())
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
            for r in records {
                w.write_record(r.0.values().map(cell))
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
            out.write_all(&bytes)?;
        }
        Format::Human => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                let width = r.keys().map(|k| k.len()).max().unwrap_or(0);
                for (k, v) in &r.0 {
                    writeln!(out, "{k:<width$}  {}", cell(v))?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use zerosum::arith::ratio;

    #[test]
    fn twelve_digits() {
        assert_eq!(decimal12(2.309401076758503), "2.30940107676");
        assert_eq!(decimal12(13.5), "13.5000000000");
        assert_eq!(decimal12(0.001234), "0.00123400000000");
        assert_eq!(decimal12(0.0), "0");
    }

    #[test]
    fn csv_and_json() {
        let rows = vec![
            Record::new().with("n", 4).ratio("value", &ratio(1, 1)).with("lp", Value::Null),
            Record::new().with("n", 5).ratio("value", &ratio(4, 3)).with("lp", "4/3"),
        ];
        let mut out = Vec::new();
        render(&rows, Format::Csv, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "n,value,lp\n4,1/1,\n5,4/3,4/3\n");
        let mut out = Vec::new();
        render(&rows[..1], Format::Json, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "{\n  \"n\": 4,\n  \"value\": \"1/1\",\n  \"lp\": null\n}\n");
    }
}
