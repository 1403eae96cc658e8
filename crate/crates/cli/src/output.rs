//! CSV and JSON emission.
//!
//! Floats are written in their shortest round-trip form, so repeated runs are
//! byte-identical and nothing is lost on re-reading.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use dispersia_core::Units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self, out: &mut String) {
        match self {
            Cell::Num(v) => out.push_str(&float(*v)),
            Cell::Int(v) => {
                let _ = write!(out, "{v}");
            }
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                let _ = write!(out, "\"{}\"", s.replace('"', "\"\""));
            }
            Cell::Text(s) => out.push_str(s),
            Cell::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Cell::Empty => {}
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => json!(v),
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn float(v: f64) -> String {
    if v.is_finite() {
        let mut buf = ryu::Buffer::new();
        buf.format_finite(v).to_owned()
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Everything a subcommand produces.
#[derive(Debug, Clone)]
pub struct Report {
    /// Echo of the inputs.
    pub inputs: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// JSON result; defaults to the rows as objects when `None`.
    pub result: Option<Value>,
    pub error_estimate: Value,
    /// Physical dimension of the main result, e.g. `"energy"`.
    pub dimension: Dimension,
    pub units: Units,
    pub default_format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Energy,
    Force,
    Pressure,
    Dimensionless,
}

impl Dimension {
    fn label(self) -> &'static str {
        match self {
            Dimension::Energy => "hbar*c/L",
            Dimension::Force => "hbar*c/L^2",
            Dimension::Pressure => "hbar*c/L^4",
            Dimension::Dimensionless => "1",
        }
    }

    fn si(self, units: &Units) -> Option<(f64, &'static str)> {
        let factor = match self {
            Dimension::Energy => units.energy_si(1.0)?,
            Dimension::Force => units.force_si(1.0)?,
            Dimension::Pressure => units.pressure_si(1.0)?,
            Dimension::Dimensionless => return None,
        };
        let unit = match self {
            Dimension::Energy => "J",
            Dimension::Force => "N",
            _ => "Pa",
        };
        Some((factor, unit))
    }
}

impl Report {
    pub fn render(&self, format: Option<Format>) -> String {
        match format.unwrap_or(self.default_format) {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn units_note(&self) -> String {
        let mut note = format!(
            "{}; result in {}",
            self.units.describe(),
            self.dimension.label()
        );
        if let Some((factor, unit)) = self.dimension.si(&self.units) {
            let _ = write!(note, "; 1 result unit = {} {unit}", float(factor));
        }
        note
    }

    pub fn csv(&self) -> String {
        let mut out = format!("# {} | {}\n", self.columns.join(","), self.units_note());
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                cell.csv(&mut out);
            }
            out.push('\n');
        }
        out
    }

    pub fn rows_as_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let map: Map<String, Value> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| ((*c).to_owned(), v.json()))
                        .collect();
                    Value::Object(map)
                })
                .collect(),
        )
    }

    pub fn json(&self) -> String {
        let mut units = Map::new();
        units.insert("convention".into(), json!(self.units.describe()));
        units.insert("result".into(), json!(self.dimension.label()));
        units.insert("length_unit_si".into(), json!(self.units.length_unit_si()));
        if let Some((factor, unit)) = self.dimension.si(&self.units) {
            units.insert("si_factor".into(), json!(factor));
            units.insert("si_unit".into(), json!(unit));
        }
        let doc = json!({
            "inputs": self.inputs,
            "result": self.result.clone().unwrap_or_else(|| self.rows_as_json()),
            "error_estimate": self.error_estimate,
            "units": Value::Object(units),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for v in [
            0.1,
            -3.0 / (8.0 * std::f64::consts::PI),
            1e-300,
            6.02e23,
            1.0,
        ] {
            assert_eq!(float(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(float(0.1), "0.1");
        assert_eq!(float(f64::NAN), "nan");
    }

    #[test]
    fn csv_has_one_header_line() {
        let r = Report {
            inputs: Value::Null,
            columns: vec!["x", "label"],
            rows: vec![
                vec![Cell::Num(1.5), Cell::Text("a,b".into())],
                vec![Cell::Empty, Cell::Int(3)],
            ],
            result: None,
            error_estimate: Value::Null,
            dimension: Dimension::Dimensionless,
            units: Units::NATURAL,
            default_format: Format::Csv,
        };
        let csv = r.csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# x,label | natural units"));
        assert_eq!(&lines[1..], ["1.5,\"a,b\"", ",3"]);
        assert_eq!(csv.matches('#').count(), 1);
    }
}
