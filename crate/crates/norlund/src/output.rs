//! Rendering of tables and reports. Floats in CSV and text use 17
//! significant digits; JSON numbers use the shortest round-trip form.

use std::io::Write;

use norlund_core::verify::{ParamValue, Value, VerificationReport};
use serde_json::json;

use crate::cli::Format;

/// Round-trip-safe float text with 17 significant digits.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Float(f64),
    Int(i64),
    Empty,
}

impl Cell {
    fn to_text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Float(v) => format_float(*v),
            Cell::Int(i) => i.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Float(v) if v.is_finite() => json!(v),
            Cell::Float(v) => json!(v.to_string()),
            Cell::Int(i) => json!(i),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// Rows under a fixed header.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let records: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.clone(), c.to_json()))
                            .collect::<serde_json::Map<_, _>>();
                        serde_json::Value::Object(map)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &records)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::to_text))?;
                }
                w.flush()
            }
            Format::Text => {
                let text: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Cell::to_text).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        text.iter()
                            .map(|r| r[i].len())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                };
                writeln!(out, "{}", line(&self.header))?;
                for r in &text {
                    writeln!(out, "{}", line(r))?;
                }
                Ok(())
            }
        }
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Number(x) => format_float(*x),
        Value::Exact(s) => s.clone(),
    }
}

fn param_text(p: &ParamValue) -> String {
    match p {
        ParamValue::Int(i) => i.to_string(),
        ParamValue::Num(x) => format_float(*x),
        ParamValue::Text(s) => s.clone(),
        ParamValue::List(xs) => format!(
            "[{}]",
            xs.iter()
                .map(|x| format_float(*x))
                .collect::<Vec<_>>()
                .join(";")
        ),
    }
}

fn params_text(r: &VerificationReport) -> String {
    r.parameters
        .iter()
        .map(|(k, v)| format!("{k}={}", param_text(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_reports(
    reports: &[VerificationReport],
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "identity_id",
                "parameters",
                "lhs",
                "rhs",
                "residual",
                "tolerance",
                "passed",
                "notes",
                "quadrature_errors",
            ])?;
            for r in reports {
                let params = serde_json::to_string(&r.parameters).map_err(std::io::Error::other)?;
                let quad = r
                    .quadrature_errors
                    .iter()
                    .map(|e| format_float(*e))
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    r.identity_id.clone(),
                    params,
                    value_text(&r.lhs),
                    value_text(&r.rhs),
                    format_float(r.residual),
                    format_float(r.tolerance),
                    r.passed.to_string(),
                    r.notes.clone(),
                    quad,
                ])?;
            }
            w.flush()
        }
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{} {} {} residual={} tolerance={}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.identity_id,
                    params_text(r),
                    format_float(r.residual),
                    format_float(r.tolerance),
                )?;
                if !r.notes.is_empty() {
                    writeln!(out, "     {}", r.notes)?;
                }
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", reports.len())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for v in [0.1, 1.0 / 3.0, std::f64::consts::PI, 1e-300, -2.5e17] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_float(1.5), "1.5000000000000000e0");
    }

    #[test]
    fn csv_quotes_fields() {
        let mut t = Table::new(&["n", "value"]);
        t.push(vec![Cell::Int(1), Cell::Text("a, b".into())]);
        let mut buf = Vec::new();
        t.render(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "n,value\n1,\"a, b\"\n");
    }
}
