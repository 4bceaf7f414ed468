use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::config::Format;
use super::RunError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

impl Column {
    pub fn new(name: &str, unit: &str) -> Self {
        Column {
            name: name.to_string(),
            unit: unit.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(x) => Some(*x),
            Cell::Text(_) => None,
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => fmt_num(*x)
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Scientific notation with 12 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        format!("{x}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    /// SHA-256 of the canonical JSON serialization of the configuration.
    pub config_sha256: String,
    pub command: String,
}

impl Provenance {
    pub fn new<T: Serialize>(config: &T, command: &str) -> Self {
        let canonical = serde_json::to_vec(config).expect("configuration serializes");
        let digest = Sha256::digest(&canonical);
        Provenance {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config_sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            command: command.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
    pub provenance: Provenance,
}

impl Dataset {
    pub fn new(columns: Vec<Column>, provenance: Provenance) -> Self {
        Dataset {
            columns,
            rows: Vec::new(),
            provenance,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the column count");
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Numeric values of one column; text cells become NaN.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i].as_f64().unwrap_or(f64::NAN)).collect())
    }

    pub fn text_column(&self, name: &str) -> Option<Vec<String>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().map(|r| r[i].csv()).collect())
    }

    /// CSV with a leading `#` provenance line and one header row.
    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# tool={} version={} config_sha256={} command={}\n",
            self.provenance.tool, self.provenance.version, self.provenance.config_sha256, self.provenance.command
        );
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|c| c.name.as_str()))
            .expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output"));
        out
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "provenance": self.provenance,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("dataset serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn write_to<W: Write>(&self, mut w: W, format: Format) -> Result<(), RunError> {
        w.write_all(self.render(format).as_bytes())
            .map_err(|e| RunError::Runtime(format!("writing output: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Dataset {
        let mut d = Dataset::new(
            vec![Column::new("C", "1"), Column::new("status", "")],
            Provenance::new(&1u8, "test"),
        );
        d.push(vec![0.1.into(), "ok".into()]);
        d.push(vec![f64::NAN.into(), "bad, \"quoted\"".into()]);
        d
    }

    #[test]
    fn csv_quoting_and_precision() {
        let csv = sample().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# tool=eo-entangler"));
        assert_eq!(lines[1], "C,status");
        assert_eq!(lines[2], "1.00000000000e-1,ok");
        assert_eq!(lines[3], "NaN,\"bad, \"\"quoted\"\"\"");
    }

    #[test]
    fn json_shape() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["columns"][0]["unit"], "1");
        assert_eq!(v["rows"][0][0], 0.1);
        assert!(v["rows"][1][0].is_null());
        assert_eq!(v["provenance"]["config_sha256"].as_str().unwrap().len(), 64);
    }
}
