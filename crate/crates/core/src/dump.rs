//! Self-describing CSV and JSON serialisations of matrices with basis labels.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arith::Ring;
use crate::linalg::LinearMap;

/// A matrix together with its row and column labels. Entries are sparse
/// `(row, column, value)` triples with values written out exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub ring: String,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixDump {
    pub fn new<R: Ring>(map: &LinearMap<R>, rows: Vec<String>, columns: Vec<String>) -> Self {
        assert_eq!(rows.len(), map.rows(), "one label per row");
        assert_eq!(columns.len(), map.cols(), "one label per column");
        let mut entries: Vec<(usize, usize, String)> = map
            .columns()
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.to_string())))
            .collect();
        entries.sort_by_key(|(r, c, _)| (*r, *c));
        Self {
            ring: map.ring().kind().to_string(),
            rows,
            columns,
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Dense CSV: a header of column labels, then one line per row starting
    /// with the row label.
    pub fn to_csv(&self) -> String {
        let mut grid = vec![vec!["0".to_string(); self.columns.len()]; self.rows.len()];
        for (r, c, v) in &self.entries {
            grid[*r][*c] = v.clone();
        }
        let mut writer = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("row\\col").chain(self.columns.iter().map(String::as_str));
        writer.write_record(header).expect("in-memory write");
        for (label, line) in self.rows.iter().zip(&grid) {
            let record = std::iter::once(label.as_str()).chain(line.iter().map(String::as_str));
            writer.write_record(record).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 labels")
    }

    /// Hex SHA-256 of the CSV form.
    pub fn sha256(&self) -> String {
        let digest = Sha256::digest(self.to_csv().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// CSV with a header row taken from the field names of `T`.
pub fn records_to_csv<T: Serialize>(records: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        writer.serialize(r).expect("flat records serialise");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 text")
}
