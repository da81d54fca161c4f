use std::fmt::Write as _;

use lrtables::{BigUint, IntTable, Partition, PartitionMatrix};
use serde::Serialize;

/// One emitted table. Integer tables serialize as nested arrays; partition
/// tables as `{"cells": [[[1],[]],...], "norm": "1"}`.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum TableOut {
    Integer(IntTable),
    Partitions {
        cells: Vec<Vec<Vec<usize>>>,
        norm: String,
    },
}

impl TableOut {
    pub fn partitions(table: &PartitionMatrix, norm: &BigUint) -> Self {
        let cells = table
            .rows()
            .iter()
            .map(|row| row.iter().map(|p| p.parts().to_vec()).collect())
            .collect();
        TableOut::Partitions {
            cells,
            norm: norm.to_string(),
        }
    }

    fn text(&self) -> String {
        match self {
            TableOut::Integer(t) => format!("{t:?}").replace(' ', ""),
            TableOut::Partitions { cells, norm } => {
                format!("{} norm {norm}", format!("{cells:?}").replace(' ', ""))
            }
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Response {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<&'static str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub margins: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cols: Option<Vec<usize>>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<Vec<TableOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl Response {
    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("response fields always serialize")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{key}: {value}");
        };
        line("command", &self.command);
        if let Some(g) = self.group {
            line("group", &g);
        }
        if !self.weights.is_empty() {
            line("weights", &self.weights.join(" "));
        }
        if let Some(t) = &self.target {
            line("target", t);
        }
        if !self.margins.is_empty() {
            line("margins", &self.margins.join(" "));
        }
        if let Some(r) = &self.rows {
            line("rows", &join(r));
        }
        if let Some(c) = &self.cols {
            line("cols", &join(c));
        }
        line("value", &self.value);
        if let Some(v) = &self.oracle_value {
            line("oracle_value", v);
        }
        if let Some(n) = self.n {
            line("n", &n);
        }
        if let Some(t) = self.stable_threshold {
            line("stable_threshold", &t);
        }
        if let Some(c) = self.table_count {
            line("table_count", &c);
        }
        if let Some(a) = self.agreement {
            line("agreement", &a);
        }
        if let Some(tables) = &self.tables {
            out.push_str("tables:\n");
            for t in tables {
                let _ = writeln!(out, "  {}", t.text());
            }
        }
        out
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn partition_strings(parts: &[Partition]) -> Vec<String> {
    parts.iter().map(Partition::to_string).collect()
}

/// Batch-mode reply for a request that failed.
#[derive(Debug, Serialize)]
pub struct ErrorResponse {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    pub error: String,
    pub exit_code: u8,
}
