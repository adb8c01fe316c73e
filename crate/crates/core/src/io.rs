//! File formats: the JSON code file, JSON-lines growth logs, run reports,
//! DOT Tanner graphs and degree histograms.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::code::{degree_histogram, tanner_graph, CodeError, CssSubsystemCode, NodeClass, WeightProfile};
use crate::gf2::{BinaryMatrix, BitVector, Gf2Error, PauliType};
use crate::grow::{DistanceBounds, GrowthLog, PhaseRecord};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("{field}[{index}] has length {found}, expected n = {expected}")]
    RowLength {
        field: &'static str,
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{field} lists {found} logicals but k = {expected}")]
    LogicalCount {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("growth log is empty")]
    EmptyLog,
    #[error(transparent)]
    Bits(#[from] Gf2Error),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// On-disk code description. Every row is a string of `0`/`1` characters of
/// length `n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeFileV1 {
    pub schema_version: u32,
    pub n: usize,
    pub k: usize,
    pub gauge_x: Vec<String>,
    pub gauge_z: Vec<String>,
    pub bare_x: Vec<String>,
    pub bare_z: Vec<String>,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
}

fn strings<'a>(rows: impl IntoIterator<Item = &'a BitVector>) -> Vec<String> {
    rows.into_iter().map(|r| r.to_string()).collect()
}

impl CodeFileV1 {
    pub fn from_code(code: &CssSubsystemCode) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            n: code.n(),
            k: code.k(),
            gauge_x: strings(code.gauge_x().rows()),
            gauge_z: strings(code.gauge_z().rows()),
            bare_x: strings(code.bare_x()),
            bare_z: strings(code.bare_z()),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn to_code(&self) -> Result<CssSubsystemCode, IoError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(IoError::Schema(self.schema_version));
        }
        let rows = |field: &'static str, rows: &[String]| -> Result<Vec<BitVector>, IoError> {
            rows.iter()
                .enumerate()
                .map(|(index, s)| {
                    let v: BitVector = s.parse()?;
                    if v.len() != self.n {
                        return Err(IoError::RowLength {
                            field,
                            index,
                            expected: self.n,
                            found: v.len(),
                        });
                    }
                    Ok(v)
                })
                .collect()
        };
        let bare = |field: &'static str, list: &[String]| {
            if list.len() != self.k {
                return Err(IoError::LogicalCount {
                    field,
                    expected: self.k,
                    found: list.len(),
                });
            }
            rows(field, list)
        };
        let gx = BinaryMatrix::from_rows(self.n, rows("gauge_x", &self.gauge_x)?)?;
        let gz = BinaryMatrix::from_rows(self.n, rows("gauge_z", &self.gauge_z)?)?;
        let code = CssSubsystemCode::new(self.n, gx, gz, bare("bare_x", &self.bare_x)?, bare("bare_z", &self.bare_z)?)?;
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(s)?)
    }
}

/// First line of a log file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct LogHeader {
    seed_n: usize,
    seed_bounds: DistanceBounds,
}

/// Writes a header line followed by one line per phase record.
pub fn write_log_jsonl(log: &GrowthLog, mut out: impl Write) -> Result<(), IoError> {
    let header = LogHeader {
        seed_n: log.seed_n,
        seed_bounds: log.seed_bounds.clone(),
    };
    serde_json::to_writer(&mut out, &header)?;
    out.write_all(b"\n")?;
    for r in &log.records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_log_jsonl(input: impl BufRead) -> Result<GrowthLog, IoError> {
    let mut lines = input.lines().filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty()));
    let header: LogHeader = serde_json::from_str(&lines.next().ok_or(IoError::EmptyLog)??)?;
    let records = lines
        .map(|l| Ok(serde_json::from_str::<PhaseRecord>(&l?)?))
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(GrowthLog {
        seed_n: header.seed_n,
        seed_bounds: header.seed_bounds,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCount {
    pub node_class: NodeClass,
    pub degree: usize,
    pub count: usize,
}

pub fn degree_counts(code: &CssSubsystemCode) -> Vec<DegreeCount> {
    degree_histogram(code)
        .into_iter()
        .map(|((node_class, degree), count)| DegreeCount { node_class, degree, count })
        .collect()
}

/// Summary of a growth run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub n: usize,
    pub k: usize,
    pub d_lower: usize,
    pub d_upper_x: usize,
    pub d_upper_z: usize,
    pub profile: WeightProfile,
    pub degree_histogram: Vec<DegreeCount>,
    pub rounds: usize,
    pub qubits_added: usize,
    pub max_bare_growth: usize,
    pub wall_time_ms: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log: Option<String>,
}

impl RunReport {
    pub fn new(code: &CssSubsystemCode, log: &GrowthLog, wall_time_ms: u128, log_path: Option<String>) -> Self {
        let b = log.final_bounds();
        Self {
            n: code.n(),
            k: code.k(),
            d_lower: b.lower,
            d_upper_x: b.upper(PauliType::X),
            d_upper_z: b.upper(PauliType::Z),
            profile: code.weight_profile(),
            degree_histogram: degree_counts(code),
            rounds: log.rounds(),
            qubits_added: log.qubits_added(),
            max_bare_growth: log.max_bare_growth(),
            wall_time_ms,
            log: log_path,
        }
    }
}

/// Undirected DOT graph: data nodes blue, X checks green, Z checks red.
pub fn to_dot(code: &CssSubsystemCode) -> String {
    let g = tanner_graph(code);
    let mut s = String::from("graph tanner {\n  node [style=filled, fontcolor=white];\n");
    for q in 0..g.data_nodes {
        let _ = writeln!(s, "  d{q} [class=\"data\", color=blue, fillcolor=blue];");
    }
    for i in 0..g.x_check_nodes {
        let _ = writeln!(s, "  x{i} [class=\"x-check\", color=green, fillcolor=green];");
    }
    for i in 0..g.z_check_nodes {
        let _ = writeln!(s, "  z{i} [class=\"z-check\", color=red, fillcolor=red];");
    }
    for (check, q) in &g.edges {
        let prefix = match check.kind {
            PauliType::X => 'x',
            PauliType::Z => 'z',
        };
        let _ = writeln!(s, "  {prefix}{} -- d{q};", check.index);
    }
    s.push_str("}\n");
    s
}

/// CSV with columns `node-class,degree,count`.
pub fn degree_csv(code: &CssSubsystemCode) -> String {
    let mut s = String::from("node-class,degree,count\n");
    for c in degree_counts(code) {
        let _ = writeln!(s, "{},{},{}", c.node_class, c.degree, c.count);
    }
    s
}
