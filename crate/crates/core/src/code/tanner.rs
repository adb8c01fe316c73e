use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CssSubsystemCode;
use crate::gf2::PauliType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeClass {
    Data,
    XCheck,
    ZCheck,
}

impl NodeClass {
    pub fn check(kind: PauliType) -> Self {
        match kind {
            PauliType::X => NodeClass::XCheck,
            PauliType::Z => NodeClass::ZCheck,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NodeClass::Data => "data",
            NodeClass::XCheck => "x-check",
            NodeClass::ZCheck => "z-check",
        }
    }
}

impl fmt::Display for NodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckNode {
    pub kind: PauliType,
    pub index: usize,
}

/// Bipartite incidence graph between gauge generators and qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    pub data_nodes: usize,
    pub x_check_nodes: usize,
    pub z_check_nodes: usize,
    /// `(check, qubit)` pairs, X checks first, each check's qubits ascending.
    pub edges: Vec<(CheckNode, usize)>,
}

impl TannerGraph {
    pub fn node_count(&self) -> usize {
        self.data_nodes + self.x_check_nodes + self.z_check_nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

pub fn tanner_graph(code: &CssSubsystemCode) -> TannerGraph {
    let mut edges = Vec::new();
    for kind in [PauliType::X, PauliType::Z] {
        for (index, row) in code.gauge(kind).rows().iter().enumerate() {
            edges.extend(row.iter_ones().map(|q| (CheckNode { kind, index }, q)));
        }
    }
    TannerGraph {
        data_nodes: code.n(),
        x_check_nodes: code.gauge_x().nrows(),
        z_check_nodes: code.gauge_z().nrows(),
        edges,
    }
}

/// Number of Tanner nodes of each class with each degree.
pub fn degree_histogram(code: &CssSubsystemCode) -> BTreeMap<(NodeClass, usize), usize> {
    let mut hist = BTreeMap::new();
    let mut data_degree = vec![0usize; code.n()];
    for kind in [PauliType::X, PauliType::Z] {
        let m = code.gauge(kind);
        for w in m.row_weights() {
            *hist.entry((NodeClass::check(kind), w)).or_insert(0) += 1;
        }
        for (d, c) in data_degree.iter_mut().zip(m.column_weights()) {
            *d += c;
        }
    }
    for d in data_degree {
        *hist.entry((NodeClass::Data, d)).or_insert(0) += 1;
    }
    hist
}
