//! CSS-like subsystem codes: gauge generators split by Pauli type plus tracked
//! bare logical representatives.

mod distance;
mod tanner;

pub use distance::{bare_distance, dressed_distance, min_weight_outside, LogicalWitness};
pub use tanner::{degree_histogram, tanner_graph, CheckNode, NodeClass, TannerGraph};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{BinaryMatrix, BitVector, EchelonBasis, PauliType, PauliWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("gauge matrix has {found} columns, expected {expected}")]
    ColumnMismatch { expected: usize, found: usize },
    #[error("bare logical has length {found}, expected {expected}")]
    LogicalLength { expected: usize, found: usize },
    #[error("{x} bare X logicals but {z} bare Z logicals")]
    LogicalCount { x: usize, z: usize },
    #[error("logical index {index} out of range for k = {k}")]
    LogicalIndex { index: usize, k: usize },
}

/// A CSS-like subsystem code.
///
/// Gauge generators are stored as two binary matrices whose columns are
/// qubits; row `r` of `gauge_x` is the X-type generator on the set bits.
/// `bare_x[j]` and `bare_z[j]` are bare representatives of the j-th logical
/// qubit. A code with no tracked logicals is read as a stabilizer code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CssSubsystemCode {
    n: usize,
    gauge_x: BinaryMatrix,
    gauge_z: BinaryMatrix,
    bare_x: Vec<BitVector>,
    bare_z: Vec<BitVector>,
}

impl CssSubsystemCode {
    pub fn new(
        n: usize,
        gauge_x: BinaryMatrix,
        gauge_z: BinaryMatrix,
        bare_x: Vec<BitVector>,
        bare_z: Vec<BitVector>,
    ) -> Result<Self, CodeError> {
        for m in [&gauge_x, &gauge_z] {
            if m.ncols() != n {
                return Err(CodeError::ColumnMismatch {
                    expected: n,
                    found: m.ncols(),
                });
            }
        }
        if bare_x.len() != bare_z.len() {
            return Err(CodeError::LogicalCount {
                x: bare_x.len(),
                z: bare_z.len(),
            });
        }
        if let Some(bad) = bare_x.iter().chain(&bare_z).find(|v| v.len() != n) {
            return Err(CodeError::LogicalLength {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Self {
            n,
            gauge_x,
            gauge_z,
            bare_x,
            bare_z,
        })
    }

    /// Builds a code from its gauge generators, deriving paired bare logicals.
    pub fn from_gauge(gauge_x: BinaryMatrix, gauge_z: BinaryMatrix) -> Result<Self, CodeError> {
        let n = gauge_x.ncols();
        if gauge_z.ncols() != n {
            return Err(CodeError::ColumnMismatch {
                expected: n,
                found: gauge_z.ncols(),
            });
        }
        let (bx, bz) = paired_bare_logicals(&gauge_x, &gauge_z);
        Self::new(n, gauge_x, gauge_z, bx, bz)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of tracked logical qubits.
    pub fn k(&self) -> usize {
        self.bare_x.len()
    }

    pub fn gauge_x(&self) -> &BinaryMatrix {
        &self.gauge_x
    }

    pub fn gauge_z(&self) -> &BinaryMatrix {
        &self.gauge_z
    }

    pub fn gauge(&self, kind: PauliType) -> &BinaryMatrix {
        match kind {
            PauliType::X => &self.gauge_x,
            PauliType::Z => &self.gauge_z,
        }
    }

    pub fn bare_x(&self) -> &[BitVector] {
        &self.bare_x
    }

    pub fn bare_z(&self) -> &[BitVector] {
        &self.bare_z
    }

    pub fn bare(&self, kind: PauliType) -> &[BitVector] {
        match kind {
            PauliType::X => &self.bare_x,
            PauliType::Z => &self.bare_z,
        }
    }

    pub fn into_parts(
        self,
    ) -> (
        BinaryMatrix,
        BinaryMatrix,
        Vec<BitVector>,
        Vec<BitVector>,
    ) {
        (self.gauge_x, self.gauge_z, self.bare_x, self.bare_z)
    }

    /// Exchange the roles of X and Z.
    pub fn swap_xz(self) -> Self {
        Self {
            n: self.n,
            gauge_x: self.gauge_z,
            gauge_z: self.gauge_x,
            bare_x: self.bare_z,
            bare_z: self.bare_x,
        }
    }

    /// Same code with qubit `q` relabelled to `perm[q]`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let map = |v: &BitVector| BitVector::from_indices(self.n, v.iter_ones().map(|q| perm[q]));
        let map_m = |m: &BinaryMatrix| {
            BinaryMatrix::from_rows(self.n, m.rows().iter().map(map).collect()).expect("same width")
        };
        Self {
            n: self.n,
            gauge_x: map_m(&self.gauge_x),
            gauge_z: map_m(&self.gauge_z),
            bare_x: self.bare_x.iter().map(map).collect(),
            bare_z: self.bare_z.iter().map(map).collect(),
        }
    }

    /// Gauge generators as Pauli words, X-type first.
    pub fn gauge_generators(&self) -> Vec<PauliWord> {
        self.gauge_x
            .rows()
            .iter()
            .map(|r| PauliWord::x_type(r.clone()))
            .chain(self.gauge_z.rows().iter().map(|r| PauliWord::z_type(r.clone())))
            .collect()
    }

    /// Whether every X generator commutes with every Z generator.
    pub fn is_abelian(&self) -> bool {
        self.gauge_x
            .rows()
            .iter()
            .all(|x| self.gauge_z.rows().iter().all(|z| !x.dot(z)))
    }

    /// Number of logical qubits of the stabilizer code defined by the gauge
    /// generators, assuming they commute.
    pub fn stabilizer_k(&self) -> usize {
        self.n - self.gauge_x.rank() - self.gauge_z.rank()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        if self.bare_x.is_empty() {
            for (i, x) in self.gauge_x.rows().iter().enumerate() {
                for (j, z) in self.gauge_z.rows().iter().enumerate() {
                    if x.dot(z) {
                        issues.push(Violation::NonCommutingChecks { x_row: i, z_row: j });
                    }
                }
            }
            return ValidationReport { issues };
        }
        for kind in [PauliType::X, PauliType::Z] {
            let opposite = self.gauge(kind.dual());
            for (j, v) in self.bare(kind).iter().enumerate() {
                for (r, g) in opposite.rows().iter().enumerate() {
                    if v.dot(g) {
                        issues.push(Violation::BareAnticommutesWithGauge {
                            kind,
                            logical: j,
                            row: r,
                        });
                    }
                }
            }
        }
        for (i, x) in self.bare_x.iter().enumerate() {
            for (j, z) in self.bare_z.iter().enumerate() {
                let odd = x.dot(z);
                if i == j && !odd {
                    issues.push(Violation::LogicalPairCommutes { logical: i });
                } else if i != j && odd {
                    issues.push(Violation::CrossPairAnticommutes {
                        x_logical: i,
                        z_logical: j,
                    });
                }
            }
        }
        for kind in [PauliType::X, PauliType::Z] {
            let basis = EchelonBasis::from_rows(self.n, self.gauge(kind).rows());
            for (j, v) in self.bare(kind).iter().enumerate() {
                if basis.contains(v) {
                    issues.push(Violation::BareInGauge { kind, logical: j });
                }
            }
        }
        ValidationReport { issues }
    }

    /// Generators of the center of the gauge group (the stabilizer group).
    pub fn stabilizer_center(&self) -> StabilizerCenter {
        // An X element u·G_X is central iff it commutes with every Z generator,
        // i.e. u ∈ ker((G_X G_Zᵀ)ᵀ); symmetrically for Z.
        let m = self
            .gauge_x
            .mul_transpose(&self.gauge_z)
            .expect("gauge matrices share a width");
        let central = |coeffs: BinaryMatrix, gens: &BinaryMatrix| {
            let mut basis = EchelonBasis::new(self.n);
            for u in coeffs.rows() {
                basis.insert(gens.left_mul(u));
            }
            basis.to_matrix()
        };
        let x = central(m.transpose().kernel(), &self.gauge_x);
        let z = central(m.kernel(), &self.gauge_z);
        StabilizerCenter { x, z }
    }

    pub fn weight_profile(&self) -> WeightProfile {
        let max = |v: Vec<usize>| v.into_iter().max().unwrap_or(0);
        WeightProfile {
            w_x: max(self.gauge_x.row_weights()),
            w_z: max(self.gauge_z.row_weights()),
            q_x: max(self.gauge_x.column_weights()),
            q_z: max(self.gauge_z.column_weights()),
        }
    }
}

/// Pure-type generators of the stabilizer group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCenter {
    pub x: BinaryMatrix,
    pub z: BinaryMatrix,
}

impl StabilizerCenter {
    pub fn of(&self, kind: PauliType) -> &BinaryMatrix {
        match kind {
            PauliType::X => &self.x,
            PauliType::Z => &self.z,
        }
    }

    pub fn generators(&self) -> Vec<PauliWord> {
        self.x
            .rows()
            .iter()
            .map(|r| PauliWord::x_type(r.clone()))
            .chain(self.z.rows().iter().map(|r| PauliWord::z_type(r.clone())))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.x.nrows() + self.z.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Maximum check weights (`w_*`) and qubit degrees (`q_*`) per Pauli type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WeightProfile {
    pub w_x: usize,
    pub w_z: usize,
    pub q_x: usize,
    pub q_z: usize,
}

impl WeightProfile {
    pub fn w(&self, kind: PauliType) -> usize {
        match kind {
            PauliType::X => self.w_x,
            PauliType::Z => self.w_z,
        }
    }

    pub fn q(&self, kind: PauliType) -> usize {
        match kind {
            PauliType::X => self.q_x,
            PauliType::Z => self.q_z,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NonCommutingChecks { x_row: usize, z_row: usize },
    BareAnticommutesWithGauge { kind: PauliType, logical: usize, row: usize },
    LogicalPairCommutes { logical: usize },
    CrossPairAnticommutes { x_logical: usize, z_logical: usize },
    BareInGauge { kind: PauliType, logical: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonCommutingChecks { x_row, z_row } => {
                write!(f, "X check {x_row} anticommutes with Z check {z_row}")
            }
            Violation::BareAnticommutesWithGauge { kind, logical, row } => write!(
                f,
                "bare {kind} logical {logical} anticommutes with {} gauge generator {row}",
                kind.dual()
            ),
            Violation::LogicalPairCommutes { logical } => {
                write!(f, "bare X and Z logicals {logical} overlap evenly")
            }
            Violation::CrossPairAnticommutes { x_logical, z_logical } => write!(
                f,
                "bare X logical {x_logical} anticommutes with bare Z logical {z_logical}"
            ),
            Violation::BareInGauge { kind, logical } => {
                write!(f, "bare {kind} logical {logical} lies in the gauge group")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Bare logical representatives paired so that `x[i]·z[j] = δ_ij`.
///
/// X candidates are kernel vectors of `G_Z` independent of `rowspace(G_X)`,
/// Z candidates likewise; the pairing is symplectic Gram-Schmidt.
pub fn paired_bare_logicals(
    gauge_x: &BinaryMatrix,
    gauge_z: &BinaryMatrix,
) -> (Vec<BitVector>, Vec<BitVector>) {
    let n = gauge_x.ncols();
    let candidates = |own: &BinaryMatrix, other: &BinaryMatrix| {
        let mut span = EchelonBasis::from_rows(n, own.rows());
        other
            .kernel()
            .into_rows()
            .into_iter()
            .filter(|v| span.insert(v.clone()))
            .collect::<Vec<_>>()
    };
    let mut xs = candidates(gauge_x, gauge_z);
    let mut zs = candidates(gauge_z, gauge_x);
    debug_assert_eq!(xs.len(), zs.len());
    for i in 0..xs.len() {
        let j = (i..zs.len())
            .find(|&j| xs[i].dot(&zs[j]))
            .expect("logical pairing matrix is invertible");
        zs.swap(i, j);
        for l in i + 1..xs.len() {
            if xs[l].dot(&zs[i]) {
                let xi = xs[i].clone();
                xs[l].xor_assign(&xi);
            }
            if xs[i].dot(&zs[l]) {
                let zi = zs[i].clone();
                zs[l].xor_assign(&zi);
            }
        }
    }
    (xs, zs)
}
