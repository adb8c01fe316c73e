//! Spider networks realizing CSS codes, checked by contraction.
//!
//! The Choi state of a CSS code's encoder is again a CSS state. Its network
//! has a Z-spider per data qubit joined to an X-spider per Z check; data
//! qubits that meet X checks pass through an X-spider joined to a Z-spider
//! per X check.

use thiserror::Error;

use crate::code::{paired_bare_logicals, CssSubsystemCode};
use crate::conjoin::{contract_network, spider, ConjoinError, ConjoinNetwork, LegRef, LegoBlock, Membership};
use crate::gf2::{BinaryMatrix, BitVector, PauliType, PauliWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CssNetworkError {
    #[error("X checks have {x} columns but Z checks have {z}")]
    ColumnMismatch { x: usize, z: usize },
    #[error("X check {x_row} anticommutes with Z check {z_row}")]
    NonCommuting { x_row: usize, z_row: usize },
    #[error("block {0} is not a spider")]
    NotASpider(usize),
    #[error(transparent)]
    Conjoin(#[from] ConjoinError),
}

/// Parity checks of a CSS stabilizer code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCodeInput {
    h_x: BinaryMatrix,
    h_z: BinaryMatrix,
}

fn check_commuting(h_x: &BinaryMatrix, h_z: &BinaryMatrix) -> Result<(), CssNetworkError> {
    if h_x.ncols() != h_z.ncols() {
        return Err(CssNetworkError::ColumnMismatch {
            x: h_x.ncols(),
            z: h_z.ncols(),
        });
    }
    for (x_row, rx) in h_x.rows().iter().enumerate() {
        if let Some(z_row) = h_z.rows().iter().position(|rz| rx.dot(rz)) {
            return Err(CssNetworkError::NonCommuting { x_row, z_row });
        }
    }
    Ok(())
}

impl CssCodeInput {
    pub fn new(h_x: BinaryMatrix, h_z: BinaryMatrix) -> Result<Self, CssNetworkError> {
        check_commuting(&h_x, &h_z)?;
        Ok(Self { h_x, h_z })
    }

    /// Reads the gauge generators of `code` as stabilizer checks.
    pub fn from_code(code: &CssSubsystemCode) -> Result<Self, CssNetworkError> {
        Self::new(code.gauge_x().clone(), code.gauge_z().clone())
    }

    pub fn n(&self) -> usize {
        self.h_x.ncols()
    }

    pub fn k(&self) -> usize {
        self.n() - self.h_x.rank() - self.h_z.rank()
    }

    pub fn h_x(&self) -> &BinaryMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &BinaryMatrix {
        &self.h_z
    }
}

/// X and Z generator matrices of the Choi state on `n + k` qubits: the
/// checks padded with identity, then `L̄_X ⊗ X_j` and `L̄_Z ⊗ Z_j` for each
/// logical pair.
pub fn choi_matrices(input: &CssCodeInput) -> (BinaryMatrix, BinaryMatrix) {
    let n = input.n();
    let (lx, lz) = paired_bare_logicals(&input.h_x, &input.h_z);
    let k = lx.len();
    let m = n + k;
    let part = |h: &BinaryMatrix, logicals: &[BitVector]| {
        let mut rows: Vec<BitVector> = h.rows().iter().filter(|r| !r.is_zero()).map(|r| r.resized(m)).collect();
        let mut basis = crate::gf2::EchelonBasis::new(m);
        rows.retain(|r| basis.insert(r.clone()));
        rows.extend(logicals.iter().enumerate().map(|(j, l)| {
            let mut v = l.resized(m);
            v.set(n + j, true);
            v
        }));
        BinaryMatrix::from_rows(m, rows).expect("rows have width n + k")
    };
    (part(&input.h_x, &lx), part(&input.h_z, &lz))
}

/// Generators of the Choi state of the encoder of `input`.
pub fn choi_state(input: &CssCodeInput) -> Vec<PauliWord> {
    let (x, z) = choi_matrices(input);
    x.rows()
        .iter()
        .map(|r| PauliWord::x_type(r.clone()))
        .chain(z.rows().iter().map(|r| PauliWord::z_type(r.clone())))
        .collect()
}

/// Spider network for the CSS state with the given generators.
///
/// Open leg `j` is data qubit `j`. Zero rows are skipped.
pub fn css_state_network(x_gens: &BinaryMatrix, z_gens: &BinaryMatrix) -> Result<ConjoinNetwork, CssNetworkError> {
    check_commuting(x_gens, z_gens)?;
    let n = x_gens.ncols();
    let mut net = ConjoinNetwork::new();
    let z_checks: Vec<&BitVector> = z_gens.rows().iter().filter(|r| !r.is_zero()).collect();
    let x_checks: Vec<&BitVector> = x_gens.rows().iter().filter(|r| !r.is_zero()).collect();
    let degree = |checks: &[&BitVector], q: usize| checks.iter().filter(|r| r.get(q)).count();

    // free legs per data qubit, handed out in check order
    let mut z_side: Vec<Vec<LegRef>> = Vec::with_capacity(n);
    let mut x_side: Vec<Vec<LegRef>> = Vec::with_capacity(n);
    for q in 0..n {
        let dz = degree(&z_checks, q);
        let dx = degree(&x_checks, q);
        let data = net.add_block(spider(dz + 1, PauliType::Z));
        z_side.push((1..=dz).map(|l| LegRef::new(data, l)).rev().collect());
        if dx == 0 {
            net.open(LegRef::new(data, 0));
            x_side.push(Vec::new());
        } else {
            let pass = net.add_block(spider(dx + 2, PauliType::X));
            net.contract(LegRef::new(data, 0), LegRef::new(pass, 0));
            net.open(LegRef::new(pass, 1));
            x_side.push((2..dx + 2).map(|l| LegRef::new(pass, l)).rev().collect());
        }
    }
    for (checks, kind, side) in [
        (&z_checks, PauliType::X, &mut z_side),
        (&x_checks, PauliType::Z, &mut x_side),
    ] {
        for row in checks.iter() {
            let check = net.add_block(spider(row.weight(), kind));
            for (l, q) in row.iter_ones().enumerate() {
                let leg = side[q].pop().expect("one free leg per incidence");
                net.contract(leg, LegRef::new(check, l));
            }
        }
    }
    Ok(net)
}

/// Colour of a spider block, if it is one.
fn spider_kind(block: &LegoBlock) -> Option<PauliType> {
    let v = block.legs();
    if v == 0 {
        return None;
    }
    [PauliType::Z, PauliType::X]
        .into_iter()
        .find(|&kind| block.same_group(&spider(v, kind)))
}

/// Replace every spider by three-legged spiders, the encoders of the
/// two-qubit repetition codes. Valence `v ≥ 3` becomes a chain of `v - 2`
/// blocks; lower valences close a loop on an extra block.
pub fn decompose_spiders(net: &ConjoinNetwork) -> Result<ConjoinNetwork, CssNetworkError> {
    net.validate()?;
    let mut out = ConjoinNetwork::new();
    let mut legs: Vec<Vec<LegRef>> = Vec::with_capacity(net.blocks.len());
    for (b, block) in net.blocks.iter().enumerate() {
        let kind = spider_kind(block).ok_or(CssNetworkError::NotASpider(b))?;
        let v = block.legs();
        let mut add = || out.add_block(spider(3, kind));
        let map = match v {
            1 => {
                let s = add();
                out.contract(LegRef::new(s, 1), LegRef::new(s, 2));
                vec![LegRef::new(s, 0)]
            }
            2 => {
                let s = add();
                let cap = add();
                out.contract(LegRef::new(s, 2), LegRef::new(cap, 0));
                out.contract(LegRef::new(cap, 1), LegRef::new(cap, 2));
                vec![LegRef::new(s, 0), LegRef::new(s, 1)]
            }
            _ => {
                let chain: Vec<usize> = (0..v - 2).map(|_| add()).collect();
                for w in chain.windows(2) {
                    out.contract(LegRef::new(w[0], 2), LegRef::new(w[1], 0));
                }
                let mut map = vec![LegRef::new(chain[0], 0)];
                map.extend(chain.iter().map(|&s| LegRef::new(s, 1)));
                map.push(LegRef::new(chain[chain.len() - 1], 2));
                map
            }
        };
        legs.push(map);
    }
    let at = |r: &LegRef| legs[r.block][r.leg];
    for (a, b) in &net.contractions {
        out.contract(at(a), at(b));
    }
    for r in &net.open_legs {
        out.open(at(r));
    }
    Ok(out)
}

/// How finely the network is built before contraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Granularity {
    #[default]
    Spiders,
    /// Only three-legged spiders.
    RepetitionLegos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityReport {
    pub holds: bool,
    /// A generator of one side missing from the other, when `holds` is false.
    pub witness: Option<PauliWord>,
    pub blocks: usize,
    pub contractions: usize,
}

pub fn verify_universality(input: &CssCodeInput) -> Result<UniversalityReport, CssNetworkError> {
    verify_universality_with(input, Granularity::Spiders)
}

/// Contract the network of the Choi state and compare it with the Choi
/// generators, signs included.
pub fn verify_universality_with(
    input: &CssCodeInput,
    granularity: Granularity,
) -> Result<UniversalityReport, CssNetworkError> {
    let (x, z) = choi_matrices(input);
    let mut net = css_state_network(&x, &z)?;
    if granularity == Granularity::RepetitionLegos {
        net = decompose_spiders(&net)?;
    }
    let contracted = contract_network(&net)?;
    let expected = LegoBlock::new(x.ncols(), choi_state(input))?;
    let missing = |from: &LegoBlock, into: &LegoBlock| {
        from.generators()
            .iter()
            .find(|g| into.membership(g) != Membership::Positive)
            .cloned()
    };
    let witness = missing(&expected, &contracted).or_else(|| missing(&contracted, &expected));
    Ok(UniversalityReport {
        holds: witness.is_none(),
        witness,
        blocks: net.blocks.len(),
        contractions: net.contractions.len(),
    })
}
