//! Reference codes and growth seeds.

mod iso;

pub use iso::tanner_isomorphic;

use thiserror::Error;

use crate::code::{CodeError, CssSubsystemCode};
use crate::gf2::{BinaryMatrix, BitVector};
use crate::grow::{carve_x_stabilizer, reduce_generator_weights, GrowError, Lattice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("no catalog entry named {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Grow(#[from] GrowError),
}

/// Expected parameters of a catalog code. `d` is the overall dressed
/// distance; `d_x` and `d_z` split it by logical type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d_x: usize,
    pub d_z: usize,
}

impl Expected {
    fn uniform(n: usize, k: usize, d: usize) -> Self {
        Self { n, k, d_x: d, d_z: d }
    }

    pub fn d(&self) -> usize {
        self.d_x.min(self.d_z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub code: CssSubsystemCode,
    pub expected: Expected,
    pub description: String,
}

fn vec_of(n: usize, s: impl IntoIterator<Item = usize>) -> BitVector {
    BitVector::from_indices(n, s)
}

/// `[[4,1,2]]`: one weight-4 X check and two weight-2 Z checks. This is the
/// distance-2 rotated surface code.
pub fn seed_412() -> CssSubsystemCode {
    rotated_surface(2).expect("d = 2 is valid")
}

/// `[[4,2,2]]` with `X̄ = X0X1, X0X2` and `Z̄ = Z0Z2, Z0Z1`.
pub fn seed_422() -> CssSubsystemCode {
    let n = 4;
    CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, [[0, 1, 2, 3]]),
        BinaryMatrix::from_supports(n, [[0, 1, 2, 3]]),
        vec![vec_of(n, [0, 1]), vec_of(n, [0, 2])],
        vec![vec_of(n, [0, 2]), vec_of(n, [0, 1])],
    )
    .expect("shapes match")
}

/// `[[6,4,2]]` iceberg code with `X̄_j = X0Xj` and `Z̄_j = ZjZ5` for `j = 1..=4`.
pub fn iceberg() -> CssSubsystemCode {
    let n = 6;
    CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, [(0..n).collect::<Vec<_>>()]),
        BinaryMatrix::from_supports(n, [(0..n).collect::<Vec<_>>()]),
        (1..=4).map(|j| vec_of(n, [0, j])).collect(),
        (1..=4).map(|j| vec_of(n, [j, 5])).collect(),
    )
    .expect("shapes match")
}

/// Steane `[[7,1,3]]` from the Hamming parity checks.
pub fn steane() -> CssSubsystemCode {
    let h = BinaryMatrix::from_supports(7, [[3, 4, 5, 6], [1, 2, 5, 6], [0, 2, 4, 6]]);
    CssSubsystemCode::from_gauge(h.clone(), h).expect("shapes match")
}

fn check_dims(dims: &[(&str, usize)], min: usize) -> Result<(), CatalogError> {
    match dims.iter().find(|(_, v)| *v < min) {
        Some((name, v)) => Err(CatalogError::InvalidDimensions(format!(
            "{name} = {v} is below {min}"
        ))),
        None => Ok(()),
    }
}

/// `r × c` Bacon-Shor subsystem code, row-major. XX gauge operators sit on
/// horizontal edges and ZZ on vertical edges; `X̄` is the last column and
/// `Z̄` the first row.
pub fn bacon_shor_2d(rows: usize, cols: usize) -> Result<CssSubsystemCode, CatalogError> {
    check_dims(&[("rows", rows), ("cols", cols)], 2)?;
    let lat = Lattice::new(rows, cols);
    let n = lat.len();
    let gx = (0..rows).flat_map(|r| (0..cols - 1).map(move |c| [lat.index(r, c), lat.index(r, c + 1)]));
    let gz = (0..rows - 1).flat_map(|r| (0..cols).map(move |c| [lat.index(r, c), lat.index(r + 1, c)]));
    Ok(CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, gx),
        BinaryMatrix::from_supports(n, gz),
        vec![vec_of(n, (0..rows).map(|r| lat.index(r, cols - 1)))],
        vec![vec_of(n, (0..cols).map(|c| lat.index(0, c)))],
    )?)
}

/// `a × b × c` Bacon-Shor code indexed `(layer, row, column)`-major. XX
/// gauge operators join neighbouring layers, ZZ operators join neighbours
/// inside a layer. `X̄` covers layer 0 and `Z̄` the line through `(·, 0, 0)`.
pub fn bacon_shor_3d(a: usize, b: usize, c: usize) -> Result<CssSubsystemCode, CatalogError> {
    check_dims(&[("a", a), ("b", b), ("c", c)], 2)?;
    let n = a * b * c;
    let idx = |l: usize, r: usize, k: usize| l * b * c + r * c + k;
    let mut gx = Vec::new();
    let mut gz = Vec::new();
    for l in 0..a {
        for r in 0..b {
            for k in 0..c {
                if l + 1 < a {
                    gx.push([idx(l, r, k), idx(l + 1, r, k)]);
                }
                if k + 1 < c {
                    gz.push([idx(l, r, k), idx(l, r, k + 1)]);
                }
                if r + 1 < b {
                    gz.push([idx(l, r, k), idx(l, r + 1, k)]);
                }
            }
        }
    }
    Ok(CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, gx),
        BinaryMatrix::from_supports(n, gz),
        vec![vec_of(n, 0..b * c)],
        vec![vec_of(n, (0..a).map(|l| idx(l, 0, 0)))],
    )?)
}

/// Rotated surface code on a `d × d` grid, row-major.
///
/// Plaquette `(r, c)` covers rows `r, r+1` and columns `c, c+1`; it is
/// X-type when `r + c` is even. Boundary plaquettes are kept only when they
/// are Z-type on the top and bottom or X-type on the left and right.
/// `X̄` is the first row and `Z̄` the first column.
pub fn rotated_surface(d: usize) -> Result<CssSubsystemCode, CatalogError> {
    check_dims(&[("d", d)], 2)?;
    let lat = Lattice::new(d, d);
    let n = lat.len();
    let di = d as i64;
    let mut gx = Vec::new();
    let mut gz = Vec::new();
    for r in -1..di {
        for c in -1..di {
            let x_type = (r + c).rem_euclid(2) == 0;
            let vertical_edge = r == -1 || r == di - 1;
            let horizontal_edge = c == -1 || c == di - 1;
            let keep = match (vertical_edge, horizontal_edge) {
                (false, false) => true,
                (true, false) => !x_type,
                (false, true) => x_type,
                (true, true) => false,
            };
            if !keep {
                continue;
            }
            let support: Vec<usize> = [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]
                .into_iter()
                .filter(|&(i, j)| (0..di).contains(&i) && (0..di).contains(&j))
                .map(|(i, j)| lat.index(i as usize, j as usize))
                .collect();
            if x_type {
                gx.push(support);
            } else {
                gz.push(support);
            }
        }
    }
    Ok(CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, gx),
        BinaryMatrix::from_supports(n, gz),
        vec![vec_of(n, (0..d).map(|c| lat.index(0, c)))],
        vec![vec_of(n, (0..d).map(|r| lat.index(r, 0)))],
    )?)
}

/// Bacon-Shor `[[l², 1, l]]` written as a stabilizer code: vertical ZZ
/// checks and one weight-`2l` X check per neighbouring column pair.
pub fn bacon_shor_stabilizer(l: usize) -> Result<CssSubsystemCode, CatalogError> {
    check_dims(&[("l", l)], 2)?;
    let lat = Lattice::new(l, l);
    let n = lat.len();
    let gz = (0..l - 1).flat_map(|r| (0..l).map(move |c| [lat.index(r, c), lat.index(r + 1, c)]));
    let gx = (0..l - 1).map(|c| (0..l).flat_map(|r| [lat.index(r, c), lat.index(r, c + 1)]).collect::<Vec<_>>());
    Ok(CssSubsystemCode::new(
        n,
        BinaryMatrix::from_supports(n, gx),
        BinaryMatrix::from_supports(n, gz),
        vec![vec_of(n, (0..l).map(|r| lat.index(r, l - 1)))],
        vec![vec_of(n, (0..l).map(|c| lat.index(0, c)))],
    )?)
}

/// Islands `(column, first row, height)` carved out of the 6×6 stabilizer
/// Bacon-Shor code to obtain the compass code.
pub const COMPASS_ISLANDS: [(usize, usize, usize); 9] = [
    (0, 0, 2),
    (0, 2, 2),
    (0, 4, 2),
    (2, 0, 2),
    (2, 2, 2),
    (2, 4, 2),
    (4, 0, 2),
    (4, 2, 2),
    (4, 4, 2),
];

/// `[[36,1,6]]` compass code: each X check on columns `(0,1)`, `(2,3)` and
/// `(4,5)` is split into three weight-4 plaquettes, then generator weights
/// are reduced.
pub fn compass_fig4() -> CssSubsystemCode {
    let lat = Lattice::new(6, 6);
    let mut code = bacon_shor_stabilizer(6).expect("l = 6 is valid");
    for (i, j, m) in COMPASS_ISLANDS {
        code = carve_x_stabilizer(code, lat, i, j, m).expect("islands fit the lattice");
    }
    reduce_generator_weights(&code)
}

/// Names accepted by [`lookup`] besides the parametrised families
/// `bs{r}x{c}`, `bs3d{a}x{b}x{c}`, `surface{d}` and `stabbs{l}`.
pub const NAMED: [&str; 5] = ["seed412", "seed422", "iceberg642", "steane", "compass36"];

/// Default list printed by the CLI.
pub fn standard_names() -> Vec<String> {
    NAMED
        .iter()
        .map(|s| s.to_string())
        .chain(["bs2x2", "bs3x3", "bs3d2x2x2", "surface3", "stabbs6"].map(String::from))
        .collect()
}

fn dims(s: &str, count: usize) -> Option<Vec<usize>> {
    let v: Vec<usize> = s.split('x').map(|p| p.parse().ok()).collect::<Option<_>>()?;
    (v.len() == count).then_some(v)
}

pub fn lookup(name: &str) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    let (code, expected, description) = match name {
        "seed412" => (seed_412(), Expected::uniform(4, 1, 2), "distance-2 rotated surface seed".to_string()),
        "seed422" => (seed_422(), Expected::uniform(4, 2, 2), "four-qubit error detecting seed".to_string()),
        "iceberg642" => (iceberg(), Expected::uniform(6, 4, 2), "six-qubit iceberg code".to_string()),
        "steane" => (steane(), Expected::uniform(7, 1, 3), "Steane code".to_string()),
        "compass36" => (compass_fig4(), Expected::uniform(36, 1, 6), "compass code carved from 6x6 Bacon-Shor".to_string()),
        _ => {
            if let Some(rest) = name.strip_prefix("bs3d") {
                let v = dims(rest, 3).ok_or_else(unknown)?;
                let (a, b, c) = (v[0], v[1], v[2]);
                (
                    bacon_shor_3d(a, b, c)?,
                    Expected { n: a * b * c, k: 1, d_x: b * c, d_z: a },
                    format!("{a}x{b}x{c} Bacon-Shor code"),
                )
            } else if let Some(rest) = name.strip_prefix("bs") {
                let v = dims(rest, 2).ok_or_else(unknown)?;
                let (r, c) = (v[0], v[1]);
                (
                    bacon_shor_2d(r, c)?,
                    Expected { n: r * c, k: 1, d_x: r, d_z: c },
                    format!("{r}x{c} Bacon-Shor code"),
                )
            } else if let Some(rest) = name.strip_prefix("surface") {
                let d = dims(rest, 1).ok_or_else(unknown)?[0];
                (rotated_surface(d)?, Expected::uniform(d * d, 1, d), format!("distance-{d} rotated surface code"))
            } else if let Some(rest) = name.strip_prefix("stabbs") {
                let l = dims(rest, 1).ok_or_else(unknown)?[0];
                (
                    bacon_shor_stabilizer(l)?,
                    Expected::uniform(l * l, 1, l),
                    format!("{l}x{l} Bacon-Shor code in stabilizer form"),
                )
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        code,
        expected,
        description,
    })
}
