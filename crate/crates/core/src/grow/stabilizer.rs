//! Moves on commuting (stabilizer) CSS codes: pairwise non-isometric
//! measurements, generator weight reduction and compass-style carving.

use crate::code::CssSubsystemCode;
use crate::gf2::{BinaryMatrix, BitVector, EchelonBasis, PauliType};

use super::phases::oriented;
use super::GrowError;

/// Row-major 2d qubit layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub rows: usize,
    pub cols: usize,
}

impl Lattice {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    pub fn index(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Contract qubits `p` and `q` with a non-isometric lego of type `kind`.
///
/// On a stabilizer code this measures `P_p P_q` (`P = kind`): the first
/// anticommuting opposite-type check becomes the pivot, is multiplied into
/// the other anticommuting checks and bare logicals, and is then replaced by
/// the measured pair.
pub fn stabilizer_nonisometry(
    code: CssSubsystemCode,
    kind: PauliType,
    p: usize,
    q: usize,
) -> Result<CssSubsystemCode, GrowError> {
    let n = code.n();
    for qubit in [p, q] {
        if qubit >= n {
            return Err(GrowError::QubitOutOfRange { qubit, n });
        }
    }
    if p == q {
        return Err(GrowError::Geometry(format!("pair ({p}, {q}) repeats a qubit")));
    }
    if !code.is_abelian() {
        return Err(GrowError::NotStabilizer);
    }
    oriented(code, kind, |code| {
        let word = BitVector::from_indices(n, [p, q]);
        let (gx, gz, bx, mut bz) = code.into_parts();
        let mut xs = gx.into_rows();
        let mut zs = gz.into_rows();
        let anti: Vec<usize> = (0..zs.len()).filter(|&i| zs[i].dot(&word)).collect();
        match anti.split_first() {
            Some((&pivot, rest)) => {
                let pv = zs[pivot].clone();
                for &i in rest {
                    zs[i].xor_assign(&pv);
                }
                for v in bz.iter_mut().filter(|v| v.dot(&word)) {
                    v.xor_assign(&pv);
                }
                zs.remove(pivot);
                xs.push(word);
            }
            None => {
                if let Some(l) = bz.iter().position(|v| v.dot(&word)) {
                    return Err(GrowError::LogicalMeasured { logical: l });
                }
                if !EchelonBasis::from_rows(n, &xs).contains(&word) {
                    xs.push(word);
                }
            }
        }
        let code = CssSubsystemCode::new(
            n,
            BinaryMatrix::from_rows(n, xs).expect("width n"),
            BinaryMatrix::from_rows(n, zs).expect("width n"),
            bx,
            bz,
        )?;
        Ok((code, ()))
    })
    .map(|(c, ())| c)
}

fn lighten(rows: &[BitVector], n: usize) -> Vec<BitVector> {
    let mut rows = rows.to_vec();
    loop {
        let mut improved = false;
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                if i == j || rows[j].is_zero() {
                    continue;
                }
                let sum = rows[i].xor(&rows[j]);
                if sum.weight() < rows[i].weight() {
                    rows[i] = sum;
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
    rows.sort_by_key(|r| (r.weight(), r.support()));
    let mut basis = EchelonBasis::new(n);
    rows.into_iter().filter(|r| basis.insert(r.clone())).collect()
}

/// Greedily lower generator weights by adding rows of the same type, then
/// drop dependent rows. Row spaces and bare logicals are unchanged.
pub fn reduce_generator_weights(code: &CssSubsystemCode) -> CssSubsystemCode {
    let n = code.n();
    let gx = lighten(code.gauge_x().rows(), n);
    let gz = lighten(code.gauge_z().rows(), n);
    CssSubsystemCode::new(
        n,
        BinaryMatrix::from_rows(n, gx).expect("width n"),
        BinaryMatrix::from_rows(n, gz).expect("width n"),
        code.bare_x().to_vec(),
        code.bare_z().to_vec(),
    )
    .expect("shapes preserved")
}

/// Carve a weight-`2m` X check out of the X check on columns `i, i+1`,
/// covering rows `j..j+m`.
///
/// Applies X-type non-isometries on `((r,i),(r,i+1))` for each row of the
/// island, then Z-type ones on `((r,i),(r+1,i))` to merge them.
pub fn carve_x_stabilizer(
    code: CssSubsystemCode,
    lattice: Lattice,
    i: usize,
    j: usize,
    m: usize,
) -> Result<CssSubsystemCode, GrowError> {
    if lattice.len() != code.n() {
        return Err(GrowError::Geometry(format!(
            "{}x{} lattice does not match n = {}",
            lattice.rows,
            lattice.cols,
            code.n()
        )));
    }
    if m == 0 || i + 1 >= lattice.cols || j + m > lattice.rows {
        return Err(GrowError::Geometry(format!(
            "island at column {i}, row {j}, height {m} leaves the lattice"
        )));
    }
    let island = BitVector::from_indices(
        code.n(),
        (j..j + m).flat_map(|r| [lattice.index(r, i), lattice.index(r, i + 1)]),
    );
    if !code
        .gauge_x()
        .rows()
        .iter()
        .any(|row| row.and(&island) == island)
    {
        return Err(GrowError::Geometry(format!(
            "no X check covers columns {i}, {} on rows {j}..{}",
            i + 1,
            j + m
        )));
    }
    let mut code = code;
    for r in j..j + m {
        code = stabilizer_nonisometry(code, PauliType::X, lattice.index(r, i), lattice.index(r, i + 1))?;
    }
    for r in j..j + m - 1 {
        code = stabilizer_nonisometry(code, PauliType::Z, lattice.index(r, i), lattice.index(r + 1, i))?;
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stabilizer_bs(l: usize) -> (CssSubsystemCode, Lattice) {
        let lat = Lattice::new(l, l);
        let n = lat.len();
        let gz = (0..l - 1)
            .flat_map(|r| (0..l).map(move |c| (r, c)))
            .map(|(r, c)| vec![lat.index(r, c), lat.index(r + 1, c)]);
        let gx = (0..l - 1).map(|c| (0..l).flat_map(|r| [lat.index(r, c), lat.index(r, c + 1)]).collect::<Vec<_>>());
        let code = CssSubsystemCode::new(
            n,
            BinaryMatrix::from_supports(n, gx),
            BinaryMatrix::from_supports(n, gz),
            vec![BitVector::from_indices(n, (0..l).map(|r| lat.index(r, l - 1)))],
            vec![BitVector::from_indices(n, (0..l).map(|c| lat.index(0, c)))],
        )
        .unwrap();
        (code, lat)
    }

    #[test]
    fn measuring_a_check_pair_keeps_k() {
        let (code, _) = stabilizer_bs(3);
        assert_eq!(code.stabilizer_k(), 1);
        let out = stabilizer_nonisometry(code, PauliType::X, 0, 1).unwrap();
        assert!(out.is_abelian());
        assert_eq!(out.stabilizer_k(), 1);
        assert!(out.validate().is_valid());
    }

    #[test]
    fn measuring_a_logical_is_refused() {
        let n = 2;
        let code = CssSubsystemCode::new(
            n,
            BinaryMatrix::empty(n),
            BinaryMatrix::from_supports(n, [[0, 1]]),
            vec![BitVector::from_indices(n, [0, 1])],
            vec![BitVector::from_indices(n, [0])],
        )
        .unwrap();
        assert_eq!(
            stabilizer_nonisometry(code, PauliType::X, 0, 1).unwrap_err(),
            GrowError::LogicalMeasured { logical: 0 }
        );
    }

    #[test]
    fn lighten_preserves_row_space() {
        let n = 6;
        let m = BinaryMatrix::from_supports(n, [vec![0, 1, 2, 3, 4, 5], vec![4, 5], vec![0, 1, 4, 5]]);
        let code = CssSubsystemCode::new(n, m.clone(), BinaryMatrix::empty(n), vec![], vec![]).unwrap();
        let light = reduce_generator_weights(&code);
        assert!(light.gauge_x().same_rowspace(&m));
        assert_eq!(light.gauge_x().row_weights(), vec![2, 2, 2]);
    }

    #[test]
    fn carving_a_full_column_pair() {
        let (code, lat) = stabilizer_bs(3);
        let carved = carve_x_stabilizer(code.clone(), lat, 0, 0, 3).unwrap();
        assert!(carved.is_abelian());
        assert_eq!(carved.stabilizer_k(), 1);
        assert!(carved.gauge_x().same_rowspace(code.gauge_x()));
        assert!(carved.gauge_z().same_rowspace(code.gauge_z()));
    }

    #[test]
    fn carve_geometry_is_checked() {
        let (code, lat) = stabilizer_bs(3);
        assert!(matches!(
            carve_x_stabilizer(code.clone(), lat, 2, 0, 2),
            Err(GrowError::Geometry(_))
        ));
        assert!(matches!(
            carve_x_stabilizer(code, lat, 0, 2, 2),
            Err(GrowError::Geometry(_))
        ));
    }
}
