//! The three check-matrix moves of one growth step: concatenation by
//! two-qubit repetition codes, non-isometric weight reduction, and check
//! shifting.

use serde::{Deserialize, Serialize};

use crate::code::CssSubsystemCode;
use crate::gf2::{BinaryMatrix, BitVector, PauliType};

use super::GrowError;

/// What [`concatenate_support`] did, needed by the follow-up moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcatRecord {
    /// Type whose distance is being grown.
    pub kind: PauliType,
    /// Qubits that received a partner, ascending. Partner of `support[a]` is `n_before + a`.
    pub support: Vec<usize>,
    pub n_before: usize,
    /// Rows of `gauge(kind)` before the move.
    pub original_rows: usize,
    /// Rows of `gauge(kind.dual())` before the move; the partner checks follow them.
    pub original_dual_rows: usize,
    /// Whether every `kind` gauge row met the support evenly beforehand.
    pub even_overlap: bool,
    /// Per logical, how many qubits its `kind` bare representative gained.
    pub bare_growth: Vec<usize>,
}

fn matrix(cols: usize, rows: Vec<BitVector>) -> BinaryMatrix {
    BinaryMatrix::from_rows(cols, rows).expect("rows built with matching width")
}

/// Run `f` on the X-oriented view of the code, swapping back afterwards.
pub(crate) fn oriented<T>(
    code: CssSubsystemCode,
    kind: PauliType,
    f: impl FnOnce(CssSubsystemCode) -> Result<(CssSubsystemCode, T), GrowError>,
) -> Result<(CssSubsystemCode, T), GrowError> {
    match kind {
        PauliType::X => f(code),
        PauliType::Z => f(code.swap_xz()).map(|(c, t)| (c.swap_xz(), t)),
    }
}

/// Concatenate every qubit of `support` with a two-qubit repetition code that
/// protects against errors of type `kind`.
///
/// In the X orientation: each X gauge row is extended by its restriction to
/// the support, a `ZZ` check joins each support qubit to its partner, bare X
/// logicals are extended like gauge rows and bare Z logicals are zero-padded.
pub fn concatenate_on(
    code: CssSubsystemCode,
    support: &[usize],
    kind: PauliType,
) -> Result<(CssSubsystemCode, ConcatRecord), GrowError> {
    let mut support = support.to_vec();
    support.sort_unstable();
    support.dedup();
    if support.is_empty() {
        return Err(GrowError::EmptySupport);
    }
    if let Some(&q) = support.iter().find(|&&q| q >= code.n()) {
        return Err(GrowError::QubitOutOfRange { qubit: q, n: code.n() });
    }
    oriented(code, kind, |code| {
        let n = code.n();
        let s = support.len();
        let m = n + s;
        let even_overlap = code
            .gauge_x()
            .rows()
            .iter()
            .all(|r| r.select(&support).weight() % 2 == 0);
        let bare_growth = code
            .bare_x()
            .iter()
            .map(|v| v.select(&support).weight())
            .collect();
        let original_rows = code.gauge_x().nrows();
        let original_dual_rows = code.gauge_z().nrows();
        let (gx, gz, bx, bz) = code.into_parts();
        let extend = |v: &BitVector| v.concat(&v.select(&support));
        let gx = gx.rows().iter().map(extend).collect();
        let mut gz: Vec<BitVector> = gz.rows().iter().map(|r| r.resized(m)).collect();
        gz.extend(
            support
                .iter()
                .enumerate()
                .map(|(a, &q)| BitVector::from_indices(m, [q, n + a])),
        );
        let bx = bx.iter().map(extend).collect();
        let bz = bz.iter().map(|v| v.resized(m)).collect();
        let grown = CssSubsystemCode::new(m, matrix(m, gx), matrix(m, gz), bx, bz)?;
        Ok((
            grown,
            ConcatRecord {
                kind,
                support: support.clone(),
                n_before: n,
                original_rows,
                original_dual_rows,
                even_overlap,
                bare_growth,
            },
        ))
    })
}

/// Concatenate on the support of the opposite-type bare logical `j`, which
/// grows the `kind` distance of that logical.
pub fn concatenate_support(
    code: CssSubsystemCode,
    j: usize,
    kind: PauliType,
) -> Result<(CssSubsystemCode, ConcatRecord), GrowError> {
    let k = code.k();
    let rep = code
        .bare(kind.dual())
        .get(j)
        .ok_or(GrowError::LogicalIndex { index: j, k })?;
    let support = rep.support();
    if support.is_empty() {
        return Err(GrowError::EmptySupport);
    }
    concatenate_on(code, &support, kind)
}

/// Split overweight `kind` checks after a concatenation.
///
/// For each original row above `cap`, the first two set positions of its new
/// section form a pair; the pair is removed from every original row holding
/// both and added as a weight-2 gauge row. Returns the pairs in order.
pub fn nonisometric_reduce(
    code: CssSubsystemCode,
    record: &ConcatRecord,
    cap: usize,
) -> Result<(CssSubsystemCode, Vec<(usize, usize)>), GrowError> {
    if cap < 2 {
        return Err(GrowError::InvalidConfig(format!("weight cap {cap} is below 2")));
    }
    oriented(code, record.kind, |code| {
        let n = code.n();
        let section = record.n_before..n;
        let (gx, gz, bx, bz) = code.into_parts();
        let mut rows = gx.into_rows();
        let mut pairs = Vec::new();
        for i in 0..record.original_rows {
            while rows[i].weight() > cap {
                let fresh: Vec<usize> = rows[i]
                    .iter_ones()
                    .filter(|q| section.contains(q))
                    .take(2)
                    .collect();
                let [p1, p2] = fresh[..] else {
                    return Err(GrowError::Unreducible {
                        row: i,
                        weight: rows[i].weight(),
                        cap,
                    });
                };
                for r in rows.iter_mut().take(record.original_rows) {
                    if r.get(p1) && r.get(p2) {
                        r.set(p1, false);
                        r.set(p2, false);
                    }
                }
                rows.push(BitVector::from_indices(n, [p1, p2]));
                pairs.push((p1, p2));
            }
        }
        let code = CssSubsystemCode::new(n, matrix(n, rows), gz, bx, bz)?;
        Ok((code, pairs))
    })
}

/// Lower the opposite-type degree of support qubits that exceed `q_cap`.
///
/// For an overweight support qubit, its partner check is added to the
/// lowest-index original check containing it, moving that check onto the
/// partner qubit. At most `shifts` checks move per qubit. Returns the
/// `(qubit, row)` pairs that moved.
pub fn shift_checks(
    code: CssSubsystemCode,
    record: &ConcatRecord,
    q_cap: usize,
    shifts: usize,
) -> Result<(CssSubsystemCode, Vec<(usize, usize)>), GrowError> {
    oriented(code, record.kind, |code| {
        let n = code.n();
        let (gx, gz, bx, bz) = code.into_parts();
        let mut rows = gz.into_rows();
        let mut moved = Vec::new();
        for (a, &q) in record.support.iter().enumerate() {
            let partner = rows[record.original_dual_rows + a].clone();
            for _ in 0..shifts {
                let degree = rows.iter().filter(|r| r.get(q)).count();
                if degree <= q_cap {
                    break;
                }
                let Some(target) = (0..record.original_dual_rows).find(|&r| rows[r].get(q)) else {
                    break;
                };
                rows[target].xor_assign(&partner);
                moved.push((q, target));
            }
        }
        let code = CssSubsystemCode::new(n, gx, matrix(n, rows), bx, bz)?;
        Ok((code, moved))
    })
}
