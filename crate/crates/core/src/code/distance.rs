//! Exact minimum-weight logical search by meet-in-the-middle over syndromes.

use std::collections::HashMap;

use super::CssSubsystemCode;
use crate::gf2::{BinaryMatrix, BitVector, PauliType};

/// A minimum-weight logical operator found by the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalWitness {
    pub weight: usize,
    pub support: Vec<usize>,
}

/// Dressed distance of the given type: the least weight of an operator that
/// commutes with the stabilizer group but is not in the gauge group.
///
/// Returns `None` if no such operator has weight at most `w_max`.
pub fn dressed_distance(code: &CssSubsystemCode, kind: PauliType, w_max: usize) -> Option<usize> {
    let center = code.stabilizer_center();
    min_weight_outside(center.of(kind.dual()), code.gauge(kind), w_max).map(|w| w.weight)
}

/// Bare distance: like [`dressed_distance`] but the operator must commute
/// with every gauge generator.
pub fn bare_distance(code: &CssSubsystemCode, kind: PauliType, w_max: usize) -> Option<usize> {
    min_weight_outside(code.gauge(kind.dual()), code.gauge(kind), w_max).map(|w| w.weight)
}

/// Least-weight `v` with `checks · v = 0` and `v ∉ rowspace(excluded)`.
///
/// Weights are tried in increasing order. For weight `w` all `⌊w/2⌋`-subsets
/// are tabulated by syndrome; a logical of weight `w` exists exactly when two
/// halves with equal check syndrome differ on the kernel of `excluded`.
pub fn min_weight_outside(
    checks: &BinaryMatrix,
    excluded: &BinaryMatrix,
    w_max: usize,
) -> Option<LogicalWitness> {
    let n = checks.ncols();
    assert_eq!(n, excluded.ncols());
    // v ∉ rowspace(excluded) iff some kernel vector of `excluded` detects v.
    let detect = excluded.kernel();
    if detect.nrows() == 0 {
        return None;
    }
    let layout = Layout::new(checks, &detect);
    let w_max = w_max.min(n);
    let mut table: Option<(usize, Table)> = None;
    for w in 1..=w_max {
        let h = w / 2;
        if w % 2 == 0 {
            match layout.build_table(h) {
                Ok(t) => table = Some((h, t)),
                Err((a, b)) => return Some(witness(&a, &b)),
            }
        } else {
            if table.as_ref().map(|(th, _)| *th) != Some(h) {
                match layout.build_table(h) {
                    Ok(t) => table = Some((h, t)),
                    Err((a, b)) => return Some(witness(&a, &b)),
                }
            }
            let (_, t) = table.as_ref().expect("table built above");
            if let Some((a, b)) = layout.query(t, h + 1) {
                return Some(witness(&a, &b));
            }
        }
    }
    None
}

fn witness(a: &[u32], b: &[u32]) -> LogicalWitness {
    let mut support: Vec<usize> = a
        .iter()
        .filter(|q| !b.contains(q))
        .chain(b.iter().filter(|q| !a.contains(q)))
        .map(|&q| q as usize)
        .collect();
    support.sort_unstable();
    LogicalWitness {
        weight: support.len(),
        support,
    }
}

struct Bucket {
    detect: Box<[u64]>,
    subset: Box<[u32]>,
}

type Table = HashMap<Box<[u64]>, Bucket>;

/// Per-qubit syndrome columns, check words first, then detector words.
struct Layout {
    n: usize,
    check_words: usize,
    cols: Vec<Box<[u64]>>,
}

impl Layout {
    fn new(checks: &BinaryMatrix, detect: &BinaryMatrix) -> Self {
        let ct = checks.transpose();
        let dt = detect.transpose();
        let check_words = checks.nrows().div_ceil(64);
        let cols = (0..checks.ncols())
            .map(|q| {
                let mut w = ct.row(q).words().to_vec();
                w.resize(check_words, 0);
                w.extend_from_slice(dt.row(q).words());
                w.into_boxed_slice()
            })
            .collect();
        Self {
            n: checks.ncols(),
            check_words,
            cols,
        }
    }

    /// Visit every `size`-subset with its accumulated syndrome; stop early when
    /// `f` returns `Some`.
    fn for_each_subset<T>(
        &self,
        size: usize,
        mut f: impl FnMut(&[u64], &[u32]) -> Option<T>,
    ) -> Option<T> {
        let width = self.cols.first().map_or(0, |c| c.len());
        if size > self.n {
            return None;
        }
        if size == 0 {
            return f(&vec![0; width], &[]);
        }
        let mut acc = vec![vec![0u64; width]; size + 1];
        let mut subset: Vec<u32> = Vec::with_capacity(size);
        let mut next = 0usize;
        loop {
            if subset.len() == size {
                if let Some(t) = f(&acc[size], &subset) {
                    return Some(t);
                }
            } else if next + (size - subset.len()) <= self.n {
                let d = subset.len();
                let (lo, hi) = acc.split_at_mut(d + 1);
                for ((o, a), c) in hi[0].iter_mut().zip(&lo[d]).zip(self.cols[next].iter()) {
                    *o = a ^ c;
                }
                subset.push(next as u32);
                next += 1;
                continue;
            }
            // backtrack
            next = subset.pop()? as usize + 1;
        }
    }

    /// Tabulate `h`-subsets by check syndrome. Two subsets that agree on the
    /// checks but differ on the detectors give a logical of weight `2h`.
    fn build_table(&self, h: usize) -> Result<Table, (Vec<u32>, Vec<u32>)> {
        let mut table = Table::new();
        let cw = self.check_words;
        let hit = self.for_each_subset(h, |syn, subset| {
            let (key, det) = syn.split_at(cw);
            match table.get(key) {
                Some(b) if *b.detect != *det => Some((b.subset.to_vec(), subset.to_vec())),
                Some(_) => None,
                None => {
                    table.insert(
                        key.into(),
                        Bucket {
                            detect: det.into(),
                            subset: subset.into(),
                        },
                    );
                    None
                }
            }
        });
        match hit {
            Some(pair) => Err(pair),
            None => Ok(table),
        }
    }

    /// Look up every `size`-subset in a table of `size - 1`-subsets.
    fn query(&self, table: &Table, size: usize) -> Option<(Vec<u32>, Vec<u32>)> {
        let cw = self.check_words;
        self.for_each_subset(size, |syn, subset| {
            let (key, det) = syn.split_at(cw);
            let b = table.get(key)?;
            // Overlapping halves would give a lighter word, already ruled out.
            if *b.detect != *det && b.subset.iter().all(|q| !subset.contains(q)) {
                Some((b.subset.to_vec(), subset.to_vec()))
            } else {
                None
            }
        })
    }
}

impl LogicalWitness {
    pub fn to_vector(&self, n: usize) -> BitVector {
        BitVector::from_indices(n, self.support.iter().copied())
    }
}
