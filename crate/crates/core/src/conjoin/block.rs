use crate::gf2::{BitVector, PauliType, PauliWord};

use super::ConjoinError;

/// Result of looking a Pauli word up in a stabilizer group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Absent,
    /// `+word` is in the group.
    Positive,
    /// `-word` is in the group.
    Negative,
}

/// Echelon form of a set of commuting Pauli words, keyed on a subset of the
/// symplectic coordinates. Rows keep their full words so that products carry
/// exact signs.
pub(crate) struct WordEchelon {
    mask: BitVector,
    rows: Vec<(usize, BitVector, PauliWord)>,
}

impl WordEchelon {
    pub(crate) fn new(mask: BitVector) -> Self {
        Self {
            mask,
            rows: Vec::new(),
        }
    }

    fn key(&self, w: &PauliWord) -> BitVector {
        w.symplectic().and(&self.mask)
    }

    /// Reduce `key` against the rows, returning the residual key and the
    /// product of the rows used.
    fn reduce(&self, mut key: BitVector, n: usize) -> (BitVector, PauliWord) {
        let mut acc = PauliWord::identity(n);
        for (p, k, w) in &self.rows {
            if key.get(*p) {
                key.xor_assign(k);
                acc = acc.mul(w);
            }
        }
        (key, acc)
    }

    /// Insert a word; returns false if its key is already spanned.
    pub(crate) fn insert(&mut self, w: PauliWord) -> bool {
        let n = w.len();
        let (key, acc) = self.reduce(self.key(&w), n);
        let Some(p) = key.first_one() else {
            return false;
        };
        let word = w.mul(&acc);
        for (_, k, row) in self.rows.iter_mut() {
            if k.get(p) {
                k.xor_assign(&key);
                *row = row.mul(&word);
            }
        }
        self.rows.push((p, key, word));
        true
    }

    /// A product of inserted words agreeing with `target` on the mask.
    pub(crate) fn solve(&self, target: &PauliWord) -> Option<PauliWord> {
        let (key, acc) = self.reduce(self.key(target), target.len());
        key.is_zero().then_some(acc)
    }
}

/// A stabilizer state or map on `legs` qubits, given by commuting independent
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegoBlock {
    legs: usize,
    generators: Vec<PauliWord>,
    labels: Vec<String>,
}

impl LegoBlock {
    pub fn new(legs: usize, generators: Vec<PauliWord>) -> Result<Self, ConjoinError> {
        let block = Self {
            legs,
            generators,
            labels: vec![String::new(); legs],
        };
        block.validate()?;
        Ok(block)
    }

    /// The 0-leg block with no generators.
    pub fn empty() -> Self {
        Self {
            legs: 0,
            generators: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Parses generators written like `XXZI`, optionally with a leading sign.
    pub fn from_strs(words: &[&str]) -> Result<Self, ConjoinError> {
        let generators = words
            .iter()
            .map(|s| s.parse::<PauliWord>())
            .collect::<Result<Vec<_>, _>>()?;
        let legs = generators.first().map_or(0, PauliWord::len);
        Self::new(legs, generators)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ConjoinError> {
        if labels.len() != self.legs {
            return Err(ConjoinError::LabelCount {
                expected: self.legs,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn generators(&self) -> &[PauliWord] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn validate(&self) -> Result<(), ConjoinError> {
        if let Some(g) = self.generators.iter().find(|g| g.len() != self.legs) {
            return Err(ConjoinError::WordLength {
                expected: self.legs,
                found: g.len(),
            });
        }
        if self.generators.len() > self.legs {
            return Err(ConjoinError::TooManyGenerators {
                legs: self.legs,
                generators: self.generators.len(),
            });
        }
        for (i, a) in self.generators.iter().enumerate() {
            for (j, b) in self.generators.iter().enumerate().skip(i + 1) {
                if a.anticommutes(b) {
                    return Err(ConjoinError::Anticommuting { first: i, second: j });
                }
            }
        }
        let mut ech = WordEchelon::new(BitVector::ones(2 * self.legs));
        for (i, g) in self.generators.iter().enumerate() {
            if !ech.insert(g.clone()) {
                return Err(ConjoinError::Dependent { index: i });
            }
        }
        Ok(())
    }

    fn echelon(&self) -> WordEchelon {
        let mut ech = WordEchelon::new(BitVector::ones(2 * self.legs));
        for g in &self.generators {
            ech.insert(g.clone());
        }
        ech
    }

    /// Whether `±word` belongs to the group, and with which sign.
    pub fn membership(&self, word: &PauliWord) -> Membership {
        if word.len() != self.legs || self.generators.iter().any(|g| g.anticommutes(word)) {
            return Membership::Absent;
        }
        match self.echelon().solve(word) {
            None => Membership::Absent,
            Some(p) if p.is_negative() == word.is_negative() => Membership::Positive,
            Some(_) => Membership::Negative,
        }
    }

    /// Same group, signs ignored.
    pub fn same_row_space(&self, other: &Self) -> bool {
        if self.legs != other.legs || self.generators.len() != other.generators.len() {
            return false;
        }
        let ech = self.echelon();
        other.generators.iter().all(|g| ech.solve(g).is_some())
    }

    /// Same group including signs.
    pub fn same_group(&self, other: &Self) -> bool {
        self.legs == other.legs
            && self.generators.len() == other.generators.len()
            && other
                .generators
                .iter()
                .all(|g| self.membership(g) == Membership::Positive)
    }

    /// Whether the group has a generating set of pure X and pure Z words.
    pub fn is_css(&self) -> bool {
        let proj = |kind: PauliType| {
            let mut basis = crate::gf2::EchelonBasis::new(self.legs);
            for g in &self.generators {
                basis.insert(match kind {
                    PauliType::X => g.x().clone(),
                    PauliType::Z => g.z().clone(),
                });
            }
            basis.rank()
        };
        proj(PauliType::X) + proj(PauliType::Z) == self.generators.len()
    }

    /// Block whose leg `i` is this block's leg `order[i]`.
    pub fn permute_legs(&self, order: &[usize]) -> Result<Self, ConjoinError> {
        let mut seen = vec![false; self.legs];
        if order.len() != self.legs {
            return Err(ConjoinError::BadPermutation);
        }
        for &o in order {
            if o >= self.legs || std::mem::replace(&mut seen[o], true) {
                return Err(ConjoinError::BadPermutation);
            }
        }
        Ok(Self {
            legs: self.legs,
            generators: self.generators.iter().map(|g| g.select(order)).collect(),
            labels: order.iter().map(|&o| self.labels[o].clone()).collect(),
        })
    }
}

/// Legs concatenated, generators padded with identity.
pub fn tensor_product(a: &LegoBlock, b: &LegoBlock) -> LegoBlock {
    let id_a = PauliWord::identity(a.legs);
    let id_b = PauliWord::identity(b.legs);
    let generators = a
        .generators
        .iter()
        .map(|g| g.tensor(&id_b))
        .chain(b.generators.iter().map(|g| id_a.tensor(g)))
        .collect();
    LegoBlock {
        legs: a.legs + b.legs,
        generators,
        labels: a.labels.iter().chain(&b.labels).cloned().collect(),
    }
}

/// Measure `word` with outcome +1, updating generators in place.
fn enforce(gens: &mut Vec<PauliWord>, word: PauliWord) -> Result<(), Membership> {
    let anti: Vec<usize> = (0..gens.len())
        .filter(|&i| gens[i].anticommutes(&word))
        .collect();
    if let Some((&pivot, rest)) = anti.split_first() {
        for &i in rest {
            gens[i] = gens[i].mul(&gens[pivot]);
        }
        gens[pivot] = word;
        return Ok(());
    }
    let mut ech = WordEchelon::new(BitVector::ones(2 * word.len()));
    for g in gens.iter() {
        ech.insert(g.clone());
    }
    match ech.solve(&word) {
        None => {
            gens.push(word);
            Ok(())
        }
        Some(p) if p.is_negative() == word.is_negative() => Ok(()),
        Some(_) => Err(Membership::Negative),
    }
}

/// Glue leg `a` to leg `b` of the same block.
///
/// Enforces `+X_aX_b` then `+Z_aZ_b`, keeps the part of the group acting
/// trivially on both legs and deletes them.
pub fn self_trace(block: &LegoBlock, a: usize, b: usize) -> Result<LegoBlock, ConjoinError> {
    let legs = block.legs;
    for leg in [a, b] {
        if leg >= legs {
            return Err(ConjoinError::LegOutOfRange { leg, legs });
        }
    }
    if a == b {
        return Err(ConjoinError::SameLeg(a));
    }
    let pair = BitVector::from_indices(legs, [a, b]);
    let xx = PauliWord::x_type(pair.clone());
    let zz = PauliWord::z_type(pair);
    let mut gens = block.generators.clone();
    for w in [xx.clone(), zz.clone()] {
        enforce(&mut gens, w).map_err(|_| ConjoinError::NullContraction { a, b })?;
    }
    let mut kept = WordEchelon::new(BitVector::ones(2 * (legs - 2)));
    let mut out = Vec::new();
    for g in gens {
        let mut g = g;
        if g.x().get(a) {
            g = g.mul(&xx);
        }
        if g.z().get(a) {
            g = g.mul(&zz);
        }
        debug_assert!(g.get(a) == crate::gf2::Pauli::I && g.get(b) == crate::gf2::Pauli::I);
        let reduced = g.remove_positions(&[a, b]);
        if kept.insert(reduced.clone()) {
            out.push(reduced);
        }
    }
    let labels = block
        .labels
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != a && *i != b)
        .map(|(_, l)| l.clone())
        .collect();
    Ok(LegoBlock {
        legs: legs - 2,
        generators: out,
        labels,
    })
}
