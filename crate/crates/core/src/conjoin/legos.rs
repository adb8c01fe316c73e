use crate::gf2::{BitVector, Pauli, PauliType, PauliWord};

use super::block::{LegoBlock, WordEchelon};
use super::ConjoinError;

/// Index of the gauge leg on the non-isometric legos.
pub const GAUGE_LEG: usize = 4;

/// Spider of the given colour. A Z-spider is stabilized by `X^⊗v` and
/// `Z_i Z_{i+1}`; an X-spider has the colours swapped.
pub fn spider(valence: usize, kind: PauliType) -> LegoBlock {
    assert!(valence >= 1, "spider valence must be at least 1");
    let all = PauliWord::pure(kind.dual(), BitVector::ones(valence));
    let mut gens = vec![all];
    gens.extend(
        (0..valence - 1).map(|i| PauliWord::pure(kind, BitVector::from_indices(valence, [i, i + 1]))),
    );
    LegoBlock::new(valence, gens).expect("spider generators commute")
}

/// Z-non-isometric lego: stabilizer `⟨XXXX, ZZII, IIZZ⟩` on legs 0..4 with
/// the logical pair `X̄ = XXII`, `Z̄ = ZIZI` attached to gauge leg 4.
pub fn zn_lego() -> LegoBlock {
    LegoBlock::from_strs(&["XXXXI", "ZZIII", "IIZZI", "XXIIX", "ZIZIZ"])
        .expect("ZN generators commute")
}

/// X-non-isometric lego, the colour swap of [`zn_lego`].
pub fn xn_lego() -> LegoBlock {
    LegoBlock::from_strs(&["ZZZZI", "XXIII", "IIXXI", "ZZIIZ", "XIXIX"])
        .expect("XN generators commute")
}

/// Push an operator through a block.
///
/// `input` fixes the Pauli on some legs; every leg not listed in `input` or
/// `outputs` must carry identity. Returns a group element matching those
/// constraints, or an error if none exists.
pub fn push_through(
    block: &LegoBlock,
    input: &[(usize, Pauli)],
    outputs: &[usize],
) -> Result<PauliWord, ConjoinError> {
    let legs = block.legs();
    let mut target = PauliWord::identity(legs);
    for &(leg, p) in input {
        if leg >= legs {
            return Err(ConjoinError::LegOutOfRange { leg, legs });
        }
        target.set(leg, p);
    }
    let mut mask = BitVector::ones(2 * legs);
    for &leg in outputs {
        if leg >= legs {
            return Err(ConjoinError::LegOutOfRange { leg, legs });
        }
        mask.set(leg, false);
        mask.set(legs + leg, false);
    }
    let mut ech = WordEchelon::new(mask);
    for g in block.generators() {
        ech.insert(g.clone());
    }
    ech.solve(&target).ok_or(ConjoinError::NotPushable)
}

/// A block with named logical operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalBlock {
    pub block: LegoBlock,
    pub logical_x: Vec<PauliWord>,
    pub logical_z: Vec<PauliWord>,
}

/// The `[[6,4,2]]` iceberg code: stabilizers `X^⊗6`, `Z^⊗6` and logicals
/// `X̄_j = X_0 X_j`, `Z̄_j = Z_j Z_5` for `j = 1..=4`.
pub fn iceberg_642() -> LogicalBlock {
    let block = LegoBlock::new(
        6,
        vec![
            PauliWord::x_type(BitVector::ones(6)),
            PauliWord::z_type(BitVector::ones(6)),
        ],
    )
    .expect("iceberg stabilizers commute");
    let logical_x = (1..=4)
        .map(|j| PauliWord::x_type(BitVector::from_indices(6, [0, j])))
        .collect();
    let logical_z = (1..=4)
        .map(|j| PauliWord::z_type(BitVector::from_indices(6, [j, 5])))
        .collect();
    LogicalBlock {
        block,
        logical_x,
        logical_z,
    }
}
