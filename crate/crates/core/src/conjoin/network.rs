use std::collections::HashMap;

use super::block::{self_trace, tensor_product, LegoBlock};
use super::ConjoinError;

/// A leg of a particular block in a network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LegRef {
    pub block: usize,
    pub leg: usize,
}

impl LegRef {
    pub fn new(block: usize, leg: usize) -> Self {
        Self { block, leg }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjoinNetwork {
    pub blocks: Vec<LegoBlock>,
    pub contractions: Vec<(LegRef, LegRef)>,
    pub open_legs: Vec<LegRef>,
}

impl ConjoinNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a block and returns its index.
    pub fn add_block(&mut self, block: LegoBlock) -> usize {
        self.blocks.push(block);
        self.blocks.len() - 1
    }

    pub fn contract(&mut self, a: LegRef, b: LegRef) {
        self.contractions.push((a, b));
    }

    pub fn open(&mut self, leg: LegRef) {
        self.open_legs.push(leg);
    }

    /// Every leg is used exactly once, either in a contraction or as an open leg.
    pub fn validate(&self) -> Result<(), ConjoinError> {
        let mut used: HashMap<LegRef, ()> = HashMap::new();
        let all = self
            .contractions
            .iter()
            .flat_map(|(a, b)| [*a, *b])
            .chain(self.open_legs.iter().copied());
        for r in all {
            let block = self
                .blocks
                .get(r.block)
                .ok_or(ConjoinError::UnknownBlock(r.block))?;
            if r.leg >= block.legs() {
                return Err(ConjoinError::LegOutOfRange {
                    leg: r.leg,
                    legs: block.legs(),
                });
            }
            if used.insert(r, ()).is_some() {
                return Err(ConjoinError::LegReused {
                    block: r.block,
                    leg: r.leg,
                });
            }
        }
        for (b, block) in self.blocks.iter().enumerate() {
            if let Some(leg) = (0..block.legs()).find(|&l| !used.contains_key(&LegRef::new(b, l))) {
                return Err(ConjoinError::DanglingLeg { block: b, leg });
            }
        }
        Ok(())
    }
}

/// Contract the network in listed order. Blocks are tensored in when first
/// touched; untouched blocks are appended at the end. The result's legs
/// follow `open_legs`.
pub fn contract_network(net: &ConjoinNetwork) -> Result<LegoBlock, ConjoinError> {
    net.validate()?;
    let mut merged = LegoBlock::empty();
    // position of each (block, leg) in `merged`
    let mut pos: HashMap<LegRef, usize> = HashMap::new();
    let mut included = vec![false; net.blocks.len()];
    let mut include = |b: usize, merged: &mut LegoBlock, pos: &mut HashMap<LegRef, usize>| {
        if std::mem::replace(&mut included[b], true) {
            return;
        }
        let offset = merged.legs();
        for l in 0..net.blocks[b].legs() {
            pos.insert(LegRef::new(b, l), offset + l);
        }
        *merged = tensor_product(merged, &net.blocks[b]);
    };
    for (a, b) in &net.contractions {
        include(a.block, &mut merged, &mut pos);
        include(b.block, &mut merged, &mut pos);
        let pa = pos.remove(a).expect("leg placed");
        let pb = pos.remove(b).expect("leg placed");
        merged = self_trace(&merged, pa, pb)?;
        for p in pos.values_mut() {
            *p -= (*p > pa) as usize + (*p > pb) as usize;
        }
    }
    for b in 0..net.blocks.len() {
        include(b, &mut merged, &mut pos);
    }
    let order: Vec<usize> = net.open_legs.iter().map(|r| pos[r]).collect();
    merged.permute_legs(&order)
}
