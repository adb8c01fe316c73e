mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::StateVector;
use seedgrow::conjoin::{
    contract_network, self_trace, spider, tensor_product, ConjoinError, ConjoinNetwork, LegRef, LegoBlock,
};
use seedgrow::css_network::choi_state;
use seedgrow::gf2::PauliType;

fn random_state_block(rng: &mut impl Rng) -> LegoBlock {
    let legs = rng.gen_range(2..=3);
    StateVector::random(rng, legs, 12).stabilizer_block()
}

/// Apply random row operations `g_i <- g_i * g_j` to the generators.
fn scramble(block: &LegoBlock, rng: &mut impl Rng) -> LegoBlock {
    let mut gens = block.generators().to_vec();
    if gens.len() > 1 {
        for _ in 0..3 * gens.len() {
            let i = rng.gen_range(0..gens.len());
            let j = (i + rng.gen_range(1..gens.len())) % gens.len();
            gens[i] = gens[i].mul(&gens[j]);
        }
    }
    gens.shuffle(rng);
    LegoBlock::new(block.legs(), gens).expect("row operations keep a valid generating set")
}

/// Glue a random subset of leg pairs, leaving at least one leg open.
fn random_network(blocks: Vec<LegoBlock>, rng: &mut impl Rng) -> ConjoinNetwork {
    let mut net = ConjoinNetwork::new();
    let mut legs = Vec::new();
    for b in blocks {
        let legs_here = b.legs();
        let idx = net.add_block(b);
        legs.extend((0..legs_here).map(|l| LegRef::new(idx, l)));
    }
    legs.shuffle(rng);
    let pairs = rng.gen_range(0..=(legs.len() - 1) / 2);
    for p in 0..pairs {
        net.contract(legs[2 * p], legs[2 * p + 1]);
    }
    for &leg in &legs[2 * pairs..] {
        net.open(leg);
    }
    net
}

fn same_outcome(a: &Result<LegoBlock, ConjoinError>, b: &Result<LegoBlock, ConjoinError>) -> bool {
    match (a, b) {
        (Ok(a), Ok(b)) => a.same_group(b),
        (Err(ConjoinError::NullContraction { .. }), Err(ConjoinError::NullContraction { .. })) => true,
        _ => false,
    }
}

#[test]
fn contraction_order_does_not_matter() {
    let mut rng = StdRng::seed_from_u64(0x0de5);
    let mut nonnull = 0;
    for trial in 0..20 {
        let count = rng.gen_range(2..=3);
        let blocks = (0..count).map(|_| random_state_block(&mut rng)).collect();
        let net = random_network(blocks, &mut rng);
        let mut other = net.clone();
        other.contractions.reverse();
        for pair in &mut other.contractions {
            if rng.gen_bool(0.5) {
                *pair = (pair.1, pair.0);
            }
        }
        let (a, b) = (contract_network(&net), contract_network(&other));
        assert!(same_outcome(&a, &b), "trial {trial}: {a:?} vs {b:?}");
        nonnull += a.is_ok() as usize;
    }
    assert!(nonnull >= 10, "only {nonnull} networks survived contraction");
}

#[test]
fn fused_spiders_are_spiders() {
    for kind in [PauliType::X, PauliType::Z] {
        for a in 2..=5 {
            for b in 2..=5 {
                let pair = tensor_product(&spider(a, kind), &spider(b, kind));
                let fused = self_trace(&pair, a - 1, a).unwrap();
                assert!(fused.same_row_space(&spider(a + b - 2, kind)), "{kind} {a}+{b}");
                assert!(fused.same_group(&spider(a + b - 2, kind)), "{kind} {a}+{b} signs");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_ignores_the_generating_set(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let legs = rng.gen_range(2..=5);
        let block = StateVector::random(&mut rng, legs, 20).stabilizer_block();
        let other = scramble(&block, &mut rng);
        prop_assert!(other.same_group(&block));
        let a = rng.gen_range(0..legs);
        let b = (a + rng.gen_range(1..legs)) % legs;
        let (x, y) = (self_trace(&block, a, b), self_trace(&other, a, b));
        prop_assert!(same_outcome(&x, &y), "{:?} vs {:?}", x, y);
    }

    #[test]
    fn css_blocks_contract_to_css(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let count = rng.gen_range(2..=3);
        let blocks: Vec<LegoBlock> = (0..count)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    let kind = if rng.gen_bool(0.5) { PauliType::X } else { PauliType::Z };
                    spider(rng.gen_range(1..=4), kind)
                } else {
                    let css = common::random_css(&mut rng, 4);
                    let gens = choi_state(&css);
                    LegoBlock::new(css.n() + css.k(), gens).unwrap()
                }
            })
            .collect();
        prop_assert!(blocks.iter().all(LegoBlock::is_css));
        let net = random_network(blocks, &mut rng);
        match contract_network(&net) {
            Ok(block) => prop_assert!(block.is_css()),
            Err(ConjoinError::NullContraction { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}
