//! End-to-end acceptance suite. Prints one line per criterion and exits
//! nonzero if any of them fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seedgrow::catalog::{
    bacon_shor_2d, bacon_shor_3d, compass_fig4, rotated_surface, seed_412, seed_422, steane, tanner_isomorphic,
    COMPASS_ISLANDS,
};
use seedgrow::code::{dressed_distance, CssSubsystemCode};
use seedgrow::conjoin::{self_trace, ConjoinError};
use seedgrow::css_network::{verify_universality_with, CssCodeInput, Granularity};
use seedgrow::gf2::{BitVector, PauliType};
use seedgrow::grow::{
    concatenate_support, grow, grow_iteration, reduce_generator_weights, scaling_envelope, stabilizer_nonisometry,
    GrowthConfig, GrowthLog, Lattice, Phase,
};

use common::{random_css, random_seed, StateVector};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Growth runs whose logs feed the log invariant checks.
struct Run {
    label: String,
    seed: CssSubsystemCode,
    cfg: GrowthConfig,
    log: GrowthLog,
}

fn distance_growth(runs: &mut Vec<Run>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut grown_n = Vec::new();
    for t in 0..20 {
        let s = random_seed(&mut rng);
        let (c, log) = grow_iteration(&s.code, &s.cfg).map_err(|e| format!("seed {t}: {e}"))?;
        ensure!(c.k() == s.code.k(), "seed {t}: k changed from {} to {}", s.code.k(), c.k());
        ensure!(s.cfg.admits(&c.weight_profile()), "seed {t}: profile {:?} outside caps", c.weight_profile());
        // no nontrivial dressed logical of weight ≤ d
        ensure!(
            dressed_distance(&c, PauliType::X, s.d_x).is_none(),
            "seed {t}: X distance did not grow past {}",
            s.d_x
        );
        ensure!(
            dressed_distance(&c, PauliType::Z, s.d_z).is_none(),
            "seed {t}: Z distance did not grow past {}",
            s.d_z
        );
        grown_n.push(format!("{}->{}", s.code.n(), c.n()));
        runs.push(Run {
            label: format!("random seed {t}"),
            seed: s.code,
            cfg: s.cfg,
            log,
        });
    }
    Ok(format!("20 seeds, n {}", grown_n.join(" ")))
}

fn bacon_shor_growth(runs: &mut Vec<Run>) -> Outcome {
    let seed = bacon_shor_2d(2, 2).unwrap();
    for i in 1..=3 {
        let cfg = GrowthConfig {
            iterations: i,
            ..GrowthConfig::with_caps(2, 2, 2, 2)
        };
        let (c, log) = grow(&seed, &cfg).map_err(|e| e.to_string())?;
        let l = 2 + i;
        ensure!(tanner_isomorphic(&c, &bacon_shor_2d(l, l).unwrap()), "i = {i}: not the {l}x{l} Bacon-Shor code");
        ensure!(log.final_bounds().lower == l, "i = {i}: lower bound {}", log.final_bounds().lower);
        if i <= 2 {
            for kind in [PauliType::X, PauliType::Z] {
                let d = dressed_distance(&c, kind, l);
                ensure!(d == Some(l), "i = {i}: {kind} distance {d:?}");
            }
        }
        runs.push(Run {
            label: format!("bacon-shor i={i}"),
            seed: seed.clone(),
            cfg,
            log,
        });
    }
    Ok("3x3, 4x4, 5x5 up to relabelling; oracle d = 3, 4".into())
}

fn bacon_shor_3d_growth(runs: &mut Vec<Run>) -> Outcome {
    let seed = bacon_shor_3d(2, 2, 2).unwrap();
    let cfg = GrowthConfig {
        iterations: 2,
        ..GrowthConfig::with_caps(2, 2, 2, 2)
    };
    let (c, log) = grow(&seed, &cfg).map_err(|e| e.to_string())?;
    let lower = log.final_bounds().lower;
    ensure!(lower >= 4, "lower bound {lower}");
    let dz = dressed_distance(&c, PauliType::Z, 4);
    let dx = dressed_distance(&c, PauliType::X, 6);
    ensure!(dz == Some(4) && dx == Some(6), "d_Z = {dz:?}, d_X = {dx:?}");
    let n = c.n();
    runs.push(Run {
        label: "3d bacon-shor".into(),
        seed,
        cfg,
        log,
    });
    Ok(format!("n = {n}, lower bound {lower}, d_Z = 4, d_X = 6"))
}

fn seed_422_run(runs: &mut Vec<Run>) -> Outcome {
    let seed = seed_422();
    let cfg = GrowthConfig {
        iterations: 10,
        ..GrowthConfig::with_caps(4, 4, 5, 4)
    };
    let (c, log) = grow(&seed, &cfg).map_err(|e| e.to_string())?;
    let b = log.final_bounds().clone();
    ensure!(b.lower == 12, "lower bound {}", b.lower);
    ensure!(c.k() == 2, "k = {}", c.k());
    let p = c.weight_profile();
    ensure!(cfg.admits(&p), "profile {p:?}");
    ensure!(c.validate().is_valid(), "grown code fails validation");
    let n = c.n();
    ensure!((547..=821).contains(&n), "n = {n} outside 684 ± 20%");
    let rounds = log.rounds() as u64;
    let c_log = log.max_bare_growth() as u64;
    let envelope = scaling_envelope(2, rounds, c_log);
    let added = log.qubits_added() as u64;
    ensure!(added <= envelope, "{added} qubits added, envelope {envelope}");
    let upper = (b.upper(PauliType::X), b.upper(PauliType::Z));
    runs.push(Run {
        label: "[[4,2,2]] run".into(),
        seed,
        cfg,
        log,
    });
    Ok(format!(
        "[[{n},2,12<=d<={}]], profile w=({},{}) q=({},{}), added {added} <= envelope {envelope} (D = {rounds}, c = {c_log})",
        upper.0.min(upper.1),
        p.w_x,
        p.w_z,
        p.q_x,
        p.q_z
    ))
}

fn universality() -> Outcome {
    let mut inputs = vec![
        ("steane".to_string(), CssCodeInput::from_code(&steane()).unwrap()),
        ("[[4,2,2]]".to_string(), CssCodeInput::from_code(&seed_422()).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xc55);
    for t in 0..50 {
        inputs.push((format!("random code {t}"), random_css(&mut rng, 10)));
    }
    for (name, input) in &inputs {
        for g in [Granularity::Spiders, Granularity::RepetitionLegos] {
            let r = verify_universality_with(input, g).map_err(|e| format!("{name}: {e}"))?;
            ensure!(r.holds, "{name} ({g:?}): witness {:?}", r.witness.map(|w| w.to_string()));
        }
    }
    Ok(format!("{} codes, whole spiders and three-legged spiders", inputs.len()))
}

fn surface_sequence() -> Outcome {
    let err = |e: seedgrow::grow::GrowError| e.to_string();
    let (c, _) = concatenate_support(seed_412(), 0, PauliType::Z).map_err(err)?;
    let (c, _) = concatenate_support(c, 0, PauliType::X).map_err(err)?;
    let c = stabilizer_nonisometry(c, PauliType::X, 6, 7).map_err(err)?;
    let c = reduce_generator_weights(&c);
    ensure!(tanner_isomorphic(&c, &rotated_surface(3).unwrap()), "not the distance-3 rotated surface code");
    for kind in [PauliType::X, PauliType::Z] {
        let d = dressed_distance(&c, kind, 3);
        ensure!(d == Some(3), "{kind} distance {d:?}");
    }
    Ok("isomorphic to the rotated surface code, d = 3".into())
}

fn compass() -> Outcome {
    let c = compass_fig4();
    let lat = Lattice::new(6, 6);
    ensure!(c.n() == 36, "n = {}", c.n());
    ensure!(c.is_abelian(), "checks do not commute");
    ensure!(c.stabilizer_k() == 1, "k = {}", c.stabilizer_k());
    for kind in [PauliType::X, PauliType::Z] {
        let d = dressed_distance(&c, kind, 6);
        ensure!(d == Some(6), "{kind} distance {d:?}");
    }
    let islands: Vec<BitVector> = COMPASS_ISLANDS
        .iter()
        .map(|&(i, j, m)| BitVector::from_indices(36, (j..j + m).flat_map(|r| [lat.index(r, i), lat.index(r, i + 1)])))
        .collect();
    let rows: Vec<&BitVector> = c.gauge_x().rows().iter().chain(c.gauge_z().rows()).collect();
    for (t, island) in islands.iter().enumerate() {
        for r in &rows {
            ensure!(r.overlap(island) <= 4, "island {t}: a check has {} qubits inside", r.overlap(island));
            if r.and(island) == **r {
                ensure!(r.weight() <= 4, "island {t}: inner check of weight {}", r.weight());
            }
        }
        ensure!(
            c.gauge_x().rows().iter().any(|r| r == island),
            "island {t} carries no weight-4 X check"
        );
    }
    let wz = c.gauge_z().row_weights().into_iter().max().unwrap_or(0);
    let outside: Vec<usize> = c.gauge_x().row_weights().into_iter().filter(|&w| w > 4).collect();
    ensure!(wz <= 4, "Z check of weight {wz}");
    Ok(format!(
        "[[36,1,6]], {} islands of weight-4 X checks, max Z weight {wz}, uncarved X checks {outside:?}",
        islands.len()
    ))
}

fn log_invariants(runs: &[Run]) -> Outcome {
    let mut concats = 0;
    let mut shifts = 0;
    for run in runs {
        let seed = &run.seed;
        for r in &run.log.records {
            match r.phase {
                Phase::Concatenate => {
                    concats += 1;
                    ensure!(
                        r.even_overlap == Some(true),
                        "{}: round {} logical {} has an odd overlap",
                        run.label,
                        r.round,
                        r.logical
                    );
                    // bare operators of type `kind` grow by their seed overlap
                    // with the opposite-type representative being concatenated
                    let opposite = &seed.bare(r.kind.dual())[r.logical];
                    for (l, &g) in r.bare_growth.iter().enumerate() {
                        let c = seed.bare(r.kind)[l].overlap(opposite);
                        ensure!(
                            g == c,
                            "{}: round {} logical {l} grew by {g}, seed overlap {c}",
                            run.label,
                            r.round
                        );
                    }
                }
                Phase::Shift => {
                    shifts += 1;
                    let dual = r.kind.dual();
                    ensure!(
                        r.profile.q(dual) <= run.cfg.q(dual),
                        "{}: round {} q_{dual} = {} after shift, cap {}",
                        run.label,
                        r.round,
                        r.profile.q(dual),
                        run.cfg.q(dual)
                    );
                }
                Phase::Reduce => {}
            }
        }
    }
    let c_max = runs
        .iter()
        .map(|run| {
            let s = &run.seed;
            s.bare_x()
                .iter()
                .flat_map(|x| s.bare_z().iter().map(move |z| x.overlap(z)))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    Ok(format!(
        "{} runs, {concats} concatenations with even overlap, {shifts} shifts within caps, bare growth = seed overlap (max c = {c_max})",
        runs.len()
    ))
}

fn conjoin_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e60);
    let mut traces = 0;
    let mut nulls = 0;
    for t in 0..20 {
        let n = rng.gen_range(3..=5);
        let state = StateVector::random(&mut rng, n, 40);
        let block = state.stabilizer_block();
        for a in 0..n {
            for b in a + 1..n {
                traces += 1;
                let engine = self_trace(&block, a, b);
                match state.bell_trace(a, b) {
                    None => {
                        nulls += 1;
                        ensure!(
                            engine == Err(ConjoinError::NullContraction { a, b }),
                            "block {t} legs ({a},{b}): oracle vanishes, engine gave {engine:?}"
                        );
                    }
                    Some(out) => {
                        let engine = engine.map_err(|e| format!("block {t} legs ({a},{b}): {e}"))?;
                        ensure!(
                            engine.same_group(&out.stabilizer_block()),
                            "block {t} legs ({a},{b}): groups differ"
                        );
                    }
                }
            }
        }
    }
    Ok(format!("20 blocks, {traces} traces ({nulls} null) match the state-vector oracle"))
}

fn main() -> ExitCode {
    let mut runs = Vec::new();
    let mut results: Vec<(&str, Outcome, f64)> = Vec::new();
    let mut record = |name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        results.push((name, outcome, start.elapsed().as_secs_f64()));
    };
    record("1 distance grows by one per iteration", &mut || distance_growth(&mut runs));
    record("2 bacon-shor 2x2 grows to 3x3, 4x4, 5x5", &mut || bacon_shor_growth(&mut runs));
    record("3 3d bacon-shor distances", &mut || bacon_shor_3d_growth(&mut runs));
    record("4 [[4,2,2]] seed grown to distance 12", &mut || seed_422_run(&mut runs));
    record("5 css codes from repetition legos", &mut universality);
    record("6 rotated surface code from [[4,1,2]]", &mut surface_sequence);
    record("7 compass code carved from bacon-shor", &mut compass);
    record("8 growth log invariants", &mut || log_invariants(&runs));
    record("9 self-trace vs state vectors", &mut conjoin_oracle);
    let mut failed = 0;
    for (name, outcome, secs) in &results {
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({secs:.1}s)");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
