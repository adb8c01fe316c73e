use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seedgrow::catalog;
use seedgrow::code::{dressed_distance, CssSubsystemCode};
use seedgrow::css_network::{css_state_network, verify_universality_with, CssCodeInput, Granularity};
use seedgrow::gf2::PauliType;
use seedgrow::grow::{grow, GrowError, GrowthConfig};
use seedgrow::io::{degree_csv, to_dot, write_log_jsonl, CodeFileV1, RunReport};

#[derive(Parser)]
#[command(name = "seedgrow", version, about = "Grow sparse CSS-like subsystem codes from small seeds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a seed code and print a run report.
    #[command(group(ArgGroup::new("source").required(true).args(["seed", "catalog"])))]
    Grow {
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, default_value_t = 4)]
        wx: usize,
        #[arg(long, default_value_t = 4)]
        wz: usize,
        #[arg(long, default_value_t = 4)]
        qx: usize,
        #[arg(long, default_value_t = 4)]
        qz: usize,
        #[arg(long, default_value_t = 1)]
        mx: usize,
        #[arg(long, default_value_t = 1)]
        mz: usize,
        #[arg(long, default_value_t = 1)]
        iters: usize,
        /// Checks moved per overweight qubit in the shift phase.
        #[arg(long, default_value_t = 1)]
        shifts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Exact dressed distance by enumeration up to a weight cap.
    Distance {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "type", value_enum, default_value_t = Which::Both)]
        kind: Which,
        #[arg(long, default_value_t = 8)]
        wmax: usize,
    },
    /// Check commutation and logical pairing; exits 1 if invalid.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build the spider network of a CSS code.
    Css2lego {
        #[arg(long = "in")]
        input: PathBuf,
        /// Contract the network and compare with the encoder's Choi state.
        #[arg(long)]
        check: bool,
    },
    /// Export the Tanner graph or the code file.
    #[command(group(ArgGroup::new("target").required(true).multiple(true).args(["dot", "json", "degrees"])))]
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        degrees: Option<PathBuf>,
    },
    /// List catalog codes, or print one as a code file.
    Catalog {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    X,
    Z,
    Both,
}

/// Exit 1: the input was read but failed a check. Exit 2: anything else.
enum Failure {
    Invalid(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn invalid(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Invalid(e.into())
}

fn read_code(path: &Path) -> anyhow::Result<(CodeFileV1, CssSubsystemCode)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = CodeFileV1::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let code = file.to_code().with_context(|| format!("decoding {}", path.display()))?;
    Ok((file, code))
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Grow {
            seed,
            catalog: name,
            wx,
            wz,
            qx,
            qz,
            mx,
            mz,
            iters,
            shifts,
            out,
            log,
        } => {
            let (seed_file, code) = match (seed, name) {
                (Some(path), _) => read_code(&path)?,
                (None, Some(name)) => {
                    let entry = catalog::lookup(&name).map_err(anyhow::Error::from)?;
                    let file = CodeFileV1::from_code(&entry.code).with_metadata("catalog", name.as_str());
                    (file, entry.code)
                }
                (None, None) => unreachable!("clap requires a source"),
            };
            let cfg = GrowthConfig {
                w_x: wx,
                w_z: wz,
                q_x: qx,
                q_z: qz,
                m_x: mx,
                m_z: mz,
                iterations: iters,
                shift_count: shifts,
            };
            if let Err(e) = cfg.validate() {
                return Err(Failure::Usage(e.into()));
            }
            let start = Instant::now();
            let (grown, growth_log) = grow(&code, &cfg).map_err(|e| match e {
                GrowError::InvalidConfig(_) => Failure::Usage(e.into()),
                e => invalid(e),
            })?;
            let wall = start.elapsed().as_millis();
            if let Some(path) = &out {
                let mut file = CodeFileV1::from_code(&grown);
                file.metadata = seed_file.metadata.clone();
                file.metadata.insert("growth".into(), serde_json::to_value(cfg).expect("config serializes"));
                write_file(path, &file.to_json())?;
            }
            if let Some(path) = &log {
                let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
                write_log_jsonl(&growth_log, BufWriter::new(f)).with_context(|| format!("writing {}", path.display()))?;
            }
            let report = RunReport::new(&grown, &growth_log, wall, log.map(|p| p.display().to_string()));
            print_json(&serde_json::to_value(&report).expect("report serializes"));
        }
        Command::Distance { input, kind, wmax } => {
            let (_, code) = read_code(&input)?;
            let kinds: &[PauliType] = match kind {
                Which::X => &[PauliType::X],
                Which::Z => &[PauliType::Z],
                Which::Both => &[PauliType::X, PauliType::Z],
            };
            let mut out = serde_json::Map::new();
            out.insert("wmax".into(), json!(wmax));
            for &k in kinds {
                let v = match dressed_distance(&code, k, wmax) {
                    Some(d) => json!(d),
                    None => json!("exceeds wmax"),
                };
                out.insert(format!("d_{}", k.to_string().to_lowercase()), v);
            }
            print_json(&Value::Object(out));
        }
        Command::Verify { input } => {
            let (_, code) = read_code(&input)?;
            let report = code.validate();
            let issues: Vec<String> = report.issues.iter().map(|v| v.to_string()).collect();
            print_json(&json!({
                "n": code.n(),
                "k": code.k(),
                "abelian": code.is_abelian(),
                "valid": report.is_valid(),
                "issues": issues,
            }));
            if !report.is_valid() {
                return Err(invalid(anyhow::anyhow!("{report}")));
            }
        }
        Command::Css2lego { input, check } => {
            let (_, code) = read_code(&input)?;
            let css = CssCodeInput::from_code(&code).map_err(invalid)?;
            let net = css_state_network(css.h_x(), css.h_z()).map_err(invalid)?;
            let mut out = json!({
                "n": css.n(),
                "k": css.k(),
                "blocks": net.blocks.len(),
                "contractions": net.contractions.len(),
            });
            let mut failed = None;
            if check {
                for (label, g) in [("spiders", Granularity::Spiders), ("repetition_legos", Granularity::RepetitionLegos)] {
                    let r = verify_universality_with(&css, g).map_err(invalid)?;
                    out[label] = json!({
                        "holds": r.holds,
                        "blocks": r.blocks,
                        "witness": r.witness.as_ref().map(|w| w.to_string()),
                    });
                    if !r.holds && failed.is_none() {
                        failed = Some(format!("{label}: contraction misses {}", r.witness.expect("failure has a witness")));
                    }
                }
            }
            print_json(&out);
            if let Some(msg) = failed {
                return Err(invalid(anyhow::anyhow!(msg)));
            }
        }
        Command::Export { input, dot, json, degrees } => {
            let (file, code) = read_code(&input)?;
            if let Some(path) = dot {
                write_file(&path, &to_dot(&code))?;
            }
            if let Some(path) = json {
                let mut out = CodeFileV1::from_code(&code);
                out.metadata = file.metadata;
                write_file(&path, &out.to_json())?;
            }
            if let Some(path) = degrees {
                write_file(&path, &degree_csv(&code))?;
            }
        }
        Command::Catalog { name, out } => match name {
            None => {
                for name in catalog::standard_names() {
                    println!("{name}");
                }
            }
            Some(name) => {
                let entry = catalog::lookup(&name).map_err(anyhow::Error::from)?;
                let e = entry.expected;
                let file = CodeFileV1::from_code(&entry.code)
                    .with_metadata("catalog", name.as_str())
                    .with_metadata("description", entry.description.as_str())
                    .with_metadata("d_x", e.d_x)
                    .with_metadata("d_z", e.d_z);
                match out {
                    Some(path) => write_file(&path, &file.to_json())?,
                    None => print!("{}", file.to_json()),
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
