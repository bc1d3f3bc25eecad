use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use ffft2d::code::{encode, message_spectrum, Code2D, CodeConfig, Message};
use ffft2d::decoder::{decode, CorrectionKind, DecodeOptions, DecodeOutcome};
use ffft2d::error_model::{inject, ErrorPattern, GlobalError, PatternSet, Placement};
use ffft2d::sim::{simulate, ErrorClass};
use ffft2d::transform::BitGrid;

const EXIT_USAGE: u8 = 2;
const EXIT_UNCORRECTABLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ffft2d",
    about = "Two-dimensional cyclic burst-correcting codes in the transform domain",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlacementArg {
    Cyclic,
    Bounded,
}

impl From<PlacementArg> for Placement {
    fn from(p: PlacementArg) -> Placement {
        match p {
            PlacementArg::Cyclic => Placement::Cyclic,
            PlacementArg::Bounded => Placement::Bounded,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code from a declared zero set and write its config file
    Codegen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Declared zeros as "theta,phi;theta,phi;..." (may be empty)
        #[arg(long, default_value = "")]
        zeros: String,
        /// Indicator subset, same syntax
        #[arg(long, default_value = "")]
        indicator: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode message bits into a codeword grid
    Encode {
        #[arg(long)]
        code: PathBuf,
        /// Message as a bit string of length k_bits
        #[arg(long, conflicts_with = "random")]
        bits: Option<String>,
        /// Draw random message bits instead
        #[arg(long, requires = "seed")]
        random: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        /// Print the frequency-domain spectrum
        #[arg(long)]
        show_spectrum: bool,
    },
    /// XOR burst errors into a grid
    Inject {
        #[arg(long = "in")]
        input: PathBuf,
        /// Error list: inline JSON like [{"pattern":"h2","at":[0,0]}] or a
        /// path to a JSON file
        #[arg(long)]
        errors: String,
        #[arg(long, value_enum, default_value = "cyclic")]
        placement: PlacementArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode a received grid
    Decode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest burst multiplicity tried on the multi-burst path
        #[arg(long, default_value_t = 3)]
        mu_max: usize,
        /// On cross-multiplicity ambiguity, keep the fewest-bursts answer
        #[arg(long)]
        prefer_min_bursts: bool,
        /// Write the corrected grid here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo encode/inject/decode rounds, report as JSON
    Simulate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// h2, v2, e1, both, or multi:PATTERN:COUNT
        #[arg(long)]
        error_class: String,
        #[arg(long, value_enum, default_value = "cyclic")]
        placement: PlacementArg,
        #[arg(long, default_value_t = 3)]
        mu_max: usize,
        #[arg(long)]
        prefer_min_bursts: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Codegen {
            n,
            m,
            zeros,
            indicator,
            out,
        } => cmd_codegen(n, m, &zeros, &indicator, &out),
        Cmd::Encode {
            code,
            bits,
            random,
            seed,
            out,
            show_spectrum,
        } => cmd_encode(&code, bits.as_deref(), random, seed, &out, show_spectrum),
        Cmd::Inject {
            input,
            errors,
            placement,
            out,
        } => cmd_inject(&input, &errors, placement.into(), &out),
        Cmd::Decode {
            code,
            input,
            mu_max,
            prefer_min_bursts,
            out,
        } => cmd_decode(
            &code,
            &input,
            DecodeOptions {
                mu_max,
                prefer_min_bursts,
            },
            out.as_deref(),
        ),
        Cmd::Simulate {
            code,
            trials,
            seed,
            error_class,
            placement,
            mu_max,
            prefer_min_bursts,
            threads,
        } => cmd_simulate(
            &code,
            trials,
            seed,
            &error_class,
            placement.into(),
            DecodeOptions {
                mu_max,
                prefer_min_bursts,
            },
            threads,
        ),
    }
}

fn parse_index_list(s: &str) -> Result<Vec<(usize, usize)>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|pair| {
            let (t, p) = pair
                .split_once(',')
                .ok_or_else(|| format!("bad index {pair:?}; expected theta,phi"))?;
            Ok((
                t.trim().parse().map_err(|_| format!("bad row index {t:?}"))?,
                p.trim().parse().map_err(|_| format!("bad column index {p:?}"))?,
            ))
        })
        .collect()
}

fn load_code(path: &PathBuf) -> Result<Code2D, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let cfg: CodeConfig =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let patterns = PatternSet::standard(cfg.n, cfg.m);
    cfg.into_code(&patterns).map_err(|e| e.to_string())
}

fn load_grid(path: &PathBuf) -> Result<BitGrid, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    BitGrid::from_text(&text).map_err(|e| e.to_string())
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_codegen(
    n: usize,
    m: usize,
    zeros: &str,
    indicator: &str,
    out: &PathBuf,
) -> Result<ExitCode, String> {
    let declared = parse_index_list(zeros)?;
    let indicator = parse_index_list(indicator)?;
    let patterns = PatternSet::standard(n, m);
    let built = ffft2d::code::build_code(n, m, &declared, &indicator, &patterns)
        .map_err(|e| e.to_string())?;
    let code = built.code;

    println!(
        "field: GF(2^{}), primitive polynomial {:#b}",
        code.field().lambda(),
        code.field().primitive_poly()
    );
    let closure: Vec<String> = code
        .zeros()
        .closure
        .iter()
        .map(|&(t, p)| format!("({t},{p})"))
        .collect();
    println!("closure ({}): {}", closure.len(), closure.join(" "));
    for orbit in code.message_orbits() {
        let members: Vec<String> = orbit
            .members
            .iter()
            .map(|&(t, p)| format!("({t},{p})"))
            .collect();
        println!("message orbit: {}", members.join(" "));
    }
    println!("k_bits = {}", code.k_bits());
    if code.k_bits() == n * m {
        println!("warning: empty zero set, no error correction");
    }
    let h2 = ErrorPattern::horizontal(2);
    let v2 = ErrorPattern::vertical(2);
    println!(
        "disjoint(h2, v2): {}",
        ffft2d::code::check_disjoint(&code, &h2, &v2)
    );
    for w in &built.warnings {
        println!("warning: {w}");
    }

    let cfg = CodeConfig::from_code(&code);
    let json = serde_json::to_string_pretty(&cfg).map_err(|e| e.to_string())?;
    write_file(out, &format!("{json}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_encode(
    code: &PathBuf,
    bits: Option<&str>,
    random: bool,
    seed: Option<u64>,
    out: &PathBuf,
    show_spectrum: bool,
) -> Result<ExitCode, String> {
    let code = load_code(code)?;
    let msg = match (bits, random) {
        (Some(bits), false) => Message::from_bit_str(bits).map_err(|e| e.to_string())?,
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.expect("clap requires --seed"));
            Message {
                bits: (0..code.k_bits()).map(|_| rng.gen_range(0..=1)).collect(),
            }
        }
        _ => return Err("exactly one of --bits and --random is required".into()),
    };
    let grid = encode(&code, &msg).map_err(|e| e.to_string())?;
    if show_spectrum {
        let spec = message_spectrum(&code, &msg).map_err(|e| e.to_string())?;
        print!("{}", spec.to_display(code.field()));
    }
    write_file(out, &grid.to_text())?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct ErrorSpec {
    pattern: String,
    at: (usize, usize),
}

fn cmd_inject(
    input: &PathBuf,
    errors: &str,
    placement: Placement,
    out: &PathBuf,
) -> Result<ExitCode, String> {
    let grid = load_grid(input)?;
    let json = if errors.trim_start().starts_with('[') {
        errors.to_string()
    } else {
        fs::read_to_string(errors).map_err(|e| format!("{errors}: {e}"))?
    };
    let specs: Vec<ErrorSpec> =
        serde_json::from_str(&json).map_err(|e| format!("error list: {e}"))?;
    let errors = specs
        .into_iter()
        .map(|s| {
            Ok(GlobalError::new(
                ErrorPattern::parse(&s.pattern).map_err(|e| e.to_string())?,
                s.at,
            ))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let injected = inject(&grid, &errors, placement).map_err(|e| e.to_string())?;
    write_file(out, &injected.to_text())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_decode(
    code: &PathBuf,
    input: &PathBuf,
    options: DecodeOptions,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let code = load_code(code)?;
    let grid = load_grid(input)?;
    let outcome = decode(&grid, &code, options).map_err(|e| e.to_string())?;
    match &outcome {
        DecodeOutcome::Clean { grid } => {
            println!("Clean");
            print!("{grid}");
        }
        DecodeOutcome::Corrected {
            grid,
            flipped,
            kind,
        } => {
            let positions: Vec<String> = flipped.iter().map(|&(i, j)| format!("({i},{j})")).collect();
            match kind {
                CorrectionKind::Combination { c1, c2, .. } => println!(
                    "Corrected; c1={} c2={}; flipped {}",
                    *c1 as u8,
                    *c2 as u8,
                    positions.join("")
                ),
                CorrectionKind::MultiBurst { pattern, mu, starts } => {
                    let starts: Vec<String> =
                        starts.iter().map(|&(i, j)| format!("({i},{j})")).collect();
                    println!(
                        "Corrected; pattern {pattern} x{mu} at {}; flipped {}",
                        starts.join(","),
                        positions.join("")
                    );
                }
            }
            print!("{grid}");
        }
        DecodeOutcome::Uncorrectable { reason } => {
            println!("Uncorrectable: {reason}");
            return Ok(ExitCode::from(EXIT_UNCORRECTABLE));
        }
    }
    if let (Some(path), Some(grid)) = (out, outcome.grid()) {
        write_file(&path.to_path_buf(), &grid.to_text())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(
    code: &PathBuf,
    trials: u64,
    seed: u64,
    error_class: &str,
    placement: Placement,
    options: DecodeOptions,
    threads: Option<usize>,
) -> Result<ExitCode, String> {
    let code = load_code(code)?;
    let class = ErrorClass::parse(error_class).map_err(|e| e.to_string())?;
    let report = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| e.to_string())?
            .install(|| simulate(&code, trials, seed, &class, placement, options)),
        None => simulate(&code, trials, seed, &class, placement, options),
    }
    .map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
    );
    Ok(ExitCode::SUCCESS)
}
