use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mtkit::census::{census, census_row};
use mtkit::io::{lattice_value, parse_document, space_value, DocError, Document, Points};
use mtkit::theorems::run_theorem_suite;
use mtkit_core::completions::{macneille, mt_from_frame, FinPoset};
use mtkit_core::frames::{pt_space, validate_frame};
use mtkit_core::functors::{omega, soberify};
use mtkit_core::separation::{urysohn_family, DEFAULT_URYSOHN_DEPTH};
use mtkit_core::{ElementSet, FinSpace, FiniteFrame, MtError};
use serde_json::{json, Value};

const EXIT_INVALID: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_SCHEMA: u8 = 3;

#[derive(Parser)]
#[command(name = "mtkit", version, about = "Finite MT-algebras: validation, separation axioms, completions and theorem checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and print its canonical form.
    Validate { file: PathBuf },
    /// Separation profile, witnesses and frame profile of a space.
    Classify { file: PathBuf },
    /// O(M) of a space as a lattice document.
    Frame { file: PathBuf },
    /// pt(L) of a frame as a space document.
    Points { file: PathBuf },
    /// MacNeille completion of a poset or lattice.
    Complete { file: PathBuf },
    /// The MT-algebra completing the Boolean envelope of a frame (or of O(M) for a space).
    Envelope { file: PathBuf },
    /// pt(Ω(X)).
    Soberify { file: PathBuf },
    /// Dyadic family of opens between a closed and an open element.
    Urysohn {
        file: PathBuf,
        /// Closed element as a bitmask (decimal or 0x-prefixed hex).
        #[arg(long, value_parser = parse_mask)]
        closed: u32,
        /// Open element as a bitmask.
        #[arg(long, value_parser = parse_mask)]
        open: u32,
        #[arg(long, default_value_t = DEFAULT_URYSOHN_DEPTH)]
        depth: u32,
    },
    /// Classify every labeled topology on n points.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Run the theorem suite on every labeled topology on n points.
    Theorems {
        #[arg(long)]
        n: usize,
    },
}

fn parse_mask(s: &str) -> Result<u32, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("bad mask {s:?}: {e}"))
}

enum Failure {
    Doc(DocError),
    Violation(Value),
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::Doc(e)
    }
}

impl From<MtError> for Failure {
    fn from(e: MtError) -> Self {
        Failure::Doc(DocError::Invalid(e))
    }
}

fn schema(message: String) -> Failure {
    Failure::Doc(DocError::Schema {
        path: "kind".into(),
        message,
    })
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| {
        Failure::Doc(DocError::Schema {
            path: ".".into(),
            message: format!("cannot read {}: {e}", path.display()),
        })
    })?;
    Ok(parse_document(&text)?)
}

fn load_space(path: &Path) -> Result<FinSpace, Failure> {
    match load(path)? {
        Document::Space(s) => Ok(s),
        other => Err(schema(format!("expected a space document, got {}", other.kind()))),
    }
}

fn load_frame(path: &Path) -> Result<FiniteFrame, Failure> {
    match load(path)? {
        Document::Lattice(l) => Ok(validate_frame(l)?),
        Document::Space(s) => Ok(omega(&s)),
        other => Err(schema(format!("expected a lattice document, got {}", other.kind()))),
    }
}

fn run(command: Command) -> Result<Value, Failure> {
    Ok(match command {
        Command::Validate { file } => load(&file)?.to_value(),
        Command::Classify { file } => serde_json::to_value(census_row(&load_space(&file)?)).expect("serializable"),
        Command::Frame { file } => lattice_value(omega(&load_space(&file)?).lattice()),
        Command::Points { file } => {
            let (pt, zeta) = pt_space(&load_frame(&file)?)?;
            let mut doc = space_value(&pt);
            doc["zeta"] = json!(zeta.into_iter().map(Points::from).collect::<Vec<_>>());
            doc
        }
        Command::Complete { file } => {
            let poset = match load(&file)? {
                Document::Poset(p) => p,
                Document::Lattice(l) => FinPoset::of_lattice(&l),
                other => return Err(schema(format!("expected a poset or lattice document, got {}", other.kind()))),
            };
            let c = macneille(&poset);
            let mut doc = lattice_value(&c.lattice);
            doc["embedding"] = json!(c.embedding);
            doc
        }
        Command::Envelope { file } => {
            let (space, iso) = mt_from_frame(&load_frame(&file)?)?;
            let mut doc = space_value(&space);
            doc["iso"] = json!(iso);
            doc
        }
        Command::Soberify { file } => space_value(&soberify(&load_space(&file)?)),
        Command::Urysohn {
            file,
            closed,
            open,
            depth,
        } => {
            let m = load_space(&file)?;
            let (c, a) = (ElementSet::from_bits(closed), ElementSet::from_bits(open));
            for x in [c, a] {
                if !x.is_subset(m.full()) {
                    return Err(MtError::PreconditionViolated(format!("{x} is not an element of a {}-point space", m.n())).into());
                }
            }
            let f = urysohn_family(&m, c, a, depth)?;
            let denominator = 1usize << depth;
            let members: Vec<Value> = (0..=denominator)
                .map(|k| json!({"p": format!("{k}/{denominator}"), "u": Points::from(f.at(k))}))
                .collect();
            json!({"depth": depth, "closed": Points::from(c), "open": Points::from(a), "family": members})
        }
        Command::Census { n } => serde_json::to_value(census(n)?).expect("serializable"),
        Command::Theorems { n } => {
            let reports = run_theorem_suite(n)?;
            let value = serde_json::to_value(&reports).expect("serializable");
            if reports.iter().any(|r| !r.violations.is_empty()) {
                return Err(Failure::Violation(value));
            }
            value
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_SCHEMA) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(value) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(value)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            eprintln!("error: theorem violations found");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(Failure::Doc(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                DocError::Schema { .. } => EXIT_SCHEMA,
                DocError::Invalid(_) => EXIT_INVALID,
            })
        }
    }
}
