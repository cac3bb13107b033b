//! Command-line front end: condition tables, per-d divisor reports and
//! lattice computations, in text, markdown or JSON.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 mathematical
//! precondition violation. Data goes to stdout, diagnostics to stderr.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use cubic_k3::hassett;
use cubic_k3::lattice::{disc_group_form, Lattice, Sublattice};
use cubic_k3::periods::{build_setup, divisor_report, DEFAULT_K_BOUND};
use cubic_k3::Error as K3Error;
use num_traits::ToPrimitive;
use std::io::Read;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Markdown,
    Json,
}

#[derive(Parser)]
#[command(
    name = "cubic-k3",
    version,
    about = "Lattice arithmetic for special cubic fourfolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render the condition table over a range of even d.
    Table {
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Full report for one divisor label d.
    Divisor {
        #[arg(long)]
        d: i64,
        #[arg(long, default_value_t = DEFAULT_K_BOUND)]
        k_bound: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Lattice computations on JSON input.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
}

#[derive(Subcommand)]
enum LatticeOp {
    /// Discriminant group with its quadratic form (lattice JSON).
    DiscGroup {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Inertia signature (lattice JSON).
    Signature {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Orthogonal complement (sublattice JSON).
    Complement {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Saturation and its index (sublattice JSON).
    Saturate {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

enum CliError {
    Usage(String),
    Input(String),
    Math(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Math(m) => write!(f, "{m}"),
        }
    }
}

impl From<K3Error> for CliError {
    fn from(e: K3Error) -> Self {
        match e {
            K3Error::Degenerate | K3Error::ZeroScale => CliError::Math(e.to_string()),
            K3Error::InadmissibleD(d) => CliError::Usage(format!("d = {d}: (*) fails")),
            K3Error::InvalidInput(_) | K3Error::NotSymmetric | K3Error::OddInput(_) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Math(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table { from, to, format } => {
            if from > to {
                return Err(CliError::Usage(format!(
                    "invalid range: --from {from} > --to {to}"
                )));
            }
            let t = hassett::table(from, to);
            match format {
                OutputFormat::Text => print!("{}", render::table_text(&t)),
                OutputFormat::Markdown => print!("{}", render::table_markdown(&t)),
                OutputFormat::Json => println!("{}", serde_json::to_string(&t).expect("serialize")),
            }
        }
        Command::Divisor { d, k_bound, format } => {
            let setup = build_setup();
            let report = divisor_report(&setup, d, k_bound)?;
            match format {
                OutputFormat::Text => print!("{}", render::divisor_text(&report)),
                OutputFormat::Markdown => print!("{}", render::divisor_markdown(&report)),
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string(&report).expect("serialize"))
                }
            }
        }
        Command::Lattice { op } => run_lattice(op)?,
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {path}: {e}")))
    }
}

fn parse_lattice(path: &str) -> Result<Lattice, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("lattice JSON: {e}")))
}

fn parse_sublattice(path: &str) -> Result<Sublattice, CliError> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("sublattice JSON: {e}")))
}

fn run_lattice(op: LatticeOp) -> Result<(), CliError> {
    match op {
        LatticeOp::DiscGroup { input, format } => {
            let l = parse_lattice(&input)?;
            let f = disc_group_form(&l)?;
            match format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string(&render::DiscGroupWire::from(&f)).expect("serialize")
                    )
                }
                _ => println!("{f}"),
            }
        }
        LatticeOp::Signature { input, format } => {
            let l = parse_lattice(&input)?;
            let s = l.signature()?;
            match format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::json!({
                        "positive": s.positive,
                        "negative": s.negative,
                        "zero": s.zero,
                    })
                ),
                _ => println!("{s}"),
            }
        }
        LatticeOp::Complement { input, format } => {
            let s = parse_sublattice(&input)?;
            let c = s.orthogonal_complement()?;
            match format {
                OutputFormat::Json => println!("{}", serde_json::to_string(&c).expect("serialize")),
                _ => print!("{}", render::sublattice_text("orthogonal complement", &c)),
            }
        }
        LatticeOp::Saturate { input, format } => {
            let s = parse_sublattice(&input)?;
            let index = s.saturation_index();
            let sat = s.saturate();
            match format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::json!({
                        "saturation": sat,
                        "index": index.to_i64(),
                    })
                ),
                _ => {
                    print!("{}", render::sublattice_text("saturation", &sat));
                    println!("index: {index}");
                }
            }
        }
    }
    Ok(())
}
