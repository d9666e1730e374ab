use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hpi_core::branching::{branch_gl_to_hpi, product_hpi};
use hpi_core::modify::{dim_formal, modify};
use hpi_core::series::series_coeffs;
use hpi_core::symfunc::plethysm;
use hpi_core::{Error, FormalCharacter, Partition, SchurExpansion, SeriesId, TableId};

#[derive(Parser)]
#[command(name = "hpi", version, about = "Schur function series, GL(n) -> H_pi branchings and products")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    #[value(name = "paper-table")]
    Tabular,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a named or plethystic series through a weight.
    Series {
        /// `L M P Q A B C D E F G H R S V W`, `Mpi:[..]` or `Lpi:[..]`.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        degree: u32,
        /// Keep only terms with at most this many rows.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// The plethysm {base} ⊗ {exp}.
    Pleth {
        #[arg(long)]
        base: String,
        #[arg(long)]
        exp: String,
    },
    /// Branch {λ} from GL(n) to H_π(n).
    Branch {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        modify: bool,
    },
    /// The H_π product ((μ))·((ν)).
    Product {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        modify: bool,
    },
    /// A branching table with dimension subscripts.
    Table {
        /// h3_4, h21_4, h13_3, h13_4 or h13_4_app.
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = usize::MAX)]
        rows: usize,
    },
    /// The dimension of ((μ)) in H_π(n).
    Dim {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        pi: String,
        #[arg(long)]
        n: u32,
    },
}

fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn expansion_out(f: &SchurExpansion, format: Format, extra: Value) -> String {
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(f).expect("expansions serialize");
            if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
                map.extend(more);
            }
            v.to_string()
        }
        _ => f.to_string(),
    }
}

fn character_out(f: &FormalCharacter, format: Format) -> String {
    match format {
        Format::Text => f.to_text(),
        Format::Tabular => f.to_table_form(),
        Format::Json => serde_json::to_string(f).expect("characters serialize"),
    }
}

fn finish(f: FormalCharacter, n: Option<u32>, apply: bool) -> Result<FormalCharacter, Error> {
    let f = match n {
        Some(n) => f.with_n(n),
        None => f,
    };
    if apply {
        modify(&f)
    } else {
        Ok(f)
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let format = cli.format;
    Ok(match cli.command {
        Command::Series { name, degree, max_length } => {
            let id: SeriesId = name.parse()?;
            let mut sr = series_coeffs(&id, degree)?;
            if let Some(k) = max_length {
                sr = sr.restrict_length(k);
            }
            expansion_out(&sr.body, format, json!({ "series": id.to_string(), "degree": degree }))
        }
        Command::Pleth { base, exp } => {
            let (b, e) = (partition(&base)?, partition(&exp)?);
            let f = plethysm(&SchurExpansion::basis(b.clone()), &SchurExpansion::basis(e.clone()));
            expansion_out(&f, format, json!({ "base": b, "exp": e }))
        }
        Command::Branch { lambda, pi, n, modify } => {
            let (lambda, pi) = (partition(&lambda)?, partition(&pi)?);
            character_out(&finish(branch_gl_to_hpi(&lambda, &pi), n, modify)?, format)
        }
        Command::Product { mu, nu, pi, n, modify } => {
            let (mu, nu, pi) = (partition(&mu)?, partition(&nu)?, partition(&pi)?);
            character_out(&finish(product_hpi(&mu, &nu, &pi), n, modify)?, format)
        }
        Command::Table { which, rows } => {
            let id: TableId = which.parse()?;
            match format {
                Format::Json => {
                    let body: Vec<Value> = id
                        .rows(rows)
                        .into_iter()
                        .map(|r| json!({ "lambda": r.lambda, "dim": r.dim, "branched": r.branched }))
                        .collect();
                    json!({ "table": id.name(), "pi": id.pi(), "n": id.n(), "rows": body }).to_string()
                }
                _ => id.render(rows).trim_end().to_string(),
            }
        }
        Command::Dim { mu, pi, n } => {
            let d = dim_formal(&partition(&mu)?, &partition(&pi)?, n);
            match format {
                Format::Json => json!({ "dim": d }).to_string(),
                _ => d.to_string(),
            }
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPartition(_) | Error::Parse(_) | Error::UnknownSeries(_) | Error::NotInvertible(_) => 2,
        Error::UnsupportedLength { .. } | Error::NoKnownRule(_) | Error::UnsupportedGroup(_) => 3,
        Error::NotSymmetric | Error::Internal(_) => 4,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
