use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypercode::gf2poly::cyclic_code_dimension;
use hypercode::hypergraph::{
    block_row, circulant_hypergraph, complete_3partite, fano_circulant, projective_geometry,
};
use hypercode::{BitMatrix, BitVector, Error, GF2Poly, Hypergraph, SearchLimits};
use hypercode_cli::report::{analyze, AnalysisReport, AnalyzeError, AnalyzeOptions, MethodArg, Subject};
use hypercode_cli::scan::{self, ScanConfig};
use hypercode_cli::verify::{self, Fixtures};

#[derive(Parser)]
#[command(name = "hypercode", version, about = "Binary linear codes from hypergraph incidence matrices")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    K3partite,
    Pg,
    Fano,
    Circulant,
    BlockCirculant,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated hypergraph in the text format.
    Family {
        kind: FamilyKind,
        #[arg(long)]
        n: Option<usize>,
        /// First row of a circulant incidence matrix, as 0/1 characters.
        #[arg(long)]
        row: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report [n, k, d] and self-duality of a hypergraph or matrix code.
    Analyze {
        /// Input file, or `-` for standard input.
        input: String,
        /// Read a generator matrix instead of a hypergraph.
        #[arg(long)]
        matrix: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long)]
        weights: bool,
        /// Stop at the first codeword of weight at most this value.
        #[arg(long)]
        early_exit: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
    /// Run the reproduction checks.
    Verify {
        /// Run only the check with this tag.
        #[arg(long)]
        only: Option<String>,
        /// Replacement Fano incidence matrix (matrix text format).
        #[arg(long, hide = true)]
        fano_fixture: Option<PathBuf>,
    },
    /// Sample connected uniform hypergraphs and report self-orthogonal codes.
    SelfdualScan {
        #[arg(long)]
        n_max: usize,
        /// Number of hypergraphs to sample.
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        uniformity: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Polynomial arithmetic over GF(2); coefficients ascending, e.g. 1101 = 1 + x + x^3.
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
}

#[derive(Subcommand)]
enum PolyOp {
    Gcd { a: String, b: String },
    /// Dimension of the cyclic code of length n generated by p.
    Dim {
        p: String,
        #[arg(long)]
        n: usize,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::ResourceCap { .. } => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<AnalyzeError> for Failure {
    fn from(e: AnalyzeError) -> Self {
        match e {
            AnalyzeError::Library(e) => e.into(),
            AnalyzeError::Disagreement { codeword, eonv } => Failure::new(
                3,
                format!("engine disagreement: codeword search gives d = {codeword}, eonv search gives {eonv}"),
            ),
        }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure::new(1, format!("{what}: {e}"))
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure("reading standard input", e))?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| io_failure(input, e))
    }
}

fn enum_cap() -> Result<u64, Failure> {
    match std::env::var("HYPERCODE_ENUM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(1, format!("HYPERCODE_ENUM_CAP is not an integer: {v:?}"))),
        Err(_) => Ok(SearchLimits::default().cap),
    }
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::new(1, format!("{kind} requires --{flag}")))
}

fn family(
    kind: FamilyKind,
    n: Option<usize>,
    row: Option<String>,
    k: Option<usize>,
    m: Option<usize>,
) -> Result<Hypergraph, Failure> {
    Ok(match kind {
        FamilyKind::K3partite => complete_3partite(need(n, "n", "k3partite")?)?,
        FamilyKind::Pg => {
            let n = need(n, "n", "pg")?;
            let n = u32::try_from(n).map_err(|_| Failure::new(1, format!("pg: n = {n} is too large")))?;
            projective_geometry(n)?
        }
        FamilyKind::Fano => fano_circulant(),
        FamilyKind::Circulant => {
            let row: BitVector = need(row, "row", "circulant")?.parse()?;
            circulant_hypergraph(&row)?
        }
        FamilyKind::BlockCirculant => circulant_hypergraph(&block_row(
            need(k, "k", "block-circulant")?,
            need(m, "m", "block-circulant")?,
        )?)?,
    })
}

fn emit(text: &str) -> Result<(), Failure> {
    io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| io_failure("writing standard output", e))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Family {
            kind,
            n,
            row,
            k,
            m,
            output,
        } => {
            let text = family(kind, n, row, k, m)?.to_text();
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| io_failure(&path.display().to_string(), e)),
                None => emit(&text),
            }
        }
        Command::Analyze {
            input,
            matrix,
            method,
            weights,
            early_exit,
            csv,
        } => {
            let text = read_input(&input)?;
            let subject = if matrix {
                Subject {
                    matrix: BitMatrix::parse_text(&text)?,
                    hypergraph: None,
                }
            } else {
                let h = Hypergraph::parse_text(&text)?;
                Subject {
                    matrix: h.incidence_matrix(),
                    hypergraph: Some(h),
                }
            };
            let opts = AnalyzeOptions {
                method,
                weights,
                limits: SearchLimits {
                    cap: enum_cap()?,
                    early_exit,
                },
            };
            let report = analyze(&subject, &opts)?;
            if csv {
                emit(&format!("{}\n{}\n", AnalysisReport::CSV_HEADER, report.to_csv_row()))
            } else {
                emit(&format!("{}\n", report.to_json()))
            }
        }
        Command::Verify { only, fano_fixture } => {
            if let Some(tag) = &only {
                if !verify::tags().contains(&tag.as_str()) {
                    return Err(Failure::new(
                        1,
                        format!("unknown tag {tag:?}; known tags: {}", verify::tags().join(", ")),
                    ));
                }
            }
            let mut fixtures = Fixtures::default();
            if let Some(path) = fano_fixture {
                let text = fs::read_to_string(&path).map_err(|e| io_failure(&path.display().to_string(), e))?;
                fixtures.fano = BitMatrix::parse_text(&text)?;
            }
            let checks = verify::run(&fixtures, only.as_deref());
            let mut out = String::new();
            for c in &checks {
                out.push_str(&c.line());
                out.push('\n');
            }
            let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.tag).collect();
            out.push_str(&format!("{} of {} checks passed\n", checks.len() - failed.len(), checks.len()));
            emit(&out)?;
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::new(1, format!("failed: {}", failed.join(", "))))
            }
        }
        Command::SelfdualScan {
            n_max,
            budget,
            seed,
            uniformity,
            csv,
        } => {
            let cfg = ScanConfig {
                n_max,
                budget,
                seed,
                uniformity,
            };
            scan::validate(&cfg).map_err(|m| Failure::new(1, m))?;
            let (findings, summary) = scan::scan(&cfg);
            let mut out = String::new();
            if csv {
                out.push_str(scan::CSV_HEADER);
                out.push('\n');
            }
            for f in &findings {
                out.push_str(&if csv { f.csv_row() } else { f.line() });
                out.push('\n');
            }
            out.push_str(&summary.line());
            out.push('\n');
            emit(&out)
        }
        Command::Poly { op } => match op {
            PolyOp::Gcd { a, b } => {
                let (a, b): (GF2Poly, GF2Poly) = (a.parse()?, b.parse()?);
                let g = a.gcd(&b)?;
                let len = g.degree().finite().map_or(1, |d| d + 1);
                emit(&format!("{}\t{}\n", g.to_coefficients(len), g))
            }
            PolyOp::Dim { p, n } => {
                let p: GF2Poly = p.parse()?;
                emit(&format!("{}\n", cyclic_code_dimension(&p, n)?))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("hypercode: cannot size worker pool: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hypercode: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
