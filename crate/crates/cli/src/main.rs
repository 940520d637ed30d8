//! Command-line harness: loads scheme and arrangement files, computes
//! invariants and containments, and runs the named verification suites.
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
//! input error.

mod suites;
mod tables;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fatpoints::containment::symbolic_in_scaled_power;
use fatpoints::error::{Error, Result};
use fatpoints::invariants::{monomial_count, waldschmidt_bounds};
use fatpoints::oracle::{alpha_by_conditions, symbolic_piece_dim};
use fatpoints::schemes::{parse_field_name, parse_scheme_text_over, FatPointScheme, SchemeFile};
use fatpoints::CoeffDomain;

use tables::{render_all, Format, Table};

#[derive(Parser)]
#[command(
    name = "fatpoints",
    version,
    about = "Exact symbolic-power computations for fat point schemes in the projective plane"
)]
struct Cli {
    /// Output table format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Write tables to this file instead of standard output (wall-clock
    /// columns are dropped so identical runs give identical bytes).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for the random-point fixtures used by the suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Override the coefficient field declared in the input file
    /// (Q, Fp:<p>, or Qw).
    #[arg(long, global = true)]
    field: Option<String>,

    /// Worker threads for suite checks (default: one per CPU).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Least degree of a nonzero form in the m-th symbolic power.
    Alpha {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Hilbert function of the scheme's saturated defining ideal.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        upto: u32,
    },
    /// Decide I^(m) in M^mfactor I^r for the scheme in the file.
    Contain {
        file: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        mfactor: u32,
    },
    /// Singular points of a line arrangement with their multiplicities.
    Singular { file: PathBuf },
    /// Generators of the ideal of k-fold products of the arrangement's lines.
    Subproducts {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Initial-degree table and Waldschmidt-constant bounds.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        mmax: u32,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Prop21,
    Prop32,
    Example33,
    Cor34,
    DualHesse,
    ElsHh,
    Chudnovsky,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Prop21 => "prop21",
            Suite::Prop32 => "prop32",
            Suite::Example33 => "example33",
            Suite::Cor34 => "cor34",
            Suite::DualHesse => "dual-hesse",
            Suite::ElsHh => "els-hh",
            Suite::Chudnovsky => "chudnovsky",
            Suite::All => "all",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // Ignore the error if a pool was already installed.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_file(path: &PathBuf, field: &Option<String>) -> Result<SchemeFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let override_domain: Option<CoeffDomain> = match field {
        Some(name) => Some(parse_field_name(name)?),
        None => None,
    };
    parse_scheme_text_over(&text, override_domain.as_ref())
}

fn scheme_from(file: &SchemeFile) -> Result<FatPointScheme> {
    if !file.points.is_empty() {
        return file.scheme();
    }
    if !file.lines.is_empty() {
        return file.arrangement()?.subproduct_scheme();
    }
    Err(Error::InvalidInput(
        "the file defines neither points nor lines".into(),
    ))
}

fn run(cli: &Cli) -> Result<bool> {
    let (tables, all_ok) = match &cli.cmd {
        Cmd::Alpha { file, m } => {
            let scheme = scheme_from(&load_file(file, &cli.field)?)?;
            let scaled = scheme.scaled(*m);
            let cap = 200;
            let a = alpha_by_conditions(&scaled, cap)?
                .ok_or_else(|| Error::InvalidInput(format!("no form found up to degree {cap}")))?;
            let mut t = Table::new("Least degree in the symbolic power", &["m", "alpha"]);
            t.push(vec![m.to_string(), a.to_string()]);
            (vec![t], true)
        }
        Cmd::Hilbert { file, upto } => {
            let scheme = scheme_from(&load_file(file, &cli.field)?)?;
            let n = scheme.num_vars();
            let mut t = Table::new(
                "Hilbert function of the saturated ideal",
                &["d", "ideal_dim", "quotient_dim"],
            );
            for d in 0..=*upto {
                let dim = symbolic_piece_dim(&scheme, d)? as u64;
                let total = monomial_count(n, d);
                t.push(vec![
                    d.to_string(),
                    dim.to_string(),
                    (total - dim).to_string(),
                ]);
            }
            (vec![t], true)
        }
        Cmd::Contain { file, m, r, mfactor } => {
            let scheme = scheme_from(&load_file(file, &cli.field)?)?;
            let report = symbolic_in_scaled_power(&scheme, *m, *mfactor, *r);
            let mut t = Table::new(
                "Containment",
                &["statement", "holds", "witness_degree"],
            );
            t.push(vec![
                report.description.clone(),
                report.holds.to_string(),
                report
                    .witness_degree()
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into()),
            ]);
            (vec![t], report.holds)
        }
        Cmd::Singular { file } => {
            let arr = load_file(file, &cli.field)?.arrangement()?;
            let sing = arr.singular_points()?;
            let mut t = Table::new("Singular points", &["point", "lines_through"]);
            for (p, m) in sing.points() {
                t.push(vec![p.to_string(), m.to_string()]);
            }
            (vec![t], true)
        }
        Cmd::Subproducts { file, k } => {
            let arr = load_file(file, &cli.field)?.arrangement()?;
            if *k < 1 || *k > arr.num_lines() {
                return Err(Error::InvalidInput(format!(
                    "k must be between 1 and the number of lines ({})",
                    arr.num_lines()
                )));
            }
            let ideal = arr.k_fold_products_ideal(*k);
            let mut t = Table::new(
                "Generators of the k-fold product ideal",
                &["generator", "degree"],
            );
            for g in ideal.generators() {
                t.push(vec![
                    g.to_string(),
                    g.total_degree().map(|d| d.to_string()).unwrap_or_default(),
                ]);
            }
            (vec![t], true)
        }
        Cmd::Bounds { file, mmax } => {
            let scheme = scheme_from(&load_file(file, &cli.field)?)?;
            if *mmax < 1 {
                return Err(Error::InvalidInput("--mmax must be at least 1".into()));
            }
            let mut t = Table::new(
                "Initial degrees and Waldschmidt bounds",
                &["quantity", "value"],
            );
            for m in 1..=*mmax {
                let scaled = scheme.scaled(m);
                let a = alpha_by_conditions(&scaled, 200)?
                    .ok_or_else(|| Error::InvalidInput("no form found up to degree 200".into()))?;
                t.push(vec![format!("alpha(I^({m}))"), a.to_string()]);
            }
            let (lower, upper) = waldschmidt_bounds(&scheme, *mmax)?;
            t.push(vec!["waldschmidt lower bound".into(), lower.to_string()]);
            t.push(vec!["waldschmidt upper bound".into(), upper.to_string()]);
            (vec![t], true)
        }
        Cmd::Verify { suite } => {
            let tables = suites::run_suite(suite.name(), cli.seed);
            let ok = tables.iter().all(suites::table_ok);
            (tables, ok)
        }
    };

    emit(cli, tables)?;
    Ok(all_ok)
}

fn emit(cli: &Cli, mut tables: Vec<Table>) -> Result<()> {
    match &cli.out {
        Some(path) => {
            for t in &mut tables {
                t.drop_column("time_ms");
            }
            let body = render_all(&tables, cli.format);
            fs::write(path, body).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
            })?;
        }
        None => {
            print!("{}", render_all(&tables, cli.format));
        }
    }
    Ok(())
}
