//! Command-line front end for the `eulerian123` library.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;

use eulerian123::series::{self, Specializations};
use eulerian123::tables::{self, DEFAULT_PATH_ORACLE_BOUND, DEFAULT_PERM_ORACLE_BOUND};
use eulerian123::{export, BigTables, BijectionError, CheckReport};

#[derive(Debug, Parser)]
#[command(
    name = "eulerian123",
    version,
    about = "Descents of 123-avoiding permutations via Dyck paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Send a 123-avoiding permutation to its Dyck path.
    Map {
        /// One-line notation, e.g. "5 7 2 6 4 3 1".
        permutation: String,
        /// Also print des, v, tf and whether des = v + tf.
        #[arg(long)]
        stats: bool,
    },
    /// Recover the permutation from a U/D path.
    Unmap { path: String },
    /// Descent distribution e(n,k) for n = 0..=N.
    Eulerian {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Joint valley / triple-fall counts (n, p, q, count).
    Tristat {
        #[arg(long)]
        max_n: usize,
        /// Irreducible paths only.
        #[arg(long)]
        irreducible: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run verification suites and print one PASS/FAIL line per identity.
    Check {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        /// Lift the enumeration caps (paths 12, permutations 10).
        #[arg(long)]
        unsafe_bounds: bool,
    },
    /// Catalan, Motzkin, Narayana and triple-fall specializations.
    Specials {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = SpecialsFormat::Text)]
        format: SpecialsFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpecialsFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Equations,
    Theorem5,
    Theorem6,
    Specials,
    All,
}

enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Internal(m) => m,
        }
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn tables(max_n: usize) -> Result<BigTables, Failure> {
    tables::build_tables::<BigUint>(max_n).map_err(internal)
}

fn map(out: &mut impl Write, text: &str, stats: bool) -> Result<(), Failure> {
    let p = eulerian123::parse_permutation(text).map_err(|e| Failure::Usage(e.to_string()))?;
    let domain = |e: BijectionError| Failure::Domain(e.to_string());
    let path = eulerian123::kappa(&p).map_err(domain)?;
    writeln!(out, "{path}").map_err(internal)?;
    if stats {
        let c = eulerian123::check_descent_identity(&p).map_err(domain)?;
        let status = if c.holds() { "OK" } else { "FAIL" };
        writeln!(
            out,
            "des={} v={} tf={} {status}",
            c.descents, c.valleys, c.triple_falls
        )
        .map_err(internal)?;
    }
    Ok(())
}

fn unmap(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    let path = eulerian123::parse_path(text).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{}", eulerian123::kappa_inverse(&path)).map_err(internal)
}

fn eulerian(out: &mut impl Write, max_n: usize, format: Format) -> Result<(), Failure> {
    let rows = tables(max_n)?.eulerian_rows().map_err(internal)?;
    match format {
        Format::Csv => export::write_eulerian_csv(out, &rows).map_err(internal),
        Format::Json => writeln!(out, "{}", export::eulerian_json(&rows)).map_err(internal),
    }
}

fn tristat(
    out: &mut impl Write,
    max_n: usize,
    irreducible: bool,
    format: Format,
) -> Result<(), Failure> {
    let t = tables(max_n)?;
    let table = if irreducible { &t.irreducible } else { &t.all };
    match format {
        Format::Csv => export::write_tristat_csv(out, table, max_n).map_err(internal),
        Format::Json => writeln!(out, "{}", export::tristat_json(table, max_n)).map_err(internal),
    }
}

fn check(
    out: &mut impl Write,
    suite: Suite,
    max_n: usize,
    unsafe_bounds: bool,
) -> Result<bool, Failure> {
    let enumerates = matches!(suite, Suite::Oracle | Suite::Specials | Suite::All);
    let (path_bound, perm_bound) = if unsafe_bounds {
        (usize::MAX, usize::MAX)
    } else {
        (DEFAULT_PATH_ORACLE_BOUND, DEFAULT_PERM_ORACLE_BOUND)
    };
    if enumerates && max_n > path_bound {
        return Err(Failure::Usage(format!(
            "--max-n {max_n} exceeds the path enumeration bound {path_bound}; pass --unsafe-bounds to override"
        )));
    }
    let t = tables(max_n)?;
    let wants = |s: Suite| suite == s || suite == Suite::All;
    let mut report = CheckReport::default();

    if wants(Suite::Oracle) {
        let perm_order = max_n.min(perm_bound);
        report.extend(
            tables::check_oracles(&t, max_n, perm_order, path_bound, perm_bound)
                .map_err(internal)?,
        );
    }
    if wants(Suite::Equations) {
        report.extend(
            series::check_functional_equations::<_, BigRational>(&t, max_n).map_err(internal)?,
        );
    }
    if wants(Suite::Theorem5) {
        report.extend(series::check_closed_form_a::<_, BigRational>(&t, max_n).map_err(internal)?);
    }
    if wants(Suite::Theorem6) {
        report.extend(series::check_closed_form_e::<_, BigRational>(&t, max_n).map_err(internal)?);
    }
    if wants(Suite::Specials) {
        let specs = series::specializations(&t, max_n).map_err(internal)?;
        report.extend(series::check_specializations(&specs, max_n, path_bound).map_err(internal)?);
    }
    write!(out, "{report}").map_err(internal)?;
    Ok(report.all_pass())
}

fn join(v: &[impl ToString]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_specials_text(out: &mut impl Write, specs: &Specializations) -> io::Result<()> {
    writeln!(out, "catalan: {}", join(&specs.catalan))?;
    writeln!(out, "motzkin: {}", join(&specs.motzkin))?;
    for (n, row) in specs.narayana.iter().enumerate() {
        writeln!(out, "narayana n={n}: {}", join(row))?;
    }
    for (n, row) in specs.triple_falls.iter().enumerate() {
        writeln!(out, "triple-falls n={n}: {}", join(row))?;
    }
    Ok(())
}

fn specials(out: &mut impl Write, max_n: usize, format: SpecialsFormat) -> Result<(), Failure> {
    let specs = series::specializations(&tables(max_n)?, max_n).map_err(internal)?;
    match format {
        SpecialsFormat::Text => write_specials_text(out, &specs).map_err(internal),
        SpecialsFormat::Json => {
            writeln!(out, "{}", export::specializations_json(&specs)).map_err(internal)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let passed = match cli.command {
        Command::Map { permutation, stats } => map(&mut out, &permutation, stats).map(|_| true),
        Command::Unmap { path } => unmap(&mut out, &path).map(|_| true),
        Command::Eulerian { max_n, format } => eulerian(&mut out, max_n, format).map(|_| true),
        Command::Tristat {
            max_n,
            irreducible,
            format,
        } => tristat(&mut out, max_n, irreducible, format).map(|_| true),
        Command::Check {
            suite,
            max_n,
            unsafe_bounds,
        } => check(&mut out, suite, max_n, unsafe_bounds),
        Command::Specials { max_n, format } => specials(&mut out, max_n, format).map(|_| true),
    }?;
    out.flush().map_err(internal)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
