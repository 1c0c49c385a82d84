//! Command-line reports over the boxed-oscillator solver.
//!
//! Four subcommands cover the common questions: `shift` for one level,
//! `table1` and `table2` for the standard ground/excited comparison tables,
//! and `spectrum` for every level at one confinement (optionally checked
//! against the finite-difference oracle). All data goes to stdout in the
//! selected format; warnings and diagnostics go to stderr so stdout stays
//! machine-readable and byte-reproducible.
//!
//! Exit codes: 0 success, 2 usage (bad flags or out-of-domain inputs),
//! 3 numerical failure (the message names the level and confinement).

mod report;

use boxwell::{
    barton_excited_asym, barton_excited_integral, barton_ground_integral, default_cutoff,
    fd_spectrum, level_nu, spectrum, Confinement, Error, FdConfig, Level, SeriesConfig,
};
use clap::{Parser, Subcommand, ValueEnum};
use report::{sci, Cell};
use std::process::ExitCode;

const REPORT_HEADER: [&str; 10] = [
    "k",
    "n",
    "parity",
    "nu",
    "shift_exact",
    "shift_barton_asym",
    "shift_barton_integral",
    "ratio",
    "method",
    "residual",
];

const SPECTRUM_HEADER: [&str; 10] = [
    "k",
    "n",
    "parity",
    "nu",
    "delta",
    "energy_free",
    "energy_confined",
    "shift",
    "method",
    "residual",
];

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Csv,
    Json,
    Markdown,
}

#[derive(Parser)]
#[command(
    name = "boxwell",
    version,
    about = "Energy shifts of a harmonic oscillator between hard walls"
)]
struct Cli {
    /// Cap on series terms per evaluation (also honors BOXWELL_MAX_TERMS).
    #[arg(long, global = true, env = "BOXWELL_MAX_TERMS")]
    max_terms: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact shift of one level with both closed-form estimates.
    Shift {
        /// Box half-width in oscillator lengths.
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        /// Level index, ground state is 0.
        #[arg(long)]
        n: u32,
        /// Relative series tolerance.
        #[arg(long, allow_negative_numbers = true)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Ground-level shifts across k = 1, 3, 4, 5, 6, 7, 10.
    Table1 {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Excited-level shifts for k = 3 (n = 1..2) and k = 5, 6 (n = 1..3).
    Table2 {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Every level at one confinement, ground state up.
    Spectrum {
        /// Box half-width in oscillator lengths.
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        /// How many levels to solve.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=65))]
        levels: u32,
        /// Append finite-difference oracle energies for cross-checking.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum CliError {
    Usage(String),
    Numeric(String),
}

/// A bad `SeriesConfig` can only come from user-supplied knobs, so it is a
/// usage error even when the solver reports it wrapped in level context.
fn is_config_error(e: &Error) -> bool {
    match e {
        Error::InvalidConfig { .. } => true,
        Error::AtLevel { source, .. } => is_config_error(source),
        _ => false,
    }
}

fn solver_err(e: Error) -> CliError {
    if is_config_error(&e) {
        CliError::Usage(e.to_string())
    } else {
        CliError::Numeric(e.to_string())
    }
}

fn confinement(k: f64) -> Result<Confinement, CliError> {
    Confinement::new(k).map_err(|e| CliError::Usage(e.to_string()))
}

fn level(n: u32) -> Result<Level, CliError> {
    Level::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

fn series_config(max_terms: Option<usize>, tol: Option<f64>) -> SeriesConfig {
    let mut cfg = SeriesConfig::default();
    if let Some(m) = max_terms {
        cfg.max_terms = m;
    }
    if let Some(t) = tol {
        cfg.rel_tol = t;
    }
    cfg
}

/// The integral estimate is genuinely unavailable in parts of the domain
/// (node at or beyond the wall, exponent overflow); those cases become an
/// empty cell rather than a failure.
fn integral_value(n: Level, k: Confinement) -> Result<Option<f64>, CliError> {
    let attempt = if n.index() == 0 {
        barton_ground_integral(k)
    } else {
        match default_cutoff(n, k) {
            Ok(a) => barton_excited_integral(n, k, a),
            Err(e @ Error::Domain { .. }) => Err(e),
            Err(e) => return Err(solver_err(e)),
        }
    };
    match attempt {
        Ok(est) => Ok(Some(est.value)),
        Err(Error::Domain { .. }) | Err(Error::Overflow { .. }) => Ok(None),
        Err(e) => Err(solver_err(e)),
    }
}

/// One comparison row: exact shift, both estimates, and their ratio.
/// Returns the cells plus the exact/asymptotic ratio for aggregation.
fn estimate_row(n: Level, k: Confinement, cfg: &SeriesConfig) -> Result<(Vec<Cell>, f64), CliError> {
    let idx = level_nu(n, k, cfg).map_err(solver_err)?;
    let asym = barton_excited_asym(n, k).map_err(solver_err)?.value;
    let integral = integral_value(n, k)?;
    let ratio = idx.delta / asym;
    let cells = vec![
        Cell::Num(k.half_width()),
        Cell::Int(n.index()),
        Cell::Str(n.parity().as_str()),
        Cell::Num(idx.nu),
        Cell::Num(idx.delta),
        Cell::Num(asym),
        integral.map_or(Cell::Missing, Cell::Num),
        Cell::Num(ratio),
        Cell::Str(idx.method.as_str()),
        Cell::Num(idx.residual),
    ];
    Ok((cells, ratio))
}

fn emit(format: Format, header: &[&str], rows: &[Vec<Cell>]) {
    let text = match format {
        Format::Csv => report::csv(header, rows),
        Format::Json => report::json(header, rows),
        Format::Markdown => report::markdown(header, rows),
    };
    print!("{text}");
}

fn cmd_shift(k: f64, n: u32, tol: Option<f64>, format: Format, max_terms: Option<usize>) -> Result<(), CliError> {
    let k = confinement(k)?;
    let n = level(n)?;
    let cfg = series_config(max_terms, tol);
    let (cells, _) = estimate_row(n, k, &cfg)?;
    emit(format, &REPORT_HEADER, &[cells]);
    Ok(())
}

fn cmd_table1(format: Format, max_terms: Option<usize>) -> Result<(), CliError> {
    let cfg = series_config(max_terms, None);
    let ground = level(0)?;
    let mut rows = Vec::new();
    for kw in [1.0, 3.0, 4.0, 5.0, 6.0, 7.0, 10.0] {
        let k = confinement(kw)?;
        let (cells, _) = estimate_row(ground, k, &cfg)?;
        if kw == 10.0 {
            // Cross-check note: a frequently quoted value for this entry,
            // 36.769e-43, disagrees with both the present solve and the
            // closed-form estimate by a factor of ~8.8; the table carries
            // the computed value.
            let exact = level_nu(ground, k, &cfg).map_err(solver_err)?.delta;
            let asym = barton_excited_asym(ground, k).map_err(solver_err)?.value;
            eprintln!(
                "warning: k = 10 ground shift: computed {} (closed-form estimate {}); \
                 the often-quoted 36.769e-43 fails this cross-check",
                sci(exact),
                sci(asym)
            );
        }
        rows.push(cells);
    }
    emit(format, &REPORT_HEADER, &rows);
    Ok(())
}

fn cmd_table2(format: Format, max_terms: Option<usize>) -> Result<(), CliError> {
    let cfg = series_config(max_terms, None);
    let groups: [(f64, &[u32]); 3] = [(3.0, &[1, 2]), (5.0, &[1, 2, 3]), (6.0, &[1, 2, 3])];
    let mut rows = Vec::new();
    let mut means = Vec::new();
    for (kw, levels) in groups {
        let k = confinement(kw)?;
        let mut ratios = Vec::new();
        for &nn in levels {
            let (cells, ratio) = estimate_row(level(nn)?, k, &cfg)?;
            ratios.push(ratio);
            rows.push(cells);
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        means.push((kw, mean, *levels.first().unwrap(), *levels.last().unwrap()));
    }
    emit(format, &REPORT_HEADER, &rows);
    match format {
        Format::Markdown => {
            println!("\nMean exact/asymptotic ratio per confinement:\n");
            for (kw, mean, lo, hi) in &means {
                println!("- k = {kw}: {} (levels {lo}-{hi})", sci(*mean));
            }
        }
        // Keep machine-readable stdout limited to the row schema; the
        // aggregate goes to stderr.
        _ => {
            for (kw, mean, lo, hi) in &means {
                eprintln!("mean exact/asymptotic ratio at k = {kw}: {} (levels {lo}-{hi})", sci(*mean));
            }
        }
    }
    Ok(())
}

fn cmd_spectrum(k: f64, levels: u32, oracle: bool, format: Format, max_terms: Option<usize>) -> Result<(), CliError> {
    let k = confinement(k)?;
    let n_max = levels - 1;
    level(n_max)?;
    let cfg = series_config(max_terms, None);
    let solved = spectrum(k, n_max, &cfg).map_err(solver_err)?;
    let fd = if oracle {
        Some(fd_spectrum(k, Level::new(n_max).expect("checked above"), &FdConfig::default()).map_err(solver_err)?)
    } else {
        None
    };
    let mut header: Vec<&str> = SPECTRUM_HEADER.to_vec();
    if oracle {
        header.push("fd_energy");
        header.push("fd_shift");
    }
    let mut rows = Vec::with_capacity(solved.len());
    for row in &solved {
        let mut cells = vec![
            Cell::Num(row.k),
            Cell::Int(row.n),
            Cell::Str(row.parity.as_str()),
            Cell::Num(row.nu),
            Cell::Num(row.delta),
            Cell::Num(row.energy_free),
            Cell::Num(row.energy_confined),
            Cell::Num(row.shift),
            Cell::Str(row.method.as_str()),
            Cell::Num(row.residual),
        ];
        if let Some(fd) = &fd {
            let e = fd[row.n as usize];
            cells.push(Cell::Num(e));
            cells.push(Cell::Num(e - row.energy_free));
        }
        rows.push(cells);
    }
    emit(format, &header, &rows);
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let max_terms = cli.max_terms;
    match cli.command {
        Cmd::Shift { k, n, tol, format } => cmd_shift(k, n, tol, format, max_terms),
        Cmd::Table1 { format } => cmd_table1(format, max_terms),
        Cmd::Table2 { format } => cmd_table2(format, max_terms),
        Cmd::Spectrum { k, levels, oracle, format } => {
            cmd_spectrum(k, levels, oracle, format, max_terms)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
