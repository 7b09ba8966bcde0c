//! Command-line front end.
//!
//! Exit codes: `0` every check passed, `1` an exact identity failed, `2`
//! usage, parse or I/O error.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::error::QError;
use crate::io::{read_series_csv, series_from_json, series_to_json, write_series_csv, FormatError};
use crate::operators::{
    classical_hermite_op, classical_schrodinger_op, limit_sweep, second_order_composed,
    second_order_direct, susy_pair_limit, t_minus_q, t_plus_q, write_limit_csv, LimitRow, Partner,
    QOperator,
};
use crate::qcore::{format_rational, parse_rational, rat, to_f64, Deformation, Rational};
use crate::qspecial::{
    beta_q, beta_q_float, delta_beta_q, q_exp_float, q_gauss, q_hermite, u_transform, VacuumSpec,
};
use crate::series::PowerSeries;
use crate::verify::{
    classical_suite, default_cells, factorization_suite, kernel_suite, leibniz_suite, limits_suite,
    Report,
};

pub const DEFAULT_ORDER: usize = 32;
pub const MIN_ORDER: usize = 4;
pub const ORDER_ENV: &str = "QSUSY_ORDER";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Value(#[from] QError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Format(FormatError::Csv(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    #[value(name = "Ob")]
    Ob,
    #[value(name = "Of")]
    Of,
    #[value(name = "Tplus")]
    Tplus,
    #[value(name = "Tminus")]
    Tminus,
    #[value(name = "h0")]
    H0,
    #[value(name = "h1")]
    H1,
    #[value(name = "OH")]
    OH,
    #[value(name = "Ophi")]
    Ophi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Direct,
    Composed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Kernel,
    Factorization,
    Leibniz,
    Limits,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFunction {
    Beta,
    DeltaBeta,
    Gauss,
    Hermite,
    Ufunc,
    Op,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Hermite,
    Beta,
    Ufunc,
    Apply,
    Verify,
    Limit,
    Table,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Hermite => "hermite",
            Command::Beta => "beta",
            Command::Ufunc => "ufunc",
            Command::Apply => "apply",
            Command::Verify => "verify",
            Command::Limit => "limit",
            Command::Table => "table",
        };
        f.write_str(s)
    }
}

/// A validated run. Fields a command does not use keep their defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// Deformation; `None` lets `verify` sweep its default grid.
    pub q: Option<Rational>,
    pub beta: Option<Rational>,
    pub order: usize,
    /// Hermite index `n` or transformation index `p`.
    pub n_or_p: usize,
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub emit: Emit,
    pub op: OpKind,
    pub form: Form,
    pub suite: Option<Suite>,
    pub qs: Vec<Rational>,
    pub grid: Vec<Rational>,
    pub function: Option<TableFunction>,
    pub delta: bool,
}

impl RunConfig {
    pub fn deformation(&self) -> Deformation {
        let q = self.q.clone().unwrap_or_else(|| rat(3, 2));
        Deformation::new(q).expect("validated at parse time")
    }

    pub fn vacuum(&self) -> VacuumSpec {
        let beta = self.beta.clone().unwrap_or_else(|| rat(-1, 2));
        VacuumSpec::new(beta, self.deformation(), self.order).expect("validated at parse time")
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(rational_arg)
        .collect()
}

#[derive(Debug, Parser)]
#[command(
    name = "qsusy",
    version,
    about = "Exact symmetric q-calculus and q-nonlocal SUSY partners"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Args)]
struct Common {
    /// Deformation parameter, "p/q" or a decimal (parsed exactly)
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Vacuum parameter beta (default -1/2)
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Truncation order (default: $QSUSY_ORDER or 32)
    #[arg(long)]
    order: Option<usize>,
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Deformed Rodrigues function H_n^(q)
    Hermite {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Drift series beta_q(x^2), or delta beta_q with --delta
    Beta {
        #[arg(long)]
        delta: bool,
        #[command(flatten)]
        common: Common,
    },
    /// i-rotated transformation function u_p^(q), p even
    Ufunc {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Apply an operator to a series read from --input (default: the vacuum)
    Apply {
        #[arg(long, value_enum)]
        op: OpKind,
        #[arg(long, value_enum, default_value = "direct")]
        form: Form,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run an identity suite and emit a JSON report
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Deviation from the q = 1 operator along a list of q values
    Limit {
        #[arg(
            long,
            default_value = "2,3/2,5/4,9/8,17/16,1",
            allow_hyphen_values = true
        )]
        qs: String,
        #[arg(long, value_enum, default_value = "Ob")]
        op: OpKind,
        #[arg(long, value_enum, default_value = "composed")]
        form: Form,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Floating-point (x, value) table on a grid
    Table {
        #[arg(long, value_enum)]
        function: TableFunction,
        /// Comma-separated grid points
        #[arg(long, allow_hyphen_values = true)]
        xs: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x_min: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x_max: Option<String>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, value_enum, default_value = "Ob")]
        op: OpKind,
        #[arg(long, value_enum, default_value = "direct")]
        form: Form,
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

fn resolve_order(flag: Option<usize>) -> Result<usize, CliError> {
    let order = match flag {
        Some(o) => o,
        None => match std::env::var(ORDER_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{ORDER_ENV}={v:?} is not an order")))?,
            Err(_) => DEFAULT_ORDER,
        },
    };
    if order < MIN_ORDER {
        return Err(CliError::Usage(format!(
            "order must be at least {MIN_ORDER}, got {order}"
        )));
    }
    Ok(order)
}

fn parse_q(s: &str) -> Result<Rational, CliError> {
    let q = parse_rational(s)?;
    if !q.is_positive() {
        return Err(CliError::Usage(format!("q must be positive, got {s}")));
    }
    Ok(q)
}

fn parse_grid(
    xs: Option<String>,
    x_min: Option<String>,
    x_max: Option<String>,
    steps: Option<usize>,
) -> Result<Vec<Rational>, CliError> {
    if let Some(list) = xs {
        return rational_list(&list).map_err(CliError::Usage);
    }
    let (lo, hi) = match (x_min, x_max) {
        (Some(lo), Some(hi)) => (parse_rational(&lo)?, parse_rational(&hi)?),
        (None, None) => (rat(-1, 1), rat(1, 1)),
        _ => return Err(CliError::Usage("give both --x-min and --x-max".into())),
    };
    let steps = steps.unwrap_or(9);
    Ok(match steps {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let width = &hi - &lo;
            (0..steps)
                .map(|i| &lo + &width * rat(i as i64, steps as i64 - 1))
                .collect()
        }
    })
}

/// Parses and validates an argument vector (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut cfg = RunConfig {
        command: Command::Hermite,
        q: None,
        beta: None,
        order: DEFAULT_ORDER,
        n_or_p: 0,
        input: None,
        output: None,
        emit: Emit::Json,
        op: OpKind::Ob,
        form: Form::Direct,
        suite: None,
        qs: Vec::new(),
        grid: Vec::new(),
        function: None,
        delta: false,
    };
    let common = match cli.command {
        Cmd::Hermite { n, common } => {
            cfg.command = Command::Hermite;
            cfg.n_or_p = n;
            common
        }
        Cmd::Beta { delta, common } => {
            cfg.command = Command::Beta;
            cfg.delta = delta;
            common
        }
        Cmd::Ufunc { p, common } => {
            cfg.command = Command::Ufunc;
            cfg.n_or_p = p;
            common
        }
        Cmd::Apply {
            op,
            form,
            n,
            input,
            common,
        } => {
            cfg.command = Command::Apply;
            (cfg.op, cfg.form, cfg.n_or_p, cfg.input) = (op, form, n, input);
            common
        }
        Cmd::Verify { suite, common } => {
            cfg.command = Command::Verify;
            cfg.suite = Some(suite);
            common
        }
        Cmd::Limit {
            qs,
            op,
            form,
            input,
            common,
        } => {
            cfg.command = Command::Limit;
            cfg.qs = rational_list(&qs).map_err(CliError::Usage)?;
            if let Some(bad) = cfg.qs.iter().find(|q| !q.is_positive()) {
                return Err(CliError::Usage(format!("q must be positive, got {bad}")));
            }
            (cfg.op, cfg.form, cfg.input) = (op, form, input);
            common
        }
        Cmd::Table {
            function,
            xs,
            x_min,
            x_max,
            steps,
            n,
            op,
            form,
            input,
            common,
        } => {
            cfg.command = Command::Table;
            cfg.function = Some(function);
            cfg.grid = parse_grid(xs, x_min, x_max, steps)?;
            (cfg.n_or_p, cfg.op, cfg.form, cfg.input) = (n, op, form, input);
            common
        }
    };
    cfg.q = common.q.as_deref().map(parse_q).transpose()?;
    cfg.beta = common.beta.as_deref().map(parse_rational).transpose()?;
    if cfg.beta.as_ref().is_some_and(num_traits::Zero::is_zero) {
        return Err(QError::ZeroBeta.into());
    }
    cfg.order = resolve_order(common.order)?;
    cfg.output = common.output;
    cfg.emit = common.emit;
    Ok(cfg)
}

fn read_input(path: &PathBuf) -> Result<PowerSeries, CliError> {
    let text = fs::read_to_string(path)?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    Ok(if is_csv {
        read_series_csv(text.as_bytes())?
    } else {
        series_from_json(&text)?
    })
}

fn emit_series(s: &PowerSeries, emit: Emit) -> Result<Vec<u8>, CliError> {
    Ok(match emit {
        Emit::Json => {
            let mut text = series_to_json(s);
            text.push('\n');
            text.into_bytes()
        }
        Emit::Csv => {
            let mut buf = Vec::new();
            write_series_csv(s, &mut buf)?;
            buf
        }
    })
}

/// Builds the operator selected by `--op` at the configured vacuum.
pub fn build_operator(cfg: &RunConfig, v: &VacuumSpec) -> QOperator {
    match cfg.op {
        OpKind::Ob | OpKind::Of => {
            let which = if cfg.op == OpKind::Ob {
                Partner::B
            } else {
                Partner::F
            };
            match cfg.form {
                Form::Direct => second_order_direct(v, which),
                Form::Composed => second_order_composed(v, which),
            }
        }
        OpKind::Tplus => t_plus_q(v),
        OpKind::Tminus => t_minus_q(v),
        OpKind::H0 => susy_pair_limit(v).0,
        OpKind::H1 => susy_pair_limit(v).1,
        OpKind::OH => classical_hermite_op(cfg.n_or_p),
        OpKind::Ophi => classical_schrodinger_op(cfg.n_or_p),
    }
}

/// Runs the verify suite selected in the config.
pub fn run_verify(cfg: &RunConfig) -> Report {
    let cells = match (&cfg.q, &cfg.beta) {
        (None, None) => default_cells(cfg.order),
        _ => vec![cfg.vacuum()],
    };
    let checks = match cfg.suite.unwrap_or(Suite::Kernel) {
        Suite::Kernel => kernel_suite(&cells),
        Suite::Factorization => factorization_suite(&cells),
        Suite::Leibniz => {
            let qs = match &cfg.q {
                Some(_) => vec![cfg.deformation()],
                None => vec![Deformation::from_ratio(2, 1), Deformation::from_ratio(3, 2)],
            };
            leibniz_suite(&qs, 200, 0x5eed)
        }
        Suite::Limits => {
            let betas = match &cfg.beta {
                Some(b) => vec![b.clone()],
                None => vec![rat(-1, 2), rat(1, 2)],
            };
            limits_suite(&betas, cfg.order)
        }
        Suite::Classical => classical_suite(6, cfg.order),
    };
    Report::new(checks)
}

/// `(x, value)` rows in floating point. For operator tables the point `x = 0`
/// is taken from the series result, where the q-difference quotient is
/// undefined.
pub fn run_table(cfg: &RunConfig) -> Result<Vec<(f64, f64)>, CliError> {
    let function = cfg
        .function
        .ok_or_else(|| CliError::Usage("table needs --function".into()))?;
    let d = cfg.deformation();
    let q = d.to_f64();
    let v = cfg.vacuum();
    let beta = to_f64(v.beta());
    let eval: Box<dyn Fn(f64) -> f64> = match function {
        TableFunction::Beta => Box::new(move |x| beta_q_float(beta, q, x)),
        TableFunction::DeltaBeta => {
            Box::new(move |x| beta_q_float(beta, q, x) - beta_q_float(beta, q, x / q) / q)
        }
        TableFunction::Gauss => Box::new(move |x| q_exp_float(beta * x * x, q)),
        TableFunction::Hermite => {
            let h = q_hermite(cfg.n_or_p, &d, cfg.order.max(cfg.n_or_p + 2))?;
            Box::new(move |x| h.evaluate_float(x))
        }
        TableFunction::Ufunc => {
            let u = u_transform(cfg.n_or_p, &d, cfg.order)?;
            Box::new(move |x| u.evaluate_float(x))
        }
        TableFunction::Op => {
            let probe = match &cfg.input {
                Some(path) => read_input(path)?,
                None => PowerSeries::one(cfg.order),
            };
            let op = build_operator(cfg, &v);
            let at_zero = op.apply(&probe).evaluate_float(0.0);
            Box::new(move |x| {
                if x == 0.0 {
                    at_zero
                } else {
                    op.apply_point_series(&probe, x)
                }
            })
        }
    };
    Ok(cfg
        .grid
        .iter()
        .map(|x| {
            let x = to_f64(x);
            (x, eval(x))
        })
        .collect())
}

#[derive(Serialize)]
struct TableRow {
    x: f64,
    value: f64,
}

fn table_bytes(rows: &[(f64, f64)], emit: Emit) -> Result<Vec<u8>, CliError> {
    let records: Vec<TableRow> = rows
        .iter()
        .map(|&(x, value)| TableRow { x, value })
        .collect();
    Ok(match emit {
        Emit::Json => {
            let mut text = serde_json::to_string_pretty(&records).map_err(FormatError::from)?;
            text.push('\n');
            text.into_bytes()
        }
        Emit::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if records.is_empty() {
                w.write_record(["x", "value"])?;
            }
            for r in &records {
                w.serialize(r)?;
            }
            w.into_inner().map_err(|e| CliError::Io(e.into_error()))?
        }
    })
}

/// Deviation rows for `limit`.
pub fn run_limit(cfg: &RunConfig) -> Result<Vec<LimitRow>, CliError> {
    let base = cfg.vacuum();
    let probe = match &cfg.input {
        Some(path) => read_input(path)?,
        None => q_gauss(&VacuumSpec::new(
            base.beta().clone(),
            Deformation::classical(),
            cfg.order,
        )?),
    };
    let rows = limit_sweep(
        |d| build_operator(cfg, &base.with_deformation(d.clone())),
        &cfg.qs,
        &probe,
    )?;
    Ok(rows)
}

#[derive(Serialize)]
struct LimitJson {
    q: String,
    deviation: String,
    deviation_float: f64,
}

/// Executes a parsed config, writing the primary artifact to `--output` or
/// `stdout`. Returns the process exit code.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let mut code = EXIT_PASS;
    let bytes = match cfg.command {
        Command::Hermite => emit_series(
            &q_hermite(cfg.n_or_p, &cfg.deformation(), cfg.order)?,
            cfg.emit,
        )?,
        Command::Beta => {
            let v = cfg.vacuum();
            let s = if cfg.delta {
                delta_beta_q(&v)
            } else {
                beta_q(&v)
            };
            emit_series(&s, cfg.emit)?
        }
        Command::Ufunc => emit_series(
            &u_transform(cfg.n_or_p, &cfg.deformation(), cfg.order)?,
            cfg.emit,
        )?,
        Command::Apply => {
            let v = cfg.vacuum();
            let input = match &cfg.input {
                Some(path) => read_input(path)?,
                None => q_gauss(&v),
            };
            if input.order() < 2 {
                return Err(CliError::Usage("input series needs order >= 2".into()));
            }
            emit_series(&build_operator(cfg, &v).apply(&input), cfg.emit)?
        }
        Command::Verify => {
            let report = run_verify(cfg);
            if !report.all_pass() {
                code = EXIT_FAIL;
            }
            let mut text = report.to_json();
            text.push('\n');
            text.into_bytes()
        }
        Command::Limit => {
            let rows = run_limit(cfg)?;
            match cfg.emit {
                Emit::Csv => {
                    let mut buf = Vec::new();
                    write_limit_csv(&rows, &mut buf)?;
                    buf
                }
                Emit::Json => {
                    let recs: Vec<LimitJson> = rows
                        .iter()
                        .map(|r| LimitJson {
                            q: format_rational(&r.q),
                            deviation: format_rational(&r.deviation),
                            deviation_float: r.deviation_f64(),
                        })
                        .collect();
                    let mut text =
                        serde_json::to_string_pretty(&recs).map_err(FormatError::from)?;
                    text.push('\n');
                    text.into_bytes()
                }
            }
        }
        Command::Table => table_bytes(&run_table(cfg)?, cfg.emit)?,
    };
    match &cfg.output {
        Some(path) => fs::write(path, bytes)?,
        None => stdout.write_all(&bytes)?,
    }
    Ok(code)
}

/// Entry point for the binary: parse, run, map errors to exit codes.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    if let Err(e) = Cli::try_parse_from(&args) {
        if matches!(
            e.kind(),
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
        ) {
            print!("{e}");
            return EXIT_PASS;
        }
    }
    let cfg = match parse_args(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cfg, &mut std::io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qsusy {}: {e}", cfg.command);
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        std::iter::once("qsusy".to_string())
            .chain(s.split_whitespace().map(String::from))
            .collect()
    }

    #[test]
    fn parses_hermite() {
        let cfg = parse_args(args("hermite --n 3 --q 3/2 --order 24")).unwrap();
        assert_eq!(cfg.command, Command::Hermite);
        assert_eq!(cfg.n_or_p, 3);
        assert_eq!(cfg.q, Some(rat(3, 2)));
        assert_eq!(cfg.order, 24);
    }

    #[test]
    fn decimal_q_is_exact() {
        let cfg = parse_args(args("beta --q 1.5 --order 8")).unwrap();
        assert_eq!(cfg.q, Some(rat(3, 2)));
        let cfg = parse_args(args("beta --beta -0.5 --order 8")).unwrap();
        assert_eq!(cfg.beta, Some(rat(-1, 2)));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "hermite --n 3 --q 0",
            "hermite --n 3 --q -2",
            "hermite --n 3 --q abc",
            "hermite --n 3 --order 3",
            "frobnicate",
            "beta --beta 0",
            "limit --qs 2,0",
            "table --function beta --x-min 0",
        ] {
            assert!(parse_args(args(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn grid_construction() {
        let cfg = parse_args(args("table --function beta --x-min -1 --x-max 1 --steps 5")).unwrap();
        assert_eq!(
            cfg.grid,
            vec![rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2), rat(1, 1)]
        );
        let cfg = parse_args(args("table --function beta --steps 0")).unwrap();
        assert!(cfg.grid.is_empty());
    }

    #[test]
    fn beta_table_is_even_and_classically_flat() {
        let cfg = parse_args(args("table --function beta --q 3/2 --steps 9")).unwrap();
        let rows = run_table(&cfg).unwrap();
        assert_eq!(rows.len(), 9);
        for i in 0..9 {
            let (x, y) = rows[i];
            let (mx, my) = rows[8 - i];
            assert_eq!(x, -mx);
            assert!(y.is_finite());
            assert!((y - my).abs() <= 1e-15 * y.abs());
        }
        let cfg = parse_args(args("table --function beta --q 1 --steps 9")).unwrap();
        assert!(run_table(&cfg).unwrap().iter().all(|&(_, y)| y == -1.0));
    }

    #[test]
    fn empty_table_has_header() {
        let cfg = parse_args(args("table --function beta --steps 0 --emit csv")).unwrap();
        let mut out = Vec::new();
        execute(&cfg, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "x,value\n");
    }

    #[test]
    fn operator_table_falls_back_to_series_at_origin() {
        let cfg = parse_args(args("table --function op --op Ob --q 3/2 --xs -1/4,0,1/4")).unwrap();
        let rows = run_table(&cfg).unwrap();
        let v = cfg.vacuum();
        let expected = second_order_direct(&v, Partner::B)
            .apply(&PowerSeries::one(cfg.order))
            .evaluate_float(0.0);
        assert_eq!(rows[1], (0.0, expected));
        assert!(rows[0].1.is_finite() && rows[2].1.is_finite());
    }
}
