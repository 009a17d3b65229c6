//! Command-line front end. `run` parses arguments, writes to `out`, and
//! returns the process exit status: 0 on success, 1 when a verification
//! check fails, 2 for usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ladder::{
    commutator_from_coeffs, ladder_coeffs, lower_residual, raise_residual, NormTable, RaiseForm,
};
use crate::report::{verify, Suite, VerifyOptions};
use crate::spectrum::{energy_paper_exact, entry, Mode};
use crate::wavefunction::{
    fmt17, make_state, normalize_quadrature, normalize_symbolic, sample, tabulated_norm, GridSpec,
};
use crate::Tolerances;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hulthen",
    version,
    about = "Hulthen potential bound states and their ladder algebra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels (n, s, epsilon, E/V0).
    Spectrum(SpectrumArgs),
    /// Sample a normalized eigenfunction on a grid in y as CSV.
    Wavefunction(WavefunctionArgs),
    /// Compare quadrature, exact and tabulated normalization constants.
    Normalization(NormalizationArgs),
    /// Ladder eigen-factors and pointwise residuals on the fixed-s family.
    Ladder(LadderArgs),
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridKind {
    Closed,
    Interior,
    Chebyshev,
}

#[derive(Debug, Args)]
pub struct ModeOpts {
    #[arg(long, value_enum, default_value = "paper")]
    pub mode: ModeArg,
    /// Coupling 2 M V0 a^2; generalized mode only.
    #[arg(long)]
    pub beta: Option<f64>,
}

impl ModeOpts {
    fn resolve(&self) -> Result<Mode> {
        match (self.mode, self.beta) {
            (ModeArg::Paper, None) => Ok(Mode::Paper),
            (ModeArg::Paper, Some(_)) => Err(Error::Domain(
                "--beta is only valid with --mode generalized".into(),
            )),
            (ModeArg::Generalized, None) => {
                Err(Error::Domain("--mode generalized requires --beta".into()))
            }
            (ModeArg::Generalized, Some(beta)) if beta > 0.0 && beta.is_finite() => {
                Ok(Mode::Generalized { beta })
            }
            (ModeArg::Generalized, Some(beta)) => {
                Err(Error::Domain(format!("beta must be positive, got {beta}")))
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub mode: ModeOpts,
    /// Level or range, e.g. `3` or `1..4`.
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    pub n: RangeInclusive<u32>,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub mode: ModeOpts,
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    /// Family exponent; defaults to s(n) of the chosen mode.
    #[arg(long)]
    pub s: Option<f64>,
    /// Number of grid points.
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "closed")]
    pub grid_kind: GridKind,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NormalizationArgs {
    #[command(flatten)]
    pub mode: ModeOpts,
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    pub n: RangeInclusive<u32>,
    /// Fixed family exponent for every row; defaults to s(n) per row.
    #[arg(long)]
    pub s: Option<f64>,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Debug, Args)]
pub struct LadderArgs {
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    pub n: RangeInclusive<u32>,
    #[arg(long, default_value_t = 0.75)]
    pub s: f64,
    /// Interior grid points for the pointwise residuals.
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    #[command(flatten)]
    pub out: OutputOpts,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub mode: ModeOpts,
    /// Suite to run; repeatable. Default: all.
    #[arg(long = "suite", value_parser = parse_suite)]
    pub suites: Vec<Suite>,
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<u32>>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    pub seed: u64,
    /// Random draws per contiguous relation.
    #[arg(long, default_value_t = 100)]
    pub draws: usize,
    /// Tolerance override `KEY=VALUE`; repeatable.
    #[arg(long = "tol", value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

pub fn parse_range(text: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| format!("bad level `{t}`: {e}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            (n, n)
        }
    };
    if lo == 0 {
        return Err("levels are numbered from n >= 1".into());
    }
    if hi < lo {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn parse_suite(text: &str) -> std::result::Result<Suite, String> {
    Suite::parse(text).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!(
            "unknown suite `{text}` (expected one of {})",
            names.join(", ")
        )
    })
}

fn parse_tol(text: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got `{text}`"))?;
    let v: f64 = v.parse().map_err(|e| format!("bad tolerance `{v}`: {e}"))?;
    if !(v > 0.0) {
        return Err(format!("tolerance must be positive, got {v}"));
    }
    Ok((k.trim().to_string(), v))
}

/// Applies `KEY=VALUE` overrides by field name.
pub fn apply_tolerances(base: Tolerances, overrides: &[(String, f64)]) -> Result<Tolerances> {
    let mut value = serde_json::to_value(base).expect("tolerances serialize");
    let map = value.as_object_mut().expect("tolerances are a struct");
    for (k, v) in overrides {
        match map.get_mut(k) {
            Some(slot) => *slot = serde_json::json!(v),
            None => {
                let keys: Vec<_> = map.keys().cloned().collect();
                return Err(Error::Domain(format!(
                    "unknown tolerance `{k}` (known: {})",
                    keys.join(", ")
                )));
            }
        }
    }
    Ok(serde_json::from_value(value).expect("tolerances deserialize"))
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((text, dest, code)) => match emit(&text, dest.as_ref(), out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(text: &str, dest: Option<&PathBuf>, out: &mut dyn Write) -> std::io::Result<()> {
    match dest {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    }
}

type Output = (String, Option<PathBuf>, i32);

fn dispatch(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Spectrum(a) => {
            let text = spectrum_output(a.mode.resolve()?, a.n.clone(), a.out.format)?;
            Ok((text, a.out.output.clone(), EXIT_OK))
        }
        Command::Wavefunction(a) => Ok((wavefunction_output(a)?, a.output.clone(), EXIT_OK)),
        Command::Normalization(a) => {
            let text = normalization_output(a.mode.resolve()?, a.n.clone(), a.s, a.out.format)?;
            Ok((text, a.out.output.clone(), EXIT_OK))
        }
        Command::Ladder(a) => {
            let text = ladder_output(a.s, a.n.clone(), a.grid, a.out.format)?;
            Ok((text, a.out.output.clone(), EXIT_OK))
        }
        Command::Verify(a) => {
            let opts = VerifyOptions {
                suites: if a.suites.is_empty() {
                    Suite::ALL.to_vec()
                } else {
                    a.suites.clone()
                },
                mode: a.mode.resolve()?,
                n_range: a.n.clone(),
                s: a.s,
                seed: a.seed,
                draws: a.draws,
                tolerances: apply_tolerances(Tolerances::default(), &a.tol)?,
            };
            if let Some(s) = opts.s {
                if !(s > 0.0) {
                    return Err(Error::Domain(format!("--s must be positive, got {s}")));
                }
            }
            let report = verify(&opts);
            let mut text = report.to_json();
            text.push('\n');
            let code = if report.pass() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok((text, a.output.clone(), code))
        }
    }
}

/// A rendered table: header plus rows of preformatted cells.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn render(&self, format: Format, json_rows: impl Serialize) -> String {
        match format {
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for r in &self.rows {
                    s.push_str(&r.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&json_rows).expect("rows serialize");
                s.push('\n');
                s
            }
            Format::Table => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].len())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: Vec<&str>| {
                    let mut s = String::new();
                    for (i, c) in cells.iter().enumerate() {
                        if i > 0 {
                            s.push_str("  ");
                        }
                        let _ = write!(s, "{c:>w$}", w = widths[i]);
                    }
                    s.push('\n');
                    s
                };
                let mut s = line(self.header.clone());
                for r in &self.rows {
                    s.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                s
            }
        }
    }
}

fn opt17(v: Option<f64>) -> String {
    v.map(fmt17).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    pub bound: bool,
    pub s: Option<f64>,
    pub epsilon: Option<f64>,
    pub energy_over_v0: Option<f64>,
    /// Paper mode: exact rational `E/V0`.
    pub exact: Option<String>,
    /// Paper mode: `E_n - E_{n-1}`.
    pub spacing: Option<f64>,
}

pub fn spectrum_rows(mode: Mode, range: RangeInclusive<u32>) -> Result<Vec<SpectrumRow>> {
    let mut rows = Vec::new();
    let mut prev: Option<f64> = None;
    for n in range {
        let row = match entry(n, mode, 1.0) {
            Ok(e) => {
                let paper = mode == Mode::Paper;
                let spacing = if paper && n > 1 {
                    let before =
                        prev.map_or_else(|| entry(n - 1, mode, 1.0).map(|p| p.energy), Ok)?;
                    Some(e.energy - before)
                } else {
                    None
                };
                prev = Some(e.energy);
                SpectrumRow {
                    n,
                    bound: true,
                    s: Some(e.s),
                    epsilon: Some(e.epsilon),
                    energy_over_v0: Some(e.energy),
                    exact: if paper {
                        Some(energy_paper_exact(n)?.to_string())
                    } else {
                        None
                    },
                    spacing,
                }
            }
            Err(Error::NoBoundState { .. }) => SpectrumRow {
                n,
                bound: false,
                s: None,
                epsilon: None,
                energy_over_v0: None,
                exact: None,
                spacing: None,
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(rows)
}

fn spectrum_output(mode: Mode, range: RangeInclusive<u32>, format: Format) -> Result<String> {
    let rows = spectrum_rows(mode, range)?;
    let paper = mode == Mode::Paper;
    let mut header = vec!["n", "bound", "s", "epsilon", "E_over_V0"];
    if paper {
        header.extend(["exact", "spacing"]);
    }
    let cells = rows
        .iter()
        .map(|r| {
            let mut c = vec![
                r.n.to_string(),
                r.bound.to_string(),
                opt17(r.s),
                opt17(r.epsilon),
                opt17(r.energy_over_v0),
            ];
            if paper {
                c.push(r.exact.clone().unwrap_or_default());
                c.push(opt17(r.spacing));
            }
            c
        })
        .collect();
    Ok(Table {
        header,
        rows: cells,
    }
    .render(format, &rows))
}

fn family_s(mode: Mode, n: u32, s: Option<f64>) -> Result<f64> {
    match s {
        Some(s) => Ok(s),
        None => crate::spectrum::s_param(n, mode),
    }
}

fn wavefunction_output(a: &WavefunctionArgs) -> Result<String> {
    let mode = a.mode.resolve()?;
    let s = family_s(mode, a.n, a.s)?;
    let state = make_state(s, a.n)?;
    let spec = match a.grid_kind {
        GridKind::Closed => GridSpec::Closed { points: a.grid },
        GridKind::Interior => GridSpec::Interior { points: a.grid },
        GridKind::Chebyshev => GridSpec::Chebyshev { points: a.grid },
    };
    Ok(sample(&state, &spec)?.to_csv())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizationRow {
    pub n: u32,
    pub s: f64,
    pub quadrature: f64,
    pub symbolic: f64,
    /// Absent beyond the four tabulated levels.
    pub tabulated: Option<f64>,
    /// Largest relative disagreement among the available columns.
    pub max_rel_diff: f64,
}

pub fn normalization_rows(
    mode: Mode,
    range: RangeInclusive<u32>,
    s: Option<f64>,
) -> Result<Vec<NormalizationRow>> {
    range
        .map(|n| {
            let s = family_s(mode, n, s)?;
            let quadrature = normalize_quadrature(s, n)?;
            let symbolic = normalize_symbolic(n)?.norm_at(s);
            let tabulated = tabulated_norm(n).map(|t| t.norm_at(s));
            let rel = |v: f64| (v - symbolic).abs() / symbolic;
            let max_rel_diff = rel(quadrature).max(tabulated.map_or(0.0, rel));
            Ok(NormalizationRow {
                n,
                s,
                quadrature,
                symbolic,
                tabulated,
                max_rel_diff,
            })
        })
        .collect()
}

fn normalization_output(
    mode: Mode,
    range: RangeInclusive<u32>,
    s: Option<f64>,
    format: Format,
) -> Result<String> {
    let rows = normalization_rows(mode, range, s)?;
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                fmt17(r.s),
                fmt17(r.quadrature),
                fmt17(r.symbolic),
                r.tabulated.map(fmt17).unwrap_or_else(|| "absent".into()),
                fmt17(r.max_rel_diff),
            ]
        })
        .collect();
    let header = vec![
        "n",
        "s",
        "quadrature",
        "symbolic",
        "tabulated",
        "max_rel_diff",
    ];
    Ok(Table {
        header,
        rows: cells,
    }
    .render(format, &rows))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderRow {
    pub n: u32,
    pub s: f64,
    pub l_plus: f64,
    pub l_minus: Option<f64>,
    pub l_zero: f64,
    /// `l_-(n+1) l_+(n) - l_+(n-1) l_-(n)`; equals `2 l_0`.
    pub commutator: Option<f64>,
    pub raise_residual: f64,
    pub lower_residual: Option<f64>,
}

pub fn ladder_rows(s: f64, range: RangeInclusive<u32>, points: usize) -> Result<Vec<LadderRow>> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("--s must be positive, got {s}")));
    }
    let grid = GridSpec::Interior { points }.points()?;
    let norms = NormTable::quadrature(s, range.end() + 2)?;
    range
        .map(|n| {
            let c = ladder_coeffs(s, n, &norms)?;
            Ok(LadderRow {
                n,
                s,
                l_plus: c.l_plus,
                l_minus: c.l_minus,
                l_zero: c.l_zero,
                commutator: if n >= 2 {
                    Some(commutator_from_coeffs(s, n, &norms)?)
                } else {
                    None
                },
                raise_residual: raise_residual(n, &norms, &grid, RaiseForm::Consistent)?,
                lower_residual: if n >= 2 {
                    Some(lower_residual(n, &norms, &grid)?)
                } else {
                    None
                },
            })
        })
        .collect()
}

fn ladder_output(
    s: f64,
    range: RangeInclusive<u32>,
    points: usize,
    format: Format,
) -> Result<String> {
    let rows = ladder_rows(s, range, points)?;
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                fmt17(r.s),
                fmt17(r.l_plus),
                opt17(r.l_minus),
                fmt17(r.l_zero),
                opt17(r.commutator),
                fmt17(r.raise_residual),
                opt17(r.lower_residual),
            ]
        })
        .collect();
    let header = vec![
        "n",
        "s",
        "l_plus",
        "l_minus",
        "l_zero",
        "commutator",
        "raise_residual",
        "lower_residual",
    ];
    Ok(Table {
        header,
        rows: cells,
    }
    .render(format, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("hulthen").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_range("1..=4").unwrap(), 1..=4);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("0").is_err());
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn tolerance_overrides() {
        let t = apply_tolerances(Tolerances::default(), &[("ladder".into(), 1e-3)]).unwrap();
        assert_eq!(t.ladder, 1e-3);
        assert!(apply_tolerances(Tolerances::default(), &[("bogus".into(), 1.0)]).is_err());
    }

    #[test]
    fn mode_flags_must_agree() {
        let (code, _, err) = run_str(&["spectrum", "--beta", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("generalized"), "{err}");
        let (code, _, _) = run_str(&["spectrum", "--mode", "generalized"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn spectrum_paper_exact_column() {
        let (code, out, _) = run_str(&["spectrum", "--n", "1..4", "--format", "csv"]);
        assert_eq!(code, 0);
        let exact: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(5).unwrap())
            .collect();
        assert_eq!(exact, ["0", "-9/16", "-16/9", "-225/64"]);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
