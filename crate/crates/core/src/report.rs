//! Verification suites and their JSON report.
//!
//! Every check records `{suite, case, residual, tolerance, pass}`. A check
//! flagged `expected_failure` documents a commonly quoted relation that does
//! not hold; it passes when its residual exceeds the tolerance.

use std::ops::RangeInclusive;

use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::hypergeom::{
    ab_lower_residual, ab_lower_residual_wrong_coeff, ab_raise_residual,
    ab_raise_residual_wrong_sign, build_terminating, decomposition_residual, derivative_2f1,
    horner, shift_residual, HypParams, SERIES_RADIUS,
};
use crate::ladder::{
    commutator_exact, commutator_fit, l_zero_ratios_exact, lower_residual, raise_residual,
    reconstruction_residual, su2_relations_check, NormTable, RaiseForm,
};
use crate::oracle::{ode_residual, shoot_eigenvalues, ShootingConfig};
use crate::spectrum::{bound_state_count, energy_paper_exact, entry, s_param, Mode};
use crate::symbolic::{int, rat};
use crate::wavefunction::{
    make_state, matches_tabulated, normalize_quadrature, normalize_symbolic, GridSpec,
};
use crate::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Spectrum,
    Contiguous,
    Table1,
    Ladder,
    Su2,
    Ode,
    Shooting,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Spectrum,
        Suite::Contiguous,
        Suite::Table1,
        Suite::Ladder,
        Suite::Su2,
        Suite::Ode,
        Suite::Shooting,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Spectrum => "spectrum",
            Suite::Contiguous => "contiguous",
            Suite::Table1 => "table1",
            Suite::Ladder => "ladder",
            Suite::Su2 => "su2",
            Suite::Ode => "ode",
            Suite::Shooting => "shooting",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub case: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub expected_failure: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub suites: Vec<Suite>,
    pub mode: Mode,
    pub seed: u64,
    pub draws: usize,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub metadata: Metadata,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.summary.pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The `checks` array alone.
    pub fn data_json(&self) -> String {
        serde_json::to_string_pretty(&self.checks).expect("checks serialize")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub suites: Vec<Suite>,
    pub mode: Mode,
    pub n_range: Option<RangeInclusive<u32>>,
    pub s: Option<f64>,
    pub seed: u64,
    pub draws: usize,
    pub tolerances: Tolerances,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suites: Suite::ALL.to_vec(),
            mode: Mode::Paper,
            n_range: None,
            s: None,
            seed: 20_240_601,
            draws: 100,
            tolerances: Tolerances::default(),
        }
    }
}

/// The four family exponents used by default, as exact rationals.
pub fn default_exponents() -> Vec<BigRational> {
    vec![rat(1, 2), rat(3, 4), rat(4, 3), int(2)]
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn bound(&mut self, suite: Suite, case: String, residual: f64, tolerance: f64) {
        let pass = residual.abs() < tolerance;
        self.checks.push(Check {
            suite,
            case,
            residual,
            tolerance,
            pass,
            expected_failure: false,
        });
    }

    fn expected_failure(&mut self, suite: Suite, case: String, residual: f64, threshold: f64) {
        let pass = residual.abs() > threshold;
        self.checks.push(Check {
            suite,
            case,
            residual,
            tolerance: threshold,
            pass,
            expected_failure: true,
        });
    }

    fn error(&mut self, suite: Suite, case: String, err: crate::Error) {
        self.checks.push(Check {
            suite,
            case: format!("{case}: {err}"),
            residual: f64::INFINITY,
            tolerance: 0.0,
            pass: false,
            expected_failure: false,
        });
    }
}

pub fn verify(opts: &VerifyOptions) -> Report {
    let mut suites = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let mut rec = Recorder { checks: Vec::new() };
    for suite in &suites {
        let out = match suite {
            Suite::Spectrum => spectrum_suite(&mut rec, opts),
            Suite::Contiguous => contiguous_suite(&mut rec, opts),
            Suite::Table1 => table1_suite(&mut rec, opts),
            Suite::Ladder => ladder_suite(&mut rec, opts),
            Suite::Su2 => su2_suite(&mut rec, opts),
            Suite::Ode => ode_suite(&mut rec, opts),
            Suite::Shooting => shooting_suite(&mut rec, opts),
        };
        if let Err(e) = out {
            rec.error(*suite, "suite aborted".into(), e);
        }
    }
    let passed = rec.checks.iter().filter(|c| c.pass).count();
    let total = rec.checks.len();
    Report {
        metadata: Metadata {
            tool: "hulthen",
            version: env!("CARGO_PKG_VERSION"),
            suites,
            mode: opts.mode,
            seed: opts.seed,
            draws: opts.draws,
            tolerances: opts.tolerances,
        },
        checks: rec.checks,
        summary: Summary {
            total,
            passed,
            pass: passed == total,
        },
    }
}

fn exponents(opts: &VerifyOptions) -> Vec<BigRational> {
    match opts.s {
        Some(s) => vec![BigRational::from_f64(s).unwrap_or_else(|| int(1))],
        None => default_exponents(),
    }
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn spectrum_suite(rec: &mut Recorder, _opts: &VerifyOptions) -> Result<()> {
    for n in 1..=20 {
        let exact = energy_paper_exact(n)?;
        let k = int(n as i64);
        let q = (&k * &k - int(1)) / (int(2) * &k);
        let direct = -(&q * &q);
        rec.bound(
            Suite::Spectrum,
            format!("n={n}: exact E/V0 = {exact} vs -((n^2-1)/(2n))^2 = {direct}"),
            to_f64(&(&exact - &direct)).abs(),
            f64::MIN_POSITIVE,
        );
        let e = entry(n, Mode::Paper, 1.0)?;
        rec.bound(
            Suite::Spectrum,
            format!("n={n}: floating-point E/V0 relative to exact"),
            if e.energy == 0.0 && exact == int(0) {
                0.0
            } else {
                (e.energy / to_f64(&exact) - 1.0).abs()
            },
            1e-15,
        );
    }
    let e: Vec<BigRational> = (1..=3).map(energy_paper_exact).collect::<Result<_>>()?;
    let gap = (&e[1] - &e[0]) - (&e[2] - &e[1]);
    rec.expected_failure(
        Suite::Spectrum,
        "equidistant spacing (E2-E1) - (E3-E2)".into(),
        to_f64(&gap),
        0.0,
    );
    Ok(())
}

fn contiguous_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let tol = opts.tolerances.identity;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut worst = [0.0f64; 4];
    for _ in 0..opts.draws {
        let a = rng.gen_range(0.5..10.0);
        let m = rng.gen_range(0..=6u32);
        let c = rng.gen_range(0.5..10.0);
        let mut y: f64 = rng.gen_range(0.0..1.0);
        while m == 0 && y > SERIES_RADIUS {
            y = rng.gen_range(0.0..1.0);
        }
        let p = HypParams::new(a, m, c)?;
        let series = build_terminating(a, m, c)?;
        let (scale, shifted) = derivative_2f1(&p)?;
        let d22 = if m == 0 {
            scale.abs()
        } else {
            let direct = horner(&series.derivative_coeffs(), y);
            let via = scale * shifted.eval(y)?;
            let mag = scale.abs() * build_terminating(a + 1.0, m - 1, c + 1.0)?.abs_sum(y);
            (direct - via).abs() / mag.max(1.0)
        };
        let r = [
            d22,
            shift_residual(&p, y)?,
            ab_raise_residual(&p, y)?,
            ab_lower_residual(&p, y)?,
        ];
        for (w, v) in worst.iter_mut().zip(r) {
            *w = w.max(v.abs());
        }
    }
    for (label, w) in ["derivative shift", "b-shift", "a/b raising", "a/b lowering"]
        .iter()
        .zip(worst)
    {
        rec.bound(
            Suite::Contiguous,
            format!("{label}: max over {} draws", opts.draws),
            w,
            tol,
        );
    }

    let mut worst27: f64 = 0.0;
    for _ in 0..opts.draws {
        let n = rng.gen_range(1..=6u32);
        let s = rng.gen_range(0.01..3.0);
        let y = rng.gen_range(0.05..0.95);
        worst27 = worst27.max(decomposition_residual(n, s, y)?.abs());
    }
    rec.bound(
        Suite::Contiguous,
        format!(
            "family derivative decomposition: max over {} draws",
            opts.draws
        ),
        worst27,
        opts.tolerances.decomposition,
    );

    let p = HypParams::new(3.5, 2, 2.0)?;
    rec.expected_failure(
        Suite::Contiguous,
        "a/b raising with +a F(a+1) at a=3.5, b=-2, c=2, y=0.3".into(),
        ab_raise_residual_wrong_sign(&p, 0.3)?,
        1e-3,
    );
    rec.expected_failure(
        Suite::Contiguous,
        "a/b lowering with (c-a) on F(b-1) at a=3.5, b=-2, c=2, y=0.3".into(),
        ab_lower_residual_wrong_coeff(&p, 0.3)?,
        1e-3,
    );
    Ok(())
}

fn table1_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    for n in 1..=4 {
        let ok = matches_tabulated(n)?.unwrap_or(false);
        rec.bound(
            Suite::Table1,
            format!("n={n}: exact identity 1/N^2 vs tabulated closed form"),
            if ok { 0.0 } else { 1.0 },
            0.5,
        );
    }
    let range = opts.n_range.clone().unwrap_or(1..=8);
    for q in exponents(opts) {
        let s = to_f64(&q);
        for n in range.clone() {
            let sym = normalize_symbolic(n)?;
            let exact = sym.norm_squared_at(&q)?;
            let exact_norm = to_f64(&exact).sqrt();
            let quad = normalize_quadrature(s, n)?;
            rec.bound(
                Suite::Table1,
                format!("s={s}, n={n}: quadrature vs exact N_n"),
                (quad - exact_norm).abs() / exact_norm,
                opts.tolerances.normalization,
            );
        }
    }
    Ok(())
}

fn ladder_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let grid = GridSpec::Interior { points: 200 }.points()?;
    let range = opts.n_range.clone().unwrap_or(1..=6);
    let tol = opts.tolerances;
    for q in exponents(opts) {
        let s = to_f64(&q);
        let norms = NormTable::quadrature(s, range.end() + 1)?;
        for n in range.clone() {
            rec.bound(
                Suite::Ladder,
                format!("s={s}, n={n}: L+ psi_n = l+ psi_(n+1)"),
                raise_residual(n, &norms, &grid, RaiseForm::Consistent)?,
                tol.ladder,
            );
            if n >= 2 {
                rec.bound(
                    Suite::Ladder,
                    format!("s={s}, n={n}: L- psi_n = l- psi_(n-1)"),
                    lower_residual(n, &norms, &grid)?,
                    tol.ladder,
                );
            }
            rec.bound(
                Suite::Ladder,
                format!("s={s}, n={n}: derivative reconstruction from psi_n, psi_(n+1)"),
                reconstruction_residual(n, &norms, &grid)?,
                tol.reconstruction,
            );
        }
    }
    let norms = NormTable::quadrature(0.75, 3)?;
    rec.expected_failure(
        Suite::Ladder,
        "raising operator with flipped (1-y)(2s+n+1) term, s=0.75, n=2".into(),
        raise_residual(2, &norms, &grid, RaiseForm::FlippedSign)?,
        0.1,
    );
    Ok(())
}

fn su2_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let grid = GridSpec::Interior { points: 200 }.points()?;
    let range = opts.n_range.clone().unwrap_or(2..=6);
    let range = (*range.start()).max(2)..=*range.end();
    let tol = opts.tolerances;
    for q in exponents(opts) {
        let s = to_f64(&q);
        let norms = NormTable::quadrature(s, range.end() + 2)?;
        let report = su2_relations_check(s, range.clone(), &norms, tol.su2_scalar)?;
        for e in &report.entries {
            let n = e.n;
            rec.bound(
                Suite::Su2,
                format!("s={s}, n={n}: [L-,L+] = 2 L0 from eigen-factors"),
                e.commutator_residual,
                tol.su2_scalar,
            );
            rec.bound(
                Suite::Su2,
                format!("s={s}, n={n}: [L0,L+] = L+"),
                e.raise_residual,
                tol.su2_scalar,
            );
            rec.bound(
                Suite::Su2,
                format!("s={s}, n={n}: [L0,L-] = -L-"),
                e.lower_residual,
                tol.su2_scalar,
            );
            let exact = commutator_exact(&q, n)?;
            let want = int(2) * (int(n as i64) + &q);
            let (plus, minus) = l_zero_ratios_exact(&q, n);
            let exact_ok = exact == want && plus == int(1) && minus == int(-1);
            rec.bound(
                Suite::Su2,
                format!("s={s}, n={n}: exact rational commutator {exact}"),
                if exact_ok { 0.0 } else { 1.0 },
                0.5,
            );
            let st = norms.state(n)?;
            let fit = commutator_fit(&st, &grid)?;
            let target = 2.0 * (n as f64 + s);
            rec.bound(
                Suite::Su2,
                format!("s={s}, n={n}: composed grid commutator eigenvalue"),
                (fit.eigenvalue - target)
                    .abs()
                    .max(fit.fit_residual * target),
                tol.commutator_grid,
            );
        }
    }
    Ok(())
}

fn ode_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let grid = GridSpec::Interior { points: 200 }.points()?;
    let tol = opts.tolerances;
    let cases: Vec<(f64, u32)> = match opts.mode {
        Mode::Paper => vec![(4.0, 1), (9.0, 1), (9.0, 2)],
        Mode::Generalized { beta } => (1..=bound_state_count(beta)).map(|n| (beta, n)).collect(),
    };
    for (beta, n) in cases {
        let s = s_param(n, Mode::Generalized { beta })?;
        let st = make_state(s, n)?;
        rec.bound(
            Suite::Ode,
            format!(
                "generalized beta={beta}, n={n}, s={s}: closed form solves the radial equation"
            ),
            ode_residual(&st, beta, &grid)?,
            tol.ode,
        );
    }
    if opts.mode == Mode::Paper {
        let st = make_state(s_param(2, Mode::Paper)?, 2)?;
        rec.expected_failure(
            Suite::Ode,
            "paper mode beta=1, n=2, s=0.75: closed form is not a solution".into(),
            ode_residual(&st, 1.0, &grid)?,
            tol.ode_expected_failure,
        );
    }
    Ok(())
}

fn shooting_suite(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let cfg = ShootingConfig::default();
    let tol = opts.tolerances.shooting;
    let betas: Vec<f64> = match opts.mode {
        Mode::Paper => vec![4.0, 9.0],
        Mode::Generalized { beta } => vec![beta],
    };
    for beta in betas {
        let levels = shoot_eigenvalues(beta, &cfg)?;
        let count = bound_state_count(beta);
        rec.bound(
            Suite::Shooting,
            format!(
                "beta={beta}: {} levels found, {count} expected",
                levels.len()
            ),
            (levels.len() as f64 - count as f64).abs(),
            0.5,
        );
        for l in &levels {
            let nf = l.n as f64;
            let closed = -((beta - nf * nf) / (2.0 * nf)).powi(2);
            rec.bound(
                Suite::Shooting,
                format!(
                    "beta={beta}, n={}: shooting epsilon {} vs closed form {closed}",
                    l.n, l.epsilon
                ),
                (l.epsilon - closed).abs() / closed.abs(),
                tol,
            );
        }
    }
    if opts.mode == Mode::Paper {
        let levels = shoot_eigenvalues(1.0, &cfg)?;
        let deepest = levels.iter().map(|l| l.epsilon).fold(0.0, f64::min);
        rec.bound(
            Suite::Shooting,
            format!(
                "beta=1: no level below -1e-6 ({} found, bound_state_count = {})",
                levels.len(),
                bound_state_count(1.0)
            ),
            if deepest < -1e-6 { deepest } else { 0.0 },
            1e-6,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions {
            suites: vec![Suite::Spectrum, Suite::Contiguous, Suite::Ode],
            ..Default::default()
        };
        let rep = verify(&opts);
        assert!(rep.pass(), "{}", rep.to_json());
        assert!(rep
            .checks
            .iter()
            .any(|c| c.expected_failure && c.suite == Suite::Ode && c.pass));
    }

    #[test]
    fn failing_tolerance_is_reported() {
        let tolerances = Tolerances {
            ode: 1e-30,
            ..Default::default()
        };
        let opts = VerifyOptions {
            suites: vec![Suite::Ode],
            mode: Mode::Generalized { beta: 9.0 },
            tolerances,
            ..Default::default()
        };
        let rep = verify(&opts);
        assert!(!rep.pass());
        assert_eq!(rep.summary.total, 2);
    }
}
