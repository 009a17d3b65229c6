//! The fixed-`s` eigenfunction family
//! `psi_n(y) = N_n y^s (1 - y) 2F1(2s+1+n, 1-n; 2s+1; y)`,
//! its normalization under the measure `dy` on `[0, 1]`, and sampling.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::{build_terminating, horner, poly_derivative, HypParams, TerminatingSeries};
use crate::oracle::quadrature::quadrature;
use crate::symbolic::{int, rat, Poly, RationalFunctionInS};

/// Relative agreement demanded of successive quadrature estimates.
pub const NORM_QUADRATURE_TOL: f64 = 1e-13;

/// Default cap on `n` for exact normalization.
pub const DEFAULT_SYMBOLIC_MAX: u32 = 12;

/// `y^exponent * P(y)`, closed under `d/dy` and under multiplication by
/// polynomials. Ladder operators map this form to itself.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerPoly {
    pub exponent: f64,
    pub coeffs: Vec<f64>,
}

impl PowerPoly {
    pub fn new(exponent: f64, coeffs: Vec<f64>) -> Self {
        PowerPoly { exponent, coeffs }
    }

    pub fn eval(&self, y: f64) -> f64 {
        let p = horner(&self.coeffs, y);
        if y == 0.0 {
            return if self.exponent > 0.0 {
                0.0
            } else if self.exponent == 0.0 {
                p
            } else {
                f64::INFINITY.copysign(p)
            };
        }
        y.powf(self.exponent) * p
    }

    /// `d/dy (y^e P) = y^(e-1) (e P + y P')`.
    pub fn derivative(&self) -> PowerPoly {
        let mut out: Vec<f64> = self.coeffs.iter().map(|c| self.exponent * c).collect();
        for (k, d) in poly_derivative(&self.coeffs).into_iter().enumerate() {
            out[k + 1] += d;
        }
        PowerPoly::new(self.exponent - 1.0, trim(out))
    }

    pub fn mul_poly(&self, p: &[f64]) -> PowerPoly {
        PowerPoly::new(self.exponent, poly_mul(&self.coeffs, p))
    }

    pub fn scale(&self, k: f64) -> PowerPoly {
        PowerPoly::new(self.exponent, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Sum of two expressions with the same exponent.
    pub fn add(&self, other: &PowerPoly) -> PowerPoly {
        assert_eq!(self.exponent, other.exponent, "exponent mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
        PowerPoly::new(
            self.exponent,
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&other.coeffs, i))
                .collect(),
        )
    }
}

fn trim(mut v: Vec<f64>) -> Vec<f64> {
    if v.is_empty() {
        v.push(0.0);
    }
    v
}

pub(crate) fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// One member `psi_n` of the fixed-`s` family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyState {
    s: f64,
    n: u32,
    poly: TerminatingSeries,
    norm: f64,
}

impl FamilyState {
    /// State with an externally supplied normalization constant.
    pub fn with_norm(s: f64, n: u32, norm: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::Domain(format!(
                "family exponent s must be positive, got {s}"
            )));
        }
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::Domain(format!(
                "normalization must be positive, got {norm}"
            )));
        }
        let p = HypParams::family(s, n)?;
        let poly = build_terminating(p.a, p.m, p.c)?;
        Ok(FamilyState { s, n, poly, norm })
    }

    /// State normalized with the exact rational-function norm, evaluated in f64.
    pub fn symbolic(s: f64, n: u32) -> Result<Self> {
        let sym = normalize_symbolic(n)?;
        FamilyState::with_norm(s, n, sym.norm_at(s))
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poly(&self) -> &TerminatingSeries {
        &self.poly
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// `N y^s (1-y) F(y)` as an exact expression.
    pub fn expr(&self) -> PowerPoly {
        let p = poly_mul(&[1.0, -1.0], self.poly.coeffs());
        PowerPoly::new(self.s, p).scale(self.norm)
    }

    /// Value without the domain check.
    pub fn value(&self, y: f64) -> f64 {
        if y == 0.0 || y == 1.0 {
            return 0.0;
        }
        self.norm * y.powf(self.s) * (1.0 - y) * self.poly.eval(y)
    }

    /// Analytic `d psi / dy`.
    pub fn derivative(&self, y: f64) -> f64 {
        let f = self.poly.eval(y);
        let df = horner(&self.poly.derivative_coeffs(), y);
        let ys = y.powf(self.s);
        let g = ys * (1.0 - y);
        let dg = self.s * y.powf(self.s - 1.0) * (1.0 - y) - ys;
        self.norm * (dg * f + g * df)
    }

    /// Analytic `d^2 psi / dy^2`.
    pub fn second_derivative(&self, y: f64) -> f64 {
        let d1 = self.poly.derivative_coeffs();
        let d2 = poly_derivative(&d1);
        let (f, df, ddf) = (self.poly.eval(y), horner(&d1, y), horner(&d2, y));
        let s = self.s;
        let ys = y.powf(s);
        let g = ys * (1.0 - y);
        let dg = s * y.powf(s - 1.0) * (1.0 - y) - ys;
        let ddg = s * (s - 1.0) * y.powf(s - 2.0) - (s + 1.0) * s * y.powf(s - 1.0);
        self.norm * (ddg * f + 2.0 * dg * df + g * ddf)
    }
}

/// Builds `psi_n` at exponent `s`, normalized by quadrature.
pub fn make_state(s: f64, n: u32) -> Result<FamilyState> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!(
            "family exponent s must be positive, got {s}"
        )));
    }
    let norm = normalize_quadrature(s, n)?;
    FamilyState::with_norm(s, n, norm)
}

pub fn eval_psi(state: &FamilyState, y: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::Domain(format!("y must lie in [0, 1], got {y}")));
    }
    Ok(state.value(y))
}

/// `psi` at radius `r` for range `a`, via `y = e^{-r/a}`.
pub fn eval_radial(state: &FamilyState, r: f64, a: f64) -> Result<f64> {
    if !(r >= 0.0) || !(a > 0.0) {
        return Err(Error::Domain(format!(
            "need r >= 0 and a > 0 (got r = {r}, a = {a})"
        )));
    }
    eval_psi(state, (-r / a).exp())
}

/// `N_n = (int_0^1 y^{2s} (1-y)^2 F^2 dy)^{-1/2}` by quadrature.
///
/// For `s < 0.25` the integral is taken in `t` with `y = t^q`,
/// `q = ceil(4 / (2s+1))`, which turns the `y^{2s}` endpoint factor into
/// `t^{q(2s+1)-1}` with exponent at least 3.
/// `s = 0` is accepted as the `s -> 0+` limit.
pub fn normalize_quadrature(s: f64, n: u32) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(Error::Domain(format!(
            "family exponent s must be non-negative, got {s}"
        )));
    }
    let p = HypParams::family(s, n)?;
    let f = build_terminating(p.a, p.m, p.c)?;
    let integral = if s < 0.25 {
        let q = (4.0 / (2.0 * s + 1.0)).ceil();
        let e = q * (2.0 * s + 1.0) - 1.0;
        quadrature(
            |t: f64| {
                let y = t.powf(q);
                let v = (1.0 - y) * f.eval(y);
                q * t.powf(e) * v * v
            },
            0.0,
            1.0,
            NORM_QUADRATURE_TOL,
        )?
    } else {
        quadrature(
            |y: f64| {
                let v = (1.0 - y) * f.eval(y);
                y.powf(2.0 * s) * v * v
            },
            0.0,
            1.0,
            NORM_QUADRATURE_TOL,
        )?
    };
    Ok(integral.value.powf(-0.5))
}

/// Exact `1 / N_n^2` as a reduced rational function of `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicNorm {
    pub n: u32,
    pub inverse_square: RationalFunctionInS,
}

impl SymbolicNorm {
    pub fn norm_squared(&self) -> RationalFunctionInS {
        self.inverse_square
            .recip()
            .expect("normalization integral is nonzero")
    }

    pub fn norm_at(&self, s: f64) -> f64 {
        self.inverse_square.eval_f64(s).powf(-0.5)
    }

    pub fn norm_squared_at(&self, s: &BigRational) -> Result<BigRational> {
        let v = self.inverse_square.eval(s)?;
        Ok(num_traits::Inv::inv(v))
    }
}

pub fn normalize_symbolic(n: u32) -> Result<SymbolicNorm> {
    normalize_symbolic_with_limit(n, DEFAULT_SYMBOLIC_MAX)
}

/// Expands `F^2 = sum_j d_j y^j` with coefficients exact in `s`, then sums
/// `d_j * B(2s+j+1, 3) = d_j * 2 / ((2s+j+1)(2s+j+2)(2s+j+3))`.
pub fn normalize_symbolic_with_limit(n: u32, max_n: u32) -> Result<SymbolicNorm> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    if n > max_n {
        return Err(Error::Capacity(format!(
            "exact normalization limited to n <= {max_n}, requested n = {n}"
        )));
    }
    let m = (n - 1) as i64;
    // s-linear factors 2s + k
    let two_s_plus = |k: i64| Poly::linear(int(k), int(2));
    let mut coeffs = vec![RationalFunctionInS::constant(int(1))];
    for k in 0..m {
        let num = two_s_plus(1 + n as i64 + k).scale(&int(k - m));
        let den = two_s_plus(1 + k).scale(&int(k + 1));
        let step = RationalFunctionInS::new(num, den)?;
        let next = coeffs.last().unwrap() * &step;
        coeffs.push(next);
    }
    let mut total = RationalFunctionInS::zero();
    for j in 0..=(2 * m) as usize {
        let mut d = RationalFunctionInS::zero();
        for k in j.saturating_sub(m as usize)..=j.min(m as usize) {
            d = &d + &(&coeffs[k] * &coeffs[j - k]);
        }
        let jj = j as i64;
        let beta = RationalFunctionInS::new(
            Poly::constant(int(2)),
            &(&two_s_plus(jj + 1) * &two_s_plus(jj + 2)) * &two_s_plus(jj + 3),
        )?;
        total = &total + &(&d * &beta);
    }
    Ok(SymbolicNorm {
        n,
        inverse_square: total,
    })
}

/// A tabulated closed form `N_n = prefactor(s) * sqrt(radicand(s))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormNorm {
    pub n: u32,
    pub prefactor: Poly,
    pub radicand: Poly,
}

impl ClosedFormNorm {
    pub fn norm_squared(&self) -> Poly {
        &self.prefactor.pow(2) * &self.radicand
    }

    pub fn norm_at(&self, s: f64) -> f64 {
        self.prefactor.eval_f64(s) * self.radicand.eval_f64(s).sqrt()
    }
}

/// The four tabulated normalization constants, `n = 1..4`.
pub fn tabulated_norms() -> Vec<ClosedFormNorm> {
    let p = |c: &[i64], d: i64| Poly::new(c.iter().map(|&x| rat(x, d)).collect());
    vec![
        ClosedFormNorm {
            n: 1,
            prefactor: Poly::one(),
            radicand: Poly::from_ints(&[3, 11, 12, 4]),
        },
        ClosedFormNorm {
            n: 2,
            prefactor: p(&[1, 2], 2),
            radicand: Poly::from_ints(&[30, 47, 24, 4]),
        },
        ClosedFormNorm {
            n: 3,
            prefactor: p(&[1, 3, 2], 3),
            radicand: Poly::from_ints(&[105, 107, 36, 4]),
        },
        ClosedFormNorm {
            n: 4,
            prefactor: p(&[3, 11, 12, 4], 12),
            radicand: Poly::from_ints(&[252, 191, 48, 4]),
        },
    ]
}

pub fn tabulated_norm(n: u32) -> Option<ClosedFormNorm> {
    tabulated_norms().into_iter().find(|t| t.n == n)
}

/// Exact identity check between the computed norm and a tabulated entry.
pub fn matches_tabulated(n: u32) -> Result<Option<bool>> {
    let Some(entry) = tabulated_norm(n) else {
        return Ok(None);
    };
    let sym = normalize_symbolic(n)?;
    Ok(Some(
        sym.norm_squared() == RationalFunctionInS::from_poly(entry.norm_squared()),
    ))
}

/// Sampling grids in `y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GridSpec {
    /// `points` equally spaced points including both endpoints.
    Closed { points: usize },
    /// `points` equally spaced interior points `i / (points + 1)`.
    Interior { points: usize },
    /// Chebyshev–Gauss points mapped to `(0, 1)`, ascending.
    Chebyshev { points: usize },
}

impl GridSpec {
    pub fn points(&self) -> Result<Vec<f64>> {
        match *self {
            GridSpec::Closed { points } => {
                if points < 2 {
                    return Err(Error::Grid("closed grid needs at least 2 points".into()));
                }
                let h = 1.0 / (points - 1) as f64;
                Ok((0..points)
                    .map(|i| if i == points - 1 { 1.0 } else { i as f64 * h })
                    .collect())
            }
            GridSpec::Interior { points } => {
                if points < 1 {
                    return Err(Error::Grid("interior grid needs at least 1 point".into()));
                }
                let h = 1.0 / (points + 1) as f64;
                Ok((1..=points).map(|i| i as f64 * h).collect())
            }
            GridSpec::Chebyshev { points } => {
                if points < 1 {
                    return Err(Error::Grid("Chebyshev grid needs at least 1 point".into()));
                }
                let nf = points as f64;
                Ok((0..points)
                    .map(|i| {
                        let t = std::f64::consts::PI * (i as f64 + 0.5) / nf;
                        0.5 * (1.0 - t.cos())
                    })
                    .collect())
            }
        }
    }
}

/// Sampled function values on a strictly increasing grid in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
    /// `(s, n, N_n)` of the originating state, if any.
    origin: Option<(f64, u32, f64)>,
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, origin: Option<(f64, u32, f64)>) -> Result<Self> {
        check_grid(&grid)?;
        if grid.len() != values.len() {
            return Err(Error::Grid(format!(
                "{} grid points but {} values",
                grid.len(),
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Grid(format!("non-finite value at y = {}", grid[i])));
        }
        Ok(GridFunction {
            grid,
            values,
            origin,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn origin(&self) -> Option<(f64, u32, f64)> {
        self.origin
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// CSV with a `#` metadata line, then `y,x,psi`, values at 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some((s, n, norm)) = self.origin {
            let _ = writeln!(out, "# s={},n={},norm={}", fmt17(s), n, fmt17(norm));
        }
        out.push_str("y,x,psi\n");
        for (y, v) in self.grid.iter().zip(&self.values) {
            let x = if *y == 0.0 { f64::INFINITY } else { -y.ln() };
            let _ = writeln!(out, "{},{},{}", fmt17(*y), fmt17(x), fmt17(*v));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut origin = None;
        let mut grid = Vec::new();
        let mut values = Vec::new();
        let mut saw_header = false;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(meta) = line.strip_prefix('#') {
                origin = parse_meta(meta.trim());
                continue;
            }
            if !saw_header {
                if line != "y,x,psi" {
                    return Err(Error::Grid(format!("unexpected CSV header {line:?}")));
                }
                saw_header = true;
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Grid(format!("bad CSV row {line:?}")));
            }
            let parse = |t: &str| {
                t.parse::<f64>()
                    .map_err(|e| Error::Grid(format!("bad number {t:?}: {e}")))
            };
            grid.push(parse(fields[0])?);
            values.push(parse(fields[2])?);
        }
        GridFunction::new(grid, values, origin)
    }
}

fn parse_meta(meta: &str) -> Option<(f64, u32, f64)> {
    let mut s = None;
    let mut n = None;
    let mut norm = None;
    for kv in meta.split(',') {
        let (k, v) = kv.split_once('=')?;
        match k.trim() {
            "s" => s = v.trim().parse().ok(),
            "n" => n = v.trim().parse().ok(),
            "norm" => norm = v.trim().parse().ok(),
            _ => {}
        }
    }
    Some((s?, n?, norm?))
}

/// Scientific notation with 17 significant digits; round-trips every f64.
pub fn fmt17(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    // `+ 0.0` folds -0 into 0
    format!("{:.16e}", v + 0.0)
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Grid("empty grid".into()));
    }
    if let Some(y) = grid.iter().find(|y| !(0.0..=1.0).contains(*y)) {
        return Err(Error::Grid(format!("grid point {y} outside [0, 1]")));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Grid("grid must be strictly increasing".into()));
    }
    Ok(())
}

pub fn sample(state: &FamilyState, spec: &GridSpec) -> Result<GridFunction> {
    sample_on(state, spec.points()?)
}

pub fn sample_on(state: &FamilyState, grid: Vec<f64>) -> Result<GridFunction> {
    check_grid(&grid)?;
    let values = grid.iter().map(|&y| state.value(y)).collect();
    GridFunction::new(grid, values, Some((state.s, state.n, state.norm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn make_state_examples() {
        let s1 = make_state(0.75, 1).unwrap();
        assert_eq!(s1.poly().coeffs(), &[1.0]);
        let s2 = make_state(0.75, 2).unwrap();
        assert_abs_diff_eq!(s2.poly().coeffs()[1], -1.8, epsilon = 1e-15);
        let s3 = make_state(4.0 / 3.0, 3).unwrap();
        assert_eq!(s3.poly().degree(), 2);
        assert!(make_state(0.0, 1).is_err());
        assert!(make_state(0.5, 0).is_err());
    }

    #[test]
    fn endpoint_values() {
        let st = make_state(0.75, 3).unwrap();
        assert_eq!(eval_psi(&st, 1.0).unwrap(), 0.0);
        assert_eq!(eval_psi(&st, 0.0).unwrap(), 0.0);
        assert!(eval_psi(&st, 1.5).is_err());
        assert!(eval_psi(&st, -0.1).is_err());
    }

    #[test]
    fn unnormalized_midpoint() {
        let st = FamilyState::with_norm(0.75, 1, 1.0).unwrap();
        assert_abs_diff_eq!(st.value(0.5), 0.5f64.powf(0.75) * 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(st.value(0.5), 0.29730177875068026, epsilon = 1e-12);
    }

    #[test]
    fn quadrature_norm_examples() {
        assert_abs_diff_eq!(
            normalize_quadrature(0.0, 1).unwrap(),
            3f64.sqrt(),
            epsilon = 1e-12
        );
        let n1 = normalize_quadrature(0.75, 1).unwrap();
        assert_abs_diff_eq!(n1, 315f64.sqrt() / 4.0, epsilon = 1e-12);
        let n2 = normalize_quadrature(0.75, 2).unwrap();
        let tab = tabulated_norm(2).unwrap().norm_at(0.75);
        assert!((n2 - tab).abs() < 1e-10 * tab);
    }

    #[test]
    fn small_s_uses_substitution() {
        for &s in &[0.01, 0.1, 0.2] {
            for n in 1..=4 {
                let q = normalize_quadrature(s, n).unwrap();
                let e = normalize_symbolic(n).unwrap().norm_at(s);
                assert!((q - e).abs() < 1e-10 * e, "s={s} n={n}: {q} vs {e}");
            }
        }
    }

    #[test]
    fn symbolic_n1() {
        let sym = normalize_symbolic(1).unwrap();
        // 1/N^2 = 2 / ((2s+1)(2s+2)(2s+3))
        let den =
            &(&Poly::from_ints(&[1, 2]) * &Poly::from_ints(&[2, 2])) * &Poly::from_ints(&[3, 2]);
        let expect = RationalFunctionInS::new(Poly::from_ints(&[2]), den).unwrap();
        assert_eq!(sym.inverse_square, expect);
        assert_eq!(
            sym.norm_squared(),
            RationalFunctionInS::from_poly(Poly::from_ints(&[3, 11, 12, 4]))
        );
    }

    #[test]
    fn symbolic_matches_tabulated() {
        for n in 1..=4 {
            assert_eq!(matches_tabulated(n).unwrap(), Some(true), "n = {n}");
        }
        assert_eq!(matches_tabulated(5).unwrap(), None);
    }

    #[test]
    fn symbolic_capacity() {
        assert!(matches!(normalize_symbolic(13), Err(Error::Capacity(_))));
        assert!(normalize_symbolic_with_limit(13, 13).is_ok());
        assert_eq!(normalize_symbolic(0), Err(Error::ZeroLevel));
    }

    #[test]
    fn exact_value_at_rational_s() {
        let sym = normalize_symbolic(1).unwrap();
        // N_1^2(3/4) = 315/16
        assert_eq!(sym.norm_squared_at(&rat(3, 4)).unwrap(), rat(315, 16));
    }

    #[test]
    fn radial_mapping() {
        let st = make_state(0.75, 2).unwrap();
        assert_eq!(eval_radial(&st, 0.0, 2.0).unwrap(), 0.0);
        assert_eq!(eval_radial(&st, 1e4, 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            eval_radial(&st, 2.0, 2.0).unwrap(),
            eval_psi(&st, (-1.0f64).exp()).unwrap(),
            epsilon = 1e-15
        );
        assert!(eval_radial(&st, 1.0, 0.0).is_err());
    }

    #[test]
    fn analytic_derivatives_match_expr() {
        let st = make_state(1.3, 4).unwrap();
        let e = st.expr();
        let d1 = e.derivative();
        let d2 = d1.derivative();
        for &y in &[0.1, 0.35, 0.8] {
            assert_abs_diff_eq!(e.eval(y), st.value(y), epsilon = 1e-12);
            assert_abs_diff_eq!(d1.eval(y), st.derivative(y), epsilon = 1e-10);
            assert_abs_diff_eq!(d2.eval(y), st.second_derivative(y), epsilon = 1e-9);
        }
    }

    #[test]
    fn grids() {
        let g = GridSpec::Closed { points: 5 }.points().unwrap();
        assert_eq!(g, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let g = GridSpec::Interior { points: 3 }.points().unwrap();
        assert_eq!(g, vec![0.25, 0.5, 0.75]);
        let g = GridSpec::Chebyshev { points: 1000 }.points().unwrap();
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g[0] > 0.0 && g[999] < 1.0);
        assert!(GridSpec::Closed { points: 1 }.points().is_err());
        assert!(GridFunction::new(vec![0.5, 0.4], vec![1.0, 1.0], None).is_err());
        assert!(GridFunction::new(vec![0.5], vec![f64::NAN], None).is_err());
    }

    #[test]
    fn sampling() {
        let st = make_state(0.75, 1).unwrap();
        let g = sample(&st, &GridSpec::Closed { points: 3 }).unwrap();
        assert_eq!(g.values()[0], 0.0);
        assert_eq!(g.values()[2], 0.0);
        assert_eq!(g.values()[1], eval_psi(&st, 0.5).unwrap());
        let g = sample(&st, &GridSpec::Chebyshev { points: 1000 }).unwrap();
        assert!(g.values().iter().all(|v| v.is_finite()));
    }

    #[test]
    fn csv_round_trip() {
        let st = make_state(0.75, 3).unwrap();
        let g = sample(&st, &GridSpec::Closed { points: 11 }).unwrap();
        let csv = g.to_csv();
        assert!(csv.lines().nth(1) == Some("y,x,psi"));
        let back = GridFunction::from_csv(&csv).unwrap();
        assert_eq!(back, g);
        assert!(GridFunction::from_csv("a,b\n").is_err());
    }
}
