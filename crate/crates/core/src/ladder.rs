//! Raising and lowering operators on the fixed-`s` family and the
//! commutation relations they close.
//!
//! Both operators are first order, `L = k(n) [± y(1-y) d/dy + m_n(y)]`, with
//! coefficients depending on the level `n` of the function they act on.
//! Once the `1/(1-y)` inside the brackets cancels against the `(1-y)`
//! prefactor, `m_n` is a polynomial, so the operators map `y^s P(y)` to
//! `y^s Q(y)` exactly. Composition is carried out on that representation,
//! re-reading `n` after each step.
//!
//! The raising operator in the form often quoted,
//! `[y(1-y) d/dy + y - s(1-y) + (1-y)(2s+n+1)((n+1)/((1-y)(2s+2n+1)) - 1)]`,
//! does not map `psi_n` onto `psi_{n+1}`. Rearranging the derivative
//! decomposition `d psi_n/dy = A psi_n + B (N_n/N_{n+1}) psi_{n+1}` gives the
//! same bracket with the sign of the last term flipped; that is
//! [`RaiseForm::Consistent`], the default. The quoted form is kept as
//! [`RaiseForm::FlippedSign`] so the discrepancy can be reported.
//!
//! `L_- psi_1` is defined as the zero function (lowest-weight convention);
//! the lowering operator itself divides by `n - 1`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbolic::int;
use crate::wavefunction::{
    make_state, normalize_symbolic, poly_mul, FamilyState, GridFunction, PowerPoly,
    DEFAULT_SYMBOLIC_MAX,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum RaiseForm {
    #[default]
    Consistent,
    FlippedSign,
}

/// A function `y^s P(y)` treated as sitting at level `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelFunction {
    pub s: f64,
    pub n: u32,
    pub expr: PowerPoly,
}

impl LevelFunction {
    pub fn from_state(state: &FamilyState) -> Self {
        LevelFunction {
            s: state.s(),
            n: state.n(),
            expr: state.expr(),
        }
    }

    pub fn eval(&self, y: f64) -> f64 {
        self.expr.eval(y)
    }

    pub fn is_zero(&self) -> bool {
        self.expr.coeffs.iter().all(|c| *c == 0.0)
    }

    fn zero(s: f64, n: u32) -> Self {
        LevelFunction {
            s,
            n,
            expr: PowerPoly::new(s, vec![0.0]),
        }
    }

    pub fn sub(&self, other: &LevelFunction) -> LevelFunction {
        LevelFunction {
            s: self.s,
            n: self.n,
            expr: self.expr.add(&other.expr.scale(-1.0)),
        }
    }
}

/// `sign * y(1-y) f' + m(y) f`, all scaled by `factor`.
fn first_order(f: &PowerPoly, sign: f64, m: &[f64], factor: f64) -> PowerPoly {
    // y (1-y) * y^(e-1) Q = y^e (1-y) Q
    let d = f.derivative();
    let drift = PowerPoly::new(f.exponent, poly_mul(&d.coeffs, &[sign, -sign]));
    drift.add(&f.mul_poly(m)).scale(factor)
}

/// Polynomial part and overall factor of the raising operator at level `n`.
pub fn raise_coefficients(s: f64, n: u32, form: RaiseForm) -> (Vec<f64>, f64) {
    let nf = n as f64;
    let p = 2.0 * s + nf + 1.0;
    let q = 2.0 * s + 2.0 * nf + 1.0;
    let sign = match form {
        RaiseForm::Consistent => -1.0,
        RaiseForm::FlippedSign => 1.0,
    };
    // y - s(1-y) + sign * [(2s+n+1)(n+1)/(2s+2n+1) - (2s+n+1)(1-y)]
    let c0 = -s + sign * (p * (nf + 1.0) / q - p);
    let c1 = 1.0 + s + sign * p;
    (vec![c0, c1], q / p)
}

/// Polynomial part and overall factor of the lowering operator at level `n >= 2`.
pub fn lower_coefficients(s: f64, n: u32) -> (Vec<f64>, f64) {
    let nf = n as f64;
    let r = 2.0 * s + 2.0 * nf - 1.0;
    // -y + s(1-y) + (n-1)(1-y) - (n-1)(2s+n-1)/(2s+2n-1)
    let c0 = s + (nf - 1.0) - (nf - 1.0) * (2.0 * s + nf - 1.0) / r;
    let c1 = -1.0 - s - (nf - 1.0);
    (vec![c0, c1], r / (nf - 1.0))
}

pub fn raise(f: &LevelFunction) -> LevelFunction {
    raise_with(f, RaiseForm::Consistent)
}

pub fn raise_with(f: &LevelFunction, form: RaiseForm) -> LevelFunction {
    let (m, k) = raise_coefficients(f.s, f.n, form);
    LevelFunction {
        s: f.s,
        n: f.n + 1,
        expr: first_order(&f.expr, 1.0, &m, k),
    }
}

/// Lowering; `n = 1` is an error.
pub fn try_lower(f: &LevelFunction) -> Result<LevelFunction> {
    if f.n < 2 {
        return Err(Error::LowestWeight);
    }
    let (m, k) = lower_coefficients(f.s, f.n);
    Ok(LevelFunction {
        s: f.s,
        n: f.n - 1,
        expr: first_order(&f.expr, -1.0, &m, k),
    })
}

/// Lowering with the lowest-weight convention `L_- psi_1 = 0`.
pub fn lower(f: &LevelFunction) -> LevelFunction {
    try_lower(f).unwrap_or_else(|_| LevelFunction::zero(f.s, 0))
}

fn check_interior(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Grid("empty grid".into()));
    }
    match grid.iter().find(|y| !(**y > 0.0 && **y < 1.0)) {
        Some(y) => Err(Error::Domain(format!(
            "ladder operators need interior points, got y = {y}"
        ))),
        None => Ok(()),
    }
}

fn on_grid(f: &LevelFunction, grid: &[f64]) -> Result<GridFunction> {
    let values = grid.iter().map(|&y| f.eval(y)).collect();
    GridFunction::new(grid.to_vec(), values, None)
}

/// `L_+ psi_n` sampled on an interior grid.
pub fn apply_raise(state: &FamilyState, grid: &[f64]) -> Result<GridFunction> {
    check_interior(grid)?;
    on_grid(&raise(&LevelFunction::from_state(state)), grid)
}

/// `L_- psi_n` sampled on an interior grid; the zero function for `n = 1`.
pub fn apply_lower(state: &FamilyState, grid: &[f64]) -> Result<GridFunction> {
    check_interior(grid)?;
    on_grid(&lower(&LevelFunction::from_state(state)), grid)
}

/// Normalization constants `N_n` at one `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormTable {
    pub s: f64,
    norms: BTreeMap<u32, f64>,
}

impl NormTable {
    pub fn new(s: f64, norms: BTreeMap<u32, f64>) -> Self {
        NormTable { s, norms }
    }

    /// Quadrature norms for `1..=n_max`.
    pub fn quadrature(s: f64, n_max: u32) -> Result<Self> {
        let norms = (1..=n_max)
            .map(|n| Ok((n, make_state(s, n)?.norm())))
            .collect::<Result<_>>()?;
        Ok(NormTable { s, norms })
    }

    /// Exact norms evaluated at `s`, for `1..=n_max`.
    pub fn symbolic(s: f64, n_max: u32) -> Result<Self> {
        if n_max > DEFAULT_SYMBOLIC_MAX {
            return Err(Error::Capacity(format!(
                "exact norms limited to n <= {DEFAULT_SYMBOLIC_MAX}"
            )));
        }
        let norms = (1..=n_max)
            .map(|n| Ok((n, normalize_symbolic(n)?.norm_at(s))))
            .collect::<Result<_>>()?;
        Ok(NormTable { s, norms })
    }

    pub fn get(&self, n: u32) -> Result<f64> {
        self.norms
            .get(&n)
            .copied()
            .ok_or_else(|| Error::Capacity(format!("no normalization constant for n = {n}")))
    }

    pub fn state(&self, n: u32) -> Result<FamilyState> {
        FamilyState::with_norm(self.s, n, self.get(n)?)
    }

    pub fn max_n(&self) -> u32 {
        self.norms.keys().next_back().copied().unwrap_or(0)
    }

    /// Multiplies `N_n` by `factor`.
    pub fn rescaled(&self, n: u32, factor: f64) -> NormTable {
        let mut t = self.clone();
        if let Some(v) = t.norms.get_mut(&n) {
            *v *= factor;
        }
        t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LadderCoeffs {
    pub l_plus: f64,
    /// Absent at `n = 1`.
    pub l_minus: Option<f64>,
    pub l_zero: f64,
    pub s: f64,
    pub n: u32,
    pub norm_prev: Option<f64>,
    pub norm: f64,
    pub norm_next: f64,
}

/// `l_+ = (2s+n) N_n / N_{n+1}`, `l_- = n N_n / N_{n-1}`, `l_0 = n + s`.
pub fn ladder_coeffs(s: f64, n: u32, norms: &NormTable) -> Result<LadderCoeffs> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let nf = n as f64;
    let norm = norms.get(n)?;
    let norm_next = norms.get(n + 1)?;
    let norm_prev = if n > 1 { Some(norms.get(n - 1)?) } else { None };
    Ok(LadderCoeffs {
        l_plus: (2.0 * s + nf) * norm / norm_next,
        l_minus: norm_prev.map(|p| nf * norm / p),
        l_zero: nf + s,
        s,
        n,
        norm_prev,
        norm,
        norm_next,
    })
}

fn relative_gap(got: &GridFunction, want: &[f64]) -> f64 {
    let peak = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let worst = got
        .values()
        .iter()
        .zip(want)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    worst / peak
}

/// `max |L_+ psi_n - l_+ psi_{n+1}| / max |l_+ psi_{n+1}|`.
pub fn raise_residual(n: u32, norms: &NormTable, grid: &[f64], form: RaiseForm) -> Result<f64> {
    check_interior(grid)?;
    let st = norms.state(n)?;
    let next = norms.state(n + 1)?;
    let c = ladder_coeffs(norms.s, n, norms)?;
    let got = on_grid(&raise_with(&LevelFunction::from_state(&st), form), grid)?;
    let want: Vec<f64> = grid.iter().map(|&y| c.l_plus * next.value(y)).collect();
    Ok(relative_gap(&got, &want))
}

/// `max |L_- psi_n - l_- psi_{n-1}| / max |l_- psi_{n-1}|`, `n >= 2`.
pub fn lower_residual(n: u32, norms: &NormTable, grid: &[f64]) -> Result<f64> {
    if n < 2 {
        return Err(Error::LowestWeight);
    }
    let st = norms.state(n)?;
    let prev = norms.state(n - 1)?;
    let c = ladder_coeffs(norms.s, n, norms)?;
    let got = apply_lower(&st, grid)?;
    let l_minus = c.l_minus.expect("n >= 2");
    let want: Vec<f64> = grid.iter().map(|&y| l_minus * prev.value(y)).collect();
    Ok(relative_gap(&got, &want))
}

/// Right-hand side of `d psi_n/dy = A psi_n + B (N_n/N_{n+1}) psi_{n+1}`
/// compared with the analytic derivative, relative to `max |psi_n'|`.
pub fn reconstruction_residual(n: u32, norms: &NormTable, grid: &[f64]) -> Result<f64> {
    check_interior(grid)?;
    let s = norms.s;
    let st = norms.state(n)?;
    let next = norms.state(n + 1)?;
    let ratio = st.norm() / next.norm();
    let nf = n as f64;
    let p = 2.0 * s + nf + 1.0;
    let q = 2.0 * s + 2.0 * nf + 1.0;
    let mut worst: f64 = 0.0;
    let mut peak: f64 = 0.0;
    for &y in grid {
        let a = s / y - 1.0 / (1.0 - y) + p / y * ((nf + 1.0) / ((1.0 - y) * q) - 1.0);
        let b = p * (2.0 * s + nf) / (y * (1.0 - y) * q);
        let rhs = a * st.value(y) + b * ratio * next.value(y);
        let d = st.derivative(y);
        worst = worst.max((d - rhs).abs());
        peak = peak.max(d.abs());
    }
    Ok(worst / peak)
}

/// Scalar fitted to `[L_-, L_+] psi_n` over the grid, and the relative
/// residual of the fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommutatorFit {
    pub eigenvalue: f64,
    pub fit_residual: f64,
}

/// `([L_-, L_+] psi_n) / psi_n` from composed application on the grid.
pub fn commutator_fit(state: &FamilyState, grid: &[f64]) -> Result<CommutatorFit> {
    check_interior(grid)?;
    let f = LevelFunction::from_state(state);
    let up_down = lower(&raise(&f));
    let down_up = raise(&lower(&f));
    // subtract coefficients first; most of the two products cancels
    let comm_fn = if down_up.is_zero() {
        up_down
    } else {
        up_down.sub(&down_up)
    };
    let comm: Vec<f64> = grid.iter().map(|&y| comm_fn.eval(y)).collect();
    let psi: Vec<f64> = grid.iter().map(|&y| state.value(y)).collect();
    let num: f64 = comm.iter().zip(&psi).map(|(c, p)| c * p).sum();
    let den: f64 = psi.iter().map(|p| p * p).sum();
    let lambda = num / den;
    let peak = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let worst = comm
        .iter()
        .zip(&psi)
        .fold(0.0f64, |m, (c, p)| m.max((c - lambda * p).abs()));
    Ok(CommutatorFit {
        eigenvalue: lambda,
        fit_residual: worst / (lambda.abs() * peak),
    })
}

/// `[L_-, L_+] psi_n = lambda psi_n` by composed grid application, `n >= 2`.
pub fn commutator_eigenvalue(s: f64, n: u32, grid: &[f64]) -> Result<f64> {
    if n < 2 {
        return Err(Error::LowestWeight);
    }
    let st = make_state(s, n)?;
    Ok(commutator_fit(&st, grid)?.eigenvalue)
}

/// Commutator from the eigen-factors: `l_+(n) l_-(n+1) - l_-(n) l_+(n-1)`.
pub fn commutator_from_coeffs(s: f64, n: u32, norms: &NormTable) -> Result<f64> {
    if n < 2 {
        return Err(Error::LowestWeight);
    }
    let here = ladder_coeffs(s, n, norms)?;
    let above = ladder_coeffs(s, n + 1, norms)?;
    let below = ladder_coeffs(s, n - 1, norms)?;
    Ok(here.l_plus * above.l_minus.unwrap() - here.l_minus.unwrap() * below.l_plus)
}

/// Exact eigen-factor `coeff * prod N_k^{e_k}` with the norms kept symbolic.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfactor {
    pub coeff: BigRational,
    pub norms: BTreeMap<u32, i32>,
}

impl Eigenfactor {
    fn ratio(coeff: BigRational, num: u32, den: u32) -> Self {
        let mut norms = BTreeMap::new();
        *norms.entry(num).or_insert(0) += 1;
        *norms.entry(den).or_insert(0) -= 1;
        norms.retain(|_, e| *e != 0);
        Eigenfactor { coeff, norms }
    }

    pub fn l_plus(s: &BigRational, n: u32) -> Self {
        Eigenfactor::ratio(int(2) * s + int(n as i64), n, n + 1)
    }

    pub fn l_minus(n: u32) -> Self {
        Eigenfactor::ratio(int(n as i64), n, n - 1)
    }

    pub fn compose(&self, other: &Eigenfactor) -> Eigenfactor {
        let mut norms = self.norms.clone();
        for (k, e) in &other.norms {
            *norms.entry(*k).or_insert(0) += e;
        }
        norms.retain(|_, e| *e != 0);
        Eigenfactor {
            coeff: &self.coeff * &other.coeff,
            norms,
        }
    }

    pub fn is_norm_free(&self) -> bool {
        self.norms.is_empty()
    }
}

/// Exact `[L_-, L_+]` eigenvalue at rational `s`, `n >= 2`. Each composed
/// product must be free of normalization constants.
pub fn commutator_exact(s: &BigRational, n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::LowestWeight);
    }
    let up_down = Eigenfactor::l_plus(s, n).compose(&Eigenfactor::l_minus(n + 1));
    let down_up = Eigenfactor::l_minus(n).compose(&Eigenfactor::l_plus(s, n - 1));
    if !(up_down.is_norm_free() && down_up.is_norm_free()) {
        return Err(Error::Domain(
            "normalization constants failed to cancel in composition".into(),
        ));
    }
    Ok(up_down.coeff - down_up.coeff)
}

/// Per-level outcome of the commutation-relation check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Su2Entry {
    pub n: u32,
    /// `[L_-, L_+]` from eigen-factors minus `2 l_0`.
    pub commutator_residual: f64,
    /// `(l_0(n+1) - l_0(n)) l_+ - l_+`.
    pub raise_residual: f64,
    /// `(l_0(n-1) - l_0(n)) l_- + l_-`.
    pub lower_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Su2Report {
    pub s: f64,
    pub tolerance: f64,
    pub entries: Vec<Su2Entry>,
}

impl Su2Report {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

pub fn su2_relations_check(
    s: f64,
    n_range: std::ops::RangeInclusive<u32>,
    norms: &NormTable,
    tolerance: f64,
) -> Result<Su2Report> {
    let mut entries = Vec::new();
    for n in n_range {
        if n < 2 {
            return Err(Error::LowestWeight);
        }
        let here = ladder_coeffs(s, n, norms)?;
        let comm = commutator_from_coeffs(s, n, norms)?;
        let commutator_residual = (comm - 2.0 * here.l_zero) / (2.0 * here.l_zero);
        let l0 = |k: u32| k as f64 + s;
        let raise_residual = ((l0(n + 1) - l0(n)) * here.l_plus - here.l_plus) / here.l_plus;
        let lm = here.l_minus.unwrap();
        let lower_residual = ((l0(n - 1) - l0(n)) * lm + lm) / lm;
        let pass = [commutator_residual, raise_residual, lower_residual]
            .iter()
            .all(|r| r.abs() < tolerance);
        entries.push(Su2Entry {
            n,
            commutator_residual,
            raise_residual,
            lower_residual,
            pass,
        });
    }
    Ok(Su2Report {
        s,
        tolerance,
        entries,
    })
}

/// Exact `[L_0, L_+] = L_+` and `[L_0, L_-] = -L_-` eigenvalue ratios at rational `s`.
pub fn l_zero_ratios_exact(s: &BigRational, n: u32) -> (BigRational, BigRational) {
    let l0 = |k: u32| int(k as i64) + s;
    let plus = l0(n + 1) - l0(n);
    let minus = if n >= 2 {
        l0(n - 1) - l0(n)
    } else {
        -BigRational::one()
    };
    debug_assert!(!plus.is_zero());
    (plus, minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rat;
    use crate::wavefunction::GridSpec;
    use rand::{Rng, SeedableRng};

    fn grid() -> Vec<f64> {
        GridSpec::Interior { points: 200 }.points().unwrap()
    }

    #[test]
    fn raise_maps_to_next_level() {
        for &(s, n) in &[(0.75, 1), (2.0, 3)] {
            let norms = NormTable::quadrature(s, n + 1).unwrap();
            let r = raise_residual(n, &norms, &grid(), RaiseForm::Consistent).unwrap();
            assert!(r < 1e-9, "s={s} n={n}: {r}");
        }
    }

    #[test]
    fn flipped_raise_fails() {
        let norms = NormTable::quadrature(0.75, 3).unwrap();
        for n in 1..=2 {
            let r = raise_residual(n, &norms, &grid(), RaiseForm::FlippedSign).unwrap();
            assert!(r > 0.1, "n={n}: {r}");
        }
    }

    #[test]
    fn lower_maps_to_previous_level() {
        for &(s, n) in &[(0.75, 2), (1.5, 4)] {
            let norms = NormTable::quadrature(s, n + 1).unwrap();
            let r = lower_residual(n, &norms, &grid()).unwrap();
            assert!(r < 1e-9, "s={s} n={n}: {r}");
        }
    }

    #[test]
    fn lowest_weight_convention() {
        let st = make_state(0.6, 1).unwrap();
        let g = apply_lower(&st, &grid()).unwrap();
        assert!(g.values().iter().all(|v| *v == 0.0));
        assert_eq!(
            try_lower(&LevelFunction::from_state(&st)),
            Err(Error::LowestWeight)
        );
    }

    #[test]
    fn endpoints_rejected() {
        let st = make_state(0.6, 2).unwrap();
        assert!(apply_raise(&st, &[0.0, 0.5]).is_err());
        assert!(apply_lower(&st, &[0.5, 1.0]).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let norms = NormTable::quadrature(0.75, 3).unwrap();
        let c1 = ladder_coeffs(0.75, 1, &norms).unwrap();
        assert_eq!(c1.l_zero, 1.75);
        assert_eq!(c1.l_minus, None);
        let c2 = ladder_coeffs(0.75, 2, &norms).unwrap();
        let (n1, n2, n3) = (
            norms.get(1).unwrap(),
            norms.get(2).unwrap(),
            norms.get(3).unwrap(),
        );
        assert_eq!(c2.l_plus, 3.5 * n2 / n3);
        assert_eq!(c2.l_minus, Some(2.0 * n2 / n1));
        assert!(matches!(
            ladder_coeffs(0.75, 3, &norms),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn eq28_coefficient_of_next_state() {
        // Composing the decomposition of F_n' with the prefactor derivative
        // reproduces B (N_n / N_{n+1}) psi_{n+1}.
        for &s in &[0.5, 0.75, 4.0 / 3.0, 2.0] {
            let norms = NormTable::symbolic(s, 7).unwrap();
            for n in 1..=6 {
                let r = reconstruction_residual(n, &norms, &grid()).unwrap();
                assert!(r < 1e-10, "s={s} n={n}: {r}");
            }
        }
    }

    #[test]
    fn commutator_values() {
        let g = grid();
        let v = commutator_eigenvalue(0.75, 2, &g).unwrap();
        assert!((v - 5.5).abs() < 1e-8, "{v}");
        assert_eq!(commutator_exact(&rat(4, 3), 3).unwrap(), rat(26, 3));
        assert_eq!(commutator_exact(&rat(3, 4), 2).unwrap(), rat(11, 2));
        assert!(commutator_eigenvalue(0.75, 1, &g).is_err());
    }

    #[test]
    fn commutator_is_norm_independent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let s = 0.75;
        let base = NormTable::symbolic(s, 8).unwrap();
        for n in 2..=6 {
            let mut t = base.clone();
            for k in 1..=8 {
                t = t.rescaled(k, rng.gen_range(0.1..10.0));
            }
            let c = commutator_from_coeffs(s, n, &t).unwrap();
            let want = 2.0 * (n as f64 + s);
            assert!((c - want).abs() < 1e-12 * want, "n={n}: {c}");
        }
    }

    #[test]
    fn su2_report() {
        let norms = NormTable::symbolic(0.75, 8).unwrap();
        let rep = su2_relations_check(0.75, 2..=6, &norms, 1e-10).unwrap();
        assert!(rep.pass(), "{rep:?}");
        let norms = NormTable::symbolic(0.5, 5).unwrap();
        let rep = su2_relations_check(0.5, 3..=3, &norms, 1e-10).unwrap();
        assert!(rep.entries[0].lower_residual.abs() < 1e-15);
        let (plus, minus) = l_zero_ratios_exact(&rat(1, 2), 3);
        assert_eq!(plus, int(1));
        assert_eq!(minus, int(-1));
    }
}
