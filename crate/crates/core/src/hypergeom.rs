//! Terminating Gauss hypergeometric polynomials `2F1(a, -m; c; y)` and the
//! contiguous relations connecting neighbouring parameter triples.
//!
//! Bound-state usage only ever needs the polynomial case, so evaluation is
//! direct summation. The one non-terminating neighbour that appears in the
//! relations (`b + 1 = 1` when `m = 0`) is summed with an explicit tail bound
//! and refused for `|y| > 0.95`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `|y|` at which a non-terminating series is summed.
pub const SERIES_RADIUS: f64 = 0.95;

const TAIL_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 20_000;

/// Parameters `(a, b = -m, c)` of a terminating series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub m: u32,
    pub c: f64,
}

impl HypParams {
    /// Validates that `c + k != 0` for every `k < m`.
    pub fn new(a: f64, m: u32, c: f64) -> Result<Self> {
        if !a.is_finite() || !c.is_finite() {
            return Err(Error::ParameterDomain {
                what: format!("non-finite parameter a = {a}, c = {c}"),
                term: 0,
            });
        }
        for k in 0..m as usize {
            if c + k as f64 == 0.0 {
                return Err(Error::ParameterDomain {
                    what: format!("c = {c} gives a zero denominator (c + {k} = 0)"),
                    term: k + 1,
                });
            }
        }
        Ok(HypParams { a, m, c })
    }

    /// The eigenfunction family member `(2s+1+n, 1-n, 2s+1)`.
    pub fn family(s: f64, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLevel);
        }
        HypParams::new(2.0 * s + 1.0 + n as f64, n - 1, 2.0 * s + 1.0)
    }

    pub fn b(&self) -> f64 {
        -(self.m as f64)
    }

    pub fn gauss(&self) -> GaussParams {
        GaussParams {
            a: self.a,
            b: self.b(),
            c: self.c,
        }
    }
}

/// General real parameter triple, used for the neighbours in contiguous relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GaussParams {
    /// Returns the terminating encoding when `b` is a nonpositive integer.
    pub fn terminating(&self) -> Option<HypParams> {
        nonpositive_integer(self.b).and_then(|m| HypParams::new(self.a, m, self.c).ok())
    }

    pub fn eval(&self, y: f64) -> Result<f64> {
        hyp2f1(self.a, self.b, self.c, y).map(|s| s.value)
    }
}

fn nonpositive_integer(x: f64) -> Option<u32> {
    if x <= 0.0 && x.fract() == 0.0 && x > -(u32::MAX as f64) {
        Some((-x) as u32)
    } else {
        None
    }
}

/// Coefficients `c_0..c_m` of `2F1(a, -m; c; y)` in powers of `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct TerminatingSeries {
    params: HypParams,
    coeffs: Vec<f64>,
}

impl TerminatingSeries {
    pub fn params(&self) -> HypParams {
        self.params
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, y: f64) -> f64 {
        horner(&self.coeffs, y)
    }

    /// Sum of `|c_k y^k|`, the magnitude scale of an evaluation.
    pub fn abs_sum(&self, y: f64) -> f64 {
        let ay = y.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * ay + c.abs())
    }

    /// Coefficient-wise derivative polynomial.
    pub fn derivative_coeffs(&self) -> Vec<f64> {
        poly_derivative(&self.coeffs)
    }
}

pub(crate) fn horner(coeffs: &[f64], y: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * y + c)
}

pub(crate) fn poly_derivative(coeffs: &[f64]) -> Vec<f64> {
    if coeffs.len() <= 1 {
        return vec![0.0];
    }
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect()
}

/// Builds `2F1(a, -m; c; .)` via the Pochhammer ratio
/// `c_{k+1}/c_k = (a+k)(k-m) / ((c+k)(k+1))`.
pub fn build_terminating(a: f64, m: u32, c: f64) -> Result<TerminatingSeries> {
    let params = HypParams::new(a, m, c)?;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut term = 1.0;
    coeffs.push(term);
    for k in 0..m as usize {
        let kf = k as f64;
        term *= (a + kf) * (kf - m as f64) / ((c + kf) * (kf + 1.0));
        coeffs.push(term);
    }
    Ok(TerminatingSeries { params, coeffs })
}

pub fn eval_2f1(series: &TerminatingSeries, y: f64) -> f64 {
    series.eval(y)
}

/// Exact-rational counterpart of [`build_terminating`].
pub fn build_terminating_exact(
    a: &BigRational,
    m: u32,
    c: &BigRational,
) -> Result<Vec<BigRational>> {
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for k in 0..m as usize {
        let kq = BigRational::from_integer((k as i64).into());
        let den = (c + &kq) * (&kq + BigRational::one());
        if den.is_zero() {
            return Err(Error::ParameterDomain {
                what: format!("c = {c} gives a zero denominator (c + {k} = 0)"),
                term: k + 1,
            });
        }
        let mq = BigRational::from_integer((m as i64).into());
        term = term * (a + &kq) * (&kq - mq) / den;
        coeffs.push(term.clone());
    }
    Ok(coeffs)
}

/// Value of a (possibly non-terminating) series with the magnitude scale
/// `sum |t_k|` of its terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub abs_sum: f64,
}

/// Direct summation of `2F1(a, b; c; y)`.
///
/// Terminates exactly when `a` or `b` is a nonpositive integer; otherwise
/// sums until the geometric tail bound drops below `1e-16` of the
/// magnitude sum, for `|y| <= 0.95` only.
pub fn hyp2f1(a: f64, b: f64, c: f64, y: f64) -> Result<SeriesValue> {
    let degree = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(p), Some(q)) => Some(p.min(q)),
        (Some(p), None) | (None, Some(p)) => Some(p),
        (None, None) => None,
    };
    if degree.is_none() && y.abs() > SERIES_RADIUS {
        return Err(Error::Domain(format!(
            "non-terminating 2F1({a}, {b}; {c}; y) only summed for |y| <= {SERIES_RADIUS}, got y = {y}"
        )));
    }
    let limit = degree.map_or(MAX_TERMS, |d| d as usize);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    let big = a.abs() + b.abs() + c.abs() + 1.0;
    for k in 0..limit {
        let kf = k as f64;
        let den = (c + kf) * (kf + 1.0);
        if den == 0.0 {
            return Err(Error::ParameterDomain {
                what: format!("c = {c} gives a zero denominator (c + {k} = 0)"),
                term: k + 1,
            });
        }
        let ratio = (a + kf) * (b + kf) / den;
        term *= ratio * y;
        sum += term;
        abs_sum += term.abs();
        if degree.is_none() && kf > big {
            let g = (a + kf + 1.0) * (b + kf + 1.0) / ((c + kf + 1.0) * (kf + 2.0));
            let r = y.abs() * g.abs().max(1.0);
            if r < 1.0 && term.abs() * r / (1.0 - r) < TAIL_TOL * abs_sum {
                return Ok(SeriesValue {
                    value: sum,
                    abs_sum,
                });
            }
        }
    }
    if degree.is_none() {
        return Err(Error::NumericalFailure {
            what: format!("2F1({a}, {b}; {c}; {y}) did not converge in {MAX_TERMS} terms"),
            estimate: term.abs(),
        });
    }
    Ok(SeriesValue {
        value: sum,
        abs_sum,
    })
}

/// `d/dy 2F1(a,b;c;y) = (ab/c) 2F1(a+1,b+1;c+1;y)`: returns the scale and
/// the shifted parameters.
pub fn derivative_2f1(params: &HypParams) -> Result<(f64, GaussParams)> {
    if params.c == 0.0 {
        return Err(Error::ParameterDomain {
            what: "c = 0 in derivative scale ab/c".into(),
            term: 0,
        });
    }
    let scale = params.a * params.b() / params.c;
    Ok((
        scale,
        GaussParams {
            a: params.a + 1.0,
            b: params.b() + 1.0,
            c: params.c + 1.0,
        },
    ))
}

fn scaled(residual: f64, scale: f64) -> f64 {
    residual / scale.max(1.0)
}

/// `(a/c) y F(a+1,b+1;c+1) - [F(a,b+1;c) - F(a,b;c)]`, scaled by
/// `max(1, sum of term magnitudes)`.
pub fn shift_residual(params: &HypParams, y: f64) -> Result<f64> {
    let (a, b, c) = (params.a, params.b(), params.c);
    let shifted = hyp2f1(a + 1.0, b + 1.0, c + 1.0, y)?;
    let up_b = hyp2f1(a, b + 1.0, c, y)?;
    let base = hyp2f1(a, b, c, y)?;
    let k = a / c * y;
    let lhs = k * shifted.value;
    let rhs = up_b.value - base.value;
    Ok(scaled(
        lhs - rhs,
        k.abs() * shifted.abs_sum + up_b.abs_sum + base.abs_sum,
    ))
}

/// `(a-b) F - a F(a+1) + b F(b+1)`, scaled.
pub fn ab_raise_residual(params: &HypParams, y: f64) -> Result<f64> {
    ab_raise_relation(params, y, -1.0)
}

/// Variant with `+a F(a+1)`; not an identity.
pub fn ab_raise_residual_wrong_sign(params: &HypParams, y: f64) -> Result<f64> {
    ab_raise_relation(params, y, 1.0)
}

fn ab_raise_relation(params: &HypParams, y: f64, sign_a: f64) -> Result<f64> {
    let (a, b, c) = (params.a, params.b(), params.c);
    let base = hyp2f1(a, b, c, y)?;
    let up_a = hyp2f1(a + 1.0, b, c, y)?;
    let up_b = hyp2f1(a, b + 1.0, c, y)?;
    let r = (a - b) * base.value + sign_a * a * up_a.value + b * up_b.value;
    Ok(scaled(
        r,
        (a - b).abs() * base.abs_sum + a.abs() * up_a.abs_sum + b.abs() * up_b.abs_sum,
    ))
}

/// `(a-b)(1-y) F + (c-a) F(a-1) - (c-b) F(b-1)`, scaled.
pub fn ab_lower_residual(params: &HypParams, y: f64) -> Result<f64> {
    ab_lower_relation(params, y, params.c - params.b())
}

/// Variant with `(c-a)` on both shifted terms; not an identity.
pub fn ab_lower_residual_wrong_coeff(params: &HypParams, y: f64) -> Result<f64> {
    ab_lower_relation(params, y, params.c - params.a)
}

fn ab_lower_relation(params: &HypParams, y: f64, last: f64) -> Result<f64> {
    let (a, b, c) = (params.a, params.b(), params.c);
    let base = hyp2f1(a, b, c, y)?;
    let down_a = hyp2f1(a - 1.0, b, c, y)?;
    let down_b = hyp2f1(a, b - 1.0, c, y)?;
    let w = (a - b) * (1.0 - y);
    let r = w * base.value + (c - a) * down_a.value - last * down_b.value;
    Ok(scaled(
        r,
        w.abs() * base.abs_sum + (c - a).abs() * down_a.abs_sum + last.abs() * down_b.abs_sum,
    ))
}

/// `d/dy F_n = coef_next * F_{n+1} + coef_same * F_n`, where
/// `F_n = 2F1(2s+1+n, 1-n; 2s+1; y)`. Returns `(coef_same, coef_next)`.
pub fn family_derivative_decomposition(n: u32, s: f64, y: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Domain(format!(
            "derivative decomposition needs y in (0, 1), got {y}"
        )));
    }
    let nf = n as f64;
    let p = 2.0 * s + nf + 1.0;
    let q = 2.0 * s + 2.0 * nf + 1.0;
    let coef_next = p * (2.0 * s + nf) / (y * (1.0 - y) * q);
    let coef_same = p / y * ((nf + 1.0) / ((1.0 - y) * q) - 1.0);
    Ok((coef_same, coef_next))
}

/// Scaled residual of the decomposition against the direct polynomial derivative.
pub fn decomposition_residual(n: u32, s: f64, y: f64) -> Result<f64> {
    let (same, next) = family_derivative_decomposition(n, s, y)?;
    let p = HypParams::family(s, n)?;
    let fam = build_terminating(p.a, p.m, p.c)?;
    let p1 = HypParams::family(s, n + 1)?;
    let fam1 = build_terminating(p1.a, p1.m, p1.c)?;
    let deriv = horner(&fam.derivative_coeffs(), y);
    let rhs = next * fam1.eval(y) + same * fam.eval(y);
    let scale = next.abs() * fam1.abs_sum(y) + same.abs() * fam.abs_sum(y);
    Ok(scaled(deriv - rhs, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    // Term-by-term oracle: t_k = (a)_k (b)_k / ((c)_k k!) computed from
    // Pochhammer products rather than the ratio recurrence.
    fn pochhammer(x: f64, k: usize) -> f64 {
        (0..k).map(|j| x + j as f64).product()
    }

    fn oracle_coeffs(a: f64, m: u32, c: f64) -> Vec<f64> {
        (0..=m as usize)
            .map(|k| {
                let fact: f64 = (1..=k).map(|j| j as f64).product();
                pochhammer(a, k) * pochhammer(-(m as f64), k) / (pochhammer(c, k) * fact)
            })
            .collect()
    }

    #[test]
    fn constant_series_for_m_zero() {
        let s = build_terminating(7.0, 0, 3.0).unwrap();
        assert_eq!(s.coeffs(), &[1.0]);
        assert_eq!(eval_2f1(&s, 0.73), 1.0);
    }

    #[test]
    fn linear_series() {
        let s = build_terminating(4.5, 1, 2.5).unwrap();
        assert_eq!(s.coeffs().len(), 2);
        assert_abs_diff_eq!(s.coeffs()[1], -1.8, epsilon = 1e-15);
        assert_abs_diff_eq!(s.eval(0.5), 0.1, epsilon = 1e-15);
        assert_eq!(s.eval(0.0), 1.0);
    }

    #[test]
    fn family_series_ratio_law() {
        let s = 4.0 / 3.0;
        let p = HypParams::family(s, 3).unwrap();
        let series = build_terminating(p.a, p.m, p.c).unwrap();
        assert_eq!(series.degree(), 2);
        assert_eq!(series.coeffs()[0], 1.0);
        let oracle = oracle_coeffs(p.a, p.m, p.c);
        for (k, (c, o)) in series.coeffs().iter().zip(&oracle).enumerate() {
            assert!((c - o).abs() < 1e-13 * o.abs().max(1.0), "k={k}");
        }
        for k in 0..2 {
            let kf = k as f64;
            let ratio = series.coeffs()[k + 1] / series.coeffs()[k];
            let expect = (p.a + kf) * (kf - 2.0) / ((p.c + kf) * (kf + 1.0));
            assert_abs_diff_eq!(ratio, expect, epsilon = 1e-13);
        }
    }

    #[test]
    fn zero_denominator_names_term() {
        let err = build_terminating(1.0, 3, -1.0).unwrap_err();
        assert_eq!(
            err,
            Error::ParameterDomain {
                what: "c = -1 gives a zero denominator (c + 1 = 0)".into(),
                term: 2
            }
        );
        assert!(build_terminating(1.0, 3, 0.0).is_err());
        // c = -3 is never reached for m = 3
        assert!(build_terminating(1.0, 3, -3.0).is_ok());
    }

    #[test]
    fn exact_series_matches_float() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        // s = 3/4, n = 3: a = 2s+1+n = 11/2, c = 2s+1 = 5/2
        let exact = build_terminating_exact(&q(11, 2), 2, &q(5, 2)).unwrap();
        let float = build_terminating(5.5, 2, 2.5).unwrap();
        for (e, f) in exact.iter().zip(float.coeffs()) {
            let ef = num_traits::ToPrimitive::to_f64(e).unwrap();
            assert_abs_diff_eq!(ef, *f, epsilon = 1e-14);
        }
        assert!(build_terminating_exact(&q(1, 1), 2, &q(-1, 1)).is_err());
    }

    #[test]
    fn derivative_scale() {
        let (scale, _) = derivative_2f1(&HypParams::new(2.0, 0, 3.0).unwrap()).unwrap();
        assert_eq!(scale, 0.0);

        let p = HypParams::new(4.5, 1, 2.5).unwrap();
        let (scale, shifted) = derivative_2f1(&p).unwrap();
        assert_abs_diff_eq!(scale, -1.8, epsilon = 1e-15);
        assert_eq!(
            shifted.terminating(),
            Some(HypParams {
                a: 5.5,
                m: 0,
                c: 3.5
            })
        );

        let fam = HypParams::family(0.75, 2).unwrap();
        let (scale, _) = derivative_2f1(&fam).unwrap();
        assert_abs_diff_eq!(scale, (2.5 + 2.0) * (1.0 - 2.0) / 2.5, epsilon = 1e-15);

        let bad = HypParams {
            a: 1.0,
            m: 0,
            c: 0.0,
        };
        assert!(derivative_2f1(&bad).is_err());
    }

    #[test]
    fn contiguous_fixed_points() {
        let p = HypParams::new(3.5, 2, 2.0).unwrap();
        assert!(shift_residual(&p, 0.3).unwrap().abs() < 1e-12);
        assert!(ab_raise_residual(&p, 0.3).unwrap().abs() < 1e-12);
        assert!(ab_lower_residual(&p, 0.3).unwrap().abs() < 1e-12);
        assert_eq!(shift_residual(&p, 0.0).unwrap(), 0.0);
        assert_eq!(ab_raise_residual(&p, 0.0).unwrap(), 0.0);
        assert_eq!(ab_lower_residual(&p, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn variant_relations_are_not_identities() {
        let p = HypParams::new(3.5, 2, 2.0).unwrap();
        assert!(ab_raise_residual_wrong_sign(&p, 0.3).unwrap().abs() > 1e-3);
        assert!(ab_lower_residual_wrong_coeff(&p, 0.3).unwrap().abs() > 1e-3);
    }

    #[test]
    fn non_terminating_neighbour() {
        // 2F1(a, 1; a; y) = 1/(1-y)
        let v = hyp2f1(2.5, 1.0, 2.5, 0.9).unwrap();
        assert_abs_diff_eq!(v.value, 10.0, epsilon = 1e-12);
        assert!(hyp2f1(2.5, 1.0, 2.5, 0.96).is_err());
        let p = HypParams::new(3.0, 0, 1.5).unwrap();
        assert!(shift_residual(&p, 0.8).unwrap().abs() < 1e-12);
        assert!(shift_residual(&p, 0.97).is_err());
    }

    #[test]
    fn decomposition_n1_cancels() {
        // F_1 = 1, so coef_next F_2 + coef_same = 0.
        for &y in &[0.1, 0.4, 0.77] {
            let s = 0.9;
            let (same, next) = family_derivative_decomposition(1, s, y).unwrap();
            let p2 = HypParams::family(s, 2).unwrap();
            let f2 = build_terminating(p2.a, p2.m, p2.c).unwrap().eval(y);
            assert!((next * f2 + same).abs() < 1e-12 * next.abs().max(1.0));
        }
        assert!(family_derivative_decomposition(2, 0.5, 0.0).is_err());
        assert!(family_derivative_decomposition(2, 0.5, 1.0).is_err());
    }

    #[test]
    fn decomposition_matches_derivative_2f1() {
        let (s, n, y) = (0.75, 2, 0.5);
        let p = HypParams::family(s, n).unwrap();
        let (scale, shifted) = derivative_2f1(&p).unwrap();
        let deriv = scale * shifted.eval(y).unwrap();
        let (same, next) = family_derivative_decomposition(n, s, y).unwrap();
        let f = |k| {
            let q = HypParams::family(s, k).unwrap();
            build_terminating(q.a, q.m, q.c).unwrap().eval(y)
        };
        assert!((deriv - (next * f(n + 1) + same * f(n))).abs() < 1e-12);
    }

    fn valid_c() -> impl Strategy<Value = f64> {
        0.5f64..10.0
    }

    proptest! {
        #[test]
        fn termination_and_ratio(a in 0.5f64..10.0, m in 0u32..=6, c in valid_c()) {
            let s = build_terminating(a, m, c).unwrap();
            prop_assert_eq!(s.coeffs().len(), m as usize + 1);
            prop_assert_eq!(s.coeffs()[0], 1.0);
            let oracle = oracle_coeffs(a, m, c);
            for (x, o) in s.coeffs().iter().zip(&oracle) {
                prop_assert!((x - o).abs() <= 1e-12 * o.abs().max(1.0));
            }
        }

        #[test]
        fn derivative_consistency(a in 0.5f64..10.0, m in 0u32..=6, c in valid_c(), y in 0.0f64..1.0) {
            let p = HypParams::new(a, m, c).unwrap();
            let series = build_terminating(a, m, c).unwrap();
            let (scale, shifted) = derivative_2f1(&p).unwrap();
            if m > 0 {
                let d = horner(&series.derivative_coeffs(), y);
                let v = scale * shifted.eval(y).unwrap();
                let mag = scale.abs() * build_terminating(a + 1.0, m - 1, c + 1.0).unwrap().abs_sum(y);
                prop_assert!((d - v).abs() <= 1e-12 * mag.max(1.0));
            } else {
                prop_assert_eq!(scale, 0.0);
            }
        }

        #[test]
        fn contiguous_identities(a in 0.5f64..10.0, m in 0u32..=6, c in valid_c(), y in 0.0f64..1.0) {
            let p = HypParams::new(a, m, c).unwrap();
            prop_assume!(m > 0 || y <= SERIES_RADIUS);
            prop_assert!(shift_residual(&p, y).unwrap().abs() < 1e-12);
            prop_assert!(ab_raise_residual(&p, y).unwrap().abs() < 1e-12);
            prop_assert!(ab_lower_residual(&p, y).unwrap().abs() < 1e-12);
        }

        #[test]
        fn decomposition_identity(n in 1u32..=6, s in 0.01f64..3.0, y in 0.05f64..0.95) {
            prop_assert!(decomposition_residual(n, s, y).unwrap().abs() < 1e-11);
        }
    }
}
